//! Number systems presented by a hold map, and the carry-driven addition
//! that uses nothing but that map.
//!
//! A system of order `n` assigns to every non-zero digit `x` a digit
//! string `hold(x)` representing `x + 1`. That single table determines
//! the whole additive structure: two digits combine through
//! [`NumberSystem::hold_pair`], and digit strings combine by propagating
//! the resulting carries upward position by position.

use std::collections::HashMap;

use num_complex::Complex64;

use crate::digit::{Digit, DigitString};
use crate::error::{Error, Result};

/// A digit alphabet of order `n` together with its hold table.
#[derive(Clone, PartialEq, Debug)]
pub struct NumberSystem {
    name: String,
    n: u32,
    /// `hold[e]` is the digit string of `Root(e) + 1`.
    hold: Vec<DigitString>,
    /// Complex value of `X`, for bounds and rendering only.
    embedding: Option<Complex64>,
}

impl NumberSystem {
    /// Builds a system and checks the structural digit laws: `n + 1` must
    /// be a prime power, hold entries must use exponents below `n`, for
    /// even `n` the digit `-1` must hold the empty string, and the
    /// constant digit of `hold(1)` is forced for `n = 1` (zero) and
    /// `n = 2` (minus one).
    pub fn new(name: &str, n: u32, hold: Vec<DigitString>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSystem("alphabet order must be >= 1".into()));
        }
        if !is_prime_power(n as u64 + 1) {
            return Err(Error::InvalidSystem(format!(
                "residue field size {} is not a prime power",
                n + 1
            )));
        }
        if hold.len() != n as usize {
            return Err(Error::InvalidSystem(format!(
                "hold table has {} entries, expected {}",
                hold.len(),
                n
            )));
        }
        for (e, s) in hold.iter().enumerate() {
            for d in s.digits() {
                if let Digit::Root(k) = d {
                    if *k >= n {
                        return Err(Error::InvalidSystem(format!(
                            "hold({e}) uses exponent {k} outside [0, {n})"
                        )));
                    }
                }
            }
        }
        if n % 2 == 0 && !hold[(n / 2) as usize].is_zero() {
            return Err(Error::InvalidSystem(
                "hold(-1) must be the empty string".into(),
            ));
        }
        if n == 2 && hold[0].get(0) != Digit::Root(1) {
            return Err(Error::InvalidSystem(
                "for n = 2 the constant digit of hold(1) must be -1".into(),
            ));
        }
        if n == 1 && hold[0].get(0) != Digit::Zero {
            return Err(Error::InvalidSystem(
                "for n = 1 the constant digit of hold(1) must be 0".into(),
            ));
        }
        Ok(NumberSystem {
            name: name.to_string(),
            n,
            hold,
            embedding: None,
        })
    }

    pub fn with_embedding(mut self, x: Complex64) -> Self {
        self.embedding = Some(x);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn embedding(&self) -> Option<Complex64> {
        self.embedding
    }

    /// Hold entry for the digit with exponent `e`.
    pub fn hold(&self, e: u32) -> &DigitString {
        &self.hold[(e % self.n) as usize]
    }

    /// All digits of the alphabet, zero first.
    pub fn alphabet(&self) -> impl Iterator<Item = Digit> + '_ {
        std::iter::once(Digit::Zero).chain((0..self.n).map(Digit::Root))
    }

    pub fn nonzero_digits(&self) -> impl Iterator<Item = Digit> + '_ {
        (0..self.n).map(Digit::Root)
    }

    pub fn digit_mul(&self, a: Digit, b: Digit) -> Digit {
        a.mul(b, self.n)
    }

    /// Digitwise product of a string by one digit.
    pub fn scale(&self, d: Digit, s: &DigitString) -> DigitString {
        match d {
            Digit::Zero => DigitString::empty(),
            Digit::Root(_) => DigitString::from_digits(
                s.digits().iter().map(|&x| self.digit_mul(d, x)).collect(),
            ),
        }
    }

    /// Sum of two digits as (constant digit, carry string): the pair map
    /// derived from the hold by compatibility with digit multiplication.
    pub fn hold_pair(&self, x: Digit, y: Digit) -> (Digit, DigitString) {
        match (x, y) {
            (Digit::Zero, d) | (d, Digit::Zero) => (d, DigitString::empty()),
            (Digit::Root(ex), Digit::Root(ey)) => {
                let ratio = (ex + self.n - ey) % self.n;
                let scaled = self.scale(Digit::Root(ey), self.hold(ratio));
                (scaled.get(0), scaled.dropped_low(1))
            }
        }
    }

    /// Addition modulo `X^m` by the per-position pending-digit queue. This
    /// is the default path; it always finishes within `m` positions.
    pub fn add_mod(&self, a: &DigitString, b: &DigitString, m: usize) -> DigitString {
        let mut queues: Vec<Vec<Digit>> = vec![Vec::new(); m];
        for j in 0..m {
            for d in [a.get(j), b.get(j)] {
                if !d.is_zero() {
                    queues[j].push(d);
                }
            }
        }
        let mut out = Vec::with_capacity(m);
        for j in 0..m {
            while queues[j].len() >= 2 {
                let d1 = queues[j].remove(0);
                let d2 = queues[j].remove(0);
                let (h0, carry) = self.hold_pair(d1, d2);
                if !h0.is_zero() {
                    queues[j].insert(0, h0);
                }
                for (i, &c) in carry.digits().iter().enumerate() {
                    let pos = j + 1 + i;
                    if pos < m && !c.is_zero() {
                        queues[pos].push(c);
                    }
                }
            }
            out.push(queues[j].pop().unwrap_or(Digit::Zero));
        }
        DigitString::from_digits(out)
    }

    /// Untruncated addition. Runs the carry process until nothing is
    /// pending. Past the top of both inputs the process is autonomous, so
    /// a repeated pending state decides termination: if only zero digits
    /// were emitted in between, the finite sum is complete; otherwise the
    /// digits recur forever and no finite representation exists.
    pub fn add(&self, a: &DigitString, b: &DigitString, cap: usize) -> Result<DigitString> {
        let input_top = a.len().max(b.len());
        let mut queues: Vec<Vec<Digit>> = vec![Vec::new(); input_top];
        for j in 0..input_top {
            for d in [a.get(j), b.get(j)] {
                if !d.is_zero() {
                    queues[j].push(d);
                }
            }
        }
        let mut out: Vec<Digit> = Vec::new();
        let mut nonzero_emitted: usize = 0;
        let mut seen: HashMap<Vec<Vec<Digit>>, usize> = HashMap::new();
        let mut j = 0;
        while j < queues.len() {
            if j > cap {
                return Err(Error::NonTerminating {
                    cap,
                    periodic: false,
                });
            }
            while queues[j].len() >= 2 {
                let d1 = queues[j].remove(0);
                let d2 = queues[j].remove(0);
                let (h0, carry) = self.hold_pair(d1, d2);
                if !h0.is_zero() {
                    queues[j].insert(0, h0);
                }
                for (i, &c) in carry.digits().iter().enumerate() {
                    let pos = j + 1 + i;
                    if !c.is_zero() {
                        if pos >= queues.len() {
                            queues.resize(pos + 1, Vec::new());
                        }
                        queues[pos].push(c);
                    }
                }
            }
            let emitted = queues[j].pop().unwrap_or(Digit::Zero);
            if !emitted.is_zero() {
                nonzero_emitted += 1;
            }
            out.push(emitted);
            j += 1;
            if j >= input_top {
                let mut key: Vec<Vec<Digit>> = queues[j.min(queues.len())..].to_vec();
                while key.last().is_some_and(|q| q.is_empty()) {
                    key.pop();
                }
                if key.is_empty() {
                    break;
                }
                if let Some(prev_nonzero) = seen.insert(key, nonzero_emitted) {
                    if prev_nonzero == nonzero_emitted {
                        break; // repeating state, all zeros in between: done
                    }
                    return Err(Error::NonTerminating {
                        cap: j,
                        periodic: true,
                    });
                }
            }
        }
        Ok(DigitString::from_digits(out))
    }

    /// Product via shift, scale and fold with [`NumberSystem::add`]:
    /// `a * b = sum_j (a_j . b) X^j`.
    pub fn mul(&self, a: &DigitString, b: &DigitString, cap: usize) -> Result<DigitString> {
        let mut acc = DigitString::empty();
        for (j, &d) in a.digits().iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let term = self.scale(d, b).shifted(j);
            acc = self.add(&acc, &term, cap)?;
        }
        Ok(acc)
    }

    /// Default position cap for untruncated operations.
    pub fn default_cap(&self, a: &DigitString, b: &DigitString) -> usize {
        a.len() + b.len() + 64
    }

    /// The system for `Y` with `Y^m = X`: every hold entry is re-indexed
    /// by `j -> m j`. The embedding becomes the principal `m`-th root.
    pub fn extend_by_root(&self, m: usize) -> NumberSystem {
        assert!(m >= 1);
        if m == 1 {
            return self.clone();
        }
        let hold = self
            .hold
            .iter()
            .map(|s| {
                let mut v = vec![Digit::Zero; s.len().saturating_sub(1) * m + 1];
                if s.is_zero() {
                    v.clear();
                }
                for (j, &d) in s.digits().iter().enumerate() {
                    if !d.is_zero() {
                        v[j * m] = d;
                    }
                }
                DigitString::from_digits(v)
            })
            .collect();
        let embedding = self.embedding.map(|x| {
            let (r, theta) = x.to_polar();
            Complex64::from_polar(r.powf(1.0 / m as f64), theta / m as f64)
        });
        NumberSystem {
            name: format!("{}^(1/{})", self.name, m),
            n: self.n,
            hold,
            embedding,
        }
    }
}

fn is_prime_power(mut q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            while q % p == 0 {
                q /= p;
            }
            return q == 1;
        }
        p += 1;
    }
    true // q itself is prime
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(digits: &[i32]) -> DigitString {
        DigitString::from_digits(
            digits
                .iter()
                .map(|&v| match v {
                    0 => Digit::Zero,
                    1 => Digit::Root(0),
                    -1 => Digit::Root(1),
                    _ => panic!("bad test digit"),
                })
                .collect(),
        )
    }

    fn neg2() -> NumberSystem {
        NumberSystem::new("neg2", 1, vec![ds(&[0, 1, 1])]).unwrap()
    }

    fn bal3() -> NumberSystem {
        NumberSystem::new("bal3", 2, vec![ds(&[-1, 1]), DigitString::empty()]).unwrap()
    }

    /// Remark-style pseudo system with hold -1 + X + X^2.
    fn pseudo() -> NumberSystem {
        NumberSystem::new("pseudo", 2, vec![ds(&[-1, 1, 1]), DigitString::empty()]).unwrap()
    }

    #[test]
    fn construction_laws() {
        assert!(NumberSystem::new("bad-q", 5, vec![DigitString::empty(); 5]).is_err());
        // n = 2 with constant digit 1 violates the forced constant digit
        assert!(NumberSystem::new("bad-const", 2, vec![ds(&[1, 1]), DigitString::empty()]).is_err());
        // n = 2 with non-empty hold(-1)
        assert!(NumberSystem::new("bad-neg", 2, vec![ds(&[-1, 1]), ds(&[1])]).is_err());
        // F_2[X]: hold(1) empty is legal for n = 1
        assert!(NumberSystem::new("f2x", 1, vec![DigitString::empty()]).is_ok());
    }

    #[test]
    fn hold_pair_examples() {
        let b3 = bal3();
        // 1 + 1 = -1 + X over (Z, 3)
        let (h0, carry) = b3.hold_pair(Digit::ONE, Digit::ONE);
        assert_eq!(h0, Digit::Root(1));
        assert_eq!(carry, ds(&[1]));
        // 1 + (-1) = 0
        let (h0, carry) = b3.hold_pair(Digit::ONE, Digit::Root(1));
        assert_eq!(h0, Digit::Zero);
        assert!(carry.is_zero());
        // zero branch
        let (h0, carry) = b3.hold_pair(Digit::Zero, Digit::Root(1));
        assert_eq!(h0, Digit::Root(1));
        assert!(carry.is_zero());
        // 1 + 1 = X + X^2 over (Z, -2)
        let n2 = neg2();
        let (h0, carry) = n2.hold_pair(Digit::ONE, Digit::ONE);
        assert_eq!(h0, Digit::Zero);
        assert_eq!(carry, ds(&[1, 1]));
    }

    #[test]
    fn add_mod_examples() {
        let n2 = neg2();
        // 1 + 1 = 2 = X + X^2
        assert_eq!(n2.add_mod(&ds(&[1]), &ds(&[1]), 4), ds(&[0, 1, 1]));
        // 1 + (1 + X) = 2 + X vanishes mod X^m for every m
        for m in 1..=20 {
            assert!(n2.add_mod(&ds(&[1]), &ds(&[1, 1]), m).is_zero());
        }
        // balanced ternary: 1 + 1 = -1 + X
        assert_eq!(bal3().add_mod(&ds(&[1]), &ds(&[1]), 3), ds(&[-1, 1]));
    }

    #[test]
    fn pseudo_system_five_never_stabilizes() {
        // with hold -1 + X + X^2 the class of 5 mod X^m is
        // -1 - X - X^3 - X^4 - ... - X^{m-1}; its degree is m - 1 once the
        // tail past the zero X^2 digit is non-empty (m >= 4).
        let p = pseudo();
        for m in 3..=12 {
            let mut five = DigitString::empty();
            for _ in 0..5 {
                five = p.add_mod(&five, &DigitString::one(), m);
            }
            assert_eq!(five.get(0), Digit::Root(1));
            assert_eq!(five.get(1), Digit::Root(1));
            assert_eq!(five.get(2), Digit::Zero);
            for j in 3..m {
                assert_eq!(five.get(j), Digit::Root(1));
            }
            if m >= 4 {
                assert_eq!(five.degree(), Some(m - 1), "m = {m}");
            }
        }
    }

    #[test]
    fn untruncated_add() {
        let n2 = neg2();
        // -1 + 1 = 0: the carries settle into an all-zero periodic state
        assert!(n2.add(&ds(&[1, 1]), &ds(&[1]), 64).unwrap().is_zero());
        // 3 + 3 = 6
        let three = ds(&[1, 1, 1]);
        assert_eq!(n2.add(&three, &three, 64).unwrap(), ds(&[0, 1, 0, 1, 1]));
        // 1 + (1 + X) = 2 + X = 0 via periodic detection as well
        assert!(n2.add(&ds(&[1]), &ds(&[1, 1]), 64).unwrap().is_zero());
    }

    #[test]
    fn pseudo_add_never_terminates() {
        // 4 + 1 keeps a non-zero periodic carry tail in the pseudo system
        let p = pseudo();
        let four = {
            let mut acc = DigitString::empty();
            for _ in 0..4 {
                acc = p.add_mod(&acc, &DigitString::one(), 32);
            }
            acc
        };
        let err = p.add(&four, &DigitString::one(), 200).unwrap_err();
        match err {
            Error::NonTerminating { periodic, .. } => assert!(periodic),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn mul_examples() {
        let n2 = neg2();
        let s = ds(&[1, 0, 1]);
        assert_eq!(n2.mul(&s, &DigitString::one(), 64).unwrap(), s);
        // X * X = X^2
        assert_eq!(
            n2.mul(&ds(&[0, 1]), &ds(&[0, 1]), 64).unwrap(),
            ds(&[0, 0, 1])
        );
        // 3 * 3 = 9
        let three = ds(&[1, 1, 1]);
        assert_eq!(n2.mul(&three, &three, 64).unwrap(), ds(&[1, 0, 0, 1, 1]));
    }

    #[test]
    fn extend_by_root_reindexes() {
        let n2 = neg2();
        assert_eq!(n2.extend_by_root(1), n2);
        let ext = n2.extend_by_root(2);
        assert_eq!(ext.hold(0), &ds(&[0, 0, 1, 0, 1]));
        // (Z, -3) with hold -1 - X extends to the sqrt(-3) hold -1 - Y^2
        let zm3 = NumberSystem::new("zneg3", 2, vec![ds(&[-1, -1]), DigitString::empty()])
            .unwrap()
            .with_embedding(Complex64::new(-3.0, 0.0));
        let ext = zm3.extend_by_root(2);
        assert_eq!(ext.hold(0), &ds(&[-1, 0, -1]));
        let emb = ext.embedding().unwrap();
        assert!((emb - Complex64::new(0.0, 3f64.sqrt())).norm() < 1e-12);
    }

    #[test]
    fn prime_power_check() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 27] {
            assert!(is_prime_power(q), "{q}");
        }
        for q in [1u64, 6, 10, 12, 15] {
            assert!(!is_prime_power(q), "{q}");
        }
    }
}
