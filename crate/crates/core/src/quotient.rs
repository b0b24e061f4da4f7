//! Arithmetic in the finite truncations `R_m = R / (X^m)`.
//!
//! An element is a digit vector of length exactly `m`; there are
//! `(n+1)^m` of them and the arithmetic is pure digit work, no host ring
//! involved. The structure probe enumerates the whole ring and reports
//! the additive-order histogram plus the characteristic, which is what
//! the quotient structure statements are checked against.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::digit::{Digit, DigitString};
use crate::error::{Error, Result};
use crate::system::NumberSystem;

/// Guard on exhaustive enumeration.
pub const ENUMERATION_GUARD: u128 = 1_000_000;

/// A class in `R_m`, stored as exactly `m` digits.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruncatedElement {
    digits: Vec<Digit>,
}

impl TruncatedElement {
    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    pub fn modulus(&self) -> usize {
        self.digits.len()
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|d| d.is_zero())
    }

    /// The canonical digit-string lift (trailing zeros trimmed).
    pub fn lift(&self) -> DigitString {
        DigitString::from_digits(self.digits.clone())
    }
}

/// The ring `R_m` for a fixed system and modulus.
#[derive(Clone, Debug)]
pub struct QuotientRing<'a> {
    system: &'a NumberSystem,
    m: usize,
}

/// Additive-order histogram and characteristic of a finite ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub system: String,
    pub modulus: usize,
    pub size: u64,
    pub characteristic: u64,
    /// order of an element -> how many elements have it
    pub orders: BTreeMap<u64, u64>,
}

impl<'a> QuotientRing<'a> {
    pub fn new(system: &'a NumberSystem, m: usize) -> Self {
        assert!(m >= 1);
        QuotientRing { system, m }
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn system(&self) -> &NumberSystem {
        self.system
    }

    pub fn size(&self) -> u128 {
        (self.system.order() as u128 + 1).pow(self.m as u32)
    }

    pub fn zero(&self) -> TruncatedElement {
        TruncatedElement {
            digits: vec![Digit::Zero; self.m],
        }
    }

    pub fn one(&self) -> TruncatedElement {
        self.from_string(&DigitString::one())
    }

    /// Class of a digit string: truncate and pad to length `m`.
    pub fn from_string(&self, s: &DigitString) -> TruncatedElement {
        let digits: Vec<Digit> = (0..self.m).map(|j| s.get(j)).collect();
        TruncatedElement { digits }
    }

    pub fn add(&self, a: &TruncatedElement, b: &TruncatedElement) -> TruncatedElement {
        self.from_string(&self.system.add_mod(&a.lift(), &b.lift(), self.m))
    }

    /// Additive inverse, solved digit by digit: at each position pick the
    /// digit that zeroes the running sum there; carries only move upward,
    /// so earlier positions stay fixed.
    pub fn neg(&self, a: &TruncatedElement) -> TruncatedElement {
        let mut w = self.zero();
        let mut s = a.clone();
        for j in 0..self.m {
            let d = s.digits[j];
            if d.is_zero() {
                continue;
            }
            let inverse = self
                .system
                .nonzero_digits()
                .find(|&cand| self.system.hold_pair(d, cand).0.is_zero())
                .expect("residue field: every digit has an additive inverse digit");
            w.digits[j] = inverse;
            let mut inc = vec![Digit::Zero; j + 1];
            inc[j] = inverse;
            s = self.add(&s, &self.from_string(&DigitString::from_digits(inc)));
        }
        debug_assert!(s.is_zero());
        w
    }

    pub fn sub(&self, a: &TruncatedElement, b: &TruncatedElement) -> TruncatedElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &TruncatedElement, b: &TruncatedElement) -> TruncatedElement {
        let mut acc = self.zero();
        for (j, &d) in a.digits.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let term = self.system.scale(d, &b.lift()).shifted(j).truncated(self.m);
            acc = self.add(&acc, &self.from_string(&term));
        }
        acc
    }

    /// `k . a` by repeated doubling.
    pub fn scalar_mul(&self, k: u64, a: &TruncatedElement) -> TruncatedElement {
        let mut acc = self.zero();
        let mut base = a.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add(&base, &base);
            }
        }
        acc
    }

    /// Least `k >= 1` with `k . a = 0`, by repeated addition.
    pub fn additive_order(&self, a: &TruncatedElement) -> u64 {
        let mut acc = a.clone();
        let mut k = 1;
        while !acc.is_zero() {
            acc = self.add(&acc, a);
            k += 1;
        }
        k
    }

    /// Projection `R_m -> R_{m'}` for the receiver's modulus `m' <= m`.
    pub fn project(&self, a: &TruncatedElement) -> TruncatedElement {
        TruncatedElement {
            digits: a.digits[..self.m.min(a.digits.len())].to_vec(),
        }
    }

    /// All elements, in odometer order over the digit vectors.
    pub fn enumerate(&self) -> Result<impl Iterator<Item = TruncatedElement> + '_> {
        if self.size() > ENUMERATION_GUARD {
            return Err(Error::TooLarge {
                size: self.size(),
                guard: ENUMERATION_GUARD,
            });
        }
        let n = self.system.order();
        let m = self.m;
        let total = self.size() as u64;
        Ok((0..total).map(move |mut idx| {
            let mut digits = Vec::with_capacity(m);
            for _ in 0..m {
                let r = (idx % (n as u64 + 1)) as u32;
                idx /= n as u64 + 1;
                digits.push(if r == 0 {
                    Digit::Zero
                } else {
                    Digit::Root(r - 1)
                });
            }
            TruncatedElement { digits }
        }))
    }

    /// Exhaustive additive-order histogram plus characteristic. Orders are
    /// found by repeated multiplication with the residue characteristic
    /// `p`: the group has `p`-power order, so `ord(a) = p^k` with the
    /// least `k` such that `p^k . a = 0`.
    pub fn structure_probe(&self) -> Result<StructureReport> {
        let q = self.system.order() as u64 + 1;
        let p = smallest_prime_factor(q);
        let p_order = |start: TruncatedElement| {
            let mut ord = 1u64;
            let mut cur = start;
            while !cur.is_zero() {
                cur = self.scalar_mul(p, &cur);
                ord *= p;
            }
            ord
        };
        let mut orders: BTreeMap<u64, u64> = BTreeMap::new();
        for a in self.enumerate()? {
            *orders.entry(p_order(a)).or_insert(0) += 1;
        }
        Ok(StructureReport {
            system: self.system.name().to_string(),
            modulus: self.m,
            size: self.size() as u64,
            characteristic: p_order(self.one()),
            orders,
        })
    }
}

fn smallest_prime_factor(q: u64) -> u64 {
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            return p;
        }
        p += 1;
    }
    q
}

/// Additive-order histogram of `Z/a (+) Z/b` (`b = 1` for the cyclic
/// case), computed group-theoretically; the independent oracle for the
/// structure statements.
pub fn cyclic_sum_signature(a: u64, b: u64) -> BTreeMap<u64, u64> {
    let lcm = num_integer::lcm(a, b);
    let divisors: Vec<u64> = (1..=lcm).filter(|d| lcm % d == 0).collect();
    // elements of order dividing d, then peel to exact orders
    let dividing: BTreeMap<u64, u64> = divisors
        .iter()
        .map(|&d| (d, num_integer::gcd(d, a) * num_integer::gcd(d, b)))
        .collect();
    let mut exact = BTreeMap::new();
    for &d in &divisors {
        let mut c = dividing[&d];
        for &e in &divisors {
            if e < d && d % e == 0 {
                c -= exact.get(&e).copied().unwrap_or(0);
            }
        }
        if c > 0 {
            exact.insert(d, c);
        }
    }
    exact
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn sys(name: &str) -> NumberSystem {
        catalog::find(name).unwrap().system().clone()
    }

    fn te(ring: &QuotientRing, text: &str) -> TruncatedElement {
        ring.from_string(&DigitString::parse(text, ring.system().order()).unwrap())
    }

    #[test]
    fn trunc_add_examples() {
        let neg2 = sys("neg2");
        let r4 = QuotientRing::new(&neg2, 4);
        assert_eq!(r4.add(&te(&r4, "1"), &te(&r4, "1")), te(&r4, "0,1,1"));
        let a = te(&r4, "1,0,1");
        assert_eq!(r4.add(&a, &r4.zero()), a);
        let r3 = QuotientRing::new(&neg2, 3);
        assert!(r3.add(&te(&r3, "1"), &te(&r3, "1,1")).is_zero());
    }

    #[test]
    fn trunc_neg_examples() {
        let neg2 = sys("neg2");
        let r3 = QuotientRing::new(&neg2, 3);
        assert!(r3.neg(&r3.zero()).is_zero());
        // -1 = 1 + X exactly
        assert_eq!(r3.neg(&te(&r3, "1")), te(&r3, "1,1"));
        for a in r3.enumerate().unwrap() {
            assert!(r3.add(&a, &r3.neg(&a)).is_zero());
        }
        // for n = 2 the inverse is the scale by -1
        let bal3 = sys("bal3");
        let r = QuotientRing::new(&bal3, 3);
        for a in r.enumerate().unwrap() {
            let scaled = r.from_string(&bal3.scale(Digit::Root(1), &a.lift()));
            assert_eq!(r.neg(&a), scaled);
        }
    }

    #[test]
    fn additive_order_examples() {
        let bal3 = sys("bal3");
        let r2 = QuotientRing::new(&bal3, 2);
        assert_eq!(r2.additive_order(&r2.zero()), 1);
        assert_eq!(r2.additive_order(&te(&r2, "1")), 9);
        let gauss = sys("gauss");
        let r3 = QuotientRing::new(&gauss, 3);
        assert_eq!(r3.additive_order(&te(&r3, "1")), 4);
    }

    #[test]
    fn structure_probe_examples() {
        // R_3 for the sqrt(-7) system is Z/8
        let q7 = sys("q7");
        let probe = QuotientRing::new(&q7, 3).structure_probe().unwrap();
        assert_eq!(probe.characteristic, 8);
        assert_eq!(probe.orders, cyclic_sum_signature(8, 1));
        let expected: Vec<(u64, u64)> = vec![(1, 1), (2, 1), (4, 2), (8, 4)];
        assert_eq!(probe.orders.into_iter().collect::<Vec<_>>(), expected);

        // R_2 for base -1+i is Z/2[X]: four elements of characteristic 2
        let gauss = sys("gauss");
        let probe = QuotientRing::new(&gauss, 2).structure_probe().unwrap();
        assert_eq!(probe.size, 4);
        assert_eq!(probe.characteristic, 2);
        assert_eq!(probe.orders, cyclic_sum_signature(2, 2));

        // R_1 is the field F_3 for balanced ternary
        let bal3 = sys("bal3");
        let probe = QuotientRing::new(&bal3, 1).structure_probe().unwrap();
        assert_eq!(probe.orders, cyclic_sum_signature(3, 1));
    }

    #[test]
    fn projection_commutes() {
        let gauss = sys("gauss");
        let big = QuotientRing::new(&gauss, 4);
        let small = QuotientRing::new(&gauss, 3);
        for a in big.enumerate().unwrap() {
            for b in [big.one(), te(&big, "1,1,0,1"), te(&big, "0,0,1")] {
                let down = small.add(&small.project(&a), &small.project(&b));
                assert_eq!(down, small.project(&big.add(&a, &b)));
            }
            assert_eq!(small.neg(&small.project(&a)), small.project(&big.neg(&a)));
        }
    }

    #[test]
    fn enumeration_guard() {
        let mu6 = sys("mu6");
        assert!(QuotientRing::new(&mu6, 8).enumerate().is_err());
    }

    #[test]
    fn distributivity_spot_check() {
        let mu3 = sys("mu3");
        let r = QuotientRing::new(&mu3, 3);
        let elems: Vec<_> = r.enumerate().unwrap().step_by(7).collect();
        for a in elems.iter().take(8) {
            for b in elems.iter().take(8) {
                for c in elems.iter().take(4) {
                    let lhs = r.mul(c, &r.add(a, b));
                    let rhs = r.add(&r.mul(c, a), &r.mul(c, b));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
