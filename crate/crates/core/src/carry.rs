//! Faithful transcription of the inductive carry-list addition.
//!
//! This is the proof-device form of addition mod `X^m`: at step `k` the
//! digits `a_k`, `b_k` and the first coefficient of every pending carry
//! polynomial are folded left through the pair map, emitting one output
//! digit and appending one new carry polynomial per fold. The pending
//! list is kept verbatim, zero polynomials included, so after `k` steps
//! it holds exactly `2^k - 1` entries, each trimmed to `m - k`
//! coefficients. The optimized queue in [`crate::system`] must agree
//! with this path; the equivalence is gated in the test suite.

use crate::digit::{Digit, DigitString};
use crate::error::{Error, Result};
use crate::system::NumberSystem;

/// Pending lists grow as `2^m - 1`; refuse sizes past this.
pub const FAITHFUL_MAX_MODULUS: usize = 20;

/// The running state of the faithful algorithm: the digits produced so
/// far and the pending carry polynomials, each stored as the list of its
/// next `m - k` coefficients.
#[derive(Clone, Debug, Default)]
pub struct CarryState {
    pub produced: Vec<Digit>,
    pub pending: Vec<Vec<Digit>>,
}

impl CarryState {
    pub fn new() -> Self {
        CarryState::default()
    }

    /// One step: consume position `k = produced.len()` of both inputs.
    pub fn step(&mut self, sys: &NumberSystem, a_k: Digit, b_k: Digit, m: usize) {
        let k = self.produced.len();
        debug_assert!(k < m);
        let keep = m - k - 1; // coefficients kept per carry list after this step

        // left fold over (a_k, b_k, heads of the pending lists)
        let mut acc = a_k;
        let mut appended: Vec<Vec<Digit>> = Vec::with_capacity(self.pending.len() + 1);
        let heads: Vec<Digit> = self.pending.iter().map(|l| l[0]).collect();
        for x in std::iter::once(b_k).chain(heads) {
            let (h0, carry) = sys.hold_pair(acc, x);
            acc = h0;
            let mut coeffs: Vec<Digit> = carry.digits().to_vec();
            coeffs.resize(keep, Digit::Zero);
            coeffs.truncate(keep);
            appended.push(coeffs);
        }
        self.produced.push(acc);

        // trim the old lists by their consumed head, then adjoin the new ones
        let mut next: Vec<Vec<Digit>> = Vec::with_capacity(2 * self.pending.len() + 1);
        for l in self.pending.drain(..) {
            let mut tail: Vec<Digit> = l[1..].to_vec();
            tail.resize(keep, Digit::Zero);
            next.push(tail);
        }
        next.extend(appended);
        self.pending = next;
    }
}

/// Addition modulo `X^m` by the faithful carry-list algorithm.
pub fn add_mod_faithful(
    sys: &NumberSystem,
    a: &DigitString,
    b: &DigitString,
    m: usize,
) -> Result<DigitString> {
    let (s, _) = add_mod_faithful_traced(sys, a, b, m)?;
    Ok(s)
}

/// Same, also reporting the pending-list length after each step.
pub fn add_mod_faithful_traced(
    sys: &NumberSystem,
    a: &DigitString,
    b: &DigitString,
    m: usize,
) -> Result<(DigitString, Vec<usize>)> {
    if m > FAITHFUL_MAX_MODULUS {
        return Err(Error::TooLarge {
            size: (1u128 << m) - 1,
            guard: (1u128 << FAITHFUL_MAX_MODULUS) - 1,
        });
    }
    let mut state = CarryState::new();
    let mut sizes = Vec::with_capacity(m);
    for k in 0..m {
        state.step(sys, a.get(k), b.get(k), m);
        sizes.push(state.pending.len());
    }
    Ok((DigitString::from_digits(state.produced), sizes))
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
                    _ => panic!(),
                })
                .collect(),
        )
    }

    fn neg2() -> NumberSystem {
        NumberSystem::new("neg2", 1, vec![ds(&[0, 1, 1])]).unwrap()
    }

    #[test]
    fn matches_small_sums() {
        let sys = neg2();
        let (sum, sizes) = add_mod_faithful_traced(&sys, &ds(&[1]), &ds(&[1]), 6).unwrap();
        assert_eq!(sum, ds(&[0, 1, 1]));
        // pending list holds exactly 2^k - 1 entries after step k
        for (i, len) in sizes.iter().enumerate() {
            assert_eq!(*len, (1 << (i + 1)) - 1);
        }
    }

    #[test]
    fn agrees_with_queue_on_samples() {
        let sys = neg2();
        for m in 1..=8 {
            for x in 0u32..16 {
                for y in 0u32..16 {
                    let a = ds(&[
                        (x & 1) as i32,
                        ((x >> 1) & 1) as i32,
                        ((x >> 2) & 1) as i32,
                        ((x >> 3) & 1) as i32,
                    ]);
                    let b = ds(&[
                        (y & 1) as i32,
                        ((y >> 1) & 1) as i32,
                        ((y >> 2) & 1) as i32,
                        ((y >> 3) & 1) as i32,
                    ]);
                    assert_eq!(
                        add_mod_faithful(&sys, &a, &b, m).unwrap(),
                        sys.add_mod(&a, &b, m)
                    );
                }
            }
        }
    }

    #[test]
    fn modulus_guard() {
        let sys = neg2();
        assert!(add_mod_faithful(&sys, &ds(&[1]), &ds(&[1]), 21).is_err());
    }
}
