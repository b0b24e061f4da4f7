//! Finite-field digit arithmetic for the carry-free polynomial systems.
//!
//! The non-zero digits of an order-`n` alphabet are identified with the
//! multiplicative group of `F_q`, `q = n + 1`. For `q` in {2, 3, 4} the
//! field addition below is the independent ring oracle for `F_q[X]`:
//! polynomials are digit strings, added digitwise and multiplied by
//! convolution, with no reference to any hold table.

use crate::digit::{Digit, DigitString};

pub const SUPPORTED_Q: [u32; 3] = [2, 3, 4];

pub fn is_supported(q: u32) -> bool {
    SUPPORTED_Q.contains(&q)
}

/// Addition in `F_q` on digit representatives.
pub fn field_add(q: u32, a: Digit, b: Digit) -> Digit {
    match (a, b) {
        (Digit::Zero, d) | (d, Digit::Zero) => d,
        (Digit::Root(e1), Digit::Root(e2)) => match q {
            2 => Digit::Zero, // 1 + 1 = 0 in characteristic 2
            3 => {
                // digits 1, -1 are 1, 2 in F_3
                let v = (1 + e1 % 2) + (1 + e2 % 2);
                match v % 3 {
                    0 => Digit::Zero,
                    1 => Digit::Root(0),
                    _ => Digit::Root(1),
                }
            }
            4 => {
                // characteristic 2; the three non-zero elements are the
                // cube roots of unity, and x + y is the third one.
                let (e1, e2) = (e1 % 3, e2 % 3);
                if e1 == e2 {
                    Digit::Zero
                } else {
                    Digit::Root(3 - e1 - e2)
                }
            }
            _ => unreachable!("unsupported field size {q}"),
        },
    }
}

/// Digitwise sum of two polynomials over `F_q`.
pub fn poly_add(q: u32, a: &DigitString, b: &DigitString) -> DigitString {
    let len = a.len().max(b.len());
    DigitString::from_digits(
        (0..len)
            .map(|j| field_add(q, a.get(j), b.get(j)))
            .collect(),
    )
}

/// Convolution product of two polynomials over `F_q`.
pub fn poly_mul(q: u32, a: &DigitString, b: &DigitString) -> DigitString {
    if a.is_zero() || b.is_zero() {
        return DigitString::empty();
    }
    let n = q - 1;
    let mut acc = vec![Digit::Zero; a.len() + b.len() - 1];
    for (i, &da) in a.digits().iter().enumerate() {
        for (j, &db) in b.digits().iter().enumerate() {
            let prod = da.mul(db, n);
            acc[i + j] = field_add(q, acc[i + j], prod);
        }
    }
    DigitString::from_digits(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_addition_table() {
        let one = Digit::Root(0);
        let w = Digit::Root(1);
        let w2 = Digit::Root(2);
        assert_eq!(field_add(4, one, one), Digit::Zero);
        assert_eq!(field_add(4, one, w), w2);
        assert_eq!(field_add(4, one, w2), w);
        assert_eq!(field_add(4, w, w2), one);
        assert_eq!(field_add(4, Digit::Zero, w), w);
    }

    #[test]
    fn f3_is_balanced() {
        let one = Digit::Root(0);
        let minus = Digit::Root(1);
        assert_eq!(field_add(3, one, one), minus); // 1 + 1 = 2 = -1
        assert_eq!(field_add(3, one, minus), Digit::Zero);
        assert_eq!(field_add(3, minus, minus), one);
    }

    #[test]
    fn poly_ops() {
        // (1 + X)^2 = 1 + X^2 over F_2
        let s = DigitString::from_digits(vec![Digit::Root(0), Digit::Root(0)]);
        let sq = poly_mul(2, &s, &s);
        assert_eq!(
            sq,
            DigitString::from_digits(vec![Digit::Root(0), Digit::Zero, Digit::Root(0)])
        );
        assert!(poly_add(2, &s, &s).is_zero());
    }
}
