//! Digit alphabets and digit strings.
//!
//! A digit is either zero or a root of unity in the cyclic group of order
//! `n`, stored as an exponent class in `[0, n)`. A [`DigitString`] is a
//! finite little-endian sequence of digits: the entry at index `j` is the
//! coefficient of `X^j`. The normal form has no trailing zero digits and
//! the empty string stands for `0`.

use crate::error::{Error, Result};

/// Zero or an `n`-th root of unity encoded by its exponent modulo `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Digit {
    Zero,
    Root(u32),
}

impl Digit {
    /// The unit digit `1` (exponent 0).
    pub const ONE: Digit = Digit::Root(0);

    pub fn is_zero(self) -> bool {
        matches!(self, Digit::Zero)
    }

    pub fn exponent(self) -> Option<u32> {
        match self {
            Digit::Zero => None,
            Digit::Root(e) => Some(e),
        }
    }

    /// Monoid product: zero absorbs, roots add exponents mod `n`.
    pub fn mul(self, rhs: Digit, n: u32) -> Digit {
        match (self, rhs) {
            (Digit::Zero, _) | (_, Digit::Zero) => Digit::Zero,
            (Digit::Root(a), Digit::Root(b)) => Digit::Root((a + b) % n),
        }
    }

    /// Multiplicative inverse of a root; zero has none.
    pub fn inv(self, n: u32) -> Option<Digit> {
        match self {
            Digit::Zero => None,
            Digit::Root(e) => Some(Digit::Root((n - e % n) % n)),
        }
    }

    /// Text form of one digit in an order-`n` alphabet. Orders 1 and 2 use
    /// the integer values `0`, `1`, `-1`; larger orders use `w^k` tokens.
    pub fn to_text(self, n: u32) -> String {
        match self {
            Digit::Zero => "0".to_string(),
            Digit::Root(e) if n <= 2 => {
                if e % n == 0 {
                    "1".to_string()
                } else {
                    "-1".to_string()
                }
            }
            Digit::Root(e) if e % n == 0 => "1".to_string(),
            Digit::Root(e) => format!("w^{}", e % n),
        }
    }

    pub fn parse(token: &str, n: u32) -> Result<Digit> {
        let t = token.trim();
        match t {
            "0" => return Ok(Digit::Zero),
            "1" => return Ok(Digit::Root(0)),
            "-1" if n % 2 == 0 => return Ok(Digit::Root(n / 2)),
            "w" if n >= 3 => return Ok(Digit::Root(1)),
            _ => {}
        }
        if let Some(exp) = t.strip_prefix("w^") {
            if n >= 3 {
                let e: u32 = exp
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad digit token {t:?}")))?;
                return Ok(Digit::Root(e % n));
            }
        }
        Err(Error::Parse(format!(
            "bad digit token {t:?} for alphabet order {n}"
        )))
    }
}

/// Finite little-endian digit sequence; index `j` carries `X^j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DigitString {
    digits: Vec<Digit>,
}

impl DigitString {
    /// Normalizing constructor: trims trailing zero digits.
    pub fn from_digits(mut digits: Vec<Digit>) -> Self {
        while digits.last().is_some_and(|d| d.is_zero()) {
            digits.pop();
        }
        DigitString { digits }
    }

    /// The empty string, representing 0.
    pub fn empty() -> Self {
        DigitString { digits: Vec::new() }
    }

    /// The string `1`.
    pub fn one() -> Self {
        DigitString {
            digits: vec![Digit::ONE],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    /// Highest index with a non-zero digit; `None` plays the role of -inf.
    pub fn degree(&self) -> Option<usize> {
        if self.digits.is_empty() {
            None
        } else {
            Some(self.digits.len() - 1)
        }
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    /// Digit at position `j`; zero beyond the stored length.
    pub fn get(&self, j: usize) -> Digit {
        self.digits.get(j).copied().unwrap_or(Digit::Zero)
    }

    /// Multiply by `X^k`: shift every position up by `k`.
    pub fn shifted(&self, k: usize) -> DigitString {
        if self.is_zero() {
            return DigitString::empty();
        }
        let mut v = vec![Digit::Zero; k];
        v.extend_from_slice(&self.digits);
        DigitString { digits: v }
    }

    /// Drop the `k` lowest positions (exact division by `X^k` of the tail).
    pub fn dropped_low(&self, k: usize) -> DigitString {
        if k >= self.digits.len() {
            return DigitString::empty();
        }
        DigitString::from_digits(self.digits[k..].to_vec())
    }

    /// Class modulo `X^m`: keep the first `m` positions.
    pub fn truncated(&self, m: usize) -> DigitString {
        if self.digits.len() <= m {
            return self.clone();
        }
        DigitString::from_digits(self.digits[..m].to_vec())
    }

    pub fn to_text(&self, n: u32) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.digits
            .iter()
            .map(|d| d.to_text(n))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(text: &str, n: u32) -> Result<DigitString> {
        let t = text.trim();
        if t.is_empty() {
            return Ok(DigitString::empty());
        }
        let digits = t
            .split(',')
            .map(|tok| Digit::parse(tok, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(DigitString::from_digits(digits))
    }
}

impl From<Vec<Digit>> for DigitString {
    fn from(v: Vec<Digit>) -> Self {
        DigitString::from_digits(v)
    }
}
