//! Exact arithmetic in rank-2 orders `Z[w]` (and in `Z` as the degenerate
//! rank-1 case), generic over the coefficient integer type.
//!
//! An [`OrderSpec`] fixes the monic minimal polynomial `x^2 - t x + c` of
//! the generator `w`, so `w^2 = t w - c`. Elements are pairs `a + b w`.
//! The crate-root aliases pin the two instantiations that are used in
//! anger: `QuadInt` (arbitrary precision) and `QuadInt64` (fast path for
//! orbit searches, where all values stay tiny).

use std::fmt;
use std::hash::Hash;

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Coefficient scalar: exact signed integer arithmetic plus conversions.
pub trait Scalar:
    Integer + Signed + Clone + Hash + fmt::Debug + fmt::Display + FromPrimitive + ToPrimitive
{
}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + Hash + fmt::Debug + fmt::Display + FromPrimitive + ToPrimitive
{
}

/// Whether the order is the rational integers or a genuine rank-2 order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderKind {
    /// `Z`, handled with `b = 0` throughout; `t = c = 0` by convention.
    Integers,
    /// `Z[w]` with `w^2 = t w - c`.
    Quadratic,
}

/// A concrete order: the minimal polynomial data for `w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderSpec<T> {
    pub kind: OrderKind,
    /// Trace of `w` (coefficient `t` in `x^2 - t x + c`).
    pub t: T,
    /// Norm of `w` (coefficient `c` in `x^2 - t x + c`).
    pub c: T,
    /// Human-readable description of `w`, e.g. `"w = sqrt(-2)"`.
    pub omega_desc: String,
}

impl<T: Scalar> OrderSpec<T> {
    pub fn integers() -> Self {
        OrderSpec {
            kind: OrderKind::Integers,
            t: T::zero(),
            c: T::zero(),
            omega_desc: "Z".to_string(),
        }
    }

    pub fn quadratic(t: i64, c: i64, omega_desc: &str) -> Self {
        OrderSpec {
            kind: OrderKind::Quadratic,
            t: T::from_i64(t).expect("small trace"),
            c: T::from_i64(c).expect("small norm"),
            omega_desc: omega_desc.to_string(),
        }
    }

    pub fn is_integers(&self) -> bool {
        self.kind == OrderKind::Integers
    }

    /// Discriminant `t^2 - 4c` of the minimal polynomial.
    pub fn discriminant(&self) -> T {
        self.t.clone() * self.t.clone() - T::from_i64(4).unwrap() * self.c.clone()
    }

    /// Complex value of `w`. Imaginary orders get the root with positive
    /// imaginary part; a positive discriminant yields the real root with
    /// the `+sqrt` branch. Unused (zero) for the rational case.
    pub fn omega_complex(&self) -> Complex64 {
        if self.is_integers() {
            return Complex64::new(0.0, 0.0);
        }
        let t = self.t.to_f64().unwrap_or(f64::NAN);
        let disc = self.discriminant().to_f64().unwrap_or(f64::NAN);
        if disc < 0.0 {
            Complex64::new(t / 2.0, (-disc).sqrt() / 2.0)
        } else {
            Complex64::new((t + disc.sqrt()) / 2.0, 0.0)
        }
    }

    pub fn to_i64(&self) -> Result<OrderSpec<i64>> {
        let conv = |x: &T| {
            x.to_i64().ok_or(Error::TooLarge {
                size: u128::MAX,
                guard: i64::MAX as u128,
            })
        };
        Ok(OrderSpec {
            kind: self.kind,
            t: conv(&self.t)?,
            c: conv(&self.c)?,
            omega_desc: self.omega_desc.clone(),
        })
    }

    pub fn mul(&self, x: &QuadraticInt<T>, y: &QuadraticInt<T>) -> QuadraticInt<T> {
        // (a1 + b1 w)(a2 + b2 w) with w^2 = t w - c
        let a = x.a.clone() * y.a.clone() - self.c.clone() * x.b.clone() * y.b.clone();
        let b = x.a.clone() * y.b.clone()
            + x.b.clone() * y.a.clone()
            + self.t.clone() * x.b.clone() * y.b.clone();
        QuadraticInt { a, b }
    }

    /// Algebraic conjugate: `w` goes to `t - w`.
    pub fn conj(&self, x: &QuadraticInt<T>) -> QuadraticInt<T> {
        QuadraticInt {
            a: x.a.clone() + self.t.clone() * x.b.clone(),
            b: -x.b.clone(),
        }
    }

    /// Field norm `x * conj(x) = a^2 + t a b + c b^2`.
    pub fn norm(&self, x: &QuadraticInt<T>) -> T {
        x.a.clone() * x.a.clone()
            + self.t.clone() * x.a.clone() * x.b.clone()
            + self.c.clone() * x.b.clone() * x.b.clone()
    }

    /// Exact division `x / y`, via multiplication by the conjugate and an
    /// integrality check in the `(1, w)` basis.
    pub fn div_exact(&self, x: &QuadraticInt<T>, y: &QuadraticInt<T>) -> Result<QuadraticInt<T>> {
        let n = self.norm(y);
        if n.is_zero() {
            return Err(Error::NotDivisible {
                numerator: x.to_string(),
                divisor: y.to_string(),
            });
        }
        let w = self.mul(x, &self.conj(y));
        let (qa, ra) = w.a.div_rem(&n);
        let (qb, rb) = w.b.div_rem(&n);
        if ra.is_zero() && rb.is_zero() {
            Ok(QuadraticInt { a: qa, b: qb })
        } else {
            Err(Error::NotDivisible {
                numerator: x.to_string(),
                divisor: y.to_string(),
            })
        }
    }

    pub fn divides(&self, y: &QuadraticInt<T>, x: &QuadraticInt<T>) -> bool {
        self.div_exact(x, y).is_ok()
    }

    /// Complex value of an element under the order's embedding.
    pub fn embed(&self, x: &QuadraticInt<T>) -> Complex64 {
        let a = x.a.to_f64().unwrap_or(f64::NAN);
        let b = x.b.to_f64().unwrap_or(f64::NAN);
        self.omega_complex() * b + a
    }
}

/// Element `a + b w` of a quadratic order (or of `Z` when `b = 0`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadraticInt<T> {
    pub a: T,
    pub b: T,
}

impl<T: Scalar> QuadraticInt<T> {
    pub fn new(a: T, b: T) -> Self {
        QuadraticInt { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        QuadraticInt {
            a: T::from_i64(a).expect("small coefficient"),
            b: T::from_i64(b).expect("small coefficient"),
        }
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        QuadraticInt {
            a: self.a.clone() + rhs.a.clone(),
            b: self.b.clone() + rhs.b.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        QuadraticInt {
            a: self.a.clone() - rhs.a.clone(),
            b: self.b.clone() - rhs.b.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        QuadraticInt {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }

    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        Some((self.a.to_i64()?, self.b.to_i64()?))
    }

    pub fn map<U: Scalar>(&self) -> Option<QuadraticInt<U>> {
        Some(QuadraticInt {
            a: U::from_i64(self.a.to_i64()?)?,
            b: U::from_i64(self.b.to_i64()?)?,
        })
    }
}

impl<T: Scalar> fmt::Display for QuadraticInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let wterm = if self.b == T::one() {
            "w".to_string()
        } else if self.b == -T::one() {
            "-w".to_string()
        } else {
            format!("{}*w", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{wterm}")
        } else if self.b.is_negative() {
            write!(f, "{}{}", self.a, wterm)
        } else {
            write!(f, "{}+{}", self.a, wterm)
        }
    }
}

/// Parse an element written as `a`, `b*w`, `a+b*w`, `a-b*w`, `w`, `-w`, ...
pub fn parse_element<T: Scalar>(text: &str) -> Result<QuadraticInt<T>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty element".to_string()));
    }
    let mut a = T::zero();
    let mut b = T::zero();
    // split into signed terms
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (i, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 {
            terms.push(std::mem::take(&mut cur));
            cur.push(ch);
        } else {
            cur.push(ch);
        }
    }
    terms.push(cur);
    for term in terms {
        if term.is_empty() || term == "+" || term == "-" {
            return Err(Error::Parse(format!("bad element {text:?}")));
        }
        let (coeff_str, is_w) = match term.strip_suffix("*w") {
            Some(rest) => (rest.to_string(), true),
            None => match term.strip_suffix('w') {
                Some(rest) if rest.is_empty() || rest == "+" || rest == "-" => {
                    (format!("{rest}1"), true)
                }
                Some(_) => return Err(Error::Parse(format!("bad term {term:?}"))),
                None => (term.clone(), false),
            },
        };
        let coeff = parse_scalar::<T>(&coeff_str)
            .ok_or_else(|| Error::Parse(format!("bad integer {coeff_str:?}")))?;
        if is_w {
            b = b + coeff;
        } else {
            a = a + coeff;
        }
    }
    Ok(QuadraticInt { a, b })
}

fn parse_scalar<T: Scalar>(s: &str) -> Option<T> {
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let ten = T::from_i64(10).unwrap();
    let mut acc = T::zero();
    for c in digits.chars() {
        acc = acc * ten.clone() + T::from_i64(c as i64 - '0' as i64).unwrap();
    }
    Some(if neg { -acc } else { acc })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Q = QuadraticInt<BigInt>;

    #[test]
    fn integers_division() {
        let o = OrderSpec::<BigInt>::integers();
        let six = Q::from_ints(6, 0);
        let x = Q::from_ints(-2, 0);
        assert_eq!(o.div_exact(&six, &x).unwrap(), Q::from_ints(-3, 0));
        assert!(o.div_exact(&Q::from_ints(5, 0), &x).is_err());
    }

    #[test]
    fn sqrt_minus3_division() {
        // w = sqrt(-3): (-3 + w) / w = 1 + w
        let o = OrderSpec::<BigInt>::quadratic(0, 3, "w = sqrt(-3)");
        let z = Q::from_ints(-3, 1);
        let w = Q::from_ints(0, 1);
        assert_eq!(o.div_exact(&z, &w).unwrap(), Q::from_ints(1, 1));
    }

    #[test]
    fn q7_conjugate_division() {
        // w root of x^2 + x + 2: 2 / w = -1 - w
        let o = OrderSpec::<BigInt>::quadratic(-1, 2, "w = (-1+sqrt(-7))/2");
        let two = Q::from_ints(2, 0);
        let w = Q::from_ints(0, 1);
        assert_eq!(o.div_exact(&two, &w).unwrap(), Q::from_ints(-1, -1));
        // and 2 is not divisible by w twice: 2/w = -1-w, then (-1-w)/w fails
        let q = o.div_exact(&two, &w).unwrap();
        assert!(o.div_exact(&q, &w).is_err());
    }

    #[test]
    fn norm_and_conj() {
        let o = OrderSpec::<BigInt>::quadratic(1, 3, "w = (1+sqrt(-11))/2");
        let w = Q::from_ints(0, 1);
        assert_eq!(o.norm(&w), BigInt::from(3));
        // w * conj(w) = norm
        let p = o.mul(&w, &o.conj(&w));
        assert_eq!(p, Q::from_ints(3, 0));
        let e = o.omega_complex();
        assert!((e.re - 0.5).abs() < 1e-12);
        assert!((e.im - (11f64).sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn element_text() {
        let z: Q = parse_element("3-2*w").unwrap();
        assert_eq!(z, Q::from_ints(3, -2));
        assert_eq!(z.to_string(), "3-2*w");
        let w: Q = parse_element("-w").unwrap();
        assert_eq!(w, Q::from_ints(0, -1));
        assert_eq!(parse_element::<BigInt>("17").unwrap(), Q::from_ints(17, 0));
        assert_eq!(Q::from_ints(0, 1).to_string(), "w");
        assert!(parse_element::<BigInt>("w+w*").is_err());
    }
}
