//! Concrete realizations of number systems: a quadratic order (or `Z`)
//! together with a generator `X` and the digit embedding `iota`, or the
//! carry-free polynomial ring `F_q[X]`.
//!
//! A binding is only handed out once the defining identity
//! `sigma(hold(x)) = iota(x) + 1` has been verified exactly for every
//! non-zero digit, `iota` is an injective group homomorphism and the
//! absolute norm of `X` equals the alphabet size.

use num_traits::{Signed, Zero};

use crate::digit::{Digit, DigitString};
use crate::error::{Error, Result};
use crate::fq;
use crate::quad::{parse_element, OrderSpec, QuadraticInt, Scalar};
use crate::system::NumberSystem;
use crate::{Coeff, QuadInt};

/// Evaluation of a digit string in the order: `sum_j iota(s_j) X^j`.
pub fn eval_sigma_in<T: Scalar>(
    order: &OrderSpec<T>,
    x: &QuadraticInt<T>,
    iota: &[QuadraticInt<T>],
    s: &DigitString,
) -> QuadraticInt<T> {
    let mut acc = QuadraticInt::zero();
    for &d in s.digits().iter().rev() {
        acc = order.mul(&acc, x);
        if let Digit::Root(e) = d {
            acc = acc.add(&iota[e as usize]);
        }
    }
    acc
}

/// The unique digit `d` with `X | z - iota(d)`, if there is one.
pub fn residue_digit_in<T: Scalar>(
    order: &OrderSpec<T>,
    x: &QuadraticInt<T>,
    iota: &[QuadraticInt<T>],
    z: &QuadraticInt<T>,
) -> Result<Digit> {
    let mut found = None;
    for cand in std::iter::once(Digit::Zero).chain((0..iota.len() as u32).map(Digit::Root)) {
        let v = match cand {
            Digit::Zero => z.clone(),
            Digit::Root(e) => z.sub(&iota[e as usize]),
        };
        if order.divides(x, &v) {
            if found.is_some() {
                return Err(Error::NoResidueDigit {
                    element: z.to_string(),
                });
            }
            found = Some(cand);
        }
    }
    found.ok_or_else(|| Error::NoResidueDigit {
        element: z.to_string(),
    })
}

/// Greedy digit extraction: repeatedly strip the residue digit and divide
/// by `X`. Fails with `NonTerminating` after `cap` steps.
pub fn encode_in<T: Scalar>(
    order: &OrderSpec<T>,
    x: &QuadraticInt<T>,
    iota: &[QuadraticInt<T>],
    z: &QuadraticInt<T>,
    cap: usize,
) -> Result<DigitString> {
    let mut z = z.clone();
    let mut digits = Vec::new();
    while !z.is_zero() {
        if digits.len() >= cap {
            return Err(Error::NonTerminating {
                cap,
                periodic: false,
            });
        }
        let d = residue_digit_in(order, x, iota, &z)?;
        let v = match d {
            Digit::Zero => z,
            Digit::Root(e) => z.sub(&iota[e as usize]),
        };
        z = order.div_exact(&v, x)?;
        digits.push(d);
    }
    Ok(DigitString::from_digits(digits))
}

/// Canonical root-of-unity embedding of the order-`n` digit group into
/// the given order. Supported: n = 1, 2 in any order; n = 3, 6 in the
/// Eisenstein order (w^2 = -w - 1); n = 4 in the Gaussian order
/// (w^2 = -1).
pub fn canonical_iota<T: Scalar>(n: u32, order: &OrderSpec<T>) -> Result<Vec<QuadraticInt<T>>> {
    let small = |pairs: &[(i64, i64)]| {
        pairs
            .iter()
            .map(|&(a, b)| QuadraticInt::from_ints(a, b))
            .collect::<Vec<_>>()
    };
    let want = |t: i64, c: i64| {
        order.t == T::from_i64(t).unwrap()
            && order.c == T::from_i64(c).unwrap()
            && !order.is_integers()
    };
    match n {
        1 => Ok(small(&[(1, 0)])),
        2 => Ok(small(&[(1, 0), (-1, 0)])),
        3 if want(-1, 1) => Ok(small(&[(1, 0), (0, 1), (-1, -1)])),
        4 if want(0, 1) => Ok(small(&[(1, 0), (0, 1), (-1, 0), (0, -1)])),
        6 if want(-1, 1) => Ok(small(&[
            (1, 0),
            (1, 1),
            (0, 1),
            (-1, 0),
            (-1, -1),
            (0, -1),
        ])),
        _ => Err(Error::Unsupported(format!(
            "no canonical embedding of the order-{n} digit group into this order"
        ))),
    }
}

/// A number system realized inside a quadratic order (or `Z`).
#[derive(Clone, Debug)]
pub struct QuadBinding {
    system: NumberSystem,
    order: OrderSpec<Coeff>,
    x: QuadInt,
    iota: Vec<QuadInt>,
}

impl QuadBinding {
    pub fn new(system: NumberSystem, order: OrderSpec<Coeff>, x: QuadInt) -> Result<Self> {
        let iota = canonical_iota(system.order(), &order)?;
        let system = system.with_embedding(order.embed(&x));
        let b = QuadBinding {
            system,
            order,
            x,
            iota,
        };
        b.validate()?;
        Ok(b)
    }

    fn validate(&self) -> Result<()> {
        let n = self.system.order();
        // iota is injective and multiplicative on the digit group
        for e1 in 0..n {
            if self.iota[e1 as usize].is_zero() {
                return Err(Error::InvalidSystem("iota hits zero".into()));
            }
            for e2 in 0..n {
                if e1 < e2 && self.iota[e1 as usize] == self.iota[e2 as usize] {
                    return Err(Error::InvalidSystem("iota is not injective".into()));
                }
                let prod = self
                    .order
                    .mul(&self.iota[e1 as usize], &self.iota[e2 as usize]);
                if prod != self.iota[((e1 + e2) % n) as usize] {
                    return Err(Error::InvalidSystem("iota is not multiplicative".into()));
                }
            }
        }
        // |N(X)| = n + 1 (absolute norm of the ideal generated by X)
        let nx = if self.order.is_integers() {
            self.x.a.clone().abs()
        } else {
            self.order.norm(&self.x).abs()
        };
        if nx != Coeff::from(n + 1) {
            return Err(Error::InvalidSystem(format!(
                "|N(X)| = {nx}, expected {}",
                n + 1
            )));
        }
        if !self.check_hold_identity() {
            return Err(Error::InvalidSystem(
                "hold identity sigma(hold(x)) = iota(x) + 1 fails".into(),
            ));
        }
        Ok(())
    }

    /// Exact check of `sigma(hold(x)) = iota(x) + 1` for every digit.
    pub fn check_hold_identity(&self) -> bool {
        (0..self.system.order()).all(|e| {
            let lhs = self.eval_sigma(self.system.hold(e));
            let rhs = self.iota[e as usize].add(&QuadInt::one());
            lhs == rhs
        })
    }

    pub fn system(&self) -> &NumberSystem {
        &self.system
    }

    pub fn order_spec(&self) -> &OrderSpec<Coeff> {
        &self.order
    }

    pub fn x(&self) -> &QuadInt {
        &self.x
    }

    pub fn iota(&self, d: Digit) -> QuadInt {
        match d {
            Digit::Zero => QuadInt::zero(),
            Digit::Root(e) => self.iota[(e % self.system.order()) as usize].clone(),
        }
    }

    pub fn eval_sigma(&self, s: &DigitString) -> QuadInt {
        eval_sigma_in(&self.order, &self.x, &self.iota, s)
    }

    pub fn residue_digit(&self, z: &QuadInt) -> Result<Digit> {
        residue_digit_in(&self.order, &self.x, &self.iota, z)
    }

    pub fn div_by_x_exact(&self, z: &QuadInt) -> Result<QuadInt> {
        self.order.div_exact(z, &self.x)
    }

    /// Greedy encoding with the geometric default cap when none is given:
    /// `|X| > 1` in every valid binding, so the digit count of `z` is
    /// about `log_{|X|} |z|`.
    pub fn encode(&self, z: &QuadInt, cap: Option<usize>) -> Result<DigitString> {
        let cap = cap.unwrap_or_else(|| self.default_encode_cap(z));
        encode_in(&self.order, &self.x, &self.iota, z, cap)
    }

    pub fn default_encode_cap(&self, z: &QuadInt) -> usize {
        let zc = self.order.embed(z).norm().max(1.0);
        let xc = self.order.embed(&self.x).norm().max(1.0 + 1e-9);
        ((zc + 1.0).ln() / xc.ln()).ceil() as usize + 16
    }

    /// The same binding over machine integers, for hot search loops.
    pub fn to_small(&self) -> Result<SmallQuadBinding> {
        let conv_err = || Error::TooLarge {
            size: u128::MAX,
            guard: i64::MAX as u128,
        };
        Ok(SmallQuadBinding {
            n: self.system.order(),
            order: self.order.to_i64()?,
            x: self.x.map::<i64>().ok_or_else(conv_err)?,
            iota: self
                .iota
                .iter()
                .map(|z| z.map::<i64>().ok_or_else(conv_err))
                .collect::<Result<Vec<_>>>()?,
        })
    }
}

/// Machine-integer instantiation of a quadratic binding.
#[derive(Clone, Debug)]
pub struct SmallQuadBinding {
    pub n: u32,
    pub order: OrderSpec<i64>,
    pub x: QuadraticInt<i64>,
    pub iota: Vec<QuadraticInt<i64>>,
}

impl SmallQuadBinding {
    pub fn eval_sigma(&self, s: &DigitString) -> QuadraticInt<i64> {
        eval_sigma_in(&self.order, &self.x, &self.iota, s)
    }

    pub fn residue_digit(&self, z: &QuadraticInt<i64>) -> Result<Digit> {
        residue_digit_in(&self.order, &self.x, &self.iota, z)
    }

    pub fn encode(&self, z: &QuadraticInt<i64>, cap: usize) -> Result<DigitString> {
        encode_in(&self.order, &self.x, &self.iota, z, cap)
    }

    /// One backward-division step `z -> (z - iota(digit)) / X`.
    pub fn tau(&self, z: &QuadraticInt<i64>) -> Result<(Digit, QuadraticInt<i64>)> {
        let d = self.residue_digit(z)?;
        let v = match d {
            Digit::Zero => z.clone(),
            Digit::Root(e) => z.sub(&self.iota[e as usize]),
        };
        Ok((d, self.order.div_exact(&v, &self.x)?))
    }
}

/// The symbolic polynomial ring `F_q[X]` with carry-free addition.
#[derive(Clone, Debug)]
pub struct FqBinding {
    system: NumberSystem,
    q: u32,
}

impl FqBinding {
    pub fn new(system: NumberSystem) -> Result<Self> {
        let q = system.order() + 1;
        if !fq::is_supported(q) {
            return Err(Error::Unsupported(format!(
                "F_{q}[X] oracle tables only cover q in {:?}",
                fq::SUPPORTED_Q
            )));
        }
        let b = FqBinding { system, q };
        // hold identity in F_q[X]: hold(x) must be the single digit x + 1
        for e in 0..b.system.order() {
            let lhs = b.system.hold(e);
            let rhs = DigitString::from_digits(vec![fq::field_add(
                q,
                Digit::Root(e),
                Digit::Root(0),
            )]);
            if *lhs != rhs {
                return Err(Error::InvalidSystem(format!(
                    "hold({e}) is not the field sum digit"
                )));
            }
        }
        Ok(b)
    }

    pub fn system(&self) -> &NumberSystem {
        &self.system
    }

    pub fn q(&self) -> u32 {
        self.q
    }
}

/// An element of whichever ring a binding realizes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Element {
    Quad(QuadInt),
    Poly(DigitString),
}

impl Element {
    pub fn as_quad(&self) -> &QuadInt {
        match self {
            Element::Quad(z) => z,
            Element::Poly(_) => panic!("polynomial element in a quadratic context"),
        }
    }
}

/// A catalog entry: a number system together with its realization.
#[derive(Clone, Debug)]
pub enum SystemBinding {
    Quadratic(QuadBinding),
    Fq(FqBinding),
}

impl SystemBinding {
    pub fn system(&self) -> &NumberSystem {
        match self {
            SystemBinding::Quadratic(b) => b.system(),
            SystemBinding::Fq(b) => b.system(),
        }
    }

    pub fn name(&self) -> &str {
        self.system().name()
    }

    pub fn as_quadratic(&self) -> Option<&QuadBinding> {
        match self {
            SystemBinding::Quadratic(b) => Some(b),
            SystemBinding::Fq(_) => None,
        }
    }

    pub fn zero(&self) -> Element {
        match self {
            SystemBinding::Quadratic(_) => Element::Quad(QuadInt::zero()),
            SystemBinding::Fq(_) => Element::Poly(DigitString::empty()),
        }
    }

    pub fn eval_sigma(&self, s: &DigitString) -> Element {
        match self {
            SystemBinding::Quadratic(b) => Element::Quad(b.eval_sigma(s)),
            SystemBinding::Fq(_) => Element::Poly(s.clone()),
        }
    }

    /// Ring addition on the realization side; this is the oracle the
    /// digit-level addition is tested against.
    pub fn ring_add(&self, a: &Element, b: &Element) -> Element {
        match (self, a, b) {
            (SystemBinding::Quadratic(_), Element::Quad(x), Element::Quad(y)) => {
                Element::Quad(x.add(y))
            }
            (SystemBinding::Fq(f), Element::Poly(x), Element::Poly(y)) => {
                Element::Poly(fq::poly_add(f.q, x, y))
            }
            _ => panic!("element kind does not match binding"),
        }
    }

    pub fn ring_mul(&self, a: &Element, b: &Element) -> Element {
        match (self, a, b) {
            (SystemBinding::Quadratic(q), Element::Quad(x), Element::Quad(y)) => {
                Element::Quad(q.order_spec().mul(x, y))
            }
            (SystemBinding::Fq(f), Element::Poly(x), Element::Poly(y)) => {
                Element::Poly(fq::poly_mul(f.q, x, y))
            }
            _ => panic!("element kind does not match binding"),
        }
    }

    pub fn residue_digit(&self, z: &Element) -> Result<Digit> {
        match (self, z) {
            (SystemBinding::Quadratic(b), Element::Quad(z)) => b.residue_digit(z),
            (SystemBinding::Fq(_), Element::Poly(s)) => Ok(s.get(0)),
            _ => panic!("element kind does not match binding"),
        }
    }

    pub fn div_by_x_exact(&self, z: &Element) -> Result<Element> {
        match (self, z) {
            (SystemBinding::Quadratic(b), Element::Quad(z)) => {
                Ok(Element::Quad(b.div_by_x_exact(z)?))
            }
            (SystemBinding::Fq(_), Element::Poly(s)) => {
                if s.get(0).is_zero() {
                    Ok(Element::Poly(s.dropped_low(1)))
                } else {
                    Err(Error::NotDivisible {
                        numerator: s.to_text(self.system().order()),
                        divisor: "X".to_string(),
                    })
                }
            }
            _ => panic!("element kind does not match binding"),
        }
    }

    pub fn encode(&self, z: &Element, cap: Option<usize>) -> Result<DigitString> {
        match (self, z) {
            (SystemBinding::Quadratic(b), Element::Quad(z)) => b.encode(z, cap),
            (SystemBinding::Fq(_), Element::Poly(s)) => Ok(s.clone()),
            _ => panic!("element kind does not match binding"),
        }
    }

    pub fn parse_element(&self, text: &str) -> Result<Element> {
        match self {
            SystemBinding::Quadratic(b) => {
                let z = parse_element::<Coeff>(text)?;
                if b.order_spec().is_integers() && !z.b.is_zero() {
                    return Err(Error::Parse(format!(
                        "{text:?}: the ring Z has no w component"
                    )));
                }
                Ok(Element::Quad(z))
            }
            SystemBinding::Fq(f) => Ok(Element::Poly(DigitString::parse(
                text,
                f.system.order(),
            )?)),
        }
    }

    pub fn format_element(&self, z: &Element) -> String {
        match (self, z) {
            (SystemBinding::Quadratic(_), Element::Quad(z)) => z.to_string(),
            (SystemBinding::Fq(f), Element::Poly(s)) => s.to_text(f.system.order()),
            _ => panic!("element kind does not match binding"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn eval_examples() {
        let neg2 = catalog::find("neg2").unwrap();
        let s = DigitString::parse("1,1,1", 1).unwrap();
        assert_eq!(
            neg2.eval_sigma(&s),
            Element::Quad(QuadInt::from_ints(3, 0))
        );
        assert_eq!(neg2.eval_sigma(&DigitString::empty()), neg2.zero());

        // Gaussian n = 1: [1, 1] evaluates to 1 + (-1 + i) = i
        let gauss = catalog::find("gauss").unwrap();
        let s = DigitString::parse("1,1", 1).unwrap();
        assert_eq!(
            gauss.eval_sigma(&s),
            Element::Quad(QuadInt::from_ints(0, 1))
        );
    }

    #[test]
    fn residue_examples() {
        let bal3 = catalog::find("bal3").unwrap();
        assert_eq!(bal3.residue_digit(&bal3.zero()).unwrap(), Digit::Zero);
        assert_eq!(
            bal3.residue_digit(&Element::Quad(QuadInt::from_ints(5, 0)))
                .unwrap(),
            Digit::Root(1)
        );
        let gauss = catalog::find("gauss").unwrap();
        assert_eq!(
            gauss
                .residue_digit(&Element::Quad(QuadInt::from_ints(0, 1)))
                .unwrap(),
            Digit::Root(0)
        );
    }

    #[test]
    fn encode_examples() {
        let neg2 = catalog::find("neg2").unwrap();
        let enc = |v: i64| {
            neg2.encode(&Element::Quad(QuadInt::from_ints(v, 0)), None)
                .unwrap()
                .to_text(1)
        };
        assert_eq!(enc(5), "1,0,1");
        assert_eq!(enc(-2), "0,1");
        let bal3 = catalog::find("bal3").unwrap();
        assert_eq!(
            bal3.encode(&Element::Quad(QuadInt::from_ints(2, 0)), None)
                .unwrap()
                .to_text(2),
            "-1,1"
        );
    }

    #[test]
    fn element_text_round_trip() {
        let q11 = catalog::find("q11").unwrap();
        let z = q11.parse_element("3-2*w").unwrap();
        assert_eq!(q11.format_element(&z), "3-2*w");
        let neg2 = catalog::find("neg2").unwrap();
        assert!(neg2.parse_element("1+2*w").is_err());
    }
}
