//! The built-in catalog of number systems: every hold table is checked
//! against its realization when the entry is constructed.

use crate::binding::{FqBinding, QuadBinding, SystemBinding};
use crate::digit::{Digit, DigitString};
use crate::error::Result;
use crate::fq;
use crate::quad::OrderSpec;
use crate::system::NumberSystem;
use crate::{Coeff, QuadInt};

fn ds(entries: &[i64]) -> DigitString {
    // helper for n <= 2 tables: 0, 1, -1
    DigitString::from_digits(
        entries
            .iter()
            .map(|&v| match v {
                0 => Digit::Zero,
                1 => Digit::Root(0),
                -1 => Digit::Root(1),
                _ => panic!("bad digit value {v}"),
            })
            .collect(),
    )
}

fn dr(entries: &[Option<u32>]) -> DigitString {
    // helper for n >= 3 tables: exponents, None = zero digit
    DigitString::from_digits(
        entries
            .iter()
            .map(|e| match e {
                None => Digit::Zero,
                Some(k) => Digit::Root(*k),
            })
            .collect(),
    )
}

fn quad(
    name: &str,
    n: u32,
    hold: Vec<DigitString>,
    order: OrderSpec<Coeff>,
    x: (i64, i64),
) -> SystemBinding {
    let sys = NumberSystem::new(name, n, hold).expect("catalog system is well-formed");
    let b = QuadBinding::new(sys, order, QuadInt::from_ints(x.0, x.1))
        .expect("catalog binding passes the hold identity");
    SystemBinding::Quadratic(b)
}

fn fq_entry(name: &str, q: u32) -> SystemBinding {
    let n = q - 1;
    let hold = (0..n)
        .map(|e| {
            DigitString::from_digits(vec![fq::field_add(q, Digit::Root(e), Digit::Root(0))])
        })
        .collect();
    let sys = NumberSystem::new(name, n, hold).expect("carry-free system is well-formed");
    SystemBinding::Fq(FqBinding::new(sys).expect("field tables cover q"))
}

/// All built-in bindings.
pub fn builtin() -> Vec<SystemBinding> {
    let z = OrderSpec::<Coeff>::integers;
    vec![
        // order 1: digits {0, 1}
        quad("neg2", 1, vec![ds(&[0, 1, 1])], z(), (-2, 0)),
        quad(
            "gauss",
            1,
            vec![ds(&[0, 0, 1, 1])],
            OrderSpec::quadratic(0, 1, "w = i"),
            (-1, 1),
        ),
        quad(
            "sqrtm2",
            1,
            vec![ds(&[0, 0, 1, 0, 1])],
            OrderSpec::quadratic(0, 2, "w = sqrt(-2)"),
            (0, 1),
        ),
        quad(
            "q7",
            1,
            vec![ds(&[0, 1, 0, 1])],
            OrderSpec::quadratic(-1, 2, "w = (-1+sqrt(-7))/2"),
            (0, 1),
        ),
        // order 2: digits {0, 1, -1}
        quad(
            "bal3",
            2,
            vec![ds(&[-1, 1]), DigitString::empty()],
            z(),
            (3, 0),
        ),
        quad(
            "q11",
            2,
            vec![ds(&[-1, 1, -1]), DigitString::empty()],
            OrderSpec::quadratic(1, 3, "w = (1+sqrt(-11))/2"),
            (0, 1),
        ),
        quad(
            "sqrtm3",
            2,
            vec![ds(&[-1, 0, -1]), DigitString::empty()],
            OrderSpec::quadratic(0, 3, "w = sqrt(-3)"),
            (0, 1),
        ),
        quad(
            "q2n2",
            2,
            vec![ds(&[-1, -1, 1, -1]), DigitString::empty()],
            OrderSpec::quadratic(0, 2, "w = sqrt(-2)"),
            (1, 1),
        ),
        // order 3 over the Eisenstein integers, X = -2
        quad(
            "mu3",
            3,
            vec![
                dr(&[None, Some(0), Some(0)]),
                dr(&[Some(2), Some(2)]),
                dr(&[Some(1), Some(1)]),
            ],
            OrderSpec::quadratic(-1, 1, "w = (-1+sqrt(-3))/2"),
            (-2, 0),
        ),
        // order 4 over the Gaussian integers, X = 1 + 2i
        quad(
            "mu4",
            4,
            vec![
                dr(&[Some(1), Some(3)]),
                dr(&[Some(3), Some(0)]),
                DigitString::empty(),
                dr(&[Some(2), Some(3)]),
            ],
            OrderSpec::quadratic(0, 1, "w = i"),
            (1, 2),
        ),
        // order 6 over the Eisenstein integers, X = 2 - j (j = w)
        quad(
            "mu6",
            6,
            vec![
                dr(&[Some(2), Some(0)]),
                dr(&[Some(4), Some(1)]),
                dr(&[Some(1)]),
                DigitString::empty(),
                dr(&[Some(5)]),
                dr(&[Some(3), Some(0)]),
            ],
            OrderSpec::quadratic(-1, 1, "w = (-1+sqrt(-3))/2"),
            (2, -1),
        ),
        // carry-free polynomial rings
        fq_entry("f2x", 2),
        fq_entry("f3x", 3),
        fq_entry("f4x", 4),
    ]
}

/// Look up a built-in binding by name (case-insensitive).
pub fn find(name: &str) -> Option<SystemBinding> {
    builtin()
        .into_iter()
        .find(|b| b.name().eq_ignore_ascii_case(name))
}

/// The invalid candidate with hold `-1 + X + X^2`. Its defining identity
/// holds in the real quadratic order of `x^2 + x - 3`, but 5 has no
/// finite expansion there; encoding it must not terminate.
pub fn pseudo_remark_candidate() -> Result<QuadBinding> {
    let sys = NumberSystem::new(
        "pseudo",
        2,
        vec![ds(&[-1, 1, 1]), DigitString::empty()],
    )?;
    QuadBinding::new(
        sys,
        OrderSpec::quadratic(-1, -3, "w = (-1+sqrt(13))/2"),
        QuadInt::from_ints(0, 1),
    )
}

/// One-line description of each entry for the CLI.
pub fn describe(b: &SystemBinding) -> String {
    match b {
        SystemBinding::Quadratic(q) => {
            let o = q.order_spec();
            let ring = if o.is_integers() {
                "Z".to_string()
            } else {
                format!("Z[w], w^2 = {}w - {} ({})", o.t, o.c, o.omega_desc)
            };
            format!("n={} in {ring}, X = {}", q.system().order(), q.x())
        }
        SystemBinding::Fq(f) => format!("n={} in F_{}[X], X symbolic", f.system().order(), f.q()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binding::Element;

    #[test]
    fn all_entries_load_and_pass_identity() {
        let cat = builtin();
        assert_eq!(cat.len(), 14);
        for b in &cat {
            if let SystemBinding::Quadratic(q) = b {
                assert!(q.check_hold_identity(), "{}", b.name());
            }
        }
    }

    #[test]
    fn catalog_names_unique() {
        let cat = builtin();
        let mut names: Vec<_> = cat.iter().map(|b| b.name().to_string()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), cat.len());
    }

    #[test]
    fn pseudo_candidate_loads_but_five_fails() {
        let b = pseudo_remark_candidate().unwrap();
        assert!(b.check_hold_identity());
        let five = QuadInt::from_ints(5, 0);
        assert!(matches!(
            b.encode(&five, Some(200)),
            Err(crate::Error::NonTerminating { .. })
        ));
    }

    #[test]
    fn norms_match_alphabet_size() {
        for b in builtin() {
            if let SystemBinding::Quadratic(q) = &b {
                let n = q.system().order();
                let nx = if q.order_spec().is_integers() {
                    num_traits::Signed::abs(&q.x().a)
                } else {
                    num_traits::Signed::abs(&q.order_spec().norm(q.x()))
                };
                assert_eq!(nx, Coeff::from(n + 1), "{}", b.name());
            }
        }
    }

    #[test]
    fn fq_systems_are_carry_free() {
        for name in ["f2x", "f3x", "f4x"] {
            let b = find(name).unwrap();
            let sys = b.system();
            for x in sys.nonzero_digits() {
                for y in sys.nonzero_digits() {
                    let (_, carry) = sys.hold_pair(x, y);
                    assert!(carry.is_zero());
                }
            }
            // digit-level addition agrees with the field-table oracle
            let s = DigitString::from_digits(vec![Digit::Root(0), Digit::Root(0)]);
            let via_hold = sys.add(&s, &s, 16).unwrap();
            if let SystemBinding::Fq(f) = &b {
                let via_field = fq::poly_add(f.q(), &s, &s);
                assert_eq!(via_hold, via_field);
            }
        }
    }

    #[test]
    fn find_is_case_insensitive() {
        assert!(find("NEG2").is_some());
        assert!(find("no-such-system").is_none());
    }

    #[test]
    fn gauss_encode_i() {
        // i = X + 1 in base -1+i, so i - 1 = X and encode(i) = [1, 1]
        let gauss = find("gauss").unwrap();
        let i = Element::Quad(QuadInt::from_ints(0, 1));
        assert_eq!(gauss.encode(&i, None).unwrap().to_text(1), "1,1");
    }
}
