//! Noncommutative polynomials with coefficients in `ℚ(i)[t]`, and the
//! relation-expression parser.

mod parse;
mod poly;
mod tpoly;
mod word;

pub use parse::{check_generator_names, parse_ncpoly, MAX_EXPONENT, MAX_TERMS};
pub use poly::{nc_multiply, NcPoly};
pub use tpoly::{tpoly_eval, TPoly};
pub use word::Word;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NcPolyError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator {name:?} at byte {pos}")]
    UnknownGenerator { pos: usize, name: String },
    #[error("malformed scalar literal at byte {pos}: {msg}")]
    Scalar { pos: usize, msg: String },
    #[error("invalid generator name {0:?} (names must be identifiers other than `t` and `i`, without repeats)")]
    BadGeneratorName(String),
    #[error("generator alphabets differ: {left:?} vs {right:?}")]
    AlphabetMismatch { left: Vec<String>, right: Vec<String> },
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::linalg::Scalar;
    use proptest::prelude::*;

    fn gens() -> Vec<String> {
        vec!["x".into(), "y".into(), "z1".into()]
    }

    fn scalar() -> impl Strategy<Value = Scalar> {
        (-20i64..20, 1i64..6, -3i64..4).prop_map(|(a, b, c)| {
            let im = if c.abs() == 3 { Scalar::ratio(c, 2).re } else { Scalar::zero().re };
            Scalar::new(Scalar::ratio(a, b).re, im)
        })
    }

    fn tpoly() -> impl Strategy<Value = TPoly> {
        prop::collection::vec(scalar(), 0..3).prop_map(TPoly::from_coeffs)
    }

    fn ncpoly() -> impl Strategy<Value = NcPoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, 0..4), tpoly()), 0..4).prop_map(|terms| {
            let mut p = NcPoly::zero(&gens());
            for (w, c) in terms {
                p.add_term(Word(w), c);
            }
            p
        })
    }

    use crate::linalg::Field;

    proptest! {
        #[test]
        fn print_parse_round_trip(p in ncpoly()) {
            let printed = p.to_string();
            let back = parse_ncpoly(&printed, &gens()).unwrap();
            prop_assert_eq!(back, p, "printed as {}", printed);
        }

        #[test]
        fn multiplication_is_associative(a in ncpoly(), b in ncpoly(), c in ncpoly()) {
            let left = a.mul(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn multiplication_distributes_and_bounds_degree(a in ncpoly(), b in ncpoly(), c in ncpoly()) {
            let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            if let (Some(da), Some(db), Some(dp)) = (a.degree(), b.degree(), a.mul(&b).unwrap().degree()) {
                prop_assert!(dp <= da + db);
            }
            prop_assert!(a.add(&a.neg()).unwrap().is_zero());
        }

        #[test]
        fn evaluation_is_a_ring_homomorphism(p in tpoly(), q in tpoly(), s in scalar()) {
            prop_assert_eq!((&p * &q).eval(&s), p.eval(&s) * q.eval(&s));
            prop_assert_eq!((&p + &q).eval(&s), p.eval(&s) + q.eval(&s));
        }
    }

    #[test]
    fn identity_and_order() {
        let g = gens();
        let x = NcPoly::generator(&g, 0);
        let y = NcPoly::generator(&g, 1);
        let xy = nc_multiply(&x, &y).unwrap();
        assert_eq!(xy.terms().map(|(w, _)| w.clone()).collect::<Vec<_>>(), vec![Word(vec![0, 1])]);
        let one = NcPoly::constant(&g, TPoly::one());
        assert_eq!(one.mul(&xy).unwrap(), xy);
        let other = NcPoly::generator(&["x".to_string()], 0);
        assert!(matches!(x.mul(&other), Err(NcPolyError::AlphabetMismatch { .. })));
    }
}
