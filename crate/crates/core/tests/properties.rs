use algebroid::actions::check_left_module_algebra;
use algebroid::algebra::{check_algebra, check_hopf};
use algebroid::catalog::{self, Group};
use algebroid::linalg::{build_quotient, matrix_inverse, rank, rref_kernel, tensor_of_maps, Matrix, SparseVec};
use algebroid::products::{check_algebra_iso, cm_odot, iso_diamond_to_odot, kadison_diamond};
use algebroid::scalar::Rational;
use algebroid::{FieldSpec, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::Prime(7)), Just(FieldSpec::Prime(101))]
}

fn rational_scalar() -> impl Strategy<Value = (i64, i64)> {
    (-1_000_000_000_000i64..1_000_000_000_000, 1i64..1_000_000)
}

fn scalar_in(f: FieldSpec) -> impl Strategy<Value = Scalar> {
    (-20i64..20, 1i64..6)
        .prop_filter_map("denominator vanishes mod p", move |(n, d)| f.parse_scalar(&format!("{n}/{d}")).ok())
}

/// A sparse matrix with entries in -3..=3.
fn matrix(f: FieldSpec, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(proptest::collection::vec(-3i64..=3, rows), cols).prop_map(move |cols| {
        Matrix::from_columns(
            rows,
            cols.into_iter()
                .map(|c| {
                    SparseVec::from_terms(rows, c.into_iter().enumerate().map(|(i, x)| (i, f.from_i64(x))).collect())
                })
                .collect(),
        )
    })
}

fn vector(f: FieldSpec, n: usize) -> impl Strategy<Value = SparseVec> {
    proptest::collection::vec(-3i64..=3, n).prop_map(move |v| {
        SparseVec::from_terms(n, v.into_iter().enumerate().map(|(i, x)| (i, f.from_i64(x))).collect())
    })
}

fn to_big(s: &Scalar) -> BigRational {
    match s {
        Scalar::Rat(r) => r.to_big(),
        other => panic!("expected a rational, got {other}"),
    }
}

proptest! {
    #[test]
    fn rational_text_round_trip((n, d) in rational_scalar()) {
        let s = FieldSpec::Rationals.parse_scalar(&format!("{n}/{d}")).unwrap();
        let back = FieldSpec::Rationals.parse_scalar(&s.to_string()).unwrap();
        prop_assert_eq!(&back, &s);
        let big = to_big(&s);
        prop_assert!(big.denom().is_positive());
        prop_assert_eq!(big.numer().gcd(big.denom()), BigInt::from(1));
        prop_assert_eq!(big, BigRational::new(BigInt::from(n), BigInt::from(d)));
    }

    #[test]
    fn prime_text_round_trip(n in any::<i64>(), p in prop_oneof![Just(2u32), Just(7), Just(101), Just(4_294_967_291)]) {
        let f = FieldSpec::Prime(p);
        let s = f.from_i64(n);
        prop_assert_eq!(f.parse_scalar(&s.to_string()).unwrap(), s.clone());
        match s {
            Scalar::Mod { value, modulus } => {
                prop_assert_eq!(modulus, p);
                prop_assert_eq!(i128::from(value), i128::from(n).rem_euclid(i128::from(p)));
            }
            other => prop_assert!(false, "unexpected {}", other),
        }
    }

    /// Arithmetic agrees with an independent big-rational computation, including overflow into big values.
    #[test]
    fn rational_arithmetic_matches_bigrational(a in rational_scalar(), b in rational_scalar()) {
        let q = FieldSpec::Rationals;
        let (x, y) = (q.parse_scalar(&format!("{}/{}", a.0, a.1)).unwrap(), q.parse_scalar(&format!("{}/{}", b.0, b.1)).unwrap());
        let (bx, by) = (to_big(&x), to_big(&y));
        prop_assert_eq!(to_big(&(&x + &y)), &bx + &by);
        prop_assert_eq!(to_big(&(&x * &y)), &bx * &by);
        prop_assert_eq!(to_big(&(&x - &y)), &bx - &by);
        let r: Rational = match &x * &y { Scalar::Rat(r) => r, _ => unreachable!() };
        prop_assert_eq!(r.to_big(), &bx * &by);
    }

    #[test]
    fn field_laws((f, a, b, c) in field().prop_flat_map(|f| (Just(f), scalar_in(f), scalar_in(f), scalar_in(f)))) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &(-&a), f.zero());
        if let Some(inv) = a.inv() {
            prop_assert_eq!(&a * &inv, f.one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    /// `(f ⊗ g)(u ⊗ v) = f(u) ⊗ g(v)` on the row-major flattening.
    #[test]
    fn kronecker_product(
        (f, g, u, v) in field().prop_flat_map(|k| (matrix(k, 3, 2), matrix(k, 2, 3), vector(k, 2), vector(k, 3)))
    ) {
        let fg = tensor_of_maps(&f, &g);
        prop_assert_eq!(fg.nrows(), 6);
        prop_assert_eq!(fg.ncols(), 6);
        prop_assert_eq!(fg.apply(&u.tensor(&v)), f.apply(&u).tensor(&g.apply(&v)));
    }

    #[test]
    fn inverse_and_kernel((k, m) in field().prop_flat_map(|k| (Just(k), matrix(k, 4, 4)))) {
        let (r, kernel) = rref_kernel(k, &m);
        prop_assert_eq!(r, rank(&m));
        prop_assert_eq!(r + kernel.len(), 4);
        for v in &kernel {
            prop_assert!(m.apply(v).is_zero());
        }
        match matrix_inverse(k, &m) {
            Ok(inv) => {
                prop_assert_eq!(r, 4);
                prop_assert!(m.compose(&inv).is_identity());
                prop_assert!(inv.compose(&m).is_identity());
            }
            Err(_) => prop_assert!(r < 4),
        }
    }

    /// Projection kills exactly the relation span, and `proj ∘ section = id`.
    #[test]
    fn quotient_invariants(
        (k, rels, probe) in field().prop_flat_map(|k| {
            (Just(k), proptest::collection::vec(vector(k, 6), 0..5), vector(k, 6))
        })
    ) {
        let q = build_quotient(k, 6, rels.clone());
        let as_matrix = Matrix::from_columns(6, rels.clone());
        prop_assert_eq!(q.quot_dim(), 6 - rank(&as_matrix));
        prop_assert!(q.proj().compose(q.section()).is_identity());
        for r in &rels {
            prop_assert!(q.kills(r));
        }
        let mut with_probe = rels.clone();
        with_probe.push(probe.clone());
        let in_span = rank(&Matrix::from_columns(6, with_probe)) == rank(&as_matrix);
        prop_assert_eq!(q.kills(&probe), in_span);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Translation module algebras over cyclic groups: products are associative and `Φ` is an isomorphism.
    #[test]
    fn cyclic_translation_products(n in 1usize..=3, k in field()) {
        let m = catalog::function_algebra_with_translation(k, &Group::cyclic(n));
        prop_assert!(check_hopf(m.hopf()).passed());
        prop_assert!(check_left_module_algebra(&m).passed());
        let diamond = kadison_diamond(&m).underlying;
        let odot = cm_odot(&m).underlying;
        prop_assert!(check_algebra(&diamond).passed());
        prop_assert!(check_algebra_iso(&iso_diamond_to_odot(&m), &diamond, &odot).passed());
    }
}
