use proptest::prelude::*;
use qracah::field::make_rational;
use qracah::matrix::{solve_in_span, ShapeClass};
use qracah::{Field, Matrix, MatrixError, PrimeField, RationalField};

const P: u64 = 101;

fn field() -> PrimeField {
    PrimeField::new(P).unwrap()
}

fn square(n: usize) -> impl Strategy<Value = Matrix<PrimeField>> {
    proptest::collection::vec(0..P as i64, n * n)
        .prop_map(move |v| Matrix::from_fn(field(), n, |i, j| field().element(v[i * n + j])))
}

fn triple() -> impl Strategy<Value = (Matrix<PrimeField>, Matrix<PrimeField>, Matrix<PrimeField>)> {
    (1usize..5).prop_flat_map(|n| (square(n), square(n), square(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn product_laws((x, y, z) in triple()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!((&x * &y).transpose(), &y.transpose() * &x.transpose());
        prop_assert_eq!((&x * &y).trace(), (&y * &x).trace());
        let id = Matrix::identity(field(), x.order());
        prop_assert_eq!(&x * &id, x.clone());
    }

    #[test]
    fn inverse_or_singular((x, _, _) in triple()) {
        let n = x.order();
        match x.inverse() {
            Ok(xi) => {
                prop_assert_eq!(x.rank(), n);
                prop_assert_eq!(&x * &xi, Matrix::identity(field(), n));
                prop_assert_eq!(&xi * &x, Matrix::identity(field(), n));
            }
            Err(MatrixError::Singular) => prop_assert!(x.rank() < n),
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn powers_compose((x, _, _) in triple(), m in 0u32..5, k in 0u32..5) {
        prop_assert_eq!(&x.pow(m) * &x.pow(k), x.pow(m + k));
    }
}

#[test]
fn mismatched_orders_are_errors() {
    let a = Matrix::identity(field(), 2);
    let b = Matrix::identity(field(), 3);
    assert!(a.mat_mul(&b).is_err());
    assert!(a.mat_add(&b).is_err());
    assert!(Matrix::from_rows(field(), vec![vec![field().one()], vec![]]).is_err());
}

#[test]
fn shapes() {
    let f = RationalField;
    let r = |n| f.from_int(n);
    let lower = Matrix::from_rows(f, vec![vec![r(1), r(0)], vec![r(1), r(2)]]).unwrap();
    assert_eq!(lower.classify_shape(), ShapeClass::LowerBidiagonal);
    assert_eq!(lower.transpose().classify_shape(), ShapeClass::UpperBidiagonal);
    let trid = &lower + &lower.transpose();
    assert!(trid.is_irreducible_tridiagonal());
    assert_eq!(Matrix::identity(f, 3).classify_shape(), ShapeClass::Diagonal);
}

#[test]
fn span_membership() {
    let f = RationalField;
    let half = make_rational(1, 2).unwrap();
    let cols = vec![vec![f.one(), f.zero(), f.one()], vec![f.zero(), f.one(), f.one()]];
    let target = vec![half.clone(), f.from_int(3), half.clone() + &f.from_int(3)];
    let coeffs = solve_in_span(&f, &cols, &target).unwrap();
    assert_eq!(coeffs, vec![half, f.from_int(3)]);
    assert!(solve_in_span(&f, &cols, &[f.one(), f.zero(), f.zero()]).is_none());
}

#[test]
fn tau_polynomial_at_roots() {
    // tau_i(x) = prod_{k<i}(x - r_k) vanishes on diag(r_0, r_1) for i = 2.
    let f = RationalField;
    let roots = vec![f.from_int(2), f.from_int(5)];
    let x = Matrix::diagonal(f, &roots);
    let p = x.eval_tau_polynomial(&roots, &[f.zero(), f.zero(), f.one()]).unwrap();
    assert!(p.is_zero());
}
