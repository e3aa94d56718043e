use proptest::prelude::*;
use theta_trunc::partitions::{crank_counts_enumerated, generalized_pentagonals, StatGrid};
use theta_trunc::qseries::{
    bivariate_crank_product, gaussian_binomial, pochhammer, PochhammerSpec,
};
use theta_trunc::{BigInt, BigSeries, Series};

const ORDER: usize = 12;

fn series() -> impl Strategy<Value = Series> {
    prop::collection::vec(-50i64..50, ORDER + 1).prop_map(|v| Series::from_i64s(ORDER, &v))
}

fn unit_series() -> impl Strategy<Value = Series> {
    (prop::bool::ANY, prop::collection::vec(-20i64..20, ORDER)).prop_map(|(neg, rest)| {
        let mut v = vec![if neg { -1 } else { 1 }];
        v.extend(rest);
        Series::from_i64s(ORDER, &v)
    })
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn multiplication_is_a_ring(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.mul(&Series::one(ORDER)).unwrap(), a);
    }

    #[test]
    fn units_invert(u in unit_series()) {
        let inv = u.invert().unwrap();
        prop_assert_eq!(u.mul(&inv).unwrap(), Series::one(ORDER));
        prop_assert_eq!(inv.invert().unwrap(), u);
    }

    #[test]
    fn gaussian_binomial_symmetry_and_pascal(n in 1usize..=30, k in 0usize..=30) {
        prop_assume!(k <= n);
        let order = n * n / 4 + 1;
        let g = |a: usize, b: i64| gaussian_binomial::<i128>(a, b, order).unwrap();
        prop_assert_eq!(g(n, k as i64), g(n, (n - k) as i64));
        if k >= 1 {
            // [n;k] = [n-1;k-1] + q^k [n-1;k]
            let rhs = g(n - 1, k as i64 - 1).add(&g(n - 1, k as i64).shift(k)).unwrap();
            prop_assert_eq!(g(n, k as i64), rhs);
        }
    }
}

#[test]
fn euler_product_is_the_pentagonal_series() {
    let order = 500;
    let product: BigSeries = pochhammer(PochhammerSpec::euler(), order).unwrap();
    let mut expected = vec![0i64; order + 1];
    for (idx, e) in generalized_pentagonals(order).into_iter().enumerate() {
        // order: 0, then pairs j(3j-1)/2, j(3j+1)/2 for j = 1, 2, ...
        let j = idx.div_ceil(2);
        expected[e] = if j % 2 == 0 { 1 } else { -1 };
    }
    let expected: Vec<BigInt> = expected.into_iter().map(BigInt::from).collect();
    assert_eq!(product.coeffs(), expected.as_slice());
}

#[test]
fn crank_product_matches_enumeration() {
    let q_order = 25;
    let product = bivariate_crank_product::<i128>(q_order, q_order).unwrap();
    let counts: StatGrid<i128> = crank_counts_enumerated(q_order, 45).unwrap();
    for n in 2..=q_order {
        for m in -(n as i64)..=n as i64 {
            assert_eq!(product.coeff(n, m), counts.get(m, n), "n={n} m={m}");
        }
    }
}

#[test]
fn i128_and_bigint_agree_where_both_fit() {
    let a: Series = theta_trunc::gf::crank_nonneg_squares(150).unwrap();
    let b: BigSeries = theta_trunc::gf::crank_nonneg_squares(150).unwrap();
    let a: Vec<String> = a.coeffs().iter().map(ToString::to_string).collect();
    let b: Vec<String> = b.coeffs().iter().map(ToString::to_string).collect();
    assert_eq!(a, b);
}
