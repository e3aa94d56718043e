//! Named generating functions and tail series, assembled from the
//! [`qseries`](crate::qseries) primitives.
//!
//! Each builder returns its series modulo `q^(order+1)`. Sums over an index
//! stop at the first term whose lowest possible exponent exceeds the order.

use crate::coeff::Coeff;
use crate::error::Result;
use crate::qseries::{
    eta_quotient, gaussian_binomial, pochhammer, sum_until, PochhammerSpec as Poch, TruncatedSeries,
};

type S<T> = TruncatedSeries<T>;

/// `1/(q;q)_∞`.
pub fn partition_gf<T: Coeff>(order: usize) -> Result<S<T>> {
    eta_quotient(&[], &[Poch::euler()], order)
}

/// `1/(q;q)_∞ · Σ sign·q^exp` over the given sparse terms.
pub fn over_euler<T, I>(order: usize, terms: I) -> Result<S<T>>
where
    T: Coeff,
    I: IntoIterator<Item = (usize, i64)>,
{
    S::sparse(order, terms)?.mul(&partition_gf(order)?)
}

/// Inverse of a product of q-Pochhammer symbols.
fn inv_poch<T: Coeff>(specs: &[Poch], order: usize) -> Result<S<T>> {
    eta_quotient(&[], specs, order)
}

fn alt(j: usize) -> i64 {
    if j.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Terms `(exp(j), sign(j))` for `j` in `range` while `exp(j) ≤ order`.
pub fn theta_terms(
    order: usize,
    range: std::ops::RangeInclusive<usize>,
    exp: impl Fn(usize) -> usize,
    sign: impl Fn(usize) -> i64,
) -> Vec<(usize, i64)> {
    range
        .map(|j| (exp(j), sign(j)))
        .take_while(|&(e, _)| e <= order)
        .collect()
}

// ---- rank ----------------------------------------------------------------

/// `Σ N(n) q^n` as `1/(q;q)_∞ · Σ_{n≥0} (-1)^n q^{n(3n+1)/2}`.
pub fn rank_nonneg_theta<T: Coeff>(order: usize) -> Result<S<T>> {
    over_euler(
        order,
        theta_terms(order, 0..=order, |n| n * (3 * n + 1) / 2, alt),
    )
}

/// `Σ N(n) q^n` as `1 + Σ_{n≥1} q^n [2n-1; n-1]`.
pub fn rank_nonneg_binomial<T: Coeff>(order: usize) -> Result<S<T>> {
    let sum = sum_until(order, 1, |n| {
        (n <= order)
            .then(|| gaussian_binomial::<T>(2 * n - 1, n as i64 - 1, order).map(|g| g.shift(n)))
    })?;
    sum.add(&S::one(order))
}

/// `Σ R(n) q^n` as `1/(q;q)_∞ · Σ_{n≥1} (-1)^{n+1} q^{n(3n+1)/2}`.
pub fn rank_pos_theta<T: Coeff>(order: usize) -> Result<S<T>> {
    over_euler(
        order,
        theta_terms(order, 1..=order, |n| n * (3 * n + 1) / 2, |n| -alt(n)),
    )
}

/// `Σ R(n) q^n` as `Σ_{n≥1} q^{n+1} [2n; n-1]`.
pub fn rank_pos_binomial<T: Coeff>(order: usize) -> Result<S<T>> {
    sum_until(order, 1, |n| {
        (n < order)
            .then(|| gaussian_binomial::<T>(2 * n, n as i64 - 1, order).map(|g| g.shift(n + 1)))
    })
}

/// `Σ_n N(m, n) q^n` for a fixed rank `m`.
///
/// Uses `1/(q;q)_∞ · Σ_{n≥1} (-1)^{n-1} q^{n(3n-1)/2 + |m|n}(1 - q^n)` together
/// with the symmetry `N(m,n) = N(-m,n)`; the formula misses the empty partition,
/// which is added back for `m = 0`.
pub fn rank_column<T: Coeff>(m: i64, order: usize) -> Result<S<T>> {
    let a = m.unsigned_abs() as usize;
    let mut terms = Vec::new();
    for n in 1.. {
        let e = n * (3 * n - 1) / 2 + a * n;
        if e > order {
            break;
        }
        let s = -alt(n);
        terms.push((e, s));
        terms.push((e + n, -s));
    }
    let mut col = over_euler(order, terms)?;
    if m == 0 {
        col = col.add(&S::one(order))?;
    }
    Ok(col)
}

// ---- crank ---------------------------------------------------------------

/// `Σ C(n) q^n` as `1/(q;q)_∞ · Σ_{n≥0} (-1)^n q^{n(n+1)/2}`.
pub fn crank_nonneg_theta<T: Coeff>(order: usize) -> Result<S<T>> {
    over_euler(
        order,
        theta_terms(order, 0..=order, |n| n * (n + 1) / 2, alt),
    )
}

/// `Σ_{n≥0} q^{n(n+1)} / (q;q)_n²`.
pub fn crank_nonneg_squares<T: Coeff>(order: usize) -> Result<S<T>> {
    sum_until(order, 0, |n| {
        let e = n * (n + 1);
        (e <= order).then(|| {
            inv_poch::<T>(&[Poch::q_factorial(n), Poch::q_factorial(n)], order).map(|s| s.shift(e))
        })
    })
}

/// `Σ D(n) q^n` as `1/(q;q)_∞ · Σ_{n≥1} (-1)^{n-1} q^{n(n+1)/2}`.
pub fn crank_pos_theta<T: Coeff>(order: usize) -> Result<S<T>> {
    over_euler(
        order,
        theta_terms(order, 1..=order, |n| n * (n + 1) / 2, |n| -alt(n)),
    )
}

/// `Σ_{n≥0} q^{(n+1)²} / ((q;q)_n (q;q)_{n+1})`.
pub fn crank_pos_squares<T: Coeff>(order: usize) -> Result<S<T>> {
    sum_until(order, 0, |n| {
        let e = (n + 1) * (n + 1);
        (e <= order).then(|| {
            inv_poch::<T>(&[Poch::q_factorial(n), Poch::q_factorial(n + 1)], order)
                .map(|s| s.shift(e))
        })
    })
}

// ---- Garden of Eden ------------------------------------------------------

/// `Σ ge(n) q^n` as `1/(q;q)_∞ · Σ_{n≥1} (-1)^{n-1} q^{3n(n+1)/2}`.
pub fn eden_theta<T: Coeff>(order: usize) -> Result<S<T>> {
    over_euler(
        order,
        theta_terms(order, 1..=order, |n| 3 * n * (n + 1) / 2, |n| -alt(n)),
    )
}

/// `1/(q,q²;q³)_∞ · Σ_{n≥0} q^{3(n+1)²} / ((q³;q³)_n (q³;q³)_{n+1})`.
pub fn eden_product<T: Coeff>(order: usize) -> Result<S<T>> {
    let sum = sum_until(order, 0, |n| {
        let e = 3 * (n + 1) * (n + 1);
        (e <= order).then(|| {
            inv_poch::<T>(&[Poch::finite(3, 3, n), Poch::finite(3, 3, n + 1)], order)
                .map(|s| s.shift(e))
        })
    })?;
    sum.mul(&no_multiple_of_three(order)?)
}

/// `1/(q,q²;q³)_∞`: partitions with no part divisible by 3.
pub fn no_multiple_of_three<T: Coeff>(order: usize) -> Result<S<T>> {
    eta_quotient(&[], &[Poch::infinite(1, 3), Poch::infinite(2, 3)], order)
}

// ---- truncated sums and tails --------------------------------------------

/// `Σ_{n≥1} q^{C(k,2)+(k+1)n} / (q;q)_n · [n-1; k-1]`.
pub fn least_gap_sum<T: Coeff>(k: usize, order: usize) -> Result<S<T>> {
    let base = k * k.saturating_sub(1) / 2;
    sum_until(order, 1, |n| {
        let e = base + (k + 1) * n;
        (e <= order).then(|| {
            let g = gaussian_binomial::<T>(n - 1, k as i64 - 1, order)?;
            let inv = inv_poch::<T>(&[Poch::q_factorial(n)], order)?;
            Ok(g.mul(&inv)?.shift(e))
        })
    })
}

/// `q^lead/(q,q³;q³)_∞ · Σ_{j≥0} q^{j(3j+3k+2)} / ((q³;q³)_j (q²;q³)_{k+j})`.
///
/// With `lead = k(3k+1)/2` this is the remainder in the truncated form of the
/// non-negative rank identity.
pub fn tail_two_mod_three<T: Coeff>(lead: usize, k: usize, order: usize) -> Result<S<T>> {
    if lead > order {
        return Ok(S::zero(order));
    }
    let inner = sum_until(order, 0, |j| {
        let e = j * (3 * j + 3 * k + 2);
        (lead + e <= order).then(|| {
            inv_poch::<T>(&[Poch::finite(3, 3, j), Poch::finite(2, 3, k + j)], order)
                .map(|s| s.shift(e))
        })
    })?;
    let pre = eta_quotient::<T>(&[], &[Poch::infinite(1, 3), Poch::infinite(3, 3)], order)?;
    Ok(inner.mul(&pre)?.shift(lead))
}

/// `q^lead/(q²,q³;q³)_∞ · Σ_{j≥0} q^{j(3j+3k+4)} / ((q³;q³)_j (q;q³)_{k+j+1})`.
///
/// With `lead = k(3k+5)/2 + 1` this is the second remainder series.
pub fn tail_one_mod_three<T: Coeff>(lead: usize, k: usize, order: usize) -> Result<S<T>> {
    if lead > order {
        return Ok(S::zero(order));
    }
    let inner = sum_until(order, 0, |j| {
        let e = j * (3 * j + 3 * k + 4);
        (lead + e <= order).then(|| {
            inv_poch::<T>(
                &[Poch::finite(3, 3, j), Poch::finite(1, 3, k + j + 1)],
                order,
            )
            .map(|s| s.shift(e))
        })
    })?;
    let pre = eta_quotient::<T>(&[], &[Poch::infinite(2, 3), Poch::infinite(3, 3)], order)?;
    Ok(inner.mul(&pre)?.shift(lead))
}

/// `q^lead · Σ_{n≥0} q^{n(n+k+1)} / ((q;q)_n (q;q)_{n+k})`.
pub fn tail_squares<T: Coeff>(lead: usize, k: usize, order: usize) -> Result<S<T>> {
    if lead > order {
        return Ok(S::zero(order));
    }
    let inner = sum_until(order, 0, |n| {
        let e = n * (n + k + 1);
        (lead + e <= order).then(|| {
            inv_poch::<T>(&[Poch::q_factorial(n), Poch::q_factorial(n + k)], order)
                .map(|s| s.shift(e))
        })
    })?;
    Ok(inner.shift(lead))
}

/// `q^lead/(q,q²;q³)_∞ · Σ_{n≥0} q^{3n(n+k+2)} / ((q³;q³)_n (q³;q³)_{n+k+1})`.
pub fn tail_eden<T: Coeff>(lead: usize, k: usize, order: usize) -> Result<S<T>> {
    if lead > order {
        return Ok(S::zero(order));
    }
    let inner = sum_until(order, 0, |n| {
        let e = 3 * n * (n + k + 2);
        (lead + e <= order).then(|| {
            inv_poch::<T>(
                &[Poch::finite(3, 3, n), Poch::finite(3, 3, n + k + 1)],
                order,
            )
            .map(|s| s.shift(e))
        })
    })?;
    Ok(inner.mul(&no_multiple_of_three(order)?)?.shift(lead))
}

/// `Σ_{n=0}^{k} (-1)^n q^{C(n+1,2)+kn} (q;q)_k/(q;q)_n`, a polynomial of degree `k(3k+1)/2`.
///
/// The quotient `(q;q)_k/(q;q)_n` is expanded as the finite product `(q^{n+1};q)_{k-n}`.
pub fn shanks_product_side<T: Coeff>(k: usize, order: usize) -> Result<S<T>> {
    sum_until(order, 0, |n| {
        (n <= k).then(|| {
            let e = n * (n + 1) / 2 + k * n;
            let poly = pochhammer::<T>(Poch::finite(n + 1, 1, k - n), order)?;
            Ok(poly.shift(e).signed(n))
        })
    })
}

/// `1 + Σ_{n=1}^{k} (-1)^n (q^{n(3n+1)/2} + q^{n(3n-1)/2})`.
pub fn shanks_theta_side<T: Coeff>(k: usize, order: usize) -> Result<S<T>> {
    let mut terms = vec![(0, 1)];
    for n in 1..=k {
        terms.push((n * (3 * n + 1) / 2, alt(n)));
        terms.push((n * (3 * n - 1) / 2, alt(n)));
    }
    S::sparse(order, terms)
}
