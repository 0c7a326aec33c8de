//! Hilbert series by direct weight counting, independent of the Weyl character formula.
//!
//! Degree `m` of the coordinate ring is `V_{mλ}^*`; a weight `β` of `V_{mλ}`
//! contributes `t^{m u - <β, μ>}`. Conjugating `-μ` to a dominant `η` keeps
//! every pairing's multiset, so the terms below order `T` are exactly the
//! weights with `<β, η> > m u - T`, which `weights_above` enumerates without
//! building the full representation.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lie::{pair, weyl_group};
use crate::model::{check_positivity, embedding_weights, WeightedFlagInput};
use crate::poly::{IntPolynomial, TruncatedSeries};
use crate::weights::pairing_distribution_above;

/// Largest truncation order the oracle accepts.
pub const DEFAULT_ORDER_CAP: usize = 4096;

pub fn hilbert_oracle(input: &WeightedFlagInput, order: usize) -> Result<TruncatedSeries> {
    hilbert_oracle_capped(input, order, DEFAULT_ORDER_CAP)
}

pub fn hilbert_oracle_capped(
    input: &WeightedFlagInput,
    order: usize,
    cap: usize,
) -> Result<TruncatedSeries> {
    if order > cap {
        return Err(Error::TruncationTooLarge {
            requested: order,
            cap,
        });
    }
    input.validate()?;
    let positivity = check_positivity(input)?;
    if let Some((w, v)) = positivity.witness {
        return Err(Error::NonPositiveWeight {
            weight: w.0,
            value: v,
        });
    }
    let datum = input.datum()?;
    let eta = datum.dominant_cochar(&input.mu.neg());
    let group = weyl_group(&datum)?;
    let u = input.u;
    // Every degree-m term has exponent at least m * (smallest orbit weight).
    let min_step = datum
        .orbit(&input.lambda)
        .iter()
        .map(|v| pair(v, &input.mu).map(|p| p + u))
        .collect::<Result<Vec<i64>>>()?
        .into_iter()
        .min()
        .unwrap_or(u)
        .max(1);
    let t = order as i64;
    let mut series = TruncatedSeries::zero(order);
    let mut m = 0i64;
    while m * min_step < t {
        let lambda_m = input.lambda.scale(m);
        let window = pairing_distribution_above(&datum, &group, &lambda_m, &eta, m * u - t)?;
        for (p, mult) in window {
            let e = m * u - p;
            debug_assert!((0..t).contains(&e));
            series.add_at(e as usize, &BigInt::from(mult));
        }
        m += 1;
    }
    for &a in &input.cone_weights {
        series.div_one_minus(a as usize);
    }
    Ok(series)
}

/// Result of multiplying a truncated series by `∏(1 - t^{w_i})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reconstruction {
    pub numerator: IntPolynomial,
    pub order: usize,
}

/// Recovers the numerator from a truncated series, certifying that the last
/// `max w` coefficients below the truncation vanish.
pub fn numerator_from_series(series: &TruncatedSeries, weights: &[i64]) -> Result<Reconstruction> {
    let order = series.order();
    let total: i64 = weights.iter().sum();
    let max = weights.iter().copied().max().unwrap_or(0);
    if (order as i64) < total + max {
        return Err(Error::TruncationInsufficient(order));
    }
    let mut s = series.clone();
    for &w in weights {
        s.mul_one_minus(w as usize);
    }
    let tail_start = order - max as usize;
    if s.coeffs()[tail_start..]
        .iter()
        .any(|c| c != &BigInt::from(0))
    {
        return Err(Error::TruncationInsufficient(order));
    }
    Ok(Reconstruction {
        numerator: s.into_polynomial(),
        order,
    })
}

/// Default truncation `Σ w + max w + 1`.
pub fn default_order(weights: &[i64]) -> usize {
    (weights.iter().sum::<i64>() + weights.iter().copied().max().unwrap_or(0) + 1) as usize
}

/// Oracle numerator with adaptive truncation: the order doubles on a
/// non-vanishing tail, up to eight times the default.
pub fn oracle_numerator(input: &WeightedFlagInput) -> Result<Reconstruction> {
    let ew = embedding_weights(input)?;
    let base = default_order(&ew.weights);
    let mut order = base;
    loop {
        let series = hilbert_oracle(input, order)?;
        match numerator_from_series(&series, &ew.weights) {
            Err(Error::TruncationInsufficient(_)) if order * 2 <= base * 8 => order *= 2,
            other => return other,
        }
    }
}
