//! Hilbert series, Hilbert numerators and the invariants read off them.
//!
//! Two independent routes produce the numerator `N(t)` of
//! `P(t) = N(t) / ∏ (1 - t^{w_i})`: the Weyl-sum closed form
//! ([`hilbert_closed_form`]) and direct weight counting followed by
//! multiplication with the denominator ([`hilbert_oracle`],
//! [`numerator_from_oracle`]). [`hilbert`] picks the closed form and falls
//! back to counting when the alternating Weyl sum is degenerate.

mod closed_form;
mod oracle;
mod special;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use closed_form::closed_form_numerator;
pub use oracle::{
    default_order, hilbert_oracle, hilbert_oracle_capped, numerator_from_series, oracle_numerator,
    Reconstruction, DEFAULT_ORDER_CAP,
};
pub use special::{
    check_closed_form_g2, check_closed_form_gr26, gr26_numerator, G2Check, Gr26Attempt, Gr26Check,
    Gr26Reading, PairRange, Q6Range, SeriesMismatch,
};

use crate::error::{Error, Result};
use crate::lie::{pair, CocharVec};
use crate::model::{
    check_positivity, check_well_formed, embedding_weights, EmbeddingWeights, WeightedFlagInput,
    WellFormedness,
};
use crate::poly::{IntPolynomial, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    OracleReconstruction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub weights: EmbeddingWeights,
    pub numerator: IntPolynomial,
    /// Adjunction number `deg N`.
    pub q: i64,
    /// Canonical weight `q - Σ w_i`.
    pub k: i64,
    pub palindromic: bool,
    pub method: Method,
    /// Cocharacter along which the closed form was taken as a limit, if the
    /// literal alternating sum vanished.
    pub deformation: Option<CocharVec>,
    pub well_formed: WellFormedness,
}

impl HilbertReport {
    fn assemble(
        input: &WeightedFlagInput,
        numerator: IntPolynomial,
        method: Method,
        deformation: Option<CocharVec>,
    ) -> Result<Self> {
        let weights = embedding_weights(input)?;
        let q = numerator.degree().map(|d| d as i64).unwrap_or(0);
        let k = q - weights.sum();
        let palindromic = is_palindromic(&numerator, weights.c);
        let well_formed = check_well_formed(&weights);
        Ok(HilbertReport {
            weights,
            numerator,
            q,
            k,
            palindromic,
            method,
            deformation,
            well_formed,
        })
    }

    /// Report for `input`, assumed to differ from this report's input only
    /// by cone variables (which leave the numerator unchanged).
    pub fn with_cones(&self, input: &WeightedFlagInput) -> Result<Self> {
        Self::assemble(
            input,
            self.numerator.clone(),
            self.method,
            self.deformation.clone(),
        )
    }

    /// Series expansion `N / ∏(1 - t^{w_i})` to the given order.
    pub fn series(&self, order: usize) -> TruncatedSeries {
        let ws: Vec<usize> = self.weights.weights.iter().map(|&w| w as usize).collect();
        TruncatedSeries::from_rational(&self.numerator, &ws, order)
    }
}

fn require_positive(input: &WeightedFlagInput) -> Result<()> {
    input.validate()?;
    match check_positivity(input)?.witness {
        Some((w, v)) => Err(Error::NonPositiveWeight {
            weight: w.0,
            value: v,
        }),
        None => Ok(()),
    }
}

/// True when `μ` pairs to zero with every root, so no deformation is needed
/// to see that the alternating sum vanishes and the closed form has no
/// meaningful limit to take literally.
pub fn is_central(input: &WeightedFlagInput) -> Result<bool> {
    let datum = input.datum()?;
    for alpha in &datum.positive_roots {
        if pair(alpha, &input.mu)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn to_numerator(p: crate::poly::LaurentPoly) -> Result<IntPolynomial> {
    p.to_polynomial().ok_or_else(|| {
        Error::NonExactDivision("closed-form numerator has negative exponents".into())
    })
}

/// Closed-form report.
///
/// The literal formula is used when its alternating sum is nonzero. When it
/// vanishes for a non-central `μ`, the same quotient is computed in two
/// variables along the datum's regular cocharacter and specialized, which
/// gives the limit of the formula. Central `μ` is reported as
/// [`Error::DegenerateWeylDenominator`].
pub fn hilbert_closed_form(input: &WeightedFlagInput) -> Result<HilbertReport> {
    require_positive(input)?;
    if is_central(input)? {
        return Err(Error::DegenerateWeylDenominator);
    }
    let datum = input.datum()?;
    let zero = CocharVec::zero(datum.ambient_dim());
    match closed_form_numerator(input, &zero) {
        Ok(n) => HilbertReport::assemble(input, to_numerator(n)?, Method::ClosedForm, None),
        Err(Error::DegenerateWeylDenominator) => {
            hilbert_closed_form_along(input, &datum.regular_cochar)
        }
        Err(e) => Err(e),
    }
}

/// Closed form taken as a limit along a chosen cocharacter.
///
/// `h` must pair non-trivially with every root; this also covers central `μ`.
pub fn hilbert_closed_form_along(
    input: &WeightedFlagInput,
    h: &CocharVec,
) -> Result<HilbertReport> {
    require_positive(input)?;
    let n = closed_form_numerator(input, h)?;
    let deformation = if h.is_zero() { None } else { Some(h.clone()) };
    HilbertReport::assemble(input, to_numerator(n)?, Method::ClosedForm, deformation)
}

/// Report from a truncated oracle series; fails with
/// [`Error::TruncationInsufficient`] when the tail certificate does not hold.
pub fn numerator_from_oracle(
    input: &WeightedFlagInput,
    series: &TruncatedSeries,
) -> Result<HilbertReport> {
    let ew = embedding_weights(input)?;
    let rec = numerator_from_series(series, &ew.weights)?;
    HilbertReport::assemble(input, rec.numerator, Method::OracleReconstruction, None)
}

/// Oracle report with adaptive truncation.
pub fn hilbert_by_oracle(input: &WeightedFlagInput) -> Result<HilbertReport> {
    require_positive(input)?;
    let rec = oracle_numerator(input)?;
    HilbertReport::assemble(input, rec.numerator, Method::OracleReconstruction, None)
}

/// Closed form, falling back to the oracle for central `μ`.
pub fn hilbert(input: &WeightedFlagInput) -> Result<HilbertReport> {
    match hilbert_closed_form(input) {
        Err(Error::DegenerateWeylDenominator) => hilbert_by_oracle(input),
        other => other,
    }
}

/// `c_i = ε c_{q-i}` for all `i`, `ε = (-1)^codim`.
pub fn is_palindromic(numerator: &IntPolynomial, codim: usize) -> bool {
    let Some(q) = numerator.degree() else {
        return true;
    };
    let odd = codim % 2 == 1;
    (0..=q).all(|i| {
        let a = numerator.coeff(i);
        let b = numerator.coeff(q - i);
        if odd {
            a + b == BigInt::zero()
        } else {
            a == b
        }
    })
}

pub fn palindromy(report: &HilbertReport) -> bool {
    is_palindromic(&report.numerator, report.weights.c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalWeight {
    pub k: i64,
    /// Set when the embedding fails the gcd condition, where `O(k)` need not
    /// be the canonical sheaf.
    pub advisory: bool,
}

pub fn canonical_weight(report: &HilbertReport) -> CanonicalWeight {
    CanonicalWeight {
        k: report.q - report.weights.sum(),
        advisory: !report.well_formed.gcd_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn palindromy_signs() {
        assert!(is_palindromic(&IntPolynomial::one(), 0));
        assert!(is_palindromic(&IntPolynomial::from_i64(&[1, -2, 1]), 2));
        assert!(!is_palindromic(&IntPolynomial::from_i64(&[1, -2, 1]), 1));
        assert!(is_palindromic(&IntPolynomial::from_i64(&[1, 0, -1]), 1));
        assert!(!is_palindromic(&IntPolynomial::from_i64(&[1, 3, 2]), 2));
    }

    #[test]
    fn central_mu_is_degenerate() {
        let input = WeightedFlagInput::g2_adjoint([0, 0], 2);
        assert!(is_central(&input).unwrap());
        assert_eq!(
            hilbert_closed_form(&input).unwrap_err(),
            Error::DegenerateWeylDenominator
        );
        let r = hilbert(&input).unwrap();
        assert_eq!(r.method, Method::OracleReconstruction);
        assert_eq!(r.q, 22);
    }

    #[test]
    fn g2_example_numerator() {
        let input = WeightedFlagInput::g2_adjoint([-1, 1], 3);
        let r = hilbert(&input).unwrap();
        assert_eq!(r.method, Method::ClosedForm);
        assert_eq!((r.q, r.k), (33, -9));
        let head: Vec<i64> = (0..9)
            .map(|i| i64::try_from(r.numerator.coeff(i)).unwrap())
            .collect();
        assert_eq!(head, vec![1, 0, 0, 0, -3, -6, -8, 6, 21]);
        assert!(r.palindromic);
    }
}
