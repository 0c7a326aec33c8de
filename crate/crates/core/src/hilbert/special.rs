//! Specialized formulas for the G2 adjoint variety and for `Gr(2,6)`, checked
//! against the general engine.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{pair, Family, LieType, WeightVec};
use crate::model::{embedding_weights, WeightedFlagInput};
use crate::poly::{JsonInt, LaurentPoly, TruncatedSeries};

use super::hilbert;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct G2Check {
    /// Ambient weights equal `{u, u} ∪ {<α, μ> + u : α a root}`.
    pub denominator_ok: bool,
    pub k: i64,
    pub expected_k: i64,
    pub ok: bool,
}

/// Checks the G2 adjoint variety's denominator and canonical weight `-3u`.
///
/// Cone variables are ignored.
pub fn check_closed_form_g2(input: &WeightedFlagInput) -> Result<G2Check> {
    if input.lie_type != LieType::g2() || input.lambda != WeightVec(vec![3, 2]) {
        return Err(Error::InvalidInput(
            "expected G2 with highest weight ω2".into(),
        ));
    }
    let base = input.base();
    let datum = base.datum()?;
    let mut expected = vec![base.u, base.u];
    for alpha in &datum.positive_roots {
        let p = pair(alpha, &base.mu)?;
        expected.push(p + base.u);
        expected.push(base.u - p);
    }
    expected.sort_unstable();
    let ew = embedding_weights(&base)?;
    let denominator_ok = ew.weights == expected;
    let report = hilbert(&base)?;
    let expected_k = -3 * base.u;
    Ok(G2Check {
        denominator_ok,
        k: report.k,
        expected_k,
        ok: denominator_ok && report.k == expected_k,
    })
}

/// Index range for the `Σ_{(i,j)}` sums in `Q2` and `Q5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairRange {
    /// Ordered pairs with `i != j`.
    OrderedDistinct,
    /// All 36 ordered pairs, including `i = j`.
    AllOrdered,
}

/// Index range for `Q6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Q6Range {
    /// `i <= j`, as for `Q3` and `Q4`.
    WithDiagonal,
    /// `i < j`.
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gr26Reading {
    pub q2_q5: PairRange,
    pub q6: Q6Range,
}

impl Gr26Reading {
    /// All readings, in the order they are tried.
    pub fn all() -> [Gr26Reading; 4] {
        use PairRange::*;
        use Q6Range::*;
        [
            Gr26Reading {
                q2_q5: OrderedDistinct,
                q6: WithDiagonal,
            },
            Gr26Reading {
                q2_q5: AllOrdered,
                q6: WithDiagonal,
            },
            Gr26Reading {
                q2_q5: OrderedDistinct,
                q6: Strict,
            },
            Gr26Reading {
                q2_q5: AllOrdered,
                q6: Strict,
            },
        ]
    }
}

/// First series coefficient where a reading departs from the engine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesMismatch {
    pub exponent: i64,
    pub expected: JsonInt,
    pub got: JsonInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gr26Attempt {
    pub reading: Gr26Reading,
    pub mismatch: Option<SeriesMismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gr26Check {
    pub s: i64,
    pub u: i64,
    /// First reading whose series matches, if any.
    pub reading: Option<Gr26Reading>,
    pub attempts: Vec<Gr26Attempt>,
    pub k: i64,
    pub expected_k: i64,
    pub ok: bool,
}

/// Numerator of the specialized `Gr(2,6)` series under one reading.
pub fn gr26_numerator(a: &[i64; 6], u: i64, reading: Gr26Reading) -> LaurentPoly {
    let s: i64 = a.iter().sum();
    let mut terms: Vec<(i64, BigInt)> = vec![(0, BigInt::one()), (3 * s + 9 * u, BigInt::one())];
    let mut push = |e: i64, c: i64| terms.push((e, BigInt::from(c)));
    for i in 0..6 {
        for j in 0..6 {
            let (ai, aj) = (a[i], a[j]);
            if i < j {
                push(2 * u + s - ai - aj, -1);
            }
            if i <= j {
                push(4 * u + s + ai + aj, -1);
                push(5 * u + 2 * s - ai - aj, -1);
            }
            let in_pairs = match reading.q2_q5 {
                PairRange::OrderedDistinct => i != j,
                PairRange::AllOrdered => true,
            };
            if in_pairs {
                push(3 * u + s + ai - aj, 1);
                push(6 * u + 2 * s + ai - aj, 1);
            }
            let in_q6 = match reading.q6 {
                Q6Range::WithDiagonal => i <= j,
                Q6Range::Strict => i < j,
            };
            if in_q6 {
                push(7 * u + 2 * s + ai + aj, -1);
            }
        }
    }
    push(3 * u + s, -1);
    push(6 * u + 2 * s, -1);
    LaurentPoly::from_terms(terms)
}

fn first_mismatch(
    candidate: &LaurentPoly,
    reference: &TruncatedSeries,
    weights: &[i64],
) -> Option<SeriesMismatch> {
    if let Some(lo) = candidate.min_exponent().filter(|&lo| lo < 0) {
        return Some(SeriesMismatch {
            exponent: lo,
            expected: JsonInt(BigInt::zero()),
            got: JsonInt(candidate.coeff(lo)),
        });
    }
    let order = reference.order();
    let mut series = TruncatedSeries::zero(order);
    for (e, c) in candidate.terms() {
        series.add_at(e as usize, c);
    }
    for &w in weights {
        series.div_one_minus(w as usize);
    }
    (0..order)
        .find(|&e| series.coeff(e) != reference.coeff(e))
        .map(|e| SeriesMismatch {
            exponent: e as i64,
            expected: JsonInt(reference.coeff(e).clone()),
            got: JsonInt(series.coeff(e).clone()),
        })
}

/// Compares the specialized `Gr(2,6)` series with the engine up to `T = Σ w_i`
/// under each reading of the index ranges, and checks `k = -2s - 6u`.
pub fn check_closed_form_gr26(a: [i64; 6], u: i64) -> Result<Gr26Check> {
    let input = WeightedFlagInput::new(
        LieType::new(Family::A, 5)?,
        WeightVec(vec![1, 1, 0, 0, 0, 0]),
        crate::lie::CocharVec(a.to_vec()),
        u,
    )?;
    let report = hilbert(&input)?;
    let order = report.weights.sum().max(1) as usize;
    let reference = report.series(order);
    let mut attempts = Vec::new();
    let mut reading = None;
    for r in Gr26Reading::all() {
        let mismatch = first_mismatch(
            &gr26_numerator(&a, u, r),
            &reference,
            &report.weights.weights,
        );
        let matched = mismatch.is_none();
        attempts.push(Gr26Attempt {
            reading: r,
            mismatch,
        });
        if matched {
            reading = Some(r);
            break;
        }
    }
    let s: i64 = a.iter().sum();
    let expected_k = -2 * s - 6 * u;
    Ok(Gr26Check {
        s,
        u,
        reading,
        attempts,
        k: report.k,
        expected_k,
        ok: reading.is_some() && report.k == expected_k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gr26_numerator_at_zero() {
        let n = gr26_numerator(
            &[0; 6],
            1,
            Gr26Reading {
                q2_q5: PairRange::AllOrdered,
                q6: Q6Range::Strict,
            },
        );
        let coeffs: Vec<i64> = (0..10)
            .map(|e| i64::try_from(n.coeff(e)).unwrap())
            .collect();
        assert_eq!(coeffs, vec![1, 0, -15, 35, -21, -21, 35, -15, 0, 1]);
    }
}
