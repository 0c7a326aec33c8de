//! Weyl-sum closed form of the Hilbert series, reduced to its numerator.
//!
//! With `x^v = t^{<v,μ>} s^{<v,h>}` for a cocharacter `h`, the series is
//!
//! ```text
//!   P = Σ_w (-1)^w x^{wρ} / (1 - t^u x^{wλ})  /  Σ_w (-1)^w x^{wρ}
//! ```
//!
//! Over the common denominator `∏_{ν ∈ Wλ} (1 - t^u x^ν)` the numerator of
//! the top sum is `A = Σ_w (-1)^w x^{wρ} ∏_{ν ≠ wλ} (1 - t^u x^ν)`; writing
//! `B` for the alternating sum and `E` for the product over the weights of
//! `V_λ` outside the orbit `Wλ`, the Hilbert numerator is `A E / B`, an exact
//! quotient in `Z[t^±, s^±]`. With `h = 0` this is the literal formula; with
//! `h` regular `B` never vanishes and `s = 1` recovers the limit along the
//! deformation `μ + εh`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lie::{pair, weyl_group, CocharVec, WeightVec};
use crate::model::WeightedFlagInput;
use crate::poly::LaurentPoly;
use crate::weights::weight_system;

/// Dense Laurent polynomial in `(t, s)` on a bounding box, lex order with `t` major.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct BiPoly {
    t_lo: i64,
    s_lo: i64,
    t_len: usize,
    s_len: usize,
    c: Vec<BigInt>,
}

impl BiPoly {
    fn boxed(t_lo: i64, t_hi: i64, s_lo: i64, s_hi: i64) -> Self {
        let t_len = (t_hi - t_lo + 1).max(0) as usize;
        let s_len = (s_hi - s_lo + 1).max(0) as usize;
        BiPoly {
            t_lo,
            s_lo,
            t_len,
            s_len,
            c: vec![BigInt::zero(); t_len * s_len],
        }
    }

    fn t_hi(&self) -> i64 {
        self.t_lo + self.t_len as i64 - 1
    }

    fn s_hi(&self) -> i64 {
        self.s_lo + self.s_len as i64 - 1
    }

    pub(crate) fn monomial(t: i64, s: i64, c: BigInt) -> Self {
        let mut p = Self::boxed(t, t, s, s);
        p.c[0] = c;
        p
    }

    fn idx(&self, t: i64, s: i64) -> Option<usize> {
        let dt = t - self.t_lo;
        let ds = s - self.s_lo;
        if dt < 0 || ds < 0 || dt as usize >= self.t_len || ds as usize >= self.s_len {
            None
        } else {
            Some(dt as usize * self.s_len + ds as usize)
        }
    }

    fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> + '_ {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| {
                (
                    self.t_lo + (i / self.s_len) as i64,
                    self.s_lo + (i % self.s_len) as i64,
                    c,
                )
            })
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.c.iter().all(|c| c.is_zero())
    }

    /// Shrinks the box to the support.
    fn trim(&self) -> BiPoly {
        let (mut tl, mut th, mut sl, mut sh) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
        for (t, s, _) in self.terms() {
            tl = tl.min(t);
            th = th.max(t);
            sl = sl.min(s);
            sh = sh.max(s);
        }
        if tl > th {
            return Self::boxed(0, -1, 0, -1);
        }
        let mut out = Self::boxed(tl, th, sl, sh);
        for (t, s, c) in self.terms() {
            let i = out.idx(t, s).unwrap();
            out.c[i] = c.clone();
        }
        out
    }

    /// Multiplies by `1 - t^a s^b`.
    pub(crate) fn mul_one_minus(&self, a: i64, b: i64) -> BiPoly {
        let mut out = Self::boxed(
            self.t_lo + a.min(0),
            self.t_hi() + a.max(0),
            self.s_lo + b.min(0),
            self.s_hi() + b.max(0),
        );
        for (t, s, c) in self.terms() {
            let i = out.idx(t, s).unwrap();
            out.c[i] += c;
            let j = out.idx(t + a, s + b).unwrap();
            out.c[j] -= c;
        }
        out
    }

    pub(crate) fn mul(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return Self::boxed(0, -1, 0, -1);
        }
        let mut out = Self::boxed(
            self.t_lo + other.t_lo,
            self.t_hi() + other.t_hi(),
            self.s_lo + other.s_lo,
            self.s_hi() + other.s_hi(),
        );
        let rhs: Vec<(i64, i64, &BigInt)> = other.terms().collect();
        for (t, s, c) in self.terms() {
            for &(t2, s2, c2) in &rhs {
                let i = out.idx(t + t2, s + s2).unwrap();
                out.c[i] += c * c2;
            }
        }
        out
    }

    pub(crate) fn add(&self, other: &BiPoly) -> BiPoly {
        if self.c.is_empty() {
            return other.clone();
        }
        if other.c.is_empty() {
            return self.clone();
        }
        let mut out = Self::boxed(
            self.t_lo.min(other.t_lo),
            self.t_hi().max(other.t_hi()),
            self.s_lo.min(other.s_lo),
            self.s_hi().max(other.s_hi()),
        );
        for p in [self, other] {
            for (t, s, c) in p.terms() {
                let i = out.idx(t, s).unwrap();
                out.c[i] += c;
            }
        }
        out
    }

    /// Lex-leading term: largest `t`, then largest `s`.
    fn leading(&self) -> Option<(i64, i64, BigInt)> {
        self.terms()
            .max_by_key(|&(t, s, _)| (t, s))
            .map(|(t, s, c)| (t, s, c.clone()))
    }

    /// Exact quotient `self / divisor`; fails on a nonzero remainder.
    pub(crate) fn div_exact(&self, divisor: &BiPoly) -> Result<BiPoly> {
        let a = self.trim();
        let b = divisor.trim();
        let (lt, ls, lc) = b.leading().ok_or(Error::DegenerateWeylDenominator)?;
        if a.is_zero() || a.c.is_empty() {
            return Ok(Self::boxed(0, -1, 0, -1));
        }
        let (qt_lo, qt_hi) = (a.t_lo - b.t_lo, a.t_hi() - b.t_hi());
        let (qs_lo, qs_hi) = (a.s_lo - b.s_lo, a.s_hi() - b.s_hi());
        if qt_lo > qt_hi || qs_lo > qs_hi {
            return Err(Error::NonExactDivision(
                "dividend smaller than divisor".into(),
            ));
        }
        let b_terms: Vec<(i64, i64, BigInt)> =
            b.terms().map(|(t, s, c)| (t, s, c.clone())).collect();
        let mut rem = a;
        let mut q = Self::boxed(qt_lo, qt_hi, qs_lo, qs_hi);
        for qt in (qt_lo..=qt_hi).rev() {
            for qs in (qs_lo..=qs_hi).rev() {
                let Some(i) = rem.idx(qt + lt, qs + ls) else {
                    continue;
                };
                if rem.c[i].is_zero() {
                    continue;
                }
                let (qc, r) = rem.c[i].div_rem(&lc);
                if !r.is_zero() {
                    return Err(Error::NonExactDivision(format!(
                        "coefficient at t^{} s^{} not divisible",
                        qt + lt,
                        qs + ls
                    )));
                }
                for (bt, bs, bc) in &b_terms {
                    let j = rem
                        .idx(qt + bt, qs + bs)
                        .expect("quotient box keeps products in range");
                    rem.c[j] -= &qc * bc;
                }
                let k = q.idx(qt, qs).unwrap();
                q.c[k] = qc;
            }
        }
        if !rem.is_zero() {
            return Err(Error::NonExactDivision("nonzero remainder".into()));
        }
        Ok(q)
    }

    /// Sets `s = 1`.
    pub(crate) fn collapse_s(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(t, _, c)| (t, c.clone())))
    }
}

fn product_of_binomials(exps: &[(i64, i64)]) -> BiPoly {
    exps.iter()
        .fold(BiPoly::monomial(0, 0, BigInt::one()), |acc, &(a, b)| {
            acc.mul_one_minus(a, b)
        })
}

/// The three pieces of the closed form before division.
pub(crate) struct ClosedFormParts {
    /// `A E`.
    pub(crate) dividend: BiPoly,
    /// The Weyl alternating sum `B`.
    pub(crate) denominator: BiPoly,
}

pub(crate) fn closed_form_parts(
    input: &WeightedFlagInput,
    h: &CocharVec,
) -> Result<ClosedFormParts> {
    let datum = input.datum()?;
    datum.check_cochar(h)?;
    let group = weyl_group(&datum)?;
    let ws = weight_system(&datum, &input.lambda)?;
    let mu = &input.mu;
    let u = input.u;
    let expo = |v: &WeightVec| -> Result<(i64, i64)> { Ok((pair(v, mu)?, pair(v, h)?)) };

    let orbit = datum.orbit(&input.lambda);
    let orbit_index: HashMap<&WeightVec, usize> =
        orbit.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut orbit_exps = Vec::with_capacity(orbit.len());
    for v in &orbit {
        let (a, b) = expo(v)?;
        orbit_exps.push((a + u, b));
    }
    let mut other_exps = Vec::new();
    for (v, &m) in ws.entries() {
        let extra = m - orbit_index.contains_key(v) as u64;
        let (a, b) = expo(v)?;
        for _ in 0..extra {
            other_exps.push((a + u, b));
        }
    }

    // Signed monomials x^{wρ}, grouped by wλ.
    let mut by_orbit: Vec<Vec<(i64, i64, i64)>> = vec![Vec::new(); orbit.len()];
    let mut alternating: Vec<(i64, i64, i64)> = Vec::with_capacity(group.len());
    for w in &group {
        let (a, b) = expo(&w.apply(&datum.rho))?;
        let nu = w.apply(&input.lambda);
        by_orbit[orbit_index[&nu]].push((a, b, w.sign));
        alternating.push((a, b, w.sign));
    }

    let numerator_part = (0..orbit.len())
        .into_par_iter()
        .map(|i| {
            let rest: Vec<(i64, i64)> = orbit_exps
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &e)| e)
                .collect();
            let signed = by_orbit[i]
                .iter()
                .map(|&(a, b, sg)| BiPoly::monomial(a, b, BigInt::from(sg)))
                .reduce(|x, y| x.add(&y))
                .unwrap_or_else(|| BiPoly::boxed(0, -1, 0, -1));
            signed.mul(&product_of_binomials(&rest))
        })
        .reduce(|| BiPoly::boxed(0, -1, 0, -1), |x, y| x.add(&y));

    let denominator = alternating
        .iter()
        .map(|&(a, b, sg)| BiPoly::monomial(a, b, BigInt::from(sg)))
        .reduce(|x, y| x.add(&y))
        .expect("Weyl group is never empty");

    let dividend = numerator_part.mul(&product_of_binomials(&other_exps));
    Ok(ClosedFormParts {
        dividend,
        denominator,
    })
}

/// Hilbert numerator by the closed form along the deformation direction `h`.
///
/// `h = 0` evaluates the formula literally and fails when the alternating
/// denominator vanishes.
pub fn closed_form_numerator(input: &WeightedFlagInput, h: &CocharVec) -> Result<LaurentPoly> {
    let parts = closed_form_parts(input, h)?;
    if parts.denominator.is_zero() {
        return Err(Error::DegenerateWeylDenominator);
    }
    let quotient = parts.dividend.div_exact(&parts.denominator)?;
    Ok(quotient.collapse_s())
}
