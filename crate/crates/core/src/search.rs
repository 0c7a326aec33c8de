//! Quasi-linear Calabi–Yau threefold sections of weighted flag varieties and
//! grid scans over `(μ, u)`.
//!
//! A section of degree `w` consumes one ambient variable of weight `w`. For
//! a `d`-dimensional `wΣ` with canonical weight `k`, the candidates are the
//! sub-multisets of the ambient weights of size `d - 3` summing to `-k`.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{hilbert, HilbertReport};
use crate::lie::{CocharVec, LieType, WeightVec};
use crate::model::{check_positivity, gcd_condition, singular_strata, WeightedFlagInput};
use crate::poly::IntPolynomial;

/// Variables of one weighted-projective stratum: all weights divisible by `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumHint {
    pub r: i64,
    pub weights: Vec<i64>,
    pub ambient_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateFamily {
    /// The (possibly coned) variety the section is taken in.
    pub base: WeightedFlagInput,
    /// Section degrees, ascending.
    pub degrees: Vec<i64>,
    /// Ambient weights of the threefold, ascending.
    pub ambient_weights: Vec<i64>,
    pub codim: usize,
    /// Canonical weight of `base`.
    pub k: i64,
    /// Whether the threefold's ambient weights pass the gcd condition.
    pub ambient_gcd_ok: bool,
    pub strata_hints: Vec<StratumHint>,
}

impl CandidateFamily {
    /// Re-checks `Σ degrees = -k` and the size constraint.
    pub fn is_consistent(&self, d: usize) -> bool {
        self.degrees.iter().sum::<i64>() + self.k == 0 && self.degrees.len() + 3 == d
    }
}

pub fn strata_hints(fam: &CandidateFamily) -> Vec<StratumHint> {
    hints_for(&fam.ambient_weights)
}

fn hints_for(weights: &[i64]) -> Vec<StratumHint> {
    singular_strata(weights)
        .into_iter()
        .map(|s| StratumHint {
            r: s.r,
            weights: s.indices.iter().map(|&i| weights[i]).collect(),
            ambient_dim: s.ambient_dim,
        })
        .collect()
}

/// Sub-multisets of `weights` (sorted ascending) of the given size and sum, in lexicographic order.
pub fn degree_multisets(weights: &[i64], size: usize, sum: i64) -> Vec<Vec<i64>> {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &w in weights {
        *counts.entry(w).or_insert(0) += 1;
    }
    let distinct: Vec<(i64, usize)> = counts.into_iter().collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn rec(
        distinct: &[(i64, usize)],
        from: usize,
        size: usize,
        sum: i64,
        current: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if current.len() == size {
            if sum == 0 {
                out.push(current.clone());
            }
            return;
        }
        let remaining = (size - current.len()) as i64;
        for (idx, &(w, avail)) in distinct.iter().enumerate().skip(from) {
            // Weights are positive and ascending, so later choices only grow the sum.
            if w * remaining > sum {
                break;
            }
            let used = current.iter().filter(|&&x| x == w).count();
            if used >= avail {
                continue;
            }
            current.push(w);
            rec(distinct, idx, size, sum - w, current, out);
            current.pop();
        }
    }
    rec(&distinct, 0, size, sum, &mut current, &mut out);
    out
}

/// Candidates for an already computed report of `input`.
pub fn sections_from_report(
    input: &WeightedFlagInput,
    report: &HilbertReport,
) -> Result<Vec<CandidateFamily>> {
    let d = report.weights.d;
    if d < 3 {
        return Err(Error::InvalidInput(format!("dimension {d} is below 3")));
    }
    let l = d - 3;
    let k = report.k;
    if l > 0 && k >= 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for degrees in degree_multisets(&report.weights.weights, l, -k) {
        let mut ambient = report.weights.weights.clone();
        for w in &degrees {
            let pos = ambient
                .iter()
                .position(|x| x == w)
                .expect("degree drawn from the weights");
            ambient.remove(pos);
        }
        let fam = CandidateFamily {
            base: input.clone(),
            ambient_gcd_ok: gcd_condition(&ambient),
            strata_hints: hints_for(&ambient),
            codim: report.weights.c,
            k,
            degrees,
            ambient_weights: ambient,
        };
        debug_assert!(fam.is_consistent(d));
        out.push(fam);
    }
    Ok(out)
}

/// All quasi-linear Calabi–Yau threefold sections of `input`.
pub fn find_sections(input: &WeightedFlagInput) -> Result<Vec<CandidateFamily>> {
    let report = hilbert(input)?;
    sections_from_report(input, &report)
}

fn default_cone_choices() -> Vec<i64> {
    vec![1]
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    #[serde(default)]
    pub max_cones: usize,
    #[serde(default = "default_cone_choices")]
    pub cone_weight_choices: Vec<i64>,
    /// Inclusive range per coordinate of `μ`.
    pub mu_box: Vec<(i64, i64)>,
    /// Inclusive range of `u`.
    pub u_range: (i64, i64),
    #[serde(default = "default_true")]
    pub dedupe: bool,
}

impl SearchConfig {
    pub fn new(mu_box: Vec<(i64, i64)>, u_range: (i64, i64)) -> Self {
        SearchConfig {
            max_cones: 0,
            cone_weight_choices: default_cone_choices(),
            mu_box,
            u_range,
            dedupe: true,
        }
    }

    /// Grid points in canonical order: `μ` lexicographic, then `u`.
    pub fn grid(&self) -> Vec<(CocharVec, i64)> {
        let mut mus: Vec<Vec<i64>> = vec![Vec::new()];
        for &(lo, hi) in &self.mu_box {
            mus = mus
                .into_iter()
                .flat_map(|prefix| {
                    (lo..=hi).map(move |x| {
                        let mut v = prefix.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        let (ulo, uhi) = self.u_range;
        mus.into_iter()
            .flat_map(|mu| (ulo..=uhi).map(move |u| (CocharVec(mu.clone()), u)))
            .collect()
    }

    /// Cone weight lists tried at each point: counts `0..=max_cones`, choices non-decreasing.
    pub fn cone_lists(&self) -> Vec<Vec<i64>> {
        let mut choices = self.cone_weight_choices.clone();
        choices.sort_unstable();
        choices.dedup();
        let mut out = vec![Vec::new()];
        let mut layer: Vec<Vec<i64>> = vec![Vec::new()];
        for _ in 0..self.max_cones {
            layer = layer
                .into_iter()
                .flat_map(|prefix| {
                    let last = prefix.last().copied().unwrap_or(i64::MIN);
                    choices.iter().filter(move |&&c| c >= last).map(move |&c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanHit {
    pub input: WeightedFlagInput,
    pub report: HilbertReport,
    pub candidates: Vec<CandidateFamily>,
}

const SCAN_CHUNK: usize = 64;

fn scan_point(
    lie_type: LieType,
    lambda: &WeightVec,
    mu: CocharVec,
    u: i64,
    cone_lists: &[Vec<i64>],
) -> Result<Vec<ScanHit>> {
    let base = match WeightedFlagInput::new(lie_type, lambda.clone(), mu, u) {
        Ok(b) => b,
        Err(_) => return Ok(Vec::new()),
    };
    if !check_positivity(&base)?.ok {
        return Ok(Vec::new());
    }
    let base_report = match hilbert(&base) {
        Ok(r) => r,
        Err(Error::InvalidInput(_)) => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    let mut hits = Vec::new();
    for cones in cone_lists {
        let input = base.clone().with_cones(cones)?;
        let report = base_report.with_cones(&input)?;
        if !report.well_formed.gcd_ok || report.weights.d < 3 {
            continue;
        }
        let candidates = sections_from_report(&input, &report)?;
        if !candidates.is_empty() {
            hits.push(ScanHit {
                input,
                report,
                candidates,
            });
        }
    }
    Ok(hits)
}

/// Scans the configured grid and hands each hit to `sink` in canonical
/// order, stopping early when `sink` returns `false`. Points are processed
/// in parallel chunks; the emitted sequence does not depend on scheduling.
pub fn scan_inputs_with<F>(
    lie_type: LieType,
    lambda: &WeightVec,
    cfg: &SearchConfig,
    mut sink: F,
) -> Result<()>
where
    F: FnMut(ScanHit) -> bool,
{
    if cfg.mu_box.len() != lie_type.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: lie_type.ambient_dim(),
            got: cfg.mu_box.len(),
        });
    }
    if cfg.cone_weight_choices.iter().any(|&a| a < 1) {
        return Err(Error::InvalidInput(
            "cone weights must be at least 1".into(),
        ));
    }
    let grid = cfg.grid();
    let cone_lists = cfg.cone_lists();
    let mut seen: HashSet<(Vec<i64>, IntPolynomial)> = HashSet::new();
    for chunk in grid.chunks(SCAN_CHUNK) {
        let results: Vec<Result<Vec<ScanHit>>> = chunk
            .par_iter()
            .map(|(mu, u)| scan_point(lie_type, lambda, mu.clone(), *u, &cone_lists))
            .collect();
        for hits in results {
            for hit in hits? {
                if cfg.dedupe
                    && !seen.insert((
                        hit.report.weights.weights.clone(),
                        hit.report.numerator.clone(),
                    ))
                {
                    continue;
                }
                if !sink(hit) {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

/// Collects the whole scan.
pub fn scan_inputs(
    lie_type: LieType,
    lambda: &WeightVec,
    cfg: &SearchConfig,
) -> Result<Vec<ScanHit>> {
    let mut out = Vec::new();
    scan_inputs_with(lie_type, lambda, cfg, |h| {
        out.push(h);
        true
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multisets_respect_multiplicity() {
        assert_eq!(
            degree_multisets(&[1, 2, 2, 3], 2, 4),
            vec![vec![1, 3], vec![2, 2]]
        );
        assert_eq!(degree_multisets(&[1, 2, 3], 2, 4), vec![vec![1, 3]]);
        assert_eq!(degree_multisets(&[1, 2], 0, 0), vec![Vec::<i64>::new()]);
        assert!(degree_multisets(&[1, 2], 3, 4).is_empty());
    }

    #[test]
    fn cone_lists_order() {
        let mut cfg = SearchConfig::new(vec![(0, 0); 2], (1, 1));
        cfg.max_cones = 2;
        cfg.cone_weight_choices = vec![2, 1];
        assert_eq!(
            cfg.cone_lists(),
            vec![vec![], vec![1], vec![2], vec![1, 1], vec![1, 2], vec![2, 2]]
        );
    }

    #[test]
    fn empty_u_range() {
        let cfg = SearchConfig::new(vec![(-1, 1); 2], (3, 2));
        assert!(cfg.grid().is_empty());
        assert!(scan_inputs(LieType::g2(), &WeightVec(vec![3, 2]), &cfg)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn coprime_weights_have_no_hints() {
        assert!(hints_for(&[1, 1, 1]).is_empty());
    }
}
