//! Weight systems of irreducible representations via Freudenthal's recursion.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lie::{pair, weyl_dim, CocharVec, RootDatum, WeightVec, WeylElement};
use crate::poly::LaurentPoly;

/// Default cap on `dim V_λ` for a full weight system.
pub const DEFAULT_DIM_CAP: u64 = 10_000_000;

/// Weights of `V_λ` with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    entries: BTreeMap<WeightVec, u64>,
    highest: WeightVec,
}

impl WeightSystem {
    pub fn highest(&self) -> &WeightVec {
        &self.highest
    }

    pub fn entries(&self) -> &BTreeMap<WeightVec, u64> {
        &self.entries
    }

    pub fn multiplicity(&self, w: &WeightVec) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    /// Total multiplicity, i.e. `dim V_λ`.
    pub fn dim(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Weights listed with repetition according to multiplicity, sorted.
    pub fn expanded(&self) -> Vec<WeightVec> {
        self.entries
            .iter()
            .flat_map(|(w, &m)| std::iter::repeat_n(w.clone(), m as usize))
            .collect()
    }
}

pub fn weight_system(datum: &RootDatum, lambda: &WeightVec) -> Result<WeightSystem> {
    weight_system_capped(datum, lambda, DEFAULT_DIM_CAP)
}

/// Dominant weights below `λ`, reached through chains of dominant weights
/// that differ by positive roots. Sorted by height of `λ - μ`, then lexicographically.
pub fn dominant_weights(datum: &RootDatum, lambda: &WeightVec) -> Vec<WeightVec> {
    let mut seen: BTreeSet<WeightVec> = BTreeSet::from([lambda.clone()]);
    let mut stack = vec![lambda.clone()];
    while let Some(mu) = stack.pop() {
        for alpha in &datum.positive_roots {
            let nu = mu.sub(alpha);
            if datum.is_dominant(&nu) && seen.insert(nu.clone()) {
                stack.push(nu);
            }
        }
    }
    let mut out: Vec<WeightVec> = seen.into_iter().collect();
    out.sort_by_key(|mu| (datum.height_of(&lambda.sub(mu)), mu.clone()));
    out
}

/// Freudenthal's denominator `(λ+ρ, λ+ρ) - (μ+ρ, μ+ρ) = (λ-μ, λ+μ+2ρ)`.
fn freudenthal_denominator(
    datum: &RootDatum,
    lambda: &WeightVec,
    mu: &WeightVec,
    two_rho: &WeightVec,
) -> i64 {
    datum.inner(&lambda.sub(mu), &lambda.add(mu).add(two_rho))
}

/// Full weight system: Freudenthal over dominant weights, then Weyl orbits.
pub fn weight_system_capped(
    datum: &RootDatum,
    lambda: &WeightVec,
    cap: u64,
) -> Result<WeightSystem> {
    let dim = weyl_dim(datum, lambda)?;
    if dim > cap.into() {
        return Err(Error::RepresentationTooLarge {
            dim: dim.to_string(),
            cap,
        });
    }
    let two_rho = datum.two_rho();
    let dominant = dominant_weights(datum, lambda);
    let mut mults: HashMap<WeightVec, u64> = HashMap::new();
    for mu in &dominant {
        if mu == lambda {
            mults.insert(mu.clone(), 1);
            continue;
        }
        let mut sum: i128 = 0;
        for alpha in &datum.positive_roots {
            let mut k = 1;
            loop {
                let v = mu.add_multiple(alpha, k);
                match mults.get(&datum.dominant_conjugate(&v)) {
                    Some(&m) => sum += m as i128 * datum.inner(&v, alpha) as i128,
                    None => break,
                }
                k += 1;
            }
        }
        let den = freudenthal_denominator(datum, lambda, mu, &two_rho) as i128;
        let num = 2 * sum;
        if den <= 0 || num % den != 0 {
            return Err(Error::NonExactDivision(format!(
                "Freudenthal step at {:?}",
                mu.0
            )));
        }
        mults.insert(mu.clone(), (num / den) as u64);
    }
    let mut entries = BTreeMap::new();
    for mu in &dominant {
        let m = mults[mu];
        for w in datum.orbit(mu) {
            entries.insert(w, m);
        }
    }
    Ok(WeightSystem {
        entries,
        highest: lambda.clone(),
    })
}

/// All weights `β` of `V_λ` with `<β, η> > threshold`, with multiplicities.
///
/// `η` must be dominant (`<α_i, η> >= 0`), which makes the window closed
/// under adding positive roots; Freudenthal's recursion then runs on the
/// window alone, level by level in the depth below `λ`.
pub fn weights_above(
    datum: &RootDatum,
    lambda: &WeightVec,
    eta: &CocharVec,
    threshold: i64,
) -> Result<HashMap<WeightVec, u64>> {
    datum.check_weight(lambda)?;
    datum.check_cochar(eta)?;
    if !datum.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    debug_assert!(datum
        .simple_roots
        .iter()
        .all(|a| pair(a, eta).unwrap() >= 0));
    let mut mults: HashMap<WeightVec, u64> = HashMap::new();
    if pair(lambda, eta)? <= threshold {
        return Ok(mults);
    }
    let two_rho = datum.two_rho();
    mults.insert(lambda.clone(), 1);
    let mut level = vec![lambda.clone()];
    while !level.is_empty() {
        let candidates: BTreeSet<WeightVec> = level
            .iter()
            .flat_map(|b| datum.simple_roots.iter().map(move |a| b.sub(a)))
            .filter(|c| pair(c, eta).unwrap() > threshold)
            .collect();
        let mut next = Vec::new();
        for beta in candidates {
            let mut sum: i128 = 0;
            for alpha in &datum.positive_roots {
                let mut k = 1;
                loop {
                    let v = beta.add_multiple(alpha, k);
                    match mults.get(&v) {
                        Some(&m) => {
                            let term = (m as i128)
                                .checked_mul(datum.inner(&v, alpha) as i128)
                                .ok_or(Error::Overflow("Freudenthal sum"))?;
                            sum = sum
                                .checked_add(term)
                                .ok_or(Error::Overflow("Freudenthal sum"))?;
                        }
                        None => break,
                    }
                    k += 1;
                }
            }
            let num = 2 * sum;
            let den = freudenthal_denominator(datum, lambda, &beta, &two_rho) as i128;
            let m = if num == 0 {
                0
            } else if den > 0 && num % den == 0 && num > 0 {
                (num / den)
                    .to_u64()
                    .ok_or(Error::Overflow("weight multiplicity"))?
            } else {
                return Err(Error::NonExactDivision(format!(
                    "Freudenthal step at {:?}",
                    beta.0
                )));
            };
            if m > 0 {
                next.push((beta, m));
            }
        }
        level = next.iter().map(|(b, _)| b.clone()).collect();
        mults.extend(next);
    }
    Ok(mults)
}

/// `Σ mult(β)` over the weights `β` of `V_λ` with `<β, η> > threshold`,
/// grouped by the value of `<β, η>`.
///
/// Same window as [`weights_above`], but only dominant weights carry a
/// Freudenthal step; each dominant weight then contributes its whole orbit
/// through the precomputed cocharacters `w^{-1} η`, which avoids
/// materializing the orbits.
pub fn pairing_distribution_above(
    datum: &RootDatum,
    group: &[WeylElement],
    lambda: &WeightVec,
    eta: &CocharVec,
    threshold: i64,
) -> Result<BTreeMap<i64, u128>> {
    datum.check_weight(lambda)?;
    datum.check_cochar(eta)?;
    if !datum.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let mut out = BTreeMap::new();
    if pair(lambda, eta)? <= threshold {
        return Ok(out);
    }
    let above = |v: &WeightVec| pair(v, eta).map(|p| p > threshold).unwrap_or(false);

    let mut seen: BTreeSet<WeightVec> = BTreeSet::from([lambda.clone()]);
    let mut stack = vec![lambda.clone()];
    while let Some(mu) = stack.pop() {
        for alpha in &datum.positive_roots {
            let nu = mu.sub(alpha);
            if datum.is_dominant(&nu) && above(&nu) && seen.insert(nu.clone()) {
                stack.push(nu);
            }
        }
    }
    let mut dominant: Vec<WeightVec> = seen.into_iter().collect();
    dominant.sort_by_key(|mu| (datum.height_of(&lambda.sub(mu)), mu.clone()));

    let two_rho = datum.two_rho();
    let mut mults: HashMap<WeightVec, u64> = HashMap::with_capacity(dominant.len());
    for mu in &dominant {
        if mu == lambda {
            mults.insert(mu.clone(), 1);
            continue;
        }
        let mut sum: i128 = 0;
        for alpha in &datum.positive_roots {
            let mut k = 1;
            loop {
                let v = mu.add_multiple(alpha, k);
                match mults.get(&datum.dominant_conjugate(&v)) {
                    Some(&m) => {
                        let term = (m as i128)
                            .checked_mul(datum.inner(&v, alpha) as i128)
                            .ok_or(Error::Overflow("Freudenthal sum"))?;
                        sum = sum
                            .checked_add(term)
                            .ok_or(Error::Overflow("Freudenthal sum"))?;
                    }
                    None => break,
                }
                k += 1;
            }
        }
        let den = freudenthal_denominator(datum, lambda, mu, &two_rho) as i128;
        let num = 2 * sum;
        if den <= 0 || num % den != 0 || num <= 0 {
            return Err(Error::NonExactDivision(format!(
                "Freudenthal step at {:?}",
                mu.0
            )));
        }
        mults.insert(
            mu.clone(),
            (num / den)
                .to_u64()
                .ok_or(Error::Overflow("weight multiplicity"))?,
        );
    }

    let cochars: Vec<Vec<i64>> = group
        .iter()
        .map(|w| w.action.transpose().apply(&eta.0))
        .collect();
    let mut stabilizers: HashMap<Vec<bool>, u128> = HashMap::new();
    let mut local: BTreeMap<i64, u128> = BTreeMap::new();
    for mu in &dominant {
        let walls: Vec<bool> = datum.simple_pairings(mu).iter().map(|&p| p == 0).collect();
        let stab = *stabilizers
            .entry(walls)
            .or_insert_with(|| group.iter().filter(|w| &w.apply(mu) == mu).count() as u128);
        local.clear();
        for c in &cochars {
            let p: i64 = mu.0.iter().zip(c).map(|(a, b)| a * b).sum();
            if p > threshold {
                *local.entry(p).or_insert(0) += 1;
            }
        }
        let m = mults[mu] as u128;
        for (&p, &count) in &local {
            debug_assert_eq!(count % stab, 0);
            let add = (count / stab)
                .checked_mul(m)
                .ok_or(Error::Overflow("graded multiplicity"))?;
            let slot = out.entry(p).or_insert(0u128);
            *slot = slot
                .checked_add(add)
                .ok_or(Error::Overflow("graded multiplicity"))?;
        }
    }
    Ok(out)
}

/// Dimension of `G/P_λ`: the number of positive roots not orthogonal to `λ`.
pub fn flag_dimension(datum: &RootDatum, lambda: &WeightVec) -> Result<usize> {
    datum.check_weight(lambda)?;
    Ok(datum
        .positive_roots
        .iter()
        .filter(|a| datum.inner(lambda, a) != 0)
        .count())
}

/// `Σ_α mult(α) t^{<α, μ>}`.
pub fn char_eval(ws: &WeightSystem, mu: &CocharVec) -> Result<LaurentPoly> {
    let mut terms = Vec::with_capacity(ws.entries.len());
    for (w, &m) in &ws.entries {
        terms.push((pair(w, mu)?, BigInt::from(m)));
    }
    Ok(LaurentPoly::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{build_root_datum, weyl_group, LieType};

    fn g2() -> RootDatum {
        build_root_datum(LieType::g2()).unwrap()
    }

    fn a5() -> RootDatum {
        build_root_datum(LieType::a(5).unwrap()).unwrap()
    }

    #[test]
    fn g2_adjoint() {
        let d = g2();
        let ws = weight_system(&d, &WeightVec(vec![3, 2])).unwrap();
        assert_eq!(ws.dim(), 14);
        assert_eq!(ws.multiplicity(&WeightVec(vec![0, 0])), 2);
        assert_eq!(ws.entries().len(), 13);
        for root in d.long_roots.iter().chain(&d.short_roots) {
            assert_eq!(ws.multiplicity(root), 1);
        }
    }

    #[test]
    fn a5_wedge_two() {
        let ws = weight_system(&a5(), &WeightVec(vec![1, 1, 0, 0, 0, 0])).unwrap();
        assert_eq!(ws.dim(), 15);
        assert!(ws.entries().values().all(|&m| m == 1));
        assert!(ws
            .entries()
            .keys()
            .all(|w| w.0.iter().sum::<i64>() == 2 && w.0.iter().all(|&x| x == 0 || x == 1)));
    }

    #[test]
    fn trivial_rep() {
        for d in [g2(), a5()] {
            let zero = WeightVec::zero(d.ambient_dim());
            let ws = weight_system(&d, &zero).unwrap();
            assert_eq!(ws.entries().len(), 1);
            assert_eq!(ws.multiplicity(&zero), 1);
        }
    }

    #[test]
    fn dimension_cap() {
        assert!(matches!(
            weight_system_capped(&g2(), &WeightVec(vec![6, 4]), 50),
            Err(Error::RepresentationTooLarge { .. })
        ));
    }

    #[test]
    fn masses_match_weyl_dimension() {
        let cases = [
            (g2(), vec![3, 2]),
            (g2(), vec![6, 4]),
            (g2(), vec![2, 1]),
            (g2(), vec![10, 6]),
            (a5(), vec![1, 1, 0, 0, 0, 0]),
            (a5(), vec![2, 2, 0, 0, 0, 0]),
            (a5(), vec![3, 1, 1, 0, 0, -1]),
        ];
        for (d, l) in cases {
            let l = WeightVec(l);
            let ws = weight_system(&d, &l).unwrap();
            assert_eq!(
                BigInt::from(ws.dim()),
                BigInt::from(weyl_dim(&d, &l).unwrap()),
                "{l:?}"
            );
        }
        let c3 = build_root_datum(LieType::c(3).unwrap()).unwrap();
        for l in [vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1], vec![2, 1, 0]] {
            let l = WeightVec(l);
            let ws = weight_system(&c3, &l).unwrap();
            assert_eq!(
                BigInt::from(ws.dim()),
                BigInt::from(weyl_dim(&c3, &l).unwrap())
            );
        }
    }

    #[test]
    fn weyl_invariance_g2() {
        let d = g2();
        let ws = weight_system(&d, &WeightVec(vec![6, 4])).unwrap();
        for w in weyl_group(&d).unwrap() {
            for (v, &m) in ws.entries() {
                assert_eq!(ws.multiplicity(&w.apply(v)), m);
            }
        }
    }

    #[test]
    fn window_matches_full_system() {
        let d = g2();
        let l = WeightVec(vec![9, 6]);
        let full = weight_system(&d, &l).unwrap();
        let eta = CocharVec(vec![1, 1]);
        for threshold in [-100, -3, 0, 4, 8] {
            let win = weights_above(&d, &l, &eta, threshold).unwrap();
            let expected: HashMap<WeightVec, u64> = full
                .entries()
                .iter()
                .filter(|(w, _)| pair(w, &eta).unwrap() > threshold)
                .map(|(w, &m)| (w.clone(), m))
                .collect();
            assert_eq!(win, expected, "threshold {threshold}");
        }
    }

    #[test]
    fn window_with_degenerate_direction() {
        let d = a5();
        let l = WeightVec(vec![2, 2, 0, 0, 0, 0]);
        let full = weight_system(&d, &l).unwrap();
        let eta = d.dominant_cochar(&CocharVec(vec![0, 0, 1, 0, 0, 0]));
        let win = weights_above(&d, &l, &eta, 0).unwrap();
        let expected = full
            .entries()
            .iter()
            .filter(|(w, _)| pair(w, &eta).unwrap() > 0)
            .count();
        assert_eq!(win.len(), expected);
        assert!(win.iter().all(|(w, &m)| full.multiplicity(w) == m));
    }

    #[test]
    fn flag_dimensions() {
        assert_eq!(flag_dimension(&g2(), &WeightVec(vec![3, 2])).unwrap(), 5);
        assert_eq!(
            flag_dimension(&a5(), &WeightVec(vec![1, 1, 0, 0, 0, 0])).unwrap(),
            8
        );
        for n in 1..6 {
            let d = build_root_datum(LieType::a(n).unwrap()).unwrap();
            let mut e1 = vec![0; n + 1];
            e1[0] = 1;
            assert_eq!(flag_dimension(&d, &WeightVec(e1)).unwrap(), n);
        }
    }

    #[test]
    fn character_values() {
        let d = g2();
        let ws = weight_system(&d, &WeightVec(vec![3, 2])).unwrap();
        let chi = char_eval(&ws, &CocharVec(vec![-1, 1])).unwrap();
        let coeffs: Vec<(i64, i64)> = chi.terms().map(|(e, c)| (e, c.to_i64().unwrap())).collect();
        assert_eq!(coeffs, vec![(-2, 1), (-1, 4), (0, 4), (1, 4), (2, 1)]);
        assert_eq!(chi.invert(), chi);
        let trivial = char_eval(&ws, &CocharVec::zero(2)).unwrap();
        assert_eq!(trivial.coeff(0), BigInt::from(14));

        let ws = weight_system(&a5(), &WeightVec(vec![1, 1, 0, 0, 0, 0])).unwrap();
        let chi = char_eval(&ws, &CocharVec(vec![2, 1, 0, 0, -1, -2])).unwrap();
        let coeffs: Vec<(i64, i64)> = chi.terms().map(|(e, c)| (e, c.to_i64().unwrap())).collect();
        assert_eq!(
            coeffs,
            vec![(-3, 1), (-2, 2), (-1, 3), (0, 3), (1, 3), (2, 2), (3, 1)]
        );
    }
}
