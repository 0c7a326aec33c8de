//! Quadratic equations of flag varieties: the Pfaffian description of
//! `Gr(2,n)`, the general count of defining quadrics, weights on Plücker
//! coordinates, and restriction to singular strata.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{longest_element, weyl_dim, weyl_group, Family, RootDatum, WeightVec};
use crate::model::WeightedFlagInput;

/// Integer quadratic form in variables `x_1, x_2, ...`.
///
/// Keys are `(i, j)` with `i <= j`, meaning the monomial `x_i x_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticForm {
    #[serde(with = "term_list")]
    terms: BTreeMap<(usize, usize), i64>,
}

mod term_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        terms: &BTreeMap<(usize, usize), i64>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(terms.iter().map(|(&(i, j), &c)| (c, i, j)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BTreeMap<(usize, usize), i64>, D::Error> {
        let list: Vec<(i64, usize, usize)> = Vec::deserialize(d)?;
        Ok(QuadraticForm::from_terms(list.into_iter().map(|(c, i, j)| (i, j, c))).terms)
    }
}

impl QuadraticForm {
    /// Builds a form from `(i, j, coefficient)` triples; repeated monomials add up.
    pub fn from_terms<I: IntoIterator<Item = (usize, usize, i64)>>(terms: I) -> Self {
        let mut map = BTreeMap::new();
        for (i, j, c) in terms {
            let key = if i <= j { (i, j) } else { (j, i) };
            *map.entry(key).or_insert(0) += c;
        }
        map.retain(|_, c| *c != 0);
        QuadraticForm { terms: map }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn variables(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().flat_map(|&(i, j)| [i, j])
    }

    /// Value at `x_k = values[k - 1]`.
    pub fn evaluate(&self, values: &[i64]) -> i128 {
        self.terms
            .iter()
            .map(|(&(i, j), &c)| c as i128 * values[i - 1] as i128 * values[j - 1] as i128)
            .sum()
    }

    /// Drops every monomial containing a variable outside `keep`.
    fn restrict(&self, keep: impl Fn(usize) -> bool) -> QuadraticForm {
        let terms = self
            .terms
            .iter()
            .filter(|((i, j), _)| keep(*i) && keep(*j))
            .map(|(&k, &c)| (k, c))
            .collect();
        QuadraticForm { terms }
    }
}

/// `+x1*x10 -x2*x7 +x3*x6`.
impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&(i, j), &c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            let sign = if c < 0 { '-' } else { '+' };
            if c.abs() == 1 {
                write!(f, "{sign}x{i}*x{j}")?;
            } else {
                write!(f, "{sign}{}*x{i}*x{j}", c.abs())?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Variable {
    /// 1-based name index: `x_index`.
    pub index: usize,
    /// Entry `(i, j)` of the skew matrix, 1-based with `i < j`.
    pub position: (usize, usize),
    pub weight: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Pfaffian,
    Restricted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationSet {
    /// Size of the skew matrix.
    pub n: usize,
    pub variables: Vec<Variable>,
    pub equations: Vec<QuadraticForm>,
    pub origin: Origin,
}

impl EquationSet {
    /// One equation per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for eq in &self.equations {
            s.push_str(&eq.to_string());
            s.push('\n');
        }
        s
    }

    pub fn variable(&self, index: usize) -> Option<&Variable> {
        self.variables.iter().find(|v| v.index == index)
    }

    /// Total weight of each monomial of equation `e`, if weights are assigned.
    pub fn monomial_weights(&self, e: usize) -> Option<Vec<i64>> {
        let weight = |k: usize| self.variable(k).and_then(|v| v.weight);
        self.equations[e]
            .terms()
            .map(|((i, j), _)| Some(weight(i)? + weight(j)?))
            .collect()
    }
}

/// 1-based index of entry `(i, j)`, `i < j`, of an `n × n` skew matrix in row-major order.
pub fn plucker_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    (1..i).map(|r| n - r).sum::<usize>() + (j - i)
}

/// Values of the Plücker variables at a skew matrix given by its full rows.
pub fn plucker_values(matrix: &[Vec<i64>]) -> Vec<i64> {
    let n = matrix.len();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(matrix[i][j]);
        }
    }
    out
}

fn subsets4(n: usize) -> impl Iterator<Item = [usize; 4]> {
    (1..=n).flat_map(move |a| {
        (a + 1..=n).flat_map(move |b| {
            (b + 1..=n).flat_map(move |c| (c + 1..=n).map(move |d| [a, b, c, d]))
        })
    })
}

/// The `C(n,4)` principal `4 × 4` Pfaffians `a_ij a_kl - a_ik a_jl + a_il a_jk`,
/// ordered by the lexicographic 4-subset `{i < j < k < l}`.
pub fn pfaffians(n: usize) -> Result<EquationSet> {
    if n < 4 {
        return Err(Error::InvalidInput(format!(
            "Pfaffians need n >= 4, got {n}"
        )));
    }
    let x = |i, j| plucker_index(n, i, j);
    let equations = subsets4(n)
        .map(|[i, j, k, l]| {
            QuadraticForm::from_terms([
                (x(i, j), x(k, l), 1),
                (x(i, k), x(j, l), -1),
                (x(i, l), x(j, k), 1),
            ])
        })
        .collect();
    let mut variables = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            variables.push(Variable {
                index: x(i, j),
                position: (i, j),
                weight: None,
            });
        }
    }
    Ok(EquationSet {
        n,
        variables,
        equations,
        origin: Origin::Pfaffian,
    })
}

/// Number of independent quadrics cutting out `G/P_λ ⊂ P(V_λ)`:
/// `dim S² V_λ - dim V_{2ν}` with `ν = -w₀ λ`.
pub fn equation_count(datum: &RootDatum, lambda: &WeightVec) -> Result<BigUint> {
    if !datum.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let group = weyl_group(datum)?;
    let nu = longest_element(&group).apply(lambda).neg();
    let d = weyl_dim(datum, lambda)?;
    let sym2 = &d * (&d + 1u32) / 2u32;
    let top = weyl_dim(datum, &nu.scale(2))?;
    Ok(sym2 - top)
}

/// Puts weight `a_i + a_j + u` on the variable at position `(i, j)` and checks
/// that every equation is weighted-homogeneous.
pub fn assign_weights(eqs: &EquationSet, input: &WeightedFlagInput) -> Result<EquationSet> {
    let n = input.lie_type.ambient_dim();
    let mut lambda = vec![0; n];
    if n >= 2 {
        lambda[0] = 1;
        lambda[1] = 1;
    }
    if input.lie_type.family != Family::A || input.lambda.0 != lambda {
        return Err(Error::InvalidInput(
            "weights on Plücker coordinates need type A with λ = e1 + e2".into(),
        ));
    }
    if eqs.n != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: eqs.n,
        });
    }
    let a = &input.mu.0;
    let mut out = eqs.clone();
    for v in &mut out.variables {
        let (i, j) = v.position;
        v.weight = Some(a[i - 1] + a[j - 1] + input.u);
    }
    for e in 0..out.equations.len() {
        let ws = out.monomial_weights(e).expect("all variables weighted");
        if ws.windows(2).any(|p| p[0] != p[1]) {
            return Err(Error::NonHomogeneous(format!(
                "{} has monomial weights {ws:?}",
                out.equations[e]
            )));
        }
    }
    Ok(out)
}

/// Sets every variable whose weight is not divisible by `r` to zero and keeps
/// the equations that survive.
pub fn restrict_to_stratum(eqs: &EquationSet, r: i64) -> Result<EquationSet> {
    if r < 2 {
        return Err(Error::InvalidInput(format!(
            "stratum index must be at least 2, got {r}"
        )));
    }
    let mut survivors = Vec::new();
    for v in &eqs.variables {
        let w = v
            .weight
            .ok_or_else(|| Error::InvalidInput(format!("x{} has no weight", v.index)))?;
        if w % r == 0 {
            survivors.push(v.clone());
        }
    }
    let keep: std::collections::BTreeSet<usize> = survivors.iter().map(|v| v.index).collect();
    let equations = eqs
        .equations
        .iter()
        .map(|q| q.restrict(|k| keep.contains(&k)))
        .filter(|q| !q.is_empty())
        .collect();
    Ok(EquationSet {
        n: eqs.n,
        variables: survivors,
        equations,
        origin: Origin::Restricted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{build_root_datum, LieType};

    #[test]
    fn index_layout() {
        assert_eq!(plucker_index(6, 1, 2), 1);
        assert_eq!(plucker_index(6, 1, 6), 5);
        assert_eq!(plucker_index(6, 2, 3), 6);
        assert_eq!(plucker_index(6, 3, 4), 10);
        assert_eq!(plucker_index(6, 4, 6), 14);
        assert_eq!(plucker_index(6, 5, 6), 15);
    }

    #[test]
    fn gr26_first_pfaffian() {
        let eqs = pfaffians(6).unwrap();
        assert_eq!(eqs.equations.len(), 15);
        assert_eq!(eqs.equations[0].to_string(), "+x1*x10 -x2*x7 +x3*x6");
        assert!(eqs.equations.iter().all(|q| q.len() == 3));
    }

    #[test]
    fn gr24_single_quadric() {
        let eqs = pfaffians(4).unwrap();
        assert_eq!(eqs.to_text(), "+x1*x6 -x2*x5 +x3*x4\n");
        assert!(pfaffians(3).is_err());
    }

    #[test]
    fn counts() {
        let g2 = build_root_datum(LieType::g2()).unwrap();
        assert_eq!(
            equation_count(&g2, &WeightVec(vec![3, 2])).unwrap(),
            BigUint::from(28u32)
        );
        let a5 = build_root_datum(LieType::a(5).unwrap()).unwrap();
        assert_eq!(
            equation_count(&a5, &WeightVec(vec![1, 1, 0, 0, 0, 0])).unwrap(),
            BigUint::from(15u32)
        );
        let a3 = build_root_datum(LieType::a(3).unwrap()).unwrap();
        assert_eq!(
            equation_count(&a3, &WeightVec(vec![1, 1, 0, 0])).unwrap(),
            BigUint::from(1u32)
        );
    }

    #[test]
    fn restriction_drops_monomials() {
        let input = WeightedFlagInput::new(
            LieType::a(3).unwrap(),
            WeightVec(vec![1, 1, 0, 0]),
            crate::lie::CocharVec(vec![1, 0, 0, 0]),
            1,
        )
        .unwrap();
        let eqs = assign_weights(&pfaffians(4).unwrap(), &input).unwrap();
        let r = restrict_to_stratum(&eqs, 2).unwrap();
        assert_eq!(
            r.variables.iter().map(|v| v.index).collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
        assert!(r.equations.is_empty());
        let none = restrict_to_stratum(&eqs, 9).unwrap();
        assert!(none.variables.is_empty() && none.equations.is_empty());
    }
}
