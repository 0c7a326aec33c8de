//! Weighted flag varieties `wΣ ⊂ P[w_0, ..., w_{n-1}]` and their ambient weights.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{build_root_datum, pair, CocharVec, LieType, RootDatum, WeightVec};
use crate::weights::{flag_dimension, weight_system};

/// Full description of one weighted embedding, optionally coned.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedFlagInput {
    pub lie_type: LieType,
    /// Highest weight in ambient coordinates (simple-root basis for G2).
    pub lambda: WeightVec,
    pub mu: CocharVec,
    pub u: i64,
    /// Weights of the extra cone variables, each at least 1.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cone_weights: Vec<i64>,
}

impl WeightedFlagInput {
    pub fn new(lie_type: LieType, lambda: WeightVec, mu: CocharVec, u: i64) -> Result<Self> {
        let input = WeightedFlagInput {
            lie_type,
            lambda,
            mu,
            u,
            cone_weights: Vec::new(),
        };
        input.validate()?;
        Ok(input)
    }

    /// `G2` with `λ = ω2`, the codimension 8 family.
    pub fn g2_adjoint(mu: [i64; 2], u: i64) -> Self {
        Self::new(
            LieType::g2(),
            WeightVec(vec![3, 2]),
            CocharVec(mu.to_vec()),
            u,
        )
        .expect("G2 adjoint input is valid")
    }

    /// `GL(6)` with `λ = e1 + e2`, the weighted `Gr(2,6)`.
    pub fn gr26(mu: [i64; 6], u: i64) -> Self {
        Self::new(
            LieType::a(5).expect("A5"),
            WeightVec(vec![1, 1, 0, 0, 0, 0]),
            CocharVec(mu.to_vec()),
            u,
        )
        .expect("Gr(2,6) input is valid")
    }

    pub fn with_cones(mut self, cones: &[i64]) -> Result<Self> {
        for &a in cones {
            self = cone(&self, a)?;
        }
        Ok(self)
    }

    pub fn datum(&self) -> Result<RootDatum> {
        build_root_datum(self.lie_type)
    }

    pub fn validate(&self) -> Result<()> {
        let datum = self.datum()?;
        datum.check_weight(&self.lambda)?;
        datum.check_cochar(&self.mu)?;
        if !datum.is_dominant(&self.lambda) {
            return Err(Error::NotDominant(self.lambda.0.clone()));
        }
        if let Some(a) = self.cone_weights.iter().find(|&&a| a < 1) {
            return Err(Error::InvalidInput(format!(
                "cone weight {a} must be at least 1"
            )));
        }
        Ok(())
    }

    /// Same data without cone variables.
    pub fn base(&self) -> WeightedFlagInput {
        WeightedFlagInput {
            cone_weights: Vec::new(),
            ..self.clone()
        }
    }
}

/// Adds a cone variable of weight `a`.
pub fn cone(input: &WeightedFlagInput, a: i64) -> Result<WeightedFlagInput> {
    if a < 1 {
        return Err(Error::InvalidInput(format!(
            "cone weight {a} must be at least 1"
        )));
    }
    let mut out = input.clone();
    out.cone_weights.push(a);
    Ok(out)
}

/// Ambient weights of the embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingWeights {
    /// Sorted ascending.
    pub weights: Vec<i64>,
    pub n: usize,
    pub d: usize,
    pub c: usize,
}

impl EmbeddingWeights {
    pub fn sum(&self) -> i64 {
        self.weights.iter().sum()
    }

    pub fn max(&self) -> i64 {
        self.weights.iter().copied().max().unwrap_or(0)
    }
}

/// `<α, μ> + u` for every weight `α` of `V_λ`, repeated by multiplicity, in weight order.
pub fn representation_weights(input: &WeightedFlagInput) -> Result<Vec<(WeightVec, i64)>> {
    let datum = input.datum()?;
    let ws = weight_system(&datum, &input.lambda)?;
    let mut out = Vec::with_capacity(ws.dim() as usize);
    for (w, &m) in ws.entries() {
        let value = pair(w, &input.mu)? + input.u;
        for _ in 0..m {
            out.push((w.clone(), value));
        }
    }
    Ok(out)
}

pub fn embedding_weights(input: &WeightedFlagInput) -> Result<EmbeddingWeights> {
    input.validate()?;
    let datum = input.datum()?;
    let mut weights: Vec<i64> = representation_weights(input)?
        .into_iter()
        .map(|(_, v)| v)
        .collect();
    weights.extend(&input.cone_weights);
    weights.sort_unstable();
    let n = weights.len();
    let d = flag_dimension(&datum, &input.lambda)? + input.cone_weights.len();
    let c = n
        .checked_sub(1 + d)
        .ok_or_else(|| Error::InvalidInput("dimension exceeds ambient space".into()))?;
    Ok(EmbeddingWeights { weights, n, d, c })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Positivity {
    pub ok: bool,
    /// Smallest non-positive weight and its value, when positivity fails.
    pub witness: Option<(WeightVec, i64)>,
}

/// Checks `<α, μ> + u > 0` over the whole weight system of `V_λ`.
pub fn check_positivity(input: &WeightedFlagInput) -> Result<Positivity> {
    let weights = representation_weights(input)?;
    let worst = weights
        .into_iter()
        .min_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(match worst {
        Some((w, v)) if v <= 0 => Positivity {
            ok: false,
            witness: Some((w, v)),
        },
        _ => Positivity {
            ok: true,
            witness: None,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ternary {
    True,
    False,
    Unverified,
}

/// Variables whose weights are all divisible by `r`, with `r` their exact gcd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub r: i64,
    /// Indices into the sorted weight list.
    pub indices: Vec<usize>,
    pub ambient_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WellFormedness {
    pub gcd_ok: bool,
    pub strata: Vec<Stratum>,
    pub geometric_ok: Ternary,
}

/// True iff every `n-1` of the weights are coprime.
pub fn gcd_condition(weights: &[i64]) -> bool {
    let n = weights.len();
    if n < 2 {
        return true;
    }
    // prefix[i] = gcd(w_0..w_{i-1}), suffix[i] = gcd(w_i..)
    let mut prefix = vec![0i64; n + 1];
    let mut suffix = vec![0i64; n + 1];
    for i in 0..n {
        prefix[i + 1] = prefix[i].gcd(&weights[i]);
        suffix[n - 1 - i] = suffix[n - i].gcd(&weights[n - 1 - i]);
    }
    (0..n).all(|i| prefix[i].gcd(&suffix[i + 1]) == 1)
}

/// Every `r > 1` that is the gcd of some subset of `weights`, largest first,
/// with the variables divisible by `r`.
pub fn singular_strata(weights: &[i64]) -> Vec<Stratum> {
    let mut values: BTreeSet<i64> = weights.iter().copied().filter(|&w| w > 1).collect();
    loop {
        let current: Vec<i64> = values.iter().copied().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                let g = a.gcd(b);
                if g > 1 && values.insert(g) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    values
        .into_iter()
        .rev()
        .map(|r| {
            let indices: Vec<usize> = (0..weights.len())
                .filter(|&i| weights[i] % r == 0)
                .collect();
            Stratum {
                r,
                ambient_dim: indices.len() - 1,
                indices,
            }
        })
        .collect()
}

pub fn check_well_formed(ew: &EmbeddingWeights) -> WellFormedness {
    let strata = singular_strata(&ew.weights);
    let geometric_ok = if strata.is_empty() {
        Ternary::True
    } else {
        Ternary::Unverified
    };
    WellFormedness {
        gcd_ok: gcd_condition(&ew.weights),
        strata,
        geometric_ok,
    }
}
