//! Root systems and Weyl groups for the types A_n, C_n and G2.
//!
//! Coordinates are chosen so that pairing a weight with a cocharacter is a
//! plain dot product:
//!
//! * `A_n` uses the `e`-basis of `GL(n+1)` (size `n+1`, no quotient by the
//!   determinant). Cocharacters use the dual `f`-basis.
//! * `C_n` uses the `e`-basis of size `n`.
//! * `G2` uses the simple-root basis `{α1, α2}` with `α1` short; cocharacters
//!   use the dual basis `{β1, β2}`.
//!
//! The stored Weyl vector for `A_n` is `(n, n-1, ..., 1, 0)`. It differs from
//! the half sum of positive roots by a multiple of `(1, ..., 1)`, which is
//! orthogonal to every root, so the Weyl dimension formula, Freudenthal's
//! recursion and the ratio in the Hilbert series closed form are unaffected.
//! With this representative no half-integer coordinates occur, including for
//! `A_1` where `ρ = (1, 0)`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of Weyl group elements enumerated.
pub const DEFAULT_WEYL_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    C,
    G2,
}

/// A Lie type with its rank. `G2` always has rank 2. Serialized as `"A5"`, `"C3"`, `"G2"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::C => rank >= 2,
            Family::G2 => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::UnsupportedType(format!("{family:?} of rank {rank}")))
        }
    }

    pub fn a(rank: usize) -> Result<Self> {
        Self::new(Family::A, rank)
    }

    pub fn c(rank: usize) -> Result<Self> {
        Self::new(Family::C, rank)
    }

    pub fn g2() -> Self {
        LieType {
            family: Family::G2,
            rank: 2,
        }
    }

    /// Size of the coordinate vectors used for weights and cocharacters.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::C => self.rank,
            Family::G2 => 2,
        }
    }

    /// Order of the Weyl group from the classical formulas.
    pub fn weyl_order(&self) -> u64 {
        let fact = |n: usize| (1..=n as u64).fold(1u64, |a, b| a.saturating_mul(b));
        match self.family {
            Family::A => fact(self.rank + 1),
            Family::C => fact(self.rank).saturating_mul(1u64 << self.rank.min(63)),
            Family::G2 => 12,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::C => write!(f, "C{}", self.rank),
            Family::G2 => write!(f, "G2"),
        }
    }
}

impl From<LieType> for String {
    fn from(t: LieType) -> String {
        t.to_string()
    }
}

impl TryFrom<String> for LieType {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for LieType {
    type Err = Error;

    /// Parses `A5`, `c3`, `g2`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "g2" {
            return Ok(LieType::g2());
        }
        let (head, tail) = lower.split_at(lower.len().min(1));
        let rank: usize = tail
            .parse()
            .map_err(|_| Error::UnsupportedType(s.to_string()))?;
        match head {
            "a" => LieType::a(rank),
            "c" => LieType::c(rank),
            _ => Err(Error::UnsupportedType(s.to_string())),
        }
    }
}

/// A weight in the ambient basis of its type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVec(pub Vec<i64>);

/// A cocharacter in the basis dual to the weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CocharVec(pub Vec<i64>);

impl WeightVec {
    pub fn zero(n: usize) -> Self {
        WeightVec(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> WeightVec {
        WeightVec(self.0.iter().map(|a| a * k).collect())
    }

    pub fn add_multiple(&self, other: &WeightVec, k: i64) -> WeightVec {
        WeightVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }

    pub fn neg(&self) -> WeightVec {
        self.scale(-1)
    }
}

impl CocharVec {
    pub fn zero(n: usize) -> Self {
        CocharVec(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn neg(&self) -> CocharVec {
        CocharVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn add_multiple(&self, other: &CocharVec, k: i64) -> CocharVec {
        CocharVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The perfect pairing between weights and cocharacters.
pub fn pair(w: &WeightVec, m: &CocharVec) -> Result<i64> {
    if w.len() != m.len() {
        return Err(Error::DimensionMismatch {
            expected: w.len(),
            got: m.len(),
        });
    }
    Ok(dot(&w.0, &m.0))
}

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMatrix {
            n,
            data: rows.concat(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.n + c]
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    data[r * n + c] += a * other.data[k * n + c];
                }
            }
        }
        IntMatrix { n, data }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|r| dot(&self.data[r * self.n..(r + 1) * self.n], v))
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                data[c * n + r] = self.data[r * n + c];
            }
        }
        IntMatrix { n, data }
    }

    /// Inverse over the integers, if the matrix is unimodular.
    pub fn inverse(&self) -> Option<IntMatrix> {
        let n = self.n;
        let mut a: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|r| {
                let mut row: Vec<Ratio<i64>> = (0..n)
                    .map(|c| Ratio::from_integer(self.get(r, c)))
                    .collect();
                row.extend((0..n).map(|c| Ratio::from_integer((r == c) as i64)));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            let p = a[col][col];
            for x in a[col].iter_mut() {
                *x /= p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col];
                    let pivot_row = a[col].clone();
                    for (x, y) in a[r].iter_mut().zip(pivot_row) {
                        *x -= f * y;
                    }
                }
            }
        }
        let mut data = Vec::with_capacity(n * n);
        for row in &a {
            for x in &row[n..] {
                if !x.is_integer() {
                    return None;
                }
                data.push(x.to_integer());
            }
        }
        Some(IntMatrix { n, data })
    }
}

/// Root data of a fixed Lie type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    pub lie_type: LieType,
    pub simple_roots: Vec<WeightVec>,
    /// Simple coroots as cocharacters: `<v, α_i∨> = pair(v, simple_coroots[i])`.
    pub simple_coroots: Vec<CocharVec>,
    /// Sorted by height, then lexicographically.
    pub positive_roots: Vec<WeightVec>,
    /// `cartan[i][j] = <α_j, α_i∨>`.
    pub cartan: Vec<Vec<i64>>,
    pub rho: WeightVec,
    pub fundamental_weights: Vec<WeightVec>,
    /// `symmetrizer[i] = (α_i, α_i) / 2`; `diag(symmetrizer) * cartan` is symmetric.
    pub symmetrizer: Vec<i64>,
    /// Gram matrix of a Weyl-invariant integral form on ambient coordinates.
    pub form: IntMatrix,
    /// Long and short roots (both signs). `short_roots` is empty for simply laced types.
    pub long_roots: Vec<WeightVec>,
    pub short_roots: Vec<WeightVec>,
    /// Functional whose value on every simple root is the same positive integer.
    pub height: Vec<i64>,
    /// Cocharacter pairing non-trivially with every root.
    pub regular_cochar: CocharVec,
}

fn unit(n: usize, i: usize, k: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = k;
    v
}

fn e_diff(n: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] += 1;
    v[j] -= 1;
    v
}

fn e_sum(n: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] += 1;
    v[j] += 1;
    v
}

/// Builds the root datum of a supported type.
pub fn build_root_datum(lie_type: LieType) -> Result<RootDatum> {
    let lie_type = LieType::new(lie_type.family, lie_type.rank)?;
    let r = lie_type.rank;
    let n = lie_type.ambient_dim();
    let (simple, positive, form, rho, fundamental, height, regular): (
        Vec<Vec<i64>>,
        Vec<Vec<i64>>,
        IntMatrix,
        Vec<i64>,
        Vec<Vec<i64>>,
        Vec<i64>,
        Vec<i64>,
    ) = match lie_type.family {
        Family::A => {
            let simple = (0..r).map(|i| e_diff(n, i, i + 1)).collect();
            let mut positive = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    positive.push(e_diff(n, i, j));
                }
            }
            let rho: Vec<i64> = (0..n).map(|i| (r - i) as i64).collect();
            let fundamental = (1..=r)
                .map(|k| (0..n).map(|i| (i < k) as i64).collect())
                .collect();
            (
                simple,
                positive,
                IntMatrix::identity(n),
                rho.clone(),
                fundamental,
                rho.clone(),
                rho,
            )
        }
        Family::C => {
            let mut simple: Vec<Vec<i64>> = (0..r - 1).map(|i| e_diff(n, i, i + 1)).collect();
            simple.push(unit(n, r - 1, 2));
            let mut positive = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    positive.push(e_diff(n, i, j));
                    positive.push(e_sum(n, i, j));
                }
                positive.push(unit(n, i, 2));
            }
            let rho: Vec<i64> = (0..n).map(|i| (r - i) as i64).collect();
            let fundamental = (1..=r)
                .map(|k| (0..n).map(|i| (i < k) as i64).collect())
                .collect();
            let height: Vec<i64> = (0..n).map(|i| (2 * (r - i) - 1) as i64).collect();
            (
                simple,
                positive,
                IntMatrix::identity(n),
                rho.clone(),
                fundamental,
                height,
                rho,
            )
        }
        Family::G2 => {
            let simple = vec![vec![1, 0], vec![0, 1]];
            let positive = vec![
                vec![1, 0],
                vec![0, 1],
                vec![1, 1],
                vec![2, 1],
                vec![3, 1],
                vec![3, 2],
            ];
            // |α1|^2 = 2, |α2|^2 = 6, (α1, α2) = -3.
            let form = IntMatrix::from_rows(&[vec![2, -3], vec![-3, 6]]);
            let fundamental = vec![vec![2, 1], vec![3, 2]];
            (
                simple,
                positive,
                form,
                vec![5, 3],
                fundamental,
                vec![1, 1],
                vec![1, 1],
            )
        }
    };

    let inner = |a: &[i64], b: &[i64]| dot(a, &form.apply(b));
    let simple_coroots: Vec<CocharVec> = simple
        .iter()
        .map(|a| {
            let norm = inner(a, a);
            CocharVec(form.apply(a).into_iter().map(|x| 2 * x / norm).collect())
        })
        .collect();
    let cartan: Vec<Vec<i64>> = simple_coroots
        .iter()
        .map(|cv| simple.iter().map(|a| dot(a, &cv.0)).collect())
        .collect();
    let symmetrizer: Vec<i64> = simple.iter().map(|a| inner(a, a) / 2).collect();

    let mut positive_roots: Vec<WeightVec> = positive.into_iter().map(WeightVec).collect();
    positive_roots.sort_by_key(|a| (dot(&a.0, &height), a.0.clone()));

    let max_norm = positive_roots
        .iter()
        .map(|a| inner(&a.0, &a.0))
        .max()
        .unwrap_or(0);
    let min_norm = positive_roots
        .iter()
        .map(|a| inner(&a.0, &a.0))
        .min()
        .unwrap_or(0);
    let mut long_roots = Vec::new();
    let mut short_roots = Vec::new();
    for a in positive_roots.iter().flat_map(|a| [a.clone(), a.neg()]) {
        if max_norm != min_norm && inner(&a.0, &a.0) == min_norm {
            short_roots.push(a);
        } else {
            long_roots.push(a);
        }
    }
    long_roots.sort();
    short_roots.sort();

    Ok(RootDatum {
        lie_type,
        simple_roots: simple.into_iter().map(WeightVec).collect(),
        simple_coroots,
        positive_roots,
        cartan,
        rho: WeightVec(rho),
        fundamental_weights: fundamental.into_iter().map(WeightVec).collect(),
        symmetrizer,
        form,
        long_roots,
        short_roots,
        height,
        regular_cochar: CocharVec(regular),
    })
}

impl RootDatum {
    pub fn ambient_dim(&self) -> usize {
        self.lie_type.ambient_dim()
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn check_weight(&self, v: &WeightVec) -> Result<()> {
        if v.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                got: v.len(),
            });
        }
        Ok(())
    }

    pub fn check_cochar(&self, v: &CocharVec) -> Result<()> {
        if v.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                got: v.len(),
            });
        }
        Ok(())
    }

    /// The invariant form `(a, b)`.
    pub fn inner(&self, a: &WeightVec, b: &WeightVec) -> i64 {
        dot(&a.0, &self.form.apply(&b.0))
    }

    /// `<v, α∨> = 2 (v, α) / (α, α)` as an exact rational.
    pub fn coroot_pairing(&self, v: &WeightVec, alpha: &WeightVec) -> Ratio<i64> {
        Ratio::new(2 * self.inner(v, alpha), self.inner(alpha, alpha))
    }

    /// `<v, α_i∨>` for the simple coroots.
    pub fn simple_pairings(&self, v: &WeightVec) -> Vec<i64> {
        self.simple_coroots
            .iter()
            .map(|c| dot(&v.0, &c.0))
            .collect()
    }

    pub fn is_dominant(&self, v: &WeightVec) -> bool {
        self.simple_pairings(v).iter().all(|&x| x >= 0)
    }

    /// Sum of the positive roots (the exact `2ρ`).
    pub fn two_rho(&self) -> WeightVec {
        self.positive_roots
            .iter()
            .fold(WeightVec::zero(self.ambient_dim()), |acc, a| acc.add(a))
    }

    /// Height functional applied to `v`, scaled so simple roots have height 1.
    pub fn height_of(&self, v: &WeightVec) -> Ratio<i64> {
        Ratio::new(
            dot(&v.0, &self.height),
            dot(&self.simple_roots[0].0, &self.height),
        )
    }

    pub fn reflect(&self, i: usize, v: &WeightVec) -> WeightVec {
        let k = dot(&v.0, &self.simple_coroots[i].0);
        v.add_multiple(&self.simple_roots[i], -k)
    }

    /// Simple reflection acting on cocharacters by the contragredient action.
    pub fn reflect_cochar(&self, i: usize, m: &CocharVec) -> CocharVec {
        let k = dot(&self.simple_roots[i].0, &m.0);
        m.add_multiple(&self.simple_coroots[i], -k)
    }

    pub fn dominant_conjugate(&self, v: &WeightVec) -> WeightVec {
        match self.lie_type.family {
            Family::A => {
                let mut out = v.0.clone();
                out.sort_unstable_by(|a, b| b.cmp(a));
                return WeightVec(out);
            }
            Family::C => {
                let mut out: Vec<i64> = v.0.iter().map(|x| x.abs()).collect();
                out.sort_unstable_by(|a, b| b.cmp(a));
                return WeightVec(out);
            }
            Family::G2 => {}
        }
        let mut v = v.clone();
        'outer: loop {
            for i in 0..self.rank() {
                if dot(&v.0, &self.simple_coroots[i].0) < 0 {
                    v = self.reflect(i, &v);
                    continue 'outer;
                }
            }
            return v;
        }
    }

    /// Representative `η` in the Weyl orbit of `m` with `<α_i, η> >= 0` for all simple roots.
    pub fn dominant_cochar(&self, m: &CocharVec) -> CocharVec {
        let mut m = m.clone();
        'outer: loop {
            for i in 0..self.rank() {
                if dot(&self.simple_roots[i].0, &m.0) < 0 {
                    m = self.reflect_cochar(i, &m);
                    continue 'outer;
                }
            }
            return m;
        }
    }

    /// Weyl orbit of a weight, sorted.
    pub fn orbit(&self, v: &WeightVec) -> Vec<WeightVec> {
        let mut seen: HashSet<WeightVec> = HashSet::new();
        let mut queue = VecDeque::from([v.clone()]);
        seen.insert(v.clone());
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank() {
                let y = self.reflect(i, &x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        out
    }

    fn simple_reflection_matrix(&self, i: usize) -> IntMatrix {
        let n = self.ambient_dim();
        let a = &self.simple_roots[i].0;
        let c = &self.simple_coroots[i].0;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|col| (r == col) as i64 - a[r] * c[col])
                    .collect()
            })
            .collect();
        IntMatrix::from_rows(&rows)
    }
}

/// An element of the Weyl group acting on weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub action: IntMatrix,
    pub sign: i64,
    pub length: usize,
}

impl WeylElement {
    pub fn apply(&self, v: &WeightVec) -> WeightVec {
        WeightVec(self.action.apply(&v.0))
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            action: self
                .action
                .inverse()
                .expect("Weyl group elements are unimodular"),
            sign: self.sign,
            length: self.length,
        }
    }
}

/// Enumerates the Weyl group with the default cap.
pub fn weyl_group(datum: &RootDatum) -> Result<Vec<WeylElement>> {
    weyl_group_capped(datum, DEFAULT_WEYL_CAP)
}

/// Full enumeration by breadth-first closure over the simple reflections.
///
/// The result starts with the identity and is sorted by length, then by the
/// row-major matrix entries.
pub fn weyl_group_capped(datum: &RootDatum, cap: u64) -> Result<Vec<WeylElement>> {
    let order = datum.lie_type.weyl_order();
    if order > cap {
        return Err(Error::GroupTooLarge { order, cap });
    }
    let n = datum.ambient_dim();
    let gens: Vec<IntMatrix> = (0..datum.rank())
        .map(|i| datum.simple_reflection_matrix(i))
        .collect();
    let mut seen: HashMap<IntMatrix, usize> = HashMap::new();
    let mut frontier = vec![IntMatrix::identity(n)];
    seen.insert(IntMatrix::identity(n), 0);
    let mut length = 0;
    while !frontier.is_empty() {
        length += 1;
        let mut next = Vec::new();
        for g in &frontier {
            for s in &gens {
                let h = g.mul(s);
                if !seen.contains_key(&h) {
                    seen.insert(h.clone(), length);
                    next.push(h);
                }
            }
        }
        if seen.len() as u64 > cap {
            return Err(Error::GroupTooLarge {
                order: seen.len() as u64,
                cap,
            });
        }
        frontier = next;
    }
    let mut elements: Vec<WeylElement> = seen
        .into_iter()
        .map(|(action, length)| WeylElement {
            action,
            sign: if length % 2 == 0 { 1 } else { -1 },
            length,
        })
        .collect();
    elements.sort_by(|a, b| {
        a.length
            .cmp(&b.length)
            .then_with(|| a.action.entries().cmp(b.action.entries()))
    });
    Ok(elements)
}

pub fn act(w: &WeylElement, v: &WeightVec) -> Result<WeightVec> {
    if v.len() != w.action.dim() {
        return Err(Error::DimensionMismatch {
            expected: w.action.dim(),
            got: v.len(),
        });
    }
    Ok(w.apply(v))
}

/// The longest element `w0`.
pub fn longest_element(group: &[WeylElement]) -> &WeylElement {
    group
        .iter()
        .max_by_key(|w| w.length)
        .expect("Weyl group is never empty")
}

/// `dim V_λ = ∏_{α>0} <λ+ρ, α∨> / <ρ, α∨>`.
pub fn weyl_dim(datum: &RootDatum, lambda: &WeightVec) -> Result<BigUint> {
    datum.check_weight(lambda)?;
    if !datum.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let shifted = lambda.add(&datum.rho);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for alpha in &datum.positive_roots {
        // Both pairings share the denominator (α, α), which cancels.
        let a = datum.inner(&shifted, alpha);
        let b = datum.inner(&datum.rho, alpha);
        debug_assert!(a > 0 && b > 0);
        num *= a as u64;
        den *= b as u64;
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> RootDatum {
        build_root_datum(LieType::g2()).unwrap()
    }

    fn a(n: usize) -> RootDatum {
        build_root_datum(LieType::a(n).unwrap()).unwrap()
    }

    #[test]
    fn g2_data() {
        let d = g2();
        assert_eq!(d.rho, WeightVec(vec![5, 3]));
        assert_eq!(d.positive_roots.len(), 6);
        assert_eq!(
            d.fundamental_weights,
            vec![WeightVec(vec![2, 1]), WeightVec(vec![3, 2])]
        );
        // α1 short: <α2, α1∨> = -3.
        assert_eq!(d.cartan, vec![vec![2, -3], vec![-1, 2]]);
        assert_eq!(d.long_roots.len(), 6);
        assert_eq!(d.short_roots.len(), 6);
        assert!(d.long_roots.contains(&WeightVec(vec![3, 2])));
        assert!(d.short_roots.contains(&WeightVec(vec![1, 0])));
    }

    #[test]
    fn a5_data() {
        let d = a(5);
        assert_eq!(d.rho, WeightVec(vec![5, 4, 3, 2, 1, 0]));
        assert_eq!(d.positive_roots.len(), 15);
        assert!(d.short_roots.is_empty());
    }

    #[test]
    fn a1_rho() {
        let d = a(1);
        assert_eq!(d.positive_roots, vec![WeightVec(vec![1, -1])]);
        assert_eq!(d.rho, WeightVec(vec![1, 0]));
        // 2ρ minus the root sum is a multiple of (1, 1).
        let diff = d.rho.scale(2).sub(&d.two_rho());
        assert_eq!(diff, WeightVec(vec![1, 1]));
    }

    #[test]
    fn rejects_unsupported() {
        assert!(LieType::new(Family::G2, 3).is_err());
        assert!(LieType::c(1).is_err());
        assert!(LieType::a(0).is_err());
        assert!("b3".parse::<LieType>().is_err());
        assert_eq!("A5".parse::<LieType>().unwrap(), LieType::a(5).unwrap());
    }

    #[test]
    fn pairing() {
        assert_eq!(
            pair(&WeightVec(vec![3, 2]), &CocharVec(vec![-1, 1])).unwrap(),
            -1
        );
        assert_eq!(
            pair(
                &WeightVec(vec![1, 1, 0, 0, 0, 0]),
                &CocharVec(vec![2, 1, 0, 0, -1, -2])
            )
            .unwrap(),
            3
        );
        assert_eq!(
            pair(&WeightVec(vec![7, -4]), &CocharVec::zero(2)).unwrap(),
            0
        );
        assert!(pair(&WeightVec(vec![1]), &CocharVec(vec![1, 2])).is_err());
    }

    #[test]
    fn cartan_properties() {
        for t in [
            LieType::g2(),
            LieType::a(4).unwrap(),
            LieType::c(3).unwrap(),
        ] {
            let d = build_root_datum(t).unwrap();
            let r = d.rank();
            for i in 0..r {
                assert_eq!(d.cartan[i][i], 2);
                for j in 0..r {
                    if i != j {
                        assert!(d.cartan[i][j] <= 0);
                    }
                    assert_eq!(
                        d.symmetrizer[i] * d.cartan[i][j],
                        d.symmetrizer[j] * d.cartan[j][i]
                    );
                }
            }
            // Fundamental weights are dual to the simple coroots.
            for (k, w) in d.fundamental_weights.iter().enumerate() {
                let p = d.simple_pairings(w);
                assert!(p.iter().enumerate().all(|(i, &x)| x == (i == k) as i64));
            }
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(weyl_group(&g2()).unwrap().len(), 12);
        assert_eq!(weyl_group(&a(1)).unwrap().len(), 2);
        assert_eq!(weyl_group(&a(5)).unwrap().len(), 720);
        let c3 = build_root_datum(LieType::c(3).unwrap()).unwrap();
        assert_eq!(weyl_group(&c3).unwrap().len(), 48);
    }

    #[test]
    fn group_cap() {
        assert!(matches!(
            weyl_group_capped(&a(5), 100),
            Err(Error::GroupTooLarge {
                order: 720,
                cap: 100
            })
        ));
    }

    #[test]
    fn group_order_and_identity() {
        let w = weyl_group(&g2()).unwrap();
        assert!(w[0].is_identity());
        assert_eq!(w.iter().filter(|e| e.sign == 1).count(), 6);
        for pair in w.windows(2) {
            assert!(pair[0].length <= pair[1].length);
        }
        assert_eq!(longest_element(&w).length, 6);
    }

    #[test]
    fn reflections() {
        let d = a(5);
        let group = weyl_group(&d).unwrap();
        let s1 = group
            .iter()
            .find(|w| w.length == 1 && w.action.get(0, 1) == 1)
            .unwrap();
        let v = WeightVec(vec![1, 1, 0, 0, 0, 0]);
        assert_eq!(act(s1, &v).unwrap(), v);

        let g = g2();
        let s = &g.simple_roots[0];
        assert_eq!(g.reflect(0, s), s.neg());
        assert_eq!(g.orbit(&WeightVec(vec![3, 2])).len(), 6);
    }

    #[test]
    fn dimensions() {
        let g = g2();
        assert_eq!(
            weyl_dim(&g, &WeightVec(vec![3, 2])).unwrap(),
            BigUint::from(14u32)
        );
        assert_eq!(
            weyl_dim(&g, &WeightVec(vec![6, 4])).unwrap(),
            BigUint::from(77u32)
        );
        assert_eq!(
            weyl_dim(&g, &WeightVec(vec![2, 1])).unwrap(),
            BigUint::from(7u32)
        );
        let d = a(5);
        assert_eq!(
            weyl_dim(&d, &WeightVec(vec![1, 1, 0, 0, 0, 0])).unwrap(),
            BigUint::from(15u32)
        );
        assert!(weyl_dim(&d, &WeightVec(vec![0, 1, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn inverse_matrix() {
        let g = g2();
        for w in weyl_group(&g).unwrap() {
            let inv = w.inverse();
            assert_eq!(w.action.mul(&inv.action), IntMatrix::identity(2));
        }
    }
}
