//! Ritz bounds for the Laplacian from the reduced orthonormal basis.
//!
//! `ε^(0) = 1/√n`, and for `ℓ ≥ 1`
//! `ε^(ℓ) = (ℓ e_ℓ − Σ_{j<ℓ} e_j) / √(ℓ(ℓ+1))` in 0-based coordinates. Every
//! `ε^(ℓ)` with `ℓ ≥ 1` is orthogonal to the constants, so by Ky Fan's
//! principle the sum of any `L` of their Rayleigh quotients (under any vertex
//! relabeling) bounds `λ_1 + … + λ_L` from above and `λ_{n-L} + … + λ_{n-1}`
//! from below.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::SymMatrix;
use crate::report::{BoundName, BoundReport, Params, Relation, Selection, Tolerance};
use crate::spectra::{partial_sum, Spectrum, SpectrumKind};

/// Agreement required between closed-form and direct evaluations.
const CROSS_CHECK: f64 = 1e-10;

/// Largest number of candidate subsets the exhaustive strategy will visit.
pub const EXHAUSTIVE_SUBSET_BUDGET: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct ReducedBasisVector {
    pub ell: usize,
    pub coeffs: Vec<f64>,
}

pub fn reduced_basis_vector(n: usize, ell: usize) -> ReducedBasisVector {
    assert!(ell < n, "basis index {ell} out of range for n = {n}");
    let mut coeffs = vec![0.0; n];
    if ell == 0 {
        coeffs.fill(1.0 / (n as f64).sqrt());
    } else {
        let l = ell as f64;
        let scale = 1.0 / (l * (l + 1.0)).sqrt();
        coeffs[..ell].fill(-scale);
        coeffs[ell] = l * scale;
    }
    ReducedBasisVector { ell, coeffs }
}

pub fn reduced_basis(n: usize) -> Vec<ReducedBasisVector> {
    (0..n).map(|ell| reduced_basis_vector(n, ell)).collect()
}

/// A bijection from new labels to original vertices: `perm[new] = original`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRelabeling {
    perm: Vec<usize>,
}

impl VertexRelabeling {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &v in &perm {
            if v >= perm.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidArgument(format!(
                    "{perm:?} is not a permutation of 0..{}",
                    perm.len()
                )));
            }
        }
        Ok(Self { perm })
    }

    pub fn identity(n: usize) -> Self {
        Self { perm: (0..n).collect() }
    }

    /// Relabeling that puts `front` first (in the given order) and every other
    /// vertex after it in increasing id order.
    pub fn with_front(n: usize, front: &[usize]) -> Result<Self> {
        let mut perm = front.to_vec();
        let mut used = vec![false; n];
        for &v in front {
            if v >= n || std::mem::replace(&mut used[v], true) {
                return Err(Error::InvalidArgument(format!("invalid vertex list {front:?}")));
            }
        }
        perm.extend((0..n).filter(|&v| !used[v]));
        Ok(Self { perm })
    }

    /// Relabeling that puts `back` last (in the given order).
    pub fn with_back(n: usize, back: &[usize]) -> Result<Self> {
        let mut used = vec![false; n];
        for &v in back {
            if v >= n || std::mem::replace(&mut used[v], true) {
                return Err(Error::InvalidArgument(format!("invalid vertex list {back:?}")));
            }
        }
        let mut perm: Vec<usize> = (0..n).filter(|&v| !used[v]).collect();
        perm.extend_from_slice(back);
        Ok(Self { perm })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }
}

fn agree(a: f64, b: f64) -> bool {
    (a - b).abs() <= CROSS_CHECK * (1.0 + a.abs().max(b.abs()))
}

/// `⟨ε^(ℓ), M′ ε^(ℓ)⟩` where `M′_{ij} = M_{perm[i], perm[j]}`.
///
/// Evaluated from matrix entries as
/// `(ℓ² m′_{ℓℓ} + Σ_{α,β<ℓ} m′_{αβ} − 2ℓ Σ_{α<ℓ} m′_{αℓ}) / (ℓ(ℓ+1))` and
/// cross-checked against the direct product.
pub fn quad_form_diag(m: &SymMatrix, ell: usize, relabel: &VertexRelabeling) -> Result<f64> {
    let n = m.order();
    if relabel.len() != n {
        return Err(Error::InvalidArgument(format!(
            "relabeling has {} entries for a matrix of order {n}",
            relabel.len()
        )));
    }
    if ell == 0 || ell >= n {
        return Err(Error::out_of_range("ell", ell as f64, 1.0, (n - 1) as f64));
    }
    let p = relabel.perm();
    let at = |i: usize, j: usize| m.get(p[i], p[j]);
    let l = ell as f64;
    let mut block = 0.0;
    let mut column = 0.0;
    for a in 0..ell {
        for b in 0..ell {
            block += at(a, b);
        }
        column += at(a, ell);
    }
    let closed = (l * l * at(ell, ell) + block - 2.0 * l * column) / (l * (l + 1.0));

    let eps = reduced_basis_vector(n, ell);
    let mut x = vec![0.0; n];
    for (new, &c) in eps.coeffs.iter().enumerate() {
        x[p[new]] = c;
    }
    let direct = m.quad_form(&x);
    if !agree(closed, direct) {
        return Err(Error::Internal(format!(
            "reduced-basis matrix element {closed} disagrees with direct product {direct} at ell = {ell}"
        )));
    }
    Ok(closed)
}

/// `⟨ε^(j), M′ ε^(ℓ)⟩` from matrix entries, used to cross-check the diagonal formula.
#[cfg(test)]
fn matrix_element(m: &SymMatrix, j: usize, ell: usize, relabel: &VertexRelabeling) -> f64 {
    let p = relabel.perm();
    let at = |a: usize, b: usize| m.get(p[a], p[b]);
    let (jf, lf) = (j as f64, ell as f64);
    let mut block = 0.0;
    for a in 0..j {
        for b in 0..ell {
            block += at(a, b);
        }
    }
    let s1: f64 = (0..ell).map(|b| at(b, j)).sum();
    let s2: f64 = (0..j).map(|a| at(a, ell)).sum();
    let raw = jf * lf * at(j, ell) + block - jf * s1 - lf * s2;
    raw / (jf * (jf + 1.0) * lf * (lf + 1.0)).sqrt()
}

fn require_laplacian(s: &Spectrum, g: &Graph) -> Result<()> {
    s.require_kind(SpectrumKind::Laplacian)?;
    if s.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "spectrum has {} values for a graph on {} vertices",
            s.len(),
            g.n()
        )));
    }
    Ok(())
}

fn require_n(g: &Graph, min: usize) -> Result<()> {
    if g.n() < min {
        return Err(Error::TooFewVertices {
            family: "this bound",
            n: g.n(),
            min,
        });
    }
    Ok(())
}

/// `λ_1 ≤ n/(n−1) · min_v d_v` and `λ_{n−1} ≥ n/(n−1) · max_v d_v`.
pub fn fiedler_bounds(g: &Graph, s: &Spectrum, tol: Tolerance) -> Result<[BoundReport; 2]> {
    require_n(g, 2)?;
    require_laplacian(s, g)?;
    let n = g.n();
    let factor = n as f64 / (n as f64 - 1.0);
    let (vmin, vmax) = extreme_degree_vertices(g);
    let low = BoundReport::evaluate(
        BoundName::FiedlerLowest,
        Relation::AtMost,
        factor * g.degree(vmin) as f64,
        s.values[1],
        tol,
    )
    .with_selection(Selection::Subset(vec![vmin]));
    let high = BoundReport::evaluate(
        BoundName::FiedlerHighest,
        Relation::AtLeast,
        factor * g.degree(vmax) as f64,
        s.values[n - 1],
        tol,
    )
    .with_selection(Selection::Subset(vec![vmax]));
    Ok([low, high])
}

/// Lowest-id vertices of minimum and maximum degree.
fn extreme_degree_vertices(g: &Graph) -> (usize, usize) {
    let d = g.degrees();
    let mut vmin = 0;
    let mut vmax = 0;
    for v in 1..g.n() {
        if d[v] < d[vmin] {
            vmin = v;
        }
        if d[v] > d[vmax] {
            vmax = v;
        }
    }
    (vmin, vmax)
}

/// Which end of the spectrum a bound constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Upper bound on a sum of the smallest nonzero-indexed eigenvalues.
    Lowest,
    /// Lower bound on a sum of the largest eigenvalues.
    Highest,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Lowest => "lowest",
            Side::Highest => "highest",
        }
    }

    fn relation(self) -> Relation {
        match self {
            Side::Lowest => Relation::AtMost,
            Side::Highest => Relation::AtLeast,
        }
    }

    /// Whether `candidate` beats `incumbent` for this side.
    fn better(self, candidate: f64, incumbent: f64) -> bool {
        match self {
            Side::Lowest => candidate < incumbent,
            Side::Highest => candidate > incumbent,
        }
    }
}

/// `(n−1)/(n−2) · (d_u + d_v − 2a_{uv}/(n−1))`.
pub fn pair_value(g: &Graph, u: usize, v: usize) -> f64 {
    let n = g.n() as f64;
    (n - 1.0) / (n - 2.0) * ((g.degree(u) + g.degree(v)) as f64 - 2.0 * g.a(u, v) / (n - 1.0))
}

/// The same pair value obtained as `⟨ε^(n−2),Hε^(n−2)⟩ + ⟨ε^(n−1),Hε^(n−1)⟩`
/// with `u`, `v` labeled last.
pub fn pair_value_via_basis(g: &Graph, u: usize, v: usize) -> Result<f64> {
    let n = g.n();
    let h = g.laplacian();
    let relabel = VertexRelabeling::with_back(n, &[u, v])?;
    Ok(quad_form_diag(&h, n - 2, &relabel)? + quad_form_diag(&h, n - 1, &relabel)?)
}

fn best_pair(g: &Graph, side: Side) -> (usize, usize, f64) {
    let mut best = (0, 1, pair_value(g, 0, 1));
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let value = pair_value(g, u, v);
            if side.better(value, best.2) {
                best = (u, v, value);
            }
        }
    }
    best
}

fn pair_sum_measured(s: &Spectrum, side: Side) -> f64 {
    let n = s.len();
    match side {
        Side::Lowest => s.values[1] + s.values[2],
        Side::Highest => s.values[n - 2] + s.values[n - 1],
    }
}

/// Optimal pair bound over all `u ≠ v`: `λ_1 + λ_2 ≤ min` or `max ≤ λ_{n−2} + λ_{n−1}`.
pub fn pair_sum_bounds(g: &Graph, s: &Spectrum, side: Side, tol: Tolerance) -> Result<BoundReport> {
    require_n(g, 3)?;
    require_laplacian(s, g)?;
    let (u, v, bound) = best_pair(g, side);
    let name = match side {
        Side::Lowest => BoundName::PairSumLowest,
        Side::Highest => BoundName::PairSumHighest,
    };
    Ok(
        BoundReport::evaluate(name, side.relation(), bound, pair_sum_measured(s, side), tol)
            .with_params(Params::new().text("mode", side.as_str()))
            .with_selection(Selection::Pairs(vec![(u, v)])),
    )
}

/// `2m/(n−2) + n(n−3)/((n−1)(n−2)) · d`, with `d` the minimum or maximum degree.
///
/// This is the pair value averaged over the partner vertex, so it can never be
/// tighter than [`pair_sum_bounds`]; that is verified on every call.
pub fn degree_averaged_pair_bounds(g: &Graph, s: &Spectrum, side: Side, tol: Tolerance) -> Result<BoundReport> {
    require_n(g, 3)?;
    require_laplacian(s, g)?;
    let n = g.n() as f64;
    let (vmin, vmax) = extreme_degree_vertices(g);
    let (vertex, name) = match side {
        Side::Lowest => (vmin, BoundName::DegreeAveragedLowest),
        Side::Highest => (vmax, BoundName::DegreeAveragedHighest),
    };
    let bound = 2.0 * g.m() as f64 / (n - 2.0) + n * (n - 3.0) / ((n - 1.0) * (n - 2.0)) * g.degree(vertex) as f64;
    let (_, _, pair) = best_pair(g, side);
    if side.better(bound, pair) && !agree(bound, pair) {
        return Err(Error::Internal(format!(
            "degree-averaged bound {bound} is tighter than the optimal pair bound {pair}"
        )));
    }
    Ok(
        BoundReport::evaluate(name, side.relation(), bound, pair_sum_measured(s, side), tol)
            .with_params(Params::new().text("mode", side.as_str()))
            .with_selection(Selection::Subset(vec![vertex])),
    )
}

fn check_subset(g: &Graph, subset: &[usize], expected: usize) -> Result<()> {
    let mut seen = vec![false; g.n()];
    let distinct = subset
        .iter()
        .all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true));
    if subset.len() != expected || !distinct {
        return Err(Error::SubsetSize {
            expected,
            found: if distinct { subset.len() } else { 0 },
        });
    }
    Ok(())
}

fn induced_edges(g: &Graph, subset: &[usize]) -> usize {
    let mut count = 0;
    for (i, &u) in subset.iter().enumerate() {
        for &v in &subset[i + 1..] {
            if g.has_edge(u, v) {
                count += 1;
            }
        }
    }
    count
}

/// `L/(L+1) · Σ_{x∈S} d_x + 1/(L+1) · Σ_{u≠v∈S} a_{uv}` for an `(L+1)`-subset `S`
/// (ordered double sum, so each induced edge counts twice).
pub fn l_sum_value(g: &Graph, subset: &[usize]) -> f64 {
    let l = subset.len() as f64 - 1.0;
    let degrees: usize = subset.iter().map(|&v| g.degree(v)).sum();
    (l * degrees as f64 + 2.0 * induced_edges(g, subset) as f64) / (l + 1.0)
}

/// `Σ_{ℓ=1}^{L} ⟨ε^(ℓ), H′ ε^(ℓ)⟩` with the subset labeled first.
pub fn l_sum_value_via_basis(g: &Graph, subset: &[usize]) -> Result<f64> {
    let h = g.laplacian();
    let relabel = VertexRelabeling::with_front(g.n(), subset)?;
    (1..subset.len()).map(|ell| quad_form_diag(&h, ell, &relabel)).sum()
}

/// Ritz bound from the `L+1` vertices in `subset`: `Σ_{i=1}^{L} λ_i ≤ B` for
/// [`Side::Lowest`], `B ≤ Σ_{j=n−L}^{n−1} λ_j` for [`Side::Highest`].
pub fn l_sum_bound(
    g: &Graph,
    s: &Spectrum,
    l: usize,
    subset: &[usize],
    side: Side,
    tol: Tolerance,
) -> Result<BoundReport> {
    require_laplacian(s, g)?;
    let n = g.n();
    if l == 0 || l >= n {
        return Err(Error::out_of_range("L", l as f64, 1.0, (n - 1) as f64));
    }
    check_subset(g, subset, l + 1)?;
    let bound = l_sum_value(g, subset);
    let via_basis = l_sum_value_via_basis(g, subset)?;
    if !agree(bound, via_basis) {
        return Err(Error::Internal(format!(
            "L-sum closed form {bound} disagrees with the basis evaluation {via_basis}"
        )));
    }
    let (name, measured) = match side {
        Side::Lowest => (BoundName::LSumLowest, partial_sum(s, l + 1)?),
        Side::Highest => (BoundName::LSumHighest, s.tail_sum(l)),
    };
    Ok(BoundReport::evaluate(name, side.relation(), bound, measured, tol)
        .with_params(Params::new().int("L", l).text("side", side.as_str()))
        .with_selection(Selection::Subset(subset.to_vec())))
}

/// The printed alternative built from an `L`-vertex block `T`:
/// `(n−L+1)/(n−L) · Σ_{x∈T} d_x + 1/(n−L) · Σ_{u≠v∈T} a_{uv}`, compared with
/// `λ_1 + … + λ_L` (`Lowest`) or `λ_{n−L} + … + λ_{n−1}` (`Highest`).
///
/// This form does not follow from the basis construction (at `L = 2` its
/// adjacency term has the opposite sign to the pair bound), so the report is
/// informational only.
pub fn l_sum_top_block_verbatim(
    g: &Graph,
    s: &Spectrum,
    l: usize,
    block: &[usize],
    side: Side,
    tol: Tolerance,
) -> Result<BoundReport> {
    require_laplacian(s, g)?;
    let n = g.n();
    if l == 0 || l >= n {
        return Err(Error::out_of_range("L", l as f64, 1.0, (n - 1) as f64));
    }
    check_subset(g, block, l)?;
    let (nf, lf) = (n as f64, l as f64);
    let degrees: usize = block.iter().map(|&v| g.degree(v)).sum();
    let bound = (nf - lf + 1.0) / (nf - lf) * degrees as f64 + 2.0 * induced_edges(g, block) as f64 / (nf - lf);
    let (name, measured) = match side {
        Side::Lowest => (BoundName::LSumTopBlockLowestVerbatim, partial_sum(s, l + 1)?),
        Side::Highest => (BoundName::LSumTopBlockHighestVerbatim, s.tail_sum(l)),
    };
    Ok(BoundReport::evaluate(name, side.relation(), bound, measured, tol)
        .with_params(Params::new().int("L", l).text("side", side.as_str()))
        .with_selection(Selection::Subset(block.to_vec()))
        .informational())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetStrategy {
    /// Every `(L+1)`-subset; allowed while `C(n, L+1) ≤` [`EXHAUSTIVE_SUBSET_BUDGET`].
    Exhaustive,
    /// Vertices by degree (ascending for `Lowest`, descending for `Highest`),
    /// ties broken by induced adjacencies to the vertices already chosen
    /// (fewest for `Lowest`, most for `Highest`), then by lowest id.
    GreedyDegree,
    /// The `L+1` vertices of smallest (or largest) degree, ties by lowest id.
    DegreeSorted,
}

impl std::str::FromStr for SubsetStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(SubsetStrategy::Exhaustive),
            "greedy-degree" => Ok(SubsetStrategy::GreedyDegree),
            "degree-sorted" => Ok(SubsetStrategy::DegreeSorted),
            other => Err(Error::InvalidArgument(format!("unknown subset strategy `{other}`"))),
        }
    }
}

impl SubsetStrategy {
    pub fn as_str(self) -> &'static str {
        match self {
            SubsetStrategy::Exhaustive => "exhaustive",
            SubsetStrategy::GreedyDegree => "greedy-degree",
            SubsetStrategy::DegreeSorted => "degree-sorted",
        }
    }
}

/// `C(n, r)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Picks the `(L+1)`-subset for [`l_sum_bound`].
pub fn select_subset(g: &Graph, l: usize, strategy: SubsetStrategy, side: Side) -> Result<Vec<usize>> {
    let n = g.n();
    if l == 0 || l >= n {
        return Err(Error::out_of_range("L", l as f64, 1.0, (n - 1) as f64));
    }
    let size = l + 1;
    match strategy {
        SubsetStrategy::Exhaustive => {
            let candidates = binomial(n, size);
            if candidates > EXHAUSTIVE_SUBSET_BUDGET {
                return Err(Error::ExhaustiveBudget {
                    candidates,
                    budget: EXHAUSTIVE_SUBSET_BUDGET,
                });
            }
            let mut current: Vec<usize> = (0..size).collect();
            let mut best = (l_sum_value(g, &current), current.clone());
            while next_combination(&mut current, n) {
                let value = l_sum_value(g, &current);
                if side.better(value, best.0) && !agree(value, best.0) {
                    best = (value, current.clone());
                }
            }
            Ok(best.1)
        }
        SubsetStrategy::DegreeSorted => {
            let mut order: Vec<usize> = (0..n).collect();
            match side {
                Side::Lowest => order.sort_by_key(|&v| (g.degree(v), v)),
                Side::Highest => order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v)),
            }
            order.truncate(size);
            Ok(order)
        }
        SubsetStrategy::GreedyDegree => {
            let mut chosen = Vec::with_capacity(size);
            let mut used = vec![false; n];
            while chosen.len() < size {
                let key = |v: usize| {
                    let adj = chosen.iter().filter(|&&c| g.has_edge(v, c)).count() as i64;
                    let d = g.degree(v) as i64;
                    match side {
                        Side::Lowest => (d, adj, v),
                        Side::Highest => (-d, -adj, v),
                    }
                };
                let next = (0..n).filter(|&v| !used[v]).min_by_key(|&v| key(v)).expect("n > L");
                used[next] = true;
                chosen.push(next);
            }
            Ok(chosen)
        }
    }
}

/// Advances `c` to the next `r`-combination of `0..n` in lexicographic order.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let r = c.len();
    let mut i = r;
    while i > 0 {
        i -= 1;
        if c[i] < n - r + i {
            c[i] += 1;
            for j in i + 1..r {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_cycle, gen_path, gen_random_connected, gen_star};
    use crate::matrix::dot;
    use crate::report::Verdict;
    use crate::spectra::spectrum;
    use proptest::prelude::*;

    fn lap(g: &Graph) -> Spectrum {
        spectrum(g, SpectrumKind::Laplacian).unwrap()
    }

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn small_basis_vectors() {
        let r = 0.5f64.sqrt();
        for (got, want) in reduced_basis_vector(2, 1).coeffs.iter().zip([-r, r]) {
            assert!((got - want).abs() < 1e-15);
        }
        let e = reduced_basis_vector(3, 2).coeffs;
        let s = 6f64.sqrt();
        for (got, want) in e.iter().zip([-1.0 / s, -1.0 / s, 2.0 / s]) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn basis_is_orthonormal() {
        let b = reduced_basis(50);
        for i in 0..50 {
            for j in 0..50 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot(&b[i].coeffs, &b[j].coeffs) - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn quad_form_examples() {
        let g = gen_random_connected(9, 0.4, 3).unwrap();
        let h = g.laplacian();
        let n = g.n();
        for v in 0..n {
            let r = VertexRelabeling::with_back(n, &[v]).unwrap();
            let val = quad_form_diag(&h, n - 1, &r).unwrap();
            assert!((val - n as f64 / (n as f64 - 1.0) * g.degree(v) as f64).abs() < 1e-12);
        }
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let r = VertexRelabeling::with_front(n, &[u, v]).unwrap();
                let val = quad_form_diag(&h, 1, &r).unwrap();
                let want = (g.degree(u) + g.degree(v)) as f64 / 2.0 + g.a(u, v);
                assert!((val - want).abs() < 1e-12);
            }
        }
        let id = SymMatrix::identity(7);
        for ell in 1..7 {
            assert!((quad_form_diag(&id, ell, &VertexRelabeling::identity(7)).unwrap() - 1.0).abs() < 1e-14);
        }
        assert!(quad_form_diag(&id, 0, &VertexRelabeling::identity(7)).is_err());
    }

    #[test]
    fn off_diagonal_elements_match_direct_products() {
        let g = gen_random_connected(8, 0.5, 9).unwrap();
        let h = g.laplacian();
        let r = VertexRelabeling::new(vec![3, 1, 7, 0, 2, 6, 5, 4]).unwrap();
        for j in 1..8 {
            for l in 1..8 {
                let mut x = vec![0.0; 8];
                let mut y = vec![0.0; 8];
                for (new, &orig) in r.perm().iter().enumerate() {
                    x[orig] = reduced_basis_vector(8, j).coeffs[new];
                    y[orig] = reduced_basis_vector(8, l).coeffs[new];
                }
                assert!((matrix_element(&h, j, l, &r) - h.bilinear(&x, &y)).abs() < 1e-12);
            }
            let diag = quad_form_diag(&h, j, &r).unwrap();
            assert!((matrix_element(&h, j, j, &r) - diag).abs() < 1e-12);
        }
    }

    #[test]
    fn fiedler_examples() {
        let k4 = gen_complete(4).unwrap();
        let [lo, hi] = fiedler_bounds(&k4, &lap(&k4), tol()).unwrap();
        assert_eq!((lo.verdict, hi.verdict), (Verdict::Equality, Verdict::Equality));
        let s5 = gen_star(5).unwrap();
        let [lo, hi] = fiedler_bounds(&s5, &lap(&s5), tol()).unwrap();
        assert_eq!(hi.verdict, Verdict::Equality);
        assert_eq!(lo.verdict, Verdict::Pass);
        let p3 = gen_path(3).unwrap();
        let [lo, _] = fiedler_bounds(&p3, &lap(&p3), tol()).unwrap();
        assert!((lo.bound - 1.5).abs() < 1e-15 && (lo.measured - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pair_sum_examples() {
        let k4 = gen_complete(4).unwrap();
        let r = pair_sum_bounds(&k4, &lap(&k4), Side::Lowest, tol()).unwrap();
        assert!((r.bound - 8.0).abs() < 1e-12);
        assert_eq!(r.verdict, Verdict::Equality);
        let s4 = gen_star(4).unwrap();
        let r = pair_sum_bounds(&s4, &lap(&s4), Side::Highest, tol()).unwrap();
        assert!((r.bound - 5.0).abs() < 1e-12);
        assert_eq!(r.verdict, Verdict::Equality);
        let p3 = gen_path(3).unwrap();
        let r = pair_sum_bounds(&p3, &lap(&p3), Side::Lowest, tol()).unwrap();
        assert!((r.bound - 4.0).abs() < 1e-12);
        assert!(r.holds());
    }

    #[test]
    fn pair_value_is_two_basis_elements() {
        for seed in 0..10 {
            let g = gen_random_connected(12, 0.3, seed).unwrap();
            for u in 0..12 {
                for v in 0..12 {
                    if u != v {
                        let a = pair_value(&g, u, v);
                        let b = pair_value_via_basis(&g, u, v).unwrap();
                        assert!((a - b).abs() < 1e-10);
                    }
                }
            }
        }
    }

    #[test]
    fn degree_averaged_examples() {
        let k4 = gen_complete(4).unwrap();
        let r = degree_averaged_pair_bounds(&k4, &lap(&k4), Side::Lowest, tol()).unwrap();
        assert!((r.bound - 8.0).abs() < 1e-12);
        assert_eq!(r.verdict, Verdict::Equality);
        let s4 = gen_star(4).unwrap();
        let r = degree_averaged_pair_bounds(&s4, &lap(&s4), Side::Highest, tol()).unwrap();
        assert!((r.bound - 5.0).abs() < 1e-12);
        assert!(r.holds());
        let c4 = gen_cycle(4).unwrap();
        let r = degree_averaged_pair_bounds(&c4, &lap(&c4), Side::Lowest, tol()).unwrap();
        assert!((r.bound - 16.0 / 3.0).abs() < 1e-12);
        assert!((r.measured - 4.0).abs() < 1e-12);
    }

    #[test]
    fn l_sum_examples() {
        let k4 = gen_complete(4).unwrap();
        let r = l_sum_bound(&k4, &lap(&k4), 3, &[0, 1, 2, 3], Side::Lowest, tol()).unwrap();
        assert!((r.bound - 12.0).abs() < 1e-12);
        assert_eq!(r.verdict, Verdict::Equality);
        let s5 = gen_star(5).unwrap();
        let r = l_sum_bound(&s5, &lap(&s5), 1, &[0, 1], Side::Lowest, tol()).unwrap();
        assert!((r.bound - 1.0).abs() < 1e-12);
        assert_eq!(r.verdict, Verdict::Equality);
        let g = gen_random_connected(10, 0.4, 1).unwrap();
        for (u, v) in [(0, 1), (2, 7)] {
            let want = (g.degree(u) + g.degree(v)) as f64 / 2.0 + g.a(u, v);
            assert!((l_sum_value(&g, &[u, v]) - want).abs() < 1e-14);
        }
        assert!(matches!(
            l_sum_bound(&k4, &lap(&k4), 2, &[0, 1], Side::Lowest, tol()),
            Err(Error::SubsetSize { .. })
        ));
        assert!(l_sum_bound(&k4, &lap(&k4), 1, &[0, 0], Side::Lowest, tol()).is_err());
    }

    #[test]
    fn subset_selection_examples() {
        let s6 = gen_star(6).unwrap();
        let sub = select_subset(&s6, 1, SubsetStrategy::Exhaustive, Side::Lowest).unwrap();
        assert!(sub.iter().all(|&v| v != 5));
        let p4 = gen_path(4).unwrap();
        let sub = select_subset(&p4, 1, SubsetStrategy::Exhaustive, Side::Lowest).unwrap();
        assert_eq!(sub, vec![0, 3]);
        assert!((l_sum_value(&p4, &sub) - 1.0).abs() < 1e-15);
        let k5 = gen_complete(5).unwrap();
        for strategy in [
            SubsetStrategy::Exhaustive,
            SubsetStrategy::GreedyDegree,
            SubsetStrategy::DegreeSorted,
        ] {
            let sub = select_subset(&k5, 2, strategy, Side::Lowest).unwrap();
            assert!((l_sum_value(&k5, &sub) - l_sum_value(&k5, &[0, 1, 2])).abs() < 1e-12);
        }
        let big = gen_random_connected(60, 0.1, 0).unwrap();
        assert!(matches!(
            select_subset(&big, 10, SubsetStrategy::Exhaustive, Side::Lowest),
            Err(Error::ExhaustiveBudget { .. })
        ));
    }

    #[test]
    fn greedy_prefers_non_adjacent_ties() {
        // Path 0-1-2-3 plus leaf 4 on 2: leaves 0, 3, 4 all degree 1; 0 and 3
        // are non-adjacent, 3 and 4 are non-adjacent too.
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        let sub = select_subset(&g, 2, SubsetStrategy::GreedyDegree, Side::Lowest).unwrap();
        assert_eq!(sub, vec![0, 3, 4]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(40, 20), 137_846_528_820);
        assert_eq!(binomial(3, 4), 0);
    }

    #[test]
    fn verbatim_block_is_informational() {
        let g = gen_random_connected(10, 0.4, 2).unwrap();
        let r = l_sum_top_block_verbatim(&g, &lap(&g), 2, &[0, 1], Side::Lowest, tol()).unwrap();
        assert!(!r.asserted);
        assert!(!r.is_failure());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn l_sums_hold_on_random_subsets(seed in 0u64..10_000, n in 4usize..16, l_frac in 0.0f64..1.0) {
            let g = gen_random_connected(n, 0.35, seed).unwrap();
            let s = lap(&g);
            let l = 1 + ((n - 2) as f64 * l_frac) as usize;
            let mut rng = crate::rng::SplitMix64::new(seed ^ 0xabcdef);
            let mut verts: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                verts.swap(i, rng.next_below(i + 1));
            }
            let subset = &verts[..=l];
            for side in [Side::Lowest, Side::Highest] {
                let r = l_sum_bound(&g, &s, l, subset, side, tol()).unwrap();
                prop_assert!(r.holds(), "{r:?}");
            }
        }

        #[test]
        fn averaged_never_tighter_than_pairs(seed in 0u64..10_000, n in 4usize..20) {
            let g = gen_random_connected(n, 0.3, seed).unwrap();
            let s = lap(&g);
            let avg = degree_averaged_pair_bounds(&g, &s, Side::Lowest, tol()).unwrap();
            let pair = pair_sum_bounds(&g, &s, Side::Lowest, tol()).unwrap();
            prop_assert!(avg.bound >= pair.bound - 1e-12);
            prop_assert!(avg.holds() && pair.holds());
        }
    }
}
