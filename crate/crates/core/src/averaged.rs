//! The averaged variational principle and its pair-set corollaries.
//!
//! For a symmetric `M` with ascending eigenpairs `(μ_j, ψ^(j))`, a weighted
//! family of trial vectors `f_z` indexed by `𝔐`, a marked subset `𝔐₀ ⊆ 𝔐`
//! and any `k`,
//!
//! ```text
//! μ_k · c ≤ r,   c = Σ_{𝔐₀} w⟨f,f⟩ − Σ_{j<k} W_j,
//!                r = Σ_{𝔐₀} w⟨Mf,f⟩ − Σ_{j<k} μ_j W_j,
//!                W_j = Σ_{𝔐} w |⟨f, ψ^(j)⟩|².
//! ```
//!
//! Whenever `μ_k · c ≥ 0` this yields `Σ_{j<k} μ_j W_j ≤ Σ_{𝔐₀} w⟨Mf,f⟩`.
//! Taking `f` to range over pair vectors gives the corollaries below, all of
//! which evaluate a vertex-pair set `𝔐₀`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{dot, norm_sq, SymMatrix};
use crate::report::{BoundName, BoundReport, Params, Relation, Selection, Tolerance};
use crate::spectra::{magnitude_order, partial_sum, RawEigen, Spectrum, SpectrumKind};

/// Largest number of ordered pairs the exhaustive pair search accepts.
pub const EXHAUSTIVE_PAIR_LIMIT: usize = 30;
/// Largest number of candidate pair sets the exhaustive search visits.
pub const EXHAUSTIVE_PAIR_BUDGET: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct TrialFamily {
    vectors: Vec<Vec<f64>>,
    weights: Vec<f64>,
    marked: Vec<bool>,
}

impl TrialFamily {
    /// `marked` lists the indices forming `𝔐₀`.
    pub fn new(vectors: Vec<Vec<f64>>, weights: Vec<f64>, marked: &[usize]) -> Result<Self> {
        if weights.len() != vectors.len() {
            return Err(Error::InvalidArgument(format!(
                "{} weights for {} vectors",
                weights.len(),
                vectors.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| !(**w > 0.0 && w.is_finite())) {
            return Err(Error::InvalidArgument(format!("weights must be positive, got {w}")));
        }
        if let Some(first) = vectors.first() {
            if vectors.iter().any(|v| v.len() != first.len()) {
                return Err(Error::InvalidArgument("trial vectors differ in length".into()));
            }
        }
        let mut flags = vec![false; vectors.len()];
        for &i in marked {
            if i >= vectors.len() {
                return Err(Error::InvalidArgument(format!(
                    "marked index {i} outside a family of {}",
                    vectors.len()
                )));
            }
            flags[i] = true;
        }
        Ok(Self {
            vectors,
            weights,
            marked: flags,
        })
    }

    /// Counting measure: every weight is one.
    pub fn counting(vectors: Vec<Vec<f64>>, marked: &[usize]) -> Result<Self> {
        let weights = vec![1.0; vectors.len()];
        Self::new(vectors, weights, marked)
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn is_marked(&self, i: usize) -> bool {
        self.marked[i]
    }
}

/// The quantities entering the averaged principle for one `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct AveragedTerms {
    pub k: usize,
    /// The eigenvalue multiplying `c`; for `k = n` the largest eigenvalue.
    pub mu_k: f64,
    pub coefficient: f64,
    pub rhs: f64,
    /// `Σ_{j<k} μ_j W_j`.
    pub weighted_eigen_sum: f64,
    /// `Σ_{𝔐₀} w⟨Mf,f⟩`.
    pub marked_energy: f64,
    /// `W_j` for `j < k`.
    pub projections: Vec<f64>,
}

/// Evaluates the principle's terms from ascending eigenpairs.
pub fn averaged_terms(m: &SymMatrix, eig: &RawEigen, fam: &TrialFamily, k: usize) -> Result<AveragedTerms> {
    let n = m.order();
    let vectors = eig.vectors.as_ref().ok_or(Error::MissingEigenvectors)?;
    if k == 0 || k > n {
        return Err(Error::out_of_range("k", k as f64, 1.0, n as f64));
    }
    if fam.vectors.first().is_some_and(|f| f.len() != n) {
        return Err(Error::InvalidArgument(
            "trial vectors do not match the matrix order".into(),
        ));
    }
    let mut projections = vec![0.0; k];
    let mut marked_norm = 0.0;
    let mut marked_energy = 0.0;
    for (i, f) in fam.vectors.iter().enumerate() {
        let w = fam.weights[i];
        for (j, p) in projections.iter_mut().enumerate() {
            let c = dot(f, &vectors[j]);
            *p += w * c * c;
        }
        if fam.marked[i] {
            marked_norm += w * norm_sq(f);
            marked_energy += w * m.quad_form(f);
        }
    }
    let weighted_eigen_sum: f64 = projections.iter().zip(&eig.values).map(|(p, mu)| p * mu).sum();
    let coefficient = marked_norm - projections.iter().sum::<f64>();
    Ok(AveragedTerms {
        k,
        mu_k: eig.values[k.min(n - 1)],
        coefficient,
        rhs: marked_energy - weighted_eigen_sum,
        weighted_eigen_sum,
        marked_energy,
        projections,
    })
}

/// Canonical-order spectrum to ascending eigenpairs.
fn ascending(s: &Spectrum) -> Result<RawEigen> {
    let vectors = s.vectors.clone().ok_or(Error::MissingEigenvectors)?;
    let mut raw = RawEigen {
        values: s.values.clone(),
        vectors: Some(vectors),
    };
    if s.kind == SpectrumKind::Adjacency {
        raw.values.reverse();
        if let Some(v) = raw.vectors.as_mut() {
            v.reverse();
        }
    }
    Ok(raw)
}

/// Checks `μ_k c ≤ r` and, when `μ_k c ≥ 0` within tolerance, also the sum
/// form `Σ_{j<k} μ_j W_j ≤ Σ_{𝔐₀} w⟨Mf,f⟩`.
pub fn averaged_principle_check(
    m: &SymMatrix,
    s: &Spectrum,
    fam: &TrialFamily,
    k: usize,
    tol: Tolerance,
) -> Result<Vec<BoundReport>> {
    averaged_principle_check_raw(m, &ascending(s)?, fam, k, tol)
}

pub fn averaged_principle_check_raw(
    m: &SymMatrix,
    eig: &RawEigen,
    fam: &TrialFamily,
    k: usize,
    tol: Tolerance,
) -> Result<Vec<BoundReport>> {
    let t = averaged_terms(m, eig, fam, k)?;
    let params = || Params::new().int("k", k);
    let lhs = t.mu_k * t.coefficient;
    let mut reports = vec![
        BoundReport::evaluate(BoundName::AveragedPrinciple, Relation::AtMost, t.rhs, lhs, tol)
            .with_params(params().real("coefficient", t.coefficient)),
    ];
    if lhs >= -tol.threshold(t.rhs) {
        reports.push(
            BoundReport::evaluate(
                BoundName::AveragedPrincipleSum,
                Relation::AtMost,
                t.marked_energy,
                t.weighted_eigen_sum,
                tol,
            )
            .with_params(params()),
        );
    } else {
        reports.push(
            BoundReport::not_applicable(
                BoundName::AveragedPrincipleSum,
                Relation::AtMost,
                format!("mu_k * c = {lhs} is negative"),
            )
            .with_params(params()),
        );
    }
    Ok(reports)
}

/// Distinct ordered vertex pairs `(u, v)`, `u ≠ v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSet {
    pairs: Vec<(usize, usize)>,
}

impl PairSet {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::with_capacity(pairs.len());
        for &(u, v) in &pairs {
            if u >= n || v >= n {
                return Err(Error::InvalidPair {
                    u,
                    v,
                    reason: "vertex out of range",
                });
            }
            if u == v {
                return Err(Error::InvalidPair {
                    u,
                    v,
                    reason: "pair repeats a vertex",
                });
            }
            if !seen.insert((u, v)) {
                return Err(Error::InvalidPair {
                    u,
                    v,
                    reason: "duplicate pair",
                });
            }
        }
        Ok(Self { pairs })
    }

    /// All `n(n−1)` ordered pairs in lexicographic order.
    pub fn all_ordered(n: usize) -> Self {
        Self {
            pairs: ordered_pairs(n).collect(),
        }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    fn selection(&self) -> Selection {
        Selection::Pairs(self.pairs.clone())
    }
}

fn ordered_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
}

/// `⟨H b, b⟩ = d_u + d_v + 2a_{uv}` for `b = e_u − e_v`.
pub fn laplacian_pair_cost(g: &Graph, u: usize, v: usize) -> f64 {
    (g.degree(u) + g.degree(v)) as f64 + 2.0 * g.a(u, v)
}

/// `‖A(e_u − e_v)‖² = d_u + d_v − 2(A²)_{uv}`.
pub fn adjacency_square_pair_cost(g: &Graph, u: usize, v: usize) -> f64 {
    (g.degree(u) + g.degree(v)) as f64 - 2.0 * g.common_neighbors(u, v) as f64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PairStrategy {
    /// Cheapest pairs first, ties by `(u, v)` lexicographically.
    #[default]
    Greedy,
    /// Every subset of the right size; only for tiny graphs.
    Exhaustive,
}

impl std::str::FromStr for PairStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "greedy" => Ok(PairStrategy::Greedy),
            "exhaustive" | "exhaustive-small" => Ok(PairStrategy::Exhaustive),
            other => Err(Error::InvalidArgument(format!("unknown pair strategy `{other}`"))),
        }
    }
}

fn sorted_pairs_by(g: &Graph, cost: impl Fn(usize, usize) -> f64) -> Vec<((usize, usize), f64)> {
    let mut all: Vec<_> = ordered_pairs(g.n()).map(|(u, v)| ((u, v), cost(u, v))).collect();
    all.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)));
    all
}

fn select_cheapest(
    g: &Graph,
    count: usize,
    strategy: PairStrategy,
    cost: impl Fn(usize, usize) -> f64,
) -> Result<PairSet> {
    let n = g.n();
    let available = n * (n - 1);
    if count > available {
        return Err(Error::InsufficientPairs {
            needed: count,
            available,
        });
    }
    match strategy {
        PairStrategy::Greedy => {
            let sorted = sorted_pairs_by(g, cost);
            Ok(PairSet {
                pairs: sorted.into_iter().take(count).map(|(p, _)| p).collect(),
            })
        }
        PairStrategy::Exhaustive => {
            if available > EXHAUSTIVE_PAIR_LIMIT {
                return Err(Error::ExhaustiveBudget {
                    candidates: available as u128,
                    budget: EXHAUSTIVE_PAIR_LIMIT as u128,
                });
            }
            let candidates = crate::basis::binomial(available, count);
            if candidates > EXHAUSTIVE_PAIR_BUDGET {
                return Err(Error::ExhaustiveBudget {
                    candidates,
                    budget: EXHAUSTIVE_PAIR_BUDGET,
                });
            }
            let all: Vec<(usize, usize)> = ordered_pairs(n).collect();
            let costs: Vec<f64> = all.iter().map(|&(u, v)| cost(u, v)).collect();
            let total = |c: &[usize]| c.iter().map(|&i| costs[i]).sum::<f64>();
            let mut current: Vec<usize> = (0..count).collect();
            let mut best = (total(&current), current.clone());
            while crate::basis::next_combination(&mut current, available) {
                let value = total(&current);
                if value < best.0 - 1e-12 {
                    best = (value, current.clone());
                }
            }
            Ok(PairSet {
                pairs: best.1.into_iter().map(|i| all[i]).collect(),
            })
        }
    }
}

/// `n(k−1)` ordered pairs of smallest `d_u + d_v + 2a_{uv}`.
pub fn select_pairs_laplacian(g: &Graph, k: usize, strategy: PairStrategy) -> Result<PairSet> {
    let n = g.n();
    if k < 2 || k > n {
        return Err(Error::out_of_range("k", k as f64, 2.0, n as f64));
    }
    select_cheapest(g, n * (k - 1), strategy, |u, v| laplacian_pair_cost(g, u, v))
}

fn check_cardinality(m0: &PairSet, expected: usize) -> Result<()> {
    if m0.len() != expected {
        return Err(Error::PairSetCardinality {
            expected,
            found: m0.len(),
        });
    }
    Ok(())
}

fn require_spectrum(s: &Spectrum, g: &Graph, kind: SpectrumKind) -> Result<()> {
    s.require_kind(kind)?;
    if s.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "spectrum has {} values for a graph on {} vertices",
            s.len(),
            g.n()
        )));
    }
    Ok(())
}

/// `Σ_{j<k} λ_j ≤ (1/2n) Σ_{𝔐₀} (d_u + d_v + 2a_{uv})` with `|𝔐₀| = n(k−1)`.
pub fn laplacian_pairsum_bound(g: &Graph, s: &Spectrum, k: usize, m0: &PairSet, tol: Tolerance) -> Result<BoundReport> {
    require_spectrum(s, g, SpectrumKind::Laplacian)?;
    let n = g.n();
    if k < 2 || k > n {
        return Err(Error::out_of_range("k", k as f64, 2.0, n as f64));
    }
    check_cardinality(m0, n * (k - 1))?;
    let total: f64 = m0.pairs.iter().map(|&(u, v)| laplacian_pair_cost(g, u, v)).sum();
    Ok(BoundReport::evaluate(
        BoundName::LaplacianPairSet,
        Relation::AtMost,
        total / (2.0 * n as f64),
        partial_sum(s, k)?,
        tol,
    )
    .with_params(Params::new().int("k", k))
    .with_selection(m0.selection()))
}

/// Trial family `{e_u − e_v}` over all ordered pairs, marking those in `m0`.
pub fn pair_difference_family(n: usize, m0: &PairSet) -> Result<TrialFamily> {
    pair_family(n, m0, |u, v| {
        let mut f = vec![0.0; n];
        f[u] = 1.0;
        f[v] = -1.0;
        f
    })
}

/// Trial family `{√d_v e_u − √d_u e_v}` over all ordered pairs, marking those in `m0`.
pub fn normalized_pair_family(g: &Graph, m0: &PairSet) -> Result<TrialFamily> {
    let n = g.n();
    pair_family(n, m0, |u, v| {
        let mut f = vec![0.0; n];
        f[u] = (g.degree(v) as f64).sqrt();
        f[v] = -(g.degree(u) as f64).sqrt();
        f
    })
}

fn pair_family(n: usize, m0: &PairSet, make: impl Fn(usize, usize) -> Vec<f64>) -> Result<TrialFamily> {
    let index = |u: usize, v: usize| u * (n - 1) + if v > u { v - 1 } else { v };
    let vectors: Vec<Vec<f64>> = ordered_pairs(n).map(|(u, v)| make(u, v)).collect();
    let marked: Vec<usize> = m0.pairs.iter().map(|&(u, v)| index(u, v)).collect();
    TrialFamily::counting(vectors, &marked)
}

fn normalized_validity(g: &Graph, k: usize, m0: &PairSet) -> (f64, f64) {
    let have: f64 = m0.pairs.iter().map(|&(u, v)| (g.degree(u) + g.degree(v)) as f64).sum();
    let need = 4.0 * (k as f64 - 1.0) * g.m() as f64;
    (have, need)
}

/// Takes pairs in increasing `d_u + d_v + 2a_{uv}` until `Σ (d_u + d_v) ≥ 4(k−1)m`.
pub fn select_pairs_normalized(g: &Graph, k: usize) -> Result<PairSet> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::out_of_range("k", k as f64, 1.0, n as f64));
    }
    let need = 4 * (k - 1) * g.m();
    let mut have = 0;
    let mut pairs = Vec::new();
    for ((u, v), _) in sorted_pairs_by(g, |u, v| laplacian_pair_cost(g, u, v)) {
        if have >= need {
            break;
        }
        have += g.degree(u) + g.degree(v);
        pairs.push((u, v));
    }
    if have < need {
        return Err(Error::InsufficientPairs {
            needed: need,
            available: have,
        });
    }
    Ok(PairSet { pairs })
}

fn normalized_preconditions(g: &Graph, s: &Spectrum, k: usize) -> Result<()> {
    require_spectrum(s, g, SpectrumKind::Normalized)?;
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex { vertex: v });
    }
    if k == 0 || k > g.n() {
        return Err(Error::out_of_range("k", k as f64, 1.0, g.n() as f64));
    }
    Ok(())
}

fn not_applicable_normalized(name: BoundName, k: usize, have: f64, need: f64, m0: &PairSet) -> BoundReport {
    BoundReport::not_applicable(
        name,
        Relation::AtMost,
        format!("pair set has sum of degrees {have}, below the required {need}"),
    )
    .with_params(Params::new().int("k", k))
    .with_selection(m0.selection())
}

/// `Σ_{j<k} 𝔠_j ≤ (1/4m) Σ_{𝔐₀} (d_u + d_v + 2a_{uv})`, valid when
/// `Σ_{𝔐₀} (d_u + d_v) ≥ 4(k−1)m`.
pub fn normalized_pairsum_bound(
    g: &Graph,
    s: &Spectrum,
    k: usize,
    m0: &PairSet,
    tol: Tolerance,
) -> Result<BoundReport> {
    normalized_preconditions(g, s, k)?;
    let (have, need) = normalized_validity(g, k, m0);
    if have < need {
        return Ok(not_applicable_normalized(
            BoundName::NormalizedPairSet,
            k,
            have,
            need,
            m0,
        ));
    }
    let total: f64 = m0.pairs.iter().map(|&(u, v)| laplacian_pair_cost(g, u, v)).sum();
    Ok(BoundReport::evaluate(
        BoundName::NormalizedPairSet,
        Relation::AtMost,
        total / (4.0 * g.m() as f64),
        partial_sum(s, k)?,
        tol,
    )
    .with_params(Params::new().int("k", k))
    .with_selection(m0.selection()))
}

/// `‖Ĥ 𝔟‖²` for `𝔟 = √d_v e_u − √d_u e_v`:
/// `d_u + d_v + 4a_{uv} + Σ_x (1/d_x)(a_{xu}√(d_v/d_u) − a_{xv}√(d_u/d_v))²`.
pub fn normalized_square_pair_cost(g: &Graph, u: usize, v: usize) -> f64 {
    let (du, dv) = (g.degree(u) as f64, g.degree(v) as f64);
    let (ru, rv) = ((dv / du).sqrt(), (du / dv).sqrt());
    (du + dv + 4.0 * g.a(u, v)) + deviation(g, u, v, ru, rv)
}

/// The printed per-pair term
/// `d_u + d_v + 4a_{uv} + Σ_x (1/d_x)(a_{xv} d_u/d_v − a_{xu} d_v/d_u)²`.
pub fn normalized_square_pair_cost_verbatim(g: &Graph, u: usize, v: usize) -> f64 {
    let (du, dv) = (g.degree(u) as f64, g.degree(v) as f64);
    (du + dv + 4.0 * g.a(u, v)) + deviation(g, u, v, -dv / du, -du / dv)
}

/// `Σ_x (1/d_x)(a_{xu}·cu − a_{xv}·cv)²`, summing over the neighbours of `u` and `v`.
fn deviation(g: &Graph, u: usize, v: usize, cu: f64, cv: f64) -> f64 {
    let mut total = 0.0;
    let mut visit = |x: usize| {
        let t = g.a(x, u) * cu - g.a(x, v) * cv;
        total += t * t / g.degree(x) as f64;
    };
    for &x in g.neighbors(u) {
        visit(x);
    }
    for &x in g.neighbors(v) {
        if !g.has_edge(x, u) {
            visit(x);
        }
    }
    total
}

/// `Σ_{j<k} 𝔠_j² ≤ (1/4m) Σ_{𝔐₀} ‖Ĥ𝔟_{u,v}‖²` under the same validity
/// condition. With `verbatim` an additional informational report evaluates the
/// printed deviation term.
pub fn normalized_square_bound(
    g: &Graph,
    s: &Spectrum,
    k: usize,
    m0: &PairSet,
    verbatim: bool,
    tol: Tolerance,
) -> Result<Vec<BoundReport>> {
    normalized_preconditions(g, s, k)?;
    let (have, need) = normalized_validity(g, k, m0);
    if have < need {
        let mut out = vec![not_applicable_normalized(
            BoundName::NormalizedSquarePairSet,
            k,
            have,
            need,
            m0,
        )];
        if verbatim {
            out.push(
                not_applicable_normalized(BoundName::NormalizedSquarePairSetVerbatim, k, have, need, m0)
                    .informational(),
            );
        }
        return Ok(out);
    }
    let measured: f64 = s.values[..k].iter().map(|c| c * c).sum();
    let scale = 1.0 / (4.0 * g.m() as f64);
    let derived: f64 = m0
        .pairs
        .iter()
        .map(|&(u, v)| normalized_square_pair_cost(g, u, v))
        .sum();
    let mut out = vec![BoundReport::evaluate(
        BoundName::NormalizedSquarePairSet,
        Relation::AtMost,
        derived * scale,
        measured,
        tol,
    )
    .with_params(Params::new().int("k", k))
    .with_selection(m0.selection())];
    if verbatim {
        let printed: f64 = m0
            .pairs
            .iter()
            .map(|&(u, v)| normalized_square_pair_cost_verbatim(g, u, v))
            .sum();
        out.push(
            BoundReport::evaluate(
                BoundName::NormalizedSquarePairSetVerbatim,
                Relation::AtMost,
                printed * scale,
                measured,
                tol,
            )
            .with_params(Params::new().int("k", k))
            .with_selection(m0.selection())
            .informational(),
        );
    }
    Ok(out)
}

fn adjacency_k_range(g: &Graph, k: usize) -> Result<()> {
    let n = g.n();
    if n < 3 || k == 0 || k >= n - 1 {
        return Err(Error::out_of_range("k", k as f64, 1.0, n.saturating_sub(2) as f64));
    }
    Ok(())
}

/// Sums of the `k` smallest and the `n−k` largest adjacency eigenvalues.
///
/// The asserted bounds are `Σ_{k smallest} α ≤ −min(nk, 2m)/n` and
/// `Σ_{n−k largest} α ≥ min(nk, 2m)/n`: a set of `nk` ordered pairs holds at
/// most `min(nk, 2m)` adjacent ones. The form `∓k` (with `k → min(k, m)` for
/// disconnected graphs) is attached as informational reports when `verbatim`
/// is set; it only coincides with the asserted form when `k ≤ 2m/n`.
pub fn adjacency_sum_bound(
    g: &Graph,
    s: &Spectrum,
    k: usize,
    verbatim: bool,
    tol: Tolerance,
) -> Result<Vec<BoundReport>> {
    require_spectrum(s, g, SpectrumKind::Adjacency)?;
    adjacency_k_range(g, k)?;
    let n = g.n();
    let smallest = s.tail_sum(k);
    let largest = partial_sum(s, n - k)?;
    let derived = (n * k).min(2 * g.m()) as f64 / n as f64;
    let params = || Params::new().int("k", k);
    let mut out = vec![
        BoundReport::evaluate(
            BoundName::AdjacencySmallestSum,
            Relation::AtMost,
            -derived,
            smallest,
            tol,
        )
        .with_params(params()),
        BoundReport::evaluate(BoundName::AdjacencyLargestSum, Relation::AtLeast, derived, largest, tol)
            .with_params(params()),
    ];
    if verbatim {
        let kk = if g.is_connected() { k } else { k.min(g.m()) } as f64;
        out.push(
            BoundReport::evaluate(
                BoundName::AdjacencySmallestSumVerbatim,
                Relation::AtMost,
                -kk,
                smallest,
                tol,
            )
            .with_params(params())
            .informational(),
        );
        out.push(
            BoundReport::evaluate(
                BoundName::AdjacencyLargestSumVerbatim,
                Relation::AtLeast,
                kk,
                largest,
                tol,
            )
            .with_params(params())
            .informational(),
        );
    }
    Ok(out)
}

/// `nk` ordered pairs of smallest `d_u + d_v − 2(A²)_{uv}`.
pub fn select_pairs_adjacency(g: &Graph, k: usize, strategy: PairStrategy) -> Result<PairSet> {
    adjacency_k_range(g, k)?;
    select_cheapest(g, g.n() * k, strategy, |u, v| adjacency_square_pair_cost(g, u, v))
}

/// `Σ_{j<k} α_{ℓ_j}² ≤ (1/2n) Σ_{𝔐₀} (d_u + d_v − 2(A²)_{uv})` with `|𝔐₀| = nk`,
/// where `ℓ` orders the eigenvalues by magnitude.
pub fn adjacency_square_bound(g: &Graph, s: &Spectrum, k: usize, m0: &PairSet, tol: Tolerance) -> Result<BoundReport> {
    require_spectrum(s, g, SpectrumKind::Adjacency)?;
    adjacency_k_range(g, k)?;
    let n = g.n();
    check_cardinality(m0, n * k)?;
    let measured: f64 = magnitude_order(s)[..k].iter().map(|&i| s.values[i] * s.values[i]).sum();
    let total: f64 = m0.pairs.iter().map(|&(u, v)| adjacency_square_pair_cost(g, u, v)).sum();
    Ok(BoundReport::evaluate(
        BoundName::AdjacencySmallestSquares,
        Relation::AtMost,
        total / (2.0 * n as f64),
        measured,
        tol,
    )
    .with_params(Params::new().int("k", k))
    .with_selection(m0.selection()))
}
