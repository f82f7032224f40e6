//! Eigenvalues of the adjacency matrix, the Laplacian and the renormalized
//! Laplacian under their canonical orderings, plus derived spectral quantities.
//!
//! Canonical order is nonincreasing for the adjacency matrix
//! (`α_0 ≥ α_1 ≥ …`) and nondecreasing for both Laplacians (`λ_0 = 0 ≤ λ_1 ≤ …`).
//!
//! Partial sums always start at index 0. For a Laplacian, `partial_sum(s, k)`
//! is therefore `λ_0 + … + λ_{k-1}`, which equals `λ_1 + … + λ_{k-1}` because
//! `λ_0 = 0`.

mod closed_form;
mod jacobi;

pub use closed_form::{closed_form, Family};
pub use jacobi::{eig_sym, RawEigen, MAX_SWEEPS, RELATIVE_TOLERANCE};

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::SymMatrix;
use crate::report::{BoundName, BoundReport, Relation, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectrumKind {
    Adjacency,
    Laplacian,
    Normalized,
}

impl SpectrumKind {
    pub const ALL: [SpectrumKind; 3] = [
        SpectrumKind::Adjacency,
        SpectrumKind::Laplacian,
        SpectrumKind::Normalized,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SpectrumKind::Adjacency => "adjacency",
            SpectrumKind::Laplacian => "laplacian",
            SpectrumKind::Normalized => "normalized",
        }
    }

    pub fn matrix(self, g: &Graph) -> Result<SymMatrix> {
        Ok(match self {
            SpectrumKind::Adjacency => g.adjacency_matrix(),
            SpectrumKind::Laplacian => g.laplacian(),
            SpectrumKind::Normalized => g.normalized_laplacian()?,
        })
    }
}

impl fmt::Display for SpectrumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SpectrumKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adjacency" => Ok(SpectrumKind::Adjacency),
            "laplacian" => Ok(SpectrumKind::Laplacian),
            "normalized" => Ok(SpectrumKind::Normalized),
            other => Err(Error::InvalidArgument(format!("unknown spectrum kind `{other}`"))),
        }
    }
}

/// Eigensolver backend.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Solver {
    /// Householder tridiagonalization with implicit shifted QR (via nalgebra).
    #[default]
    Tridiagonal,
    /// The cyclic Jacobi solver in [`eig_sym`].
    Jacobi,
}

impl FromStr for Solver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tridiagonal" => Ok(Solver::Tridiagonal),
            "jacobi" => Ok(Solver::Jacobi),
            other => Err(Error::InvalidArgument(format!("unknown solver `{other}`"))),
        }
    }
}

/// Ascending eigen-decomposition through the chosen backend.
pub fn eig_sym_with(m: &SymMatrix, want_vectors: bool, solver: Solver) -> Result<RawEigen> {
    match solver {
        Solver::Jacobi => eig_sym(m, want_vectors),
        Solver::Tridiagonal => Ok(eig_tridiagonal(m, want_vectors)),
    }
}

fn eig_tridiagonal(m: &SymMatrix, want_vectors: bool) -> RawEigen {
    let n = m.order();
    let dm = DMatrix::from_row_slice(n, n, m.as_slice());
    if !want_vectors {
        let mut values: Vec<f64> = dm.symmetric_eigenvalues().iter().copied().collect();
        values.sort_by(f64::total_cmp);
        return RawEigen { values, vectors: None };
    }
    let eig = dm.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    RawEigen {
        values: order.iter().map(|&i| eig.eigenvalues[i]).collect(),
        vectors: Some(
            order
                .iter()
                .map(|&i| eig.eigenvectors.column(i).iter().copied().collect())
                .collect(),
        ),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub kind: SpectrumKind,
    pub values: Vec<f64>,
    /// `vectors[j]` is a unit eigenvector for `values[j]`.
    pub vectors: Option<Vec<Vec<f64>>>,
}

impl Spectrum {
    /// Wraps ascending eigenpairs in the canonical order for `kind`.
    pub fn from_ascending(kind: SpectrumKind, raw: RawEigen) -> Self {
        let RawEigen {
            mut values,
            mut vectors,
        } = raw;
        if kind == SpectrumKind::Adjacency {
            values.reverse();
            if let Some(v) = vectors.as_mut() {
                v.reverse();
            }
        }
        Self { kind, values, vectors }
    }

    pub fn of(g: &Graph, kind: SpectrumKind) -> Result<Self> {
        spectrum_with(g, kind, false, Solver::default())
    }

    pub fn with_vectors(g: &Graph, kind: SpectrumKind) -> Result<Self> {
        spectrum_with(g, kind, true, Solver::default())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn require_kind(&self, kind: SpectrumKind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::WrongSpectrumKind {
                expected: kind,
                found: self.kind,
            });
        }
        Ok(())
    }

    /// Values sorted ascending regardless of kind.
    pub fn ascending(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        v.sort_by(f64::total_cmp);
        v
    }

    pub fn total(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Sum of the last `count` values in canonical order.
    pub fn tail_sum(&self, count: usize) -> f64 {
        self.values[self.len() - count..].iter().sum()
    }
}

pub fn spectrum(g: &Graph, kind: SpectrumKind) -> Result<Spectrum> {
    Spectrum::of(g, kind)
}

pub fn spectrum_with(g: &Graph, kind: SpectrumKind, want_vectors: bool, solver: Solver) -> Result<Spectrum> {
    let m = kind.matrix(g)?;
    Ok(Spectrum::from_ascending(kind, eig_sym_with(&m, want_vectors, solver)?))
}

fn check_k(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::out_of_range("k", k as f64, 1.0, n as f64));
    }
    Ok(())
}

/// Sum of the first `k` values in canonical order.
pub fn partial_sum(s: &Spectrum, k: usize) -> Result<f64> {
    check_k(k, s.len())?;
    Ok(s.values[..k].iter().sum())
}

/// Sum of `value^p` over the first `k` values in canonical order.
pub fn partial_power_sum(s: &Spectrum, k: usize, p: f64) -> Result<f64> {
    check_k(k, s.len())?;
    Ok(s.values[..k].iter().map(|v| v.powf(p)).sum())
}

/// Indices ordering the values by magnitude, ties by index.
pub fn magnitude_order(s: &Spectrum) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..s.len()).collect();
    idx.sort_by(|&i, &j| s.values[i].abs().total_cmp(&s.values[j].abs()).then(i.cmp(&j)));
    idx
}

/// Laplacian energy `Σ_i |λ_i − 2m/n|`.
///
/// Also evaluates `2 Σ_i (2m/n − λ_i)_+` (equal because `Σ λ_i = 2m`) and
/// fails if the two disagree beyond `1e-9` relative.
pub fn laplacian_energy(s: &Spectrum, m: usize, n: usize) -> Result<f64> {
    s.require_kind(SpectrumKind::Laplacian)?;
    if s.len() != n {
        return Err(Error::InvalidArgument(format!(
            "spectrum has {} values, expected {n}",
            s.len()
        )));
    }
    let mean = 2.0 * m as f64 / n as f64;
    let direct: f64 = s.values.iter().map(|l| (l - mean).abs()).sum();
    let positive_part: f64 = 2.0 * s.values.iter().map(|l| (mean - l).max(0.0)).sum::<f64>();
    if (direct - positive_part).abs() > 1e-9 * direct.max(1.0) {
        return Err(Error::Internal(format!(
            "Laplacian energy forms disagree: {direct} vs {positive_part} (does the spectrum sum to 2m?)"
        )));
    }
    Ok(direct)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RieszValue {
    pub z: f64,
    pub power: f64,
    pub value: f64,
}

/// `Σ_j (z − λ_j)_+^p`; at `p = 0` each term is the strict indicator `λ_j < z`.
pub fn riesz_mean(s: &Spectrum, z: f64, p: f64) -> Result<RieszValue> {
    if p.is_nan() || p < 0.0 {
        return Err(Error::out_of_range("p", p, 0.0, f64::INFINITY));
    }
    let value = s
        .values
        .iter()
        .map(|&l| {
            if l >= z {
                0.0
            } else if p == 0.0 {
                1.0
            } else {
                (z - l).powf(p)
            }
        })
        .sum();
    Ok(RieszValue { z, power: p, value })
}

/// Checks `Σ λ = 2m` and `Σ λ² = 2m + M₁(G)`.
pub fn trace_identity_report(g: &Graph, s: &Spectrum, tol: Tolerance) -> Result<[BoundReport; 2]> {
    s.require_kind(SpectrumKind::Laplacian)?;
    let two_m = 2.0 * g.m() as f64;
    let sum: f64 = s.values.iter().sum();
    let sum_sq: f64 = s.values.iter().map(|l| l * l).sum();
    Ok([
        BoundReport::evaluate(BoundName::TraceSum, Relation::Equal, two_m, sum, tol),
        BoundReport::evaluate(
            BoundName::TraceSumSquares,
            Relation::Equal,
            two_m + g.zagreb_index() as f64,
            sum_sq,
            tol,
        ),
    ])
}
