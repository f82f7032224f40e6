//! Weyl-type bounds for Laplacian eigenvalue sums of subgraphs of the cubic
//! lattice `ℤ^ν`, together with the embeddability certifier built from them.
//!
//! With `κ = k/n` and `s = sinc(π κ^{1/ν})`:
//!
//! ```text
//! Σ_{j<k} λ_j  ≤ 2mκ(1 − s)                      ≤ (π²m/3) κ^{1+2/ν}
//! Σ_{j<k} λ_j² ≤ κ[(1−s)² Tr(H²) + 2s(1−s)·2m + 2s(cos(πκ^{1/ν}) − s)·Σd∥]
//! ```

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, LatticeEmbedding};
use crate::report::{BoundName, BoundReport, Params, Relation, Tolerance};
use crate::spectra::{laplacian_energy, partial_sum, riesz_mean, Spectrum, SpectrumKind};

/// `sin(x)/x`, with the removable singularity filled in.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// Per-vertex count of axes along which both lattice neighbours are graph neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollinearProfile {
    pub counts: Vec<usize>,
}

impl CollinearProfile {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

pub fn collinear_counts(emb: &LatticeEmbedding, g: &Graph) -> Result<CollinearProfile> {
    emb.validate(g)?;
    let lookup = emb.index();
    let counts = (0..g.n())
        .map(|x| {
            let mut q = emb.coord(x).to_vec();
            (0..emb.nu())
                .filter(|&axis| {
                    let mut both = true;
                    for step in [-1, 1] {
                        q[axis] += step;
                        both &= lookup.get(q.as_slice()).is_some_and(|&y| g.has_edge(x, y));
                        q[axis] -= step;
                    }
                    both
                })
                .count()
        })
        .collect();
    Ok(CollinearProfile { counts })
}

fn check_k(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::out_of_range("k", k as f64, 1.0, n as f64));
    }
    Ok(())
}

fn check_nu(nu: usize) -> Result<()> {
    if nu == 0 {
        return Err(Error::InvalidArgument("lattice dimension must be positive".into()));
    }
    Ok(())
}

fn check_a(a: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::out_of_range("a", a, 0.0, 1.0));
    }
    Ok(())
}

fn kappa_root(n: usize, nu: usize, k: usize) -> (f64, f64) {
    let kappa = k as f64 / n as f64;
    (kappa, kappa.powf(1.0 / nu as f64))
}

/// `2mκ(1 − sinc(π κ^{1/ν}))`.
pub fn weyl_sum_bound(m: usize, n: usize, nu: usize, k: usize) -> Result<f64> {
    check_nu(nu)?;
    check_k(k, n)?;
    let (kappa, a) = kappa_root(n, nu, k);
    Ok(2.0 * m as f64 * kappa * (1.0 - sinc(PI * a)))
}

/// Both sides of `λ_k (n a^ν − k) + Σ_{j<k} λ_j ≤ 2m a^ν (1 − sinc(πa))`:
/// returns the coefficient `n a^ν − k` and the right-hand side.
pub fn weyl_sum_bound_at_a(m: usize, n: usize, nu: usize, k: usize, a: f64) -> Result<(f64, f64)> {
    check_nu(nu)?;
    check_k(k, n)?;
    check_a(a)?;
    let an = a.powi(nu as i32);
    Ok((n as f64 * an - k as f64, 2.0 * m as f64 * an * (1.0 - sinc(PI * a))))
}

/// `(π²m/3) κ^{1+2/ν}`.
pub fn weyl_power_bound(m: usize, n: usize, nu: usize, k: usize) -> Result<f64> {
    check_nu(nu)?;
    check_k(k, n)?;
    let kappa = k as f64 / n as f64;
    Ok(PI * PI * m as f64 / 3.0 * kappa.powf(1.0 + 2.0 / nu as f64))
}

/// `2mκ`.
pub fn simple_lattice_bound(m: usize, n: usize, k: usize) -> Result<f64> {
    check_k(k, n)?;
    Ok(2.0 * m as f64 * k as f64 / n as f64)
}

struct SquareTerms {
    kappa: f64,
    s: f64,
    c: f64,
    trace_sq: f64,
    degree_sum: f64,
    collinear: f64,
}

fn square_terms(g: &Graph, emb: &LatticeEmbedding, k: usize) -> Result<SquareTerms> {
    check_k(k, g.n())?;
    let profile = collinear_counts(emb, g)?;
    let (kappa, a) = kappa_root(g.n(), emb.nu(), k);
    let m2 = 2.0 * g.m() as f64;
    Ok(SquareTerms {
        kappa,
        s: sinc(PI * a),
        c: (PI * a).cos(),
        trace_sq: m2 + g.zagreb_index() as f64,
        degree_sum: m2,
        collinear: profile.total() as f64,
    })
}

/// `κ[(1−s)² Tr(H²) + 2s(1−s) Σd + 2s(cos(πκ^{1/ν}) − s) Σd∥]`.
pub fn weyl_sq_bound(g: &Graph, emb: &LatticeEmbedding, k: usize) -> Result<f64> {
    let t = square_terms(g, emb, k)?;
    let (s, c) = (t.s, t.c);
    Ok(t.kappa
        * ((1.0 - s).powi(2) * t.trace_sq + 2.0 * s * (1.0 - s) * t.degree_sum + 2.0 * s * (c - s) * t.collinear))
}

/// The printed form `κ(1−s)² Tr(H²) + 2κs(1−s) Σd − 2κs(1 − cos(πκ^{1/ν})) Σd∥`.
pub fn weyl_sq_bound_verbatim(g: &Graph, emb: &LatticeEmbedding, k: usize) -> Result<f64> {
    let t = square_terms(g, emb, k)?;
    let (s, c) = (t.s, t.c);
    Ok(
        t.kappa * (1.0 - s).powi(2) * t.trace_sq + 2.0 * t.kappa * s * (1.0 - s) * t.degree_sum
            - 2.0 * t.kappa * s * (1.0 - c) * t.collinear,
    )
}

fn check_riesz_args(z: f64, m: usize, n: usize, nu: usize) -> Result<()> {
    check_nu(nu)?;
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("Riesz bounds need at least one edge".into()));
    }
    let top = 2.0 * m as f64;
    if !(0.0..=top).contains(&z) {
        return Err(Error::out_of_range("z", z, 0.0, top));
    }
    Ok(())
}

/// `z n a^ν − 2m a^ν (1 − sinc(πa))`.
pub fn riesz_lower_bound_at_a(z: f64, m: usize, n: usize, nu: usize, a: f64) -> Result<f64> {
    check_riesz_args(z, m, n, nu)?;
    check_a(a)?;
    let an = a.powi(nu as i32);
    Ok(z * n as f64 * an - 2.0 * m as f64 * an * (1.0 - sinc(PI * a)))
}

fn riesz_t(z: f64, m: usize, n: usize, nu: usize) -> f64 {
    let nu = nu as f64;
    nu / (nu + 2.0) * 3.0 * n as f64 * z / (m as f64 * PI * PI)
}

/// Maximum over `a ∈ [0,1]` of `z n a^ν − (π²m/3) a^{ν+2}`.
///
/// The unconstrained optimum sits at `a² = t = (ν/(ν+2))·3nz/(mπ²)`, giving
/// `(2/ν)(mπ²/3) t^{1+ν/2}`; for `t > 1` the maximum is at `a = 1`, i.e.
/// `zn − π²m/3`.
pub fn riesz_lower_bound(z: f64, m: usize, n: usize, nu: usize) -> Result<f64> {
    check_riesz_args(z, m, n, nu)?;
    let t = riesz_t(z, m, n, nu);
    if t <= 1.0 {
        riesz_lower_bound_verbatim(z, m, n, nu)
    } else {
        Ok(z * n as f64 - PI * PI * m as f64 / 3.0)
    }
}

/// `(2/ν)(mπ²/3) t^{1+ν/2}` for every `z`, without restricting the optimizer to `a ≤ 1`.
pub fn riesz_lower_bound_verbatim(z: f64, m: usize, n: usize, nu: usize) -> Result<f64> {
    check_riesz_args(z, m, n, nu)?;
    let t = riesz_t(z, m, n, nu);
    Ok(2.0 / nu as f64 * (m as f64 * PI * PI / 3.0) * t.powf(1.0 + nu as f64 / 2.0))
}

/// Maximizes a function on `[lo, hi]` by golden-section search; returns `(argmax, max)`.
pub fn golden_section_max(f: impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    let x = (a + b) / 2.0;
    let mut best = (x, f(x));
    for edge in [lo, hi] {
        let v = f(edge);
        if v > best.1 {
            best = (edge, v);
        }
    }
    best
}

const UNIMODALITY_GRID: usize = 10_000;

fn grid_argmax(f: &impl Fn(f64) -> f64, lo: f64, hi: f64) -> (f64, f64) {
    (0..=UNIMODALITY_GRID)
        .map(|i| {
            let x = lo + (hi - lo) * i as f64 / UNIMODALITY_GRID as f64;
            (x, f(x))
        })
        .fold((lo, f64::NEG_INFINITY), |best, p| if p.1 > best.1 { p } else { best })
}

fn is_unimodal_on_grid(f: &impl Fn(f64) -> f64, lo: f64, hi: f64) -> bool {
    let step = (hi - lo) / UNIMODALITY_GRID as f64;
    let mut changes = 0;
    let mut rising = true;
    let mut prev = f(lo);
    for i in 1..=UNIMODALITY_GRID {
        let cur = f(lo + step * i as f64);
        let up = cur > prev;
        if up != rising {
            changes += 1;
            rising = up;
        }
        prev = cur;
    }
    changes <= 1
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyLowerBound {
    /// `4m · max_{a∈[0,1]} a^ν sinc(πa)`.
    pub max_form: f64,
    /// `8m/(ν+2) · (6ν/(π²(ν+2)))^{ν/2}`.
    pub closed_form: f64,
    pub argmax: f64,
}

pub fn le_lower_bound(m: usize, nu: usize) -> Result<EnergyLowerBound> {
    check_nu(nu)?;
    let f = |a: f64| a.powi(nu as i32) * sinc(PI * a);
    let (argmax, max) = if is_unimodal_on_grid(&f, 0.0, 1.0) {
        golden_section_max(f, 0.0, 1.0, 1e-10)
    } else {
        grid_argmax(&f, 0.0, 1.0)
    };
    let mf = m as f64;
    let nuf = nu as f64;
    let max_form = 4.0 * mf * max;
    let closed_form = 8.0 * mf / (nuf + 2.0) * (6.0 * nuf / (PI * PI * (nuf + 2.0))).powf(nuf / 2.0);
    if closed_form > max_form * (1.0 + 1e-12) {
        return Err(Error::Internal(format!(
            "energy bound closed form {closed_form} exceeds its maximized form {max_form}"
        )));
    }
    Ok(EnergyLowerBound {
        max_form,
        closed_form,
        argmax,
    })
}

/// Exact `Σ_{j<k} λ_j` of the cycle `C_n` for odd `k`:
/// `2mκ(1 − sinc(πκ)/sinc(π/n))` with `m = n`.
pub fn cycle_partial_sum(n: usize, k: usize) -> Result<f64> {
    check_k(k, n)?;
    if n < 3 {
        return Err(Error::TooFewVertices {
            family: "cycle",
            n,
            min: 3,
        });
    }
    if k.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "the cycle formula needs odd k, got {k}"
        )));
    }
    let kappa = k as f64 / n as f64;
    Ok(2.0 * n as f64 * kappa * (1.0 - sinc(PI * kappa) / sinc(PI / n as f64)))
}

fn check_nondecreasing(xs: &[f64], name: &'static str) -> Result<()> {
    if xs.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::Unsorted(name));
    }
    Ok(())
}

/// True iff every prefix sum of `mu` is at most the matching prefix sum of `mseq`.
pub fn karamata_check(mu: &[f64], mseq: &[f64]) -> Result<bool> {
    if mu.len() != mseq.len() {
        return Err(Error::InvalidArgument(format!(
            "sequences differ in length: {} and {}",
            mu.len(),
            mseq.len()
        )));
    }
    check_nondecreasing(mu, "mu")?;
    check_nondecreasing(mseq, "mseq")?;
    Ok(first_karamata_violation(mu, mseq, 0.0).is_none())
}

/// Smallest prefix length whose sum of `mu` exceeds that of `mseq` by more than `slack`.
fn first_karamata_violation(mu: &[f64], mseq: &[f64], slack: f64) -> Option<usize> {
    let (mut a, mut b) = (0.0, 0.0);
    for (j, (x, y)) in mu.iter().zip(mseq).enumerate() {
        a += x;
        b += y;
        if a > b + slack * (1.0 + b.abs()) {
            return Some(j + 1);
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SequenceForm {
    /// `m_j = S(j+1) − S(j)` for the envelope `S(k) = (π²m/3)(k/n)^{1+2/ν}`,
    /// so that `Σ_{j<k} m_j = S(k)` exactly.
    #[default]
    Telescoping,
    /// `m_j = S'(j) = (1+2/ν) π²m j^{2/ν} / (3 n^{1+2/ν})`, with `m_0 = 0`.
    Derivative,
}

impl FromStr for SequenceForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "telescoping" => Ok(SequenceForm::Telescoping),
            "derivative" => Ok(SequenceForm::Derivative),
            other => Err(Error::InvalidArgument(format!("unknown sequence form `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeylSequence {
    pub n: usize,
    pub m: usize,
    pub nu: usize,
    pub form: SequenceForm,
    pub values: Vec<f64>,
}

impl WeylSequence {
    pub fn new(n: usize, m: usize, nu: usize, form: SequenceForm) -> Result<Self> {
        check_nu(nu)?;
        if n == 0 {
            return Err(Error::TooFewVertices {
                family: "Weyl sequence",
                n,
                min: 1,
            });
        }
        let mf = m as f64;
        let nf = n as f64;
        let expo = 1.0 + 2.0 / nu as f64;
        let envelope = |k: usize| PI * PI * mf / 3.0 * (k as f64 / nf).powf(expo);
        let values = match form {
            SequenceForm::Telescoping => (0..n).map(|j| envelope(j + 1) - envelope(j)).collect(),
            SequenceForm::Derivative => (0..n)
                .map(|j| expo * PI * PI * mf * (j as f64).powf(2.0 / nu as f64) / (3.0 * nf.powf(expo)))
                .collect(),
        };
        Ok(Self { n, m, nu, form, values })
    }

    pub fn telescoping(n: usize, m: usize, nu: usize) -> Result<Self> {
        Self::new(n, m, nu, SequenceForm::Telescoping)
    }

    pub fn prefix_sum(&self, k: usize) -> f64 {
        self.values[..k].iter().sum()
    }
}

/// The functions admitted by the majorization transfer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TransformFn {
    /// `x`; concave and nondecreasing (and convex).
    Identity,
    /// `√x`; concave and nondecreasing.
    Sqrt,
    /// `exp(−t x)`, `t ≥ 0`; convex and nonincreasing.
    ExpNeg { t: f64 },
    /// `(t − x)_+^p`, `p ≥ 1`; convex and nonincreasing.
    Riesz { t: f64, p: f64 },
}

impl TransformFn {
    pub fn validate(self) -> Result<Self> {
        match self {
            TransformFn::ExpNeg { t } if !(t >= 0.0 && t.is_finite()) => {
                Err(Error::Unsupported(format!("exp-neg needs t >= 0, got {t}")))
            }
            TransformFn::Riesz { p, .. } if !(p >= 1.0 && p.is_finite()) => Err(Error::Unsupported(format!(
                "(t - x)_+^p is not convex for p = {p}; need p >= 1"
            ))),
            TransformFn::Riesz { t, .. } if !t.is_finite() => {
                Err(Error::Unsupported(format!("invalid Riesz level {t}")))
            }
            other => Ok(other),
        }
    }

    pub fn apply(self, x: f64) -> f64 {
        match self {
            TransformFn::Identity => x,
            TransformFn::Sqrt => x.max(0.0).sqrt(),
            TransformFn::ExpNeg { t } => (-t * x).exp(),
            TransformFn::Riesz { t, p } => (t - x).max(0.0).powf(p),
        }
    }

    /// Concave-nondecreasing functions bound sums from above.
    pub fn is_concave_branch(self) -> bool {
        matches!(self, TransformFn::Identity | TransformFn::Sqrt)
    }
}

impl fmt::Display for TransformFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformFn::Identity => f.write_str("identity"),
            TransformFn::Sqrt => f.write_str("sqrt"),
            TransformFn::ExpNeg { t } => write!(f, "exp-neg:{t}"),
            TransformFn::Riesz { t, p } => write!(f, "riesz:{t}:{p}"),
        }
    }
}

impl FromStr for TransformFn {
    type Err = Error;

    /// Accepts `identity`, `sqrt`, `exp-neg:T` and `riesz:T:P`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |x: &str| {
            x.parse::<f64>()
                .map_err(|_| Error::InvalidArgument(format!("bad number `{x}` in function `{s}`")))
        };
        let f = match parts.as_slice() {
            ["identity"] => TransformFn::Identity,
            ["sqrt"] => TransformFn::Sqrt,
            ["exp-neg", t] => TransformFn::ExpNeg { t: num(t)? },
            ["riesz", t, p] => TransformFn::Riesz { t: num(t)?, p: num(p)? },
            _ => return Err(Error::Unsupported(format!("unknown function `{s}`"))),
        };
        f.validate()
    }
}

/// `Σ_{j<k} Φ(λ_j) ≤ Σ_{j<k} Φ(m_j)` for concave nondecreasing `Φ`, or
/// `Σ_{j<k} Ψ(λ_j) ≥ Σ_{j<k} Ψ(m_j)` for convex nonincreasing `Ψ`, using the
/// telescoping Weyl sequence.
pub fn karamata_transform_bound(
    s: &Spectrum,
    m: usize,
    nu: usize,
    func: TransformFn,
    k: usize,
    tol: Tolerance,
) -> Result<BoundReport> {
    let seq = WeylSequence::telescoping(s.len(), m, nu)?;
    karamata_transform_bound_with(s, &seq, func, k, tol)
}

pub fn karamata_transform_bound_with(
    s: &Spectrum,
    seq: &WeylSequence,
    func: TransformFn,
    k: usize,
    tol: Tolerance,
) -> Result<BoundReport> {
    s.require_kind(SpectrumKind::Laplacian)?;
    let func = func.validate()?;
    check_k(k, s.len())?;
    if seq.values.len() != s.len() {
        return Err(Error::InvalidArgument(
            "Weyl sequence length differs from the spectrum".into(),
        ));
    }
    let (name, relation) = if func.is_concave_branch() {
        (BoundName::KaramataConcave, Relation::AtMost)
    } else {
        (BoundName::KaramataConvex, Relation::AtLeast)
    };
    let params = Params::new()
        .int("k", k)
        .int("nu", seq.nu)
        .text("function", func.to_string())
        .text("sequence", format!("{:?}", seq.form).to_lowercase());
    if let Some(j) = first_karamata_violation(&s.values[..k], &seq.values[..k], tol.0) {
        return Ok(BoundReport::not_applicable(
            name,
            relation,
            format!("eigenvalue prefix sum of length {j} exceeds the Weyl sequence"),
        )
        .with_params(params));
    }
    let measured: f64 = s.values[..k].iter().map(|&x| func.apply(x)).sum();
    let bound: f64 = seq.values[..k].iter().map(|&x| func.apply(x)).sum();
    Ok(BoundReport::evaluate(name, relation, bound, measured, tol).with_params(params))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EmbedVerdict {
    Excluded {
        /// Smallest `k` whose eigenvalue sum violates a bound.
        k: usize,
        bound: BoundName,
        slack: f64,
        /// Set when the exclusion follows from a larger dimension.
        implied_by: Option<usize>,
    },
    NotExcluded,
}

impl EmbedVerdict {
    pub fn is_excluded(&self) -> bool {
        matches!(self, EmbedVerdict::Excluded { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DimensionCertificate {
    pub nu: usize,
    #[serde(flatten)]
    pub verdict: EmbedVerdict,
}

fn first_violation(
    prefix: &[f64],
    m: usize,
    n: usize,
    nu: usize,
    tol: Tolerance,
) -> Result<Option<(usize, BoundName, f64)>> {
    for k in 1..=n {
        let measured = prefix[k];
        for (name, bound) in [
            (BoundName::LatticeWeyl, weyl_sum_bound(m, n, nu, k)?),
            (BoundName::WeylPower, weyl_power_bound(m, n, nu, k)?),
        ] {
            let slack = bound - measured;
            if slack < -tol.threshold(bound) {
                return Ok(Some((k, name, slack)));
            }
        }
    }
    Ok(None)
}

/// Necessary spectral conditions for `G ⊆ ℤ^ν`, for `ν = 1..=nu_max`.
///
/// Both bounds grow with `ν`, so a `k` violating them at dimension `ν` also
/// violates them at every smaller dimension; lower dimensions are then
/// reported as implied exclusions.
pub fn embeddability_certificate(
    g: &Graph,
    s: &Spectrum,
    nu_max: usize,
    tol: Tolerance,
) -> Result<Vec<DimensionCertificate>> {
    s.require_kind(SpectrumKind::Laplacian)?;
    check_nu(nu_max)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let (n, m) = (g.n(), g.m());
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(0.0);
    for &x in &s.values {
        prefix.push(prefix.last().unwrap() + x);
    }
    let mut out = Vec::with_capacity(nu_max);
    let mut witness: Option<(usize, usize, BoundName)> = None;
    for nu in (1..=nu_max).rev() {
        let verdict = match witness {
            Some((from, k, name)) => {
                let bound = match name {
                    BoundName::LatticeWeyl => weyl_sum_bound(m, n, nu, k)?,
                    _ => weyl_power_bound(m, n, nu, k)?,
                };
                EmbedVerdict::Excluded {
                    k,
                    bound: name,
                    slack: bound - prefix[k],
                    implied_by: Some(from),
                }
            }
            None => match first_violation(&prefix, m, n, nu, tol)? {
                Some((k, name, slack)) => {
                    witness = Some((nu, k, name));
                    EmbedVerdict::Excluded {
                        k,
                        bound: name,
                        slack,
                        implied_by: None,
                    }
                }
                None => EmbedVerdict::NotExcluded,
            },
        };
        out.push(DimensionCertificate { nu, verdict });
    }
    out.reverse();
    Ok(out)
}

/// Values of `a` at which the a-parameterized bounds are evaluated.
pub const A_GRID: [f64; 10] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];
/// Number of equal steps dividing `[0, 2m]` for Riesz-mean checks.
pub const Z_STEPS: usize = 20;

/// The Riesz levels `z`: `Z_STEPS + 1` equally spaced points of `[0, 2m]`
/// plus `{0.1, 0.5, 1}·(2m/n)`.
pub fn riesz_z_grid(m: usize, n: usize) -> Vec<f64> {
    let top = 2.0 * m as f64;
    let mut z: Vec<f64> = (0..=Z_STEPS).map(|i| top * i as f64 / Z_STEPS as f64).collect();
    z.extend([0.1, 0.5, 1.0].map(|f| f * top / n as f64));
    z.sort_by(f64::total_cmp);
    z.dedup();
    z
}

/// Riesz-mean reports at level `z`: the a-parameterized bound on [`A_GRID`],
/// the optimized closed form (asserted) and, when `verbatim`, the closed form
/// without the `a ≤ 1` restriction (informational).
pub fn riesz_reports(
    s: &Spectrum,
    m: usize,
    nu: usize,
    z: f64,
    verbatim: bool,
    tol: Tolerance,
) -> Result<Vec<BoundReport>> {
    s.require_kind(SpectrumKind::Laplacian)?;
    let n = s.len();
    let measured = riesz_mean(s, z, 1.0)?.value;
    let mut out = Vec::with_capacity(A_GRID.len() + 2);
    for a in A_GRID {
        let bound = riesz_lower_bound_at_a(z, m, n, nu, a)?;
        out.push(
            BoundReport::evaluate(BoundName::RieszMeanAtA, Relation::AtLeast, bound, measured, tol)
                .with_params(Params::new().real("z", z).real("a", a).int("nu", nu)),
        );
    }
    let params = || Params::new().real("z", z).int("nu", nu);
    out.push(
        BoundReport::evaluate(
            BoundName::RieszMeanWeyl,
            Relation::AtLeast,
            riesz_lower_bound(z, m, n, nu)?,
            measured,
            tol,
        )
        .with_params(params()),
    );
    if verbatim {
        out.push(
            BoundReport::evaluate(
                BoundName::RieszMeanWeylVerbatim,
                Relation::AtLeast,
                riesz_lower_bound_verbatim(z, m, n, nu)?,
                measured,
                tol,
            )
            .with_params(params())
            .informational(),
        );
    }
    Ok(out)
}

/// Per-`k` lattice sum reports: the Weyl bound, its a-parameterized form at
/// `a = κ^{1/ν}`, `2mκ`, the power envelope and the squared-sum bound.
pub fn lattice_k_reports(
    g: &Graph,
    emb: &LatticeEmbedding,
    s: &Spectrum,
    k: usize,
    verbatim: bool,
    tol: Tolerance,
) -> Result<Vec<BoundReport>> {
    s.require_kind(SpectrumKind::Laplacian)?;
    let (n, m, nu) = (g.n(), g.m(), emb.nu());
    check_k(k, n)?;
    let params = || Params::new().int("k", k).int("nu", nu);
    let sum = partial_sum(s, k)?;
    let sq: f64 = s.values[..k].iter().map(|x| x * x).sum();
    let (_, a) = kappa_root(n, nu, k);
    let (coefficient, rhs) = weyl_sum_bound_at_a(m, n, nu, k, a)?;
    let lambda_k = s.values[k.min(n - 1)];
    let mut out = vec![
        BoundReport::evaluate(
            BoundName::LatticeWeyl,
            Relation::AtMost,
            weyl_sum_bound(m, n, nu, k)?,
            sum,
            tol,
        )
        .with_params(params()),
        BoundReport::evaluate(
            BoundName::LatticeWeylAtA,
            Relation::AtMost,
            rhs,
            lambda_k * coefficient + sum,
            tol,
        )
        .with_params(params().real("a", a)),
        BoundReport::evaluate(
            BoundName::LatticeSimple,
            Relation::AtMost,
            simple_lattice_bound(m, n, k)?,
            sum,
            tol,
        )
        .with_params(params()),
        BoundReport::evaluate(
            BoundName::WeylPower,
            Relation::AtMost,
            weyl_power_bound(m, n, nu, k)?,
            sum,
            tol,
        )
        .with_params(params()),
        BoundReport::evaluate(
            BoundName::LatticeWeylSquares,
            Relation::AtMost,
            weyl_sq_bound(g, emb, k)?,
            sq,
            tol,
        )
        .with_params(params()),
    ];
    if verbatim {
        out.push(
            BoundReport::evaluate(
                BoundName::LatticeWeylSquaresVerbatim,
                Relation::AtMost,
                weyl_sq_bound_verbatim(g, emb, k)?,
                sq,
                tol,
            )
            .with_params(params())
            .informational(),
        );
    }
    Ok(out)
}

/// The full lattice suite for a graph with a known embedding: every `k`,
/// Riesz means on [`riesz_z_grid`], and the Laplacian energy bound.
pub fn verify_embedding(
    g: &Graph,
    emb: &LatticeEmbedding,
    s: &Spectrum,
    verbatim: bool,
    tol: Tolerance,
) -> Result<Vec<BoundReport>> {
    emb.validate(g)?;
    s.require_kind(SpectrumKind::Laplacian)?;
    let (n, m, nu) = (g.n(), g.m(), emb.nu());
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(lattice_k_reports(g, emb, s, k, verbatim, tol)?);
    }
    if m > 0 {
        for z in riesz_z_grid(m, n) {
            out.extend(riesz_reports(s, m, nu, z, verbatim, tol)?);
        }
    }
    let le = le_lower_bound(m, nu)?;
    out.push(
        BoundReport::evaluate(
            BoundName::LaplacianEnergyLattice,
            Relation::AtLeast,
            le.max_form,
            laplacian_energy(s, m, n)?,
            tol,
        )
        .with_params(Params::new().int("nu", nu).real("closed_form", le.closed_form)),
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_cycle, gen_grid, gen_lattice_cluster, gen_lattice_subgraph, gen_path};
    use crate::report::Verdict;
    use crate::spectra::spectrum;
    use proptest::prelude::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn lap(g: &Graph) -> Spectrum {
        spectrum(g, SpectrumKind::Laplacian).unwrap()
    }

    #[test]
    fn sinc_values() {
        assert_eq!(sinc(0.0), 1.0);
        assert!(sinc(PI).abs() < 1e-16);
        assert!((sinc(PI / 2.0) - 2.0 / PI).abs() < 1e-15);
        for x in [1e-5f64, 5e-5, 9.9e-5, -3e-5] {
            let exact: f64 = 1.0 - x * x / 6.0 + x.powi(4) / 120.0 - x.powi(6) / 5040.0;
            assert!(((sinc(x) - exact) / exact).abs() < 1e-14);
        }
    }

    #[test]
    fn collinear_examples() {
        let (g, emb) = gen_grid(&[5]).unwrap();
        let p = collinear_counts(&emb, &g).unwrap();
        assert_eq!(p.counts, vec![0, 1, 1, 1, 0]);
        let (g, emb) = gen_grid(&[3, 3]).unwrap();
        let p = collinear_counts(&emb, &g).unwrap();
        assert_eq!(p.counts[4], 2);
        assert_eq!(p.counts[0], 0);
        assert_eq!(p.counts[1], 1);
    }

    #[test]
    fn collinear_respects_missing_edges() {
        let coords = vec![vec![0], vec![1], vec![2]];
        let (g, emb) = gen_lattice_subgraph(coords, false, Some(&[(0, 1)])).unwrap();
        assert_eq!(collinear_counts(&emb, &g).unwrap().counts, vec![0, 0, 0]);
    }

    #[test]
    fn weyl_sum_examples() {
        assert!((weyl_sum_bound(8, 8, 2, 8).unwrap() - 16.0).abs() < 1e-12);
        let b = weyl_sum_bound(8, 8, 2, 3).unwrap();
        assert!((b - 3.0735).abs() < 1e-3, "{b}");
        let c8 = lap(&gen_cycle(8).unwrap());
        assert!((partial_sum(&c8, 3).unwrap() - 1.171572875).abs() < 1e-8);
        assert!(weyl_sum_bound(8, 8, 2, 0).is_err());
        assert!(weyl_sum_bound_at_a(8, 8, 2, 1, 1.5).is_err());
    }

    #[test]
    fn envelope_dominance() {
        for nu in 1..=6 {
            for i in 1..=10_000 {
                let kappa = i as f64 / 10_000.0;
                let a = kappa.powf(1.0 / nu as f64);
                let sharp = 2.0 * kappa * (1.0 - sinc(PI * a));
                let power = PI * PI / 3.0 * kappa.powf(1.0 + 2.0 / nu as f64);
                assert!(sharp <= power + 1e-15);
            }
        }
    }

    #[test]
    fn square_bound_equality_at_full_k() {
        let (g, emb) = gen_grid(&[4, 3]).unwrap();
        let s = lap(&g);
        let sq: f64 = s.values.iter().map(|x| x * x).sum();
        let n = g.n();
        assert!((weyl_sq_bound(&g, &emb, n).unwrap() - sq).abs() < 1e-9 * sq);
        assert!((weyl_sq_bound_verbatim(&g, &emb, n).unwrap() - sq).abs() < 1e-9 * sq);
    }

    #[test]
    fn grid_suite_passes() {
        for dims in [vec![3usize, 3], vec![4, 4], vec![3, 2, 2]] {
            let (g, emb) = gen_grid(&dims).unwrap();
            let s = lap(&g);
            for r in verify_embedding(&g, &emb, &s, false, tol()).unwrap() {
                assert!(r.holds(), "{dims:?} {r:?}");
            }
        }
        let coords: Vec<Vec<i64>> = [[0, 0], [1, 0], [2, 0], [2, 1], [2, 2], [1, 2], [0, 2], [0, 1]]
            .iter()
            .map(|c| c.to_vec())
            .collect();
        let (g, emb) = gen_lattice_subgraph(coords, true, None).unwrap();
        assert_eq!((g.m(), g.regular_degree()), (8, Some(2)));
        for r in verify_embedding(&g, &emb, &lap(&g), false, tol()).unwrap() {
            assert!(r.holds(), "{r:?}");
        }
    }

    #[test]
    fn single_edge_square_bound() {
        let (g, emb) = gen_grid(&[2]).unwrap();
        assert!(weyl_sq_bound(&g, &emb, 1).unwrap() >= 0.0);
    }

    #[test]
    fn riesz_examples() {
        assert_eq!(riesz_lower_bound(0.0, 10, 8, 2).unwrap(), 0.0);
        assert_eq!(riesz_lower_bound_at_a(3.0, 10, 8, 2, 0.0).unwrap(), 0.0);
        assert!(riesz_lower_bound(21.0, 10, 8, 2).is_err());
        let g = gen_path(100).unwrap();
        let s = lap(&g);
        let z = 2.0 * 99.0 / 100.0;
        assert!(riesz_mean(&s, z, 1.0).unwrap().value >= riesz_lower_bound(z, 99, 100, 1).unwrap());
    }

    #[test]
    fn riesz_closed_form_matches_maximization() {
        for nu in 1..=4 {
            for (m, n) in [(12, 9), (99, 100), (400, 220)] {
                for z in riesz_z_grid(m, n) {
                    let mf = m as f64;
                    let f = |a: f64| z * n as f64 * a.powi(nu as i32) - PI * PI * mf / 3.0 * a.powi(nu as i32 + 2);
                    let (_, best) = golden_section_max(f, 0.0, 1.0, 1e-12);
                    let closed = riesz_lower_bound(z, m, n, nu).unwrap();
                    assert!((best - closed).abs() <= 1e-6 * (1.0 + closed.abs()), "{nu} {m} {n} {z}");
                }
            }
        }
    }

    #[test]
    fn energy_bound() {
        let b = le_lower_bound(10, 1).unwrap();
        assert!((b.max_form - 40.0 / PI).abs() < 1e-9);
        assert!((b.closed_form - 80.0 / 3.0 * (6.0 / (3.0 * PI * PI)).sqrt()).abs() < 1e-12);
        for nu in 1..=8 {
            let f = |a: f64| a.powi(nu) * sinc(PI * a);
            assert!(is_unimodal_on_grid(&f, 0.0, 1.0));
            let b = le_lower_bound(1, nu as usize).unwrap();
            assert!(b.max_form >= b.closed_form);
        }
    }

    #[test]
    fn cycle_formula() {
        for n in (8..=40).step_by(2) {
            let s = lap(&gen_cycle(n).unwrap());
            for k in (1..=n).step_by(2) {
                let exact = cycle_partial_sum(n, k).unwrap();
                let got = partial_sum(&s, k).unwrap();
                assert!((exact - got).abs() <= 1e-9 * (1.0 + got), "{n} {k}");
            }
        }
        assert!(cycle_partial_sum(8, 2).is_err());
    }

    #[test]
    fn karamata_examples() {
        assert!(karamata_check(&[0.0, 1.0], &[0.0, 1.0]).unwrap());
        assert!(karamata_check(&[0.0, 1.0], &[0.0, 2.0]).unwrap());
        assert!(!karamata_check(&[0.0, 3.0], &[0.0, 2.0]).unwrap());
        assert!(matches!(
            karamata_check(&[1.0, 0.0], &[0.0, 2.0]),
            Err(Error::Unsorted("mu"))
        ));
        assert!(karamata_check(&[0.0], &[0.0, 1.0]).is_err());
    }

    #[test]
    fn weyl_sequence_properties() {
        for nu in 1..=4 {
            let seq = WeylSequence::telescoping(50, 70, nu).unwrap();
            assert!(seq.values.windows(2).all(|w| w[1] >= w[0]));
            for k in 1..=50 {
                let env = weyl_power_bound(70, 50, nu, k).unwrap();
                assert!((seq.prefix_sum(k) - env).abs() < 1e-12 * env);
            }
            let der = WeylSequence::new(50, 70, nu, SequenceForm::Derivative).unwrap();
            assert_eq!(der.values[0], 0.0);
            assert!(der.values.windows(2).all(|w| w[1] >= w[0]));
        }
    }

    #[test]
    fn karamata_transforms() {
        let (g, emb) = gen_lattice_cluster(2, 60, 5).unwrap();
        let s = lap(&g);
        let seq = WeylSequence::telescoping(g.n(), g.m(), emb.nu()).unwrap();
        assert!(karamata_check(&s.values, &seq.values).unwrap());
        for k in 1..=g.n() {
            let id = karamata_transform_bound(&s, g.m(), 2, TransformFn::Identity, k, tol()).unwrap();
            let env = weyl_power_bound(g.m(), g.n(), 2, k).unwrap();
            assert!((id.bound - env).abs() < 1e-12 * (1.0 + env));
            for f in [
                TransformFn::Sqrt,
                TransformFn::ExpNeg { t: 0.1 },
                TransformFn::ExpNeg { t: 1.0 },
            ] {
                let r = karamata_transform_bound(&s, g.m(), 2, f, k, tol()).unwrap();
                assert!(r.holds(), "{r:?}");
            }
        }
        assert!("riesz:1:0.5".parse::<TransformFn>().is_err());
        assert_eq!(
            "riesz:2:1".parse::<TransformFn>().unwrap(),
            TransformFn::Riesz { t: 2.0, p: 1.0 }
        );
        assert_eq!(
            "exp-neg:1".parse::<TransformFn>().unwrap(),
            TransformFn::ExpNeg { t: 1.0 }
        );
        assert!("log".parse::<TransformFn>().is_err());
    }

    #[test]
    fn karamata_not_applicable_when_condition_fails() {
        let g = gen_complete(6).unwrap();
        let r = karamata_transform_bound(&lap(&g), g.m(), 1, TransformFn::Sqrt, 6, tol()).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn certifier_examples() {
        let k5 = gen_complete(5).unwrap();
        let cert = embeddability_certificate(&k5, &lap(&k5), 3, tol()).unwrap();
        assert!(cert[0].verdict.is_excluded());
        let p = gen_path(30).unwrap();
        let cert = embeddability_certificate(&p, &lap(&p), 3, tol()).unwrap();
        assert!(cert.iter().all(|c| !c.verdict.is_excluded()));
        let c = gen_cycle(20).unwrap();
        let cert = embeddability_certificate(&c, &lap(&c), 2, tol()).unwrap();
        assert!(!cert[1].verdict.is_excluded());
    }

    #[test]
    fn certifier_monotone_in_dimension() {
        let k = gen_complete(12).unwrap();
        let cert = embeddability_certificate(&k, &lap(&k), 6, tol()).unwrap();
        let first_open = cert.iter().position(|c| !c.verdict.is_excluded()).unwrap_or(cert.len());
        assert!(cert[first_open..].iter().all(|c| !c.verdict.is_excluded()));
        assert!(cert[..first_open].iter().all(|c| c.verdict.is_excluded()));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn lattice_clusters_satisfy_bounds(seed in 0u64..100_000, n in 2usize..80, nu in 1usize..4) {
            let (g, emb) = gen_lattice_cluster(nu, n, seed).unwrap();
            let s = lap(&g);
            for r in verify_embedding(&g, &emb, &s, false, tol()).unwrap() {
                prop_assert!(r.holds(), "{r:?}");
            }
            let seq = WeylSequence::telescoping(g.n(), g.m(), nu).unwrap();
            prop_assert!(karamata_check(&s.values, &seq.values).unwrap());
        }
    }
}
