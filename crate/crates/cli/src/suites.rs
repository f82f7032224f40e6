//! Bound suites run by `bounds` and `report`.

use std::ops::RangeInclusive;

use eigensum_core::averaged::{
    adjacency_square_bound, adjacency_sum_bound, laplacian_pairsum_bound, normalized_pairsum_bound,
    normalized_square_bound, select_pairs_adjacency, select_pairs_laplacian, select_pairs_normalized, PairSet,
    PairStrategy,
};
use eigensum_core::basis::{
    degree_averaged_pair_bounds, fiedler_bounds, l_sum_bound, l_sum_top_block_verbatim, pair_sum_bounds, select_subset,
    Side, SubsetStrategy,
};
use eigensum_core::spectra::spectrum_with;
use eigensum_core::{
    BoundName, BoundReport, Error, Graph, Params, Relation, Result, Solver, Spectrum, SpectrumKind, Tolerance,
};

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub k: Option<usize>,
    pub l: Option<usize>,
    pub subset_strategy: SubsetStrategy,
    pub pair_strategy: PairStrategy,
    pub pairs: Option<Vec<(usize, usize)>>,
    pub squares: bool,
    pub verbatim: bool,
    pub tol: Tolerance,
}

/// Spectra computed on first use.
pub struct Spectra<'g> {
    graph: &'g Graph,
    solver: Solver,
    cache: [Option<Spectrum>; 3],
}

impl<'g> Spectra<'g> {
    pub fn new(graph: &'g Graph, solver: Solver) -> Self {
        Self {
            graph,
            solver,
            cache: [None, None, None],
        }
    }

    pub fn get(&mut self, kind: SpectrumKind) -> Result<&Spectrum> {
        let slot = match kind {
            SpectrumKind::Adjacency => 0,
            SpectrumKind::Laplacian => 1,
            SpectrumKind::Normalized => 2,
        };
        if self.cache[slot].is_none() {
            self.cache[slot] = Some(spectrum_with(self.graph, kind, false, self.solver)?);
        }
        Ok(self.cache[slot].as_ref().expect("filled above"))
    }
}

fn k_values(requested: Option<usize>, range: RangeInclusive<usize>) -> Vec<usize> {
    match requested {
        Some(k) => vec![k],
        None => range.collect(),
    }
}

fn explicit_pairs(g: &Graph, opts: &SuiteOptions) -> Result<Option<PairSet>> {
    match &opts.pairs {
        None => Ok(None),
        Some(p) => {
            if opts.k.is_none() {
                return Err(Error::InvalidArgument("--pairs-file needs an explicit --k".into()));
            }
            PairSet::new(g.n(), p.clone()).map(Some)
        }
    }
}

pub fn fiedler(g: &Graph, sp: &mut Spectra, opts: &SuiteOptions) -> Result<Vec<BoundReport>> {
    let lap = sp.get(SpectrumKind::Laplacian)?;
    let mut out: Vec<BoundReport> = fiedler_bounds(g, lap, opts.tol)?.into();
    for side in [Side::Lowest, Side::Highest] {
        out.push(pair_sum_bounds(g, lap, side, opts.tol)?);
        out.push(degree_averaged_pair_bounds(g, lap, side, opts.tol)?);
    }
    Ok(out)
}

pub fn lsum(g: &Graph, sp: &mut Spectra, opts: &SuiteOptions) -> Result<Vec<BoundReport>> {
    let lap = sp.get(SpectrumKind::Laplacian)?;
    let mut out = Vec::new();
    for l in k_values(opts.l, 1..=g.n().saturating_sub(1)) {
        for side in [Side::Lowest, Side::Highest] {
            let subset = select_subset(g, l, opts.subset_strategy, side)?;
            let report = l_sum_bound(g, lap, l, &subset, side, opts.tol)?;
            out.push(
                report.with_params(
                    Params::new()
                        .int("L", l)
                        .text("side", side.as_str())
                        .text("strategy", opts.subset_strategy.as_str()),
                ),
            );
            if opts.verbatim {
                out.push(l_sum_top_block_verbatim(g, lap, l, &subset[..l], side, opts.tol)?);
            }
        }
    }
    Ok(out)
}

pub fn laplacian_pairs(g: &Graph, sp: &mut Spectra, opts: &SuiteOptions) -> Result<Vec<BoundReport>> {
    let lap = sp.get(SpectrumKind::Laplacian)?;
    let explicit = explicit_pairs(g, opts)?;
    let mut out = Vec::new();
    for k in k_values(opts.k, 2..=g.n()) {
        let m0 = match &explicit {
            Some(p) => p.clone(),
            None => select_pairs_laplacian(g, k, opts.pair_strategy)?,
        };
        out.push(laplacian_pairsum_bound(g, lap, k, &m0, opts.tol)?);
    }
    Ok(out)
}

pub fn normalized(g: &Graph, sp: &mut Spectra, opts: &SuiteOptions) -> Result<Vec<BoundReport>> {
    let norm = sp.get(SpectrumKind::Normalized)?;
    let explicit = explicit_pairs(g, opts)?;
    let mut out = Vec::new();
    for k in k_values(opts.k, 1..=g.n()) {
        let m0 = match &explicit {
            Some(p) => p.clone(),
            None => match select_pairs_normalized(g, k) {
                Ok(p) => p,
                Err(Error::InsufficientPairs { needed, available }) => {
                    let reason =
                        format!("ordered pairs reach a degree sum of {available}, below the required {needed}");
                    let mut names = vec![BoundName::NormalizedPairSet];
                    if opts.squares {
                        names.push(BoundName::NormalizedSquarePairSet);
                    }
                    for name in names {
                        out.push(
                            BoundReport::not_applicable(name, Relation::AtMost, reason.clone())
                                .with_params(Params::new().int("k", k)),
                        );
                    }
                    continue;
                }
                Err(e) => return Err(e),
            },
        };
        out.push(normalized_pairsum_bound(g, norm, k, &m0, opts.tol)?);
        if opts.squares {
            out.extend(normalized_square_bound(g, norm, k, &m0, opts.verbatim, opts.tol)?);
        }
    }
    Ok(out)
}

pub fn adjacency(g: &Graph, sp: &mut Spectra, opts: &SuiteOptions) -> Result<Vec<BoundReport>> {
    let adj = sp.get(SpectrumKind::Adjacency)?;
    let explicit = explicit_pairs(g, opts)?;
    let mut out = Vec::new();
    let top = if g.n() >= 3 { g.n() - 2 } else { 0 };
    for k in k_values(opts.k, 1..=top) {
        out.extend(adjacency_sum_bound(g, adj, k, opts.verbatim, opts.tol)?);
        if opts.squares {
            let m0 = match &explicit {
                Some(p) => p.clone(),
                None => select_pairs_adjacency(g, k, opts.pair_strategy)?,
            };
            out.push(adjacency_square_bound(g, adj, k, &m0, opts.tol)?);
        }
    }
    Ok(out)
}

/// Every suite with its full parameter range; the normalized suite is
/// skipped (with a warning) when a vertex is isolated.
pub fn all(g: &Graph, sp: &mut Spectra, opts: &SuiteOptions) -> Result<Vec<BoundReport>> {
    let mut out = fiedler(g, sp, opts)?;
    out.extend(lsum(g, sp, opts)?);
    out.extend(laplacian_pairs(g, sp, opts)?);
    if g.min_degree() == 0 {
        eprintln!("warning: graph has an isolated vertex; skipping the normalized suite");
    } else {
        out.extend(normalized(g, sp, opts)?);
    }
    out.extend(adjacency(g, sp, opts)?);
    Ok(out)
}

/// Tags reports computed on a disconnected graph.
pub fn mark_disconnected(g: &Graph, reports: &mut [BoundReport]) {
    if g.is_connected() {
        return;
    }
    for r in reports {
        r.note = Some(match r.note.take() {
            Some(n) => format!("graph is not connected; {n}"),
            None => "graph is not connected".to_string(),
        });
    }
}
