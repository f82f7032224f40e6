use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use super::{RawEigen, Spectrum, SpectrumKind};
use crate::error::{Error, Result};
use crate::graph::{gen_complete, gen_cycle, gen_join, gen_path, gen_star, Graph};

/// Graph families with exactly known spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    /// Join of an edgeless graph on `n - p` vertices with `K_p`.
    Join {
        p: usize,
    },
}

impl Family {
    pub fn generate(self, n: usize) -> Result<Graph> {
        match self {
            Family::Path => gen_path(n),
            Family::Cycle => gen_cycle(n),
            Family::Complete => gen_complete(n),
            Family::Star => gen_star(n),
            Family::Join { p } => gen_join(n, p),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Join { .. } => "join",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Join { p } => write!(f, "join(p={p})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `path`, `cycle`, `complete`, `star`; joins need an explicit `p`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "star" => Ok(Family::Star),
            other => Err(Error::InvalidArgument(format!("unknown graph family `{other}`"))),
        }
    }
}

fn repeat(out: &mut Vec<f64>, value: f64, times: usize) {
    out.extend(std::iter::repeat_n(value, times));
}

/// Exact eigenvalues for `family` on `n` vertices, in canonical order for `kind`.
pub fn closed_form(kind: SpectrumKind, family: Family, n: usize) -> Result<Spectrum> {
    // Reuse the generators' parameter validation.
    family.generate(n)?;
    let nf = n as f64;
    let mut v = Vec::with_capacity(n);
    match (family, kind) {
        (Family::Path, SpectrumKind::Laplacian) => {
            v.extend((0..n).map(|j| 4.0 * (PI * j as f64 / (2.0 * nf)).sin().powi(2)));
        }
        (Family::Path, SpectrumKind::Adjacency) => {
            v.extend((1..=n).map(|j| 2.0 * (PI * j as f64 / (nf + 1.0)).cos()));
        }
        (Family::Path, SpectrumKind::Normalized) => {
            v.extend((0..n).map(|j| 1.0 - (PI * j as f64 / (nf - 1.0)).cos()));
        }
        (Family::Cycle, SpectrumKind::Laplacian) => {
            v.extend((0..n).map(|j| 4.0 * (PI * j as f64 / nf).sin().powi(2)));
        }
        (Family::Cycle, SpectrumKind::Adjacency) => {
            v.extend((0..n).map(|j| 2.0 * (2.0 * PI * j as f64 / nf).cos()));
        }
        (Family::Cycle, SpectrumKind::Normalized) => {
            v.extend((0..n).map(|j| 2.0 * (PI * j as f64 / nf).sin().powi(2)));
        }
        (Family::Complete, SpectrumKind::Laplacian) => {
            v.push(0.0);
            repeat(&mut v, nf, n - 1);
        }
        (Family::Complete, SpectrumKind::Adjacency) => {
            v.push(nf - 1.0);
            repeat(&mut v, -1.0, n - 1);
        }
        (Family::Complete, SpectrumKind::Normalized) => {
            v.push(0.0);
            repeat(&mut v, nf / (nf - 1.0), n - 1);
        }
        (Family::Star, kind) => return closed_form(kind, Family::Join { p: 1 }, n),
        (Family::Join { p }, SpectrumKind::Laplacian) => {
            v.push(0.0);
            repeat(&mut v, p as f64, n - p - 1);
            repeat(&mut v, nf, p);
        }
        (Family::Join { p }, SpectrumKind::Adjacency) => {
            let pf = p as f64;
            let d = ((pf - 1.0).powi(2) + 4.0 * pf * (nf - pf)).sqrt();
            v.push((pf - 1.0 + d) / 2.0);
            v.push((pf - 1.0 - d) / 2.0);
            repeat(&mut v, 0.0, n - p - 1);
            repeat(&mut v, -1.0, p - 1);
        }
        (Family::Join { p }, SpectrumKind::Normalized) => {
            v.push(0.0);
            repeat(&mut v, 1.0, n - p - 1);
            repeat(&mut v, nf / (nf - 1.0), p - 1);
            v.push((2.0 * nf - 1.0 - p as f64) / (nf - 1.0));
        }
    }
    v.sort_by(f64::total_cmp);
    Ok(Spectrum::from_ascending(
        kind,
        RawEigen {
            values: v,
            vectors: None,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::spectrum;

    fn max_err(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }

    #[test]
    fn join_laplacian_example() {
        let s = closed_form(SpectrumKind::Laplacian, Family::Join { p: 2 }, 5).unwrap();
        assert_eq!(s.values, vec![0.0, 2.0, 2.0, 5.0, 5.0]);
    }

    #[test]
    fn cycle_laplacian_example() {
        let s = closed_form(SpectrumKind::Laplacian, Family::Cycle, 8).unwrap();
        let a = 4.0 * (PI / 8.0).sin().powi(2);
        let b = 4.0 * (3.0 * PI / 8.0).sin().powi(2);
        assert!(max_err(&s.values, &[0.0, a, a, 2.0, 2.0, b, b, 4.0]) < 1e-14);
    }

    #[test]
    fn join_adjacency_is_traceless() {
        for n in 2..30 {
            for p in 1..n {
                let s = closed_form(SpectrumKind::Adjacency, Family::Join { p }, n).unwrap();
                assert!(s.total().abs() < 1e-10);
                assert_eq!(s.len(), n);
            }
        }
    }

    #[test]
    fn star_adjacency() {
        let s = closed_form(SpectrumKind::Adjacency, Family::Star, 4).unwrap();
        let r = 3f64.sqrt();
        assert!(max_err(&s.values, &[r, 0.0, 0.0, -r]) < 1e-14);
    }

    #[test]
    fn every_family_matches_the_solver() {
        let families = [
            Family::Path,
            Family::Cycle,
            Family::Complete,
            Family::Star,
            Family::Join { p: 3 },
        ];
        for n in 4..25 {
            for family in families {
                for kind in SpectrumKind::ALL {
                    let exact = closed_form(kind, family, n).unwrap();
                    let numeric = spectrum(&family.generate(n).unwrap(), kind).unwrap();
                    assert!(max_err(&exact.values, &numeric.values) < 1e-10, "{family} {kind} n={n}");
                }
            }
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(closed_form(SpectrumKind::Laplacian, Family::Cycle, 2).is_err());
        assert!(closed_form(SpectrumKind::Laplacian, Family::Join { p: 5 }, 5).is_err());
    }
}
