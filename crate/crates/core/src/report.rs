//! Machine-checked bound reports.
//!
//! A [`BoundReport`] pairs a computed bound with the measured spectral quantity
//! it constrains. `slack` is sign-adjusted so that a nonnegative value means the
//! inequality holds; verdicts use the threshold `tolerance · (1 + |bound|)`.

use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(pub f64);

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(DEFAULT_TOLERANCE)
    }
}

impl Tolerance {
    pub fn threshold(self, bound: f64) -> f64 {
        self.0 * (1.0 + bound.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
    Equality,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "NOT_APPLICABLE",
            Verdict::Equality => "EQUALITY",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How `measured` must compare with `bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    AtMost,
    AtLeast,
    Equal,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
            Relation::Equal => "==",
        }
    }
}

impl Serialize for Relation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

macro_rules! bound_names {
    ($($variant:ident => $id:literal),* $(,)?) => {
        /// Stable identifiers for every bound the library evaluates.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum BoundName { $($variant),* }

        impl BoundName {
            pub const ALL: &'static [BoundName] = &[$(BoundName::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self { $(BoundName::$variant => $id),* }
            }
        }
    };
}

bound_names! {
    TraceSum => "trace_sum",
    TraceSumSquares => "trace_sum_squares",
    FiedlerLowest => "fiedler_lambda1",
    FiedlerHighest => "fiedler_lambda_max",
    PairSumLowest => "pair_sum_lowest",
    PairSumHighest => "pair_sum_highest",
    DegreeAveragedLowest => "degree_averaged_pair_lowest",
    DegreeAveragedHighest => "degree_averaged_pair_highest",
    LSumLowest => "l_sum_lowest",
    LSumHighest => "l_sum_highest",
    LSumTopBlockLowestVerbatim => "l_sum_top_block_lowest_verbatim",
    LSumTopBlockHighestVerbatim => "l_sum_top_block_highest_verbatim",
    LaplacianPairSet => "laplacian_pair_set",
    NormalizedPairSet => "normalized_pair_set",
    NormalizedSquarePairSet => "normalized_square_pair_set",
    NormalizedSquarePairSetVerbatim => "normalized_square_pair_set_verbatim",
    AdjacencySmallestSum => "adjacency_smallest_sum",
    AdjacencyLargestSum => "adjacency_largest_sum",
    AdjacencySmallestSumVerbatim => "adjacency_smallest_sum_verbatim",
    AdjacencyLargestSumVerbatim => "adjacency_largest_sum_verbatim",
    AdjacencySmallestSquares => "adjacency_smallest_squares",
    AveragedPrinciple => "averaged_principle",
    AveragedPrincipleSum => "averaged_principle_sum",
    LatticeWeyl => "lattice_weyl",
    LatticeWeylAtA => "lattice_weyl_at_a",
    LatticeWeylSquares => "lattice_weyl_squares",
    LatticeWeylSquaresVerbatim => "lattice_weyl_squares_verbatim",
    LatticeSimple => "lattice_simple",
    WeylPower => "weyl_power",
    RieszMeanAtA => "riesz_mean_at_a",
    RieszMeanWeyl => "riesz_mean_weyl",
    RieszMeanWeylVerbatim => "riesz_mean_weyl_verbatim",
    LaplacianEnergyLattice => "laplacian_energy_lattice",
    KaramataConcave => "karamata_concave",
    KaramataConvex => "karamata_convex",
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for BoundName {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    Int(i64),
    Real(f64),
    Text(String),
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ParamValue::Int(v) => s.serialize_i64(*v),
            ParamValue::Real(v) => s.serialize_f64(*v),
            ParamValue::Text(v) => s.serialize_str(v),
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Real(v) => write!(f, "{v}"),
            ParamValue::Text(v) => f.write_str(v),
        }
    }
}

/// Named scalars in insertion order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Params(Vec<(&'static str, ParamValue)>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn int(mut self, key: &'static str, value: usize) -> Self {
        self.0.push((key, ParamValue::Int(value as i64)));
        self
    }

    pub fn real(mut self, key: &'static str, value: f64) -> Self {
        self.0.push((key, ParamValue::Real(value)));
        self
    }

    pub fn text(mut self, key: &'static str, value: impl Into<String>) -> Self {
        self.0.push((key, ParamValue::Text(value.into())));
        self
    }

    pub fn get(&self, key: &str) -> Option<&ParamValue> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(&'static str, ParamValue)> {
        self.0.iter()
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// The vertex subset or pair set a bound was evaluated on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    Subset(Vec<usize>),
    Pairs(Vec<(usize, usize)>),
}

impl Serialize for Selection {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Selection::Subset(v) => v.serialize(s),
            Selection::Pairs(p) => p.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>().serialize(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub name: BoundName,
    pub params: Params,
    pub relation: Relation,
    pub bound: f64,
    pub measured: f64,
    pub slack: f64,
    pub verdict: Verdict,
    /// Informational reports (printed variants evaluated for comparison) never
    /// count as failures.
    pub asserted: bool,
    pub selection: Option<Selection>,
    pub note: Option<String>,
}

impl BoundReport {
    pub fn evaluate(name: BoundName, relation: Relation, bound: f64, measured: f64, tol: Tolerance) -> Self {
        let slack = match relation {
            Relation::AtMost | Relation::Equal => bound - measured,
            Relation::AtLeast => measured - bound,
        };
        let threshold = tol.threshold(bound);
        let verdict = if !slack.is_finite() {
            Verdict::Fail
        } else if slack.abs() < threshold {
            Verdict::Equality
        } else if relation != Relation::Equal && slack >= -threshold {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Self {
            name,
            params: Params::new(),
            relation,
            bound,
            measured,
            slack,
            verdict,
            asserted: true,
            selection: None,
            note: None,
        }
    }

    pub fn not_applicable(name: BoundName, relation: Relation, reason: impl Into<String>) -> Self {
        Self {
            name,
            params: Params::new(),
            relation,
            bound: f64::NAN,
            measured: f64::NAN,
            slack: f64::NAN,
            verdict: Verdict::NotApplicable,
            asserted: true,
            selection: None,
            note: Some(reason.into()),
        }
    }

    pub fn with_params(mut self, params: Params) -> Self {
        self.params = params;
        self
    }

    pub fn with_selection(mut self, selection: Selection) -> Self {
        self.selection = Some(selection);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn informational(mut self) -> Self {
        self.asserted = false;
        self
    }

    pub fn holds(&self) -> bool {
        matches!(self.verdict, Verdict::Pass | Verdict::Equality)
    }

    /// A failure of an asserted inequality.
    pub fn is_failure(&self) -> bool {
        self.asserted && self.verdict == Verdict::Fail
    }
}

impl Serialize for BoundReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BoundReport", 11)?;
        st.serialize_field("name", &self.name)?;
        st.serialize_field("params", &self.params)?;
        st.serialize_field("relation", &self.relation)?;
        st.serialize_field("bound", &self.bound)?;
        st.serialize_field("measured", &self.measured)?;
        st.serialize_field("slack", &self.slack)?;
        st.serialize_field("verdict", &self.verdict)?;
        st.serialize_field("holds", &self.holds())?;
        st.serialize_field("asserted", &self.asserted)?;
        st.serialize_field("pairs_or_subset", &self.selection)?;
        st.serialize_field("note", &self.note)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(rel: Relation, bound: f64, measured: f64) -> Verdict {
        BoundReport::evaluate(BoundName::TraceSum, rel, bound, measured, Tolerance::default()).verdict
    }

    #[test]
    fn verdicts_follow_slack() {
        assert_eq!(verdict(Relation::AtMost, 2.0, 1.0), Verdict::Pass);
        assert_eq!(verdict(Relation::AtMost, 1.0, 2.0), Verdict::Fail);
        assert_eq!(verdict(Relation::AtMost, 1.0, 1.0 + 1e-12), Verdict::Equality);
        assert_eq!(verdict(Relation::AtLeast, 1.0, 2.0), Verdict::Pass);
        assert_eq!(verdict(Relation::AtLeast, 2.0, 1.0), Verdict::Fail);
        assert_eq!(verdict(Relation::Equal, 2.0, 1.0), Verdict::Fail);
        assert_eq!(verdict(Relation::Equal, 2.0, 2.0), Verdict::Equality);
        assert_eq!(verdict(Relation::AtMost, f64::NAN, 1.0), Verdict::Fail);
    }

    #[test]
    fn equality_implies_small_slack() {
        let r = BoundReport::evaluate(
            BoundName::TraceSum,
            Relation::AtMost,
            1e6,
            1e6 - 1e-4,
            Tolerance::default(),
        );
        assert_eq!(r.verdict, Verdict::Equality);
        assert!(r.slack.abs() < Tolerance::default().threshold(r.bound));
    }

    #[test]
    fn informational_failures_do_not_count() {
        let r = BoundReport::evaluate(BoundName::TraceSum, Relation::AtMost, 0.0, 1.0, Tolerance::default());
        assert!(r.is_failure());
        assert!(!r.informational().is_failure());
    }

    #[test]
    fn names_are_unique() {
        let mut ids: Vec<_> = BoundName::ALL.iter().map(|b| b.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), BoundName::ALL.len());
    }
}
