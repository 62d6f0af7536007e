//! Machine-readable report types. Field order is declaration order and all
//! values are derived deterministically from the input, so `--json` output is
//! byte-identical across runs for the same input and version.

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use cover_algebra::{BipartiteGraph, Relabeling};

/// Integers coming out of the pipeline are arbitrary precision; emit them as
/// JSON numbers while they fit and fall back to decimal strings beyond.
pub fn json_int(v: &BigInt) -> Value {
    if let Ok(small) = i64::try_from(v) {
        return Value::from(small);
    }
    if let Ok(small) = u64::try_from(v) {
        return Value::from(small);
    }
    Value::String(v.to_string())
}

#[derive(Serialize)]
pub struct GraphEcho {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphEcho {
    pub fn from_graph(g: &BipartiteGraph) -> Self {
        Self {
            n: g.n(),
            edges: g.edges().iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct RelabelingOut {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl RelabelingOut {
    pub fn from_relabeling(r: &Relabeling) -> Self {
        Self {
            x: r.x.iter().map(|&v| v + 1).collect(),
            y: r.y.iter().map(|&v| v + 1).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct LatticeOut {
    pub size: usize,
    pub rank: usize,
    /// Elements as 1-based index lists, sorted by (cardinality, lex);
    /// omitted above [`ELEMENT_DUMP_CAP`].
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<Vec<usize>>>,
}

pub const ELEMENT_DUMP_CAP: usize = 512;

#[derive(Serialize)]
pub struct CheckReport {
    pub n: usize,
    pub input: GraphEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dropped_pairs: Option<Vec<usize>>,
    pub relabeling: RelabelingOut,
    pub standardized: GraphEcho,
    pub unmixed: bool,
    pub cohen_macaulay: bool,
    pub lattice: LatticeOut,
}

#[derive(Serialize)]
pub struct HilbertReport {
    pub n: usize,
    pub input: GraphEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dropped_pairs: Option<Vec<usize>>,
    pub relabeling: RelabelingOut,
    pub lattice: LatticeOut,
    pub f_vector: Vec<Value>,
    pub h: Vec<Value>,
    pub denom_power: usize,
    pub series: String,
    pub multiplicity: Value,
    pub bounds: [Value; 2],
    pub cohen_macaulay: bool,
    pub knn: bool,
    pub gorenstein_symmetric: bool,
    pub a_invariant: i64,
}

#[derive(Serialize)]
pub struct BinomialOut {
    pub lead: String,
    pub trail: String,
}

#[derive(Serialize)]
pub struct GroebnerReport {
    pub n: usize,
    pub input: GraphEcho,
    pub relabeling: RelabelingOut,
    pub lattice: LatticeOut,
    pub binomials: Vec<BinomialOut>,
}

#[derive(Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub input: GraphEcho,
    pub level: String,
    pub checks: Vec<CheckOutcome>,
    pub passed: bool,
}
