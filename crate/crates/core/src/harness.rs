//! Conformance grid: every closed form against the exact solvers.
//!
//! For each theorem and parameter tuple the harness builds the corona,
//! computes its sparing number with the corona solver, cross-checks it with
//! branch and bound on the whole product and, below the brute-force cap, with
//! exhaustive enumeration, then classifies the printed (and proof-derived)
//! value against it. Any disagreement between exact solvers aborts the run.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::formulas::{
    format_value, serialize_opt_value, serialize_value, FormulaError, FormulaEvaluation, Status,
    TheoremId, Value,
};
use crate::graph::{build_family, corona, FamilySpec, Graph, GraphError};
use crate::setlab::{build_witness, validate_labeling, Assignment, SetlabError};
use crate::solver::{
    sparing_bruteforce, sparing_corona, sparing_mwis, SolverConfig, DEFAULT_BRUTEFORCE_CAP,
};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{graph} has {vertices} vertices, above the grid budget of {max}")]
    Budget {
        graph: String,
        vertices: usize,
        max: usize,
    },
    #[error("exact solvers disagree on {graph}: {details}")]
    SolverDisagreement { graph: String, details: String },
    #[error("witness for {graph} failed validation: {details}")]
    InvalidWitness { graph: String, details: String },
    #[error("no rows to summarize")]
    Empty,
    #[error("bad grid file: {0}")]
    GridFile(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Setlab(#[from] SetlabError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Inclusive integer range, written `[lo, hi]`. Empty when `lo > hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub const fn new(lo: usize, hi: usize) -> Self {
        Span { lo, hi }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl From<(usize, usize)> for Span {
    fn from((lo, hi): (usize, usize)) -> Self {
        Span { lo, hi }
    }
}

impl From<Span> for (usize, usize) {
    fn from(s: Span) -> Self {
        (s.lo, s.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolverPolicy {
    /// Corona solver, confirmed by branch and bound and (under the cap) brute force.
    CrossCheck,
    /// Corona solver alone.
    CoronaOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridSpec {
    pub path_edges: Span,
    pub cycle_lengths: Span,
    pub complete_orders: Span,
    pub biclique_parts: Span,
    /// Restrict the run to these theorems; empty means all.
    pub theorems: Vec<TheoremId>,
    /// Brute force runs on products with at most this many vertices.
    pub bruteforce_cap: usize,
    /// No product may exceed this many vertices.
    pub max_vertices: usize,
    pub policy: SolverPolicy,
    /// Build and validate an explicit labeling for every row.
    pub validate_witnesses: bool,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            path_edges: Span::new(1, 5),
            cycle_lengths: Span::new(3, 7),
            complete_orders: Span::new(1, 5),
            biclique_parts: Span::new(1, 3),
            theorems: Vec::new(),
            bruteforce_cap: DEFAULT_BRUTEFORCE_CAP,
            max_vertices: 64,
            policy: SolverPolicy::CrossCheck,
            validate_witnesses: true,
        }
    }
}

impl GridSpec {
    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        Ok(serde_json::from_str(text)?)
    }

    fn includes(&self, id: TheoremId) -> bool {
        self.theorems.is_empty() || self.theorems.contains(&id)
    }

    /// Every instance of the grid, in report order.
    pub fn instances(&self) -> Result<Vec<GridInstance>, HarnessError> {
        let paths: Vec<usize> = self.path_edges.iter().filter(|&m| m >= 1).collect();
        let cycles: Vec<usize> = self.cycle_lengths.iter().filter(|&n| n >= 3).collect();
        let odd_cycles: Vec<usize> = cycles.iter().copied().filter(|n| n % 2 == 1).collect();
        let completes: Vec<usize> = self.complete_orders.iter().filter(|&n| n >= 1).collect();
        let parts: Vec<usize> = self.biclique_parts.iter().filter(|&r| r >= 1).collect();
        let bicliques: Vec<(usize, usize)> = parts
            .iter()
            .flat_map(|&r| parts.iter().filter(move |&&s| s >= r).map(move |&s| (r, s)))
            .collect();

        let mut bipartite: Vec<FamilySpec> = paths.iter().map(|&m| FamilySpec::Path(m)).collect();
        bipartite.extend(
            cycles
                .iter()
                .filter(|n| *n % 2 == 0)
                .map(|&n| FamilySpec::Cycle(n)),
        );
        bipartite.extend(
            bicliques
                .iter()
                .map(|&(r, s)| FamilySpec::CompleteBipartite(r, s)),
        );
        let stats: Vec<(FamilySpec, BipartiteStats)> = bipartite
            .into_iter()
            .map(|f| {
                let g = build_family(&f)?;
                Ok((f, BipartiteStats::of(&g)))
            })
            .collect::<Result<_, GraphError>>()?;

        use FamilySpec::{Complete as K, CompleteBipartite as B, Cycle as C, Path as P};
        let mut out = Vec::new();
        let mut push = |theorem: TheoremId, params: Vec<usize>, base, copy| {
            out.push(GridInstance {
                theorem,
                params: params.into_iter().map(|p| p as i64).collect(),
                base,
                copy,
            })
        };
        let pairs = |a: &[usize], b: &[usize]| -> Vec<(usize, usize)> {
            a.iter()
                .flat_map(|&x| b.iter().map(move |&y| (x, y)))
                .collect()
        };

        for id in TheoremId::ALL.into_iter().filter(|&id| self.includes(id)) {
            match id {
                TheoremId::PP => pairs(&paths, &paths)
                    .into_iter()
                    .for_each(|(m, n)| push(id, vec![m, n], P(m), P(n))),
                TheoremId::CP => pairs(&cycles, &paths)
                    .into_iter()
                    .for_each(|(m, n)| push(id, vec![m, n], C(m), P(n))),
                TheoremId::PC => pairs(&paths, &cycles)
                    .into_iter()
                    .for_each(|(n, m)| push(id, vec![n, m], P(n), C(m))),
                TheoremId::CC => pairs(&cycles, &cycles)
                    .into_iter()
                    .for_each(|(m, n)| push(id, vec![m, n], C(m), C(n))),
                TheoremId::KK => pairs(&completes, &completes)
                    .into_iter()
                    .for_each(|(m, n)| push(id, vec![m, n], K(m), K(n))),
                TheoremId::PK => pairs(&paths, &completes)
                    .into_iter()
                    .for_each(|(m, n)| push(id, vec![m, n], P(m), K(n))),
                TheoremId::KP => pairs(&completes, &paths)
                    .into_iter()
                    .for_each(|(n, m)| push(id, vec![n, m], K(n), P(m))),
                TheoremId::CK => pairs(&cycles, &completes)
                    .into_iter()
                    .for_each(|(m, n)| push(id, vec![m, n], C(m), K(n))),
                TheoremId::KC => pairs(&completes, &cycles)
                    .into_iter()
                    .for_each(|(n, m)| push(id, vec![n, m], K(n), C(m))),
                TheoremId::BicliqueBiclique => {
                    for &(m1, n1) in &bicliques {
                        for &(m2, n2) in &bicliques {
                            push(id, vec![m1, n1, m2, n2], B(m1, n1), B(m2, n2));
                        }
                    }
                }
                TheoremId::BipartiteBipartite => {
                    for (g1, s1) in &stats {
                        for (g2, s2) in &stats {
                            let params = vec![s1.r, s1.s, s2.r, s2.s, s2.q];
                            push(id, params, g1.clone(), g2.clone());
                        }
                    }
                }
                TheoremId::OddCycleBip | TheoremId::BipOddCycle => {
                    for &n in &odd_cycles {
                        for (g, s) in &stats {
                            let params = vec![n, s.r, s.s, s.q];
                            if id == TheoremId::OddCycleBip {
                                push(id, params, C(n), g.clone());
                            } else {
                                push(id, params, g.clone(), C(n));
                            }
                        }
                    }
                }
                TheoremId::KBip | TheoremId::BipK => {
                    for &n in &completes {
                        for (g, s) in &stats {
                            let params = vec![n, s.r, s.s, s.q];
                            if id == TheoremId::KBip {
                                push(id, params, K(n), g.clone());
                            } else {
                                push(id, params, g.clone(), K(n));
                            }
                        }
                    }
                }
            }
        }
        out.sort_by(|a, b| {
            (a.theorem, &a.params, a.graph_spec()).cmp(&(b.theorem, &b.params, b.graph_spec()))
        });
        Ok(out)
    }

    /// Rejects grids whose products exceed the vertex budget.
    pub fn check_budget(&self) -> Result<Vec<GridInstance>, HarnessError> {
        let instances = self.instances()?;
        for inst in &instances {
            let vertices = inst.vertex_count()?;
            if vertices > self.max_vertices {
                return Err(HarnessError::Budget {
                    graph: inst.graph_spec(),
                    vertices,
                    max: self.max_vertices,
                });
            }
        }
        Ok(instances)
    }
}

/// Part sizes `r <= s` and edge count `q` of a connected bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteStats {
    pub r: usize,
    pub s: usize,
    pub q: usize,
}

impl BipartiteStats {
    fn of(g: &Graph) -> Self {
        let (r, s) = g
            .bipartition()
            .expect("grid families listed as bipartite are bipartite")
            .part_sizes();
        BipartiteStats {
            r,
            s,
            q: g.edge_count(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridInstance {
    pub theorem: TheoremId,
    pub params: Vec<i64>,
    pub base: FamilySpec,
    pub copy: FamilySpec,
}

impl GridInstance {
    pub fn family(&self) -> FamilySpec {
        FamilySpec::corona(self.base.clone(), self.copy.clone())
    }

    pub fn graph_spec(&self) -> String {
        self.family().to_string()
    }

    fn vertex_count(&self) -> Result<usize, GraphError> {
        let n1 = build_family(&self.base)?.vertex_count();
        let n2 = build_family(&self.copy)?.vertex_count();
        Ok(n1 * (1 + n2))
    }
}

fn serialize_params<S: Serializer>(p: &[(String, i64)], s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_params(p))
}

pub fn format_params(params: &[(String, i64)]) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConformanceRow {
    pub theorem: TheoremId,
    #[serde(serialize_with = "serialize_params")]
    pub params: Vec<(String, i64)>,
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
    pub oracle: u64,
    #[serde(serialize_with = "serialize_value")]
    pub as_printed: Value,
    #[serde(serialize_with = "serialize_opt_value")]
    pub proof_derived: Option<Value>,
    pub status: Status,
    pub derived_status: Option<Status>,
    /// Exact solvers that produced the oracle value, joined by `+`.
    pub checked_by: String,
    pub witness_path: Option<String>,
    #[serde(skip)]
    pub family: FamilySpec,
    #[serde(skip)]
    pub witness: Assignment,
}

fn solve_instance(spec: &GridSpec, inst: &GridInstance) -> Result<ConformanceRow, HarnessError> {
    let layout = corona(&build_family(&inst.base)?, &build_family(&inst.copy)?)?;
    let g = &layout.product;
    let graph = inst.graph_spec();
    let config = SolverConfig {
        bruteforce_cap: spec.bruteforce_cap,
        ..SolverConfig::default()
    };

    let primary = sparing_corona(&layout, &config);
    let mut checked_by = vec!["corona"];
    let mut values = vec![("corona", primary.value)];
    if spec.policy == SolverPolicy::CrossCheck {
        values.push(("mwis", sparing_mwis(g, &config).value));
        checked_by.push("mwis");
        if g.vertex_count() <= spec.bruteforce_cap {
            let bf = sparing_bruteforce(g, &config).expect("vertex count checked against the cap");
            values.push(("bf", bf.value));
            checked_by.push("bf");
        }
    }
    if values.iter().any(|&(_, v)| v != primary.value) {
        let details = values
            .iter()
            .map(|(name, v)| format!("{name}={v}"))
            .collect::<Vec<_>>()
            .join(", ");
        return Err(HarnessError::SolverDisagreement { graph, details });
    }

    if spec.validate_witnesses {
        let labeling = build_witness(g, &primary.witness)?;
        let report = validate_labeling(g, &labeling)?;
        if !report.is_weak_iasi() || report.mono_edges != primary.value {
            return Err(HarnessError::InvalidWitness {
                graph,
                details: format!("{report:?}, expected {} mono edges", primary.value),
            });
        }
    }

    let oracle = primary.value as u64;
    let eval = FormulaEvaluation::new(inst.theorem, &inst.params, Some(oracle))?;
    Ok(ConformanceRow {
        theorem: inst.theorem,
        params: eval.params,
        graph,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        oracle,
        as_printed: eval.as_printed,
        proof_derived: eval.proof_derived,
        status: eval.status,
        derived_status: eval.derived_status,
        checked_by: checked_by.join("+"),
        witness_path: None,
        family: inst.family(),
        witness: primary.witness,
    })
}

/// Runs the grid. Rows come back in theorem order, then by parameters.
pub fn run_grid(spec: &GridSpec) -> Result<Vec<ConformanceRow>, HarnessError> {
    let instances = spec.check_budget()?;
    instances
        .par_iter()
        .map(|inst| solve_instance(spec, inst))
        .collect()
}

/// Writes one labeling per row as `<dir>/<theorem>-<index>.json` and records
/// the path in the row.
pub fn write_witnesses(rows: &mut [ConformanceRow], dir: &Path) -> Result<(), HarnessError> {
    std::fs::create_dir_all(dir)?;
    for (i, row) in rows.iter_mut().enumerate() {
        let g = build_family(&row.family)?;
        let labeling = build_witness(&g, &row.witness)?;
        let path = dir.join(format!("{}-{:04}.json", row.theorem, i));
        std::fs::write(&path, labeling.to_json() + "\n")?;
        row.witness_path = Some(path.display().to_string());
    }
    Ok(())
}

pub const CSV_HEADER: [&str; 12] = [
    "theorem",
    "params",
    "graph",
    "vertices",
    "edges",
    "oracle",
    "as_printed",
    "proof_derived",
    "status",
    "derived_status",
    "checked_by",
    "witness_path",
];

pub fn to_csv(rows: &[ConformanceRow]) -> Result<String, HarnessError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.theorem.to_string(),
            format_params(&r.params),
            r.graph.clone(),
            r.vertices.to_string(),
            r.edges.to_string(),
            r.oracle.to_string(),
            format_value(&r.as_printed),
            r.proof_derived
                .as_ref()
                .map(format_value)
                .unwrap_or_default(),
            r.status.to_string(),
            r.derived_status.map(|s| s.to_string()).unwrap_or_default(),
            r.checked_by.clone(),
            r.witness_path.clone().unwrap_or_default(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn to_json(rows: &[ConformanceRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize") + "\n"
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremSummary {
    pub rows: usize,
    /// Counts of the printed-value status.
    pub status: BTreeMap<Status, usize>,
    /// Counts of the proof-derived status, for rows that have one.
    pub derived_status: BTreeMap<Status, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConformanceSummary {
    /// Only theorems that have at least one row.
    pub theorems: BTreeMap<TheoremId, TheoremSummary>,
    /// True iff no row is an underestimate or a non-integer.
    pub all_claims_hold: bool,
    /// One line per failing row.
    pub failures: Vec<String>,
}

pub fn summarize(rows: &[ConformanceRow]) -> Result<ConformanceSummary, HarnessError> {
    if rows.is_empty() {
        return Err(HarnessError::Empty);
    }
    let mut theorems: BTreeMap<TheoremId, TheoremSummary> = BTreeMap::new();
    let mut failures = Vec::new();
    for row in rows {
        let entry = theorems
            .entry(row.theorem)
            .or_insert_with(|| TheoremSummary {
                rows: 0,
                status: BTreeMap::new(),
                derived_status: BTreeMap::new(),
            });
        entry.rows += 1;
        *entry.status.entry(row.status).or_default() += 1;
        if let Some(d) = row.derived_status {
            *entry.derived_status.entry(d).or_default() += 1;
        }
        if row.status.is_failure() {
            failures.push(format!(
                "{} {} ({}): {} printed {} vs exact {}",
                row.theorem,
                format_params(&row.params),
                row.graph,
                row.status,
                format_value(&row.as_printed),
                row.oracle
            ));
        }
    }
    Ok(ConformanceSummary {
        theorems,
        all_claims_hold: failures.is_empty(),
        failures,
    })
}

impl fmt::Display for ConformanceSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<20}{:>6}", "theorem", "rows")?;
        for s in Status::ALL {
            write!(f, "{:>15}", s.as_str())?;
        }
        writeln!(f)?;
        for (id, t) in &self.theorems {
            write!(f, "{:<20}{:>6}", id.as_str(), t.rows)?;
            for s in Status::ALL {
                write!(f, "{:>15}", t.status.get(&s).copied().unwrap_or(0))?;
            }
            writeln!(f)?;
        }
        writeln!(
            f,
            "all closed forms hold: {}",
            if self.all_claims_hold { "yes" } else { "no" }
        )?;
        for line in &self.failures {
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}
