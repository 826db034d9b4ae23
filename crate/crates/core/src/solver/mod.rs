//! Exact sparing numbers.
//!
//! All three solvers work on the binary model: an assignment is feasible when
//! its non-mono vertices are independent, and its cost is the number of edges
//! with two mono ends. For an independent non-mono set `S` that cost equals
//! `|E| - Σ_{v∈S} deg(v)`, so minimizing it is a maximum-weight independent
//! set problem with degree weights.

mod mwis;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{CoronaLayout, Graph};
use crate::setlab::{count_mono_edges, Assignment};

use mwis::Limits;

pub const DEFAULT_BRUTEFORCE_CAP: usize = 24;

/// Hard ceiling for exhaustive enumeration; assignments are bit masks.
const BRUTEFORCE_CEILING: usize = 63;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error(
        "graph has {vertices} vertices, above the brute-force cap of {cap}; use the mwis solver"
    )]
    TooLarge { vertices: usize, cap: usize },
    #[error("unknown method `{0}` (expected bf, mwis or corona)")]
    UnknownMethod(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "bf")]
    BruteForce,
    #[serde(rename = "mwis")]
    MwisBB,
    #[serde(rename = "corona")]
    CoronaDecomp,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::BruteForce => "bf",
            Method::MwisBB => "mwis",
            Method::CoronaDecomp => "corona",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = SolverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bf" => Ok(Method::BruteForce),
            "mwis" => Ok(Method::MwisBB),
            "corona" => Ok(Method::CoronaDecomp),
            other => Err(SolverError::UnknownMethod(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest vertex count accepted by [`sparing_bruteforce`] (at most 63).
    pub bruteforce_cap: usize,
    /// Branch-and-bound node budget.
    pub node_limit: Option<u64>,
    /// Branch-and-bound wall-clock budget.
    pub time_limit: Option<Duration>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            bruteforce_cap: DEFAULT_BRUTEFORCE_CAP,
            node_limit: None,
            time_limit: None,
        }
    }
}

impl SolverConfig {
    fn limits(&self) -> Limits {
        Limits {
            node_limit: self.node_limit,
            deadline: self.time_limit.map(|t| Instant::now() + t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparingResult {
    /// Mono-indexed edge count of `witness`; the sparing number when `optimal`.
    pub value: usize,
    pub witness: Assignment,
    pub method: Method,
    /// Enumerated assignments (brute force) or search nodes (branch and bound).
    pub explored: u64,
    /// False only when a search budget ran out before optimality was proven.
    pub optimal: bool,
}

/// Exhaustive minimum over every feasible assignment.
///
/// Among optimal assignments the one with the lexicographically smallest
/// sorted non-mono vertex list is returned.
pub fn sparing_bruteforce(g: &Graph, config: &SolverConfig) -> Result<SparingResult, SolverError> {
    let n = g.vertex_count();
    let cap = config.bruteforce_cap.min(BRUTEFORCE_CEILING);
    if n > cap {
        return Err(SolverError::TooLarge { vertices: n, cap });
    }
    let neighbor_masks: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect();
    let edges = g.edges();

    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut explored = 0u64;
    // Depth-first over vertices in id order; a vertex may be made non-mono
    // only if no earlier non-mono vertex is adjacent to it.
    let mut visit = |nonmono: u64| {
        explored += 1;
        let value = edges
            .iter()
            .filter(|&&(u, v)| nonmono >> u & 1 == 0 && nonmono >> v & 1 == 0)
            .count();
        let improves = match &best {
            None => true,
            Some((b, _)) if value != *b => value < *b,
            Some((_, set)) => bits(nonmono) < *set,
        };
        if improves {
            best = Some((value, bits(nonmono)));
        }
    };
    enumerate_independent(&neighbor_masks, 0, 0, &mut visit);

    let (value, nonmono) = best.expect("the all-mono assignment is always feasible");
    Ok(SparingResult {
        value,
        witness: Assignment::from_nonmono(n, &nonmono),
        method: Method::BruteForce,
        explored,
        optimal: true,
    })
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

fn enumerate_independent(neighbors: &[u64], v: usize, chosen: u64, visit: &mut impl FnMut(u64)) {
    if v == neighbors.len() {
        visit(chosen);
        return;
    }
    enumerate_independent(neighbors, v + 1, chosen, visit);
    if neighbors[v] & chosen == 0 {
        enumerate_independent(neighbors, v + 1, chosen | 1 << v, visit);
    }
}

/// Sparing number via maximum-weight independent set with degree weights.
pub fn sparing_mwis(g: &Graph, config: &SolverConfig) -> SparingResult {
    let neighbors: Vec<&[usize]> = (0..g.vertex_count()).map(|v| g.neighbors(v)).collect();
    let weights: Vec<i64> = g.degrees().into_iter().map(|d| d as i64).collect();
    let out = mwis::solve(&neighbors, &weights, config.limits());
    let witness = Assignment::from_nonmono(g.vertex_count(), &out.set);
    let value = g.edge_count() - out.weight as usize;
    debug_assert_eq!(value, count_mono_edges(g, &witness));
    SparingResult {
        value,
        witness,
        method: Method::MwisBB,
        explored: out.explored,
        optimal: out.optimal,
    }
}

/// Sparing number of a corona `G1 ⊙ G2` from one search on each operand.
///
/// If a base vertex is non-mono its whole copy of `G2` must be mono; if it is
/// mono its copy is free, and the best the copy can contribute is the
/// maximum-weight independent set of `G2` under weights `deg(u) + 1` (the `+1`
/// is the join edge to the base vertex). Call that `W2`. Choosing the set `T`
/// of non-mono base vertices is then a weighted independent set problem on
/// `G1` with weights `deg(v) + n2 - W2`, offset by `n1·W2`.
pub fn sparing_corona(layout: &CoronaLayout, config: &SolverConfig) -> SparingResult {
    let (base, copy) = (&layout.base, &layout.copy);
    let n1 = base.vertex_count();
    let n2 = copy.vertex_count();
    let limits = config.limits();

    let copy_neighbors: Vec<&[usize]> = (0..n2).map(|u| copy.neighbors(u)).collect();
    let copy_weights: Vec<i64> = copy.degrees().into_iter().map(|d| d as i64 + 1).collect();
    let inner = mwis::solve(&copy_neighbors, &copy_weights, limits);

    let base_neighbors: Vec<&[usize]> = (0..n1).map(|v| base.neighbors(v)).collect();
    let base_weights: Vec<i64> = base
        .degrees()
        .into_iter()
        .map(|d| (d + n2) as i64 - inner.weight)
        .collect();
    let outer = mwis::solve(&base_neighbors, &base_weights, limits);

    let mut nonmono = outer.set.clone();
    for i in (0..n1).filter(|i| outer.set.binary_search(i).is_err()) {
        nonmono.extend(inner.set.iter().map(|&u| layout.copy_id(i, u)));
    }
    nonmono.sort_unstable();

    let best = n1 as i64 * inner.weight + outer.weight;
    let value = layout.product.edge_count() - best as usize;
    let witness = Assignment::from_nonmono(layout.product.vertex_count(), &nonmono);
    debug_assert_eq!(value, count_mono_edges(&layout.product, &witness));
    SparingResult {
        value,
        witness,
        method: Method::CoronaDecomp,
        explored: inner.explored + outer.explored,
        optimal: inner.optimal && outer.optimal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, corona, FamilySpec};

    fn g(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    fn layout(a: FamilySpec, b: FamilySpec) -> CoronaLayout {
        corona(&g(a), &g(b)).unwrap()
    }

    #[test]
    fn bruteforce_baselines() {
        let cfg = SolverConfig::default();
        assert_eq!(
            sparing_bruteforce(&g(FamilySpec::Complete(5)), &cfg)
                .unwrap()
                .value,
            6
        );
        assert_eq!(
            sparing_bruteforce(&g(FamilySpec::Cycle(6)), &cfg)
                .unwrap()
                .value,
            0
        );
        assert_eq!(
            sparing_bruteforce(&g(FamilySpec::Cycle(5)), &cfg)
                .unwrap()
                .value,
            1
        );
    }

    #[test]
    fn bruteforce_cap() {
        let cfg = SolverConfig {
            bruteforce_cap: 5,
            ..SolverConfig::default()
        };
        let err = sparing_bruteforce(&g(FamilySpec::Cycle(6)), &cfg).unwrap_err();
        assert_eq!(
            err,
            SolverError::TooLarge {
                vertices: 6,
                cap: 5
            }
        );
        assert!(err.to_string().contains("mwis"));
    }

    #[test]
    fn bruteforce_witness_is_lexicographically_smallest() {
        let cfg = SolverConfig::default();
        // C4 optima: {0,2} and {1,3}
        let r = sparing_bruteforce(&g(FamilySpec::Cycle(4)), &cfg).unwrap();
        assert_eq!(r.witness.nonmono(), vec![0, 2]);
        // K3 optima: any single vertex
        let r = sparing_bruteforce(&g(FamilySpec::Complete(3)), &cfg).unwrap();
        assert_eq!(r.witness.nonmono(), vec![0]);
        // C5: non-mono pairs {0,2},{0,3},{1,3},{1,4},{2,4}
        let r = sparing_bruteforce(&g(FamilySpec::Cycle(5)), &cfg).unwrap();
        assert_eq!(r.witness.nonmono(), vec![0, 2]);
    }

    #[test]
    fn mwis_examples() {
        let cfg = SolverConfig::default();
        let r = sparing_mwis(&g(FamilySpec::Cycle(4)), &cfg);
        assert_eq!(r.value, 0);
        assert_eq!(r.witness.nonmono().len(), 2);
        let c3c3 = layout(FamilySpec::Cycle(3), FamilySpec::Cycle(3));
        assert_eq!(sparing_mwis(&c3c3.product, &cfg).value, 10);
        let c3k2 = layout(FamilySpec::Cycle(3), FamilySpec::Complete(2));
        assert_eq!(sparing_mwis(&c3k2.product, &cfg).value, 4);
    }

    #[test]
    fn corona_examples() {
        let cfg = SolverConfig::default();
        for (a, b, expected) in [
            (FamilySpec::Path(1), FamilySpec::Path(1), 2),
            (FamilySpec::Cycle(4), FamilySpec::Cycle(4), 12),
            (FamilySpec::Path(2), FamilySpec::Path(2), 4),
            (FamilySpec::Complete(1), FamilySpec::Cycle(3), 3),
        ] {
            let l = layout(a, b);
            let r = sparing_corona(&l, &cfg);
            assert_eq!(r.value, expected, "{:?}", l.product.tag());
            assert!(r.witness.is_feasible(&l.product));
            assert_eq!(count_mono_edges(&l.product, &r.witness), r.value);
        }
    }

    #[test]
    fn limited_search_is_flagged() {
        let cfg = SolverConfig {
            node_limit: Some(2),
            ..SolverConfig::default()
        };
        let l = layout(FamilySpec::Cycle(7), FamilySpec::Cycle(7));
        let r = sparing_mwis(&l.product, &cfg);
        assert!(!r.optimal);
        assert!(r.witness.is_feasible(&l.product));
        assert_eq!(count_mono_edges(&l.product, &r.witness), r.value);

        let cfg = SolverConfig {
            time_limit: Some(Duration::ZERO),
            ..SolverConfig::default()
        };
        let r = sparing_mwis(&g(FamilySpec::Complete(30)), &cfg);
        assert!(!r.optimal);
        assert!(r.witness.is_feasible(&g(FamilySpec::Complete(30))));
    }

    #[test]
    fn method_names() {
        for m in [Method::BruteForce, Method::MwisBB, Method::CoronaDecomp] {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert!("greedy".parse::<Method>().is_err());
        assert_eq!(serde_json::to_string(&Method::MwisBB).unwrap(), "\"mwis\"");
    }
}
