//! Set-label arithmetic and weak set-indexer witnesses.
//!
//! A labeling assigns each vertex a finite set of non-negative integers; an
//! edge is labeled by the sum set of its endpoint labels. The labeling is a
//! weak set-indexer when vertex labels are pairwise distinct, edge labels are
//! pairwise distinct, and every edge label is exactly as large as the larger
//! endpoint label. That last condition holds precisely when every edge has an
//! endpoint with a singleton label, so a weak set-indexer is determined, up to
//! injectivity, by the binary mono / non-mono marking in [`Assignment`].

use std::collections::{BTreeMap, HashSet};
use std::num::NonZeroU64;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SetlabError {
    #[error("index sets must be non-empty")]
    EmptySet,
    #[error("assignment is infeasible: edge {0}-{1} has no mono-indexed end")]
    Infeasible(usize, usize),
    #[error("{what} has {found} entries but the graph has {expected} vertices")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("vertex ids in a labeling must be exactly 0..{0}")]
    SparseIds(usize),
}

/// A non-empty finite set of non-negative integers, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct IndexSet(Vec<u64>);

impl IndexSet {
    pub fn new<I: IntoIterator<Item = u64>>(elements: I) -> Result<Self, SetlabError> {
        let mut v: Vec<u64> = elements.into_iter().collect();
        if v.is_empty() {
            return Err(SetlabError::EmptySet);
        }
        v.sort_unstable();
        v.dedup();
        Ok(IndexSet(v))
    }

    pub fn singleton(x: u64) -> Self {
        IndexSet(vec![x])
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_singleton(&self) -> bool {
        self.0.len() == 1
    }

    pub fn largest(&self) -> u64 {
        *self.0.last().unwrap()
    }
}

impl TryFrom<Vec<u64>> for IndexSet {
    type Error = SetlabError;

    fn try_from(v: Vec<u64>) -> Result<Self, Self::Error> {
        IndexSet::new(v)
    }
}

impl From<IndexSet> for Vec<u64> {
    fn from(s: IndexSet) -> Self {
        s.0
    }
}

/// `A + B = {a + b : a ∈ A, b ∈ B}`.
pub fn sumset(a: &IndexSet, b: &IndexSet) -> IndexSet {
    let mut sums: Vec<u64> =
        a.0.iter()
            .flat_map(|&x| b.0.iter().map(move |&y| x + y))
            .collect();
    sums.sort_unstable();
    sums.dedup();
    IndexSet(sums)
}

/// Elementwise multiple `k·A`; the cardinality is unchanged.
pub fn scale(k: NonZeroU64, a: &IndexSet) -> IndexSet {
    IndexSet(a.0.iter().map(|&x| x * k.get()).collect())
}

/// The first `count` terms of the greedy Mian–Chowla sequence
/// `1, 2, 4, 8, 13, 21, 31, …`: each term is the least integer above the
/// previous one keeping all pairwise sums (repeats allowed) distinct.
pub fn sidon_prefix(count: usize) -> Result<IndexSet, SetlabError> {
    if count == 0 {
        return Err(SetlabError::EmptySet);
    }
    let mut terms: Vec<u64> = vec![1];
    let mut sums: HashSet<u64> = HashSet::from([2]);
    let mut candidate = 1;
    while terms.len() < count {
        candidate += 1;
        let clashes = terms
            .iter()
            .map(|&t| t + candidate)
            .chain(std::iter::once(2 * candidate))
            .any(|s| sums.contains(&s));
        if clashes {
            continue;
        }
        sums.extend(terms.iter().map(|&t| t + candidate));
        sums.insert(2 * candidate);
        terms.push(candidate);
    }
    Ok(IndexSet(terms))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mark {
    Mono,
    NonMono,
}

/// Per-vertex mono / non-mono marking. Feasible iff the non-mono vertices
/// form an independent set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    marks: Vec<Mark>,
}

impl Assignment {
    pub fn all_mono(n: usize) -> Self {
        Assignment {
            marks: vec![Mark::Mono; n],
        }
    }

    pub fn from_marks(marks: Vec<Mark>) -> Self {
        Assignment { marks }
    }

    /// Marks exactly the listed vertices non-mono. Panics on ids `>= n`.
    pub fn from_nonmono(n: usize, nonmono: &[usize]) -> Self {
        let mut marks = vec![Mark::Mono; n];
        for &v in nonmono {
            marks[v] = Mark::NonMono;
        }
        Assignment { marks }
    }

    pub fn marks(&self) -> &[Mark] {
        &self.marks
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    pub fn is_mono(&self, v: usize) -> bool {
        self.marks[v] == Mark::Mono
    }

    /// Non-mono vertex ids in increasing order.
    pub fn nonmono(&self) -> Vec<usize> {
        (0..self.marks.len())
            .filter(|&v| !self.is_mono(v))
            .collect()
    }

    pub fn mono_count(&self) -> usize {
        self.marks.iter().filter(|&&m| m == Mark::Mono).count()
    }

    /// First edge whose ends are both non-mono, if any.
    pub fn violating_edge(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges()
            .iter()
            .copied()
            .find(|&(u, v)| !self.is_mono(u) && !self.is_mono(v))
    }

    pub fn is_feasible(&self, g: &Graph) -> bool {
        self.marks.len() == g.vertex_count() && self.violating_edge(g).is_none()
    }

    /// `{"0": "mono", "1": "nonmono", …}` keyed by vertex id.
    pub fn to_map(&self) -> BTreeMap<usize, Mark> {
        self.marks.iter().copied().enumerate().collect()
    }
}

/// Number of edges with both ends marked mono.
pub fn count_mono_edges(g: &Graph, asg: &Assignment) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| asg.is_mono(u) && asg.is_mono(v))
        .count()
}

/// Vertex labels, indexed by vertex id. Serialized as a JSON object mapping
/// each id to its sorted element list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    try_from = "BTreeMap<usize, IndexSet>",
    into = "BTreeMap<usize, IndexSet>"
)]
pub struct Labeling {
    vertex_labels: Vec<IndexSet>,
}

impl Labeling {
    pub fn new(vertex_labels: Vec<IndexSet>) -> Self {
        Labeling { vertex_labels }
    }

    pub fn labels(&self) -> &[IndexSet] {
        &self.vertex_labels
    }

    pub fn edge_label(&self, u: usize, v: usize) -> IndexSet {
        sumset(&self.vertex_labels[u], &self.vertex_labels[v])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("labeling serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

impl TryFrom<BTreeMap<usize, IndexSet>> for Labeling {
    type Error = SetlabError;

    fn try_from(map: BTreeMap<usize, IndexSet>) -> Result<Self, Self::Error> {
        let n = map.len();
        if map.keys().enumerate().any(|(i, &k)| i != k) {
            return Err(SetlabError::SparseIds(n));
        }
        Ok(Labeling {
            vertex_labels: map.into_values().collect(),
        })
    }
}

impl From<Labeling> for BTreeMap<usize, IndexSet> {
    fn from(l: Labeling) -> Self {
        l.vertex_labels.into_iter().enumerate().collect()
    }
}

/// Realizes a feasible assignment as explicit set labels.
///
/// Each vertex gets a distinct base value `b_v` from a Sidon sequence; mono
/// vertices are labeled `{b_v}` and non-mono vertices `{b_v, b_v + D}` with
/// `D = 2·max(b) + 1`. Singleton edge sums are then distinct because `b` is
/// Sidon, and two-element edge labels are distinct because their minima are.
pub fn build_witness(g: &Graph, asg: &Assignment) -> Result<Labeling, SetlabError> {
    let n = g.vertex_count();
    if asg.len() != n {
        return Err(SetlabError::LengthMismatch {
            what: "assignment",
            expected: n,
            found: asg.len(),
        });
    }
    if let Some((u, v)) = asg.violating_edge(g) {
        return Err(SetlabError::Infeasible(u, v));
    }
    if n == 0 {
        return Ok(Labeling::new(Vec::new()));
    }
    let base = sidon_prefix(n)?;
    let offset = 2 * base.largest() + 1;
    let labels = base
        .elements()
        .iter()
        .zip(asg.marks())
        .map(|(&b, mark)| match mark {
            Mark::Mono => IndexSet(vec![b]),
            Mark::NonMono => IndexSet(vec![b, b + offset]),
        })
        .collect();
    Ok(Labeling::new(labels))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// No two vertices share a label.
    pub vertex_injective: bool,
    /// No two edges share a label.
    pub edge_injective: bool,
    /// `|f(u) + f(v)| = max(|f(u)|, |f(v)|)` on every edge.
    pub weak: bool,
    /// Edges whose label is a singleton.
    pub mono_edges: usize,
}

impl ValidationReport {
    pub fn is_weak_iasi(&self) -> bool {
        self.vertex_injective && self.edge_injective && self.weak
    }
}

pub fn validate_labeling(g: &Graph, lab: &Labeling) -> Result<ValidationReport, SetlabError> {
    let labels = lab.labels();
    if labels.len() != g.vertex_count() {
        return Err(SetlabError::LengthMismatch {
            what: "labeling",
            expected: g.vertex_count(),
            found: labels.len(),
        });
    }
    let distinct_vertices: HashSet<&IndexSet> = labels.iter().collect();
    let mut edge_labels = HashSet::with_capacity(g.edge_count());
    let mut edge_injective = true;
    let mut weak = true;
    let mut mono_edges = 0;
    for &(u, v) in g.edges() {
        let label = lab.edge_label(u, v);
        weak &= label.len() == labels[u].len().max(labels[v].len());
        if label.is_singleton() {
            mono_edges += 1;
        }
        edge_injective &= edge_labels.insert(label);
    }
    Ok(ValidationReport {
        vertex_injective: distinct_vertices.len() == labels.len(),
        edge_injective,
        weak,
        mono_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec};

    fn set(xs: &[u64]) -> IndexSet {
        IndexSet::new(xs.iter().copied()).unwrap()
    }

    #[test]
    fn sumsets() {
        assert_eq!(sumset(&set(&[0]), &set(&[5])), set(&[5]));
        assert_eq!(sumset(&set(&[1, 2]), &set(&[1, 3])), set(&[2, 3, 4, 5]));
        let collide = sumset(&set(&[0, 1]), &set(&[0, 1]));
        assert_eq!(collide, set(&[0, 1, 2]));
        assert_eq!(collide.len(), 3);
    }

    #[test]
    fn scaling() {
        let k = |x| NonZeroU64::new(x).unwrap();
        assert_eq!(scale(k(1), &set(&[2, 5])), set(&[2, 5]));
        assert_eq!(scale(k(3), &set(&[1, 2])), set(&[3, 6]));
        assert_eq!(scale(k(2), &set(&[0, 1, 4])), set(&[0, 2, 8]));
    }

    #[test]
    fn index_set_rejects_empty() {
        assert_eq!(IndexSet::new([]), Err(SetlabError::EmptySet));
        assert!(serde_json::from_str::<IndexSet>("[]").is_err());
        assert_eq!(
            serde_json::from_str::<IndexSet>("[3,1,3]").unwrap(),
            set(&[1, 3])
        );
    }

    #[test]
    fn sidon_terms() {
        assert_eq!(sidon_prefix(1).unwrap(), set(&[1]));
        assert_eq!(sidon_prefix(4).unwrap(), set(&[1, 2, 4, 8]));
        assert_eq!(sidon_prefix(6).unwrap(), set(&[1, 2, 4, 8, 13, 21]));
        assert!(sidon_prefix(0).is_err());
    }

    #[test]
    fn witness_single_edge() {
        let g = build_family(&FamilySpec::Path(1)).unwrap();
        let lab = build_witness(&g, &Assignment::all_mono(2)).unwrap();
        assert_eq!(lab.labels(), &[set(&[1]), set(&[2])]);
        assert_eq!(lab.edge_label(0, 1), set(&[3]));

        let lab = build_witness(&g, &Assignment::from_nonmono(2, &[1])).unwrap();
        assert_eq!(lab.edge_label(0, 1).len(), 2);
        assert!(validate_labeling(&g, &lab).unwrap().is_weak_iasi());
    }

    #[test]
    fn witness_triangle() {
        let g = build_family(&FamilySpec::Cycle(3)).unwrap();
        let asg = Assignment::from_nonmono(3, &[0]);
        let report = validate_labeling(&g, &build_witness(&g, &asg).unwrap()).unwrap();
        assert!(report.is_weak_iasi());
        assert_eq!(report.mono_edges, 1);
    }

    #[test]
    fn witness_rejects_infeasible() {
        let g = build_family(&FamilySpec::Cycle(4)).unwrap();
        let asg = Assignment::from_nonmono(4, &[1, 2]);
        assert_eq!(build_witness(&g, &asg), Err(SetlabError::Infeasible(1, 2)));
    }

    #[test]
    fn validator_checks() {
        let p1 = build_family(&FamilySpec::Path(1)).unwrap();
        let dup = Labeling::new(vec![set(&[1]), set(&[1])]);
        assert!(!validate_labeling(&p1, &dup).unwrap().vertex_injective);

        let p2 = build_family(&FamilySpec::Path(2)).unwrap();
        let lab = Labeling::new(vec![set(&[1]), set(&[2]), set(&[3])]);
        let r = validate_labeling(&p2, &lab).unwrap();
        assert!(r.is_weak_iasi());
        assert_eq!(r.mono_edges, 2);

        let both = Labeling::new(vec![set(&[1, 2]), set(&[3, 4])]);
        let r = validate_labeling(&p1, &both).unwrap();
        assert!(!r.weak);

        // {1}+{4} and {2}+{3} collide
        let c = build_family(&FamilySpec::Cycle(4)).unwrap();
        let lab = Labeling::new(vec![set(&[1]), set(&[4]), set(&[2]), set(&[3])]);
        assert!(!validate_labeling(&c, &lab).unwrap().edge_injective);

        assert!(matches!(
            validate_labeling(&p2, &dup),
            Err(SetlabError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn mono_edge_counts() {
        let c4 = build_family(&FamilySpec::Cycle(4)).unwrap();
        assert_eq!(count_mono_edges(&c4, &Assignment::all_mono(4)), 4);
        assert_eq!(
            count_mono_edges(&c4, &Assignment::from_nonmono(4, &[0, 2])),
            0
        );
        let k4 = build_family(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(count_mono_edges(&k4, &Assignment::from_nonmono(4, &[0])), 3);
    }

    #[test]
    fn labeling_json() {
        let g = build_family(&FamilySpec::Cycle(3)).unwrap();
        let lab = build_witness(&g, &Assignment::from_nonmono(3, &[1])).unwrap();
        let json = lab.to_json();
        assert!(json.contains("\"1\": [\n    2,\n    11\n  ]"), "{json}");
        let back = Labeling::from_json(&json).unwrap();
        assert_eq!(back, lab);
        assert!(validate_labeling(&g, &back).unwrap().is_weak_iasi());
        assert!(Labeling::from_json(r#"{"0":[1],"2":[2]}"#).is_err());
    }
}
