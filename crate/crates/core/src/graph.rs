//! Simple undirected graphs, the named families used throughout the crate,
//! and the corona product.
//!
//! Vertex ids are dense integers `0..n`. Edges are stored once, as `(u, v)`
//! with `u < v`, in sorted order, so two graphs built from the same edge set
//! compare equal regardless of insertion order.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("{family}: {bound} (got {value})")]
    ParameterOutOfRange {
        family: &'static str,
        bound: &'static str,
        value: usize,
    },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("corona operands must have at least one vertex")]
    EmptyOperand,
    #[error("custom graphs cannot be rebuilt from their descriptor")]
    NotAFamily,
}

/// Descriptor of a named graph family.
///
/// `Path(m)` counts edges, so it has `m + 1` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Corona(Box<FamilySpec>, Box<FamilySpec>),
    /// A graph that did not come from a family, e.g. one read from a file.
    Custom(String),
}

impl FamilySpec {
    pub fn corona(base: FamilySpec, copy: FamilySpec) -> Self {
        FamilySpec::Corona(Box::new(base), Box::new(copy))
    }

    /// Checks the parameter bounds of this descriptor and of any nested ones.
    pub fn check(&self) -> Result<(), GraphError> {
        fn bound(
            ok: bool,
            family: &'static str,
            bound: &'static str,
            value: usize,
        ) -> Result<(), GraphError> {
            if ok {
                Ok(())
            } else {
                Err(GraphError::ParameterOutOfRange {
                    family,
                    bound,
                    value,
                })
            }
        }
        match self {
            FamilySpec::Path(m) => bound(*m >= 1, "path", "edge count must be >= 1", *m),
            FamilySpec::Cycle(n) => bound(*n >= 3, "cycle", "length must be >= 3", *n),
            FamilySpec::Complete(n) => bound(*n >= 1, "complete", "order must be >= 1", *n),
            FamilySpec::CompleteBipartite(r, s) => {
                bound(*r >= 1, "biclique", "first part must be >= 1", *r)?;
                bound(*s >= 1, "biclique", "second part must be >= 1", *s)
            }
            FamilySpec::Corona(a, b) => {
                a.check()?;
                b.check()
            }
            FamilySpec::Custom(_) => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(m) => write!(f, "path:{m}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(r, s) => write!(f, "biclique:{r},{s}"),
            FamilySpec::Corona(a, b) => write!(f, "corona({a},{b})"),
            FamilySpec::Custom(label) => write!(f, "file:{label}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    tag: Option<FamilySpec>,
}

impl Graph {
    /// Builds a simple graph. Edges may come in any order or orientation;
    /// self-loops, repeated edges and out-of-range endpoints are rejected.
    /// Isolated vertices are allowed here, see [`Graph::check_no_isolated`].
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: v,
                        count: vertex_count,
                    });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &list {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges: list,
            adjacency,
            tag: None,
        })
    }

    pub fn with_tag(mut self, tag: FamilySpec) -> Self {
        self.tag = Some(tag);
        self
    }

    pub fn tag(&self) -> Option<&FamilySpec> {
        self.tag.as_ref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.adjacency
            .get(v)
            .map(Vec::len)
            .ok_or(GraphError::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count,
            })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// True iff no edge has both endpoints in `set`.
    ///
    /// Panics if an id is out of range.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.vertex_count];
        for &v in set {
            member[v] = true;
        }
        self.edges.iter().all(|&(u, v)| !(member[u] && member[v]))
    }

    /// Rejects isolated vertices, except for the single-vertex graph.
    pub fn check_no_isolated(&self) -> Result<(), GraphError> {
        if self.vertex_count == 1 {
            return Ok(());
        }
        match self.adjacency.iter().position(Vec::is_empty) {
            Some(v) => Err(GraphError::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    /// A proper 2-colouring, if one exists.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<bool>> = vec![None; self.vertex_count];
        let mut stack = Vec::new();
        for start in 0..self.vertex_count {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            stack.push(start);
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for &w in &self.adjacency[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            stack.push(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (left, right) = (0..self.vertex_count).partition(|&v| side[v] == Some(false));
        Some(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Bipartition {
    /// `(smaller part size, larger part size)`.
    pub fn part_sizes(&self) -> (usize, usize) {
        let (a, b) = (self.left.len(), self.right.len());
        (a.min(b), a.max(b))
    }
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.check()?;
    let graph = match spec {
        FamilySpec::Path(m) => Graph::from_edges(m + 1, (0..*m).map(|i| (i, i + 1)))?,
        FamilySpec::Cycle(n) => Graph::from_edges(*n, (0..*n).map(|i| (i, (i + 1) % n)))?,
        FamilySpec::Complete(n) => {
            let n = *n;
            Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))?
        }
        FamilySpec::CompleteBipartite(r, s) => {
            let (r, s) = (*r, *s);
            Graph::from_edges(r + s, (0..r).flat_map(|i| (0..s).map(move |j| (i, r + j))))?
        }
        FamilySpec::Corona(a, b) => {
            return Ok(corona(&build_family(a)?, &build_family(b)?)?.product);
        }
        FamilySpec::Custom(_) => return Err(GraphError::NotAFamily),
    };
    Ok(graph.with_tag(spec.clone()))
}

/// Where a product vertex lives in a corona.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoronaVertex {
    Base(usize),
    Copy { copy: usize, vertex: usize },
}

/// The corona `base ⊙ copy` together with the id mapping between the
/// operands and the product.
///
/// Product ids: base vertices first (`0..n1`), then copy `i` occupies
/// `n1 + i*n2 .. n1 + (i+1)*n2`. Copy `i` hangs off base vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaLayout {
    pub base: Graph,
    pub copy: Graph,
    pub product: Graph,
}

impl CoronaLayout {
    pub fn base_vertex_of_copy(&self, copy: usize) -> usize {
        copy
    }

    pub fn base_id(&self, v: usize) -> usize {
        v
    }

    pub fn copy_id(&self, copy: usize, vertex: usize) -> usize {
        self.base.vertex_count() + copy * self.copy.vertex_count() + vertex
    }

    pub fn locate(&self, id: usize) -> CoronaVertex {
        let n1 = self.base.vertex_count();
        let n2 = self.copy.vertex_count();
        if id < n1 {
            CoronaVertex::Base(id)
        } else {
            let offset = id - n1;
            CoronaVertex::Copy {
                copy: offset / n2,
                vertex: offset % n2,
            }
        }
    }
}

pub fn corona(base: &Graph, copy: &Graph) -> Result<CoronaLayout, GraphError> {
    let n1 = base.vertex_count();
    let n2 = copy.vertex_count();
    if n1 == 0 || n2 == 0 {
        return Err(GraphError::EmptyOperand);
    }
    let mut edges = Vec::with_capacity(base.edge_count() + n1 * (copy.edge_count() + n2));
    edges.extend_from_slice(base.edges());
    for i in 0..n1 {
        let offset = n1 + i * n2;
        edges.extend(copy.edges().iter().map(|&(u, v)| (offset + u, offset + v)));
        edges.extend((0..n2).map(|u| (i, offset + u)));
    }
    let mut product = Graph::from_edges(n1 * (1 + n2), edges)?;
    if let (Some(a), Some(b)) = (base.tag(), copy.tag()) {
        product = product.with_tag(FamilySpec::corona(a.clone(), b.clone()));
    }
    Ok(CoronaLayout {
        base: base.clone(),
        copy: copy.clone(),
        product,
    })
}
