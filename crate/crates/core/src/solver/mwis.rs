//! Exact maximum-weight independent set by branch and bound.
//!
//! Each search node works on a candidate set of still-undecided vertices.
//! Vertices with no undecided neighbour are taken outright; if the rest
//! falls apart into several connected components they are solved one after
//! another; otherwise the node branches on the undecided vertex of highest
//! residual degree (lowest id on ties), trying "take it" before "drop it".
//! A node is pruned when the total weight of its candidates cannot beat the
//! best value already known for it.

use std::time::Instant;

/// Fixed-capacity vertex bitset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    /// An empty set with the same capacity as `self`.
    pub fn cleared(&self) -> Self {
        VertexSet {
            words: vec![0; self.words.len()],
        }
    }

    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .position(|&w| w != 0)
            .map(|i| i * 64 + self.words[i].trailing_zeros() as usize)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> u32 {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i * 64 + t)
            })
        })
    }
}

/// Search limits. Hitting either one ends the search early; the answer is
/// still a valid independent set but is flagged as not proven optimal.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Limits {
    pub node_limit: Option<u64>,
    pub deadline: Option<Instant>,
}

#[derive(Debug, Clone)]
pub(crate) struct MwisOutcome {
    pub weight: i64,
    pub set: Vec<usize>,
    pub explored: u64,
    pub optimal: bool,
}

struct Search<'a> {
    adjacency: Vec<VertexSet>,
    weights: &'a [i64],
    limits: Limits,
    explored: u64,
    exhausted: bool,
}

/// Maximum-weight independent set of the graph given by `neighbors`, with
/// `weights[v]` per vertex. Vertices of non-positive weight are never taken.
pub(crate) fn solve(neighbors: &[&[usize]], weights: &[i64], limits: Limits) -> MwisOutcome {
    let n = neighbors.len();
    let adjacency = neighbors
        .iter()
        .map(|nbrs| {
            let mut s = VertexSet::empty(n);
            nbrs.iter().for_each(|&w| s.insert(w));
            s
        })
        .collect();
    let mut cand = VertexSet::empty(n);
    (0..n)
        .filter(|&v| weights[v] > 0)
        .for_each(|v| cand.insert(v));
    let mut search = Search {
        adjacency,
        weights,
        limits,
        explored: 0,
        exhausted: false,
    };
    let (weight, set) = search
        .run(&cand, -1)
        .expect("a floor of -1 is always beaten");
    MwisOutcome {
        weight,
        set: set.iter().collect(),
        explored: search.explored,
        optimal: !search.exhausted,
    }
}

impl Search<'_> {
    fn weight_of(&self, set: &VertexSet) -> i64 {
        set.iter().map(|v| self.weights[v]).sum()
    }

    fn out_of_budget(&mut self) -> bool {
        if self.exhausted {
            return true;
        }
        if let Some(limit) = self.limits.node_limit {
            if self.explored > limit {
                self.exhausted = true;
            }
        }
        if let Some(deadline) = self.limits.deadline {
            if self.explored % 256 == 1 && Instant::now() >= deadline {
                self.exhausted = true;
            }
        }
        self.exhausted
    }

    /// Best independent subset of `cand` whose weight exceeds `floor`, or
    /// `None` if there is none. After the budget runs out this returns a
    /// greedy set instead and the contract no longer holds.
    fn run(&mut self, cand: &VertexSet, floor: i64) -> Option<(i64, VertexSet)> {
        self.explored += 1;
        if self.out_of_budget() {
            return Some(self.greedy(cand));
        }
        if self.weight_of(cand) <= floor {
            return None;
        }

        let mut forced = cand.cleared();
        let mut rest = cand.clone();
        for v in cand.iter() {
            if self.adjacency[v].intersection_len(cand) == 0 {
                forced.insert(v);
                rest.remove(v);
            }
        }
        let forced_weight = self.weight_of(&forced);
        if rest.is_empty() {
            return Some((forced_weight, forced));
        }

        let components = self.components(&rest);
        if components.len() > 1 {
            let mut remaining: i64 = components.iter().map(|c| self.weight_of(c)).sum();
            let mut total = forced_weight;
            let mut chosen = forced;
            for comp in &components {
                remaining -= self.weight_of(comp);
                let comp_floor = (floor - total - remaining).max(-1);
                let (w, s) = self.run(comp, comp_floor)?;
                total += w;
                chosen.union_with(&s);
            }
            return Some((total, chosen));
        }

        let pivot = rest
            .iter()
            .max_by_key(|&v| {
                (
                    self.adjacency[v].intersection_len(&rest),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        let mut local_floor = floor - forced_weight;
        let mut best: Option<(i64, VertexSet)> = None;

        let mut with_pivot = rest.clone();
        with_pivot.difference_with(&self.adjacency[pivot]);
        with_pivot.remove(pivot);
        let pivot_weight = self.weights[pivot];
        if let Some((w, mut s)) = self.run(&with_pivot, local_floor - pivot_weight) {
            s.insert(pivot);
            local_floor = local_floor.max(w + pivot_weight);
            best = Some((w + pivot_weight, s));
        }

        let mut without_pivot = rest;
        without_pivot.remove(pivot);
        if let Some((w, s)) = self.run(&without_pivot, local_floor) {
            if best.as_ref().is_none_or(|(b, _)| w > *b) {
                best = Some((w, s));
            }
        }

        best.map(|(w, mut s)| {
            s.union_with(&forced);
            (w + forced_weight, s)
        })
    }

    fn components(&self, set: &VertexSet) -> Vec<VertexSet> {
        let mut unseen = set.clone();
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let mut comp = set.cleared();
            let mut stack = vec![start];
            unseen.remove(start);
            comp.insert(start);
            while let Some(u) = stack.pop() {
                let next: Vec<usize> = self.adjacency[u]
                    .iter()
                    .filter(|&w| unseen.contains(w))
                    .collect();
                for w in next {
                    unseen.remove(w);
                    comp.insert(w);
                    stack.push(w);
                }
            }
            out.push(comp);
        }
        out
    }

    fn greedy(&self, cand: &VertexSet) -> (i64, VertexSet) {
        let mut order: Vec<usize> = cand.iter().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.weights[v]), v));
        let mut chosen = cand.cleared();
        let mut blocked = chosen.clone();
        let mut weight = 0;
        for v in order {
            if !blocked.contains(v) {
                chosen.insert(v);
                blocked.union_with(&self.adjacency[v]);
                weight += self.weights[v];
            }
        }
        (weight, chosen)
    }
}
