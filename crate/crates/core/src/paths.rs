//! Directed paths, path partitions and the exact searches over them.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, Vertex, VertexSet};
use crate::error::{usage, Error, Result};
use crate::limits::check_desk_cap;

/// A sequence of distinct vertices, each dominating its successor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiPath(Vec<Vertex>);

impl DiPath {
    pub fn new(d: &Digraph, seq: Vec<Vertex>) -> Result<Self> {
        if seq.is_empty() {
            return usage("a path has at least one vertex");
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &seq {
            if v >= d.n() {
                return usage(format!("vertex {v} out of range"));
            }
            if seen.contains(v) {
                return usage(format!("vertex {v} repeated in path"));
            }
            seen.insert(v);
        }
        if let Some(w) = seq.windows(2).find(|w| !d.has_arc(w[0], w[1])) {
            return usage(format!("{} does not dominate {}", w[0], w[1]));
        }
        Ok(DiPath(seq))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn last(&self) -> Vertex {
        self.0[self.0.len() - 1]
    }

    /// Order of the path (vertex count).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    /// The same vertices traversed backwards: a path of the converse digraph.
    pub fn reversed(&self) -> DiPath {
        DiPath(self.0.iter().rev().copied().collect())
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

/// Vertex-disjoint paths covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathPartition {
    paths: Vec<DiPath>,
}

impl PathPartition {
    pub fn new(d: &Digraph, paths: Vec<Vec<Vertex>>) -> Result<Self> {
        let paths = paths
            .into_iter()
            .map(|p| DiPath::new(d, p))
            .collect::<Result<Vec<_>>>()?;
        let mut covered = VertexSet::EMPTY;
        for p in &paths {
            let vs = p.vertex_set();
            if !covered.intersection(vs).is_empty() {
                return usage("paths of a partition must be vertex-disjoint");
            }
            covered = covered.union(vs);
        }
        if covered != d.vertices() {
            return usage(format!(
                "paths miss vertices {:?}",
                d.vertices().difference(covered)
            ));
        }
        Ok(PathPartition { paths })
    }

    pub fn paths(&self) -> &[DiPath] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Every path meets `stable` in exactly one vertex.
    pub fn is_orthogonal_to(&self, stable: VertexSet) -> bool {
        self.paths
            .iter()
            .all(|p| p.vertex_set().intersection(stable).len() == 1)
    }

    /// Orthogonal, and each path begins or ends at its `stable` vertex.
    pub fn is_be_orthogonal_to(&self, stable: VertexSet) -> bool {
        self.is_orthogonal_to(stable)
            && self
                .paths
                .iter()
                .all(|p| stable.contains(p.first()) || stable.contains(p.last()))
    }

    /// Reverses every path: a partition of the converse digraph.
    pub fn reversed(&self) -> PathPartition {
        PathPartition {
            paths: self.paths.iter().map(DiPath::reversed).collect(),
        }
    }

    /// Re-checks every invariant against `d`.
    pub fn is_valid_for(&self, d: &Digraph) -> bool {
        PathPartition::new(d, self.to_vecs()).is_ok()
    }

    pub fn to_vecs(&self) -> Vec<Vec<Vertex>> {
        self.paths.iter().map(|p| p.0.clone()).collect()
    }

    pub(crate) fn from_paths_unchecked(paths: Vec<DiPath>) -> Self {
        PathPartition { paths }
    }

    pub(crate) fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> PathPartition {
        PathPartition {
            paths: self
                .paths
                .iter()
                .map(|p| DiPath(p.0.iter().map(|&v| f(v)).collect()))
                .collect(),
        }
    }
}

/// A path partition together with a stable set it is orthogonal to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthogonalityWitness {
    pub partition: PathPartition,
    pub stable: VertexSet,
}

impl OrthogonalityWitness {
    pub fn verify(&self, d: &Digraph) -> bool {
        self.partition.is_valid_for(d)
            && d.is_stable(self.stable)
            && self.partition.is_orthogonal_to(self.stable)
    }
}

/// `table[mask]` has bit `v` set iff `D[mask]` has a Hamiltonian path ending
/// at `v`.
struct TraceTable {
    reach: Vec<u64>,
}

impl TraceTable {
    fn build(d: &Digraph) -> Self {
        let n = d.n();
        let mut reach = vec![0u64; 1usize << n];
        for v in 0..n {
            reach[1 << v] = 1 << v;
        }
        for mask in 1..reach.len() {
            let ends = reach[mask];
            if ends == 0 {
                continue;
            }
            for v in VertexSet::from_bits(ends) {
                for w in d.out(v).iter().filter(|&w| mask >> w & 1 == 0) {
                    reach[mask | 1 << w] |= 1 << w;
                }
            }
        }
        TraceTable { reach }
    }

    #[inline]
    fn traceable(&self, mask: usize) -> bool {
        self.reach[mask] != 0
    }

    /// A Hamiltonian path of `D[mask]`, ending at its least possible end and
    /// walking back through least predecessors.
    fn path(&self, d: &Digraph, mask: usize) -> Vec<Vertex> {
        let mut seq = Vec::with_capacity(mask.count_ones() as usize);
        let mut rest = mask;
        let mut end = VertexSet::from_bits(self.reach[rest]).first().unwrap();
        loop {
            seq.push(end);
            rest &= !(1 << end);
            if rest == 0 {
                break;
            }
            let preds = VertexSet::from_bits(self.reach[rest]).intersection(d.inc(end));
            end = preds.first().expect("trace table is consistent");
        }
        seq.reverse();
        seq
    }
}

/// λ(D): the largest order of a directed path.
pub fn longest_path_order(d: &Digraph) -> Result<usize> {
    check_desk_cap(d.n(), "longest path")?;
    let table = TraceTable::build(d);
    Ok(table
        .reach
        .iter()
        .enumerate()
        .filter(|(_, &ends)| ends != 0)
        .map(|(mask, _)| mask.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// A minimum path partition, π(D) paths.
pub fn min_path_partition(d: &Digraph) -> Result<PathPartition> {
    check_desk_cap(d.n(), "minimum path partition")?;
    let n = d.n();
    let table = TraceTable::build(d);
    let full = (1usize << n) - 1;
    // best[mask] = fewest traceable blocks covering mask
    let mut best = vec![u8::MAX; 1 << n];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            let block = sub | low;
            if table.traceable(block) {
                let cand = best[mask ^ block].saturating_add(1);
                if cand < best[mask] {
                    best[mask] = cand;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let mut paths = Vec::with_capacity(best[full] as usize);
    let mut mask = full;
    while mask != 0 {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        let block = loop {
            let block = sub | low;
            if table.traceable(block) && best[mask ^ block] + 1 == best[mask] {
                break block;
            }
            sub = (sub - 1) & rest;
        };
        paths.push(DiPath(table.path(d, block)));
        mask ^= block;
    }
    Ok(PathPartition { paths })
}

/// A stable set meeting every path of the minimum partition `partition`
/// exactly once. Its existence is the Gallai–Milgram theorem, so failing to
/// find one is reported as an integrity error.
pub fn gm_witness(d: &Digraph, partition: &PathPartition) -> Result<VertexSet> {
    if !partition.is_valid_for(d) {
        return usage("not a path partition of this digraph");
    }
    if d.n() <= crate::limits::desk_cap() {
        let pi = min_path_partition(d)?.len();
        if partition.len() != pi {
            return usage(format!(
                "partition has {} paths but π(D) = {pi}; a minimum partition is required",
                partition.len()
            ));
        }
    }
    fn pick(
        d: &Digraph,
        paths: &[DiPath],
        i: usize,
        chosen: VertexSet,
        blocked: VertexSet,
    ) -> Option<VertexSet> {
        let Some(p) = paths.get(i) else {
            return Some(chosen);
        };
        for &v in p.vertices().iter().filter(|&&v| !blocked.contains(v)) {
            let next = blocked.union(d.neighbors(v));
            if let Some(s) = pick(d, paths, i + 1, chosen.with(v), next) {
                return Some(s);
            }
        }
        None
    }
    let mut order: Vec<DiPath> = partition.paths().to_vec();
    for p in &mut order {
        let mut vs = p.0.clone();
        vs.sort_unstable();
        *p = DiPath(vs);
    }
    pick(d, &order, 0, VertexSet::EMPTY, VertexSet::EMPTY).ok_or_else(|| {
        Error::Integrity("no stable set is orthogonal to a minimum path partition".into())
    })
}

/// Exhaustive search for a path partition orthogonal to `stable`.
pub fn orthogonal_partition(d: &Digraph, stable: VertexSet) -> Result<Option<PathPartition>> {
    search_orthogonal(d, stable, false)
}

/// As [`orthogonal_partition`], with every path starting or ending at its
/// vertex of `stable`.
pub fn orthogonal_be_partition(d: &Digraph, stable: VertexSet) -> Result<Option<PathPartition>> {
    search_orthogonal(d, stable, true)
}

fn search_orthogonal(d: &Digraph, stable: VertexSet, be: bool) -> Result<Option<PathPartition>> {
    d.check_set(stable)?;
    if !d.is_stable(stable) {
        return usage(format!("{stable:?} is not a stable set"));
    }
    check_desk_cap(d.n(), "orthogonal path partition")?;
    if stable.is_empty() {
        return Ok(None);
    }
    let mut search = OrthoSearch {
        d,
        seeds: stable.to_vec(),
        stable,
        full: d.vertices(),
        be,
        fronts: vec![Vec::new(); stable.len()],
        backs: vec![Vec::new(); stable.len()],
        dead: HashSet::new(),
    };
    if !search.open(0, stable) {
        return Ok(None);
    }
    let paths = search
        .fronts
        .iter()
        .zip(&search.backs)
        .zip(&search.seeds)
        .map(|((front, back), &s)| {
            let mut seq: Vec<Vertex> = front.iter().rev().copied().collect();
            seq.push(s);
            seq.extend_from_slice(back);
            DiPath(seq)
        })
        .collect();
    Ok(Some(PathPartition { paths }))
}

/// Grows one path per stable vertex, in ascending order of the stable
/// vertices. Each path first extends forward from its seed, then backward,
/// then closes; this reaches every partition exactly once. Failed states at
/// path boundaries depend only on the covered set and are memoised.
struct OrthoSearch<'a> {
    d: &'a Digraph,
    seeds: Vec<Vertex>,
    stable: VertexSet,
    full: VertexSet,
    be: bool,
    // vertices before the seed, nearest first
    fronts: Vec<Vec<Vertex>>,
    // vertices after the seed
    backs: Vec<Vec<Vertex>>,
    dead: HashSet<(usize, u64)>,
}

impl OrthoSearch<'_> {
    fn open(&mut self, i: usize, used: VertexSet) -> bool {
        if i == self.seeds.len() {
            return used == self.full;
        }
        if self.dead.contains(&(i, used.bits())) {
            return false;
        }
        let s = self.seeds[i];
        let found = if self.be {
            self.grow_back(i, s, used, true) || self.grow_front(i, s, used, false)
        } else {
            self.grow_back(i, s, used, false)
        };
        if !found {
            self.dead.insert((i, used.bits()));
        }
        found
    }

    /// Forward extension. In BE mode the path may not extend backward
    /// afterwards (`close_after`).
    fn grow_back(&mut self, i: usize, tail: Vertex, used: VertexSet, close_after: bool) -> bool {
        let free = self.full.difference(used).difference(self.stable);
        for w in self.d.out(tail).intersection(free) {
            self.backs[i].push(w);
            if self.grow_back(i, w, used.with(w), close_after) {
                return true;
            }
            self.backs[i].pop();
        }
        if close_after {
            self.open(i + 1, used)
        } else {
            self.grow_front(i, self.seeds[i], used, true)
        }
    }

    /// Backward extension. `may_close` is false for the BE variant that ends
    /// at its seed until at least one vertex has been added, since the bare
    /// seed was already tried.
    fn grow_front(&mut self, i: usize, head: Vertex, used: VertexSet, may_close: bool) -> bool {
        let free = self.full.difference(used).difference(self.stable);
        for w in self.d.inc(head).intersection(free) {
            self.fronts[i].push(w);
            if self.grow_front(i, w, used.with(w), true) {
                return true;
            }
            self.fronts[i].pop();
        }
        may_close && self.open(i + 1, used)
    }
}

/// Inserts `v` into `path`, which must consist of neighbours of `v` only.
pub fn join_path(d: &Digraph, path: &DiPath, v: Vertex) -> Result<DiPath> {
    if v >= d.n() {
        return usage(format!("vertex {v} out of range"));
    }
    let seq = path.vertices();
    if seq.contains(&v) {
        return usage(format!("vertex {v} already lies on the path"));
    }
    if let Some(&u) = seq.iter().find(|&&u| !d.adjacent(u, v)) {
        return usage(format!("{v} is not adjacent to path vertex {u}"));
    }
    let mut out = Vec::with_capacity(seq.len() + 1);
    if d.has_arc(v, seq[0]) {
        out.push(v);
        out.extend_from_slice(seq);
    } else {
        // seq[0] -> v, so some index dominates v
        let i = seq.iter().rposition(|&u| d.has_arc(u, v)).unwrap();
        out.extend_from_slice(&seq[..=i]);
        out.push(v);
        out.extend_from_slice(&seq[i + 1..]);
    }
    DiPath::new(d, out).map_err(|e| Error::Integrity(format!("join_path produced a non-path: {e}")))
}

/// The necessary condition for α-diperfection on a maximum stable set:
/// for every pair `u != v` of `stable`, `λ(D-u)` or `λ(D-v)` is at least
/// `⌈n/α(D)⌉`.
pub fn lemma1_condition(d: &Digraph, stable: VertexSet) -> Result<bool> {
    d.check_set(stable)?;
    if stable.len() < 2 {
        return usage("the condition needs a maximum stable set of size at least 2");
    }
    if !d.is_max_stable(stable) {
        return usage(format!("{stable:?} is not a maximum stable set"));
    }
    let alpha = stable.len();
    let threshold = d.n().div_ceil(alpha);
    let mut short = 0;
    for v in stable {
        let sub = d.delete_vertex(v)?;
        if longest_path_order(&sub.digraph)? < threshold {
            short += 1;
            if short == 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
