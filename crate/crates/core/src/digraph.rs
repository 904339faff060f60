//! Small digraphs stored as rows of 64-bit successor masks.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{usage, Error, Result};
use crate::limits::{ISO_CAP, MAX_VERTICES};

pub type Vertex = usize;

/// A set of vertex ids below 64.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: Vertex) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: Vertex) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: Vertex) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn first(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iteration over a [`VertexSet`].
#[derive(Clone, Copy)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = Vertex;

    #[inline]
    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Ord for VertexSet {
    /// Lexicographic order of the sorted member lists.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {bad} out of range"
            )));
        }
        Ok(members.into_iter().collect())
    }
}

/// A loop-free digraph on `0..n`. Digons (opposite arc pairs) are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<VertexSet>,
    inc: Vec<VertexSet>,
}

/// Result of [`Digraph::induced`]: the subdigraph plus `vertices[new] = old`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub digraph: Digraph,
    pub vertices: Vec<Vertex>,
}

impl Induced {
    pub fn to_original(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.vertices[v]).collect()
    }
}

impl Digraph {
    /// The arcless digraph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return usage(format!(
                "vertex count must be in 1..={MAX_VERTICES}, got {n}"
            ));
        }
        Ok(Self::empty_unchecked(n))
    }

    pub(crate) fn empty_unchecked(n: usize) -> Self {
        Digraph {
            out: vec![VertexSet::EMPTY; n],
            inc: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut d = Self::new(n)?;
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_pair(u, v)?;
        self.add_arc_unchecked(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn add_arc_unchecked(&mut self, u: Vertex, v: Vertex) {
        self.out[u].insert(v);
        self.inc[v].insert(u);
    }

    pub fn remove_arc(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_pair(u, v)?;
        self.out[u].remove(v);
        self.inc[v].remove(u);
        Ok(())
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n() {
            return usage(format!("vertex {v} out of range for n = {}", self.n()));
        }
        Ok(())
    }

    fn check_pair(&self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return usage(format!("self-loop at vertex {u}"));
        }
        Ok(())
    }

    pub(crate) fn check_set(&self, set: VertexSet) -> Result<()> {
        if !set.is_subset(self.vertices()) {
            return usage(format!(
                "vertex set {set:?} is not contained in 0..{}",
                self.n()
            ));
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.out.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Vertices dominated by `v`.
    #[inline]
    pub fn out(&self, v: Vertex) -> VertexSet {
        self.out[v]
    }

    /// Vertices dominating `v`.
    #[inline]
    pub fn inc(&self, v: Vertex) -> VertexSet {
        self.inc[v]
    }

    /// Neighbours of `v` in the underlying graph.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.out[v].union(self.inc[v])
    }

    #[inline]
    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.out[u].contains(v)
    }

    #[inline]
    pub(crate) fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).contains(v)
    }

    /// Adjacency in the underlying graph, with argument validation.
    pub fn are_adjacent(&self, u: Vertex, v: Vertex) -> Result<bool> {
        self.check_pair(u, v)?;
        Ok(self.adjacent(u, v))
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n()).flat_map(move |u| self.out[u].iter().map(move |v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|s| s.len()).sum()
    }

    /// Underlying edges `(u, v)` with `u < v`, lexicographic.
    pub fn underlying_edges(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.n())
            .flat_map(|u| {
                self.neighbors(u)
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn digon_count(&self) -> usize {
        (0..self.n())
            .map(|u| {
                self.out[u]
                    .intersection(self.inc[u])
                    .iter()
                    .filter(|&v| v > u)
                    .count()
            })
            .sum()
    }

    pub fn has_digons(&self) -> bool {
        (0..self.n()).any(|u| !self.out[u].intersection(self.inc[u]).is_empty())
    }

    /// Rejects digons, for callers that need an orientation rather than a
    /// super-orientation.
    pub fn validate_orientation(&self) -> Result<()> {
        for u in 0..self.n() {
            if let Some(v) = self.out[u].intersection(self.inc[u]).first() {
                return usage(format!(
                    "digon between {u} and {v}; an orientation was required"
                ));
            }
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        self.out == self.inc
    }

    #[inline]
    pub(crate) fn is_source(&self, v: Vertex) -> bool {
        self.inc[v].is_empty()
    }

    #[inline]
    pub(crate) fn is_sink(&self, v: Vertex) -> bool {
        self.out[v].is_empty()
    }

    /// `(sources, sinks)`. An isolated vertex is both; a digon endpoint is
    /// neither.
    pub fn sources_and_sinks(&self) -> (VertexSet, VertexSet) {
        let mut sources = VertexSet::EMPTY;
        let mut sinks = VertexSet::EMPTY;
        for v in 0..self.n() {
            if self.is_source(v) {
                sources.insert(v);
            }
            if self.is_sink(v) {
                sinks.insert(v);
            }
        }
        (sources, sinks)
    }

    /// The subdigraph induced by `set`, relabelled `0..|set|` in ascending
    /// order of the original ids.
    pub fn induced(&self, set: VertexSet) -> Result<Induced> {
        if set.is_empty() {
            return usage("induced subdigraph of the empty vertex set");
        }
        self.check_set(set)?;
        Ok(self.induced_unchecked(set))
    }

    pub(crate) fn induced_unchecked(&self, set: VertexSet) -> Induced {
        let vertices = set.to_vec();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (new, &old) in vertices.iter().enumerate() {
            pos[old] = new;
        }
        let mut digraph = Digraph::empty_unchecked(vertices.len());
        for (new, &old) in vertices.iter().enumerate() {
            for w in self.out[old].intersection(set) {
                digraph.add_arc_unchecked(new, pos[w]);
            }
        }
        Induced { digraph, vertices }
    }

    /// `D - v`, relabelled like [`Digraph::induced`].
    pub fn delete_vertex(&self, v: Vertex) -> Result<Induced> {
        self.check_vertex(v)?;
        self.induced(self.vertices().without(v))
    }

    /// Every arc reversed.
    pub fn converse(&self) -> Digraph {
        Digraph {
            out: self.inc.clone(),
            inc: self.out.clone(),
        }
    }

    /// Relabel by `perm[old] = new`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Digraph> {
        if !is_permutation(perm, self.n()) {
            return usage("relabelling is not a permutation of the vertex set");
        }
        let mut d = Digraph::empty_unchecked(self.n());
        for (u, v) in self.arcs() {
            d.add_arc_unchecked(perm[u], perm[v]);
        }
        Ok(d)
    }

    /// True iff no two members of `set` are adjacent.
    pub fn is_stable(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| self.neighbors(v).intersection(set).is_empty())
    }

    /// α(D), by branch and bound.
    pub fn alpha(&self) -> usize {
        fn grow(d: &Digraph, cand: VertexSet, size: usize, best: &mut usize) {
            if size + cand.len() <= *best {
                return;
            }
            let Some(v) = cand.first() else {
                *best = size;
                return;
            };
            grow(
                d,
                cand.difference(d.neighbors(v)).without(v),
                size + 1,
                best,
            );
            grow(d, cand.without(v), size, best);
        }
        let mut best = 0;
        grow(self, self.vertices(), 0, &mut best);
        best
    }

    /// Every maximum stable set, once, in lexicographic order of the sorted
    /// member lists.
    pub fn max_stable_sets(&self) -> Vec<VertexSet> {
        fn extend(
            d: &Digraph,
            current: VertexSet,
            cand: VertexSet,
            need: usize,
            acc: &mut Vec<VertexSet>,
        ) {
            if need == 0 {
                acc.push(current);
                return;
            }
            let mut rest = cand;
            while let Some(v) = rest.first() {
                if rest.len() < need {
                    return;
                }
                rest.remove(v);
                let next = rest.difference(d.neighbors(v));
                extend(d, current.with(v), next, need - 1, acc);
            }
        }
        let alpha = self.alpha();
        let mut acc = Vec::new();
        extend(self, VertexSet::EMPTY, self.vertices(), alpha, &mut acc);
        acc
    }

    /// Whether `set` is a stable set of maximum cardinality.
    pub fn is_max_stable(&self, set: VertexSet) -> bool {
        set.is_subset(self.vertices()) && self.is_stable(set) && set.len() == self.alpha()
    }

    /// An isomorphism `f` onto `other` (`f[u]` is the image of `u`), the
    /// lexicographically least one when several exist.
    pub fn isomorphic(&self, other: &Digraph) -> Result<Option<Vec<Vertex>>> {
        let n = self.n();
        if n > ISO_CAP || other.n() > ISO_CAP {
            return Err(Error::Capability(format!(
                "generic isomorphism is limited to {ISO_CAP} vertices"
            )));
        }
        if n != other.n() || self.arc_count() != other.arc_count() {
            return Ok(None);
        }
        let profile = |d: &Digraph, v: Vertex| {
            (
                d.out[v].len(),
                d.inc[v].len(),
                d.out[v].intersection(d.inc[v]).len(),
            )
        };
        let mut left: Vec<_> = (0..n).map(|v| profile(self, v)).collect();
        let right: Vec<_> = (0..n).map(|v| profile(other, v)).collect();
        let left_profiles = left.clone();
        let mut sorted_right = right.clone();
        left.sort_unstable();
        sorted_right.sort_unstable();
        if left != sorted_right {
            return Ok(None);
        }

        struct Search<'a> {
            a: &'a Digraph,
            b: &'a Digraph,
            pa: &'a [(usize, usize, usize)],
            pb: &'a [(usize, usize, usize)],
            map: Vec<Vertex>,
        }
        impl Search<'_> {
            fn assign(&mut self, u: Vertex, used: VertexSet) -> bool {
                let n = self.a.n();
                if u == n {
                    return true;
                }
                let assigned = VertexSet::full(u);
                let image_of = |s: VertexSet, map: &[Vertex]| -> VertexSet {
                    s.iter().map(|w| map[w]).collect()
                };
                let out_img = image_of(self.a.out[u].intersection(assigned), &self.map);
                let in_img = image_of(self.a.inc[u].intersection(assigned), &self.map);
                for x in VertexSet::full(n).difference(used) {
                    if self.pa[u] != self.pb[x]
                        || self.b.out[x].intersection(used) != out_img
                        || self.b.inc[x].intersection(used) != in_img
                    {
                        continue;
                    }
                    self.map[u] = x;
                    if self.assign(u + 1, used.with(x)) {
                        return true;
                    }
                }
                false
            }
        }
        let mut search = Search {
            a: self,
            b: other,
            pa: &left_profiles,
            pb: &right,
            map: vec![0; n],
        };
        Ok(search.assign(0, VertexSet::EMPTY).then_some(search.map))
    }

    /// Checks that `map` carries the arc set of `self` exactly onto `other`.
    pub fn transports_onto(&self, other: &Digraph, map: &[Vertex]) -> bool {
        if self.n() != other.n() || !is_permutation(map, self.n()) {
            return false;
        }
        (0..self.n()).all(|u| {
            let img: VertexSet = self.out[u].iter().map(|v| map[v]).collect();
            img == other.out[map[u]]
        })
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n())
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

pub(crate) fn is_permutation(perm: &[Vertex], n: usize) -> bool {
    perm.len() == n
        && perm.iter().all(|&v| v < n)
        && perm.iter().copied().collect::<VertexSet>() == VertexSet::full(n)
}
