//! Recognition of anti-directed and blocking odd cycles, of `D⃗_{2k+1}`, and
//! of perfect underlying graphs by their forbidden induced subgraphs.

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, Vertex, VertexSet};
use crate::error::Result;
use crate::generators::LabeledCoc;
use crate::limits::{check_desk_cap, ISO_CAP, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternKind {
    AntiDirected,
    Blocking,
    Dvec,
}

impl PatternKind {
    fn min_order(self) -> usize {
        match self {
            PatternKind::Blocking => 3,
            PatternKind::AntiDirected | PatternKind::Dvec => 5,
        }
    }
}

impl std::str::FromStr for PatternKind {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "anti-directed" => Ok(PatternKind::AntiDirected),
            "blocking" => Ok(PatternKind::Blocking),
            "dvec" => Ok(PatternKind::Dvec),
            other => crate::error::usage(format!(
                "unknown pattern {other:?} (expected anti-directed, blocking or dvec)"
            )),
        }
    }
}

/// An induced copy of a forbidden pattern.
///
/// For the cycle kinds `cycle_order[i]` is the vertex labelled `y_i`; for
/// [`PatternKind::Dvec`] it is the vertex playing `x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternHit {
    pub kind: PatternKind,
    pub vertices: VertexSet,
    pub cycle_order: Vec<Vertex>,
    /// Set when the induced copy carries a digon; such hits deserve a manual
    /// look since the pattern definitions are phrased for super-orientations.
    pub has_digons: bool,
}

impl PatternHit {
    /// Re-checks the hit against `d` under the reported labelling.
    pub fn verify(&self, d: &Digraph) -> bool {
        let order = &self.cycle_order;
        let m = order.len();
        if m < self.kind.min_order()
            || m.is_multiple_of(2)
            || order.iter().any(|&v| v >= d.n())
            || order.iter().copied().collect::<VertexSet>() != self.vertices
            || self.vertices.len() != m
        {
            return false;
        }
        let w = self.vertices;
        match self.kind {
            PatternKind::AntiDirected | PatternKind::Blocking => {
                if !is_cycle_order_in(d, w, order) {
                    return false;
                }
                let constrained: &[usize] = if self.kind == PatternKind::Blocking {
                    &[0, 1]
                } else {
                    &anti_directed_indices(m)
                };
                constrained.iter().all(|&i| is_pole_in(d, w, order[i]))
            }
            PatternKind::Dvec => (0..m).all(|i| {
                (0..m).filter(|&j| j != i).all(|j| {
                    let gap = (j + m - i) % m;
                    let expected = j > i && gap != 1 && gap != m - 1;
                    d.has_arc(order[i], order[j]) == expected
                })
            }),
        }
    }
}

/// Source or sink of `D[w]`.
#[inline]
fn is_pole_in(d: &Digraph, w: VertexSet, v: Vertex) -> bool {
    d.inc(v).intersection(w).is_empty() || d.out(v).intersection(w).is_empty()
}

fn is_cycle_order_in(d: &Digraph, w: VertexSet, order: &[Vertex]) -> bool {
    let m = order.len();
    m >= 3
        && (0..m).all(|i| {
            let v = order[i];
            let expected = VertexSet::singleton(order[(i + 1) % m]).with(order[(i + m - 1) % m]);
            d.neighbors(v).intersection(w) == expected
        })
}

/// `{0, 1, 2, 3, 5, 7, .., m-2}` for a cycle of odd order `m = 2k+1 >= 5`.
fn anti_directed_indices(m: usize) -> Vec<usize> {
    let mut idx = vec![0, 1, 2, 3];
    idx.extend((5..m - 1).step_by(2));
    idx
}

/// The cyclic order of `D[w]` when its underlying graph is a single cycle,
/// starting at the least vertex and continuing to its lesser neighbour.
fn cycle_order_in(d: &Digraph, w: VertexSet) -> Option<Vec<Vertex>> {
    let m = w.len();
    if m < 3 || w.iter().any(|v| d.neighbors(v).intersection(w).len() != 2) {
        return None;
    }
    let start = w.first()?;
    let mut order = Vec::with_capacity(m);
    order.push(start);
    let mut prev = start;
    let mut cur = d.neighbors(start).intersection(w).first()?;
    while cur != start {
        order.push(cur);
        let next = d.neighbors(cur).intersection(w).without(prev).first()?;
        prev = cur;
        cur = next;
    }
    (order.len() == m).then_some(order)
}

/// Labellings `y_i = order[(r ± i) mod m]`, rotations first, then reflections.
fn dihedral_labelings(order: &[Vertex]) -> impl Iterator<Item = Vec<Vertex>> + '_ {
    let m = order.len();
    [false, true].into_iter().flat_map(move |reflect| {
        (0..m).map(move |r| {
            (0..m)
                .map(|i| {
                    let idx = if reflect {
                        (r + m - i) % m
                    } else {
                        (r + i) % m
                    };
                    order[idx]
                })
                .collect()
        })
    })
}

fn anti_directed_labeling_in(d: &Digraph, w: VertexSet) -> Option<Vec<Vertex>> {
    let m = w.len();
    if m < 5 || m.is_multiple_of(2) {
        return None;
    }
    let order = cycle_order_in(d, w)?;
    let constrained = anti_directed_indices(m);
    let found =
        dihedral_labelings(&order).find(|y| constrained.iter().all(|&i| is_pole_in(d, w, y[i])));
    found
}

fn blocking_labeling_in(d: &Digraph, w: VertexSet) -> Option<Vec<Vertex>> {
    let m = w.len();
    if m < 3 || m.is_multiple_of(2) {
        return None;
    }
    let order = cycle_order_in(d, w)?;
    let found =
        dihedral_labelings(&order).find(|y| is_pole_in(d, w, y[0]) && is_pole_in(d, w, y[1]));
    found
}

/// Whether `d` itself is an anti-directed odd cycle: its underlying graph is
/// a cycle of odd order `2k+1 >= 5` labelled so that each of
/// `y_0, y_1, y_2, y_3, y_5, .., y_{2k-1}` is a source or a sink.
pub fn is_anti_directed(d: &Digraph) -> bool {
    anti_directed_labeling_in(d, d.vertices()).is_some()
}

/// The labelling `y_0..y_2k` witnessing [`is_anti_directed`].
pub fn anti_directed_labeling(d: &Digraph) -> Option<Vec<Vertex>> {
    anti_directed_labeling_in(d, d.vertices())
}

/// Whether `d` is a blocking odd cycle: an odd cycle (order >= 3) with two
/// consecutive vertices each a source or a sink.
pub fn is_blocking(d: &Digraph) -> bool {
    blocking_labeling_in(d, d.vertices()).is_some()
}

pub fn blocking_labeling(d: &Digraph) -> Option<Vec<Vertex>> {
    blocking_labeling_in(d, d.vertices())
}

/// Out-set of `x_j` in `D⃗_n`.
#[inline]
fn dvec_out(n: usize, j: usize) -> VertexSet {
    let above = if j + 2 >= MAX_VERTICES {
        0
    } else {
        VertexSet::full(n).bits() & !((1u64 << (j + 2)) - 1)
    };
    let mut s = VertexSet::from_bits(above);
    if j == 0 {
        s.remove(n - 1);
    }
    s
}

/// An isomorphism from `d` onto `gen_dvec(k)` found among the `2(2k+1)`
/// dihedral relabellings of the `x` labelling (`map[u]` is the image of `u`).
pub fn dvec_dihedral_iso(d: &LabeledCoc) -> Option<Vec<Vertex>> {
    let g = d.digraph();
    let n = d.n();
    // Rotations first, then reflections; the image of `v` is `v - r` or
    // `r - v` (mod n).
    for reflect in [false, true] {
        for r in 0..n {
            let image = |v: Vertex| {
                if reflect {
                    (r + n - v) % n
                } else {
                    (v + n - r) % n
                }
            };
            let fits = (0..n).all(|u| {
                let img: VertexSet = g.out(u).iter().map(image).collect();
                img == dvec_out(n, image(u))
            });
            if fits {
                return Some((0..n).map(image).collect());
            }
        }
    }
    None
}

/// Label-respecting recognition of `D⃗_{2k+1}`: the identity map when no
/// arc of `d` points from a higher to a lower `x`-index (as in
/// `gen_dvec(k)`), the reflection `x_i ↦ x_{2k-i}` when `d` is the converse
/// of such a digraph, and `None` otherwise. Both maps fix `{x_0, x_2k}`;
/// this is the sense in which an instance "is" `D⃗_{2k+1}` when deciding
/// whether `{x_0, x_2k}` has an orthogonal partition.
pub fn labeled_dvec_iso(d: &LabeledCoc) -> Option<Vec<Vertex>> {
    let g = d.digraph();
    let n = d.n();
    if (0..n).all(|u| g.out(u) == dvec_out(n, u)) {
        return Some((0..n).collect());
    }
    let mirror = |v: Vertex| n - 1 - v;
    let reflected = (0..n).all(|u| {
        let img: VertexSet = g.out(u).iter().map(mirror).collect();
        img == dvec_out(n, mirror(u))
    });
    reflected.then(|| (0..n).map(mirror).collect())
}

/// Isomorphism onto `gen_dvec(k)`, if any. The dihedral search is complete
/// (every automorphism of the underlying graph is dihedral); for `n <= 12` a
/// miss is cross-checked with the generic backtracking test.
pub fn is_iso_to_dvec(d: &LabeledCoc) -> Option<Vec<Vertex>> {
    if let Some(map) = dvec_dihedral_iso(d) {
        return Some(map);
    }
    if d.n() <= ISO_CAP {
        let target = crate::generators::gen_dvec(d.k()).expect("valid k");
        return d
            .digraph()
            .isomorphic(target.digraph())
            .expect("within the isomorphism cap");
    }
    None
}

/// Lexicographic enumeration of `size`-subsets of `0..n`, abandoning any
/// prefix rejected by `prefix_ok`.
fn find_subset<T>(
    n: usize,
    size: usize,
    prefix_ok: &dyn Fn(VertexSet, Vertex) -> bool,
    visit: &mut dyn FnMut(VertexSet) -> Option<T>,
) -> Option<T> {
    fn rec<T>(
        n: usize,
        start: usize,
        need: usize,
        chosen: VertexSet,
        prefix_ok: &dyn Fn(VertexSet, Vertex) -> bool,
        visit: &mut dyn FnMut(VertexSet) -> Option<T>,
    ) -> Option<T> {
        if need == 0 {
            return visit(chosen);
        }
        for v in start..=n - need {
            let next = chosen.with(v);
            if !prefix_ok(next, v) {
                continue;
            }
            if let Some(t) = rec(n, v + 1, need - 1, next, prefix_ok, visit) {
                return Some(t);
            }
        }
        None
    }
    if size > n {
        return None;
    }
    rec(n, 0, size, VertexSet::EMPTY, prefix_ok, visit)
}

/// After adding `v` to `chosen`, no member has more than two neighbours.
fn cycle_prefix(d: &Digraph) -> impl Fn(VertexSet, Vertex) -> bool + '_ {
    move |chosen, v| {
        d.neighbors(v).intersection(chosen).len() <= 2
            && d.neighbors(v)
                .intersection(chosen)
                .iter()
                .all(|u| d.neighbors(u).intersection(chosen).len() <= 2)
    }
}

/// After adding `v` to `chosen`, no member has more than two non-neighbours.
fn anticycle_prefix(d: &Digraph) -> impl Fn(VertexSet, Vertex) -> bool + '_ {
    move |chosen, _v| {
        chosen
            .iter()
            .all(|u| chosen.difference(d.neighbors(u)).len() <= 3)
    }
}

/// The least induced copy of `kind`, searching orders `3` (or `5`), `5`,
/// `7`, .. and subsets lexicographically within each order.
pub fn find_induced_pattern(d: &Digraph, kind: PatternKind) -> Result<Option<PatternHit>> {
    check_desk_cap(d.n(), "induced pattern search")?;
    let n = d.n();
    for size in (kind.min_order()..=n).step_by(2) {
        let hit = match kind {
            PatternKind::AntiDirected | PatternKind::Blocking => {
                let prefix = cycle_prefix(d);
                find_subset(n, size, &prefix, &mut |w| {
                    let order = if kind == PatternKind::Blocking {
                        blocking_labeling_in(d, w)
                    } else {
                        anti_directed_labeling_in(d, w)
                    }?;
                    Some(hit_for(d, kind, w, order))
                })
            }
            PatternKind::Dvec => {
                let prefix = anticycle_prefix(d);
                find_subset(n, size, &prefix, &mut |w| {
                    let order = dvec_labeling_in(d, w)?;
                    Some(hit_for(d, kind, w, order))
                })
            }
        };
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}

fn hit_for(d: &Digraph, kind: PatternKind, w: VertexSet, cycle_order: Vec<Vertex>) -> PatternHit {
    let has_digons = w
        .iter()
        .any(|v| !d.out(v).intersection(d.inc(v)).intersection(w).is_empty());
    PatternHit {
        kind,
        vertices: w,
        cycle_order,
        has_digons,
    }
}

/// When `D[w]` is isomorphic to `D⃗_{|w|}`, the vertices playing `x_0..x_2k`.
fn dvec_labeling_in(d: &Digraph, w: VertexSet) -> Option<Vec<Vertex>> {
    let m = w.len();
    if m < 5 || m.is_multiple_of(2) {
        return None;
    }
    // Underlying complement must be one cycle; find its order.
    let non_nb = |v: Vertex| w.difference(d.neighbors(v)).without(v);
    if w.iter().any(|v| non_nb(v).len() != 2) {
        return None;
    }
    let start = w.first()?;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = non_nb(start).first()?;
    while cur != start {
        order.push(cur);
        let next = non_nb(cur).without(prev).first()?;
        prev = cur;
        cur = next;
    }
    if order.len() != m {
        return None;
    }
    let mut local = Digraph::empty_unchecked(m);
    let mut pos = [0usize; MAX_VERTICES];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &u in &order {
        for v in d.out(u).intersection(w) {
            local.add_arc_unchecked(pos[u], pos[v]);
        }
    }
    let labeled = LabeledCoc::new((m - 1) / 2, local).ok()?;
    let map = dvec_dihedral_iso(&labeled)?;
    let mut by_label = vec![0; m];
    for (i, &x) in map.iter().enumerate() {
        by_label[x] = order[i];
    }
    Some(by_label)
}

/// Perfection of the underlying graph, decided by the absence of induced odd
/// holes and odd antiholes of order at least 5.
pub fn is_perfect_graph(d: &Digraph) -> Result<bool> {
    check_desk_cap(d.n(), "perfect graph recognition")?;
    let n = d.n();
    for size in (5..=n).step_by(2) {
        let prefix = cycle_prefix(d);
        if find_subset(n, size, &prefix, &mut |w| cycle_order_in(d, w).map(|_| ())).is_some() {
            return Ok(false);
        }
        let prefix = anticycle_prefix(d);
        let anti = find_subset(n, size, &prefix, &mut |w| {
            let complement_cycle = w
                .iter()
                .all(|v| w.difference(d.neighbors(v)).without(v).len() == 2)
                && complement_connected(d, w);
            complement_cycle.then_some(())
        });
        if anti.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn complement_connected(d: &Digraph, w: VertexSet) -> bool {
    let Some(start) = w.first() else {
        return true;
    };
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while let Some(v) = frontier.first() {
        frontier.remove(v);
        let fresh = w.difference(d.neighbors(v)).difference(seen);
        seen = seen.union(fresh);
        frontier = frontier.union(fresh);
    }
    seen == w
}
