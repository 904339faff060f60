//! Constructors for the digraph families used throughout the crate: cycles,
//! complements of odd cycles with the canonical `x_0..x_2k` labelling, the
//! all-forward family `D⃗_{2k+1}`, anti-directed and blocking odd cycles, and
//! the super-orientation spaces that the sweeps enumerate.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{Digraph, Vertex, VertexSet};
use crate::error::{usage, Error, Result};
use crate::limits::MAX_VERTICES;

/// Orientation of a single underlying edge `{u, v}` with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeState {
    /// `u -> v`
    Forward = 0,
    /// `v -> u`
    Backward = 1,
    /// both arcs
    Both = 2,
}

impl EdgeState {
    pub fn from_digit(d: u8) -> Option<Self> {
        match d {
            0 => Some(EdgeState::Forward),
            1 => Some(EdgeState::Backward),
            2 => Some(EdgeState::Both),
            _ => None,
        }
    }

    pub fn digit(self) -> u8 {
        self as u8
    }
}

/// One [`EdgeState`] per underlying edge, edges in lexicographic order of
/// `(min endpoint, max endpoint)`. Serialises as a base-3 digit string.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientationCode(pub Vec<EdgeState>);

impl OrientationCode {
    pub fn uniform(len: usize, state: EdgeState) -> Self {
        OrientationCode(vec![state; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_digon_free(&self) -> bool {
        !self.0.contains(&EdgeState::Both)
    }
}

impl fmt::Display for OrientationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.digit())?;
        }
        Ok(())
    }
}

impl FromStr for OrientationCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .bytes()
            .map(|b| {
                b.checked_sub(b'0')
                    .and_then(EdgeState::from_digit)
                    .ok_or_else(|| {
                        Error::Usage(format!("invalid orientation digit {:?}", b as char))
                    })
            })
            .collect::<Result<Vec<_>>>()
            .map(OrientationCode)
    }
}

/// Edges of the cycle `(0, 1, .., n-1, 0)`, lexicographic.
pub fn cycle_edges(n: usize) -> Vec<(Vertex, Vertex)> {
    let mut edges: Vec<_> = (0..n)
        .map(|i| {
            let j = (i + 1) % n;
            (i.min(j), i.max(j))
        })
        .collect();
    edges.sort_unstable();
    edges
}

/// Edges of the complement of the cycle `(0, 1, .., n-1, 0)`, lexicographic.
pub fn complement_cycle_edges(n: usize) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let gap = j - i;
            if gap != 1 && gap != n - 1 {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// All super-orientations (or orientations, when `digon_free`) of a fixed
/// underlying graph, indexed so that index order is lexicographic code order.
#[derive(Clone, Debug)]
pub struct SuperOrientationSpace {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    digon_free: bool,
}

impl SuperOrientationSpace {
    pub fn new(n: usize, edges: Vec<(Vertex, Vertex)>, digon_free: bool) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return usage(format!("vertex count must be in 1..={MAX_VERTICES}"));
        }
        for &(u, v) in &edges {
            if u >= v || v >= n {
                return usage(format!("edge ({u}, {v}) must satisfy u < v < n"));
            }
        }
        Ok(SuperOrientationSpace {
            n,
            edges,
            digon_free,
        })
    }

    /// Super-orientations of `C_n`.
    pub fn cycle(n: usize, digon_free: bool) -> Result<Self> {
        if n < 3 {
            return usage("a cycle needs at least 3 vertices");
        }
        Self::new(n, cycle_edges(n), digon_free)
    }

    /// Super-orientations of the complement of `C_{2k+1}`.
    pub fn coc(k: usize, digon_free: bool) -> Result<Self> {
        check_coc_k(k)?;
        Self::new(2 * k + 1, complement_cycle_edges(2 * k + 1), digon_free)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn digon_free(&self) -> bool {
        self.digon_free
    }

    pub fn base(&self) -> u64 {
        if self.digon_free {
            2
        } else {
            3
        }
    }

    /// Number of codes, `base^m`.
    pub fn size(&self) -> u128 {
        (self.base() as u128).pow(self.edges.len() as u32)
    }

    /// Size as a `u64`, when the space is small enough to index.
    pub fn indexable_size(&self) -> Option<u64> {
        u64::try_from(self.size()).ok()
    }

    pub fn code_at(&self, mut index: u64) -> OrientationCode {
        let base = self.base();
        let mut digits = vec![EdgeState::Forward; self.edges.len()];
        for slot in digits.iter_mut().rev() {
            *slot = EdgeState::from_digit((index % base) as u8).unwrap();
            index /= base;
        }
        OrientationCode(digits)
    }

    pub fn index_of(&self, code: &OrientationCode) -> Result<u64> {
        self.check_code(code)?;
        let base = self.base();
        code.0.iter().try_fold(0u64, |acc, s| {
            acc.checked_mul(base)
                .and_then(|a| a.checked_add(s.digit() as u64))
                .ok_or_else(|| Error::Capability("orientation code index overflows u64".into()))
        })
    }

    fn check_code(&self, code: &OrientationCode) -> Result<()> {
        if code.len() != self.edges.len() {
            return usage(format!(
                "orientation code has {} digits, expected {}",
                code.len(),
                self.edges.len()
            ));
        }
        if self.digon_free && !code.is_digon_free() {
            return usage("digit 2 (both directions) in a digon-free space");
        }
        Ok(())
    }

    pub fn decode(&self, code: &OrientationCode) -> Result<Digraph> {
        self.check_code(code)?;
        let mut d = Digraph::empty_unchecked(self.n);
        for (&(u, v), &s) in self.edges.iter().zip(&code.0) {
            apply_state(&mut d, u, v, s);
        }
        Ok(d)
    }

    /// Decodes the code at `index` without materialising it.
    pub fn digraph_at(&self, mut index: u64) -> Digraph {
        let base = self.base();
        let mut d = Digraph::empty_unchecked(self.n);
        for &(u, v) in self.edges.iter().rev() {
            let s = EdgeState::from_digit((index % base) as u8).unwrap();
            index /= base;
            apply_state(&mut d, u, v, s);
        }
        d
    }

    /// A uniformly random code from a seeded generator.
    pub fn random_code<R: Rng>(&self, rng: &mut R) -> OrientationCode {
        let base = self.base() as u8;
        OrientationCode(
            (0..self.edges.len())
                .map(|_| EdgeState::from_digit(rng.gen_range(0..base)).unwrap())
                .collect(),
        )
    }
}

fn apply_state(d: &mut Digraph, u: Vertex, v: Vertex, s: EdgeState) {
    match s {
        EdgeState::Forward => d.add_arc_unchecked(u, v),
        EdgeState::Backward => d.add_arc_unchecked(v, u),
        EdgeState::Both => {
            d.add_arc_unchecked(u, v);
            d.add_arc_unchecked(v, u);
        }
    }
}

fn check_coc_k(k: usize) -> Result<()> {
    if k < 2 {
        return usage(format!("complement of C_{{2k+1}} needs k >= 2, got {k}"));
    }
    if 2 * k + 1 > MAX_VERTICES {
        return usage(format!("k = {k} exceeds the {MAX_VERTICES}-vertex limit"));
    }
    Ok(())
}

/// A super-orientation of the complement of `C_{2k+1}` in which vertex `i`
/// is `x_i` and the non-neighbours of `x_i` are `x_{i-1}` and `x_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledCoc {
    k: usize,
    digraph: Digraph,
}

impl LabeledCoc {
    /// Wraps `digraph`, checking that its underlying graph is the labelled
    /// complement of `C_{2k+1}`.
    pub fn new(k: usize, digraph: Digraph) -> Result<Self> {
        check_coc_k(k)?;
        let n = 2 * k + 1;
        if digraph.n() != n {
            return usage(format!(
                "complement of C_{n} needs {n} vertices, got {}",
                digraph.n()
            ));
        }
        let all = VertexSet::full(n);
        for i in 0..n {
            let expected = all.without(i).without((i + 1) % n).without((i + n - 1) % n);
            if digraph.neighbors(i) != expected {
                return usage(format!(
                    "vertex x_{i} has neighbours {:?}, expected {:?}",
                    digraph.neighbors(i),
                    expected
                ));
            }
        }
        Ok(LabeledCoc { k, digraph })
    }

    /// Infers `k` from the vertex count.
    pub fn from_digraph(digraph: Digraph) -> Result<Self> {
        let n = digraph.n();
        if n < 5 || n.is_multiple_of(2) {
            return usage(format!(
                "a complement of an odd cycle with k >= 2 has an odd vertex count >= 5, got {n}"
            ));
        }
        Self::new((n - 1) / 2, digraph)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        2 * self.k + 1
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn into_digraph(self) -> Digraph {
        self.digraph
    }

    /// `{x_0, x_2k}`.
    pub fn end_pair(&self) -> VertexSet {
        VertexSet::singleton(0).with(2 * self.k)
    }

    pub fn converse(&self) -> LabeledCoc {
        LabeledCoc {
            k: self.k,
            digraph: self.digraph.converse(),
        }
    }
}

/// `D⃗_{2k+1}`: every underlying edge `x_i x_j` with `i < j` oriented `x_i -> x_j`.
pub fn gen_dvec(k: usize) -> Result<LabeledCoc> {
    check_coc_k(k)?;
    let n = 2 * k + 1;
    let mut d = Digraph::empty_unchecked(n);
    for (u, v) in complement_cycle_edges(n) {
        d.add_arc_unchecked(u, v);
    }
    Ok(LabeledCoc { k, digraph: d })
}

pub fn gen_labeled_coc(k: usize, code: &OrientationCode) -> Result<LabeledCoc> {
    let space = SuperOrientationSpace::coc(k, false)?;
    let digraph = space.decode(code)?;
    Ok(LabeledCoc { k, digraph })
}

/// Every super-orientation of the complement of `C_{2k+1}` in lexicographic
/// code order. Exhaustive mode is limited to `k <= 3`.
pub fn enumerate_super_orientations(
    k: usize,
    digon_free: bool,
) -> Result<impl Iterator<Item = LabeledCoc>> {
    check_coc_k(k)?;
    if k > 3 {
        return Err(Error::Capability(format!(
            "exhaustive enumeration is limited to k <= 3 (k = {k} has 3^{} codes); use sampled mode",
            (2 * k + 1) * (k - 1)
        )));
    }
    let space = SuperOrientationSpace::coc(k, digon_free)?;
    let size = space.indexable_size().expect("k <= 3 fits in u64");
    Ok((0..size).map(move |i| LabeledCoc {
        k,
        digraph: space.digraph_at(i),
    }))
}

/// `count` uniformly random super-orientations of the complement of
/// `C_{2k+1}`, reproducible from `seed`.
pub fn sample_super_orientations(
    k: usize,
    digon_free: bool,
    seed: u64,
    count: usize,
) -> Result<Vec<(OrientationCode, LabeledCoc)>> {
    let space = SuperOrientationSpace::coc(k, digon_free)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let code = space.random_code(&mut rng);
            let digraph = space.decode(&code)?;
            Ok((code, LabeledCoc { k, digraph }))
        })
        .collect()
}

/// An anti-directed orientation of the cycle `(y_0, .., y_2k, y_0)` with
/// `y_i = i`. `y_0` is a sink, `y_1` a source, `y_2` a sink and `y_3` a
/// source. Bit `j` of `free_spin` selects the pole of `y_{2j+5}`
/// (0 = source, 1 = sink); the remaining vertices are unconstrained and their
/// arcs are all forced by their constrained neighbours.
pub fn gen_anti_directed(k: usize, free_spin: u64) -> Result<Digraph> {
    if k < 2 {
        return usage(format!("anti-directed odd cycles need k >= 2, got {k}"));
    }
    let n = 2 * k + 1;
    if n > MAX_VERTICES {
        return usage("cycle too long");
    }
    let free_bits = k - 2;
    if free_bits < 64 && free_spin >> free_bits != 0 {
        return usage(format!(
            "free_spin {free_spin:#b} uses more than the {free_bits} free pole bits for k = {k}"
        ));
    }
    // Some(true) = source, Some(false) = sink, None = unconstrained.
    let mut pole: Vec<Option<bool>> = vec![None; n];
    pole[0] = Some(false);
    pole[1] = Some(true);
    pole[2] = Some(false);
    pole[3] = Some(true);
    for j in 0..free_bits {
        pole[2 * j + 5] = Some(free_spin >> j & 1 == 0);
    }
    orient_cycle_by_poles(n, &pole, |_| {
        unreachable!("every cycle edge meets a constrained vertex")
    })
}

/// Pattern for a blocking `C_5` in which `{y_2, y_4}` is a maximum stable set
/// with an orthogonal path partition but no BE-orthogonal one: `y_0` is a
/// sink, `y_1` a source, and the remaining edges run forward.
pub const BLOCKING_C5_EXAMPLE: u64 = 0b001;

/// A blocking orientation of the cycle `(y_0, .., y_2k, y_0)` with `y_i = i`.
/// Bit 0 of `pattern` selects the pole of `y_0` (0 = source, forcing `y_1`
/// to be a sink; 1 = sink, forcing `y_1` to be a source). Bit `i - 1`, for
/// `2 <= i <= 2k - 1`, orients the edge `y_i y_{i+1}` (0 = forward).
pub fn gen_blocking(k: usize, pattern: u64) -> Result<Digraph> {
    if k < 1 {
        return usage("blocking odd cycles need k >= 1");
    }
    let n = 2 * k + 1;
    if n > MAX_VERTICES {
        return usage("cycle too long");
    }
    let bits = 2 * k - 1;
    if bits < 64 && pattern >> bits != 0 {
        return usage(format!(
            "pattern {pattern:#b} uses more than the {bits} pattern bits for k = {k}"
        ));
    }
    let mut pole: Vec<Option<bool>> = vec![None; n];
    let y0_source = pattern & 1 == 0;
    pole[0] = Some(y0_source);
    pole[1] = Some(!y0_source);
    orient_cycle_by_poles(n, &pole, |i| pattern >> (i - 1) & 1 == 0)
}

/// Orients the cycle `(0, .., n-1, 0)`. Edges touching a vertex with a pole
/// follow it; other edges `{i, i+1}` go forward iff `free(i)`.
fn orient_cycle_by_poles(
    n: usize,
    pole: &[Option<bool>],
    free: impl Fn(usize) -> bool,
) -> Result<Digraph> {
    let mut d = Digraph::empty_unchecked(n);
    for i in 0..n {
        let j = (i + 1) % n;
        // forward means i -> j
        let from_i = pole[i];
        let from_j = pole[j].map(|source| !source);
        let forward = match (from_i, from_j) {
            (Some(a), Some(b)) if a != b => {
                return usage(format!(
                    "poles of {i} and {j} conflict on their shared edge"
                ))
            }
            (Some(a), _) | (None, Some(a)) => a,
            (None, None) => free(i),
        };
        if forward {
            d.add_arc_unchecked(i, j);
        } else {
            d.add_arc_unchecked(j, i);
        }
    }
    Ok(d)
}

/// Replaces every adjacency with a digon.
pub fn symmetric_closure(d: &Digraph) -> Digraph {
    let mut s = Digraph::empty_unchecked(d.n());
    for (u, v) in d.arcs() {
        s.add_arc_unchecked(u, v);
        s.add_arc_unchecked(v, u);
    }
    s
}

/// The symmetric complement of `C_{2k+1}`.
pub fn symmetric_coc(k: usize) -> Result<LabeledCoc> {
    let d = gen_dvec(k)?;
    Ok(LabeledCoc {
        k,
        digraph: symmetric_closure(d.digraph()),
    })
}

pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n < 2 {
        return usage("a directed cycle needs at least 2 vertices");
    }
    Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn directed_path(n: usize) -> Result<Digraph> {
    Digraph::from_arcs(n, (1..n).map(|i| (i - 1, i)))
}

/// `0 -> 1`, `1 -> 2`, `0 -> 2`.
pub fn transitive_triangle() -> Digraph {
    Digraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
}

/// A random digraph on `n` vertices: each vertex pair is independently
/// non-adjacent, forward, backward or a digon with equal probability.
pub fn random_digraph<R: Rng>(n: usize, rng: &mut R) -> Result<Digraph> {
    let mut d = Digraph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            match rng.gen_range(0..4u8) {
                0 => {}
                s => apply_state(&mut d, u, v, EdgeState::from_digit(s - 1).unwrap()),
            }
        }
    }
    Ok(d)
}
