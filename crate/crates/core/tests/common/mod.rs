//! Brute-force reference implementations. They only read adjacency through
//! `Digraph::has_arc` and share no algorithm with the library: paths come
//! from permutations, partitions from explicit block assignments, and
//! pattern recognition from every vertex ordering.

#![allow(dead_code)]

use diperfect::generators::random_digraph;
use diperfect::{Digraph, VertexSet};
use rand::Rng;

pub type Adj = Vec<Vec<bool>>;

pub fn matrix(d: &Digraph) -> Adj {
    let n = d.n();
    (0..n)
        .map(|u| (0..n).map(|v| d.has_arc(u, v)).collect())
        .collect()
}

pub fn adjacent(a: &Adj, u: usize, v: usize) -> bool {
    a[u][v] || a[v][u]
}

pub fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

/// Heap's algorithm, calling `f` on every ordering of `items`.
pub fn for_each_permutation(items: &[usize], f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(k: usize, a: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if k <= 1 {
            return f(a);
        }
        for i in 0..k {
            if rec(k - 1, a, f) {
                return true;
            }
            let j = if k.is_multiple_of(2) { i } else { 0 };
            a.swap(j, k - 1);
        }
        false
    }
    let mut a = items.to_vec();
    if a.is_empty() {
        return f(&a);
    }
    rec(a.len(), &mut a, f)
}

pub fn is_dipath(a: &Adj, seq: &[usize]) -> bool {
    seq.windows(2).all(|w| a[w[0]][w[1]])
}

pub fn is_stable(a: &Adj, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !adjacent(a, u, v)))
}

pub fn alpha(a: &Adj) -> usize {
    let n = a.len();
    (0u64..1 << n)
        .filter(|&m| is_stable(a, &members(m, n)))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn max_stable_masks(a: &Adj) -> Vec<u64> {
    let n = a.len();
    let al = alpha(a);
    (0u64..1 << n)
        .filter(|&m| m.count_ones() as usize == al && is_stable(a, &members(m, n)))
        .collect()
}

/// Longest path order, trying every ordering of every subset.
pub fn lambda(a: &Adj) -> usize {
    let n = a.len();
    let mut best = 0;
    for m in 1u64..1 << n {
        let vs = members(m, n);
        if vs.len() <= best {
            continue;
        }
        if for_each_permutation(&vs, &mut |p| is_dipath(a, p)) {
            best = vs.len();
        }
    }
    best
}

/// Some ordering of `vs` that is a path, with an optional endpoint rule.
pub fn hamiltonian(a: &Adj, vs: &[usize], accept: &dyn Fn(&[usize]) -> bool) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_permutation(vs, &mut |p| {
        if is_dipath(a, p) && accept(p) {
            found = Some(p.to_vec());
            true
        } else {
            false
        }
    });
    found
}

/// Minimum number of paths covering the vertices: try every assignment of
/// vertices to `t` labelled blocks for increasing `t`.
pub fn min_path_partition_size(a: &Adj) -> usize {
    let n = a.len();
    (1..=n)
        .find(|&t| {
            let mut block = vec![0usize; n];
            assignments(n, t, &mut block, 0, &mut |block| {
                (0..t).all(|b| {
                    let vs: Vec<usize> = (0..n).filter(|&v| block[v] == b).collect();
                    !vs.is_empty() && hamiltonian(a, &vs, &|_| true).is_some()
                })
            })
        })
        .unwrap_or(0)
}

fn assignments(
    n: usize,
    t: usize,
    block: &mut Vec<usize>,
    v: usize,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if v == n {
        return f(block);
    }
    // Canonical labelling: vertex v opens at most one new block.
    let used = block[..v].iter().copied().max().map_or(0, |m| m + 1);
    for b in 0..t.min(used + 1) {
        block[v] = b;
        if assignments(n, t, block, v + 1, f) {
            return true;
        }
    }
    false
}

/// Whether some path partition meets every path of it in exactly one vertex
/// of `s`; with `begin_end`, that vertex must also be an endpoint.
pub fn orthogonal_exists(a: &Adj, s: &[usize], begin_end: bool) -> bool {
    let n = a.len();
    if s.is_empty() {
        return n == 0;
    }
    let rest: Vec<usize> = (0..n).filter(|v| !s.contains(v)).collect();
    let mut owner = vec![0usize; rest.len()];
    loop {
        let ok = s.iter().enumerate().all(|(b, &root)| {
            let mut vs = vec![root];
            vs.extend(
                rest.iter()
                    .zip(&owner)
                    .filter(|(_, &o)| o == b)
                    .map(|(&v, _)| v),
            );
            hamiltonian(a, &vs, &|p| {
                !begin_end || p[0] == root || p[p.len() - 1] == root
            })
            .is_some()
        });
        if ok {
            return true;
        }
        // Next assignment in base |s|.
        let mut i = 0;
        while i < owner.len() && owner[i] + 1 == s.len() {
            owner[i] = 0;
            i += 1;
        }
        if i == owner.len() {
            return false;
        }
        owner[i] += 1;
    }
}

pub fn induced(a: &Adj, vs: &[usize]) -> Adj {
    vs.iter()
        .map(|&u| vs.iter().map(|&v| a[u][v]).collect())
        .collect()
}

/// Definition-level diperfection: every induced subdigraph and every
/// maximum stable set of it has a (BE-)orthogonal partition.
pub fn diperfect(a: &Adj, begin_end: bool) -> bool {
    let n = a.len();
    (1u64..1 << n).all(|m| {
        let sub = induced(a, &members(m, n));
        max_stable_masks(&sub)
            .into_iter()
            .all(|s| orthogonal_exists(&sub, &members(s, sub.len()), begin_end))
    })
}

pub fn is_source(a: &Adj, v: usize) -> bool {
    (0..a.len()).all(|u| !a[u][v])
}

pub fn is_sink(a: &Adj, v: usize) -> bool {
    (0..a.len()).all(|u| !a[v][u])
}

pub fn pole(a: &Adj, v: usize) -> bool {
    is_source(a, v) || is_sink(a, v)
}

/// Whether the underlying graph is exactly the cycle `order[0], order[1], ..`.
pub fn is_cycle_order(a: &Adj, order: &[usize]) -> bool {
    let n = order.len();
    if n < 3 {
        return false;
    }
    let mut edges = 0;
    for u in 0..n {
        for v in u + 1..n {
            if adjacent(a, u, v) {
                edges += 1;
            }
        }
    }
    edges == n && (0..n).all(|i| adjacent(a, order[i], order[(i + 1) % n]))
}

/// `y_0, y_1, y_2, y_3, y_5, .., y_{2k-1}` all sources or sinks.
pub fn anti_directed(a: &Adj) -> bool {
    let n = a.len();
    if n < 5 || n.is_multiple_of(2) {
        return false;
    }
    let all: Vec<usize> = (0..n).collect();
    for_each_permutation(&all, &mut |y| {
        is_cycle_order(a, y)
            && [0, 1, 2, 3]
                .iter()
                .chain((5..n - 1).step_by(2).collect::<Vec<_>>().iter())
                .all(|&i| pole(a, y[i]))
    })
}

/// `y_0` and `y_1` both sources or sinks.
pub fn blocking(a: &Adj) -> bool {
    let n = a.len();
    if n < 3 || n.is_multiple_of(2) {
        return false;
    }
    let all: Vec<usize> = (0..n).collect();
    for_each_permutation(&all, &mut |y| {
        is_cycle_order(a, y) && pole(a, y[0]) && pole(a, y[1])
    })
}

/// Whether some bijection carries the arcs of `a` exactly onto those of `b`.
pub fn isomorphic(a: &Adj, b: &Adj) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let all: Vec<usize> = (0..n).collect();
    for_each_permutation(&all, &mut |p| {
        (0..n).all(|u| (0..n).all(|v| a[u][v] == b[p[u]][p[v]]))
    })
}

/// Perfection of the underlying graph from the definition: clique number
/// equals chromatic number on every induced subgraph.
pub fn perfect(a: &Adj) -> bool {
    let n = a.len();
    (1u64..1 << n).all(|m| {
        let vs = members(m, n);
        let sub = induced(a, &vs);
        clique_number(&sub) == chromatic_number(&sub)
    })
}

fn clique_number(a: &Adj) -> usize {
    let n = a.len();
    (0u64..1 << n)
        .filter(|&m| {
            let vs = members(m, n);
            vs.iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| adjacent(a, u, v)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn chromatic_number(a: &Adj) -> usize {
    let n = a.len();
    (1..=n)
        .find(|&c| {
            let mut colour = vec![0usize; n];
            assignments(n, c, &mut colour, 0, &mut |col| {
                (0..n).all(|u| (u + 1..n).all(|v| col[u] != col[v] || !adjacent(a, u, v)))
            })
        })
        .unwrap_or(0)
}

pub fn random(n: usize, rng: &mut impl Rng) -> Digraph {
    random_digraph(n, rng).unwrap()
}

/// Digraph on `n` vertices from one state per unordered pair
/// (0 none, 1 forward, 2 backward, 3 both), pairs in lexicographic order.
pub fn from_pair_states(n: usize, states: &[u8]) -> Digraph {
    let mut d = Digraph::new(n).unwrap();
    let mut it = states.iter();
    for u in 0..n {
        for v in u + 1..n {
            let s = it.next().copied().unwrap_or(0) % 4;
            if s & 1 == 1 {
                d.add_arc(u, v).unwrap();
            }
            if s & 2 == 2 {
                d.add_arc(v, u).unwrap();
            }
        }
    }
    d
}
