//! Constructive decision of whether a labelled super-orientation of the
//! complement of `C_{2k+1}` has a path partition orthogonal to
//! `{x_0, x_2k}`.
//!
//! [`theorem4_decide`] follows the induction on `k`: shrink the instance by
//! two vertices at either end, lift any partition found back up by inserting
//! the deleted vertices, and when both shrunken instances are copies of
//! `D⃗_{2k-1}`, read the answer off the five arcs that the two reductions do
//! not see. Every answer carries a certificate (a partition or an
//! isomorphism onto `D⃗_{2k+1}`) and a trace of the steps that produced it.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, Vertex, VertexSet};
use crate::error::{usage, Error, Result};
use crate::generators::{gen_dvec, sample_super_orientations, LabeledCoc, SuperOrientationSpace};
use crate::paths::{join_path, orthogonal_partition, PathPartition};
use crate::recognition::{is_iso_to_dvec, labeled_dvec_iso};

/// `D_1`: delete `x_{2k-1}`, `x_{2k}` and the arcs between `x_0` and
/// `x_{2k-2}`. Labels `x_0..x_{2k-2}` are kept.
pub fn reduce_high(d: &LabeledCoc) -> Result<LabeledCoc> {
    let k = d.k();
    if k < 3 {
        return usage(format!("reduction needs k >= 3, got {k}"));
    }
    let keep = VertexSet::full(2 * k - 1);
    let mut sub = d.digraph().induced_unchecked(keep).digraph;
    strip_pair(&mut sub, 0, 2 * k - 2);
    LabeledCoc::new(k - 1, sub)
}

/// `D_2`: delete `x_0`, `x_1` and the arcs between `x_2` and `x_{2k}`, then
/// shift labels by `i -> i - 2`.
pub fn reduce_low(d: &LabeledCoc) -> Result<LabeledCoc> {
    let k = d.k();
    if k < 3 {
        return usage(format!("reduction needs k >= 3, got {k}"));
    }
    let keep = VertexSet::full(2 * k + 1).without(0).without(1);
    let mut sub = d.digraph().induced_unchecked(keep).digraph;
    strip_pair(&mut sub, 0, 2 * k - 2);
    LabeledCoc::new(k - 1, sub)
}

fn strip_pair(d: &mut Digraph, u: Vertex, v: Vertex) {
    d.remove_arc(u, v).expect("valid pair");
    d.remove_arc(v, u).expect("valid pair");
}

fn require_orthogonal(d: &Digraph, p: &PathPartition, stable: VertexSet) -> Result<()> {
    if !p.is_valid_for(d) || !p.is_orthogonal_to(stable) {
        return usage(format!(
            "expected a path partition orthogonal to {stable:?} of the reduced digraph"
        ));
    }
    Ok(())
}

/// Lifts a partition of `reduce_high(d)` orthogonal to `{x_0, x_{2k-2}}`:
/// `x_{2k-1}` joins the path through `x_0` and `x_{2k}` the path through
/// `x_{2k-2}`. Both are adjacent to every vertex of their target path.
pub fn lift_high(d: &LabeledCoc, sub: &PathPartition) -> Result<PathPartition> {
    let k = d.k();
    let reduced = reduce_high(d)?;
    let top = 2 * k - 2;
    require_orthogonal(reduced.digraph(), sub, VertexSet::singleton(0).with(top))?;
    lift(d, sub, &[(0, 2 * k - 1), (top, 2 * k)], |v| v)
}

/// Lifts a partition of `reduce_low(d)` orthogonal to `{x_2, x_{2k}}` (local
/// labels `{0, 2k-2}`): `x_0` joins the path through `x_2` and `x_1` the
/// path through `x_{2k}`.
pub fn lift_low(d: &LabeledCoc, sub: &PathPartition) -> Result<PathPartition> {
    let k = d.k();
    let reduced = reduce_low(d)?;
    require_orthogonal(
        reduced.digraph(),
        sub,
        VertexSet::singleton(0).with(2 * k - 2),
    )?;
    lift(d, sub, &[(2, 0), (2 * k, 1)], |v| v + 2)
}

/// Shifts `sub` into `d`'s labels, then for each `(anchor, new)` inserts
/// `new` into the path containing `anchor`.
fn lift(
    d: &LabeledCoc,
    sub: &PathPartition,
    inserts: &[(Vertex, Vertex)],
    shift: impl Fn(Vertex) -> Vertex,
) -> Result<PathPartition> {
    let g = d.digraph();
    let mut paths: Vec<_> = sub.map_vertices(shift).paths().to_vec();
    for &(anchor, new) in inserts {
        let slot = paths
            .iter()
            .position(|p| p.vertices().contains(&anchor))
            .expect("anchor lies on some path");
        paths[slot] = join_path(g, &paths[slot], new)
            .map_err(|e| Error::Integrity(format!("lifting x_{new}: {e}")))?;
    }
    let lifted = PathPartition::from_paths_unchecked(paths);
    if !lifted.is_valid_for(g) || !lifted.is_orthogonal_to(d.end_pair()) {
        return Err(Error::Integrity(
            "lifted partition is not orthogonal to {x_0, x_2k}".into(),
        ));
    }
    Ok(lifted)
}

/// One step of a [`theorem4_decide`] run. Steps of recursive calls appear
/// in the order they ran.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum TraceStep {
    /// Exhaustive search on a 5-vertex instance.
    BaseCase { k: usize, partition_found: bool },
    /// Recursed on `D_1`; `lifted` when its partition was lifted.
    ReduceHigh { k: usize, lifted: bool },
    /// Recursed on `D_2` (labels shifted by `shift`).
    ReduceLow {
        k: usize,
        shift: usize,
        lifted: bool,
    },
    /// Both reductions were `D⃗_{2k-1}`; `converse` when the dual digraph
    /// was used so that every arc of `D_1` points upward.
    Normalize { k: usize, converse: bool },
    /// Boundary case `case` (1..=5) matched on arc `arc` of the normalised
    /// digraph.
    BoundaryArc {
        k: usize,
        case: u8,
        arc: (Vertex, Vertex),
    },
    /// No boundary arc points downward: the instance is `D⃗_{2k+1}`.
    AllForward { k: usize },
    /// The proof-shaped route could not be applied; exhaustive search used.
    Fallback { k: usize, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem4Result {
    /// A partition orthogonal to `{x_0, x_2k}`.
    Partition(PathPartition),
    /// `map[u]` is the image of `u` in `gen_dvec(k)`.
    Isomorphism(Vec<Vertex>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem4Outcome {
    pub result: Theorem4Result,
    pub trace: Vec<TraceStep>,
}

impl Theorem4Outcome {
    pub fn partition(&self) -> Option<&PathPartition> {
        match &self.result {
            Theorem4Result::Partition(p) => Some(p),
            Theorem4Result::Isomorphism(_) => None,
        }
    }

    pub fn isomorphism(&self) -> Option<&[Vertex]> {
        match &self.result {
            Theorem4Result::Isomorphism(m) => Some(m),
            Theorem4Result::Partition(_) => None,
        }
    }

    pub fn fallback_count(&self) -> usize {
        self.trace
            .iter()
            .filter(|s| matches!(s, TraceStep::Fallback { .. }))
            .count()
    }

    /// Re-checks the certificate against `d`.
    pub fn verify(&self, d: &LabeledCoc) -> bool {
        match &self.result {
            Theorem4Result::Partition(p) => {
                p.is_valid_for(d.digraph()) && p.is_orthogonal_to(d.end_pair())
            }
            Theorem4Result::Isomorphism(map) => gen_dvec(d.k())
                .map(|t| d.digraph().transports_onto(t.digraph(), map))
                .unwrap_or(false),
        }
    }
}

/// Decides whether `d` has a path partition orthogonal to `{x_0, x_2k}`,
/// returning the partition or an isomorphism onto `D⃗_{2k+1}`.
pub fn theorem4_decide(d: &LabeledCoc) -> Result<Theorem4Outcome> {
    let mut trace = Vec::new();
    let result = decide(d, &mut trace)?;
    Ok(Theorem4Outcome { result, trace })
}

fn decide(d: &LabeledCoc, trace: &mut Vec<TraceStep>) -> Result<Theorem4Result> {
    let k = d.k();
    if k == 2 {
        let found = orthogonal_partition(d.digraph(), d.end_pair())?;
        trace.push(TraceStep::BaseCase {
            k,
            partition_found: found.is_some(),
        });
        return match found {
            Some(p) => Ok(Theorem4Result::Partition(p)),
            None => labeled_dvec_iso(d)
                .map(Theorem4Result::Isomorphism)
                .ok_or_else(|| {
                    Error::Integrity(
                        "5-vertex instance without an orthogonal partition is not D⃗_5".into(),
                    )
                }),
        };
    }

    let high = reduce_high(d)?;
    let high_result = decide(&high, trace)?;
    if let Theorem4Result::Partition(sub) = &high_result {
        trace.push(TraceStep::ReduceHigh { k, lifted: true });
        return lift_high(d, sub).map(Theorem4Result::Partition);
    }
    trace.push(TraceStep::ReduceHigh { k, lifted: false });

    let low = reduce_low(d)?;
    let low_result = decide(&low, trace)?;
    if let Theorem4Result::Partition(sub) = &low_result {
        trace.push(TraceStep::ReduceLow {
            k,
            shift: 2,
            lifted: true,
        });
        return lift_low(d, sub).map(Theorem4Result::Partition);
    }
    trace.push(TraceStep::ReduceLow {
        k,
        shift: 2,
        lifted: false,
    });

    let (Theorem4Result::Isomorphism(high_map), Theorem4Result::Isomorphism(low_map)) =
        (&high_result, &low_result)
    else {
        unreachable!("partition branches returned above");
    };
    let m = 2 * k - 1;
    let identity = |map: &[Vertex]| map.iter().enumerate().all(|(i, &x)| x == i);
    let reflection = |map: &[Vertex]| map.iter().enumerate().all(|(i, &x)| x == m - 1 - i);
    let converse = if identity(high_map) && identity(low_map) {
        false
    } else if reflection(high_map) && reflection(low_map) {
        true
    } else {
        let reason = format!(
            "reductions are D⃗_{m} under maps {high_map:?} and {low_map:?}, neither both identity nor both reflection"
        );
        return fallback(d, trace, reason);
    };
    trace.push(TraceStep::Normalize { k, converse });
    let normalized = if converse { d.converse() } else { d.clone() };
    boundary_cases(d, &normalized, converse, trace)
}

/// With every arc of `D_1` and `D_2` pointing upward, the five remaining
/// adjacencies decide the instance. Cases are tried in a fixed order; each
/// assumes the earlier ones point upward.
fn boundary_cases(
    d: &LabeledCoc,
    normalized: &LabeledCoc,
    converse: bool,
    trace: &mut Vec<TraceStep>,
) -> Result<Theorem4Result> {
    let k = d.k();
    let top = 2 * k;
    let g = normalized.digraph();
    // x_a, x_{a+2}, .., x_b
    let run = |a: usize, b: usize| (a..=b).step_by(2);
    type Case = ((Vertex, Vertex), Vec<Vec<Vertex>>);
    let cases: [Case; 5] = [
        (
            (top - 1, 0),
            vec![run(1, top - 1).chain([0]).collect(), run(2, top).collect()],
        ),
        (
            (top, 1),
            vec![
                [top].into_iter().chain(run(1, top - 1)).collect(),
                run(0, top - 2).collect(),
            ],
        ),
        (
            (top - 2, 0),
            vec![
                run(1, top - 3).chain([top]).collect(),
                run(2, top - 2).chain([0, top - 1]).collect(),
            ],
        ),
        (
            (top, 2),
            vec![
                [1, top].into_iter().chain(run(2, top - 2)).collect(),
                [0].into_iter().chain(run(3, top - 1)).collect(),
            ],
        ),
        (
            (top - 1, 1),
            vec![
                run(3, top - 1).chain([1, top]).collect(),
                run(0, top - 2).collect(),
            ],
        ),
    ];
    for (case, ((u, v), paths)) in cases.into_iter().enumerate() {
        if !g.has_arc(u, v) {
            continue;
        }
        trace.push(TraceStep::BoundaryArc {
            k,
            case: case as u8 + 1,
            arc: (u, v),
        });
        let p = PathPartition::new(g, paths).map_err(|e| {
            Error::Integrity(format!(
                "boundary case {} partition is invalid: {e}",
                case + 1
            ))
        })?;
        let p = if converse { p.reversed() } else { p };
        if !p.is_valid_for(d.digraph()) || !p.is_orthogonal_to(d.end_pair()) {
            return Err(Error::Integrity(format!(
                "boundary case {} partition is not orthogonal",
                case + 1
            )));
        }
        return Ok(Theorem4Result::Partition(p));
    }
    trace.push(TraceStep::AllForward { k });
    let n = d.n();
    let map: Vec<Vertex> = if converse {
        (0..n).rev().collect()
    } else {
        (0..n).collect()
    };
    let target = gen_dvec(k)?;
    if !d.digraph().transports_onto(target.digraph(), &map) {
        return Err(Error::Integrity(
            "no boundary arc points downward yet the instance is not D⃗_{2k+1}".into(),
        ));
    }
    Ok(Theorem4Result::Isomorphism(map))
}

fn fallback(d: &LabeledCoc, trace: &mut Vec<TraceStep>, reason: String) -> Result<Theorem4Result> {
    trace.push(TraceStep::Fallback { k: d.k(), reason });
    if let Some(p) = orthogonal_partition(d.digraph(), d.end_pair())? {
        return Ok(Theorem4Result::Partition(p));
    }
    labeled_dvec_iso(d)
        .map(Theorem4Result::Isomorphism)
        .ok_or_else(|| {
            Error::Integrity("no orthogonal partition and not isomorphic to D⃗_{2k+1}".into())
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum SweepMode {
    Exhaustive,
    Sampled { seed: u64, count: usize },
}

/// An instance where the three routes disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem4Discrepancy {
    pub index: u64,
    pub code: String,
    pub search_found_partition: bool,
    pub isomorphic_to_dvec: bool,
    /// `Some(true)` partition branch, `Some(false)` isomorphism branch,
    /// `None` when the constructive route failed.
    pub constructive_partition: Option<bool>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem4Report {
    pub k: usize,
    pub mode: SweepMode,
    pub instances: u64,
    pub with_partition: u64,
    /// Instances that are `D⃗_{2k+1}` in their own labelling or its mirror
    /// image (see [`labeled_dvec_iso`]).
    pub isomorphic_to_dvec: u64,
    /// Instances isomorphic to `D⃗_{2k+1}` only by a map that moves
    /// `{x_0, x_2k}`; these can still have an orthogonal partition.
    pub abstractly_isomorphic_only: u64,
    /// Instances on which the constructive route fell back to search.
    pub fallback_instances: u64,
    pub fallback_steps: u64,
    pub discrepancy_count: u64,
    /// The first discrepancies by index.
    pub discrepancies: Vec<Theorem4Discrepancy>,
    pub elapsed_ms: u128,
}

const MAX_REPORTED_DISCREPANCIES: usize = 100;

#[derive(Default)]
struct Tally {
    instances: u64,
    with_partition: u64,
    iso: u64,
    abstract_only: u64,
    fallback_instances: u64,
    fallback_steps: u64,
    discrepancy_count: u64,
    discrepancies: Vec<Theorem4Discrepancy>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.with_partition += other.with_partition;
        self.iso += other.iso;
        self.abstract_only += other.abstract_only;
        self.fallback_instances += other.fallback_instances;
        self.fallback_steps += other.fallback_steps;
        self.discrepancy_count += other.discrepancy_count;
        self.discrepancies.extend(other.discrepancies);
        self.discrepancies.sort_by_key(|d| d.index);
        self.discrepancies.truncate(MAX_REPORTED_DISCREPANCIES);
        self
    }

    fn record(&mut self, index: u64, code: impl FnOnce() -> String, d: &LabeledCoc) {
        self.instances += 1;
        let search = orthogonal_partition(d.digraph(), d.end_pair())
            .expect("end pair is stable")
            .is_some();
        let iso = labeled_dvec_iso(d).is_some();
        self.with_partition += search as u64;
        self.iso += iso as u64;
        // Abstract isomorphism is implied by the labelled one, so it only
        // needs checking where the two could differ.
        if !iso && is_iso_to_dvec(d).is_some() {
            self.abstract_only += 1;
        }
        let (constructive, error) = match theorem4_decide(d) {
            Ok(outcome) => {
                let fallbacks = outcome.fallback_count() as u64;
                self.fallback_steps += fallbacks;
                self.fallback_instances += (fallbacks > 0) as u64;
                if outcome.verify(d) {
                    (Some(outcome.partition().is_some()), None)
                } else {
                    (None, Some("certificate failed re-verification".to_string()))
                }
            }
            Err(e) => (None, Some(e.to_string())),
        };
        if search == iso || constructive != Some(search) {
            self.discrepancy_count += 1;
            if self.discrepancies.len() < MAX_REPORTED_DISCREPANCIES {
                self.discrepancies.push(Theorem4Discrepancy {
                    index,
                    code: code(),
                    search_found_partition: search,
                    isomorphic_to_dvec: iso,
                    constructive_partition: constructive,
                    error,
                });
            }
        }
    }
}

/// Sweeps super-orientations of the complement of `C_{2k+1}` and checks that
/// exhaustive search, isomorphism to `D⃗_{2k+1}` and [`theorem4_decide`]
/// agree on each. `threads = 0` uses rayon's default pool size.
pub fn verify_theorem4(k: usize, mode: SweepMode, threads: usize) -> Result<Theorem4Report> {
    let start = Instant::now();
    let space = SuperOrientationSpace::coc(k, false)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Capability(format!("thread pool: {e}")))?;
    let tally = match mode {
        SweepMode::Exhaustive => {
            if k > 3 {
                return Err(Error::Capability(format!(
                    "exhaustive sweep is limited to k <= 3, got {k}; use sampled mode"
                )));
            }
            let size = space.indexable_size().expect("k <= 3");
            const CHUNK: u64 = 1 << 12;
            let chunks = size.div_ceil(CHUNK);
            pool.install(|| {
                (0..chunks)
                    .into_par_iter()
                    .map(|c| {
                        let mut t = Tally::default();
                        for i in c * CHUNK..((c + 1) * CHUNK).min(size) {
                            let d = LabeledCoc::new(k, space.digraph_at(i)).expect("valid code");
                            t.record(i, || space.code_at(i).to_string(), &d);
                        }
                        t
                    })
                    .reduce(Tally::default, Tally::merge)
            })
        }
        SweepMode::Sampled { seed, count } => {
            if 2 * k + 1 > crate::limits::desk_cap() {
                return Err(Error::Capability(format!(
                    "k = {k} gives {} vertices, above the desk cap",
                    2 * k + 1
                )));
            }
            let samples = sample_super_orientations(k, false, seed, count)?;
            pool.install(|| {
                samples
                    .par_iter()
                    .enumerate()
                    .fold(Tally::default, |mut t, (i, (code, d))| {
                        t.record(i as u64, || code.to_string(), d);
                        t
                    })
                    .reduce(Tally::default, Tally::merge)
            })
        }
    };
    Ok(Theorem4Report {
        k,
        mode,
        instances: tally.instances,
        with_partition: tally.with_partition,
        isomorphic_to_dvec: tally.iso,
        abstractly_isomorphic_only: tally.abstract_only,
        fallback_instances: tally.fallback_instances,
        fallback_steps: tally.fallback_steps,
        discrepancy_count: tally.discrepancy_count,
        discrepancies: tally.discrepancies,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_dvec, gen_labeled_coc, symmetric_coc};

    fn dvec_with(k: usize, reverse: &[(Vertex, Vertex)], add: &[(Vertex, Vertex)]) -> LabeledCoc {
        let mut g = gen_dvec(k).unwrap().into_digraph();
        for &(u, v) in reverse {
            g.remove_arc(v, u).unwrap();
            g.add_arc(u, v).unwrap();
        }
        for &(u, v) in add {
            g.add_arc(u, v).unwrap();
        }
        LabeledCoc::new(k, g).unwrap()
    }

    #[test]
    fn reductions_of_dvec7() {
        let d7 = gen_dvec(3).unwrap();
        assert_eq!(reduce_high(&d7).unwrap(), gen_dvec(2).unwrap());
        assert_eq!(reduce_low(&d7).unwrap(), gen_dvec(2).unwrap());
        assert!(reduce_high(&gen_dvec(2).unwrap()).is_err());
        assert!(reduce_low(&gen_dvec(2).unwrap()).is_err());
        assert_eq!(reduce_high(&gen_dvec(5).unwrap()).unwrap().n(), 9);
    }

    #[test]
    fn reduce_high_keeps_other_arcs() {
        let sym = symmetric_coc(3).unwrap();
        let r = reduce_high(&sym).unwrap();
        for (u, v) in r.digraph().arcs() {
            assert!(sym.digraph().has_arc(u, v));
        }
        assert_eq!(r.digraph().arc_count(), 10);
    }

    #[test]
    fn dvec_goes_to_isomorphism_branch() {
        for k in 2..=5 {
            let d = gen_dvec(k).unwrap();
            let out = theorem4_decide(&d).unwrap();
            assert_eq!(
                out.isomorphism(),
                Some(&(0..2 * k + 1).collect::<Vec<_>>()[..])
            );
            assert_eq!(out.fallback_count(), 0);
            assert!(out.verify(&d));
        }
    }

    #[test]
    fn converse_of_dvec_maps_by_reflection() {
        let d = gen_dvec(3).unwrap().converse();
        let out = theorem4_decide(&d).unwrap();
        assert_eq!(out.isomorphism(), Some(&[6, 5, 4, 3, 2, 1, 0][..]));
        assert!(out.verify(&d));
    }

    #[test]
    fn proof_partitions_at_k3() {
        let d = dvec_with(3, &[], &[(5, 0)]);
        let out = theorem4_decide(&d).unwrap();
        assert_eq!(
            out.partition().unwrap().to_vecs(),
            vec![vec![1, 3, 5, 0], vec![2, 4, 6]]
        );
        let d = dvec_with(3, &[], &[(6, 2)]);
        let out = theorem4_decide(&d).unwrap();
        assert_eq!(
            out.partition().unwrap().to_vecs(),
            vec![vec![1, 6, 2, 4], vec![0, 3, 5]]
        );
    }

    #[test]
    fn each_boundary_case_is_constructive() {
        for k in [3, 4] {
            let top = 2 * k;
            let arcs = [(top - 1, 0), (top, 1), (top - 2, 0), (top, 2), (top - 1, 1)];
            for (case, &arc) in arcs.iter().enumerate() {
                for d in [dvec_with(k, &[arc], &[]), dvec_with(k, &[], &[arc])] {
                    let out = theorem4_decide(&d).unwrap();
                    assert_eq!(out.fallback_count(), 0);
                    assert!(out.verify(&d));
                    assert!(out.trace.contains(&TraceStep::BoundaryArc {
                        k,
                        case: case as u8 + 1,
                        arc
                    }));
                }
                // the dual instance goes through the converse normalisation
                let dual = dvec_with(k, &[arc], &[]).converse();
                let out = theorem4_decide(&dual).unwrap();
                assert!(out.partition().is_some());
                assert!(out.verify(&dual));
                assert!(out
                    .trace
                    .contains(&TraceStep::Normalize { k, converse: true }));
            }
        }
    }

    #[test]
    fn lifts_preserve_path_count() {
        let sym = symmetric_coc(3).unwrap();
        let high = reduce_high(&sym).unwrap();
        let sub = orthogonal_partition(high.digraph(), high.end_pair())
            .unwrap()
            .unwrap();
        let lifted = lift_high(&sym, &sub).unwrap();
        assert_eq!(lifted.len(), 2);
        assert!(lifted.is_orthogonal_to(sym.end_pair()));
        let x6_path = lifted
            .paths()
            .iter()
            .find(|p| p.vertices().contains(&6))
            .unwrap();
        assert!(!x6_path.vertices().contains(&0));

        let low = reduce_low(&sym).unwrap();
        let sub = orthogonal_partition(low.digraph(), low.end_pair())
            .unwrap()
            .unwrap();
        let lifted = lift_low(&sym, &sub).unwrap();
        assert!(lifted.is_orthogonal_to(sym.end_pair()));

        // wrong stable set
        let bad = PathPartition::new(high.digraph(), vec![vec![0, 1, 2, 3, 4]]);
        if let Ok(bad) = bad {
            assert!(lift_high(&sym, &bad).is_err());
        }
    }

    #[test]
    fn small_sweep() {
        let r = verify_theorem4(2, SweepMode::Exhaustive, 1).unwrap();
        assert_eq!(r.instances, 243);
        assert_eq!(r.discrepancy_count, 0, "{:?}", r.discrepancies);
        assert_eq!(r.isomorphic_to_dvec, 2);
        // Anti-directed orientations of C_5 other than the two labelled ones.
        assert_eq!(r.abstractly_isomorphic_only, 8);
        assert_eq!(r.fallback_instances, 0);
        assert!(matches!(
            verify_theorem4(4, SweepMode::Exhaustive, 1),
            Err(Error::Capability(_))
        ));
        let code = "0".repeat(14).parse().unwrap();
        assert_eq!(gen_labeled_coc(3, &code).unwrap(), gen_dvec(3).unwrap());
    }
}
