//! α-diperfection and BE-diperfection by exhaustive descent over induced
//! subdigraphs.

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, VertexSet};
use crate::error::{usage, Error, Result};
use crate::generators::SuperOrientationSpace;
use crate::limits::check_desk_cap;
use crate::paths::{orthogonal_be_partition, orthogonal_partition};
use crate::recognition::is_anti_directed;

/// An induced subdigraph together with a maximum stable set of it that no
/// (BE-)orthogonal path partition matches. Both sets use the ids of the
/// digraph that was checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub subdigraph: VertexSet,
    pub stable: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiperfectVerdict {
    pub holds: bool,
    pub violation: Option<Violation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Flavor {
    Alpha,
    BeginEnd,
}

impl Flavor {
    fn partition_exists(self, d: &Digraph, stable: VertexSet) -> Result<bool> {
        Ok(match self {
            Flavor::Alpha => orthogonal_partition(d, stable)?.is_some(),
            Flavor::BeginEnd => orthogonal_be_partition(d, stable)?.is_some(),
        })
    }
}

pub fn is_alpha_diperfect(d: &Digraph) -> Result<DiperfectVerdict> {
    check(d, Flavor::Alpha)
}

pub fn is_be_diperfect(d: &Digraph) -> Result<DiperfectVerdict> {
    check(d, Flavor::BeginEnd)
}

/// Visits nonempty vertex subsets by decreasing cardinality, lexicographic
/// within a cardinality, and reports the first violation found.
fn check(d: &Digraph, flavor: Flavor) -> Result<DiperfectVerdict> {
    check_desk_cap(d.n(), "diperfection check")?;
    let n = d.n();
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); n + 1];
    for bits in 1..=d.vertices().bits() {
        let set = VertexSet::from_bits(bits);
        by_size[set.len()].push(set);
    }
    for bucket in by_size.iter_mut().skip(1).rev() {
        bucket.sort_unstable();
        for &set in bucket.iter() {
            if let Some(violation) = subset_violation(d, set, flavor)? {
                audit(d, violation, flavor)?;
                return Ok(DiperfectVerdict {
                    holds: false,
                    violation: Some(violation),
                });
            }
        }
    }
    Ok(DiperfectVerdict {
        holds: true,
        violation: None,
    })
}

fn subset_violation(d: &Digraph, set: VertexSet, flavor: Flavor) -> Result<Option<Violation>> {
    if set.len() == 1 {
        return Ok(None);
    }
    let ind = d.induced_unchecked(set);
    for stable in ind.digraph.max_stable_sets() {
        if !flavor.partition_exists(&ind.digraph, stable)? {
            return Ok(Some(Violation {
                subdigraph: set,
                stable: ind.to_original(stable),
            }));
        }
    }
    Ok(None)
}

/// Recomputes a violation from scratch; a failure here is a bug.
fn audit(d: &Digraph, v: Violation, flavor: Flavor) -> Result<()> {
    if !verify_violation(d, &v, flavor == Flavor::BeginEnd)? {
        return Err(Error::Integrity(format!(
            "violation {v:?} does not re-verify"
        )));
    }
    Ok(())
}

/// Checks that `v.stable` is a maximum stable set of `D[v.subdigraph]`
/// admitting no orthogonal (or BE-orthogonal) path partition.
pub fn verify_violation(d: &Digraph, v: &Violation, be: bool) -> Result<bool> {
    if v.subdigraph.is_empty() || !v.stable.is_subset(v.subdigraph) {
        return Ok(false);
    }
    let ind = d.induced(v.subdigraph)?;
    let local: VertexSet = v
        .stable
        .iter()
        .map(|x| ind.vertices.iter().position(|&y| y == x).unwrap())
        .collect();
    if !ind.digraph.is_max_stable(local) {
        return Ok(false);
    }
    let flavor = if be { Flavor::BeginEnd } else { Flavor::Alpha };
    Ok(!flavor.partition_exists(&ind.digraph, local)?)
}

/// Outcome of sweeping every super-orientation of `C_{2k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem3Report {
    pub k: usize,
    pub digon_free: bool,
    pub instances: u64,
    pub anti_directed: u64,
    pub not_alpha_diperfect: u64,
    /// Orientation codes where α-diperfection and "not anti-directed" differ.
    pub discrepancies: Vec<String>,
}

/// Confirms that a super-orientation of `C_{2k+1}` is α-diperfect exactly
/// when it is not anti-directed, over the whole space. `k` is 2 or 3.
pub fn check_theorem3(k: usize, digon_free: bool) -> Result<Theorem3Report> {
    if k < 2 {
        return usage("odd cycles of order at least 5 need k >= 2");
    }
    if k > 3 {
        return Err(Error::Capability(format!(
            "the odd-cycle sweep is exhaustive and limited to k <= 3, got {k}"
        )));
    }
    let space = SuperOrientationSpace::cycle(2 * k + 1, digon_free)?;
    let size = space.indexable_size().expect("small space");
    let mut report = Theorem3Report {
        k,
        digon_free,
        instances: size,
        anti_directed: 0,
        not_alpha_diperfect: 0,
        discrepancies: Vec::new(),
    };
    for i in 0..size {
        let d = space.digraph_at(i);
        let anti = is_anti_directed(&d);
        let holds = is_alpha_diperfect(&d)?.holds;
        report.anti_directed += anti as u64;
        report.not_alpha_diperfect += !holds as u64;
        if holds == anti {
            report.discrepancies.push(space.code_at(i).to_string());
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn dvec7_is_not_alpha_diperfect() {
        let d7 = gen_dvec(3).unwrap();
        let v = is_alpha_diperfect(d7.digraph()).unwrap();
        assert!(!v.holds);
        let violation = v.violation.unwrap();
        assert_eq!(violation.subdigraph, d7.digraph().vertices());
        assert_eq!(violation.stable, set(&[0, 6]));
        assert!(verify_violation(d7.digraph(), &violation, false).unwrap());
    }

    #[test]
    fn anti_directed_c5_fails() {
        let d = gen_anti_directed(2, 0).unwrap();
        assert!(!is_alpha_diperfect(&d).unwrap().holds);
    }

    #[test]
    fn be_examples() {
        let tt = transitive_triangle();
        let v = is_be_diperfect(&tt).unwrap();
        assert!(!v.holds);
        assert_eq!(v.violation.unwrap().stable, set(&[1]));
        assert!(
            !is_be_diperfect(gen_dvec(3).unwrap().digraph())
                .unwrap()
                .holds
        );
        assert!(is_be_diperfect(&directed_path(4).unwrap()).unwrap().holds);
    }

    #[test]
    fn single_vertex_is_diperfect() {
        let one = Digraph::new(1).unwrap();
        assert!(is_alpha_diperfect(&one).unwrap().holds);
        assert!(is_be_diperfect(&one).unwrap().holds);
    }

    #[test]
    fn theorem3_k2() {
        let r = check_theorem3(2, false).unwrap();
        assert_eq!(r.instances, 243);
        assert!(r.discrepancies.is_empty(), "{:?}", r.discrepancies);
        assert_eq!(r.anti_directed, r.not_alpha_diperfect);
        let r = check_theorem3(2, true).unwrap();
        assert_eq!(r.instances, 32);
        assert!(r.discrepancies.is_empty());
        assert!(matches!(
            check_theorem3(4, false),
            Err(Error::Capability(_))
        ));
    }
}
