//! Search harness for digraphs that avoid both induced anti-directed odd
//! cycles and induced `D⃗_{2k+1}` yet fail α-diperfection. Whether such
//! digraphs exist is open, so any hit is a candidate that needs independent
//! confirmation.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::diperfection::{is_alpha_diperfect, verify_violation, DiperfectVerdict};
use crate::edgelist::to_edge_list;
use crate::error::{usage, Error, Result};
use crate::generators::{random_digraph, SuperOrientationSpace};
use crate::limits::check_desk_cap;
use crate::recognition::{find_induced_pattern, PatternKind};

/// Where candidate digraphs come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "space", rename_all = "kebab-case")]
pub enum Space {
    /// Super-orientations of the complement of `C_{2k+1}`.
    Coc { k: usize, digon_free: bool },
    /// Super-orientations of `C_n`.
    Cycle { n: usize, digon_free: bool },
    /// Seeded random digraphs on `n` vertices.
    Random { n: usize },
}

impl FromStr for Space {
    type Err = Error;

    /// `coc:K`, `cycle:N`, `random:N`; append `:digon-free` to the first two.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |p: &str| {
            p.parse::<usize>()
                .map_err(|_| Error::Usage(format!("invalid size {p:?} in space {s:?}")))
        };
        let digon_free = match parts.get(2) {
            None => false,
            Some(&"digon-free") => true,
            Some(other) => return usage(format!("unknown space modifier {other:?}")),
        };
        match (parts.first().copied(), parts.get(1)) {
            (Some("coc"), Some(k)) => Ok(Space::Coc {
                k: num(k)?,
                digon_free,
            }),
            (Some("cycle"), Some(n)) => Ok(Space::Cycle {
                n: num(n)?,
                digon_free,
            }),
            (Some("random"), Some(n)) if parts.len() == 2 => Ok(Space::Random { n: num(n)? }),
            _ => usage(format!(
                "unknown space {s:?} (expected coc:K, cycle:N or random:N)"
            )),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suffix = |df: bool| if df { ":digon-free" } else { "" };
        match self {
            Space::Coc { k, digon_free } => write!(f, "coc:{k}{}", suffix(*digon_free)),
            Space::Cycle { n, digon_free } => write!(f, "cycle:{n}{}", suffix(*digon_free)),
            Space::Random { n } => write!(f, "random:{n}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    /// Drop digraphs with an induced anti-directed odd cycle.
    AntiDirected,
    /// Drop digraphs with an induced subdigraph isomorphic to some `D⃗_{2k+1}`.
    Dvec,
}

impl Filter {
    pub const ALL: [Filter; 2] = [Filter::AntiDirected, Filter::Dvec];

    fn pattern(self) -> PatternKind {
        match self {
            Filter::AntiDirected => PatternKind::AntiDirected,
            Filter::Dvec => PatternKind::Dvec,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExploreHit {
    /// Position of the digraph in the generated sequence.
    pub index: u64,
    pub edge_list: String,
    pub verdict: DiperfectVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExploreReport {
    pub space: String,
    pub filters: Vec<Filter>,
    pub seed: u64,
    pub budget: u64,
    pub generated: u64,
    /// Digraphs removed by a filter.
    pub filtered: u64,
    /// Digraphs passed to the α-diperfection check.
    pub checked: u64,
    /// Set when the space was larger than the budget.
    pub truncated: bool,
    pub hits: Vec<ExploreHit>,
    pub note: String,
}

const HIT_NOTE: &str = "hits are unconfirmed candidates: filter-free digraphs that fail \
α-diperfection; each needs independent confirmation before being treated as a result";

enum Outcome {
    Filtered,
    Diperfect,
    Hit(DiperfectVerdict),
}

fn examine(d: &Digraph, filters: &[Filter]) -> Result<Outcome> {
    for f in filters {
        if find_induced_pattern(d, f.pattern())?.is_some() {
            return Ok(Outcome::Filtered);
        }
    }
    let verdict = is_alpha_diperfect(d)?;
    Ok(if verdict.holds {
        Outcome::Diperfect
    } else {
        Outcome::Hit(verdict)
    })
}

/// Independent recomputation of a hit before it is reported.
fn reverify(d: &Digraph, filters: &[Filter], verdict: &DiperfectVerdict) -> Result<bool> {
    for f in filters {
        if find_induced_pattern(d, f.pattern())?.is_some() {
            return Ok(false);
        }
    }
    match &verdict.violation {
        Some(v) if !verdict.holds => verify_violation(d, v, false),
        _ => Ok(false),
    }
}

/// Generates up to `budget` digraphs from `space`, filters them, and checks
/// the survivors. Identical arguments give identical reports regardless of
/// `threads` (0 = rayon's default).
pub fn explore(
    space: Space,
    filters: &[Filter],
    seed: u64,
    budget: u64,
    threads: usize,
) -> Result<ExploreReport> {
    let (instances, truncated): (Vec<Digraph>, bool) = match space {
        Space::Coc { k, digon_free } => {
            let s = SuperOrientationSpace::coc(k, digon_free)?;
            take_space(&s, budget)?
        }
        Space::Cycle { n, digon_free } => {
            let s = SuperOrientationSpace::cycle(n, digon_free)?;
            take_space(&s, budget)?
        }
        Space::Random { n } => {
            check_desk_cap(n, "exploration")?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let count = usize::try_from(budget).map_err(|_| Error::Capability("budget".into()))?;
            let ds = (0..count)
                .map(|_| random_digraph(n, &mut rng))
                .collect::<Result<Vec<_>>>()?;
            (ds, false)
        }
    };
    if let Some(d) = instances.first() {
        check_desk_cap(d.n(), "exploration")?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Capability(format!("thread pool: {e}")))?;
    let outcomes: Vec<Outcome> = pool.install(|| {
        instances
            .par_iter()
            .map(|d| examine(d, filters))
            .collect::<Result<Vec<_>>>()
    })?;

    let mut report = ExploreReport {
        space: space.to_string(),
        filters: filters.to_vec(),
        seed,
        budget,
        generated: instances.len() as u64,
        filtered: 0,
        checked: 0,
        truncated,
        hits: Vec::new(),
        note: HIT_NOTE.to_string(),
    };
    for (i, (d, outcome)) in instances.iter().zip(outcomes).enumerate() {
        match outcome {
            Outcome::Filtered => report.filtered += 1,
            Outcome::Diperfect => report.checked += 1,
            Outcome::Hit(verdict) => {
                report.checked += 1;
                if !reverify(d, filters, &verdict)? {
                    return Err(Error::Integrity(format!(
                        "explorer hit at index {i} did not re-verify"
                    )));
                }
                report.hits.push(ExploreHit {
                    index: i as u64,
                    edge_list: to_edge_list(d),
                    verdict,
                });
            }
        }
    }
    Ok(report)
}

fn take_space(s: &SuperOrientationSpace, budget: u64) -> Result<(Vec<Digraph>, bool)> {
    check_desk_cap(s.n(), "exploration")?;
    let size = s.indexable_size().unwrap_or(u64::MAX);
    let take = size.min(budget);
    Ok(((0..take).map(|i| s.digraph_at(i)).collect(), take < size))
}
