//! `diperfect`: generate digraph families, check path-partition properties,
//! run verification sweeps and explore for candidate digraphs.
//!
//! Exit codes: 0 = property holds / witness found / no discrepancies,
//! 1 = refuted / absent / discrepancies found, 2 = usage, parse or capacity
//! error, 3 = internal consistency failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use diperfect::cert::Certificate;
use diperfect::constructive::{theorem4_decide, verify_theorem4, SweepMode};
use diperfect::diperfection::{check_theorem3, is_alpha_diperfect, is_be_diperfect};
use diperfect::edgelist::{parse_edge_list, to_dot, to_edge_list};
use diperfect::explorer::{explore, Filter, Space};
use diperfect::generators::*;
use diperfect::paths::*;
use diperfect::recognition::{find_induced_pattern, is_perfect_graph, PatternKind};
use diperfect::{Digraph, Error, VertexSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "diperfect",
    version,
    about = "Path partitions orthogonal to maximum stable sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance of a named family.
    Gen(GenArgs),
    /// Answer one query about a digraph read from an edge-list file.
    Check {
        input: PathBuf,
        /// `partition S=..`, `be-partition S=..`, `alpha`, `be`,
        /// `pattern KIND`, `perfect`, `lemma1 S=..` or `theorem4`.
        #[arg(long)]
        query: String,
    },
    /// Run a verification sweep and print a JSON report.
    Verify(VerifyArgs),
    /// Search a space of digraphs for candidates that avoid the excluded
    /// patterns yet fail α-diperfection.
    Explore(ExploreArgs),
    /// Convert an edge-list file to another format.
    Export {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Dvec,
    Coc,
    AntiDirected,
    Blocking,
    Symmetric,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Dot,
}

#[derive(clap::Args)]
struct GenArgs {
    family: Family,
    #[arg(long)]
    k: Option<usize>,
    /// Orientation code for `coc` (one digit per edge: 0 forward, 1 backward, 2 both).
    #[arg(long)]
    code: Option<String>,
    /// Pole bits for the free vertices of an anti-directed cycle.
    #[arg(long, default_value_t = 0)]
    free_spin: u64,
    /// Orientation bits for a blocking cycle.
    #[arg(long, default_value_t = 0)]
    pattern: u64,
    /// For `symmetric`: close this edge-list file instead of using `--k`.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    Gm,
    Lemma1,
    T3,
    T4,
}

#[derive(clap::Args)]
struct VerifyArgs {
    theorem: Theorem,
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Largest vertex count for `gm`.
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads for `t4` (0 = all cores).
    #[arg(long, default_value_t = 0)]
    parallel: usize,
    /// Check this many seeded samples instead of the whole space.
    #[arg(long)]
    sampled: Option<usize>,
    /// Write each discrepancy as an edge-list file here.
    #[arg(long)]
    dump_dir: Option<PathBuf>,
    /// For `t3`: orientations only, no digons.
    #[arg(long)]
    digon_free: bool,
}

#[derive(clap::Args)]
struct ExploreArgs {
    /// `coc:K`, `cycle:N` (optionally `:digon-free`) or `random:N`.
    #[arg(long)]
    space: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    /// Check every generated digraph, skipping the pattern filters.
    #[arg(long)]
    no_filter: bool,
    #[arg(long, default_value_t = 0)]
    parallel: usize,
    /// Write each hit as an edge-list file here.
    #[arg(long)]
    dump_dir: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(ok) => ExitCode::from(if ok { 0 } else { 1 }),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = match e.downcast_ref::<Error>() {
                Some(Error::Integrity(_)) => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::Gen(args) => gen(args).map(|()| true),
        Command::Check { input, query } => check(&input, &query),
        Command::Verify(args) => verify(args),
        Command::Explore(args) => run_explore(args).map(|()| true),
        Command::Export { input, format, out } => {
            let d = read_digraph(&input)?;
            emit(&d, format, out.as_deref(), &stem(&input)).map(|()| true)
        }
    }
}

fn read_digraph(path: &Path) -> anyhow::Result<Digraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "D".into())
}

fn emit(d: &Digraph, format: Format, out: Option<&Path>, name: &str) -> anyhow::Result<()> {
    let text = match format {
        Format::Edgelist => to_edge_list(d),
        Format::Dot => to_dot(d, name),
    };
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn need_k(k: Option<usize>) -> anyhow::Result<usize> {
    k.ok_or_else(|| Error::Usage("this family needs --k".into()).into())
}

fn gen(args: GenArgs) -> anyhow::Result<()> {
    let (d, name) = match args.family {
        Family::Dvec => {
            let k = need_k(args.k)?;
            (gen_dvec(k)?.into_digraph(), format!("dvec{}", 2 * k + 1))
        }
        Family::Coc => {
            let k = need_k(args.k)?;
            let code: OrientationCode = args
                .code
                .as_deref()
                .ok_or_else(|| Error::Usage("coc needs --code".into()))?
                .parse()?;
            (
                gen_labeled_coc(k, &code)?.into_digraph(),
                format!("coc{}", 2 * k + 1),
            )
        }
        Family::AntiDirected => {
            let k = need_k(args.k)?;
            (
                gen_anti_directed(k, args.free_spin)?,
                format!("anti{}", 2 * k + 1),
            )
        }
        Family::Blocking => {
            let k = need_k(args.k)?;
            (
                gen_blocking(k, args.pattern)?,
                format!("blocking{}", 2 * k + 1),
            )
        }
        Family::Symmetric => match (&args.input, args.k) {
            (Some(path), None) => (symmetric_closure(&read_digraph(path)?), "symmetric".into()),
            (None, Some(k)) => (
                symmetric_coc(k)?.into_digraph(),
                format!("symcoc{}", 2 * k + 1),
            ),
            _ => bail!(Error::Usage(
                "symmetric needs exactly one of --k or --input".into()
            )),
        },
    };
    emit(&d, args.format, args.out.as_deref(), &name)
}

fn parse_set(arg: &str) -> anyhow::Result<VertexSet> {
    let list = arg
        .strip_prefix("S=")
        .ok_or_else(|| Error::Usage(format!("expected S=v1,v2,.. but got {arg:?}")))?;
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Usage(format!("invalid vertex {s:?}")).into())
        })
        .collect()
}

fn check(input: &Path, query: &str) -> anyhow::Result<bool> {
    let d = read_digraph(input)?;
    let mut words = query.split_whitespace();
    let keyword = words.next().unwrap_or("");
    let arg = words.next();
    if words.next().is_some() {
        bail!(Error::Usage(format!(
            "unexpected trailing words in query {query:?}"
        )));
    }
    let needs_arg = matches!(keyword, "partition" | "be-partition" | "pattern" | "lemma1");
    if needs_arg != arg.is_some() {
        bail!(Error::Usage(format!("malformed query {query:?}")));
    }
    let cert = match (keyword, arg) {
        ("partition", Some(s)) => {
            let s = parse_set(s)?;
            let p = orthogonal_partition(&d, s)?;
            Certificate::new(query, &d, p.is_some(), &p)
        }
        ("be-partition", Some(s)) => {
            let s = parse_set(s)?;
            let p = orthogonal_be_partition(&d, s)?;
            Certificate::new(query, &d, p.is_some(), &p)
        }
        ("alpha", None) => {
            let v = is_alpha_diperfect(&d)?;
            Certificate::new(query, &d, v.holds, &v.violation)
        }
        ("be", None) => {
            let v = is_be_diperfect(&d)?;
            Certificate::new(query, &d, v.holds, &v.violation)
        }
        ("pattern", Some(kind)) => {
            let kind: PatternKind = kind.parse()?;
            let hit = find_induced_pattern(&d, kind)?;
            Certificate::new(query, &d, hit.is_some(), &hit)
        }
        ("perfect", None) => Certificate::new(query, &d, is_perfect_graph(&d)?, &()),
        ("lemma1", Some(s)) => {
            let s = parse_set(s)?;
            let holds = lemma1_condition(&d, s)?;
            let lambdas: Vec<_> = s
                .iter()
                .map(|v| {
                    let sub = d.delete_vertex(v)?;
                    Ok(json!({ "deleted": v, "lambda": longest_path_order(&sub.digraph)? }))
                })
                .collect::<diperfect::Result<_>>()?;
            let witness = json!({ "threshold": d.n().div_ceil(s.len()), "longest-paths": lambdas });
            Certificate::new(query, &d, holds, &witness)
        }
        ("theorem4", None) => {
            let labeled = LabeledCoc::from_digraph(d.clone())?;
            let outcome = theorem4_decide(&labeled)?;
            Certificate::new(query, &d, outcome.partition().is_some(), &outcome)
        }
        _ => bail!(Error::Usage(format!(
            "unknown query {query:?} (expected partition, be-partition, alpha, be, pattern, perfect, lemma1 or theorem4)"
        ))),
    };
    println!("{}", cert.to_json());
    Ok(cert.result)
}

fn print_json(value: &impl serde::Serialize) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn dump(dir: Option<&Path>, files: &[(String, String)]) -> anyhow::Result<()> {
    let Some(dir) = dir else { return Ok(()) };
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (name, text) in files {
        let path = dir.join(name);
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn coc_instances(
    k: usize,
    sampled: Option<usize>,
    seed: u64,
) -> anyhow::Result<Vec<(String, LabeledCoc)>> {
    Ok(match sampled {
        Some(count) => sample_super_orientations(k, false, seed, count)?
            .into_iter()
            .map(|(code, d)| (code.to_string(), d))
            .collect(),
        None => {
            let space = SuperOrientationSpace::coc(k, false)?;
            let size = space.indexable_size().filter(|_| k <= 3).ok_or_else(|| {
                Error::Capability(format!(
                    "k = {k} is too large for an exhaustive sweep; use --sampled"
                ))
            })?;
            (0..size)
                .map(|i| {
                    Ok((
                        space.code_at(i).to_string(),
                        LabeledCoc::new(k, space.digraph_at(i))?,
                    ))
                })
                .collect::<diperfect::Result<_>>()?
        }
    })
}

fn verify(args: VerifyArgs) -> anyhow::Result<bool> {
    let dump_dir = args.dump_dir.as_deref();
    match args.theorem {
        Theorem::Gm => {
            if args.n == 0 {
                bail!(Error::Usage("--n must be positive".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let mut found = 0;
            let mut pi_le_alpha = 0;
            let mut failures = Vec::new();
            for i in 0..args.trials {
                let d = random_digraph(1 + i % args.n, &mut rng)?;
                let p = min_path_partition(&d)?;
                let ok = match gm_witness(&d, &p) {
                    Ok(s) => d.is_stable(s) && p.is_orthogonal_to(s),
                    Err(Error::Integrity(_)) => false,
                    Err(e) => return Err(e.into()),
                };
                found += ok as usize;
                pi_le_alpha += (p.len() <= d.alpha()) as usize;
                if !ok || p.len() > d.alpha() {
                    failures.push((format!("gm-{i}.el"), to_edge_list(&d)));
                }
            }
            dump(dump_dir, &failures)?;
            print_json(&json!({
                "theorem": "gm",
                "trials": args.trials,
                "max-n": args.n,
                "seed": args.seed,
                "witnesses-found": found,
                "pi-at-most-alpha": pi_le_alpha,
                "discrepancies": failures.len(),
            }))?;
            Ok(failures.is_empty())
        }
        Theorem::Lemma1 => {
            let instances = coc_instances(args.k, args.sampled, args.seed)?;
            let mut diperfect_count = 0;
            let mut failures = Vec::new();
            for (code, d) in &instances {
                let g = d.digraph();
                if !is_alpha_diperfect(g)?.holds {
                    continue;
                }
                diperfect_count += 1;
                for s in g.max_stable_sets().into_iter().filter(|s| s.len() >= 2) {
                    if !lemma1_condition(g, s)? {
                        failures.push((format!("lemma1-{code}.el"), to_edge_list(g)));
                        break;
                    }
                }
            }
            dump(dump_dir, &failures)?;
            print_json(&json!({
                "theorem": "lemma1",
                "k": args.k,
                "instances": instances.len(),
                "alpha-diperfect": diperfect_count,
                "discrepancies": failures.len(),
                "discrepant-codes": failures.iter().map(|(n, _)| n.trim_start_matches("lemma1-").trim_end_matches(".el")).collect::<Vec<_>>(),
            }))?;
            Ok(failures.is_empty())
        }
        Theorem::T3 => {
            let report = check_theorem3(args.k, args.digon_free)?;
            let space = SuperOrientationSpace::cycle(2 * args.k + 1, args.digon_free)?;
            let files = report
                .discrepancies
                .iter()
                .map(|code| {
                    Ok((
                        format!("t3-{code}.el"),
                        to_edge_list(&space.decode(&code.parse()?)?),
                    ))
                })
                .collect::<diperfect::Result<Vec<_>>>()?;
            dump(dump_dir, &files)?;
            print_json(&report)?;
            Ok(report.discrepancies.is_empty())
        }
        Theorem::T4 => {
            let mode = match args.sampled {
                Some(count) => SweepMode::Sampled {
                    seed: args.seed,
                    count,
                },
                None => SweepMode::Exhaustive,
            };
            let report = verify_theorem4(args.k, mode, args.parallel)?;
            let files = report
                .discrepancies
                .iter()
                .map(|disc| {
                    let d = gen_labeled_coc(args.k, &disc.code.parse()?)?;
                    Ok((format!("t4-{}.el", disc.code), to_edge_list(d.digraph())))
                })
                .collect::<diperfect::Result<Vec<_>>>()?;
            dump(dump_dir, &files)?;
            print_json(&report)?;
            Ok(report.discrepancy_count == 0)
        }
    }
}

fn run_explore(args: ExploreArgs) -> anyhow::Result<()> {
    let space: Space = args.space.parse()?;
    let filters: &[Filter] = if args.no_filter { &[] } else { &Filter::ALL };
    let report = explore(space, filters, args.seed, args.budget, args.parallel)?;
    let files: Vec<(String, String)> = report
        .hits
        .iter()
        .map(|h| (format!("hit-{}.el", h.index), h.edge_list.clone()))
        .collect();
    dump(args.dump_dir.as_deref(), &files)?;
    print_json(&report)
}
