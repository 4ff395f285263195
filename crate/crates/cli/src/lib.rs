//! Command-line front end: argument parsing, the commands, and exit codes.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation error, 3 when two
//! routes that must agree disagree.

pub mod document;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

use hochschild_core::aq::{crosscheck_aq, tau_rank_bound, AqAlgebra};
use hochschild_core::decomposition::{
    decompose, format_relations, run_algorithm, DecomposeOptions, Route,
};
use hochschild_core::hochschild::sc::{sc_hch_with, ScAlgebra};
use hochschild_core::hochschild::{hc_with, hh_with, EngineOptions, GradedDims, DEFAULT_SIZE_CAP};
use hochschild_core::linalg::Field;
use hochschild_core::quiver::{parse_algebra, MonomialAlgebra};
use hochschild_core::resolution::{gldim_probe, DimProbe};
use hochschild_core::skoldberg::{
    classify_truncated, hh_graded_truncated, hh_p_basic_cycle, hh_total_truncated,
    TruncatedPresentation,
};
use hochschild_core::Error;

use document::{
    AlgebraEcho, AqReport, Classification, DimensionReport, OrbitEntry, ResultDocument,
    SimpleEntry, Witness,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "hochschild",
    version,
    about = "Exact Hochschild and cyclic homology of quiver algebras"
)]
struct Cli {
    /// Print a JSON result document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on the number of chain basis elements in one complex.
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_CAP)]
    size_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hochschild homology dimensions.
    Hh(HomologyArgs),
    /// Cyclic homology dimensions.
    Hc(HomologyArgs),
    /// Hochschild cohomology dimensions from the bar cochain complex.
    Hch(CohomologyArgs),
    /// Orbits, cycle algebras, per-orbit homology and totals, cross-checked.
    Compute(DegreeArgs),
    /// Closed formulas for a truncated algebra.
    Skoldberg(SkoldbergArgs),
    /// Per-orbit breakdown of HH and HC.
    Decompose(DegreeArgs),
    /// What oriented cycles imply for the global dimension and for HH.
    Classify(ClassifyArgs),
    /// Global dimension probe over the simple modules.
    Gldim(GldimArgs),
    /// The algebras A_q = k<x,y>/(x², xy + q·yx, y²).
    Aq(AqArgs),
}

#[derive(Args, Debug)]
struct Input {
    /// Algebra file.
    file: PathBuf,
    /// Override the field characteristic of the file (0 or a prime).
    #[arg(long = "char")]
    characteristic: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Decomposition,
    Auto,
}

#[derive(Args, Debug)]
struct HomologyArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    /// Also report the path-length grading.
    #[arg(long)]
    graded: bool,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
}

#[derive(Args, Debug)]
struct CohomologyArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, default_value_t = 3)]
    max_n: usize,
}

#[derive(Args, Debug)]
struct DegreeArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
}

#[derive(Args, Debug)]
struct SkoldbergArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, default_value_t = 6)]
    max_p: usize,
    #[arg(long)]
    graded: bool,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    input: Input,
    /// Step budget for the global dimension probe of non-truncated inputs.
    #[arg(long, default_value_t = 10)]
    max_steps: usize,
}

#[derive(Args, Debug)]
struct GldimArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, default_value_t = 10)]
    max_steps: usize,
}

#[derive(Args, Debug)]
struct AqArgs {
    /// The parameter, as an integer or fraction such as `-3/2`.
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    /// Also compute Hochschild cohomology.
    #[arg(long)]
    cohomology: bool,
}

/// Output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Mismatch(_) => EXIT_MISMATCH,
            _ => EXIT_COMPUTATION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn mismatch(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_MISMATCH,
        message: message.into(),
    }
}

type CmdResult = std::result::Result<ResultDocument, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let opts = EngineOptions {
        size_cap: cli.size_cap,
    };
    let result = match &cli.command {
        Command::Hh(a) => cmd_hh(a, &opts),
        Command::Hc(a) => cmd_hc(a, &opts),
        Command::Hch(a) => cmd_hch(a, &opts),
        Command::Compute(a) => cmd_compute(a, &opts),
        Command::Skoldberg(a) => cmd_skoldberg(a),
        Command::Decompose(a) => cmd_decompose(a, &opts),
        Command::Classify(a) => cmd_classify(a, &opts),
        Command::Gldim(a) => cmd_gldim(a),
        Command::Aq(a) => cmd_aq(a),
    };
    match result {
        Ok(doc) => Outcome {
            code: EXIT_OK,
            stdout: if cli.json {
                doc.to_json() + "\n"
            } else {
                doc.to_text()
            },
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn load(input: &Input) -> std::result::Result<MonomialAlgebra, Failure> {
    let text = std::fs::read_to_string(&input.file)
        .map_err(|e| usage(format!("cannot read {}: {e}", input.file.display())))?;
    let a = parse_algebra(&text)?;
    match input.characteristic {
        None => Ok(a),
        Some(c) => Ok(a.with_field(Field::from_characteristic(c)?)),
    }
}

fn new_doc(command: &str, a: &MonomialAlgebra) -> ResultDocument {
    let mut doc = ResultDocument::new(command, a.field().to_string());
    doc.algebra = Some(AlgebraEcho::of(a));
    doc
}

fn enumerate(v: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    v.iter().copied().enumerate()
}

fn graded_table(g: &GradedDims, n_max: usize) -> BTreeMap<usize, BTreeMap<usize, usize>> {
    (0..=n_max)
        .map(|p| (p, g.graded.keys().map(|&q| (q, g.get(p, q))).collect()))
        .collect()
}

fn orbit_entries(d: &hochschild_core::decomposition::Decomposition) -> Vec<OrbitEntry> {
    d.orbits
        .iter()
        .map(|o| OrbitEntry {
            word: o.word.clone(),
            length: o.cycle.length(),
            relations: format_relations(&o.cycle.algebra),
            cycle_algebra_dim: o.cycle.algebra.dim(),
            method: o.hh_route.tag().to_string(),
            hh: (1..=d.n_max).map(|n| (n, o.hh[n])).collect(),
            hc: o
                .hc_positive
                .as_ref()
                .map(|h| (1..=d.n_max).map(|n| (n, h[n])).collect()),
        })
        .collect()
}

/// Shared by `hh` and `hc`.
fn cmd_homology(args: &HomologyArgs, opts: &EngineOptions, cyclic: bool) -> CmdResult {
    let a = load(&args.input)?;
    let name = if cyclic { "hc" } else { "hh" };
    let mut doc = new_doc(name, &a);
    let n_max = args.max_n;
    let direct = |a: &MonomialAlgebra| {
        if cyclic {
            hc_with(a, n_max, opts)
        } else {
            hh_with(a, n_max, opts)
        }
    };

    if args.method == Method::Direct {
        let g = direct(&a)?;
        doc.table(name, enumerate(&g.total), Route::Direct.tag());
        if args.graded {
            doc.graded = Some(BTreeMap::from([(
                name.to_string(),
                graded_table(&g, n_max),
            )]));
        }
        return Ok(doc);
    }

    let dec = decompose(
        &a,
        n_max,
        &DecomposeOptions {
            with_hc: cyclic,
            use_formula: true,
            engine: *opts,
        },
    )?;
    let dec_values = if cyclic {
        dec.hc().expect("requested")
    } else {
        dec.hh.clone()
    };
    let zero = hc_with(&a, 0, opts)?.total[0];
    let mut table = BTreeMap::new();
    table.insert(
        0,
        document::Entry {
            dim: zero,
            method: Route::Direct.tag().into(),
        },
    );
    for (n, &v) in dec_values.iter().enumerate().skip(1) {
        table.insert(
            n,
            document::Entry {
                dim: v,
                method: Route::Decomposition.tag().into(),
            },
        );
    }
    doc.tables.insert(name.to_string(), table);
    doc.orbits = orbit_entries(&dec);
    if cyclic {
        doc.notes.push(format!(
            "even degrees include {} classes of path-length degree 0 from the trivial paths",
            a.quiver().vertex_count()
        ));
    }

    if args.method == Method::Auto || args.graded {
        match direct(&a) {
            Ok(g) => {
                if args.method == Method::Auto {
                    if g.total[1..] != dec_values[1..] {
                        return Err(mismatch(format!(
                            "{name}: direct {:?} vs decomposition {:?}",
                            g.total, dec_values
                        )));
                    }
                    doc.notes
                        .push("direct complex agrees in every degree".into());
                }
                if args.graded {
                    doc.graded = Some(BTreeMap::from([(
                        name.to_string(),
                        graded_table(&g, n_max),
                    )]));
                }
            }
            Err(Error::SizeCap { size, cap }) => doc.notes.push(format!(
                "direct cross-check skipped: {size} chains exceed the cap of {cap}"
            )),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(doc)
}

fn cmd_hh(args: &HomologyArgs, opts: &EngineOptions) -> CmdResult {
    cmd_homology(args, opts, false)
}

fn cmd_hc(args: &HomologyArgs, opts: &EngineOptions) -> CmdResult {
    cmd_homology(args, opts, true)
}

fn cmd_hch(args: &CohomologyArgs, opts: &EngineOptions) -> CmdResult {
    let a = load(&args.input)?;
    let mut doc = new_doc("hch", &a);
    let values = sc_hch_with(&ScAlgebra::from_monomial(&a), args.max_n, opts)?;
    doc.table("hch", enumerate(&values), Route::Direct.tag());
    Ok(doc)
}

fn cmd_compute(args: &DegreeArgs, opts: &EngineOptions) -> CmdResult {
    let a = load(&args.input)?;
    let mut doc = new_doc("compute", &a);
    let report = match run_algorithm(&a, args.max_n, true, opts) {
        Err(Error::SizeCap { size, cap }) => {
            doc.notes.push(format!(
                "direct cross-check skipped: {size} chains exceed the cap of {cap}"
            ));
            run_algorithm(&a, args.max_n, false, opts)?
        }
        other => other?,
    };
    let tagged = |v: &[(usize, Route)]| -> BTreeMap<usize, document::Entry> {
        v.iter()
            .enumerate()
            .map(|(n, (d, r))| {
                (
                    n,
                    document::Entry {
                        dim: *d,
                        method: r.tag().into(),
                    },
                )
            })
            .collect()
    };
    doc.tables.insert("hh".into(), tagged(&report.hh));
    doc.tables.insert("hc".into(), tagged(&report.hc));
    if let Some(d) = &report.direct_hh {
        doc.table("hh_direct", enumerate(d), Route::Direct.tag());
    }
    if let Some(d) = &report.direct_hc {
        doc.table("hc_direct", enumerate(d), Route::Direct.tag());
    }
    if let Some(t) = TruncatedPresentation::from_algebra(&a) {
        let formula = hh_total_truncated(&t, args.max_n);
        let routed: Vec<usize> = report.hh.iter().map(|x| x.0).collect();
        if formula != routed {
            return Err(mismatch(format!(
                "hh: formula {formula:?} vs computed {routed:?}"
            )));
        }
        doc.table("hh_formula", enumerate(&formula), Route::Formula.tag());
    }
    doc.orbits = orbit_entries(&report.decomposition);
    Ok(doc)
}

fn cmd_skoldberg(args: &SkoldbergArgs) -> CmdResult {
    let a = load(&args.input)?;
    let t = TruncatedPresentation::from_algebra(&a)
        .ok_or_else(|| usage("the closed formulas need a truncated algebra (`truncate: n`)"))?;
    let mut doc = new_doc("skoldberg", &a);
    doc.table(
        "hh",
        enumerate(&hh_total_truncated(&t, args.max_p)),
        Route::Formula.tag(),
    );
    if args.graded {
        let by_q = hh_graded_truncated(&t, args.max_p);
        let by_p = (0..=args.max_p)
            .map(|p| (p, by_q.iter().map(|(&q, dims)| (q, dims[p])).collect()))
            .collect();
        doc.graded = Some(BTreeMap::from([("hh".to_string(), by_p)]));
    }
    Ok(doc)
}

fn cmd_decompose(args: &DegreeArgs, opts: &EngineOptions) -> CmdResult {
    let a = load(&args.input)?;
    let mut doc = new_doc("decompose", &a);
    let dec = decompose(
        &a,
        args.max_n,
        &DecomposeOptions {
            with_hc: true,
            use_formula: true,
            engine: *opts,
        },
    )?;
    doc.table("hh", enumerate(&dec.hh).skip(1), Route::Decomposition.tag());
    doc.table(
        "hc",
        enumerate(&dec.hc().expect("requested")).skip(1),
        Route::Decomposition.tag(),
    );
    doc.orbits = orbit_entries(&dec);
    doc.notes
        .push("degree 0 is not part of the orbit sum".into());
    Ok(doc)
}

fn witness_entry(w: &hochschild_core::skoldberg::CycleWitness, a: &MonomialAlgebra) -> Witness {
    Witness {
        cycle: w.cycle.format(a.quiver()),
        l: w.l,
        n: w.n,
        progression_start: w.progression.start,
        progression_step: w.progression.step,
        members: w
            .progression
            .members(5)
            .into_iter()
            .map(|p| (p, hh_p_basic_cycle(w.l, w.n, p, a.field())))
            .collect(),
    }
}

fn cmd_classify(args: &ClassifyArgs, opts: &EngineOptions) -> CmdResult {
    let a = load(&args.input)?;
    let mut doc = new_doc("classify", &a);
    if let Some(t) = TruncatedPresentation::from_algebra(&a) {
        let c = classify_truncated(&t);
        let statement = match &c.witness {
            None => "quiver has no oriented cycle; gl.dim < ∞ and hh.dim = 0".to_string(),
            Some(w) => format!("quiver has oriented cycle; hh.dim = ∞; witness l={}", w.l),
        };
        doc.classification = Some(Classification {
            truncation: Some(t.n()),
            acyclic: c.acyclic,
            gldim_finite: Some(c.gldim_finite),
            hhdim_zero: Some(c.hhdim_zero),
            statement,
            witness: c.witness.as_ref().map(|w| witness_entry(w, &a)),
            gldim_probe: None,
        });
        return Ok(doc);
    }
    // General monomial algebras: bounded probes only.
    let acyclic = !a.quiver().has_oriented_cycle();
    let probe = gldim_probe(&a, args.max_steps).gldim;
    let hh = match hh_with(&a, 4, opts) {
        Ok(g) => Some(g.total),
        Err(Error::SizeCap { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    if let Some(h) = &hh {
        doc.table("hh", enumerate(h), Route::Direct.tag());
    }
    let vanishing = hh.as_ref().map(|h| h[1..].iter().all(|&d| d == 0));
    let statement = if acyclic {
        "quiver has no oriented cycle; gl.dim < ∞ and hh_n = 0 for n ≥ 1".to_string()
    } else {
        let hh_part = match vanishing {
            Some(true) => "hh_n = 0 for 1 ≤ n ≤ 4",
            Some(false) => "hh_n ≠ 0 for some 1 ≤ n ≤ 4",
            None => "hh not computed (size cap)",
        };
        format!("quiver has oriented cycle; gl.dim {probe} (probe); {hh_part} (probe, not proof)")
    };
    if let (DimProbe::Exactly(_), Some(false)) = (probe, vanishing) {
        return Err(mismatch(
            "finite global dimension but nonzero higher Hochschild homology",
        ));
    }
    doc.classification = Some(Classification {
        truncation: None,
        acyclic,
        gldim_finite: match probe {
            DimProbe::Exactly(_) => Some(true),
            DimProbe::Exceeds(_) => None,
        },
        hhdim_zero: None,
        statement,
        witness: None,
        gldim_probe: Some(probe.to_string()),
    });
    Ok(doc)
}

fn cmd_gldim(args: &GldimArgs) -> CmdResult {
    let a = load(&args.input)?;
    let mut doc = new_doc("gldim", &a);
    let report = gldim_probe(&a, args.max_steps);
    doc.dimension = Some(DimensionReport {
        gldim: report.gldim.to_string(),
        exact: match report.gldim {
            DimProbe::Exactly(d) => Some(d),
            DimProbe::Exceeds(_) => None,
        },
        max_steps: args.max_steps,
        simples: report
            .simples
            .iter()
            .enumerate()
            .map(|(v, (p, trace))| SimpleEntry {
                vertex: a.quiver().vertex_name(v).to_string(),
                projdim: p.to_string(),
                cover_dims: trace.steps.iter().map(|s| s.cover_dim).collect(),
                syzygy_dims: trace.steps.iter().map(|s| s.syzygy_dim).collect(),
            })
            .collect(),
    });
    Ok(doc)
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    (den != BigInt::from(0)).then(|| BigRational::new(num, den))
}

/// Degrees compared against the bar complex.
const AQ_CROSSCHECK_MAX_N: usize = 4;

fn cmd_aq(args: &AqArgs) -> CmdResult {
    let q = parse_rational(&args.q)
        .ok_or_else(|| usage(format!("`{}` is not a rational number", args.q)))?;
    let field = Field::from_characteristic(args.characteristic)?;
    let a = AqAlgebra::new(&q, field)?;
    let mut doc = ResultDocument::new("aq", field.to_string());
    let hh = a.hh(args.max_n)?;
    doc.table("hh", enumerate(&hh), Route::Bgms.tag());
    let check_n = args.max_n.min(AQ_CROSSCHECK_MAX_N);
    let check = crosscheck_aq(&a, check_n)?;
    doc.table("hh_bar", enumerate(&check.bar_hh), Route::Direct.tag());
    if args.cohomology {
        doc.table("hch", enumerate(&a.hch(args.max_n)?), Route::Bgms.tag());
        doc.table("hch_bar", enumerate(&check.bar_hch), Route::Direct.tag());
    }
    let ranks: BTreeMap<usize, usize> = a
        .tau_ranks(args.max_n + 1)
        .into_iter()
        .enumerate()
        .map(|(k, r)| (k + 1, r))
        .collect();
    let rank_bounds_hold = ranks.iter().all(|(&n, &r)| r <= tau_rank_bound(n));
    doc.aq = Some(AqReport {
        q: a.q().to_string(),
        root_of_unity_order: a.root_of_unity_order(),
        tau_ranks: ranks,
        rank_bounds_hold,
        crosscheck_max_n: check_n,
    });
    doc.notes.push(
        "hh_0 = dim A/[A,A] and [A,A] is spanned by (1+q)·yx, so hh_0 = 4 exactly when q = -1 and 3 otherwise".into(),
    );
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatch_maps_to_exit_3() {
        let f: Failure = Error::Mismatch("hh_2: 1 vs 2".into()).into();
        assert_eq!(f.code, EXIT_MISMATCH);
        assert!(f.message.contains("1 vs 2"));
    }

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational("-3/2"),
            Some(BigRational::new((-3).into(), 2.into()))
        );
        assert_eq!(
            parse_rational("4"),
            Some(BigRational::from_integer(4.into()))
        );
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
