//! The `ehyper` command line.
//!
//! Exit codes: 0 for a verified positive answer, 1 for a verified negative
//! answer, a structured failure or an exhausted budget, 2 for usage errors
//! and malformed input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ehyper_core::bipartite::{transversals_all, TripartiteKind, TripartiteWitness};
use ehyper_core::combin::{binom, Combinations};
use ehyper_core::constructions::{self, random_colouring, random_graph, random_hypergraph, random_lift, tight_cycle5};
use ehyper_core::density::{
    self, dichotomy, embed, is_bidense, is_induced_copy, is_tridense, lemma_params, theorem_params,
    theorem_params_log, verify_certificate, BiDensity, DensityMode, DensityParams, DichotomyOutcome,
    DichotomySettings, EmbedOptions, EmbedOutcome, FailureCertificate, FailureKind, TriDensity,
};
use ehyper_core::extraction::{
    dense_guarantee, dense_preconditions, find_ksss, find_kst_dense, find_kst_pigeonhole, find_kst_pigeonhole_s,
    KsssOverrides, KstMode, KstWitness,
};
use ehyper_core::oracles;
use ehyper_core::rational::{self, Rational};
use ehyper_core::stepup::{
    count_bound_check, find_avoided_pattern, max_mono_clique, realizable_pattern_census, stepping_up_verify,
    AvoidedPattern, ColouredPattern, StepUpColouring,
};
use ehyper_core::{
    BipartiteGraph, EdgeColouring, Error as CoreError, SearchBudget, TripartiteSystem, TupleColouring,
    UniformHypergraph,
};

use crate::acceptance::{self, Mutation, SuiteOptions};
use crate::config;
use crate::format;
use crate::parallel::{census_par, kst_exact_par};
use crate::record::{ResultRecord, Verdict};
use crate::WallClock;

#[derive(Parser, Debug)]
#[command(name = "ehyper", version, about = "Searches and verified witnesses for 3-uniform hypergraph colourings")]
pub struct Cli {
    /// `key = value` file expanded into arguments before parsing.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Log intermediate quantities to stderr.
    #[arg(long, global = true)]
    pub trace: bool,
    /// Seed for every randomized path. Required wherever randomness is used.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Node cap for exhaustive searches.
    #[arg(long, global = true)]
    pub budget_nodes: Option<u64>,
    /// Wall-clock cap for exhaustive searches.
    #[arg(long, global = true)]
    pub budget_seconds: Option<f64>,
    /// Where to write the instance or witness.
    #[arg(short = 'o', long = "output", global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    /// Append a JSON result record to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub record: Option<PathBuf>,
    /// Include elapsed time in records.
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Step-up colourings.
    #[command(subcommand)]
    Stepup(StepupCmd),
    /// Complete bipartite and tripartite extraction.
    #[command(subcommand)]
    Extract(ExtractCmd),
    /// Density tests, embedding and the embed-or-extract driver.
    #[command(subcommand)]
    Density(DensityCmd),
    /// Instance generators.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Brute-force searches.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Verification suites.
    #[command(subcommand)]
    Suite(SuiteCmd),
}

#[derive(Subcommand, Debug)]
pub enum StepupCmd {
    /// Step up a base colouring (from BASE, or random with --k and --n).
    Build {
        base: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Largest monochromatic clique of a step-up file or colouring.
    Clique {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        colour: u8,
    },
    /// Distinct coloured patterns on h-subsets.
    Census {
        file: PathBuf,
        #[arg(long)]
        h: usize,
        /// Exhaustive when C(2^n, h) is at most this, sampled otherwise.
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        /// Report the first pattern that never occurs.
        #[arg(long)]
        avoided: bool,
    },
    /// Exact comparison of the pattern counts A, A' and B.
    BoundCheck {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        h: u32,
    },
    /// Step up BASE and compare its clique sizes with 2l + k - 5.
    Verify {
        base: PathBuf,
        #[arg(long)]
        ell: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KstModeArg {
    Exact,
    Greedy,
    Pigeonhole,
}

#[derive(Args, Debug, Clone, Default)]
pub struct OverrideArgs {
    #[arg(long)]
    pub s1: Option<usize>,
    #[arg(long)]
    pub s2: Option<usize>,
    #[arg(long)]
    pub t2: Option<usize>,
    #[arg(long)]
    pub t3: Option<usize>,
}

impl OverrideArgs {
    fn get(&self) -> KsssOverrides {
        KsssOverrides {
            s1: self.s1,
            s2: self.s2,
            t2: self.t2,
            t3: self.t3,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum ExtractCmd {
    /// K_{s,t} in a bipartite graph.
    Kst {
        file: PathBuf,
        #[arg(long)]
        s: Option<usize>,
        /// Edge density bound; sets s = ceil(eps |A|) in pigeonhole mode.
        #[arg(long)]
        eps: Option<String>,
        #[arg(long, value_enum, default_value = "exact")]
        mode: KstModeArg,
        /// Smallest |T| counted as success.
        #[arg(long, default_value_t = 1)]
        t: usize,
    },
    /// K_{s,s,s} of G3 across a tripartite system.
    Ksss {
        system: PathBuf,
        #[arg(long)]
        g3: PathBuf,
        /// Triangle density; defaults to |G3| / n^3.
        #[arg(long)]
        delta: Option<String>,
        #[arg(long, default_value = "1/8")]
        eta: String,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[command(flatten)]
        overrides: OverrideArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum DensityCmd {
    /// Bi-density of a bipartite file, or tri-density of a 3-uniform instance.
    Check {
        file: PathBuf,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        rho: String,
        /// Colour whose share is tested (tri-density).
        #[arg(long, default_value_t = 0)]
        colour: u8,
        #[arg(long)]
        sampled: bool,
        #[arg(long, default_value_t = 256)]
        samples: u32,
    },
    /// Embed PATTERN into HOST vertex by vertex.
    Embed {
        host: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        rho: String,
        #[arg(long, default_value_t = 64)]
        samples: u32,
        #[arg(long)]
        no_expand: bool,
        #[arg(long)]
        no_invariants: bool,
    },
    /// Embed PATTERN into HOST, or extract a monochromatic K_{s,s,s}.
    Dichotomy {
        host: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        rho: String,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long)]
        eps: Option<String>,
        #[arg(long)]
        eta: Option<String>,
        #[arg(long, default_value_t = 64)]
        samples: u32,
        #[command(flatten)]
        overrides: OverrideArgs,
    },
    /// Parameter values for a pattern on t vertices.
    Params {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        log_n: Option<f64>,
        /// Also print the embedding thresholds at this ρ.
        #[arg(long)]
        rho: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ConstructCmd {
    /// Random graph G(n, p).
    Gn {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "1/2")]
        p: String,
    },
    /// Lift of BASE (or of G(n, p)) to one uniformity higher.
    Lift {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long, default_value = "1/2")]
        p: String,
    },
    /// The tight cycle on five vertices.
    Tc5,
    /// Random k-uniform hypergraph.
    Hypergraph {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "1/2")]
        p: String,
    },
    /// Random colouring of the k-subsets.
    Colouring {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        colours: u8,
    },
    /// Random bipartite graph on A = 0..a, B = a..a+b.
    Bipartite {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long, default_value = "1/2")]
        p: String,
    },
    /// Tripartite system with parts of the given sizes and random links.
    Tripartite {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<u32>,
        #[arg(long, default_value = "1")]
        p: String,
    },
    /// 3-uniform hypergraph keeping each triangle of SYSTEM with probability p.
    Triangles {
        system: PathBuf,
        #[arg(long, default_value = "1")]
        p: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCmd {
    /// Largest clique (all k-subsets in COLOUR; colour 0 = edge).
    Clique {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        colour: u8,
    },
    /// Largest independent set of a hypergraph.
    Independent { file: PathBuf },
    /// Induced copy of PATTERN in HOST.
    Induced {
        host: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
    },
    /// s-subset of A with at least t common neighbours.
    Kst {
        file: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// Complete K_{s,s,s} of G3 across SYSTEM.
    Ksss {
        system: PathBuf,
        #[arg(long)]
        g3: PathBuf,
        #[arg(long)]
        s: usize,
    },
    /// Every total preorder on m elements.
    Preorders {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MutationArg {
    SwapExtrema,
}

#[derive(Subcommand, Debug)]
pub enum SuiteCmd {
    /// Run the acceptance criteria.
    Acceptance {
        /// Criterion ids or group names, comma separated.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Run against a deliberately broken implementation.
        #[arg(long, value_enum)]
        mutate: Option<MutationArg>,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or input; exit 2.
    Usage(String),
    /// A structured failure; exit 1.
    Failure(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Unverified(_) | CoreError::OverBudget { .. } => CliError::Failure(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type Run<T> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> Run<T> {
    Err(CliError::Usage(msg.into()))
}

/// What a command produced.
struct Report {
    /// Human-readable summary.
    text: String,
    /// Instance or witness text written by `-o`.
    artefact: Option<String>,
    record: ResultRecord,
}

struct Ctx<'a> {
    threads: usize,
    seed: Option<u64>,
    budget: SearchBudget<'a>,
    trace: bool,
}

impl Ctx<'_> {
    fn seed(&self, what: &str) -> Run<u64> {
        self.seed
            .ok_or_else(|| CliError::Usage(format!("{what} is randomized: pass --seed")))
    }
}

/// Arguments that change the result, for the record's config echo.
fn config_echo(argv: &[String]) -> Value {
    let mut out = Vec::new();
    let mut it = argv.iter().skip(1);
    while let Some(a) = it.next() {
        match a.as_str() {
            "--threads" | "--record" | "-o" | "--output" => {
                it.next();
            }
            "--trace" | "--timings" => {}
            _ if a.starts_with("--threads=") || a.starts_with("--record=") || a.starts_with("--output=") => {}
            _ => out.push(a.clone()),
        }
    }
    json!({ "args": out })
}

pub fn run(argv: Vec<String>) -> i32 {
    let argv = match config::expand_argv(argv) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e:#}");
            return 2;
        }
    };
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let level = if cli.trace { log::LevelFilter::Trace } else { log::LevelFilter::Warn };
    let _ = env_logger::Builder::new().filter_level(level).format_timestamp(None).try_init();

    let clock = match cli.budget_seconds {
        Some(s) if s.is_finite() && s >= 0.0 => Some(WallClock::new(Duration::from_secs_f64(s))),
        Some(_) => {
            eprintln!("error: --budget-seconds must be a nonnegative number");
            return 2;
        }
        None => None,
    };
    let mut budget = SearchBudget {
        node_cap: cli.budget_nodes,
        deadline: None,
    };
    if let Some(c) = &clock {
        budget = budget.with_deadline(c);
    }
    let ctx = Ctx {
        threads: cli.threads.unwrap_or_else(acceptance::default_threads).max(1),
        seed: cli.seed,
        budget,
        trace: cli.trace,
    };
    let start = Instant::now();
    let echo = config_echo(&argv);
    match execute(&cli.command, &ctx, echo) {
        Ok(mut rep) => {
            if cli.timings {
                rep.record.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            match (&rep.artefact, &cli.output) {
                (Some(a), Some(path)) => {
                    if let Err(e) = std::fs::write(path, a) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return 2;
                    }
                    print!("{}", rep.text);
                }
                (Some(a), None) if rep.text.is_empty() => print!("{a}"),
                _ => print!("{}", rep.text),
            }
            if let Some(path) = &cli.record {
                if let Err(e) = rep.record.append_to(path) {
                    eprintln!("error: cannot append to {}: {e}", path.display());
                    return 2;
                }
            }
            rep.record.verdict.exit_code()
        }
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(CliError::Failure(m)) => {
            eprintln!("error: {m}");
            1
        }
    }
}

fn read(path: &Path) -> Run<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn parsed<T>(path: &Path, r: Result<T, format::ParseError>) -> Run<T> {
    r.map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Run<EdgeColouring> {
    parsed(path, format::parse_instance(&read(path)?))
}

fn load_hypergraph(path: &Path) -> Run<UniformHypergraph> {
    parsed(path, format::parse_hypergraph(&read(path)?))
}

fn load_bipartite(path: &Path) -> Run<BipartiteGraph> {
    parsed(path, format::parse_bipartite(&read(path)?))
}

fn load_tripartite(path: &Path) -> Run<TripartiteSystem> {
    parsed(path, format::parse_tripartite(&read(path)?))
}

fn first_token(text: &str) -> Option<&str> {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .and_then(|l| l.split_whitespace().next())
}

fn rat(name: &str, s: &str) -> Run<Rational> {
    rational::parse(s).ok_or_else(|| CliError::Usage(format!("--{name}: cannot parse {s:?} as a rational")))
}

fn join(ids: &[u32]) -> String {
    ids.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn report(command: &str, echo: Value, verdict: Verdict, text: String) -> Report {
    let mut record = ResultRecord::new(command, echo);
    record.verdict = verdict;
    Report {
        text,
        artefact: None,
        record,
    }
}

fn positive_if(ok: bool) -> Verdict {
    if ok {
        Verdict::Positive
    } else {
        Verdict::Negative
    }
}

fn execute(cmd: &Command, ctx: &Ctx<'_>, echo: Value) -> Run<Report> {
    match cmd {
        Command::Stepup(c) => stepup(c, ctx, echo),
        Command::Extract(c) => extract(c, ctx, echo),
        Command::Density(c) => density_cmd(c, ctx, echo),
        Command::Construct(c) => construct(c, ctx, echo),
        Command::Oracle(c) => oracle(c, ctx, echo),
        Command::Suite(c) => suite(c, ctx, echo),
    }
}

/// Every `uniformity`-subset of `w` has `colour`.
fn mono_ok<C: TupleColouring + ?Sized>(c: &C, w: &[u32], colour: u8) -> bool {
    let u = c.uniformity();
    Combinations::new(w.len() as u32, u).all(|sub| {
        let img: Vec<u32> = sub.iter().map(|&i| w[i as usize]).collect();
        c.colour(&img) == colour
    })
}

fn load_stepup_or_instance(path: &Path) -> Run<Result<StepUpColouring, EdgeColouring>> {
    let text = read(path)?;
    if first_token(&text) == Some("stepup") {
        Ok(Ok(parsed(path, format::parse_stepup(&text))?))
    } else {
        Ok(Err(parsed(path, format::parse_instance(&text))?))
    }
}

fn pattern_text(p: &ColouredPattern) -> String {
    p.colours().iter().map(u8::to_string).collect()
}

fn stepup(cmd: &StepupCmd, ctx: &Ctx<'_>, echo: Value) -> Run<Report> {
    match cmd {
        StepupCmd::Build { base, k, n } => {
            let base = match (base, n) {
                (Some(path), _) => load_instance(path)?,
                (None, Some(n)) => random_colouring(*k, *n, 2, ctx.seed("a random base")?, 1 << 24)?,
                (None, None) => return usage("give a BASE file or --n for a random base"),
            };
            let s = StepUpColouring::new(base)?;
            let mut rep = report(
                "stepup build",
                echo,
                Verdict::Positive,
                String::new(),
            );
            rep.record.details = json!({"k": s.base_uniformity(), "n": s.dimension(), "vertices": s.vertex_count()});
            rep.artefact = Some(format::write_stepup(&s));
            Ok(rep)
        }
        StepupCmd::Clique { file, colour } => {
            let loaded = load_stepup_or_instance(file)?;
            let c: &dyn TupleColouring = match &loaded {
                Ok(s) => s,
                Err(c) => c,
            };
            if *colour >= c.colour_count() {
                return usage(format!("colour {colour} out of range"));
            }
            let r = max_mono_clique(c, *colour, &ctx.budget)?;
            if !r.vacuous && !mono_ok(c, &r.witness, *colour) {
                return Err(CliError::Failure("clique witness failed re-check".into()));
            }
            let verdict = if r.incomplete { Verdict::Exhausted } else { Verdict::Positive };
            let text = format!(
                "size {}\nwitness {}\nvacuous {}\nincomplete {}\nnodes {}\n",
                r.size,
                join(&r.witness),
                r.vacuous,
                r.incomplete,
                r.nodes
            );
            let mut rep = report("stepup clique", echo, verdict, text);
            rep.record = rep.record.with_witness(json!(r.witness));
            rep.record.details = json!({"size": r.size, "vacuous": r.vacuous, "incomplete": r.incomplete});
            rep.artefact = Some(format::write_parts(&[r.witness.clone()]));
            Ok(rep)
        }
        StepupCmd::Census { file, h, samples, avoided } => {
            let s = parsed(file, format::parse_stepup(&read(file)?))?;
            if *h < s.uniformity() || *h as u64 > s.vertex_count() as u64 {
                return usage(format!("need {} <= h <= {}", s.uniformity(), s.vertex_count()));
            }
            let total = binom(s.vertex_count() as u64, *h as u64);
            let seed = if total <= *samples { 0 } else { ctx.seed("a sampled census")? };
            let census = if total <= *samples {
                census_par(&s, *h, ctx.threads)
            } else {
                realizable_pattern_census(&s, *h, *samples, seed)?
            };
            let mut text = format!(
                "h {h}\npatterns {}\nexamined {}\nexhaustive {}\n",
                census.patterns.len(),
                census.examined,
                census.exhaustive
            );
            let mut details = json!({"patterns": census.patterns.len(), "examined": census.examined, "exhaustive": census.exhaustive});
            if *avoided {
                let a = find_avoided_pattern(&s, *h, *samples, seed)?;
                let desc = match &a {
                    AvoidedPattern::Found(p) => format!("never occurs {}", pattern_text(p)),
                    AvoidedPattern::Candidate(p) => format!("not seen in the sample {}", pattern_text(p)),
                    AvoidedPattern::AllRealized => "every pattern occurs".into(),
                    AvoidedPattern::Budget => "pattern space too large".into(),
                };
                writeln!(text, "avoided {desc}").unwrap();
                details["avoided"] = json!(desc);
            }
            let mut rep = report("stepup census", echo, Verdict::Positive, text);
            rep.record.details = details;
            Ok(rep)
        }
        StepupCmd::BoundCheck { k, h } => {
            let b = count_bound_check(*h, *k)?;
            let text = format!(
                "A = {}\nA' = {}\nB = {}\nA < B: {}\nA' < B: {}\nclosed form below one: {}\nclaimed range: {}\n",
                b.a, b.a_relaxed, b.b, b.a_below_b, b.a_relaxed_below_b, b.closed_form_below_one, b.claimed
            );
            let mut rep = report("stepup bound-check", echo, positive_if(b.a_below_b), text);
            rep.record.details = json!({
                "a": b.a.to_string(), "a_relaxed": b.a_relaxed.to_string(), "b": b.b.to_string(),
                "a_below_b": b.a_below_b, "a_relaxed_below_b": b.a_relaxed_below_b,
            });
            Ok(rep)
        }
        StepupCmd::Verify { base, ell } => {
            let base = load_instance(base)?;
            let r = stepping_up_verify(&base, *ell, &ctx.budget)?;
            let text = format!(
                "base clique {}\nell {}\nred {}{}\nblue {}{}\nbound {}\nbelow bound: {}\n",
                r.base_clique.size,
                r.ell,
                r.red.size,
                if r.red.incomplete { " (incomplete)" } else { "" },
                r.blue.size,
                if r.blue.incomplete { " (incomplete)" } else { "" },
                r.target,
                r.holds
            );
            let verdict = if r.red.incomplete || r.blue.incomplete {
                Verdict::Exhausted
            } else {
                positive_if(r.holds)
            };
            let mut rep = report("stepup verify", echo, verdict, text);
            rep.record.details = json!({"ell": r.ell, "red": r.red.size, "blue": r.blue.size, "target": r.target, "holds": r.holds});
            Ok(rep)
        }
    }
}

fn kst_text(w: &KstWitness) -> String {
    format::write_parts(&[w.u.clone(), w.t.clone()])
}

fn extract(cmd: &ExtractCmd, ctx: &Ctx<'_>, echo: Value) -> Run<Report> {
    match cmd {
        ExtractCmd::Kst { file, s, eps, mode, t } => {
            let g = load_bipartite(file)?;
            let eps = eps.as_deref().map(|e| rat("eps", e)).transpose()?;
            let mut lines = String::new();
            let (w, exhausted) = match mode {
                KstModeArg::Pigeonhole => {
                    let r = match (&eps, s) {
                        (Some(e), _) => find_kst_pigeonhole(&g, e)?,
                        (None, Some(s)) => find_kst_pigeonhole_s(&g, *s)?,
                        (None, None) => return usage("pigeonhole mode needs --eps or --s"),
                    };
                    let b = g.b().len() as u64;
                    writeln!(lines, "s {}\nguaranteed t {}\nprecondition {}", r.s, r.guaranteed_t, r.precondition_met).unwrap();
                    let _ = b;
                    (r.witness, false)
                }
                KstModeArg::Exact | KstModeArg::Greedy => {
                    let Some(s) = *s else { return usage("--s is required") };
                    if s == 0 || s > g.a().len() {
                        return usage(format!("need 1 <= s <= |A| = {}", g.a().len()));
                    }
                    if let Some(e) = &eps {
                        writeln!(
                            lines,
                            "guaranteed t {}\npreconditions {}",
                            dense_guarantee(e, s, g.b().len()),
                            dense_preconditions(&g, e, s)
                        )
                        .unwrap();
                    }
                    if matches!(mode, KstModeArg::Greedy) {
                        (find_kst_dense(&g, s, KstMode::Greedy, &ctx.budget)?, false)
                    } else {
                        let total = binom(g.a().len() as u64, s as u64);
                        if ctx.budget.node_cap.is_some_and(|cap| total > cap) {
                            let mut rep = report(
                                "extract kst",
                                echo,
                                Verdict::Exhausted,
                                format!("budget: {total} subsets exceed the node cap\n"),
                            );
                            rep.record.details = json!({"subsets": total});
                            return Ok(rep);
                        }
                        (kst_exact_par(&g, s, ctx.threads)?, false)
                    }
                }
            };
            if !w.verify(&g) {
                return Err(CliError::Failure("K_{s,t} witness failed re-check".into()));
            }
            let ok = w.t.len() >= *t;
            let text = format!("{lines}{}t {}\n{}", if lines.is_empty() || lines.ends_with('\n') { "" } else { "\n" }, w.t.len(), kst_text(&w));
            let mut rep = report("extract kst", echo, if exhausted { Verdict::Exhausted } else { positive_if(ok) }, text);
            rep.record = rep.record.with_witness(json!({"u": w.u, "t": w.t}));
            rep.record.details = json!({"s": w.u.len(), "t": w.t.len()});
            rep.artefact = Some(kst_text(&w));
            Ok(rep)
        }
        ExtractCmd::Ksss { system, g3, delta, eta, s, overrides } => {
            let sys = load_tripartite(system)?;
            let g3 = load_hypergraph(g3)?;
            let eta = rat("eta", eta)?;
            let delta = match delta {
                Some(d) => rat("delta", d)?,
                None => {
                    let n = sys.max_part() as u64;
                    let covered = sys.triangles().filter(|t| g3.contains_unsorted(t)).count() as u64;
                    if covered == 0 {
                        return usage("G3 covers no triangle; pass --delta");
                    }
                    rational::from_int(covered) / rational::from_int(n * n * n)
                }
            };
            let r = find_ksss(&sys, &g3, &delta, &eta, *s, &overrides.get())?;
            let mut text = format!(
                "params s1 {} s2 {} t2 {} t3 {}\nsize condition {}\n",
                r.params.s1, r.params.s2, r.params.t2, r.params.t3, r.preconditions.size_condition
            );
            for st in &r.stages {
                writeln!(text, "stage {:?}: {}", st.stage, st.detail).unwrap();
            }
            let mut rep = match &r.outcome {
                Ok(w) => {
                    let [a, b, c] = &w.parts;
                    if !transversals_all(&g3, a, b, c, 0)? {
                        return Err(CliError::Failure("K_{s,s,s} witness failed re-check".into()));
                    }
                    text.push_str(&format::write_parts(&w.parts));
                    let mut rep = report("extract ksss", echo, Verdict::Positive, text);
                    rep.record = rep.record.with_witness(json!(w.parts));
                    rep.artefact = Some(format::write_parts(&w.parts));
                    rep
                }
                Err(f) => {
                    writeln!(text, "failed at {:?}: {} ({} of {})", f.stage, f.reason, f.available, f.required).unwrap();
                    let mut rep = report("extract ksss", echo, Verdict::Negative, text);
                    rep.record.details = json!({"stage": format!("{:?}", f.stage), "reason": f.reason});
                    rep
                }
            };
            if rep.record.details.is_null() {
                rep.record.details = json!({"stages": r.stages.len()});
            }
            Ok(rep)
        }
    }
}

fn certificate_text(c: &FailureCertificate, h: &EdgeColouring, g: &EdgeColouring) -> Run<String> {
    let mut s = String::new();
    writeln!(s, "failed vertex {}", c.vertex).unwrap();
    writeln!(s, "rho {}", c.rho).unwrap();
    writeln!(s, "images {}", join(&c.state.images)).unwrap();
    for (j, sv) in c.state.survivors.iter().enumerate() {
        writeln!(s, "survivors {j} {}", join(sv)).unwrap();
    }
    for ((j, k), link) in &c.state.links {
        writeln!(s, "link {j} {k} edges {}", link.edge_count()).unwrap();
    }
    writeln!(s, "candidates {}", join(&c.candidates)).unwrap();
    match &c.kind {
        FailureKind::NoCandidates => writeln!(s, "kind no-candidates").unwrap(),
        FailureKind::NotDense { j, k, family, pair_counts } => {
            writeln!(s, "kind not-dense {j} {k}").unwrap();
            for ((a, b), n) in pair_counts {
                writeln!(s, "pair {a} {b} count {n}").unwrap();
            }
            for m in family {
                writeln!(s, "member {} edges {}", m.w, m.edges).unwrap();
                writeln!(s, "  y_j {}", join(&m.y_j)).unwrap();
                writeln!(s, "  y_k {}", join(&m.y_k)).unwrap();
            }
            if let Some(tw) = c.tri_density_witness(h, g)? {
                writeln!(s, "triangles {} coloured {} colour {}", tw.triangles, tw.coloured, tw.colour).unwrap();
            }
        }
    }
    Ok(s)
}

fn trace_steps(rep: &density::EmbedReport) {
    let p = &rep.params;
    for st in &rep.steps {
        let i = st.vertex + 1;
        log::trace!(
            "vertex {} -> {}: |W| = {}, rejected {}, eps_{i}^2 = {}, c_{i}^2 = {}, rho^{i} = {}, survivors {:?}, size condition {}",
            st.vertex,
            st.image,
            st.candidates,
            st.rejected,
            p.eps_sq(i),
            p.c_sq(i),
            p.rho_pow(i),
            st.survivor_sizes,
            st.size_condition
        );
    }
}

fn density_cmd(cmd: &DensityCmd, ctx: &Ctx<'_>, echo: Value) -> Run<Report> {
    match cmd {
        DensityCmd::Check { file, eps, rho, colour, sampled, samples } => {
            let (eps, rho) = (rat("eps", eps)?, rat("rho", rho)?);
            let mode = if *sampled {
                DensityMode::Sampled {
                    seed: ctx.seed("sampled density testing")?,
                    samples: *samples,
                }
            } else {
                DensityMode::Exact
            };
            let text = read(file)?;
            if first_token(&text) == Some("bipartite") {
                let g = parsed(file, format::parse_bipartite(&text))?;
                let r = is_bidense(&g, &eps, &rho, mode)?;
                return Ok(match r {
                    BiDensity::Dense => report("density check", echo, Verdict::Positive, "bi-dense\n".into()),
                    BiDensity::Unknown => report("density check", echo, Verdict::Exhausted, "unknown (no violation sampled)\n".into()),
                    BiDensity::Sparse(w) => {
                        if !w.verify(&g, &eps, &rho)? {
                            return Err(CliError::Failure("sparse pair failed re-check".into()));
                        }
                        let t = format!("sparse pair with {} edges\nX {}\nY {}\n", w.edges, join(&w.x), join(&w.y));
                        let mut rep = report("density check", echo, Verdict::Negative, t);
                        rep.record = rep.record.with_witness(json!({"x": w.x, "y": w.y, "edges": w.edges}));
                        rep.artefact = Some(format::write_parts(&[w.x, w.y]));
                        rep
                    }
                });
            }
            let host = parsed(file, format::parse_instance(&text))?;
            let r = is_tridense(&host, &eps, &rho, *colour, mode, &ctx.budget)?;
            Ok(match r {
                TriDensity::Dense => report(
                    "density check",
                    echo,
                    Verdict::Positive,
                    "tri-dense over the searched link systems\n".into(),
                ),
                TriDensity::Unknown => report("density check", echo, Verdict::Exhausted, "unknown\n".into()),
                TriDensity::Sparse(w) => {
                    if !w.verify(&host, &eps, &rho) {
                        return Err(CliError::Failure("tri-density witness failed re-check".into()));
                    }
                    let t = format!(
                        "sparse system: {} triangles, {} of colour {}\n{}",
                        w.triangles,
                        w.coloured,
                        w.colour,
                        format::write_tripartite(&w.system)
                    );
                    let mut rep = report("density check", echo, Verdict::Negative, t);
                    rep.record = rep.record.with_witness(json!({
                        "parts": w.system.parts(), "triangles": w.triangles, "coloured": w.coloured,
                    }));
                    rep.artefact = Some(format::write_tripartite(&w.system));
                    rep
                }
            })
        }
        DensityCmd::Embed { host, pattern, rho, samples, no_expand, no_invariants } => {
            let (g, h) = (load_instance(host)?, load_instance(pattern)?);
            let rho = rat("rho", rho)?;
            let opts = EmbedOptions {
                assert_invariants: !no_invariants,
                seed: ctx.seed("embedding (sampled density tests on large hosts)")?,
                samples: *samples,
                expand: !no_expand,
            };
            let rep = embed(&h, &g, &rho, opts)?;
            if ctx.trace {
                trace_steps(&rep);
            }
            match &rep.outcome {
                EmbedOutcome::Embedded(f) => {
                    if !is_induced_copy(&h, &g, f) {
                        return Err(CliError::Failure("embedding failed re-check".into()));
                    }
                    let mut out = report("density embed", echo, Verdict::Positive, format!("embedded {}\n", join(f)));
                    out.record = out.record.with_witness(json!(f));
                    out.record.details = json!({"steps": rep.steps.len()});
                    out.artefact = Some(format::write_parts(&[f.clone()]));
                    Ok(out)
                }
                EmbedOutcome::Failed(c) => {
                    if !verify_certificate(c, &h, &g, opts)? {
                        return Err(CliError::Failure("failure certificate failed re-check".into()));
                    }
                    let body = certificate_text(c, &h, &g)?;
                    let mut out = report("density embed", echo, Verdict::Negative, body.clone());
                    out.record.details = json!({"failed_vertex": c.vertex, "candidates": c.candidates.len(), "certificate_verified": true});
                    out.artefact = Some(body);
                    Ok(out)
                }
            }
        }
        DensityCmd::Dichotomy { host, pattern, rho, s, eps, eta, samples, overrides } => {
            let (g, h) = (load_instance(host)?, load_instance(pattern)?);
            let mut st = DichotomySettings::new(rat("rho", rho)?, *s);
            st.eps = eps.as_deref().map(|e| rat("eps", e)).transpose()?;
            st.eta = eta.as_deref().map(|e| rat("eta", e)).transpose()?;
            st.overrides = overrides.get();
            st.embed.seed = ctx.seed("the dichotomy (sampled density tests on large hosts)")?;
            st.embed.samples = *samples;
            let r = dichotomy(&g, &h, &st)?;
            if ctx.trace {
                trace_steps(&r.embed);
            }
            let mut text = format!("eps {}\neta {}{}\n", r.eps, r.eta, if r.eta_capped { " (capped)" } else { "" });
            let out = match &r.outcome {
                DichotomyOutcome::InducedCopy(f) => {
                    if !is_induced_copy(&h, &g, f) {
                        return Err(CliError::Failure("induced copy failed re-check".into()));
                    }
                    writeln!(text, "induced copy {}", join(f)).unwrap();
                    let mut out = report("density dichotomy", echo, Verdict::Positive, text);
                    out.record = out.record.with_witness(json!({"copy": f}));
                    out.artefact = Some(format::write_parts(&[f.clone()]));
                    out
                }
                DichotomyOutcome::Tripartite(w) => {
                    let colour = match w.kind {
                        TripartiteKind::Complete => 0,
                        TripartiteKind::Empty => 1,
                    };
                    let [a, b, c] = &w.parts;
                    if !transversals_all(&g, a, b, c, colour)? {
                        return Err(CliError::Failure("tripartite witness failed re-check".into()));
                    }
                    writeln!(text, "{:?} tripartite of size {}", w.kind, w.size()).unwrap();
                    text.push_str(&format::write_parts(&w.parts));
                    let mut out = report("density dichotomy", echo, Verdict::Positive, text);
                    out.record = out.record.with_witness(json!({"kind": format!("{:?}", w.kind), "parts": w.parts}));
                    out.artefact = Some(format::write_parts(&w.parts));
                    out
                }
                DichotomyOutcome::DoubleFailure { vertex, extraction } => {
                    writeln!(text, "double failure: embedding stopped at vertex {vertex}").unwrap();
                    if let Some(f) = extraction {
                        writeln!(text, "extraction stopped at {:?}: {}", f.stage, f.reason).unwrap();
                    }
                    let mut out = report("density dichotomy", echo, Verdict::Negative, text);
                    out.record.details = json!({"vertex": vertex, "extraction": extraction.as_ref().map(|f| f.reason.clone())});
                    out
                }
            };
            Ok(out)
        }
        DensityCmd::Params { t, n, log_n, rho } => {
            let mut text = String::new();
            let mut details = json!({});
            let tp = match (n, log_n) {
                (Some(_), Some(_)) => return usage("give --n or --log-n, not both"),
                (Some(n), None) => Some(theorem_params(*t, *n)?),
                (None, Some(l)) => Some(theorem_params_log(*t, *l)?),
                (None, None) => None,
            };
            if let Some(p) = &tp {
                write!(
                    text,
                    "δH = {}\nlog n = {}\nρ = {:e}\nε = {:e}\ns = {}\nterms {:e} {:e} {:e}\nterms below log n {:?}\nρ < 1: {}\nρ <= 1/8: {}\n",
                    p.delta_h, p.log_n, p.rho, p.eps, p.s, p.terms[0], p.terms[1], p.terms[2], p.terms_below_log_n,
                    p.rho_below_one, p.rho_at_most_eighth
                )
                .unwrap();
                details["delta_h"] = json!(p.delta_h.to_string());
                details["s"] = json!(p.s);
            }
            if let Some(r) = rho {
                let rho = rat("rho", r)?;
                let lp = lemma_params(*t, &rho)?;
                let dp = DensityParams::new(*t, rho)?;
                writeln!(text, "lemma ε = {}\nlemma n_min = {}", lp.eps, lp.n_min).unwrap();
                for i in 0..=*t {
                    writeln!(text, "i {i}: ε_i² = {}, c_i² = {}, ρ^i = {}", dp.eps_sq(i), dp.c_sq(i), dp.rho_pow(i)).unwrap();
                }
                details["lemma_eps"] = json!(lp.eps.to_string());
                details["n_min"] = json!(lp.n_min.to_string());
            }
            if tp.is_none() && rho.is_none() {
                return usage("give --n, --log-n or --rho");
            }
            let mut out = report("density params", echo, Verdict::Positive, text);
            out.record.details = details;
            Ok(out)
        }
    }
}

fn construct(cmd: &ConstructCmd, ctx: &Ctx<'_>, echo: Value) -> Run<Report> {
    let built = |name: &str, echo: Value, body: String, details: Value| {
        let mut r = report(name, echo, Verdict::Positive, String::new());
        r.record.details = details;
        r.artefact = Some(body);
        r
    };
    match cmd {
        ConstructCmd::Gn { n, p } => {
            let seed = ctx.seed("G(n, p)")?;
            let g = random_graph(*n, &rat("p", p)?, seed)?;
            let body = format::write_hypergraph(&g, Some(&format!("G(n,p) n={n} p={p} seed={seed}")));
            Ok(built("construct gn", echo, body, json!({"edges": g.edge_count()})))
        }
        ConstructCmd::Lift { n, base, p } => {
            let l = match base {
                Some(path) => {
                    let mut l = constructions::lift(&load_hypergraph(path)?, *n)?;
                    l.provenance = None;
                    l
                }
                None => random_lift(*n, &rat("p", p)?, ctx.seed("a random lift")?)?,
            };
            if !l.verify() {
                return Err(CliError::Failure("lift failed re-check".into()));
            }
            let note = match (&l.provenance, base) {
                (Some(pv), _) => format!("lift of G(n,p) n={n} p={} seed={}", pv.p, pv.seed),
                (None, Some(b)) => format!("lift of {} to n={n}", b.display()),
                (None, None) => format!("lift n={n}"),
            };
            let body = format::write_hypergraph(&l.lifted, Some(&note));
            Ok(built("construct lift", echo, body, json!({"edges": l.lifted.edge_count()})))
        }
        ConstructCmd::Tc5 => {
            let body = format::write_hypergraph(&tight_cycle5(), Some("tight cycle on five vertices"));
            Ok(built("construct tc5", echo, body, json!({"edges": 5})))
        }
        ConstructCmd::Hypergraph { k, n, p } => {
            let seed = ctx.seed("a random hypergraph")?;
            let h = random_hypergraph(*k, *n, &rat("p", p)?, seed)?;
            let body = format::write_hypergraph(&h, Some(&format!("random k={k} n={n} p={p} seed={seed}")));
            Ok(built("construct hypergraph", echo, body, json!({"edges": h.edge_count()})))
        }
        ConstructCmd::Colouring { k, n, colours } => {
            let seed = ctx.seed("a random colouring")?;
            let c = random_colouring(*k, *n, *colours, seed, 1 << 24)?;
            let body = format::write_colouring(&c, Some(&format!("random colouring k={k} n={n} seed={seed}")));
            Ok(built("construct colouring", echo, body, Value::Null))
        }
        ConstructCmd::Bipartite { a, b, p } => {
            let seed = ctx.seed("a random bipartite graph")?;
            let p = rat("p", p)?;
            let pairs: Vec<[u32; 2]> = (0..*a).flat_map(|x| (*a..a + b).map(move |y| [x, y])).collect();
            let mask = random_hypergraph(2, a + b, &p, seed)?;
            let edges = pairs.into_iter().filter(|e| mask.contains(e)).map(|[x, y]| (x, y));
            let g = BipartiteGraph::with_ranges(*a, *b, edges)?;
            let body = format!("# random bipartite p={p} seed={seed}\n{}", format::write_bipartite(&g));
            Ok(built("construct bipartite", echo, body, json!({"edges": g.edge_count()})))
        }
        ConstructCmd::Tripartite { parts, p } => {
            let [n1, n2, n3] = parts[..] else { return usage("--parts needs three sizes") };
            let p = rat("p", p)?;
            if p == rational::from_int(1) {
                let body = format!("tripartite {n1} {n2} {n3} complete\n");
                return Ok(built("construct tripartite", echo, body, Value::Null));
            }
            let seed = ctx.seed("random link graphs")?;
            let total = n1 + n2 + n3;
            let mask = random_hypergraph(2, total, &p, seed)?;
            let v1: Vec<u32> = (0..n1).collect();
            let v2: Vec<u32> = (n1..n1 + n2).collect();
            let v3: Vec<u32> = (n1 + n2..total).collect();
            let keep = |x: u32, y: u32| mask.contains_unsorted(&[x, y]);
            let link = |p: &[u32], q: &[u32]| -> Run<BipartiteGraph> {
                Ok(BipartiteGraph::from_fn(p, q, |i, j| keep(p[i], q[j]))?)
            };
            let sys = TripartiteSystem::new(link(&v1, &v2)?, link(&v2, &v3)?, link(&v3, &v1)?)?;
            let body = format!("# random links p={p} seed={seed}\n{}", format::write_tripartite(&sys));
            Ok(built("construct tripartite", echo, body, json!({"triangles": sys.triangle_count()})))
        }
        ConstructCmd::Triangles { system, p } => {
            let sys = load_tripartite(system)?;
            let p = rat("p", p)?;
            let all = p == rational::from_int(1);
            let n: u32 = sys.parts().iter().map(|q| q.len() as u32).sum();
            let mut tris: Vec<[u32; 3]> = sys
                .triangles()
                .map(|mut t| {
                    t.sort_unstable();
                    t
                })
                .collect();
            tris.sort_unstable();
            let seed = if all { 0 } else { ctx.seed("triangle sampling")? };
            let kept: Vec<[u32; 3]> = if all {
                tris
            } else {
                let coin = random_hypergraph(3, n, &p, seed)?;
                tris.into_iter().filter(|t| coin.contains(t)).collect()
            };
            let g3 = UniformHypergraph::new(3, n, kept)?;
            let body = format::write_hypergraph(&g3, Some(&format!("triangles of {} kept with p={p} seed={seed}", system.display())));
            Ok(built("construct triangles", echo, body, json!({"edges": g3.edge_count()})))
        }
    }
}

fn oracle(cmd: &OracleCmd, ctx: &Ctx<'_>, echo: Value) -> Run<Report> {
    match cmd {
        OracleCmd::Clique { file, colour } => clique_oracle(&load_instance(file)?, *colour, ctx, echo, "oracle clique"),
        OracleCmd::Independent { file } => clique_oracle(&load_instance(file)?, 1, ctx, echo, "oracle independent"),
        OracleCmd::Induced { host, pattern } => {
            let (g, h) = (load_instance(host)?, load_instance(pattern)?);
            if h.vertex_count() > g.vertex_count() {
                return usage("pattern has more vertices than the host");
            }
            let r = oracles::induced_copy_bf(&g, &h, &ctx.budget)?;
            Ok(match r.embedding {
                Some(f) => {
                    if !is_induced_copy(&h, &g, &f) {
                        return Err(CliError::Failure("induced copy failed re-check".into()));
                    }
                    let mut out = report("oracle induced", echo, Verdict::Positive, format!("embedding {}\n", join(&f)));
                    out.record = out.record.with_witness(json!(f));
                    out
                }
                None if r.exhausted => report("oracle induced", echo, Verdict::Exhausted, "none found (budget exhausted)\n".into()),
                None => report("oracle induced", echo, Verdict::Negative, "none\n".into()),
            })
        }
        OracleCmd::Kst { file, s, t } => {
            let g = load_bipartite(file)?;
            if *s > g.a().len() {
                return usage(format!("s = {s} exceeds |A| = {}", g.a().len()));
            }
            Ok(match oracles::exists_kst_bf(&g, *s, *t) {
                Some((u, tt)) => {
                    let w = KstWitness::new(&g, u, tt)?;
                    let mut out = report("oracle kst", echo, Verdict::Positive, format!("true\n{}", kst_text(&w)));
                    out.record = out.record.with_witness(json!({"u": w.u, "t": w.t}));
                    out
                }
                None => report("oracle kst", echo, Verdict::Negative, "false\n".into()),
            })
        }
        OracleCmd::Ksss { system, g3, s } => {
            let sys = load_tripartite(system)?;
            let g3 = load_hypergraph(g3)?;
            let (w, exhausted) = oracles::exists_ksss_bf(&sys, &g3, *s, &ctx.budget);
            Ok(match w {
                Some(w) => {
                    let TripartiteWitness { parts: [a, b, c], .. } = &w;
                    if !transversals_all(&g3, a, b, c, 0)? {
                        return Err(CliError::Failure("K_{s,s,s} witness failed re-check".into()));
                    }
                    let mut out = report("oracle ksss", echo, Verdict::Positive, format!("true\n{}", format::write_parts(&w.parts)));
                    out.record = out.record.with_witness(json!(w.parts));
                    out
                }
                None if exhausted => report("oracle ksss", echo, Verdict::Exhausted, "unknown (budget exhausted)\n".into()),
                None => report("oracle ksss", echo, Verdict::Negative, "false\n".into()),
            })
        }
        OracleCmd::Preorders { m } => {
            let all = oracles::enumerate_preorders(*m)?;
            let mut text = format!("count {}\n", all.len());
            for p in &all {
                writeln!(text, "{}", join(p.ranks())).unwrap();
            }
            let mut out = report("oracle preorders", echo, Verdict::Positive, text);
            out.record.details = json!({"count": all.len()});
            Ok(out)
        }
    }
}

fn clique_oracle(c: &EdgeColouring, colour: u8, ctx: &Ctx<'_>, echo: Value, name: &str) -> Run<Report> {
    if colour >= c.colour_count() {
        return usage(format!("colour {colour} out of range"));
    }
    let r = oracles::max_mono_clique_bf(c, colour, &ctx.budget);
    if !r.vacuous && !mono_ok(c, &r.witness, colour) {
        return Err(CliError::Failure("clique witness failed re-check".into()));
    }
    let text = format!(
        "size {}\nwitness {}\nvacuous {}\nexhausted {}\n",
        r.size,
        join(&r.witness),
        r.vacuous,
        r.exhausted
    );
    let mut out = report(name, echo, if r.exhausted { Verdict::Exhausted } else { Verdict::Positive }, text);
    out.record = out.record.with_witness(json!(r.witness));
    out.record.details = json!({"size": r.size, "vacuous": r.vacuous});
    Ok(out)
}

fn suite(cmd: &SuiteCmd, ctx: &Ctx<'_>, echo: Value) -> Run<Report> {
    let SuiteCmd::Acceptance { only, mutate } = cmd;
    let opts = SuiteOptions {
        threads: ctx.threads,
        mutate: mutate.map(|MutationArg::SwapExtrema| Mutation::SwapExtrema),
        only: only.clone(),
    };
    let mut text = String::new();
    let results = acceptance::run_suite(&opts, |r| println!("{}", r.line())).map_err(CliError::Usage)?;
    let failed: Vec<String> = results.iter().filter(|r| !r.passed).map(|r| r.id.to_string()).collect();
    if failed.is_empty() {
        writeln!(text, "all {} criteria passed", results.len()).unwrap();
    } else {
        writeln!(text, "failed: {}", failed.join(", ")).unwrap();
    }
    let mut out = report("suite acceptance", echo, positive_if(failed.is_empty()), text);
    out.record.details = json!(results
        .iter()
        .map(|r| json!({"id": r.id, "passed": r.passed, "detail": r.detail}))
        .collect::<Vec<_>>());
    Ok(out)
}
