use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use wflag::catalog::{self, Catalog, CatalogEntry, Status};
use wflag::equations::{
    assign_weights, equation_count, pfaffians, restrict_to_stratum, EquationSet,
};
use wflag::hilbert::{self, canonical_weight, HilbertReport};
use wflag::lie::{weyl_dim, CocharVec, LieType, WeightVec};
use wflag::model::{check_positivity, embedding_weights, singular_strata, WeightedFlagInput};
use wflag::search::{find_sections, scan_inputs_with, CandidateFamily, SearchConfig};
use wflag::weights::flag_dimension;

const LAMBDA_HELP: &str = "\
Highest weight. Type A: e-coordinates of GL(n), e.g. 1,1,0,0,0,0 for e1+e2.
Type C: e-coordinates of Sp(2n). G2: coefficients of the fundamental weights,
so 1,0 is w1 (the 7-dimensional representation) and 0,1 is w2 (the adjoint).";

#[derive(Parser)]
#[command(
    name = "wflag",
    version,
    about = "Hilbert series and Calabi-Yau sections of weighted flag varieties"
)]
struct Cli {
    /// Worker threads (default: WFLAG_THREADS, else all cores). Output does not depend on it.
    #[arg(long, global = true, env = "WFLAG_THREADS")]
    threads: Option<usize>,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert numerator, adjunction number and canonical weight.
    Hilbert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Ambient weights, positivity, dimensions and singular strata.
    Weights {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Quasi-linear Calabi-Yau threefold sections.
    Search {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Scan a grid of (mu, u) values, streaming one JSON line per hit.
    Scan {
        #[command(flatten)]
        group: GroupArgs,
        /// Search configuration (JSON, same fields as the library's SearchConfig).
        #[arg(long)]
        config: PathBuf,
        /// Stop after this many hits.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Pfaffian equations of Gr(2,n), or the equation count of a flag variety.
    Equations {
        /// Grassmannian Gr(K,N); only K = 2 is supported.
        #[arg(long, num_args = 2, value_names = ["K", "N"])]
        gr: Option<Vec<usize>>,
        #[command(flatten)]
        weighting: WeightingArgs,
        /// Print only the number of quadrics, computed as dim S^2 V - dim V_{2 nu}.
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        group: OptGroupArgs,
    },
    /// Restrict weighted Gr(2,n) Pfaffians to the stratum of weights divisible by R.
    Restrict {
        #[arg(long, num_args = 2, value_names = ["K", "N"])]
        gr: Vec<usize>,
        #[command(flatten)]
        weighting: WeightingArgs,
        #[arg(long)]
        r: i64,
    },
    /// Bundled or user catalog of known families.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Recompute every reproducible field. Exit code 3 on any mismatch.
    Verify {
        #[command(flatten)]
        source: CatalogSource,
    },
    /// Print records.
    Show {
        #[command(flatten)]
        source: CatalogSource,
    },
}

#[derive(Args)]
struct CatalogSource {
    /// Catalog file (default: the bundled catalog).
    #[arg(long)]
    file: Option<PathBuf>,
    /// Restrict to one record.
    #[arg(long)]
    id: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    A,
    C,
    G2,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    ClosedForm,
    Oracle,
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long = "type", value_enum)]
    ty: TypeArg,
    /// GL(n) for type A, Sp(2n) for type C; ignored for G2.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, long_help = LAMBDA_HELP)]
    lambda: Vec<i64>,
}

#[derive(Args)]
struct OptGroupArgs {
    #[arg(long = "type", value_enum)]
    ty: Option<TypeArg>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lambda: Vec<i64>,
}

#[derive(Args)]
struct InputArgs {
    #[command(flatten)]
    group: GroupArgs,
    #[command(flatten)]
    weighting: WeightingArgs,
    /// Weight of one cone variable; repeat or comma-separate for several.
    #[arg(long, value_delimiter = ',')]
    cone: Vec<i64>,
}

#[derive(Args)]
struct WeightingArgs {
    /// Cocharacter, in the same ambient basis as the root datum.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    mu: Option<Vec<i64>>,
    #[arg(long, allow_hyphen_values = true)]
    u: Option<i64>,
}

/// Failure classes, mapped to exit codes.
enum Failure {
    Rejected(anyhow::Error),
    Usage(String),
    Mismatch,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Rejected(e)
    }
}

impl From<wflag::Error> for Failure {
    fn from(e: wflag::Error) -> Self {
        Failure::Rejected(e.into())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Rejected(e.into())
    }
}

type CmdResult = Result<(), Failure>;

fn lie_type(ty: TypeArg, n: Option<usize>) -> Result<LieType, Failure> {
    let need_n = || n.ok_or_else(|| Failure::Usage("--n is required for types A and C".into()));
    Ok(match ty {
        TypeArg::A => {
            let n = need_n()?;
            if n < 2 {
                return Err(Failure::Usage("type A needs --n at least 2".into()));
            }
            LieType::a(n - 1)?
        }
        TypeArg::C => LieType::c(need_n()?)?,
        TypeArg::G2 => LieType::g2(),
    })
}

/// Converts `--lambda` into ambient coordinates; G2 takes fundamental-weight coefficients.
fn lambda_vec(ty: TypeArg, lambda: &[i64]) -> Result<WeightVec, Failure> {
    match ty {
        TypeArg::G2 => match lambda {
            [a, b] => Ok(WeightVec(vec![2 * a + 3 * b, a + 2 * b])),
            _ => Err(Failure::Usage(
                "G2 --lambda takes two fundamental-weight coefficients".into(),
            )),
        },
        _ => Ok(WeightVec(lambda.to_vec())),
    }
}

fn group(g: &GroupArgs) -> Result<(LieType, WeightVec), Failure> {
    Ok((lie_type(g.ty, g.n)?, lambda_vec(g.ty, &g.lambda)?))
}

fn build_input(args: &InputArgs) -> Result<WeightedFlagInput, Failure> {
    let (lt, lambda) = group(&args.group)?;
    let (mu, u) = mu_u(&args.weighting)?;
    let input = WeightedFlagInput::new(lt, lambda, CocharVec(mu), u)?;
    Ok(input.with_cones(&args.cone)?)
}

fn mu_u(w: &WeightingArgs) -> Result<(Vec<i64>, i64), Failure> {
    match (&w.mu, w.u) {
        (Some(mu), Some(u)) => Ok((mu.clone(), u)),
        _ => Err(Failure::Usage("--mu and --u are both required".into())),
    }
}

fn emit_json<T: Serialize>(value: &T) -> CmdResult {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).context("writing JSON")?;
    writeln!(out)?;
    Ok(())
}

fn powers(weights: &[i64]) -> String {
    let parts: Vec<String> = catalog::to_powers(weights)
        .into_iter()
        .map(|(w, k)| {
            if k == 1 {
                w.to_string()
            } else {
                format!("{w}^{k}")
            }
        })
        .collect();
    format!("[{}]", parts.join(","))
}

fn print_report(out: &mut impl Write, report: &HilbertReport) -> io::Result<()> {
    let wf = &report.well_formed;
    writeln!(out, "weights      {}", powers(&report.weights.weights))?;
    writeln!(out, "codimension  {}", report.weights.c)?;
    writeln!(out, "numerator    {}", report.numerator)?;
    writeln!(out, "q            {}", report.q)?;
    let cw = canonical_weight(report);
    let note = if cw.advisory {
        "  (advisory: gcd condition fails)"
    } else {
        ""
    };
    writeln!(out, "k            {}{note}", cw.k)?;
    writeln!(out, "palindromic  {}", report.palindromic)?;
    let method = match (report.method, &report.deformation) {
        (hilbert::Method::ClosedForm, None) => "closed form".to_string(),
        (hilbert::Method::ClosedForm, Some(h)) => format!("closed form, limit along {:?}", h.0),
        (hilbert::Method::OracleReconstruction, _) => "oracle reconstruction".to_string(),
    };
    writeln!(out, "method       {method}")?;
    writeln!(out, "well-formed  gcd {}", wf.gcd_ok)?;
    Ok(())
}

#[derive(Serialize)]
struct HilbertOutput<'a> {
    input: &'a WeightedFlagInput,
    report: &'a HilbertReport,
}

fn cmd_hilbert(cli: &Cli, input: &InputArgs, method: MethodArg) -> CmdResult {
    let input = build_input(input)?;
    let report = match method {
        MethodArg::Auto => hilbert::hilbert(&input)?,
        MethodArg::ClosedForm => hilbert::hilbert_closed_form(&input)?,
        MethodArg::Oracle => hilbert::hilbert_by_oracle(&input)?,
    };
    if cli.json {
        return emit_json(&HilbertOutput {
            input: &input,
            report: &report,
        });
    }
    print_report(&mut io::stdout().lock(), &report)?;
    Ok(())
}

#[derive(Serialize)]
struct WeightsOutput {
    input: WeightedFlagInput,
    weights: Vec<i64>,
    rep_dim: String,
    flag_dim: usize,
    codim: usize,
    positive: bool,
    gcd_ok: bool,
    strata: Vec<(i64, usize)>,
}

fn cmd_weights(cli: &Cli, args: &InputArgs) -> CmdResult {
    let input = build_input(args)?;
    let pos = check_positivity(&input)?;
    if let Some((w, v)) = pos.witness {
        return Err(wflag::Error::NonPositiveWeight {
            weight: w.0,
            value: v,
        }
        .into());
    }
    let base = input.base();
    let datum = base.datum()?;
    let ew = embedding_weights(&input)?;
    let out = WeightsOutput {
        rep_dim: weyl_dim(&datum, &base.lambda)?.to_string(),
        flag_dim: flag_dimension(&datum, &base.lambda)?,
        codim: ew.c,
        positive: pos.ok,
        gcd_ok: wflag::model::gcd_condition(&ew.weights),
        strata: singular_strata(&ew.weights)
            .into_iter()
            .map(|s| (s.r, s.ambient_dim))
            .collect(),
        weights: ew.weights,
        input,
    };
    if cli.json {
        return emit_json(&out);
    }
    let mut o = io::stdout().lock();
    writeln!(o, "weights      {}", powers(&out.weights))?;
    writeln!(o, "dim V        {}", out.rep_dim)?;
    writeln!(o, "dim flag     {}", out.flag_dim)?;
    writeln!(o, "codimension  {}", out.codim)?;
    writeln!(o, "gcd ok       {}", out.gcd_ok)?;
    for (r, dim) in &out.strata {
        writeln!(o, "stratum      r={r} P^{dim}")?;
    }
    Ok(())
}

fn print_candidate(o: &mut impl Write, c: &CandidateFamily) -> io::Result<()> {
    let degs: Vec<String> = c.degrees.iter().map(|d| format!("({d})")).collect();
    writeln!(
        o,
        "X = {} in P^{}{}  k={}  gcd {}",
        degs.join(" cap "),
        c.ambient_weights.len().saturating_sub(1),
        powers(&c.ambient_weights),
        c.k,
        c.ambient_gcd_ok
    )?;
    for h in &c.strata_hints {
        writeln!(
            o,
            "    r={:<3} P^{}{}",
            h.r,
            h.ambient_dim,
            powers(&h.weights)
        )?;
    }
    Ok(())
}

fn cmd_search(cli: &Cli, args: &InputArgs) -> CmdResult {
    let input = build_input(args)?;
    let cands = find_sections(&input)?;
    if cli.json {
        return emit_json(&cands);
    }
    let mut o = io::stdout().lock();
    writeln!(o, "{} candidate(s)", cands.len())?;
    for c in &cands {
        print_candidate(&mut o, c)?;
    }
    Ok(())
}

fn cmd_scan(args: &GroupArgs, config: &PathBuf, limit: Option<usize>) -> CmdResult {
    let (lt, lambda) = group(args)?;
    let text =
        std::fs::read_to_string(config).with_context(|| format!("reading {}", config.display()))?;
    let cfg: SearchConfig = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", config.display())))?;
    let mut out = io::BufWriter::new(io::stdout().lock());
    let mut emitted = 0usize;
    let mut write_err = None;
    if limit != Some(0) {
        scan_inputs_with(lt, &lambda, &cfg, |hit| {
            if let Err(e) = serde_json::to_writer(&mut out, &hit)
                .map_err(io::Error::from)
                .and_then(|_| writeln!(out))
                .and_then(|_| out.flush())
            {
                write_err = Some(e);
                return false;
            }
            emitted += 1;
            limit.is_none_or(|l| emitted < l)
        })?;
    }
    match write_err {
        Some(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        Some(e) => Err(e.into()),
        None => Ok(()),
    }
}

fn gr_size(gr: &[usize]) -> Result<usize, Failure> {
    match gr {
        [2, n] => Ok(*n),
        [k, _] => Err(Failure::Usage(format!(
            "only Gr(2,n) is supported, got k={k}"
        ))),
        _ => Err(Failure::Usage("--gr takes two values".into())),
    }
}

fn weighted_pfaffians(n: usize, w: &WeightingArgs) -> Result<EquationSet, Failure> {
    let eqs = pfaffians(n)?;
    if w.mu.is_none() && w.u.is_none() {
        return Ok(eqs);
    }
    let (mu, u) = mu_u(w)?;
    let mut lambda = vec![0; n];
    lambda[0] = 1;
    lambda[1] = 1;
    let input = WeightedFlagInput::new(LieType::a(n - 1)?, WeightVec(lambda), CocharVec(mu), u)?;
    Ok(assign_weights(&eqs, &input)?)
}

fn print_equations(o: &mut impl Write, eqs: &EquationSet) -> io::Result<()> {
    for v in &eqs.variables {
        let w = v
            .weight
            .map(|w| format!("  weight {w}"))
            .unwrap_or_default();
        writeln!(o, "x{:<3} = p{}{}{w}", v.index, v.position.0, v.position.1)?;
    }
    write!(o, "{}", eqs.to_text())
}

fn cmd_equations(
    cli: &Cli,
    gr: &Option<Vec<usize>>,
    weighting: &WeightingArgs,
    count: bool,
    grp: &OptGroupArgs,
) -> CmdResult {
    if count {
        let (lt, lambda) = match (gr, grp.ty) {
            (Some(gr), None) => {
                let n = gr_size(gr)?;
                let mut l = vec![0; n];
                l[0] = 1;
                l[1] = 1;
                (LieType::a(n - 1)?, WeightVec(l))
            }
            (None, Some(ty)) => (lie_type(ty, grp.n)?, lambda_vec(ty, &grp.lambda)?),
            _ => {
                return Err(Failure::Usage(
                    "--count needs either --gr or --type/--lambda".into(),
                ))
            }
        };
        let datum = wflag::lie::build_root_datum(lt)?;
        let c = equation_count(&datum, &lambda)?;
        if cli.json {
            return emit_json(&serde_json::json!({ "count": c.to_string() }));
        }
        println!("{c}");
        return Ok(());
    }
    let Some(gr) = gr else {
        return Err(Failure::Usage(
            "equations needs --gr 2 N (or --count)".into(),
        ));
    };
    let eqs = weighted_pfaffians(gr_size(gr)?, weighting)?;
    if cli.json {
        return emit_json(&eqs);
    }
    print_equations(&mut io::stdout().lock(), &eqs)?;
    Ok(())
}

fn cmd_restrict(cli: &Cli, gr: &[usize], weighting: &WeightingArgs, r: i64) -> CmdResult {
    let n = gr_size(gr)?;
    mu_u(weighting)?;
    let eqs = restrict_to_stratum(&weighted_pfaffians(n, weighting)?, r)?;
    if cli.json {
        return emit_json(&eqs);
    }
    let mut o = io::stdout().lock();
    writeln!(
        o,
        "{} variable(s), {} equation(s) on the stratum r={r}",
        eqs.variables.len(),
        eqs.equations.len()
    )?;
    print_equations(&mut o, &eqs)?;
    Ok(())
}

fn load(source: &CatalogSource) -> Result<Vec<CatalogEntry>, Failure> {
    let cat: Catalog = match &source.file {
        Some(p) => catalog::load_catalog(p)?,
        None => catalog::bundled_catalog(),
    };
    let entries: Vec<CatalogEntry> = match &source.id {
        Some(id) => match cat.get(id) {
            Some(e) => vec![e.clone()],
            None => return Err(Failure::Usage(format!("no record with id {id:?}"))),
        },
        None => cat.entries,
    };
    Ok(entries)
}

fn cmd_catalog(cli: &Cli, action: &CatalogAction) -> CmdResult {
    match action {
        CatalogAction::Show { source } => {
            let entries = load(source)?;
            if cli.json {
                return emit_json(&entries);
            }
            let mut o = io::stdout().lock();
            for e in &entries {
                match e {
                    CatalogEntry::Family(r) => {
                        writeln!(o, "{}  {}", r.id, r.title)?;
                        writeln!(
                            o,
                            "    degrees {:?} in P^{}{}",
                            r.degrees,
                            r.section_ambient_dim,
                            { powers(&catalog::expand_powers(&r.section_weights)) }
                        )?;
                        let inv = &r.invariants;
                        writeln!(o, "    D^3 = {}, D.c2 = {}", inv.d3, inv.dc2)?;
                        for c in &inv.curves {
                            writeln!(
                                o,
                                "    curve {} of type {}, deg D|C = {}, gamma = {}",
                                c.name, c.kind, c.deg_d, c.gamma
                            )?;
                        }
                        for p in &inv.points {
                            writeln!(o, "    {} x {}", p.count, p.kind)?;
                        }
                        if let Some(t) = &r.transcribed_equations {
                            writeln!(
                                o,
                                "    equations on P^{}[{}]:",
                                t.variables.len() - 1,
                                t.variables.join(",")
                            )?;
                            for l in &t.lines {
                                writeln!(o, "        {l}")?;
                            }
                        }
                    }
                    CatalogEntry::Note(n) => {
                        writeln!(o, "{}  {} (note)", n.id, n.title)?;
                        writeln!(o, "    {}", n.text)?;
                    }
                }
            }
            Ok(())
        }
        CatalogAction::Verify { source } => {
            let entries = load(source)?;
            let cat = Catalog {
                version: catalog::CATALOG_VERSION,
                entries,
            };
            let reports = catalog::verify_catalog(&cat);
            let mismatches: usize = reports.iter().map(|r| r.count(Status::Mismatch)).sum();
            if cli.json {
                emit_json(&reports)?;
            } else {
                let mut o = io::stdout().lock();
                for r in &reports {
                    writeln!(o, "{}", r.id)?;
                    for f in &r.fields {
                        let computed = if f.computed.is_empty() {
                            String::new()
                        } else {
                            format!("  computed {}", f.computed)
                        };
                        writeln!(
                            o,
                            "    {:<17} {:<22} printed {}{computed}",
                            f.status.to_string(),
                            f.field,
                            f.printed
                        )?;
                    }
                }
                writeln!(o, "{mismatches} mismatch(es)")?;
            }
            if mismatches > 0 {
                return Err(Failure::Mismatch);
            }
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Hilbert { input, method } => cmd_hilbert(cli, input, *method),
        Command::Weights { input } => cmd_weights(cli, input),
        Command::Search { input } => cmd_search(cli, input),
        Command::Scan {
            group,
            config,
            limit,
        } => cmd_scan(group, config, *limit),
        Command::Equations {
            gr,
            weighting,
            count,
            group,
        } => cmd_equations(cli, gr, weighting, *count, group),
        Command::Restrict { gr, weighting, r } => cmd_restrict(cli, gr, weighting, *r),
        Command::Catalog { action } => cmd_catalog(cli, action),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("wflag: cannot configure {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected(e)) => {
            eprintln!("wflag: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("wflag: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch) => {
            eprintln!("wflag: catalog verification found mismatches");
            ExitCode::from(3)
        }
    }
}
