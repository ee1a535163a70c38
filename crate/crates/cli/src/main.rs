use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quiver_yangian::config::{load_quiver, parse_ints, parse_theta, parse_window};
use quiver_yangian::loop_env::{
    limit_multiply, translation_l, Family, IdentitySeries, LoopAlgebra, Pbw, PbwOrder, ThetaClass,
};
use quiver_yangian::prep_rep::{parse_rep, reflect, torsion_membership, write_rep, Direction};
use quiver_yangian::quiver_core::{find_delta, CoweightVector, Quiver};
use quiver_yangian::series::{coha_character, semistable_character, slopes_in_window, GradedSeries, SlopeSet};
use quiver_yangian::shuffle::relations::check_relation;
use quiver_yangian::shuffle::{RelationKind, ShuffleAlgebra, ShuffleElt};
use quiver_yangian::weyl_braid::{BraidWord, Letter};
use quiver_yangian::{suites, Check, CliError, Format, Report};

/// Window used to build `Θ` images for `limit mul`.
const THETA_WINDOW: usize = 16;

#[derive(Parser)]
#[command(name = "qyang", version, about = "Exact checks for quiver Yangians, shuffle algebras and loop algebras")]
struct Cli {
    /// Quiver file, or a built-in name: A1, kronecker, An~, Dn~, E6~, E7~, E8~.
    #[arg(long, global = true, default_value = "kronecker")]
    quiver: String,
    /// Stability coweight: finite part (extended by (θ,δ) = 0) or all entries, comma separated.
    #[arg(long, global = true, allow_hyphen_values = true)]
    theta: Option<String>,
    /// Truncation window `D` or `D,K`: total degree ≤ D, q-degree ≤ K.
    #[arg(long, global = true, default_value = "3")]
    window: String,
    /// Largest mode degree in relation checks.
    #[arg(long, global = true, default_value_t = 2)]
    modes: u32,
    /// Order of the A1~ identities.
    #[arg(long, global = true, default_value_t = 5)]
    order: u32,
    /// Seed of every randomized suite.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Cmd {
    /// COHA character and semistable characters per slope.
    Character {
        /// Number of extra equivariant parameters in the prefactor.
        #[arg(long, default_value_t = 0)]
        dim_a: u32,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Sample count for the randomized suites (default 100 for reflect, 50 for twist).
        #[arg(long)]
        count: Option<usize>,
    },
    #[command(subcommand)]
    Shuffle(ShuffleCmd),
    #[command(subcommand)]
    Braid(BraidCmd),
    #[command(subcommand)]
    Identity(IdentityCmd),
    #[command(subcommand)]
    Limit(LimitCmd),
    #[command(subcommand)]
    Rep(RepCmd),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Relations,
    Identities,
    Braid,
    Reflect,
    Twist,
    All,
}

#[derive(Subcommand)]
enum ShuffleCmd {
    /// Product of two shuffle elements given in text form.
    Mul { a: PathBuf, b: PathBuf },
    /// One relation instance, e.g. `cubic 0,1 0,0,0 --edge x*`.
    Check {
        /// quadratic-same, quadratic-mixed, cubic or serre.
        kind: String,
        /// Vertex indices, comma separated.
        indices: String,
        /// Mode degrees, comma separated.
        #[arg(value_name = "MODES")]
        mode_degrees: String,
        /// Arrow label of the cubic relation.
        #[arg(long)]
        edge: Option<String>,
    },
}

#[derive(Subcommand)]
enum BraidCmd {
    /// Apply `T_{l_1} ⋯ T_{l_k}` (letters ±(i+1), comma separated) or `L_λ` for a coroot.
    Apply {
        /// Loop algebra element, e.g. `e[1]s^-1 + 2*h[1]s^0 t^1`.
        element: String,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "coroot")]
        word: Option<String>,
        /// Finite vertex `i` for `λ = α̌_i`.
        #[arg(long)]
        coroot: Option<usize>,
    },
}

#[derive(Subcommand)]
enum IdentityCmd {
    /// Check the A1~ identities up to `--order`.
    Verify {
        /// h or e; both when omitted.
        #[arg(long)]
        series: Option<String>,
    },
}

#[derive(Subcommand)]
enum LimitCmd {
    /// Product of two Θ classes such as `Y(1,2)` and `Z(1,-1)` at one level.
    Mul {
        x: String,
        y: String,
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        level: i64,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
}

#[derive(Subcommand)]
enum RepCmd {
    /// Validate a module file; report nilpotency and torsion flags.
    Check { file: PathBuf },
    /// Apply `S_i` or `S_i′` and print the resulting module file.
    Reflect {
        file: PathBuf,
        #[arg(long)]
        vertex: usize,
        #[arg(long, default_value = "S")]
        dir: String,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn series_rows(s: &GradedSeries) -> Vec<String> {
    let mut rows: Vec<_> = s.terms().filter(|(d, _, _)| !d.is_zero()).collect();
    rows.sort_by(|(d1, k1, _), (d2, k2, _)| (d1.total(), *d1, -k1).cmp(&(d2.total(), *d2, -k2)));
    rows.into_iter().map(|(d, k, c)| format!("z^{d} q^{k}: {c}")).collect()
}

fn character(cli: &Cli, q: &Quiver, dim_a: u32, r: &mut Report) -> Result<(), CliError> {
    let w = parse_window(q.num_vertices(), &cli.window)?;
    r.config("window", &cli.window).config("dim_a", dim_a);
    r.line("coha character");
    r.output.extend(series_rows(&coha_character(q, &w, dim_a)?));
    if find_delta(q).is_ok() && q.num_vertices() > 1 {
        let theta = parse_theta(q, cli.theta.as_deref())?;
        r.config("theta", &theta);
        for mu in slopes_in_window(&theta, &w) {
            r.line(format!("semistable character, slope {mu}"));
            r.output.extend(series_rows(&semistable_character(q, &theta, &SlopeSet::single(mu), &w, dim_a)?));
        }
    }
    Ok(())
}

fn verify(cli: &Cli, q: &Quiver, suite: Suite, count: Option<usize>, r: &mut Report) -> Result<(), CliError> {
    r.config("suite", suite.to_possible_value().expect("no skipped variants").get_name());
    if matches!(suite, Suite::Reflect | Suite::Twist | Suite::All) {
        r.config("seed", cli.seed);
    }
    let all = suite == Suite::All;
    let run = |name: &str, f: &dyn Fn() -> Result<Vec<Check>, CliError>, r: &mut Report| -> Result<(), CliError> {
        match f() {
            Ok(checks) => {
                r.checks.extend(checks.into_iter().map(|c| Check { name: format!("{name}: {}", c.name), ..c }));
                Ok(())
            }
            // `all` runs every suite that applies to the quiver
            Err(e) if all => {
                r.line(format!("{name}: skipped ({e})"));
                Ok(())
            }
            Err(e) => Err(e),
        }
    };
    if all || suite == Suite::Relations {
        r.config("modes", cli.modes);
        run("relations", &|| suites::relations(q, cli.modes), r)?;
    }
    if all || suite == Suite::Identities {
        r.config("order", cli.order);
        run("identities", &|| suites::identities(q, cli.order), r)?;
    }
    if all || suite == Suite::Braid {
        run("braid", &|| suites::braid(q), r)?;
    }
    if all || suite == Suite::Reflect {
        let n = count.unwrap_or(100);
        r.config("reflect count", n);
        run("reflect", &|| suites::reflections(q, cli.seed, n), r)?;
    }
    if all || suite == Suite::Twist {
        let n = count.unwrap_or(50);
        r.config("twist count", n);
        run("twist", &|| suites::twists(q, cli.seed, n), r)?;
    }
    Ok(())
}

fn shuffle(q: &Quiver, cmd: &ShuffleCmd, r: &mut Report) -> Result<(), CliError> {
    let alg = ShuffleAlgebra::new(q.clone());
    match cmd {
        ShuffleCmd::Mul { a, b } => {
            let x = ShuffleElt::from_text(&read(a)?)?;
            let y = ShuffleElt::from_text(&read(b)?)?;
            r.output.extend(alg.mul(&x, &y)?.to_text().lines().map(String::from));
        }
        ShuffleCmd::Check { kind, indices, mode_degrees, edge } => {
            let kind: RelationKind = kind.parse().map_err(CliError::Input)?;
            let indices: Vec<usize> = parse_ints(indices, "index")?.into_iter().map(|i| i as usize).collect();
            let modes: Vec<u32> = parse_ints(mode_degrees, "mode")?.into_iter().map(|m| m as u32).collect();
            let edge = match edge {
                None => None,
                Some(l) => Some(
                    q.doubled_arrows()
                        .into_iter()
                        .find(|e| &q.label(*e) == l)
                        .ok_or_else(|| CliError::Input(format!("no arrow labelled `{l}`")))?,
                ),
            };
            let c = check_relation(&alg, kind, &indices, &modes, edge)?;
            let w = c.witness.map(|w| w.to_string()).unwrap_or_default();
            r.checks.push(Check::new(c.instance.to_string(), c.holds, || w));
        }
    }
    Ok(())
}

fn parse_word(text: &str, n: usize) -> Result<BraidWord, CliError> {
    let mut w = BraidWord::new();
    for l in parse_ints(text, "braid letter")? {
        let i = l.unsigned_abs() as usize;
        if i == 0 || i > n {
            return Err(CliError::Input(format!("braid letter {l} out of range ±1..±{n}")));
        }
        w.push(Letter::T(i - 1, if l > 0 { 1 } else { -1 }));
    }
    Ok(w)
}

fn braid(q: &Quiver, cmd: &BraidCmd, r: &mut Report) -> Result<(), CliError> {
    let BraidCmd::Apply { element, word, coroot } = cmd;
    let alg = LoopAlgebra::new(q)?;
    let v = alg.parse_elt(element)?;
    let out = match (word, coroot) {
        (Some(w), None) => {
            let w = parse_word(w, q.num_vertices())?;
            r.config("word", &w);
            quiver_yangian::loop_env::apply_word(&alg, &w, &v)?
        }
        (None, Some(i)) if (1..q.num_vertices()).contains(i) => {
            r.config("coroot", i);
            translation_l(&alg, &CoweightVector::coroot(q, *i), &v)?
        }
        (None, Some(i)) => return Err(CliError::Input(format!("coroot {i} is not a finite vertex"))),
        _ => return Err(CliError::Input("give exactly one of --word and --coroot".into())),
    };
    r.line(alg.display(&out).to_string());
    Ok(())
}

fn identity(cli: &Cli, q: &Quiver, series: Option<&str>, r: &mut Report) -> Result<(), CliError> {
    r.config("order", cli.order);
    let keep: Option<IdentitySeries> = series.map(str::parse).transpose()?;
    let checks = suites::identities(q, cli.order)?;
    r.checks.extend(checks.into_iter().filter(|c| keep.map_or(true, |s| c.name.starts_with(&s.to_string()))));
    Ok(())
}

fn parse_class(text: &str) -> Result<ThetaClass, CliError> {
    let err = || CliError::Input(format!("bad class `{text}`, expected Y(i,n) or Z(i,n)"));
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (head, rest) = t.split_at(1.min(t.len()));
    let args = rest.strip_prefix('(').and_then(|x| x.strip_suffix(')')).ok_or_else(err)?;
    let v = parse_ints(args, "class").map_err(|_| err())?;
    let [i, n] = v[..] else { return Err(err()) };
    if i < 1 {
        return Err(err());
    }
    match head {
        "Y" if n >= 1 => Ok(ThetaClass::Y { i: i as usize, n: n as u32 }),
        "Z" => Ok(ThetaClass::Z { i: i as usize, n }),
        _ => Err(err()),
    }
}

fn limit(cli: &Cli, q: &Quiver, cmd: &LimitCmd, r: &mut Report) -> Result<(), CliError> {
    let LimitCmd::Mul { x, y, level, depth } = cmd;
    let alg = LoopAlgebra::new(q)?;
    let theta = parse_theta(q, cli.theta.as_deref())?;
    r.config("theta", &theta).config("level", level);
    let pbw = Pbw::new(&alg, PbwOrder::completion(&alg, theta)?);
    let (cx, cy) = (parse_class(x)?, parse_class(y)?);
    let (fx, fy) = (Family::theta(&pbw, cx, THETA_WINDOW), Family::theta(&pbw, cy, THETA_WINDOW));
    let p = limit_multiply(&pbw, &fx, &fy, *level, *depth)?;
    r.line(format!("{cx} * {cy} at level {level}, stable from depth {}", p.depth));
    r.line(p.value.display(&alg).to_string());
    Ok(())
}

fn rep(q: &Quiver, cmd: &RepCmd, r: &mut Report) -> Result<(), CliError> {
    match cmd {
        RepCmd::Check { file } => {
            let m = parse_rep(q, &read(file)?)?;
            r.line(format!("dim {}", m.dim()));
            r.line(format!("nilpotent {}", m.is_nilpotent()));
            for i in 0..q.num_vertices() {
                let f = torsion_membership(&m, i)?;
                r.line(format!("vertex {i}: in T {}, in F {}", f.in_t, f.in_f));
            }
        }
        RepCmd::Reflect { file, vertex, dir } => {
            let dir: Direction = dir.parse().map_err(CliError::Input)?;
            let m = parse_rep(q, &read(file)?)?;
            r.config("vertex", vertex).config("dir", dir);
            let out = reflect(*vertex, &m, dir)?;
            r.output.extend(write_rep(&out).lines().map(String::from));
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let q = load_quiver(&cli.quiver)?;
    let name = match &cli.cmd {
        Cmd::Character { .. } => "character",
        Cmd::Verify { .. } => "verify",
        Cmd::Shuffle(ShuffleCmd::Mul { .. }) => "shuffle mul",
        Cmd::Shuffle(ShuffleCmd::Check { .. }) => "shuffle check",
        Cmd::Braid(_) => "braid apply",
        Cmd::Identity(_) => "identity verify",
        Cmd::Limit(_) => "limit mul",
        Cmd::Rep(RepCmd::Check { .. }) => "rep check",
        Cmd::Rep(RepCmd::Reflect { .. }) => "rep reflect",
    };
    let mut r = Report::new(name);
    r.config("quiver", q.kind().unwrap_or(&cli.quiver));
    match &cli.cmd {
        Cmd::Character { dim_a } => character(cli, &q, *dim_a, &mut r)?,
        Cmd::Verify { suite, count } => verify(cli, &q, *suite, *count, &mut r)?,
        Cmd::Shuffle(c) => shuffle(&q, c, &mut r)?,
        Cmd::Braid(c) => braid(&q, c, &mut r)?,
        Cmd::Identity(IdentityCmd::Verify { series }) => identity(cli, &q, series.as_deref(), &mut r)?,
        Cmd::Limit(c) => limit(cli, &q, c, &mut r)?,
        Cmd::Rep(c) => rep(&q, c, &mut r)?,
    }
    Ok(r)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Structured => Format::Structured,
    };
    match run(&cli) {
        Ok(r) => {
            print!("{}", r.render(format));
            if r.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

