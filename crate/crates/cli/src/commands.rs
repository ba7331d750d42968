//! Subcommands. Every command renders into a `String`; nothing here touches
//! stdout or the environment directly.

use std::ffi::OsString;
use std::fmt::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use nabla_core::alexander::{nabla_from_seifert, nabla_manifold, normalize_delta, NablaResult};
use nabla_core::gaussian::{gaussian_pair, strut_part_of_aarhus, StrutQuadratic};
use nabla_core::mmr::{
    aarhus_wheels, lmo_wheel_data, mmr_series, nabla_from_lmo_wheel_data, LmoWheelData,
};
use nabla_core::rational;
use nabla_core::surgery::{h1_order, signature_pair, surgery_transform};
use nabla_core::wheels::WheelSeries;
use nabla_core::{HalfLaurent, RatMatrix, ZPoly};

use crate::formats::{read_json, LinkingFile, LmoWheelFile, SeifertFile};
use crate::parse::{parse_laurent, parse_positive, parse_series, parse_zpoly};
use crate::{fixtures, CliError, DEFAULT_ORDER, ORDER_ENV};

#[derive(Debug, Parser)]
#[command(
    name = "nabla-lmo",
    version,
    about = "Exact Alexander polynomials and the wheel part of LMO invariants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// ∇ of a link from a Seifert-matrix file.
    Nabla {
        #[arg(long)]
        seifert: PathBuf,
        /// Overrides the "components" field of the file.
        #[arg(long)]
        components: Option<usize>,
        /// |Tor H_1| of the ambient manifold; normalizes as a rank-one manifold.
        #[arg(long)]
        tor: Option<String>,
    },
    /// Normalize a Laurent polynomial Δ into ∇ for a given |H_1|.
    NormalizeDelta {
        #[arg(allow_hyphen_values = true)]
        delta: String,
        #[arg(long, default_value = "1")]
        tor: String,
    },
    /// Post-surgery linking matrix, signature and |H_1|.
    Surgery {
        #[arg(long)]
        linking: PathBuf,
    },
    /// Strut part of the Århus integral.
    AarhusStruts {
        #[arg(long)]
        linking: PathBuf,
        #[arg(long, value_enum, default_value_t = Route::Both)]
        route: Route,
    },
    /// c · ∇(K) evaluated at t^(1/2) = e^(h/2).
    Mmr {
        #[arg(long)]
        seifert: PathBuf,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Wheel part from an h-series or from a Seifert matrix.
    Wheels(WheelsArgs),
    /// LMO wheel data of a rank-one manifold, or its inverse.
    Lmo(LmoArgs),
    /// Checks ∇ → LMO wheel data → ∇.
    Roundtrip {
        #[arg(long)]
        nabla: String,
        #[arg(long)]
        tor: String,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Built-in fixtures.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    /// Pairing of strut exponentials through the inverse matrix.
    Wick,
    /// Schur complement of the surgery block.
    Schur,
    /// Both routes, failing unless they agree.
    Both,
}

#[derive(Debug, Args)]
pub struct OrderArg {
    /// Truncation order in h (default 16, or $NABLA_LMO_ORDER).
    #[arg(long)]
    order: Option<usize>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "source")]
pub struct WheelsSource {
    /// File containing an h-series, or the series itself.
    #[arg(long)]
    from_series: Option<String>,
    #[arg(long)]
    from_seifert: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WheelsArgs {
    #[command(flatten)]
    source: WheelsSource,
    #[command(flatten)]
    order: OrderArg,
}

#[derive(Debug, Args)]
pub struct LmoArgs {
    /// ∇(M) as a polynomial in z.
    #[arg(long, conflicts_with = "invert", requires = "tor")]
    nabla: Option<String>,
    /// |H_1(M)|.
    #[arg(long)]
    tor: Option<String>,
    /// Wheel-data JSON file to convert back into ∇(M).
    #[arg(long, required_unless_present = "nabla")]
    invert: Option<PathBuf>,
    /// Highest power of z in the recovered ∇ (default: order / 2).
    #[arg(long, requires = "invert")]
    max_z_degree: Option<usize>,
    /// Emit the wheel data as JSON.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    order: OrderArg,
}

#[derive(Debug, Subcommand)]
pub enum FixturesAction {
    /// Print the fixture table with expected ∇.
    List,
    /// Print one fixture as a Seifert-matrix file.
    Show { name: String },
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Ctx {
    default_order: usize,
}

impl Ctx {
    fn order(&self, o: &OrderArg) -> usize {
        o.order.unwrap_or(self.default_order)
    }
}

/// Parses `args` (including the program name) and executes the command.
/// `env_order` is the value of `NABLA_LMO_ORDER`, if set.
pub fn run<I, T>(args: I, env_order: Option<&str>) -> Outcome
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
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let default_order = match env_order {
        None => DEFAULT_ORDER,
        Some(s) => match s.trim().parse() {
            Ok(d) => d,
            Err(_) => {
                return Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("error: {ORDER_ENV}={s:?} is not a non-negative integer\n"),
                }
            }
        },
    };
    let ctx = Ctx { default_order };
    match execute(&cli.command, &ctx) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(cmd: &Command, ctx: &Ctx) -> Result<String, CliError> {
    match cmd {
        Command::Nabla {
            seifert,
            components,
            tor,
        } => nabla(seifert, *components, tor.as_deref()),
        Command::NormalizeDelta { delta, tor } => normalize(delta, tor),
        Command::Surgery { linking } => surgery(linking),
        Command::AarhusStruts { linking, route } => aarhus_struts(linking, *route),
        Command::Mmr { seifert, order } => mmr(seifert, ctx.order(order)),
        Command::Wheels(args) => wheels(args, ctx.order(&args.order)),
        Command::Lmo(args) => lmo(args, ctx.order(&args.order)),
        Command::Roundtrip { nabla, tor, order } => roundtrip(nabla, tor, ctx.order(order)),
        Command::Fixtures { action } => fixtures_cmd(action),
    }
}

fn render_nabla(out: &mut String, r: &NablaResult) {
    writeln!(out, "nabla(z) = {}", r.z_form).unwrap();
    writeln!(out, "nabla(t) = {}", r.polynomial).unwrap();
}

fn render_matrix(out: &mut String, labels: &[String], m: &RatMatrix) {
    if labels.is_empty() {
        writeln!(out, "(empty)").unwrap();
        return;
    }
    let cells: Vec<Vec<String>> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let width = cells
        .iter()
        .flatten()
        .chain(labels)
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1);
    let pad = labels.iter().map(|l| l.chars().count()).max().unwrap_or(1);
    write!(out, "{:pad$}", "").unwrap();
    for l in labels {
        write!(out, "  {l:>width$}").unwrap();
    }
    out.push('\n');
    for (l, row) in labels.iter().zip(&cells) {
        write!(out, "{l:pad$}").unwrap();
        for c in row {
            write!(out, "  {c:>width$}").unwrap();
        }
        out.push('\n');
    }
}

fn read_seifert(path: &Path) -> Result<SeifertFile, CliError> {
    read_json(path)
}

fn nabla(path: &Path, components: Option<usize>, tor: Option<&str>) -> Result<String, CliError> {
    let file = read_seifert(path)?;
    let v = file.seifert()?;
    let ell = components.unwrap_or(file.components());
    let mut out = String::new();
    if let Some(name) = &file.name {
        writeln!(out, "name: {name}").unwrap();
    }
    writeln!(out, "components: {ell}").unwrap();
    match tor {
        None => render_nabla(&mut out, &nabla_from_seifert(&v, ell)?),
        Some(t) => {
            let t = rational::from_bigint(parse_positive(t)?.into());
            let m = nabla_manifold(&v, &t)?;
            writeln!(out, "torsion order: {}", m.torsion_order).unwrap();
            render_nabla(&mut out, &m.nabla);
        }
    }
    Ok(out)
}

fn normalize(delta: &str, tor: &str) -> Result<String, CliError> {
    let d = parse_laurent(delta)?;
    let t = rational::from_bigint(parse_positive(tor)?.into());
    let r = normalize_delta(&d, &t)?;
    let mut out = String::new();
    render_nabla(&mut out, &r.nabla);
    let unit = HalfLaurent::monomial(r.shift, rational::int(r.sign.into()));
    writeln!(out, "unit applied: {unit}").unwrap();
    Ok(out)
}

fn surgery(path: &Path) -> Result<String, CliError> {
    let m = read_json::<LinkingFile>(path)?.framed_link()?;
    let lt = surgery_transform(&m)?;
    let mut out = String::new();
    writeln!(out, "surgery on: {}", m.surgery_labels().join(", ")).unwrap();
    writeln!(out, "linking matrix after surgery:").unwrap();
    render_matrix(&mut out, &m.residual_labels(), &lt);
    let (pos, neg) = signature_pair(&m.surgery_block())?;
    writeln!(out, "signature of surgery block: ({pos}, {neg})").unwrap();
    if m.integral_surgery() && m.surgery_block().is_integral() {
        writeln!(out, "|H_1| = {}", h1_order(&m.surgery_block())?).unwrap();
    }
    Ok(out)
}

fn aarhus_struts(path: &Path, route: Route) -> Result<String, CliError> {
    let m = read_json::<LinkingFile>(path)?.framed_link()?;
    let q: StrutQuadratic = match route {
        Route::Wick => gaussian_pair(&m)?,
        Route::Schur => strut_part_of_aarhus(&m)?,
        Route::Both => {
            let a = gaussian_pair(&m)?;
            let b = strut_part_of_aarhus(&m)?;
            if a != b {
                return Err(CliError::Mismatch("wick and schur routes disagree".into()));
            }
            a
        }
    };
    let mut out = String::new();
    writeln!(out, "exp( {} )", q.exponent().render(&q.labels)).unwrap();
    render_matrix(&mut out, &q.labels, &q.q);
    Ok(out)
}

fn mmr(path: &Path, order: usize) -> Result<String, CliError> {
    let file = read_seifert(path)?;
    let s = mmr_series(&file.seifert()?, file.components(), order)?;
    Ok(format!("{s}\n"))
}

fn wheels(args: &WheelsArgs, order: usize) -> Result<String, CliError> {
    let w = if let Some(src) = &args.source.from_series {
        let path = Path::new(src);
        let text = if path.is_file() {
            std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{src}: {e}")))?
        } else {
            src.clone()
        };
        WheelSeries::from_series(&parse_series(&text, order)?)?
    } else {
        let path = args
            .source
            .from_seifert
            .as_ref()
            .expect("clap group requires a source");
        let file = read_seifert(path)?;
        if file.components() != 1 {
            return Err(CliError::Math(nabla_core::Error::BadSeifertSize {
                size: file.matrix.len(),
                components: file.components(),
            }));
        }
        aarhus_wheels(&file.seifert()?, order)?
    };
    Ok(format!("{w}\n"))
}

fn render_lmo(d: &LmoWheelData, json: bool) -> String {
    if json {
        let mut s =
            serde_json::to_string_pretty(&LmoWheelFile::from_data(d)).expect("serializable");
        s.push('\n');
        return s;
    }
    format!(
        "order: {}\n|H_1|: {}\nknot wheels: {}\nnu wheels: {}\n",
        d.order, d.h1_order, d.knot_wheels, d.nu_wheels
    )
}

fn lmo(args: &LmoArgs, order: usize) -> Result<String, CliError> {
    if let Some(path) = &args.invert {
        let data = read_json::<LmoWheelFile>(path)?.data()?;
        let max = args.max_z_degree.unwrap_or(data.order / 2);
        let nabla = nabla_from_lmo_wheel_data(&data, max)?;
        return Ok(format!(
            "nabla(z) = {nabla}\nnabla(t) = {}\n",
            nabla.to_laurent()
        ));
    }
    let nabla = parse_zpoly(args.nabla.as_deref().expect("clap requires --nabla"))?;
    let tor = parse_positive(args.tor.as_deref().expect("clap requires --tor"))?;
    Ok(render_lmo(&lmo_wheel_data(&nabla, tor, order)?, args.json))
}

fn roundtrip(nabla: &str, tor: &str, order: usize) -> Result<String, CliError> {
    let p: ZPoly = parse_zpoly(nabla)?;
    let tor = parse_positive(tor)?;
    let data = lmo_wheel_data(&p, tor, order)?;
    let degree = p.z_degree().unwrap_or(0);
    let back = nabla_from_lmo_wheel_data(&data, degree)?;
    if back != p {
        return Err(CliError::Mismatch(format!(
            "round trip failed: {p} came back as {back}"
        )));
    }
    let mut out = render_lmo(&data, false);
    writeln!(out, "recovered: {back}").unwrap();
    writeln!(out, "ok").unwrap();
    Ok(out)
}

fn fixtures_cmd(action: &FixturesAction) -> Result<String, CliError> {
    match action {
        FixturesAction::List => {
            let all = fixtures::load()?;
            let w = all.iter().map(|f| f.name.len()).max().unwrap_or(4).max(4);
            let mut out = format!(
                "{:w$}  {:>10}  {:<24}  nabla\n",
                "name", "components", "seifert"
            );
            for f in &all {
                let rows: Vec<String> = f
                    .seifert
                    .entries()
                    .to_rows()
                    .iter()
                    .map(|r| {
                        format!(
                            "[{}]",
                            r.iter()
                                .map(ToString::to_string)
                                .collect::<Vec<_>>()
                                .join(",")
                        )
                    })
                    .collect();
                writeln!(
                    out,
                    "{:w$}  {:>10}  {:<24}  {}",
                    f.name,
                    f.components,
                    format!("[{}]", rows.join(",")),
                    f.expected_nabla
                )
                .unwrap();
            }
            Ok(out)
        }
        FixturesAction::Show { name } => {
            let f = fixtures::find(name)
                .ok_or_else(|| CliError::Format(format!("no fixture named {name:?}")))?;
            f.check()?;
            let file = SeifertFile::from_matrix(&f.seifert, f.components, Some(f.name.clone()));
            Ok(serde_json::to_string_pretty(&file).expect("serializable") + "\n")
        }
    }
}
