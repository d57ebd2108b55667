//! `bezout`: intersection cycles of plane curves from the command line.

mod report;

use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use bezout_core::numeric::{DEFAULT_PRECISION, MAX_PRECISION};
use bezout_core::plot::{plot, PlotOptions, PlotRange, Slice};
use bezout_core::{homogenize, intersection_cycle, parse_poly, unpack, Error, HPoly};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "bezout",
    version,
    about = "Exact intersection cycles of projective plane curves over Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the intersection cycle of two curves
    Intersect(IntersectArgs),
    /// Intersection cycle followed by its approximate points
    Points(IntersectArgs),
    /// Intersection cycle with Bezout, membership and resultant checks
    Verify(IntersectArgs),
    /// SVG plot of a real affine slice of both curves
    Plot(PlotArgs),
}

#[derive(Args)]
struct Curves {
    /// First curve, e.g. "y^2*z - x^3"
    #[arg(allow_hyphen_values = true)]
    a: String,
    /// Second curve
    #[arg(allow_hyphen_values = true)]
    b: String,
    /// Homogenize each input (polynomials in x, y)
    #[arg(long)]
    affine: bool,
}

#[derive(Args)]
struct IntersectArgs {
    #[command(flatten)]
    curves: Curves,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Append approximate complex points
    #[arg(long)]
    points: bool,
    /// Working precision in decimal digits for --points
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: u32,
    /// Run the Bezout count, membership test and resultant oracle
    #[arg(long)]
    verify: bool,
    /// Seed for the resultant oracle's coordinate changes
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct PlotArgs {
    #[command(flatten)]
    curves: Curves,
    /// Slice to draw: z=1, y=1 or x=1
    #[arg(long, default_value = "z=1")]
    slice: String,
    /// Window as umin:umax:vmin:vmax
    #[arg(long, default_value = "-2:2:-2:2", allow_hyphen_values = true)]
    range: String,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Marching-squares grid size
    #[arg(long, default_value_t = 512)]
    grid: usize,
}

/// Failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CommonComponent(_) => 2,
            Error::Internal(_) | Error::NoConvergence { .. } => 3,
            _ => 1,
        };
        let message = match &e {
            Error::CommonComponent(_) => e.to_string(),
            _ => format!("error: {e}"),
        };
        Failure { code, message }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: format!("error: {}", message.into()),
    }
}

fn read_curve(label: &str, src: &str, affine: bool) -> Result<HPoly, Failure> {
    let p = parse_poly(src).map_err(|e| match e {
        Error::Parse { offset, message } => usage(format!(
            "{label}: parse error at offset {offset}: {message}\n  {src}\n  {caret:>width$}",
            caret = "^",
            width = offset + 1
        )),
        other => Failure::from(other),
    })?;
    let h = if affine {
        homogenize(&p)
    } else {
        HPoly::new(p)
    };
    h.map_err(|e| match e {
        Error::NotHomogeneous => usage(format!(
            "{label} is not homogeneous (use --affine for polynomials in x, y)"
        )),
        Error::ZeroPolynomial => usage(format!("{label} is the zero polynomial")),
        other => Failure::from(other),
    })
}

fn color_enabled() -> bool {
    std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal()
}

fn run_intersect(args: &IntersectArgs, points: bool, verify: bool) -> Result<String, Failure> {
    if args.precision == 0 || args.precision > MAX_PRECISION {
        return Err(usage(format!(
            "--precision must be between 1 and {MAX_PRECISION}"
        )));
    }
    let a = read_curve("A", &args.curves.a, args.curves.affine)?;
    let b = read_curve("B", &args.curves.b, args.curves.affine)?;
    if a.is_constant() || b.is_constant() {
        eprintln!("warning: a constant polynomial defines the empty curve; the cycle is empty");
    }
    let cycle = intersection_cycle(&a, &b)?;
    let pts = if points {
        Some(unpack(&cycle, args.precision, Some((&a, &b)))?)
    } else {
        None
    };
    let checks = if verify {
        Some(report::run_checks(&a, &b, &cycle, args.seed)?)
    } else {
        None
    };
    let doc = report::Document::new(&a, &b, &cycle, pts.as_deref(), checks.as_ref());
    let out = if args.json {
        let mut s = serde_json::to_string_pretty(&doc)
            .map_err(|e| Failure::from(Error::Internal(e.to_string())))?;
        s.push('\n');
        s
    } else {
        report::text(
            &doc,
            &cycle,
            pts.as_deref(),
            checks.as_ref(),
            args.precision,
            color_enabled(),
        )
    };
    if checks.as_ref().is_some_and(|c| !c.all_passed()) {
        print!("{out}");
        return Err(Failure {
            code: 3,
            message: "error: verification failed".into(),
        });
    }
    Ok(out)
}

fn run_plot(args: &PlotArgs) -> Result<String, Failure> {
    let slice: Slice = args.slice.parse()?;
    let range: PlotRange = args.range.parse()?;
    if args.grid < 2 || args.grid > 4096 {
        return Err(usage("--grid must be between 2 and 4096"));
    }
    let a = read_curve("A", &args.curves.a, args.curves.affine)?;
    let b = read_curve("B", &args.curves.b, args.curves.affine)?;
    let cycle = intersection_cycle(&a, &b)?;
    let opts = PlotOptions {
        slice,
        range,
        grid: args.grid,
    };
    let out = plot(&a, &b, &cycle, &opts)?;
    for w in &out.warnings {
        eprintln!("warning: {w}");
    }
    match &args.out {
        Some(path) => {
            std::fs::write(path, &out.svg)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            let labels: Vec<String> = out
                .markers
                .iter()
                .map(|m| m.multiplicity.to_string())
                .collect();
            Ok(format!(
                "wrote {} ({} marker{}{})\n",
                path.display(),
                out.markers.len(),
                if out.markers.len() == 1 { "" } else { "s" },
                if labels.is_empty() {
                    String::new()
                } else {
                    let noun = if labels.len() == 1 {
                        "multiplicity"
                    } else {
                        "multiplicities"
                    };
                    format!(": {noun} {}", labels.join(", "))
                }
            ))
        }
        None => Ok(out.svg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Intersect(a) => run_intersect(a, a.points, a.verify),
        Command::Points(a) => run_intersect(a, true, a.verify),
        Command::Verify(a) => run_intersect(a, a.points, true),
        Command::Plot(a) => run_plot(a),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
