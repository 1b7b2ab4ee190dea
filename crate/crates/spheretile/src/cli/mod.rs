//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for
//! unusable arguments or input.

mod tables;

use std::fmt::Write as _;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::angles::{AngleExpr, AngleTriple, IntervalBound, Ordered, Rational};
use crate::counting::{check_deficit, check_euler, stats_from_avc};
use crate::edges::{enumerate_patterns, EdgePattern};
use crate::geometry::{realize_tiling, write_obj, TriangleGeometry, DEFAULT_SUBDIVISIONS};
use crate::tiling::{
    generate_f16_sporadic, generate_f36_rational, generate_f8_sporadic, generate_one_layer, generate_subdivided_quad, generate_two_layer,
    generate_two_layer_rotation, parse_relation, verify, Offset, QuadVariant, TilingComplex,
};
use crate::vertices::symbolic::{derive_symbolic, Scope};
use crate::vertices::tables::{render_row, seed_table};
use crate::vertices::{derive_avc, Avc, FCond, Kind, Profile, VertexVector};

pub use tables::{golden_dir, TableName};

/// Largest closure or angle residual accepted from a realization, radians.
pub const REALIZE_TOL: f64 = 1e-8;

#[derive(Parser, Debug)]
#[command(name = "spheretile", version, about = "Non-side-to-side tilings of the sphere by congruent triangles")]
pub struct Cli {
    /// Output style; `records` is line-oriented and parses back.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Derive the vertex combinations forced by a seed vertex.
    Avc {
        /// Seed vertex in compact form, e.g. `a3`, `a2bc`.
        #[arg(long)]
        seed: String,
        /// Tile count, or `sym` for the symbolic table row.
        #[arg(long, default_value = "sym")]
        f: String,
        /// Seed is a half vertex.
        #[arg(long)]
        half: bool,
        /// Also impose the three corner inequalities.
        #[arg(long)]
        convex: bool,
    },
    /// Check the counting identities for an AVC with numeric counts or a tiling file.
    Counts {
        file: PathBuf,
        /// Tile count, required for AVC record files.
        #[arg(long)]
        f: Option<u64>,
    },
    /// List extended-edge patterns up to a repetition count.
    Edges {
        /// Largest number of repeated a sides
        #[arg(long, default_value_t = 1)]
        kmax: u32,
    },
    /// Embed a tiling numerically on the unit sphere.
    Realize {
        file: PathBuf,
        #[command(flatten)]
        angles: AngleArgs,
        /// Write a Wavefront OBJ mesh.
        #[arg(long)]
        obj: Option<PathBuf>,
    },
    /// Run all combinatorial checks on a tiling (file or stdin).
    Verify {
        file: Option<PathBuf>,
        #[command(flatten)]
        angles: AngleArgs,
        /// Extra length relation such as `b=2c`; repeatable.
        #[arg(long = "relation")]
        relations: Vec<String>,
    },
    /// Emit a tiling in the interchange format.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Regenerate a reference table and compare it with its golden file.
    Tables {
        #[arg(value_enum)]
        which: TableName,
        /// Overwrite the golden file with the regenerated table.
        #[arg(long)]
        bless: bool,
    },
}

#[derive(Args, Debug, Clone)]
pub struct AngleArgs {
    /// Angles in units of π, e.g. "t,1-t,2/3"; defaults to the file's `angles` record.
    #[arg(long)]
    pub angles: Option<String>,
    /// Value of the free parameter t.
    #[arg(long)]
    pub t: Option<f64>,
    /// Length of side b in units of π when α = π (lunes).
    #[arg(long, default_value_t = 0.4)]
    pub split: f64,
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// k degenerate lunes around the poles
    OneLayer {
        #[arg(long)]
        k: u32,
        /// Rotate half the lunes by this fraction of b.
        #[arg(long)]
        offset: Option<String>,
    },
    /// n triangles around each pole, meeting along the equator
    TwoLayer {
        #[arg(long)]
        n: u32,
        /// Rotate one hemisphere by this fraction of b.
        #[arg(long)]
        rotate: Option<String>,
    },
    /// T(4α²γ; 4β²γ)
    F8,
    /// T(8α²βγ; 4β²γ²)
    F16,
    /// T(6α⁴, 2β⁶, 6βγ⁶; 6α², 6β³)
    F36,
    /// Quadrilateral earth map with each tile cut into three triangles
    Quad {
        #[arg(long, default_value_t = 10)]
        f_prime: u32,
        /// 1 for the earth map subdivision, 2..4 for its modifications.
        #[arg(long, default_value_t = 1)]
        variant: u32,
    },
}

/// Result of a command: text for stdout, and whether the checks passed.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub pass: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), pass: true }
    }

    fn checked(stdout: String, pass: bool) -> Self {
        Outcome { stdout, stderr: String::new(), pass }
    }
}

/// Bad arguments or unreadable input.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(o) => {
            print!("{}", o.stdout);
            eprint!("{}", o.stderr);
            ExitCode::from(if o.pass { 0 } else { 1 })
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, UsageError> {
    let fmt = cli.format;
    match &cli.command {
        Command::Avc { seed, f, half, convex } => {
            let kind = if *half { Kind::Half } else { Kind::Full };
            let profile = if *convex { Profile::CONVEX } else { Profile::ORDERED };
            cmd_avc(seed, f, kind, profile, fmt)
        }
        Command::Counts { file, f } => cmd_counts(&read(Some(file))?, *f, fmt),
        Command::Edges { kmax } => Ok(cmd_edges(*kmax, fmt)),
        Command::Realize { file, angles, obj } => cmd_realize(&read(Some(file))?, angles, obj.as_ref(), fmt),
        Command::Verify { file, angles, relations } => cmd_verify(&read(file.as_ref())?, angles, relations, fmt),
        Command::Generate { family } => cmd_generate(family).map(|c| Outcome::ok(c.to_text())),
        Command::Tables { which, bless } => tables::cmd_tables(*which, *bless, &golden_dir()),
    }
}

fn read(path: Option<&PathBuf>) -> Result<String, UsageError> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map_err(|e| UsageError(format!("{}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, UsageError> {
    s.trim().parse::<Rational>().map_err(|_| UsageError(format!("not a fraction: {s}")))
}

pub fn cmd_avc(seed: &str, f: &str, kind: Kind, profile: Profile, fmt: Format) -> Result<Outcome, UsageError> {
    let seed = VertexVector::parse_compact(seed, kind)?;
    if f == "sym" {
        let scope = match seed.degree() {
            3..=5 if kind == Kind::Full => seed_table(seed.degree()).scope,
            _ => Scope::default(),
        };
        let row = derive_symbolic(&seed, profile, &scope)?;
        return Ok(Outcome::ok(render_row(&row)));
    }
    let f: u64 = f.parse().map_err(|_| UsageError(format!("--f takes a tile count or `sym`, got {f}")))?;
    let avc = derive_avc(&seed, f, profile)?;
    let out = match fmt {
        Format::Records => avc.records(),
        Format::Text => format!("{}\n", avc_text(&avc, f)),
    };
    Ok(Outcome::ok(out))
}

fn avc_text(avc: &Avc, f: u64) -> String {
    if avc.is_empty() {
        return format!("f={f}: none (seed infeasible)");
    }
    let part = |k: Kind| avc.vertices(k).iter().map(|v| v.greek()).collect::<Vec<_>>().join(", ");
    format!("f={f}: full {{{}}}, half {{{}}}", part(Kind::Full), part(Kind::Half))
}

pub fn cmd_counts(text: &str, f: Option<u64>, fmt: Format) -> Result<Outcome, UsageError> {
    let (avc, f) = if text.lines().any(|l| l.trim_start().starts_with("tile ")) {
        let c = load_complex(text)?;
        let f = c.f();
        (c.avc(), f)
    } else {
        let f = f.ok_or_else(|| UsageError("AVC record files need --f".into()))?;
        (Avc::parse_records(FCond::Exact(f), text)?, f)
    };
    let stats = stats_from_avc(&avc, f).ok_or_else(|| UsageError("every count must be numeric (xN)".into()))?;
    let mut report = check_euler(&stats);
    report.extend(check_deficit(&stats));
    let mut out = String::new();
    match fmt {
        Format::Text => {
            let _ = writeln!(out, "{} with f={f}", avc.notation());
            out.push_str(&report.to_string());
        }
        Format::Records => {
            for c in &report.checks {
                let _ = writeln!(out, "check {} {} {} {}", c.id.replace(' ', "_"), c.lhs, c.rhs, if c.pass { "pass" } else { "fail" });
            }
        }
    }
    Ok(Outcome::checked(out, report.pass()))
}

pub fn cmd_edges(kmax: u32, fmt: Format) -> Outcome {
    let mut out = String::new();
    for p in enumerate_patterns(kmax) {
        match (fmt, &p) {
            (Format::Records, EdgePattern::Words(w)) => out.push_str(&w.record()),
            (Format::Records, EdgePattern::GreatCircle) => out.push_str("edge great-circle"),
            (Format::Text, _) => out.push_str(&p.to_string()),
        }
        out.push('\n');
    }
    Outcome::ok(out)
}

fn load_complex(text: &str) -> Result<TilingComplex, UsageError> {
    let c = TilingComplex::parse(text)?;
    if c.vertices.is_empty() {
        return Ok(c.with_derived_vertices().map_err(UsageError)?);
    }
    Ok(c)
}

fn angle_triple(c: &TilingComplex, args: &AngleArgs) -> Result<AngleTriple, UsageError> {
    let Some(spec) = &args.angles else {
        return Ok(c.angle_triple()?);
    };
    let parts: Vec<&str> = spec.split(',').collect();
    let [x, y, z] = parts.as_slice() else {
        return Err(UsageError(format!("--angles needs three comma-separated values, got {spec}")));
    };
    let e = |s: &str| s.trim().parse::<AngleExpr>().map_err(|_| UsageError(format!("bad angle: {s}")));
    Ok(AngleTriple::new(e(x)?, e(y)?, e(z)?, c.f(), Ordered::Unordered, &IntervalBound::unit())?)
}

fn geometry(angles: &AngleTriple, args: &AngleArgs) -> Result<TriangleGeometry, UsageError> {
    let t = match args.t {
        Some(t) => t,
        None if angles.as_array().iter().all(|a| a.is_rational()) => 0.0,
        None => return Err(UsageError("the angles depend on t; pass --t".into())),
    };
    let [al, be, _] = angles.radians(t);
    if (al - std::f64::consts::PI).abs() < 1e-12 {
        return Ok(TriangleGeometry::lune(be, args.split * std::f64::consts::PI)?);
    }
    Ok(TriangleGeometry::from_triple(angles, t)?)
}

pub fn cmd_realize(text: &str, args: &AngleArgs, obj: Option<&PathBuf>, fmt: Format) -> Result<Outcome, UsageError> {
    let c = load_complex(text)?;
    let angles = angle_triple(&c, args)?;
    let g = geometry(&angles, args)?;
    let r = realize_tiling(&c, &g)?;
    let pass = r.check(REALIZE_TOL).is_ok();
    let mut out = String::new();
    match fmt {
        Format::Text => {
            let _ = writeln!(out, "{g}");
            let _ = writeln!(out, "closure residual {:.3e} ({})", r.closure_residual, r.worst);
            let _ = writeln!(out, "angle residual   {:.3e}", r.angle_residual);
            let _ = writeln!(out, "{}", if pass { "realized" } else { "FAIL" });
        }
        Format::Records => {
            for (k, p) in &r.corners {
                let [x, y, z] = p.coords();
                let _ = writeln!(out, "corner {k} {x:.12} {y:.12} {z:.12}");
            }
            let _ = writeln!(out, "residual {:e} {:e}", r.closure_residual, r.angle_residual);
        }
    }
    if let Some(path) = obj {
        std::fs::write(path, write_obj(&c, &g, &r, DEFAULT_SUBDIVISIONS)).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    }
    Ok(Outcome::checked(out, pass))
}

pub fn cmd_verify(text: &str, args: &AngleArgs, relations: &[String], fmt: Format) -> Result<Outcome, UsageError> {
    let c = load_complex(text)?;
    let angles = angle_triple(&c, args)?;
    let mut rels = c.length_relations();
    for r in relations {
        rels = rels.with(parse_relation(r).map_err(UsageError)?);
    }
    let report = verify(&c, &angles, &rels);
    let mut pass = report.pass();
    let mut out = String::new();
    match fmt {
        Format::Text => out.push_str(&report.to_string()),
        Format::Records => {
            for i in &report.items {
                let _ = writeln!(out, "check {:?} {} {}", i.group, i.subject.replace(' ', "_"), if i.pass { "pass" } else { "fail" });
            }
        }
    }
    if args.t.is_some() || angles.as_array().iter().all(|a| a.is_rational()) {
        // a numeric embedding at the chosen parameter backs up the exact checks
        let g = geometry(&angles, args)?;
        let r = realize_tiling(&c, &g)?;
        let ok = r.check(REALIZE_TOL).is_ok();
        pass &= ok;
        match fmt {
            Format::Text => {
                let _ = writeln!(
                    out,
                    "realization residual {:.3e} {}",
                    r.closure_residual.max(r.angle_residual),
                    if ok { "ok" } else { "FAIL" }
                );
            }
            Format::Records => {
                let _ = writeln!(out, "check Realization residual {}", if ok { "pass" } else { "fail" });
            }
        }
    }
    Ok(Outcome::checked(out, pass))
}

pub fn cmd_generate(family: &Family) -> Result<TilingComplex, UsageError> {
    let offset =
        |s: &Option<String>| -> Result<Option<Offset>, UsageError> { s.as_deref().map(|x| parse_rational(x).map(Offset)).transpose() };
    Ok(match family {
        Family::OneLayer { k, offset: o } => generate_one_layer(*k, offset(o)?)?,
        Family::TwoLayer { n, rotate: None } => generate_two_layer(*n)?,
        Family::TwoLayer { n, rotate } => generate_two_layer_rotation(*n, offset(rotate)?.expect("rotation given"))?,
        Family::F8 => generate_f8_sporadic(),
        Family::F16 => generate_f16_sporadic(),
        Family::F36 => generate_f36_rational(),
        Family::Quad { f_prime, variant } => {
            let v = QuadVariant::from_index(*variant).ok_or_else(|| UsageError(format!("variant must be 1..4, got {variant}")))?;
            generate_subdivided_quad(*f_prime, v)?
        }
    })
}
