//! Command-line front end. Exit codes: 0 when every check passes, 1 on an
//! axiom failure, 2 on unreadable input or bad usage.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bialgebroid::{induced_rho, right_takeuchi_summary, takeuchi_summary, verify_left_bialgebroid, verify_right_bialgebroid, TakeuchiSummary};
use crate::constructions::{
    check_hopf_algebra, check_yetter_drinfeld, cyclic_group_table, dual_hopf, group_algebra, heisenberg_datum,
    heisenberg_double, smash_product, sweedler_h4, symmetric_group_s3_table, HopfAlgebraData, Orientation,
};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Fp, Rational};
use crate::format::{decode, encode, parse_file, to_canonical_json, Structure, StructureFile};
use crate::hopf_algebroid::verify_hopf_algebroid;
use crate::monoid_alg::check_monoid;
use crate::report::Report;

/// Environment variable naming the default field for `build`.
pub const FIELD_ENV: &str = "ALGEBROID_FIELD";

#[derive(Parser, Debug)]
#[command(name = "algebroid", version, about = "Build and verify bialgebroids and Hopf algebroids with exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the checker matching the file's kind.
    Verify {
        file: PathBuf,
        /// Machine-readable report.
        #[arg(long)]
        json: bool,
    },
    /// Write a constructed structure file.
    Build {
        kind: BuildKind,
        /// `Z<n>` or `S3`.
        #[arg(long)]
        group: Option<String>,
        /// Input structure file (a Hopf algebra, or a YD datum for `smash`).
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OrientationArg::BaseIsInput)]
        orientation: OrientationArg,
        /// `rational` or `prime <p>`; defaults to $ALGEBROID_FIELD, then `rational`.
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print balanced tensor, Takeuchi subspace and coproduct image dimensions.
    ReportTakeuchi { file: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "snake_case")]
enum BuildKind {
    GroupAlgebra,
    SweedlerH4,
    Dual,
    Smash,
    HeisenbergDatum,
    HeisenbergDouble,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrientationArg {
    BaseIsInput,
    BaseIsDual,
}

impl From<OrientationArg> for Orientation {
    fn from(o: OrientationArg) -> Self {
        match o {
            OrientationArg::BaseIsInput => Orientation::BaseIsInput,
            OrientationArg::BaseIsDual => Orientation::BaseIsDual,
        }
    }
}

/// Runs `body` with `F` bound to the field named in a structure file.
macro_rules! with_field {
    ($name:expr, $F:ident => $body:expr) => {
        match $name {
            "rational" => {
                type $F = Rational;
                $body
            }
            "prime 2" => {
                type $F = Fp<2>;
                $body
            }
            "prime 3" => {
                type $F = Fp<3>;
                $body
            }
            "prime 5" => {
                type $F = Fp<5>;
                $body
            }
            "prime 7" => {
                type $F = Fp<7>;
                $body
            }
            "prime 11" => {
                type $F = Fp<11>;
                $body
            }
            "prime 13" => {
                type $F = Fp<13>;
                $body
            }
            "prime 101" => {
                type $F = Fp<101>;
                $body
            }
            "prime 65521" => {
                type $F = Fp<65521>;
                $body
            }
            other => Err(Error::Parse(format!("unsupported field {other:?}"))),
        }
    };
}

enum Outcome {
    Pass,
    Fail,
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    let res = match cli.command {
        Command::Verify { file, json } => read(&file).and_then(|f| cmd_verify(&f, json, out)),
        Command::Build { kind, group, input, orientation, field, out: path } => {
            let field = field.or_else(|| std::env::var(FIELD_ENV).ok()).unwrap_or_else(|| "rational".into());
            cmd_build(kind, group.as_deref(), input.as_deref(), orientation.into(), &field, &path)
        }
        Command::ReportTakeuchi { file } => read(&file).and_then(|f| cmd_report_takeuchi(&f, out)),
    };
    match res {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail) => 1,
        Err(Error::AxiomFailure(rep)) => {
            let _ = writeln!(err, "construction failed its own checks:\n{rep}");
            1
        }
        Err(e @ (Error::NotAGroup(_) | Error::BadCharacteristic(..))) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read(path: &Path) -> Result<StructureFile> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_file(&text)
}

fn write_out(path: &Path, file: &StructureFile) -> Result<()> {
    fs::write(path, to_canonical_json(file)).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn verify_structure<F: Field>(s: &Structure<F>) -> Report {
    match s {
        Structure::Monoid(m) => check_monoid(m),
        Structure::HopfAlgebra(a) => check_hopf_algebra(a),
        Structure::LeftBialgebroid(d) => verify_left_bialgebroid(d),
        Structure::RightBialgebroid(d) => verify_right_bialgebroid(d),
        Structure::HopfAlgebroid(h) => verify_hopf_algebroid(h),
        Structure::YdDatum(y) => {
            let mut rep = Report::new();
            rep.extend_prefixed("Hopf algebra", check_hopf_algebra(&y.hopf));
            rep.extend_prefixed("algebra", check_monoid(&y.algebra));
            rep.extend(check_yetter_drinfeld(y));
            rep
        }
    }
}

fn cmd_verify(file: &StructureFile, json: bool, out: &mut dyn Write) -> Result<Outcome> {
    let rep = with_field!(file.field.as_str(), F => decode::<F>(file).map(|s| verify_structure(&s)))?;
    if json {
        let _ = writeln!(out, "{}", rep.to_json());
    } else {
        let _ = write!(out, "{rep}");
    }
    Ok(if rep.passed() { Outcome::Pass } else { Outcome::Fail })
}

fn group_table(name: &str) -> Result<Vec<Vec<usize>>> {
    if name == "S3" {
        return Ok(symmetric_group_s3_table());
    }
    name.strip_prefix('Z')
        .and_then(|n| n.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .map(cyclic_group_table)
        .ok_or_else(|| Error::Parse(format!("unknown group {name:?}; expected Z<n> or S3")))
}

fn input_hopf<F: Field>(group: Option<&str>, input: Option<&Path>) -> Result<HopfAlgebraData<F>> {
    match (group, input) {
        (Some(g), None) => group_algebra(&group_table(g)?),
        (None, Some(p)) => match decode::<F>(&read(p)?)? {
            Structure::HopfAlgebra(a) => Ok(a),
            s => Err(Error::Parse(format!("expected a hopf_algebra file, found {:?}", s.kind()))),
        },
        _ => Err(Error::Parse("give exactly one of --group and --input".into())),
    }
}

fn build<F: Field>(kind: BuildKind, group: Option<&str>, input: Option<&Path>, o: Orientation) -> Result<StructureFile> {
    let s = match kind {
        BuildKind::GroupAlgebra => {
            let g = group.ok_or_else(|| Error::Parse("group_algebra needs --group".into()))?;
            Structure::HopfAlgebra(group_algebra::<F>(&group_table(g)?)?)
        }
        BuildKind::SweedlerH4 => Structure::HopfAlgebra(sweedler_h4::<F>()?),
        BuildKind::Dual => Structure::HopfAlgebra(dual_hopf(&input_hopf::<F>(group, input)?)),
        BuildKind::Smash => {
            let p = input.ok_or_else(|| Error::Parse("smash needs --input with a yd_datum file".into()))?;
            match decode::<F>(&read(p)?)? {
                Structure::YdDatum(y) => {
                    let m = smash_product(&y);
                    let rep = check_monoid(&m);
                    if !rep.passed() {
                        return Err(Error::AxiomFailure(Box::new(rep)));
                    }
                    Structure::Monoid(m)
                }
                s => return Err(Error::Parse(format!("expected a yd_datum file, found {:?}", s.kind()))),
            }
        }
        BuildKind::HeisenbergDatum => Structure::YdDatum(heisenberg_datum(&input_hopf::<F>(group, input)?, o)),
        BuildKind::HeisenbergDouble => Structure::HopfAlgebroid(heisenberg_double(&input_hopf::<F>(group, input)?, o)?),
    };
    Ok(encode(&s))
}

fn cmd_build(
    kind: BuildKind,
    group: Option<&str>,
    input: Option<&Path>,
    o: Orientation,
    field: &str,
    out: &Path,
) -> Result<Outcome> {
    let file = with_field!(field, F => build::<F>(kind, group, input, o))?;
    write_out(out, &file)?;
    Ok(Outcome::Pass)
}

fn print_summary(out: &mut dyn Write, side: &str, t: &TakeuchiSummary) {
    let _ = writeln!(out, "{side}balanced tensor square: {}", t.balanced_dim);
    let _ = writeln!(out, "{side}Takeuchi subspace: {}", t.takeuchi_dim);
    let _ = writeln!(out, "{side}image of the coproduct: {}", t.image_dim);
    let _ = writeln!(out, "{side}image inside Takeuchi subspace: {}", t.contained);
}

fn summaries<F: Field>(file: &StructureFile) -> Result<Vec<(&'static str, TakeuchiSummary)>> {
    match decode::<F>(file)? {
        Structure::LeftBialgebroid(d) => Ok(vec![("", takeuchi_summary(&d, &induced_rho(&d)?))]),
        Structure::RightBialgebroid(d) => Ok(vec![("", right_takeuchi_summary(&d)?)]),
        Structure::HopfAlgebroid(h) => Ok(vec![
            ("left: ", takeuchi_summary(&h.left, &induced_rho(&h.left)?)),
            ("right: ", right_takeuchi_summary(&h.right)?),
        ]),
        s => Err(Error::Parse(format!("report-takeuchi needs a bialgebroid file, found {:?}", s.kind()))),
    }
}

fn cmd_report_takeuchi(file: &StructureFile, out: &mut dyn Write) -> Result<Outcome> {
    let sums = with_field!(file.field.as_str(), F => summaries::<F>(file))?;
    for (side, t) in &sums {
        print_summary(out, side, t);
    }
    Ok(if sums.iter().all(|(_, t)| t.contained) { Outcome::Pass } else { Outcome::Fail })
}
