//! Command dispatch. Every command is a thin shell over `effalg-core`.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 usage or parse
//! error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use effalg_core::algebra::builtin;
use effalg_core::catlaws::{
    algebra_from_ea, em_algebra_check, em_structures, left_triangle, right_triangle,
    verify_counit_naturality, verify_monad_laws, verify_unit_naturality, MONAD_SIZE_LIMIT,
};
use effalg_core::enumerate::{enumerate_eas, enumerate_geas, Mode};
use effalg_core::morphisms::{enumerate_morphisms, transpose_to_ea, transpose_to_gea};
use effalg_core::states::{
    enumerate_ideals, extend_state, ideal_correspondence_probe, AdditiveMap,
};
use effalg_core::{unitize, Algebra, FiniteEa, FiniteGea, Kind, Report};
use thiserror::Error;

use crate::dot::emit_dot;
use crate::format::{
    emit_algebra, emit_morphism, emit_values, morphism_line, parse_algebra, parse_morphism,
    parse_values, AlgebraFile, ParseError,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Core(#[from] effalg_core::Error),
}

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    fn from_ok(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "effalg",
    version,
    about = "Finite effect algebras and their unitizations"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Gea,
    Ea,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Gea => Kind::Gea,
            KindArg::Ea => Kind::Ea,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Direction {
    ToEa,
    ToGea,
}

/// Algebra arguments are file paths or `builtin:NAME`.
#[derive(Debug, Subcommand)]
enum Command {
    /// Validate an algebra file.
    Check { file: String },
    /// Print (or write) the unitization of a generalized effect algebra.
    Unitize {
        file: String,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: bool,
    },
    /// Print the covering pairs of the derived order.
    Order {
        file: String,
        #[arg(long)]
        dot: bool,
    },
    /// Enumerate morphisms between two algebras.
    Hom {
        src: String,
        dst: String,
        #[arg(long, value_enum, default_value = "gea")]
        kind: KindArg,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        full_only: bool,
    },
    /// Check adjunction, monad and algebra laws at an object.
    Laws {
        file: String,
        #[arg(long, value_name = "WITH")]
        triangles: Option<String>,
        #[arg(long)]
        monad: bool,
        #[arg(long)]
        em: bool,
        #[arg(long, value_name = "MOR")]
        naturality: Option<String>,
    },
    /// Additive maps and states.
    State {
        #[command(subcommand)]
        action: StateCommand,
    },
    /// List ideals.
    Ideals {
        file: String,
        #[arg(long)]
        probe: bool,
    },
    /// Enumerate all algebras of a given size.
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value = "gea")]
        kind: KindArg,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long, value_name = "DIR")]
        emit: Option<PathBuf>,
    },
    /// Transpose a morphism across the adjunction.
    Transpose {
        alg: String,
        mor: String,
        #[arg(long, value_enum)]
        direction: Direction,
    },
}

#[derive(Debug, Subcommand)]
enum StateCommand {
    /// Extend an additive map on P to the state on F(P).
    Extend { alg: String, map: String },
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(cli.command, out) {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_algebra(reference: &str) -> Result<AlgebraFile, CliError> {
    load_algebra_from(reference, None)
}

/// `builtin:NAME` or a path; relative paths resolve against `base` when
/// given.
fn load_algebra_from(reference: &str, base: Option<&Path>) -> Result<AlgebraFile, CliError> {
    if let Some(name) = reference.strip_prefix("builtin:") {
        let algebra = builtin::by_name(name)?;
        return Ok(AlgebraFile {
            name: name.to_string(),
            algebra,
        });
    }
    let mut path = PathBuf::from(reference);
    if let Some(base) = base {
        if path.is_relative() {
            path = base.join(path);
        }
    }
    let text = read(&path)?;
    parse_algebra(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn load_morphism(
    path: &str,
    source: &Algebra,
) -> Result<
    (
        crate::format::MorphismFile,
        AlgebraFile,
        effalg_core::Morphism,
    ),
    CliError,
> {
    let text = read(Path::new(path))?;
    let parse_err = |source| CliError::Parse {
        path: path.to_string(),
        source,
    };
    let file = parse_morphism(&text).map_err(parse_err)?;
    let target = load_algebra_from(&file.target, Path::new(path).parent())?;
    let f = file.resolve(source, &target.algebra).map_err(parse_err)?;
    Ok((file, target, f))
}

/// Treats a bounded algebra as an effect algebra.
fn as_ea(file: &AlgebraFile) -> Option<FiniteEa> {
    match &file.algebra {
        Algebra::Ea(e) => Some(e.clone()),
        Algebra::Gea(g) => FiniteEa::from_gea(g.clone()).ok(),
    }
}

fn require_ea(file: &AlgebraFile) -> Result<FiniteEa, CliError> {
    as_ea(file)
        .ok_or_else(|| CliError::Usage(format!("{} is not an effect algebra (no top)", file.name)))
}

/// Writes `label: ok` or the failing report. Returns whether it passed.
fn section(out: &mut dyn Write, label: &str, report: &Report) -> io::Result<bool> {
    if report.is_valid() {
        writeln!(out, "{label}: ok")?;
    } else {
        writeln!(out, "{label}: FAILED")?;
        for line in report.to_string().lines() {
            writeln!(out, "  {line}")?;
        }
    }
    Ok(report.is_valid())
}

/// Fails with a report unless the algebra is a valid generalized effect
/// algebra.
fn valid_gea(file: &AlgebraFile, out: &mut dyn Write) -> Result<Option<FiniteGea>, CliError> {
    let g = file.algebra.as_gea();
    let report = g.validate();
    if report.is_valid() {
        Ok(Some(g.clone()))
    } else {
        section(
            out,
            &format!("{}: generalized effect algebra axioms", file.name),
            &report,
        )
        .map_err(io_err)?;
        Ok(None)
    }
}

fn io_err(source: io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".to_string(),
        source,
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match command {
        Command::Check { file } => check(&load_algebra(&file)?, out),
        Command::Unitize {
            file,
            out: target,
            dot,
        } => {
            let file = load_algebra(&file)?;
            let Some(p) = valid_gea(&file, out)? else {
                return Ok(Outcome::Fail);
            };
            let fp: Algebra = unitize(&p)?.into();
            let name = format!("F({})", file.name);
            let text = if dot {
                emit_dot(&name, &fp)
            } else {
                emit_algebra(&name, &fp)
            };
            match target {
                Some(path) => {
                    fs::write(&path, text).map_err(|source| CliError::Io {
                        path: path.display().to_string(),
                        source,
                    })?;
                    writeln!(out, "wrote {}", path.display()).map_err(io_err)?;
                }
                None => out.write_all(text.as_bytes()).map_err(io_err)?,
            }
            Ok(Outcome::Pass)
        }
        Command::Order { file, dot } => {
            let file = load_algebra(&file)?;
            if valid_gea(&file, out)?.is_none() {
                return Ok(Outcome::Fail);
            }
            if dot {
                out.write_all(emit_dot(&file.name, &file.algebra).as_bytes())
                    .map_err(io_err)?;
            } else {
                let g = file.algebra.as_gea();
                for (a, b) in g.derive_order().covers() {
                    writeln!(out, "cover: {} {}", g.name(a), g.name(b)).map_err(io_err)?;
                }
            }
            Ok(Outcome::Pass)
        }
        Command::Hom {
            src,
            dst,
            kind,
            count,
            full_only,
        } => {
            let (src, dst) = (load_algebra(&src)?, load_algebra(&dst)?);
            for f in [&src, &dst] {
                if valid_gea(f, out)?.is_none() {
                    return Ok(Outcome::Fail);
                }
            }
            let (a, b): (Algebra, Algebra) = match kind {
                KindArg::Gea => (src.algebra.forget(), dst.algebra.forget()),
                KindArg::Ea => (require_ea(&src)?.into(), require_ea(&dst)?.into()),
            };
            let mut homs = enumerate_morphisms(&a, &b, kind.into())?;
            if full_only {
                homs.retain(|f| f.is_full());
            }
            if count {
                writeln!(out, "{}", homs.len()).map_err(io_err)?;
            } else {
                for f in &homs {
                    writeln!(out, "{}", morphism_line(f)).map_err(io_err)?;
                }
            }
            Ok(Outcome::Pass)
        }
        Command::Laws {
            file,
            triangles,
            monad,
            em,
            naturality,
        } => laws(&file, triangles, monad, em, naturality, out),
        Command::State {
            action: StateCommand::Extend { alg, map },
        } => {
            let file = load_algebra(&alg)?;
            let Some(p) = valid_gea(&file, out)? else {
                return Ok(Outcome::Fail);
            };
            let values =
                parse_values(&read(Path::new(&map))?, &p).map_err(|source| CliError::Parse {
                    path: map.clone(),
                    source,
                })?;
            let s = AdditiveMap::new(p, values)?;
            if !section_if_failed(out, "additive map", &s.check())? {
                return Ok(Outcome::Fail);
            }
            let t = extend_state(&s)?;
            writeln!(out, "# state on F({})", file.name).map_err(io_err)?;
            out.write_all(emit_values(t.algebra().base(), t.values()).as_bytes())
                .map_err(io_err)?;
            Ok(Outcome::from_ok(t.is_valid()))
        }
        Command::Ideals { file, probe } => {
            let file = load_algebra(&file)?;
            let Some(p) = valid_gea(&file, out)? else {
                return Ok(Outcome::Fail);
            };
            for ideal in enumerate_ideals(&p)? {
                let names: Vec<&str> = ideal.members.iter().map(|&e| p.name(e)).collect();
                writeln!(out, "ideal: {}", names.join(" ")).map_err(io_err)?;
            }
            if probe {
                let r = ideal_correspondence_probe(&p)?;
                writeln!(out, "ideals: {}", r.ideals).map_err(io_err)?;
                writeln!(out, "GEA(P, U(2^2)): {}", r.gea_homs).map_err(io_err)?;
                writeln!(out, "EA(F(P), 2^2): {}", r.ea_homs).map_err(io_err)?;
                let verdict = if r.ideal_count_matches() { "yes" } else { "no" };
                writeln!(out, "ideal count matches: {verdict}").map_err(io_err)?;
            }
            Ok(Outcome::Pass)
        }
        Command::Enumerate {
            n,
            kind,
            up_to_iso,
            emit,
        } => {
            let mode = if up_to_iso {
                Mode::UpToIsomorphism
            } else {
                Mode::Labeled
            };
            let algebras: Vec<Algebra> = match kind {
                KindArg::Gea => enumerate_geas(n, mode)?
                    .into_iter()
                    .map(Algebra::from)
                    .collect(),
                KindArg::Ea => enumerate_eas(n, mode)?
                    .into_iter()
                    .map(Algebra::from)
                    .collect(),
            };
            let prefix = match kind {
                KindArg::Gea => "gea",
                KindArg::Ea => "ea",
            };
            if let Some(dir) = &emit {
                fs::create_dir_all(dir).map_err(|source| CliError::Io {
                    path: dir.display().to_string(),
                    source,
                })?;
            }
            for (i, a) in algebras.iter().enumerate() {
                let name = format!("{prefix}{n}_{i:04}");
                writeln!(out, "{name}: {}", summary(a)).map_err(io_err)?;
                if let Some(dir) = &emit {
                    let path = dir.join(format!("{name}.alg"));
                    fs::write(&path, emit_algebra(&name, a)).map_err(|source| CliError::Io {
                        path: path.display().to_string(),
                        source,
                    })?;
                }
            }
            writeln!(out, "count: {}", algebras.len()).map_err(io_err)?;
            Ok(Outcome::Pass)
        }
        Command::Transpose {
            alg,
            mor,
            direction,
        } => {
            let file = load_algebra(&alg)?;
            let Some(p) = valid_gea(&file, out)? else {
                return Ok(Outcome::Fail);
            };
            let source: Algebra = match direction {
                Direction::ToEa => p.clone().into(),
                Direction::ToGea => unitize(&p)?.into(),
            };
            let (mfile, target, f) = load_morphism(&mor, &source)?;
            if !section_if_failed(out, "morphism", &f.check())? {
                return Ok(Outcome::Fail);
            }
            let e = require_ea(&target)?;
            let transposed = match direction {
                Direction::ToEa => transpose_to_ea(&f, &e)?,
                Direction::ToGea => transpose_to_gea(&p, &f)?,
            };
            let name = mfile.name.as_deref().map(|n| format!("{n}^T"));
            out.write_all(emit_morphism(name.as_deref(), &mfile.target, &transposed).as_bytes())
                .map_err(io_err)?;
            Ok(Outcome::Pass)
        }
    }
}

/// Prints the report only when it has violations.
fn section_if_failed(out: &mut dyn Write, label: &str, report: &Report) -> Result<bool, CliError> {
    if report.is_valid() {
        Ok(true)
    } else {
        section(out, label, report).map_err(io_err)
    }
}

fn summary(a: &Algebra) -> String {
    let g = a.as_gea();
    let sums: Vec<String> = g
        .table()
        .entries()
        .filter(|&(x, y, _)| x != g.zero() && y != g.zero())
        .map(|(x, y, z)| format!("{}+{}={}", g.name(x), g.name(y), g.name(z)))
        .collect();
    let mut s = if sums.is_empty() {
        String::from("(no nonzero sums)")
    } else {
        sums.join(" ")
    };
    if let Some(top) = a.top() {
        s.push_str(&format!(" top={}", g.name(top)));
    }
    s
}

fn check(file: &AlgebraFile, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let g = file.algebra.as_gea();
    writeln!(out, "algebra {}: {} elements", file.name, g.len()).map_err(io_err)?;
    let report = g.validate();
    if !report.is_valid() {
        writeln!(out, "invalid GEA").map_err(io_err)?;
        writeln!(out, "{report}").map_err(io_err)?;
        return Ok(Outcome::Fail);
    }
    match &file.algebra {
        Algebra::Ea(e) => {
            let report = e.validate();
            if report.is_valid() {
                writeln!(out, "valid EA with top {}", e.name(e.top())).map_err(io_err)?;
                Ok(Outcome::Pass)
            } else {
                writeln!(out, "valid GEA; invalid EA with top {}", e.name(e.top()))
                    .map_err(io_err)?;
                writeln!(out, "{report}").map_err(io_err)?;
                Ok(Outcome::Fail)
            }
        }
        Algebra::Gea(g) => {
            match g.maximum() {
                Some(top) => writeln!(out, "valid GEA; bounded with top {} (an EA)", g.name(top)),
                None => writeln!(out, "valid GEA; not an EA (no top)"),
            }
            .map_err(io_err)?;
            Ok(Outcome::Pass)
        }
    }
}

fn laws(
    path: &str,
    triangles: Option<String>,
    monad: bool,
    em: bool,
    naturality: Option<String>,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let file = load_algebra(path)?;
    let Some(p) = valid_gea(&file, out)? else {
        return Ok(Outcome::Fail);
    };
    let everything = triangles.is_none() && !monad && !em && naturality.is_none();
    let mut ok = true;

    if triangles.is_some() || everything {
        let e = match &triangles {
            Some(with) => require_ea(&load_algebra(with)?)?,
            None => as_ea(&file).unwrap_or_else(builtin::two),
        };
        ok &= section(
            out,
            "left triangle eps_F . F(eta) = id",
            &left_triangle(&p)?,
        )
        .map_err(io_err)?;
        ok &= section(
            out,
            "right triangle U(eps) . eta_U = id",
            &right_triangle(&e)?,
        )
        .map_err(io_err)?;
    }
    if monad || (everything && p.len() <= MONAD_SIZE_LIMIT) {
        ok &= section(out, "monad laws", &verify_monad_laws(&p)?).map_err(io_err)?;
    }
    if em || everything {
        match as_ea(&file) {
            Some(e) => {
                let (x, h) = algebra_from_ea(&e)?;
                ok &= section(out, "algebra (U(E), U(eps))", &em_algebra_check(&x, &h)?)
                    .map_err(io_err)?;
            }
            None => {
                let found = em_structures(&p)?.len();
                writeln!(out, "structure maps T(X) -> X: {found} (no top)").map_err(io_err)?;
                ok &= found == 0;
            }
        }
    }
    if let Some(mor) = naturality {
        let (_, _, f) = load_morphism(&mor, &file.algebra)?;
        if !section_if_failed(out, "morphism", &f.check())? {
            return Ok(Outcome::Fail);
        }
        let report = match f.kind() {
            Kind::Gea => verify_unit_naturality(&f)?,
            Kind::Ea => verify_counit_naturality(&f)?,
        };
        let label = match f.kind() {
            Kind::Gea => "naturality of eta",
            Kind::Ea => "naturality of eps",
        };
        ok &= section(out, label, &report).map_err(io_err)?;
    }
    Ok(Outcome::from_ok(ok))
}
