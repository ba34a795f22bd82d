use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use keller_core::druzkowski::corpus;
use keller_core::{
    conjugate_normalize, degree_bound_report, invert_by_reduction, line_injectivity_certificate,
    Generator,
};

use crate::error::{CliError, ExitStatus};
use crate::format::{parse_point, print_map, print_spec, read_map, read_spec};
use crate::report;
use crate::suite::run_suite;

#[derive(Parser, Debug)]
#[command(
    name = "keller",
    version,
    about = "Exact checks and inversion for polynomial maps x + H over the rationals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Test whether det JF is a nonzero constant.
    CheckKeller { map: PathBuf },
    /// Invert by fixed-point iteration; prints the inverse map file.
    Invert {
        map: PathBuf,
        /// Truncation degree; defaults to (deg F)^(n-1).
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Invert through the kernel-normalized r-variable sub-map.
    InvertT3 { map: PathBuf },
    /// Report the inverse degree against d^r and d^(n-1).
    Bound { map: PathBuf },
    /// Conjugate so the constant kernel of J(G - x) is spanned by the last basis vectors.
    Conjugate { map: PathBuf },
    /// Certify injectivity on the line through a point (homogeneous H only).
    LineCert {
        map: PathBuf,
        /// Comma-separated rationals, e.g. 1,-2/3.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Expand a power-linear spec file into a map file.
    ExpandDruzkowski { spec: PathBuf },
    /// Write a deterministic corpus of map or spec files.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run every invariant on generated corpora.
    VerifySuite {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Maps per generator family.
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Print passing checks too.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    TriangularKeller,
    TriangularDruzkowski,
    RandomDruzkowski,
}

impl Kind {
    fn generator(self) -> Generator {
        match self {
            Kind::TriangularKeller => Generator::TriangularKeller,
            Kind::TriangularDruzkowski => Generator::TriangularDruzkowski,
            Kind::RandomDruzkowski => Generator::RandomDruzkowski,
        }
    }
}

/// Where a command writes: the main artifact and the side report.
pub struct Output<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

fn emit(w: &mut dyn Write, text: &str) -> Result<(), CliError> {
    w.write_all(text.as_bytes())
        .map_err(|e| CliError::Usage(format!("cannot write output: {e}")))
}

/// Default truncation for fixed-point inversion: `(deg F)^(n-1)`.
pub fn bcw_truncation(degree: u32, n: usize) -> u32 {
    (degree.max(1) as u64)
        .saturating_pow((n - 1).min(u32::MAX as usize) as u32)
        .min(u32::MAX as u64) as u32
}

/// File name of the `i`-th generated entry; power-linear kinds hold spec text.
pub fn corpus_file_name(kind: Generator, n: usize, d: u32, seed: u64, i: usize) -> String {
    let ext = match kind {
        Generator::TriangularKeller => "map",
        Generator::TriangularDruzkowski | Generator::RandomDruzkowski => "spec",
    };
    format!("{}-n{n}-d{d}-s{seed}-{i}.{ext}", kind.name())
}

fn generate(
    kind: Generator,
    n: usize,
    d: u32,
    seed: u64,
    count: usize,
    out: &Path,
) -> Result<Vec<PathBuf>, CliError> {
    if n == 0 || d < 2 {
        return Err(CliError::Usage(format!(
            "gen needs n >= 1 and d >= 2 (got n={n}, d={d})"
        )));
    }
    std::fs::create_dir_all(out).map_err(|source| CliError::Io {
        path: out.to_path_buf(),
        source,
    })?;
    let entries = corpus(kind, &[(n, d)], seed, count)?;
    let mut written = Vec::with_capacity(count);
    for (i, entry) in entries.iter().enumerate() {
        let text = match &entry.spec {
            Some(spec) => print_spec(spec),
            None => print_map(&entry.map),
        };
        let path = out.join(corpus_file_name(kind, n, d, seed, i));
        std::fs::write(&path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        written.push(path);
    }
    Ok(written)
}

/// Runs one command. Errors carry their exit status; a successful run can
/// still end with a negative or contradiction status (e.g. a failed check).
pub fn run(command: &Command, io: Output) -> Result<ExitStatus, CliError> {
    match command {
        Command::CheckKeller { map } => {
            let f = read_map(map)?;
            let r = f.is_keller();
            emit(io.out, &report::keller_report(&r))?;
            Ok(if r.keller {
                ExitStatus::Ok
            } else {
                ExitStatus::Negative
            })
        }
        Command::Invert { map, max_degree } => {
            let f = read_map(map)?;
            let bound = max_degree.unwrap_or_else(|| bcw_truncation(f.degree(), f.nvars()));
            let inv = keller_core::polymap::invert_with_affine_part(&f, bound)?;
            emit(io.out, &print_map(&inv.inverse_map))?;
            emit(io.err, &report::inverse_report(&inv))?;
            Ok(ExitStatus::Ok)
        }
        Command::InvertT3 { map } => {
            let f = read_map(map)?;
            let (inv, bound) = invert_by_reduction(&f)?;
            emit(io.out, &print_map(&inv.inverse_map))?;
            emit(io.err, &report::bound_report(&bound))?;
            Ok(ExitStatus::Ok)
        }
        Command::Bound { map } => {
            let f = read_map(map)?;
            emit(io.out, &report::bound_report(&degree_bound_report(&f)?))?;
            Ok(ExitStatus::Ok)
        }
        Command::Conjugate { map } => {
            let f = read_map(map)?;
            let c = conjugate_normalize(&f)?;
            emit(io.out, &print_map(&c.conjugate))?;
            emit(io.err, &report::conjugation_report(&c))?;
            Ok(ExitStatus::Ok)
        }
        Command::LineCert { map, point } => {
            let f = read_map(map)?;
            let point = parse_point(point)
                .map_err(|e| CliError::Usage(format!("--point: {}", e.message)))?;
            let cert = line_injectivity_certificate(&f, &point)?;
            emit(io.out, &report::certificate_report(&cert))?;
            Ok(if cert.is_valid() {
                ExitStatus::Ok
            } else {
                ExitStatus::Negative
            })
        }
        Command::ExpandDruzkowski { spec } => {
            let spec = read_spec(spec)?;
            emit(io.out, &print_map(&spec.expand()))?;
            Ok(ExitStatus::Ok)
        }
        Command::Gen {
            kind,
            n,
            d,
            seed,
            count,
            out,
        } => {
            let written = generate(kind.generator(), *n, *d, *seed, *count, out)?;
            emit(
                io.err,
                &report::Block::new().field("files", written.len()).finish(),
            )?;
            Ok(ExitStatus::Ok)
        }
        Command::VerifySuite {
            seed,
            count,
            verbose,
        } => {
            let suite = run_suite(*seed, *count)?;
            emit(io.out, &suite.render(*verbose))?;
            Ok(suite.status())
        }
    }
}
