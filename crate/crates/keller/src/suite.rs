//! The invariant suite behind `keller verify-suite`: every check runs on
//! deterministic corpora, entries are sharded across threads, and the
//! records are sorted before printing.

use std::fmt::Write as _;

use keller_core::druzkowski::{entry_seed, random_invertible_matrix, random_rational_point};
use keller_core::{
    conjugate_normalize, invert_by_reduction, invert_fixed_point, line_injectivity_certificate,
    CorpusEntry, Error, Generator, PolyMap, Rational,
};
use rayon::prelude::*;

use crate::error::ExitStatus;
use crate::format::{parse_map, print_map};

/// Corpus shapes `(n, d)`, cycled through by every family.
pub const SHAPES: [(usize, u32); 6] = [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (4, 3)];

/// Line certificates checked per homogeneous map.
pub const POINTS_PER_MAP: usize = 5;

/// `λ` values sampled by [`line_collision`].
pub const SAMPLE_LAMBDAS: [(i64, i64); 10] = [
    (0, 1),
    (-1, 1),
    (2, 1),
    (-2, 1),
    (3, 1),
    (1, 2),
    (-1, 2),
    (2, 3),
    (5, 3),
    (-7, 4),
];

const SCRAMBLE_SALT: u64 = 0x5C4A_3B1E;
const POINT_SALT: u64 = 0x9017_7E11;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub generator: Generator,
    pub index: usize,
    pub n: usize,
    pub d: u32,
    pub check: &'static str,
    pub status: ExitStatus,
    pub detail: String,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.status == ExitStatus::Ok
    }

    fn line(&self) -> String {
        let verdict = match self.status {
            ExitStatus::Ok => "pass",
            ExitStatus::Negative | ExitStatus::Usage => "FAIL",
            ExitStatus::Contradiction => "CONTRADICTION",
        };
        let mut s = format!(
            "{} #{} n={} d={} {}: {}",
            self.generator.name(),
            self.index,
            self.n,
            self.d,
            self.check,
            verdict
        );
        if !self.detail.is_empty() {
            write!(s, " ({})", self.detail).unwrap();
        }
        s
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub records: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn status(&self) -> ExitStatus {
        self.records
            .iter()
            .fold(ExitStatus::Ok, |acc, r| acc.worst(r.status))
    }

    pub fn contradictions(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.status == ExitStatus::Contradiction)
            .count()
    }

    /// One line per failed check (all checks with `verbose`), then a summary block.
    pub fn render(&self, verbose: bool) -> String {
        let mut out = String::new();
        for r in self.records.iter().filter(|r| verbose || !r.passed()) {
            writeln!(out, "{}", r.line()).unwrap();
        }
        let failed = self.records.iter().filter(|r| !r.passed()).count();
        writeln!(out, "checks: {}", self.records.len()).unwrap();
        writeln!(out, "passed: {}", self.records.len() - failed).unwrap();
        writeln!(out, "failed: {}", failed - self.contradictions()).unwrap();
        writeln!(out, "contradictions: {}", self.contradictions()).unwrap();
        write!(out, "status: {}", self.status().code()).unwrap();
        out.push('\n');
        out
    }
}

/// Whether `F(λa) = F(a)` for some sampled `λ ≠ 1`.
pub fn line_collision(f: &PolyMap, point: &[Rational]) -> Result<Option<Rational>, Error> {
    let fa = f.evaluate(point)?;
    for &(p, q) in &SAMPLE_LAMBDAS {
        let lambda = Rational::new(p.into(), q.into());
        let scaled: Vec<Rational> = point.iter().map(|a| a * &lambda).collect();
        if f.evaluate(&scaled)? == fa {
            return Ok(Some(lambda));
        }
    }
    Ok(None)
}

/// `S^{-1} F(S x)`.
pub fn scramble(f: &PolyMap, seed: u64) -> Result<(PolyMap, keller_core::RationalMatrix), Error> {
    let s = random_invertible_matrix(f.nvars(), seed ^ SCRAMBLE_SALT, 2);
    Ok((f.linear_conjugate(&s)?, s))
}

/// Points used for line certificates on the entry with seed `seed`.
pub fn sample_points(n: usize, seed: u64, count: usize) -> Vec<Vec<Rational>> {
    (0..count)
        .map(|k| random_rational_point(n, entry_seed(seed ^ POINT_SALT, k as u64), 5))
        .collect()
}

struct Recorder<'a> {
    entry: &'a CorpusEntry,
    index: usize,
    records: Vec<CheckRecord>,
}

impl Recorder<'_> {
    fn push(&mut self, check: &'static str, status: ExitStatus, detail: String) {
        self.records.push(CheckRecord {
            generator: self.entry.generator,
            index: self.index,
            n: self.entry.n,
            d: self.entry.d,
            check,
            status,
            detail,
        });
    }

    fn pass(&mut self, check: &'static str) {
        self.push(check, ExitStatus::Ok, String::new());
    }

    fn fail(&mut self, check: &'static str, detail: impl Into<String>) {
        self.push(check, ExitStatus::Negative, detail.into());
    }

    /// Outcome of a check whose failure would falsify a proven statement.
    fn claim(&mut self, check: &'static str, outcome: Result<bool, Error>, what: &str) {
        match outcome {
            Ok(true) => self.pass(check),
            Ok(false) => self.push(check, ExitStatus::Contradiction, what.to_string()),
            Err(e) => self.push(check, ExitStatus::Contradiction, e.to_string()),
        }
    }
}

fn check_entry(entry: &CorpusEntry, index: usize) -> Vec<CheckRecord> {
    let mut rec = Recorder {
        entry,
        index,
        records: Vec::new(),
    };
    let f = &entry.map;

    match parse_map(&print_map(f)) {
        Ok(g) if &g == f => rec.pass("round-trip"),
        Ok(_) => rec.fail("round-trip", "re-parsed map differs"),
        Err(e) => rec.fail("round-trip", e.to_string()),
    }

    if let Some(spec) = &entry.spec {
        rec.claim(
            "structural-jacobian",
            Ok(spec
                .structural_jacobian()
                .add(&keller_core::PolyMatrix::identity(entry.n, entry.n))
                .ok()
                == Some(f.jacobian())),
            "d diag((Ax)^(d-1)) A + I differs from JF",
        );
        rec.claim(
            "kernel-equality",
            spec.kernel_equality_check(),
            "ker JH != ker A",
        );
        rec.claim(
            "keller-facts",
            spec.keller_facts_check().map(|_| true),
            "Keller facts violated",
        );
    }

    let keller = f.is_keller().keller;
    if entry.expected_keller == Some(true) && !keller {
        rec.fail("keller", "generator produced a non-Keller map");
    } else if entry.expected_keller == Some(true) {
        rec.pass("keller");
    }
    if !keller || entry.expected_keller != Some(true) {
        return rec.records;
    }

    let (inverse, report) = match invert_by_reduction(f) {
        Ok(v) => v,
        Err(e) => {
            rec.push("degree-bound", ExitStatus::Contradiction, e.to_string());
            return rec.records;
        }
    };
    let actual = report.actual_inverse_degree as u64;
    rec.claim(
        "degree-bound",
        Ok(actual <= report.bound),
        &format!("deg F^-1 = {actual} > d^r = {}", report.bound),
    );
    rec.claim(
        "bcw-bound",
        Ok(actual <= report.bcw_bound),
        &format!("deg F^-1 = {actual} > d^(n-1) = {}", report.bcw_bound),
    );

    let bcw = report.bcw_bound.min(u32::MAX as u64) as u32;
    match invert_fixed_point(f, bcw) {
        Ok(fp) if fp.inverse_map == inverse.inverse_map => rec.pass("algorithm-agreement"),
        Ok(_) => rec.push(
            "algorithm-agreement",
            ExitStatus::Contradiction,
            "inverses differ".into(),
        ),
        Err(e) => rec.push(
            "algorithm-agreement",
            ExitStatus::Contradiction,
            e.to_string(),
        ),
    }

    rec.claim(
        "conjugation",
        scrambled_conjugation_check(f, &inverse.inverse_map, entry.seed),
        "deg G^-1 != deg F^-1 after scrambling",
    );

    if entry.spec.is_some() {
        rec.claim(
            "ideal-remark",
            f.verify_ideal_remark(),
            "(I + JH/d)^-1 F != X",
        );
        for point in sample_points(entry.n, entry.seed, POINTS_PER_MAP) {
            match line_injectivity_certificate(f, &point) {
                Ok(cert) if cert.is_valid() => match line_collision(f, &point) {
                    Ok(None) => rec.pass("line-certificate"),
                    Ok(Some(l)) => rec.push(
                        "line-certificate",
                        ExitStatus::Contradiction,
                        format!("F(λa) = F(a) at λ = {l}"),
                    ),
                    Err(e) => rec.fail("line-certificate", e.to_string()),
                },
                Ok(cert) => rec.push(
                    "line-certificate",
                    ExitStatus::Contradiction,
                    format!(
                        "clause {} failed",
                        cert.failed_clause().map_or("?", |c| c.name())
                    ),
                ),
                Err(e) => rec.push("line-certificate", ExitStatus::Contradiction, e.to_string()),
            }
        }
    }
    rec.records
}

/// Scrambles `f` by a seeded invertible `S`, normalizes it back and compares
/// `deg G^{-1}` with the degree of `S^{-1} F^{-1}(S y)` built from the
/// already verified inverse of `f`.
pub fn scrambled_conjugation_check(
    f: &PolyMap,
    f_inverse: &PolyMap,
    seed: u64,
) -> Result<bool, Error> {
    let (scrambled, s) = scramble(f, seed)?;
    let conj = conjugate_normalize(&scrambled)?;
    let n = f.nvars();
    let jg = conj.conjugate.higher_part()?.jacobian();
    let columns_vanish = (conj.rank..n).all(|j| (0..n).all(|i| jg.get(i, j).is_zero()));
    let (g_inverse, _) = invert_by_reduction(&conj.conjugate)?;
    let scrambled_inverse = f_inverse.linear_conjugate(&s)?;
    Ok(columns_vanish && g_inverse.inverse_map.degree() == scrambled_inverse.degree())
}

/// Runs the suite on `count` maps from each generator.
pub fn run_suite(seed: u64, count: usize) -> Result<SuiteReport, Error> {
    let mut entries = Vec::new();
    for generator in [
        Generator::TriangularKeller,
        Generator::TriangularDruzkowski,
        Generator::RandomDruzkowski,
    ] {
        let corpus = keller_core::druzkowski::corpus(generator, &SHAPES, seed, count)?;
        entries.extend(corpus.into_iter().enumerate());
    }
    let mut records: Vec<CheckRecord> = entries
        .par_iter()
        .flat_map_iter(|(i, e)| check_entry(e, *i))
        .collect();
    records.sort_by_key(|r| (r.generator, r.index));
    Ok(SuiteReport { records })
}
