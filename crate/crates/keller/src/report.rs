//! Flat `key: value` report blocks. Key order is fixed so outputs can be
//! diffed against golden files.

use std::fmt::Write as _;

use keller_core::druzkowski::KellerFacts;
use keller_core::{
    BoundReport, Conjugation, InverseResult, KellerReport, LineInjectivityCertificate, Polynomial,
    RationalMatrix,
};

use crate::format::print_point;

#[derive(Default)]
pub struct Block {
    text: String,
}

impl Block {
    pub fn new() -> Self {
        Block::default()
    }

    pub fn field(mut self, key: &str, value: impl std::fmt::Display) -> Self {
        writeln!(self.text, "{key}: {value}").unwrap();
        self
    }

    pub fn finish(self) -> String {
        self.text
    }
}

/// Univariate polynomials in λ print with `t` as the variable.
fn lambda_poly(p: &Polynomial) -> String {
    p.to_string().replace("x1", "t")
}

/// Matrix rows separated by `; `.
fn inline_matrix(m: &RationalMatrix) -> String {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn keller_report(r: &KellerReport) -> String {
    Block::new()
        .field("keller", r.keller)
        .field("det", &r.determinant)
        .finish()
}

pub fn bound_report(r: &BoundReport) -> String {
    Block::new()
        .field("n", r.n)
        .field("d", r.d)
        .field("r", r.r)
        .field("kernel_dim", r.kernel_dim)
        .field("bound", r.bound)
        .field("bcw_bound", r.bcw_bound)
        .field("inverse_degree", r.actual_inverse_degree)
        .field("within_bound", r.actual_inverse_degree as u64 <= r.bound)
        .field(
            "within_bcw_bound",
            r.actual_inverse_degree as u64 <= r.bcw_bound,
        )
        .finish()
}

pub fn inverse_report(r: &InverseResult) -> String {
    Block::new()
        .field("inverse_degree", r.inverse_map.degree())
        .field("iterations", r.iterations)
        .field("truncation_bound", r.truncation_bound)
        .finish()
}

pub fn conjugation_report(c: &Conjugation) -> String {
    Block::new()
        .field("rank", c.rank)
        .field("kernel_dim", c.transform.rows() - c.rank)
        .field("transform", inline_matrix(&c.transform))
        .field("transform_inverse", inline_matrix(&c.transform_inverse))
        .finish()
}

pub fn certificate_report(c: &LineInjectivityCertificate) -> String {
    let nilpotency = match c.nilpotency_witness {
        Some(k) => k.to_string(),
        None => "none".to_string(),
    };
    Block::new()
        .field("point", print_point(&c.point))
        .field("degree", c.degree)
        .field("nilpotency_index", nilpotency)
        .field("det_polynomial", lambda_poly(&c.det_polynomial))
        .field("det_identity", c.det_identity_holds)
        .field("line_gcd", lambda_poly(&c.line_gcd))
        .field("gcd_roots", c.gcd_root_check)
        .field("valid", c.is_valid())
        .field(
            "failed_clause",
            c.failed_clause().map_or("none", |clause| clause.name()),
        )
        .finish()
}

pub fn keller_facts_report(f: &KellerFacts) -> String {
    Block::new()
        .field("keller", f.keller)
        .field("jh_nilpotent", f.nilpotent)
        .field("det_a_zero", f.det_a_zero)
        .field("rank_a", f.rank_a)
        .finish()
}
