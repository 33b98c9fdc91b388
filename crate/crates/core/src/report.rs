//! Machine-readable and plain-text reports.
//!
//! Both forms are rendered from the same [`Report`] value, so they carry the
//! same verdicts. The JSON form follows `schema/report.schema.json`.

use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Duration;

use serde::Serialize;

use crate::complex::{Cover, SimplicialComplex};
use crate::distance::{BoundReport, CoverCertificate, LowerWitness};
use crate::exactalg::CoeffRing;
use crate::homology::{graded_module, Variance};
use crate::ring::{cup_length, zero_divisor_cup_length, CohomologyRing, RingError, Square};
use crate::with_ring;

pub const SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Computation finished; for certificates, verified; for bounds, exact.
    Ok,
    NotVerified,
    /// Bounds whose lower and upper ends differ.
    Gap,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::NotVerified | Status::Gap => 1,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct QueryEcho {
    pub complex: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring: Option<CoeffRing>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variance: Option<Variance>,
    /// `scat`, `tc`, or the two map files.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maps: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexInfo {
    pub vertices: usize,
    pub dim: usize,
    pub f_vector: Vec<usize>,
    pub euler_characteristic: i64,
    pub connected: bool,
    pub components: usize,
    pub facets: usize,
}

impl ComplexInfo {
    pub fn of(k: &SimplicialComplex) -> Self {
        ComplexInfo {
            vertices: k.vertex_count(),
            dim: k.dim(),
            f_vector: k.f_vector(),
            euler_characteristic: k.euler_characteristic(),
            connected: k.is_connected(),
            components: k.components().len(),
            facets: k.facets().len(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupsReport {
    pub ring: CoeffRing,
    pub variance: Variance,
    /// One entry per degree, e.g. `Z`, `0`, `Z/2`, `Z2^3`.
    pub groups: Vec<String>,
    pub free_ranks: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CupLengthReport {
    pub ring: CoeffRing,
    pub length: usize,
    /// Degrees of the factors of a nonzero product of maximal length.
    pub witness_degrees: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Body {
    Info(ComplexInfo),
    Groups(GroupsReport),
    CupLength(CupLengthReport),
    Certificate(CoverCertificate),
    Bounds(BoundReport),
    Written { info: ComplexInfo, files: Vec<String> },
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub query: QueryEcho,
    pub status: Status,
    pub body: Body,
    pub elapsed_ms: f64,
}

impl Report {
    pub fn new(command: &str, query: QueryEcho, body: Body) -> Self {
        let status = match &body {
            Body::Certificate(c) if !c.verified => Status::NotVerified,
            Body::Bounds(b) if b.exact.is_none() => Status::Gap,
            _ => Status::Ok,
        };
        Report { command: command.to_string(), query, status, body, elapsed_ms: 0.0 }
    }

    pub fn timed(mut self, elapsed: Duration) -> Self {
        self.elapsed_ms = elapsed.as_secs_f64() * 1e3;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let q = &self.query;
        let _ = write!(out, "{}: {}", self.command, q.complex);
        if let Some(r) = q.ring {
            let _ = write!(out, "  ring {r}");
        }
        if let Some(v) = q.variance {
            let _ = write!(out, "  {v}");
        }
        if let Some(m) = &q.maps {
            let _ = write!(out, "  maps {m}");
        }
        if let Some(c) = &q.cover {
            let _ = write!(out, "  cover {c}");
        }
        out.push('\n');
        match &self.body {
            Body::Info(info) => info_text(&mut out, info),
            Body::Groups(g) => {
                let sym = if g.variance == Variance::Cohomology { "H^" } else { "H_" };
                for (m, group) in g.groups.iter().enumerate() {
                    let _ = writeln!(out, "  {sym}{m} = {group}");
                }
            }
            Body::CupLength(c) => {
                let _ = writeln!(out, "  length {}  witness degrees {:?}", c.length, c.witness_degrees);
            }
            Body::Certificate(c) => certificate_text(&mut out, c),
            Body::Bounds(b) => bounds_text(&mut out, b),
            Body::Written { info, files } => {
                info_text(&mut out, info);
                for f in files {
                    let _ = writeln!(out, "  wrote {f}");
                }
            }
        }
        let status = match self.status {
            Status::Ok => "ok",
            Status::NotVerified => "NOT VERIFIED",
            Status::Gap => "GAP",
        };
        let _ = writeln!(out, "status: {status}  ({:.1} ms)", self.elapsed_ms);
        out
    }
}

fn info_text(out: &mut String, info: &ComplexInfo) {
    let _ = writeln!(
        out,
        "  vertices {}  dim {}  f-vector {:?}  chi {}  facets {}  {}",
        info.vertices,
        info.dim,
        info.f_vector,
        info.euler_characteristic,
        info.facets,
        if info.connected { "connected".to_string() } else { format!("{} components", info.components) }
    );
}

fn certificate_text(out: &mut String, c: &CoverCertificate) {
    let _ = writeln!(out, "  {} pieces, covers K: {}", c.pieces.len(), if c.covered { "yes" } else { "no" });
    if let Some(m) = &c.missing {
        let labels: Vec<String> =
            m.iter().map(|l| if l.contains(',') { format!("({l})") } else { l.clone() }).collect();
        let _ = writeln!(out, "  uncovered facet [{}]", labels.join(", "));
    }
    for p in &c.pieces {
        let degrees: String = p.per_degree.iter().map(|&e| if e { '=' } else { 'x' }).collect();
        let _ = writeln!(
            out,
            "  {:<6} facets {:>4}  degrees {}  {}",
            p.name,
            p.facets,
            degrees,
            match p.first_failure {
                None => "equal".to_string(),
                Some(m) => format!("differs in degree {m}"),
            }
        );
    }
    let _ = writeln!(
        out,
        "  verified: {}{}",
        c.verified,
        if c.verified { format!("  (distance <= {})", c.bound()) } else { String::new() }
    );
}

fn witness_text(w: &LowerWitness) -> String {
    match w {
        LowerWitness::Trivial => "no separating class".to_string(),
        LowerWitness::CupProduct { factors } => {
            let f: Vec<String> = factors.iter().map(|j| format!("J{}.{}", j.degree, j.generator)).collect();
            format!("nonzero product {}", f.join(" * "))
        }
        LowerWitness::NoSmallerCover { size } => format!("exhaustive search: no {size}-piece cover"),
    }
}

fn bounds_text(out: &mut String, b: &BoundReport) {
    let _ = writeln!(out, "  cup-length bound {}  ({})", b.cup_lower.value, witness_text(&b.cup_lower.witness));
    if !b.refuted_sizes.is_empty() {
        let _ = writeln!(out, "  no cover with {:?} pieces", b.refuted_sizes);
    }
    if let Some(s) = &b.supplied {
        let _ = writeln!(out, "  supplied cover:");
        certificate_text(out, s);
    }
    if let Some(c) = &b.certificate {
        let _ = writeln!(out, "  best certificate:");
        certificate_text(out, c);
    }
    let upper = b.upper.map_or("?".to_string(), |u| u.to_string());
    let _ = writeln!(out, "  lower {} ({})", b.lower.value, witness_text(&b.lower.witness));
    let _ = writeln!(out, "  interval [{}, {}]", b.lower.value, upper);
    match b.exact {
        Some(e) => {
            let _ = writeln!(out, "  exact {e}");
        }
        None => {
            let _ = writeln!(out, "  not determined");
        }
    }
}

pub fn groups(k: &Arc<SimplicialComplex>, ring: CoeffRing, variance: Variance) -> GroupsReport {
    let (groups, free_ranks) = with_ring!(ring, |r| {
        let g = graded_module(k, &r, variance);
        (g.describe(), g.free_ranks())
    });
    GroupsReport { ring, variance, groups, free_ranks }
}

fn length_report(ring: CoeffRing, set_degrees: &[usize], length: usize, witness: &[usize]) -> CupLengthReport {
    CupLengthReport { ring, length, witness_degrees: witness.iter().map(|&i| set_degrees[i]).collect() }
}

pub fn cup_length_report(k: &Arc<SimplicialComplex>, ring: CoeffRing) -> Result<CupLengthReport, RingError> {
    with_ring!(ring, |r| {
        let h = CohomologyRing::new(k, &r);
        let degrees: Vec<usize> = h.positive_generators().iter().map(|c| c.degree()).collect();
        let c = cup_length(k, &r)?;
        Ok(length_report(ring, &degrees, c.length, &c.witness))
    })
}

pub fn zdcl_report(k: &Arc<SimplicialComplex>, ring: CoeffRing) -> Result<CupLengthReport, RingError> {
    with_ring!(ring, |r| {
        let c = zero_divisor_cup_length(k, &r)?;
        let sq = Square::new(k, &r);
        let set_degrees: Vec<usize> = sq.j_generators()?.iter().map(|c| c.degree()).collect();
        Ok(length_report(ring, &set_degrees, c.length, &c.witness))
    })
}

/// Echo for a cover argument: its name and piece count.
pub fn describe_cover(name: &str, cover: &Cover) -> String {
    format!("{name} ({} pieces)", cover.len())
}
