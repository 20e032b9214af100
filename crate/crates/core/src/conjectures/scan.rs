use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::{evaluate, Checkable, ConjectureSpec, Direction, Number, Standing, Status};
use crate::enumeration::{EnumerationCaps, EnumerationQuery, GraphClass};
use crate::error::{Error, Result};
use crate::families::{make, members_of_order};
use crate::graph::canon::canonical_certificate;
use crate::graph::graph6::encode_graph6;
use crate::graph::Graph;

/// Which graphs a scan runs over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRequest {
    pub class: GraphClass,
    pub n_min: usize,
    pub n_max: usize,
    pub max_degree: Option<usize>,
    pub chemical: bool,
    pub caps: EnumerationCaps,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl ScanRequest {
    pub fn new(class: GraphClass, n_min: usize, n_max: usize) -> Self {
        ScanRequest {
            class,
            n_min,
            n_max,
            max_degree: None,
            chemical: false,
            caps: EnumerationCaps::default(),
            jobs: None,
        }
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = Some(jobs);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub n: usize,
    pub graph6: String,
    pub value: Number,
    pub bound: Option<Number>,
    pub slack: Option<Number>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderSummary {
    pub n: usize,
    pub graphs: usize,
    pub violations: usize,
    pub equalities: usize,
    pub near_equalities: usize,
    pub indeterminate: usize,
    /// Best value of the combined invariant at this order: the maximum for
    /// upper bounds and extremal-family claims, the minimum for lower bounds.
    pub extremal_value: Number,
    pub extremal_graphs: Vec<String>,
    /// For extremal-family claims, whether an extremal graph is a family member.
    pub in_claimed_family: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub conjecture: &'static str,
    pub label: &'static str,
    pub standing: Standing,
    pub expression: String,
    pub class: &'static str,
    pub n_min: usize,
    pub n_max: usize,
    pub graphs_scanned: usize,
    pub per_order: Vec<OrderSummary>,
    pub violations: Vec<Witness>,
    pub equality_graphs: Vec<Witness>,
    pub near_equality_graphs: Vec<Witness>,
}

impl ScanReport {
    pub fn violation_count(&self) -> usize {
        self.per_order.iter().map(|o| o.violations).sum()
    }

    /// A counterexample to a conjecture registered as open.
    pub fn open_violation(&self) -> bool {
        self.standing == Standing::Open && self.violation_count() > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per order, flagged `violated`, `equality` or `satisfied`.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record([
            "conjecture",
            "class",
            "n",
            "graphs",
            "violations",
            "equalities",
            "near_equalities",
            "indeterminate",
            "extremal_value",
            "extremal_graphs",
            "in_claimed_family",
            "flag",
        ])
        .map_err(io)?;
        for o in &self.per_order {
            let flag = if o.violations > 0 || o.in_claimed_family == Some(false) {
                "violated"
            } else if o.equalities > 0 {
                "equality"
            } else {
                "satisfied"
            };
            let family = o.in_claimed_family.map_or(String::new(), |b| b.to_string());
            w.write_record([
                self.conjecture.to_string(),
                self.class.to_string(),
                o.n.to_string(),
                o.graphs.to_string(),
                o.violations.to_string(),
                o.equalities.to_string(),
                o.near_equalities.to_string(),
                o.indeterminate.to_string(),
                o.extremal_value.to_string(),
                o.extremal_graphs.join(" "),
                family,
                flag.to_string(),
            ])
            .map_err(io)?;
        }
        w.flush()?;
        Ok(())
    }
}

struct Row {
    value: Number,
    bound: Option<Number>,
    slack: Option<Number>,
    status: Option<Status>,
}

/// Runs `spec` over every graph of the requested class and orders. Output
/// does not depend on the number of workers.
pub fn scan(spec: &ConjectureSpec, request: &ScanRequest) -> Result<ScanReport> {
    if request.n_min > request.n_max {
        return Err(Error::Infeasible(format!("empty order range {}..{}", request.n_min, request.n_max)));
    }
    if request.n_min < 4 {
        return Err(Error::OrderTooSmall(request.n_min));
    }
    for n in request.n_min..=request.n_max {
        request.caps.check(request.class, n)?;
    }
    match request.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(|| scan_inner(spec, request)),
        None => scan_inner(spec, request),
    }
}

fn scan_inner(spec: &ConjectureSpec, request: &ScanRequest) -> Result<ScanReport> {
    let mut report = ScanReport {
        conjecture: spec.id,
        label: spec.label,
        standing: spec.standing,
        expression: spec.expression(),
        class: request.class.name(),
        n_min: request.n_min,
        n_max: request.n_max,
        graphs_scanned: 0,
        per_order: Vec::new(),
        violations: Vec::new(),
        equality_graphs: Vec::new(),
        near_equality_graphs: Vec::new(),
    };
    for n in request.n_min..=request.n_max {
        let query = EnumerationQuery {
            class: request.class,
            n,
            max_degree: request.max_degree,
            chemical: request.chemical,
            caps: request.caps,
        };
        let graphs = query.run()?;
        let rows: Vec<Row> = graphs
            .par_iter()
            .map(|g| evaluate_row(spec, g))
            .collect::<Result<_>>()?;
        report.graphs_scanned += graphs.len();
        let summary = summarize(spec, n, &graphs, &rows, &mut report)?;
        report.per_order.push(summary);
    }
    Ok(report)
}

fn evaluate_row(spec: &ConjectureSpec, g: &Graph) -> Result<Row> {
    if spec.checkable == Checkable::ExtremalFamilyOnly {
        return Ok(Row { value: spec.value(g)?, bound: None, slack: None, status: None });
    }
    let e = evaluate(spec, g)?;
    Ok(Row { value: e.value, bound: e.bound, slack: e.slack, status: Some(e.status) })
}

fn summarize(
    spec: &ConjectureSpec,
    n: usize,
    graphs: &[Graph],
    rows: &[Row],
    report: &mut ScanReport,
) -> Result<OrderSummary> {
    let mut summary = OrderSummary {
        n,
        graphs: graphs.len(),
        violations: 0,
        equalities: 0,
        near_equalities: 0,
        indeterminate: 0,
        extremal_value: Number::Real(f64::NAN),
        extremal_graphs: Vec::new(),
        in_claimed_family: None,
    };
    for (g, row) in graphs.iter().zip(rows) {
        let witness = || Witness { n, graph6: encode_graph6(g), value: row.value, bound: row.bound, slack: row.slack };
        match row.status {
            Some(Status::Violated) => {
                summary.violations += 1;
                report.violations.push(witness());
            }
            Some(Status::Equality) => {
                summary.equalities += 1;
                report.equality_graphs.push(witness());
            }
            Some(Status::NearEquality) => {
                summary.near_equalities += 1;
                report.near_equality_graphs.push(witness());
            }
            Some(Status::Indeterminate) => summary.indeterminate += 1,
            Some(Status::Satisfied) | None => {}
        }
    }
    let minimize = spec.direction == Direction::Lower;
    let best = rows.iter().map(|r| r.value).reduce(|a, b| {
        let better = if minimize { b.cmp_value(a).is_lt() } else { b.cmp_value(a).is_gt() };
        if better {
            b
        } else {
            a
        }
    });
    let Some(best) = best else { return Ok(summary) };
    summary.extremal_value = best;
    let extremal: Vec<&Graph> = graphs.iter().zip(rows).filter(|(_, r)| r.value.ties(best)).map(|(g, _)| g).collect();
    summary.extremal_graphs = extremal.iter().map(|g| encode_graph6(g)).collect();
    if spec.checkable == Checkable::ExtremalFamilyOnly {
        let kind = spec.family.expect("family claims name a family");
        let members: BTreeSet<Vec<u8>> = members_of_order(kind, n)?
            .iter()
            .map(|s| make(s).map(|g| canonical_certificate(&g)))
            .collect::<Result<_>>()?;
        let hit = extremal.iter().any(|g| members.contains(&canonical_certificate(g)));
        summary.in_claimed_family = Some(hit);
        if !hit {
            summary.violations += 1;
            report.violations.extend(extremal.iter().map(|g| Witness {
                n,
                graph6: encode_graph6(g),
                value: best,
                bound: None,
                slack: None,
            }));
        }
    }
    Ok(summary)
}
