//! Batch runner for theorem checks and reproduction tables.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::andrasfai::{
    check_diameter_two_rule, check_distance_form, check_proposition_cycle, check_small_cases, check_structure,
    check_theorem_andk, check_theorem_complement, check_theorem_prism, CheckOptions, TheoremCheck,
};
use crate::error::{Error, Result};
use crate::graph::{andrasfai, cartesian_product, complement, complete, cycle, line_graph, path, Graph};
use crate::solver::{metric_dimension_exact, SearchBudget};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckRequest {
    AndK(usize),
    Complement(usize),
    Prism { k: usize, n: usize },
    CycleProduct { k: usize, n: usize },
    SmallCases(Vec<usize>),
    Structure(usize),
    DistanceForm(usize),
    DiameterTwoRule { k: usize, samples: usize, seed: u64 },
}

impl CheckRequest {
    pub fn run(&self, opts: &CheckOptions) -> Result<TheoremCheck> {
        match self {
            CheckRequest::AndK(k) => check_theorem_andk(*k, opts),
            CheckRequest::Complement(k) => check_theorem_complement(*k, opts),
            CheckRequest::Prism { k, n } => check_theorem_prism(*k, *n, opts),
            CheckRequest::CycleProduct { k, n } => check_proposition_cycle(*k, *n, opts),
            CheckRequest::SmallCases(ns) => check_small_cases(ns.iter().copied(), opts),
            CheckRequest::Structure(k) => check_structure(*k),
            CheckRequest::DistanceForm(k) => check_distance_form(*k),
            CheckRequest::DiameterTwoRule { k, samples, seed } => check_diameter_two_rule(*k, *samples, *seed),
        }
    }

    pub fn describe(&self) -> String {
        format!("{self:?}")
    }
}

/// Runs the checks in parallel; results keep the request order.
pub fn run_checks(requests: &[CheckRequest], opts: &CheckOptions) -> Vec<Result<TheoremCheck>> {
    requests.par_iter().map(|r| r.run(opts)).collect()
}

/// `theorem | params | verdict | ms` table, one row per check.
pub fn summary_table(checks: &[TheoremCheck]) -> String {
    let mut out = format!("{:<18} {:<10} {:<7} {:>8}\n", "theorem", "params", "verdict", "ms");
    for c in checks {
        let verdict = if c.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{:<18} {:<10} {:<7} {:>8}\n",
            c.theorem.to_string(),
            c.params(),
            verdict,
            c.elapsed.as_millis()
        ));
    }
    out
}

/// JSON evidence for a batch; only `timing` fields vary between identical runs.
pub fn evidence_bundle(checks: &[TheoremCheck]) -> Value {
    json!({
        "passed": checks.iter().all(TheoremCheck::passed),
        "checks": checks.iter().map(TheoremCheck::to_json).collect::<Vec<_>>(),
    })
}

/// Graph families available to `table`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFamily {
    Andrasfai,
    ComplementAndrasfai,
    Prism,
    ComplementPrism,
    CycleProduct,
    K2Cycle,
    C5Cycle,
    /// `And(k) □ K_n`, exploration only.
    AndrasfaiComplete,
    /// `Line(And(k))`, exploration only.
    LineAndrasfai,
}

impl TableFamily {
    pub const ALL: [(&'static str, TableFamily); 9] = [
        ("andrasfai", TableFamily::Andrasfai),
        ("complement-andrasfai", TableFamily::ComplementAndrasfai),
        ("prism", TableFamily::Prism),
        ("complement-prism", TableFamily::ComplementPrism),
        ("cycle-product", TableFamily::CycleProduct),
        ("k2-cycle", TableFamily::K2Cycle),
        ("c5-cycle", TableFamily::C5Cycle),
        ("andrasfai-complete", TableFamily::AndrasfaiComplete),
        ("line-andrasfai", TableFamily::LineAndrasfai),
    ];

    pub fn parse(name: &str) -> Result<TableFamily> {
        Self::ALL
            .iter()
            .find(|(n, _)| *n == name)
            .map(|&(_, f)| f)
            .ok_or_else(|| {
                let names: Vec<&str> = Self::ALL.iter().map(|(n, _)| *n).collect();
                Error::InvalidSpec(format!(
                    "unknown table family {name:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }

    pub fn name(&self) -> &'static str {
        Self::ALL
            .iter()
            .find(|(_, f)| f == self)
            .map(|(n, _)| *n)
            .expect("listed")
    }

    fn uses_k(&self) -> bool {
        !matches!(self, TableFamily::K2Cycle | TableFamily::C5Cycle)
    }

    fn uses_n(&self) -> bool {
        !matches!(
            self,
            TableFamily::Andrasfai | TableFamily::ComplementAndrasfai | TableFamily::LineAndrasfai
        )
    }

    fn build(&self, k: usize, n: usize) -> Result<Graph> {
        Ok(match self {
            TableFamily::Andrasfai => andrasfai(k)?,
            TableFamily::ComplementAndrasfai => complement(&andrasfai(k)?),
            TableFamily::Prism => cartesian_product(&andrasfai(k)?, &path(n)?),
            TableFamily::ComplementPrism => cartesian_product(&complement(&andrasfai(k)?), &path(n)?),
            TableFamily::CycleProduct => cartesian_product(&andrasfai(k)?, &cycle(n)?),
            TableFamily::K2Cycle => cartesian_product(&complete(2)?, &cycle(n)?),
            TableFamily::C5Cycle => cartesian_product(&cycle(5)?, &cycle(n)?),
            TableFamily::AndrasfaiComplete => cartesian_product(&andrasfai(k)?, &complete(n)?),
            TableFamily::LineAndrasfai => line_graph(&andrasfai(k)?)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub family: String,
    pub params: String,
    pub n: usize,
    pub dim_lo: usize,
    pub dim_hi: usize,
    pub exact: bool,
    pub witness: Vec<usize>,
    pub ms: u64,
}

impl TableRow {
    fn record(&self) -> [String; 8] {
        let witness: Vec<String> = self.witness.iter().map(ToString::to_string).collect();
        [
            self.family.clone(),
            self.params.clone(),
            self.n.to_string(),
            self.dim_lo.to_string(),
            self.dim_hi.to_string(),
            self.exact.to_string(),
            witness.join(" "),
            self.ms.to_string(),
        ]
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family,
            "params": self.params,
            "n": self.n,
            "dim_lo": self.dim_lo,
            "dim_hi": self.dim_hi,
            "exact": self.exact,
            "witness": self.witness,
            "ms": self.ms,
        })
    }
}

pub const TABLE_HEADER: [&str; 8] = ["family", "params", "n", "dim_lo", "dim_hi", "exact", "witness", "ms"];

/// One exact-dimension row per parameter combination. Parameters a family
/// does not use are ignored; combinations it cannot build (a disconnected
/// complement, say) are skipped.
pub fn table_rows(family: TableFamily, ks: &[usize], ns: &[usize], budget: SearchBudget) -> Result<Vec<TableRow>> {
    let ks: &[usize] = if family.uses_k() { ks } else { &[0] };
    let ns: &[usize] = if family.uses_n() { ns } else { &[0] };
    let combos: Vec<(usize, usize)> = ks.iter().flat_map(|&k| ns.iter().map(move |&n| (k, n))).collect();
    let rows: Vec<Option<TableRow>> = combos
        .iter()
        .map(|&(k, n)| {
            let start = Instant::now();
            let g = family.build(k, n)?;
            let report = match metric_dimension_exact(&g, budget) {
                Ok(r) => r,
                Err(Error::Disconnected(_)) | Err(Error::InvalidParameter(_)) => return Ok(None),
                Err(e) => return Err(e),
            };
            let (dim_lo, dim_hi) = report.dimension.bounds();
            let params = match (family.uses_k(), family.uses_n()) {
                (true, true) => format!("k={k} n={n}"),
                (true, false) => format!("k={k}"),
                _ => format!("n={n}"),
            };
            Ok(Some(TableRow {
                family: family.name().to_owned(),
                params,
                n: g.n(),
                dim_lo,
                dim_hi,
                exact: report.is_exact(),
                witness: report.witness,
                ms: start.elapsed().as_millis() as u64,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}

pub fn write_table_csv<W: Write>(rows: &[TableRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(TABLE_HEADER)?;
    for row in rows {
        w.write_record(row.record())?;
    }
    w.flush()?;
    Ok(())
}
