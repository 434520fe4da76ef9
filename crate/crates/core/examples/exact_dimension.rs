//! Exact metric dimension with bounds, statistics and a search budget.
//!
//!     cargo run --release --example exact_dimension

use metric_dimension::graph::{andrasfai, cartesian_product, complement, cycle, path};
use metric_dimension::solver::{greedy_upper_bound, lower_bound, metric_dimension_exact, SearchBudget};

fn main() -> metric_dimension::Result<()> {
    let graphs = vec![
        path(6)?,
        cycle(7)?,
        andrasfai(5)?,
        complement(&andrasfai(5)?),
        cartesian_product(&andrasfai(4)?, &path(3)?),
        cartesian_product(&andrasfai(3)?, &cycle(4)?),
    ];
    for g in &graphs {
        let lb = lower_bound(g)?;
        let (ub, _) = greedy_upper_bound(g)?;
        let report = metric_dimension_exact(g, SearchBudget::UNLIMITED)?;
        println!(
            "{:<12} lb={} ({:?}) greedy={} dim={} witness={:?} ({:?})",
            g.name(),
            lb.value,
            lb.source,
            ub,
            report.dimension.exact().unwrap(),
            report.witness,
            report.wall_time
        );
    }

    // A tiny budget gives an interval instead of a value.
    let tight = SearchBudget {
        max_subsets: Some(1),
        max_seconds: None,
    };
    let report = metric_dimension_exact(&andrasfai(6)?, tight)?;
    println!("And(6) with one search node: {:?}", report.dimension);

    let report = metric_dimension_exact(&andrasfai(4)?, SearchBudget::UNLIMITED)?;
    println!("{}", serde_json::to_string_pretty(&report.to_json())?);
    Ok(())
}
