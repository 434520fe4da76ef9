//! Exact dimension tables for And(k)□Cn and a few exploratory families.
//!
//!     cargo run --release --example cycle_product_table

use metric_dimension::solver::SearchBudget;
use metric_dimension::verify::{table_rows, write_table_csv, TableFamily};

fn main() -> metric_dimension::Result<()> {
    let budget = SearchBudget {
        max_subsets: None,
        max_seconds: Some(60),
    };
    let tables = [
        (TableFamily::CycleProduct, vec![3, 4], vec![3, 4, 5, 6]),
        (TableFamily::K2Cycle, vec![], (3..=8).collect()),
        (TableFamily::C5Cycle, vec![], (3..=8).collect()),
        (TableFamily::AndrasfaiComplete, vec![2, 3], vec![2, 3, 4]),
        (TableFamily::LineAndrasfai, vec![2, 3, 4], vec![]),
    ];
    for (family, ks, ns) in tables {
        println!("# {}", family.name());
        write_table_csv(&table_rows(family, &ks, &ns, budget)?, std::io::stdout().lock())?;
        println!();
    }
    Ok(())
}
