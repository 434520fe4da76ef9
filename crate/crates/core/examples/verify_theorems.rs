//! Runs the mechanical checks for the Andrásfai results and prints a summary.
//!
//!     cargo run --release --example verify_theorems

use metric_dimension::andrasfai::CheckOptions;
use metric_dimension::verify::{evidence_bundle, run_checks, summary_table, CheckRequest};

fn main() -> metric_dimension::Result<()> {
    let mut requests: Vec<CheckRequest> = (1..=6).map(CheckRequest::AndK).collect();
    requests.extend((2..=5).map(CheckRequest::Complement));
    requests.extend([(2, 3), (3, 2), (4, 3)].map(|(k, n)| CheckRequest::Prism { k, n }));
    requests.push(CheckRequest::CycleProduct { k: 3, n: 4 });
    requests.push(CheckRequest::SmallCases(vec![3, 4, 5]));
    requests.push(CheckRequest::Structure(10));
    requests.push(CheckRequest::DistanceForm(10));
    requests.push(CheckRequest::DiameterTwoRule {
        k: 5,
        samples: 200,
        seed: 7,
    });

    let checks = run_checks(&requests, &CheckOptions::default())
        .into_iter()
        .collect::<metric_dimension::Result<Vec<_>>>()?;
    for c in &checks {
        print!("{c}");
    }
    println!();
    print!("{}", summary_table(&checks));

    // And(1) is K2, so And(1)□P2 is the 4-cycle and needs two landmarks.
    let ladder = CheckRequest::Prism { k: 1, n: 2 }.run(&CheckOptions::default())?;
    println!("\n{ladder}");

    let bundle = evidence_bundle(&checks);
    println!("all passed: {}", bundle["passed"]);
    Ok(())
}
