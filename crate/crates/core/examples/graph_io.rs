//! graph6 and edge-list JSON round trips, plus the distance matrix as CSV.
//!
//!     cargo run --example graph_io

use metric_dimension::graph::{andrasfai, cartesian_product, path};
use metric_dimension::metric::distance_matrix;
use metric_dimension::Graph;

fn main() -> metric_dimension::Result<()> {
    let g = andrasfai(4)?;
    let g6 = g.to_graph6();
    println!("{} as graph6: {g6}", g.name());
    let back = Graph::from_graph6(&g6, "from graph6")?;
    assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());

    let prism = cartesian_product(&andrasfai(2)?, &path(2)?);
    let json = prism.to_json();
    println!("{} as JSON: {json}", prism.name());
    let back = Graph::from_json(&json)?;
    assert_eq!(back.name(), prism.name());
    assert_eq!(back.edge_count(), prism.edge_count());

    // Vertex (u, t) of the product is u + t * 5.
    println!("distance matrix of {}:", prism.name());
    distance_matrix(&prism)?.write_csv(std::io::stdout().lock())?;
    Ok(())
}
