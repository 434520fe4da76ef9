//! Builds each graph family and prints a one-line summary.
//!
//!     cargo run --example construct_families

use metric_dimension::graph::{
    andrasfai, cartesian_product, cayley_cyclic, complement, complete, cycle, line_graph, path, ConnectionSet,
};
use metric_dimension::metric::diameter;

fn main() -> metric_dimension::Result<()> {
    let mobius = cayley_cyclic(&ConnectionSet::new(8, [1, 4, 7])?);
    let graphs = vec![
        andrasfai(1)?,
        andrasfai(2)?,
        mobius.clone().with_name("Cay(Z8,{1,4,7})"),
        andrasfai(4)?,
        complement(&andrasfai(4)?),
        cartesian_product(&andrasfai(3)?, &path(2)?),
        cartesian_product(&andrasfai(3)?, &cycle(4)?),
        cartesian_product(&andrasfai(2)?, &complete(3)?),
        line_graph(&andrasfai(3)?)?,
    ];
    println!(
        "{:<18} {:>3} {:>5} {:>7} {:>5} {:>14}",
        "graph", "n", "edges", "regular", "diam", "triangle-free"
    );
    for g in &graphs {
        let reg = g.regular_degree().map_or("-".into(), |d| d.to_string());
        let diam = diameter(g)?.map_or("inf".into(), |d| d.to_string());
        println!(
            "{:<18} {:>3} {:>5} {:>7} {:>5} {:>14}",
            g.name(),
            g.n(),
            g.edge_count(),
            reg,
            diam,
            g.is_triangle_free()
        );
    }

    // And(3) and the Cayley graph above are the same labeled graph.
    let ident: Vec<usize> = (0..8).collect();
    assert!(andrasfai(3)?.is_relabeling_of(&mobius, &ident));

    // Not inverse-closed: 4 - 1 = 3 is missing.
    assert!(ConnectionSet::new(4, [1]).is_err());
    Ok(())
}
