//! Resolving-set checks with witness pairs, distinguisher sets and twins.
//!
//!     cargo run --example resolving_check

use metric_dimension::andrasfai::canonical_s;
use metric_dimension::graph::{andrasfai, complete, path};
use metric_dimension::metric::{
    distance_matrix, distinguisher_set, is_resolving, resolves_by_diameter_two_rule, twin_classes, Code,
    ResolvingCertificate,
};

fn main() -> metric_dimension::Result<()> {
    let g = andrasfai(4)?;
    let dm = distance_matrix(&g)?;
    let s = canonical_s(4)?;

    println!("codes in {} with W = {s:?}:", g.name());
    for v in 0..g.n() {
        println!("  r({v:>2}|W) = {:?}", Code::of(v, &s, &dm)?.entries);
    }
    println!("S: {:?}", is_resolving(&g, &s)?);

    let w = [0, 1, 2];
    match is_resolving(&g, &w)? {
        ResolvingCertificate::Resolving => println!("{w:?} resolves"),
        ResolvingCertificate::NotResolving { witness: [u, v], code } => {
            println!("{w:?} fails: {u} and {v} both have code {code:?}");
            println!("  D({u},{v}) = {:?}", distinguisher_set(u, v, &dm)?);
        }
    }
    // On a diameter-two graph the {1,2} rule gives the same verdict.
    assert_eq!(
        resolves_by_diameter_two_rule(&dm, &w)?,
        is_resolving(&g, &w)?.is_resolving()
    );

    println!("twin classes of K4: {:?}", twin_classes(&complete(4)?));
    println!("twin classes of P3: {:?}", twin_classes(&path(3)?));
    Ok(())
}
