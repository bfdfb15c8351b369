//! Fingerprinting finitely presented groups by their finite quotients: the
//! figure-eight knot group maps onto the order-10 dihedral group, the
//! trefoil group does not, and the two groups are already separated by a
//! quotient of order 6.
//!
//! ```bash
//! cargo run --example finite_quotients
//! ```

use fbc::fpgroups::{
    build_catalog_group, compare_fingerprints, count_epimorphisms, default_catalog,
    quotient_fingerprint, GroupFamily, Presentation,
};

fn main() {
    let fig8 = Presentation::parse("x y | y x Y x y = x y X y x").unwrap();
    let trefoil = Presentation::parse("a b | a a = b b b").unwrap();
    println!("figure-eight group: {}", fig8);
    println!("trefoil group:      {}", trefoil);
    println!();

    let d10 = build_catalog_group(GroupFamily::Dihedral, 10).unwrap();
    println!(
        "epimorphisms onto the dihedral group of order 10: {} vs {}",
        count_epimorphisms(&fig8, &d10),
        count_epimorphisms(&trefoil, &d10),
    );

    let catalog = default_catalog(60);
    let f1 = quotient_fingerprint(&fig8, &catalog);
    let f2 = quotient_fingerprint(&trefoil, &catalog);
    println!();
    println!("catalog: {}", catalog.version);
    println!("figure-eight quotients: {}", render(&f1.catalog_ids));
    println!("trefoil quotients:      {}", render(&f2.catalog_ids));

    let diff = compare_fingerprints(&f1, &f2, &catalog).unwrap();
    println!();
    println!("symmetric difference of the fingerprints:");
    for entry in &diff.entries {
        println!(
            "  {:16} order {:3}  only in {}",
            entry.id.to_string(),
            entry.order,
            entry.side
        );
    }
    println!(
        "smallest separating quotient order: {}",
        diff.min_order().unwrap()
    );
}

fn render(ids: &[fbc::fpgroups::CatalogId]) -> String {
    ids.iter()
        .map(|id| id.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
