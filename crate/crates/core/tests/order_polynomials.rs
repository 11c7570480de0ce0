use negq_core::algebra::{int, Poly};
use negq_core::data::DataSource;
use negq_core::ppoly::{class_index_identity, group_order_poly, TypeContext};

const TYPES: [&str; 12] = ["A1", "A2", "A3", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"];

/// Every twisted order polynomial has the product shape u^{N_H}·∏(u^{d_i} − ε_i),
/// and the twisted class sizes add up to |W_H|.
#[test]
fn twisted_orders_for_every_orbit_and_class() {
    let mut total = 0;
    for t in TYPES {
        let ctx = TypeContext::load(&t.parse().unwrap(), &DataSource::embedded()).unwrap();
        for (o, y) in ctx.orbits.iter().enumerate() {
            let roots = &y.representative.roots;
            let z = ctx.zset(o).unwrap();
            for class in &z.classes {
                let n = class.representative;
                let p = group_order_poly(&ctx.group, roots, n)
                    .unwrap_or_else(|e| panic!("{t} {} z {}: {e}", y.name, class.index));
                let dim = y.representative.space.dim();
                let top = roots.len() + dim;
                assert_eq!(p.degree(), Some(top), "{t} {}: {p}", y.name);
                assert_eq!(p.valuation(), Some(roots.len() / 2), "{t} {}: {p}", y.name);
                let lead = p.coeff(top);
                assert!(lead == int(1) || lead == int(-1), "{t} {}: leading {lead}", y.name);
                assert!(p.is_integral(), "{t} {}: {p}", y.name);
                assert!(class_index_identity(&ctx.group, roots, n).unwrap().holds, "{t} {} z {}", y.name, class.index);
                total += 1;
            }
        }
    }
    assert!(total > 100);
}

#[test]
fn identity_twist_gives_the_split_order_of_a1() {
    let ctx = TypeContext::load(&"A1".parse().unwrap(), &DataSource::embedded()).unwrap();
    let full = ctx.find_orbit("full").unwrap();
    let p = group_order_poly(&ctx.group, &ctx.orbits[full].representative.roots, 0).unwrap();
    assert_eq!(p, Poly::from_ints(&[0, -1, 0, 1]));
}
