//! On the full-system orbit P_{m,z} is the unipotent degree of m. These tests
//! check the curated family data against structural facts about unipotent
//! degrees that are independent of how the data was produced.

use negq_core::algebra::{charpoly_i64, cyclotomic_polynomial, int, Poly};
use negq_core::data::{shipped_types, DataSource};
use negq_core::ppoly::{compute_p, TypeContext};

fn load(t: &negq_core::rootsystem::CartanType) -> TypeContext {
    TypeContext::load(t, &DataSource::embedded()).unwrap()
}

fn phi(d: u32) -> Poly {
    Poly::from_ints(&cyclotomic_polynomial(d))
}

/// Strip powers of u and cyclotomic factors; what remains must be constant.
fn is_cyclotomic_product(p: &Poly, max_d: u32) -> bool {
    let mut rest = p.clone();
    while rest.coeff(0) == int(0) {
        match rest.div_exact(&Poly::monomial(int(1), 1)) {
            Some(q) => rest = q,
            None => return false,
        }
    }
    for d in 1..=max_d {
        while let Some(q) = rest.div_exact(&phi(d)) {
            rest = q;
        }
    }
    rest.degree() == Some(0)
}

/// Indices of the irreducibles ∧^k V, k = 0..=rank.
fn exterior_powers(ctx: &TypeContext) -> Vec<usize> {
    let wg = &ctx.group;
    let n = wg.root_system().rank();
    let cps: Vec<Vec<i64>> = (0..wg.order()).map(|w| charpoly_i64(&wg.matrix(w))).collect();
    (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            (0..ctx.chars.len())
                .find(|&e| (0..wg.order()).all(|w| ctx.chars.value(e, w) == sign * cps[w][n - k]))
                .expect("exterior powers of the reflection representation are irreducible")
        })
        .collect()
}

#[test]
fn unipotent_degrees_have_the_expected_shape() {
    for t in shipped_types() {
        let ctx = load(&t);
        let h = *ctx.group.root_system().degrees().iter().max().unwrap();
        let wedge = exterior_powers(&ctx);
        for (fi, f) in ctx.families.families.iter().enumerate() {
            let mut principal = vec![false; f.fourier.size()];
            for (&e, &m) in f.members.iter().zip(&f.embedding) {
                principal[m] = true;
                let d = compute_p(&ctx, fi, m, 0, 0).unwrap().poly;
                assert_eq!(d.eval(&int(1)), int(ctx.chars.dim(e) as i64), "{t} {}", ctx.chars.labels[e].name);
                let coxeter = d.div_exact(&phi(h)).is_some();
                assert_eq!(!coxeter, wedge.contains(&e), "{t} {}: Φ_h test", ctx.chars.labels[e].name);
            }
            for (m, &is_principal) in principal.iter().enumerate() {
                let d = compute_p(&ctx, fi, m, 0, 0).unwrap().poly;
                let label = format!("{t} family {fi} {}", f.m_name(m));
                assert!(is_cyclotomic_product(&d, 2 * h), "{label}: {d}");
                assert_eq!(d.reverse(f.a + f.big_a), d, "{label} is not palindromic");
                if !is_principal {
                    assert_eq!(d.eval(&int(1)), int(0), "{label} should vanish at q = 1");
                }
            }
        }
    }
}
