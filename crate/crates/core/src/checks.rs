//! Internal consistency checks run by `negq verify selftest`.

use std::collections::BTreeSet;

use num_traits::Signed;

use crate::algebra::{int, Poly};
use crate::ppoly::TypeContext;
use crate::reptheory::CosetTraces;

/// Σ_E dim(E)·fake_degree(E) = Σ_w u^{ℓ(w)}.
pub fn fake_degree_sum_matches(ctx: &TypeContext) -> bool {
    let sum = (0..ctx.chars.len())
        .fold(Poly::zero(), |acc, e| &acc + &ctx.chars.fake_degrees[e].scale(&int(ctx.chars.dim(e) as i64)));
    let wg = &ctx.group;
    let mut lengths = vec![0i64; wg.root_system().num_positive() + 1];
    for w in 0..wg.order() {
        lengths[wg.length(w)] += 1;
    }
    sum == Poly::from_ints(&lengths)
}

pub fn fake_degrees_nonnegative_integral(ctx: &TypeContext) -> bool {
    ctx.chars.fake_degrees.iter().all(|p| p.is_integral() && p.coeffs().iter().all(|c| !c.is_negative()))
}

/// Every graded coinvariant trace over every orbit and z passes the
/// exact-divisibility check and has integer coefficients.
pub fn coset_traces_integral(ctx: &TypeContext) -> bool {
    ctx.orbits.iter().enumerate().all(|(o, y)| {
        let Ok(z) = ctx.zset(o) else { return false };
        z.classes.iter().all(|c| {
            match CosetTraces::new(&ctx.group, c.representative, &y.representative.space, &y.representative.wh) {
                Ok(t) => t.groups.iter().all(|(p, _)| p.is_integral()),
                Err(_) => false,
            }
        })
    })
}

pub fn fourier_matrices_valid(ctx: &TypeContext) -> bool {
    let mut seen = BTreeSet::new();
    ctx.families.families.iter().all(|f| {
        if !seen.insert(f.gamma.kind.to_string()) {
            return true;
        }
        let m = &f.fourier;
        m.is_symmetric() && m.is_involutive() && m.rational_entries().is_some() && m.denominators_divide_order()
    })
}

pub fn self_checks(ctx: &TypeContext) -> Vec<(String, bool)> {
    vec![
        ("character table orthogonality".into(), ctx.chars.table.check_orthogonality()),
        ("fake degree sum equals Poincaré polynomial".into(), fake_degree_sum_matches(ctx)),
        ("fake degrees have non-negative integer coefficients".into(), fake_degrees_nonnegative_integral(ctx)),
        ("coinvariant traces integral".into(), coset_traces_integral(ctx)),
        ("Fourier matrices symmetric, involutive, rational".into(), fourier_matrices_valid(ctx)),
    ]
}
