use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use negq_core::algebra::{poly_negate_variable, rat, Cyclotomic, Poly};
use negq_core::data::DataSource;
use negq_core::families::{GammaGroup, GammaKind};
use negq_core::ppoly::TypeContext;
use negq_core::rootsystem::build_root_system;
use negq_core::subsystems::enumerate_pseudo_levis;
use negq_core::weyl::WeylGroup;

fn weyl(t: &str) -> Arc<WeylGroup> {
    static CACHE: OnceLock<Vec<(String, Arc<WeylGroup>)>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        ["A2", "B3", "C3", "D4", "G2", "F4"]
            .iter()
            .map(|t| {
                (t.to_string(), Arc::new(WeylGroup::new(Arc::new(build_root_system(&t.parse().unwrap()).unwrap()))))
            })
            .collect()
    });
    all.iter().find(|(n, _)| n == t).unwrap().1.clone()
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-9i64..10, 1i64..5), 0..6)
        .prop_map(|c| Poly::from_coeffs(c.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

fn cyclotomic(order: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-5i64..6, 0i64..order as i64), 1..4).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(Cyclotomic::zero(order), |acc, (c, k)| &acc + &Cyclotomic::zeta_pow(order, k).scale(&rat(c, 1)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_division_undoes_multiplication(p in poly(), q in poly()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).div_exact(&q), Some(p));
    }

    #[test]
    fn negating_the_variable_is_an_involution(p in poly()) {
        prop_assert_eq!(poly_negate_variable(&poly_negate_variable(&p)), p.clone());
        let q = poly_negate_variable(&p);
        prop_assert_eq!(poly_negate_variable(&(&p * &q)), &p * &q);
    }

    #[test]
    fn cyclotomic_ring_laws(a in cyclotomic(12), b in cyclotomic(12), c in cyclotomic(12)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert!((&a * &a.conj()).conj() == &a * &a.conj());
    }

    #[test]
    fn reduced_words_round_trip(t in prop::sample::select(vec!["A2", "B3", "G2", "F4"]), seed in any::<u64>()) {
        let wg = weyl(t);
        let w = (seed % wg.order() as u64) as usize;
        let word = wg.reduced_word(w);
        prop_assert_eq!(word.len(), wg.length(w));
        prop_assert_eq!(wg.from_word(&word), w);
        prop_assert_eq!(wg.parse_word(&wg.format_word(w)), Some(w));
        prop_assert_eq!(wg.length(wg.inv(w)), wg.length(w));
    }

    #[test]
    fn length_is_the_number_of_inversions(t in prop::sample::select(vec!["B3", "D4", "F4"]), seed in any::<u64>()) {
        let wg = weyl(t);
        let rs = wg.root_system();
        let w = (seed % wg.order() as u64) as usize;
        let inversions = (0..rs.num_roots()).filter(|&r| rs.is_positive(r) && !rs.is_positive(wg.act(w, r))).count();
        prop_assert_eq!(inversions, wg.length(w));
    }

    #[test]
    fn fourier_pairing_is_symmetric(kind in prop::sample::select(vec![GammaKind::Z2, GammaKind::Z2Squared, GammaKind::S3, GammaKind::S4]), i in 0usize..64, j in 0usize..64) {
        let g = GammaGroup::new(kind);
        let m = g.build_m();
        let (a, b) = (m[i % m.len()], m[j % m.len()]);
        prop_assert_eq!(g.fourier_pairing(a, b), g.fourier_pairing(b, a));
    }
}

#[test]
fn bang_is_an_involution_everywhere() {
    for t in ["B3", "C3", "D4", "G2", "F4"] {
        let ctx = TypeContext::load(&t.parse().unwrap(), &DataSource::embedded()).unwrap();
        for o in 0..ctx.orbits.len() {
            let z = ctx.zset(o).unwrap();
            for c in &z.classes {
                let b = c.bang.unwrap();
                assert_eq!(z.classes[b].bang, Some(c.index), "{t} orbit {}", ctx.orbits[o].name);
            }
        }
    }
}

#[test]
fn enumeration_is_closed_and_idempotent() {
    for t in ["B3", "G2", "F4"] {
        let wg = weyl(t);
        let orbits = enumerate_pseudo_levis(&wg).unwrap();
        let rs = wg.root_system();
        let canon: Vec<Vec<usize>> = orbits.iter().map(|y| y.representative.roots.clone()).collect();
        for y in &orbits {
            assert_eq!(wg.canonical_subset(&y.representative.roots).0, y.representative.roots);
            // One more deletion step from any representative stays inside the list.
            for d in rs.extended_diagrams(&y.representative.roots) {
                let rest: Vec<usize> =
                    y.representative.roots.iter().copied().filter(|r| !d.component.contains(r)).collect();
                for skip in 0..d.nodes.len() {
                    let kept: Vec<usize> =
                        d.nodes.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &n)| n).collect();
                    let mut next = rest.clone();
                    next.extend(rs.reflection_closure(&kept));
                    next.sort_unstable();
                    next.dedup();
                    assert!(canon.contains(&wg.canonical_subset(&next).0), "{t}: step from {} escapes", y.name);
                }
            }
        }
        let again: Vec<String> = enumerate_pseudo_levis(&wg).unwrap().into_iter().map(|y| y.name).collect();
        assert_eq!(again, orbits.iter().map(|y| y.name.clone()).collect::<Vec<_>>());
    }
}
