//! The polynomials P_{m,z}(u), the sign identity relating P_{m!,z!} to
//! P_{m,z}(−u), and the order-polynomial identities used alongside them.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{
    charpoly_i64, int, poly_negate_variable, series_divide_exact, ExactRational, Poly, TruncatedSeries,
};
use crate::data::DataSource;
use crate::error::{Error, Result};
use crate::families::{solve_bang, BangSolution, Family, FamilyData};
use crate::reptheory::{CosetTraces, SubsystemSpace, WeylCharacters};
use crate::rootsystem::{build_root_system, CartanType};
use crate::subsystems::{bang_involution, enumerate_pseudo_levis, z_classes, Subsystem, YOrbit, ZSet};
use crate::weyl::{WeylGroup, WeylSubgroup};

/// Where a P-polynomial came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub orbit: String,
    pub orbit_index: usize,
    pub family: usize,
    pub m: String,
    pub z: usize,
    pub subsystem: Vec<usize>,
    pub coset_representative: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PPolynomial {
    pub poly: Poly,
    pub provenance: Provenance,
}

/// Everything computed once per Cartan type.
pub struct TypeContext {
    pub cartan_type: CartanType,
    pub group: Arc<WeylGroup>,
    pub chars: WeylCharacters,
    pub families: FamilyData,
    pub orbits: Vec<YOrbit>,
}

impl TypeContext {
    pub fn load(t: &CartanType, source: &DataSource) -> Result<Self> {
        let rs = Arc::new(build_root_system(t)?);
        let group = Arc::new(WeylGroup::new(rs));
        let labels = source.labels(t)?;
        let chars = WeylCharacters::new(group.clone(), labels.as_ref())?;
        let file = source.families(t)?.ok_or_else(|| Error::DataIntegrity(format!("no family data for {t}")))?;
        let families = FamilyData::ingest(&chars, &file)?;
        for f in &families.families {
            if f.fourier.rational_entries().is_none() {
                return Err(Error::DataIntegrity(format!("Fourier matrix of Γ = {} is not rational", f.gamma.kind)));
            }
        }
        let orbits = enumerate_pseudo_levis(&group)?;
        Ok(TypeContext { cartan_type: t.clone(), group, chars, families, orbits })
    }

    pub fn w0_is_minus_one(&self) -> bool {
        self.group.longest_element().1
    }

    /// Orbit by name or index.
    pub fn find_orbit(&self, key: &str) -> Option<usize> {
        if key == "full" {
            return Some(0);
        }
        if key == "empty" || key == "torus" {
            return Some(self.orbits.len() - 1);
        }
        self.orbits
            .iter()
            .position(|y| y.name == key)
            .or_else(|| key.parse::<usize>().ok().filter(|&i| i < self.orbits.len()))
    }

    /// Z_Y with bang partners filled in when w0 = −1.
    pub fn zset(&self, orbit: usize) -> Result<ZSet> {
        let z = z_classes(&self.group, &self.orbits[orbit].representative)?;
        if self.w0_is_minus_one() {
            bang_involution(&self.group, z)
        } else {
            Ok(z)
        }
    }
}

/// Tensor traces of the family members, evaluated on one coset of a
/// subsystem and cached per irreducible.
pub struct CosetEvaluator<'a> {
    ctx: &'a TypeContext,
    traces: CosetTraces,
    cache: HashMap<usize, Poly>,
    pub subsystem: Vec<usize>,
    pub coset_representative: usize,
}

impl<'a> CosetEvaluator<'a> {
    pub fn new(ctx: &'a TypeContext, sub: &Subsystem, n: usize) -> Result<Self> {
        let traces = CosetTraces::new(&ctx.group, n, &sub.space, &sub.wh)?;
        Ok(CosetEvaluator { ctx, traces, cache: HashMap::new(), subsystem: sub.roots.clone(), coset_representative: n })
    }

    fn tensor(&mut self, e: usize) -> &Poly {
        let chars = &self.ctx.chars;
        let traces = &self.traces;
        self.cache.entry(e).or_insert_with(|| traces.tensor_trace(|x| chars.value(e, x)))
    }

    /// Σ_{E∈c} Δ(m)·⟨m, m_E⟩·tr(z, (S̄ ⊗ E)^{W_H}).
    pub fn p(&mut self, family: &Family, m: usize) -> Result<Poly> {
        if m >= family.fourier.size() {
            return Err(Error::MismatchedFamily(format!("element {m} not in M(Γ) of family {}", family.index)));
        }
        let pairing = family.pairing_row(m);
        let delta = int(family.delta[m] as i64);
        let mut acc = Poly::zero();
        for (&e, c) in family.members.iter().zip(&pairing) {
            if c.is_zero() {
                continue;
            }
            let t = self.tensor(e).scale(&(c * &delta));
            acc = &acc + &t;
        }
        Ok(acc)
    }
}

/// P_{m,z} for one tuple, lifting z to its canonical coset representative.
pub fn compute_p(ctx: &TypeContext, family: usize, m: usize, orbit: usize, z: usize) -> Result<PPolynomial> {
    let y = &ctx.orbits[orbit];
    let zset = z_classes(&ctx.group, &y.representative)?;
    let class = zset.classes.get(z).ok_or_else(|| Error::UnknownFilter(format!("z = {z} (|Z_Y| = {})", zset.len())))?;
    let mut eval = CosetEvaluator::new(ctx, &y.representative, class.representative)?;
    let f = &ctx.families.families[family];
    Ok(PPolynomial { poly: eval.p(f, m)?, provenance: provenance(ctx, orbit, f, m, z, &eval) })
}

fn provenance(ctx: &TypeContext, orbit: usize, f: &Family, m: usize, z: usize, eval: &CosetEvaluator) -> Provenance {
    Provenance {
        cartan_type: ctx.cartan_type.to_string(),
        orbit: ctx.orbits[orbit].name.clone(),
        orbit_index: orbit,
        family: f.index,
        m: f.m_name(m),
        z,
        subsystem: eval.subsystem.clone(),
        coset_representative: eval.coset_representative,
    }
}

/// All P_{m,z} for the selected orbits and families, in provenance order.
pub fn p_table(ctx: &TypeContext, orbits: &[usize], families: &[usize]) -> Result<Vec<PPolynomial>> {
    let mut out = Vec::new();
    for &o in orbits {
        let y = &ctx.orbits[o];
        let zset = z_classes(&ctx.group, &y.representative)?;
        for class in &zset.classes {
            let mut eval = CosetEvaluator::new(ctx, &y.representative, class.representative)?;
            for &fi in families {
                let f = &ctx.families.families[fi];
                for m in 0..f.fourier.size() {
                    let poly = eval.p(f, m)?;
                    out.push(PPolynomial { poly, provenance: provenance(ctx, o, f, m, class.index, &eval) });
                }
            }
        }
    }
    out.sort_by(|a, b| {
        let (p, q) = (&a.provenance, &b.provenance);
        (p.orbit_index, p.family, p.z).cmp(&(q.orbit_index, q.family, q.z))
    });
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct SignCheck {
    pub orbit: String,
    pub family: usize,
    pub m: String,
    pub z: usize,
    pub m_bang: String,
    pub z_bang: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Poly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Poly>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SignReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub checks: Vec<SignCheck>,
    /// Families whose m ↦ m! relations leave more than one choice.
    pub ambiguous_families: Vec<usize>,
}

impl SignReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Check P_{m!,z!}(u) = (−1)^{A_c} P_{m,z}(−u) over every orbit, family,
/// m and z.
pub fn verify_sign_theorem(ctx: &TypeContext) -> Result<SignReport> {
    if !ctx.w0_is_minus_one() {
        return Err(Error::W0NotCentral(ctx.cartan_type.to_string()));
    }
    let bangs: Vec<BangSolution> =
        ctx.families.families.iter().map(|f| solve_bang(f, &ctx.chars)).collect::<Result<_>>()?;
    let ambiguous_families =
        bangs.iter().enumerate().filter(|(_, b)| b.multiple.iter().any(|&x| x)).map(|(i, _)| i).collect();
    let mut checks = Vec::new();
    for (o, y) in ctx.orbits.iter().enumerate() {
        let zset = ctx.zset(o)?;
        let mut table: Vec<Vec<Vec<Poly>>> = Vec::with_capacity(zset.len());
        for class in &zset.classes {
            let mut eval = CosetEvaluator::new(ctx, &y.representative, class.representative)?;
            let per_family = ctx
                .families
                .families
                .iter()
                .map(|f| (0..f.fourier.size()).map(|m| eval.p(f, m)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            table.push(per_family);
        }
        for (fi, f) in ctx.families.families.iter().enumerate() {
            let sign = if f.big_a % 2 == 0 { int(1) } else { int(-1) };
            for m in 0..f.fourier.size() {
                let mb = bangs[fi].partner[m];
                for class in &zset.classes {
                    let z = class.index;
                    let zb = class.bang.expect("bang computed when w0 = -1");
                    let lhs = &table[zb][fi][mb];
                    let rhs = poly_negate_variable(&table[z][fi][m]).scale(&sign);
                    let pass = *lhs == rhs;
                    checks.push(SignCheck {
                        orbit: y.name.clone(),
                        family: fi,
                        m: f.m_name(m),
                        z,
                        m_bang: f.m_name(mb),
                        z_bang: zb,
                        pass,
                        lhs: (!pass).then(|| lhs.clone()),
                        rhs: (!pass).then_some(rhs),
                    });
                }
            }
        }
    }
    Ok(SignReport { cartan_type: ctx.cartan_type.to_string(), checks, ambiguous_families })
}

#[derive(Clone, Debug, Serialize)]
pub struct IndependenceCheck {
    pub orbit: String,
    pub z: usize,
    /// "coset" for another element of the class, "conjugate" for w·Σ_H.
    pub kind: String,
    pub alternative_subsystem: Vec<usize>,
    pub alternative_representative: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndependenceReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub checks: Vec<IndependenceCheck>,
    /// Orbits with a single subsystem and single-element classes only.
    pub skipped: Vec<String>,
}

impl IndependenceReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn all_p(ctx: &TypeContext, eval: &mut CosetEvaluator) -> Result<Vec<Vec<Poly>>> {
    ctx.families.families.iter().map(|f| (0..f.fourier.size()).map(|m| eval.p(f, m)).collect()).collect()
}

/// Recompute every P of an orbit through a different lift of z and through
/// a W-conjugate of the representative subsystem.
pub fn independence_check(ctx: &TypeContext, orbit: usize) -> Result<Vec<IndependenceCheck>> {
    let wg = &ctx.group;
    let y = &ctx.orbits[orbit];
    let sub = &y.representative;
    let zset = z_classes(wg, sub)?;
    // Least w moving Σ_H, if any.
    let mover = (0..wg.order()).find(|&w| !sub.stabilizer.contains(w));
    let conjugate = mover.map(|w| sub.conjugate(wg, w)).transpose()?;
    let mut checks = Vec::new();
    for class in &zset.classes {
        let base = all_p(ctx, &mut CosetEvaluator::new(ctx, sub, class.representative)?)?;
        let last_coset = *class.cosets.last().unwrap();
        let alt = *zset.quotient.cosets[last_coset].last().unwrap();
        if alt != class.representative {
            let got = all_p(ctx, &mut CosetEvaluator::new(ctx, sub, alt)?)?;
            checks.push(IndependenceCheck {
                orbit: y.name.clone(),
                z: class.index,
                kind: "coset".into(),
                alternative_subsystem: sub.roots.clone(),
                alternative_representative: alt,
                pass: got == base,
            });
        }
        if let (Some(w), Some(conj)) = (mover, conjugate.as_ref()) {
            let n = wg.table().conj(w, class.representative);
            let got = all_p(ctx, &mut CosetEvaluator::new(ctx, conj, n)?)?;
            checks.push(IndependenceCheck {
                orbit: y.name.clone(),
                z: class.index,
                kind: "conjugate".into(),
                alternative_subsystem: conj.roots.clone(),
                alternative_representative: n,
                pass: got == base,
            });
        }
    }
    Ok(checks)
}

pub fn independence_report(ctx: &TypeContext) -> Result<IndependenceReport> {
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    for o in 0..ctx.orbits.len() {
        let c = independence_check(ctx, o)?;
        if c.is_empty() {
            skipped.push(ctx.orbits[o].name.clone());
        }
        checks.extend(c);
    }
    Ok(IndependenceReport { cartan_type: ctx.cartan_type.to_string(), checks, skipped })
}

pub fn specialize(p: &Poly, q: u64) -> ExactRational {
    p.eval(&ExactRational::from_integer((q as i64).into()))
}

/// Specialization for the full-system orbit, where the value is a character
/// degree and must be a positive integer.
pub fn specialize_degree(p: &PPolynomial, q: u64) -> Result<ExactRational> {
    let v = specialize(&p.poly, q);
    if !v.is_integer() || v <= int(0) {
        return Err(Error::NonIntegralDegree {
            q,
            value: v.to_string(),
            context: format!("{} family {} m = {}", p.provenance.cartan_type, p.provenance.family, p.provenance.m),
        });
    }
    Ok(v)
}

pub const DEGREE_CHECK_QS: [u64; 8] = [2, 3, 4, 5, 7, 8, 9, 16];

#[derive(Clone, Debug, Serialize)]
pub struct DegreeCheck {
    pub family: usize,
    pub m: String,
    pub q: u64,
    pub value: String,
    pub pass: bool,
}

/// Full-system specializations of every family member at each q.
pub fn degree_checks(ctx: &TypeContext, qs: &[u64]) -> Result<Vec<DegreeCheck>> {
    let families: Vec<usize> = (0..ctx.families.families.len()).collect();
    let mut out = Vec::new();
    for p in p_table(ctx, &[0], &families)? {
        for &q in qs {
            let (value, pass) = match specialize_degree(&p, q) {
                Ok(v) => (v.to_string(), true),
                Err(_) => (specialize(&p.poly, q).to_string(), false),
            };
            out.push(DegreeCheck { family: p.provenance.family, m: p.provenance.m.clone(), q, value, pass });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusOrder {
    /// det(u·id − w) on the character space.
    pub poly: Poly,
    pub eps: i8,
}

pub fn torus_order(wg: &WeylGroup, w: usize) -> TorusOrder {
    let cp = charpoly_i64(&wg.matrix(w));
    let poly = Poly::from_ints(&cp);
    let x_minus_one = Poly::from_ints(&[-1, 1]);
    let mut rest = poly.clone();
    let mut mult = 0;
    while let Some(q) = rest.div_exact(&x_minus_one) {
        rest = q;
        mult += 1;
    }
    let rank = wg.root_system().rank();
    TorusOrder { poly, eps: if (rank - mult).is_multiple_of(2) { 1 } else { -1 } }
}

/// Twisted Molien series (1/|W_H|) Σ_{x∈n·W_H} 1/det(1 − u·x|V_H).
fn twisted_molien(
    wg: &WeylGroup,
    space: &SubsystemSpace,
    wh: &WeylSubgroup,
    n: usize,
    order: usize,
) -> Result<TruncatedSeries> {
    let mut by_charpoly: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for &w in &wh.elements {
        *by_charpoly.entry(charpoly_i64(&space.restrict(wg, wg.mul(n, w)))).or_default() += 1;
    }
    let mut molien = TruncatedSeries::zero(order);
    for (cp, count) in by_charpoly {
        let mut rev = cp;
        rev.reverse();
        molien.add_assign_scaled(&TruncatedSeries::reciprocal_of_poly(&Poly::from_ints(&rev), order)?, &int(count));
    }
    Ok(molien.scale(&ExactRational::new(1.into(), (wh.order() as i64).into())))
}

/// Degrees of the reflection group of a root subset.
pub fn subsystem_degrees(wg: &WeylGroup, roots: &[usize]) -> Result<Vec<u32>> {
    let t = wg.root_system().subsystem_type(roots);
    let mut out = Vec::new();
    for &(s, r) in t.components() {
        let rs = build_root_system(&CartanType::simple(s, r)?)?;
        out.extend_from_slice(rs.degrees());
    }
    out.sort_unstable();
    Ok(out)
}

/// u^{N_H}·∏(u^{d_i} − ε_i), read off from the twisted Molien series
/// 1/∏(1 − ε_i u^{d_i}).
pub fn group_order_poly(wg: &WeylGroup, roots: &[usize], n: usize) -> Result<Poly> {
    let space = SubsystemSpace::new(wg.root_system(), roots)?;
    if !space.is_stabilized_by(wg, n) {
        return Err(Error::NotInStabilizer);
    }
    let wh = wg.reflection_subgroup(roots)?;
    let degrees = subsystem_degrees(wg, roots)?;
    let total: usize = degrees.iter().map(|&d| d as usize).sum();
    let order = total + 1 + total;
    let molien = twisted_molien(wg, &space, &wh, n, order)?;
    let one = TruncatedSeries::from_poly(&Poly::one(), order);
    let product = series_divide_exact(&one, &molien, total)
        .map_err(|_| Error::ProductFormMismatch(format!("1/Molien is not a polynomial of degree {total}")))?;
    let lead = product.coeff(total);
    if product.coeff(0) != int(1) || !product.is_integral() || (lead != int(1) && lead != int(-1)) {
        return Err(Error::ProductFormMismatch(format!("1/Molien = {product}")));
    }
    Ok(product.reverse(total).shift(space.num_positive))
}

/// u^{N_H}·∏(u^{d_i} − 1) from the degrees.
pub fn split_order_poly(wg: &WeylGroup, roots: &[usize]) -> Result<Poly> {
    let n = roots.len() / 2;
    let mut p = Poly::monomial(int(1), n);
    for d in subsystem_degrees(wg, roots)? {
        let mut c = vec![0i64; d as usize + 1];
        c[0] = -1;
        c[d as usize] = 1;
        p = &p * &Poly::from_ints(&c);
    }
    Ok(p)
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassIndexReport {
    /// Sizes of the W_H-conjugation orbits on the coset n·W_H.
    pub orbit_sizes: Vec<usize>,
    pub subgroup_order: usize,
    pub holds: bool,
}

pub fn class_index_identity(wg: &WeylGroup, roots: &[usize], n: usize) -> Result<ClassIndexReport> {
    let space = SubsystemSpace::new(wg.root_system(), roots)?;
    if !space.is_stabilized_by(wg, n) {
        return Err(Error::NotInStabilizer);
    }
    let wh = wg.reflection_subgroup(roots)?;
    let coset: BTreeSet<usize> = wh.elements.iter().map(|&w| wg.mul(n, w)).collect();
    let mut seen = BTreeSet::new();
    let mut orbit_sizes = Vec::new();
    for &x in &coset {
        if seen.contains(&x) {
            continue;
        }
        let orbit: BTreeSet<usize> = wh.elements.iter().map(|&w| wg.table().conj(w, x)).collect();
        debug_assert!(orbit.is_subset(&coset));
        orbit_sizes.push(orbit.len());
        seen.extend(orbit);
    }
    let holds = orbit_sizes.iter().sum::<usize>() == wh.order() && seen.len() == coset.len();
    Ok(ClassIndexReport { orbit_sizes, subgroup_order: wh.order(), holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(t: &str) -> TypeContext {
        TypeContext::load(&t.parse().unwrap(), &DataSource::embedded()).unwrap()
    }

    fn family_of(c: &TypeContext, key: &str) -> usize {
        c.families.find(&c.chars, key).unwrap()
    }

    #[test]
    fn trivial_and_sign_on_full_system() {
        for t in ["A1", "B2", "G2"] {
            let c = ctx(t);
            let n = c.group.root_system().num_positive();
            let p = compute_p(&c, family_of(&c, "trivial"), 0, 0, 0).unwrap();
            assert_eq!(p.poly, Poly::one());
            let p = compute_p(&c, family_of(&c, "sign"), 0, 0, 0).unwrap();
            assert_eq!(p.poly, Poly::monomial(int(1), n));
        }
    }

    #[test]
    fn torus_subsystem_gives_constants() {
        let c = ctx("B2");
        let empty = c.orbits.len() - 1;
        let zset = c.zset(empty).unwrap();
        for (fi, f) in c.families.families.iter().enumerate() {
            for class in &zset.classes {
                let w = class.representative;
                for m in 0..f.fourier.size() {
                    let p = compute_p(&c, fi, m, empty, class.index).unwrap().poly;
                    let expected: ExactRational = f
                        .members
                        .iter()
                        .zip(f.pairing_row(m))
                        .map(|(&e, r)| r * int(c.chars.value(e, w) * f.delta[m] as i64))
                        .sum();
                    assert_eq!(p, Poly::constant(expected));
                }
            }
        }
    }

    #[test]
    fn sign_theorem_small_types() {
        for t in ["A1", "B2", "G2"] {
            let r = verify_sign_theorem(&ctx(t)).unwrap();
            assert!(r.all_pass(), "{t}: {:?}", r.checks.iter().find(|c| !c.pass));
        }
        let b2 = verify_sign_theorem(&ctx("B2")).unwrap();
        assert!(b2.checks.len() >= 60, "{}", b2.checks.len());
        assert!(matches!(verify_sign_theorem(&ctx("A2")), Err(Error::W0NotCentral(_))));
    }

    #[test]
    fn independence_small_types() {
        for t in ["B2", "G2"] {
            let r = independence_report(&ctx(t)).unwrap();
            assert!(r.all_pass());
            assert!(r.checks.iter().any(|c| c.kind == "conjugate"));
        }
    }

    #[test]
    fn specializations() {
        assert_eq!(specialize(&Poly::one(), 5), int(1));
        assert_eq!(specialize(&Poly::monomial(int(1), 4), 2), int(16));
        assert!(degree_checks(&ctx("B2"), &[2, 3, 4, 5]).unwrap().iter().all(|d| d.pass));
    }

    #[test]
    fn torus_orders() {
        let c = ctx("B2");
        let wg = &c.group;
        assert_eq!(torus_order(wg, 0), TorusOrder { poly: Poly::from_ints(&[1, -2, 1]), eps: 1 });
        let (w0, _) = wg.longest_element();
        assert_eq!(torus_order(wg, w0.id), TorusOrder { poly: Poly::from_ints(&[1, 2, 1]), eps: 1 });
        let cox = wg.from_word(&[0, 1]);
        assert_eq!(torus_order(wg, cox).poly, Poly::from_ints(&[1, 0, 1]));
        let a1 = ctx("A1");
        let (w0, _) = a1.group.longest_element();
        assert_eq!(torus_order(&a1.group, w0.id), TorusOrder { poly: Poly::from_ints(&[1, 1]), eps: -1 });
    }

    #[test]
    fn order_polynomials() {
        let c = ctx("B2");
        let wg = &c.group;
        let full = c.orbits[0].representative.roots.clone();
        assert_eq!(group_order_poly(wg, &full, 0).unwrap(), Poly::from_ints(&[0, 0, 0, 0, 1, 0, -1, 0, -1, 0, 1]));
        let a1 = c.orbits.iter().find(|y| y.name == "A1(long)").unwrap();
        assert_eq!(group_order_poly(wg, &a1.representative.roots, 0).unwrap(), Poly::from_ints(&[0, -1, 0, 1]));
        let aa = &c.orbits.iter().find(|y| y.name == "A1(long)×A1(long)").unwrap().representative;
        let swap = aa.stabilizer.elements.iter().copied().find(|&w| !aa.wh.contains(w)).unwrap();
        assert_eq!(group_order_poly(wg, &aa.roots, swap).unwrap(), Poly::from_ints(&[0, 0, -1, 0, 0, 0, 1]));
        let r = class_index_identity(wg, &aa.roots, swap).unwrap();
        assert!(r.holds);
        assert_eq!(r.orbit_sizes.iter().sum::<usize>(), 4);
        let r = class_index_identity(wg, &full, 0).unwrap();
        assert_eq!(r.orbit_sizes.len(), 5);
    }
}
