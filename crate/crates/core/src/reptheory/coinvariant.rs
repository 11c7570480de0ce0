//! Graded traces on coinvariant algebras of reflection subgroups.
//!
//! For a subsystem Σ_H spanning V_H and an element g normalizing W_H, the
//! graded trace of g on S(V_H)/(S(V_H)^{W_H}_+) is the quotient of
//! 1/det(1 − u·g) by the twisted Molien series of the coset g·W_H.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{charpoly_i64, ExactRational};
use crate::algebra::{det_one_minus_u, guard_band, int, series_divide_exact, IntMatrix, Poly, TruncatedSeries};
use crate::error::{Error, Result};
use crate::rootsystem::RootSystem;
use crate::weyl::{WeylGroup, WeylSubgroup};

/// The span V_H of a closed symmetric root subset, with coordinates in its
/// simple system.
#[derive(Clone, Debug)]
pub struct SubsystemSpace {
    pub roots: Vec<usize>,
    pub simple: Vec<usize>,
    pub num_positive: usize,
    coords: HashMap<usize, Vec<i64>>,
}

impl SubsystemSpace {
    pub fn new(rs: &RootSystem, subset: &[usize]) -> Result<Self> {
        rs.check_closed(subset)?;
        let mut roots = subset.to_vec();
        roots.sort_unstable();
        let simple = rs.simple_system(&roots);
        let mut coords = HashMap::new();
        for comp in rs.components(&roots) {
            let comp_simple = rs.simple_system(&comp);
            for &r in comp.iter().filter(|&&r| rs.is_positive(r)) {
                let local = rs.coordinates_in(&comp, &comp_simple, r);
                let mut v = vec![0i64; simple.len()];
                for (k, &s) in comp_simple.iter().enumerate() {
                    v[simple.iter().position(|&x| x == s).unwrap()] = local[k];
                }
                coords.insert(rs.negate(r), v.iter().map(|x| -x).collect());
                coords.insert(r, v);
            }
        }
        let num_positive = roots.iter().filter(|&&r| rs.is_positive(r)).count();
        Ok(SubsystemSpace { roots, simple, num_positive, coords })
    }

    pub fn dim(&self) -> usize {
        self.simple.len()
    }

    pub fn contains(&self, root: usize) -> bool {
        self.roots.binary_search(&root).is_ok()
    }

    pub fn is_stabilized_by(&self, wg: &WeylGroup, w: usize) -> bool {
        self.roots.iter().all(|&r| self.contains(wg.act(w, r)))
    }

    /// Matrix of `w` on V_H in the simple-system basis.
    pub fn restrict(&self, wg: &WeylGroup, w: usize) -> IntMatrix {
        let cols: Vec<Vec<i64>> = self.simple.iter().map(|&s| self.coords[&wg.act(w, s)].clone()).collect();
        if cols.is_empty() {
            return IntMatrix::zeros(0, 0);
        }
        IntMatrix::from_columns(&cols)
    }
}

/// Σ_j tr(g, S̄^j) u^j for one element and subsystem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedTrace {
    pub poly: Poly,
    pub element: usize,
    pub subsystem: Vec<usize>,
}

/// Graded traces of every element of a coset n·W_H, grouped by the
/// characteristic polynomial of the element on V_H.
#[derive(Clone, Debug)]
pub struct CosetTraces {
    pub subgroup_order: usize,
    /// (graded trace, coset elements sharing it)
    pub groups: Vec<(Poly, Vec<usize>)>,
    trace_of: HashMap<usize, usize>,
}

impl CosetTraces {
    pub fn new(wg: &WeylGroup, n: usize, space: &SubsystemSpace, wh: &WeylSubgroup) -> Result<Self> {
        if !space.is_stabilized_by(wg, n) {
            return Err(Error::NotInStabilizer);
        }
        let expected = space.num_positive;
        let order = expected + guard_band(expected);
        let mut by_charpoly: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for &w in &wh.elements {
            let x = wg.mul(n, w);
            by_charpoly.entry(charpoly_i64(&space.restrict(wg, x))).or_default().push(x);
        }
        let reciprocals: Vec<TruncatedSeries> = by_charpoly
            .keys()
            .map(|cp| {
                let mut rev = cp.clone();
                rev.reverse();
                TruncatedSeries::reciprocal_of_poly(&Poly::from_ints(&rev), order)
            })
            .collect::<Result<_>>()?;
        let mut molien = TruncatedSeries::zero(order);
        for (r, members) in reciprocals.iter().zip(by_charpoly.values()) {
            molien.add_assign_scaled(r, &int(members.len() as i64));
        }
        let molien = molien.scale(&ExactRational::new(1.into(), (wh.order() as i64).into()));
        let mut groups = Vec::new();
        let mut trace_of = HashMap::new();
        for (r, (_, mut members)) in reciprocals.iter().zip(by_charpoly) {
            let t = series_divide_exact(r, &molien, expected)?;
            members.sort_unstable();
            for &x in &members {
                trace_of.insert(x, groups.len());
            }
            groups.push((t, members));
        }
        Ok(CosetTraces { subgroup_order: wh.order(), groups, trace_of })
    }

    pub fn trace_of(&self, x: usize) -> Option<&Poly> {
        self.trace_of.get(&x).map(|&i| &self.groups[i].0)
    }

    /// (1/|W_H|) Σ_{x ∈ n·W_H} tr(x, S̄) χ(x).
    pub fn tensor_trace(&self, chi: impl Fn(usize) -> i64) -> Poly {
        let mut acc = Poly::zero();
        for (t, members) in &self.groups {
            let s: i64 = members.iter().map(|&x| chi(x)).sum();
            if s != 0 {
                acc = &acc + &t.scale(&int(s));
            }
        }
        acc.scale(&ExactRational::new(1.into(), (self.subgroup_order as i64).into()))
    }
}

pub fn coinvariant_graded_trace(
    wg: &WeylGroup,
    g: usize,
    space: &SubsystemSpace,
    wh: &WeylSubgroup,
) -> Result<GradedTrace> {
    let traces = CosetTraces::new(wg, g, space, wh)?;
    let poly = traces.trace_of(g).expect("g lies in its own coset").clone();
    Ok(GradedTrace { poly, element: g, subsystem: space.roots.clone() })
}

pub fn tensor_invariant_graded_trace(
    wg: &WeylGroup,
    n: usize,
    space: &SubsystemSpace,
    wh: &WeylSubgroup,
    chi: impl Fn(usize) -> i64,
) -> Result<Poly> {
    Ok(CosetTraces::new(wg, n, space, wh)?.tensor_trace(chi))
}

/// Fake degrees (1/|W|) Σ_w χ(w) ∏(1 − u^{d_i}) / det(1 − u·w) of the
/// characters given by their values on each class representative.
pub fn fake_degrees(wg: &WeylGroup, classes: &[Vec<usize>], values: &[Vec<i64>]) -> Result<Vec<Poly>> {
    let rs = wg.root_system();
    let n = rs.num_positive();
    let order = n + guard_band(n);
    let reciprocals: Vec<TruncatedSeries> = classes
        .iter()
        .map(|members| TruncatedSeries::reciprocal_of_poly(&det_one_minus_u(&wg.matrix(members[0])), order))
        .collect::<Result<_>>()?;
    let invariants = rs.degrees().iter().fold(Poly::one(), |acc, &d| {
        let mut c = vec![0i64; d as usize + 1];
        c[0] = 1;
        c[d as usize] = -1;
        &acc * &Poly::from_ints(&c)
    });
    let inv_order = ExactRational::new(1.into(), (wg.order() as i64).into());
    values
        .iter()
        .map(|row| {
            let mut s = TruncatedSeries::zero(order);
            for (c, r) in reciprocals.iter().enumerate() {
                s.add_assign_scaled(r, &int(row[c] * classes[c].len() as i64));
            }
            let s = s.scale(&inv_order).mul(&TruncatedSeries::from_poly(&invariants, order));
            if s.coeffs()[n + 1..].iter().any(|c| !c.is_zero()) {
                return Err(Error::NonPolynomialQuotient { expected_degree: n, at: n + 1 });
            }
            Ok(Poly::from_coeffs(s.coeffs()[..=n].to_vec()))
        })
        .collect()
}
