//! Pseudo-Levi subsystems up to W-conjugacy, the sets Z_Y of conjugacy
//! classes of N_W(Σ_H)/W_H, and the involution z ↦ z! given by w0.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::reptheory::SubsystemSpace;
use crate::rootsystem::{CartanType, RootSystem, Series};
use crate::weyl::{CosetQuotient, WeylGroup, WeylSubgroup};

/// A closed symmetric root subset with its groups.
#[derive(Clone, Debug)]
pub struct Subsystem {
    pub roots: Vec<usize>,
    pub cartan_type: CartanType,
    pub space: SubsystemSpace,
    pub wh: WeylSubgroup,
    pub stabilizer: WeylSubgroup,
}

impl Subsystem {
    pub fn new(wg: &WeylGroup, roots: &[usize]) -> Result<Self> {
        let rs = wg.root_system();
        let space = SubsystemSpace::new(rs, roots)?;
        let wh = wg.reflection_subgroup(roots)?;
        let stabilizer = wg.setwise_stabilizer(&wg.full_group(), roots);
        let cartan_type = rs.subsystem_type(roots);
        Ok(Subsystem { roots: space.roots.clone(), cartan_type, space, wh, stabilizer })
    }

    pub fn simple(&self) -> &[usize] {
        &self.space.simple
    }

    pub fn num_positive(&self) -> usize {
        self.space.num_positive
    }

    /// The same data for the conjugate w·Σ_H.
    pub fn conjugate(&self, wg: &WeylGroup, w: usize) -> Result<Self> {
        Subsystem::new(wg, &wg.image(w, &self.roots))
    }
}

/// A W-orbit Y of pseudo-Levi subsystems.
#[derive(Clone, Debug)]
pub struct YOrbit {
    pub index: usize,
    pub name: String,
    /// W-least image of the subset; also the representative's root set.
    pub representative: Subsystem,
    pub orbit_size: usize,
}

/// Type label with root lengths marked on simply-laced components when the
/// ambient system has two root lengths.
fn orbit_label(rs: &RootSystem, roots: &[usize]) -> String {
    if roots.is_empty() {
        return "∅".into();
    }
    let two_lengths = {
        let lens: BTreeSet<i64> = (0..rs.num_roots()).map(|i| rs.root_length2(i)).collect();
        lens.len() > 1
    };
    let max_len = (0..rs.num_roots()).map(|i| rs.root_length2(i)).max().unwrap();
    let mut parts: Vec<String> = rs
        .components(roots)
        .iter()
        .map(|comp| {
            let t = rs.subsystem_type(comp);
            let (series, _) = t.components()[0];
            let mut s = t.to_string();
            if two_lengths && matches!(series, Series::A | Series::D) {
                s.push_str(if rs.root_length2(comp[0]) == max_len { "(long)" } else { "(short)" });
            }
            s
        })
        .collect();
    parts.sort();
    parts.join("×")
}

/// Iterated Borel–de Siebenthal closure: starting from the whole system,
/// replace one irreducible component by the subsystem generated by a proper
/// subset of its extended diagram nodes, until nothing new appears.
pub fn enumerate_pseudo_levis(wg: &WeylGroup) -> Result<Vec<YOrbit>> {
    let rs = wg.root_system();
    let mut seen: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
    let start = wg.canonical_subset(&rs.all_roots()).0;
    seen.insert(start.clone(), ());
    let mut queue = vec![start];
    while let Some(current) = queue.pop() {
        for diagram in rs.extended_diagrams(&current) {
            let rest: Vec<usize> = current.iter().copied().filter(|r| !diagram.component.contains(r)).collect();
            let k = diagram.nodes.len();
            for mask in 0..(1u32 << k) - 1 {
                let kept: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| diagram.nodes[i]).collect();
                let mut next = rest.clone();
                next.extend(rs.reflection_closure(&kept));
                next.sort_unstable();
                next.dedup();
                let canon = wg.canonical_subset(&next).0;
                if seen.insert(canon.clone(), ()).is_none() {
                    queue.push(canon);
                }
            }
        }
    }
    let order = wg.order();
    let mut orbits: Vec<(Vec<usize>, Subsystem, String)> = seen
        .into_keys()
        .map(|roots| {
            let sub = Subsystem::new(wg, &roots)?;
            let label = orbit_label(rs, &roots);
            Ok((roots, sub, label))
        })
        .collect::<Result<_>>()?;
    orbits.sort_by(|a, b| {
        b.1.num_positive()
            .cmp(&a.1.num_positive())
            .then_with(|| b.1.space.dim().cmp(&a.1.space.dim()))
            .then_with(|| a.2.cmp(&b.2))
            .then_with(|| a.0.cmp(&b.0))
    });
    let mut count: BTreeMap<String, usize> = BTreeMap::new();
    for (_, _, label) in &orbits {
        *count.entry(label.clone()).or_default() += 1;
    }
    let mut used: BTreeMap<String, usize> = BTreeMap::new();
    Ok(orbits
        .into_iter()
        .enumerate()
        .map(|(index, (_, sub, label))| {
            let name = if count[&label] > 1 {
                let k = used.entry(label.clone()).or_default();
                *k += 1;
                format!("{label}#{k}")
            } else {
                label
            };
            let orbit_size = order / sub.stabilizer.order();
            YOrbit { index, name, representative: sub, orbit_size }
        })
        .collect())
}

/// One conjugacy class of N_W(Σ_H)/W_H.
#[derive(Clone, Debug, Serialize)]
pub struct ZClass {
    pub index: usize,
    /// Coset indices of the quotient making up the class.
    pub cosets: Vec<usize>,
    /// Least coset of the class, and its least element.
    pub representative_coset: usize,
    pub representative: usize,
    pub bang: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct ZSet {
    pub quotient: CosetQuotient,
    pub classes: Vec<ZClass>,
}

impl ZSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn z_classes(wg: &WeylGroup, sub: &Subsystem) -> Result<ZSet> {
    let quotient = wg.quotient(&sub.stabilizer, &sub.wh)?;
    let classes = quotient
        .classes
        .members
        .iter()
        .enumerate()
        .map(|(index, cosets)| {
            let representative_coset = cosets[0];
            ZClass {
                index,
                cosets: cosets.clone(),
                representative_coset,
                representative: quotient.representative(representative_coset),
                bang: None,
            }
        })
        .collect();
    Ok(ZSet { quotient, classes })
}

/// z! = class of w0·z, defined when w0 acts as −1.
pub fn bang_involution(wg: &WeylGroup, mut zset: ZSet) -> Result<ZSet> {
    let (w0, minus_one) = wg.longest_element();
    if !minus_one {
        return Err(Error::W0NotCentral(wg.root_system().cartan_type().to_string()));
    }
    for z in 0..zset.classes.len() {
        let mut images = BTreeSet::new();
        for &c in &zset.classes[z].cosets {
            for &x in &zset.quotient.cosets[c] {
                let y = wg.mul(w0.id, x);
                let class = zset.quotient.class_of_element(y).ok_or(Error::NotInStabilizer)?;
                images.insert(class);
            }
        }
        if images.len() != 1 {
            return Err(Error::NotNormal);
        }
        zset.classes[z].bang = images.into_iter().next();
    }
    Ok(zset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::build_root_system;
    use std::sync::Arc;

    fn weyl(t: &str) -> WeylGroup {
        WeylGroup::new(Arc::new(build_root_system(&t.parse().unwrap()).unwrap()))
    }

    fn names(w: &WeylGroup) -> Vec<String> {
        enumerate_pseudo_levis(w).unwrap().into_iter().map(|y| y.name).collect()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(names(&weyl("A1")), vec!["A1", "∅"]);
        let b2 = names(&weyl("B2"));
        assert_eq!(b2.len(), 5);
        for n in ["B2", "A1(long)×A1(long)", "A1(long)", "A1(short)", "∅"] {
            assert!(b2.contains(&n.to_string()), "{n} missing from {b2:?}");
        }
        let g2 = names(&weyl("G2"));
        assert_eq!(g2.len(), 6);
        for n in ["G2", "A2(long)", "A1(long)×A1(short)", "A1(long)", "A1(short)", "∅"] {
            assert!(g2.contains(&n.to_string()), "{n} missing from {g2:?}");
        }
    }

    #[test]
    fn orbit_sizes_multiply_out() {
        for t in ["B3", "G2", "D4"] {
            let w = weyl(t);
            for y in enumerate_pseudo_levis(&w).unwrap() {
                assert_eq!(y.orbit_size * y.representative.stabilizer.order(), w.order());
                let mut orbit = BTreeSet::new();
                for x in 0..w.order() {
                    orbit.insert(w.image(x, &y.representative.roots));
                }
                assert_eq!(orbit.len(), y.orbit_size);
            }
        }
    }

    #[test]
    fn g2_long_a2_classes_swap() {
        let w = weyl("G2");
        let orbits = enumerate_pseudo_levis(&w).unwrap();
        let a2 = orbits.iter().find(|y| y.name == "A2(long)").unwrap();
        let z = bang_involution(&w, z_classes(&w, &a2.representative).unwrap()).unwrap();
        assert_eq!(z.len(), 2);
        assert_eq!(z.classes[0].bang, Some(1));
        assert_eq!(z.classes[1].bang, Some(0));
    }

    #[test]
    fn b2_examples() {
        let w = weyl("B2");
        let orbits = enumerate_pseudo_levis(&w).unwrap();
        let full = &orbits[0];
        let z = bang_involution(&w, z_classes(&w, &full.representative).unwrap()).unwrap();
        assert_eq!(z.len(), 1);
        assert_eq!(z.classes[0].bang, Some(0));
        let a1a1 = orbits.iter().find(|y| y.name == "A1(long)×A1(long)").unwrap();
        let z = bang_involution(&w, z_classes(&w, &a1a1.representative).unwrap()).unwrap();
        assert_eq!(z.len(), 2);
        assert!(z.classes.iter().all(|c| c.bang == Some(c.index)));
        let empty = orbits.last().unwrap();
        assert_eq!(empty.name, "∅");
        assert_eq!(z_classes(&w, &empty.representative).unwrap().len(), 5);
    }

    #[test]
    fn a2_has_no_bang() {
        let w = weyl("A2");
        let y = &enumerate_pseudo_levis(&w).unwrap()[0];
        let z = z_classes(&w, &y.representative).unwrap();
        assert!(matches!(bang_involution(&w, z), Err(Error::W0NotCentral(_))));
    }

    #[test]
    fn stabilizer_normalizes_reflection_subgroup() {
        let w = weyl("F4");
        for y in enumerate_pseudo_levis(&w).unwrap() {
            let s = &y.representative;
            for &n in s.stabilizer.elements.iter().step_by(7) {
                for &g in s.simple() {
                    assert!(s.wh.contains(w.table().conj(n, w.reflection(g))));
                }
            }
        }
    }
}
