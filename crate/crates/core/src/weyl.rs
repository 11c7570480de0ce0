//! Weyl groups as permutation groups on the indexed root list.
//!
//! The full group is enumerated once. Elements are identified by their index
//! in the lexicographic order of root-permutation images, so element 0 is the
//! identity and "least element" of any subset is its canonical representative.
//! Subgroups and quotients are lists of these indices.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::IntMatrix;
use crate::error::{Error, Result};
use crate::group::{Classes, GroupTable};
use crate::rootsystem::RootSystem;

/// A Weyl group element with its permutation, matrix and length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub id: usize,
    /// `perm[i]` is the index of the image of root `i`.
    pub perm: Vec<usize>,
    /// Columns are the images of the simple roots in simple-root coordinates.
    pub matrix: IntMatrix,
    pub length: usize,
}

/// The full Weyl group of a root system with its multiplication table.
#[derive(Debug)]
pub struct WeylGroup {
    rs: Arc<RootSystem>,
    perms: Vec<Vec<u8>>,
    lengths: Vec<usize>,
    table: GroupTable,
    key_index: HashMap<u64, usize>,
    simple_ids: Vec<usize>,
}

/// A subgroup of W, as the ascending list of its element ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeylSubgroup {
    /// Root subset whose reflections generate the subgroup (empty when the
    /// subgroup was not built from reflections).
    pub generators: Vec<usize>,
    pub elements: Vec<usize>,
}

impl WeylSubgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, w: usize) -> bool {
        self.elements.binary_search(&w).is_ok()
    }
}

impl WeylGroup {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        assert!(rs.num_roots() <= 256 && rs.rank() <= 8, "root system too large for packed keys");
        let degree = rs.num_roots();
        let gens: Vec<Vec<usize>> = rs.simple_roots().map(|s| rs.reflection_permutation(s)).collect();
        let identity: Vec<u8> = (0..degree as u8).collect();
        let mut perms = vec![identity.clone()];
        let mut seen: std::collections::HashSet<Vec<u8>> = [identity].into_iter().collect();
        let mut frontier = 0;
        while frontier < perms.len() {
            let x = perms[frontier].clone();
            frontier += 1;
            for g in &gens {
                let y: Vec<u8> = x.iter().map(|&i| g[i as usize] as u8).collect();
                if seen.insert(y.clone()) {
                    perms.push(y);
                }
            }
        }
        perms.sort();
        let rank = rs.rank();
        let key = |p: &[u8]| -> u64 { (0..rank).fold(0u64, |k, s| (k << 8) | p[s] as u64) };
        let key_index: HashMap<u64, usize> = perms.iter().enumerate().map(|(i, p)| (key(p), i)).collect();
        let n = perms.len();
        let mut mul = vec![0u32; n * n];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                let k = (0..rank).fold(0u64, |k, s| (k << 8) | pa[pb[s] as usize] as u64);
                mul[a * n + b] = key_index[&k] as u32;
            }
        }
        let npos = rs.num_positive();
        let lengths = perms.iter().map(|p| p[..npos].iter().filter(|&&i| (i as usize) >= npos).count()).collect();
        let mut wg =
            WeylGroup { table: GroupTable::from_mul(n, mul), rs, perms, lengths, key_index, simple_ids: Vec::new() };
        wg.simple_ids = wg.rs.simple_roots().map(|s| wg.reflection(s)).collect();
        wg
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.mul(a, b)
    }

    pub fn inv(&self, a: usize) -> usize {
        self.table.inv(a)
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w]
    }

    /// Image of root `i` under `w`.
    pub fn act(&self, w: usize, i: usize) -> usize {
        self.perms[w][i] as usize
    }

    pub fn perm(&self, w: usize) -> Vec<usize> {
        self.perms[w].iter().map(|&i| i as usize).collect()
    }

    pub fn matrix(&self, w: usize) -> IntMatrix {
        let cols: Vec<Vec<i64>> = self.rs.simple_roots().map(|s| self.rs.root(self.act(w, s)).to_vec()).collect();
        IntMatrix::from_columns(&cols)
    }

    pub fn element(&self, w: usize) -> WeylElement {
        WeylElement { id: w, perm: self.perm(w), matrix: self.matrix(w), length: self.length(w) }
    }

    /// Element id from a full root permutation.
    pub fn id_of_perm(&self, perm: &[usize]) -> Option<usize> {
        let k = self.rs.simple_roots().fold(0u64, |k, s| (k << 8) | perm[s] as u64);
        self.key_index.get(&k).copied().filter(|&w| self.perm(w) == perm)
    }

    /// Product s_{i1}·s_{i2}·… of simple reflections (0-based indices).
    pub fn from_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &s| self.mul(acc, self.simple_reflection(s)))
    }

    pub fn simple_reflection(&self, s: usize) -> usize {
        self.simple_ids[s]
    }

    /// A reduced word, peeling off the smallest right descent each step.
    pub fn reduced_word(&self, w: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut x = w;
        while x != 0 {
            let s = self.rs.simple_roots().find(|&s| !self.rs.is_positive(self.act(x, s))).unwrap();
            word.push(s);
            x = self.mul(x, self.simple_reflection(s));
        }
        word.reverse();
        word
    }

    /// Parse a word written as 1-based digits, e.g. "12" for s1·s2.
    pub fn parse_word(&self, text: &str) -> Option<usize> {
        let word: Option<Vec<usize>> = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| c.to_digit(10).map(|d| d as usize).filter(|&d| d >= 1 && d <= self.rs.rank()).map(|d| d - 1))
            .collect();
        word.map(|w| self.from_word(&w))
    }

    pub fn format_word(&self, w: usize) -> String {
        self.reduced_word(w).iter().map(|s| (s + 1).to_string()).collect()
    }

    /// The reflection in root `alpha`.
    pub fn reflection(&self, alpha: usize) -> usize {
        self.id_of_perm(&self.rs.reflection_permutation(alpha)).expect("reflections lie in W")
    }

    pub fn full_group(&self) -> WeylSubgroup {
        WeylSubgroup { generators: self.rs.simple_roots().collect(), elements: (0..self.order()).collect() }
    }

    /// The unique element of maximal length, and whether it acts as −1.
    pub fn longest_element(&self) -> (WeylElement, bool) {
        let w0 = (0..self.order()).max_by_key(|&w| self.lengths[w]).unwrap();
        let e = self.element(w0);
        let minus_one = e.matrix.is_neg_identity();
        (e, minus_one)
    }

    /// Subgroup generated by a list of element ids.
    pub fn generate(&self, gens: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::from([0]);
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    stack.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    /// W_H generated by the reflections in a closed symmetric root subset.
    pub fn reflection_subgroup(&self, subset: &[usize]) -> Result<WeylSubgroup> {
        self.rs.check_closed(subset)?;
        let simple = self.rs.simple_system(subset);
        let gens: Vec<usize> = simple.iter().map(|&a| self.reflection(a)).collect();
        let mut generators = subset.to_vec();
        generators.sort_unstable();
        Ok(WeylSubgroup { generators, elements: self.generate(&gens) })
    }

    pub fn stabilizes(&self, w: usize, subset: &BTreeSet<usize>) -> bool {
        subset.iter().all(|&i| subset.contains(&self.act(w, i)))
    }

    /// Elements of `group` mapping the root subset onto itself.
    pub fn setwise_stabilizer(&self, group: &WeylSubgroup, subset: &[usize]) -> WeylSubgroup {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        let elements = group.elements.iter().copied().filter(|&w| self.stabilizes(w, &set)).collect();
        WeylSubgroup { generators: Vec::new(), elements }
    }

    /// Image of a root subset, sorted.
    pub fn image(&self, w: usize, subset: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = subset.iter().map(|&i| self.act(w, i)).collect();
        v.sort_unstable();
        v
    }

    /// Least image of a root subset under W, with an element achieving it.
    pub fn canonical_subset(&self, subset: &[usize]) -> (Vec<usize>, usize) {
        let mut best = (self.image(0, subset), 0);
        for w in 1..self.order() {
            let img = self.image(w, subset);
            if img < best.0 {
                best = (img, w);
            }
        }
        best
    }

    /// N/K with canonical coset representatives and conjugacy classes.
    pub fn quotient(&self, n: &WeylSubgroup, k: &WeylSubgroup) -> Result<CosetQuotient> {
        for &x in &n.elements {
            for &y in &k.elements {
                if !k.contains(self.table.conj(x, y)) {
                    return Err(Error::NotNormal);
                }
            }
            if !k.elements.iter().all(|&y| n.contains(y)) {
                return Err(Error::NotNormal);
            }
        }
        let mut coset_of: HashMap<usize, usize> = HashMap::new();
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for &x in &n.elements {
            if coset_of.contains_key(&x) {
                continue;
            }
            let mut c: Vec<usize> = k.elements.iter().map(|&y| self.mul(x, y)).collect();
            c.sort_unstable();
            for &y in &c {
                coset_of.insert(y, cosets.len());
            }
            cosets.push(c);
        }
        let m = cosets.len();
        let mut mul = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                mul[i * m + j] = coset_of[&self.mul(cosets[i][0], cosets[j][0])] as u32;
            }
        }
        let table = GroupTable::from_mul(m, mul);
        let classes = table.classes();
        Ok(CosetQuotient { cosets, coset_of, table, classes })
    }
}

/// A quotient group N/K of subgroups of W.
#[derive(Clone, Debug)]
pub struct CosetQuotient {
    /// Cosets in order of their least element; `cosets[i][0]` is the
    /// canonical representative and coset 0 is K itself.
    pub cosets: Vec<Vec<usize>>,
    coset_of: HashMap<usize, usize>,
    pub table: GroupTable,
    pub classes: Classes,
}

impl CosetQuotient {
    pub fn order(&self) -> usize {
        self.cosets.len()
    }

    pub fn coset_of(&self, w: usize) -> Option<usize> {
        self.coset_of.get(&w).copied()
    }

    pub fn representative(&self, coset: usize) -> usize {
        self.cosets[coset][0]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Class of the coset containing `w`.
    pub fn class_of_element(&self, w: usize) -> Option<usize> {
        self.coset_of(w).map(|c| self.classes.class_of[c])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::build_root_system;

    fn weyl(t: &str) -> WeylGroup {
        WeylGroup::new(Arc::new(build_root_system(&t.parse().unwrap()).unwrap()))
    }

    #[test]
    fn reduced_words_round_trip() {
        let w = weyl("F4");
        for x in (0..w.order()).step_by(11) {
            let word = w.reduced_word(x);
            assert_eq!(word.len(), w.length(x));
            assert_eq!(w.from_word(&word), x);
            assert_eq!(w.parse_word(&w.format_word(x)), Some(x));
        }
    }

    #[test]
    fn orders() {
        assert_eq!(weyl("A1").order(), 2);
        assert_eq!(weyl("B2").order(), 8);
        assert_eq!(weyl("G2").order(), 12);
        assert_eq!(weyl("D4").order(), 192);
        let f4 = weyl("F4");
        assert_eq!(f4.order(), 1152);
        assert_eq!(f4.order() as u32, f4.root_system().degrees().iter().product());
    }

    #[test]
    fn longest_elements() {
        for (t, minus) in [("A1", true), ("G2", true), ("A2", false), ("B3", true), ("D4", true), ("A3", false)] {
            let w = weyl(t);
            let (w0, m) = w.longest_element();
            assert_eq!(m, minus, "{t}");
            assert_eq!(w0.length, w.root_system().num_positive());
        }
    }

    #[test]
    fn length_identities() {
        let w = weyl("B3");
        let (w0, _) = w.longest_element();
        let n = w.root_system().num_positive();
        for x in 0..w.order() {
            assert_eq!(w.length(x), w.length(w.inv(x)));
            assert_eq!(w.length(w.mul(w0.id, x)), n - w.length(x));
        }
    }

    #[test]
    fn identity_is_first() {
        let w = weyl("C3");
        assert_eq!(w.perm(0), (0..w.root_system().num_roots()).collect::<Vec<_>>());
        assert_eq!(w.length(0), 0);
    }

    #[test]
    fn matrix_agrees_with_permutation() {
        let w = weyl("F4");
        let rs = w.root_system().clone();
        for x in (0..w.order()).step_by(37) {
            let m = w.matrix(x);
            for i in 0..rs.num_roots() {
                assert_eq!(m.apply(rs.root(i)), rs.root(w.act(x, i)));
            }
        }
    }

    fn long_roots(w: &WeylGroup) -> Vec<usize> {
        let rs = w.root_system();
        let max = (0..rs.num_roots()).map(|i| rs.root_length2(i)).max().unwrap();
        (0..rs.num_roots()).filter(|&i| rs.root_length2(i) == max).collect()
    }

    #[test]
    fn g2_long_a2() {
        let w = weyl("G2");
        let long = long_roots(&w);
        let wh = w.reflection_subgroup(&long).unwrap();
        assert_eq!(wh.order(), 6);
        let nh = w.setwise_stabilizer(&w.full_group(), &long);
        assert_eq!(nh.order(), 12);
        let q = w.quotient(&nh, &wh).unwrap();
        assert_eq!((q.order(), q.num_classes()), (2, 2));
    }

    #[test]
    fn b2_long_a1xa1() {
        let w = weyl("B2");
        let long = long_roots(&w);
        assert_eq!(long.len(), 4);
        assert_eq!(w.reflection_subgroup(&long).unwrap().order(), 4);
        assert_eq!(w.setwise_stabilizer(&w.full_group(), &long).order(), 8);
        let trivial = w.reflection_subgroup(&[]).unwrap();
        assert_eq!(trivial.order(), 1);
        let q = w.quotient(&w.full_group(), &trivial).unwrap();
        assert_eq!((q.order(), q.num_classes()), (8, 5));
        let full = w.full_group();
        assert_eq!(w.quotient(&full, &full).unwrap().num_classes(), 1);
    }

    #[test]
    fn non_normal_rejected() {
        let w = weyl("B2");
        let s = w.reflection_subgroup(&[0, w.root_system().negate(0)]).unwrap();
        assert_eq!(w.quotient(&w.full_group(), &s).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn class_sizes_divide_order() {
        let w = weyl("F4");
        let cl = w.table().classes();
        assert_eq!(cl.len(), 25);
        assert_eq!(cl.members.iter().map(Vec::len).sum::<usize>(), 1152);
        assert!(cl.members.iter().all(|c| 1152 % c.len() == 0));
    }
}
