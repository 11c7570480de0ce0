//! Finite groups given by an explicit multiplication table.
//!
//! Every group the library handles (Weyl groups, reflection subgroups,
//! normalizer quotients, the small groups Γ attached to families) is small
//! enough to enumerate, so conjugacy classes and power maps are computed by
//! direct scans over the table.

use std::collections::HashMap;
use std::hash::Hash;

/// Cayley table of a finite group. Element 0 is the identity.
#[derive(Clone, Debug)]
pub struct GroupTable {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

/// Conjugacy classes of a [`GroupTable`], ordered by smallest member.
#[derive(Clone, Debug)]
pub struct Classes {
    /// Members of each class, ascending.
    pub members: Vec<Vec<usize>>,
    /// Class index of every element.
    pub class_of: Vec<usize>,
}

impl Classes {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn size(&self, c: usize) -> usize {
        self.members[c].len()
    }

    pub fn representative(&self, c: usize) -> usize {
        self.members[c][0]
    }
}

impl GroupTable {
    /// Build from a closed list of elements and a product function. The
    /// identity must be `elements[0]`.
    pub fn from_elements<T, F>(elements: &[T], mut product: F) -> Self
    where
        T: Eq + Hash + Clone,
        F: FnMut(&T, &T) -> T,
    {
        let n = elements.len();
        let index: HashMap<&T, u32> = elements.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
        let mut mul = vec![0u32; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let c = product(a, b);
                mul[i * n + j] = *index.get(&c).expect("element list is not closed under product");
            }
        }
        GroupTable::from_mul(n, mul)
    }

    /// Build from a raw table; row `i`, column `j` holds `i * j`.
    pub fn from_mul(n: usize, mul: Vec<u32>) -> Self {
        assert_eq!(mul.len(), n * n);
        assert!((0..n).all(|i| mul[i] as usize == i && mul[i * n] as usize == i), "element 0 must be the identity");
        let mut inv = vec![u32::MAX; n];
        for i in 0..n {
            let j = (0..n).find(|&j| mul[i * n + j] == 0).expect("missing inverse");
            inv[i] = j as u32;
        }
        GroupTable { n, mul, inv }
    }

    /// Group generated by permutations of `0..degree` (images listed).
    /// Elements are sorted lexicographically, so the identity comes first.
    pub fn from_permutation_generators(generators: &[Vec<usize>], degree: usize) -> (Self, Vec<Vec<usize>>) {
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::from([(identity, ())]);
        let mut frontier = 0;
        while frontier < elements.len() {
            let x = elements[frontier].clone();
            frontier += 1;
            for g in generators {
                let y: Vec<usize> = (0..degree).map(|i| g[x[i]]).collect();
                if seen.insert(y.clone(), ()).is_none() {
                    elements.push(y);
                }
            }
        }
        elements.sort();
        // (a*b)(i) = a(b(i))
        let table = GroupTable::from_elements(&elements, |a, b| (0..degree).map(|i| a[b[i]]).collect());
        (table, elements)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// g·x·g⁻¹.
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        (0..self.n).fold(1, |acc, a| num_integer::lcm(acc, self.element_order(a)))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn classes(&self) -> Classes {
        let mut class_of = vec![usize::MAX; self.n];
        let mut members = Vec::new();
        for x in 0..self.n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = members.len();
            let mut cls = Vec::new();
            for g in 0..self.n {
                let y = self.conj(g, x);
                if class_of[y] == usize::MAX {
                    class_of[y] = c;
                    cls.push(y);
                }
            }
            cls.sort_unstable();
            members.push(cls);
        }
        Classes { members, class_of }
    }

    /// Elements commuting with `x`, ascending.
    pub fn centralizer(&self, x: usize) -> Vec<usize> {
        (0..self.n).filter(|&g| self.commute(g, x)).collect()
    }

    /// Table of the subgroup on `elements` (which must contain the identity
    /// first and be closed), re-indexed in the given order.
    pub fn subgroup_table(&self, elements: &[usize]) -> GroupTable {
        assert_eq!(elements.first(), Some(&0));
        let pos: HashMap<usize, u32> = elements.iter().enumerate().map(|(i, &e)| (e, i as u32)).collect();
        let m = elements.len();
        let mut mul = vec![0u32; m * m];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                mul[i * m + j] = *pos.get(&self.mul(a, b)).expect("subset is not a subgroup");
            }
        }
        GroupTable::from_mul(m, mul)
    }
}
