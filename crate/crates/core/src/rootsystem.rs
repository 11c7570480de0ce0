//! Root systems built from Cartan data.
//!
//! Roots are integer vectors in the basis of simple roots, paired by an exact
//! integral symmetric form. Positive roots occupy indices `0..N` (simple roots
//! first, then by height), negative roots `N..2N` with `roots[i + N] = -roots[i]`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::Poly;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    F,
    G,
}

/// Cartan type as a multiset of simple factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CartanType {
    components: Vec<(Series, usize)>,
}

impl CartanType {
    pub fn simple(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !ok {
            return Err(Error::UnsupportedType(format!("{series:?}{rank}")));
        }
        Ok(CartanType { components: vec![(series, rank)] })
    }

    pub fn product(parts: impl IntoIterator<Item = CartanType>) -> Self {
        let mut components: Vec<(Series, usize)> = parts.into_iter().flat_map(|t| t.components).collect();
        components.sort();
        CartanType { components }
    }

    pub fn trivial() -> Self {
        CartanType { components: Vec::new() }
    }

    pub fn components(&self) -> &[(Series, usize)] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.1).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.components.iter().map(|(s, r)| format!("{s:?}{r}")).collect();
        write!(f, "{}", parts.join("×"))
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Accepts "B3", "g2", and products such as "A1xA1".
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedType(s.to_string());
        let mut parts = Vec::new();
        for piece in s.split(['x', 'X', '×']) {
            let piece = piece.trim();
            let mut chars = piece.chars();
            let letter = chars.next().ok_or_else(bad)?;
            let series = match letter.to_ascii_uppercase() {
                'A' => Series::A,
                'B' => Series::B,
                'C' => Series::C,
                'D' => Series::D,
                'F' => Series::F,
                'G' => Series::G,
                _ => return Err(bad()),
            };
            let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
            parts.push(CartanType::simple(series, rank)?);
        }
        Ok(CartanType::product(parts))
    }
}

/// Gram matrix of the simple roots of one simple factor, scaled to be integral.
/// Bourbaki numbering, except G2 where α1 is long and α2 short.
fn simple_gram(series: Series, n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    let chain = |g: &mut Vec<Vec<i64>>, len: i64, upto: usize| {
        for i in 0..upto {
            g[i][i] = len;
            if i + 1 < upto {
                g[i][i + 1] = -len / 2;
                g[i + 1][i] = -len / 2;
            }
        }
    };
    match series {
        Series::A => chain(&mut g, 2, n),
        Series::B => {
            // e_i - e_{i+1} (length² 2), e_n (length² 1)
            chain(&mut g, 2, n - 1);
            g[n - 1][n - 1] = 1;
            g[n - 2][n - 1] = -1;
            g[n - 1][n - 2] = -1;
        }
        Series::C => {
            // e_i - e_{i+1} (length² 2), 2e_n (length² 4)
            chain(&mut g, 2, n - 1);
            g[n - 1][n - 1] = 4;
            g[n - 2][n - 1] = -2;
            g[n - 1][n - 2] = -2;
        }
        Series::D => {
            chain(&mut g, 2, n - 1);
            g[n - 1][n - 1] = 2;
            g[n - 2][n - 1] = 0;
            g[n - 1][n - 2] = 0;
            g[n - 3][n - 1] = -1;
            g[n - 1][n - 3] = -1;
        }
        Series::F => {
            g = vec![vec![4, -2, 0, 0], vec![-2, 4, -2, 0], vec![0, -2, 2, -1], vec![0, 0, -1, 2]];
        }
        Series::G => {
            g = vec![vec![6, -3], vec![-3, 2]];
        }
    }
    g
}

/// A (possibly reducible) crystallographic root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    gram: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    degrees: Vec<u32>,
}

/// Root indices, kept sorted.
pub type RootSubset = Vec<usize>;

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    pub fn negate(&self, i: usize) -> usize {
        let n = self.num_positive();
        if i < n {
            i + n
        } else {
            i - n
        }
    }

    pub fn simple_roots(&self) -> std::ops::Range<usize> {
        0..self.rank
    }

    pub fn all_roots(&self) -> RootSubset {
        (0..self.roots.len()).collect()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Symmetric form on simple-root coordinates.
    pub fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    /// Cartan integer ⟨β, α^∨⟩ = 2(β, α)/(α, α).
    pub fn cartan_integer(&self, beta: &[i64], alpha: usize) -> i64 {
        let a = &self.roots[alpha];
        let num = 2 * self.form(beta, a);
        let den = self.form(a, a);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// s_α(v) for a root index α.
    pub fn reflect(&self, alpha: usize, v: &[i64]) -> Vec<i64> {
        let c = self.cartan_integer(v, alpha);
        v.iter().zip(&self.roots[alpha]).map(|(x, a)| x - c * a).collect()
    }

    /// Permutation of root indices induced by s_α.
    pub fn reflection_permutation(&self, alpha: usize) -> Vec<usize> {
        self.roots.iter().map(|r| self.index[&self.reflect(alpha, r)]).collect()
    }

    pub fn height(&self, i: usize) -> i64 {
        self.roots[i].iter().sum()
    }

    pub fn root_length2(&self, i: usize) -> i64 {
        self.form(&self.roots[i], &self.roots[i])
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Σ_{w∈W} u^{ℓ(w)} from root heights: ∏_{α>0} [ht(α)+1]/[ht(α)].
    pub fn poincare_polynomial(&self) -> Poly {
        let q_int = |k: i64| Poly::from_ints(&vec![1; k as usize]);
        let mut numer = Poly::one();
        let mut denom = Poly::one();
        for i in 0..self.num_positive() {
            let h = self.height(i);
            numer = &numer * &q_int(h + 1);
            denom = &denom * &q_int(h);
        }
        numer.div_exact(&denom).expect("height product is a polynomial")
    }

    /// Is the subset closed under negation and under root addition?
    pub fn check_closed(&self, subset: &[usize]) -> Result<()> {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        for &a in &set {
            if !set.contains(&self.negate(a)) {
                return Err(Error::NotClosed(format!("missing negative of root {a}")));
            }
            for &b in &set {
                let sum: Vec<i64> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
                if let Some(&c) = self.index.get(&sum) {
                    if !set.contains(&c) {
                        return Err(Error::NotClosed(format!("roots {a} + {b} = {c} missing")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Smallest set of roots containing `generators` and stable under their
    /// reflections.
    pub fn reflection_closure(&self, generators: &[usize]) -> RootSubset {
        let mut set: BTreeSet<usize> = generators.iter().copied().collect();
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(x) = stack.pop() {
            for &g in generators {
                let y = self.index[&self.reflect(g, &self.roots[x])];
                if set.insert(y) {
                    stack.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    /// Simple system of a closed symmetric subset: its positive roots that
    /// are not sums of two positive roots of the subset.
    pub fn simple_system(&self, subset: &[usize]) -> Vec<usize> {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        let pos: Vec<usize> = set.iter().copied().filter(|&i| self.is_positive(i)).collect();
        pos.iter()
            .copied()
            .filter(|&g| {
                !pos.iter().any(|&a| {
                    let diff: Vec<i64> = self.roots[g].iter().zip(&self.roots[a]).map(|(x, y)| x - y).collect();
                    self.index.get(&diff).is_some_and(|d| set.contains(d) && self.is_positive(*d))
                })
            })
            .collect()
    }

    /// Irreducible components of a closed symmetric subset, each as a sorted
    /// root subset, ordered by smallest simple root.
    pub fn components(&self, subset: &[usize]) -> Vec<RootSubset> {
        let simple = self.simple_system(subset);
        let mut comp_of: Vec<usize> = (0..simple.len()).collect();
        fn find(c: &mut Vec<usize>, i: usize) -> usize {
            if c[i] != i {
                let r = find(c, c[i]);
                c[i] = r;
            }
            c[i]
        }
        for i in 0..simple.len() {
            for j in 0..i {
                if self.form(&self.roots[simple[i]], &self.roots[simple[j]]) != 0 {
                    let (a, b) = (find(&mut comp_of, i), find(&mut comp_of, j));
                    comp_of[a] = b;
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for i in 0..simple.len() {
            let r = find(&mut comp_of, i);
            groups.entry(r).or_default().push(simple[i]);
        }
        let mut out: Vec<RootSubset> = groups.into_values().map(|gens| self.reflection_closure(&gens)).collect();
        out.sort();
        out
    }

    /// Cartan type of a closed symmetric subset, read off from the Gram
    /// matrix of its simple system.
    pub fn subsystem_type(&self, subset: &[usize]) -> CartanType {
        let parts = self.components(subset).into_iter().map(|comp| {
            let simple = self.simple_system(&comp);
            classify_component(self, &simple)
        });
        CartanType::product(parts)
    }

    /// Highest root of an irreducible closed subset: the unique positive root
    /// of the subset that stays maximal in its root poset.
    pub fn highest_root(&self, component: &[usize]) -> usize {
        let set: BTreeSet<usize> = component.iter().copied().collect();
        let simple = self.simple_system(component);
        let maximal: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&b| self.is_positive(b))
            .filter(|&b| {
                simple.iter().all(|&s| {
                    let sum: Vec<i64> = self.roots[b].iter().zip(&self.roots[s]).map(|(x, y)| x + y).collect();
                    !self.index.get(&sum).is_some_and(|c| set.contains(c))
                })
            })
            .collect();
        assert_eq!(maximal.len(), 1, "irreducible component must have a unique highest root");
        maximal[0]
    }

    /// Coordinates of a positive root of `component` in its simple system,
    /// found by descending through the root poset.
    pub fn coordinates_in(&self, component: &[usize], simple: &[usize], root: usize) -> Vec<i64> {
        let set: BTreeSet<usize> = component.iter().copied().collect();
        let mut coords = vec![0i64; simple.len()];
        let mut cur = self.roots[root].clone();
        loop {
            if let Some(k) = simple.iter().position(|&s| self.roots[s] == cur) {
                coords[k] += 1;
                return coords;
            }
            let step = simple.iter().enumerate().find_map(|(k, &s)| {
                let diff: Vec<i64> = cur.iter().zip(&self.roots[s]).map(|(x, y)| x - y).collect();
                self.index.get(&diff).filter(|d| set.contains(d) && self.is_positive(**d)).map(|_| (k, diff))
            });
            let (k, diff) = step.expect("positive root of the component");
            coords[k] += 1;
            cur = diff;
        }
    }

    /// Extended (affine) diagrams of the irreducible components of a subset.
    pub fn extended_diagrams(&self, subset: &[usize]) -> Vec<ExtendedDiagram> {
        self.components(subset)
            .into_iter()
            .map(|comp| {
                let simple = self.simple_system(&comp);
                let theta = self.highest_root(&comp);
                let mut marks = vec![1];
                marks.extend(self.coordinates_in(&comp, &simple, theta).into_iter().map(|c| c as u32));
                let mut nodes = vec![self.negate(theta)];
                nodes.extend(simple.iter().copied());
                let mut edges = Vec::new();
                for i in 0..nodes.len() {
                    for j in 0..i {
                        let f = self.form(&self.roots[nodes[i]], &self.roots[nodes[j]]);
                        if f != 0 {
                            edges.push((j, i));
                        }
                    }
                }
                // rank-one components have α0 = -α1, which is not an edge
                if nodes.len() == 2 {
                    edges.clear();
                }
                ExtendedDiagram { component: comp, nodes, marks, edges }
            })
            .collect()
    }

    /// The extended diagram of the whole system.
    pub fn extended_diagram(&self) -> Vec<ExtendedDiagram> {
        self.extended_diagrams(&self.all_roots())
    }
}

/// Simple roots plus the lowest root of one irreducible component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendedDiagram {
    pub component: RootSubset,
    /// `nodes[0]` is the lowest root (minus the highest root).
    pub nodes: Vec<usize>,
    /// Highest-root coefficients, with 1 for the lowest-root node.
    pub marks: Vec<u32>,
    pub edges: Vec<(usize, usize)>,
}

fn classify_component(rs: &RootSystem, simple: &[usize]) -> CartanType {
    let n = simple.len();
    let lens: Vec<i64> = simple.iter().map(|&s| rs.root_length2(s)).collect();
    let max_len = *lens.iter().max().unwrap();
    let min_len = *lens.iter().min().unwrap();
    let mut degree = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && rs.form(rs.root(simple[i]), rs.root(simple[j])) != 0 {
                degree[i] += 1;
            }
        }
    }
    let series = if max_len == min_len {
        if degree.iter().any(|&d| d >= 3) {
            Series::D
        } else {
            Series::A
        }
    } else if max_len == 3 * min_len {
        Series::G
    } else if n == 4 && lens.iter().filter(|&&l| l == max_len).count() == 2 {
        Series::F
    } else if n == 2 || lens.iter().filter(|&&l| l == min_len).count() == 1 {
        Series::B
    } else {
        Series::C
    };
    CartanType::simple(series, n).expect("classified component is valid")
}

/// Build the root system of a Cartan type by closing the simple roots under
/// simple reflections.
pub fn build_root_system(t: &CartanType) -> Result<RootSystem> {
    if t.components().is_empty() {
        return Err(Error::UnsupportedType("empty type".into()));
    }
    let rank = t.rank();
    let mut gram = vec![vec![0i64; rank]; rank];
    let mut offset = 0;
    for &(s, n) in t.components() {
        let g = simple_gram(s, n);
        for i in 0..n {
            for j in 0..n {
                gram[offset + i][offset + j] = g[i][j];
            }
        }
        offset += n;
    }
    let form = |a: &[i64], b: &[i64]| -> i64 {
        (0..rank).map(|i| (0..rank).map(|j| a[i] * gram[i][j] * b[j]).sum::<i64>()).sum()
    };
    let unit = |i: usize| -> Vec<i64> {
        let mut v = vec![0; rank];
        v[i] = 1;
        v
    };
    let mut found: BTreeSet<Vec<i64>> = (0..rank).map(unit).collect();
    let mut stack: Vec<Vec<i64>> = found.iter().cloned().collect();
    while let Some(v) = stack.pop() {
        for i in 0..rank {
            let a = unit(i);
            let c = 2 * form(&v, &a) / form(&a, &a);
            let w: Vec<i64> = v.iter().zip(&a).map(|(x, y)| x - c * y).collect();
            if found.insert(w.clone()) {
                stack.push(w);
            }
        }
    }
    let mut positive: Vec<Vec<i64>> = found.into_iter().filter(|v| v.iter().all(|&x| x >= 0)).collect();
    // by height, then coordinates descending, so simple roots come first in order
    positive.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    let mut roots = positive.clone();
    roots.extend(positive.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<i64>>()));
    let index = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    let mut rs = RootSystem { cartan_type: t.clone(), rank, gram, roots, index, degrees: Vec::new() };
    rs.degrees = reflection_degrees(&rs)?;
    Ok(rs)
}

/// Degrees of the basic invariants, read off by factoring the length
/// generating function into q-integers [d] = 1 + u + … + u^{d-1}.
pub fn reflection_degrees(rs: &RootSystem) -> Result<Vec<u32>> {
    let mut p = rs.poincare_polynomial();
    let mut degrees = Vec::new();
    while p.degree().ok_or(Error::FactorizationFailure)? > 0 {
        let top = p.degree().unwrap() + 1;
        let d = (2..=top)
            .rev()
            .find(|&d| p.div_exact(&Poly::from_ints(&crate::algebra::cyclotomic_polynomial(d as u32))).is_some())
            .ok_or(Error::FactorizationFailure)?;
        p = p.div_exact(&Poly::from_ints(&vec![1; d])).ok_or(Error::FactorizationFailure)?;
        degrees.push(d as u32);
    }
    if p != Poly::one() || degrees.len() != rs.rank() {
        return Err(Error::FactorizationFailure);
    }
    degrees.sort_unstable();
    Ok(degrees)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        build_root_system(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn sizes_and_degrees() {
        let a1 = rs("A1");
        assert_eq!((a1.num_roots(), a1.num_positive(), a1.degrees()), (2, 1, &[2][..]));
        let b2 = rs("B2");
        assert_eq!((b2.num_roots(), b2.num_positive(), b2.degrees()), (8, 4, &[2, 4][..]));
        let f4 = rs("F4");
        assert_eq!((f4.num_roots(), f4.num_positive(), f4.degrees()), (48, 24, &[2, 6, 8, 12][..]));
        assert_eq!(rs("G2").degrees(), &[2, 6]);
        assert_eq!(rs("D4").degrees(), &[2, 4, 4, 6]);
        assert_eq!(rs("C3").degrees(), &[2, 4, 6]);
        assert_eq!(rs("A2").degrees(), &[2, 3]);
    }

    #[test]
    fn degrees_sum_to_positive_roots() {
        for t in ["A1", "A3", "B2", "C3", "B4", "D4", "G2", "F4", "A1xB2"] {
            let r = rs(t);
            let s: u32 = r.degrees().iter().map(|d| d - 1).sum();
            assert_eq!(s as usize, r.num_positive(), "{t}");
        }
    }

    #[test]
    fn g2_poincare_factorization() {
        let g2 = rs("G2");
        assert_eq!(g2.poincare_polynomial(), Poly::from_ints(&[1, 2, 2, 2, 2, 2, 1]));
    }

    #[test]
    fn extended_diagrams() {
        let a1 = rs("A1").extended_diagram();
        assert_eq!(a1.len(), 1);
        assert_eq!(a1[0].nodes.len(), 2);
        assert_eq!(a1[0].marks, vec![1, 1]);
        let b2 = rs("B2").extended_diagram();
        assert_eq!(b2[0].marks, vec![1, 1, 2]);
        let g2 = rs("G2");
        let d = g2.extended_diagram();
        assert_eq!(d[0].marks, vec![1, 2, 3]);
        // lowest root is minus the highest root 2α1 + 3α2
        assert_eq!(g2.root(d[0].nodes[0]), &[-2, -3]);
        assert_eq!(rs("F4").extended_diagram()[0].marks, vec![1, 2, 3, 4, 2]);
    }

    #[test]
    fn closure_properties() {
        for t in ["B3", "C3", "G2", "F4", "D4"] {
            let r = rs(t);
            r.check_closed(&r.all_roots()).unwrap();
            for a in 0..r.num_roots() {
                let p = r.reflection_permutation(a);
                let mut sorted = p.clone();
                sorted.sort();
                assert_eq!(sorted, r.all_roots());
            }
            for (i, root) in r.roots().iter().enumerate() {
                assert_eq!(r.is_positive(i), root.iter().all(|&x| x >= 0));
            }
        }
    }

    #[test]
    fn short_a1xa1_in_b2_is_not_closed() {
        let b2 = rs("B2");
        // short roots e2 = α2, e1 = α1 + α2
        let e2 = b2.index_of(&[0, 1]).unwrap();
        let e1 = b2.index_of(&[1, 1]).unwrap();
        let mut s = vec![e1, e2, b2.negate(e1), b2.negate(e2)];
        s.sort();
        assert!(matches!(b2.check_closed(&s), Err(Error::NotClosed(_))));
    }

    #[test]
    fn classify_subsystems() {
        let g2 = rs("G2");
        assert_eq!(g2.subsystem_type(&g2.all_roots()).to_string(), "G2");
        let long: Vec<usize> = (0..g2.num_roots()).filter(|&i| g2.root_length2(i) == 6).collect();
        assert_eq!(g2.subsystem_type(&long).to_string(), "A2");
        let f4 = rs("F4");
        assert_eq!(f4.subsystem_type(&f4.all_roots()).to_string(), "F4");
        assert_eq!(rs("C3").subsystem_type(&rs("C3").all_roots()).to_string(), "C3");
        assert_eq!(rs("B3").subsystem_type(&rs("B3").all_roots()).to_string(), "B3");
    }

    #[test]
    fn parse_types() {
        assert_eq!("b3".parse::<CartanType>().unwrap().to_string(), "B3");
        assert!("G3".parse::<CartanType>().is_err());
        assert!("E6".parse::<CartanType>().is_err());
        assert_eq!("A1xA1".parse::<CartanType>().unwrap().rank(), 2);
    }
}
