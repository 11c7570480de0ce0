//! The small groups Γ attached to families, the sets M(Γ) and the Fourier
//! pairing on them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{int, Cyclotomic, ExactRational};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::reptheory::{character_table, CharacterTable, DEFAULT_ORDER_BOUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GammaKind {
    Trivial,
    Z2,
    Z2Squared,
    S3,
    S4,
    S5,
}

impl GammaKind {
    pub const ALL: [GammaKind; 6] =
        [GammaKind::Trivial, GammaKind::Z2, GammaKind::Z2Squared, GammaKind::S3, GammaKind::S4, GammaKind::S5];

    fn generators(self) -> (Vec<Vec<usize>>, usize) {
        match self {
            GammaKind::Trivial => (vec![], 1),
            GammaKind::Z2 => (vec![vec![1, 0]], 2),
            GammaKind::Z2Squared => (vec![vec![1, 0, 2, 3], vec![0, 1, 3, 2]], 4),
            GammaKind::S3 => (vec![vec![1, 0, 2], vec![1, 2, 0]], 3),
            GammaKind::S4 => (vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]], 4),
            GammaKind::S5 => (vec![vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]], 5),
        }
    }

    fn class_names(self) -> &'static [&'static str] {
        match self {
            GammaKind::Trivial => &["1"],
            GammaKind::Z2 => &["1", "g"],
            GammaKind::Z2Squared => &["1", "a", "b", "ab"],
            GammaKind::S3 => &["1", "g2", "g3"],
            GammaKind::S4 => &["1", "g2", "g2'", "g3", "g4"],
            GammaKind::S5 => &["1", "g2", "g2'", "g3", "g4", "g5", "g6"],
        }
    }

    /// Field order holding every centralizer character value.
    pub fn field_order(self) -> u32 {
        match self {
            GammaKind::S5 => 60,
            _ => crate::algebra::DEFAULT_CYCLOTOMIC_ORDER,
        }
    }
}

impl fmt::Display for GammaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GammaKind::Trivial => "1",
            GammaKind::Z2 => "Z2",
            GammaKind::Z2Squared => "Z2xZ2",
            GammaKind::S3 => "S3",
            GammaKind::S4 => "S4",
            GammaKind::S5 => "S5",
        };
        write!(f, "{s}")
    }
}

impl FromStr for GammaKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GammaKind::ALL
            .into_iter()
            .find(|k| k.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::DataIntegrity(format!("unknown group {s:?}")))
    }
}

/// Name of a permutation's conjugacy class, read off from its cycle type.
fn class_name(kind: GammaKind, perm: &[usize]) -> String {
    let moved: Vec<usize> = (0..perm.len()).filter(|&i| perm[i] != i).collect();
    match kind {
        GammaKind::Trivial => "1".into(),
        GammaKind::Z2 => if moved.is_empty() { "1" } else { "g" }.into(),
        GammaKind::Z2Squared => match (perm[0] != 0, perm[2] != 2) {
            (false, false) => "1",
            (true, false) => "a",
            (false, true) => "b",
            (true, true) => "ab",
        }
        .into(),
        _ => {
            let mut seen = vec![false; perm.len()];
            let mut cycles = Vec::new();
            for i in 0..perm.len() {
                let mut len = 0;
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    j = perm[j];
                    len += 1;
                }
                if len > 1 {
                    cycles.push(len);
                }
            }
            cycles.sort_unstable_by(|a, b| b.cmp(a));
            match cycles.as_slice() {
                [] => "1".into(),
                [2, 2] => "g2'".into(),
                [3, 2] => "g6".into(),
                [k] => format!("g{k}"),
                _ => unreachable!("cycle type outside the supported groups"),
            }
        }
    }
}

/// Per-class data: the centralizer of the representative and its characters.
#[derive(Clone, Debug)]
pub struct CentralizerData {
    pub elements: Vec<usize>,
    position: HashMap<usize, usize>,
    pub table: CharacterTable,
    pub character_names: Vec<String>,
}

impl CentralizerData {
    /// σ(g) for a character index σ and an element g of the centralizer.
    pub fn value(&self, sigma: usize, g: usize) -> &Cyclotomic {
        self.table.value_at(sigma, self.position[&g])
    }
}

/// An element (x, σ) of M(Γ): x a class index, σ a character index of Z_Γ(x).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MElement {
    pub class: usize,
    pub character: usize,
}

#[derive(Clone, Debug)]
pub struct GammaGroup {
    pub kind: GammaKind,
    pub table: GroupTable,
    pub class_names: Vec<String>,
    /// Members of each class, in the fixed order of `class_names`.
    pub classes: Vec<Vec<usize>>,
    pub centralizers: Vec<CentralizerData>,
}

fn character_names(table: &CharacterTable) -> Vec<String> {
    let mut count: HashMap<usize, usize> = HashMap::new();
    (0..table.num_classes())
        .map(|i| {
            let d = table.degree(i);
            if i == 0 {
                return "1".to_string();
            }
            let k = count.entry(d).or_insert(0);
            let base = if d == 1 { "ε".to_string() } else { format!("r{d}") };
            let name = format!("{base}{}", "'".repeat(*k));
            *k += 1;
            name
        })
        .collect()
}

impl GammaGroup {
    pub fn new(kind: GammaKind) -> Self {
        let (gens, degree) = kind.generators();
        let (table, perms) = GroupTable::from_permutation_generators(&gens, degree);
        let found = table.classes();
        let names = kind.class_names();
        let mut classes = vec![Vec::new(); names.len()];
        for members in &found.members {
            let name = class_name(kind, &perms[members[0]]);
            let pos = names.iter().position(|n| *n == name).expect("class name in the fixed list");
            classes[pos] = members.clone();
        }
        let centralizers = classes
            .iter()
            .map(|members| {
                let elements = table.centralizer(members[0]);
                let sub = table.subgroup_table(&elements);
                let position = elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
                let ct = character_table(&sub, DEFAULT_ORDER_BOUND).expect("character table of a small group");
                let character_names = character_names(&ct);
                CentralizerData { elements, position, table: ct, character_names }
            })
            .collect();
        GammaGroup { kind, table, class_names: names.iter().map(|s| s.to_string()).collect(), classes, centralizers }
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.class_names.iter().position(|n| n == name)
    }

    /// M(Γ) in canonical order: classes in fixed order, then centralizer
    /// characters in table order.
    pub fn build_m(&self) -> Vec<MElement> {
        (0..self.classes.len())
            .flat_map(|c| {
                (0..self.centralizers[c].table.num_classes()).map(move |k| MElement { class: c, character: k })
            })
            .collect()
    }

    pub fn m_name(&self, m: MElement) -> String {
        format!("({},{})", self.class_names[m.class], self.centralizers[m.class].character_names[m.character])
    }

    /// (1/(|Z(x)||Z(y)|)) Σ_{g : x·gyg⁻¹ = gyg⁻¹·x} σ(gyg⁻¹)·conj(τ(g⁻¹xg)).
    pub fn fourier_pairing(&self, m: MElement, n: MElement) -> Cyclotomic {
        let order = self.kind.field_order();
        let x = self.representative(m.class);
        let y = self.representative(n.class);
        let zx = &self.centralizers[m.class];
        let zy = &self.centralizers[n.class];
        let mut sum = Cyclotomic::zero(order);
        for g in 0..self.order() {
            let gyg = self.table.conj(g, y);
            if !self.table.commute(x, gyg) {
                continue;
            }
            let gxg = self.table.conj(self.table.inv(g), x);
            let term = &zx.value(m.character, gyg).embed(order) * &zy.value(n.character, gxg).embed(order).conj();
            sum = &sum + &term;
        }
        let scale = ExactRational::new(1.into(), ((zx.elements.len() * zy.elements.len()) as i64).into());
        sum.scale(&scale)
    }

    pub fn fourier_matrix(&self) -> FourierMatrix {
        let m = self.build_m();
        let entries = m.iter().map(|&a| m.iter().map(|&b| self.fourier_pairing(a, b)).collect()).collect();
        FourierMatrix { gamma_order: self.order(), elements: m, entries }
    }
}

/// The Fourier matrix on M(Γ), indexed in canonical order.
#[derive(Clone, Debug)]
pub struct FourierMatrix {
    pub gamma_order: usize,
    pub elements: Vec<MElement>,
    pub entries: Vec<Vec<Cyclotomic>>,
}

impl FourierMatrix {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size()).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn is_involutive(&self) -> bool {
        let n = self.size();
        let order = self.entries.first().map_or(1, |r| r[0].order());
        (0..n).all(|i| {
            (0..n).all(|j| {
                let mut s = Cyclotomic::zero(order);
                for k in 0..n {
                    s = &s + &(&self.entries[i][k] * &self.entries[k][j]);
                }
                s == Cyclotomic::from_rational(order, int(i64::from(i == j)))
            })
        })
    }

    /// Rational entries, or `None` if some entry is irrational.
    pub fn rational_entries(&self) -> Option<Vec<Vec<ExactRational>>> {
        self.entries.iter().map(|row| row.iter().map(Cyclotomic::to_rational).collect()).collect()
    }

    pub fn denominators_divide_order(&self) -> bool {
        let g = num_bigint::BigInt::from(self.gamma_order);
        self.rational_entries().is_some_and(|rows| rows.iter().flatten().all(|r| (&g % r.denom()).is_zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn m_sizes() {
        let sizes: Vec<usize> = GammaKind::ALL.iter().map(|&k| GammaGroup::new(k).build_m().len()).collect();
        assert_eq!(sizes, vec![1, 4, 16, 8, 21, 39]);
    }

    #[test]
    fn z2_pairing_values() {
        let g = GammaGroup::new(GammaKind::Z2);
        let one_one = MElement { class: 0, character: 0 };
        let one_eps = MElement { class: 0, character: 1 };
        let g_one = MElement { class: 1, character: 0 };
        assert_eq!(g.fourier_pairing(one_one, one_one).to_rational(), Some(rat(1, 2)));
        assert_eq!(g.fourier_pairing(one_eps, g_one).to_rational(), Some(rat(-1, 2)));
        assert_eq!(g.m_name(one_eps), "(1,ε)");
        let t = GammaGroup::new(GammaKind::Trivial);
        assert_eq!(
            t.fourier_pairing(MElement { class: 0, character: 0 }, MElement { class: 0, character: 0 }).to_rational(),
            Some(rat(1, 1))
        );
    }

    #[test]
    fn fourier_matrices_are_symmetric_involutions() {
        for kind in [GammaKind::Trivial, GammaKind::Z2, GammaKind::Z2Squared, GammaKind::S3, GammaKind::S4] {
            let f = GammaGroup::new(kind).fourier_matrix();
            assert!(f.is_symmetric(), "{kind}");
            assert!(f.is_involutive(), "{kind}");
            assert!(f.denominators_divide_order(), "{kind}");
            let first = f.rational_entries().unwrap()[0].clone();
            assert!(first.iter().all(|x| x > &rat(0, 1)), "{kind}");
        }
    }
}
