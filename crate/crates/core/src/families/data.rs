//! Curated family tables: parsing, validation and derived invariants.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{FourierMatrix, GammaGroup, GammaKind, MElement};
use crate::error::{Error, Result};
use crate::reptheory::WeylCharacters;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberRecord {
    pub name: String,
    /// Class name in Γ.
    pub x: String,
    /// Character index of the centralizer, in canonical order.
    pub sigma: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaRecord {
    pub x: String,
    pub sigma: usize,
    pub value: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub gamma: String,
    pub members: Vec<MemberRecord>,
    #[serde(default)]
    pub delta: Vec<DeltaRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFile {
    #[serde(rename = "type")]
    pub cartan_type: String,
    #[serde(rename = "family")]
    pub families: Vec<FamilyRecord>,
}

/// One validated family c.
#[derive(Clone, Debug)]
pub struct Family {
    pub index: usize,
    pub gamma: Arc<GammaGroup>,
    pub fourier: Arc<FourierMatrix>,
    /// Irreducible indices of the members.
    pub members: Vec<usize>,
    /// Position in M(Γ) of m_E for each member.
    pub embedding: Vec<usize>,
    /// Δ on M(Γ), canonical order.
    pub delta: Vec<i8>,
    pub special: usize,
    pub a: usize,
    pub big_a: usize,
    /// Family containing E ⊗ sign for the members.
    pub sign_twin: usize,
}

impl Family {
    pub fn m_elements(&self) -> &[MElement] {
        &self.fourier.elements
    }

    pub fn m_name(&self, m: usize) -> String {
        self.gamma.m_name(self.fourier.elements[m])
    }

    /// Position of an M-element given by class name and character index.
    pub fn m_index(&self, x: &str, sigma: usize) -> Option<usize> {
        let class = self.gamma.class_index(x)?;
        self.fourier.elements.iter().position(|m| *m == MElement { class, character: sigma })
    }

    /// ⟨m, m_E⟩ for each member E, as rationals.
    pub fn pairing_row(&self, m: usize) -> Vec<crate::algebra::ExactRational> {
        let rows = self.fourier.rational_entries().expect("Fourier matrix is rational");
        self.embedding.iter().map(|&e| rows[m][e].clone()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct FamilyData {
    pub families: Vec<Family>,
    /// Family index of each irreducible.
    pub family_of: Vec<usize>,
}

impl FamilyData {
    /// Validate curated records against the character table.
    pub fn ingest(chars: &WeylCharacters, file: &FamilyFile) -> Result<Self> {
        let n = chars.group.root_system().num_positive();
        let mut groups: HashMap<GammaKind, (Arc<GammaGroup>, Arc<FourierMatrix>)> = HashMap::new();
        let mut family_of = vec![usize::MAX; chars.len()];
        let mut families = Vec::new();
        for (index, rec) in file.families.iter().enumerate() {
            let kind: GammaKind = rec.gamma.parse()?;
            let (gamma, fourier) = groups
                .entry(kind)
                .or_insert_with(|| {
                    let g = GammaGroup::new(kind);
                    let f = g.fourier_matrix();
                    (Arc::new(g), Arc::new(f))
                })
                .clone();
            if fourier.rational_entries().is_none() {
                return Err(Error::DataIntegrity(format!("Fourier matrix of {kind} is not rational")));
            }
            let mut members = Vec::new();
            let mut embedding = Vec::new();
            for m in &rec.members {
                let e = chars.index_of(&m.name).ok_or_else(|| Error::UnknownLabel(m.name.clone()))?;
                if family_of[e] != usize::MAX {
                    return Err(Error::NotAPartition(format!("{} appears twice", m.name)));
                }
                family_of[e] = index;
                let class = gamma
                    .class_index(&m.x)
                    .ok_or_else(|| Error::DataIntegrity(format!("unknown class {} in {kind}", m.x)))?;
                let pos = fourier
                    .elements
                    .iter()
                    .position(|el| *el == MElement { class, character: m.sigma })
                    .ok_or_else(|| Error::DataIntegrity(format!("no character {} of Z({})", m.sigma, m.x)))?;
                if embedding.contains(&pos) {
                    return Err(Error::EmbeddingNotInjective(m.name.clone()));
                }
                members.push(e);
                embedding.push(pos);
            }
            if members.is_empty() {
                return Err(Error::NotAPartition(format!("family {index} is empty")));
            }
            let mut delta = vec![1i8; fourier.size()];
            for d in &rec.delta {
                let class = gamma
                    .class_index(&d.x)
                    .ok_or_else(|| Error::DataIntegrity(format!("unknown class {} in {kind}", d.x)))?;
                let pos = fourier
                    .elements
                    .iter()
                    .position(|el| *el == MElement { class, character: d.sigma })
                    .ok_or_else(|| Error::DataIntegrity(format!("no character {} of Z({})", d.sigma, d.x)))?;
                if d.value != 1 && d.value != -1 {
                    return Err(Error::DataIntegrity("delta values must be +1 or -1".into()));
                }
                delta[pos] = d.value;
            }
            let a = members.iter().map(|&e| chars.b[e]).min().unwrap();
            let at_min: Vec<usize> = members.iter().copied().filter(|&e| chars.b[e] == a).collect();
            if at_min.len() != 1 {
                return Err(Error::SpecialNotUnique(chars.labels[members[0]].name.clone()));
            }
            families.push(Family {
                index,
                gamma,
                fourier,
                members,
                embedding,
                delta,
                special: at_min[0],
                a,
                big_a: 0,
                sign_twin: usize::MAX,
            });
        }
        if let Some(e) = family_of.iter().position(|&f| f == usize::MAX) {
            return Err(Error::NotAPartition(format!("{} is in no family", chars.labels[e].name)));
        }
        let member_sets: Vec<BTreeSet<usize>> = families.iter().map(|f| f.members.iter().copied().collect()).collect();
        for i in 0..families.len() {
            let twisted: BTreeSet<usize> = families[i].members.iter().map(|&e| chars.sign_twist[e]).collect();
            let twin = member_sets
                .iter()
                .position(|s| *s == twisted)
                .ok_or_else(|| Error::SignTwistNotAFamily(chars.labels[families[i].special].name.clone()))?;
            families[i].sign_twin = twin;
        }
        for i in 0..families.len() {
            let twin_a = families[families[i].sign_twin].a;
            families[i].big_a = n - twin_a;
            if families[i].a > families[i].big_a {
                return Err(Error::DataIntegrity(format!("a > A in family {i}")));
            }
        }
        Ok(FamilyData { families, family_of })
    }

    /// Family containing the named irreducible, or given by index, or the
    /// aliases "trivial" and "sign".
    pub fn find(&self, chars: &WeylCharacters, key: &str) -> Option<usize> {
        match key {
            "trivial" => return Some(self.family_of[chars.trivial()]),
            "sign" => return Some(self.family_of[chars.sign()]),
            _ => {}
        }
        if let Ok(i) = key.parse::<usize>() {
            return (i < self.families.len()).then_some(i);
        }
        chars.index_of(key).map(|e| self.family_of[e])
    }
}

/// The involution m ↦ m! of one family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BangSolution {
    pub partner: Vec<usize>,
    /// Set where more than one candidate satisfied the relations.
    pub multiple: Vec<bool>,
    pub involutive: bool,
}

/// Solve Δ(m!) = (−1)^{a+A} Δ(m) and ⟨m!, m_E⟩ = (−1)^{b_E + a} ⟨m, m_E⟩ for
/// every member E; the least candidate is taken.
pub fn solve_bang(family: &Family, chars: &WeylCharacters) -> Result<BangSolution> {
    let rows = family.fourier.rational_entries().expect("Fourier matrix is rational");
    let size = family.fourier.size();
    let delta_sign: i8 = if (family.a + family.big_a).is_multiple_of(2) { 1 } else { -1 };
    let mut candidates = Vec::with_capacity(size);
    for m in 0..size {
        let cand: Vec<usize> = (0..size)
            .filter(|&k| family.delta[k] == delta_sign * family.delta[m])
            .filter(|&k| {
                family.members.iter().zip(&family.embedding).all(|(&e, &me)| {
                    let target = &rows[m][me];
                    if (chars.b[e] + family.a).is_multiple_of(2) {
                        rows[k][me] == *target
                    } else {
                        rows[k][me] == -target.clone()
                    }
                })
            })
            .collect();
        if cand.is_empty() {
            return Err(Error::NoSolution(format!("family {} element {}", family.index, family.m_name(m))));
        }
        candidates.push(cand);
    }
    let multiple: Vec<bool> = candidates.iter().map(|c| c.len() > 1).collect();
    // When the relations leave a choice, pair elements greedily so that the
    // result is an involution whenever one is available.
    let mut partner: Vec<Option<usize>> = vec![None; size];
    for m in 0..size {
        if partner[m].is_some() {
            continue;
        }
        let pick = candidates[m]
            .iter()
            .copied()
            .find(|&k| (k == m || partner[k].is_none()) && candidates[k].contains(&m))
            .unwrap_or(candidates[m][0]);
        partner[m] = Some(pick);
        if partner[pick].is_none() && candidates[pick].contains(&m) {
            partner[pick] = Some(m);
        }
    }
    let partner: Vec<usize> = partner.into_iter().map(Option::unwrap).collect();
    let involutive = (0..size).all(|m| partner[partner[m]] == m);
    Ok(BangSolution { partner, multiple, involutive })
}
