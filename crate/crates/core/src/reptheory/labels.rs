//! Stable names for the irreducible characters of a Weyl group.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{character_table, fake_degrees, CharacterTable, DEFAULT_ORDER_BOUND};
use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::weyl::WeylGroup;

/// One record of a labeling-hint file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelHint {
    pub name: String,
    pub dim: usize,
    pub b: usize,
    /// Character values keyed by a word in the simple reflections ("12" is s1·s2).
    #[serde(default)]
    pub traces: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelFile {
    #[serde(rename = "type")]
    pub cartan_type: String,
    #[serde(rename = "irreducible")]
    pub irreducibles: Vec<LabelHint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrLabel {
    pub name: String,
    pub dim: usize,
    pub b: usize,
    /// (class index, character value) pairs that separate equal (dim, b).
    pub disambiguator: Vec<(usize, i64)>,
}

/// Match computed characters against hints. `values[i][c]` is character `i`
/// on class `c`; `word_class` resolves a hint word to a class index.
pub fn label_irreducibles(
    values: &[Vec<i64>],
    b: &[usize],
    hints: &[LabelHint],
    word_class: impl Fn(&str) -> Option<usize>,
) -> Result<Vec<IrrLabel>> {
    let mut assigned: Vec<Option<IrrLabel>> = vec![None; values.len()];
    for hint in hints {
        let traces: Vec<(usize, i64)> = hint
            .traces
            .iter()
            .map(|(w, &v)| word_class(w).map(|c| (c, v)).ok_or_else(|| Error::DataIntegrity(format!("bad word {w:?}"))))
            .collect::<Result<_>>()?;
        let matches: Vec<usize> = (0..values.len())
            .filter(|&i| values[i][0] == hint.dim as i64 && b[i] == hint.b)
            .filter(|&i| traces.iter().all(|&(c, v)| values[i][c] == v))
            .collect();
        match matches.as_slice() {
            [] => return Err(Error::DataIntegrity(format!("hint {} matches no irreducible", hint.name))),
            [i] => {
                if assigned[*i].is_some() {
                    return Err(Error::AmbiguousLabel(hint.name.clone()));
                }
                assigned[*i] =
                    Some(IrrLabel { name: hint.name.clone(), dim: hint.dim, b: hint.b, disambiguator: traces });
            }
            _ => return Err(Error::AmbiguousLabel(hint.name.clone())),
        }
    }
    assigned.into_iter().enumerate().map(|(i, l)| l.ok_or(Error::UnmatchedIrreducible(i))).collect()
}

/// The irreducible characters of a Weyl group with integer values, fake
/// degrees, b-invariants and labels.
#[derive(Clone, Debug)]
pub struct WeylCharacters {
    pub group: Arc<WeylGroup>,
    pub table: CharacterTable,
    /// `values[E][class]`
    pub values: Vec<Vec<i64>>,
    pub fake_degrees: Vec<Poly>,
    pub b: Vec<usize>,
    pub labels: Vec<IrrLabel>,
    /// Index of E ⊗ sign.
    pub sign_twist: Vec<usize>,
}

impl WeylCharacters {
    /// Build the table; without hints, characters are named `chi0`, `chi1`, …
    pub fn new(group: Arc<WeylGroup>, hints: Option<&LabelFile>) -> Result<Self> {
        let table = character_table(group.table(), DEFAULT_ORDER_BOUND)?;
        let values =
            table.integer_values().ok_or_else(|| Error::LiftFailure("Weyl group character is not rational".into()))?;
        let fake = fake_degrees(&group, &table.classes.members, &values)?;
        let b: Vec<usize> = fake.iter().map(|p| p.valuation().expect("fake degree is nonzero")).collect();
        let labels = match hints {
            Some(file) => label_irreducibles(&values, &b, &file.irreducibles, |w| {
                group.parse_word(w).map(|x| table.classes.class_of[x])
            })?,
            None => (0..values.len())
                .map(|i| IrrLabel {
                    name: format!("chi{i}"),
                    dim: values[i][0] as usize,
                    b: b[i],
                    disambiguator: vec![],
                })
                .collect(),
        };
        let sign_class: Vec<i64> =
            table.classes.members.iter().map(|m| if group.length(m[0]).is_multiple_of(2) { 1 } else { -1 }).collect();
        let sign_twist = values
            .iter()
            .map(|row| {
                let twisted: Vec<i64> = row.iter().zip(&sign_class).map(|(a, s)| a * s).collect();
                values.iter().position(|r| *r == twisted).expect("sign twist of an irreducible is irreducible")
            })
            .collect();
        Ok(WeylCharacters { group, table, values, fake_degrees: fake, b, labels, sign_twist })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn dim(&self, e: usize) -> usize {
        self.values[e][0] as usize
    }

    /// χ_E(w) for a group element.
    pub fn value(&self, e: usize, w: usize) -> i64 {
        self.values[e][self.table.classes.class_of[w]]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.name == name)
    }

    pub fn trivial(&self) -> usize {
        self.values.iter().position(|r| r.iter().all(|&v| v == 1)).unwrap()
    }

    pub fn sign(&self) -> usize {
        self.sign_twist[self.trivial()]
    }
}
