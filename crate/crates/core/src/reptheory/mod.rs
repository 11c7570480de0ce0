//! Representations of Weyl groups: character tables, stable labels, fake
//! degrees and graded traces on coinvariant algebras.

mod chartable;
mod coinvariant;
mod labels;

pub use chartable::{character_table, CharacterTable, DEFAULT_ORDER_BOUND};
pub use coinvariant::{
    coinvariant_graded_trace, fake_degrees, tensor_invariant_graded_trace, CosetTraces, GradedTrace, SubsystemSpace,
};
pub use labels::{label_irreducibles, IrrLabel, LabelFile, LabelHint, WeylCharacters};
