//! Families of irreducible characters with their groups Γ, Fourier
//! matrices, sign invariants a_c, A_c and the involution m ↦ m!.

mod data;
mod gamma;

pub use data::{solve_bang, BangSolution, DeltaRecord, Family, FamilyData, FamilyFile, FamilyRecord, MemberRecord};
pub use gamma::{CentralizerData, FourierMatrix, GammaGroup, GammaKind, MElement};
