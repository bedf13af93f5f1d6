//! Max-linear systems: one-sided `A ⊗ x = b` and two-sided `B ⊗ x = C ⊗ x`.

pub mod onesided;
pub mod polytrope;
pub mod twosided;

pub use onesided::{onesided_solve, OneSided};
pub use polytrope::Polytrope;
pub use twosided::{
    compatible, enumerate_win_sequences, sequence_to_polytrope, solve_by_sequence, solve_by_sequence_within, twosided_solve,
    twosided_solve_with_supports, win_sets, SupportedFamily, WinSequence, WinSets,
};
