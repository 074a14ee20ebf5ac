//! Exact symmetric functions: the Schur, h, e and p bases, Littlewood–Richardson
//! and Kronecker coefficients, the operators `U`, `D`, `K`, `K̄`, tableau
//! combinatorics on skew shapes, and a catalog of identities checked by
//! exhaustion.

mod cache;
pub mod coeffs;
pub mod error;
pub mod identities;
pub mod operators;
pub mod partition;
pub mod symfunc;
pub mod tableaux;

pub use coeffs::{character_table, kron_coeff, lr_coeff, mn_character, CharacterTable};
pub use error::{Error, Result};
pub use identities::{run_suite, verify_identity, verify_instance, Bounds, Params, VerificationReport};
pub use partition::{partitions_of, partitions_up_to, Cell, Partition, SkewShape};
pub use symfunc::{jacobi_trudi, rational, skew_schur, Basis, Rational, SignedSchur, SymFunc};
pub use tableaux::{Assyt, Filling, Ssyt, Word};
pub use operators::{apply_kb, kb_as_ud, kb_via_gamma, matrix_of, Generator, OperatorExpr, TruncatedMatrix};
