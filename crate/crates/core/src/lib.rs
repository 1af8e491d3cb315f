//! Integer homology of finite pointed sets acted on by free partially
//! commutative (trace) monoids `M(E, I)`, with a harness that checks the
//! direct-sum decompositions of these groups on concrete instances.

pub mod action;
pub mod alphabet;
pub mod battery;
pub mod complex;
pub mod intlinalg;
pub mod simplicial;
mod text;
pub mod verify;

pub use action::{ActionError, PointedAction};
pub use alphabet::{AlphabetError, Clique, IndependenceAlphabet};
pub use complex::{kset_complex, kset_homology, simplicial_chain_complex, ChainComplex, DdCheck, Variant};
pub use intlinalg::{FinAbGroup, IntMatrix, LinalgError, SmithForm};
pub use simplicial::{reduced_homology, SimplicialComplex, SimplicialError};
pub use verify::{TheoremId, TheoremReport, VerifyError};
