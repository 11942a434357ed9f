//! Finite semigroups: minimal ideals, group completions, and integral
//! homology of classifying spaces.

pub mod canonical;
pub mod census;
pub mod completion;
pub mod dsf;
pub mod equation;
pub mod error;
pub mod fixtures;
pub mod ideal;
pub mod linalg;
pub mod nerve;
pub mod resolution;
pub mod table;

pub use canonical::canonical_form;
pub use census::{run_census, CensusReport, SignatureCount};
pub use completion::{abelianization, group_completion, GroupTable, QuotientGroup};
pub use dsf::DisjointSetForest;
pub use equation::{satisfies_identity, WordEquation};
pub use error::{Error, Result};
pub use ideal::{is_k_thin, min_ideal, ReesStructure};
pub use linalg::{FinAbGroup, IntMatrix};
pub use nerve::nerve_homology;
pub use resolution::{get_homology, get_homology_with_caps, ResolutionCaps};
pub use table::SemigroupTable;
