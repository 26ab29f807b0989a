//! Graded abstract argumentation: graded defense and neutrality, graded
//! extensions, rankings derived from them, ranking postulates, and defeat
//! graphs instantiated from stratified propositional bases.

pub mod af;
pub mod components;
pub mod error;
pub mod instantiate;
pub mod io;
pub mod kernel;
pub mod postulates;
pub mod random;
pub mod ranking;
pub mod semantics;
pub mod set;

pub use af::{ArgumentId, ArgumentationFramework};
pub use components::connected_components;
pub use error::{Error, ParseError, Result};
pub use kernel::{DefenseGrade, GradeOrdering, GradeParams, IterationStream};
pub use ranking::{ArgumentPartialOrder, JustificationSignature, Relation, TripleScope};
pub use semantics::{Existence, ExtensionFamily, JustifiedReport, Mode, Semantics};
pub use set::ArgumentSet;
