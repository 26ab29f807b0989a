//! Defeat graphs instantiated from stratified propositional bases, with a
//! preferred subtheories oracle.

mod formula;
mod kb;
mod pipeline;

pub use formula::{entails, is_consistent, Formula, Models, TruthTable, MAX_ATOMS};
pub use kb::{random_knowledge_base, KnowledgeBase, PremiseSet, MAX_FORMULAS};
pub use pipeline::{
    build_defeat_graph, graded_inference, preferred_subtheories, ps_correspondence_check, ClassicalArgument,
    CorrespondenceCheck, DefeatGraph,
};
