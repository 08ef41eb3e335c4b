//! Input files, the shipped corpus, exhaustive search and reports.

pub mod corpus;
mod format;
mod search;
mod verify;

pub use format::{
    build, load, load_str, parse, AlgebraSpec, FieldSpec, LoadError, ModuleSpec, NamedSubmodule,
    SubmoduleSpec, Workbench, WorkbenchFile, SCHEMA_VERSION,
};
pub use search::{
    all_modules, candidates, canonical_hash, classify, classify_all, dedupe, search, BlockShape,
    Candidate, ClassificationRecord, SearchReport, Witness, PROPERTIES, SEARCH_CAP,
};
pub use verify::{CriterionResult, Verifier, COMPLETE_DIM, CRITERIA, SEARCH_DIM};
