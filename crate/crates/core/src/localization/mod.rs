//! Lattice models of localized categories, their smashing localizations,
//! and the maps between them.

mod category;
mod diagram;
mod model;
mod registry;
mod report;

use thiserror::Error;

use crate::lattice::LatticeError;

pub use category::{CategoryId, CategoryParseError};
pub use diagram::{
    bousfield_lattice, check_compose, realize_diagram_check, BuiltLattice, ComposeReport,
    DiagramReport,
};
pub use model::{
    bp_assumptions, CategoryFacts, CategoryModel, LatticeKind, LocalElement, Localizer,
    BP_LTC_CITATION,
};
pub use registry::{
    gsc_verdict, sdgsc_verdict, smashing_registry, verify_complemented_pair, Generation,
    SmashingRecord, SmashingRegistry, DEFAULT_CAP,
};
pub use report::{category_report, CategoryReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalizationError {
    #[error("the {0} category has no finite lattice model")]
    NoFiniteModel(CategoryId),
    #[error("the {0} model needs a truncation depth")]
    MissingTruncation(CategoryId),
    #[error("no registered map for the pair ({0}, {1})")]
    UnregisteredPair(String, String),
    #[error("{0} is not an element of a finite model")]
    NotAModelElement(String),
    #[error("undecided: {0}")]
    Indeterminate(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
