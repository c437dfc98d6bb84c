//! Bousfield-class expressions, their normal forms, and three-valued
//! equality and order decisions.

mod algebra;
mod expr;
mod generator;
mod normal;
mod rules;
mod tri;

pub use algebra::{
    certainly_nonzero, support_bounds, Algebra, Assumption, Assumptions, SupportBounds,
    TC1_ONE_CITATION, TC1_ZERO_CITATION,
};
pub use expr::ClassExpr;
pub use generator::{Generator, GeneratorParseError};
pub use normal::{
    normalize, normalize_logged, normalize_traced, smash, wedge, Monomial, MonomialStatus,
    NormalForm, RuleLog,
};
pub use rules::{reduce_pair, saturate, saturate_all_orders, Reduct, RuleId, Saturated};
pub use tri::{Tri, TriValue};
