//! Exact property checks, exhaustive enumeration and randomized validation
//! of the class theorems at small orders.

mod enumerate;
mod generate;
mod property;
mod survey;
mod validate;

pub use enumerate::{enumerate_digraphs, labeled_count, DigraphStream, ENUMERATION_CAP};
pub use generate::{random_digraph, sample_member};
pub use property::{
    check_diperfect, check_diperfect_with, check_property, DiperfectCache, PropertyReport,
    DIPERFECT_CAP, PROPERTY_CAP,
};
pub use survey::{
    survey_conjecture, Counterexample, Direction, OrderCounts, SurveyConfig, SurveyReport,
    EXHAUSTIVE_MAX,
};
pub use validate::{validate_theorem, TheoremClass, ValidationFailure, ValidationReport};
