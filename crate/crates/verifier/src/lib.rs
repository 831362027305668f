//! Batch classification of graphs against the triangle-free Gorenstein
//! equivalence, with JSON and CSV reports.

pub mod record;
pub mod survey;

pub use record::GraphRecord;
pub use survey::{
    corpus_digest, survey, Filter, Skipped, Summary, SurveyError, SurveyOptions, SurveyReport,
};
