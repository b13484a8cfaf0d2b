//! Text formats: CSV for matrices, vectors and datasets; JSON for models and
//! solver reports. Every parser returns a structured error on bad input and
//! round-trips what the matching writer produces.

mod csv;
mod json;

pub use self::csv::{
    parse_dataset, parse_matrix, parse_vector, write_dataset, write_matrix, write_table,
    write_vector,
};
pub use self::json::{parse_model, parse_report, write_model, write_report, Report};
