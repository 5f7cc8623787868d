//! Library side of the `sups` command: file formats, batch querying, the
//! oracle verification campaign and the scaling measurement.

pub mod build_query;
pub mod campaign;
pub mod input;
pub mod scaling;
