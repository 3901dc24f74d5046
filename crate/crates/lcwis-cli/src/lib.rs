//! File formats and benchmarking for the LCWIS toolkit binary.

pub mod bench;
pub mod formats;
