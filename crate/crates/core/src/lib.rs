//! Exact classification of real numbers by geometric constructibility and a
//! compiler from constructible expressions to checkable construction programs.

pub mod algnum;
pub mod classify;
pub mod expr;
pub mod geom;
pub mod poly;
pub mod tower;
