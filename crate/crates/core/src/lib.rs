//! Strongly regular graphs from finite geometry: finite fields, formed
//! spaces, graph families, Kantor-style switching and symmetry computations.

pub mod catalog;
pub mod cli;
pub mod design;
pub mod families;
pub mod field;
pub mod graph6;
pub mod graph;
pub mod linalg;
pub mod perm;
pub mod report;
pub mod space;
pub mod srg;
pub mod survey;
pub mod switching;
pub mod symmetry;
