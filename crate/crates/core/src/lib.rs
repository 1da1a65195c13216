pub mod error;
pub mod root_system;
pub mod weyl;
pub mod affine;
pub mod gallery;
pub mod orientation;
pub mod moment_graph;
pub mod oracle;
pub mod render;
