//! Command-line front end, dataset files and multi-threaded generation for
//! [`lambda_forge_core`].

pub mod dot;
pub mod exit;
pub mod files;
pub mod parallel;
pub mod reference;

pub use lambda_forge_core;
