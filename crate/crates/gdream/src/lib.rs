//! Desk-scale 3D Gaussian world model for action policies.
//!
//! The library reconstructs the current scene as a set of 3D Gaussians from a
//! compact learned token prefix, predicts how those Gaussians move over short
//! horizons, and supervises both with dense RGB, depth, and pseudo scene-flow
//! losses. At inference the reconstruction and prediction heads are dropped
//! and a flow-matching action policy conditions on the prefix alone.
//!
//! A synthetic scene generator whose ground truth is itself a set of rigidly
//! moving Gaussians closes the loop: every supervision signal has an exact
//! oracle, so the full pipeline is testable end to end on a laptop.
//!
//! Module map:
//! - [`geometry`]: camera model, quaternions, Gaussian state, activations
//! - [`render`]: differentiable forward splatting and its hand-written VJP
//! - [`scene`]: synthetic episode generator with exact flow/depth ground truth
//! - [`flow`]: block-matching 2D flow and pseudo 3D scene-flow sidecars
//! - [`nn`]: minimal parameter store and layers with explicit backward passes
//! - [`encoder`]: patch pyramid, learnable queries, temporal evolution blocks
//! - [`decoder`]: token-grid upsampling, reconstruction heads, velocity head
//! - [`objectives`]: reconstruction, prediction, and flow-matching losses
//! - [`policy`]: context assembly, velocity network, Euler action sampling
//! - [`train`]: two-stage trainer with AdamW, EMA, clipping, checkpoints
//! - [`io`]: binary array containers (GDEP / GDSC / GDCK) and PNG export
//! - [`cli`]: the `gd` command-line entry point

pub mod cli;
pub mod config;
pub mod decoder;
pub mod encoder;
pub mod error;
pub mod flow;
pub mod geometry;
pub mod io;
pub mod model;
pub mod nn;
pub mod objectives;
pub mod policy;
pub mod render;
pub mod scene;
pub mod train;

pub use error::GdError;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, GdError>;
