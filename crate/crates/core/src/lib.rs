//! Competing two-color bootstrap percolation on the Erdős–Rényi random graph
//! `G(n, p)`.
//!
//! Two irreversible activation processes (red and black) spread concurrently
//! on a random graph: a white node that wakes up (unit-rate Poisson clock)
//! takes color `S` when its `S`-colored neighbors outnumber the opposite
//! color by at least a threshold `r >= 2`. This crate provides:
//!
//! * [`exact`] — a reference simulator that materializes the graph and the
//!   per-node clocks and runs the continuous-time process literally
//!   (intended for small `n`),
//! * [`chain`] — a scalable simulator of the embedded jump chain that never
//!   materializes the graph, propagating activation marks by binomial
//!   recipient sampling (amortized `O(n·p)` work per step),
//! * [`theory`] — the numeric engine for the asymptotic objects: the rate
//!   functions `beta`, their zeros, the critical size, fluid-limit ODE
//!   solutions, `r = 2` closed forms, timing integrals, and tail bounds,
//! * [`coupling`] — coupled runs sharing clock and mark randomness, used to
//!   check pathwise monotonicity properties.
//!
//! The crate is `no_std`-compatible (with `alloc`); the companion `cbp-cli`
//! crate carries IO, file formats, experiment orchestration, and the CLI.

#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_docs)]

extern crate alloc;

pub mod chain;
pub mod coupling;
pub mod exact;
pub mod graph;
pub mod marks;
pub mod params;
pub mod rng;
pub mod sim;
pub mod theory;

pub(crate) mod math;

pub use params::{g_critical, make_seeds, ModelParams, NodeColor, Regime, RegimeSpec};
pub use rng::RngStream;
pub use sim::{FinalResult, Mode, StopRule, Trajectory, TrajectoryRecording};
