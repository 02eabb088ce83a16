//! Cluster pipeline: configuration, the working subgraph, capture probes, and
//! the kernelization rounds.

mod config;
mod kernel;
mod probes;
mod working;

pub use config::{PipelineConfig, Ratio};
pub use kernel::{
    build_kernel, contract_cores, remove_passive_and_gate, shave_and_core, GateOutcome,
    KernelOutput, RoundStats,
};
pub use probes::{
    batch_non_captured, captured_probe, half_concentration_guard, recurse_step,
    uncaptured_set_probe, BatchRun, CapturedProbeRun, GuardOutcome, GuardRun, ProbeOutcome,
    StartMode, TimeCharge,
};
pub use working::{ChargeLedger, Component, ComponentView, WorkingSubgraph};
