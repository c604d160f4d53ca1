//! Type-A quivers: recognition, decomposition and minimal-length sequences.

mod procedures;
mod regions;
mod structure;

pub use procedures::{cycle_config_mgs, fan_mgs, isolate, minimal_length, minimal_mgs, zigzag_fan_mgs, zigzag_mgs};
pub use regions::{region_decomposition, RegionTriangle, Regions};
pub use structure::{
    cycle_configs, cycle_count, decompose, is_type_a, three_cycles, CycleConfig, Decomposition, Role, Triangle,
};
