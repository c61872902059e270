//! The algorithms, each returning a [`RunReport`].

pub mod deutsch;
pub mod report;
pub mod shor;
pub mod simon;

pub use deutsch::{deutsch_cleve, deutsch_jozsa, deutsch_xor};
pub use report::{
    bit_string, AlgorithmKind, GeometryEntry, RoundOutcome, RunReport, ShorRound, TraceEntry,
    Verdict, SCHEMA_VERSION,
};
pub use shor::{
    classical_postprocess, period_subspace, shor_factor, shor_geometry, shor_period_sample,
    OutputRegister, PeriodFinder, PeriodSample, ShorOptions,
};
pub use simon::{simon, simon_period_subspace};
