//! Experiments on the IM translation: replay of the soundness argument,
//! a bounded soundness suite, and searches for faithfulness failures.

pub mod replay;
pub mod search;
pub mod soundness;

pub use replay::{replay_steps, replay_theorem31, replay_theorem31_with, CheckMode, Countermodel, ReplayReport, ReplayStep, StepResult};
pub use search::{faithfulness_search, reproduce_I_counterexample, CounterexampleReport, SearchOptions, SearchReport, SearchStrategy, PHI_0};
pub use soundness::{soundness_suite, SoundnessReport};
