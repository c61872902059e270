//! Statevector simulation of Deutsch's XOR algorithm, its Cleve and
//! Deutsch-Jozsa variants, Simon's algorithm and Shor's algorithm, together
//! with a subspace-lattice toolkit for checking which closed subspace the
//! final state lands in.

pub mod algorithms;
pub mod error;
pub mod number_theory;
pub mod oracles;
pub mod reproduce;
pub mod rng;
pub mod statevector;
pub mod subspace;

pub use error::{Error, Result};
pub use rng::SimRng;
