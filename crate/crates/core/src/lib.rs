//! Dyck paths, their zeta and reversal maps, and the symmetric functions
//! `χ(π; q, t)` and `χ̄(π; q, t)` built from words on their rows.

pub mod algebra;
pub mod chi;
pub mod dyck;
pub mod error;
pub mod partition;
pub mod symfunc;

pub use algebra::LaurentQT;
pub use chi::{chi, chi_bar, ChiResult, Flavor};
pub use dyck::{all_paths, Cell, DyckPath, ReadingLabels, Step, Word};
pub use error::{Error, Result};
pub use partition::{partitions_of, Partition};
pub use symfunc::{Basis, SymFunc};
