//! Fixtures shared by the benchmarks.

use dyck_chi::{all_paths, DyckPath, Partition};

/// Every `stride`-th path of semilength `n`, so larger sizes stay affordable.
pub fn sample_paths(n: usize, stride: usize) -> Vec<DyckPath> {
    all_paths(n).into_iter().step_by(stride.max(1)).collect()
}

/// Partitions whose Inv and Quinv paths differ, used for the identity checks.
pub fn sample_partitions() -> Vec<Partition> {
    ["2,1", "3,2", "3,2,1", "4,2,1"]
        .iter()
        .map(|s| s.parse().expect("valid partition"))
        .collect()
}
