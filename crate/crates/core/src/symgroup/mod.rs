//! Partitions, permutations and orbit/stabilizer machinery for `S_n`.

mod orbit;
mod partition;
mod permutation;

pub use orbit::{closure, orbit_with_stabilizer, GroupElement, OrbitResult, DEFAULT_ORBIT_CAP};
pub use partition::{centralizer_order, enumerate_partitions, Partition, MAX_PARTITION_N};
pub use permutation::{cycle_type, factorial, Permutation};
