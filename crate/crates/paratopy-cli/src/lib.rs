//! IO, verification, and benchmarking companions to the `paratopy` crate:
//! the text formats (grids, orthogonal arrays, catalogs), seeded random
//! generation, independent oracle implementations, and the self-check
//! suites behind the `paratopy verify` command.

pub mod bench;
pub mod format;
pub mod oracle;
pub mod random;
pub mod verify;
