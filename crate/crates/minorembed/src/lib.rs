//! Heuristic minor embedding: find a guest graph H as a minor of a host
//! graph G by iteratively growing vertex-models along weighted shortest
//! paths, as used to map problem graphs onto quantum-annealer hardware.

pub mod bench;
pub mod embed;
pub mod fileio;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod search;
pub mod verify;
