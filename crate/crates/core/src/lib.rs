pub mod constructions;
pub mod difference;
pub mod group;
pub mod search;
pub mod sequences;
pub mod sts;
pub mod system;
pub mod verify;
