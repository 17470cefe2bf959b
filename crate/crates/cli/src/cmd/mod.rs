pub mod fo;
pub mod group;
pub mod srank;
pub mod tower;
pub mod word;
