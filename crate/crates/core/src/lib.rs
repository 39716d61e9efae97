pub mod group;
pub mod space;
pub mod checker;
pub mod cli;
