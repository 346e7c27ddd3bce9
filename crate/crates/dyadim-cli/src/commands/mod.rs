pub mod dims;
pub mod estimate;
pub mod expand;
pub mod sample;
pub mod schedule;
