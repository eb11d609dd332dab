pub mod checks;
pub mod exact;
pub mod extsq;
pub mod g31;
pub mod grpengine;
pub mod linalg;
pub mod outer_s6;
pub mod report;
pub mod sgnperm;
