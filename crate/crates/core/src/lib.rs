//! Exact computations with finite complex reflection groups, Weyl groups and
//! affine Weyl groups, together with brute-force checks of the generating
//! functions attached to them.

pub mod exactnum;
pub mod exec;
pub mod groups;
pub mod linalg;
pub mod reps;
pub mod rootsys;
pub mod series;
pub mod weylpoincare;
