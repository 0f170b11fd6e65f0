//! Sylow 2-subgroups of PSU₃(F_{2ⁿ}) and Sz(2^{2n+1}), their structural
//! checks, and computational Cohen–Macaulay certificates for their mod-2
//! cohomology rings.

pub mod cmcheck;
pub mod f2la;
pub mod fixtures;
pub mod gfield;
pub mod grp;
pub mod report;
pub mod resolve;
pub mod sylow;
