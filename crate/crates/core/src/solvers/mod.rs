//! Best-approximation solvers on intersections of affine subspaces: C-DRM
//! and CRM built on the circumcenter operator, with Douglas–Rachford and
//! cyclic projections as baselines.

mod problem;
mod rate;
mod run;
mod steps;

pub use problem::Problem;
pub use rate::{estimate_rate, estimate_rate_from_distances, MIN_RATE_ITERATIONS};
pub use run::{run, Initializer, IterRecord, Method, SolverConfig, SolverTrace, Termination, SOLVER_DEDUP_TOL};
pub use steps::{cdrm_step, crm_step, dr_step, map_step, reflection_chain};
