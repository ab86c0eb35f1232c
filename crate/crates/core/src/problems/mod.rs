//! Problem generation with a planted Friedrichs angle, file formats for
//! point sets and problems, and CSV export of solver traces.

mod files;
mod generate;
mod table;

pub use files::{
    load_points, load_problem, parse_points, parse_problem_file, read_problem_file, save_points, save_problem,
    to_json_string, FileError, PointsFile, ProblemFile, SubspaceSpec,
};
pub use generate::{
    gaussian_vector, generate_two_subspace, planted_intersection_dim, random_orthonormal_basis, seeded_rng,
};
pub use table::{trace_rows, write_trace_csv, TraceRow, CSV_HEADER};
