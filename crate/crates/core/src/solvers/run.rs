use std::fmt;
use std::str::FromStr;

use crate::affine::AffineSubspace;
use crate::circumcenter::CircumConfig;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vecspace::Vector;

use super::problem::Problem;
use super::steps::{cdrm_step, crm_step, dr_step, map_step};

/// Iterative method driven by [`run`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Circumcentered Douglas–Rachford, two sets.
    Cdrm,
    /// Circumcentered reflections, any number of sets.
    Crm,
    /// Douglas–Rachford, two sets.
    Dr,
    /// Cyclic alternating projections.
    Map,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Cdrm, Method::Crm, Method::Dr, Method::Map];

    pub fn label(self) -> &'static str {
        match self {
            Method::Cdrm => "cdrm",
            Method::Crm => "crm",
            Method::Dr => "dr",
            Method::Map => "map",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method `{s}`")))
    }
}

/// Starting point derived from the anchor `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Initializer {
    /// `z` itself.
    RawZ,
    /// `P_{U_1} z`.
    #[default]
    ProjectFirstSet,
    /// Projection onto `w + (M_1 + ⋯ + M_m)`, `w` a point of the intersection.
    ProjectSum,
}

impl Initializer {
    pub fn label(self) -> &'static str {
        match self {
            Initializer::RawZ => "raw",
            Initializer::ProjectFirstSet => "first",
            Initializer::ProjectSum => "sum",
        }
    }
}

impl FromStr for Initializer {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "raw" | "rawz" | "z" => Ok(Initializer::RawZ),
            "first" | "project-first" | "u" => Ok(Initializer::ProjectFirstSet),
            "sum" | "project-sum" => Ok(Initializer::ProjectSum),
            _ => Err(Error::InvalidArgument(format!("unknown initializer `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig<T> {
    pub max_iter: usize,
    /// Stop once `‖x^{k+1} − x^k‖ ≤ step_tol`.
    pub step_tol: T,
    /// Stop once the monitored point is within `sol_tol` of the reference solution.
    pub sol_tol: Option<T>,
    pub initializer: Initializer,
    pub circum: CircumConfig<T>,
}

/// Merge distance factor used inside the solvers. Reflection chains shrink
/// toward the solution, so the operator default would merge them long before
/// convergence.
pub const SOLVER_DEDUP_TOL: f64 = 1e-12;

impl<T: Scalar> Default for SolverConfig<T> {
    fn default() -> Self {
        let circum = CircumConfig {
            dedup_tol: T::lit(SOLVER_DEDUP_TOL).max(T::default_dedup_tol() * T::lit(1e-3)),
            ..CircumConfig::default()
        };
        Self {
            max_iter: 2000,
            step_tol: T::lit(1e-14),
            sol_tol: Some(T::lit(1e-10)),
            initializer: Initializer::default(),
            circum,
        }
    }
}

impl<T: Scalar> SolverConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if self.max_iter == 0 {
            return Err(Error::InvalidArgument("max_iter must be at least 1".into()));
        }
        if !(self.step_tol > T::zero()) || self.sol_tol.is_some_and(|t| !(t > T::zero())) {
            return Err(Error::InvalidArgument("tolerances must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    StepTolerance,
    SolutionTolerance,
    MaxIterations,
}

impl Termination {
    pub fn label(self) -> &'static str {
        match self {
            Termination::StepTolerance => "step-tolerance",
            Termination::SolutionTolerance => "solution-tolerance",
            Termination::MaxIterations => "max-iterations",
        }
    }
}

/// Per-iteration measurements. Row 0 describes the starting point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterRecord<T> {
    pub iter: usize,
    pub step_norm: T,
    pub dist_to_solution: T,
    pub residual: T,
}

/// Full history of a run.
///
/// Distances and residuals refer to the iterate itself, except for
/// Douglas–Rachford where they refer to the shadow `P_{U_1} x^k` (also kept
/// in `shadows`), since only the shadow converges to the solution.
#[derive(Debug, Clone)]
pub struct SolverTrace<T> {
    pub method: Method,
    pub iterates: Vec<Vector<T>>,
    pub shadows: Option<Vec<Vector<T>>>,
    pub records: Vec<IterRecord<T>>,
    pub termination: Termination,
}

impl<T: Scalar> SolverTrace<T> {
    /// Number of steps taken.
    pub fn iterations(&self) -> usize {
        self.records.len() - 1
    }

    pub fn distances(&self) -> Vec<T> {
        self.records.iter().map(|r| r.dist_to_solution).collect()
    }

    pub fn final_iterate(&self) -> &Vector<T> {
        self.iterates.last().expect("trace holds the starting point")
    }

    /// Final monitored point: the last shadow for DR, the last iterate otherwise.
    pub fn final_estimate(&self) -> &Vector<T> {
        match &self.shadows {
            Some(s) => s.last().expect("trace holds the starting point"),
            None => self.final_iterate(),
        }
    }

    pub fn final_distance(&self) -> T {
        self.records.last().expect("trace holds the starting point").dist_to_solution
    }
}

fn initial_point<T: Scalar>(problem: &Problem<T>, init: Initializer, tol: T) -> Result<Vector<T>> {
    let z = problem.z();
    match init {
        Initializer::RawZ => Ok(z.clone()),
        Initializer::ProjectFirstSet => problem.subspaces()[0].project(z),
        Initializer::ProjectSum => {
            let directions: Vec<Vector<T>> = problem
                .subspaces()
                .iter()
                .flat_map(|s| s.basis().iter().cloned())
                .collect();
            let sum = AffineSubspace::from_span(problem.intersection().base().clone(), &directions, tol)?;
            sum.project(z)
        }
    }
}

fn step<T: Scalar>(method: Method, sets: &[AffineSubspace<T>], x: &Vector<T>, cfg: &CircumConfig<T>) -> Result<Vector<T>> {
    match method {
        Method::Cdrm => cdrm_step(&sets[0], &sets[1], x, cfg),
        Method::Crm => crm_step(sets, x, cfg),
        Method::Dr => dr_step(&sets[0], &sets[1], x),
        Method::Map => map_step(sets, x),
    }
}

/// Runs `method` on `problem` from the configured starting point until a
/// stopping rule fires.
pub fn run<T: Scalar>(method: Method, problem: &Problem<T>, cfg: &SolverConfig<T>) -> Result<SolverTrace<T>> {
    cfg.validate()?;
    let sets = problem.subspaces();
    if matches!(method, Method::Cdrm | Method::Dr) && sets.len() != 2 {
        return Err(Error::InvalidArgument(format!(
            "{method} handles exactly two subspaces, problem has {}",
            sets.len()
        )));
    }
    let shadowed = method == Method::Dr;
    let monitor = |x: &Vector<T>| -> Vector<T> {
        if shadowed {
            sets[0].project(x).expect("dimension checked at construction")
        } else {
            x.clone()
        }
    };
    let measure = |iter: usize, step_norm: T, m: &Vector<T>| IterRecord {
        iter,
        step_norm,
        dist_to_solution: m.distance(problem.solution()),
        residual: problem.residual(m),
    };

    let mut x = initial_point(problem, cfg.initializer, cfg.circum.rank_tol)?;
    let m0 = monitor(&x);
    let mut records = vec![measure(0, T::zero(), &m0)];
    let mut shadows = shadowed.then(|| vec![m0]);
    let mut iterates = vec![x.clone()];
    let mut termination = Termination::MaxIterations;

    for k in 1..=cfg.max_iter {
        let next = step(method, sets, &x, &cfg.circum).map_err(|e| match e {
            Error::DegenerateStep { .. } => Error::DegenerateStep { iteration: k },
            other => other,
        })?;
        let step_norm = next.distance(&x);
        x = next;
        let m = monitor(&x);
        let record = measure(k, step_norm, &m);
        records.push(record);
        iterates.push(x.clone());
        if let Some(s) = shadows.as_mut() {
            s.push(m);
        }
        if cfg.sol_tol.is_some_and(|t| record.dist_to_solution <= t) {
            termination = Termination::SolutionTolerance;
            break;
        }
        if step_norm <= cfg.step_tol {
            termination = Termination::StepTolerance;
            break;
        }
    }
    let last = records.last().unwrap();
    log::info!(
        "{method}: {} after {} iterations, distance {:e}",
        termination.label(),
        last.iter,
        last.dist_to_solution
    );
    Ok(SolverTrace {
        method,
        iterates,
        shadows,
        records,
        termination,
    })
}
