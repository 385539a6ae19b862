//! `eqsurf` computes the `RO(C2)`-graded Bredon cohomology of surfaces with
//! involution, with constant `Z/2` coefficients.
//!
//! Everything is bigraded: the first grading `p` is the topological dimension
//! and the second grading `q` is the weight (number of sign representations).
//! The cohomology of a point is the ring `M2`, and the cohomology of any
//! finite complex decomposes as a finite direct sum of shifted free modules
//! `Σ^{p,q} M2` and shifted antipodal modules `Σ^{s,0} A_r`.
//!
//! The crate is organised around that decomposition:
//!
//! * [`coeff_ring`] — exact arithmetic in `M2` and in the antipodal
//!   coefficient rings `Λ_r = τ⁻¹M2/(ρ^{r+1})`.
//! * [`nice_modules`] — finite sums of free and antipodal summands, with
//!   per-bidegree dimensions, scalar actions, and grid rendering.
//! * [`graded_maps`] — graded basis reduction over `Z/2[t]`, maps between
//!   nice modules with per-bidegree rank certification, and the structure
//!   transfer used for Thom spaces.
//! * [`surfaces`] — a surgery grammar for surfaces with involution,
//!   invariant recursion, and closed-form cohomology decompositions.
//! * [`classes`] — fundamental classes, intersection products, Thom-class
//!   bookkeeping, and ring presentations for the worked catalog.
//! * [`verification`] — cross-checks (structure theorem, forgetful long
//!   exact sequence, τ-isomorphism range, top-class location) and a seeded
//!   fuzzing harness.
//! * [`dsl`] — parser and printer for the surface description language used
//!   by the `eqsurf` command-line tool.
//!
//! A narrative guide with runnable examples lives in the `book/` directory of
//! the repository; its code blocks are compiled and run as doc-tests.

pub mod classes;
pub mod coeff_ring;
pub mod dsl;
pub mod f2;
pub mod graded_maps;
pub mod nice_modules;
pub mod surfaces;
pub mod verification;

#[cfg(doctest)]
mod guide;

use serde::{Deserialize, Serialize};

/// A spot `(p, q)` in the bigraded plane: `p` is the topological dimension,
/// `q` the weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bidegree {
    pub p: i64,
    pub q: i64,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { p: 0, q: 0 };

    pub fn new(p: i64, q: i64) -> Self {
        Bidegree { p, q }
    }
}

impl std::ops::Add for Bidegree {
    type Output = Bidegree;
    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.p + rhs.p, self.q + rhs.q)
    }
}

impl std::ops::Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.p - rhs.p, self.q - rhs.q)
    }
}

impl std::fmt::Display for Bidegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// A finite rectangular window of bidegrees, used by grid rendering and the
/// per-bidegree verifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub p_min: i64,
    pub p_max: i64,
    pub q_min: i64,
    pub q_max: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("empty or inverted window: p {p_min}..{p_max}, q {q_min}..{q_max}")]
pub struct WindowError {
    pub p_min: i64,
    pub p_max: i64,
    pub q_min: i64,
    pub q_max: i64,
}

impl Window {
    pub fn new(p_min: i64, p_max: i64, q_min: i64, q_max: i64) -> Result<Self, WindowError> {
        if p_min > p_max || q_min > q_max {
            return Err(WindowError { p_min, p_max, q_min, q_max });
        }
        Ok(Window { p_min, p_max, q_min, q_max })
    }

    /// Default window matching the range visible in the worked figures.
    pub fn default_range() -> Self {
        Window { p_min: -1, p_max: 4, q_min: -4, q_max: 5 }
    }

    pub fn cells(&self) -> impl Iterator<Item = Bidegree> + '_ {
        let qs = self.q_min..=self.q_max;
        (self.p_min..=self.p_max)
            .flat_map(move |p| qs.clone().map(move |q| Bidegree::new(p, q)))
    }
}
