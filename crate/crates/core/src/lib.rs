//! Geometric analysis of planar multiobjective linear programs.
//!
//! The feasible region is a closed bounded convex polygon `S` in the plane,
//! given as an intersection of halfplanes `a1*x1 + a2*x2 <= b` (optionally
//! with `x >= 0`). An objective bundle is a list of `K >= 2` linear forms,
//! each identified with its gradient vector. The crate computes:
//!
//! * the polygon itself ([`polytope`]): vertex enumeration, counterclockwise
//!   ordering, cyclic indexing, boundary chains;
//! * the gradient cone of a bundle and its two extreme rays ([`cone`]);
//! * maximization of a single linear form over the polygon ([`solver`]);
//! * the set of efficient (Pareto-optimal) solutions as a connected chain of
//!   boundary vertices and edges ([`efficient_set`]);
//! * the open interval of gradient directions that leave the efficient chain
//!   unchanged, for one objective and for a whole bundle ([`sensitivity`]);
//! * a canonical classification of bundles by their efficient chain
//!   ([`classify`]);
//! * an independent brute-force cross-check based on weighted-sum
//!   scalarization and direct dominance scans ([`oracle`]).
//!
//! All angle handling works on explicit branch cuts so that signed angles
//! near a cone stay mutually comparable; see [`angles`].

pub mod angles;
pub mod classify;
pub mod cone;
pub mod efficient_set;
mod error;
pub mod geom;
pub mod oracle;
pub mod polytope;
pub mod problem;
pub mod random;
pub mod sensitivity;
pub mod solver;

pub use error::{Error, Result};
pub use geom::Vec2;

/// Default absolute tolerance: separates genuine ties from roundoff for
/// coordinate data of magnitude around one to a few hundred.
pub const DEFAULT_EPSILON: f64 = 1e-9;

#[cfg(test)]
pub(crate) mod testutil {
    use crate::cone::ObjectiveBundle;
    use crate::polytope::{HalfPlane, Polygon};
    use crate::{Vec2, DEFAULT_EPSILON};

    /// Nine-constraint reference instance: a 9-gon with first vertex (4, 1).
    pub fn ninegon_constraints() -> Vec<HalfPlane> {
        vec![
            HalfPlane::new(1.0, -1.0, 3.0),
            HalfPlane::new(2.0, -1.0, 9.0),
            HalfPlane::new(2.0, 1.0, 19.0),
            HalfPlane::new(1.0, 2.0, 20.0),
            HalfPlane::new(0.0, 1.0, 8.0),
            HalfPlane::new(-1.0, 1.0, 6.0),
            HalfPlane::new(-1.0, 0.0, 0.0),
            HalfPlane::new(-2.0, -1.0, -4.0),
            HalfPlane::new(-1.0, -3.0, -7.0),
        ]
    }

    pub fn ninegon_vertices() -> Vec<Vec2> {
        vec![
            Vec2::new(4.0, 1.0),
            Vec2::new(6.0, 3.0),
            Vec2::new(7.0, 5.0),
            Vec2::new(6.0, 7.0),
            Vec2::new(4.0, 8.0),
            Vec2::new(2.0, 8.0),
            Vec2::new(0.0, 6.0),
            Vec2::new(0.0, 4.0),
            Vec2::new(1.0, 2.0),
        ]
    }

    pub fn ninegon() -> Polygon {
        Polygon::from_halfplanes(&ninegon_constraints(), true, DEFAULT_EPSILON).unwrap()
    }

    /// The six objective gradients that go with the nine-gon instance.
    pub fn ninegon_gradients() -> Vec<Vec2> {
        vec![
            Vec2::new(4.0 / 3.0, -1.0),
            Vec2::new(4.0 / 3.0, -2.0),
            Vec2::new(5.0 / 4.0, -3.0 / 4.0),
            Vec2::new(6.0, 0.0),
            Vec2::new(1.0, -2.0),
            Vec2::new(1.0, 4.0),
        ]
    }

    pub fn ninegon_bundle() -> ObjectiveBundle {
        ObjectiveBundle::new(ninegon_gradients()).unwrap()
    }

    pub fn unit_square() -> Polygon {
        let hs = vec![HalfPlane::new(1.0, 0.0, 1.0), HalfPlane::new(0.0, 1.0, 1.0)];
        Polygon::from_halfplanes(&hs, true, DEFAULT_EPSILON).unwrap()
    }
}
