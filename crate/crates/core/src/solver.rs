//! Exact maximization of one linear form over the polygon.
//!
//! With the feasible set a bounded convex polygon, the maximum of `<d, x>`
//! sits on a vertex or, when exactly two adjacent vertices tie, on an edge.
//! Vertices are simply enumerated; in the plane that is both exact and fast.

use crate::geom::Vec2;
use crate::polytope::Polygon;
use crate::{Error, Result};

/// The maximizing face: a single vertex, or an edge given by two adjacent
/// vertex indices in counterclockwise order `(j, M(j+1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Face {
    Vertex(usize),
    Edge(usize, usize),
}

impl Face {
    /// Counterclockwise-first vertex of the face.
    pub fn ccw_first(&self) -> usize {
        match *self {
            Face::Vertex(j) => j,
            Face::Edge(a, _) => a,
        }
    }

    /// Counterclockwise-last vertex of the face.
    pub fn ccw_last(&self) -> usize {
        match *self {
            Face::Vertex(j) => j,
            Face::Edge(_, b) => b,
        }
    }

    pub fn vertex_ids(&self) -> Vec<usize> {
        match *self {
            Face::Vertex(j) => vec![j],
            Face::Edge(a, b) => vec![a, b],
        }
    }
}

/// Face of the polygon maximizing `<d, x>`. Two vertices tie when their
/// values differ by at most `eps * (1 + |max|)`; a tie across non-adjacent
/// vertices means the tolerance is too coarse for this polygon.
pub fn argmax_face(polygon: &Polygon, d: Vec2) -> Result<Face> {
    if d.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let n = polygon.vertex_count();
    let values: Vec<f64> = (1..=n).map(|j| d.dot(polygon.vertex(j))).collect();
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let tol = polygon.epsilon() * (1.0 + max.abs());
    let tied: Vec<usize> = (1..=n).filter(|&j| max - values[j - 1] <= tol).collect();
    match tied.as_slice() {
        [j] => Ok(Face::Vertex(*j)),
        [a, b] => {
            if polygon.wrap(a + 1) == *b {
                Ok(Face::Edge(*a, *b))
            } else if polygon.wrap(b + 1) == *a {
                Ok(Face::Edge(*b, *a))
            } else {
                Err(Error::NonAdjacentTie { a: *a, b: *b })
            }
        }
        more => Err(Error::NonAdjacentTie {
            a: more[0],
            b: more[more.len() - 1],
        }),
    }
}

/// Maximal value of `<d, x>` over the polygon.
pub fn argmax_value(polygon: &Polygon, d: Vec2) -> Result<f64> {
    if d.is_zero() {
        return Err(Error::ZeroDirection);
    }
    Ok((1..=polygon.vertex_count())
        .map(|j| d.dot(polygon.vertex(j)))
        .fold(f64::NEG_INFINITY, f64::max))
}
