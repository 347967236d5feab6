//! The feasible polygon: construction from halfplanes, counterclockwise
//! vertex ring, cyclic indexing, and boundary chains.
//!
//! Vertex indices are 1-based throughout, matching the cyclic wrap map
//! `M(alpha) = alpha mod n` with multiples of `n` mapped to `n` itself.
//! The ring starts at the vertex with minimal second coordinate (ties broken
//! by the first coordinate) and runs counterclockwise.

use std::f64::consts::PI;

use crate::angles::{to_polar, wrap_to_branch};
use crate::geom::{point_segment_distance, Vec2};
use crate::{Error, Result};

/// One linear constraint `a1*x1 + a2*x2 <= b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane {
    pub a1: f64,
    pub a2: f64,
    pub b: f64,
}

impl HalfPlane {
    pub fn new(a1: f64, a2: f64, b: f64) -> Self {
        HalfPlane { a1, a2, b }
    }

    pub fn normal(&self) -> Vec2 {
        Vec2::new(self.a1, self.a2)
    }

    /// Signed distance from `p` to the boundary line, positive outside.
    pub fn signed_margin(&self, p: Vec2) -> f64 {
        (self.normal().dot(p) - self.b) / self.normal().norm()
    }
}

/// Incoming and outgoing boundary edges at a vertex, in polar form on a
/// caller-chosen branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeAngles {
    /// Angle of `v(j) - v(M(j-1))`.
    pub theta1: f64,
    pub r1: f64,
    /// Angle of `v(M(j+1)) - v(j)`.
    pub theta2: f64,
    pub r2: f64,
}

/// A run of `count >= 1` consecutive vertices along the boundary, starting
/// at 1-based index `start`. `count == 1` is a single vertex; `count == n`
/// covers every vertex and omits exactly one closing edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Chain {
    pub start: usize,
    pub count: usize,
}

impl Chain {
    pub fn new(start: usize, count: usize) -> Self {
        Chain { start, count }
    }
}

/// One boundary segment between consecutive chain vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub from: usize,
    pub to: usize,
    pub a: Vec2,
    pub b: Vec2,
}

/// A closed bounded strictly convex polygon, counterclockwise.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Vec2>,
    eps: f64,
}

impl Polygon {
    /// Enumerate the vertices of `{x : constraints hold}` (optionally
    /// intersected with the nonnegative quadrant) and assemble the polygon.
    ///
    /// Every pair of constraint boundaries is intersected; points feasible
    /// for all constraints within `eps` survive, get merged when closer than
    /// `eps`, and are hull-ordered counterclockwise. Regions that are empty,
    /// unbounded, or flat report the matching error.
    pub fn from_halfplanes(
        constraints: &[HalfPlane],
        include_nonnegativity: bool,
        eps: f64,
    ) -> Result<Polygon> {
        let mut hs: Vec<HalfPlane> = constraints.to_vec();
        if include_nonnegativity {
            hs.push(HalfPlane::new(-1.0, 0.0, 0.0));
            hs.push(HalfPlane::new(0.0, -1.0, 0.0));
        }
        for (i, h) in hs.iter().enumerate() {
            if h.normal().is_zero() {
                return Err(Error::ZeroNormal { index: i + 1 });
            }
        }

        if normals_span_line_only(&hs, eps) {
            return rank_one_outcome(&hs, eps);
        }

        let candidates = feasible_intersections(&hs, eps);
        if candidates.is_empty() {
            // Normals span the plane, so the region contains no line; were it
            // nonempty it would have a vertex among the intersections.
            return Err(Error::EmptyRegion);
        }
        if let Some(direction) = recession_direction(&hs, eps) {
            return Err(Error::UnboundedRegion {
                direction_deg: direction.to_degrees(),
            });
        }

        let ring = convex_hull_ccw(candidates, eps);
        if ring.len() < 3 {
            return Err(Error::DegenerateRegion {
                extreme_points: ring.len(),
            });
        }
        Polygon::from_vertices(ring, eps)
    }

    /// Build a polygon from an explicit strictly convex vertex ring. The ring
    /// may arrive in either orientation and any rotation; it is normalized to
    /// counterclockwise order with the canonical start vertex. Coordinates
    /// must be finite.
    pub fn from_vertices(mut vertices: Vec<Vec2>, eps: f64) -> Result<Polygon> {
        if vertices.len() < 3 || vertices.iter().any(|v| !v.x.is_finite() || !v.y.is_finite()) {
            return Err(Error::DegenerateRegion {
                extreme_points: vertices.len(),
            });
        }
        let area: f64 = signed_area_of(&vertices);
        if area.abs() <= eps {
            return Err(Error::DegenerateRegion {
                extreme_points: vertices.len(),
            });
        }
        if area < 0.0 {
            vertices.reverse();
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if a.dist(b) <= eps {
                return Err(Error::DegenerateRegion { extreme_points: n });
            }
            if (b - a).cross(c - b) <= eps {
                return Err(Error::DegenerateRegion { extreme_points: n });
            }
        }
        let start = canonical_start(&vertices);
        vertices.rotate_left(start);
        Ok(Polygon { vertices, eps })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Vertex by 1-based index.
    pub fn vertex(&self, j: usize) -> Vec2 {
        self.vertices[j - 1]
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn epsilon(&self) -> f64 {
        self.eps
    }

    /// Cyclic index map: `alpha mod n`, with exact multiples of `n` mapped
    /// to `n`. `alpha` must be at least 1.
    pub fn wrap(&self, alpha: usize) -> usize {
        debug_assert!(alpha >= 1);
        (alpha - 1) % self.vertices.len() + 1
    }

    /// Edge vector from vertex `j` to its counterclockwise successor.
    pub fn edge_vector(&self, j: usize) -> Vec2 {
        self.vertex(self.wrap(j + 1)) - self.vertex(j)
    }

    /// Unnormalized outward normal of the edge leaving vertex `j`.
    pub fn outward_normal(&self, j: usize) -> Vec2 {
        self.edge_vector(j).rot_cw90()
    }

    /// Polar form of the two edges meeting at vertex `j`, reported on the
    /// branch centered at `branch_center`. Polygon invariants rule out
    /// zero-length edges, so this cannot fail.
    pub fn edge_angles(&self, j: usize, branch_center: f64) -> EdgeAngles {
        let n = self.vertices.len();
        let incoming = self.vertex(j) - self.vertex(self.wrap(j + n - 1));
        let outgoing = self.vertex(self.wrap(j + 1)) - self.vertex(j);
        let p1 = to_polar(incoming, branch_center).expect("polygon edges are nonzero");
        let p2 = to_polar(outgoing, branch_center).expect("polygon edges are nonzero");
        EdgeAngles {
            theta1: p1.phi,
            r1: p1.r,
            theta2: p2.phi,
            r2: p2.r,
        }
    }

    /// Turn angle at vertex `j`, in (0, pi) for a strictly convex polygon.
    pub fn exterior_angle(&self, j: usize) -> f64 {
        let ea = self.edge_angles(j, 0.0);
        wrap_to_branch(ea.theta2 - ea.theta1, PI)
    }

    pub fn signed_area(&self) -> f64 {
        signed_area_of(&self.vertices)
    }

    pub fn centroid(&self) -> Vec2 {
        let n = self.vertices.len() as f64;
        let sum = self
            .vertices
            .iter()
            .fold(Vec2::ZERO, |acc, &v| acc + v);
        sum * (1.0 / n)
    }

    /// Containment within the polygon's tolerance.
    pub fn contains(&self, p: Vec2) -> bool {
        let n = self.vertices.len();
        (1..=n).all(|j| {
            let e = self.edge_vector(j);
            e.cross(p - self.vertex(j)) >= -self.eps * (1.0 + e.norm())
        })
    }

    pub fn validate_chain(&self, chain: Chain) -> Result<()> {
        let n = self.vertices.len();
        if chain.start < 1 || chain.start > n || chain.count < 1 || chain.count > n {
            return Err(Error::InvalidChain {
                start: chain.start,
                count: chain.count,
                n,
            });
        }
        Ok(())
    }

    /// 1-based indices of the chain's vertices in boundary order.
    pub fn chain_vertices(&self, chain: Chain) -> Result<Vec<usize>> {
        self.validate_chain(chain)?;
        Ok((0..chain.count)
            .map(|l| self.wrap(chain.start + l))
            .collect())
    }

    /// The `count - 1` segments joining consecutive chain vertices; empty
    /// for a singleton chain.
    pub fn boundary_curve(&self, chain: Chain) -> Result<Vec<Segment>> {
        let ids = self.chain_vertices(chain)?;
        Ok(ids
            .windows(2)
            .map(|w| Segment {
                from: w[0],
                to: w[1],
                a: self.vertex(w[0]),
                b: self.vertex(w[1]),
            })
            .collect())
    }

    /// Whether `p` lies on the chain (on some segment, or at the singleton
    /// vertex) within the polygon's tolerance.
    pub fn point_on_chain(&self, chain: Chain, p: Vec2) -> Result<bool> {
        let segs = self.boundary_curve(chain)?;
        if segs.is_empty() {
            return Ok(p.dist(self.vertex(chain.start)) <= self.eps);
        }
        Ok(segs
            .iter()
            .any(|s| point_segment_distance(p, s.a, s.b) <= self.eps))
    }
}

fn signed_area_of(vertices: &[Vec2]) -> f64 {
    let n = vertices.len();
    let twice: f64 = (0..n)
        .map(|i| vertices[i].cross(vertices[(i + 1) % n]))
        .sum();
    twice / 2.0
}

fn canonical_start(vertices: &[Vec2]) -> usize {
    let mut best = 0;
    for (i, v) in vertices.iter().enumerate() {
        let b = vertices[best];
        if v.y < b.y || (v.y == b.y && v.x < b.x) {
            best = i;
        }
    }
    best
}

fn normals_span_line_only(hs: &[HalfPlane], eps: f64) -> bool {
    let first = hs[0].normal();
    hs.iter().all(|h| {
        let n = h.normal();
        first.cross(n).abs() <= eps * first.norm() * n.norm()
    })
}

/// All constraint normals are parallel: the region is a strip, a halfplane,
/// or empty. Never a polygon.
fn rank_one_outcome(hs: &[HalfPlane], eps: f64) -> Result<Polygon> {
    let u = hs[0].normal().unit();
    let mut upper: Option<f64> = None;
    let mut lower: Option<f64> = None;
    for h in hs {
        let n = h.normal();
        let offset = h.b / n.norm();
        if n.dot(u) > 0.0 {
            upper = Some(upper.map_or(offset, |v| v.min(offset)));
        } else {
            lower = Some(lower.map_or(-offset, |v| v.max(-offset)));
        }
    }
    let along = u.rot_cw90().angle().to_degrees();
    match (lower, upper) {
        (Some(lo), Some(hi)) if lo > hi + eps => Err(Error::EmptyRegion),
        (Some(_), None) => Err(Error::UnboundedRegion {
            direction_deg: u.angle().to_degrees(),
        }),
        (None, Some(_)) | (None, None) => Err(Error::UnboundedRegion {
            direction_deg: (-u).angle().to_degrees(),
        }),
        _ => Err(Error::UnboundedRegion {
            direction_deg: along,
        }),
    }
}

/// Midpoint of the widest angular gap between constraint normals, when that
/// gap reaches half a turn: a direction no constraint pushes back against.
fn recession_direction(hs: &[HalfPlane], eps: f64) -> Option<f64> {
    let mut dirs: Vec<f64> = hs.iter().map(|h| h.normal().angle()).collect();
    dirs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut widest = f64::NEG_INFINITY;
    let mut mid = 0.0;
    for i in 0..dirs.len() {
        let a = dirs[i];
        let b = if i + 1 < dirs.len() {
            dirs[i + 1]
        } else {
            dirs[0] + 2.0 * PI
        };
        if b - a > widest {
            widest = b - a;
            mid = (a + b) / 2.0;
        }
    }
    (widest >= PI - eps).then(|| wrap_to_branch(mid, 0.0))
}

fn feasible_intersections(hs: &[HalfPlane], eps: f64) -> Vec<Vec2> {
    let mut points: Vec<Vec2> = Vec::new();
    for i in 0..hs.len() {
        for j in (i + 1)..hs.len() {
            let (hi, hj) = (hs[i], hs[j]);
            let det = hi.normal().cross(hj.normal());
            if det.abs() <= eps * hi.normal().norm() * hj.normal().norm() {
                continue;
            }
            // Adding 0.0 folds IEEE negative zeros into plain zeros.
            let p = Vec2::new(
                (hi.b * hj.a2 - hj.b * hi.a2) / det + 0.0,
                (hi.a1 * hj.b - hj.a1 * hi.b) / det + 0.0,
            );
            if hs.iter().all(|h| h.signed_margin(p) <= eps)
                && !points.iter().any(|q| q.dist(p) <= eps)
            {
                points.push(p);
            }
        }
    }
    points
}

/// Andrew's monotone chain with strict turns: collinear middle points drop
/// out, which merges vertices produced by redundant tangent constraints.
fn convex_hull_ccw(mut points: Vec<Vec2>, eps: f64) -> Vec<Vec2> {
    points.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    if points.len() <= 2 {
        return points;
    }
    let build = |iter: &mut dyn Iterator<Item = Vec2>| {
        let mut out: Vec<Vec2> = Vec::new();
        for p in iter {
            while out.len() >= 2 {
                let a = out[out.len() - 2];
                let b = out[out.len() - 1];
                if (b - a).cross(p - a) <= eps {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        out
    };
    let mut lower = build(&mut points.iter().copied());
    let mut upper = build(&mut points.iter().rev().copied());
    lower.pop();
    upper.pop();
    lower.append(&mut upper);
    lower
}
