//! Reproducible random instances for verification sweeps.
//!
//! Polygons come from points on a circle: sorted angles with bounded jitter
//! keep every vertex strictly convex and every exterior angle comfortably
//! above the sample resolution of the brute-force oracle. The constraints
//! handed to the vertex enumerator are the supporting lines of the edges, so
//! generation also exercises the construction path. Bundles are a fan of
//! unit-scale gradients inside a prescribed cone width.

use std::f64::consts::TAU;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::cone::ObjectiveBundle;
use crate::geom::Vec2;
use crate::polytope::{HalfPlane, Polygon};
use crate::DEFAULT_EPSILON;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

fn circle_polygon(rng: &mut impl Rng, n: usize, jitter: f64) -> Polygon {
    let weights: Vec<f64> = (0..n).map(|_| rng.gen_range(1.0 - jitter..1.0 + jitter)).collect();
    let total: f64 = weights.iter().sum();
    let offset = rng.gen_range(0.0..TAU);
    let radius = rng.gen_range(1.5..5.0);
    let center = Vec2::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
    let mut angle = offset;
    let vertices: Vec<Vec2> = weights
        .iter()
        .map(|w| {
            angle += w / total * TAU;
            center + Vec2::from_angle(angle) * radius
        })
        .collect();
    let halfplanes: Vec<HalfPlane> = (0..n)
        .map(|i| {
            let a = vertices[i];
            let normal = (vertices[(i + 1) % n] - a).rot_cw90();
            HalfPlane::new(normal.x, normal.y, normal.dot(a))
        })
        .collect();
    let p = Polygon::from_halfplanes(&halfplanes, false, DEFAULT_EPSILON)
        .expect("circle points give a bounded strictly convex region");
    debug_assert_eq!(p.vertex_count(), n);
    p
}

/// A polygon with 3 to 12 vertices; every exterior angle is at least about
/// 16 degrees.
pub fn random_polygon(rng: &mut impl Rng) -> Polygon {
    let n = rng.gen_range(3..=12);
    circle_polygon(rng, n, 0.3)
}

/// A rounder polygon with 9 to 12 vertices and exterior angles below about
/// 60 degrees, so that a tolerance interval never spans half a turn when
/// the cone is at most 50 degrees wide.
pub fn random_polygon_smooth(rng: &mut impl Rng) -> Polygon {
    let n = rng.gen_range(9..=12);
    circle_polygon(rng, n, 0.2)
}

/// `k >= 2` gradients spanning exactly `width` radians: one on each extreme
/// ray and the rest strictly inside, with near-unit norms, in shuffled
/// order.
pub fn random_bundle(rng: &mut impl Rng, k: usize, width: f64) -> ObjectiveBundle {
    assert!(k >= 2);
    let base = rng.gen_range(0.0..TAU);
    let mut angles = vec![base, base + width];
    for _ in 2..k {
        angles.push(base + rng.gen_range(0.05..0.95) * width);
    }
    // Fisher-Yates shuffle.
    for i in (1..angles.len()).rev() {
        angles.swap(i, rng.gen_range(0..=i));
    }
    let gradients = angles
        .into_iter()
        .map(|a| Vec2::from_angle(a) * rng.gen_range(0.8..1.25))
        .collect();
    ObjectiveBundle::new(gradients).expect("generated gradients are nonzero")
}
