//! Polar coordinates on explicit branch cuts, rotations, and open angular
//! intervals.
//!
//! Angles on the circle only compare cleanly inside one 2*pi window. Every
//! operation here that reports an angle takes a `branch_center` and returns
//! a representative in `[branch_center - pi, branch_center + pi)`. Analyses
//! centered on a gradient cone pass the cone bisector, which keeps the two
//! extreme rays and every edge angle of interest within half a turn of each
//! other.

use std::f64::consts::{PI, TAU};

use crate::geom::Vec2;
use crate::{Error, Result};

/// `x mod 2*pi` into `[0, 2*pi)`. Plain `rem_euclid` can round up to the
/// modulus itself for tiny negative inputs; that representative folds to 0.
fn rem_tau(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Reduce `angle` into `[center - pi, center + pi)`.
pub fn wrap_to_branch(angle: f64, center: f64) -> f64 {
    center - PI + rem_tau(angle - center + PI)
}

/// Counterclockwise distance from `from` to `to`, in `[0, 2*pi)`.
pub fn ccw_delta(from: f64, to: f64) -> f64 {
    rem_tau(to - from)
}

/// A nonzero vector in polar form, with the angle pinned to a chosen branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarVector {
    /// Magnitude, strictly positive.
    pub r: f64,
    /// Polar angle in radians, in `[branch_center - pi, branch_center + pi)`.
    pub phi: f64,
}

impl PolarVector {
    pub fn to_vec(self) -> Vec2 {
        Vec2::from_angle(self.phi) * self.r
    }
}

/// Express `v` in polar coordinates on the branch centered at `branch_center`.
pub fn to_polar(v: Vec2, branch_center: f64) -> Result<PolarVector> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(PolarVector {
        r: v.norm(),
        phi: wrap_to_branch(v.angle(), branch_center),
    })
}

/// Counterclockwise rotation of `v` by `theta`.
pub fn rotate(v: Vec2, theta: f64) -> Vec2 {
    let (sin, cos) = theta.sin_cos();
    Vec2::new(cos * v.x - sin * v.y, sin * v.x + cos * v.y)
}

/// Write the convex combination `delta * c_k1 + (1 - delta) * c_k2` as a
/// rotation of `c_k1` followed by a scaling: returns `(alpha, theta)` with
/// `alpha * rotate(c_k1, theta)` equal to the combination. `theta` is
/// reported in `[0, 2*pi)`.
///
/// The scaling ratio is the norm quotient. The angle comes from the
/// two-argument arctangent of the combined vector; an arccos of its first
/// component would lose the sign below the axis.
pub fn decompose(c_k1: Vec2, c_k2: Vec2, delta: f64) -> Result<(f64, f64)> {
    if c_k1.is_zero() {
        return Err(Error::ZeroVector);
    }
    let d = c_k1 * delta + c_k2 * (1.0 - delta);
    let scale = c_k1.norm().max(c_k2.norm());
    if d.norm() <= f64::EPSILON * 16.0 * scale {
        return Err(Error::DegenerateCombination { delta });
    }
    let alpha = d.norm() / c_k1.norm();
    let mut theta = (d.angle() - c_k1.angle()).rem_euclid(TAU);
    if TAU - theta < 1e-12 {
        theta = 0.0;
    }
    Ok((alpha, theta))
}

/// An interval of angles, possibly open at either end. `hi >= lo` always;
/// a width of exactly 2*pi encodes "every direction except the endpoints"
/// (the efficient chain that covers all vertices but one closing edge).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularInterval {
    pub lo: f64,
    pub hi: f64,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl AngularInterval {
    pub fn open(lo: f64, hi: f64) -> Self {
        debug_assert!(hi >= lo && hi - lo <= TAU + 1e-9);
        AngularInterval {
            lo,
            hi,
            lo_open: true,
            hi_open: true,
        }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// Membership after reducing `omega` into the interval's own branch.
    /// Open endpoints exclude a symmetric `eps` neighborhood, so directions
    /// where the efficient set jumps are rejected deterministically.
    pub fn contains(&self, omega: f64, eps: f64) -> bool {
        let reduced = self.lo + (omega - self.lo).rem_euclid(TAU);
        // The wrapped copy one turn down catches omega just below `lo`
        // when the lower endpoint is closed.
        [reduced, reduced - TAU].iter().any(|&w| {
            let above = if self.lo_open {
                w > self.lo + eps
            } else {
                w >= self.lo - eps
            };
            let below = if self.hi_open {
                w < self.hi - eps
            } else {
                w <= self.hi + eps
            };
            above && below
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_EPSILON;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use rand::Rng;
    use rand::SeedableRng;

    fn deg(d: f64) -> f64 {
        d.to_radians()
    }

    #[test]
    fn polar_of_reference_gradients() {
        let p = to_polar(Vec2::new(1.0, -2.0), 0.0).unwrap();
        assert_abs_diff_eq!(p.r, 5f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(p.phi.to_degrees(), -63.435, epsilon = 1e-3);

        let p = to_polar(Vec2::new(1.0, 4.0), 0.0).unwrap();
        assert_abs_diff_eq!(p.r, 17f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(p.phi.to_degrees(), 75.964, epsilon = 1e-3);

        let p = to_polar(Vec2::new(1.0, 0.0), 0.0).unwrap();
        assert_eq!((p.r, p.phi), (1.0, 0.0));
    }

    #[test]
    fn polar_respects_branch_center() {
        // (-2, 0) sits at pi; a branch centered at 0 reports -pi instead.
        let v = Vec2::new(-2.0, 0.0);
        assert_abs_diff_eq!(to_polar(v, 0.0).unwrap().phi, -PI, epsilon = 1e-12);
        assert_abs_diff_eq!(to_polar(v, 0.5).unwrap().phi, PI, epsilon = 1e-12);
    }

    #[test]
    fn polar_rejects_zero() {
        assert_eq!(to_polar(Vec2::ZERO, 0.0), Err(Error::ZeroVector));
    }

    #[test]
    fn branch_wrap_survives_subnormal_offsets() {
        // rem_euclid(x, tau) rounds to tau for x = -1e-17; the wrap must
        // still respect the half-open contract.
        let w = wrap_to_branch(-PI - 1e-17, 0.0);
        assert!((-PI..PI).contains(&w), "{w}");
        let d = ccw_delta(0.0, -1e-17);
        assert!((0.0..TAU).contains(&d), "{d}");
    }

    #[test]
    fn rotate_quarter_turn_and_identity() {
        let r = rotate(Vec2::new(1.0, 0.0), PI / 2.0);
        assert_abs_diff_eq!(r.x, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r.y, 1.0, epsilon = 1e-15);
        assert_eq!(rotate(Vec2::new(1.0, -2.0), 0.0), Vec2::new(1.0, -2.0));
    }

    #[test]
    fn rotate_between_reference_generators() {
        // Rotating (1,-2) by the angle gap to (1,4) must align directions
        // while preserving the norm.
        let gap = Vec2::new(1.0, 4.0).angle() - Vec2::new(1.0, -2.0).angle();
        assert_abs_diff_eq!(gap.to_degrees(), 139.399, epsilon = 1e-3);
        let r = rotate(Vec2::new(1.0, -2.0), gap);
        assert_abs_diff_eq!(r.norm(), 5f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(r.cross(Vec2::new(1.0, 4.0)), 0.0, epsilon = 1e-12);
        assert!(r.dot(Vec2::new(1.0, 4.0)) > 0.0);
    }

    #[test]
    fn decompose_endpoints() {
        let c5 = Vec2::new(1.0, -2.0);
        let c6 = Vec2::new(1.0, 4.0);
        let (alpha, theta) = decompose(c5, c6, 1.0).unwrap();
        assert_abs_diff_eq!(alpha, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(theta, 0.0, epsilon = 1e-12);

        let (alpha, theta) = decompose(c5, c6, 0.0).unwrap();
        assert_abs_diff_eq!(alpha, (17f64 / 5.0).sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(theta.to_degrees(), 139.399, epsilon = 1e-3);
    }

    #[test]
    fn decompose_midpoint_of_axes() {
        let (alpha, theta) = decompose(Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0), 0.5).unwrap();
        assert_abs_diff_eq!(alpha, 2f64.sqrt() / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(theta.to_degrees(), 45.0, epsilon = 1e-9);
    }

    #[test]
    fn decompose_rejects_vanishing_combination() {
        let e = decompose(Vec2::new(1.0, 0.0), Vec2::new(-1.0, 0.0), 0.5);
        assert_eq!(e, Err(Error::DegenerateCombination { delta: 0.5 }));
    }

    #[test]
    fn interval_membership() {
        let i = AngularInterval::open(deg(-108.435), deg(90.0));
        assert!(i.contains(0.0, DEFAULT_EPSILON));
        assert!(!i.contains(deg(90.0), DEFAULT_EPSILON));
        assert!(i.contains(deg(89.999), DEFAULT_EPSILON));
        // Same directions shifted by full turns.
        assert!(i.contains(TAU, DEFAULT_EPSILON));
        assert!(!i.contains(deg(90.0) - TAU, DEFAULT_EPSILON));
    }

    #[test]
    fn closed_interval_keeps_endpoints() {
        let i = AngularInterval {
            lo: 0.0,
            hi: 1.0,
            lo_open: false,
            hi_open: false,
        };
        assert!(i.contains(0.0, DEFAULT_EPSILON));
        assert!(i.contains(-1e-12, DEFAULT_EPSILON));
        assert!(i.contains(1.0 + 1e-12, DEFAULT_EPSILON));
        assert!(!i.contains(1.1, DEFAULT_EPSILON));
    }

    #[test]
    fn polar_round_trip_bulk() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let v = Vec2::new(rng.gen_range(-50.0..50.0), rng.gen_range(-50.0..50.0));
            if v.norm() < 1e-6 {
                continue;
            }
            let center = rng.gen_range(-10.0..10.0);
            let p = to_polar(v, center).unwrap();
            assert!(p.phi >= center - PI && p.phi < center + PI);
            let back = p.to_vec();
            assert!(back.dist(v) <= 1e-9 * v.norm(), "{v} -> {back}");
        }
    }

    #[test]
    fn decompose_identity_bulk() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..10_000 {
            let base = rng.gen_range(-PI..PI);
            let sep = rng.gen_range(0.01..PI - 0.01);
            let c1 = Vec2::from_angle(base) * rng.gen_range(0.1..10.0);
            let c2 = Vec2::from_angle(base + sep) * rng.gen_range(0.1..10.0);
            let delta: f64 = rng.gen_range(0.0..=1.0);
            let (alpha, theta) = decompose(c1, c2, delta).unwrap();
            let rebuilt = rotate(c1, theta) * alpha;
            let target = c1 * delta + c2 * (1.0 - delta);
            assert!(rebuilt.dist(target) <= 1e-9, "{rebuilt} vs {target}");
        }
    }

    #[test]
    fn decompose_agrees_with_arccos_on_upper_half() {
        // Where the combined vector has nonnegative second component the
        // arccos of its normalized first component is the same angle.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let mut checked = 0;
        while checked < 2_000 {
            let base = rng.gen_range(-PI..PI);
            let sep = rng.gen_range(0.01..PI - 0.01);
            let c1 = Vec2::from_angle(base) * rng.gen_range(0.1..10.0);
            let c2 = Vec2::from_angle(base + sep) * rng.gen_range(0.1..10.0);
            let delta: f64 = rng.gen_range(0.0..=1.0);
            let d = c1 * delta + c2 * (1.0 - delta);
            if d.y < 0.0 {
                continue;
            }
            let (_, theta) = decompose(c1, c2, delta).unwrap();
            let via_arccos = (d.x / d.norm()).clamp(-1.0, 1.0).acos() - c1.angle();
            let diff = (theta - via_arccos).rem_euclid(TAU);
            assert!(diff.min(TAU - diff) <= 1e-9);
            checked += 1;
        }
    }

    proptest! {
        #[test]
        fn rotation_composes_additively(
            x in -10.0f64..10.0, y in -10.0f64..10.0,
            a in -7.0f64..7.0, b in -7.0f64..7.0,
        ) {
            let v = Vec2::new(x, y);
            let lhs = rotate(rotate(v, a), b);
            let rhs = rotate(v, a + b);
            prop_assert!(lhs.dist(rhs) <= 1e-9 * (1.0 + v.norm()));
        }

        #[test]
        fn rotation_preserves_norm(x in -10.0f64..10.0, y in -10.0f64..10.0, t in -7.0f64..7.0) {
            let v = Vec2::new(x, y);
            prop_assert!((rotate(v, t).norm() - v.norm()).abs() <= 1e-9 * (1.0 + v.norm()));
        }

        #[test]
        fn branch_wrap_is_idempotent(angle in -20.0f64..20.0, center in -20.0f64..20.0) {
            let w = wrap_to_branch(angle, center);
            prop_assert!(w >= center - PI && w < center + PI);
            prop_assert!((wrap_to_branch(w, center) - w).abs() <= 1e-12);
            // Same direction up to a whole number of turns.
            let turns = (angle - w) / TAU;
            prop_assert!((turns - turns.round()).abs() <= 1e-9);
        }
    }
}
