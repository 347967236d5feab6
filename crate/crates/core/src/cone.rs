//! Objective bundles and their gradient cone.
//!
//! The cone of a bundle is the set of nonnegative combinations of its
//! gradients. In the plane a pointed cone is generated by exactly two
//! extreme rays: the gradients of minimal and maximal polar angle, provided
//! all angles are read on a branch that keeps the bundle inside one
//! half-turn. That branch is found by cutting the circle inside the widest
//! angular gap between gradient directions; bundles whose minimal spread
//! still reaches half a turn have no pointed cone and are refused.

use std::f64::consts::{PI, TAU};

use crate::angles::wrap_to_branch;
use crate::geom::Vec2;
use crate::{Error, Result};

/// An ordered list of `K >= 2` nonzero objective gradients. Objective
/// indices are 1-based.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveBundle {
    gradients: Vec<Vec2>,
}

impl ObjectiveBundle {
    pub fn new(gradients: Vec<Vec2>) -> Result<Self> {
        if gradients.len() < 2 {
            return Err(Error::BundleTooSmall {
                count: gradients.len(),
            });
        }
        for (i, g) in gradients.iter().enumerate() {
            if g.is_zero() {
                return Err(Error::ZeroGradient { index: i + 1 });
            }
        }
        Ok(ObjectiveBundle { gradients })
    }

    pub fn len(&self) -> usize {
        self.gradients.len()
    }

    /// Never true: construction requires at least two gradients.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Gradient by 1-based objective index.
    pub fn gradient(&self, k: usize) -> Vec2 {
        self.gradients[k - 1]
    }

    pub fn gradients(&self) -> &[Vec2] {
        &self.gradients
    }

    /// Objective value `<c_k, x>`.
    pub fn value(&self, k: usize, x: Vec2) -> f64 {
        self.gradient(k).dot(x)
    }
}

/// The two extreme rays of a pointed gradient cone: objective indices and
/// their polar angles on the analysis branch (centered on the cone
/// bisector), with `phi2 >= phi1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GradientCone {
    pub k1: usize,
    pub k2: usize,
    pub phi1: f64,
    pub phi2: f64,
}

impl GradientCone {
    pub fn spread(&self) -> f64 {
        self.phi2 - self.phi1
    }

    pub fn bisector(&self) -> f64 {
        (self.phi1 + self.phi2) / 2.0
    }

    /// Whether direction `d` lies in the cone, i.e. its angle falls within
    /// `[phi1, phi2]` up to `eps`.
    pub fn contains_direction(&self, d: Vec2, eps: f64) -> Result<bool> {
        if d.is_zero() {
            return Err(Error::ZeroVector);
        }
        let phi = wrap_to_branch(d.angle(), self.bisector());
        Ok(phi >= self.phi1 - eps && phi <= self.phi2 + eps)
    }
}

/// Identify the two extreme rays of the bundle's gradient cone.
///
/// All gradient angles are re-read on the spread-minimizing branch; the
/// minimal and maximal angle pick `k1` and `k2`. Ties go to the smaller
/// objective index, except that a two-objective bundle always reports both
/// objectives, ordered by angle.
pub fn extreme_rays(bundle: &ObjectiveBundle) -> Result<GradientCone> {
    let eps = 1e-12;
    let raw: Vec<f64> = bundle.gradients().iter().map(|g| g.angle()).collect();

    // Cut the circle inside the widest gap between gradient directions.
    let mut sorted = raw.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut cut = sorted[0] - PI;
    let mut widest = f64::NEG_INFINITY;
    for i in 0..sorted.len() {
        let a = sorted[i];
        let b = if i + 1 < sorted.len() {
            sorted[i + 1]
        } else {
            sorted[0] + TAU
        };
        if b - a > widest {
            widest = b - a;
            cut = (a + b) / 2.0;
        }
    }

    let branched: Vec<f64> = raw
        .iter()
        .map(|&a| cut + crate::angles::ccw_delta(cut, a))
        .collect();
    let lo = branched.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = branched.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let spread = hi - lo;
    if spread >= PI - eps {
        return Err(Error::WideCone {
            spread_deg: spread.to_degrees(),
        });
    }

    let (k1, k2) = if bundle.len() == 2 {
        if branched[1] < branched[0] - eps {
            (2, 1)
        } else {
            (1, 2)
        }
    } else {
        let k1 = 1 + branched.iter().position(|&a| a <= lo + eps).unwrap();
        let k2 = 1 + branched.iter().position(|&a| a >= hi - eps).unwrap();
        (k1, k2)
    };

    // Report angles on the branch centered at the cone bisector.
    let bisector = wrap_to_branch((lo + hi) / 2.0, 0.0);
    Ok(GradientCone {
        k1,
        k2,
        phi1: bisector - spread / 2.0,
        phi2: bisector + spread / 2.0,
    })
}
