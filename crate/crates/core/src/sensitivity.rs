//! Tolerance analysis: which gradient directions leave the optimum (or the
//! whole efficient chain) unchanged.
//!
//! For one objective with a vertex optimum `v(j)`, the optimum persists for
//! every gradient whose angle stays strictly between the two edge normals
//! meeting at `v(j)`; shifting the edge angles by a quarter turn gives the
//! open interval directly. For a bundle, the same construction applied at
//! the chain's two endpoint vertices yields the open interval `I` of extra
//! gradient directions that never move the chain. The equivalence class of a
//! bundle is described symbolically by its two extreme generators, `I`, and
//! the chain; it is sampled, never enumerated.

use std::f64::consts::{FRAC_PI_2, TAU};

use crate::angles::AngularInterval;
use crate::cone::{extreme_rays, ObjectiveBundle};
use crate::efficient_set::efficient_chain;
use crate::geom::Vec2;
use crate::polytope::{Chain, Polygon};
use crate::solver::{argmax_face, Face};
use crate::{Error, Result};

/// Symbolic description of all bundles sharing one efficient chain: the two
/// extreme generators, the open interval of harmless extra gradient angles,
/// and the chain itself.
#[derive(Debug, Clone, PartialEq)]
pub struct SensitivityClass {
    pub g1: Vec2,
    pub g2: Vec2,
    pub tolerance: AngularInterval,
    pub chain: Chain,
}

/// Open interval of gradient angles that keep the optimum of `form` fixed.
/// The optimum must be a single vertex; an edge optimum sits exactly on the
/// boundary of two such intervals and is reported instead of guessed.
pub fn mono_tolerance(polygon: &Polygon, form: Vec2) -> Result<AngularInterval> {
    if form.is_zero() {
        return Err(Error::ZeroVector);
    }
    let j = match argmax_face(polygon, form)? {
        Face::Vertex(j) => j,
        Face::Edge(a, b) => return Err(Error::EdgeOptimal { a, b }),
    };
    // Branch centered a quarter turn above the form keeps both edge angles
    // on the same side of the cut as the form itself.
    let ea = polygon.edge_angles(j, form.angle() + FRAC_PI_2);
    Ok(AngularInterval::open(
        ea.theta1 - FRAC_PI_2,
        ea.theta2 - FRAC_PI_2,
    ))
}

/// Sensitivity class of a bundle: efficient chain, extreme generators, and
/// the open tolerance interval obtained from the edge angles at the chain's
/// start and end vertices.
pub fn molp_sensitivity(polygon: &Polygon, bundle: &ObjectiveBundle) -> Result<SensitivityClass> {
    let cone = extreme_rays(bundle)?;
    let es = efficient_chain(polygon, bundle)?;
    let chain = es.chain;
    let end = polygon.wrap(chain.start + chain.count - 1);
    let bc = cone.bisector();
    let lo = polygon.edge_angles(chain.start, bc).theta1 - FRAC_PI_2;
    let hi_raw = polygon.edge_angles(end, bc).theta2 - FRAC_PI_2;
    // The interval runs counterclockwise from lo; a full-cover chain closes
    // the whole turn (both bounds name the same omitted-edge normal).
    let delta = (hi_raw - lo).rem_euclid(TAU);
    let hi = if delta == 0.0 { lo + TAU } else { lo + delta };
    let tolerance = AngularInterval::open(lo, hi);
    debug_assert!(tolerance.contains(cone.phi1, 1e-9) || (cone.phi1 - lo).abs() < 1e-9);
    debug_assert!(tolerance.contains(cone.phi2, 1e-9) || (cone.phi2 - hi).abs() < 1e-9);
    Ok(SensitivityClass {
        g1: bundle.gradient(cone.k1),
        g2: bundle.gradient(cone.k2),
        tolerance,
        chain,
    })
}

/// Construct a member of the class with `k` objectives: the two generators
/// plus `k - 2` extra gradients at the given absolute angles (radians), each
/// scaled to the first generator's norm. Every angle must lie strictly
/// inside the tolerance interval; the assembled bundle must still have a
/// pointed cone, which bounds how far apart two extra angles may sit when
/// the interval spans more than half a turn.
pub fn sample_member(
    class: &SensitivityClass,
    k: usize,
    thetas: &[f64],
    eps: f64,
) -> Result<ObjectiveBundle> {
    if k < 2 {
        return Err(Error::BundleTooSmall { count: k });
    }
    if thetas.len() != k - 2 {
        return Err(Error::AngleArityMismatch {
            k,
            expected: k - 2,
            got: thetas.len(),
        });
    }
    for &theta in thetas {
        if !class.tolerance.contains(theta, eps) {
            return Err(Error::AngleOutOfTolerance {
                angle_deg: theta.to_degrees(),
            });
        }
    }
    let scale = class.g1.norm();
    let mut gradients = vec![class.g1, class.g2];
    gradients.extend(thetas.iter().map(|&t| Vec2::from_angle(t) * scale));
    let bundle = ObjectiveBundle::new(gradients)?;
    extreme_rays(&bundle)?;
    Ok(bundle)
}

/// Whether two bundles have the same efficient set over `polygon`. Chains
/// are equal as boundary point sets exactly when their labels coincide.
pub fn is_equivalent(
    polygon: &Polygon,
    g: &ObjectiveBundle,
    h: &ObjectiveBundle,
) -> Result<bool> {
    Ok(efficient_chain(polygon, g)?.chain == efficient_chain(polygon, h)?.chain)
}

/// Whether `g`'s efficient set equals the class's chain.
pub fn in_class(polygon: &Polygon, class: &SensitivityClass, g: &ObjectiveBundle) -> Result<bool> {
    Ok(efficient_chain(polygon, g)?.chain == class.chain)
}
