//! The efficient (Pareto-optimal) set of a bundle as a boundary chain.
//!
//! Sweeping the maximized direction counterclockwise from the cone's first
//! extreme ray to its second walks the argmax face monotonically along the
//! boundary. The efficient set is therefore the connected run of vertices
//! from the optimum of the first generator to the optimum of the second.
//! When a generator is exactly an edge normal the whole tied edge is optimal
//! for a cone direction, so the chain absorbs both of its endpoints: it
//! starts at the counterclockwise-earlier endpoint of the first face and
//! ends at the counterclockwise-later endpoint of the second.

use crate::cone::{extreme_rays, ObjectiveBundle};
use crate::polytope::{Chain, Polygon};
use crate::solver::argmax_face;
use crate::Result;

/// The efficient set: its chain and the efficient extreme points (1-based
/// vertex indices in boundary order).
#[derive(Debug, Clone, PartialEq)]
pub struct EfficientSet {
    pub chain: Chain,
    pub vs: Vec<usize>,
}

/// Compute the efficient chain of `bundle` over `polygon`.
pub fn efficient_chain(polygon: &Polygon, bundle: &ObjectiveBundle) -> Result<EfficientSet> {
    let cone = extreme_rays(bundle)?;
    let first = argmax_face(polygon, bundle.gradient(cone.k1))?;
    let last = argmax_face(polygon, bundle.gradient(cone.k2))?;
    let start = first.ccw_first();
    let end = last.ccw_last();
    let n = polygon.vertex_count();
    let count = (end + n - start) % n + 1;
    let chain = Chain::new(start, count);
    let vs = polygon.chain_vertices(chain)?;
    Ok(EfficientSet { chain, vs })
}

/// Reduce a bundle to the two-objective bundle of its extreme-ray
/// generators; both have the same efficient set.
pub fn reduce_to_tolp(bundle: &ObjectiveBundle) -> Result<ObjectiveBundle> {
    let cone = extreme_rays(bundle)?;
    ObjectiveBundle::new(vec![bundle.gradient(cone.k1), bundle.gradient(cone.k2)])
}
