//! Canonical classification of bundles by their efficient chain.
//!
//! Every candidate efficient set on a polygon with `n` vertices is a run of
//! `j` consecutive vertices starting at `j0`, so the catalog has exactly
//! `n * n` labels (singletons included). Classification maps a bundle to the
//! label of its chain; two bundles classify identically exactly when their
//! efficient sets coincide. Full-cover runs with different starts omit
//! different closing edges and stay distinct labels.
//!
//! Not every label is reachable: a run needs a gradient cone wide enough to
//! sweep its interior turning, and cones stop being pointed at half a turn.
//! [`realize_label`] constructs a witness bundle where one exists and
//! otherwise reports the required spread.

use std::f64::consts::PI;

use crate::angles::ccw_delta;
use crate::cone::ObjectiveBundle;
use crate::efficient_set::efficient_chain;
use crate::polytope::{Chain, Polygon};
use crate::Result;

/// Canonical label of an efficient set: start vertex and vertex count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassLabel {
    pub start: usize,
    pub count: usize,
}

impl ClassLabel {
    pub fn chain(self) -> Chain {
        Chain::new(self.start, self.count)
    }
}

/// All `n * n` candidate labels for this polygon.
pub fn enumerate_ns(polygon: &Polygon) -> Vec<ClassLabel> {
    let n = polygon.vertex_count();
    (1..=n)
        .flat_map(|start| (1..=n).map(move |count| ClassLabel { start, count }))
        .collect()
}

/// Label of the bundle's efficient chain.
pub fn classify(polygon: &Polygon, bundle: &ObjectiveBundle) -> Result<ClassLabel> {
    let es = efficient_chain(polygon, bundle)?;
    Ok(ClassLabel {
        start: es.chain.start,
        count: es.chain.count,
    })
}

/// Outcome of trying to build a two-objective bundle whose chain is a given
/// label.
#[derive(Debug, Clone, PartialEq)]
pub enum Realization {
    Realized(ObjectiveBundle),
    /// No pointed cone can sweep this run: the minimal spread (the turning
    /// across the run's interior vertices) already reaches half a turn.
    Unrealizable { required_spread: f64 },
}

/// Try to realize `label` with a two-objective bundle.
///
/// Singletons take the normal-cone bisector of their vertex twice. Longer
/// runs take the outward normals of the first and last edge of the run:
/// those exact edge ties pin the chain's endpoints while spending the least
/// possible cone width, namely the turning across the interior vertices.
pub fn realize_label(polygon: &Polygon, label: ClassLabel) -> Realization {
    let eps = polygon.epsilon();
    if label.count == 1 {
        let n = polygon.vertex_count();
        let incoming = polygon.outward_normal(polygon.wrap(label.start + n - 1));
        let outgoing = polygon.outward_normal(label.start);
        let bisector = incoming.unit() + outgoing.unit();
        let bundle = ObjectiveBundle::new(vec![bisector, bisector]).expect("nonzero bisector");
        return Realization::Realized(bundle);
    }
    let g1 = polygon.outward_normal(label.start);
    let g2 = polygon.outward_normal(polygon.wrap(label.start + label.count - 2));
    let spread = ccw_delta(g1.angle(), g2.angle());
    if spread >= PI - eps {
        return Realization::Unrealizable {
            required_spread: spread,
        };
    }
    Realization::Realized(ObjectiveBundle::new(vec![g1, g2]).expect("edge normals are nonzero"))
}
