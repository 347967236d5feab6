//! Brute-force ground truth, kept independent of the chain pipeline.
//!
//! Two instruments: a weighted-sum sweep that unions argmax faces over a
//! dense grid of simplex weights, and a direct dominance scan that hunts for
//! a feasible point improving every objective at once. Verification code
//! compares the pipeline's chain against these; nothing here consults cones
//! or chains.
//!
//! Both sides use the closed weight simplex, so an objective that is exactly
//! an edge normal contributes its whole (weakly efficient) edge on both
//! sides consistently.

use std::collections::BTreeSet;

use crate::cone::ObjectiveBundle;
use crate::geom::Vec2;
use crate::polytope::Polygon;
use crate::solver::{argmax_face, Face};
use crate::{Error, Result};

/// A point of the weight simplex: `K` nonnegative components summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    lambda: Vec<f64>,
}

impl WeightVector {
    pub fn new(lambda: Vec<f64>) -> Result<Self> {
        let sum: f64 = lambda.iter().sum();
        let ok = !lambda.is_empty()
            && lambda.iter().all(|&l| (-1e-12..=1.0 + 1e-12).contains(&l))
            && (sum - 1.0).abs() <= 1e-9;
        if !ok {
            return Err(Error::InvalidWeightVector);
        }
        Ok(WeightVector { lambda })
    }

    pub fn components(&self) -> &[f64] {
        &self.lambda
    }

    /// The scalarized gradient `sum_k lambda_k * c_k`.
    pub fn direction(&self, bundle: &ObjectiveBundle) -> Vec2 {
        self.lambda
            .iter()
            .zip(bundle.gradients())
            .fold(Vec2::ZERO, |acc, (&l, &c)| acc + c * l)
    }
}

/// Union of argmax faces over a dense sample of the weight simplex.
///
/// Only the direction of the scalarized gradient matters, and every
/// direction in the cone of the bundle arises on some segment between two
/// objectives. Sampling each objective pair at spacing `1/grid` therefore
/// covers the same directions as the full simplex grid would, at a cost
/// that stays polynomial in `K`. Near-zero combinations are skipped.
pub fn bruteforce_efficient(
    polygon: &Polygon,
    bundle: &ObjectiveBundle,
    grid: usize,
) -> BTreeSet<Face> {
    assert!(grid >= 2, "grid must be at least 2");
    let k = bundle.len();
    let scale: f64 = bundle.gradients().iter().map(|g| g.norm()).sum();
    let mut faces = BTreeSet::new();
    for i in 1..=k {
        for j in (i + 1)..=k {
            for t in 0..=grid {
                let li = t as f64 / grid as f64;
                let mut lambda = vec![0.0; k];
                lambda[i - 1] = li;
                lambda[j - 1] = 1.0 - li;
                let w = WeightVector::new(lambda).expect("grid weights are valid");
                let d = w.direction(bundle);
                if d.norm() <= polygon.epsilon() * scale {
                    continue;
                }
                let face = argmax_face(polygon, d)
                    .expect("nonzero directions cannot tie non-adjacent vertices");
                faces.insert(face);
            }
        }
    }
    faces
}

/// 1-based indices of every vertex touched by a face set.
pub fn face_vertex_ids(faces: &BTreeSet<Face>) -> BTreeSet<usize> {
    faces.iter().flat_map(|f| f.vertex_ids()).collect()
}

/// Whether some feasible point weakly improves every objective at `p` and
/// strictly improves at least one, judged beyond tolerance. Candidates are
/// the polygon's vertices, `samples` points per boundary edge, and a coarse
/// interior grid; dominance witnesses in the plane live on the boundary, so
/// the interior grid is only a backstop.
pub fn is_dominated(
    polygon: &Polygon,
    bundle: &ObjectiveBundle,
    p: Vec2,
    samples: usize,
) -> Result<bool> {
    if !polygon.contains(p) {
        return Err(Error::InfeasiblePoint { x: p.x, y: p.y });
    }
    let eps = polygon.epsilon();
    let n = polygon.vertex_count();
    let mut candidates: Vec<Vec2> = polygon.vertices().to_vec();
    for j in 1..=n {
        let a = polygon.vertex(j);
        let e = polygon.edge_vector(j);
        for s in 1..=samples {
            candidates.push(a + e * (s as f64 / (samples + 1) as f64));
        }
    }
    let (min_x, max_x, min_y, max_y) = polygon.vertices().iter().fold(
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY),
        |(ax, bx, ay, by), v| (ax.min(v.x), bx.max(v.x), ay.min(v.y), by.max(v.y)),
    );
    for ix in 0..64 {
        for iy in 0..64 {
            let q = Vec2::new(
                min_x + (max_x - min_x) * (ix as f64 + 0.5) / 64.0,
                min_y + (max_y - min_y) * (iy as f64 + 0.5) / 64.0,
            );
            if polygon.contains(q) {
                candidates.push(q);
            }
        }
    }

    let values: Vec<f64> = (1..=bundle.len()).map(|k| bundle.value(k, p)).collect();
    let margins: Vec<f64> = values.iter().map(|v| eps * (1.0 + v.abs())).collect();
    Ok(candidates.iter().any(|&c| {
        let mut strict = false;
        for k in 1..=bundle.len() {
            let gain = bundle.value(k, c) - values[k - 1];
            if gain < -margins[k - 1] {
                return false;
            }
            if gain > margins[k - 1] {
                strict = true;
            }
        }
        strict
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::efficient_set::efficient_chain;
    use crate::random::{random_bundle, random_polygon, seeded};
    use crate::testutil::{ninegon, ninegon_bundle, unit_square};
    use rand::Rng;

    #[test]
    fn weight_vectors_are_validated() {
        assert!(WeightVector::new(vec![0.25, 0.75]).is_ok());
        assert!(WeightVector::new(vec![1.0]).is_ok());
        assert_eq!(
            WeightVector::new(vec![0.5, 0.4]),
            Err(Error::InvalidWeightVector)
        );
        assert_eq!(
            WeightVector::new(vec![-0.5, 1.5]),
            Err(Error::InvalidWeightVector)
        );
        let b = ObjectiveBundle::new(vec![Vec2::new(1.0, 0.0), Vec2::new(0.0, 2.0)]).unwrap();
        let d = WeightVector::new(vec![0.5, 0.5]).unwrap().direction(&b);
        assert_eq!(d, Vec2::new(0.5, 1.0));
    }

    #[test]
    fn reference_sweep_covers_the_chain_vertices() {
        let p = ninegon();
        let b = ninegon_bundle();
        let faces = bruteforce_efficient(&p, &b, 200);
        let ids: Vec<usize> = face_vertex_ids(&faces).into_iter().collect();
        assert_eq!(ids, vec![1, 2, 3, 4, 5]);
        // Any edge face the sweep happens to hit lies inside the chain.
        for f in &faces {
            if let Face::Edge(a, _) = f {
                assert!((1..=4).contains(a));
            }
        }
    }

    #[test]
    fn parallel_bundle_yields_single_face() {
        let p = ninegon();
        let d = Vec2::new(2.0, 1.0);
        let b = ObjectiveBundle::new(vec![d, d]).unwrap();
        let faces = bruteforce_efficient(&p, &b, 17);
        assert_eq!(faces.len(), 1);
        assert!(faces.contains(&argmax_face(&p, d).unwrap()));
    }

    #[test]
    fn square_sweep() {
        let p = unit_square();
        let b = ObjectiveBundle::new(vec![Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)]).unwrap();
        let faces = bruteforce_efficient(&p, &b, 100);
        let ids: Vec<usize> = face_vertex_ids(&faces).into_iter().collect();
        assert_eq!(ids, vec![2, 3, 4]);
        assert!(faces.contains(&Face::Edge(2, 3)));
        assert!(faces.contains(&Face::Edge(3, 4)));
    }

    #[test]
    fn grid_refinement_is_monotone() {
        let p = ninegon();
        let b = ninegon_bundle();
        for g in [5, 9, 20] {
            let coarse = bruteforce_efficient(&p, &b, g);
            let fine = bruteforce_efficient(&p, &b, 2 * g);
            assert!(coarse.is_subset(&fine));
        }
    }

    #[test]
    fn dominance_on_reference_instance() {
        let p = ninegon();
        let b = ninegon_bundle();
        assert!(is_dominated(&p, &b, Vec2::new(0.0, 6.0), 100).unwrap());
        assert!(!is_dominated(&p, &b, Vec2::new(7.0, 5.0), 100).unwrap());
        // A strictly positive combination's unique argmax is efficient.
        assert!(!is_dominated(&p, &b, Vec2::new(4.0, 1.0), 100).unwrap());
        assert_eq!(
            is_dominated(&p, &b, Vec2::new(50.0, 50.0), 10),
            Err(Error::InfeasiblePoint { x: 50.0, y: 50.0 })
        );
    }

    #[test]
    fn chain_midpoints_undominated_others_dominated() {
        let p = ninegon();
        let b = ninegon_bundle();
        let es = efficient_chain(&p, &b).unwrap();
        for j in 1..=p.vertex_count() {
            let mid = p.vertex(j) + p.edge_vector(j) * 0.5;
            let on_chain = es.vs.windows(2).any(|w| w[0] == j);
            let dominated = is_dominated(&p, &b, mid, 64).unwrap();
            assert_eq!(dominated, !on_chain, "edge at v{j}");
        }
        for &j in &es.vs {
            assert!(!is_dominated(&p, &b, p.vertex(j), 64).unwrap());
        }
    }

    #[test]
    fn pipeline_matches_oracle_on_random_instances() {
        let mut rng = seeded(91);
        for _ in 0..50 {
            let p = random_polygon(&mut rng);
            let k = rng.gen_range(2..=6);
            let width = rng.gen_range(0.05..2.9);
            let b = random_bundle(&mut rng, k, width);
            let es = efficient_chain(&p, &b).unwrap();
            let oracle_ids = face_vertex_ids(&bruteforce_efficient(&p, &b, 500));
            let chain_ids: BTreeSet<usize> = es.vs.iter().copied().collect();
            assert_eq!(chain_ids, oracle_ids);
        }
    }
}
