//! The orthoscheme metric layer: diagonal-link edge lengths, link shape
//! decomposition and spherical-triangle angle checks.
//!
//! Lengths are carried in dual form: an exact rational cos^2 for identity
//! checks and a double-precision angle for summation. The critical
//! comparisons downstream (loop length vs 2*pi) hit equality exactly for
//! boolean and modular lattices, so the rational side backs up the floats.

use crate::poset::{Elem, GradedPoset, IntervalHandle};
use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

pub type Frac = Ratio<i64>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MetricError {
    #[error("edge length parts must be strictly positive")]
    ZeroPart,
    #[error("diagonal link needs rank >= 2, got {0}")]
    RankTooSmall(usize),
    #[error("elements do not form a strictly ascending chain")]
    NotAChain,
}

/// The length of a diagonal-link edge between an element of rank i and one
/// of corank k, with j the rank gap between them: cos^2(theta) =
/// i*k / ((i+j)*(j+k)).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EdgeLengthSpec {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    #[serde(serialize_with = "ser_frac")]
    pub cos_sq: Frac,
    pub theta: f64,
}

fn ser_frac<S: serde::Serializer>(f: &Frac, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut m = s.serialize_map(Some(2))?;
    m.serialize_entry("num", f.numer())?;
    m.serialize_entry("den", f.denom())?;
    m.end()
}

pub fn edge_length(i: u32, j: u32, k: u32) -> Result<EdgeLengthSpec, MetricError> {
    if i == 0 || j == 0 || k == 0 {
        return Err(MetricError::ZeroPart);
    }
    let (i64_, j64, k64) = (i as i64, j as i64, k as i64);
    let cos_sq = Frac::new(i64_ * k64, (i64_ + j64) * (j64 + k64));
    let theta = frac_to_f64(cos_sq).sqrt().acos();
    Ok(EdgeLengthSpec {
        i,
        j,
        k,
        cos_sq,
        theta,
    })
}

pub fn frac_to_f64(f: Frac) -> f64 {
    *f.numer() as f64 / *f.denom() as f64
}

/// A spherical join factor: the Coxeter shape alpha_m (type A) or beta_m
/// (type B). Index-0 factors are empty and dropped from join lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ShapeFactor {
    Alpha(u32),
    Beta(u32),
}

impl std::fmt::Display for ShapeFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ShapeFactor::Alpha(m) => write!(f, "alpha_{m}"),
            ShapeFactor::Beta(m) => write!(f, "beta_{m}"),
        }
    }
}

/// The link of a chain x_0 < ... < x_k in a rank-n poset decomposes as
/// beta_{rank x_0} * alpha_{gap-1} * ... * beta_{n - rank x_k}, empty
/// factors removed. The decomposition depends only on the ranks.
pub fn link_decomposition(
    poset: &GradedPoset,
    chain: &[Elem],
) -> Result<Vec<ShapeFactor>, MetricError> {
    if chain.is_empty() {
        return Err(MetricError::NotAChain);
    }
    for w in chain.windows(2) {
        if w[0] == w[1] || !poset.leq(w[0], w[1]) {
            return Err(MetricError::NotAChain);
        }
    }
    let n = poset.rank();
    let mut factors = Vec::new();
    let first = poset.rank_of(chain[0]) as u32;
    if first > 0 {
        factors.push(ShapeFactor::Beta(first));
    }
    for w in chain.windows(2) {
        let gap = (poset.rank_of(w[1]) - poset.rank_of(w[0])) as u32;
        if gap > 1 {
            factors.push(ShapeFactor::Alpha(gap - 1));
        }
    }
    let last = (n - poset.rank_of(chain[chain.len() - 1])) as u32;
    if last > 0 {
        factors.push(ShapeFactor::Beta(last));
    }
    Ok(factors)
}

#[derive(Clone, Debug, Serialize)]
pub struct LinkEdge {
    pub x: Elem,
    pub y: Elem,
    pub spec: EdgeLengthSpec,
}

/// The 1-skeleton of the diagonal link of an interval: one vertex per
/// element strictly between the endpoints, one edge per comparable pair.
#[derive(Clone, Debug, Serialize)]
pub struct DiagonalLinkGraph {
    /// (element, local rank) pairs.
    pub vertices: Vec<(Elem, usize)>,
    pub edges: Vec<LinkEdge>,
}

pub fn diagonal_link(interval: &IntervalHandle<'_>) -> Result<DiagonalLinkGraph, MetricError> {
    let n = interval.rank();
    if n < 2 {
        return Err(MetricError::RankTooSmall(n));
    }
    let interior: Vec<Elem> = interval
        .members
        .iter()
        .copied()
        .filter(|&x| {
            let r = interval.local_rank(x);
            r > 0 && r < n
        })
        .collect();
    let vertices = interior
        .iter()
        .map(|&x| (x, interval.local_rank(x)))
        .collect();
    let mut edges = Vec::new();
    for (a, &x) in interior.iter().enumerate() {
        for &y in &interior[a + 1..] {
            let (lo, hi) = if interval.parent.leq(x, y) {
                (x, y)
            } else if interval.parent.leq(y, x) {
                (y, x)
            } else {
                continue;
            };
            let i = interval.local_rank(lo) as u32;
            let j = (interval.local_rank(hi) - interval.local_rank(lo)) as u32;
            let k = (n - interval.local_rank(hi)) as u32;
            edges.push(LinkEdge {
                x: lo,
                y: hi,
                spec: edge_length(i, j, k).expect("interior pair has positive parts"),
            });
        }
    }
    Ok(DiagonalLinkGraph { vertices, edges })
}

impl DiagonalLinkGraph {
    /// Combinatorial girth of the underlying simple graph, ignoring lengths.
    /// Returns None for a forest.
    pub fn graph_girth(&self) -> Option<usize> {
        let n = self.vertices.len();
        let index: std::collections::HashMap<Elem, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &(e, _))| (e, i))
            .collect();
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            let (a, b) = (index[&e.x], index[&e.y]);
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut best: Option<usize> = None;
        for start in 0..n {
            // BFS girth: shortest cycle through `start`.
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let cyc = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| cyc < b) {
                            best = Some(cyc);
                        }
                    }
                }
            }
        }
        best
    }
}

/// Angles of the diagonal-link triangle on ranks i, i+j, i+j+k inside a
/// rank-(i+j+k+l) orthoscheme, via the spherical law of cosines.
#[derive(Clone, Copy, Debug)]
pub struct TriangleAngles {
    pub angle_x: f64,
    pub angle_y: f64,
    pub angle_z: f64,
    pub side_xy: EdgeLengthSpec,
    pub side_yz: EdgeLengthSpec,
    pub side_xz: EdgeLengthSpec,
}

pub fn triangle_check(i: u32, j: u32, k: u32, l: u32) -> Result<TriangleAngles, MetricError> {
    if i == 0 || j == 0 || k == 0 || l == 0 {
        return Err(MetricError::ZeroPart);
    }
    let side_xy = edge_length(i, j, k + l)?;
    let side_yz = edge_length(i + j, k, l)?;
    let side_xz = edge_length(i, j + k, l)?;
    let angle = |opposite: &EdgeLengthSpec, s1: &EdgeLengthSpec, s2: &EdgeLengthSpec| {
        let (a, b, c) = (s1.theta, s2.theta, opposite.theta);
        ((c.cos() - a.cos() * b.cos()) / (a.sin() * b.sin())).acos()
    };
    Ok(TriangleAngles {
        angle_x: angle(&side_yz, &side_xy, &side_xz),
        angle_y: angle(&side_xz, &side_xy, &side_yz),
        angle_z: angle(&side_xy, &side_yz, &side_xz),
        side_xy,
        side_yz,
        side_xz,
    })
}

/// Exact form of the right-angle identity: cos^2(e_xy) * cos^2(e_yz) =
/// cos^2(e_xz) as rationals (all three cosines are positive).
pub fn triangle_product_identity_exact(i: u32, j: u32, k: u32, l: u32) -> bool {
    let xy = edge_length(i, j, k + l).unwrap().cos_sq;
    let yz = edge_length(i + j, k, l).unwrap().cos_sq;
    let xz = edge_length(i, j + k, l).unwrap().cos_sq;
    xy * yz == xz
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn unit_edge_is_pi_over_3() {
        let e = edge_length(1, 1, 1).unwrap();
        assert_eq!(e.cos_sq, Frac::new(1, 4));
        assert!((e.theta - PI / 3.0).abs() < 1e-15);
    }

    #[test]
    fn rank4_edge_constants() {
        let short = edge_length(1, 1, 2).unwrap();
        assert_eq!(short.cos_sq, Frac::new(1, 3));
        assert!((short.theta / PI - 0.304).abs() < 1e-3);
        let long = edge_length(1, 2, 1).unwrap();
        assert_eq!(long.cos_sq, Frac::new(1, 9));
        assert!((long.theta - (1.0f64 / 3.0).acos()).abs() < 1e-15);
        assert!((long.theta / PI - 0.392).abs() < 1e-3);
    }

    #[test]
    fn edge_length_symmetry_and_range() {
        for i in 1..=6u32 {
            for j in 1..=6 {
                for k in 1..=6 {
                    let e = edge_length(i, j, k).unwrap();
                    let f = edge_length(k, j, i).unwrap();
                    assert_eq!(e.cos_sq, f.cos_sq);
                    assert!(e.cos_sq > Frac::new(0, 1) && e.cos_sq < Frac::new(1, 1));
                    assert!(e.theta > 0.0 && e.theta < PI / 2.0);
                }
            }
        }
        assert_eq!(edge_length(0, 1, 1).unwrap_err(), MetricError::ZeroPart);
    }

    #[test]
    fn decomposition_of_rank12_chain() {
        // ranks (3, 6, 7, 12) in a rank-12 poset -> beta_3 * alpha_2 * alpha_4
        // Build a chain poset of length 12 so the ranks are forced.
        let labels: Vec<String> = (0..=12).map(|i| i.to_string()).collect();
        let covers: Vec<(usize, usize)> = (0..12).map(|i| (i, i + 1)).collect();
        let p = GradedPoset::build("chain12", labels, covers).unwrap();
        let fs = link_decomposition(&p, &[3, 6, 7, 12]).unwrap();
        assert_eq!(
            fs,
            vec![
                ShapeFactor::Beta(3),
                ShapeFactor::Alpha(2),
                ShapeFactor::Alpha(4)
            ]
        );
        // full maximal chain: every factor empty
        let full: Vec<usize> = (0..=12).collect();
        assert!(link_decomposition(&p, &full).unwrap().is_empty());
        // {bottom, top}: single diagonal factor alpha_{n-1}
        assert_eq!(
            link_decomposition(&p, &[0, 12]).unwrap(),
            vec![ShapeFactor::Alpha(11)]
        );
        assert_eq!(
            link_decomposition(&p, &[6, 3]).unwrap_err(),
            MetricError::NotAChain
        );
    }

    #[test]
    fn right_angle_triangles() {
        for (i, j, k, l) in [(1, 1, 1, 1), (2, 1, 1, 3)] {
            let t = triangle_check(i, j, k, l).unwrap();
            assert!((t.angle_y - PI / 2.0).abs() < 1e-12);
            assert!(t.angle_x < PI / 2.0);
            assert!(t.angle_z < PI / 2.0);
            assert!(triangle_product_identity_exact(i, j, k, l));
        }
    }
}
