//! Finite bounded graded posets: construction, validation, intervals,
//! bounds, bowties, complements, modularity and duality.
//!
//! Elements are dense indices; labels are carried for reporting only. The
//! order relation is stored as an explicit transitive-closure bitset per
//! element, so every reachability query is a word-parallel intersection.

use crate::bitset::BitSet;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use thiserror::Error;

pub type Elem = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("cover relation contains a directed cycle")]
    CycleDetected,
    #[error("poset is not bounded: {0}")]
    NotBounded(String),
    #[error("poset is not graded: cover ({0}, {1}) spans ranks {2} -> {3}")]
    NotGraded(Elem, Elem, usize, usize),
    #[error("elements {0} and {1} are not comparable")]
    NotComparable(Elem, Elem),
    #[error("unknown element {0}")]
    UnknownElement(Elem),
    #[error("duplicate element id {0}")]
    DuplicateId(i64),
    #[error("cover references unknown element id {0}")]
    UnknownCoverId(i64),
    #[error("poset is not a lattice")]
    NotALattice,
}

/// A bounded graded finite poset, immutable after construction.
#[derive(Clone, Debug)]
pub struct GradedPoset {
    name: String,
    labels: Vec<String>,
    covers: Vec<(Elem, Elem)>,
    /// up[x] = { y : x <= y }, reflexive.
    up: Vec<BitSet>,
    /// down[x] = { y : y <= x }, reflexive.
    down: Vec<BitSet>,
    rank: Vec<usize>,
    bottom: Elem,
    top: Elem,
    total_rank: usize,
    full: BitSet,
}

/// Witness that a bounded graded poset is not a lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bowtie {
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
    pub d: Elem,
}

impl GradedPoset {
    /// Validates the cover data and computes ranks and the order closure.
    ///
    /// Rejections name the first violated axiom: a cycle, a missing unique
    /// bottom or top, or a cover spanning more than one rank level.
    pub fn build(
        name: impl Into<String>,
        labels: Vec<String>,
        covers: Vec<(Elem, Elem)>,
    ) -> Result<GradedPoset, PosetError> {
        let n = labels.len();
        for &(x, y) in &covers {
            if x >= n {
                return Err(PosetError::UnknownElement(x));
            }
            if y >= n {
                return Err(PosetError::UnknownElement(y));
            }
        }

        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for &(x, y) in &covers {
            succ[x].push(y);
            pred[y].push(x);
        }

        // Kahn toposort doubles as cycle detection.
        let mut indeg: Vec<usize> = pred.iter().map(Vec::len).collect();
        let mut queue: Vec<Elem> = (0..n).filter(|&x| indeg[x] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(x) = queue.pop() {
            topo.push(x);
            for &y in &succ[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push(y);
                }
            }
        }
        if topo.len() != n {
            return Err(PosetError::CycleDetected);
        }

        let minimals: Vec<Elem> = (0..n).filter(|&x| pred[x].is_empty()).collect();
        let maximals: Vec<Elem> = (0..n).filter(|&x| succ[x].is_empty()).collect();
        if minimals.len() != 1 {
            return Err(PosetError::NotBounded(format!(
                "{} minimal elements",
                minimals.len()
            )));
        }
        if maximals.len() != 1 {
            return Err(PosetError::NotBounded(format!(
                "{} maximal elements",
                maximals.len()
            )));
        }
        let bottom = minimals[0];
        let top = maximals[0];

        // rank = longest path from bottom; every cover must then climb by
        // exactly one, otherwise some maximal chain has a different length.
        let mut rank = vec![0usize; n];
        for &x in &topo {
            for &y in &succ[x] {
                rank[y] = rank[y].max(rank[x] + 1);
            }
        }
        for &(x, y) in &covers {
            if rank[y] != rank[x] + 1 {
                return Err(PosetError::NotGraded(x, y, rank[x], rank[y]));
            }
        }

        let mut up = vec![BitSet::new(n); n];
        let mut down = vec![BitSet::new(n); n];
        for &x in topo.iter().rev() {
            up[x].insert(x);
            let mut acc = up[x].clone();
            for &y in &succ[x] {
                acc.union_with(&up[y]);
            }
            up[x] = acc;
        }
        for &x in &topo {
            down[x].insert(x);
            let mut acc = down[x].clone();
            for &y in &pred[x] {
                acc.union_with(&down[y]);
            }
            down[x] = acc;
        }

        let mut full = BitSet::new(n);
        for i in 0..n {
            full.insert(i);
        }
        let total_rank = rank[top];
        Ok(GradedPoset {
            name: name.into(),
            labels,
            covers,
            up,
            down,
            rank,
            bottom,
            top,
            total_rank,
            full,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid poset has at least its bottom element
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    pub fn covers(&self) -> &[(Elem, Elem)] {
        &self.covers
    }

    pub fn rank_of(&self, x: Elem) -> usize {
        self.rank[x]
    }

    pub fn rank(&self) -> usize {
        self.total_rank
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.up[x].contains(y)
    }

    pub fn up_set(&self, x: Elem) -> &BitSet {
        &self.up[x]
    }

    pub fn down_set(&self, x: Elem) -> &BitSet {
        &self.down[x]
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.labels.len()
    }

    pub fn elements_of_rank(&self, r: usize) -> Vec<Elem> {
        (0..self.len()).filter(|&x| self.rank[x] == r).collect()
    }

    /// The interval { z : lo <= z <= hi } as a lightweight handle.
    pub fn interval(&self, lo: Elem, hi: Elem) -> Result<IntervalHandle<'_>, PosetError> {
        if !self.leq(lo, hi) {
            return Err(PosetError::NotComparable(lo, hi));
        }
        let set = BitSet::and3(&self.up[lo], &self.down[hi], &self.full);
        let members: Vec<Elem> = set.iter().collect();
        Ok(IntervalHandle {
            parent: self,
            lo,
            hi,
            set,
            members,
        })
    }

    pub fn full_interval(&self) -> IntervalHandle<'_> {
        self.interval(self.bottom, self.top).unwrap()
    }

    /// Minimal upper bounds and maximal lower bounds of {x, y}.
    pub fn bounds(&self, x: Elem, y: Elem) -> (Vec<Elem>, Vec<Elem>) {
        self.full_interval().bounds(x, y)
    }

    /// Scans element pairs in index order and returns the first bowtie.
    ///
    /// `None` means the poset is a lattice. Witness extraction takes two
    /// minimal upper bounds a, c of a join-less pair and then maximal lower
    /// bounds b >= x and d >= y of {a, c} (dually for a meet-less pair).
    pub fn find_bowtie(&self) -> Option<Bowtie> {
        let n = self.len();
        for x in 0..n {
            for y in (x + 1)..n {
                let (mub, mlb) = self.bounds(x, y);
                if mub.len() >= 2 {
                    let (a, c) = (mub[0], mub[1]);
                    let (_, mlb_ac) = self.bounds(a, c);
                    let b = *mlb_ac.iter().find(|&&b| self.leq(x, b)).unwrap();
                    let d = *mlb_ac.iter().find(|&&d| self.leq(y, d) && d != b).unwrap();
                    return Some(Bowtie { a, b, c, d });
                }
                if mlb.len() >= 2 {
                    let (b, d) = (mlb[0], mlb[1]);
                    let (mub_bd, _) = self.bounds(b, d);
                    let a = *mub_bd.iter().find(|&&a| self.leq(a, x)).unwrap();
                    let c = *mub_bd.iter().find(|&&c| self.leq(c, y) && c != a).unwrap();
                    return Some(Bowtie { a, b, c, d });
                }
            }
        }
        None
    }

    pub fn is_lattice(&self) -> bool {
        self.find_bowtie().is_none()
    }

    /// Re-checks the bowtie axioms independently of how it was found.
    pub fn validate_bowtie(&self, bt: &Bowtie) -> bool {
        let Bowtie { a, b, c, d } = *bt;
        let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
        let (mub_bd, _) = self.bounds(b, d);
        let (_, mlb_ac) = self.bounds(a, c);
        distinct
            && mub_bd.contains(&a)
            && mub_bd.contains(&c)
            && mlb_ac.contains(&b)
            && mlb_ac.contains(&d)
    }

    /// All y such that top is the only upper bound of {x, y} and bottom the
    /// only lower bound. In a lattice this is x v y = 1 and x ^ y = 0.
    pub fn complements_in(&self, x: Elem) -> Vec<Elem> {
        let iv = self.full_interval();
        (0..self.len())
            .filter(|&y| iv.are_complements(x, y))
            .collect()
    }

    /// Modularity: in every interval, complementary elements have swapped
    /// rank and corank. Returns the first violating (z, w, x, y) if any.
    pub fn is_modular(&self) -> Result<Option<(Elem, Elem, Elem, Elem)>, PosetError> {
        if !self.is_lattice() {
            return Err(PosetError::NotALattice);
        }
        let n = self.len();
        for z in 0..n {
            for w in 0..n {
                if z == w || !self.leq(z, w) {
                    continue;
                }
                let iv = self.interval(z, w).unwrap();
                let r = iv.rank();
                for (i, &x) in iv.members.iter().enumerate() {
                    for &y in &iv.members[i..] {
                        if iv.are_complements(x, y) && iv.local_rank(x) + iv.local_rank(y) != r {
                            return Ok(Some((z, w, x, y)));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// Same elements, reversed covers; rank_dual(x) = n - rank(x).
    pub fn dual(&self) -> GradedPoset {
        let covers = self.covers.iter().map(|&(x, y)| (y, x)).collect();
        let mut p = GradedPoset::build(format!("dual({})", self.name), self.labels.clone(), covers)
            .expect("dual of a valid poset is valid");
        debug_assert_eq!(p.rank(), self.rank());
        p.name = format!("dual({})", self.name);
        p
    }
}

/// Whether two bounded graded posets admit a cover-preserving bijection.
/// For graded posets that is the same as an order isomorphism. Backtracking
/// over rank levels, pruned by cover-degree invariants; intended for the
/// small posets that appear in tests.
pub fn are_isomorphic(p: &GradedPoset, q: &GradedPoset) -> bool {
    if p.len() != q.len() || p.rank() != q.rank() {
        return false;
    }
    let degrees = |r: &GradedPoset| -> Vec<(usize, usize)> {
        let mut d = vec![(0usize, 0usize); r.len()];
        for &(x, y) in r.covers() {
            d[x].0 += 1; // up-degree
            d[y].1 += 1; // down-degree
        }
        d
    };
    let (pd, qd) = (degrees(p), degrees(q));
    // process elements rank by rank so covers go to already-assigned levels
    let mut order: Vec<Elem> = p.elements().collect();
    order.sort_by_key(|&x| p.rank_of(x));
    let mut p_covers_down: Vec<Vec<Elem>> = vec![Vec::new(); p.len()];
    for &(x, y) in p.covers() {
        p_covers_down[y].push(x);
    }
    let mut q_cover_set: HashSet<(Elem, Elem)> = HashSet::new();
    for &(x, y) in q.covers() {
        q_cover_set.insert((x, y));
    }
    #[allow(clippy::too_many_arguments)]
    fn assign(
        k: usize,
        order: &[Elem],
        p: &GradedPoset,
        q: &GradedPoset,
        pd: &[(usize, usize)],
        qd: &[(usize, usize)],
        p_covers_down: &[Vec<Elem>],
        q_cover_set: &HashSet<(Elem, Elem)>,
        image: &mut Vec<Option<Elem>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        for y in q.elements() {
            if used[y]
                || q.rank_of(y) != p.rank_of(x)
                || qd[y] != pd[x]
                || !p_covers_down[x]
                    .iter()
                    .all(|&b| q_cover_set.contains(&(image[b].unwrap(), y)))
            {
                continue;
            }
            // reverse direction: every q-cover into y from an assigned image
            // must come from a cover into x
            let ok_rev = q.covers().iter().all(|&(u, v)| {
                v != y || !used[u] || p_covers_down[x].iter().any(|&b| image[b] == Some(u))
            });
            if !ok_rev {
                continue;
            }
            image[x] = Some(y);
            used[y] = true;
            if assign(
                k + 1,
                order,
                p,
                q,
                pd,
                qd,
                p_covers_down,
                q_cover_set,
                image,
                used,
            ) {
                return true;
            }
            image[x] = None;
            used[y] = false;
        }
        false
    }
    let mut image = vec![None; p.len()];
    let mut used = vec![false; q.len()];
    assign(
        0,
        &order,
        p,
        q,
        &pd,
        &qd,
        &p_covers_down,
        &q_cover_set,
        &mut image,
        &mut used,
    )
}

/// An interval P(lo, hi), with ranks shifted so lo has local rank 0.
pub struct IntervalHandle<'a> {
    pub parent: &'a GradedPoset,
    pub lo: Elem,
    pub hi: Elem,
    pub set: BitSet,
    pub members: Vec<Elem>,
}

impl<'a> IntervalHandle<'a> {
    pub fn rank(&self) -> usize {
        self.parent.rank[self.hi] - self.parent.rank[self.lo]
    }

    pub fn local_rank(&self, x: Elem) -> usize {
        debug_assert!(self.set.contains(x));
        self.parent.rank[x] - self.parent.rank[self.lo]
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.set.contains(x)
    }

    /// Minimal upper bounds and maximal lower bounds of {x, y} within the
    /// interval. Both sets are nonempty since the interval is bounded.
    pub fn bounds(&self, x: Elem, y: Elem) -> (Vec<Elem>, Vec<Elem>) {
        let ub = BitSet::and3(&self.parent.up[x], &self.parent.up[y], &self.set);
        let lb = BitSet::and3(&self.parent.down[x], &self.parent.down[y], &self.set);
        let ubs: Vec<Elem> = ub.iter().collect();
        let lbs: Vec<Elem> = lb.iter().collect();
        let mub = ubs
            .iter()
            .copied()
            .filter(|&z| !ubs.iter().any(|&z2| z2 != z && self.parent.leq(z2, z)))
            .collect();
        let mlb = lbs
            .iter()
            .copied()
            .filter(|&z| !lbs.iter().any(|&z2| z2 != z && self.parent.leq(z, z2)))
            .collect();
        (mub, mlb)
    }

    /// x and y are complements here iff hi is their only common upper bound
    /// in the interval and lo their only common lower bound. (All common
    /// upper bounds sit below hi, so "unique minimal" collapses to "unique".)
    pub fn are_complements(&self, x: Elem, y: Elem) -> bool {
        BitSet::count_and3(&self.parent.up[x], &self.parent.up[y], &self.set) == 1
            && BitSet::count_and3(&self.parent.down[x], &self.parent.down[y], &self.set) == 1
    }

    /// Materializes the interval as a standalone poset (local indices follow
    /// `self.members` order). Used when the interval is itself the object of
    /// study, e.g. for recursive validation.
    pub fn to_poset(&self) -> GradedPoset {
        let index_of = |g: Elem| self.members.binary_search(&g).unwrap();
        let labels = self
            .members
            .iter()
            .map(|&x| self.parent.labels[x].clone())
            .collect();
        let covers = self
            .parent
            .covers
            .iter()
            .filter(|&&(x, y)| self.set.contains(x) && self.set.contains(y))
            .map(|&(x, y)| (index_of(x), index_of(y)))
            .collect();
        GradedPoset::build(
            format!("{}[{}..{}]", self.parent.name, self.lo, self.hi),
            labels,
            covers,
        )
        .expect("interval of a valid graded poset is valid")
    }
}

// --- JSON interchange -------------------------------------------------

#[derive(Serialize, Deserialize)]
struct ElemJson {
    id: i64,
    label: String,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    name: String,
    elements: Vec<ElemJson>,
    covers: Vec<[i64; 2]>,
}

impl GradedPoset {
    /// Ranks are recomputed on load, never trusted from the file.
    pub fn from_json(text: &str) -> Result<GradedPoset, PosetLoadError> {
        let j: PosetJson = serde_json::from_str(text)?;
        let mut index = std::collections::HashMap::new();
        let mut labels = Vec::with_capacity(j.elements.len());
        for (i, e) in j.elements.iter().enumerate() {
            if index.insert(e.id, i).is_some() {
                return Err(PosetError::DuplicateId(e.id).into());
            }
            labels.push(e.label.clone());
        }
        let mut covers = Vec::with_capacity(j.covers.len());
        for &[x, y] in &j.covers {
            let xi = *index.get(&x).ok_or(PosetError::UnknownCoverId(x))?;
            let yi = *index.get(&y).ok_or(PosetError::UnknownCoverId(y))?;
            covers.push((xi, yi));
        }
        Ok(GradedPoset::build(j.name, labels, covers)?)
    }

    pub fn to_json(&self) -> String {
        let j = PosetJson {
            name: self.name.clone(),
            elements: (0..self.len())
                .map(|i| ElemJson {
                    id: i as i64,
                    label: self.labels[i].clone(),
                })
                .collect(),
            covers: self
                .covers
                .iter()
                .map(|&(x, y)| [x as i64, y as i64])
                .collect(),
        };
        serde_json::to_string_pretty(&j).unwrap()
    }
}

#[derive(Debug, Error)]
pub enum PosetLoadError {
    #[error(transparent)]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] PosetError),
}

/// The six-element bounded graded poset that is not a lattice: a bottom,
/// two atoms b and d, two coatoms a and c covering both atoms, and a top.
pub fn non_lattice_example() -> GradedPoset {
    // indices: 0 = bottom, 1 = b, 2 = d, 3 = a, 4 = c, 5 = top
    let labels = ["0", "b", "d", "a", "c", "1"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let covers = vec![
        (0, 1),
        (0, 2),
        (1, 3),
        (1, 4),
        (2, 3),
        (2, 4),
        (3, 5),
        (4, 5),
    ];
    GradedPoset::build("non-lattice", labels, covers).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_poset() {
        let p = GradedPoset::build("pt", vec!["*".into()], vec![]).unwrap();
        assert_eq!(p.rank(), 0);
        assert_eq!(p.bottom(), p.top());
    }

    #[test]
    fn non_lattice_is_valid_rank_3() {
        let p = non_lattice_example();
        assert_eq!(p.rank(), 3);
        assert_eq!(p.len(), 6);
    }

    #[test]
    fn chain_with_shortcut_is_not_graded() {
        // 0 < 1 < 2 plus a direct cover 0 < 2
        let labels = vec!["0".into(), "m".into(), "1".into()];
        let covers = vec![(0, 1), (1, 2), (0, 2)];
        match GradedPoset::build("bad", labels, covers) {
            Err(PosetError::NotGraded(0, 2, 0, 2)) => {}
            other => panic!("expected NotGraded, got {other:?}"),
        }
    }

    #[test]
    fn cycle_detected() {
        let labels = vec!["a".into(), "b".into()];
        let covers = vec![(0, 1), (1, 0)];
        assert_eq!(
            GradedPoset::build("cyc", labels, covers).unwrap_err(),
            PosetError::CycleDetected
        );
    }

    #[test]
    fn two_bottoms_rejected() {
        let labels = vec!["a".into(), "b".into(), "t".into()];
        let covers = vec![(0, 2), (1, 2)];
        assert!(matches!(
            GradedPoset::build("nb", labels, covers),
            Err(PosetError::NotBounded(_))
        ));
    }

    #[test]
    fn bounds_in_non_lattice() {
        let p = non_lattice_example();
        // b = 1, d = 2; minimal upper bounds are the coatoms a = 3, c = 4.
        let (mub, mlb) = p.bounds(1, 2);
        assert_eq!(mub, vec![3, 4]);
        assert_eq!(mlb, vec![0]);
        let (mub_xx, mlb_xx) = p.bounds(1, 1);
        assert_eq!(mub_xx, vec![1]);
        assert_eq!(mlb_xx, vec![1]);
    }

    #[test]
    fn bowtie_in_non_lattice() {
        let p = non_lattice_example();
        let bt = p.find_bowtie().expect("not a lattice");
        assert!(p.validate_bowtie(&bt));
        assert!(matches!(p.is_modular(), Err(PosetError::NotALattice)));
    }

    #[test]
    fn interval_is_valid_poset() {
        let p = non_lattice_example();
        for x in p.elements() {
            for y in p.elements() {
                if p.leq(x, y) {
                    let iv = p.interval(x, y).unwrap();
                    let q = iv.to_poset();
                    assert_eq!(q.rank(), p.rank_of(y) - p.rank_of(x));
                }
            }
        }
        assert!(matches!(
            p.interval(3, 1),
            Err(PosetError::NotComparable(3, 1))
        ));
        let full = p.interval(p.bottom(), p.top()).unwrap();
        assert_eq!(full.members.len(), p.len());
        let single = p.interval(1, 1).unwrap();
        assert_eq!(single.members, vec![1]);
        assert_eq!(single.rank(), 0);
    }

    #[test]
    fn complements_of_bottom_is_top() {
        let p = non_lattice_example();
        assert_eq!(p.complements_in(p.bottom()), vec![p.top()]);
        assert_eq!(p.complements_in(p.top()), vec![p.bottom()]);
    }

    #[test]
    fn dual_involution() {
        let p = non_lattice_example();
        let dd = p.dual().dual();
        assert_eq!(dd.rank(), p.rank());
        for x in p.elements() {
            assert_eq!(dd.rank_of(x), p.rank_of(x));
            for y in p.elements() {
                assert_eq!(dd.leq(x, y), p.leq(x, y));
            }
        }
        let d = p.dual();
        for x in p.elements() {
            assert_eq!(d.rank_of(x), p.rank() - p.rank_of(x));
        }
    }

    #[test]
    fn complements_respect_duality() {
        let p = non_lattice_example();
        let d = p.dual();
        for x in p.elements() {
            assert_eq!(p.complements_in(x), d.complements_in(x));
        }
    }

    #[test]
    fn json_round_trip() {
        let p = non_lattice_example();
        let q = GradedPoset::from_json(&p.to_json()).unwrap();
        assert_eq!(q.len(), p.len());
        assert_eq!(q.rank(), p.rank());
        for x in p.elements() {
            assert_eq!(q.rank_of(x), p.rank_of(x));
        }
    }
}
