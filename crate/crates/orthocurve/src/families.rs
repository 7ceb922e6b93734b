//! Generators for the standard example posets: boolean lattices, partition
//! and noncrossing-partition lattices, finite-field subspace posets, and the
//! chain-to-boolean apartment extraction for NC_n.

use crate::poset::{Elem, GradedPoset};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameters too large for {0}")]
    TooLarge(&'static str),
    #[error("chain is not a maximal chain of the noncrossing partition lattice")]
    NotMaximalChain,
    #[error("unsupported field size {0} (expected a prime in {{2, 3}})")]
    UnsupportedField(u32),
}

/// All subsets of [n] ordered by inclusion; element index = bitmask.
pub fn boolean_lattice(n: u32) -> Result<GradedPoset, FamilyError> {
    if n > 16 {
        return Err(FamilyError::TooLarge("boolean lattice"));
    }
    let size = 1usize << n;
    let labels: Vec<String> = (0..size)
        .map(|mask| {
            let parts: Vec<String> = (0..n)
                .filter(|&b| mask >> b & 1 == 1)
                .map(|b| (b + 1).to_string())
                .collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let mut covers = Vec::new();
    for mask in 0..size {
        for b in 0..n {
            if mask >> b & 1 == 0 {
                covers.push((mask, mask | (1 << b)));
            }
        }
    }
    let mut p = GradedPoset::build(format!("B{n}"), labels, covers).unwrap();
    p.set_name(format!("B{n}"));
    Ok(p)
}

// --- set partitions ----------------------------------------------------

/// Blocks are sorted internally and ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn normalize(mut blocks: Vec<Vec<usize>>) -> SetPartition {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        SetPartition { blocks }
    }

    pub fn singletons(n: usize) -> SetPartition {
        SetPartition {
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    pub fn label(&self) -> String {
        self.blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" | ")
    }

    pub fn from_label(s: &str) -> SetPartition {
        let blocks = s
            .split('|')
            .map(|b| {
                b.split_whitespace()
                    .map(|x| x.parse().unwrap())
                    .collect::<Vec<usize>>()
            })
            .collect();
        SetPartition::normalize(blocks)
    }

    pub fn merge_blocks(&self, i: usize, j: usize) -> SetPartition {
        let mut blocks = self.blocks.clone();
        let merged: Vec<usize> = blocks[i].iter().chain(blocks[j].iter()).copied().collect();
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        blocks.remove(hi);
        blocks.remove(lo);
        blocks.push(merged);
        SetPartition::normalize(blocks)
    }

    /// Cyclic crossing test on the n-gon: two blocks cross iff their marks
    /// alternate around the circle, i.e. the combined cyclic sequence has at
    /// least four runs. Deliberately cyclic, not a linear shortcut.
    pub fn is_noncrossing(&self) -> bool {
        for (i, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[i + 1..] {
                if blocks_cross(a, b) {
                    return false;
                }
            }
        }
        true
    }
}

fn blocks_cross(a: &[usize], b: &[usize]) -> bool {
    if a.len() < 2 || b.len() < 2 {
        return false;
    }
    let mut marks: Vec<(usize, bool)> = a
        .iter()
        .map(|&x| (x, true))
        .chain(b.iter().map(|&x| (x, false)))
        .collect();
    marks.sort_unstable();
    let t = marks.len();
    let transitions = (0..t)
        .filter(|&i| marks[i].1 != marks[(i + 1) % t].1)
        .count();
    transitions >= 4
}

fn all_partitions(n: usize) -> Vec<SetPartition> {
    // restricted growth strings
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let nblocks = rgs.iter().max().map_or(0, |&m| m + 1);
        let mut blocks = vec![Vec::new(); nblocks];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        out.push(SetPartition::normalize(blocks));
        // next RGS
        let mut i = n;
        loop {
            if i == 1 {
                return out;
            }
            i -= 1;
            let cap = rgs[..i].iter().max().unwrap() + 1;
            if rgs[i] < cap {
                rgs[i] += 1;
                for r in rgs[i + 1..].iter_mut() {
                    *r = 0;
                }
                break;
            }
        }
    }
}

fn partition_poset(
    name: String,
    n: usize,
    parts: Vec<SetPartition>,
) -> (GradedPoset, Vec<SetPartition>) {
    let mut parts = parts;
    // rank = n - #blocks; sort by (rank, label) for stable ids
    parts.sort_by_key(|p| (n - p.blocks.len(), p.label()));
    let index: std::collections::HashMap<&SetPartition, usize> =
        parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let labels = parts.iter().map(|p| p.label()).collect();
    let mut covers = Vec::new();
    for (idx, p) in parts.iter().enumerate() {
        let k = p.blocks.len();
        for i in 0..k {
            for j in (i + 1)..k {
                let merged = p.merge_blocks(i, j);
                if let Some(&to) = index.get(&merged) {
                    covers.push((idx, to));
                }
            }
        }
    }
    covers.sort_unstable();
    covers.dedup();
    let poset = GradedPoset::build(name, labels, covers).unwrap();
    (poset, parts)
}

/// The partition lattice Pi_n: partitions of [n] under refinement, rank n-1.
pub fn partition_lattice(n: usize) -> Result<GradedPoset, FamilyError> {
    if !(2..=8).contains(&n) {
        return Err(FamilyError::TooLarge("partition lattice"));
    }
    let (p, _) = partition_poset(format!("Pi{n}"), n, all_partitions(n));
    Ok(p)
}

/// The noncrossing partition lattice NC_n: the subposet of Pi_n on
/// partitions whose blocks have pairwise disjoint convex hulls on the n-gon.
pub fn noncrossing_partition_lattice(n: usize) -> Result<GradedPoset, FamilyError> {
    if !(2..=10).contains(&n) {
        return Err(FamilyError::TooLarge("noncrossing partition lattice"));
    }
    let nc: Vec<SetPartition> = all_partitions(n)
        .into_iter()
        .filter(SetPartition::is_noncrossing)
        .collect();
    let (p, _) = partition_poset(format!("NC{n}"), n, nc);
    Ok(p)
}

// --- subspace posets ----------------------------------------------------

/// A subspace of F_q^n, canonically represented by the reduced row-echelon
/// form of a basis. Two subspaces are equal iff their codes are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubspaceCode {
    pub q: u32,
    pub rows: Vec<Vec<u32>>,
}

impl SubspaceCode {
    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    /// RREF over the prime field with exact modular arithmetic.
    #[allow(clippy::needless_range_loop)] // index loops mirror the elimination
    pub fn from_spanning(q: u32, mut rows: Vec<Vec<u32>>) -> SubspaceCode {
        let inv = |a: u32| -> u32 { (1..q).find(|&b| a * b % q == 1).expect("q prime, a != 0") };
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivot_row = 0;
        for col in 0..ncols {
            if let Some(r) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_multiple_of(q)) {
                rows.swap(pivot_row, r);
                let s = inv(rows[pivot_row][col] % q);
                for c in 0..ncols {
                    rows[pivot_row][c] = rows[pivot_row][c] * s % q;
                }
                for r in 0..rows.len() {
                    if r != pivot_row && !rows[r][col].is_multiple_of(q) {
                        let f = rows[r][col] % q;
                        for c in 0..ncols {
                            rows[r][c] = (rows[r][c] + (q - f) * rows[pivot_row][c]) % q;
                        }
                    }
                }
                pivot_row += 1;
            }
        }
        rows.truncate(pivot_row);
        SubspaceCode { q, rows }
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        let q = self.q;
        let mut v: Vec<u32> = v.iter().map(|&x| x % q).collect();
        for row in &self.rows {
            let col = row.iter().position(|&x| x != 0).unwrap();
            if v[col] != 0 {
                let f = v[col];
                for c in 0..v.len() {
                    v[c] = (v[c] + (q - f) * row[c] % q) % q;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &SubspaceCode) -> bool {
        other.rows.iter().all(|r| self.contains_vector(r))
    }

    pub fn label(&self) -> String {
        if self.rows.is_empty() {
            return "0".into();
        }
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<String>())
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// All subspaces of F_q^n ordered by inclusion, graded by dimension.
pub fn subspace_poset(n: usize, q: u32) -> Result<GradedPoset, FamilyError> {
    if !(q == 2 || q == 3) {
        return Err(FamilyError::UnsupportedField(q));
    }
    if n > 4 {
        return Err(FamilyError::TooLarge("subspace poset"));
    }
    // enumerate all q^n vectors once
    let total = (q as usize).pow(n as u32);
    let vectors: Vec<Vec<u32>> = (0..total)
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let d = (code % q as usize) as u32;
                    code /= q as usize;
                    d
                })
                .collect()
        })
        .collect();
    let zero = SubspaceCode::from_spanning(q, vec![]);
    let mut all: Vec<SubspaceCode> = vec![zero.clone()];
    let mut seen: std::collections::HashSet<SubspaceCode> = all.iter().cloned().collect();
    let mut frontier = vec![zero];
    while let Some(s) = frontier.pop() {
        for v in &vectors {
            if v.iter().all(|&x| x == 0) || s.contains_vector(v) {
                continue;
            }
            let mut rows = s.rows.clone();
            rows.push(v.clone());
            let bigger = SubspaceCode::from_spanning(q, rows);
            if seen.insert(bigger.clone()) {
                all.push(bigger.clone());
                frontier.push(bigger);
            }
        }
    }
    all.sort_by_key(|s| (s.dimension(), s.rows.clone()));
    let labels = all.iter().map(SubspaceCode::label).collect();
    let mut covers = Vec::new();
    for (i, s) in all.iter().enumerate() {
        for (j, t) in all.iter().enumerate() {
            if t.dimension() == s.dimension() + 1 && t.contains_subspace(s) {
                covers.push((i, j));
            }
        }
    }
    Ok(GradedPoset::build(format!("L{n}(F{q})"), labels, covers).unwrap())
}

// --- apartments: chains of NC_n sit inside boolean subposets -------------

/// A planar spanning tree of the n-gon whose edge prefixes reproduce a
/// maximal chain of NC_n, plus the boolean subposet its edge subsets span.
#[derive(Clone, Debug)]
pub struct BooleanEmbedding {
    /// Tree edges in rank order: edges[i-1] joins the two blocks merged at
    /// rank step i.
    pub edges: Vec<(usize, usize)>,
    /// elements[mask] is the NC_n element whose blocks are the connected
    /// components of the edge subset encoded by mask.
    pub elements: Vec<Elem>,
}

fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let (a1, a2) = (a.0.min(a.1), a.0.max(a.1));
    let inside = |x: usize| x > a1 && x < a2;
    if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
        return false;
    }
    inside(b.0) != inside(b.1)
}

fn components_partition(n: usize, edges: &[(usize, usize)]) -> SetPartition {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let mut groups: std::collections::HashMap<usize, Vec<usize>> = Default::default();
    for x in 1..=n {
        groups.entry(find(&mut parent, x)).or_default().push(x);
    }
    SetPartition::normalize(groups.into_values().collect())
}

/// Extracts a planar spanning tree from a maximal chain of NC_n so that the
/// components of edges {1..i} are the blocks of the chain's rank-i element,
/// then spans the 2^(n-1) boolean subposet from arbitrary edge subsets.
pub fn chain_to_boolean(
    ncp: &GradedPoset,
    chain: &[Elem],
) -> Result<BooleanEmbedding, FamilyError> {
    let rank = ncp.rank();
    let n = rank + 1; // NC_n has rank n - 1
    if chain.len() != rank + 1 {
        return Err(FamilyError::NotMaximalChain);
    }
    let parts: Vec<SetPartition> = chain
        .iter()
        .map(|&e| SetPartition::from_label(ncp.label(e)))
        .collect();
    for (i, w) in chain.windows(2).enumerate() {
        if !ncp.leq(w[0], w[1]) || ncp.rank_of(w[0]) != i || ncp.rank_of(w[1]) != i + 1 {
            return Err(FamilyError::NotMaximalChain);
        }
    }
    if chain[0] != ncp.bottom() || chain[rank] != ncp.top() {
        return Err(FamilyError::NotMaximalChain);
    }

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(rank);
    for step in 1..=rank {
        let prev = &parts[step - 1];
        let cur = &parts[step];
        // the merged block is the one not present at the previous rank
        let merged = cur
            .blocks
            .iter()
            .find(|b| !prev.blocks.contains(b))
            .expect("cover merges two blocks");
        let halves: Vec<&Vec<usize>> = prev
            .blocks
            .iter()
            .filter(|b| b.iter().all(|x| merged.contains(x)))
            .collect();
        debug_assert_eq!(halves.len(), 2);
        // candidates: cyclically adjacent boundary vertices of the two
        // halves within the merged block, smallest pair first
        let mut cyc: Vec<usize> = merged.clone();
        cyc.sort_unstable();
        let t = cyc.len();
        let mut candidates: Vec<(usize, usize)> = (0..t)
            .map(|i| (cyc[i], cyc[(i + 1) % t]))
            .filter(|&(a, b)| halves[0].contains(&a) != halves[0].contains(&b))
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        candidates.sort_unstable();
        let edge = candidates
            .into_iter()
            .find(|&c| edges.iter().all(|&e| !chords_cross(e, c)))
            .ok_or(FamilyError::NotMaximalChain)?;
        edges.push(edge);
    }

    // index NC_n elements by partition for the subset lookup
    let by_part: std::collections::HashMap<SetPartition, Elem> = ncp
        .elements()
        .map(|e| (SetPartition::from_label(ncp.label(e)), e))
        .collect();
    let mut elements = Vec::with_capacity(1 << rank);
    for mask in 0..(1usize << rank) {
        let sub: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let part = components_partition(n, &sub);
        let elem = by_part
            .get(&part)
            .copied()
            .ok_or(FamilyError::NotMaximalChain)?;
        elements.push(elem);
    }
    Ok(BooleanEmbedding { edges, elements })
}

impl BooleanEmbedding {
    /// The generated subposet is boolean: subset inclusion of edge masks
    /// matches the order of the ambient poset, with all 2^(n-1) elements
    /// distinct.
    pub fn is_boolean_subposet(&self, ncp: &GradedPoset) -> bool {
        let m = self.elements.len();
        let mut distinct = self.elements.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != m {
            return false;
        }
        for a in 0..m {
            for b in 0..m {
                let subset = a & b == a;
                if ncp.leq(self.elements[a], self.elements[b]) != subset {
                    return false;
                }
            }
        }
        true
    }

    pub fn contains_chain(&self, chain: &[Elem]) -> bool {
        chain
            .iter()
            .enumerate()
            .all(|(i, &e)| self.elements[(1usize << i) - 1] == e)
    }
}

/// All maximal chains of a graded poset, in lexicographic element order.
pub fn maximal_chains(p: &GradedPoset) -> Vec<Vec<Elem>> {
    let mut chains = Vec::new();
    let mut stack = vec![vec![p.bottom()]];
    while let Some(chain) = stack.pop() {
        let last = *chain.last().unwrap();
        if last == p.top() {
            chains.push(chain);
            continue;
        }
        for &(x, y) in p.covers() {
            if x == last {
                let mut next = chain.clone();
                next.push(y);
                stack.push(next);
            }
        }
    }
    chains.sort();
    chains
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_counts() {
        let b0 = boolean_lattice(0).unwrap();
        assert_eq!(b0.len(), 1);
        let b3 = boolean_lattice(3).unwrap();
        assert_eq!(b3.len(), 8);
        assert_eq!(b3.covers().len(), 12);
        assert_eq!(b3.rank(), 3);
        let b4 = boolean_lattice(4).unwrap();
        assert_eq!(b4.rank(), 4);
        assert_eq!(b4.is_modular().unwrap(), None);
        assert!(boolean_lattice(17).is_err());
    }

    #[test]
    fn pi4_shape() {
        let p = partition_lattice(4).unwrap();
        assert_eq!(p.len(), 15); // Bell(4)
        assert_eq!(p.rank(), 3);
        assert_eq!(p.label(p.bottom()), "1 | 2 | 3 | 4");
        assert_eq!(p.label(p.top()), "1 2 3 4");
    }

    #[test]
    fn pi3_is_rank2_with_3_atoms() {
        let p = partition_lattice(3).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p.rank(), 2);
        assert_eq!(p.elements_of_rank(1).len(), 3);
    }

    #[test]
    fn nc4_excludes_exactly_one_partition() {
        let pi = partition_lattice(4).unwrap();
        let nc = noncrossing_partition_lattice(4).unwrap();
        assert_eq!(pi.len() - nc.len(), 1);
        let missing = SetPartition::normalize(vec![vec![1, 3], vec![2, 4]]);
        assert!(!missing.is_noncrossing());
        assert!(nc
            .elements()
            .all(|e| SetPartition::from_label(nc.label(e)) != missing));
    }

    #[test]
    fn crossing_examples_from_the_octagon() {
        let good = SetPartition::normalize(vec![vec![1, 4, 5], vec![2, 3], vec![6, 8], vec![7]]);
        assert!(good.is_noncrossing());
        let bad = SetPartition::normalize(vec![vec![1, 4, 6], vec![2, 3], vec![5, 8], vec![7]]);
        assert!(!bad.is_noncrossing());
    }

    #[test]
    fn nc5_is_catalan() {
        let nc = noncrossing_partition_lattice(5).unwrap();
        assert_eq!(nc.len(), 42);
        assert_eq!(nc.rank(), 4);
    }

    #[test]
    fn subspace_counts() {
        let l1 = subspace_poset(1, 2).unwrap();
        assert_eq!(l1.len(), 2);
        let l3 = subspace_poset(3, 2).unwrap();
        // ranks 1, 7, 7, 1
        assert_eq!(l3.elements_of_rank(0).len(), 1);
        assert_eq!(l3.elements_of_rank(1).len(), 7);
        assert_eq!(l3.elements_of_rank(2).len(), 7);
        assert_eq!(l3.elements_of_rank(3).len(), 1);
        assert_eq!(l3.rank(), 3);
        assert_eq!(l3.is_modular().unwrap(), None);
    }

    #[test]
    fn interval_of_pi4_above_a_pair_is_pi3() {
        let p = partition_lattice(4).unwrap();
        let x = p.elements().find(|&e| p.label(e) == "1 2 | 3 | 4").unwrap();
        let iv = p.interval(x, p.top()).unwrap();
        assert_eq!(iv.members.len(), 5);
        let q = iv.to_poset();
        assert_eq!(q.rank(), 2);
        assert_eq!(q.elements_of_rank(1).len(), 3); // same shape as Pi_3
    }

    #[test]
    fn apartment_extraction_small() {
        let nc3 = noncrossing_partition_lattice(3).unwrap();
        for chain in maximal_chains(&nc3) {
            let emb = chain_to_boolean(&nc3, &chain).unwrap();
            assert!(emb.is_boolean_subposet(&nc3));
            assert!(emb.contains_chain(&chain));
            assert_eq!(emb.elements.len(), 4); // B2
        }
        let nc2 = noncrossing_partition_lattice(2).unwrap();
        for chain in maximal_chains(&nc2) {
            let emb = chain_to_boolean(&nc2, &chain).unwrap();
            assert_eq!(emb.edges.len(), 1);
            assert!(emb.is_boolean_subposet(&nc2));
        }
    }

    #[test]
    fn non_maximal_chain_rejected() {
        let nc4 = noncrossing_partition_lattice(4).unwrap();
        let bad = vec![nc4.bottom(), nc4.top()];
        assert_eq!(
            chain_to_boolean(&nc4, &bad).unwrap_err(),
            FamilyError::NotMaximalChain
        );
    }
}
