//! Shared helpers for integration tests: a seeded random-poset generator
//! and brute-force oracles that avoid the library's bitset machinery.

use orthocurve::poset::{Elem, GradedPoset};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A random bounded graded poset: one bottom, one top, random middle levels
/// with enough covers that every element sits on a maximal chain.
pub fn random_poset(rng: &mut ChaCha8Rng, max_rank: usize, max_width: usize) -> GradedPoset {
    let rank = rng.gen_range(2..=max_rank);
    let mut level_sizes = vec![1usize];
    for _ in 1..rank {
        level_sizes.push(rng.gen_range(1..=max_width));
    }
    level_sizes.push(1);
    let mut levels: Vec<Vec<Elem>> = Vec::new();
    let mut next = 0;
    for &s in &level_sizes {
        levels.push((next..next + s).collect());
        next += s;
    }
    let mut covers: Vec<(Elem, Elem)> = Vec::new();
    for w in levels.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        for &x in lo {
            for &y in hi {
                if rng.gen_bool(0.4) {
                    covers.push((x, y));
                }
            }
        }
        // patch up gradedness: every element needs an up- and a down-cover
        for &x in lo {
            if !covers.iter().any(|&(a, _)| a == x) {
                covers.push((x, hi[rng.gen_range(0..hi.len())]));
            }
        }
        for &y in hi {
            if !covers.iter().any(|&(_, b)| b == y) {
                covers.push((lo[rng.gen_range(0..lo.len())], y));
            }
        }
    }
    let labels = (0..next).map(|i| format!("e{i}")).collect();
    GradedPoset::build("random", labels, covers).expect("construction is bounded and graded")
}

#[allow(clippy::needless_range_loop)]
pub fn leq_oracle(covers: &[(Elem, Elem)], n: usize) -> Vec<Vec<bool>> {
    let mut leq = vec![vec![false; n]; n];
    for x in 0..n {
        leq[x][x] = true;
    }
    // fixpoint closure over the cover digraph
    let mut changed = true;
    while changed {
        changed = false;
        for &(x, y) in covers {
            for z in 0..n {
                if leq[y][z] && !leq[x][z] {
                    leq[x][z] = true;
                    changed = true;
                }
            }
        }
    }
    leq
}

/// Every pair has a unique minimal upper bound and a unique maximal lower
/// bound, computed by full scans.
pub fn is_lattice_oracle(p: &GradedPoset) -> bool {
    let n = p.len();
    let leq = leq_oracle(p.covers(), n);
    for x in 0..n {
        for y in x + 1..n {
            let ubs: Vec<Elem> = (0..n).filter(|&z| leq[x][z] && leq[y][z]).collect();
            let mubs: Vec<Elem> = ubs
                .iter()
                .copied()
                .filter(|&z| !ubs.iter().any(|&w| w != z && leq[w][z]))
                .collect();
            if mubs.len() != 1 {
                return false;
            }
            let lbs: Vec<Elem> = (0..n).filter(|&z| leq[z][x] && leq[z][y]).collect();
            let mlbs: Vec<Elem> = lbs
                .iter()
                .copied()
                .filter(|&z| !lbs.iter().any(|&w| w != z && leq[z][w]))
                .collect();
            if mlbs.len() != 1 {
                return false;
            }
        }
    }
    true
}
