//! Acceptance gate: one test per headline requirement, each printing a
//! single PASS line on success (run with `--nocapture` to see them). Every
//! tolerance is pinned here rather than referenced from library constants
//! so that accidental constant drift fails the gate.

use num_rational::Ratio;
use orthocurve::coxeter::{CoxeterSystem, CoxeterType};
use orthocurve::families::{
    boolean_lattice, chain_to_boolean, maximal_chains, noncrossing_partition_lattice,
    subspace_poset,
};
use orthocurve::metric::{
    diagonal_link, edge_length, triangle_check, triangle_product_identity_exact,
};
use orthocurve::poset::GradedPoset;
use orthocurve::spindle::{
    cat0_verdict_rank_le4, check_cycle, enumerate_global_spindles, enumerate_in_interval,
    find_short_spindle, girth_cutoff, VerdictStatus, Witness,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::time::{Duration, Instant};

mod common;
use common::{is_lattice_oracle, random_poset};

fn pass(n: u32, what: &str) {
    println!("[PASS] criterion {n:02}: {what}");
}

/// Verdicts for the noncrossing partition lattices of the rank-4 Coxeter
/// types, each within 60 seconds, with re-validating girth-6 witnesses for
/// the negative cases.
#[test]
fn criterion_01_coxeter_ncw_verdicts() {
    let expectations = [
        (CoxeterType::A(4), VerdictStatus::Cat0),
        (CoxeterType::B(4), VerdictStatus::Cat0),
        (CoxeterType::D(4), VerdictStatus::NotCat0),
        (CoxeterType::F4, VerdictStatus::NotCat0),
        (CoxeterType::H4, VerdictStatus::NotCat0),
    ];
    for (t, expected) in expectations {
        let started = Instant::now();
        let w = CoxeterSystem::build(t);
        let nc = w.build_ncw();
        let verdict = cat0_verdict_rank_le4(&nc);
        let elapsed = started.elapsed();
        assert_eq!(verdict.status, expected, "{t:?}");
        if expected == VerdictStatus::NotCat0 {
            match verdict.witness {
                Some(Witness::Spindle(sp)) => {
                    assert_eq!(sp.cycle.len(), 6, "{t:?}: witness girth");
                    assert!(sp.short, "{t:?}: witness must be short");
                    let revalidated = check_cycle(&nc, sp.lo, sp.hi, &sp.cycle).unwrap();
                    assert!(revalidated.is_some(), "{t:?}: witness re-validation");
                }
                other => panic!("{t:?}: expected spindle witness, got {other:?}"),
            }
        }
        assert!(elapsed < Duration::from_secs(60), "{t:?} took {elapsed:?}");
    }
    pass(
        1,
        "NC_W verdicts: A4, B4 CAT(0); D4, F4, H4 not, each in < 60s with girth-6 witnesses",
    );
}

#[test]
fn criterion_02_nc5_fast_cat0() {
    let started = Instant::now();
    let nc5 = noncrossing_partition_lattice(5).unwrap();
    assert_eq!(nc5.len(), 42);
    let verdict = cat0_verdict_rank_le4(&nc5);
    let elapsed = started.elapsed();
    assert_eq!(verdict.status, VerdictStatus::Cat0);
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass(2, "NC_5 (42 elements) is CAT(0), decided in < 1s");
}

#[test]
fn criterion_03_edge_length_constants() {
    let e112 = edge_length(1, 1, 2).unwrap();
    assert!((e112.theta / PI - 0.304).abs() <= 0.001);
    assert_eq!(e112.cos_sq, Ratio::new(1, 3));
    let e121 = edge_length(1, 2, 1).unwrap();
    assert!((e121.theta / PI - 0.392).abs() <= 0.001);
    assert_eq!(e121.cos_sq, Ratio::new(1, 9));
    let e111 = edge_length(1, 1, 1).unwrap();
    assert_eq!(e111.cos_sq, Ratio::new(1, 4));
    assert!((e111.theta - PI / 3.0).abs() < 1e-15);
    pass(
        3,
        "edge constants: (1,1,2) ~ 0.304*pi, (1,2,1) ~ 0.392*pi, cos^2(1,1,1) = 1/4 exactly",
    );
}

#[test]
fn criterion_04_boolean_spindles_are_equatorial() {
    for n in [3u32, 4, 5] {
        let started = Instant::now();
        let b = boolean_lattice(n).unwrap();
        let spindles = enumerate_global_spindles(&b, 6);
        let elapsed = started.elapsed();
        assert!(!spindles.is_empty(), "B_{n} has girth-6 spindles");
        for s in &spindles {
            assert_eq!(s.girth(), 6, "B_{n}");
            assert!((s.length - 2.0 * PI).abs() <= 1e-9, "B_{n}: {}", s.length);
            assert!(!s.short);
        }
        if n == 5 {
            assert!(elapsed < Duration::from_secs(30), "B_5 took {elapsed:?}");
        }
    }
    pass(
        4,
        "B_3, B_4, B_5: every spindle has girth 6 and length 2*pi +- 1e-9, none short; B_5 < 30s",
    );
}

#[test]
fn criterion_05_subspace_lattices_modular_and_cat0() {
    let l3 = subspace_poset(3, 2).unwrap();
    let l4 = subspace_poset(4, 2).unwrap();
    for p in [&l3, &l4] {
        assert_eq!(p.is_modular().unwrap(), None, "{} modular", p.name());
        assert!(find_short_spindle(p).is_none(), "{}", p.name());
    }
    assert_eq!(cat0_verdict_rank_le4(&l4).status, VerdictStatus::Cat0);
    pass(
        5,
        "L_3(F_2) and L_4(F_2) are modular with no short spindle; L_4(F_2) is CAT(0)",
    );
}

#[test]
fn criterion_06_bowtie_oracle_on_random_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE);
    let mut checked = 0usize;
    while checked < 100 {
        let p = random_poset(&mut rng, 4, 5);
        assert!(p.len() <= 40);
        let fast = p.find_bowtie();
        let oracle = is_lattice_oracle(&p);
        assert_eq!(fast.is_none(), oracle);
        if let Some(bt) = fast {
            assert!(p.validate_bowtie(&bt));
        }
        // bowties and interval girth-4 spindles are the same obstruction
        let mut girth4 = false;
        'scan: for z in p.elements() {
            for w in p.elements() {
                if z == w || !p.leq(z, w) {
                    continue;
                }
                let iv = p.interval(z, w).unwrap();
                if iv.rank() < 2 {
                    continue;
                }
                if enumerate_in_interval(&iv, 4, None)
                    .iter()
                    .any(|s| s.girth() == 4)
                {
                    girth4 = true;
                    break 'scan;
                }
            }
        }
        assert_eq!(girth4, !oracle);
        checked += 1;
    }
    pass(6, "100 random bounded graded posets: bowtie search = brute-force lattice test = girth-4 spindles");
}

#[test]
fn criterion_07_subspace_diagonal_link_is_heawood() {
    let l3 = subspace_poset(3, 2).unwrap();
    let link = diagonal_link(&l3.full_interval()).unwrap();
    assert_eq!(link.vertices.len(), 14);
    assert_eq!(link.edges.len(), 21);
    for e in &link.edges {
        assert_eq!(e.spec.cos_sq, Ratio::new(1, 4));
        assert!((e.spec.theta - PI / 3.0).abs() < 1e-15);
    }
    assert_eq!(link.graph_girth(), Some(6));
    pass(
        7,
        "diagonal link of L_3(F_2) is the Heawood graph: 14 vertices, 21 pi/3 edges, girth 6",
    );
}

#[test]
fn criterion_08_verdict_matches_exhaustive_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xFACE);
    let mut corpus: Vec<GradedPoset> = (0..40).map(|_| random_poset(&mut rng, 4, 5)).collect();
    corpus.push(orthocurve::poset::non_lattice_example());
    corpus.push(boolean_lattice(4).unwrap());
    corpus.push(noncrossing_partition_lattice(5).unwrap());
    corpus.push(orthocurve::families::partition_lattice(4).unwrap());
    corpus.push(subspace_poset(4, 2).unwrap());
    corpus.push(CoxeterSystem::build(CoxeterType::D(4)).build_ncw());
    for p in &corpus {
        let verdict = cat0_verdict_rank_le4(p);
        let mut exhaustive_cat0 = p.find_bowtie().is_none();
        if exhaustive_cat0 {
            'scan: for z in p.elements() {
                for w in p.elements() {
                    if z == w || !p.leq(z, w) {
                        continue;
                    }
                    let iv = p.interval(z, w).unwrap();
                    if iv.rank() < 3 {
                        continue;
                    }
                    if enumerate_in_interval(&iv, girth_cutoff(iv.rank()), None)
                        .iter()
                        .any(|s| s.short)
                    {
                        exhaustive_cat0 = false;
                        break 'scan;
                    }
                }
            }
        }
        let expected = if exhaustive_cat0 {
            VerdictStatus::Cat0
        } else {
            VerdictStatus::NotCat0
        };
        assert_eq!(verdict.status, expected, "poset {}", p.name());
    }
    pass(
        8,
        "fast verdict = exhaustive spindle enumeration over all intervals, full corpus",
    );
}

#[test]
fn criterion_09_triangle_identities_up_to_total_10() {
    let mut count = 0usize;
    for i in 1u32..=7 {
        for j in 1u32..=7 {
            for k in 1u32..=7 {
                for l in 1u32..=7 {
                    if i + j + k + l > 10 {
                        continue;
                    }
                    assert!(
                        triangle_product_identity_exact(i, j, k, l),
                        "({i},{j},{k},{l})"
                    );
                    let t = triangle_check(i, j, k, l).unwrap();
                    assert!(
                        (t.angle_y - PI / 2.0).abs() < 1e-12,
                        "({i},{j},{k},{l}): angle {}",
                        t.angle_y
                    );
                    count += 1;
                }
            }
        }
    }
    assert_eq!(count, 210); // compositions of 4..=10 into 4 positive parts
    pass(
        9,
        "all 210 compositions with i+j+k+l <= 10: exact product identity, right angle within 1e-12",
    );
}

#[test]
fn criterion_10_every_maximal_chain_spans_a_boolean_subposet() {
    let started = Instant::now();
    for n in [3usize, 4, 5] {
        let nc = noncrossing_partition_lattice(n).unwrap();
        let chains = maximal_chains(&nc);
        assert!(!chains.is_empty());
        for chain in &chains {
            let emb = chain_to_boolean(&nc, chain).unwrap();
            assert_eq!(emb.elements.len(), 1 << (n - 1));
            assert!(emb.is_boolean_subposet(&nc), "NC_{n} chain {chain:?}");
            assert!(emb.contains_chain(chain), "NC_{n} chain {chain:?}");
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    pass(10, "every maximal chain of NC_3, NC_4, NC_5 extends to a boolean subposet containing it, < 10s");
}
