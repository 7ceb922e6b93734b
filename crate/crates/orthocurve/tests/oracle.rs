//! Independent oracles for the fast-path implementations: brute-force
//! lattice tests against the bitset bowtie search, exhaustive spindle
//! enumeration against the rank-4 verdict shortcuts, and structural
//! cross-checks between constructions that must agree.

use orthocurve::coxeter::{CoxeterSystem, CoxeterType};
use orthocurve::families::{
    boolean_lattice, noncrossing_partition_lattice, partition_lattice, subspace_poset,
};
use orthocurve::poset::{are_isomorphic, non_lattice_example, GradedPoset};
use orthocurve::spindle::{
    cat0_verdict_rank_le4, check_cycle, enumerate_in_interval, girth_cutoff, is_global_spindle,
    VerdictStatus, Witness, LENGTH_EPS, TWO_PI,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod common;
use common::{is_lattice_oracle, random_poset};

fn corpus(rng: &mut ChaCha8Rng, count: usize) -> Vec<GradedPoset> {
    (0..count).map(|_| random_poset(rng, 4, 5)).collect()
}

#[test]
fn bowtie_search_agrees_with_lattice_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0521);
    for p in corpus(&mut rng, 120) {
        let oracle = is_lattice_oracle(&p);
        match p.find_bowtie() {
            None => assert!(oracle, "bowtie search missed a join/meet failure"),
            Some(bt) => {
                assert!(!oracle, "bowtie reported in a lattice");
                assert!(p.validate_bowtie(&bt));
            }
        }
    }
}

/// A girth-4 spindle exists in some interval exactly when the poset is not
/// a lattice: bowties and 4-cycles are the same obstruction.
#[test]
fn girth4_spindles_iff_bowtie() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0604);
    for p in corpus(&mut rng, 60) {
        let has_bowtie = p.find_bowtie().is_some();
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
        assert_eq!(has_bowtie, girth4);
    }
}

/// The rank-4 verdict shortcuts (adjacent-rank girth-6 search on the poset
/// and its dual) agree with exhaustive enumeration over every interval up
/// to the provable girth cutoff.
#[test]
fn verdict_agrees_with_exhaustive_interval_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0707);
    let mut posets = corpus(&mut rng, 60);
    posets.push(non_lattice_example());
    posets.push(boolean_lattice(4).unwrap());
    posets.push(partition_lattice(4).unwrap());
    posets.push(noncrossing_partition_lattice(4).unwrap());
    posets.push(noncrossing_partition_lattice(5).unwrap());
    posets.push(subspace_poset(3, 2).unwrap());
    posets.push(subspace_poset(4, 2).unwrap());
    for p in &posets {
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
                    let spindles = enumerate_in_interval(&iv, girth_cutoff(iv.rank()), None);
                    if spindles.iter().any(|s| s.short) {
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
        // witnesses must re-validate
        match verdict.witness {
            Some(Witness::Bowtie(bt)) => assert!(p.validate_bowtie(&bt)),
            Some(Witness::Spindle(sp)) => {
                let ok = check_cycle(p, sp.lo, sp.hi, &sp.cycle).unwrap();
                assert!(ok.is_some(), "spindle witness fails re-validation");
                assert!(sp.short);
            }
            None => assert_eq!(verdict.status, VerdictStatus::Cat0),
        }
    }
}

/// Spindles dualize: reversing all covers keeps every global spindle, with
/// peaks and valleys exchanged and the same length.
#[test]
fn spindles_respect_duality() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0811);
    let mut posets = corpus(&mut rng, 30);
    posets.push(boolean_lattice(4).unwrap());
    posets.push(partition_lattice(4).unwrap());
    for p in &posets {
        let d = p.dual();
        let cutoff = girth_cutoff(p.rank().max(2));
        let ours = enumerate_in_interval(&p.full_interval(), cutoff, None);
        let theirs = enumerate_in_interval(&d.full_interval(), cutoff, None);
        assert_eq!(ours.len(), theirs.len(), "poset {}", p.name());
        let mut a: Vec<f64> = ours.iter().map(|s| s.length).collect();
        let mut b: Vec<f64> = theirs.iter().map(|s| s.length).collect();
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-9);
        }
        // every dual cycle re-validates on the original poset
        for s in &theirs {
            assert!(is_global_spindle(p, &s.cycle).unwrap().is_some());
        }
    }
}

/// In modular lattices every spindle is an equatorial loop of length
/// exactly 2*pi: opposite halves of the loop pair up.
#[test]
fn modular_lattices_have_only_boundary_spindles() {
    for p in [
        boolean_lattice(3).unwrap(),
        boolean_lattice(4).unwrap(),
        subspace_poset(3, 2).unwrap(),
        subspace_poset(3, 3).unwrap(),
        subspace_poset(4, 2).unwrap(),
    ] {
        assert_eq!(p.is_modular().unwrap(), None, "{} not modular", p.name());
        let spindles = enumerate_in_interval(&p.full_interval(), girth_cutoff(p.rank()), None);
        for s in &spindles {
            assert!(
                (s.length - TWO_PI).abs() <= LENGTH_EPS,
                "{}: spindle of length {}",
                p.name(),
                s.length
            );
            assert!(s.boundary && !s.short);
        }
    }
}

// ---------------------------------------------------------------------------
// cross-checks between constructions
// ---------------------------------------------------------------------------

/// The type-A noncrossing partitions of the Coxeter construction coincide
/// with the cyclic-interval construction on {1..n}.
#[test]
fn coxeter_type_a_matches_noncrossing_partitions() {
    for n in 2..=4usize {
        let w = CoxeterSystem::build(CoxeterType::A(n));
        let ncw = w.build_ncw();
        let ncp = noncrossing_partition_lattice(n + 1).unwrap();
        assert_eq!(ncw.len(), ncp.len(), "A{n}");
        assert!(are_isomorphic(&ncw, &ncp), "NC_A{n} vs NC_{}", n + 1);
    }
}

#[test]
fn noncrossing_partition_lattices_are_self_dual() {
    for n in 3..=6usize {
        let p = noncrossing_partition_lattice(n).unwrap();
        assert!(are_isomorphic(&p, &p.dual()), "NC_{n}");
    }
}

/// NC_W is self-dual via w -> w^{-1} delta, an order-reversing bijection.
#[test]
fn ncw_self_duality() {
    for t in [CoxeterType::A(3), CoxeterType::B(3), CoxeterType::D(4)] {
        let w = CoxeterSystem::build(t);
        let nc = w.build_ncw();
        assert!(are_isomorphic(&nc, &nc.dual()), "{t:?}");
    }
}

/// The D4 verdict does not depend on which Coxeter element defines NC_W:
/// a second choice (reversed simple order) gives the same answer.
#[test]
fn d4_verdict_invariant_under_coxeter_element_choice() {
    let w = CoxeterSystem::build(CoxeterType::D(4));
    let nc1 = w.build_ncw();
    let delta2 = {
        let mut acc = w.identity();
        for &s in w.simples.iter().rev() {
            acc = w.compose(acc, s);
        }
        acc
    };
    assert_ne!(delta2, w.delta);
    assert_eq!(w.reflection_length(delta2), 4);
    let nc2 = w.build_ncw_with(delta2);
    assert_eq!(nc1.len(), nc2.len());
    let v1 = cat0_verdict_rank_le4(&nc1);
    let v2 = cat0_verdict_rank_le4(&nc2);
    assert_eq!(v1.status, v2.status);
    assert_eq!(v1.status, VerdictStatus::NotCat0);
}

/// Known cardinalities: group orders, reflection counts and the sizes of
/// NC_W (the W-Catalan numbers).
#[test]
fn coxeter_cardinalities() {
    let cases = [
        (CoxeterType::A(4), 120, 10, 42),
        (CoxeterType::B(4), 384, 16, 70),
        (CoxeterType::D(4), 192, 12, 50),
        (CoxeterType::F4, 1152, 24, 105),
        (CoxeterType::H4, 14400, 60, 280),
    ];
    for (t, order, nrefl, catalan) in cases {
        let w = CoxeterSystem::build(t);
        assert_eq!(w.order(), order, "{t:?} order");
        assert_eq!(w.num_reflections(), nrefl, "{t:?} reflections");
        assert_eq!(
            w.reflection_length(w.delta) as usize,
            w.rank(),
            "{t:?} delta"
        );
        let nc = w.build_ncw();
        assert_eq!(nc.len(), catalan, "{t:?} NC size");
        assert_eq!(nc.rank(), 4, "{t:?} NC rank");
        assert!(nc.find_bowtie().is_none(), "{t:?} NC is a lattice");
    }
}

#[test]
fn isomorphism_search_sanity() {
    let b3 = boolean_lattice(3).unwrap();
    assert!(are_isomorphic(&b3, &b3.dual()));
    let nc4 = noncrossing_partition_lattice(4).unwrap();
    let pi4 = partition_lattice(4).unwrap();
    assert!(!are_isomorphic(&nc4, &pi4));
}

// ---------------------------------------------------------------------------
// property tests
// ---------------------------------------------------------------------------

proptest! {
    /// Edge lengths are symmetric in the outer parts and shrink as the gap
    /// grows relative to them.
    #[test]
    fn edge_length_symmetry(i in 1u32..6, j in 1u32..6, k in 1u32..6) {
        let a = orthocurve::metric::edge_length(i, j, k).unwrap();
        let b = orthocurve::metric::edge_length(k, j, i).unwrap();
        prop_assert_eq!(a.cos_sq, b.cos_sq);
        prop_assert!(a.theta > 0.0 && a.theta < std::f64::consts::PI / 2.0);
    }

    /// The spherical triangle over any composition (i,j,k,l) satisfies the
    /// exact product identity and has a right angle at the middle vertex.
    #[test]
    fn triangle_identities(i in 1u32..5, j in 1u32..5, k in 1u32..5, l in 1u32..5) {
        prop_assert!(orthocurve::metric::triangle_product_identity_exact(i, j, k, l));
        let t = orthocurve::metric::triangle_check(i, j, k, l).unwrap();
        prop_assert!((t.angle_y - std::f64::consts::PI / 2.0).abs() < 1e-12);
    }

    /// Random posets round-trip through the JSON interchange format.
    #[test]
    fn json_round_trip(seed in 0u64..500) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_poset(&mut rng, 4, 4);
        let q = GradedPoset::from_json(&p.to_json()).unwrap();
        prop_assert_eq!(p.len(), q.len());
        prop_assert_eq!(p.covers(), q.covers());
        prop_assert_eq!(p.rank(), q.rank());
    }
}
