//! Every Rust snippet from the mdbook guide (book/src), kept verbatim so
//! the guide cannot drift from the library. One test per snippet, named
//! after its chapter.

use std::f64::consts::PI;

// book/src/introduction.md
#[test]
fn introduction_nc4_verdict() {
    use orthocurve::families::noncrossing_partition_lattice;
    use orthocurve::spindle::{cat0_verdict_rank_le4, VerdictStatus};

    let nc4 = noncrossing_partition_lattice(4).unwrap();
    let verdict = cat0_verdict_rank_le4(&nc4);
    assert_eq!(verdict.status, VerdictStatus::Cat0);
}

// book/src/posets.md
#[test]
fn posets_diamond() {
    use orthocurve::poset::GradedPoset;

    // the diamond: bottom, two atoms, top
    let labels = vec!["0".into(), "a".into(), "b".into(), "1".into()];
    let covers = vec![(0, 1), (0, 2), (1, 3), (2, 3)];
    let p = GradedPoset::build("diamond", labels, covers).unwrap();
    assert_eq!(p.rank(), 2);
    assert!(p.leq(p.bottom(), p.top()));
}

// book/src/posets.md
#[test]
fn posets_bowtie() {
    use orthocurve::poset::non_lattice_example;

    let p = non_lattice_example(); // rank 3, six elements
    let bt = p.find_bowtie().expect("not a lattice");
    assert!(p.validate_bowtie(&bt));
}

// book/src/metric.md
#[test]
fn metric_edge_lengths() {
    use num_rational::Ratio;
    use orthocurve::metric::edge_length;

    // two consecutive ranks in the middle of a rank-3 interval
    let e = edge_length(1, 1, 1).unwrap();
    assert_eq!(e.cos_sq, Ratio::new(1, 4)); // θ = π/3 exactly

    // the two shapes that appear in rank-4 intervals
    let a = edge_length(1, 1, 2).unwrap(); // θ ≈ 0.304 π
    let b = edge_length(1, 2, 1).unwrap(); // θ ≈ 0.392 π
    assert!((a.theta / PI - 0.304).abs() < 1e-3);
    assert!((b.theta / PI - 0.392).abs() < 1e-3);
}

// book/src/metric.md
#[test]
fn metric_heawood() {
    use orthocurve::families::subspace_poset;
    use orthocurve::metric::diagonal_link;

    let l3 = subspace_poset(3, 2).unwrap();
    let link = diagonal_link(&l3.full_interval()).unwrap();
    assert_eq!((link.vertices.len(), link.edges.len()), (14, 21));
    assert_eq!(link.graph_girth(), Some(6));
}

// book/src/spindles.md
#[test]
fn spindles_bowtie_cycle() {
    use orthocurve::poset::non_lattice_example;
    use orthocurve::spindle::{is_global_spindle, spindle_length};

    let p = non_lattice_example();
    let cycle = [3, 1, 4, 2]; // b, a, d, c of the bowtie, starting at a valley
    assert!(is_global_spindle(&p, &cycle).unwrap().is_some());
    let sp = spindle_length(&p.full_interval(), &cycle).unwrap();
    assert!((sp.length - 4.0 * PI / 3.0).abs() < 1e-12);
    assert!(sp.short);
}

// book/src/spindles.md
#[test]
fn spindles_partition_verdict() {
    use orthocurve::families::partition_lattice;
    use orthocurve::spindle::{cat0_verdict_rank_le4, VerdictStatus};

    let pi4 = partition_lattice(4).unwrap();
    assert_eq!(cat0_verdict_rank_le4(&pi4).status, VerdictStatus::Cat0);
}

// book/src/coxeter.md
#[test]
fn coxeter_a4() {
    use orthocurve::coxeter::{CoxeterSystem, CoxeterType};

    let w = CoxeterSystem::build(CoxeterType::A(4));
    assert_eq!((w.order(), w.num_reflections()), (120, 10));
    let nc = w.build_ncw();
    assert_eq!(nc.len(), 42); // the Catalan number C₅
}
