//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `--nocapture`). Numeric tolerances are pinned here next to
//! the assertions that use them.

use deza_core::analysis::{alpha_beta, children, complement_is_deza, GraphKind};
use deza_core::classify;
use deza_core::codec::from_graph6;
use deza_core::constructions::{
    coclique_extension, complete_times_matchings, dual_seidel_switch, find_switching_involutions,
    hypercube_complement, lattice, named_involution, paley, quasi_lattice, quasi_triangular,
    triangular, two_clique_extension, FamilySpec, NamedInvolution,
};
use deza_core::cyclotomic::{
    class_complement_graph, class_graph, lm_solutions, one_class_strictly_deza_condition, scheme,
    scheme_is_symmetric, solve_lm, two_class_strictly_deza_condition,
};
use deza_core::enumeration::{cayley_deza_check, enumerate_circulants, verify_2p};
use deza_core::field::{factor_prime_power, FiniteField};
use deza_core::graph::cayley_graph;
use deza_core::iso::is_isomorphic;
use deza_core::spectra::{children_spectra, spectrum, switching_spectrum_check};
use deza_core::{Error, Graph};

/// Tolerance for comparing spectra computed two different ways.
const SPECTRAL_TOL: f64 = 1e-6;

/// q values at which 4q = L² + 27M² has two absolute-value solutions, so the
/// Diophantine solver must refuse rather than guess; the scheme-extracted
/// pair is still checked against the equation there.
const NON_UNIQUE_LM: [u64; 2] = [49, 169];

fn criterion(name: &str, body: impl FnOnce() + std::panic::UnwindSafe) {
    let result = std::panic::catch_unwind(body);
    match &result {
        Ok(()) => println!("criterion {name}: PASS"),
        Err(_) => println!("criterion {name}: FAIL"),
    }
    if let Err(e) = result {
        std::panic::resume_unwind(e);
    }
}

fn assert_params(g: &Graph, expect: (usize, u32, u32, u32), label: &str) {
    let r = classify(g).unwrap();
    assert!(r.strictly_deza, "{label} should be strictly Deza, got {:?}", r.kind);
    assert_eq!(
        (r.n, r.k.unwrap(), r.b.unwrap(), r.a.unwrap()),
        expect,
        "{label} parameters"
    );
}

#[test]
fn criterion_1_parameter_reproduction() {
    criterion("1 (parameter reproduction)", || {
        for q in [5u64, 9, 13, 17] {
            let r = classify(&paley(q).unwrap()).unwrap();
            assert_eq!(r.kind, GraphKind::StronglyRegular, "P({q})");
            assert_eq!(r.n as u64, q);
            assert_eq!(r.k.unwrap() as u64, (q - 1) / 2);
            assert_eq!(r.edge_regular.unwrap() as u64, (q - 5) / 4, "P({q}) lambda");
            assert_eq!(r.coedge_regular.unwrap() as u64, (q - 1) / 4, "P({q}) mu");
        }
        for p in [5u64, 13] {
            let g = two_clique_extension(&paley(p).unwrap()).unwrap();
            let expect = (2 * p as usize, p as u32, (p - 1) as u32, ((p - 1) / 2) as u32);
            assert_params(&g, expect, &format!("P({p})[K2]"));
        }
        assert_params(&quasi_lattice(5).unwrap(), (25, 8, 3, 2), "quasi-lattice 5");
        for which in [NamedInvolution::MainDiagonal, NamedInvolution::PointReflection] {
            let g = lattice(6).unwrap();
            let p = named_involution(&FamilySpec::Lattice(6), which).unwrap();
            let switched = dual_seidel_switch(&g, &p).unwrap();
            assert_params(&switched, (36, 10, 4, 2), &format!("L(6) switched by {which:?}"));
        }
        assert_params(&quasi_triangular(8).unwrap(), (28, 12, 6, 4), "quasi-triangular 8");
        for d in [3u32, 4, 5] {
            let g = hypercube_complement(d as usize).unwrap();
            let n = 1usize << d;
            let expect = (n, n as u32 - d - 1, n as u32 - 2 * d, n as u32 - 2 * d - 2);
            assert_params(&g, expect, &format!("hypercube-c {d}"));
        }
    });
}

#[test]
fn criterion_2_spectral_theorem() {
    criterion("2 (children spectra and hypercube-complement spectrum)", || {
        let g = hypercube_complement(3).unwrap();
        let report = classify(&g).unwrap();
        let parent = spectrum(&g).unwrap();
        let (formula_a, formula_b) = children_spectra(&report, &parent).unwrap();
        let ch = children(&g, &report).unwrap();
        let direct_a = spectrum(&ch.child_a).unwrap();
        let direct_b = spectrum(&ch.child_b).unwrap();
        assert!(formula_a.multiset_close(&direct_a, SPECTRAL_TOL), "child A spectra differ");
        assert!(formula_b.multiset_close(&direct_b, SPECTRAL_TOL), "child B spectra differ");

        for d in [3i64, 4] {
            let spec = spectrum(&hypercube_complement(d as usize).unwrap()).unwrap();
            let mut expected: Vec<f64> = (1..=d).map(|i| (-1 - (d - 2 * i)) as f64).collect();
            expected.push(((1i64 << d) - d - 1) as f64);
            expected.sort_by(|x, y| y.partial_cmp(x).unwrap());
            assert_eq!(spec.distinct_count(), d as usize + 1, "d = {d}");
            for (line, want) in spec.lines.iter().zip(&expected) {
                assert!(
                    (line.value - want).abs() < SPECTRAL_TOL,
                    "d = {d}: eigenvalue {} vs expected {want}",
                    line.value
                );
            }
        }
    });
}

#[test]
fn criterion_3_switching_invariants() {
    criterion("3 (switching invariants)", || {
        let mut cases: Vec<(String, Graph, deza_core::VertexPermutation)> = Vec::new();
        for n in [4usize, 5, 6] {
            let fam = FamilySpec::Lattice(n);
            let g = fam.build().unwrap();
            cases.push((
                format!("L({n}) main diagonal"),
                g.clone(),
                named_involution(&fam, NamedInvolution::MainDiagonal).unwrap(),
            ));
            if n % 2 == 0 {
                cases.push((
                    format!("L({n}) point reflection"),
                    g,
                    named_involution(&fam, NamedInvolution::PointReflection).unwrap(),
                ));
            }
        }
        for n in [6usize, 8] {
            let fam = FamilySpec::Triangular(n);
            cases.push((
                format!("T({n}) diagonal reflection"),
                fam.build().unwrap(),
                named_involution(&fam, NamedInvolution::DiagonalReflection).unwrap(),
            ));
        }
        for n in [4usize, 5, 6] {
            let fam = FamilySpec::LatticeComplement(n);
            let g = fam.build().unwrap();
            for i in 1..=n / 2 {
                cases.push((
                    format!("L({n}) complement {i}-automorphism"),
                    g.clone(),
                    named_involution(&fam, NamedInvolution::IAutomorphism(i)).unwrap(),
                ));
            }
        }
        for n in 5usize..=8 {
            let fam = FamilySpec::TriangularComplement(n);
            cases.push((
                format!("T({n}) complement 1-2 swap"),
                fam.build().unwrap(),
                named_involution(&fam, NamedInvolution::OneTwo).unwrap(),
            ));
        }
        for (label, g, p) in &cases {
            let switched = dual_seidel_switch(g, p).unwrap();
            assert!(
                switching_spectrum_check(g, &switched).unwrap(),
                "{label}: squared spectra differ"
            );
            assert_eq!(&dual_seidel_switch(&switched, p).unwrap(), g, "{label}: double switch");
        }

        let only = find_switching_involutions(&triangular(7).unwrap()).unwrap();
        assert_eq!(only.len(), 1, "T(7) admits only the identity");
        assert!(only[0].is_identity());
    });
}

#[test]
fn criterion_4_cyclotomic_sweep() {
    criterion("4 (cyclotomic sweep to q = 200)", || {
        let qs: Vec<u64> = (2..=200)
            .filter(|&q| factor_prime_power(q).is_some() && (q - 1) % 3 == 0)
            .collect();
        assert_eq!(qs.len(), 28);
        for &q in &qs {
            assert!(scheme_is_symmetric(q, 3).unwrap(), "q = {q}");
            let field = FiniteField::of_order(q).unwrap();
            // the constructor re-derives the intersection-number table and
            // checks both quadratic identities before returning
            let sch = scheme(&field).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        assert_eq!(
                            sch.p[i][j][k],
                            sch.p[(i + 1) % 3][(j + 1) % 3][(k + 1) % 3],
                            "cyclic shift at q = {q}"
                        );
                    }
                }
            }
            let extracted = (sch.l.unsigned_abs(), sch.m_sol.unsigned_abs());
            match solve_lm(q) {
                Ok(pair) => {
                    assert!(!NON_UNIQUE_LM.contains(&q), "q = {q} should not be unique");
                    assert_eq!(pair, extracted, "q = {q}");
                }
                Err(Error::DiophantineFailure(_)) => {
                    assert!(NON_UNIQUE_LM.contains(&q), "unexpected non-uniqueness at q = {q}");
                    let all = lm_solutions(q);
                    assert_eq!(all.len(), 2, "q = {q}");
                    assert!(all.contains(&extracted), "q = {q}");
                }
                Err(other) => panic!("solve_lm({q}): {other}"),
            }

            let g1 = class_graph(&field, 1).unwrap();
            let r1 = classify(&g1).unwrap();
            if q == 7 {
                // arithmetic condition holds but the graph is the heptagon
                assert!(one_class_strictly_deza_condition(q));
                assert!(!r1.strictly_deza);
                assert_eq!(r1.diameter, Some(3));
            } else {
                assert_eq!(
                    r1.strictly_deza,
                    one_class_strictly_deza_condition(q),
                    "one-class condition at q = {q}"
                );
            }
            let g3 = class_complement_graph(&field, 3).unwrap();
            let r3 = classify(&g3).unwrap();
            assert_eq!(
                r3.strictly_deza,
                two_class_strictly_deza_condition(q),
                "two-class condition at q = {q}"
            );
            if q == 16 {
                assert_eq!(r3.kind, GraphKind::StronglyRegular);
            }
            if q <= 64 {
                let g2 = class_graph(&field, 2).unwrap();
                let g3s = class_graph(&field, 3).unwrap();
                assert!(is_isomorphic(&g1, &g2), "class graphs at q = {q}");
                assert!(is_isomorphic(&g2, &g3s), "class graphs at q = {q}");
            }
        }

        let f19 = FiniteField::of_order(19).unwrap();
        assert_params(&class_graph(&f19, 1).unwrap(), (19, 6, 2, 1), "one-class graph on GF(19)");
        let f13 = FiniteField::of_order(13).unwrap();
        assert_params(
            &class_complement_graph(&f13, 3).unwrap(),
            (13, 8, 5, 4),
            "two-class graph on GF(13)",
        );
    });
}

#[test]
fn criterion_5_two_prime_classification() {
    criterion("5 (exhaustive 2p circulant verification)", || {
        for p in [3u64, 5, 7, 11, 13] {
            let verdict = verify_2p(p).unwrap();
            assert!(verdict.verified, "p = {p}: {verdict:?}");
            if p % 4 == 1 {
                assert_eq!(verdict.classes, 1, "p = {p}");
                assert_eq!(
                    verdict.params,
                    Some([2 * p, p, p - 1, (p - 1) / 2]),
                    "p = {p}"
                );
            } else {
                assert_eq!(verdict.classes, 0, "p = {p}");
            }
        }
    });
}

#[test]
fn criterion_6_oracle_equivalence() {
    criterion("6 (difference-multiset and complement oracles)", || {
        let mut deza_seen = 0usize;
        for n in 4usize..=16 {
            for mask in 0u32..1 << (n / 2) {
                let mut conn = Vec::new();
                for i in 0..n / 2 {
                    if mask >> i & 1 == 1 {
                        conn.push(i + 1);
                        if i + 1 != n - i - 1 {
                            conn.push(n - i - 1);
                        }
                    }
                }
                let check = cayley_deza_check(&[n], &conn).unwrap();
                let g = cayley_graph(&[n], &conn).unwrap();
                let report = classify(&g).unwrap();
                assert_eq!(
                    check,
                    report.witnesses.len() <= 2,
                    "n = {n}, connection {conn:?}"
                );
                if report.kind == GraphKind::Deza {
                    deza_seen += 1;
                    let predicted = complement_is_deza(&g, &report).unwrap().predicted_deza;
                    let actual = classify(&g.complement()).unwrap().kind == GraphKind::Deza;
                    assert_eq!(predicted, actual, "complement of n = {n}, {conn:?}");
                }
            }
        }
        assert!(deza_seen > 50, "sweep should meet plenty of Deza circulants");
    });
}

#[test]
fn criterion_7_identity_suite() {
    criterion("7 (Deza identities and eigenvalue counts)", || {
        let mut corpus: Vec<(String, Graph)> = vec![
            ("quasi-lattice 5".into(), quasi_lattice(5).unwrap()),
            ("quasi-triangular 8".into(), quasi_triangular(8).unwrap()),
            ("2ce paley 5".into(), two_clique_extension(&paley(5).unwrap()).unwrap()),
            ("2ce paley 13".into(), two_clique_extension(&paley(13).unwrap()).unwrap()),
            ("K3[2K2]".into(), complete_times_matchings(3, 2).unwrap()),
            ("K4[2K2]".into(), complete_times_matchings(4, 2).unwrap()),
            ("K2[3K2]".into(), complete_times_matchings(2, 3).unwrap()),
            ("T(6)[2K1]".into(), coclique_extension(&triangular(6).unwrap(), 2).unwrap()),
        ];
        for d in [3, 4, 5] {
            corpus.push((format!("hypercube-c {d}"), hypercube_complement(d).unwrap()));
        }
        corpus.push((
            "one-class GF(19)".into(),
            class_graph(&FiniteField::of_order(19).unwrap(), 1).unwrap(),
        ));
        corpus.push((
            "two-class GF(13)".into(),
            class_complement_graph(&FiniteField::of_order(13).unwrap(), 3).unwrap(),
        ));
        for n in 8..=16 {
            for record in enumerate_circulants(n, false).unwrap() {
                corpus.push((
                    format!("circulant n={n} class {}", record.class_id),
                    from_graph6(&record.graph6).unwrap(),
                ));
            }
        }

        let mut deza_count = 0usize;
        let mut strict_count = 0usize;
        for (label, g) in &corpus {
            let report = classify(g).unwrap();
            if report.kind == GraphKind::Deza {
                deza_count += 1;
                // verifies M^2 = aA + bB + kI entrywise and that the two
                // children partition the off-diagonal pairs
                children(g, &report).unwrap();
                let (n, k) = (report.n as u64, report.k.unwrap() as u64);
                let (b, a) = (report.b.unwrap() as u64, report.a.unwrap() as u64);
                let (alpha, beta) = alpha_beta(n, k, b, a).unwrap();
                assert_eq!(alpha, report.alpha.unwrap() as u64, "{label}");
                assert_eq!(beta, report.beta.unwrap() as u64, "{label}");
                assert_eq!(alpha + beta, n - 1, "{label}: alpha + beta");
                assert_eq!(a * alpha + b * beta, k * (k - 1), "{label}: count identity");
            }
            if report.strictly_deza {
                strict_count += 1;
                let spec = spectrum(g).unwrap();
                assert!(
                    spec.distinct_count() >= 4,
                    "{label}: strictly Deza graphs have at least 4 distinct eigenvalues, got {}",
                    spec.distinct_count()
                );
            }
        }
        assert!(deza_count >= 15, "corpus has {deza_count} Deza graphs");
        assert!(strict_count >= 12, "corpus has {strict_count} strictly Deza graphs");
    });
}
