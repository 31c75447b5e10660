//! Pinned values: published figures checked directly, derived values checked
//! against the oracles in `common`.

mod common;

use common::*;
use num_bigint::BigUint;
use toricgraph::catalog;
use toricgraph::code::{
    code_params, evaluation_matrix, hilbert_function, hilbert_profile, torus_dimension, torus_hilbert_series_coeffs,
    torus_min_distance, CodeError,
};
use toricgraph::generators::{
    bipartite_disjoint_generators, conjectured_basis, even_cycle_generators, f_sigma_r, regularity_formula_disjoint,
    regularity_upper_bound, GeneratorError, Partition,
};
use toricgraph::graph::{components, cycle_blocks, parse_graph, validate_cycle_family, CycleBlocks, GraphError};
use toricgraph::groebner::{is_groebner, normal_form, s_polynomial, test_conjecture_with, Poly};
use toricgraph::ideal::{
    ideal_dim_at_degree, minimalize, normalize_binomial, reduce_exponent_step, vanishes_on, verify_generating_set,
};
use toricgraph::monomial::MonomialOrder;
use toricgraph::toric::{enumerate_toric_set, kernel_order, length_formula, projective_torus};
use toricgraph::{Binomial, FieldSpec, Graph, Limits};

fn field(q: u64) -> FieldSpec {
    FieldSpec::of_order(q).unwrap()
}

fn lim() -> Limits {
    Limits::default()
}

fn edges1(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect()
}

fn oracle_points(g: &Graph, p: u64) -> std::collections::BTreeSet<Vec<u64>> {
    naive_points(g.n(), &edges1(g), p)
}

fn bx(text: &str, s: usize) -> Binomial {
    catalog::binomial_expr(text, s)
}

#[test]
fn triangle_plus_square_lengths() {
    let g = catalog::triangle_plus_square();
    let comps = components(&g);
    assert_eq!((g.n(), comps.len(), comps.iter().filter(|c| !c.bipartite).count()), (7, 2, 1));
    assert_eq!(length_formula(&g, &field(5)), BigUint::from(1024u32));
    assert_eq!(length_formula(&g, &field(4)), BigUint::from(243u32));
    assert_eq!(enumerate_toric_set(&g, &field(5), &lim()).unwrap().len(), 1024);
    assert_eq!(enumerate_toric_set(&g, &field(4), &lim()).unwrap().len(), 243);
}

#[test]
fn connected_lengths() {
    // (q-1)^{n-1} off bipartite, (q-1)^{n-2} on bipartite
    assert_eq!(enumerate_toric_set(&catalog::cycle(3), &field(3), &lim()).unwrap().len(), 4);
    assert_eq!(enumerate_toric_set(&catalog::cycle(4), &field(3), &lim()).unwrap().len(), 4);
    for q in [3u64, 5, 7] {
        let x = enumerate_toric_set(&catalog::complete_bipartite(2, 3), &field(q), &lim()).unwrap();
        assert_eq!(x.len() as u64, (q - 1).pow(3));
    }
}

#[test]
fn kernel_orders() {
    let tri = components(&catalog::cycle(3)).remove(0);
    let sq = components(&catalog::cycle(4)).remove(0);
    assert_eq!(kernel_order(&tri, &field(5)), 2);
    assert_eq!(kernel_order(&tri, &field(4)), 3);
    assert_eq!(kernel_order(&sq, &field(5)), 4);
}

#[test]
fn enumeration_matches_oracle() {
    for (name, g) in catalog::length_corpus() {
        for p in [3u64, 5] {
            let x = enumerate_toric_set(&g, &field(p), &lim()).unwrap();
            let got: std::collections::BTreeSet<Vec<u64>> =
                x.points.iter().map(|pt| pt.iter().map(|e| e.repr() as u64).collect()).collect();
            assert_eq!(got, oracle_points(&g, p), "{name} p={p}");
        }
    }
}

#[test]
fn torus_examples() {
    assert_eq!(projective_torus(2, &field(3), &lim()).unwrap().len(), 2);
    assert_eq!(projective_torus(3, &field(4), &lim()).unwrap().len(), 9);
    let t = projective_torus(2, &field(5), &lim()).unwrap();
    let pts: Vec<Vec<u32>> = t.points.iter().map(|p| p.iter().map(|e| e.repr()).collect()).collect();
    assert_eq!(pts, vec![vec![1, 1], vec![1, 2], vec![1, 3], vec![1, 4]]);

    let t2 = projective_torus(3, &field(3), &lim()).unwrap();
    assert_eq!(hilbert_function(&t2, 2, &lim()).unwrap(), 4);
    assert_eq!(torus_dimension(3, 3, 2), BigUint::from(4u32));
    assert_eq!(torus_min_distance(3, 4, 1).unwrap(), BigUint::from(6u32));
    assert_eq!(torus_min_distance(3, 3, 1).unwrap(), BigUint::from(2u32));
    assert!(matches!(torus_min_distance(2, 5, 3), Err(CodeError::OutOfRange { .. })));
    let series = torus_hilbert_series_coeffs(2, 3, 5);
    assert_eq!(series, [1u32, 2, 2, 2, 2, 2].map(BigUint::from).to_vec());
}

#[test]
fn torus_against_oracle() {
    for s in 2..=4 {
        for p in [3u64, 5] {
            let x = projective_torus(s, &field(p), &lim()).unwrap();
            let pts = naive_torus(s, p);
            assert_eq!(x.len(), pts.len());
            let reg = (s as u32 - 1) * (p as u32 - 2);
            for d in 0..=reg + 1 {
                let h = naive_hilbert(&pts, d, p) as u64;
                assert_eq!(hilbert_function(&x, d, &lim()).unwrap(), h, "s={s} p={p} d={d}");
                assert_eq!(torus_dimension(s, p as u32, d), BigUint::from(h));
            }
        }
    }
}

#[test]
fn torus_min_distance_against_oracle() {
    for p in [3u64, 5] {
        let pts = naive_torus(3, p);
        for d in 1..(2 * (p as u32 - 2)) {
            let rows = basis_rows(evaluation_rows(&pts, d, p), p);
            if p.pow(rows.len() as u32) > 200_000 {
                continue;
            }
            let delta = brute_min_distance(&rows, p);
            assert_eq!(torus_min_distance(3, p as u32, d).unwrap(), BigUint::from(delta), "p={p} d={d}");
        }
    }
}

#[test]
fn evaluation_matrix_examples() {
    let t1 = projective_torus(2, &field(3), &lim()).unwrap();
    let m = evaluation_matrix(&t1, 1, &lim()).unwrap();
    let reprs: Vec<Vec<u32>> = m.iter().map(|r| r.iter().map(|e| e.repr()).collect()).collect();
    assert_eq!(reprs, vec![vec![1, 1], vec![1, 2]]);
    let m0 = evaluation_matrix(&t1, 0, &lim()).unwrap();
    assert_eq!(m0.len(), 1);
    assert!(m0[0].iter().all(|e| e.repr() == 1));

    let c4 = catalog::cycle(4);
    let x = enumerate_toric_set(&c4, &field(3), &lim()).unwrap();
    let h1 = naive_hilbert(&oracle_points(&c4, 3), 1, 3) as u64;
    assert_eq!(hilbert_function(&x, 1, &lim()).unwrap(), h1);
    assert_eq!(h1, 4);
}

#[test]
fn cycle_regularities() {
    for (n, q, reg) in [(4, 3, 1), (6, 3, 2), (4, 5, 3), (8, 3, 3)] {
        let x = enumerate_toric_set(&catalog::cycle(n), &field(q), &lim()).unwrap();
        assert_eq!(hilbert_profile(&x, None, &lim()).unwrap().regularity, Some(reg), "C{n} q={q}");
    }
}

#[test]
fn code_parameter_examples() {
    let c4 = catalog::cycle(4);
    let x = enumerate_toric_set(&c4, &field(3), &lim()).unwrap();
    let p0 = code_params(&x, 0, true, &lim()).unwrap();
    assert_eq!((p0.dimension, p0.min_distance), (1, Some(4)));
    for d in 1..4 {
        let p = code_params(&x, d, true, &lim()).unwrap();
        assert_eq!((p.length, p.dimension, p.min_distance), (4, 4, Some(1)));
    }
    let t2 = projective_torus(3, &field(3), &lim()).unwrap();
    assert_eq!(code_params(&t2, 1, true, &lim()).unwrap().min_distance, Some(2));
}

#[test]
fn min_distance_against_oracle() {
    for (g, p) in [(catalog::cycle(6), 3u64), (catalog::cycle(3), 5), (catalog::star(3), 5), (catalog::cycle(4), 5)] {
        let x = enumerate_toric_set(&g, &field(p), &lim()).unwrap();
        let pts = oracle_points(&g, p);
        let reg = hilbert_profile(&x, None, &lim()).unwrap().regularity.unwrap();
        for d in 0..=reg {
            let rows = evaluation_rows(&pts, d, p);
            let dim = rank_mod_p(rows.clone(), p) as u32;
            if p.pow(dim) > 200_000 {
                continue;
            }
            let rows = basis_rows(rows, p);
            let want = brute_min_distance(&rows, p) as u64;
            assert_eq!(code_params(&x, d, true, &lim()).unwrap().min_distance, Some(want));
        }
    }
}

#[test]
fn graph_parsing_examples() {
    let tri = parse_graph("1 2\n2 3\n3 1").unwrap();
    assert_eq!((tri.n(), tri.s()), (3, 3));
    assert!(matches!(parse_graph("1 2\n1 2"), Err(GraphError::DuplicateEdge(..))));
    let fig = parse_graph("1 2\n2 3\n3 1\n4 5\n5 6\n6 4").unwrap();
    assert_eq!((fig.n(), fig.s()), (6, 6));
}

#[test]
fn cycle_block_examples() {
    let g = catalog::with_edges(&catalog::cycle(6), &[(6, 7), (7, 8)]);
    let CycleBlocks::Disjoint(f) = cycle_blocks(&g) else { panic!("expected disjoint blocks") };
    assert_eq!(f.k_values(), vec![3]);
    assert!(matches!(cycle_blocks(&catalog::g1()), CycleBlocks::NotDisjoint));
    let CycleBlocks::Disjoint(t) = cycle_blocks(&catalog::path(5)) else { panic!("a tree has no cycles") };
    assert!(t.cycles.is_empty());

    let fam = validate_cycle_family(&catalog::g1(), &catalog::g1_cycles(), true).unwrap();
    assert!(fam.edge_disjoint);
    assert_eq!(fam.k_values(), vec![2, 2]);
    let c4 = catalog::cycle(4);
    assert!(matches!(
        validate_cycle_family(&c4, &[vec![1, 2, 3, 4], vec![1, 2, 3, 4]], true),
        Err(GraphError::EdgesOverlap(_))
    ));
    assert!(matches!(validate_cycle_family(&catalog::cycle(5), &[vec![1, 2, 3, 4, 5]], true), Err(GraphError::OddCycle(5))));
}

#[test]
fn two_triangles_generators() {
    let x = enumerate_toric_set(&catalog::two_triangles(), &field(3), &lim()).unwrap();
    let gens = catalog::two_triangles_binomials();
    assert!(gens.iter().any(|g| *g == bx("t1*t2*t3 - t4*t5*t6", 6)));
    let r = verify_generating_set(&gens, &x, None, &lim()).unwrap();
    assert!(r.generates);
    assert!(minimalize(&gens, &x, &lim()).unwrap().redundant.is_empty());
}

#[test]
fn bowtie_path_binomial_vanishes() {
    let g = catalog::bowtie_path_graph();
    let x = enumerate_toric_set(&g, &field(5), &lim()).unwrap();
    let f = bx(catalog::BOWTIE_PATH_F5, 8);
    assert!(vanishes_on(&f, &x).unwrap());
    assert!(naive_vanishes(f.a.entries(), f.b.entries(), &oracle_points(&g, 5), 5));
}

#[test]
fn vanishing_examples() {
    let c4 = catalog::cycle(4);
    let x = enumerate_toric_set(&c4, &field(3), &lim()).unwrap();
    assert!(vanishes_on(&bx("t1*t3 - t2*t4", 4), &x).unwrap());
    assert!(vanishes_on(&bx("t1^2 - t3^2", 4), &x).unwrap());
    assert!(!vanishes_on(&bx("t1 - t2", 4), &x).unwrap());
    assert!(!naive_vanishes(&[1, 0, 0, 0], &[0, 1, 0, 0], &oracle_points(&c4, 3), 3));
}

#[test]
fn reduction_examples() {
    let f = bx("t1^2*t3 - t2^2*t4", 4);
    let (g, j) = reduce_exponent_step(&f, 3).unwrap();
    assert_eq!((g, j), (bx("t2*t3 - t2*t4", 4), 1));
    assert_eq!(normalize_binomial(&bx("t1^3*t2 - t1*t2^3", 2), 3).unwrap(), Binomial::zero(2));
    let already = bx("t1*t3 - t2*t4", 4);
    assert_eq!(normalize_binomial(&already, 3).unwrap(), already);
    assert!(reduce_exponent_step(&already, 3).is_err());
}

#[test]
fn ideal_dimension_examples() {
    assert_eq!(ideal_dim_at_degree(&[], 3, 3, &lim()).unwrap(), 0);
    assert_eq!(ideal_dim_at_degree(&[bx("t1 - t2", 2)], 1, 2, &lim()).unwrap(), 1);
    assert_eq!(ideal_dim_at_degree(&[bx("t1^2 - t2^2", 2)], 2, 2, &lim()).unwrap(), 1);
}

#[test]
fn even_cycle_generator_examples() {
    let set = even_cycle_generators(2, 3).unwrap();
    assert_eq!((set.toric_relations.len(), set.combinatorial.len()), (3, 3));
    for (k, q) in [(2usize, 3u64), (2, 5), (3, 3)] {
        let g = catalog::cycle(2 * k);
        let pts = oracle_points(&g, q);
        for f in even_cycle_generators(k, q as u32).unwrap().all() {
            assert!(naive_vanishes(f.a.entries(), f.b.entries(), &pts, q), "{f}");
        }
    }
    let fig = f_sigma_r(&Partition::from_a(8, &[1, 3, 5, 6]).unwrap(), 6, 8).unwrap();
    assert_eq!(fig, bx("t1^6*t3^6*t5^6*t6 - t2^6*t4^6*t7*t8^6", 8));
}

#[test]
fn bipartite_pipeline_examples() {
    let g = catalog::with_edges(&catalog::cycle(4), &[(4, 5)]);
    let gens: Vec<Binomial> = bipartite_disjoint_generators(&g, 3).unwrap().into_iter().map(|e| e.binomial).collect();
    let x = enumerate_toric_set(&g, &field(3), &lim()).unwrap();
    assert!(verify_generating_set(&gens, &x, None, &lim()).unwrap().generates);
    assert_eq!(regularity_formula_disjoint(&g, 3).unwrap(), 2);
    assert_eq!(hilbert_profile(&x, None, &lim()).unwrap().regularity, Some(2));
    assert_eq!(bipartite_disjoint_generators(&catalog::g1(), 5), Err(GeneratorError::CyclesNotVertexDisjoint));
}

#[test]
fn regularity_bounds_on_g1_and_g2() {
    let g1 = catalog::g1();
    let fam1 = validate_cycle_family(&g1, &catalog::g1_cycles(), true).unwrap();
    assert_eq!(regularity_upper_bound(&g1, 5, &fam1).unwrap(), 9);
    let x1 = enumerate_toric_set(&g1, &field(5), &lim()).unwrap();
    assert_eq!(x1.len(), 256);
    assert_eq!(hilbert_profile(&x1, None, &lim()).unwrap().regularity, Some(9));
    assert!(vanishes_on(&bx(catalog::G1_BINOMIAL, 8), &x1).unwrap());

    let g2 = catalog::g2();
    let fam2 = validate_cycle_family(&g2, &[vec![1, 2, 3, 4]], true).unwrap();
    assert_eq!(regularity_upper_bound(&g2, 5, &fam2).unwrap(), 9);
    let x2 = enumerate_toric_set(&g2, &field(5), &lim()).unwrap();
    assert_eq!(hilbert_profile(&x2, None, &lim()).unwrap().regularity, Some(6));

    let c4 = catalog::cycle(4);
    let own = validate_cycle_family(&c4, &[vec![1, 2, 3, 4]], true).unwrap();
    assert_eq!(regularity_upper_bound(&c4, 3, &own).unwrap(), 1);
}

#[test]
fn g2_printed_binomial_does_not_vanish() {
    // the printed form shares t5^2 on both sides, leaving t1*t2 - t3*t4
    let x = enumerate_toric_set(&catalog::g2(), &field(5), &lim()).unwrap();
    assert!(!vanishes_on(&bx(catalog::G2_BINOMIAL_AS_PRINTED, 6), &x).unwrap());
    assert!(vanishes_on(&bx(catalog::G2_BINOMIAL_CORRECTED, 6), &x).unwrap());
}

#[test]
fn groebner_examples() {
    let f = field(4);
    let order = MonomialOrder::Grevlex;
    let set = even_cycle_generators(2, 4).unwrap();
    let mut basis: Vec<Poly> = set.toric_relations.iter().map(|b| Poly::from_binomial(&f, b, order)).collect();
    basis.push(Poly::from_binomial(&f, &bx("t1*t3 - t2*t4", 4), order));
    let f_l2 = Poly::from_binomial(&f, &bx("t1^2*t3^2 - t2^2*t4^2", 4), order);
    assert!(normal_form(&f, &f_l2, &basis).is_zero());
    let g = &basis[0];
    assert!(s_polynomial(&f, g, g).is_zero());

    let f3 = field(3);
    let p = |t: &str, s| Poly::from_binomial(&f3, &bx(t, s), order);
    let single = is_groebner(&f3, &[p("t1 - t2", 3)]);
    assert!(single.is_groebner);
    let pair = is_groebner(&f3, &[p("t1 - t2", 3), p("t1 - t3", 3)]);
    assert!(!pair.is_groebner);
    assert_eq!(pair.failing_pair.as_ref().map(|(i, j, _)| (*i, *j)), Some((0, 1)));

    let cb = conjectured_basis(2, 3).unwrap().all();
    let polys: Vec<Poly> = cb.iter().map(|b| Poly::from_binomial(&f3, b, order)).collect();
    assert!(is_groebner(&f3, &polys).is_groebner);
}

#[test]
fn full_set_is_not_minimal_at_q4() {
    let full = even_cycle_generators(2, 4).unwrap().all();
    let r = test_conjecture_with(2, 4, &full, MonomialOrder::Grevlex, &lim()).unwrap();
    assert!(r.generates);
    assert!(!r.minimal);
}
