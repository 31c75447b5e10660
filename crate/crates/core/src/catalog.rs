//! Named graphs and binomials used by the test battery, the CLI and the
//! README walkthrough.

use crate::graph::Graph;
use crate::ideal::Binomial;

fn build(edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(edges).expect("catalog graphs are valid")
}

/// Cycle `1-2-...-n-1`, edge `i` joining `i` and `i+1`.
pub fn cycle(n: usize) -> Graph {
    let e: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
    build(&e)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    build(&e)
}

/// Star with `leaves` leaves around vertex 1.
pub fn star(leaves: usize) -> Graph {
    let e: Vec<_> = (2..=leaves + 1).map(|i| (1, i)).collect();
    build(&e)
}

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            e.push((i, j));
        }
    }
    build(&e)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut e = Vec::new();
    for i in 1..=a {
        for j in 1..=b {
            e.push((i, a + j));
        }
    }
    build(&e)
}

/// Disjoint union, relabeling the second graph after the first.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n();
    let e: Vec<_> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u + 1, v + 1))
        .chain(h.edges().iter().map(|&(u, v)| (u + 1 + shift, v + 1 + shift)))
        .collect();
    build(&e)
}

/// Disjoint union with a single extra edge.
pub fn plus_edge(g: &Graph) -> Graph {
    let n = g.n();
    with_edges(g, &[(n + 1, n + 2)])
}

/// Appends edges (1-based labels, new vertices allowed) after the existing ones.
pub fn with_edges(g: &Graph, extra: &[(usize, usize)]) -> Graph {
    let mut e: Vec<_> = g.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect();
    e.extend_from_slice(extra);
    build(&e)
}

/// Triangle on `1,2,3` and square on `4,5,6,7`.
pub fn triangle_plus_square() -> Graph {
    disjoint_union(&cycle(3), &cycle(4))
}

/// Two vertex-disjoint triangles: `e1..e3` on `1,2,3` and `e4..e6` on `4,5,6`.
pub fn two_triangles() -> Graph {
    build(&[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)])
}

/// Two triangles joined by the path `2-4-5`: seven vertices, eight edges.
pub fn bowtie_path_graph() -> Graph {
    build(&[(2, 1), (3, 2), (1, 3), (2, 4), (4, 5), (5, 6), (6, 7), (7, 5)])
}

/// Bipartite graph on six vertices made of the 4-cycles `1-2-3-4` and
/// `3-5-1-6`, which share the vertices 1 and 3.
pub fn g1() -> Graph {
    build(&[(1, 2), (2, 3), (3, 4), (4, 1), (3, 5), (5, 1), (1, 6), (6, 3)])
}

/// The two edge-disjoint 4-cycles of [`g1`], as vertex sequences.
pub fn g1_cycles() -> Vec<Vec<usize>> {
    vec![vec![1, 2, 3, 4], vec![3, 5, 1, 6]]
}

/// All six 4-cycles of [`g1`] (it is `K_{2,4}` with parts `{1,3}` and
/// `{2,4,5,6}`).
pub fn g1_all_four_cycles() -> Vec<Vec<usize>> {
    let others = [2, 4, 5, 6];
    let mut out = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            out.push(vec![1, others[i], 3, others[j]]);
        }
    }
    out
}

/// A square `1-2-3-4` with a second path `4-5-2`: three 4-cycles.
pub fn g2() -> Graph {
    build(&[(1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (5, 2)])
}

/// Parses `t1*t2^2 - t3*t4` style binomials in `s` variables.
pub fn binomial_expr(text: &str, s: usize) -> Binomial {
    let side = |t: &str| {
        let mut v = vec![0u32; s];
        for factor in t.split('*').map(str::trim).filter(|f| !f.is_empty() && *f != "1") {
            let (var, exp) = factor.split_once('^').unwrap_or((factor, "1"));
            let i: usize = var.trim_start_matches('t').parse().expect("variable index");
            v[i - 1] += exp.parse::<u32>().expect("exponent");
        }
        v
    };
    let (a, b) = text.split_once('-').expect("binomial has a minus sign");
    Binomial::new(side(a), side(b))
}

/// The fifteen binomials generating the vanishing ideal for [`two_triangles`]
/// over `F_3`.
pub const TWO_TRIANGLES_F3: [&str; 15] = [
    "t5^2 - t6^2",
    "t4^2 - t6^2",
    "t3^2 - t6^2",
    "t2^2 - t6^2",
    "t1^2 - t6^2",
    "t3*t4*t5 - t1*t2*t6",
    "t2*t4*t5 - t1*t3*t6",
    "t1*t4*t5 - t2*t3*t6",
    "t2*t3*t5 - t1*t4*t6",
    "t1*t3*t5 - t2*t4*t6",
    "t1*t2*t5 - t3*t4*t6",
    "t2*t3*t4 - t1*t5*t6",
    "t1*t3*t4 - t2*t5*t6",
    "t1*t2*t4 - t3*t5*t6",
    "t1*t2*t3 - t4*t5*t6",
];

pub fn two_triangles_binomials() -> Vec<Binomial> {
    TWO_TRIANGLES_F3.iter().map(|t| binomial_expr(t, 6)).collect()
}

/// Degree-5 binomial vanishing on the toric set of [`bowtie_path_graph`], `q = 5`.
pub const BOWTIE_PATH_F5: &str = "t1*t2*t4^2*t7 - t3*t5^2*t6*t8";

/// Degree-4 binomial vanishing on the toric set of [`g1`], `q = 5`.
pub const G1_BINOMIAL: &str = "t1*t4*t6*t7 - t2*t3*t5*t8";

/// The binomial quoted for [`g2`]. As printed it carries the common factor
/// `t5^2`, and `t1*t2 - t3*t4` does not vanish on the set.
pub const G2_BINOMIAL_AS_PRINTED: &str = "t1*t2*t5^2 - t3*t4*t5^2";

/// The reading of [`G2_BINOMIAL_AS_PRINTED`] consistent with the graph:
/// `t6` in place of the first `t5`.
pub const G2_BINOMIAL_CORRECTED: &str = "t1*t2*t6^2 - t3*t4*t5^2";

/// Graphs with at most six vertices and one or two components, plus the
/// seven-vertex triangle-plus-square anchor.
pub fn length_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut add = |name: &str, g: Graph| out.push((name.to_string(), g));
    for n in 3..=6 {
        add(&format!("path P{n}"), path(n));
        add(&format!("cycle C{n}"), cycle(n));
    }
    for l in 2..=5 {
        add(&format!("star S{l}"), star(l));
    }
    add("triangle", cycle(3));
    add("square", cycle(4));
    add("K4", complete(4));
    add("K5", complete(5));
    add("K2,3", complete_bipartite(2, 3));
    add("K3,3", complete_bipartite(3, 3));
    add("K2,4", complete_bipartite(2, 4));
    add("diamond", build(&[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)]));
    add("paw", with_edges(&cycle(3), &[(3, 4)]));
    add("bull", with_edges(&cycle(3), &[(2, 4), (3, 5)]));
    add("house", build(&[(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (2, 5)]));
    add("prism", build(&[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6)]));
    add("square with pendant", with_edges(&cycle(4), &[(4, 5)]));
    add("square with tail", with_edges(&cycle(4), &[(4, 5), (5, 6)]));
    add("pentagon with pendant", with_edges(&cycle(5), &[(5, 6)]));
    add("spider", build(&[(1, 2), (2, 3), (1, 4), (4, 5), (1, 6)]));
    add("bowtie", build(&[(1, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 1)]));
    add("triangle + edge", plus_edge(&cycle(3)));
    add("two triangles", two_triangles());
    add("square + edge", plus_edge(&cycle(4)));
    add("path P3 + path P3", disjoint_union(&path(3), &path(3)));
    add("triangle + path P3", disjoint_union(&cycle(3), &path(3)));
    add("K4 + edge", plus_edge(&complete(4)));
    add("star S3 + edge", plus_edge(&star(3)));
    add("path P4 + edge", plus_edge(&path(4)));
    add("edge + edge", build(&[(1, 2), (3, 4)]));
    add("paw + edge", plus_edge(&with_edges(&cycle(3), &[(3, 4)])));
    add("triangle + square", triangle_plus_square());
    out
}

/// `C_4` or `C_6` with pendant edges or paths attached.
pub fn decorated_cycles() -> Vec<(String, Graph)> {
    vec![
        ("C4 + pendant".into(), with_edges(&cycle(4), &[(4, 5)])),
        ("C4 + two pendants".into(), with_edges(&cycle(4), &[(4, 5), (2, 6)])),
        ("C4 + path of length 2".into(), with_edges(&cycle(4), &[(4, 5), (5, 6)])),
        ("C6 + pendant".into(), with_edges(&cycle(6), &[(6, 7)])),
        ("C6 + two pendants".into(), with_edges(&cycle(6), &[(6, 7), (3, 8)])),
        ("C6 + path of length 2".into(), with_edges(&cycle(6), &[(6, 7), (7, 8)])),
    ]
}
