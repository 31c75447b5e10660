//! Simple graphs whose edge order fixes the variable order `t_1, ..., t_s`.
//!
//! Vertices and edges are 0-based inside the crate. Labels in files, in
//! [`Graph::new`] and in user-supplied cycles are 1-based.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph needs at least 2 edges, found {0}")]
    TooFewEdges(usize),
    #[error("vertex label {0} out of range")]
    BadVertex(usize),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("cycle of odd length {0}")]
    OddCycle(usize),
    #[error("cycles share edge e{0}")]
    EdgesOverlap(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph on vertices `1..=n` from 1-based edge pairs.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut seen = HashSet::new();
        let mut zero_based = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(GraphError::BadVertex(x));
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            zero_based.push((u - 1, v - 1));
        }
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in zero_based.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        if let Some(v) = adj.iter().position(Vec::is_empty) {
            return Err(GraphError::IsolatedVertex(v + 1));
        }
        if zero_based.len() < 2 {
            return Err(GraphError::TooFewEdges(zero_based.len()));
        }
        Ok(Graph { n, edges: zero_based, adj })
    }

    /// Builds a graph whose vertex set is `1..=max label`.
    pub fn from_edges(edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
        Graph::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.edges.len()
    }

    /// 0-based endpoint pairs in variable order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `(neighbour, edge index)` pairs at vertex `v`.
    pub fn neighbours(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// The edge joining two 0-based vertices, if any.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    /// Edge-list text, 1-based, accepted by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        self.edges.iter().map(|&(u, v)| format!("{} {}\n", u + 1, v + 1)).collect()
    }
}

fn parse_lines(text: &str) -> Result<Vec<(usize, usize, usize)>, GraphError> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| GraphError::ParseError { line: lineno + 1, msg: msg.to_string() };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err("expected two vertex labels"));
        }
        let parse = |t: &str| -> Result<usize, GraphError> {
            match t.parse::<usize>() {
                Ok(x) if x > 0 => Ok(x),
                _ => Err(err(&format!("invalid vertex label {t:?}"))),
            }
        };
        out.push((lineno + 1, parse(fields[0])?, parse(fields[1])?));
    }
    Ok(out)
}

fn relabel(pairs: &[(usize, usize)]) -> (usize, Vec<(usize, usize)>) {
    let mut labels: HashMap<usize, usize> = HashMap::new();
    let id = |x: usize, labels: &mut HashMap<usize, usize>| {
        let next = labels.len() + 1;
        *labels.entry(x).or_insert(next)
    };
    let edges: Vec<(usize, usize)> =
        pairs.iter().map(|&(u, v)| (id(u, &mut labels), id(v, &mut labels))).collect();
    (labels.len(), edges)
}

/// Parses the edge-list format: one `u v` pair per line, `#` comments.
/// Vertices are relabeled `1..n` in order of first appearance.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let pairs: Vec<(usize, usize)> = parse_lines(text)?.into_iter().map(|(_, u, v)| (u, v)).collect();
    let (n, edges) = relabel(&pairs);
    Graph::new(n, &edges)
}

/// Like [`parse_graph`], but drops loops and repeated edges instead of
/// rejecting them. Returns a warning per dropped line.
pub fn parse_graph_normalized(text: &str) -> Result<(Graph, Vec<String>), GraphError> {
    let mut warnings = Vec::new();
    let mut seen = HashSet::new();
    let mut pairs = Vec::new();
    for (line, u, v) in parse_lines(text)? {
        if u == v {
            warnings.push(format!("line {line}: dropped loop at vertex {u}"));
        } else if !seen.insert((u.min(v), u.max(v))) {
            warnings.push(format!("line {line}: dropped duplicate edge {{{u}, {v}}}"));
        } else {
            pairs.push((u, v));
        }
    }
    let (n, edges) = relabel(&pairs);
    Ok((Graph::new(n, &edges)?, warnings))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentInfo {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub bipartite: bool,
    /// The two colour classes when bipartite.
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
}

impl ComponentInfo {
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn s(&self) -> usize {
        self.edges.len()
    }
}

/// Connected components with a 2-colouring attempt on each.
pub fn components(g: &Graph) -> Vec<ComponentInfo> {
    let mut colour: Vec<Option<u8>> = vec![None; g.n()];
    let mut out = Vec::new();
    for root in 0..g.n() {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        let mut vertices = Vec::new();
        let mut edges = BTreeSet::new();
        let mut bipartite = true;
        while let Some(v) = queue.pop_front() {
            vertices.push(v);
            let cv = colour[v].unwrap();
            for &(w, e) in g.neighbours(v) {
                edges.insert(e);
                match colour[w] {
                    None => {
                        colour[w] = Some(1 - cv);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => bipartite = false,
                    _ => {}
                }
            }
        }
        vertices.sort_unstable();
        let bipartition = bipartite.then(|| {
            vertices.iter().partition::<Vec<usize>, _>(|&&v| colour[v] == Some(0))
        });
        out.push(ComponentInfo { vertices, edges: edges.into_iter().collect(), bipartite, bipartition });
    }
    out
}

/// Number of non-bipartite components.
pub fn gamma(comps: &[ComponentInfo]) -> usize {
    comps.iter().filter(|c| !c.bipartite).count()
}

/// An odd closed walk's vertex sequence (in fact a simple odd cycle) inside
/// the component of `start`, if one exists.
pub fn odd_cycle_witness(g: &Graph, start: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut depth = vec![usize::MAX; g.n()];
    depth[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &(w, _) in g.neighbours(v) {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            } else if depth[w] == depth[v] {
                // Same BFS layer: climb both to the common ancestor.
                let (mut a, mut b) = (v, w);
                let (mut left, mut right) = (vec![a], vec![b]);
                while a != b {
                    a = parent[a];
                    b = parent[b];
                    left.push(a);
                    right.push(b);
                }
                right.pop();
                right.reverse();
                left.extend(right);
                return Some(left);
            }
        }
    }
    None
}

/// A family of cycles, each an edge-index sequence in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleFamily {
    pub cycles: Vec<Vec<usize>>,
    pub vertex_disjoint: bool,
    pub edge_disjoint: bool,
}

impl CycleFamily {
    /// Half-lengths `k_i` of the cycles.
    pub fn k_values(&self) -> Vec<usize> {
        self.cycles.iter().map(|c| c.len() / 2).collect()
    }

    pub fn sum_k(&self) -> usize {
        self.k_values().iter().sum()
    }

    fn from_cycles(g: &Graph, cycles: Vec<Vec<usize>>) -> CycleFamily {
        let mut edge_disjoint = true;
        let mut vertex_disjoint = true;
        let mut seen_e = HashSet::new();
        let mut seen_v = HashSet::new();
        for c in &cycles {
            let vs: HashSet<usize> = c.iter().flat_map(|&e| [g.edges[e].0, g.edges[e].1]).collect();
            for &e in c {
                edge_disjoint &= seen_e.insert(e);
            }
            for v in vs {
                vertex_disjoint &= seen_v.insert(v);
            }
        }
        CycleFamily { cycles, vertex_disjoint, edge_disjoint }
    }
}

/// Edge sets of the biconnected components (blocks), each sorted.
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, edge to parent, next neighbour position)
        let mut stack: Vec<(usize, Option<usize>, usize)> = vec![(root, None, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, pe, idx) = *top;
            if idx < g.adj[v].len() {
                top.2 += 1;
                let (w, e) = g.adj[v][idx];
                if Some(e) == pe {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let tree_edge = pe.expect("non-root has a parent edge");
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == tree_edge {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks.sort();
    blocks
}

/// Edges lying on no cycle.
pub fn bridges(g: &Graph) -> Vec<usize> {
    let mut out: Vec<usize> =
        biconnected_blocks(g).into_iter().filter(|b| b.len() == 1).map(|b| b[0]).collect();
    out.sort_unstable();
    out
}

/// Orders the edges of a simple cycle: start at the lowest edge, continue
/// through its lower-indexed neighbour.
fn traverse_cycle(g: &Graph, edge_set: &[usize]) -> Vec<usize> {
    let set: HashSet<usize> = edge_set.iter().copied().collect();
    let start = *edge_set.iter().min().expect("cycle has edges");
    let (a, b) = g.edges[start];
    let other_at = |v: usize, not: usize| {
        g.adj[v].iter().map(|&(_, e)| e).find(|e| *e != not && set.contains(e))
    };
    let na = other_at(a, start).expect("cycle");
    let nb = other_at(b, start).expect("cycle");
    // Move towards the shared vertex of the lower neighbour.
    let (mut cur, mut at) = if na < nb { (na, a) } else { (nb, b) };
    let mut order = vec![start];
    while cur != start {
        order.push(cur);
        let (x, y) = g.edges[cur];
        let next_v = if x == at { y } else { x };
        let next = other_at(next_v, cur).expect("cycle");
        at = next_v;
        cur = next;
    }
    order
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleBlocks {
    /// Every block is a bridge or a cycle, and the cycles share no vertex.
    Disjoint(CycleFamily),
    NotDisjoint,
}

/// Cycle blocks of the graph when every block is a single edge or a simple
/// cycle and no two cycle blocks meet; otherwise `NotDisjoint`.
pub fn cycle_blocks(g: &Graph) -> CycleBlocks {
    let mut cycles = Vec::new();
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            continue;
        }
        let vs: HashSet<usize> = block.iter().flat_map(|&e| [g.edges[e].0, g.edges[e].1]).collect();
        if vs.len() != block.len() {
            return CycleBlocks::NotDisjoint;
        }
        cycles.push(traverse_cycle(g, &block));
    }
    cycles.sort_by_key(|c| c[0]);
    let fam = CycleFamily::from_cycles(g, cycles);
    if fam.vertex_disjoint {
        CycleBlocks::Disjoint(fam)
    } else {
        CycleBlocks::NotDisjoint
    }
}

/// Checks user cycles given as 1-based vertex sequences (the closing edge
/// from last back to first is implied).
pub fn validate_cycle_family(
    g: &Graph,
    user_cycles: &[Vec<usize>],
    require_edge_disjoint: bool,
) -> Result<CycleFamily, GraphError> {
    let mut cycles = Vec::new();
    for seq in user_cycles {
        let len = seq.len();
        if len < 3 {
            return Err(GraphError::NotACycle(format!("{seq:?} has fewer than 3 vertices")));
        }
        let distinct: HashSet<&usize> = seq.iter().collect();
        if distinct.len() != len {
            return Err(GraphError::NotACycle(format!("{seq:?} repeats a vertex")));
        }
        let mut edges = Vec::with_capacity(len);
        for i in 0..len {
            let (u, v) = (seq[i], seq[(i + 1) % len]);
            let in_range = |x: usize| x >= 1 && x <= g.n();
            let e = (in_range(u) && in_range(v))
                .then(|| g.edge_between(u - 1, v - 1))
                .flatten()
                .ok_or_else(|| GraphError::NotACycle(format!("{{{u}, {v}}} is not an edge")))?;
            edges.push(e);
        }
        if len % 2 == 1 {
            return Err(GraphError::OddCycle(len));
        }
        cycles.push(traverse_cycle(g, &edges));
    }
    let fam = CycleFamily::from_cycles(g, cycles);
    if require_edge_disjoint && !fam.edge_disjoint {
        let mut seen = HashSet::new();
        let shared = fam.cycles.iter().flatten().find(|&&e| !seen.insert(e)).copied().unwrap_or(0);
        return Err(GraphError::EdgesOverlap(shared + 1));
    }
    Ok(fam)
}

/// `nu_i = e_j + e_k` for each edge `{j, k}`.
pub fn incidence_vectors(g: &Graph) -> Vec<Vec<u32>> {
    g.edges
        .iter()
        .map(|&(u, v)| {
            let mut nu = vec![0u32; g.n()];
            nu[u] = 1;
            nu[v] = 1;
            nu
        })
        .collect()
}
