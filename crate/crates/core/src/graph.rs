//! Undirected weighted graphs and their symmetric operators.
//!
//! Vertices are 0-based inside the library. The edge-list text format is
//! 1-based: a line `i j [w]` names vertices `1..=N`, `#` starts a comment,
//! and an optional header `n <N>` fixes the vertex count.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    /// Smaller endpoint (0-based).
    pub i: usize,
    /// Larger endpoint (0-based).
    pub j: usize,
    pub weight: f64,
}

/// An undirected weighted graph without self-loops or parallel edges.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph from 0-based edges. Endpoints may be given in either
    /// order; the stored edge always has `i < j`, and edges are kept sorted.
    pub fn new(n_vertices: usize, edges: impl IntoIterator<Item = (usize, usize, f64)>) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = BTreeMap::new();
        for (k, (a, b, w)) in edges.into_iter().enumerate() {
            let line = k + 1;
            for v in [a, b] {
                if v >= n_vertices {
                    return Err(Error::IndexOutOfRange { index: v, min: 0, max: n_vertices - 1 });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { line, vertex: a });
            }
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::NonPositiveWeight { line, weight: w });
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if seen.insert((i, j), w).is_some() {
                return Err(Error::DuplicateEdge { line, i, j });
            }
        }
        let edges = seen.into_iter().map(|((i, j), weight)| Edge { i, j, weight }).collect();
        Ok(Graph { n_vertices, edges })
    }

    /// Star graph K(1, n-1) with hub at vertex 0 and unit weights.
    pub fn star(n_vertices: usize) -> Result<Self> {
        Graph::new(n_vertices, (1..n_vertices).map(|v| (0, v, 1.0)))
    }

    /// Path graph with unit weights.
    pub fn path(n_vertices: usize) -> Result<Self> {
        Graph::new(n_vertices, (1..n_vertices).map(|v| (v - 1, v, 1.0)))
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<f64> {
        let mut deg = vec![0.0; self.n_vertices];
        for e in &self.edges {
            deg[e.i] += e.weight;
            deg[e.j] += e.weight;
        }
        deg
    }

    /// Serializes to the 1-based edge-list format, header included.
    /// Weights use the shortest representation that parses back exactly.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n_vertices);
        for e in &self.edges {
            let _ = writeln!(out, "{} {} {:?}", e.i + 1, e.j + 1, e.weight);
        }
        out
    }
}

/// Parses a 1-based edge list for a graph on `n` vertices. A header line
/// `n <N>` is accepted when it agrees with `n`.
pub fn parse_edge_list(text: &str, n: usize) -> Result<Graph> {
    parse_edge_list_with_header(text, Some(n))
}

/// Parses a 1-based edge list, taking the vertex count from the `n <N>`
/// header or from `n` when the header is absent. Both present must agree.
pub fn parse_edge_list_with_header(text: &str, n: Option<usize>) -> Result<Graph> {
    let mut header: Option<usize> = None;
    let mut raw = Vec::new();

    for (k, line) in text.lines().enumerate() {
        let line_no = k + 1;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens[0] == "n" {
            if header.is_some() || !raw.is_empty() {
                return Err(malformed(line_no, "header `n <N>` must come first and only once"));
            }
            if tokens.len() != 2 {
                return Err(malformed(line_no, "header must be `n <N>`"));
            }
            let count = tokens[1]
                .parse::<usize>()
                .map_err(|_| malformed(line_no, &format!("bad vertex count `{}`", tokens[1])))?;
            header = Some(count);
            continue;
        }
        if !(2..=3).contains(&tokens.len()) {
            return Err(malformed(line_no, "expected `i j [w]`"));
        }
        let i = parse_vertex(tokens[0], line_no)?;
        let j = parse_vertex(tokens[1], line_no)?;
        let w = match tokens.get(2) {
            Some(t) => t.parse::<f64>().map_err(|_| malformed(line_no, &format!("bad weight `{t}`")))?,
            None => 1.0,
        };
        raw.push((line_no, i, j, w));
    }

    let n = match (header, n) {
        (Some(h), Some(g)) if h != g => return Err(Error::VertexCountMismatch { header: h, given: g }),
        (Some(h), _) => h,
        (None, Some(g)) => g,
        (None, None) => return Err(malformed(0, "vertex count missing: add a `n <N>` header")),
    };
    if n == 0 {
        return Err(Error::EmptyGraph);
    }

    // Validate with file line numbers before handing over to Graph::new.
    let mut seen = BTreeMap::new();
    for &(line, i, j, w) in &raw {
        for v in [i, j] {
            if v == 0 || v > n {
                return Err(Error::IndexOutOfRange { index: v, min: 1, max: n });
            }
        }
        if i == j {
            return Err(Error::SelfLoop { line, vertex: i });
        }
        if !(w.is_finite() && w > 0.0) {
            return Err(Error::NonPositiveWeight { line, weight: w });
        }
        let key = (i.min(j), i.max(j));
        if seen.insert(key, w).is_some() {
            return Err(Error::DuplicateEdge { line, i: key.0, j: key.1 });
        }
    }
    Graph::new(n, raw.into_iter().map(|(_, i, j, w)| (i - 1, j - 1, w)))
}

fn parse_vertex(token: &str, line: usize) -> Result<usize> {
    token.parse::<usize>().map_err(|_| malformed(line, &format!("bad vertex index `{token}`")))
}

fn malformed(line: usize, reason: &str) -> Error {
    Error::MalformedLine { line, reason: reason.to_string() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorKind {
    Laplacian,
    Adjacency,
}

impl std::fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OperatorKind::Laplacian => "laplacian",
            OperatorKind::Adjacency => "adjacency",
        })
    }
}

/// A real symmetric matrix attached to a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphOperator {
    kind: OperatorKind,
    matrix: DMatrix<f64>,
}

impl GraphOperator {
    /// Wraps an arbitrary symmetric matrix, e.g. for testing the spectral
    /// engine on operators that do not come from a graph. The matrix is
    /// symmetrized from its upper triangle.
    pub fn from_symmetric(kind: OperatorKind, matrix: DMatrix<f64>) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::DimensionMismatch { expected: matrix.nrows(), found: matrix.ncols() });
        }
        let mut m = matrix;
        let n = m.nrows();
        for i in 0..n {
            for j in (i + 1)..n {
                m[(j, i)] = m[(i, j)];
            }
        }
        Ok(GraphOperator { kind, matrix: m })
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Dense row-major dump with 17 significant digits per entry.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for r in 0..self.dim() {
            let row: Vec<String> = (0..self.dim()).map(|c| fmt17(self.matrix[(r, c)])).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

pub(crate) fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Combinatorial Laplacian `L = D - W`.
pub fn laplacian(g: &Graph) -> GraphOperator {
    let n = g.n_vertices();
    let mut m = DMatrix::zeros(n, n);
    for e in g.edges() {
        m[(e.i, e.j)] = -e.weight;
        m[(e.j, e.i)] = -e.weight;
    }
    // Diagonal is the exact negation of the off-diagonal row sum.
    for r in 0..n {
        let mut s = 0.0;
        for c in 0..n {
            if c != r {
                s -= m[(r, c)];
            }
        }
        m[(r, r)] = s;
    }
    GraphOperator { kind: OperatorKind::Laplacian, matrix: m }
}

/// Weighted adjacency matrix `W`.
pub fn adjacency(g: &Graph) -> GraphOperator {
    let n = g.n_vertices();
    let mut m = DMatrix::zeros(n, n);
    for e in g.edges() {
        m[(e.i, e.j)] = e.weight;
        m[(e.j, e.i)] = e.weight;
    }
    GraphOperator { kind: OperatorKind::Adjacency, matrix: m }
}

pub fn operator(g: &Graph, kind: OperatorKind) -> GraphOperator {
    match kind {
        OperatorKind::Laplacian => laplacian(g),
        OperatorKind::Adjacency => adjacency(g),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Connectivity {
    Connected,
    Components(usize),
}

/// Breadth-first component count.
pub fn connectivity_check(g: &Graph) -> Connectivity {
    let n = g.n_vertices();
    let mut adj = vec![Vec::new(); n];
    for e in g.edges() {
        adj[e.i].push(e.j);
        adj[e.j].push(e.i);
    }
    let mut seen = vec![false; n];
    let mut components = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    if components == 1 {
        Connectivity::Connected
    } else {
        Connectivity::Components(components)
    }
}
