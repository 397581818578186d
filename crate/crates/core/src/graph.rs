//! Simple undirected graphs, the constructors needed for generalized wheels,
//! and the distance-based integer matrices built on top of them.
//!
//! Vertices are numbered `0..order`. Constructors that combine graphs place
//! the vertices of the first operand before those of the second, so
//! `generalized_wheel(a, m, n)` puts the `a` cliques at `0..a*m` (copy-major)
//! and the cycle at `a*m..a*m+n`.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest graph any constructor will build.
pub const MAX_ORDER: usize = 10_000;

/// Largest value accepted for each of `a`, `m`, `n` in [`WheelParams`].
///
/// Keeps every closed-form quantity (including the squared discriminant)
/// inside `i128` and every eigenvalue offset inside `i64`.
pub const MAX_PARAM: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        check_order(order)?;
        let mut adj = vec![Vec::new(); order];
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for order {order}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adj,
            edge_count: edge_count / 2,
        })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.degree(0);
        (1..self.order())
            .all(|v| self.degree(v) == first)
            .then_some(first)
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.order()];
        let mut count = 0;
        for start in 0..self.order() {
            if seen[start] {
                continue;
            }
            count += 1;
            for (v, d) in self.bfs_distances(start).into_iter().enumerate() {
                if d.is_some() {
                    seen[v] = true;
                }
            }
        }
        count
    }

    pub fn diameter(&self) -> Result<usize> {
        let d = distance_matrix(self)?;
        Ok(d.entries.iter().copied().max().unwrap_or(0) as usize)
    }

    /// Sum of distances over unordered vertex pairs.
    pub fn wiener_index(&self) -> Result<i64> {
        let d = distance_matrix(self)?;
        let total: i64 = d.entries.iter().sum();
        Ok(total / 2)
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::InvalidParameter(
            "graph order must be at least 1".into(),
        ));
    }
    if order > MAX_ORDER {
        return Err(Error::TooLarge {
            order,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

/// `K_m`.
pub fn complete(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "complete graph needs m >= 1".into(),
        ));
    }
    check_order(m)?;
    Graph::from_edges(m, (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))))
}

/// `C_n` with edges `{i, (i+1) mod n}`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    check_order(n)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Disjoint union of `k` copies of `g`, copy-major numbering.
pub fn copies(k: usize, g: &Graph) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("copies needs k >= 1".into()));
    }
    let n = g.order();
    let order = k.checked_mul(n).ok_or(Error::Overflow("copies order"))?;
    check_order(order)?;
    Graph::from_edges(
        order,
        (0..k).flat_map(|c| g.edges().map(move |(u, v)| (c * n + u, c * n + v))),
    )
}

/// `g1 ∇ g2`: the disjoint union plus every edge between the two sides.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let (n1, n2) = (g1.order(), g2.order());
    check_order(n1 + n2)?;
    let left = g1.edges();
    let right = g2.edges().map(|(u, v)| (n1 + u, n1 + v));
    let across = (0..n1).flat_map(|u| (0..n2).map(move |v| (u, n1 + v)));
    Graph::from_edges(n1 + n2, left.chain(right).chain(across))
}

/// Validated `(a, m, n)` identifying `GW(a, m, n) = aK_m ∇ C_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WheelParams {
    a: u64,
    m: u64,
    n: u64,
}

impl WheelParams {
    pub fn new(a: u64, m: u64, n: u64) -> Result<Self> {
        if a < 1 || m < 1 || n < 3 {
            return Err(Error::InvalidParameter(format!(
                "need a >= 1, m >= 1, n >= 3; got ({a}, {m}, {n})"
            )));
        }
        if a > MAX_PARAM || m > MAX_PARAM || n > MAX_PARAM {
            return Err(Error::InvalidParameter(format!(
                "a, m, n must each be at most {MAX_PARAM}; got ({a}, {m}, {n})"
            )));
        }
        Ok(WheelParams { a, m, n })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `a*m + n`.
    pub fn order(&self) -> u64 {
        self.a * self.m + self.n
    }
}

impl fmt::Display for WheelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.m, self.n)
    }
}

pub fn generalized_wheel(p: WheelParams) -> Result<Graph> {
    let order = p.order() as usize;
    check_order(order)?;
    let cliques = copies(p.a as usize, &complete(p.m as usize)?)?;
    join(&cliques, &cycle(p.n as usize)?)
}

/// Dense symmetric integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    order: usize,
    entries: Vec<i64>,
}

impl SquareMatrix {
    pub fn zeros(order: usize) -> Self {
        SquareMatrix {
            order,
            entries: vec![0; order * order],
        }
    }

    /// Builds from rows; rejects ragged or non-symmetric input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidMatrix("matrix must have order >= 1".into()));
        }
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidMatrix("matrix is not square".into()));
        }
        let m = SquareMatrix {
            order,
            entries: rows.concat(),
        };
        if !m.is_symmetric() {
            return Err(Error::InvalidMatrix("matrix is not symmetric".into()));
        }
        Ok(m)
    }

    /// Builds without the symmetry check, for exercising validation downstream.
    pub fn from_rows_unchecked(rows: &[Vec<i64>]) -> Self {
        SquareMatrix {
            order: rows.len(),
            entries: rows.concat(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.order + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> i64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.order).map(|i| self.row(i).iter().sum()).collect()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> i64 {
        self.entries.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// Exact matrix-vector product.
    pub fn mul_vec(&self, x: &[i64]) -> Vec<i64> {
        (0..self.order)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&v| v as f64).collect()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> Option<i64>) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::InvalidMatrix(format!(
                "order mismatch {} vs {}",
                self.order, other.order
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&x, &y)| f(x, y).ok_or(Error::Overflow("matrix entry")))
            .collect::<Result<Vec<_>>>()?;
        Ok(SquareMatrix {
            order: self.order,
            entries,
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i64::checked_sub)
    }

    pub fn scaled(&self, k: i64) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|&v| v.checked_mul(k).ok_or(Error::Overflow("matrix entry")))
            .collect::<Result<Vec<_>>>()?;
        Ok(SquareMatrix {
            order: self.order,
            entries,
        })
    }
}

pub fn adjacency_matrix(g: &Graph) -> SquareMatrix {
    let mut m = SquareMatrix::zeros(g.order());
    for (u, v) in g.edges() {
        m.set(u, v, 1);
        m.set(v, u, 1);
    }
    m
}

/// All-pairs shortest path lengths, one BFS per source.
pub fn distance_matrix(g: &Graph) -> Result<SquareMatrix> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.order();
    let rows: Vec<Vec<i64>> = (0..n)
        .into_par_iter()
        .map(|s| {
            g.bfs_distances(s)
                .into_iter()
                .map(|d| d.expect("connected graph") as i64)
                .collect()
        })
        .collect();
    Ok(SquareMatrix {
        order: n,
        entries: rows.concat(),
    })
}

/// Diagonal matrix of distance-matrix row sums.
pub fn transmission_matrix(g: &Graph) -> Result<SquareMatrix> {
    let d = distance_matrix(g)?;
    Ok(transmissions_of(&d))
}

fn transmissions_of(d: &SquareMatrix) -> SquareMatrix {
    let mut tr = SquareMatrix::zeros(d.order);
    for (i, s) in d.row_sums().into_iter().enumerate() {
        tr.set(i, i, s);
    }
    tr
}

/// `Tr(G) - D(G)`.
pub fn dl_matrix(g: &Graph) -> Result<SquareMatrix> {
    let d = distance_matrix(g)?;
    transmissions_of(&d).checked_sub(&d)
}

/// `Tr(G) + D(G)`.
pub fn dq_matrix(g: &Graph) -> Result<SquareMatrix> {
    let d = distance_matrix(g)?;
    transmissions_of(&d).checked_add(&d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wheel(a: u64, m: u64, n: u64) -> Graph {
        generalized_wheel(WheelParams::new(a, m, n).unwrap()).unwrap()
    }

    #[test]
    fn complete_graphs() {
        let k1 = complete(1).unwrap();
        assert_eq!((k1.order(), k1.edge_count()), (1, 0));
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        let k5 = complete(5).unwrap();
        assert!((0..5).all(|v| k5.degree(v) == 4));
        assert!(matches!(complete(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn cycles() {
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        let c4 = cycle(4).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
        let d6 = distance_matrix(&cycle(6).unwrap()).unwrap();
        assert_eq!(d6.get(0, 3), 3);
        assert!(matches!(cycle(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn disjoint_copies() {
        let g = cycle(5).unwrap();
        let one = copies(1, &g).unwrap();
        assert_eq!((one.order(), one.edge_count()), (5, 5));
        let k2s = copies(3, &complete(2).unwrap()).unwrap();
        assert_eq!((k2s.order(), k2s.edge_count()), (6, 3));
        let two_triangles = copies(2, &cycle(3).unwrap()).unwrap();
        assert!(!two_triangles.is_connected());
        assert_eq!(two_triangles.component_count(), 2);
        assert!(matches!(copies(0, &g), Err(Error::InvalidParameter(_))));
        assert!(matches!(
            distance_matrix(&two_triangles),
            Err(Error::NotConnected)
        ));
    }

    #[test]
    fn joins() {
        let k1 = complete(1).unwrap();
        assert_eq!(join(&k1, &cycle(3).unwrap()).unwrap(), complete(4).unwrap());
        assert_eq!(
            join(&complete(2).unwrap(), &cycle(3).unwrap()).unwrap(),
            complete(5).unwrap()
        );
        let g = join(&copies(2, &k1).unwrap(), &cycle(4).unwrap()).unwrap();
        assert_eq!((g.order(), g.edge_count()), (6, 12));
        // disconnected inputs still give a connected join
        let h = join(&copies(3, &k1).unwrap(), &copies(2, &k1).unwrap()).unwrap();
        assert!(h.is_connected());
    }

    #[test]
    fn wheel_shapes() {
        assert_eq!(wheel(1, 1, 3), complete(4).unwrap());
        let g = wheel(2, 3, 4);
        assert_eq!(g.order(), 10);
        assert!(g.is_connected());
        assert_eq!(g.diameter().unwrap(), 2);
        for m in 1..6 {
            let g = wheel(1, m, 3);
            assert_eq!(g, complete(m as usize + 3).unwrap());
            assert_eq!(g.diameter().unwrap(), 1);
        }
        assert_eq!(distance_matrix(&wheel(2, 2, 6)).unwrap().max_abs(), 2);
    }

    #[test]
    fn wheel_numbering_is_copy_major() {
        let g = wheel(2, 3, 5);
        // clique 0 is {0,1,2}, clique 1 is {3,4,5}, cycle is 6..11
        assert!(g.has_edge(0, 2) && g.has_edge(3, 5));
        assert!(!g.has_edge(2, 3));
        assert!(g.has_edge(6, 7) && g.has_edge(10, 6) && !g.has_edge(6, 8));
        assert!((0..6).all(|u| (6..11).all(|v| g.has_edge(u, v))));
    }

    #[test]
    fn wheel_params_validation() {
        assert!(WheelParams::new(0, 1, 3).is_err());
        assert!(WheelParams::new(1, 0, 3).is_err());
        assert!(WheelParams::new(1, 1, 2).is_err());
        assert!(WheelParams::new(1, 1, MAX_PARAM + 1).is_err());
        assert_eq!(WheelParams::new(2, 3, 4).unwrap().order(), 10);
        assert!(matches!(
            generalized_wheel(WheelParams::new(100, 100, 3).unwrap()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn distance_based_matrices_of_small_graphs() {
        let k4 = complete(4).unwrap();
        let d = distance_matrix(&k4).unwrap();
        assert!((0..4).all(|i| (0..4).all(|j| d.get(i, j) == i64::from(i != j))));
        let c4 = distance_matrix(&cycle(4).unwrap()).unwrap();
        assert_eq!((c4.get(0, 2), c4.get(1, 3), c4.get(0, 1)), (2, 2, 1));

        let diag = |m: &SquareMatrix, k: i64| {
            (0..m.order())
                .all(|i| (0..m.order()).all(|j| m.get(i, j) == if i == j { k } else { 0 }))
        };
        assert!(diag(&transmission_matrix(&k4).unwrap(), 3));
        assert!(diag(&transmission_matrix(&cycle(4).unwrap()).unwrap(), 4));
        assert!(diag(&transmission_matrix(&cycle(6).unwrap()).unwrap(), 9));

        // 4I - J, 3I - J, 2I + J, 3I + J
        let pattern = |m: &SquareMatrix, d: i64, off: i64| {
            (0..m.order())
                .all(|i| (0..m.order()).all(|j| m.get(i, j) == if i == j { d } else { off }))
        };
        assert!(pattern(&dl_matrix(&k4).unwrap(), 3, -1));
        assert!(pattern(&dl_matrix(&cycle(3).unwrap()).unwrap(), 2, -1));
        assert!(pattern(&dq_matrix(&k4).unwrap(), 3, 1));
        assert!(pattern(&dq_matrix(&complete(5).unwrap()).unwrap(), 4, 1));
    }

    #[test]
    fn regularity() {
        assert_eq!(cycle(7).unwrap().regular_degree(), Some(2));
        assert_eq!(complete(6).unwrap().regular_degree(), Some(5));
        let wheel4 = join(&complete(1).unwrap(), &cycle(4).unwrap()).unwrap();
        assert_eq!(wheel4.regular_degree(), None);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(0, []).is_err());
        assert!(matches!(
            Graph::from_edges(MAX_ORDER + 1, []),
            Err(Error::TooLarge { .. })
        ));
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn matrix_from_rows_checks_shape() {
        assert!(SquareMatrix::from_rows(&[vec![0, 1], vec![2, 0]]).is_err());
        assert!(SquareMatrix::from_rows(&[vec![0, 1]]).is_err());
        assert!(SquareMatrix::from_rows(&[]).is_err());
        let m = SquareMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(m.trace(), 0);
    }
}
