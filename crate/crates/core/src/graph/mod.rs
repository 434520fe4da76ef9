//! Simple undirected graphs and the families used throughout the crate.
//!
//! Vertices are always `0..n`. A [`Graph`] is immutable once built, so it can
//! be shared freely between solver workers.
//!
//! Labeling conventions:
//! - `andrasfai(k)` uses residues `0..3k-1`; residue `0` plays the role of
//!   `3k-1`.
//! - `cartesian_product(g, h)` encodes the pair `(u, v)` as `u + v * |V(g)|`,
//!   so every row `v` is a copy of `g`.
//! - `line_graph(g)` numbers edges in lexicographic `(min, max)` order.

mod io;

pub use io::EdgeListJson;

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    name: String,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I, name: impl Into<String>) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::InvalidParameter("a graph needs at least one vertex".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { name: name.into(), adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    /// Whether `perm` (old id -> new id) maps this graph exactly onto `other`.
    pub fn is_relabeling_of(&self, other: &Graph, perm: &[usize]) -> bool {
        self.n() == other.n()
            && perm.len() == self.n()
            && self.edge_count() == other.edge_count()
            && self.edges().all(|(u, v)| other.has_edge(perm[u], perm[v]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Connection set of a circulant graph on `Z_modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionSet {
    modulus: usize,
    members: Vec<usize>,
}

impl ConnectionSet {
    pub fn new(modulus: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidConnectionSet(format!("modulus {modulus} < 2")));
        }
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        for &s in &members {
            if s == 0 {
                return Err(Error::InvalidConnectionSet("contains the identity 0".into()));
            }
            if s >= modulus {
                return Err(Error::InvalidConnectionSet(format!(
                    "member {s} is not a residue mod {modulus}"
                )));
            }
            if members.binary_search(&(modulus - s)).is_err() {
                return Err(Error::InvalidConnectionSet(format!(
                    "not inverse-closed: {s} present but {} missing",
                    modulus - s
                )));
            }
        }
        Ok(ConnectionSet { modulus, members })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, residue: usize) -> bool {
        self.members.binary_search(&(residue % self.modulus)).is_ok()
    }
}

/// Circulant graph: `u ~ v` iff `(u - v) mod m` is in the connection set.
pub fn cayley_cyclic(conn: &ConnectionSet) -> Graph {
    let m = conn.modulus();
    let adj = (0..m)
        .map(|u| {
            let mut list: Vec<usize> = conn.members().iter().map(|&s| (u + s) % m).collect();
            list.sort_unstable();
            list
        })
        .collect();
    Graph {
        name: format!("Cay(Z{m},{:?})", conn.members()),
        adj,
    }
}

/// Residues `1, 4, 7, ..., 3k-2` of `Z_{3k-1}`.
pub fn andrasfai_connection_set(k: usize) -> Result<ConnectionSet> {
    if k == 0 {
        return Err(Error::InvalidParameter("Andrásfai graphs need k >= 1".into()));
    }
    ConnectionSet::new(3 * k - 1, (0..k).map(|i| 3 * i + 1))
}

pub fn andrasfai(k: usize) -> Result<Graph> {
    let conn = andrasfai_connection_set(k)?;
    Ok(cayley_cyclic(&conn).with_name(format!("And({k})")))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)), format!("P{n}"))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)), format!("C{n}"))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges, format!("K{n}"))
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let adj = (0..n)
        .map(|u| (0..n).filter(|&v| v != u && !g.has_edge(u, v)).collect())
        .collect();
    Graph {
        name: format!("co-{}", g.name()),
        adj,
    }
}

/// Cartesian product `g □ h`; vertex `(u, v)` is `u + v * g.n()`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (a, b) = (g.n(), h.n());
    let adj = (0..a * b)
        .map(|id| {
            let (u, v) = (id % a, id / a);
            let mut list: Vec<usize> = g
                .neighbors(u)
                .iter()
                .map(|&u2| u2 + v * a)
                .chain(h.neighbors(v).iter().map(|&v2| u + v2 * a))
                .collect();
            list.sort_unstable();
            list
        })
        .collect();
    Graph {
        name: format!("{}□{}", g.name(), h.name()),
        adj,
    }
}

pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.is_empty() {
        return Err(Error::Edgeless);
    }
    // incident[v] = indices of edges touching v
    let mut incident = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let pairs = incident.iter().flat_map(|list| {
        list.iter()
            .enumerate()
            .flat_map(move |(a, &e)| list[a + 1..].iter().map(move |&f| (e, f)))
    });
    Graph::from_edges(edges.len(), pairs, format!("Line({})", g.name()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connection_set_rules() {
        assert!(ConnectionSet::new(5, [1, 4]).is_ok());
        assert!(ConnectionSet::new(8, [1, 4, 7]).is_ok());
        assert!(ConnectionSet::new(4, [2]).is_ok());
        assert!(matches!(
            ConnectionSet::new(4, [1]),
            Err(Error::InvalidConnectionSet(_))
        ));
        assert!(matches!(
            ConnectionSet::new(4, [1, 2]),
            Err(Error::InvalidConnectionSet(_))
        ));
        assert!(matches!(
            ConnectionSet::new(5, [0, 1, 4]),
            Err(Error::InvalidConnectionSet(_))
        ));
        assert!(ConnectionSet::new(1, []).is_err());
        assert!(ConnectionSet::new(5, [6]).is_err());
    }

    #[test]
    fn cayley_five_cycle() {
        let g = cayley_cyclic(&ConnectionSet::new(5, [1, 4]).unwrap());
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            cycle(5).unwrap().edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn and3_is_mobius_ladder() {
        let g = cayley_cyclic(&ConnectionSet::new(8, [1, 4, 7]).unwrap());
        assert_eq!(g.n(), 8);
        assert_eq!(g.regular_degree(), Some(3));
        // rim 0..7 plus the four diameter chords
        for i in 0..8 {
            assert!(g.has_edge(i, (i + 1) % 8));
            assert!(g.has_edge(i, (i + 4) % 8));
        }
        assert_eq!(g, andrasfai(3).unwrap().with_name(g.name()));
    }

    #[test]
    fn small_andrasfai() {
        assert!(andrasfai(0).is_err());
        let a1 = andrasfai(1).unwrap();
        assert_eq!(a1.n(), 2);
        assert_eq!(a1.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(
            a1.edges().collect::<Vec<_>>(),
            path(2).unwrap().edges().collect::<Vec<_>>()
        );
        let a2 = andrasfai(2).unwrap();
        assert_eq!(
            a2.edges().collect::<Vec<_>>(),
            cycle(5).unwrap().edges().collect::<Vec<_>>()
        );
        let a4 = andrasfai(4).unwrap();
        assert_eq!(a4.n(), 11);
        assert_eq!(a4.regular_degree(), Some(4));
        assert!(a4.is_triangle_free());
        assert_eq!(a4.name(), "And(4)");
    }

    #[test]
    fn andrasfai_vertex_zero_sees_all_of_s() {
        for k in 1..=12 {
            let g = andrasfai(k).unwrap();
            let s: Vec<usize> = (0..k).map(|i| 3 * i + 1).collect();
            assert_eq!(g.neighbors(0), &s[..]);
            for x in 1..g.n() {
                assert!(s.iter().any(|&w| !g.has_edge(x, w)), "k={k} x={x}");
            }
        }
    }

    #[test]
    fn andrasfai_is_circulant() {
        for k in 1..=10 {
            let g = andrasfai(k).unwrap();
            let m = g.n();
            for (u, v) in g.edges() {
                assert!(g.has_edge((u + 1) % m, (v + 1) % m));
            }
        }
    }

    #[test]
    fn standard_families() {
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
        let k1 = complete(1).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        assert_eq!(complete(5).unwrap().edge_count(), 10);
        assert_eq!(
            path(4).unwrap().edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 3)]
        );
    }

    #[test]
    fn from_edges_validation() {
        assert!(matches!(Graph::from_edges(3, [(0, 0)], "x"), Err(Error::SelfLoop(0))));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)], "x"),
            Err(Error::InvalidVertex { vertex: 3, n: 3 })
        ));
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)], "x").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn complement_facts() {
        let c = complement(&andrasfai(2).unwrap());
        // 0-2-4-1-3-0
        let perm = [0, 2, 4, 1, 3];
        assert!(cycle(5).unwrap().is_relabeling_of(&c, &perm));
        for k in 3..=10 {
            let co = complement(&andrasfai(k).unwrap());
            assert_eq!(co.regular_degree(), Some(2 * k - 2));
        }
        let g = cycle(7).unwrap();
        assert_eq!(
            complement(&complement(&g)).edges().collect::<Vec<_>>(),
            g.edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn product_encoding() {
        let q = cartesian_product(&path(2).unwrap(), &path(2).unwrap());
        assert_eq!(q.n(), 4);
        assert_eq!(q.regular_degree(), Some(2));
        // (0,0)=0 (1,0)=1 (0,1)=2 (1,1)=3
        assert_eq!(q.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        let p = cartesian_product(&andrasfai(3).unwrap(), &path(2).unwrap());
        assert_eq!(p.n(), 16);
        assert_eq!(p.name(), "And(3)□P2");
        // row 1 is a copy of And(3)
        assert!(p.has_edge(8, 9) && p.has_edge(8 + 1, 8 + 5));
        assert!(p.has_edge(3, 11));
    }

    #[test]
    fn line_graphs() {
        assert!(line_graph(&complete(3).unwrap().with_name("x")).is_ok());
        assert!(matches!(line_graph(&complete(1).unwrap()), Err(Error::Edgeless)));
        let l = line_graph(&path(3).unwrap()).unwrap();
        assert_eq!((l.n(), l.edges().collect::<Vec<_>>()), (2, vec![(0, 1)]));
        for n in 3..9 {
            let l = line_graph(&cycle(n).unwrap()).unwrap();
            assert_eq!(l.n(), n);
            assert_eq!(l.regular_degree(), Some(2));
        }
        let l = line_graph(&andrasfai(3).unwrap()).unwrap();
        assert_eq!(l.n(), 12);
        assert_eq!(l.regular_degree(), Some(4));
    }
}
