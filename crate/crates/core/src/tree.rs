//! Unrooted trees, the edge-list text format, and distance primitives.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A simple unrooted tree on vertices `0..n`.
///
/// Construction validates connectivity and acyclicity, so every value of
/// this type has exactly `n - 1` edges. Edges are stored normalized
/// (smaller endpoint first) and sorted; adjacency lists are sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tree")
            .field("n", &self.order())
            .field("edges", &self.edges)
            .finish()
    }
}

/// Tiny union-find used only for validation.
struct Components {
    parent: Vec<usize>,
    count: usize,
}

impl Components {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), count: n }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.count -= 1;
        true
    }
}

impl Tree {
    /// Builds a tree from `n` and an edge list.
    ///
    /// Errors carry the 1-based position of the offending edge in `line`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        let numbered: Vec<_> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (i + 1, u, v))
            .collect();
        Self::validated(n, &numbered)
    }

    fn validated(n: usize, edges: &[(usize, usize, usize)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::Malformed { line: 1, reason: "vertex count must be at least 1".into() });
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut comps = Components::new(n);
        let mut adjacency = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(line, u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::IdOutOfRange { line, id, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line, vertex: u });
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge { line, u: e.0, v: e.1 });
            }
            if !comps.union(u, v) {
                return Err(Error::CycleDetected { line, u: e.0, v: e.1 });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            normalized.push(e);
        }
        if comps.count != 1 {
            return Err(Error::Disconnected { n, components: comps.count });
        }
        normalized.sort_unstable();
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Tree { edges: normalized, adjacency })
    }

    /// Builds a tree from a parent array where `parent[root]` is `None`.
    pub fn from_parents(parent: &[Option<usize>]) -> Result<Tree> {
        let edges: Vec<_> = parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (p, v)))
            .collect();
        Self::from_edges(parent.len(), &edges)
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Tree> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    /// The star `K_{1,n-1}` centered at 0.
    pub fn star(n: usize) -> Result<Tree> {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.order() });
        }
        Ok(())
    }

    /// Degree-1 vertices in ascending order. The single vertex of the
    /// order-1 tree counts as pendant.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        if self.order() == 1 {
            return vec![0];
        }
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn is_pendant(&self, v: usize) -> bool {
        self.order() == 1 || self.degree(v) == 1
    }

    /// Edge-count distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<usize>> {
        self.check_vertex(source)?;
        Ok(self.bfs_unchecked(source))
    }

    pub(crate) fn bfs_unchecked(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        let mut queue = VecDeque::with_capacity(self.order());
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Sum of distances from `v` to all other vertices.
    pub fn distance_sum_from(&self, v: usize) -> Result<u128> {
        Ok(self.bfs_distances(v)?.iter().map(|&d| d as u128).sum())
    }

    /// Sum of distances from `v` to every pendant vertex other than `v`.
    pub fn pendant_distance_sum_from(&self, v: usize) -> Result<u128> {
        let dist = self.bfs_distances(v)?;
        Ok(self
            .pendant_vertices()
            .into_iter()
            .map(|u| dist[u] as u128)
            .sum())
    }

    /// Parent array and BFS order of the tree rooted at `root`.
    pub(crate) fn bfs_tree(&self, root: usize) -> (Vec<Option<usize>>, Vec<usize>) {
        let n = self.order();
        let mut parent = vec![None; n];
        let mut visited = vec![false; n];
        let mut order = Vec::with_capacity(n);
        visited[root] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in &self.adjacency[u] {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = Some(u);
                    order.push(w);
                }
            }
        }
        (parent, order)
    }

    /// One [`EdgeCut`] per edge, in edge order, from a single rooted pass.
    pub fn edge_cuts(&self) -> Result<Vec<EdgeCut>> {
        let n = self.order();
        if n < 2 {
            return Err(Error::OrderTooSmall { required: 2, actual: n });
        }
        let (parent, order) = self.bfs_tree(0);
        let mut size = vec![1usize; n];
        let mut pend: Vec<usize> = (0..n).map(|v| usize::from(self.degree(v) == 1)).collect();
        let total_pendants: usize = pend.iter().sum();
        for &v in order.iter().rev() {
            if let Some(p) = parent[v] {
                size[p] += size[v];
                pend[p] += pend[v];
            }
        }
        let mut cuts = Vec::with_capacity(n - 1);
        for &(u, v) in &self.edges {
            // `child` is whichever endpoint hangs below the other from root 0
            let child_is_u = parent[u] == Some(v);
            let child = if child_is_u { u } else { v };
            let (below_n, below_p) = (size[child], pend[child]);
            let (above_n, above_p) = (n - below_n, total_pendants - below_p);
            let cut = if child_is_u {
                EdgeCut { edge: (u, v), n1: below_n, n2: above_n, p1: below_p, p2: above_p }
            } else {
                EdgeCut { edge: (u, v), n1: above_n, n2: below_n, p1: above_p, p2: below_p }
            };
            cuts.push(cut);
        }
        Ok(cuts)
    }

    /// Parses the edge-list text format.
    ///
    /// The first non-comment line is the vertex count; each further line is
    /// a whitespace-separated edge. Lines starting with `#` and blank lines
    /// are skipped.
    pub fn parse(text: &str) -> Result<Tree> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (header_line, header) = lines.next().ok_or_else(|| Error::Malformed {
            line: 1,
            reason: "missing vertex-count header".into(),
        })?;
        let n: usize = header.parse().map_err(|_| Error::Malformed {
            line: header_line,
            reason: format!("expected vertex count, found {header:?}"),
        })?;
        if n == 0 {
            return Err(Error::Malformed { line: header_line, reason: "vertex count must be at least 1".into() });
        }
        let mut edges = Vec::new();
        for (line, l) in lines {
            let fields: Vec<&str> = l.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Malformed {
                    line,
                    reason: format!("expected two vertex ids, found {} fields", fields.len()),
                });
            }
            let id = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Malformed {
                    line,
                    reason: format!("not a vertex id: {s:?}"),
                })
            };
            edges.push((line, id(fields[0])?, id(fields[1])?));
        }
        Self::validated(n, &edges)
    }

    /// Canonical text: header line, then sorted edges with the smaller
    /// endpoint first. No trailing newline.
    pub fn serialize(&self) -> String {
        let mut out = self.order().to_string();
        for &(u, v) in &self.edges {
            out.push('\n');
            out.push_str(&u.to_string());
            out.push(' ');
            out.push_str(&v.to_string());
        }
        out
    }

    /// The subtree induced by `vertices`, relabeled so that `vertices[i]`
    /// becomes `i`. The caller guarantees the set is connected.
    pub(crate) fn induced(&self, vertices: &[usize]) -> Tree {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Tree::from_edges(vertices.len(), &edges).expect("induced vertex set is a subtree")
    }
}

/// The two sides of a tree split at one edge.
///
/// `n1`/`p1` describe the component holding `edge.0`, `n2`/`p2` the one
/// holding `edge.1`. Pendant counts refer to pendants of the whole tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeCut {
    pub edge: (usize, usize),
    pub n1: usize,
    pub n2: usize,
    pub p1: usize,
    pub p2: usize,
}

/// A tree with a designated root; levels start at 1 for the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    tree: Tree,
    root: usize,
    parent: Vec<Option<usize>>,
    level: Vec<usize>,
}

impl RootedTree {
    pub fn new(tree: Tree, root: usize) -> Result<RootedTree> {
        tree.check_vertex(root)?;
        let (parent, order) = tree.bfs_tree(root);
        let mut level = vec![0; tree.order()];
        for &v in &order {
            level[v] = parent[v].map_or(1, |p| level[p] + 1);
        }
        Ok(RootedTree { tree, root, parent, level })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn into_tree(self) -> Tree {
        self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    pub fn height(&self) -> usize {
        self.level.iter().copied().max().unwrap_or(0)
    }

    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.tree
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| self.parent[w] == Some(v))
    }
}
