//! Test-only oracles, written independently of the library's algorithms.
#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::OnceLock;

use wiener_core::Tree;

/// Decodes a Prüfer sequence over `0..n` into an edge list.
pub fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(adj, w, v))
        .collect();
    kids.sort();
    format!("1{}0", kids.concat())
}

/// Isomorphism invariant: the smallest rooted encoding over every root.
pub fn iso_key(n: usize, edges: &[(usize, usize)]) -> String {
    let adj = adjacency(n, edges);
    (0..n).map(|r| rooted_code(&adj, r, usize::MAX)).min().unwrap()
}

pub fn tree_key(t: &Tree) -> String {
    iso_key(t.order(), t.edges())
}

/// Number of isomorphism classes of trees on `n ≤ 8` vertices, by hashing
/// every labeled tree.
pub fn census(n: usize) -> usize {
    static CENSUS: OnceLock<Vec<usize>> = OnceLock::new();
    CENSUS.get_or_init(|| (0..=8).map(census_uncached).collect())[n]
}

fn census_uncached(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let mut classes = HashSet::new();
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        classes.insert(iso_key(n, &prufer_edges(&seq, n)));
        let mut i = 0;
        while i < len {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == len {
            break;
        }
    }
    classes.len()
}

/// All-pairs distances by Floyd–Warshall.
pub fn floyd(t: &Tree) -> Vec<Vec<u64>> {
    let n = t.order();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in t.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Wiener and terminal Wiener indices from the distance matrix.
pub fn oracle_indices(t: &Tree) -> (u64, u64) {
    let d = floyd(t);
    let n = t.order();
    let leaf = |v: usize| n == 1 || t.degree(v) == 1;
    let mut w = 0;
    let mut tw = 0;
    for i in 0..n {
        for j in i + 1..n {
            w += d[i][j];
            if leaf(i) && leaf(j) {
                tw += d[i][j];
            }
        }
    }
    (w, tw)
}
