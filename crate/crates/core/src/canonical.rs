//! Canonical labeling of free trees.
//!
//! Roots the tree at its center (trying both centers of a bicentral tree),
//! encodes rooted subtrees as sorted parenthesis strings, and relabels
//! vertices in preorder of that encoding. Isomorphic trees get identical
//! labeled trees, so the serialized canonical tree is a set key.

use crate::tree::Tree;

/// The one or two centers of a tree, ascending.
pub fn centers(t: &Tree) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in t.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

struct Encoded {
    code: String,
    /// Children of each vertex, ordered by their subtree codes.
    children: Vec<Vec<usize>>,
}

fn encode_rooted(t: &Tree, root: usize) -> Encoded {
    let (parent, order) = t.bfs_tree(root);
    let n = t.order();
    let mut codes = vec![String::new(); n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut kids: Vec<usize> = t
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| parent[w] == Some(v))
            .collect();
        kids.sort_by(|&a, &b| codes[a].cmp(&codes[b]));
        let mut code = String::with_capacity(2 + kids.iter().map(|&k| codes[k].len()).sum::<usize>());
        code.push('(');
        for &k in &kids {
            code.push_str(&codes[k]);
        }
        code.push(')');
        codes[v] = code;
        children[v] = kids;
    }
    Encoded { code: std::mem::take(&mut codes[root]), children }
}

/// The canonical representative of `t`'s isomorphism class.
pub fn canonical_tree(t: &Tree) -> Tree {
    let best = centers(t)
        .into_iter()
        .map(|c| (encode_rooted(t, c), c))
        .min_by(|a, b| a.0.code.cmp(&b.0.code))
        .expect("a tree has at least one center");
    let (enc, root) = best;
    let n = t.order();
    let mut label = vec![usize::MAX; n];
    let mut parent = vec![None; n];
    let mut next = 0;
    // preorder, children visited in code order
    let mut stack = vec![(root, None::<usize>)];
    while let Some((v, p)) = stack.pop() {
        label[v] = next;
        parent[next] = p.map(|p| label[p]);
        next += 1;
        for &k in enc.children[v].iter().rev() {
            stack.push((k, Some(v)));
        }
    }
    Tree::from_parents(&parent).expect("relabeling preserves tree structure")
}

/// Serialized canonical tree; equal strings iff isomorphic trees.
pub fn canonical_string(t: &Tree) -> String {
    canonical_tree(t).serialize()
}
