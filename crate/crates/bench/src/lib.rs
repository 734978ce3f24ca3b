//! Fixtures shared by the criterion benches.

use wiener_core::{generate_dendrimer, DendrimerSpec, Tree};

/// Path, star, and a dendrimer of roughly `n` vertices.
pub fn fixtures(n: usize) -> Vec<(&'static str, Tree)> {
    let mut k = 1;
    while DendrimerSpec::new(k + 1, 3).unwrap().bethe().unwrap().order().unwrap() <= n.into() {
        k += 1;
    }
    let dendrimer = generate_dendrimer(&DendrimerSpec::new(k, 3).unwrap()).unwrap().into_tree();
    vec![
        ("path", Tree::path(n).unwrap()),
        ("star", Tree::star(n).unwrap()),
        ("dendrimer", dendrimer),
    ]
}
