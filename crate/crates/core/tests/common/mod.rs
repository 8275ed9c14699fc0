#![allow(dead_code)]

use tree_descent::{generate_family, Family, RootedForest, TreeFamilySpec};

/// Uniform labeled tree on `n` vertices rooted at vertex 1.
pub fn random_tree(n: usize, seed: u64) -> RootedForest {
    generate_family(&TreeFamilySpec::new(Family::Prufer { seed: Some(seed) }, n)).unwrap()
}

/// Every increasing tree on `n` vertices: vertex `i` hangs off some `j < i`.
/// Covers every unlabeled rooted shape at least once.
pub fn recursive_trees(n: usize) -> Vec<RootedForest> {
    let mut out = Vec::new();
    let mut parents = vec![0usize; n];
    fn go(i: usize, parents: &mut Vec<usize>, out: &mut Vec<RootedForest>) {
        if i == parents.len() {
            let text: Vec<String> = parents.iter().map(usize::to_string).collect();
            out.push(RootedForest::parse_parent_array(&text.join(" ")).unwrap());
            return;
        }
        for p in 1..=i {
            parents[i] = p;
            go(i + 1, parents, out);
        }
    }
    if n > 0 {
        go(1, &mut parents, &mut out);
    }
    out
}

/// Descent histogram by recursive permutation generation straight from the
/// parent array; shares nothing with the library's engines.
pub fn naive_descent_counts(parents: &[usize]) -> Vec<u64> {
    let n = parents.len();
    let edges = parents.iter().filter(|&&p| p != 0).count();
    let mut hist = vec![0u64; edges + 1];
    let mut labels = vec![0usize; n];
    let mut used = vec![false; n + 1];
    fn go(i: usize, parents: &[usize], labels: &mut [usize], used: &mut [bool], hist: &mut [u64]) {
        let n = parents.len();
        if i == n {
            let d = (0..n).filter(|&v| parents[v] != 0 && labels[v] > labels[parents[v] - 1]).count();
            hist[d] += 1;
            return;
        }
        for l in 1..=n {
            if !used[l] {
                used[l] = true;
                labels[i] = l;
                go(i + 1, parents, labels, used, hist);
                used[l] = false;
            }
        }
    }
    go(0, parents, &mut labels, &mut used, &mut hist);
    hist
}
