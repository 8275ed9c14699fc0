//! Simple graphs and the line graph of a forest (the dependency graph of the
//! edge-descent indicators).

use crate::error::{Error, Result};
use crate::forest::RootedForest;

/// Undirected graph on `0..vertex_count` with a sorted edge list of `(a, b)`, `a < b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Rejects loops, repeated edges and out-of-range endpoints.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParameter(format!("loop at graph vertex {a}")));
            }
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidParameter(format!("edge ({a}, {b}) out of range")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!("repeated edge {:?}", w[0])));
        }
        Ok(SimpleGraph { vertex_count, edges: list })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }
}

/// One graph vertex per forest edge (indexed as in [`RootedForest::edges`]),
/// adjacent iff the two forest edges share an endpoint.
pub fn line_graph(f: &RootedForest) -> SimpleGraph {
    let edges = f.edges();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); f.size()];
    for (k, &(child, parent)) in edges.iter().enumerate() {
        incident[child.slot()].push(k);
        incident[parent.slot()].push(k);
    }
    let mut pairs = Vec::new();
    for around in &incident {
        for (i, &a) in around.iter().enumerate() {
            for &b in &around[i + 1..] {
                pairs.push((a, b));
            }
        }
    }
    // two tree edges share at most one endpoint, so no pair repeats
    SimpleGraph::new(edges.len(), pairs).expect("line graph of a forest is simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::NodeId;

    #[test]
    fn figure_two() {
        let f = RootedForest::parse_parent_array("5 5 4 6 6 0").unwrap();
        let g = line_graph(&f);
        let edges = f.edges();
        let name = |k: usize| (edges[k].0.index(), edges[k].1.index());
        let mut named: Vec<_> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (name(a), name(b));
                (x.min(y), x.max(y))
            })
            .collect();
        named.sort();
        // (child, parent) pairs
        assert_eq!(
            named,
            vec![
                ((1, 5), (2, 5)),
                ((1, 5), (5, 6)),
                ((2, 5), (5, 6)),
                ((3, 4), (4, 6)),
                ((4, 6), (5, 6)),
            ]
        );
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.max_degree(), 3);
        let v5v6 = edges.iter().position(|&e| e == (NodeId::new(5), NodeId::new(6))).unwrap();
        assert_eq!(g.degrees()[v5v6], 3);
        assert!(g.max_degree() <= 2 * f.max_down_degree());
    }

    #[test]
    fn single_edge_and_edgeless() {
        let g = line_graph(&RootedForest::parse_parent_array("0 1").unwrap());
        assert_eq!(g.vertex_count(), 1);
        assert!(g.edges().is_empty());
        assert_eq!(g.max_degree(), 0);
        assert_eq!(SimpleGraph::new(0, []).unwrap().max_degree(), 0);
    }

    #[test]
    fn path_and_star_line_graphs() {
        let path = line_graph(&RootedForest::parse_parent_array("0 1 2 3").unwrap());
        assert_eq!(path.edges(), &[(0, 1), (1, 2)]);
        let n = 7;
        let star_text = std::iter::once("0".to_string())
            .chain((1..n).map(|_| "1".to_string()))
            .collect::<Vec<_>>()
            .join(" ");
        let star = line_graph(&RootedForest::parse_parent_array(&star_text).unwrap());
        assert_eq!(star.edges().len(), (n - 1) * (n - 2) / 2);
        assert_eq!(star.max_degree(), n - 2);
    }

    #[test]
    fn rejects_non_simple() {
        assert!(SimpleGraph::new(2, [(0, 0)]).is_err());
        assert!(SimpleGraph::new(2, [(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::new(2, [(0, 2)]).is_err());
    }
}
