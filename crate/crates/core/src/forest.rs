//! Rooted plane forests over dense 1-based vertex ids.
//!
//! A forest stores parent pointers, ordered children and an ordered list of
//! roots. Child order is kept for presentation and round-tripping; none of
//! the descent computations depend on it.

use std::fmt;

use crate::error::{Error, ParseError, Result};

/// Vertex id, 1-based and dense in `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(u32);

impl NodeId {
    /// Panics if `index` is zero.
    pub fn new(index: usize) -> Self {
        assert!(index >= 1, "vertex ids are 1-based");
        NodeId(u32::try_from(index).expect("vertex id overflows u32"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn slot(self) -> usize {
        self.0 as usize - 1
    }

    pub(crate) fn from_slot(slot: usize) -> Self {
        NodeId::new(slot + 1)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootedForest {
    parent: Vec<Option<NodeId>>,
    children: Vec<Vec<NodeId>>,
    roots: Vec<NodeId>,
}

/// Result of [`RootedForest::delete_vertex`]: the smaller forest plus the
/// old-to-new id map (`None` for the deleted vertex).
#[derive(Debug, Clone)]
pub struct Deletion {
    pub forest: RootedForest,
    pub id_map: Vec<Option<NodeId>>,
}

impl Deletion {
    pub fn map(&self, old: NodeId) -> Option<NodeId> {
        self.id_map.get(old.slot()).copied().flatten()
    }
}

impl RootedForest {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a forest from 1-based parent indices (`None` marks a root).
    /// Children are ordered by index, roots by index.
    pub fn from_parents(parents: &[Option<usize>]) -> Result<Self> {
        let n = parents.len();
        let mut parent = Vec::with_capacity(n);
        for (slot, p) in parents.iter().enumerate() {
            match *p {
                None => parent.push(None),
                Some(p) if p == 0 || p > n => {
                    return Err(ParseError::OutOfRange { vertex: slot + 1, parent: p, n }.into())
                }
                Some(p) if p == slot + 1 => {
                    return Err(ParseError::Cycle { vertex: slot + 1 }.into())
                }
                Some(p) => parent.push(Some(NodeId::new(p))),
            }
        }
        if let Some(v) = find_cycle(&parent) {
            return Err(ParseError::Cycle { vertex: v + 1 }.into());
        }
        let mut children = vec![Vec::new(); n];
        let mut roots = Vec::new();
        for (slot, p) in parent.iter().enumerate() {
            match p {
                Some(p) => children[p.slot()].push(NodeId::from_slot(slot)),
                None => roots.push(NodeId::from_slot(slot)),
            }
        }
        Ok(RootedForest { parent, children, roots })
    }

    /// Parses whitespace-separated parent indices, `0` marking a root.
    pub fn parse_parent_array(text: &str) -> Result<Self> {
        let mut parents = Vec::new();
        for (position, token) in text.split_whitespace().enumerate() {
            let p: usize = token.parse().map_err(|_| ParseError::MalformedToken {
                position: position + 1,
                token: token.to_string(),
            })?;
            parents.push(if p == 0 { None } else { Some(p) });
        }
        Self::from_parents(&parents)
    }

    /// Parses balanced parentheses; every `(...)` is a vertex whose children
    /// are the inner groups. Vertices are numbered in depth-first preorder.
    /// Whitespace is ignored and the empty string is the empty forest.
    pub fn parse_nested(text: &str) -> Result<Self> {
        let mut parents: Vec<Option<usize>> = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        for (position, ch) in text.char_indices() {
            match ch {
                '(' => {
                    parents.push(stack.last().copied());
                    stack.push(parents.len());
                }
                ')' => {
                    if stack.pop().is_none() {
                        return Err(ParseError::Unbalanced { position }.into());
                    }
                }
                c if c.is_whitespace() => {}
                c => return Err(ParseError::UnexpectedChar { position, ch: c }.into()),
            }
        }
        if !stack.is_empty() {
            return Err(ParseError::Unbalanced { position: text.len() }.into());
        }
        Self::from_parents(&parents)
    }

    /// Nested-parenthesis text following stored root and child order.
    pub fn serialize_nested(&self) -> String {
        let mut out = String::with_capacity(2 * self.size());
        // (vertex, entering?)
        let mut stack: Vec<(NodeId, bool)> = self.roots.iter().rev().map(|&r| (r, true)).collect();
        while let Some((v, entering)) = stack.pop() {
            if entering {
                out.push('(');
                stack.push((v, false));
                stack.extend(self.children[v.slot()].iter().rev().map(|&c| (c, true)));
            } else {
                out.push(')');
            }
        }
        out
    }

    /// Parent-array text, `0` for roots, single-space separated.
    pub fn to_parent_array(&self) -> String {
        self.parent
            .iter()
            .map(|p| p.map_or(0, NodeId::index).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.size() - self.roots.len()
    }

    pub fn roots(&self) -> &[NodeId] {
        &self.roots
    }

    pub fn is_tree(&self) -> bool {
        self.roots.len() == 1
    }

    pub fn vertices(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.size()).map(NodeId::from_slot)
    }

    pub fn contains(&self, v: NodeId) -> bool {
        v.slot() < self.size()
    }

    fn check(&self, v: NodeId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn parent(&self, v: NodeId) -> Result<Option<NodeId>> {
        self.check(v)?;
        Ok(self.parent[v.slot()])
    }

    pub fn children(&self, v: NodeId) -> Result<&[NodeId]> {
        self.check(v)?;
        Ok(&self.children[v.slot()])
    }

    pub fn down_degree(&self, v: NodeId) -> Result<usize> {
        Ok(self.children(v)?.len())
    }

    /// Largest down-degree, 0 for the empty forest.
    pub fn max_down_degree(&self) -> usize {
        self.children.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn down_degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.children.iter().map(Vec::len)
    }

    pub(crate) fn parent_slots(&self) -> &[Option<NodeId>] {
        &self.parent
    }

    pub(crate) fn children_slots(&self) -> &[Vec<NodeId>] {
        &self.children
    }

    /// Edges as `(child, parent)` pairs ordered by child id. Line-graph
    /// vertex `k` corresponds to entry `k` of this list.
    pub fn edges(&self) -> Vec<(NodeId, NodeId)> {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(slot, p)| p.map(|p| (NodeId::from_slot(slot), p)))
            .collect()
    }

    /// Vertices of the component rooted at `root`, in preorder.
    pub fn component(&self, root: NodeId) -> Result<Vec<NodeId>> {
        self.check(root)?;
        let mut order = Vec::new();
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(self.children[v.slot()].iter().rev());
        }
        Ok(order)
    }

    /// Children-before-parent order over the whole forest.
    pub fn postorder(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.size());
        let mut stack: Vec<(NodeId, bool)> = self.roots.iter().rev().map(|&r| (r, true)).collect();
        while let Some((v, entering)) = stack.pop() {
            if entering {
                stack.push((v, false));
                stack.extend(self.children[v.slot()].iter().rev().map(|&c| (c, true)));
            } else {
                order.push(v);
            }
        }
        order
    }

    /// Splits into component trees, each re-densified in preorder.
    pub fn components(&self) -> Vec<RootedForest> {
        self.roots
            .iter()
            .map(|&r| {
                let verts = self.component(r).expect("root belongs to forest");
                let mut new_id = vec![0usize; self.size()];
                for (i, v) in verts.iter().enumerate() {
                    new_id[v.slot()] = i + 1;
                }
                let parents: Vec<Option<usize>> = verts
                    .iter()
                    .map(|v| self.parent[v.slot()].map(|p| new_id[p.slot()]))
                    .collect();
                let mut tree = RootedForest::from_parents(&parents).expect("component is a tree");
                // keep plane order
                for v in &verts {
                    let slot = new_id[v.slot()] - 1;
                    tree.children[slot] = self.children[v.slot()]
                        .iter()
                        .map(|c| NodeId::new(new_id[c.slot()]))
                        .collect();
                }
                tree
            })
            .collect()
    }

    /// Removes `v` and its incident edges. Children of `v` become roots: in
    /// place of `v` when `v` was a root, otherwise right after the root of
    /// `v`'s component. Remaining ids are renumbered preserving order.
    pub fn delete_vertex(&self, v: NodeId) -> Result<Deletion> {
        self.check(v)?;
        let gone = v.slot();
        let id_map: Vec<Option<NodeId>> = (0..self.size())
            .map(|slot| match slot.cmp(&gone) {
                std::cmp::Ordering::Less => Some(NodeId::from_slot(slot)),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(NodeId::from_slot(slot - 1)),
            })
            .collect();
        let remap = |u: NodeId| id_map[u.slot()].expect("not the deleted vertex");

        let mut parent = Vec::with_capacity(self.size() - 1);
        let mut children = Vec::with_capacity(self.size() - 1);
        for slot in (0..self.size()).filter(|&s| s != gone) {
            parent.push(match self.parent[slot] {
                Some(p) if p == v => None,
                Some(p) => Some(remap(p)),
                None => None,
            });
            children.push(
                self.children[slot]
                    .iter()
                    .filter(|&&c| c != v)
                    .map(|&c| remap(c))
                    .collect(),
            );
        }

        let orphans: Vec<NodeId> = self.children[gone].iter().map(|&c| remap(c)).collect();
        let host = if self.parent[gone].is_some() { Some(self.root_of(v)) } else { None };
        let mut roots = Vec::with_capacity(self.roots.len() + orphans.len());
        for &r in &self.roots {
            if r == v {
                roots.extend(orphans.iter().copied());
            } else {
                roots.push(remap(r));
                if host == Some(r) {
                    roots.extend(orphans.iter().copied());
                }
            }
        }
        Ok(Deletion { forest: RootedForest { parent, children, roots }, id_map })
    }

    fn root_of(&self, mut v: NodeId) -> NodeId {
        while let Some(p) = self.parent[v.slot()] {
            v = p;
        }
        v
    }
}

/// Returns a slot on a parent-pointer cycle, if any.
fn find_cycle(parent: &[Option<NodeId>]) -> Option<usize> {
    // 0 = unvisited, 1 = on current walk, 2 = known acyclic
    let mut state = vec![0u8; parent.len()];
    for start in 0..parent.len() {
        let mut walk = Vec::new();
        let mut cur = Some(start);
        while let Some(v) = cur {
            match state[v] {
                2 => break,
                1 => return Some(v),
                _ => {
                    state[v] = 1;
                    walk.push(v);
                    cur = parent[v].map(NodeId::slot);
                }
            }
        }
        for v in walk {
            state[v] = 2;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn figure_one() -> RootedForest {
        RootedForest::parse_parent_array("5 5 4 6 6 0").unwrap()
    }

    fn ids(xs: &[usize]) -> Vec<NodeId> {
        xs.iter().map(|&x| NodeId::new(x)).collect()
    }

    #[test]
    fn parse_single_vertex() {
        let f = RootedForest::parse_parent_array("0").unwrap();
        assert_eq!(f.size(), 1);
        assert_eq!(f.edge_count(), 0);
        assert!(f.is_tree());
    }

    #[test]
    fn parse_figure_one() {
        let f = figure_one();
        assert_eq!(f.roots(), &ids(&[6])[..]);
        assert_eq!(f.children(NodeId::new(6)).unwrap(), &ids(&[4, 5])[..]);
        assert_eq!(f.children(NodeId::new(5)).unwrap(), &ids(&[1, 2])[..]);
        assert_eq!(f.children(NodeId::new(4)).unwrap(), &ids(&[3])[..]);
        assert_eq!(f.edge_count(), 5);
    }

    #[test]
    fn parse_two_component_forest() {
        let f = RootedForest::parse_parent_array("0 1 1 0").unwrap();
        assert_eq!(f.roots(), &ids(&[1, 4])[..]);
        let sizes: Vec<usize> = f.components().iter().map(RootedForest::size).collect();
        assert_eq!(sizes, vec![3, 1]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            RootedForest::parse_parent_array("0 x"),
            Err(Error::Parse(ParseError::MalformedToken { position: 2, .. }))
        ));
        assert!(matches!(
            RootedForest::parse_parent_array("0 7"),
            Err(Error::Parse(ParseError::OutOfRange { vertex: 2, parent: 7, .. }))
        ));
        assert!(matches!(
            RootedForest::parse_parent_array("0 3 2"),
            Err(Error::Parse(ParseError::Cycle { .. }))
        ));
        assert!(matches!(
            RootedForest::parse_parent_array("1"),
            Err(Error::Parse(ParseError::Cycle { vertex: 1 }))
        ));
        assert!(matches!(
            RootedForest::parse_parent_array("-1"),
            Err(Error::Parse(ParseError::MalformedToken { .. }))
        ));
    }

    #[test]
    fn nested_parsing() {
        let point = RootedForest::parse_nested("()").unwrap();
        assert_eq!(point.size(), 1);
        let star = RootedForest::parse_nested("(()())").unwrap();
        assert_eq!(star.down_degree(NodeId::new(1)).unwrap(), 2);
        let fig = RootedForest::parse_nested("((()())(()))").unwrap();
        assert_eq!(fig.size(), 6);
        assert_eq!(fig.to_parent_array(), "0 1 2 2 1 5");
        assert_eq!(
            crate::canon::canonical_code(&fig),
            crate::canon::canonical_code(&figure_one())
        );
        assert!(RootedForest::parse_nested("").unwrap().is_empty());
        assert!(RootedForest::parse_nested(" ( ( ) ) ").is_ok());
        assert!(matches!(
            RootedForest::parse_nested("(()"),
            Err(Error::Parse(ParseError::Unbalanced { .. }))
        ));
        assert!(matches!(
            RootedForest::parse_nested("())"),
            Err(Error::Parse(ParseError::Unbalanced { position: 2 }))
        ));
        assert!(matches!(
            RootedForest::parse_nested("(a)"),
            Err(Error::Parse(ParseError::UnexpectedChar { ch: 'a', .. }))
        ));
    }

    #[test]
    fn nested_round_trip_keeps_plane_order() {
        for text in ["", "()", "(()(()))", "((()())(()))()", "(())(()())"] {
            assert_eq!(RootedForest::parse_nested(text).unwrap().serialize_nested(), text);
        }
        assert_eq!(figure_one().serialize_nested(), "((())(()()))");
    }

    #[test]
    fn down_degrees() {
        let f = figure_one();
        assert_eq!(f.down_degree(NodeId::new(5)).unwrap(), 2);
        assert_eq!(f.down_degree(NodeId::new(1)).unwrap(), 0);
        assert_eq!(f.max_down_degree(), 2);
        assert!(matches!(f.down_degree(NodeId::new(7)), Err(Error::UnknownVertex(_))));
        assert_eq!(RootedForest::empty().max_down_degree(), 0);
        let star = RootedForest::parse_parent_array("0 1 1 1 1 1").unwrap();
        assert_eq!(star.down_degree(NodeId::new(1)).unwrap(), 5);
        assert_eq!(star.max_down_degree(), 5);
    }

    #[test]
    fn delete_root_of_figure_one() {
        let f = figure_one();
        let del = f.delete_vertex(NodeId::new(6)).unwrap();
        let g = &del.forest;
        assert_eq!(g.size(), 5);
        assert_eq!(g.edge_count(), 3);
        // v4 and v5 keep their ids and take v6's place, in child order
        assert_eq!(g.roots(), &ids(&[4, 5])[..]);
        assert_eq!(g.children(NodeId::new(5)).unwrap(), &ids(&[1, 2])[..]);
        assert_eq!(g.children(NodeId::new(4)).unwrap(), &ids(&[3])[..]);
        assert_eq!(del.map(NodeId::new(6)), None);
        assert_eq!(del.map(NodeId::new(3)), Some(NodeId::new(3)));
    }

    #[test]
    fn delete_leaf_of_figure_one() {
        let del = figure_one().delete_vertex(NodeId::new(1)).unwrap();
        assert_eq!(del.forest.size(), 5);
        assert_eq!(del.forest.edge_count(), 4);
        assert!(del.forest.is_tree());
        assert_eq!(del.map(NodeId::new(2)), Some(NodeId::new(1)));
        assert_eq!(del.forest.to_parent_array(), "4 3 5 5 0");
    }

    #[test]
    fn delete_internal_vertex_appends_after_host_root() {
        // two trees: 1 -> {2 -> {3, 4}}, and 5
        let f = RootedForest::parse_parent_array("0 1 2 2 0").unwrap();
        let del = f.delete_vertex(NodeId::new(2)).unwrap();
        // old 3, 4 become new 2, 3 and sit right after root 1, before old 5
        assert_eq!(del.forest.roots(), &ids(&[1, 2, 3, 4])[..]);
        assert_eq!(del.forest.edge_count(), 0);
    }

    #[test]
    fn delete_only_vertex() {
        let f = RootedForest::parse_parent_array("0").unwrap();
        assert!(f.delete_vertex(NodeId::new(1)).unwrap().forest.is_empty());
        assert!(f.delete_vertex(NodeId::new(2)).is_err());
    }

    #[test]
    fn edge_formula_under_deletion() {
        let f = figure_one();
        let n = f.size();
        for v in f.vertices() {
            let d = f.down_degree(v).unwrap();
            let expected = if f.parent(v).unwrap().is_none() { n - 1 - d } else { n - 2 - d };
            assert_eq!(f.delete_vertex(v).unwrap().forest.edge_count(), expected, "{v}");
        }
    }
}
