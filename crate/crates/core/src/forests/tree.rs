use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigUint;

use crate::algebra::{multiset_sigma, Basis};
use crate::color::Color;

struct TreeNode {
    color: Color,
    free: u32,
    children: Vec<RootedTree>,
    order: usize,
    code: String,
    sigma: BigUint,
}

/// Non-planar rooted tree with coloured vertices, each vertex optionally
/// carrying free (dangling) edges. Stored in canonical form: children sorted
/// by their canonical text, which is also the total order used everywhere.
#[derive(Clone)]
pub struct RootedTree(Arc<TreeNode>);

pub(crate) fn vertex_code(color: &Color, free: u32) -> String {
    let mut s = String::from("b");
    if !color.is_default() {
        s.push(':');
        s.push_str(color.name());
    }
    if free > 0 {
        s.push('!');
        s.push_str(&free.to_string());
    }
    s
}

impl RootedTree {
    pub fn new(color: Color, free: u32, mut children: Vec<RootedTree>) -> Self {
        children.sort();
        let mut code = vertex_code(&color, free);
        if !children.is_empty() {
            code.push('[');
            for (i, c) in children.iter().enumerate() {
                if i > 0 {
                    code.push(',');
                }
                code.push_str(c.code());
            }
            code.push(']');
        }
        let order = 1 + children.iter().map(|c| c.order()).sum::<usize>();
        let sigma = multiset_sigma(&children, |c| c.sigma());
        RootedTree(Arc::new(TreeNode {
            color,
            free,
            children,
            order,
            code,
            sigma,
        }))
    }

    /// Single default-coloured vertex.
    pub fn leaf() -> Self {
        RootedTree::new(Color::default(), 0, Vec::new())
    }

    /// Default-coloured root with the given children.
    pub fn node(children: Vec<RootedTree>) -> Self {
        RootedTree::new(Color::default(), 0, children)
    }

    pub fn color(&self) -> &Color {
        &self.0.color
    }

    /// Free edges attached at the root.
    pub fn free_edges(&self) -> u32 {
        self.0.free
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.0.children
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn code(&self) -> &str {
        &self.0.code
    }

    pub fn total_free_edges(&self) -> u32 {
        self.0.free
            + self
                .children()
                .iter()
                .map(|c| c.total_free_edges())
                .sum::<u32>()
    }

    pub fn with_root(&self, free: u32, children: Vec<RootedTree>) -> Self {
        RootedTree::new(self.color().clone(), free, children)
    }

    /// Vertices in preorder as (colour, free edges, number of children).
    pub fn vertices(&self) -> Vec<(Color, u32, usize)> {
        let mut out = Vec::with_capacity(self.order());
        self.collect_vertices(&mut out);
        out
    }

    fn collect_vertices(&self, out: &mut Vec<(Color, u32, usize)>) {
        out.push((
            self.color().clone(),
            self.free_edges(),
            self.children().len(),
        ));
        for c in self.children() {
            c.collect_vertices(out);
        }
    }

    /// Replaces the subtree at preorder index `idx` by `f(subtree)`; `None`
    /// from `f` propagates.
    pub fn modify_at<F: FnOnce(&RootedTree) -> Option<RootedTree>>(
        &self,
        idx: usize,
        f: F,
    ) -> Option<RootedTree> {
        if idx == 0 {
            return f(self);
        }
        let mut rest = idx - 1;
        for (i, c) in self.children().iter().enumerate() {
            if rest < c.order() {
                let nc = c.modify_at(rest, f)?;
                let mut ch = self.children().to_vec();
                ch[i] = nc;
                return Some(self.with_root(self.free_edges(), ch));
            }
            rest -= c.order();
        }
        panic!("vertex index {idx} out of range for {self}")
    }

    /// Rebuilds the tree, letting `g(preorder index, colour, free)` set a new
    /// free-edge count and extra children at every original vertex.
    pub fn rebuild(
        &self,
        g: &mut dyn FnMut(usize, &Color, u32) -> (u32, Vec<RootedTree>),
    ) -> RootedTree {
        let mut next = 0;
        self.rebuild_from(&mut next, g)
    }

    fn rebuild_from(
        &self,
        next: &mut usize,
        g: &mut dyn FnMut(usize, &Color, u32) -> (u32, Vec<RootedTree>),
    ) -> RootedTree {
        let idx = *next;
        *next += 1;
        let (free, extra) = g(idx, self.color(), self.free_edges());
        let mut ch: Vec<RootedTree> = self
            .children()
            .iter()
            .map(|c| c.rebuild_from(next, g))
            .collect();
        ch.extend(extra);
        self.with_root(free, ch)
    }

    pub fn graft_at(&self, idx: usize, t: &RootedTree) -> RootedTree {
        self.modify_at(idx, |v| {
            let mut ch = v.children().to_vec();
            ch.push(t.clone());
            Some(v.with_root(v.free_edges(), ch))
        })
        .expect("grafting never fails")
    }

    pub fn add_free_at(&self, idx: usize, n: u32) -> RootedTree {
        self.modify_at(idx, |v| {
            Some(v.with_root(v.free_edges() + n, v.children().to_vec()))
        })
        .expect("adding free edges never fails")
    }

    /// Removes one free edge at the vertex; `None` if it has none.
    pub fn remove_free_at(&self, idx: usize) -> Option<RootedTree> {
        self.modify_at(idx, |v| {
            if v.free_edges() == 0 {
                None
            } else {
                Some(v.with_root(v.free_edges() - 1, v.children().to_vec()))
            }
        })
    }

    /// Same tree with every free edge deleted.
    pub fn without_free_edges(&self) -> RootedTree {
        self.rebuild(&mut |_, _, _| (0, Vec::new()))
    }

    /// For every vertex v (preorder), the sequence (T_v, T_parent(v), ..., T_root)
    /// where T_v is the subtree at v and every later entry is the subtree at
    /// that ancestor with the branch towards v removed. Linking the root back
    /// to v turns this sequence into an aroma cycle.
    pub fn root_paths(&self) -> Vec<Vec<RootedTree>> {
        let mut out = vec![vec![self.clone()]];
        for (i, c) in self.children().iter().enumerate() {
            let mut rest = self.children().to_vec();
            rest.remove(i);
            let stripped = self.with_root(self.free_edges(), rest);
            for mut p in c.root_paths() {
                p.push(stripped.clone());
                out.push(p);
            }
        }
        out
    }
}

impl PartialEq for RootedTree {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.code() == other.code()
    }
}

impl Eq for RootedTree {}

impl PartialOrd for RootedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RootedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code().cmp(other.code())
    }
}

impl Hash for RootedTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.code().hash(state)
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl Basis for RootedTree {
    fn degree(&self) -> usize {
        self.order()
    }
    fn sigma(&self) -> BigUint {
        self.0.sigma.clone()
    }
}
