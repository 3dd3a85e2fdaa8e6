use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigUint;

use super::tree::RootedTree;
use crate::algebra::Basis;
use crate::color::Color;

struct AromaNode {
    cycle: Vec<RootedTree>,
    order: usize,
    code: String,
    sigma: BigUint,
}

/// Connected graph with exactly one directed cycle: a cyclic sequence of
/// rooted trees whose roots form the cycle, edge t_i -> t_{i+1}. Stored as
/// the lexicographically least rotation.
#[derive(Clone)]
pub struct Aroma(Arc<AromaNode>);

impl Aroma {
    pub fn new(cycle: Vec<RootedTree>) -> Self {
        assert!(
            !cycle.is_empty(),
            "an aroma needs at least one cycle vertex"
        );
        let k = cycle.len();
        let rot =
            |s: usize| -> Vec<RootedTree> { (0..k).map(|i| cycle[(s + i) % k].clone()).collect() };
        let mut best = rot(0);
        let mut fixing = 1u32;
        for s in 1..k {
            let r = rot(s);
            match r.cmp(&best) {
                Ordering::Less => {
                    best = r;
                    fixing = 1;
                }
                Ordering::Equal => fixing += 1,
                Ordering::Greater => {}
            }
        }
        let mut code = String::from("<");
        for (i, t) in best.iter().enumerate() {
            if i > 0 {
                code.push(',');
            }
            code.push_str(t.code());
        }
        code.push('>');
        let order = best.iter().map(|t| t.order()).sum();
        let sigma = best
            .iter()
            .fold(BigUint::from(fixing), |acc, t| acc * t.sigma());
        Aroma(Arc::new(AromaNode {
            cycle: best,
            order,
            code,
            sigma,
        }))
    }

    /// The hanging trees in cycle order, starting from the canonical rotation.
    pub fn cycle(&self) -> &[RootedTree] {
        &self.0.cycle
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn code(&self) -> &str {
        &self.0.code
    }

    pub fn total_free_edges(&self) -> u32 {
        self.cycle().iter().map(|t| t.total_free_edges()).sum()
    }

    /// Vertices as (colour, free edges, children, on cycle), indexed by the
    /// concatenated preorders of the hanging trees.
    pub fn vertices(&self) -> Vec<(Color, u32, usize, bool)> {
        let mut out = Vec::with_capacity(self.order());
        for t in self.cycle() {
            for (i, (c, f, n)) in t.vertices().into_iter().enumerate() {
                out.push((c, f, n, i == 0));
            }
        }
        out
    }

    pub fn modify_at<F: FnOnce(&RootedTree) -> Option<RootedTree>>(
        &self,
        idx: usize,
        f: F,
    ) -> Option<Aroma> {
        let mut rest = idx;
        for (i, t) in self.cycle().iter().enumerate() {
            if rest < t.order() {
                let nt = t.modify_at(rest, f)?;
                let mut cyc = self.cycle().to_vec();
                cyc[i] = nt;
                return Some(Aroma::new(cyc));
            }
            rest -= t.order();
        }
        panic!("vertex index {idx} out of range for {self}")
    }

    pub fn rebuild(
        &self,
        g: &mut dyn FnMut(usize, &Color, u32) -> (u32, Vec<RootedTree>),
    ) -> Aroma {
        let mut base = 0;
        let cyc = self
            .cycle()
            .iter()
            .map(|t| {
                let off = base;
                base += t.order();
                t.rebuild(&mut |i, c, f| g(off + i, c, f))
            })
            .collect();
        Aroma::new(cyc)
    }

    pub fn graft_at(&self, idx: usize, t: &RootedTree) -> Aroma {
        self.modify_at(idx, |v| Some(v.graft_at(0, t)))
            .expect("grafting never fails")
    }

    pub fn add_free_at(&self, idx: usize, n: u32) -> Aroma {
        self.modify_at(idx, |v| Some(v.add_free_at(0, n)))
            .expect("adding free edges never fails")
    }

    pub fn remove_free_at(&self, idx: usize) -> Option<Aroma> {
        self.modify_at(idx, |v| v.remove_free_at(0))
    }

    pub fn without_free_edges(&self) -> Aroma {
        Aroma::new(
            self.cycle()
                .iter()
                .map(|t| t.without_free_edges())
                .collect(),
        )
    }
}

impl PartialEq for Aroma {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.code() == other.code()
    }
}

impl Eq for Aroma {}

impl PartialOrd for Aroma {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Aroma {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code().cmp(other.code())
    }
}

impl Hash for Aroma {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.code().hash(state)
    }
}

impl fmt::Display for Aroma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl fmt::Debug for Aroma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl Basis for Aroma {
    fn degree(&self) -> usize {
        self.order()
    }
    fn sigma(&self) -> BigUint {
        self.0.sigma.clone()
    }
}
