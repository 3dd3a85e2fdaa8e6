use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;

use crate::algebra::Basis;
use crate::forests::{Aroma, RootedTree};
use crate::multiindices::{Letter, MultiIndex};

type TreeCache = RwLock<HashMap<(MultiIndex, u32), Arc<Vec<RootedTree>>>>;
type AromaCache = RwLock<HashMap<MultiIndex, Arc<Vec<Aroma>>>>;

fn tree_cache() -> &'static TreeCache {
    static C: OnceLock<TreeCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn aroma_cache() -> &'static AromaCache {
    static C: OnceLock<AromaCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Unordered partitions of `m` into exactly `k` nonempty blocks, each listed
/// once as a nondecreasing sequence of blocks.
pub(crate) fn multiset_partitions(m: &MultiIndex, k: usize) -> Vec<Vec<MultiIndex>> {
    fn rec(
        rest: &MultiIndex,
        k: usize,
        min: Option<&MultiIndex>,
        cur: &mut Vec<MultiIndex>,
        out: &mut Vec<Vec<MultiIndex>>,
    ) {
        if k == 0 {
            if rest.is_empty() {
                out.push(cur.clone());
            }
            return;
        }
        if rest.degree() < k {
            return;
        }
        let mut divs: Vec<MultiIndex> = rest
            .divisors()
            .into_iter()
            .filter(|d| !d.is_empty())
            .collect();
        divs.sort();
        for d in divs {
            if min.is_some_and(|m| &d < m) {
                continue;
            }
            let r = rest.minus(&d);
            cur.push(d.clone());
            rec(&r, k - 1, Some(&d), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, k, None, &mut Vec::new(), &mut out);
    out
}

/// Trees whose fertility profile is `m`, where the root letter pays
/// `root_bonus` units of its fertility to an outside edge (1 on a cycle).
fn trees_with(m: &MultiIndex, root_bonus: u32) -> Arc<Vec<RootedTree>> {
    let key = (m.clone(), root_bonus);
    if let Some(v) = tree_cache().read().unwrap().get(&key) {
        return v.clone();
    }
    let mut set = BTreeSet::new();
    let roots: Vec<Letter> = m.letters().map(|(l, _)| l.clone()).collect();
    for root in roots {
        let f = root.j + 1 - root_bonus as i32;
        if f < 0 {
            continue;
        }
        let rest = m.minus(&MultiIndex::letter(root.clone()));
        for ch in 0..=(f as usize).min(rest.degree()) {
            let free = f as u32 - ch as u32;
            for blocks in multiset_partitions(&rest, ch) {
                let mut combos: Vec<Vec<RootedTree>> = vec![Vec::new()];
                for b in &blocks {
                    let opts = trees_with(b, 0);
                    combos = combos
                        .into_iter()
                        .flat_map(|c| {
                            opts.iter().map(move |t| {
                                let mut c2 = c.clone();
                                c2.push(t.clone());
                                c2
                            })
                        })
                        .collect();
                    if combos.is_empty() {
                        break;
                    }
                }
                for kids in combos {
                    set.insert(RootedTree::new(root.color.clone(), free, kids));
                }
            }
        }
    }
    let v = Arc::new(set.into_iter().collect::<Vec<_>>());
    tree_cache().write().unwrap().insert(key, v.clone());
    v
}

/// Rooted trees (free edges allowed) with fertility profile `m`.
pub fn trees_with_profile(m: &MultiIndex) -> Arc<Vec<RootedTree>> {
    trees_with(m, 0)
}

/// Ordered sequences of nonempty blocks partitioning `m`.
fn ordered_partitions(m: &MultiIndex) -> Vec<Vec<MultiIndex>> {
    if m.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for d in m.divisors() {
        if d.is_empty() {
            continue;
        }
        for mut rest in ordered_partitions(&m.minus(&d)) {
            rest.insert(0, d.clone());
            out.push(rest);
        }
    }
    out
}

/// Aromas (free edges allowed) with fertility profile `m`.
pub fn aromas_with_profile(m: &MultiIndex) -> Arc<Vec<Aroma>> {
    if let Some(v) = aroma_cache().read().unwrap().get(m) {
        return v.clone();
    }
    let mut set = BTreeSet::new();
    for blocks in ordered_partitions(m) {
        let mut tuples: Vec<Vec<RootedTree>> = vec![Vec::new()];
        for b in &blocks {
            let opts = trees_with(b, 1);
            tuples = tuples
                .into_iter()
                .flat_map(|c| {
                    opts.iter().map(move |t| {
                        let mut c2 = c.clone();
                        c2.push(t.clone());
                        c2
                    })
                })
                .collect();
            if tuples.is_empty() {
                break;
            }
        }
        for tu in tuples {
            set.insert(Aroma::new(tu));
        }
    }
    let v = Arc::new(set.into_iter().collect::<Vec<_>>());
    aroma_cache().write().unwrap().insert(m.clone(), v.clone());
    v
}

/// Preimages of a tree monomial under the fertility map, with their symmetry factors.
pub fn inverse_fertility_trees(m: &MultiIndex) -> Vec<(RootedTree, BigUint)> {
    trees_with_profile(m)
        .iter()
        .map(|t| (t.clone(), t.sigma()))
        .collect()
}

pub fn inverse_fertility_aromas(m: &MultiIndex) -> Vec<(Aroma, BigUint)> {
    aromas_with_profile(m)
        .iter()
        .map(|a| (a.clone(), a.sigma()))
        .collect()
}
