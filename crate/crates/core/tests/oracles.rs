//! Enumeration, symmetry factors and fertility preimages against brute force
//! over labelled functional graphs and closed-form labelled counts.

use std::collections::{BTreeMap, BTreeSet};

use aromatic_core::algebra::{factorial, from_big, Basis, Coeff};
use aromatic_core::embedding::{aromas_with_profile, j_aro, trees_with_profile};
use aromatic_core::forests::enumerate::{
    aromas, aromatic_forests, aromatic_trees, clumped_forests, multiaromas, trees,
};
use aromatic_core::forests::{Aroma, AromaticForest, RootedTree};
use aromatic_core::multiindices::enumerate::{aroma_monomials, tree_monomials};
use aromatic_core::multiindices::{AromaticMI, MultiIndex};
use aromatic_core::{Color, ColorSet};
use num_bigint::BigUint;

fn one_colour() -> ColorSet {
    ColorSet::new(vec![Color::default()])
}

fn two_colours() -> ColorSet {
    ColorSet::parse("r,g").unwrap()
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn pow(b: u64, e: u64) -> BigUint {
    big(b).pow(e as u32)
}

/// Sum of n!/sigma over a basis: the number of vertex labellings of all classes.
fn labelled<B: Basis>(xs: &[B], n: usize) -> BigUint {
    let nf = factorial(n);
    xs.iter().map(|x| &nf / x.sigma()).sum()
}

#[test]
fn rooted_tree_counts_follow_the_recurrence() {
    // a(n+1) = (1/n) sum_{k=1..n} (sum_{d|k} d a(d)) a(n-k+1)
    let mut a = vec![0u64, 1];
    for n in 1..9u64 {
        let mut s = 0;
        for k in 1..=n {
            let c: u64 = (1..=k)
                .filter(|d| k % d == 0)
                .map(|d| d * a[d as usize])
                .sum();
            s += c * a[(n - k + 1) as usize];
        }
        a.push(s / n);
    }
    assert_eq!(&a[1..9], &[1, 1, 2, 4, 9, 20, 48, 115]);
    for n in 1..=9 {
        assert_eq!(trees(n, &one_colour()).len() as u64, a[n], "order {n}");
    }
}

#[test]
fn labelled_counts_single_colour() {
    let c = one_colour();
    for n in 1..=7u64 {
        let k = n as usize;
        assert_eq!(labelled(&trees(k, &c), k), pow(n, n - 1), "trees {n}");
        assert_eq!(
            labelled(&multiaromas(k, &c), k),
            pow(n, n),
            "multiaromas {n}"
        );
        assert_eq!(
            labelled(&aromatic_trees(k, &c), k),
            pow(n, n),
            "aromatic trees {n}"
        );
        assert_eq!(
            labelled(&aromatic_forests(k, &c), k),
            pow(n + 1, n),
            "forests {n}"
        );
        assert_eq!(
            labelled(&aromas(k, &c), k),
            connected_functions(n),
            "aromas {n}"
        );
        assert_eq!(
            labelled(&clumped_forests(k, &c), k),
            labelled_clumped(n),
            "clumped {n}"
        );
    }
}

#[test]
fn labelled_counts_two_colours() {
    let c = two_colours();
    for n in 1..=5u64 {
        let k = n as usize;
        let cols = pow(2, n);
        assert_eq!(labelled(&trees(k, &c), k), &cols * pow(n, n - 1));
        assert_eq!(labelled(&aromas(k, &c), k), &cols * connected_functions(n));
        assert_eq!(labelled(&aromatic_forests(k, &c), k), &cols * pow(n + 1, n));
        assert_eq!(
            labelled(&clumped_forests(k, &c), k),
            &cols * labelled_clumped(n)
        );
    }
}

/// Connected functional graphs on n labelled vertices.
fn connected_functions(n: u64) -> BigUint {
    (1..=n)
        .map(|k| factorial((n - 1) as usize) / factorial((n - k) as usize) * pow(n, n - k))
        .sum()
}

/// Set partitions of [n] into blocks, each block carrying a rooted
/// functional graph: sum over partitions of prod |B|^|B|.
fn labelled_clumped(n: u64) -> BigUint {
    let mut c = vec![big(1)];
    for m in 1..=n {
        let mut s = big(0);
        for k in 1..=m {
            let choose = factorial((m - 1) as usize)
                / (factorial((k - 1) as usize) * factorial((m - k) as usize));
            s += choose * pow(k, k) * &c[(m - k) as usize];
        }
        c.push(s);
    }
    c[n as usize].clone()
}

/// Parent maps on n vertices: `None` marks a root.
fn parent_maps(n: usize) -> Vec<Vec<Option<usize>>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for f in &out {
            for t in (0..n).map(Some).chain([None]) {
                let mut g = f.clone();
                g.push(t);
                next.push(g);
            }
        }
        out = next;
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn conjugate(f: &[Option<usize>], p: &[usize]) -> Vec<Option<usize>> {
    let mut g = vec![None; f.len()];
    for (v, t) in f.iter().enumerate() {
        g[p[v]] = t.map(|t| p[t]);
    }
    g
}

fn on_cycle(f: &[Option<usize>], v: usize) -> bool {
    let mut w = v;
    for _ in 0..f.len() {
        match f[w] {
            Some(u) => w = u,
            None => return false,
        }
        if w == v {
            return true;
        }
    }
    false
}

fn hanging(f: &[Option<usize>], v: usize, cyc: &[bool]) -> RootedTree {
    let kids = (0..f.len())
        .filter(|&u| f[u] == Some(v) && !cyc[u])
        .map(|u| hanging(f, u, cyc))
        .collect();
    RootedTree::new(Color::default(), 0, kids)
}

fn to_forest(f: &[Option<usize>]) -> AromaticForest {
    let cyc: Vec<bool> = (0..f.len()).map(|v| on_cycle(f, v)).collect();
    let trees = (0..f.len())
        .filter(|&v| f[v].is_none())
        .map(|v| hanging(f, v, &cyc))
        .collect();
    let mut seen = vec![false; f.len()];
    let mut aromas = Vec::new();
    for v in 0..f.len() {
        if cyc[v] && !seen[v] {
            let mut ring = Vec::new();
            let mut w = v;
            while !seen[w] {
                seen[w] = true;
                ring.push(hanging(f, w, &cyc));
                w = f[w].unwrap();
            }
            aromas.push(Aroma::new(ring));
        }
    }
    AromaticForest::new(aromas, trees)
}

#[test]
fn isomorphism_classes_and_automorphisms() {
    for n in 1..=5 {
        let perms = permutations(n);
        let mut classes: BTreeMap<Vec<Option<usize>>, Vec<Option<usize>>> = BTreeMap::new();
        for f in parent_maps(n) {
            let canon = perms.iter().map(|p| conjugate(&f, p)).min().unwrap();
            classes.entry(canon).or_insert(f);
        }
        let mut built = BTreeSet::new();
        for f in classes.values() {
            let x = to_forest(f);
            let autos = perms.iter().filter(|p| conjugate(f, p) == *f).count();
            assert_eq!(x.sigma(), big(autos as u64), "{x}");
            built.insert(x);
        }
        let listed: BTreeSet<_> = aromatic_forests(n, &one_colour()).into_iter().collect();
        assert_eq!(built, listed, "order {n}");
    }
}

fn profile(f: &[usize]) -> MultiIndex {
    let mut counts: BTreeMap<i32, u32> = BTreeMap::new();
    for v in 0..f.len() {
        let indeg = f.iter().filter(|&&t| t == v).count() as i32;
        *counts.entry(indeg - 1).or_default() += 1;
    }
    MultiIndex::plain(&counts.into_iter().collect::<Vec<_>>())
}

fn connected(f: &[usize]) -> bool {
    // a functional graph is connected iff it has exactly one cycle
    let mut seen = vec![false; f.len()];
    let mut cycles = 0;
    for v in 0..f.len() {
        let mut w = v;
        for _ in 0..f.len() {
            w = f[w];
        }
        if !seen[w] {
            cycles += 1;
            let mut u = w;
            loop {
                seen[u] = true;
                u = f[u];
                if u == w {
                    break;
                }
            }
        }
    }
    cycles == 1
}

#[test]
fn aroma_preimages_match_labelled_functional_graphs() {
    for n in 1..=5usize {
        let mut tally: BTreeMap<MultiIndex, u64> = BTreeMap::new();
        let mut f = vec![0usize; n];
        loop {
            if connected(&f) {
                *tally.entry(profile(&f)).or_default() += 1;
            }
            let mut i = 0;
            while i < n && f[i] == n - 1 {
                f[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            f[i] += 1;
        }
        let monomials = aroma_monomials(n, &one_colour());
        let got: BTreeMap<MultiIndex, u64> = monomials
            .iter()
            .map(|m| {
                let s: BigUint = aromas_with_profile(m)
                    .iter()
                    .map(|a| factorial(n) / a.sigma())
                    .sum();
                (m.clone(), u64::try_from(s).unwrap())
            })
            .filter(|(_, c)| *c > 0)
            .collect();
        assert_eq!(got, tally, "order {n}");
        for m in &monomials {
            let want = Coeff::from_integer(
                (m.factorial() * big(tally.get(m).copied().unwrap_or(0))).into(),
            ) / from_big(&factorial(n));
            let j = j_aro(&AromaticMI::aroma(m.clone())).unwrap();
            let total: Coeff = j.iter().map(|(_, c)| c.clone()).sum();
            assert_eq!(total, want, "{m}");
        }
    }
}

/// Labelled rooted trees with k_j vertices of fertility j+1:
/// n!/kappa! * (n-1)!/prod (j+1)!^{k_j}.
fn labelled_trees_with_profile(m: &MultiIndex) -> BigUint {
    let n = m.degree();
    let mut out = factorial(n) / m.factorial() * factorial(n - 1);
    for (l, k) in m.letters() {
        out /= factorial((l.j + 1) as usize).pow(k);
    }
    out
}

#[test]
fn tree_preimages_match_the_labelled_count() {
    for n in 1..=7usize {
        for m in tree_monomials(n, &one_colour()) {
            let s: BigUint = trees_with_profile(&m)
                .iter()
                .map(|t| factorial(n) / t.sigma())
                .sum();
            assert_eq!(s, labelled_trees_with_profile(&m), "{m}");
            let j = j_aro(&AromaticMI::root(m.clone())).unwrap();
            let total: Coeff = j.iter().map(|(_, c)| c.clone()).sum();
            assert_eq!(
                total * from_big(&factorial(n)),
                from_big(&(m.factorial() * &s)),
                "{m}"
            );
        }
    }
}

/// Integer partitions of n.
fn partitions(n: usize) -> usize {
    let mut p = vec![0usize; n + 1];
    p[0] = 1;
    for k in 1..=n {
        for m in k..=n {
            p[m] += p[m - k];
        }
    }
    p[n]
}

#[test]
fn monomial_counts_are_partition_numbers() {
    // sum (j+1) k_j = n for aromas and n-1 for trees, over n letters
    for n in 1..=8 {
        assert_eq!(
            aroma_monomials(n, &one_colour()).len(),
            partitions(n),
            "aroma {n}"
        );
        assert_eq!(
            tree_monomials(n, &one_colour()).len(),
            partitions(n - 1),
            "tree {n}"
        );
    }
}
