use super::monomial::{AromaticMI, AromaticMonomial, ClumpedMI, Letter, MultiIndex};
use crate::color::ColorSet;
use crate::forests::enumerate::graded_multisets;

/// Monomials of the given degree and weight over the colour set.
pub fn multi_indices(degree: usize, weight: i64, colors: &ColorSet) -> Vec<MultiIndex> {
    if degree == 0 {
        return if weight == 0 {
            vec![MultiIndex::new()]
        } else {
            Vec::new()
        };
    }
    // a letter x_j carries j+1 >= 0 units of "fertility"; the total is weight + degree
    let total = weight + degree as i64;
    if total < 0 {
        return Vec::new();
    }
    let mut letters = Vec::new();
    for j in -1..total {
        for c in colors.colors() {
            letters.push(Letter::new(j as i32, c.clone()));
        }
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(
        letters: &[Letter],
        start: usize,
        left: usize,
        fert: i64,
        cur: &mut Vec<usize>,
        out: &mut Vec<MultiIndex>,
    ) {
        if left == 0 {
            if fert == 0 {
                out.push(MultiIndex::from_letters(
                    cur.iter().map(|&i| (letters[i].clone(), 1)),
                ));
            }
            return;
        }
        for i in start..letters.len() {
            let f = letters[i].j as i64 + 1;
            if f <= fert {
                cur.push(i);
                rec(letters, i, left - 1, fert - f, cur, out);
                cur.pop();
            }
        }
    }
    rec(&letters, 0, degree, total, &mut cur, &mut out);
    out.sort();
    out
}

pub fn aroma_monomials(degree: usize, colors: &ColorSet) -> Vec<MultiIndex> {
    if degree == 0 {
        return Vec::new();
    }
    multi_indices(degree, 0, colors)
}

pub fn tree_monomials(degree: usize, colors: &ColorSet) -> Vec<MultiIndex> {
    multi_indices(degree, -1, colors)
}

pub fn aromatic_mis(order: usize, colors: &ColorSet) -> Vec<AromaticMI> {
    let a: Vec<Vec<MultiIndex>> = (0..=order).map(|n| aroma_monomials(n, colors)).collect();
    let t: Vec<Vec<MultiIndex>> = (0..=order).map(|n| tree_monomials(n, colors)).collect();
    let mut out = Vec::new();
    for k in 0..=order {
        let aro = graded_multisets(k, &a);
        let roots = graded_multisets(order - k, &t);
        for x in &aro {
            for y in &roots {
                out.push(AromaticMI::new(x.clone(), y.clone()));
            }
        }
    }
    out.sort();
    out
}

pub fn aromatic_monomials_by_order(max: usize, colors: &ColorSet) -> Vec<Vec<AromaticMonomial>> {
    let a: Vec<Vec<MultiIndex>> = (0..=max).map(|n| aroma_monomials(n, colors)).collect();
    (0..=max)
        .map(|n| {
            let mut out = Vec::new();
            for k in 0..n {
                for x in graded_multisets(k, &a) {
                    for r in tree_monomials(n - k, colors) {
                        out.push(AromaticMonomial::new(x.clone(), r));
                    }
                }
            }
            out.sort();
            out
        })
        .collect()
}

pub fn aromatic_monomials(order: usize, colors: &ColorSet) -> Vec<AromaticMonomial> {
    aromatic_monomials_by_order(order, colors).swap_remove(order)
}

pub fn clumped_mis(order: usize, colors: &ColorSet) -> Vec<ClumpedMI> {
    let by = aromatic_monomials_by_order(order, colors);
    let mut out: Vec<ClumpedMI> = graded_multisets(order, &by)
        .into_iter()
        .map(ClumpedMI::new)
        .collect();
    out.sort();
    out
}
