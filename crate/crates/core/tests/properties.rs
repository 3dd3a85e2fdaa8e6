use std::sync::Arc;

use aromatic_core::algebra::{
    coassociativity_defect, deshuffle, pairing, ratio, Adjoint, Coeff, Coproduct, LinComb,
    Multiset, Tensor,
};
use aromatic_core::embedding::j_aro;
use aromatic_core::forests::enumerate::{aromatic_forests, aromatic_trees, clumped_forests};
use aromatic_core::forests::{
    delta, delta_bar, graft, graft_lin, psi, psi_star, AromaticForest, AromaticTree, BckAro,
    ClumpedForest, RootedTree,
};
use aromatic_core::multiindices::enumerate::{aromatic_mis, clumped_mis, multi_indices};
use aromatic_core::multiindices::{
    partial, partial_bar, phi, phi_star, AromaticMI, ClumpedMI, LotAro, MultiIndex,
};
use aromatic_core::text::{parse_colored, parse_lincomb, render_lines, Parse};
use aromatic_core::{Color, ColorSet};
use proptest::prelude::*;

fn plain() -> ColorSet {
    ColorSet::new(vec![Color::default()])
}

/// Uniform choice from the union of the given slices.
fn pick<B: Clone + std::fmt::Debug + 'static>(slices: Vec<Vec<B>>) -> impl Strategy<Value = B> {
    let all: Arc<Vec<B>> = Arc::new(slices.into_iter().flatten().collect());
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn forests(lo: usize, hi: usize, colors: &ColorSet) -> impl Strategy<Value = AromaticForest> {
    pick((lo..=hi).map(|n| aromatic_forests(n, colors)).collect())
}

fn coeff() -> impl Strategy<Value = (i64, i64)> {
    (-6i64..=6, 1i64..=4)
}

fn combination() -> impl Strategy<Value = LinComb<AromaticForest>> {
    prop::collection::vec((forests(0, 4, &plain()), coeff()), 0..6).prop_map(|terms| {
        let mut x = LinComb::zero();
        for (f, (a, b)) in terms {
            x.add_term(f, ratio(a, b));
        }
        x
    })
}

fn multi_index() -> impl Strategy<Value = MultiIndex> {
    let c = plain();
    pick(
        (1..=4)
            .flat_map(|n| (-1..=2).map(move |w| (n, w)))
            .map(|(n, w)| multi_indices(n, w, &c))
            .collect(),
    )
}

fn roundtrip<T: Parse + std::fmt::Display + PartialEq + std::fmt::Debug>(x: &T, colors: &ColorSet) {
    let again: T = parse_colored(&x.to_string(), colors).unwrap();
    assert_eq!(&again, x);
}

proptest! {
    #[test]
    fn pairing_is_symmetric_and_bilinear(x in combination(), y in combination(), z in combination(), (a, b) in coeff()) {
        prop_assert_eq!(pairing(&x, &y), pairing(&y, &x));
        let c = ratio(a, b);
        let mut xz = x.scale(&c);
        xz += &z;
        prop_assert_eq!(pairing(&xz, &y), c * pairing(&x, &y) + pairing(&z, &y));
    }

    #[test]
    fn combinations_round_trip_through_text(x in combination()) {
        let text = render_lines(&x);
        let again: LinComb<AromaticForest> = parse_lincomb(&text).unwrap();
        prop_assert_eq!(again, x);
    }

    #[test]
    fn coloured_forests_round_trip(x in forests(1, 3, &ColorSet::parse("r,g").unwrap())) {
        roundtrip(&x, &ColorSet::parse("r,g").unwrap());
    }

    #[test]
    fn monomial_bases_round_trip(
        m in pick((1..=4).map(|n| aromatic_mis(n, &plain())).collect()),
        c in pick((1..=4).map(|n| clumped_mis(n, &plain())).collect()),
        f in pick((1..=4).map(|n| clumped_forests(n, &plain())).collect()),
    ) {
        roundtrip::<AromaticMI>(&m, &plain());
        roundtrip::<ClumpedMI>(&c, &plain());
        roundtrip::<ClumpedForest>(&f, &plain());
    }

    #[test]
    fn derivations_shift_the_weight(m in multi_index()) {
        for (x, _) in partial(&m).iter() {
            prop_assert_eq!(x.weight(), m.weight() + 1);
            prop_assert_eq!(x.degree(), m.degree());
        }
        for (x, _) in partial_bar(&m).iter() {
            prop_assert_eq!(x.weight(), m.weight() - 1);
            prop_assert_eq!(x.degree(), m.degree());
        }
    }

    #[test]
    fn free_edges_grade_delta(x in forests(1, 5, &plain())) {
        for (y, _) in delta(&x).iter() {
            prop_assert_eq!(y.total_free_edges(), x.total_free_edges() + 1);
            prop_assert_eq!(y.order(), x.order());
            prop_assert!(delta_bar(y).coeff(&x) > Coeff::from_integer(0.into()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bck_coassociative_beyond_the_default_bound(x in forests(6, 7, &plain())) {
        prop_assert!(coassociativity_defect(&BckAro, &x).is_none(), "{}", x);
    }

    #[test]
    fn lot_coassociative_beyond_the_default_bound(x in pick(vec![aromatic_mis(6, &plain())])) {
        prop_assert!(coassociativity_defect(&LotAro, &x).is_none(), "{}", x);
    }

    #[test]
    fn embedding_at_order_six(x in pick(vec![aromatic_mis(6, &plain())])) {
        let j = j_aro(&x).unwrap();
        let lhs = j.flat_map(|f| BckAro.coproduct(f));
        let rhs = LotAro.coproduct(&x).flat_map(|t| {
            let l = j_aro(&t.left).unwrap();
            let r = j_aro(&t.right).unwrap();
            let mut out = LinComb::zero();
            for (a, c) in l.iter() {
                for (b, d) in r.iter() {
                    out.add_term(Tensor::new(a.clone(), b.clone()), c * d);
                }
            }
            out
        });
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn deshuffle_coassociative_and_cocommutative() {
    type M = Multiset<RootedTree>;
    type T3 = Tensor<Tensor<M, M>, M>;
    let t3 = |a: &M, b: &M, c: &M| Tensor::new(Tensor::new(a.clone(), b.clone()), c.clone());
    for n in 0..=5 {
        for f in aromatic_forests(n, &plain())
            .into_iter()
            .filter(|f| f.aromas.is_empty())
        {
            let m = M::new(f.trees.clone());
            let d = deshuffle(&m);
            let flipped = d.map_basis(|t| Tensor::new(t.right.clone(), t.left.clone()));
            assert_eq!(d, flipped, "{m}");
            let mut left: LinComb<T3> = LinComb::zero();
            let mut right: LinComb<T3> = LinComb::zero();
            for (t, c) in d.iter() {
                for (u, e) in deshuffle(&t.left).iter() {
                    left.add_term(t3(&u.left, &u.right, &t.right), c * e);
                }
                for (u, e) in deshuffle(&t.right).iter() {
                    right.add_term(t3(&t.left, &u.left, &u.right), c * e);
                }
            }
            assert_eq!(left, right, "{m}");
        }
    }
}

#[test]
fn adjoint_of_adjoint_is_the_map() {
    let c = plain();
    for n in 1..=5 {
        let fs = aromatic_forests(n, &c);
        let cs = clumped_forests(n, &c);
        let star: Adjoint<AromaticForest, ClumpedForest> = Adjoint::new(&fs, psi_star);
        let back: Adjoint<ClumpedForest, AromaticForest> =
            Adjoint::new(&cs, |y| star.apply(y).unwrap());
        for x in &fs {
            assert_eq!(back.apply(x).unwrap(), psi_star(x), "{x}");
        }
        for y in &cs {
            assert_eq!(star.apply(y).unwrap(), LinComb::basis(psi(y)), "{y}");
        }
        let ms = aromatic_mis(n, &c);
        let cms = clumped_mis(n, &c);
        let star: Adjoint<AromaticMI, ClumpedMI> = Adjoint::new(&ms, phi_star);
        for y in &cms {
            assert_eq!(star.apply(y).unwrap(), LinComb::basis(phi(y)), "{y}");
        }
    }
}

#[test]
fn pre_lie_on_triples_up_to_order_five() {
    let c = plain();
    let by: Vec<_> = (0..=3).map(|n| aromatic_trees(n, &c)).collect();
    for a in 1..=3 {
        for b in 1..=5 - a - 1 {
            for k in 1..=5 - a - b {
                for x in &by[a] {
                    for y in &by[b] {
                        for z in &by[k] {
                            let assoc = |x: &AromaticTree, y: &AromaticTree| {
                                graft_lin(&LinComb::basis(x.clone()), &graft(y, z))
                                    - graft_lin(&graft(x, y), &LinComb::basis(z.clone()))
                            };
                            let l = assoc(x, y);
                            let r = assoc(y, x);
                            assert_eq!(l, r, "{x} {y} {z}");
                        }
                    }
                }
            }
        }
    }
}
