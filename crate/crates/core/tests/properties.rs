use ag_core::enumerate::{self, SearchConstraints};
use ag_core::fuzzy::{self, FuzzySubset};
use ag_core::ideals::{self, IdealKind, Notion};
use ag_core::{known, witness, ElementSubset, Grade, Groupoid, KParam};
use proptest::prelude::*;

fn corpus(max: usize) -> Vec<Groupoid> {
    (1..=max)
        .flat_map(|n| enumerate::enumerate_ag(SearchConstraints::all(n).up_to_iso()).unwrap())
        .collect()
}

#[test]
fn medial_follows_from_left_invertive() {
    for g in corpus(4) {
        let laws = g.check_identity_laws();
        assert!(laws.left_invertive.holds);
        assert!(laws.medial.holds, "{:?}", g.rows());
        if g.is_unitary() {
            assert!(
                laws.paramedial.holds && laws.law4.holds && laws.law5.holds,
                "{:?}",
                g.rows()
            );
        }
    }
}

#[test]
fn unitary_right_ideals_are_left_ideals() {
    for g in corpus(4).into_iter().filter(Groupoid::is_unitary) {
        for a in ElementSubset::all_nonempty(g.order()) {
            if ideals::is_ideal(&g, &a, IdealKind::Right).unwrap().holds {
                assert!(ideals::is_ideal(&g, &a, IdealKind::Left).unwrap().holds);
            }
        }
    }
}

#[test]
fn notion_containments() {
    use IdealKind::*;
    let implied = [
        (TwoSided, Left),
        (TwoSided, Right),
        (Bi, GeneralizedBi),
        (Bi, Subgroupoid),
        (Interior, GeneralizedInterior),
        (TwoSided, Interior),
        (Left, Quasi),
        (Right, Quasi),
    ];
    for g in corpus(3).into_iter().chain([known::example3()]) {
        for a in ElementSubset::all_nonempty(g.order()) {
            for (p, q) in implied {
                if ideals::is_ideal(&g, &a, p).unwrap().holds {
                    assert!(
                        ideals::is_ideal(&g, &a, q).unwrap().holds,
                        "{p} ⇒ {q} on {a:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn fuzzy_left_ideals_are_fuzzy_quasi_ideals() {
    let grid = fuzzy::grade_grid(6);
    let k = KParam::ratio(1, 3).unwrap();
    for g in corpus(3) {
        for i in 0..200 {
            let f = fuzzy::random_fuzzy_subset(g.order(), &grid, 5, i);
            if fuzzy::is_fuzzy_ideal(&g, &f, k, IdealKind::Left)
                .unwrap()
                .holds
            {
                assert!(
                    fuzzy::is_fuzzy_ideal(&g, &f, k, IdealKind::Quasi)
                        .unwrap()
                        .holds
                );
            }
        }
    }
}

#[test]
fn samplers_produce_members_for_every_k() {
    let g = known::example3();
    let grid = fuzzy::grade_grid(8);
    for notion in Notion::ALL {
        let fs = fuzzy::generate_fuzzy_ideals(&g, notion, &grid, 50, 3).unwrap();
        assert_eq!(
            fs,
            fuzzy::generate_fuzzy_ideals(&g, notion, &grid, 50, 3).unwrap()
        );
        for f in &fs {
            for k in ["0", "1/2", "9/10"] {
                let k: KParam = k.parse().unwrap();
                assert!(
                    fuzzy::is_fuzzy_ideal(&g, f, k, notion).unwrap().holds,
                    "{notion}"
                );
            }
        }
    }
}

#[test]
fn group_construction_is_intra_regular() {
    for n in 1..=6 {
        let g = Groupoid::from_abelian_group(&known::cyclic_group(n)).unwrap();
        assert!(g.is_left_invertive() && g.is_unitary());
        assert!(witness::is_intra_regular(&g).holds);
    }
}

fn small_table() -> impl Strategy<Value = Groupoid> {
    (1usize..=3).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n * n)
            .prop_map(move |cells| Groupoid::from_fn(n, |a, b| cells[a * n + b]).unwrap())
    })
}

fn subset_pair(n: usize) -> impl Strategy<Value = (ElementSubset, ElementSubset)> {
    let m = (1u64 << n) - 1;
    (0..=m, 0..=m).prop_map(move |(a, b)| {
        (
            ElementSubset::from_bits(n, a).unwrap(),
            ElementSubset::from_bits(n, a | b).unwrap(),
        )
    })
}

proptest! {
    #[test]
    fn left_invertive_implies_medial(g in small_table()) {
        let laws = g.check_identity_laws();
        prop_assert!(!laws.left_invertive.holds || laws.medial.holds);
    }

    #[test]
    fn subset_product_is_monotone(
        g in small_table(),
        seed in any::<u64>(),
    ) {
        let n = g.order();
        let m = (1u64 << n) - 1;
        let pick = |s: u64| ElementSubset::from_bits(n, s & m).unwrap();
        let (a, b) = (pick(seed), pick(seed >> 8));
        let (a2, b2) = (a.union(&pick(seed >> 16)), b.union(&pick(seed >> 24)));
        let small = g.subset_product(&a, &b).unwrap();
        let big = g.subset_product(&a2, &b2).unwrap();
        prop_assert!(small.is_subset(&big));
    }

    #[test]
    fn canonical_form_is_invariant(g in small_table(), perm_seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..n).rev() {
            perm.swap(i, (s % (i as u64 + 1)) as usize);
            s /= 7;
        }
        let h = g.permuted(&perm);
        prop_assert!(enumerate::canonical_form(&g).unwrap().same_table(&enumerate::canonical_form(&h).unwrap()));
        prop_assert!(enumerate::are_isomorphic(&g, &h).unwrap().is_some());
    }

    #[test]
    fn subset_ops_agree_with_sets((a, b) in subset_pair(5)) {
        prop_assert!(a.is_subset(&b));
        prop_assert_eq!(a.union(&b), b);
        prop_assert_eq!(a.intersection(&b), a);
        prop_assert!(b.difference(&a).intersection(&a).is_empty());
    }

    #[test]
    fn meet_k_is_below_both(
        xs in proptest::collection::vec(0i64..=8, 4),
        ys in proptest::collection::vec(0i64..=8, 4),
        kn in 0i64..8,
    ) {
        let f = FuzzySubset::new(xs.iter().map(|&x| Grade::ratio(x, 8).unwrap()).collect());
        let g = FuzzySubset::new(ys.iter().map(|&y| Grade::ratio(y, 8).unwrap()).collect());
        let k = KParam::ratio(kn, 8).unwrap();
        let m = fuzzy::meet_k(&f, &g, k).unwrap();
        prop_assert!(m.le(&f) && m.le(&g));
        prop_assert!(m.le(&FuzzySubset::constant(4, k.half_grade())));
        let j = fuzzy::join_k(&f, &g, k).unwrap();
        prop_assert!(f.le(&j) && g.le(&j));
    }
}
