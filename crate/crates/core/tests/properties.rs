use std::sync::Arc;

use proptest::prelude::*;

use gspec::corpus::builtin;
use gspec::equations::{evaluate_raw, parse_system, solve, EquationSystem, GWord, SolveOptions, Syllable};
use gspec::GGroup;

const TARGETS: [&str; 4] = ["S3/S3", "Q8/1", "S4/S4", "A5xZ2/A5"];

fn target(i: usize) -> Arc<GGroup> {
    builtin(TARGETS[i % TARGETS.len()]).unwrap().ggroup
}

fn raw_word(nvars: usize, base_order: usize) -> impl Strategy<Value = Vec<Syllable>> {
    let syllable = prop_oneof![
        (0..base_order).prop_map(Syllable::Const),
        (0..nvars, -3i64..=3).prop_map(|(index, exp)| Syllable::Var { index, exp }),
    ];
    prop::collection::vec(syllable, 0..12)
}

fn case() -> impl Strategy<Value = (usize, Vec<Syllable>, Vec<Syllable>, Vec<usize>)> {
    (0..TARGETS.len()).prop_flat_map(|t| {
        let gg = target(t);
        let (b, n) = (gg.base().order().max(1), gg.ambient().order());
        (Just(t), raw_word(3, b), raw_word(3, b), prop::collection::vec(0..n, 3))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reduction_preserves_value((t, raw, _, xs) in case()) {
        let gg = target(t);
        let w = GWord::reduce(raw.clone(), 3, gg.base());
        prop_assert_eq!(w.evaluate(&gg, &xs), evaluate_raw(&raw, &gg, &xs));
        prop_assert_eq!(GWord::reduce(w.syllables().to_vec(), 3, gg.base()), w);
    }

    #[test]
    fn word_operations_evaluate_pointwise((t, a, b, xs) in case()) {
        let gg = target(t);
        let (g, h) = (gg.base(), gg.ambient());
        let (u, v) = (GWord::reduce(a, 3, g), GWord::reduce(b, 3, g));
        let (eu, ev) = (u.evaluate(&gg, &xs), v.evaluate(&gg, &xs));
        prop_assert_eq!(u.mul(&v, g).evaluate(&gg, &xs), h.mul(eu, ev));
        prop_assert_eq!(u.inverse(g).evaluate(&gg, &xs), h.inv(eu));
        prop_assert!(u.mul(&u.inverse(g), g).is_empty());
        prop_assert_eq!(u.pow(-2, g).evaluate(&gg, &xs), h.pow(eu, -2));
        let uv = GWord::commutator(&u, &v, g).evaluate(&gg, &xs);
        let vu = GWord::commutator(&v, &u, g).evaluate(&gg, &xs);
        prop_assert_eq!(uv, h.inv(vu));
        prop_assert_eq!(u.compile(&gg).eval(h, &xs), eu);
    }

    #[test]
    fn dsl_round_trip((t, a, b, _) in case()) {
        let gg = target(t);
        let g = gg.base();
        let sys = EquationSystem::new(g.clone(), 3)
            .with_equalities([GWord::reduce(a, 3, g)])
            .with_inequalities([GWord::reduce(b, 3, g)]);
        let text = sys.to_dsl(&gg);
        let back = parse_system(&text, &gg).unwrap();
        prop_assert_eq!(back.equalities, sys.equalities);
        prop_assert_eq!(back.inequalities, sys.inequalities);
    }

    #[test]
    fn symmetry_pruning_is_invisible((t, a, _, _) in case()) {
        let gg = target(t);
        if gg.ambient().order() > 24 {
            return Ok(());
        }
        let g = gg.base();
        let w = GWord::reduce(a, 3, g).with_nvars(2);
        let w = if w.syllables().iter().any(|s| matches!(s, Syllable::Var { index: 2, .. })) {
            GWord::commutator(&GWord::var(0, 2), &GWord::var(1, 2), g)
        } else {
            w
        };
        let sys = EquationSystem::new(g.clone(), 2).with_equalities([w]);
        let opts = SolveOptions::for_target(&gg);
        prop_assert_eq!(solve(&sys, &gg, opts).unwrap(), solve(&sys, &gg, opts.without_symmetry()).unwrap());
    }

    #[test]
    fn tables_are_groups(t in 0..TARGETS.len(), x in 0usize..240, y in 0usize..240, z in 0usize..240) {
        let h = target(t).ambient().clone();
        let n = h.order();
        let (x, y, z) = (x % n, y % n, z % n);
        prop_assert_eq!(h.mul(h.mul(x, y), z), h.mul(x, h.mul(y, z)));
        prop_assert_eq!(h.mul(x, h.inv(x)), 0);
        prop_assert_eq!(h.mul(0, x), x);
        prop_assert_eq!(h.pow(x, h.element_order(x) as i64), 0);
    }
}
