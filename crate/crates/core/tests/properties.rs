use angulated::artheory::{ar_angle_in, is_ar_angle};
use angulated::linalg::Q;
use angulated::wide::{enumerate_wide, is_wide, is_wide_oracle};
use angulated::{
    check_hom_exactness, compose, direct_sum, extend, hom_dim, min_angle, FamilyParams, IndecObject, Morphism,
    SubcatSpec, SumObject,
};
use num_bigint::BigInt;
use proptest::prelude::*;

const TRIPLES: [(i64, i64, i64); 6] = [(2, 2, 3), (2, 3, 4), (2, 4, 5), (4, 2, 5), (4, 4, 9), (6, 2, 7)];

fn params() -> impl Strategy<Value = FamilyParams> {
    prop::sample::select(TRIPLES.to_vec()).prop_map(|(d, l, m)| FamilyParams::new(d, l, m).unwrap())
}

fn sum_object(max: usize) -> impl Strategy<Value = SumObject> {
    prop::collection::vec(-12i64..24, 1..=max).prop_map(SumObject::from_positions)
}

/// A morphism with small integer entries on its Hom support.
fn morphism_between(p: FamilyParams, source: SumObject, target: SumObject) -> impl Strategy<Value = Morphism> {
    let support = Morphism::support(&p, &source, &target);
    prop::collection::vec(-2i64..=2, support.len()).prop_map(move |vals| {
        let mut rows = vec![vec![Q::from_integer(BigInt::from(0)); source.len()]; target.len()];
        for (&(r, c), v) in support.iter().zip(vals) {
            rows[r][c] = Q::from_integer(BigInt::from(v));
        }
        Morphism::new(&p, source.clone(), target.clone(), rows).unwrap()
    })
}

fn morphism(max: usize) -> impl Strategy<Value = Morphism> {
    (params(), sum_object(max), sum_object(max)).prop_flat_map(|(p, s, t)| morphism_between(p, s, t))
}

/// Three composable morphisms `h: A → B`, `g: B → C`, `f: C → D`.
fn triple() -> impl Strategy<Value = (Morphism, Morphism, Morphism)> {
    (params(), sum_object(2), sum_object(2), sum_object(2), sum_object(2)).prop_flat_map(|(p, a, b, c, d)| {
        (morphism_between(p, a, b.clone()), morphism_between(p, b, c.clone()), morphism_between(p, c, d))
    })
}

fn admissible() -> impl Strategy<Value = Morphism> {
    params()
        .prop_flat_map(|p| (Just(p), 1..=p.period(), 1..p.l()))
        .prop_map(|(p, x, delta)| Morphism::basis(&p, IndecObject::at(x), IndecObject::at(x + delta)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hom_dim_is_shift_equivariant(p in params(), x in -30i64..30, y in -30i64..30, r in -3i64..3) {
        let (a, b) = (IndecObject::at(x), IndecObject::at(y));
        prop_assert_eq!(hom_dim(&p, a, b), hom_dim(&p, a.shifted(&p, r), b.shifted(&p, r)));
    }

    #[test]
    fn composition_is_associative((h, g, f) in triple()) {
        let left = compose(&compose(&f, &g).unwrap(), &h).unwrap();
        let right = compose(&f, &compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn composition_commutes_with_shift((h, g, _f) in triple(), r in -2i64..3) {
        let gh = compose(&g, &h).unwrap();
        prop_assert_eq!(gh.shifted(r), compose(&g.shifted(r), &h.shifted(r)).unwrap());
    }

    #[test]
    fn radical_is_an_ideal((h, g, f) in triple()) {
        if g.is_radical() {
            prop_assert!(compose(&g, &h).unwrap().is_radical());
            prop_assert!(compose(&f, &g).unwrap().is_radical());
        }
    }

    #[test]
    fn iso_iff_split_epi_and_split_mono(f in morphism(3)) {
        prop_assert_eq!(f.is_iso(), f.is_split_epi() && f.is_split_mono());
        if f.is_radical() && !f.source().is_zero() {
            prop_assert!(!f.is_split_mono());
        }
    }

    #[test]
    fn lift_solves_the_factorisation((h, g, _f) in triple()) {
        let gh = compose(&g, &h).unwrap();
        let l = g.lift(&gh).expect("g∘h factors through g");
        prop_assert_eq!(compose(&g, &l).unwrap(), gh.clone());
        let c = h.colift(&gh).expect("g∘h factors through h");
        prop_assert_eq!(compose(&c, &h).unwrap(), gh);
    }

    #[test]
    fn minimal_angles_have_the_expected_shape(mu in admissible()) {
        let p = *mu.params();
        let delta = mu.target().summands()[0].pos - mu.source().summands()[0].pos;
        let a = min_angle(&mu).unwrap();
        let pos: Vec<i64> = a.objects().iter().map(|x| x.as_indec().unwrap().pos).collect();
        prop_assert_eq!(pos.len(), p.slots());
        for (k, w) in pos.windows(2).enumerate() {
            prop_assert_eq!(w[1] - w[0], if k % 2 == 0 { delta } else { p.l() - delta });
        }
        prop_assert_eq!(pos[pos.len() - 1] - pos[0], p.m() - 1 + delta);
        prop_assert!(a.maps()[1..p.slots() - 2].iter().all(Morphism::is_radical));
        prop_assert!(a.is_complex());
        prop_assert!(check_hom_exactness(&a).passed());
        prop_assert_eq!(a.rotate(p.slots() as i64), a.shifted(1));
        prop_assert_eq!(a.rotate_left().rotate_right(), a.clone());
        prop_assert_eq!(extend(a.connecting()).unwrap(), a);
    }

    #[test]
    fn extend_realises_any_connecting_map(delta in morphism(3)) {
        let a = extend(&delta).unwrap();
        prop_assert_eq!(a.connecting(), &delta);
        prop_assert!(a.is_complex());
        prop_assert!(check_hom_exactness(&a).passed());
    }

    #[test]
    fn direct_sums_of_angles_are_exact(mu in admissible(), x in 1i64..12, delta in 0i64..2) {
        let p = *mu.params();
        let nu = Morphism::basis(&p, IndecObject::at(x), IndecObject::at(x + delta)).unwrap();
        let s = direct_sum(&min_angle(&mu).unwrap(), &min_angle(&nu).unwrap()).unwrap();
        prop_assert!(check_hom_exactness(&s).passed());
    }

    #[test]
    fn classification_matches_the_oracle(p in params(), mask in any::<u64>()) {
        let s = SubcatSpec::new(&p, (1..=p.period()).filter(|i| mask >> (i - 1) & 1 == 1)).unwrap();
        prop_assert_eq!(is_wide(&p, &s), is_wide_oracle(&p, &s));
    }

    #[test]
    fn subcategory_ar_angles_are_ar(p in params(), pick in any::<prop::sample::Index>(), x in 1i64..40) {
        let specs: Vec<SubcatSpec> = enumerate_wide(&p).unwrap().into_iter().filter(|s| !s.is_empty()).collect();
        let s = pick.get(&specs);
        let members: Vec<i64> = s.indices().collect();
        let x = IndecObject::at(members[(x as usize) % members.len()]);
        let a = ar_angle_in(&p, s, x).unwrap();
        prop_assert!(is_ar_angle(&p, s, &a).unwrap());
    }
}
