//! Universally quantified properties, checked over enumerated algebras and
//! randomized inputs.

use effalg_core::algebra::{builtin, product_ea, Algebra, Elem, FiniteEa, FiniteGea};
use effalg_core::catlaws::{
    algebra_from_ea, em_algebra_check, em_structures, verify_counit_naturality, verify_monad_laws,
    verify_triangles, verify_unit_naturality,
};
use effalg_core::enumerate::{canonical_code, enumerate_eas, enumerate_geas, is_isomorphic, Mode};
use effalg_core::morphisms::{
    compose, count_morphisms, enumerate_morphisms, product_projection, transpose_to_ea,
    transpose_to_gea, Kind, Morphism,
};
use effalg_core::states::{extend_state, grid_additive_maps, AdditiveMap, State};
use effalg_core::{counit, eta, iso_w, unitize, unitize_morphism};
use proptest::prelude::*;

fn geas_upto(n: usize) -> Vec<FiniteGea> {
    (1..=n)
        .flat_map(|k| enumerate_geas(k, Mode::Labeled).unwrap())
        .collect()
}

fn eas_upto(n: usize) -> Vec<FiniteEa> {
    (1..=n)
        .flat_map(|k| enumerate_eas(k, Mode::Labeled).unwrap())
        .collect()
}

#[test]
fn order_and_ominus_properties() {
    for g in geas_upto(5) {
        let order = g.derive_order();
        assert!(order.is_partial_order());
        assert!(order.is_bottom(g.zero()));
        for a in g.elements() {
            for b in g.elements() {
                let d = g.ominus(a, b);
                assert_eq!(d.is_some(), order.leq(b, a));
                if let Some(d) = d {
                    assert_eq!(g.sum(b, d), Some(a));
                }
            }
        }
    }
}

#[test]
fn effect_algebra_properties() {
    for e in eas_upto(5) {
        assert!(e.validate().is_valid());
        assert!(e.derive_order().is_top(e.top()));
        for a in e.elements() {
            let c = e.complement(a).unwrap();
            assert_eq!(e.complement(c), Some(a));
        }
    }
    let small = eas_upto(3);
    for e1 in &small {
        for e2 in &small {
            assert!(product_ea(e1, e2).validate().is_valid());
        }
    }
}

#[test]
fn unitization_properties() {
    for p in geas_upto(5) {
        let fp = unitize(&p).unwrap();
        let n = p.len();
        assert_eq!(fp.len(), 2 * n);
        assert!(fp.validate().is_valid());
        for x in 0..n {
            assert_eq!(fp.sum(Elem(x), Elem(n + x)), Some(fp.top()));
            for y in 0..n {
                assert_eq!(fp.sum(Elem(n + x), Elem(n + y)), None);
                // The unstarred part is a copy of P, order included.
                assert_eq!(fp.sum(Elem(x), Elem(y)), p.sum(Elem(x), Elem(y)));
                assert_eq!(
                    fp.derive_order().leq(Elem(x), Elem(y)),
                    p.derive_order().leq(Elem(x), Elem(y))
                );
            }
        }
    }
}

#[test]
fn functor_laws_and_naturality() {
    let geas = geas_upto(3);
    for p in &geas {
        let id = Morphism::identity(&p.clone().into());
        assert_eq!(
            unitize_morphism(&id).unwrap(),
            Morphism::identity(&unitize(p).unwrap().into())
        );
        for q in &geas {
            for f in enumerate_morphisms(&p.clone().into(), &q.clone().into(), Kind::Gea).unwrap() {
                let ff = unitize_morphism(&f).unwrap();
                assert!(ff.is_valid());
                assert!(verify_unit_naturality(&f).unwrap().is_valid());
                for r in &geas {
                    for g in enumerate_morphisms(&q.clone().into(), &r.clone().into(), Kind::Gea)
                        .unwrap()
                    {
                        let lhs = unitize_morphism(&compose(&g, &f).unwrap()).unwrap();
                        let rhs = compose(&unitize_morphism(&g).unwrap(), &ff).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

#[test]
fn counit_properties() {
    let eas = eas_upto(4);
    for e in &eas {
        let eps = counit(e).unwrap();
        assert!(eps.is_valid());
        assert!(eps.is_surjective());
        assert!(eps.is_full());
        for e2 in &eas {
            for g in enumerate_morphisms(&e.clone().into(), &e2.clone().into(), Kind::Ea).unwrap() {
                assert!(verify_counit_naturality(&g).unwrap().is_valid());
            }
        }
    }
}

#[test]
fn triangles_for_all_small_objects() {
    let geas = geas_upto(5);
    let eas = eas_upto(5);
    let t = builtin::two();
    for p in &geas {
        assert!(verify_triangles(p, &t).unwrap().is_valid());
    }
    for e in &eas {
        assert!(verify_triangles(&builtin::trivial(), e).unwrap().is_valid());
    }
}

#[test]
fn w_is_an_isomorphism() {
    for e in eas_upto(5) {
        let w = iso_w(&e).unwrap();
        assert!(w.is_valid());
        assert!(w.is_bijective());
        assert!(w.is_full());
        let pr = product_projection(&e, &builtin::two());
        assert_eq!(compose(&pr, &w).unwrap(), counit(&e).unwrap());
    }
}

#[test]
fn hom_bijection_and_round_trips() {
    for p in geas_upto(3) {
        let fp: Algebra = unitize(&p).unwrap().into();
        for e in eas_upto(4) {
            let ue: Algebra = e.base().clone().into();
            let gea_side = enumerate_morphisms(&p.clone().into(), &ue, Kind::Gea).unwrap();
            let ea_side = enumerate_morphisms(&fp, &e.clone().into(), Kind::Ea).unwrap();
            assert_eq!(gea_side.len(), ea_side.len());
            for g in &gea_side {
                let hat = transpose_to_ea(g, &e).unwrap();
                assert!(ea_side.contains(&hat));
                assert_eq!(&transpose_to_gea(&p, &hat).unwrap(), g);
            }
            for f in &ea_side {
                let flat = transpose_to_gea(&p, f).unwrap();
                assert!(gea_side.contains(&flat));
                assert_eq!(&transpose_to_ea(&flat, &e).unwrap(), f);
            }
        }
    }
}

#[test]
fn hom_bijection_is_natural() {
    // For h: P' -> P and k: E -> E', transposing commutes with
    // precomposition by F(h) and postcomposition by k.
    let geas = geas_upto(3);
    let eas = eas_upto(3);
    for p in &geas {
        for p2 in &geas {
            let hs = enumerate_morphisms(&p2.clone().into(), &p.clone().into(), Kind::Gea).unwrap();
            for e in &eas {
                for e2 in &eas {
                    let ks = enumerate_morphisms(&e.clone().into(), &e2.clone().into(), Kind::Ea)
                        .unwrap();
                    let fs = enumerate_morphisms(
                        &unitize(p).unwrap().into(),
                        &e.clone().into(),
                        Kind::Ea,
                    )
                    .unwrap();
                    for (f, (h, k)) in fs.iter().zip(hs.iter().zip(ks.iter())) {
                        let moved = compose(k, &compose(f, &unitize_morphism(h).unwrap()).unwrap())
                            .unwrap();
                        let lhs = transpose_to_gea(p2, &moved).unwrap();
                        let rhs = compose(
                            &k.forget(),
                            &compose(&transpose_to_gea(p, f).unwrap(), h).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

#[test]
fn monad_and_algebra_laws() {
    for p in geas_upto(3) {
        assert!(verify_monad_laws(&p).unwrap().is_valid());
    }
    assert!(verify_monad_laws(&builtin::fig1()).unwrap().is_valid());
    for e in eas_upto(4) {
        let (x, h) = algebra_from_ea(&e).unwrap();
        assert!(em_algebra_check(&x, &h).unwrap().is_valid());
    }
}

#[test]
fn unbounded_algebras_have_no_structure_map() {
    for p in geas_upto(4) {
        let structures = em_structures(&p).unwrap();
        if p.maximum().is_none() {
            assert!(structures.is_empty(), "{p:?}");
        } else {
            // The structure map is forced to be the counit.
            let e = FiniteEa::from_gea(p.clone()).unwrap();
            assert_eq!(structures, vec![counit(&e).unwrap().forget()]);
        }
    }
}

#[test]
fn state_extension_is_unique() {
    for p in geas_upto(3).into_iter().chain([builtin::fig1()]) {
        let fp = unitize(&p).unwrap();
        let eta_p = eta(&p).unwrap();
        let states: Vec<AdditiveMap> = grid_additive_maps(fp.base(), 4)
            .into_iter()
            .filter(|t| {
                State::new(fp.clone(), t.values().to_vec())
                    .unwrap()
                    .is_valid()
            })
            .collect();
        for t in states {
            let restricted = t.pull_back(&eta_p).unwrap();
            let extended = extend_state(&restricted).unwrap();
            assert_eq!(extended.values(), t.values());
        }
    }
}

#[test]
fn ideal_probe_hom_counts_agree() {
    for p in geas_upto(4) {
        let probe = effalg_core::states::ideal_correspondence_probe(&p).unwrap();
        assert_eq!(probe.gea_homs, probe.ea_homs);
        let b2: Algebra = builtin::two_squared().into();
        assert_eq!(
            probe.gea_homs,
            count_morphisms(&p.clone().into(), &b2.forget(), Kind::Gea).unwrap()
        );
    }
}

fn relabel(g: &FiniteGea, perm: &[usize]) -> FiniteGea {
    let names: Vec<String> = (0..g.len()).map(|i| format!("e{i}")).collect();
    let sums: Vec<(Elem, Elem, Elem)> = g
        .table()
        .entries()
        .map(|(a, b, c)| (Elem(perm[a.0]), Elem(perm[b.0]), Elem(perm[c.0])))
        .collect();
    FiniteGea::from_sums(names, Elem(perm[g.zero().0]), &sums).unwrap()
}

fn all_small() -> Vec<FiniteGea> {
    geas_upto(5)
}

proptest! {
    #[test]
    fn relabeling_preserves_isomorphism_class(index in 0usize..209, seed in any::<u64>()) {
        let algebras = all_small();
        let g = &algebras[index % algebras.len()];
        let n = g.len();
        let mut rest: Vec<usize> = (1..n).collect();
        // Fisher-Yates driven by the seed; zero stays at 0.
        let mut s = seed;
        for i in (1..rest.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            rest.swap(i, (s >> 33) as usize % (i + 1));
        }
        let perm: Vec<usize> = std::iter::once(0).chain(rest).collect();
        let h = relabel(g, &perm);
        prop_assert!(h.validate().is_valid());
        prop_assert!(is_isomorphic(&g.clone().into(), &h.clone().into()));
        prop_assert_eq!(canonical_code(g), canonical_code(&h));
        let f = Morphism::gea(g.clone(), h.clone(), perm.iter().map(|&i| Elem(i)).collect()).unwrap();
        prop_assert!(f.is_isomorphism());
    }

    #[test]
    fn random_valid_maps_are_enumerated(src in 0usize..23, dst in 0usize..23, map in proptest::collection::vec(0usize..8, 8)) {
        let algebras: Vec<FiniteGea> = geas_upto(4);
        let (p, q) = (&algebras[src % algebras.len()], &algebras[dst % algebras.len()]);
        let images: Vec<Elem> = map.iter().take(p.len()).map(|&i| Elem(i % q.len())).collect();
        let f = Morphism::gea(p.clone(), q.clone(), images).unwrap();
        let listed = enumerate_morphisms(&p.clone().into(), &q.clone().into(), Kind::Gea).unwrap();
        prop_assert_eq!(f.is_valid(), listed.contains(&f));
    }

    #[test]
    fn perturbing_a_starred_value_breaks_the_state(k in 0usize..64, up in any::<bool>()) {
        let p = builtin::fig1();
        let maps = grid_additive_maps(&p, 8);
        let s = &maps[k % maps.len()];
        let t = extend_state(s).unwrap();
        prop_assert!(t.is_valid());
        let n = p.len();
        for x in 0..n {
            let mut values = t.values().to_vec();
            let delta = num_rational::Rational64::new(1, 100);
            let v = values[n + x];
            values[n + x] = if (up && v + delta <= 1.into()) || v < delta { v + delta } else { v - delta };
            let bad = State::new(t.algebra().clone(), values).unwrap();
            prop_assert!(!bad.is_valid());
        }
    }
}
