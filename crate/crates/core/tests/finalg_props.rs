use qlab_core::exec::{par_map, Execution};
use qlab_core::finalg::{
    all_ideals, annihilator_algebra, dense_ideals, gamma_iso_E, hom_module, ideal_predicates, identity_embedding,
    is_ring_of_quotients, isomorphism, make_ring, q_max, ring_family, ring_predicates, stone_duality, FinBoolAlg, Ideal,
};

fn family_check(check: impl Fn(&str) -> Result<(), String> + Sync + Send) {
    let family = ring_family();
    let failures: Vec<String> = par_map(Execution::Parallel, &family, |spec| check(spec).err())
        .into_iter()
        .flatten()
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn family_covers_all_small_products() {
    let family = ring_family();
    assert!(family.len() > 40);
    for spec in &family {
        assert!(make_ring(spec).unwrap().order() <= 64, "{spec}");
    }
}

#[test]
fn semi_prime_iff_large_ideals_are_dense() {
    family_check(|spec| {
        let r = make_ring(spec).unwrap();
        let p = ring_predicates(&r);
        if !p.consistent() {
            return Err(format!("{spec}: {p:?}"));
        }
        // dense implies large in every ring
        for i in all_ideals(&r) {
            let f = ideal_predicates(&r, i);
            if f.dense && !f.large {
                return Err(format!("{spec}: dense ideal {} is not large", i.render(&r)));
            }
        }
        Ok(())
    });
}

#[test]
fn only_the_unit_ideal_is_dense_and_q_max_is_the_ring() {
    family_check(|spec| {
        let r = make_ring(spec).unwrap();
        if dense_ideals(&r) != vec![Ideal::whole(&r)] {
            return Err(format!("{spec}: dense ideals {:?}", dense_ideals(&r)));
        }
        if hom_module(&r, Ideal::whole(&r)).len() != r.order() {
            return Err(format!("{spec}: Hom(A, A) has the wrong size"));
        }
        let q = q_max(&r).map_err(|e| format!("{spec}: {e}"))?;
        if !q.is_onto() || isomorphism(&q.ring, &r).is_none() {
            return Err(format!("{spec}: q_max is not the ring itself"));
        }
        if !is_ring_of_quotients(&r, &q.ring, &q.embedding).map_err(|e| e.to_string())? {
            return Err(format!("{spec}: q_max is not a ring of quotients"));
        }
        if !is_ring_of_quotients(&r, &r, &identity_embedding(&r)).map_err(|e| e.to_string())? {
            return Err(format!("{spec}: a ring is a ring of quotients of itself"));
        }
        Ok(())
    });
}

#[test]
fn regular_rings_are_semi_simple() {
    family_check(|spec| {
        let p = ring_predicates(&make_ring(spec).unwrap());
        if p.regular && !p.semi_simple || p.semi_simple && !p.semi_prime {
            return Err(format!("{spec}: {p:?}"));
        }
        Ok(())
    });
}

#[test]
fn idempotents_of_semi_simple_rings_are_power_sets() {
    family_check(|spec| {
        let r = make_ring(spec).unwrap();
        let p = ring_predicates(&r);
        match gamma_iso_E(&r) {
            Ok(g) if p.semi_simple && g.report.ok() => Ok(()),
            Err(_) if !p.semi_simple => Ok(()),
            Ok(g) => Err(format!("{spec}: {:?}", g.report.failures)),
            Err(e) => Err(format!("{spec}: {e}")),
        }
    });
}

#[test]
fn annihilator_ideals_form_the_algebra_of_subsets() {
    family_check(|spec| {
        let r = make_ring(spec).unwrap();
        let p = ring_predicates(&r);
        match annihilator_algebra(&r) {
            Ok(a) if p.semi_prime && a.report.ok() && a.ideals.len() == 1 << a.points => Ok(()),
            Err(_) if !p.semi_prime => Ok(()),
            Ok(a) => Err(format!("{spec}: {} ideals, {} points, {:?}", a.ideals.len(), a.points, a.report.failures)),
            Err(e) => Err(format!("{spec}: {e}")),
        }
    });
}

#[test]
fn idempotent_algebras_satisfy_the_translation_identities() {
    family_check(|spec| {
        let r = make_ring(spec).unwrap();
        let b = FinBoolAlg::from_idempotents(&r).map_err(|e| format!("{spec}: {e}"))?;
        let s = stone_duality(&b);
        if !s.report.ok() || s.pairs != b.size() * b.size() {
            return Err(format!("{spec}: {:?}", s.report.failures));
        }
        Ok(())
    });
}

#[test]
fn stone_round_trip_up_to_four_atoms() {
    for k in 0..=4 {
        let b = FinBoolAlg::power_set(k).unwrap();
        let s = stone_duality(&b);
        assert!(s.report.ok(), "{k}: {:?}", s.report.failures);
        assert_eq!((s.atoms, s.max_ideals, s.pairs), (k, k, 1 << (2 * k)));
    }
}
