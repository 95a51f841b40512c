//! Finite commutative rings with 1 given by tables: ideals, annihilators,
//! rings of quotients and Stone duality for their Boolean algebras.

pub mod boolean;
pub mod ideals;
pub mod quotients;
pub mod ring;

pub use boolean::{annihilator_algebra, gamma_iso_E, stone_duality, AnnihilatorAlgebra, CheckReport, FinBoolAlg, GammaReport, StoneReport};
pub use ideals::{
    all_ideals, annihilator, dense_ideals, generators, ideal, ideal_predicates, is_dense, is_ideal, is_large, is_regular,
    is_semi_prime, is_semi_simple, max_ideals, principal, product, ring_predicates, stone_basic, sum, Ideal, IdealPredicates,
    RingPredicates,
};
pub use quotients::{
    all_subrings, hom_module, identity_embedding, is_ring_of_quotients, isomorphism, q_max, subring, subring_mask,
    transitivity_holds, ModuleHom, QMax,
};
pub use ring::{make_ring, FiniteRing, MAX_ORDER};

/// Ring specs built from `Z2`, `Z3`, `Z4`, `Z5` and `F4` with order at most 64.
pub fn ring_family() -> Vec<String> {
    const BASE: [(&str, usize); 5] = [("Z2", 2), ("Z3", 3), ("Z4", 4), ("Z5", 5), ("F4", 4)];
    let mut out = Vec::new();
    fn extend(start: usize, order: usize, name: String, out: &mut Vec<String>) {
        if !name.is_empty() {
            out.push(name.clone());
        }
        for (k, (f, o)) in BASE.iter().enumerate().skip(start) {
            if order * o <= MAX_ORDER {
                let next = if name.is_empty() { f.to_string() } else { format!("{name}x{f}") };
                extend(k, order * o, next, out);
            }
        }
    }
    extend(0, 1, String::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_is_bounded_and_distinct() {
        let fam = ring_family();
        assert!(fam.contains(&"Z2xZ3".to_string()));
        assert!(fam.contains(&"Z2xZ2xZ2xZ2xZ2xZ2".to_string()));
        assert!(fam.contains(&"Z4xZ4xZ4".to_string()));
        assert!(!fam.contains(&"Z5xZ5xZ5".to_string()));
        let set: std::collections::BTreeSet<_> = fam.iter().collect();
        assert_eq!(set.len(), fam.len());
    }
}
