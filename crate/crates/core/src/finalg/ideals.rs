use std::collections::BTreeSet;

use super::ring::FiniteRing;

/// A subset of a finite ring's elements, as a bitmask over indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal(pub u64);

impl Ideal {
    pub fn zero(ring: &FiniteRing) -> Ideal {
        Ideal(bit(ring.zero()))
    }

    pub fn whole(ring: &FiniteRing) -> Ideal {
        Ideal(full_mask(ring.order()))
    }

    pub fn contains(self, a: u8) -> bool {
        self.0 & bit(a) != 0
    }

    pub fn members(self) -> impl Iterator<Item = u8> {
        (0..64u8).filter(move |&a| self.contains(a))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Ideal) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersect(self, other: Ideal) -> Ideal {
        Ideal(self.0 & other.0)
    }

    pub fn render(self, ring: &FiniteRing) -> String {
        let items: Vec<&str> = self.members().map(|a| ring.label(a)).collect();
        format!("{{{}}}", items.join(", "))
    }
}

#[inline]
pub(crate) fn bit(a: u8) -> u64 {
    1u64 << a
}

pub(crate) fn full_mask(order: usize) -> u64 {
    if order == 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

/// Whether `set` is closed under addition and negation and absorbs
/// multiplication.
pub fn is_ideal(ring: &FiniteRing, set: Ideal) -> bool {
    set.contains(ring.zero())
        && set.members().all(|a| {
            set.contains(ring.neg(a))
                && set.members().all(|b| set.contains(ring.add(a, b)))
                && ring.elements().all(|r| set.contains(ring.mul(r, a)))
        })
}

/// `aA`.
pub fn principal(ring: &FiniteRing, a: u8) -> Ideal {
    Ideal(ring.elements().fold(0, |m, r| m | bit(ring.mul(r, a))))
}

/// `I + J`.
pub fn sum(ring: &FiniteRing, i: Ideal, j: Ideal) -> Ideal {
    let mut m = 0;
    for a in i.members() {
        for b in j.members() {
            m |= bit(ring.add(a, b));
        }
    }
    Ideal(m)
}

/// The ideal generated by the products `ab` with `a ∈ I`, `b ∈ J`.
pub fn product(ring: &FiniteRing, i: Ideal, j: Ideal) -> Ideal {
    let mut out = Ideal::zero(ring);
    for a in i.members() {
        for b in j.members() {
            let p = ring.mul(a, b);
            if !out.contains(p) {
                out = sum(ring, out, principal(ring, p));
            }
        }
    }
    out
}

/// Smallest ideal containing `gens`.
pub fn ideal(ring: &FiniteRing, gens: &[u8]) -> Ideal {
    gens.iter().fold(Ideal::zero(ring), |acc, &g| sum(ring, acc, principal(ring, g)))
}

/// `I^ = {a : aI = 0}`.
pub fn annihilator(ring: &FiniteRing, i: Ideal) -> Ideal {
    let z = ring.zero();
    Ideal(ring.elements().filter(|&a| i.members().all(|b| ring.mul(a, b) == z)).fold(0, |m, a| m | bit(a)))
}

/// Every ideal of the ring, in increasing mask order.
pub fn all_ideals(ring: &FiniteRing) -> Vec<Ideal> {
    let principals: BTreeSet<Ideal> = ring.elements().map(|a| principal(ring, a)).collect();
    let mut all: BTreeSet<Ideal> = principals.clone();
    let mut frontier: Vec<Ideal> = all.iter().copied().collect();
    while let Some(i) = frontier.pop() {
        for &p in &principals {
            let s = sum(ring, i, p);
            if all.insert(s) {
                frontier.push(s);
            }
        }
    }
    all.into_iter().collect()
}

/// Minimal generating set, chosen greedily.
pub fn generators(ring: &FiniteRing, i: Ideal) -> Vec<u8> {
    let mut gens = Vec::new();
    let mut span = Ideal::zero(ring);
    while span != i {
        let best = i
            .members()
            .filter(|&a| !span.contains(a))
            .max_by_key(|&a| (sum(ring, span, principal(ring, a)).len(), std::cmp::Reverse(a)))
            .expect("span is a proper subset");
        gens.push(best);
        span = sum(ring, span, principal(ring, best));
    }
    gens
}

/// Dense and large flags of an ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealPredicates {
    pub dense: bool,
    pub large: bool,
}

pub fn is_dense(ring: &FiniteRing, i: Ideal) -> bool {
    annihilator(ring, i) == Ideal::zero(ring)
}

pub fn is_large(ring: &FiniteRing, i: Ideal) -> bool {
    let z = ring.zero();
    ring.elements()
        .filter(|&a| a != z)
        .all(|a| principal(ring, a).intersect(i) != Ideal::zero(ring))
}

pub fn ideal_predicates(ring: &FiniteRing, i: Ideal) -> IdealPredicates {
    IdealPredicates { dense: is_dense(ring, i), large: is_large(ring, i) }
}

pub fn dense_ideals(ring: &FiniteRing) -> Vec<Ideal> {
    all_ideals(ring).into_iter().filter(|&i| is_dense(ring, i)).collect()
}

/// Ideals `M` for which the quotient is a field.
pub fn max_ideals(ring: &FiniteRing) -> Vec<Ideal> {
    let one = ring.one();
    all_ideals(ring)
        .into_iter()
        .filter(|&m| {
            !m.contains(one)
                && ring.elements().filter(|&a| !m.contains(a)).all(|a| {
                    ring.elements().any(|b| m.contains(ring.sub(ring.mul(a, b), one)))
                })
        })
        .collect()
}

/// `Γ(a) = {M : a ∉ M}`, as a bitmask over positions in `maximals`.
pub fn stone_basic(maximals: &[Ideal], a: u8) -> u64 {
    maximals.iter().enumerate().filter(|(_, m)| !m.contains(a)).fold(0, |s, (k, _)| s | (1 << k))
}

/// Semi-prime, semi-simple and regular flags, plus the cross-check that
/// semi-prime holds exactly when every large ideal is dense.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingPredicates {
    pub semi_prime: bool,
    pub semi_simple: bool,
    pub regular: bool,
    pub large_implies_dense: bool,
}

impl RingPredicates {
    /// Whether the cross-check agrees with the semi-prime flag.
    pub fn consistent(&self) -> bool {
        self.semi_prime == self.large_implies_dense
    }
}

pub fn is_semi_prime(ring: &FiniteRing) -> bool {
    ring.elements().all(|a| a == ring.zero() || !ring.is_nilpotent(a))
}

pub fn is_semi_simple(ring: &FiniteRing) -> bool {
    let radical = max_ideals(ring).into_iter().fold(Ideal::whole(ring), Ideal::intersect);
    radical == Ideal::zero(ring)
}

pub fn is_regular(ring: &FiniteRing) -> bool {
    ring.elements().all(|a| {
        let a2 = ring.mul(a, a);
        ring.elements().any(|b| ring.mul(a2, b) == a)
    })
}

pub fn ring_predicates(ring: &FiniteRing) -> RingPredicates {
    let large_implies_dense = all_ideals(ring)
        .into_iter()
        .all(|i| !is_large(ring, i) || is_dense(ring, i));
    RingPredicates {
        semi_prime: is_semi_prime(ring),
        semi_simple: is_semi_simple(ring),
        regular: is_regular(ring),
        large_implies_dense,
    }
}
