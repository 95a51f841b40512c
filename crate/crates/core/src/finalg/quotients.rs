use std::collections::BTreeSet;

use super::ideals::{annihilator, bit, dense_ideals, full_mask, generators, is_semi_prime, product, Ideal};
use super::ring::{FiniteRing, MAX_ORDER};
use crate::error::{Error, Result};

/// An `A`-module homomorphism from an ideal into the ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleHom {
    pub domain: Ideal,
    /// Indexed by element; entries outside the domain are unused.
    map: Vec<u8>,
}

impl ModuleHom {
    pub fn apply(&self, d: u8) -> Option<u8> {
        self.domain.contains(d).then(|| self.map[d as usize])
    }

    /// Multiplication by `c` on the whole ring.
    pub fn multiplication(ring: &FiniteRing, c: u8) -> ModuleHom {
        ModuleHom { domain: Ideal::whole(ring), map: ring.elements().map(|a| ring.mul(a, c)).collect() }
    }

    /// The restriction to `sub`, which must lie in the domain.
    pub fn restrict(&self, sub: Ideal) -> ModuleHom {
        debug_assert!(sub.is_subset(self.domain));
        ModuleHom { domain: sub, map: self.map.clone() }
    }

    /// Whether `self` and `other` agree on `on`.
    pub fn agrees_on(&self, other: &ModuleHom, on: Ideal) -> bool {
        on.members().all(|d| self.apply(d) == other.apply(d))
    }

    /// Whether the map is additive and `A`-linear.
    pub fn is_valid(&self, ring: &FiniteRing) -> bool {
        self.domain.members().all(|x| {
            let fx = self.map[x as usize];
            self.domain.members().all(|y| self.map[ring.add(x, y) as usize] == ring.add(fx, self.map[y as usize]))
                && ring.elements().all(|a| self.map[ring.mul(a, x) as usize] == ring.mul(a, fx))
        })
    }
}

/// Extends a partial assignment to the submodule it generates; `None` on a
/// conflict.
fn close(ring: &FiniteRing, partial: &mut [Option<u8>], seeds: &[u8]) -> bool {
    let mut queue: Vec<u8> = seeds.to_vec();
    let mut known: Vec<u8> = (0..partial.len() as u8).filter(|&x| partial[x as usize].is_some() && !seeds.contains(&x)).collect();
    while let Some(x) = queue.pop() {
        let fx = partial[x as usize].expect("queued elements are assigned");
        let mut pending: Vec<(u8, u8)> = ring.elements().map(|r| (ring.mul(r, x), ring.mul(r, fx))).collect();
        pending.push((ring.add(x, x), ring.add(fx, fx)));
        for &y in &known {
            let fy = partial[y as usize].expect("known elements are assigned");
            pending.push((ring.add(x, y), ring.add(fx, fy)));
        }
        known.push(x);
        for (t, v) in pending {
            match partial[t as usize] {
                Some(w) if w != v => return false,
                Some(_) => {}
                None => {
                    partial[t as usize] = Some(v);
                    queue.push(t);
                }
            }
        }
    }
    true
}

/// Every module homomorphism from `d` into the ring.
pub fn hom_module(ring: &FiniteRing, d: Ideal) -> Vec<ModuleHom> {
    let gens = generators(ring, d);
    let candidates: Vec<Vec<u8>> = gens
        .iter()
        .map(|&g| {
            let ann = annihilator(ring, Ideal(bit(g)));
            ring.elements().filter(|&c| ann.members().all(|a| ring.mul(a, c) == ring.zero())).collect()
        })
        .collect();
    let mut start = vec![None; ring.order()];
    start[ring.zero() as usize] = Some(ring.zero());
    let mut out = Vec::new();
    search_homs(ring, d, &gens, &candidates, 0, start, &mut out);
    out
}

fn search_homs(
    ring: &FiniteRing,
    d: Ideal,
    gens: &[u8],
    candidates: &[Vec<u8>],
    k: usize,
    partial: Vec<Option<u8>>,
    out: &mut Vec<ModuleHom>,
) {
    if k == gens.len() {
        let map = partial.iter().map(|v| v.unwrap_or(ring.zero())).collect();
        debug_assert!(d.members().all(|x| partial[x as usize].is_some()));
        out.push(ModuleHom { domain: d, map });
        return;
    }
    for &c in &candidates[k] {
        let mut next = partial.clone();
        match next[gens[k] as usize] {
            Some(v) if v != c => continue,
            Some(_) => {}
            None => next[gens[k] as usize] = Some(c),
        }
        if close(ring, &mut next, &[gens[k]]) {
            search_homs(ring, d, gens, candidates, k + 1, next, out);
        }
    }
}

/// The maximal ring of quotients with the canonical embedding.
#[derive(Clone, Debug)]
pub struct QMax {
    pub ring: FiniteRing,
    /// `embedding[a]` is the class of multiplication by `a`.
    pub embedding: Vec<u8>,
    pub dense_ideals: Vec<Ideal>,
    /// One representative per class.
    pub classes: Vec<ModuleHom>,
}

impl QMax {
    /// Whether the canonical embedding is onto.
    pub fn is_onto(&self) -> bool {
        self.embedding.iter().collect::<BTreeSet<_>>().len() == self.ring.order()
    }
}

/// Direct limit of `Hom D` over the dense ideals `D`, with `φ₁ ~ φ₂` when
/// they agree on `D₁D₂`, and product given by composition.
pub fn q_max(ring: &FiniteRing) -> Result<QMax> {
    let mut dense = dense_ideals(ring);
    dense.sort_by_key(|d| std::cmp::Reverse(d.len()));
    let mut classes: Vec<ModuleHom> = Vec::new();
    for &d in &dense {
        for phi in hom_module(ring, d) {
            if classify(ring, &classes, &phi).is_none() {
                classes.push(phi);
                if classes.len() > MAX_ORDER {
                    return Err(Error::TooLarge(classes.len()));
                }
            }
        }
    }
    let n = classes.len();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for p in &classes {
        for q in &classes {
            let e = product(ring, p.domain, q.domain);
            let sum = ModuleHom {
                domain: e,
                map: ring.elements().map(|x| if e.contains(x) { ring.add(p.map[x as usize], q.map[x as usize]) } else { ring.zero() }).collect(),
            };
            let comp = ModuleHom {
                domain: e,
                map: ring.elements().map(|x| if e.contains(x) { p.map[q.map[x as usize] as usize] } else { ring.zero() }).collect(),
            };
            for (table, h) in [(&mut add, sum), (&mut mul, comp)] {
                let k = classify(ring, &classes, &h).ok_or_else(|| Error::RingAxiom("operation left the direct limit".into()))?;
                table.push(k as u8);
            }
        }
    }
    let embedding: Vec<u8> = ring
        .elements()
        .map(|a| classify(ring, &classes, &ModuleHom::multiplication(ring, a)).map(|k| k as u8))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::RingAxiom("ring element missing from the direct limit".into()))?;
    let mut labels: Vec<String> = (0..n).map(|k| format!("q{k}")).collect();
    for a in ring.elements() {
        labels[embedding[a as usize] as usize] = ring.label(a).to_string();
    }
    let q = FiniteRing::from_tables(&format!("Q({})", ring.name()), n, add, mul, labels)?;
    if !ring.is_unital_hom(&q, &embedding) || embedding.iter().collect::<BTreeSet<_>>().len() != ring.order() {
        return Err(Error::RingAxiom("canonical embedding is not a unital monomorphism".into()));
    }
    Ok(QMax { ring: q, embedding, dense_ideals: dense, classes })
}

fn classify(ring: &FiniteRing, classes: &[ModuleHom], phi: &ModuleHom) -> Option<usize> {
    classes.iter().position(|c| phi.agrees_on(c, product(ring, phi.domain, c.domain)))
}

fn check_embedding(sub: &FiniteRing, sup: &FiniteRing, emb: &[u8]) -> Result<()> {
    if !sub.is_unital_hom(sup, emb) {
        return Err(Error::BadEmbedding("not a unital ring homomorphism".into()));
    }
    if emb.iter().collect::<BTreeSet<_>>().len() != sub.order() {
        return Err(Error::BadEmbedding("not injective".into()));
    }
    Ok(())
}

/// Whether `sup` is a ring of quotients of `sub` embedded by `emb`: for all
/// `b` and all nonzero `b'` there is `a` with `ba ∈ A` and `b'a ≠ 0`.
///
/// For semi-prime `sub` the answer is cross-checked against the criterion
/// that every nonzero `b` has some `a` with `0 ≠ ba ∈ A`.
pub fn is_ring_of_quotients(sub: &FiniteRing, sup: &FiniteRing, emb: &[u8]) -> Result<bool> {
    check_embedding(sub, sup, emb)?;
    let image = Ideal(emb.iter().fold(0, |m, &a| m | bit(a)));
    let z = sup.zero();
    let holds = sup.elements().all(|b| {
        let pre: Vec<u8> = emb.iter().copied().filter(|&a| image.contains(sup.mul(b, a))).collect();
        sup.elements().filter(|&b2| b2 != z).all(|b2| pre.iter().any(|&a| sup.mul(b2, a) != z))
    });
    if is_semi_prime(sub) {
        let criterion = sup.elements().filter(|&b| b != z).all(|b| {
            emb.iter().any(|&a| {
                let ba = sup.mul(b, a);
                ba != z && image.contains(ba)
            })
        });
        if criterion != holds {
            return Err(Error::RingAxiom(format!(
                "semi-prime criterion gives {criterion} but the definition gives {holds} for {} in {}",
                sub.name(),
                sup.name()
            )));
        }
    }
    Ok(holds)
}

/// Identity map on the elements.
pub fn identity_embedding(ring: &FiniteRing) -> Vec<u8> {
    ring.elements().collect()
}

/// Unital subring generated by `gens`, as a mask.
pub fn subring_mask(ring: &FiniteRing, gens: &[u8]) -> u64 {
    let mut mask = bit(ring.one()) | bit(ring.zero());
    for &g in gens {
        mask |= bit(g);
    }
    loop {
        let mut next = mask;
        for a in (0..64u8).filter(|&a| mask & bit(a) != 0) {
            next |= bit(ring.neg(a));
            for b in (0..64u8).filter(|&b| mask & bit(b) != 0) {
                next |= bit(ring.add(a, b)) | bit(ring.mul(a, b));
            }
        }
        if next == mask {
            return mask;
        }
        mask = next;
    }
}

/// The subring on `mask` as a ring of its own, with its inclusion map.
pub fn subring(ring: &FiniteRing, mask: u64) -> Result<(FiniteRing, Vec<u8>)> {
    let members: Vec<u8> = (0..ring.order() as u8).filter(|&a| mask & bit(a) != 0).collect();
    let index = |v: u8| members.iter().position(|&m| m == v).map(|i| i as u8);
    let n = members.len();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for &a in &members {
        for &b in &members {
            add.push(index(ring.add(a, b)).ok_or_else(|| Error::BadEmbedding("not closed under addition".into()))?);
            mul.push(index(ring.mul(a, b)).ok_or_else(|| Error::BadEmbedding("not closed under multiplication".into()))?);
        }
    }
    let labels = members.iter().map(|&a| ring.label(a).to_string()).collect();
    let sub = FiniteRing::from_tables(&format!("{}|{}", ring.name(), n), n, add, mul, labels)?;
    Ok((sub, members))
}

/// Every unital subring, as masks in increasing order.
pub fn all_subrings(ring: &FiniteRing) -> Vec<u64> {
    let base = subring_mask(ring, &[]);
    let mut seen: BTreeSet<u64> = BTreeSet::from([base]);
    let mut frontier = vec![base];
    while let Some(s) = frontier.pop() {
        for a in ring.elements().filter(|&a| s & bit(a) == 0) {
            let members: Vec<u8> = (0..64u8).filter(|&x| s & bit(x) != 0).chain([a]).collect();
            let t = subring_mask(ring, &members);
            if seen.insert(t) {
                frontier.push(t);
            }
        }
    }
    seen.into_iter().collect()
}

/// Whether the three pairwise ring-of-quotients statements of a nest
/// `A ⊆ B ⊆ C` (subrings of `c`) satisfy: `C/A` iff (`C/B` and `B/A`).
pub fn transitivity_holds(c: &FiniteRing, a: u64, b: u64) -> Result<bool> {
    let (ra, ea) = subring(c, a)?;
    let (rb, eb) = subring(c, b)?;
    let a_in_b: Vec<u8> = ea
        .iter()
        .map(|x| eb.iter().position(|y| y == x).map(|i| i as u8))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::BadEmbedding("A is not inside B".into()))?;
    let ca = is_ring_of_quotients(&ra, c, &ea)?;
    let cb = is_ring_of_quotients(&rb, c, &eb)?;
    let ba = is_ring_of_quotients(&ra, &rb, &a_in_b)?;
    Ok(ca == (cb && ba))
}

/// Element invariants preserved by ring isomorphisms.
fn signature(ring: &FiniteRing, a: u8) -> (usize, bool, bool, usize, usize) {
    let ann = ring.elements().filter(|&b| ring.mul(a, b) == ring.zero()).count();
    let multiples = ring.elements().map(|b| ring.mul(a, b)).collect::<BTreeSet<_>>().len();
    (ring.additive_order(a), ring.is_idempotent(a), ring.is_nilpotent(a), ann, multiples)
}

/// A ring isomorphism `a → b`, found by backtracking over images of
/// generators; `None` when the rings are not isomorphic.
pub fn isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<u8>> {
    if a.order() != b.order() {
        return None;
    }
    let sig_a: Vec<_> = a.elements().map(|x| signature(a, x)).collect();
    let sig_b: Vec<_> = b.elements().map(|x| signature(b, x)).collect();
    let mut ms_a = sig_a.clone();
    let mut ms_b = sig_b.clone();
    ms_a.sort();
    ms_b.sort();
    if ms_a != ms_b {
        return None;
    }
    let mut gens = Vec::new();
    let full = full_mask(a.order());
    while subring_mask(a, &gens) != full {
        let span = subring_mask(a, &gens);
        let g = a
            .elements()
            .filter(|&x| span & bit(x) == 0)
            .max_by_key(|&x| {
                let mut with = gens.clone();
                with.push(x);
                (subring_mask(a, &with).count_ones(), std::cmp::Reverse(x))
            })
            .expect("span is proper");
        gens.push(g);
    }
    let mut map = vec![None; a.order()];
    map[a.zero() as usize] = Some(b.zero());
    map[a.one() as usize] = Some(b.one());
    let mut used = 0u64;
    if !extend_iso(a, b, &mut map, &mut used, &[a.zero(), a.one()], &sig_a, &sig_b) {
        return None;
    }
    iso_search(a, b, &gens, 0, map, used, &sig_a, &sig_b)
}

#[allow(clippy::too_many_arguments)]
fn iso_search(
    a: &FiniteRing,
    b: &FiniteRing,
    gens: &[u8],
    k: usize,
    map: Vec<Option<u8>>,
    used: u64,
    sig_a: &[(usize, bool, bool, usize, usize)],
    sig_b: &[(usize, bool, bool, usize, usize)],
) -> Option<Vec<u8>> {
    if k == gens.len() {
        let out: Vec<u8> = map.iter().map(|v| v.expect("generators span")).collect();
        return a.is_unital_hom(b, &out).then_some(out);
    }
    let g = gens[k];
    if map[g as usize].is_some() {
        return iso_search(a, b, gens, k + 1, map, used, sig_a, sig_b);
    }
    for c in b.elements().filter(|&c| used & bit(c) == 0 && sig_b[c as usize] == sig_a[g as usize]) {
        let mut next = map.clone();
        let mut next_used = used;
        next[g as usize] = Some(c);
        next_used |= bit(c);
        if extend_iso(a, b, &mut next, &mut next_used, &[g], sig_a, sig_b) {
            if let Some(done) = iso_search(a, b, gens, k + 1, next, next_used, sig_a, sig_b) {
                return Some(done);
            }
        }
    }
    None
}

/// Closes a partial injective map under `+`, `·` and negation.
fn extend_iso(
    a: &FiniteRing,
    b: &FiniteRing,
    map: &mut [Option<u8>],
    used: &mut u64,
    seeds: &[u8],
    sig_a: &[(usize, bool, bool, usize, usize)],
    sig_b: &[(usize, bool, bool, usize, usize)],
) -> bool {
    for &s in seeds {
        if let Some(v) = map[s as usize] {
            *used |= bit(v);
        }
    }
    let mut queue: Vec<u8> = seeds.to_vec();
    let mut known: Vec<u8> = (0..map.len() as u8).filter(|&x| map[x as usize].is_some() && !seeds.contains(&x)).collect();
    while let Some(x) = queue.pop() {
        let fx = map[x as usize].expect("assigned");
        let mut pending: Vec<(u8, u8)> = vec![(a.neg(x), b.neg(fx)), (a.add(x, x), b.add(fx, fx)), (a.mul(x, x), b.mul(fx, fx))];
        for &y in &known {
            let fy = map[y as usize].expect("assigned");
            pending.push((a.add(x, y), b.add(fx, fy)));
            pending.push((a.mul(x, y), b.mul(fx, fy)));
        }
        known.push(x);
        for (t, v) in pending {
            match map[t as usize] {
                Some(w) if w != v => return false,
                Some(_) => {}
                None => {
                    if *used & bit(v) != 0 || sig_a[t as usize] != sig_b[v as usize] {
                        return false;
                    }
                    map[t as usize] = Some(v);
                    *used |= bit(v);
                    queue.push(t);
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finalg::ideals::{ideal, is_regular, is_semi_simple};
    use crate::finalg::make_ring;

    #[test]
    fn homs_from_principal_ideal() {
        let r = make_ring("Z6").unwrap();
        let homs = hom_module(&r, ideal(&r, &[3]));
        assert_eq!(homs.len(), 2);
        let images: BTreeSet<u8> = homs.iter().map(|h| h.apply(3).unwrap()).collect();
        assert_eq!(images, BTreeSet::from([0, 3]));
        assert!(homs.iter().all(|h| h.is_valid(&r)));
    }

    #[test]
    fn homs_from_whole_ring_and_zero() {
        let r = make_ring("Z2xZ3").unwrap();
        let homs = hom_module(&r, Ideal::whole(&r));
        assert_eq!(homs.len(), r.order());
        for h in &homs {
            let c = h.apply(r.one()).unwrap();
            assert_eq!(*h, ModuleHom::multiplication(&r, c));
        }
        assert_eq!(hom_module(&r, Ideal::zero(&r)).len(), 1);
    }

    #[test]
    fn homs_from_two_generated_ideal() {
        let r = make_ring("Z2xZ4").unwrap();
        let d = ideal(&r, &[r.element("(1,0)").unwrap(), r.element("(0,2)").unwrap()]);
        let homs = hom_module(&r, d);
        assert!(homs.iter().all(|h| h.is_valid(&r)));
        // (1,0) maps into Z2 x 0 and (0,2) into 0 x {0,2}.
        assert_eq!(homs.len(), 2 * 2);
    }

    #[test]
    fn q_max_of_small_rings() {
        for spec in ["Z6", "F4", "F5", "Z2xZ3", "Z4", "Z2xZ2"] {
            let r = make_ring(spec).unwrap();
            let q = q_max(&r).unwrap();
            assert_eq!(q.ring.order(), r.order(), "{spec}");
            assert!(q.is_onto());
            assert_eq!(q.dense_ideals, vec![Ideal::whole(&r)]);
            assert!(isomorphism(&r, &q.ring).is_some());
        }
    }

    #[test]
    fn ring_of_quotients_examples() {
        let z2 = make_ring("Z2").unwrap();
        let v = make_ring("Z2xZ2").unwrap();
        let diag = vec![v.zero(), v.one()];
        assert_eq!(is_ring_of_quotients(&z2, &v, &diag), Ok(false));
        for s in ["Z6", "Z2xZ3", "Z4"] {
            let r = make_ring(s).unwrap();
            assert_eq!(is_ring_of_quotients(&r, &r, &identity_embedding(&r)), Ok(true));
        }
        let bad = vec![v.zero(), v.element("(1,0)").unwrap()];
        assert!(matches!(is_ring_of_quotients(&z2, &v, &bad), Err(Error::BadEmbedding(_))));
    }

    #[test]
    fn isomorphisms() {
        let a = make_ring("Z6").unwrap();
        let b = make_ring("Z2xZ3").unwrap();
        let f = isomorphism(&a, &b).unwrap();
        assert!(a.is_unital_hom(&b, &f));
        assert!(isomorphism(&make_ring("Z4").unwrap(), &make_ring("Z2xZ2").unwrap()).is_none());
        assert!(isomorphism(&make_ring("F4").unwrap(), &make_ring("Z2xZ2").unwrap()).is_none());
        let big = make_ring("Z2xZ2xZ2xZ2xZ2xZ2").unwrap();
        assert!(isomorphism(&big, &big).is_some());
    }

    #[test]
    fn transitivity_on_nests() {
        for spec in ["Z2xZ2xZ2", "Z2xZ4", "Z4xZ4"] {
            let c = make_ring(spec).unwrap();
            let subs = all_subrings(&c);
            for &a in &subs {
                for &b in subs.iter().filter(|&&b| a & !b == 0) {
                    assert!(transitivity_holds(&c, a, b).unwrap(), "{spec} {a:#x} {b:#x}");
                }
            }
        }
    }

    #[test]
    fn regular_implies_semi_simple() {
        for spec in ["Z6", "Z4", "Z2xZ4", "F4xZ3", "Z2xZ2xZ2"] {
            let r = make_ring(spec).unwrap();
            assert!(!is_regular(&r) || is_semi_simple(&r));
        }
    }
}
