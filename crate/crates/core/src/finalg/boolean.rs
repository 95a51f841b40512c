use std::collections::BTreeMap;

use super::ideals::{annihilator, full_mask, is_semi_prime, is_semi_simple, max_ideals, stone_basic, Ideal};
use super::ring::{FiniteRing, MAX_ORDER};
use crate::error::{Error, Result};

/// Tally of verified identities with the failures found.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A finite Boolean algebra carried by a ring in which every element is
/// idempotent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinBoolAlg {
    ring: FiniteRing,
}

impl FinBoolAlg {
    pub fn new(ring: FiniteRing) -> Result<Self> {
        if ring.elements().all(|a| ring.is_idempotent(a)) {
            Ok(FinBoolAlg { ring })
        } else {
            Err(Error::NotIdempotent)
        }
    }

    /// The algebra of subsets of `k` points.
    pub fn power_set(k: usize) -> Result<Self> {
        if k > 6 {
            return Err(Error::TooLarge(1 << k.min(16)));
        }
        let ring = if k == 0 {
            FiniteRing::zn(1)?
        } else {
            let z2 = FiniteRing::zn(2)?;
            (1..k).try_fold(z2.clone(), |acc, _| acc.product(&z2))?
        };
        Self::new(ring)
    }

    /// The idempotents of `ring` under `e ∔ f = e + f − 2ef` and `ef`.
    pub fn from_idempotents(ring: &FiniteRing) -> Result<Self> {
        let idem = ring.idempotents();
        let index: BTreeMap<u8, u8> = idem.iter().enumerate().map(|(i, &e)| (e, i as u8)).collect();
        let n = idem.len();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for &e in &idem {
            for &f in &idem {
                let ef = ring.mul(e, f);
                let sym = ring.sub(ring.add(e, f), ring.add(ef, ef));
                add.push(*index.get(&sym).ok_or_else(|| Error::RingAxiom("e + f - 2ef is not idempotent".into()))?);
                mul.push(index[&ef]);
            }
        }
        let labels = idem.iter().map(|&e| ring.label(e).to_string()).collect();
        Self::new(FiniteRing::from_tables(&format!("E({})", ring.name()), n, add, mul, labels)?)
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.ring.order()
    }

    pub fn le(&self, x: u8, y: u8) -> bool {
        self.ring.mul(x, y) == x
    }

    /// Minimal nonzero elements.
    pub fn atoms(&self) -> Vec<u8> {
        let r = &self.ring;
        let z = r.zero();
        r.elements()
            .filter(|&x| x != z && r.elements().all(|y| y == z || y == x || !self.le(y, x)))
            .collect()
    }
}

/// Result of the Stone round trip for a finite Boolean algebra.
#[derive(Clone, Debug)]
pub struct StoneReport {
    pub atoms: usize,
    pub max_ideals: usize,
    pub pairs: usize,
    pub report: CheckReport,
}

/// Verifies that `b` is the power set of its atoms, that its maximal ideals
/// are the ideals missing one atom, and that the lattice operations computed
/// from the order agree with `ef`, `e + f − ef` and `e + f − 2ef`.
pub fn stone_duality(b: &FinBoolAlg) -> StoneReport {
    let r = &b.ring;
    let atoms = b.atoms();
    let mut report = CheckReport::default();
    let rep = |x: u8| -> u64 {
        atoms.iter().enumerate().filter(|(_, &a)| b.le(a, x)).fold(0, |m, (k, _)| m | (1 << k))
    };
    let reps: Vec<u64> = r.elements().map(rep).collect();
    let mut by_rep: BTreeMap<u64, u8> = BTreeMap::new();
    for x in r.elements() {
        by_rep.insert(reps[x as usize], x);
    }
    report.check(
        atoms.len() < 64 && by_rep.len() == r.order() && r.order() == 1usize << atoms.len(),
        || format!("{} elements but {} atoms", r.order(), atoms.len()),
    );
    let maximals = max_ideals(r);
    report.check(maximals.len() == atoms.len(), || format!("{} maximal ideals for {} atoms", maximals.len(), atoms.len()));
    for (k, &a) in atoms.iter().enumerate() {
        let missing = Ideal(r.elements().filter(|&x| reps[x as usize] & (1 << k) == 0).fold(0, |m, x| m | (1 << x)));
        report.check(maximals.contains(&missing), || format!("no maximal ideal omits exactly atom {}", r.label(a)));
    }
    let one = r.one();
    let subset = |x: u8, y: u8| reps[x as usize] & !reps[y as usize] == 0;
    let mut pairs = 0;
    for e in r.elements() {
        for f in r.elements() {
            pairs += 1;
            let ef = r.mul(e, f);
            let glb = r.elements().filter(|&z| subset(z, e) && subset(z, f)).find(|&z| {
                r.elements().filter(|&w| subset(w, e) && subset(w, f)).all(|w| subset(w, z))
            });
            let lub = r.elements().filter(|&z| subset(e, z) && subset(f, z)).find(|&z| {
                r.elements().filter(|&w| subset(e, w) && subset(f, w)).all(|w| subset(z, w))
            });
            let join = r.sub(r.add(e, f), ef);
            let sym = r.sub(r.add(e, f), r.add(ef, ef));
            let lbl = |x: u8| r.label(x).to_string();
            report.check(glb == Some(ef), || format!("glb({}, {}) is not ef", lbl(e), lbl(f)));
            report.check(lub == Some(join), || format!("lub({}, {}) is not e + f - ef", lbl(e), lbl(f)));
            report.check(reps[sym as usize] == reps[e as usize] ^ reps[f as usize], || {
                format!("e + f - 2ef is not the symmetric difference for ({}, {})", lbl(e), lbl(f))
            });
            report.check(subset(e, f) == (ef == e), || format!("order law fails for ({}, {})", lbl(e), lbl(f)));
            report.check(
                reps[r.sub(one, e) as usize] == !reps[e as usize] & full_mask(atoms.len()),
                || format!("1 - e is not the complement of {}", lbl(e)),
            );
        }
    }
    StoneReport { atoms: atoms.len(), max_ideals: maximals.len(), pairs, report }
}

/// Result of checking `Γ` on the idempotents of a semi-simple ring.
#[derive(Clone, Debug)]
pub struct GammaReport {
    pub idempotents: usize,
    pub points: usize,
    pub report: CheckReport,
}

/// Verifies that `e ↦ Γe = {M : e ∉ M}` is a Boolean-algebra isomorphism
/// from the idempotents onto the subsets of the maximal-ideal space.
#[allow(non_snake_case)]
pub fn gamma_iso_E(ring: &FiniteRing) -> Result<GammaReport> {
    if !is_semi_simple(ring) {
        return Err(Error::NotSemiSimple);
    }
    let ms = max_ideals(ring);
    let idem = ring.idempotents();
    let mut report = CheckReport::default();
    let full = full_mask(ms.len());
    let gamma = |e: u8| stone_basic(&ms, e);
    let images: std::collections::BTreeSet<u64> = idem.iter().map(|&e| gamma(e)).collect();
    report.check(
        ms.len() < 64 && images.len() == idem.len() && idem.len() == 1usize << ms.len(),
        || format!("{} idempotents onto subsets of {} points", idem.len(), ms.len()),
    );
    let one = ring.one();
    for &e in &idem {
        report.check(gamma(ring.sub(one, e)) == !gamma(e) & full, || format!("complement fails at {}", ring.label(e)));
        for &f in &idem {
            let ef = ring.mul(e, f);
            let join = ring.sub(ring.add(e, f), ef);
            report.check(gamma(ef) == gamma(e) & gamma(f), || format!("meet fails at ({}, {})", ring.label(e), ring.label(f)));
            report.check(gamma(join) == gamma(e) | gamma(f), || format!("join fails at ({}, {})", ring.label(e), ring.label(f)));
        }
    }
    Ok(GammaReport { idempotents: idem.len(), points: ms.len(), report })
}

/// The annihilator ideals with the checks performed on them.
#[derive(Clone, Debug)]
pub struct AnnihilatorAlgebra {
    pub ideals: Vec<Ideal>,
    pub algebra: FinBoolAlg,
    pub points: usize,
    pub report: CheckReport,
}

/// The ideals `J` with `J^^ = J`, under intersection, `J ↦ J^` and the join
/// `(J^ ∩ K^)^`, checked to be a Boolean algebra isomorphic via
/// `ΓJ = {M : J ⊄ M}` to the subsets of the maximal-ideal space.
pub fn annihilator_algebra(ring: &FiniteRing) -> Result<AnnihilatorAlgebra> {
    if !is_semi_prime(ring) {
        return Err(Error::NotSemiPrime);
    }
    let whole = Ideal::whole(ring);
    let zero = Ideal::zero(ring);
    let mut ideals: Vec<Ideal> = super::ideals::all_ideals(ring)
        .into_iter()
        .filter(|&j| annihilator(ring, annihilator(ring, j)) == j)
        .collect();
    ideals.sort();
    let n = ideals.len();
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let index: BTreeMap<Ideal, usize> = ideals.iter().enumerate().map(|(i, &j)| (j, i)).collect();
    let mut report = CheckReport::default();
    let comp: Vec<usize> = ideals.iter().map(|&j| index.get(&annihilator(ring, j)).copied()).collect::<Option<_>>()
        .ok_or_else(|| Error::RingAxiom("annihilator of an annihilator ideal is not one".into()))?;
    let mut meet = vec![0usize; n * n];
    let mut join = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            let m = index.get(&ideals[i].intersect(ideals[j])).copied();
            report.check(m.is_some(), || format!("intersection of #{i} and #{j} is not an annihilator ideal"));
            meet[i * n + j] = m.unwrap_or(0);
        }
    }
    for i in 0..n {
        for j in 0..n {
            join[i * n + j] = comp[meet[comp[i] * n + comp[j]]];
        }
    }
    let (z, u) = (index.get(&zero).copied(), index.get(&whole).copied());
    report.check(z.is_some() && u.is_some(), || "0 or A is not an annihilator ideal".into());
    let (z, u) = (z.unwrap_or(0), u.unwrap_or(0));
    for a in 0..n {
        report.check(comp[comp[a]] == a, || format!("double complement fails at #{a}"));
        report.check(meet[a * n + comp[a]] == z, || format!("J meet J^ is not 0 at #{a}"));
        report.check(join[a * n + comp[a]] == u, || format!("J join J^ is not A at #{a}"));
        for b in 0..n {
            report.check(join[a * n + b] == join[b * n + a], || format!("join not commutative at #{a}, #{b}"));
            report.check(join[a * n + meet[a * n + b]] == a, || format!("absorption fails at #{a}, #{b}"));
            for c in 0..n {
                report.check(meet[a * n + join[b * n + c]] == join[meet[a * n + b] * n + meet[a * n + c]], || {
                    format!("distributivity fails at #{a}, #{b}, #{c}")
                });
                report.check(join[join[a * n + b] * n + c] == join[a * n + join[b * n + c]], || {
                    format!("join not associative at #{a}, #{b}, #{c}")
                });
            }
        }
    }
    let ms = max_ideals(ring);
    let full = full_mask(ms.len());
    let gamma = |j: Ideal| {
        ms.iter().enumerate().filter(|(_, m)| !j.is_subset(**m)).fold(0u64, |s, (k, _)| s | (1 << k))
    };
    let images: std::collections::BTreeSet<u64> = ideals.iter().map(|&j| gamma(j)).collect();
    report.check(ms.len() < 64 && images.len() == n && n == 1usize << ms.len(), || {
        format!("{n} annihilator ideals onto subsets of {} points", ms.len())
    });
    for a in 0..n {
        report.check(gamma(ideals[comp[a]]) == !gamma(ideals[a]) & full, || format!("complement not preserved at #{a}"));
        for b in 0..n {
            report.check(gamma(ideals[meet[a * n + b]]) == gamma(ideals[a]) & gamma(ideals[b]), || {
                format!("meet not preserved at #{a}, #{b}")
            });
        }
    }
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let sym = join[meet[a * n + comp[b]] * n + meet[comp[a] * n + b]];
            add.push(sym as u8);
            mul.push(meet[a * n + b] as u8);
        }
    }
    let labels = ideals.iter().map(|j| j.render(ring)).collect();
    let algebra = FinBoolAlg::new(FiniteRing::from_tables(&format!("N({})", ring.name()), n, add, mul, labels)?)?;
    Ok(AnnihilatorAlgebra { ideals, algebra, points: ms.len(), report })
}
