//! Registry of named verification checks.
//!
//! A check generates its inputs as text and verifies them from text, so the
//! `inputs` of any failure replays through `qlab eval --op check:<name>`.

use std::fmt::Display;

use qlab_core::exactnum::{AlgebraicNumber, Polynomial, Rational};
use qlab_core::exec::Execution;
use qlab_core::finalg::{
    all_ideals, annihilator_algebra, dense_ideals, gamma_iso_E, hom_module, ideal_predicates, identity_embedding,
    is_ring_of_quotients, isomorphism, make_ring, q_max, ring_family, ring_predicates, stone_duality, FinBoolAlg,
    FiniteRing, Ideal,
};
use qlab_core::limits::{
    cyl_arith, cyl_norm, embedding_checks, exhaustive_hom_check, lift, parse_cylinder, points, CylOp, CylinderFunction,
};
use qlab_core::parse::{parse_algebraic, parse_function, parse_poly, parse_set};
use qlab_core::pwfun::{cozero_witness, pi_value, Norm, PiecewiseFunction};
use qlab_core::quotient::{
    archimedean_witness, c1_norm_demo, dense_ideal_test, fill_removable, idem_to_regopen, idempotent_le, idempotent_of,
    norm_witness_76, parse_qelement, regopen_to_idem, roq_witness, step_approx, unit_decomposition, witness_polynomial,
    QElement,
};
use qlab_core::topology::{reg_join, reg_meet, reg_not, Grid, IntervalSet};
use qlab_core::{Error, Result};

use crate::gen::Gen;

/// Outcome of one case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { expected: String, got: String },
}

/// How many cases a check runs.
#[derive(Clone, Copy, Debug)]
pub enum Cases {
    /// Randomly generated; `--cases` overrides the default.
    Random(usize),
    /// A fixed enumeration.
    Fixed(usize),
    /// One case per member of the finite ring family.
    Family,
}

pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub cases: Cases,
    pub generate: fn(&mut Gen, usize) -> Vec<String>,
    pub verify: fn(&[&str]) -> Result<Verdict>,
}

impl Check {
    pub fn id(&self) -> String {
        format!("{}/{}", self.suite, self.name)
    }

    pub fn case_count(&self, budget: Option<usize>) -> usize {
        match self.cases {
            Cases::Random(n) => budget.unwrap_or(n),
            Cases::Fixed(n) => n,
            Cases::Family => ring_family().len(),
        }
    }
}

/// Suite names accepted by `verify`, in run order.
pub const SUITES: [&str; 6] = ["topology", "pwfun", "quotient", "finring", "boolean", "limits"];

/// First failed expectation wins.
#[derive(Default)]
struct Probe {
    failure: Option<(String, String)>,
}

impl Probe {
    fn eq<T: PartialEq + Display>(&mut self, what: &str, got: &T, expected: &T) {
        if self.failure.is_none() && got != expected {
            self.failure = Some((format!("{what}: {expected}"), got.to_string()));
        }
    }

    fn holds(&mut self, what: &str, ok: bool) {
        if self.failure.is_none() && !ok {
            self.failure = Some((what.to_string(), "violated".to_string()));
        }
    }

    fn verdict(self) -> Result<Verdict> {
        Ok(match self.failure {
            None => Verdict::Pass,
            Some((expected, got)) => Verdict::Fail { expected, got },
        })
    }
}

fn usage(msg: String) -> Error {
    Error::Parse { pos: 0, msg }
}

fn arity(i: &[&str], lo: usize, hi: usize) -> Result<()> {
    if i.len() < lo || i.len() > hi {
        return Err(usage(format!("expected {lo} to {hi} inputs separated by '|', got {}", i.len())));
    }
    Ok(())
}

fn number<T: std::str::FromStr>(text: &str) -> Result<T> {
    text.trim().parse().map_err(|_| usage(format!("expected a non-negative integer, got '{text}'")))
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// A ring spec such as `Z2xF4`, or a JSON table description.
pub fn parse_ring(text: &str) -> Result<FiniteRing> {
    let text = text.trim();
    if text.starts_with('{') {
        FiniteRing::from_json("custom", text)
    } else {
        make_ring(text)
    }
}

fn family_member(_: &mut Gen, case: usize) -> Vec<String> {
    vec![ring_family()[case].clone()]
}

fn finite_norm(f: &PiecewiseFunction) -> Result<AlgebraicNumber> {
    match f.sup_norm() {
        Norm::Finite(v) => Ok(v),
        Norm::Infinite => Err(Error::Unbounded),
    }
}

// topology

fn regular_iff_fixed(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 1)?;
    let u = parse_set(i[0])?;
    u.require_open()?;
    let r = u.regularize()?;
    let mut p = Probe::default();
    p.eq("V regular iff V~~ = V", &(u.reg_complement().reg_complement() == u), &u.is_regular_open());
    p.eq("U~~ is regular", &r.is_regular_open(), &true);
    p.eq("U~~ is fixed", &r.reg_complement().reg_complement(), &r);
    p.holds("U is contained in U~~", u.is_subset(&r));
    p.verdict()
}

fn boolean_algebra_axioms(i: &[&str]) -> Result<Verdict> {
    arity(i, 3, 3)?;
    let mut sets = Vec::new();
    for t in i {
        let s = parse_set(t)?;
        s.require_open()?;
        sets.push(s.regularize()?);
    }
    let (a, b, c) = (&sets[0], &sets[1], &sets[2]);
    let meet = |x: &IntervalSet, y: &IntervalSet| reg_meet(x, y);
    let join = |x: &IntervalSet, y: &IntervalSet| reg_join(x, y);
    let (empty, full) = (IntervalSet::empty(), IntervalSet::full());
    let mut p = Probe::default();
    p.eq("meet associative", &meet(a, &meet(b, c)?)?, &meet(&meet(a, b)?, c)?);
    p.eq("join associative", &join(a, &join(b, c)?)?, &join(&join(a, b)?, c)?);
    p.eq("meet commutative", &meet(a, b)?, &meet(b, a)?);
    p.eq("join commutative", &join(a, b)?, &join(b, a)?);
    p.eq("meet distributes", &meet(a, &join(b, c)?)?, &join(&meet(a, b)?, &meet(a, c)?)?);
    p.eq("join distributes", &join(a, &meet(b, c)?)?, &meet(&join(a, b)?, &join(a, c)?)?);
    p.eq("absorption", &join(a, &meet(a, b)?)?, a);
    p.eq("absorption dual", &meet(a, &join(a, b)?)?, a);
    p.eq("complement meet", &meet(a, &reg_not(a)?)?, &empty);
    p.eq("complement join", &join(a, &reg_not(a)?)?, &full);
    p.eq("de Morgan meet", &reg_not(&meet(a, b)?)?, &join(&reg_not(a)?, &reg_not(b)?)?);
    p.eq("de Morgan join", &reg_not(&join(a, b)?)?, &meet(&reg_not(a)?, &reg_not(b)?)?);
    p.eq("meet is intersection", &meet(a, b)?, &a.intersect(b));
    p.holds("join contains union", a.union(b).is_subset(&join(a, b)?));
    p.verdict()
}

fn join_of_halves(i: &[&str]) -> Result<Verdict> {
    arity(i, 2, 2)?;
    let (a, b) = (parse_set(i[0])?, parse_set(i[1])?);
    let full = IntervalSet::full();
    let mut p = Probe::default();
    p.eq("regular join", &reg_join(&a, &b)?, &full);
    p.holds("join strictly exceeds the union", a.union(&b) != full);
    p.verdict()
}

// pwfun

fn functions(i: &[&str]) -> Result<Vec<PiecewiseFunction>> {
    i.iter().map(|t| parse_function(t)).collect()
}

fn pi_identities(i: &[&str]) -> Result<Verdict> {
    arity(i, 2, 2)?;
    let f = functions(i)?;
    let (a, b) = (&f[0], &f[1]);
    let (pa, pb) = (pi_value(a), pi_value(b));
    let papb = pa.mul(&pb)?;
    let s = pa.add(&pb)?;
    let mut p = Probe::default();
    p.eq("(pi a)^2 = a^2", &pa.pow(2), &a.pow(2));
    p.eq("pi(pi a + pi b) = pi a + pi b", &pi_value(&s), &s);
    p.eq("pi((pi a)(pi b)) = (pi a)(pi b)", &pi_value(&papb), &papb);
    p.eq("pi(ab) = (pi a)(pi b)", &pi_value(&a.mul(b)?), &papb);
    p.eq("pi(-a) = pi a", &pi_value(&a.neg()), &pa);
    p.holds("pi a >= 0", pa.is_nonnegative());
    p.eq("pi a = a iff a >= 0", &(&pa == a), &a.is_nonnegative());
    for c in [a.clone(), a.neg(), a.join(&a.neg())] {
        if c.is_nonnegative() && c.pow(2) == a.pow(2) {
            p.eq("uniqueness of pi-values", &c, &pa);
        }
    }
    p.verdict()
}

fn ring_laws(i: &[&str]) -> Result<Verdict> {
    arity(i, 3, 3)?;
    let f = functions(i)?;
    let (a, b, c) = (&f[0], &f[1], &f[2]);
    let mut p = Probe::default();
    p.eq("add associative", &a.add(&b.add(c)?)?, &a.add(b)?.add(c)?);
    p.eq("mul associative", &a.mul(&b.mul(c)?)?, &a.mul(b)?.mul(c)?);
    p.eq("add commutative", &a.add(b)?, &b.add(a)?);
    p.eq("mul commutative", &a.mul(b)?, &b.mul(a)?);
    p.eq("distributive", &a.mul(&b.add(c)?)?, &a.mul(b)?.add(&a.mul(c)?)?);
    p.holds("a - a = 0", a.sub(a)?.is_zero());
    p.verdict()
}

fn lattice_laws(i: &[&str]) -> Result<Verdict> {
    arity(i, 2, 2)?;
    let f = functions(i)?;
    let (a, b) = (&f[0], &f[1]);
    let zero = PiecewiseFunction::constant(&IntervalSet::full(), q(0, 1));
    let mut p = Probe::default();
    p.eq("2 (a v b) = a + b + |a - b|", &a.join(b).scale(&q(2, 1)), &a.add(b)?.add(&a.sub(b)?.abs())?);
    p.eq("a v b + a ^ b = a + b", &a.join(b).add(&a.meet(b))?, &a.add(b)?);
    p.holds("(a v 0)(a ^ 0) = 0", a.join(&zero).mul(&a.meet(&zero))?.is_zero());
    p.eq("|a| = pi a", &a.abs(), &pi_value(a));
    p.verdict()
}

fn formal_reality(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 3)?;
    let f = functions(i)?;
    let mut s = f[0].pow(2);
    for g in &f[1..] {
        s = s.add(&g.pow(2))?;
    }
    let all_zero = f.iter().all(PiecewiseFunction::is_zero);
    let mut p = Probe::default();
    p.holds("sum of squares is nonnegative", s.is_nonnegative());
    p.eq("sum of squares vanishes iff every term does", &finite_norm(&s)?.is_zero(), &all_zero);
    p.verdict()
}

fn sup_norm_axioms(i: &[&str]) -> Result<Verdict> {
    arity(i, 2, 2)?;
    let f = functions(i)?;
    let (a, b) = (&f[0], &f[1]);
    let (na, nb) = (finite_norm(a)?, finite_norm(b)?);
    let mut p = Probe::default();
    p.holds("|ab| <= |a| |b|", finite_norm(&a.mul(b)?)? <= na.mul(&nb));
    p.holds("|a + b| <= |a| + |b|", finite_norm(&a.add(b)?)? <= na.add(&nb));
    p.eq("|a| = 0 iff a = 0", &na.is_zero(), &a.is_zero());
    p.eq("|-a| = |a|", &finite_norm(&a.neg())?, &na);
    p.holds("bounded functions are closed under subtraction", a.sub(b)?.sup_norm().is_finite());
    p.eq("render round trip", &parse_function(&a.render())?, a);
    p.verdict()
}

fn cozero_witness_check(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 1)?;
    let u = parse_set(i[0])?;
    let w = cozero_witness(&u)?;
    let mut p = Probe::default();
    p.holds("witness is global", w.is_global());
    p.eq("cozero set of the witness", &w.cozero_set(), &u);
    p.verdict()
}

// quotient

fn q_elements(i: &[&str]) -> Result<Vec<QElement>> {
    i.iter().map(|t| parse_qelement(t)).collect()
}

fn quasi_inverse(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 1)?;
    let f = parse_qelement(i[0])?;
    let g = f.quasi_inverse();
    let mut p = Probe::default();
    p.eq("f^2 g = f", &f.pow(2).mul(&g), &f);
    p.eq("g^2 f = g", &g.pow(2).mul(&f), &g);
    p.verdict()
}

fn unit_decomp(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 1)?;
    let a = parse_qelement(i[0])?;
    let d = unit_decomposition(&a)?;
    let mut p = Probe::default();
    for (name, ok) in d.checks(&a) {
        p.holds(name, ok);
    }
    p.verdict()
}

fn domains_are_cozero(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 1)?;
    let dom = parse_qelement(i[0])?.domain();
    let mut p = Probe::default();
    p.eq("domain is a cozero set", &cozero_witness(&dom)?.cozero_set(), &dom);
    p.verdict()
}

fn step_check(i: &[&str]) -> Result<Verdict> {
    arity(i, 2, 2)?;
    let g = parse_qelement(i[0])?;
    let n: u32 = number(i[1])?;
    let trace = step_approx(&g, n)?;
    let s = trace.step.to_q();
    let err = finite_norm(g.sub(&s).rep())?;
    let mut p = Probe::default();
    p.holds("step element is locally constant", s.rep().is_locally_constant());
    p.holds("step domain is dense open", s.domain().is_dense() && s.domain().is_open());
    p.holds("sup |g - s| <= 1/n", err <= AlgebraicNumber::from(q(1, n.into())));
    p.verdict()
}

fn step_traced(i: &[&str]) -> Result<Verdict> {
    let mut p = Probe::default();
    if let Verdict::Fail { expected, got } = step_check(i)? {
        return Ok(Verdict::Fail { expected, got });
    }
    let g = parse_qelement(i[0])?;
    let trace = step_approx(&g, number(i[1])?)?;
    let values: Vec<String> = trace.parts.iter().map(|(v, _)| qlab_core::exactnum::rational::render(v)).collect();
    p.eq("part values", &values.join(", "), &"0, 1/2".to_string());
    p.eq("error", &finite_norm(g.sub(&trace.step.to_q()).rep())?, &AlgebraicNumber::from(q(1, 2)));
    p.verdict()
}

fn norm_witness(i: &[&str]) -> Result<Verdict> {
    arity(i, 2, 8)?;
    let point = parse_algebraic(i[0])?;
    let gens = functions(&i[1..])?;
    let w = norm_witness_76(&gens, &point)?;
    let mut p = Probe::default();
    p.eq("d(p)", &w.d.evaluate(&point)?, &AlgebraicNumber::one());
    p.eq("sup |d|", &finite_norm(&w.d)?, &AlgebraicNumber::one());
    p.verdict()
}

fn witness_poly(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 1)?;
    let n: u32 = number(i[0])?;
    let poly = witness_polynomial(n);
    let on_unit = PiecewiseFunction::polynomial(&IntervalSet::full(), poly.clone());
    let mut p = Probe::default();
    p.eq("P(1)", &poly.eval(&q(1, 1)), &q(1, 1));
    p.eq("max of P on [0, 1]", &finite_norm(&on_unit)?, &AlgebraicNumber::one());
    p.holds("P >= 0 on [0, 1]", on_unit.is_nonnegative());
    p.verdict()
}

fn c1_ratio(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 1)?;
    let d = &Polynomial::x() * &parse_poly(i[0])?;
    let (ratio, nu_x) = c1_norm_demo(&d)?;
    let mut p = Probe::default();
    p.eq("nu(x)", &nu_x, &AlgebraicNumber::from_int(2));
    p.holds("nu(x d)/nu(d) <= 3/2", ratio <= AlgebraicNumber::from(q(3, 2)));
    p.verdict()
}

fn idempotents(i: &[&str]) -> Result<Verdict> {
    arity(i, 2, 2)?;
    let (u, v) = (parse_set(i[0])?, parse_set(i[1])?);
    let (ru, rv) = (u.regularize()?, v.regularize()?);
    let (e, f) = (idempotent_of(&u)?, idempotent_of(&v)?);
    let one = QElement::one();
    let mut p = Probe::default();
    p.holds("e is idempotent", e.is_idempotent());
    p.eq("E to B", &idem_to_regopen(&e)?, &ru);
    p.eq("B to E", &regopen_to_idem(&ru)?, &e);
    p.eq("ef is the meet", &idem_to_regopen(&e.mul(&f))?, &reg_meet(&ru, &rv)?);
    p.eq("e + f - ef is the join", &idem_to_regopen(&e.add(&f).sub(&e.mul(&f)))?, &reg_join(&ru, &rv)?);
    p.eq("1 - e is the complement", &idem_to_regopen(&one.sub(&e))?, &reg_not(&ru)?);
    p.eq("injective", &(e == f), &(ru == rv));
    p.eq("order", &idempotent_le(&e, &f), &(e.mul(&f) == e));
    p.eq("order matches inclusion", &idempotent_le(&e, &f), &ru.is_subset(&rv));
    p.verdict()
}

/// Density of the cozero union decided cell by cell on the merged grid.
pub fn brute_force_dense(gens: &[PiecewiseFunction]) -> bool {
    let grid = gens.iter().fold(Grid::unit(), |g, f| g.merge(f.grid()));
    let tables: Vec<_> = gens.iter().map(|f| f.table_on(&grid)).collect();
    (1..grid.atom_count())
        .step_by(2)
        .all(|a| tables.iter().any(|t| t[a].as_ref().is_some_and(|r| !r.is_zero())))
}

fn dense_ideal(i: &[&str]) -> Result<Verdict> {
    arity(i, 2, 8)?;
    let cut = parse_set(i[0])?;
    let mut gens = functions(&i[1..])?;
    gens[0] = gens[0].mul(&cozero_witness(&cut)?)?;
    let mut p = Probe::default();
    p.eq("dense ideal test agrees with brute force", &dense_ideal_test(&gens), &brute_force_dense(&gens));
    p.verdict()
}

fn no_infinitesimals(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 1)?;
    let a = parse_function(i[0])?.pow(2);
    let mut p = Probe::default();
    if !a.is_zero() {
        let n = archimedean_witness(&a)?;
        let na = a.scale(&Rational::from_integer(n));
        p.holds("n a exceeds 1 somewhere", finite_norm(&na)? > AlgebraicNumber::one());
    }
    p.verdict()
}

fn roq(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 1)?;
    let h = q_elements(i)?.remove(0);
    let mut p = Probe::default();
    if !h.is_zero() {
        let a = roq_witness(&h)?;
        let ha = fill_removable(&h.rep().mul(&a)?);
        p.holds("a is global", a.is_global());
        p.holds("h a extends to a global function", ha.is_global());
        p.holds("h a is nonzero", !ha.is_zero());
    }
    p.verdict()
}

// finring and boolean

fn lemma_large_dense(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 1)?;
    let r = parse_ring(i[0])?;
    let flags = ring_predicates(&r);
    let mut p = Probe::default();
    p.eq("semi-prime iff every large ideal is dense", &flags.large_implies_dense, &flags.semi_prime);
    for id in all_ideals(&r) {
        let f = ideal_predicates(&r, id);
        p.holds("dense ideals are large", !f.dense || f.large);
    }
    p.holds("regular implies semi-simple", !flags.regular || flags.semi_simple);
    p.holds("semi-simple implies semi-prime", !flags.semi_simple || flags.semi_prime);
    p.verdict()
}

fn qmax_identity(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 1)?;
    let r = parse_ring(i[0])?;
    let whole = Ideal::whole(&r);
    let qm = q_max(&r)?;
    let mut p = Probe::default();
    p.eq("dense ideals", &render_ideals(&r, &dense_ideals(&r)), &render_ideals(&r, &[whole]));
    p.eq("|Hom(A, A)|", &hom_module(&r, whole).len(), &r.order());
    p.holds("embedding is onto", qm.is_onto());
    p.holds("q_max is isomorphic to the ring", isomorphism(&qm.ring, &r).is_some());
    p.holds("q_max is a ring of quotients", is_ring_of_quotients(&r, &qm.ring, &qm.embedding)?);
    p.holds("A is a ring of quotients of A", is_ring_of_quotients(&r, &r, &identity_embedding(&r))?);
    p.verdict()
}

fn render_ideals(r: &FiniteRing, ideals: &[Ideal]) -> String {
    ideals.iter().map(|i| i.render(r)).collect::<Vec<_>>().join(" ")
}

fn gamma_power_set(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 1)?;
    let r = parse_ring(i[0])?;
    let semi_simple = ring_predicates(&r).semi_simple;
    let mut p = Probe::default();
    match gamma_iso_E(&r) {
        Ok(g) => {
            p.holds("only semi-simple rings are accepted", semi_simple);
            p.eq("|E(A)| = 2^|M(A)|", &g.idempotents, &(1usize << g.points));
            if let Some(f) = g.report.failures.first() {
                p.holds(f, false);
            }
        }
        Err(Error::NotSemiSimple) => p.holds("semi-simple rings are accepted", !semi_simple),
        Err(e) => return Err(e),
    }
    p.verdict()
}

fn translation_identities(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 1)?;
    let r = parse_ring(i[0])?;
    let b = FinBoolAlg::from_idempotents(&r)?;
    let s = stone_duality(&b);
    let mut p = Probe::default();
    p.eq("pairs checked", &s.pairs, &(b.size() * b.size()));
    if let Some(f) = s.report.failures.first() {
        p.holds(f, false);
    }
    p.verdict()
}

fn annihilator_ideals(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 1)?;
    let r = parse_ring(i[0])?;
    let semi_prime = ring_predicates(&r).semi_prime;
    let mut p = Probe::default();
    match annihilator_algebra(&r) {
        Ok(a) => {
            p.holds("only semi-prime rings are accepted", semi_prime);
            p.eq("|N(A)| = 2^|M(A)|", &a.ideals.len(), &(1usize << a.points));
            if let Some(f) = a.report.failures.first() {
                p.holds(f, false);
            }
        }
        Err(Error::NotSemiPrime) => p.holds("semi-prime rings are accepted", !semi_prime),
        Err(e) => return Err(e),
    }
    p.verdict()
}

fn stone_round_trip(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 1)?;
    let k: usize = number(i[0])?;
    let b = FinBoolAlg::power_set(k)?;
    let s = stone_duality(&b);
    let mut p = Probe::default();
    p.eq("atoms", &s.atoms, &k);
    p.eq("maximal ideals", &s.max_ideals, &k);
    p.eq("pairs", &s.pairs, &(1usize << (2 * k)));
    if let Some(f) = s.report.failures.first() {
        p.holds(f, false);
    }
    p.verdict()
}

// limits

fn cylinders(i: &[&str]) -> Result<Vec<CylinderFunction>> {
    i.iter().map(|t| parse_cylinder(t)).collect()
}

fn cyl_op(text: &str) -> Result<CylOp> {
    CylOp::ALL
        .into_iter()
        .find(|o| o.name() == text.trim())
        .ok_or_else(|| usage(format!("unknown operation '{text}'")))
}

fn lift_check(i: &[&str]) -> Result<Verdict> {
    arity(i, 3, 3)?;
    let c = cylinders(&i[..2])?;
    let (f, g) = (&c[0], &c[1]);
    let m: usize = number(i[2])?;
    let (lf, lg) = (lift(f, m)?, lift(g, m)?);
    let mut p = Probe::default();
    p.eq("lift is injective", &(lf == lg), &(f == g));
    p.eq("lift preserves the norm", &cyl_norm(&lf), &cyl_norm(f));
    p.eq("canonical form of the lift", &lf.canonical(), f);
    p.verdict()
}

fn ops_commute(i: &[&str]) -> Result<Verdict> {
    arity(i, 4, 4)?;
    let c = cylinders(&i[..2])?;
    let (f, g) = (&c[0], &c[1]);
    let op = cyl_op(i[2])?;
    let m: usize = number(i[3])?;
    let h = cyl_arith(f, g, op);
    let mut p = Probe::default();
    p.holds("result is canonical", h.is_canonical());
    p.eq("operation commutes with lift", &cyl_arith(&lift(f, m)?, &lift(g, m)?, op), &h);
    for x in points(m) {
        let (a, b) = (f.evaluate(&x)?, g.evaluate(&x)?);
        let expected = match op {
            CylOp::Add => a + b,
            CylOp::Sub => a - b,
            CylOp::Mul => a * b,
            CylOp::Join => a.max(b).clone(),
            CylOp::Meet => a.min(b).clone(),
        };
        p.eq("pointwise value", &qlab_core::exactnum::rational::render(h.evaluate(&x)?), &qlab_core::exactnum::rational::render(&expected));
    }
    p.verdict()
}

fn embedding(i: &[&str]) -> Result<Verdict> {
    arity(i, 2, 8)?;
    let l: usize = number(i[0])?;
    let sample = cylinders(&i[1..])?;
    let report = embedding_checks(l, &sample)?;
    let mut p = Probe::default();
    if let Some(f) = report.failures.first() {
        p.holds(f, false);
    }
    p.verdict()
}

fn exhaustive(i: &[&str]) -> Result<Verdict> {
    arity(i, 1, 1)?;
    let depth: usize = number(i[0])?;
    if depth > 3 {
        return Err(usage(format!("exhaustive depth {depth} exceeds 3")));
    }
    let (pairs, failures) = exhaustive_hom_check(depth, Execution::Parallel);
    let side = 3usize.pow(1u32 << depth);
    let mut p = Probe::default();
    p.eq("pairs checked", &pairs, &(side * side));
    if let Some(f) = failures.first() {
        p.holds(f, false);
    }
    p.verdict()
}

macro_rules! check {
    ($suite:literal, $name:literal, $cases:expr, $gen:expr, $verify:expr) => {
        Check { suite: $suite, name: $name, cases: $cases, generate: $gen, verify: $verify }
    };
}

fn two_opens(g: &mut Gen, _: usize) -> Vec<String> {
    vec![g.open_set(), g.open_set()]
}

/// Every check, grouped by suite in run order.
pub fn registry() -> Vec<Check> {
    use Cases::{Family, Fixed, Random};
    vec![
        check!("topology", "regular_iff_fixed", Random(500), |g, _| vec![g.open_set()], regular_iff_fixed),
        check!("topology", "boolean_algebra_axioms", Random(500), |g, _| vec![g.open_set(), g.open_set(), g.open_set()], boolean_algebra_axioms),
        check!("topology", "join_of_halves", Fixed(1), |_, _| vec!["[0,1/2)".into(), "(1/2,1]".into()], join_of_halves),
        check!("pwfun", "pi_identities", Random(200), |g, _| vec![g.global_function(), g.global_function()], pi_identities),
        check!("pwfun", "ring_laws", Random(100), |g, _| vec![g.global_function(), g.global_function(), g.global_function()], ring_laws),
        check!("pwfun", "lattice_laws", Random(100), |g, _| vec![g.global_function(), g.global_function()], lattice_laws),
        check!("pwfun", "formal_reality", Random(50), |g, _| vec![g.light_function(), g.light_function(), g.light_function()], formal_reality),
        check!("pwfun", "sup_norm_axioms", Random(100), |g, _| vec![g.global_function(), g.global_function()], sup_norm_axioms),
        check!("pwfun", "cozero_witness", Random(200), |g, _| vec![g.open_set()], cozero_witness_check),
        check!("quotient", "quasi_inverse", Random(200), |g, _| vec![g.q_function()], quasi_inverse),
        check!("quotient", "unit_decomposition", Random(200), |g, _| vec![g.q_function()], unit_decomp),
        check!("quotient", "domains_are_cozero_sets", Random(200), |g, _| vec![g.q_function()], domains_are_cozero),
        check!("quotient", "step_approx", Random(100), |g, _| vec![g.bounded_q_function(), g.int(1, 8).to_string()], step_check),
        check!("quotient", "step_approx_traced", Fixed(1), |_, _| vec!["x".into(), "2".into()], step_traced),
        check!("quotient", "norm_witness", Random(100), |g, _| {
            let mut v = vec![g.point(), "x".to_string()];
            for _ in 0..g.int(0, 2) {
                v.push(g.global_function());
            }
            v
        }, norm_witness),
        check!("quotient", "witness_polynomial", Fixed(8), |_, k| vec![(k + 1).to_string()], witness_poly),
        check!("quotient", "c1_ratio", Random(100), |g, _| vec![g.nonzero_poly(3).render()], c1_ratio),
        check!("quotient", "idempotents", Random(100), two_opens, idempotents),
        check!("quotient", "dense_ideal", Random(200), |g, _| {
            let mut v = vec![g.open_set()];
            for _ in 0..g.int(1, 3) {
                v.push(g.global_function());
            }
            v
        }, dense_ideal),
        check!("quotient", "no_infinitesimals", Random(100), |g, _| vec![g.global_function()], no_infinitesimals),
        check!("quotient", "roq_witness", Random(100), |g, _| vec![g.q_function()], roq),
        check!("finring", "large_ideals_dense", Family, family_member, lemma_large_dense),
        check!("finring", "qmax_is_identity", Family, family_member, qmax_identity),
        check!("finring", "gamma_power_set", Family, family_member, gamma_power_set),
        check!("finring", "translation_identities", Family, family_member, translation_identities),
        check!("boolean", "annihilator_algebra", Family, family_member, annihilator_ideals),
        check!("boolean", "stone_round_trip", Fixed(5), |_, k| vec![k.to_string()], stone_round_trip),
        check!("limits", "lift", Random(200), |g, _| vec![g.cylinder(4), g.cylinder(4), g.int(4, 8).to_string()], lift_check),
        check!("limits", "ops_commute", Random(200), |g, _| {
            let op = CylOp::ALL[g.index(CylOp::ALL.len())].name().to_string();
            vec![g.cylinder(4), g.cylinder(4), op, g.int(4, 8).to_string()]
        }, ops_commute),
        check!("limits", "embedding", Random(100), |g, _| {
            let mut v = vec![g.int(3, 8).to_string()];
            for _ in 0..g.int(1, 5) {
                v.push(g.cylinder(3));
            }
            v
        }, embedding),
        check!("limits", "exhaustive", Fixed(1), |_, _| vec!["3".into()], exhaustive),
    ]
}

/// Looks a check up by `suite/name` or by its bare name.
pub fn find(name: &str) -> Option<Check> {
    registry().into_iter().find(|c| c.name == name || c.id() == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_suites_known() {
        let reg = registry();
        let names: std::collections::BTreeSet<_> = reg.iter().map(|c| c.name).collect();
        assert_eq!(names.len(), reg.len());
        assert!(reg.iter().all(|c| SUITES.contains(&c.suite)));
    }

    #[test]
    fn fixed_checks_pass() {
        for c in registry().iter().filter(|c| matches!(c.cases, Cases::Fixed(_)) && c.name != "exhaustive") {
            for k in 0..c.case_count(None) {
                let inputs = (c.generate)(&mut Gen::for_case(0, &c.id(), k, 3), k);
                let refs: Vec<&str> = inputs.iter().map(String::as_str).collect();
                assert_eq!((c.verify)(&refs).unwrap(), Verdict::Pass, "{}", c.id());
            }
        }
    }

    #[test]
    fn violations_are_reported() {
        assert!(matches!(join_of_halves(&["[0,1/2)", "(1/3,1]"]).unwrap(), Verdict::Fail { .. }));
        let v = ring_laws(&["x", "1", "x^2"]).unwrap();
        assert_eq!(v, Verdict::Pass);
        assert!(arity(&["x"], 2, 2).is_err());
        assert!(stone_round_trip(&["two"]).is_err());
    }
}
