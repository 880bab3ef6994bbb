//! The q-symmetric algebra `S(L) = U(L⁰)` and the recursive action of `L`
//! on it.
//!
//! `L⁰` keeps the presymmetry and grading of `L` but has zero bracket and
//! pseudobracket, so `S(L)` is free on sorted monomials `z_Σ`. The action
//! `x·z_Σ` is defined by a double induction on `η(x)+η(Σ)`: prepend when
//! `x ≤ Σ` (clause A), otherwise split `Σ = (μ, N)` at its minimal letter
//! and recurse through `T(x⊗μ)` and `[x,μ]`. Clause B — the defect
//! `x·z_Σ − z_x z_Σ` stays in the filtration level `η(x)+η(Σ)−1` — is
//! audited for every value the cache ever computes.
//!
//! For adequate specs the action is a representation of `U(L)` and acting on
//! `1` sends distinct PBW monomials to distinct basis monomials of `S(L)`,
//! which is the linear-independence half of the PBW theorem. The
//! representation property — clause (C), `x·(y·v) = T(x⊗y)·v + [x,y]·v` —
//! is checked exactly on all pairs up to an η bound, and its failure is the
//! refutation path for non-adequate specs.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::algebra::{BasisId, TLieSpec, TensorPoly, Word};
use crate::scalar::LaurentScalar;

/// Element of the q-symmetric algebra: sorted monomials with coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymPoly {
    terms: BTreeMap<Word, LaurentScalar>,
}

impl SymPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `z_∅ = 1`.
    pub fn one() -> Self {
        Self::monomial(Word::empty())
    }

    pub fn monomial(w: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(w, LaurentScalar::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> LaurentScalar {
        self.terms.get(w).cloned().unwrap_or_else(LaurentScalar::zero)
    }

    pub fn as_tensor(&self) -> TensorPoly {
        let mut t = TensorPoly::zero();
        for (w, c) in &self.terms {
            t.add_term(w.clone(), c.clone());
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, s: &LaurentScalar) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.mul(s));
        }
        out
    }

    fn add_term(&mut self, w: Word, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly({} terms)", self.terms.len())
    }
}

fn sym_word(spec: &TLieSpec, w: &Word, c: &LaurentScalar, out: &mut SymPoly) {
    let letters = w.letters();
    for i in 0..letters.len().saturating_sub(1) {
        let (x, y) = (letters[i], letters[i + 1]);
        if x > y {
            // swap rule of L⁰: x⊗y → q_{x,y}·y⊗x
            let mut v = letters.to_vec();
            v.swap(i, i + 1);
            sym_word(spec, &Word(v), &c.mul(&spec.sym_coeff(x, y)), out);
            return;
        }
        if x == y && !spec.sym_coeff(x, x).is_one() {
            // 2x² = 0 in S(L) when q_{x,x} = -1
            return;
        }
    }
    out.add_term(w.clone(), c.clone());
}

/// Sort every word using only the swap rule of `L⁰` (zero brackets);
/// squares of `-1`-diagonal letters vanish.
pub fn sym_normalize(spec: &TLieSpec, t: &TensorPoly) -> SymPoly {
    let mut out = SymPoly::zero();
    for (w, c) in t.terms() {
        sym_word(spec, w, c, &mut out);
    }
    out
}

/// Product of `S(L)`.
pub fn sym_mul(spec: &TLieSpec, a: &SymPoly, b: &SymPoly) -> SymPoly {
    sym_normalize(spec, &a.as_tensor().tensor(&b.as_tensor()))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ActError {
    /// The η-measure failed to descend; impossible for stability-checked
    /// specs, kept as a guard for hand-built tables that break stability.
    #[error("action recursion did not descend: η({x})+η({monomial}) = {need} ≥ budget {budget}")]
    RecursionBoundExceeded {
        x: String,
        monomial: String,
        need: u64,
        budget: u64,
    },
}

/// A cached action value whose clause-B filtration bound failed.
#[derive(Debug, Clone)]
pub struct ClauseBViolation {
    pub x: BasisId,
    pub monomial: Word,
    pub excess_term: Word,
    pub bound: u64,
}

/// Memo table for the action recursion. Values are pure functions of
/// `(spec, x, monomial)`; concurrent fills of the same key would agree, so
/// the cache behaves as write-once. Every inserted value is audited against
/// the clause-B filtration bound.
#[derive(Default)]
pub struct ActionCache {
    memo: HashMap<(BasisId, Word), SymPoly>,
    violations: Vec<ClauseBViolation>,
}

impl ActionCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// Clause-B violations observed while filling the cache (empty for
    /// every spec satisfying the stability axiom).
    pub fn clause_b_violations(&self) -> &[ClauseBViolation] {
        &self.violations
    }

    /// Re-derive every cached value from scratch and compare; the memo is
    /// coherent when no key disagrees.
    pub fn audit_coherence(&self, spec: &TLieSpec) -> bool {
        self.memo.iter().all(|((x, m), v)| {
            let mut fresh = ActionCache::new();
            act(spec, &mut fresh, *x, m).map(|r| &r == v).unwrap_or(false)
        })
    }
}

/// `x · z_m` by the clause A / clause B recursion.
pub fn act(
    spec: &TLieSpec,
    cache: &mut ActionCache,
    x: BasisId,
    m: &Word,
) -> Result<SymPoly, ActError> {
    act_bounded(spec, cache, x, m, u64::MAX)
}

fn act_bounded(
    spec: &TLieSpec,
    cache: &mut ActionCache,
    x: BasisId,
    m: &Word,
    budget: u64,
) -> Result<SymPoly, ActError> {
    let need = spec.grade(x) as u64 + spec.word_grade(m);
    if need >= budget {
        return Err(ActError::RecursionBoundExceeded {
            x: spec.element(x).id.clone(),
            monomial: spec.render_word(m),
            need,
            budget,
        });
    }
    if let Some(hit) = cache.memo.get(&(x, m.clone())) {
        return Ok(hit.clone());
    }
    let z_x = SymPoly::monomial(Word::single(x));
    let z_m = SymPoly::monomial(m.clone());
    let result = if m.is_empty() || x <= m.letters()[0] {
        // clause (A): x·z_Σ = z_x z_Σ for x ≤ Σ
        sym_mul(spec, &z_x, &z_m)
    } else {
        // split Σ = (μ, N) at the minimal letter
        let mu = m.letters()[0];
        let n = Word(m.letters()[1..].to_vec());
        let z_n = SymPoly::monomial(n.clone());
        let q = spec.sym_coeff(x, mu);

        let x_n = act_bounded(spec, cache, x, &n, need)?;
        let w = x_n.sub(&sym_mul(spec, &z_x, &z_n));

        // q_{xμ}·z_μ z_x z_N
        let mut acc = sym_mul(spec, &SymPoly::monomial(Word::single(mu)), &sym_mul(spec, &z_x, &z_n))
            .scale(&q);
        // q_{xμ}·μ·w
        acc = acc.add(&act_poly_bounded(spec, cache, mu, &w, need)?.scale(&q));
        // Σ ξᵢ·aᵢ·(bᵢ·z_N) from the pseudobracket part of T(x⊗μ)
        for (pair, xi) in spec.pseudo_of(x, mu).terms() {
            let (a, b) = (pair.letters()[0], pair.letters()[1]);
            let inner = act_bounded(spec, cache, b, &n, need)?;
            acc = acc.add(&act_poly_bounded(spec, cache, a, &inner, need)?.scale(xi));
        }
        // [x,μ]·z_N
        for (zw, c) in spec.bracket_of(x, mu).terms() {
            let v = act_bounded(spec, cache, zw.letters()[0], &n, need)?;
            acc = acc.add(&v.scale(c));
        }
        acc
    };
    // clause (B) audit: x·z_m − z_x z_m ∈ P_{η(x)+η(m)−1}
    let defect = result.sub(&sym_mul(spec, &z_x, &z_m));
    let bound = need - 1;
    for (w, _) in defect.terms() {
        if spec.word_grade(w) > bound {
            cache.violations.push(ClauseBViolation {
                x,
                monomial: m.clone(),
                excess_term: w.clone(),
                bound,
            });
        }
    }
    cache.memo.insert((x, m.clone()), result.clone());
    Ok(result)
}

fn act_poly_bounded(
    spec: &TLieSpec,
    cache: &mut ActionCache,
    x: BasisId,
    p: &SymPoly,
    budget: u64,
) -> Result<SymPoly, ActError> {
    let mut out = SymPoly::zero();
    for (w, c) in p.terms() {
        out = out.add(&act_bounded(spec, cache, x, w, budget)?.scale(c));
    }
    Ok(out)
}

/// Linear extension of the action to `S(L)` arguments.
pub fn act_poly(
    spec: &TLieSpec,
    cache: &mut ActionCache,
    x: BasisId,
    p: &SymPoly,
) -> Result<SymPoly, ActError> {
    act_poly_bounded(spec, cache, x, p, u64::MAX)
}

/// `(x₁⊗…⊗xₖ)·v = x₁·(…·(xₖ·v))`: right-to-left fold of the action.
pub fn act_word(
    spec: &TLieSpec,
    cache: &mut ActionCache,
    w: &Word,
    m: &Word,
) -> Result<SymPoly, ActError> {
    let mut v = SymPoly::monomial(m.clone());
    for &x in w.letters().iter().rev() {
        v = act_poly(spec, cache, x, &v)?;
    }
    Ok(v)
}

/// Linear extension of [`act_word`] to tensor polynomials.
pub fn act_tensor(
    spec: &TLieSpec,
    cache: &mut ActionCache,
    t: &TensorPoly,
    m: &Word,
) -> Result<SymPoly, ActError> {
    let mut out = SymPoly::zero();
    for (w, c) in t.terms() {
        out = out.add(&act_word(spec, cache, w, m)?.scale(c));
    }
    Ok(out)
}

/// All sorted monomials with total grade at most `max_eta`, lexicographic.
pub fn sym_monomials_up_to_eta(spec: &TLieSpec, max_eta: u64) -> Vec<Word> {
    let mut out = Vec::new();
    let mut stack: Vec<BasisId> = Vec::new();
    fn extend(
        spec: &TLieSpec,
        stack: &mut Vec<BasisId>,
        used: u64,
        max_eta: u64,
        out: &mut Vec<Word>,
    ) {
        out.push(Word(stack.clone()));
        let from = stack.last().map(|&x| x.index()).unwrap_or(0);
        for i in from..spec.dim() {
            let x = BasisId(i as u32);
            let g = spec.grade(x) as u64;
            if used + g > max_eta {
                continue;
            }
            if Some(&x) == stack.last() && !spec.sym_coeff(x, x).is_one() {
                continue;
            }
            stack.push(x);
            extend(spec, stack, used + g, max_eta, out);
            stack.pop();
        }
    }
    extend(spec, &mut stack, 0, max_eta, &mut out);
    out
}

#[derive(Debug, Clone)]
pub struct LemmaCWitness {
    pub lambda: BasisId,
    pub mu: BasisId,
    pub monomial: Word,
    pub discrepancy: SymPoly,
}

/// Outcome of checking the representation property
/// `x_λ·(x_μ·z_N) = T(x_λ⊗x_μ)·z_N + [x_λ,x_μ]·z_N`
/// for all basis pairs and monomials with `η(λ)+η(μ)+η(N)` within bound.
#[derive(Debug, Clone)]
pub struct LemmaCReport {
    pub bound: u64,
    pub checked: usize,
    /// First witnesses, capped; `failure_count` holds the true total.
    pub witnesses: Vec<LemmaCWitness>,
    pub failure_count: usize,
    pub clause_b_violations: usize,
}

impl LemmaCReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0 && self.clause_b_violations == 0
    }
}

pub fn check_lemma_c(spec: &TLieSpec, max_total_eta: u64) -> Result<LemmaCReport, ActError> {
    let mut cache = ActionCache::new();
    let mut report = LemmaCReport {
        bound: max_total_eta,
        checked: 0,
        witnesses: Vec::new(),
        failure_count: 0,
        clause_b_violations: 0,
    };
    for lambda in spec.ids() {
        for mu in spec.ids() {
            let head = spec.grade(lambda) as u64 + spec.grade(mu) as u64;
            if head > max_total_eta {
                continue;
            }
            for n in sym_monomials_up_to_eta(spec, max_total_eta - head) {
                report.checked += 1;
                let inner = act(spec, &mut cache, mu, &n)?;
                let lhs = act_poly(spec, &mut cache, lambda, &inner)?;
                let rhs = act_tensor(spec, &mut cache, &spec.t_of(lambda, mu), &n)?.add(
                    &spec
                        .bracket_of(lambda, mu)
                        .terms()
                        .map(|(w, c)| {
                            act(spec, &mut cache, w.letters()[0], &n).map(|v| v.scale(c))
                        })
                        .collect::<Result<Vec<_>, _>>()?
                        .into_iter()
                        .fold(SymPoly::zero(), |a, b| a.add(&b)),
                );
                let d = lhs.sub(&rhs);
                if !d.is_zero() {
                    report.failure_count += 1;
                    if report.witnesses.len() < 8 {
                        report.witnesses.push(LemmaCWitness {
                            lambda,
                            mu,
                            monomial: n.clone(),
                            discrepancy: d,
                        });
                    }
                }
            }
        }
    }
    report.clause_b_violations = cache.clause_b_violations().len();
    Ok(report)
}

#[derive(Debug, Clone)]
pub enum RefutationWitness {
    /// The representation property failed; PBW independence has no footing.
    LemmaC(LemmaCWitness),
    /// A PBW monomial acted on 1 missed its own basis monomial.
    Monomial { monomial: Word, acts_to: SymPoly },
}

#[derive(Debug, Clone)]
pub enum CertificateOutcome {
    /// `act(Σ, 1) = z_Σ` for every PBW monomial of length ≤ `max_len` and
    /// clause C held at the covering bound: the monomials are free.
    Certified {
        monomials: usize,
        lemma_c_bound: u64,
    },
    Refuted { witness: Box<RefutationWitness> },
}

#[derive(Debug, Error, Clone)]
pub enum CertError {
    #[error("lemma C evidence covers η ≤ {provided}, but words of length {max_len} need η ≤ {required}")]
    PreconditionViolated {
        max_len: usize,
        required: u64,
        provided: u64,
    },
    #[error(transparent)]
    Action(#[from] ActError),
}

/// The η bound on lemma C needed to certify words of length `max_len`.
pub fn covering_bound(spec: &TLieSpec, max_len: usize) -> u64 {
    let max_grade = spec.basis().iter().map(|b| b.grade as u64).max().unwrap_or(0);
    max_len as u64 * max_grade
}

/// Certify or refute linear independence of the PBW monomials of length at
/// most `max_len` by acting on `1 ∈ S(L)`. Runs the lemma C precondition at
/// the covering bound internally.
pub fn independence_certificate(
    spec: &TLieSpec,
    max_len: usize,
) -> Result<CertificateOutcome, CertError> {
    let evidence = check_lemma_c(spec, covering_bound(spec, max_len))?;
    certificate_from_evidence(spec, max_len, &evidence)
}

/// Same as [`independence_certificate`], reusing existing lemma C evidence.
pub fn certificate_from_evidence(
    spec: &TLieSpec,
    max_len: usize,
    evidence: &LemmaCReport,
) -> Result<CertificateOutcome, CertError> {
    let required = covering_bound(spec, max_len);
    if evidence.bound < required {
        return Err(CertError::PreconditionViolated {
            max_len,
            required,
            provided: evidence.bound,
        });
    }
    if let Some(w) = evidence.witnesses.first() {
        return Ok(CertificateOutcome::Refuted {
            witness: Box::new(RefutationWitness::LemmaC(w.clone())),
        });
    }
    let mut cache = ActionCache::new();
    let monomials = crate::enveloping::enumerate_pbw(spec, max_len);
    for m in &monomials {
        let acted = act_word(spec, &mut cache, m.word(), &Word::empty())?;
        if acted != SymPoly::monomial(m.word().clone()) {
            return Ok(CertificateOutcome::Refuted {
                witness: Box::new(RefutationWitness::Monomial {
                    monomial: m.word().clone(),
                    acts_to: acted,
                }),
            });
        }
    }
    Ok(CertificateOutcome::Certified {
        monomials: monomials.len(),
        lemma_c_bound: evidence.bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::enveloping;
    use crate::scalar::Rational;
    use num::BigInt;

    fn q() -> LaurentScalar {
        LaurentScalar::var(0)
    }

    fn word(spec: &TLieSpec, ids: &[&str]) -> Word {
        Word(ids.iter().map(|id| spec.id_of(id).unwrap()).collect())
    }

    #[test]
    fn sym_normalize_examples() {
        let spec = catalog::make_sl_plus_q(2);
        // e23⊗e12 → q·z_{e12}z_{e23}
        let t = TensorPoly::from_word(word(&spec, &["e23", "e12"]));
        let s = sym_normalize(&spec, &t);
        assert_eq!(s.term_count(), 1);
        assert_eq!(s.coefficient(&word(&spec, &["e12", "e23"])), q());
        // sorted input is fixed
        let t = TensorPoly::from_word(word(&spec, &["e12", "e23"]));
        assert_eq!(sym_normalize(&spec, &t).as_tensor(), t);
        // x⊗x with q_{x,x} = -1 dies
        let sup = catalog::make_super_demo();
        let t = TensorPoly::from_word(word(&sup, &["x", "x"]));
        assert!(sym_normalize(&sup, &t).is_zero());
    }

    #[test]
    fn action_clause_a_and_recursion() {
        let spec = catalog::make_sl_plus_q(2);
        let mut cache = ActionCache::new();
        // act(e23, 1) = z_{e23}
        let e23 = spec.id_of("e23").unwrap();
        assert_eq!(
            act(&spec, &mut cache, e23, &Word::empty()).unwrap(),
            SymPoly::monomial(word(&spec, &["e23"]))
        );
        // act(e12, z_{e23}) = z_{e12}z_{e23}
        let e12 = spec.id_of("e12").unwrap();
        assert_eq!(
            act(&spec, &mut cache, e12, &word(&spec, &["e23"])).unwrap(),
            SymPoly::monomial(word(&spec, &["e12", "e23"]))
        );
        // act(e23, z_{e12}) = q·z12·z23 − q·z13 by the recursion
        let got = act(&spec, &mut cache, e23, &word(&spec, &["e12"])).unwrap();
        let mut expect = SymPoly::monomial(word(&spec, &["e12", "e23"])).scale(&q());
        expect = expect.sub(&SymPoly::monomial(word(&spec, &["e13"])).scale(&q()));
        assert_eq!(got, expect);
        assert!(cache.clause_b_violations().is_empty());
        assert!(cache.audit_coherence(&spec));
    }

    #[test]
    fn act_word_matches_normalized_action() {
        let spec = catalog::make_sl_plus_q(2);
        let mut cache = ActionCache::new();
        // act_word(e12⊗e23, 1) = z12 z23 by two clause-A steps
        let t = word(&spec, &["e12", "e23"]);
        assert_eq!(
            act_word(&spec, &mut cache, &t, &Word::empty()).unwrap(),
            SymPoly::monomial(t.clone())
        );
        // representation respects the enveloping relations:
        // act(e23⊗e12, 1) = act(normalize(e23⊗e12), 1)
        let dis = TensorPoly::from_word(word(&spec, &["e23", "e12"]));
        let lhs = act_tensor(&spec, &mut cache, &dis, &Word::empty()).unwrap();
        let nf = enveloping::normalize(&spec, &dis).as_tensor();
        let rhs = act_tensor(&spec, &mut cache, &nf, &Word::empty()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_factors_through_normalize_on_adequate_specs() {
        // random-ish small tensors with fixed seed material: all words of
        // length <= 3 over a 3-element basis, alternating coefficients
        let spec = catalog::make_sl_plus_q(2);
        let mut cache = ActionCache::new();
        let ids: Vec<_> = spec.ids().collect();
        let mut words = vec![Word::empty()];
        for a in &ids {
            words.push(Word(vec![*a]));
            for b in &ids {
                words.push(Word(vec![*a, *b]));
                for c in &ids {
                    words.push(Word(vec![*a, *b, *c]));
                }
            }
        }
        for (i, chunk) in words.chunks(5).enumerate() {
            let mut t = TensorPoly::zero();
            for (j, w) in chunk.iter().enumerate() {
                let c = q().pow((i + j) as i32 % 3 - 1).unwrap().scale(&Rational::new(
                    BigInt::from(j as i64 + 1),
                    BigInt::from(i as i64 + 1),
                ));
                t.add_term(w.clone(), c);
            }
            let lhs = act_tensor(&spec, &mut cache, &t, &Word::empty()).unwrap();
            let nf = enveloping::normalize(&spec, &t).as_tensor();
            let rhs = act_tensor(&spec, &mut cache, &nf, &Word::empty()).unwrap();
            assert_eq!(lhs, rhs);
        }
        assert!(cache.clause_b_violations().is_empty());
    }

    #[test]
    fn act_is_linear_in_the_symmetric_argument() {
        let spec = catalog::make_sl_plus_q(3);
        let mut cache = ActionCache::new();
        let e24 = spec.id_of("e24").unwrap();
        let a = SymPoly::monomial(word(&spec, &["e12", "e23"]));
        let b = SymPoly::monomial(word(&spec, &["e13"]));
        let c = q().pow(-2).unwrap();
        let combined = a.add(&b.scale(&c));
        let lhs = act_poly(&spec, &mut cache, e24, &combined).unwrap();
        let rhs = act_poly(&spec, &mut cache, e24, &a)
            .unwrap()
            .add(&act_poly(&spec, &mut cache, e24, &b).unwrap().scale(&c));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lemma_c_passes_for_adequate_and_fails_for_tilde() {
        let sl4 = catalog::make_sl_plus_q(3);
        let report = check_lemma_c(&sl4, 12).unwrap();
        assert!(report.passed(), "failures: {}", report.failure_count);
        assert_eq!(report.clause_b_violations, 0);

        let classical = catalog::make_classical_sl(3);
        let report = check_lemma_c(&classical, 10).unwrap();
        assert!(report.passed());

        let tilde = catalog::make_tilde_sl4();
        let report = check_lemma_c(&tilde, 12).unwrap();
        assert!(!report.passed());
        // the first witness re-evaluates to a nonzero discrepancy
        let w = &report.witnesses[0];
        assert!(!w.discrepancy.is_zero());
    }

    #[test]
    fn certificates() {
        let sl3 = catalog::make_sl_plus_q(2);
        match independence_certificate(&sl3, 3).unwrap() {
            CertificateOutcome::Certified { monomials, .. } => assert_eq!(monomials, 20),
            other => panic!("expected certified, got {other:?}"),
        }
        // Lpq 2x2 certifies as well (two variables, nontrivial signs)
        let mut eps = catalog::unit_eps(2);
        eps[0][1] = -1;
        eps[1][0] = -1;
        let lpq = catalog::make_lpq(2, 2, &eps).unwrap();
        match independence_certificate(&lpq, 3).unwrap() {
            CertificateOutcome::Certified { .. } => {}
            other => panic!("expected certified, got {other:?}"),
        }
        // tilde refutes through a lemma C witness
        let tilde = catalog::make_tilde_sl4();
        match independence_certificate(&tilde, 2).unwrap() {
            CertificateOutcome::Refuted { witness } => {
                assert!(matches!(*witness, RefutationWitness::LemmaC(_)))
            }
            other => panic!("expected refuted, got {other:?}"),
        }
        // insufficient evidence is rejected, sufficient evidence reusable
        let evidence = check_lemma_c(&sl3, 2).unwrap();
        assert!(matches!(
            certificate_from_evidence(&sl3, 3, &evidence),
            Err(CertError::PreconditionViolated { .. })
        ));
        let evidence = check_lemma_c(&sl3, covering_bound(&sl3, 3)).unwrap();
        assert!(matches!(
            certificate_from_evidence(&sl3, 3, &evidence),
            Ok(CertificateOutcome::Certified { .. })
        ));
    }

    #[test]
    fn clause_b_bound_holds_on_cached_values() {
        let spec = catalog::make_sl_plus_q(3);
        let mut cache = ActionCache::new();
        for x in spec.ids() {
            for m in sym_monomials_up_to_eta(&spec, 8) {
                let v = act(&spec, &mut cache, x, &m).unwrap();
                let bound = spec.grade(x) as u64 + spec.word_grade(&m);
                for (w, _) in v.sub(&sym_mul(&spec, &SymPoly::monomial(Word::single(x)), &SymPoly::monomial(m.clone()))).terms() {
                    assert!(spec.word_grade(w) <= bound - 1);
                }
            }
        }
        assert!(cache.clause_b_violations().is_empty());
    }

    #[test]
    fn monomial_enumeration_respects_eta_and_repetition() {
        let sup = catalog::make_super_demo();
        let ms = sym_monomials_up_to_eta(&sup, 3);
        // x may not repeat (q_{x,x} = -1) but y may: 1, x, y, xy, yy, xyy, yyy
        assert_eq!(ms.len(), 7);
        let x = sup.id_of("x").unwrap();
        assert!(ms.iter().all(|m| {
            m.letters().windows(2).all(|w| !(w[0] == x && w[1] == x))
        }));
    }
}
