//! The universal enveloping algebra `U(L) = ⊗L / J`, where `J` is the
//! two-sided ideal generated by `x⊗y − T(x⊗y) − [x,y]`.
//!
//! Normal forms are computed by a terminating rewriting system: a disordered
//! adjacent pair `x⊗y` (`x > y`) rewrites to `q_{x,y}·y⊗x + ⟨x,y⟩ + [x,y]`,
//! and a diagonal pair with `q_{x,x} = -1` rewrites to `½(⟨x,x⟩ + [x,x])`.
//! Swaps keep the total grade and drop the disorder by one; pseudobracket and
//! bracket terms drop the total grade (stability), so `(δ, D)` descends
//! lexicographically and rewriting terminates on every validated spec.
//!
//! For adequate algebras every strategy reaches the same normal form; the
//! [`diamond_check`] compares the two one-step reductions of length-3 words
//! and certifies (or refutes, as for the pseudobracket-erased algebra) that
//! confluence. [`ideal_member_truncated`] decides `t ∈ J` inside stated
//! length and grade bounds by exact linear algebra over the fraction field,
//! with an explicit, re-checkable combination as certificate.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::BigInt;
use thiserror::Error;

use crate::algebra::{BasisId, TLieSpec, TensorPoly, Word};
use crate::linalg::{
    clearing_denominator, combination_is_ring, verify_combination, Combination, SpanSolver,
};
use crate::scalar::{LaurentScalar, Rational, ScalarError};

/// Total grade `δ` and inversion count `D` of a word; the termination
/// measure of the rewriting system, ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DegreeMeasure {
    pub delta: u64,
    pub disorder: u64,
}

/// `δ(w) = Σ η(letter)`, `D(w) = #{(i,j) : i < j, w[i] > w[j]}`.
pub fn measure(spec: &TLieSpec, w: &Word) -> DegreeMeasure {
    let letters = w.letters();
    let mut disorder = 0u64;
    for i in 0..letters.len() {
        for j in i + 1..letters.len() {
            if letters[i] > letters[j] {
                disorder += 1;
            }
        }
    }
    DegreeMeasure {
        delta: spec.word_grade(w),
        disorder,
    }
}

/// Max measure over the words of a polynomial (0 for the zero polynomial).
pub fn poly_measure(spec: &TLieSpec, t: &TensorPoly) -> DegreeMeasure {
    t.terms()
        .map(|(w, _)| measure(spec, w))
        .max()
        .unwrap_or(DegreeMeasure { delta: 0, disorder: 0 })
}

/// Non-decreasing word in which a letter repeats only when `S` fixes its
/// square (`q_{x,x} = 1`); the claimed free-basis monomials of `U(L)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PbwMonomial(Word);

impl PbwMonomial {
    pub fn new(spec: &TLieSpec, w: Word) -> Option<Self> {
        if reducible_position(spec, &w).is_none() {
            Some(PbwMonomial(w))
        } else {
            None
        }
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Polynomial whose words are all PBW monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PbwPoly {
    terms: BTreeMap<Word, LaurentScalar>,
}

impl PbwPoly {
    pub fn zero() -> Self {
        Self::default()
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

impl fmt::Display for PbwPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PbwPoly({} terms)", self.terms.len())
    }
}

/// Kind of rewrite rule applied at a position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    /// `x⊗y → q_{x,y}·y⊗x + ⟨x,y⟩ + [x,y]` for adjacent `x > y`.
    Swap,
    /// `x⊗x → ½(⟨x,x⟩ + [x,x])` for `q_{x,x} = -1`.
    Diagonal,
}

/// One recorded rewriting step: the whole-word replacement applied to the
/// full coefficient of `before` in the running polynomial.
#[derive(Debug, Clone)]
pub struct RewriteStep {
    pub rule: RuleKind,
    pub position: usize,
    pub before: Word,
    pub after: TensorPoly,
}

pub type RewriteTrace = Vec<RewriteStep>;

/// Leftmost position at which the word is reducible, if any.
pub fn reducible_position(spec: &TLieSpec, w: &Word) -> Option<usize> {
    let letters = w.letters();
    (0..letters.len().saturating_sub(1)).find(|&i| {
        let (x, y) = (letters[i], letters[i + 1]);
        x > y || (x == y && !spec.sym_coeff(x, x).is_one())
    })
}

/// The replacement of the adjacent pair `(x, y)` at a reducible position.
fn pair_expansion(spec: &TLieSpec, x: BasisId, y: BasisId) -> (RuleKind, TensorPoly) {
    if x > y {
        let mut repl = spec.pseudo_of(x, y).add(&spec.bracket_of(x, y));
        repl.add_term(Word(vec![y, x]), spec.sym_coeff(x, y));
        (RuleKind::Swap, repl)
    } else {
        debug_assert!(x == y && !spec.sym_coeff(x, x).is_one());
        let half = LaurentScalar::from_rational(Rational::new(BigInt::from(1), BigInt::from(2)));
        let repl = spec.pseudo_of(x, x).add(&spec.bracket_of(x, x)).scale(&half);
        (RuleKind::Diagonal, repl)
    }
}

/// Whole-word replacement for one step at the leftmost reducible position.
fn step_word(spec: &TLieSpec, w: &Word, pos: usize) -> (RuleKind, TensorPoly) {
    let letters = w.letters();
    let (rule, mid) = pair_expansion(spec, letters[pos], letters[pos + 1]);
    let prefix = TensorPoly::from_word(Word(letters[..pos].to_vec()));
    let suffix = TensorPoly::from_word(Word(letters[pos + 2..].to_vec()));
    (rule, prefix.tensor(&mid).tensor(&suffix))
}

fn normalize_word(
    spec: &TLieSpec,
    w: &Word,
    memo: &mut HashMap<Word, PbwPoly>,
) -> PbwPoly {
    if let Some(hit) = memo.get(w) {
        return hit.clone();
    }
    let result = match reducible_position(spec, w) {
        None => {
            let mut p = PbwPoly::zero();
            p.add_term(w.clone(), LaurentScalar::one());
            p
        }
        Some(pos) => {
            let (_, repl) = step_word(spec, w, pos);
            let mut acc = PbwPoly::zero();
            let parent = measure(spec, w);
            for (bw, bc) in repl.terms() {
                debug_assert!(measure(spec, bw) < parent, "rewriting must descend");
                let sub = normalize_word(spec, bw, memo);
                acc = acc.add(&sub.scale(bc));
            }
            acc
        }
    };
    memo.insert(w.clone(), result.clone());
    result
}

/// PBW normal form of a tensor polynomial: every word rewritten at its
/// leftmost reducible position until only PBW monomials remain.
pub fn normalize(spec: &TLieSpec, t: &TensorPoly) -> PbwPoly {
    let mut memo = HashMap::new();
    let mut out = PbwPoly::zero();
    for (w, c) in t.terms() {
        out = out.add(&normalize_word(spec, w, &mut memo).scale(c));
    }
    out
}

/// Normal form together with the ordered list of rewriting steps.
///
/// The traced run keeps one merged polynomial state and always expands the
/// greatest reducible word, so replaying the steps against the input
/// reproduces the normal form exactly. The result agrees with [`normalize`]
/// because both expand every word at its leftmost reducible position.
pub fn normalize_traced(spec: &TLieSpec, t: &TensorPoly) -> (PbwPoly, RewriteTrace) {
    let mut trace = RewriteTrace::new();
    let mut state = t.clone();
    loop {
        let next = state
            .terms()
            .filter_map(|(w, _)| reducible_position(spec, w).map(|p| (w.clone(), p)))
            .last();
        let Some((w, pos)) = next else { break };
        let c = state.coefficient(&w);
        let (rule, after) = step_word(spec, &w, pos);
        state = state.sub(&TensorPoly::from_term(w.clone(), c.clone()));
        state = state.add(&after.scale(&c));
        trace.push(RewriteStep {
            rule,
            position: pos,
            before: w,
            after,
        });
    }
    let mut out = PbwPoly::zero();
    for (w, c) in state.terms() {
        out.add_term(w.clone(), c.clone());
    }
    (out, trace)
}

/// Re-run a recorded trace against `t`.
pub fn replay_trace(spec: &TLieSpec, t: &TensorPoly, trace: &RewriteTrace) -> TensorPoly {
    let _ = spec;
    let mut state = t.clone();
    for step in trace {
        let c = state.coefficient(&step.before);
        state = state.sub(&TensorPoly::from_term(step.before.clone(), c.clone()));
        state = state.add(&step.after.scale(&c));
    }
    state
}

/// Product in `U(L)`: concatenate and normalize.
pub fn pbw_multiply(spec: &TLieSpec, a: &PbwPoly, b: &PbwPoly) -> PbwPoly {
    normalize(spec, &a.as_tensor().tensor(&b.as_tensor()))
}

/// All PBW monomials of length at most `max_len`, in lexicographic order.
pub fn enumerate_pbw(spec: &TLieSpec, max_len: usize) -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    let mut stack: Vec<BasisId> = Vec::new();
    fn extend(
        spec: &TLieSpec,
        stack: &mut Vec<BasisId>,
        max_len: usize,
        out: &mut Vec<PbwMonomial>,
    ) {
        out.push(PbwMonomial(Word(stack.clone())));
        if stack.len() == max_len {
            return;
        }
        let from = stack.last().map(|&x| x.index()).unwrap_or(0);
        for i in from..spec.dim() {
            let x = BasisId(i as u32);
            if Some(&x) == stack.last() && !spec.sym_coeff(x, x).is_one() {
                continue;
            }
            stack.push(x);
            extend(spec, stack, max_len, out);
            stack.pop();
        }
    }
    extend(spec, &mut stack, max_len, &mut out);
    out
}

/// A length-3 word whose two one-step reductions normalize differently.
#[derive(Debug, Clone)]
pub struct DiamondWitness {
    pub triple: [BasisId; 3],
    pub left_first: PbwPoly,
    pub right_first: PbwPoly,
    pub discrepancy: PbwPoly,
}

#[derive(Debug, Clone)]
pub struct DiamondReport {
    pub max_delta: u64,
    pub checked: usize,
    pub witnesses: Vec<DiamondWitness>,
}

impl DiamondReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Local-confluence check: for every word `x⊗y⊗z` with `x ≥ y ≥ z` (at
/// least one strict) and total grade within the bound whose two positions
/// are both reducible, reduce once at each position, normalize both, and
/// compare.
pub fn diamond_check(spec: &TLieSpec, max_delta: u64) -> DiamondReport {
    let mut report = DiamondReport {
        max_delta,
        checked: 0,
        witnesses: Vec::new(),
    };
    for x in spec.ids() {
        for y in spec.ids().filter(|&y| y <= x) {
            for z in spec.ids().filter(|&z| z <= y) {
                if x == y && y == z {
                    continue;
                }
                let w = Word(vec![x, y, z]);
                if spec.word_grade(&w) > max_delta {
                    continue;
                }
                let red0 = x > y || (x == y && !spec.sym_coeff(x, x).is_one());
                let red1 = y > z || (y == z && !spec.sym_coeff(y, y).is_one());
                if !(red0 && red1) {
                    continue;
                }
                report.checked += 1;
                let (_, left) = step_word(spec, &w, 0);
                let (_, right) = step_word(spec, &w, 1);
                let nf_left = normalize(spec, &left);
                let nf_right = normalize(spec, &right);
                if nf_left != nf_right {
                    report.witnesses.push(DiamondWitness {
                        triple: [x, y, z],
                        discrepancy: nf_left.sub(&nf_right),
                        left_first: nf_left,
                        right_first: nf_right,
                    });
                }
            }
        }
    }
    report
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MemberError {
    #[error("input exceeds bounds: word length {len} / grade {delta} vs max_len {max_len} / max_delta {max_delta}")]
    BoundsTooSmall {
        len: usize,
        delta: u64,
        max_len: usize,
        max_delta: u64,
    },
}

/// One spanning element `u ⊗ (x⊗y − T(x⊗y) − [x,y]) ⊗ v` of the ideal
/// truncation, remembered for certificates.
#[derive(Debug, Clone)]
pub struct GeneratorContext {
    pub left: Word,
    pub pair: (BasisId, BasisId),
    pub right: Word,
}

#[derive(Debug, Clone)]
pub enum MembershipOutcome {
    Member(MembershipCertificate),
    NotMemberWithinBounds { generators: usize },
}

/// Exact combination `t = Σ cᵢ·(uᵢ⊗gᵢ⊗vᵢ)` over the fraction field. When
/// `ring_exact` is false the scaled form `clearing·t = Σ (ring cᵢ)·genᵢ`
/// still certifies the collapse over the ring after inverting `clearing`.
#[derive(Debug, Clone)]
pub struct MembershipCertificate {
    pub contexts: Vec<GeneratorContext>,
    pub combination: Combination,
    pub ring_exact: bool,
    pub clearing: LaurentScalar,
    pub verified: bool,
}

/// The defining relation `x⊗y − T(x⊗y) − [x,y]` as a tensor polynomial.
pub fn ideal_generator(spec: &TLieSpec, x: BasisId, y: BasisId) -> TensorPoly {
    let mut g = TensorPoly::from_word(Word(vec![x, y]));
    g = g.sub(&spec.t_of(x, y));
    g.sub(&spec.bracket_of(x, y))
}

/// The pairs whose generators span `J` degreewise: disordered pairs plus
/// diagonals with `q_{x,x} = -1`. Generators for sorted pairs are exact
/// scalar multiples of the disordered ones (antisymmetry is built into the
/// derived tables) and generators for `q_{x,x} = 1` diagonals vanish, so
/// the span is unchanged.
fn spanning_pairs(spec: &TLieSpec) -> Vec<(BasisId, BasisId)> {
    let mut pairs = Vec::new();
    for x in spec.ids() {
        for y in spec.ids() {
            if x > y || (x == y && !spec.sym_coeff(x, x).is_one()) {
                pairs.push((x, y));
            }
        }
    }
    pairs
}

fn words_up_to(spec: &TLieSpec, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for x in spec.ids() {
                let mut v = w.0.clone();
                v.push(x);
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Decide `t ∈ J` within word-length and grade bounds, with certificate.
pub fn ideal_member_truncated(
    spec: &TLieSpec,
    t: &TensorPoly,
    max_len: usize,
    max_delta: u64,
) -> Result<MembershipOutcome, MemberError> {
    for (w, _) in t.terms() {
        let delta = spec.word_grade(w);
        if w.len() > max_len || delta > max_delta {
            return Err(MemberError::BoundsTooSmall {
                len: w.len(),
                delta,
                max_len,
                max_delta,
            });
        }
    }
    if t.is_zero() {
        return Ok(MembershipOutcome::Member(MembershipCertificate {
            contexts: Vec::new(),
            combination: Vec::new(),
            ring_exact: true,
            clearing: LaurentScalar::one(),
            verified: true,
        }));
    }
    let context_len = max_len.saturating_sub(2);
    let words = words_up_to(spec, context_len);
    let mut contexts = Vec::new();
    let mut generators = Vec::new();
    let mut solver = SpanSolver::new();
    for (x, y) in spanning_pairs(spec) {
        let g = ideal_generator(spec, x, y);
        let pair_delta = spec.grade(x) as u64 + spec.grade(y) as u64;
        for u in &words {
            for v in &words {
                if u.len() + 2 + v.len() > max_len {
                    continue;
                }
                if spec.word_grade(u) + pair_delta + spec.word_grade(v) > max_delta {
                    continue;
                }
                let row = TensorPoly::from_word(u.clone())
                    .tensor(&g)
                    .tensor(&TensorPoly::from_word(v.clone()));
                solver.add_generator(&row);
                generators.push(row);
                contexts.push(GeneratorContext {
                    left: u.clone(),
                    pair: (x, y),
                    right: v.clone(),
                });
            }
        }
    }
    match solver.membership(t) {
        Some(combination) => {
            let verified = verify_combination(&generators, &combination, t);
            let ring_exact = combination_is_ring(&combination);
            let clearing = clearing_denominator(&combination);
            Ok(MembershipOutcome::Member(MembershipCertificate {
                contexts,
                combination,
                ring_exact,
                clearing,
                verified,
            }))
        }
        None => Ok(MembershipOutcome::NotMemberWithinBounds {
            generators: generators.len(),
        }),
    }
}

/// Specialize every structure scalar at the given variable values and
/// rebuild; pseudobracket entries that vanish (e.g. `q−q⁻¹` at `q = 1`)
/// are dropped. The result is a spec over the empty variable set.
pub fn specialize_enveloping(
    spec: &TLieSpec,
    values: &[Rational],
) -> Result<TLieSpec, ScalarError> {
    let mut raw = spec.to_raw();
    raw.name = format!(
        "{}|{}",
        raw.name,
        raw.variables
            .iter()
            .zip(values)
            .map(|(v, r)| format!("{v}={r}"))
            .collect::<Vec<_>>()
            .join(",")
    );
    let conv = |s: &LaurentScalar| -> Result<LaurentScalar, ScalarError> {
        Ok(LaurentScalar::from_rational(s.specialize(values)?))
    };
    for e in &mut raw.sym {
        e.value = conv(&e.value)?;
    }
    for e in &mut raw.bracket {
        for (_, c) in e.value.iter_mut() {
            *c = conv(c)?;
        }
        e.value.retain(|(_, c)| !c.is_zero());
    }
    raw.bracket.retain(|e| !e.value.is_empty());
    for e in &mut raw.pseudo {
        for (_, c) in e.value.iter_mut() {
            *c = conv(c)?;
        }
        e.value.retain(|(_, c)| !c.is_zero());
    }
    raw.pseudo.retain(|e| !e.value.is_empty());
    raw.variables.clear();
    Ok(TLieSpec::build(&raw).expect("specialized spec stays valid"))
}
