//! Acceptance suite: one test per criterion, every assertion exact.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion pass lines and timings.

use std::time::Instant;

use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tlie::algebra::{TLieSpec, TensorPoly, Word};
use tlie::axioms::{self, AdequacyMethod, BraidMap};
use tlie::catalog::{self, CatalogError, CatalogKey};
use tlie::cli;
use tlie::enveloping::{self, MembershipOutcome, PbwPoly};
use tlie::scalar::{LaurentScalar, Rational};
use tlie::symrep::{self, CertificateOutcome};

fn q() -> LaurentScalar {
    LaurentScalar::var(0)
}

fn word(spec: &TLieSpec, ids: &[&str]) -> Word {
    Word(ids.iter().map(|id| spec.id_of(id).unwrap()).collect())
}

fn pass(n: u32, what: &str, started: Instant) {
    println!(
        "acceptance {n:>2} ({what}): PASS in {:.2?}",
        started.elapsed()
    );
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["tlie".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut buf = Vec::new();
    let code = cli::run_command(&argv, &mut buf);
    (code, String::from_utf8(buf).unwrap())
}

/// 1. The five-axiom suite passes for the deformed upper-triangular
/// algebras with basis sizes 3, 6, 10, 15.
#[test]
fn criterion_01_axiom_suite() {
    let t = Instant::now();
    for (n, dim) in [(2usize, 3usize), (3, 6), (4, 10), (5, 15)] {
        let spec = catalog::make_sl_plus_q(n);
        assert_eq!(spec.dim(), dim);
        let (code, out) = run_cli(&[
            "verify",
            &format!("sl_plus_q:{n}"),
            "--checks",
            "involution,multiplicativity,stability,antisymmetry,jacobi",
        ]);
        assert_eq!(code, cli::EXIT_OK, "sl_plus_q:{n}:\n{out}");
    }
    pass(1, "axiom suite", t);
}

/// 2. The adequacy congruence holds, decided by the linear method, with
/// the η bound covering every decreasing triple.
#[test]
fn criterion_02_adequacy() {
    let t = Instant::now();
    for spec in [
        catalog::make_sl_plus_q(3),
        catalog::make_lpq(3, 3, &catalog::unit_eps(3)).unwrap(),
    ] {
        let rec = axioms::check_adequacy(&spec, None, AdequacyMethod::Linear).unwrap();
        assert!(rec.passed(), "{}: {:?}", spec.name(), rec.witnesses.first().map(|w| &w.note));
        assert!(
            rec.notes.iter().all(|n| !n.contains("partial")),
            "{}: must cover every decreasing triple",
            spec.name()
        );
    }
    pass(2, "adequacy via linear method", t);
}

/// 3. For every ordered pair e_ij < e_ab of the 10-element algebra, the
/// normal form of e_ab⊗e_ij reproduces exactly one of the three commutation
/// shapes: coefficient q when i=a or j=b, q⁻¹ when j=a, and the
/// pseudobracket-corrected commutator otherwise.
#[test]
fn criterion_03_commutation_relations() {
    let t = Instant::now();
    let spec = catalog::make_sl_plus_q(4);
    let parse_pair = |id: &str| -> (usize, usize) {
        let d: Vec<u32> = id.chars().skip(1).map(|c| c.to_digit(10).unwrap()).collect();
        (d[0] as usize, d[1] as usize)
    };
    let mut case_counts = [0usize; 3];
    for x in spec.ids() {
        for y in spec.ids().filter(|&y| y > x) {
            let (i, j) = parse_pair(&spec.element(x).id);
            let (a, b) = parse_pair(&spec.element(y).id);
            let got = enveloping::normalize(
                &spec,
                &TensorPoly::from_word(Word(vec![y, x])),
            );
            // expected value built from the closed-form case analysis only
            let mut expect = PbwPoly::zero();
            let sorted = Word(vec![x, y]);
            if i == a || j == b {
                case_counts[0] += 1;
                expect = expect.add(&pbw_from(&spec, sorted, q().pow(-1).unwrap()));
            } else if j == a {
                case_counts[1] += 1;
                expect = expect.add(&pbw_from(&spec, sorted, q()));
                let e_ib = spec.id_of(&format!("e{i}{b}")).unwrap();
                expect = expect.add(&pbw_from(&spec, Word(vec![e_ib]), q().neg()));
            } else {
                case_counts[2] += 1;
                expect = expect.add(&pbw_from(&spec, sorted, LaurentScalar::one()));
                // ⟨e_ij, e_ab⟩ = (q − q⁻¹)·e_ib⊗e_aj when i<a<j and a<j<b,
                // whose two letters commute with coefficient 1 when sorting
                if i < a && a < j && j < b {
                    let e_ib = spec.id_of(&format!("e{i}{b}")).unwrap();
                    let e_aj = spec.id_of(&format!("e{a}{j}")).unwrap();
                    let mut w = vec![e_ib, e_aj];
                    w.sort();
                    expect = expect.add(&pbw_from(
                        &spec,
                        Word(w),
                        q().sub(&q().pow(-1).unwrap()).neg(),
                    ));
                }
            }
            assert_eq!(got, expect, "pair {} {}", spec.element(x).id, spec.element(y).id);
        }
    }
    // every one of the C(10,2) ordered pairs fell into exactly one case,
    // and all three cases occur
    assert_eq!(case_counts.iter().sum::<usize>(), 45);
    assert!(case_counts.iter().all(|&c| c > 0));
    pass(3, "three commutation shapes", t);
}

fn pbw_from(spec: &TLieSpec, w: Word, c: LaurentScalar) -> PbwPoly {
    enveloping::normalize(spec, &TensorPoly::from_term(w.clone(), c.clone()))
}

/// 4. PBW monomial counts (multiset counts C(7,2) = 21 and C(8,3) = 56)
/// and the linear-independence certificate at both lengths.
#[test]
fn criterion_04_pbw_counts_and_freeness() {
    let t = Instant::now();
    let spec = catalog::make_sl_plus_q(3);
    let monomials = enveloping::enumerate_pbw(&spec, 3);
    let of_len = |k: usize| monomials.iter().filter(|m| m.len() == k).count();
    assert_eq!(of_len(2), 21);
    assert_eq!(of_len(3), 56);
    // independent oracle: count multisets by direct enumeration
    assert_eq!(multiset_count(6, 2), 21);
    assert_eq!(multiset_count(6, 3), 56);
    for max_len in [2usize, 3] {
        match symrep::independence_certificate(&spec, max_len).unwrap() {
            CertificateOutcome::Certified { monomials, .. } => {
                assert_eq!(
                    monomials,
                    (0..=max_len).map(|k| of_len(k)).sum::<usize>()
                );
            }
            other => panic!("length {max_len}: expected certified, got {other:?}"),
        }
    }
    pass(4, "PBW counts and freeness", t);
}

fn multiset_count(letters: usize, len: usize) -> usize {
    fn go(letters: usize, from: usize, len: usize) -> usize {
        if len == 0 {
            return 1;
        }
        (from..letters).map(|i| go(letters, i, len - 1)).sum()
    }
    go(letters, 0, len)
}

/// 5. The pseudobracket-erased algebra: the diamond check fails with a
/// reproducible witness, e23⊗e14 collapses into the ideal within
/// max_len 3 / max_delta 8, and the PBW certificate is refuted.
#[test]
fn criterion_05_counterexample_regression() {
    let t = Instant::now();
    let tilde = catalog::make_tilde_sl4();

    let first = enveloping::diamond_check(&tilde, 12);
    let second = enveloping::diamond_check(&tilde, 12);
    assert!(!first.passed());
    assert_eq!(first.witnesses[0].triple, second.witnesses[0].triple);
    assert_eq!(first.witnesses[0].discrepancy, second.witnesses[0].discrepancy);
    assert!(!first.witnesses[0].discrepancy.is_zero());

    let x2x6 = TensorPoly::from_word(word(&tilde, &["e23", "e14"]));
    match enveloping::ideal_member_truncated(&tilde, &x2x6, 3, 8).unwrap() {
        MembershipOutcome::Member(cert) => assert!(cert.verified),
        other => panic!("expected member, got {other:?}"),
    }
    // the CLI agrees and exits 0 with a certificate
    let (code, out) = run_cli(&[
        "member", "tilde_sl4", "e23.e14", "--max-len", "3", "--max-delta", "8",
    ]);
    assert_eq!(code, cli::EXIT_OK, "{out}");
    assert!(out.starts_with("member"), "{out}");

    match symrep::independence_certificate(&tilde, 2).unwrap() {
        CertificateOutcome::Refuted { .. } => {}
        other => panic!("expected refuted, got {other:?}"),
    }
    let (code, _) = run_cli(&["certify", "tilde_sl4", "--max-len", "2"]);
    assert_eq!(code, cli::EXIT_MATH_FAIL);
    pass(5, "PBW counterexample regression", t);
}

/// 6. Braid behaviour: the presymmetry braids on every catalog algebra;
/// the full symmetry braids on strictly decreasing triples for the
/// deformed triangular algebras `(sl_n^±)_q`, n = 2, 3, 4 — catalog keys
/// `sl_plus_q:1..3` / `sl_minus_q:1..3`, whose basis sizes are 1, 3, 6.
#[test]
fn criterion_06_braid_propositions() {
    let t = Instant::now();
    for key in catalog::builtin_keys() {
        let spec = CatalogKey::parse(&key).unwrap().build().unwrap();
        assert!(
            axioms::check_braid(&spec, BraidMap::S).passed(),
            "presymmetry braid on {key}"
        );
    }
    for n in 1..=3usize {
        let plus = catalog::make_sl_plus_q(n);
        assert_eq!(plus.dim(), n * (n + 1) / 2);
        assert!(axioms::check_braid(&plus, BraidMap::T).passed(), "plus {n}");
        let minus = catalog::make_sl_minus_q(n);
        assert!(axioms::check_braid(&minus, BraidMap::T).passed(), "minus {n}");
    }
    pass(6, "braid propositions", t);
}

/// 7. Specialization at q = 1: the structure constants become the classical
/// upper-triangular ones, and specialization commutes with normalization on
/// 100 seeded random inputs of degree <= 3.
#[test]
fn criterion_07_specialization() {
    let t = Instant::now();
    let one = Rational::from(BigInt::from(1));
    for n in 2..=4usize {
        let deformed = catalog::make_sl_plus_q(n);
        let specialized = enveloping::specialize_enveloping(&deformed, &[one.clone()]).unwrap();
        let classical = catalog::make_classical_sl(n + 1);
        assert_eq!(specialized.dim(), classical.dim());
        for x in specialized.ids() {
            for y in specialized.ids() {
                // identical ids and order by construction
                assert_eq!(
                    specialized.element(x).id,
                    classical.element(x).id
                );
                assert!(specialized.sym_coeff(x, y).is_one());
                assert_eq!(
                    specialized.bracket_of(x, y),
                    classical.bracket_of(x, y),
                    "bracket ({}, {})",
                    specialized.element(x).id,
                    specialized.element(y).id
                );
                assert!(specialized.pseudo_of(x, y).is_zero());
            }
        }
    }

    let deformed = catalog::make_sl_plus_q(3);
    let classical = enveloping::specialize_enveloping(&deformed, &[one.clone()]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5f3759df);
    for _ in 0..100 {
        let input = random_tensor(&deformed, &mut rng, 3);
        let specialize_poly = |t: &TensorPoly| {
            let mut out = TensorPoly::zero();
            for (w, c) in t.terms() {
                out.add_term(
                    w.clone(),
                    LaurentScalar::from_rational(c.specialize(&[one.clone()]).unwrap()),
                );
            }
            out
        };
        let route_a = enveloping::normalize(&classical, &specialize_poly(&input));
        let nf = enveloping::normalize(&deformed, &input);
        let route_b = enveloping::normalize(&classical, &specialize_poly(&nf.as_tensor()));
        assert_eq!(route_a, route_b);
    }
    pass(7, "q = 1 specialization", t);
}

fn random_scalar(rng: &mut ChaCha8Rng) -> LaurentScalar {
    let mut s = LaurentScalar::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let num = rng.gen_range(-4i64..=4);
        let den = rng.gen_range(1i64..=3);
        let exp = rng.gen_range(-2i32..=2);
        s = s.add(&LaurentScalar::monomial(
            Rational::new(BigInt::from(num), BigInt::from(den)),
            vec![exp],
        ));
    }
    s
}

fn random_tensor(spec: &TLieSpec, rng: &mut ChaCha8Rng, max_len: usize) -> TensorPoly {
    let mut t = TensorPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let len = rng.gen_range(0..=max_len);
        let w = Word(
            (0..len)
                .map(|_| tlie::algebra::BasisId(rng.gen_range(0..spec.dim()) as u32))
                .collect(),
        );
        t.add_term(w, random_scalar(rng));
    }
    t
}

/// 8. The symmetric-algebra machinery: the representation property holds up
/// to η-bound 12 for both catalog families, and the clause-B filtration
/// bound holds for every action value memoized during the runs.
#[test]
fn criterion_08_lemma_machinery() {
    let t = Instant::now();
    let sl4 = catalog::make_sl_plus_q(3);
    let report = symrep::check_lemma_c(&sl4, 12).unwrap();
    assert!(report.passed(), "failures: {}", report.failure_count);
    assert_eq!(report.clause_b_violations, 0);

    let lpq = catalog::make_lpq(2, 2, &catalog::unit_eps(2)).unwrap();
    let report = symrep::check_lemma_c(&lpq, 12).unwrap();
    assert!(report.passed(), "failures: {}", report.failure_count);
    assert_eq!(report.clause_b_violations, 0);
    pass(8, "symmetric-algebra representation", t);
}

/// 9. The color path: the Z₂ super demo squares to half the bracket, its
/// PBW basis excludes x², and a non-commutation-factor is rejected with a
/// witness pair.
#[test]
fn criterion_09_color_and_super() {
    let t = Instant::now();
    let sup = catalog::make_super_demo();
    let x = sup.id_of("x").unwrap();
    let nf = enveloping::normalize(&sup, &TensorPoly::from_word(Word(vec![x, x])));
    let half_bracket = sup
        .bracket_of(x, x)
        .scale(&LaurentScalar::from_rational(Rational::new(
            BigInt::from(1),
            BigInt::from(2),
        )));
    assert_eq!(nf.as_tensor(), half_bracket);

    let ms = enveloping::enumerate_pbw(&sup, 2);
    assert!(ms.iter().all(|m| m.word() != &Word(vec![x, x])));

    let group = catalog::ColorGroup::cyclic(2);
    let two = LaurentScalar::from_int(2);
    let eps = vec![
        vec![LaurentScalar::one(), LaurentScalar::one()],
        vec![LaurentScalar::one(), two],
    ];
    match catalog::make_color("bad", &group, &eps, &[("x".into(), 1)], &vec![]) {
        Err(CatalogError::NotACommutationFactor { a, b, .. }) => assert_eq!((a, b), (1, 1)),
        other => panic!("expected rejection, got {other:?}"),
    }
    pass(9, "color and super path", t);
}

/// 10. Seeded randomized property suites, zero failures: normalize
/// idempotence, measure descent along traces, associativity of the PBW
/// product (200 triples), linearity of the structure maps, and the scalar
/// ring axioms (1000 cases).
#[test]
fn criterion_10_property_suites() {
    let t = Instant::now();
    let spec = catalog::make_sl_plus_q(3);
    let mut rng = ChaCha8Rng::seed_from_u64(0xfeedface);

    // normalize idempotence + measure descent along traces
    for _ in 0..60 {
        let input = random_tensor(&spec, &mut rng, 3);
        let nf = enveloping::normalize(&spec, &input);
        assert_eq!(enveloping::normalize(&spec, &nf.as_tensor()), nf);
        let (nf2, trace) = enveloping::normalize_traced(&spec, &input);
        assert_eq!(nf, nf2);
        for step in &trace {
            let before = enveloping::measure(&spec, &step.before);
            for (w, _) in step.after.terms() {
                assert!(enveloping::measure(&spec, w) < before);
            }
        }
        // every output word is sorted: disorder 0
        for (w, _) in nf.terms() {
            assert_eq!(enveloping::measure(&spec, w).disorder, 0);
        }
    }

    // associativity of the PBW product on 200 random triples
    for _ in 0..200 {
        let poly = |rng: &mut ChaCha8Rng| {
            let len = rng.gen_range(0..=2);
            let w = Word(
                (0..len)
                    .map(|_| tlie::algebra::BasisId(rng.gen_range(0..spec.dim()) as u32))
                    .collect(),
            );
            enveloping::normalize(&spec, &TensorPoly::from_term(w, random_scalar(rng)))
        };
        let (a, b, c) = (poly(&mut rng), poly(&mut rng), poly(&mut rng));
        let ab_c = enveloping::pbw_multiply(&spec, &enveloping::pbw_multiply(&spec, &a, &b), &c);
        let a_bc = enveloping::pbw_multiply(&spec, &a, &enveloping::pbw_multiply(&spec, &b, &c));
        assert_eq!(ab_c, a_bc);
    }

    // linearity of all four structure maps at both positions
    for _ in 0..50 {
        let len = 3;
        let w1 = Word((0..len).map(|_| tlie::algebra::BasisId(rng.gen_range(0..spec.dim()) as u32)).collect());
        let w2 = Word((0..len).map(|_| tlie::algebra::BasisId(rng.gen_range(0..spec.dim()) as u32)).collect());
        let t1 = TensorPoly::from_term(w1, random_scalar(&mut rng));
        let t2 = TensorPoly::from_term(w2, random_scalar(&mut rng));
        let c = random_scalar(&mut rng);
        let combined = t1.add(&t2.scale(&c));
        type ApplyFn = fn(&TLieSpec, &TensorPoly, usize) -> Result<TensorPoly, tlie::algebra::ApplyError>;
        let maps: [ApplyFn; 4] = [
            TLieSpec::apply_s,
            TLieSpec::apply_t,
            TLieSpec::apply_bracket,
            TLieSpec::apply_pseudobracket,
        ];
        for f in maps {
            for pos in [0usize, 1] {
                let lhs = f(&spec, &combined, pos).unwrap();
                let rhs = f(&spec, &t1, pos)
                    .unwrap()
                    .add(&f(&spec, &t2, pos).unwrap().scale(&c));
                assert_eq!(lhs, rhs);
            }
        }
    }

    // scalar ring axioms, 1000 seeded cases
    let mut rng = ChaCha8Rng::seed_from_u64(0xabad1dea);
    let rand2 = |rng: &mut ChaCha8Rng| {
        let mut s = LaurentScalar::zero();
        for _ in 0..rng.gen_range(0..=3) {
            s = s.add(&LaurentScalar::monomial(
                Rational::new(
                    BigInt::from(rng.gen_range(-5i64..=5)),
                    BigInt::from(rng.gen_range(1i64..=4)),
                ),
                vec![rng.gen_range(-3i32..=3), rng.gen_range(-3i32..=3)],
            ));
        }
        s
    };
    for _ in 0..1000 {
        let (a, b, c) = (rand2(&mut rng), rand2(&mut rng), rand2(&mut rng));
        assert_eq!(a.add(&b), b.add(&a));
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        assert!(a.sub(&a).is_zero());
    }
    pass(10, "property suites", t);
}
