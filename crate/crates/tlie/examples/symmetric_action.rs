//! The action of the algebra on its q-symmetric algebra: the clause A / B
//! recursion, the representation property, and the cache audit.
//!
//! ```sh
//! cargo run --example symmetric_action
//! ```

use tlie::algebra::Word;
use tlie::catalog::make_sl_plus_q;
use tlie::cli::expr::parse_for_spec;
use tlie::symrep::{act, act_tensor, check_lemma_c, ActionCache};

fn main() {
    let spec = make_sl_plus_q(2);
    let mut cache = ActionCache::new();

    // single steps of the recursion
    for (x, m) in [("e23", ""), ("e12", "e23"), ("e23", "e12"), ("e23", "e12.e13")] {
        let xid = spec.id_of(x).unwrap();
        let monomial = if m.is_empty() {
            Word::empty()
        } else {
            Word(m.split('.').map(|id| spec.id_of(id).unwrap()).collect())
        };
        let acted = act(&spec, &mut cache, xid, &monomial).unwrap();
        println!(
            "{x} · z_[{}] = {}",
            if m.is_empty() { "1" } else { m },
            spec.render_poly(&acted.as_tensor())
        );
    }

    // a disordered tensor acts like its normal form (the action factors
    // through the enveloping algebra)
    let t = parse_for_spec("e23.e12", &spec).unwrap();
    let acted = act_tensor(&spec, &mut cache, &t, &Word::empty()).unwrap();
    println!("\n(e23 ⊗ e12) · 1 = {}", spec.render_poly(&acted.as_tensor()));

    println!(
        "cache: {} values, {} clause-B violations, coherent: {}",
        cache.len(),
        cache.clause_b_violations().len(),
        cache.audit_coherence(&spec)
    );

    // the representation property, exactly, on everything of η-sum <= 10
    let report = check_lemma_c(&spec, 10).unwrap();
    println!(
        "\nrepresentation property up to η = {}: {} ({} instances)",
        report.bound,
        if report.passed() { "holds" } else { "FAILS" },
        report.checked
    );
}
