//! The adequacy congruence: the sufficient condition for the symmetric
//! algebra representation (and hence the PBW basis) to exist, decided by
//! directed rewriting with an exact linear-algebra fallback.
//!
//! ```sh
//! cargo run --example adequacy
//! ```

use tlie::axioms::{adequacy_difference, check_adequacy, AdequacyMethod};
use tlie::catalog::{make_lpq, make_sl_plus_q, make_tilde_sl4, unit_eps};

fn main() {
    for (spec, method) in [
        (make_sl_plus_q(3), AdequacyMethod::Rewrite),
        (make_sl_plus_q(3), AdequacyMethod::Linear),
        (make_lpq(3, 3, &unit_eps(3)).unwrap(), AdequacyMethod::Linear),
        (make_tilde_sl4(), AdequacyMethod::Auto),
    ] {
        match check_adequacy(&spec, None, method) {
            Ok(rec) => {
                println!(
                    "{} via {:?}: {} ({} decreasing triples, {} ms)",
                    spec.name(),
                    method,
                    rec.status.as_str(),
                    rec.checked,
                    rec.wall_ms
                );
                for w in rec.witnesses.iter().take(2) {
                    let ids: Vec<String> =
                        w.inputs.iter().map(|i| spec.render_word(i)).collect();
                    println!(
                        "  fails at ({}) with residual {} [{}]",
                        ids.join(" > "),
                        spec.render_poly(&w.discrepancy),
                        w.note.as_deref().unwrap_or("")
                    );
                }
            }
            Err(e) => println!("{} via {:?}: {e}", spec.name(), method),
        }
    }

    // the raw congruence difference for one decreasing triple
    let spec = make_sl_plus_q(3);
    let l = spec.id_of("e24").unwrap();
    let m = spec.id_of("e13").unwrap();
    let g = spec.id_of("e12").unwrap();
    let d = adequacy_difference(&spec, l, m, g);
    println!(
        "\ncongruence difference at (e24 > e13 > e12) in {}:\n  {}",
        spec.name(),
        spec.render_poly(&d)
    );
    println!("  (a member of the graded truncation J_6, as the check certifies)");
}
