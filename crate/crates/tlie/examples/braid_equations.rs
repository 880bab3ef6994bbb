//! Braid equations: the presymmetry always braids; the full symmetry braids
//! on strictly decreasing triples only up to 6 basis elements, and the
//! 10-element algebra exhibits an explicit counterexample.
//!
//! ```sh
//! cargo run --example braid_equations
//! ```

use tlie::axioms::{check_braid, BraidMap};
use tlie::catalog::{builtin_keys, make_sl_minus_q, make_sl_plus_q, CatalogKey};

fn main() {
    println!("presymmetry braid (all triples):");
    for key in builtin_keys() {
        let spec = CatalogKey::parse(&key).unwrap().build().unwrap();
        let rec = check_braid(&spec, BraidMap::S);
        println!("  {key:<14} {} ({} triples)", rec.status.as_str(), rec.checked);
    }

    println!("\nsymmetry braid (strictly decreasing triples):");
    for n in 1..=4usize {
        for (tag, spec) in [("plus", make_sl_plus_q(n)), ("minus", make_sl_minus_q(n))] {
            let rec = check_braid(&spec, BraidMap::T);
            println!(
                "  sl_{tag}:{n} (dim {:>2}): {}",
                spec.dim(),
                rec.status.as_str()
            );
            if let Some(w) = rec.witnesses.first() {
                let ids: Vec<String> = w.inputs.iter().map(|i| spec.render_word(i)).collect();
                println!(
                    "    counterexample {}: discrepancy {}",
                    ids.join("."),
                    spec.render_poly(&w.discrepancy)
                );
            }
        }
    }
}
