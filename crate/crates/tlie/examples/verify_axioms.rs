//! Run the full verification suite against every built-in algebra and
//! print the per-check tables.
//!
//! ```sh
//! cargo run --example verify_axioms
//! ```

use tlie::axioms::{verify, CheckId, VerifyOptions};
use tlie::catalog::{builtin_keys, CatalogKey};

fn main() {
    let checks = [
        CheckId::Involution,
        CheckId::Multiplicativity,
        CheckId::Stability,
        CheckId::Antisymmetry,
        CheckId::Jacobi,
        CheckId::BraidS,
    ];
    for key in builtin_keys() {
        let spec = CatalogKey::parse(&key).unwrap().build().unwrap();
        let report = verify(&spec, &checks, &VerifyOptions::default());
        print!("{}", report.render_table(&spec));
        println!();
    }
    // the adequacy congruence separates the true deformation from its
    // pseudobracket-erased variant
    for key in ["sl_plus_q:3", "tilde_sl4"] {
        let spec = CatalogKey::parse(key).unwrap().build().unwrap();
        let report = verify(&spec, &[CheckId::Adequacy], &VerifyOptions::default());
        print!("{}", report.render_table(&spec));
        println!();
    }
}
