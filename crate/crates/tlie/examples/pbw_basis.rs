//! Enumerate PBW monomials and certify their linear independence by acting
//! on 1 in the q-symmetric algebra.
//!
//! ```sh
//! cargo run --example pbw_basis
//! ```

use tlie::catalog::{make_lpq, make_sl_plus_q, unit_eps};
use tlie::enveloping::enumerate_pbw;
use tlie::symrep::{independence_certificate, CertificateOutcome};

fn main() {
    let spec = make_sl_plus_q(3);
    println!("algebra: {spec}");
    let monomials = enumerate_pbw(&spec, 2);
    println!("PBW monomials of length <= 2 ({} total):", monomials.len());
    for m in &monomials {
        println!("  {}", spec.render_word(m.word()));
    }
    for len in [2usize, 3] {
        match independence_certificate(&spec, len).unwrap() {
            CertificateOutcome::Certified {
                monomials,
                lemma_c_bound,
            } => println!(
                "length <= {len}: certified free ({monomials} monomials, representation checked up to η = {lemma_c_bound})"
            ),
            CertificateOutcome::Refuted { witness } => {
                println!("length <= {len}: refuted: {witness:?}")
            }
        }
    }

    // the two-parameter family certifies as well
    let lpq = make_lpq(2, 2, &unit_eps(2)).unwrap();
    println!("\nalgebra: {lpq}");
    match independence_certificate(&lpq, 3).unwrap() {
        CertificateOutcome::Certified { monomials, .. } => {
            println!("length <= 3: certified free ({monomials} monomials)")
        }
        CertificateOutcome::Refuted { .. } => println!("refuted"),
    }
}
