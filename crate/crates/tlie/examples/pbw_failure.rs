//! How the PBW property breaks: erase the pseudobracket of the 6-element
//! deformed algebra and watch the rewriting system lose confluence, a sorted
//! monomial collapse into the defining ideal, and the independence
//! certificate refute itself.
//!
//! ```sh
//! cargo run --example pbw_failure
//! ```

use tlie::algebra::TensorPoly;
use tlie::catalog::{make_sl_plus_q, make_tilde_sl4};
use tlie::cli::expr::parse_for_spec;
use tlie::enveloping::{diamond_check, ideal_member_truncated, MembershipOutcome};
use tlie::symrep::{independence_certificate, CertificateOutcome, RefutationWitness};

fn main() {
    let tilde = make_tilde_sl4();
    let true_deformation = make_sl_plus_q(3);

    // 1. local confluence fails
    let report = diamond_check(&tilde, 12);
    println!(
        "diamond check on {}: {} ({} critical words)",
        tilde.name(),
        if report.passed() { "pass" } else { "FAIL" },
        report.checked
    );
    for w in &report.witnesses {
        let ids: Vec<&str> = w.triple.iter().map(|&x| tilde.element(x).id.as_str()).collect();
        println!(
            "  {}: left-first {}  vs  right-first {}",
            ids.join("."),
            tilde.render_poly(&w.left_first.as_tensor()),
            tilde.render_poly(&w.right_first.as_tensor())
        );
    }

    // 2. the sorted monomial e23·e14 dies in the quotient
    let collapse: TensorPoly = parse_for_spec("e23.e14", &tilde).unwrap();
    match ideal_member_truncated(&tilde, &collapse, 3, 8).unwrap() {
        MembershipOutcome::Member(cert) => {
            println!("\ne23.e14 lies in the defining ideal (verified: {})", cert.verified);
            if !cert.ring_exact {
                println!(
                    "  over the fraction field; clearing by {} gives the ring identity",
                    cert.clearing.render(tilde.variables())
                );
            }
            println!("  combination of {} spanning elements", cert.combination.len());
        }
        other => println!("unexpected: {other:?}"),
    }

    // while in the true deformation the same word survives
    let alive = parse_for_spec("e23.e14", &true_deformation).unwrap();
    match ideal_member_truncated(&true_deformation, &alive, 3, 8).unwrap() {
        MembershipOutcome::NotMemberWithinBounds { generators } => println!(
            "in {} the same word is independent of all {} spanning elements",
            true_deformation.name(),
            generators
        ),
        other => println!("unexpected: {other:?}"),
    }

    // 3. the certificate machinery refutes PBW for the erased algebra
    match independence_certificate(&tilde, 2).unwrap() {
        CertificateOutcome::Refuted { witness } => match *witness {
            RefutationWitness::LemmaC(w) => println!(
                "\nPBW independence refuted: representation property fails at ({}, {}) on z_[{}], discrepancy {}",
                tilde.element(w.lambda).id,
                tilde.element(w.mu).id,
                tilde.render_word(&w.monomial),
                tilde.render_poly(&w.discrepancy.as_tensor())
            ),
            RefutationWitness::Monomial { monomial, acts_to } => println!(
                "\nPBW independence refuted: {} acts on 1 as {}",
                tilde.render_word(&monomial),
                tilde.render_poly(&acts_to.as_tensor())
            ),
        },
        CertificateOutcome::Certified { .. } => println!("unexpectedly certified"),
    }
}
