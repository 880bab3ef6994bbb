//! Truncated ideal membership with explicit certificates: decide whether a
//! tensor lies in the span of the defining relations within word-length and
//! grade bounds, and print the exact combination.
//!
//! ```sh
//! cargo run --example ideal_membership
//! ```

use tlie::catalog::{make_sl_plus_q, make_tilde_sl4};
use tlie::cli::expr::parse_for_spec;
use tlie::enveloping::{ideal_member_truncated, normalize, MembershipOutcome};

fn main() {
    let spec = make_sl_plus_q(2);

    // soundness of rewriting: t − normalize(t) is always a member
    let t = parse_for_spec("e23.e13.e12", &spec).unwrap();
    let diff = t.sub(&normalize(&spec, &t).as_tensor());
    match ideal_member_truncated(&spec, &diff, 3, 10).unwrap() {
        MembershipOutcome::Member(cert) => {
            println!(
                "t − normalize(t): member, {} generators used, ring-exact: {}",
                cert.combination.len(),
                cert.ring_exact
            );
            for (idx, c) in &cert.combination {
                let ctx = &cert.contexts[*idx];
                let (x, y) = ctx.pair;
                println!(
                    "  {:>12}  x  {} | g({}, {}) | {}",
                    c.render(spec.variables()),
                    spec.render_word(&ctx.left),
                    spec.element(x).id,
                    spec.element(y).id,
                    spec.render_word(&ctx.right),
                );
            }
        }
        other => println!("unexpected: {other:?}"),
    }

    // the collapse certificate in the pseudobracket-erased algebra needs
    // the fraction field: the cleared identity is (q²−1)·e23⊗e14 ∈ J
    let tilde = make_tilde_sl4();
    let dead = parse_for_spec("e23.e14", &tilde).unwrap();
    match ideal_member_truncated(&tilde, &dead, 3, 8).unwrap() {
        MembershipOutcome::Member(cert) => {
            println!(
                "\ne23.e14 in {}: member, ring-exact: {}, clearing denominator: {}",
                tilde.name(),
                cert.ring_exact,
                cert.clearing.render(tilde.variables())
            );
        }
        other => println!("unexpected: {other:?}"),
    }
}
