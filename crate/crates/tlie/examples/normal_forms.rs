//! PBW normal forms in the universal enveloping algebra: rewrite disordered
//! words, watch the trace, and multiply normal forms.
//!
//! ```sh
//! cargo run --example normal_forms
//! ```

use tlie::algebra::{TensorPoly, Word};
use tlie::catalog::make_sl_plus_q;
use tlie::cli::expr::parse_for_spec;
use tlie::enveloping::{measure, normalize, normalize_traced, pbw_multiply};

fn main() {
    let spec = make_sl_plus_q(3);
    println!("algebra: {spec}");

    for src in ["e23.e12", "e24.e13", "e34.e23.e12", "e14.e13.e12"] {
        let input = parse_for_spec(src, &spec).unwrap();
        let (nf, trace) = normalize_traced(&spec, &input);
        println!("\nnormalize({src}) = {}", spec.render_poly(&nf.as_tensor()));
        for step in &trace {
            let before = measure(&spec, &step.before);
            println!(
                "  [δ={:>2} D={}] {} -> {}",
                before.delta,
                before.disorder,
                spec.render_word(&step.before),
                spec.render_poly(&step.after)
            );
        }
    }

    // products of normal forms stay normal: u * v = normalize(u ⊗ v)
    let u = normalize(&spec, &parse_for_spec("e13", &spec).unwrap());
    let v = normalize(&spec, &parse_for_spec("e12", &spec).unwrap());
    let product = pbw_multiply(&spec, &u, &v);
    println!("\n(e13)·(e12) = {}", spec.render_poly(&product.as_tensor()));

    // the empty word is the unit
    let one = normalize(&spec, &TensorPoly::from_word(Word::empty()));
    assert_eq!(pbw_multiply(&spec, &one, &u), u);
}
