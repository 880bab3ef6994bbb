//! Specialization at q = 1: the deformed algebra degenerates to the
//! classical upper-triangular Lie algebra, and specialization commutes with
//! normal forms.
//!
//! ```sh
//! cargo run --example specialize
//! ```

use num::BigInt;
use tlie::algebra::TensorPoly;
use tlie::catalog::{make_classical_sl, make_sl_plus_q};
use tlie::cli::expr::parse_for_spec;
use tlie::enveloping::{normalize, specialize_enveloping};
use tlie::scalar::{LaurentScalar, Rational};

fn main() {
    let deformed = make_sl_plus_q(3);
    let one = Rational::from(BigInt::from(1));
    let at_one = specialize_enveloping(&deformed, &[one.clone()]).unwrap();
    let classical = make_classical_sl(4);

    println!("specializing {} at q = 1:", deformed.name());
    let mut agree = true;
    for x in at_one.ids() {
        for y in at_one.ids() {
            agree &= at_one.sym_coeff(x, y).is_one();
            agree &= at_one.bracket_of(x, y) == classical.bracket_of(x, y);
            agree &= at_one.pseudo_of(x, y).is_zero();
        }
    }
    println!("  structure constants equal classical {}: {agree}", classical.name());

    // the commuting square: normalize then specialize = specialize then
    // normalize
    let input = parse_for_spec("e34.e23.e12 - 2 * e24.e13", &deformed).unwrap();
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
    let route_a = normalize(&at_one, &specialize_poly(&input));
    let route_b = specialize_poly(&normalize(&deformed, &input).as_tensor());
    println!(
        "\nnormalize∘specialize = specialize∘normalize: {}",
        route_a.as_tensor() == route_b
    );
    println!("  both give {}", at_one.render_poly(&route_a.as_tensor()));
}
