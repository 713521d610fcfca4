//! Transposed polynomials, weight systems, and the Calabi-Yau index.
//!
//! The chain quintic is the standard example whose mirror lands in a
//! non-Gorenstein weighted projective space; its weights come out of the
//! exact linear solve.

use bhk::invertible::{calabi_yau_index, is_gorenstein, InvertiblePolynomial};
use bhk::pipeline::bhk_mirror;
use bhk::symmetry::j_group;
use bhk::weights::positive_weight_solve;

fn main() {
    let chain = InvertiblePolynomial::parse("x0^4*x1+x1^4*x2+x2^4*x3+x3^4*x4+x4^5").unwrap();
    println!("F_A   = {chain}");
    println!("F_A^T = {}", chain.transpose());

    let w = positive_weight_solve(chain.matrix()).unwrap();
    println!("weights of F_A: {w}");
    println!(
        "calabi-yau index of F_A: {}",
        calabi_yau_index(&chain).unwrap()
    );

    let wt = positive_weight_solve(chain.transpose().matrix()).unwrap();
    println!("mirror weights (exact solve): {wt}");

    let j = j_group(chain.matrix()).unwrap();
    println!(
        "ambient of F_A is Gorenstein: {}",
        is_gorenstein(&w, &j)
    );
    let mirror = bhk_mirror(&chain, &j).unwrap();
    println!(
        "mirror ambient {} is Gorenstein: {}",
        mirror.ambient_text(),
        is_gorenstein(&mirror.mirror_weights, &mirror.dual)
    );
}
