//! Parse invertible polynomials, decompose them into atomic types, and
//! print their diagrams.

use bhk::invertible::{classify, diagram, InvertiblePolynomial};

fn main() {
    for text in [
        "x0^5+x1^5+x2^5+x3^5+x4^5",
        "x0^4*x1+x1^4*x2+x2^4*x3+x3^4*x4+x4^5",
        "x0^3+x1^2*x2+x2^3",
        "x0^3*x1+x1^3*x2+x2^3*x0",
    ] {
        let p = InvertiblePolynomial::parse(text).unwrap();
        println!("{p}");
        let dec = classify(&p).unwrap();
        for part in &dec.parts {
            println!("  {}", part.describe());
        }
        let d = diagram(&p).unwrap();
        print!("{}", d.to_dot());
        println!();
    }

    // a polynomial that parses but is not of invertible shape
    let p = InvertiblePolynomial::parse("x0^2+x1").unwrap();
    match classify(&p) {
        Err(e) => println!("x0^2+x1 rejected as expected: {e}"),
        Ok(_) => unreachable!(),
    }
}
