//! Exact triangulation verification over a batch of randomly generated
//! Gorenstein cleaves: axioms, pairwise proper intersection, and the
//! normalized-volume cover, all in integer/rational arithmetic.

use bhk::cleave::{cleave_to_fermat, vertex_ordered};
use bhk::invertible::InvertiblePolynomial;
use bhk::symmetry::j_group;
use bhk::toric::{build_nu, triangulation_pair, verify_triangulation};

fn main() {
    // walk the chain quintic down to the Fermat quintic and verify every
    // intermediate pair of triangulations
    let chain = InvertiblePolynomial::parse("x0^4*x1+x1^4*x2+x2^4*x3+x3^4*x4+x4^5").unwrap();
    let chain = vertex_ordered(&chain).unwrap();
    let g = j_group(chain.matrix()).unwrap();
    let route = cleave_to_fermat(&chain, &g).unwrap();
    println!("{} cleaves from the chain quintic to the Fermat quintic", route.len());
    for (i, cl) in route.iter().enumerate() {
        let nu = build_nu(cl, &g).unwrap();
        let (t, t_prime) = triangulation_pair(&nu).unwrap();
        let total = nu.total_volume().unwrap();
        let vol = |tri: &bhk::toric::Triangulation| {
            tri.maximal_simplices
                .iter()
                .map(|s| nu.normalized_volume(s))
                .sum::<bhk::mat::Int>()
        };
        println!(
            "cleave {i}: |T| = {}, |T'| = {}, volumes {} + {} against hull volume {}",
            t.maximal_simplices.len(),
            t_prime.maximal_simplices.len(),
            vol(&t),
            vol(&t_prime),
            total,
        );
        assert!(verify_triangulation(&nu, &t).is_valid());
        assert!(verify_triangulation(&nu, &t_prime).is_valid());
    }
    println!("all triangulations pass the exact checks");
}
