//! The cubic curve walkthrough: one cleave between x0^3 + x1^2*x2 + x2^3
//! and the Fermat cubic, carried all the way to the certified containments.

use bhk::cleave::detect_cleave;
use bhk::invertible::InvertiblePolynomial;
use bhk::mat::{rat_int, Rat};
use bhk::pipeline::{verify_cleave, PipelineConfig};
use bhk::symmetry::j_group;
use bhk::toric::{build_nu, regularity_certificate, triangulation_pair, verify_triangulation};

fn main() {
    let p = InvertiblePolynomial::parse("x0^3+x1^2*x2+x2^3").unwrap();
    let q = InvertiblePolynomial::parse("x0^3+x1^3+x2^3").unwrap();
    let cl = detect_cleave(&p, &q).unwrap();
    println!(
        "cleave at row {} ({}), arrow to x{}, index set {:?}",
        cl.k,
        cl.direction.as_str(),
        cl.arrow_target,
        cl.index_set
    );

    let g = j_group(p.matrix()).unwrap();
    let nu = build_nu(&cl, &g).unwrap();
    println!("nu:");
    for (pt, name) in nu.points.iter().zip(&nu.names) {
        let c: Vec<String> = pt.iter().map(|x| x.to_string()).collect();
        println!("  {name} = ({})", c.join(","));
    }

    let (t, t_prime) = triangulation_pair(&nu).unwrap();
    println!("T  = {:?}", t.maximal_simplices);
    println!("T' = {:?}", t_prime.maximal_simplices);
    println!("T  verified: {:?}", verify_triangulation(&nu, &t));
    println!("T' verified: {:?}", verify_triangulation(&nu, &t_prime));
    if let Some(heights) = regularity_certificate(&nu, &t) {
        let h: Vec<String> = heights.iter().map(|x| x.to_string()).collect();
        println!("regularity heights for T: ({})", h.join(", "));
    }

    // certify the pencil with generic coefficients
    let b = vec![rat_int(2), rat_int(-1), Rat::new(3.into(), 7.into())];
    let c = rat_int(1);
    let cert = verify_cleave(&cl, &g, &b, &c, &PipelineConfig::default()).unwrap();
    println!("I_p = <{}>", cert.i_p.generators_text().join(", "));
    println!("J_p = <{}>", cert.j_p.generators_text().join(", "));
    println!("I_q = <{}>", cert.i_q.generators_text().join(", "));
    println!("w   = {}", cert.w);
    println!("w_p = {}", cert.w_p);
    println!("w_q = {}", cert.w_q);
    println!(
        "containments: p = {} (fast path {}), q = {} (fast path {})",
        cert.containment_p.holds,
        cert.containment_p.fast_path.is_some(),
        cert.containment_q.holds,
        cert.containment_q.fast_path.is_some(),
    );
    println!("mirror of F_A  sits in {}", cert.mirror_a.ambient_text());
    println!("mirror of F_A' sits in {}", cert.mirror_a_prime.ambient_text());
    println!("certified: {}", cert.certified);
}
