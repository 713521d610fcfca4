//! Gröbner bases, ideal membership, and radical membership with
//! replayable certificates.

use bhk::groebner::{buchberger, GroebnerConfig};
use bhk::membership::{
    ideal_membership, radical_membership, replay_direct, replay_rabinowitsch,
    MembershipCertificate, PolyIdeal,
};
use bhk::mpoly::{Poly, RingContext};

fn main() {
    let ring = RingContext::new(vec!["x".into(), "y".into()]);
    let x = Poly::var(&ring, 0);
    let y = Poly::var(&ring, 1);

    // reduced basis of <x^2 + y^2 - 1, x - y>
    let circle = x.mul(&x).add(&y.mul(&y)).sub(&Poly::one(&ring));
    let line = x.sub(&y);
    let gens = vec![circle, line];
    let gb = buchberger(&gens, &GroebnerConfig::default()).unwrap();
    println!("reduced Gröbner basis of <x^2+y^2-1, x-y>:");
    for g in &gb.basis {
        println!("  {g}");
    }
    println!("cofactor identities verified: {}", gb.verify_cofactors());

    // membership with an exact division certificate
    let f = x.mul(&x).scale(&bhk::mat::rat(2, 1)).sub(&Poly::one(&ring));
    let (member, cert) = ideal_membership(&f, &gb);
    println!("2x^2 - 1 in the ideal: {member}");
    if let MembershipCertificate::DirectReduction {
        cofactors,
        remainder,
    } = &cert
    {
        println!(
            "certificate replays: {}",
            replay_direct(&f, &gens, cofactors, remainder)
        );
    }

    // radical membership via the Rabinowitsch trick: x ∈ √<x^2>
    let ideal = PolyIdeal::new(ring.clone(), vec![x.mul(&x)]);
    let (member, cert) =
        radical_membership(&x, &ideal, &GroebnerConfig::default()).unwrap();
    println!("x in the radical of <x^2>: {member}");
    if let MembershipCertificate::Rabinowitsch {
        cofactors,
        aux_cofactor,
    } = &cert
    {
        println!(
            "Rabinowitsch certificate replays: {}",
            replay_rabinowitsch(&x, &ideal.generators, cofactors, aux_cofactor)
        );
        println!("aux cofactor: {aux_cofactor}");
    }

    // a non-member
    let ideal = PolyIdeal::new(ring.clone(), vec![x.clone()]);
    let (member, _) = radical_membership(&y, &ideal, &GroebnerConfig::default()).unwrap();
    println!("y in the radical of <x>: {member}");
}
