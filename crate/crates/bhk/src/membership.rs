//! Ideal and radical membership with replayable certificates.
//!
//! Radical membership uses the Rabinowitsch trick: `f` lies in the radical
//! of `I` iff `1` lies in `I + <1 - t f>` after adjoining a fresh variable
//! `t`. Certificates store exact cofactor expressions over the original
//! generators, so replaying them never reruns a Gröbner computation.
//!
//! The structured-propagation certificate encodes a derivative-walk proof:
//! starting from monomials of a subideal, each step takes one partial
//! derivative of the superpotential, absorbs all but one term into the
//! current known set (support-divisibility against squarefree monomials),
//! and concludes that the remaining term's support lies in the radical.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, divide, GroebnerBasis, GroebnerConfig};
use crate::mat::Rat;
use crate::mpoly::{Monomial, Poly, Ring};

/// Finitely generated ideal in a fixed ring.
#[derive(Clone, Debug)]
pub struct PolyIdeal {
    ring: Ring,
    pub generators: Vec<Poly>,
}

impl PolyIdeal {
    pub fn new(ring: Ring, generators: Vec<Poly>) -> Self {
        let generators: Vec<Poly> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &generators {
            assert_eq!(g.ring(), &ring, "generator in a different ring");
        }
        PolyIdeal { ring, generators }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Ideal generated by all first partial derivatives of `w` (including the
/// fiber variable).
pub fn jacobian_ideal(w: &Poly) -> PolyIdeal {
    let ring = w.ring().clone();
    let gens: Vec<Poly> = (0..ring.n_vars())
        .map(|v| w.partial_derivative(v))
        .filter(|p| !p.is_zero())
        .collect();
    PolyIdeal::new(ring, gens)
}

/// One step of a structured propagation proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropagationStep {
    /// Ring variable the derivative is taken against.
    pub variable: usize,
    /// Optional variable the derivative is multiplied by first.
    pub multiplier: Option<usize>,
    /// Squarefree monomial concluded to lie in the radical.
    pub concluded: Monomial,
}

/// Replayable proof of membership(s) in a radical ideal.
#[derive(Clone, Debug)]
pub enum MembershipCertificate {
    /// `f = sum_i cofactors[i] * generators[i] + remainder`; membership
    /// holds iff the remainder is zero.
    DirectReduction {
        cofactors: Vec<Poly>,
        remainder: Poly,
    },
    /// `1 = sum_i cofactors[i] * lift(generators[i]) + aux * (1 - t*lift(f))`
    /// in the ring extended by `t`.
    Rabinowitsch {
        cofactors: Vec<Poly>,
        aux_cofactor: Poly,
    },
    /// Derivative-propagation walk: all but one term of each derivative is
    /// absorbed by the known set, proving the survivor's support radical-
    /// membership. Valid for the ideal `(jacobian(w), subideal)`.
    StructuredPropagation {
        initial_known: Vec<Monomial>,
        steps: Vec<PropagationStep>,
    },
}

impl MembershipCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            MembershipCertificate::DirectReduction { .. } => "direct-reduction",
            MembershipCertificate::Rabinowitsch { .. } => "rabinowitsch",
            MembershipCertificate::StructuredPropagation { .. } => "structured-propagation",
        }
    }
}

/// Divide `f` by the reduced basis; on zero remainder the certificate
/// carries cofactors over the *original* generators.
pub fn ideal_membership(f: &Poly, gb: &GroebnerBasis) -> (bool, MembershipCertificate) {
    let (quots, rem) = divide(f, &gb.basis);
    let n_gens = gb.generators.len();
    let mut cof = vec![Poly::zero(&gb.ring); n_gens];
    for (i, q) in quots.iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        for g in 0..n_gens {
            let add = q.mul(&gb.cofactors[i][g]);
            cof[g] = cof[g].add(&add);
        }
    }
    let member = rem.is_zero();
    (
        member,
        MembershipCertificate::DirectReduction {
            cofactors: cof,
            remainder: rem,
        },
    )
}

/// Replay a direct-reduction certificate: checks the division identity.
pub fn replay_direct(
    f: &Poly,
    generators: &[Poly],
    cofactors: &[Poly],
    remainder: &Poly,
) -> bool {
    if cofactors.len() != generators.len() {
        return false;
    }
    let mut acc = remainder.clone();
    for (c, g) in cofactors.iter().zip(generators) {
        acc = acc.add(&c.mul(g));
    }
    acc == *f
}

/// Precomputed data for repeated radical-membership queries against one
/// ideal.
pub struct RadicalOracle {
    ideal: PolyIdeal,
    base_gb: GroebnerBasis,
    config: GroebnerConfig,
}

impl RadicalOracle {
    pub fn new(ideal: PolyIdeal, config: GroebnerConfig) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ResourceLimit(
                "radical membership in the zero ideal is degenerate".into(),
            ));
        }
        let base_gb = buchberger(&ideal.generators, &config)?;
        Ok(RadicalOracle {
            ideal,
            base_gb,
            config,
        })
    }

    pub fn ideal(&self) -> &PolyIdeal {
        &self.ideal
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.base_gb
    }

    /// Plain ideal membership against the precomputed basis.
    pub fn is_member(&self, f: &Poly) -> (bool, MembershipCertificate) {
        ideal_membership(f, &self.base_gb)
    }

    /// `f ∈ √I`? Tries plain membership first, then Rabinowitsch.
    pub fn radical_member(&self, f: &Poly) -> Result<(bool, MembershipCertificate)> {
        if f.is_zero() {
            return Ok((
                true,
                MembershipCertificate::DirectReduction {
                    cofactors: vec![Poly::zero(&self.ideal.ring); self.ideal.generators.len()],
                    remainder: Poly::zero(&self.ideal.ring),
                },
            ));
        }
        let (member, cert) = self.is_member(f);
        if member {
            return Ok((true, cert));
        }
        let ext = self.ideal.ring.extended("t");
        let t = Poly::var(&ext, ext.n_vars() - 1);
        let mut gens: Vec<Poly> = self
            .ideal
            .generators
            .iter()
            .map(|g| g.lift_to(&ext))
            .collect();
        let aux = Poly::one(&ext).sub(&t.mul(&f.lift_to(&ext)));
        gens.push(aux);
        let gb = buchberger(&gens, &self.config)?;
        if gb.contains_unit() {
            debug_assert_eq!(gb.basis.len(), 1);
            let cofs = gb.cofactors[0].clone();
            let (aux_cofactor, cofactors) = match cofs.split_last() {
                Some((last, rest)) => (last.clone(), rest.to_vec()),
                None => unreachable!("generator list is nonempty"),
            };
            Ok((
                true,
                MembershipCertificate::Rabinowitsch {
                    cofactors,
                    aux_cofactor,
                },
            ))
        } else {
            // not in the radical; return the failed direct reduction as
            // evidence (replayable, though completeness rests on the basis)
            Ok((false, cert))
        }
    }
}

/// One-shot radical membership.
pub fn radical_membership(
    f: &Poly,
    ideal: &PolyIdeal,
    config: &GroebnerConfig,
) -> Result<(bool, MembershipCertificate)> {
    RadicalOracle::new(ideal.clone(), config.clone())?.radical_member(f)
}

/// Replay a Rabinowitsch certificate for `f ∈ √<generators>`.
pub fn replay_rabinowitsch(
    f: &Poly,
    generators: &[Poly],
    cofactors: &[Poly],
    aux_cofactor: &Poly,
) -> bool {
    if cofactors.len() != generators.len() {
        return false;
    }
    let ring = f.ring();
    let ext = aux_cofactor.ring().clone();
    if ext.n_vars() != ring.n_vars() + 1 {
        return false;
    }
    let t = Poly::var(&ext, ext.n_vars() - 1);
    let mut acc = aux_cofactor.mul(&Poly::one(&ext).sub(&t.mul(&f.lift_to(&ext))));
    for (c, g) in cofactors.iter().zip(generators) {
        acc = acc.add(&c.mul(&g.lift_to(&ext)));
    }
    acc == Poly::one(&ext)
}

/// Membership of every minimal generator of the monomial ideal `i_gens`
/// in `√ideal`; true iff all pass.
pub fn containment_radical(
    i_gens: &[Monomial],
    ideal: &PolyIdeal,
    config: &GroebnerConfig,
) -> Result<(bool, Vec<MembershipCertificate>)> {
    let oracle = RadicalOracle::new(ideal.clone(), config.clone())?;
    let mut certs = Vec::with_capacity(i_gens.len());
    let mut all = true;
    for m in i_gens {
        let f = Poly::term(&oracle.ideal.ring, m.clone(), Rat::one());
        let (ok, cert) = oracle.radical_member(&f)?;
        all &= ok;
        certs.push(cert);
    }
    Ok((all, certs))
}

/// Outcome of executing a propagation schedule.
pub struct PropagationOutcome {
    pub certificate: MembershipCertificate,
    /// Squarefree monomials proven to lie in the radical, in derivation
    /// order (the known set minus the initial seeds).
    pub derived: Vec<Monomial>,
}

/// Execute a derivative-walk schedule against `w` and the squarefree
/// subideal generators. Each scheduled step takes
/// `multiplier * d w / d variable` and absorbs every term whose support
/// contains a known monomial's support. Exactly one surviving term makes
/// its support monomial known; zero survivors is a no-op (the step taught
/// nothing); two or more survivors abort the walk.
pub fn propagate(
    w: &Poly,
    subideal_gens: &[Monomial],
    schedule: &[(usize, Option<usize>)],
) -> Option<PropagationOutcome> {
    let mut known: Vec<Monomial> = subideal_gens.iter().map(|m| m.support_monomial()).collect();
    let mut steps = Vec::with_capacity(schedule.len());
    let mut derived = Vec::new();
    for &(variable, multiplier) in schedule {
        let mut g = w.partial_derivative(variable);
        if let Some(mv) = multiplier {
            g = g.mul(&Poly::var(w.ring(), mv));
        }
        let mut survivor: Option<Monomial> = None;
        for (m, _) in g.terms() {
            if known.iter().any(|k| k.support_subset_of(m)) {
                continue;
            }
            match survivor {
                None => survivor = Some(m.clone()),
                Some(_) => return None, // more than one unabsorbed term
            }
        }
        let Some(survivor) = survivor else { continue };
        let concluded = survivor.support_monomial();
        if concluded.is_one() {
            return None; // a surviving constant would mean the unit ideal
        }
        known.push(concluded.clone());
        derived.push(concluded.clone());
        steps.push(PropagationStep {
            variable,
            multiplier,
            concluded,
        });
    }
    let initial_known = subideal_gens.iter().map(|m| m.support_monomial()).collect();
    Some(PropagationOutcome {
        certificate: MembershipCertificate::StructuredPropagation {
            initial_known,
            steps,
        },
        derived,
    })
}

/// Replay a structured certificate: re-derives every step by exact
/// arithmetic and then checks that each target monomial's support contains
/// the support of some known monomial. Soundness: each `initial_known`
/// must be (the support of) a generator of the subideal, each derivative
/// lies in the Jacobian ideal, and absorbed terms lie in the radical by
/// squarefree support divisibility.
pub fn replay_structured(
    w: &Poly,
    subideal_gens: &[Monomial],
    initial_known: &[Monomial],
    steps: &[PropagationStep],
    targets: &[Monomial],
) -> bool {
    // initial knowns must be supports of actual subideal generators
    for k in initial_known {
        if !subideal_gens.iter().any(|g| &g.support_monomial() == k) {
            return false;
        }
    }
    let mut known: Vec<Monomial> = initial_known.to_vec();
    for step in steps {
        let mut g = w.partial_derivative(step.variable);
        if let Some(mv) = step.multiplier {
            g = g.mul(&Poly::var(w.ring(), mv));
        }
        let mut surviving: Option<(Monomial, Rat)> = None;
        for (m, c) in g.terms() {
            if known.iter().any(|k| k.support_subset_of(m)) {
                continue;
            }
            match surviving {
                None => surviving = Some((m.clone(), c.clone())),
                Some(_) => return false,
            }
        }
        let Some((m, c)) = surviving else { return false };
        if c.is_zero() || m.support_monomial() != step.concluded || step.concluded.is_one() {
            return false;
        }
        known.push(step.concluded.clone());
    }
    targets
        .iter()
        .all(|t| known.iter().any(|k| k.support_subset_of(t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::RingContext;

    fn ring2() -> Ring {
        RingContext::new(vec!["x".into(), "y".into()])
    }

    #[test]
    fn jacobian_ideal_basics() {
        let r = ring2();
        let x = Poly::var(&r, 0);
        let w = x.mul(&x);
        let jac = jacobian_ideal(&w);
        assert_eq!(jac.generators.len(), 1);
        assert_eq!(jac.generators[0].to_text(), "2*x");
        let jac = jacobian_ideal(&Poly::zero(&r));
        assert!(jac.is_zero());
    }

    #[test]
    fn membership_basics() {
        let r = ring2();
        let x = Poly::var(&r, 0);
        let ideal = PolyIdeal::new(r.clone(), vec![x.clone()]);
        let gb = buchberger(&ideal.generators, &GroebnerConfig::default()).unwrap();
        let (ok, cert) = ideal_membership(&x, &gb);
        assert!(ok);
        match &cert {
            MembershipCertificate::DirectReduction {
                cofactors,
                remainder,
            } => {
                assert!(replay_direct(&x, &ideal.generators, cofactors, remainder));
            }
            _ => panic!("wrong certificate kind"),
        }
        let x2 = x.mul(&x);
        let gb2 = buchberger(&[x2.clone()], &GroebnerConfig::default()).unwrap();
        let (ok, _) = ideal_membership(&x, &gb2);
        assert!(!ok, "x is not in <x^2>");
    }

    #[test]
    fn radical_membership_basics() {
        let r = ring2();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let x2 = x.mul(&x);
        let cfg = GroebnerConfig::default();
        // x ∈ √<x^2>
        let ideal = PolyIdeal::new(r.clone(), vec![x2]);
        let (ok, cert) = radical_membership(&x, &ideal, &cfg).unwrap();
        assert!(ok);
        match &cert {
            MembershipCertificate::Rabinowitsch {
                cofactors,
                aux_cofactor,
            } => {
                assert!(replay_rabinowitsch(
                    &x,
                    &ideal.generators,
                    cofactors,
                    aux_cofactor
                ));
            }
            _ => panic!("expected a Rabinowitsch certificate"),
        }
        // y ∉ √<x>
        let ideal = PolyIdeal::new(r.clone(), vec![x.clone()]);
        let (ok, _) = radical_membership(&y, &ideal, &cfg).unwrap();
        assert!(!ok);
    }

    #[test]
    fn certificate_replay_random_instances() {
        let r = ring2();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let gens = vec![
            x.mul(&x).sub(&y),
            x.mul(&y).sub(&Poly::one(&r)),
        ];
        let gb = buchberger(&gens, &GroebnerConfig::default()).unwrap();
        assert!(gb.verify_cofactors());
        // fifty random combinations must replay and re-sum to f
        let mut seed = 7u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((seed >> 33) % 5) as i64
        };
        for _ in 0..50 {
            let a = Poly::constant(&r, crate::mat::rat(next(), 1));
            let b = Poly::term(
                &r,
                Monomial(vec![next() as u32 % 3, next() as u32 % 3]),
                crate::mat::rat(1 + next(), 1),
            );
            let f = a.mul(&gens[0]).add(&b.mul(&gens[1]));
            let (ok, cert) = ideal_membership(&f, &gb);
            assert!(ok);
            match cert {
                MembershipCertificate::DirectReduction {
                    cofactors,
                    remainder,
                } => {
                    assert!(replay_direct(&f, &gens, &cofactors, &remainder));
                    assert!(remainder.is_zero());
                }
                _ => panic!(),
            }
        }
    }

    #[test]
    fn containment_of_monomial_ideal() {
        // <x> ⊆ √<x^2, xy> fails for y-free reasons? x ∈ √ since x^2 ∈ I.
        let r = ring2();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let ideal = PolyIdeal::new(r.clone(), vec![x.mul(&x), x.mul(&y)]);
        let cfg = GroebnerConfig::default();
        let (ok, certs) =
            containment_radical(&[Monomial(vec![1, 0])], &ideal, &cfg).unwrap();
        assert!(ok);
        assert_eq!(certs.len(), 1);
        let (ok, _) = containment_radical(&[Monomial(vec![0, 1])], &ideal, &cfg).unwrap();
        assert!(!ok, "y is not in the radical");
    }

    #[test]
    fn propagation_walk_toy_case() {
        // w = u*x^2 + u*y^3  (a Fermat-like toy), J = <x*y>
        // d/dx w = 2ux: not useful; instead check the exactly-one-survivor
        // rule: d/dy w = 3uy^2 with known {xy} leaves one survivor uy^2,
        // concluding uy.
        let r = RingContext::new(vec!["x".into(), "y".into(), "u".into()]);
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let u = Poly::var(&r, 2);
        let w = u.mul(&x).mul(&x).add(&u.mul(&y).mul(&y).mul(&y));
        let j = Monomial(vec![1, 1, 0]);
        let out = propagate(&w, &[j.clone()], &[(1, None)]).unwrap();
        assert_eq!(out.derived, vec![Monomial(vec![0, 1, 1])]);
        match &out.certificate {
            MembershipCertificate::StructuredPropagation {
                initial_known,
                steps,
            } => {
                assert!(replay_structured(
                    &w,
                    &[j.clone()],
                    initial_known,
                    steps,
                    &[Monomial(vec![0, 1, 1])]
                ));
                // a target outside the known set must fail
                assert!(!replay_structured(
                    &w,
                    &[j],
                    initial_known,
                    steps,
                    &[Monomial(vec![1, 0, 1])]
                ));
            }
            _ => panic!(),
        }
        // two survivors -> no certificate
        let w2 = u.mul(&x).add(&u.mul(&y)).add(&x.mul(&y));
        assert!(propagate(&w2, &[], &[(0, None)]).is_none());
    }
}
