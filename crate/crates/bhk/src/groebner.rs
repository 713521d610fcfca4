//! Buchberger Gröbner bases over the rationals with cofactor tracking.
//!
//! Pair selection uses the sugar strategy; the coprime-leading-term
//! criterion prunes pairs. Every basis element carries its expression in
//! the original generators so that membership certificates replay without
//! re-running the algorithm. Resource limits are explicit errors, never a
//! silent wrong answer.

use std::collections::BTreeSet;

use num_traits::One;

use crate::error::{Error, Result};
use crate::mat::Rat;
use crate::mpoly::{Monomial, Poly, Ring};

/// Resource limits for a single Buchberger run.
#[derive(Clone, Debug)]
pub struct GroebnerConfig {
    /// Maximum number of S-pairs reduced.
    pub max_spairs: usize,
    /// Maximum total number of terms held across the working basis.
    pub max_terms: usize,
    /// Stop as soon as a unit enters the basis (the ideal is then the whole
    /// ring); the returned basis is `{1}` with valid cofactors.
    pub abort_on_unit: bool,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_spairs: 50_000,
            max_terms: 5_000_000,
            abort_on_unit: true,
        }
    }
}

/// Reduced Gröbner basis plus the transformation onto the input generators.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub ring: Ring,
    /// Reduced monic basis, sorted by leading monomial.
    pub basis: Vec<Poly>,
    /// `basis[i] = sum_j cofactors[i][j] * generators[j]`.
    pub cofactors: Vec<Vec<Poly>>,
    /// The input generators the cofactors refer to.
    pub generators: Vec<Poly>,
}

impl GroebnerBasis {
    /// Check `basis[i] = sum_j cofactors[i][j] * generators[j]` exactly.
    pub fn verify_cofactors(&self) -> bool {
        self.basis.iter().zip(&self.cofactors).all(|(b, cofs)| {
            let mut acc = Poly::zero(&self.ring);
            for (c, g) in cofs.iter().zip(&self.generators) {
                acc = acc.add(&c.mul(g));
            }
            acc == *b
        })
    }

    pub fn contains_unit(&self) -> bool {
        self.basis.iter().any(|p| p.is_unit())
    }
}

/// Divide `f` by the list, returning `(quotients, remainder)` with
/// `f = sum_i quotients[i] * divisors[i] + remainder` and no remainder term
/// divisible by any divisor's leading term. Divisor choice is by list
/// order, so the result is deterministic.
pub fn divide(f: &Poly, divisors: &[Poly]) -> (Vec<Poly>, Poly) {
    let ring = f.ring().clone();
    let mut quotients = vec![Poly::zero(&ring); divisors.len()];
    let mut remainder = Poly::zero(&ring);
    let mut work = f.clone();
    while let Some((lm, lc)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let mut reduced = false;
        for (i, g) in divisors.iter().enumerate() {
            let Some((gm, gc)) = g.leading() else { continue };
            if gm.divides(&lm) {
                let qm = gm.divide_into(&lm);
                let qc = &lc / gc;
                quotients[i].add_term(qm.clone(), qc.clone());
                work = work.sub(&g.mul_term(&qm, &qc));
                reduced = true;
                break;
            }
        }
        if !reduced {
            remainder.add_term(lm.clone(), lc.clone());
            work.add_term(lm, -lc);
        }
    }
    (quotients, remainder)
}

struct WorkItem {
    poly: Poly,
    cofactors: Vec<Poly>,
    sugar: u64,
}

/// Buchberger's algorithm. Returns the reduced monic basis with cofactors
/// over the given generators (zero generators are tolerated and get zero
/// cofactors).
pub fn buchberger(generators: &[Poly], config: &GroebnerConfig) -> Result<GroebnerBasis> {
    assert!(!generators.is_empty(), "empty generator list");
    let ring = generators[0].ring().clone();
    let n_gens = generators.len();
    let mut basis: Vec<WorkItem> = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut cof = vec![Poly::zero(&ring); n_gens];
        cof[i] = Poly::one(&ring);
        basis.push(WorkItem {
            sugar: g.total_degree(),
            poly: g.clone(),
            cofactors: cof,
        });
    }
    if basis.is_empty() {
        return Ok(GroebnerBasis {
            ring,
            basis: Vec::new(),
            cofactors: Vec::new(),
            generators: generators.to_vec(),
        });
    }
    // pair queue keyed by (sugar, lcm, i, j) for determinism
    let mut pairs: BTreeSet<(u64, Monomial, usize, usize)> = BTreeSet::new();
    let add_pairs = |pairs: &mut BTreeSet<(u64, Monomial, usize, usize)>,
                         basis: &[WorkItem],
                         new_idx: usize| {
        let (nm, _) = basis[new_idx].poly.leading().unwrap();
        for i in 0..new_idx {
            let (im, _) = basis[i].poly.leading().unwrap();
            if im.gcd_is_one(nm) {
                continue; // product criterion
            }
            let lcm = im.lcm(nm);
            let sugar = (basis[i].sugar + lcm.degree() - im.degree())
                .max(basis[new_idx].sugar + lcm.degree() - nm.degree());
            pairs.insert((sugar, lcm, i, new_idx));
        }
    };
    for i in 0..basis.len() {
        add_pairs(&mut pairs, &basis, i);
    }
    let mut spairs_done = 0usize;
    let unit_found = |basis: &[WorkItem]| basis.iter().any(|w| w.poly.is_unit());
    while let Some(entry) = pairs.iter().next().cloned() {
        pairs.remove(&entry);
        if config.abort_on_unit && unit_found(&basis) {
            break;
        }
        spairs_done += 1;
        if spairs_done > config.max_spairs {
            return Err(Error::ResourceLimit(format!(
                "S-pair limit {} exceeded",
                config.max_spairs
            )));
        }
        let (sugar, lcm, i, j) = entry;
        let (fi, fj) = (&basis[i], &basis[j]);
        let (mi, ci) = fi.poly.leading().unwrap();
        let (mj, cj) = fj.poly.leading().unwrap();
        let ui = mi.divide_into(&lcm);
        let uj = mj.divide_into(&lcm);
        let inv_ci = Rat::one() / ci.clone();
        let inv_cj = Rat::one() / cj.clone();
        let spoly = fi
            .poly
            .mul_term(&ui, &inv_ci)
            .sub(&fj.poly.mul_term(&uj, &inv_cj));
        let mut scof: Vec<Poly> = Vec::with_capacity(n_gens);
        for k in 0..n_gens {
            scof.push(
                fi.cofactors[k]
                    .mul_term(&ui, &inv_ci)
                    .sub(&fj.cofactors[k].mul_term(&uj, &inv_cj)),
            );
        }
        // full reduction by the current basis
        let divisors: Vec<Poly> = basis.iter().map(|w| w.poly.clone()).collect();
        let (quots, rem) = divide(&spoly, &divisors);
        if rem.is_zero() {
            continue;
        }
        for (k, q) in quots.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for g in 0..n_gens {
                let sub = q.mul(&basis[k].cofactors[g]);
                scof[g] = scof[g].sub(&sub);
            }
        }
        // normalize to a primitive representative to tame coefficient growth
        let prim = rem.primitive();
        let factor = {
            // prim = rem * s  =>  rem = prim / s; cofactors scale by 1/s
            let (pm, pc) = prim.leading().unwrap();
            let (_, rc) = rem.leading().unwrap();
            debug_assert_eq!(pm, rem.leading().unwrap().0);
            rc / pc
        };
        // rem = factor * prim, so cofactors of prim are scof / factor
        let inv_factor = Rat::one() / factor;
        let scof: Vec<Poly> = scof.iter().map(|c| c.scale(&inv_factor)).collect();
        let new_sugar = sugar.max(prim.total_degree());
        basis.push(WorkItem {
            poly: prim,
            cofactors: scof,
            sugar: new_sugar,
        });
        let idx = basis.len() - 1;
        add_pairs(&mut pairs, &basis, idx);
        let total_terms: usize = basis.iter().map(|w| w.poly.n_terms()).sum();
        if total_terms > config.max_terms {
            return Err(Error::ResourceLimit(format!(
                "term limit {} exceeded",
                config.max_terms
            )));
        }
        if config.abort_on_unit && basis[idx].poly.is_unit() {
            break;
        }
    }
    // interreduce to the reduced monic basis
    reduce_basis(ring, basis, generators)
}

fn reduce_basis(
    ring: Ring,
    mut work: Vec<WorkItem>,
    generators: &[Poly],
) -> Result<GroebnerBasis> {
    // if a unit is present the reduced basis is {1}
    if let Some(pos) = work.iter().position(|w| w.poly.is_unit()) {
        let w = work.swap_remove(pos);
        let c = w.poly.leading().unwrap().1.clone();
        let inv = Rat::one() / c;
        let basis = vec![Poly::one(&ring)];
        let cof = vec![w.cofactors.iter().map(|p| p.scale(&inv)).collect()];
        return Ok(GroebnerBasis {
            ring,
            basis,
            cofactors: cof,
            generators: generators.to_vec(),
        });
    }
    // drop elements whose leading term is divisible by another's
    let mut keep: Vec<bool> = vec![true; work.len()];
    for i in 0..work.len() {
        if !keep[i] {
            continue;
        }
        let (mi, _) = work[i].poly.leading().unwrap();
        for j in 0..work.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (mj, _) = work[j].poly.leading().unwrap();
            if mj.divides(mi) && (mj != mi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut kept: Vec<WorkItem> = work
        .into_iter()
        .zip(keep)
        .filter_map(|(w, k)| k.then_some(w))
        .collect();
    kept.sort_by(|a, b| a.poly.leading().unwrap().0.cmp(b.poly.leading().unwrap().0));
    // reduce each tail against the others
    let n = kept.len();
    let mut reduced: Vec<(Poly, Vec<Poly>)> = Vec::with_capacity(n);
    for i in 0..n {
        let others: Vec<Poly> = (0..n)
            .filter(|&j| j != i)
            .map(|j| kept[j].poly.clone())
            .collect();
        let (quots, rem) = divide(&kept[i].poly, &others);
        let mut cof = kept[i].cofactors.clone();
        for (slot, j) in (0..n).filter(|&j| j != i).enumerate() {
            let q = &quots[slot];
            if q.is_zero() {
                continue;
            }
            for g in 0..cof.len() {
                let sub = q.mul(&kept[j].cofactors[g]);
                cof[g] = cof[g].sub(&sub);
            }
        }
        // make monic
        let c = rem.leading().expect("reduced basis element is nonzero").1.clone();
        let inv = Rat::one() / c;
        reduced.push((rem.scale(&inv), cof.iter().map(|p| p.scale(&inv)).collect()));
    }
    reduced.sort_by(|a, b| a.0.leading().unwrap().0.cmp(b.0.leading().unwrap().0));
    let (basis, cofactors): (Vec<Poly>, Vec<Vec<Poly>>) = reduced.into_iter().unzip();
    Ok(GroebnerBasis {
        ring,
        basis,
        cofactors,
        generators: generators.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::rat;
    use crate::mpoly::RingContext;

    fn ring2() -> Ring {
        RingContext::new(vec!["x".into(), "y".into()])
    }

    #[test]
    fn basis_of_variables_is_itself() {
        let r = ring2();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let gb = buchberger(&[x.clone(), y.clone()], &GroebnerConfig::default()).unwrap();
        assert_eq!(gb.basis, vec![y, x]);
        assert!(gb.verify_cofactors());
    }

    #[test]
    fn basis_of_unit_ideal() {
        let r = ring2();
        let one = Poly::constant(&r, rat(3, 2));
        let gb = buchberger(&[one], &GroebnerConfig::default()).unwrap();
        assert_eq!(gb.basis, vec![Poly::one(&r)]);
        assert!(gb.verify_cofactors());
    }

    #[test]
    fn circle_and_line() {
        // <x^2 + y^2 - 1, x - y>: eliminating x gives 2y^2 - 1
        let r = ring2();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let f = x.mul(&x).add(&y.mul(&y)).sub(&Poly::one(&r));
        let g = x.sub(&y);
        let gb = buchberger(&[f, g], &GroebnerConfig::default()).unwrap();
        assert!(gb.verify_cofactors());
        // hand-elimination oracle: substitute x = y into f
        let want = y.mul(&y).scale(&rat(2, 1)).sub(&Poly::one(&r)).monic();
        assert!(gb.basis.contains(&want), "basis {:?}", gb.basis.iter().map(|p| p.to_text()).collect::<Vec<_>>());
        assert!(gb.basis.contains(&x.sub(&y)));
        assert_eq!(gb.basis.len(), 2);
    }

    #[test]
    fn buchberger_is_idempotent() {
        let r = ring2();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let f = x.mul(&x).sub(&y);
        let g = x.mul(&y).sub(&Poly::one(&r));
        let gb = buchberger(&[f, g], &GroebnerConfig::default()).unwrap();
        let gb2 = buchberger(&gb.basis, &GroebnerConfig::default()).unwrap();
        assert_eq!(gb.basis, gb2.basis);
    }

    #[test]
    fn division_identity_holds() {
        let r = ring2();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let f = x.mul(&x).mul(&y).add(&x.mul(&y).scale(&rat(3, 1))).sub(&y.mul(&y));
        let g1 = x.mul(&y).sub(&Poly::one(&r));
        let g2 = y.mul(&y).sub(&x);
        let (q, rem) = divide(&f, &[g1.clone(), g2.clone()]);
        let back = q[0].mul(&g1).add(&q[1].mul(&g2)).add(&rem);
        assert_eq!(back, f);
        // no remainder term divisible by a leading term
        for (m, _) in rem.terms() {
            assert!(!g1.leading().unwrap().0.divides(m));
            assert!(!g2.leading().unwrap().0.divides(m));
        }
    }

    #[test]
    fn spair_limit_errors() {
        let r = ring2();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let f = x.mul(&x).sub(&y);
        let g = x.mul(&y).sub(&Poly::one(&r));
        let config = GroebnerConfig {
            max_spairs: 0,
            ..Default::default()
        };
        assert!(matches!(
            buchberger(&[f, g], &config),
            Err(Error::ResourceLimit(_))
        ));
    }
}
