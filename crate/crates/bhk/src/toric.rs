//! Exponent-coordinate model of the toric side of a cleave.
//!
//! All geometry happens directly on exponent vectors `s` lying on the
//! affine hyperplane `q·s = d`, restricted to the `G`-invariant sublattice;
//! no abstract lattice basis is ever chosen. Barycentric coordinates with
//! respect to the simplex of `A`-rows are rational linear solves, and
//! normalized volumes are determinants in a Hermite basis of the invariant
//! direction lattice.

use num_traits::{One, Signed, Zero};

use crate::cleave::{Cleave, CleaveDirection};
use crate::error::{Error, Result};
use crate::lp::feasible_point;
use crate::mat::{Int, IntMatrix, Rat, RatMatrix, RowLattice};
use crate::mpoly::{Monomial, Poly, Ring, RingContext};
use crate::symmetry::DiagonalGroup;
use crate::weights::WeightSystem;

/// Role of a point in the configuration ν.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointRole {
    /// Row `i` of the exponent matrix `A`.
    MonomialOfA(usize),
    /// Row `k` of `A'` (the cleaved monomial).
    CleavedMonomial,
    /// The interior point `(1, …, 1)`.
    Interior,
}

/// The point configuration ν of a cleave: the rows of `A`, row `k` of
/// `A'`, and the interior point, in that order. Every point has weighted
/// degree `d` and is `G`-invariant.
#[derive(Clone, Debug)]
pub struct PointConfig {
    pub points: Vec<Vec<Int>>,
    pub roles: Vec<PointRole>,
    /// Cox variable name per point; the interior point's variable is `u`.
    pub names: Vec<String>,
    pub weights: WeightSystem,
    pub group: DiagonalGroup,
    /// Index of row `k` of `A` within `points` (always `k`).
    pub k: usize,
    direction_basis: IntMatrix,
}

impl PointConfig {
    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    /// Ambient variable count `n+1` of the polynomials.
    pub fn n_vars(&self) -> usize {
        self.points.len() - 2
    }

    pub fn interior_index(&self) -> usize {
        self.points.len() - 1
    }

    pub fn cleaved_index(&self) -> usize {
        self.points.len() - 2
    }

    /// Indices of the `A`-side chart points (rows of `A`).
    pub fn xi_indices(&self) -> Vec<usize> {
        (0..self.n_vars()).collect()
    }

    /// Indices of the `A'`-side chart points.
    pub fn xi_prime_indices(&self) -> Vec<usize> {
        (0..self.n_vars())
            .map(|i| if i == self.k { self.cleaved_index() } else { i })
            .collect()
    }

    /// Polynomial ring on one variable per non-interior point plus `u`
    /// last, in ν order.
    pub fn ring(&self) -> Ring {
        RingContext::new(self.names.clone())
    }

    /// Normalized volume of the simplex on the given point indices with
    /// respect to the invariant direction lattice (0 when degenerate).
    pub fn normalized_volume(&self, simplex: &[usize]) -> Int {
        let dim = self.direction_basis.rows();
        if simplex.len() != dim + 1 {
            return Int::zero();
        }
        let base = &self.points[simplex[0]];
        let rows: Vec<Vec<Int>> = simplex[1..]
            .iter()
            .map(|&i| {
                (0..base.len())
                    .map(|c| &self.points[i][c] - &base[c])
                    .collect()
            })
            .collect();
        let lattice = RowLattice::span(&self.direction_basis);
        let coords = lattice.express(&IntMatrix::from_rows(rows));
        coords.det().abs()
    }

    /// Barycentric coordinates of `x` with respect to the simplex whose
    /// vertices are the given points (must be affinely independent).
    pub fn barycentric(&self, simplex: &[usize], x: &[Int]) -> Result<Vec<Rat>> {
        let cols: Vec<Vec<Rat>> = simplex
            .iter()
            .map(|&i| {
                self.points[i]
                    .iter()
                    .map(|v| Rat::from_integer(v.clone()))
                    .collect()
            })
            .collect();
        let m = RatMatrix::from_rows(cols).transpose();
        let rhs: Vec<Rat> = x.iter().map(|v| Rat::from_integer(v.clone())).collect();
        m.solve(&rhs)
    }

    /// Total normalized volume of `Conv(ν)`, via the pyramid decomposition
    /// over the simplex of `A`-rows and the facets visible from the
    /// cleaved point.
    pub fn total_volume(&self) -> Result<Int> {
        let xi = self.xi_indices();
        let mut total = self.normalized_volume(&xi);
        let lam = self.barycentric(&xi, &self.points[self.cleaved_index()])?;
        for (i, l) in lam.iter().enumerate() {
            if l.is_negative() {
                let mut pyramid: Vec<usize> =
                    xi.iter().copied().filter(|&j| j != i).collect();
                pyramid.push(self.cleaved_index());
                total += self.normalized_volume(&pyramid);
            }
        }
        Ok(total)
    }
}

/// All `G`-invariant exponent vectors of weighted degree `d`: the lattice
/// points of `(Δ, 1)` in exponent coordinates. Deterministic
/// (lexicographic) order.
pub fn anticanonical_invariant_monomials(
    w: &WeightSystem,
    group: &DiagonalGroup,
) -> Vec<Vec<Int>> {
    let n = w.len();
    let mut out = Vec::new();
    let mut current = vec![Int::zero(); n];
    fn rec(
        i: usize,
        remaining: Int,
        w: &WeightSystem,
        group: &DiagonalGroup,
        current: &mut Vec<Int>,
        out: &mut Vec<Vec<Int>>,
    ) {
        let n = w.len();
        if i == n {
            if remaining.is_zero() && group.is_invariant_exponent(current) {
                out.push(current.clone());
            }
            return;
        }
        let max = &remaining / &w.q[i];
        let mut e = Int::zero();
        while &e <= &max {
            current[i] = e.clone();
            let rest = &remaining - &(&e * &w.q[i]);
            rec(i + 1, rest, w, group, current, out);
            e += Int::one();
        }
        current[i] = Int::zero();
    }
    if n == 0 {
        return out;
    }
    rec(0, w.d.clone(), w, group, &mut current, &mut out);
    out
}

/// Build the configuration ν of a cleave: rows of `A`, then row `k` of
/// `A'`, then the interior point `(1,…,1)`.
///
/// The Fermat-form row is named `y{k}` and the arrow row `y{k}'`, matching
/// the chart naming that makes the `A`-side restriction of the
/// superpotential land in the variables of `A`'s monomials.
pub fn build_nu(cleave: &Cleave, group: &DiagonalGroup) -> Result<PointConfig> {
    let n = cleave.n_vars();
    let w = cleave.weights.clone();
    if group.n_vars() != n {
        return Err(Error::DimensionMismatch(format!(
            "group on {} variables, cleave on {}",
            group.n_vars(),
            n
        )));
    }
    let mut points: Vec<Vec<Int>> = (0..n).map(|r| cleave.a.row(r)).collect();
    points.push(cleave.a_prime.row(cleave.k));
    points.push(vec![Int::one(); n]);
    let mut roles: Vec<PointRole> = (0..n).map(PointRole::MonomialOfA).collect();
    roles.push(PointRole::CleavedMonomial);
    roles.push(PointRole::Interior);
    let mut names: Vec<String> = (0..n).map(|i| format!("y{i}")).collect();
    match cleave.direction {
        CleaveDirection::ArrowRemoved => {
            // row k of A carries the arrow, row k of A' is Fermat
            names[cleave.k] = format!("y{}'", cleave.k);
            names.push(format!("y{}", cleave.k));
        }
        CleaveDirection::ArrowAdded => {
            names.push(format!("y{}'", cleave.k));
        }
    }
    names.push("u".into());
    for (i, p) in points.iter().enumerate() {
        if w.degree_of(p) != w.d {
            return Err(Error::InvarianceViolation(format!(
                "point {i} has weighted degree {} != {}",
                w.degree_of(p),
                w.d
            )));
        }
        if !group.is_invariant_exponent(p) {
            return Err(Error::InvarianceViolation(format!(
                "point {i} ({}) is not G-invariant",
                names[i]
            )));
        }
    }
    // direction lattice: q·v = 0 intersected with the invariant lattice
    let q_matrix = IntMatrix::from_rows(w.q.iter().map(|x| vec![x.clone()]).collect());
    let hyper = RowLattice::span(&q_matrix.left_kernel());
    let invariant = group.invariant_exponent_lattice();
    let direction = hyper.intersect(&invariant);
    if direction.rank() != n - 1 {
        return Err(Error::DegenerateConfig(format!(
            "invariant direction lattice has rank {}, expected {}",
            direction.rank(),
            n - 1
        )));
    }
    Ok(PointConfig {
        points,
        roles,
        names,
        weights: w,
        group: group.clone(),
        k: cleave.k,
        direction_basis: direction.basis().clone(),
    })
}

/// A set of maximal simplices given by point indices, each sorted, the
/// list sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub maximal_simplices: Vec<Vec<usize>>,
}

impl Triangulation {
    fn new(mut simplices: Vec<Vec<usize>>) -> Self {
        for s in &mut simplices {
            s.sort_unstable();
        }
        simplices.sort();
        simplices.dedup();
        Triangulation {
            maximal_simplices: simplices,
        }
    }

    pub fn contains_point(&self, idx: usize) -> bool {
        self.maximal_simplices.iter().any(|s| s.contains(&idx))
    }
}

/// Why a triangulation check failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriangulationCheck {
    Valid,
    Invalid { axiom: String },
}

impl TriangulationCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, TriangulationCheck::Valid)
    }
}

/// The two triangulations of ν attached to a cleave.
///
/// Each is the star of the chart simplex from the interior point, plus,
/// when the opposite chart point lies outside that simplex, its joins with
/// the facets visible from it ("visible" = the facet's barycentric
/// coordinate is strictly negative there).
pub fn triangulation_pair(nu: &PointConfig) -> Result<(Triangulation, Triangulation)> {
    let t = one_sided_triangulation(nu, &nu.xi_indices(), nu.cleaved_index())?;
    let t_prime = one_sided_triangulation(nu, &nu.xi_prime_indices(), nu.k)?;
    Ok((t, t_prime))
}

fn one_sided_triangulation(
    nu: &PointConfig,
    chart: &[usize],
    opposite: usize,
) -> Result<Triangulation> {
    let interior = nu.interior_index();
    if nu.normalized_volume(chart).is_zero() {
        return Err(Error::DegenerateConfig(
            "chart points are affinely dependent".into(),
        ));
    }
    let lam_u = nu.barycentric(chart, &nu.points[interior])?;
    if lam_u.iter().any(|l| !l.is_positive()) {
        return Err(Error::DegenerateConfig(
            "interior point is not strictly inside the chart simplex".into(),
        ));
    }
    let mut simplices: Vec<Vec<usize>> = Vec::new();
    for (i, _) in chart.iter().enumerate() {
        let mut s: Vec<usize> = chart
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &p)| p)
            .collect();
        s.push(interior);
        simplices.push(s);
    }
    let lam_m = nu.barycentric(chart, &nu.points[opposite])?;
    for (i, l) in lam_m.iter().enumerate() {
        if l.is_negative() {
            let mut s: Vec<usize> = chart
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &p)| p)
                .collect();
            s.push(opposite);
            simplices.push(s);
        }
    }
    Ok(Triangulation::new(simplices))
}

/// Check the triangulation axioms exactly:
/// (1) every maximal simplex is full-dimensional;
/// (2) every pair intersects in a common face (certified by a separating
///     affine functional found by exact LP);
/// (3) the normalized volumes sum to the volume of `Conv(ν)`.
pub fn verify_triangulation(nu: &PointConfig, t: &Triangulation) -> TriangulationCheck {
    let dim = nu.n_vars() - 1; // affine dimension of the configuration
    let mut volume_sum = Int::zero();
    for s in &t.maximal_simplices {
        if s.len() != dim + 1 {
            return TriangulationCheck::Invalid {
                axiom: format!("simplex {s:?} does not have {} vertices", dim + 1),
            };
        }
        let v = nu.normalized_volume(s);
        if v.is_zero() {
            return TriangulationCheck::Invalid {
                axiom: format!("simplex {s:?} is not full-dimensional"),
            };
        }
        volume_sum += v;
    }
    for (i, s) in t.maximal_simplices.iter().enumerate() {
        for t2 in &t.maximal_simplices[i + 1..] {
            if !simplices_intersect_properly(nu, s, t2) {
                return TriangulationCheck::Invalid {
                    axiom: format!("simplices {s:?} and {t2:?} do not meet in a common face"),
                };
            }
        }
    }
    let total = match nu.total_volume() {
        Ok(v) => v,
        Err(e) => {
            return TriangulationCheck::Invalid {
                axiom: format!("cannot compute the total volume: {e}"),
            }
        }
    };
    if volume_sum != total {
        return TriangulationCheck::Invalid {
            axiom: format!("volumes sum to {volume_sum}, the hull has volume {total}"),
        };
    }
    TriangulationCheck::Valid
}

/// Two simplices intersect properly iff some affine functional vanishes on
/// the shared vertices, is <= -1 on the rest of one and >= 1 on the rest
/// of the other.
fn simplices_intersect_properly(nu: &PointConfig, s: &[usize], t: &[usize]) -> bool {
    let common: Vec<usize> = s.iter().copied().filter(|i| t.contains(i)).collect();
    let n = nu.points[0].len();
    // functional h(x) = a·x + b: n+1 unknowns
    let unknowns = n + 1;
    let row_for = |p: &Vec<Int>| -> Vec<Rat> {
        let mut row: Vec<Rat> = p.iter().map(|v| Rat::from_integer(v.clone())).collect();
        row.push(Rat::one());
        row
    };
    let mut eqs = Vec::new();
    for &i in &common {
        eqs.push((row_for(&nu.points[i]), Rat::zero()));
    }
    let mut ges = Vec::new();
    for &i in s {
        if !common.contains(&i) {
            let row: Vec<Rat> = row_for(&nu.points[i]).iter().map(|v| -v.clone()).collect();
            ges.push((row, Rat::one())); // h(v) <= -1
        }
    }
    for &i in t {
        if !common.contains(&i) {
            ges.push((row_for(&nu.points[i]), Rat::one())); // h(w) >= 1
        }
    }
    feasible_point(unknowns, &eqs, &ges).is_some()
}

/// Heights making the triangulation regular: for every maximal simplex and
/// every configuration point outside it, the lifted point must lie
/// strictly above the affine span of the lifted simplex. Existence is
/// guaranteed for configurations with few points; this just exhibits one.
pub fn regularity_certificate(nu: &PointConfig, t: &Triangulation) -> Option<Vec<Rat>> {
    let n_pts = nu.n_points();
    let mut ges = Vec::new();
    for s in &t.maximal_simplices {
        for p in 0..n_pts {
            if s.contains(&p) {
                continue;
            }
            // lifted point strictly above the lifted simplex: the affine
            // combination expressing p over s must lift to a smaller value
            let lam = nu.barycentric(s, &nu.points[p]).ok()?;
            // h(p) - sum lam_i h(s_i) >= 1
            let mut row = vec![Rat::zero(); n_pts];
            row[p] = Rat::one();
            for (i, &si) in s.iter().enumerate() {
                row[si] = -lam[i].clone();
            }
            ges.push((row, Rat::one()));
        }
    }
    feasible_point(n_pts, &[], &ges)
}

/// Squarefree monomial ideal over the ν ring, stored minimally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    pub ring: Ring,
    pub generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ring: Ring, mut gens: Vec<Monomial>) -> Self {
        gens.sort();
        gens.dedup();
        let minimal: Vec<Monomial> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| *h != **g && h.divides(g)))
            .cloned()
            .collect();
        MonomialIdeal {
            ring,
            generators: minimal,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_one())
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other` as monomial ideals.
    pub fn subideal_of(&self, other: &MonomialIdeal) -> bool {
        self.generators.iter().all(|g| other.contains_monomial(g))
    }

    pub fn generators_text(&self) -> Vec<String> {
        let probe = Poly::zero(&self.ring);
        self.generators.iter().map(|g| probe.monomial_text(g)).collect()
    }
}

/// Irrelevant ideal of a verified triangulation: one squarefree generator
/// per maximal simplex, the product of the variables of the points not in
/// it.
pub fn irrelevant_ideal(nu: &PointConfig, t: &Triangulation) -> MonomialIdeal {
    let ring = nu.ring();
    let n_pts = nu.n_points();
    let gens = t
        .maximal_simplices
        .iter()
        .map(|s| {
            let mut e = vec![0u32; n_pts];
            for p in 0..n_pts {
                if !s.contains(&p) {
                    e[p] = 1;
                }
            }
            Monomial(e)
        })
        .collect();
    MonomialIdeal::new(ring, gens)
}

/// Subideal from the maximal simplices containing the interior point; its
/// generators never involve `u`.
pub fn subideal_j(nu: &PointConfig, t: &Triangulation) -> MonomialIdeal {
    let ring = nu.ring();
    let n_pts = nu.n_points();
    let interior = nu.interior_index();
    let gens = t
        .maximal_simplices
        .iter()
        .filter(|s| s.contains(&interior))
        .map(|s| {
            let mut e = vec![0u32; n_pts];
            for p in 0..n_pts {
                if !s.contains(&p) {
                    e[p] = 1;
                }
            }
            Monomial(e)
        })
        .collect();
    MonomialIdeal::new(ring, gens)
}

/// The superpotential
/// `w = Σ_i b_i · u · Π_p y_p^{p_i}  +  c · u · Π_p y_p`
/// where `p` runs over the non-interior points of ν and `p_i` is the
/// `i`-th exponent coordinate of `p`. Every monomial has `u`-degree 1.
pub fn superpotential(nu: &PointConfig, b: &[Rat], c: &Rat) -> Result<Poly> {
    let n = nu.n_vars();
    if b.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{} coefficients for {} monomials",
            b.len(),
            n
        )));
    }
    let ring = nu.ring();
    let n_pts = nu.n_points();
    let u_idx = nu.interior_index();
    let mut w = Poly::zero(&ring);
    for i in 0..n {
        let mut e = vec![0u32; n_pts];
        for p in 0..n_pts - 1 {
            e[p] = u32::try_from(&nu.points[p][i])
                .map_err(|_| Error::Shape("exponent out of range".into()))?;
        }
        e[u_idx] = 1;
        w.add_term(Monomial(e), b[i].clone());
    }
    if !c.is_zero() {
        let e = vec![1u32; n_pts];
        w.add_term(Monomial(e), c.clone());
    }
    Ok(w)
}

/// Which chart of the cleave to restrict to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChartSide {
    /// The `A` side (the simplex of `A`-rows).
    Xi,
    /// The `A'` side.
    XiPrime,
}

/// Set the excluded point's variable and `u` to 1. With `b = 1`, `c = 0`
/// the result is the transposed polynomial of that side, up to renaming.
pub fn restrict_to_chart(w: &Poly, nu: &PointConfig, side: ChartSide) -> Poly {
    let excluded = match side {
        ChartSide::Xi => nu.cleaved_index(),
        ChartSide::XiPrime => nu.k,
    };
    w.substitute_one(&[excluded, nu.interior_index()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cleave::detect_cleave;
    use crate::invertible::InvertiblePolynomial;
    use crate::mat::{int, rat_int};
    use crate::symmetry::{j_group, sl_group};
    use crate::weights::positive_weight_solve;

    fn cubic_nu() -> PointConfig {
        let p = InvertiblePolynomial::parse("x0^3+x1^2*x2+x2^3").unwrap();
        let q = InvertiblePolynomial::parse("x0^3+x1^3+x2^3").unwrap();
        let cl = detect_cleave(&p, &q).unwrap();
        let g = j_group(p.matrix()).unwrap();
        build_nu(&cl, &g).unwrap()
    }

    #[test]
    fn anticanonical_monomials_of_the_cubic() {
        // all 10 cubic monomials in 3 variables are J-invariant
        let a = IntMatrix::diagonal(&[3, 3, 3]);
        let w = positive_weight_solve(&a).unwrap();
        let j = j_group(&a).unwrap();
        let pts = anticanonical_invariant_monomials(&w, &j);
        assert_eq!(pts.len(), 10);
        assert!(pts.contains(&vec![int(1), int(1), int(1)]));
        assert!(pts.contains(&vec![int(3), int(0), int(0)]));
        // under SL of the quintic, the interior point and Fermat vertices
        // remain
        let a5 = IntMatrix::diagonal(&[5, 5, 5, 5, 5]);
        let w5 = positive_weight_solve(&a5).unwrap();
        let sl = sl_group(&a5).unwrap();
        let pts = anticanonical_invariant_monomials(&w5, &sl);
        assert!(pts.contains(&vec![int(1); 5]));
        assert!(pts.contains(&vec![int(5), int(0), int(0), int(0), int(0)]));
    }

    #[test]
    fn degenerate_degree_zero_enumeration() {
        use crate::symmetry::DiagonalGroup;
        let w = crate::weights::WeightSystem::new(vec![int(1), int(1)], int(0));
        let pts = anticanonical_invariant_monomials(&w, &DiagonalGroup::trivial(2));
        assert_eq!(pts, vec![vec![int(0), int(0)]]);
    }

    #[test]
    fn nu_of_the_cubic_example() {
        let nu = cubic_nu();
        assert_eq!(nu.n_points(), 5);
        assert_eq!(
            nu.points,
            vec![
                vec![int(3), int(0), int(0)],
                vec![int(0), int(2), int(1)],
                vec![int(0), int(0), int(3)],
                vec![int(0), int(3), int(0)],
                vec![int(1), int(1), int(1)],
            ]
        );
        assert_eq!(nu.names, vec!["y0", "y1'", "y2", "y1", "u"]);
        assert_eq!(nu.roles[4], PointRole::Interior);
        assert_eq!(nu.roles[3], PointRole::CleavedMonomial);
    }

    #[test]
    fn cubic_triangulations_match_the_example() {
        let nu = cubic_nu();
        let (t, t_prime) = triangulation_pair(&nu).unwrap();
        // points: 0 = y0, 1 = y1', 2 = y2, 3 = y1, 4 = u
        assert_eq!(
            t.maximal_simplices,
            vec![
                vec![0, 1, 3], // join of y1 with the visible facet {y0, y1'}
                vec![0, 1, 4],
                vec![0, 2, 4],
                vec![1, 2, 4],
            ]
        );
        // the chain point lies on the boundary of Conv(Ξ'), so T' is the
        // star alone
        assert_eq!(
            t_prime.maximal_simplices,
            vec![vec![0, 2, 4], vec![0, 3, 4], vec![2, 3, 4]]
        );
        assert!(verify_triangulation(&nu, &t).is_valid());
        assert!(verify_triangulation(&nu, &t_prime).is_valid());
        // removing a simplex breaks the volume cover
        let broken = Triangulation {
            maximal_simplices: t.maximal_simplices[1..].to_vec(),
        };
        assert!(!verify_triangulation(&nu, &broken).is_valid());
    }

    #[test]
    fn cubic_ideals_match_the_example() {
        let nu = cubic_nu();
        let (t, t_prime) = triangulation_pair(&nu).unwrap();
        let i_p = irrelevant_ideal(&nu, &t);
        let j_p = subideal_j(&nu, &t);
        let i_q = irrelevant_ideal(&nu, &t_prime);
        let j_q = subideal_j(&nu, &t_prime);
        let text = |mi: &MonomialIdeal| mi.generators_text();
        assert_eq!(text(&i_p), vec!["y2*u", "y2*y1", "y1'*y1", "y0*y1"]);
        assert_eq!(text(&j_p), vec!["y2*y1", "y1'*y1", "y0*y1"]);
        assert_eq!(text(&i_q), vec!["y1'*y1", "y1'*y2", "y0*y1'"]);
        assert_eq!(i_q, j_q);
        assert!(j_p.subideal_of(&i_p));
        assert!(j_q.subideal_of(&i_q));
    }

    #[test]
    fn cubic_superpotential_and_charts() {
        let nu = cubic_nu();
        let b = vec![rat_int(1), rat_int(1), rat_int(1)];
        let w = superpotential(&nu, &b, &rat_int(1)).unwrap();
        assert_eq!(
            w.to_text(),
            "y1'^2*y1^3*u + y1'*y2^3*u + y0*y1'*y2*y1*u + y0^3*u"
        );
        // u-degree exactly 1 in every monomial
        let u_idx = nu.interior_index();
        for (m, _) in w.terms() {
            assert_eq!(m.0[u_idx], 1);
        }
        let w0 = superpotential(&nu, &b, &rat_int(0)).unwrap();
        let wp = restrict_to_chart(&w0, &nu, ChartSide::Xi);
        assert_eq!(wp.to_text(), "y1'*y2^3 + y0^3 + y1'^2");
        let wq = restrict_to_chart(&w0, &nu, ChartSide::XiPrime);
        assert_eq!(wq.to_text(), "y0^3 + y2^3 + y1^3");
        // with the pencil parameter on
        let wp1 = restrict_to_chart(&w, &nu, ChartSide::Xi);
        assert_eq!(wp1.to_text(), "y1'*y2^3 + y0^3 + y0*y1'*y2 + y1'^2");
    }

    #[test]
    fn chart_restriction_is_the_transpose() {
        // with b = 1, c = 0 the Ξ-chart restriction is F_{A^T} after
        // renaming chart variables to x0..xn in vertex order
        let nu = cubic_nu();
        let w = superpotential(&nu, &[rat_int(1), rat_int(1), rat_int(1)], &rat_int(0)).unwrap();
        let wp = restrict_to_chart(&w, &nu, ChartSide::Xi);
        let p = InvertiblePolynomial::parse("x0^3+x1^2*x2+x2^3").unwrap();
        let pt = p.transpose();
        // chart variable for ambient variable i is point i (a row of A)
        let ring = nu.ring();
        let mut terms: Vec<Vec<Int>> = Vec::new();
        for (m, _) in wp.terms() {
            let mut exps = vec![Int::zero(); 3];
            for i in 0..3 {
                let var = ring.var_index(&nu.names[i]).unwrap();
                exps[i] = Int::from(m.0[var]);
            }
            terms.push(exps);
        }
        terms.sort();
        let mut want: Vec<Vec<Int>> = (0..3).map(|r| pt.matrix().row(r)).collect();
        want.sort();
        assert_eq!(terms, want);
    }

    #[test]
    fn regularity_heights_exist_for_the_cubic() {
        let nu = cubic_nu();
        let (t, t_prime) = triangulation_pair(&nu).unwrap();
        assert!(regularity_certificate(&nu, &t).is_some());
        assert!(regularity_certificate(&nu, &t_prime).is_some());
    }

    #[test]
    fn unit_ideal_convention() {
        // a triangulation with one simplex covering all points yields <1>
        let nu = cubic_nu();
        let t = Triangulation {
            maximal_simplices: vec![(0..5).collect()],
        };
        let ideal = irrelevant_ideal(&nu, &t);
        assert!(ideal.is_unit());
    }
}
