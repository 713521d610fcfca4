//! Finite diagonal symmetry groups of invertible polynomials.
//!
//! Group elements are phase vectors in `(Q/Z)^{n+1}`: the phase `α`
//! stands for the scalar `exp(2πiα)`, so everything stays exact. A group
//! is stored as the integer lattice of numerators over its exponent `D`,
//! kept in Hermite normal form; two groups are equal iff their canonical
//! forms are identical.

use std::collections::{BTreeMap, VecDeque};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mat::{Int, IntMatrix, Rat, RowLattice};
use crate::weights::positive_weight_solve;

/// A diagonal torus element with rational phases reduced into `[0,1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalSymmetry {
    phases: Vec<Rat>,
}

impl DiagonalSymmetry {
    pub fn new(phases: Vec<Rat>) -> Self {
        let phases = phases
            .into_iter()
            .map(|p| {
                let f = p.floor();
                p - f
            })
            .collect();
        DiagonalSymmetry { phases }
    }

    pub fn identity(n: usize) -> Self {
        DiagonalSymmetry {
            phases: vec![Rat::zero(); n],
        }
    }

    pub fn phases(&self) -> &[Rat] {
        &self.phases
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.phases.iter().all(|p| p.is_zero())
    }

    /// Order as a group element: lcm of the phase denominators.
    pub fn order(&self) -> Int {
        self.phases
            .iter()
            .fold(Int::one(), |acc, p| acc.lcm(p.denom()))
    }

    /// Sum of phases; integral exactly for determinant-one elements.
    pub fn phase_sum(&self) -> Rat {
        self.phases.iter().sum()
    }

    pub fn to_text(&self) -> String {
        self.phases
            .iter()
            .map(|p| {
                if p.is_integer() {
                    format!("{}", p.numer())
                } else {
                    format!("{}/{}", p.numer(), p.denom())
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl std::fmt::Display for DiagonalSymmetry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

/// Finite subgroup of the diagonal torus acting on `n_vars` coordinates.
///
/// Canonical form: the numerator lattice over the group exponent `D`,
/// i.e. `{ v in Z^{n} : v/D mod 1 in G }`, in Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalGroup {
    n_vars: usize,
    denominator: Int,
    lattice: RowLattice,
    order: Int,
}

impl DiagonalGroup {
    pub fn trivial(n_vars: usize) -> Self {
        DiagonalGroup {
            n_vars,
            denominator: Int::one(),
            lattice: RowLattice::full(n_vars),
            order: Int::one(),
        }
    }

    pub fn from_generators(n_vars: usize, gens: &[DiagonalSymmetry]) -> Self {
        for g in gens {
            assert_eq!(g.len(), n_vars, "generator has wrong ambient size");
        }
        let mut d = Int::one();
        for g in gens {
            d = d.lcm(&g.order());
        }
        let mut rows: Vec<Vec<Int>> = Vec::new();
        for g in gens {
            rows.push(
                g.phases()
                    .iter()
                    .map(|p| (p * Rat::from_integer(d.clone())).to_integer())
                    .collect(),
            );
        }
        for i in 0..n_vars {
            let mut e = vec![Int::zero(); n_vars];
            e[i] = d.clone();
            rows.push(e);
        }
        let lattice = RowLattice::span(&IntMatrix::from_rows(rows));
        let order = Self::order_of(&d, &lattice, n_vars);
        DiagonalGroup {
            n_vars,
            denominator: d,
            lattice,
            order,
        }
    }

    fn order_of(d: &Int, lattice: &RowLattice, n_vars: usize) -> Int {
        let mut dn = Int::one();
        for _ in 0..n_vars {
            dn *= d;
        }
        let det: Int = (0..lattice.rank())
            .map(|r| {
                let b = lattice.basis();
                (0..n_vars)
                    .find(|&c| !b[(r, c)].is_zero())
                    .map(|c| b[(r, c)].clone())
                    .unwrap_or_else(Int::one)
            })
            .product();
        dn / det
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn order(&self) -> &Int {
        &self.order
    }

    /// Group exponent (the common phase denominator).
    pub fn exponent(&self) -> &Int {
        &self.denominator
    }

    /// Canonical generators: non-identity rows of the HNF numerator basis.
    pub fn generators(&self) -> Vec<DiagonalSymmetry> {
        let b = self.lattice.basis();
        let mut gens = Vec::new();
        for r in 0..b.rows() {
            let g = DiagonalSymmetry::new(
                (0..self.n_vars)
                    .map(|c| Rat::new(b[(r, c)].clone(), self.denominator.clone()))
                    .collect(),
            );
            if !g.is_identity() {
                gens.push(g);
            }
        }
        gens
    }

    /// Deterministic canonical serialization, used for ordering and dedup.
    pub fn canonical_bytes(&self) -> String {
        let b = self.lattice.basis();
        let mut out = format!("{}|", self.denominator);
        for r in 0..b.rows() {
            for c in 0..b.cols() {
                out.push_str(&b[(r, c)].to_string());
                out.push(',');
            }
            out.push(';');
        }
        out
    }

    pub fn contains(&self, s: &DiagonalSymmetry) -> bool {
        assert_eq!(s.len(), self.n_vars);
        let mut nums = Vec::with_capacity(self.n_vars);
        for p in s.phases() {
            let scaled = p * Rat::from_integer(self.denominator.clone());
            if !scaled.is_integer() {
                return false;
            }
            nums.push(scaled.to_integer());
        }
        self.lattice.contains(&nums)
    }

    pub fn is_subgroup_of(&self, other: &DiagonalGroup) -> bool {
        self.n_vars == other.n_vars && self.generators().iter().all(|g| other.contains(g))
    }

    /// `true` iff the monomial with exponent vector `s` is fixed by the
    /// whole group, i.e. `s · g` is integral for every generator `g`.
    pub fn is_invariant_exponent(&self, s: &[Int]) -> bool {
        assert_eq!(s.len(), self.n_vars);
        let b = self.lattice.basis();
        for r in 0..b.rows() {
            let dot: Int = (0..self.n_vars).map(|c| &b[(r, c)] * &s[c]).sum();
            if !(&dot % &self.denominator).is_zero() {
                return false;
            }
        }
        true
    }

    /// The lattice `L_G = { s in Z^n : s·g in Z for all g in G }` of
    /// invariant exponents.
    pub fn invariant_exponent_lattice(&self) -> RowLattice {
        let b = self.lattice.basis();
        let k = b.rows();
        let n = self.n_vars;
        // solve V s + D t = 0 over Z; the s-parts span the lattice
        let mut m = IntMatrix::zero(k, n + k);
        for r in 0..k {
            for c in 0..n {
                m[(r, c)] = b[(r, c)].clone();
            }
            m[(r, n + r)] = self.denominator.clone();
        }
        let ker = m.transpose().left_kernel();
        let mut rows = Vec::new();
        for r in 0..ker.rows() {
            rows.push((0..n).map(|c| ker[(r, c)].clone()).collect::<Vec<_>>());
        }
        if rows.is_empty() {
            RowLattice::span(&IntMatrix::zero(0, n))
        } else {
            RowLattice::span(&IntMatrix::from_rows(rows))
        }
    }

    pub fn intersect(&self, other: &DiagonalGroup) -> DiagonalGroup {
        assert_eq!(self.n_vars, other.n_vars);
        let d = self.denominator.lcm(&other.denominator);
        let l1 = self.lattice_scaled_to(&d);
        let l2 = other.lattice_scaled_to(&d);
        let meet = l1.intersect(&l2);
        let gens = lattice_rows_as_symmetries(&meet, &d, self.n_vars);
        DiagonalGroup::from_generators(self.n_vars, &gens)
    }

    /// Numerator lattice with respect to a larger denominator `d`
    /// (a multiple of the exponent).
    fn lattice_scaled_to(&self, d: &Int) -> RowLattice {
        let scale = d / &self.denominator;
        let b = self.lattice.basis();
        let mut rows = Vec::new();
        for r in 0..b.rows() {
            rows.push(
                (0..self.n_vars)
                    .map(|c| &b[(r, c)] * &scale)
                    .collect::<Vec<_>>(),
            );
        }
        RowLattice::span(&IntMatrix::from_rows(rows))
    }

    /// All group elements, in a deterministic order. The caller is
    /// responsible for checking the order first.
    pub fn elements(&self) -> Vec<DiagonalSymmetry> {
        let b = self.lattice.basis();
        let n = self.n_vars;
        let mut reps: Vec<Vec<Int>> = vec![vec![Int::zero(); n]];
        for r in 0..b.rows() {
            let pivot_col = (0..n).find(|&c| !b[(r, c)].is_zero()).unwrap();
            let count = &self.denominator / &b[(r, pivot_col)];
            let limit = num_traits::ToPrimitive::to_u64(&count)
                .expect("group too large to enumerate element-wise");
            let mut next = Vec::new();
            for multiple in 0..limit {
                for rep in &reps {
                    let mut v: Vec<Int> = rep.clone();
                    for c in 0..n {
                        let add = &b[(r, c)] * Int::from(multiple);
                        v[c] += add;
                    }
                    next.push(v);
                }
            }
            reps = next;
        }
        let mut out: Vec<DiagonalSymmetry> = reps
            .into_iter()
            .map(|v| {
                DiagonalSymmetry::new(
                    v.into_iter()
                        .map(|x| Rat::new(x, self.denominator.clone()))
                        .collect(),
                )
            })
            .collect();
        out.sort_by_key(|s| s.to_text());
        out.dedup();
        out
    }
}

fn lattice_rows_as_symmetries(l: &RowLattice, d: &Int, n: usize) -> Vec<DiagonalSymmetry> {
    let b = l.basis();
    (0..b.rows())
        .map(|r| {
            DiagonalSymmetry::new(
                (0..n)
                    .map(|c| Rat::new(b[(r, c)].clone(), d.clone()))
                    .collect(),
            )
        })
        .collect()
}

/// Full group of diagonal symmetries of `F_A`:
/// `{ α : A·α ≡ 0 mod Z }`, i.e. `(A^{-1} Z^{n+1}) / Z^{n+1}`.
/// Its order is `|det A|`.
pub fn aut_diag(a: &IntMatrix) -> Result<DiagonalGroup> {
    let inv = a.rational_inverse()?;
    let n = a.rows();
    let gens: Vec<DiagonalSymmetry> = (0..n)
        .map(|j| DiagonalSymmetry::new(inv.col(j)))
        .collect();
    Ok(DiagonalGroup::from_generators(n, &gens))
}

/// Determinant-one subgroup: elements of `aut_diag` whose phases sum to an
/// integer.
pub fn sl_group(a: &IntMatrix) -> Result<DiagonalGroup> {
    let aut = aut_diag(a)?;
    let n = aut.n_vars;
    let d = aut.denominator.clone();
    // numerator vectors with coordinate sum divisible by D
    let mut rows = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut v = vec![Int::zero(); n];
        v[i] = Int::one();
        v[i + 1] = -Int::one();
        rows.push(v);
    }
    let mut v = vec![Int::zero(); n];
    if n > 0 {
        v[n - 1] = d.clone();
    }
    rows.push(v);
    let sum_zero = RowLattice::span(&IntMatrix::from_rows(rows));
    let meet = aut.lattice.intersect(&sum_zero);
    let gens = lattice_rows_as_symmetries(&meet, &d, n);
    Ok(DiagonalGroup::from_generators(n, &gens))
}

/// Exponential grading operator subgroup: the cyclic group generated by the
/// phase vector `(q_0/d, ..., q_n/d)` (the row sums of `A^{-1}`).
pub fn j_group(a: &IntMatrix) -> Result<DiagonalGroup> {
    let inv = a.rational_inverse()?;
    let n = a.rows();
    let gen = DiagonalSymmetry::new(
        (0..n)
            .map(|r| (0..n).map(|c| inv[(r, c)].clone()).sum())
            .collect(),
    );
    Ok(DiagonalGroup::from_generators(n, &[gen]))
}

/// `true` iff `prod x_j^{s_j}` is `G`-invariant.
pub fn is_invariant(s: &[Int], group: &DiagonalGroup) -> bool {
    group.is_invariant_exponent(s)
}

/// Krawitz dual group `G^T_A`: the image of the `G`-invariant exponent
/// lattice under `s ↦ A^{-T} s mod 1`.
///
/// `|G^T| = |det A| / |G|`, and the construction is an involution against
/// the transposed matrix.
pub fn dual_group(a: &IntMatrix, group: &DiagonalGroup) -> Result<DiagonalGroup> {
    let n = a.rows();
    if group.n_vars() != n {
        return Err(Error::DimensionMismatch(format!(
            "group on {} variables against a {}x{} matrix",
            group.n_vars(),
            n,
            n
        )));
    }
    let aut = aut_diag(a)?;
    if !group.is_subgroup_of(&aut) {
        return Err(Error::NotSubgroup(
            "G is not a subgroup of Aut_diag(F_A)".into(),
        ));
    }
    let inv_t = a.rational_inverse()?.transpose();
    let l_g = group.invariant_exponent_lattice();
    let b = l_g.basis();
    let gens: Vec<DiagonalSymmetry> = (0..b.rows())
        .map(|r| {
            let s: Vec<Rat> = (0..n).map(|c| Rat::from_integer(b[(r, c)].clone())).collect();
            DiagonalSymmetry::new(inv_t.mul_vec(&s))
        })
        .collect();
    Ok(DiagonalGroup::from_generators(n, &gens))
}

/// Invariant factors of `G/H` for `H ⊆ G`.
pub fn group_quotient_structure(
    g: &DiagonalGroup,
    h: &DiagonalGroup,
) -> Result<crate::mat::AbelianQuotient> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("H is not a subgroup of G".into()));
    }
    let d = g.denominator.lcm(&h.denominator);
    let lg = g.lattice_scaled_to(&d);
    let lh = h.lattice_scaled_to(&d);
    let x = lg.express(lh.basis());
    let (dd, _u, v) = x.smith_normal_form();
    let k = x.rows().min(x.cols());
    let mut factors = Vec::new();
    let mut lift_rows: Vec<Vec<Int>> = Vec::new();
    let v_inv = v
        .rational_inverse()
        .expect("unimodular")
        .to_int()
        .expect("integral");
    for i in 0..k {
        let f = dd[(i, i)].clone();
        if f > Int::one() {
            factors.push(f);
            // generator i of the quotient lifts to row i of V^{-1} in the
            // basis of L_G, i.e. a numerator vector over d
            let coeffs = v_inv.row(i);
            let mut num = vec![Int::zero(); g.n_vars];
            let bg = lg.basis();
            for (j, cj) in coeffs.iter().enumerate() {
                for c in 0..g.n_vars {
                    let add = cj * &bg[(j, c)];
                    num[c] += add;
                }
            }
            lift_rows.push(num);
        }
    }
    let order: Int = factors.iter().product();
    Ok(crate::mat::AbelianQuotient {
        invariant_factors: factors,
        free_rank: 0,
        generator_lifts: if lift_rows.is_empty() {
            IntMatrix::zero(0, g.n_vars)
        } else {
            IntMatrix::from_rows(lift_rows)
        },
        order,
    })
}

/// All groups `G` with `J ⊆ G ⊆ SL(F_A) ∩ SL(F_{A'})`, enumerated through
/// the finite quotient `(SL ∩ SL')/J`. Deterministically ordered by
/// (order, canonical form).
pub fn admissible_groups(
    a: &IntMatrix,
    a2: &IntMatrix,
    quotient_bound: u64,
) -> Result<Vec<DiagonalGroup>> {
    let w1 = positive_weight_solve(a)?;
    let w2 = positive_weight_solve(a2)?;
    if w1 != w2 {
        return Err(Error::JMismatch(format!(
            "weight systems differ: {w1} vs {w2}"
        )));
    }
    let j1 = j_group(a)?;
    let j2 = j_group(a2)?;
    if j1 != j2 {
        return Err(Error::JMismatch(
            "exponential grading operators J differ as subgroups".into(),
        ));
    }
    let s = sl_group(a)?.intersect(&sl_group(a2)?);
    if !j1.is_subgroup_of(&s) {
        return Err(Error::NotSubgroup(
            "J is not contained in SL(F_A) ∩ SL(F_A')".into(),
        ));
    }
    let q_order = s.order() / j1.order();
    if q_order > Int::from(quotient_bound) {
        return Err(Error::TooLarge(format!(
            "quotient (SL∩SL')/J has order {q_order} > bound {quotient_bound}"
        )));
    }
    let n = s.n_vars;
    let d = s.denominator.clone();
    let lj = j1.lattice_scaled_to(&d);
    let ls = s.lattice_scaled_to(&d);
    // coset representatives of S/J as numerator vectors over d
    let x = ls.express(lj.basis());
    let (dd, _u, v) = x.smith_normal_form();
    let v_inv = v
        .rational_inverse()
        .expect("unimodular")
        .to_int()
        .expect("integral");
    let bs = ls.basis();
    let mut cyclic_gens: Vec<(u64, Vec<Int>)> = Vec::new();
    for i in 0..x.rows().min(x.cols()) {
        let f = dd[(i, i)].clone();
        if f > Int::one() {
            let coeffs = v_inv.row(i);
            let mut num = vec![Int::zero(); n];
            for (jj, cj) in coeffs.iter().enumerate() {
                for c in 0..n {
                    let add = cj * &bs[(jj, c)];
                    num[c] += add;
                }
            }
            cyclic_gens.push((f.to_string().parse().unwrap(), num));
        }
    }
    let mut reps: Vec<Vec<Int>> = vec![vec![Int::zero(); n]];
    for (ord, gen) in &cyclic_gens {
        let mut next = Vec::new();
        for m in 0..*ord {
            for rep in &reps {
                let mut v2 = rep.clone();
                for c in 0..n {
                    let add = &gen[c] * Int::from(m);
                    v2[c] += add;
                }
                next.push(v2);
            }
        }
        reps = next;
    }
    // breadth-first closure over subgroup lattices between L_J and L_S
    let key_of = |l: &RowLattice| {
        let b = l.basis();
        let mut s = String::new();
        for r in 0..b.rows() {
            for c in 0..b.cols() {
                s.push_str(&b[(r, c)].to_string());
                s.push(',');
            }
            s.push(';');
        }
        s
    };
    let mut seen: BTreeMap<String, RowLattice> = BTreeMap::new();
    let start = lj.clone();
    seen.insert(key_of(&start), start.clone());
    let mut queue = VecDeque::new();
    queue.push_back(start);
    while let Some(l) = queue.pop_front() {
        for rep in &reps {
            if l.contains(rep) {
                continue;
            }
            let mut rows: Vec<Vec<Int>> = Vec::new();
            let b = l.basis();
            for r in 0..b.rows() {
                rows.push(b.row(r));
            }
            rows.push(rep.clone());
            let bigger = RowLattice::span(&IntMatrix::from_rows(rows));
            let key = key_of(&bigger);
            if !seen.contains_key(&key) {
                seen.insert(key, bigger.clone());
                queue.push_back(bigger);
            }
        }
    }
    let mut out: Vec<DiagonalGroup> = seen
        .values()
        .map(|l| {
            let gens = lattice_rows_as_symmetries(l, &d, n);
            DiagonalGroup::from_generators(n, &gens)
        })
        .collect();
    out.sort_by(|x, y| {
        x.order()
            .cmp(y.order())
            .then_with(|| x.canonical_bytes().cmp(&y.canonical_bytes()))
    });
    Ok(out)
}

/// Parse the group text format: one generator per line of comma-separated
/// rational phases `p/q`.
pub fn parse_group_text(text: &str, n_vars: usize) -> Result<Vec<DiagonalSymmetry>> {
    let mut gens = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut phases = Vec::new();
        for tok in line.split(',') {
            let tok = tok.trim();
            let rat = if let Some((p, q)) = tok.split_once('/') {
                let num: Int = p.trim().parse().map_err(|_| Error::Parse {
                    position: lineno,
                    message: format!("invalid rational `{tok}` on line {}", lineno + 1),
                })?;
                let den: Int = q.trim().parse().map_err(|_| Error::Parse {
                    position: lineno,
                    message: format!("invalid rational `{tok}` on line {}", lineno + 1),
                })?;
                if den.is_zero() {
                    return Err(Error::Parse {
                        position: lineno,
                        message: format!("zero denominator on line {}", lineno + 1),
                    });
                }
                Rat::new(num, den)
            } else {
                let num: Int = tok.parse().map_err(|_| Error::Parse {
                    position: lineno,
                    message: format!("invalid rational `{tok}` on line {}", lineno + 1),
                })?;
                Rat::from_integer(num)
            };
            phases.push(rat);
        }
        if phases.len() != n_vars {
            return Err(Error::Shape(format!(
                "generator on line {} has {} phases, expected {}",
                lineno + 1,
                phases.len(),
                n_vars
            )));
        }
        gens.push(DiagonalSymmetry::new(phases));
    }
    Ok(gens)
}
