//! Kreuzer-Skarke cleaves: pairs of invertible polynomials that differ by
//! adding or deleting one arrow of the diagram, and cleave sequences
//! routed through the generalized Fermat polynomial.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::invertible::{classify, InvertiblePolynomial};
use crate::mat::{Int, IntMatrix};
use crate::symmetry::DiagonalGroup;
use crate::weights::{positive_weight_solve, WeightSystem};

/// Which of the two matrices carries the extra arrow.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CleaveDirection {
    /// `A` has the arrow; passing to `A'` removes it.
    ArrowRemoved,
    /// `A'` has the arrow; passing to `A'` adds it.
    ArrowAdded,
}

impl CleaveDirection {
    pub fn as_str(&self) -> &'static str {
        match self {
            CleaveDirection::ArrowRemoved => "arrow-removed",
            CleaveDirection::ArrowAdded => "arrow-added",
        }
    }
}

/// A Kreuzer-Skarke cleave between vertex-ordered exponent matrices.
///
/// The matrices differ in exactly row `k`; one version of that row is in
/// Fermat form (diagonal-only) and the other has exactly one off-diagonal
/// entry (the arrow `k -> arrow_target`). `index_set` lists the vertices of
/// the chain or Fermat diagram newly formed at the head of the removed
/// arrow; those are exactly the coefficients the derived-equivalence
/// theorem requires to be nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cleave {
    pub a: IntMatrix,
    pub a_prime: IntMatrix,
    pub k: usize,
    pub arrow_target: usize,
    pub direction: CleaveDirection,
    pub index_set: Vec<usize>,
    pub weights: WeightSystem,
}

impl Cleave {
    /// The matrix whose row `k` carries the arrow.
    pub fn arrow_side_matrix(&self) -> &IntMatrix {
        match self.direction {
            CleaveDirection::ArrowRemoved => &self.a,
            CleaveDirection::ArrowAdded => &self.a_prime,
        }
    }

    /// Cleave read in the opposite direction.
    pub fn reversed(&self) -> Cleave {
        Cleave {
            a: self.a_prime.clone(),
            a_prime: self.a.clone(),
            k: self.k,
            arrow_target: self.arrow_target,
            direction: match self.direction {
                CleaveDirection::ArrowRemoved => CleaveDirection::ArrowAdded,
                CleaveDirection::ArrowAdded => CleaveDirection::ArrowRemoved,
            },
            index_set: self.index_set.clone(),
            weights: self.weights.clone(),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.a.rows()
    }
}

/// Permute the monomial rows (and coefficients) so that row `v` is the
/// monomial attached to vertex `v` of the Kreuzer-Skarke diagram.
pub fn vertex_ordered(p: &InvertiblePolynomial) -> Result<InvertiblePolynomial> {
    let dec = classify(p)?;
    let n = p.n_vars();
    let mut rows = Vec::with_capacity(n);
    let mut coeffs = Vec::with_capacity(n);
    for v in 0..n {
        let r = dec.row_of_vertex[v];
        rows.push(p.matrix().row(r));
        coeffs.push(p.coeffs()[r].clone());
    }
    InvertiblePolynomial::new(IntMatrix::from_rows(rows), coeffs, true)
}

/// Decide whether two classifiable polynomials with the same weight system
/// are related by a single cleave. Inputs are vertex-ordered first, so `k`
/// is a vertex index. Returns a reason string when they are not.
pub fn detect_cleave(
    p: &InvertiblePolynomial,
    p_prime: &InvertiblePolynomial,
) -> std::result::Result<Cleave, String> {
    if p.n_vars() != p_prime.n_vars() {
        return Err("different variable counts".into());
    }
    let a = match vertex_ordered(p) {
        Ok(q) => q,
        Err(e) => return Err(format!("first polynomial not classifiable: {e}")),
    };
    let b = match vertex_ordered(p_prime) {
        Ok(q) => q,
        Err(e) => return Err(format!("second polynomial not classifiable: {e}")),
    };
    let wa = match positive_weight_solve(a.matrix()) {
        Ok(w) => w,
        Err(e) => return Err(format!("no weight system for the first polynomial: {e}")),
    };
    let wb = match positive_weight_solve(b.matrix()) {
        Ok(w) => w,
        Err(e) => return Err(format!("no weight system for the second polynomial: {e}")),
    };
    if wa != wb {
        return Err(format!("weight systems differ: {wa} vs {wb}"));
    }
    let n = a.n_vars();
    let (ma, mb) = (a.matrix(), b.matrix());
    let differing: Vec<usize> = (0..n)
        .filter(|&r| (0..n).any(|c| ma[(r, c)] != mb[(r, c)]))
        .collect();
    let k = match differing.as_slice() {
        [] => return Err("matrices are identical".into()),
        [k] => *k,
        more => return Err(format!("matrices differ in {} rows", more.len())),
    };
    let row_a = ma.row(k);
    let row_b = mb.row(k);
    let off_a: Vec<usize> = (0..n).filter(|&c| c != k && !row_a[c].is_zero()).collect();
    let off_b: Vec<usize> = (0..n).filter(|&c| c != k && !row_b[c].is_zero()).collect();
    let (direction, arrow_target) = match (off_a.as_slice(), off_b.as_slice()) {
        ([t], []) => (CleaveDirection::ArrowRemoved, *t),
        ([], [t]) => (CleaveDirection::ArrowAdded, *t),
        _ => {
            return Err(
                "the differing rows are not a Fermat form and a single-arrow form".into(),
            )
        }
    };
    let arrow_matrix = match direction {
        CleaveDirection::ArrowRemoved => ma,
        CleaveDirection::ArrowAdded => mb,
    };
    if !arrow_matrix[(k, arrow_target)].is_one() {
        return Err("arrow exponent is not 1".into());
    }
    let index_set = new_part_indices(arrow_matrix, k, arrow_target)
        .map_err(|e| format!("cannot trace the new chain: {e}"))?;
    Ok(Cleave {
        a: ma.clone(),
        a_prime: mb.clone(),
        k,
        arrow_target,
        direction,
        index_set,
        weights: wa,
    })
}

/// Vertices of the chain or Fermat part formed at the head of the removed
/// arrow: follow arrows from the head, never through `k`.
fn new_part_indices(arrow_matrix: &IntMatrix, k: usize, head: usize) -> Result<Vec<usize>> {
    let p = InvertiblePolynomial::new(
        arrow_matrix.clone(),
        vec![crate::mat::Rat::one(); arrow_matrix.rows()],
        true,
    )?;
    let dec = classify(&p)?;
    let mut out = Vec::new();
    let mut cur = head;
    loop {
        if cur == k || out.contains(&cur) {
            break;
        }
        out.push(cur);
        match dec.arrow[cur] {
            Some(next) => cur = next,
            None => break,
        }
    }
    Ok(out)
}

/// Delete arrows one at a time (lowest vertex index first), replacing each
/// source row with the Fermat row `x_v^{d/q_v}`. Every intermediate must be
/// `G`-invariant and classifiable.
pub fn cleave_to_fermat(
    p: &InvertiblePolynomial,
    group: &DiagonalGroup,
) -> Result<Vec<Cleave>> {
    let mut current = vertex_ordered(p)?;
    let w = positive_weight_solve(current.matrix())?;
    for r in 0..current.n_vars() {
        let row = current.matrix().row(r);
        if !group.is_invariant_exponent(&row) {
            return Err(Error::InvarianceViolation(format!(
                "monomial {r} of the input is not G-invariant"
            )));
        }
    }
    let mut cleaves = Vec::new();
    loop {
        let dec = classify(&current)?;
        let Some(v) = (0..current.n_vars()).find(|&v| dec.arrow[v].is_some()) else {
            break;
        };
        let (quot, rem) = w.d.div_rem(&w.q[v]);
        if !rem.is_zero() {
            return Err(Error::NotGorenstein(format!(
                "Fermat exponent d/q_{v} = {}/{} is not an integer",
                w.d, w.q[v]
            )));
        }
        let mut fermat_row = vec![Int::zero(); current.n_vars()];
        fermat_row[v] = quot;
        if !group.is_invariant_exponent(&fermat_row) {
            return Err(Error::NotGorenstein(format!(
                "Fermat monomial x{v}^{} is not G-invariant",
                fermat_row[v]
            )));
        }
        let mut next_matrix = current.matrix().clone();
        next_matrix.set_row(v, fermat_row);
        let next =
            InvertiblePolynomial::new(next_matrix, current.coeffs().to_vec(), true)?;
        classify(&next)?; // intermediates stay classifiable
        let cleave = detect_cleave(&current, &next)
            .map_err(|reason| Error::Shape(format!("internal cleave step failed: {reason}")))?;
        cleaves.push(cleave);
        current = next;
    }
    Ok(cleaves)
}

/// Cleave path from `p` to `p_prime` through the generalized Fermat
/// polynomial, with the shared tail cancelled.
pub fn connect(
    p: &InvertiblePolynomial,
    p_prime: &InvertiblePolynomial,
    group: &DiagonalGroup,
) -> Result<Vec<Cleave>> {
    let wa = positive_weight_solve(p.matrix())?;
    let wb = positive_weight_solve(p_prime.matrix())?;
    if wa != wb {
        return Err(Error::JMismatch(format!(
            "weight systems differ: {wa} vs {wb}"
        )));
    }
    let mut down = cleave_to_fermat(p, group)?;
    let mut up = cleave_to_fermat(p_prime, group)?;
    // both routes end at the same Fermat matrix; cancel the shared tail
    while let (Some(x), Some(y)) = (down.last(), up.last()) {
        if x == y {
            down.pop();
            up.pop();
        } else {
            break;
        }
    }
    up.reverse();
    down.extend(up.into_iter().map(|c| c.reversed()));
    Ok(down)
}
