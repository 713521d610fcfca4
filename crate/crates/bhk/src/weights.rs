//! Weight systems of quasihomogeneous polynomials.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::mat::{Int, IntMatrix, Rat};

/// Positive integer weights `q` and degree `d` with `A * q = d * 1` and
/// `gcd(q) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub q: Vec<Int>,
    pub d: Int,
}

impl WeightSystem {
    pub fn new(q: Vec<Int>, d: Int) -> Self {
        debug_assert!(q.iter().all(|w| w.is_positive()));
        WeightSystem { q, d }
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    /// Weighted degree of an exponent vector.
    pub fn degree_of(&self, s: &[Int]) -> Int {
        assert_eq!(s.len(), self.q.len());
        self.q.iter().zip(s).map(|(q, e)| q * e).sum()
    }

    /// Calabi-Yau condition: the degree equals the sum of the weights.
    pub fn is_calabi_yau(&self) -> bool {
        self.q.iter().sum::<Int>() == self.d
    }

    pub fn describe(&self) -> String {
        let ws: Vec<String> = self.q.iter().map(|w| w.to_string()).collect();
        format!("P({})", ws.join(","))
    }
}

impl std::fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ws: Vec<String> = self.q.iter().map(|w| w.to_string()).collect();
        write!(f, "q=({}) d={}", ws.join(","), self.d)
    }
}

/// Solve `A * q = d * 1` for the minimal positive integer weights.
///
/// The rational solution is unique because `A` is invertible; the weights
/// are its entries cleared to integers with `gcd(q) = 1`.
pub fn positive_weight_solve(a: &IntMatrix) -> Result<WeightSystem> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "weight solve needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if n == 0 {
        return Err(Error::NoPositiveWeights("empty matrix".into()));
    }
    let inv = a.rational_inverse()?;
    let ones = vec![Rat::one(); n];
    let x = inv.mul_vec(&ones); // x = q / d
    if let Some(bad) = x.iter().position(|v| !v.is_positive()) {
        return Err(Error::NoPositiveWeights(format!(
            "weight {} of the rational solution is {} <= 0",
            bad, x[bad]
        )));
    }
    let mut d = Int::one();
    for v in &x {
        d = d.lcm(v.denom());
    }
    let mut q: Vec<Int> = x.iter().map(|v| (v * Rat::from_integer(d.clone())).to_integer()).collect();
    let g = q.iter().fold(Int::zero(), |acc, w| acc.gcd(w));
    if g > Int::one() {
        for w in &mut q {
            *w /= &g;
        }
        d /= &g;
    }
    Ok(WeightSystem::new(q, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::int;

    #[test]
    fn fermat_quintic_weights() {
        let a = IntMatrix::diagonal(&[5, 5, 5, 5, 5]);
        let w = positive_weight_solve(&a).unwrap();
        assert_eq!(w.q, vec![int(1); 5]);
        assert_eq!(w.d, int(5));
        assert!(w.is_calabi_yau());
    }

    #[test]
    fn cubic_chain_transpose_weights() {
        // A^T for x0^3 + x1^2 x2 + x2^3, i.e. y0^3 + y1^2 + y1 y2^3
        let at = IntMatrix::from_i64_rows(&[&[3, 0, 0], &[0, 2, 0], &[0, 1, 3]]);
        let w = positive_weight_solve(&at).unwrap();
        assert_eq!(w.q, vec![int(2), int(3), int(1)]);
        assert_eq!(w.d, int(6));
    }

    #[test]
    fn chain_mirror_weights_by_exact_solve() {
        // transpose of x0^4 x1 + x1^4 x2 + x2^4 x3 + x3^4 x4 + x4^5,
        // i.e. y0^4 + y0 y1^4 + y1 y2^4 + y2 y3^4 + y3 y4^5
        let at = IntMatrix::from_i64_rows(&[
            &[4, 0, 0, 0, 0],
            &[1, 4, 0, 0, 0],
            &[0, 1, 4, 0, 0],
            &[0, 0, 1, 4, 0],
            &[0, 0, 0, 1, 5],
        ]);
        let w = positive_weight_solve(&at).unwrap();
        // oracle: A^T q = d 1 entrywise and gcd(q) = 1
        let got = at.mul_vec(&w.q);
        assert!(got.iter().all(|v| *v == w.d));
        let g = w.q.iter().fold(Int::zero(), |acc, v| acc.gcd(v));
        assert_eq!(g, Int::one());
        assert_eq!(w.q, vec![int(64), int(48), int(52), int(51), int(41)]);
        assert_eq!(w.d, int(256));
        assert!(w.is_calabi_yau());
    }

    #[test]
    fn no_positive_solution() {
        // row sums force a zero weight: x0^2 x1 + x1
        let a = IntMatrix::from_i64_rows(&[&[2, 1], &[0, 1]]);
        assert!(matches!(
            positive_weight_solve(&a),
            Err(Error::NoPositiveWeights(_))
        ));
    }

    #[test]
    fn weight_solve_property() {
        // assorted atomic matrices: A q = d 1 entrywise, gcd 1
        let mats = [
            IntMatrix::from_i64_rows(&[&[3, 0, 0], &[0, 2, 1], &[0, 0, 3]]),
            IntMatrix::from_i64_rows(&[&[4, 1], &[1, 4]]),
            IntMatrix::from_i64_rows(&[&[2, 1, 0], &[0, 3, 1], &[1, 0, 4]]),
        ];
        for a in &mats {
            let w = positive_weight_solve(a).unwrap();
            let got = a.mul_vec(&w.q);
            assert!(got.iter().all(|v| *v == w.d), "A q = d 1 fails for {a:?}");
            let g = w.q.iter().fold(Int::zero(), |acc, v| acc.gcd(v));
            assert_eq!(g, Int::one());
        }
    }
}
