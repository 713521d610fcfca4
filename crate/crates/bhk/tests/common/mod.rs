//! Shared generators for the randomized suites: classifiable Calabi-Yau
//! polynomials built on curated Gorenstein weight systems, cleaves derived
//! from them, and small invertible matrices of atomic shape.

use bhk::cleave::{detect_cleave, vertex_ordered, Cleave};
use bhk::invertible::{classify, InvertiblePolynomial};
use bhk::mat::{Int, IntMatrix};
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// Weight systems with `q_i | d`, `gcd(q) = 1`, and `sum q_i = d`, so the
/// ambient is Gorenstein and every polynomial built on them is Calabi-Yau.
pub fn gorenstein_weight_systems() -> Vec<(Vec<i64>, i64)> {
    vec![
        (vec![1, 1, 1], 3),
        (vec![1, 1, 2], 4),
        (vec![1, 2, 3], 6),
        (vec![1, 1, 1, 1], 4),
        (vec![1, 1, 2, 4], 8),
        (vec![1, 2, 2, 5], 10),
        (vec![1, 2, 3, 6], 12),
        (vec![1, 1, 4, 6], 12),
        (vec![1, 1, 1, 1, 1], 5),
        (vec![1, 1, 1, 1, 4], 8),
        (vec![1, 1, 2, 2, 2], 8),
        (vec![1, 1, 2, 4, 4], 12),
    ]
}

/// Random classifiable Calabi-Yau polynomial on one of the curated weight
/// systems: every vertex either gets the Fermat exponent `d/q_v` or an
/// arrow `v -> j` with exponent `(d - q_j)/q_v` when that is a positive
/// integer and `j` has no incoming arrow yet.
pub fn random_cy_polynomial<R: Rng>(rng: &mut R) -> InvertiblePolynomial {
    let systems = gorenstein_weight_systems();
    loop {
        let (q, d) = systems[rng.gen_range(0..systems.len())].clone();
        let n = q.len();
        let mut rows = vec![vec![Int::zero(); n]; n];
        let mut indegree = vec![0usize; n];
        let mut targets: Vec<Option<usize>> = vec![None; n];
        for v in 0..n {
            let mut choices: Vec<Option<usize>> = vec![None];
            for j in 0..n {
                if j == v || indegree[j] > 0 {
                    continue;
                }
                let num = d - q[j];
                if num > 0 && num % q[v] == 0 {
                    choices.push(Some(j));
                }
            }
            let pick = choices[rng.gen_range(0..choices.len())];
            targets[v] = pick;
            if let Some(j) = pick {
                indegree[j] += 1;
            }
        }
        for v in 0..n {
            match targets[v] {
                None => rows[v][v] = Int::from(d / q[v]),
                Some(j) => {
                    rows[v][v] = Int::from((d - q[j]) / q[v]);
                    rows[v][j] = Int::one();
                }
            }
        }
        let m = IntMatrix::from_rows(rows);
        if m.det().is_zero() {
            continue;
        }
        let Ok(p) = InvertiblePolynomial::from_matrix(m) else {
            continue;
        };
        if classify(&p).is_ok() {
            return p;
        }
    }
}

/// Random Gorenstein cleave: a random CY polynomial with at least one
/// arrow, cleaved at a random arrow vertex.
pub fn random_gorenstein_cleave<R: Rng>(rng: &mut R) -> Cleave {
    loop {
        let p = random_cy_polynomial(rng);
        let p = vertex_ordered(&p).unwrap();
        let dec = classify(&p).unwrap();
        let arrows: Vec<usize> = (0..p.n_vars()).filter(|&v| dec.arrow[v].is_some()).collect();
        if arrows.is_empty() {
            continue;
        }
        let v = arrows[rng.gen_range(0..arrows.len())];
        let w = p.weights().unwrap();
        let exp = &w.d / &w.q[v];
        let mut m = p.matrix().clone();
        let mut fermat = vec![Int::zero(); p.n_vars()];
        fermat[v] = exp;
        m.set_row(v, fermat);
        let Ok(p2) = InvertiblePolynomial::new(m, p.coeffs().to_vec(), true) else {
            continue;
        };
        if classify(&p2).is_err() {
            continue;
        }
        if let Ok(cl) = detect_cleave(&p, &p2) {
            return cl;
        }
    }
}

/// Random invertible non-negative matrix of atomic shape with
/// `|det| <= max_det`.
pub fn random_invertible_matrix<R: Rng>(rng: &mut R, max_det: i64) -> IntMatrix {
    loop {
        let n = rng.gen_range(2..=4);
        let mut rows = vec![vec![Int::zero(); n]; n];
        let mut indegree = vec![0usize; n];
        for v in 0..n {
            rows[v][v] = Int::from(rng.gen_range(1..=3) as i64);
            if rng.gen_bool(0.6) {
                let j = rng.gen_range(0..n);
                if j != v && indegree[j] == 0 {
                    rows[v][j] = Int::one();
                    indegree[j] += 1;
                }
            }
            if rows[v][v].is_one() && (0..n).all(|j| j == v || rows[v][j].is_zero()) {
                rows[v][v] = Int::from(2);
            }
        }
        let m = IntMatrix::from_rows(rows);
        let det = m.det();
        if !det.is_zero() && det.abs() <= Int::from(max_det) {
            return m;
        }
    }
}
