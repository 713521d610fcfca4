//! Exact integer and rational linear algebra.
//!
//! Everything here is arbitrary-precision: `Int` is [`num_bigint::BigInt`]
//! and `Rat` is [`num_rational::BigRational`]. Floating point is banned
//! repo-wide because downstream radical-membership proofs are certificates,
//! not approximations.
//!
//! The Hermite normal form is row-style with non-negative pivots and
//! entries above a pivot reduced into `[0, pivot)`; this single convention
//! is what makes group canonical forms deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

/// Dense row-major matrix over the integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (r, c): (usize, usize)) -> &Int {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Int {
        &mut self.data[r * self.cols + c]
    }
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Int::from(v)).collect())
                .collect(),
        )
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n, n);
        for (i, &v) in entries.iter().enumerate() {
            m[(i, i)] = Int::from(v);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> Vec<Int> {
        (0..self.cols).map(|c| self[(r, c)].clone()).collect()
    }

    pub fn col(&self, c: usize) -> Vec<Int> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn set_row(&mut self, r: usize, row: Vec<Int>) {
        assert_eq!(row.len(), self.cols);
        for (c, v) in row.into_iter().enumerate() {
            self[(r, c)] = v;
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let add = a * &other[(k, c)];
                    out[(r, c)] += add;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| &self[(r, c)] * &v[c]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut a = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                // find a pivot row
                match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            let tmp = a[(k, c)].clone();
                            a[(k, c)] = a[(r, c)].clone();
                            a[(r, c)] = tmp;
                        }
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = num / &prev;
                }
                a[(i, k)] = Int::zero();
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    /// Exact inverse over the rationals. Errors on singular input.
    pub fn rational_inverse(&self) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "inverse of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        RatMatrix::from_int(self).inverse()
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix::from_int(self)
    }

    /// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular
    /// and `U * self == H`. Pivots are positive, entries above each pivot
    /// reduced into `[0, pivot)`, zero rows at the bottom.
    pub fn hermite_normal_form(&self) -> (IntMatrix, IntMatrix) {
        let mut h = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row >= self.rows {
                break;
            }
            // clear below pivot_row in this column by gcd steps
            loop {
                let mut best: Option<usize> = None;
                for r in pivot_row..self.rows {
                    if !h[(r, col)].is_zero() {
                        best = match best {
                            None => Some(r),
                            Some(b) if h[(r, col)].abs() < h[(b, col)].abs() => Some(r),
                            other => other,
                        };
                    }
                }
                let Some(b) = best else { break };
                if b != pivot_row {
                    h.swap_rows(b, pivot_row);
                    u.swap_rows(b, pivot_row);
                }
                let mut done = true;
                let p = h[(pivot_row, col)].clone();
                for r in pivot_row + 1..self.rows {
                    if !h[(r, col)].is_zero() {
                        let q = h[(r, col)].div_floor(&p);
                        h.row_sub_mul(r, pivot_row, &q);
                        u.row_sub_mul(r, pivot_row, &q);
                        if !h[(r, col)].is_zero() {
                            done = false;
                        }
                    }
                }
                if done {
                    break;
                }
            }
            if h[(pivot_row, col)].is_zero() {
                continue;
            }
            if h[(pivot_row, col)].is_negative() {
                h.negate_row(pivot_row);
                u.negate_row(pivot_row);
            }
            // reduce entries above the pivot into [0, pivot)
            let p = h[(pivot_row, col)].clone();
            for r in 0..pivot_row {
                if !h[(r, col)].is_zero() {
                    let q = h[(r, col)].div_floor(&p);
                    h.row_sub_mul(r, pivot_row, &q);
                    u.row_sub_mul(r, pivot_row, &q);
                }
            }
            pivot_row += 1;
        }
        (h, u)
    }

    /// Smith normal form: returns `(D, U, V)` with `U`, `V` unimodular,
    /// `U * self * V == D`, `D` diagonal with non-negative entries and
    /// `d_i | d_{i+1}`.
    pub fn smith_normal_form(&self) -> (IntMatrix, IntMatrix, IntMatrix) {
        let mut d = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let t_max = self.rows.min(self.cols);
        let mut t = 0usize;
        while t < t_max {
            // find minimal nonzero entry in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for r in t..self.rows {
                for c in t..self.cols {
                    if !d[(r, c)].is_zero() {
                        best = match best {
                            None => Some((r, c)),
                            Some((br, bc)) if d[(r, c)].abs() < d[(br, bc)].abs() => Some((r, c)),
                            other => other,
                        };
                    }
                }
            }
            let Some((br, bc)) = best else { break };
            if br != t {
                d.swap_rows(br, t);
                u.swap_rows(br, t);
            }
            if bc != t {
                d.swap_cols(bc, t);
                v.swap_cols(bc, t);
            }
            // clear row t and column t; repeat while remainders appear
            let mut clean = false;
            while !clean {
                clean = true;
                let p = d[(t, t)].clone();
                for r in t + 1..self.rows {
                    if !d[(r, t)].is_zero() {
                        let q = d[(r, t)].div_floor(&p);
                        d.row_sub_mul(r, t, &q);
                        u.row_sub_mul(r, t, &q);
                    }
                }
                for c in t + 1..self.cols {
                    if !d[(t, c)].is_zero() {
                        let q = d[(t, c)].div_floor(&p);
                        d.col_sub_mul(c, t, &q);
                        v.col_sub_mul(c, t, &q);
                    }
                }
                // if something survived, move a smaller entry to the pivot
                let mut dirty: Option<(usize, usize)> = None;
                for r in t + 1..self.rows {
                    if !d[(r, t)].is_zero() {
                        dirty = Some((r, t));
                    }
                }
                for c in t + 1..self.cols {
                    if !d[(t, c)].is_zero() {
                        dirty = Some((t, c));
                    }
                }
                if let Some((r, c)) = dirty {
                    if r != t {
                        d.swap_rows(r, t);
                        u.swap_rows(r, t);
                    } else if c != t {
                        d.swap_cols(c, t);
                        v.swap_cols(c, t);
                    }
                    clean = false;
                }
            }
            // pivot must divide every entry of the trailing block
            let mut fixed = true;
            'scan: for r in t + 1..self.rows {
                for c in t + 1..self.cols {
                    if !(&d[(r, c)] % &d[(t, t)]).is_zero() {
                        d.row_add(t, r);
                        u.row_add(t, r);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if !fixed {
                continue; // redo this pivot with the new row folded in
            }
            if d[(t, t)].is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
            t += 1;
        }
        (d, u, v)
    }

    /// Invariant factors (diagonal of the Smith form), including any zeros.
    pub fn invariant_factors(&self) -> Vec<Int> {
        let (d, _, _) = self.smith_normal_form();
        (0..self.rows.min(self.cols)).map(|i| d[(i, i)].clone()).collect()
    }

    /// Basis for the left kernel lattice `{ x : x * self = 0 }`.
    /// The rows of the result are a basis; the lattice is saturated.
    pub fn left_kernel(&self) -> IntMatrix {
        let (h, u) = self.hermite_normal_form();
        let mut rows = Vec::new();
        for r in 0..self.rows {
            if (0..self.cols).all(|c| h[(r, c)].is_zero()) {
                rows.push(u.row(r));
            }
        }
        if rows.is_empty() {
            IntMatrix::zero(0, self.rows)
        } else {
            IntMatrix::from_rows(rows)
        }
    }

    /// Presentation of `Z^rows / image(self)` where the image is the span of
    /// the columns (the matrix viewed as a map `Z^cols -> Z^rows`).
    pub fn cokernel(&self) -> AbelianQuotient {
        let (d, u, _v) = self.smith_normal_form();
        let n = self.rows;
        let k = self.rows.min(self.cols);
        let mut factors = Vec::new();
        let mut lift_rows: Vec<Vec<Int>> = Vec::new();
        // x -> Ux maps the quotient to Z^n / (d_i Z e_i); generator i lifts
        // back through U^{-1}.
        let u_inv = u
            .rational_inverse()
            .expect("unimodular matrix is invertible")
            .to_int()
            .expect("inverse of a unimodular matrix is integral");
        let mut free_rank = n.saturating_sub(k);
        for i in 0..k {
            let f = d[(i, i)].clone();
            if f.is_zero() {
                free_rank += 1;
            } else if !f.is_one() {
                factors.push(f);
                lift_rows.push(u_inv.col(i));
            }
        }
        let order = factors.iter().product();
        AbelianQuotient {
            invariant_factors: factors,
            free_rank,
            generator_lifts: if lift_rows.is_empty() {
                IntMatrix::zero(0, n)
            } else {
                IntMatrix::from_rows(lift_rows)
            },
            order,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let tmp = self[(a, c)].clone();
            self[(a, c)] = self[(b, c)].clone();
            self[(b, c)] = tmp;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            let tmp = self[(r, a)].clone();
            self[(r, a)] = self[(r, b)].clone();
            self[(r, b)] = tmp;
        }
    }

    /// row[a] -= q * row[b]
    fn row_sub_mul(&mut self, a: usize, b: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let sub = q * &self[(b, c)];
            self[(a, c)] -= sub;
        }
    }

    /// col[a] -= q * col[b]
    fn col_sub_mul(&mut self, a: usize, b: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let sub = q * &self[(r, b)];
            self[(r, a)] -= sub;
        }
    }

    /// row[a] += row[b]
    fn row_add(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            let add = self[(b, c)].clone();
            self[(a, c)] += add;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self[(r, c)].clone();
            self[(r, c)] = v;
        }
    }

    /// Parse the CLI matrix format: one row per line, whitespace-separated
    /// base-10 integers.
    pub fn parse_text(text: &str) -> Result<IntMatrix> {
        let mut rows: Vec<Vec<Int>> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                let v: Int = tok.parse().map_err(|_| Error::Parse {
                    position: lineno,
                    message: format!("invalid integer `{tok}` on line {}", lineno + 1),
                })?;
                row.push(v);
            }
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(Error::Shape(format!(
                        "row {} has {} entries, expected {}",
                        lineno + 1,
                        row.len(),
                        first.len()
                    )));
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Shape("empty matrix".into()));
        }
        Ok(IntMatrix::from_rows(rows))
    }

    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self[(r, c)].to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Dense matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

pub type RatVector = Vec<Rat>;

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        RatMatrix {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|v| Rat::from_integer(v.clone())).collect(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> RatVector {
        (0..self.cols).map(|c| self[(r, c)].clone()).collect()
    }

    pub fn col(&self, c: usize) -> RatVector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self[(r, k)].is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let add = &self[(r, k)] * &other[(k, c)];
                    out[(r, c)] += add;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> RatVector {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| &self[(r, c)] * &v[c]).sum())
            .collect()
    }

    /// Sum of all entries.
    pub fn entry_sum(&self) -> Rat {
        self.data.iter().sum()
    }

    /// Gauss-Jordan inverse. Errors on singular input.
    pub fn inverse(&self) -> Result<RatMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for c in 0..n {
                    let tmp = a[(col, c)].clone();
                    a[(col, c)] = a[(pivot, c)].clone();
                    a[(pivot, c)] = tmp;
                    let tmp = inv[(col, c)].clone();
                    inv[(col, c)] = inv[(pivot, c)].clone();
                    inv[(pivot, c)] = tmp;
                }
            }
            let p = a[(col, col)].clone();
            for c in 0..n {
                a[(col, c)] = &a[(col, c)] / &p;
                inv[(col, c)] = &inv[(col, c)] / &p;
            }
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    for c in 0..n {
                        let s = &f * &a[(col, c)];
                        a[(r, c)] -= s;
                        let s = &f * &inv[(col, c)];
                        inv[(r, c)] -= s;
                    }
                }
            }
        }
        Ok(inv)
    }

    /// Solve `self * x = b` when `self` is square and invertible.
    pub fn solve(&self, b: &[Rat]) -> Result<RatVector> {
        Ok(self.inverse()?.mul_vec(b))
    }

    /// Integer cast; `None` when any entry has a denominator.
    pub fn to_int(&self) -> Option<IntMatrix> {
        let mut data = Vec::with_capacity(self.data.len());
        for v in &self.data {
            if !v.is_integer() {
                return None;
            }
            data.push(v.to_integer());
        }
        Some(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

/// Presentation of a finitely generated abelian quotient group.
///
/// `invariant_factors` lists the nontrivial factors (each > 1, each dividing
/// the next); `generator_lifts` has one row per factor giving a preimage of
/// that cyclic generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianQuotient {
    pub invariant_factors: Vec<Int>,
    pub free_rank: usize,
    pub generator_lifts: IntMatrix,
    pub order: Int,
}

impl AbelianQuotient {
    pub fn trivial() -> Self {
        AbelianQuotient {
            invariant_factors: Vec::new(),
            free_rank: 0,
            generator_lifts: IntMatrix::zero(0, 0),
            order: Int::one(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    /// Rendering like `Z3 x Z6` (or `1` for the trivial group).
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|f| format!("Z{f}"))
            .collect();
        parts.extend(std::iter::repeat("Z".to_string()).take(self.free_rank));
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" x ")
        }
    }
}

/// Lattice given by a basis of rows in Hermite normal form.
///
/// These always live inside `Z^n` for the ambient dimension `n`; operations
/// keep the HNF canonical so equality is literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowLattice {
    basis: IntMatrix,
    ambient: usize,
}

impl RowLattice {
    /// Span of the given generator rows (need not be independent).
    pub fn span(gens: &IntMatrix) -> Self {
        let ambient = gens.cols();
        let (h, _) = gens.hermite_normal_form();
        let mut rows = Vec::new();
        for r in 0..h.rows() {
            if !(0..h.cols()).all(|c| h[(r, c)].is_zero()) {
                rows.push(h.row(r));
            }
        }
        let basis = if rows.is_empty() {
            IntMatrix::zero(0, ambient)
        } else {
            IntMatrix::from_rows(rows)
        };
        RowLattice { basis, ambient }
    }

    pub fn full(n: usize) -> Self {
        RowLattice {
            basis: IntMatrix::identity(n),
            ambient: n,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Membership of an integer vector via echelon reduction.
    pub fn contains(&self, v: &[Int]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut v: Vec<Int> = v.to_vec();
        for r in 0..self.basis.rows() {
            let pivot_col = (0..self.ambient)
                .find(|&c| !self.basis[(r, c)].is_zero())
                .expect("basis rows are nonzero");
            if v[pivot_col].is_zero() {
                continue;
            }
            let (q, rem) = v[pivot_col].div_rem(&self.basis[(r, pivot_col)]);
            if !rem.is_zero() {
                return false;
            }
            for c in 0..self.ambient {
                let s = &q * &self.basis[(r, c)];
                v[c] -= s;
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    pub fn contains_lattice(&self, other: &RowLattice) -> bool {
        (0..other.basis.rows()).all(|r| self.contains(&other.basis.row(r)))
    }

    /// Intersection of two lattices via the left kernel of the stacked bases.
    pub fn intersect(&self, other: &RowLattice) -> RowLattice {
        assert_eq!(self.ambient, other.ambient);
        let r1 = self.basis.rows();
        let r2 = other.basis.rows();
        if r1 == 0 || r2 == 0 {
            return RowLattice {
                basis: IntMatrix::zero(0, self.ambient),
                ambient: self.ambient,
            };
        }
        let mut stacked = IntMatrix::zero(r1 + r2, self.ambient);
        for r in 0..r1 {
            for c in 0..self.ambient {
                stacked[(r, c)] = self.basis[(r, c)].clone();
            }
        }
        for r in 0..r2 {
            for c in 0..self.ambient {
                stacked[(r1 + r, c)] = -other.basis[(r, c)].clone();
            }
        }
        let ker = stacked.left_kernel();
        let mut rows = Vec::new();
        for kr in 0..ker.rows() {
            let mut v = vec![Int::zero(); self.ambient];
            for i in 0..r1 {
                for c in 0..self.ambient {
                    let add = &ker[(kr, i)] * &self.basis[(i, c)];
                    v[c] += add;
                }
            }
            rows.push(v);
        }
        if rows.is_empty() {
            RowLattice {
                basis: IntMatrix::zero(0, self.ambient),
                ambient: self.ambient,
            }
        } else {
            RowLattice::span(&IntMatrix::from_rows(rows))
        }
    }

    /// Index `[other : self]` for `self ⊆ other` of equal rank.
    pub fn index_in(&self, other: &RowLattice) -> Int {
        let x = other.express(&self.basis);
        x.det().abs()
    }

    /// Write each row of `m` in terms of this lattice's basis.
    /// Panics if a row is not in the rational row span; the result is the
    /// exact integer coefficient matrix when the rows lie in the lattice.
    pub fn express(&self, m: &IntMatrix) -> IntMatrix {
        // solve X * basis = m  =>  basis^T * X^T = m^T
        let bt = RatMatrix::from_int(&self.basis.transpose());
        // basis has full column rank equal to its row count; solve least
        // structurally via square system on pivot columns
        let pivots: Vec<usize> = (0..self.basis.rows())
            .map(|r| {
                (0..self.ambient)
                    .find(|&c| !self.basis[(r, c)].is_zero())
                    .expect("nonzero basis row")
            })
            .collect();
        let k = self.basis.rows();
        let mut sq = RatMatrix::zero(k, k);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..k {
                sq[(i, j)] = bt[(p, j)].clone();
            }
        }
        let sq_inv = sq.inverse().expect("pivot submatrix is invertible");
        let mut out = IntMatrix::zero(m.rows(), k);
        for r in 0..m.rows() {
            let rhs: Vec<Rat> = pivots
                .iter()
                .map(|&p| Rat::from_integer(m[(r, p)].clone()))
                .collect();
            let x = sq_inv.mul_vec(&rhs);
            // verify the full row, not just pivot columns
            let mut full = vec![Rat::zero(); self.ambient];
            for (j, xv) in x.iter().enumerate() {
                for c in 0..self.ambient {
                    let add = xv * &Rat::from_integer(self.basis[(j, c)].clone());
                    full[c] += add;
                }
            }
            for c in 0..self.ambient {
                assert_eq!(
                    full[c],
                    Rat::from_integer(m[(r, c)].clone()),
                    "row not in the lattice span"
                );
            }
            for (j, xv) in x.into_iter().enumerate() {
                assert!(xv.is_integer(), "row not in the integer lattice");
                out[(r, j)] = xv.to_integer();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn random_matrix(seed: &mut u64, n: usize, lo: i64, hi: i64) -> IntMatrix {
        let mut next = || {
            *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (*seed >> 33) as i64
        };
        IntMatrix::from_rows(
            (0..n)
                .map(|_| (0..n).map(|_| Int::from(lo + next().rem_euclid(hi - lo + 1))).collect())
                .collect(),
        )
    }

    #[test]
    fn hnf_identity_and_diagonal() {
        let id = IntMatrix::identity(3);
        let (h, u) = id.hermite_normal_form();
        assert_eq!(h, IntMatrix::identity(3));
        assert_eq!(u, IntMatrix::identity(3));

        let d = IntMatrix::diagonal(&[2, 3]);
        let (h, u) = d.hermite_normal_form();
        assert_eq!(h, d);
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_random_remultiplication() {
        let mut seed = 0xfeed_beefu64;
        for _ in 0..40 {
            let m = random_matrix(&mut seed, 4, -9, 9);
            let (h, u) = m.hermite_normal_form();
            assert_eq!(u.mul(&m), h);
            assert_eq!(u.det().abs(), Int::one());
            // echelon shape: pivot columns strictly increase
            let mut last = -1i64;
            for r in 0..h.rows() {
                let p = (0..h.cols()).find(|&c| !h[(r, c)].is_zero());
                match p {
                    Some(c) => {
                        assert!((c as i64) > last, "pivots must move right");
                        assert!(h[(r, c)].is_positive());
                        last = c as i64;
                    }
                    None => {
                        for r2 in r..h.rows() {
                            assert!((0..h.cols()).all(|c| h[(r2, c)].is_zero()));
                        }
                        break;
                    }
                }
            }
        }
    }

    #[test]
    fn snf_diagonal_input() {
        let m = IntMatrix::diagonal(&[5, 5, 5, 5, 5]);
        let (d, u, v) = m.smith_normal_form();
        assert_eq!(u.mul(&m).mul(&v), d);
        assert_eq!(m.invariant_factors(), vec![int(5); 5]);
    }

    #[test]
    fn snf_zero_matrix() {
        let m = IntMatrix::zero(2, 2);
        let (d, u, v) = m.smith_normal_form();
        assert!(d.is_zero());
        assert_eq!(u, IntMatrix::identity(2));
        assert_eq!(v, IntMatrix::identity(2));
    }

    // gcd-of-minors oracle: d1 = gcd(entries), d1*d2 = gcd(2x2 minors),
    // d1*d2*d3 = |det|
    fn minor_gcd_oracle_3x3(m: &IntMatrix) -> Vec<Int> {
        let g1: Int = {
            let mut g = Int::zero();
            for r in 0..3 {
                for c in 0..3 {
                    g = g.gcd(&m[(r, c)]);
                }
            }
            g
        };
        let mut g2 = Int::zero();
        for r1 in 0..3 {
            for r2 in r1 + 1..3 {
                for c1 in 0..3 {
                    for c2 in c1 + 1..3 {
                        let minor = &m[(r1, c1)] * &m[(r2, c2)] - &m[(r1, c2)] * &m[(r2, c1)];
                        g2 = g2.gcd(&minor);
                    }
                }
            }
        }
        let g3 = m.det().abs();
        vec![g1.clone(), &g2 / &g1, g3 / g2]
    }

    #[test]
    fn snf_cubic_chain_matrix() {
        // exponent matrix of x0^3 + x1^2 x2 + x2^3
        let m = IntMatrix::from_i64_rows(&[&[3, 0, 0], &[0, 2, 1], &[0, 0, 3]]);
        let oracle = minor_gcd_oracle_3x3(&m);
        assert_eq!(oracle, vec![int(1), int(3), int(6)]);
        assert_eq!(m.invariant_factors(), oracle);
        let (d, u, v) = m.smith_normal_form();
        assert_eq!(u.mul(&m).mul(&v), d);
        assert_eq!(u.det().abs(), Int::one());
        assert_eq!(v.det().abs(), Int::one());
    }

    #[test]
    fn snf_random_remultiplication() {
        let mut seed = 0xdead_cafeu64;
        for _ in 0..40 {
            let m = random_matrix(&mut seed, 4, -9, 9);
            let (d, u, v) = m.smith_normal_form();
            assert_eq!(u.mul(&m).mul(&v), d);
            assert_eq!(u.det().abs(), Int::one());
            assert_eq!(v.det().abs(), Int::one());
            // divisibility chain
            let k = 4;
            for i in 0..k - 1 {
                if !d[(i + 1, i + 1)].is_zero() {
                    assert!(
                        (&d[(i + 1, i + 1)] % &d[(i, i)]).is_zero() || d[(i, i)].is_zero() == false
                    );
                    if !d[(i, i)].is_zero() {
                        assert!((&d[(i + 1, i + 1)] % &d[(i, i)]).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_scaled_identity() {
        let m = IntMatrix::diagonal(&[5, 5, 5, 5, 5]);
        let inv = m.rational_inverse().unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let want = if i == j { rat(1, 5) } else { Rat::zero() };
                assert_eq!(inv[(i, j)], want);
            }
        }
    }

    #[test]
    fn inverse_cubic_chain_sums_to_one() {
        let m = IntMatrix::from_i64_rows(&[&[3, 0, 0], &[0, 2, 1], &[0, 0, 3]]);
        let inv = m.rational_inverse().unwrap();
        assert_eq!(m.to_rat().mul(&inv), RatMatrix::identity(3));
        assert_eq!(inv.entry_sum(), Rat::one());
    }

    #[test]
    fn inverse_singular_errors() {
        let m = IntMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(m.rational_inverse().unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn inverse_random_roundtrip() {
        let mut seed = 0x1234_5678u64;
        let mut checked = 0;
        while checked < 200 {
            let n = 1 + (seed % 6) as usize;
            let m = random_matrix(&mut seed, n, -6, 6);
            if m.det().is_zero() {
                continue;
            }
            let inv = m.rational_inverse().unwrap();
            assert_eq!(inv.mul(&m.to_rat()), RatMatrix::identity(n));
            checked += 1;
        }
    }

    #[test]
    fn cokernel_examples() {
        assert!(IntMatrix::identity(4).cokernel().is_trivial());
        let q = IntMatrix::diagonal(&[5, 5, 5]).cokernel();
        assert_eq!(q.invariant_factors, vec![int(5); 3]);
        assert_eq!(q.order, int(125));
        let q = IntMatrix::from_i64_rows(&[&[3, 0, 0], &[0, 2, 1], &[0, 0, 3]]).cokernel();
        assert_eq!(q.invariant_factors, vec![int(3), int(6)]);
        assert_eq!(q.describe(), "Z3 x Z6");
    }

    #[test]
    fn degenerate_empty_matrix() {
        let m = IntMatrix::zero(0, 0);
        assert_eq!(m.det(), Int::one());
        let (h, u) = m.hermite_normal_form();
        assert_eq!(h.rows(), 0);
        assert_eq!(u.rows(), 0);
        assert!(m.cokernel().is_trivial());
    }

    #[test]
    fn left_kernel_basic() {
        let m = IntMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        let k = m.left_kernel();
        assert_eq!(k.rows(), 1);
        assert!(k.mul(&m).is_zero());
        // (2, -1) spans the kernel
        let l = RowLattice::span(&k);
        assert!(l.contains(&[int(2), int(-1)]));
        assert!(!l.contains(&[int(1), int(0)]));
    }

    #[test]
    fn lattice_intersection() {
        // 2Z^2  ∩  {(a,b): a+b even}  =  2Z^2
        let two = RowLattice::span(&IntMatrix::diagonal(&[2, 2]));
        let even = RowLattice::span(&IntMatrix::from_i64_rows(&[&[1, 1], &[0, 2]]));
        let meet = two.intersect(&even);
        assert_eq!(meet, two);
        assert!(even.contains_lattice(&meet));
        // index of 2Z^2 in Z^2 is 4
        assert_eq!(two.index_in(&RowLattice::full(2)), int(4));
    }

    #[test]
    fn matrix_text_roundtrip() {
        let m = IntMatrix::from_i64_rows(&[&[3, 0, 0], &[0, 2, 1], &[0, 0, 3]]);
        let text = m.to_text();
        assert_eq!(IntMatrix::parse_text(&text).unwrap(), m);
        assert!(IntMatrix::parse_text("1 2\n3").is_err());
        assert!(IntMatrix::parse_text("1 x").is_err());
    }
}
