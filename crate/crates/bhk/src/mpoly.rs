//! Sparse multivariate polynomials over the rationals.
//!
//! A ring context fixes the ordered variable list; the monomial order is
//! graded reverse lexicographic with respect to that order. Contexts are
//! immutable and shared by `Arc`, so polynomials are safe to use across
//! threads.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::mat::{Int, Rat};

/// Ordered variable list of a polynomial ring.
#[derive(Debug, PartialEq, Eq)]
pub struct RingContext {
    vars: Vec<String>,
}

pub type Ring = Arc<RingContext>;

impl RingContext {
    pub fn new(vars: Vec<String>) -> Ring {
        Arc::new(RingContext { vars })
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables plus one fresh variable appended (for the
    /// Rabinowitsch trick).
    pub fn extended(&self, fresh: &str) -> Ring {
        let mut vars = self.vars.clone();
        assert!(
            !vars.iter().any(|v| v == fresh),
            "fresh variable already present"
        );
        vars.push(fresh.to_string());
        RingContext::new(vars)
    }
}

/// Exponent vector under graded reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn divide_into(&self, other: &Monomial) -> Monomial {
        Monomial(
            other
                .0
                .iter()
                .zip(&self.0)
                .map(|(b, a)| b - a)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variable indices with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    /// Squarefree monomial on the same support.
    pub fn support_monomial(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| if e > 0 { 1 } else { 0 }).collect())
    }

    /// `true` when every variable of `self` appears in `other`.
    pub fn support_subset_of(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b > 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        // grevlex tie-break: the rightmost differing exponent decides,
        // smaller exponent there means larger monomial
        for i in (0..self.0.len()).rev() {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial: monomial -> nonzero rational coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(ring: &Ring) -> Self {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rat) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.n_vars()), c);
        }
        p
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rat::one())
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.n_vars(), i), Rat::one())
    }

    pub fn term(ring: &Ring, m: Monomial, c: Rat) -> Self {
        assert_eq!(m.0.len(), ring.n_vars());
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Leading term in grevlex order.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.last_key_value()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// `true` when the polynomial is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert!(Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let mut out = Poly::zero(&self.ring);
        for (mm, cc) in &self.terms {
            out.terms.insert(mm.mul(m), cc * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &other.terms {
            for (mm, cc) in &self.terms {
                out.add_term(mm.mul(m), cc * c);
            }
        }
        out
    }

    /// Scale to leading coefficient 1. No-op on zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Rat::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    /// Formal partial derivative.
    pub fn partial_derivative(&self, var: usize) -> Poly {
        assert!(var < self.ring.n_vars());
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut me = m.clone();
            me.0[var] -= 1;
            out.add_term(me, c * Rat::from_integer(Int::from(e)));
        }
        out
    }

    /// Substitute 1 for the given variables.
    pub fn substitute_one(&self, vars: &[usize]) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut me = m.clone();
            for &v in vars {
                me.0[v] = 0;
            }
            out.add_term(me, c.clone());
        }
        out
    }

    /// Image in a ring with extra variables appended (same leading order on
    /// the shared prefix).
    pub fn lift_to(&self, bigger: &Ring) -> Poly {
        let n = self.ring.n_vars();
        assert!(bigger.n_vars() >= n);
        assert_eq!(&bigger.var_names()[..n], self.ring.var_names());
        let mut out = Poly::zero(bigger);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.resize(bigger.n_vars(), 0);
            out.terms.insert(Monomial(e), c.clone());
        }
        out
    }

    /// Largest `1/c` making `c * self` integral with coprime coefficients,
    /// preserving the leading sign. Returns the primitive polynomial.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = Int::one();
        for c in self.terms.values() {
            den = num_integer::Integer::lcm(&den, c.denom());
        }
        let mut num = Int::zero();
        for c in self.terms.values() {
            num = num_integer::Integer::gcd(&num, &(c.numer() * &den / c.denom()));
        }
        if num.is_zero() {
            return self.clone();
        }
        let mut scale = Rat::new(den, num); // positive: den > 0, num = gcd > 0
        if self.leading().unwrap().1.is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = self.format_monomial(m);
            let abs = c.abs();
            let piece = if m.is_one() {
                format!("{abs}")
            } else if abs.is_one() {
                mono
            } else {
                format!("{abs}*{mono}")
            };
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
                out.push_str(&piece);
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
                out.push_str(&piece);
            }
        }
        out
    }

    fn format_monomial(&self, m: &Monomial) -> String {
        let mut factors = Vec::new();
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e == 1 {
                factors.push(self.ring.var_name(i).to_string());
            } else {
                factors.push(format!("{}^{}", self.ring.var_name(i), e));
            }
        }
        factors.join("*")
    }

    pub fn monomial_text(&self, m: &Monomial) -> String {
        if m.is_one() {
            "1".into()
        } else {
            self.format_monomial(m)
        }
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::rat;

    fn xy_ring() -> Ring {
        RingContext::new(vec!["x".into(), "y".into(), "z".into()])
    }

    #[test]
    fn grevlex_ordering() {
        // degree dominates
        let a = Monomial(vec![2, 0, 0]);
        let b = Monomial(vec![0, 1, 0]);
        assert!(a > b);
        // same degree: x^2 > xy > y^2 > xz > yz > z^2 for x > y > z
        let x2 = Monomial(vec![2, 0, 0]);
        let xy = Monomial(vec![1, 1, 0]);
        let y2 = Monomial(vec![0, 2, 0]);
        let xz = Monomial(vec![1, 0, 1]);
        let yz = Monomial(vec![0, 1, 1]);
        let z2 = Monomial(vec![0, 0, 2]);
        let mut v = vec![z2.clone(), xy.clone(), yz.clone(), x2.clone(), xz.clone(), y2.clone()];
        v.sort();
        v.reverse();
        assert_eq!(v, vec![x2, xy, y2, xz, yz, z2]);
    }

    #[test]
    fn arithmetic_and_derivative() {
        let r = xy_ring();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let f = x.mul(&x).add(&x.mul(&y).scale(&rat(2, 1)));
        assert_eq!(f.to_text(), "x^2 + 2*x*y");
        let fx = f.partial_derivative(0);
        assert_eq!(fx.to_text(), "2*x + 2*y");
        assert!(f.partial_derivative(2).is_zero());
        let c = Poly::constant(&r, rat(7, 2));
        assert!(c.partial_derivative(0).is_zero());
        // d/dy (y * x^2) = x^2
        let g = y.mul(&x).mul(&x);
        assert_eq!(g.partial_derivative(1), x.mul(&x));
    }

    #[test]
    fn substitution_and_units() {
        let r = xy_ring();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let f = x.mul(&y).add(&y.mul(&y));
        let g = f.substitute_one(&[0]);
        assert_eq!(g.to_text(), "y^2 + y");
        assert!(Poly::one(&r).is_unit());
        assert!(!x.is_unit());
    }

    #[test]
    fn primitive_normalization() {
        let r = xy_ring();
        let x = Poly::var(&r, 0);
        let f = x.scale(&rat(-4, 6)).add(&Poly::constant(&r, rat(2, 3)));
        // -2/3 x + 2/3 -> primitive with positive leading coefficient
        let p = f.primitive();
        assert_eq!(p.to_text(), "x - 1");
    }

    #[test]
    fn display_ordering_is_descending() {
        let r = xy_ring();
        let x = Poly::var(&r, 0);
        let z = Poly::var(&r, 2);
        let f = z.add(&x.mul(&x)).sub(&Poly::one(&r));
        assert_eq!(f.to_text(), "x^2 + z - 1");
    }
}
