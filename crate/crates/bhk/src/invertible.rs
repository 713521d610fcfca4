//! Invertible (Kreuzer-Skarke) polynomials: construction, atomic
//! classification, transposition, and the Calabi-Yau / Gorenstein predicates.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::mat::{Int, IntMatrix, Rat};
use crate::parse::parse_raw;
use crate::symmetry::DiagonalGroup;
use crate::weights::{positive_weight_solve, WeightSystem};

/// A sum of `n+1` monomials in `n+1` variables with invertible exponent
/// matrix. Row `i` of `a` is the exponent vector of the `i`-th monomial in
/// source order; `coeffs[i]` is its coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvertiblePolynomial {
    a: IntMatrix,
    coeffs: Vec<Rat>,
    var_names: Vec<String>,
}

impl InvertiblePolynomial {
    /// Build from an exponent matrix with all coefficients 1.
    pub fn from_matrix(a: IntMatrix) -> Result<Self> {
        let coeffs = vec![Rat::one(); a.rows()];
        Self::new(a, coeffs, false)
    }

    pub fn new(a: IntMatrix, coeffs: Vec<Rat>, allow_zero_coeffs: bool) -> Result<Self> {
        if a.rows() != a.cols() {
            return Err(Error::Shape(format!(
                "{} monomials in {} variables",
                a.rows(),
                a.cols()
            )));
        }
        if coeffs.len() != a.rows() {
            return Err(Error::Shape(format!(
                "{} coefficients for {} monomials",
                coeffs.len(),
                a.rows()
            )));
        }
        for r in 0..a.rows() {
            for c in 0..a.cols() {
                if a[(r, c)].is_negative() {
                    return Err(Error::Shape(format!(
                        "negative exponent at monomial {r}, variable {c}"
                    )));
                }
            }
        }
        if a.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        if !allow_zero_coeffs {
            if let Some(i) = coeffs.iter().position(|c| c.is_zero()) {
                return Err(Error::Shape(format!("coefficient {i} is zero")));
            }
        }
        let var_names = (0..a.cols()).map(|i| format!("x{i}")).collect();
        Ok(InvertiblePolynomial {
            a,
            coeffs,
            var_names,
        })
    }

    /// Parse per the grammar in [`crate::parse`]. Monomials become rows of
    /// the exponent matrix in source order; an omitted coefficient means 1.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with_flags(text, false)
    }

    pub fn parse_with_flags(text: &str, allow_zero_coeffs: bool) -> Result<Self> {
        let raw = parse_raw(text)?;
        if raw.monomials.len() != raw.var_count {
            return Err(Error::Shape(format!(
                "{} monomials in {} variables",
                raw.monomials.len(),
                raw.var_count
            )));
        }
        let mut a = IntMatrix::zero(raw.monomials.len(), raw.var_count);
        let mut coeffs = Vec::with_capacity(raw.monomials.len());
        for (r, m) in raw.monomials.iter().enumerate() {
            for (v, e) in &m.exponents {
                a[(r, *v)] = e.clone();
            }
            coeffs.push(m.coeff.clone());
        }
        Self::new(a, coeffs, allow_zero_coeffs)
    }

    pub fn n_vars(&self) -> usize {
        self.a.cols()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    /// Exponent matrix transposed; coefficients carried along by row index.
    pub fn transpose(&self) -> InvertiblePolynomial {
        InvertiblePolynomial {
            a: self.a.transpose(),
            coeffs: self.coeffs.clone(),
            var_names: self.var_names.clone(),
        }
    }

    pub fn weights(&self) -> Result<WeightSystem> {
        positive_weight_solve(&self.a)
    }

    /// Render in the input grammar, e.g. `x0^3+x1^2*x2+x2^3`.
    pub fn to_text(&self) -> String {
        let mut terms = Vec::new();
        for r in 0..self.a.rows() {
            let mut factors = Vec::new();
            for c in 0..self.a.cols() {
                let e = &self.a[(r, c)];
                if e.is_zero() {
                    continue;
                }
                if e.is_one() {
                    factors.push(self.var_names[c].clone());
                } else {
                    factors.push(format!("{}^{}", self.var_names[c], e));
                }
            }
            let coeff = &self.coeffs[r];
            let body = if factors.is_empty() {
                "1".to_string()
            } else {
                factors.join("*")
            };
            if coeff.is_one() {
                terms.push(body);
            } else {
                terms.push(format!("{}*{}", coeff, body));
            }
        }
        terms.join("+")
    }
}

impl std::fmt::Display for InvertiblePolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// `sum_{i,j} (A^{-1})_{ij}`, exactly.
///
/// Equals 1 for Calabi-Yau hypersurfaces; a positive integer in the Fano
/// Calabi-Yau case.
pub fn calabi_yau_index(p: &InvertiblePolynomial) -> Result<Rat> {
    Ok(p.matrix().rational_inverse()?.entry_sum())
}

pub fn is_calabi_yau(p: &InvertiblePolynomial) -> Result<bool> {
    Ok(calabi_yau_index(p)? == Rat::one())
}

pub fn is_fano_calabi_yau(p: &InvertiblePolynomial) -> Result<bool> {
    let idx = calabi_yau_index(p)?;
    Ok(idx.is_integer() && idx.is_positive())
}

/// One atomic summand of an invertible polynomial. Variable indices are the
/// ambient indices; chain/loop lists are in arrow order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AtomicPart {
    Fermat { var: usize, exponent: Int },
    Chain { vars: Vec<usize>, exponents: Vec<Int> },
    Loop { vars: Vec<usize>, exponents: Vec<Int> },
}

impl AtomicPart {
    pub fn vars(&self) -> Vec<usize> {
        match self {
            AtomicPart::Fermat { var, .. } => vec![*var],
            AtomicPart::Chain { vars, .. } | AtomicPart::Loop { vars, .. } => vars.clone(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            AtomicPart::Fermat { var, exponent } => format!("Fermat(x{var}; {exponent})"),
            AtomicPart::Chain { vars, exponents } => format!(
                "Chain({}; {})",
                vars.iter().map(|v| format!("x{v}")).collect::<Vec<_>>().join(","),
                exponents.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
            ),
            AtomicPart::Loop { vars, exponents } => format!(
                "Loop({}; {})",
                vars.iter().map(|v| format!("x{v}")).collect::<Vec<_>>().join(","),
                exponents.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
            ),
        }
    }
}

/// Decomposition into Fermat/Chain/Loop parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomicDecomposition {
    pub parts: Vec<AtomicPart>,
    /// `row_of_vertex[v]` = index of the monomial row belonging to variable v.
    pub row_of_vertex: Vec<usize>,
    /// `arrow[v]` = target vertex of v's outgoing arrow, if any.
    pub arrow: Vec<Option<usize>>,
    /// diagonal exponent of each vertex
    pub vertex_exponent: Vec<Int>,
}

impl AtomicDecomposition {
    /// Reassemble the monomial rows (for the permutation-invariance check).
    pub fn monomial_rows(&self, n: usize) -> Vec<Vec<Int>> {
        let mut rows = vec![vec![Int::zero(); n]; n];
        for v in 0..n {
            let r = self.row_of_vertex[v];
            rows[r][v] = self.vertex_exponent[v].clone();
            if let Some(w) = self.arrow[v] {
                rows[r][w] += Int::one();
            }
        }
        rows
    }
}

/// Classify an invertible polynomial into atomic parts.
///
/// Succeeds exactly when every row has at most two nonzero entries, the
/// off-diagonal exponents are 1, and the arrow digraph is a disjoint union
/// of simple chains and simple cycles. Isolated Fermat vertices need
/// exponent >= 2; chain and loop entries need exponent >= 1.
pub fn classify(p: &InvertiblePolynomial) -> Result<AtomicDecomposition> {
    let n = p.n_vars();
    let a = p.matrix();
    // candidate vertices for each row
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(n);
    for r in 0..n {
        let support: Vec<usize> = (0..n).filter(|&c| !a[(r, c)].is_zero()).collect();
        match support.len() {
            0 => {
                return Err(Error::NotInvertibleShape(format!(
                    "monomial {r} is constant"
                )))
            }
            1 => candidates.push(vec![support[0]]),
            2 => {
                let (v, w) = (support[0], support[1]);
                let mut cand = Vec::new();
                if a[(r, w)].is_one() {
                    cand.push(v);
                }
                if a[(r, v)].is_one() {
                    cand.push(w);
                }
                if cand.is_empty() {
                    return Err(Error::NotInvertibleShape(format!(
                        "monomial {r} = x{v}^{}*x{w}^{} is not of the form x_i^a*x_j",
                        a[(r, v)],
                        a[(r, w)]
                    )));
                }
                candidates.push(cand);
            }
            _ => {
                return Err(Error::NotInvertibleShape(format!(
                    "monomial {r} involves {} variables",
                    support.len()
                )))
            }
        }
    }
    // perfect matching rows -> vertices (Kuhn's algorithm)
    let mut row_of_vertex: Vec<Option<usize>> = vec![None; n];
    fn augment(
        r: usize,
        candidates: &[Vec<usize>],
        row_of_vertex: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &v in &candidates[r] {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            if row_of_vertex[v].is_none()
                || augment(row_of_vertex[v].unwrap(), candidates, row_of_vertex, visited)
            {
                row_of_vertex[v] = Some(r);
                return true;
            }
        }
        false
    }
    for r in 0..n {
        let mut visited = vec![false; n];
        if !augment(r, &candidates, &mut row_of_vertex, &mut visited) {
            return Err(Error::NotInvertibleShape(format!(
                "no assignment of monomials to vertices covers monomial {r}"
            )));
        }
    }
    let row_of_vertex: Vec<usize> = row_of_vertex.into_iter().map(|o| o.unwrap()).collect();
    // arrows and exponents
    let mut arrow: Vec<Option<usize>> = vec![None; n];
    let mut vertex_exponent: Vec<Int> = vec![Int::zero(); n];
    let mut indegree = vec![0usize; n];
    for v in 0..n {
        let r = row_of_vertex[v];
        vertex_exponent[v] = a[(r, v)].clone();
        if let Some(w) = (0..n).find(|&c| c != v && !a[(r, c)].is_zero()) {
            arrow[v] = Some(w);
            indegree[w] += 1;
        }
    }
    if let Some(w) = (0..n).find(|&w| indegree[w] > 1) {
        return Err(Error::NotInvertibleShape(format!(
            "vertex x{w} has {} incoming arrows",
            indegree[w]
        )));
    }
    // walk chains from heads, then cycles
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for head in 0..n {
        if indegree[head] > 0 || seen[head] {
            continue;
        }
        if arrow[head].is_none() {
            // isolated vertex: Fermat
            if vertex_exponent[head] < Int::from(2) {
                return Err(Error::NotInvertibleShape(format!(
                    "Fermat part x{head}^{} needs exponent >= 2",
                    vertex_exponent[head]
                )));
            }
            seen[head] = true;
            parts.push(AtomicPart::Fermat {
                var: head,
                exponent: vertex_exponent[head].clone(),
            });
            continue;
        }
        let mut vars = vec![head];
        seen[head] = true;
        let mut cur = head;
        while let Some(next) = arrow[cur] {
            if seen[next] {
                return Err(Error::NotInvertibleShape(format!(
                    "arrow from x{cur} re-enters x{next}"
                )));
            }
            seen[next] = true;
            vars.push(next);
            cur = next;
        }
        let exponents = vars.iter().map(|&v| vertex_exponent[v].clone()).collect();
        parts.push(AtomicPart::Chain { vars, exponents });
    }
    for start in 0..n {
        if seen[start] {
            continue;
        }
        // remaining components are cycles; start each at its smallest vertex
        let mut cycle = vec![start];
        seen[start] = true;
        let mut cur = arrow[start].expect("cycle vertex has an outgoing arrow");
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            cur = arrow[cur].expect("cycle vertex has an outgoing arrow");
        }
        let exponents = cycle.iter().map(|&v| vertex_exponent[v].clone()).collect();
        parts.push(AtomicPart::Loop {
            vars: cycle,
            exponents,
        });
    }
    parts.sort_by_key(|p| p.vars().into_iter().min().unwrap());
    Ok(AtomicDecomposition {
        parts,
        row_of_vertex,
        arrow,
        vertex_exponent,
    })
}

/// Gorenstein test for the ambient `P(q) / (G/J)`: every `q_i` divides `d`
/// and the Fermat monomial `x_i^{d/q_i}` is `G`-invariant. This is the
/// vertex criterion for reflexivity of the anticanonical polytope.
pub fn is_gorenstein(w: &WeightSystem, group: &DiagonalGroup) -> bool {
    let n = w.len();
    for i in 0..n {
        let (quot, rem) = num_integer::Integer::div_rem(&w.d, &w.q[i]);
        if !rem.is_zero() {
            return false;
        }
        let mut s = vec![Int::zero(); n];
        s[i] = quot;
        if !group.is_invariant_exponent(&s) {
            return false;
        }
    }
    true
}

/// Directed Kreuzer-Skarke diagram: one node per variable labeled by its
/// diagonal exponent, one edge per off-diagonal entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KsDiagram {
    pub labels: Vec<Int>,
    pub edges: Vec<(usize, usize)>,
}

impl KsDiagram {
    pub fn reversed(&self) -> KsDiagram {
        let mut edges: Vec<(usize, usize)> = self.edges.iter().map(|&(a, b)| (b, a)).collect();
        edges.sort();
        KsDiagram {
            labels: self.labels.clone(),
            edges,
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ks {\n");
        for (v, label) in self.labels.iter().enumerate() {
            out.push_str(&format!("  x{v} [label=\"x{v}^{label}\"];\n"));
        }
        for (a, b) in &self.edges {
            out.push_str(&format!("  x{a} -> x{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Diagram of a classifiable polynomial. Reversing every arrow gives the
/// diagram of the transposed polynomial.
pub fn diagram(p: &InvertiblePolynomial) -> Result<KsDiagram> {
    let dec = classify(p)?;
    let n = p.n_vars();
    let mut edges = Vec::new();
    for v in 0..n {
        if let Some(w) = dec.arrow[v] {
            edges.push((v, w));
        }
    }
    edges.sort();
    Ok(KsDiagram {
        labels: dec.vertex_exponent.clone(),
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::{int, rat};

    pub(crate) fn quintic() -> InvertiblePolynomial {
        InvertiblePolynomial::parse("x0^5+x1^5+x2^5+x3^5+x4^5").unwrap()
    }

    pub(crate) fn cubic_chain() -> InvertiblePolynomial {
        InvertiblePolynomial::parse("x0^3+x1^2*x2+x2^3").unwrap()
    }

    pub(crate) fn nongor_chain() -> InvertiblePolynomial {
        InvertiblePolynomial::parse("x0^4*x1+x1^4*x2+x2^4*x3+x3^4*x4+x4^5").unwrap()
    }

    #[test]
    fn parse_builds_rows_in_source_order() {
        let p = quintic();
        assert_eq!(p.matrix(), &IntMatrix::diagonal(&[5, 5, 5, 5, 5]));
        let p = cubic_chain();
        assert_eq!(
            p.matrix(),
            &IntMatrix::from_i64_rows(&[&[3, 0, 0], &[0, 2, 1], &[0, 0, 3]])
        );
    }

    #[test]
    fn parse_vs_validate_separation() {
        // 2 monomials, 2 variables: accepted at parse, rejected by classify
        let p = InvertiblePolynomial::parse("x0^2+x1").unwrap();
        assert_eq!(
            p.matrix(),
            &IntMatrix::from_i64_rows(&[&[2, 0], &[0, 1]])
        );
        assert!(matches!(classify(&p), Err(Error::NotInvertibleShape(_))));
        // 3 monomials in 2 variables is a shape error
        assert!(matches!(
            InvertiblePolynomial::parse("x0^2+x1^2+x0*x1"),
            Err(Error::Shape(_))
        ));
        // zero coefficient rejected unless explicitly allowed
        assert!(InvertiblePolynomial::parse("0*x0^2+x1^2").is_err());
        assert!(InvertiblePolynomial::parse_with_flags("0*x0^2+x1^2", true).is_ok());
    }

    #[test]
    fn classify_quintic_is_five_fermats() {
        let dec = classify(&quintic()).unwrap();
        assert_eq!(dec.parts.len(), 5);
        for (i, part) in dec.parts.iter().enumerate() {
            assert_eq!(
                part,
                &AtomicPart::Fermat {
                    var: i,
                    exponent: int(5)
                }
            );
        }
    }

    #[test]
    fn classify_nongor_is_one_chain() {
        let dec = classify(&nongor_chain()).unwrap();
        assert_eq!(
            dec.parts,
            vec![AtomicPart::Chain {
                vars: vec![0, 1, 2, 3, 4],
                exponents: vec![int(4), int(4), int(4), int(4), int(5)],
            }]
        );
    }

    #[test]
    fn classify_cubic_is_fermat_plus_chain() {
        let dec = classify(&cubic_chain()).unwrap();
        assert_eq!(
            dec.parts,
            vec![
                AtomicPart::Fermat {
                    var: 0,
                    exponent: int(3)
                },
                AtomicPart::Chain {
                    vars: vec![1, 2],
                    exponents: vec![int(2), int(3)],
                },
            ]
        );
    }

    #[test]
    fn classify_handles_shuffled_rows_and_loops() {
        let p = InvertiblePolynomial::parse("x1^2*x2+x2^3+x0^3").unwrap();
        let dec = classify(&p).unwrap();
        assert_eq!(dec.parts.len(), 2);
        // reassembled monomials match A up to row permutation
        let mut rows = dec.monomial_rows(3);
        let mut want: Vec<Vec<Int>> = (0..3).map(|r| p.matrix().row(r)).collect();
        rows.sort();
        want.sort();
        assert_eq!(rows, want);

        let p = InvertiblePolynomial::parse("x0^3*x1+x1^4*x2+x2^2*x0").unwrap();
        let dec = classify(&p).unwrap();
        assert_eq!(
            dec.parts,
            vec![AtomicPart::Loop {
                vars: vec![0, 1, 2],
                exponents: vec![int(3), int(4), int(2)],
            }]
        );
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(quintic().transpose(), quintic());
        let t = nongor_chain().transpose();
        let want = InvertiblePolynomial::parse("x0^4+x0*x1^4+x1*x2^4+x2*x3^4+x3*x4^5").unwrap();
        assert_eq!(t.matrix(), want.matrix());
        // involution
        let p = cubic_chain();
        assert_eq!(p.transpose().transpose(), p);
    }

    #[test]
    fn calabi_yau_indices() {
        assert_eq!(calabi_yau_index(&quintic()).unwrap(), Rat::one());
        assert_eq!(calabi_yau_index(&cubic_chain()).unwrap(), Rat::one());
        let single = InvertiblePolynomial::parse("x0^2").unwrap();
        assert_eq!(calabi_yau_index(&single).unwrap(), rat(1, 2));
        assert!(!is_calabi_yau(&single).unwrap());
        assert!(!is_fano_calabi_yau(&single).unwrap());
    }

    #[test]
    fn display_roundtrip() {
        for text in [
            "x0^5+x1^5+x2^5+x3^5+x4^5",
            "x0^3+x1^2*x2+x2^3",
            "2*x0^3+1/2*x1^2*x2+x2^3",
        ] {
            let p = InvertiblePolynomial::parse(text).unwrap();
            assert_eq!(p.to_text(), text);
        }
    }

    #[test]
    fn gorenstein_agrees_with_the_reflexivity_oracle() {
        use crate::symmetry::{j_group, DiagonalGroup};
        use crate::weights::WeightSystem;
        // independent oracle: the anticanonical polytope is reflexive iff
        // every vertex candidate (d/q_i) e_i is an integral G-invariant
        // lattice point
        fn oracle(w: &WeightSystem, g: &DiagonalGroup) -> bool {
            (0..w.len()).all(|i| {
                let d = w.d.clone();
                let q = w.q[i].clone();
                if (&d % &q) != Int::zero() {
                    return false;
                }
                let mut s = vec![Int::zero(); w.len()];
                s[i] = &d / &q;
                crate::symmetry::is_invariant(&s, g)
            })
        }
        // all weight tuples with n <= 3, entries <= d <= 12, gcd 1
        let mut tested = 0;
        for n in 2..=4usize {
            for d in 2..=12i64 {
                let mut q = vec![1i64; n];
                loop {
                    let gcd = q.iter().fold(0i64, |a, &b| num_integer::gcd(a, b));
                    if gcd == 1 && q.iter().sum::<i64>() <= 3 * d {
                        let w = WeightSystem::new(
                            q.iter().map(|&x| Int::from(x)).collect(),
                            Int::from(d),
                        );
                        let trivial = DiagonalGroup::trivial(n);
                        assert_eq!(is_gorenstein(&w, &trivial), oracle(&w, &trivial));
                        // when the Fermat polynomial exists, test against J
                        if q.iter().all(|&x| d % x == 0) {
                            let exps: Vec<i64> = q.iter().map(|&x| d / x).collect();
                            if exps.iter().all(|&e| e >= 2) {
                                let a = IntMatrix::diagonal(&exps);
                                let j = j_group(&a).unwrap();
                                assert_eq!(is_gorenstein(&w, &j), oracle(&w, &j));
                            }
                        }
                        tested += 1;
                    }
                    // next tuple with entries in 1..=d
                    let mut i = 0;
                    loop {
                        q[i] += 1;
                        if q[i] <= d {
                            break;
                        }
                        q[i] = 1;
                        i += 1;
                        if i == n {
                            break;
                        }
                    }
                    if i == n {
                        break;
                    }
                }
            }
        }
        assert!(tested > 1000, "swept {tested} weight systems");
    }

    #[test]
    fn diagram_reversal_matches_transpose() {
        let p = nongor_chain();
        let d = diagram(&p).unwrap();
        assert_eq!(d.edges, vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        let dt = diagram(&p.transpose()).unwrap();
        assert_eq!(d.reversed(), dt);
        // quintic: five isolated labeled nodes
        let d = diagram(&quintic()).unwrap();
        assert!(d.edges.is_empty());
        assert_eq!(d.labels, vec![int(5); 5]);
        assert!(d.to_dot().contains("x0 [label=\"x0^5\"]"));
    }
}
