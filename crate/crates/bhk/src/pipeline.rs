//! End-to-end certification of derived equivalences across cleaves.
//!
//! For each cleave the pipeline builds the point configuration, the two
//! triangulations with their irrelevant ideals, and the superpotential,
//! then certifies the radical containments `I ⊆ √(∂w, J)` on both sides:
//! once through the structured derivative-propagation fast path (when its
//! hypotheses hold) and always through the Rabinowitsch Gröbner oracle.
//! A report chains the per-cleave certificates between two endpoints.

use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::cleave::{connect, Cleave, CleaveDirection};
use crate::error::{Error, Result};
use crate::groebner::GroebnerConfig;
use crate::invertible::{is_gorenstein, InvertiblePolynomial};
use crate::mat::{AbelianQuotient, Int, Rat};
use crate::membership::{
    containment_radical, propagate, replay_direct, replay_rabinowitsch, replay_structured,
    MembershipCertificate, PolyIdeal, PropagationStep,
};
use crate::mpoly::{Monomial, Poly, Ring, RingContext};
use crate::symmetry::{dual_group, group_quotient_structure, j_group, sl_group, DiagonalGroup};
use crate::toric::{
    build_nu, irrelevant_ideal, restrict_to_chart, subideal_j, superpotential,
    triangulation_pair, verify_triangulation, ChartSide, MonomialIdeal, PointConfig,
    Triangulation, TriangulationCheck,
};
use crate::weights::{positive_weight_solve, WeightSystem};

/// Tunables threaded through the pipeline.
#[derive(Clone, Debug, Default)]
pub struct PipelineConfig {
    pub groebner: GroebnerConfig,
}

/// Mirror-side data for one polynomial and admissible group.
#[derive(Clone, Debug)]
pub struct MirrorData {
    pub transposed: InvertiblePolynomial,
    pub mirror_weights: WeightSystem,
    pub dual: DiagonalGroup,
    /// Invariant factors of `G^T / J(F_{A^T})`; the mirror ambient is the
    /// weighted projective space of `mirror_weights` modulo this quotient.
    pub quotient_by_j: AbelianQuotient,
}

impl MirrorData {
    pub fn ambient_text(&self) -> String {
        if self.quotient_by_j.is_trivial() {
            self.mirror_weights.describe()
        } else {
            format!(
                "{}/({})",
                self.mirror_weights.describe(),
                self.quotient_by_j.describe()
            )
        }
    }
}

/// BHK mirror of `(F_A, G)`: the transposed polynomial, the dual group,
/// and the mirror weight system.
pub fn bhk_mirror(p: &InvertiblePolynomial, group: &DiagonalGroup) -> Result<MirrorData> {
    let transposed = p.transpose();
    let mirror_weights = positive_weight_solve(transposed.matrix())?;
    let dual = dual_group(p.matrix(), group)?;
    let j_t = j_group(transposed.matrix())?;
    if !j_t.is_subgroup_of(&dual) {
        return Err(Error::NotSubgroup(
            "J(F_{A^T}) is not contained in the dual group; G must lie in SL(F_A)".into(),
        ));
    }
    let quotient_by_j = group_quotient_structure(&dual, &j_t)?;
    Ok(MirrorData {
        transposed,
        mirror_weights,
        dual,
        quotient_by_j,
    })
}

/// Result of one radical-containment check `I ⊆ √(∂w, J)`.
#[derive(Clone, Debug)]
pub struct ContainmentResult {
    pub holds: bool,
    /// Oracle certificates, one per minimal generator of `I`.
    pub certificates: Vec<MembershipCertificate>,
    /// Structured fast-path certificate, when its hypotheses applied.
    pub fast_path: Option<MembershipCertificate>,
    /// Sound fast path: present implies the oracle agreed.
    pub fast_path_agrees: bool,
}

/// Everything certified about one cleave.
#[derive(Clone, Debug)]
pub struct CleaveCertificate {
    pub cleave: Cleave,
    pub nu: PointConfig,
    pub t: Triangulation,
    pub t_prime: Triangulation,
    pub t_check: TriangulationCheck,
    pub t_prime_check: TriangulationCheck,
    pub i_p: MonomialIdeal,
    pub j_p: MonomialIdeal,
    pub i_q: MonomialIdeal,
    pub j_q: MonomialIdeal,
    pub w: Poly,
    pub w_p: Poly,
    pub w_q: Poly,
    pub containment_p: ContainmentResult,
    pub containment_q: ContainmentResult,
    pub mirror_a: MirrorData,
    pub mirror_a_prime: MirrorData,
    /// `b_i = 0` for some `i` in the index set: the theorem's hypothesis
    /// fails, certification proceeds on the oracle alone.
    pub hypothesis_warnings: Vec<String>,
    pub certified: bool,
}

/// Overall status of an equivalence report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivalenceStatus {
    Equivalent,
    NotCertified,
}

impl EquivalenceStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            EquivalenceStatus::Equivalent => "equivalent",
            EquivalenceStatus::NotCertified => "not-certified",
        }
    }
}

/// Chained certificates between two endpoints.
#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub endpoint_a: InvertiblePolynomial,
    pub endpoint_b: InvertiblePolynomial,
    pub group: DiagonalGroup,
    pub b: Vec<Rat>,
    pub c: Rat,
    pub links: Vec<CleaveCertificate>,
    pub status: EquivalenceStatus,
    pub notes: Vec<String>,
}

fn check_admissible(cl: &Cleave, group: &DiagonalGroup) -> Result<()> {
    let j_a = j_group(&cl.a)?;
    let j_b = j_group(&cl.a_prime)?;
    if j_a != j_b {
        return Err(Error::JMismatch(
            "the exponential grading operators of the two sides differ".into(),
        ));
    }
    if !j_a.is_subgroup_of(group) {
        return Err(Error::NotSubgroup("J is not contained in G".into()));
    }
    let sl = sl_group(&cl.a)?.intersect(&sl_group(&cl.a_prime)?);
    if !group.is_subgroup_of(&sl) {
        return Err(Error::NotSubgroup(
            "G is not contained in SL(F_A) ∩ SL(F_A')".into(),
        ));
    }
    Ok(())
}

/// Point index (= ring variable index) of the arrow-carrying row `k`.
fn arrow_point(cl: &Cleave, nu: &PointConfig) -> usize {
    match cl.direction {
        CleaveDirection::ArrowRemoved => cl.k,
        CleaveDirection::ArrowAdded => nu.cleaved_index(),
    }
}

/// Fast-path certificate for one side of a cleave, following the
/// derivative-propagation schedule: seed with `y_k · ∂_{y_k} w`, walk the
/// new chain, close with `∂_{y_k} w`. Returns `None` whenever any step's
/// hypotheses fail (zero coefficients, unit exponents, uncovered
/// generators); the Gröbner oracle then decides alone.
pub fn structured_certificate(
    cl: &Cleave,
    nu: &PointConfig,
    w: &Poly,
    j_side: &MonomialIdeal,
    i_side: &MonomialIdeal,
) -> Option<MembershipCertificate> {
    if i_side.subideal_of(j_side) {
        // nothing beyond the subideal: an empty walk certifies it
        return Some(MembershipCertificate::StructuredPropagation {
            initial_known: j_side
                .generators
                .iter()
                .map(|m| m.support_monomial())
                .collect(),
            steps: Vec::new(),
        });
    }
    if cl.index_set.is_empty() {
        return None;
    }
    let karr = arrow_point(cl, nu);
    let mut schedule: Vec<(usize, Option<usize>)> = vec![(karr, Some(karr))];
    for &v in &cl.index_set[..cl.index_set.len() - 1] {
        schedule.push((v, None));
    }
    schedule.push((karr, None));
    let outcome = propagate(w, &j_side.generators, &schedule)?;
    let u_idx = nu.interior_index();
    let n_pts = nu.n_points();
    let mut targets: Vec<Monomial> = cl
        .index_set
        .iter()
        .map(|&v| {
            let mut e = vec![0u32; n_pts];
            e[v] = 1;
            e[u_idx] = 1;
            Monomial(e)
        })
        .collect();
    targets.extend(i_side.generators.iter().cloned());
    match &outcome.certificate {
        MembershipCertificate::StructuredPropagation {
            initial_known,
            steps,
        } => {
            if replay_structured(w, &j_side.generators, initial_known, steps, &targets) {
                Some(outcome.certificate.clone())
            } else {
                None
            }
        }
        _ => None,
    }
}

fn containment_side(
    cl: &Cleave,
    nu: &PointConfig,
    w: &Poly,
    j_side: &MonomialIdeal,
    i_side: &MonomialIdeal,
    config: &PipelineConfig,
) -> Result<ContainmentResult> {
    let ring = w.ring().clone();
    let mut gens: Vec<Poly> = (0..ring.n_vars())
        .map(|v| w.partial_derivative(v))
        .filter(|p| !p.is_zero())
        .collect();
    for m in &j_side.generators {
        gens.push(Poly::term(&ring, m.clone(), Rat::one()));
    }
    let ideal = PolyIdeal::new(ring, gens);
    let (holds, certificates) =
        containment_radical(&i_side.generators, &ideal, &config.groebner)?;
    let fast_path = structured_certificate(cl, nu, w, j_side, i_side);
    let fast_path_agrees = fast_path.is_none() || holds;
    Ok(ContainmentResult {
        holds,
        certificates,
        fast_path,
        fast_path_agrees,
    })
}

/// Certify one cleave: triangulations, ideals, superpotential, both
/// radical containments, and the mirror data of both sides.
pub fn verify_cleave(
    cl: &Cleave,
    group: &DiagonalGroup,
    b: &[Rat],
    c: &Rat,
    config: &PipelineConfig,
) -> Result<CleaveCertificate> {
    check_admissible(cl, group)?;
    if b.len() != cl.n_vars() {
        return Err(Error::DimensionMismatch(format!(
            "{} pencil coefficients for {} variables",
            b.len(),
            cl.n_vars()
        )));
    }
    let mut hypothesis_warnings = Vec::new();
    for &i in &cl.index_set {
        if b[i].is_zero() {
            hypothesis_warnings.push(format!(
                "b{i} = 0 lies in the index set; the sufficient hypothesis fails"
            ));
        }
    }
    let nu = build_nu(cl, group)?;
    let (t, t_prime) = triangulation_pair(&nu)?;
    let t_check = verify_triangulation(&nu, &t);
    let t_prime_check = verify_triangulation(&nu, &t_prime);
    let i_p = irrelevant_ideal(&nu, &t);
    let j_p = subideal_j(&nu, &t);
    let i_q = irrelevant_ideal(&nu, &t_prime);
    let j_q = subideal_j(&nu, &t_prime);
    let w = superpotential(&nu, b, c)?;
    let w_p = restrict_to_chart(&w, &nu, ChartSide::Xi);
    let w_q = restrict_to_chart(&w, &nu, ChartSide::XiPrime);
    let containment_p = containment_side(cl, &nu, &w, &j_p, &i_p, config)?;
    let containment_q = containment_side(cl, &nu, &w, &j_q, &i_q, config)?;
    let poly_a = InvertiblePolynomial::new(cl.a.clone(), b.to_vec(), true)?;
    let poly_b = InvertiblePolynomial::new(cl.a_prime.clone(), b.to_vec(), true)?;
    let mirror_a = bhk_mirror(&poly_a, group)?;
    let mirror_a_prime = bhk_mirror(&poly_b, group)?;
    let certified = containment_p.holds
        && containment_q.holds
        && t_check.is_valid()
        && t_prime_check.is_valid();
    Ok(CleaveCertificate {
        cleave: cl.clone(),
        nu,
        t,
        t_prime,
        t_check,
        t_prime_check,
        i_p,
        j_p,
        i_q,
        j_q,
        w,
        w_p,
        w_q,
        containment_p,
        containment_q,
        mirror_a,
        mirror_a_prime,
        hypothesis_warnings,
        certified,
    })
}

/// Certify derived equivalence of the BHK mirror pencils of two
/// polynomials through a cleave path via the Fermat polynomial.
pub fn verify_equivalence(
    p: &InvertiblePolynomial,
    p_prime: &InvertiblePolynomial,
    group: &DiagonalGroup,
    b: &[Rat],
    c: &Rat,
    config: &PipelineConfig,
) -> Result<EquivalenceReport> {
    let w = positive_weight_solve(p.matrix())?;
    if !is_gorenstein(&w, group) {
        return Err(Error::NotGorenstein(format!(
            "the ambient {} modulo the group is not Gorenstein",
            w.describe()
        )));
    }
    let path = connect(p, p_prime, group)?;
    let mut links = Vec::with_capacity(path.len());
    for cl in &path {
        links.push(verify_cleave(cl, group, b, c, config)?);
    }
    let status = if links.iter().all(|l| l.certified) {
        EquivalenceStatus::Equivalent
    } else {
        EquivalenceStatus::NotCertified
    };
    let mut notes = Vec::new();
    if status == EquivalenceStatus::Equivalent {
        notes.push(
            "The certified mirror pencils are also birational: both sit as open \
             substacks of the same irreducible component of the critical locus."
                .to_string(),
        );
    }
    Ok(EquivalenceReport {
        endpoint_a: p.clone(),
        endpoint_b: p_prime.clone(),
        group: group.clone(),
        b: b.to_vec(),
        c: c.clone(),
        links,
        status,
        notes,
    })
}

// --- JSON serialization -------------------------------------------------

fn int_json(v: &Int) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn rat_json(r: &Rat) -> Value {
    if r.is_integer() {
        json!(r.numer().to_string())
    } else {
        json!(format!("{}/{}", r.numer(), r.denom()))
    }
}

fn rat_from_json(v: &Value) -> Result<Rat> {
    let s = v
        .as_str()
        .ok_or_else(|| Error::Parse {
            position: 0,
            message: "expected a rational string".into(),
        })?;
    parse_rat(s)
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let parse_int = |t: &str| -> Result<Int> {
        t.trim().parse().map_err(|_| Error::Parse {
            position: 0,
            message: format!("invalid rational `{s}`"),
        })
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Parse {
                    position: 0,
                    message: "zero denominator".into(),
                });
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

pub fn poly_json(p: &Poly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            json!({
                "c": rat_json(c),
                "e": m.0.clone(),
            })
        })
        .collect();
    json!({
        "vars": p.ring().var_names(),
        "text": p.to_text(),
        "terms": terms,
    })
}

pub fn poly_from_json(v: &Value) -> Result<Poly> {
    let obj = v.as_object().ok_or_else(|| Error::Parse {
        position: 0,
        message: "expected a polynomial object".into(),
    })?;
    let vars: Vec<String> = obj
        .get("vars")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::Parse {
            position: 0,
            message: "polynomial object lacks vars".into(),
        })?
        .iter()
        .map(|x| x.as_str().unwrap_or_default().to_string())
        .collect();
    let ring = RingContext::new(vars);
    poly_from_json_in(&ring, v)
}

pub fn poly_from_json_in(ring: &Ring, v: &Value) -> Result<Poly> {
    let terms = v
        .get("terms")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::Parse {
            position: 0,
            message: "polynomial object lacks terms".into(),
        })?;
    let mut p = Poly::zero(ring);
    for t in terms {
        let c = rat_from_json(t.get("c").ok_or_else(|| Error::Parse {
            position: 0,
            message: "term lacks coefficient".into(),
        })?)?;
        let e: Vec<u32> = t
            .get("e")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: "term lacks exponents".into(),
            })?
            .iter()
            .map(|x| x.as_u64().unwrap_or(0) as u32)
            .collect();
        if e.len() != ring.n_vars() {
            return Err(Error::Shape("exponent vector length mismatch".into()));
        }
        p.add_term(Monomial(e), c);
    }
    Ok(p)
}

fn monomial_ideal_json(mi: &MonomialIdeal) -> Value {
    let gens: Vec<Value> = mi
        .generators
        .iter()
        .map(|m| json!(m.0.clone()))
        .collect();
    json!({
        "generators": gens,
        "text": mi.generators_text(),
    })
}

fn certificate_json(cert: &MembershipCertificate) -> Value {
    match cert {
        MembershipCertificate::DirectReduction {
            cofactors,
            remainder,
        } => json!({
            "kind": "direct-reduction",
            "cofactors": cofactors.iter().map(poly_json).collect::<Vec<_>>(),
            "remainder": poly_json(remainder),
        }),
        MembershipCertificate::Rabinowitsch {
            cofactors,
            aux_cofactor,
        } => json!({
            "kind": "rabinowitsch",
            "cofactors": cofactors.iter().map(poly_json).collect::<Vec<_>>(),
            "aux_cofactor": poly_json(aux_cofactor),
        }),
        MembershipCertificate::StructuredPropagation {
            initial_known,
            steps,
        } => json!({
            "kind": "structured-propagation",
            "initial_known": initial_known.iter().map(|m| json!(m.0.clone())).collect::<Vec<_>>(),
            "steps": steps
                .iter()
                .map(|s| json!({
                    "variable": s.variable,
                    "multiplier": s.multiplier,
                    "concluded": s.concluded.0.clone(),
                }))
                .collect::<Vec<_>>(),
        }),
    }
}

pub fn certificate_from_json(v: &Value) -> Result<MembershipCertificate> {
    let kind = v
        .get("kind")
        .and_then(|x| x.as_str())
        .ok_or_else(|| Error::Parse {
            position: 0,
            message: "certificate lacks kind".into(),
        })?;
    let polys = |key: &str| -> Result<Vec<Poly>> {
        v.get(key)
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("certificate lacks {key}"),
            })?
            .iter()
            .map(poly_from_json)
            .collect()
    };
    let monos = |key: &str| -> Result<Vec<Monomial>> {
        Ok(v.get(key)
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("certificate lacks {key}"),
            })?
            .iter()
            .map(|m| {
                Monomial(
                    m.as_array()
                        .map(|a| a.iter().map(|x| x.as_u64().unwrap_or(0) as u32).collect())
                        .unwrap_or_default(),
                )
            })
            .collect())
    };
    match kind {
        "direct-reduction" => Ok(MembershipCertificate::DirectReduction {
            cofactors: polys("cofactors")?,
            remainder: poly_from_json(v.get("remainder").ok_or_else(|| Error::Parse {
                position: 0,
                message: "certificate lacks remainder".into(),
            })?)?,
        }),
        "rabinowitsch" => Ok(MembershipCertificate::Rabinowitsch {
            cofactors: polys("cofactors")?,
            aux_cofactor: poly_from_json(v.get("aux_cofactor").ok_or_else(|| {
                Error::Parse {
                    position: 0,
                    message: "certificate lacks aux_cofactor".into(),
                }
            })?)?,
        }),
        "structured-propagation" => {
            let steps = v
                .get("steps")
                .and_then(|x| x.as_array())
                .ok_or_else(|| Error::Parse {
                    position: 0,
                    message: "certificate lacks steps".into(),
                })?
                .iter()
                .map(|s| PropagationStep {
                    variable: s.get("variable").and_then(|x| x.as_u64()).unwrap_or(0) as usize,
                    multiplier: s
                        .get("multiplier")
                        .and_then(|x| x.as_u64())
                        .map(|x| x as usize),
                    concluded: Monomial(
                        s.get("concluded")
                            .and_then(|x| x.as_array())
                            .map(|a| a.iter().map(|x| x.as_u64().unwrap_or(0) as u32).collect())
                            .unwrap_or_default(),
                    ),
                })
                .collect();
            Ok(MembershipCertificate::StructuredPropagation {
                initial_known: monos("initial_known")?,
                steps,
            })
        }
        other => Err(Error::Parse {
            position: 0,
            message: format!("unknown certificate kind `{other}`"),
        }),
    }
}

fn group_json(g: &DiagonalGroup) -> Value {
    json!({
        "order": int_json(g.order()),
        "generators": g.generators().iter().map(|s| s.to_text()).collect::<Vec<_>>(),
    })
}

fn quotient_json(q: &AbelianQuotient) -> Value {
    json!({
        "invariant_factors": q.invariant_factors.iter().map(int_json).collect::<Vec<_>>(),
        "order": int_json(&q.order),
        "text": q.describe(),
    })
}

fn weights_json(w: &WeightSystem) -> Value {
    json!({
        "q": w.q.iter().map(int_json).collect::<Vec<_>>(),
        "d": int_json(&w.d),
    })
}

fn mirror_json(m: &MirrorData) -> Value {
    json!({
        "transposed": m.transposed.to_text(),
        "weights": weights_json(&m.mirror_weights),
        "dual_group": group_json(&m.dual),
        "quotient_by_j": quotient_json(&m.quotient_by_j),
        "ambient": m.ambient_text(),
    })
}

fn containment_json(c: &ContainmentResult) -> Value {
    json!({
        "holds": c.holds,
        "fast_path": c.fast_path.as_ref().map(certificate_json),
        "fast_path_agrees": c.fast_path_agrees,
        "certificates": c.certificates.iter().map(certificate_json).collect::<Vec<_>>(),
    })
}

fn triangulation_json(t: &Triangulation) -> Value {
    json!(t.maximal_simplices)
}

pub fn point_config_json(nu: &PointConfig) -> Value {
    let points: Vec<Value> = nu
        .points
        .iter()
        .map(|p| json!(p.iter().map(int_json).collect::<Vec<_>>()))
        .collect();
    json!({
        "points": points,
        "names": nu.names,
        "weights": weights_json(&nu.weights),
    })
}

pub fn link_json(link: &CleaveCertificate) -> Value {
    json!({
        "k": link.cleave.k,
        "direction": link.cleave.direction.as_str(),
        "index_set": link.cleave.index_set,
        "matrix_a": matrix_rows_json(&link.cleave.a),
        "matrix_a_prime": matrix_rows_json(&link.cleave.a_prime),
        "nu": point_config_json(&link.nu),
        "triangulation_t": triangulation_json(&link.t),
        "triangulation_t_prime": triangulation_json(&link.t_prime),
        "triangulations_valid": link.t_check.is_valid() && link.t_prime_check.is_valid(),
        "ideal_i_p": monomial_ideal_json(&link.i_p),
        "ideal_j_p": monomial_ideal_json(&link.j_p),
        "ideal_i_q": monomial_ideal_json(&link.i_q),
        "ideal_j_q": monomial_ideal_json(&link.j_q),
        "superpotential": poly_json(&link.w),
        "w_p": poly_json(&link.w_p),
        "w_q": poly_json(&link.w_q),
        "containment_p": containment_json(&link.containment_p),
        "containment_q": containment_json(&link.containment_q),
        "mirror_a": mirror_json(&link.mirror_a),
        "mirror_a_prime": mirror_json(&link.mirror_a_prime),
        "hypothesis_warnings": link.hypothesis_warnings,
        "certified": link.certified,
    })
}

fn matrix_rows_json(m: &crate::mat::IntMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|r| json!(m.row(r).iter().map(int_json).collect::<Vec<_>>()))
        .collect();
    json!(rows)
}

pub fn report_json(report: &EquivalenceReport) -> Value {
    json!({
        "endpoints": {
            "a": report.endpoint_a.to_text(),
            "b": report.endpoint_b.to_text(),
            "group": group_json(&report.group),
            "pencil_b": report.b.iter().map(rat_json).collect::<Vec<_>>(),
            "pencil_c": rat_json(&report.c),
        },
        "links": report.links.iter().map(link_json).collect::<Vec<_>>(),
        "status": report.status.as_str(),
        "notes": report.notes,
    })
}

/// Re-validate the certificates of a serialized link without recomputing
/// any Gröbner basis: rebuilds the ideals from the stored data and replays
/// every certificate by exact arithmetic.
pub fn revalidate_link_json(link: &Value) -> Result<bool> {
    let w = poly_from_json(link.get("superpotential").ok_or_else(|| Error::Parse {
        position: 0,
        message: "link lacks superpotential".into(),
    })?)?;
    let ring = w.ring().clone();
    let read_monos = |key: &str| -> Result<Vec<Monomial>> {
        Ok(link
            .get(key)
            .and_then(|x| x.get("generators"))
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("link lacks {key}"),
            })?
            .iter()
            .map(|m| {
                Monomial(
                    m.as_array()
                        .map(|a| a.iter().map(|x| x.as_u64().unwrap_or(0) as u32).collect())
                        .unwrap_or_default(),
                )
            })
            .collect())
    };
    let mut ok = true;
    for (ikey, jkey, ckey) in [
        ("ideal_i_p", "ideal_j_p", "containment_p"),
        ("ideal_i_q", "ideal_j_q", "containment_q"),
    ] {
        let i_gens = read_monos(ikey)?;
        let j_gens = read_monos(jkey)?;
        let mut ideal_gens: Vec<Poly> = (0..ring.n_vars())
            .map(|v| w.partial_derivative(v))
            .filter(|p| !p.is_zero())
            .collect();
        for m in &j_gens {
            ideal_gens.push(Poly::term(&ring, m.clone(), Rat::one()));
        }
        let containment = link.get(ckey).ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("link lacks {ckey}"),
        })?;
        let holds = containment
            .get("holds")
            .and_then(|x| x.as_bool())
            .unwrap_or(false);
        let certs = containment
            .get("certificates")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: "containment lacks certificates".into(),
            })?;
        if holds && certs.len() != i_gens.len() {
            return Ok(false);
        }
        for (m, cv) in i_gens.iter().zip(certs) {
            let cert = certificate_from_json(cv)?;
            let f = Poly::term(&ring, m.clone(), Rat::one());
            let valid = match &cert {
                MembershipCertificate::DirectReduction {
                    cofactors,
                    remainder,
                } => {
                    replay_direct(&f, &ideal_gens, cofactors, remainder)
                        && (!holds || remainder.is_zero())
                }
                MembershipCertificate::Rabinowitsch {
                    cofactors,
                    aux_cofactor,
                } => replay_rabinowitsch(&f, &ideal_gens, cofactors, aux_cofactor),
                MembershipCertificate::StructuredPropagation {
                    initial_known,
                    steps,
                } => replay_structured(&w, &j_gens, initial_known, steps, &[m.clone()]),
            };
            ok &= valid;
        }
        if let Some(fp) = containment.get("fast_path") {
            if !fp.is_null() {
                let cert = certificate_from_json(fp)?;
                if let MembershipCertificate::StructuredPropagation {
                    initial_known,
                    steps,
                } = &cert
                {
                    ok &= replay_structured(&w, &j_gens, initial_known, steps, &i_gens);
                }
            }
        }
    }
    Ok(ok)
}

/// Exponent rows of a chart restriction in ambient-variable order; with
/// `b = 1, c = 0` these are the rows of the transposed matrix of that
/// side, up to order.
pub fn chart_restriction_rows(w_restricted: &Poly, nu: &PointConfig, side: ChartSide) -> Vec<Vec<Int>> {
    let n = nu.n_vars();
    let chart: Vec<usize> = match side {
        ChartSide::Xi => nu.xi_indices(),
        ChartSide::XiPrime => nu.xi_prime_indices(),
    };
    let mut rows = Vec::new();
    for (m, _) in w_restricted.terms() {
        let row: Vec<Int> = (0..n).map(|i| Int::from(m.0[chart[i]])).collect();
        rows.push(row);
    }
    rows.sort();
    rows
}
