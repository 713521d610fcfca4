//! Command-line front end.
//!
//! One thin binary dispatches the verbs; all real work happens in the
//! library. Exit codes: 0 on success (or a certified verification), 2 when
//! a verification ran but could not be certified, 1 on any error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_traits::One;

use crate::cleave::{connect, detect_cleave};
use crate::error::{Error, Result};
use crate::groebner::GroebnerConfig;
use crate::invertible::{classify, diagram, is_gorenstein, InvertiblePolynomial};
use crate::mat::{IntMatrix, Rat};
use crate::pipeline::{
    bhk_mirror, link_json, parse_rat, point_config_json, report_json, verify_cleave,
    verify_equivalence, EquivalenceStatus, PipelineConfig,
};
use crate::symmetry::{
    aut_diag, dual_group, group_quotient_structure, j_group, parse_group_text, sl_group,
    DiagonalGroup,
};
use crate::toric::{
    build_nu, irrelevant_ideal, subideal_j, superpotential, triangulation_pair,
};
use crate::weights::positive_weight_solve;

#[derive(Parser)]
#[command(
    name = "bhk",
    about = "Invertible polynomials, their symmetry groups, and certified derived equivalences of BHK mirrors",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputOpts {
    /// Polynomial file (grammar: terms like 2*x0^3*x1 joined by +)
    #[arg(long, value_name = "FILE")]
    poly_a: Option<PathBuf>,
    /// Exponent matrix file (one row of integers per line), an
    /// alternative to --poly-a
    #[arg(long, value_name = "FILE")]
    matrix: Option<PathBuf>,
}

#[derive(Args)]
struct GroupOpt {
    /// J, SL, or @FILE with one comma-separated phase vector per line
    #[arg(long, default_value = "J")]
    group: String,
}

#[derive(Args)]
struct OutputOpts {
    /// Write a JSON report to this path
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
    /// Timing and progress notes on standard error
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct LimitOpts {
    /// Abort Gröbner runs after this many S-pairs
    #[arg(long, value_name = "N")]
    max_spairs: Option<usize>,
    /// Abort Gröbner runs when the working basis exceeds this many terms
    #[arg(long, value_name = "N")]
    max_terms: Option<usize>,
}

impl LimitOpts {
    fn config(&self) -> PipelineConfig {
        let mut g = GroebnerConfig::default();
        if let Some(s) = self.max_spairs {
            g.max_spairs = s;
        }
        if let Some(t) = self.max_terms {
            g.max_terms = t;
        }
        PipelineConfig { groebner: g }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a polynomial into Fermat/chain/loop parts and print its
    /// diagram
    Classify {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Positive weight system q and degree d with A q = d 1
    Weights {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Transposed polynomial
    Transpose {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Orders and generators of Aut_diag, SL, and J
    Groups {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Krawitz dual group of (F_A, G)
    DualGroup {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        group: GroupOpt,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Is the ambient P(q)/(G/J) Gorenstein?
    Gorenstein {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        group: GroupOpt,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// BHK mirror data: transposed polynomial, mirror weights, dual group
    Mirror {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        group: GroupOpt,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Cleave sequence from --poly-a to --poly-b through the Fermat
    /// polynomial
    CleavePath {
        #[command(flatten)]
        input: InputOpts,
        /// Second polynomial file
        #[arg(long, value_name = "FILE")]
        poly_b: PathBuf,
        #[command(flatten)]
        group: GroupOpt,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Certify derived equivalence of the BHK mirror pencils of two
    /// polynomials
    Verify {
        #[command(flatten)]
        input: InputOpts,
        /// Second polynomial file
        #[arg(long, value_name = "FILE")]
        poly_b: PathBuf,
        #[command(flatten)]
        group: GroupOpt,
        /// Pencil coefficients b as comma-separated rationals (default all 1)
        #[arg(long, value_name = "CSV")]
        b: Option<String>,
        /// Pencil coefficient c (default 0)
        #[arg(long, value_name = "RAT")]
        c: Option<String>,
        #[command(flatten)]
        limits: LimitOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Run a named built-in example: cubic, quintic, or chain
    Example {
        /// cubic | quintic | chain
        name: String,
        #[command(flatten)]
        limits: LimitOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
}

pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse and run; never panics on user input.
pub fn run<I: IntoIterator<Item = String>>(args: I) -> CliOutcome {
    let mut argv: Vec<String> = vec!["bhk".into()];
    argv.extend(args);
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            return CliOutcome {
                code: if is_help { 0 } else { 1 },
                stdout: if is_help { e.to_string() } else { String::new() },
                stderr: if is_help { String::new() } else { e.to_string() },
            };
        }
    };
    let mut out = String::new();
    let mut err = String::new();
    let code = match dispatch(cli.command, &mut out, &mut err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    };
    CliOutcome {
        code,
        stdout: out,
        stderr: err,
    }
}

/// Run and print to the live stdout/stderr.
pub fn run_to_stdout<I: IntoIterator<Item = String>>(args: I) -> i32 {
    let outcome = run(args);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.code
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_polynomial(input: &InputOpts) -> Result<InvertiblePolynomial> {
    match (&input.poly_a, &input.matrix) {
        (Some(path), _) => InvertiblePolynomial::parse(read_file(path)?.trim()),
        (None, Some(path)) => {
            let m = IntMatrix::parse_text(&read_file(path)?)?;
            InvertiblePolynomial::from_matrix(m)
        }
        (None, None) => Err(Error::Usage(
            "one of --poly-a or --matrix is required".into(),
        )),
    }
}

fn resolve_group(spec: &str, p: &InvertiblePolynomial) -> Result<DiagonalGroup> {
    match spec {
        "J" | "j" => j_group(p.matrix()),
        "SL" | "sl" => sl_group(p.matrix()),
        other => {
            let path = other.strip_prefix('@').ok_or_else(|| {
                Error::Usage(format!(
                    "--group must be J, SL, or @FILE; got `{other}`"
                ))
            })?;
            let text = read_file(&PathBuf::from(path))?;
            let gens = parse_group_text(&text, p.n_vars())?;
            Ok(DiagonalGroup::from_generators(p.n_vars(), &gens))
        }
    }
}

fn parse_b(spec: &Option<String>, n: usize) -> Result<Vec<Rat>> {
    match spec {
        None => Ok(vec![Rat::one(); n]),
        Some(s) => {
            let parts: Vec<&str> = s.split(',').collect();
            if parts.len() != n {
                return Err(Error::Usage(format!(
                    "--b needs {n} comma-separated rationals, got {}",
                    parts.len()
                )));
            }
            parts.iter().map(|t| parse_rat(t.trim())).collect()
        }
    }
}

fn write_json(path: &Option<PathBuf>, value: &serde_json::Value) -> Result<()> {
    if let Some(path) = path {
        let text = serde_json::to_string_pretty(value)
            .map_err(|e| Error::Io(e.to_string()))?;
        std::fs::write(path, text + "\n")
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn dispatch(cmd: Command, out: &mut String, err: &mut String) -> Result<i32> {
    match cmd {
        Command::Classify { input, output } => {
            let p = load_polynomial(&input)?;
            let dec = classify(&p)?;
            writeln!(out, "polynomial: {p}").unwrap();
            for part in &dec.parts {
                writeln!(out, "  {}", part.describe()).unwrap();
            }
            let d = diagram(&p)?;
            writeln!(out, "diagram:").unwrap();
            write!(out, "{}", d.to_dot()).unwrap();
            let v = serde_json::json!({
                "polynomial": p.to_text(),
                "parts": dec.parts.iter().map(|x| x.describe()).collect::<Vec<_>>(),
                "dot": d.to_dot(),
            });
            write_json(&output.json, &v)?;
            Ok(0)
        }
        Command::Weights { input, output } => {
            let p = load_polynomial(&input)?;
            let w = positive_weight_solve(p.matrix())?;
            writeln!(out, "{w}").unwrap();
            let idx = crate::invertible::calabi_yau_index(&p)?;
            writeln!(
                out,
                "calabi-yau index: {}{}",
                idx,
                if idx.is_one() { " (Calabi-Yau)" } else { "" }
            )
            .unwrap();
            let v = serde_json::json!({
                "q": w.q.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "d": w.d.to_string(),
                "calabi_yau_index": idx.to_string(),
            });
            write_json(&output.json, &v)?;
            Ok(0)
        }
        Command::Transpose { input, output } => {
            let p = load_polynomial(&input)?;
            let t = p.transpose();
            writeln!(out, "{t}").unwrap();
            write_json(
                &output.json,
                &serde_json::json!({ "transposed": t.to_text() }),
            )?;
            Ok(0)
        }
        Command::Groups { input, output } => {
            let p = load_polynomial(&input)?;
            let aut = aut_diag(p.matrix())?;
            let sl = sl_group(p.matrix())?;
            let j = j_group(p.matrix())?;
            writeln!(out, "|Aut_diag| = {}", aut.order()).unwrap();
            writeln!(out, "|SL|       = {}", sl.order()).unwrap();
            writeln!(out, "|J|        = {}", j.order()).unwrap();
            for g in j.generators() {
                writeln!(out, "J generator: {g}").unwrap();
            }
            let q = group_quotient_structure(&sl, &j)?;
            writeln!(out, "SL/J = {}", q.describe()).unwrap();
            let v = serde_json::json!({
                "aut_order": aut.order().to_string(),
                "sl_order": sl.order().to_string(),
                "j_order": j.order().to_string(),
                "sl_mod_j": q.invariant_factors.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            });
            write_json(&output.json, &v)?;
            Ok(0)
        }
        Command::DualGroup {
            input,
            group,
            output,
        } => {
            let p = load_polynomial(&input)?;
            let g = resolve_group(&group.group, &p)?;
            let dual = dual_group(p.matrix(), &g)?;
            writeln!(out, "|G|   = {}", g.order()).unwrap();
            writeln!(out, "|G^T| = {}", dual.order()).unwrap();
            for gen in dual.generators() {
                writeln!(out, "G^T generator: {gen}").unwrap();
            }
            let v = serde_json::json!({
                "g_order": g.order().to_string(),
                "dual_order": dual.order().to_string(),
                "dual_generators": dual.generators().iter().map(|s| s.to_text()).collect::<Vec<_>>(),
            });
            write_json(&output.json, &v)?;
            Ok(0)
        }
        Command::Gorenstein {
            input,
            group,
            output,
        } => {
            let p = load_polynomial(&input)?;
            let g = resolve_group(&group.group, &p)?;
            let w = positive_weight_solve(p.matrix())?;
            let ok = is_gorenstein(&w, &g);
            writeln!(out, "gorenstein: {ok}").unwrap();
            write_json(&output.json, &serde_json::json!({ "gorenstein": ok }))?;
            Ok(0)
        }
        Command::Mirror {
            input,
            group,
            output,
        } => {
            let p = load_polynomial(&input)?;
            let g = resolve_group(&group.group, &p)?;
            let m = bhk_mirror(&p, &g)?;
            writeln!(out, "transposed polynomial: {}", m.transposed).unwrap();
            writeln!(out, "mirror weights: {}", m.mirror_weights).unwrap();
            writeln!(out, "|G^T| = {}", m.dual.order()).unwrap();
            writeln!(out, "G^T / J(transpose) = {}", m.quotient_by_j.describe()).unwrap();
            writeln!(out, "mirror ambient: {}", m.ambient_text()).unwrap();
            let v = serde_json::json!({
                "transposed": m.transposed.to_text(),
                "mirror_weights": m.mirror_weights.q.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "mirror_degree": m.mirror_weights.d.to_string(),
                "dual_order": m.dual.order().to_string(),
                "quotient_by_j": m.quotient_by_j.invariant_factors.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "ambient": m.ambient_text(),
            });
            write_json(&output.json, &v)?;
            Ok(0)
        }
        Command::CleavePath {
            input,
            poly_b,
            group,
            output,
        } => {
            let p = load_polynomial(&input)?;
            let q = InvertiblePolynomial::parse(read_file(&poly_b)?.trim())?;
            let g = resolve_group(&group.group, &p)?;
            let path = connect(&p, &q, &g)?;
            writeln!(out, "{} cleave(s) through the Fermat polynomial", path.len()).unwrap();
            for (i, cl) in path.iter().enumerate() {
                writeln!(
                    out,
                    "  cleave {i}: row {} ({}), arrow target x{}, index set {:?}",
                    cl.k,
                    cl.direction.as_str(),
                    cl.arrow_target,
                    cl.index_set
                )
                .unwrap();
            }
            let v = serde_json::json!({
                "cleaves": path.iter().map(|cl| serde_json::json!({
                    "k": cl.k,
                    "direction": cl.direction.as_str(),
                    "arrow_target": cl.arrow_target,
                    "index_set": cl.index_set,
                })).collect::<Vec<_>>(),
            });
            write_json(&output.json, &v)?;
            Ok(0)
        }
        Command::Verify {
            input,
            poly_b,
            group,
            b,
            c,
            limits,
            output,
        } => {
            let start = std::time::Instant::now();
            let p = load_polynomial(&input)?;
            let q = InvertiblePolynomial::parse(read_file(&poly_b)?.trim())?;
            let g = resolve_group(&group.group, &p)?;
            let bv = parse_b(&b, p.n_vars())?;
            let cv = match &c {
                Some(s) => parse_rat(s)?,
                None => Rat::from_integer(0.into()),
            };
            let config = limits.config();
            let report = verify_equivalence(&p, &q, &g, &bv, &cv, &config)?;
            writeln!(out, "endpoints: {p}  <->  {q}").unwrap();
            writeln!(out, "links: {}", report.links.len()).unwrap();
            for (i, link) in report.links.iter().enumerate() {
                writeln!(
                    out,
                    "  link {i}: row {} ({}), containments p={} q={}, fast path p={} q={}{}",
                    link.cleave.k,
                    link.cleave.direction.as_str(),
                    link.containment_p.holds,
                    link.containment_q.holds,
                    link.containment_p.fast_path.is_some(),
                    link.containment_q.fast_path.is_some(),
                    if link.hypothesis_warnings.is_empty() {
                        String::new()
                    } else {
                        format!(" [{}]", link.hypothesis_warnings.join("; "))
                    }
                )
                .unwrap();
            }
            writeln!(out, "status: {}", report.status.as_str()).unwrap();
            for note in &report.notes {
                writeln!(out, "note: {note}").unwrap();
            }
            write_json(&output.json, &report_json(&report))?;
            if output.verbose {
                writeln!(err, "verify took {:?}", start.elapsed()).unwrap();
            }
            Ok(match report.status {
                EquivalenceStatus::Equivalent => 0,
                EquivalenceStatus::NotCertified => 2,
            })
        }
        Command::Example {
            name,
            limits,
            output,
        } => run_example(&name, &limits.config(), out, output),
    }
}

fn run_example(
    name: &str,
    config: &PipelineConfig,
    out: &mut String,
    output: OutputOpts,
) -> Result<i32> {
    match name {
        "quintic" => {
            let p = InvertiblePolynomial::parse("x0^5+x1^5+x2^5+x3^5+x4^5")?;
            let j = j_group(p.matrix())?;
            let aut = aut_diag(p.matrix())?;
            let sl = sl_group(p.matrix())?;
            writeln!(out, "polynomial: {p}").unwrap();
            writeln!(out, "weights: {}", positive_weight_solve(p.matrix())?).unwrap();
            writeln!(out, "|Aut_diag| = {}", aut.order()).unwrap();
            writeln!(out, "|SL| = {}", sl.order()).unwrap();
            writeln!(out, "|J| = {}", j.order()).unwrap();
            let dual = dual_group(p.matrix(), &j)?;
            writeln!(out, "dual of J is SL: {}", dual == sl).unwrap();
            let q = group_quotient_structure(&sl, &j)?;
            writeln!(out, "SL/J = {}", q.describe()).unwrap();
            let m = bhk_mirror(&p, &j)?;
            writeln!(out, "mirror ambient: {}", m.ambient_text()).unwrap();
            let v = serde_json::json!({
                "aut_order": aut.order().to_string(),
                "sl_order": sl.order().to_string(),
                "j_order": j.order().to_string(),
                "dual_of_j_is_sl": dual == sl,
                "sl_mod_j": q.invariant_factors.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "ambient": m.ambient_text(),
            });
            write_json(&output.json, &v)?;
            Ok(0)
        }
        "chain" => {
            let p = InvertiblePolynomial::parse("x0^4*x1+x1^4*x2+x2^4*x3+x3^4*x4+x4^5")?;
            let j = j_group(p.matrix())?;
            writeln!(out, "polynomial: {p}").unwrap();
            writeln!(out, "transpose:  {}", p.transpose()).unwrap();
            let m = bhk_mirror(&p, &j)?;
            writeln!(out, "mirror weights: {}", m.mirror_weights).unwrap();
            let wt = m.mirror_weights.clone();
            let gor = is_gorenstein(&wt, &m.dual);
            writeln!(out, "mirror side gorenstein: {gor}").unwrap();
            writeln!(out, "mirror ambient: {}", m.ambient_text()).unwrap();
            let v = serde_json::json!({
                "polynomial": p.to_text(),
                "transposed": p.transpose().to_text(),
                "mirror_weights": wt.q.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "mirror_degree": wt.d.to_string(),
                "mirror_gorenstein": gor,
                "ambient": m.ambient_text(),
            });
            write_json(&output.json, &v)?;
            Ok(0)
        }
        "cubic" => {
            let p = InvertiblePolynomial::parse("x0^3+x1^2*x2+x2^3")?;
            let q = InvertiblePolynomial::parse("x0^3+x1^3+x2^3")?;
            let g = j_group(p.matrix())?;
            let cl = detect_cleave(&p, &q).map_err(Error::Shape)?;
            let nu = build_nu(&cl, &g)?;
            writeln!(out, "F_A  = {p}").unwrap();
            writeln!(out, "F_A' = {q}").unwrap();
            writeln!(out, "nu points (exponent coordinates):").unwrap();
            for (pt, name) in nu.points.iter().zip(&nu.names) {
                let coords: Vec<String> = pt.iter().map(|x| x.to_string()).collect();
                writeln!(out, "  {name}: ({})", coords.join(",")).unwrap();
            }
            let (t, t_prime) = triangulation_pair(&nu)?;
            let simplex_names = |s: &Vec<usize>| {
                let names: Vec<String> = s.iter().map(|&i| nu.names[i].clone()).collect();
                format!("{{{}}}", names.join(","))
            };
            writeln!(out, "T  maximal simplices:").unwrap();
            for s in &t.maximal_simplices {
                writeln!(out, "  {}", simplex_names(s)).unwrap();
            }
            writeln!(out, "T' maximal simplices:").unwrap();
            for s in &t_prime.maximal_simplices {
                writeln!(out, "  {}", simplex_names(s)).unwrap();
            }
            let fmt_ideal = |mi: &crate::toric::MonomialIdeal| mi.generators_text().join(", ");
            writeln!(out, "I_p = <{}>", fmt_ideal(&irrelevant_ideal(&nu, &t))).unwrap();
            writeln!(out, "J_p = <{}>", fmt_ideal(&subideal_j(&nu, &t))).unwrap();
            writeln!(out, "I_q = <{}>", fmt_ideal(&irrelevant_ideal(&nu, &t_prime))).unwrap();
            writeln!(out, "J_q = <{}>", fmt_ideal(&subideal_j(&nu, &t_prime))).unwrap();
            let b = vec![Rat::one(); 3];
            let c = Rat::one();
            let w = superpotential(&nu, &b, &c)?;
            writeln!(out, "w   = {w}").unwrap();
            let cert = verify_cleave(&cl, &g, &b, &c, config)?;
            writeln!(out, "w_p = {}", cert.w_p).unwrap();
            writeln!(out, "w_q = {}", cert.w_q).unwrap();
            writeln!(out, "mirror ambient of F_A : {}", cert.mirror_a.ambient_text()).unwrap();
            writeln!(
                out,
                "mirror ambient of F_A': {}",
                cert.mirror_a_prime.ambient_text()
            )
            .unwrap();
            writeln!(out, "containment p: {}", cert.containment_p.holds).unwrap();
            writeln!(out, "containment q: {}", cert.containment_q.holds).unwrap();
            writeln!(
                out,
                "fast path: p={} q={}",
                cert.containment_p.fast_path.is_some(),
                cert.containment_q.fast_path.is_some()
            )
            .unwrap();
            writeln!(out, "certified: {}", cert.certified).unwrap();
            let v = serde_json::json!({
                "nu": point_config_json(&nu),
                "link": link_json(&cert),
            });
            write_json(&output.json, &v)?;
            Ok(if cert.certified { 0 } else { 2 })
        }
        other => Err(Error::Usage(format!(
            "unknown example `{other}`; available: cubic, quintic, chain"
        ))),
    }
}
