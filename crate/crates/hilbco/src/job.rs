//! Batch front end: job descriptions, the monomial expression parser,
//! built-in example presets, and deterministic JSON reports.
//!
//! A job is a ring plus generator lists for Q, K and optionally J, with
//! options. Reports serialize through `serde_json`'s sorted maps with
//! numbers emitted as exact JSON integers, so identical jobs produce
//! byte-identical output.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::analysis::{analyze, AnalysisOptions, AnalysisReport, DiagnosticsRequest, StatementId};
use crate::error::{Error, Result};
use crate::hilbert::{Basis, BinomialPolynomial, FitOptions, HilbertSequence};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::ring::{IdealHandle, Presentation, Ring};
use crate::semigroup::AffineSemigroup;

pub const SCHEMA_VERSION: &str = "hilbco/1";

fn default_version() -> String {
    SCHEMA_VERSION.to_string()
}

/// A ring description as it appears in job files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum RingSpec {
    #[serde(rename = "monomial_quotient")]
    MonomialQuotient {
        vars: Vec<String>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        defining: Vec<String>,
    },
    #[serde(rename = "affine_semigroup")]
    AffineSemigroup { generators: Vec<Vec<u64>> },
}

/// One ideal generator: a monomial expression for the monomial backend,
/// an integer vector for the semigroup backend.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Expression(String),
    Vector(Vec<u64>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagnosticsSpec {
    pub x: String,
    pub c: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct JobOptions {
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semigroup_bound: Option<u64>,
    /// The only recognized value is "d-1".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth_flag: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<DiagnosticsSpec>,
}

impl JobOptions {
    fn is_default(&self) -> bool {
        *self == JobOptions::default()
    }
}

/// A complete job description; parses to and from JSON losslessly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    #[serde(default = "default_version")]
    pub version: String,
    pub ring: RingSpec,
    #[serde(rename = "Q")]
    pub q: Vec<GeneratorSpec>,
    #[serde(rename = "K")]
    pub k: Vec<GeneratorSpec>,
    #[serde(rename = "J", default, skip_serializing_if = "Option::is_none")]
    pub j: Option<Vec<GeneratorSpec>>,
    #[serde(default, skip_serializing_if = "JobOptions::is_default")]
    pub options: JobOptions,
}

/// A parse failure with a 1-based column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub column: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parse a monomial expression over the declared variables.
///
/// Grammar: `term := factor ('*' factor)*`, `factor := var ('^' uint)?`.
/// Whitespace is ignored; juxtaposition is not multiplication.
pub fn parse_monomial_expr(
    text: &str,
    vars: &[String],
) -> std::result::Result<Monomial, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0usize;
    let mut exponents = vec![0u32; vars.len()];

    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };

    let mut expect_factor = true;
    loop {
        skip_ws(&mut pos);
        if pos >= chars.len() {
            if expect_factor {
                return Err(ParseError {
                    message: if exponents.iter().all(|&e| e == 0) && pos == 0 {
                        "empty monomial expression".into()
                    } else {
                        "expected a variable".into()
                    },
                    column: pos + 1,
                });
            }
            break;
        }
        if expect_factor {
            let start = pos;
            if !chars[pos].is_alphabetic() && chars[pos] != '_' {
                return Err(ParseError {
                    message: format!("expected a variable, found {:?}", chars[pos]),
                    column: pos + 1,
                });
            }
            while pos < chars.len() && (chars[pos].is_alphanumeric() || chars[pos] == '_') {
                pos += 1;
            }
            let name: String = chars[start..pos].iter().collect();
            let Some(index) = vars.iter().position(|v| *v == name) else {
                return Err(ParseError {
                    message: format!("unknown variable {name:?}"),
                    column: start + 1,
                });
            };
            skip_ws(&mut pos);
            let mut exponent = 1u32;
            if pos < chars.len() && chars[pos] == '^' {
                let caret = pos;
                pos += 1;
                skip_ws(&mut pos);
                let digits_start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                if digits_start == pos {
                    return Err(ParseError {
                        message: "missing exponent after '^'".into(),
                        column: caret + 1,
                    });
                }
                let digits: String = chars[digits_start..pos].iter().collect();
                exponent = digits.parse::<u32>().map_err(|_| ParseError {
                    message: format!("exponent {digits} out of range"),
                    column: digits_start + 1,
                })?;
            }
            exponents[index] =
                exponents[index]
                    .checked_add(exponent)
                    .ok_or_else(|| ParseError {
                        message: "exponent overflow".into(),
                        column: start + 1,
                    })?;
            expect_factor = false;
        } else {
            if chars[pos] != '*' {
                return Err(ParseError {
                    message: format!("expected '*', found {:?}", chars[pos]),
                    column: pos + 1,
                });
            }
            pos += 1;
            expect_factor = true;
        }
    }
    Ok(Monomial::new(exponents))
}

/// How a failed job maps to a process exit code: 1 for input problems,
/// 2 for computation problems.
pub fn exit_code_for(error: &Error) -> i32 {
    match error {
        Error::InfiniteLength
        | Error::Uncertified { .. }
        | Error::TableTooLarge { .. }
        | Error::NoStabilization { .. }
        | Error::DegreeMismatch { .. }
        | Error::NotAReduction(_)
        | Error::NonStabilizedTail(_)
        | Error::JsonRange
        | Error::Internal(_) => 2,
        _ => 1,
    }
}

/// The validated, executable form of a job.
pub struct PreparedJob {
    pub ring: Ring,
    pub q: IdealHandle,
    pub k: IdealHandle,
    pub j: Option<IdealHandle>,
    pub options: AnalysisOptions,
}

fn input_error(message: impl Into<String>) -> Error {
    Error::InvalidJob(message.into())
}

/// Validate a job description and build the ring and ideal handles.
pub fn prepare(spec: &JobSpec) -> Result<PreparedJob> {
    if spec.version != SCHEMA_VERSION {
        return Err(input_error(format!(
            "unsupported schema version {:?} (expected {SCHEMA_VERSION:?})",
            spec.version
        )));
    }
    let ring = match &spec.ring {
        RingSpec::MonomialQuotient { vars, defining } => {
            if vars.is_empty() {
                return Err(input_error("the ring needs at least one variable"));
            }
            let mut seen = std::collections::HashSet::new();
            for v in vars {
                if !seen.insert(v) {
                    return Err(input_error(format!("duplicate variable {v:?}")));
                }
            }
            let gens = parse_expressions(defining, vars)?;
            Ring::monomial_quotient(vars.clone(), MonomialIdeal::new(vars.len(), gens))?
        }
        RingSpec::AffineSemigroup { generators } => {
            let dims = generators
                .first()
                .map(|g| g.len())
                .ok_or_else(|| input_error("the semigroup needs at least one generator"))?;
            Ring::semigroup_ring(AffineSemigroup::new(dims, generators.clone())?)
        }
    };
    let q = build_ideal(&ring, &spec.q)?;
    let k = build_ideal(&ring, &spec.k)?;
    let j = spec
        .j
        .as_ref()
        .map(|gens| build_ideal(&ring, gens))
        .transpose()?;

    let depth_is_dim_minus_one = match spec.options.depth_flag.as_deref() {
        None => false,
        Some("d-1") => true,
        Some(other) => {
            return Err(input_error(format!(
                "unrecognized depth flag {other:?} (only \"d-1\" is supported)"
            )))
        }
    };
    let diagnostics = match &spec.options.diagnostics {
        None => None,
        Some(d) => {
            let Some(vars) = ring.var_names() else {
                return Err(Error::UnsupportedOnSemigroup("diagnostics"));
            };
            let element = parse_monomial_expr(&d.x, vars)
                .map_err(|e| input_error(format!("diagnostics element: {e}")))?;
            Some(DiagnosticsRequest { element, c: d.c })
        }
    };
    let options = AnalysisOptions {
        fit: FitOptions {
            n_max: spec.options.n_max,
            window: spec.options.window,
            semigroup_bound: spec.options.semigroup_bound,
        },
        depth_is_dim_minus_one,
        diagnostics,
    };
    Ok(PreparedJob {
        ring,
        q,
        k,
        j,
        options,
    })
}

fn parse_expressions(texts: &[String], vars: &[String]) -> Result<Vec<Monomial>> {
    texts
        .iter()
        .map(|t| parse_monomial_expr(t, vars).map_err(|e| input_error(format!("in {t:?}: {e}"))))
        .collect()
}

fn build_ideal(ring: &Ring, gens: &[GeneratorSpec]) -> Result<IdealHandle> {
    match ring.presentation() {
        Presentation::MonomialQuotient { vars, .. } => {
            let monomials: Result<Vec<Monomial>> = gens
                .iter()
                .map(|g| match g {
                    GeneratorSpec::Expression(text) => {
                        parse_expressions(std::slice::from_ref(&text.clone()), vars)
                            .map(|mut v| v.pop().expect("one expression"))
                    }
                    GeneratorSpec::Vector(_) => Err(input_error(
                        "monomial rings take string generators, not vectors",
                    )),
                })
                .collect();
            ring.ideal_from_monomials(monomials?)
        }
        Presentation::SemigroupRing { .. } => {
            let vectors: Result<Vec<Vec<u64>>> = gens
                .iter()
                .map(|g| match g {
                    GeneratorSpec::Vector(v) => Ok(v.clone()),
                    GeneratorSpec::Expression(_) => Err(input_error(
                        "semigroup rings take integer-vector generators, not strings",
                    )),
                })
                .collect();
            ring.ideal_from_vectors(vectors?)
        }
    }
}

/// The three built-in presets reproducing the worked examples.
pub fn preset_names() -> &'static [&'static str] {
    &["paper-e1", "paper-semigroup", "paper-e3"]
}

pub fn preset(name: &str) -> Option<JobSpec> {
    let expr = |items: &[&str]| -> Vec<GeneratorSpec> {
        items
            .iter()
            .map(|s| GeneratorSpec::Expression(s.to_string()))
            .collect()
    };
    let vecs = |items: &[&[u64]]| -> Vec<GeneratorSpec> {
        items
            .iter()
            .map(|v| GeneratorSpec::Vector(v.to_vec()))
            .collect()
    };
    let names = |items: &[&str]| -> Vec<String> { items.iter().map(|s| s.to_string()).collect() };
    match name {
        "paper-e1" => Some(JobSpec {
            version: default_version(),
            ring: RingSpec::MonomialQuotient {
                vars: names(&["x", "y"]),
                defining: vec![],
            },
            q: expr(&["x^3", "x^2*y", "y^3"]),
            k: expr(&["x^2", "x*y", "y^2"]),
            j: Some(expr(&["x^3", "y^3"])),
            options: JobOptions::default(),
        }),
        "paper-semigroup" => Some(JobSpec {
            version: default_version(),
            ring: RingSpec::AffineSemigroup {
                generators: vec![vec![5, 0], vec![1, 4], vec![4, 1], vec![0, 5]],
            },
            q: vecs(&[&[5, 0], &[0, 5]]),
            k: vecs(&[&[5, 0], &[0, 5]]),
            j: None,
            options: JobOptions {
                depth_flag: Some("d-1".to_string()),
                ..JobOptions::default()
            },
        }),
        "paper-e3" => Some(JobSpec {
            version: default_version(),
            ring: RingSpec::MonomialQuotient {
                vars: names(&["x", "y", "z"]),
                defining: vec!["y*z".into(), "x^2*y".into(), "y^3".into()],
            },
            q: expr(&["x", "z^2"]),
            k: expr(&["x", "y", "z^2"]),
            j: None,
            options: JobOptions::default(),
        }),
        _ => None,
    }
}

// ---------------------------------------------------------------------
// report types (all integers are exact JSON integers)

fn to_i64(v: &BigInt) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::JsonRange)
}

fn to_i64_vec(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(to_i64).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub degree: usize,
    pub basis: String,
    pub coefficients: Vec<i64>,
    pub postulation: usize,
}

fn poly_json(p: &BinomialPolynomial) -> Result<PolynomialJson> {
    Ok(PolynomialJson {
        degree: p.degree,
        basis: match p.basis {
            Basis::Samuel => "samuel".into(),
            Basis::Fiber => "fiber".into(),
        },
        coefficients: to_i64_vec(&p.coeffs)?,
        postulation: p.postulation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityJson {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub id: String,
    pub lhs: i64,
    pub relation: String,
    pub rhs: i64,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedJson {
    pub id: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnmixedComponentJson {
    pub is_zero: bool,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingFactsJson {
    pub backend: String,
    pub dimension: usize,
    pub unmixed: bool,
    pub unmixedness_criterion: String,
    pub ass: Vec<Vec<String>>,
    pub assh: Vec<Vec<String>>,
    pub unmixed_component: UnmixedComponentJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthsJson {
    pub l_r_mod_k: i64,
    pub l_r_mod_q: i64,
    pub l_r_mod_k_plus_u: i64,
    pub l_r_mod_q_plus_u: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientsJson {
    pub e: Vec<i64>,
    pub g: Vec<i64>,
    pub f: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialsJson {
    pub hilbert_samuel: PolynomialJson,
    pub hilbert_k: PolynomialJson,
    pub fiber: PolynomialJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnmixedTheoremJson {
    pub lhs: i64,
    pub rhs: i64,
    pub equality: bool,
    pub quotient_is_cm: bool,
    pub dim_condition: bool,
    pub biconditional_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HunekeJson {
    pub v: Vec<i64>,
    pub tail_zero_from: usize,
    pub e0: i64,
    pub g1: i64,
    pub g2: i64,
    pub matches_fit: bool,
    pub cm_heuristic_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowJson {
    pub element: String,
    pub c: usize,
    pub checked_from: usize,
    pub checked_to: usize,
    pub failing: Vec<usize>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionRowJson {
    pub index: usize,
    pub reduced: i64,
    pub expected: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionJson {
    pub element: String,
    pub torsion: i64,
    pub hypothesis_verified: bool,
    pub rows: Vec<ReductionRowJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagnosticsJson {
    pub window: WindowJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduction: Option<ReductionJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequencesJson {
    pub hilbert_samuel: Vec<i64>,
    pub hilbert_k: Vec<i64>,
    pub fiber: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub input: JobSpec,
    pub certified: bool,
    pub parameter_ideal: bool,
    pub ring: RingFactsJson,
    pub lengths: LengthsJson,
    pub coefficients: CoefficientsJson,
    pub polynomials: PolynomialsJson,
    pub identities: Vec<IdentityJson>,
    pub verdicts: Vec<VerdictJson>,
    pub skipped: Vec<SkippedJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unmixed_component_theorem: Option<UnmixedTheoremJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub huneke: Option<HunekeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<DiagnosticsJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequences: Option<SequencesJson>,
}

fn seq_json(seq: &HilbertSequence) -> Result<Vec<i64>> {
    to_i64_vec(&seq.values)
}

fn render_prime(prime: &[usize], vars: Option<&[String]>) -> Vec<String> {
    prime
        .iter()
        .map(|&i| match vars {
            Some(names) => names[i].clone(),
            None => format!("t{i}"),
        })
        .collect()
}

fn build_report(
    spec: &JobSpec,
    job: &PreparedJob,
    analysis: &AnalysisReport,
    include_sequences: bool,
) -> Result<Report> {
    let ring = &job.ring;
    let vars = ring.var_names();
    let backend = match ring.presentation() {
        Presentation::MonomialQuotient { .. } => "monomial_quotient",
        Presentation::SemigroupRing { .. } => "affine_semigroup",
    };
    let u = &analysis.unmixed_component;
    let u_generators = match (&u.lift, vars) {
        (Some(lift), Some(names)) if !u.is_zero => lift
            .generators()
            .iter()
            .map(|g| g.display_with(names))
            .collect(),
        _ => Vec::new(),
    };
    let ring_facts = RingFactsJson {
        backend: backend.to_string(),
        dimension: analysis.dimension,
        unmixed: analysis.unmixedness.unmixed,
        unmixedness_criterion: analysis.unmixedness.criterion.to_string(),
        ass: analysis
            .unmixedness
            .ass
            .iter()
            .map(|p| render_prime(p, vars))
            .collect(),
        assh: analysis
            .unmixedness
            .assh
            .iter()
            .map(|p| render_prime(p, vars))
            .collect(),
        unmixed_component: UnmixedComponentJson {
            is_zero: u.is_zero,
            generators: u_generators,
            dimension: u.dimension,
        },
    };
    let lengths = LengthsJson {
        l_r_mod_k: to_i64(&analysis.lengths.l_r_mod_k)?,
        l_r_mod_q: to_i64(&analysis.lengths.l_r_mod_q)?,
        l_r_mod_k_plus_u: to_i64(&analysis.lengths.l_r_mod_k_plus_u)?,
        l_r_mod_q_plus_u: to_i64(&analysis.lengths.l_r_mod_q_plus_u)?,
    };
    let coefficients = CoefficientsJson {
        e: to_i64_vec(&analysis.coefficients.e)?,
        g: to_i64_vec(&analysis.coefficients.g)?,
        f: to_i64_vec(&analysis.coefficients.f)?,
    };
    let polynomials = PolynomialsJson {
        hilbert_samuel: poly_json(&analysis.coefficients.hilbert_samuel)?,
        hilbert_k: poly_json(&analysis.coefficients.hilbert_k)?,
        fiber: poly_json(&analysis.coefficients.fiber)?,
    };
    let mut identities: Vec<IdentityJson> = Vec::new();
    for check in analysis
        .coefficients
        .identities
        .iter()
        .chain(analysis.e1_route.iter().map(|r| &r.sum_check))
    {
        identities.push(IdentityJson {
            name: check.name.clone(),
            lhs: to_i64(&check.lhs)?,
            rhs: to_i64(&check.rhs)?,
            holds: check.holds,
        });
    }
    let verdicts = analysis
        .verdicts
        .iter()
        .map(|v| {
            Ok(VerdictJson {
                id: v.id.to_string(),
                lhs: to_i64(&v.lhs)?,
                relation: v.relation.symbol().to_string(),
                rhs: to_i64(&v.rhs)?,
                holds: v.holds,
                note: v.note.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let skipped = analysis
        .skipped
        .iter()
        .map(|s| SkippedJson {
            id: s.id.to_string(),
            reason: s.reason.clone(),
        })
        .collect();
    let unmixed_component_theorem = analysis
        .unmixed_component_theorem
        .as_ref()
        .map(|t| {
            Ok::<_, Error>(UnmixedTheoremJson {
                lhs: to_i64(&t.lhs)?,
                rhs: to_i64(&t.rhs)?,
                equality: t.equality,
                quotient_is_cm: t.quotient_is_cm,
                dim_condition: t.dim_condition,
                biconditional_holds: t.biconditional_holds,
            })
        })
        .transpose()?;
    let huneke = analysis
        .huneke
        .as_ref()
        .map(|h| {
            Ok::<_, Error>(HunekeJson {
                v: to_i64_vec(&h.v.values)?,
                tail_zero_from: h.v.tail_zero_from,
                e0: to_i64(&h.v.e0)?,
                g1: to_i64(&h.g1)?,
                g2: to_i64(&h.g2)?,
                matches_fit: h.matches_fit,
                cm_heuristic_ok: h.v.cm_heuristic_ok,
            })
        })
        .transpose()?;
    let diagnostics = match (&analysis.window_check, vars) {
        (Some(w), Some(names)) => Some(DiagnosticsJson {
            window: WindowJson {
                element: w.element.display_with(names),
                c: w.c,
                checked_from: w.checked.0,
                checked_to: w.checked.1,
                failing: w.failing.clone(),
                passed: w.passed(),
            },
            reduction: analysis
                .reduction_check
                .as_ref()
                .map(|r| {
                    Ok::<_, Error>(ReductionJson {
                        element: r.element.display_with(names),
                        torsion: to_i64(&r.torsion)?,
                        hypothesis_verified: r.hypothesis_verified,
                        rows: r
                            .rows
                            .iter()
                            .map(|row| {
                                Ok(ReductionRowJson {
                                    index: row.index,
                                    reduced: to_i64(&row.reduced)?,
                                    expected: to_i64(&row.expected)?,
                                    holds: row.holds,
                                })
                            })
                            .collect::<Result<Vec<_>>>()?,
                    })
                })
                .transpose()?,
        }),
        _ => None,
    };
    let sequences = if include_sequences {
        Some(SequencesJson {
            hilbert_samuel: seq_json(&analysis.coefficients.hs_seq)?,
            hilbert_k: seq_json(&analysis.coefficients.hk_seq)?,
            fiber: seq_json(&analysis.coefficients.fiber_seq)?,
        })
    } else {
        None
    };

    Ok(Report {
        version: SCHEMA_VERSION.to_string(),
        input: spec.clone(),
        certified: analysis.coefficients.hk_seq.certified && analysis.coefficients.hs_seq.certified,
        parameter_ideal: analysis.is_parameter_ideal,
        ring: ring_facts,
        lengths,
        coefficients,
        polynomials,
        identities,
        verdicts,
        skipped,
        unmixed_component_theorem,
        huneke,
        diagnostics,
        sequences,
    })
}

/// Run a job end to end: validate, analyze, assemble the report.
pub fn run_job(spec: &JobSpec, include_sequences: bool) -> Result<Report> {
    let job = prepare(spec)?;
    let analysis = analyze(&job.ring, &job.q, &job.k, job.j.as_ref(), &job.options)?;
    build_report(spec, &job, &analysis, include_sequences)
}

/// Canonical JSON: object keys sorted, exact integers, trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| Error::Internal(e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| Error::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Plain-text rendering of a report.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let p = |out: &mut String, line: String| {
        out.push_str(&line);
        out.push('\n');
    };
    p(&mut out, format!("backend:    {}", report.ring.backend));
    p(&mut out, format!("dimension:  {}", report.ring.dimension));
    p(
        &mut out,
        format!(
            "unmixed:    {} ({})",
            report.ring.unmixed, report.ring.unmixedness_criterion
        ),
    );
    if !report.ring.ass.is_empty() {
        let fmt_primes = |ps: &[Vec<String>]| {
            ps.iter()
                .map(|p| format!("({})", p.join(", ")))
                .collect::<Vec<_>>()
                .join(", ")
        };
        p(
            &mut out,
            format!("ass:        {}", fmt_primes(&report.ring.ass)),
        );
        p(
            &mut out,
            format!("assh:       {}", fmt_primes(&report.ring.assh)),
        );
    }
    let u = &report.ring.unmixed_component;
    if u.is_zero {
        p(&mut out, "U:          0".to_string());
    } else {
        p(
            &mut out,
            format!(
                "U:          ({}) / defining ideal, dim {}",
                u.generators.join(", "),
                u.dimension.map(|d| d.to_string()).unwrap_or_default()
            ),
        );
    }
    p(
        &mut out,
        format!(
            "lengths:    l(R/K) = {}   l(R/Q) = {}   l(R/(K+U)) = {}   l(R/(Q+U)) = {}",
            report.lengths.l_r_mod_k,
            report.lengths.l_r_mod_q,
            report.lengths.l_r_mod_k_plus_u,
            report.lengths.l_r_mod_q_plus_u
        ),
    );
    p(&mut out, format!("parameter Q: {}", report.parameter_ideal));
    p(&mut out, format!("e:          {:?}", report.coefficients.e));
    p(&mut out, format!("g:          {:?}", report.coefficients.g));
    p(&mut out, format!("f:          {:?}", report.coefficients.f));
    for (label, poly) in [
        ("P(Q,n)", &report.polynomials.hilbert_samuel),
        ("P_K(Q,n)", &report.polynomials.hilbert_k),
        ("P(F,n)", &report.polynomials.fiber),
    ] {
        p(
            &mut out,
            format!(
                "{label}:   degree {} coefficients {:?} postulation {}",
                poly.degree, poly.coefficients, poly.postulation
            ),
        );
    }
    let failed: Vec<&IdentityJson> = report.identities.iter().filter(|c| !c.holds).collect();
    if failed.is_empty() {
        p(
            &mut out,
            format!("identities: all {} hold", report.identities.len()),
        );
    } else {
        for c in failed {
            p(
                &mut out,
                format!("identity FAILED: {} ({} != {})", c.name, c.lhs, c.rhs),
            );
        }
    }
    if !report.verdicts.is_empty() {
        p(&mut out, "verdicts:".to_string());
        for v in &report.verdicts {
            let status = if v.holds { "holds" } else { "FAILS" };
            let note = v
                .note
                .as_ref()
                .map(|n| format!("  [{n}]"))
                .unwrap_or_default();
            p(
                &mut out,
                format!(
                    "  {:<11} {} {} {}  {status}{note}",
                    v.id, v.lhs, v.relation, v.rhs
                ),
            );
        }
    }
    for s in &report.skipped {
        p(&mut out, format!("skipped:    {} ({})", s.id, s.reason));
    }
    if let Some(h) = &report.huneke {
        p(
            &mut out,
            format!(
                "recurrence: g1 = {}, g2 = {}, matches fitted coefficients: {}",
                h.g1, h.g2, h.matches_fit
            ),
        );
    }
    if let Some(d) = &report.diagnostics {
        p(
            &mut out,
            format!(
                "window:     x = {}, c = {}, n in [{}, {}], failing: {:?}",
                d.window.element,
                d.window.c,
                d.window.checked_from,
                d.window.checked_to,
                d.window.failing
            ),
        );
        if let Some(r) = &d.reduction {
            p(
                &mut out,
                format!(
                    "reduction:  torsion = {}, hypothesis verified = {}, rows hold: {}",
                    r.torsion,
                    r.hypothesis_verified,
                    r.rows.iter().all(|row| row.holds)
                ),
            );
        }
    }
    p(&mut out, format!("certified:  {}", report.certified));
    out
}

/// Find the verdict rows for one statement id (for the `check` command).
pub fn verdict_rows(report: &Report, id: StatementId) -> Vec<&VerdictJson> {
    report
        .verdicts
        .iter()
        .filter(|v| v.id == id.as_str())
        .collect()
}
