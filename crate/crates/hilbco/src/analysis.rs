//! Statement-level analysis of a concrete (R, Q, K) instance.
//!
//! Every check is an exact integer relation between fitted coefficients
//! and lengths. The statement ids are stable strings used by the CLI:
//!
//! * `THM-b` … `THM-e` — the main equality/inequality pair between
//!   g₀+g₁ and −ℓ(R/K)+ℓ(R/Q) (and its fiber-side mirror), which for
//!   unmixed rings characterizes the Cohen-Macaulay property;
//! * `COR-NEG-a1/a2` — the universal inequalities, `COR-NEG-b1/b2` their
//!   strict forms under a caller-asserted depth = d−1;
//! * `COR-E1-a/b` — non-positivity of e₁ for parameter ideals;
//! * `PROP-D1` — the closed form g₁ = −ℓ(R/K) − ℓ(H⁰_m(K)) in dimension 1;
//! * `LEM-U-g0`, `LEM-U-g1` — comparison with the quotient by the unmixed
//!   component, including the multiplicity correction when dim U = d−1;
//! * `THM-U-a` — the unmixed-component equality, equivalent to "R/U is
//!   Cohen-Macaulay and dim U ≤ d−2";
//! * `COR-GI`, `PROP-CM-GI` — the alternating value patterns for g_i.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::counting::nested_length;
use crate::decompose;
use crate::error::{Error, Result};
use crate::hilbert::{
    extract_coefficients, fit_auto_degree, ideal_powers, Basis, BinomialPolynomial,
    CoefficientReport, FitOptions, HilbertSequence, IdentityCheck, SequenceKind,
};
use crate::huneke::{g12_from_v, v_sequence, VSequence};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::ring::{IdealHandle, LengthOptions, Presentation, Ring};

/// Stable identifiers for every statement the analyzer evaluates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StatementId {
    ThmB,
    ThmC,
    ThmD,
    ThmE,
    CorNegA1,
    CorNegA2,
    CorNegB1,
    CorNegB2,
    CorE1A,
    CorE1B,
    PropD1,
    LemUG0,
    LemUG1,
    ThmUA,
    CorGi,
    PropCmGi,
}

impl StatementId {
    pub const ALL: [StatementId; 16] = [
        StatementId::ThmB,
        StatementId::ThmC,
        StatementId::ThmD,
        StatementId::ThmE,
        StatementId::CorNegA1,
        StatementId::CorNegA2,
        StatementId::CorNegB1,
        StatementId::CorNegB2,
        StatementId::CorE1A,
        StatementId::CorE1B,
        StatementId::PropD1,
        StatementId::LemUG0,
        StatementId::LemUG1,
        StatementId::ThmUA,
        StatementId::CorGi,
        StatementId::PropCmGi,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::ThmB => "THM-b",
            StatementId::ThmC => "THM-c",
            StatementId::ThmD => "THM-d",
            StatementId::ThmE => "THM-e",
            StatementId::CorNegA1 => "COR-NEG-a1",
            StatementId::CorNegA2 => "COR-NEG-a2",
            StatementId::CorNegB1 => "COR-NEG-b1",
            StatementId::CorNegB2 => "COR-NEG-b2",
            StatementId::CorE1A => "COR-E1-a",
            StatementId::CorE1B => "COR-E1-b",
            StatementId::PropD1 => "PROP-D1",
            StatementId::LemUG0 => "LEM-U-g0",
            StatementId::LemUG1 => "LEM-U-g1",
            StatementId::ThmUA => "THM-U-a",
            StatementId::CorGi => "COR-GI",
            StatementId::PropCmGi => "PROP-CM-GI",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatementId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        StatementId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown statement id {s:?}"))
    }
}

/// The comparison a verdict records.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    Eq,
    Le,
    Ge,
    Lt,
    Gt,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Lt => "<",
            Relation::Gt => ">",
        }
    }

    fn evaluate(self, lhs: &BigInt, rhs: &BigInt) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Gt => lhs > rhs,
        }
    }
}

/// One exact integer relation, evaluated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub id: StatementId,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub relation: Relation,
    pub holds: bool,
    pub note: Option<String>,
}

impl Verdict {
    fn new(id: StatementId, lhs: BigInt, relation: Relation, rhs: BigInt) -> Self {
        let holds = relation.evaluate(&lhs, &rhs);
        Verdict {
            id,
            lhs,
            rhs,
            relation,
            holds,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// A statement that was not evaluated, and why.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkippedStatement {
    pub id: StatementId,
    pub reason: String,
}

/// Unmixedness data of the presented ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Unmixedness {
    pub unmixed: bool,
    pub criterion: &'static str,
    /// Associated primes, each a sorted list of variable indices.
    pub ass: Vec<Vec<usize>>,
    /// The subset with maximal-dimensional quotient.
    pub assh: Vec<Vec<usize>>,
}

/// Associated primes of the presented ring and whether they all have
/// maximal-dimensional quotient. Semigroup rings are domains and are
/// reported unmixed outright.
pub fn unmixedness(ring: &Ring) -> Result<Unmixedness> {
    match ring.presentation() {
        Presentation::MonomialQuotient { defining, .. } => {
            let ass = decompose::associated_primes(defining)?;
            let d = ring.dimension();
            let assh: Vec<Vec<usize>> = ass
                .iter()
                .filter(|p| defining.vars() - p.len() == d)
                .cloned()
                .collect();
            Ok(Unmixedness {
                unmixed: ass == assh,
                criterion: "presented-ring criterion",
                ass,
                assh,
            })
        }
        Presentation::SemigroupRing { .. } => Ok(Unmixedness {
            unmixed: true,
            criterion: "domain (affine semigroup ring)",
            ass: Vec::new(),
            assh: Vec::new(),
        }),
    }
}

/// The unmixed component U of (0) in R, as seen by the analyzer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnmixedComponentFacts {
    pub is_zero: bool,
    /// Ambient lift of U; equals the defining ideal when U = 0. Absent on
    /// the semigroup backend (where U = 0 because R is a domain).
    pub lift: Option<MonomialIdeal>,
    pub dimension: Option<usize>,
}

fn unmixed_component_facts(ring: &Ring) -> Result<UnmixedComponentFacts> {
    match ring.presentation() {
        Presentation::MonomialQuotient { defining, .. } => {
            let u = decompose::unmixed_component(defining)?;
            if u.is_zero_module {
                return Ok(UnmixedComponentFacts {
                    is_zero: true,
                    lift: Some(u.lift),
                    dimension: None,
                });
            }
            let annihilator = defining.colon_ideal(&u.lift)?;
            let dimension = decompose::dimension(&annihilator)?;
            Ok(UnmixedComponentFacts {
                is_zero: false,
                lift: Some(u.lift),
                dimension: Some(dimension),
            })
        }
        Presentation::SemigroupRing { .. } => Ok(UnmixedComponentFacts {
            is_zero: true,
            lift: None,
            dimension: None,
        }),
    }
}

/// The four lengths every report carries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LengthTable {
    pub l_r_mod_k: BigInt,
    pub l_r_mod_q: BigInt,
    pub l_r_mod_k_plus_u: BigInt,
    pub l_r_mod_q_plus_u: BigInt,
}

/// Data backing the unmixed-component equality verdict.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnmixedComponentTheorem {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub equality: bool,
    pub quotient_is_cm: bool,
    pub dim_condition: bool,
    pub biconditional_holds: bool,
}

/// Coefficient data of S = R/U together with the correction module fit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientByU {
    pub coefficients: CoefficientReport,
    /// n ↦ ℓ(U/(KQⁿ ∩ U)).
    pub correction_values: Vec<BigInt>,
    pub correction_poly: BinomialPolynomial,
    /// Leading coefficient of the correction polynomial.
    pub s0: BigInt,
}

/// The e₁-route data: the K = Q extraction and the sum identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct E1Route {
    pub coefficients: CoefficientReport,
    pub sum_check: IdentityCheck,
}

/// Superficiality window diagnostic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WindowCheck {
    pub element: Monomial,
    pub c: usize,
    pub checked: (usize, usize),
    pub failing: Vec<usize>,
}

impl WindowCheck {
    pub fn passed(&self) -> bool {
        self.failing.is_empty()
    }
}

/// One row of the reduction diagnostic: g_i in R/(x) against its
/// predicted value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionRow {
    pub index: usize,
    pub reduced: BigInt,
    pub expected: BigInt,
    pub holds: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionCheck {
    pub element: Monomial,
    pub torsion: BigInt,
    pub hypothesis_verified: bool,
    pub rows: Vec<ReductionRow>,
}

/// Diagnostics requested alongside an analysis.
#[derive(Clone, Debug)]
pub struct DiagnosticsRequest {
    pub element: Monomial,
    pub c: usize,
}

#[derive(Clone, Debug, Default)]
pub struct AnalysisOptions {
    pub fit: FitOptions,
    /// Caller-asserted depth R = d − 1; enables the strict inequalities.
    pub depth_is_dim_minus_one: bool,
    pub diagnostics: Option<DiagnosticsRequest>,
}

/// Everything the analyzer found out about one instance.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub dimension: usize,
    pub is_parameter_ideal: bool,
    pub unmixedness: Unmixedness,
    pub unmixed_component: UnmixedComponentFacts,
    pub lengths: LengthTable,
    pub coefficients: CoefficientReport,
    pub e1_route: Option<E1Route>,
    pub quotient_by_u: Option<QuotientByU>,
    pub unmixed_component_theorem: Option<UnmixedComponentTheorem>,
    pub verdicts: Vec<Verdict>,
    pub skipped: Vec<SkippedStatement>,
    pub window_check: Option<WindowCheck>,
    pub reduction_check: Option<ReductionCheck>,
    pub huneke: Option<HunekeSection>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HunekeSection {
    pub v: VSequence,
    pub g1: BigInt,
    pub g2: BigInt,
    pub matches_fit: bool,
}

impl AnalysisReport {
    pub fn verdict(&self, id: StatementId) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.id == id)
    }

    pub fn verdicts_for(&self, id: StatementId) -> Vec<&Verdict> {
        self.verdicts.iter().filter(|v| v.id == id).collect()
    }
}

fn sign(i: usize) -> BigInt {
    if i.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// The main equality/inequality pair: verdicts THM-b through THM-e.
///
/// Cross-computes f₀ from the coefficient differences and refuses to issue
/// verdicts when the two routes to f₀ disagree.
pub fn theorem_main(
    coefficients: &CoefficientReport,
    lengths: &LengthTable,
    unmixed: bool,
) -> Result<Vec<Verdict>> {
    let g0g1 = &coefficients.g[0] + &coefficients.g[1];
    let rhs = -&lengths.l_r_mod_k + &lengths.l_r_mod_q;
    let f0 = coefficients.f[0].clone();
    let f0_from_differences =
        &coefficients.e[1] - &coefficients.g[1] + &coefficients.e[0] - &coefficients.g[0];
    if f0 != f0_from_differences {
        return Err(Error::Internal(format!(
            "fiber multiplicity mismatch: fitted {f0}, coefficient differences give {f0_from_differences}"
        )));
    }
    let fiber_rhs =
        &lengths.l_r_mod_k + &coefficients.e[1] + &coefficients.e[0] - &lengths.l_r_mod_q;
    let note = format!("characterizes Cohen-Macaulayness when R is unmixed (unmixed: {unmixed})");
    Ok(vec![
        Verdict::new(StatementId::ThmB, g0g1.clone(), Relation::Eq, rhs.clone())
            .with_note(note.clone()),
        Verdict::new(StatementId::ThmC, g0g1, Relation::Ge, rhs).with_note(note.clone()),
        Verdict::new(
            StatementId::ThmD,
            f0.clone(),
            Relation::Le,
            fiber_rhs.clone(),
        )
        .with_note(note.clone()),
        Verdict::new(StatementId::ThmE, f0, Relation::Eq, fiber_rhs).with_note(note),
    ])
}

/// The universal inequalities COR-NEG-a1/a2, plus their strict versions
/// when the caller asserts depth R = d − 1.
pub fn negativity_bounds(
    coefficients: &CoefficientReport,
    lengths: &LengthTable,
    depth_is_dim_minus_one: bool,
) -> Vec<Verdict> {
    let g0g1 = &coefficients.g[0] + &coefficients.g[1];
    let rhs = -&lengths.l_r_mod_k + &lengths.l_r_mod_q;
    let f0 = coefficients.f[0].clone();
    let fiber_rhs =
        &lengths.l_r_mod_k + &coefficients.e[1] + &coefficients.e[0] - &lengths.l_r_mod_q;
    let mut verdicts = vec![
        Verdict::new(
            StatementId::CorNegA1,
            g0g1.clone(),
            Relation::Le,
            rhs.clone(),
        ),
        Verdict::new(
            StatementId::CorNegA2,
            f0.clone(),
            Relation::Ge,
            fiber_rhs.clone(),
        ),
    ];
    if depth_is_dim_minus_one {
        let note = "depth R = d-1 asserted by the caller";
        verdicts.push(Verdict::new(StatementId::CorNegB1, g0g1, Relation::Lt, rhs).with_note(note));
        verdicts
            .push(Verdict::new(StatementId::CorNegB2, f0, Relation::Gt, fiber_rhs).with_note(note));
    }
    verdicts
}

/// Non-positivity of e₁ for a parameter ideal, computed through a fresh
/// K = Q extraction so the sum identity g₀ + g₁ = e₁ is checked on real
/// tables rather than by algebra.
pub fn e1_corollary(
    ring: &Ring,
    q: &IdealHandle,
    opts: &AnalysisOptions,
) -> Result<(Vec<Verdict>, E1Route)> {
    let coefficients = extract_coefficients(ring, q, q, &opts.fit)?;
    let e1 = coefficients.e[1].clone();
    let sum = &coefficients.g[0] + &coefficients.g[1];
    let sum_check = IdentityCheck::new("g0_plus_g1_equals_e1_for_k_equal_q", sum, e1.clone());
    if !sum_check.holds {
        return Err(Error::Internal(
            "g0 + g1 differs from e1 on the K = Q route".into(),
        ));
    }
    let mut verdicts = vec![Verdict::new(
        StatementId::CorE1A,
        e1.clone(),
        Relation::Le,
        BigInt::zero(),
    )];
    if opts.depth_is_dim_minus_one {
        verdicts.push(
            Verdict::new(StatementId::CorE1B, e1, Relation::Lt, BigInt::zero())
                .with_note("depth R = d-1 asserted by the caller"),
        );
    }
    Ok((
        verdicts,
        E1Route {
            coefficients,
            sum_check,
        },
    ))
}

/// The dimension-one closed form PROP-D1.
pub fn prop_dim1(
    ring: &Ring,
    k: &IdealHandle,
    coefficients: &CoefficientReport,
    lengths: &LengthTable,
) -> Result<Verdict> {
    if ring.dimension() != 1 {
        return Err(Error::Internal("PROP-D1 requires dimension 1".into()));
    }
    let h0 = ring.h0_length_of_ideal(k)?;
    let rhs = -&lengths.l_r_mod_k - &h0;
    Ok(Verdict::new(
        StatementId::PropD1,
        coefficients.g[1].clone(),
        Relation::Eq,
        rhs,
    )
    .with_note(format!("ℓ(H0_m(K)) = {h0}")))
}

/// Builds S = R/U with Q and K pushed forward.
fn quotient_by_u(
    ring: &Ring,
    u_lift: &MonomialIdeal,
    q: &IdealHandle,
    k: &IdealHandle,
) -> Result<(Ring, IdealHandle, IdealHandle)> {
    let Presentation::MonomialQuotient { vars, .. } = ring.presentation() else {
        return Err(Error::UnsupportedOnSemigroup(
            "quotient by the unmixed component",
        ));
    };
    let s = Ring::monomial_quotient(vars.clone(), u_lift.clone())?;
    let (IdealHandle::Monomial { raw: qraw, .. }, IdealHandle::Monomial { raw: kraw, .. }) = (q, k)
    else {
        return Err(Error::Internal("monomial handles expected".into()));
    };
    let qs = s.ideal_from_monomials(qraw.clone())?;
    let ks = s.ideal_from_monomials(kraw.clone())?;
    Ok((s, qs, ks))
}

/// Comparison with the quotient by the unmixed component: LEM-U-g0,
/// LEM-U-g1 (equality, or the s₀-corrected equality when dim U = d−1,
/// plus the inequality form), with the correction module fitted and its
/// degree asserted to equal dim U.
pub fn lemma_u_comparison(
    ring: &Ring,
    q: &IdealHandle,
    k: &IdealHandle,
    coefficients: &CoefficientReport,
    u: &UnmixedComponentFacts,
    opts: &AnalysisOptions,
) -> Result<(Vec<Verdict>, Option<QuotientByU>)> {
    if u.is_zero {
        let note = "U = 0; trivially satisfied";
        return Ok((
            vec![
                Verdict::new(
                    StatementId::LemUG0,
                    coefficients.g[0].clone(),
                    Relation::Eq,
                    coefficients.g[0].clone(),
                )
                .with_note(note),
                Verdict::new(
                    StatementId::LemUG1,
                    coefficients.g[1].clone(),
                    Relation::Eq,
                    coefficients.g[1].clone(),
                )
                .with_note(note),
            ],
            None,
        ));
    }

    let d = ring.dimension();
    let u_lift = u.lift.as_ref().expect("nonzero U has a lift");
    let dim_u = u.dimension.expect("nonzero U has a dimension");
    let (s, qs, ks) = quotient_by_u(ring, u_lift, q, k)?;
    if s.dimension() != d {
        return Err(Error::Internal(format!(
            "R/U has dimension {} but R has dimension {d}",
            s.dimension()
        )));
    }
    let coefficients_s = extract_coefficients(&s, &qs, &ks, &opts.fit)?;

    // correction module lengths ℓ(U/(KQⁿ ∩ U))
    let (n_max, window) = opts.fit.resolve(ring, q, k);
    let powers = ideal_powers(ring, q, n_max)?;
    let mut correction_values = Vec::with_capacity(n_max + 1);
    for qn in &powers {
        let kqn = ring.product(k, qn)?;
        let meet = kqn.lift().expect("monomial backend").intersect(u_lift);
        correction_values.push(nested_length(&meet, u_lift)?);
    }
    let correction_seq = HilbertSequence {
        kind: SequenceKind::Module,
        values: correction_values.clone(),
        certified: true,
    };
    let correction_poly = fit_auto_degree(&correction_seq, window, Basis::Fiber, d)?;
    if correction_poly.degree != dim_u {
        return Err(Error::Internal(format!(
            "correction module grows with degree {} but dim U = {dim_u}",
            correction_poly.degree
        )));
    }
    let s0 = correction_poly.coeffs[0].clone();

    let mut verdicts = vec![Verdict::new(
        StatementId::LemUG0,
        coefficients.g[0].clone(),
        Relation::Eq,
        coefficients_s.g[0].clone(),
    )];
    if dim_u + 2 <= d {
        verdicts.push(
            Verdict::new(
                StatementId::LemUG1,
                coefficients.g[1].clone(),
                Relation::Eq,
                coefficients_s.g[1].clone(),
            )
            .with_note(format!("dim U = {dim_u} <= d-2")),
        );
    } else {
        verdicts.push(
            Verdict::new(
                StatementId::LemUG1,
                coefficients.g[1].clone(),
                Relation::Eq,
                &coefficients_s.g[1] - &s0,
            )
            .with_note(format!("dim U = {dim_u} = d-1; corrected by s0 = {s0}")),
        );
    }
    verdicts.push(
        Verdict::new(
            StatementId::LemUG1,
            coefficients.g[1].clone(),
            Relation::Le,
            coefficients_s.g[1].clone(),
        )
        .with_note("inequality form"),
    );

    Ok((
        verdicts,
        Some(QuotientByU {
            coefficients: coefficients_s,
            correction_values,
            correction_poly,
            s0,
        }),
    ))
}

/// The unmixed-component equality THM-U-a and its equivalence with
/// "R/U is Cohen-Macaulay and dim U ≤ d−2".
///
/// Cohen-Macaulayness of S = R/U is decided by the main theorem applied
/// to S, which is unmixed by construction.
pub fn theorem_unmixed_component(
    ring: &Ring,
    coefficients: &CoefficientReport,
    lengths: &LengthTable,
    unmixed: &Unmixedness,
    u: &UnmixedComponentFacts,
    s_data: Option<&QuotientByU>,
) -> Result<(Verdict, UnmixedComponentTheorem)> {
    let d = ring.dimension();
    let lhs = &coefficients.g[0] + &coefficients.g[1];
    let rhs = -&lengths.l_r_mod_k_plus_u + &lengths.l_r_mod_q_plus_u;
    let equality = lhs == rhs;

    let quotient_is_cm = if u.is_zero {
        // S = R: apply the main equality to R itself
        let own =
            &coefficients.g[0] + &coefficients.g[1] == -&lengths.l_r_mod_k + &lengths.l_r_mod_q;
        unmixed.unmixed && own
    } else {
        let s_data = s_data.ok_or_else(|| {
            Error::Internal("quotient coefficients required when U is nonzero".into())
        })?;
        let s_equality = &s_data.coefficients.g[0] + &s_data.coefficients.g[1]
            == -&lengths.l_r_mod_k_plus_u + &lengths.l_r_mod_q_plus_u;
        // R/U is unmixed by construction; verify rather than assume
        let s_ring = Ring::monomial_quotient(
            ring.var_names().expect("monomial backend").to_vec(),
            u.lift.clone().expect("nonzero U has a lift"),
        )?;
        let s_unmixed = unmixedness(&s_ring)?;
        if !s_unmixed.unmixed {
            return Err(Error::Internal(
                "quotient by the unmixed component is not unmixed".into(),
            ));
        }
        s_equality
    };
    let dim_condition = match u.dimension {
        None => true,
        Some(dim_u) => dim_u + 2 <= d,
    };
    let side_b = quotient_is_cm && dim_condition;
    let biconditional_holds = equality == side_b;
    let data = UnmixedComponentTheorem {
        lhs: lhs.clone(),
        rhs: rhs.clone(),
        equality,
        quotient_is_cm,
        dim_condition,
        biconditional_holds,
    };
    let verdict = Verdict::new(StatementId::ThmUA, lhs, Relation::Eq, rhs).with_note(format!(
        "R/U Cohen-Macaulay: {quotient_is_cm}; dim U <= d-2: {dim_condition}; equivalence holds: {biconditional_holds}"
    ));
    Ok((verdict, data))
}

/// The alternating value patterns COR-GI and PROP-CM-GI, one verdict row
/// per index 1 ≤ i ≤ d.
pub fn corollary_gi_values(
    coefficients: &CoefficientReport,
    lengths: &LengthTable,
    pattern_only: bool,
) -> Vec<Verdict> {
    let d = coefficients.dimension;
    let base = &coefficients.g[0] - &lengths.l_r_mod_q_plus_u + &lengths.l_r_mod_k_plus_u;
    let mut verdicts = Vec::new();
    for i in 1..=d {
        let mut v = Verdict::new(
            StatementId::CorGi,
            coefficients.g[i].clone(),
            Relation::Eq,
            sign(i) * &base,
        )
        .with_note(format!("i = {i}"));
        if pattern_only {
            v = v.with_note(format!(
                "i = {i}; pattern-only (Q is not a parameter ideal)"
            ));
        }
        verdicts.push(v);
    }
    for i in 1..=d {
        let mut v = Verdict::new(
            StatementId::PropCmGi,
            coefficients.g[i].clone(),
            Relation::Eq,
            sign(i) * &lengths.l_r_mod_k,
        )
        .with_note(format!("i = {i}"));
        if pattern_only {
            v = v.with_note(format!(
                "i = {i}; pattern-only (Q is not a parameter ideal)"
            ));
        }
        verdicts.push(v);
    }
    verdicts
}

/// Compare (KQⁿ : x) ∩ Q^c against KQⁿ⁻¹ for every n in (c, N]; an empty
/// failing set is evidence (not proof) of superficiality of x for the
/// pair (Q, K).
pub fn superficial_window_check(
    ring: &Ring,
    q: &IdealHandle,
    k: &IdealHandle,
    x: &Monomial,
    c: usize,
    n_max: usize,
) -> Result<WindowCheck> {
    let Presentation::MonomialQuotient { defining, .. } = ring.presentation() else {
        return Err(Error::UnsupportedOnSemigroup(
            "the superficiality window check",
        ));
    };
    if defining.contains_monomial(x) {
        return Err(Error::ZeroElement);
    }
    let q_lift = q.lift().expect("monomial backend");
    if !q_lift.contains_monomial(x) {
        return Err(Error::ElementOutsideQ);
    }
    let powers = ideal_powers(ring, q, n_max.max(c + 1))?;
    let qc = powers[c].lift().expect("monomial backend");
    let mut failing = Vec::new();
    for n in c + 1..=n_max {
        let kqn = ring.product(k, &powers[n])?;
        let kqn1 = ring.product(k, &powers[n - 1])?;
        let lhs = kqn
            .lift()
            .expect("monomial backend")
            .colon_monomial(x)
            .intersect(qc);
        if &lhs != kqn1.lift().expect("monomial backend") {
            failing.push(n);
        }
    }
    Ok(WindowCheck {
        element: x.clone(),
        c,
        checked: (c + 1, n_max),
        failing,
    })
}

/// Fit the coefficients of the pair in R/(x) and compare them with the
/// predictions g_i for i ≤ d−2 and g_{d−1} + (−1)^{d−1}·ℓ(0:x).
pub fn reduction_lemma_check(
    ring: &Ring,
    q: &IdealHandle,
    k: &IdealHandle,
    coefficients: &CoefficientReport,
    x: &Monomial,
    c: usize,
    opts: &AnalysisOptions,
) -> Result<ReductionCheck> {
    let d = ring.dimension();
    if d < 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    let (n_max, _) = opts.fit.resolve(ring, q, k);
    let window = superficial_window_check(ring, q, k, x, c, n_max)?;

    let reduced_ring = ring.reduce_mod_element(x)?;
    if reduced_ring.dimension() != d - 1 {
        return Err(Error::Internal(format!(
            "reducing modulo the element left dimension {} (expected {})",
            reduced_ring.dimension(),
            d - 1
        )));
    }
    let (IdealHandle::Monomial { raw: qraw, .. }, IdealHandle::Monomial { raw: kraw, .. }) = (q, k)
    else {
        return Err(Error::Internal("monomial handles expected".into()));
    };
    let q_bar = reduced_ring.ideal_from_monomials(qraw.clone())?;
    let k_bar = reduced_ring.ideal_from_monomials(kraw.clone())?;
    let reduced = extract_coefficients(&reduced_ring, &q_bar, &k_bar, &opts.fit)?;
    let torsion = ring.torsion_length(x)?;

    let mut rows = Vec::with_capacity(d);
    for i in 0..=d - 1 {
        let expected = if i + 1 < d {
            coefficients.g[i].clone()
        } else {
            &coefficients.g[d - 1] + sign(d - 1) * &torsion
        };
        let got = reduced.g[i].clone();
        rows.push(ReductionRow {
            index: i,
            holds: got == expected,
            reduced: got,
            expected,
        });
    }
    Ok(ReductionCheck {
        element: x.clone(),
        torsion,
        hypothesis_verified: window.passed(),
        rows,
    })
}

/// Run every applicable check on one instance.
pub fn analyze(
    ring: &Ring,
    q: &IdealHandle,
    k: &IdealHandle,
    j: Option<&IdealHandle>,
    opts: &AnalysisOptions,
) -> Result<AnalysisReport> {
    let d = ring.dimension();
    if d == 0 {
        return Err(Error::ZeroDimensionalRing);
    }
    let length_opts = LengthOptions {
        semigroup_bound: opts.fit.semigroup_bound,
        power_hint: 1,
    };

    let coefficients = extract_coefficients(ring, q, k, &opts.fit)?;
    let unmixed = unmixedness(ring)?;
    let u = unmixed_component_facts(ring)?;
    let is_param = ring.is_parameter_ideal(q, &length_opts)?;

    // the four lengths
    let l_r_mod_k = ring.length_of_quotient(k, &length_opts)?;
    let l_r_mod_q = ring.length_of_quotient(q, &length_opts)?;
    let (l_r_mod_k_plus_u, l_r_mod_q_plus_u) = match (&u.is_zero, &u.lift) {
        (false, Some(u_lift)) => {
            let u_handle = ring.ideal_from_monomials(u_lift.generators().to_vec())?;
            let k_plus_u = ring.sum(k, &u_handle)?;
            let q_plus_u = ring.sum(q, &u_handle)?;
            (
                ring.length_of_quotient(&k_plus_u, &length_opts)?,
                ring.length_of_quotient(&q_plus_u, &length_opts)?,
            )
        }
        _ => (l_r_mod_k.clone(), l_r_mod_q.clone()),
    };
    let lengths = LengthTable {
        l_r_mod_k,
        l_r_mod_q,
        l_r_mod_k_plus_u,
        l_r_mod_q_plus_u,
    };

    let mut verdicts = Vec::new();
    let mut skipped = Vec::new();
    let mut e1_route = None;
    let mut quotient_data = None;
    let mut unmixed_theorem = None;

    if is_param {
        // classical: the multiplicity of a parameter ideal never exceeds
        // its colength
        if coefficients.e[0] > lengths.l_r_mod_q {
            return Err(Error::Internal(format!(
                "multiplicity {} exceeds l(R/Q) = {}",
                coefficients.e[0], lengths.l_r_mod_q
            )));
        }
        verdicts.extend(theorem_main(&coefficients, &lengths, unmixed.unmixed)?);
        verdicts.extend(negativity_bounds(
            &coefficients,
            &lengths,
            opts.depth_is_dim_minus_one,
        ));
        if !opts.depth_is_dim_minus_one {
            for id in [
                StatementId::CorNegB1,
                StatementId::CorNegB2,
                StatementId::CorE1B,
            ] {
                skipped.push(SkippedStatement {
                    id,
                    reason: "depth R = d-1 not asserted".into(),
                });
            }
        }
        let (e1_verdicts, route) = if q.same_ideal(k) {
            // K = Q: the main extraction already is the K = Q route
            let e1 = coefficients.e[1].clone();
            let sum = &coefficients.g[0] + &coefficients.g[1];
            let sum_check =
                IdentityCheck::new("g0_plus_g1_equals_e1_for_k_equal_q", sum, e1.clone());
            let mut v = vec![Verdict::new(
                StatementId::CorE1A,
                e1.clone(),
                Relation::Le,
                BigInt::zero(),
            )];
            if opts.depth_is_dim_minus_one {
                v.push(
                    Verdict::new(StatementId::CorE1B, e1, Relation::Lt, BigInt::zero())
                        .with_note("depth R = d-1 asserted by the caller"),
                );
            }
            (
                v,
                E1Route {
                    coefficients: coefficients.clone(),
                    sum_check,
                },
            )
        } else {
            e1_corollary(ring, q, opts)?
        };
        verdicts.extend(e1_verdicts);
        e1_route = Some(route);

        if d == 1 {
            verdicts.push(prop_dim1(ring, k, &coefficients, &lengths)?);
        } else {
            skipped.push(SkippedStatement {
                id: StatementId::PropD1,
                reason: format!("requires dimension 1 (ring has dimension {d})"),
            });
        }

        let (lemma_verdicts, s_data) = lemma_u_comparison(ring, q, k, &coefficients, &u, opts)?;
        verdicts.extend(lemma_verdicts);
        quotient_data = s_data;

        let (thm_u_verdict, thm_u_data) = theorem_unmixed_component(
            ring,
            &coefficients,
            &lengths,
            &unmixed,
            &u,
            quotient_data.as_ref(),
        )?;
        verdicts.push(thm_u_verdict);
        unmixed_theorem = Some(thm_u_data);

        verdicts.extend(corollary_gi_values(&coefficients, &lengths, false));
    } else {
        for id in [
            StatementId::ThmB,
            StatementId::ThmC,
            StatementId::ThmD,
            StatementId::ThmE,
            StatementId::CorNegA1,
            StatementId::CorNegA2,
            StatementId::CorNegB1,
            StatementId::CorNegB2,
            StatementId::CorE1A,
            StatementId::CorE1B,
            StatementId::PropD1,
            StatementId::LemUG0,
            StatementId::LemUG1,
            StatementId::ThmUA,
            StatementId::CorGi,
        ] {
            skipped.push(SkippedStatement {
                id,
                reason: "Q is not a parameter ideal".into(),
            });
        }
        // the CM value pattern is still worth reporting, marked as such
        verdicts.extend(
            corollary_gi_values(&coefficients, &lengths, true)
                .into_iter()
                .filter(|v| v.id == StatementId::PropCmGi),
        );
    }

    let window_check = match &opts.diagnostics {
        Some(req) => {
            let (n_max, _) = opts.fit.resolve(ring, q, k);
            Some(superficial_window_check(
                ring,
                q,
                k,
                &req.element,
                req.c,
                n_max,
            )?)
        }
        None => None,
    };
    let reduction_check = match &opts.diagnostics {
        Some(req) if d >= 2 => Some(reduction_lemma_check(
            ring,
            q,
            k,
            &coefficients,
            &req.element,
            req.c,
            opts,
        )?),
        _ => None,
    };

    let huneke = match j {
        Some(j_handle) => {
            let v = v_sequence(ring, q, k, j_handle, {
                let (n_max, _) = opts.fit.resolve(ring, q, k);
                n_max
            })?;
            let (g1, g2) = g12_from_v(&v, &lengths.l_r_mod_k)?;
            let matches_fit = g1 == coefficients.g[1] && g2 == coefficients.g[2];
            Some(HunekeSection {
                v,
                g1,
                g2,
                matches_fit,
            })
        }
        None => None,
    };

    Ok(AnalysisReport {
        dimension: d,
        is_parameter_ideal: is_param,
        unmixedness: unmixed,
        unmixed_component: u,
        lengths,
        coefficients,
        e1_route,
        quotient_by_u: quotient_data,
        unmixed_component_theorem: unmixed_theorem,
        verdicts,
        skipped,
        window_check,
        reduction_check,
        huneke,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// k[x,y,z]/(yz, x^2 y, y^3) with Q = (x, z^2), K = (x, y, z^2).
    fn mixed_surface() -> (Ring, IdealHandle, IdealHandle) {
        let defining = MonomialIdeal::new(
            3,
            vec![mono(&[0, 1, 1]), mono(&[2, 1, 0]), mono(&[0, 3, 0])],
        );
        let ring = Ring::monomial_quotient(names(&["x", "y", "z"]), defining).unwrap();
        let q = ring
            .ideal_from_monomials(vec![mono(&[1, 0, 0]), mono(&[0, 0, 2])])
            .unwrap();
        let k = ring
            .ideal_from_monomials(vec![mono(&[1, 0, 0]), mono(&[0, 1, 0]), mono(&[0, 0, 2])])
            .unwrap();
        (ring, q, k)
    }

    #[test]
    fn statement_ids_round_trip() {
        for id in StatementId::ALL {
            assert_eq!(id.as_str().parse::<StatementId>().unwrap(), id);
        }
        assert!("THM-x".parse::<StatementId>().is_err());
    }

    #[test]
    fn unmixedness_examples() {
        let (ring, _, _) = mixed_surface();
        let u = unmixedness(&ring).unwrap();
        assert!(!u.unmixed);
        assert_eq!(u.ass, vec![vec![1], vec![0, 1, 2]]);
        assert_eq!(u.assh, vec![vec![1]]);

        let regular = Ring::polynomial(names(&["x", "y"]));
        assert!(unmixedness(&regular).unwrap().unmixed);
    }

    #[test]
    fn mixed_surface_full_analysis() {
        let (ring, q, k) = mixed_surface();
        let report = analyze(&ring, &q, &k, None, &AnalysisOptions::default()).unwrap();

        assert_eq!(report.dimension, 2);
        assert!(report.is_parameter_ideal);
        assert!(!report.unmixedness.unmixed);
        assert_eq!(report.lengths.l_r_mod_k, big(2));
        assert_eq!(report.lengths.l_r_mod_q, big(4));

        // U = (y)/I0 with dim 0
        assert!(!report.unmixed_component.is_zero);
        assert_eq!(
            report.unmixed_component.lift.as_ref().unwrap(),
            &MonomialIdeal::new(3, vec![mono(&[0, 1, 0])])
        );
        assert_eq!(report.unmixed_component.dimension, Some(0));

        // g0 + g1 = 0 while -ℓ(R/K) + ℓ(R/Q) = 2
        let thm_c = report.verdict(StatementId::ThmC).unwrap();
        assert!(!thm_c.holds);
        assert_eq!(thm_c.lhs, big(0));
        assert_eq!(thm_c.rhs, big(2));

        // the unmixed-component equality holds: 0 = -2 + 2
        let thm_u = report.unmixed_component_theorem.as_ref().unwrap();
        assert!(thm_u.equality);
        assert_eq!(thm_u.lhs, big(0));
        assert_eq!(thm_u.rhs, big(0));
        assert!(thm_u.quotient_is_cm);
        assert!(thm_u.dim_condition);
        assert!(thm_u.biconditional_holds);

        // the g_i value patterns fail, consistent with R not CM
        assert!(report
            .verdicts_for(StatementId::CorGi)
            .iter()
            .any(|v| !v.holds));
        assert!(report
            .verdicts_for(StatementId::PropCmGi)
            .iter()
            .any(|v| !v.holds));
    }

    #[test]
    fn regular_parameter_instance_is_cohen_macaulay() {
        let ring = Ring::polynomial(names(&["x", "y"]));
        let q = ring
            .ideal_from_monomials(vec![mono(&[3, 0]), mono(&[0, 3])])
            .unwrap();
        let k = ring
            .ideal_from_monomials(vec![mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])])
            .unwrap();
        let report = analyze(&ring, &q, &k, None, &AnalysisOptions::default()).unwrap();

        // g0 + g1 = 9 - 3 = 6 = -3 + 9
        let thm_b = report.verdict(StatementId::ThmB).unwrap();
        assert!(thm_b.holds);
        assert_eq!(thm_b.lhs, big(6));
        assert!(report.unmixedness.unmixed);
        // g_i = (-1)^i * 3
        assert!(report
            .verdicts_for(StatementId::PropCmGi)
            .iter()
            .all(|v| v.holds));
        assert_eq!(report.coefficients.g, vec![big(9), big(-3), big(3)]);
        // both negativity bounds at equality
        assert!(report.verdict(StatementId::CorNegA1).unwrap().holds);
        assert!(report.verdict(StatementId::CorNegA2).unwrap().holds);
        // e1 = 0 in a regular ring
        let e1a = report.verdict(StatementId::CorE1A).unwrap();
        assert!(e1a.holds);
        assert_eq!(e1a.lhs, big(0));
        // U = 0, so the lemma rows are trivial and THM-U-a reduces to THM-b
        assert!(report.unmixed_component.is_zero);
        assert!(report.verdicts_for(StatementId::LemUG0)[0].holds);
        let thm_u = report.unmixed_component_theorem.as_ref().unwrap();
        assert!(thm_u.equality && thm_u.quotient_is_cm && thm_u.biconditional_holds);
    }

    #[test]
    fn dimension_one_closed_form() {
        // k[x,y]/(xy, y^2), Q = (x), K = (x, y): g1 = -2 = -1 - 1
        let defining = MonomialIdeal::new(2, vec![mono(&[1, 1]), mono(&[0, 2])]);
        let ring = Ring::monomial_quotient(names(&["x", "y"]), defining).unwrap();
        let q = ring.ideal_from_monomials(vec![mono(&[1, 0])]).unwrap();
        let k = ring
            .ideal_from_monomials(vec![mono(&[1, 0]), mono(&[0, 1])])
            .unwrap();
        let report = analyze(&ring, &q, &k, None, &AnalysisOptions::default()).unwrap();
        let prop = report.verdict(StatementId::PropD1).unwrap();
        assert!(prop.holds);
        assert_eq!(prop.lhs, big(-2));
        assert_eq!(report.coefficients.g[1], big(-2));
    }

    #[test]
    fn dimension_one_unmixed_component_correction() {
        // k[x,y]/(x^2, xy): U = (x)/I0 with dim U = 0 = d-1, s0 = 1;
        // fitted g = (1, -2) on R and (1, -1) on S = R/U
        let defining = MonomialIdeal::new(2, vec![mono(&[2, 0]), mono(&[1, 1])]);
        let ring = Ring::monomial_quotient(names(&["x", "y"]), defining).unwrap();
        let q = ring.ideal_from_monomials(vec![mono(&[0, 1])]).unwrap();
        let k = ring
            .ideal_from_monomials(vec![mono(&[1, 0]), mono(&[0, 1])])
            .unwrap();
        let report = analyze(&ring, &q, &k, None, &AnalysisOptions::default()).unwrap();

        assert_eq!(report.coefficients.g, vec![big(1), big(-2)]);
        let s = report.quotient_by_u.as_ref().unwrap();
        assert_eq!(s.coefficients.g, vec![big(1), big(-1)]);
        assert_eq!(s.s0, big(1));
        assert_eq!(s.correction_poly.degree, 0);

        // g1(Q) = g1(QS) - s0 and the inequality g1(Q) <= g1(QS)
        let rows = report.verdicts_for(StatementId::LemUG1);
        assert!(rows.iter().all(|v| v.holds));

        // the equality of THM-U-a fails, matching dim U = d-1
        let thm_u = report.unmixed_component_theorem.as_ref().unwrap();
        assert!(!thm_u.equality);
        assert!(thm_u.quotient_is_cm);
        assert!(!thm_u.dim_condition);
        assert!(thm_u.biconditional_holds);
    }

    #[test]
    fn window_check_on_the_regular_pair() {
        let ring = Ring::polynomial(names(&["x", "y"]));
        let q = ring
            .ideal_from_monomials(vec![mono(&[3, 0]), mono(&[2, 1]), mono(&[0, 3])])
            .unwrap();
        let k = ring
            .ideal_from_monomials(vec![mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])])
            .unwrap();
        let check = superficial_window_check(&ring, &q, &k, &mono(&[3, 0]), 2, 12).unwrap();
        assert!(check.passed());
        // an element outside Q is rejected
        assert_eq!(
            superficial_window_check(&ring, &q, &k, &mono(&[1, 0]), 2, 12),
            Err(Error::ElementOutsideQ)
        );
    }

    #[test]
    fn window_check_flags_a_zero_divisor() {
        // k[x,y]/(xy), Q = K = (x, y); multiplying by x kills y-powers
        let defining = MonomialIdeal::new(2, vec![mono(&[1, 1])]);
        let ring = Ring::monomial_quotient(names(&["x", "y"]), defining).unwrap();
        let m = ring
            .ideal_from_monomials(vec![mono(&[1, 0]), mono(&[0, 1])])
            .unwrap();
        let check = superficial_window_check(&ring, &m, &m, &mono(&[1, 0]), 1, 10).unwrap();
        assert!(!check.passed());
    }

    #[test]
    fn reduction_check_on_the_regular_pair() {
        let ring = Ring::polynomial(names(&["x", "y"]));
        let q = ring
            .ideal_from_monomials(vec![mono(&[3, 0]), mono(&[2, 1]), mono(&[0, 3])])
            .unwrap();
        let k = ring
            .ideal_from_monomials(vec![mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])])
            .unwrap();
        let coefficients = extract_coefficients(&ring, &q, &k, &FitOptions::default()).unwrap();
        let check = reduction_lemma_check(
            &ring,
            &q,
            &k,
            &coefficients,
            &mono(&[3, 0]),
            2,
            &AnalysisOptions::default(),
        )
        .unwrap();
        assert!(check.hypothesis_verified);
        assert_eq!(check.torsion, big(0));
        assert_eq!(check.rows.len(), 2);
        // g0 and g1 survive reduction modulo a regular element
        assert!(check.rows.iter().all(|r| r.holds));
        assert_eq!(check.rows[0].reduced, big(9));
        assert_eq!(check.rows[1].reduced, big(-3));
    }

    #[test]
    fn hyperplane_unmixed_component_picks_up_the_multiplicity_correction() {
        // k[x,y,z]/(yz, y^2): the unmixed component lift is (y) with
        // dim U = 1 = d-1, so the quotient comparison carries the s0 term
        // and the corrected equality must fail
        let defining = MonomialIdeal::new(3, vec![mono(&[0, 1, 1]), mono(&[0, 2, 0])]);
        let ring = Ring::monomial_quotient(names(&["x", "y", "z"]), defining).unwrap();
        let q = ring
            .ideal_from_monomials(vec![mono(&[1, 0, 0]), mono(&[0, 0, 2])])
            .unwrap();
        let k = ring
            .ideal_from_monomials(vec![mono(&[1, 0, 0]), mono(&[0, 1, 0]), mono(&[0, 0, 2])])
            .unwrap();
        let report = analyze(&ring, &q, &k, None, &AnalysisOptions::default()).unwrap();

        assert!(report.is_parameter_ideal);
        assert_eq!(report.unmixed_component.dimension, Some(1));
        let s = report.quotient_by_u.as_ref().unwrap();
        assert_eq!(s.correction_poly.degree, 1);
        assert!(s.s0 >= big(1));
        // three independent fits feed these rows: g on R, g on R/U, and
        // the correction module
        for row in report.verdicts_for(StatementId::LemUG1) {
            assert!(row.holds, "{row:?}");
        }
        let thm_u = report.unmixed_component_theorem.as_ref().unwrap();
        assert!(!thm_u.equality);
        assert!(!thm_u.dim_condition);
        assert!(thm_u.quotient_is_cm);
        assert!(thm_u.biconditional_holds);
    }

    #[test]
    fn three_dimensional_regular_instance_passes_everything() {
        let ring = Ring::polynomial(names(&["x", "y", "z"]));
        let q = ring
            .ideal_from_monomials(vec![mono(&[1, 0, 0]), mono(&[0, 2, 0]), mono(&[0, 0, 3])])
            .unwrap();
        let k = ring
            .ideal_from_monomials(vec![
                mono(&[1, 0, 0]),
                mono(&[0, 2, 0]),
                mono(&[0, 0, 3]),
                mono(&[0, 1, 1]),
            ])
            .unwrap();
        let report = analyze(&ring, &q, &k, None, &AnalysisOptions::default()).unwrap();
        assert_eq!(report.dimension, 3);
        assert!(
            report.verdicts.iter().all(|v| v.holds),
            "{:?}",
            report.verdicts
        );
        assert_eq!(report.coefficients.g.len(), 4);
    }

    #[test]
    fn reduction_check_requires_dimension_at_least_two() {
        let defining = MonomialIdeal::new(2, vec![mono(&[1, 1]), mono(&[0, 2])]);
        let ring = Ring::monomial_quotient(names(&["x", "y"]), defining).unwrap();
        let q = ring.ideal_from_monomials(vec![mono(&[1, 0])]).unwrap();
        let k = ring
            .ideal_from_monomials(vec![mono(&[1, 0]), mono(&[0, 1])])
            .unwrap();
        let coefficients = extract_coefficients(&ring, &q, &k, &FitOptions::default()).unwrap();
        assert_eq!(
            reduction_lemma_check(
                &ring,
                &q,
                &k,
                &coefficients,
                &mono(&[1, 0]),
                1,
                &AnalysisOptions::default(),
            ),
            Err(Error::UnsupportedDimension(1))
        );
    }

    #[test]
    fn pattern_only_mode_for_non_parameter_ideals() {
        // three generators in dimension two: THM statements are skipped,
        // yet the CM value pattern still shows g_i = (-1)^i * 3
        let ring = Ring::polynomial(names(&["x", "y"]));
        let q = ring
            .ideal_from_monomials(vec![mono(&[3, 0]), mono(&[2, 1]), mono(&[0, 3])])
            .unwrap();
        let k = ring
            .ideal_from_monomials(vec![mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])])
            .unwrap();
        let report = analyze(&ring, &q, &k, None, &AnalysisOptions::default()).unwrap();
        assert!(!report.is_parameter_ideal);
        assert!(report.verdict(StatementId::ThmB).is_none());
        assert!(report
            .skipped
            .iter()
            .any(|s| s.id == StatementId::ThmB && s.reason.contains("parameter")));
        let pattern = report.verdicts_for(StatementId::PropCmGi);
        assert_eq!(pattern.len(), 2);
        assert!(pattern.iter().all(|v| v.holds));
    }

    #[test]
    fn huneke_section_cross_checks_the_fit() {
        let ring = Ring::polynomial(names(&["x", "y"]));
        let q = ring
            .ideal_from_monomials(vec![mono(&[3, 0]), mono(&[2, 1]), mono(&[0, 3])])
            .unwrap();
        let k = ring
            .ideal_from_monomials(vec![mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])])
            .unwrap();
        let j = ring
            .ideal_from_monomials(vec![mono(&[3, 0]), mono(&[0, 3])])
            .unwrap();
        let report = analyze(&ring, &q, &k, Some(&j), &AnalysisOptions::default()).unwrap();
        let section = report.huneke.as_ref().unwrap();
        assert!(section.matches_fit);
        assert_eq!(section.g1, big(-3));
        assert_eq!(section.g2, big(3));
    }

    #[test]
    fn numerical_semigroup_analysis() {
        // k[[t^3, t^5]] is a one-dimensional Cohen-Macaulay domain; the
        // parameter ideal (t^3) has colength 3 (the three residues 0, 5, 10)
        let s = crate::semigroup::AffineSemigroup::new(1, vec![vec![3], vec![5]]).unwrap();
        let ring = Ring::semigroup_ring(s);
        assert_eq!(ring.dimension(), 1);
        let q = ring.ideal_from_vectors(vec![vec![3]]).unwrap();
        let report = analyze(&ring, &q, &q, None, &AnalysisOptions::default()).unwrap();
        assert_eq!(report.lengths.l_r_mod_q, big(3));
        assert_eq!(report.coefficients.e, vec![big(3), big(0)]);
        assert!(report.verdict(StatementId::ThmB).unwrap().holds);
        // g1 = -l(R/K) - l(H0_m(K)) with vanishing H0 in a domain
        let prop = report.verdict(StatementId::PropD1).unwrap();
        assert!(prop.holds);
        assert_eq!(prop.lhs, big(-3));
    }

    #[test]
    fn semigroup_instance_analysis() {
        let s = crate::semigroup::AffineSemigroup::new(
            2,
            vec![vec![5, 0], vec![1, 4], vec![4, 1], vec![0, 5]],
        )
        .unwrap();
        let ring = Ring::semigroup_ring(s);
        let q = ring
            .ideal_from_vectors(vec![vec![5, 0], vec![0, 5]])
            .unwrap();
        let report = analyze(
            &ring,
            &q,
            &q,
            None,
            &AnalysisOptions {
                depth_is_dim_minus_one: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(report.coefficients.e, vec![big(5), big(-2), big(0)]);
        assert_eq!(report.coefficients.g[1], big(-7));
        assert!(report.unmixedness.unmixed);
        // e1 = -2 < 0, consistent with depth 1 < 2
        let e1b = report.verdict(StatementId::CorE1B).unwrap();
        assert!(e1b.holds);
        // g0 + g1 = 5 - 7 = -2 < 0 = rhs: THM-c fails
        let thm_c = report.verdict(StatementId::ThmC).unwrap();
        assert!(!thm_c.holds);
        assert_eq!(thm_c.lhs, big(-2));
        assert_eq!(thm_c.rhs, big(0));
        // strict negativity holds under the asserted depth
        assert!(report.verdict(StatementId::CorNegB1).unwrap().holds);
    }
}
