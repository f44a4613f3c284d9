//! Hilbert functions of an m-primary pair (Q, K) and their polynomials.
//!
//! Three sequences are tabulated: n ↦ ℓ(R/Qⁿ), n ↦ ℓ(R/KQⁿ) and their
//! difference n ↦ ℓ(Qⁿ/KQⁿ). Each eventually agrees with a polynomial
//! written in a binomial basis with alternating signs,
//!
//! ```text
//! p(n) = Σ_{i=0}^{δ} (−1)^i c_i · C(n + δ − i − 1 + s, δ − i)
//! ```
//!
//! with shift s = 0 for the two length sequences (degree δ = dim R,
//! coefficients e_i resp. g_i) and s = 1 for the difference (degree
//! δ = dim R − 1, coefficients f_i). Fitting uses the finite-difference
//! table to certify stabilization over a trailing window, solves an exact
//! rational system for the coefficients, verifies the tail, and reports
//! the postulation index. Nothing is ever rounded.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{IdealHandle, LengthOptions, Ring};

/// Which of the three tabulated functions a sequence is.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SequenceKind {
    HilbertSamuel,
    HilbertK,
    Fiber,
    /// Auxiliary module lengths (used for modules like U/(KQⁿ ∩ U)).
    Module,
}

impl SequenceKind {
    pub fn label(self) -> &'static str {
        match self {
            SequenceKind::HilbertSamuel => "hilbert_samuel",
            SequenceKind::HilbertK => "hilbert_k",
            SequenceKind::Fiber => "fiber",
            SequenceKind::Module => "module",
        }
    }
}

/// Table n ↦ length for n = 0..=N.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertSequence {
    pub kind: SequenceKind,
    pub values: Vec<BigInt>,
    /// All lengths certified (always true for the monomial backend; the
    /// semigroup backend refuses to return uncertified counts).
    pub certified: bool,
}

/// The binomial basis a polynomial is written in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    /// C(n + δ − i − 1, δ − i): the convention for ℓ(R/Qⁿ)-type functions.
    Samuel,
    /// C(n + δ − i, δ − i): the convention for fiber-type functions.
    Fiber,
}

impl Basis {
    fn shift(self) -> i64 {
        match self {
            Basis::Samuel => 0,
            Basis::Fiber => 1,
        }
    }
}

/// A polynomial in a signed binomial basis, plus its postulation index:
/// the least n₀ from which the fitted sequence agrees with it exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinomialPolynomial {
    pub degree: usize,
    /// c_0..c_degree; the sign (−1)^i is part of the basis, not the entry.
    pub coeffs: Vec<BigInt>,
    pub basis: Basis,
    pub postulation: usize,
}

/// Generalized binomial coefficient C(top, k) as a polynomial in `top`,
/// exact for any integer argument.
pub fn binomial(top: i64, k: usize) -> BigInt {
    let mut numerator = BigInt::one();
    for j in 0..k {
        numerator *= BigInt::from(top - j as i64);
    }
    let mut factorial = BigInt::one();
    for j in 1..=k {
        factorial *= BigInt::from(j as u64);
    }
    let (quot, rem) = num_integer::Integer::div_rem(&numerator, &factorial);
    debug_assert!(rem.is_zero(), "products of consecutive integers divide k!");
    quot
}

impl BinomialPolynomial {
    pub fn from_coeffs(degree: usize, coeffs: Vec<BigInt>, basis: Basis) -> Self {
        assert_eq!(coeffs.len(), degree + 1);
        BinomialPolynomial {
            degree,
            coeffs,
            basis,
            postulation: 0,
        }
    }

    pub fn evaluate(&self, n: i64) -> BigInt {
        let delta = self.degree as i64;
        let shift = self.basis.shift();
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let term = c * binomial(n + delta - i as i64 - 1 + shift, self.degree - i);
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    /// Equality as polynomial functions, decided on degree+1 sample points.
    pub fn same_polynomial(&self, other: &BinomialPolynomial) -> bool {
        let top = self.degree.max(other.degree) as i64 + 1;
        (0..=top).all(|n| self.evaluate(n) == other.evaluate(n))
    }
}

/// Finite-difference table: row 0 is the input, row k its k-th differences.
fn difference_rows(values: &[BigInt], depth: usize) -> Vec<Vec<BigInt>> {
    let mut rows = Vec::with_capacity(depth + 1);
    rows.push(values.to_vec());
    for k in 1..=depth {
        let prev: &Vec<BigInt> = &rows[k - 1];
        let next: Vec<BigInt> = prev.windows(2).map(|w| &w[1] - &w[0]).collect();
        rows.push(next);
    }
    rows
}

fn trailing_constant(row: &[BigInt], window: usize) -> Option<&BigInt> {
    if row.len() < window || window == 0 {
        return None;
    }
    let tail = &row[row.len() - window..];
    let first = &tail[0];
    tail.iter().all(|v| v == first).then_some(first)
}

/// Fit a polynomial of the given degree to the trailing entries of the
/// sequence.
///
/// The degree-th differences must be constant over the trailing `window`
/// entries; the coefficients are then solved from the last degree+1 points
/// over the rationals with an exactness assertion, the fit is re-verified
/// on the trailing window+degree+1 points, and the postulation index is
/// read off by scanning downwards.
pub fn fit_binomial_polynomial(
    seq: &HilbertSequence,
    degree: usize,
    window: usize,
    basis: Basis,
) -> Result<BinomialPolynomial> {
    let kind = seq.kind.label();
    let values = &seq.values;
    let n_max = values.len().saturating_sub(1);
    let window = window.max(1);
    if n_max < degree + 2 * window {
        return Err(Error::WindowTooLarge {
            degree,
            window,
            needed: degree + 2 * window,
            n_max,
        });
    }

    let rows = difference_rows(values, degree);
    let leading = match trailing_constant(&rows[degree], window) {
        Some(c) => c.clone(),
        None => {
            return Err(Error::NoStabilization {
                kind,
                degree,
                window,
                n_max,
            })
        }
    };
    if !leading.is_positive() {
        // the sequence provably grows at a lower degree over this window
        let observed = (0..degree)
            .rev()
            .find(|&k| !matches!(trailing_constant(&rows[k], window), Some(c) if c.is_zero()))
            .unwrap_or(0);
        return Err(Error::DegreeMismatch {
            kind,
            expected: degree,
            observed,
        });
    }

    // Solve for the coefficients from the last degree+1 table entries.
    let shift = basis.shift();
    let points: Vec<usize> = (n_max - degree..=n_max).collect();
    let mut matrix: Vec<Vec<BigRational>> = Vec::with_capacity(degree + 1);
    for &n in &points {
        let mut row: Vec<BigRational> = (0..=degree)
            .map(|i| {
                let b = binomial(n as i64 + degree as i64 - i as i64 - 1 + shift, degree - i);
                let signed = if i % 2 == 0 { b } else { -b };
                BigRational::from_integer(signed)
            })
            .collect();
        row.push(BigRational::from_integer(values[n].clone()));
        matrix.push(row);
    }
    let solution = solve_exact(matrix)
        .ok_or_else(|| Error::Internal(format!("singular fitting system for {kind} sequence")))?;
    let mut coeffs = Vec::with_capacity(degree + 1);
    for c in solution {
        if !c.is_integer() {
            return Err(Error::Internal(format!(
                "non-integer coefficient {c} fitted for {kind} sequence"
            )));
        }
        coeffs.push(c.to_integer());
    }

    let mut poly = BinomialPolynomial {
        degree,
        coeffs,
        basis,
        postulation: 0,
    };

    // verify the trailing window+degree+1 entries exactly
    let verify_from = n_max - (window + degree);
    for n in verify_from..=n_max {
        if poly.evaluate(n as i64) != values[n] {
            return Err(Error::NoStabilization {
                kind,
                degree,
                window,
                n_max,
            });
        }
    }

    let mut postulation = verify_from;
    while postulation > 0 && poly.evaluate(postulation as i64 - 1) == values[postulation - 1] {
        postulation -= 1;
    }
    poly.postulation = postulation;
    Ok(poly)
}

/// Fit with the degree detected from the difference table: the least δ
/// whose δ-th differences are constant over the trailing window.
pub fn fit_auto_degree(
    seq: &HilbertSequence,
    window: usize,
    basis: Basis,
    max_degree: usize,
) -> Result<BinomialPolynomial> {
    let window = window.max(1);
    let values = &seq.values;
    for degree in 0..=max_degree {
        if values.len().saturating_sub(1) < degree + 2 * window {
            break;
        }
        let rows = difference_rows(values, degree);
        if trailing_constant(&rows[degree], window + 1).is_some() {
            return fit_binomial_polynomial(seq, degree, window, basis);
        }
    }
    Err(Error::NoStabilization {
        kind: seq.kind.label(),
        degree: max_degree,
        window,
        n_max: values.len().saturating_sub(1),
    })
}

/// Exact Gaussian elimination; returns None on a singular matrix.
fn solve_exact(mut m: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    let rows = m.len();
    let cols = rows + 1;
    for col in 0..rows {
        let pivot = (col..rows).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for c in col..cols {
            m[col][c] = &m[col][c] / &p;
        }
        for r in 0..rows {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols {
                    let sub = &f * &m[col][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[rows].clone()).collect())
}

/// Powers Q⁰..Q^N of an ideal, built incrementally.
pub fn ideal_powers(ring: &Ring, q: &IdealHandle, n_max: usize) -> Result<Vec<IdealHandle>> {
    let mut powers = Vec::with_capacity(n_max + 1);
    powers.push(ring.unit_ideal());
    for n in 1..=n_max {
        let next = ring.product(&powers[n - 1], q)?;
        powers.push(next);
    }
    Ok(powers)
}

fn length_options(sg_bound: Option<u64>, n: usize) -> LengthOptions {
    LengthOptions {
        semigroup_bound: sg_bound,
        power_hint: n as u32,
    }
}

/// Build the membership table once, for the doubled largest bound the
/// sequence will request; smaller counts reuse it.
fn prewarm_semigroup(ring: &Ring, sg_bound: Option<u64>, n_max: usize) -> Result<()> {
    if let Some(sg) = ring.semigroup() {
        let bound = length_options(sg_bound, n_max).bound_for(sg);
        match sg.warm_membership(bound.saturating_mul(2)) {
            Ok(()) | Err(Error::TableTooLarge { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

/// n ↦ ℓ(R/KQⁿ) for n = 0..=N. Rejects pairs with Q ⊄ K.
pub fn hk_sequence(
    ring: &Ring,
    q: &IdealHandle,
    k: &IdealHandle,
    n_max: usize,
    sg_bound: Option<u64>,
) -> Result<HilbertSequence> {
    let powers = ideal_powers(ring, q, n_max)?;
    hk_sequence_with_powers(ring, &powers, k, sg_bound)
}

pub(crate) fn hk_sequence_with_powers(
    ring: &Ring,
    powers: &[IdealHandle],
    k: &IdealHandle,
    sg_bound: Option<u64>,
) -> Result<HilbertSequence> {
    prewarm_semigroup(ring, sg_bound, powers.len().saturating_sub(1))?;
    if !ring.ideal_contains(k, &powers[1])? {
        return Err(Error::QNotContainedInK);
    }
    if !ring.is_m_primary(k, &length_options(sg_bound, 1))? {
        return Err(Error::NotMPrimary("K".into()));
    }
    if !ring.is_m_primary(&powers[1], &length_options(sg_bound, 1))? {
        return Err(Error::NotMPrimary("Q".into()));
    }
    let mut values = Vec::with_capacity(powers.len());
    for (n, qn) in powers.iter().enumerate() {
        let ideal = ring.product(k, qn)?;
        values.push(ring.length_of_quotient(&ideal, &length_options(sg_bound, n))?);
    }
    ensure_non_decreasing(&values, "hilbert_k")?;
    Ok(HilbertSequence {
        kind: SequenceKind::HilbertK,
        values,
        certified: true,
    })
}

/// ℓ(R/KQⁿ⁺¹) ≥ ℓ(R/KQⁿ) always; a decrease means a counting bug.
fn ensure_non_decreasing(values: &[BigInt], kind: &str) -> Result<()> {
    for w in values.windows(2) {
        if w[1] < w[0] {
            return Err(Error::Internal(format!(
                "{kind} table decreases from {} to {}",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

/// n ↦ ℓ(R/Qⁿ) for n = 0..=N; the value at n = 0 is 0.
pub fn hs_sequence(
    ring: &Ring,
    q: &IdealHandle,
    n_max: usize,
    sg_bound: Option<u64>,
) -> Result<HilbertSequence> {
    let powers = ideal_powers(ring, q, n_max)?;
    hs_sequence_with_powers(ring, &powers, sg_bound)
}

pub(crate) fn hs_sequence_with_powers(
    ring: &Ring,
    powers: &[IdealHandle],
    sg_bound: Option<u64>,
) -> Result<HilbertSequence> {
    prewarm_semigroup(ring, sg_bound, powers.len().saturating_sub(1))?;
    if !ring.is_m_primary(&powers[1], &length_options(sg_bound, 1))? {
        return Err(Error::NotMPrimary("Q".into()));
    }
    let mut values = Vec::with_capacity(powers.len());
    for (n, qn) in powers.iter().enumerate() {
        values.push(ring.length_of_quotient(qn, &length_options(sg_bound, n))?);
    }
    ensure_non_decreasing(&values, "hilbert_samuel")?;
    Ok(HilbertSequence {
        kind: SequenceKind::HilbertSamuel,
        values,
        certified: true,
    })
}

/// Pointwise difference ℓ(Qⁿ/KQⁿ) = ℓ(R/KQⁿ) − ℓ(R/Qⁿ).
pub fn fiber_sequence(hk: &HilbertSequence, hs: &HilbertSequence) -> Result<HilbertSequence> {
    if hk.values.len() != hs.values.len() {
        return Err(Error::Internal(
            "fiber difference needs tables over the same range".into(),
        ));
    }
    let mut values = Vec::with_capacity(hk.values.len());
    for (a, b) in hk.values.iter().zip(&hs.values) {
        let d = a - b;
        if d.is_negative() {
            return Err(Error::Internal(
                "ℓ(R/KQ^n) < ℓ(R/Q^n): length tables are inconsistent".into(),
            ));
        }
        values.push(d);
    }
    Ok(HilbertSequence {
        kind: SequenceKind::Fiber,
        values,
        certified: hk.certified && hs.certified,
    })
}

/// One exact integer identity between fitted coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
}

impl IdentityCheck {
    pub fn new(name: impl Into<String>, lhs: BigInt, rhs: BigInt) -> Self {
        let holds = lhs == rhs;
        IdentityCheck {
            name: name.into(),
            lhs,
            rhs,
            holds,
        }
    }
}

/// The fitted coefficients of one (R, Q, K) instance and the identity
/// checks between them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoefficientReport {
    pub dimension: usize,
    /// e_0..e_d from ℓ(R/Qⁿ).
    pub e: Vec<BigInt>,
    /// g_0..g_d from ℓ(R/KQⁿ).
    pub g: Vec<BigInt>,
    /// f_0..f_{d−1} from ℓ(Qⁿ/KQⁿ).
    pub f: Vec<BigInt>,
    pub hilbert_samuel: BinomialPolynomial,
    pub hilbert_k: BinomialPolynomial,
    pub fiber: BinomialPolynomial,
    pub hs_seq: HilbertSequence,
    pub hk_seq: HilbertSequence,
    pub fiber_seq: HilbertSequence,
    pub identities: Vec<IdentityCheck>,
}

/// Fitting options; `None` fields pick the defaults below.
#[derive(Clone, Copy, Debug, Default)]
pub struct FitOptions {
    pub n_max: Option<usize>,
    pub window: Option<usize>,
    pub semigroup_bound: Option<u64>,
}

impl FitOptions {
    /// Defaults: N = max(4d + 10, 2·(max generator degree) + 10) and
    /// window w = d + 2.
    pub fn resolve(&self, ring: &Ring, q: &IdealHandle, k: &IdealHandle) -> (usize, usize) {
        let d = ring.dimension();
        let max_degree = [q, k]
            .iter()
            .flat_map(|h| match h {
                IdealHandle::Monomial { raw, .. } => {
                    raw.iter().map(|m| m.degree()).collect::<Vec<_>>()
                }
                IdealHandle::Semigroup(i) => i
                    .generators()
                    .iter()
                    .map(|g| g.iter().sum::<u64>())
                    .collect(),
            })
            .max()
            .unwrap_or(1) as usize;
        let n_max = self
            .n_max
            .unwrap_or_else(|| (4 * d + 10).max(2 * max_degree + 10));
        let window = self.window.unwrap_or(d + 2);
        (n_max, window)
    }
}

/// Tabulate all three sequences, fit all three polynomials, extract the
/// coefficient vectors and evaluate the identities between them:
/// g₀ = e₀; f_i = e_{i+1} − g_{i+1} + e_i − g_i for 0 ≤ i ≤ d−1; and,
/// when K = Q, the alternating sums g_i = e_i − e_{i−1} + … ± e₀.
pub fn extract_coefficients(
    ring: &Ring,
    q: &IdealHandle,
    k: &IdealHandle,
    opts: &FitOptions,
) -> Result<CoefficientReport> {
    let d = ring.dimension();
    if d == 0 {
        return Err(Error::ZeroDimensionalRing);
    }
    let (n_max, window) = opts.resolve(ring, q, k);

    let powers = ideal_powers(ring, q, n_max)?;
    let hk_seq = hk_sequence_with_powers(ring, &powers, k, opts.semigroup_bound)?;
    let hs_seq = hs_sequence_with_powers(ring, &powers, opts.semigroup_bound)?;
    let fiber_seq = fiber_sequence(&hk_seq, &hs_seq)?;

    let hilbert_k = fit_binomial_polynomial(&hk_seq, d, window, Basis::Samuel)?;
    let hilbert_samuel = fit_binomial_polynomial(&hs_seq, d, window, Basis::Samuel)?;
    let fiber = fit_binomial_polynomial(&fiber_seq, d - 1, window, Basis::Fiber)?;

    let e = hilbert_samuel.coeffs.clone();
    let g = hilbert_k.coeffs.clone();
    let f = fiber.coeffs.clone();

    let mut identities = Vec::new();
    identities.push(IdentityCheck::new(
        "g0_equals_e0",
        g[0].clone(),
        e[0].clone(),
    ));
    for i in 0..d {
        identities.push(IdentityCheck::new(
            format!("f{i}_from_coefficient_differences"),
            f[i].clone(),
            &e[i + 1] - &g[i + 1] + &e[i] - &g[i],
        ));
    }
    // polynomial additivity hk = hs + fiber, decided on d+2 sample points
    let mut deviation = BigInt::zero();
    for n in 0..=(d as i64 + 1) {
        deviation += (hilbert_k.evaluate(n) - hilbert_samuel.evaluate(n) - fiber.evaluate(n)).abs();
    }
    identities.push(IdentityCheck::new(
        "polynomial_additivity",
        deviation,
        BigInt::zero(),
    ));
    if q.same_ideal(k) {
        for i in 0..=d {
            let mut alternating = BigInt::zero();
            for j in 0..=i {
                let term = e[i - j].clone();
                if j % 2 == 0 {
                    alternating += term;
                } else {
                    alternating -= term;
                }
            }
            identities.push(IdentityCheck::new(
                format!("g{i}_alternating_sum_of_e"),
                g[i].clone(),
                alternating,
            ));
        }
    }

    Ok(CoefficientReport {
        dimension: d,
        e,
        g,
        f,
        hilbert_samuel,
        hilbert_k,
        fiber,
        hs_seq,
        hk_seq,
        fiber_seq,
        identities,
    })
}
