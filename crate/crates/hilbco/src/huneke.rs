//! An independent route to g₁ and g₂ through a minimal reduction.
//!
//! Given a parameter ideal J ⊆ Q with J·Qⁿ = Qⁿ⁺¹ for some n (a reduction),
//! the corrections
//!
//! ```text
//! v₀ = e₀(Q)
//! v₁ = e₀(Q) − ℓ(R/KQ) + ℓ(R/K)
//! vₙ = ℓ(KQⁿ/KJQⁿ⁻¹) − ℓ((KQⁿ⁻¹ : J)/KQⁿ⁻²)   for n ≥ 2
//! ```
//!
//! vanish for n ≫ 0 and recover the coefficients as g₁ = Σ_{n≥1} vₙ and
//! g₂ = Σ_{n≥1} (n−1)·vₙ + ℓ(R/K). The route is specific to dimension two
//! and to Cohen-Macaulay R (which the caller asserts; a cheap unmixedness
//! heuristic flags doubtful inputs). It exists to cross-check the fitted
//! coefficients through entirely different arithmetic.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::counting::nested_length;
use crate::decompose;
use crate::error::{Error, Result};
use crate::hilbert::ideal_powers;
use crate::ring::{IdealHandle, LengthOptions, Ring};

/// The correction table v₀..v_N and the index its tail vanishes from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VSequence {
    pub values: Vec<BigInt>,
    /// Least t ≥ 1 with vₙ = 0 for all computed n ≥ t; N+1 when the last
    /// entry is still nonzero.
    pub tail_zero_from: usize,
    /// ℓ(R/J) = e₀(Q) for the Cohen-Macaulay caller.
    pub e0: BigInt,
    pub l_r_k: BigInt,
    /// False when the unmixedness heuristic doubts the CM assertion.
    pub cm_heuristic_ok: bool,
}

/// First index with J·Qⁿ = Qⁿ⁺¹, or an error when none exists up to N.
fn reduction_number(
    ring: &Ring,
    j: &IdealHandle,
    powers: &[IdealHandle],
    n_max: usize,
) -> Result<usize> {
    for n in 0..n_max {
        let jqn = ring.product(j, &powers[n])?;
        if jqn.same_ideal(&powers[n + 1]) {
            return Ok(n);
        }
    }
    Err(Error::NotAReduction(n_max))
}

pub fn v_sequence(
    ring: &Ring,
    q: &IdealHandle,
    k: &IdealHandle,
    j: &IdealHandle,
    n_max: usize,
) -> Result<VSequence> {
    if !ring.is_monomial_backend() {
        return Err(Error::UnsupportedOnSemigroup("the reduction recurrence"));
    }
    if ring.dimension() != 2 {
        return Err(Error::UnsupportedDimension(ring.dimension()));
    }
    let opts = LengthOptions::default();
    if !ring.is_parameter_ideal(j, &opts)? {
        return Err(Error::NotParameterIdeal(
            "J must be a parameter ideal".into(),
        ));
    }
    if !ring.ideal_contains(q, j)? {
        return Err(Error::NotParameterIdeal("J must be contained in Q".into()));
    }
    if !ring.ideal_contains(k, q)? {
        return Err(Error::QNotContainedInK);
    }

    let powers = ideal_powers(ring, q, n_max.max(1))?;
    reduction_number(ring, j, &powers, n_max)?;

    let defining = ring.defining_ideal().expect("monomial backend");
    let cm_heuristic_ok = if defining.is_unit() {
        false
    } else {
        let primes = decompose::associated_primes(defining)?;
        let d = ring.dimension();
        primes.iter().all(|p| defining.vars() - p.len() == d)
    };

    let e0 = ring.length_of_quotient(j, &opts)?;
    let l_r_k = ring.length_of_quotient(k, &opts)?;

    let mut values = Vec::with_capacity(n_max + 1);
    values.push(e0.clone());
    if n_max >= 1 {
        let kq = ring.product(k, &powers[1])?;
        let l_r_kq = ring.length_of_quotient(&kq, &opts)?;
        values.push(&e0 - l_r_kq + &l_r_k);
    }
    for n in 2..=n_max {
        let kqn = ring.product(k, &powers[n])?;
        let kqn1 = ring.product(k, &powers[n - 1])?;
        let kqn2 = ring.product(k, &powers[n - 2])?;
        let kjqn1 = ring.product(&kqn1, j)?;
        // ℓ(KQⁿ/KJQⁿ⁻¹), a difference of Artinian colengths
        let first =
            ring.length_of_quotient(&kjqn1, &opts)? - ring.length_of_quotient(&kqn, &opts)?;
        // ℓ((KQⁿ⁻¹ : J)/KQⁿ⁻²), finite exactly when the route applies
        let colon = ring.colon(&kqn1, j)?;
        let second = nested_length(
            kqn2.lift().expect("monomial backend"),
            colon.lift().expect("monomial backend"),
        )?;
        values.push(first - second);
    }

    let mut tail_zero_from = values.len();
    while tail_zero_from > 1 && values[tail_zero_from - 1].is_zero() {
        tail_zero_from -= 1;
    }

    Ok(VSequence {
        values,
        tail_zero_from,
        e0,
        l_r_k,
        cm_heuristic_ok,
    })
}

/// g₁ = Σ_{n≥1} vₙ and g₂ = Σ_{n≥1} (n−1)·vₙ + ℓ(R/K). The table must
/// have a vanished tail; v₀ is stored but never summed.
pub fn g12_from_v(v: &VSequence, l_r_k: &BigInt) -> Result<(BigInt, BigInt)> {
    let n_max = v.values.len().saturating_sub(1);
    if v.tail_zero_from > n_max {
        return Err(Error::NonStabilizedTail(n_max));
    }
    let mut g1 = BigInt::zero();
    let mut g2 = l_r_k.clone();
    for (n, value) in v.values.iter().enumerate().skip(1) {
        g1 += value;
        g2 += BigInt::from(n as i64 - 1) * value;
    }
    Ok((g1, g2))
}
