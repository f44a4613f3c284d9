//! Exact length counting for monomial quotients.
//!
//! The length of k[x]/I is the number of standard monomials (monomials not
//! in I). Three independent routes are provided:
//!
//! * [`colength`] — the production route. It scans the first axis and
//!   maintains the projected antichain incrementally, so the work is
//!   proportional to the staircase rather than to the full box.
//! * [`colength_by_box`] — plain enumeration of the box cut out by the
//!   minimal pure-power generators, one divisibility test per cell.
//! * [`colength_by_subsets`] — inclusion–exclusion over generator subsets
//!   with memoized lcm counts.
//!
//! The routes are cross-checked against each other in the test suites.
//! [`nested_length`] counts ℓ(J/I) for nested ideals I ⊆ J, which stays
//! finite in useful cases where ℓ(R/I) itself is infinite.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Number of standard monomials of `ideal`; requires an Artinian quotient.
pub fn colength(ideal: &MonomialIdeal) -> Result<BigInt> {
    if !ideal.is_artinian() {
        return Err(Error::InfiniteLength);
    }
    let gens: Vec<&[u32]> = ideal.generators().iter().map(|g| g.exponents()).collect();
    Ok(count_standard(ideal.vars(), &gens))
}

/// Staircase scan: fix the exponent of the first variable, keep the
/// projected antichain of active generator tails, recurse on the rest.
fn count_standard(width: usize, gens: &[&[u32]]) -> BigInt {
    if width == 0 {
        // k itself: one standard monomial unless the ideal is the unit ideal.
        return if gens.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if width == 1 {
        // an antichain in one variable is a single pure power
        let b = gens
            .iter()
            .map(|g| g[0])
            .min()
            .expect("artinian in one var");
        return BigInt::from(b);
    }
    let bound = gens
        .iter()
        .filter(|g| g[1..].iter().all(|&e| e == 0))
        .map(|g| g[0])
        .min()
        .expect("artinian: pure power of the first variable exists");

    // bucket generator tails by their first exponent
    let mut buckets: Vec<Vec<&[u32]>> = vec![Vec::new(); bound as usize];
    for g in gens {
        if g[0] < bound {
            buckets[g[0] as usize].push(&g[1..]);
        }
    }

    let mut active: Vec<&[u32]> = Vec::new();
    let mut total = BigInt::zero();
    for e in 0..bound as usize {
        for tail in buckets[e].drain(..) {
            insert_into_antichain(&mut active, tail);
        }
        total += count_standard(width - 1, &active);
    }
    total
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn insert_into_antichain<'a>(chain: &mut Vec<&'a [u32]>, item: &'a [u32]) {
    if chain.iter().any(|c| divides(c, item)) {
        return;
    }
    chain.retain(|c| !divides(item, c));
    chain.push(item);
}

/// Reference route: walk every cell of the pure-power box and test
/// divisibility against each generator. Deliberately simple.
pub fn colength_by_box(ideal: &MonomialIdeal) -> Result<BigInt> {
    let bounds = ideal.standard_box().ok_or(Error::InfiniteLength)?;
    let mut count = 0u64;
    let mut point = vec![0u32; ideal.vars()];
    'outer: loop {
        let inside = ideal
            .generators()
            .iter()
            .any(|g| g.exponents().iter().zip(&point).all(|(a, b)| a <= b));
        if !inside {
            count += 1;
        }
        // odometer increment over the box
        for j in 0..point.len() {
            point[j] += 1;
            if point[j] < bounds[j] {
                continue 'outer;
            }
            point[j] = 0;
        }
        break;
    }
    // a zero-width bound means the loop visited the single empty point once
    if bounds.contains(&0) {
        return Ok(BigInt::zero());
    }
    Ok(BigInt::from(count))
}

/// Reference route: |box| − |box ∩ I| with the intersection expanded by
/// inclusion–exclusion over generator subsets. Lcm counts are memoized.
pub fn colength_by_subsets(ideal: &MonomialIdeal) -> Result<BigInt> {
    let bounds = ideal.standard_box().ok_or(Error::InfiniteLength)?;
    let volume: BigInt = bounds.iter().map(|&b| BigInt::from(b)).product();
    let gens: Vec<&Monomial> = ideal.generators().iter().collect();
    let mut memo: HashMap<Vec<u32>, BigInt> = HashMap::new();
    let mut in_ideal = BigInt::zero();
    // DFS over subsets; a subset whose lcm already leaves the box contributes
    // nothing, and neither does any superset, so that branch is pruned.
    let mut stack: Vec<(usize, Vec<u32>, bool)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        stack.push((i, g.exponents().to_vec(), true));
    }
    while let Some((i, lcm, positive)) = stack.pop() {
        let multiples = memo
            .entry(lcm.clone())
            .or_insert_with(|| {
                lcm.iter()
                    .zip(&bounds)
                    .map(|(&l, &b)| BigInt::from(b.saturating_sub(l)))
                    .product()
            })
            .clone();
        if multiples.is_zero() {
            continue;
        }
        if positive {
            in_ideal += &multiples;
        } else {
            in_ideal -= &multiples;
        }
        for (j, g) in gens.iter().enumerate().skip(i + 1) {
            let next: Vec<u32> = lcm
                .iter()
                .zip(g.exponents())
                .map(|(&a, &b)| a.max(b))
                .collect();
            stack.push((j, next, !positive));
        }
    }
    Ok(volume - in_ideal)
}

/// ℓ(J/I) for nested monomial ideals I ⊆ J.
///
/// Finite exactly when I : g is Artinian for every minimal generator g of
/// J. When I itself is Artinian this is the difference of two colengths;
/// otherwise the subset formula of [`nested_length_by_subsets`] is used.
pub fn nested_length(inner: &MonomialIdeal, outer: &MonomialIdeal) -> Result<BigInt> {
    debug_assert!(outer.contains_ideal(inner), "nested_length needs I ⊆ J");
    if inner.is_artinian() {
        return Ok(colength(inner)? - colength(outer)?);
    }
    nested_length_by_subsets(inner, outer)
}

/// ℓ(J/I) by inclusion–exclusion over the generators of J.
///
/// The monomials of J \ I are the union over generators g of the sets
/// { g·u : u ∉ I : g }; the intersection over a subset T of generators is
/// the same set for lcm(T), so the count is
/// Σ_{∅≠T} (−1)^{|T|+1} · colength(I : lcm(T)).
pub fn nested_length_by_subsets(inner: &MonomialIdeal, outer: &MonomialIdeal) -> Result<BigInt> {
    debug_assert!(outer.contains_ideal(inner), "nested_length needs I ⊆ J");
    let gens: Vec<&Monomial> = outer.generators().iter().collect();
    for g in &gens {
        if !inner.colon_monomial(g).is_artinian() {
            return Err(Error::InfiniteLength);
        }
    }
    let mut memo: HashMap<Monomial, BigInt> = HashMap::new();
    let mut total = BigInt::zero();
    let mut stack: Vec<(usize, Monomial, bool)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        stack.push((i, (*g).clone(), true));
    }
    while let Some((i, lcm, positive)) = stack.pop() {
        let term = match memo.get(&lcm) {
            Some(t) => t.clone(),
            None => {
                let t = colength(&inner.colon_monomial(&lcm))?;
                memo.insert(lcm.clone(), t.clone());
                t
            }
        };
        // supersets only enlarge the lcm, hence only shrink the colength
        if term.is_zero() {
            continue;
        }
        if positive {
            total += &term;
        } else {
            total -= &term;
        }
        for (j, g) in gens.iter().enumerate().skip(i + 1) {
            stack.push((j, lcm.lcm(g), !positive));
        }
    }
    Ok(total)
}

/// Enumerate the standard monomials of an Artinian ideal (test oracle).
pub fn standard_monomials(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    let bounds = ideal.standard_box().ok_or(Error::InfiniteLength)?;
    let mut out = Vec::new();
    if bounds.contains(&0) {
        return Ok(out);
    }
    let mut point = vec![0u32; ideal.vars()];
    'outer: loop {
        let mono = Monomial::new(point.clone());
        if !ideal.contains_monomial(&mono) {
            out.push(mono);
        }
        for j in 0..point.len() {
            point[j] += 1;
            if point[j] < bounds[j] {
                continue 'outer;
            }
            point[j] = 0;
        }
        break;
    }
    Ok(out)
}
