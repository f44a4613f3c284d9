//! Primary decomposition of monomial ideals, associated primes, dimension
//! and the unmixed component.
//!
//! The decomposition is the classic splitting: while some generator factors
//! as u·v with u, v coprime non-units, replace the ideal by the pair
//! I + (u), I + (v). Components whose generators are all pure powers are
//! primary to the prime spanned by their support. Same-radical components
//! are merged by intersection and redundant ones dropped, so the result is
//! an irredundant primary decomposition with one component per associated
//! prime.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// One primary component together with its radical, a set of variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimaryComponent {
    /// Sorted indices of the variables spanning the associated prime.
    pub radical: Vec<usize>,
    pub ideal: MonomialIdeal,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimaryDecomposition {
    pub components: Vec<PrimaryComponent>,
}

/// Support of a monomial ideal's radical once all generators are pure
/// powers; for general ideals, the set of variables with a pure-power
/// generator.
fn pure_power_vars(ideal: &MonomialIdeal) -> Vec<usize> {
    (0..ideal.vars())
        .filter(|&j| ideal.pure_power_bound(j).is_some())
        .collect()
}

/// The standard monomial-primary test: every variable occurring in a
/// generator must also occur as a pure power.
pub fn is_primary(ideal: &MonomialIdeal) -> bool {
    if !ideal.is_proper() {
        return false;
    }
    let powers = pure_power_vars(ideal);
    ideal.generators().iter().all(|g| {
        g.exponents()
            .iter()
            .enumerate()
            .all(|(j, &e)| e == 0 || powers.contains(&j))
    })
}

/// First generator (in the canonical order) that mixes two variables,
/// split into the pure power of its first variable and the rest.
fn splitting_pair(ideal: &MonomialIdeal) -> Option<(Monomial, Monomial)> {
    for g in ideal.generators() {
        if g.pure_power_var().is_none() && !g.is_one() {
            let j = g
                .exponents()
                .iter()
                .position(|&e| e > 0)
                .expect("mixed generator is not 1");
            let mut u = vec![0; g.vars()];
            u[j] = g.exponents()[j];
            let u = Monomial::new(u);
            let v = g.colon_by(&u);
            return Some((u, v));
        }
    }
    None
}

pub fn primary_decompose(ideal: &MonomialIdeal) -> Result<PrimaryDecomposition> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let vars = ideal.vars();

    let mut work = vec![ideal.clone()];
    let mut pieces: Vec<MonomialIdeal> = Vec::new();
    while let Some(current) = work.pop() {
        match splitting_pair(&current) {
            Some((u, v)) => {
                let with_u = current.sum(&MonomialIdeal::new(vars, vec![u]));
                let with_v = current.sum(&MonomialIdeal::new(vars, vec![v]));
                work.push(with_u);
                work.push(with_v);
            }
            None => pieces.push(current),
        }
    }

    // merge components sharing a radical; the intersection of primary
    // ideals with the same radical is again primary
    pieces.sort_by_key(|p| (pure_power_vars(p), p.generators().to_vec()));
    pieces.dedup();
    let mut merged: Vec<(Vec<usize>, MonomialIdeal)> = Vec::new();
    for piece in pieces {
        let radical = pure_power_vars(&piece);
        match merged.iter_mut().find(|(r, _)| *r == radical) {
            Some((_, existing)) => *existing = existing.intersect(&piece),
            None => merged.push((radical, piece)),
        }
    }

    // drop components not needed for the intersection
    let mut keep: Vec<bool> = vec![true; merged.len()];
    loop {
        let mut removed = false;
        for i in 0..merged.len() {
            if !keep[i] {
                continue;
            }
            let mut inter: Option<MonomialIdeal> = None;
            for (j, (_, c)) in merged.iter().enumerate() {
                if j == i || !keep[j] {
                    continue;
                }
                inter = Some(match inter {
                    None => c.clone(),
                    Some(prev) => prev.intersect(c),
                });
            }
            if let Some(inter) = inter {
                if *ideal == inter {
                    keep[i] = false;
                    removed = true;
                    break;
                }
            }
        }
        if !removed {
            break;
        }
    }

    let mut components: Vec<PrimaryComponent> = merged
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|((radical, ideal), _)| PrimaryComponent { radical, ideal })
        .collect();
    components.sort_by(|a, b| (a.radical.len(), &a.radical).cmp(&(b.radical.len(), &b.radical)));

    let decomposition = PrimaryDecomposition { components };
    debug_assert_eq!(&decomposition.intersection(vars), ideal);
    Ok(decomposition)
}

impl PrimaryDecomposition {
    /// Intersection of all components (equals the decomposed ideal).
    pub fn intersection(&self, vars: usize) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(vars);
        for c in &self.components {
            acc = acc.intersect(&c.ideal);
        }
        acc
    }
}

/// Radicals of the irredundant components, each a sorted set of variables.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<Vec<usize>>> {
    Ok(primary_decompose(ideal)?
        .components
        .into_iter()
        .map(|c| c.radical)
        .collect())
}

/// Krull dimension of the quotient by a proper monomial ideal.
pub fn dimension(ideal: &MonomialIdeal) -> Result<usize> {
    let vars = ideal.vars();
    let primes = associated_primes(ideal)?;
    Ok(primes
        .iter()
        .map(|p| vars - p.len())
        .max()
        .expect("a proper ideal has at least one associated prime"))
}

/// The unmixed component of a proper monomial ideal: the intersection of
/// the primary components whose prime has maximal-dimensional quotient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnmixedComponent {
    /// Ambient ideal cutting out the component; contains the input ideal.
    pub lift: MonomialIdeal,
    /// True when the lift equals the input ideal, i.e. the quotient module
    /// lift/I is zero (every component already had maximal dimension).
    pub is_zero_module: bool,
}

pub fn unmixed_component(ideal: &MonomialIdeal) -> Result<UnmixedComponent> {
    let vars = ideal.vars();
    let decomposition = primary_decompose(ideal)?;
    let dim = decomposition
        .components
        .iter()
        .map(|c| vars - c.radical.len())
        .max()
        .expect("proper ideal");
    let mut lift = MonomialIdeal::unit(vars);
    for c in &decomposition.components {
        if vars - c.radical.len() == dim {
            lift = lift.intersect(&c.ideal);
        }
    }
    let is_zero_module = lift == *ideal;
    Ok(UnmixedComponent {
        lift,
        is_zero_module,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(vars: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(
            vars,
            gens.iter().map(|g| Monomial::new(g.to_vec())).collect(),
        )
    }

    #[test]
    fn splits_the_running_example() {
        // (yz, x^2 y, y^3) = (y) ∩ (x^2, y^3, z)
        let i = ideal(3, &[&[0, 1, 1], &[2, 1, 0], &[0, 3, 0]]);
        let d = primary_decompose(&i).unwrap();
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.components[0].radical, vec![1]);
        assert_eq!(d.components[0].ideal, ideal(3, &[&[0, 1, 0]]));
        assert_eq!(d.components[1].radical, vec![0, 1, 2]);
        assert_eq!(
            d.components[1].ideal,
            ideal(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 1]])
        );
        assert_eq!(d.intersection(3), i);
    }

    #[test]
    fn already_primary_is_returned_as_is() {
        let i = ideal(2, &[&[2, 0], &[0, 1]]);
        let d = primary_decompose(&i).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].ideal, i);
        assert!(is_primary(&i));
    }

    #[test]
    fn principal_square_free_splits_into_primes() {
        // (xy) = (x) ∩ (y)
        let i = ideal(2, &[&[1, 1]]);
        let d = primary_decompose(&i).unwrap();
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.components[0].radical, vec![0]);
        assert_eq!(d.components[1].radical, vec![1]);
    }

    #[test]
    fn unit_ideal_is_rejected() {
        assert_eq!(
            primary_decompose(&MonomialIdeal::unit(2)),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn associated_primes_examples() {
        let i = ideal(3, &[&[0, 1, 1], &[2, 1, 0], &[0, 3, 0]]);
        assert_eq!(associated_primes(&i).unwrap(), vec![vec![1], vec![0, 1, 2]]);
        let xy = ideal(2, &[&[1, 1]]);
        assert_eq!(associated_primes(&xy).unwrap(), vec![vec![0], vec![1]]);
        let artinian = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(associated_primes(&artinian).unwrap(), vec![vec![0, 1]]);
    }

    #[test]
    fn dimension_examples() {
        let i = ideal(3, &[&[0, 1, 1], &[2, 1, 0], &[0, 3, 0]]);
        assert_eq!(dimension(&i).unwrap(), 2);
        assert_eq!(dimension(&MonomialIdeal::zero(3)).unwrap(), 3);
        let artinian = ideal(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(dimension(&artinian).unwrap(), 0);
        assert_eq!(dimension(&MonomialIdeal::unit(2)), Err(Error::UnitIdeal));
    }

    #[test]
    fn zero_ideal_is_its_own_prime() {
        let z = MonomialIdeal::zero(2);
        let d = primary_decompose(&z).unwrap();
        assert_eq!(d.components.len(), 1);
        assert!(d.components[0].radical.is_empty());
        assert!(d.components[0].ideal.is_zero());
    }

    #[test]
    fn unmixed_component_examples() {
        // lift of U is (y) for the running example
        let i = ideal(3, &[&[0, 1, 1], &[2, 1, 0], &[0, 3, 0]]);
        let u = unmixed_component(&i).unwrap();
        assert_eq!(u.lift, ideal(3, &[&[0, 1, 0]]));
        assert!(!u.is_zero_module);
        // an unmixed ideal has zero module
        let xy = ideal(2, &[&[1, 1]]);
        let u = unmixed_component(&xy).unwrap();
        assert!(u.is_zero_module);
        assert_eq!(u.lift, xy);
        // an Artinian ideal has a single maximal component
        let a = ideal(2, &[&[2, 0], &[0, 2]]);
        let u = unmixed_component(&a).unwrap();
        assert!(u.is_zero_module);
    }

    #[test]
    fn decomposition_is_irredundant_on_spot_checks() {
        let cases = [
            ideal(3, &[&[0, 1, 1], &[2, 1, 0], &[0, 3, 0]]),
            ideal(2, &[&[2, 0], &[1, 1]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
            ideal(2, &[&[3, 0], &[2, 1], &[0, 3]]),
        ];
        for i in cases {
            let d = primary_decompose(&i).unwrap();
            assert_eq!(d.intersection(i.vars()), i);
            for skip in 0..d.components.len() {
                let mut partial = MonomialIdeal::unit(i.vars());
                for (j, c) in d.components.iter().enumerate() {
                    if j != skip {
                        partial = partial.intersect(&c.ideal);
                    }
                }
                assert_ne!(partial, i, "component {skip} is redundant for {i:?}");
            }
            for c in &d.components {
                assert!(is_primary(&c.ideal), "component {c:?} not primary");
            }
        }
    }
}
