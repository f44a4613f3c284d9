//! A uniform facade over the two ring backends: polynomial rings modulo a
//! monomial ideal, and affine semigroup rings.
//!
//! Ideals of a monomial quotient R = k[x]/I₀ are stored as ambient lifts
//! that always contain I₀, so equality of R-ideals is plain equality of
//! lifted minimal generators and no quotient-ring normal forms are needed.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::counting::{colength, nested_length};
use crate::decompose;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::semigroup::{AffineSemigroup, SemigroupIdeal};

/// How a local ring is presented.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Presentation {
    /// k[x₁..x_m] / I₀ for a proper monomial ideal I₀ (possibly zero).
    MonomialQuotient {
        vars: Vec<String>,
        defining: MonomialIdeal,
    },
    /// k[[S]] for a finitely generated S ⊆ ℕ^m.
    SemigroupRing { semigroup: AffineSemigroup },
}

/// A local ring with its presentation and (Krull) dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ring {
    presentation: Presentation,
    dimension: usize,
}

/// An ideal of a ring, stored per backend. For the monomial backend the
/// original generators are kept alongside the I₀-saturated lift; minimal
/// generator counts are computed from the former, lengths from the latter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IdealHandle {
    Monomial {
        raw: Vec<Monomial>,
        lift: MonomialIdeal,
    },
    Semigroup(SemigroupIdeal),
}

impl IdealHandle {
    pub fn lift(&self) -> Option<&MonomialIdeal> {
        match self {
            IdealHandle::Monomial { lift, .. } => Some(lift),
            IdealHandle::Semigroup(_) => None,
        }
    }

    pub fn semigroup_ideal(&self) -> Option<&SemigroupIdeal> {
        match self {
            IdealHandle::Semigroup(i) => Some(i),
            IdealHandle::Monomial { .. } => None,
        }
    }

    /// Equality as ideals of R (not of the presented generator lists).
    pub fn same_ideal(&self, other: &IdealHandle) -> bool {
        match (self, other) {
            (IdealHandle::Monomial { lift: a, .. }, IdealHandle::Monomial { lift: b, .. }) => {
                a == b
            }
            (IdealHandle::Semigroup(a), IdealHandle::Semigroup(b)) => a == b,
            _ => false,
        }
    }
}

/// Options threaded into length computations on the semigroup backend.
#[derive(Clone, Copy, Debug, Default)]
pub struct LengthOptions {
    /// Enumeration bound override; `None` picks the default for the ideal.
    pub semigroup_bound: Option<u64>,
    /// Power index n when the ideal is a product involving Qⁿ; feeds the
    /// default bound 40 · (max generator entry) · (n + 1).
    pub power_hint: u32,
}

impl LengthOptions {
    pub fn with_power(n: u32) -> Self {
        LengthOptions {
            semigroup_bound: None,
            power_hint: n,
        }
    }

    pub fn bound_for(&self, semigroup: &AffineSemigroup) -> u64 {
        self.semigroup_bound.unwrap_or_else(|| {
            40 * semigroup.max_generator_entry().max(1) * (self.power_hint as u64 + 1)
        })
    }
}

impl Ring {
    /// The polynomial ring k[vars] presented as a quotient by (0).
    pub fn polynomial(vars: Vec<String>) -> Ring {
        let defining = MonomialIdeal::zero(vars.len());
        Ring::monomial_quotient(vars, defining).expect("zero ideal is proper")
    }

    pub fn monomial_quotient(vars: Vec<String>, defining: MonomialIdeal) -> Result<Ring> {
        if vars.len() != defining.vars() {
            return Err(Error::AmbientMismatch(vars.len(), defining.vars()));
        }
        if defining.is_unit() {
            return Err(Error::ImproperDefiningIdeal);
        }
        let dimension = decompose::dimension(&defining)?;
        Ok(Ring {
            presentation: Presentation::MonomialQuotient { vars, defining },
            dimension,
        })
    }

    pub fn semigroup_ring(semigroup: AffineSemigroup) -> Ring {
        let dimension = semigroup.lattice_rank();
        Ring {
            presentation: Presentation::SemigroupRing { semigroup },
            dimension,
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_monomial_backend(&self) -> bool {
        matches!(self.presentation, Presentation::MonomialQuotient { .. })
    }

    pub fn ambient_vars(&self) -> usize {
        match &self.presentation {
            Presentation::MonomialQuotient { defining, .. } => defining.vars(),
            Presentation::SemigroupRing { semigroup } => semigroup.dims(),
        }
    }

    pub fn var_names(&self) -> Option<&[String]> {
        match &self.presentation {
            Presentation::MonomialQuotient { vars, .. } => Some(vars),
            Presentation::SemigroupRing { .. } => None,
        }
    }

    pub fn defining_ideal(&self) -> Option<&MonomialIdeal> {
        match &self.presentation {
            Presentation::MonomialQuotient { defining, .. } => Some(defining),
            Presentation::SemigroupRing { .. } => None,
        }
    }

    pub fn semigroup(&self) -> Option<&AffineSemigroup> {
        match &self.presentation {
            Presentation::SemigroupRing { semigroup } => Some(semigroup),
            Presentation::MonomialQuotient { .. } => None,
        }
    }

    /// Build an ideal handle from monomial generators (monomial backend).
    pub fn ideal_from_monomials(&self, gens: Vec<Monomial>) -> Result<IdealHandle> {
        let Presentation::MonomialQuotient { defining, .. } = &self.presentation else {
            return Err(Error::UnsupportedOnSemigroup("monomial ideal construction"));
        };
        for g in &gens {
            if g.vars() != defining.vars() {
                return Err(Error::AmbientMismatch(g.vars(), defining.vars()));
            }
        }
        let raw = MonomialIdeal::new(defining.vars(), gens);
        let lift = raw.sum(defining);
        Ok(IdealHandle::Monomial {
            raw: raw.generators().to_vec(),
            lift,
        })
    }

    /// Build an ideal handle from semigroup elements (semigroup backend).
    pub fn ideal_from_vectors(&self, gens: Vec<Vec<u64>>) -> Result<IdealHandle> {
        let Presentation::SemigroupRing { semigroup } = &self.presentation else {
            return Err(Error::UnsupportedOnSemigroup("vector ideal construction"));
        };
        Ok(IdealHandle::Semigroup(SemigroupIdeal::new(
            semigroup, gens,
        )?))
    }

    /// The unit ideal handle (Q⁰).
    pub fn unit_ideal(&self) -> IdealHandle {
        match &self.presentation {
            Presentation::MonomialQuotient { defining, .. } => IdealHandle::Monomial {
                raw: vec![Monomial::one(defining.vars())],
                lift: MonomialIdeal::unit(defining.vars()),
            },
            Presentation::SemigroupRing { semigroup } => IdealHandle::Semigroup(
                SemigroupIdeal::new(semigroup, vec![vec![0; semigroup.dims()]])
                    .expect("zero vector lies in every semigroup"),
            ),
        }
    }

    /// Product of two ideals of R. On the monomial backend the lift of the
    /// product is the product of lifts plus I₀.
    pub fn product(&self, a: &IdealHandle, b: &IdealHandle) -> Result<IdealHandle> {
        match (&self.presentation, a, b) {
            (
                Presentation::MonomialQuotient { defining, .. },
                IdealHandle::Monomial { raw: ra, lift: la },
                IdealHandle::Monomial { raw: rb, lift: lb },
            ) => {
                let raw_ideal = MonomialIdeal::new(
                    defining.vars(),
                    ra.iter()
                        .flat_map(|g| rb.iter().map(move |h| g.times(h)))
                        .collect(),
                );
                let lift = la.product(lb).sum(defining);
                Ok(IdealHandle::Monomial {
                    raw: raw_ideal.generators().to_vec(),
                    lift,
                })
            }
            (
                Presentation::SemigroupRing { .. },
                IdealHandle::Semigroup(a),
                IdealHandle::Semigroup(b),
            ) => Ok(IdealHandle::Semigroup(a.product(b)?)),
            _ => Err(Error::Internal("mixed backends in ideal product".into())),
        }
    }

    /// Sum of two ideals of R.
    pub fn sum(&self, a: &IdealHandle, b: &IdealHandle) -> Result<IdealHandle> {
        match (a, b) {
            (
                IdealHandle::Monomial { raw: ra, lift: la },
                IdealHandle::Monomial { raw: rb, lift: lb },
            ) => {
                let mut raw = ra.clone();
                raw.extend(rb.iter().cloned());
                let raw = MonomialIdeal::new(self.ambient_vars(), raw);
                Ok(IdealHandle::Monomial {
                    raw: raw.generators().to_vec(),
                    lift: la.sum(lb),
                })
            }
            (IdealHandle::Semigroup(a), IdealHandle::Semigroup(b)) => {
                Ok(IdealHandle::Semigroup(a.sum(b)?))
            }
            _ => Err(Error::Internal("mixed backends in ideal sum".into())),
        }
    }

    /// Intersection (monomial backend only).
    pub fn intersect(&self, a: &IdealHandle, b: &IdealHandle) -> Result<IdealHandle> {
        match (a, b) {
            (IdealHandle::Monomial { lift: la, .. }, IdealHandle::Monomial { lift: lb, .. }) => {
                let lift = la.intersect(lb);
                Ok(IdealHandle::Monomial {
                    raw: lift.generators().to_vec(),
                    lift,
                })
            }
            _ => Err(Error::UnsupportedOnSemigroup("ideal intersection")),
        }
    }

    /// Colon of ideals (monomial backend only). The lift of the colon is
    /// the colon of the lifts, which already contains I₀.
    pub fn colon(&self, a: &IdealHandle, b: &IdealHandle) -> Result<IdealHandle> {
        match (a, b) {
            (IdealHandle::Monomial { lift: la, .. }, IdealHandle::Monomial { lift: lb, .. }) => {
                let lift = la.colon_ideal(lb)?;
                Ok(IdealHandle::Monomial {
                    raw: lift.generators().to_vec(),
                    lift,
                })
            }
            _ => Err(Error::UnsupportedOnSemigroup("ideal colon")),
        }
    }

    /// nth power of an ideal of R.
    pub fn power(&self, a: &IdealHandle, n: u32) -> Result<IdealHandle> {
        let mut acc = self.unit_ideal();
        let mut k = 0;
        while k < n {
            acc = self.product(&acc, a)?;
            k += 1;
        }
        Ok(acc)
    }

    /// Containment of R-ideals.
    pub fn ideal_contains(&self, outer: &IdealHandle, inner: &IdealHandle) -> Result<bool> {
        match (outer, inner) {
            (IdealHandle::Monomial { lift: lo, .. }, IdealHandle::Monomial { lift: li, .. }) => {
                Ok(lo.contains_ideal(li))
            }
            (IdealHandle::Semigroup(o), IdealHandle::Semigroup(i)) => {
                let bound = 4
                    * self
                        .semigroup()
                        .map(|s| s.max_generator_entry())
                        .unwrap_or(1)
                        .max(1)
                    * (1 + i
                        .generators()
                        .iter()
                        .flat_map(|g| g.iter().copied())
                        .max()
                        .unwrap_or(0));
                for g in i.generators() {
                    if !o.contains(g, bound)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            _ => Err(Error::Internal("mixed backends in containment".into())),
        }
    }

    /// Is the quotient R/I Artinian, i.e. is I primary to the maximal ideal?
    pub fn is_m_primary(&self, ideal: &IdealHandle, opts: &LengthOptions) -> Result<bool> {
        match ideal {
            IdealHandle::Monomial { lift, .. } => Ok(lift.is_artinian() && lift.is_proper()),
            IdealHandle::Semigroup(i) => {
                if i.is_zero() || i.is_unit() {
                    return Ok(false);
                }
                let bound = opts.bound_for(self.semigroup().expect("semigroup backend"));
                match i.colength(bound) {
                    Ok(c) if c.certified => Ok(true),
                    Ok(c) => Err(Error::Uncertified {
                        bound: c.bound,
                        retries: 3,
                    }),
                    Err(e) => Err(e),
                }
            }
        }
    }

    /// ℓ(R/I) for an m-primary ideal I.
    pub fn length_of_quotient(&self, ideal: &IdealHandle, opts: &LengthOptions) -> Result<BigInt> {
        match ideal {
            IdealHandle::Monomial { lift, .. } => {
                if !lift.is_artinian() {
                    return Err(Error::InfiniteLength);
                }
                colength(lift)
            }
            IdealHandle::Semigroup(i) => {
                if i.is_unit() {
                    return Ok(BigInt::zero());
                }
                let bound = opts.bound_for(self.semigroup().expect("semigroup backend"));
                let count = i.colength(bound)?;
                if !count.certified {
                    return Err(Error::Uncertified {
                        bound: count.bound,
                        retries: 3,
                    });
                }
                Ok(count.value)
            }
        }
    }

    /// Minimal number of generators of the image of the ideal in R.
    ///
    /// Monomial criterion: a presented generator is redundant exactly when
    /// it lies in I₀ or in the ideal generated by the other presented
    /// generators together with I₀.
    pub fn minimal_generator_count(&self, ideal: &IdealHandle) -> usize {
        match ideal {
            IdealHandle::Monomial { raw, .. } => {
                let defining = self.defining_ideal().expect("monomial backend");
                let mut count = 0;
                for (i, g) in raw.iter().enumerate() {
                    if defining.contains_monomial(g) {
                        continue;
                    }
                    let mut others: Vec<Monomial> = raw
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != i)
                        .map(|(_, h)| h.clone())
                        .collect();
                    others.extend(defining.generators().iter().cloned());
                    let span = MonomialIdeal::new(defining.vars(), others);
                    if !span.contains_monomial(g) {
                        count += 1;
                    }
                }
                count
            }
            IdealHandle::Semigroup(i) => i.generators().len(),
        }
    }

    /// Q is a parameter ideal when it is m-primary and minimally generated
    /// by exactly dim R elements.
    pub fn is_parameter_ideal(&self, q: &IdealHandle, opts: &LengthOptions) -> Result<bool> {
        if !self.is_m_primary(q, opts)? {
            return Ok(false);
        }
        Ok(self.minimal_generator_count(q) == self.dimension)
    }

    /// New presentation of R/(x) for a monomial x; ideal handles must be
    /// pushed forward by the caller.
    pub fn reduce_mod_element(&self, x: &Monomial) -> Result<Ring> {
        let Presentation::MonomialQuotient { vars, defining } = &self.presentation else {
            return Err(Error::UnsupportedOnSemigroup("reduction modulo an element"));
        };
        if x.is_one() {
            return Err(Error::UnitElement);
        }
        if defining.contains_monomial(x) {
            return Err(Error::ZeroElement);
        }
        let extended = defining.sum(&MonomialIdeal::new(defining.vars(), vec![x.clone()]));
        Ring::monomial_quotient(vars.clone(), extended)
    }

    /// ℓ(0 :_R x) = ℓ((I₀ : x)/I₀) for a monomial x.
    pub fn torsion_length(&self, x: &Monomial) -> Result<BigInt> {
        let Presentation::MonomialQuotient { defining, .. } = &self.presentation else {
            return Err(Error::UnsupportedOnSemigroup("torsion length"));
        };
        let annihilator = defining.colon_monomial(x);
        nested_length(defining, &annihilator)
    }

    /// ℓ(H⁰_m(K)) = ℓ(K ∩ H⁰_m(R)), computed from the saturation of I₀.
    pub fn h0_length_of_ideal(&self, k: &IdealHandle) -> Result<BigInt> {
        match (&self.presentation, k) {
            (
                Presentation::MonomialQuotient { defining, .. },
                IdealHandle::Monomial { lift, .. },
            ) => {
                let maximal = MonomialIdeal::maximal(defining.vars());
                let saturation = defining.saturate(&maximal)?;
                let target = lift.intersect(&saturation);
                nested_length(defining, &target)
            }
            // a semigroup ring is a domain, so H⁰_m vanishes
            (Presentation::SemigroupRing { .. }, IdealHandle::Semigroup(_)) => Ok(BigInt::zero()),
            _ => Err(Error::Internal("mixed backends in H0 length".into())),
        }
    }

    /// Render an ideal for reports.
    pub fn render_ideal(&self, ideal: &IdealHandle) -> Vec<String> {
        match (ideal, self.var_names()) {
            (IdealHandle::Monomial { raw, .. }, Some(names)) => {
                raw.iter().map(|g| g.display_with(names)).collect()
            }
            (IdealHandle::Semigroup(i), _) => i
                .generators()
                .iter()
                .map(|g| {
                    format!(
                        "[{}]",
                        g.iter()
                            .map(|e| e.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                })
                .collect(),
            _ => Vec::new(),
        }
    }
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

    fn e3_ring() -> Ring {
        let defining = MonomialIdeal::new(
            3,
            vec![mono(&[0, 1, 1]), mono(&[2, 1, 0]), mono(&[0, 3, 0])],
        );
        Ring::monomial_quotient(names(&["x", "y", "z"]), defining).unwrap()
    }

    fn surface_semigroup_ring() -> Ring {
        let s =
            AffineSemigroup::new(2, vec![vec![5, 0], vec![1, 4], vec![4, 1], vec![0, 5]]).unwrap();
        Ring::semigroup_ring(s)
    }

    #[test]
    fn ring_dimension_examples() {
        assert_eq!(e3_ring().dimension(), 2);
        assert_eq!(Ring::polynomial(names(&["x", "y"])).dimension(), 2);
        assert_eq!(surface_semigroup_ring().dimension(), 2);
    }

    #[test]
    fn length_examples() {
        let opts = LengthOptions::default();
        // ℓ(R/(x,y)^2) = 3 in k[x,y]
        let r = Ring::polynomial(names(&["x", "y"]));
        let k = r
            .ideal_from_monomials(vec![mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])])
            .unwrap();
        assert_eq!(r.length_of_quotient(&k, &opts).unwrap(), BigInt::from(3));

        // the two lengths of the three-variable quotient example
        let r = e3_ring();
        let k = r
            .ideal_from_monomials(vec![mono(&[1, 0, 0]), mono(&[0, 1, 0]), mono(&[0, 0, 2])])
            .unwrap();
        assert_eq!(r.length_of_quotient(&k, &opts).unwrap(), BigInt::from(2));
        let q = r
            .ideal_from_monomials(vec![mono(&[1, 0, 0]), mono(&[0, 0, 2])])
            .unwrap();
        assert_eq!(r.length_of_quotient(&q, &opts).unwrap(), BigInt::from(4));
    }

    #[test]
    fn parameter_ideal_examples() {
        let opts = LengthOptions::default();
        let r = e3_ring();
        let q = r
            .ideal_from_monomials(vec![mono(&[1, 0, 0]), mono(&[0, 0, 2])])
            .unwrap();
        assert!(r.is_parameter_ideal(&q, &opts).unwrap());

        // three generators in a two-dimensional regular ring
        let r2 = Ring::polynomial(names(&["x", "y"]));
        let q3 = r2
            .ideal_from_monomials(vec![mono(&[3, 0]), mono(&[2, 1]), mono(&[0, 3])])
            .unwrap();
        assert_eq!(r2.minimal_generator_count(&q3), 3);
        assert!(!r2.is_parameter_ideal(&q3, &opts).unwrap());

        let sr = surface_semigroup_ring();
        let q = sr.ideal_from_vectors(vec![vec![5, 0], vec![0, 5]]).unwrap();
        assert!(sr.is_parameter_ideal(&q, &opts).unwrap());
    }

    #[test]
    fn minimal_generator_count_drops_redundant_generators() {
        let r = e3_ring();
        // x^2*y lies in I0 + (x), so only two of the three generators count
        let q = r
            .ideal_from_monomials(vec![mono(&[1, 0, 0]), mono(&[2, 1, 0]), mono(&[0, 0, 2])])
            .unwrap();
        assert_eq!(r.minimal_generator_count(&q), 2);
    }

    #[test]
    fn reduce_mod_element_examples() {
        let r = Ring::polynomial(names(&["x", "y"]));
        let reduced = r.reduce_mod_element(&mono(&[3, 0])).unwrap();
        assert_eq!(reduced.dimension(), 1);

        let r = e3_ring();
        let reduced = r.reduce_mod_element(&mono(&[1, 0, 0])).unwrap();
        assert_eq!(reduced.dimension(), 1);
        assert_eq!(
            reduced.defining_ideal().unwrap(),
            &MonomialIdeal::new(
                3,
                vec![mono(&[1, 0, 0]), mono(&[0, 1, 1]), mono(&[0, 3, 0])]
            )
        );

        // reducing by a parameter system reaches dimension zero
        let r = Ring::polynomial(names(&["x", "y"]));
        let step = r.reduce_mod_element(&mono(&[2, 0])).unwrap();
        let done = step.reduce_mod_element(&mono(&[0, 1])).unwrap();
        assert_eq!(done.dimension(), 0);
    }

    #[test]
    fn semigroup_backend_rejects_monomial_only_operations() {
        let sr = surface_semigroup_ring();
        assert!(matches!(
            sr.reduce_mod_element(&mono(&[1, 0])),
            Err(Error::UnsupportedOnSemigroup(_))
        ));
        assert!(matches!(
            sr.torsion_length(&mono(&[1, 0])),
            Err(Error::UnsupportedOnSemigroup(_))
        ));
        let q = sr.ideal_from_vectors(vec![vec![5, 0], vec![0, 5]]).unwrap();
        assert!(matches!(
            sr.colon(&q, &q),
            Err(Error::UnsupportedOnSemigroup(_))
        ));
    }

    #[test]
    fn torsion_length_examples() {
        // domains have no torsion
        let r = Ring::polynomial(names(&["x", "y"]));
        assert_eq!(r.torsion_length(&mono(&[2, 1])).unwrap(), BigInt::zero());

        // k[x,y]/(xy, y^2): (0 : x) = (y)/I0 has length 1
        let defining = MonomialIdeal::new(2, vec![mono(&[1, 1]), mono(&[0, 2])]);
        let r = Ring::monomial_quotient(names(&["x", "y"]), defining).unwrap();
        assert_eq!(r.torsion_length(&mono(&[1, 0])).unwrap(), BigInt::from(1));

        // (0 : y) in the three-variable example contains z·k[x,z], so the
        // torsion is infinite and must be reported as such
        let r = e3_ring();
        assert_eq!(
            r.torsion_length(&mono(&[0, 1, 0])),
            Err(Error::InfiniteLength)
        );
    }

    #[test]
    fn h0_length_examples() {
        // domain: H0 of anything is zero
        let r = Ring::polynomial(names(&["x"]));
        let k = r.ideal_from_monomials(vec![mono(&[1])]).unwrap();
        assert_eq!(r.h0_length_of_ideal(&k).unwrap(), BigInt::zero());

        // k[x,y]/(xy, y^2), K = (x, y): H0_m(R) = (y)/I0 and K meets it fully
        let defining = MonomialIdeal::new(2, vec![mono(&[1, 1]), mono(&[0, 2])]);
        let r = Ring::monomial_quotient(names(&["x", "y"]), defining).unwrap();
        let k = r
            .ideal_from_monomials(vec![mono(&[1, 0]), mono(&[0, 1])])
            .unwrap();
        assert_eq!(r.h0_length_of_ideal(&k).unwrap(), BigInt::from(1));

        // semigroup rings are domains
        let sr = surface_semigroup_ring();
        let k = sr.ideal_from_vectors(vec![vec![5, 0], vec![0, 5]]).unwrap();
        assert_eq!(sr.h0_length_of_ideal(&k).unwrap(), BigInt::zero());
    }

    #[test]
    fn lifts_always_contain_the_defining_ideal() {
        let r = e3_ring();
        let q = r
            .ideal_from_monomials(vec![mono(&[1, 0, 0]), mono(&[0, 0, 2])])
            .unwrap();
        let q2 = r.power(&q, 2).unwrap();
        let defining = r.defining_ideal().unwrap();
        assert!(q2.lift().unwrap().contains_ideal(defining));
        let k = r
            .ideal_from_monomials(vec![mono(&[1, 0, 0]), mono(&[0, 1, 0]), mono(&[0, 0, 2])])
            .unwrap();
        let kq = r.product(&k, &q).unwrap();
        assert!(kq.lift().unwrap().contains_ideal(defining));
    }

    #[test]
    fn additivity_of_lengths_over_nested_ideals() {
        // ℓ(R/I') = ℓ(R/I) + ℓ(I/I') for nested m-primary I' ⊆ I
        let r = e3_ring();
        let opts = LengthOptions::default();
        let inner = r
            .ideal_from_monomials(vec![mono(&[2, 0, 0]), mono(&[0, 1, 0]), mono(&[0, 0, 3])])
            .unwrap();
        let outer = r
            .ideal_from_monomials(vec![mono(&[1, 0, 0]), mono(&[0, 1, 0]), mono(&[0, 0, 2])])
            .unwrap();
        assert!(r.ideal_contains(&outer, &inner).unwrap());
        let li_inner = r.length_of_quotient(&inner, &opts).unwrap();
        let li_outer = r.length_of_quotient(&outer, &opts).unwrap();
        let between = nested_length(inner.lift().unwrap(), outer.lift().unwrap()).unwrap();
        assert_eq!(li_inner, li_outer + between);
    }
}
