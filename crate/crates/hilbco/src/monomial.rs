//! Monomials and monomial ideals in a fixed polynomial ring.
//!
//! A monomial is an exponent vector; a monomial ideal is the divisibility
//! antichain of its minimal generators. Every operation here is exact and
//! pure, and generator lists are kept in a canonical sorted order so that
//! ideal equality is plain structural equality.

use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector of a monomial. The ambient variable count is the length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The constant monomial 1 in `vars` variables.
    pub fn one(vars: usize) -> Self {
        Monomial(vec![0; vars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// True when at most one variable has a positive exponent.
    pub fn is_pure_power(&self) -> bool {
        self.0.iter().filter(|&&e| e > 0).count() <= 1
    }

    /// Index of the only variable with positive exponent, if there is one.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut var = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if var.is_some() {
                    return None;
                }
                var = Some(i);
            }
        }
        var
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.vars(), other.vars());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// The generator of the colon `(self) : other`, i.e. self / gcd(self, other).
    pub fn colon_by(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Render with the given variable names, e.g. `x^2*y`.
    pub fn display_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.vars());
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (name, &e) in names.iter().zip(&self.0) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.0
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A monomial ideal, stored as the antichain of minimal generators.
///
/// The empty generator set is the zero ideal; the set `{1}` is the unit
/// ideal. Generators are sorted, so equal ideals compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    vars: usize,
    gens: Vec<Monomial>,
}

/// Reduce a generator list to the divisibility antichain, sorted.
fn minimalize_gens(mut cands: Vec<Monomial>) -> Vec<Monomial> {
    cands.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    cands.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    'outer: for c in cands {
        // kept is degree-ascending; equal-degree monomials never divide
        // each other (after dedup), so only strictly smaller degrees matter.
        for k in &kept {
            if k.degree() == c.degree() {
                break;
            }
            if k.divides(&c) {
                continue 'outer;
            }
        }
        kept.push(c);
    }
    kept.sort();
    kept
}

impl MonomialIdeal {
    /// Build the ideal generated by `gens`, minimalizing to the antichain.
    pub fn new(vars: usize, gens: Vec<Monomial>) -> Self {
        for g in &gens {
            assert_eq!(g.vars(), vars, "generator has wrong ambient");
        }
        MonomialIdeal {
            vars,
            gens: minimalize_gens(gens),
        }
    }

    pub fn zero(vars: usize) -> Self {
        MonomialIdeal {
            vars,
            gens: Vec::new(),
        }
    }

    pub fn unit(vars: usize) -> Self {
        MonomialIdeal {
            vars,
            gens: vec![Monomial::one(vars)],
        }
    }

    /// The irrelevant maximal ideal (x_1, ..., x_m).
    pub fn maximal(vars: usize) -> Self {
        let gens = (0..vars)
            .map(|i| {
                let mut e = vec![0; vars];
                e[i] = 1;
                Monomial(e)
            })
            .collect();
        MonomialIdeal::new(vars, gens)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    fn check_ambient(&self, other: &MonomialIdeal) {
        assert_eq!(
            self.vars, other.vars,
            "ideal operands live in different ambients ({} vs {})",
            self.vars, other.vars
        );
    }

    /// Ideal sum I + J.
    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.check_ambient(other);
        let mut cands = self.gens.clone();
        cands.extend(other.gens.iter().cloned());
        MonomialIdeal {
            vars: self.vars,
            gens: minimalize_gens(cands),
        }
    }

    /// Ideal product I * J: pairwise products of generators, minimalized.
    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.check_ambient(other);
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                cands.push(a.times(b));
            }
        }
        MonomialIdeal {
            vars: self.vars,
            gens: minimalize_gens(cands),
        }
    }

    /// I^n by binary exponentiation; I^0 is the unit ideal.
    pub fn pow(&self, n: u32) -> MonomialIdeal {
        let mut result = MonomialIdeal::unit(self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.product(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.product(&base);
            }
        }
        result
    }

    /// Intersection I ∩ J: pairwise lcms of generators, minimalized.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.check_ambient(other);
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                cands.push(a.lcm(b));
            }
        }
        MonomialIdeal {
            vars: self.vars,
            gens: minimalize_gens(cands),
        }
    }

    /// Colon by a single monomial, I : u.
    pub fn colon_monomial(&self, u: &Monomial) -> MonomialIdeal {
        assert_eq!(u.vars(), self.vars, "monomial has wrong ambient");
        let cands = self.gens.iter().map(|g| g.colon_by(u)).collect();
        MonomialIdeal {
            vars: self.vars,
            gens: minimalize_gens(cands),
        }
    }

    /// Colon by an ideal, I : J = ∩_g I : g over the generators of J.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other);
        if other.is_zero() {
            return Err(Error::ColonByZeroIdeal);
        }
        let mut acc: Option<MonomialIdeal> = None;
        for g in &other.gens {
            let c = self.colon_monomial(g);
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersect(&c),
            });
        }
        Ok(acc.expect("non-zero ideal has a generator"))
    }

    /// Saturation I : J^∞, computed by iterating the colon to a fixed point.
    pub fn saturate(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut current = self.clone();
        loop {
            let next = current.colon_ideal(other)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Monomial membership: some generator divides `u`.
    pub fn contains_monomial(&self, u: &Monomial) -> bool {
        assert_eq!(u.vars(), self.vars, "monomial has wrong ambient");
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Ideal containment: every generator of `other` is a member.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        self.check_ambient(other);
        other.gens.iter().all(|g| self.contains_monomial(g))
    }

    /// True when the ideal contains a pure power of every variable, i.e.
    /// the quotient by it is Artinian.
    pub fn is_artinian(&self) -> bool {
        (0..self.vars).all(|j| self.pure_power_bound(j).is_some())
    }

    /// Least exponent e with x_j^e in the ideal via a pure-power generator.
    pub fn pure_power_bound(&self, j: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter(|g| g.pure_power_var().map(|v| v == j).unwrap_or(g.is_one()))
            .map(|g| g.exponents()[j])
            .min()
    }

    /// The box enclosing all standard monomials: per-variable pure-power
    /// bounds. `None` when some variable has no pure power (infinite box).
    pub fn standard_box(&self) -> Option<Vec<u32>> {
        (0..self.vars).map(|j| self.pure_power_bound(j)).collect()
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.display_with(names)).collect();
        format!("({})", parts.join(", "))
    }
}
