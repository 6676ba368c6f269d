//! Exponent-vector monomials and monomial ideals given by their minimal
//! generators.
//!
//! A [`Multidegree`] doubles as the monomial `x^μ`. Variables are indexed
//! from zero. All values are immutable once built.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{check_len, Error, Result};

pub type Exponent = u32;

/// Exponent vector in `ℕ^n`.
///
/// The derived `Ord` is ascending lexicographic order on the exponents; the
/// canonical order used for generators and outputs is its reverse, see
/// [`lex_desc`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(Box<[Exponent]>);

impl Multidegree {
    pub fn new(exponents: impl Into<Vec<Exponent>>) -> Self {
        Multidegree(exponents.into().into_boxed_slice())
    }

    /// The multidegree of the monomial `1`.
    pub fn zero(n: usize) -> Self {
        Multidegree(vec![0; n].into_boxed_slice())
    }

    /// `x_var^exponent`.
    pub fn pure_power(n: usize, var: usize, exponent: Exponent) -> Self {
        let mut v = vec![0; n];
        v[var] = exponent;
        Multidegree::new(v)
    }

    /// The squarefree multidegree with ones on `vars`.
    pub fn indicator(n: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut v = vec![0; n];
        for i in vars {
            v[i] = 1;
        }
        Multidegree::new(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Exponent] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Exponent {
        self.0[i]
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Componentwise order: `self` divides `other`.
    pub fn divides(&self, other: &Multidegree) -> Result<bool> {
        check_len(self.len(), other.len())?;
        Ok(divides_slice(&self.0, &other.0))
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Multidegree) -> Result<Multidegree> {
        check_len(self.len(), other.len())?;
        Ok(Multidegree(
            self.0.iter().zip(other.0.iter()).map(|(&a, &b)| a.max(b)).collect(),
        ))
    }

    /// Componentwise sum; overflow is an error.
    pub fn checked_add(&self, other: &Multidegree) -> Result<Multidegree> {
        check_len(self.len(), other.len())?;
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Multidegree::new)
    }

    /// Indices of the nonzero exponents, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn has_full_support(&self) -> bool {
        self.0.iter().all(|&e| e > 0)
    }

    /// Subtract one from every exponent in the support.
    pub fn lowered(&self) -> Multidegree {
        Multidegree(self.0.iter().map(|&e| e.saturating_sub(1)).collect())
    }

    /// `self + e_var`, i.e. the monomial multiplied by `x_var`.
    pub fn times_var(&self, var: usize) -> Result<Multidegree> {
        let mut v = self.0.to_vec();
        v[var] = v[var].checked_add(1).ok_or(Error::Overflow)?;
        Ok(Multidegree::new(v))
    }

    /// `self - τ` for a squarefree `τ`, if nonnegative.
    pub fn minus_squarefree(&self, face: u64) -> Option<Multidegree> {
        let mut v = self.0.to_vec();
        for (i, e) in v.iter_mut().enumerate() {
            if face >> i & 1 == 1 {
                *e = e.checked_sub(1)?;
            }
        }
        Some(Multidegree::new(v))
    }
}

impl fmt::Debug for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

impl From<Vec<Exponent>> for Multidegree {
    fn from(v: Vec<Exponent>) -> Self {
        Multidegree::new(v)
    }
}

impl<const N: usize> From<[Exponent; N]> for Multidegree {
    fn from(v: [Exponent; N]) -> Self {
        Multidegree::new(v.to_vec())
    }
}

pub(crate) fn divides_slice(a: &[Exponent], b: &[Exponent]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Canonical comparison: lexicographic, largest first.
pub fn lex_desc(a: &Multidegree, b: &Multidegree) -> Ordering {
    b.cmp(a)
}

pub fn divides(a: &Multidegree, b: &Multidegree) -> Result<bool> {
    a.divides(b)
}

pub fn lcm_of(a: &Multidegree, b: &Multidegree) -> Result<Multidegree> {
    a.lcm(b)
}

pub fn support_of(mu: &Multidegree) -> Vec<usize> {
    mu.support()
}

pub fn lowered(mu: &Multidegree) -> Multidegree {
    mu.lowered()
}

/// Monomial ideal stored as its minimal generators in canonical
/// (lexicographically descending) order.
///
/// No generators is the zero ideal; the single generator `1` is the unit
/// ideal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Multidegree>,
}

impl MonomialIdeal {
    /// Keep the divisibility-minimal elements of `raw`, deduplicated.
    pub fn minimalize(raw: impl IntoIterator<Item = Multidegree>, n: usize) -> Result<Self> {
        let mut cands: Vec<Multidegree> = Vec::new();
        for m in raw {
            check_len(n, m.len())?;
            cands.push(m);
        }
        // a divisor has total degree no larger than its multiples
        cands.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| a.cmp(b)));
        cands.dedup();
        let mut kept: Vec<Multidegree> = Vec::with_capacity(cands.len());
        for m in cands {
            if !kept.iter().any(|k| divides_slice(k.as_slice(), m.as_slice())) {
                kept.push(m);
            }
        }
        kept.sort_by(lex_desc);
        Ok(MonomialIdeal { n, gens: kept })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Multidegree::zero(n)] }
    }

    /// Ring dimension.
    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Multidegree] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Proper and nonzero: the ideals every decomposition routine accepts.
    pub fn ensure_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    /// Membership of `x^ν`: some generator divides it.
    pub fn contains(&self, nu: &Multidegree) -> Result<bool> {
        check_len(self.n, nu.len())?;
        Ok(self.contains_slice(nu.as_slice()))
    }

    pub(crate) fn contains_slice(&self, nu: &[Exponent]) -> bool {
        self.gens.iter().any(|g| divides_slice(g.as_slice(), nu))
    }

    /// `λ(I)`, the lcm of all minimal generators.
    pub fn lambda(&self) -> Result<Multidegree> {
        if self.is_zero() {
            return Err(Error::UndefinedLambda);
        }
        let mut v = vec![0; self.n];
        for g in &self.gens {
            for (acc, &e) in v.iter_mut().zip(g.as_slice()) {
                *acc = (*acc).max(e);
            }
        }
        Ok(Multidegree::new(v))
    }

    /// Whether a pure power of every variable is among the generators.
    pub fn is_artinian(&self) -> bool {
        (0..self.n).all(|i| {
            self.gens.iter().any(|g| g.get(i) > 0 && g.support().len() == 1)
        }) || self.is_unit()
    }

    /// Smallest artinian ideal whose minimal generators include those of
    /// `self`: adds `x_i^(λ_i + 1)` for every variable.
    pub fn artinian_closure(&self) -> Result<MonomialIdeal> {
        let lambda = self.lambda()?;
        if self.is_artinian() {
            return Ok(self.clone());
        }
        let mut raw = self.gens.clone();
        for i in 0..self.n {
            let e = lambda.get(i).checked_add(1).ok_or(Error::Overflow)?;
            raw.push(Multidegree::pure_power(self.n, i, e));
        }
        MonomialIdeal::minimalize(raw, self.n)
    }

    /// Bitmask of the variables occurring in some generator.
    pub fn support_union(&self) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        for g in &self.gens {
            for (s, &e) in seen.iter_mut().zip(g.as_slice()) {
                *s |= e > 0;
            }
        }
        seen
    }
}

pub fn minimalize(raw: impl IntoIterator<Item = Multidegree>, n: usize) -> Result<MonomialIdeal> {
    MonomialIdeal::minimalize(raw, n)
}

pub fn contains(ideal: &MonomialIdeal, nu: &Multidegree) -> Result<bool> {
    ideal.contains(nu)
}

pub fn lcm_lambda(ideal: &MonomialIdeal) -> Result<Multidegree> {
    ideal.lambda()
}

pub fn artinian_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    ideal.artinian_closure()
}
