//! Irreducible decompositions of `I` and Stanley decompositions of `R/I`,
//! both read off the maximal corners of the artinian closure.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::monomial::{Exponent, MonomialIdeal, Multidegree};
use crate::mvt::{compute_b_n_minus_1_with, MvtOptions};

/// Box enumerations larger than this are refused.
pub const MAX_BOX_CELLS: u128 = 10_000_000;

/// The irreducible ideal `m^a = ⟨x_i^{a_i} : a_i ≠ 0⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent(pub Multidegree);

impl IrreducibleComponent {
    pub fn exponents(&self) -> &Multidegree {
        &self.0
    }

    /// `x^ν ∈ m^a`.
    pub fn contains(&self, nu: &[Exponent]) -> bool {
        self.0.as_slice().iter().zip(nu).any(|(&a, &v)| a > 0 && v >= a)
    }

    /// `m^self ⊇ m^other`: every generator `x_i^{b_i}` of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &IrreducibleComponent) -> bool {
        other
            .0
            .as_slice()
            .iter()
            .zip(self.0.as_slice())
            .all(|(&b, &a)| b == 0 || (a > 0 && a <= b))
    }

    fn support_mask(&self) -> u128 {
        self.0.as_slice().iter().enumerate().fold(0, |m, (i, &e)| if e > 0 { m | 1 << (i % 128) } else { m })
    }
}

/// Irredundant irreducible decomposition, components in canonical order.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    irreducible_decomposition_with(ideal, &MvtOptions::default())
}

pub fn irreducible_decomposition_with(
    ideal: &MonomialIdeal,
    opts: &MvtOptions,
) -> Result<Vec<IrreducibleComponent>> {
    ideal.ensure_proper_nonzero()?;
    let corners = compute_b_n_minus_1_with(&ideal.artinian_closure()?, opts)?.corners;
    if ideal.is_artinian() {
        return Ok(corners.into_iter().map(IrreducibleComponent).collect());
    }
    let lambda = ideal.lambda()?;
    let truncated = corners.into_iter().map(|mu| {
        let v: Vec<Exponent> = mu
            .as_slice()
            .iter()
            .zip(lambda.as_slice())
            .map(|(&m, &l)| if m <= l { m } else { 0 })
            .collect();
        IrreducibleComponent(Multidegree::new(v))
    });
    Ok(remove_redundant(truncated.filter(|c| !c.0.is_one()).collect()))
}

/// Drop duplicates and every component containing another one; the
/// intersection is unchanged. Output is in canonical order.
pub fn remove_redundant(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    comps.sort_by(|a, b| b.cmp(a));
    comps.dedup();
    let mut groups: HashMap<u128, Vec<usize>> = HashMap::new();
    for (k, c) in comps.iter().enumerate() {
        groups.entry(c.support_mask()).or_default().push(k);
    }
    let groups: Vec<(u128, Vec<usize>)> = groups.into_iter().collect();
    // m^a ⊇ m^b needs supp(b) ⊆ supp(a)
    let redundant: Vec<bool> = comps
        .par_iter()
        .enumerate()
        .map(|(k, a)| {
            let sa = a.support_mask();
            groups.iter().filter(|(sb, _)| sb & !sa == 0).any(|(_, members)| {
                members.iter().any(|&l| l != k && a.contains_ideal(&comps[l]))
            })
        })
        .collect();
    comps.into_iter().zip(redundant).filter(|(_, r)| !r).map(|(c, _)| c).collect()
}

/// The cone `x^base · k[x_i : i ∈ free]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StanleyCone {
    pub base: Multidegree,
    /// Variable indices, ascending.
    pub free: Vec<usize>,
}

impl StanleyCone {
    pub fn contains(&self, nu: &[Exponent]) -> bool {
        self.base.as_slice().iter().zip(nu).enumerate().all(|(i, (&b, &v))| {
            if self.free.contains(&i) {
                v >= b
            } else {
                v == b
            }
        })
    }
}

/// Direct-sum decomposition of the standard monomials into cones.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct StanleyDecomposition {
    pub cones: Vec<StanleyCone>,
}

fn canonical(mut cones: Vec<StanleyCone>) -> StanleyDecomposition {
    cones.sort_by(|a, b| b.base.cmp(&a.base).then_with(|| a.free.cmp(&b.free)));
    StanleyDecomposition { cones }
}

/// Standard monomials of an artinian ideal as zero-dimensional cones: the
/// divisors of the lowered maximal corners, each once.
pub fn stanley_artinian(ideal: &MonomialIdeal) -> Result<StanleyDecomposition> {
    stanley_artinian_with(ideal, &MvtOptions::default())
}

pub fn stanley_artinian_with(ideal: &MonomialIdeal, opts: &MvtOptions) -> Result<StanleyDecomposition> {
    ideal.ensure_proper_nonzero()?;
    if !ideal.is_artinian() {
        return Err(Error::NotArtinian("use stanley_general for non-artinian ideals"));
    }
    let corners = compute_b_n_minus_1_with(ideal, opts)?.corners;
    let mut seen: BTreeSet<Multidegree> = BTreeSet::new();
    for mu in corners {
        let top = mu.lowered();
        let bounds: Vec<Exponent> = top.as_slice().to_vec();
        check_box(&bounds)?;
        for_each_in_box(&bounds, |nu| {
            seen.insert(Multidegree::new(nu.to_vec()));
        });
    }
    Ok(canonical(seen.into_iter().map(|base| StanleyCone { base, free: Vec::new() }).collect()))
}

/// Stanley decomposition of `R/I` for any proper nonzero `I`.
///
/// Every standard `ν` in the box `0 ≤ ν_i ≤ λ_i + 1` becomes the cone with
/// base `ν` whose free variables are those with `ν_i = λ_i + 1`. Points with
/// no free variable are the standard monomials of the artinian closure;
/// the others sit on its boundary and extend in their free directions.
/// Capping exponents at `λ_i + 1` does not change membership, so each
/// standard monomial lies in exactly one cone.
pub fn stanley_general(ideal: &MonomialIdeal) -> Result<StanleyDecomposition> {
    ideal.ensure_proper_nonzero()?;
    let lambda = ideal.lambda()?;
    let bounds: Vec<Exponent> = lambda
        .as_slice()
        .iter()
        .map(|&l| l.checked_add(1).ok_or(Error::Overflow))
        .collect::<Result<_>>()?;
    check_box(&bounds)?;
    let mut cones = Vec::new();
    for_each_in_box(&bounds, |nu| {
        if !ideal.contains_slice(nu) {
            let free = (0..nu.len()).filter(|&i| nu[i] == bounds[i]).collect();
            cones.push(StanleyCone { base: Multidegree::new(nu.to_vec()), free });
        }
    });
    Ok(canonical(cones))
}

pub(crate) fn check_box(bounds: &[Exponent]) -> Result<()> {
    let cells = bounds.iter().try_fold(1u128, |acc, &b| acc.checked_mul(b as u128 + 1));
    match cells {
        Some(c) if c <= MAX_BOX_CELLS => Ok(()),
        _ => Err(Error::Scale(format!("box of {bounds:?} exceeds {MAX_BOX_CELLS} cells"))),
    }
}

/// Visit every `ν` with `0 ≤ ν_i ≤ bounds_i`.
pub(crate) fn for_each_in_box(bounds: &[Exponent], mut visit: impl FnMut(&[Exponent])) {
    let mut nu = vec![0; bounds.len()];
    loop {
        visit(&nu);
        let mut i = 0;
        loop {
            if i == nu.len() {
                return;
            }
            if nu[i] < bounds[i] {
                nu[i] += 1;
                break;
            }
            nu[i] = 0;
            i += 1;
        }
    }
}

/// `Σ t^shift / (1 - t)^denom_power` over the terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    /// `(shift, denom_power)` in canonical order.
    pub terms: Vec<(u64, usize)>,
}

impl HilbertSeries {
    /// Taylor coefficients of degrees `0..=degree`.
    ///
    /// Expansion only adds, so any unsigned integer type works; choose one
    /// wide enough for the requested degree.
    pub fn coefficients<T>(&self, degree: usize) -> Vec<T>
    where
        T: Clone + num_traits::Zero + num_traits::One + std::ops::AddAssign,
    {
        let max_power = self.terms.iter().map(|t| t.1).max().unwrap_or(0);
        // numerators grouped by denominator power
        let mut by_power: Vec<Vec<T>> = vec![vec![T::zero(); degree + 1]; max_power + 1];
        for &(shift, power) in &self.terms {
            if (shift as usize) <= degree {
                by_power[power][shift as usize] += T::one();
            }
        }
        let mut total = vec![T::zero(); degree + 1];
        for (power, mut series) in by_power.into_iter().enumerate() {
            // dividing by (1 - t) is a prefix sum
            for _ in 0..power {
                for d in 1..=degree {
                    let prev = series[d - 1].clone();
                    series[d] += prev;
                }
            }
            for (acc, v) in total.iter_mut().zip(series) {
                *acc += v;
            }
        }
        total
    }
}

pub fn hilbert_series(sd: &StanleyDecomposition) -> HilbertSeries {
    let mut terms: Vec<(u64, usize)> =
        sd.cones.iter().map(|c| (c.base.total_degree(), c.free.len())).collect();
    terms.sort_unstable();
    HilbertSeries { terms }
}

/// Largest number of free variables over the cones.
pub fn krull_dimension(sd: &StanleyDecomposition) -> usize {
    sd.cones.iter().map(|c| c.free.len()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::tests::{staircase, ideal, md, eight_gens};

    fn comps(v: &[&[Exponent]]) -> Vec<IrreducibleComponent> {
        v.iter().map(|a| IrreducibleComponent(md(a))).collect()
    }

    fn cone(base: &[Exponent], free: &[usize]) -> StanleyCone {
        StanleyCone { base: md(base), free: free.to_vec() }
    }

    #[test]
    fn eight_gens_decomposition() {
        let got = irreducible_decomposition(&eight_gens()).unwrap();
        let mut want = comps(&[
            &[4, 5, 5],
            &[0, 2, 3],
            &[0, 4, 2],
            &[3, 0, 4],
            &[2, 1, 0],
            &[1, 3, 0],
            &[0, 0, 1],
        ]);
        want.sort_by(|a, b| b.cmp(a));
        assert_eq!(got, want);
    }

    #[test]
    fn artinian_and_trivial_decompositions() {
        assert_eq!(
            irreducible_decomposition(&staircase()).unwrap(),
            comps(&[&[3, 1, 1], &[2, 3, 1], &[1, 3, 3]])
        );
        assert_eq!(irreducible_decomposition(&ideal(1, &[&[2]])).unwrap(), comps(&[&[2]]));
        assert_eq!(irreducible_decomposition(&ideal(2, &[&[1, 1]])).unwrap(), comps(&[&[1, 0], &[0, 1]]));
        assert_eq!(irreducible_decomposition(&MonomialIdeal::unit(2)), Err(Error::UnitIdeal));
        assert_eq!(irreducible_decomposition(&MonomialIdeal::zero(2)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn redundancy_pass() {
        let out = remove_redundant(comps(&[&[2, 0], &[2, 0], &[1, 0], &[1, 3], &[0, 2]]));
        // ⟨x⟩ and ⟨x, y^3⟩ both contain ⟨x^2⟩
        assert_eq!(out, comps(&[&[2, 0], &[0, 2]]));
        let c = IrreducibleComponent(md(&[1, 3]));
        assert!(c.contains_ideal(&IrreducibleComponent(md(&[2, 0]))));
        assert!(!IrreducibleComponent(md(&[2, 0])).contains_ideal(&c));
    }

    #[test]
    fn stanley_artinian_examples() {
        let sd = stanley_artinian(&ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!(sd.cones, vec![cone(&[1, 0], &[]), cone(&[0, 1], &[]), cone(&[0, 0], &[])]);
        assert_eq!(hilbert_series(&sd).coefficients::<u64>(3), vec![1, 2, 0, 0]);

        let sd = stanley_artinian(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(sd.cones, vec![cone(&[0, 0], &[])]);
        assert_eq!(hilbert_series(&sd).terms, vec![(0, 0)]);

        let sd = stanley_artinian(&staircase()).unwrap();
        // divisors of x^2, x*y^2, y^2*z^2
        assert_eq!(sd.cones.len(), 13);
        assert!(stanley_artinian(&ideal(2, &[&[1, 1]])).is_err());
    }

    #[test]
    fn stanley_general_examples() {
        let xy = ideal(2, &[&[1, 1]]);
        let sd = stanley_general(&xy).unwrap();
        assert_eq!(
            sd.cones,
            vec![cone(&[2, 0], &[0]), cone(&[1, 0], &[]), cone(&[0, 2], &[1]), cone(&[0, 1], &[]), cone(&[0, 0], &[])]
        );
        let h = hilbert_series(&sd);
        assert_eq!(h.coefficients::<u64>(5), vec![1, 2, 2, 2, 2, 2]);
        assert_eq!(krull_dimension(&sd), 1);

        // λ_x = 0: x is free as soon as it appears
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(stanley_general(&y).unwrap().cones, vec![cone(&[1, 0], &[0]), cone(&[0, 0], &[])]);

        let z = ideal(3, &[&[0, 0, 1]]);
        assert_eq!(krull_dimension(&stanley_general(&z).unwrap()), 2);

        let f = staircase();
        assert_eq!(stanley_general(&f).unwrap(), stanley_artinian(&f).unwrap());
        assert_eq!(krull_dimension(&stanley_general(&f).unwrap()), 0);
    }

    #[test]
    fn hilbert_examples() {
        let sd = stanley_artinian(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(hilbert_series(&sd).coefficients::<u64>(2), vec![1, 0, 0]);
        let big = HilbertSeries { terms: vec![(0, 3)] };
        // 1/(1-t)^3 has coefficients C(d+2, 2)
        assert_eq!(big.coefficients::<u128>(4), vec![1, 3, 6, 10, 15]);
        assert_eq!(
            big.coefficients::<num_bigint::BigUint>(2),
            vec![1u32.into(), 3u32.into(), 6u32.into()]
        );
    }
}
