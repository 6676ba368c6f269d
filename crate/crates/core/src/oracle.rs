//! Brute-force reference computations used to check the main algorithms.
//!
//! Nothing here goes through simplicial complexes, Mayer-Vietoris trees or
//! the decomposition code: Koszul homology is computed from the Koszul
//! differential on the multidegree strand with its own rational
//! elimination, and decompositions are checked by scanning monomials.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decompose::{IrreducibleComponent, StanleyDecomposition};
use crate::error::{check_len, Error, Result};
use crate::monomial::{Exponent, MonomialIdeal, Multidegree};

/// Largest ring dimension for the Koszul strand computation.
pub const MAX_KOSZUL_VARS: usize = 5;
/// Largest box scanned exhaustively.
pub const MAX_SCAN_CELLS: u128 = 10_000_000;

/// A basis element `x^coef ⊗ x_{j_1} ∧ … ∧ x_{j_i}` of `I ⊗ ∧^i V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeTerm {
    pub coef: Multidegree,
    /// Ascending variable indices.
    pub wedge: Vec<usize>,
}

/// Matrix of `∂ : (I ⊗ ∧^i V)_μ → (I ⊗ ∧^{i-1} V)_μ`; columns index the
/// source basis, rows the target basis.
#[derive(Clone, Debug)]
pub struct BoundaryMatrix {
    pub source: Vec<WedgeTerm>,
    pub target: Vec<WedgeTerm>,
    pub entries: Vec<Vec<i64>>,
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (pos, &first) in items.iter().enumerate() {
        for mut rest in combinations(&items[pos + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Basis of the degree-`i` strand at `μ`: wedges `τ` with `|τ| = i`,
/// `τ ≤ μ` and `x^(μ-τ) ∈ I`.
pub fn strand_basis(ideal: &MonomialIdeal, i: usize, mu: &Multidegree) -> Vec<WedgeTerm> {
    let support = mu.support();
    combinations(&support, i)
        .into_iter()
        .filter_map(|wedge| {
            let mut coef = mu.as_slice().to_vec();
            for &j in &wedge {
                coef[j] -= 1;
            }
            let coef = Multidegree::new(coef);
            ideal.contains(&coef).unwrap().then_some(WedgeTerm { coef, wedge })
        })
        .collect()
}

/// `∂(x^a ⊗ x_{j_1} ∧ … ∧ x_{j_i}) = Σ_k (-1)^{k+1} x_{j_k} x^a ⊗ (… without x_{j_k} …)`.
pub fn boundary_matrix(ideal: &MonomialIdeal, i: usize, mu: &Multidegree) -> BoundaryMatrix {
    let source = strand_basis(ideal, i, mu);
    let target = if i == 0 { Vec::new() } else { strand_basis(ideal, i - 1, mu) };
    let mut entries = vec![vec![0i64; source.len()]; target.len()];
    for (col, term) in source.iter().enumerate() {
        for (k, &j) in term.wedge.iter().enumerate() {
            let mut coef = term.coef.as_slice().to_vec();
            coef[j] += 1;
            let wedge: Vec<usize> = term.wedge.iter().copied().filter(|&v| v != j).collect();
            let row = target
                .iter()
                .position(|t| t.wedge == wedge && t.coef.as_slice() == coef.as_slice())
                .expect("multiples of ideal elements stay in the ideal");
            // k is zero-based, so the sign (-1)^{k+1} of the one-based rule is (-1)^k here
            entries[row][col] += if k % 2 == 0 { 1 } else { -1 };
        }
    }
    BoundaryMatrix { source, target, entries }
}

/// Rank over `ℚ` by Gaussian elimination with exact rationals.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(p, rank);
        for r in rank + 1..m.len() {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &m[rank][c];
            for k in c..cols {
                let d = &f * &m[rank][k];
                m[r][k] -= d;
            }
        }
        rank += 1;
    }
    rank
}

fn guard_koszul(ideal: &MonomialIdeal, i: usize) -> Result<()> {
    if ideal.nvars() > MAX_KOSZUL_VARS {
        return Err(Error::Scale(format!(
            "brute-force Koszul homology is limited to {MAX_KOSZUL_VARS} variables"
        )));
    }
    if i > ideal.nvars() {
        return Err(Error::InvalidInput(format!("homological degree {i} exceeds {}", ideal.nvars())));
    }
    Ok(())
}

/// `dim H_{i,μ}(K(I))` straight from the Koszul differential.
pub fn koszul_homology_bruteforce(ideal: &MonomialIdeal, i: usize, mu: &Multidegree) -> Result<usize> {
    check_len(ideal.nvars(), mu.len())?;
    guard_koszul(ideal, i)?;
    let d_i = boundary_matrix(ideal, i, mu);
    let rank_in = if i == 0 { 0 } else { rational_rank(&d_i.entries) };
    let rank_out = if i == ideal.nvars() {
        0
    } else {
        rational_rank(&boundary_matrix(ideal, i + 1, mu).entries)
    };
    Ok(d_i.source.len() - rank_in - rank_out)
}

/// Whether `∂_i ∘ ∂_{i+1} = 0` on the strand at `μ`.
pub fn boundary_squares_to_zero(ideal: &MonomialIdeal, i: usize, mu: &Multidegree) -> Result<bool> {
    check_len(ideal.nvars(), mu.len())?;
    guard_koszul(ideal, i)?;
    if i == 0 || i >= ideal.nvars() {
        return Ok(true);
    }
    let lower = boundary_matrix(ideal, i, mu);
    let upper = boundary_matrix(ideal, i + 1, mu);
    for r in 0..lower.target.len() {
        for c in 0..upper.source.len() {
            let s: i64 = (0..lower.source.len()).map(|k| lower.entries[r][k] * upper.entries[k][c]).sum();
            if s != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All lcms of nonempty subsets of the minimal generators.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> BTreeSet<Multidegree> {
    let mut lattice: BTreeSet<Multidegree> = ideal.generators().iter().cloned().collect();
    let mut frontier: Vec<Multidegree> = lattice.iter().cloned().collect();
    while let Some(m) = frontier.pop() {
        for g in ideal.generators() {
            let l = m.lcm(g).unwrap();
            if lattice.insert(l.clone()) {
                frontier.push(l);
            }
        }
    }
    lattice
}

// odometer over 0 ≤ ν_i ≤ bounds_i
fn scan_box(bounds: &[Exponent], mut visit: impl FnMut(&[Exponent]) -> bool) {
    let mut nu = vec![0; bounds.len()];
    'outer: loop {
        if !visit(&nu) {
            return;
        }
        for i in 0..nu.len() {
            if nu[i] < bounds[i] {
                nu[i] += 1;
                continue 'outer;
            }
            nu[i] = 0;
        }
        return;
    }
}

fn box_cells(bounds: &[Exponent]) -> Option<u128> {
    bounds.iter().try_fold(1u128, |acc, &b| acc.checked_mul(b as u128 + 1))
}

/// Maximal standard monomials by scanning `0 ≤ ν ≤ λ`.
///
/// With `use_closure` the scan runs on the artinian closure, so any
/// proper nonzero ideal is accepted.
pub fn maximal_standard_monomials_box(ideal: &MonomialIdeal, use_closure: bool) -> Result<Vec<Multidegree>> {
    ideal.ensure_proper_nonzero()?;
    let target = if use_closure {
        ideal.artinian_closure()?
    } else if ideal.is_artinian() {
        ideal.clone()
    } else {
        return Err(Error::NotArtinian("standard monomials are infinite; scan the closure"));
    };
    let lambda = target.lambda()?;
    let bounds = lambda.as_slice().to_vec();
    if box_cells(&bounds).is_none_or(|c| c > MAX_SCAN_CELLS) {
        return Err(Error::Scale(format!("box {bounds:?} is too large to scan")));
    }
    let mut out = Vec::new();
    scan_box(&bounds, |nu| {
        let nu = Multidegree::new(nu.to_vec());
        if !target.contains(&nu).unwrap()
            && (0..nu.len()).all(|i| target.contains(&nu.times_var(i).unwrap()).unwrap())
        {
            out.push(nu);
        }
        true
    });
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Number of standard monomials of total degree `d`, by enumerating every
/// monomial of that degree.
pub fn standard_monomial_count(ideal: &MonomialIdeal, d: u32) -> Result<u64> {
    let n = ideal.nvars();
    if n == 0 {
        return Ok(u64::from(d == 0 && !ideal.is_unit()));
    }
    let mut count = 0u64;
    let mut visited = 0u64;
    let mut nu = vec![0 as Exponent; n];
    compositions(&mut nu, 0, d, &mut |nu| {
        visited += 1;
        if !ideal.contains_slice(nu) {
            count += 1;
        }
    });
    debug_assert!(visited > 0);
    Ok(count)
}

fn compositions(nu: &mut [Exponent], pos: usize, left: u32, visit: &mut impl FnMut(&[Exponent])) {
    if pos + 1 == nu.len() {
        nu[pos] = left;
        visit(nu);
        return;
    }
    for e in 0..=left {
        nu[pos] = e;
        compositions(nu, pos + 1, left - e, visit);
    }
    nu[pos] = 0;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub ok: bool,
    /// A monomial (or component exponent) showing the failure.
    pub witness: Option<Multidegree>,
    pub reason: Option<String>,
    /// Membership was checked on random samples instead of the whole box.
    pub sampled: bool,
    pub checked: u64,
}

impl Verification {
    fn pass(sampled: bool, checked: u64) -> Self {
        Verification { ok: true, witness: None, reason: None, sampled, checked }
    }

    fn fail(witness: Multidegree, reason: impl Into<String>, sampled: bool, checked: u64) -> Self {
        Verification { ok: false, witness: Some(witness), reason: Some(reason.into()), sampled, checked }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SampleOptions {
    pub samples: u64,
    pub seed: u64,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions { samples: 10_000, seed: 0x5eed }
    }
}

// x^ν ∈ m^a iff ν_i ≥ a_i for some i with a_i > 0
fn in_component(a: &Multidegree, nu: &[Exponent]) -> bool {
    a.as_slice().iter().zip(nu).any(|(&a, &v)| a > 0 && v >= a)
}

/// Check `I = ∩ m^a` on the box `[0, λ+2]^n` and that no component can be
/// dropped.
pub fn verify_irreducible(ideal: &MonomialIdeal, components: &[IrreducibleComponent]) -> Result<Verification> {
    verify_irreducible_with(ideal, components, SampleOptions::default())
}

/// As [`verify_irreducible`]; boxes above [`MAX_SCAN_CELLS`] are sampled.
pub fn verify_irreducible_with(
    ideal: &MonomialIdeal,
    components: &[IrreducibleComponent],
    sampling: SampleOptions,
) -> Result<Verification> {
    ideal.ensure_proper_nonzero()?;
    let n = ideal.nvars();
    for c in components {
        check_len(n, c.0.len())?;
        if c.0.is_one() {
            return Ok(Verification::fail(c.0.clone(), "zero-ideal component", false, 0));
        }
    }
    let lambda = ideal.lambda()?;
    let bounds: Vec<Exponent> = lambda.as_slice().iter().map(|&l| l.saturating_add(2)).collect();
    let in_all = |nu: &[Exponent]| components.iter().all(|c| in_component(&c.0, nu));

    let mut failure = None;
    let mut checked = 0u64;
    let sampled = box_cells(&bounds).is_none_or(|c| c > MAX_SCAN_CELLS);
    let mut check = |nu: &[Exponent]| {
        checked += 1;
        let lhs = ideal.contains_slice(nu);
        if lhs != in_all(nu) {
            let why = if lhs { "in I but outside some component" } else { "in every component but not in I" };
            failure = Some((Multidegree::new(nu.to_vec()), why));
            return false;
        }
        true
    };
    if sampled {
        let mut rng = ChaCha8Rng::seed_from_u64(sampling.seed);
        let mut nu = vec![0; n];
        for _ in 0..sampling.samples {
            // scale each sample so both sides of the staircase get hit
            let scale: f64 = rng.gen_range(0.05..=1.0);
            for (v, &b) in nu.iter_mut().zip(&bounds) {
                let top = ((b as f64) * scale).round() as Exponent;
                *v = rng.gen_range(0..=top);
            }
            if !check(&nu) {
                break;
            }
        }
    } else {
        scan_box(&bounds, check);
    }
    if let Some((w, why)) = failure {
        return Ok(Verification::fail(w, why, sampled, checked));
    }

    // m^a is redundant iff every monomial outside it lies in another
    // component; the largest such monomial decides
    let mut top = vec![0 as Exponent; n];
    for c in components {
        for (t, &e) in top.iter_mut().zip(c.0.as_slice()) {
            *t = (*t).max(e);
        }
    }
    for (k, c) in components.iter().enumerate() {
        let probe: Vec<Exponent> = c
            .0
            .as_slice()
            .iter()
            .zip(&top)
            .map(|(&a, &t)| if a > 0 { a - 1 } else { t })
            .collect();
        let needed = components.iter().enumerate().all(|(l, o)| l == k || in_component(&o.0, &probe));
        if !needed {
            return Ok(Verification::fail(c.0.clone(), "redundant component", sampled, checked));
        }
    }
    Ok(Verification::pass(sampled, checked))
}

/// Check that the cones cover every standard monomial of the box
/// `[0, λ+2]^n` exactly once and never meet `I`.
pub fn verify_stanley(ideal: &MonomialIdeal, sd: &StanleyDecomposition) -> Result<Verification> {
    ideal.ensure_proper_nonzero()?;
    let n = ideal.nvars();
    let lambda = ideal.lambda()?;
    let bounds: Vec<Exponent> = lambda.as_slice().iter().map(|&l| l.saturating_add(2)).collect();
    let cells = box_cells(&bounds).filter(|&c| c <= MAX_SCAN_CELLS).ok_or_else(|| {
        Error::Scale(format!("box {bounds:?} is too large to verify a Stanley decomposition"))
    })? as usize;
    let index = |nu: &[Exponent]| {
        nu.iter().zip(&bounds).rev().fold(0usize, |acc, (&v, &b)| acc * (b as usize + 1) + v as usize)
    };
    let mut cover = vec![0u32; cells];
    for cone in &sd.cones {
        check_len(n, cone.base.len())?;
        if cone.free.iter().any(|&i| i >= n) {
            return Err(Error::InvalidInput("cone direction outside the ring".into()));
        }
        let base = cone.base.as_slice();
        if base.iter().zip(&bounds).any(|(&b, &m)| b > m) {
            continue;
        }
        // points of the cone inside the box
        let mut span = bounds.clone();
        for i in 0..n {
            if !cone.free.contains(&i) {
                span[i] = 0;
            } else {
                span[i] -= base[i];
            }
        }
        let mut pt = base.to_vec();
        scan_box(&span, |off| {
            for i in 0..n {
                pt[i] = base[i] + off[i];
            }
            cover[index(&pt)] += 1;
            true
        });
    }
    let mut failure = None;
    let mut checked = 0u64;
    scan_box(&bounds, |nu| {
        checked += 1;
        let times = cover[index(nu)];
        let standard = !ideal.contains_slice(nu);
        let problem = match (standard, times) {
            (true, 1) | (false, 0) => None,
            (true, 0) => Some("standard monomial not covered"),
            (true, _) => Some("standard monomial covered more than once"),
            (false, _) => Some("cone contains a monomial of I"),
        };
        if let Some(p) = problem {
            failure = Some((Multidegree::new(nu.to_vec()), p));
            return false;
        }
        true
    });
    Ok(match failure {
        Some((w, why)) => Verification::fail(w, why, false, checked),
        None => Verification::pass(false, checked),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::StanleyCone;
    use crate::monomial::tests::{staircase, ideal, md, eight_gens};

    #[test]
    fn bruteforce_examples() {
        assert_eq!(koszul_homology_bruteforce(&staircase(), 2, &md(&[3, 1, 1])).unwrap(), 1);
        let xy_yz = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(koszul_homology_bruteforce(&xy_yz, 1, &md(&[1, 1, 1])).unwrap(), 1);
        for mu in lcm_lattice(&staircase()) {
            assert_eq!(koszul_homology_bruteforce(&staircase(), 3, &mu).unwrap(), 0);
        }
        let six = MonomialIdeal::minimalize(vec![Multidegree::pure_power(6, 0, 1)], 6).unwrap();
        assert!(matches!(koszul_homology_bruteforce(&six, 0, &md(&[1, 0, 0, 0, 0, 0])), Err(Error::Scale(_))));
    }

    #[test]
    fn zeroth_homology_counts_generators() {
        let i = staircase();
        let total: usize = lcm_lattice(&i).iter().map(|mu| koszul_homology_bruteforce(&i, 0, mu).unwrap()).sum();
        assert_eq!(total, i.num_generators());
    }

    #[test]
    fn boundary_squares() {
        let i = staircase();
        for mu in lcm_lattice(&i) {
            for d in 0..=3 {
                assert!(boundary_squares_to_zero(&i, d, &mu).unwrap());
            }
        }
    }

    #[test]
    fn standard_monomial_box_scan() {
        assert_eq!(
            maximal_standard_monomials_box(&staircase(), false).unwrap(),
            vec![md(&[2, 0, 0]), md(&[1, 2, 0]), md(&[0, 2, 2])]
        );
        assert_eq!(maximal_standard_monomials_box(&ideal(2, &[&[1, 0], &[0, 1]]), false).unwrap(), vec![md(&[0, 0])]);
        let s = maximal_standard_monomials_box(&eight_gens(), true).unwrap();
        assert_eq!(s.len(), 7);
        assert!(s.contains(&md(&[3, 4, 4])));
        assert!(maximal_standard_monomials_box(&eight_gens(), false).is_err());
    }

    #[test]
    fn counts() {
        let xy = ideal(2, &[&[1, 1]]);
        assert_eq!(standard_monomial_count(&xy, 3).unwrap(), 2);
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(standard_monomial_count(&m, 0).unwrap(), 1);
        assert_eq!(standard_monomial_count(&m, 4).unwrap(), 0);
        let sq = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(standard_monomial_count(&sq, 1).unwrap(), 2);
    }

    fn eight_gens_components() -> Vec<IrreducibleComponent> {
        [[4, 5, 5], [0, 2, 3], [0, 4, 2], [3, 0, 4], [2, 1, 0], [1, 3, 0], [0, 0, 1]]
            .iter()
            .map(|a| IrreducibleComponent(md(a)))
            .collect()
    }

    #[test]
    fn irreducible_verifier() {
        let i = eight_gens();
        let comps = eight_gens_components();
        assert!(verify_irreducible(&i, &comps).unwrap().ok);
        let missing: Vec<_> = comps.iter().filter(|c| c.0 != md(&[0, 0, 1])).cloned().collect();
        let v = verify_irreducible(&i, &missing).unwrap();
        assert!(!v.ok);
        let w = v.witness.unwrap();
        assert!(!i.contains(&w).unwrap());
        let mut extra = comps.clone();
        extra.push(IrreducibleComponent(md(&[1, 0, 1])));
        let v = verify_irreducible(&i, &extra).unwrap();
        assert!(!v.ok);
        assert_eq!(v.reason.as_deref(), Some("redundant component"));

        let x = ideal(1, &[&[1]]);
        assert!(verify_irreducible(&x, &[IrreducibleComponent(md(&[1]))]).unwrap().ok);
    }

    #[test]
    fn stanley_verifier() {
        let xy = ideal(2, &[&[1, 1]]);
        let cone = |b: &[Exponent], f: &[usize]| StanleyCone { base: md(b), free: f.to_vec() };
        let good = StanleyDecomposition {
            cones: vec![cone(&[0, 0], &[]), cone(&[1, 0], &[]), cone(&[0, 1], &[]), cone(&[2, 0], &[0]), cone(&[0, 2], &[1])],
        };
        assert!(verify_stanley(&xy, &good).unwrap().ok);

        let mut dup = good.clone();
        dup.cones.push(cone(&[1, 0], &[]));
        let v = verify_stanley(&xy, &dup).unwrap();
        assert_eq!((v.ok, v.witness), (false, Some(md(&[1, 0]))));

        let mut missing = good.clone();
        missing.cones.remove(0);
        let v = verify_stanley(&xy, &missing).unwrap();
        assert_eq!((v.ok, v.witness), (false, Some(md(&[0, 0]))));

        let bad = StanleyDecomposition { cones: vec![cone(&[1, 0], &[0, 1])] };
        assert!(!verify_stanley(&xy, &bad).unwrap().ok);
    }

    #[test]
    fn sampled_verification_reports_itself() {
        let i = eight_gens();
        let comps = eight_gens_components();
        let v = verify_irreducible_with(&i, &comps, SampleOptions { samples: 500, seed: 7 }).unwrap();
        assert!(v.ok && !v.sampled);
        // wide ideal: the box is too big, so sampling takes over
        let wide = MonomialIdeal::minimalize(
            (0..8).map(|k| Multidegree::pure_power(8, k, 20)),
            8,
        )
        .unwrap();
        let comps = vec![IrreducibleComponent(Multidegree::new(vec![20; 8]))];
        let v = verify_irreducible_with(&wide, &comps, SampleOptions { samples: 500, seed: 7 }).unwrap();
        assert!(v.ok && v.sampled);
        assert_eq!(v.checked, 500);
    }
}
