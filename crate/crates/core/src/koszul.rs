//! Koszul simplicial complexes of a monomial ideal at a multidegree, the
//! Koszul homology they compute, and the corner and free-direction
//! predicates derived from them.
//!
//! The upper complex at `μ` has the squarefree `τ ≤ μ` with `x^(μ-τ) ∈ I`;
//! its reduced homology in degree `i-1` is the Koszul homology `H_{i,μ}(I)`.
//! The lower complex has the `τ` with `x^(low(μ)+τ) ∉ I`; restricted to the
//! support of `μ` it is the Alexander dual of the upper one.

use crate::error::{check_len, Error, Result};
use crate::monomial::{Exponent, MonomialIdeal, Multidegree};
use crate::simplicial::{check_vertices, face_vertices, reduced_homology, Face, SimplicialComplex};

pub fn upper_complex(ideal: &MonomialIdeal, mu: &Multidegree) -> Result<SimplicialComplex> {
    check_len(ideal.nvars(), mu.len())?;
    SimplicialComplex::from_predicate(ideal.nvars(), |tau| match mu.minus_squarefree(tau) {
        Some(rest) => ideal.contains_slice(rest.as_slice()),
        None => false,
    })
}

pub fn lower_complex(ideal: &MonomialIdeal, mu: &Multidegree) -> Result<SimplicialComplex> {
    check_len(ideal.nvars(), mu.len())?;
    let low = mu.lowered();
    let mut buf = low.as_slice().to_vec();
    SimplicialComplex::from_predicate(ideal.nvars(), |tau| {
        for (i, b) in buf.iter_mut().enumerate() {
            *b = low.get(i) + (tau >> i & 1) as Exponent;
        }
        !ideal.contains_slice(&buf)
    })
}

/// `dim_k H_{i,μ}(K(I))` through the upper Koszul complex.
pub fn koszul_homology_dim(ideal: &MonomialIdeal, i: usize, mu: &Multidegree) -> Result<usize> {
    if i > ideal.nvars() {
        return Err(Error::InvalidInput(format!(
            "homological degree {i} exceeds the number of variables {}",
            ideal.nvars()
        )));
    }
    let delta = upper_complex(ideal, mu)?;
    Ok(reduced_homology(&delta).dim(i as isize - 1))
}

/// `x^low(μ) ∉ I` and `x_i · x^low(μ) ∈ I` for every `i` in the support.
pub fn is_closed_corner(ideal: &MonomialIdeal, mu: &Multidegree) -> Result<bool> {
    check_len(ideal.nvars(), mu.len())?;
    let low = mu.lowered();
    if ideal.contains_slice(low.as_slice()) {
        return Ok(false);
    }
    let mut buf = low.as_slice().to_vec();
    for i in mu.support() {
        buf[i] += 1;
        let inside = ideal.contains_slice(&buf);
        buf[i] -= 1;
        if !inside {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Closed corner with full support; equivalently `μ ∈ B_{n-1}(I)`.
pub fn is_maximal_corner(ideal: &MonomialIdeal, mu: &Multidegree) -> Result<bool> {
    check_len(ideal.nvars(), mu.len())?;
    Ok(mu.has_full_support() && is_closed_corner(ideal, mu)?)
}

/// Cones of locally free directions: facets of the lower complex.
pub fn lfd(ideal: &MonomialIdeal, mu: &Multidegree) -> Result<Vec<Vec<usize>>> {
    let delta = lower_complex(ideal, mu)?;
    Ok(delta.facets().into_iter().map(|f| face_vertices(f).collect()).collect())
}

/// Cones of globally free directions at `x^μ` (at `x^low(μ)` when
/// `x^μ ∈ I`): inclusion-maximal nonempty variable sets `D` such that every
/// `x^μ · x^σ` with `σ` supported on `D` stays outside `I`.
///
/// Membership only depends on exponents capped at `λ_i + 1`, so `D` is free
/// exactly when the point pushed to `λ_i + 1` along `D` is standard.
pub fn gfd(ideal: &MonomialIdeal, mu: &Multidegree) -> Result<Vec<Vec<usize>>> {
    check_len(ideal.nvars(), mu.len())?;
    let n = ideal.nvars();
    check_vertices(n)?;
    if ideal.is_zero() {
        return Ok(vec![(0..n).collect()]);
    }
    let lambda = ideal.lambda()?;
    let base = if ideal.contains_slice(mu.as_slice()) { mu.lowered() } else { mu.clone() };
    if ideal.contains_slice(base.as_slice()) {
        return Ok(Vec::new());
    }
    let mut buf = base.as_slice().to_vec();
    let free: Vec<bool> = (0..1u64 << n)
        .map(|d: Face| {
            for (i, b) in buf.iter_mut().enumerate() {
                let e = base.get(i);
                *b = if d >> i & 1 == 1 { e.max(lambda.get(i).saturating_add(1)) } else { e };
            }
            !ideal.contains_slice(&buf)
        })
        .collect();
    let maximal = (1..1u64 << n)
        .filter(|&d| free[d as usize])
        .filter(|&d| (0..n).all(|v| d >> v & 1 == 1 || !free[(d | 1 << v) as usize]))
        .map(|d| face_vertices(d).collect())
        .collect();
    Ok(maximal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::tests::{staircase, ideal, md, eight_gens};

    #[test]
    fn upper_complex_examples() {
        let i = staircase();
        let d = upper_complex(&i, &md(&[3, 1, 1])).unwrap();
        assert_eq!(d.faces(), &[0, 1, 2, 4, 3, 5, 6]);
        let d = upper_complex(&i, &md(&[1, 1, 1])).unwrap();
        assert_eq!(d.faces(), &[0, 0b010]);
        // at a generator the empty face is present
        for g in i.generators() {
            assert!(upper_complex(&i, g).unwrap().contains_face(0));
        }
    }

    #[test]
    fn lower_complex_examples() {
        let d = lower_complex(&staircase(), &md(&[1, 1, 1])).unwrap();
        assert_eq!(d.faces(), &[0, 0b001, 0b010, 0b100, 0b011, 0b110]);
        let x = ideal(1, &[&[1]]);
        assert_eq!(lower_complex(&x, &md(&[1])).unwrap().faces(), &[0]);
        assert!(lower_complex(&MonomialIdeal::unit(2), &md(&[3, 1])).unwrap().is_void());
    }

    #[test]
    fn koszul_dims() {
        let i = staircase();
        assert_eq!(koszul_homology_dim(&i, 2, &md(&[3, 1, 1])).unwrap(), 1);
        assert_eq!(koszul_homology_dim(&i, 2, &md(&[1, 1, 1])).unwrap(), 0);
        for g in i.generators() {
            assert_eq!(koszul_homology_dim(&i, 0, g).unwrap(), 1);
        }
        assert!(koszul_homology_dim(&i, 4, &md(&[1, 1, 1])).is_err());
    }

    #[test]
    fn staircase_corners() {
        let i = staircase();
        for g in [[0, 3, 3], [2, 3, 0], [3, 0, 1], [3, 1, 0], [1, 0, 3]] {
            assert!(is_closed_corner(&i, &md(&g)).unwrap(), "{g:?}");
        }
        assert!(!is_closed_corner(&i, &md(&[1, 1, 1])).unwrap());
        for g in [[3, 1, 1], [2, 3, 1], [1, 3, 3]] {
            assert!(is_maximal_corner(&i, &md(&g)).unwrap());
        }
        assert!(!is_maximal_corner(&i, &md(&[0, 3, 3])).unwrap());
        let hat = eight_gens().artinian_closure().unwrap();
        assert!(is_maximal_corner(&hat, &md(&[4, 5, 5])).unwrap());
    }

    #[test]
    fn free_directions() {
        let i = staircase();
        assert_eq!(lfd(&i, &md(&[1, 1, 1])).unwrap(), vec![vec![0, 1], vec![1, 2]]);
        assert!(gfd(&i, &md(&[1, 1, 1])).unwrap().is_empty());

        let j = ideal(3, &[&[2, 1, 0], &[1, 0, 1], &[0, 3, 0], &[0, 0, 3]]);
        assert_eq!(lfd(&j, &md(&[1, 1, 1])).unwrap(), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(gfd(&j, &md(&[1, 1, 1])).unwrap(), vec![vec![0]]);

        assert!(lfd(&MonomialIdeal::unit(2), &md(&[1, 1])).unwrap().is_empty());
        assert_eq!(lfd(&ideal(2, &[&[1, 0]]), &md(&[1, 1])).unwrap(), vec![vec![1]]);
        assert_eq!(gfd(&ideal(2, &[&[1, 1]]), &md(&[2, 0])).unwrap(), vec![vec![0]]);
    }
}
