//! Finite simplicial complexes on `{0..n}` with faces stored as bitmasks,
//! and their reduced homology over a field of characteristic zero.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{exact_rank, IntMatrix};

/// Largest vertex count for which complexes are materialized (`2^n` faces).
pub const MAX_VERTICES: usize = 24;

/// A face, as the set of its vertices encoded in the low `n` bits.
pub type Face = u64;

pub fn face_vertices(face: Face) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| face >> i & 1 == 1)
}

pub fn face_from_vertices(vs: impl IntoIterator<Item = usize>) -> Face {
    vs.into_iter().fold(0, |acc, v| acc | 1 << v)
}

/// Downward-closed family of faces. No faces at all is the void complex;
/// the empty face alone is the irrelevant complex `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    faces: Vec<Face>,
}

pub(crate) fn check_vertices(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Scale(format!("{n} vertices exceed the limit of {MAX_VERTICES} for explicit complexes")))
    } else {
        Ok(())
    }
}

impl SimplicialComplex {
    /// Validates downward closure.
    pub fn new(n: usize, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        check_vertices(n)?;
        let mut faces: Vec<Face> = faces.into_iter().collect();
        faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
        faces.dedup();
        let set: std::collections::HashSet<Face> = faces.iter().copied().collect();
        for &f in &faces {
            if f >> n != 0 {
                return Err(Error::InvalidInput(format!("face {f:#b} uses a vertex outside 0..{n}")));
            }
            for v in face_vertices(f) {
                if !set.contains(&(f & !(1 << v))) {
                    return Err(Error::InvalidInput(format!("face {f:#b} has a missing boundary face")));
                }
            }
        }
        Ok(SimplicialComplex { n, faces })
    }

    /// All subsets of `{0..n}` satisfying `keep`; `keep` must be closed
    /// under taking subsets.
    pub(crate) fn from_predicate(n: usize, mut keep: impl FnMut(Face) -> bool) -> Result<Self> {
        check_vertices(n)?;
        let mut faces: Vec<Face> = (0..1u64 << n).filter(|&f| keep(f)).collect();
        faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
        debug_assert!(faces.iter().all(|&f| face_vertices(f).all(|v| faces.contains(&(f & !(1 << v))))));
        Ok(SimplicialComplex { n, faces })
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, faces: Vec::new() }
    }

    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex { n, faces: vec![0] }
    }

    /// Full simplex on the given vertices.
    pub fn simplex(n: usize, vertices: Face) -> Result<Self> {
        check_vertices(n)?;
        let mut faces = Vec::new();
        let mut sub = vertices;
        loop {
            faces.push(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & vertices;
        }
        SimplicialComplex::new(n, faces)
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains_face(&self, f: Face) -> bool {
        self.faces.binary_search_by_key(&(f.count_ones(), f), |&g| (g.count_ones(), g)).is_ok()
    }

    /// Dimension of the largest face; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.faces.last().map(|&f| f.count_ones() as isize - 1)
    }

    /// Inclusion-maximal faces, in canonical order.
    pub fn facets(&self) -> Vec<Face> {
        self.faces
            .iter()
            .copied()
            .filter(|&f| {
                (0..self.n).all(|v| f >> v & 1 == 1 || !self.contains_face(f | 1 << v))
            })
            .collect()
    }

    /// Subcomplex of the faces contained in `vertices`.
    pub fn induced(&self, vertices: Face) -> SimplicialComplex {
        SimplicialComplex {
            n: self.n,
            faces: self.faces.iter().copied().filter(|&f| f & !vertices == 0).collect(),
        }
    }

    /// Number of faces of each dimension `-1 ..= n-1`, indexed from zero.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.n + 1];
        for &face in &self.faces {
            f[face.count_ones() as usize] += 1;
        }
        f
    }
}

/// Ranks of reduced homology: `dims[k]` is `dim H̃_{k-1}`, for degrees
/// `-1 ..= n-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    dims: Vec<usize>,
}

impl HomologyProfile {
    /// `dim H̃_degree`; zero outside `-1 ..= n-1`.
    pub fn dim(&self, degree: isize) -> usize {
        if degree < -1 {
            return 0;
        }
        self.dims.get((degree + 1) as usize).copied().unwrap_or(0)
    }

    /// Entries for degrees `-1, 0, …, n-1`.
    pub fn as_slice(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }
}

/// Exact reduced homology ranks, using the augmented chain complex in which
/// the empty face spans degree `-1`.
pub fn reduced_homology(complex: &SimplicialComplex) -> HomologyProfile {
    let n = complex.n;
    let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); n + 1];
    for &f in complex.faces() {
        by_size[f.count_ones() as usize].push(f);
    }
    // rank of the boundary from faces with k vertices to faces with k-1
    let mut ranks = vec![0usize; n + 2];
    for k in 1..=n {
        if by_size[k].is_empty() || by_size[k - 1].is_empty() {
            continue;
        }
        let index: HashMap<Face, usize> =
            by_size[k - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut m = IntMatrix::<i64>::zeros(by_size[k - 1].len(), by_size[k].len());
        for (col, &f) in by_size[k].iter().enumerate() {
            for (j, v) in face_vertices(f).enumerate() {
                let row = index[&(f & !(1 << v))];
                m.set(row, col, if j % 2 == 0 { 1 } else { -1 });
            }
        }
        ranks[k] = exact_rank(&m);
    }
    let dims = (0..=n)
        .map(|k| by_size[k].len() - ranks[k] - ranks[k + 1])
        .collect();
    HomologyProfile { dims }
}
