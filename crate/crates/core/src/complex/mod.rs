//! Finite cube complexes.
//!
//! A complex is stored as the face-closure of its cubes. Every cube keeps a
//! canonical parametrization: corner `i` is the corner whose binary
//! coordinates are the bits of `i`, the least vertex sits at corner 0 and the
//! axes are ordered by the neighbour of corner 0 along them. Two records that
//! differ by a symmetry of the cube therefore collapse to one.

mod ccx;
mod implicit;
mod link;
mod validate;

pub use ccx::{emit_ccx, parse_ccx};
pub use implicit::{ball, ball_vertices, ball_with_budget, ImplicitComplex, DEFAULT_VERTEX_BUDGET};
pub use link::{link, LinkComplex};
pub use validate::{validate, validate_with_jobs, Defect, ValidationReport};

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub(crate) u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Self {
        VertexId(i as u32)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeId(pub(crate) u32);

impl CubeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A cube given by its `2^dim` corners in binary order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cube {
    corners: Box<[VertexId]>,
}

impl Cube {
    pub(crate) fn from_canonical(corners: Vec<VertexId>) -> Self {
        Cube {
            corners: corners.into_boxed_slice(),
        }
    }

    pub fn dim(&self) -> usize {
        self.corners.len().trailing_zeros() as usize
    }

    pub fn corners(&self) -> &[VertexId] {
        &self.corners
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.corners.contains(&v)
    }

    pub fn vertex_set(&self) -> Vec<VertexId> {
        let mut s = self.corners.to_vec();
        s.sort_unstable();
        s
    }

    /// Neighbours of `v` inside this cube, one per axis.
    pub fn neighbors_of(&self, v: VertexId) -> Option<Vec<VertexId>> {
        let i = self.corners.iter().position(|&c| c == v)?;
        Some(
            (0..self.dim())
                .map(|j| self.corners[i ^ (1 << j)])
                .collect(),
        )
    }

    /// All faces (including the cube itself and its corners), canonicalized.
    pub fn faces(&self) -> Vec<Vec<VertexId>> {
        faces_of(&self.corners)
    }
}

/// Every face of the binary-ordered corner list, in canonical form.
pub(crate) fn faces_of<T: Copy + Ord>(corners: &[T]) -> Vec<Vec<T>> {
    let k = corners.len().trailing_zeros() as usize;
    let full = (1usize << k) - 1;
    let mut out = Vec::new();
    for free in 0..=full {
        let fixed_axes = full & !free;
        let free_axes: Vec<usize> = (0..k).filter(|j| free >> j & 1 == 1).collect();
        // iterate over all submasks of the fixed axes
        let mut vals = fixed_axes;
        loop {
            let face: Vec<T> = (0..1usize << free_axes.len())
                .map(|j| corners[vals | deposit(j, &free_axes)])
                .collect();
            out.push(canonical_corners(&face));
            if vals == 0 {
                break;
            }
            vals = (vals - 1) & fixed_axes;
        }
    }
    out
}

/// Spreads the low bits of `bits` onto the positions listed in `axes`.
pub(crate) fn deposit(bits: usize, axes: &[usize]) -> usize {
    axes.iter()
        .enumerate()
        .filter(|(t, _)| bits >> t & 1 == 1)
        .fold(0, |acc, (_, &a)| acc | 1 << a)
}

/// Canonical parametrization of a cube given in any binary corner order.
pub(crate) fn canonical_corners<T: Copy + Ord>(corners: &[T]) -> Vec<T> {
    let n = corners.len();
    let k = n.trailing_zeros() as usize;
    let origin = (0..n).min_by_key(|&i| corners[i]).unwrap_or(0);
    let reflected: Vec<T> = (0..n).map(|i| corners[i ^ origin]).collect();
    let mut axes: Vec<usize> = (0..k).collect();
    axes.sort_by_key(|&j| reflected[1 << j]);
    (0..n).map(|i| reflected[deposit(i, &axes)]).collect()
}

#[derive(Clone, Debug)]
pub struct CubeComplex {
    tokens: Vec<String>,
    lookup: HashMap<String, VertexId>,
    /// All cubes, sorted by dimension and then corners. The first
    /// `vertex_count()` entries are the 0-cubes in vertex order.
    cubes: Vec<Cube>,
    index: HashMap<Box<[VertexId]>, CubeId>,
    dim_start: Vec<usize>,
    adjacency: Vec<Vec<VertexId>>,
    cubes_at: Vec<Vec<CubeId>>,
}

impl PartialEq for CubeComplex {
    fn eq(&self, other: &Self) -> bool {
        self.tokens == other.tokens && self.cubes == other.cubes
    }
}

impl Eq for CubeComplex {}

impl CubeComplex {
    /// Builds the face-closure of the given cubes, each listed as corner
    /// tokens in binary order.
    pub fn from_cubes<I, C, S>(cubes: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: AsRef<[S]>,
        S: AsRef<str>,
    {
        Self::build(cubes, true)
    }

    /// Like [`CubeComplex::from_cubes`] but without adding faces. Only useful
    /// for exercising the closure check of [`validate`].
    pub fn from_cubes_unclosed<I, C, S>(cubes: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: AsRef<[S]>,
        S: AsRef<str>,
    {
        Self::build(cubes, false)
    }

    fn build<I, C, S>(cubes: I, close: bool) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: AsRef<[S]>,
        S: AsRef<str>,
    {
        let records: Vec<Vec<String>> = cubes
            .into_iter()
            .map(|c| c.as_ref().iter().map(|s| s.as_ref().to_owned()).collect())
            .collect();
        for (i, rec) in records.iter().enumerate() {
            check_record(rec, i + 1)?;
        }
        let tokens: Vec<String> = records
            .iter()
            .flatten()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let lookup: HashMap<String, VertexId> = tokens
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), VertexId::from_index(i)))
            .collect();
        let mut set: BTreeSet<(usize, Vec<VertexId>)> = BTreeSet::new();
        for rec in &records {
            let ids: Vec<VertexId> = rec.iter().map(|t| lookup[t]).collect();
            if close {
                for f in faces_of(&ids) {
                    set.insert((f.len(), f));
                }
            } else {
                let c = canonical_corners(&ids);
                set.insert((c.len(), c));
            }
        }
        if !close {
            // vertices are always present
            for i in 0..tokens.len() {
                set.insert((1, vec![VertexId::from_index(i)]));
            }
        }
        Ok(Self::assemble(
            tokens,
            lookup,
            set.into_iter().map(|(_, c)| c),
        ))
    }

    fn assemble(
        tokens: Vec<String>,
        lookup: HashMap<String, VertexId>,
        sorted: impl Iterator<Item = Vec<VertexId>>,
    ) -> Self {
        let n = tokens.len();
        let cubes: Vec<Cube> = sorted.map(Cube::from_canonical).collect();
        let mut dim_start = Vec::new();
        for (i, c) in cubes.iter().enumerate() {
            while dim_start.len() <= c.dim() {
                dim_start.push(i);
            }
        }
        dim_start.push(cubes.len());
        let index = cubes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.corners.clone(), CubeId(i as u32)))
            .collect();
        let mut adjacency = vec![Vec::new(); n];
        let mut cubes_at = vec![Vec::new(); n];
        for (i, c) in cubes.iter().enumerate() {
            if c.dim() == 0 {
                continue;
            }
            for &v in c.corners.iter() {
                cubes_at[v.index()].push(CubeId(i as u32));
            }
            if c.dim() == 1 {
                let (a, b) = (c.corners[0], c.corners[1]);
                adjacency[a.index()].push(b);
                adjacency[b.index()].push(a);
            }
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        CubeComplex {
            tokens,
            lookup,
            cubes,
            index,
            dim_start,
            adjacency,
            cubes_at,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.tokens.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.tokens.len()).map(VertexId::from_index)
    }

    pub fn token(&self, v: VertexId) -> &str {
        &self.tokens[v.index()]
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn vertex(&self, token: &str) -> Result<VertexId> {
        self.lookup
            .get(token)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(token.to_owned()))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.index() < self.tokens.len()
    }

    pub fn dimension(&self) -> usize {
        self.dim_start.len().saturating_sub(2)
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn cube(&self, id: CubeId) -> &Cube {
        &self.cubes[id.index()]
    }

    pub fn cube_ids(&self) -> impl Iterator<Item = CubeId> {
        (0..self.cubes.len() as u32).map(CubeId)
    }

    /// Cubes of dimension exactly `dim`.
    pub fn cubes_of_dim(&self, dim: usize) -> &[Cube] {
        match self.dim_range(dim) {
            Some((a, b)) => &self.cubes[a..b],
            None => &[],
        }
    }

    pub fn cube_ids_of_dim(&self, dim: usize) -> impl Iterator<Item = CubeId> {
        let (a, b) = self.dim_range(dim).unwrap_or((0, 0));
        (a as u32..b as u32).map(CubeId)
    }

    fn dim_range(&self, dim: usize) -> Option<(usize, usize)> {
        if dim + 1 < self.dim_start.len() {
            Some((self.dim_start[dim], self.dim_start[dim + 1]))
        } else {
            None
        }
    }

    pub fn count_of_dim(&self, dim: usize) -> usize {
        self.cubes_of_dim(dim).len()
    }

    pub fn edge_count(&self) -> usize {
        self.count_of_dim(1)
    }

    /// Edges as ordered vertex pairs `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.cubes_of_dim(1)
            .iter()
            .map(|c| (c.corners[0], c.corners[1]))
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v.index()]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.index()].len()
    }

    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u.index()].binary_search(&v).is_ok()
    }

    /// Cubes of positive dimension containing `v`.
    pub fn cubes_at(&self, v: VertexId) -> &[CubeId] {
        &self.cubes_at[v.index()]
    }

    /// Looks up a cube given its corners in any binary order.
    pub fn find_cube(&self, corners: &[VertexId]) -> Option<CubeId> {
        self.index
            .get(canonical_corners(corners).as_slice())
            .copied()
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<CubeId> {
        let key = if u < v { [u, v] } else { [v, u] };
        self.index.get(&key[..]).copied()
    }

    /// Position of an edge among the 1-cubes.
    pub fn edge_ordinal(&self, id: CubeId) -> usize {
        id.index() - self.dim_start.get(1).copied().unwrap_or(0)
    }

    /// Cubes that are not a proper face of another cube.
    pub fn maximal_cubes(&self) -> Vec<CubeId> {
        let mut covered = vec![false; self.cubes.len()];
        for c in &self.cubes {
            if c.dim() == 0 {
                continue;
            }
            for f in c.faces() {
                if f.len() < c.corners.len() {
                    if let Some(&id) = self.index.get(f.as_slice()) {
                        covered[id.index()] = true;
                    }
                }
            }
        }
        self.cube_ids().filter(|id| !covered[id.index()]).collect()
    }

    /// Corner tokens of a cube, in canonical binary order.
    pub fn cube_tokens(&self, id: CubeId) -> Vec<&str> {
        self.cube(id)
            .corners()
            .iter()
            .map(|&v| self.token(v))
            .collect()
    }

    /// Vertex sets of connected components of the 1-skeleton, in vertex order.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            let c = out.len();
            let mut comp = vec![VertexId::from_index(s)];
            label[s] = c;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in self.neighbors(u) {
                    if label[w.index()] == usize::MAX {
                        label[w.index()] = c;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Short summary of cube counts by dimension, e.g.
    /// `8 vertices, 12 edges, 6 squares, 1 cube`.
    pub fn summary(&self) -> String {
        let mut parts = vec![
            plural(self.vertex_count(), "vertex", "vertices"),
            plural(self.edge_count(), "edge", "edges"),
        ];
        for dim in 2..=self.dimension() {
            let k = self.count_of_dim(dim);
            parts.push(match dim {
                2 => plural(k, "square", "squares"),
                3 => plural(k, "cube", "cubes"),
                _ => plural(k, &format!("{dim}-cube"), &format!("{dim}-cubes")),
            });
        }
        parts.join(", ")
    }
}

fn plural(k: usize, one: &str, many: &str) -> String {
    format!("{k} {}", if k == 1 { one } else { many })
}

fn check_record(rec: &[String], line: usize) -> Result<()> {
    if rec.is_empty() || !rec.len().is_power_of_two() {
        return Err(Error::Parse {
            line,
            message: format!("corner count {} is not a power of two", rec.len()),
        });
    }
    let mut seen = BTreeSet::new();
    for t in rec {
        if !seen.insert(t.as_str()) {
            return Err(Error::DuplicateCorner {
                line,
                token: t.clone(),
            });
        }
    }
    Ok(())
}

impl fmt::Display for CubeComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit_ccx(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn canonical_form_is_symmetry_invariant() {
        // square a b c d with edges a-b, a-c, b-d, c-d
        let sq = [v(0), v(1), v(2), v(3)];
        let reflected = [v(1), v(0), v(3), v(2)];
        let swapped = [v(0), v(2), v(1), v(3)];
        let rotated = [v(2), v(0), v(3), v(1)];
        let c = canonical_corners(&sq);
        assert_eq!(c, sq.to_vec());
        assert_eq!(canonical_corners(&reflected), c);
        assert_eq!(canonical_corners(&swapped), c);
        assert_eq!(canonical_corners(&rotated), c);
        // a genuinely different square on the same vertices
        assert_ne!(canonical_corners(&[v(0), v(3), v(1), v(2)]), c);
    }

    #[test]
    fn face_count_of_cube_is_three_to_the_dim() {
        let corners: Vec<VertexId> = (0..8).map(v).collect();
        let faces = faces_of(&corners);
        assert_eq!(faces.len(), 27);
        let by_dim = |k: usize| faces.iter().filter(|f| f.len() == 1 << k).count();
        assert_eq!((by_dim(0), by_dim(1), by_dim(2), by_dim(3)), (8, 12, 6, 1));
    }

    #[test]
    fn duplicate_corner_rejected() {
        let err = CubeComplex::from_cubes([["a", "b", "a", "c"]]).unwrap_err();
        assert!(matches!(err, Error::DuplicateCorner { .. }));
    }

    #[test]
    fn non_power_of_two_rejected() {
        let err = CubeComplex::from_cubes([["a", "b", "c"]]).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn summary_of_square() {
        let x = CubeComplex::from_cubes([["a", "b", "c", "d"]]).unwrap();
        assert_eq!(x.summary(), "4 vertices, 4 edges, 1 square");
        assert_eq!(x.maximal_cubes().len(), 1);
        assert!(x.are_adjacent(x.vertex("a").unwrap(), x.vertex("b").unwrap()));
        assert!(!x.are_adjacent(x.vertex("a").unwrap(), x.vertex("d").unwrap()));
    }
}
