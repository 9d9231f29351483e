//! Combinatorial distance, crossing sequences and convexity.

use std::collections::{HashSet, VecDeque};

use crate::complex::{CubeComplex, VertexId};
use crate::error::{Error, Result};
use crate::hyperplanes::{Halfspaces, Walls};

pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs BFS distances.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(x: &CubeComplex) -> Self {
        let n = x.vertex_count();
        let mut d = vec![UNREACHABLE; n * n];
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            bfs_into(x, VertexId::from_index(s), row);
        }
        DistanceMatrix { n, d }
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.d[u.index() * self.n + v.index()]
    }

    pub fn row(&self, u: VertexId) -> &[u32] {
        &self.d[u.index() * self.n..(u.index() + 1) * self.n]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn diameter(&self) -> u32 {
        self.d
            .iter()
            .copied()
            .filter(|&x| x != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }

    /// Vertices on some geodesic from `u` to `v`.
    pub fn interval(&self, u: VertexId, v: VertexId) -> Vec<VertexId> {
        let (du, dv) = (self.row(u), self.row(v));
        let target = du[v.index()];
        if target == UNREACHABLE {
            return Vec::new();
        }
        (0..self.n)
            .filter(|&w| du[w] != UNREACHABLE && dv[w] != UNREACHABLE && du[w] + dv[w] == target)
            .map(VertexId::from_index)
            .collect()
    }
}

fn bfs_into(x: &CubeComplex, s: VertexId, row: &mut [u32]) {
    row[s.index()] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let du = row[u.index()];
        for &w in x.neighbors(u) {
            if row[w.index()] == UNREACHABLE {
                row[w.index()] = du + 1;
                queue.push_back(w);
            }
        }
    }
}

/// Breadth-first distance between two vertices.
pub fn distance(x: &CubeComplex, u: VertexId, v: VertexId) -> Result<usize> {
    for w in [u, v] {
        if !x.contains_vertex(w) {
            return Err(Error::UnknownVertex(format!("#{}", w.index())));
        }
    }
    let mut row = vec![UNREACHABLE; x.vertex_count()];
    bfs_into(x, u, &mut row);
    match row[v.index()] {
        UNREACHABLE => Err(Error::Disconnected(
            x.token(u).to_owned(),
            x.token(v).to_owned(),
        )),
        d => Ok(d as usize),
    }
}

/// A geodesic from `u` to `v`; among neighbours, the least vertex is taken
/// at every step.
pub fn geodesic(
    x: &CubeComplex,
    dm: &DistanceMatrix,
    u: VertexId,
    v: VertexId,
) -> Result<Vec<VertexId>> {
    let total = dm.get(u, v);
    if total == UNREACHABLE {
        return Err(Error::Disconnected(
            x.token(u).to_owned(),
            x.token(v).to_owned(),
        ));
    }
    let mut path = vec![u];
    let mut cur = u;
    while cur != v {
        let d = dm.get(cur, v);
        cur = *x
            .neighbors(cur)
            .iter()
            .find(|&&w| dm.get(w, v) + 1 == d)
            .expect("BFS distances always decrease along some edge");
        path.push(cur);
    }
    Ok(path)
}

/// Number of walls whose halfspaces separate `u` and `v`.
pub fn separating_wall_count(halfspaces: &[Halfspaces], u: VertexId, v: VertexId) -> usize {
    halfspaces
        .iter()
        .filter(|h| h.side_of(u) != h.side_of(v))
        .count()
}

/// A path of vertices with repeated consecutive entries removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialPath {
    vertices: Vec<VertexId>,
    stuttered: bool,
}

impl CombinatorialPath {
    /// Normalizes away stutters, then checks every step is an edge.
    pub fn new(x: &CubeComplex, mut vertices: Vec<VertexId>) -> Result<Self> {
        let before = vertices.len();
        vertices.dedup();
        let stuttered = vertices.len() != before;
        for w in &vertices {
            if !x.contains_vertex(*w) {
                return Err(Error::UnknownVertex(format!("#{}", w.index())));
            }
        }
        for pair in vertices.windows(2) {
            if !x.are_adjacent(pair[0], pair[1]) {
                return Err(Error::InvalidStep(
                    x.token(pair[0]).to_owned(),
                    x.token(pair[1]).to_owned(),
                ));
            }
        }
        Ok(CombinatorialPath {
            vertices,
            stuttered,
        })
    }

    pub fn from_tokens<S: AsRef<str>>(x: &CubeComplex, tokens: &[S]) -> Result<Self> {
        let vs = tokens
            .iter()
            .map(|t| x.vertex(t.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(x, vs)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether the input had repeated consecutive vertices.
    pub fn was_stuttering(&self) -> bool {
        self.stuttered
    }

    pub fn start(&self) -> Option<VertexId> {
        self.vertices.first().copied()
    }

    pub fn end(&self) -> Option<VertexId> {
        self.vertices.last().copied()
    }
}

/// Walls dual to the successive edges of a path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingSequence {
    pub walls: Vec<usize>,
}

impl CrossingSequence {
    /// The wall whose second crossing comes first along the path.
    pub fn first_repeat(&self) -> Option<usize> {
        let mut seen = HashSet::new();
        self.walls.iter().copied().find(|w| !seen.insert(*w))
    }

    pub fn has_repetition(&self) -> bool {
        self.first_repeat().is_some()
    }
}

pub fn crossing_sequence(
    x: &CubeComplex,
    walls: &Walls,
    path: &CombinatorialPath,
) -> Result<CrossingSequence> {
    let ws = path
        .vertices
        .windows(2)
        .map(|p| {
            walls.wall_of_edge(x, p[0], p[1]).ok_or_else(|| {
                Error::InvalidStep(x.token(p[0]).to_owned(), x.token(p[1]).to_owned())
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CrossingSequence { walls: ws })
}

/// Geodesic test by crossing sequences: no wall may be crossed twice.
pub fn is_geodesic(x: &CubeComplex, walls: &Walls, path: &CombinatorialPath) -> Result<bool> {
    Ok(!crossing_sequence(x, walls, path)?.has_repetition())
}

/// Geodesic test by length: the path is as short as its endpoints allow.
pub fn is_geodesic_by_length(dm: &DistanceMatrix, path: &CombinatorialPath) -> bool {
    match (path.start(), path.end()) {
        (Some(a), Some(b)) => dm.get(a, b) as usize == path.len(),
        _ => true,
    }
}

/// Whether `set` spans a connected subcomplex and every geodesic between
/// its vertices stays inside it.
pub fn is_convex(x: &CubeComplex, dm: &DistanceMatrix, set: &[VertexId]) -> Result<bool> {
    let n = x.vertex_count();
    let mut member = vec![false; n];
    for &v in set {
        if !x.contains_vertex(v) {
            return Err(Error::UnknownVertex(format!("#{}", v.index())));
        }
        member[v.index()] = true;
    }
    // convex subcomplexes are connected by definition
    if !spans_connected(x, set, &member) {
        return Ok(false);
    }
    let outside: Vec<usize> = (0..n).filter(|&w| !member[w]).collect();
    for (i, &u) in set.iter().enumerate() {
        let du = dm.row(u);
        for &v in &set[i + 1..] {
            let dv = dm.row(v);
            let target = du[v.index()];
            if outside
                .iter()
                .any(|&w| du[w].saturating_add(dv[w]) == target)
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn spans_connected(x: &CubeComplex, set: &[VertexId], member: &[bool]) -> bool {
    let Some(&start) = set.first() else {
        return true;
    };
    let mut seen = vec![false; member.len()];
    seen[start.index()] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in x.neighbors(u) {
            if member[w.index()] && !seen[w.index()] {
                seen[w.index()] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    let distinct = member.iter().filter(|&&b| b).count();
    count == distinct
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::parse_ccx;
    use crate::hyperplanes::walls;

    fn cube3() -> CubeComplex {
        parse_ccx("ccx 1\ncube 000 001 010 011 100 101 110 111\n").unwrap()
    }

    #[test]
    fn hamming_distance_on_cube() {
        let x = cube3();
        let (a, b) = (x.vertex("000").unwrap(), x.vertex("111").unwrap());
        assert_eq!(distance(&x, a, b).unwrap(), 3);
        assert_eq!(distance(&x, a, a).unwrap(), 0);
    }

    #[test]
    fn disconnected_pair() {
        let x = parse_ccx("ccx 1\ncube a b\ncube c d\n").unwrap();
        let err = distance(&x, x.vertex("a").unwrap(), x.vertex("c").unwrap()).unwrap_err();
        assert!(matches!(err, Error::Disconnected(..)));
    }

    #[test]
    fn crossing_sequences() {
        let x = cube3();
        let w = walls(&x);
        let p = CombinatorialPath::from_tokens(&x, &["000", "001", "011", "111"]).unwrap();
        let seq = crossing_sequence(&x, &w, &p).unwrap();
        assert_eq!(seq.walls.len(), 3);
        assert!(!seq.has_repetition());
        assert!(is_geodesic(&x, &w, &p).unwrap());

        let back = CombinatorialPath::from_tokens(&x, &["000", "001", "000"]).unwrap();
        let seq = crossing_sequence(&x, &w, &back).unwrap();
        assert_eq!(seq.walls[0], seq.walls[1]);
        assert!(!is_geodesic(&x, &w, &back).unwrap());

        let single = CombinatorialPath::from_tokens(&x, &["000", "001"]).unwrap();
        assert_eq!(crossing_sequence(&x, &w, &single).unwrap().walls.len(), 1);
    }

    #[test]
    fn stutters_are_collapsed() {
        let x = cube3();
        let p = CombinatorialPath::from_tokens(&x, &["000", "000", "001", "001", "011"]).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.was_stuttering());
    }

    #[test]
    fn non_edge_step_rejected() {
        let x = cube3();
        let err = CombinatorialPath::from_tokens(&x, &["000", "011"]).unwrap_err();
        assert!(matches!(err, Error::InvalidStep(..)));
    }

    #[test]
    fn convexity() {
        let x = parse_ccx("ccx 1\ncube a b c d\n").unwrap();
        let dm = DistanceMatrix::new(&x);
        let all: Vec<_> = x.vertices().collect();
        assert!(is_convex(&x, &dm, &all).unwrap());
        let edge = [x.vertex("a").unwrap(), x.vertex("b").unwrap()];
        assert!(is_convex(&x, &dm, &edge).unwrap());
        let diag = [x.vertex("a").unwrap(), x.vertex("d").unwrap()];
        assert!(!is_convex(&x, &dm, &diag).unwrap());
        let path = [
            x.vertex("a").unwrap(),
            x.vertex("b").unwrap(),
            x.vertex("d").unwrap(),
        ];
        assert!(!is_convex(&x, &dm, &path).unwrap());
    }

    #[test]
    fn interval_of_opposite_corners() {
        let x = cube3();
        let dm = DistanceMatrix::new(&x);
        let i = dm.interval(x.vertex("000").unwrap(), x.vertex("111").unwrap());
        assert_eq!(i.len(), 8);
        assert_eq!(dm.diameter(), 3);
    }
}
