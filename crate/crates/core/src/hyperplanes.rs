//! Walls, halfspaces, carriers and carrier reflections.

use std::collections::VecDeque;

use petgraph::unionfind::UnionFind;

use crate::automorphism::Automorphism;
use crate::complex::{CubeComplex, CubeId, VertexId};
use crate::error::{Error, Result};

/// One parallelism class of edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub id: usize,
    /// Edges as `(lesser, greater)` vertex pairs, sorted.
    pub edges: Vec<(VertexId, VertexId)>,
}

impl Wall {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// The partition of the edge set into walls. Walls are numbered by their
/// least edge.
#[derive(Clone, Debug)]
pub struct Walls {
    walls: Vec<Wall>,
    // wall id per edge ordinal
    of_edge: Vec<usize>,
}

impl Walls {
    pub fn len(&self) -> usize {
        self.walls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walls.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Wall> {
        self.walls.iter()
    }

    pub fn get(&self, id: usize) -> Option<&Wall> {
        self.walls.get(id)
    }

    pub fn as_slice(&self) -> &[Wall] {
        &self.walls
    }

    /// Wall dual to the edge `u`-`v`, if it is an edge.
    pub fn wall_of_edge(&self, x: &CubeComplex, u: VertexId, v: VertexId) -> Option<usize> {
        let id = x.edge_id(u, v)?;
        Some(self.of_edge[x.edge_ordinal(id)])
    }

    pub fn wall_of_edge_id(&self, x: &CubeComplex, id: CubeId) -> usize {
        self.of_edge[x.edge_ordinal(id)]
    }
}

impl<'a> IntoIterator for &'a Walls {
    type Item = &'a Wall;
    type IntoIter = std::slice::Iter<'a, Wall>;

    fn into_iter(self) -> Self::IntoIter {
        self.walls.iter()
    }
}

/// Union-find closure of elementary parallelism over all squares.
pub fn walls(x: &CubeComplex) -> Walls {
    let edges: Vec<(VertexId, VertexId)> = x.edges().collect();
    let mut uf = UnionFind::<usize>::new(edges.len());
    let ord = |a: VertexId, b: VertexId| x.edge_ordinal(x.edge_id(a, b).expect("square edge"));
    for sq in x.cubes_of_dim(2) {
        let c = sq.corners();
        uf.union(ord(c[0], c[1]), ord(c[2], c[3]));
        uf.union(ord(c[0], c[2]), ord(c[1], c[3]));
    }
    let mut id_of_root = vec![usize::MAX; edges.len()];
    let mut of_edge = vec![0; edges.len()];
    let mut walls: Vec<Wall> = Vec::new();
    for (e, &pair) in edges.iter().enumerate() {
        let root = uf.find(e);
        if id_of_root[root] == usize::MAX {
            id_of_root[root] = walls.len();
            walls.push(Wall {
                id: walls.len(),
                edges: Vec::new(),
            });
        }
        let id = id_of_root[root];
        of_edge[e] = id;
        walls[id].edges.push(pair);
    }
    Walls { walls, of_edge }
}

/// The two sides of a wall.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halfspaces {
    pub wall: usize,
    pub side0: Vec<VertexId>,
    pub side1: Vec<VertexId>,
    in_side1: Vec<bool>,
}

impl Halfspaces {
    /// `false` for `side0`, `true` for `side1`.
    pub fn side_of(&self, v: VertexId) -> bool {
        self.in_side1[v.index()]
    }

    pub fn side(&self, which: bool) -> &[VertexId] {
        if which {
            &self.side1
        } else {
            &self.side0
        }
    }
}

/// Components of the 1-skeleton after deleting the edges of `wall`.
pub fn halfspaces(x: &CubeComplex, wall: &Wall) -> Result<Halfspaces> {
    let n = x.vertex_count();
    let mut cut = vec![false; x.edge_count()];
    for &(u, v) in &wall.edges {
        let id = x
            .edge_id(u, v)
            .ok_or_else(|| Error::InvalidStep(x.token(u).to_owned(), x.token(v).to_owned()))?;
        cut[x.edge_ordinal(id)] = true;
    }
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        let mut queue = VecDeque::from([VertexId::from_index(s)]);
        while let Some(u) = queue.pop_front() {
            for &w in x.neighbors(u) {
                let e = x.edge_ordinal(x.edge_id(u, w).expect("adjacent"));
                if !cut[e] && label[w.index()] == usize::MAX {
                    label[w.index()] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    let failure = Error::SeparationFailure {
        wall: wall.id,
        components: count,
    };
    if count != 2 {
        return Err(failure);
    }
    // a dual edge inside one side means the wall does not separate
    if wall
        .edges
        .iter()
        .any(|&(u, v)| label[u.index()] == label[v.index()])
    {
        return Err(failure);
    }
    // vertex 0 carries the least token
    let in_side1: Vec<bool> = label.iter().map(|&l| l != label[0]).collect();
    let (mut side0, mut side1) = (Vec::new(), Vec::new());
    for v in x.vertices() {
        if in_side1[v.index()] {
            side1.push(v);
        } else {
            side0.push(v);
        }
    }
    Ok(Halfspaces {
        wall: wall.id,
        side0,
        side1,
        in_side1,
    })
}

/// Halfspaces of every wall, indexed by wall id.
pub fn all_halfspaces(x: &CubeComplex, walls: &Walls) -> Result<Vec<Halfspaces>> {
    walls.iter().map(|w| halfspaces(x, w)).collect()
}

pub fn separates(h: &Halfspaces, u: VertexId, v: VertexId) -> Result<bool> {
    for w in [u, v] {
        if w.index() >= h.in_side1.len() {
            return Err(Error::UnknownVertex(format!("#{}", w.index())));
        }
    }
    Ok(h.side_of(u) != h.side_of(v))
}

/// All cubes containing an edge of a wall, with their faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    pub wall: usize,
    /// Cubes of the carrier (all dimensions), sorted.
    pub cubes: Vec<CubeId>,
    pub vertices: Vec<VertexId>,
}

impl Carrier {
    /// The carrier as a complex of its own, with the original tokens.
    pub fn subcomplex(&self, x: &CubeComplex) -> CubeComplex {
        CubeComplex::from_cubes(self.cubes.iter().map(|&c| x.cube_tokens(c)))
            .expect("faces of a valid complex")
    }
}

pub fn carrier(x: &CubeComplex, walls: &Walls, wall: usize) -> Carrier {
    let mut in_carrier = vec![false; x.cubes().len()];
    let mut vert = vec![false; x.vertex_count()];
    for &(u, v) in &walls.as_slice()[wall].edges {
        for &c in x.cubes_at(u) {
            let cube = x.cube(c);
            let dual = cube.neighbors_of(u).is_some_and(|nb| nb.contains(&v));
            if !dual || in_carrier[c.index()] {
                continue;
            }
            for f in cube.faces() {
                if let Some(id) = x.find_cube(&f) {
                    in_carrier[id.index()] = true;
                }
            }
            for &corner in cube.corners() {
                vert[corner.index()] = true;
            }
        }
    }
    Carrier {
        wall,
        cubes: x.cube_ids().filter(|c| in_carrier[c.index()]).collect(),
        vertices: x.vertices().filter(|v| vert[v.index()]).collect(),
    }
}

/// The unique neighbour of `v` across `wall`.
pub fn partner(x: &CubeComplex, walls: &Walls, wall: usize, v: VertexId) -> Result<VertexId> {
    let across: Vec<VertexId> = x
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&w| walls.wall_of_edge(x, v, w) == Some(wall))
        .collect();
    match across.as_slice() {
        [w] => Ok(*w),
        _ => Err(Error::AmbiguousDualEdge {
            wall: wall.to_string(),
            vertex: x.token(v).to_owned(),
            count: across.len(),
        }),
    }
}

/// The reflection of a carrier across its wall.
#[derive(Clone, Debug)]
pub struct Reflection {
    pub carrier: Carrier,
    /// The carrier as a standalone complex; `map` acts on it.
    pub subcomplex: CubeComplex,
    pub map: Automorphism,
}

impl Reflection {
    /// Image of a vertex of the ambient complex, if it lies in the carrier.
    pub fn apply(&self, x: &CubeComplex, v: VertexId) -> Option<VertexId> {
        let local = self.subcomplex.vertex(x.token(v)).ok()?;
        x.vertex(self.subcomplex.token(self.map.apply(local))).ok()
    }
}

/// Swaps the endpoints of every dual edge; validated as an automorphism of
/// the carrier.
pub fn reflection(x: &CubeComplex, walls: &Walls, wall: usize) -> Result<Reflection> {
    let carrier = carrier(x, walls, wall);
    let sub = carrier.subcomplex(x);
    let mut forward = vec![VertexId::from_index(0); sub.vertex_count()];
    for &v in &carrier.vertices {
        let w = partner(x, walls, wall, v)?;
        let (lv, lw) = (sub.vertex(x.token(v))?, sub.vertex(x.token(w))?);
        forward[lv.index()] = lw;
    }
    let map = Automorphism::new(&sub, forward)?;
    Ok(Reflection {
        carrier,
        subcomplex: sub,
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::parse_ccx;

    fn cube3() -> CubeComplex {
        parse_ccx("ccx 1\ncube 000 001 010 011 100 101 110 111\n").unwrap()
    }

    #[test]
    fn cube_has_three_walls_of_four() {
        let x = cube3();
        let w = walls(&x);
        assert_eq!(w.len(), 3);
        assert!(w.iter().all(|w| w.len() == 4));
        for wall in &w {
            let h = halfspaces(&x, wall).unwrap();
            assert_eq!((h.side0.len(), h.side1.len()), (4, 4));
        }
    }

    #[test]
    fn single_edge() {
        let x = parse_ccx("ccx 1\ncube a b\n").unwrap();
        let w = walls(&x);
        assert_eq!(w.len(), 1);
        let h = halfspaces(&x, w.get(0).unwrap()).unwrap();
        assert_eq!(h.side0, vec![x.vertex("a").unwrap()]);
        assert_eq!(h.side1, vec![x.vertex("b").unwrap()]);
        let a = x.vertex("a").unwrap();
        assert!(!separates(&h, a, a).unwrap());
    }

    #[test]
    fn strip_of_two_squares() {
        let x = parse_ccx("ccx 1\ncube a b d e\ncube b c e f\n").unwrap();
        let w = walls(&x);
        let mut sizes: Vec<usize> = w.iter().map(Wall::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 3]);
    }

    #[test]
    fn empty_four_cycle_does_not_separate() {
        let x = parse_ccx("ccx 1\ncube a b\ncube b c\ncube c d\ncube d a\n").unwrap();
        let w = walls(&x);
        assert_eq!(w.len(), 4);
        let err = halfspaces(&x, w.get(0).unwrap()).unwrap_err();
        assert!(matches!(
            err,
            Error::SeparationFailure { components: 1, .. }
        ));
    }

    #[test]
    fn path_carrier_is_one_edge() {
        let x = parse_ccx("ccx 1\ncube a b\ncube b c\n").unwrap();
        let w = walls(&x);
        let ab = w
            .wall_of_edge(&x, x.vertex("a").unwrap(), x.vertex("b").unwrap())
            .unwrap();
        let c = carrier(&x, &w, ab);
        assert_eq!(c.vertices.len(), 2);
        assert_eq!(c.cubes.len(), 3);
    }

    #[test]
    fn cube_reflection_flips_one_bit() {
        let x = cube3();
        let w = walls(&x);
        for id in 0..3 {
            let r = reflection(&x, &w, id).unwrap();
            assert_eq!(r.carrier.vertices.len(), 8);
            assert!(r.map.compose(&r.map).is_identity());
            let moved: Vec<(String, String)> = x
                .vertices()
                .map(|v| {
                    let img = r.apply(&x, v).unwrap();
                    (x.token(v).to_owned(), x.token(img).to_owned())
                })
                .collect();
            // the flipped bit is the same for every corner
            let diff =
                |a: &str, b: &str| a.bytes().zip(b.bytes()).position(|(p, q)| p != q).unwrap();
            let bit = diff(&moved[0].0, &moved[0].1);
            for (a, b) in &moved {
                assert_eq!(diff(a, b), bit);
                assert_eq!(a.bytes().zip(b.bytes()).filter(|(p, q)| p != q).count(), 1);
            }
        }
    }

    #[test]
    fn strip_middle_reflection() {
        let x = parse_ccx("ccx 1\ncube a b d e\ncube b c e f\n").unwrap();
        let w = walls(&x);
        let mid = w
            .wall_of_edge(&x, x.vertex("b").unwrap(), x.vertex("e").unwrap())
            .unwrap();
        let r = reflection(&x, &w, mid).unwrap();
        assert_eq!(r.carrier.vertices.len(), 6);
        let img = |t: &str| {
            x.token(r.apply(&x, x.vertex(t).unwrap()).unwrap())
                .to_owned()
        };
        assert_eq!(img("a"), "d");
        assert_eq!(img("b"), "e");
        assert_eq!(img("c"), "f");
    }

    #[test]
    fn tripod_legs_reflect_alone() {
        let x = parse_ccx("ccx 1\ncube o a\ncube o b\ncube o c\n").unwrap();
        let w = walls(&x);
        assert_eq!(w.len(), 3);
        for id in 0..3 {
            let r = reflection(&x, &w, id).unwrap();
            assert_eq!(r.carrier.vertices.len(), 2);
        }
    }
}
