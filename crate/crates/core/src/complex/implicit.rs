//! Infinite complexes described by local enumerators, and finite balls cut
//! out of them.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

use super::CubeComplex;
use crate::error::{Error, Result};

pub const DEFAULT_VERTEX_BUDGET: usize = 100_000;

/// A cubing given by enumerators around each vertex.
///
/// Besides the 1- and 2-skeleton, an implementation exposes its hyperplanes:
/// `dual_wall` names the wall crossed by an edge and `side` tells which of
/// its two halfspaces a vertex lies in. Higher cubes are never enumerated;
/// in a cubing they are the flag completion of the squares.
pub trait ImplicitComplex {
    type Vertex: Clone + Eq + Hash + Ord + Debug;
    type Wall: Clone + Eq + Hash + Ord + Debug;

    fn name(&self) -> &str;

    fn seed(&self) -> Self::Vertex;

    /// Whitespace-free identifier, unique per vertex.
    fn token(&self, v: &Self::Vertex) -> String;

    fn neighbors(&self, v: &Self::Vertex) -> Vec<Self::Vertex>;

    /// Squares containing `v`, corners in binary order with `v` first.
    fn squares(&self, v: &Self::Vertex) -> Vec<[Self::Vertex; 4]>;

    /// Wall dual to the edge `u`-`v`, or `None` when they are not adjacent.
    fn dual_wall(&self, u: &Self::Vertex, v: &Self::Vertex) -> Option<Self::Wall>;

    /// Halfspace of `wall` containing `v`.
    fn side(&self, wall: &Self::Wall, v: &Self::Vertex) -> bool;
}

/// Vertices within distance `r` of `center`, in BFS order.
pub(crate) fn bfs_ball<I: ImplicitComplex>(
    complex: &I,
    center: &I::Vertex,
    r: usize,
    budget: usize,
) -> Result<Vec<(I::Vertex, usize)>> {
    let mut seen: HashSet<I::Vertex> = HashSet::new();
    seen.insert(center.clone());
    let mut order = vec![(center.clone(), 0usize)];
    let mut i = 0;
    while i < order.len() {
        let (v, d) = order[i].clone();
        i += 1;
        if d == r {
            continue;
        }
        for w in complex.neighbors(&v) {
            if seen.insert(w.clone()) {
                if seen.len() > budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                order.push((w, d + 1));
            }
        }
    }
    Ok(order)
}

/// Vertices within distance `r` of `center`, in BFS order.
pub fn ball_vertices<I: ImplicitComplex>(
    complex: &I,
    center: &I::Vertex,
    r: usize,
    budget: usize,
) -> Result<Vec<I::Vertex>> {
    Ok(bfs_ball(complex, center, r, budget)?
        .into_iter()
        .map(|(v, _)| v)
        .collect())
}

/// The full subcomplex on all vertices at distance at most `r` from
/// `center`, using the default vertex budget.
pub fn ball<I: ImplicitComplex>(complex: &I, center: &I::Vertex, r: usize) -> Result<CubeComplex> {
    ball_with_budget(complex, center, r, DEFAULT_VERTEX_BUDGET)
}

pub fn ball_with_budget<I: ImplicitComplex>(
    complex: &I,
    center: &I::Vertex,
    r: usize,
    budget: usize,
) -> Result<CubeComplex> {
    let verts: Vec<I::Vertex> = bfs_ball(complex, center, r, budget)?
        .into_iter()
        .map(|(v, _)| v)
        .collect();
    let inside: HashSet<&I::Vertex> = verts.iter().collect();
    let tok: HashMap<&I::Vertex, String> = verts.iter().map(|v| (v, complex.token(v))).collect();

    let mut cubes: Vec<Vec<String>> = verts.iter().map(|v| vec![tok[v].clone()]).collect();
    // opposite[(w, a, b)] = fourth corner of the square through a-w-b
    type Corner<'v, V> = (&'v V, &'v V, &'v V);
    type LinkEdges<V> = BTreeSet<(V, V)>;
    let mut opposite: HashMap<Corner<I::Vertex>, I::Vertex> = HashMap::new();
    let mut link_edges: HashMap<&I::Vertex, LinkEdges<I::Vertex>> = HashMap::new();
    let mut squares = Vec::new();
    for v in &verts {
        for w in complex.neighbors(v) {
            if let Some(w) = inside.get(&w) {
                if *v < **w {
                    cubes.push(vec![tok[v].clone(), tok[*w].clone()]);
                }
            }
        }
        for sq in complex.squares(v) {
            if sq.iter().all(|c| inside.contains(c)) {
                squares.push(sq);
            }
        }
    }
    for sq in &squares {
        let [a, b, c, d] = sq;
        for (w, x, y, z) in [(a, b, c, d), (b, a, d, c), (c, a, d, b), (d, b, c, a)] {
            let w = *inside.get(w).unwrap();
            let (x, y) = (*inside.get(x).unwrap(), *inside.get(y).unwrap());
            let (lo, hi) = if x < y { (x, y) } else { (y, x) };
            opposite.insert((w, lo, hi), z.clone());
            link_edges
                .entry(w)
                .or_default()
                .insert((lo.clone(), hi.clone()));
        }
        cubes.push(sq.iter().map(|c| tok[c].clone()).collect());
    }

    // higher cubes: cliques of size >= 3 in each link, anchored at their
    // least corner
    for v in &verts {
        let Some(edges) = link_edges.get(v) else {
            continue;
        };
        let mut adj: BTreeMap<&I::Vertex, BTreeSet<&I::Vertex>> = BTreeMap::new();
        for (a, b) in edges {
            adj.entry(a).or_default().insert(b);
            adj.entry(b).or_default().insert(a);
        }
        let mut stack: Vec<Vec<&I::Vertex>> = adj.keys().map(|&a| vec![a]).collect();
        while let Some(clique) = stack.pop() {
            let last = *clique.last().unwrap();
            for &next in adj[last].range::<&I::Vertex, _>((
                std::ops::Bound::Excluded(last),
                std::ops::Bound::Unbounded,
            )) {
                if !clique.iter().all(|c| adj[c].contains(next)) {
                    continue;
                }
                let mut grown = clique.clone();
                grown.push(next);
                // supersets of a cube that is absent or anchored elsewhere
                // are absent or anchored elsewhere too
                let Some(corners) = cube_corners(v, &grown, &opposite) else {
                    continue;
                };
                if !corners.iter().all(|c| inside.contains(c)) || corners.iter().min() != Some(v) {
                    continue;
                }
                if grown.len() >= 3 {
                    cubes.push(corners.iter().map(|c| tok[c].clone()).collect());
                }
                stack.push(grown);
            }
        }
    }
    CubeComplex::from_cubes(cubes)
}

/// Corners of the cube at `v` spanned by the given neighbours, or `None`
/// if some square needed to close it is absent.
fn cube_corners<V: Clone + Eq + Hash + Ord>(
    v: &V,
    dirs: &[&V],
    opposite: &HashMap<(&V, &V, &V), V>,
) -> Option<Vec<V>> {
    let k = dirs.len();
    let mut corners: Vec<Option<V>> = vec![None; 1 << k];
    corners[0] = Some(v.clone());
    for (j, d) in dirs.iter().enumerate() {
        corners[1 << j] = Some((*d).clone());
    }
    for mask in 1usize..1 << k {
        if mask.count_ones() < 2 {
            continue;
        }
        let x = mask.trailing_zeros();
        let rest = mask & !(1 << x);
        let y = rest.trailing_zeros();
        let base = corners[mask & !(1 << x) & !(1 << y)].as_ref()?;
        let a = corners[mask & !(1 << x)].as_ref()?;
        let b = corners[mask & !(1 << y)].as_ref()?;
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        corners[mask] = Some(opposite.get(&(base, lo, hi))?.clone());
    }
    let out: Vec<V> = corners.into_iter().collect::<Option<_>>()?;
    let distinct: HashSet<&V> = out.iter().collect();
    (distinct.len() == out.len()).then_some(out)
}
