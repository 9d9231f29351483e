//! A common view of finite and implicit cubings, and of maps acting on them.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use super::Automorphism;
use crate::complex::{
    ball_with_budget, validate, CubeComplex, ImplicitComplex, VertexId, DEFAULT_VERTEX_BUDGET,
};
use crate::error::{Error, Result};
use crate::hyperplanes::{all_halfspaces, walls, Halfspaces, Walls};
use crate::metric::{DistanceMatrix, UNREACHABLE};

/// What the classification algorithms need from a cubing.
/// A wall with the endpoints of one of its dual edges.
pub type DualEdge<W, V> = (W, V, V);

pub trait Geometry {
    type Vertex: Clone + Eq + Hash + Ord + Debug;
    type Wall: Clone + Eq + Hash + Ord + Debug;

    fn token(&self, v: &Self::Vertex) -> String;

    fn neighbors(&self, v: &Self::Vertex) -> Vec<Self::Vertex>;

    fn dual_wall(&self, u: &Self::Vertex, v: &Self::Vertex) -> Option<Self::Wall>;

    fn side(&self, wall: &Self::Wall, v: &Self::Vertex) -> bool;

    fn distance(&self, u: &Self::Vertex, v: &Self::Vertex) -> Result<usize>;

    /// Some geodesic from `u` to `v`, both endpoints included.
    fn geodesic(&self, u: &Self::Vertex, v: &Self::Vertex) -> Result<Vec<Self::Vertex>>;

    /// Whether every vertex is enumerated by `search_vertices`.
    fn is_finite(&self) -> bool;

    /// Vertices searched for fixed points and displacement minima. Finite
    /// cubings ignore the radius.
    fn search_vertices(&self, radius: usize) -> Result<Vec<Self::Vertex>>;

    /// Walls met within the search region, each with one dual edge.
    fn search_walls(&self, radius: usize) -> Result<Vec<DualEdge<Self::Wall, Self::Vertex>>>;

    /// Neighbour of `v` across `wall`; `v` must lie on exactly one dual edge.
    fn reflect(&self, wall: &Self::Wall, v: &Self::Vertex) -> Result<Self::Vertex> {
        let across: Vec<Self::Vertex> = self
            .neighbors(v)
            .into_iter()
            .filter(|w| self.dual_wall(v, w).as_ref() == Some(wall))
            .collect();
        match <[_; 1]>::try_from(across) {
            Ok([w]) => Ok(w),
            Err(rest) => Err(Error::AmbiguousDualEdge {
                wall: format!("{wall:?}"),
                vertex: self.token(v),
                count: rest.len(),
            }),
        }
    }
}

/// A map on the vertices of a [`Geometry`]. `None` means the image is not
/// available, e.g. outside a materialized region.
pub trait VertexMap<V> {
    fn image(&self, v: &V) -> Option<V>;

    fn preimage(&self, v: &V) -> Option<V>;

    /// Order of the map, when known.
    fn order_hint(&self) -> Option<usize> {
        None
    }

    /// `f^k(v)` for any integer `k`.
    fn image_pow(&self, v: &V, k: i64) -> Option<V>
    where
        V: Clone,
    {
        let mut cur = v.clone();
        for _ in 0..k.unsigned_abs() {
            cur = if k > 0 {
                self.image(&cur)?
            } else {
                self.preimage(&cur)?
            };
        }
        Some(cur)
    }
}

impl VertexMap<VertexId> for Automorphism {
    fn image(&self, v: &VertexId) -> Option<VertexId> {
        (v.index() < self.len()).then(|| self.apply(*v))
    }

    fn preimage(&self, v: &VertexId) -> Option<VertexId> {
        (v.index() < self.len()).then(|| self.apply_inverse(*v))
    }

    fn order_hint(&self) -> Option<usize> {
        Some(self.order())
    }
}

impl<V, M: VertexMap<V> + ?Sized> VertexMap<V> for &M {
    fn image(&self, v: &V) -> Option<V> {
        (**self).image(v)
    }

    fn preimage(&self, v: &V) -> Option<V> {
        (**self).preimage(v)
    }

    fn order_hint(&self) -> Option<usize> {
        (**self).order_hint()
    }
}

type PartialFn<V> = Arc<dyn Fn(&V) -> Option<V> + Send + Sync>;

/// A map given by a pair of mutually inverse closures.
pub struct FnMap<V> {
    forward: PartialFn<V>,
    backward: PartialFn<V>,
}

impl<V> Clone for FnMap<V> {
    fn clone(&self) -> Self {
        FnMap {
            forward: Arc::clone(&self.forward),
            backward: Arc::clone(&self.backward),
        }
    }
}

impl<V: Clone + 'static> FnMap<V> {
    pub fn new(
        forward: impl Fn(&V) -> Option<V> + Send + Sync + 'static,
        backward: impl Fn(&V) -> Option<V> + Send + Sync + 'static,
    ) -> Self {
        FnMap {
            forward: Arc::new(forward),
            backward: Arc::new(backward),
        }
    }

    pub fn identity() -> Self {
        Self::new(|v: &V| Some(v.clone()), |v: &V| Some(v.clone()))
    }

    pub fn inverse(&self) -> Self {
        FnMap {
            forward: Arc::clone(&self.backward),
            backward: Arc::clone(&self.forward),
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let (f, g) = (Arc::clone(&self.forward), Arc::clone(&other.forward));
        let (fi, gi) = (Arc::clone(&self.backward), Arc::clone(&other.backward));
        Self::new(move |v| f(&g(v)?), move |v| gi(&fi(v)?))
    }

    pub fn power(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::identity(), |acc, _| acc.compose(&base))
    }
}

impl<V> VertexMap<V> for FnMap<V> {
    fn image(&self, v: &V) -> Option<V> {
        (self.forward)(v)
    }

    fn preimage(&self, v: &V) -> Option<V> {
        (self.backward)(v)
    }
}

/// Swaps the roles of a map and its inverse.
pub struct Inverse<M>(pub M);

impl<V, M: VertexMap<V>> VertexMap<V> for Inverse<M> {
    fn image(&self, v: &V) -> Option<V> {
        self.0.preimage(v)
    }

    fn preimage(&self, v: &V) -> Option<V> {
        self.0.image(v)
    }

    fn order_hint(&self) -> Option<usize> {
        self.0.order_hint()
    }
}

/// A validated finite cubing with its walls, halfspaces and distances.
#[derive(Clone, Debug)]
pub struct FiniteCubing {
    pub complex: CubeComplex,
    pub walls: Walls,
    pub halfspaces: Vec<Halfspaces>,
    pub distances: DistanceMatrix,
}

impl FiniteCubing {
    /// Fails with [`Error::Precondition`] unless `x` passes validation.
    pub fn new(x: CubeComplex) -> Result<Self> {
        let report = validate(&x);
        if !report.is_cubing() {
            let first = report
                .failures
                .first()
                .map(ToString::to_string)
                .unwrap_or_default();
            return Err(Error::Precondition(format!("not a cubing: {first}")));
        }
        let walls = walls(&x);
        let halfspaces = all_halfspaces(&x, &walls)?;
        let distances = DistanceMatrix::new(&x);
        Ok(FiniteCubing {
            complex: x,
            walls,
            halfspaces,
            distances,
        })
    }

    pub fn vertex(&self, token: &str) -> Result<VertexId> {
        self.complex.vertex(token)
    }
}

impl Geometry for FiniteCubing {
    type Vertex = VertexId;
    type Wall = usize;

    fn token(&self, v: &VertexId) -> String {
        self.complex.token(*v).to_owned()
    }

    fn neighbors(&self, v: &VertexId) -> Vec<VertexId> {
        self.complex.neighbors(*v).to_vec()
    }

    fn dual_wall(&self, u: &VertexId, v: &VertexId) -> Option<usize> {
        self.walls.wall_of_edge(&self.complex, *u, *v)
    }

    fn side(&self, wall: &usize, v: &VertexId) -> bool {
        self.halfspaces[*wall].side_of(*v)
    }

    fn distance(&self, u: &VertexId, v: &VertexId) -> Result<usize> {
        match self.distances.get(*u, *v) {
            UNREACHABLE => Err(Error::Disconnected(self.token(u), self.token(v))),
            d => Ok(d as usize),
        }
    }

    fn geodesic(&self, u: &VertexId, v: &VertexId) -> Result<Vec<VertexId>> {
        crate::metric::geodesic(&self.complex, &self.distances, *u, *v)
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn search_vertices(&self, _radius: usize) -> Result<Vec<VertexId>> {
        Ok(self.complex.vertices().collect())
    }

    fn search_walls(&self, _radius: usize) -> Result<Vec<DualEdge<usize, VertexId>>> {
        Ok(self
            .walls
            .iter()
            .map(|w| (w.id, w.edges[0].0, w.edges[0].1))
            .collect())
    }
}

/// An implicit cubing searched in balls around its seed.
///
/// Distances follow the walls: from `u`, step across any wall separating
/// `u` from `v`. In a cubing such a step always exists and lowers the
/// number of separating walls by one, so the walk is a geodesic.
pub struct ImplicitGeometry<'a, I: ImplicitComplex> {
    pub complex: &'a I,
    pub budget: usize,
    /// Longest walk attempted by `distance` and `geodesic`.
    pub max_steps: usize,
}

impl<'a, I: ImplicitComplex> ImplicitGeometry<'a, I> {
    pub fn new(complex: &'a I) -> Self {
        ImplicitGeometry {
            complex,
            budget: DEFAULT_VERTEX_BUDGET,
            max_steps: 10_000,
        }
    }

    /// The materialized ball, for validation.
    pub fn ball(&self, radius: usize) -> Result<CubeComplex> {
        ball_with_budget(self.complex, &self.complex.seed(), radius, self.budget)
    }
}

impl<I: ImplicitComplex> Geometry for ImplicitGeometry<'_, I> {
    type Vertex = I::Vertex;
    type Wall = I::Wall;

    fn token(&self, v: &I::Vertex) -> String {
        self.complex.token(v)
    }

    fn neighbors(&self, v: &I::Vertex) -> Vec<I::Vertex> {
        self.complex.neighbors(v)
    }

    fn dual_wall(&self, u: &I::Vertex, v: &I::Vertex) -> Option<I::Wall> {
        self.complex.dual_wall(u, v)
    }

    fn side(&self, wall: &I::Wall, v: &I::Vertex) -> bool {
        self.complex.side(wall, v)
    }

    fn distance(&self, u: &I::Vertex, v: &I::Vertex) -> Result<usize> {
        Ok(self.geodesic(u, v)?.len() - 1)
    }

    fn geodesic(&self, u: &I::Vertex, v: &I::Vertex) -> Result<Vec<I::Vertex>> {
        let mut path = vec![u.clone()];
        let mut cur = u.clone();
        while &cur != v {
            if path.len() > self.max_steps {
                return Err(Error::BudgetExceeded(self.max_steps));
            }
            let next = self
                .complex
                .neighbors(&cur)
                .into_iter()
                .find(|w| {
                    self.complex
                        .dual_wall(&cur, w)
                        .is_some_and(|h| self.complex.side(&h, &cur) != self.complex.side(&h, v))
                })
                .ok_or_else(|| Error::Disconnected(self.token(&cur), self.token(v)))?;
            path.push(next.clone());
            cur = next;
        }
        Ok(path)
    }

    fn is_finite(&self) -> bool {
        false
    }

    fn search_vertices(&self, radius: usize) -> Result<Vec<I::Vertex>> {
        let mut vs: Vec<I::Vertex> =
            crate::complex::ball_vertices(self.complex, &self.complex.seed(), radius, self.budget)?;
        vs.sort_by_key(|v| self.complex.token(v));
        Ok(vs)
    }

    fn search_walls(&self, radius: usize) -> Result<Vec<DualEdge<I::Wall, I::Vertex>>> {
        let vs = self.search_vertices(radius)?;
        let inside: HashSet<&I::Vertex> = vs.iter().collect();
        let mut out: BTreeMap<I::Wall, (I::Vertex, I::Vertex)> = BTreeMap::new();
        for u in &vs {
            for w in self.complex.neighbors(u) {
                if !inside.contains(&w) {
                    continue;
                }
                if let Some(h) = self.complex.dual_wall(u, &w) {
                    out.entry(h).or_insert_with(|| (u.clone(), w));
                }
            }
        }
        Ok(out.into_iter().map(|(h, (u, w))| (h, u, w)).collect())
    }
}

/// The `k`-th power of a map, evaluated lazily.
pub struct Power<M> {
    pub map: M,
    pub k: i64,
}

impl<V: Clone, M: VertexMap<V>> VertexMap<V> for Power<M> {
    fn image(&self, v: &V) -> Option<V> {
        self.map.image_pow(v, self.k)
    }

    fn preimage(&self, v: &V) -> Option<V> {
        self.map.image_pow(v, -self.k)
    }
}
