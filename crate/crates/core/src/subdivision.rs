//! The cubical subdivision `X'`.
//!
//! Vertices of `X'` are the cubes of `X`; the cubes of `X'` are the face pairs
//! `F ⊆ G`, with corners the faces between `F` and `G`. A vertex of `X'` is
//! named by the sorted corner tokens of its cube joined with `+`.

use std::collections::HashMap;

use crate::automorphism::Automorphism;
use crate::complex::{CubeComplex, CubeId, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SubdivisionMap {
    pub source: CubeComplex,
    pub subdivided: CubeComplex,
    /// Cube of `X` behind each vertex of `X'`.
    cube_of: Vec<CubeId>,
    /// Vertex of `X'` for each cube of `X`.
    vertex_of: Vec<VertexId>,
}

impl SubdivisionMap {
    pub fn cube_of(&self, v: VertexId) -> CubeId {
        self.cube_of[v.index()]
    }

    pub fn vertex_of(&self, c: CubeId) -> VertexId {
        self.vertex_of[c.index()]
    }

    /// The pair `F ⊆ G` defining a cube of `X'`.
    pub fn face_pair(&self, c: CubeId) -> (CubeId, CubeId) {
        let corners = self.subdivided.cube(c).corners();
        let cubes: Vec<CubeId> = corners.iter().map(|&v| self.cube_of(v)).collect();
        let dim = |id: &CubeId| self.source.cube(*id).dim();
        let lo = *cubes.iter().min_by_key(|id| dim(id)).unwrap();
        let hi = *cubes.iter().max_by_key(|id| dim(id)).unwrap();
        (lo, hi)
    }
}

/// Token of the barycenter of a cube.
pub fn barycenter_token(x: &CubeComplex, c: CubeId) -> String {
    let mut toks = x.cube_tokens(c);
    toks.sort_unstable();
    toks.join("+")
}

pub fn subdivide(x: &CubeComplex) -> Result<SubdivisionMap> {
    let names: Vec<String> = x.cube_ids().map(|c| barycenter_token(x, c)).collect();
    let mut owner: HashMap<&str, CubeId> = HashMap::new();
    for (c, name) in x.cube_ids().zip(&names) {
        if let Some(prev) = owner.insert(name, c) {
            return Err(Error::Precondition(format!(
                "cubes {:?} and {:?} share the barycenter name `{name}`",
                x.cube_tokens(prev),
                x.cube_tokens(c)
            )));
        }
    }
    let mut records: Vec<Vec<&str>> = Vec::new();
    for g in x.maximal_cubes() {
        let corners = x.cube(g).corners();
        let k = x.cube(g).dim();
        let full = (1usize << k) - 1;
        for c in 0..=full {
            // the k-cube of X' at corner c of G: its corner S is the face of
            // G through c spanned by the axes in S
            let rec = (0..=full)
                .map(|s| {
                    let face: Vec<VertexId> = (0..=full)
                        .filter(|&i| (i ^ c) & !s & full == 0)
                        .map(|i| corners[i])
                        .collect();
                    let id = x.find_cube(&face).expect("face of a cube");
                    names[id.index()].as_str()
                })
                .collect();
            records.push(rec);
        }
    }
    if records.is_empty() {
        records.extend(names.iter().map(|n| vec![n.as_str()]));
    }
    let subdivided = CubeComplex::from_cubes(&records)?;
    let vertex_of: Vec<VertexId> = names
        .iter()
        .map(|n| subdivided.vertex(n))
        .collect::<Result<_>>()?;
    let mut cube_of = vec![CubeId(0); subdivided.vertex_count()];
    for (c, &v) in x.cube_ids().zip(&vertex_of) {
        cube_of[v.index()] = c;
    }
    Ok(SubdivisionMap {
        source: x.clone(),
        subdivided,
        cube_of,
        vertex_of,
    })
}

/// `Q ↦ f(Q)` on barycenters.
pub fn induce_automorphism(s: &SubdivisionMap, f: &Automorphism) -> Result<Automorphism> {
    let x = &s.source;
    if f.len() != x.vertex_count() {
        return Err(Error::NotBijection(format!(
            "map has {} images for {} vertices",
            f.len(),
            x.vertex_count()
        )));
    }
    let forward = s
        .cube_of
        .iter()
        .map(|&c| {
            let img: Vec<VertexId> = x.cube(c).corners().iter().map(|&v| f.apply(v)).collect();
            x.find_cube(&img).map(|id| s.vertex_of(id)).ok_or_else(|| {
                Error::SquareNotPreserved(x.cube_tokens(c).into_iter().map(str::to_owned).collect())
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Automorphism::new(&s.subdivided, forward)
}
