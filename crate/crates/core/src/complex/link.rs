use super::{CubeComplex, VertexId};
use crate::error::{Error, Result};

/// The link of a vertex: one link-vertex per edge at the base (named by the
/// far endpoint), one simplex per cube containing the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkComplex {
    pub base: VertexId,
    pub vertices: Vec<VertexId>,
    /// Sorted link-vertex sets; a `k`-cube at the base gives a simplex with
    /// `k` vertices.
    pub simplices: Vec<Vec<VertexId>>,
}

impl LinkComplex {
    pub fn simplices_of_dim(&self, dim: usize) -> impl Iterator<Item = &Vec<VertexId>> {
        self.simplices.iter().filter(move |s| s.len() == dim + 1)
    }

    pub fn contains_simplex(&self, s: &[VertexId]) -> bool {
        let mut key = s.to_vec();
        key.sort_unstable();
        self.simplices.binary_search(&key).is_ok()
    }

    /// Link-vertices joined by a 1-simplex.
    pub fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.contains_simplex(&[a, b])
    }
}

pub fn link(x: &CubeComplex, v: VertexId) -> Result<LinkComplex> {
    if !x.contains_vertex(v) {
        return Err(Error::UnknownVertex(format!("#{}", v.index())));
    }
    let mut simplices: Vec<Vec<VertexId>> = x
        .cubes_at(v)
        .iter()
        .filter_map(|&c| {
            let mut s = x.cube(c).neighbors_of(v)?;
            s.sort_unstable();
            Some(s)
        })
        .collect();
    simplices.sort();
    simplices.dedup();
    Ok(LinkComplex {
        base: v,
        vertices: x.neighbors(v).to_vec(),
        simplices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::parse_ccx;

    #[test]
    fn corner_of_square() {
        let x = parse_ccx("ccx 1\ncube a b c d\n").unwrap();
        let l = link(&x, x.vertex("a").unwrap()).unwrap();
        assert_eq!(l.vertices.len(), 2);
        assert_eq!(l.simplices_of_dim(1).count(), 1);
        assert_eq!(l.simplices_of_dim(0).count(), 2);
    }

    #[test]
    fn corner_of_three_cube_is_a_filled_triangle() {
        let x = parse_ccx("ccx 1\ncube 000 001 010 011 100 101 110 111\n").unwrap();
        let l = link(&x, x.vertex("000").unwrap()).unwrap();
        assert_eq!(l.vertices.len(), 3);
        assert_eq!(l.simplices_of_dim(1).count(), 3);
        assert_eq!(l.simplices_of_dim(2).count(), 1);
    }

    #[test]
    fn tripod_center() {
        let x = parse_ccx("ccx 1\ncube o a\ncube o b\ncube o c\n").unwrap();
        let l = link(&x, x.vertex("o").unwrap()).unwrap();
        assert_eq!(l.vertices.len(), 3);
        assert_eq!(l.simplices.len(), 3);
        assert!(l.simplices.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn unknown_vertex() {
        let x = parse_ccx("ccx 1\ncube a b\n").unwrap();
        assert!(link(&x, VertexId(7)).is_err());
    }
}
