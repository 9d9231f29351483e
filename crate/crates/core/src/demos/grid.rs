//! The standard tiling of `Z^n` by unit cubes.

use crate::automorphism::FnMap;
use crate::complex::ImplicitComplex;

/// `Z^dim` with vertices at integer points; `Grid::line()` is the standard
/// line.
#[derive(Clone, Debug)]
pub struct Grid {
    dim: usize,
    name: String,
}

impl Grid {
    pub fn new(dim: usize) -> Self {
        Grid {
            dim,
            name: format!("Z^{dim}"),
        }
    }

    pub fn line() -> Self {
        Self::new(1)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, coords: &[i64]) -> Vec<i64> {
        assert_eq!(coords.len(), self.dim);
        coords.to_vec()
    }

    /// `x -> x + t`.
    pub fn translation(&self, t: &[i64]) -> FnMap<Vec<i64>> {
        let (fwd, bwd) = (t.to_vec(), t.to_vec());
        FnMap::new(
            move |x: &Vec<i64>| Some(x.iter().zip(&fwd).map(|(a, b)| a + b).collect()),
            move |x: &Vec<i64>| Some(x.iter().zip(&bwd).map(|(a, b)| a - b).collect()),
        )
    }

    /// `x_axis -> c - x_axis`: a vertex reflection when `c` is even, an edge
    /// reflection when `c` is odd.
    pub fn reflection(&self, axis: usize, c: i64) -> FnMap<Vec<i64>> {
        let flip = move |x: &Vec<i64>| {
            let mut y = x.clone();
            y[axis] = c - y[axis];
            Some(y)
        };
        FnMap::new(flip, flip)
    }
}

impl ImplicitComplex for Grid {
    type Vertex = Vec<i64>;
    /// `(axis, k)`: the wall between `x_axis = k` and `x_axis = k + 1`.
    type Wall = (usize, i64);

    fn name(&self) -> &str {
        &self.name
    }

    fn seed(&self) -> Vec<i64> {
        vec![0; self.dim]
    }

    fn token(&self, v: &Vec<i64>) -> String {
        v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
    }

    fn neighbors(&self, v: &Vec<i64>) -> Vec<Vec<i64>> {
        let mut out = Vec::with_capacity(2 * self.dim);
        for i in 0..self.dim {
            for s in [-1, 1] {
                let mut w = v.clone();
                w[i] += s;
                out.push(w);
            }
        }
        out
    }

    fn squares(&self, v: &Vec<i64>) -> Vec<[Vec<i64>; 4]> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for si in [-1, 1] {
                    for sj in [-1, 1] {
                        let mut a = v.clone();
                        a[i] += si;
                        let mut b = v.clone();
                        b[j] += sj;
                        let mut c = a.clone();
                        c[j] += sj;
                        out.push([v.clone(), a, b, c]);
                    }
                }
            }
        }
        out
    }

    fn dual_wall(&self, u: &Vec<i64>, v: &Vec<i64>) -> Option<(usize, i64)> {
        let diff: Vec<usize> = (0..self.dim).filter(|&i| u[i] != v[i]).collect();
        match diff.as_slice() {
            [i] if (u[*i] - v[*i]).abs() == 1 => Some((*i, u[*i].min(v[*i]))),
            _ => None,
        }
    }

    fn side(&self, wall: &(usize, i64), v: &Vec<i64>) -> bool {
        v[wall.0] > wall.1
    }
}
