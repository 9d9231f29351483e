//! Automorphisms of cubings and their classification.

mod axis;
mod classify;
mod enumerate;
mod geometry;

pub use axis::{
    build_axis, classify_on_invariant_geodesic, power_length_check, relocate_axis, AxisWindow,
    PowerLength, Relocation, Trichotomy,
};
pub use classify::{
    classify, displacement, find_inversion, inverted_walls, stable_inversion_check,
    translation_length, Classification, ClassifyParams, InversionReport, TranslationLength,
    Verdict, DEFAULT_MAX_POWER, DEFAULT_RADIUS, DEFAULT_WINDOW,
};
pub use enumerate::automorphism_group;
pub use geometry::{
    DualEdge, FiniteCubing, FnMap, Geometry, ImplicitGeometry, Inverse, Power, VertexMap,
};

use std::collections::HashMap;

use crate::complex::{CubeComplex, VertexId};
use crate::error::{Error, Result};

pub const AUT_HEADER: &str = "aut 1";

/// A vertex bijection of a finite complex preserving edges and squares.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    forward: Vec<VertexId>,
    backward: Vec<VertexId>,
}

impl Automorphism {
    /// Checks that `forward` is a bijection sending edges to edges and
    /// squares to squares.
    pub fn new(x: &CubeComplex, forward: Vec<VertexId>) -> Result<Self> {
        let n = x.vertex_count();
        if forward.len() != n {
            return Err(Error::NotBijection(format!(
                "{} images for {} vertices",
                forward.len(),
                n
            )));
        }
        let mut backward = vec![None; n];
        for (i, &img) in forward.iter().enumerate() {
            if img.index() >= n {
                return Err(Error::NotBijection(format!(
                    "image #{} out of range",
                    img.index()
                )));
            }
            if let Some(prev) = backward[img.index()].replace(VertexId::from_index(i)) {
                return Err(Error::NotBijection(format!(
                    "`{}` and `{}` both map to `{}`",
                    x.token(prev),
                    x.token(VertexId::from_index(i)),
                    x.token(img)
                )));
            }
        }
        let backward = backward.into_iter().map(Option::unwrap).collect();
        let f = Automorphism { forward, backward };
        for (u, v) in x.edges() {
            if !x.are_adjacent(f.apply(u), f.apply(v)) {
                return Err(Error::EdgeNotPreserved(
                    x.token(u).to_owned(),
                    x.token(v).to_owned(),
                ));
            }
        }
        for sq in x.cubes_of_dim(2) {
            let img: Vec<VertexId> = sq.corners().iter().map(|&c| f.apply(c)).collect();
            if x.find_cube(&img).is_none() {
                return Err(Error::SquareNotPreserved(
                    sq.corners()
                        .iter()
                        .map(|&c| x.token(c).to_owned())
                        .collect(),
                ));
            }
        }
        Ok(f)
    }

    /// Builds a map from `(source, target)` token pairs, total on the
    /// vertex set.
    pub fn from_pairs<S: AsRef<str>>(x: &CubeComplex, pairs: &[(S, S)]) -> Result<Self> {
        let mut forward: Vec<Option<VertexId>> = vec![None; x.vertex_count()];
        for (u, v) in pairs {
            let (u, v) = (x.vertex(u.as_ref())?, x.vertex(v.as_ref())?);
            if forward[u.index()].replace(v).is_some() {
                return Err(Error::NotBijection(format!(
                    "`{}` is mapped twice",
                    x.token(u)
                )));
            }
        }
        let forward = forward
            .into_iter()
            .enumerate()
            .map(|(i, img)| {
                img.ok_or_else(|| {
                    Error::NotBijection(format!(
                        "`{}` has no image",
                        x.token(VertexId::from_index(i))
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(x, forward)
    }

    /// Builds a map from a token function.
    pub fn from_fn(x: &CubeComplex, f: impl Fn(&str) -> String) -> Result<Self> {
        let forward = x
            .vertices()
            .map(|v| x.vertex(&f(x.token(v))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(x, forward)
    }

    pub fn identity(n: usize) -> Self {
        let id: Vec<VertexId> = (0..n).map(VertexId::from_index).collect();
        Automorphism {
            forward: id.clone(),
            backward: id,
        }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.forward[v.index()]
    }

    pub fn apply_inverse(&self, v: VertexId) -> VertexId {
        self.backward[v.index()]
    }

    pub fn images(&self) -> &[VertexId] {
        &self.forward
    }

    pub fn inverse(&self) -> Self {
        Automorphism {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Automorphism {
            forward: other.forward.iter().map(|&v| self.apply(v)).collect(),
            backward: self
                .backward
                .iter()
                .map(|&v| other.apply_inverse(v))
                .collect(),
        }
    }

    pub fn power(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Automorphism::identity(self.len());
        let mut sq = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().enumerate().all(|(i, v)| v.index() == i)
    }

    /// Least `k >= 1` with `f^k = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut order = 1usize;
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut v = s;
            while !seen[v] {
                seen[v] = true;
                v = self.forward[v].index();
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    pub fn fixed_vertices(&self) -> Vec<VertexId> {
        self.forward
            .iter()
            .enumerate()
            .filter(|(i, v)| v.index() == *i)
            .map(|(_, &v)| v)
            .collect()
    }

    /// Whether every cube, in every dimension, maps onto a cube.
    pub fn preserves_all_cubes(&self, x: &CubeComplex) -> bool {
        x.cubes().iter().all(|c| {
            let img: Vec<VertexId> = c.corners().iter().map(|&v| self.apply(v)).collect();
            x.find_cube(&img).is_some()
        })
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Parses an AUT document (`aut 1`, then `u -> v` lines) against `x`.
pub fn parse_aut(x: &CubeComplex, text: &str) -> Result<Automorphism> {
    let mut header_seen = false;
    let mut pairs: Vec<(String, String)> = Vec::new();
    let mut line_of: HashMap<String, usize> = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if !header_seen {
            if content.split_whitespace().collect::<Vec<_>>() != ["aut", "1"] {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `{AUT_HEADER}` header, found `{content}`"),
                });
            }
            header_seen = true;
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        let [u, "->", v] = words.as_slice() else {
            return Err(Error::Parse {
                line,
                message: format!("expected `u -> v`, found `{content}`"),
            });
        };
        if let Some(prev) = line_of.insert(u.to_string(), line) {
            return Err(Error::Parse {
                line,
                message: format!("`{u}` already mapped on line {prev}"),
            });
        }
        pairs.push((u.to_string(), v.to_string()));
    }
    if !header_seen {
        return Err(Error::Parse {
            line: 1,
            message: format!("missing `{AUT_HEADER}` header"),
        });
    }
    Automorphism::from_pairs(x, &pairs)
}

/// AUT text for `f`, one line per vertex in token order.
pub fn emit_aut(x: &CubeComplex, f: &Automorphism) -> String {
    let mut out = format!("{AUT_HEADER}\n");
    for v in x.vertices() {
        out.push_str(&format!("{} -> {}\n", x.token(v), x.token(f.apply(v))));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::parse_ccx;

    fn cube3() -> CubeComplex {
        parse_ccx("ccx 1\ncube 000 001 010 011 100 101 110 111\n").unwrap()
    }

    fn complement(t: &str) -> String {
        t.chars()
            .map(|c| if c == '0' { '1' } else { '0' })
            .collect()
    }

    #[test]
    fn identity_and_antipodal_are_valid() {
        let x = cube3();
        let id = Automorphism::from_fn(&x, str::to_owned).unwrap();
        assert!(id.is_identity());
        let anti = Automorphism::from_fn(&x, complement).unwrap();
        assert_eq!(anti.order(), 2);
        assert!(anti.fixed_vertices().is_empty());
        assert!(anti.preserves_all_cubes(&x));
    }

    #[test]
    fn swapping_path_ends_breaks_edges() {
        let x = parse_ccx("ccx 1\ncube a b\ncube b c\ncube c d\n").unwrap();
        let err = Automorphism::from_pairs(&x, &[("a", "c"), ("b", "b"), ("c", "a"), ("d", "d")])
            .unwrap_err();
        assert!(matches!(err, Error::EdgeNotPreserved(..)));
    }

    #[test]
    fn non_bijection_rejected() {
        let x = parse_ccx("ccx 1\ncube a b\n").unwrap();
        let err = Automorphism::from_pairs(&x, &[("a", "a"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::NotBijection(_)));
        let err = Automorphism::from_pairs(&x, &[("a", "b")]).unwrap_err();
        assert!(matches!(err, Error::NotBijection(_)));
    }

    #[test]
    fn square_must_map_to_square() {
        // a filled and an empty 4-cycle glued at a vertex; exchanging them
        // keeps edges but not squares
        let x = parse_ccx("ccx 1\ncube a b c d\ncube a p\ncube p r\ncube a q\ncube q r\n").unwrap();
        let err = Automorphism::from_pairs(
            &x,
            &[
                ("a", "a"),
                ("b", "p"),
                ("c", "q"),
                ("d", "r"),
                ("p", "b"),
                ("q", "c"),
                ("r", "d"),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::SquareNotPreserved(_)));
    }

    #[test]
    fn aut_round_trip() {
        let x = cube3();
        let anti = Automorphism::from_fn(&x, complement).unwrap();
        let text = emit_aut(&x, &anti);
        assert!(text.starts_with("aut 1\n"));
        assert_eq!(parse_aut(&x, &text).unwrap(), anti);
    }

    #[test]
    fn aut_parse_errors() {
        let x = parse_ccx("ccx 1\ncube a b\n").unwrap();
        assert!(matches!(
            parse_aut(&x, "aut 1\na => b\nb -> a\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_aut(&x, "aut 1\na -> b\na -> a\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(parse_aut(&x, "a -> b\n").is_err());
        assert!(matches!(
            parse_aut(&x, "aut 1\na -> z\nb -> a\n"),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn powers_and_inverse() {
        let x = parse_ccx("ccx 1\ncube a b d c\n").unwrap();
        // rotation a -> b -> c -> d -> a around the square
        let r = Automorphism::from_pairs(&x, &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
            .unwrap();
        assert_eq!(r.order(), 4);
        assert!(r.power(4).is_identity());
        assert_eq!(r.power(-1), r.inverse());
        assert_eq!(r.power(3), r.inverse());
        assert!(r.compose(&r.inverse()).is_identity());
        assert_eq!(r.power(2).order(), 2);
    }
}
