//! Infinite examples as implicit cubings, and the subadditivity of `δ`.

pub mod bass_serre;
pub mod grid;
pub mod l2;

use std::fmt;

pub use bass_serre::{demo_bs, BassSerreTree, BsReport};
pub use grid::Grid;
pub use l2::{demo_l2, L2Report, L2Window};

use crate::automorphism::{translation_length, ClassifyParams, Geometry, VertexMap};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubadditivityReport {
    pub delta: usize,
    pub terms: Vec<usize>,
    /// All lengths exact (finite cubing, or certified by an axis).
    pub exact: bool,
}

impl SubadditivityReport {
    pub fn sum(&self) -> usize {
        self.terms.iter().sum()
    }

    pub fn holds(&self) -> bool {
        self.delta <= self.sum()
    }
}

impl fmt::Display for SubadditivityReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.terms.iter().map(usize::to_string).collect();
        write!(
            out,
            "{} <= {} = {}{}",
            self.delta,
            terms.join(" + "),
            self.sum(),
            if self.exact {
                ""
            } else {
                " (lengths not all certified)"
            }
        )
    }
}

/// Compares `δ(f)` with `Σ δ(s_i)` for `f = s_1 s_2 ... s_k`, so `s_k` acts
/// first. The word must agree with `f` on every searched vertex where both
/// are defined.
pub fn delta_subadditivity<G, M, S>(
    g: &G,
    f: &M,
    word: &[S],
    params: &ClassifyParams,
) -> Result<SubadditivityReport>
where
    G: Geometry,
    M: VertexMap<G::Vertex>,
    S: VertexMap<G::Vertex>,
{
    for v in g.search_vertices(params.radius)? {
        let composed = word.iter().rev().try_fold(v.clone(), |w, s| s.image(&w));
        if let (Some(a), Some(b)) = (composed, f.image(&v)) {
            if a != b {
                return Err(Error::CompositionMismatch(g.token(&v)));
            }
        }
    }
    let (delta, mut exact) = length(g, f, params)?;
    let mut terms = Vec::with_capacity(word.len());
    for s in word {
        let (d, e) = length(g, s, params)?;
        terms.push(d);
        exact &= e;
    }
    Ok(SubadditivityReport {
        delta,
        terms,
        exact,
    })
}

fn length<G: Geometry, M: VertexMap<G::Vertex>>(
    g: &G,
    f: &M,
    params: &ClassifyParams,
) -> Result<(usize, bool)> {
    let t = translation_length(g, f, params.radius, params.window)?.ok_or_else(|| {
        Error::RegionExceeded("no vertex of the search region has an image".into())
    })?;
    Ok((t.delta, t.exact))
}
