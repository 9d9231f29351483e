//! Inversions, displacement, translation length and the elliptic /
//! hyperbolic verdict.

use std::fmt;

use super::axis::{build_axis, classify_on_invariant_geodesic, AxisWindow, Trichotomy};
use super::geometry::{Geometry, VertexMap};
use crate::error::{Error, Result};

/// Powers checked for inversions when the order of the map is unknown.
pub const DEFAULT_MAX_POWER: usize = 4;
pub const DEFAULT_RADIUS: usize = 4;
pub const DEFAULT_WINDOW: usize = 5;

pub(crate) fn image<G: Geometry, M: VertexMap<G::Vertex>>(
    g: &G,
    f: &M,
    v: &G::Vertex,
    k: i64,
) -> Result<G::Vertex> {
    f.image_pow(v, k)
        .ok_or_else(|| Error::RegionExceeded(g.token(v)))
}

/// `d(p, f(p))`.
pub fn displacement<G: Geometry, M: VertexMap<G::Vertex>>(
    g: &G,
    f: &M,
    p: &G::Vertex,
) -> Result<usize> {
    let fp = image(g, f, p, 1)?;
    g.distance(p, &fp)
}

/// Walls in the search region that `f^power` maps to themselves with the
/// sides exchanged. Walls whose dual edge leaves the region are skipped.
pub fn inverted_walls<G: Geometry, M: VertexMap<G::Vertex>>(
    g: &G,
    f: &M,
    power: i64,
    radius: usize,
) -> Result<Vec<G::Wall>> {
    let mut out = Vec::new();
    for (h, u, w) in g.search_walls(radius)? {
        let (Some(fu), Some(fw)) = (f.image_pow(&u, power), f.image_pow(&w, power)) else {
            continue;
        };
        if g.dual_wall(&fu, &fw).as_ref() == Some(&h) && g.side(&h, &fu) != g.side(&h, &u) {
            out.push(h);
        }
    }
    Ok(out)
}

/// The least wall inverted by `f^power`, if any.
pub fn find_inversion<G: Geometry, M: VertexMap<G::Vertex>>(
    g: &G,
    f: &M,
    power: i64,
    radius: usize,
) -> Result<Option<G::Wall>> {
    Ok(inverted_walls(g, f, power, radius)?.into_iter().next())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionReport<W> {
    /// First power with an inversion, and the least wall it inverts.
    pub first: Option<(W, usize)>,
    /// Powers examined: `1..=checked`.
    pub checked: usize,
}

impl<W> InversionReport<W> {
    pub fn is_clean(&self) -> bool {
        self.first.is_none()
    }
}

/// Looks for inversions of `f, f^2, ..., f^max_power`. Without an explicit
/// bound the order of `f` is used when known, which makes the check
/// complete on finite cubings.
pub fn stable_inversion_check<G: Geometry, M: VertexMap<G::Vertex>>(
    g: &G,
    f: &M,
    max_power: Option<usize>,
    radius: usize,
) -> Result<InversionReport<G::Wall>> {
    let max = max_power
        .or_else(|| f.order_hint())
        .unwrap_or(DEFAULT_MAX_POWER)
        .max(1);
    for k in 1..=max {
        if let Some(h) = find_inversion(g, f, k as i64, radius)? {
            return Ok(InversionReport {
                first: Some((h, k)),
                checked: k,
            });
        }
    }
    Ok(InversionReport {
        first: None,
        checked: max,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationLength<V> {
    pub delta: usize,
    pub witness: V,
    /// True when the minimum is known to be global.
    pub exact: bool,
}

/// Least displacement over the search region, ties broken by token.
fn min_displacement<G: Geometry, M: VertexMap<G::Vertex>>(
    g: &G,
    f: &M,
    radius: usize,
) -> Result<Option<(usize, G::Vertex)>> {
    let mut best: Option<(usize, String, G::Vertex)> = None;
    for v in g.search_vertices(radius)? {
        let Some(fv) = f.image(&v) else {
            continue;
        };
        let d = g.distance(&v, &fv)?;
        let key = (d, g.token(&v));
        if best
            .as_ref()
            .is_none_or(|(bd, bt, _)| key < (*bd, bt.clone()))
        {
            best = Some((key.0, key.1, v));
        }
    }
    Ok(best.map(|(d, _, v)| (d, v)))
}

/// `δ(f)`: exact on finite cubings; on implicit ones exact only when the
/// minimum is 0 or an axis through the witness certifies it.
pub fn translation_length<G: Geometry, M: VertexMap<G::Vertex>>(
    g: &G,
    f: &M,
    radius: usize,
    window: usize,
) -> Result<Option<TranslationLength<G::Vertex>>> {
    let Some((delta, witness)) = min_displacement(g, f, radius)? else {
        return Ok(None);
    };
    let exact = g.is_finite() || delta == 0 || axis_certificate(g, f, &witness, window).is_some();
    Ok(Some(TranslationLength {
        delta,
        witness,
        exact,
    }))
}

/// An axis through `p` on which `f` translates by `d(p, f(p))`.
fn axis_certificate<G: Geometry, M: VertexMap<G::Vertex>>(
    g: &G,
    f: &M,
    p: &G::Vertex,
    window: usize,
) -> Option<AxisWindow<G::Vertex>> {
    let axis = build_axis(g, f, p, window).ok()?;
    match classify_on_invariant_geodesic(g, f, &axis.vertices).ok()? {
        Trichotomy::Translation { d, .. } if d.unsigned_abs() as usize == axis.period => Some(axis),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyParams {
    /// Highest power checked for inversions; `None` uses the order of the
    /// map when known.
    pub max_power: Option<usize>,
    /// Search radius around the seed of an implicit cubing.
    pub radius: usize,
    /// Axis window half-length, in periods.
    pub window: usize,
}

impl Default for ClassifyParams {
    fn default() -> Self {
        ClassifyParams {
            max_power: None,
            radius: DEFAULT_RADIUS,
            window: DEFAULT_WINDOW,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<V, W> {
    Elliptic {
        fixed: V,
    },
    Hyperbolic {
        delta: usize,
        witness: V,
        axis: AxisWindow<V>,
    },
    InversionFound {
        wall: W,
        power: usize,
    },
    Indeterminate {
        radius: usize,
        best: Option<(usize, V)>,
    },
}

impl<V, W> Verdict<V, W> {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Elliptic { .. } => "elliptic",
            Verdict::Hyperbolic { .. } => "hyperbolic",
            Verdict::InversionFound { .. } => "inversion",
            Verdict::Indeterminate { .. } => "indeterminate",
        }
    }

    /// Process exit code for this verdict.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Elliptic { .. } | Verdict::Hyperbolic { .. } => 0,
            Verdict::InversionFound { .. } => 1,
            Verdict::Indeterminate { .. } => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification<V, W> {
    pub verdict: Verdict<V, W>,
    /// A fixed vertex, reported even when an inversion takes precedence.
    pub fixed: Option<V>,
    /// What was checked, one line per fact.
    pub certificate: Vec<String>,
}

impl<V, W: fmt::Debug> Classification<V, W> {
    pub fn is_elliptic(&self) -> bool {
        matches!(self.verdict, Verdict::Elliptic { .. })
    }

    pub fn is_hyperbolic(&self) -> bool {
        matches!(self.verdict, Verdict::Hyperbolic { .. })
    }
}

/// Inversion, then fixed vertex, then axis; otherwise indeterminate.
pub fn classify<G: Geometry, M: VertexMap<G::Vertex>>(
    g: &G,
    f: &M,
    params: &ClassifyParams,
) -> Result<Classification<G::Vertex, G::Wall>> {
    let mut certificate = Vec::new();
    let scope = if g.is_finite() {
        "all walls".to_owned()
    } else {
        format!("walls within radius {}", params.radius)
    };

    let mut fixed: Option<(String, G::Vertex)> = None;
    for v in g.search_vertices(params.radius)? {
        if f.image(&v).as_ref() == Some(&v) {
            let t = g.token(&v);
            if fixed.as_ref().is_none_or(|(ft, _)| t < *ft) {
                fixed = Some((t, v));
            }
        }
    }
    let fixed = fixed.map(|(_, v)| v);

    let inv = stable_inversion_check(g, f, params.max_power, params.radius)?;
    if let Some((wall, power)) = inv.first {
        certificate.push(format!(
            "f^{power} maps wall {wall:?} to itself exchanging its sides ({scope})"
        ));
        if let Some(v) = &fixed {
            certificate.push(format!("f also fixes {}", g.token(v)));
        }
        return Ok(Classification {
            verdict: Verdict::InversionFound { wall, power },
            fixed,
            certificate,
        });
    }
    certificate.push(format!(
        "no inversion for powers 1..={} ({scope})",
        inv.checked
    ));

    if let Some(v) = fixed.clone() {
        certificate.push(format!("f({0}) = {0}", g.token(&v)));
        return Ok(Classification {
            verdict: Verdict::Elliptic { fixed: v },
            fixed,
            certificate,
        });
    }
    certificate.push(if g.is_finite() {
        "no fixed vertex".to_owned()
    } else {
        format!("no fixed vertex within radius {}", params.radius)
    });

    let best = min_displacement(g, f, params.radius)?;
    if let Some((delta, witness)) = &best {
        certificate.push(format!(
            "least displacement {delta} at {}",
            g.token(witness)
        ));
        match build_axis(g, f, witness, params.window) {
            Ok(axis) => {
                let tri = classify_on_invariant_geodesic(g, f, &axis.vertices)?;
                if let Trichotomy::Translation { d, checked } = tri {
                    if d.unsigned_abs() as usize == *delta {
                        certificate.push(format!(
                            "axis window of {} vertices is geodesic and f translates it by {d}",
                            axis.vertices.len()
                        ));
                        certificate.push(format!(
                            "displacement >= {delta} at all {checked} window vertices"
                        ));
                        return Ok(Classification {
                            verdict: Verdict::Hyperbolic {
                                delta: *delta,
                                witness: witness.clone(),
                                axis,
                            },
                            fixed,
                            certificate,
                        });
                    }
                }
                certificate.push(format!(
                    "axis window acts as {tri:?}, not a translation by {delta}"
                ));
            }
            Err(e) => certificate.push(format!("axis construction failed: {e}")),
        }
    }
    Ok(Classification {
        verdict: Verdict::Indeterminate {
            radius: params.radius,
            best,
        },
        fixed,
        certificate,
    })
}
