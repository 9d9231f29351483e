//! Axes: invariant geodesic windows, the shift / flip trichotomy, relocation
//! towards a vertex and the power law for translation lengths.

use std::collections::HashMap;

use super::classify::{image, Classification, Verdict};
use super::geometry::{Geometry, Power, VertexMap};
use crate::error::{Error, Result};

/// Consecutive vertices `p_start, ..., p_end` of an axis with period `period`:
/// `f(p_i) = p_{i+period}` whenever both lie in the window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisWindow<V> {
    pub vertices: Vec<V>,
    pub period: usize,
    /// Index of `vertices[0]`.
    pub start: i64,
}

impl<V: PartialEq> AxisWindow<V> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Index of the last vertex.
    pub fn end(&self) -> i64 {
        self.start + self.vertices.len() as i64 - 1
    }

    pub fn get(&self, i: i64) -> Option<&V> {
        let k = i.checked_sub(self.start)?;
        usize::try_from(k).ok().and_then(|k| self.vertices.get(k))
    }

    pub fn index_of(&self, v: &V) -> Option<i64> {
        self.vertices
            .iter()
            .position(|w| w == v)
            .map(|k| self.start + k as i64)
    }
}

/// Window `lo..=hi` of the periodic path through `segment`, which runs from
/// `q` to `f(q)` and sits at indices `base..=base+d`.
fn periodic_window<G: Geometry, M: VertexMap<G::Vertex>>(
    g: &G,
    f: &M,
    segment: &[G::Vertex],
    base: i64,
    lo: i64,
    hi: i64,
) -> Result<AxisWindow<G::Vertex>> {
    let d = (segment.len() - 1) as i64;
    let vertices = (lo..=hi)
        .map(|k| {
            let rel = k - base;
            image(
                g,
                f,
                &segment[rel.rem_euclid(d) as usize],
                rel.div_euclid(d),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AxisWindow {
        vertices,
        period: d as usize,
        start: lo,
    })
}

/// Checks that the window crosses no wall twice. A repetition is reported
/// as the number of consecutive periods it spans.
fn check_geodesic<G: Geometry>(g: &G, axis: &AxisWindow<G::Vertex>) -> Result<()> {
    let mut seen: HashMap<G::Wall, usize> = HashMap::new();
    for (i, pair) in axis.vertices.windows(2).enumerate() {
        let h = g
            .dual_wall(&pair[0], &pair[1])
            .ok_or_else(|| Error::InvalidStep(g.token(&pair[0]), g.token(&pair[1])))?;
        if let Some(j) = seen.insert(h, i) {
            let d = axis.period.max(1);
            return Err(Error::GeodesicFailure(i / d - j / d + 1));
        }
    }
    Ok(())
}

/// Concatenates a geodesic from `p` to `f(p)` with its translates to cover
/// indices `-n*d..=n*d`, where `d = d(p, f(p))`, and checks the result is
/// geodesic.
pub fn build_axis<G: Geometry, M: VertexMap<G::Vertex>>(
    g: &G,
    f: &M,
    p: &G::Vertex,
    n: usize,
) -> Result<AxisWindow<G::Vertex>> {
    let fp = image(g, f, p, 1)?;
    let segment = g.geodesic(p, &fp)?;
    let d = (segment.len() - 1) as i64;
    if d == 0 {
        return Err(Error::Precondition(format!("{} is fixed", g.token(p))));
    }
    let half = n.max(1) as i64 * d;
    let axis = periodic_window(g, f, &segment, 0, -half, half)?;
    check_geodesic(g, &axis)?;
    Ok(axis)
}

/// How a map acts on a geodesic it preserves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Trichotomy<V> {
    FixedPoint(V),
    AdjacentSwap(V, V),
    /// `p_i -> p_{i+d}`. `checked` counts window vertices where
    /// `d(x, f(x)) >= |d|` was confirmed.
    Translation {
        d: i64,
        checked: usize,
    },
}

/// Determines the index map `i -> c + e*i` (`e = ±1`) induced on a
/// window and reads off the case.
pub fn classify_on_invariant_geodesic<G: Geometry, M: VertexMap<G::Vertex>>(
    g: &G,
    f: &M,
    window: &[G::Vertex],
) -> Result<Trichotomy<G::Vertex>> {
    let n = window.len() as i64;
    let pos: HashMap<&G::Vertex, i64> = window
        .iter()
        .enumerate()
        .map(|(i, v)| (v, i as i64))
        .collect();
    let images: Vec<Option<G::Vertex>> = window.iter().map(|v| f.image(v)).collect();
    let phi: Vec<Option<i64>> = images
        .iter()
        .map(|img| img.as_ref().and_then(|w| pos.get(w).copied()))
        .collect();
    let (c, e) = phi
        .windows(2)
        .enumerate()
        .find_map(|(i, w)| match (w[0], w[1]) {
            (Some(a), Some(b)) => Some((i as i64, a, b)),
            _ => None,
        })
        .map(|(i, a, b)| {
            let e = b - a;
            (a - e * i, e)
        })
        .ok_or(Error::WindowTooShort)?;
    if e.abs() != 1 {
        return Err(Error::WindowNotInvariant(
            "consecutive vertices are not sent to consecutive vertices".into(),
        ));
    }
    for (i, got) in phi.iter().enumerate() {
        let want = c + e * i as i64;
        let inside = (0..n).contains(&want);
        if (inside && *got != Some(want)) || (!inside && got.is_some()) {
            return Err(Error::WindowNotInvariant(format!(
                "{} is not sent to position {want}",
                g.token(&window[i])
            )));
        }
    }
    let at = |i: i64| {
        usize::try_from(i)
            .ok()
            .and_then(|i| window.get(i).cloned())
            .ok_or(Error::WindowTooShort)
    };
    if e == -1 {
        return if c % 2 == 0 {
            Ok(Trichotomy::FixedPoint(at(c / 2)?))
        } else {
            Ok(Trichotomy::AdjacentSwap(at((c - 1) / 2)?, at((c + 1) / 2)?))
        };
    }
    if c == 0 {
        return Ok(Trichotomy::FixedPoint(window[0].clone()));
    }
    // the lower bound d(x, f(x)) >= |c|, on every window vertex with an image
    let mut checked = 0;
    for (v, img) in window.iter().zip(&images) {
        if let Some(w) = img {
            if g.distance(v, w)? < c.unsigned_abs() as usize {
                return Err(Error::WindowNotInvariant(format!(
                    "{} moves less than {}",
                    g.token(v),
                    c.abs()
                )));
            }
            checked += 1;
        }
    }
    Ok(Trichotomy::Translation { d: c, checked })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relocation<V> {
    pub axis: AxisWindow<V>,
    /// Last window index at least distance from the target vertex.
    pub closest: i64,
    pub distance: usize,
    /// Reflections performed.
    pub surgeries: usize,
    /// Whether `d(p, q_{closest+k}) = distance + k` held up to the window end.
    pub forward_ok: bool,
}

/// Moves an axis towards `p` by reflecting offending stretches through the
/// carrier of the wall crossed twice, then re-closing by periodicity.
pub fn relocate_axis<G: Geometry, M: VertexMap<G::Vertex>>(
    g: &G,
    f: &M,
    axis: &AxisWindow<G::Vertex>,
    p: &G::Vertex,
) -> Result<Relocation<G::Vertex>> {
    let d = axis.period as i64;
    let (lo, hi) = (axis.start, axis.end());
    let mut cur = axis.clone();
    let mut surgeries = 0;
    let mut initial = None;
    loop {
        let dist = cur
            .vertices
            .iter()
            .map(|v| g.distance(p, v))
            .collect::<Result<Vec<_>>>()?;
        let best = *dist.iter().min().ok_or(Error::WindowTooShort)?;
        let initial = *initial.get_or_insert(best);
        let n = dist.iter().position(|&x| x == best).unwrap() as i64;
        if n + d > hi - lo {
            return Err(Error::WindowTooShort);
        }
        let at = |i: i64| dist[i as usize];
        let bad = (n + 1..=n + d).find(|&m| at(m) != at(n) + (m - n) as usize);
        let Some(m) = bad else {
            let closest = dist.iter().rposition(|&x| x == best).unwrap() as i64;
            let forward_ok = (closest..=hi - lo).all(|k| at(k) == best + (k - closest) as usize);
            return Ok(Relocation {
                axis: cur,
                closest: lo + closest,
                distance: best,
                surgeries,
                forward_ok,
            });
        };
        if surgeries >= initial {
            // each surgery brings the axis strictly closer to p
            return Err(Error::Precondition("relocation did not converge".into()));
        }
        let q = |i: i64| &cur.vertices[i as usize];
        let h = g
            .dual_wall(q(m - 1), q(m))
            .ok_or_else(|| Error::InvalidStep(g.token(q(m - 1)), g.token(q(m))))?;
        let mut segment = vec![q(n).clone()];
        for i in n..m - 1 {
            segment.push(g.reflect(&h, q(i))?);
        }
        segment.extend((m..=n + d).map(|i| q(i).clone()));
        cur = periodic_window(g, f, &segment, lo + n, lo, hi)?;
        check_geodesic(g, &cur)?;
        surgeries += 1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerLength {
    pub n: usize,
    /// `n * δ(f)`, certified when `certified` holds.
    pub delta: usize,
    pub displacement_at_witness: usize,
    /// The axis of `f` is an axis of `f^n` with translation `n * δ(f)`.
    pub certified: bool,
}

/// Checks `δ(f^n) = n δ(f)` for `n = 1..=n_max` using the axis of a
/// hyperbolic classification.
pub fn power_length_check<G: Geometry, M: VertexMap<G::Vertex>>(
    g: &G,
    f: &M,
    classification: &Classification<G::Vertex, G::Wall>,
    n_max: usize,
) -> Result<Vec<PowerLength>> {
    let Verdict::Hyperbolic {
        delta,
        witness,
        axis,
    } = &classification.verdict
    else {
        return Err(Error::NotHyperbolic(classification.verdict.name().into()));
    };
    let mut out = Vec::new();
    for n in 1..=n_max {
        let fnp = Power {
            map: f,
            k: n as i64,
        };
        let disp = g.distance(witness, &image(g, f, witness, n as i64)?)?;
        let certified = matches!(
            classify_on_invariant_geodesic(g, &fnp, &axis.vertices),
            Ok(Trichotomy::Translation { d, .. }) if d.unsigned_abs() as usize == n * delta
        ) && disp == n * delta;
        out.push(PowerLength {
            n,
            delta: n * delta,
            displacement_at_witness: disp,
            certified,
        });
    }
    Ok(out)
}
