//! Finitely supported integer sequences, cut down to a coordinate window,
//! with the map `f(u) = e_0 + σ(u)` where `σ` shifts coordinates up by one.

use std::fmt;

use crate::automorphism::{
    classify, power_length_check, ClassifyParams, FnMap, ImplicitGeometry, PowerLength, Verdict,
};
use crate::complex::{validate, ImplicitComplex};
use crate::error::{Error, Result};

/// Sequences supported in `[-k, k]`, stored with coordinate `i` at `i + k`.
/// Edges change one coordinate by one.
#[derive(Clone, Debug)]
pub struct L2Window {
    k: i64,
    name: String,
}

impl L2Window {
    pub fn new(k: usize) -> Self {
        L2Window {
            k: k as i64,
            name: format!("l2 window {k}"),
        }
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    fn width(&self) -> usize {
        (2 * self.k + 1) as usize
    }

    /// The basis vector `e_i`, if `i` lies in the window.
    pub fn basis(&self, i: i64) -> Option<Vec<i64>> {
        let mut v = vec![0; self.width()];
        *v.get_mut(usize::try_from(i + self.k).ok()?)? = 1;
        Some(v)
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.width()]
    }

    /// `f(u) = e_0 + σ(u)`; `None` when `σ(u)` leaves the window.
    pub fn f(&self) -> FnMap<Vec<i64>> {
        let k = self.k as usize;
        let fwd = move |u: &Vec<i64>| {
            if *u.last()? != 0 {
                return None;
            }
            let mut v = vec![0; u.len()];
            v[1..].copy_from_slice(&u[..u.len() - 1]);
            v[k] += 1;
            Some(v)
        };
        let bwd = move |v: &Vec<i64>| {
            let mut w = v.clone();
            w[k] -= 1;
            if w[0] != 0 {
                return None;
            }
            let mut u = vec![0; w.len()];
            u[..w.len() - 1].copy_from_slice(&w[1..]);
            Some(u)
        };
        FnMap::new(fwd, bwd)
    }
}

impl ImplicitComplex for L2Window {
    type Vertex = Vec<i64>;
    /// `(i, c)`: the wall between `u_i = c` and `u_i = c + 1`.
    type Wall = (i64, i64);

    fn name(&self) -> &str {
        &self.name
    }

    fn seed(&self) -> Vec<i64> {
        self.zero()
    }

    /// `0` for the zero sequence, otherwise `u[i=v,...]` over the support.
    fn token(&self, v: &Vec<i64>) -> String {
        let parts: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(j, x)| format!("{}={x}", j as i64 - self.k))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            format!("u[{}]", parts.join(","))
        }
    }

    fn neighbors(&self, v: &Vec<i64>) -> Vec<Vec<i64>> {
        let mut out = Vec::with_capacity(2 * v.len());
        for j in 0..v.len() {
            for s in [-1, 1] {
                let mut w = v.clone();
                w[j] += s;
                out.push(w);
            }
        }
        out
    }

    fn squares(&self, v: &Vec<i64>) -> Vec<[Vec<i64>; 4]> {
        let mut out = Vec::new();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
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

    fn dual_wall(&self, u: &Vec<i64>, v: &Vec<i64>) -> Option<(i64, i64)> {
        let diff: Vec<usize> = (0..u.len()).filter(|&j| u[j] != v[j]).collect();
        match diff.as_slice() {
            [j] if (u[*j] - v[*j]).abs() == 1 => Some((*j as i64 - self.k, u[*j].min(v[*j]))),
            _ => None,
        }
    }

    fn side(&self, wall: &(i64, i64), v: &Vec<i64>) -> bool {
        v[(wall.0 + self.k) as usize] > wall.1
    }
}

#[derive(Clone, Debug)]
pub struct L2Report {
    pub window: usize,
    pub axis_half: usize,
    pub radius: usize,
    pub verdict: &'static str,
    pub delta: Option<usize>,
    pub axis: Vec<String>,
    pub certificate: Vec<String>,
    /// `d(0, f^n(0))` for `n = 0..=axis_half`.
    pub orbit_distances: Vec<usize>,
    pub fixed_in_ball: bool,
    pub min_displacement_in_ball: Option<usize>,
    pub powers: Vec<PowerLength>,
    pub ball_vertices: usize,
    pub ball_is_cubing: bool,
}

impl L2Report {
    pub fn passed(&self) -> bool {
        self.verdict == "hyperbolic"
            && self.delta == Some(1)
            && self.axis.len() > 2 * self.axis_half
            && self
                .orbit_distances
                .iter()
                .enumerate()
                .all(|(n, &d)| d == n)
            && !self.fixed_in_ball
            && self.min_displacement_in_ball.is_some_and(|d| d >= 1)
            && self.powers.iter().all(|p| p.certified && p.delta == p.n)
            && self.ball_is_cubing
    }
}

impl fmt::Display for L2Report {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            out,
            "l2 demo: window [-{0}, {0}], axis half-length {1}",
            self.window, self.axis_half
        )?;
        writeln!(out, "verdict: {}", self.verdict)?;
        if let Some(d) = self.delta {
            writeln!(out, "delta: {d}")?;
        }
        writeln!(out, "axis: {}", self.axis.join(" "))?;
        for line in &self.certificate {
            writeln!(out, "  {line}")?;
        }
        let orbit: Vec<String> = self.orbit_distances.iter().map(usize::to_string).collect();
        writeln!(out, "d(0, f^n(0)) for n = 0..: {}", orbit.join(" "))?;
        writeln!(
            out,
            "ball of radius {}: fixed vertex {}, least displacement {}",
            self.radius,
            if self.fixed_in_ball { "found" } else { "none" },
            self.min_displacement_in_ball
                .map_or("-".into(), |d| d.to_string())
        )?;
        for p in &self.powers {
            writeln!(
                out,
                "delta(f^{}) = {} ({})",
                p.n,
                p.delta,
                if p.certified {
                    "certified"
                } else {
                    "not certified"
                }
            )?;
        }
        writeln!(
            out,
            "ball of radius {}: {} vertices, {}",
            L2_BALL_RADIUS,
            self.ball_vertices,
            if self.ball_is_cubing {
                "valid cubing"
            } else {
                "NOT a cubing"
            }
        )?;
        writeln!(
            out,
            "note: the CAT(0) translation length and parabolicity of f are metric facts and are not computed"
        )?;
        write!(
            out,
            "result: {}",
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}

/// Search radius for fixed points and displacement minima.
pub const L2_SEARCH_RADIUS: usize = 2;
/// Radius of the ball validated as a cubing. Larger balls are not median
/// closed once three coordinates are in play.
pub const L2_BALL_RADIUS: usize = 1;

pub fn demo_l2(window: usize, axis_half: usize) -> Result<L2Report> {
    if window < axis_half || window == 0 {
        return Err(Error::Precondition(format!(
            "window {window} is too small for axis half-length {axis_half}"
        )));
    }
    let x = L2Window::new(window);
    let g = ImplicitGeometry::new(&x);
    let f = x.f();
    let params = ClassifyParams {
        max_power: Some(4),
        radius: L2_SEARCH_RADIUS,
        window: axis_half,
    };
    let c = classify(&g, &f, &params)?;
    let (delta, axis) = match &c.verdict {
        Verdict::Hyperbolic { delta, axis, .. } => (
            Some(*delta),
            axis.vertices.iter().map(|v| x.token(v)).collect(),
        ),
        _ => (None, Vec::new()),
    };
    let zero = x.zero();
    let mut orbit_distances = Vec::new();
    for n in 0..=axis_half as i64 {
        let p = crate::automorphism::VertexMap::image_pow(&f, &zero, n)
            .ok_or_else(|| Error::RegionExceeded(x.token(&zero)))?;
        orbit_distances.push(crate::automorphism::Geometry::distance(&g, &zero, &p)?);
    }
    let mut fixed_in_ball = false;
    let mut min_disp: Option<usize> = None;
    for v in crate::automorphism::Geometry::search_vertices(&g, L2_SEARCH_RADIUS)? {
        let Some(fv) = crate::automorphism::VertexMap::image(&f, &v) else {
            continue;
        };
        fixed_in_ball |= fv == v;
        let d = crate::automorphism::Geometry::distance(&g, &v, &fv)?;
        min_disp = Some(min_disp.map_or(d, |m| m.min(d)));
    }
    let powers = if c.is_hyperbolic() {
        power_length_check(&g, &f, &c, 4)?
    } else {
        Vec::new()
    };
    let ball = g.ball(L2_BALL_RADIUS)?;
    Ok(L2Report {
        window,
        axis_half,
        radius: L2_SEARCH_RADIUS,
        verdict: c.verdict.name(),
        delta,
        axis,
        certificate: c.certificate,
        orbit_distances,
        fixed_in_ball,
        min_displacement_in_ball: min_disp,
        powers,
        ball_vertices: ball.vertex_count(),
        ball_is_cubing: validate(&ball).is_cubing(),
    })
}
