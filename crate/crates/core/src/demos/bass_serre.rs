//! The Bass–Serre tree of `BS(m, n) = <a, b | b a^m b^-1 = a^n>`.
//!
//! Vertices are reduced words in letters `(i, up)`: `up` letters stand for
//! `a^i b` with `0 <= i < n`, down letters for `a^i b^-1` with `0 <= i < m`.
//! A letter of one direction is never followed by a `0` letter of the other,
//! which would backtrack.
//! The root is the coset of `<a>`; each vertex has `m + n` neighbours.

use std::fmt;

use crate::automorphism::{
    classify, power_length_check, ClassifyParams, FnMap, Geometry, ImplicitGeometry, PowerLength,
    Verdict,
};
use crate::complex::{validate, ImplicitComplex};
use crate::error::{Error, Result};

pub type Word = Vec<(u64, bool)>;

#[derive(Clone, Debug)]
pub struct BassSerreTree {
    m: u64,
    n: u64,
    name: String,
}

impl BassSerreTree {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Precondition("BS(m, n) needs m, n >= 1".into()));
        }
        Ok(BassSerreTree {
            m,
            n,
            name: format!("BS({m},{n}) tree"),
        })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    fn modulus(&self, up: bool) -> u64 {
        if up {
            self.n
        } else {
            self.m
        }
    }

    /// `a^k` applied to a word: adds `k` to the first letter and carries.
    pub fn act_a(&self, w: &Word, k: i64) -> Word {
        let mut out = w.clone();
        let mut carry = k as i128;
        for letter in out.iter_mut() {
            if carry == 0 {
                break;
            }
            let modulus = self.modulus(letter.1) as i128;
            let total = letter.0 as i128 + carry;
            letter.0 = total.rem_euclid(modulus) as u64;
            // a^n b = b a^m and a^m b^-1 = b^-1 a^n
            let q = total.div_euclid(modulus);
            carry = q * if letter.1 { self.m } else { self.n } as i128;
        }
        out
    }

    /// `b` (or `b^-1` when `up` is false) applied to a word.
    pub fn act_b(&self, w: &Word, up: bool) -> Word {
        if w.first() == Some(&(0, !up)) {
            return w[1..].to_vec();
        }
        let mut out = Vec::with_capacity(w.len() + 1);
        out.push((0, up));
        out.extend_from_slice(w);
        out
    }

    pub fn a(&self) -> FnMap<Word> {
        let (s, t) = (self.clone(), self.clone());
        FnMap::new(move |w| Some(s.act_a(w, 1)), move |w| Some(t.act_a(w, -1)))
    }

    pub fn b(&self) -> FnMap<Word> {
        let (s, t) = (self.clone(), self.clone());
        FnMap::new(
            move |w| Some(s.act_b(w, true)),
            move |w| Some(t.act_b(w, false)),
        )
    }

    fn is_child(&self, parent: &Word, child: &Word) -> bool {
        child.len() == parent.len() + 1 && child.starts_with(parent)
    }
}

impl ImplicitComplex for BassSerreTree {
    type Vertex = Word;
    /// The endpoint of the dual edge farther from the root.
    type Wall = Word;

    fn name(&self) -> &str {
        &self.name
    }

    fn seed(&self) -> Word {
        Vec::new()
    }

    fn token(&self, v: &Word) -> String {
        let mut s = String::from("v");
        for &(i, up) in v {
            s.push_str(&format!(".{i}{}", if up { '+' } else { '-' }));
        }
        s
    }

    fn neighbors(&self, v: &Word) -> Vec<Word> {
        let mut out = Vec::new();
        if !v.is_empty() {
            out.push(v[..v.len() - 1].to_vec());
        }
        for up in [true, false] {
            for i in 0..self.modulus(up) {
                if i == 0 && v.last().map(|l| l.1) == Some(!up) {
                    continue;
                }
                let mut w = v.clone();
                w.push((i, up));
                out.push(w);
            }
        }
        out
    }

    fn squares(&self, _v: &Word) -> Vec<[Word; 4]> {
        Vec::new()
    }

    fn dual_wall(&self, u: &Word, v: &Word) -> Option<Word> {
        if self.is_child(u, v) {
            Some(v.clone())
        } else if self.is_child(v, u) {
            Some(u.clone())
        } else {
            None
        }
    }

    fn side(&self, wall: &Word, v: &Word) -> bool {
        v.starts_with(wall)
    }
}

#[derive(Clone, Debug)]
pub struct BsReport {
    pub m: u64,
    pub n: u64,
    pub radius: usize,
    pub a_verdict: &'static str,
    pub a_fixed: Option<String>,
    pub b_verdict: &'static str,
    pub b_delta: Option<usize>,
    pub b_axis: Vec<String>,
    pub b_certificate: Vec<String>,
    /// Vertices of the ball on which `b a^m b^-1` and `a^n` were compared.
    pub relation_checked: usize,
    pub relation_failures: Vec<String>,
    pub powers: Vec<PowerLength>,
    pub ball_vertices: usize,
    pub ball_is_cubing: bool,
    pub degree_ok: bool,
}

impl BsReport {
    pub fn passed(&self) -> bool {
        self.a_verdict == "elliptic"
            && self.b_verdict == "hyperbolic"
            && self.b_delta == Some(1)
            && self.relation_failures.is_empty()
            && self.powers.iter().all(|p| p.certified && p.delta == p.n)
            && self.ball_is_cubing
            && self.degree_ok
    }
}

impl fmt::Display for BsReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            out,
            "BS({},{}) demo: search radius {}",
            self.m, self.n, self.radius
        )?;
        writeln!(
            out,
            "a: {}{}",
            self.a_verdict,
            self.a_fixed
                .as_ref()
                .map_or(String::new(), |t| format!(", fixes {t}"))
        )?;
        writeln!(out, "b: {}", self.b_verdict)?;
        if let Some(d) = self.b_delta {
            writeln!(out, "delta(b): {d}")?;
        }
        writeln!(out, "axis of b: {}", self.b_axis.join(" "))?;
        for line in &self.b_certificate {
            writeln!(out, "  {line}")?;
        }
        writeln!(
            out,
            "b a^{} b^-1 = a^{} on {} vertices, {} failures",
            self.m,
            self.n,
            self.relation_checked,
            self.relation_failures.len()
        )?;
        for p in &self.powers {
            writeln!(
                out,
                "delta(b^{}) = {} ({})",
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
            "ball: {} vertices, {}, degree {}",
            self.ball_vertices,
            if self.ball_is_cubing {
                "valid cubing"
            } else {
                "NOT a cubing"
            },
            if self.degree_ok { "ok" } else { "wrong" }
        )?;
        write!(
            out,
            "result: {}",
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}

pub fn demo_bs(m: u64, n: u64, radius: usize) -> Result<BsReport> {
    if radius < 3 {
        return Err(Error::Precondition(format!(
            "radius {radius} is too small to certify an axis; use at least 3"
        )));
    }
    let t = BassSerreTree::new(m, n)?;
    let g = ImplicitGeometry::new(&t);
    let params = ClassifyParams {
        max_power: Some(4),
        radius,
        window: 4,
    };
    let (a, b) = (t.a(), t.b());
    let ca = classify(&g, &a, &params)?;
    let cb = classify(&g, &b, &params)?;
    let (b_delta, b_axis) = match &cb.verdict {
        Verdict::Hyperbolic { delta, axis, .. } => (
            Some(*delta),
            axis.vertices.iter().map(|v| t.token(v)).collect(),
        ),
        _ => (None, Vec::new()),
    };
    let a_fixed = match &ca.verdict {
        Verdict::Elliptic { fixed } => Some(t.token(fixed)),
        _ => None,
    };
    let verts = g.search_vertices(radius)?;
    let mut relation_failures = Vec::new();
    for v in &verts {
        let lhs = t.act_b(&t.act_a(&t.act_b(v, false), m as i64), true);
        let rhs = t.act_a(v, n as i64);
        if lhs != rhs {
            relation_failures.push(t.token(v));
        }
    }
    let degree = (m + n) as usize;
    let degree_ok = verts.iter().all(|v| {
        let nb = t.neighbors(v);
        let mut sorted = nb.clone();
        sorted.sort();
        sorted.dedup();
        nb.len() == degree && sorted.len() == degree
    });
    let powers = if cb.is_hyperbolic() {
        power_length_check(&g, &b, &cb, 4)?
    } else {
        Vec::new()
    };
    let ball = g.ball(radius.min(3))?;
    Ok(BsReport {
        m,
        n,
        radius,
        a_verdict: ca.verdict.name(),
        a_fixed,
        b_verdict: cb.verdict.name(),
        b_delta,
        b_axis,
        b_certificate: cb.certificate,
        relation_checked: verts.len(),
        relation_failures,
        powers,
        ball_vertices: ball.vertex_count(),
        ball_is_cubing: validate(&ball).is_cubing(),
        degree_ok,
    })
}
