//! Acceptance of a finite complex as a cubing.
//!
//! Simple connectivity is not checked directly. Instead the 1-skeleton must
//! be a median graph whose 4-cycles all bound squares; together with flag
//! links this characterizes the finite CAT(0) cube complexes.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use super::{canonical_corners, CubeComplex, CubeId, VertexId};
use crate::metric::DistanceMatrix;

/// Cap on recorded defects per check.
const MAX_DEFECTS: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Defect {
    MissingFace {
        cube: Vec<String>,
        face: Vec<String>,
    },
    Incompatible {
        first: Vec<String>,
        second: Vec<String>,
    },
    NonFlagLink {
        vertex: String,
        link_vertices: Vec<String>,
    },
    Disconnected {
        u: String,
        v: String,
    },
    UnfilledSquare {
        cycle: [String; 4],
    },
    MedianCount {
        triple: [String; 3],
        medians: usize,
    },
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::MissingFace { cube, face } => {
                write!(
                    f,
                    "cube [{}] lacks face [{}]",
                    cube.join(" "),
                    face.join(" ")
                )
            }
            Defect::Incompatible { first, second } => write!(
                f,
                "cubes [{}] and [{}] do not meet in a common face",
                first.join(" "),
                second.join(" ")
            ),
            Defect::NonFlagLink {
                vertex,
                link_vertices,
            } => write!(
                f,
                "link of `{vertex}` is not flag: edges to {{{}}} span no cube",
                link_vertices.join(", ")
            ),
            Defect::Disconnected { u, v } => {
                write!(f, "`{u}` and `{v}` lie in different components")
            }
            Defect::UnfilledSquare { cycle } => {
                write!(f, "4-cycle {} bounds no square", cycle.join("-"))
            }
            Defect::MedianCount { triple, medians } => {
                write!(f, "triple ({}) has {medians} medians", triple.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub closure_ok: bool,
    pub compatibility_ok: bool,
    pub links_flag_ok: bool,
    pub median_ok: bool,
    pub failures: Vec<Defect>,
}

impl ValidationReport {
    pub fn is_cubing(&self) -> bool {
        self.closure_ok && self.compatibility_ok && self.links_flag_ok && self.median_ok
    }
}

pub fn validate(x: &CubeComplex) -> ValidationReport {
    let mut failures = Vec::new();
    let closure = check_closure(x, &mut failures);
    let compat = check_compatibility(x, &mut failures);
    let flag = check_links(x, &mut failures);
    let median = check_median(x, &mut failures);
    ValidationReport {
        closure_ok: closure,
        compatibility_ok: compat,
        links_flag_ok: flag,
        median_ok: median,
        failures,
    }
}

/// [`validate`] on a dedicated pool of `jobs` threads.
pub fn validate_with_jobs(x: &CubeComplex, jobs: usize) -> ValidationReport {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| validate(x)),
        Err(_) => validate(x),
    }
}

fn tokens(x: &CubeComplex, vs: &[VertexId]) -> Vec<String> {
    vs.iter().map(|&v| x.token(v).to_owned()).collect()
}

fn check_closure(x: &CubeComplex, out: &mut Vec<Defect>) -> bool {
    let mut ok = true;
    let mut reported = 0;
    for c in x.cubes() {
        for f in c.faces() {
            if x.find_cube(&f).is_none() {
                ok = false;
                if reported < MAX_DEFECTS {
                    reported += 1;
                    out.push(Defect::MissingFace {
                        cube: tokens(x, c.corners()),
                        face: tokens(x, &f),
                    });
                }
            }
        }
    }
    ok
}

/// Corners of `corners` lying in `set`, if they form a face.
fn face_on(corners: &[VertexId], set: &HashSet<VertexId>) -> Option<Vec<VertexId>> {
    let positions: Vec<usize> = (0..corners.len())
        .filter(|&i| set.contains(&corners[i]))
        .collect();
    let and = positions.iter().fold(usize::MAX, |a, &i| a & i);
    let or = positions.iter().fold(0, |a, &i| a | i);
    let free = and ^ or;
    if positions.len() != 1 << free.count_ones() {
        return None;
    }
    if positions.iter().any(|&i| i & !free != and & !free) {
        return None;
    }
    Some(canonical_corners(
        &positions.iter().map(|&i| corners[i]).collect::<Vec<_>>(),
    ))
}

fn check_compatibility(x: &CubeComplex, out: &mut Vec<Defect>) -> bool {
    let maximal = x.maximal_cubes();
    let mut is_max = vec![false; x.cubes().len()];
    for id in &maximal {
        is_max[id.index()] = true;
    }
    let mut ok = true;
    let mut reported = 0;
    for v in x.vertices() {
        let here: Vec<CubeId> = x
            .cubes_at(v)
            .iter()
            .copied()
            .filter(|c| is_max[c.index()])
            .collect();
        for (i, &a) in here.iter().enumerate() {
            for &b in &here[i + 1..] {
                let ca = x.cube(a).corners();
                let cb = x.cube(b).corners();
                let sa: HashSet<VertexId> = ca.iter().copied().collect();
                let shared: HashSet<VertexId> =
                    cb.iter().copied().filter(|w| sa.contains(w)).collect();
                // examine each pair once, at its least shared vertex
                if shared.iter().min() != Some(&v) {
                    continue;
                }
                let good = match (face_on(ca, &shared), face_on(cb, &shared)) {
                    (Some(fa), Some(fb)) => fa == fb,
                    _ => false,
                };
                if !good {
                    ok = false;
                    if reported < MAX_DEFECTS {
                        reported += 1;
                        out.push(Defect::Incompatible {
                            first: tokens(x, ca),
                            second: tokens(x, cb),
                        });
                    }
                }
            }
        }
    }
    ok
}

fn check_links(x: &CubeComplex, out: &mut Vec<Defect>) -> bool {
    let mut ok = true;
    let mut reported = 0;
    for v in x.vertices() {
        let mut simplices: HashSet<Vec<VertexId>> = HashSet::new();
        for &c in x.cubes_at(v) {
            if let Some(mut s) = x.cube(c).neighbors_of(v) {
                s.sort_unstable();
                simplices.insert(s);
            }
        }
        let adjacent = |a: VertexId, b: VertexId| {
            let key = if a < b { vec![a, b] } else { vec![b, a] };
            simplices.contains(&key)
        };
        let mut sorted: Vec<&Vec<VertexId>> = simplices.iter().filter(|s| s.len() >= 2).collect();
        sorted.sort();
        for s in sorted {
            for &cand in x.neighbors(v) {
                if s.binary_search(&cand).is_ok() || !s.iter().all(|&y| adjacent(y, cand)) {
                    continue;
                }
                let mut grown = s.clone();
                grown.push(cand);
                grown.sort_unstable();
                if !simplices.contains(&grown) {
                    ok = false;
                    if reported < MAX_DEFECTS {
                        reported += 1;
                        out.push(Defect::NonFlagLink {
                            vertex: x.token(v).to_owned(),
                            link_vertices: tokens(x, &grown),
                        });
                    }
                }
            }
        }
    }
    ok
}

fn check_median(x: &CubeComplex, out: &mut Vec<Defect>) -> bool {
    let n = x.vertex_count();
    if n == 0 {
        return true;
    }
    let comps = x.components();
    if comps.len() > 1 {
        out.push(Defect::Disconnected {
            u: x.token(comps[0][0]).to_owned(),
            v: x.token(comps[1][0]).to_owned(),
        });
        return false;
    }
    let mut ok = true;

    // every 4-cycle must bound a square
    let mut reported = 0;
    for a in x.vertices() {
        let nb = x.neighbors(a);
        for (i, &b) in nb.iter().enumerate() {
            for &c in &nb[i + 1..] {
                for &d in x.neighbors(b) {
                    if d <= a || !x.are_adjacent(c, d) {
                        continue;
                    }
                    if x.find_cube(&[a, b, c, d]).is_none() {
                        ok = false;
                        if reported < MAX_DEFECTS {
                            reported += 1;
                            out.push(Defect::UnfilledSquare {
                                cycle: [a, b, d, c].map(|w| x.token(w).to_owned()),
                            });
                        }
                    }
                }
            }
        }
    }

    let dm = DistanceMatrix::new(x);
    let words = n.div_ceil(64);
    let bad: Vec<([VertexId; 3], usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|u| {
            let du = dm.row(VertexId::from_index(u));
            // interval bitsets I(u, v) for v > u
            let intervals: Vec<Vec<u64>> = (0..n)
                .map(|v| {
                    let mut bits = vec![0u64; words];
                    if v > u {
                        let dv = dm.row(VertexId::from_index(v));
                        for w in 0..n {
                            if du[w] + dv[w] == du[v] {
                                bits[w / 64] |= 1 << (w % 64);
                            }
                        }
                    }
                    bits
                })
                .collect();
            let mut found = Vec::new();
            for v in u + 1..n {
                let dv = dm.row(VertexId::from_index(v));
                for w in v + 1..n {
                    let mut count = 0;
                    for (k, (a, b)) in intervals[v].iter().zip(&intervals[w]).enumerate() {
                        let mut m = a & b;
                        while m != 0 {
                            let bit = m.trailing_zeros() as usize;
                            m &= m - 1;
                            let c = k * 64 + bit;
                            if dv[c] + dm.get(VertexId::from_index(c), VertexId::from_index(w))
                                == dv[w]
                            {
                                count += 1;
                            }
                        }
                    }
                    if count != 1 {
                        found.push(([u, v, w].map(VertexId::from_index), count));
                        if found.len() >= MAX_DEFECTS {
                            return found.into_iter();
                        }
                    }
                }
            }
            found.into_iter()
        })
        .collect();
    for (triple, medians) in bad.into_iter().take(MAX_DEFECTS) {
        ok = false;
        out.push(Defect::MedianCount {
            triple: triple.map(|w| x.token(w).to_owned()),
            medians,
        });
    }
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::parse_ccx;

    #[test]
    fn three_cube_is_a_cubing() {
        let x = parse_ccx("ccx 1\ncube 000 001 010 011 100 101 110 111\n").unwrap();
        let r = validate(&x);
        assert!(r.is_cubing(), "{:?}", r.failures);
    }

    #[test]
    fn hollow_corner_fails_flag_condition() {
        // three squares around o pairwise sharing an edge, no 3-cube
        let x = parse_ccx("ccx 1\ncube o a b ab\ncube o a c ac\ncube o b c bc\n").unwrap();
        let r = validate(&x);
        assert!(!r.links_flag_ok);
        assert!(r.closure_ok && r.compatibility_ok);
        assert!(r.failures.iter().any(|d| matches!(
            d,
            Defect::NonFlagLink { vertex, link_vertices } if vertex == "o" && link_vertices.len() == 3
        )));
    }

    #[test]
    fn empty_four_cycle_is_rejected() {
        let x = parse_ccx("ccx 1\ncube a b\ncube b d\ncube d c\ncube c a\n").unwrap();
        let r = validate(&x);
        assert!(r.links_flag_ok && r.closure_ok && r.compatibility_ok);
        assert!(!r.median_ok);
        assert!(r
            .failures
            .iter()
            .any(|d| matches!(d, Defect::UnfilledSquare { .. })));
    }

    #[test]
    fn triangle_has_no_median() {
        let x = parse_ccx("ccx 1\ncube a b\ncube b c\ncube c a\n").unwrap();
        let r = validate(&x);
        assert!(!r.median_ok);
        assert!(r
            .failures
            .iter()
            .any(|d| matches!(d, Defect::MedianCount { medians: 0, .. })));
    }

    #[test]
    fn disconnected_is_rejected() {
        let x = parse_ccx("ccx 1\ncube a b\ncube c d\n").unwrap();
        let r = validate(&x);
        assert!(!r.median_ok);
    }

    #[test]
    fn missing_face_detected() {
        let x = CubeComplex::from_cubes_unclosed([["a", "b", "c", "d"]]).unwrap();
        let r = validate(&x);
        assert!(!r.closure_ok);
    }

    #[test]
    fn squares_meeting_in_two_edges_are_incompatible() {
        // a b c d and a b c e share the corner path b-a-c, which is no face
        let x = parse_ccx("ccx 1\ncube a b c d\ncube a b c e\n").unwrap();
        let r = validate(&x);
        assert!(!r.compatibility_ok);
    }

    #[test]
    fn two_squares_on_one_vertex_set() {
        let x = CubeComplex::from_cubes([["a", "b", "c", "d"], ["a", "d", "b", "c"]]).unwrap();
        let r = validate(&x);
        assert!(!r.compatibility_ok);
    }

    #[test]
    fn parallel_pool_agrees() {
        let x = parse_ccx("ccx 1\ncube a b\ncube b c\ncube c a\n").unwrap();
        assert_eq!(validate(&x), validate_with_jobs(&x, 2));
    }
}
