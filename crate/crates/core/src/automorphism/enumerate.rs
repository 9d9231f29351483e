//! Brute-force automorphism groups of small complexes.

use super::Automorphism;
use crate::complex::{CubeComplex, VertexId};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_VERTICES: usize = 30;

/// Every automorphism of `x`, sorted, by backtracking over graph
/// isomorphisms of the 1-skeleton and keeping those that preserve squares.
pub fn automorphism_group(x: &CubeComplex) -> Result<Vec<Automorphism>> {
    let n = x.vertex_count();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::Precondition(format!(
            "automorphism enumeration is limited to {MAX_ENUMERATION_VERTICES} vertices, got {n}"
        )));
    }
    // BFS order, so most vertices have an earlier neighbour
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for comp in x.components() {
        let start = order.len();
        order.push(comp[0]);
        placed[comp[0].index()] = true;
        let mut i = start;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in x.neighbors(u) {
                if !placed[w.index()] {
                    placed[w.index()] = true;
                    order.push(w);
                }
            }
        }
    }
    let mut image = vec![None; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    extend(x, &order, 0, &mut image, &mut used, &mut out);
    out.sort_by(|a, b| a.images().cmp(b.images()));
    Ok(out)
}

fn extend(
    x: &CubeComplex,
    order: &[VertexId],
    depth: usize,
    image: &mut Vec<Option<VertexId>>,
    used: &mut Vec<bool>,
    out: &mut Vec<Automorphism>,
) {
    if depth == order.len() {
        let forward = image.iter().map(|v| v.unwrap()).collect();
        if let Ok(f) = Automorphism::new(x, forward) {
            out.push(f);
        }
        return;
    }
    let v = order[depth];
    let anchor = x.neighbors(v).iter().find_map(|&u| image[u.index()]);
    let candidates: Vec<VertexId> = match anchor {
        Some(fu) => x.neighbors(fu).to_vec(),
        None => x.vertices().collect(),
    };
    for c in candidates {
        if used[c.index()] || x.degree(c) != x.degree(v) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let fu = image[u.index()].unwrap();
            x.are_adjacent(u, v) == x.are_adjacent(fu, c)
        });
        if !consistent {
            continue;
        }
        image[v.index()] = Some(c);
        used[c.index()] = true;
        extend(x, order, depth + 1, image, used, out);
        image[v.index()] = None;
        used[c.index()] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::parse_ccx;

    #[test]
    fn group_orders() {
        let cases = [
            ("ccx 1\ncube a b\n", 2),
            ("ccx 1\ncube a b c d\n", 8),
            ("ccx 1\ncube 000 001 010 011 100 101 110 111\n", 48),
            ("ccx 1\ncube o a\ncube o b\ncube o c\n", 6),
            ("ccx 1\ncube a b\ncube b c\n", 2),
        ];
        for (text, order) in cases {
            let x = parse_ccx(text).unwrap();
            assert_eq!(automorphism_group(&x).unwrap().len(), order, "{text}");
        }
    }

    #[test]
    fn empty_four_cycle_keeps_dihedral_symmetry() {
        let x = parse_ccx("ccx 1\ncube a b\ncube b c\ncube c d\ncube d a\n").unwrap();
        assert_eq!(automorphism_group(&x).unwrap().len(), 8);
    }
}
