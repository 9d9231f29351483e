//! Generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use ccx_core::complex::{validate, CubeComplex, VertexId};
use ccx_core::standard::{path, product, tree};
use ccx_core::wallspace::{cubulate, Wallspace};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All-pairs BFS over the 1-skeleton.
pub fn bfs_all(x: &CubeComplex) -> Vec<Vec<usize>> {
    x.vertices().map(|s| bfs_from(x, s)).collect()
}

pub fn bfs_from(x: &CubeComplex, s: VertexId) -> Vec<usize> {
    let mut d = vec![usize::MAX; x.vertex_count()];
    d[s.index()] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &w in x.neighbors(u) {
            if d[w.index()] == usize::MAX {
                d[w.index()] = d[u.index()] + 1;
                q.push_back(w);
            }
        }
    }
    d
}

pub fn random_parents(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    (1..n).map(|i| rng.gen_range(0..i)).collect()
}

/// Squares `(i, j)` with `j < heights[i]`, heights non-increasing.
pub fn staircase(heights: &[usize]) -> CubeComplex {
    let t = |i: usize, j: usize| format!("{i},{j}");
    let mut recs = Vec::new();
    for (i, &h) in heights.iter().enumerate() {
        for j in 0..h {
            recs.push(vec![t(i, j), t(i, j + 1), t(i + 1, j), t(i + 1, j + 1)]);
        }
    }
    CubeComplex::from_cubes(&recs).unwrap()
}

/// A random wallspace on `points` points with `walls` nontrivial walls.
pub fn random_wallspace(rng: &mut impl Rng, points: usize, walls: usize) -> Wallspace {
    let names: Vec<String> = (0..points).map(|i| format!("p{i}")).collect();
    let mut ws = Vec::new();
    while ws.len() < walls {
        let mask: u32 = rng.gen_range(1..(1u32 << points) - 1);
        let (a, b): (Vec<String>, Vec<String>) = {
            let a = names.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1);
            let b = names.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 0);
            (
                a.map(|(_, s)| s.clone()).collect(),
                b.map(|(_, s)| s.clone()).collect(),
            )
        };
        ws.push((a, b));
    }
    Wallspace::new(&names, &ws).unwrap()
}

/// A random validated cubing with at most `max_vertices` vertices.
pub fn random_cubing(rng: &mut impl Rng, max_vertices: usize) -> CubeComplex {
    loop {
        let x = match rng.gen_range(0..5) {
            0 => {
                let n = rng.gen_range(1..=max_vertices);
                tree(&random_parents(rng, n))
            }
            1 => {
                let a = rng.gen_range(2..=10.min(max_vertices / 2).max(2));
                let b = rng.gen_range(2..=(max_vertices / a).max(2));
                product(
                    &tree(&random_parents(rng, a)),
                    &tree(&random_parents(rng, b)),
                )
            }
            2 => {
                let mut hs: Vec<usize> = (0..rng.gen_range(1..8))
                    .map(|_| rng.gen_range(1..8))
                    .collect();
                hs.sort_unstable_by(|a, b| b.cmp(a));
                staircase(&hs)
            }
            3 => {
                let (p, k) = (rng.gen_range(2..=6), rng.gen_range(1..=7));
                let w = random_wallspace(rng, p, k);
                cubulate(&w).unwrap().complex
            }
            _ => {
                let k = rng.gen_range(2..=4);
                let (l, m) = (rng.gen_range(2..=3), rng.gen_range(2..=4));
                let ab = product(&tree(&random_parents(rng, k)), &path(l));
                product(&ab, &tree(&random_parents(rng, m)))
            }
        };
        if x.vertex_count() <= max_vertices && validate(&x).is_cubing() {
            return x;
        }
    }
}

/// Every walk of `1..=max_len` edges, as vertex lists.
pub fn walks(x: &CubeComplex, max_len: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<VertexId>> = x.vertices().map(|v| vec![v]).collect();
    while let Some(w) = stack.pop() {
        if w.len() > 1 {
            out.push(w.clone());
        }
        if w.len() <= max_len {
            for &n in x.neighbors(*w.last().unwrap()) {
                let mut next = w.clone();
                next.push(n);
                stack.push(next);
            }
        }
    }
    out
}

/// Connected components after deleting the given edges.
pub fn components_without(x: &CubeComplex, cut: &[(VertexId, VertexId)]) -> Vec<usize> {
    let blocked: std::collections::HashSet<(VertexId, VertexId)> =
        cut.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
    let mut comp = vec![usize::MAX; x.vertex_count()];
    let mut next = 0;
    for s in x.vertices() {
        if comp[s.index()] != usize::MAX {
            continue;
        }
        comp[s.index()] = next;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &w in x.neighbors(u) {
                if comp[w.index()] == usize::MAX && !blocked.contains(&(u, w)) {
                    comp[w.index()] = next;
                    q.push_back(w);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Edge classes generated by "opposite in a square", by fixed-point
/// iteration over labels (no union-find).
pub fn wall_labels(x: &CubeComplex) -> HashMap<(VertexId, VertexId), usize> {
    let edges: Vec<(VertexId, VertexId)> = x.edges().collect();
    let mut label: HashMap<(VertexId, VertexId), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let key = |a: VertexId, b: VertexId| if a < b { (a, b) } else { (b, a) };
    let squares: Vec<Vec<VertexId>> = x
        .cubes_of_dim(2)
        .iter()
        .map(|c| c.corners().to_vec())
        .collect();
    loop {
        let mut changed = false;
        for s in &squares {
            // corners in binary order: 0-1 opposite 2-3, 0-2 opposite 1-3
            for (e, f) in [((s[0], s[1]), (s[2], s[3])), ((s[0], s[2]), (s[1], s[3]))] {
                let (ke, kf) = (key(e.0, e.1), key(f.0, f.1));
                let m = label[&ke].min(label[&kf]);
                for k in [ke, kf] {
                    if label[&k] != m {
                        label.insert(k, m);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return label;
        }
    }
}

pub fn shuffle<T>(rng: &mut impl Rng, v: &mut [T]) {
    v.shuffle(rng);
}

/// Tree distance between reduced words: lengths minus twice the common prefix.
pub fn word_distance<T: PartialEq>(u: &[T], v: &[T]) -> usize {
    let common = u.iter().zip(v).take_while(|(a, b)| a == b).count();
    u.len() + v.len() - 2 * common
}

pub fn l1(u: &[i64], v: &[i64]) -> usize {
    u.iter()
        .zip(v)
        .map(|(a, b)| (a - b).unsigned_abs() as usize)
        .sum()
}
