//! Small named cubings used by tests, demos and the FFI.

use crate::complex::CubeComplex;

fn build(records: Vec<Vec<String>>) -> CubeComplex {
    CubeComplex::from_cubes(&records).expect("standard complexes are well formed")
}

/// A single edge `a - b`.
pub fn edge() -> CubeComplex {
    build(vec![vec!["a".into(), "b".into()]])
}

/// The square `a b c d`, with edges `a-b`, `a-c`, `b-d`, `c-d`.
pub fn square() -> CubeComplex {
    build(vec![["a", "b", "c", "d"].map(String::from).to_vec()])
}

/// The `n`-cube on binary tokens; `cube(3)` has vertices `000 .. 111`.
pub fn cube(n: usize) -> CubeComplex {
    if n == 0 {
        return build(vec![vec!["o".into()]]);
    }
    let corners = (0..1usize << n).map(|i| bits(i, n)).collect();
    build(vec![corners])
}

fn bits(i: usize, n: usize) -> String {
    (0..n)
        .rev()
        .map(|j| if i >> j & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Path with `n >= 1` vertices `p0 .. p{n-1}`.
pub fn path(n: usize) -> CubeComplex {
    assert!(n >= 1);
    if n == 1 {
        return build(vec![vec!["p0".into()]]);
    }
    build(
        (0..n - 1)
            .map(|i| vec![format!("p{i}"), format!("p{}", i + 1)])
            .collect(),
    )
}

/// Star with centre `o` and `k` leaves `l0 ..`.
pub fn star(k: usize) -> CubeComplex {
    if k == 0 {
        return build(vec![vec!["o".into()]]);
    }
    build((0..k).map(|i| vec!["o".into(), format!("l{i}")]).collect())
}

/// Star with three leaves.
pub fn tripod() -> CubeComplex {
    star(3)
}

/// `w x h` squares; vertex `(i, j)` has token `i,j`.
pub fn grid(w: usize, h: usize) -> CubeComplex {
    let t = |i: usize, j: usize| format!("{i},{j}");
    if w == 0 || h == 0 {
        return path_on(
            (0..=w)
                .flat_map(|i| (0..=h).map(move |j| (i, j)))
                .map(|(i, j)| t(i, j)),
        );
    }
    let mut records = Vec::new();
    for i in 0..w {
        for j in 0..h {
            records.push(vec![t(i, j), t(i, j + 1), t(i + 1, j), t(i + 1, j + 1)]);
        }
    }
    build(records)
}

fn path_on(tokens: impl Iterator<Item = String>) -> CubeComplex {
    let toks: Vec<String> = tokens.collect();
    if toks.len() == 1 {
        return build(vec![toks]);
    }
    build(toks.windows(2).map(|w| w.to_vec()).collect())
}

/// The product cubing; vertex `(u, v)` has token `u|v`.
pub fn product(x: &CubeComplex, y: &CubeComplex) -> CubeComplex {
    let mut records = Vec::new();
    for c in x.maximal_cubes() {
        let a = x.cube(c);
        for d in y.maximal_cubes() {
            let b = y.cube(d);
            let mut rec = Vec::with_capacity(a.corners().len() * b.corners().len());
            for &v in b.corners() {
                for &u in a.corners() {
                    rec.push(format!("{}|{}", x.token(u), y.token(v)));
                }
            }
            records.push(rec);
        }
    }
    build(records)
}

/// A tree from a parent array: vertex `i > 0` hangs off `parent[i - 1]`.
/// Tokens are `t0, t1, ...`.
pub fn tree(parent: &[usize]) -> CubeComplex {
    if parent.is_empty() {
        return build(vec![vec!["t0".into()]]);
    }
    build(
        parent
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                assert!(p <= i, "parent must precede child");
                vec![format!("t{p}"), format!("t{}", i + 1)]
            })
            .collect(),
    )
}

/// Looks up a fixture by name: `edge`, `square`, `tripod`, `cube<n>`,
/// `path<n>`, `star<k>`, `grid<w>x<h>`.
pub fn by_name(name: &str) -> Option<CubeComplex> {
    let num = |p: &str| name.strip_prefix(p).and_then(|s| s.parse::<usize>().ok());
    match name {
        "edge" => Some(edge()),
        "square" => Some(square()),
        "tripod" => Some(tripod()),
        _ => {
            if let Some(n) = num("cube").filter(|&n| n <= 10) {
                Some(cube(n))
            } else if let Some(n) = num("path").filter(|&n| n >= 1) {
                Some(path(n))
            } else if let Some(k) = num("star") {
                Some(star(k))
            } else {
                let (w, h) = name.strip_prefix("grid")?.split_once('x')?;
                Some(grid(w.parse().ok()?, h.parse().ok()?))
            }
        }
    }
}
