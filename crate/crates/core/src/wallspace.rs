//! Finite spaces with walls and their cubulation.
//!
//! ```text
//! wsp 1
//! points a b c d
//! wall a b | c d
//! wall a c | b d
//! ```
//!
//! The cubulation has one vertex per consistent orientation of the walls
//! that is reachable from the orientations at the points by single flips.
//! Walls listed twice with the same partition stay distinct; of two such
//! copies, the earlier one is treated as nested inside the later, so they
//! can only be turned away from the least point in order.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::automorphism::Automorphism;
use crate::complex::{CubeComplex, VertexId};
use crate::error::{Error, Result};

pub const WSP_HEADER: &str = "wsp 1";
pub const DEFAULT_WALL_BUDGET: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wallspace {
    points: Vec<String>,
    /// Block membership per wall: `blocks[w][p]` is the block holding point
    /// `p`. Block 0 always holds point 0.
    blocks: Vec<Vec<bool>>,
}

impl Wallspace {
    /// Walls as `(block0, block1)` lists of point names.
    pub fn new<S: AsRef<str>>(points: &[S], walls: &[(Vec<S>, Vec<S>)]) -> Result<Self> {
        let points: Vec<String> = points.iter().map(|p| p.as_ref().to_owned()).collect();
        let mut index = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            if index.insert(p.as_str(), i).is_some() {
                return Err(Error::Wallspace(format!("point `{p}` listed twice")));
            }
        }
        if points.is_empty() {
            return Err(Error::Wallspace("no points".into()));
        }
        let mut blocks = Vec::new();
        for (k, (a, b)) in walls.iter().enumerate() {
            if a.is_empty() || b.is_empty() {
                return Err(Error::Wallspace(format!("wall {k} has an empty block")));
            }
            let mut side: Vec<Option<bool>> = vec![None; points.len()];
            for (block, names) in [(false, a), (true, b)] {
                for name in names {
                    let name = name.as_ref();
                    let &i = index.get(name).ok_or_else(|| {
                        Error::Wallspace(format!("wall {k}: unknown point `{name}`"))
                    })?;
                    if side[i].replace(block).is_some() {
                        return Err(Error::Wallspace(format!(
                            "wall {k}: point `{name}` appears twice"
                        )));
                    }
                }
            }
            let side = side
                .into_iter()
                .enumerate()
                .map(|(i, s)| {
                    s.ok_or_else(|| {
                        Error::Wallspace(format!("wall {k}: point `{}` is not covered", points[i]))
                    })
                })
                .collect::<Result<Vec<bool>>>()?;
            let flip = side[0];
            blocks.push(side.into_iter().map(|s| s != flip).collect());
        }
        Ok(Wallspace { points, blocks })
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn wall_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn point(&self, name: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_owned()))
    }

    /// Block of wall `w` holding point `p`.
    pub fn block_of(&self, w: usize, p: usize) -> bool {
        self.blocks[w][p]
    }

    /// Number of walls separating two points.
    pub fn wall_distance(&self, u: &str, v: &str) -> Result<usize> {
        let (u, v) = (self.point(u)?, self.point(v)?);
        Ok(self.blocks.iter().filter(|b| b[u] != b[v]).count())
    }

    /// Orientation of every wall towards point `p`.
    pub fn principal(&self, p: usize) -> Vec<bool> {
        self.blocks.iter().map(|b| b[p]).collect()
    }

    fn same_partition(&self, i: usize, j: usize) -> bool {
        self.blocks[i] == self.blocks[j]
    }

    /// Whether choosing block `bi` of wall `i` and `bj` of wall `j` is
    /// allowed.
    fn compatible(&self, i: usize, bi: bool, j: usize, bj: bool) -> bool {
        if self.same_partition(i, j) {
            // the earlier copy turns first
            let (early, late) = if i < j { (bi, bj) } else { (bj, bi) };
            return !(!early && late);
        }
        self.blocks[i]
            .iter()
            .zip(&self.blocks[j])
            .any(|(&a, &b)| a == bi && b == bj)
    }

    pub fn is_consistent(&self, o: &[bool]) -> bool {
        (0..o.len()).all(|i| (i + 1..o.len()).all(|j| self.compatible(i, o[i], j, o[j])))
    }
}

/// Parses a WSP document.
pub fn parse_wsp(text: &str) -> Result<Wallspace> {
    let mut header_seen = false;
    let mut points: Option<Vec<String>> = None;
    let mut walls: Vec<(Vec<String>, Vec<String>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let perr = |message: String| Error::Parse { line, message };
        if !header_seen {
            if content.split_whitespace().collect::<Vec<_>>() != ["wsp", "1"] {
                return Err(perr(format!(
                    "expected `{WSP_HEADER}` header, found `{content}`"
                )));
            }
            header_seen = true;
            continue;
        }
        let mut words = content.split_whitespace();
        match words.next() {
            Some("points") => {
                if points.is_some() {
                    return Err(perr("second `points` line".into()));
                }
                points = Some(words.map(str::to_owned).collect());
            }
            Some("wall") => {
                let rest: Vec<&str> = words.collect();
                let bars = rest.iter().filter(|w| **w == "|").count();
                if bars != 1 {
                    return Err(perr("a wall needs exactly one `|`".into()));
                }
                let bar = rest.iter().position(|w| *w == "|").unwrap();
                walls.push((
                    rest[..bar].iter().map(|s| s.to_string()).collect(),
                    rest[bar + 1..].iter().map(|s| s.to_string()).collect(),
                ));
            }
            Some(other) => return Err(perr(format!("unknown directive `{other}`"))),
            None => unreachable!(),
        }
    }
    if !header_seen {
        return Err(Error::Parse {
            line: 1,
            message: format!("missing `{WSP_HEADER}` header"),
        });
    }
    let points = points.ok_or(Error::Parse {
        line: 1,
        message: "missing `points` line".into(),
    })?;
    Wallspace::new(&points, &walls)
}

/// The cubulation together with the embedding of the points.
#[derive(Clone, Debug)]
pub struct Cubulation {
    pub complex: CubeComplex,
    /// Vertex of each point, in point order.
    pub embedding: Vec<VertexId>,
    /// Orientation behind each vertex, in vertex order.
    pub orientations: Vec<Vec<bool>>,
}

/// Bits of an orientation; `o` when there are no walls.
fn orientation_token(o: &[bool]) -> String {
    if o.is_empty() {
        return "o".into();
    }
    o.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

pub fn cubulate(w: &Wallspace) -> Result<Cubulation> {
    cubulate_with_budget(w, DEFAULT_WALL_BUDGET)
}

pub fn cubulate_with_budget(w: &Wallspace, budget: usize) -> Result<Cubulation> {
    let k = w.wall_count();
    if k > budget {
        return Err(Error::BudgetExceeded(budget));
    }
    // BFS over consistent orientations from the principal ones
    let mut seen: BTreeSet<Vec<bool>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<bool>> = VecDeque::new();
    for p in 0..w.points().len() {
        let o = w.principal(p);
        if seen.insert(o.clone()) {
            queue.push_back(o);
        }
    }
    while let Some(o) = queue.pop_front() {
        for i in 0..k {
            let mut next = o.clone();
            next[i] = !next[i];
            if !seen.contains(&next) && w.is_consistent(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }

    // cubes: at each vertex, sets of walls that can be turned from block 0
    // to block 1 in every combination
    let mut records: Vec<Vec<String>> = Vec::new();
    for o in &seen {
        records.push(vec![orientation_token(o)]);
        let up: Vec<usize> = (0..k)
            .filter(|&i| {
                !o[i] && {
                    let mut n = o.clone();
                    n[i] = true;
                    seen.contains(&n)
                }
            })
            .collect();
        let mut stack: Vec<Vec<usize>> = up.iter().map(|&i| vec![i]).collect();
        while let Some(dirs) = stack.pop() {
            let corners: Vec<Vec<bool>> = (0..1usize << dirs.len())
                .map(|mask| {
                    let mut c = o.clone();
                    for (t, &i) in dirs.iter().enumerate() {
                        if mask >> t & 1 == 1 {
                            c[i] = true;
                        }
                    }
                    c
                })
                .collect();
            if !corners.iter().all(|c| seen.contains(c)) {
                continue;
            }
            records.push(corners.iter().map(|c| orientation_token(c)).collect());
            let last = *dirs.last().unwrap();
            for &i in up.iter().filter(|&&i| i > last) {
                let mut grown = dirs.clone();
                grown.push(i);
                stack.push(grown);
            }
        }
    }
    let complex = CubeComplex::from_cubes(&records)?;
    let embedding = (0..w.points().len())
        .map(|p| complex.vertex(&orientation_token(&w.principal(p))))
        .collect::<Result<Vec<_>>>()?;
    // bit strings of equal length sort like the orientations themselves
    let orientations: Vec<Vec<bool>> = seen.into_iter().collect();
    Ok(Cubulation {
        complex,
        embedding,
        orientations,
    })
}

/// Where a point bijection sends each wall, with whether the blocks swap.
/// `map[p]` is the image of point `p`. Copies of one partition are matched
/// in order, or in reverse order when the blocks swap, so that their
/// nesting is respected.
fn wall_image(w: &Wallspace, map: &[usize]) -> Result<Vec<(usize, bool)>> {
    let n = w.points().len();
    let copies = |i: usize| -> Vec<usize> {
        (0..w.wall_count())
            .filter(|&j| w.blocks[j] == w.blocks[i])
            .collect()
    };
    let mut out = Vec::new();
    for i in 0..w.wall_count() {
        // the block of g(p) is the block of p
        let mut img = vec![false; n];
        for p in 0..n {
            img[map[p]] = w.block_of(i, p);
        }
        let flip = img[0];
        let canon: Vec<bool> = img.iter().map(|&b| b != flip).collect();
        let targets: Vec<usize> = (0..w.wall_count())
            .filter(|&j| w.blocks[j] == canon)
            .collect();
        let own = copies(i);
        if targets.len() != own.len() {
            return Err(Error::WallNotPreserved(format!(
                "the image of wall {i} is not a wall with the same multiplicity"
            )));
        }
        let rank = own.iter().position(|&j| j == i).unwrap();
        let j = if flip {
            targets[targets.len() - 1 - rank]
        } else {
            targets[rank]
        };
        out.push((j, flip));
    }
    Ok(out)
}

/// The automorphism of the cubulation induced by a point bijection that
/// permutes the walls.
pub fn extend_automorphism(w: &Wallspace, c: &Cubulation, map: &[usize]) -> Result<Automorphism> {
    let n = w.points().len();
    let mut hit = vec![false; n];
    if map.len() != n
        || map
            .iter()
            .any(|&q| q >= n || std::mem::replace(&mut hit[q], true))
    {
        return Err(Error::NotBijection("point map is not a permutation".into()));
    }
    let walls = wall_image(w, map)?;
    let forward = c
        .orientations
        .iter()
        .map(|o| {
            let mut img = vec![false; o.len()];
            for (i, &(j, flip)) in walls.iter().enumerate() {
                img[j] = o[i] != flip;
            }
            c.complex.vertex(&orientation_token(&img))
        })
        .collect::<Result<Vec<_>>>()?;
    Automorphism::new(&c.complex, forward)
}

/// [`extend_automorphism`] with the point map given by names.
pub fn extend_named<S: AsRef<str>>(
    w: &Wallspace,
    c: &Cubulation,
    pairs: &[(S, S)],
) -> Result<Automorphism> {
    let mut map = vec![usize::MAX; w.points().len()];
    for (a, b) in pairs {
        map[w.point(a.as_ref())?] = w.point(b.as_ref())?;
    }
    extend_automorphism(w, c, &map)
}

/// Embedding as text, one `point -> vertex` line per point.
pub fn emit_embedding(w: &Wallspace, c: &Cubulation) -> String {
    let mut out = String::new();
    for (p, &v) in w.points().iter().zip(&c.embedding) {
        out.push_str(&format!("{p} -> {}\n", c.complex.token(v)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::validate;
    use crate::metric::distance;

    const SQUARE: &str = "wsp 1\npoints a b c d\nwall a b | c d\nwall a c | b d\n";

    #[test]
    fn two_points_one_wall() {
        let w = parse_wsp("wsp 1\npoints a b\nwall a | b\n").unwrap();
        assert_eq!(w.wall_distance("a", "b").unwrap(), 1);
        assert_eq!(w.wall_distance("a", "a").unwrap(), 0);
        let c = cubulate(&w).unwrap();
        assert_eq!(c.complex.vertex_count(), 2);
        assert_eq!(c.complex.edge_count(), 1);
    }

    #[test]
    fn parse_rejections() {
        assert!(matches!(
            parse_wsp("wsp 1\npoints a b\nwall | a b\n"),
            Err(Error::Wallspace(_))
        ));
        assert!(matches!(
            parse_wsp("wsp 1\npoints a b\nwall a | a b\n"),
            Err(Error::Wallspace(_))
        ));
        assert!(matches!(
            parse_wsp("wsp 1\npoints a b c\nwall a | b\n"),
            Err(Error::Wallspace(_))
        ));
        assert!(matches!(
            parse_wsp("wsp 1\npoints a b\nwall a b\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(parse_wsp("points a b\n").is_err());
    }

    #[test]
    fn crossing_walls_give_a_square() {
        let w = parse_wsp(SQUARE).unwrap();
        assert_eq!(w.wall_distance("a", "d").unwrap(), 2);
        let c = cubulate(&w).unwrap();
        assert_eq!(c.complex.vertex_count(), 4);
        assert_eq!(c.complex.count_of_dim(2), 1);
        assert!(validate(&c.complex).is_cubing());
    }

    #[test]
    fn tripod_pattern() {
        let w =
            parse_wsp("wsp 1\npoints a b c\nwall a | b c\nwall b | a c\nwall c | a b\n").unwrap();
        let c = cubulate(&w).unwrap();
        assert_eq!(c.complex.vertex_count(), 4);
        assert_eq!(c.complex.edge_count(), 3);
        assert!(c.complex.vertices().any(|v| c.complex.degree(v) == 3));
    }

    #[test]
    fn duplicate_walls_double_distance() {
        let w = parse_wsp("wsp 1\npoints a b\nwall a | b\nwall b | a\n").unwrap();
        assert_eq!(w.wall_distance("a", "b").unwrap(), 2);
        let c = cubulate(&w).unwrap();
        assert!(validate(&c.complex).is_cubing());
        let (a, b) = (c.embedding[0], c.embedding[1]);
        assert_eq!(distance(&c.complex, a, b).unwrap(), 2);
        assert_eq!(c.complex.vertex_count(), 3);
        let f = extend_named(&w, &c, &[("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(f.fixed_vertices().len(), 1);
    }

    #[test]
    fn swap_across_one_wall_is_the_edge_swap() {
        let w = parse_wsp("wsp 1\npoints a b\nwall a | b\n").unwrap();
        let c = cubulate(&w).unwrap();
        let f = extend_named(&w, &c, &[("a", "b"), ("b", "a")]).unwrap();
        assert!(f.fixed_vertices().is_empty());
        assert_eq!(f.order(), 2);
    }

    #[test]
    fn rotation_of_square_wallspace() {
        // a b / c d laid out as a square: rotation a -> b -> d -> c -> a
        let w = parse_wsp(SQUARE).unwrap();
        let c = cubulate(&w).unwrap();
        let r = extend_named(&w, &c, &[("a", "b"), ("b", "d"), ("d", "c"), ("c", "a")]).unwrap();
        assert_eq!(r.order(), 4);
        assert!(r.fixed_vertices().is_empty());
    }

    #[test]
    fn map_breaking_walls_is_rejected() {
        let w = parse_wsp("wsp 1\npoints a b c\nwall a | b c\n").unwrap();
        let c = cubulate(&w).unwrap();
        let err = extend_named(&w, &c, &[("a", "b"), ("b", "a"), ("c", "c")]).unwrap_err();
        assert!(matches!(err, Error::WallNotPreserved(_)));
    }
}
