//! Canonical forms for webs, used to check isomorphism in tests and
//! round-trip verification.
//!
//! This is color-refinement plus individualization with a minimum-signature
//! rule. It is meant for desk-scale webs (a few dozen edges), not as a
//! general graph-isomorphism facility.

use super::Web;
use std::collections::HashMap;

/// A label-independent canonical form. Two closed webs are isomorphic iff
/// their canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    vertices: usize,
    free_loops: u32,
    /// Sorted edge list over canonical vertex numbers; self-loops as (v, v).
    edges: Vec<(usize, usize)>,
}

/// Compute the canonical form of a web (stub ends are not supported).
pub fn canonical_form(web: &Web) -> CanonicalForm {
    let n = web.vertices().len();
    let ix = web.vertex_index();
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut loops: Vec<usize> = vec![0; n];
    let mut plain_edges: Vec<(usize, usize)> = Vec::new();
    for e in web.edges() {
        let a = ix[e.ends[0].vertex().expect("closed web required")];
        let b = ix[e.ends[1].vertex().expect("closed web required")];
        if a == b {
            loops[a] += 1;
        } else {
            neighbors[a].push(b);
            neighbors[b].push(a);
            plain_edges.push((a, b));
        }
    }

    let initial: Vec<usize> = (0..n).map(|v| loops[v]).collect();
    let colors = normalize_colors(&initial);
    let best = search(&Ctx { neighbors, loops: loops.clone(), plain_edges }, colors);
    CanonicalForm { vertices: n, free_loops: web.free_loops(), edges: best }
}

/// True iff the two closed webs are isomorphic as abstract multigraphs with
/// free loops.
pub fn is_isomorphic(a: &Web, b: &Web) -> bool {
    if a.vertices().len() != b.vertices().len()
        || a.edges().len() != b.edges().len()
        || a.free_loops() != b.free_loops()
    {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

struct Ctx {
    neighbors: Vec<Vec<usize>>,
    loops: Vec<usize>,
    plain_edges: Vec<(usize, usize)>,
}

/// Renumber arbitrary color keys to 0..k-1 preserving key order.
fn normalize_colors(keys: &[usize]) -> Vec<usize> {
    let mut sorted: Vec<usize> = keys.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let map: HashMap<usize, usize> = sorted.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
    keys.iter().map(|k| map[k]).collect()
}

/// One pass of color refinement to a fixed point.
fn refine(ctx: &Ctx, mut colors: Vec<usize>) -> Vec<usize> {
    loop {
        let mut keys: Vec<(usize, usize, Vec<usize>)> = Vec::with_capacity(colors.len());
        for v in 0..colors.len() {
            let mut nb: Vec<usize> = ctx.neighbors[v].iter().map(|&w| colors[w]).collect();
            nb.sort_unstable();
            keys.push((colors[v], ctx.loops[v], nb));
        }
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        let map: HashMap<&(usize, usize, Vec<usize>), usize> =
            sorted.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let next: Vec<usize> = keys.iter().map(|k| map[k]).collect();
        if next == colors {
            return next;
        }
        colors = next;
    }
}

fn first_non_singleton(colors: &[usize]) -> Option<usize> {
    let mut count: HashMap<usize, usize> = HashMap::new();
    for &c in colors {
        *count.entry(c).or_insert(0) += 1;
    }
    let mut best: Option<usize> = None;
    for (&c, &k) in &count {
        if k > 1 && best.map_or(true, |b| c < b) {
            best = Some(c);
        }
    }
    best
}

fn signature(ctx: &Ctx, colors: &[usize]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = ctx
        .plain_edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (colors[a], colors[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    for (v, &k) in ctx.loops.iter().enumerate() {
        for _ in 0..k {
            edges.push((colors[v], colors[v]));
        }
    }
    edges.sort_unstable();
    edges
}

fn search(ctx: &Ctx, colors: Vec<usize>) -> Vec<(usize, usize)> {
    let colors = refine(ctx, colors);
    match first_non_singleton(&colors) {
        None => signature(ctx, &colors),
        Some(cell) => {
            let mut best: Option<Vec<(usize, usize)>> = None;
            for v in 0..colors.len() {
                if colors[v] != cell {
                    continue;
                }
                // individualize v: split it below the rest of its cell
                let branched: Vec<usize> =
                    (0..colors.len()).map(|w| 2 * colors[w] + usize::from(w != v)).collect();
                let cand = search(ctx, normalize_colors(&branched));
                if best.as_ref().map_or(true, |b| cand < *b) {
                    best = Some(cand);
                }
            }
            best.expect("non-singleton cell is non-empty")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::web::{Edge, Web};

    #[test]
    fn relabeled_theta_is_isomorphic() {
        let a = Web::parse(corpus::THETA).unwrap();
        let b = Web::parse("v x\nv y\ne a y x\ne b x y\ne c y x").unwrap();
        assert!(is_isomorphic(&a, &b));
    }

    #[test]
    fn theta_is_not_dumbbell() {
        let a = Web::parse(corpus::THETA).unwrap();
        let b = Web::parse(corpus::DUMBBELL).unwrap();
        assert!(!is_isomorphic(&a, &b));
    }

    #[test]
    fn free_loop_counts_distinguish() {
        assert!(!is_isomorphic(&Web::circles(1), &Web::circles(2)));
        assert!(is_isomorphic(&Web::circles(2), &Web::circles(2)));
    }

    #[test]
    fn k4_under_permutation() {
        let a = Web::parse(corpus::K4).unwrap();
        let b = Web::parse(
            "v p\nv q\nv r\nv s\ne 1 s p\ne 2 q s\ne 3 r q\ne 4 p q\ne 5 p r\ne 6 s r",
        )
        .unwrap();
        assert!(is_isomorphic(&a, &b));
    }

    #[test]
    fn prism_vs_k33_style_distinction() {
        // prism and theta-disjoint-theta have different vertex counts; compare
        // two genuinely cubic 6-vertex webs instead: prism vs K_{3,3}.
        let prism = Web::parse(corpus::PRISM).unwrap();
        let k33 = Web::new(
            vec!["a".into(), "b".into(), "c".into(), "x".into(), "y".into(), "z".into()],
            vec![
                Edge::between("1", "a", "x"),
                Edge::between("2", "a", "y"),
                Edge::between("3", "a", "z"),
                Edge::between("4", "b", "x"),
                Edge::between("5", "b", "y"),
                Edge::between("6", "b", "z"),
                Edge::between("7", "c", "x"),
                Edge::between("8", "c", "y"),
                Edge::between("9", "c", "z"),
            ],
            0,
        )
        .unwrap();
        assert!(!is_isomorphic(&prism, &k33));
    }

    #[test]
    fn parallel_edge_multiplicity_matters() {
        // two triangles vs a theta plus ... same V/E profile is hard to get;
        // simplest: dumbbell vs a double-edge-with-loops variant
        let a = Web::parse(corpus::DUMBBELL).unwrap();
        let b = Web::parse("v u\nv v\ne m1 u v\ne m2 u v\ne m3 u v").unwrap(); // theta
        assert!(!is_isomorphic(&a, &b));
    }

    #[test]
    fn dodecahedron_canonical_form_is_stable_under_relabeling() {
        let d = Web::parse(corpus::DODECAHEDRON).unwrap();
        // relabel by reversing vertex declaration order and shuffling edges
        let mut verts: Vec<String> = d.vertices().to_vec();
        verts.reverse();
        let mut edges: Vec<Edge> = d.edges().to_vec();
        edges.reverse();
        let e = Web::new(verts, edges, 0).unwrap();
        assert!(is_isomorphic(&d, &e));
    }
}
