//! Exact Tait-coloring counting and the Tutte-relation verifier.
//!
//! A Tait coloring assigns one of three colors to every edge (and every free
//! loop) so that the three half-edge colors at each vertex are pairwise
//! distinct. [`tait_brute`] counts them by exhaustive backtracking and serves
//! as the oracle; [`tait_count`] is the production path, a frontier dynamic
//! program over a greedy low-cut vertex elimination order, run per component.
//! The two must agree everywhere.
//!
//! The Tutte relation `tau(K0) - tau(K1) + tau(L0) - tau(L1) = 0` is *not*
//! used for counting (the L1 web has as many vertices as L0, so it gives no
//! terminating recursion); [`verify_tutte`] checks it as an independent
//! identity. The relation holds for arbitrary abstract webs, planar or not,
//! because it already holds for the local count of picture completions at
//! each fixed boundary coloring — see [`local_tutte_residual`], which the
//! tests verify over all 81 boundary colorings.

use crate::web::{excise_edge_site, Picture, Web, WebError};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Edge-count guard for the brute-force oracle.
pub const BRUTE_EDGE_LIMIT: usize = 18;

/// Default cap on live DP states (3^14).
pub const DEFAULT_STATE_CAP: usize = 4_782_969;

/// Errors from the counting paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TaitError {
    Web(WebError),
    /// Brute force refused: too many edges.
    BruteGuard { edges: usize, limit: usize },
    /// The DP state table grew past the configured cap. This is a resource
    /// refusal, never an approximation.
    StateCap { states: usize, cap: usize },
}

impl std::fmt::Display for TaitError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TaitError::Web(e) => write!(f, "{e}"),
            TaitError::BruteGuard { edges, limit } => {
                write!(f, "brute-force guard: {edges} edges exceeds limit {limit}")
            }
            TaitError::StateCap { states, cap } => {
                write!(f, "state cap exceeded: {states} live states over cap {cap}")
            }
        }
    }
}

impl std::error::Error for TaitError {}

impl From<WebError> for TaitError {
    fn from(e: WebError) -> TaitError {
        TaitError::Web(e)
    }
}

fn three_pow(n: u32) -> BigUint {
    BigUint::from(3u32).pow(n)
}

/// Count Tait colorings by exhaustive backtracking over edge colors.
///
/// Guarded to [`BRUTE_EDGE_LIMIT`] edges. Free loops contribute a factor of
/// three each.
pub fn tait_brute(web: &Web) -> Result<BigUint, TaitError> {
    web.require_closed()?;
    let m = web.edges().len();
    if m > BRUTE_EDGE_LIMIT {
        return Err(TaitError::BruteGuard { edges: m, limit: BRUTE_EDGE_LIMIT });
    }
    // incidence[e] = list of (vertex, other edges at that vertex)
    let ix = web.vertex_index();
    let mut at_vertex: Vec<Vec<usize>> = vec![Vec::new(); web.vertices().len()];
    for (ei, e) in web.edges().iter().enumerate() {
        for end in &e.ends {
            at_vertex[ix[end.vertex().expect("closed")]].push(ei);
        }
    }
    // conflicts[e] = edges sharing a vertex with e (self-conflict for loops)
    let mut conflicts: Vec<Vec<usize>> = vec![Vec::new(); m];
    for slots in &at_vertex {
        for &a in slots {
            for &b in slots {
                if a != b && !conflicts[a].contains(&b) {
                    conflicts[a].push(b);
                }
            }
        }
    }
    let has_self_loop = web.edges().iter().any(|e| e.is_self_loop());
    if has_self_loop {
        // the two half-edges of the loop share a vertex and a color
        return Ok(BigUint::zero());
    }

    let mut colors: Vec<u8> = vec![0; m];
    let mut count: u64 = 0;
    fn rec(e: usize, m: usize, colors: &mut Vec<u8>, conflicts: &[Vec<usize>], count: &mut u64) {
        if e == m {
            *count += 1;
            return;
        }
        for c in 1..=3u8 {
            if conflicts[e].iter().all(|&o| colors[o] != c) {
                colors[e] = c;
                rec(e + 1, m, colors, conflicts, count);
                colors[e] = 0;
            }
        }
    }
    rec(0, m, &mut colors, &conflicts, &mut count);
    Ok(BigUint::from(count) * three_pow(web.free_loops()))
}

/// How a count was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Dp,
    Brute,
}

impl Algorithm {
    pub fn label(self) -> &'static str {
        match self {
            Algorithm::Dp => "dp",
            Algorithm::Brute => "brute",
        }
    }
}

/// Count Tait colorings exactly with the default state cap.
pub fn tait_count(web: &Web) -> Result<BigUint, TaitError> {
    tait_count_capped(web, DEFAULT_STATE_CAP)
}

/// Count Tait colorings exactly: per component, eliminate vertices in a
/// greedy low-cut order and run a dynamic program whose states are colorings
/// of the current cut. Component counts multiply, as does a factor of three
/// per free loop.
pub fn tait_count_capped(web: &Web, state_cap: usize) -> Result<BigUint, TaitError> {
    web.require_closed()?;
    let mut total = BigUint::one();
    for component in web.components()? {
        if component.free_loops() > 0 {
            total *= three_pow(component.free_loops());
            continue;
        }
        total *= component_count(&component, state_cap)?;
        if total.is_zero() {
            // zero times anything is zero, exactly
            return Ok(BigUint::zero());
        }
    }
    Ok(total)
}

fn component_count(web: &Web, state_cap: usize) -> Result<BigUint, TaitError> {
    if web.edges().iter().any(|e| e.is_self_loop()) {
        // two of the three half-edge colors at the loop vertex coincide
        return Ok(BigUint::zero());
    }
    let n = web.vertices().len();
    if n == 0 {
        return Ok(BigUint::one());
    }
    let ix = web.vertex_index();
    let ends: Vec<[usize; 2]> = web
        .edges()
        .iter()
        .map(|e| {
            [
                ix[e.ends[0].vertex().expect("closed")],
                ix[e.ends[1].vertex().expect("closed")],
            ]
        })
        .collect();
    let adj = web.adjacency();

    let order = elimination_order(n, &ends, &adj);

    // frontier: edges with exactly one processed endpoint, in a stable order
    let mut processed = vec![false; n];
    let mut frontier: Vec<usize> = Vec::new();
    // states: frontier colorings -> number of extensions
    let mut states: HashMap<Vec<u8>, BigUint> = HashMap::from([(Vec::new(), BigUint::one())]);

    for &v in &order {
        processed[v] = true;
        // classify v's incidences; a parallel pair to an unprocessed vertex
        // contributes two fresh edges, both listed
        let mut known: Vec<usize> = Vec::new(); // positions in frontier
        let mut fresh: Vec<usize> = Vec::new(); // edge indices
        for &(ei, k) in &adj[v] {
            let other = ends[ei][1 - k];
            if processed[other] {
                let pos = frontier.iter().position(|&f| f == ei).expect("edge in frontier");
                known.push(pos);
            } else {
                fresh.push(ei);
            }
        }
        debug_assert_eq!(known.len() + fresh.len(), 3);

        let keep: Vec<usize> =
            (0..frontier.len()).filter(|p| !known.contains(p)).collect();
        let mut next_frontier: Vec<usize> = keep.iter().map(|&p| frontier[p]).collect();
        next_frontier.extend(fresh.iter().copied());

        let mut next_states: HashMap<Vec<u8>, BigUint> = HashMap::new();
        for (state, ways) in &states {
            let fixed: Vec<u8> = known.iter().map(|&p| state[p]).collect();
            // the known colors meet at v and must already be distinct there
            if fixed.len() == 2 && fixed[0] == fixed[1] {
                continue;
            }
            if fixed.len() == 3 && (fixed[0] == fixed[1] || fixed[0] == fixed[2] || fixed[1] == fixed[2])
            {
                continue;
            }
            // enumerate colors for fresh edges so that all of v's three
            // half-edge colors are pairwise distinct
            let mut choice = vec![0u8; fresh.len()];
            enumerate_fresh(&fixed, &mut choice, 0, &mut |colors: &[u8]| {
                let mut key: Vec<u8> = keep.iter().map(|&p| state[p]).collect();
                key.extend_from_slice(colors);
                let slot = next_states.entry(key).or_insert_with(BigUint::zero);
                *slot += ways;
            });
        }
        frontier = next_frontier;
        states = next_states;
        if states.len() > state_cap {
            return Err(TaitError::StateCap { states: states.len(), cap: state_cap });
        }
        if states.is_empty() {
            return Ok(BigUint::zero());
        }
    }
    debug_assert!(frontier.is_empty());
    debug_assert!(states.len() <= 1);
    Ok(states.remove(&Vec::new()).unwrap_or_else(BigUint::zero))
}

/// Enumerate color tuples for the fresh edges at a vertex such that fixed
/// colors plus fresh colors are pairwise distinct.
fn enumerate_fresh(fixed: &[u8], choice: &mut Vec<u8>, at: usize, emit: &mut impl FnMut(&[u8])) {
    if at == choice.len() {
        emit(choice);
        return;
    }
    'colors: for c in 1..=3u8 {
        if fixed.contains(&c) {
            continue;
        }
        for prev in 0..at {
            if choice[prev] == c {
                continue 'colors;
            }
        }
        choice[at] = c;
        enumerate_fresh(fixed, choice, at + 1, emit);
    }
}

/// Pick a vertex elimination order greedily, minimizing the size of the cut
/// after each step (ties broken by vertex position).
fn elimination_order(n: usize, ends: &[[usize; 2]], adj: &[Vec<(usize, usize)>]) -> Vec<usize> {
    let mut processed = vec![false; n];
    let mut cut: HashMap<usize, ()> = HashMap::new(); // edge -> in frontier
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(usize, usize)> = None; // (resulting cut, vertex)
        for v in 0..n {
            if processed[v] {
                continue;
            }
            let mut delta = cut.len();
            for &(ei, k) in &adj[v] {
                let other = ends[ei][1 - k];
                if processed[other] {
                    delta -= 1;
                } else {
                    delta += 1;
                }
            }
            if best.map_or(true, |(c, _)| delta < c) {
                best = Some((delta, v));
            }
        }
        let (_, v) = best.expect("unprocessed vertex remains");
        processed[v] = true;
        for &(ei, k) in &adj[v] {
            let other = ends[ei][1 - k];
            if cut.remove(&ei).is_none() && !processed[other] {
                cut.insert(ei, ());
            }
        }
        order.push(v);
    }
    order
}

/// The four picture counts at a site and their alternating sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TutteCheck {
    pub k0: BigUint,
    pub k1: BigUint,
    pub l0: BigUint,
    pub l1: BigUint,
}

impl TutteCheck {
    /// `tau(K0) - tau(K1) + tau(L0) - tau(L1)`; the contract is zero.
    pub fn residual(&self) -> BigInt {
        BigInt::from(self.k0.clone()) - BigInt::from(self.k1.clone())
            + BigInt::from(self.l0.clone())
            - BigInt::from(self.l1.clone())
    }
}

/// Excise `edge`, glue in all four pictures, count each, and return the
/// counts; the residual of the relation must vanish.
pub fn verify_tutte(web: &Web, edge: &str) -> Result<TutteCheck, TaitError> {
    verify_tutte_capped(web, edge, DEFAULT_STATE_CAP)
}

pub fn verify_tutte_capped(web: &Web, edge: &str, cap: usize) -> Result<TutteCheck, TaitError> {
    web.require_closed()?;
    let site = excise_edge_site(web, edge)?;
    Ok(TutteCheck {
        k0: tait_count_capped(&site.apply(Picture::K0), cap)?,
        k1: tait_count_capped(&site.apply(Picture::K1), cap)?,
        l0: tait_count_capped(&site.apply(Picture::L0), cap)?,
        l1: tait_count_capped(&site.apply(Picture::L1), cap)?,
    })
}

/// The local form of the Tutte relation at one boundary coloring.
///
/// Fix colors `(a, b, c, d)` on the four strands NW, NE, SW, SE entering the
/// ball. Each picture admits either zero or one completion inside the ball
/// compatible with those colors; the signed count of completions,
/// K0 - K1 + L0 - L1, is returned. It is zero for every boundary coloring,
/// which is what makes the global relation hold for arbitrary abstract webs.
pub fn local_tutte_residual(a: u8, b: u8, c: u8, d: u8) -> i32 {
    let third = |x: u8, y: u8| 6 - x - y; // colors are 1..=3
    let k0 = i32::from(a == b && c == d);
    let k1 = i32::from(a == c && b == d);
    let l0 = i32::from(a != b && c != d && third(a, b) == third(c, d));
    let l1 = i32::from(a != c && b != d && third(a, c) == third(b, d));
    k0 - k1 + l0 - l1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn parse(text: &str) -> Web {
        Web::parse(text).unwrap()
    }

    fn count(text: &str) -> u64 {
        u64::try_from(&tait_count(&parse(text)).unwrap()).unwrap()
    }

    #[test]
    fn circle_counts_three() {
        assert_eq!(tait_brute(&parse(corpus::CIRCLE)).unwrap(), BigUint::from(3u32));
        assert_eq!(count(corpus::CIRCLE), 3);
    }

    #[test]
    fn dumbbell_counts_zero() {
        assert_eq!(tait_brute(&parse(corpus::DUMBBELL)).unwrap(), BigUint::zero());
        assert_eq!(count(corpus::DUMBBELL), 0);
    }

    #[test]
    fn theta_counts_six() {
        assert_eq!(tait_brute(&parse(corpus::THETA)).unwrap(), BigUint::from(6u32));
        assert_eq!(count(corpus::THETA), 6);
    }

    #[test]
    fn k4_counts_six() {
        assert_eq!(tait_brute(&parse(corpus::K4)).unwrap(), BigUint::from(6u32));
        assert_eq!(count(corpus::K4), 6);
    }

    #[test]
    fn two_circles_count_nine() {
        let w = Web::circles(2);
        assert_eq!(tait_count(&w).unwrap(), BigUint::from(9u32));
        assert_eq!(tait_brute(&w).unwrap(), BigUint::from(9u32));
    }

    #[test]
    fn dodecahedron_counts_sixty() {
        assert_eq!(count(corpus::DODECAHEDRON), 60);
    }

    #[test]
    fn brute_guard_refuses_large_webs() {
        let d = parse(corpus::DODECAHEDRON);
        assert_eq!(
            tait_brute(&d).unwrap_err(),
            TaitError::BruteGuard { edges: 30, limit: BRUTE_EDGE_LIMIT }
        );
    }

    #[test]
    fn state_cap_refuses_rather_than_approximates() {
        let d = parse(corpus::DODECAHEDRON);
        match tait_count_capped(&d, 2) {
            Err(TaitError::StateCap { states, cap: 2 }) => assert!(states > 2),
            other => panic!("expected state-cap error, got {other:?}"),
        }
    }

    #[test]
    fn theta_tutte_pictures_and_residual() {
        let t = verify_tutte(&parse(corpus::THETA), "e2").unwrap();
        assert_eq!(t.k0, BigUint::from(3u32));
        assert_eq!(t.k1, BigUint::from(9u32));
        assert_eq!(t.l0, BigUint::from(6u32));
        assert_eq!(t.l1, BigUint::zero());
        assert_eq!(t.residual(), BigInt::zero());
    }

    #[test]
    fn tutte_rejects_self_loop_edges() {
        let err = verify_tutte(&parse(corpus::DUMBBELL), "lu").unwrap_err();
        assert_eq!(err, TaitError::Web(WebError::SelfLoopExcision("lu".into())));
    }

    #[test]
    fn dumbbell_tutte_holds_despite_the_bridge() {
        let t = verify_tutte(&parse(corpus::DUMBBELL), "m").unwrap();
        assert_eq!(t.residual(), BigInt::zero());
        assert_eq!(t.l0, BigUint::zero()); // the rebuilt web still has its bridge
    }

    #[test]
    fn local_identity_all_81_cases() {
        for a in 1..=3u8 {
            for b in 1..=3u8 {
                for c in 1..=3u8 {
                    for d in 1..=3u8 {
                        assert_eq!(
                            local_tutte_residual(a, b, c, d),
                            0,
                            "local residual nonzero at ({a}, {b}, {c}, {d})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn bridge_forces_zero_count() {
        for text in corpus::ALL {
            let w = parse(text);
            if w.bridge_report().unwrap().has_bridge() {
                assert_eq!(tait_count(&w).unwrap(), BigUint::zero());
            }
        }
    }

    #[test]
    fn multiplicative_over_disjoint_union() {
        let theta = parse(corpus::THETA);
        let k4 = parse(corpus::K4);
        let u = theta.disjoint_union(&k4);
        assert_eq!(tait_count(&u).unwrap(), tait_count(&theta).unwrap() * tait_count(&k4).unwrap());
    }

    #[test]
    fn dp_matches_brute_on_corpus() {
        for text in corpus::ALL {
            let w = parse(text);
            if w.edges().len() <= BRUTE_EDGE_LIMIT {
                assert_eq!(tait_count(&w).unwrap(), tait_brute(&w).unwrap());
            }
        }
    }
}
