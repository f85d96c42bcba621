//! Random cubic multigraphs for the randomized verification suites.

use super::{Edge, EdgeEnd, Web};
use rand::seq::SliceRandom;
use rand::Rng;

/// Draw a random cubic multigraph on `n_vertices` vertices (must be even and
/// nonzero) by the configuration model: pair up the `3n` half-edges uniformly
/// at random. Self-loops and parallel edges are allowed; `free_loops` extra
/// circle components are attached. Vertices are `v0..`, edges `e0..`.
pub fn random_cubic_web<R: Rng + ?Sized>(rng: &mut R, n_vertices: usize, free_loops: u32) -> Web {
    assert!(n_vertices > 0 && n_vertices % 2 == 0, "cubic graphs need an even vertex count");
    let mut half_edges: Vec<usize> = (0..n_vertices)
        .flat_map(|v| std::iter::repeat(v).take(3))
        .collect();
    half_edges.shuffle(rng);
    let vertices: Vec<String> = (0..n_vertices).map(|v| format!("v{v}")).collect();
    let edges: Vec<Edge> = half_edges
        .chunks_exact(2)
        .enumerate()
        .map(|(i, pair)| {
            Edge::new(
                format!("e{i}"),
                EdgeEnd::Vertex(format!("v{}", pair[0])),
                EdgeEnd::Vertex(format!("v{}", pair[1])),
            )
        })
        .collect();
    Web::new(vertices, edges, free_loops).expect("configuration model yields a valid cubic web")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_webs_are_cubic_and_closed() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [2usize, 4, 6, 10] {
            let w = random_cubic_web(&mut rng, n, 1);
            assert_eq!(w.vertices().len(), n);
            assert_eq!(w.edges().len(), 3 * n / 2);
            assert_eq!(w.free_loops(), 1);
            assert!(w.is_closed());
        }
    }

    #[test]
    fn generation_is_seed_deterministic() {
        let a = random_cubic_web(&mut ChaCha8Rng::seed_from_u64(42), 8, 0);
        let b = random_cubic_web(&mut ChaCha8Rng::seed_from_u64(42), 8, 0);
        assert_eq!(a, b);
    }
}
