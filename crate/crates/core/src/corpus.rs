//! The shipped web corpus, embedded so that library users and tests do not
//! depend on file-system layout. The same files are installed under `data/`
//! for command-line use.

/// A single circle, no vertices.
pub const CIRCLE: &str = include_str!("../../../data/circle.web");

/// Two vertices joined by three parallel edges.
pub const THETA: &str = include_str!("../../../data/theta.web");

/// Two vertices joined by one edge, each carrying a self-loop.
pub const DUMBBELL: &str = include_str!("../../../data/dumbbell.web");

/// The complete graph on four vertices.
pub const K4: &str = include_str!("../../../data/k4.web");

/// The triangular prism.
pub const PRISM: &str = include_str!("../../../data/prism.web");

/// The 1-skeleton of the dodecahedron: 20 vertices, 30 edges.
pub const DODECAHEDRON: &str = include_str!("../../../data/dodecahedron.web");

/// The octahedral-diagram relation file (generators, exact triangles,
/// commuting faces, composite equalities, and the central square).
pub const OCTAHEDRON_RELS: &str = include_str!("../../../data/octahedron.rels");

/// All corpus webs, with their file names.
pub const NAMED: [(&str, &str); 6] = [
    ("circle.web", CIRCLE),
    ("theta.web", THETA),
    ("dumbbell.web", DUMBBELL),
    ("k4.web", K4),
    ("prism.web", PRISM),
    ("dodecahedron.web", DODECAHEDRON),
];

/// All corpus webs, texts only.
pub const ALL: [&str; 6] = [CIRCLE, THETA, DUMBBELL, K4, PRISM, DODECAHEDRON];
