//! Webs: trivalent multigraphs with free loop components.
//!
//! A [`Web`] is an abstract trivalent multigraph. Parallel edges and
//! self-loops are allowed, and vertexless circle components are tracked by an
//! explicit `free_loops` counter rather than by phantom degree-2 vertices, so
//! the trivalence invariant holds unconditionally. An edge end may also be a
//! dangling *stub*; stubs only occur transiently during skein-site surgery
//! (see [`site`]) and in site files.
//!
//! The text format is line oriented:
//!
//! ```text
//! # comment
//! v <id>            declare a vertex
//! e <id> <a> <b>    declare an edge between vertex ids a and b
//!                   ("-" marks a stub end; only meaningful in site files)
//! loop <count>      add <count> free loop components
//! ```

mod analysis;
mod iso;
mod random;
pub mod site;

pub use analysis::{bridges_by_deletion, BridgeReport};
pub use iso::{canonical_form, is_isomorphic};
pub use random::random_cubic_web;
pub use site::{excise_edge_site, Picture, SkeinSite, StubLabel};

use std::collections::HashMap;
use std::fmt;

/// One end of an edge: attached to a vertex, or a dangling stub.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EdgeEnd {
    Vertex(String),
    Stub,
}

impl EdgeEnd {
    pub fn vertex(&self) -> Option<&str> {
        match self {
            EdgeEnd::Vertex(v) => Some(v),
            EdgeEnd::Stub => None,
        }
    }

    pub fn is_stub(&self) -> bool {
        matches!(self, EdgeEnd::Stub)
    }
}

/// An edge with an identifier and two (ordered) ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub ends: [EdgeEnd; 2],
}

impl Edge {
    pub fn new(id: impl Into<String>, a: EdgeEnd, b: EdgeEnd) -> Self {
        Edge { id: id.into(), ends: [a, b] }
    }

    pub fn between(id: impl Into<String>, a: impl Into<String>, b: impl Into<String>) -> Self {
        Edge::new(id, EdgeEnd::Vertex(a.into()), EdgeEnd::Vertex(b.into()))
    }

    /// True if both ends are attached to the same vertex.
    pub fn is_self_loop(&self) -> bool {
        match (&self.ends[0], &self.ends[1]) {
            (EdgeEnd::Vertex(a), EdgeEnd::Vertex(b)) => a == b,
            _ => false,
        }
    }

    pub fn has_stub_end(&self) -> bool {
        self.ends[0].is_stub() || self.ends[1].is_stub()
    }
}

/// A reference to one stub end: edge id plus end index (0 or 1).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StubRef {
    pub edge: String,
    pub end: usize,
}

/// Errors from web construction, parsing and surgery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WebError {
    /// Malformed input text; line and column are 1-based.
    Syntax { line: usize, col: usize, msg: String },
    DuplicateId(String),
    UnknownVertex { edge: String, vertex: String },
    /// A vertex with a number of incidences other than three.
    Trivalence { vertex: String, degree: usize },
    /// Operation requires a closed web but stubs are present.
    NotClosed { stubs: usize },
    UnknownEdge(String),
    /// Site excision requires an edge joining two distinct vertices.
    SelfLoopExcision(String),
    StubEdgeExcision(String),
    /// A site must have exactly four stubs.
    BadSite { stubs: usize },
}

impl fmt::Display for WebError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WebError::Syntax { line, col, msg } => {
                write!(f, "syntax error at line {line}, column {col}: {msg}")
            }
            WebError::DuplicateId(id) => write!(f, "duplicate identifier `{id}`"),
            WebError::UnknownVertex { edge, vertex } => {
                write!(f, "edge `{edge}` references undeclared vertex `{vertex}`")
            }
            WebError::Trivalence { vertex, degree } => {
                write!(f, "vertex `{vertex}` has {degree} incidences, expected 3")
            }
            WebError::NotClosed { stubs } => {
                write!(f, "web is not closed: {stubs} stub end(s) present")
            }
            WebError::UnknownEdge(id) => write!(f, "no edge with id `{id}`"),
            WebError::SelfLoopExcision(id) => {
                write!(f, "edge `{id}` is a self-loop; site excision needs two distinct endpoints")
            }
            WebError::StubEdgeExcision(id) => {
                write!(f, "edge `{id}` has a stub end and cannot be excised")
            }
            WebError::BadSite { stubs } => {
                write!(f, "a skein site needs exactly 4 stubs, found {stubs}")
            }
        }
    }
}

impl std::error::Error for WebError {}

/// A trivalent multigraph with free loop components and (possibly) stub ends.
///
/// Invariants, enforced at construction: vertex and edge ids are unique, every
/// vertex end of an edge refers to a declared vertex, and every vertex has
/// exactly three incidences (a self-loop contributes two). Immutable after
/// construction; all operations return new values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Web {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    free_loops: u32,
}

impl Web {
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>, free_loops: u32) -> Result<Web, WebError> {
        let mut seen: HashMap<&str, ()> = HashMap::new();
        for v in &vertices {
            if seen.insert(v.as_str(), ()).is_some() {
                return Err(WebError::DuplicateId(v.clone()));
            }
        }
        let mut degree: HashMap<&str, usize> = vertices.iter().map(|v| (v.as_str(), 0)).collect();
        let mut edge_ids: HashMap<&str, ()> = HashMap::new();
        for e in &edges {
            if seen.contains_key(e.id.as_str()) || edge_ids.insert(e.id.as_str(), ()).is_some() {
                return Err(WebError::DuplicateId(e.id.clone()));
            }
            for end in &e.ends {
                if let EdgeEnd::Vertex(v) = end {
                    match degree.get_mut(v.as_str()) {
                        Some(d) => *d += 1,
                        None => {
                            return Err(WebError::UnknownVertex {
                                edge: e.id.clone(),
                                vertex: v.clone(),
                            })
                        }
                    }
                }
            }
        }
        for v in &vertices {
            let d = degree[v.as_str()];
            if d != 3 {
                return Err(WebError::Trivalence { vertex: v.clone(), degree: d });
            }
        }
        Ok(Web { vertices, edges, free_loops })
    }

    /// The web consisting of `n` disjoint circles.
    pub fn circles(n: u32) -> Web {
        Web { vertices: Vec::new(), edges: Vec::new(), free_loops: n }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    /// Stub ends in edge-list order.
    pub fn stubs(&self) -> Vec<StubRef> {
        let mut out = Vec::new();
        for e in &self.edges {
            for (i, end) in e.ends.iter().enumerate() {
                if end.is_stub() {
                    out.push(StubRef { edge: e.id.clone(), end: i });
                }
            }
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        self.edges.iter().all(|e| !e.has_stub_end())
    }

    pub fn require_closed(&self) -> Result<(), WebError> {
        let stubs = self.stubs().len();
        if stubs == 0 {
            Ok(())
        } else {
            Err(WebError::NotClosed { stubs })
        }
    }

    /// Parse the line-oriented text format.
    ///
    /// Vertices may be referenced before they are declared; resolution is a
    /// second pass. Reported positions are 1-based.
    pub fn parse(text: &str) -> Result<Web, WebError> {
        let mut vertices: Vec<String> = Vec::new();
        let mut edges: Vec<Edge> = Vec::new();
        let mut free_loops: u32 = 0;

        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            };
            let mut toks = tokenize(content);
            let Some((kw, kw_col)) = toks.next() else { continue };
            match kw {
                "v" => {
                    let (id, _) = expect_token(&mut toks, line, "vertex id")?;
                    check_id(id, line, kw_col)?;
                    reject_extra(&mut toks, line)?;
                    vertices.push(id.to_string());
                }
                "e" => {
                    let (id, idc) = expect_token(&mut toks, line, "edge id")?;
                    check_id(id, line, idc)?;
                    let (a, _) = expect_token(&mut toks, line, "first endpoint")?;
                    let (b, _) = expect_token(&mut toks, line, "second endpoint")?;
                    reject_extra(&mut toks, line)?;
                    let parse_end = |t: &str| {
                        if t == "-" {
                            EdgeEnd::Stub
                        } else {
                            EdgeEnd::Vertex(t.to_string())
                        }
                    };
                    edges.push(Edge::new(id, parse_end(a), parse_end(b)));
                }
                "loop" => {
                    let (n, nc) = expect_token(&mut toks, line, "loop count")?;
                    reject_extra(&mut toks, line)?;
                    let n: u32 = n.parse().map_err(|_| WebError::Syntax {
                        line,
                        col: nc,
                        msg: format!("invalid loop count `{n}`"),
                    })?;
                    free_loops += n;
                }
                other => {
                    return Err(WebError::Syntax {
                        line,
                        col: kw_col,
                        msg: format!("unknown directive `{other}` (expected v, e, or loop)"),
                    })
                }
            }
        }

        Web::new(vertices, edges, free_loops)
    }

    /// Render in the text format; `parse(to_text(w)) == w`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str("v ");
            out.push_str(v);
            out.push('\n');
        }
        for e in &self.edges {
            out.push_str("e ");
            out.push_str(&e.id);
            for end in &e.ends {
                out.push(' ');
                match end {
                    EdgeEnd::Vertex(v) => out.push_str(v),
                    EdgeEnd::Stub => out.push('-'),
                }
            }
            out.push('\n');
        }
        if self.free_loops > 0 {
            out.push_str(&format!("loop {}\n", self.free_loops));
        }
        out
    }

    /// Disjoint union. Identifiers of `other` are kept when free and
    /// deterministically primed (`id'`, `id''`, ...) on collision.
    pub fn disjoint_union(&self, other: &Web) -> Web {
        let mut taken: std::collections::HashSet<String> = self
            .vertices
            .iter()
            .cloned()
            .chain(self.edges.iter().map(|e| e.id.clone()))
            .collect();
        let mut rename: HashMap<&str, String> = HashMap::new();
        let fresh = |id: &str, taken: &mut std::collections::HashSet<String>| -> String {
            let mut cand = id.to_string();
            while taken.contains(&cand) {
                cand.push('\'');
            }
            taken.insert(cand.clone());
            cand
        };
        let mut vertices = self.vertices.clone();
        for v in &other.vertices {
            let nv = fresh(v, &mut taken);
            rename.insert(v.as_str(), nv.clone());
            vertices.push(nv);
        }
        let mut edges = self.edges.clone();
        for e in &other.edges {
            let map_end = |end: &EdgeEnd| match end {
                EdgeEnd::Vertex(v) => EdgeEnd::Vertex(rename[v.as_str()].clone()),
                EdgeEnd::Stub => EdgeEnd::Stub,
            };
            let id = fresh(&e.id, &mut taken);
            edges.push(Edge::new(id, map_end(&e.ends[0]), map_end(&e.ends[1])));
        }
        Web {
            vertices,
            edges,
            free_loops: self.free_loops + other.free_loops,
        }
    }

    /// Index of a vertex id, for internal adjacency computations.
    pub(crate) fn vertex_index(&self) -> HashMap<&str, usize> {
        self.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect()
    }

    /// Adjacency as `adj[v] = [(edge index, end index)]` in edge order.
    pub(crate) fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let ix = self.vertex_index();
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (ei, e) in self.edges.iter().enumerate() {
            for (k, end) in e.ends.iter().enumerate() {
                if let EdgeEnd::Vertex(v) = end {
                    adj[ix[v.as_str()]].push((ei, k));
                }
            }
        }
        adj
    }
}

// split_whitespace does not report offsets, so tokens are split by hand
fn tokenize(line: &str) -> TokenIter<'_> {
    TokenIter { line, pos: 0 }
}

struct TokenIter<'a> {
    line: &'a str,
    pos: usize,
}

impl<'a> Iterator for TokenIter<'a> {
    type Item = (&'a str, usize);

    fn next(&mut self) -> Option<(&'a str, usize)> {
        let rest = &self.line[self.pos..];
        let start = rest.find(|c: char| !c.is_whitespace())?;
        let abs_start = self.pos + start;
        let after = &self.line[abs_start..];
        let len = after.find(char::is_whitespace).unwrap_or(after.len());
        self.pos = abs_start + len;
        Some((&self.line[abs_start..abs_start + len], abs_start + 1))
    }
}

fn expect_token<'a>(
    toks: &mut TokenIter<'a>,
    line: usize,
    what: &str,
) -> Result<(&'a str, usize), WebError> {
    toks.next().ok_or_else(|| WebError::Syntax {
        line,
        col: 1,
        msg: format!("missing {what}"),
    })
}

fn reject_extra(toks: &mut TokenIter<'_>, line: usize) -> Result<(), WebError> {
    if let Some((t, col)) = toks.next() {
        Err(WebError::Syntax { line, col, msg: format!("unexpected token `{t}`") })
    } else {
        Ok(())
    }
}

fn check_id(id: &str, line: usize, col: usize) -> Result<(), WebError> {
    if id == "-" {
        return Err(WebError::Syntax {
            line,
            col,
            msg: "`-` is reserved for stub ends and cannot be an identifier".into(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_circle() {
        let w = Web::parse("loop 1").unwrap();
        assert_eq!(w.free_loops(), 1);
        assert!(w.vertices().is_empty());
        assert!(w.is_closed());
    }

    #[test]
    fn parse_theta() {
        let text = "v u\nv v\ne e1 u v\ne e2 u v\ne e3 u v\n";
        let w = Web::parse(text).unwrap();
        assert_eq!(w.vertices().len(), 2);
        assert_eq!(w.edges().len(), 3);
        assert!(w.is_closed());
    }

    #[test]
    fn parse_rejects_degree_two_vertex() {
        let text = "v a\nv b\ne e1 a b\ne e2 a b\ne x b b"; // a has degree 2
        match Web::parse(text) {
            Err(WebError::Trivalence { vertex, degree }) => {
                assert_eq!(vertex, "a");
                assert_eq!(degree, 2);
            }
            other => panic!("expected trivalence error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_duplicate_id() {
        let err = Web::parse("v a\nv a").unwrap_err();
        assert_eq!(err, WebError::DuplicateId("a".into()));
    }

    #[test]
    fn parse_reports_line_and_column() {
        let err = Web::parse("loop 1\n  frob x").unwrap_err();
        match err {
            WebError::Syntax { line, col, .. } => {
                assert_eq!(line, 2);
                assert_eq!(col, 3);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_unknown_vertex() {
        let err = Web::parse("v u\ne e1 u w\ne e2 u u").unwrap_err();
        assert_eq!(err, WebError::UnknownVertex { edge: "e1".into(), vertex: "w".into() });
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let w = Web::parse("# a circle\n\nloop 1  # trailing\n").unwrap();
        assert_eq!(w.free_loops(), 1);
    }

    #[test]
    fn text_round_trip_is_identity() {
        let text = "v u\nv v\ne e1 u v\ne e2 u v\ne e3 u v\nloop 2\n";
        let w = Web::parse(text).unwrap();
        let again = Web::parse(&w.to_text()).unwrap();
        assert_eq!(w, again);
    }

    #[test]
    fn stub_ends_parse_in_site_files() {
        let w = Web::parse("e e1 - -\ne e2 - -").unwrap();
        assert_eq!(w.stubs().len(), 4);
        assert!(!w.is_closed());
        assert!(w.require_closed().is_err());
    }

    #[test]
    fn disjoint_union_renames_collisions() {
        let theta = Web::parse("v u\nv v\ne e1 u v\ne e2 u v\ne e3 u v").unwrap();
        let u = theta.disjoint_union(&theta);
        assert_eq!(u.vertices().len(), 4);
        assert_eq!(u.edges().len(), 6);
        assert!(u.vertices().contains(&"u'".to_string()));
        assert!(u.edge("e1'").is_some());
    }
}
