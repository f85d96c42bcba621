//! Skein sites: a web with four labeled stubs, where the five local pictures
//! are glued in.
//!
//! [`excise_edge_site`] removes an edge together with its two endpoint
//! vertices, exposing four stubs labeled NW, NE (the half-edges formerly at
//! the first endpoint, in ascending edge-id order) and SW, SE (those at the
//! second endpoint, same order). [`SkeinSite::apply`] glues a [`Picture`]
//! back in:
//!
//! * `K0` joins NW-NE and SW-SE, `K1` joins NW-SW and NE-SE, and
//!   `K2Abstract` joins NW-SE and NE-SW (the crossing smoothing, with the
//!   crossing sign discarded — this is an abstract reconnection only).
//! * `L0` inserts a bar edge whose top vertex takes NW, NE and whose bottom
//!   vertex takes SW, SE; `L1` is the same with the bar turned (top vertex
//!   takes NW, SW).
//!
//! The NW/NE (and SW/SE) assignment is a convention: swapping NW and NE
//! exchanges the roles of the `K1` and `K2Abstract` pictures, and everything
//! downstream that we verify is invariant under the swap.

use super::{Edge, EdgeEnd, StubRef, Web, WebError};

/// The four stub labels of a skein site, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StubLabel {
    Nw,
    Ne,
    Sw,
    Se,
}

impl StubLabel {
    pub const ALL: [StubLabel; 4] = [StubLabel::Nw, StubLabel::Ne, StubLabel::Sw, StubLabel::Se];

    fn index(self) -> usize {
        match self {
            StubLabel::Nw => 0,
            StubLabel::Ne => 1,
            StubLabel::Sw => 2,
            StubLabel::Se => 3,
        }
    }
}

impl std::fmt::Display for StubLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            StubLabel::Nw => "NW",
            StubLabel::Ne => "NE",
            StubLabel::Sw => "SW",
            StubLabel::Se => "SE",
        };
        f.write_str(s)
    }
}

/// The five local pictures that can fill a site.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Picture {
    K0,
    K1,
    /// Crossing smoothing as an abstract reconnection; no embedding data.
    K2Abstract,
    L0,
    L1,
}

impl Picture {
    pub const ALL: [Picture; 5] =
        [Picture::K0, Picture::K1, Picture::K2Abstract, Picture::L0, Picture::L1];
}

impl std::str::FromStr for Picture {
    type Err = String;

    fn from_str(s: &str) -> Result<Picture, String> {
        match s {
            "K0" | "k0" => Ok(Picture::K0),
            "K1" | "k1" => Ok(Picture::K1),
            "K2" | "k2" => Ok(Picture::K2Abstract),
            "L0" | "l0" => Ok(Picture::L0),
            "L1" | "l1" => Ok(Picture::L1),
            other => Err(format!("unknown picture `{other}` (expected K0, K1, K2, L0, L1)")),
        }
    }
}

/// A ball boundary: a host web with exactly four stubs, labeled bijectively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinSite {
    host: Web,
    /// Stub refs indexed NW, NE, SW, SE.
    labels: [StubRef; 4],
}

impl SkeinSite {
    pub fn new(host: Web, labels: [StubRef; 4]) -> Result<SkeinSite, WebError> {
        let stubs = host.stubs();
        if stubs.len() != 4 {
            return Err(WebError::BadSite { stubs: stubs.len() });
        }
        let mut sorted = labels.to_vec();
        sorted.sort();
        let mut actual = stubs.clone();
        actual.sort();
        if sorted != actual {
            return Err(WebError::BadSite { stubs: stubs.len() });
        }
        Ok(SkeinSite { host, labels })
    }

    /// Label the host's stubs NW, NE, SW, SE in edge-list order. This is the
    /// convention used when a site is read from a file.
    pub fn from_host(host: Web) -> Result<SkeinSite, WebError> {
        let stubs = host.stubs();
        if stubs.len() != 4 {
            return Err(WebError::BadSite { stubs: stubs.len() });
        }
        let labels = [stubs[0].clone(), stubs[1].clone(), stubs[2].clone(), stubs[3].clone()];
        SkeinSite::new(host, labels)
    }

    pub fn host(&self) -> &Web {
        &self.host
    }

    pub fn stub(&self, label: StubLabel) -> &StubRef {
        &self.labels[label.index()]
    }

    /// The same site with the NW and NE labels exchanged.
    pub fn swap_nw_ne(&self) -> SkeinSite {
        let mut labels = self.labels.clone();
        labels.swap(0, 1);
        SkeinSite { host: self.host.clone(), labels }
    }

    /// Glue the picture into the site, producing a closed web.
    pub fn apply(&self, picture: Picture) -> Web {
        let mut g = Gluing::new(self);
        match picture {
            Picture::K0 => {
                g.join(StubLabel::Nw, StubLabel::Ne);
                g.join(StubLabel::Sw, StubLabel::Se);
            }
            Picture::K1 => {
                g.join(StubLabel::Nw, StubLabel::Sw);
                g.join(StubLabel::Ne, StubLabel::Se);
            }
            Picture::K2Abstract => {
                g.join(StubLabel::Nw, StubLabel::Se);
                g.join(StubLabel::Ne, StubLabel::Sw);
            }
            Picture::L0 => g.insert_bar([StubLabel::Nw, StubLabel::Ne], [StubLabel::Sw, StubLabel::Se]),
            Picture::L1 => g.insert_bar([StubLabel::Nw, StubLabel::Sw], [StubLabel::Ne, StubLabel::Se]),
        }
        g.finish()
    }
}

/// Excise a non-loop edge together with its two endpoints, exposing a site.
///
/// The input web is unchanged. The four half-edges formerly incident to the
/// removed vertices become the site's stubs: NW and NE at the edge's first
/// endpoint and SW and SE at its second, each pair ordered by ascending edge
/// id (end index breaks the tie when both stubs come from one self-loop).
pub fn excise_edge_site(web: &Web, edge_id: &str) -> Result<SkeinSite, WebError> {
    let e = web.edge(edge_id).ok_or_else(|| WebError::UnknownEdge(edge_id.to_string()))?;
    if e.has_stub_end() {
        return Err(WebError::StubEdgeExcision(edge_id.to_string()));
    }
    if e.is_self_loop() {
        return Err(WebError::SelfLoopExcision(edge_id.to_string()));
    }
    let u = e.ends[0].vertex().expect("checked").to_string();
    let v = e.ends[1].vertex().expect("checked").to_string();

    let vertices: Vec<String> =
        web.vertices().iter().filter(|x| **x != u && **x != v).cloned().collect();
    let mut edges: Vec<Edge> = Vec::with_capacity(web.edges().len() - 1);
    for f in web.edges() {
        if f.id == edge_id {
            continue;
        }
        let strip = |end: &EdgeEnd| match end {
            EdgeEnd::Vertex(x) if *x == u || *x == v => EdgeEnd::Stub,
            other => other.clone(),
        };
        edges.push(Edge::new(f.id.clone(), strip(&f.ends[0]), strip(&f.ends[1])));
    }

    let stubs_at = |vertex: &str| -> Vec<StubRef> {
        let mut at: Vec<(&str, usize)> = Vec::new();
        for f in web.edges() {
            if f.id == edge_id {
                continue;
            }
            for (k, end) in f.ends.iter().enumerate() {
                if end.vertex() == Some(vertex) {
                    at.push((f.id.as_str(), k));
                }
            }
        }
        at.sort();
        at.into_iter().map(|(id, k)| StubRef { edge: id.to_string(), end: k }).collect()
    };
    let at_u = stubs_at(&u);
    let at_v = stubs_at(&v);
    debug_assert_eq!(at_u.len(), 2);
    debug_assert_eq!(at_v.len(), 2);

    let host = Web::new(vertices, edges, web.free_loops())?;
    SkeinSite::new(host, [at_u[0].clone(), at_u[1].clone(), at_v[0].clone(), at_v[1].clone()])
}

/// Working state for gluing a picture into a site.
struct Gluing {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    free_loops: u32,
    /// Live stub positions by label index; updated as edges merge.
    refs: [StubRef; 4],
}

impl Gluing {
    fn new(site: &SkeinSite) -> Gluing {
        Gluing {
            vertices: site.host.vertices().to_vec(),
            edges: site.host.edges().to_vec(),
            free_loops: site.host.free_loops(),
            refs: site.labels.clone(),
        }
    }

    fn edge_pos(&self, id: &str) -> usize {
        self.edges.iter().position(|e| e.id == id).expect("live stub ref")
    }

    /// Join two stubs into a single strand. Joining the two ends of one edge
    /// closes it into a free loop; otherwise the two edges merge into one,
    /// keeping the first stub's edge id.
    fn join(&mut self, a: StubLabel, b: StubLabel) {
        let ra = self.refs[a.index()].clone();
        let rb = self.refs[b.index()].clone();
        if ra.edge == rb.edge {
            let pos = self.edge_pos(&ra.edge);
            self.edges.remove(pos);
            self.free_loops += 1;
            return;
        }
        let pa = self.edge_pos(&ra.edge);
        let pb = self.edge_pos(&rb.edge);
        let other_a = self.edges[pa].ends[1 - ra.end].clone();
        let other_b = self.edges[pb].ends[1 - rb.end].clone();
        self.edges[pa] = Edge::new(ra.edge.clone(), other_a, other_b);
        self.edges.remove(pb);
        // remap any label still pointing into the merged edges
        for r in self.refs.iter_mut() {
            if r.edge == ra.edge && r.end == 1 - ra.end {
                *r = StubRef { edge: ra.edge.clone(), end: 0 };
            } else if r.edge == rb.edge && r.end == 1 - rb.end {
                *r = StubRef { edge: ra.edge.clone(), end: 1 };
            }
        }
    }

    /// Insert the bar edge of an L-picture: `top` stubs attach to a new top
    /// vertex, `bottom` stubs to a new bottom vertex.
    fn insert_bar(&mut self, top: [StubLabel; 2], bottom: [StubLabel; 2]) {
        let top_id = self.fresh_id("u");
        self.vertices.push(top_id.clone());
        let bottom_id = self.fresh_id("v");
        self.vertices.push(bottom_id.clone());
        let bar_id = self.fresh_id("e");
        for l in top {
            self.attach(l, &top_id);
        }
        for l in bottom {
            self.attach(l, &bottom_id);
        }
        self.edges.push(Edge::between(bar_id, top_id, bottom_id));
    }

    fn attach(&mut self, label: StubLabel, vertex: &str) {
        let r = self.refs[label.index()].clone();
        let pos = self.edge_pos(&r.edge);
        self.edges[pos].ends[r.end] = EdgeEnd::Vertex(vertex.to_string());
    }

    fn fresh_id(&self, base: &str) -> String {
        let taken = |id: &str| {
            self.vertices.iter().any(|v| v == id) || self.edges.iter().any(|e| e.id == id)
        };
        if !taken(base) {
            return base.to_string();
        }
        for i in 0.. {
            let cand = format!("{base}{i}");
            if !taken(&cand) {
                return cand;
            }
        }
        unreachable!()
    }

    fn finish(self) -> Web {
        Web::new(self.vertices, self.edges, self.free_loops)
            .expect("picture gluing preserves web validity")
    }
}
