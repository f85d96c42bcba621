//! Connectivity analysis: components and bridges.

use super::{Edge, Web, WebError};

/// Cut-edge analysis of a closed web.
///
/// `bridges` lists non-loop edges whose removal disconnects their component.
/// Self-loops are never bridges; they are reported separately in
/// `vertex_loops` because a loop at a vertex forces the Tait count of its
/// component to vanish just as a bridge does.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeReport {
    pub bridges: Vec<String>,
    pub vertex_loops: Vec<String>,
}

impl BridgeReport {
    pub fn has_bridge(&self) -> bool {
        !self.bridges.is_empty()
    }
}

impl Web {
    /// Partition a closed web into connected components.
    ///
    /// Components with vertices come first, in order of their smallest vertex
    /// position; each free loop then forms its own single-circle component.
    pub fn components(&self) -> Result<Vec<Web>, WebError> {
        self.require_closed()?;
        let n = self.vertices().len();
        let mut dsu = Dsu::new(n);
        let ix = self.vertex_index();
        for e in self.edges() {
            let a = ix[e.ends[0].vertex().expect("closed web")];
            let b = ix[e.ends[1].vertex().expect("closed web")];
            dsu.union(a, b);
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut root_slot: std::collections::HashMap<usize, usize> = Default::default();
        for i in 0..n {
            let r = dsu.find(i);
            if !root_slot.contains_key(&r) {
                root_slot.insert(r, roots.len());
                roots.push(r);
            }
        }
        let mut verts: Vec<Vec<String>> = vec![Vec::new(); roots.len()];
        for (i, v) in self.vertices().iter().enumerate() {
            verts[root_slot[&dsu.find(i)]].push(v.clone());
        }
        let mut edges: Vec<Vec<Edge>> = vec![Vec::new(); roots.len()];
        for e in self.edges() {
            let a = ix[e.ends[0].vertex().expect("closed web")];
            edges[root_slot[&dsu.find(a)]].push(e.clone());
        }
        let mut out = Vec::with_capacity(roots.len() + self.free_loops() as usize);
        for (v, e) in verts.into_iter().zip(edges) {
            out.push(Web::new(v, e, 0).expect("component of a valid web is valid"));
        }
        for _ in 0..self.free_loops() {
            out.push(Web::circles(1));
        }
        Ok(out)
    }

    /// Find all bridges (cut edges) of a closed web by DFS low-link, plus the
    /// self-loops-at-a-vertex, reported separately.
    pub fn bridge_report(&self) -> Result<BridgeReport, WebError> {
        self.require_closed()?;
        let adj = self.adjacency();
        let n = self.vertices().len();
        let ix = self.vertex_index();
        let end_vertex = |ei: usize, k: usize| -> usize {
            ix[self.edges()[ei].ends[k].vertex().expect("closed web")]
        };

        let mut vertex_loops = Vec::new();
        for e in self.edges() {
            if e.is_self_loop() {
                vertex_loops.push(e.id.clone());
            }
        }

        // Iterative DFS; entry edge index is excluded (not the entry vertex),
        // so parallel edges correctly cancel each other as bridges.
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut bridges = Vec::new();
        let mut timer = 0usize;
        for start in 0..n {
            if disc[start] != usize::MAX {
                continue;
            }
            // stack entries: (vertex, entry edge or MAX, next adjacency slot)
            let mut stack: Vec<(usize, usize, usize)> = vec![(start, usize::MAX, 0)];
            disc[start] = timer;
            low[start] = timer;
            timer += 1;
            while !stack.is_empty() {
                let top = stack.len() - 1;
                let (v, entry, slot) = stack[top];
                if slot < adj[v].len() {
                    stack[top].2 += 1;
                    let (ei, k) = adj[v][slot];
                    if ei == entry || self.edges()[ei].is_self_loop() {
                        continue;
                    }
                    let w = end_vertex(ei, 1 - k);
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, ei, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            bridges.push(self.edges()[entry].id.clone());
                        }
                    }
                }
            }
        }
        bridges.sort();
        Ok(BridgeReport { bridges, vertex_loops })
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Brute-force bridge finding: delete each non-loop edge in turn and test
/// whether its endpoints stay connected. Independent check for
/// [`Web::bridge_report`]; intended for tests on webs of a few dozen edges.
pub fn bridges_by_deletion(web: &Web) -> Result<Vec<String>, WebError> {
    web.require_closed()?;
    let ix = web.vertex_index();
    let n = web.vertices().len();
    let mut out = Vec::new();
    for (skip, e) in web.edges().iter().enumerate() {
        if e.is_self_loop() {
            continue;
        }
        let mut dsu = Dsu::new(n);
        for (ei, f) in web.edges().iter().enumerate() {
            if ei == skip {
                continue;
            }
            let a = ix[f.ends[0].vertex().expect("closed web")];
            let b = ix[f.ends[1].vertex().expect("closed web")];
            dsu.union(a, b);
        }
        let a = ix[e.ends[0].vertex().expect("closed web")];
        let b = ix[e.ends[1].vertex().expect("closed web")];
        if dsu.find(a) != dsu.find(b) {
            out.push(e.id.clone());
        }
    }
    out.sort();
    Ok(out)
}
