//! The follower-set graph.
//!
//! Vertices are pairs `[j, k]`: the lengths of the longest suffixes of a word
//! that are prefixes of `a` and `b` respectively. From `[j, k]` the outgoing
//! labels are exactly `a_{j+1} ..= b_{k+1}`:
//!
//! * `a_{j+1} == b_{k+1}`: one edge to `[j+1, k+1]`;
//! * otherwise label `a_{j+1}` goes to `[j+1, 0]`, label `b_{k+1}` to
//!   `[0, k+1]`, and every label strictly between them to `[0, 0]`.
//!
//! A path from `[0, 0]` exists for a word exactly when the word is admissible,
//! and its endpoint is `[k1(w), k2(w)]`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expansion::{AbShift, Bounds};
use crate::word::{Digit, Word};

/// Graph vertex `[j, k]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Vertex {
    pub j: u32,
    pub k: u32,
}

impl Vertex {
    pub const ORIGIN: Vertex = Vertex { j: 0, k: 0 };

    pub const fn new(j: u32, k: u32) -> Self {
        Vertex { j, k }
    }

    pub fn is_origin(self) -> bool {
        self == Vertex::ORIGIN
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.j, self.k)
    }
}

/// Outgoing edges of `v`, labels ascending. `bounds` must hold at least
/// `max(j, k) + 1` digits.
pub fn successors(bounds: &Bounds, v: Vertex) -> Vec<(Digit, Vertex)> {
    let lo = bounds.a(v.j as usize + 1);
    let hi = bounds.b(v.k as usize + 1);
    let mut out = Vec::new();
    if lo == hi {
        out.push((lo, Vertex::new(v.j + 1, v.k + 1)));
    } else if lo < hi {
        out.push((lo, Vertex::new(v.j + 1, 0)));
        for c in lo + 1..hi {
            out.push((c, Vertex::ORIGIN));
        }
        out.push((hi, Vertex::new(0, v.k + 1)));
    }
    out
}

/// Target of the edge labelled `c` out of `v`, if any.
#[inline]
pub fn step(bounds: &Bounds, v: Vertex, c: Digit) -> Option<Vertex> {
    let lo = bounds.a(v.j as usize + 1);
    let hi = bounds.b(v.k as usize + 1);
    if c < lo || c > hi {
        None
    } else if lo == hi {
        Some(Vertex::new(v.j + 1, v.k + 1))
    } else if c == lo {
        Some(Vertex::new(v.j + 1, 0))
    } else if c == hi {
        Some(Vertex::new(0, v.k + 1))
    } else {
        Some(Vertex::ORIGIN)
    }
}

pub(crate) const NO_EDGE: u32 = u32::MAX;

/// The graph truncated to vertices within `depth` edges of `[0, 0]`.
///
/// Out-edges are stored only for vertices at distance `< depth`, so every
/// path of length `<= depth` from the origin is represented.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    depth: usize,
    lambda: Digit,
    vertices: Vec<Vertex>,
    index: HashMap<Vertex, u32>,
    dist: Vec<u32>,
    trans: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub depth: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Out-degree to number of vertices with that out-degree.
    pub out_degree_histogram: BTreeMap<usize, usize>,
}

impl LabeledGraph {
    /// Breadth-first closure of `[0, 0]` under the edge rules, `depth` levels deep.
    pub fn build(shift: &AbShift, depth: usize) -> Self {
        let bounds = shift.bounds(depth + 1);
        Self::from_bounds(&bounds, depth)
    }

    pub fn from_bounds(bounds: &Bounds, depth: usize) -> Self {
        assert!(bounds.len() > depth, "bounds too short for depth {depth}");
        let width = bounds.lambda() as usize + 1;
        let mut g = LabeledGraph {
            depth,
            lambda: bounds.lambda(),
            vertices: vec![Vertex::ORIGIN],
            index: HashMap::from([(Vertex::ORIGIN, 0)]),
            dist: vec![0],
            trans: vec![NO_EDGE; width],
        };
        let mut queue = VecDeque::from([0u32]);
        while let Some(id) = queue.pop_front() {
            let d = g.dist[id as usize];
            if d as usize >= depth {
                continue;
            }
            let v = g.vertices[id as usize];
            for (c, t) in successors(bounds, v) {
                let tid = match g.index.get(&t) {
                    Some(&tid) => tid,
                    None => {
                        let tid = g.vertices.len() as u32;
                        g.vertices.push(t);
                        g.index.insert(t, tid);
                        g.dist.push(d + 1);
                        g.trans.extend(std::iter::repeat_n(NO_EDGE, width));
                        queue.push_back(tid);
                        tid
                    }
                };
                let slot = &mut g.trans[id as usize * width + c as usize];
                debug_assert_eq!(*slot, NO_EDGE, "two edges with label {c} out of {v}");
                *slot = tid;
            }
        }
        g
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn lambda(&self) -> Digit {
        self.lambda
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, id: u32) -> Vertex {
        self.vertices[id as usize]
    }

    pub fn id_of(&self, v: Vertex) -> Option<u32> {
        self.index.get(&v).copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.index.contains_key(&v)
    }

    /// BFS distance of a stored vertex from the origin.
    pub fn distance(&self, v: Vertex) -> Option<usize> {
        self.id_of(v).map(|id| self.dist[id as usize] as usize)
    }

    #[inline]
    pub(crate) fn width(&self) -> usize {
        self.lambda as usize + 1
    }

    /// Target id of the edge labelled `c` out of vertex id `from`.
    #[inline]
    pub fn target(&self, from: u32, c: Digit) -> Option<u32> {
        if c > self.lambda {
            return None;
        }
        let t = self.trans[from as usize * self.width() + c as usize];
        (t != NO_EDGE).then_some(t)
    }

    /// Outgoing edges of a stored vertex, labels ascending.
    pub fn out_edges(&self, v: Vertex) -> Vec<(Digit, Vertex)> {
        let Some(id) = self.id_of(v) else {
            return Vec::new();
        };
        (0..=self.lambda)
            .filter_map(|c| self.target(id, c).map(|t| (c, self.vertex(t))))
            .collect()
    }

    /// All edges sorted by `(source, label)`.
    pub fn edges(&self) -> Vec<(Vertex, Digit, Vertex)> {
        let mut out: Vec<_> = self
            .vertices
            .iter()
            .flat_map(|&v| self.out_edges(v).into_iter().map(move |(c, t)| (v, c, t)))
            .collect();
        out.sort();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.trans.iter().filter(|&&t| t != NO_EDGE).count()
    }

    fn check_len(&self, w: &[Digit]) -> Result<()> {
        if w.len() > self.depth {
            Err(Error::DepthExceeded {
                len: w.len(),
                depth: self.depth,
            })
        } else {
            Ok(())
        }
    }

    /// Final vertex id of the path labelled `w` from the origin, with no length check.
    #[inline]
    pub(crate) fn run_from(&self, start: u32, w: &[Digit]) -> Option<u32> {
        w.iter().try_fold(start, |cur, &c| self.target(cur, c))
    }

    /// Vertex sequence of the path labelled `w` starting at `[0, 0]`.
    pub fn walk(&self, w: &[Digit]) -> Result<Option<Vec<Vertex>>> {
        self.check_len(w)?;
        let mut path = Vec::with_capacity(w.len() + 1);
        path.push(Vertex::ORIGIN);
        let mut cur = 0u32;
        for &c in w {
            match self.target(cur, c) {
                Some(t) => {
                    cur = t;
                    path.push(self.vertex(t));
                }
                None => return Ok(None),
            }
        }
        Ok(Some(path))
    }

    /// Endpoint of the path labelled `w`, if the path exists.
    pub fn endpoint(&self, w: &[Digit]) -> Result<Option<Vertex>> {
        self.check_len(w)?;
        Ok(self.run_from(0, w).map(|id| self.vertex(id)))
    }

    pub fn accepts(&self, w: &[Digit]) -> Result<bool> {
        self.check_len(w)?;
        Ok(self.run_from(0, w).is_some())
    }

    /// Depth-first traversal of all labelled paths of length exactly `n` from
    /// the origin, in lexicographic order of labels. The callback receives the
    /// word and the id of its final vertex.
    pub fn for_each_path<F: FnMut(&[Digit], u32)>(&self, n: usize, mut f: F) -> Result<()> {
        if n > self.depth {
            return Err(Error::DepthExceeded {
                len: n,
                depth: self.depth,
            });
        }
        let mut word: Vec<Digit> = Vec::with_capacity(n);
        let mut states: Vec<u32> = vec![0];
        self.dfs(n, &mut word, &mut states, &mut f);
        Ok(())
    }

    fn dfs<F: FnMut(&[Digit], u32)>(
        &self,
        n: usize,
        word: &mut Vec<Digit>,
        states: &mut Vec<u32>,
        f: &mut F,
    ) {
        let cur = *states.last().unwrap();
        if word.len() == n {
            f(word, cur);
            return;
        }
        for c in 0..=self.lambda {
            if let Some(t) = self.target(cur, c) {
                word.push(c);
                states.push(t);
                self.dfs(n, word, states, f);
                states.pop();
                word.pop();
            }
        }
    }

    pub fn stats(&self) -> GraphStats {
        let mut hist = BTreeMap::new();
        for id in 0..self.vertices.len() as u32 {
            let deg = (0..=self.lambda)
                .filter(|&c| self.target(id, c).is_some())
                .count();
            *hist.entry(deg).or_insert(0) += 1;
        }
        GraphStats {
            depth: self.depth,
            vertex_count: self.vertex_count(),
            edge_count: self.edge_count(),
            out_degree_histogram: hist,
        }
    }

    /// Deterministic Graphviz rendering: vertices and edges sorted by
    /// `(j, k)` and then label.
    pub fn export_dot(&self) -> String {
        let mut vs = self.vertices.clone();
        vs.sort();
        let mut s = String::from("digraph follower_graph {\n");
        for v in &vs {
            let _ = writeln!(s, "  \"{v}\";");
        }
        for (from, c, to) in self.edges() {
            let _ = writeln!(s, "  \"{from}\" -> \"{to}\" [label=\"{c}\"];");
        }
        s.push_str("}\n");
        s
    }
}

fn parse_vertex(t: &str) -> Result<Vertex> {
    let inner = t
        .trim()
        .trim_matches('"')
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("bad vertex {t:?}")))?;
    let (j, k) = inner
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("bad vertex {t:?}")))?;
    let num = |x: &str| {
        x.trim()
            .parse::<u32>()
            .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
    };
    Ok(Vertex::new(num(j)?, num(k)?))
}

/// Reads back the edge list of a DOT document produced by [`LabeledGraph::export_dot`].
pub fn parse_dot_edges(dot: &str) -> Result<Vec<(Vertex, Digit, Vertex)>> {
    let mut edges = Vec::new();
    for line in dot.lines() {
        let Some((lhs, rest)) = line.split_once("->") else {
            continue;
        };
        let (rhs, attrs) = rest
            .split_once("[label=\"")
            .ok_or_else(|| Error::Parse(format!("edge without label: {line:?}")))?;
        let label = attrs
            .split_once('"')
            .map(|(l, _)| l)
            .ok_or_else(|| Error::Parse(format!("edge without label: {line:?}")))?;
        let c = label
            .parse::<Digit>()
            .map_err(|e| Error::Parse(format!("{line:?}: {e}")))?;
        edges.push((parse_vertex(lhs)?, c, parse_vertex(rhs)?));
    }
    edges.sort();
    Ok(edges)
}

/// Shortest word leading from `from` to `[0, 0]`, lexicographically least
/// among the shortest. Searches the untruncated graph up to `max_len` edges.
pub fn shortest_path_to_origin(shift: &AbShift, from: Vertex, max_len: usize) -> Option<Word> {
    if from.is_origin() {
        return Some(Word::empty());
    }
    let horizon = from.j.max(from.k) as usize + max_len + 2;
    let bounds = shift.bounds(horizon);
    let mut prev: HashMap<Vertex, (Vertex, Digit)> = HashMap::new();
    let mut frontier = vec![from];
    prev.insert(from, (from, 0));
    for _ in 0..max_len {
        let mut next = Vec::new();
        for &v in &frontier {
            for (c, t) in successors(&bounds, v) {
                if prev.contains_key(&t) {
                    continue;
                }
                prev.insert(t, (v, c));
                if t.is_origin() {
                    let mut digits = vec![c];
                    let mut cur = v;
                    while cur != from {
                        let (p, d) = prev[&cur];
                        digits.push(d);
                        cur = p;
                    }
                    digits.reverse();
                    return Some(Word::new(digits));
                }
                next.push(t);
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    None
}
