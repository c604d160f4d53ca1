//! Green sequences and exhaustive search over the green-mutation graph.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::quiver::{check_vertex, Quiver, Seed, VertexColor};

/// Mutable vertex indices in application order: `steps()[0]` is mutated first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MutationSequence(Vec<usize>);

impl MutationSequence {
    pub fn new(steps: Vec<usize>) -> Self {
        MutationSequence(steps)
    }

    /// Builds a sequence from composition notation `μ_{i_k} ⋯ μ_{i_1}`, where
    /// the rightmost factor is applied first.
    pub fn from_composition(mut factors: Vec<usize>) -> Self {
        factors.reverse();
        MutationSequence(factors)
    }

    pub fn steps(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, v: usize) {
        self.0.push(v);
    }

    pub fn extend(&mut self, other: &MutationSequence) {
        self.0.extend_from_slice(&other.0);
    }

    /// How often `v` is mutated.
    pub fn occurrences(&self, v: usize) -> usize {
        self.0.iter().filter(|&&x| x == v).count()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl From<Vec<usize>> for MutationSequence {
    fn from(v: Vec<usize>) -> Self {
        MutationSequence(v)
    }
}

impl fmt::Display for MutationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for MutationSequence {
    type Err = Error;

    /// Accepts vertices separated by commas and/or whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for tok in s.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let v = tok.parse::<usize>().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("not a vertex index: {tok:?}"),
            })?;
            steps.push(v);
        }
        Ok(MutationSequence(steps))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub vertex: usize,
    /// Color of `vertex` just before it was mutated.
    pub color: VertexColor,
}

#[derive(Clone, Debug)]
pub struct Application {
    pub endpoint: Seed,
    pub trace: Vec<Step>,
    /// Index into `trace` of the first mutation at a red vertex.
    pub first_non_green: Option<usize>,
}

impl Application {
    pub fn is_green_sequence(&self) -> bool {
        self.first_non_green.is_none()
    }

    pub fn is_mgs(&self) -> bool {
        self.is_green_sequence() && self.endpoint.is_all_red().unwrap_or(false)
    }
}

/// Applies `seq` to the framed seed of `q`, recording the color of every
/// mutated vertex. Mutations at red vertices are carried out and flagged.
pub fn apply_sequence(q: &Quiver, seq: &MutationSequence) -> Result<Application> {
    apply_to_seed(&Seed::framed(q), seq)
}

pub fn apply_to_seed(seed: &Seed, seq: &MutationSequence) -> Result<Application> {
    let mut s = seed.clone();
    let mut trace = Vec::with_capacity(seq.len());
    let mut first_non_green = None;
    for (idx, &k) in seq.steps().iter().enumerate() {
        check_vertex(k, s.n())?;
        let color = s.color(k)?;
        if color != VertexColor::Green && first_non_green.is_none() {
            first_non_green = Some(idx);
        }
        trace.push(Step { vertex: k, color });
        s = s.mutate(k)?;
    }
    Ok(Application {
        endpoint: s,
        trace,
        first_non_green,
    })
}

/// True iff every step of `seq` mutates a green vertex and the result is all red.
pub fn is_mgs(q: &Quiver, seq: &MutationSequence) -> bool {
    match apply_sequence(q, seq) {
        Ok(app) => app.is_mgs(),
        Err(_) => false,
    }
}

/// How search states are identified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dedup {
    /// Exact extended matrix; needed to enumerate sequences vertex by vertex.
    Labeled,
    /// Seeds isomorphic with frozen vertices fixed are merged. Lengths,
    /// spectra and counts are unchanged, and the shortest sequence is still
    /// read off a consistent chain of labeled seeds.
    Isomorphism,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Expand BFS frontiers on the rayon pool.
    pub parallel: bool,
    pub dedup: Dedup,
    /// Abort with a resource error once this many seeds are stored.
    pub max_nodes: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            parallel: true,
            dedup: Dedup::Isomorphism,
            max_nodes: 5_000_000,
        }
    }
}

impl SearchOptions {
    pub fn sequential() -> Self {
        SearchOptions {
            parallel: false,
            ..Self::default()
        }
    }

    pub fn labeled(self) -> Self {
        SearchOptions {
            dedup: Dedup::Labeled,
            ..self
        }
    }
}

// Frontiers smaller than this are expanded inline.
const PAR_THRESHOLD: usize = 64;

type Successors = Vec<(usize, Seed, Vec<u8>)>;

fn expand(seed: &Seed, dedup: Dedup) -> Result<Successors> {
    let mut out = Vec::new();
    for k in seed.green_vertices()? {
        let next = seed.mutate(k)?;
        let key = match dedup {
            Dedup::Labeled => next.canonical_key(),
            Dedup::Isomorphism => next.isomorphism_key(),
        };
        out.push((k, next, key));
    }
    Ok(out)
}

fn expand_frontier(nodes: &[Seed], frontier: &[usize], opts: SearchOptions) -> Result<Vec<Successors>> {
    if opts.parallel && frontier.len() >= PAR_THRESHOLD {
        frontier.par_iter().map(|&id| expand(&nodes[id], opts.dedup)).collect()
    } else {
        frontier.iter().map(|&id| expand(&nodes[id], opts.dedup)).collect()
    }
}

/// The green-mutation graph reachable from a framed seed. Node 0 is the
/// framed seed; node ids follow BFS discovery order. Each node keeps the
/// first labeled seed that reached it.
#[derive(Clone, Debug)]
pub struct SearchGraph {
    dedup: Dedup,
    nodes: Vec<Seed>,
    edges: Vec<Vec<(usize, usize)>>,
    sinks: Vec<usize>,
}

impl SearchGraph {
    pub fn build(q: &Quiver, opts: SearchOptions) -> Result<SearchGraph> {
        let root = Seed::framed(q);
        let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
        index.insert(root_key(&root, opts.dedup), 0);
        let mut nodes = vec![root];
        let mut edges: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
        let mut frontier = vec![0];
        while !frontier.is_empty() {
            let expanded = expand_frontier(&nodes, &frontier, opts)?;
            let mut next = Vec::new();
            for (&from, succ) in frontier.iter().zip(expanded) {
                for (k, seed, key) in succ {
                    let to = match index.get(&key) {
                        Some(&id) => id,
                        None => {
                            let id = nodes.len();
                            if id >= opts.max_nodes {
                                return Err(Error::Resource(format!(
                                    "search graph exceeds {} seeds",
                                    opts.max_nodes
                                )));
                            }
                            index.insert(key, id);
                            nodes.push(seed);
                            edges.push(Vec::new());
                            next.push(id);
                            id
                        }
                    };
                    if to == from {
                        return Err(Error::Integrity("mutation returned the same seed".into()));
                    }
                    edges[from].push((k, to));
                }
            }
            frontier = next;
        }
        let mut sinks = Vec::new();
        for (id, s) in nodes.iter().enumerate() {
            if s.is_all_red()? {
                sinks.push(id);
            }
        }
        let g = SearchGraph {
            dedup: opts.dedup,
            nodes,
            edges,
            sinks,
        };
        g.topological_order()?;
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    pub fn seed(&self, id: usize) -> &Seed {
        &self.nodes[id]
    }

    /// Outgoing edges of `id` as `(mutated vertex, target)`, ascending by vertex.
    pub fn successors(&self, id: usize) -> &[(usize, usize)] {
        &self.edges[id]
    }

    pub fn sinks(&self) -> &[usize] {
        &self.sinks
    }

    /// Kahn's algorithm; a leftover node means a directed cycle.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.nodes.len();
        let mut indeg = vec![0usize; n];
        for e in &self.edges {
            for &(_, to) in e {
                indeg[to] += 1;
            }
        }
        let mut order: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &(_, to) in &self.edges[v] {
                indeg[to] -= 1;
                if indeg[to] == 0 {
                    order.push(to);
                }
            }
        }
        if order.len() != n {
            return Err(Error::Integrity(
                "green-mutation graph contains a directed cycle".into(),
            ));
        }
        Ok(order)
    }

    /// Longest path (in mutations) from every node to an all-red seed;
    /// `None` where no all-red seed is reachable.
    fn longest_to_sink(&self) -> Result<Vec<Option<usize>>> {
        let order = self.topological_order()?;
        let mut best: Vec<Option<usize>> = vec![None; self.nodes.len()];
        for &s in &self.sinks {
            best[s] = Some(0);
        }
        for &v in order.iter().rev() {
            for &(_, to) in &self.edges[v] {
                if let Some(d) = best[to] {
                    best[v] = Some(best[v].map_or(d + 1, |b| b.max(d + 1)));
                }
            }
        }
        Ok(best)
    }

    pub fn longest_mgs_length(&self) -> Result<usize> {
        self.longest_to_sink()?[0].ok_or(Error::NoMgs)
    }

    pub fn spectrum(&self) -> Result<Vec<usize>> {
        let order = self.topological_order()?;
        let mut sets: Vec<LengthSet> = vec![LengthSet::default(); self.nodes.len()];
        for &s in &self.sinks {
            sets[s].insert(0);
        }
        for &v in order.iter().rev() {
            let mut acc = std::mem::take(&mut sets[v]);
            for &(_, to) in &self.edges[v] {
                acc.union_shifted(&sets[to]);
            }
            sets[v] = acc;
        }
        let out = sets[0].to_vec();
        if out.is_empty() {
            return Err(Error::NoMgs);
        }
        Ok(out)
    }

    pub fn count_mgs(&self) -> Result<BigUint> {
        let order = self.topological_order()?;
        let mut counts: Vec<BigUint> = vec![BigUint::default(); self.nodes.len()];
        for &s in &self.sinks {
            counts[s] = BigUint::from(1u32);
        }
        for &v in order.iter().rev() {
            let mut acc = std::mem::take(&mut counts[v]);
            for &(_, to) in &self.edges[v] {
                acc += &counts[to];
            }
            counts[v] = acc;
        }
        Ok(counts[0].clone())
    }

    /// Shortest MGS: BFS tree path to the first all-red seed discovered.
    pub fn shortest_mgs(&self) -> Result<MutationSequence> {
        let n = self.nodes.len();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0]);
        let is_sink = {
            let mut s = vec![false; n];
            for &x in &self.sinks {
                s[x] = true;
            }
            s
        };
        while let Some(v) = queue.pop_front() {
            if is_sink[v] {
                return Ok(path_from_parents(&parent, v));
            }
            for &(k, to) in &self.edges[v] {
                if !seen[to] {
                    seen[to] = true;
                    parent[to] = Some((v, k));
                    queue.push_back(to);
                }
            }
        }
        Err(Error::NoMgs)
    }

    /// Calls `visit` once per maximal green sequence, in lexicographic order.
    /// Stops early and returns `Ok(false)` as soon as `visit` returns `false`.
    /// Needs a graph built with [`Dedup::Labeled`].
    pub fn for_each_mgs<F: FnMut(&[usize]) -> bool>(&self, mut visit: F) -> Result<bool> {
        if self.dedup != Dedup::Labeled {
            return Err(Error::Precondition(
                "enumerating sequences needs a labeled search graph".into(),
            ));
        }
        let mut path = Vec::new();
        Ok(self.dfs(0, &mut path, &mut visit))
    }

    fn dfs<F: FnMut(&[usize]) -> bool>(&self, v: usize, path: &mut Vec<usize>, visit: &mut F) -> bool {
        if self.edges[v].is_empty() {
            // No green vertex left means all red.
            return visit(path);
        }
        for &(k, to) in &self.edges[v] {
            path.push(k);
            let go_on = self.dfs(to, path, visit);
            path.pop();
            if !go_on {
                return false;
            }
        }
        true
    }

    /// Every maximal green sequence; fails once more than `limit` exist.
    pub fn all_mgs(&self, limit: usize) -> Result<Vec<MutationSequence>> {
        let mut out = Vec::new();
        let complete = self.for_each_mgs(|p| {
            if out.len() == limit {
                return false;
            }
            out.push(MutationSequence::new(p.to_vec()));
            true
        })?;
        if !complete {
            return Err(Error::Resource(format!("more than {limit} maximal green sequences")));
        }
        Ok(out)
    }
}

fn root_key(root: &Seed, dedup: Dedup) -> Vec<u8> {
    match dedup {
        Dedup::Labeled => root.canonical_key(),
        Dedup::Isomorphism => root.isomorphism_key(),
    }
}

fn path_from_parents(parent: &[Option<(usize, usize)>], mut v: usize) -> MutationSequence {
    let mut steps = Vec::new();
    while let Some((p, k)) = parent[v] {
        steps.push(k);
        v = p;
    }
    steps.reverse();
    MutationSequence(steps)
}

/// Set of small non-negative integers as a growable bitset.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct LengthSet(Vec<u64>);

impl LengthSet {
    fn insert(&mut self, x: usize) {
        let w = x / 64;
        if self.0.len() <= w {
            self.0.resize(w + 1, 0);
        }
        self.0[w] |= 1 << (x % 64);
    }

    /// `self ∪= { x + 1 : x ∈ other }`
    fn union_shifted(&mut self, other: &LengthSet) {
        if other.0.is_empty() {
            return;
        }
        let need = other.0.len() + usize::from(other.0.last().is_some_and(|&w| w >> 63 != 0));
        if self.0.len() < need {
            self.0.resize(need, 0);
        }
        let mut carry = 0u64;
        for (i, &w) in other.0.iter().enumerate() {
            self.0[i] |= (w << 1) | carry;
            carry = w >> 63;
        }
        if carry != 0 {
            self.0[other.0.len()] |= carry;
        }
    }

    fn to_vec(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &w) in self.0.iter().enumerate() {
            for b in 0..64 {
                if w >> b & 1 == 1 {
                    out.push(i * 64 + b);
                }
            }
        }
        out
    }
}

/// Shortest MGS by level-synchronous BFS that stops at the first level
/// containing an all-red seed, so only seeds up to that depth are built.
pub fn shortest_mgs_with(q: &Quiver, opts: SearchOptions) -> Result<MutationSequence> {
    let root = Seed::framed(q);
    if root.is_all_red()? {
        return Ok(MutationSequence::default());
    }
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
    index.insert(root_key(&root, opts.dedup), 0);
    let mut nodes = vec![root];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut frontier = vec![0];
    while !frontier.is_empty() {
        let expanded = expand_frontier(&nodes, &frontier, opts)?;
        let mut next = Vec::new();
        let mut found = None;
        for (&from, succ) in frontier.iter().zip(expanded) {
            for (k, seed, key) in succ {
                if index.contains_key(&key) {
                    continue;
                }
                let id = nodes.len();
                if id >= opts.max_nodes {
                    return Err(Error::Resource(format!(
                        "search graph exceeds {} seeds",
                        opts.max_nodes
                    )));
                }
                if found.is_none() && seed.is_all_red()? {
                    found = Some(id);
                }
                index.insert(key, id);
                nodes.push(seed);
                parent.push(Some((from, k)));
                next.push(id);
            }
        }
        if let Some(id) = found {
            return Ok(path_from_parents(&parent, id));
        }
        frontier = next;
    }
    Err(Error::NoMgs)
}

pub fn shortest_mgs(q: &Quiver) -> Result<MutationSequence> {
    shortest_mgs_with(q, SearchOptions::default())
}

pub fn longest_mgs_length(q: &Quiver) -> Result<usize> {
    SearchGraph::build(q, SearchOptions::default())?.longest_mgs_length()
}

pub fn mgs_length_spectrum(q: &Quiver) -> Result<Vec<usize>> {
    SearchGraph::build(q, SearchOptions::default())?.spectrum()
}

pub fn count_mgs(q: &Quiver) -> Result<BigUint> {
    SearchGraph::build(q, SearchOptions::default())?.count_mgs()
}

/// Which parts of a [`SearchReport`] to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportFields {
    pub shortest: bool,
    pub longest: bool,
    pub spectrum: bool,
    pub count: bool,
}

impl ReportFields {
    pub fn all() -> Self {
        ReportFields {
            shortest: true,
            longest: true,
            spectrum: true,
            count: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub schema: u32,
    pub length_min: Option<usize>,
    pub length_max: Option<usize>,
    pub spectrum: Option<Vec<usize>>,
    #[serde(serialize_with = "serialize_count")]
    pub count: Option<BigUint>,
    pub witness_sequence: Option<Vec<usize>>,
}

// Counts that fit in u64 are JSON numbers; larger ones are decimal strings.
fn serialize_count<S: Serializer>(c: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match c {
        None => s.serialize_none(),
        Some(c) => match u64::try_from(c) {
            Ok(v) => s.serialize_u64(v),
            Err(_) => s.serialize_str(&c.to_string()),
        },
    }
}

pub fn search_report(q: &Quiver, fields: ReportFields, opts: SearchOptions) -> Result<SearchReport> {
    let mut r = SearchReport {
        schema: 1,
        length_min: None,
        length_max: None,
        spectrum: None,
        count: None,
        witness_sequence: None,
    };
    if fields.longest || fields.spectrum || fields.count {
        let g = SearchGraph::build(q, opts)?;
        if fields.shortest {
            let w = g.shortest_mgs()?;
            r.length_min = Some(w.len());
            r.witness_sequence = Some(w.into_vec());
        }
        if fields.longest {
            r.length_max = Some(g.longest_mgs_length()?);
        }
        if fields.spectrum {
            let s = g.spectrum()?;
            r.length_min = s.first().copied();
            r.length_max = s.last().copied();
            r.spectrum = Some(s);
        }
        if fields.count {
            r.count = Some(g.count_mgs()?);
        }
    } else if fields.shortest {
        let w = shortest_mgs_with(q, opts)?;
        r.length_min = Some(w.len());
        r.witness_sequence = Some(w.into_vec());
    }
    Ok(r)
}

/// Checks the single-bridge attachment property: frame `c ⊔ d` joined by one
/// arrow `i -> j` (`i` in `c`, `j` in `d`, both 1-based in their own quiver),
/// apply `mgs_c` and require that every `c` vertex is red, that `c` and `d`
/// are joined by exactly one arrow `j -> x` where `x` is the unique `c` vertex
/// receiving an arrow from `i'`, and that the framed `d` is untouched.
pub fn check_bridge_attachment(
    c: &Quiver,
    d: &Quiver,
    bridge: (usize, usize),
    mgs_c: &MutationSequence,
) -> Result<bool> {
    let (i, j) = bridge;
    check_vertex(i, c.n())?;
    check_vertex(j, d.n())?;
    if !is_mgs(c, mgs_c) {
        return Err(Error::Precondition(
            "sequence is not a maximal green sequence of c".into(),
        ));
    }
    let nc = c.n();
    let composite = c.disjoint_union(d).with_arrow(i, nc + j)?;
    let app = apply_sequence(&composite, mgs_c)?;
    if !app.is_green_sequence() {
        return Ok(false);
    }
    let s = &app.endpoint;
    let n = s.n();
    let in_c = |v: usize| v <= nc;

    for v in 1..=nc {
        if s.color(v)? != VertexColor::Red {
            return Ok(false);
        }
    }
    // Unique x in c with i' -> x.
    let targets: Vec<usize> = (1..=nc).filter(|&x| s.c(i, x) > 0).collect();
    let [x] = targets[..] else {
        return Ok(false);
    };
    for u in 1..=n {
        for v in 1..=n {
            if in_c(u) == in_c(v) {
                continue;
            }
            let expected = if u == nc + j && v == x {
                1
            } else if v == nc + j && u == x {
                -1
            } else {
                0
            };
            if s.quiver().b(u, v) != expected {
                return Ok(false);
            }
        }
    }
    // Frozen vertices of one side touch no mutable vertex of the other, and
    // d keeps its framing and arrows.
    for fz in 1..=n {
        for v in 1..=n {
            if in_c(fz) != in_c(v) && s.c(fz, v) != 0 {
                return Ok(false);
            }
        }
    }
    for u in nc + 1..=n {
        for v in nc + 1..=n {
            if s.quiver().b(u, v) != composite.b(u, v) {
                return Ok(false);
            }
            let framed = if u == v { -1 } else { 0 };
            if s.c(u, v) != framed {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
