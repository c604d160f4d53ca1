//! Triangulated polygons: quivers, flips, rotation, enumeration and the
//! inscribed-polygon witnesses for lower bounds on green sequence length.
//!
//! Polygon vertices are `0..m` counterclockwise. Arc labels are `1..=n`
//! with `n = m - 3`.

use std::collections::BTreeSet;
use std::fmt;

use crate::engine::{apply_sequence, is_mgs, MutationSequence};
use crate::error::{structure, Error, Result};
use crate::quiver::Quiver;

/// A chord `{u, v}` of the polygon with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord(pub usize, pub usize);

impl Chord {
    pub fn new(a: usize, b: usize) -> Chord {
        if a < b {
            Chord(a, b)
        } else {
            Chord(b, a)
        }
    }

    pub fn has_endpoint(&self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// True iff `x` lies strictly inside the counterclockwise interval from `a` to `b`.
fn strictly_between(a: usize, b: usize, x: usize, m: usize) -> bool {
    let d = (x + m - a) % m;
    d > 0 && d < (b + m - a) % m
}

/// Chords cross iff their four endpoints are distinct and exactly one
/// endpoint of the second lies strictly between the endpoints of the first.
pub fn crosses(p: Chord, q: Chord, m: usize) -> bool {
    if p.has_endpoint(q.0) || p.has_endpoint(q.1) {
        return false;
    }
    strictly_between(p.0, p.1, q.0, m) != strictly_between(p.0, p.1, q.1, m)
}

fn is_boundary(c: Chord, m: usize) -> bool {
    c.1 - c.0 == 1 || (c.0 == 0 && c.1 == m - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangulation {
    m: usize,
    // arcs[label - 1]
    arcs: Vec<Chord>,
}

impl Triangulation {
    /// Validates a labelled arc list: `arcs[i]` carries label `i + 1`.
    pub fn new(m: usize, arcs: Vec<Chord>) -> Result<Triangulation> {
        if m < 3 {
            return Err(structure(format!("a polygon needs at least 3 vertices, got {m}")));
        }
        if arcs.len() != m - 3 {
            return Err(structure(format!(
                "a triangulated {m}-gon has {} arcs, got {}",
                m - 3,
                arcs.len()
            )));
        }
        let mut norm = Vec::with_capacity(arcs.len());
        for (i, c) in arcs.iter().enumerate() {
            let c = Chord::new(c.0, c.1);
            if c.1 >= m {
                return Err(structure(format!("arc {} leaves the {m}-gon", i + 1)));
            }
            if c.0 == c.1 || is_boundary(c, m) {
                return Err(structure(format!("arc {} is not a diagonal", i + 1)));
            }
            if norm.contains(&c) {
                return Err(structure(format!("arc {} is repeated", i + 1)));
            }
            norm.push(c);
        }
        for i in 0..norm.len() {
            for j in i + 1..norm.len() {
                if crosses(norm[i], norm[j], m) {
                    return Err(structure(format!("arcs {} and {} cross", i + 1, j + 1)));
                }
            }
        }
        Ok(Triangulation { m, arcs: norm })
    }

    /// Labels arcs `1..` in lexicographic chord order.
    pub fn canonical(m: usize, mut arcs: Vec<Chord>) -> Result<Triangulation> {
        for c in arcs.iter_mut() {
            *c = Chord::new(c.0, c.1);
        }
        arcs.sort();
        Triangulation::new(m, arcs)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn arc(&self, label: usize) -> Chord {
        self.arcs[label - 1]
    }

    pub fn arcs(&self) -> &[Chord] {
        &self.arcs
    }

    pub fn chord_set(&self) -> BTreeSet<Chord> {
        self.arcs.iter().copied().collect()
    }

    /// Label of the arc `{a, b}`, if present.
    pub fn label_of(&self, a: usize, b: usize) -> Option<usize> {
        let c = Chord::new(a, b);
        self.arcs.iter().position(|&x| x == c).map(|i| i + 1)
    }

    fn adjacency(&self) -> Vec<bool> {
        let m = self.m;
        let mut adj = vec![false; m * m];
        let mut set = |a: usize, b: usize| {
            adj[a * m + b] = true;
            adj[b * m + a] = true;
        };
        for i in 0..m {
            set(i, (i + 1) % m);
        }
        for c in &self.arcs {
            set(c.0, c.1);
        }
        adj
    }

    /// The `m - 2` triangles as sorted vertex triples.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let m = self.m;
        let adj = self.adjacency();
        let mut out = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                if !adj[a * m + b] {
                    continue;
                }
                for c in b + 1..m {
                    if adj[b * m + c] && adj[a * m + c] {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// Per triangle `a < b < c`, the sides in counterclockwise order are
    /// `ab, bc, ca`; each side that is an arc gets an arrow to the next side
    /// when that is an arc too.
    pub fn quiver(&self) -> Quiver {
        let mut arrows = Vec::new();
        for [a, b, c] in self.triangles() {
            let sides = [self.label_of(a, b), self.label_of(b, c), self.label_of(c, a)];
            for i in 0..3 {
                if let (Some(x), Some(y)) = (sides[i], sides[(i + 1) % 3]) {
                    arrows.push((x, y));
                }
            }
        }
        Quiver::from_arrows(self.n(), &arrows).expect("triangulation quivers have no 2-cycles")
    }

    /// Replaces arc `label` by the other diagonal of its quadrilateral.
    pub fn flip(&self, label: usize) -> Result<Triangulation> {
        crate::quiver::check_vertex(label, self.n())?;
        let Chord(u, v) = self.arc(label);
        let adj = self.adjacency();
        let m = self.m;
        let apexes: Vec<usize> = (0..m)
            .filter(|&w| w != u && w != v && adj[u * m + w] && adj[v * m + w])
            .collect();
        let [w1, w2] = apexes[..] else {
            return Err(Error::Integrity(format!("arc {label} does not bound two triangles")));
        };
        let mut arcs = self.arcs.clone();
        arcs[label - 1] = Chord::new(w1, w2);
        Ok(Triangulation { m, arcs })
    }

    fn rotate(&self, shift: usize) -> Triangulation {
        let m = self.m;
        let arcs = self
            .arcs
            .iter()
            .map(|c| Chord::new((c.0 + shift) % m, (c.1 + shift) % m))
            .collect();
        Triangulation { m, arcs }
    }

    /// Clockwise rotation by one vertex: `{u, v} -> {u - 1, v - 1}`, labels kept.
    pub fn tau(&self) -> Triangulation {
        self.rotate(self.m - 1)
    }

    pub fn tau_inv(&self) -> Triangulation {
        self.rotate(1)
    }

    /// Arc labels of every triangle whose three sides are all arcs.
    pub fn interior_triangles(&self) -> Vec<[usize; 3]> {
        self.triangles()
            .into_iter()
            .filter_map(|[a, b, c]| Some([self.label_of(a, b)?, self.label_of(b, c)?, self.label_of(c, a)?]))
            .collect()
    }
}

/// Largest polygon [`enumerate_triangulations`] accepts.
pub const MAX_ENUMERATION_M: usize = 14;

/// Every triangulation of the `m`-gon once, canonically labelled, sorted by arc list.
pub fn enumerate_triangulations(m: usize) -> Result<Vec<Triangulation>> {
    if m < 3 {
        return Err(structure(format!("a polygon needs at least 3 vertices, got {m}")));
    }
    if m > MAX_ENUMERATION_M {
        return Err(Error::Resource(format!(
            "enumerating triangulations of a {m}-gon exceeds the limit of {MAX_ENUMERATION_M}"
        )));
    }
    let mut memo = vec![None; m * m];
    let mut out: Vec<Triangulation> = sub_triangulations(0, m - 1, m, &mut memo)
        .into_iter()
        .map(|mut arcs| {
            arcs.sort();
            Triangulation { m, arcs }
        })
        .collect();
    out.sort_by(|a, b| a.arcs.cmp(&b.arcs));
    Ok(out)
}

// Chord sets triangulating the sub-polygon on vertices i..=j (edge {i,j} excluded).
fn sub_triangulations(i: usize, j: usize, m: usize, memo: &mut Vec<Option<Vec<Vec<Chord>>>>) -> Vec<Vec<Chord>> {
    if j - i < 2 {
        return vec![Vec::new()];
    }
    if let Some(v) = &memo[i * m + j] {
        return v.clone();
    }
    let mut out = Vec::new();
    for k in i + 1..j {
        let left = sub_triangulations(i, k, m, memo);
        let right = sub_triangulations(k, j, m, memo);
        for l in &left {
            for r in &right {
                let mut arcs = Vec::with_capacity(l.len() + r.len() + 2);
                if k - i > 1 {
                    arcs.push(Chord(i, k));
                }
                if j - k > 1 {
                    arcs.push(Chord(k, j));
                }
                arcs.extend_from_slice(l);
                arcs.extend_from_slice(r);
                out.push(arcs);
            }
        }
    }
    memo[i * m + j] = Some(out.clone());
    out
}

/// Quiver of the flip equals the mutation of the quiver, vertex for vertex.
pub fn flip_mutation_square(t: &Triangulation, label: usize) -> Result<bool> {
    Ok(t.flip(label)?.quiver() == t.quiver().mutate(label)?)
}

/// Applies `seq` as flips and compares the resulting chord set with `tau(t)`.
pub fn mgs_endpoint_is_tau(t: &Triangulation, seq: &MutationSequence) -> Result<bool> {
    if !is_mgs(&t.quiver(), seq) {
        return Err(Error::Precondition("sequence is not a maximal green sequence".into()));
    }
    let mut cur = t.clone();
    for &k in seq.steps() {
        cur = cur.flip(k)?;
    }
    Ok(cur.chord_set() == t.tau().chord_set())
}

/// A maximal union of interior triangles glued along arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InscribedPolygon {
    /// Interior triangles as arc-label triples.
    pub triangles: Vec<[usize; 3]>,
    /// Arc labels lying in exactly one of the triangles, ascending.
    pub boundary: Vec<usize>,
}

impl InscribedPolygon {
    fn from_triangles(triangles: Vec<[usize; 3]>) -> InscribedPolygon {
        let mut labels: Vec<usize> = triangles.iter().flatten().copied().collect();
        labels.sort_unstable();
        let boundary = labels
            .iter()
            .copied()
            .filter(|&l| labels.iter().filter(|&&x| x == l).count() == 1)
            .collect();
        InscribedPolygon { triangles, boundary }
    }
}

fn glue(triangles: &[[usize; 3]]) -> Vec<InscribedPolygon> {
    let k = triangles.len();
    let mut seen = vec![false; k];
    let mut out = Vec::new();
    for s in 0..k {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut group = Vec::new();
        while let Some(i) = stack.pop() {
            group.push(triangles[i]);
            for j in 0..k {
                if !seen[j] && triangles[i].iter().any(|l| triangles[j].contains(l)) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        group.sort_unstable();
        out.push(InscribedPolygon::from_triangles(group));
    }
    out
}

/// Maximal inscribed polygons: interior triangles glued along shared arcs.
pub fn inscribed_polygons(t: &Triangulation) -> Vec<InscribedPolygon> {
    glue(&t.interior_triangles())
}

/// Peels every inscribed polygon: pick the smallest boundary arc mutated at
/// least twice, remove its triangle, recurse on what is left. Returns one
/// witness arc per interior triangle, or `None` if some polygon met along
/// the way has no boundary arc mutated twice.
pub fn peel_witnesses(t: &Triangulation, seq: &MutationSequence) -> Option<Vec<usize>> {
    let mut witnesses = Vec::new();
    let mut stack = inscribed_polygons(t);
    while let Some(p) = stack.pop() {
        let w = *p.boundary.iter().find(|&&l| seq.occurrences(l) >= 2)?;
        witnesses.push(w);
        let rest: Vec<[usize; 3]> = p.triangles.iter().copied().filter(|tr| !tr.contains(&w)).collect();
        stack.extend(glue(&rest));
    }
    witnesses.sort_unstable();
    Some(witnesses)
}

/// True iff every inscribed polygon met while peeling has a boundary arc
/// mutated at least twice by the maximal green sequence `seq`.
pub fn double_flip_witness(t: &Triangulation, seq: &MutationSequence) -> Result<bool> {
    let app = apply_sequence(&t.quiver(), seq)?;
    if !app.is_mgs() {
        return Err(Error::Precondition("sequence is not a maximal green sequence".into()));
    }
    Ok(peel_witnesses(t, seq).is_some())
}
