//! Type-A recognition and the fan / zigzag / 3-cycle decomposition.

use std::fmt;

use crate::error::{structure, Result};
use crate::quiver::Quiver;

/// An oriented 3-cycle `a -> b -> c -> a`, rotated so that `a` is the smallest label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle(pub [usize; 3]);

impl Triangle {
    pub fn vertices(&self) -> [usize; 3] {
        self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn min_vertex(&self) -> usize {
        self.0[0]
    }

    /// The vertex `w` with `v -> w` in this triangle.
    pub fn successor(&self, v: usize) -> usize {
        let p = self.0.iter().position(|&x| x == v).expect("vertex not in triangle");
        self.0[(p + 1) % 3]
    }

    pub fn predecessor(&self, v: usize) -> usize {
        let p = self.0.iter().position(|&x| x == v).expect("vertex not in triangle");
        self.0[(p + 2) % 3]
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "{a}->{b}->{c}->{a}")
    }
}

/// All oriented 3-cycles of `q`, sorted.
pub fn three_cycles(q: &Quiver) -> Vec<Triangle> {
    let n = q.n();
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            let ab = q.b(a, b);
            if ab == 0 {
                continue;
            }
            for c in b + 1..=n {
                if ab > 0 && q.b(b, c) > 0 && q.b(c, a) > 0 {
                    out.push(Triangle([a, b, c]));
                } else if ab < 0 && q.b(a, c) > 0 && q.b(c, b) > 0 {
                    out.push(Triangle([a, c, b]));
                }
            }
        }
    }
    out.sort();
    out
}

/// Number of oriented 3-cycles.
pub fn cycle_count(q: &Quiver) -> usize {
    three_cycles(q).len()
}

fn simply_laced(q: &Quiver) -> bool {
    q.matrix().iter().all(|&x| (-1..=1).contains(&x))
}

/// Structural type-A test, applied to each connected component.
///
/// A simply-laced quiver comes from a triangulated polygon iff every
/// 3-clique of its underlying graph is an oriented 3-cycle, these 3-cycles
/// share no arrows, their number equals the cycle rank `E - V + C` (so no
/// other cycle exists), and each vertex lies in at most two 3-cycles with at
/// most two, one or zero further neighbours when it lies in zero, one or two
/// 3-cycles respectively.
pub fn is_type_a(q: &Quiver) -> bool {
    check_type_a(q).is_ok()
}

pub(crate) fn check_type_a(q: &Quiver) -> Result<()> {
    if !simply_laced(q) {
        return Err(structure("arrow multiplicities above one are not type A"));
    }
    let n = q.n();
    for a in 1..=n {
        for b in a + 1..=n {
            if q.b(a, b) == 0 {
                continue;
            }
            for c in b + 1..=n {
                if q.b(b, c) != 0 && q.b(a, c) != 0 {
                    let oriented = (q.b(a, b) > 0 && q.b(b, c) > 0 && q.b(c, a) > 0)
                        || (q.b(a, c) > 0 && q.b(c, b) > 0 && q.b(b, a) > 0);
                    if !oriented {
                        return Err(structure(format!(
                            "vertices {a}, {b}, {c} form a non-oriented triangle"
                        )));
                    }
                }
            }
        }
    }
    let tri = three_cycles(q);
    let mut in_triangle = vec![0usize; n + 1];
    let mut arrow_used = vec![false; n * n];
    for t in &tri {
        for i in 0..3 {
            let (u, v) = (t.0[i], t.0[(i + 1) % 3]);
            let idx = (u.min(v) - 1) * n + (u.max(v) - 1);
            if arrow_used[idx] {
                return Err(structure(format!("3-cycles share the arrow between {u} and {v}")));
            }
            arrow_used[idx] = true;
            in_triangle[u] += 1;
        }
    }
    let edges = q.arrows().len();
    let components = q.components().len();
    if edges + components != n + tri.len() {
        return Err(structure("quiver has a cycle that is not an oriented 3-cycle"));
    }
    for (v, &tv) in in_triangle.iter().enumerate().skip(1) {
        let deg = q.neighbors(v).len();
        let ok = match tv {
            0 => deg <= 2,
            1 => deg <= 3,
            2 => deg == 4,
            _ => false,
        };
        if !ok {
            return Err(structure(format!("vertex {v} has too many neighbours for type A")));
        }
    }
    Ok(())
}

/// A maximal connected union of 3-cycles (triangles sharing vertices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleConfig {
    pub triangles: Vec<Triangle>,
    /// Vertices lying in two triangles.
    pub shared: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl CycleConfig {
    pub fn from_triangles(mut triangles: Vec<Triangle>) -> CycleConfig {
        triangles.sort();
        let mut vertices: Vec<usize> = triangles.iter().flat_map(|t| t.0).collect();
        vertices.sort_unstable();
        let mut shared = Vec::new();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                shared.push(w[0]);
            }
        }
        vertices.dedup();
        CycleConfig {
            triangles,
            shared,
            vertices,
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn min_vertex(&self) -> usize {
        self.vertices[0]
    }

    /// Edges of the triangle graph: pairs of triangle indices sharing a vertex.
    pub fn triangle_graph(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.triangles.len() {
            for j in i + 1..self.triangles.len() {
                if self.triangles[i].0.iter().any(|&v| self.triangles[j].contains(v)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// True iff the triangle graph is connected and acyclic.
    pub fn triangle_graph_is_tree(&self) -> bool {
        let k = self.triangles.len();
        let edges = self.triangle_graph();
        if edges.len() + 1 != k {
            return false;
        }
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &(a, b) in &edges {
                let other = if a == i {
                    b
                } else if b == i {
                    a
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Groups the 3-cycles of `q` into configurations, ordered by smallest vertex.
pub fn cycle_configs(q: &Quiver) -> Vec<CycleConfig> {
    let tri = three_cycles(q);
    let k = tri.len();
    let mut comp = vec![usize::MAX; k];
    let mut groups: Vec<Vec<Triangle>> = Vec::new();
    for s in 0..k {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = groups.len();
        comp[s] = id;
        let mut stack = vec![s];
        let mut group = Vec::new();
        while let Some(i) = stack.pop() {
            group.push(tri[i]);
            for j in 0..k {
                if comp[j] == usize::MAX && tri[i].0.iter().any(|&v| tri[j].contains(v)) {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
        groups.push(group);
    }
    let mut out: Vec<CycleConfig> = groups.into_iter().map(CycleConfig::from_triangles).collect();
    out.sort_by_key(|c| c.min_vertex());
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    /// Zigzag source `C_i` (1-based index).
    Source(usize),
    /// Zigzag sink `K_j`.
    Sink(usize),
    /// Interior fan vertex `F_{i_j}`, counted from the fan's source side.
    FanInterior { fan: usize, position: usize },
    /// Member of the given 3-cycle configuration (1-based index).
    Cycle(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Source(i) => write!(f, "C{i}"),
            Role::Sink(j) => write!(f, "K{j}"),
            Role::FanInterior { fan, position } => write!(f, "F{fan}_{position}"),
            Role::Cycle(c) => write!(f, "T{c}"),
        }
    }
}

/// Parse of a type-A quiver into fans, zigzag sources/sinks and 3-cycle
/// configurations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Maximal directed paths of at least three vertices whose arrows lie in
    /// no 3-cycle, source first, ordered by smallest interior vertex.
    pub fans: Vec<Vec<usize>>,
    /// `C_1, C_2, ...` in ascending label order.
    pub sources: Vec<usize>,
    /// `K_1, K_2, ...` in ascending label order.
    pub sinks: Vec<usize>,
    pub configs: Vec<CycleConfig>,
    roles: Vec<Role>,
}

impl Decomposition {
    pub fn role(&self, v: usize) -> Role {
        self.roles[v - 1]
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    /// Interior vertices of fan `i` (0-based), source side first.
    pub fn fan_interior(&self, i: usize) -> &[usize] {
        let f = &self.fans[i];
        &f[1..f.len() - 1]
    }
}

pub fn decompose(q: &Quiver) -> Result<Decomposition> {
    check_type_a(q)?;
    let n = q.n();
    let configs = cycle_configs(q);
    let mut roles: Vec<Option<Role>> = vec![None; n];
    for (ci, cfg) in configs.iter().enumerate() {
        for &v in &cfg.vertices {
            roles[v - 1] = Some(Role::Cycle(ci + 1));
        }
    }

    // Arrows outside every 3-cycle.
    let tri = three_cycles(q);
    let in_cycle = |a: usize, b: usize| tri.iter().any(|t| t.contains(a) && t.contains(b));
    let mut out_free = vec![Vec::new(); n + 1];
    let mut in_free = vec![Vec::new(); n + 1];
    for (a, b, _) in q.arrows() {
        if !in_cycle(a, b) {
            out_free[a].push(b);
            in_free[b].push(a);
        }
    }

    // A fan starts at a vertex that does not continue a directed run:
    // a vertex with a free out-arrow and either no free in-arrow, or one that
    // is itself a source/sink of two arrows.
    let continues = |v: usize| in_free[v].len() == 1 && out_free[v].len() == 1;
    let mut fans = Vec::new();
    for v in 1..=n {
        if continues(v) {
            continue;
        }
        for &w in &out_free[v] {
            let mut path = vec![v, w];
            let mut cur = w;
            while continues(cur) {
                cur = out_free[cur][0];
                path.push(cur);
            }
            if path.len() >= 3 {
                fans.push(path);
            }
        }
    }
    fans.sort_by_key(|f: &Vec<usize>| f[1..f.len() - 1].iter().copied().min());
    for (fi, fan) in fans.iter().enumerate() {
        for (p, &v) in fan[1..fan.len() - 1].iter().enumerate() {
            roles[v - 1] = Some(Role::FanInterior {
                fan: fi + 1,
                position: p + 1,
            });
        }
    }

    let mut sources = Vec::new();
    let mut sinks = Vec::new();
    for v in 1..=n {
        if roles[v - 1].is_some() {
            continue;
        }
        if q.is_source(v) {
            sources.push(v);
            roles[v - 1] = Some(Role::Source(sources.len()));
        } else if q.is_sink(v) {
            sinks.push(v);
            roles[v - 1] = Some(Role::Sink(sinks.len()));
        } else {
            return Err(structure(format!("vertex {v} has no role")));
        }
    }
    Ok(Decomposition {
        fans,
        sources,
        sinks,
        configs,
        roles: roles.into_iter().map(|r| r.expect("every vertex has a role")).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: usize, arrows: &[(usize, usize)]) -> Quiver {
        Quiver::from_arrows(n, arrows).unwrap()
    }

    #[test]
    fn recognises_small_quivers() {
        assert!(is_type_a(&Quiver::empty(0)));
        assert!(is_type_a(&Quiver::empty(1)));
        assert!(is_type_a(&q(3, &[(1, 2), (2, 3), (3, 1)])));
        assert!(is_type_a(&q(3, &[(1, 2), (3, 2)])));
        assert!(!is_type_a(&q(4, &[(1, 2), (2, 3), (3, 4), (4, 1)])));
        assert!(!is_type_a(&q(3, &[(1, 2), (2, 3), (1, 3)])));
        assert!(!is_type_a(&Quiver::from_matrix(2, vec![0, 2, -2, 0]).unwrap()));
        // D4: a vertex with three neighbours outside any 3-cycle
        assert!(!is_type_a(&q(4, &[(1, 2), (1, 3), (1, 4)])));
    }

    #[test]
    fn triangle_orientation() {
        let t = three_cycles(&q(3, &[(2, 1), (1, 3), (3, 2)]));
        assert_eq!(t, vec![Triangle([1, 3, 2])]);
        assert_eq!(t[0].successor(3), 2);
        assert_eq!(t[0].predecessor(3), 1);
    }

    #[test]
    #[rustfmt::skip]
    fn acyclic_labelling() {
        // 1->2<-3->4<-5<-6<-7<-8->9->10->11
        let quiver = q(
            11,
            &[
                (1, 2), (3, 2), (3, 4), (5, 4), (6, 5), (7, 6), (8, 7), (8, 9), (9, 10), (10, 11),
            ],
        );
        let d = decompose(&quiver).unwrap();
        let labels: Vec<String> = (1..=11).map(|v| d.role(v).to_string()).collect();
        assert_eq!(
            labels,
            ["C1", "K1", "C2", "K2", "F1_3", "F1_2", "F1_1", "C3", "F2_1", "F2_2", "K3"]
        );
        assert_eq!(d.fans, vec![vec![8, 7, 6, 5, 4], vec![8, 9, 10, 11]]);
    }

    #[test]
    fn zigzag_has_no_fans() {
        let d = decompose(&q(4, &[(1, 2), (3, 2), (3, 4)])).unwrap();
        assert_eq!(d.sources, vec![1, 3]);
        assert_eq!(d.sinks, vec![2, 4]);
        assert!(d.fans.is_empty());
    }

    #[test]
    fn fans_through_cycle_vertices() {
        // 3-cycle 1,2,3 with 3 -> 4 -> 5
        let d = decompose(&q(5, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5)])).unwrap();
        assert_eq!(d.fans, vec![vec![3, 4, 5]]);
        assert_eq!(d.role(4), Role::FanInterior { fan: 1, position: 1 });
        assert_eq!(d.role(5), Role::Sink(1));
        assert_eq!(d.configs.len(), 1);
    }

    #[test]
    fn configs_and_tree() {
        let two = q(5, &[(2, 1), (1, 3), (3, 2), (3, 5), (5, 4), (4, 3)]);
        let cfgs = cycle_configs(&two);
        assert_eq!(cfgs.len(), 1);
        assert_eq!(cfgs[0].shared, vec![3]);
        assert!(cfgs[0].triangle_graph_is_tree());
        assert!(decompose(&q(4, &[(1, 2), (2, 3), (3, 4), (4, 1)])).is_err());
    }
}
