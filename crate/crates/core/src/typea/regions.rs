//! Peeling a 3-cycle configuration into regions.
//!
//! Relative to a set of remaining triangles, a vertex is *shared* if it lies
//! in two of them, a *leader* is a non-shared vertex with an arrow to a
//! shared vertex of its triangle, and a *follower* is a non-shared vertex
//! with an arrow to a leader. Triangles with both a leader and a follower
//! are exactly the leaves of the triangle tree.

use crate::error::{structure, Result};
use crate::typea::structure::{CycleConfig, Triangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegionTriangle {
    pub triangle: Triangle,
    /// The vertex shared with the rest of the configuration when peeled.
    pub shared: usize,
    pub leader: usize,
    pub follower: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regions {
    /// The innermost triangle `T_m`.
    pub innermost: Triangle,
    /// `S`: vertex shared by `T_m` and the last peeled triangle.
    pub s: Option<usize>,
    /// `V_{m2}`: successor of `S` in `T_m`.
    pub vm2: Option<usize>,
    /// `V_{m1}`: successor of `V_{m2}` in `T_m`.
    pub vm1: Option<usize>,
    /// `R_1, R_2, ...`, outermost first; triangles within a layer ascending by leader.
    pub layers: Vec<Vec<RegionTriangle>>,
}

impl Regions {
    pub fn leaders(&self) -> impl Iterator<Item = usize> + '_ {
        self.layers.iter().flatten().map(|r| r.leader)
    }
}

fn count_in(remaining: &[Triangle], v: usize) -> usize {
    remaining.iter().filter(|t| t.contains(v)).count()
}

/// Leaf data of `t` relative to `remaining`, if `t` has exactly one shared vertex.
fn leaf(t: Triangle, remaining: &[Triangle]) -> Option<RegionTriangle> {
    let shared: Vec<usize> = t.0.iter().copied().filter(|&v| count_in(remaining, v) == 2).collect();
    let [s] = shared[..] else {
        return None;
    };
    Some(RegionTriangle {
        triangle: t,
        shared: s,
        leader: t.predecessor(s),
        follower: t.successor(s),
    })
}

pub fn region_decomposition(cfg: &CycleConfig) -> Result<Regions> {
    if cfg.triangles.is_empty() {
        return Err(structure("configuration has no 3-cycles"));
    }
    if !cfg.triangle_graph_is_tree() {
        return Err(structure("3-cycles of the configuration do not form a tree"));
    }
    if cfg.triangles.len() == 1 {
        return Ok(Regions {
            innermost: cfg.triangles[0],
            s: None,
            vm2: None,
            vm1: None,
            layers: Vec::new(),
        });
    }
    let all = &cfg.triangles;
    let innermost = all
        .iter()
        .copied()
        .filter(|&t| leaf(t, all).is_some())
        .min_by_key(|t| t.min_vertex())
        .ok_or_else(|| structure("no triangle has both a leader and a follower"))?;

    let mut remaining: Vec<Triangle> = all.clone();
    let mut layers = Vec::new();
    while remaining.len() > 1 {
        let mut layer: Vec<RegionTriangle> = remaining
            .iter()
            .copied()
            .filter(|&t| t != innermost)
            .filter_map(|t| leaf(t, &remaining))
            .collect();
        if layer.is_empty() {
            return Err(structure("region peeling stalled"));
        }
        layer.sort_by_key(|r| r.leader);
        remaining.retain(|t| !layer.iter().any(|r| r.triangle == *t));
        layers.push(layer);
    }
    let last = layers.last().expect("at least two triangles");
    let [neighbor] = last[..] else {
        return Err(structure("innermost triangle has more than one neighbour"));
    };
    let s = neighbor.shared;
    let vm2 = innermost.successor(s);
    let vm1 = innermost.successor(vm2);
    Ok(Regions {
        innermost,
        s: Some(s),
        vm2: Some(vm2),
        vm1: Some(vm1),
        layers,
    })
}
