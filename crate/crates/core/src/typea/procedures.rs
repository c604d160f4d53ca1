//! Constructive minimal-length maximal green sequences for type-A quivers.

use crate::engine::MutationSequence;
use crate::error::{structure, Error, Result};
use crate::quiver::{Quiver, VertexSet};
use crate::typea::regions::region_decomposition;
use crate::typea::structure::{check_type_a, cycle_configs, decompose, three_cycles, CycleConfig};

/// Sweeps a directed path `fan[0] -> fan[1] -> ...` from source to sink.
pub fn fan_mgs(q: &Quiver, fan: &[usize]) -> Result<MutationSequence> {
    if fan.is_empty() {
        return Err(structure("empty fan"));
    }
    for &v in fan {
        crate::quiver::check_vertex(v, q.n())?;
    }
    for w in fan.windows(2) {
        if q.b(w[0], w[1]) != 1 {
            return Err(structure(format!("no arrow {} -> {} in fan", w[0], w[1])));
        }
    }
    Ok(MutationSequence::new(fan.to_vec()))
}

/// All sources ascending, then all sinks ascending.
pub fn zigzag_mgs(q: &Quiver) -> Result<MutationSequence> {
    let mut sources = Vec::new();
    let mut sinks = Vec::new();
    for v in 1..=q.n() {
        if q.is_source(v) {
            sources.push(v);
        } else if q.is_sink(v) {
            sinks.push(v);
        } else {
            return Err(structure(format!("vertex {v} is neither a source nor a sink")));
        }
    }
    sources.extend(sinks);
    Ok(MutationSequence::new(sources))
}

/// Source sequence, then every fan's interior source side first, then sink sequence.
pub fn zigzag_fan_mgs(q: &Quiver) -> Result<MutationSequence> {
    let d = decompose(q)?;
    if !d.configs.is_empty() {
        return Err(structure("quiver contains an oriented 3-cycle"));
    }
    let mut seq = d.sources.clone();
    for i in 0..d.fans.len() {
        seq.extend_from_slice(d.fan_interior(i));
    }
    seq.extend_from_slice(&d.sinks);
    Ok(MutationSequence::new(seq))
}

/// Leaders outermost region first, then a full turn of the innermost
/// triangle starting at its smallest vertex, then follower/leader pairs
/// from the innermost region outwards.
pub fn cycle_config_mgs(cfg: &CycleConfig) -> Result<MutationSequence> {
    let r = region_decomposition(cfg)?;
    let mut seq = MutationSequence::default();
    for v in r.leaders() {
        seq.push(v);
    }
    // Arrows of T_m are untouched by leader mutations, so its original
    // orientation is the one in force here.
    let start = r.innermost.min_vertex();
    let second = r.innermost.successor(start);
    let third = r.innermost.successor(second);
    for v in [start, second, third, start] {
        seq.push(v);
    }
    for layer in r.layers.iter().rev() {
        for t in layer {
            seq.push(t.follower);
            seq.push(t.leader);
        }
    }
    Ok(seq)
}

/// Fans that make every external neighbour of `cfg` isolating. For each
/// vertex outside `cfg` with an arrow into `cfg` (ascending), the maximal
/// directed path of active vertices ending at it is swept source first.
/// Vertices already swept count as removed.
pub fn isolate(q: &Quiver, active: &VertexSet, cfg: &CycleConfig) -> Result<MutationSequence> {
    let in_any_cycle = cycle_vertex_flags(q);
    let mut non_isolating: Vec<usize> = active
        .iter()
        .filter(|&v| !cfg.contains(v) && cfg.vertices.iter().any(|&c| q.b(v, c) > 0))
        .collect();
    non_isolating.sort_unstable();

    let mut swept = VertexSet::none(q.n());
    let mut seq = MutationSequence::default();
    for v in non_isolating {
        if in_any_cycle[v] {
            return Err(Error::Precondition(format!(
                "vertex {v} joins two 3-cycle configurations by an arrow"
            )));
        }
        let mut path = vec![v];
        let mut cur = v;
        loop {
            let preds: Vec<usize> = q
                .in_neighbors(cur)
                .into_iter()
                .filter(|&p| active.contains(p) && !swept.contains(p) && !path.contains(&p))
                .collect();
            match preds[..] {
                [] => break,
                [p] if !in_any_cycle[p] && !cfg.contains(p) => {
                    path.push(p);
                    cur = p;
                }
                [p] => {
                    return Err(Error::Precondition(format!(
                        "vertex {v} is joined to the 3-cycle at {p} by a connecting fan"
                    )))
                }
                _ => return Err(Error::Precondition(format!("vertex {cur} has several incoming arrows"))),
            }
        }
        path.reverse();
        for &p in &path {
            swept.insert(p);
            seq.push(p);
        }
    }
    Ok(seq)
}

fn cycle_vertex_flags(q: &Quiver) -> Vec<bool> {
    let mut flags = vec![false; q.n() + 1];
    for t in three_cycles(q) {
        for v in t.0 {
            flags[v] = true;
        }
    }
    flags
}

/// Minimal-length maximal green sequence: repeatedly isolate an eligible
/// 3-cycle configuration (smallest vertex first), run the 3-cycle procedure
/// on it and drop the mutated vertices; finish with the zigzag-fan procedure
/// on what remains.
pub fn minimal_mgs(q: &Quiver) -> Result<MutationSequence> {
    check_type_a(q)?;
    let n = q.n();
    let mut active = VertexSet::full(n);
    let mut pending = cycle_configs(q);
    let mut seq = MutationSequence::default();
    while !pending.is_empty() {
        let mut chosen = None;
        for (i, cfg) in pending.iter().enumerate() {
            if let Ok(fans) = isolate(q, &active, cfg) {
                chosen = Some((i, fans));
                break;
            }
        }
        let (i, fans) = chosen.ok_or_else(|| structure("no 3-cycle configuration can be isolated"))?;
        let cfg = pending.remove(i);
        seq.extend(&fans);
        seq.extend(&cycle_config_mgs(&cfg)?);
        for &v in fans.steps().iter().chain(&cfg.vertices) {
            active.remove(v);
        }
    }
    let rest: Vec<usize> = active.iter().collect();
    let tail = zigzag_fan_mgs(&q.induced(&rest))?;
    for &v in tail.steps() {
        seq.push(rest[v - 1]);
    }
    Ok(seq)
}

/// `n + t`, with `t` the number of oriented 3-cycles.
pub fn minimal_length(q: &Quiver) -> Result<usize> {
    check_type_a(q)?;
    Ok(q.n() + three_cycles(q).len())
}
