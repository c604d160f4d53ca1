//! Exhaustive runs over all triangulations of a range of polygons.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::engine::{SearchGraph, SearchOptions};
use crate::error::Result;
use crate::triangulation::{enumerate_triangulations, mgs_endpoint_is_tau, peel_witnesses, Triangulation};
use crate::typea::{cycle_count, minimal_mgs};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    /// Position of the triangulation in the enumeration order of its polygon, from 0.
    pub id: usize,
    pub m: usize,
    pub n: usize,
    pub t: usize,
    pub length_min: usize,
    pub length_max: usize,
    pub spectrum: Vec<usize>,
    pub count: BigUint,
    pub minimal_sequence: Vec<usize>,
    /// The constructed sequence is a maximal green sequence of length `n + t`.
    pub minimal_ok: bool,
    /// Flipping along the constructed sequence ends at the rotated triangulation.
    pub tau_ok: bool,
    /// Every maximal green sequence passes the inscribed-polygon check;
    /// `None` when not computed for this polygon size.
    pub witness_ok: Option<bool>,
}

#[derive(Clone, Copy, Debug)]
pub struct CensusOptions {
    pub parallel: bool,
    /// Run the inscribed-polygon check on every sequence only up to this polygon size.
    pub witness_max_m: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            parallel: true,
            witness_max_m: 8,
        }
    }
}

pub fn census_row(id: usize, t: &Triangulation, opts: CensusOptions) -> Result<CensusRow> {
    let q = t.quiver();
    let witnesses = t.m() <= opts.witness_max_m;
    let mut search = SearchOptions::sequential();
    if witnesses {
        search = search.labeled();
    }
    let g = SearchGraph::build(&q, search)?;
    let spectrum = g.spectrum()?;
    let tc = cycle_count(&q);
    let minimal = minimal_mgs(&q)?;
    let minimal_ok = crate::engine::is_mgs(&q, &minimal) && minimal.len() == q.n() + tc;
    let tau_ok = minimal_ok && mgs_endpoint_is_tau(t, &minimal)?;
    let witness_ok = if witnesses {
        let mut ok = true;
        g.for_each_mgs(|s| {
            ok = peel_witnesses(t, &crate::engine::MutationSequence::new(s.to_vec())).is_some();
            ok
        })?;
        Some(ok)
    } else {
        None
    };
    Ok(CensusRow {
        id,
        m: t.m(),
        n: q.n(),
        t: tc,
        length_min: spectrum[0],
        length_max: *spectrum.last().expect("non-empty spectrum"),
        count: g.count_mgs()?,
        spectrum,
        minimal_sequence: minimal.into_vec(),
        minimal_ok,
        tau_ok,
        witness_ok,
    })
}

/// One row per triangulation, polygons in ascending size, enumeration order within.
pub fn census(ms: impl IntoIterator<Item = usize>, opts: CensusOptions) -> Result<Vec<CensusRow>> {
    let mut jobs = Vec::new();
    for m in ms {
        for (id, t) in enumerate_triangulations(m)?.into_iter().enumerate() {
            jobs.push((id, t));
        }
    }
    if opts.parallel {
        jobs.par_iter().map(|(id, t)| census_row(*id, t, opts)).collect()
    } else {
        jobs.iter().map(|(id, t)| census_row(*id, t, opts)).collect()
    }
}
