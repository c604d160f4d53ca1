//! Exact integer quivers, framed seeds and Fomin–Zelevinsky mutation.
//!
//! A [`Quiver`] on mutable vertices `1..=n` is stored as its skew-symmetric
//! exchange matrix `b(i, j) = #(i -> j) - #(j -> i)`, so cancelling oriented
//! 2-cycles after a mutation comes for free. A [`Seed`] adds one frozen vertex
//! `j'` per mutable vertex together with the frozen block
//! `c(j, i) = #(j' -> i) - #(i -> j')`. Arrows between frozen vertices are
//! never stored: they stay absent along every sign-coherent mutation, and
//! [`Seed::mutate`] refuses to mutate at a column that is not sign-coherent.
//!
//! All vertex arguments in the public API are 1-based.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    n: usize,
    b: Vec<i32>,
}

impl Quiver {
    /// The quiver with `n` vertices and no arrows.
    pub fn empty(n: usize) -> Self {
        Quiver { n, b: vec![0; n * n] }
    }

    /// Builds a quiver from 1-based arrows `a -> b`. Repeated arrows add
    /// multiplicity; loops and oriented 2-cycles are rejected.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut q = Quiver::empty(n);
        for &(a, b) in arrows {
            check_vertex(a, n)?;
            check_vertex(b, n)?;
            if a == b {
                return Err(Error::Structure(format!("loop at vertex {a}")));
            }
            if q.b(b, a) > 0 {
                return Err(Error::Structure(format!("oriented 2-cycle between {a} and {b}")));
            }
            q.add(a - 1, b - 1, 1);
        }
        Ok(q)
    }

    /// Builds a quiver from a row-major `n x n` exchange matrix.
    pub fn from_matrix(n: usize, b: Vec<i32>) -> Result<Self> {
        if b.len() != n * n {
            return Err(Error::Structure(format!(
                "expected {} matrix entries, got {}",
                n * n,
                b.len()
            )));
        }
        for i in 0..n {
            if b[i * n + i] != 0 {
                return Err(Error::Structure(format!("loop at vertex {}", i + 1)));
            }
            for j in 0..i {
                if b[i * n + j] != -b[j * n + i] {
                    return Err(Error::Structure(format!(
                        "matrix is not skew-symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Quiver { n, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Signed arrow multiplicity between 1-based vertices `i` and `j`.
    ///
    /// # Panics
    /// If either vertex is out of range.
    pub fn b(&self, i: usize, j: usize) -> i32 {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n, "vertex out of range");
        self.b[(i - 1) * self.n + (j - 1)]
    }

    #[inline]
    pub(crate) fn at(&self, i: usize, j: usize) -> i32 {
        self.b[i * self.n + j]
    }

    fn add(&mut self, i: usize, j: usize, m: i32) {
        self.b[i * self.n + j] += m;
        self.b[j * self.n + i] -= m;
    }

    pub fn matrix(&self) -> &[i32] {
        &self.b
    }

    /// Arrows as `(source, target, multiplicity)`, sorted by source then target.
    pub fn arrows(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.at(i, j);
                if v > 0 {
                    out.push((i + 1, j + 1, v as u32));
                }
            }
        }
        out
    }

    /// Vertices joined to `v` by at least one arrow, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.n).filter(|&u| self.b(v, u) != 0).collect()
    }

    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.n).filter(|&u| self.b(v, u) > 0).collect()
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.n).filter(|&u| self.b(u, v) > 0).collect()
    }

    pub fn is_source(&self, v: usize) -> bool {
        (1..=self.n).all(|u| self.b(u, v) <= 0)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        (1..=self.n).all(|u| self.b(v, u) <= 0)
    }

    /// Matrix mutation at the 1-based vertex `k`:
    /// `b'(i,j) = -b(i,j)` if `k ∈ {i,j}`, otherwise
    /// `b(i,j) + sign(b(i,k)) * max(b(i,k) * b(k,j), 0)`.
    /// Entries that no longer fit in an `i32` give a resource error.
    pub fn mutate(&self, k: usize) -> Result<Quiver> {
        check_vertex(k, self.n)?;
        let k = k - 1;
        let n = self.n;
        let mut b = self.b.clone();
        for i in 0..n {
            let bik = self.at(i, k);
            if i == k || bik == 0 {
                continue;
            }
            for j in 0..n {
                if j == k {
                    continue;
                }
                let p = bik.checked_mul(self.at(k, j)).ok_or_else(overflow)?;
                if p > 0 {
                    b[i * n + j] = b[i * n + j].checked_add(bik.signum() * p).ok_or_else(overflow)?;
                }
            }
        }
        for j in 0..n {
            b[k * n + j] = -b[k * n + j];
            b[j * n + k] = -b[j * n + k];
        }
        Ok(Quiver { n, b })
    }

    /// Full subquiver on `vertices` (1-based), relabelled `1..` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Quiver {
        let m = vertices.len();
        let mut b = vec![0; m * m];
        for (x, &u) in vertices.iter().enumerate() {
            for (y, &v) in vertices.iter().enumerate() {
                b[x * m + y] = self.b(u, v);
            }
        }
        Quiver { n: m, b }
    }

    /// Disjoint union with `other`, whose vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Quiver) -> Quiver {
        let n = self.n + other.n;
        let mut q = Quiver::empty(n);
        for i in 0..self.n {
            for j in 0..self.n {
                q.b[i * n + j] = self.at(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                q.b[(i + self.n) * n + j + self.n] = other.at(i, j);
            }
        }
        q
    }

    /// Adds one arrow `a -> b` (1-based), cancelling against an opposite arrow.
    pub fn with_arrow(&self, a: usize, b: usize) -> Result<Quiver> {
        check_vertex(a, self.n)?;
        check_vertex(b, self.n)?;
        if a == b {
            return Err(Error::Structure(format!("loop at vertex {a}")));
        }
        let mut q = self.clone();
        q.add(a - 1, b - 1, 1);
        Ok(q)
    }

    /// Connected components of the underlying graph, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

fn overflow() -> Error {
    Error::Resource("arrow multiplicity overflows i32".into())
}

pub(crate) fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v == 0 || v > n {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexColor {
    Green,
    Red,
}

impl fmt::Display for VertexColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexColor::Green => f.write_str("green"),
            VertexColor::Red => f.write_str("red"),
        }
    }
}

/// A quiver extended by frozen vertices `1'..n'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Seed {
    quiver: Quiver,
    // c[j * n + i]: signed multiplicity of arrows (j+1)' -> (i+1)
    c: Vec<i32>,
}

impl Seed {
    /// Framed seed: one arrow `i -> i'` per vertex, all vertices green.
    pub fn framed(q: &Quiver) -> Seed {
        Self::with_diagonal(q, -1)
    }

    /// Coframed seed: one arrow `i' -> i` per vertex, all vertices red.
    pub fn coframed(q: &Quiver) -> Seed {
        Self::with_diagonal(q, 1)
    }

    fn with_diagonal(q: &Quiver, d: i32) -> Seed {
        let n = q.n();
        let mut c = vec![0; n * n];
        for i in 0..n {
            c[i * n + i] = d;
        }
        Seed { quiver: q.clone(), c }
    }

    /// Seed from a quiver and a row-major frozen block `c[(j-1)*n + (i-1)] = c(j, i)`.
    pub fn from_parts(quiver: Quiver, c: Vec<i32>) -> Result<Seed> {
        let n = quiver.n();
        if c.len() != n * n {
            return Err(Error::Structure(format!(
                "frozen block needs {} entries, got {}",
                n * n,
                c.len()
            )));
        }
        Ok(Seed { quiver, c })
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Signed multiplicity of arrows `j' -> i` (negative: `i -> j'`).
    pub fn c(&self, j: usize, i: usize) -> i32 {
        let n = self.n();
        assert!(i >= 1 && i <= n && j >= 1 && j <= n, "vertex out of range");
        self.c[(j - 1) * n + (i - 1)]
    }

    #[inline]
    fn c_at(&self, j: usize, i: usize) -> i32 {
        self.c[j * self.n() + i]
    }

    pub fn frozen_block(&self) -> &[i32] {
        &self.c
    }

    /// The c-vector of mutable vertex `i`: `(c(1,i), ..., c(n,i))`.
    pub fn c_vector(&self, i: usize) -> Vec<i32> {
        (1..=self.n()).map(|j| self.c(j, i)).collect()
    }

    /// Mutation at mutable vertex `k`. Indices `n+1..=2n` name the frozen
    /// vertices `1'..n'` and are refused.
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        let n = self.n();
        if k > n && k <= 2 * n {
            return Err(Error::FrozenMutation(k - n));
        }
        check_vertex(k, n)?;
        let k0 = k - 1;
        let (mut pos, mut neg) = (false, false);
        for j in 0..n {
            let v = self.c_at(j, k0);
            pos |= v > 0;
            neg |= v < 0;
        }
        if pos && neg {
            return Err(Error::Integrity(format!("sign-coherence violated at vertex {k}")));
        }
        let quiver = self.quiver.mutate(k)?;
        let mut c = self.c.clone();
        for j in 0..n {
            let cjk = self.c_at(j, k0);
            if cjk != 0 {
                for i in 0..n {
                    if i == k0 {
                        continue;
                    }
                    let p = cjk.checked_mul(self.quiver.at(k0, i)).ok_or_else(overflow)?;
                    if p > 0 {
                        c[j * n + i] = c[j * n + i].checked_add(cjk.signum() * p).ok_or_else(overflow)?;
                    }
                }
            }
            c[j * n + k0] = -cjk;
        }
        Ok(Seed { quiver, c })
    }

    /// Green iff no frozen vertex has an arrow into `i`; red iff `i` has no
    /// arrow into a frozen vertex. A mixed or zero column is an integrity error.
    pub fn color(&self, i: usize) -> Result<VertexColor> {
        check_vertex(i, self.n())?;
        let (mut pos, mut neg) = (false, false);
        for j in 0..self.n() {
            let v = self.c_at(j, i - 1);
            pos |= v > 0;
            neg |= v < 0;
        }
        match (pos, neg) {
            (false, true) => Ok(VertexColor::Green),
            (true, false) => Ok(VertexColor::Red),
            (true, true) => Err(Error::Integrity(format!("sign-coherence violated at vertex {i}"))),
            (false, false) => Err(Error::Integrity(format!("vertex {i} has no frozen arrows"))),
        }
    }

    pub fn colors(&self) -> Result<Vec<VertexColor>> {
        (1..=self.n()).map(|i| self.color(i)).collect()
    }

    pub fn green_vertices(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for i in 1..=self.n() {
            if self.color(i)? == VertexColor::Green {
                out.push(i);
            }
        }
        Ok(out)
    }

    pub fn is_all_red(&self) -> Result<bool> {
        Ok(self.green_vertices()?.is_empty())
    }

    pub fn is_all_green(&self) -> Result<bool> {
        Ok(self.green_vertices()?.len() == self.n())
    }

    /// True iff some permutation of the mutable vertices, fixing every frozen
    /// vertex, carries all arrows of `self` onto those of `other`.
    pub fn is_isomorphic_fixing_frozen(&self, other: &Seed) -> bool {
        let n = self.n();
        if other.n() != n {
            return false;
        }
        // Frozen vertices are fixed, so vertex i can only go to a vertex whose
        // c-vector and arrow-degree profile match.
        let profile = |s: &Seed, i: usize| {
            let mut degs: Vec<i32> = (0..n).map(|j| s.quiver.at(i, j)).collect();
            degs.sort_unstable();
            (s.c_vector(i + 1), degs)
        };
        let candidates: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                let p = profile(self, i);
                (0..n).filter(|&j| profile(other, j) == p).collect()
            })
            .collect();
        if candidates.iter().any(|c| c.is_empty()) {
            return false;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| candidates[i].len());
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_iso(other, &order, 0, &candidates, &mut image, &mut used)
    }

    fn extend_iso(
        &self,
        other: &Seed,
        order: &[usize],
        depth: usize,
        candidates: &[Vec<usize>],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for &w in &candidates[v] {
            if used[w] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| self.quiver.at(v, u) == other.quiver.at(w, image[u]));
            if !consistent {
                continue;
            }
            image[v] = w;
            used[w] = true;
            if self.extend_iso(other, order, depth + 1, candidates, image, used) {
                return true;
            }
            used[w] = false;
        }
        image[v] = usize::MAX;
        false
    }

    /// Deterministic byte encoding of the extended exchange matrix: `n`, then
    /// for every mutable column its mutable and frozen entries, each as a
    /// zigzag LEB128 varint. Equal seeds give equal keys and vice versa.
    pub fn canonical_key(&self) -> Vec<u8> {
        let n = self.n();
        let mut out = Vec::with_capacity(2 + 2 * n * n);
        push_varint(&mut out, n as u64);
        for i in 0..n {
            for j in 0..n {
                push_varint(&mut out, zigzag(self.quiver.at(j, i)));
            }
            for j in 0..n {
                push_varint(&mut out, zigzag(self.c_at(j, i)));
            }
        }
        out
    }
}

impl Seed {
    /// Key shared by exactly the seeds isomorphic to this one with frozen
    /// vertices fixed, provided the c-vectors are pairwise distinct (true for
    /// every seed reachable from a framed one). Mutable vertices are listed in
    /// lexicographic order of their c-vectors, then encoded as in
    /// [`Seed::canonical_key`].
    pub fn isomorphism_key(&self) -> Vec<u8> {
        let n = self.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| (0..n).map(|j| self.c_at(j, a)).cmp((0..n).map(|j| self.c_at(j, b))));
        let mut out = Vec::with_capacity(2 + 2 * n * n);
        push_varint(&mut out, n as u64);
        for &i in &order {
            for &j in &order {
                push_varint(&mut out, zigzag(self.quiver.at(j, i)));
            }
            for j in 0..n {
                push_varint(&mut out, zigzag(self.c_at(j, i)));
            }
        }
        out
    }
}

fn zigzag(v: i32) -> u64 {
    ((v << 1) ^ (v >> 31)) as u32 as u64
}

fn push_varint(out: &mut Vec<u8>, mut v: u64) {
    while v >= 0x80 {
        out.push((v as u8) | 0x80);
        v >>= 7;
    }
    out.push(v as u8);
}

/// A subset of the vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    members: Vec<bool>,
}

impl VertexSet {
    pub fn full(n: usize) -> Self {
        VertexSet { members: vec![true; n] }
    }

    pub fn none(n: usize) -> Self {
        VertexSet {
            members: vec![false; n],
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= self.members.len() && self.members[v - 1]
    }

    pub fn insert(&mut self, v: usize) {
        self.members[v - 1] = true;
    }

    pub fn remove(&mut self, v: usize) {
        self.members[v - 1] = false;
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_cycle() -> Quiver {
        Quiver::from_arrows(3, &[(1, 2), (2, 3), (3, 1)]).unwrap()
    }

    fn a2() -> Quiver {
        Quiver::from_arrows(2, &[(1, 2)]).unwrap()
    }

    #[test]
    fn multiplicity_overflow_is_an_error() {
        let mut q = Quiver::from_matrix(3, vec![0, 2, -4, -2, 0, 3, 4, -3, 0]).unwrap();
        let mut hit = false;
        for step in 0..40 {
            match q.mutate(step % 3 + 1) {
                Ok(next) => q = next,
                Err(e) => {
                    assert!(matches!(e, Error::Resource(_)));
                    hit = true;
                    break;
                }
            }
        }
        assert!(hit);
    }

    #[test]
    fn mutating_a_three_cycle_cancels_the_opposite_arrow() {
        let q = three_cycle().mutate(1).unwrap();
        let expected = Quiver::from_arrows(3, &[(2, 1), (1, 3)]).unwrap();
        assert_eq!(q, expected);
    }

    #[test]
    fn mutating_the_middle_of_a_path() {
        let path = Quiver::from_arrows(3, &[(1, 2), (2, 3)]).unwrap();
        let q = path.mutate(2).unwrap();
        let expected = Quiver::from_arrows(3, &[(2, 1), (3, 2), (1, 3)]).unwrap();
        assert_eq!(q, expected);
    }

    #[test]
    fn mutation_is_an_involution_on_a_three_cycle() {
        let q = three_cycle();
        for k in 1..=3 {
            assert_eq!(q.mutate(k).unwrap().mutate(k).unwrap(), q);
        }
    }

    #[test]
    fn out_of_range_vertex_is_rejected() {
        assert_eq!(
            three_cycle().mutate(4),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert!(three_cycle().mutate(0).is_err());
    }

    #[test]
    fn from_arrows_rejects_loops_and_two_cycles() {
        assert!(Quiver::from_arrows(2, &[(1, 1)]).is_err());
        assert!(Quiver::from_arrows(2, &[(1, 2), (2, 1)]).is_err());
        let double = Quiver::from_arrows(2, &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(double.b(1, 2), 2);
    }

    #[test]
    fn framed_a2_mutation_sequence() {
        let s = Seed::framed(&a2());
        let s1 = s.mutate(1).unwrap();
        // 2 -> 1, 1' -> 1, 2 -> 2'
        assert_eq!(s1.quiver().b(2, 1), 1);
        assert_eq!(s1.c(1, 1), 1);
        assert_eq!(s1.c(2, 2), -1);
        assert_eq!(s1.c(2, 1), 0);
        assert_eq!(s1.c(1, 2), 0);
        let s2 = s1.mutate(2).unwrap();
        assert_eq!(s2, Seed::coframed(&a2()));
    }

    #[test]
    fn single_vertex_mutation_reaches_coframed() {
        let q = Quiver::empty(1);
        assert_eq!(Seed::framed(&q).mutate(1).unwrap(), Seed::coframed(&q));
    }

    #[test]
    fn frozen_vertices_cannot_be_mutated() {
        let s = Seed::framed(&a2());
        assert_eq!(s.mutate(3), Err(Error::FrozenMutation(1)));
        assert_eq!(s.mutate(4), Err(Error::FrozenMutation(2)));
        assert!(matches!(s.mutate(5), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn frame_and_coframe_colors() {
        let q = three_cycle();
        let framed = Seed::framed(&q);
        assert!(framed.colors().unwrap().iter().all(|&c| c == VertexColor::Green));
        let coframed = Seed::coframed(&q);
        assert!(coframed.colors().unwrap().iter().all(|&c| c == VertexColor::Red));
        let empty = Seed::framed(&Quiver::empty(0));
        assert_eq!(empty.n(), 0);
        assert!(empty.is_all_red().unwrap());
    }

    #[test]
    fn color_after_one_mutation() {
        let s = Seed::framed(&a2()).mutate(1).unwrap();
        assert_eq!(s.color(1).unwrap(), VertexColor::Red);
        assert_eq!(s.color(2).unwrap(), VertexColor::Green);
    }

    #[test]
    fn three_cycle_mgs_ends_all_red() {
        let mut s = Seed::framed(&three_cycle());
        for k in [1, 2, 3, 1] {
            assert_eq!(s.color(k).unwrap(), VertexColor::Green);
            s = s.mutate(k).unwrap();
        }
        assert!(s.is_all_red().unwrap());
    }

    #[test]
    fn mixed_column_is_an_integrity_error() {
        let s = Seed::from_parts(Quiver::empty(2), vec![1, 0, -1, 1]).unwrap();
        assert!(matches!(s.color(1), Err(Error::Integrity(_))));
        assert!(matches!(s.mutate(1), Err(Error::Integrity(_))));
        assert_eq!(s.color(2).unwrap(), VertexColor::Red);
    }

    #[test]
    fn isomorphism_fixing_frozen() {
        let q = three_cycle();
        let mut s = Seed::framed(&q);
        for k in [1, 2, 3, 1] {
            s = s.mutate(k).unwrap();
        }
        assert!(s.is_isomorphic_fixing_frozen(&Seed::coframed(&q)));
        assert!(s.is_isomorphic_fixing_frozen(&s));
        let f = Seed::framed(&a2());
        assert!(!f.mutate(1).unwrap().is_isomorphic_fixing_frozen(&f));
    }

    #[test]
    fn isomorphism_needs_a_nontrivial_permutation() {
        // c = permutation matrix (1 2): vertex 1 carries 2' and vice versa.
        let q = Quiver::from_arrows(2, &[(1, 2)]).unwrap();
        let swapped_q = Quiver::from_arrows(2, &[(2, 1)]).unwrap();
        let a = Seed::from_parts(q, vec![0, 1, 1, 0]).unwrap();
        let b = Seed::from_parts(swapped_q.clone(), vec![1, 0, 0, 1]).unwrap();
        assert!(a.is_isomorphic_fixing_frozen(&b));
        let c = Seed::from_parts(swapped_q, vec![0, 1, 1, 0]).unwrap();
        assert!(!a.is_isomorphic_fixing_frozen(&c));
    }

    #[test]
    fn canonical_keys() {
        let s = Seed::framed(&a2());
        assert_eq!(s.canonical_key(), s.canonical_key());
        let back = s.mutate(1).unwrap().mutate(1).unwrap();
        assert_eq!(s.canonical_key(), back.canonical_key());
        assert_ne!(s.canonical_key(), s.mutate(1).unwrap().canonical_key());
    }

    #[test]
    fn isomorphism_keys() {
        let q = Quiver::from_arrows(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        let mut a = Seed::framed(&q);
        for k in [1, 2, 3, 1] {
            a = a.mutate(k).unwrap();
        }
        let b = Seed::coframed(&q);
        assert_eq!(a.isomorphism_key(), b.isomorphism_key());
        let f = Seed::framed(&q);
        assert_ne!(f.isomorphism_key(), b.isomorphism_key());
    }

    #[test]
    fn varint_keys_distinguish_large_multiplicities() {
        let a = Quiver::from_matrix(2, vec![0, 200, -200, 0]).unwrap();
        let b = Quiver::from_matrix(2, vec![0, 72, -72, 0]).unwrap();
        assert_ne!(Seed::framed(&a).canonical_key(), Seed::framed(&b).canonical_key());
    }

    #[test]
    fn components_and_induced() {
        let q = Quiver::from_arrows(5, &[(1, 2), (4, 5)]).unwrap();
        assert_eq!(q.components(), vec![vec![1, 2], vec![3], vec![4, 5]]);
        let sub = q.induced(&[4, 5]);
        assert_eq!(sub, Quiver::from_arrows(2, &[(1, 2)]).unwrap());
    }

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::full(4);
        s.remove(2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 4]);
        assert!(!s.contains(2) && !s.contains(0) && !s.contains(5));
        assert_eq!(s.len(), 3);
    }
}
