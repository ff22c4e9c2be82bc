//! Directed distances and the Wiener index.
//!
//! A target that cannot be reached contributes distance 0, so `W(D)` is the
//! sum of `d(u, v)` over all ordered pairs with that convention. Every
//! [`DistanceVector`] also carries the reachability mask so a zero entry can
//! be told apart from the source itself.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::iter::Sum;
use core::ops::Add;

use num_rational::Ratio;

use crate::error::MetricsError;
use crate::grid::Digraph;

/// An exact Wiener index (or partial sum of distances).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WienerValue(pub u128);

impl WienerValue {
    pub const ZERO: WienerValue = WienerValue(0);

    pub fn get(self) -> u128 {
        self.0
    }
}

impl fmt::Display for WienerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl From<u64> for WienerValue {
    fn from(v: u64) -> Self {
        WienerValue(v.into())
    }
}

impl Add for WienerValue {
    type Output = WienerValue;

    fn add(self, rhs: Self) -> Self {
        WienerValue(self.0 + rhs.0)
    }
}

impl Sum for WienerValue {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(WienerValue::ZERO, Add::add)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceVector {
    pub source: usize,
    /// Shortest directed distance, 0 for the source and for unreachable targets.
    pub dist: Vec<u32>,
    pub reachable: Vec<bool>,
}

impl DistanceVector {
    pub fn total(&self) -> WienerValue {
        WienerValue(self.dist.iter().map(|&d| u128::from(d)).sum())
    }

    pub fn reached_count(&self) -> usize {
        self.reachable.iter().filter(|r| **r).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transmission {
    pub vertex: usize,
    pub value: WienerValue,
}

fn check_vertex(d: &Digraph, v: usize) -> Result<(), MetricsError> {
    if v >= d.vertex_count() {
        return Err(MetricsError::VertexOutOfRange { vertex: v, vertex_count: d.vertex_count() });
    }
    Ok(())
}

/// Reusable BFS buffers for all-pairs sweeps.
#[derive(Debug, Default)]
pub struct BfsScratch {
    dist: Vec<u32>,
    seen: Vec<bool>,
    queue: VecDeque<usize>,
}

impl BfsScratch {
    /// Runs one sweep from `source`, returning the sum of distances.
    fn sweep(&mut self, d: &Digraph, source: usize) -> u128 {
        let q = d.vertex_count();
        self.dist.clear();
        self.dist.resize(q, 0);
        self.seen.clear();
        self.seen.resize(q, false);
        self.queue.clear();
        self.seen[source] = true;
        self.queue.push_back(source);
        let mut total = 0u128;
        while let Some(u) = self.queue.pop_front() {
            let du = self.dist[u];
            total += u128::from(du);
            for &v in d.out_neighbors(u) {
                if !self.seen[v] {
                    self.seen[v] = true;
                    self.dist[v] = du + 1;
                    self.queue.push_back(v);
                }
            }
        }
        total
    }
}

pub fn distances_from(d: &Digraph, source: usize) -> Result<DistanceVector, MetricsError> {
    check_vertex(d, source)?;
    let mut scratch = BfsScratch::default();
    scratch.sweep(d, source);
    Ok(DistanceVector { source, dist: scratch.dist, reachable: scratch.seen })
}

pub fn transmission(d: &Digraph, u: usize) -> Result<Transmission, MetricsError> {
    check_vertex(d, u)?;
    let value = WienerValue(BfsScratch::default().sweep(d, u));
    Ok(Transmission { vertex: u, value })
}

pub fn transmissions(d: &Digraph) -> Vec<Transmission> {
    let mut scratch = BfsScratch::default();
    (0..d.vertex_count())
        .map(|u| Transmission { vertex: u, value: WienerValue(scratch.sweep(d, u)) })
        .collect()
}

/// `W(D)`, the sum of distances over all ordered vertex pairs.
pub fn wiener_index(d: &Digraph) -> WienerValue {
    let mut scratch = BfsScratch::default();
    WienerValue((0..d.vertex_count()).map(|u| scratch.sweep(d, u)).sum())
}

/// `W(D) / (q (q - 1))`, the mean over ordered pairs of distinct vertices.
pub fn average_distance(d: &Digraph) -> Result<Ratio<u128>, MetricsError> {
    let q = d.vertex_count();
    if q < 2 {
        return Err(MetricsError::TooFewVertices { vertex_count: q });
    }
    let pairs = (q as u128) * (q as u128 - 1);
    Ok(Ratio::new(wiener_index(d).0, pairs))
}

fn reaches_all(d: &Digraph, start: usize) -> bool {
    let mut seen = vec![false; d.vertex_count()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in d.out_neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == d.vertex_count()
}

/// Forward and backward reachability from vertex 0.
pub fn is_strongly_connected(d: &Digraph) -> bool {
    if d.vertex_count() <= 1 {
        return true;
    }
    reaches_all(d, 0) && reaches_all(&d.reversed(), 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_distances() {
        let p3 = Digraph::directed_path(3);
        let dv = distances_from(&p3, 0).unwrap();
        assert_eq!(dv.dist, [0, 1, 2]);
        let dv = distances_from(&p3, 2).unwrap();
        assert_eq!(dv.dist, [0, 0, 0]);
        assert_eq!(dv.reachable, [false, false, true]);
        assert!(distances_from(&p3, 3).is_err());
    }

    #[test]
    fn cycle_values() {
        let c4 = Digraph::directed_cycle(4);
        assert_eq!(wiener_index(&c4), WienerValue(24));
        for u in 0..4 {
            assert_eq!(transmission(&c4, u).unwrap().value, WienerValue(6));
        }
        assert_eq!(average_distance(&c4).unwrap(), Ratio::from_integer(2));
        assert!(is_strongly_connected(&c4));
    }

    #[test]
    fn path_transmissions() {
        let p3 = Digraph::directed_path(3);
        assert_eq!(transmission(&p3, 2).unwrap().value, WienerValue(0));
        for n in 2..10 {
            let p = Digraph::directed_path(n);
            let expect = (n * (n - 1) / 2) as u128;
            assert_eq!(transmission(&p, 0).unwrap().value, WienerValue(expect));
            assert!(!is_strongly_connected(&p));
        }
    }

    #[test]
    fn average_distance_small() {
        assert_eq!(average_distance(&Digraph::directed_path(2)).unwrap(), Ratio::new(1, 2));
        assert_eq!(
            average_distance(&Digraph::directed_path(1)),
            Err(MetricsError::TooFewVertices { vertex_count: 1 })
        );
    }

    #[test]
    fn transmissions_sum_to_wiener() {
        let g = Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 0), (2, 3), (4, 3)]).unwrap();
        let sum: WienerValue = transmissions(&g).iter().map(|t| t.value).sum();
        assert_eq!(sum, wiener_index(&g));
        assert!(!is_strongly_connected(&g));
    }
}
