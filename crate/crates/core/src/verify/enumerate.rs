//! Exhaustive enumeration of the realisations of a degree sequence, up to
//! isomorphism.

use std::collections::BTreeMap;

use super::canon::canonical_labeling;
use super::{is_self_dual, planar_embed};
use crate::error::{Error, Result};
use crate::graph::{is_graphical, AbstractGraph, DegreeSequence};
use crate::planar_map::is_three_connected;

/// Order cap used when `SELFDUAL_ORDER_CAP` is unset or unparsable.
pub const DEFAULT_ORDER_CAP: usize = 11;

/// The order cap, read from `SELFDUAL_ORDER_CAP` when set.
pub fn default_order_cap() -> usize {
    std::env::var("SELFDUAL_ORDER_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
}

/// Which properties a realisation must have. Each flag implies the ones
/// listed before it: self-dual implies planar and 3-connected.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Filters {
    pub three_connected: bool,
    pub planar: bool,
    pub self_dual: bool,
}

impl Filters {
    pub fn none() -> Self {
        Filters::default()
    }

    pub fn polyhedral() -> Self {
        Filters { three_connected: true, planar: true, self_dual: false }
    }

    pub fn self_dual() -> Self {
        Filters { three_connected: true, planar: true, self_dual: true }
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationQuery {
    pub sequence: DegreeSequence,
    pub filters: Filters,
    /// Stop after this many classes.
    pub max_results: Option<usize>,
    pub order_cap: usize,
}

impl EnumerationQuery {
    pub fn new(sequence: DegreeSequence) -> Self {
        EnumerationQuery {
            sequence,
            filters: Filters::none(),
            max_results: None,
            order_cap: default_order_cap(),
        }
    }

    pub fn with_filters(mut self, filters: Filters) -> Self {
        self.filters = filters;
        self
    }

    pub fn with_max_results(mut self, n: usize) -> Self {
        self.max_results = Some(n);
        self
    }

    pub fn with_order_cap(mut self, cap: usize) -> Self {
        self.order_cap = cap;
        self
    }
}

/// One isomorphism class: its canonical graph and canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub graph: AbstractGraph,
    pub form: Vec<u8>,
}

/// Every isomorphism class of simple graphs with degree sequence
/// `q.sequence` passing `q.filters`, ordered by canonical form.
///
/// Vertices are saturated one at a time in non-increasing degree order. When
/// vertex `v` picks its later neighbours, unprocessed vertices with the same
/// target degree and the same neighbours so far are interchangeable, so only
/// the number taken from each such class is branched on. Each branch is
/// pruned by the Erdős–Gallai test on the residual degrees.
pub fn enumerate_realizations(q: &EnumerationQuery) -> Result<Vec<Realization>> {
    let degrees = q.sequence.entries().to_vec();
    let n = degrees.len();
    if q.sequence.sum() % 2 == 1 {
        return Err(Error::OddDegreeSum);
    }
    if n > q.order_cap || n > 64 {
        return Err(Error::OrderCapExceeded { order: n, cap: q.order_cap.min(64) });
    }
    let mut search = Search {
        degrees,
        filters: q.filters,
        max_results: q.max_results.unwrap_or(usize::MAX),
        seen: BTreeMap::new(),
        accepted: 0,
    };
    if is_graphical(&search.degrees) {
        let mut adj = vec![0u64; n];
        let mut residual = search.degrees.clone();
        search.vertex(0, &mut adj, &mut residual);
    }
    Ok(search
        .seen
        .into_iter()
        .filter_map(|(form, g)| g.map(|graph| Realization { graph, form }))
        .collect())
}

struct Search {
    degrees: Vec<usize>,
    filters: Filters,
    max_results: usize,
    /// Canonical form of every completed graph, with the canonical graph if
    /// it passed the filters.
    seen: BTreeMap<Vec<u8>, Option<AbstractGraph>>,
    accepted: usize,
}

impl Search {
    fn done(&self) -> bool {
        self.accepted >= self.max_results
    }

    fn vertex(&mut self, v: usize, adj: &mut [u64], residual: &mut [usize]) {
        let n = self.degrees.len();
        if self.done() {
            return;
        }
        if v == n {
            self.complete(adj);
            return;
        }
        if residual[v] == 0 {
            self.vertex(v + 1, adj, residual);
            return;
        }
        // candidate classes among later vertices with spare degree
        let mut classes: Vec<((usize, u64), Vec<usize>)> = Vec::new();
        for w in v + 1..n {
            if residual[w] == 0 {
                continue;
            }
            let key = (self.degrees[w], adj[w]);
            match classes.iter_mut().find(|(k, _)| *k == key) {
                Some((_, members)) => members.push(w),
                None => classes.push((key, vec![w])),
            }
        }
        let sizes: Vec<usize> = classes.iter().map(|(_, m)| m.len()).collect();
        if sizes.iter().sum::<usize>() < residual[v] {
            return;
        }
        let mut counts = vec![0; classes.len()];
        self.choose(v, 0, residual[v], &classes, &mut counts, adj, residual);
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &mut self,
        v: usize,
        class: usize,
        need: usize,
        classes: &[((usize, u64), Vec<usize>)],
        counts: &mut Vec<usize>,
        adj: &mut [u64],
        residual: &mut [usize],
    ) {
        if self.done() {
            return;
        }
        if need == 0 {
            let picked: Vec<usize> = classes
                .iter()
                .zip(counts.iter())
                .flat_map(|((_, members), &c)| members[..c].iter().copied())
                .collect();
            for &w in &picked {
                adj[v] |= 1 << w;
                adj[w] |= 1 << v;
                residual[w] -= 1;
            }
            let saved = residual[v];
            residual[v] = 0;
            if is_graphical(&residual[v + 1..]) {
                self.vertex(v + 1, adj, residual);
            }
            residual[v] = saved;
            for &w in &picked {
                adj[v] &= !(1 << w);
                adj[w] &= !(1 << v);
                residual[w] += 1;
            }
            return;
        }
        if class == classes.len() {
            return;
        }
        let rest: usize = classes[class + 1..].iter().map(|(_, m)| m.len()).sum();
        let size = classes[class].1.len();
        let lo = need.saturating_sub(rest);
        for c in (lo..=size.min(need)).rev() {
            counts[class] = c;
            self.choose(v, class + 1, need - c, classes, counts, adj, residual);
        }
        counts[class] = 0;
    }

    fn complete(&mut self, adj: &[u64]) {
        let n = adj.len();
        let mut g = AbstractGraph::new(n);
        for (u, &mask) in adj.iter().enumerate() {
            for w in u + 1..n {
                if mask >> w & 1 == 1 {
                    g.add_edge(u, w);
                }
            }
        }
        let canon = canonical_labeling(&g, None);
        if self.seen.contains_key(&canon.certificate) {
            return;
        }
        let graph = canon.apply(&g);
        let keep = passes(&graph, self.filters);
        if keep {
            self.accepted += 1;
        }
        self.seen.insert(canon.certificate, keep.then_some(graph));
    }
}

fn passes(g: &AbstractGraph, f: Filters) -> bool {
    let three_connected = f.three_connected || f.self_dual;
    let planar = f.planar || f.self_dual;
    if three_connected && !is_three_connected(g) {
        return false;
    }
    if !planar {
        return true;
    }
    if !g.is_connected() {
        return super::is_planar(g) && !f.self_dual;
    }
    let Some(map) = planar_embed(g) else {
        return false;
    };
    !f.self_dual || is_self_dual(&map).unwrap_or(false)
}
