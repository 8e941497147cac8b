//! Directed cycle census and the cycle-sign classifications built on it.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Sidigraph, Sign};

/// Default cap on the number of cycles an enumeration may produce.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// A signed directed cycle, rotated to start at its smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleRecord {
    pub vertices: Vec<usize>,
    pub sign: Sign,
}

impl CycleRecord {
    /// Arc count (equal to vertex count).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn min_vertex(&self) -> usize {
        self.vertices[0]
    }

    /// Arcs of the cycle in traversal order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// Vertex set as a bit mask. Only valid for graphs of order <= 128.
    pub fn mask(&self) -> u128 {
        self.vertices.iter().fold(0u128, |m, &v| m | (1u128 << v))
    }

    /// Recomputes the sign from the host graph's arcs.
    pub fn sign_in(&self, s: &Sidigraph) -> Option<Sign> {
        self.arcs()
            .map(|(u, v)| s.sign(u, v))
            .try_fold(Sign::Positive, |acc, sg| sg.map(|sg| acc * sg))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleOptions {
    /// Longest cycle to report; `None` means no limit.
    pub max_len: Option<usize>,
    /// Enumeration fails once more than `cap` cycles have been found.
    pub cap: usize,
}

impl Default for CycleOptions {
    fn default() -> Self {
        CycleOptions {
            max_len: None,
            cap: DEFAULT_CYCLE_CAP,
        }
    }
}

/// Lists every directed cycle of `s` exactly once.
///
/// The output is sorted by length and then by the canonical vertex sequence.
/// Without a length limit the search is Johnson's blocking algorithm; with a
/// limit it is a depth-bounded path search (blocking is unsound when paths
/// are cut short).
pub fn enumerate_cycles(s: &Sidigraph, opts: CycleOptions) -> Result<Vec<CycleRecord>> {
    let mut out = Vec::new();
    let mut visit = |path: &[usize]| -> Result<()> {
        if out.len() >= opts.cap {
            return Err(Error::CycleBudgetExceeded { cap: opts.cap });
        }
        let sign = sign_of(s, path);
        out.push(CycleRecord {
            vertices: path.to_vec(),
            sign,
        });
        Ok(())
    };
    match opts.max_len {
        None => johnson(s, &mut visit)?,
        Some(limit) => bounded(s, limit, &mut visit)?,
    }
    out.sort_unstable_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    Ok(out)
}

fn sign_of(s: &Sidigraph, path: &[usize]) -> Sign {
    let k = path.len();
    (0..k).fold(Sign::Positive, |acc, i| {
        acc * s
            .sign(path[i], path[(i + 1) % k])
            .expect("cycle arcs come from the graph")
    })
}

struct Johnson<'a, F> {
    graph: &'a Sidigraph,
    start: usize,
    blocked: Vec<bool>,
    blockers: Vec<Vec<usize>>,
    path: Vec<usize>,
    visit: &'a mut F,
}

impl<F> Johnson<'_, F>
where
    F: FnMut(&[usize]) -> Result<()>,
{
    fn unblock(&mut self, u: usize) {
        self.blocked[u] = false;
        let waiting = core::mem::take(&mut self.blockers[u]);
        for w in waiting {
            if self.blocked[w] {
                self.unblock(w);
            }
        }
    }

    fn circuit(&mut self, v: usize) -> Result<bool> {
        let mut closed = false;
        self.path.push(v);
        self.blocked[v] = true;
        let n = self.graph.order();
        for w in self.start..n {
            if self.graph.entry(v, w) == 0 {
                continue;
            }
            if w == self.start {
                (self.visit)(&self.path)?;
                closed = true;
            } else if !self.blocked[w] && self.circuit(w)? {
                closed = true;
            }
        }
        if closed {
            self.unblock(v);
        } else {
            for w in self.start..n {
                if self.graph.entry(v, w) != 0 && !self.blockers[w].contains(&v) {
                    self.blockers[w].push(v);
                }
            }
        }
        self.path.pop();
        Ok(closed)
    }
}

fn johnson<F>(s: &Sidigraph, visit: &mut F) -> Result<()>
where
    F: FnMut(&[usize]) -> Result<()>,
{
    let n = s.order();
    let mut state = Johnson {
        graph: s,
        start: 0,
        blocked: vec![false; n],
        blockers: vec![Vec::new(); n],
        path: Vec::new(),
        visit,
    };
    for start in 0..n {
        state.start = start;
        for v in start..n {
            state.blocked[v] = false;
            state.blockers[v].clear();
        }
        state.circuit(start)?;
    }
    Ok(())
}

fn bounded<F>(s: &Sidigraph, limit: usize, visit: &mut F) -> Result<()>
where
    F: FnMut(&[usize]) -> Result<()>,
{
    fn extend<F>(
        s: &Sidigraph,
        limit: usize,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        visit: &mut F,
    ) -> Result<()>
    where
        F: FnMut(&[usize]) -> Result<()>,
    {
        let v = *path.last().expect("path starts non-empty");
        for w in start..s.order() {
            if s.entry(v, w) == 0 {
                continue;
            }
            if w == start {
                visit(path)?;
            } else if !on_path[w] && path.len() < limit {
                path.push(w);
                on_path[w] = true;
                extend(s, limit, start, path, on_path, visit)?;
                on_path[w] = false;
                path.pop();
            }
        }
        Ok(())
    }

    if limit < 2 {
        return Ok(());
    }
    let mut on_path = vec![false; s.order()];
    for start in 0..s.order() {
        let mut path = vec![start];
        on_path[start] = true;
        extend(s, limit, start, &mut path, &mut on_path, visit)?;
        on_path[start] = false;
    }
    Ok(())
}

/// Membership in the two bipartite sign classes plus cycle balance.
///
/// `in_delta1`: bipartite, every cycle of length 0 mod 4 negative and every
/// cycle of length 2 mod 4 positive. `in_delta2`: bipartite with every cycle
/// negative. `is_cycle_balanced`: every cycle positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeltaClass {
    pub in_delta1: bool,
    pub in_delta2: bool,
    pub is_bipartite: bool,
    pub is_cycle_balanced: bool,
}

pub fn classify(s: &Sidigraph) -> Result<DeltaClass> {
    classify_with(s, CycleOptions::default())
}

pub fn classify_with(s: &Sidigraph, opts: CycleOptions) -> Result<DeltaClass> {
    let cycles = enumerate_cycles(
        s,
        CycleOptions {
            max_len: None,
            ..opts
        },
    )?;
    Ok(classify_cycles(s.is_bipartite(), &cycles))
}

pub(crate) fn classify_cycles(is_bipartite: bool, cycles: &[CycleRecord]) -> DeltaClass {
    let alternating = cycles.iter().all(|c| match c.len() % 4 {
        0 => c.sign == Sign::Negative,
        2 => c.sign == Sign::Positive,
        _ => false,
    });
    let all_negative = cycles.iter().all(|c| c.sign == Sign::Negative);
    DeltaClass {
        in_delta1: is_bipartite && alternating,
        in_delta2: is_bipartite && all_negative,
        is_bipartite,
        is_cycle_balanced: cycles.iter().all(|c| c.sign == Sign::Positive),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Arc;

    fn signed_cycle(n: usize, negative_first: bool) -> Sidigraph {
        Sidigraph::new(
            n,
            (0..n).map(|i| {
                let sign = if i == 0 && negative_first {
                    Sign::Negative
                } else {
                    Sign::Positive
                };
                Arc::new(i, (i + 1) % n, sign)
            }),
        )
        .unwrap()
    }

    fn complete(n: usize) -> Sidigraph {
        let arcs = (0..n).flat_map(|u| {
            (0..n)
                .filter(move |&v| v != u)
                .map(move |v| Arc::positive(u, v))
        });
        Sidigraph::new(n, arcs).unwrap()
    }

    #[test]
    fn heterogeneous_digon_has_one_negative_cycle() {
        let s = Sidigraph::new(2, [Arc::positive(0, 1), Arc::negative(1, 0)]).unwrap();
        let cycles = enumerate_cycles(&s, CycleOptions::default()).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices, vec![0, 1]);
        assert_eq!(cycles[0].sign, Sign::Negative);
    }

    #[test]
    fn complete_digraph_cycle_counts() {
        // sum over k of C(n,k)(k-1)!
        for (n, expected) in [(3usize, 5usize), (4, 20), (5, 84), (6, 409)] {
            let g = complete(n);
            let all = enumerate_cycles(&g, CycleOptions::default()).unwrap();
            assert_eq!(all.len(), expected, "n = {n}");
            let bounded = enumerate_cycles(
                &g,
                CycleOptions {
                    max_len: Some(n),
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(all, bounded);
        }
    }

    #[test]
    fn length_limit_and_order() {
        let g = complete(4);
        let short = enumerate_cycles(
            &g,
            CycleOptions {
                max_len: Some(2),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(short.len(), 6);
        assert!(short.iter().all(|c| c.len() == 2));
        let all = enumerate_cycles(&g, CycleOptions::default()).unwrap();
        for pair in all.windows(2) {
            assert!((pair[0].len(), &pair[0].vertices) < (pair[1].len(), &pair[1].vertices));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = complete(5);
        let err = enumerate_cycles(
            &g,
            CycleOptions {
                max_len: None,
                cap: 10,
            },
        )
        .unwrap_err();
        assert_eq!(err, Error::CycleBudgetExceeded { cap: 10 });
    }

    #[test]
    fn digon_classification() {
        let neg = Sidigraph::new(2, [Arc::negative(0, 1), Arc::positive(1, 0)]).unwrap();
        let c = classify(&neg).unwrap();
        assert!(!c.in_delta1 && c.in_delta2 && !c.is_cycle_balanced);

        let pos = Sidigraph::from_sigraph(2, [(0, 1, Sign::Positive)]).unwrap();
        let c = classify(&pos).unwrap();
        assert!(c.in_delta1 && !c.in_delta2 && c.is_cycle_balanced);
    }

    #[test]
    fn negative_four_cycle_is_in_both_classes() {
        let c = classify(&signed_cycle(4, true)).unwrap();
        assert!(c.in_delta1 && c.in_delta2 && c.is_bipartite && !c.is_cycle_balanced);
    }

    #[test]
    fn acyclic_bipartite_is_vacuously_in_both() {
        let path = Sidigraph::new(3, [Arc::negative(0, 1), Arc::positive(1, 2)]).unwrap();
        let c = classify(&path).unwrap();
        assert!(c.in_delta1 && c.in_delta2 && c.is_cycle_balanced);
    }

    #[test]
    fn odd_cycle_excludes_classes() {
        let c = classify(&signed_cycle(3, true)).unwrap();
        assert!(!c.is_bipartite && !c.in_delta1 && !c.in_delta2);
    }
}
