//! The signed digraph model and its structural predicates.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

use crate::error::{Error, Result};

/// Sign carried by an arc, a cycle, or a linear subsidigraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_i8(value: i8) -> Option<Sign> {
        match value {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A signed arc `tail -> head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub sign: Sign,
}

impl Arc {
    pub const fn new(tail: usize, head: usize, sign: Sign) -> Self {
        Arc { tail, head, sign }
    }

    pub const fn positive(tail: usize, head: usize) -> Self {
        Arc::new(tail, head, Sign::Positive)
    }

    pub const fn negative(tail: usize, head: usize) -> Self {
        Arc::new(tail, head, Sign::Negative)
    }
}

/// A signed digraph on vertices `0..order`.
///
/// Loops and parallel arcs are rejected at construction, and the value is
/// immutable afterwards: every transformation returns a new graph. Arcs are
/// kept in canonical order (by tail, then head).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sidigraph {
    order: usize,
    arcs: Vec<Arc>,
    // row-major n×n, entries in {-1, 0, 1}
    matrix: Vec<i8>,
}

impl fmt::Debug for Sidigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sidigraph({}; ", self.order)?;
        for (i, a) in self.arcs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}{}{}", a.tail, a.sign, a.head)?;
        }
        f.write_str(")")
    }
}

impl Sidigraph {
    pub fn new<I>(order: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = Arc>,
    {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut matrix = vec![0i8; order * order];
        let mut list = Vec::new();
        for arc in arcs {
            for v in [arc.tail, arc.head] {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
            }
            if arc.tail == arc.head {
                return Err(Error::SelfLoop { vertex: arc.tail });
            }
            let slot = &mut matrix[arc.tail * order + arc.head];
            if *slot != 0 {
                return Err(Error::DuplicateArc {
                    tail: arc.tail,
                    head: arc.head,
                });
            }
            *slot = arc.sign.to_i8();
            list.push(arc);
        }
        list.sort_unstable();
        Ok(Sidigraph {
            order,
            arcs: list,
            matrix,
        })
    }

    /// Graph without arcs.
    pub fn empty(order: usize) -> Result<Self> {
        Sidigraph::new(order, core::iter::empty())
    }

    /// Builds a graph from a dense matrix with entries in `{-1, 0, 1}`.
    pub fn from_matrix(order: usize, entries: &[i8]) -> Result<Self> {
        assert_eq!(entries.len(), order * order, "matrix shape");
        let mut arcs = Vec::new();
        for tail in 0..order {
            for head in 0..order {
                let e = entries[tail * order + head];
                if e == 0 {
                    continue;
                }
                let sign = Sign::from_i8(e).ok_or(Error::InvalidEdge { u: tail, v: head })?;
                arcs.push(Arc::new(tail, head, sign));
            }
        }
        Sidigraph::new(order, arcs)
    }

    /// Symmetric sidigraph of a sigraph: each signed edge becomes a pair of
    /// opposite arcs with the edge's sign.
    pub fn from_sigraph<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut arcs = Vec::new();
        for (u, v, sign) in edges {
            if u == v {
                return Err(Error::InvalidEdge { u, v });
            }
            arcs.push(Arc::new(u, v, sign));
            arcs.push(Arc::new(v, u, sign));
        }
        Sidigraph::new(order, arcs)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Entry `(tail, head)` of the adjacency matrix.
    #[inline]
    pub fn entry(&self, tail: usize, head: usize) -> i8 {
        self.matrix[tail * self.order + head]
    }

    pub fn sign(&self, tail: usize, head: usize) -> Option<Sign> {
        if tail >= self.order || head >= self.order {
            return None;
        }
        Sign::from_i8(self.entry(tail, head))
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.sign(tail, head).is_some()
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.matrix[v * self.order..(v + 1) * self.order];
        row.iter()
            .enumerate()
            .filter(|(_, e)| **e != 0)
            .map(|(w, _)| w)
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<i8>> {
        self.matrix
            .chunks(self.order)
            .map(|row| row.to_vec())
            .collect()
    }

    pub(crate) fn raw_matrix(&self) -> &[i8] {
        &self.matrix
    }

    pub fn negative_arcs(&self) -> impl Iterator<Item = &Arc> {
        self.arcs.iter().filter(|a| a.sign.is_negative())
    }

    fn map_signs(&self, f: impl Fn(Sign) -> Sign) -> Sidigraph {
        let arcs: Vec<Arc> = self
            .arcs
            .iter()
            .map(|a| Arc::new(a.tail, a.head, f(a.sign)))
            .collect();
        let mut matrix = vec![0i8; self.order * self.order];
        for a in &arcs {
            matrix[a.tail * self.order + a.head] = a.sign.to_i8();
        }
        Sidigraph {
            order: self.order,
            arcs,
            matrix,
        }
    }

    /// The sidigraph `-S`: every arc sign flipped.
    pub fn negate(&self) -> Sidigraph {
        self.map_signs(|s| -s)
    }

    /// The underlying unsigned digraph, as an all-positive sidigraph.
    pub fn underlying_digraph(&self) -> Sidigraph {
        self.map_signs(|_| Sign::Positive)
    }

    /// Same arcs with the given signs, in canonical arc order.
    pub fn with_signs(&self, signs: &[Sign]) -> Sidigraph {
        assert_eq!(signs.len(), self.arcs.len(), "one sign per arc");
        let arcs = self
            .arcs
            .iter()
            .zip(signs)
            .map(|(a, &s)| Arc::new(a.tail, a.head, s));
        Sidigraph::new(self.order, arcs).expect("arc set unchanged")
    }

    pub fn delete_arc(&self, tail: usize, head: usize) -> Result<Sidigraph> {
        if !self.has_arc(tail, head) {
            return Err(Error::MissingArc { tail, head });
        }
        let arcs = self
            .arcs
            .iter()
            .copied()
            .filter(|a| !(a.tail == tail && a.head == head));
        Sidigraph::new(self.order, arcs)
    }

    pub fn add_arc(&self, arc: Arc) -> Result<Sidigraph> {
        Sidigraph::new(self.order, self.arcs.iter().copied().chain([arc]))
    }

    /// True when every ordered pair of vertices is joined by a directed path.
    pub fn is_strongly_connected(&self) -> bool {
        let n = self.order;
        let reach = |forward: bool| {
            let mut seen = vec![false; n];
            let mut queue = VecDeque::from([0usize]);
            seen[0] = true;
            let mut count = 1;
            while let Some(v) = queue.pop_front() {
                for w in 0..n {
                    let e = if forward {
                        self.entry(v, w)
                    } else {
                        self.entry(w, v)
                    };
                    if e != 0 && !seen[w] {
                        seen[w] = true;
                        count += 1;
                        queue.push_back(w);
                    }
                }
            }
            count == n
        };
        reach(true) && reach(false)
    }

    /// Two-colouring of the underlying undirected graph, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.order;
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].expect("coloured on push");
                for w in 0..n {
                    if self.entry(v, w) == 0 && self.entry(w, v) == 0 {
                        continue;
                    }
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Every arc `(u, v, s)` is matched by `(v, u, s)`.
    pub fn is_symmetric(&self) -> bool {
        self.arcs
            .iter()
            .all(|a| self.entry(a.head, a.tail) == a.sign.to_i8())
    }

    pub fn is_all_positive(&self) -> bool {
        self.arcs.iter().all(|a| a.sign == Sign::Positive)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digon(s01: Sign, s10: Sign) -> Sidigraph {
        Sidigraph::new(2, [Arc::new(0, 1, s01), Arc::new(1, 0, s10)]).unwrap()
    }

    fn directed_cycle(n: usize) -> Sidigraph {
        Sidigraph::new(n, (0..n).map(|i| Arc::positive(i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn adjacency_entries() {
        assert_eq!(
            digon(Sign::Positive, Sign::Positive).adjacency_matrix(),
            vec![vec![0, 1], vec![1, 0]]
        );
        assert_eq!(
            digon(Sign::Negative, Sign::Positive).adjacency_matrix(),
            vec![vec![0, -1], vec![1, 0]]
        );
        assert_eq!(
            Sidigraph::empty(3).unwrap().adjacency_matrix(),
            vec![vec![0; 3]; 3]
        );
    }

    #[test]
    fn construction_rejects_bad_arcs() {
        assert_eq!(
            Sidigraph::new(2, [Arc::positive(1, 1)]),
            Err(Error::SelfLoop { vertex: 1 })
        );
        assert_eq!(
            Sidigraph::new(3, [Arc::positive(0, 1), Arc::negative(0, 1)]),
            Err(Error::DuplicateArc { tail: 0, head: 1 })
        );
        assert_eq!(
            Sidigraph::new(2, [Arc::positive(0, 2)]),
            Err(Error::VertexOutOfRange {
                vertex: 2,
                order: 2
            })
        );
        assert_eq!(Sidigraph::empty(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn negation_and_underlying() {
        let pos = digon(Sign::Positive, Sign::Positive);
        let neg = digon(Sign::Negative, Sign::Negative);
        assert_eq!(pos.negate(), neg);
        assert_eq!(neg.underlying_digraph(), pos);
        assert_eq!(pos.underlying_digraph(), pos);
        let empty = Sidigraph::empty(4).unwrap();
        assert_eq!(empty.negate(), empty);

        let tri = Sidigraph::new(
            3,
            [
                Arc::negative(0, 1),
                Arc::positive(1, 2),
                Arc::positive(2, 0),
            ],
        )
        .unwrap();
        let expected = Sidigraph::new(
            3,
            [
                Arc::positive(0, 1),
                Arc::negative(1, 2),
                Arc::negative(2, 0),
            ],
        )
        .unwrap();
        assert_eq!(tri.negate(), expected);
        assert_eq!(tri.negate().negate(), tri);
    }

    #[test]
    fn arc_deletion() {
        let d = digon(Sign::Positive, Sign::Positive);
        let single = d.delete_arc(1, 0).unwrap();
        assert_eq!(single.arcs(), &[Arc::positive(0, 1)]);
        assert_eq!(single.delete_arc(0, 1).unwrap().arc_count(), 0);
        assert_eq!(
            single.delete_arc(1, 0),
            Err(Error::MissingArc { tail: 1, head: 0 })
        );
    }

    #[test]
    fn strong_connectivity() {
        assert!(directed_cycle(3).is_strongly_connected());
        let path = Sidigraph::new(3, [Arc::positive(0, 1), Arc::positive(1, 2)]).unwrap();
        assert!(!path.is_strongly_connected());
        assert!(Sidigraph::empty(1).unwrap().is_strongly_connected());
        assert!(!Sidigraph::empty(2).unwrap().is_strongly_connected());
    }

    #[test]
    fn bipartiteness() {
        assert!(directed_cycle(4).is_bipartite());
        assert!(!directed_cycle(3).is_bipartite());
        assert!(Sidigraph::empty(3).unwrap().is_bipartite());
        let witness = directed_cycle(6).bipartition().unwrap();
        for a in directed_cycle(6).arcs() {
            assert_ne!(witness[a.tail], witness[a.head]);
        }
    }

    #[test]
    fn symmetry() {
        assert!(digon(Sign::Negative, Sign::Negative).is_symmetric());
        assert!(!digon(Sign::Negative, Sign::Positive).is_symmetric());
        assert!(!directed_cycle(3).is_symmetric());
    }

    #[test]
    fn sigraph_conversion() {
        let s = Sidigraph::from_sigraph(2, [(0, 1, Sign::Positive)]).unwrap();
        assert_eq!(s, digon(Sign::Positive, Sign::Positive));
        let tri = Sidigraph::from_sigraph(
            3,
            [
                (0, 1, Sign::Positive),
                (1, 2, Sign::Positive),
                (0, 2, Sign::Negative),
            ],
        )
        .unwrap();
        assert_eq!(tri.arc_count(), 6);
        assert!(tri.is_symmetric());
        assert_eq!(
            Sidigraph::from_sigraph(2, [(1, 1, Sign::Positive)]),
            Err(Error::InvalidEdge { u: 1, v: 1 })
        );
    }
}
