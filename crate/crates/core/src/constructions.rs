//! Explicit constructions: signed cycles, the two equienergetic chord
//! families, Cartesian products and power families, and sign assignments
//! realising the two alternating classes on a bipartite digraph.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::cycles::{enumerate_cycles, CycleOptions};
use crate::error::{Error, Result};
use crate::graph::{Arc, Sidigraph, Sign};
use crate::poly::IntPolynomial;

/// Default largest order produced by [`cartesian_product`] and
/// [`power_family`].
pub const PRODUCT_ORDER_LIMIT: usize = 4096;

/// Directed `n`-cycle `0 → 1 → … → n-1 → 0`. A negative cycle has its single
/// negative arc at `(0, 1)`.
pub fn signed_cycle(n: usize, sign: Sign) -> Result<Sidigraph> {
    if n < 2 {
        return Err(Error::InvalidFamilySpec(format!(
            "cycle length {n} is below 2"
        )));
    }
    Sidigraph::new(
        n,
        (0..n).map(|i| {
            let s = if i == 0 { sign } else { Sign::Positive };
            Arc::new(i, (i + 1) % n, s)
        }),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// Even order: an `n`-cycle with a chord closing a `j`-cycle.
    ChordEven,
    /// Odd order: an `(n-1)`-cycle, a chord closing a `j`-cycle and a
    /// triangle through an extra vertex.
    ChordOdd,
    /// Iterated Cartesian products of two graphs.
    Power,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
    /// Chord parameter for the chord families.
    pub j: usize,
    /// Copy count for power families.
    pub k: usize,
}

impl FamilySpec {
    pub fn chord_even(n: usize, j: usize) -> Self {
        FamilySpec {
            kind: FamilyKind::ChordEven,
            n,
            j,
            k: 0,
        }
    }

    pub fn chord_odd(n: usize, j: usize) -> Self {
        FamilySpec {
            kind: FamilyKind::ChordOdd,
            n,
            j,
            k: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (n, j) = (self.n, self.j);
        let bad = |msg: &str| Err(Error::InvalidFamilySpec(format!("n={n}, j={j}: {msg}")));
        match self.kind {
            FamilyKind::ChordEven => {
                if n < 4 || n % 2 == 1 {
                    return bad("n must be even and at least 4");
                }
                if j % 2 == 0 || j < 3 || j > n - 1 {
                    return bad("j must be odd with 3 <= j <= n-1");
                }
            }
            FamilyKind::ChordOdd => {
                if n < 5 || n % 2 == 0 {
                    return bad("n must be odd and at least 5");
                }
                if j % 2 == 0 || j < 3 || j > n - 2 {
                    return bad("j must be odd with 3 <= j <= n-2");
                }
            }
            FamilyKind::Power => {
                if self.k == 0 {
                    return Err(Error::InvalidFamilySpec("power family needs k >= 1".into()));
                }
            }
        }
        Ok(())
    }

    /// All valid chord parameters for this kind and order.
    pub fn valid_chords(kind: FamilyKind, n: usize) -> Vec<usize> {
        (3..n)
            .step_by(2)
            .filter(|&j| FamilySpec { kind, n, j, k: 0 }.validate().is_ok())
            .collect()
    }
}

/// The two members of a chord family. Both share one arc set and differ only
/// in which arc is negative.
pub fn family_chord(spec: FamilySpec) -> Result<(Sidigraph, Sidigraph)> {
    spec.validate()?;
    let (n, j) = (spec.n, spec.j);
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(n + 3);
    match spec.kind {
        FamilyKind::ChordEven => {
            arcs.extend((0..n - 1).map(|i| (i, i + 1)));
            arcs.push((n - 1, 0));
            arcs.push((j - 1, 0));
        }
        FamilyKind::ChordOdd => {
            arcs.extend((0..n - 2).map(|i| (i, i + 1)));
            arcs.push((n - 2, 0));
            arcs.push((j - 1, 0));
            arcs.push((1, n - 1));
            arcs.push((n - 1, 0));
        }
        FamilyKind::Power => {
            return Err(Error::InvalidFamilySpec("not a chord family".into()));
        }
    }
    let build = |negative: (usize, usize)| {
        Sidigraph::new(
            n,
            arcs.iter().map(|&(u, v)| {
                let s = if (u, v) == negative {
                    Sign::Negative
                } else {
                    Sign::Positive
                };
                Arc::new(u, v, s)
            }),
        )
    };
    Ok((build((0, 1))?, build((j - 1, j))?))
}

/// Characteristic polynomials the chord family members must have.
pub fn family_chord_polynomials(spec: FamilySpec) -> Result<(IntPolynomial, IntPolynomial)> {
    spec.validate()?;
    let (n, j) = (spec.n, spec.j);
    let mut first = vec![0i64; n + 1];
    let mut second = vec![0i64; n + 1];
    first[n] = 1;
    second[n] = 1;
    match spec.kind {
        FamilyKind::ChordEven => {
            first[n - j] += 1;
            second[n - j] -= 1;
            first[0] += 1;
            second[0] += 1;
        }
        FamilyKind::ChordOdd => {
            for k in [n - 3, n - j] {
                first[k] += 1;
                second[k] -= 1;
            }
            first[1] += 1;
            second[1] += 1;
        }
        FamilyKind::Power => unreachable!("rejected by validate"),
    }
    Ok((
        IntPolynomial::from_ascending(&first),
        IntPolynomial::from_ascending(&second),
    ))
}

/// Cartesian product with vertex `(i, j)` at index `i·n₂ + j`. An arc moves
/// one coordinate and keeps the sign of the factor arc it moves along.
pub fn cartesian_product(s1: &Sidigraph, s2: &Sidigraph) -> Result<Sidigraph> {
    cartesian_product_bounded(s1, s2, PRODUCT_ORDER_LIMIT)
}

pub fn cartesian_product_bounded(
    s1: &Sidigraph,
    s2: &Sidigraph,
    bound: usize,
) -> Result<Sidigraph> {
    let (n1, n2) = (s1.order(), s2.order());
    let order = n1
        .checked_mul(n2)
        .filter(|&o| o <= bound)
        .ok_or(Error::SizeOverflow {
            order: n1.saturating_mul(n2),
            bound,
        })?;
    let mut arcs = Vec::with_capacity(s1.arc_count() * n2 + s2.arc_count() * n1);
    for a in s1.arcs() {
        for j in 0..n2 {
            arcs.push(Arc::new(a.tail * n2 + j, a.head * n2 + j, a.sign));
        }
    }
    for a in s2.arcs() {
        for i in 0..n1 {
            arcs.push(Arc::new(i * n2 + a.tail, i * n2 + a.head, a.sign));
        }
    }
    Sidigraph::new(order, arcs)
}

/// `S⁽ᵏ⁾ = s1 × … × s1 × s2 × … × s2` with `k` copies of `s1` and `n - k`
/// copies of `s2`, for `k = 1..=n`, multiplied left to right.
pub fn power_family(s1: &Sidigraph, s2: &Sidigraph, n: usize) -> Result<Vec<Sidigraph>> {
    if s1.order() != s2.order() {
        return Err(Error::OrderMismatch {
            left: s1.order(),
            right: s2.order(),
        });
    }
    if n == 0 {
        return Err(Error::InvalidFamilySpec("power family needs n >= 1".into()));
    }
    let order = (0..n).try_fold(1usize, |acc, _| acc.checked_mul(s1.order()));
    match order {
        Some(o) if o <= PRODUCT_ORDER_LIMIT => {}
        _ => {
            return Err(Error::SizeOverflow {
                order: order.unwrap_or(usize::MAX),
                bound: PRODUCT_ORDER_LIMIT,
            })
        }
    }
    (1..=n)
        .map(|k| {
            let mut acc = s1.clone();
            for idx in 1..n {
                let factor = if idx < k { s1 } else { s2 };
                acc = cartesian_product(&acc, factor)?;
            }
            Ok(acc)
        })
        .collect()
}

/// Target class for [`assign_signs_for_class`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignClass {
    /// Cycles of length `≡ 0 (mod 4)` negative, `≡ 2 (mod 4)` positive.
    Delta1,
    /// Every cycle negative.
    Delta2,
}

impl SignClass {
    /// Whether a cycle of this length must carry an odd number of negative
    /// arcs.
    fn wants_negative(self, len: usize) -> bool {
        match self {
            SignClass::Delta1 => len % 4 == 0,
            SignClass::Delta2 => true,
        }
    }
}

/// Signs the arcs of the bipartite digraph `d` so that every cycle has the
/// sign required by `target`, or `None` if no signing does. Each cycle gives
/// one parity equation over GF(2) in the arc signs; free arcs stay positive.
pub fn assign_signs_for_class(d: &Sidigraph, target: SignClass) -> Result<Option<Sidigraph>> {
    assign_signs_with(d, target, CycleOptions::default())
}

pub fn assign_signs_with(
    d: &Sidigraph,
    target: SignClass,
    opts: CycleOptions,
) -> Result<Option<Sidigraph>> {
    if !d.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let n = d.order();
    let m = d.arc_count();
    let mut arc_index = vec![usize::MAX; n * n];
    for (i, a) in d.arcs().iter().enumerate() {
        arc_index[a.tail * n + a.head] = i;
    }
    let cycles = enumerate_cycles(&d.underlying_digraph(), opts)?;
    let mut system = Gf2System::new(m);
    for c in &cycles {
        let mut row = system.empty_row();
        for (u, v) in c.arcs() {
            let i = arc_index[u * n + v];
            row[i / 64] ^= 1 << (i % 64);
        }
        if !system.insert(row, target.wants_negative(c.len())) {
            return Ok(None);
        }
    }
    let negative = system.solve();
    let signs: Vec<Sign> = negative
        .into_iter()
        .map(|x| if x { Sign::Negative } else { Sign::Positive })
        .collect();
    Ok(Some(d.with_signs(&signs)))
}

/// Incrementally reduced linear system over GF(2).
struct Gf2System {
    vars: usize,
    words: usize,
    rows: Vec<(usize, Vec<u64>, bool)>,
}

impl Gf2System {
    fn new(vars: usize) -> Self {
        Gf2System {
            vars,
            words: vars.div_ceil(64).max(1),
            rows: Vec::new(),
        }
    }

    fn empty_row(&self) -> Vec<u64> {
        vec![0; self.words]
    }

    /// Adds an equation; false if it contradicts the ones already present.
    fn insert(&mut self, mut row: Vec<u64>, mut rhs: bool) -> bool {
        for (pivot, r, b) in &self.rows {
            if row[pivot / 64] >> (pivot % 64) & 1 == 1 {
                for (x, y) in row.iter_mut().zip(r) {
                    *x ^= y;
                }
                rhs ^= b;
            }
        }
        match (0..self.vars).find(|&i| row[i / 64] >> (i % 64) & 1 == 1) {
            Some(pivot) => {
                self.rows.push((pivot, row, rhs));
                true
            }
            None => !rhs,
        }
    }

    /// A solution with every free variable zero. Later rows never contain
    /// earlier pivots, so back substitution runs in reverse insertion order.
    fn solve(&self) -> Vec<bool> {
        let mut x = vec![false; self.vars];
        for (pivot, row, rhs) in self.rows.iter().rev() {
            let mut value = *rhs;
            for i in 0..self.vars {
                if i != *pivot && row[i / 64] >> (i % 64) & 1 == 1 {
                    value ^= x[i];
                }
            }
            x[*pivot] = value;
        }
        x
    }
}
