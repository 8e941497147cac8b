//! Verification suites behind `sidigraph check`.
//!
//! Each function checks one property over exhaustive or seeded random
//! inputs and returns a row with its outcome and the measured values.

use std::fmt;
use std::path::PathBuf;

use num_bigint::BigInt;
use rand::Rng;
use sidigraph_core::charpoly::{charpoly_exact, charpoly_minors};
use sidigraph_core::constructions::{
    assign_signs_for_class, cartesian_product, family_chord, family_chord_polynomials,
    power_family, FamilyKind, FamilySpec, SignClass,
};
use sidigraph_core::coulson::{
    arc_deletion_energy_delta, energy_coulson_general, energy_delta1, energy_delta2,
    quasi_order_compare, QuadratureSpec, QuasiOrderRelation,
};
use sidigraph_core::cycles::classify;
use sidigraph_core::fixtures::{builtin_fixtures, fixture_spec};
use sidigraph_core::linear::{
    charpoly_via_theorem, delta_form_of, neg_invariance_equivalences, verify_delta_form,
    LinearOptions,
};
use sidigraph_core::spectra::{
    classify_spectrum, cospectral, energy, energy_from_spectrum, roots, CLASS_TOL,
};
use sidigraph_core::{Arc, IntPolynomial, Result, Sidigraph};

use crate::fixtures::{default_fixture_dir, load_fixtures};
use crate::gen::{
    all_sidigraphs, random_bipartite_digraph, random_sidigraph, random_signs,
    random_strong_digraph, rng, slots,
};

/// Largest order of the exhaustive oracle comparisons.
pub const EXHAUSTIVE_ORDER: usize = 3;

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckRow {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckRow {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn from_result(name: &str, r: Result<CheckRow>) -> CheckRow {
        r.unwrap_or_else(|e| CheckRow::new(name, false, format!("error: {e}")))
    }
}

impl fmt::Display for CheckRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status}  {}: {}", self.name, self.detail)
    }
}

/// Sample counts, seeds and tolerances for the suites.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub seed: u64,
    /// Random graphs per order in the oracle comparison for orders 4 to 8.
    pub random_per_order: usize,
    /// Members generated for each of the two alternating classes.
    pub delta_members: usize,
    /// Strictly ordered subgraph pairs in the quasi-order check.
    pub order_pairs: usize,
    pub deletions: usize,
    /// Random class members in the integral-formula comparison.
    pub coulson_random: usize,
    pub product_pairs: usize,
    /// Digraphs per order in the bipartite symmetry check.
    pub symmetry_samples: usize,
    pub tol_class: f64,
    pub tol_energy: f64,
    pub quad: QuadratureSpec,
    pub fixture_dir: PathBuf,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 20_240_601,
            random_per_order: 1000,
            delta_members: 200,
            order_pairs: 100,
            deletions: 50,
            coulson_random: 100,
            product_pairs: 100,
            symmetry_samples: 200,
            tol_class: CLASS_TOL,
            tol_energy: 1e-4,
            quad: QuadratureSpec::default(),
            fixture_dir: default_fixture_dir(),
        }
    }
}

impl CheckConfig {
    /// A tenth of the default sample counts.
    pub fn quick() -> Self {
        let d = CheckConfig::default();
        CheckConfig {
            random_per_order: d.random_per_order / 10,
            delta_members: d.delta_members / 10,
            order_pairs: d.order_pairs / 10,
            deletions: d.deletions / 10,
            coulson_random: d.coulson_random / 10,
            product_pairs: d.product_pairs / 10,
            symmetry_samples: d.symmetry_samples / 10,
            ..d
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Oracle,
    DeltaForms,
    Coulson,
    ChordFamilies,
    Products,
    ReferenceValues,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Oracle,
        Suite::DeltaForms,
        Suite::Coulson,
        Suite::ChordFamilies,
        Suite::Products,
        Suite::ReferenceValues,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::DeltaForms => "delta-forms",
            Suite::Coulson => "coulson",
            Suite::ChordFamilies => "chord-families",
            Suite::Products => "products",
            Suite::ReferenceValues => "reference-values",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

pub fn run_suite(suite: Suite, cfg: &CheckConfig) -> Vec<CheckRow> {
    match suite {
        Suite::Oracle => {
            let mut rows = vec![oracle_exhaustive()];
            rows.extend(oracle_random(cfg));
            rows.push(negation_exhaustive());
            rows.push(bipartite_symmetry(cfg));
            rows
        }
        Suite::DeltaForms => vec![
            delta_forms(cfg, SignClass::Delta1),
            delta_forms(cfg, SignClass::Delta2),
            quasi_order_monotone(cfg),
            digon_deletion(cfg),
        ],
        Suite::Coulson => coulson_agreement(cfg),
        Suite::ChordFamilies => vec![chord_polynomials(), chord_equienergetic()],
        Suite::Products => vec![
            product_strong_connectivity(cfg),
            kronecker_sum(cfg),
            product_balance(cfg),
            power_families(),
        ],
        Suite::ReferenceValues => {
            let mut rows = reference_energies();
            rows.extend(fixture_spectra(cfg));
            rows
        }
    }
}

fn three_way(s: &Sidigraph) -> Result<bool> {
    let exact = charpoly_exact(s)?;
    Ok(exact == charpoly_minors(s, 12)?
        && exact == charpoly_via_theorem(s, LinearOptions::default())?)
}

/// Berkowitz, principal minors and the linear-subgraph expansion agree on
/// every sidigraph of order at most 3.
pub fn oracle_exhaustive() -> CheckRow {
    let name = "three methods agree on every sidigraph of order <= 3";
    CheckRow::from_result(
        name,
        (|| {
            let mut counts = Vec::new();
            let mut bad = 0usize;
            for n in 1..=EXHAUSTIVE_ORDER {
                let mut count = 0usize;
                for s in all_sidigraphs(n) {
                    count += 1;
                    if !three_way(&s)? {
                        bad += 1;
                    }
                }
                counts.push(format!("n={n}: {count}"));
            }
            Ok(CheckRow::new(
                name,
                bad == 0,
                format!("{}; {bad} disagreements", counts.join(", ")),
            ))
        })(),
    )
}

/// The same comparison on random graphs of orders 4 to 8.
pub fn oracle_random(cfg: &CheckConfig) -> Vec<CheckRow> {
    (4..=8)
        .map(|n| {
            let name = format!("three methods agree on random sidigraphs of order {n}");
            CheckRow::from_result(
                &name.clone(),
                (|| {
                    let mut r = rng(cfg.seed ^ n as u64);
                    let mut bad = 0usize;
                    for _ in 0..cfg.random_per_order {
                        let density = r.random_range(0.15..0.85);
                        if !three_way(&random_sidigraph(&mut r, n, density))? {
                            bad += 1;
                        }
                    }
                    Ok(CheckRow::new(
                        name,
                        bad == 0 && cfg.random_per_order > 0,
                        format!("{} graphs; {bad} disagreements", cfg.random_per_order),
                    ))
                })(),
            )
        })
        .collect()
}

/// Spectral symmetry, vanishing odd coefficients and the balanced type
/// census coincide on every sidigraph of order at most 3.
pub fn negation_exhaustive() -> CheckRow {
    let name = "negation-invariance conditions coincide on every sidigraph of order <= 3";
    CheckRow::from_result(
        name,
        (|| {
            let (mut total, mut invariant, mut bad) = (0usize, 0usize, 0usize);
            for n in 1..=EXHAUSTIVE_ORDER {
                for s in all_sidigraphs(n) {
                    let r = neg_invariance_equivalences(&s, LinearOptions::default())?;
                    total += 1;
                    invariant += usize::from(r.spec_invariant);
                    let agree = r.spec_invariant == r.odd_coeffs_zero
                        && r.odd_coeffs_zero == r.census_balanced;
                    bad += usize::from(!agree);
                }
            }
            Ok(CheckRow::new(
                name,
                bad == 0,
                format!("{total} graphs, {invariant} invariant; {bad} disagreements"),
            ))
        })(),
    )
}

/// A strongly connected all-positive digraph on at most 5 vertices is
/// bipartite exactly when its spectrum is symmetric about the origin.
pub fn bipartite_symmetry(cfg: &CheckConfig) -> CheckRow {
    let name = "strongly connected digraphs: bipartite iff spectrum symmetric (n <= 5)";
    CheckRow::from_result(
        name,
        (|| {
            let mut r = rng(cfg.seed.wrapping_add(17));
            let (mut bipartite, mut other, mut bad) = (0usize, 0usize, 0usize);
            for n in 2..=5 {
                let mut made = 0;
                let mut attempts = 0;
                while made < cfg.symmetry_samples && attempts < 100 * cfg.symmetry_samples.max(1) {
                    attempts += 1;
                    // alternate between general and bipartite candidates so both
                    // sides of the equivalence are exercised
                    let d = if made % 2 == 0 {
                        let density = r.random_range(0.0..0.6);
                        random_strong_digraph(&mut r, n, density)
                    } else {
                        random_bipartite_digraph(&mut r, n, 0.8)
                    };
                    if !d.is_strongly_connected() {
                        continue;
                    }
                    made += 1;
                    let report = neg_invariance_equivalences(&d, LinearOptions::default())?;
                    if d.is_bipartite() {
                        bipartite += 1;
                    } else {
                        other += 1;
                    }
                    bad += usize::from(d.is_bipartite() != report.spec_invariant);
                }
            }
            Ok(CheckRow::new(
                name,
                bad == 0 && bipartite > 0 && other > 0,
                format!("{bipartite} bipartite, {other} non-bipartite; {bad} violations"),
            ))
        })(),
    )
}

fn class_name(class: SignClass) -> &'static str {
    match class {
        SignClass::Delta1 => "delta1",
        SignClass::Delta2 => "delta2",
    }
}

/// Random members of `class` from bipartite digraphs of order 2 to 10.
fn class_members(
    cfg: &CheckConfig,
    class: SignClass,
    count: usize,
    salt: u64,
) -> Result<Vec<Sidigraph>> {
    let mut r = rng(cfg.seed ^ salt);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 50 * count.max(1) {
        attempts += 1;
        let n = r.random_range(2..=10);
        let density = r.random_range(0.2..0.6);
        let d = random_bipartite_digraph(&mut r, n, density);
        if d.arc_count() == 0 {
            continue;
        }
        if let Some(s) = assign_signs_for_class(&d, class)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// Members of each alternating class have the even coefficient form of
/// their class, with `c_2j` equal to the number of linear subgraphs of
/// order `2j`.
pub fn delta_forms(cfg: &CheckConfig, class: SignClass) -> CheckRow {
    let name = format!(
        "{} members have their even polynomial form",
        class_name(class)
    );
    CheckRow::from_result(
        &name.clone(),
        (|| {
            let members = class_members(cfg, class, cfg.delta_members, 0xde17a)?;
            let mut bad = 0usize;
            for s in &members {
                let c = classify(s)?;
                let in_class = match class {
                    SignClass::Delta1 => c.in_delta1,
                    SignClass::Delta2 => c.in_delta2,
                };
                let r = verify_delta_form(s, LinearOptions::default())?;
                let form = match class {
                    SignClass::Delta1 => r.form1_holds,
                    SignClass::Delta2 => r.form2_holds,
                };
                bad += usize::from(!(in_class && form && r.c_values_match_census));
            }
            Ok(CheckRow::new(
                name,
                bad == 0 && members.len() >= cfg.delta_members,
                format!("{} members; {bad} violations", members.len()),
            ))
        })(),
    )
}

/// Deleting arcs from a delta1 member never raises a coefficient `c_2j`,
/// and a strict decrease in the order strictly lowers the energy.
pub fn quasi_order_monotone(cfg: &CheckConfig) -> CheckRow {
    let name = "strictly smaller coefficients give strictly smaller energy (delta1)";
    CheckRow::from_result(
        name,
        (|| {
            let mut r = rng(cfg.seed ^ 0x0de7);
            let (mut strict, mut equal, mut bad) = (0usize, 0usize, 0usize);
            let mut smallest_gap = f64::INFINITY;
            let mut attempts = 0;
            while strict < cfg.order_pairs && attempts < 50 * cfg.order_pairs.max(1) {
                attempts += 1;
                let n = r.random_range(3..=9);
                let density = r.random_range(0.3..0.6);
                let d = random_bipartite_digraph(&mut r, n, density);
                if d.arc_count() < 2 {
                    continue;
                }
                let Some(big) = assign_signs_for_class(&d, SignClass::Delta1)? else {
                    continue;
                };
                let arc = big.arcs()[r.random_range(0..big.arc_count())];
                let small = big.delete_arc(arc.tail, arc.head)?;
                match quasi_order_compare(&small, &big)?.relation {
                    QuasiOrderRelation::PrecedesStrictly => {
                        strict += 1;
                        let gap = energy(&big)? - energy(&small)?;
                        smallest_gap = smallest_gap.min(gap);
                        bad += usize::from(gap <= 1e-9);
                    }
                    QuasiOrderRelation::Equal => equal += 1,
                    _ => bad += 1,
                }
            }
            Ok(CheckRow::new(
            name,
            bad == 0 && strict >= cfg.order_pairs,
            format!("{strict} strict pairs, {equal} equal; smallest energy gain {smallest_gap:.3e}; {bad} violations"),
        ))
        })(),
    )
}

/// Removing one arc of a digon from a delta1 member lowers the energy.
pub fn digon_deletion(cfg: &CheckConfig) -> CheckRow {
    let name = "deleting a digon arc lowers the energy (delta1)";
    CheckRow::from_result(
        name,
        (|| {
            let mut r = rng(cfg.seed ^ 0xd160);
            let (mut done, mut bad) = (0usize, 0usize);
            let mut attempts = 0;
            while done < cfg.deletions && attempts < 50 * cfg.deletions.max(1) {
                attempts += 1;
                let n = r.random_range(2..=9);
                let mut d = random_bipartite_digraph(&mut r, n, 0.3);
                let side = d.bipartition().expect("bipartite by construction");
                let across: Vec<(usize, usize)> = slots(n)
                    .into_iter()
                    .filter(|&(u, v)| side[u] != side[v])
                    .collect();
                if across.is_empty() {
                    continue;
                }
                let (a, b) = across[r.random_range(0..across.len())];
                for (u, v) in [(a, b), (b, a)] {
                    if !d.has_arc(u, v) {
                        d = d.add_arc(Arc::positive(u, v))?;
                    }
                }
                let Some(s) = assign_signs_for_class(&d, SignClass::Delta1)? else {
                    continue;
                };
                done += 1;
                bad += usize::from(!arc_deletion_energy_delta(&s, a, b)?.decreased);
            }
            Ok(CheckRow::new(
                name,
                bad == 0 && done >= cfg.deletions,
                format!("{done} deletions; {bad} violations"),
            ))
        })(),
    )
}

/// Integral formula against the spectrum for one polynomial.
fn coulson_gap(p: &IntPolynomial, quad: QuadratureSpec) -> Result<(f64, f64)> {
    let spectral = energy_from_spectrum(&roots(p)?);
    Ok((spectral, energy_coulson_general(p, quad)?))
}

pub fn coulson_agreement(cfg: &CheckConfig) -> Vec<CheckRow> {
    let mut rows = Vec::new();
    let named: [(&str, &[i64], Option<f64>); 4] = [
        ("z^2 + 1", &[1, 0, 1], Some(0.0)),
        ("z^2 - 1", &[1, 0, -1], Some(2.0)),
        (
            "z^4 + 1",
            &[1, 0, 0, 0, 1],
            Some(2.0 * std::f64::consts::SQRT_2),
        ),
        ("z^4 - z^2 + 1", &[1, 0, -1, 0, 1], Some(2.0 * 3f64.sqrt())),
    ];
    for (label, coeffs, exact) in named {
        let name = format!("integral energy of {label}");
        rows.push(CheckRow::from_result(
            &name.clone(),
            (|| {
                let p = IntPolynomial::from_leading_first(coeffs);
                let (spectral, integral) = coulson_gap(&p, cfg.quad)?;
                let mut ok = (spectral - integral).abs() <= cfg.tol_energy;
                let mut detail = format!("integral {integral:.10}, spectrum {spectral:.10}");
                if let Some(x) = exact {
                    ok &= (integral - x).abs() <= cfg.tol_energy;
                    detail.push_str(&format!(", exact {x:.10}"));
                }
                Ok(CheckRow::new(name, ok, detail))
            })(),
        ));
    }

    let name = "integral energy of chord-family polynomials (n <= 12)";
    rows.push(CheckRow::from_result(
        name,
        (|| {
            let (mut count, mut worst) = (0usize, 0f64);
            for spec in chord_specs(12) {
                let (p1, p2) = family_chord_polynomials(spec)?;
                for p in [p1, p2] {
                    let (a, b) = coulson_gap(&p, cfg.quad)?;
                    worst = worst.max((a - b).abs());
                    count += 1;
                }
            }
            Ok(CheckRow::new(
                name,
                worst <= cfg.tol_energy,
                format!("{count} polynomials; max deviation {worst:.3e}"),
            ))
        })(),
    ));

    let name = "integral energy of random delta1/delta2 members";
    rows.push(CheckRow::from_result(
        name,
        (|| {
            let half = cfg.coulson_random.div_ceil(2);
            let mut members = class_members(cfg, SignClass::Delta1, half, 0xc001)?;
            members.extend(class_members(
                cfg,
                SignClass::Delta2,
                cfg.coulson_random - half,
                0xc002,
            )?);
            let mut worst = 0f64;
            for s in &members {
                let p = charpoly_exact(s)?;
                let (a, b) = coulson_gap(&p, cfg.quad)?;
                worst = worst.max((a - b).abs());
            }
            Ok(CheckRow::new(
                name,
                worst <= cfg.tol_energy && members.len() >= cfg.coulson_random,
                format!("{} polynomials; max deviation {worst:.3e}", members.len()),
            ))
        })(),
    ));

    for class in [SignClass::Delta1, SignClass::Delta2] {
        let name = format!("even-form integral on {} members", class_name(class));
        rows.push(CheckRow::from_result(
            &name.clone(),
            (|| {
                let members = class_members(cfg, class, cfg.coulson_random, 0xe4e4)?;
                let mut worst = 0f64;
                for s in &members {
                    let p = charpoly_exact(s)?;
                    let (_, _, c) = delta_form_of(&p);
                    let form = match class {
                        SignClass::Delta1 => energy_delta1(&c, s.order(), cfg.quad)?,
                        SignClass::Delta2 => energy_delta2(&c, s.order(), cfg.quad)?,
                    };
                    worst = worst.max((form - energy_from_spectrum(&roots(&p)?)).abs());
                }
                Ok(CheckRow::new(
                    name,
                    worst <= cfg.tol_energy && members.len() >= cfg.coulson_random,
                    format!("{} members; max deviation {worst:.3e}", members.len()),
                ))
            })(),
        ));
    }
    rows
}

/// Every valid chord-family specification with `n <= max_n`.
pub fn chord_specs(max_n: usize) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in 4..=max_n {
        let kind = if n % 2 == 0 {
            FamilyKind::ChordEven
        } else {
            FamilyKind::ChordOdd
        };
        for j in FamilySpec::valid_chords(kind, n) {
            specs.push(match kind {
                FamilyKind::ChordEven => FamilySpec::chord_even(n, j),
                _ => FamilySpec::chord_odd(n, j),
            });
        }
    }
    specs
}

/// The polynomials each chord family is constructed to have, built
/// directly from their closed forms.
pub fn chord_expected(spec: FamilySpec) -> (IntPolynomial, IntPolynomial) {
    let (n, j) = (spec.n, spec.j);
    let mut first = vec![BigInt::from(0); n + 1];
    let mut second = first.clone();
    first[n] += 1;
    second[n] += 1;
    match spec.kind {
        FamilyKind::ChordEven => {
            first[n - j] += 1;
            second[n - j] -= 1;
            first[0] += 1;
            second[0] += 1;
        }
        _ => {
            for k in [n - 3, n - j] {
                first[k] += 1;
                second[k] -= 1;
            }
            first[1] += 1;
            second[1] += 1;
        }
    }
    (IntPolynomial::new(first), IntPolynomial::new(second))
}

/// Even orders 4 to 12 and odd orders 5 to 11, every valid chord.
fn reference_chord_specs() -> Vec<FamilySpec> {
    chord_specs(12)
}

pub fn chord_polynomials() -> CheckRow {
    let name = "chord families have their closed-form polynomials";
    CheckRow::from_result(
        name,
        (|| {
            let (mut count, mut bad) = (0usize, Vec::new());
            for spec in reference_chord_specs() {
                let (s1, s2) = family_chord(spec)?;
                let (e1, e2) = chord_expected(spec);
                count += 1;
                if charpoly_exact(&s1)? != e1 || charpoly_exact(&s2)? != e2 {
                    bad.push(format!("n={} j={}", spec.n, spec.j));
                }
            }
            Ok(CheckRow::new(
                name,
                bad.is_empty(),
                format!("{count} pairs exact; mismatches: [{}]", bad.join(", ")),
            ))
        })(),
    )
}

pub fn chord_equienergetic() -> CheckRow {
    let name = "chord-family pairs are noncospectral and equienergetic";
    CheckRow::from_result(
        name,
        (|| {
            let (mut count, mut worst, mut bad) = (0usize, 0f64, 0usize);
            for spec in reference_chord_specs() {
                let (s1, s2) = family_chord(spec)?;
                count += 1;
                let gap = (energy(&s1)? - energy(&s2)?).abs();
                worst = worst.max(gap);
                bad += usize::from(cospectral(&s1, &s2)? || gap > 1e-9);
            }
            Ok(CheckRow::new(
                name,
                bad == 0,
                format!("{count} pairs; max energy gap {worst:.3e}; {bad} violations"),
            ))
        })(),
    )
}

pub fn product_strong_connectivity(cfg: &CheckConfig) -> CheckRow {
    let name = "products of strongly connected sidigraphs are strongly connected";
    CheckRow::from_result(
        name,
        (|| {
            let mut r = rng(cfg.seed ^ 0x9a1);
            let mut bad = 0usize;
            for _ in 0..cfg.product_pairs {
                let (n1, n2) = random_factor_orders(&mut r, 64);
                let density = r.random_range(0.0..0.4);
                let d1 = random_strong_digraph(&mut r, n1, density);
                let s1 = random_signs(&mut r, &d1);
                let d2 = random_strong_digraph(&mut r, n2, density);
                let s2 = random_signs(&mut r, &d2);
                bad += usize::from(!cartesian_product(&s1, &s2)?.is_strongly_connected());
            }
            Ok(CheckRow::new(
                name,
                bad == 0 && cfg.product_pairs > 0,
                format!("{} pairs; {bad} violations", cfg.product_pairs),
            ))
        })(),
    )
}

fn random_factor_orders(r: &mut impl Rng, max_product: usize) -> (usize, usize) {
    loop {
        let n1 = r.random_range(1..=8);
        let n2 = r.random_range(1..=8);
        if n1 * n2 <= max_product && n1 * n2 > 1 {
            return (n1, n2);
        }
    }
}

/// The product adjacency matrix equals `A₁ ⊗ I + I ⊗ A₂` entry by entry.
pub fn kronecker_sum(cfg: &CheckConfig) -> CheckRow {
    let name = "product adjacency is the Kronecker sum";
    CheckRow::from_result(
        name,
        (|| {
            let mut r = rng(cfg.seed ^ 0x4b5);
            let mut bad = 0usize;
            for _ in 0..cfg.product_pairs {
                let (n1, n2) = random_factor_orders(&mut r, 64);
                let s1 = random_sidigraph(&mut r, n1, 0.5);
                let s2 = random_sidigraph(&mut r, n2, 0.5);
                let p = cartesian_product(&s1, &s2)?;
                let (a1, a2) = (s1.adjacency_matrix(), s2.adjacency_matrix());
                let ap = p.adjacency_matrix();
                for i in 0..n1 {
                    for j in 0..n2 {
                        for k in 0..n1 {
                            for l in 0..n2 {
                                let want = if j == l { a1[i][k] } else { 0 }
                                    + if i == k { a2[j][l] } else { 0 };
                                bad += usize::from(ap[i * n2 + j][k * n2 + l] != want);
                            }
                        }
                    }
                }
            }
            Ok(CheckRow::new(
                name,
                bad == 0 && cfg.product_pairs > 0,
                format!("{} pairs; {bad} differing entries", cfg.product_pairs),
            ))
        })(),
    )
}

/// A product is cycle balanced exactly when both factors are. Balance is
/// read off as equality with the underlying digraph's polynomial.
pub fn product_balance(cfg: &CheckConfig) -> CheckRow {
    let name = "product is cycle balanced iff both factors are (n1*n2 <= 16)";
    CheckRow::from_result(
        name,
        (|| {
            let balanced = |s: &Sidigraph| -> Result<bool> {
                Ok(charpoly_exact(s)? == charpoly_exact(&s.underlying_digraph())?)
            };
            let mut r = rng(cfg.seed ^ 0xba1);
            let (mut both, mut bad) = (0usize, 0usize);
            for i in 0..cfg.product_pairs {
                let (n1, n2) = random_factor_orders(&mut r, 16);
                let mut s1 = random_strong_digraph(&mut r, n1, 0.3);
                let mut s2 = random_strong_digraph(&mut r, n2, 0.3);
                // keep the balanced case frequent by signing only some pairs
                if i % 3 != 0 {
                    s1 = random_signs(&mut r, &s1);
                }
                if i % 3 == 1 {
                    s2 = random_signs(&mut r, &s2);
                }
                let (b1, b2) = (balanced(&s1)?, balanced(&s2)?);
                both += usize::from(b1 && b2);
                bad += usize::from(balanced(&cartesian_product(&s1, &s2)?)? != (b1 && b2));
            }
            Ok(CheckRow::new(
                name,
                bad == 0 && both > 0 && both < cfg.product_pairs,
                format!(
                    "{} pairs, {both} with both factors balanced; {bad} violations",
                    cfg.product_pairs
                ),
            ))
        })(),
    )
}

/// Power families of order 16 built from the cospectral fixtures are
/// pairwise cospectral.
pub fn power_families() -> CheckRow {
    let name = "order-16 power families are pairwise cospectral";
    CheckRow::from_result(
        name,
        (|| {
            let fixtures = builtin_fixtures()?;
            let pairs = [
                ("thm211_s1", "thm211_s2"),
                ("thm212_s1", "thm212_s3"),
                ("thm213_s2", "thm213_s3"),
            ];
            let mut bad = 0usize;
            let mut members = 0usize;
            for (a, b) in pairs {
                let family = power_family(&fixtures[a], &fixtures[b], 2)?;
                let polys = family
                    .iter()
                    .map(charpoly_exact)
                    .collect::<Result<Vec<_>>>()?;
                members += family.len();
                bad += usize::from(polys.windows(2).any(|w| w[0] != w[1]));
                bad += family
                    .iter()
                    .filter(|s| s.order() != 16 || !s.is_strongly_connected())
                    .count();
            }
            Ok(CheckRow::new(
                name,
                bad == 0,
                format!(
                    "{} families, {members} members; {bad} violations",
                    pairs.len()
                ),
            ))
        })(),
    )
}

pub fn reference_energies() -> Vec<CheckRow> {
    let cases: [(&str, &[i64], f64, f64); 3] = [
        ("z^6 + 2z^4 + 1", &[1, 0, 2, 0, 0, 0, 1], 2.4916, 5e-4),
        ("z^6 + z^4 + 1", &[1, 0, 1, 0, 0, 0, 1], 2.9104, 5e-4),
        ("z^6 + z^4 - z^2 - 1", &[1, 0, 1, 0, -1, 0, -1], 2.0, 1e-9),
    ];
    let mut rows: Vec<CheckRow> = cases
        .iter()
        .map(|&(label, coeffs, want, tol)| {
            let name = format!("energy({label}) = {want} +- {tol:e}");
            CheckRow::from_result(
                &name.clone(),
                (|| {
                    let e =
                        energy_from_spectrum(&roots(&IntPolynomial::from_leading_first(coeffs))?);
                    Ok(CheckRow::new(
                        name,
                        (e - want).abs() <= tol,
                        format!("{e:.12}"),
                    ))
                })(),
            )
        })
        .collect();

    let name = "energy(z^6 + z^3 + 1) equals the ninth-root-of-unity cosine sum";
    rows.push(CheckRow::from_result(
        name,
        (|| {
            let want: f64 = [1, 2, 4, 5, 7, 8]
                .iter()
                .map(|&k| (2.0 * std::f64::consts::PI * k as f64 / 9.0).cos().abs())
                .sum();
            let e = energy_from_spectrum(&roots(&IntPolynomial::from_leading_first(&[
                1, 0, 0, 1, 0, 0, 1,
            ]))?);
            Ok(CheckRow::new(
                name,
                (e - want).abs() <= 1e-9,
                format!("{e:.12} vs {want:.12}"),
            ))
        })(),
    ));

    for (label, coeffs) in [
        ("z^17 + 3z^11 + z^5", [1, 3, 1]),
        ("z^17 + z^11 + z^5", [1, 1, 1]),
    ] {
        let name = format!("roots of {label} have residual <= 1e-10");
        rows.push(CheckRow::from_result(
            &name.clone(),
            (|| {
                let mut c = vec![0i64; 18];
                c[0] = coeffs[0];
                c[6] = coeffs[1];
                c[12] = coeffs[2];
                let sp = roots(&IntPolynomial::from_leading_first(&c))?;
                let res = sp.max_residual();
                Ok(CheckRow::new(
                    name,
                    res <= 1e-10 && sp.len() == 17,
                    format!("{} roots, max residual {res:.3e}", sp.len()),
                ))
            })(),
        ));
    }
    rows
}

/// Matches `got` to `want` one to one, each within `tol`.
fn spectra_match(got: &[(f64, f64)], want: &[(f64, f64)], tol: f64) -> bool {
    if got.len() != want.len() {
        return false;
    }
    let mut used = vec![false; want.len()];
    got.iter().all(|&(re, im)| {
        let hit =
            (0..want.len()).find(|&k| !used[k] && (want[k].0 - re).hypot(want[k].1 - im) <= tol);
        if let Some(k) = hit {
            used[k] = true;
        }
        hit.is_some()
    })
}

/// Built-in and on-disk fixtures validate and have the expected spectra
/// and spectrum classes.
pub fn fixture_spectra(cfg: &CheckConfig) -> Vec<CheckRow> {
    let mut rows = Vec::new();
    let name = "fixture files load and validate";
    rows.push(CheckRow::from_result(
        name,
        (|| {
            let builtin = builtin_fixtures()?;
            match load_fixtures(&cfg.fixture_dir) {
                Ok(files) => {
                    let same = files == builtin;
                    Ok(CheckRow::new(
                        name,
                        same,
                        format!(
                            "{} files in {}; identical to built-ins: {same}",
                            files.len(),
                            cfg.fixture_dir.display()
                        ),
                    ))
                }
                Err(e) => Ok(CheckRow::new(name, false, e.to_string())),
            }
        })(),
    ));

    let r2 = std::f64::consts::SQRT_2;
    let families: [(&str, &[&str], Vec<(f64, f64)>, [bool; 3]); 3] = [
        (
            "integral",
            &["thm211_s1", "thm211_s2"],
            vec![(-2.0, 0.0), (0.0, 0.0), (1.0, 0.0), (1.0, 0.0)],
            [true, true, true],
        ),
        (
            "real",
            &["thm212_s1", "thm212_s2", "thm212_s3"],
            vec![(-r2, 0.0), (-1.0, 0.0), (1.0, 0.0), (r2, 0.0)],
            [false, true, false],
        ),
        (
            "gaussian",
            &["thm213_s1", "thm213_s2", "thm213_s3"],
            vec![(-1.0, 0.0), (1.0, 0.0), (0.0, -1.0), (0.0, 1.0)],
            [false, false, true],
        ),
    ];
    for (label, names, want, [integral, real, gaussian]) in families {
        let name = format!("{label} fixture family: spectrum and class");
        rows.push(CheckRow::from_result(
            &name.clone(),
            (|| {
                let fixtures = builtin_fixtures()?;
                let mut bad = Vec::new();
                for &fname in names {
                    let s = &fixtures[fname];
                    let spec = fixture_spec(fname).expect("listed fixture exists");
                    let sp = roots(&charpoly_exact(s)?)?;
                    let got: Vec<(f64, f64)> = sp.roots.iter().map(|z| (z.re, z.im)).collect();
                    let class = classify_spectrum(&sp, cfg.tol_class);
                    let ok = spec.validate(s).is_ok()
                        && spectra_match(&got, &want, 1e-8)
                        && class.integral == integral
                        && class.real == real
                        && class.gaussian == gaussian;
                    if !ok {
                        bad.push(fname);
                    }
                }
                Ok(CheckRow::new(
                    name,
                    bad.is_empty(),
                    format!("{} fixtures; failing: [{}]", names.len(), bad.join(", ")),
                ))
            })(),
        ));
    }
    rows
}
