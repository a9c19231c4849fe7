//! Acceptance gate: one test per acceptance criterion.  Each test prints a
//! single pass/fail line (visible under `--nocapture`, or on failure) and
//! asserts every claim at exact equality.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vlab_core::apolarity::{
    build_invariant, classify_stratum, orbit_representatives, random_invertible_matrix, DualPair,
    SecantStratum,
};
use vlab_core::arith::FieldDescriptor;
use vlab_core::diagonal::{
    build_complex, check_colon_identities, determinantal_comparison_ideal, rees_presentation,
};
use vlab_core::groebner::{groebner_basis, krull_dimension, Ideal};
use vlab_core::poly::{parse_polynomial, MonomialOrder, Polynomial, Ring};
use vlab_core::presentation::{
    pinched_veronese_generators, product_span_dimension, projection_presentation,
    subalgebra_presentation,
};
use vlab_core::resolution::{
    koszul_probe, regularity, resolve, BettiTable, KoszulVerdict, SliceAlgebra, SliceModule,
};

/// Collects labeled exact checks for one criterion and prints the verdict
/// line; the drop into `finish` asserts so a failure also fails the test.
struct Criterion {
    number: u32,
    title: &'static str,
    started: Instant,
    checks: usize,
    failures: Vec<String>,
}

impl Criterion {
    fn new(number: u32, title: &'static str) -> Self {
        Criterion { number, title, started: Instant::now(), checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, label: &str, ok: bool) {
        self.checks += 1;
        if !ok {
            self.failures.push(label.to_string());
        }
    }

    fn check_eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        self.checks += 1;
        if got != want {
            self.failures.push(format!("{label}: got {got:?}, want {want:?}"));
        }
    }

    fn within(&mut self, label: &str, since: Instant, limit: Duration) {
        let elapsed = since.elapsed();
        self.check(
            &format!("{label} within {limit:?} (took {elapsed:.2?})"),
            elapsed <= limit,
        );
    }

    fn finish(self, limit: Duration) {
        let elapsed = self.started.elapsed();
        let timely = elapsed <= limit;
        let status = if self.failures.is_empty() && timely { "PASS" } else { "FAIL" };
        let detail = if self.failures.is_empty() {
            String::new()
        } else {
            format!("; failing: {}", self.failures.join("; "))
        };
        println!(
            "criterion {:2} [{status}] {}: {} checks in {:.2?} (limit {:?}){detail}",
            self.number, self.title, self.checks, elapsed, limit
        );
        assert!(
            timely,
            "criterion {} overran its time limit: {:.2?} > {:?}",
            self.number, elapsed, limit
        );
        assert!(
            self.failures.is_empty(),
            "criterion {} failed: {}",
            self.number,
            self.failures.join("; ")
        );
    }
}

fn gf(p: u64) -> FieldDescriptor {
    FieldDescriptor::prime(p).unwrap()
}

fn cubic(pair: &DualPair, text: &str) -> Polynomial {
    parse_polynomial(pair.primal(), text).unwrap()
}

/// The expected strata of the five singular representatives, in order.
const REP_STRATA: [SecantStratum; 5] = [
    SecantStratum::OnFirstSecant,
    SecantStratum::OnFirstSecant,
    SecantStratum::OnSecondSecant,
    SecantStratum::OnSecondSecant,
    SecantStratum::OnSecondSecant,
];

/// Minimal relation counts of the projected coordinate rings, as
/// (degree, count) pairs; scanning to degree 4 certifies there is nothing
/// above degree 3.  The two cone representatives F1, F2 (catalecticant
/// rank 2) have products missing one sextic dimension, hence 18 quadrics;
/// the three rank-3 representatives span all sextics, hence 17.  Each
/// count is re-derived inside the test from span dimensions, independent
/// of any elimination.
fn expected_relations(rep: usize) -> Vec<(i64, usize)> {
    match rep {
        0 | 1 => vec![(2, 18), (3, 1)],
        _ => vec![(2, 17), (3, 1)],
    }
}

fn squares(field: &FieldDescriptor) -> Vec<Polynomial> {
    let ring = Ring::standard(&["x1", "x2", "x3"], field.clone());
    ["x1^2", "x2^2", "x3^2"]
        .iter()
        .map(|s| parse_polynomial(&ring, s).unwrap())
        .collect()
}

/// A random quadric with small integer coefficients (never zero).
fn random_quadric(ring: &Ring, rng: &mut ChaCha8Rng, span: i64) -> Polynomial {
    let field = ring.field().clone();
    loop {
        let terms: Vec<_> = ring
            .monomials_of_degree(&[2])
            .into_iter()
            .map(|m| (m, field.from_i64(rng.gen_range(-span..=span))))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let f = ring.polynomial(terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Three random quadrics forming a complete intersection (codimension 3).
fn random_ci(ring: &Ring, rng: &mut ChaCha8Rng, span: i64) -> Vec<Polynomial> {
    loop {
        let gens: Vec<_> = (0..3).map(|_| random_quadric(ring, rng, span)).collect();
        let ideal = Ideal::new(ring, gens.clone()).unwrap();
        let gb = groebner_basis(&ideal, &MonomialOrder::DegRevLex, None).unwrap();
        if !gb.is_unit_ideal()
            && krull_dimension(&gb).unwrap() == ring.vars().len() - 3
        {
            return gens;
        }
    }
}

/// A random ternary cubic (dense coefficients over the whole field range).
fn random_cubic(pair: &DualPair, rng: &mut ChaCha8Rng) -> Polynomial {
    let ring = pair.primal().clone();
    let field = ring.field().clone();
    loop {
        let terms: Vec<_> = ring
            .monomials_of_degree(&[3])
            .into_iter()
            .map(|m| (m, field.from_i64(rng.gen_range(-16000..=16000))))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let f = ring.polynomial(terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Residue-field slice algebra of the projected coordinate ring of the
/// k-th representative (0-based).
fn projection_algebra(field: &FieldDescriptor, rep: usize) -> SliceAlgebra {
    let pair = DualPair::new(2, field.clone());
    let f = orbit_representatives(&pair).unwrap()[rep].1.clone();
    let pres = projection_presentation(&pair, &f, None).unwrap();
    SliceAlgebra::graded_quotient(pres.groebner().clone()).unwrap()
}

fn pinched_algebra(field: &FieldDescriptor) -> SliceAlgebra {
    let pair = DualPair::new(2, field.clone());
    let gens = pinched_veronese_generators(&pair).unwrap();
    let pres = subalgebra_presentation(&gens, None).unwrap();
    SliceAlgebra::graded_quotient(pres.groebner().clone()).unwrap()
}

fn hmatrix_algebra(field: &FieldDescriptor) -> SliceAlgebra {
    let ring = Ring::bigraded(&["x1", "x2", "x3"], &["t1", "t2", "t3"], field.clone());
    let ideal = determinantal_comparison_ideal(&ring).unwrap();
    let gb = groebner_basis(&ideal, &MonomialOrder::DegRevLex, None).unwrap();
    SliceAlgebra::diagonal(gb, 1, 1).unwrap()
}

#[test]
fn criterion_01_stratum_classification() {
    let mut c = Criterion::new(1, "stratum classification of the sample cubics");
    let pair = DualPair::new(2, gf(32003));
    let reps = orbit_representatives(&pair).unwrap();
    for ((label, f), want) in reps.iter().zip(REP_STRATA) {
        let t = Instant::now();
        let v = classify_stratum(&pair, f, None).unwrap();
        c.check_eq(&format!("{label} stratum"), v.stratum, want);
        c.within(&format!("{label} classification"), t, Duration::from_secs(1));
    }
    for (text, want) in [
        ("y2^3", SecantStratum::OnVeronese),
        ("y0*y1*y2", SecantStratum::OutsideSecants),
    ] {
        let t = Instant::now();
        let v = classify_stratum(&pair, &cubic(&pair, text), None).unwrap();
        c.check_eq(&format!("{text} stratum"), v.stratum, want);
        c.within(&format!("{text} classification"), t, Duration::from_secs(1));
    }
    c.finish(Duration::from_secs(7));
}

#[test]
fn criterion_02_projection_relation_counts() {
    let mut c = Criterion::new(2, "relation counts of the projected rings over two primes");
    for p in [32003u64, 31991] {
        let pair = DualPair::new(2, gf(p));
        for (k, (label, f)) in orbit_representatives(&pair).unwrap().iter().enumerate() {
            let t = Instant::now();
            let pres = projection_presentation(&pair, f, None).unwrap();
            let profile = pres.relation_profile(4).unwrap();
            let got: Vec<(i64, usize)> = profile.counts.iter().map(|(&d, &n)| (d, n)).collect();
            c.check_eq(&format!("{label} relations over GF({p})"), got, expected_relations(k));
            c.within(&format!("{label} elimination over GF({p})"), t, Duration::from_secs(120));
            // Independent oracle: the quadric count must equal 45 minus
            // the brute-force span dimension of the generator products,
            // and the Hilbert function must match the span dimensions
            // through degree 4 (no elimination involved in either).
            let span2 = product_span_dimension(pres.generators(), 2).unwrap();
            c.check_eq(
                &format!("{label} quadric count against the span oracle over GF({p})"),
                *profile.counts.get(&2).unwrap_or(&0),
                45 - span2,
            );
            c.check(
                &format!("{label} Hilbert consistency over GF({p})"),
                pres.check_hilbert_consistency(4).unwrap(),
            );
        }
    }
    // The same counts hold with exact rational arithmetic.
    let pair = DualPair::new(2, FieldDescriptor::Rationals);
    for (k, (label, f)) in orbit_representatives(&pair).unwrap().iter().enumerate() {
        let pres = projection_presentation(&pair, f, None).unwrap();
        let profile = pres.relation_profile(4).unwrap();
        let got: Vec<(i64, usize)> = profile.counts.iter().map(|(&d, &n)| (d, n)).collect();
        c.check_eq(&format!("{label} relations over the rationals"), got, expected_relations(k));
    }
    c.finish(Duration::from_secs(1200));
}

#[test]
fn criterion_03_colon_identity_suite() {
    let mut c = Criterion::new(3, "colon and regular-sequence identities");
    let base = Instant::now();
    for field in [gf(32003), gf(31991), FieldDescriptor::Rationals] {
        // Small coefficients keep the rational Groebner runs exact and fast.
        let span = if field == FieldDescriptor::Rationals { 4 } else { 9 };
        let mut rng = ChaCha8Rng::seed_from_u64(1729);
        let mut cases: Vec<(String, Vec<Polynomial>)> =
            vec![(format!("squares/{field:?}"), squares(&field))];
        for nvars in [3usize, 4] {
            let names: Vec<String> = (1..=nvars).map(|i| format!("x{i}")).collect();
            let refs: Vec<&str> = names.iter().map(|n| n.as_str()).collect();
            let ring = Ring::standard(&refs, field.clone());
            for sample in 0..5 {
                cases.push((
                    format!("random ci #{sample} in {nvars} vars/{field:?}"),
                    random_ci(&ring, &mut rng, span),
                ));
            }
        }
        for (label, gens) in cases {
            let rp = rees_presentation(&gens, None).unwrap();
            let report = check_colon_identities(&rp, None).unwrap();
            c.check(&format!("{label}: pair is a regular sequence"), report.pair_is_regular_sequence);
            c.check(&format!("{label}: colon by the third minor"), report.colon_by_f3);
            c.check(&format!("{label}: colon by t3"), report.colon_by_t3);
            c.check(&format!("{label}: colon by g3"), report.colon_by_g3);
        }
    }
    c.within("all three fields", base, Duration::from_secs(30));
    c.finish(Duration::from_secs(30));
}

#[test]
fn criterion_04_two_periodic_homology_window() {
    let mut c = Criterion::new(4, "two-periodic complex homology for the squares ideal");
    let rp = rees_presentation(&squares(&gf(32003)), None).unwrap();
    let mut complex = build_complex(&rp, None).unwrap();
    c.check("consecutive differentials compose to zero", complex.composition_is_zero().unwrap());
    let mismatches = complex.verify_window(4, 8, 4).unwrap();
    c.check_eq("homology matches the closed form on the window", mismatches, Vec::new());
    for i in [1usize, 3] {
        let d = complex.homology_dimension(i, i as i64 + 3, i as i64).unwrap();
        c.check_eq(&format!("odd homology H_{i} is one-dimensional at ({}, {i})", i + 3), d, 1);
    }
    for i in [2usize, 4] {
        let mut total = 0;
        for p in 0..=8 {
            for q in 0..=4 {
                total += complex.homology_dimension(i, p, q).unwrap();
            }
        }
        c.check_eq(&format!("even homology H_{i} vanishes on the window"), total, 0);
    }
    c.check(
        "diagonal homology vanishes for degrees <= 6",
        complex.diagonal_homology_vanishes(4, 6).unwrap(),
    );
    c.finish(Duration::from_secs(120));
}

#[test]
fn criterion_05_truncated_regularity_of_the_rees_diagonal() {
    let mut c = Criterion::new(5, "regularity of the Rees diagonal over the pair diagonal");
    let rp = rees_presentation(&squares(&gf(32003)), None).unwrap();
    let gb_pair =
        groebner_basis(&rp.pair_ideal().unwrap(), &MonomialOrder::DegRevLex, None).unwrap();
    let gb_full = groebner_basis(rp.ideal(), &MonomialOrder::DegRevLex, None).unwrap();
    let algebra = SliceAlgebra::diagonal(gb_pair, 1, 1).unwrap();
    let module = SliceModule::diagonal(gb_full, 1, 1, (0, 0));
    let table = resolve(&algebra, &module, 3, 7).unwrap();
    let reg = regularity(&table);
    c.check_eq("regularity at caps (3, 7)", reg.value, Some(1));
    c.check("the maximum is attained away from the window boundary", !reg.boundary);
    c.check_eq("the module presents with a single generator", table.entry(0, 0), 1);
    c.finish(Duration::from_secs(300));
}

#[test]
fn criterion_06_koszul_probes() {
    let mut c = Criterion::new(6, "linearity probes for the three named algebras");
    let field = gf(32003);

    let t = Instant::now();
    let (verdict, _) = koszul_probe(&pinched_algebra(&field), 4, 5).unwrap();
    c.check_eq("pinched probe", verdict, KoszulVerdict::LinearUpTo(4));
    c.within("pinched probe", t, Duration::from_secs(420));

    let (verdict, _) = koszul_probe(&projection_algebra(&field, 4), 3, 4).unwrap();
    c.check_eq("projection of the Fermat cubic", verdict, KoszulVerdict::NonlinearAt(2, 3));

    let (verdict, _) = koszul_probe(&hmatrix_algebra(&field), 4, 5).unwrap();
    c.check_eq("determinantal comparison diagonal", verdict, KoszulVerdict::NonlinearAt(3, 4));
    if let KoszulVerdict::NonlinearAt(i, _) = verdict {
        c.check("nonlinearity appears at level <= 4", i <= 4);
    }
    c.finish(Duration::from_secs(600));
}

#[test]
fn criterion_07_diagonal_hilbert_functions_agree() {
    let mut c = Criterion::new(7, "diagonal Hilbert functions of the two comparison rings");
    let field = gf(32003);
    let rp = rees_presentation(&squares(&field), None).unwrap();
    let gb_full = groebner_basis(rp.ideal(), &MonomialOrder::DegRevLex, None).unwrap();
    let ring = Ring::bigraded(&["x1", "x2", "x3"], &["t1", "t2", "t3"], field.clone());
    let ideal = determinantal_comparison_ideal(&ring).unwrap();
    let gb_h = groebner_basis(&ideal, &MonomialOrder::DegRevLex, None).unwrap();
    let rees_dims: Vec<usize> = (0..=8).map(|d| gb_full.quotient_slice_dim(&[d, d])).collect();
    let h_dims: Vec<usize> = (0..=8).map(|d| gb_h.quotient_slice_dim(&[d, d])).collect();
    c.check_eq("diagonal dimensions through degree 8", rees_dims, h_dims);
    c.finish(Duration::from_secs(60));
}

#[test]
fn criterion_08_hypersurface_diagonal_regularity() {
    let mut c = Criterion::new(8, "diagonal regularity for a bidegree-(2,1) hypersurface");
    let ring = Ring::bigraded(&["x1", "x2"], &["t1", "t2"], gf(32003));
    let h = parse_polynomial(&ring, "x1^2*t1 + x2^2*t2").unwrap();
    let gb = groebner_basis(
        &Ideal::new(&ring, vec![h]).unwrap(),
        &MonomialOrder::DegRevLex,
        None,
    )
    .unwrap();
    let algebra = SliceAlgebra::diagonal(gb.clone(), 1, 1).unwrap();
    for (a, b) in [(0i64, 1i64), (1, 0), (2, 1), (0, 2)] {
        let module = SliceModule::diagonal(gb.clone(), 1, 1, (a, b));
        let table = resolve(&algebra, &module, 3, 7).unwrap();
        let reg = regularity(&table);
        c.check_eq(&format!("regularity of the ({a},{b}) shift"), reg.value, Some(a.max(b)));
        c.check(&format!("({a},{b}) maximum is interior to the window"), !reg.boundary);
    }
    let (verdict, _) = koszul_probe(&algebra, 3, 5).unwrap();
    c.check_eq("diagonal algebra probe", verdict, KoszulVerdict::LinearUpTo(3));
    c.finish(Duration::from_secs(300));
}

#[test]
fn criterion_09_interpolated_invariant_oracle() {
    let mut c = Criterion::new(9, "interpolated quartic invariant against the rank rule");
    let field = gf(32003);
    let pair = DualPair::new(2, field.clone());
    // The builder fails unless the interpolation space is one-dimensional.
    let invariant = build_invariant(&pair, 780, 1729).unwrap();
    c.check_eq("normalized invariant has 25 terms", invariant.num_terms(), 25);

    let reps = orbit_representatives(&pair).unwrap();
    for k in [2usize, 3, 4] {
        let (label, f) = &reps[k];
        c.check(&format!("vanishes on {label}"), invariant.vanishes(&pair, f).unwrap());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for sample in 0..100 {
        let rep = &reps[2 + sample % 3].1;
        let mat = random_invertible_matrix(&field, 3, &mut rng);
        let moved = rep.linear_substitute(&mat).unwrap();
        c.check(
            &format!("vanishes on orbit sample #{sample}"),
            invariant.vanishes(&pair, &moved).unwrap(),
        );
    }

    let triangle = cubic(&pair, "y0*y1*y2");
    c.check("nonzero on the triangle", !invariant.vanishes(&pair, &triangle).unwrap());
    let mut outside_found = 0;
    let mut attempts = 0;
    while outside_found < 20 && attempts < 1000 {
        attempts += 1;
        let f = random_cubic(&pair, &mut rng);
        let v = classify_stratum(&pair, &f, None).unwrap();
        if v.stratum == SecantStratum::OutsideSecants {
            c.check(
                &format!("nonzero on generic sample #{outside_found}"),
                !invariant.vanishes(&pair, &f).unwrap(),
            );
            outside_found += 1;
        }
    }
    c.check_eq("found 20 generic cubics", outside_found, 20);

    for sample in 0..200 {
        let f = random_cubic(&pair, &mut rng);
        let v = classify_stratum(&pair, &f, Some(&invariant)).unwrap();
        c.check_eq(
            &format!("rank rule and invariant agree on random cubic #{sample}"),
            v.invariant_consistent,
            Some(true),
        );
    }
    c.finish(Duration::from_secs(180));
}

#[test]
fn criterion_10_cross_field_consistency() {
    let mut c = Criterion::new(10, "identical results over the two default primes");
    let fields = [gf(32003), gf(31991)];

    // Classification is field-independent.
    let verdicts: Vec<Vec<SecantStratum>> = fields
        .iter()
        .map(|field| {
            let pair = DualPair::new(2, field.clone());
            let mut out: Vec<SecantStratum> = orbit_representatives(&pair)
                .unwrap()
                .iter()
                .map(|(_, f)| classify_stratum(&pair, f, None).unwrap().stratum)
                .collect();
            for text in ["y2^3", "y0*y1*y2"] {
                out.push(classify_stratum(&pair, &cubic(&pair, text), None).unwrap().stratum);
            }
            out
        })
        .collect();
    c.check_eq("strata agree across primes", verdicts[0].clone(), verdicts[1].clone());

    // Relation profiles of the projected rings are identical.
    let profiles: Vec<Vec<Vec<(i64, usize)>>> = fields
        .iter()
        .map(|field| {
            let pair = DualPair::new(2, field.clone());
            orbit_representatives(&pair)
                .unwrap()
                .iter()
                .map(|(_, f)| {
                    let pres = projection_presentation(&pair, f, None).unwrap();
                    let profile = pres.relation_profile(4).unwrap();
                    profile.counts.iter().map(|(&d, &n)| (d, n)).collect()
                })
                .collect()
        })
        .collect();
    c.check_eq("relation profiles agree across primes", profiles[0].clone(), profiles[1].clone());

    // The three linearity probes agree verdict-for-verdict and table-for-table.
    let probes: Vec<Vec<(KoszulVerdict, BettiTable)>> = fields
        .iter()
        .map(|field| {
            vec![
                koszul_probe(&pinched_algebra(field), 4, 5).unwrap(),
                koszul_probe(&projection_algebra(field, 4), 3, 4).unwrap(),
                koszul_probe(&hmatrix_algebra(field), 4, 5).unwrap(),
            ]
        })
        .collect();
    c.check_eq("probe outcomes agree across primes", probes[0].clone(), probes[1].clone());

    // The colon-identity suite also holds over the rationals.
    let rp = rees_presentation(&squares(&FieldDescriptor::Rationals), None).unwrap();
    let report = check_colon_identities(&rp, None).unwrap();
    c.check("colon identities hold over the rationals", report.all_hold());
    c.finish(Duration::from_secs(900));
}
