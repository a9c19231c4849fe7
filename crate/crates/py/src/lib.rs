//! Python bindings for the core library: thin wrappers that accept plain
//! strings and numbers, delegate to `vlab_core`, and return native Python
//! dicts, lists and tuples.  Every function takes a `field` keyword
//! (`"gf:P"` for a prime field, `"q"` for the rationals) and raises
//! `ValueError` with the library's error message on invalid input.

use std::path::PathBuf;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use vlab_core::apolarity::{
    apolar_ideal, build_invariant, classify_stratum, orbit_representatives, AronholdQuartic,
    DualPair, SecantStratum,
};
use vlab_core::arith::FieldDescriptor;
use vlab_core::diagonal::{build_complex, check_colon_identities, rees_presentation};
use vlab_core::fixtures::{preset_algebra, preset_cubic, preset_quadrics, Preset, PresetAlgebra};
use vlab_core::groebner::{groebner_basis, min_generators, Ideal};
use vlab_core::poly::{parse_polynomial, MonomialOrder, Polynomial, Ring};
use vlab_core::presentation::{projection_generators, projection_presentation, Presentation};
use vlab_core::resolution::{
    koszul_probe as core_koszul_probe, resolve, BettiTable, KoszulVerdict, SliceAlgebra,
    SliceModule,
};

fn err(e: vlab_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_field(spec: &str) -> PyResult<FieldDescriptor> {
    let lower = spec.trim().to_ascii_lowercase();
    if lower == "q" {
        return Ok(FieldDescriptor::Rationals);
    }
    if let Some(p) = lower.strip_prefix("gf:") {
        let p: u64 = p
            .parse()
            .map_err(|_| PyValueError::new_err(format!("bad field spec '{spec}'")))?;
        return FieldDescriptor::prime(p).map_err(err);
    }
    Err(PyValueError::new_err(format!(
        "bad field spec '{spec}' (expected 'q' or 'gf:P')"
    )))
}

/// Parses a ternary cubic, or fetches one of the named cubics (f1..f5).
fn cubic_input(
    form: Option<&str>,
    preset: Option<&str>,
    field: &FieldDescriptor,
) -> PyResult<(DualPair, Polynomial)> {
    match (form, preset) {
        (Some(_), Some(_)) => Err(PyValueError::new_err(
            "give either a cubic form or a preset name, not both",
        )),
        (None, None) => Err(PyValueError::new_err("need a cubic form or a preset name")),
        (Some(text), None) => {
            let pair = DualPair::new(2, field.clone());
            let f = parse_polynomial(pair.primal(), text).map_err(err)?;
            if f.is_zero() {
                return Err(PyValueError::new_err("the zero form has no stratum"));
            }
            if f.multidegree().map_err(err)? != Some(vec![3]) {
                return Err(PyValueError::new_err(format!(
                    "expected a ternary cubic form, got '{f}'"
                )));
            }
            Ok((pair, f))
        }
        (None, Some(p)) => {
            let preset = Preset::parse(p).map_err(err)?;
            preset_cubic(preset, field).map_err(err)
        }
    }
}

/// Parses a comma-separated quadric list over an inferred ring, or fetches
/// the quadrics of a named preset.
fn quadrics_input(
    quadrics: Option<&str>,
    preset: Option<&str>,
    field: &FieldDescriptor,
) -> PyResult<Vec<Polynomial>> {
    match (quadrics, preset) {
        (Some(_), Some(_)) => Err(PyValueError::new_err(
            "give either a quadric list or a preset name, not both",
        )),
        (None, None) => Err(PyValueError::new_err(
            "need quadrics \"g1,g2,g3\" or a preset name",
        )),
        (Some(text), None) => {
            let ring = inferred_ring(text, field)?;
            text.split(',')
                .map(|part| parse_polynomial(&ring, part.trim()).map_err(err))
                .collect()
        }
        (None, Some(p)) => preset_quadrics(Preset::parse(p).map_err(err)?, field).map_err(err),
    }
}

/// Builds a standard graded ring on the variables appearing in the text,
/// in natural order (x2 before x10).
fn inferred_ring(text: &str, field: &FieldDescriptor) -> PyResult<Ring> {
    let mut names: Vec<String> = Vec::new();
    let mut current = String::new();
    for c in text.chars() {
        if current.is_empty() {
            if c.is_ascii_alphabetic() || c == '_' {
                current.push(c);
            }
        } else if c.is_ascii_alphanumeric() || c == '_' {
            current.push(c);
        } else {
            names.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        names.push(current);
    }
    names.sort_by_key(|n| natural_key(n));
    names.dedup();
    if names.is_empty() {
        return Err(PyValueError::new_err("no variables found in the input"));
    }
    let refs: Vec<&str> = names.iter().map(|n| n.as_str()).collect();
    Ok(Ring::standard(&refs, field.clone()))
}

fn natural_key(name: &str) -> (String, u64) {
    let split = name
        .char_indices()
        .rev()
        .take_while(|(_, c)| c.is_ascii_digit())
        .map(|(i, _)| i)
        .last();
    match split {
        Some(i) if i > 0 => (name[..i].to_string(), name[i..].parse::<u64>().unwrap_or(0)),
        _ => (name.to_string(), 0),
    }
}

fn stratum_prediction(stratum: SecantStratum) -> &'static str {
    match stratum {
        SecantStratum::OnVeronese => "G-quadratic",
        SecantStratum::OnFirstSecant | SecantStratum::OnSecondSecant => "not quadratic",
        SecantStratum::OutsideSecants => "Koszul",
    }
}

fn betti_list<'py>(py: Python<'py>, table: &BettiTable) -> PyResult<Bound<'py, PyList>> {
    let rows: Vec<(usize, i64, usize)> =
        table.entries.iter().map(|(&(i, j), &v)| (i, j, v)).collect();
    PyList::new(py, rows)
}

/// Secant-stratum classification of a ternary cubic form.
///
/// Returns a dict with the stratum name, the Koszulness prediction for the
/// projected coordinate ring, the middle catalecticant rank, the number of
/// apolar quadrics, and (for rank-3 forms) the complete-intersection test.
/// An interpolated invariant saved by `aronhold_build` can be supplied as
/// an independent cross-check.
#[pyfunction]
#[pyo3(signature = (form=None, preset=None, field="gf:32003", invariant=None))]
fn classify<'py>(
    py: Python<'py>,
    form: Option<&str>,
    preset: Option<&str>,
    field: &str,
    invariant: Option<PathBuf>,
) -> PyResult<Bound<'py, PyDict>> {
    let field = parse_field(field)?;
    let (pair, f) = cubic_input(form, preset, &field)?;
    let loaded = match invariant {
        Some(path) => Some(AronholdQuartic::load(&path).map_err(err)?),
        None => None,
    };
    let v = classify_stratum(&pair, &f, loaded.as_ref()).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("form", f.to_string())?;
    out.set_item("stratum", v.stratum.to_string())?;
    out.set_item("prediction", stratum_prediction(v.stratum))?;
    out.set_item("catalecticant_rank", v.catalecticant_rank)?;
    out.set_item("apolar_quadrics", v.apolar_quadrics)?;
    out.set_item(
        "quadrics_complete_intersection",
        v.quadrics_complete_intersection,
    )?;
    out.set_item("invariant_vanishes", v.invariant_vanishes)?;
    out.set_item("invariant_consistent", v.invariant_consistent)?;
    Ok(out)
}

/// The five named singular cubics, as `(label, form)` string pairs.
#[pyfunction]
#[pyo3(signature = (field="gf:32003"))]
fn cubic_representatives(field: &str) -> PyResult<Vec<(String, String)>> {
    let field = parse_field(field)?;
    let pair = DualPair::new(2, field);
    let reps = orbit_representatives(&pair).map_err(err)?;
    Ok(reps.into_iter().map(|(n, f)| (n, f.to_string())).collect())
}

/// Degree-indexed counts of a minimal generating set of the apolar ideal.
#[pyfunction]
#[pyo3(signature = (form=None, preset=None, field="gf:32003", cap=4))]
fn apolar_profile(
    form: Option<&str>,
    preset: Option<&str>,
    field: &str,
    cap: i64,
) -> PyResult<std::collections::BTreeMap<i64, usize>> {
    let field = parse_field(field)?;
    let (pair, f) = cubic_input(form, preset, &field)?;
    let ideal = apolar_ideal(&pair, &f).map_err(err)?;
    let gb = groebner_basis(&ideal, &MonomialOrder::DegRevLex, None).map_err(err)?;
    Ok(min_generators(&gb, cap).map_err(err)?.counts)
}

/// Generators of the projection of the cubic Veronese away from the form:
/// a deterministic degree-3 complement basis, as strings.
#[pyfunction]
#[pyo3(signature = (form=None, preset=None, field="gf:32003"))]
fn project(form: Option<&str>, preset: Option<&str>, field: &str) -> PyResult<Vec<String>> {
    let field = parse_field(field)?;
    let (pair, f) = cubic_input(form, preset, &field)?;
    let gens = projection_generators(&pair, &f).map_err(err)?;
    Ok(gens.iter().map(|g| g.to_string()).collect())
}

/// Finite presentation of a projected coordinate ring (from a cubic form)
/// or of a named presented algebra (pinched, segre-3x3, f1..f5).
///
/// Returns a dict with the generator count and degree, the minimal
/// relation counts by degree up to `cap`, whether the ideal is quadratic
/// in that range, and the Hilbert function values through `cap`.
#[pyfunction]
#[pyo3(signature = (form=None, preset=None, field="gf:32003", cap=4))]
fn present<'py>(
    py: Python<'py>,
    form: Option<&str>,
    preset: Option<&str>,
    field: &str,
    cap: i64,
) -> PyResult<Bound<'py, PyDict>> {
    let field = parse_field(field)?;
    let pres: Presentation = match (form, preset) {
        (None, Some(p)) => {
            let preset = Preset::parse(p).map_err(err)?;
            match preset_algebra(preset, &field, None).map_err(err)? {
                PresetAlgebra::Presentation(pres) => pres,
                PresetAlgebra::Diagonal(_) => {
                    return Err(PyValueError::new_err(format!(
                        "preset '{}' is a diagonal algebra, not a generated subalgebra",
                        preset.name()
                    )))
                }
            }
        }
        _ => {
            let (pair, f) = cubic_input(form, preset, &field)?;
            projection_presentation(&pair, &f, None).map_err(err)?
        }
    };
    let profile = pres.relation_profile(cap).map_err(err)?;
    let dims: Vec<usize> = (0..=cap)
        .map(|d| pres.quotient_dimension(d))
        .collect::<vlab_core::Result<_>>()
        .map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("generators", pres.generators().len())?;
    out.set_item("generator_degree", pres.generator_degree())?;
    out.set_item("relations", profile.counts)?;
    out.set_item("quadratic", pres.is_quadratic(cap).map_err(err)?)?;
    out.set_item("relation_cap", cap)?;
    out.set_item("dims", dims)?;
    Ok(out)
}

/// Graded Betti numbers of a named algebra, either of its defining ideal
/// over the ambient polynomial ring (`over="poly"`) or of the residue
/// field over the algebra itself (`over="self"`).
///
/// Returns a dict with the window caps, completeness, and the table as a
/// list of `(homological_level, internal_degree, value)` triples.
#[pyfunction]
#[pyo3(signature = (preset, over="poly", field="gf:32003", levels=None, cap=None))]
fn betti<'py>(
    py: Python<'py>,
    preset: &str,
    over: &str,
    field: &str,
    levels: Option<usize>,
    cap: Option<i64>,
) -> PyResult<Bound<'py, PyDict>> {
    let field = parse_field(field)?;
    let preset = Preset::parse(preset).map_err(err)?;
    let pa = preset_algebra(preset, &field, None).map_err(err)?;
    let table = match over {
        "poly" => {
            let PresetAlgebra::Presentation(p) = &pa else {
                return Err(PyValueError::new_err(
                    "over=\"poly\" needs a generated-subalgebra preset",
                ));
            };
            let empty =
                groebner_basis(&Ideal::zero(p.ring()), &MonomialOrder::DegRevLex, None)
                    .map_err(err)?;
            let algebra = SliceAlgebra::graded_quotient(empty).map_err(err)?;
            let module = SliceModule::graded_quotient(p.groebner().clone());
            let levels = levels.unwrap_or(2);
            let cap = cap.unwrap_or(levels as i64 + 2);
            resolve(&algebra, &module, levels, cap).map_err(err)?
        }
        "self" => {
            let algebra = pa.slice_algebra().map_err(err)?;
            let module = SliceModule::residue_field(&field);
            let levels = levels.unwrap_or(3);
            let cap = cap.unwrap_or(levels as i64 + 1);
            resolve(&algebra, &module, levels, cap).map_err(err)?
        }
        other => {
            return Err(PyValueError::new_err(format!(
                "over must be 'poly' or 'self', got '{other}'"
            )))
        }
    };
    let out = PyDict::new(py);
    out.set_item("levels", table.levels)?;
    out.set_item("degree_cap", table.degree_cap)?;
    out.set_item("complete", table.complete)?;
    out.set_item("entries", betti_list(py, &table)?)?;
    Ok(out)
}

/// Linearity probe for the residue-field resolution of a named algebra.
///
/// Returns a dict with `verdict` (`"linear-up-to"` or `"nonlinear-at"`),
/// the certified level or the first nonlinear position, and the Betti
/// table computed inside the window.
#[pyfunction]
#[pyo3(signature = (preset, field="gf:32003", levels=3, cap=None))]
fn koszul_probe<'py>(
    py: Python<'py>,
    preset: &str,
    field: &str,
    levels: usize,
    cap: Option<i64>,
) -> PyResult<Bound<'py, PyDict>> {
    let field = parse_field(field)?;
    let preset = Preset::parse(preset).map_err(err)?;
    let algebra = preset_algebra(preset, &field, None)
        .map_err(err)?
        .slice_algebra()
        .map_err(err)?;
    let cap = cap.unwrap_or(levels as i64 + 1);
    let (verdict, table) = core_koszul_probe(&algebra, levels, cap).map_err(err)?;
    let out = PyDict::new(py);
    match verdict {
        KoszulVerdict::LinearUpTo(n) => {
            out.set_item("verdict", "linear-up-to")?;
            out.set_item("level", n)?;
            out.set_item("nonlinear", py.None())?;
        }
        KoszulVerdict::NonlinearAt(i, j) => {
            out.set_item("verdict", "nonlinear-at")?;
            out.set_item("level", py.None())?;
            out.set_item("nonlinear", (i, j))?;
        }
    }
    out.set_item("levels", levels)?;
    out.set_item("degree_cap", cap)?;
    out.set_item("entries", betti_list(py, &table)?)?;
    Ok(out)
}

/// Checks the four colon-ideal and regular-sequence identities behind the
/// two-periodic resolution, for a triple of quadrics.  Returns a dict of
/// the individual verdicts plus `all_hold`.
#[pyfunction]
#[pyo3(signature = (quadrics=None, preset=None, field="gf:32003"))]
fn lemma_check<'py>(
    py: Python<'py>,
    quadrics: Option<&str>,
    preset: Option<&str>,
    field: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let field = parse_field(field)?;
    let gens = quadrics_input(quadrics, preset, &field)?;
    let rp = rees_presentation(&gens, None).map_err(err)?;
    let report = check_colon_identities(&rp, None).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("pair_is_regular_sequence", report.pair_is_regular_sequence)?;
    out.set_item("colon_by_f3", report.colon_by_f3)?;
    out.set_item("colon_by_t3", report.colon_by_t3)?;
    out.set_item("colon_by_g3", report.colon_by_g3)?;
    out.set_item("all_hold", report.all_hold())?;
    Ok(out)
}

/// Rees-presentation sanity for a triple of quadrics: whether the matrix
/// rows are syzygies of the forms and whether the ideal is of linear type.
#[pyfunction]
#[pyo3(signature = (quadrics=None, preset=None, field="gf:32003"))]
fn rees_check<'py>(
    py: Python<'py>,
    quadrics: Option<&str>,
    preset: Option<&str>,
    field: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let field = parse_field(field)?;
    let gens = quadrics_input(quadrics, preset, &field)?;
    let rp = rees_presentation(&gens, None).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("rows_are_syzygies", rp.rows_are_syzygies().map_err(err)?)?;
    out.set_item("linear_type", rp.is_linear_type(None).map_err(err)?)?;
    out.set_item(
        "minors",
        rp.minors().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
    )?;
    Ok(out)
}

/// Window check of the two-periodic complex for a triple of quadrics:
/// composition vanishing, homology comparison, and diagonal exactness.
#[pyfunction]
#[pyo3(signature = (quadrics=None, preset=None, field="gf:32003", i_max=3, p_max=7))]
fn complex_window<'py>(
    py: Python<'py>,
    quadrics: Option<&str>,
    preset: Option<&str>,
    field: &str,
    i_max: usize,
    p_max: i64,
) -> PyResult<Bound<'py, PyDict>> {
    let field = parse_field(field)?;
    let gens = quadrics_input(quadrics, preset, &field)?;
    let rp = rees_presentation(&gens, None).map_err(err)?;
    let mut complex = build_complex(&rp, None).map_err(err)?;
    let composition_zero = complex.composition_is_zero().map_err(err)?;
    let mismatches = complex
        .verify_window(i_max, p_max, i_max as i64)
        .map_err(err)?;
    let diagonal_ok = complex
        .diagonal_homology_vanishes(i_max, p_max - 1)
        .map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("composition_zero", composition_zero)?;
    out.set_item("homology_mismatches", &mismatches)?;
    out.set_item("diagonal_vanishes", diagonal_ok)?;
    out.set_item(
        "ok",
        composition_zero && mismatches.is_empty() && diagonal_ok,
    )?;
    Ok(out)
}

/// Hilbert function values of a named algebra through degree `cap`.
#[pyfunction]
#[pyo3(signature = (preset, field="gf:32003", cap=8))]
fn hilbert(preset: &str, field: &str, cap: i64) -> PyResult<Vec<usize>> {
    let field = parse_field(field)?;
    let preset = Preset::parse(preset).map_err(err)?;
    preset_algebra(preset, &field, None)
        .map_err(err)?
        .dims(cap)
        .map_err(err)
}

/// Interpolates the degree-four invariant cutting out the secant-plane
/// hypersurface and saves it to `path`.  Returns the number of terms.
#[pyfunction]
#[pyo3(signature = (path, samples=780, seed=1729, field="gf:32003"))]
fn aronhold_build(path: PathBuf, samples: usize, seed: u64, field: &str) -> PyResult<usize> {
    let field = parse_field(field)?;
    let pair = DualPair::new(2, field);
    let invariant = build_invariant(&pair, samples, seed).map_err(err)?;
    invariant.save(&path).map_err(err)?;
    Ok(invariant.num_terms())
}

/// Evaluates a saved invariant on a cubic form; true when it vanishes.
#[pyfunction]
#[pyo3(signature = (path, form=None, preset=None, field="gf:32003"))]
fn aronhold_vanishes(
    path: PathBuf,
    form: Option<&str>,
    preset: Option<&str>,
    field: &str,
) -> PyResult<bool> {
    let field = parse_field(field)?;
    let (pair, f) = cubic_input(form, preset, &field)?;
    let invariant = AronholdQuartic::load(&path).map_err(err)?;
    invariant.vanishes(&pair, &f).map_err(err)
}

#[pymodule]
fn vlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(cubic_representatives, m)?)?;
    m.add_function(wrap_pyfunction!(apolar_profile, m)?)?;
    m.add_function(wrap_pyfunction!(project, m)?)?;
    m.add_function(wrap_pyfunction!(present, m)?)?;
    m.add_function(wrap_pyfunction!(betti, m)?)?;
    m.add_function(wrap_pyfunction!(koszul_probe, m)?)?;
    m.add_function(wrap_pyfunction!(lemma_check, m)?)?;
    m.add_function(wrap_pyfunction!(rees_check, m)?)?;
    m.add_function(wrap_pyfunction!(complex_window, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert, m)?)?;
    m.add_function(wrap_pyfunction!(aronhold_build, m)?)?;
    m.add_function(wrap_pyfunction!(aronhold_vanishes, m)?)?;
    Ok(())
}
