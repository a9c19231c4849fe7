//! The command implementations; each returns a [`CommandOutput`].

use std::path::Path;

use serde_json::{json, Map, Value};
use vlab_core::apolarity::{
    build_invariant, classify_stratum, orbit_representatives, AronholdQuartic, DualPair,
    SecantStratum,
};
use vlab_core::arith::FieldDescriptor;
use vlab_core::diagonal::{build_complex, check_colon_identities, rees_presentation};
use vlab_core::groebner::{groebner_basis, Ideal};
use vlab_core::poly::{parse_polynomial, MonomialOrder, Polynomial, Ring};
use vlab_core::presentation::{projection_generators, projection_presentation, Presentation};
use vlab_core::resolution::{koszul_probe, resolve, BettiTable, KoszulVerdict, SliceAlgebra, SliceModule};
use vlab_core::{Error, Result};

use vlab_core::fixtures::{preset_algebra, preset_cubic, preset_quadrics, Preset, PresetAlgebra};
use crate::report::{s, CommandOutput};

/// Shared command context distilled from the global flags.
#[derive(Clone)]
pub struct Ctx {
    pub field: FieldDescriptor,
    pub deg_cap: Option<i64>,
    pub hom_cap: Option<usize>,
    pub seed: u64,
    pub budget: Option<usize>,
}

/// The Koszulness each stratum implies for the projected coordinate ring.
fn stratum_prediction(stratum: SecantStratum) -> &'static str {
    match stratum {
        SecantStratum::OnVeronese => "G-quadratic",
        SecantStratum::OnFirstSecant | SecantStratum::OnSecondSecant => "not quadratic",
        SecantStratum::OutsideSecants => "Koszul",
    }
}

/// Resolves a positional form / `--preset` pair into a ternary cubic.
fn cubic_input(
    ctx: &Ctx,
    form: &Option<String>,
    preset: &Option<String>,
) -> Result<(DualPair, Polynomial, String)> {
    match (form, preset) {
        (Some(_), Some(_)) => Err(Error::Parse(
            "give either a cubic form or --preset, not both".to_string(),
        )),
        (None, None) => Err(Error::Parse(
            "need a cubic form argument or --preset".to_string(),
        )),
        (Some(text), None) => {
            let pair = DualPair::new(2, ctx.field.clone());
            let f = parse_polynomial(pair.primal(), text)?;
            if f.is_zero() {
                return Err(Error::ZeroForm);
            }
            if f.multidegree()? != Some(vec![3]) {
                return Err(Error::Parse(format!("expected a ternary cubic form, got '{f}'")));
            }
            let label = f.to_string();
            Ok((pair, f, label))
        }
        (None, Some(p)) => {
            let preset = Preset::parse(p)?;
            let (pair, f) = preset_cubic(preset, &ctx.field)?;
            Ok((pair, f, preset.name()))
        }
    }
}

/// Resolves `--quadrics` / `--preset` into a list of quadrics.
fn quadrics_input(
    ctx: &Ctx,
    quadrics: &Option<String>,
    preset: &Option<String>,
) -> Result<Vec<Polynomial>> {
    match (quadrics, preset) {
        (Some(_), Some(_)) => Err(Error::Parse(
            "give either --quadrics or --preset, not both".to_string(),
        )),
        (None, None) => Err(Error::Parse(
            "need --quadrics \"g1,g2,g3\" or --preset squares".to_string(),
        )),
        (Some(text), None) => {
            let ring = inferred_ring(text, &ctx.field)?;
            text.split(',')
                .map(|part| parse_polynomial(&ring, part.trim()))
                .collect()
        }
        (None, Some(p)) => preset_quadrics(Preset::parse(p)?, &ctx.field),
    }
}

/// Builds a standard graded ring on the variables appearing in the text,
/// in natural order (x2 before x10).
fn inferred_ring(text: &str, field: &FieldDescriptor) -> Result<Ring> {
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
        return Err(Error::Parse("no variables found in the input".to_string()));
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
        Some(i) if i > 0 => (
            name[..i].to_string(),
            name[i..].parse::<u64>().unwrap_or(0),
        ),
        _ => (name.to_string(), 0),
    }
}

/// Strips keys from an object value (for field-independent check views).
fn without_keys(v: &Value, keys: &[&str]) -> Value {
    match v {
        Value::Object(map) => {
            let filtered: Map<String, Value> = map
                .iter()
                .filter(|(k, _)| !keys.contains(&k.as_str()))
                .map(|(k, val)| (k.clone(), val.clone()))
                .collect();
            Value::Object(filtered)
        }
        other => other.clone(),
    }
}

fn betti_entries(table: &BettiTable) -> Value {
    Value::Array(
        table
            .entries
            .iter()
            .map(|(&(i, j), &v)| json!({ "i": s(i), "j": s(j), "value": s(v) }))
            .collect(),
    )
}

fn opt_bool(b: Option<bool>) -> Value {
    match b {
        Some(v) => Value::Bool(v),
        None => Value::Null,
    }
}

pub fn cmd_classify(
    ctx: &Ctx,
    form: &Option<String>,
    preset: &Option<String>,
    invariant: &Option<std::path::PathBuf>,
) -> Result<CommandOutput> {
    let (pair, f, label) = cubic_input(ctx, form, preset)?;
    let loaded = match invariant {
        Some(path) => Some(AronholdQuartic::load(Path::new(path))?),
        None => None,
    };
    let verdict = classify_stratum(&pair, &f, loaded.as_ref())?;
    let payload = json!({
        "form": label,
        "stratum": verdict.stratum.to_string(),
        "prediction": stratum_prediction(verdict.stratum),
        "catalecticant_rank": s(verdict.catalecticant_rank),
        "apolar_quadrics": s(verdict.apolar_quadrics),
        "quadrics_complete_intersection": opt_bool(verdict.quadrics_complete_intersection),
        "invariant_vanishes": opt_bool(verdict.invariant_vanishes),
        "invariant_consistent": opt_bool(verdict.invariant_consistent),
    });
    let mut out = CommandOutput::new(payload);
    if verdict.invariant_consistent == Some(false) {
        out.ok = false;
        out.caveats.push("stratum and invariant disagree".to_string());
    }
    out.check_view = Some(without_keys(&out.payload, &["form"]));
    Ok(out)
}

pub fn cmd_project(
    ctx: &Ctx,
    form: &Option<String>,
    preset: &Option<String>,
) -> Result<CommandOutput> {
    let (pair, f, label) = cubic_input(ctx, form, preset)?;
    let gens = projection_generators(&pair, &f)?;
    let payload = json!({
        "form": label,
        "count": s(gens.len()),
        "generators": gens.iter().map(|g| s(g)).collect::<Vec<_>>(),
    });
    let mut out = CommandOutput::new(payload);
    out.check_view = Some(without_keys(&out.payload, &["form", "generators"]));
    Ok(out)
}

pub fn cmd_present(
    ctx: &Ctx,
    form: &Option<String>,
    preset: &Option<String>,
) -> Result<CommandOutput> {
    let (pres, label): (Presentation, String) = match (form, preset) {
        (None, Some(p)) => {
            let preset = Preset::parse(p)?;
            match preset_algebra(preset, &ctx.field, ctx.budget)? {
                PresetAlgebra::Presentation(pres) => (pres, preset.name()),
                PresetAlgebra::Diagonal(_) => {
                    return Err(Error::Parse(format!(
                        "preset '{}' is a diagonal algebra, not a generated subalgebra",
                        preset.name()
                    )))
                }
            }
        }
        _ => {
            let (pair, f, label) = cubic_input(ctx, form, preset)?;
            (projection_presentation(&pair, &f, ctx.budget)?, label)
        }
    };
    let cap = ctx.deg_cap.unwrap_or(4);
    let profile = pres.relation_profile(cap)?;
    let quadratic = pres.is_quadratic(cap)?;
    let dims: Result<Vec<usize>> = (0..=cap).map(|d| pres.quotient_dimension(d)).collect();
    let relations: Map<String, Value> = profile
        .counts
        .iter()
        .map(|(deg, n)| (deg.to_string(), s(n)))
        .collect();
    let payload = json!({
        "source": label,
        "generator_degree": s(pres.generator_degree()),
        "generators": s(pres.generators().len()),
        "relations": relations,
        "quadratic": quadratic,
        "relation_cap": s(cap),
        "dims": dims?.iter().map(s).collect::<Vec<_>>(),
    });
    let mut out = CommandOutput::new(payload);
    out.check_view = Some(without_keys(&out.payload, &["source"]));
    Ok(out)
}

pub fn cmd_betti(ctx: &Ctx, ring: &str, over: &str) -> Result<CommandOutput> {
    let preset = Preset::parse(ring)?;
    let pa = preset_algebra(preset, &ctx.field, ctx.budget)?;
    let (table, over_echo) = match over {
        "poly" => {
            let PresetAlgebra::Presentation(p) = &pa else {
                return Err(Error::Parse(
                    "--over poly needs a generated-subalgebra preset".to_string(),
                ));
            };
            let empty = groebner_basis(
                &Ideal::zero(p.ring()),
                &MonomialOrder::DegRevLex,
                ctx.budget,
            )?;
            let algebra = SliceAlgebra::graded_quotient(empty)?;
            let module = SliceModule::graded_quotient(p.groebner().clone());
            let levels = ctx.hom_cap.unwrap_or(2);
            let cap = ctx.deg_cap.unwrap_or(levels as i64 + 2);
            (resolve(&algebra, &module, levels, cap)?, "poly")
        }
        "self" => {
            let algebra = pa.slice_algebra()?;
            let module = SliceModule::residue_field(&ctx.field);
            let levels = ctx.hom_cap.unwrap_or(3);
            let cap = ctx.deg_cap.unwrap_or(levels as i64 + 1);
            (resolve(&algebra, &module, levels, cap)?, "self")
        }
        other => {
            return Err(Error::Parse(format!(
                "--over must be 'poly' or 'self', got '{other}'"
            )))
        }
    };
    let payload = json!({
        "ring": preset.name(),
        "over": over_echo,
        "levels": s(table.levels),
        "degree_cap": s(table.degree_cap),
        "complete": table.complete,
        "entries": betti_entries(&table),
    });
    let mut out = CommandOutput::new(payload);
    if !table.complete {
        out.caveats
            .push("resolution not finished within the window caps".to_string());
    }
    out.text_blocks.push(table.to_string());
    Ok(out)
}

pub fn cmd_koszul_probe(ctx: &Ctx, preset_name: &str) -> Result<CommandOutput> {
    let preset = Preset::parse(preset_name)?;
    let algebra = preset_algebra(preset, &ctx.field, ctx.budget)?.slice_algebra()?;
    let levels = ctx.hom_cap.unwrap_or(3);
    let cap = ctx.deg_cap.unwrap_or(levels as i64 + 1);
    let (verdict, table) = koszul_probe(&algebra, levels, cap)?;
    let verdict_json = match verdict {
        KoszulVerdict::LinearUpTo(n) => json!({ "kind": "linear-up-to", "level": s(n) }),
        KoszulVerdict::NonlinearAt(i, j) => {
            json!({ "kind": "nonlinear-at", "i": s(i), "j": s(j) })
        }
    };
    let payload = json!({
        "preset": preset.name(),
        "levels": s(levels),
        "degree_cap": s(cap),
        "verdict": verdict_json,
        "entries": betti_entries(&table),
    });
    let mut out = CommandOutput::new(payload);
    if matches!(verdict, KoszulVerdict::LinearUpTo(_)) {
        out.caveats.push(format!(
            "linearity is certified only within the window (levels <= {levels}, degrees <= {cap})"
        ));
    }
    out.text_blocks.push(table.to_string());
    Ok(out)
}

pub fn cmd_rees(
    ctx: &Ctx,
    quadrics: &Option<String>,
    preset: &Option<String>,
) -> Result<CommandOutput> {
    let gens = quadrics_input(ctx, quadrics, preset)?;
    let rp = rees_presentation(&gens, ctx.budget)?;
    let syzygies = rp.rows_are_syzygies()?;
    let linear_type = rp.is_linear_type(ctx.budget)?;
    let payload = json!({
        "variables": rp.ring().vars().to_vec(),
        "forms": rp.forms().iter().map(|g| s(g)).collect::<Vec<_>>(),
        "minors": rp.minors().iter().map(|f| s(f)).collect::<Vec<_>>(),
        "rows_are_syzygies": syzygies,
        "linear_type": linear_type,
    });
    let mut out = CommandOutput::new(payload);
    out.ok = syzygies && linear_type;
    out.check_view = Some(json!({
        "rows_are_syzygies": syzygies,
        "linear_type": linear_type,
    }));
    Ok(out)
}

pub fn cmd_lemma_check(
    ctx: &Ctx,
    quadrics: &Option<String>,
    preset: &Option<String>,
) -> Result<CommandOutput> {
    let gens = quadrics_input(ctx, quadrics, preset)?;
    let rp = rees_presentation(&gens, ctx.budget)?;
    let report = check_colon_identities(&rp, ctx.budget)?;
    let payload = json!({
        "pair_is_regular_sequence": report.pair_is_regular_sequence,
        "colon_by_f3": report.colon_by_f3,
        "colon_by_t3": report.colon_by_t3,
        "colon_by_g3": report.colon_by_g3,
        "all_hold": report.all_hold(),
    });
    let mut out = CommandOutput::new(payload);
    out.ok = report.all_hold();
    Ok(out)
}

pub fn cmd_complex_f(
    ctx: &Ctx,
    quadrics: &Option<String>,
    preset: &Option<String>,
) -> Result<CommandOutput> {
    let gens = quadrics_input(ctx, quadrics, preset)?;
    let rp = rees_presentation(&gens, ctx.budget)?;
    let mut complex = build_complex(&rp, ctx.budget)?;
    let composition_zero = complex.composition_is_zero()?;
    let imax = ctx.hom_cap.unwrap_or(3);
    let pmax = ctx.deg_cap.unwrap_or(7);
    let dmax = pmax - 1;
    let mismatches = complex.verify_window(imax, pmax, imax as i64)?;
    let diagonal_ok = complex.diagonal_homology_vanishes(imax, dmax)?;
    let payload = json!({
        "composition_zero": composition_zero,
        "window": { "i_max": s(imax), "p_max": s(pmax), "q_max": s(imax) },
        "homology_mismatches": mismatches
            .iter()
            .map(|(i, p, q, got, want)| json!({
                "i": s(i), "p": s(p), "q": s(q), "got": s(got), "want": s(want),
            }))
            .collect::<Vec<_>>(),
        "diagonal": { "i_max": s(imax), "d_max": s(dmax), "vanishes": diagonal_ok },
    });
    let mut out = CommandOutput::new(payload);
    out.ok = composition_zero && mismatches.is_empty() && diagonal_ok;
    Ok(out)
}

pub fn cmd_hilbert(ctx: &Ctx, preset_name: &str, versus: &Option<String>) -> Result<CommandOutput> {
    let preset = Preset::parse(preset_name)?;
    let cap = ctx.deg_cap.unwrap_or(8);
    let dims = preset_algebra(preset, &ctx.field, ctx.budget)?.dims(cap)?;
    let mut payload = json!({
        "preset": preset.name(),
        "degree_cap": s(cap),
        "dims": dims.iter().map(s).collect::<Vec<_>>(),
    });
    let mut ok = true;
    if let Some(other_name) = versus {
        let other = Preset::parse(other_name)?;
        let other_dims = preset_algebra(other, &ctx.field, ctx.budget)?.dims(cap)?;
        let first_mismatch = dims.iter().zip(&other_dims).position(|(a, b)| a != b);
        ok = first_mismatch.is_none();
        payload["versus"] = json!({
            "preset": other.name(),
            "dims": other_dims.iter().map(s).collect::<Vec<_>>(),
            "match": ok,
            "first_mismatch": match first_mismatch {
                Some(d) => s(d),
                None => Value::Null,
            },
        });
    }
    let mut out = CommandOutput::new(payload);
    out.ok = ok;
    Ok(out)
}

pub fn cmd_aronhold_build(
    ctx: &Ctx,
    out_path: &std::path::Path,
    samples: usize,
) -> Result<CommandOutput> {
    let pair = DualPair::new(2, ctx.field.clone());
    let invariant = build_invariant(&pair, samples, ctx.seed)?;
    invariant.save(out_path)?;
    let reps = orbit_representatives(&pair)?;
    let mut vanishes_on_normal_forms = true;
    for (_, f) in &reps {
        vanishes_on_normal_forms &= invariant.vanishes(&pair, f)?;
    }
    let triangle = pair.primal().polynomial(vec![(
        pair.primal().monomial(&[(0, 1), (1, 1), (2, 1)]),
        ctx.field.one(),
    )]);
    let nonzero_on_triangle = !invariant.vanishes(&pair, &triangle)?;
    let payload = json!({
        "samples": s(samples),
        "seed": s(ctx.seed),
        "terms": s(invariant.num_terms()),
        "out": out_path.display().to_string(),
        "vanishes_on_normal_forms": vanishes_on_normal_forms,
        "nonzero_on_triangle": nonzero_on_triangle,
    });
    let mut out = CommandOutput::new(payload);
    out.ok = vanishes_on_normal_forms && nonzero_on_triangle;
    out.check_view = Some(without_keys(&out.payload, &["out"]));
    Ok(out)
}
