//! Command implementations. Each command assembles a deterministic report;
//! the `tables` command renders the corpus zero-locus tables directly.

use std::path::PathBuf;

use serde_json::json;

use fiberlab_core::cayley::{
    discriminant, discriminant_ideal_sub, lowest_level, modified_discriminant_ideal,
    regular_trace_over_c, sandwich_status, sd_ideal_consistency, vanishes_at, zero_locus,
    SandwichStatus, TraceData, ZeroLocus,
};
use fiberlab_core::grothendieck::{
    analyze_presentation, fpdim_with_tol, theorem_checks, CheckStatus, Entry,
};
use fiberlab_core::presentation::{
    default_group_samples, default_primitive_samples, parse_presentation, HopfPresentation,
};

use crate::render::{render, render_tables, TableRow, TableSection};
use crate::report::{digest_bytes, digest_many, CheckRecord, Report};
use crate::{classify_cayley_error, classify_presentation_error, CliError, RunConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Validate,
    Analyze,
    Disc,
    Theorems,
    Tables,
}

impl CommandKind {
    pub fn name(&self) -> &'static str {
        match self {
            CommandKind::Validate => "validate",
            CommandKind::Analyze => "analyze",
            CommandKind::Disc => "disc",
            CommandKind::Theorems => "theorems",
            CommandKind::Tables => "tables",
        }
    }
}

struct Input {
    name: String,
    text: String,
}

fn collect_inputs(cfg: &RunConfig) -> Result<(Vec<Input>, String), CliError> {
    if let Some(dir) = &cfg.corpus {
        let mut names: Vec<PathBuf> = std::fs::read_dir(dir)
            .map_err(|e| CliError::Validation(format!("cannot read corpus directory {dir:?}: {e}")))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().map(|x| x == "hopf").unwrap_or(false))
            .collect();
        names.sort();
        if names.is_empty() {
            return Err(CliError::Validation(format!(
                "no .hopf files under {dir:?}"
            )));
        }
        let mut inputs = Vec::new();
        let mut digests = Vec::new();
        for p in names {
            let text = std::fs::read_to_string(&p)
                .map_err(|e| CliError::Validation(format!("cannot read {p:?}: {e}")))?;
            let name = p
                .file_stem()
                .map(|s| s.to_string_lossy().to_string())
                .unwrap_or_default();
            digests.push((name.clone(), text.clone().into_bytes()));
            inputs.push(Input { name, text });
        }
        Ok((inputs, digest_many(&digests)))
    } else {
        let path = cfg
            .input
            .as_ref()
            .ok_or_else(|| CliError::Validation("no input file given".into()))?;
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Validation(format!("cannot read {path:?}: {e}")))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().to_string())
            .unwrap_or_default();
        let digest = digest_bytes(text.as_bytes());
        Ok((vec![Input { name, text }], digest))
    }
}

fn parse_input(input: &Input) -> Result<HopfPresentation, CliError> {
    parse_presentation(&input.text).map_err(classify_presentation_error)
}

fn build_entry(cfg: &RunConfig, input: &Input) -> Result<Entry, CliError> {
    let pres = parse_input(input)?;
    let primitive = cfg
        .samples
        .clone()
        .unwrap_or_else(default_primitive_samples);
    analyze_presentation(pres, &input.name, &primitive, &default_group_samples(), cfg.seed)
        .map_err(|e| CliError::Internal(e.to_string()))
}

/// Run a command and return the rendered output plus the process exit code.
pub fn run(cfg: &RunConfig) -> Result<(String, i32), CliError> {
    let (inputs, digest) = collect_inputs(cfg)?;
    if cfg.command == CommandKind::Tables {
        return run_tables(cfg, &inputs, &digest);
    }
    let mut checks = Vec::new();
    let mut exit = 0;
    for input in &inputs {
        let prefix = if inputs.len() > 1 {
            format!("{}:", input.name)
        } else {
            String::new()
        };
        let (mut rows, code) = match cfg.command {
            CommandKind::Validate => cmd_validate(cfg, input)?,
            CommandKind::Analyze => cmd_analyze(cfg, input)?,
            CommandKind::Disc => cmd_disc(cfg, input)?,
            CommandKind::Theorems => cmd_theorems(cfg, input)?,
            CommandKind::Tables => unreachable!(),
        };
        for r in rows.iter_mut() {
            r.name = format!("{prefix}{}", r.name);
        }
        checks.extend(rows);
        exit = exit.max(code);
    }
    let report = Report {
        version: crate::TOOL_VERSION.to_string(),
        command: cfg.command.name().to_string(),
        input_digest: digest,
        seed: cfg.seed,
        checks,
    };
    Ok((render(&report, cfg.format), exit))
}

fn cmd_validate(_cfg: &RunConfig, input: &Input) -> Result<(Vec<CheckRecord>, i32), CliError> {
    let pres = parse_input(input)?;
    let mut rows = Vec::new();
    rows.push(CheckRecord::new(
        "parse",
        "pass",
        json!({
            "generators": pres.gens.clone(),
            "rules": pres.rules.len(),
            "central_symbols": pres.central.symbols.iter().map(|s| s.name.clone()).collect::<Vec<_>>(),
            "basis_size": pres.dim(),
        }),
        "plumbing",
    ));
    rows.push(CheckRecord::new(
        "hopf-consistency",
        "pass",
        json!("counit, coproduct and antipode respect every rule; basis closed"),
        "structure-map-validation",
    ));
    let max_len = (pres.rules.iter().map(|r| r.lhs.len()).max().unwrap_or(1) * 2).max(8);
    let pairs = pres
        .critical_pairs(max_len)
        .map_err(classify_presentation_error)?;
    let ok = pairs.is_empty();
    rows.push(CheckRecord::new(
        "critical-pairs",
        if ok { "pass" } else { "fail" },
        json!({
            "max_overlap_length": max_len,
            "unresolved": pairs.len(),
        }),
        "local-confluence",
    ));
    Ok((rows, if ok { 0 } else { 2 }))
}

fn character_rows(entry: &Entry) -> Vec<CheckRecord> {
    let desc = &entry.pres.central;
    entry
        .space
        .sampled
        .iter()
        .zip(entry.fibers.iter())
        .map(|(chi, fiber)| {
            CheckRecord::new(
                format!("fiber {}", chi.label(desc)),
                "pass",
                json!({
                    "character": chi.label(desc),
                    "dim": fiber.algebra.dim,
                    "sd": fiber.sd,
                    "irr_count": fiber.irr_count,
                    "block_dims": fiber.blocks.block_dims.clone(),
                    "one_dim_count": fiber.one_dim_count,
                    "semisimple": fiber.radical.dim_radical() == 0,
                }),
                "square-dimension-function",
            )
        })
        .collect()
}

fn cmd_analyze(cfg: &RunConfig, input: &Input) -> Result<(Vec<CheckRecord>, i32), CliError> {
    let entry = build_entry(cfg, input)?;
    let mut rows = character_rows(&entry);
    let fp = fpdim_with_tol(&entry, cfg.perron_tol.unwrap_or(1e-9))
        .map_err(|e| CliError::Internal(e.to_string()))?;
    rows.push(CheckRecord::new(
        "fpdim",
        "pass",
        match fp.exact {
            Some(v) => json!({"exact": v.to_string(), "method": fp.method}),
            None => json!({
                "estimate": {"value": fp.estimate, "tol": fp.tolerance},
                "method": fp.method,
            }),
        },
        "frobenius-perron-dimension",
    ));
    rows.push(CheckRecord::new(
        "identity-fiber-chevalley",
        "pass",
        json!(entry.identity_chevalley.holds),
        "radical-is-hopf-ideal",
    ));
    Ok((rows, 0))
}

fn locus_json(locus: &ZeroLocus, pres: &HopfPresentation) -> serde_json::Value {
    json!(locus.display(pres))
}

fn cmd_disc(cfg: &RunConfig, input: &Input) -> Result<(Vec<CheckRecord>, i32), CliError> {
    let entry = build_entry(cfg, input)?;
    let pres = &entry.pres;
    let td = regular_trace_over_c(pres).map_err(classify_cayley_error)?;
    let n = pres.dim();
    let k_min = cfg.k_min.unwrap_or(1).max(1);
    let k_max = cfg.k_max.unwrap_or(n + 1).min(n + 1);
    let sd_by_char = entry.sd_by_char();
    let mut rows = Vec::new();
    let mut prev: Option<fiberlab_core::cayley::IdealDescriptor> = None;
    for k in k_min..=k_max {
        let md = modified_discriminant_ideal(&td, k).map_err(classify_cayley_error)?;
        let sub = discriminant_ideal_sub(&td, k).map_err(classify_cayley_error)?;
        let md_locus = zero_locus(&md, &td, &entry.space).map_err(classify_cayley_error)?;
        let sub_locus = zero_locus(&sub, &td, &entry.space).map_err(classify_cayley_error)?;
        let sandwich = sandwich_status(&sub, &md, &td, &entry.space)
            .map_err(classify_cayley_error)?;
        let chain_ok = prev
            .as_ref()
            .map(|p| p.contains(&md, &pres.central))
            .unwrap_or(true);
        let sub_ok = md.contains(&sub, &pres.central);
        let gate = sd_ideal_consistency(&md, &td, &sd_by_char, k);
        let ok = chain_ok
            && sub_ok
            && sandwich == SandwichStatus::Certified
            && gate.is_ok();
        rows.push(CheckRecord::new(
            format!("k={k}"),
            if ok { "pass" } else { "fail" },
            json!({
                "k": k,
                "modified_ideal": md.display(&pres.central),
                "sub_ideal": sub.display(&pres.central),
                "zero_locus": locus_json(&md_locus, pres),
                "sub_zero_locus": locus_json(&sub_locus, pres),
                "sandwich": if sandwich == SandwichStatus::Certified { "certified" } else { "mismatch" },
                "chain_containment": chain_ok,
                "sub_containment": sub_ok,
                "sd_route_agrees": gate.is_ok(),
            }),
            "discriminant-ideals",
        ));
        prev = Some(md);
    }
    let disc = discriminant(&td);
    rows.push(CheckRecord::new(
        "discriminant",
        "pass",
        json!(disc.display(&pres.central)),
        "full-gram-determinant",
    ));
    let fp = fpdim_with_tol(&entry, cfg.perron_tol.unwrap_or(1e-9))
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let level =
        lowest_level(&sd_by_char, fp.exact).map_err(|e| CliError::Internal(e.to_string()))?;
    rows.push(CheckRecord::new(
        "lowest-level",
        "pass",
        json!({
            "level": level.level,
            "scan": level.scan_level,
            "fpdim_route": level.fpdim_route,
        }),
        "lowest-level",
    ));
    let failed = rows.iter().any(|r| r.status == "fail");
    Ok((rows, if failed { 1 } else { 0 }))
}

fn cmd_theorems(cfg: &RunConfig, input: &Input) -> Result<(Vec<CheckRecord>, i32), CliError> {
    let entry = build_entry(cfg, input)?;
    let checks =
        theorem_checks(&entry, cfg.ch_samples).map_err(|e| CliError::Internal(e.to_string()))?;
    let rows = checks
        .iter()
        .map(|c| {
            CheckRecord::new(
                c.name.clone(),
                c.status.as_str(),
                json!(c.detail),
                c.anchor.clone(),
            )
        })
        .collect();
    let failed = checks.iter().any(|c| c.status == CheckStatus::Fail);
    Ok((rows, if failed { 1 } else { 0 }))
}

/// Zero-locus table of one presentation: per k, the locus computed through
/// the symbolic ideal route, cross-checked against the pointwise
/// square-dimension route, compressed into equal ranges.
pub fn locus_table(entry: &Entry, td: &TraceData) -> Result<TableSection, CliError> {
    let pres = &entry.pres;
    let n = pres.dim();
    let sd_by_char = entry.sd_by_char();
    let mut labels: Vec<String> = Vec::new();
    for k in 1..=n + 1 {
        let md = modified_discriminant_ideal(td, k).map_err(classify_cayley_error)?;
        let locus = zero_locus(&md, td, &entry.space).map_err(classify_cayley_error)?;
        // pointwise route must agree exactly on the sampled characters
        sd_ideal_consistency(&md, td, &sd_by_char, k)
            .map_err(|e| CliError::Internal(e.to_string()))?;
        let sd_points: Vec<_> = sd_by_char
            .iter()
            .filter(|(_, sd)| *sd < k)
            .map(|(c, _)| c.clone())
            .collect();
        match &locus {
            ZeroLocus::Empty => {
                if !sd_points.is_empty() {
                    return Err(CliError::Internal(format!(
                        "route mismatch at k = {k}: ideal route empty, square-dimension route nonempty"
                    )));
                }
            }
            ZeroLocus::All => {
                if sd_points.len() != sd_by_char.len() {
                    return Err(CliError::Internal(format!(
                        "route mismatch at k = {k}: ideal route full, square-dimension route partial"
                    )));
                }
            }
            ZeroLocus::Points(pts) => {
                let mut a = pts.clone();
                let mut b = sd_points.clone();
                a.retain(|c| sd_by_char.iter().any(|(s, _)| s == c));
                a.sort_by_key(|c| c.to_string());
                b.sort_by_key(|c| c.to_string());
                if a != b {
                    return Err(CliError::Internal(format!(
                        "route mismatch at k = {k}: point sets differ"
                    )));
                }
                // ideal-route points outside the sample grid would make the
                // table understate the square-dimension route
                for p in pts {
                    if !vanishes_at(&md, td, p) {
                        return Err(CliError::Internal("locus point fails membership".into()));
                    }
                }
            }
        }
        labels.push(locus.display(pres));
    }
    // compress into ranges; the last range is unbounded since the ideals
    // vanish beyond the rank
    let mut rows = Vec::new();
    let mut start = 1usize;
    for k in 2..=n + 1 {
        if labels[k - 1] != labels[start - 1] {
            rows.push(TableRow {
                k_min: start,
                k_max: Some(k - 1),
                locus: labels[start - 1].clone(),
            });
            start = k;
        }
    }
    rows.push(TableRow {
        k_min: start,
        k_max: None,
        locus: labels[start - 1].clone(),
    });
    let fp = fpdim_with_tol(entry, 1e-9).map_err(|e| CliError::Internal(e.to_string()))?;
    let level = lowest_level(&entry.sd_by_char(), fp.exact)
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let disc = discriminant(td);
    Ok(TableSection {
        name: entry.name.clone(),
        rank: n,
        lowest_level: level.level,
        discriminant: disc.display(&pres.central),
        rows,
    })
}

fn run_tables(
    cfg: &RunConfig,
    inputs: &[Input],
    digest: &str,
) -> Result<(String, i32), CliError> {
    // the three reference tables come from these corpus members; a single
    // explicit file is tabulated on its own
    let table_files = ["q8_central", "ex3_2", "taft_inf_2", "taft_inf_3"];
    let selected: Vec<&Input> = if inputs.len() == 1 {
        inputs.iter().collect()
    } else {
        table_files
            .iter()
            .filter_map(|n| inputs.iter().find(|i| i.name == *n))
            .collect()
    };
    if selected.is_empty() {
        return Err(CliError::Validation(
            "no table-bearing corpus files found".into(),
        ));
    }
    let mut sections = Vec::new();
    for input in selected {
        let entry = build_entry(cfg, input)?;
        let td = regular_trace_over_c(&entry.pres).map_err(classify_cayley_error)?;
        sections.push(locus_table(&entry, &td)?);
    }
    Ok((render_tables(&sections, cfg.format, digest, cfg.seed), 0))
}
