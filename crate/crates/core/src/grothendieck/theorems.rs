//! The consolidated per-presentation checker: square-dimension
//! inequalities, regular-element identities, lowest-level agreement, orbit
//! containment, coset/orbit partitions, the Chevalley locus, the
//! tensor-product criterion at the lowest level, discriminant-ideal chains
//! and their consistency with the pointwise square-dimension route.

use crate::cayley::{
    discriminant, discriminant_ideal_sub, modified_discriminant_ideal, regular_trace_over_c,
    sandwich_status, sd_ideal_consistency, specialize_gram, verify_cayley_hamilton,
    verify_cayley_hamilton_generic, IdealForm, SandwichStatus,
};
use crate::findim::{self, is_semisimple_module, composition_multiplicities};
use crate::presentation::CentralKind;

use super::fusion::{dual_numeric, fpdim, hom_dimension, regular_identity_check, tensor_numeric};
use super::orbits::subgroup_and_orbits;
use super::{Entry, GrothendieckError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
    pub anchor: String,
}

fn check(name: &str, ok: bool, detail: String, anchor: &str) -> Check {
    Check {
        name: name.to_string(),
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        detail,
        anchor: anchor.to_string(),
    }
}

fn skipped(name: &str, reason: String, anchor: &str) -> Check {
    Check {
        name: name.to_string(),
        status: CheckStatus::Skipped,
        detail: reason,
        anchor: anchor.to_string(),
    }
}

/// Run every applicable consistency check on an analyzed presentation.
pub fn theorem_checks(entry: &Entry, ch_samples: usize) -> Result<Vec<Check>, GrothendieckError> {
    let mut out = Vec::new();
    let pres = &entry.pres;
    let desc = &pres.central;
    let chevalley = entry.identity_chevalley.holds;
    let sd_id = entry.fibers[0].sd;
    let min_sd = entry.fibers.iter().map(|f| f.sd).min().unwrap();
    let max_sd = entry.fibers.iter().map(|f| f.sd).max().unwrap();

    // all fibers share one dimension
    let dims: Vec<usize> = entry.fibers.iter().map(|f| f.algebra.dim).collect();
    out.push(check(
        "fiber-dimension-constancy",
        dims.iter().all(|&d| d == dims[0]),
        format!("dimensions {dims:?}"),
        "equal-fiber-dimensions",
    ));

    let profile: Vec<String> = entry
        .space
        .sampled
        .iter()
        .zip(entry.fibers.iter())
        .map(|(c, f)| format!("{}: Sd={} irr={}", c.label(desc), f.sd, f.irr_count))
        .collect();
    out.push(check(
        "sd-profile",
        true,
        profile.join("; "),
        "square-dimension-function",
    ));

    out.push(check(
        "identity-fiber-chevalley",
        true,
        format!("holds = {chevalley}"),
        "radical-is-hopf-ideal",
    ));

    // square-dimension inequalities
    if chevalley {
        let mut ok = true;
        let mut bad = String::new();
        for (chi, fiber) in entry.space.sampled.iter().zip(entry.fibers.iter()) {
            if !(fiber.sd >= sd_id && sd_id >= fiber.irr_count) {
                ok = false;
                bad = format!(
                    "at {}: Sd={} Sd(id)={} irr={}",
                    chi.label(desc),
                    fiber.sd,
                    sd_id,
                    fiber.irr_count
                );
            }
        }
        out.push(check(
            "sd-inequalities",
            ok,
            if ok {
                format!("Sd >= {sd_id} >= irreducible count at all {} sampled characters", dims.len())
            } else {
                bad
            },
            "sd-lower-bounds",
        ));
    } else {
        out.push(skipped(
            "sd-inequalities",
            "identity fiber lacks the Chevalley property".into(),
            "sd-lower-bounds",
        ));
    }

    // regular-element identities per sampled character
    if chevalley {
        for (idx, chi) in entry.space.sampled.iter().enumerate() {
            let rc = regular_identity_check(entry, idx)?;
            let ok = rc.idempotent_identity && rc.trace_identity && rc.entries_positive;
            out.push(check(
                "regular-element-identities",
                ok,
                format!(
                    "{}: T^2=Sd*T {}, trace {}, positive {}",
                    chi.label(desc),
                    rc.idempotent_identity,
                    rc.trace_identity,
                    rc.entries_positive
                ),
                "regular-element-action",
            ));
        }
    } else {
        out.push(skipped(
            "regular-element-identities",
            "identity fiber lacks the Chevalley property".into(),
            "regular-element-action",
        ));
    }

    // lowest level: scan route against the Frobenius-Perron route
    let fp = fpdim(entry)?;
    let scan_level = min_sd + 1;
    if chevalley {
        let fp_exact = fp.exact.expect("fusion case is exact");
        out.push(check(
            "lowest-level-agreement",
            fp_exact + 1 == scan_level,
            format!(
                "scan gives {scan_level}, Frobenius-Perron dimension {fp_exact} gives {}",
                fp_exact + 1
            ),
            "lowest-level",
        ));
    } else {
        out.push(skipped(
            "lowest-level-agreement",
            format!(
                "identity fiber lacks the Chevalley property; scan gives {scan_level}, Perron estimate {:.6}",
                fp.estimate
            ),
            "lowest-level",
        ));
    }

    // orbit containment: the subgroup lies in every nonempty vanishing locus
    let orbit_data = subgroup_and_orbits(entry)?;
    if chevalley {
        let mut ok = true;
        let mut detail = String::new();
        for k in 1..=max_sd + 1 {
            let locus: Vec<usize> = entry
                .fibers
                .iter()
                .enumerate()
                .filter(|(_, f)| f.sd < k)
                .map(|(i, _)| i)
                .collect();
            if locus.is_empty() {
                continue;
            }
            for sub_chi in &orbit_data.subgroup_sampled {
                let si = entry.fiber_index_of(sub_chi).unwrap();
                if !locus.contains(&si) {
                    ok = false;
                    detail = format!(
                        "character {} is in the subgroup but not in the k = {k} locus",
                        sub_chi.label(desc)
                    );
                }
            }
        }
        out.push(check(
            "orbit-containment",
            ok,
            if ok {
                format!(
                    "subgroup of size {} lies in every nonempty sampled locus",
                    orbit_data.subgroup_sampled.len()
                )
            } else {
                detail
            },
            "nonempty-loci-contain-identity-orbit",
        ));
    } else {
        out.push(skipped(
            "orbit-containment",
            "identity fiber lacks the Chevalley property".into(),
            "nonempty-loci-contain-identity-orbit",
        ));
    }

    // subgroup axioms and the coset/orbit partition on the torsion part
    out.push(check(
        "subgroup-closure",
        orbit_data.subgroup_closed,
        format!(
            "subgroup {{{}}}",
            orbit_data
                .subgroup
                .iter()
                .map(|&i| entry.space.torsion[i].label(desc))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        "one-dimensional-module-subgroup",
    ));
    out.push(check(
        "coset-orbit-partition",
        orbit_data.partitions_match && orbit_data.restrictions_validated,
        format!(
            "{} cosets over {} torsion characters; restrictions validated = {}",
            orbit_data.cosets.len(),
            entry.space.torsion.len(),
            orbit_data.restrictions_validated
        ),
        "cosets-are-winding-orbits",
    ));

    // Chevalley locus membership per character, against the identity test
    let mut locus_all = true;
    for (idx, chi) in entry.space.sampled.iter().enumerate() {
        let member = chevalley_locus_membership(entry, idx)?;
        if !member {
            locus_all = false;
        }
        out.push(check(
            "chevalley-locus-membership",
            true,
            format!("{}: {member}", chi.label(desc)),
            "chevalley-locus",
        ));
    }
    out.push(check(
        "chevalley-locus-consistency",
        locus_all == chevalley,
        format!("locus covers all sampled characters = {locus_all}, identity-fiber test = {chevalley}"),
        "full-locus-iff-identity-fiber",
    ));

    // tensor criterion at the lowest level
    if chevalley {
        for (idx, chi) in entry.space.sampled.iter().enumerate() {
            let in_locus = entry.fibers[idx].sd == sd_id;
            let (all_ss, mult_ok) = tensor_square_criterion(entry, idx)?;
            let ok = (in_locus == all_ss) && (!in_locus || mult_ok);
            out.push(check(
                "lowest-level-tensor-criterion",
                ok,
                format!(
                    "{}: in lowest locus {in_locus}, duals semisimple {all_ss}, multiplicity identity {}",
                    chi.label(desc),
                    if in_locus { mult_ok.to_string() } else { "n/a".into() }
                ),
                "tensor-square-criterion",
            ));
        }
    } else {
        out.push(skipped(
            "lowest-level-tensor-criterion",
            "identity fiber lacks the Chevalley property".into(),
            "tensor-square-criterion",
        ));
    }

    // if the identity fiber is semisimple, every fiber is
    let identity_ss = entry.fibers[0].radical.dim_radical() == 0;
    let all_ss = entry.fibers.iter().all(|f| f.radical.dim_radical() == 0);
    if identity_ss {
        out.push(check(
            "semisimple-fibers",
            all_ss,
            format!("all {} sampled fibers semisimple = {all_ss}", dims.len()),
            "identity-semisimple-implies-all",
        ));
    } else {
        out.push(skipped(
            "semisimple-fibers",
            "identity fiber is not semisimple".into(),
            "identity-semisimple-implies-all",
        ));
    }

    // Cayley-Hamilton at the fiber rank
    match regular_trace_over_c(pres) {
        Ok(td) => {
            let n = pres.dim();
            match verify_cayley_hamilton(pres, &td, n, ch_samples, entry.seed) {
                Ok(report) => out.push(check(
                    "cayley-hamilton",
                    true,
                    format!(
                        "degree {n}, {ch_samples} seeded elements, max intermediate degree {}",
                        report.max_intermediate_degree
                    ),
                    "characteristic-polynomial-annihilation",
                )),
                Err(e) => out.push(check(
                    "cayley-hamilton",
                    false,
                    e.to_string(),
                    "characteristic-polynomial-annihilation",
                )),
            }
            if n <= 4 {
                match verify_cayley_hamilton_generic(pres, &td) {
                    Ok(()) => out.push(check(
                        "cayley-hamilton-generic",
                        true,
                        format!("degree {n} established for a generic element"),
                        "characteristic-polynomial-annihilation",
                    )),
                    Err(e) => out.push(check(
                        "cayley-hamilton-generic",
                        false,
                        e.to_string(),
                        "characteristic-polynomial-annihilation",
                    )),
                }
            } else {
                out.push(skipped(
                    "cayley-hamilton-generic",
                    format!("rank {n} exceeds the symbolic bound; seeded sampling stands in"),
                    "characteristic-polynomial-annihilation",
                ));
            }

            // ideal chains, sandwich certificates, and route consistency
            let sd_by_char = entry.sd_by_char();
            let mut all_trivial = true;
            let mut prev = None;
            let mut chain_ok = true;
            let mut sub_ok = true;
            let mut sandwich_ok = true;
            let mut gate_ok = true;
            let mut gate_detail = String::new();
            for k in 1..=n + 1 {
                let md = modified_discriminant_ideal(&td, k)?;
                let sub = discriminant_ideal_sub(&td, k)?;
                if !md.is_trivial() {
                    all_trivial = false;
                }
                if let Some(p) = &prev {
                    let p: &crate::cayley::IdealDescriptor = p;
                    if !p.contains(&md, desc) {
                        chain_ok = false;
                    }
                }
                if !md.contains(&sub, desc) {
                    sub_ok = false;
                }
                if sandwich_status(&sub, &md, &td, &entry.space)? != SandwichStatus::Certified {
                    sandwich_ok = false;
                }
                if let Err(e) = sd_ideal_consistency(&md, &td, &sd_by_char, k) {
                    gate_ok = false;
                    gate_detail = e.to_string();
                }
                prev = Some(md);
            }
            out.push(check(
                "ideal-chain-containment",
                chain_ok && sub_ok,
                format!("descending chain {chain_ok}, sub-ideal containment {sub_ok}"),
                "modified-ideal-chain",
            ));
            out.push(check(
                "zero-locus-sandwich",
                sandwich_ok,
                "symmetric-tuple sub-ideal and modified ideal have equal loci at every k".into(),
                "sandwich-certificate",
            ));
            out.push(check(
                "sd-ideal-consistency",
                gate_ok,
                if gate_ok {
                    "ideal route and square-dimension route agree at all sampled characters".into()
                } else {
                    gate_detail
                },
                "vanishing-iff-sd-below-k",
            ));

            // the discriminant generates the top modified ideal
            let disc = discriminant(&td);
            let md_top = modified_discriminant_ideal(&td, n)?;
            let top_ok = match (&md_top.form, disc.is_zero()) {
                (IdealForm::Zero, z) => z,
                (IdealForm::Unit, false) => true,
                (IdealForm::Principal(g), false) => td
                    .to_poly(&disc)
                    .monic()
                    .eq(g),
                (IdealForm::Subspace(_), false) => {
                    let gen = crate::cayley::normalize_ideal(vec![disc.clone()], &td, false)?;
                    md_top.contains(&gen, desc) && gen.contains(&md_top, desc)
                }
                _ => false,
            };
            out.push(check(
                "discriminant-generates-top-ideal",
                top_ok,
                format!("discriminant {}", disc.display(desc)),
                "rank-level-discriminant",
            ));

            // symbolic Gram specializes to each fiber's trace Gram
            let mut spec_ok = true;
            let mut rank_ok = true;
            for (chi, fiber) in entry.space.sampled.iter().zip(entry.fibers.iter()) {
                let specialized = specialize_gram(&td, chi);
                let direct = findim::trace_gram(&fiber.algebra);
                if specialized != direct {
                    spec_ok = false;
                }
                if specialized.rank() != fiber.sd {
                    rank_ok = false;
                }
            }
            out.push(check(
                "gram-specialization",
                spec_ok,
                "symbolic Gram specializes to the fiber trace Gram at every sampled character"
                    .into(),
                "trace-form-specialization",
            ));
            out.push(check(
                "gram-rank-equals-sd",
                rank_ok,
                "rank of the specialized Gram equals the square dimension at every sampled character"
                    .into(),
                "trace-radical-is-jacobson-radical",
            ));

            // implication scan between structural properties
            let commutative = is_commutative(pres);
            let sd_constant = min_sd == max_sd;
            out.push(check(
                "sd-variation-implies-nontrivial-ideal",
                sd_constant || !all_trivial,
                format!("Sd constant = {sd_constant}, all ideals trivial = {all_trivial}"),
                "discriminant-triviality-test",
            ));
            if pres.is_finite_dimensional() {
                let full = pres.full_record()?;
                let full_rad = findim::jacobson_radical(&full)?;
                let full_chev = findim::chevalley_property(&full, &full_rad)?;
                let detail = match &full_chev.witness {
                    None => format!("holds = {}", full_chev.holds),
                    Some((vector, why)) => format!(
                        "holds = false: radical vector {} {}",
                        display_vector(vector, &full.labels),
                        why
                    ),
                };
                out.push(check(
                    "full-algebra-chevalley",
                    true,
                    detail,
                    "radical-is-hopf-ideal",
                ));
                out.push(check(
                    "chevalley-implies-trivial-ideals",
                    !full_chev.holds || all_trivial,
                    format!(
                        "full-algebra Chevalley = {}, all ideals trivial = {all_trivial}",
                        full_chev.holds
                    ),
                    "chevalley-triviality",
                ));
                if !all_trivial {
                    out.push(check(
                        "nontrivial-ideal-implies-not-chevalley",
                        !full_chev.holds,
                        format!("full-algebra Chevalley = {}", full_chev.holds),
                        "chevalley-triviality",
                    ));
                }
            } else {
                out.push(skipped(
                    "full-algebra-chevalley",
                    "the algebra is infinite-dimensional; the ideal test stands in".into(),
                    "radical-is-hopf-ideal",
                ));
                if !all_trivial {
                    out.push(check(
                        "nontrivial-ideal-implies-not-chevalley",
                        true,
                        "nontrivial discriminant ideal certifies the Chevalley property fails"
                            .into(),
                        "chevalley-triviality",
                    ));
                }
            }
            out.push(check(
                "commutative-implies-trivial-ideals",
                !commutative || all_trivial,
                format!("commutative = {commutative}"),
                "chevalley-triviality",
            ));
        }
        Err(e) => {
            out.push(skipped(
                "cayley-hamilton",
                format!("{e}"),
                "characteristic-polynomial-annihilation",
            ));
            out.push(skipped(
                "ideal-chain-containment",
                format!("{e}"),
                "modified-ideal-chain",
            ));
        }
    }

    Ok(out)
}

/// Every identity-fiber irreducible tensored with every fiber irreducible
/// stays completely reducible over the fiber.
pub fn chevalley_locus_membership(
    entry: &Entry,
    fiber_idx: usize,
) -> Result<bool, GrothendieckError> {
    let fiber = &entry.fibers[fiber_idx];
    for vi in &entry.irreps[0] {
        for wj in &entry.irreps[fiber_idx] {
            let t = tensor_numeric(&entry.pres, &vi.rep, &wj.rep);
            let module = t.to_module(&entry.pres);
            if !is_semisimple_module(&fiber.radical, &module, 1e-6) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For every irreducible `W` of the fiber: is `W (x) W*` completely
/// reducible over the identity fiber, and when it is, does its composition
/// vector match the intertwiner dimensions.
fn tensor_square_criterion(
    entry: &Entry,
    fiber_idx: usize,
) -> Result<(bool, bool), GrothendieckError> {
    let id_fiber = &entry.fibers[0];
    let mut all_ss = true;
    let mut mult_ok = true;
    for w in &entry.irreps[fiber_idx] {
        let dual = dual_numeric(&entry.pres, &w.rep);
        let t = tensor_numeric(&entry.pres, &w.rep, &dual);
        let module = t.to_module(&entry.pres);
        if !is_semisimple_module(&id_fiber.radical, &module, 1e-6) {
            all_ss = false;
            continue;
        }
        let mults_blocks = composition_multiplicities(&id_fiber.blocks, &module)
            .map_err(GrothendieckError::from)?;
        for vi in &entry.irreps[0] {
            let vw = tensor_numeric(&entry.pres, &vi.rep, &w.rep);
            let hom = hom_dimension(&entry.pres, &vw, &w.rep);
            if mults_blocks[vi.block_index] != hom {
                mult_ok = false;
            }
        }
    }
    Ok((all_ss, mult_ok))
}

fn display_vector(coords: &[crate::exactmath::Scalar], labels: &[String]) -> String {
    let parts: Vec<String> = coords
        .iter()
        .zip(labels.iter())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| {
            if c.is_one() {
                l.clone()
            } else {
                format!("({c})*{l}")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn is_commutative(pres: &crate::presentation::HopfPresentation) -> bool {
    let sc = pres.structure_constants();
    let n = pres.dim();
    for i in 0..n {
        for j in 0..i {
            if sc[i][j] != sc[j][i] {
                return false;
            }
        }
    }
    // central symbols commute by construction; generators embed in the basis
    let _ = CentralKind::GroupFree;
    true
}
