//! The subgroup of characters whose fibers admit one-dimensional modules,
//! its cosets, and winding orbits on the torsion character set.
//!
//! Orbits are computed through character restriction: every one-dimensional
//! module of a fiber restricts on the central ring to that fiber's
//! character, and convolving with the recognized restrictions moves points
//! the same way the winding action does. The coset partition comes from the
//! exact one-dimensional module counts; the two routes must agree.

use crate::exactmath::{root_of_unity, Scalar};
use crate::presentation::{CentralCharacter, CentralKind};

use super::{Entry, GrothendieckError};

#[derive(Debug, Clone)]
pub struct OrbitData {
    /// Torsion characters whose fiber has a one-dimensional module, as
    /// indices into `entry.space.torsion`. Contains the identity.
    pub subgroup: Vec<usize>,
    /// The same test over the full sampled set.
    pub subgroup_sampled: Vec<CentralCharacter>,
    pub subgroup_closed: bool,
    /// Left cosets of the subgroup partitioning the torsion set.
    pub cosets: Vec<Vec<usize>>,
    /// Orbits of convolution by recognized restrictions of one-dimensional
    /// fiber modules.
    pub orbits: Vec<Vec<usize>>,
    pub partitions_match: bool,
    /// Every extracted one-dimensional module restricted to the declared
    /// fiber character within tolerance.
    pub restrictions_validated: bool,
}

/// Recognize a numeric value as an exact root of unity of order dividing
/// `order`.
fn recognize_root(value: num::complex::Complex64, order: u64, tol: f64) -> Option<Scalar> {
    for k in 0..order {
        let cand = root_of_unity(order, k as i64);
        let (re, im) = cand.to_complex();
        if ((value.re - re).powi(2) + (value.im - im).powi(2)).sqrt() < tol {
            return Some(cand);
        }
    }
    None
}

pub fn subgroup_and_orbits(entry: &Entry) -> Result<OrbitData, GrothendieckError> {
    let desc = &entry.pres.central;
    let torsion = &entry.space.torsion;
    let t_index = |chi: &CentralCharacter| -> Option<usize> { torsion.iter().position(|c| c == chi) };

    // membership by the exact one-dimensional module count
    let mut subgroup = Vec::new();
    let mut subgroup_sampled = Vec::new();
    for (chi, fiber) in entry.space.sampled.iter().zip(entry.fibers.iter()) {
        if fiber.one_dim_count > 0 {
            subgroup_sampled.push(chi.clone());
            if let Some(ti) = t_index(chi) {
                subgroup.push(ti);
            }
        }
    }
    subgroup.sort_unstable();
    let id_idx = t_index(&entry.space.identity).ok_or_else(|| {
        GrothendieckError::CertificationFailed {
            detail: "identity character missing from the torsion set".into(),
        }
    })?;
    if !subgroup.contains(&id_idx) {
        return Err(GrothendieckError::CertificationFailed {
            detail: "the identity fiber reports no one-dimensional module".into(),
        });
    }

    // subgroup axioms on the torsion part
    let mut subgroup_closed = true;
    for &a in &subgroup {
        for &b in &subgroup {
            let prod = torsion[a].convolve(&torsion[b], desc);
            if t_index(&prod).map(|i| subgroup.contains(&i)) != Some(true) {
                subgroup_closed = false;
            }
        }
        let inv = torsion[a].inverse(desc);
        if t_index(&inv).map(|i| subgroup.contains(&i)) != Some(true) {
            subgroup_closed = false;
        }
    }

    // restrictions of explicit one-dimensional modules across subgroup fibers
    let mut restrictions: Vec<CentralCharacter> = Vec::new();
    let mut restrictions_validated = true;
    for &ti in &subgroup {
        let chi = &torsion[ti];
        let Some(si) = entry.fiber_index_of(chi) else {
            continue;
        };
        let fiber = &entry.fibers[si];
        let mut one_dim_seen = 0usize;
        for info in &entry.irreps[si] {
            if info.dim != 1 {
                continue;
            }
            one_dim_seen += 1;
            // restriction to C: evaluate the defining word of each symbol;
            // torsion values are recognized as exact roots of unity, free
            // directions are validated against the fiber character
            let mut values = Vec::with_capacity(desc.symbols.len());
            let mut ok = true;
            for ((si2, sy), def) in desc
                .symbols
                .iter()
                .enumerate()
                .zip(entry.pres.central_defs.iter())
            {
                let v = info.rep.word_mat(def).at(0, 0);
                let recognized = match sy.kind {
                    CentralKind::GroupTorsion(o) => recognize_root(v, o, 1e-6),
                    _ => {
                        let (re, im) = chi.values[si2].to_complex();
                        let dist = ((v.re - re).powi(2) + (v.im - im).powi(2)).sqrt();
                        if dist < 1e-6 {
                            Some(chi.values[si2].clone())
                        } else {
                            None
                        }
                    }
                };
                match recognized {
                    Some(s) => values.push(s),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                restrictions_validated = false;
                continue;
            }
            let rest = CentralCharacter { values };
            if rest != *chi {
                restrictions_validated = false;
            }
            if !restrictions.contains(&rest) {
                restrictions.push(rest);
            }
        }
        if one_dim_seen != fiber.one_dim_count {
            restrictions_validated = false;
        }
    }

    // partitions: cosets from subgroup membership, orbits from restrictions
    let cosets = partition(torsion, &subgroup.iter().map(|&i| torsion[i].clone()).collect::<Vec<_>>(), desc);
    let orbits = partition(torsion, &restrictions, desc);
    let partitions_match = cosets == orbits;
    Ok(OrbitData {
        subgroup,
        subgroup_sampled,
        subgroup_closed,
        cosets,
        orbits,
        partitions_match,
        restrictions_validated,
    })
}

fn partition(
    torsion: &[CentralCharacter],
    movers: &[CentralCharacter],
    desc: &crate::presentation::CentralDescriptor,
) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; torsion.len()];
    let mut out = Vec::new();
    for start in 0..torsion.len() {
        if assigned[start] {
            continue;
        }
        let mut cell = Vec::new();
        for m in movers {
            let moved = torsion[start].convolve(m, desc);
            if let Some(i) = torsion.iter().position(|c| *c == moved) {
                if !cell.contains(&i) {
                    cell.push(i);
                }
            }
        }
        if cell.is_empty() {
            cell.push(start);
        }
        cell.sort_unstable();
        for &i in &cell {
            assigned[i] = true;
        }
        out.push(cell);
    }
    out
}
