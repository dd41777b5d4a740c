//! Newton coefficients of characteristic polynomials from power traces, and
//! seeded Cayley-Hamilton verification over the central ring.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactmath::Scalar;
use crate::presentation::{CElem, CentralDescriptor, HopfPresentation};

use super::trace::{CentralShape, TraceData};
use super::CayleyError;

/// Coefficients `c_1..c_n` of the characteristic polynomial from the power
/// traces `tr(a), tr(a^2), ..., tr(a^n)`, by the Newton recurrence
/// `k c_k = sum_{i=1..k} (-1)^(i-1) c_{k-i} tr(a^i)` (characteristic zero).
pub fn newton_coefficients(power_traces: &[CElem], desc: &CentralDescriptor) -> Vec<CElem> {
    let n = power_traces.len();
    let mut c: Vec<CElem> = Vec::with_capacity(n + 1);
    c.push(CElem::one(desc));
    for k in 1..=n {
        let mut acc = CElem::zero();
        for i in 1..=k {
            let term = c[k - i].mul(&power_traces[i - 1], desc);
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        c.push(acc.div_int(k as i64));
    }
    c.remove(0);
    c
}

#[derive(Debug, Clone)]
pub struct CayleyHamiltonReport {
    pub degree: usize,
    pub samples: usize,
    pub max_intermediate_degree: usize,
}

/// Check `tr(1) = degree` and `p_{degree,a}(a) = 0` exactly over `C` for
/// seeded random elements with small rational coordinates.
pub fn verify_cayley_hamilton(
    pres: &HopfPresentation,
    td: &TraceData,
    degree: usize,
    samples: usize,
    seed: u64,
) -> Result<CayleyHamiltonReport, CayleyError> {
    let n = pres.dim();
    let expected = CElem::from_scalar(&pres.central, Scalar::from_int(degree as i64));
    if td.trace_on_basis[pres.unit_index()] != expected {
        return Err(CayleyError::CHViolation {
            detail: format!(
                "tr(1) = {} but the claimed degree is {degree}",
                td.trace_on_basis[pres.unit_index()].display(&pres.central)
            ),
        });
    }
    if degree != n {
        return Err(CayleyError::CHViolation {
            detail: format!("degree {degree} does not match the fiber rank {n}"),
        });
    }
    let sc = pres.structure_constants();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6a09_e667_f3bc_c908);
    let mut max_deg = 0usize;
    for _ in 0..samples {
        let coords: Vec<i64> = (0..n).map(|_| rng.random_range(-3..=3)).collect();
        // left multiplication by a = sum coords[i] b_i, as a matrix over C
        let mut la = vec![vec![CElem::zero(); n]; n];
        for (i, &q) in coords.iter().enumerate() {
            if q == 0 {
                continue;
            }
            let qs = Scalar::from_int(q);
            for j in 0..n {
                for (k, c) in sc[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        la[k][j] = la[k][j].add(&c.scale(&qs));
                    }
                }
            }
        }
        // power chain a^0 .. a^n in basis coordinates
        let mut powers: Vec<Vec<CElem>> = Vec::with_capacity(n + 1);
        let mut unit_coords = vec![CElem::zero(); n];
        unit_coords[pres.unit_index()] = CElem::one(&pres.central);
        powers.push(unit_coords);
        for _ in 0..n {
            let prev = powers.last().unwrap();
            let mut next = vec![CElem::zero(); n];
            for (k, row) in la.iter().enumerate() {
                let mut acc = CElem::zero();
                for (j, c) in row.iter().enumerate() {
                    if !c.is_zero() && !prev[j].is_zero() {
                        acc = acc.add(&c.mul(&prev[j], &pres.central));
                    }
                }
                next[k] = acc;
            }
            powers.push(next);
        }
        if matches!(td.shape, CentralShape::Univariate { .. }) {
            for p in &powers {
                for c in p {
                    if let Some(d) = td.to_poly(c).degree() {
                        max_deg = max_deg.max(d);
                    }
                }
            }
        }
        let traces: Vec<CElem> = (1..=n).map(|k| td.trace_of_coords(&powers[k])).collect();
        let cs = newton_coefficients(&traces, &pres.central);
        // p(a) = a^n - c_1 a^(n-1) + ... + (-1)^n c_n
        let mut result = powers[n].clone();
        for (i, ck) in cs.iter().enumerate() {
            let k = i + 1;
            for (t, slot) in result.iter_mut().enumerate() {
                let term = ck.mul(&powers[n - k][t], &pres.central);
                *slot = if k % 2 == 1 {
                    slot.sub(&term)
                } else {
                    slot.add(&term)
                };
            }
        }
        if result.iter().any(|c| !c.is_zero()) {
            let elem: Vec<String> = coords.iter().map(|q| q.to_string()).collect();
            return Err(CayleyError::CHViolation {
                detail: format!(
                    "characteristic polynomial does not annihilate the element with coordinates ({})",
                    elem.join(",")
                ),
            });
        }
    }
    Ok(CayleyHamiltonReport {
        degree,
        samples,
        max_intermediate_degree: max_deg,
    })
}

/// Fully symbolic Cayley-Hamilton check for small fibers: the element's
/// coordinates are adjoined as fresh commuting indeterminates, so the
/// annihilation identity is established for every element at once. The
/// polynomial sizes grow quickly, hence the rank bound.
pub fn verify_cayley_hamilton_generic(
    pres: &HopfPresentation,
    td: &TraceData,
) -> Result<(), CayleyError> {
    let n = pres.dim();
    if n > 4 {
        return Err(CayleyError::Internal(format!(
            "generic verification is limited to rank 4; this fiber has rank {n}"
        )));
    }
    // extend the central descriptor by one generic coordinate per basis word
    let base = pres.central.len();
    let mut desc = pres.central.clone();
    for i in 0..n {
        desc.symbols.push(crate::presentation::CentralSymbol {
            name: format!("q{i}"),
            kind: crate::presentation::CentralKind::PrimitiveFree,
        });
    }
    let extend = |c: &CElem| -> CElem {
        let mut out = CElem::zero();
        for (m, s) in &c.terms {
            let mut exps = m.exps.clone();
            exps.extend(std::iter::repeat(0).take(n));
            out.accumulate(desc.normalize_mono(exps), s.clone());
        }
        out
    };
    let coordinate = |i: usize| -> CElem {
        let mut exps = vec![0i64; base + n];
        exps[base + i] = 1;
        CElem::from_term(desc.normalize_mono(exps), Scalar::one())
    };
    let sc = pres.structure_constants();
    // left multiplication by the generic element a = sum q_i b_i
    let mut la = vec![vec![CElem::zero(); n]; n];
    for i in 0..n {
        let qi = coordinate(i);
        for j in 0..n {
            for (k, c) in sc[i][j].iter().enumerate() {
                if !c.is_zero() {
                    la[k][j] = la[k][j].add(&extend(c).mul(&qi, &desc));
                }
            }
        }
    }
    let trace_ext: Vec<CElem> = td.trace_on_basis.iter().map(&extend).collect();
    let mut powers: Vec<Vec<CElem>> = Vec::with_capacity(n + 1);
    let mut unit_coords = vec![CElem::zero(); n];
    unit_coords[pres.unit_index()] = CElem::one(&desc);
    powers.push(unit_coords);
    for _ in 0..n {
        let prev = powers.last().unwrap();
        let next: Vec<CElem> = la
            .iter()
            .map(|row| {
                let mut acc = CElem::zero();
                for (j, c) in row.iter().enumerate() {
                    if !c.is_zero() && !prev[j].is_zero() {
                        acc = acc.add(&c.mul(&prev[j], &desc));
                    }
                }
                acc
            })
            .collect();
        powers.push(next);
    }
    let traces: Vec<CElem> = (1..=n)
        .map(|k| {
            let mut acc = CElem::zero();
            for (c, t) in powers[k].iter().zip(trace_ext.iter()) {
                if !c.is_zero() && !t.is_zero() {
                    acc = acc.add(&c.mul(t, &desc));
                }
            }
            acc
        })
        .collect();
    let cs = newton_coefficients(&traces, &desc);
    let mut result = powers[n].clone();
    for (i, ck) in cs.iter().enumerate() {
        let k = i + 1;
        for (t, slot) in result.iter_mut().enumerate() {
            let term = ck.mul(&powers[n - k][t], &desc);
            *slot = if k % 2 == 1 {
                slot.sub(&term)
            } else {
                slot.add(&term)
            };
        }
    }
    if let Some(bad) = result.iter().position(|c| !c.is_zero()) {
        return Err(CayleyError::CHViolation {
            detail: format!(
                "generic characteristic polynomial leaves a nonzero coordinate at basis word {}: {}",
                pres.basis_label(bad),
                result[bad].display(&desc)
            ),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::CentralDescriptor;

    const TAFT2: &str = include_str!("../../../../corpus/taft_inf_2.hopf");
    const EX3_8: &str = include_str!("../../../../corpus/ex3_8.hopf");

    #[test]
    fn generic_cayley_hamilton_on_rank_four_fibers() {
        for text in [TAFT2, EX3_8] {
            let pres = crate::presentation::parse_presentation(text).unwrap();
            let td = crate::cayley::regular_trace_over_c(&pres).unwrap();
            verify_cayley_hamilton_generic(&pres, &td).unwrap();
        }
    }

    fn c(i: i64, d: &CentralDescriptor) -> CElem {
        CElem::from_scalar(d, Scalar::from_int(i))
    }

    #[test]
    fn newton_small_cases() {
        let d = CentralDescriptor::default();
        // diag(1,2): traces (3,5) -> e_1 = 3, e_2 = 2
        let cs = newton_coefficients(&[c(3, &d), c(5, &d)], &d);
        assert_eq!(cs, vec![c(3, &d), c(2, &d)]);
        // 2x2 identity: traces (2,2) -> (2,1)
        let cs = newton_coefficients(&[c(2, &d), c(2, &d)], &d);
        assert_eq!(cs, vec![c(2, &d), c(1, &d)]);
        // nilpotent: traces (0,0) -> (0,0)
        let cs = newton_coefficients(&[c(0, &d), c(0, &d)], &d);
        assert_eq!(cs, vec![CElem::zero(), CElem::zero()]);
    }
}
