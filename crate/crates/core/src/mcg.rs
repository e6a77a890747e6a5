//! Mapping class groups of exotic tori `T^d # Σ`.
//!
//! The Torelli part of the standard torus is the abelian group
//!
//! ```text
//! Ω = ⊕_{0<=j<=d} Λ^j Z^d ⊗ Θ_{d-j+1}  ⊕  Λ^{d-2} Z^d ⊗ Z/2  ⊕  ((Z/2)[Z^d]/(Z/2)[1])_{C_2}
//! ```
//!
//! and the mapping class group of `T^d # Σ` is a semidirect product of
//! `SL_d(Z)` (when `η·Σ` is divisible by 2) or its nontrivial central
//! extension `SLbar_d(Z)` (otherwise) with a quotient of `Ω` that kills
//! `Z^d ⊗ <Σ>` and, in the second case, also `<η·Σ>`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Pow, ToPrimitive};

use crate::abgroups::{
    abelianize_presentation, is_divisible_by_2, quotient_by_element, sl2_amalgam_presentation, FiniteAbelianGroup,
    GroupElement,
};
use crate::error::{domain, Error, Result};
use crate::matrices::{exterior_power, fixed_module_mod_n, IntMatrix, Matrix};
use crate::spheres::{theta_record, ThetaRecord};
use crate::steinberg::GenSymbol;

/// Range of `d` for which `Ω` can be assembled from tabulated `Θ_k`.
pub const OMEGA_DIMS: std::ops::RangeInclusive<usize> = 6..=18;
/// Range of `d` for which the mapping class group is described.
pub const MCG_DIMS: std::ops::RangeInclusive<usize> = 7..=18;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OmegaSummand {
    pub j: usize,
    /// `C(d, j)`, the rank of `Λ^j Z^d`.
    pub multiplicity: u64,
    /// `d - j + 1`.
    pub sphere_dim: usize,
    pub factor: FiniteAbelianGroup,
    /// Factor in displayed notation, e.g. `Theta_8 = Z/2`.
    pub label: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OmegaDescription {
    pub d: usize,
    pub wedge_summands: Vec<OmegaSummand>,
    /// `C(d, d-2)` copies of `Z/2`.
    pub two_torsion_multiplicity: u64,
}

impl OmegaDescription {
    /// Order of the finite part, excluding the infinitely generated summand.
    pub fn finite_order(&self) -> BigUint {
        let wedge = self.wedge_summands.iter().fold(BigUint::one(), |acc, s| {
            acc * s.factor.order().expect("finite").pow(s.multiplicity as u32)
        });
        wedge * BigUint::from(2u8).pow(self.two_torsion_multiplicity as u32)
    }

    pub fn summand(&self, j: usize) -> &OmegaSummand {
        &self.wedge_summands[j]
    }

    /// One line per summand.
    pub fn render(&self) -> String {
        let d = self.d;
        let mut lines: Vec<String> = self
            .wedge_summands
            .iter()
            .map(|s| format!("j={}: Lambda^{} Z^{d} (rank {}) x {}", s.j, s.j, s.multiplicity, s.label))
            .collect();
        lines.push(format!("two-torsion: Lambda^{} Z^{d} (rank {}) x Z/2", d - 2, self.two_torsion_multiplicity));
        lines.push(format!("infinite: ((Z/2)[Z^{d}]/(Z/2)[1])_C2, orbit count r(N) = ((2N+1)^{d} - 1)/2"));
        lines.join("\n")
    }
}

/// Number of `{±1}`-orbits of nonzero vectors in `Z^d` with sup-norm at
/// most `n`: `((2n+1)^d - 1)/2`.
pub fn orbit_count(d: usize, n: u64) -> BigUint {
    (BigUint::from(2 * n + 1).pow(d as u32) - BigUint::one()) / BigUint::from(2u8)
}

/// `Θ_k` for the wedge summands. `Θ_4` is not tabulated; the summand it
/// labels is `π_0 Diff_∂(D^3)`, which is trivial.
fn sphere_group(k: usize) -> Result<(FiniteAbelianGroup, String)> {
    if k == 4 {
        return Ok((FiniteAbelianGroup::trivial(), "Theta_4 = 0".into()));
    }
    let r = theta_record(k)?;
    Ok((r.theta.clone(), format!("Theta_{k} = {}", r.theta_string())))
}

pub fn omega(d: usize) -> Result<OmegaDescription> {
    if !OMEGA_DIMS.contains(&d) {
        return Err(Error::UnsupportedDimension(format!(
            "Omega is described for d >= 6 and needs Theta_(d+1) from the table, so 6 <= d <= 18; got {d}"
        )));
    }
    let wedge_summands = (0..=d)
        .map(|j| {
            let k = d - j + 1;
            let (factor, label) = sphere_group(k)?;
            Ok(OmegaSummand { j, multiplicity: binomial(d as u64, j as u64), sphere_dim: k, factor, label })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OmegaDescription { d, wedge_summands, two_torsion_multiplicity: binomial(d as u64, d as u64 - 2) })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Extension {
    /// `SL_d(Z)` itself.
    Sl,
    /// The nontrivial central extension of `SL_d(Z)` by `Z/2 = <t_d>`.
    SlBar,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MCGStructure {
    pub d: usize,
    pub extension: Extension,
    pub quotient: OmegaDescription,
    pub splitting: bool,
    /// Order of the killed subgroup `<η·Σ> ⊕ Z^d ⊗ <Σ>` (or `Z^d ⊗ <Σ>`).
    pub killed_order: BigUint,
}

impl MCGStructure {
    pub fn extension_line(&self) -> String {
        let d = self.d;
        match self.extension {
            Extension::Sl => format!("SL_{d}(Z)"),
            Extension::SlBar => format!("SLbar_{d}(Z), central Z/2 by t_{d}"),
        }
    }

    pub fn splitting_line(&self) -> String {
        let d1 = self.d + 1;
        if self.splitting {
            format!("split: yes (eta.Sigma is divisible by 2 in Theta_{d1})")
        } else {
            format!("split: no (eta.Sigma is not divisible by 2 in Theta_{d1})")
        }
    }
}

impl fmt::Display for MCGStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "extension: {}", self.extension_line())?;
        writeln!(f, "{}", self.quotient.render())?;
        write!(f, "{}", self.splitting_line())
    }
}

fn element_of(r: &ThetaRecord, x: &GroupElement, what: &str) -> Result<()> {
    if !r.theta.contains(x) {
        return domain(format!("{what} = {x} is not an element of Theta_{} = {}", r.d, r.theta_string()));
    }
    Ok(())
}

/// Structure of the mapping class group of `T^d # Σ`, given `Σ ∈ Θ_d` and
/// the element `η·Σ ∈ Θ_{d+1}`. The divisibility of `η·Σ` must match the
/// tabulated split subgroup.
pub fn mcg_structure(d: usize, sigma: &GroupElement, eta_sigma: &GroupElement) -> Result<MCGStructure> {
    if !MCG_DIMS.contains(&d) {
        return Err(Error::UnsupportedDimension(format!("mapping class groups are described for 7 <= d <= 18, got {d}")));
    }
    let theta = theta_record(d)?;
    let theta_next = theta_record(d + 1)?;
    element_of(&theta, sigma, "Sigma")?;
    element_of(&theta_next, eta_sigma, "eta.Sigma")?;
    let eta_order = theta_next.theta.element_order(eta_sigma).expect("finite");
    if eta_order > 2 {
        return domain(format!("eta.Sigma = {eta_sigma} has order {eta_order}, but eta has order 2"));
    }
    let divisible = is_divisible_by_2(&theta_next.theta, eta_sigma)?;
    let split = theta.is_split(sigma)?;
    if divisible != split {
        return Err(Error::InputContradictsTable(format!(
            "eta.Sigma = {eta_sigma} is {}divisible by 2, but Sigma = {sigma} is {}in Theta^split_{d} = {}",
            if divisible { "" } else { "not " },
            if split { "" } else { "not " },
            theta.split_string()
        )));
    }
    let mut quotient = omega(d)?;
    let sigma_order = theta.theta.element_order(sigma).expect("finite");
    let q1 = quotient_by_element(&theta.theta, sigma)?;
    quotient.wedge_summands[1].label = format!("Theta_{d}/<Sigma> = {q1}");
    quotient.wedge_summands[1].factor = q1;
    let mut killed_order = BigUint::from(sigma_order).pow(d as u32);
    let extension = if divisible {
        Extension::Sl
    } else {
        let q0 = quotient_by_element(&theta_next.theta, eta_sigma)?;
        quotient.wedge_summands[0].label = format!("Theta_{}/<eta.Sigma> = {q0}", d + 1);
        quotient.wedge_summands[0].factor = q0;
        killed_order *= BigUint::from(eta_order);
        Extension::SlBar
    };
    Ok(MCGStructure { d, extension, quotient, splitting: divisible, killed_order })
}

/// A deterministic choice of `η·Σ` consistent with the table: zero when
/// `Σ` is split, otherwise the lexicographically least element of order 2
/// in `Θ_{d+1}` that is not divisible by 2.
pub fn eta_sigma_witness(d: usize, sigma: &GroupElement) -> Result<GroupElement> {
    let theta = theta_record(d)?;
    let next = theta_record(d + 1)?;
    if theta.is_split(sigma)? {
        return Ok(next.theta.identity());
    }
    let halves: Vec<i64> = next.theta.factors().iter().map(|&m| if m % 2 == 0 { (m / 2) as i64 } else { 0 }).collect();
    let mut candidates = Vec::new();
    for mask in 1u32..(1 << halves.len()) {
        let c: Vec<i64> = halves.iter().enumerate().map(|(i, &h)| if mask >> i & 1 == 1 { h } else { 0 }).collect();
        if c.iter().all(|&x| x == 0) {
            continue;
        }
        let x = next.theta.element(&c)?;
        if !is_divisible_by_2(&next.theta, &x)? {
            candidates.push(x);
        }
    }
    candidates.into_iter().min().ok_or_else(|| {
        Error::InputContradictsTable(format!("Theta_{} has no element of order 2 that is not divisible by 2", d + 1))
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Torus {
    NotConnectedSum,
    ConnectedSum(GroupElement),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplittingVerdict {
    pub split: bool,
    pub reason: String,
}

/// Whether the action map of the mapping class group onto `SL_d(Z)` splits.
pub fn splitting_decision(d: usize, torus: &Torus) -> Result<SplittingVerdict> {
    if d == 4 {
        return Err(Error::UnsupportedDimension("d = 4 is excluded".into()));
    }
    match torus {
        Torus::NotConnectedSum => Ok(SplittingVerdict { split: false, reason: "not surjective".into() }),
        Torus::ConnectedSum(sigma) => {
            let r = theta_record(d)?;
            let split = r.is_split(sigma)?;
            let reason = if split {
                format!("Sigma = {sigma} lies in Theta^split_{d} = {}", r.split_string())
            } else {
                format!("Sigma = {sigma} is not in Theta^split_{d} = {}", r.split_string())
            };
            Ok(SplittingVerdict { split, reason })
        }
    }
}

/// The module of vectors in `(Z/n)^{C(d,r)}` fixed by every `Λ^r E_ij`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorelliInvariants {
    /// Invariant factors of the fixed module.
    pub factors: Vec<u64>,
}

impl TorelliInvariants {
    /// Minimal number of generators of the fixed module.
    pub fn count(&self) -> usize {
        self.factors.len()
    }

    pub fn fixed_vectors(&self) -> BigUint {
        self.factors.iter().fold(BigUint::one(), |acc, &f| acc * f)
    }
}

fn stacked_wedge_system(d: usize, r: usize) -> Result<IntMatrix> {
    let blocks = GenSymbol::all(d)
        .into_iter()
        .map(|g| exterior_power(&IntMatrix::elementary(d, g.i - 1, g.j - 1), r).map(|m| m.minus_identity()))
        .collect::<Result<Vec<_>>>()?;
    Matrix::vstack(&blocks)
}

/// Invariants of `Λ^r Z^d ⊗ Z/n` under `SL_d(Z)`, via the Smith normal form
/// of the stacked system `(Λ^r E_ij - id) x = 0`.
pub fn torelli_invariants(d: usize, r: usize, n: u64) -> Result<TorelliInvariants> {
    if d < 2 || r > d || n < 2 {
        return domain(format!("need d >= 2, 0 <= r <= d and n >= 2; got d={d}, r={r}, n={n}"));
    }
    Ok(TorelliInvariants { factors: fixed_module_mod_n(&stacked_wedge_system(d, r)?, n) })
}

/// Number of fixed vectors by exhaustive search, when there are at most
/// `limit` vectors in `(Z/n)^{C(d,r)}`.
pub fn brute_force_fixed_count(d: usize, r: usize, n: u64, limit: u64) -> Result<Option<u64>> {
    if d < 2 || r > d || n < 2 {
        return domain("need d >= 2, 0 <= r <= d and n >= 2");
    }
    let dim = binomial(d as u64, r as u64) as usize;
    let total = BigUint::from(n).pow(dim as u32);
    if total > BigUint::from(limit) {
        return Ok(None);
    }
    let system = stacked_wedge_system(d, r)?;
    let nn = n as i64;
    let rows: Vec<Vec<(usize, i64)>> = (0..system.rows())
        .map(|i| {
            system
                .row(i)
                .iter()
                .enumerate()
                .filter_map(|(j, x)| {
                    let v = x.to_i64().expect("small entry").rem_euclid(nn);
                    (v != 0).then_some((j, v))
                })
                .collect()
        })
        .filter(|row: &Vec<(usize, i64)>| !row.is_empty())
        .collect();
    let mut v = vec![0i64; dim];
    let mut count = 0u64;
    loop {
        if rows.iter().all(|row| row.iter().map(|&(j, a)| a * v[j]).sum::<i64>() % nn == 0) {
            count += 1;
        }
        let mut k = 0;
        while k < dim {
            v[k] += 1;
            if v[k] < nn {
                break;
            }
            v[k] = 0;
            k += 1;
        }
        if k == dim {
            break;
        }
    }
    Ok(Some(count))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtensionData {
    pub h1: FiniteAbelianGroup,
    pub h2: FiniteAbelianGroup,
    /// The central extension of `SL_d(Z)` by `Z/2` is nontrivial.
    pub slbar_nontrivial: bool,
}

/// First two homology groups of `SL_d(Z)`. `H_1` is computed from a
/// presentation; `H_2` is recorded.
pub fn extension_data(d: usize) -> Result<ExtensionData> {
    if d < 2 {
        return domain(format!("SL_d(Z) homology is tabulated for d >= 2, got {d}"));
    }
    let h1 = if d == 2 {
        let (gens, rels) = sl2_amalgam_presentation();
        abelianize_presentation(&gens, &rels)?
    } else {
        FiniteAbelianGroup::trivial()
    };
    let h2 = match d {
        2 => FiniteAbelianGroup::trivial(),
        3 | 4 => FiniteAbelianGroup::new(vec![2, 2])?,
        _ => FiniteAbelianGroup::cyclic(2),
    };
    Ok(ExtensionData { h1, h2, slbar_nontrivial: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steinberg::steinberg_presentation;

    #[test]
    fn omega_d7() {
        let o = omega(7).unwrap();
        assert_eq!(o.summand(1).multiplicity, 7);
        assert_eq!(o.summand(1).factor.to_string(), "Z/28");
        assert_eq!(o.summand(0).factor.to_string(), "Z/2");
        assert_eq!(o.two_torsion_multiplicity, 21);
        assert_eq!(o.summand(4).label, "Theta_4 = 0");
        assert!(omega(5).is_err());
        assert!(omega(19).is_err());
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(orbit_count(7, 1), BigUint::from(1093u32));
        // Enumerate {-1,0,1}^d and {-2..2}^d, pairing v with -v.
        for (d, n) in [(7usize, 1i64), (3, 2), (4, 2)] {
            let side = (2 * n + 1) as usize;
            let mut count = 0u64;
            for idx in 0..side.pow(d as u32) {
                let v: Vec<i64> = (0..d).map(|k| (idx / side.pow(k as u32) % side) as i64 - n).collect();
                let neg: Vec<i64> = v.iter().map(|x| -x).collect();
                if v.iter().any(|&x| x != 0) && v > neg {
                    count += 1;
                }
            }
            assert_eq!(orbit_count(d, n as u64), BigUint::from(count));
        }
    }

    #[test]
    fn finite_order_formula() {
        let o = omega(7).unwrap();
        // Θ_8^1 Θ_7^7 Θ_6.. trivial, Θ_4 taken trivial, 2^21.
        let expected = BigUint::from(2u8) * BigUint::from(28u8).pow(7u32) * BigUint::from(2u8).pow(21u32);
        assert_eq!(o.finite_order(), expected);
    }

    fn el(d: usize, c: &[i64]) -> GroupElement {
        theta_record(d).unwrap().theta.element(c).unwrap()
    }

    #[test]
    fn structure_examples() {
        let s = mcg_structure(7, &el(7, &[0]), &el(8, &[0])).unwrap();
        assert_eq!(s.extension, Extension::Sl);
        assert_eq!(s.quotient, {
            let mut o = omega(7).unwrap();
            o.wedge_summands[1].label = "Theta_7/<Sigma> = Z/28".into();
            o
        });
        let s = mcg_structure(7, &el(7, &[1]), &el(8, &[0])).unwrap();
        assert_eq!(s.extension, Extension::Sl);
        assert!(s.quotient.summand(1).factor.is_trivial());
        assert_eq!(s.quotient.summand(0).factor.to_string(), "Z/2");
        let s = mcg_structure(8, &el(8, &[1]), &el(9, &[0, 0, 1])).unwrap();
        assert_eq!(s.extension, Extension::SlBar);
        assert_eq!(s.quotient.summand(0).factor.to_string(), "Z/2 (+) Z/2");
        assert!(s.quotient.summand(1).factor.is_trivial());
        assert!(s.to_string().starts_with("extension: SLbar_8(Z), central Z/2 by t_8"));
    }

    #[test]
    fn structure_errors() {
        assert!(matches!(
            mcg_structure(8, &el(8, &[1]), &el(9, &[0, 0, 0])),
            Err(Error::InputContradictsTable(_))
        ));
        assert!(matches!(mcg_structure(7, &el(7, &[1]), &el(8, &[1])), Err(Error::InputContradictsTable(_))));
        assert!(matches!(mcg_structure(10, &el(10, &[0]), &el(11, &[2])), Err(Error::Domain(_))));
        assert!(mcg_structure(6, &el(6, &[]), &el(7, &[0])).is_err());
    }

    #[test]
    fn order_bookkeeping_and_coherence() {
        for d in MCG_DIMS {
            let r = theta_record(d).unwrap();
            let mut sigmas = r.theta.generators();
            sigmas.push(r.theta.identity());
            for sigma in sigmas {
                let eta = eta_sigma_witness(d, &sigma).unwrap();
                let s = mcg_structure(d, &sigma, &eta).unwrap();
                assert_eq!(s.quotient.finite_order() * &s.killed_order, omega(d).unwrap().finite_order());
                let v = splitting_decision(d, &Torus::ConnectedSum(sigma)).unwrap();
                assert_eq!(v.split, s.extension == Extension::Sl);
            }
        }
    }

    #[test]
    fn splitting_examples() {
        assert!(!splitting_decision(9, &Torus::ConnectedSum(el(9, &[0, 0, 1]))).unwrap().split);
        for k in 0..6 {
            assert!(splitting_decision(10, &Torus::ConnectedSum(el(10, &[k]))).unwrap().split);
        }
        let v = splitting_decision(11, &Torus::NotConnectedSum).unwrap();
        assert_eq!((v.split, v.reason.as_str()), (false, "not surjective"));
        assert!(splitting_decision(4, &Torus::NotConnectedSum).is_err());
    }

    #[test]
    fn torelli_examples() {
        assert_eq!(torelli_invariants(3, 1, 2).unwrap().count(), 0);
        assert_eq!(torelli_invariants(3, 3, 5).unwrap().count(), 1);
        assert_eq!(torelli_invariants(4, 2, 3).unwrap().count(), 0);
        assert_eq!(brute_force_fixed_count(4, 2, 3, 1_000_000).unwrap(), Some(1));
        assert_eq!(brute_force_fixed_count(5, 2, 6, 1_000_000).unwrap(), None);
        // Λ^1 E_12 mod 2 fixes exactly the vectors with x_2 = 0; all E_ij together fix only 0.
        assert_eq!(brute_force_fixed_count(3, 1, 2, 100).unwrap(), Some(1));
    }

    #[test]
    fn torelli_trivial_representations() {
        for d in 2..=5 {
            for n in [2, 3, 4, 6] {
                assert_eq!(torelli_invariants(d, 0, n).unwrap().factors, vec![n]);
                assert_eq!(torelli_invariants(d, d, n).unwrap().factors, vec![n]);
            }
        }
    }

    #[test]
    fn torelli_matches_brute_force_small() {
        for (d, r, n) in [(3, 1, 4), (3, 2, 6), (4, 1, 6), (4, 3, 4), (3, 0, 5)] {
            let inv = torelli_invariants(d, r, n).unwrap();
            let brute = brute_force_fixed_count(d, r, n, 1_000_000).unwrap().unwrap();
            assert_eq!(inv.fixed_vectors(), BigUint::from(brute));
        }
    }

    #[test]
    fn extension_table() {
        assert_eq!(extension_data(2).unwrap().h1.to_string(), "Z/12");
        assert!(extension_data(2).unwrap().h2.is_trivial());
        assert_eq!(extension_data(3).unwrap().h2.to_string(), "Z/2 (+) Z/2");
        assert_eq!(extension_data(5).unwrap().h2.to_string(), "Z/2");
        assert!(extension_data(7).unwrap().slbar_nontrivial);
        assert!(extension_data(1).is_err());
        let (gens, rels) = steinberg_presentation(3).unwrap();
        assert!(extension_data(3).unwrap().h1.is_isomorphic(&abelianize_presentation(&gens, &rels).unwrap()));
    }
}
