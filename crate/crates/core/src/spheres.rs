//! Groups of homotopy spheres `Θ_d` for `d <= 19`, their split subgroups,
//! and the order of the cyclic subgroup `bP_{d+1}`.
//!
//! A sphere `Σ ∈ Θ_d` is split when `η·Σ ∈ Θ_{d+1}` is divisible by 2.
//! The table rows below are literal data; `bP` is computed from Bernoulli
//! numbers and checked to divide `|Θ_d|`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::abgroups::{subgroup_contains, FiniteAbelianGroup, GroupElement};
use crate::error::{domain, Error, Result};
use crate::scalars::bernoulli;

/// Largest dimension with tabulated data.
pub const MAX_TABLE_DIM: usize = 19;

/// `multiplicity` copies of `Z/order`, all split or none.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DisplayBlock {
    pub order: u64,
    pub multiplicity: usize,
    pub split: bool,
}

const fn block(order: u64, multiplicity: usize, split: bool) -> DisplayBlock {
    DisplayBlock { order, multiplicity, split }
}

// Rows for 7 <= d <= 19, summands in displayed order.
const TABLE: [(usize, &[DisplayBlock]); 13] = [
    (7, &[block(28, 1, true)]),
    (8, &[block(2, 1, false)]),
    (9, &[block(2, 2, true), block(2, 1, false)]),
    (10, &[block(6, 1, true)]),
    (11, &[block(992, 1, true)]),
    (12, &[]),
    (13, &[block(3, 1, true)]),
    (14, &[block(2, 1, false)]),
    (15, &[block(2, 1, true), block(8128, 1, true)]),
    (16, &[block(2, 1, false)]),
    (17, &[block(2, 3, true), block(2, 1, false)]),
    (18, &[block(8, 1, true), block(2, 1, true)]),
    (19, &[block(2, 1, true), block(523264, 1, true)]),
];

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThetaRecord {
    pub d: usize,
    pub blocks: Vec<DisplayBlock>,
    pub theta: FiniteAbelianGroup,
    /// Generators of the split subgroup, as elements of `theta`.
    pub split_generators: Vec<GroupElement>,
}

fn render_block(b: &DisplayBlock) -> String {
    if b.multiplicity == 1 {
        format!("Z/{}", b.order)
    } else {
        format!("(Z/{})^{}", b.order, b.multiplicity)
    }
}

impl ThetaRecord {
    /// `Θ_d` in displayed notation, e.g. `(Z/2)^2 (+) Z/2`.
    pub fn theta_string(&self) -> String {
        if self.blocks.is_empty() {
            return "0".into();
        }
        self.blocks.iter().map(render_block).collect::<Vec<_>>().join(" (+) ")
    }

    /// The split subgroup in displayed notation, non-split blocks as `0`.
    pub fn split_string(&self) -> String {
        if self.blocks.iter().all(|b| !b.split) {
            return "0".into();
        }
        self.blocks
            .iter()
            .map(|b| if b.split { render_block(b) } else { "0".into() })
            .collect::<Vec<_>>()
            .join(" (+) ")
    }

    /// The split subgroup as an abstract group.
    pub fn split_group(&self) -> FiniteAbelianGroup {
        let factors = self
            .blocks
            .iter()
            .filter(|b| b.split)
            .flat_map(|b| std::iter::repeat_n(b.order, b.multiplicity))
            .collect();
        FiniteAbelianGroup::new(factors).expect("table orders are at least 2")
    }

    pub fn order(&self) -> BigUint {
        self.theta.order().expect("finite")
    }

    pub fn is_split(&self, sigma: &GroupElement) -> Result<bool> {
        if !self.theta.contains(sigma) {
            return domain(format!("{sigma} is not an element of Theta_{} = {}", self.d, self.theta_string()));
        }
        subgroup_contains(&self.theta, &self.split_generators, sigma)
    }
}

/// Tabulated row of `Θ_d`; `d <= 6` other than 4 is trivial.
pub fn theta_record(d: usize) -> Result<ThetaRecord> {
    if d == 0 {
        return domain("homotopy spheres start in dimension 1");
    }
    if d == 4 {
        return Err(Error::UnsupportedDimension("Theta_4 is not tabulated".into()));
    }
    if d > MAX_TABLE_DIM {
        return Err(Error::UnsupportedDimension(format!("Theta_{d} is beyond the table (d <= {MAX_TABLE_DIM})")));
    }
    let blocks: Vec<DisplayBlock> =
        if d <= 6 { Vec::new() } else { TABLE.iter().find(|(k, _)| *k == d).expect("row").1.to_vec() };
    let factors: Vec<u64> = blocks.iter().flat_map(|b| std::iter::repeat_n(b.order, b.multiplicity)).collect();
    let theta = FiniteAbelianGroup::new(factors.clone())?;
    let mut split_generators = Vec::new();
    let mut coord = 0;
    for b in &blocks {
        for _ in 0..b.multiplicity {
            if b.split {
                let mut c = vec![0; factors.len()];
                c[coord] = 1;
                split_generators.push(theta.element(&c)?);
            }
            coord += 1;
        }
    }
    Ok(ThetaRecord { d, blocks, theta, split_generators })
}

/// Whether `η·Σ` is divisible by 2, read from the table.
pub fn is_split_sphere(d: usize, sigma: &GroupElement) -> Result<bool> {
    theta_record(d)?.is_split(sigma)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BpOrder {
    /// Order of `bP_{d+1}`; 1 means trivial.
    Order(BigInt),
    Unknown,
}

impl fmt::Display for BpOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BpOrder::Order(n) => write!(f, "{n}"),
            BpOrder::Unknown => f.write_str("unknown"),
        }
    }
}

fn kervaire_exception(d: usize) -> Option<u32> {
    (1..=7u32).find(|&k| (1usize << k) >= 3 && (1usize << k) - 3 == d)
}

/// `#bP_{d+1}` for `d >= 5`:
/// `2^{2k-2} (2^{2k-1} - 1) num(4|B_{2k}|/k)` for `d = 4k - 1`,
/// 2 for `d = 4k + 1` unless `d = 2^k - 3` (trivial for `k <= 6`, open for
/// `k = 7`), trivial for even `d`.
pub fn bp_order(d: usize) -> Result<BpOrder> {
    if d < 5 {
        return domain(format!("bP_(d+1) is only described for d >= 5, got {d}"));
    }
    if d.is_multiple_of(2) {
        return Ok(BpOrder::Order(BigInt::one()));
    }
    if d % 4 == 1 {
        return Ok(match kervaire_exception(d) {
            Some(7) => BpOrder::Unknown,
            Some(_) => BpOrder::Order(BigInt::one()),
            None => BpOrder::Order(BigInt::from(2)),
        });
    }
    let k = (d + 1) / 4;
    let b = bernoulli(2 * k as u32)?;
    let q = b.abs() * crate::scalars::rat(4, k as i64);
    let two = BigInt::from(2);
    let order = two.pow(2 * k as u32 - 2) * (two.pow(2 * k as u32 - 1) - BigInt::one()) * q.numer().clone();
    Ok(BpOrder::Order(order))
}

/// True when `bP_{d+1}` can be cross-checked against the table.
pub fn bp_in_table_range(d: usize) -> bool {
    d <= MAX_TABLE_DIM
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReductionCase {
    /// Divisibility of `η·Σ` in `Θ_{d+1}` is equivalent to divisibility of
    /// `η·[Σ]` in `coker(J)_{d+1}`.
    ConverseHolds,
    /// Only the implication from `Θ_{d+1}` to `coker(J)_{d+1}` is known.
    ForwardOnly,
}

/// When divisibility of `η·Σ` may be tested on `coker(J)`.
pub fn reduction_case(d: usize) -> Result<ReductionCase> {
    if d < 5 {
        return domain(format!("the reduction is only stated for d >= 5, got {d}"));
    }
    let holds = match d % 8 {
        5 => d != 125,
        4 => (1..=6u32).any(|k| (1usize << k) >= 4 && (1usize << k) - 4 == d),
        _ => true,
    };
    Ok(if holds { ReductionCase::ConverseHolds } else { ReductionCase::ForwardOnly })
}

/// Checks that `bP_{d+1}` divides `|Θ_d|` on every tabulated odd row.
pub fn self_check() -> Result<()> {
    for d in (5..=MAX_TABLE_DIM).filter(|d| d % 2 == 1) {
        let BpOrder::Order(bp) = bp_order(d)? else { continue };
        let theta = BigInt::from(theta_record(d)?.order());
        if !(theta.clone() % &bp).is_zero() {
            return Err(Error::InputContradictsTable(format!("bP_{} = {bp} does not divide |Theta_{d}| = {theta}", d + 1)));
        }
    }
    Ok(())
}

/// Two aligned lines `Theta_d = ..` and `Theta^split_d = ..`.
pub fn render_row(r: &ThetaRecord) -> String {
    let left = format!("Theta^split_{}", r.d);
    let w = left.len();
    format!("{:<w$} = {}\n{left} = {}", format!("Theta_{}", r.d), r.theta_string(), r.split_string())
}
