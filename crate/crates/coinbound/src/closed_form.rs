//! Exact formulas for the two-coin problem: the classic gap count, the
//! Frobenius number, and the representable-value count under supply limits.

use crate::domain::{checked_add, checked_mul, BoundedInstance, CaseTag, DenominationPair, Error};

/// The two classic scalars of an unbounded coprime pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicSummary {
    h: u64,
    g: i64,
}

impl ClassicSummary {
    pub fn compute(d: &DenominationPair) -> Result<Self, Error> {
        Ok(ClassicSummary {
            h: sylvester_count(d)?,
            g: frobenius_number(d)?,
        })
    }

    /// Count of unachievable values in the unbounded problem, `(m-1)(n-1)/2`.
    pub fn h(&self) -> u64 {
        self.h
    }

    /// Frobenius number `m*n - m - n`; `-1` when every value is achievable.
    pub fn g(&self) -> i64 {
        self.g
    }
}

/// Count of unachievable non-negative integers for the unbounded problem:
/// `(m-1)(n-1)/2`.
pub fn sylvester_count(d: &DenominationPair) -> Result<u64, Error> {
    // The product is computed before halving; it is even for every coprime
    // pair (m and n are never both even).
    let product = checked_mul(d.m() - 1, d.n() - 1)?;
    debug_assert_eq!(product % 2, 0);
    Ok(product / 2)
}

/// Largest unachievable value of the unbounded problem, `m*n - m - n`.
///
/// Returns `-1` when `min(m, n) = 1`, the convention for "no value is
/// unachievable"; that is the only negative output.
pub fn frobenius_number(d: &DenominationPair) -> Result<i64, Error> {
    let product = checked_mul(d.m(), d.n())?;
    let g = product as i128 - d.m() as i128 - d.n() as i128;
    i64::try_from(g).map_err(|_| Error::Overflow)
}

/// Exact size of the reachable-value set `S` of a bounded instance.
///
/// `A*m + B*n + 1 - 2h` in the `LargeCoefficients` case and
/// `(A+1)(B+1)` otherwise; the branch is taken straight from
/// [`BoundedInstance::classify`].
pub fn count_representable(inst: &BoundedInstance) -> Result<u64, Error> {
    match inst.classify() {
        CaseTag::LargeCoefficients => {
            let two_h = checked_mul(2, sylvester_count(&inst.denoms())?)?;
            checked_add(inst.total(), 1)?
                .checked_sub(two_h)
                .ok_or(Error::Overflow)
        }
        CaseTag::SmallCoefficients => checked_mul(
            checked_add(inst.supply_m(), 1)?,
            checked_add(inst.supply_n(), 1)?,
        ),
    }
}

/// Number of unachievable values of a bounded instance,
/// `(A*m + B*n + 1) - |S|`; equals `2h` in the `LargeCoefficients` case.
pub fn count_gaps(inst: &BoundedInstance) -> Result<u64, Error> {
    checked_add(inst.total(), 1)?
        .checked_sub(count_representable(inst)?)
        .ok_or(Error::Overflow)
}
