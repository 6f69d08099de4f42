//! Independent brute-force ground truth: dense bounded-knapsack reachability
//! for any number of denominations, coprime or not.
//!
//! The closed-form module never feeds this one; every value the oracle
//! reports comes from shift-OR passes over a bit sequence, so agreement
//! between the two is a real check and not a tautology.

use crate::domain::{checked_add, checked_mul, BoundedInstance, Error, ReachableSet};

/// Default cap on the dense scan range, in values (bit sequence ~1.25 MB).
/// Override per call, or via `COINBOUND_CAPACITY` / `--capacity` on the CLI.
pub const DEFAULT_CAPACITY: u64 = 10_000_000;

/// A multiset of coins: `(denomination, bound)` entries, at least one.
///
/// Duplicate denominations are allowed and are NOT merged; each entry
/// contributes its own bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralInstance {
    coins: Vec<(u64, u64)>,
    total: u64,
}

impl GeneralInstance {
    /// Validates denominations (`>= 1`) and computes `total`, the sum of
    /// `bound * denomination` over all entries, with checked arithmetic.
    pub fn new(coins: Vec<(u64, u64)>) -> Result<Self, Error> {
        if coins.is_empty() {
            return Err(Error::EmptyCoinList);
        }
        let mut total = 0u64;
        for &(denomination, bound) in &coins {
            if denomination == 0 {
                return Err(Error::NonPositiveDenomination { value: 0 });
            }
            total = checked_add(total, checked_mul(denomination, bound)?)?;
        }
        Ok(GeneralInstance { coins, total })
    }

    pub fn coins(&self) -> &[(u64, u64)] {
        &self.coins
    }

    /// Sum of `bound * denomination` over all coins.
    pub fn total(&self) -> u64 {
        self.total
    }
}

impl From<&BoundedInstance> for GeneralInstance {
    fn from(inst: &BoundedInstance) -> Self {
        GeneralInstance {
            coins: vec![(inst.m(), inst.supply_m()), (inst.n(), inst.supply_n())],
            total: inst.total(),
        }
    }
}

/// Computes the full membership bit sequence over `{0, ..., total}`.
///
/// For each coin the bound is decomposed into binary pieces `1, 2, 4, ...,
/// remainder`, and each piece triggers one shifted-OR pass; the subset sums
/// of the pieces cover every admissible coin count exactly once. Fails with
/// [`Error::CapacityExceeded`] when `total > capacity`.
pub fn reachable_set(inst: &GeneralInstance, capacity: u64) -> Result<ReachableSet, Error> {
    if inst.total > capacity {
        return Err(Error::CapacityExceeded {
            total: inst.total,
            capacity,
        });
    }
    let mut set = ReachableSet::with_total(inst.total);
    set.insert(0);
    for &(denomination, bound) in &inst.coins {
        let mut remaining = bound;
        let mut step = 1u64;
        while remaining > 0 {
            let piece = step.min(remaining);
            // piece * denomination <= bound * denomination <= total: no overflow.
            set.or_shifted(piece * denomination);
            remaining -= piece;
            step = step.saturating_mul(2);
        }
    }
    Ok(set)
}

/// Number of reachable values, `|S|`.
pub fn count(inst: &GeneralInstance, capacity: u64) -> Result<u64, Error> {
    Ok(reachable_set(inst, capacity)?.count())
}

/// Unachievable values in `{0, ..., total}`, ascending.
pub fn gaps(inst: &GeneralInstance, capacity: u64) -> Result<Vec<u64>, Error> {
    Ok(reachable_set(inst, capacity)?.gaps())
}
