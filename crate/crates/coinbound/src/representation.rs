//! Constructive operations: reflection, the unbounded gap set, the structured
//! bounded gap report, and witness-finding for a single target value.

use crate::closed_form::{count_gaps, frobenius_number};
use crate::domain::{
    checked_add, checked_mul, mod_inverse, BoundedInstance, CaseTag, DenominationPair, Error,
    GapReport, Representation,
};
use crate::oracle::{self, GeneralInstance, DEFAULT_CAPACITY};

/// Below this many coefficient pairs, the small-case gap report enumerates
/// the value set directly instead of running the bitset oracle.
const PAIR_ENUMERATION_LIMIT: u64 = 4096;

/// The gap set of the classic unbounded problem, ascending.
///
/// Has exactly `(m-1)(n-1)/2` elements, the largest being `m*n - m - n`;
/// empty when `min(m, n) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnboundedGapSet {
    values: Vec<u64>,
}

impl UnboundedGapSet {
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest gap (the Frobenius number) when any exist.
    pub fn largest(&self) -> Option<u64> {
        self.values.last().copied()
    }
}

/// Mirrors `s` across the midpoint of the value range: `(A*m + B*n) - s`.
///
/// Complementing a witness `(a, b)` to `(A-a, B-b)` realizes exactly this
/// map, so reachability is preserved under it.
pub fn reflect(inst: &BoundedInstance, s: i64) -> Result<u64, Error> {
    let total = inst.total();
    match in_range(s, total) {
        Some(s) => Ok(total - s),
        None => Err(Error::OutOfRange { value: s, max: total }),
    }
}

fn in_range(s: i64, total: u64) -> Option<u64> {
    if s < 0 || s as u64 > total {
        None
    } else {
        Some(s as u64)
    }
}

/// Computes the unbounded gap set by a residue-class scan: `v` is achievable
/// iff the least `a >= 0` with `a*m ≡ v (mod n)` satisfies `a*m <= v`.
///
/// Runs in `O(m*n)` time and holds the `(m-1)(n-1)/2` gaps in memory.
pub fn unbounded_gaps(d: &DenominationPair) -> Result<UnboundedGapSet, Error> {
    let (m, n) = (d.m(), d.n());
    if m == 1 || n == 1 {
        return Ok(UnboundedGapSet { values: Vec::new() });
    }
    let largest = frobenius_number(d)? as u64; // >= 1 since m, n >= 2
    let inv = mod_inverse(m % n, n);
    let mut values = Vec::new();
    for v in 0..=largest {
        let least_a = ((v % n) as u128 * inv as u128 % n as u128) as u64;
        if least_a as u128 * m as u128 > v as u128 {
            values.push(v);
        }
    }
    Ok(UnboundedGapSet { values })
}

/// Full gap report for a bounded instance, using the default oracle capacity
/// as the materialization guard. See [`bounded_gaps_with_capacity`].
pub fn bounded_gaps(inst: &BoundedInstance) -> Result<GapReport, Error> {
    bounded_gaps_with_capacity(inst, DEFAULT_CAPACITY)
}

/// Full gap report for a bounded instance.
///
/// In the `LargeCoefficients` case the report is assembled structurally: the
/// lower half is the unbounded gap set, the upper half its reflection, and
/// the two halves never meet (every unbounded gap sits strictly below the
/// midpoint, every reflection strictly above). In the `SmallCoefficients`
/// case the gaps are found extensionally — by enumerating the at most
/// `(A+1)(B+1)` reachable values when that count is small, through the
/// bitset oracle otherwise — and split at `floor(total/2)`.
///
/// `capacity` bounds the number of gaps materialized (and, on the oracle
/// path, the dense scan range); exceeding it is [`Error::CapacityExceeded`].
pub fn bounded_gaps_with_capacity(
    inst: &BoundedInstance,
    capacity: u64,
) -> Result<GapReport, Error> {
    let gap_count = count_gaps(inst)?;
    if gap_count > capacity {
        return Err(Error::CapacityExceeded {
            total: gap_count,
            capacity,
        });
    }
    let total = inst.total();
    match inst.classify() {
        CaseTag::LargeCoefficients => {
            let lower = unbounded_gaps(&inst.denoms())?.values;
            let upper: Vec<u64> = lower.iter().rev().map(|&v| total - v).collect();
            debug_assert!(
                lower.is_empty() || 2 * *lower.last().unwrap() < total,
                "unbounded gaps stay below the midpoint in the large case"
            );
            let mut gaps = lower.clone();
            gaps.extend_from_slice(&upper);
            Ok(GapReport::new(gaps, lower, upper, CaseTag::LargeCoefficients))
        }
        CaseTag::SmallCoefficients => {
            let pairs = checked_mul(
                checked_add(inst.supply_m(), 1)?,
                checked_add(inst.supply_n(), 1)?,
            )?;
            let gaps = if pairs <= PAIR_ENUMERATION_LIMIT {
                small_case_gaps_by_enumeration(inst)
            } else {
                oracle::gaps(&GeneralInstance::from(inst), capacity)?
            };
            let midpoint = total / 2;
            let split = gaps.partition_point(|&v| v <= midpoint);
            let lower = gaps[..split].to_vec();
            let upper = gaps[split..].to_vec();
            Ok(GapReport::new(gaps, lower, upper, CaseTag::SmallCoefficients))
        }
    }
}

/// Enumerates the whole value set and emits the holes between consecutive
/// reachable values. `0` and `total` are always reachable, so the walk
/// covers the full range.
fn small_case_gaps_by_enumeration(inst: &BoundedInstance) -> Vec<u64> {
    let mut values = Vec::with_capacity(((inst.supply_m() + 1) * (inst.supply_n() + 1)) as usize);
    for a in 0..=inst.supply_m() {
        for b in 0..=inst.supply_n() {
            values.push(a * inst.m() + b * inst.n());
        }
    }
    values.sort_unstable();
    values.dedup();
    let mut gaps = Vec::new();
    for pair in values.windows(2) {
        for missing in pair[0] + 1..pair[1] {
            gaps.push(missing);
        }
    }
    gaps
}

/// Finds a witness `(a, b)` in the supply box with `a*m + b*n = s`, or `None`
/// when `s` is a gap. Among valid witnesses the one with minimal `a` is
/// returned.
///
/// Every integer solution of `a*m + b*n = s` has `a ≡ s * m^{-1} (mod n)`
/// (the extended Euclidean identity), and sliding `a` by `n` steps `b` by
/// `-m` along the solution line. The admissible window for `a` — inside the
/// supply box and keeping `b` non-negative — is computed directly, replacing
/// the walk along the line by one division.
pub fn find_representation(
    inst: &BoundedInstance,
    s: i64,
) -> Result<Option<Representation>, Error> {
    let total = inst.total();
    let s = match in_range(s, total) {
        Some(s) => s,
        None => return Err(Error::OutOfRange { value: s, max: total }),
    };
    let (m, n) = (inst.m(), inst.n());

    let residue = if n == 1 {
        0
    } else {
        ((s % n) as u128 * mod_inverse(m % n, n) as u128 % n as u128) as u64
    };
    // a*m <= s keeps b >= 0; a*m >= s - B*n keeps b <= B; a <= A is the box.
    let window_hi = inst.supply_m().min(s / m);
    let reachable_by_n = inst.supply_n() * n;
    let window_lo = if s <= reachable_by_n {
        0
    } else {
        (s - reachable_by_n).div_ceil(m)
    };
    if window_lo > window_hi {
        return Ok(None);
    }
    let a = if residue >= window_lo {
        residue as u128
    } else {
        residue as u128 + ((window_lo - residue) as u128).div_ceil(n as u128) * n as u128
    };
    if a > window_hi as u128 {
        return Ok(None);
    }
    let a = a as u64;
    let b = (s - a * m) / n;
    Ok(Some(Representation::from_parts(inst, a, b)))
}
