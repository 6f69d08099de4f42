//! Domain types shared by every other module: validated problem instances,
//! representations, gap reports, and the dense reachability set.
//!
//! All arithmetic on these types is exact. Quantities live in `u64` (64 usable
//! bits) and every operation that could wrap is checked; overflow surfaces as
//! [`Error::Overflow`], never as a silently wrong number.

use std::fmt;

use thiserror::Error;

/// Errors for instance construction and the operations built on top of it.
///
/// Construction is total: any `(m, n, A, B)` integer 4-tuple either yields a
/// valid instance or exactly one of these errors. Validation order is
/// denominations first (positivity, then coprimality), then bounds, then the
/// overflow check on the instance total.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A coin denomination was zero or negative.
    #[error("denomination must be a positive integer, got {value}")]
    NonPositiveDenomination { value: i64 },

    /// The two denominations share a factor.
    #[error("denominations {m} and {n} are not coprime (gcd = {gcd})")]
    NonCoprime { m: u64, n: u64, gcd: u64 },

    /// A coin-count bound was negative.
    #[error("coin-count bound must be non-negative, got {value}")]
    NegativeBound { value: i64 },

    /// A general (multi-coin) instance was built from an empty coin list.
    #[error("coin list must contain at least one entry")]
    EmptyCoinList,

    /// An exact computation left the 64-bit integer range.
    #[error("exact integer arithmetic overflowed the 64-bit range")]
    Overflow,

    /// A dense scan would exceed the configured oracle capacity.
    #[error("instance total {total} exceeds oracle capacity {capacity}")]
    CapacityExceeded { total: u64, capacity: u64 },

    /// A target value lies outside `{0, ..., total}`.
    #[error("value {value} is outside the instance range 0..={max}")]
    OutOfRange { value: i64, max: u64 },
}

pub(crate) fn checked_mul(a: u64, b: u64) -> Result<u64, Error> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_add(a: u64, b: u64) -> Result<u64, Error> {
    a.checked_add(b).ok_or(Error::Overflow)
}

/// Greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub(crate) fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        return (a, 1, 0);
    }
    let (g, x, y) = ext_gcd(b, a % b);
    (g, y, x - (a / b) * y)
}

/// Inverse of `value` modulo `modulus`, in `0..modulus`.
///
/// Callers guarantee `gcd(value, modulus) = 1` and `modulus >= 1`.
pub(crate) fn mod_inverse(value: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as i128;
    let (g, x, _) = ext_gcd(value as i128 % m, m);
    debug_assert_eq!(g, 1, "mod_inverse requires coprime inputs");
    (((x % m) + m) % m) as u64
}

/// The coprime pair `(m, n)` of coin values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DenominationPair {
    m: u64,
    n: u64,
}

impl DenominationPair {
    /// Validates `m >= 1`, `n >= 1`, and `gcd(m, n) = 1`.
    pub fn new(m: i64, n: i64) -> Result<Self, Error> {
        if m <= 0 {
            return Err(Error::NonPositiveDenomination { value: m });
        }
        if n <= 0 {
            return Err(Error::NonPositiveDenomination { value: n });
        }
        let (m, n) = (m as u64, n as u64);
        let g = gcd(m, n);
        if g != 1 {
            return Err(Error::NonCoprime { m, n, gcd: g });
        }
        Ok(DenominationPair { m, n })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }
}

impl fmt::Display for DenominationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// Which branch of the counting formula an instance falls under.
///
/// `LargeCoefficients` holds exactly when `A >= n` and `B >= m`; everything
/// else, including the degenerate `A = 0` / `B = 0` instances, is
/// `SmallCoefficients`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    LargeCoefficients,
    SmallCoefficients,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::LargeCoefficients => "LargeCoefficients",
            CaseTag::SmallCoefficients => "SmallCoefficients",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A full bounded problem instance: coprime denominations `(m, n)` plus the
/// supply limits `A` (coins of value `m`) and `B` (coins of value `n`).
///
/// The reachable values live in `{0, ..., total}` with
/// `total = A*m + B*n`, which is guaranteed to fit in `u64` by construction.
///
/// Zero supplies are admitted as a degenerate extension of the usual
/// positive-supply setting; such instances always classify as
/// `SmallCoefficients` (`A = 0 < n` holds whenever `n >= 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundedInstance {
    denoms: DenominationPair,
    supply_m: u64,
    supply_n: u64,
    total: u64,
}

impl BoundedInstance {
    /// Validates and builds an instance from raw integers.
    ///
    /// Errors, in validation order: [`Error::NonPositiveDenomination`],
    /// [`Error::NonCoprime`], [`Error::NegativeBound`], [`Error::Overflow`]
    /// (when `A*m + B*n` leaves the 64-bit range).
    pub fn new(m: i64, n: i64, supply_m: i64, supply_n: i64) -> Result<Self, Error> {
        let denoms = DenominationPair::new(m, n)?;
        if supply_m < 0 {
            return Err(Error::NegativeBound { value: supply_m });
        }
        if supply_n < 0 {
            return Err(Error::NegativeBound { value: supply_n });
        }
        let (supply_m, supply_n) = (supply_m as u64, supply_n as u64);
        let total = checked_add(
            checked_mul(supply_m, denoms.m())?,
            checked_mul(supply_n, denoms.n())?,
        )?;
        Ok(BoundedInstance {
            denoms,
            supply_m,
            supply_n,
            total,
        })
    }

    pub fn denoms(&self) -> DenominationPair {
        self.denoms
    }

    pub fn m(&self) -> u64 {
        self.denoms.m()
    }

    pub fn n(&self) -> u64 {
        self.denoms.n()
    }

    /// Maximum number of `m`-coins (the bound `A`).
    pub fn supply_m(&self) -> u64 {
        self.supply_m
    }

    /// Maximum number of `n`-coins (the bound `B`).
    pub fn supply_n(&self) -> u64 {
        self.supply_n
    }

    /// Largest reachable value, `A*m + B*n`.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Case split for the counting formula:
    /// `LargeCoefficients` iff `A >= n` and `B >= m`.
    pub fn classify(&self) -> CaseTag {
        if self.supply_m >= self.denoms.n() && self.supply_n >= self.denoms.m() {
            CaseTag::LargeCoefficients
        } else {
            CaseTag::SmallCoefficients
        }
    }
}

/// A witness pair `(a, b)` inside the supply box with `value = a*m + b*n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Representation {
    a: u64,
    b: u64,
    value: u64,
}

impl Representation {
    pub(crate) fn from_parts(inst: &BoundedInstance, a: u64, b: u64) -> Self {
        debug_assert!(a <= inst.supply_m() && b <= inst.supply_n());
        // No overflow: a*m + b*n <= total by the box bounds.
        let value = a * inst.m() + b * inst.n();
        Representation { a, b, value }
    }

    /// Count of `m`-coins used.
    pub fn a(&self) -> u64 {
        self.a
    }

    /// Count of `n`-coins used.
    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn value(&self) -> u64 {
        self.value
    }
}

/// The set of unachievable values of an instance, decomposed into the half
/// below the midpoint and the half above it.
///
/// In the `LargeCoefficients` case the decomposition is structural: the lower
/// half is the unbounded gap set and the upper half is its reflection, the two
/// are disjoint, and each has exactly `(m-1)(n-1)/2` elements. In the
/// `SmallCoefficients` case the report is computed extensionally and split at
/// `floor(total/2)` (values `<=` the midpoint go in the lower half).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    gaps: Vec<u64>,
    lower_gaps: Vec<u64>,
    upper_gaps: Vec<u64>,
    case: CaseTag,
}

impl GapReport {
    pub(crate) fn new(
        gaps: Vec<u64>,
        lower_gaps: Vec<u64>,
        upper_gaps: Vec<u64>,
        case: CaseTag,
    ) -> Self {
        debug_assert!(gaps.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(gaps.len(), lower_gaps.len() + upper_gaps.len());
        GapReport {
            gaps,
            lower_gaps,
            upper_gaps,
            case,
        }
    }

    /// All unachievable values, ascending.
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Gaps at or below the midpoint, ascending.
    pub fn lower_gaps(&self) -> &[u64] {
        &self.lower_gaps
    }

    /// Gaps above the midpoint, ascending.
    pub fn upper_gaps(&self) -> &[u64] {
        &self.upper_gaps
    }

    pub fn case(&self) -> CaseTag {
        self.case
    }
}

/// Dense membership over `{0, ..., total}` as produced by the oracle.
///
/// Bit `v` is set iff `v` is reachable. The empty combination and the
/// all-coins combination make `0` and `total` reachable in every instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachableSet {
    total: u64,
    words: Vec<u64>,
}

const WORD_BITS: u64 = u64::BITS as u64;

impl ReachableSet {
    /// All-false set over `{0, ..., total}`. Callers bound `total` before
    /// allocating (see the oracle capacity check).
    pub(crate) fn with_total(total: u64) -> Self {
        let nbits = total + 1;
        let words = vec![0u64; nbits.div_ceil(WORD_BITS) as usize];
        ReachableSet { total, words }
    }

    pub(crate) fn insert(&mut self, value: u64) {
        debug_assert!(value <= self.total);
        self.words[(value / WORD_BITS) as usize] |= 1u64 << (value % WORD_BITS);
    }

    /// `self |= self << shift`, clipped to the valid bit range.
    pub(crate) fn or_shifted(&mut self, shift: u64) {
        if shift == 0 || shift > self.total {
            return;
        }
        let word_shift = (shift / WORD_BITS) as usize;
        let bit_shift = (shift % WORD_BITS) as u32;
        if bit_shift == 0 {
            for i in (word_shift..self.words.len()).rev() {
                self.words[i] |= self.words[i - word_shift];
            }
        } else {
            for i in (word_shift..self.words.len()).rev() {
                let lo = self.words[i - word_shift] << bit_shift;
                let hi = if i > word_shift {
                    self.words[i - word_shift - 1] >> (u64::BITS - bit_shift)
                } else {
                    0
                };
                self.words[i] |= lo | hi;
            }
        }
        self.mask_tail();
    }

    fn mask_tail(&mut self) {
        let used = ((self.total + 1) % WORD_BITS) as u32;
        if used != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << used) - 1;
        }
    }

    /// Upper end of the index range (`A*m + B*n` for instance-derived sets).
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Membership test; values beyond `total` are never reachable.
    pub fn contains(&self, value: u64) -> bool {
        if value > self.total {
            return false;
        }
        self.words[(value / WORD_BITS) as usize] >> (value % WORD_BITS) & 1 == 1
    }

    /// Number of reachable values.
    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Unachievable values in `{0, ..., total}`, ascending.
    pub fn gaps(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (i, &word) in self.words.iter().enumerate() {
            let mut missing = !word;
            if i == self.words.len() - 1 {
                let used = ((self.total + 1) % WORD_BITS) as u32;
                if used != 0 {
                    missing &= (1u64 << used) - 1;
                }
            }
            while missing != 0 {
                let bit = missing.trailing_zeros() as u64;
                out.push(i as u64 * WORD_BITS + bit);
                missing &= missing - 1;
            }
        }
        out
    }
}
