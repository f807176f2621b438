//! Integer partitions as a free commutative monoid, the type map `zeta_q`
//! on it, and the combinatorics of its fibers.
//!
//! Partitions are stored dense and weakly decreasing. Indexing is 1-based
//! through [`Partition::get`], which reads 0 past the last part.
//!
//! `zeta_q` sends a generator `[a]` with `a = k q + l`, `0 <= l < q`, to `l`
//! copies of `k + 1` followed by `q - l` copies of `k`, and extends to all
//! partitions by splicing.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default bound on `m` for enumerations over `Part_m` (|Part_30| = 5604).
pub const DEFAULT_MAX_PARTITION_SUM: usize = 30;

/// A finite weakly decreasing sequence of positive integers.
///
/// The derived order compares part sequences lexicographically, so within
/// `Part_m` the all-ones partition comes first and `[m]` last.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates that `parts` are positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `m` copies of 1.
    pub fn ones(m: usize) -> Self {
        Partition(vec![1; m])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The integer being partitioned.
    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// The `i`-th part, 1-based; 0 beyond the stored length and for `i = 0`.
    pub fn get(&self, i: usize) -> usize {
        match i {
            0 => 0,
            i => self.0.get(i - 1).copied().unwrap_or(0),
        }
    }

    /// The monoid operation: multiset union of parts.
    pub fn splice(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        Partition::from_parts(parts)
    }

    /// Number of parts equal to `b`.
    pub fn mult_of(&self, b: usize) -> usize {
        self.0.iter().filter(|&&p| p == b).count()
    }

    /// `sum_i (2i - 1) * parts_i`, 1-based. For a nilpotent of this Jordan
    /// type the centralizer has exactly this dimension.
    pub fn weight(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| (2 * i + 1) * p)
            .sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| {
                Error::Parse(format!("partition must look like [a,b,...], got {s:?}"))
            })?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition entry {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn check_q(q: usize) -> Result<()> {
    if q == 0 {
        return Err(Error::TypeMismatch("q must be positive".into()));
    }
    Ok(())
}

/// Image of the generator `[a]` under `zeta_q`.
///
/// # Panics
/// If `q == 0`.
pub fn zeta_generator(a: usize, q: usize) -> Partition {
    assert!(q >= 1, "q must be positive");
    let (k, l) = (a / q, a % q);
    let mut parts = vec![k + 1; l];
    if k > 0 {
        parts.extend(std::iter::repeat_n(k, q - l));
    }
    Partition(parts)
}

/// `zeta_q` on an arbitrary partition. Preserves the sum.
///
/// # Panics
/// If `q == 0`.
pub fn zeta_apply(phi: &Partition, q: usize) -> Partition {
    let parts = phi
        .parts()
        .iter()
        .flat_map(|&a| zeta_generator(a, q).0)
        .collect();
    Partition::from_parts(parts)
}

/// Whether `psi` lies in the image of `zeta_q`, i.e. whether an endomorphism
/// with invariant-factor partition `psi` has any Jordan-Chevalley
/// decomposition when `f` has inseparability degree `q`.
///
/// # Panics
/// If `q == 0`.
pub fn existence_check(psi: &Partition, q: usize) -> bool {
    assert!(q >= 1, "q must be positive");
    (1..)
        .map(|i| ((i - 1) * q + 1, i * q))
        .take_while(|&(lo, _)| lo <= psi.len())
        .all(|(lo, hi)| psi.get(lo) <= 1 + psi.get(hi))
}

/// The preimage obtained by summing `psi` over consecutive windows of
/// length `q`.
pub fn standard_preimage(psi: &Partition, q: usize) -> Result<Partition> {
    check_q(q)?;
    if !existence_check(psi, q) {
        return Err(Error::NotInImage(psi.to_string(), q));
    }
    Ok(Partition::from_parts(
        psi.parts().chunks(q).map(|w| w.iter().sum()).collect(),
    ))
}

/// For every `r >= 0`, at most one part lies strictly between `r q` and
/// `(r + 1) q`. Among the preimages of a partition this singles out the
/// standard one.
pub fn satisfies_stride_uniqueness(phi: &Partition, q: usize) -> bool {
    let mut seen = std::collections::HashSet::new();
    phi.parts()
        .iter()
        .filter(|&&p| p % q != 0)
        .all(|&p| seen.insert(p / q))
}

/// All partitions of `m` in ascending lexicographic order.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in 1..=remaining.min(max) {
            prefix.push(first);
            go(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// [`partitions_of`] guarded by a bound on `m`.
pub fn partitions_of_bounded(m: usize, max_sum: usize) -> Result<Vec<Partition>> {
    if m > max_sum {
        return Err(Error::BudgetExceeded(format!(
            "enumerating Part_{m} exceeds the bound m <= {max_sum}"
        )));
    }
    Ok(partitions_of(m))
}

/// The fiber `zeta_q^{-1}(psi)`, by exhausting `Part_m`, in ascending
/// lexicographic order.
pub fn enumerate_preimages(psi: &Partition, q: usize) -> Result<Vec<Partition>> {
    enumerate_preimages_with_budget(psi, q, DEFAULT_MAX_PARTITION_SUM)
}

pub fn enumerate_preimages_with_budget(
    psi: &Partition,
    q: usize,
    max_sum: usize,
) -> Result<Vec<Partition>> {
    check_q(q)?;
    Ok(partitions_of_bounded(psi.sum(), max_sum)?
        .into_iter()
        .filter(|phi| &zeta_apply(phi, q) == psi)
        .collect())
}

/// Whether `psi` has more than one preimage under `zeta_q`: for `q >= 2`,
/// true iff some `r >= 0` and `0 < i1 < i2` satisfy
/// `psi_{(i1-1)q+1} = psi_{(i1-1)q+2} = r + 1` and `psi_{i2 q - 1} = psi_{i2 q} = r`.
pub fn has_multiple_preimages(psi: &Partition, q: usize) -> Result<bool> {
    check_q(q)?;
    if !existence_check(psi, q) {
        return Err(Error::NotInImage(psi.to_string(), q));
    }
    if q == 1 {
        return Ok(false);
    }
    // Past this block index every position reads 0.
    let last = psi.len() / q + 2;
    for i1 in 1..last {
        let top = psi.get((i1 - 1) * q + 1);
        if top == 0 || psi.get((i1 - 1) * q + 2) != top {
            continue;
        }
        let r = top - 1;
        if (i1 + 1..=last).any(|i2| psi.get(i2 * q - 1) == r && psi.get(i2 * q) == r) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Dimension of the variety of decompositions of type `phi` of an
/// endomorphism with invariant-factor partition `psi`:
/// `deg f * (weight(psi) - weight(phi))`.
pub fn jc_dimension(psi: &Partition, phi: &Partition, degf: usize) -> Result<usize> {
    if psi.sum() != phi.sum() {
        return Err(Error::TypeMismatch(format!(
            "{psi} and {phi} partition different integers"
        )));
    }
    let (w_psi, w_phi) = (psi.weight(), phi.weight());
    if w_phi > w_psi {
        return Err(Error::TypeMismatch(format!(
            "{phi} cannot be a type over {psi}: weight {w_phi} exceeds {w_psi}"
        )));
    }
    Ok(degf * (w_psi - w_phi))
}
