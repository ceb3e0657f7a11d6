//! Closed sets over a numerical semigroup and the structure theorem for
//! semigroups with large quasi-ordinarization number.
//!
//! A set `B` is `Ω`-closed when `b + λ` lies in `B` or exceeds `max(B)` for
//! every `b ∈ B` and `λ ∈ Ω`. Taking `b = 0` shows that a closed set with
//! `0 ∈ B` contains every member of `Ω` up to `max(B)`, so a closed set of
//! size `i` has `max(B) < λ_i`, and the rest of `B` is a set of gaps of `Ω`
//! that is upward closed under adding nonzero members (within `[0, max(B)]`).
//! Counting therefore reduces to counting such up-sets for each choice of
//! `max(B)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::explore::{CountTable, Explorer, TableKind};
use crate::semigroup::{low_bits, Bits, Semigroup, GENUS_LIMIT};
use crate::transforms::qo_number;

/// An `Ω`-closed set containing 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClosedSet {
    base: Semigroup,
    elements: Vec<u32>,
}

impl ClosedSet {
    /// Validates that `elements` is strictly increasing, starts at 0 and is
    /// closed over `base`.
    pub fn new(base: Semigroup, elements: Vec<u32>) -> Result<Self> {
        if elements.first() != Some(&0) {
            return Err(Error::InvalidClosedSet("first element must be 0".into()));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidClosedSet("elements must be strictly increasing".into()));
        }
        if let Some((b, l)) = closure_witness(&base, &elements) {
            return Err(Error::InvalidClosedSet(format!(
                "{b} + {l} = {} is neither in the set nor above its maximum",
                b + l
            )));
        }
        Ok(ClosedSet { base, elements })
    }

    pub fn base(&self) -> &Semigroup {
        &self.base
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max(&self) -> u32 {
        *self.elements.last().unwrap()
    }
}

/// A pair `(b, λ)` breaking closure of `set` over `base`, if any.
pub fn closure_witness(base: &Semigroup, set: &[u32]) -> Option<(u32, u32)> {
    let max = *set.iter().max()?;
    for &b in set {
        for l in 1..=max.saturating_sub(b) {
            if base.is_member(l) && !set.contains(&(b + l)) {
                return Some((b, l));
            }
        }
    }
    None
}

/// Whether `set` is closed over `base`.
pub fn is_closed(base: &Semigroup, set: &[u32]) -> bool {
    closure_witness(base, set).is_none()
}

/// Walks every closed set of `size` over `omega` containing 0, calling
/// `visit` with its membership mask. Returns the number visited.
fn for_each_closed_set(omega: &Semigroup, size: u32, mut visit: impl FnMut(u128)) -> u64 {
    if size == 0 {
        return 0;
    }
    let members = omega.full_mask();
    let bound = omega.nth_member(size);
    let mut total = 0;
    for max in 0..bound {
        let base = members & low_bits(max + 1);
        let top = 1u128 << max;
        let forced = (base | top).count_ones();
        if forced > size {
            continue;
        }
        let gaps: Vec<u32> = Bits(!members & low_bits(max)).collect();
        // Gaps `y` in (b, max] with `y - b` a nonzero member must be chosen
        // whenever `b` is.
        let required: Vec<u128> = gaps
            .iter()
            .map(|&b| {
                let shifted = (members & !1) << b;
                shifted & !members & low_bits(max + 1)
            })
            .collect();
        let mut search = UpSetSearch {
            gaps: &gaps,
            required: &required,
            visit: &mut |chosen: u128| visit(base | top | chosen),
        };
        total += search.run(gaps.len(), top, size - forced);
    }
    total
}

struct UpSetSearch<'a, F: FnMut(u128)> {
    gaps: &'a [u32],
    required: &'a [u128],
    visit: &'a mut F,
}

impl<F: FnMut(u128)> UpSetSearch<'_, F> {
    /// Chooses `left` more gaps among the first `upto`, scanning downward.
    /// `chosen` also holds `max(B)`, which may itself be a gap.
    fn run(&mut self, upto: usize, chosen: u128, left: u32) -> u64 {
        if left == 0 {
            (self.visit)(chosen);
            return 1;
        }
        if (upto as u32) < left {
            return 0;
        }
        let i = upto - 1;
        let b = self.gaps[i];
        let mut count = 0;
        if self.required[i] & !chosen == 0 {
            count += self.run(i, chosen | 1u128 << b, left - 1);
        }
        count + self.run(i, chosen, left)
    }
}

/// Number of closed sets of the given size over `omega` containing 0.
pub fn count_closed_sets(omega: &Semigroup, size: u32) -> u64 {
    for_each_closed_set(omega, size, |_| {})
}

/// All closed sets of the given size over `omega` containing 0, sorted
/// lexicographically.
pub fn enumerate_closed_sets(omega: &Semigroup, size: u32) -> Vec<ClosedSet> {
    let mut out = Vec::new();
    for_each_closed_set(omega, size, |mask| {
        out.push(ClosedSet {
            base: *omega,
            elements: Bits(mask).collect(),
        })
    });
    out.sort();
    out
}

/// `f_ω`: the number of pairs `(Ω, B)` with `Ω` of genus `ω` and `B` an
/// `Ω`-closed set of size `ω + 1` containing 0.
pub fn f_omega(explorer: &Explorer, omega: u32) -> Result<u64> {
    explorer.check_genus(omega)?;
    let bases = explorer.semigroups_of_genus(omega)?;
    let counts: Vec<u64> = if explorer.is_parallel() {
        bases.par_iter().map(|s| count_closed_sets(s, omega + 1)).collect()
    } else {
        bases.iter().map(|s| count_closed_sets(s, omega + 1)).collect()
    };
    counts
        .into_iter()
        .try_fold(0u64, |acc, c| acc.checked_add(c))
        .ok_or(Error::CountOverflow { genus: omega })
}

/// `f_ω` for `ω = 0..=max`.
pub fn f_omega_table(explorer: &Explorer, max: u32) -> Result<CountTable> {
    let rows = (0..=max)
        .map(|w| f_omega(explorer, w).map(|f| vec![f]))
        .collect::<Result<Vec<_>>>()?;
    CountTable::from_rows(TableKind::FOmega, &rows)
}

/// Whether `(g, q)` lies in the range `(g + 1) / 3 <= q <= (g - 1) / 2`
/// covered by the structure theorem.
pub fn in_high_range(g: u32, q: u32) -> bool {
    g >= 1 && 3 * q >= g + 1 && q <= (g - 1) / 2
}

/// A genus-`g` semigroup with quasi-ordinarization number `q` written as a
/// semigroup `Ω` of genus `ω = (g - 1) / 2 - q` and a closed set of size
/// `ω + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HighDecomposition {
    pub g: u32,
    pub q: u32,
    pub omega: u32,
    pub base: Semigroup,
    pub b: ClosedSet,
}

/// `{2j : j ∈ Ω} ∪ {2j - 2 max(B) + 2g + 1 : j ∈ B} ∪ [2g, ∞)`.
pub fn encode_high(base: &Semigroup, b: &ClosedSet, g: u32) -> Result<Semigroup> {
    let omega = base.genus();
    let half = g.saturating_sub(1) / 2;
    if g == 0 || omega > half {
        return Err(Error::RangeViolation { genus: g, q: 0 });
    }
    let q = half - omega;
    if !in_high_range(g, q) {
        return Err(Error::RangeViolation { genus: g, q });
    }
    if g > GENUS_LIMIT {
        return Err(Error::GenusLimit { limit: GENUS_LIMIT });
    }
    if b.base() != base {
        return Err(Error::InvalidClosedSet("closed set is over a different semigroup".into()));
    }
    if b.len() as u32 != omega + 1 {
        return Err(Error::InvalidClosedSet(format!(
            "size {} differs from genus + 1 = {}",
            b.len(),
            omega + 1
        )));
    }
    let mut full = !low_bits(2 * g);
    for j in base.small_members() {
        full |= 1u128 << (2 * j);
    }
    for j in g.min(base.conductor())..g {
        full |= 1u128 << (2 * j);
    }
    for &j in b.elements() {
        full |= 1u128 << (2 * j + 2 * g + 1 - 2 * b.max());
    }
    let s = Semigroup::try_from_full_mask(full)?;
    assert_eq!(s.genus(), g, "encoded semigroup has the wrong genus");
    assert_eq!(qo_number(&s), q, "encoded semigroup has the wrong quasi-ordinarization number");
    Ok(s)
}

/// Inverse of [`encode_high`] for semigroups in the theorem's range.
pub fn decode_high(s: &Semigroup) -> Result<HighDecomposition> {
    let g = s.genus();
    let q = qo_number(s);
    if !in_high_range(g, q) {
        return Err(Error::RangeViolation { genus: g, q });
    }
    if let Some(member) = s.small_members().find(|&x| x <= g - 1 && x % 2 == 1) {
        return Err(Error::OddSmallMember { member });
    }
    let omega = (g - 1) / 2 - q;
    let mut full = !low_bits(g);
    for k in 0..g {
        if s.is_member(2 * k) {
            full |= 1u128 << k;
        }
    }
    let base = Semigroup::from_full_mask(full);
    assert_eq!(base.genus(), omega, "halved even part has the wrong genus");

    let mut bar: Vec<u32> = s
        .small_members()
        .chain(s.conductor()..2 * g)
        .filter(|&j| j % 2 == 1 && j < 2 * g)
        .map(|j| (j - 1) / 2)
        .collect();
    bar.push(g);
    assert_eq!(bar.len() as u32, omega + 1, "odd part has the wrong size");
    let shift = bar[0];
    let b = ClosedSet::new(base, bar.into_iter().map(|x| x - shift).collect())?;
    Ok(HighDecomposition {
        g,
        q,
        omega,
        base,
        b,
    })
}

/// `ρ_{g,q}` obtained from `f_ω` alone; requires `(g, q)` in the high range.
pub fn rho_via_theorem(explorer: &Explorer, g: u32, q: u32) -> Result<u64> {
    if !in_high_range(g, q) {
        return Err(Error::RangeViolation { genus: g, q });
    }
    f_omega(explorer, (g - 1) / 2 - q)
}

/// Every in-range `ρ_{g,q}` for `1 <= g <= max_g`, computed from `f_ω`.
pub fn rho_theorem_table(explorer: &Explorer, max_g: u32) -> Result<CountTable> {
    let pairs: Vec<(u32, u32)> = (1..=max_g)
        .flat_map(|g| (0..=(g - 1) / 2).filter(move |&q| in_high_range(g, q)).map(move |q| (g, q)))
        .collect();
    let max_omega = pairs.iter().map(|&(g, q)| (g - 1) / 2 - q).max();
    let f = match max_omega {
        Some(w) => f_omega_table(explorer, w)?,
        None => return CountTable::from_entries(TableKind::RhoTheorem, []),
    };
    CountTable::from_entries(
        TableKind::RhoTheorem,
        pairs.into_iter().map(|(g, q)| ((g, q), f.get((g - 1) / 2 - q, 0))),
    )
}
