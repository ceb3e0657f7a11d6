//! Deliberately naive semigroup arithmetic over explicit gap lists, used by
//! the verification suites as an independent path to every quantity the
//! optimized modules compute.

use std::fmt;

use crate::semigroup::Semigroup;

/// A numerical semigroup given by its sorted gap list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GapSet {
    gaps: Vec<u32>,
}

impl GapSet {
    pub fn naturals() -> Self {
        GapSet { gaps: Vec::new() }
    }

    /// Accepts any gap list; `None` unless the complement is closed under
    /// addition.
    pub fn new(mut gaps: Vec<u32>) -> Option<Self> {
        gaps.sort_unstable();
        gaps.dedup();
        let s = GapSet { gaps };
        (!s.gaps.contains(&0) && s.is_closed()).then_some(s)
    }

    pub fn from_semigroup(s: &Semigroup) -> Self {
        GapSet { gaps: s.gaps() }
    }

    pub fn to_semigroup(&self) -> Semigroup {
        Semigroup::from_gaps(&self.gaps).expect("oracle gap sets are closed")
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn genus(&self) -> u32 {
        self.gaps.len() as u32
    }

    pub fn is_member(&self, x: u32) -> bool {
        self.gaps.binary_search(&x).is_err()
    }

    pub fn frobenius(&self) -> Option<u32> {
        self.gaps.last().copied()
    }

    pub fn sub_frobenius(&self) -> Option<u32> {
        let n = self.gaps.len();
        (n >= 2).then(|| self.gaps[n - 2])
    }

    pub fn multiplicity(&self) -> u32 {
        (1..).find(|&x| self.is_member(x)).unwrap()
    }

    fn is_closed(&self) -> bool {
        let Some(f) = self.frobenius() else {
            return true;
        };
        (1..=f).all(|a| !self.is_member(a) || (a..=f - a).all(|b| !self.is_member(b) || self.is_member(a + b)))
    }

    pub fn is_ordinary(&self) -> bool {
        !self.gaps.is_empty() && self.gaps.iter().enumerate().all(|(i, &x)| x == i as u32 + 1)
    }

    pub fn is_quasi_ordinary(&self) -> bool {
        let g = self.genus();
        g == 1 || (g > 0 && self.multiplicity() == g)
    }

    /// Count of nonzero members not exceeding `g - 1`.
    pub fn qo_number(&self) -> u32 {
        let g = self.genus();
        (1..g).filter(|&x| self.is_member(x)).count() as u32
    }

    fn swap(&self, drop_gap: u32, add_gap: u32) -> Self {
        let mut gaps: Vec<u32> = self.gaps.iter().copied().filter(|&x| x != drop_gap).collect();
        gaps.push(add_gap);
        GapSet::new(gaps).expect("transform of a semigroup is a semigroup")
    }

    pub fn ordinarize(&self) -> Self {
        if self.gaps.is_empty() || self.is_ordinary() {
            return self.clone();
        }
        self.swap(self.frobenius().unwrap(), self.multiplicity())
    }

    pub fn quasi_ordinarize(&self) -> Self {
        if self.gaps.is_empty() || self.is_ordinary() || self.is_quasi_ordinary() {
            return self.clone();
        }
        self.swap(self.sub_frobenius().unwrap(), self.multiplicity())
    }

    /// Parent in the semigroup tree: the Frobenius number made a member.
    pub fn parent(&self) -> Option<Self> {
        let mut gaps = self.gaps.clone();
        gaps.pop()?;
        Some(GapSet { gaps })
    }

    /// Every semigroup of genus `g + 1` whose largest gap exceeds every gap
    /// of `self`, found by trying each candidate and testing closure.
    fn extensions(&self) -> Vec<Self> {
        let g = self.genus();
        let from = self.frobenius().map_or(1, |f| f + 1);
        (from..=2 * g + 1)
            .filter_map(|x| {
                let mut gaps = self.gaps.clone();
                gaps.push(x);
                GapSet::new(gaps)
            })
            .collect()
    }
}

impl fmt::Display for GapSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.gaps.iter().map(u32::to_string).collect();
        if list.is_empty() {
            write!(f, "gaps:")
        } else {
            write!(f, "gaps: {}", list.join(","))
        }
    }
}

impl fmt::Debug for GapSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All semigroups of genus `0..=max_g`, each level sorted. A semigroup of
/// genus `g + 1` is its parent plus one gap above the parent's Frobenius
/// number and below `2g + 2`.
pub fn semigroups_by_genus(max_g: u32) -> Vec<Vec<GapSet>> {
    let mut levels = vec![vec![GapSet::naturals()]];
    for _ in 0..max_g {
        let mut next: Vec<GapSet> = levels.last().unwrap().iter().flat_map(GapSet::extensions).collect();
        next.sort();
        levels.push(next);
    }
    levels
}
