//! Canonical numerical-semigroup values and the per-semigroup queries.
//!
//! A [`Semigroup`] is stored as its conductor `c` together with a bitmask of
//! the members below `c`; every integer `>= c` is implicitly a member. Since
//! the Frobenius number of a genus-`g` semigroup is at most `2g - 1`, a
//! 128-bit mask covers every semigroup up to [`GENUS_LIMIT`], and the
//! additive-closure and generator tests reduce to shifts and masks.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest genus the 128-bit representation can hold. Exploration of the
/// children of a genus-`g` node touches bits up to `2g + 3`.
pub const GENUS_LIMIT: u32 = 62;

/// Default genus bound for the exploration engines.
pub const DEFAULT_GENUS_BOUND: u32 = 45;

const WIDTH: u32 = 128;

#[inline]
pub(crate) fn low_bits(n: u32) -> u128 {
    if n >= WIDTH {
        !0
    } else {
        (1u128 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
#[derive(Clone)]
pub(crate) struct Bits(pub(crate) u128);

impl Iterator for Bits {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// A numerical semigroup: a cofinite submonoid of the nonnegative integers.
///
/// Values are canonical, so structural equality is set equality. The total
/// order compares gap lists lexicographically (a shorter prefix sorts first),
/// which puts `N0` before everything else.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Semigroup {
    conductor: u32,
    below: u128,
}

/// Derived statistics of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupProfile {
    pub genus: u32,
    pub multiplicity: u32,
    pub frobenius: Option<u32>,
    pub conductor: u32,
    pub sub_frobenius: Option<u32>,
    pub subconductor: Option<u32>,
    pub generators: Vec<u32>,
    /// `lambda_0, lambda_1, ...` up to and including the conductor.
    pub enumeration: Vec<u32>,
}

impl Semigroup {
    /// The semigroup of all nonnegative integers (conductor 0, genus 0).
    pub const fn naturals() -> Self {
        Semigroup {
            conductor: 0,
            below: 0,
        }
    }

    /// The ordinary semigroup `{0, g+1, g+2, ...}`; `N0` when `g == 0`.
    pub fn ordinary(g: u32) -> Result<Self> {
        if g > GENUS_LIMIT {
            return Err(Error::GenusLimit { limit: GENUS_LIMIT });
        }
        if g == 0 {
            return Ok(Self::naturals());
        }
        Ok(Semigroup {
            conductor: g + 1,
            below: 1,
        })
    }

    /// The hyperelliptic semigroup `{0, 2, 4, ..., 2g, 2g+1, ...}`.
    pub fn hyperelliptic(g: u32) -> Result<Self> {
        if g > GENUS_LIMIT {
            return Err(Error::GenusLimit { limit: GENUS_LIMIT });
        }
        let evens = (0..2 * g).step_by(2).fold(0u128, |m, x| m | 1 << x);
        Ok(Self::from_full_mask(evens | !low_bits(2 * g)))
    }

    /// Builds the semigroup whose gap set is exactly `gaps` (order and
    /// duplicates are irrelevant).
    pub fn from_gaps(gaps: &[u32]) -> Result<Self> {
        let mut gaps = gaps.to_vec();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.first() == Some(&0) {
            return Err(Error::ZeroElement { what: "gap" });
        }
        if gaps.len() as u32 > GENUS_LIMIT {
            return Err(Error::GenusLimit { limit: GENUS_LIMIT });
        }
        let is_gap = |x: u32| gaps.binary_search(&x).is_ok();
        for &y in &gaps {
            if let Some(a) = (1..=y / 2).find(|&a| !is_gap(a) && !is_gap(y - a)) {
                return Err(Error::NotCoAdditive { a, b: y - a });
            }
        }
        // Co-additive with at most GENUS_LIMIT gaps forces F <= 2g - 1 < 128.
        let gap_mask = gaps.iter().fold(0u128, |m, &x| m | 1 << x);
        Ok(Self::from_full_mask(!gap_mask))
    }

    /// The semigroup generated by `gens` under addition.
    pub fn from_generators(gens: &[u32]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::NoGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroElement { what: "generator" });
        }
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::NotCoprime { gcd: g });
        }
        let smallest = *gens.iter().min().unwrap();
        let mut reach = vec![true];
        let mut run = 1u32;
        let mut gaps = 0u32;
        // Once `smallest` consecutive integers are reachable, all larger ones are.
        while run < smallest {
            let x = reach.len();
            let hit = gens
                .iter()
                .any(|&e| (e as usize) <= x && reach[x - e as usize]);
            reach.push(hit);
            if hit {
                run += 1;
            } else {
                run = 0;
                gaps += 1;
                if gaps > GENUS_LIMIT {
                    return Err(Error::GenusLimit { limit: GENUS_LIMIT });
                }
            }
        }
        let conductor = reach.iter().rposition(|&r| !r).map_or(0, |f| f + 1);
        let mask = reach[..conductor]
            .iter()
            .enumerate()
            .filter(|(_, &r)| r)
            .fold(!low_bits(conductor as u32), |m, (x, _)| m | 1 << x);
        Ok(Self::from_full_mask(mask))
    }

    /// Canonicalises a 128-bit membership view (bit `x` set iff `x` is a
    /// member, for all `x < 128`). The caller guarantees closure, that bit 0
    /// is set, and that the top bits are members.
    #[inline]
    pub(crate) fn from_full_mask(full: u128) -> Self {
        let holes = !full;
        let conductor = if holes == 0 {
            0
        } else {
            WIDTH - holes.leading_zeros()
        };
        Semigroup {
            conductor,
            below: full & low_bits(conductor),
        }
    }

    /// Validating variant of [`Semigroup::from_full_mask`].
    pub(crate) fn try_from_full_mask(full: u128) -> Result<Self> {
        if full & 1 == 0 {
            return Err(Error::ZeroElement { what: "member" });
        }
        if let Some((a, b)) = closure_witness_mask(full) {
            return Err(Error::NotCoAdditive { a, b });
        }
        let s = Self::from_full_mask(full);
        if s.genus() > GENUS_LIMIT {
            return Err(Error::GenusLimit { limit: GENUS_LIMIT });
        }
        Ok(s)
    }

    /// Membership bits for every `x < 128`, tail included.
    #[inline]
    pub(crate) fn full_mask(&self) -> u128 {
        self.below | !low_bits(self.conductor)
    }

    /// Gap bits (all below the conductor).
    #[inline]
    pub(crate) fn gap_mask(&self) -> u128 {
        !self.below & low_bits(self.conductor)
    }

    #[inline]
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    #[inline]
    pub fn genus(&self) -> u32 {
        self.gap_mask().count_ones()
    }

    /// Smallest nonzero member.
    #[inline]
    pub fn multiplicity(&self) -> u32 {
        (self.full_mask() & !1).trailing_zeros()
    }

    /// Largest gap; absent for `N0`.
    #[inline]
    pub fn frobenius(&self) -> Option<u32> {
        self.conductor.checked_sub(1)
    }

    /// Second-largest gap, i.e. the Frobenius number of `S ∪ {F}`.
    pub fn sub_frobenius(&self) -> Option<u32> {
        let below_f = self.gap_mask() & low_bits(self.frobenius()?);
        (below_f != 0).then(|| WIDTH - 1 - below_f.leading_zeros())
    }

    /// Smallest member of the run of members ending at `F - 1`; absent when
    /// `F - 1` is a gap or there is no Frobenius number.
    pub fn subconductor(&self) -> Option<u32> {
        let f = self.frobenius()?;
        if f == 0 || !self.is_member(f - 1) {
            return None;
        }
        Some(self.sub_frobenius().map_or(0, |s| s + 1))
    }

    #[inline]
    pub fn is_member(&self, x: u32) -> bool {
        x >= self.conductor || (self.below >> x) & 1 == 1
    }

    pub fn gaps(&self) -> Vec<u32> {
        self.gaps_iter().collect()
    }

    pub fn gaps_iter(&self) -> impl Iterator<Item = u32> + Clone {
        Bits(self.gap_mask())
    }

    /// Members strictly below the conductor, starting at 0.
    pub fn small_members(&self) -> impl Iterator<Item = u32> + Clone {
        Bits(self.below)
    }

    /// The `i`-th member in increasing order (`lambda_0 = 0`).
    pub fn nth_member(&self, i: u32) -> u32 {
        let small = self.below.count_ones();
        if i < small {
            Bits(self.below).nth(i as usize).unwrap()
        } else {
            self.conductor + (i - small)
        }
    }

    /// Number of nonzero members in `[1, x]`.
    #[inline]
    pub fn members_up_to(&self, x: u32) -> u32 {
        let within = x.min(WIDTH - 1);
        let full = (self.full_mask() & low_bits(within + 1) & !1).count_ones();
        full + x.saturating_sub(within)
    }

    /// Whether the nonzero element `x` is a sum of two nonzero members.
    fn is_decomposable(&self, x: u32) -> bool {
        (1..=x / 2).any(|a| self.is_member(a) && self.is_member(x - a))
    }

    /// Minimal generators, sorted. Every generator is below `c + m`.
    pub fn generators(&self) -> Vec<u32> {
        let m = self.multiplicity();
        (m..(self.conductor + m).max(2))
            .filter(|&x| self.is_member(x) && !self.is_decomposable(x))
            .collect()
    }

    /// Generators that are `>= c`; removing any one yields a child in the
    /// semigroup tree.
    pub fn generators_from_conductor(&self) -> Vec<u32> {
        let m = self.multiplicity();
        (self.conductor.max(1)..(self.conductor + m).max(2))
            .filter(|&x| !self.is_decomposable(x))
            .collect()
    }

    /// Gaps `a` with `a + S* ⊆ S*`.
    pub fn pseudo_frobenius(&self) -> Vec<u32> {
        let members = self.small_members().skip(1);
        self.gaps_iter()
            .filter(|&a| members.clone().all(|l| self.is_member(a + l)))
            .collect()
    }

    /// Gaps `a` with `2a` and `3a` both members.
    pub fn fundamental_gaps(&self) -> Vec<u32> {
        self.gaps_iter()
            .filter(|&a| self.is_member(2 * a) && self.is_member(3 * a))
            .collect()
    }

    /// Gaps whose adjunction yields a numerical semigroup.
    pub fn candidates(&self) -> Vec<u32> {
        let fundamental = self.fundamental_gaps();
        self.pseudo_frobenius()
            .into_iter()
            .filter(|a| fundamental.binary_search(a).is_ok())
            .collect()
    }

    /// All gaps form the interval `1..=g` and `S != N0`.
    pub fn is_ordinary(&self) -> bool {
        self.conductor > 0 && self.below == 1
    }

    /// `m = g`, so exactly one gap exceeds the multiplicity. The genus-one
    /// semigroup is counted as quasi-ordinary as well as ordinary.
    pub fn is_quasi_ordinary(&self) -> bool {
        let g = self.genus();
        g == 1 || (g > 0 && self.multiplicity() == g)
    }

    /// Removes a member, returning `None` unless the result is a numerical
    /// semigroup (i.e. `x` is a generator).
    pub fn remove(&self, x: u32) -> Option<Self> {
        if x == 0 || !self.is_member(x) || self.is_decomposable(x) {
            return None;
        }
        Some(self.remove_unchecked(x))
    }

    /// Adjoins a gap, returning `None` unless the result is a numerical
    /// semigroup (i.e. `a` is a candidate).
    pub fn adjoin(&self, a: u32) -> Option<Self> {
        if self.is_member(a) {
            return None;
        }
        let full = self.full_mask() | 1 << a;
        closure_witness_mask(full)
            .is_none()
            .then(|| Self::from_full_mask(full))
    }

    #[inline]
    pub(crate) fn remove_unchecked(&self, x: u32) -> Self {
        Self::from_full_mask(self.full_mask() & !(1u128 << x))
    }

    pub fn profile(&self) -> SemigroupProfile {
        SemigroupProfile {
            genus: self.genus(),
            multiplicity: self.multiplicity(),
            frobenius: self.frobenius(),
            conductor: self.conductor,
            sub_frobenius: self.sub_frobenius(),
            subconductor: self.subconductor(),
            generators: self.generators(),
            enumeration: (0..=self.conductor - self.genus())
                .map(|i| self.nth_member(i))
                .collect(),
        }
    }

    /// Renders members as numbers and gaps as `_` up to the conductor,
    /// followed by `...`, e.g. `0 _ _ _ 4 5 6 _ 8 ...`.
    pub fn dotted(&self) -> String {
        let mut parts: Vec<String> = (0..=self.conductor)
            .map(|x| {
                if self.is_member(x) {
                    x.to_string()
                } else {
                    "_".to_string()
                }
            })
            .collect();
        parts.push("...".to_string());
        parts.join(" ")
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// First pair of nonzero members summing to a gap, for a full 128-bit view.
pub(crate) fn closure_witness_mask(full: u128) -> Option<(u32, u32)> {
    let holes = !full;
    if holes == 0 {
        return None;
    }
    let limit = WIDTH - holes.leading_zeros();
    let gaps = holes & low_bits(limit);
    for a in Bits(full & low_bits(limit) & !1) {
        let bad = (full << a) & gaps & !low_bits(a + 1);
        if bad != 0 {
            let sum = bad.trailing_zeros();
            return Some((a, sum - a));
        }
    }
    None
}

/// Whether `members ∪ [tail_from, ∞)` is closed under addition. The set is
/// assumed to contain 0.
pub fn is_semigroup_set(members: &[u32], tail_from: u32) -> bool {
    semigroup_set_witness(members, tail_from).is_none()
}

/// A pair `(a, b)` of members whose sum is missing from
/// `members ∪ [tail_from, ∞)`, if any.
pub fn semigroup_set_witness(members: &[u32], tail_from: u32) -> Option<(u32, u32)> {
    let contains = |x: u32| x >= tail_from || members.contains(&x);
    let small: Vec<u32> = members
        .iter()
        .copied()
        .filter(|&x| x != 0 && x < tail_from)
        .collect();
    for (i, &a) in small.iter().enumerate() {
        for &b in &small[i..] {
            if !contains(a + b) {
                return Some((a.min(b), a.max(b)));
            }
        }
    }
    None
}

impl Default for Semigroup {
    fn default() -> Self {
        Self::naturals()
    }
}

impl Ord for Semigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gaps_iter().cmp(other.gaps_iter())
    }
}

impl PartialOrd for Semigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn join(xs: impl Iterator<Item = u32>) -> String {
    xs.map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Canonical text form: `gaps: 1,2,4` (`gaps:` for `N0`).
impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 0 {
            write!(f, "gaps:")
        } else {
            write!(f, "gaps: {}", join(self.gaps_iter()))
        }
    }
}

impl fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Semigroup({})", self.dotted())
    }
}

/// Parses `gaps: a,b,...` or `gens: a,b,...`.
impl FromStr for Semigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = || Error::Parse(s.to_string());
        let (kind, rest) = s.trim().split_once(':').ok_or_else(parse_err)?;
        let rest = rest.trim();
        let values = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| parse_err())?
        };
        match kind.trim() {
            "gaps" => Semigroup::from_gaps(&values),
            "gens" => Semigroup::from_generators(&values),
            _ => Err(parse_err()),
        }
    }
}

impl Serialize for Semigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Semigroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const H_MEMBERS: [u32; 12] = [0, 12, 19, 24, 28, 31, 34, 36, 38, 40, 42, 43];

    pub(crate) fn harmonic() -> Semigroup {
        let gaps: Vec<u32> = (1..45).filter(|x| !H_MEMBERS.contains(x)).collect();
        Semigroup::from_gaps(&gaps).unwrap()
    }

    fn gaps(g: &[u32]) -> Semigroup {
        Semigroup::from_gaps(g).unwrap()
    }

    /// Closure of a generator set computed naively by repeated sums.
    fn brute_closure(gens: &[u32], bound: u32) -> Vec<u32> {
        let mut reach = vec![false; bound as usize + 1];
        reach[0] = true;
        for x in 1..=bound as usize {
            reach[x] = gens.iter().any(|&e| e as usize <= x && reach[x - e as usize]);
        }
        (1..=bound).filter(|&x| !reach[x as usize]).collect()
    }

    #[test]
    fn harmonic_semigroup_from_gaps_and_generators_agree() {
        let h = harmonic();
        assert_eq!(h.frobenius(), Some(44));
        assert_eq!(h.conductor(), 45);
        assert_eq!(h.multiplicity(), 12);
        let from_gens = Semigroup::from_generators(&[12, 19, 28, 34, 42, 45, 49, 51]).unwrap();
        assert_eq!(h, from_gens);
    }

    #[test]
    fn harmonic_profile() {
        let p = harmonic().profile();
        assert_eq!(p.genus, 33);
        assert_eq!(p.multiplicity, 12);
        assert_eq!(p.frobenius, Some(44));
        assert_eq!(p.conductor, 45);
        assert_eq!(p.subconductor, Some(42));
        assert_eq!(p.sub_frobenius, Some(41));
        assert_eq!(p.generators, vec![12, 19, 28, 34, 42, 45, 49, 51]);
        assert_eq!(&p.enumeration[..12], &H_MEMBERS);
        assert_eq!(*p.enumeration.last().unwrap(), 45);
    }

    #[test]
    fn naturals() {
        let n = Semigroup::from_gaps(&[]).unwrap();
        assert_eq!(n, Semigroup::naturals());
        assert_eq!(n.conductor(), 0);
        let p = n.profile();
        assert_eq!((p.genus, p.multiplicity, p.frobenius), (0, 1, None));
        assert_eq!(p.sub_frobenius, None);
        assert_eq!(p.generators, vec![1]);
        assert_eq!(Semigroup::from_generators(&[1]).unwrap(), n);
        assert!(!n.is_ordinary());
        assert!(!n.is_quasi_ordinary());
    }

    #[test]
    fn odd_gaps_give_even_numbers() {
        let s = gaps(&[1, 3, 5]);
        assert_eq!(s, Semigroup::hyperelliptic(3).unwrap());
        for x in 0..20 {
            assert_eq!(s.is_member(x), x % 2 == 0 || x > 5);
        }
        let p = s.profile();
        assert_eq!((p.frobenius, p.sub_frobenius, p.multiplicity), (Some(5), Some(3), 2));
        assert_eq!(p.generators, vec![2, 7]);
    }

    #[test]
    fn two_three_has_single_gap() {
        let s = Semigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(s.gaps(), brute_closure(&[2, 3], 10));
        assert_eq!(s.gaps(), vec![1]);
        assert_eq!(s.genus(), 1);
        // Genus one has no sub-Frobenius number.
        assert_eq!(s.sub_frobenius(), None);
    }

    #[test]
    fn generator_closure_matches_brute_force() {
        for gens in [&[3u32, 5][..], &[4, 7, 9], &[5, 6, 7, 8, 9], &[6, 10, 15]] {
            let s = Semigroup::from_generators(gens).unwrap();
            assert_eq!(s.gaps(), brute_closure(gens, 80), "{gens:?}");
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Semigroup::from_generators(&[4, 6]),
            Err(Error::NotCoprime { gcd: 2 })
        );
        assert_eq!(Semigroup::from_generators(&[]), Err(Error::NoGenerators));
        assert!(matches!(
            Semigroup::from_gaps(&[1, 2, 4]),
            Ok(s) if s.multiplicity() == 3
        ));
        // 2 + 2 = 4 is a gap.
        assert_eq!(
            Semigroup::from_gaps(&[1, 3, 4]),
            Err(Error::NotCoAdditive { a: 2, b: 2 })
        );
        assert!(matches!(
            Semigroup::from_gaps(&[0, 1]),
            Err(Error::ZeroElement { .. })
        ));
        assert_eq!(
            Semigroup::from_generators(&[60, 61]),
            Err(Error::GenusLimit { limit: GENUS_LIMIT })
        );
    }

    #[test]
    fn membership() {
        assert!(harmonic().is_member(36));
        assert!(!harmonic().is_member(37));
        assert!(harmonic().is_member(0));
        assert!(!Semigroup::hyperelliptic(5).unwrap().is_member(9));
        assert!(Semigroup::hyperelliptic(5).unwrap().is_member(10));
    }

    #[test]
    fn ordinary_and_quasi_ordinary() {
        let ord = gaps(&[1, 2, 3, 4]);
        assert_eq!(ord, Semigroup::ordinary(4).unwrap());
        assert!(ord.is_ordinary());
        assert!(!ord.is_quasi_ordinary());
        let quasi = gaps(&[1, 2, 3, 7]);
        assert!(quasi.is_quasi_ordinary());
        assert!(!quasi.is_ordinary());
        assert!(!harmonic().is_ordinary());
        assert!(!harmonic().is_quasi_ordinary());
        // Genus one: m = g = 1, the lone gap is not above m.
        let one = gaps(&[1]);
        assert!(one.is_ordinary());
        assert!(one.is_quasi_ordinary());
    }

    #[test]
    fn pseudo_frobenius_fundamental_and_candidates() {
        let hyper5 = gaps(&[1, 3, 5, 7, 9]);
        // 10 and 15 are members, but 5 + 2 = 7 is a gap.
        assert!(hyper5.fundamental_gaps().contains(&5));
        assert!(!hyper5.pseudo_frobenius().contains(&5));
        assert_eq!(hyper5.candidates(), vec![9]);
        assert!(hyper5.adjoin(5).is_none());

        let ord4 = gaps(&[1, 2, 3, 4]);
        assert_eq!(ord4.pseudo_frobenius(), vec![1, 2, 3, 4]);
        assert_eq!(ord4.fundamental_gaps(), vec![3, 4]);
        assert_eq!(ord4.candidates(), vec![3, 4]);
        assert_eq!(ord4.adjoin(3).unwrap(), gaps(&[1, 2, 4]));

        assert!(harmonic().candidates().contains(&44));
    }

    #[test]
    fn semigroup_set_check() {
        // {0,2,4,6,8,10,11,...} with 2 replaced by 5.
        let members = [0, 4, 5, 6, 8];
        assert!(!is_semigroup_set(&members, 10));
        assert_eq!(semigroup_set_witness(&members, 10), Some((4, 5)));
        assert!(is_semigroup_set(&[0, 3, 4], 6));
        let h = harmonic();
        let small: Vec<u32> = h.small_members().collect();
        assert!(is_semigroup_set(&small, h.conductor()));
    }

    #[test]
    fn text_round_trip_and_dotted() {
        let s: Semigroup = "gaps: 1,2,3,7".parse().unwrap();
        assert_eq!(s.to_string(), "gaps: 1,2,3,7");
        assert_eq!(s.dotted(), "0 _ _ _ 4 5 6 _ 8 ...");
        assert_eq!("gens:1".parse::<Semigroup>().unwrap(), Semigroup::naturals());
        assert_eq!(Semigroup::naturals().to_string(), "gaps:");
        assert_eq!("gaps:".parse::<Semigroup>().unwrap(), Semigroup::naturals());
        assert!("gaps 1,2".parse::<Semigroup>().is_err());
        assert!("gens: 2,x".parse::<Semigroup>().is_err());
        assert!(matches!(
            "gens: 4,6".parse::<Semigroup>(),
            Err(Error::NotCoprime { gcd: 2 })
        ));
    }

    #[test]
    fn ordering_is_by_gap_list() {
        let mut v = vec![gaps(&[1, 2, 3]), gaps(&[1, 3, 5]), Semigroup::naturals(), gaps(&[1, 2, 5])];
        v.sort();
        assert_eq!(
            v,
            vec![Semigroup::naturals(), gaps(&[1, 2, 3]), gaps(&[1, 2, 5]), gaps(&[1, 3, 5])]
        );
    }

    #[test]
    fn subconductor_absent_when_frobenius_minus_one_is_gap() {
        assert_eq!(gaps(&[1, 2, 3, 4]).subconductor(), None);
        assert_eq!(gaps(&[1, 3, 5]).subconductor(), Some(4));
        assert_eq!(gaps(&[1, 2, 3, 7]).subconductor(), Some(4));
    }

    #[test]
    fn members_up_to_counts_tail() {
        let s = gaps(&[1, 3, 5]);
        assert_eq!(s.members_up_to(5), 2);
        assert_eq!(s.members_up_to(200), 2 + (200 - 5));
        assert_eq!(s.nth_member(3), 6);
        assert_eq!(s.nth_member(5), 8);
    }
}
