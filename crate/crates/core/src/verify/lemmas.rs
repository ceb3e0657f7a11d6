use std::ops::RangeInclusive;
use std::time::Instant;

use super::oracle::{semigroups_by_genus, GapSet};
use super::{genus_range, VerificationReport};
use crate::closedsets::{decode_high, encode_high};

/// For every semigroup with `3q >= g + 1`: all nonzero members `<= g - 1`
/// are even, and the semigroup survives a decode/encode round trip through
/// the structure theorem.
pub fn check_even_members(genera: RangeInclusive<u32>) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("even-members", genus_range(&genera));
    let levels = semigroups_by_genus(*genera.end());
    for g in genera.clone() {
        for s in &levels[g as usize] {
            let q = s.qo_number();
            if g == 0 || 3 * q < g + 1 {
                continue;
            }
            let odd = (1..g).any(|x| x % 2 == 1 && s.is_member(x));
            report.check(!odd, "members <= g-1 are even", || vec![s]);
            let fast = s.to_semigroup();
            let round_trip = decode_high(&fast)
                .and_then(|d| encode_high(&d.base, &d.b, g))
                .is_ok_and(|back| back == fast);
            report.check(round_trip, "decode then encode is the identity", || vec![s]);
        }
    }
    report.finish(started)
}

/// If `Λ` has `ω` gaps in `[1, n-1]` and `n >= 2ω + 2`, then `n ∈ Λ`,
/// `F < n` and the genus is `ω`. Checked for `n <= 2g + 4`.
pub fn check_gap_bound(genera: RangeInclusive<u32>) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("gap-bound", genus_range(&genera));
    let levels = semigroups_by_genus(*genera.end());
    for g in genera.clone() {
        for s in &levels[g as usize] {
            for n in 2..=2 * g + 4 {
                let omega = (1..n).filter(|&x| !s.is_member(x)).count() as u32;
                if n < 2 * omega + 2 {
                    continue;
                }
                let subject = || vec![s.to_string(), format!("n={n}")];
                report.check(s.is_member(n), "n is a member", subject);
                report.check(s.frobenius().map_or(true, |f| f < n), "Frobenius number below n", subject);
                report.check(s.genus() == omega, "genus equals gaps below n", subject);
            }
        }
    }
    report.finish(started)
}

fn hyperelliptic(g: u32) -> GapSet {
    GapSet::new((0..g).map(|i| 2 * i + 1).collect()).unwrap()
}

fn from_gaps(gaps: &[u32]) -> GapSet {
    GapSet::new(gaps.to_vec()).unwrap()
}

/// Semigroups of genus `g` attaining the maximal quasi-ordinarization number
/// among non-ordinary, non-quasi-ordinary semigroups.
fn expected_attainers(g: u32) -> Vec<GapSet> {
    let mut out = match g {
        4 => vec![from_gaps(&[1, 2, 4, 5]), hyperelliptic(4), from_gaps(&[1, 2, 4, 7])],
        6 => vec![hyperelliptic(6), from_gaps(&[1, 2, 3, 6, 7, 11])],
        _ => vec![hyperelliptic(g)],
    };
    out.sort();
    out
}

/// The largest quasi-ordinarization number of a non-ordinary genus-`g`
/// semigroup is `(g - 1) / 2`; for `g >= 3` it is attained only by the
/// hyperelliptic semigroup, except at genus 4 and 6 where the attaining sets
/// are listed explicitly.
pub fn check_max_q(genera: RangeInclusive<u32>) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("max-q", genus_range(&genera));
    let levels = semigroups_by_genus(*genera.end());
    for g in genera.clone() {
        if g < 2 {
            continue;
        }
        let bound = (g - 1) / 2;
        let non_ordinary: Vec<&GapSet> = levels[g as usize].iter().filter(|s| !s.is_ordinary()).collect();
        let max = non_ordinary.iter().map(|s| s.qo_number()).max().unwrap_or(0);
        report.check(max == bound, "maximum equals (g-1)/2", || vec![format!("g={g} max={max}")]);
        if g < 3 {
            continue;
        }
        let mut attainers: Vec<GapSet> = non_ordinary
            .into_iter()
            .filter(|s| !s.is_quasi_ordinary() && s.qo_number() == bound)
            .cloned()
            .collect();
        attainers.sort();
        let expected = expected_attainers(g);
        report.check(attainers == expected, "attaining set", || {
            let mut v = vec![format!("g={g}")];
            v.extend(attainers.iter().map(GapSet::to_string));
            v
        });
    }
    report.finish(started)
}
