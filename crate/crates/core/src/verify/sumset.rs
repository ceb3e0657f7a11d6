use std::ops::RangeInclusive;
use std::time::Instant;

use serde::Serialize;

use super::VerificationReport;

/// `A + A` for a finite set `A` of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumsetReport {
    pub set: Vec<u32>,
    pub sumset: Vec<u32>,
    pub cardinality: usize,
    pub arithmetic: bool,
    /// Common difference when `A` is an arithmetic progression with at least
    /// two terms.
    pub difference: Option<u32>,
}

pub fn sumset(set: &[u32]) -> SumsetReport {
    let mut a = set.to_vec();
    a.sort_unstable();
    a.dedup();
    let mut sums: Vec<u32> = a.iter().flat_map(|x| a.iter().map(move |y| x + y)).collect();
    sums.sort_unstable();
    sums.dedup();
    let difference = (a.len() >= 2).then(|| a[1] - a[0]);
    let arithmetic = a.windows(2).all(|w| Some(w[1] - w[0]) == difference);
    SumsetReport {
        cardinality: sums.len(),
        sumset: sums,
        difference: difference.filter(|_| arithmetic),
        arithmetic,
        set: a,
    }
}

/// `a_i = a_1 + (i-1)α` for `i < n` and `a_n = a_1 + nα`.
fn displaced_last(a: &[u32]) -> bool {
    let n = a.len();
    let alpha = a[1] - a[0];
    (0..n - 1).all(|i| a[i] == a[0] + i as u32 * alpha) && a[n - 1] == a[0] + n as u32 * alpha
}

/// `a_i = a_1 + iα` for `2 <= i <= n`, i.e. a progression missing its
/// second term.
fn missing_second(a: &[u32]) -> bool {
    let n = a.len();
    let gap = a[1] - a[0];
    if gap % 2 != 0 {
        return false;
    }
    let alpha = gap / 2;
    alpha > 0 && (1..n).all(|i| a[i] == a[0] + (i as u32 + 1) * alpha)
}

/// Checks, for every subset of `[0, value_bound]` with size in `sizes`:
/// `|A+A| >= 2n-1`; equality exactly for progressions; and for `n >= 4`,
/// `|A+A| = 2n` exactly for the two near-progression shapes.
pub fn check_sumset_lemma(sizes: RangeInclusive<usize>, value_bound: u32) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(
        "sumset",
        format!("n={}..={} values<={value_bound}", sizes.start(), sizes.end()),
    );
    let universe = value_bound as usize + 1;
    let mut subset = Vec::with_capacity(universe);
    let max_n = (*sizes.end()).min(universe);
    subsets(universe as u32, max_n, &mut subset, &mut |a: &[u32]| {
        let n = a.len();
        if !sizes.contains(&n) || n == 0 {
            return;
        }
        let s = sumset(a);
        let show = || vec![format!("{a:?}")];
        report.check(s.cardinality >= 2 * n - 1, "|A+A| >= 2n-1", show);
        report.check((s.cardinality == 2 * n - 1) == s.arithmetic, "|A+A| = 2n-1 iff progression", show);
        if n >= 4 {
            let shaped = displaced_last(a) || missing_second(a);
            report.check((s.cardinality == 2 * n) == shaped, "|A+A| = 2n iff near-progression", show);
        }
    });
    report.finish(started)
}

fn subsets(universe: u32, max_n: usize, current: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    visit(current);
    if current.len() == max_n {
        return;
    }
    let from = current.last().map_or(0, |&x| x + 1);
    for x in from..universe {
        current.push(x);
        subsets(universe, max_n, current, visit);
        current.pop();
    }
}
