//! Brute-force reference computations over explicit gap lists.
#![allow(dead_code)]

use std::fs;
use std::path::Path;

use numsemi::Semigroup;

/// Whether the complement of `gaps` in the nonnegative integers is closed
/// under addition.
pub fn closed(gaps: &[u32]) -> bool {
    let member = |x: u32| !gaps.contains(&x);
    let top = gaps.iter().copied().max().unwrap_or(0);
    (1..=top).all(|a| !member(a) || (a..=top).all(|b| !member(b) || member(a + b)))
}

/// Every gap set of size `g`: all `g`-subsets of `[1, 2g - 1]` whose
/// complement is closed, in lexicographic order.
pub fn all_gap_sets(g: u32) -> Vec<Vec<u32>> {
    if g == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(next: u32, top: u32, g: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == g {
            if closed(current) {
                out.push(current.clone());
            }
            return;
        }
        let need = (g - current.len()) as u32;
        for x in next..=top + 1 - need {
            current.push(x);
            go(x + 1, top, g, current, out);
            current.pop();
        }
    }
    go(1, 2 * g - 1, g as usize, &mut current, &mut out);
    out
}

pub fn all_semigroups(g: u32) -> Vec<Semigroup> {
    all_gap_sets(g).iter().map(|gs| Semigroup::from_gaps(gs).unwrap()).collect()
}

fn multiplicity(gaps: &[u32]) -> u32 {
    (1..).find(|x| !gaps.contains(x)).unwrap()
}

fn ordinary(gaps: &[u32]) -> bool {
    gaps.iter().enumerate().all(|(i, &x)| x == i as u32 + 1)
}

/// Drop the multiplicity and add the largest gap back.
pub fn ordinarize(gaps: &[u32]) -> Vec<u32> {
    if ordinary(gaps) {
        return gaps.to_vec();
    }
    let f = *gaps.last().unwrap();
    let mut out: Vec<u32> = gaps.iter().copied().filter(|&x| x != f).collect();
    out.push(multiplicity(gaps));
    out.sort();
    out
}

/// Drop the multiplicity and add the second-largest gap back.
pub fn quasi_ordinarize(gaps: &[u32]) -> Vec<u32> {
    let g = gaps.len() as u32;
    if ordinary(gaps) || g == 1 || multiplicity(gaps) == g {
        return gaps.to_vec();
    }
    let f = gaps[gaps.len() - 2];
    let mut out: Vec<u32> = gaps.iter().copied().filter(|&x| x != f).collect();
    out.push(multiplicity(gaps));
    out.sort();
    out
}

/// Gaps whose removal from the gap set leaves a closed complement.
pub fn candidates(gaps: &[u32]) -> Vec<u32> {
    gaps.iter()
        .copied()
        .filter(|&a| {
            let rest: Vec<u32> = gaps.iter().copied().filter(|&x| x != a).collect();
            closed(&rest)
        })
        .collect()
}

/// Parses a figure fixture: lines `gaps` (a root) or `gaps <- parent`, with
/// `-` standing for the naturals. Returns sorted `(node, parent)` pairs.
pub fn fixture(name: &str) -> Vec<(Semigroup, Option<Semigroup>)> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name);
    let text = fs::read_to_string(path).unwrap();
    let parse = |t: &str| {
        let t = t.trim();
        if t == "-" {
            Semigroup::naturals()
        } else {
            let gaps: Vec<u32> = t.split(',').map(|x| x.parse().unwrap()).collect();
            Semigroup::from_gaps(&gaps).unwrap()
        }
    };
    let mut out: Vec<(Semigroup, Option<Semigroup>)> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| match l.split_once("<-") {
            Some((node, parent)) => (parse(node), Some(parse(parent))),
            None => (parse(l), None),
        })
        .collect();
    out.sort();
    out
}

/// Rows of the quasi-ordinarization count table for genus 1 to 30.
pub const RHO_ROWS: [&[u64]; 30] = [
    &[1],
    &[2],
    &[3, 1],
    &[4, 3],
    &[5, 6, 1],
    &[6, 15, 2],
    &[7, 24, 7, 1],
    &[8, 42, 16, 1],
    &[9, 61, 43, 4, 1],
    &[10, 93, 89, 11, 1],
    &[11, 123, 176, 30, 2, 1],
    &[12, 174, 327, 75, 3, 1],
    &[13, 219, 538, 209, 19, 2, 1],
    &[14, 291, 903, 448, 34, 2, 1],
    &[15, 355, 1379, 990, 106, 9, 2, 1],
    &[16, 453, 2127, 1894, 295, 18, 2, 1],
    &[17, 537, 3022, 3575, 829, 55, 7, 2, 1],
    &[18, 666, 4441, 6367, 1847, 116, 9, 2, 1],
    &[19, 774, 5979, 10796, 4447, 403, 36, 7, 2, 1],
    &[20, 936, 8417, 17960, 9019, 986, 48, 7, 2, 1],
    &[21, 1072, 10966, 28265, 18673, 2981, 181, 25, 7, 2, 1],
    &[22, 1272, 14826, 44272, 35178, 7165, 464, 37, 7, 2, 1],
    &[23, 1437, 18774, 66046, 65533, 17640, 1383, 94, 23, 7, 2, 1],
    &[24, 1680, 24770, 99525, 115252, 37770, 3603, 170, 24, 7, 2, 1],
    &[25, 1878, 30539, 140960, 197836, 84075, 11141, 652, 85, 23, 7, 2, 1],
    &[26, 2166, 39321, 204611, 329568, 166465, 26864, 1679, 99, 23, 7, 2, 1],
    &[27, 2401, 47697, 281077, 533479, 331872, 67991, 5300, 321, 69, 23, 7, 2, 1],
    &[28, 2739, 60083, 394617, 848091, 615860, 153882, 14899, 715, 83, 23, 7, 2, 1],
    &[29, 3012, 71711, 525838, 1304275, 1135074, 352322, 42738, 2506, 233, 68, 23, 7, 2, 1],
    &[30, 3405, 88938, 720977, 2001344, 1989842, 727680, 107050, 7073, 331, 70, 23, 7, 2, 1],
];

/// Number of semigroups of genus 0 to 30.
pub const N_G: [u64; 31] = [
    1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693, 2857, 4806, 8045, 13467,
    22464, 37396, 62194, 103246, 170963, 282828, 467224, 770832, 1270267, 2091030, 3437839,
    5646773,
];

/// `f_ω` for `ω = 0..=15`.
pub const F_OMEGA: [u64; 16] = [
    1, 2, 7, 23, 68, 200, 615, 1764, 5060, 14626, 41785, 117573, 332475, 933891, 2609832, 7278512,
];
