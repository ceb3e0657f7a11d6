use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::time::Instant;

use super::oracle::{semigroups_by_genus, GapSet};
use super::{genus_range, VerificationReport};

fn is_root(s: &GapSet) -> bool {
    s.is_ordinary() || s.is_quasi_ordinary()
}

/// Unordered pairs of distinct members of each group.
fn sibling_pairs<'a>(groups: &'a BTreeMap<GapSet, Vec<&'a GapSet>>) -> impl Iterator<Item = (&'a GapSet, &'a GapSet)> {
    groups.values().flat_map(|members| {
        members
            .iter()
            .enumerate()
            .flat_map(move |(i, a)| members[i + 1..].iter().map(move |b| (*a, *b)))
    })
}

/// Kinship between the semigroup tree (parent `S ∪ {F}`), the ordinarization
/// tree of each genus and the quasi-ordinarization forest:
///
/// - a child `Λ₁` of `Λ₂` in the semigroup tree has `q(Λ₁)` a child of a
///   sibling of `q(Λ₂)`;
/// - siblings in the semigroup tree are siblings in the ordinarization tree
///   and not siblings in the forest;
/// - siblings in the ordinarization tree have sibling images under `q`;
/// - siblings in the semigroup tree have sibling images under `q`.
///
/// Pairs involving an ordinary or quasi-ordinary semigroup, or whose images
/// coincide where the conclusion is about the images being siblings, are
/// counted as degenerate and skipped.
pub fn check_kinship(genera: RangeInclusive<u32>) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("kinship", genus_range(&genera));
    let levels = semigroups_by_genus(*genera.end());
    let q = |s: &GapSet| s.quasi_ordinarize();
    let tree_parent = |s: &GapSet| s.parent().expect("positive genus");

    for g in genera.clone() {
        if g < 2 {
            continue;
        }
        let level = &levels[g as usize];

        for child in level {
            let parent = tree_parent(child);
            if is_root(child) || is_root(&parent) {
                report.skipped_degenerate += 1;
                continue;
            }
            let (qc, qp) = (q(child), q(&parent));
            let up = tree_parent(&qc);
            let niece = up != qp && qp.genus() > 0 && tree_parent(&up) == tree_parent(&qp);
            report.check(niece, "image of a child is a niece of the parent's image", || {
                vec![child.clone(), parent.clone()]
            });
        }

        let mut by_tree_parent: BTreeMap<GapSet, Vec<&GapSet>> = BTreeMap::new();
        let mut by_ordinarization: BTreeMap<GapSet, Vec<&GapSet>> = BTreeMap::new();
        for s in level {
            by_tree_parent.entry(tree_parent(s)).or_default().push(s);
            if !s.is_ordinary() {
                by_ordinarization.entry(s.ordinarize()).or_default().push(s);
            }
        }

        for (a, b) in sibling_pairs(&by_tree_parent) {
            if is_root(a) || is_root(b) {
                report.skipped_degenerate += 1;
                continue;
            }
            let pair = || vec![a.clone(), b.clone()];
            report.check(a.ordinarize() == b.ordinarize(), "tree siblings are ordinarization siblings", pair);
            let (qa, qb) = (q(a), q(b));
            report.check(qa != qb, "tree siblings are not forest siblings", pair);
            if qa == qb {
                report.skipped_degenerate += 1;
            } else {
                report.check(tree_parent(&qa) == tree_parent(&qb), "tree siblings have sibling images", pair);
            }
        }

        for (a, b) in sibling_pairs(&by_ordinarization) {
            let (qa, qb) = (q(a), q(b));
            if is_root(a) || is_root(b) || qa == qb {
                report.skipped_degenerate += 1;
                continue;
            }
            report.check(
                tree_parent(&qa) == tree_parent(&qb),
                "ordinarization siblings have sibling images",
                || vec![a.clone(), b.clone()],
            );
        }
    }
    report.finish(started)
}
