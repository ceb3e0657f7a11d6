//! Exhaustive exploration of the semigroup tree and the per-genus trees and
//! forests derived from the two transforms.
//!
//! The semigroup tree has `N0` at its root; the children of `S` are obtained
//! by removing, one at a time, each generator `e >= c(S)`. Every numerical
//! semigroup appears exactly once, at depth equal to its genus, so counting
//! nodes by depth gives `n_g`.
//!
//! Traversal is a depth-first walk carrying the set of generators above the
//! conductor. When a generator `e` is removed (and `e` is not the
//! multiplicity), the child's generators above its conductor `e + 1` are the
//! parent's generators above `e`, plus `e + m` when that sum no longer has
//! another decomposition. In parallel mode the walk is expanded sequentially
//! down to a frontier depth and the frontier subtrees are handed to rayon;
//! results are merged with associative, commutative reductions so the output
//! does not depend on scheduling.

mod forest;
pub mod oeis;
mod table;

use rayon::prelude::*;

pub use forest::{ForestGraph, GraphKind};
pub use table::{check_monotonicity, CountTable, MonotonicityViolation, TableKind};

use crate::error::{Error, Result};
use crate::semigroup::{low_bits, Bits, Semigroup, DEFAULT_GENUS_BOUND, GENUS_LIMIT};
use crate::transforms::{ordinarization_number, ordinarize, qo_number, quasi_ordinarize};

/// Default depth at which the parallel walk splits into independent tasks.
pub const DEFAULT_FRONTIER_DEPTH: u32 = 12;

/// A node of the semigroup tree with its generators `>= c` as a bitmask.
#[derive(Clone, Copy)]
struct Node {
    s: Semigroup,
    gens: u128,
}

impl Node {
    fn root() -> Self {
        Node {
            s: Semigroup::naturals(),
            gens: 0b10,
        }
    }

    #[inline]
    fn for_each_child(&self, mut f: impl FnMut(Node)) {
        let full = self.s.full_mask();
        let m = self.s.multiplicity();
        let g = self.s.genus();
        for e in Bits(self.gens) {
            let child_full = full & !(1u128 << e);
            let child = Semigroup::from_full_mask(child_full);
            let gens = if e == m {
                // Ordinary parent (or N0): the child is ordinary with conductor e + 1.
                let c = e + 1;
                low_bits(2 * c) & !low_bits(c)
            } else {
                let mut gens = self.gens & !low_bits(e + 1);
                let x = e + m;
                // A generator above the child's conductor is at most 2(g+1) + 1.
                if x <= 2 * g + 3 {
                    let small = child_full & low_bits(x) & !1;
                    let mirrored = small.reverse_bits() >> (127 - x);
                    if small & mirrored == 0 {
                        gens |= 1u128 << x;
                    }
                }
                gens
            };
            f(Node { s: child, gens });
        }
    }
}

/// Per-task accumulator for a tree walk.
pub trait Accumulator: Send + Sized {
    fn visit(&mut self, s: &Semigroup);
    fn merge(self, other: Self) -> Self;
}

/// Configuration of the enumeration engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Explorer {
    bound: u32,
    parallel: bool,
    frontier_depth: u32,
}

impl Default for Explorer {
    fn default() -> Self {
        Explorer {
            bound: DEFAULT_GENUS_BOUND,
            parallel: true,
            frontier_depth: DEFAULT_FRONTIER_DEPTH,
        }
    }
}

impl Explorer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Single-threaded mode; produces identical results.
    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }

    pub fn parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    pub fn with_frontier_depth(mut self, depth: u32) -> Self {
        self.frontier_depth = depth;
        self
    }

    /// Overrides the genus bound; it may not exceed [`GENUS_LIMIT`].
    pub fn with_bound(mut self, bound: u32) -> Result<Self> {
        if bound > GENUS_LIMIT {
            return Err(Error::GenusBoundExceeded {
                requested: bound,
                bound: GENUS_LIMIT,
            });
        }
        self.bound = bound;
        Ok(self)
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn is_parallel(&self) -> bool {
        self.parallel
    }

    pub fn check_genus(&self, g: u32) -> Result<()> {
        if g > self.bound {
            Err(Error::GenusBoundExceeded {
                requested: g,
                bound: self.bound,
            })
        } else {
            Ok(())
        }
    }

    /// Visits every semigroup of genus `<= max_genus` exactly once.
    pub fn walk<A, F>(&self, max_genus: u32, make: F) -> Result<A>
    where
        A: Accumulator,
        F: Fn() -> A + Sync,
    {
        self.check_genus(max_genus)?;
        if !self.parallel {
            let mut acc = make();
            dfs(Node::root(), max_genus, &mut acc);
            return Ok(acc);
        }
        let split = self.frontier_depth.min(max_genus);
        let mut shallow = make();
        let mut frontier = Vec::new();
        let mut stack = vec![Node::root()];
        while let Some(node) = stack.pop() {
            if node.s.genus() == split {
                frontier.push(node);
                continue;
            }
            shallow.visit(&node.s);
            node.for_each_child(|c| stack.push(c));
        }
        let deep = frontier
            .into_par_iter()
            .map(|node| {
                let mut acc = make();
                dfs(node, max_genus, &mut acc);
                acc
            })
            .reduce(&make, A::merge);
        Ok(shallow.merge(deep))
    }

    /// `n_g` for `g = 0..=max_g`.
    pub fn count_by_genus(&self, max_g: u32) -> Result<CountTable> {
        let tally = self.walk(max_g, || Tally::new(max_g, |_| 0))?;
        CountTable::from_rows(TableKind::NByGenus, &tally.into_rows()?)
    }

    /// `rho_{g,q}`: semigroups by genus and quasi-ordinarization number.
    pub fn rho_table(&self, max_g: u32) -> Result<CountTable> {
        let tally = self.walk(max_g, || Tally::new(max_g, qo_number))?;
        CountTable::from_rows(TableKind::Rho, &tally.into_rows()?)
    }

    /// `o_{g,r}`: semigroups by genus and ordinarization number, the latter
    /// obtained by iterating the ordinarization transform.
    pub fn o_table(&self, max_g: u32) -> Result<CountTable> {
        let tally = self.walk(max_g, || Tally::new(max_g, ordinarization_number))?;
        CountTable::from_rows(TableKind::O, &tally.into_rows()?)
    }

    /// All semigroups of genus `g`, sorted.
    pub fn semigroups_of_genus(&self, g: u32) -> Result<Vec<Semigroup>> {
        let mut all = self.walk(g, || Collect { genus: g, found: Vec::new() })?.found;
        all.sort_unstable();
        Ok(all)
    }

    /// The semigroups of every genus `0..=max_g`, each list sorted.
    pub fn semigroups_up_to(&self, max_g: u32) -> Result<Vec<Vec<Semigroup>>> {
        let mut by_genus = self.walk(max_g, || CollectAll(vec![Vec::new(); max_g as usize + 1]))?.0;
        for level in &mut by_genus {
            level.sort_unstable();
        }
        Ok(by_genus)
    }

    /// The forest of genus-`g` semigroups under quasi-ordinarization, grown
    /// from its roots with [`children_fg`].
    pub fn forest(&self, g: u32) -> Result<ForestGraph> {
        self.check_genus(g)?;
        let mut roots = vec![Semigroup::ordinary(g)?];
        if g >= 2 {
            for c in g + 2..=2 * g {
                roots.push(crate::transforms::quasi_ordinary_root(g, c)?);
            }
        }
        Ok(ForestGraph::grow(
            GraphKind::Forest { genus: g },
            roots,
            children_fg,
            self.parallel,
        ))
    }

    /// The tree of genus-`g` semigroups under ordinarization, grown from the
    /// ordinary semigroup with [`children_tg`].
    pub fn tree_tg(&self, g: u32) -> Result<ForestGraph> {
        self.check_genus(g)?;
        Ok(ForestGraph::grow(
            GraphKind::OrdinarizationTree { genus: g },
            vec![Semigroup::ordinary(g)?],
            children_tg,
            self.parallel,
        ))
    }

    /// The semigroup tree truncated at genus `max_g`.
    pub fn tree_t(&self, max_g: u32) -> Result<ForestGraph> {
        self.check_genus(max_g)?;
        Ok(ForestGraph::grow(
            GraphKind::SemigroupTree { max_genus: max_g },
            vec![Semigroup::naturals()],
            |s| {
                if s.genus() < max_g {
                    children_t(s)
                } else {
                    Vec::new()
                }
            },
            self.parallel,
        ))
    }
}

fn dfs<A: Accumulator>(root: Node, max_genus: u32, acc: &mut A) {
    let mut stack = vec![root];
    while let Some(node) = stack.pop() {
        acc.visit(&node.s);
        if node.s.genus() < max_genus {
            node.for_each_child(|c| stack.push(c));
        }
    }
}

/// Counts per `(genus, index)` where the index is computed per semigroup.
struct Tally<F> {
    rows: Vec<Vec<u64>>,
    index: F,
    overflow: Option<u32>,
}

impl<F: Fn(&Semigroup) -> u32> Tally<F> {
    fn new(max_g: u32, index: F) -> Self {
        Tally {
            rows: vec![Vec::new(); max_g as usize + 1],
            index,
            overflow: None,
        }
    }

    fn into_rows(self) -> Result<Vec<Vec<u64>>> {
        match self.overflow {
            Some(genus) => Err(Error::CountOverflow { genus }),
            None => Ok(self.rows),
        }
    }
}

impl<F: Fn(&Semigroup) -> u32 + Send> Accumulator for Tally<F> {
    #[inline]
    fn visit(&mut self, s: &Semigroup) {
        let g = s.genus();
        let i = (self.index)(s) as usize;
        let row = &mut self.rows[g as usize];
        if row.len() <= i {
            row.resize(i + 1, 0);
        }
        match row[i].checked_add(1) {
            Some(v) => row[i] = v,
            None => self.overflow = self.overflow.or(Some(g)),
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.overflow = self.overflow.or(other.overflow);
        for (g, (mine, theirs)) in self.rows.iter_mut().zip(other.rows).enumerate() {
            if mine.len() < theirs.len() {
                mine.resize(theirs.len(), 0);
            }
            for (a, b) in mine.iter_mut().zip(theirs) {
                match a.checked_add(b) {
                    Some(v) => *a = v,
                    None => self.overflow = self.overflow.or(Some(g as u32)),
                }
            }
        }
        self
    }
}

struct Collect {
    genus: u32,
    found: Vec<Semigroup>,
}

impl Accumulator for Collect {
    fn visit(&mut self, s: &Semigroup) {
        if s.genus() == self.genus {
            self.found.push(*s);
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.found.extend(other.found);
        self
    }
}

struct CollectAll(Vec<Vec<Semigroup>>);

impl Accumulator for CollectAll {
    fn visit(&mut self, s: &Semigroup) {
        self.0[s.genus() as usize].push(*s);
    }

    fn merge(mut self, other: Self) -> Self {
        for (mine, theirs) in self.0.iter_mut().zip(other.0) {
            mine.extend(theirs);
        }
        self
    }
}

/// Children of `S` in the semigroup tree: `S \ {e}` for each generator
/// `e >= c(S)`, ordered by `e`.
pub fn children_t(s: &Semigroup) -> Vec<Semigroup> {
    s.generators_from_conductor()
        .into_iter()
        .map(|e| s.remove_unchecked(e))
        .collect()
}

/// Children of `S` in the quasi-ordinarization forest of its genus: every
/// `S'` of the same genus with `quasi_ordinarize(S') = S` and `S' != S`.
///
/// Such an `S'` equals `S \ {e} ∪ {a}` where `e` is a generator of `S` in
/// `[subconductor, F - 1]` (the sub-Frobenius number of `S'`) and `a` is a
/// candidate of `S \ {e}` (the multiplicity of `S'`). Ordered by `(e, a)`.
pub fn children_fg(s: &Semigroup) -> Vec<Semigroup> {
    let (Some(sub), Some(f)) = (s.subconductor(), s.frobenius()) else {
        return Vec::new();
    };
    if s.genus() < 2 {
        return Vec::new();
    }
    let generators = s.generators();
    let mut out = Vec::new();
    for e in generators.into_iter().filter(|&e| e >= sub && e < f) {
        let without = s.remove_unchecked(e);
        for a in without.candidates() {
            if a >= s.multiplicity() {
                continue;
            }
            let child = without.adjoin(a).expect("candidates are adjoinable");
            if child != *s && quasi_ordinarize(&child) == *s {
                out.push(child);
            }
        }
    }
    out.dedup();
    out
}

/// Children of `S` in the ordinarization tree of its genus: every `S'` of the
/// same genus with `ordinarize(S') = S` and `S' != S`.
///
/// Such an `S'` equals `S \ {e} ∪ {a}` where `e > F` is a generator of `S`
/// (the Frobenius number of `S'`) and `a < m(S)` is a candidate of
/// `S \ {e}` (the multiplicity of `S'`). Ordered by `(e, a)`.
pub fn children_tg(s: &Semigroup) -> Vec<Semigroup> {
    if s.genus() == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for e in s.generators_from_conductor() {
        let without = s.remove_unchecked(e);
        for a in without.candidates() {
            if a >= s.multiplicity() {
                continue;
            }
            let child = without.adjoin(a).expect("candidates are adjoinable");
            if child != *s && ordinarize(&child) == *s {
                out.push(child);
            }
        }
    }
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaps(g: &[u32]) -> Semigroup {
        Semigroup::from_gaps(g).unwrap()
    }

    /// Walk that recomputes generators from scratch at every node.
    fn naive_levels(max_g: u32) -> Vec<Vec<Semigroup>> {
        let mut levels = vec![vec![Semigroup::naturals()]];
        for _ in 0..max_g {
            let next: Vec<Semigroup> = levels.last().unwrap().iter().flat_map(children_t).collect();
            levels.push(next);
        }
        for l in &mut levels {
            l.sort();
        }
        levels
    }

    #[test]
    fn incremental_generators_match_recomputation() {
        let mut stack = vec![Node::root()];
        let mut seen = 0;
        while let Some(node) = stack.pop() {
            let expected = node.s.generators_from_conductor();
            let tracked: Vec<u32> = Bits(node.gens).collect();
            assert_eq!(tracked, expected, "{}", node.s);
            seen += 1;
            if node.s.genus() < 11 {
                node.for_each_child(|c| stack.push(c));
            }
        }
        assert_eq!(seen, 1 + 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67 + 118 + 204 + 343);
    }

    #[test]
    fn walk_matches_naive_level_expansion() {
        let naive = naive_levels(10);
        let fast = Explorer::new().semigroups_up_to(10).unwrap();
        assert_eq!(naive, fast);
    }

    #[test]
    fn small_counts() {
        let t = Explorer::new().count_by_genus(7).unwrap();
        let n: Vec<u64> = (0..=7).map(|g| t.get(g, 0)).collect();
        assert_eq!(n, vec![1, 1, 2, 4, 7, 12, 23, 39]);
        let t0 = Explorer::new().count_by_genus(0).unwrap();
        assert_eq!(t0.to_text(), "1\n");
    }

    #[test]
    fn bound_is_enforced() {
        let e = Explorer::new().with_bound(10).unwrap();
        assert_eq!(
            e.count_by_genus(11).unwrap_err(),
            Error::GenusBoundExceeded { requested: 11, bound: 10 }
        );
        assert!(Explorer::new().with_bound(GENUS_LIMIT + 1).is_err());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let par = Explorer::new().with_frontier_depth(4);
        let seq = Explorer::new().sequential();
        assert_eq!(par.rho_table(14).unwrap(), seq.rho_table(14).unwrap());
        assert_eq!(par.o_table(12).unwrap(), seq.o_table(12).unwrap());
        assert_eq!(
            par.semigroups_of_genus(9).unwrap(),
            seq.semigroups_of_genus(9).unwrap()
        );
    }

    #[test]
    fn children_in_semigroup_tree() {
        assert_eq!(children_t(&Semigroup::naturals()), vec![gaps(&[1])]);
        let ord3 = Semigroup::ordinary(3).unwrap();
        assert_eq!(
            children_t(&ord3),
            vec![
                gaps(&[1, 2, 3, 4]),
                gaps(&[1, 2, 3, 5]),
                gaps(&[1, 2, 3, 6]),
                gaps(&[1, 2, 3, 7])
            ]
        );
        // Generators of {0,4,5,6,8,...} are 4, 5, 6: none reach the conductor.
        let q = gaps(&[1, 2, 3, 7]);
        assert_eq!(q.generators(), vec![4, 5, 6]);
        assert!(children_t(&q).is_empty());
        for child in children_t(&gaps(&[1, 3])) {
            assert_eq!(child.genus(), 3);
        }
    }

    #[test]
    fn forest_children_examples() {
        let root48 = gaps(&[1, 2, 3, 7]);
        assert_eq!(
            children_fg(&root48),
            vec![gaps(&[1, 2, 4, 7]), gaps(&[1, 3, 5, 7])]
        );
        assert!(children_fg(&gaps(&[1, 2, 3, 6])).is_empty());
        for g in 1..=8 {
            assert!(children_fg(&Semigroup::ordinary(g).unwrap()).is_empty());
        }
    }
}
