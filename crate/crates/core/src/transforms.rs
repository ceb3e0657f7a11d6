//! Ordinarization and quasi-ordinarization transforms.
//!
//! Both transforms drop the multiplicity `m` and put back a gap: the
//! Frobenius number `F` (ordinarization) or the sub-Frobenius number `f`
//! (quasi-ordinarization). Ordinary semigroups (and, for the second
//! transform, quasi-ordinary ones) are fixed points.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{low_bits, Semigroup};

/// Iterates of a transform from a starting semigroup up to its fixed point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransformChain {
    steps: Vec<Semigroup>,
}

impl TransformChain {
    fn iterate(start: Semigroup, step: impl Fn(&Semigroup) -> Semigroup) -> Self {
        let mut steps = vec![start];
        loop {
            let last = steps.last().unwrap();
            let next = step(last);
            if next == *last {
                return TransformChain { steps };
            }
            steps.push(next);
        }
    }

    pub fn steps(&self) -> &[Semigroup] {
        &self.steps
    }

    /// Number of edges in the chain.
    pub fn len(&self) -> u32 {
        self.steps.len() as u32 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.steps.len() == 1
    }

    pub fn start(&self) -> &Semigroup {
        &self.steps[0]
    }

    pub fn end(&self) -> &Semigroup {
        self.steps.last().unwrap()
    }
}

/// `S \ {m} ∪ {F}`, or `S` itself when `S` is ordinary or `N0`.
pub fn ordinarize(s: &Semigroup) -> Semigroup {
    if s.is_ordinary() || s.conductor() == 0 {
        return *s;
    }
    let f = s.frobenius().unwrap();
    let full = (s.full_mask() & !(1u128 << s.multiplicity())) | 1u128 << f;
    Semigroup::from_full_mask(full)
}

/// `S ∪ {f} \ {m}`, or `S` itself when `S` is ordinary, quasi-ordinary or `N0`.
pub fn quasi_ordinarize(s: &Semigroup) -> Semigroup {
    if s.conductor() == 0 || s.is_ordinary() || s.is_quasi_ordinary() {
        return *s;
    }
    let f = s
        .sub_frobenius()
        .expect("a non-ordinary semigroup has two gaps");
    let full = (s.full_mask() & !(1u128 << s.multiplicity())) | 1u128 << f;
    debug_assert!(
        crate::semigroup::closure_witness_mask(full).is_none(),
        "quasi-ordinarization of {s} is not closed"
    );
    Semigroup::from_full_mask(full)
}

/// Quasi-ordinarization number: the count of nonzero members `<= g - 1`.
/// Zero for ordinary and quasi-ordinary semigroups.
#[inline]
pub fn qo_number(s: &Semigroup) -> u32 {
    let g = s.genus();
    if g == 0 {
        return 0;
    }
    (s.full_mask() & low_bits(g) & !1).count_ones()
}

pub fn qo_chain(s: &Semigroup) -> TransformChain {
    TransformChain::iterate(*s, quasi_ordinarize)
}

pub fn ordinarization_chain(s: &Semigroup) -> TransformChain {
    TransformChain::iterate(*s, ordinarize)
}

/// Number of ordinarization steps needed to reach the ordinary semigroup,
/// computed by iterating the transform.
pub fn ordinarization_number(s: &Semigroup) -> u32 {
    let mut cur = *s;
    let mut steps = 0;
    loop {
        let next = ordinarize(&cur);
        if next == cur {
            return steps;
        }
        cur = next;
        steps += 1;
    }
}

/// `{0, g, g+1, ..., c-2, c, c+1, ...}`, the only quasi-ordinary semigroup of
/// genus `g` and conductor `c`. Requires `g + 2 <= c <= 2g`.
pub fn quasi_ordinary_root(genus: u32, conductor: u32) -> Result<Semigroup> {
    if conductor < genus + 2 || conductor > 2 * genus {
        return Err(Error::OutOfRange { genus, conductor });
    }
    let mut gaps: Vec<u32> = (1..genus).collect();
    gaps.push(conductor - 1);
    Semigroup::from_gaps(&gaps)
}
