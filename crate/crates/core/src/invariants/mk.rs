//! The recursive upper bounds `M_k` and `M'_k` on the collapsibility number.
//!
//! ```text
//! M_0(X)  = 0                                         if X has no non-cone vertex
//!         = min_v max{M_0(lk(v)) + 1, M_0(del(v))}     over non-cone vertices v
//! M'_k(X) = M_{k-1}(X)                                 if X_(k)^o is empty
//!         = min_σ max{M'_k(del(σ)), M'_k(lk(σ)) + k + 1} over σ in X_(k)^o
//! M_k(X)  = min{M'_k(X), M_{k-1}(X)}
//! ```
//!
//! A vertex is a cone vertex exactly when `lk(v, X) = del(v, X)`, which for
//! vertices coincides with `lk(v, X) = X[V ∖ v]`, so `M_0` uses
//! [`SimplicialComplex::open_k_faces`] with `k = 0`.

use std::collections::HashMap;

use super::Budget;
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::face::Face;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Which {
    M(usize),
    MPrime(usize),
}

/// What is known about one value: exact, or only a lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Known {
    Exact(usize),
    AtLeast(usize),
}

/// Memo table for one top-level evaluation. Keys are exact labeled complexes.
#[derive(Default, Debug)]
pub struct MkMemo {
    values: HashMap<(SimplicialComplex, Which), Known>,
}

impl MkMemo {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Evaluates `M_k` and `M'_k` with a shared memo and node budget.
///
/// The recursion is searched branch-and-bound: every call carries a cutoff
/// `beta` and only has to report the value when it is below `beta`. Values
/// proven to be at least some bound are memoized as lower bounds. A minimum
/// stops early once it meets the trivial lower bound of its recursion
/// (`k + 1` when open `k`-faces exist), so results stay exact.
pub struct MkSolver<'b> {
    memo: MkMemo,
    budget: &'b mut Budget,
}

impl<'b> MkSolver<'b> {
    pub fn new(budget: &'b mut Budget) -> Self {
        Self {
            memo: MkMemo::default(),
            budget,
        }
    }

    pub fn memo(&self) -> &MkMemo {
        &self.memo
    }

    pub fn m(&mut self, x: &SimplicialComplex, k: usize) -> Result<usize> {
        self.exact(x, Which::M(k))
    }

    pub fn m_prime(&mut self, x: &SimplicialComplex, k: usize) -> Result<usize> {
        self.exact(x, Which::MPrime(k))
    }

    /// The face of `X_(k)^o` attaining `M'_k(X)` at the top level, if any.
    /// Ties go to the lexicographically first face.
    pub fn m_prime_pivot(&mut self, x: &SimplicialComplex, k: usize) -> Result<Option<Face>> {
        let target = self.m_prime(x, k)?;
        for sigma in x.open_k_faces(k) {
            if self.split(x, sigma, k, target + 1)? == Some(target) {
                return Ok(Some(sigma));
            }
        }
        Ok(None)
    }

    fn exact(&mut self, x: &SimplicialComplex, which: Which) -> Result<usize> {
        // Every value is at most dim + 1, so this cutoff never binds.
        let beta = (x.dim() + 2).max(1) as usize;
        Ok(self
            .solve(x, which, beta)?
            .expect("values never exceed dim + 1"))
    }

    /// `max{M(del σ), M(lk σ) + k + 1}` if it is below `beta`.
    fn split(
        &mut self,
        x: &SimplicialComplex,
        sigma: Face,
        k: usize,
        beta: usize,
    ) -> Result<Option<usize>> {
        let which = if k == 0 {
            Which::M(0)
        } else {
            Which::MPrime(k)
        };
        if beta <= k + 1 {
            return Ok(None);
        }
        let Some(lk) = self.solve(&x.link(sigma)?, which, beta - k - 1)? else {
            return Ok(None);
        };
        let Some(del) = self.solve(&x.deletion(sigma)?, which, beta)? else {
            return Ok(None);
        };
        Ok(Some(del.max(lk + k + 1)))
    }

    /// The value of `which` at `x` if it is below `beta`, else `None`.
    fn solve(&mut self, x: &SimplicialComplex, which: Which, beta: usize) -> Result<Option<usize>> {
        let which = match which {
            Which::MPrime(0) => Which::M(0),
            w => w,
        };
        if x.is_simplex() {
            return Ok((beta > 0).then_some(0));
        }
        let key = (x.clone(), which);
        match self.memo.values.get(&key) {
            Some(&Known::Exact(v)) => return Ok((v < beta).then_some(v)),
            Some(&Known::AtLeast(lb)) if lb >= beta => return Ok(None),
            _ => {}
        }
        self.budget.tick()?;
        let found = match which {
            Which::M(0) | Which::MPrime(0) => self.min_split(x, 0, beta)?,
            Which::MPrime(k) => {
                if x.open_k_faces(k).is_empty() {
                    self.solve(x, Which::M(k - 1), beta)?
                } else {
                    self.min_split(x, k, beta)?
                }
            }
            Which::M(k) => {
                let lower = self.solve(x, Which::M(k - 1), beta)?;
                let prime = self.solve(x, Which::MPrime(k), lower.unwrap_or(beta))?;
                prime.or(lower)
            }
        };
        let known = match found {
            Some(v) => Known::Exact(v),
            None => Known::AtLeast(beta),
        };
        self.memo.values.insert(key, known);
        Ok(found)
    }

    /// Minimum split value over open `k`-faces of a non-simplex, if below
    /// `beta`. Every split value is at least `k + 1`.
    fn min_split(
        &mut self,
        x: &SimplicialComplex,
        k: usize,
        mut beta: usize,
    ) -> Result<Option<usize>> {
        let mut best = None;
        let mut open = x.open_k_faces(k);
        // Small links first: they are cheap and tend to give low values.
        open.sort_by_key(|&sigma| x.facets_containing(sigma).count());
        for sigma in open {
            if beta <= k + 1 {
                break;
            }
            if let Some(v) = self.split(x, sigma, k, beta)? {
                best = Some(v);
                beta = v;
            }
        }
        Ok(best)
    }
}

pub fn m0(x: &SimplicialComplex, budget: &mut Budget) -> Result<usize> {
    MkSolver::new(budget).m(x, 0)
}

pub fn mk(x: &SimplicialComplex, k: usize, budget: &mut Budget) -> Result<usize> {
    MkSolver::new(budget).m(x, k)
}

pub fn mk_prime(x: &SimplicialComplex, k: usize, budget: &mut Budget) -> Result<usize> {
    MkSolver::new(budget).m_prime(x, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face;
    use crate::named;

    /// Literal recursion with no memo, written against lk(v) ≠ del(v).
    fn m0_oracle(x: &SimplicialComplex) -> usize {
        let open: Vec<u32> = x
            .vertices()
            .iter()
            .filter(|&v| x.link(face![v]).unwrap() != x.deletion(face![v]).unwrap())
            .collect();
        open.iter()
            .map(|&v| {
                let lk = m0_oracle(&x.link(face![v]).unwrap()) + 1;
                let del = m0_oracle(&x.deletion(face![v]).unwrap());
                lk.max(del)
            })
            .min()
            .unwrap_or(0)
    }

    /// Literal `M_k` / `M'_k` recursion with a plain memo and no cutoffs.
    fn mk_oracle(
        x: &SimplicialComplex,
        k: usize,
        prime: bool,
        memo: &mut HashMap<(SimplicialComplex, usize, bool), usize>,
    ) -> usize {
        if k == 0 {
            return m0_oracle(x);
        }
        if let Some(&v) = memo.get(&(x.clone(), k, prime)) {
            return v;
        }
        let v = if prime {
            let open: Vec<Face> = x
                .faces(k as isize)
                .into_iter()
                .filter(|&s| x.link(s).unwrap() != x.induced(x.vertices().difference(s)))
                .collect();
            if open.is_empty() {
                mk_oracle(x, k - 1, false, memo)
            } else {
                open.iter()
                    .map(|&s| {
                        let del = mk_oracle(&x.deletion(s).unwrap(), k, true, memo);
                        let lk = mk_oracle(&x.link(s).unwrap(), k, true, memo);
                        del.max(lk + k + 1)
                    })
                    .min()
                    .unwrap()
            }
        } else {
            mk_oracle(x, k, true, memo).min(mk_oracle(x, k - 1, false, memo))
        };
        memo.insert((x.clone(), k, prime), v);
        v
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]
        #[test]
        fn branch_and_bound_matches_literal_recursion(
            masks in proptest::collection::vec(1u64..32, 1..5)
        ) {
            let x = SimplicialComplex::from_faces(masks.into_iter().map(|m| Face::from_bits(m << 1)));
            let mut budget = Budget::default();
            let mut solver = MkSolver::new(&mut budget);
            let mut memo = HashMap::new();
            for k in 0..3 {
                proptest::prop_assert_eq!(solver.m(&x, k).unwrap(), mk_oracle(&x, k, false, &mut memo));
                proptest::prop_assert_eq!(solver.m_prime(&x, k).unwrap(), mk_oracle(&x, k, k > 0, &mut memo));
            }
        }
    }

    #[test]
    fn simplices_are_zero() {
        let s = named::simplex(5);
        for k in 0..4 {
            assert_eq!(mk(&s, k, &mut Budget::default()).unwrap(), 0);
            assert_eq!(mk_prime(&s, k, &mut Budget::default()).unwrap(), 0);
        }
        assert_eq!(
            m0(&SimplicialComplex::empty(), &mut Budget::default()).unwrap(),
            0
        );
    }

    #[test]
    fn three_cycle() {
        let c3 = named::cycle(3);
        assert_eq!(m0(&c3, &mut Budget::default()).unwrap(), 2);
        assert_eq!(m0_oracle(&c3), 2);
    }

    #[test]
    fn v6f10_6_values() {
        let d = named::v6f10_6();
        let m_0 = m0(&d, &mut Budget::default()).unwrap();
        assert!(m_0 >= 3);
        assert_eq!(m_0, m0_oracle(&d));
        assert_eq!(mk(&d, 1, &mut Budget::default()).unwrap(), 2);
        assert_eq!(mk_prime(&d, 1, &mut Budget::default()).unwrap(), 2);
        let mut budget = Budget::default();
        let mut solver = MkSolver::new(&mut budget);
        let pivot = solver.m_prime_pivot(&d, 1).unwrap().unwrap();
        assert!(d.open_k_faces(1).contains(&pivot));
        assert!(!solver.memo().is_empty());
    }

    /// Both edges of the path 1-2-3 are open with link `{∅}`, so
    /// `M'_1 = 2`, while `M_1 = M_0 = 1` through the middle vertex.
    #[test]
    fn prime_variant_exceeds_mk_on_the_three_path() {
        let p3 = named::path(3);
        assert_eq!(p3.open_k_faces(1).len(), 2);
        assert_eq!(mk_prime(&p3, 1, &mut Budget::default()).unwrap(), 2);
        assert_eq!(mk(&p3, 1, &mut Budget::default()).unwrap(), 1);
        assert_eq!(mk_oracle(&p3, 1, true, &mut HashMap::new()), 2);
    }

    #[test]
    fn mk_decreases_in_k() {
        for x in [
            named::v6f10_6(),
            named::sphere(5),
            named::cycle(5),
            named::path(4),
        ] {
            let mut budget = Budget::default();
            let mut solver = MkSolver::new(&mut budget);
            let vals: Vec<usize> = (0..4).map(|k| solver.m(&x, k).unwrap()).collect();
            assert!(vals.windows(2).all(|w| w[1] <= w[0]), "{x}: {vals:?}");
        }
    }
}
