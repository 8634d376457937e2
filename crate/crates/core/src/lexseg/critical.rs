//! Critical squarefree monomial ideals, built from explicit recipes:
//! a base `(x_i, m)` with `x_i ∤ m`, then steps `(x_j) + m'·J` with
//! `x_j ∤ g·m'` and `supp(g) ∩ supp(m') = ∅` for every generator `g` of `J`,
//! optionally scaled by a monomial `w` coprime to every generator.

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::ideals::MonomialIdeal;
use crate::monomials::{Ring, SqfMonomial};

/// One `(x_j) + m'·J` step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriticalStep {
    pub var: usize,
    pub cofactor: SqfMonomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalRecipe {
    pub ring: Ring,
    pub base_var: usize,
    pub base_monomial: SqfMonomial,
    /// Applied innermost first.
    pub steps: Vec<CriticalStep>,
    pub scale: SqfMonomial,
}

/// A built critical ideal with its canonical generator order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalIdeal {
    pub ideal: MonomialIdeal,
    pub order: Vec<SqfMonomial>,
}

fn violated(msg: String) -> Error {
    Error::RecipeConstraintViolated(msg)
}

impl CriticalRecipe {
    /// Validates every constraint and returns the ideal together with the
    /// order `[x_j, m'·(order of J)]` (base: `[x_i, m]`), scaled by `w`.
    pub fn build(&self) -> Result<CriticalIdeal> {
        let ring = self.ring;
        let xi = ring.var(self.base_var)?;
        if self.base_monomial.ring() != ring {
            return Err(Error::AmbientMismatch(ring.n(), self.base_monomial.ring().n()));
        }
        if self.base_monomial.is_one() {
            return Err(violated("base monomial must not be 1".into()));
        }
        if self.base_monomial.contains_var(self.base_var) {
            return Err(violated(format!("x{} divides {}", self.base_var, self.base_monomial)));
        }
        let mut order = vec![xi, self.base_monomial];
        for (k, step) in self.steps.iter().enumerate() {
            let xj = ring.var(step.var)?;
            for g in &order {
                if !g.is_coprime(step.cofactor) {
                    return Err(violated(format!("step {k}: supp({g}) meets supp({})", step.cofactor)));
                }
                if g.contains_var(step.var) || step.cofactor.contains_var(step.var) {
                    return Err(violated(format!("step {k}: x{} divides {g}·{}", step.var, step.cofactor)));
                }
            }
            let lifted = order.iter().map(|g| g.mul(step.cofactor).expect("coprime"));
            order = std::iter::once(xj).chain(lifted).collect();
        }
        if order.iter().any(|g| !g.is_coprime(self.scale)) {
            return Err(violated(format!("scale {} shares a variable with a generator", self.scale)));
        }
        let order: Vec<SqfMonomial> = order.iter().map(|g| g.mul(self.scale).expect("coprime")).collect();
        let ideal = MonomialIdeal::minimalize(ring, order.iter().copied())?;
        debug_assert_eq!(ideal.gens().len(), order.len());
        Ok(CriticalIdeal { ideal, order })
    }

    /// `x_1⋯x_{j_1-1}(x_{j_1} + x_{j_1+1}⋯x_{j_2-1}(x_{j_2} + ⋯ + x_{j_{k-1}+1}⋯x_{j_k}))`
    /// for `j_1 < ... < j_k`, `k ≥ 2`.
    pub fn nested(ring: Ring, js: &[usize]) -> Result<Self> {
        if js.len() < 2 || js.windows(2).any(|w| w[0] >= w[1]) {
            return Err(violated("need at least two strictly increasing indices".into()));
        }
        let k = js.len();
        let span = |lo: usize, hi: usize| SqfMonomial::new(ring, lo..hi);
        let base_monomial = span(js[k - 2] + 1, js[k - 1] + 1)?;
        let steps = (0..k - 2)
            .rev()
            .map(|t| Ok(CriticalStep { var: js[t], cofactor: span(js[t] + 1, js[t + 1])? }))
            .collect::<Result<Vec<_>>>()?;
        Ok(CriticalRecipe { ring, base_var: js[k - 2], base_monomial, steps, scale: span(1, js[0])? })
    }

    /// A random valid recipe on `n` variables with at most `max_gens` generators.
    pub fn random<R: rand::Rng + ?Sized>(rng: &mut R, n: usize, max_gens: usize) -> Result<Self> {
        if n < 2 || max_gens < 2 {
            return Err(violated("need n ≥ 2 and at least two generators".into()));
        }
        let ring = Ring::new(n)?;
        let mut pool: Vec<usize> = (1..=n).collect();
        pool.shuffle(rng);
        let take = |count: usize, pool: &mut Vec<usize>| -> Vec<usize> {
            let count = count.min(pool.len());
            pool.split_off(pool.len() - count)
        };
        let base_var = take(1, &mut pool)[0];
        let size = rng.gen_range(1..=pool.len().min(3));
        let base_monomial = SqfMonomial::new(ring, take(size, &mut pool))?;
        let mut steps = Vec::new();
        while 2 + steps.len() < max_gens && !pool.is_empty() && rng.gen_bool(0.75) {
            let var = take(1, &mut pool)[0];
            let size = rng.gen_range(0..=pool.len().min(2));
            let cofactor = SqfMonomial::new(ring, take(size, &mut pool))?;
            steps.push(CriticalStep { var, cofactor });
        }
        let size = rng.gen_range(0..=pool.len().min(2));
        let scale = SqfMonomial::new(ring, take(size, &mut pool))?;
        Ok(CriticalRecipe { ring, base_var, base_monomial, steps, scale })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::Homology;
    use rand::{Rng as _, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn m(ring: Ring, s: &[usize]) -> SqfMonomial {
        SqfMonomial::new(ring, s.iter().copied()).unwrap()
    }

    #[test]
    fn base_case() {
        let ring = Ring::new(3).unwrap();
        let r = CriticalRecipe { ring, base_var: 1, base_monomial: m(ring, &[2, 3]), steps: vec![], scale: ring.one() };
        let c = r.build().unwrap();
        assert_eq!(c.order, vec![m(ring, &[1]), m(ring, &[2, 3])]);
        assert!(c.ideal.has_linear_quotients(&c.order).unwrap());
    }

    #[test]
    fn constraints() {
        let ring = Ring::new(5).unwrap();
        let bad_base = CriticalRecipe { ring, base_var: 2, base_monomial: m(ring, &[2, 3]), steps: vec![], scale: ring.one() };
        assert!(matches!(bad_base.build(), Err(Error::RecipeConstraintViolated(_))));
        let step = CriticalStep { var: 4, cofactor: m(ring, &[3]) };
        let overlap = CriticalRecipe { ring, base_var: 1, base_monomial: m(ring, &[2, 3]), steps: vec![step], scale: ring.one() };
        assert!(matches!(overlap.build(), Err(Error::RecipeConstraintViolated(_))));
        let scale = CriticalRecipe { ring, base_var: 1, base_monomial: m(ring, &[2]), steps: vec![], scale: m(ring, &[2]) };
        assert!(matches!(scale.build(), Err(Error::RecipeConstraintViolated(_))));
    }

    #[test]
    fn nested_shape() {
        // x1(x2 + x3(x4 + x5x6))
        let ring = Ring::new(6).unwrap();
        let c = CriticalRecipe::nested(ring, &[2, 4, 6]).unwrap().build().unwrap();
        let expect = vec![m(ring, &[1, 2]), m(ring, &[1, 3, 4]), m(ring, &[1, 3, 5, 6])];
        assert_eq!(c.order, expect);
        assert!(c.ideal.has_linear_quotients(&c.order).unwrap());
    }

    #[test]
    fn random_recipes_are_componentwise_linear() {
        let h = Homology::default();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.gen_range(2..=8);
            let c = CriticalRecipe::random(&mut rng, n, 6).unwrap().build().unwrap();
            assert!(c.ideal.has_linear_quotients(&c.order).unwrap(), "{:?}", c.order);
            assert!(h.is_componentwise_linear(&c.ideal).unwrap(), "{:?}", c.order);
        }
    }
}
