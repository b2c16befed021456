use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::{Allocation, CostGame, Rational};

/// `γ(s) = s!(n − s − 1)!/n!` for `s = 0..n`.
fn weights(n: usize) -> Vec<Rational> {
    let mut fact = Vec::with_capacity(n + 1);
    fact.push(BigInt::from(1));
    for k in 1..=n {
        let next = &fact[k - 1] * BigInt::from(k);
        fact.push(next);
    }
    (0..n)
        .map(|s| Rational::new(&fact[s] * &fact[n - s - 1], fact[n].clone()))
        .collect()
}

/// Exact Shapley value by the subset formula.
pub fn shapley<G: CostGame>(g: &G) -> Allocation {
    let n = g.players();
    let gamma = weights(n);
    (0..n)
        .map(|i| {
            let others = g.grand().without(i);
            let mut phi = Rational::default();
            for s in others.subsets() {
                let marginal = g.cost(s.with(i)) - g.cost(s);
                phi += &gamma[s.len()] * marginal;
            }
            phi
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, Coalition, TabularGame};

    #[test]
    fn weights_sum_over_subsets_to_one() {
        for n in 1..8usize {
            let w = weights(n);
            let total: Rational = (0..n)
                .map(|s| {
                    let count = Coalition::grand(n - 1)
                        .subsets()
                        .filter(|c| c.len() == s)
                        .count();
                    &w[s] * rat(count as i64)
                })
                .sum();
            assert_eq!(total, rat(1));
        }
    }

    #[test]
    fn additive_game_pays_stand_alone_costs() {
        let g = TabularGame::from_fn(4, |s| s.members().map(|i| rat(3 * i as i64 + 1)).sum());
        assert_eq!(shapley(&g), Allocation::from_integers(&[1, 4, 7, 10]));
    }
}
