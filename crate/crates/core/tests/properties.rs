//! Oracle equivalences and invariants over bundled and random instances.

use num_traits::{One, Signed, Zero};
use pigame_core::builtin::{example1, example3, example4, exponential_family};
use pigame_core::geometry::{
    enumerate_core_vertices, essential_players, extreme_function, is_boundary_point,
    is_core_member, pair_set,
};
use pigame_core::model::characteristic_value_lp_oracle;
use pigame_core::rules::{
    check_solomonic_conditions, is_concave, is_ps_game, nucleolus, omega_point, qpq, shapley,
    solomonic,
};
use pigame_core::{rat, ratio, Allocation, Coalition, CostGame, GameTable, PiInstance, Rational};
use proptest::prelude::*;

fn bundled() -> Vec<PiInstance> {
    vec![example1(), example3(), example4(), exponential_family(4)]
}

/// `min(p_t, min_{k<t} p_k + h_k..h_{t-1}, min_{k>t} p_k + b_t..b_{k-1})`
/// over pooled coalition costs, straight from the definition.
fn price_by_enumeration(inst: &PiInstance, s: Coalition, t: usize) -> Rational {
    let pooled =
        |rows: &[Vec<Rational>], k: usize| s.members().map(|i| rows[i][k].clone()).min().unwrap();
    let mut best = pooled(inst.production(), t);
    for k in 0..inst.periods() {
        let mut cost = pooled(inst.production(), k);
        if k < t {
            for m in k..t {
                cost += pooled(inst.holding(), m);
            }
        } else if k > t {
            for m in t..k {
                cost += pooled(inst.backlog(), m);
            }
        }
        best = best.min(cost);
    }
    best
}

fn cost_by_enumeration(inst: &PiInstance, s: Coalition) -> Rational {
    (0..inst.periods())
        .map(|t| {
            let d: u64 = s.members().map(|i| inst.demand()[i][t]).sum();
            price_by_enumeration(inst, s, t) * Rational::from_integer(d.into())
        })
        .sum()
}

fn shapley_by_permutations<G: CostGame>(g: &G) -> Allocation {
    fn perms(items: Vec<usize>) -> Vec<Vec<usize>> {
        if items.len() <= 1 {
            return vec![items];
        }
        let mut out = Vec::new();
        for k in 0..items.len() {
            let mut rest = items.clone();
            let head = rest.remove(k);
            for mut tail in perms(rest) {
                tail.insert(0, head);
                out.push(tail);
            }
        }
        out
    }
    let n = g.players();
    let all = perms((0..n).collect());
    let mut phi = vec![Rational::zero(); n];
    for order in &all {
        let mut s = Coalition::empty();
        for &i in order {
            phi[i] += g.cost(s.with(i)) - g.cost(s);
            s = s.with(i);
        }
    }
    let count = rat(all.len() as i64);
    phi.into_iter().map(|v| v / &count).collect()
}

/// Concavity straight from the definition over nested pairs `S ⊆ T`.
fn concave_by_definition<G: CostGame>(g: &G) -> bool {
    let n = g.players();
    Coalition::all(n).all(|t| {
        t.subsets().all(|s| {
            s.members()
                .all(|i| g.cost(s) - g.cost(s.without(i)) >= g.cost(t) - g.cost(t.without(i)))
        })
    })
}

fn sorted_excesses<G: CostGame>(g: &G, x: &Allocation) -> Vec<Rational> {
    let mut e: Vec<Rational> = Coalition::proper(g.players())
        .map(|s| x.coalition_sum(s) - g.cost(s))
        .collect();
    e.sort_by(|a, b| b.cmp(a));
    e
}

fn check_rules(inst: PiInstance) {
    let g = GameTable::new(inst).unwrap();
    let in_core = |x: &Allocation| is_core_member(&g, x).unwrap().member;

    let o = g.owen_point();
    assert!(in_core(&o), "owen {o}");
    let om = omega_point(&g);
    assert!(in_core(&om.omega), "omega {}", om.omega);
    assert!(om.q_total.iter().sum::<Rational>().is_zero());
    let essential = essential_players(g.instance());
    for (t, row) in om.q_per_period.iter().enumerate() {
        for (i, v) in row.iter().enumerate() {
            assert!(!v.is_negative() || essential.per_period[t].contains(i));
        }
    }
    for (i, v) in om.omega.iter().enumerate() {
        assert_eq!(*v, &o[i] + &om.q_total[i]);
    }
    for lambda in [rat(0), ratio(1, 4), ratio(1, 2), ratio(3, 4), rat(1)] {
        assert!(in_core(&qpq(&g, &lambda).unwrap()));
    }

    let phi = shapley(&g);
    assert_eq!(phi.total(), *g.cost(g.grand()));
    assert_eq!(phi, shapley_by_permutations(&g));
    let eta = nucleolus(&g);
    assert!(in_core(&eta), "nucleolus {eta}");

    let ps = is_ps_game(&g);
    if ps.is_ps {
        assert_eq!(phi, eta);
    }
    let concave = is_concave(&g);
    assert_eq!(concave.concave, concave_by_definition(&g));
    if check_solomonic_conditions(&g).overall {
        assert_eq!(solomonic(&g), phi);
        assert_eq!(phi, eta);
        assert!(concave.concave);
    }
    if g.players() <= 4 {
        let eta_excess = sorted_excesses(&g, &eta);
        for v in enumerate_core_vertices(&g, 6).unwrap().iter() {
            assert!(eta_excess <= sorted_excesses(&g, v));
        }
        for x in [&o, &om.omega, &phi] {
            if in_core(x) {
                assert!(eta_excess <= sorted_excesses(&g, x));
            }
        }
    }
}

#[test]
fn closed_form_matches_lp_and_enumeration_on_bundled_instances() {
    for inst in bundled() {
        let g = GameTable::new(inst.clone()).unwrap();
        for s in Coalition::all(inst.players()).skip(1) {
            assert_eq!(
                *g.cost(s),
                characteristic_value_lp_oracle(&inst, s).unwrap(),
                "{s}"
            );
            assert_eq!(*g.cost(s), cost_by_enumeration(&inst, s), "{s}");
        }
    }
}

#[test]
fn dual_prices_are_monotone_on_bundled_instances() {
    for inst in bundled() {
        let n = inst.players();
        for t_set in Coalition::all(n).skip(1) {
            let big = inst.dual_prices(t_set).unwrap();
            for s in t_set.subsets().skip(1) {
                let small = inst.dual_prices(s).unwrap();
                assert!(big.iter().zip(small.iter()).all(|(a, b)| a <= b));
            }
        }
    }
}

#[test]
fn rules_on_bundled_instances() {
    for inst in bundled() {
        check_rules(inst);
    }
}

#[test]
fn extreme_images_of_random_core_points() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for inst in [example1(), example3(), example4()] {
        let g = GameTable::new(inst).unwrap();
        let vertices: Vec<Allocation> = enumerate_core_vertices(&g, 6)
            .unwrap()
            .iter()
            .cloned()
            .collect();
        let pairs = pair_set(&g);
        for _ in 0..60 {
            let weights: Vec<i64> = vertices.iter().map(|_| rng.gen_range(0..20)).collect();
            let total: i64 = weights.iter().sum::<i64>().max(1);
            let x: Allocation = (0..g.players())
                .map(|i| {
                    vertices
                        .iter()
                        .zip(&weights)
                        .map(|(v, &w)| &v[i] * rat(w))
                        .sum::<Rational>()
                        / rat(total)
                })
                .collect();
            let x = if x.total() == *g.cost(g.grand()) {
                x
            } else {
                vertices[0].clone()
            };
            assert!(is_core_member(&g, &x).unwrap().member);
            for &p in &pairs {
                let y = extreme_function(&g, p, &x).unwrap();
                assert!(is_boundary_point(&g, &y).unwrap(), "{x} -> {y}");
            }
        }
    }
}

fn instance_strategy() -> impl Strategy<Value = PiInstance> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(n, t)| {
        let cost = (0i64..6, 1i64..3).prop_map(|(p, q)| ratio(p, q));
        (
            proptest::collection::vec(proptest::collection::vec(0u64..6, t), n),
            proptest::collection::vec(proptest::collection::vec(cost.clone(), t), n),
            proptest::collection::vec(proptest::collection::vec(cost.clone(), t - 1), n),
            proptest::collection::vec(proptest::collection::vec(cost, t - 1), n),
        )
            .prop_map(|(d, p, h, b)| PiInstance::new(d, p, h, b).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closed_form_matches_lp_oracle(inst in instance_strategy()) {
        for s in Coalition::all(inst.players()).skip(1) {
            let direct = inst.coalition_cost(s).unwrap();
            prop_assert_eq!(&direct, &characteristic_value_lp_oracle(&inst, s).unwrap());
            prop_assert_eq!(&direct, &cost_by_enumeration(&inst, s));
        }
    }

    #[test]
    fn prices_stay_below_production(inst in instance_strategy()) {
        for s in Coalition::all(inst.players()).skip(1) {
            let y = inst.dual_prices(s).unwrap();
            for (t, v) in y.iter().enumerate() {
                prop_assert!(s.members().all(|i| *v <= inst.production()[i][t]));
                prop_assert_eq!(v, &price_by_enumeration(&inst, s, t));
            }
        }
    }

    #[test]
    fn cost_is_additive_over_periods(inst in instance_strategy()) {
        for s in Coalition::all(inst.players()).skip(1) {
            let parts: Rational = (0..inst.periods())
                .map(|t| inst.per_period_instance(t).unwrap().coalition_cost(s).unwrap())
                .sum();
            prop_assert_eq!(parts, inst.coalition_cost(s).unwrap());
        }
    }

    #[test]
    fn allocation_rules_hold_their_invariants(inst in instance_strategy()) {
        check_rules(inst);
    }

    #[test]
    fn qpq_endpoints(inst in instance_strategy()) {
        let g = GameTable::new(inst).unwrap();
        prop_assert_eq!(qpq(&g, &Rational::zero()).unwrap(), g.owen_point());
        prop_assert_eq!(qpq(&g, &Rational::one()).unwrap(), omega_point(&g).omega);
    }
}
