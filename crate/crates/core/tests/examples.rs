//! Published values for the bundled example instances.

use pigame_core::builtin::{
    example1, example1_printed, example3, example4, example4_printed, exponential_family,
};
use pigame_core::geometry::{
    composite_walk, essential_players, extreme_function, generate_extremes_from_owen,
    is_boundary_point, is_core_member, pair_set, transferred_cost, EssentialFanPair, PairSequence,
    DEFAULT_WALK_BUDGET,
};
use pigame_core::rules::{
    check_axioms, check_solomonic_conditions, coincidence_report, cost_reduction_q, is_concave,
    is_ps_game, nucleolus, omega_point, qpq, shapley, solomonic, TyrannyCheck,
};
use pigame_core::{rat, ratio, Allocation, Coalition, CostGame, Error, GameTable, Rational};

fn table(inst: pigame_core::PiInstance) -> GameTable {
    GameTable::new(inst).unwrap()
}

fn c(members: &[usize]) -> Coalition {
    Coalition::from_members(members.iter().map(|m| m - 1))
}

fn ints(v: &[i64]) -> Allocation {
    Allocation::from_integers(v)
}

fn rats(v: &[(i64, i64)]) -> Allocation {
    v.iter().map(|&(p, q)| ratio(p, q)).collect()
}

#[test]
fn example1_table_and_owen() {
    let g = table(example1());
    let rows: [(&[usize], i64); 7] = [
        (&[1], 35),
        (&[2], 36),
        (&[3], 25),
        (&[1, 2], 51),
        (&[1, 3], 38),
        (&[2, 3], 53),
        (&[1, 2, 3], 64),
    ];
    for (members, value) in rows {
        assert_eq!(*g.cost(c(members)), rat(value), "{members:?}");
    }
    assert_eq!(g.owen_point(), ints(&[25, 26, 13]));
}

#[test]
fn example1_printed_data_differs_only_for_player_two() {
    let g = table(example1());
    let printed = table(example1_printed());
    for s in Coalition::all(3).skip(1) {
        let want = if s == c(&[2]) {
            rat(34)
        } else {
            g.cost(s).clone()
        };
        assert_eq!(*printed.cost(s), want, "{s}");
    }
    assert_eq!(printed.owen_point(), g.owen_point());
    assert_eq!(omega_point(&printed).omega, omega_point(&g).omega);
    // with c({2}) = 34 the Omega point charges player 2 exactly its stand-alone cost
    let p12 = EssentialFanPair::new(&printed, 0, 1).unwrap();
    assert_eq!(
        transferred_cost(&printed, p12, &printed.owen_point())
            .unwrap()
            .alpha,
        rat(8)
    );
}

#[test]
fn example1_transfers_and_walk() {
    let g = table(example1());
    let o = g.owen_point();
    let p12 = EssentialFanPair::new(&g, 0, 1).unwrap();
    let p13 = EssentialFanPair::new(&g, 0, 2).unwrap();
    assert_eq!(pair_set(&g), vec![p12, p13]);

    let t12 = transferred_cost(&g, p12, &o).unwrap();
    assert_eq!(t12.alpha, rat(10));
    assert_eq!(t12.witness, c(&[2]));
    assert_eq!(transferred_cost(&g, p13, &o).unwrap().alpha, rat(12));
    assert_eq!(extreme_function(&g, p12, &o).unwrap(), ints(&[15, 36, 13]));
    assert_eq!(extreme_function(&g, p13, &o).unwrap(), ints(&[13, 26, 25]));

    let seq = PairSequence::new(&g, vec![p12, p13]).unwrap();
    assert_eq!(composite_walk(&g, &seq, &o).unwrap(), ints(&[11, 36, 17]));
    assert_eq!(
        PairSequence::new(&g, vec![p12]),
        Err(Error::SequenceLength {
            expected: 2,
            found: 1
        })
    );

    let walk = generate_extremes_from_owen(&g, DEFAULT_WALK_BUDGET);
    assert!(!walk.truncated);
    let got: Vec<_> = walk.points.iter().cloned().collect();
    let mut want = vec![
        ints(&[25, 26, 13]),
        ints(&[15, 36, 13]),
        ints(&[13, 26, 25]),
        ints(&[11, 36, 17]),
        ints(&[11, 28, 25]),
    ];
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn example1_pairs_reject_non_fans() {
    let g = table(example1());
    assert_eq!(EssentialFanPair::new(&g, 1, 0), Err(Error::NotEssential(1)));
    assert!(EssentialFanPair::new(&g, 0, 0).is_err());
}

#[test]
fn example1_omega_and_axioms() {
    let g = table(example1());
    assert_eq!(cost_reduction_q(&g, 0, 0, 1).unwrap(), rat(8));
    assert_eq!(cost_reduction_q(&g, 0, 0, 2).unwrap(), rat(6));
    assert_eq!(cost_reduction_q(&g, 0, 1, 1).unwrap(), rat(0));
    let om = omega_point(&g);
    assert_eq!(om.omega, ints(&[11, 34, 19]));
    assert_eq!(om.q_total, vec![rat(-14), rat(8), rat(6)]);

    let r = check_axioms(&g, &om.omega).unwrap();
    assert!(r.ef && r.ne && r.ibc && r.acp.holds && r.is_omega_point);
    assert_eq!(
        r.ti,
        TyrannyCheck::Checked {
            essential: 0,
            rest_cost: rat(53),
            rest_share: rat(53),
            holds: true
        }
    );

    let r = check_axioms(&g, &g.owen_point()).unwrap();
    assert!(r.ef && r.ibc);
    assert_eq!(r.ti.holds(), Some(false));
}

#[test]
fn example1_core_checks() {
    let g = table(example1());
    let x = ints(&[64, 0, 0]);
    let check = is_core_member(&g, &x).unwrap();
    assert!(!check.member);
    assert_eq!(check.violation, Some(c(&[1])));
    assert!(is_boundary_point(&g, &g.owen_point()).unwrap());
    assert_eq!(is_boundary_point(&g, &x), Err(Error::NotInCore));

    let cc = is_concave(&g);
    assert!(!cc.concave);
    let v = cc.violation.unwrap();
    assert_eq!(
        (v.player, v.smaller, v.larger),
        (1, c(&[1, 2]), c(&[1, 2, 3]))
    );
}

#[test]
fn example3_allocations() {
    let g = table(example3());
    assert_eq!(g.owen_point(), ints(&[7, 7, 7, 6]));
    for j in 1..4 {
        assert_eq!(cost_reduction_q(&g, 0, 0, j).unwrap(), rat(2));
    }
    assert_eq!(pair_set(&g).len(), 12);
    let om = omega_point(&g);
    assert_eq!(om.omega, ints(&[6, 9, 8, 4]));
    let per_period = [[-6, 2, 2, 2], [1, -3, 1, 1], [2, 1, -4, 1], [2, 2, 2, -6]];
    for (t, row) in per_period.iter().enumerate() {
        assert_eq!(
            om.q_per_period[t],
            row.iter().map(|&v| rat(v)).collect::<Vec<_>>()
        );
    }
    assert_eq!(om.q_total, vec![rat(-1), rat(2), rat(1), rat(-2)]);

    for lambda in [rat(0), ratio(1, 2), rat(1), ratio(1, 3)] {
        let want: Allocation = [(7, -1), (7, 2), (7, 1), (6, -2)]
            .iter()
            .map(|&(a, b)| rat(a) + rat(b) * &lambda)
            .collect();
        assert_eq!(qpq(&g, &lambda).unwrap(), want);
    }
    assert_eq!(qpq(&g, &ratio(3, 2)), Err(Error::LambdaOutOfRange));
    assert_eq!(qpq(&g, &ratio(-1, 2)), Err(Error::LambdaOutOfRange));

    let target = rats(&[(13, 2), (8, 1), (15, 2), (5, 1)]);
    assert_eq!(solomonic(&g), target);
    assert_eq!(shapley(&g), target);
    assert_eq!(nucleolus(&g), target);

    let report = coincidence_report(&g);
    assert!(report.all_coincide() && report.conditions.overall && report.ps.is_ps);
    assert!(report.concavity.concave);
    assert_eq!(
        check_axioms(&g, &om.omega).unwrap().ti,
        TyrannyCheck::NotApplicable
    );
}

#[test]
fn example4_allocations_and_predicates() {
    let g = table(example4());
    let expected = [45, 50, 70, 70, 75, 80, 85];
    let masks = [0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];
    for (mask, value) in masks.into_iter().zip(expected) {
        assert_eq!(
            *g.cost(Coalition::from_bits(mask)),
            rat(value),
            "mask {mask:b}"
        );
    }
    // the table gives player 1 demand (10, 10, 5) at unit prices, so o_1 = 25
    assert_eq!(g.owen_point(), ints(&[25, 30, 30]));
    assert_eq!(omega_point(&g).omega, ints(&[20, 30, 35]));
    assert_eq!(shapley(&g), rats(&[(125, 6), (155, 6), (115, 3)]));
    assert_eq!(nucleolus(&g), rats(&[(70, 3), (85, 3), (100, 3)]));
    assert_eq!(omega_point(&g).q_total, vec![rat(-5), rat(0), rat(5)]);
    assert_eq!(solomonic(&g), rats(&[(45, 2), (30, 1), (65, 2)]));
    // the published (55/2, 30, 55/2) is the midpoint of the published,
    // player-swapped o and ω
    let published = ints(&[30, 30, 25]).interpolate(&ints(&[25, 30, 30]), &ratio(1, 2));
    assert_eq!(published, rats(&[(55, 2), (30, 1), (55, 2)]));
    assert!(is_concave(&g).concave);
    assert!(!is_ps_game(&g).is_ps);

    let cond = check_solomonic_conditions(&g);
    assert!(!cond.overall);
    let first = &cond.per_period[0];
    assert!(!first.inessential_prices_match);
    let (player, rest_price, own_price) = first.inessential_witness.clone().unwrap();
    assert_eq!((player, rest_price, own_price), (2, rat(2), rat(3)));
    assert_eq!(g.instance().dual_prices(c(&[2, 3])).unwrap()[0], rat(2));
    assert_eq!(g.instance().dual_prices(c(&[3])).unwrap()[0], rat(3));

    let report = coincidence_report(&g);
    assert!(!report.solomonic_eq_shapley && !report.shapley_eq_nucleolus);
    assert!(report.concavity.concave && report.prediction_consistent);
}

#[test]
fn example4_printed_data_gives_a_different_table() {
    let g = table(example4());
    let printed = table(example4_printed());
    assert_ne!(*printed.cost(c(&[1])), *g.cost(c(&[1])));
    assert_eq!(*printed.cost(c(&[1])), rat(60));
}

#[test]
fn exponential_family_closed_forms() {
    for n in 3..=5usize {
        let g = table(exponential_family(n));
        let ni = n as i64;
        for s in Coalition::all(n).skip(1) {
            let size = s.len() as i64;
            let want = if s.contains(0) { size } else { ni * size };
            assert_eq!(*g.cost(s), rat(want));
        }
        let o = g.owen_point();
        assert_eq!(o, Allocation::from_integers(&vec![1; n]));

        let pairs = pair_set(&g);
        assert_eq!(pairs.len(), n - 1);
        let one = extreme_function(&g, pairs[0], &o).unwrap();
        assert_eq!(one[0], rat(2 - ni));
        let two = extreme_function(&g, pairs[1], &one).unwrap();
        assert_eq!(two[0], rat(3 - 2 * ni));
        assert!(essential_players(g.instance()).single() == Some(0));
    }
}

#[test]
fn rational_helpers_compose() {
    let r: Rational = ratio(6, 4);
    assert_eq!(r, ratio(3, 2));
}
