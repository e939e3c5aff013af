mod common;

use common::{acceptance_spaces, oracle_rank, potential_identity_holds, space};
use gamedecomp::classes::{
    common_interest_space, harmonic_space, is_common_interest, is_non_strategic, is_normalized,
    is_symmetric, is_zero_sum, non_strategic_space, normalized_space, potential_space,
    symmetric_space, zero_sum_space,
};
use gamedecomp::game::matching_pennies;
use gamedecomp::random::{random_game, random_member, rng_from_seed};
use gamedecomp::rational::{int, Rational};
use gamedecomp::{
    candogan_ip, classify, intersect, orth_complement, standard_ip, subspace_sum, Game, GameClass,
    GameSpace, InnerProduct, RationalMatrix, Subspace,
};
use num_traits::Zero;

fn columns_rank(s: &Subspace) -> usize {
    oracle_rank(&s.basis().transpose().to_rows())
}

/// Constraint rows for zero-sum, normalized; built here from the definitions.
fn zero_sum_rows(s: &GameSpace) -> Vec<Vec<Rational>> {
    (0..s.k())
        .map(|p| {
            (0..s.dim())
                .map(|j| if j % s.k() == p { int(1) } else { int(0) })
                .collect()
        })
        .collect()
}

fn normalized_rows(s: &GameSpace) -> Vec<Vec<Rational>> {
    let ks = s.ks().to_vec();
    let profiles = common::profiles(&ks);
    let mut rows = Vec::new();
    for i in 0..ks.len() {
        for p in profiles.iter().filter(|p| p[i] == 0) {
            let mut row = vec![int(0); s.dim()];
            for x in 0..ks[i] {
                let mut q = p.clone();
                q[i] = x;
                let one: Vec<usize> = q.iter().map(|v| v + 1).collect();
                row[i * s.k() + common::kron_index(&ks, &one) - 1] = int(1);
            }
            rows.push(row);
        }
    }
    rows
}

#[test]
fn dimension_identities() {
    for s in acceptance_spaces().into_iter().chain([space(&[3, 2]), space(&[2, 2, 3])]) {
        let (n, k) = (s.n(), s.k());
        let z = zero_sum_space(&s).unwrap();
        let c = common_interest_space(&s).unwrap();
        let l = normalized_space(&s).unwrap();
        let e = non_strategic_space(&s).unwrap();
        let l_formula: usize = s.ks().iter().map(|ki| (ki - 1) * k / ki).sum();
        let e_formula: usize = s.ks().iter().map(|ki| k / ki).sum();

        assert_eq!(z.dimension(), (n - 1) * k, "{s}");
        assert_eq!(z.dimension(), s.dim() - oracle_rank(&zero_sum_rows(&s)));
        assert_eq!(c.dimension(), k);
        assert_eq!(l.dimension(), l_formula);
        assert_eq!(l.dimension(), s.dim() - oracle_rank(&normalized_rows(&s)));
        assert_eq!(e.dimension(), e_formula);
        assert_eq!(z.dimension() + c.dimension(), s.dim());
        assert_eq!(l.dimension() + e.dimension(), s.dim());
        for sub in [&z, &c, &l, &e] {
            assert_eq!(columns_rank(sub), sub.dimension());
        }

        // harmonic = Z ∩ L; its dimension via stacked constraints.
        let stacked: Vec<_> = zero_sum_rows(&s).into_iter().chain(normalized_rows(&s)).collect();
        let h = harmonic_space(&s).unwrap();
        assert_eq!(h.dimension(), s.dim() - oracle_rank(&stacked));
        let zl = subspace_sum(&z, &l).unwrap();
        assert_eq!(h.dimension(), z.dimension() + l.dimension() - zl.dimension());
    }
}

#[test]
fn two_by_two_special_dimensions() {
    let s = space(&[2, 2]);
    let h = harmonic_space(&s).unwrap();
    assert_eq!(h.dimension(), 1);
    assert!(h.is_member(&matching_pennies()).unwrap());
    assert_eq!(potential_space(&s).unwrap().dimension(), 7);
    assert_eq!(intersect(&zero_sum_space(&s).unwrap(), &normalized_space(&s).unwrap()).unwrap().dimension(), 1);
    assert_eq!(
        subspace_sum(&zero_sum_space(&s).unwrap(), &common_interest_space(&s).unwrap())
            .unwrap()
            .dimension(),
        8
    );
    // Z+E on [2;2,2]: rank of the concatenated bases.
    let z = zero_sum_space(&s).unwrap();
    let e = non_strategic_space(&s).unwrap();
    let cat = RationalMatrix::hstack(&[z.basis(), e.basis()]);
    assert_eq!(subspace_sum(&z, &e).unwrap().dimension(), oracle_rank(&cat.transpose().to_rows()));
}

#[test]
fn zero_sum_meets_common_interest_trivially() {
    for s in acceptance_spaces() {
        let zc = intersect(&zero_sum_space(&s).unwrap(), &common_interest_space(&s).unwrap()).unwrap();
        assert_eq!(zc.dimension(), 0);
    }
}

#[test]
fn example_game_is_not_zero_sum() {
    let g = gamedecomp::json::game_from_str(
        r#"{"players":3,"strategies":[2,2,2],"payoffs":[
            [26,9,12,4,14,6,14,6],[-5,-5,2,2,2,2,4,4],[18,10,4,5,7,8,7,8]]}"#,
    )
    .unwrap();
    assert_eq!(int(26) + int(-5) + int(18), int(39));
    assert!(!zero_sum_space(g.space()).unwrap().is_member(&g).unwrap());
}

/// Symmetric oracle for two players: `V_1(a, b) = V_2(b, a)`.
fn two_player_symmetric(g: &Game) -> bool {
    let ks = g.space().ks();
    (0..ks[0]).all(|a| (0..ks[1]).all(|b| common::pay(g, 0, &[a, b]) == common::pay(g, 1, &[b, a])))
}

#[test]
fn symmetric_space_two_by_two() {
    let s = space(&[2, 2]);
    let sym = symmetric_space(&s).unwrap();
    // V_2 is determined by V_1.
    assert_eq!(sym.dimension(), 4);
    for b in sym.basis_games() {
        assert!(two_player_symmetric(&b));
    }
    assert!(!two_player_symmetric(&matching_pennies()));
    assert!(!sym.is_member(&matching_pennies()).unwrap());
}

#[test]
fn membership_agrees_with_definitions() {
    type Predicate = fn(&Game) -> bool;
    let cases: [(GameClass, Predicate); 5] = [
        (GameClass::ZeroSum, is_zero_sum),
        (GameClass::CommonInterest, is_common_interest),
        (GameClass::Normalized, is_normalized),
        (GameClass::NonStrategic, is_non_strategic),
        (GameClass::Harmonic, |g| is_zero_sum(g) && is_normalized(g)),
    ];
    for s in acceptance_spaces() {
        let mut rng = rng_from_seed(11);
        let mut subs: Vec<(GameClass, Subspace, Box<dyn Fn(&Game) -> bool>)> = cases
            .iter()
            .map(|&(c, p)| (c, c.subspace(&s).unwrap(), Box::new(p) as Box<dyn Fn(&Game) -> bool>))
            .collect();
        if s.has_equal_strategies() {
            subs.push((
                GameClass::Symmetric,
                symmetric_space(&s).unwrap(),
                Box::new(|g: &Game| is_symmetric(g).unwrap()),
            ));
        }
        subs.push((
            GameClass::Potential,
            potential_space(&s).unwrap(),
            Box::new(common::four_cycle_potential),
        ));
        for (class, sub, pred) in &subs {
            let mut hits = 0;
            for t in 0..500 {
                let g = match t % 3 {
                    0 => random_game(&s, &mut rng),
                    1 => random_member(sub, &mut rng),
                    // a member nudged off the subspace in one coordinate
                    _ => {
                        let m = random_member(sub, &mut rng);
                        let mut v = m.into_payoff_vector();
                        v[t % s.dim()] += int(1);
                        Game::new(s.clone(), v).unwrap()
                    }
                };
                let member = sub.is_member(&g).unwrap();
                assert_eq!(member, pred(&g), "{class} on {s}");
                hits += member as usize;
            }
            assert!(hits >= 150, "{class} on {s}: too few members sampled");
        }
    }
}

#[test]
fn grassmann_identity() {
    let mut rng = rng_from_seed(5);
    for s in acceptance_spaces() {
        let mut pool: Vec<Subspace> = [
            GameClass::ZeroSum,
            GameClass::CommonInterest,
            GameClass::Normalized,
            GameClass::NonStrategic,
            GameClass::Harmonic,
            GameClass::Potential,
        ]
        .iter()
        .map(|c| c.subspace(&s).unwrap())
        .collect();
        // random low-rank spans
        for d in [1, 3, s.dim() / 2] {
            let cols: Vec<Vec<Rational>> =
                (0..d).map(|_| random_game(&s, &mut rng).into_payoff_vector()).collect();
            pool.push(Subspace::from_spanning(&s, &RationalMatrix::from_columns(s.dim(), &cols)).unwrap());
        }
        for a in &pool {
            for b in &pool {
                let sum = subspace_sum(a, b).unwrap();
                let cap = intersect(a, b).unwrap();
                assert_eq!(sum.dimension() + cap.dimension(), a.dimension() + b.dimension());
                assert!(a.contains(&cap).unwrap() && b.contains(&cap).unwrap());
                assert!(sum.contains(a).unwrap() && sum.contains(b).unwrap());
            }
        }
    }
}

#[test]
fn complements() {
    let s = space(&[2, 2]);
    let std = standard_ip(&s);
    let c = common_interest_space(&s).unwrap();
    let z = zero_sum_space(&s).unwrap();
    let cc = orth_complement(&c, &std).unwrap();
    assert!(cc.contains(&z).unwrap() && z.contains(&cc).unwrap());

    let q = RationalMatrix::from_fn(s.dim(), s.dim(), |r, c| {
        if r == c {
            int(3)
        } else if r.abs_diff(c) == 1 {
            int(1)
        } else {
            int(0)
        }
    });
    let custom = InnerProduct::custom(&s, q, "tridiag").unwrap();
    for s in acceptance_spaces() {
        let ips = [standard_ip(&s), candogan_ip(&s)];
        for ip in &ips {
            for class in [GameClass::ZeroSum, GameClass::Normalized, GameClass::Harmonic, GameClass::Potential] {
                let a = class.subspace(&s).unwrap();
                let perp = orth_complement(&a, ip).unwrap();
                assert_eq!(perp.dimension(), s.dim() - a.dimension());
                let gram = a.basis().transpose().mul(ip.matrix()).mul(perp.basis());
                assert!(gram.is_zero());
                assert!(orth_complement(&perp, ip).unwrap().same_span(&a).unwrap());
            }
        }
    }
    let perp = orth_complement(&c, &custom).unwrap();
    assert!(orth_complement(&perp, &custom).unwrap().same_span(&c).unwrap());
}

#[test]
fn potential_contains_common_interest_and_non_strategic() {
    for s in acceptance_spaces() {
        let pot = potential_space(&s).unwrap();
        for sub in [common_interest_space(&s).unwrap(), non_strategic_space(&s).unwrap()] {
            for col in sub.basis().columns() {
                assert!(pot.contains_vector(&col));
            }
        }
    }
}

#[test]
fn potential_witness_is_exhaustively_valid() {
    let mut rng = rng_from_seed(99);
    for s in acceptance_spaces() {
        let pot = potential_space(&s).unwrap();
        for t in 0..60 {
            let g = if t % 2 == 0 { random_member(&pot, &mut rng) } else { random_game(&s, &mut rng) };
            let c = classify(&g);
            assert_eq!(c.has(GameClass::Potential), common::four_cycle_potential(&g));
            if let Some(p) = &c.potential {
                assert!(potential_identity_holds(&g, p));
            }
        }
    }
}

#[test]
fn classify_zero_game() {
    for s in acceptance_spaces() {
        let c = classify(&Game::zero(&s));
        for class in GameClass::ALL {
            if class == GameClass::Symmetric && !s.has_equal_strategies() {
                assert!(c.symmetric_skipped.is_some());
                continue;
            }
            assert!(c.has(class), "{class} on {s}");
        }
        assert!(c.potential.unwrap().iter().all(Zero::is_zero));
    }
}
