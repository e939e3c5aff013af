//! Test-only oracles, written independently of the library's elimination
//! and subspace code.

#![allow(dead_code)]

use gamedecomp::rational::{int, Rational};
use gamedecomp::{Game, GameSpace};
use num_traits::Zero;

pub fn space(ks: &[usize]) -> GameSpace {
    GameSpace::new(ks.to_vec()).unwrap()
}

pub fn acceptance_spaces() -> Vec<GameSpace> {
    vec![space(&[2, 2]), space(&[2, 3]), space(&[2, 2, 2])]
}

/// Rank by plain row reduction with partial search for any nonzero pivot.
pub fn oracle_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in (0..cols).rev() {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in rank + 1..m.len() {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pivot;
            for j in 0..cols {
                let d = &f * &m[rank][j];
                m[r][j] -= d;
            }
        }
        rank += 1;
    }
    rank
}

/// Odometer enumeration of 0-based profiles, last player fastest.
pub fn profiles(ks: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &k in ks {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..k).map(move |s| {
                    let mut q = p.clone();
                    q.push(s);
                    q
                })
            })
            .collect();
    }
    out
}

/// Kronecker product of column vectors, by definition.
pub fn kron_cols(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}

pub fn delta_col(n: usize, i: usize) -> Vec<Rational> {
    (1..=n).map(|j| if j == i { int(1) } else { int(0) }).collect()
}

/// Position of the single 1 in `δ_{k1}^{s1} ⊗ ... ⊗ δ_{kn}^{sn}` (1-based).
pub fn kron_index(ks: &[usize], s: &[usize]) -> usize {
    let v = ks
        .iter()
        .zip(s)
        .map(|(&k, &si)| delta_col(k, si))
        .reduce(|a, b| kron_cols(&a, &b))
        .unwrap();
    v.iter().position(|x| !x.is_zero()).unwrap() + 1
}

/// Payoff of 0-based player `i` at 0-based profile `p`.
pub fn pay(g: &Game, i: usize, p: &[usize]) -> Rational {
    let ks = g.space().ks();
    let one_based: Vec<usize> = p.iter().map(|s| s + 1).collect();
    let idx = kron_index(ks, &one_based);
    g.payoff_vector()[i * g.space().k() + idx - 1].clone()
}

/// Monderer–Shapley four-cycle test: for every pair of players and every
/// pair of strategy switches, the sum of the movers' payoff changes around
/// the rectangle vanishes.
pub fn four_cycle_potential(g: &Game) -> bool {
    let ks = g.space().ks().to_vec();
    let n = ks.len();
    for p in profiles(&ks) {
        for i in 0..n {
            for j in i + 1..n {
                for a2 in 0..ks[i] {
                    for b2 in 0..ks[j] {
                        let (a1, b1) = (p[i], p[j]);
                        let at = |a: usize, b: usize| {
                            let mut q = p.clone();
                            q[i] = a;
                            q[j] = b;
                            q
                        };
                        let s = (pay(g, i, &at(a2, b1)) - pay(g, i, &at(a1, b1)))
                            + (pay(g, j, &at(a2, b2)) - pay(g, j, &at(a2, b1)))
                            + (pay(g, i, &at(a1, b2)) - pay(g, i, &at(a2, b2)))
                            + (pay(g, j, &at(a1, b1)) - pay(g, j, &at(a1, b2)));
                        if !s.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Checks `c_i(x, s_-i) - c_i(y, s_-i) = P(x, s_-i) - P(y, s_-i)` for all
/// players, all pairs `x, y` and all opponent profiles.
pub fn potential_identity_holds(g: &Game, potential: &[Rational]) -> bool {
    let ks = g.space().ks().to_vec();
    let pot = |p: &[usize]| {
        let one_based: Vec<usize> = p.iter().map(|s| s + 1).collect();
        potential[kron_index(&ks, &one_based) - 1].clone()
    };
    for p in profiles(&ks) {
        for i in 0..ks.len() {
            for y in 0..ks[i] {
                let mut q = p.clone();
                q[i] = y;
                if pay(g, i, &p) - pay(g, i, &q) != pot(&p) - pot(&q) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
