//! Game classes: subspace builders from the defining linear constraints, and
//! a classifier that checks each definition directly on a game.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::game::{Game, GameSpace};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;
use crate::subspace::{intersect, Subspace};

/// Permutation enumeration over players is factorial; beyond this it is refused.
pub const MAX_SYMMETRIC_PLAYERS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GameClass {
    ZeroSum,
    CommonInterest,
    Normalized,
    NonStrategic,
    Harmonic,
    Symmetric,
    Potential,
}

impl GameClass {
    pub const ALL: [GameClass; 7] = [
        GameClass::ZeroSum,
        GameClass::CommonInterest,
        GameClass::Normalized,
        GameClass::NonStrategic,
        GameClass::Harmonic,
        GameClass::Symmetric,
        GameClass::Potential,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GameClass::ZeroSum => "zero-sum",
            GameClass::CommonInterest => "common-interest",
            GameClass::Normalized => "normalized",
            GameClass::NonStrategic => "non-strategic",
            GameClass::Harmonic => "harmonic",
            GameClass::Symmetric => "symmetric",
            GameClass::Potential => "potential",
        }
    }

    /// The subspace of all games in this class.
    pub fn subspace(self, space: &GameSpace) -> Result<Subspace> {
        match self {
            GameClass::ZeroSum => zero_sum_space(space),
            GameClass::CommonInterest => common_interest_space(space),
            GameClass::Normalized => normalized_space(space),
            GameClass::NonStrategic => non_strategic_space(space),
            GameClass::Harmonic => harmonic_space(space),
            GameClass::Symmetric => symmetric_space(space),
            GameClass::Potential => potential_space(space),
        }
    }
}

impl fmt::Display for GameClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GameClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GameClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "game class",
                name: s.to_string(),
            })
    }
}

fn unit_row(dim: usize, ones: impl IntoIterator<Item = usize>) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); dim];
    for j in ones {
        row[j] = Rational::one();
    }
    row
}

/// `Σ_i V_i(s) = 0` for every profile `s`.
pub fn zero_sum_space(space: &GameSpace) -> Result<Subspace> {
    let rows: Vec<Vec<Rational>> = (0..space.k())
        .map(|s| unit_row(space.dim(), (0..space.n()).map(|i| space.coord(i, s))))
        .collect();
    Subspace::from_constraints(space, &RationalMatrix::from_rows(rows)?)
}

/// Spanned by `[e_s, e_s, ..., e_s]` over profiles `s`.
pub fn common_interest_space(space: &GameSpace) -> Result<Subspace> {
    let columns: Vec<Vec<Rational>> = (0..space.k())
        .map(|s| unit_row(space.dim(), (0..space.n()).map(|i| space.coord(i, s))))
        .collect();
    Subspace::from_spanning(space, &RationalMatrix::from_columns(space.dim(), &columns))
}

/// One indicator per (player, opponent profile): player `i`'s coordinates
/// over `(x_i, s_{-i})` for all `x_i`.
fn unilateral_indicators(space: &GameSpace) -> Vec<Vec<Rational>> {
    (0..space.n())
        .flat_map(|i| {
            space
                .unilateral_groups(i)
                .into_iter()
                .map(move |group| unit_row(space.dim(), group.into_iter().map(|o| space.coord(i, o))))
        })
        .collect()
}

/// `Σ_{x_i} V_i(x_i, s_{-i}) = 0` for every player and opponent profile.
pub fn normalized_space(space: &GameSpace) -> Result<Subspace> {
    Subspace::from_constraints(space, &RationalMatrix::from_rows(unilateral_indicators(space))?)
}

/// Each `V_i` constant along player `i`'s own strategy.
pub fn non_strategic_space(space: &GameSpace) -> Result<Subspace> {
    let columns = unilateral_indicators(space);
    Subspace::from_spanning(space, &RationalMatrix::from_columns(space.dim(), &columns))
}

/// Zero-sum and normalized.
pub fn harmonic_space(space: &GameSpace) -> Result<Subspace> {
    intersect(&zero_sum_space(space)?, &normalized_space(space)?)
}

/// All permutations of the players, `perm[i] = σ(i)` (0-based).
fn player_permutations(space: &GameSpace) -> Result<Vec<Vec<usize>>> {
    if !space.has_equal_strategies() {
        return Err(Error::UnsupportedSpace {
            space: space.to_string(),
            reason: "symmetric games need equal strategy counts".into(),
        });
    }
    if space.n() > MAX_SYMMETRIC_PLAYERS {
        return Err(Error::UnsupportedSpace {
            space: space.to_string(),
            reason: format!("symmetric games limited to {MAX_SYMMETRIC_PLAYERS} players"),
        });
    }
    let n = space.n();
    Ok((0..n).permutations(n).collect())
}

/// Image of coordinate `(a, t)` under the action of `σ`:
/// `(T_σ V)_i(s) = V_{σ(i)}(s_{σ⁻¹(1)}, ..., s_{σ⁻¹(n)})` maps `e_{(a,t)}`
/// to `e_{(σ⁻¹(a), t∘σ)}`.
fn permuted_coord(space: &GameSpace, perm: &[usize], coord: usize) -> usize {
    let k = space.k();
    let (a, t) = (coord / k, space.profile_at(coord % k));
    let i = perm.iter().position(|&p| p == a).expect("permutation");
    let s: Vec<usize> = perm.iter().map(|&p| t[p]).collect();
    space.coord(i, space.offset(&s))
}

/// Fixed subspace of the player-permutation action, as the image of the
/// Reynolds operator `(1/n!) Σ_σ T_σ` applied to each standard basis vector.
pub fn symmetric_space(space: &GameSpace) -> Result<Subspace> {
    let perms = player_permutations(space)?;
    let weight = Rational::new(1.into(), perms.len().into());
    let mut seen = HashSet::new();
    let mut columns = Vec::new();
    for j in 0..space.dim() {
        let mut avg = vec![Rational::zero(); space.dim()];
        for perm in &perms {
            avg[permuted_coord(space, perm, j)] += &weight;
        }
        if seen.insert(avg.clone()) {
            columns.push(avg);
        }
    }
    Subspace::from_spanning(space, &RationalMatrix::from_columns(space.dim(), &columns))
}

/// Rows of the system `V_i(x, s_{-i}) - V_i(1, s_{-i}) - P(x, s_{-i}) + P(1, s_{-i}) = 0`
/// in unknowns `(V, P)`, `dim + k` columns.
fn potential_system(space: &GameSpace) -> RationalMatrix {
    let dim = space.dim();
    let mut rows = Vec::new();
    for i in 0..space.n() {
        for group in space.unilateral_groups(i) {
            let base = group[0];
            for &o in &group[1..] {
                let mut row = vec![Rational::zero(); dim + space.k()];
                row[space.coord(i, o)] = Rational::one();
                row[space.coord(i, base)] = -Rational::one();
                row[dim + o] = -Rational::one();
                row[dim + base] = Rational::one();
                rows.push(row);
            }
        }
    }
    RationalMatrix::from_rows(rows).expect("rows share a length")
}

/// Every game admitting a potential function: the `V`-projection of the
/// solution space of the potential identity in unknowns `(V, P)`.
pub fn potential_space(space: &GameSpace) -> Result<Subspace> {
    let kernel = potential_system(space).null_space();
    let v_part = RationalMatrix::from_fn(space.dim(), kernel.cols(), |r, c| kernel[(r, c)].clone());
    Subspace::from_spanning(space, &v_part)
}

/// Outcome of [`classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub classes: BTreeSet<GameClass>,
    /// A potential function in profile order when the game is potential.
    pub potential: Option<Vec<Rational>>,
    /// Set when the symmetric check could not be performed.
    pub symmetric_skipped: Option<String>,
}

impl Classification {
    pub fn has(&self, class: GameClass) -> bool {
        self.classes.contains(&class)
    }
}

pub fn is_zero_sum(g: &Game) -> bool {
    let space = g.space();
    (0..space.k()).all(|s| {
        (0..space.n())
            .map(|i| g.at(i, s))
            .fold(Rational::zero(), |acc, x| acc + x)
            .is_zero()
    })
}

pub fn is_common_interest(g: &Game) -> bool {
    let space = g.space();
    (0..space.k()).all(|s| (1..space.n()).all(|i| g.at(i, s) == g.at(0, s)))
}

pub fn is_normalized(g: &Game) -> bool {
    let space = g.space();
    (0..space.n()).all(|i| {
        space.unilateral_groups(i).iter().all(|group| {
            group
                .iter()
                .fold(Rational::zero(), |acc, &o| acc + g.at(i, o))
                .is_zero()
        })
    })
}

pub fn is_non_strategic(g: &Game) -> bool {
    let space = g.space();
    (0..space.n()).all(|i| {
        space
            .unilateral_groups(i)
            .iter()
            .all(|group| group.iter().all(|&o| g.at(i, o) == g.at(i, group[0])))
    })
}

/// Checks `c_i(s) = c_{σ(i)}(s_{σ⁻¹(1)}, ..., s_{σ⁻¹(n)})` for every
/// permutation, player and profile.
pub fn is_symmetric(g: &Game) -> Result<bool> {
    let space = g.space();
    let perms = player_permutations(space)?;
    Ok(perms.iter().all(|perm| {
        let mut inverse = vec![0; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        space.profiles().all(|s| {
            let moved: Vec<usize> = inverse.iter().map(|&j| s[j]).collect();
            let o = space.offset(&s);
            let mo = space.offset(&moved);
            (0..space.n()).all(|i| g.at(i, o) == g.at(perm[i], mo))
        })
    }))
}

/// Solves `P(x, s_{-i}) - P(1, s_{-i}) = c_i(x, s_{-i}) - c_i(1, s_{-i})`
/// exactly for `P`; any solution is a valid potential.
pub fn potential_function(g: &Game) -> Option<Vec<Rational>> {
    let space = g.space();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..space.n() {
        for group in space.unilateral_groups(i) {
            let base = group[0];
            for &o in &group[1..] {
                let mut row = vec![Rational::zero(); space.k()];
                row[o] = Rational::one();
                row[base] = -Rational::one();
                rows.push(row);
                rhs.push(g.at(i, o) - g.at(i, base));
            }
        }
    }
    RationalMatrix::from_rows(rows)
        .expect("rows share a length")
        .solve(&rhs)
}

/// Applies every class definition directly to `g`.
pub fn classify(g: &Game) -> Classification {
    let mut classes = BTreeSet::new();
    let zero_sum = is_zero_sum(g);
    let normalized = is_normalized(g);
    for (class, holds) in [
        (GameClass::ZeroSum, zero_sum),
        (GameClass::CommonInterest, is_common_interest(g)),
        (GameClass::Normalized, normalized),
        (GameClass::NonStrategic, is_non_strategic(g)),
        (GameClass::Harmonic, zero_sum && normalized),
    ] {
        if holds {
            classes.insert(class);
        }
    }
    let symmetric_skipped = match is_symmetric(g) {
        Ok(true) => {
            classes.insert(GameClass::Symmetric);
            None
        }
        Ok(false) => None,
        Err(e) => Some(e.to_string()),
    };
    let potential = potential_function(g);
    if potential.is_some() {
        classes.insert(GameClass::Potential);
    }
    Classification {
        classes,
        potential,
        symmetric_skipped,
    }
}
