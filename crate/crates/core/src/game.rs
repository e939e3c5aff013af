//! Finite normal-form games as payoff vectors.
//!
//! A game in `G[n; k_1, ..., k_n]` is stored as its payoff vector
//! `V_G = [V_1, ..., V_n]`: `n` contiguous blocks of length `k = Π k_i`,
//! block `i` holding player `i`'s payoff at every profile. Profiles are
//! ordered lexicographically with player 1 most significant, which is the
//! order induced by `δ_{k_1}^{s_1} ⋉ ... ⋉ δ_{k_n}^{s_n}`.
//!
//! Players, strategies and profile indices are 1-based at this API.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::{format_rational, Rational};

/// The ambient space `G[n; k_1, ..., k_n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GameSpace {
    ks: Vec<usize>,
    k: usize,
}

impl GameSpace {
    pub fn new(ks: Vec<usize>) -> Result<Self> {
        if ks.is_empty() {
            return Err(Error::InvalidSpace("at least one player is required".into()));
        }
        if let Some(i) = ks.iter().position(|&ki| ki < 2) {
            return Err(Error::InvalidSpace(format!(
                "player {} has {} strategies; at least 2 are required",
                i + 1,
                ks[i]
            )));
        }
        let k = ks
            .iter()
            .try_fold(1usize, |acc, &ki| acc.checked_mul(ki))
            .filter(|k| k.checked_mul(ks.len()).is_some())
            .ok_or_else(|| Error::InvalidSpace("space is too large".into()))?;
        Ok(Self { ks, k })
    }

    /// Number of players.
    pub fn n(&self) -> usize {
        self.ks.len()
    }

    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    /// Strategy count of `player` (1-based).
    pub fn strategies(&self, player: usize) -> usize {
        self.ks[player - 1]
    }

    /// Number of strategy profiles, `Π k_i`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Dimension of the payoff space, `n·k`.
    pub fn dim(&self) -> usize {
        self.n() * self.k
    }

    pub fn has_equal_strategies(&self) -> bool {
        self.ks.windows(2).all(|w| w[0] == w[1])
    }

    /// 0-based offset of a 0-based profile.
    pub(crate) fn offset(&self, profile: &[usize]) -> usize {
        profile
            .iter()
            .zip(&self.ks)
            .fold(0, |acc, (&s, &ki)| acc * ki + s)
    }

    /// 0-based profile at a 0-based offset.
    pub(crate) fn profile_at(&self, mut offset: usize) -> Vec<usize> {
        let mut p = vec![0; self.n()];
        for (slot, &ki) in p.iter_mut().zip(&self.ks).rev() {
            *slot = offset % ki;
            offset /= ki;
        }
        p
    }

    /// All 0-based profiles in index order.
    pub(crate) fn profiles(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.k).map(|o| self.profile_at(o))
    }

    /// Position of player `i` (0-based) at profile offset `o` in the payoff vector.
    pub(crate) fn coord(&self, i: usize, offset: usize) -> usize {
        i * self.k + offset
    }

    /// Groups of profile offsets that differ only in player `i`'s strategy
    /// (0-based `i`); each group is ordered by that player's strategy. One
    /// group per opponent profile `s_{-i}`.
    pub(crate) fn unilateral_groups(&self, i: usize) -> Vec<Vec<usize>> {
        self.profiles()
            .filter(|p| p[i] == 0)
            .map(|mut p| {
                (0..self.ks[i])
                    .map(|x| {
                        p[i] = x;
                        self.offset(&p)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn check_same(&self, other: &GameSpace) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SpaceMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for GameSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.ks.iter().map(usize::to_string).collect();
        write!(f, "[{};{}]", self.n(), ks.join(","))
    }
}

impl fmt::Debug for GameSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GameSpace{self}")
    }
}

/// One strategy per player, each in `1..=k_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrategyProfile(Vec<usize>);

impl StrategyProfile {
    pub fn new(space: &GameSpace, strategies: Vec<usize>) -> Result<Self> {
        if strategies.len() != space.n() {
            return Err(Error::InvalidProfile(format!(
                "expected {} strategies, got {}",
                space.n(),
                strategies.len()
            )));
        }
        for (i, (&s, &ki)) in strategies.iter().zip(space.ks()).enumerate() {
            if !(1..=ki).contains(&s) {
                return Err(Error::InvalidProfile(format!(
                    "player {} strategy {s} outside 1..={ki}",
                    i + 1
                )));
            }
        }
        Ok(Self(strategies))
    }

    pub fn strategies(&self) -> &[usize] {
        &self.0
    }

    fn zero_based(&self) -> Vec<usize> {
        self.0.iter().map(|s| s - 1).collect()
    }
}

/// 1-based index of a profile in the canonical order.
pub fn profile_to_index(space: &GameSpace, p: &StrategyProfile) -> Result<usize> {
    let checked = StrategyProfile::new(space, p.0.clone())?;
    Ok(space.offset(&checked.zero_based()) + 1)
}

pub fn index_to_profile(space: &GameSpace, idx: usize) -> Result<StrategyProfile> {
    if !(1..=space.k()).contains(&idx) {
        return Err(Error::IndexOutOfRange {
            index: idx,
            max: space.k(),
        });
    }
    Ok(StrategyProfile(
        space.profile_at(idx - 1).into_iter().map(|s| s + 1).collect(),
    ))
}

/// δ-vector `δ_{k_1}^{s_1} ⋉ ... ⋉ δ_{k_n}^{s_n}` of a profile, as a `k × 1` column.
pub fn profile_vector(space: &GameSpace, p: &StrategyProfile) -> Result<RationalMatrix> {
    let checked = StrategyProfile::new(space, p.0.clone())?;
    Ok(checked
        .0
        .iter()
        .zip(space.ks())
        .map(|(&s, &ki)| crate::matrix::delta(ki, s))
        .reduce(|acc, d| acc.stp(&d))
        .expect("space has at least one player"))
}

/// A game as its payoff vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Game {
    space: GameSpace,
    v: Vec<Rational>,
}

impl Game {
    pub fn new(space: GameSpace, v: Vec<Rational>) -> Result<Self> {
        if v.len() != space.dim() {
            return Err(Error::Shape(format!(
                "payoff vector for {space} needs {} entries, got {}",
                space.dim(),
                v.len()
            )));
        }
        Ok(Self { space, v })
    }

    pub fn zero(space: &GameSpace) -> Self {
        Self {
            v: vec![Rational::zero(); space.dim()],
            space: space.clone(),
        }
    }

    /// Builds a game from `n` rows of `k` payoffs, row `i` ordered by profile index.
    pub fn from_table(space: &GameSpace, rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.len() != space.n() {
            return Err(Error::Shape(format!(
                "expected {} payoff rows, got {}",
                space.n(),
                rows.len()
            )));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != space.k()) {
            return Err(Error::Shape(format!(
                "payoff row {} has {} entries, expected {}",
                i + 1,
                rows[i].len(),
                space.k()
            )));
        }
        Self::new(space.clone(), rows.into_iter().flatten().collect())
    }

    pub fn to_table(&self) -> Vec<Vec<Rational>> {
        self.v.chunks(self.space.k()).map(<[_]>::to_vec).collect()
    }

    pub fn space(&self) -> &GameSpace {
        &self.space
    }

    pub fn payoff_vector(&self) -> &[Rational] {
        &self.v
    }

    pub fn into_payoff_vector(self) -> Vec<Rational> {
        self.v
    }

    /// Structure vector `V_i` of `player` (1-based).
    pub fn block(&self, player: usize) -> &[Rational] {
        let k = self.space.k();
        &self.v[(player - 1) * k..player * k]
    }

    /// `c_player(p)`.
    pub fn payoff(&self, player: usize, p: &StrategyProfile) -> Result<Rational> {
        if !(1..=self.space.n()).contains(&player) {
            return Err(Error::IndexOutOfRange {
                index: player,
                max: self.space.n(),
            });
        }
        let idx = profile_to_index(&self.space, p)?;
        Ok(self.v[(player - 1) * self.space.k() + idx - 1].clone())
    }

    /// Payoff with 0-based player and profile offset.
    pub(crate) fn at(&self, i: usize, offset: usize) -> &Rational {
        &self.v[self.space.coord(i, offset)]
    }

    pub fn is_zero(&self) -> bool {
        self.v.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Game) -> Result<Game> {
        self.space.check_same(&other.space)?;
        Ok(Game {
            space: self.space.clone(),
            v: self.v.iter().zip(&other.v).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Game) -> Result<Game> {
        self.space.check_same(&other.space)?;
        Ok(Game {
            space: self.space.clone(),
            v: self.v.iter().zip(&other.v).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, factor: &Rational) -> Game {
        Game {
            space: self.space.clone(),
            v: self.v.iter().map(|x| x * factor).collect(),
        }
    }
}

impl fmt::Display for Game {
    /// `V_G = [v1,v2,...]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.v.iter().map(format_rational).collect();
        write!(f, "[{}]", entries.join(","))
    }
}

impl fmt::Debug for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Game{} {}", self.space, self)
    }
}

/// Matching pennies in `G[2;2,2]`: `V_1 = [1,-1,-1,1]`, `V_2 = -V_1`.
pub fn matching_pennies() -> Game {
    let space = GameSpace::new(vec![2, 2]).expect("valid space");
    Game::new(space, crate::rational::ints(&[1, -1, -1, 1, -1, 1, 1, -1])).expect("valid game")
}
