//! Linear subspaces of a payoff space with exact bases.

use crate::error::{Error, Result};
use crate::game::{Game, GameSpace};
use crate::inner::InnerProduct;
use crate::matrix::RationalMatrix;
use crate::rational::{is_zero_vec, make_primitive, Rational};

/// A subspace held as a `dim × d` basis with independent columns, together
/// with an annihilator: a constraint matrix whose null space is the span.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    space: GameSpace,
    basis: RationalMatrix,
    constraints: RationalMatrix,
}

impl Subspace {
    /// Span of the columns of `spanning` (any rank; dependent columns dropped).
    pub fn from_spanning(space: &GameSpace, spanning: &RationalMatrix) -> Result<Self> {
        if spanning.rows() != space.dim() {
            return Err(Error::Shape(format!(
                "spanning set has {} rows, {space} has dimension {}",
                spanning.rows(),
                space.dim()
            )));
        }
        let columns: Vec<Vec<Rational>> = spanning
            .independent_columns()
            .into_iter()
            .map(|c| {
                let mut v = spanning.column(c);
                make_primitive(&mut v);
                v
            })
            .collect();
        let basis = RationalMatrix::from_columns(space.dim(), &columns);
        Ok(Self::from_independent(space, basis))
    }

    /// Null space of `constraints` (`m × dim`).
    pub fn from_constraints(space: &GameSpace, constraints: &RationalMatrix) -> Result<Self> {
        if constraints.cols() != space.dim() {
            return Err(Error::Shape(format!(
                "constraint matrix has {} columns, {space} has dimension {}",
                constraints.cols(),
                space.dim()
            )));
        }
        Ok(Self::from_independent(space, constraints.null_space()))
    }

    fn from_independent(space: &GameSpace, basis: RationalMatrix) -> Self {
        let constraints = basis.transpose().null_space().transpose();
        Self {
            space: space.clone(),
            basis,
            constraints,
        }
    }

    pub fn zero(space: &GameSpace) -> Self {
        Self::from_independent(space, RationalMatrix::zeros(space.dim(), 0))
    }

    pub fn full(space: &GameSpace) -> Self {
        Self::from_independent(space, RationalMatrix::identity(space.dim()))
    }

    pub fn space(&self) -> &GameSpace {
        &self.space
    }

    /// `dim × d` matrix of basis columns.
    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    /// Rows spanning the standard-orthogonal complement; `v` is a member iff
    /// every row annihilates it.
    pub fn constraints(&self) -> &RationalMatrix {
        &self.constraints
    }

    pub fn dimension(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis_games(&self) -> Vec<Game> {
        self.basis
            .columns()
            .into_iter()
            .map(|c| Game::new(self.space.clone(), c).expect("basis column has ambient length"))
            .collect()
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        v.len() == self.space.dim() && is_zero_vec(&self.constraints.mul_vec(v))
    }

    pub fn is_member(&self, g: &Game) -> Result<bool> {
        self.space.check_same(g.space())?;
        Ok(self.contains_vector(g.payoff_vector()))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.space.check_same(&other.space)?;
        Ok(self.constraints.mul(&other.basis).is_zero())
    }

    pub fn same_span(&self, other: &Subspace) -> Result<bool> {
        Ok(self.dimension() == other.dimension() && self.contains(other)?)
    }

    /// Linear combination of the basis columns.
    pub fn combine(&self, coefficients: &[Rational]) -> Game {
        Game::new(self.space.clone(), self.basis.mul_vec(coefficients))
            .expect("basis has ambient row count")
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {})", self.dimension(), self.space)
    }
}

/// `a ∩ b` from the null space of `[B_a | -B_b]`: each null vector
/// `(c_a, c_b)` gives the common element `B_a c_a = B_b c_b`.
pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.space.check_same(&b.space)?;
    let neg_b = b.basis.scale(&-Rational::from_integer(1.into()));
    let stacked = RationalMatrix::hstack(&[&a.basis, &neg_b]);
    let kernel = stacked.null_space();
    let da = a.dimension();
    let coeffs = RationalMatrix::from_fn(da, kernel.cols(), |r, c| kernel[(r, c)].clone());
    Subspace::from_spanning(&a.space, &a.basis.mul(&coeffs))
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.space.check_same(&b.space)?;
    Subspace::from_spanning(&a.space, &RationalMatrix::hstack(&[&a.basis, &b.basis]))
}

/// `{x : ⟨b, x⟩_Q = 0 for every b ∈ a}`, the null space of `BᵀQ`.
pub fn orth_complement(a: &Subspace, ip: &InnerProduct) -> Result<Subspace> {
    a.space.check_same(ip.space())?;
    let bq = a.basis.transpose().mul(ip.matrix());
    Subspace::from_constraints(&a.space, &bq)
}
