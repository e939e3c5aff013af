//! Inner products `⟨x, y⟩_Q = xᵀ Q y` on a payoff space and the orthogonal
//! projections they induce.

use crate::error::{Error, Result};
use crate::game::{Game, GameSpace};
use crate::matrix::RationalMatrix;
use crate::rational::{dot, Rational};
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightKind {
    Standard,
    /// `Q = diag(k_1 (k times), ..., k_n (k times))`.
    Candogan,
    Custom(String),
}

/// A symmetric positive-definite weight on a payoff space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerProduct {
    space: GameSpace,
    kind: WeightKind,
    q: RationalMatrix,
    q_inv: RationalMatrix,
}

impl InnerProduct {
    pub fn standard(space: &GameSpace) -> Self {
        let id = RationalMatrix::identity(space.dim());
        Self {
            space: space.clone(),
            kind: WeightKind::Standard,
            q: id.clone(),
            q_inv: id,
        }
    }

    pub fn candogan(space: &GameSpace) -> Self {
        let diag: Vec<Rational> = space
            .ks()
            .iter()
            .flat_map(|&ki| std::iter::repeat_n(Rational::from_integer(ki.into()), space.k()))
            .collect();
        let inv: Vec<Rational> = diag.iter().map(Rational::recip).collect();
        Self {
            space: space.clone(),
            kind: WeightKind::Candogan,
            q: RationalMatrix::diagonal(&diag),
            q_inv: RationalMatrix::diagonal(&inv),
        }
    }

    /// Validates `q` as symmetric positive definite via exact LDLᵀ.
    pub fn custom(space: &GameSpace, q: RationalMatrix, label: impl Into<String>) -> Result<Self> {
        if q.rows() != space.dim() || q.cols() != space.dim() {
            return Err(Error::Shape(format!(
                "weight matrix is {}x{}, {space} needs {}x{}",
                q.rows(),
                q.cols(),
                space.dim(),
                space.dim()
            )));
        }
        if !q.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if let Some(p) = q.first_nonpositive_pivot() {
            return Err(Error::NotPositiveDefinite { pivot: p + 1 });
        }
        let q_inv = q
            .inverse()
            .ok_or_else(|| Error::Construction("positive definite matrix not invertible".into()))?;
        Ok(Self {
            space: space.clone(),
            kind: WeightKind::Custom(label.into()),
            q,
            q_inv,
        })
    }

    pub fn space(&self) -> &GameSpace {
        &self.space
    }

    pub fn kind(&self) -> &WeightKind {
        &self.kind
    }

    pub fn name(&self) -> String {
        match &self.kind {
            WeightKind::Standard => "standard".into(),
            WeightKind::Candogan => "candogan".into(),
            WeightKind::Custom(label) => label.clone(),
        }
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.q
    }

    pub fn inverse_matrix(&self) -> &RationalMatrix {
        &self.q_inv
    }

    pub fn is_scalar(&self) -> bool {
        self.q.is_diagonal() && (1..self.q.rows()).all(|i| self.q[(i, i)] == self.q[(0, 0)])
    }

    pub(crate) fn form(&self, x: &[Rational], y: &[Rational]) -> Rational {
        dot(x, &self.q.mul_vec(y))
    }

    /// `Aᵀ Q B`.
    pub(crate) fn gram(&self, a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
        a.transpose().mul(&self.q).mul(b)
    }
}

pub fn standard_ip(space: &GameSpace) -> InnerProduct {
    InnerProduct::standard(space)
}

pub fn candogan_ip(space: &GameSpace) -> InnerProduct {
    InnerProduct::candogan(space)
}

pub fn inner(ip: &InnerProduct, x: &Game, y: &Game) -> Result<Rational> {
    ip.space.check_same(x.space())?;
    ip.space.check_same(y.space())?;
    Ok(ip.form(x.payoff_vector(), y.payoff_vector()))
}

/// The `ip`-orthogonal projector `B (BᵀQB)⁻¹ BᵀQ` onto a subspace.
#[derive(Debug, Clone)]
pub struct Projector {
    space: GameSpace,
    matrix: RationalMatrix,
}

impl Projector {
    pub fn new(ip: &InnerProduct, s: &Subspace) -> Result<Self> {
        ip.space.check_same(s.space())?;
        let b = s.basis();
        if b.cols() == 0 {
            return Ok(Self {
                space: s.space().clone(),
                matrix: RationalMatrix::zeros(b.rows(), b.rows()),
            });
        }
        let gram_inv = ip.gram(b, b).inverse().ok_or_else(|| {
            Error::Construction("singular Gram matrix for an independent basis".into())
        })?;
        let matrix = b.mul(&gram_inv).mul(&b.transpose()).mul(&ip.q);
        Ok(Self {
            space: s.space().clone(),
            matrix,
        })
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn apply(&self, g: &Game) -> Result<Game> {
        self.space.check_same(g.space())?;
        Game::new(self.space.clone(), self.matrix.mul_vec(g.payoff_vector()))
    }
}

pub fn project(ip: &InnerProduct, s: &Subspace, g: &Game) -> Result<Game> {
    Projector::new(ip, s)?.apply(g)
}
