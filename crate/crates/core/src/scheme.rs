//! Direct-sum decompositions of the payoff space and the engine that splits
//! a game along them.

use std::fmt;
use std::str::FromStr;

use crate::classes::{
    common_interest_space, harmonic_space, non_strategic_space, normalized_space,
    potential_space, symmetric_space, zero_sum_space,
};
use crate::error::{Error, Result};
use crate::game::{Game, GameSpace};
use crate::inner::{InnerProduct, Projector};
use crate::matrix::RationalMatrix;
use crate::subspace::{intersect, orth_complement, subspace_sum, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeKind {
    /// `P ⊕ N ⊕ H`.
    Potential,
    /// `Z ⊕ C`.
    ZeroSum,
    /// `L ⊕ E`.
    Normalization,
    /// `(L∩C) ⊕ B ⊕ (L∩Z)` with `B = (Z+E) ∩ (C+E)`.
    Zsep,
    /// `S ⊕ K`, `K` the complement of the symmetric games.
    Symmetry,
}

impl SchemeKind {
    pub const ALL: [SchemeKind; 5] = [
        SchemeKind::Potential,
        SchemeKind::ZeroSum,
        SchemeKind::Normalization,
        SchemeKind::Zsep,
        SchemeKind::Symmetry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SchemeKind::Potential => "potential",
            SchemeKind::ZeroSum => "zero-sum",
            SchemeKind::Normalization => "normalization",
            SchemeKind::Zsep => "zsep",
            SchemeKind::Symmetry => "symmetry",
        }
    }

    pub fn part_labels(self) -> &'static [&'static str] {
        match self {
            SchemeKind::Potential => &["P", "N", "H"],
            SchemeKind::ZeroSum => &["Z", "C"],
            SchemeKind::Normalization => &["L", "E"],
            SchemeKind::Zsep => &["L∩C", "B", "L∩Z"],
            SchemeKind::Symmetry => &["S", "K"],
        }
    }

    /// Whether any part is built from a complement under the given weight.
    pub fn depends_on_inner_product(self) -> bool {
        matches!(self, SchemeKind::Potential | SchemeKind::Symmetry)
    }
}

impl fmt::Display for SchemeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SchemeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SchemeKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "scheme",
                name: s.to_string(),
            })
    }
}

#[derive(Debug, Clone)]
pub struct Part {
    pub label: &'static str,
    pub subspace: Subspace,
}

/// An ordered list of subspaces whose direct sum is the whole payoff space.
#[derive(Debug, Clone)]
pub struct Scheme {
    kind: SchemeKind,
    space: GameSpace,
    built_with: String,
    parts: Vec<Part>,
    /// Inverse of the stacked part bases: maps a payoff vector to its
    /// coordinates in the concatenated basis.
    coordinates: RationalMatrix,
}

impl Scheme {
    /// Assembles a scheme, verifying the direct-sum invariant.
    pub fn from_parts(
        kind: SchemeKind,
        space: &GameSpace,
        built_with: impl Into<String>,
        parts: Vec<Part>,
    ) -> Result<Self> {
        for p in &parts {
            space.check_same(p.subspace.space())?;
        }
        let total: usize = parts.iter().map(|p| p.subspace.dimension()).sum();
        if total != space.dim() {
            return Err(Error::Construction(format!(
                "{kind} parts have total dimension {total}, ambient dimension is {}",
                space.dim()
            )));
        }
        let bases: Vec<&RationalMatrix> = parts.iter().map(|p| p.subspace.basis()).collect();
        let coordinates = RationalMatrix::hstack(&bases).inverse().ok_or_else(|| {
            Error::Construction(format!("{kind} parts do not form a direct sum"))
        })?;
        Ok(Self {
            kind,
            space: space.clone(),
            built_with: built_with.into(),
            parts,
            coordinates,
        })
    }

    pub fn kind(&self) -> SchemeKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn space(&self) -> &GameSpace {
        &self.space
    }

    /// Name of the inner product used for complement-built parts.
    pub fn built_with(&self) -> &str {
        &self.built_with
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.subspace.dimension()).collect()
    }

    /// Replaces every part basis by another basis of the same span. Used to
    /// check that decompositions do not depend on the choice of basis.
    pub fn with_part_bases(&self, bases: Vec<RationalMatrix>) -> Result<Self> {
        if bases.len() != self.parts.len() {
            return Err(Error::Shape("one basis per part is required".into()));
        }
        let parts = self
            .parts
            .iter()
            .zip(bases)
            .map(|(p, b)| {
                let sub = Subspace::from_spanning(&self.space, &b)?;
                if !sub.same_span(&p.subspace)? {
                    return Err(Error::Construction(format!(
                        "replacement basis for {} spans a different subspace",
                        p.label
                    )));
                }
                Ok(Part {
                    label: p.label,
                    subspace: sub,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(self.kind, &self.space, self.built_with.clone(), parts)
    }
}

fn part(label: &'static str, subspace: Subspace) -> Part {
    Part { label, subspace }
}

/// Builds a named scheme on `space`. `ip` is used for the parts defined as
/// complements (`P` of the potential scheme, `K` of the symmetry scheme).
pub fn build_scheme(kind: SchemeKind, space: &GameSpace, ip: &InnerProduct) -> Result<Scheme> {
    space.check_same(ip.space())?;
    let labels = kind.part_labels();
    let subspaces = match kind {
        SchemeKind::Potential => {
            let h = harmonic_space(space)?;
            let n = non_strategic_space(space)?;
            let p = orth_complement(&subspace_sum(&n, &h)?, ip)?;
            if !potential_space(space)?.contains(&p)? {
                return Err(Error::Construction(format!(
                    "complement of N+H under the {} inner product is not contained in the \
                     potential games of {space}",
                    ip.name()
                )));
            }
            vec![p, n, h]
        }
        SchemeKind::ZeroSum => vec![zero_sum_space(space)?, common_interest_space(space)?],
        SchemeKind::Normalization => vec![normalized_space(space)?, non_strategic_space(space)?],
        SchemeKind::Zsep => {
            let z = zero_sum_space(space)?;
            let c = common_interest_space(space)?;
            let l = normalized_space(space)?;
            let e = non_strategic_space(space)?;
            let b = intersect(&subspace_sum(&z, &e)?, &subspace_sum(&c, &e)?)?;
            vec![intersect(&l, &c)?, b, intersect(&l, &z)?]
        }
        SchemeKind::Symmetry => {
            let s = symmetric_space(space)?;
            let k = orth_complement(&s, ip)?;
            vec![s, k]
        }
    };
    let parts = labels.iter().zip(subspaces).map(|(&l, s)| part(l, s)).collect();
    Scheme::from_parts(kind, space, ip.name(), parts)
}

/// True iff basis columns of distinct parts are pairwise `ip`-orthogonal.
pub fn verify_orthogonality(scheme: &Scheme, ip: &InnerProduct) -> Result<bool> {
    scheme.space.check_same(ip.space())?;
    let parts = &scheme.parts;
    for (a, pa) in parts.iter().enumerate() {
        for pb in &parts[a + 1..] {
            if !ip.gram(pa.subspace.basis(), pb.subspace.basis()).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A game split along a scheme.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub scheme: SchemeKind,
    pub inner: String,
    pub labels: Vec<&'static str>,
    pub components: Vec<Game>,
    /// Whether the parts are pairwise orthogonal under `inner`.
    pub orthogonal: bool,
}

impl Decomposition {
    pub fn component(&self, label: &str) -> Option<&Game> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .map(|i| &self.components[i])
    }
}

/// Decomposition engine for one (scheme, inner product) pair. Holds the
/// per-part projectors when the parts are orthogonal, so many games can be
/// split cheaply.
#[derive(Debug, Clone)]
pub struct Decomposer<'a> {
    scheme: &'a Scheme,
    ip_name: String,
    orthogonal: bool,
    projectors: Option<Vec<Projector>>,
}

impl<'a> Decomposer<'a> {
    pub fn new(scheme: &'a Scheme, ip: &InnerProduct) -> Result<Self> {
        let orthogonal = verify_orthogonality(scheme, ip)?;
        let projectors = if orthogonal {
            Some(
                scheme
                    .parts
                    .iter()
                    .map(|p| Projector::new(ip, &p.subspace))
                    .collect::<Result<_>>()?,
            )
        } else {
            None
        };
        Ok(Self {
            scheme,
            ip_name: ip.name(),
            orthogonal,
            projectors,
        })
    }

    pub fn is_orthogonal(&self) -> bool {
        self.orthogonal
    }

    /// Direct-sum coordinates of `g`, one component per part. When the
    /// parts are orthogonal each component is also checked against the
    /// orthogonal projection onto its part.
    pub fn decompose(&self, g: &Game) -> Result<Decomposition> {
        let scheme = self.scheme;
        scheme.space.check_same(g.space())?;
        let coords = scheme.coordinates.mul_vec(g.payoff_vector());
        let mut offset = 0;
        let mut components = Vec::with_capacity(scheme.parts.len());
        for p in &scheme.parts {
            let d = p.subspace.dimension();
            components.push(p.subspace.combine(&coords[offset..offset + d]));
            offset += d;
        }
        if let Some(projectors) = &self.projectors {
            for ((proj, comp), p) in projectors.iter().zip(&components).zip(&scheme.parts) {
                if &proj.apply(g)? != comp {
                    return Err(Error::Construction(format!(
                        "{} component differs from the orthogonal projection onto {}",
                        scheme.kind, p.label
                    )));
                }
            }
        }
        Ok(Decomposition {
            scheme: scheme.kind,
            inner: self.ip_name.clone(),
            labels: scheme.parts.iter().map(|p| p.label).collect(),
            components,
            orthogonal: self.orthogonal,
        })
    }
}

pub fn decompose(scheme: &Scheme, ip: &InnerProduct, g: &Game) -> Result<Decomposition> {
    Decomposer::new(scheme, ip)?.decompose(g)
}
