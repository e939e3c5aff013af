//! The compatibility condition between the standard inner product and a
//! weighted one, and an empirical check of its equivalence with both inner
//! products inducing the same orthogonal decomposition.
//!
//! A scheme is compatible with `Q` when every part `M` satisfies `Q·M ⊆ M`
//! and `Q⁻¹·M ⊆ M`. Both conditions are linear, so checking the basis
//! columns of each part decides them for every member.

use std::fmt;

use num_traits::Zero;

use crate::error::Result;
use crate::game::{Game, GameSpace};
use crate::inner::{InnerProduct, Projector};
use crate::random::seeded_games;
use crate::rational::Rational;
use crate::scheme::{build_scheme, verify_orthogonality, Scheme, SchemeKind};
use crate::subspace::Subspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Q,
    QInverse,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Q => "Q",
            Direction::QInverse => "Q^-1",
        })
    }
}

/// Basis column `column` of part `part` (both 1-based) leaves its part
/// under multiplication by `direction`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub part: usize,
    pub label: &'static str,
    pub column: usize,
    pub direction: Direction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatReport {
    pub scheme: String,
    pub weight: String,
    /// All parts closed under `Q` and `Q⁻¹`.
    pub compatible: bool,
    /// Only the first `p − 1` parts closed, the weaker reading of the condition.
    pub compatible_leading: bool,
    pub violations: Vec<Violation>,
}

pub fn is_compatible(scheme: &Scheme, ip: &InnerProduct) -> Result<CompatReport> {
    scheme.space().check_same(ip.space())?;
    let mut violations = Vec::new();
    for (pi, part) in scheme.parts().iter().enumerate() {
        let basis = part.subspace.basis();
        for (direction, m) in [
            (Direction::Q, ip.matrix()),
            (Direction::QInverse, ip.inverse_matrix()),
        ] {
            let image = m.mul(basis);
            for c in 0..image.cols() {
                if !part.subspace.contains_vector(&image.column(c)) {
                    violations.push(Violation {
                        part: pi + 1,
                        label: part.label,
                        column: c + 1,
                        direction,
                    });
                }
            }
        }
    }
    let p = scheme.parts().len();
    Ok(CompatReport {
        scheme: scheme.name().to_string(),
        weight: ip.name(),
        compatible: violations.is_empty(),
        compatible_leading: violations.iter().all(|v| v.part == p),
        violations,
    })
}

/// Pairs `(i, j, ⟨a_i, b_j⟩_Q)` of basis columns (1-based) of `a` and `b`
/// with nonzero weighted inner product.
pub fn nonorthogonal_pairs(
    a: &Subspace,
    b: &Subspace,
    ip: &InnerProduct,
) -> Result<Vec<(usize, usize, Rational)>> {
    a.space().check_same(b.space())?;
    a.space().check_same(ip.space())?;
    let gram = a.basis().transpose().mul(ip.matrix()).mul(b.basis());
    let mut out = Vec::new();
    for i in 0..gram.rows() {
        for j in 0..gram.cols() {
            if !gram[(i, j)].is_zero() {
                out.push((i + 1, j + 1, gram[(i, j)].clone()));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agreement {
    pub trials: usize,
    pub seed: u64,
    /// Per-part orthogonal projections agree under both inner products on
    /// every trial.
    pub all_equal: bool,
    pub mismatched_trials: usize,
    /// First game whose projections disagree.
    pub witness: Option<Game>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub compat: CompatReport,
    pub orthogonal_standard: bool,
    pub orthogonal_weighted: bool,
    pub agreement: Agreement,
    /// Both inner products induce this decomposition.
    pub common_decomposition: bool,
    /// `compatible ⇔ common_decomposition`, whenever at least one of the
    /// inner products induces the decomposition.
    pub holds: bool,
}

/// Builds `kind` on `space` under the standard inner product and tests the
/// equivalence between compatibility with `ip` and a common orthogonal
/// decomposition, comparing per-part projections on `trials` seeded games.
pub fn theorem_check(
    kind: SchemeKind,
    space: &GameSpace,
    ip: &InnerProduct,
    trials: usize,
    seed: u64,
) -> Result<TheoremReport> {
    let standard = InnerProduct::standard(space);
    let scheme = build_scheme(kind, space, &standard)?;
    check_scheme(&scheme, ip, trials, seed)
}

/// [`theorem_check`] on an already built scheme.
pub fn check_scheme(
    scheme: &Scheme,
    ip: &InnerProduct,
    trials: usize,
    seed: u64,
) -> Result<TheoremReport> {
    let space = scheme.space();
    let standard = InnerProduct::standard(space);
    let compat = is_compatible(scheme, ip)?;
    let orthogonal_standard = verify_orthogonality(scheme, &standard)?;
    let orthogonal_weighted = verify_orthogonality(scheme, ip)?;

    let projectors = |w: &InnerProduct| -> Result<Vec<Projector>> {
        scheme
            .parts()
            .iter()
            .map(|p| Projector::new(w, &p.subspace))
            .collect()
    };
    let std_proj = projectors(&standard)?;
    let w_proj = projectors(ip)?;

    let mut mismatched_trials = 0;
    let mut witness = None;
    for g in seeded_games(space, trials, seed) {
        let mut equal = true;
        for (a, b) in std_proj.iter().zip(&w_proj) {
            if a.apply(&g)? != b.apply(&g)? {
                equal = false;
                break;
            }
        }
        if !equal {
            mismatched_trials += 1;
            witness.get_or_insert(g);
        }
    }
    let agreement = Agreement {
        trials,
        seed,
        all_equal: mismatched_trials == 0,
        mismatched_trials,
        witness,
    };

    let common_decomposition = orthogonal_standard && orthogonal_weighted && agreement.all_equal;
    let induced = orthogonal_standard || orthogonal_weighted;
    let holds = !induced || compat.compatible == common_decomposition;
    Ok(TheoremReport {
        compat,
        orthogonal_standard,
        orthogonal_weighted,
        agreement,
        common_decomposition,
        holds,
    })
}
