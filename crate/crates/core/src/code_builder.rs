//! Linear codes spanned by unit-graph incidence matrices, plus the
//! closed-form parameter predictions they are checked against.
//!
//! The unoriented incidence matrix `H` of `G(Z_n)` is `|V| x |E|` with
//! `H[v][e] = 1` exactly when vertex `v` is an endpoint of edge `e`
//! (columns follow the graph's lexicographic edge order). The code `C_q(H)`
//! is the row space of `H` over `F_q`; its dimension is always a computed
//! rank, never the predicted value.
//!
//! Two construction routes are provided. [`code_from_incidence`] builds the
//! full object (rref generator plus null-space parity check), which is
//! quadratic in `|E|` and meant for moderate sizes. [`incidence_rank`]
//! streams the weight-2 columns of `H` through an incremental eliminator,
//! so sweeps can verify dimensions at `n` in the hundreds without ever
//! materializing `H`.

use crate::gf_linalg::{EchelonBasis, MatrixGF, PrimeField};
use crate::ring_zn::Factorization;
use crate::unit_graph::{self, UnitGraph};
use crate::{Error, Result};

/// Dense unoriented incidence matrix of `g` over `field`.
///
/// Every column has exactly two ones (it sums to 2 mod q), and row `v` has
/// `deg(v)` ones.
pub fn incidence_matrix(g: &UnitGraph, field: PrimeField) -> Result<MatrixGF> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let mut h = MatrixGF::zero(field, g.vertex_count(), g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        h.set(u as usize, e, 1);
        h.set(v as usize, e, 1);
    }
    Ok(h)
}

/// Rank of the incidence matrix over `field`, computed by Gaussian
/// elimination on the columns (each `e_u + e_v` is inserted into a reduced
/// echelon basis of length-`|V|` vectors). Row and column rank agree, and
/// the loop exits early once the rank saturates at `|V|`.
pub fn incidence_rank(g: &UnitGraph, field: PrimeField) -> usize {
    let n = g.vertex_count();
    let mut basis = EchelonBasis::new(field, n);
    let mut col = vec![0u64; n];
    for &(u, v) in g.edges() {
        col.fill(0);
        col[u as usize] = 1;
        col[v as usize] = 1;
        basis.insert(col.clone());
        if basis.rank() == n {
            break;
        }
    }
    basis.rank()
}

/// A q-ary linear code presented by a generator and a parity-check matrix.
#[derive(Debug, Clone)]
pub struct LinearCode {
    field: PrimeField,
    /// Generator: `dimension` independent rows of length `length` (the rref
    /// of the spanning matrix with zero rows dropped).
    generator: MatrixGF,
    /// Parity check: a null-space basis; `generator · parity_checkᵀ = 0`.
    parity_check: MatrixGF,
}

impl LinearCode {
    /// Build a code from any spanning matrix (rows span the code).
    pub fn from_spanning_rows(m: &MatrixGF) -> Result<LinearCode> {
        if m.col_count() == 0 {
            return Err(Error::DimensionMismatch("code of length 0".into()));
        }
        let mut basis = EchelonBasis::new(m.field(), m.col_count());
        for r in 0..m.row_count() {
            basis.insert(m.row(r).to_vec());
        }
        let rows: Vec<Vec<u64>> = basis
            .rows_by_pivot()
            .into_iter()
            .map(|r| r.to_vec())
            .collect();
        let generator = MatrixGF::from_rows(m.field(), rows)?;
        let parity_check = basis.nullspace_basis();
        Ok(LinearCode {
            field: m.field(),
            generator,
            parity_check,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn length(&self) -> usize {
        self.generator.col_count()
    }

    pub fn dimension(&self) -> usize {
        self.generator.row_count()
    }

    pub fn dual_dimension(&self) -> usize {
        self.length() - self.dimension()
    }

    pub fn generator(&self) -> &MatrixGF {
        &self.generator
    }

    pub fn parity_check(&self) -> &MatrixGF {
        &self.parity_check
    }

    /// True when `word` (length `length()`) lies in the code.
    pub fn contains(&self, word: &[u64]) -> bool {
        let f = self.field;
        debug_assert_eq!(word.len(), self.length());
        for r in 0..self.parity_check.row_count() {
            let row = self.parity_check.row(r);
            let mut acc = 0u64;
            for (a, b) in row.iter().zip(word) {
                acc = f.add(acc, f.mul(*a, *b));
            }
            if acc != 0 {
                return false;
            }
        }
        true
    }
}

/// The q-ary code spanned by the incidence matrix of `g`.
pub fn code_from_incidence(g: &UnitGraph, q: u64) -> Result<LinearCode> {
    let field = PrimeField::new(q)?;
    let h = incidence_matrix(g, field)?;
    LinearCode::from_spanning_rows(&h)
}

/// Which closed-form parameter rule fires for a `(n, q)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeRule {
    /// 2 a unit (n odd), q = 2: `[(n-1)φ(n)/2, n-1, φ(n)-1]` with dual
    /// distance 3.
    BinaryUnitRegime,
    /// 2 a non-unit (n even), q an odd prime: `[nφ(n)/2, n-1, φ(n)]` with
    /// dual distance 4.
    QaryNonUnitRegime,
}

/// Whether the rule is proved (at most three distinct primes) or the
/// general-n conjecture, or no rule covers the pair at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Applicability {
    Theorem(CodeRule),
    Conjecture(CodeRule),
    NotApplicable,
}

impl Applicability {
    pub fn is_conjecture(&self) -> bool {
        matches!(self, Applicability::Conjecture(_))
    }

    pub fn rule(&self) -> Option<CodeRule> {
        match self {
            Applicability::Theorem(r) | Applicability::Conjecture(r) => Some(*r),
            Applicability::NotApplicable => None,
        }
    }
}

/// Predicted code parameters for `(n, q)`.
///
/// `length` is always populated (the edge-count formula holds for every n).
/// The remaining fields are populated only when a rule fires; the dual
/// minimum distance additionally excludes the special moduli `n = 3` (rule
/// (a); the dual is trivial there anyway) and replaces 4 by 6 at `n = 6`
/// (rule (b), where the girth is 6). A trivial dual (dimension 0) never
/// gets a distance prediction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedCodeParams {
    pub applicability: Applicability,
    pub length: u64,
    pub dimension: Option<u64>,
    pub min_distance: Option<u64>,
    pub dual_dimension: Option<u64>,
    pub dual_min_distance: Option<u64>,
}

/// Closed-form code parameter predictions for `n ≥ 2` and prime `q`.
pub fn predict_code_params(f: &Factorization, q: u64) -> Result<PredictedCodeParams> {
    let field = PrimeField::new(q)?;
    let n = f.n();
    if n < 2 {
        return Err(if n == 0 {
            Error::ZeroModulus
        } else {
            Error::ModulusTooSmall
        });
    }
    let phi = f.euler_phi();
    let length = unit_graph::predicted_edge_count(f);
    let rule = if f.two_is_unit() && field.q() == 2 {
        Some(CodeRule::BinaryUnitRegime)
    } else if !f.two_is_unit() && field.q() % 2 == 1 {
        Some(CodeRule::QaryNonUnitRegime)
    } else {
        None
    };
    let Some(rule) = rule else {
        return Ok(PredictedCodeParams {
            applicability: Applicability::NotApplicable,
            length,
            dimension: None,
            min_distance: None,
            dual_dimension: None,
            dual_min_distance: None,
        });
    };
    let applicability = if f.distinct_prime_count() <= 3 {
        Applicability::Theorem(rule)
    } else {
        Applicability::Conjecture(rule)
    };
    let dimension = n - 1;
    let min_distance = match rule {
        CodeRule::BinaryUnitRegime => phi - 1,
        CodeRule::QaryNonUnitRegime => phi,
    };
    let dual_dimension = length - dimension;
    let dual_min_distance = if dual_dimension == 0 {
        None
    } else {
        match rule {
            CodeRule::BinaryUnitRegime => {
                if n == 3 {
                    None
                } else {
                    Some(3)
                }
            }
            CodeRule::QaryNonUnitRegime => Some(if n == 6 { 6 } else { 4 }),
        }
    };
    Ok(PredictedCodeParams {
        applicability,
        length,
        dimension: Some(dimension),
        min_distance: Some(min_distance),
        dual_dimension: Some(dual_dimension),
        dual_min_distance,
    })
}
