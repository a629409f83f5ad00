#![allow(clippy::needless_range_loop)]

//! Left-invariant frame geometry: Lie algebra structure constants in an
//! orthonormal frame, the Levi-Civita connection they determine, and the
//! Riemann curvature tensor, all exact.
//!
//! Index conventions, throughout:
//!   `c[i][j][k]`    is c^k_{ij}, meaning [e_i, e_j] = sum_k c^k_{ij} e_k
//!   `gamma[i][j][k]` is Gamma^k_{ij}, meaning nabla_{e_i} e_j = sum_k Gamma^k_{ij} e_k
//!   `r[i][j][k][l]` is R^l_{ijk}, meaning R(e_i, e_j) e_k = sum_l R^l_{ijk} e_l
//! with the curvature sign convention
//!   R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{\[X,Y\]} Z.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Derivation, Symbols};
use crate::rat::Rat;

/// A Lie algebra of dimension m presented by structure constants with
/// respect to an orthonormal basis.
#[derive(Debug, Clone)]
pub struct FrameAlgebra {
    dim: usize,
    c: Vec<Vec<Vec<Rat>>>,
}

impl FrameAlgebra {
    /// Builds the algebra from sparse bracket entries `(i, j, k, v)` meaning
    /// the e_k-coefficient of [e_i, e_j] (0-based). Omitted entries are
    /// zero; the antisymmetric counterpart of each entry is filled in
    /// automatically; conflicting duplicates are an error.
    pub fn from_brackets(dim: usize, entries: &[(usize, usize, usize, Rat)]) -> Result<Self> {
        let mut c = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
        let mut set = vec![vec![vec![false; dim]; dim]; dim];
        for &(i, j, k, ref v) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if i == j && !v.is_zero() {
                return Err(Error::InvalidStructure(format!(
                    "bracket [e_{}, e_{}] of a vector with itself must vanish",
                    i + 1,
                    i + 1
                )));
            }
            let neg = -v;
            for (a, b, val) in [(i, j, v.clone()), (j, i, neg)] {
                if set[a][b][k] && c[a][b][k] != val {
                    return Err(Error::InvalidStructure(format!(
                        "conflicting entries for ([e_{}, e_{}], e_{})",
                        a + 1,
                        b + 1,
                        k + 1
                    )));
                }
                set[a][b][k] = true;
                c[a][b][k] = val;
            }
        }
        let fa = FrameAlgebra { dim, c };
        fa.validate()?;
        Ok(fa)
    }

    /// The Heisenberg algebra in the orthonormal frame
    /// e1 = d/dx, e2 = d/dy, e3 = d/dz + x d/dy: the only bracket is
    /// [e1, e3] = e2.
    pub fn nil() -> Self {
        FrameAlgebra::from_brackets(3, &[(0, 2, 1, Rat::one())]).expect("nil preset")
    }

    /// The Sol algebra in the orthonormal frame e1 = e^{-z} d/dx,
    /// e2 = e^{z} d/dy, e3 = d/dz: [e1, e3] = e1, [e2, e3] = -e2.
    pub fn sol() -> Self {
        FrameAlgebra::from_brackets(3, &[(0, 2, 0, Rat::one()), (1, 2, 1, Rat::int(-1))])
            .expect("sol preset")
    }

    /// The abelian algebra (flat torus frame): all brackets vanish.
    pub fn abelian(dim: usize) -> Self {
        FrameAlgebra {
            dim,
            c: vec![vec![vec![Rat::zero(); dim]; dim]; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.c[i][j][k]
    }

    /// Checks antisymmetry and the Jacobi identity exhaustively.
    pub fn validate(&self) -> Result<()> {
        let m = self.dim;
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    if self.c[i][j][k] != -&self.c[j][i][k] {
                        return Err(Error::InvalidStructure(format!(
                            "antisymmetry fails at (i, j, k) = ({}, {}, {})",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for l in 0..m {
                    for k in 0..m {
                        let mut sum = Rat::zero();
                        for (a, b, c_) in [(i, j, l), (j, l, i), (l, i, j)] {
                            for r in 0..m {
                                sum = &sum + &(&self.c[a][b][r] * &self.c[r][c_][k]);
                            }
                        }
                        if !sum.is_zero() {
                            return Err(Error::InvalidStructure(format!(
                                "Jacobi identity fails at (i, j, l, k) = ({}, {}, {}, {})",
                                i + 1,
                                j + 1,
                                l + 1,
                                k + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// tr(ad_{e_j}) = 0 for every j; required for the density-level first
    /// variation identity.
    pub fn is_unimodular(&self) -> bool {
        (0..self.dim).all(|j| {
            let mut tr = Rat::zero();
            for i in 0..self.dim {
                tr = &tr + &self.c[j][i][i];
            }
            tr.is_zero()
        })
    }
}

/// Levi-Civita connection coefficients of the left-invariant metric making
/// the frame orthonormal.
#[derive(Debug, Clone)]
pub struct Connection {
    gamma: Vec<Vec<Vec<Rat>>>,
}

impl Connection {
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.gamma[i][j][k]
    }

    pub fn dim(&self) -> usize {
        self.gamma.len()
    }

    /// Metric compatibility (Gamma^k_{ij} = -Gamma^j_{ik}) and the torsion
    /// identity (Gamma^k_{ij} - Gamma^k_{ji} = c^k_{ij}), exhaustively.
    pub fn check_invariants(&self, fa: &FrameAlgebra) -> Result<()> {
        let m = self.dim();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    if self.gamma[i][j][k] != -&self.gamma[i][k][j] {
                        return Err(Error::InvalidConnection(format!(
                            "metric compatibility fails at ({}, {}, {})",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                    let torsion = &(&self.gamma[i][j][k] - &self.gamma[j][i][k]) - fa.c(i, j, k);
                    if !torsion.is_zero() {
                        return Err(Error::InvalidConnection(format!(
                            "torsion identity fails at ({}, {}, {})",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Koszul formula specialized to left-invariant orthonormal frames:
/// Gamma^k_{ij} = (c^k_{ij} - c^i_{jk} + c^j_{ki}) / 2.
pub fn connection_from_structure(fa: &FrameAlgebra) -> Result<Connection> {
    fa.validate()?;
    let m = fa.dim();
    let half = Rat::new(1, 2).expect("1/2");
    let mut gamma = vec![vec![vec![Rat::zero(); m]; m]; m];
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let v = &(fa.c(i, j, k) - fa.c(j, k, i)) + fa.c(k, i, j);
                gamma[i][j][k] = &v * &half;
            }
        }
    }
    let conn = Connection { gamma };
    conn.check_invariants(fa)?;
    Ok(conn)
}

/// Full curvature tensor, stored as all m^4 components.
#[derive(Debug, Clone)]
pub struct CurvatureTensor {
    r: Vec<Vec<Vec<Vec<Rat>>>>,
}

impl CurvatureTensor {
    pub fn r(&self, i: usize, j: usize, k: usize, l: usize) -> &Rat {
        &self.r[i][j][k][l]
    }

    pub fn dim(&self) -> usize {
        self.r.len()
    }

    /// Antisymmetry in the first pair, the first Bianchi identity, and the
    /// pair symmetry of the lowered tensor, exhaustively.
    pub fn check_invariants(&self) -> Result<()> {
        let m = self.dim();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        if self.r[i][j][k][l] != -&self.r[j][i][k][l] {
                            return Err(Error::InvalidCurvature(format!(
                                "antisymmetry fails at ({i}, {j}, {k}, {l})"
                            )));
                        }
                        let bianchi =
                            &(&self.r[i][j][k][l] + &self.r[j][k][i][l]) + &self.r[k][i][j][l];
                        if !bianchi.is_zero() {
                            return Err(Error::InvalidCurvature(format!(
                                "first Bianchi identity fails at ({i}, {j}, {k}, {l})"
                            )));
                        }
                        if self.r[i][j][k][l] != self.r[k][l][i][j] {
                            return Err(Error::InvalidCurvature(format!(
                                "pair symmetry fails at ({i}, {j}, {k}, {l})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// R^l_{ijk} = sum_r (Gamma^r_{jk} Gamma^l_{ir} - Gamma^r_{ik} Gamma^l_{jr})
///           - sum_r c^r_{ij} Gamma^l_{rk}.
pub fn curvature_from_connection(fa: &FrameAlgebra, conn: &Connection) -> Result<CurvatureTensor> {
    conn.check_invariants(fa)?;
    let m = fa.dim();
    let mut r = vec![vec![vec![vec![Rat::zero(); m]; m]; m]; m];
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                for l in 0..m {
                    let mut v = Rat::zero();
                    for s in 0..m {
                        v = &v
                            + &(&(conn.gamma(j, k, s) * conn.gamma(i, s, l))
                                - &(conn.gamma(i, k, s) * conn.gamma(j, s, l)));
                        v = &v - &(fa.c(i, j, s) * conn.gamma(s, k, l));
                    }
                    r[i][j][k][l] = v;
                }
            }
        }
    }
    let curv = CurvatureTensor { r };
    curv.check_invariants()?;
    Ok(curv)
}

/// Whether the coefficient ring carries constant symbols (left-invariant
/// fields) or a single jet variable (profile fields along one frame
/// direction). The two are never mixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    LeftInvariant,
    /// `direction` is the 0-based frame index whose derivation shifts the
    /// jet symbols f_k -> f_{k+1}.
    Jet {
        direction: usize,
    },
}

/// A validated geometry package: algebra, connection, curvature, and one
/// derivation per frame direction acting on the coefficient symbols.
#[derive(Debug, Clone)]
pub struct Frame {
    pub algebra: FrameAlgebra,
    pub connection: Connection,
    pub curvature: CurvatureTensor,
    pub derivations: Vec<Derivation>,
    pub symbols: Arc<Symbols>,
    pub mode: Mode,
}

impl Frame {
    pub fn new(
        algebra: FrameAlgebra,
        symbols: Arc<Symbols>,
        derivations: Vec<Derivation>,
        mode: Mode,
    ) -> Result<Self> {
        if derivations.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                got: derivations.len(),
            });
        }
        if let Mode::Jet { direction } = mode {
            if direction >= algebra.dim() {
                return Err(Error::IndexOutOfRange {
                    index: direction,
                    dim: algebra.dim(),
                });
            }
        }
        let connection = connection_from_structure(&algebra)?;
        let curvature = curvature_from_connection(&algebra, &connection)?;
        Ok(Frame {
            algebra,
            connection,
            curvature,
            derivations,
            symbols,
            mode,
        })
    }

    /// Left-invariant frame: every coefficient symbol is constant along
    /// every frame direction.
    pub fn left_invariant(algebra: FrameAlgebra, symbols: Arc<Symbols>) -> Result<Self> {
        let derivations = (0..algebra.dim())
            .map(|_| Derivation::zero(&symbols))
            .collect();
        Frame::new(algebra, symbols, derivations, Mode::LeftInvariant)
    }

    /// Jet frame over the ring f0..f{order} (plus optional extra constant
    /// symbols): the `direction` derivation shifts f_k -> f_{k+1}, and
    /// differentiating f_{order} along it is a hard error, which is how the
    /// truncation order is enforced. Every other direction treats all
    /// symbols as constant.
    pub fn jet(
        algebra: FrameAlgebra,
        direction: usize,
        order: usize,
        extra: &[&str],
    ) -> Result<Self> {
        let dim = algebra.dim();
        if direction >= dim {
            return Err(Error::IndexOutOfRange {
                index: direction,
                dim,
            });
        }
        let mut names: Vec<String> = (0..=order).map(|k| format!("f{k}")).collect();
        names.extend(extra.iter().map(|s| s.to_string()));
        let symbols = Symbols::new(names);

        let mut shift = std::collections::BTreeMap::new();
        for k in 0..order {
            shift.insert(k, crate::poly::Poly::symbol_at(&symbols, k + 1));
        }
        for e in 0..extra.len() {
            shift.insert(order + 1 + e, crate::poly::Poly::zero(&symbols));
        }

        let derivations = (0..dim)
            .map(|i| {
                if i == direction {
                    Derivation::new(shift.clone())
                } else {
                    Derivation::zero(&symbols)
                }
            })
            .collect();
        Frame::new(algebra, symbols, derivations, Mode::Jet { direction })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn is_left_invariant(&self) -> bool {
        self.mode == Mode::LeftInvariant
    }
}
