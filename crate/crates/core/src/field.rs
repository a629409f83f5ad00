#![allow(clippy::needless_range_loop)]

//! Covariant calculus of vector fields with polynomial coefficients in a
//! left-invariant orthonormal frame: nabla X, the rough Laplacian, the
//! curvature contraction S(X), and every curvature-combination term of the
//! two Euler-Lagrange conditions. Each summand is exposed as its own named
//! operation so sign errors stay localized; the aggregate conditions are
//! their literal signed sums.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::poly::{Poly, Symbols};
use crate::rat::Rat;

/// A vector field expressed in the frame: X = sum_i coeffs\[i\] e_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorFieldExpr {
    coeffs: Vec<Poly>,
}

impl VectorFieldExpr {
    pub fn new(coeffs: Vec<Poly>) -> Self {
        VectorFieldExpr { coeffs }
    }

    pub fn zero(symbols: &Arc<Symbols>, dim: usize) -> Self {
        VectorFieldExpr {
            coeffs: (0..dim).map(|_| Poly::zero(symbols)).collect(),
        }
    }

    pub fn basis(symbols: &Arc<Symbols>, dim: usize, index: usize) -> Self {
        let mut v = Self::zero(symbols, dim);
        v.coeffs[index] = Poly::one(symbols);
        v
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &Poly {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, Poly::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, Poly::sub)
    }

    fn zip(&self, other: &Self, op: fn(&Poly, &Poly) -> Result<Poly>) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| op(a, b))
            .collect::<Result<_>>()?;
        Ok(VectorFieldExpr { coeffs })
    }

    pub fn neg(&self) -> Self {
        VectorFieldExpr {
            coeffs: self.coeffs.iter().map(Poly::neg).collect(),
        }
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        VectorFieldExpr {
            coeffs: self.coeffs.iter().map(|c| c.scale(factor)).collect(),
        }
    }

    pub fn scale_poly(&self, factor: &Poly) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.mul(factor))
            .collect::<Result<_>>()?;
        Ok(VectorFieldExpr { coeffs })
    }

    /// Frame inner product (the frame is orthonormal).
    pub fn dot(&self, other: &Self) -> Result<Poly> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        let symbols = self.coeffs[0].symbols();
        let mut acc = Poly::zero(symbols);
        for (a, b) in self.coeffs.iter().zip(other.coeffs.iter()) {
            acc = acc.add(&a.mul(b)?)?;
        }
        Ok(acc)
    }

    pub fn norm_sq(&self) -> Result<Poly> {
        self.dot(self)
    }
}

/// The columns nabla_{e_i} X, i = 1..m.
#[derive(Debug, Clone)]
pub struct FieldJacobian {
    pub columns: Vec<VectorFieldExpr>,
}

impl FieldJacobian {
    /// ||nabla X||^2 = sum_i ||nabla_{e_i} X||^2.
    pub fn norm_sq(&self) -> Result<Poly> {
        let symbols = self.columns[0].coeffs[0].symbols();
        let mut acc = Poly::zero(symbols);
        for col in &self.columns {
            acc = acc.add(&col.norm_sq()?)?;
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(VectorFieldExpr::is_zero)
    }
}

/// Horizontal and vertical parts of a tension-type field on the tangent
/// bundle, both expressed back on the base frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauPair {
    pub horizontal: VectorFieldExpr,
    pub vertical: VectorFieldExpr,
}

impl TauPair {
    pub fn is_zero(&self) -> bool {
        self.horizontal.is_zero() && self.vertical.is_zero()
    }
}

impl Frame {
    fn check_field(&self, x: &VectorFieldExpr) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.dim(),
            });
        }
        Ok(())
    }

    /// (nabla_{e_i} X)^k = e_i(X^k) + sum_j Gamma^k_{ij} X^j, with e_i
    /// acting through the frame derivation.
    pub fn covariant_derivative(&self, i: usize, x: &VectorFieldExpr) -> Result<VectorFieldExpr> {
        self.check_field(x)?;
        let m = self.dim();
        if i >= m {
            return Err(Error::IndexOutOfRange { index: i, dim: m });
        }
        let mut coeffs = Vec::with_capacity(m);
        for k in 0..m {
            let mut c = self.derivations[i].apply(x.coeff(k))?;
            for j in 0..m {
                let g = self.connection.gamma(i, j, k);
                if !g.is_zero() {
                    c = c.add(&x.coeff(j).scale(g))?;
                }
            }
            coeffs.push(c);
        }
        Ok(VectorFieldExpr { coeffs })
    }

    pub fn jacobian(&self, x: &VectorFieldExpr) -> Result<FieldJacobian> {
        let columns = (0..self.dim())
            .map(|i| self.covariant_derivative(i, x))
            .collect::<Result<_>>()?;
        Ok(FieldJacobian { columns })
    }

    /// nabla_W X for a direction with polynomial coefficients; tensorial in W.
    pub fn nabla_along(&self, w: &VectorFieldExpr, x: &VectorFieldExpr) -> Result<VectorFieldExpr> {
        self.check_field(w)?;
        let mut acc = VectorFieldExpr::zero(&self.symbols, self.dim());
        for i in 0..self.dim() {
            if w.coeff(i).is_zero() {
                continue;
            }
            let col = self.covariant_derivative(i, x)?;
            acc = acc.add(&col.scale_poly(w.coeff(i))?)?;
        }
        Ok(acc)
    }

    /// Rough Laplacian with the positive-spectrum sign:
    /// bar-Delta X = sum_i (nabla_{nabla_{e_i} e_i} X - nabla_{e_i} nabla_{e_i} X).
    pub fn rough_laplacian(&self, x: &VectorFieldExpr) -> Result<VectorFieldExpr> {
        self.check_field(x)?;
        let m = self.dim();
        let mut acc = VectorFieldExpr::zero(&self.symbols, m);
        for i in 0..m {
            let col = self.covariant_derivative(i, x)?;
            let second = self.covariant_derivative(i, &col)?;
            acc = acc.sub(&second)?;
            // nabla_{e_i} e_i has constant coefficients Gamma^k_{ii}
            for k in 0..m {
                let g = self.connection.gamma(i, i, k);
                if !g.is_zero() {
                    let colk = self.covariant_derivative(k, x)?;
                    acc = acc.add(&colk.scale(g))?;
                }
            }
        }
        Ok(acc)
    }

    /// R(U, V) W, multilinear over the coefficient ring.
    pub fn curv_apply(
        &self,
        u: &VectorFieldExpr,
        v: &VectorFieldExpr,
        w: &VectorFieldExpr,
    ) -> Result<VectorFieldExpr> {
        self.check_field(u)?;
        self.check_field(v)?;
        self.check_field(w)?;
        let m = self.dim();
        let mut coeffs = vec![Poly::zero(&self.symbols); m];
        for i in 0..m {
            if u.coeff(i).is_zero() {
                continue;
            }
            for j in 0..m {
                if v.coeff(j).is_zero() {
                    continue;
                }
                let uv = u.coeff(i).mul(v.coeff(j))?;
                for k in 0..m {
                    if w.coeff(k).is_zero() {
                        continue;
                    }
                    for l in 0..m {
                        let r = self.curvature.r(i, j, k, l);
                        if r.is_zero() {
                            continue;
                        }
                        let term = uv.mul(w.coeff(k))?.scale(r);
                        coeffs[l] = coeffs[l].add(&term)?;
                    }
                }
            }
        }
        Ok(VectorFieldExpr { coeffs })
    }

    /// S(X) = sum_i R(nabla_{e_i} X, X) e_i.
    pub fn s_of_x(&self, x: &VectorFieldExpr) -> Result<VectorFieldExpr> {
        let grad = self.jacobian(x)?;
        self.s_from_jacobian(x, &grad)
    }

    fn s_from_jacobian(
        &self,
        x: &VectorFieldExpr,
        grad: &FieldJacobian,
    ) -> Result<VectorFieldExpr> {
        let m = self.dim();
        let mut acc = VectorFieldExpr::zero(&self.symbols, m);
        for i in 0..m {
            let ei = VectorFieldExpr::basis(&self.symbols, m, i);
            acc = acc.add(&self.curv_apply(&grad.columns[i], x, &ei)?)?;
        }
        Ok(acc)
    }

    /// Components of (nabla_{e_a} R)(e_u, e_v) e_z, all constant:
    /// nabla_a(R(e_u,e_v)e_z) - R(nabla_a e_u, e_v)e_z - R(e_u, nabla_a e_v)e_z
    /// - R(e_u,e_v) nabla_a e_z.
    pub fn nabla_r_frame(&self, a: usize, u: usize, v: usize, z: usize) -> Vec<Rat> {
        let m = self.dim();
        let gamma = |i, j, k| self.connection.gamma(i, j, k);
        let r = |i, j, k, l| self.curvature.r(i, j, k, l);
        let mut out = vec![Rat::zero(); m];
        for t in 0..m {
            for l in 0..m {
                // nabla_a (R^l e_l) contributes R^l Gamma^t_{al}
                out[t] = &out[t] + &(r(u, v, z, l) * gamma(a, l, t));
            }
            for s in 0..m {
                out[t] = &out[t] - &(gamma(a, u, s) * r(s, v, z, t));
                out[t] = &out[t] - &(gamma(a, v, s) * r(u, s, z, t));
                out[t] = &out[t] - &(gamma(a, z, s) * r(u, v, s, t));
            }
        }
        out
    }

    /// (nabla_W R)(e_u, e_v) e_z for a direction with polynomial
    /// coefficients; tensorial in W.
    pub fn nabla_curvature(
        &self,
        w: &VectorFieldExpr,
        u: usize,
        v: usize,
        z: usize,
    ) -> Result<VectorFieldExpr> {
        self.check_field(w)?;
        let m = self.dim();
        for idx in [u, v, z] {
            if idx >= m {
                return Err(Error::IndexOutOfRange { index: idx, dim: m });
            }
        }
        let mut coeffs = vec![Poly::zero(&self.symbols); m];
        for a in 0..m {
            if w.coeff(a).is_zero() {
                continue;
            }
            let comps = self.nabla_r_frame(a, u, v, z);
            for (t, comp) in comps.iter().enumerate() {
                if !comp.is_zero() {
                    coeffs[t] = coeffs[t].add(&w.coeff(a).scale(comp))?;
                }
            }
        }
        Ok(VectorFieldExpr { coeffs })
    }

    /// (nabla_W R)(U, V) Z with every slot polynomial; fully tensorial.
    pub fn nabla_r_apply(
        &self,
        w: &VectorFieldExpr,
        u: &VectorFieldExpr,
        v: &VectorFieldExpr,
        z: &VectorFieldExpr,
    ) -> Result<VectorFieldExpr> {
        for f in [w, u, v, z] {
            self.check_field(f)?;
        }
        let m = self.dim();
        let mut acc = VectorFieldExpr::zero(&self.symbols, m);
        for ui in 0..m {
            if u.coeff(ui).is_zero() {
                continue;
            }
            for vi in 0..m {
                if v.coeff(vi).is_zero() {
                    continue;
                }
                let uv = u.coeff(ui).mul(v.coeff(vi))?;
                for zi in 0..m {
                    if z.coeff(zi).is_zero() {
                        continue;
                    }
                    let uvz = uv.mul(z.coeff(zi))?;
                    let base = self.nabla_curvature(w, ui, vi, zi)?;
                    acc = acc.add(&base.scale_poly(&uvz)?)?;
                }
            }
        }
        Ok(acc)
    }

    // ---- vertical condition terms -------------------------------------

    /// sum_i (nabla_{e_i} R)(e_i, S(X)) X.
    pub fn vterm_nabla_r(&self, x: &VectorFieldExpr) -> Result<VectorFieldExpr> {
        let s = self.s_of_x(x)?;
        let m = self.dim();
        let mut acc = VectorFieldExpr::zero(&self.symbols, m);
        for i in 0..m {
            let ei = VectorFieldExpr::basis(&self.symbols, m, i);
            acc = acc.add(&self.nabla_r_apply(&ei, &ei, &s, x)?)?;
        }
        Ok(acc)
    }

    /// sum_i R(e_i, nabla_{e_i} S(X)) X.
    pub fn vterm_r_nabla_s(&self, x: &VectorFieldExpr) -> Result<VectorFieldExpr> {
        let s = self.s_of_x(x)?;
        let m = self.dim();
        let mut acc = VectorFieldExpr::zero(&self.symbols, m);
        for i in 0..m {
            let ei = VectorFieldExpr::basis(&self.symbols, m, i);
            let ns = self.covariant_derivative(i, &s)?;
            acc = acc.add(&self.curv_apply(&ei, &ns, x)?)?;
        }
        Ok(acc)
    }

    /// 2 sum_i R(e_i, S(X)) nabla_{e_i} X.
    pub fn vterm_two_r_s_nabla_x(&self, x: &VectorFieldExpr) -> Result<VectorFieldExpr> {
        let s = self.s_of_x(x)?;
        let m = self.dim();
        let mut acc = VectorFieldExpr::zero(&self.symbols, m);
        for i in 0..m {
            let ei = VectorFieldExpr::basis(&self.symbols, m, i);
            let nx = self.covariant_derivative(i, x)?;
            acc = acc.add(&self.curv_apply(&ei, &s, &nx)?)?;
        }
        Ok(acc.scale(&Rat::int(2)))
    }

    // ---- horizontal condition terms ------------------------------------

    /// bar-Delta S(X).
    pub fn hterm_lap_s(&self, x: &VectorFieldExpr) -> Result<VectorFieldExpr> {
        let s = self.s_of_x(x)?;
        self.rough_laplacian(&s)
    }

    /// R(X, bar-Delta X) S(X).
    pub fn hterm_r_x_lapx_s(&self, x: &VectorFieldExpr) -> Result<VectorFieldExpr> {
        let lap = self.rough_laplacian(x)?;
        let s = self.s_of_x(x)?;
        self.curv_apply(x, &lap, &s)
    }

    /// sum_i R(X, nabla_{e_i} bar-Delta X) e_i.
    pub fn hterm_r_x_nabla_lap(&self, x: &VectorFieldExpr) -> Result<VectorFieldExpr> {
        let lap = self.rough_laplacian(x)?;
        let m = self.dim();
        let mut acc = VectorFieldExpr::zero(&self.symbols, m);
        for i in 0..m {
            let ei = VectorFieldExpr::basis(&self.symbols, m, i);
            let nlap = self.covariant_derivative(i, &lap)?;
            acc = acc.add(&self.curv_apply(x, &nlap, &ei)?)?;
        }
        Ok(acc)
    }

    /// sum_i R(nabla_{e_i} X, bar-Delta X) e_i.
    pub fn hterm_r_nablax_lap(&self, x: &VectorFieldExpr) -> Result<VectorFieldExpr> {
        let lap = self.rough_laplacian(x)?;
        let m = self.dim();
        let mut acc = VectorFieldExpr::zero(&self.symbols, m);
        for i in 0..m {
            let ei = VectorFieldExpr::basis(&self.symbols, m, i);
            let nx = self.covariant_derivative(i, x)?;
            acc = acc.add(&self.curv_apply(&nx, &lap, &ei)?)?;
        }
        Ok(acc)
    }

    /// sum_i R(e_i, S(X)) e_i.
    pub fn hterm_r_ei_s(&self, x: &VectorFieldExpr) -> Result<VectorFieldExpr> {
        let s = self.s_of_x(x)?;
        let m = self.dim();
        let mut acc = VectorFieldExpr::zero(&self.symbols, m);
        for i in 0..m {
            let ei = VectorFieldExpr::basis(&self.symbols, m, i);
            acc = acc.add(&self.curv_apply(&ei, &s, &ei)?)?;
        }
        Ok(acc)
    }

    /// sum_i (nabla_{S(X)} R)(nabla_{e_i} X, X) e_i.
    pub fn hterm_nabla_s_r(&self, x: &VectorFieldExpr) -> Result<VectorFieldExpr> {
        let s = self.s_of_x(x)?;
        let m = self.dim();
        let mut acc = VectorFieldExpr::zero(&self.symbols, m);
        for i in 0..m {
            let ei = VectorFieldExpr::basis(&self.symbols, m, i);
            let nx = self.covariant_derivative(i, x)?;
            acc = acc.add(&self.nabla_r_apply(&s, &nx, x, &ei)?)?;
        }
        Ok(acc)
    }

    /// sum_i R(X, nabla_{e_i} X) nabla_{e_i} S(X).
    pub fn hterm_r_x_nablax_nabla_s(&self, x: &VectorFieldExpr) -> Result<VectorFieldExpr> {
        let s = self.s_of_x(x)?;
        let m = self.dim();
        let mut acc = VectorFieldExpr::zero(&self.symbols, m);
        for i in 0..m {
            let nx = self.covariant_derivative(i, x)?;
            let ns = self.covariant_derivative(i, &s)?;
            acc = acc.add(&self.curv_apply(x, &nx, &ns)?)?;
        }
        Ok(acc)
    }

    /// sum_i R(X, R(e_i, S(X)) X) e_i.
    pub fn hterm_r_x_r_ei_s_x(&self, x: &VectorFieldExpr) -> Result<VectorFieldExpr> {
        let s = self.s_of_x(x)?;
        let m = self.dim();
        let mut acc = VectorFieldExpr::zero(&self.symbols, m);
        for i in 0..m {
            let ei = VectorFieldExpr::basis(&self.symbols, m, i);
            let inner = self.curv_apply(&ei, &s, x)?;
            acc = acc.add(&self.curv_apply(x, &inner, &ei)?)?;
        }
        Ok(acc)
    }

    // ---- conditions -----------------------------------------------------

    /// Left-hand side of the vector-field criticality condition:
    /// d1 bar-Delta X + d2 bar-Delta bar-Delta X
    /// + d2 sum_i [ (nabla_{e_i} R)(e_i, S(X)) X + R(e_i, nabla_{e_i} S(X)) X
    ///   + 2 R(e_i, S(X)) nabla_{e_i} X ].
    ///
    /// X is critical among vector-field variations iff this vanishes.
    pub fn vertical_condition_poly(
        &self,
        x: &VectorFieldExpr,
        d1: &Poly,
        d2: &Poly,
    ) -> Result<VectorFieldExpr> {
        let lap = self.rough_laplacian(x)?;
        let lap2 = self.rough_laplacian(&lap)?;
        let sum = self
            .vterm_nabla_r(x)?
            .add(&self.vterm_r_nabla_s(x)?)?
            .add(&self.vterm_two_r_s_nabla_x(x)?)?;
        lap.scale_poly(d1)?.add(&lap2.add(&sum)?.scale_poly(d2)?)
    }

    /// Left-hand side of the extra condition that upgrades a critical
    /// vector field to a critical map:
    /// d1 S(X) + d2 bar-Delta S(X) + d2 R(X, bar-Delta X) S(X)
    /// - d2 sum_i [ R(X, nabla_{e_i} bar-Delta X) e_i
    ///   - R(nabla_{e_i} X, bar-Delta X) e_i
    ///   - R(e_i, S(X)) e_i
    ///   - (nabla_{S(X)} R)(nabla_{e_i} X, X) e_i
    ///   + R(X, nabla_{e_i} X) nabla_{e_i} S(X)
    ///   - R(X, R(e_i, S(X)) X) e_i ].
    pub fn horizontal_condition_poly(
        &self,
        x: &VectorFieldExpr,
        d1: &Poly,
        d2: &Poly,
    ) -> Result<VectorFieldExpr> {
        let s = self.s_of_x(x)?;
        let bracket = self
            .hterm_r_x_nabla_lap(x)?
            .sub(&self.hterm_r_nablax_lap(x)?)?
            .sub(&self.hterm_r_ei_s(x)?)?
            .sub(&self.hterm_nabla_s_r(x)?)?
            .add(&self.hterm_r_x_nablax_nabla_s(x)?)?
            .sub(&self.hterm_r_x_r_ei_s_x(x)?)?;
        let d2_part = self
            .hterm_lap_s(x)?
            .add(&self.hterm_r_x_lapx_s(x)?)?
            .sub(&bracket)?;
        s.scale_poly(d1)?.add(&d2_part.scale_poly(d2)?)
    }

    fn delta_polys(&self, d1: &Rat, d2: &Rat) -> (Poly, Poly) {
        (
            Poly::constant(&self.symbols, d1.clone()),
            Poly::constant(&self.symbols, d2.clone()),
        )
    }

    pub fn vertical_condition(
        &self,
        x: &VectorFieldExpr,
        d1: &Rat,
        d2: &Rat,
    ) -> Result<VectorFieldExpr> {
        let (p1, p2) = self.delta_polys(d1, d2);
        self.vertical_condition_poly(x, &p1, &p2)
    }

    pub fn horizontal_condition(
        &self,
        x: &VectorFieldExpr,
        d1: &Rat,
        d2: &Rat,
    ) -> Result<VectorFieldExpr> {
        let (p1, p2) = self.delta_polys(d1, d2);
        self.horizontal_condition_poly(x, &p1, &p2)
    }

    /// tau(X) = (-S(X))^h + (-bar-Delta X)^v.
    pub fn tau(&self, x: &VectorFieldExpr) -> Result<TauPair> {
        Ok(TauPair {
            horizontal: self.s_of_x(x)?.neg(),
            vertical: self.rough_laplacian(x)?.neg(),
        })
    }

    /// The interpolating field: vertical part -vertical_condition,
    /// horizontal part -horizontal_condition. With d2 = 0 this is
    /// d1 * tau(X); with d1 = 0, d2 = 1 it is the bitension field.
    pub fn tau_sesqui(&self, x: &VectorFieldExpr, d1: &Rat, d2: &Rat) -> Result<TauPair> {
        Ok(TauPair {
            horizontal: self.horizontal_condition(x, d1, d2)?.neg(),
            vertical: self.vertical_condition(x, d1, d2)?.neg(),
        })
    }

    /// Every named sub-term, keyed deterministically for reports.
    pub fn term_breakdown(
        &self,
        x: &VectorFieldExpr,
    ) -> Result<BTreeMap<&'static str, VectorFieldExpr>> {
        let lap = self.rough_laplacian(x)?;
        let mut map = BTreeMap::new();
        map.insert("delta_bar_x", lap.clone());
        map.insert("delta_bar_delta_bar_x", self.rough_laplacian(&lap)?);
        map.insert("s_of_x", self.s_of_x(x)?);
        map.insert("v1_sum_nabla_r_ei_s_x", self.vterm_nabla_r(x)?);
        map.insert("v2_sum_r_ei_nabla_s_x", self.vterm_r_nabla_s(x)?);
        map.insert("v3_two_sum_r_ei_s_nabla_x", self.vterm_two_r_s_nabla_x(x)?);
        map.insert("h1_delta_bar_s", self.hterm_lap_s(x)?);
        map.insert("h2_r_x_lapx_s", self.hterm_r_x_lapx_s(x)?);
        map.insert("h3_sum_r_x_nabla_lap_ei", self.hterm_r_x_nabla_lap(x)?);
        map.insert("h4_sum_r_nablax_lap_ei", self.hterm_r_nablax_lap(x)?);
        map.insert("h5_sum_r_ei_s_ei", self.hterm_r_ei_s(x)?);
        map.insert("h6_sum_nabla_s_r_nablax_x_ei", self.hterm_nabla_s_r(x)?);
        map.insert(
            "h7_sum_r_x_nablax_nabla_s",
            self.hterm_r_x_nablax_nabla_s(x)?,
        );
        map.insert("h8_sum_r_x_r_ei_s_x_ei", self.hterm_r_x_r_ei_s_x(x)?);
        Ok(map)
    }
}
