//! Top-level checkers: exact criticality reports, the pointwise energy
//! density, the finite-difference first-variation verifier, and the
//! same-sign rigidity scan.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::VectorFieldExpr;
use crate::frame::Frame;
use crate::poly::{Poly, Symbols};
use crate::rat::Rat;

/// The coupling constants of the interpolating functional. Both zero is
/// rejected: the functional would be degenerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaPair {
    delta1: Rat,
    delta2: Rat,
}

impl DeltaPair {
    pub fn new(delta1: Rat, delta2: Rat) -> Result<Self> {
        if delta1.is_zero() && delta2.is_zero() {
            return Err(Error::DegenerateDeltas);
        }
        Ok(DeltaPair { delta1, delta2 })
    }

    pub fn delta1(&self) -> &Rat {
        &self.delta1
    }

    pub fn delta2(&self) -> &Rat {
        &self.delta2
    }

    pub fn same_sign(&self) -> bool {
        (&self.delta1 * &self.delta2).is_positive()
    }
}

/// Outcome of an exact criticality check. Flags are decided by exact
/// polynomial identity (canonical form empty), never numerically.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub vertical_residual: VectorFieldExpr,
    pub horizontal_residual: VectorFieldExpr,
    pub is_sesqui_vector_field: bool,
    pub is_sesqui_map: bool,
    pub term_breakdown: BTreeMap<&'static str, VectorFieldExpr>,
}

/// Evaluates both criticality conditions for X and d = (delta1, delta2).
/// `is_sesqui_vector_field` iff the vertical residual vanishes;
/// `is_sesqui_map` additionally requires the horizontal residual to vanish.
pub fn check(frame: &Frame, x: &VectorFieldExpr, d: &DeltaPair) -> Result<CheckReport> {
    let vertical_residual = frame.vertical_condition(x, &d.delta1, &d.delta2)?;
    let horizontal_residual = frame.horizontal_condition(x, &d.delta1, &d.delta2)?;
    let is_sesqui_vector_field = vertical_residual.is_zero();
    let is_sesqui_map = is_sesqui_vector_field && horizontal_residual.is_zero();
    Ok(CheckReport {
        vertical_residual,
        horizontal_residual,
        is_sesqui_vector_field,
        is_sesqui_map,
        term_breakdown: frame.term_breakdown(x)?,
    })
}

/// Pointwise integrand of the interpolating energy for left-invariant
/// data: delta1 * m + delta1 * ||nabla X||^2 + delta2 * (||S(X)||^2 +
/// ||bar-Delta X||^2). Position-independent, so the integral over a
/// compact quotient is this polynomial times the volume.
pub fn energy_density(frame: &Frame, x: &VectorFieldExpr, d: &DeltaPair) -> Result<Poly> {
    let (grad_part, tau_part) = energy_density_parts(frame, x)?;
    grad_part.scale(&d.delta1).add(&tau_part.scale(&d.delta2))
}

/// The two delta-independent pieces of the density:
/// (m + ||nabla X||^2, ||S(X)||^2 + ||bar-Delta X||^2).
fn energy_density_parts(frame: &Frame, x: &VectorFieldExpr) -> Result<(Poly, Poly)> {
    if !frame.is_left_invariant() {
        return Err(Error::JetModeRejected(
            "energy density is defined for left-invariant fields".to_string(),
        ));
    }
    let m = Rat::int(frame.dim() as i64);
    let grad_sq = frame.jacobian(x)?.norm_sq()?;
    let grad_part = grad_sq.add(&Poly::constant(&frame.symbols, m))?;
    let s_sq = frame.s_of_x(x)?.norm_sq()?;
    let lap_sq = frame.rough_laplacian(x)?.norm_sq()?;
    Ok((grad_part, s_sq.add(&lap_sq)?))
}

/// Result of one finite-difference first-variation check.
#[derive(Debug, Clone, Copy)]
pub struct VariationOutcome {
    /// Central difference (E(X + tV) - E(X - tV)) / (2t) of the density.
    pub lhs: f64,
    /// <2 * vertical_condition(X), V> evaluated numerically.
    pub rhs: f64,
    /// |lhs - rhs| / max(1, |rhs|).
    pub rel_err: f64,
}

/// Verifies the first-variation identity at density level on a unimodular
/// left-invariant frame: d/dt E(X + tV)|_0 against the inner product of
/// the doubled vertical condition with V. This is the only place floating
/// point is allowed.
pub fn variation_test(
    frame: &Frame,
    x: &[f64],
    v: &[f64],
    delta1: f64,
    delta2: f64,
    step: f64,
) -> Result<VariationOutcome> {
    if !frame.is_left_invariant() {
        return Err(Error::JetModeRejected(
            "the variation test works on left-invariant fields".to_string(),
        ));
    }
    if !frame.algebra.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    let m = frame.dim();
    if x.len() != m || v.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: x.len().max(v.len()),
        });
    }
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::SignPrecondition("step must be positive".to_string()));
    }

    // symbolic field over a fresh coefficient ring, one symbol per frame leg
    let symbols = generic_symbols(m);
    let sym_frame = Frame::left_invariant(frame.algebra.clone(), Arc::clone(&symbols))?;
    let x_sym = generic_field(&symbols, m);

    let (grad_part, tau_part) = energy_density_parts(&sym_frame, &x_sym)?;
    let energy_at = |point: &[f64]| -> f64 {
        delta1 * grad_part.eval_f64(point) + delta2 * tau_part.eval_f64(point)
    };

    let plus: Vec<f64> = x.iter().zip(v).map(|(a, b)| a + step * b).collect();
    let minus: Vec<f64> = x.iter().zip(v).map(|(a, b)| a - step * b).collect();
    let lhs = (energy_at(&plus) - energy_at(&minus)) / (2.0 * step);

    // rhs: split the condition into its delta1- and delta2-linear parts so
    // float deltas can be applied after exact evaluation
    let one = Poly::one(&symbols);
    let zero = Poly::zero(&symbols);
    let vc_d1 = sym_frame.vertical_condition_poly(&x_sym, &one, &zero)?;
    let vc_d2 = sym_frame.vertical_condition_poly(&x_sym, &zero, &one)?;
    let mut rhs = 0.0;
    for (i, vi) in v.iter().enumerate() {
        let ci = delta1 * vc_d1.coeff(i).eval_f64(x) + delta2 * vc_d2.coeff(i).eval_f64(x);
        rhs += 2.0 * ci * vi;
    }

    if !(lhs.is_finite() && rhs.is_finite()) {
        return Err(Error::NonFinite);
    }
    let rel_err = (lhs - rhs).abs() / rhs.abs().max(1.0);
    Ok(VariationOutcome { lhs, rhs, rel_err })
}

fn generic_symbols(m: usize) -> Arc<Symbols> {
    if m == 3 {
        Symbols::new(vec!["a", "b", "g"])
    } else {
        Symbols::new((1..=m).map(|i| format!("x{i}")).collect::<Vec<_>>())
    }
}

fn generic_field(symbols: &Arc<Symbols>, m: usize) -> VectorFieldExpr {
    VectorFieldExpr::new((0..m).map(|i| Poly::symbol_at(symbols, i)).collect())
}

/// What the rigidity scan concluded.
#[derive(Debug, Clone)]
pub enum ScanOutcome {
    /// Every component of the vertical condition factors as
    /// (coordinate) * (strictly sign-definite cofactor), so the zero field
    /// is the only solution.
    ZeroFieldOnly { factors: Vec<(String, Poly)> },
    /// The sign-definite factorization does not apply; the raw polynomial
    /// system is reported instead of a solved set.
    Unresolved { system: Vec<Poly> },
}

/// Scans the vertical condition of a 3-dimensional frame for the same-sign
/// rigidity pattern: each component equal to one field coordinate times a
/// factor with no real zeros. When delta1 * delta2 > 0 on the shipped
/// presets this forces X = 0; with mixed signs the factorization fails and
/// the raw system is returned, signalling that nonzero families may exist.
pub fn same_sign_scan(frame: &Frame, d: &DeltaPair) -> Result<ScanOutcome> {
    if frame.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: frame.dim(),
        });
    }
    let symbols = generic_symbols(3);
    let sym_frame = Frame::left_invariant(frame.algebra.clone(), Arc::clone(&symbols))?;
    let x_sym = generic_field(&symbols, 3);
    let vc = sym_frame.vertical_condition(&x_sym, &d.delta1, &d.delta2)?;

    let mut factors = Vec::new();
    let mut forced = [false; 3];
    let mut factored_all = true;
    for i in 0..3 {
        let comp = vc.coeff(i);
        if comp.is_zero() {
            continue;
        }
        let mut matched = false;
        for var in comp.support() {
            if let Some(cofactor) = comp.divide_by_symbol(var) {
                if is_sign_definite(&cofactor) {
                    forced[var] = true;
                    factors.push((symbols.name(var).to_string(), cofactor));
                    matched = true;
                    break;
                }
            }
        }
        if !matched {
            factored_all = false;
        }
    }

    if factored_all && forced.iter().all(|&f| f) {
        Ok(ScanOutcome::ZeroFieldOnly { factors })
    } else {
        Ok(ScanOutcome::Unresolved {
            system: vc.coeffs().to_vec(),
        })
    }
}

/// True when the polynomial is bounded away from zero over all real
/// substitutions: nonzero constant term, every coefficient of the same
/// sign, and every exponent even.
fn is_sign_definite(p: &Poly) -> bool {
    if p.is_zero() || p.constant_term().is_zero() {
        return false;
    }
    let positive = p.constant_term().is_positive();
    p.terms().all(|(mono, coeff)| {
        coeff.is_positive() == positive && mono.exponents().iter().all(|&e| e % 2 == 0)
    })
}
