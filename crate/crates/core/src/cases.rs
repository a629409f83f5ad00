//! The two built-in case studies: the fourth-order profile ODE on the Sol
//! space for fields X = f(z) e3, and the classification of left-invariant
//! critical fields on the Heisenberg group Nil, verified exactly at
//! rational sample points.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::engine::DeltaPair;
use crate::error::{Error, Result};
use crate::field::VectorFieldExpr;
use crate::frame::{Frame, FrameAlgebra};
use crate::poly::{Poly, Symbols};
use crate::rat::Rat;

/// Linear constant-coefficient operator c0 f + c1 f' + c2 f'' + c3 f''' +
/// c4 f''''; the coefficients are polynomials in the symbols d1, d2.
#[derive(Debug, Clone)]
pub struct OdeOperator {
    pub coeffs: [Poly; 5],
    pub symbols: Arc<Symbols>,
}

/// How the deltas enter a case-study computation.
#[derive(Debug, Clone)]
pub enum DeltaSpec {
    Symbolic,
    Numeric(Rat, Rat),
}

#[derive(Debug, Clone)]
pub struct SolOde {
    pub operator: OdeOperator,
    /// Sign convention of the reported coefficients: they are read off the
    /// vertical condition itself (the expression set to zero), not its
    /// negation. The zero set is unaffected.
    pub orientation: &'static str,
}

pub const SOL_ODE_ORIENTATION: &str =
    "coefficients taken from the e3-component of the vertical condition (positive orientation)";

/// Runs the interpolating condition on the Sol frame for the jet field
/// X = f0 e3 and extracts the resulting profile ODE. The horizontal
/// residual and the e1/e2 vertical components are asserted to vanish
/// identically; anything else signals an engine bug.
pub fn derive_sol_ode(spec: &DeltaSpec) -> Result<SolOde> {
    derive_sol_ode_at_order(spec, 4)
}

/// Same, with explicit jet truncation order (>= 4). The output must not
/// depend on the slack order.
pub fn derive_sol_ode_at_order(spec: &DeltaSpec, order: usize) -> Result<SolOde> {
    if order < 4 {
        return Err(Error::ResidualShape(format!(
            "jet truncation order {order} cannot hold a fourth derivative"
        )));
    }
    let extra: &[&str] = match spec {
        DeltaSpec::Symbolic => &["d1", "d2"],
        DeltaSpec::Numeric(..) => &[],
    };
    let frame = Frame::jet(FrameAlgebra::sol(), 2, order, extra)?;
    let symbols = Arc::clone(&frame.symbols);

    let mut coeffs = vec![Poly::zero(&symbols); 3];
    coeffs[2] = Poly::symbol(&symbols, "f0")?;
    let x = VectorFieldExpr::new(coeffs);

    let (d1, d2) = match spec {
        DeltaSpec::Symbolic => (Poly::symbol(&symbols, "d1")?, Poly::symbol(&symbols, "d2")?),
        DeltaSpec::Numeric(a, b) => (
            Poly::constant(&symbols, a.clone()),
            Poly::constant(&symbols, b.clone()),
        ),
    };

    let horizontal = frame.horizontal_condition_poly(&x, &d1, &d2)?;
    if !horizontal.is_zero() {
        return Err(Error::ResidualShape(
            "horizontal residual of the Sol profile field is not identically zero".to_string(),
        ));
    }
    let vertical = frame.vertical_condition_poly(&x, &d1, &d2)?;
    for i in [0usize, 1] {
        if !vertical.coeff(i).is_zero() {
            return Err(Error::ResidualShape(format!(
                "vertical residual has an unexpected e{} component",
                i + 1
            )));
        }
    }

    // collapse the e3 component, linear in the jet symbols, onto
    // coefficient polynomials in (d1, d2)
    let dsyms = Symbols::new(vec!["d1", "d2"]);
    let d1_t = Poly::symbol(&dsyms, "d1")?;
    let d2_t = Poly::symbol(&dsyms, "d2")?;
    let mut out: [Poly; 5] = std::array::from_fn(|_| Poly::zero(&dsyms));
    for (mono, coeff) in vertical.coeff(2).terms() {
        let exps = mono.exponents();
        let mut jet_index: Option<usize> = None;
        for (pos, &e) in exps.iter().enumerate().take(order + 1) {
            if e == 0 {
                continue;
            }
            if e > 1 || jet_index.is_some() {
                return Err(Error::ResidualShape(
                    "vertical residual is not linear in the jet symbols".to_string(),
                ));
            }
            jet_index = Some(pos);
        }
        let k = jet_index.ok_or_else(|| {
            Error::ResidualShape("vertical residual has a jet-free term".to_string())
        })?;
        if k > 4 {
            return Err(Error::ResidualShape(format!(
                "vertical residual involves f{k}, beyond the fourth derivative"
            )));
        }
        let mut term = Poly::constant(&dsyms, coeff.clone());
        match spec {
            DeltaSpec::Symbolic => {
                let e1 = exps[order + 1];
                let e2 = exps[order + 2];
                term = term.mul(&d1_t.pow(e1 as u32)?)?;
                term = term.mul(&d2_t.pow(e2 as u32)?)?;
            }
            DeltaSpec::Numeric(..) => {}
        }
        out[k] = out[k].add(&term)?;
    }

    Ok(SolOde {
        operator: OdeOperator {
            coeffs: out,
            symbols: dsyms,
        },
        orientation: SOL_ODE_ORIENTATION,
    })
}

/// Exact verification of the closed-form solution basis of the Sol ODE.
#[derive(Debug, Clone)]
pub struct SolSolutionCheck {
    /// The two squared characteristic exponents: 2 and (d1 + 2 d2) / d2.
    pub lambda_sq: [Rat; 2],
    /// Whether both are roots of the characteristic polynomial
    /// d2 s^2 - (d1 + 4 d2) s + (2 d1 + 4 d2).
    pub roots_ok: bool,
    /// The exponent pairs coincide (d1 = 0); the solution basis degenerates.
    pub degenerate: bool,
    /// Echo of the four solution constants; they parametrize the general
    /// solution and do not affect the verification.
    pub constants: [Rat; 4],
}

pub fn verify_sol_solution(d1: &Rat, d2: &Rat, constants: &[Rat; 4]) -> Result<SolSolutionCheck> {
    if d2.is_zero() {
        return Err(Error::SignPrecondition(
            "delta2 must be nonzero for the fourth-order profile equation".to_string(),
        ));
    }
    let ratio = (d1 + &twice(d2)).checked_div(d2)?;
    if !ratio.is_positive() {
        return Err(Error::SignPrecondition(format!(
            "(delta1 + 2*delta2)/delta2 = {ratio} is not positive; the exponential solution basis does not apply"
        )));
    }
    let char_at = |s: &Rat| -> Rat {
        let s2 = s * s;
        let a = d2 * &s2;
        let b = &(d1 + &(d2 * &Rat::int(4))) * s;
        let c = &(d1 * &Rat::int(2)) + &(d2 * &Rat::int(4));
        &(&a - &b) + &c
    };
    let two = Rat::int(2);
    let roots_ok = char_at(&two).is_zero() && char_at(&ratio).is_zero();
    Ok(SolSolutionCheck {
        degenerate: ratio == two,
        lambda_sq: [two, ratio],
        roots_ok,
        constants: constants.clone(),
    })
}

fn twice(r: &Rat) -> Rat {
    r * &Rat::int(2)
}

/// The two polynomial systems cutting out the Nil classification: the
/// vertical condition components and the horizontal condition components,
/// both cleared of their 1/16 denominators.
#[derive(Debug, Clone)]
pub struct NilSystems {
    /// 16 x vertical condition, components e1, e2, e3.
    pub vector_field_system: [Poly; 3],
    /// Horizontal condition scaled to the conventional orientation:
    /// (-16 x e1-component, +16 x e3-component); the e2-component vanishes
    /// identically and is asserted away.
    pub map_system: [Poly; 2],
    pub symbols: Arc<Symbols>,
}

pub fn nil_systems(spec: &DeltaSpec) -> Result<NilSystems> {
    let names: Vec<&str> = match spec {
        DeltaSpec::Symbolic => vec!["a", "b", "g", "d1", "d2"],
        DeltaSpec::Numeric(..) => vec!["a", "b", "g"],
    };
    let symbols = Symbols::new(names);
    let frame = Frame::left_invariant(FrameAlgebra::nil(), Arc::clone(&symbols))?;
    let x = VectorFieldExpr::new(vec![
        Poly::symbol(&symbols, "a")?,
        Poly::symbol(&symbols, "b")?,
        Poly::symbol(&symbols, "g")?,
    ]);
    let (d1, d2) = match spec {
        DeltaSpec::Symbolic => (Poly::symbol(&symbols, "d1")?, Poly::symbol(&symbols, "d2")?),
        DeltaSpec::Numeric(a, b) => (
            Poly::constant(&symbols, a.clone()),
            Poly::constant(&symbols, b.clone()),
        ),
    };
    let sixteen = Rat::int(16);
    let vertical = frame.vertical_condition_poly(&x, &d1, &d2)?;
    let horizontal = frame.horizontal_condition_poly(&x, &d1, &d2)?;
    if !horizontal.coeff(1).is_zero() {
        return Err(Error::ResidualShape(
            "horizontal condition on Nil has an unexpected e2 component".to_string(),
        ));
    }
    Ok(NilSystems {
        vector_field_system: [
            vertical.coeff(0).scale(&sixteen),
            vertical.coeff(1).scale(&sixteen),
            vertical.coeff(2).scale(&sixteen),
        ],
        map_system: [
            horizontal.coeff(0).scale(&Rat::int(-16)),
            horizontal.coeff(2).scale(&sixteen),
        ],
        symbols,
    })
}

/// The families of Theorem-7 type solutions on Nil.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NilFamily {
    AxisE1,
    AxisE2,
    AxisE3,
    Diag23,
    Diag12,
    Plane13,
    CircleC1,
    CircleC2,
}

impl NilFamily {
    pub const ALL: [NilFamily; 8] = [
        NilFamily::AxisE1,
        NilFamily::AxisE2,
        NilFamily::AxisE3,
        NilFamily::Diag23,
        NilFamily::Diag12,
        NilFamily::Plane13,
        NilFamily::CircleC1,
        NilFamily::CircleC2,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            NilFamily::AxisE1 => "axis-e1",
            NilFamily::AxisE2 => "axis-e2",
            NilFamily::AxisE3 => "axis-e3",
            NilFamily::Diag23 => "diag-23",
            NilFamily::Diag12 => "diag-12",
            NilFamily::Plane13 => "plane-13",
            NilFamily::CircleC1 => "circle-C1",
            NilFamily::CircleC2 => "circle-C2",
        }
    }

    pub fn parse(name: &str) -> Option<NilFamily> {
        NilFamily::ALL.iter().copied().find(|f| f.name() == name)
    }

    fn needs_t(&self) -> bool {
        matches!(
            self,
            NilFamily::Diag23 | NilFamily::Diag12 | NilFamily::CircleC1 | NilFamily::CircleC2
        )
    }

    /// The delta relation the classification states for the family to
    /// consist of critical vector fields.
    pub fn existence_relation(&self) -> &'static str {
        if self.needs_t() {
            "-(2*delta1 + delta2)/delta2 > 0 (with rational square root for exact checks)"
        } else {
            "delta1 = -1/2*delta2"
        }
    }

    /// The delta relation the classification states for the family to
    /// consist of critical maps.
    pub fn stated_map_relation(&self) -> &'static str {
        if self.needs_t() {
            "delta1 = -delta2"
        } else {
            "delta1 = -1/2*delta2"
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyStatus {
    Applicable,
    /// The family collapses to the zero field (t = 0).
    Degenerate,
    NotApplicable {
        requirement: String,
    },
}

/// One exact substitution of a candidate field into the two systems.
#[derive(Debug, Clone)]
pub struct FamilySample {
    pub field: [Rat; 3],
    pub vector_field_system: [Rat; 3],
    pub map_system: [Rat; 2],
    pub vector_field_ok: bool,
    pub map_ok: bool,
}

#[derive(Debug, Clone)]
pub struct FamilyCheck {
    pub family: NilFamily,
    pub status: FamilyStatus,
    pub stated_map_relation: &'static str,
    pub stated_map_relation_holds: bool,
    pub samples: Vec<FamilySample>,
}

impl FamilyCheck {
    pub fn all_vector_field_ok(&self) -> bool {
        !self.samples.is_empty() && self.samples.iter().all(|s| s.vector_field_ok)
    }

    pub fn all_map_ok(&self) -> bool {
        !self.samples.is_empty() && self.samples.iter().all(|s| s.map_ok)
    }
}

#[derive(Debug, Clone)]
pub struct ControlCheck {
    pub label: String,
    pub sample: FamilySample,
}

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub t_squared: Option<Rat>,
    pub t: Option<Rat>,
    pub families: Vec<FamilyCheck>,
    pub controls: Vec<ControlCheck>,
}

fn half_relation_holds(d: &DeltaPair) -> bool {
    // delta1 = -1/2 delta2
    (&twice(d.delta1()) + d.delta2()).is_zero()
}

fn minus_relation_holds(d: &DeltaPair) -> bool {
    (d.delta1() + d.delta2()).is_zero()
}

fn t_squared(d: &DeltaPair) -> Option<Rat> {
    if d.delta2().is_zero() {
        return None;
    }
    let num = &twice(d.delta1()) + d.delta2();
    Some((-&num).checked_div(d.delta2()).expect("nonzero delta2"))
}

fn evaluate_sample(systems: &NilSystems, field: &[Rat; 3]) -> Result<FamilySample> {
    let mut assignment = BTreeMap::new();
    for (name, value) in ["a", "b", "g"].iter().zip(field.iter()) {
        assignment.insert(name.to_string(), value.clone());
    }
    let vector_field_system = [
        systems.vector_field_system[0].substitute(&assignment)?,
        systems.vector_field_system[1].substitute(&assignment)?,
        systems.vector_field_system[2].substitute(&assignment)?,
    ];
    let map_system = [
        systems.map_system[0].substitute(&assignment)?,
        systems.map_system[1].substitute(&assignment)?,
    ];
    let vector_field_ok = vector_field_system.iter().all(Rat::is_zero);
    let map_ok = vector_field_ok && map_system.iter().all(Rat::is_zero);
    Ok(FamilySample {
        field: field.clone(),
        vector_field_system,
        map_system,
        vector_field_ok,
        map_ok,
    })
}

fn family_points(family: NilFamily, t: &Rat) -> Vec<[Rat; 3]> {
    let z = Rat::zero;
    let two_t = twice(t);
    let neg = -&two_t;
    match family {
        NilFamily::AxisE1 => vec![[Rat::int(5), z(), z()], [Rat::int(-2), z(), z()]],
        NilFamily::AxisE2 => vec![[z(), Rat::int(5), z()], [z(), Rat::int(-2), z()]],
        NilFamily::AxisE3 => vec![[z(), z(), Rat::int(5)], [z(), z(), Rat::int(-2)]],
        NilFamily::Plane13 => vec![
            [Rat::int(5), z(), Rat::int(7)],
            [Rat::int(-2), z(), Rat::int(3)],
        ],
        NilFamily::Diag23 => vec![
            [z(), two_t.clone(), two_t.clone()],
            [z(), two_t.clone(), neg.clone()],
            [z(), neg.clone(), two_t.clone()],
            [z(), neg.clone(), neg.clone()],
        ],
        NilFamily::Diag12 => vec![
            [two_t.clone(), two_t.clone(), z()],
            [two_t.clone(), neg.clone(), z()],
            [neg.clone(), two_t.clone(), z()],
            [neg.clone(), neg.clone(), z()],
        ],
        NilFamily::CircleC1 | NilFamily::CircleC2 => {
            let beta = if family == NilFamily::CircleC1 {
                two_t.clone()
            } else {
                neg.clone()
            };
            // rational points on alpha^2 + gamma^2 = (2t)^2, Pythagorean
            let six_fifth = t * &Rat::new(6, 5).expect("6/5");
            let eight_fifth = t * &Rat::new(8, 5).expect("8/5");
            vec![
                [two_t.clone(), beta.clone(), z()],
                [z(), beta.clone(), two_t.clone()],
                [six_fifth, beta.clone(), eight_fifth],
            ]
        }
    }
}

/// Substitutes rational members of one family into the two systems at the
/// given deltas. When the family's existence relation fails at these
/// deltas, probe points are still evaluated so the nonzero residuals are
/// visible in reports.
pub fn verify_family(family: NilFamily, d: &DeltaPair) -> Result<FamilyCheck> {
    let systems = nil_systems(&DeltaSpec::Numeric(d.delta1().clone(), d.delta2().clone()))?;
    let relation = family.stated_map_relation();
    let relation_holds = if family.needs_t() {
        minus_relation_holds(d)
    } else {
        half_relation_holds(d)
    };

    let (status, points) = if family.needs_t() {
        match t_squared(d) {
            None => (
                FamilyStatus::NotApplicable {
                    requirement: "delta2 must be nonzero".to_string(),
                },
                vec![],
            ),
            Some(t2) => {
                if t2.is_zero() {
                    (
                        FamilyStatus::Degenerate,
                        vec![[Rat::zero(), Rat::zero(), Rat::zero()]],
                    )
                } else if t2.is_negative() {
                    (
                        FamilyStatus::NotApplicable {
                            requirement: family.existence_relation().to_string(),
                        },
                        vec![],
                    )
                } else {
                    let t = t2.sqrt_exact().ok_or_else(|| {
                        Error::NotRationalSquare(format!("-(2*delta1 + delta2)/delta2 = {t2}"))
                    })?;
                    (FamilyStatus::Applicable, family_points(family, &t))
                }
            }
        }
    } else {
        let points = family_points(family, &Rat::one());
        if half_relation_holds(d) {
            (FamilyStatus::Applicable, points)
        } else {
            // keep the probes: the report shows the residual that obstructs
            (
                FamilyStatus::NotApplicable {
                    requirement: family.existence_relation().to_string(),
                },
                points,
            )
        }
    };

    let samples = points
        .iter()
        .map(|p| evaluate_sample(&systems, p))
        .collect::<Result<Vec<_>>>()?;

    Ok(FamilyCheck {
        family,
        status,
        stated_map_relation: relation,
        stated_map_relation_holds: relation_holds,
        samples,
    })
}

/// Verifies all families at the given deltas, plus a negative control off
/// the classification (a beta = 0 point that sits on neither the plane
/// family relation nor the circles).
pub fn verify_classification(d: &DeltaPair) -> Result<ClassificationReport> {
    let t2 = t_squared(d);
    let t = match &t2 {
        Some(v) if v.is_positive() => Some(v.sqrt_exact().ok_or_else(|| {
            Error::NotRationalSquare(format!("-(2*delta1 + delta2)/delta2 = {v}"))
        })?),
        _ => None,
    };

    let families = NilFamily::ALL
        .iter()
        .map(|&f| verify_family(f, d))
        .collect::<Result<Vec<_>>>()?;

    let mut controls = Vec::new();
    if let Some(t) = &t {
        let systems = nil_systems(&DeltaSpec::Numeric(d.delta1().clone(), d.delta2().clone()))?;
        let two_t = twice(t);
        let control = [two_t.clone(), Rat::zero(), two_t.clone()];
        let sample = evaluate_sample(&systems, &control)?;
        controls.push(ControlCheck {
            label: "beta = 0 probe off the plane-13 relation (violates circle membership)"
                .to_string(),
            sample,
        });
    }

    Ok(ClassificationReport {
        t_squared: t2,
        t,
        families,
        controls,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    fn pair(d1: Rat, d2: Rat) -> DeltaPair {
        DeltaPair::new(d1, d2).unwrap()
    }

    #[test]
    fn sol_ode_symbolic_coefficients() {
        let ode = derive_sol_ode(&DeltaSpec::Symbolic).unwrap();
        let s = &ode.operator.symbols;
        let expect = [
            parse_poly("2*d1 + 4*d2", s).unwrap(),
            Poly::zero(s),
            parse_poly("-d1 - 4*d2", s).unwrap(),
            Poly::zero(s),
            parse_poly("d2", s).unwrap(),
        ];
        for (got, want) in ode.operator.coeffs.iter().zip(expect.iter()) {
            assert_eq!(got, want);
        }
    }

    #[test]
    fn sol_ode_specializations() {
        // biharmonic case: f'''' - 4 f'' + 4 f
        let ode = derive_sol_ode(&DeltaSpec::Numeric(Rat::zero(), Rat::one())).unwrap();
        let s = &ode.operator.symbols;
        assert_eq!(ode.operator.coeffs[0], Poly::constant(s, rat(4, 1)));
        assert_eq!(ode.operator.coeffs[2], Poly::constant(s, rat(-4, 1)));
        assert_eq!(ode.operator.coeffs[4], Poly::constant(s, Rat::one()));

        // harmonic reduction: -f'' + 2 f (delta2 = 0 drops the fourth order)
        let ode = derive_sol_ode(&DeltaSpec::Numeric(Rat::one(), Rat::zero())).unwrap();
        let s = &ode.operator.symbols;
        assert_eq!(ode.operator.coeffs[0], Poly::constant(s, rat(2, 1)));
        assert_eq!(ode.operator.coeffs[2], Poly::constant(s, rat(-1, 1)));
        assert!(ode.operator.coeffs[4].is_zero());
    }

    #[test]
    fn sol_ode_is_independent_of_jet_slack() {
        let at4 = derive_sol_ode_at_order(&DeltaSpec::Symbolic, 4).unwrap();
        let at5 = derive_sol_ode_at_order(&DeltaSpec::Symbolic, 5).unwrap();
        for (a, b) in at4.operator.coeffs.iter().zip(at5.operator.coeffs.iter()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn sol_solution_exponents_are_exact_roots() {
        let check = verify_sol_solution(
            &Rat::one(),
            &Rat::one(),
            &[Rat::one(), Rat::zero(), Rat::zero(), Rat::zero()],
        )
        .unwrap();
        assert!(check.roots_ok);
        assert!(!check.degenerate);
        assert_eq!(check.lambda_sq, [rat(2, 1), rat(3, 1)]);

        let degen = verify_sol_solution(
            &Rat::zero(),
            &Rat::one(),
            &std::array::from_fn(|_| Rat::zero()),
        )
        .unwrap();
        assert!(degen.roots_ok);
        assert!(degen.degenerate);
        assert_eq!(degen.lambda_sq, [rat(2, 1), rat(2, 1)]);

        let err = verify_sol_solution(
            &rat(-3, 1),
            &Rat::one(),
            &std::array::from_fn(|_| Rat::zero()),
        )
        .unwrap_err();
        assert!(matches!(err, Error::SignPrecondition(_)));
    }

    #[test]
    fn characteristic_roots_satisfy_vieta() {
        let pairs = [
            (rat(1, 1), rat(1, 1)),
            (rat(3, 2), rat(1, 3)),
            (rat(-1, 4), rat(5, 7)),
            (rat(2, 5), rat(-9, 2)),
            (rat(7, 3), rat(11, 6)),
            (rat(-8, 5), rat(3, 4)),
            (rat(12, 7), rat(1, 9)),
            (rat(5, 11), rat(13, 3)),
            (rat(-2, 9), rat(7, 5)),
            (rat(9, 4), rat(2, 7)),
        ];
        for (d1, d2) in pairs {
            // roots of d2 s^2 - (d1 + 4 d2) s + (2 d1 + 4 d2): s = 2 and
            // s = (d1 + 2 d2)/d2
            let s1 = rat(2, 1);
            let s2 = (&d1 + &twice(&d2)).checked_div(&d2).unwrap();
            let sum = &s1 + &s2;
            let prod = &s1 * &s2;
            let want_sum = (&d1 + &(&d2 * &rat(4, 1))).checked_div(&d2).unwrap();
            let want_prod = (&twice(&d1) + &(&d2 * &rat(4, 1)))
                .checked_div(&d2)
                .unwrap();
            assert_eq!(sum, want_sum);
            assert_eq!(prod, want_prod);
        }
    }

    #[test]
    fn nil_system_components_match_hand_expansion() {
        let systems = nil_systems(&DeltaSpec::Symbolic).unwrap();
        let s = &systems.symbols;
        assert_eq!(
            systems.vector_field_system[0],
            parse_poly("a*(8*d1 + d2*(4 + b^2))", s).unwrap()
        );
        assert_eq!(
            systems.vector_field_system[1],
            parse_poly("b*(8*d1 + d2*(4 + a^2 + g^2))", s).unwrap()
        );
        assert_eq!(
            systems.vector_field_system[2],
            parse_poly("g*(8*d1 + d2*(4 + b^2))", s).unwrap()
        );
        // corrected horizontal factor (see the independently verified
        // aggregate): 4 d1 + d2 (8 + 2 a^2 + 2 g^2 - b^2)
        assert_eq!(
            systems.map_system[0],
            parse_poly("b*g*(4*d1 + d2*(8 + 2*a^2 + 2*g^2 - b^2))", s).unwrap()
        );
        assert_eq!(
            systems.map_system[1],
            parse_poly("a*b*(4*d1 + d2*(8 + 2*a^2 + 2*g^2 - b^2))", s).unwrap()
        );
    }

    #[test]
    fn nil_system_substitution_leaves_positive_factor() {
        let systems = nil_systems(&DeltaSpec::Symbolic).unwrap();
        let mut assign = BTreeMap::new();
        assign.insert("d1".to_string(), Rat::one());
        assign.insert("d2".to_string(), Rat::one());
        let specialized = systems.vector_field_system[1].substitute_partial(&assign);
        let expect = parse_poly("b*(12 + a^2 + g^2)", &systems.symbols).unwrap();
        assert_eq!(specialized, expect);
    }

    #[test]
    fn classification_families_at_unit_t() {
        let d = pair(Rat::one(), rat(-1, 1));
        let report = verify_classification(&d).unwrap();
        assert_eq!(report.t, Some(Rat::one()));

        for check in &report.families {
            match check.family {
                NilFamily::Diag23
                | NilFamily::Diag12
                | NilFamily::CircleC1
                | NilFamily::CircleC2 => {
                    assert_eq!(check.status, FamilyStatus::Applicable);
                    assert!(check.all_vector_field_ok(), "{:?}", check.family);
                    assert!(check.stated_map_relation_holds);
                    // the corrected horizontal factor 4(delta2 - delta1)
                    // does not vanish at delta1 = -delta2, so these members
                    // are critical vector fields but not critical maps
                    assert!(!check.all_map_ok(), "{:?}", check.family);
                }
                NilFamily::AxisE1 | NilFamily::AxisE2 | NilFamily::AxisE3 | NilFamily::Plane13 => {
                    assert!(matches!(check.status, FamilyStatus::NotApplicable { .. }));
                    assert!(!check.all_vector_field_ok(), "{:?}", check.family);
                }
            }
        }

        let control = &report.controls[0];
        assert!(!control.sample.vector_field_ok);
        assert_eq!(control.sample.vector_field_system[0], rat(8, 1));
    }

    #[test]
    fn axis_and_plane_families_at_half_relation() {
        let d = pair(Rat::one(), rat(-2, 1));
        let report = verify_classification(&d).unwrap();
        assert_eq!(report.t_squared, Some(Rat::zero()));
        for check in &report.families {
            match check.family {
                NilFamily::AxisE1 | NilFamily::AxisE2 | NilFamily::AxisE3 | NilFamily::Plane13 => {
                    assert_eq!(check.status, FamilyStatus::Applicable);
                    assert!(check.all_vector_field_ok(), "{:?}", check.family);
                    // both horizontal components carry prefactors a*b and
                    // b*g, which vanish on these families
                    assert!(check.all_map_ok(), "{:?}", check.family);
                }
                _ => {
                    assert_eq!(check.status, FamilyStatus::Degenerate);
                    assert!(check.all_map_ok(), "zero field is always critical");
                }
            }
        }
    }

    #[test]
    fn counterexample_solves_vector_field_system_only() {
        let d = pair(rat(5, 2), rat(-1, 1));
        let check = verify_family(NilFamily::Diag12, &d).unwrap();
        assert_eq!(check.status, FamilyStatus::Applicable);
        // t = 2, so (4, 4, 0) is among the samples
        let sample = check
            .samples
            .iter()
            .find(|s| s.field == [rat(4, 1), rat(4, 1), Rat::zero()])
            .expect("(4,4,0) sample");
        assert!(sample.vector_field_ok);
        assert!(!sample.map_ok);
        assert!(!sample.map_system[1].is_zero());
    }

    #[test]
    fn irrational_t_is_reported_as_such() {
        // t^2 = -(2*1 + (-3))/(-3) = -1/3 < 0: families not applicable
        let d = pair(Rat::one(), rat(-3, 1));
        let report = verify_classification(&d).unwrap();
        assert!(report.t.is_none());
        // t^2 = 3 is positive but irrational
        let d = pair(rat(2, 1), rat(-1, 1));
        assert!(matches!(
            verify_classification(&d).unwrap_err(),
            Error::NotRationalSquare(_)
        ));
    }

    #[test]
    fn plane13_probe_shows_the_obstruction() {
        let d = pair(Rat::one(), rat(-1, 1));
        let check = verify_family(NilFamily::Plane13, &d).unwrap();
        assert!(matches!(check.status, FamilyStatus::NotApplicable { .. }));
        // probe (5, 0, 7): component 1 evaluates to 5*(8 - 4) = 20
        assert_eq!(check.samples[0].vector_field_system[0], rat(20, 1));
    }
}
