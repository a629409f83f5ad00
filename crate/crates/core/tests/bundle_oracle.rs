#![allow(clippy::needless_range_loop)]

//! Independent oracle for the interpolating field: computes the tension
//! and bitension of X viewed as a map into the tangent bundle directly in
//! coordinate charts, with the bundle metric written out explicitly over
//! the chart (x, y, z, u1, u2, u3), and compares against the frame-based
//! engine at rational sample fields.
//!
//! Nothing here touches the engine's connection/curvature/field-calculus
//! code paths: the only shared machinery is rational-polynomial
//! arithmetic. The oracle works on the Heisenberg model, whose chart
//! metric is dx^2 + (dy - x dz)^2 + dz^2, so every quantity stays a
//! polynomial (det g = 1) and the comparison is exact.
//!
//! This is the computation that settles the aggregate-factor discrepancy
//! reported by acceptance criteria 5 and 7: the bitension's horizontal
//! part carries the factor 8 + 2a^2 + 2g^2 - b^2, matching the engine's
//! term-by-term sum.

use std::collections::BTreeMap;
use std::sync::Arc;

use sesqui_core::{Derivation, Frame, FrameAlgebra, Poly, Rat, Symbols, VectorFieldExpr};

const X: usize = 0; // chart coordinate x
const U: [usize; 3] = [1, 2, 3]; // fiber coordinates u1, u2, u3

fn symbols() -> Arc<Symbols> {
    Symbols::with_cap(vec!["x", "u1", "u2", "u3"], 64)
}

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d).unwrap()
}

struct Chart {
    s: Arc<Symbols>,
    /// coordinate derivatives d/dx, d/dy, d/dz, d/du1, d/du2, d/du3
    partials: Vec<Derivation>,
}

impl Chart {
    fn new() -> Self {
        let s = symbols();
        let d_of = |target: Option<usize>| {
            let mut action = BTreeMap::new();
            for i in 0..4 {
                action.insert(
                    i,
                    if Some(i) == target {
                        Poly::one(&s)
                    } else {
                        Poly::zero(&s)
                    },
                );
            }
            Derivation::new(action)
        };
        // y and z never occur in the metric, so their partials kill
        // every symbol
        let partials = vec![
            d_of(Some(X)),
            d_of(None),
            d_of(None),
            d_of(Some(U[0])),
            d_of(Some(U[1])),
            d_of(Some(U[2])),
        ];
        Chart { s, partials }
    }

    fn zero(&self) -> Poly {
        Poly::zero(&self.s)
    }

    fn one(&self) -> Poly {
        Poly::one(&self.s)
    }

    fn constant(&self, r: Rat) -> Poly {
        Poly::constant(&self.s, r)
    }

    fn var(&self, i: usize) -> Poly {
        Poly::symbol_at(&self.s, i)
    }

    fn d(&self, coord: usize, p: &Poly) -> Poly {
        self.partials[coord].apply(p).unwrap()
    }
}

fn mat_mul(a: &[Vec<Poly>], b: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let zero = a[0][0].sub(&a[0][0]).unwrap();
    let mut out = vec![vec![zero; m]; n];
    for i in 0..n {
        for j in 0..m {
            for l in 0..k {
                out[i][j] = out[i][j].add(&a[i][l].mul(&b[l][j]).unwrap()).unwrap();
            }
        }
    }
    out
}

fn transpose(a: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    let n = a.len();
    let m = a[0].len();
    (0..m)
        .map(|j| (0..n).map(|i| a[i][j].clone()).collect())
        .collect()
}

fn assert_identity(c: &Chart, m: &[Vec<Poly>]) {
    for (i, row) in m.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            let want = if i == j { c.one() } else { c.zero() };
            assert_eq!(entry, &want, "identity check failed at ({i}, {j})");
        }
    }
}

/// Full polynomial composition: replaces each listed symbol by a
/// polynomial.
fn compose(p: &Poly, map: &BTreeMap<usize, Poly>) -> Poly {
    let s = p.symbols();
    let mut acc = Poly::zero(s);
    for (mono, coeff) in p.terms() {
        let mut term = Poly::constant(s, coeff.clone());
        for (i, &e) in mono.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let factor = match map.get(&i) {
                Some(repl) => repl.pow(e as u32).unwrap(),
                None => Poly::symbol_at(s, i).pow(e as u32).unwrap(),
            };
            term = term.mul(&factor).unwrap();
        }
        acc = acc.add(&term).unwrap();
    }
    acc
}

struct BundleGeometry {
    chart: Chart,
    /// base metric and inverse, functions of x
    ginv_base: Vec<Vec<Poly>>,
    /// base Christoffels Gam[a][b][c] = Gamma^a_{bc}, functions of x
    gam_base: Vec<Vec<Vec<Poly>>>,
    /// bundle Christoffels GamT[a][b][c], functions of (x, u)
    gam_bundle: Vec<Vec<Vec<Poly>>>,
}

fn christoffels(
    chart: &Chart,
    metric: &[Vec<Poly>],
    inverse: &[Vec<Poly>],
    coord_offset: usize,
) -> Vec<Vec<Vec<Poly>>> {
    let n = metric.len();
    let mut gam = vec![vec![vec![chart.zero(); n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            for c in b..n {
                let mut sum = chart.zero();
                for dd in 0..n {
                    if inverse[a][dd].is_zero() {
                        continue;
                    }
                    let term = chart
                        .d(coord_offset + b, &metric[dd][c])
                        .add(&chart.d(coord_offset + c, &metric[dd][b]))
                        .unwrap()
                        .sub(&chart.d(coord_offset + dd, &metric[b][c]))
                        .unwrap();
                    sum = sum.add(&inverse[a][dd].mul(&term).unwrap()).unwrap();
                }
                let half = sum.scale(&rat(1, 2));
                gam[a][b][c] = half.clone();
                gam[a][c][b] = half;
            }
        }
    }
    gam
}

fn bundle_geometry() -> BundleGeometry {
    let chart = Chart::new();
    let c = &chart;
    let x = c.var(X);
    let x2 = x.mul(&x).unwrap();

    // base metric dx^2 + (dy - x dz)^2 + dz^2 in coordinates (x, y, z)
    let g = vec![
        vec![c.one(), c.zero(), c.zero()],
        vec![c.zero(), c.one(), x.neg()],
        vec![c.zero(), x.neg(), x2.add(&c.one()).unwrap()],
    ];
    let ginv = vec![
        vec![c.one(), c.zero(), c.zero()],
        vec![c.zero(), x2.add(&c.one()).unwrap(), x.clone()],
        vec![c.zero(), x.clone(), c.one()],
    ];
    assert_identity(c, &mat_mul(&g, &ginv));

    let gam_base = christoffels(c, &g, &ginv, 0);

    // A[i][a] = Gamma^i_{a k} u^k
    let mut a_mat = vec![vec![c.zero(); 3]; 3];
    for i in 0..3 {
        for a in 0..3 {
            for k in 0..3 {
                a_mat[i][a] = a_mat[i][a]
                    .add(&gam_base[i][a][k].mul(&c.var(U[k])).unwrap())
                    .unwrap();
            }
        }
    }

    // bundle metric blocks: [[g + A^T g A, A^T g], [g A, g]]
    let at = transpose(&a_mat);
    let at_g = mat_mul(&at, &g);
    let at_g_a = mat_mul(&at_g, &a_mat);
    let g_a = mat_mul(&g, &a_mat);

    let mut big_g = vec![vec![c.zero(); 6]; 6];
    let mut big_ginv = vec![vec![c.zero(); 6]; 6];
    // inverse blocks: [[ginv, -ginv A^T], [-A ginv, ginv + A ginv A^T]]
    let ginv_at = mat_mul(&ginv, &at);
    let a_ginv = mat_mul(&a_mat, &ginv);
    let a_ginv_at = mat_mul(&a_ginv, &at);
    for i in 0..3 {
        for j in 0..3 {
            big_g[i][j] = g[i][j].add(&at_g_a[i][j]).unwrap();
            big_g[i][3 + j] = at_g[i][j].clone();
            big_g[3 + i][j] = g_a[i][j].clone();
            big_g[3 + i][3 + j] = g[i][j].clone();

            big_ginv[i][j] = ginv[i][j].clone();
            big_ginv[i][3 + j] = ginv_at[i][j].neg();
            big_ginv[3 + i][j] = a_ginv[i][j].neg();
            big_ginv[3 + i][3 + j] = ginv[i][j].add(&a_ginv_at[i][j]).unwrap();
        }
    }
    assert_identity(c, &mat_mul(&big_g, &big_ginv));

    let gam_bundle = christoffels(c, &big_g, &big_ginv, 0);

    BundleGeometry {
        chart,
        ginv_base: ginv,
        gam_base,
        gam_bundle,
    }
}

struct SectionData<'g> {
    geo: &'g BundleGeometry,
    /// substitution along the section: u1 -> a, u2 -> b + g x, u3 -> g
    along: BTreeMap<usize, Poly>,
    /// dphi[i][A], constant entries
    dphi: Vec<Vec<Poly>>,
    /// bundle Christoffels restricted to the section, cached
    gam_along: Vec<Vec<Vec<Poly>>>,
    /// bundle curvature R~^A_{B C D} restricted to the section, cached
    curv_along: std::cell::RefCell<BTreeMap<(usize, usize, usize, usize), Poly>>,
}

impl<'g> SectionData<'g> {
    fn new(geo: &'g BundleGeometry, alpha: Rat, beta: Rat, gamma: Rat) -> Self {
        let c = &geo.chart;
        let mut along = BTreeMap::new();
        along.insert(U[0], c.constant(alpha));
        along.insert(U[1], c.constant(beta).add(&c.var(X).scale(&gamma)).unwrap());
        along.insert(U[2], c.constant(gamma.clone()));

        let mut dphi = vec![vec![c.zero(); 6]; 3];
        dphi[0][0] = c.one();
        dphi[1][1] = c.one();
        dphi[2][2] = c.one();
        dphi[0][4] = c.constant(gamma); // d/dx of (b + g x)

        let gam_along = geo
            .gam_bundle
            .iter()
            .map(|plane| {
                plane
                    .iter()
                    .map(|row| row.iter().map(|p| compose(p, &along)).collect())
                    .collect()
            })
            .collect();

        SectionData {
            geo,
            along,
            dphi,
            gam_along,
            curv_along: std::cell::RefCell::new(BTreeMap::new()),
        }
    }

    /// pullback covariant derivative of a section W (6 components,
    /// functions of x) in the base direction i
    fn nabla(&self, i: usize, w: &[Poly]) -> Vec<Poly> {
        let c = &self.geo.chart;
        let mut out = Vec::with_capacity(6);
        for a in 0..6 {
            let mut v = if i == 0 { c.d(X, &w[a]) } else { c.zero() };
            for b in 0..6 {
                if self.dphi[i][b].is_zero() {
                    continue;
                }
                for cc in 0..6 {
                    if w[cc].is_zero() || self.gam_along[a][b][cc].is_zero() {
                        continue;
                    }
                    v = v
                        .add(
                            &self.gam_along[a][b][cc]
                                .mul(&self.dphi[i][b])
                                .unwrap()
                                .mul(&w[cc])
                                .unwrap(),
                        )
                        .unwrap();
                }
            }
            out.push(v);
        }
        out
    }

    /// tension field of the section as a map into the bundle
    fn tension(&self) -> Vec<Poly> {
        let c = &self.geo.chart;
        let mut tau = vec![c.zero(); 6];
        for i in 0..3 {
            for j in 0..3 {
                if self.geo.ginv_base[i][j].is_zero() {
                    continue;
                }
                for a in 0..6 {
                    // second derivatives of the section vanish (it is
                    // affine in x), so only the connection terms remain
                    let mut term = c.zero();
                    for k in 0..3 {
                        if self.geo.gam_base[k][i][j].is_zero() || self.dphi[k][a].is_zero() {
                            continue;
                        }
                        term = term
                            .sub(&self.geo.gam_base[k][i][j].mul(&self.dphi[k][a]).unwrap())
                            .unwrap();
                    }
                    for b in 0..6 {
                        if self.dphi[i][b].is_zero() {
                            continue;
                        }
                        for cc in 0..6 {
                            if self.dphi[j][cc].is_zero() || self.gam_along[a][b][cc].is_zero() {
                                continue;
                            }
                            term = term
                                .add(
                                    &self.gam_along[a][b][cc]
                                        .mul(&self.dphi[i][b])
                                        .unwrap()
                                        .mul(&self.dphi[j][cc])
                                        .unwrap(),
                                )
                                .unwrap();
                        }
                    }
                    tau[a] = tau[a]
                        .add(&self.geo.ginv_base[i][j].mul(&term).unwrap())
                        .unwrap();
                }
            }
        }
        tau
    }

    /// rough Laplacian (positive spectrum) of a section along the map
    fn rough_laplacian(&self, w: &[Poly]) -> Vec<Poly> {
        let c = &self.geo.chart;
        let nw: Vec<Vec<Poly>> = (0..3).map(|j| self.nabla(j, w)).collect();
        let mut out = vec![c.zero(); 6];
        for i in 0..3 {
            for j in 0..3 {
                if self.geo.ginv_base[i][j].is_zero() {
                    continue;
                }
                let second = self.nabla(i, &nw[j]);
                for a in 0..6 {
                    let mut hess = second[a].clone();
                    for k in 0..3 {
                        if self.geo.gam_base[k][i][j].is_zero() || nw[k][a].is_zero() {
                            continue;
                        }
                        hess = hess
                            .sub(&self.geo.gam_base[k][i][j].mul(&nw[k][a]).unwrap())
                            .unwrap();
                    }
                    out[a] = out[a]
                        .sub(&self.geo.ginv_base[i][j].mul(&hess).unwrap())
                        .unwrap();
                }
            }
        }
        out
    }

    /// bundle curvature component R~^A_{BCD} restricted to the section;
    /// the coordinate derivatives of the Christoffels are taken before
    /// restriction
    fn curv(&self, a: usize, b: usize, cc: usize, dd: usize) -> Poly {
        if let Some(p) = self.curv_along.borrow().get(&(a, b, cc, dd)) {
            return p.clone();
        }
        let chart = &self.geo.chart;
        let gam = &self.geo.gam_bundle;
        let mut v = chart
            .d(cc, &gam[a][dd][b])
            .sub(&chart.d(dd, &gam[a][cc][b]))
            .unwrap();
        for e in 0..6 {
            if !gam[a][cc][e].is_zero() && !gam[e][dd][b].is_zero() {
                v = v.add(&gam[a][cc][e].mul(&gam[e][dd][b]).unwrap()).unwrap();
            }
            if !gam[a][dd][e].is_zero() && !gam[e][cc][b].is_zero() {
                v = v.sub(&gam[a][dd][e].mul(&gam[e][cc][b]).unwrap()).unwrap();
            }
        }
        let restricted = compose(&v, &self.along);
        self.curv_along
            .borrow_mut()
            .insert((a, b, cc, dd), restricted.clone());
        restricted
    }

    /// sum_i R~(tau, dphi(e_i)) dphi(e_i) with the g-trace over the base
    fn curvature_term(&self, tau: &[Poly]) -> Vec<Poly> {
        let c = &self.geo.chart;
        let mut out = vec![c.zero(); 6];
        for i in 0..3 {
            for j in 0..3 {
                if self.geo.ginv_base[i][j].is_zero() {
                    continue;
                }
                for b in 0..6 {
                    if self.dphi[j][b].is_zero() {
                        continue;
                    }
                    for cc in 0..6 {
                        if tau[cc].is_zero() {
                            continue;
                        }
                        for dd in 0..6 {
                            if self.dphi[i][dd].is_zero() {
                                continue;
                            }
                            for a in 0..6 {
                                let r = self.curv(a, b, cc, dd);
                                if r.is_zero() {
                                    continue;
                                }
                                let term = r
                                    .mul(&self.dphi[j][b])
                                    .unwrap()
                                    .mul(&tau[cc])
                                    .unwrap()
                                    .mul(&self.dphi[i][dd])
                                    .unwrap()
                                    .mul(&self.geo.ginv_base[i][j])
                                    .unwrap();
                                out[a] = out[a].add(&term).unwrap();
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// evaluate a section at the origin and split into horizontal and
    /// vertical frame parts (at x = 0 the frame equals the coordinate
    /// frame, and the vertical part corrects by the connection)
    fn frame_split(&self, w: &[Poly], u0: &[Rat; 3]) -> ([Rat; 3], [Rat; 3]) {
        let at0 = |p: &Poly| -> Rat {
            let mut assign = BTreeMap::new();
            assign.insert("x".to_string(), Rat::zero());
            // fiber coordinates were already substituted away
            assign.insert("u1".to_string(), Rat::zero());
            assign.insert("u2".to_string(), Rat::zero());
            assign.insert("u3".to_string(), Rat::zero());
            p.substitute(&assign).unwrap()
        };
        let h = [at0(&w[0]), at0(&w[1]), at0(&w[2])];
        let mut v = [at0(&w[3]), at0(&w[4]), at0(&w[5])];
        for (i, vi) in v.iter_mut().enumerate() {
            for j in 0..3 {
                for k in 0..3 {
                    let g0 = at0(&self.geo.gam_base[i][j][k]);
                    *vi = &*vi + &(&(&g0 * &h[j]) * &u0[k]);
                }
            }
        }
        (h, v)
    }
}

/// Engine-side values at a constant rational field, for comparison.
fn engine_pair(alpha: &Rat, beta: &Rat, gamma: &Rat) -> ([Rat; 3], [Rat; 3], [Rat; 3], [Rat; 3]) {
    let frame =
        Frame::left_invariant(FrameAlgebra::nil(), Symbols::new(vec!["a", "b", "g"])).unwrap();
    let x = VectorFieldExpr::new(vec![
        Poly::constant(&frame.symbols, alpha.clone()),
        Poly::constant(&frame.symbols, beta.clone()),
        Poly::constant(&frame.symbols, gamma.clone()),
    ]);
    let tau = frame.tau(&x).unwrap();
    let bitension = frame.tau_sesqui(&x, &Rat::zero(), &Rat::one()).unwrap();
    let consts = |f: &VectorFieldExpr| -> [Rat; 3] {
        [
            f.coeff(0).constant_term(),
            f.coeff(1).constant_term(),
            f.coeff(2).constant_term(),
        ]
    };
    (
        consts(&tau.horizontal),
        consts(&tau.vertical),
        consts(&bitension.horizontal),
        consts(&bitension.vertical),
    )
}

#[test]
fn chart_oracle_confirms_tension_and_bitension() {
    let geo = bundle_geometry();

    // spot check the base curvature against the frame table at the origin:
    // R(d_x, d_y) d_y = 1/4 d_x there
    {
        let c = &geo.chart;
        let gam = &geo.gam_base;
        let mut r = vec![c.zero(); 3];
        for a in 0..3 {
            // R^a_{b c d} with b = 1 (second slot), c = 0, d = 1
            let mut v = c.d(0, &gam[a][1][1]).sub(&c.d(1, &gam[a][0][1])).unwrap();
            for e in 0..3 {
                v = v.add(&gam[a][0][e].mul(&gam[e][1][1]).unwrap()).unwrap();
                v = v.sub(&gam[a][1][e].mul(&gam[e][0][1]).unwrap()).unwrap();
            }
            r[a] = v;
        }
        let mut assign = BTreeMap::new();
        for name in ["x", "u1", "u2", "u3"] {
            assign.insert(name.to_string(), Rat::zero());
        }
        assert_eq!(r[0].substitute(&assign).unwrap(), rat(1, 4));
        assert!(r[1].substitute(&assign).unwrap().is_zero());
        assert!(r[2].substitute(&assign).unwrap().is_zero());
    }

    for (a, b, g) in [(1i64, 1i64, 1i64), (1, 2, 3)] {
        let alpha = Rat::int(a);
        let beta = Rat::int(b);
        let gamma = Rat::int(g);
        let u0 = [alpha.clone(), beta.clone(), gamma.clone()];

        let section = SectionData::new(&geo, alpha.clone(), beta.clone(), gamma.clone());
        let tau = section.tension();
        let (tau_h, tau_v) = section.frame_split(&tau, &u0);

        let (want_tau_h, want_tau_v, want_bi_h, want_bi_v) = engine_pair(&alpha, &beta, &gamma);
        assert_eq!(tau_h, want_tau_h, "tension horizontal at ({a},{b},{g})");
        assert_eq!(tau_v, want_tau_v, "tension vertical at ({a},{b},{g})");

        // bitension = rough Laplacian of the tension minus the curvature
        // trace term
        let lap = section.rough_laplacian(&tau);
        let curv = section.curvature_term(&tau);
        let bitension: Vec<Poly> = lap
            .iter()
            .zip(curv.iter())
            .map(|(l, c)| l.sub(c).unwrap())
            .collect();
        let (bi_h, bi_v) = section.frame_split(&bitension, &u0);
        assert_eq!(bi_h, want_bi_h, "bitension horizontal at ({a},{b},{g})");
        assert_eq!(bi_v, want_bi_v, "bitension vertical at ({a},{b},{g})");

        // the disputed scalar: the horizontal part carries
        // (8 + 2a^2 + 2g^2 - b^2)/16 times (bg, 0, -ab)
        let factor = rat(8 + 2 * a * a + 2 * g * g - b * b, 16);
        assert_eq!(bi_h[0], &(&beta * &gamma) * &factor);
        assert!(bi_h[1].is_zero());
        assert_eq!(bi_h[2], -&(&(&alpha * &beta) * &factor));
    }
}
