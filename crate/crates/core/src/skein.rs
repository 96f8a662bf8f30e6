//! Relative skein algebras of the three-holed sphere, four-holed sphere and
//! one-holed torus: presentations, operator representations, the curve
//! families `gamma_n`, and the Z2-invariant images on the torus.
//!
//! Boundary curves are central and enter as the scalars
//! `delta_i = -(lambda_i + lambda_i^-1)`.

use crate::coeff::{Coeff, GaussRat};
use crate::daha::{self, a1_closed_forms, a1_v, build_cc_rep, spherical_cc, tau_form, varpi_form, DahaError};
use crate::exactring::{RingError, SymbolTable};
use crate::params::Ctx;
use crate::presentation::{Presentation, PresentationError, Relation, RepMap};
use crate::qdiffop::OpError;
use crate::{Op, Poly, Scalar};
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("gamma range must be at least 1, got {0}")]
    RangeError(u32),
    #[error("closed form mismatch: {0}")]
    ClosedFormMismatch(String),
    #[error("operation not defined for surface {0:?}")]
    WrongSurface(Surface),
    #[error(transparent)]
    Daha(#[from] DahaError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Op(#[from] OpError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Surface {
    S03,
    S04,
    S11,
}

#[derive(Clone, Debug)]
pub struct SkeinSpec {
    pub surface: Surface,
    pub presentation: Presentation<GaussRat>,
    pub lambdas: Vec<String>,
}

fn sym(t: &SymbolTable, n: &str) -> Scalar {
    Scalar::symbol(t, n).expect("declared parameter")
}

/// `delta = -(lambda + lambda^-1)` for the boundary parameter `name`.
pub fn delta(t: &SymbolTable, name: &str) -> Scalar {
    let l = sym(t, name);
    l.add(&l.inv().expect("symbol is invertible")).neg()
}

/// The presentation of the relative skein algebra, relations as printed.
pub fn build_skein(surface: Surface) -> SkeinSpec {
    let lambdas: Vec<String> = match surface {
        Surface::S03 => (1..=3).map(|i| format!("l{}", i)).collect(),
        Surface::S04 => (1..=4).map(|i| format!("l{}", i)).collect(),
        Surface::S11 => vec!["l".to_string()],
    };
    let mut names = vec!["A".to_string()];
    names.extend(lambdas.iter().cloned());
    let p = SymbolTable::new(names).expect("fixed table");
    let a = sym(&p, "A");
    let ap = |k: i32| a.pow(k).expect("A is invertible");
    let (generators, relations): (&[&str], Vec<Relation<GaussRat>>) = match surface {
        Surface::S03 => (&[], vec![]),
        Surface::S04 => {
            let d: Vec<Scalar> = lambdas.iter().map(|l| delta(&p, l)).collect();
            let dd = |i: usize, j: usize| d[i - 1].mul(&d[j - 1]);
            let d24_13 = dd(2, 4).add(&dd(1, 3));
            let d12_34 = dd(1, 2).add(&dd(3, 4));
            let d14_23 = dd(1, 4).add(&dd(2, 3));
            let a4d = ap(4).sub(&ap(-4));
            let a2d = ap(2).sub(&ap(-2));
            let comm = |label: &str, ab: &str, ba: &str, c: &str, k: &Scalar| {
                Relation::parse(
                    label,
                    vec![(ap(2), ab), (ap(-2).neg(), ba), (a4d.neg(), c), (a2d.mul(k).neg(), "")],
                )
            };
            let constant = d
                .iter()
                .fold(Scalar::zero(&p), |acc, x| acc.add(&x.pow(2).expect("square")))
                .add(&dd(1, 2).mul(&dd(3, 4)))
                .sub(&ap(2).add(&ap(-2)).pow(2).expect("square"));
            let quartic = Relation::parse(
                "A^2 abg = A^4 a^2 + A^-4 b^2 + A^4 g^2 + A^2 (d1d2 + d3d4) a + A^-2 (d1d4 + d2d3) b + A^2 (d2d4 + d1d3) g + sum d_i^2 + d1d2d3d4 - (A^2 + A^-2)^2",
                vec![
                    (ap(2), "alpha beta gamma"),
                    (ap(4).neg(), "alpha alpha"),
                    (ap(-4).neg(), "beta beta"),
                    (ap(4).neg(), "gamma gamma"),
                    (ap(2).mul(&d12_34).neg(), "alpha"),
                    (ap(-2).mul(&d14_23).neg(), "beta"),
                    (ap(2).mul(&d24_13).neg(), "gamma"),
                    (constant.neg(), ""),
                ],
            );
            (
                &["alpha", "beta", "gamma"],
                vec![
                    comm("A^2 ab - A^-2 ba = (A^4 - A^-4) g + (A^2 - A^-2)(d2d4 + d1d3)", "alpha beta", "beta alpha", "gamma", &d24_13),
                    comm("A^2 bg - A^-2 gb = (A^4 - A^-4) a + (A^2 - A^-2)(d1d2 + d3d4)", "beta gamma", "gamma beta", "alpha", &d12_34),
                    comm("A^2 ga - A^-2 ag = (A^4 - A^-4) b + (A^2 - A^-2)(d1d4 + d2d3)", "gamma alpha", "alpha gamma", "beta", &d14_23),
                    quartic,
                ],
            )
        }
        Surface::S11 => {
            let d = delta(&p, "l");
            let ad = ap(-2).sub(&ap(2));
            let comm = |label: &str, ab: &str, ba: &str, c: &str| {
                Relation::parse(label, vec![(ap(-1), ab), (ap(1).neg(), ba), (ad.neg(), c)])
            };
            let rhs = ap(2).add(&ap(-2)).sub(&d);
            let quartic = Relation::parse(
                "A^-2 a^2 + A^2 b^2 + A^-2 g^2 - A^-1 abg = A^2 + A^-2 - delta",
                vec![
                    (ap(-2), "alpha alpha"),
                    (ap(2), "beta beta"),
                    (ap(-2), "gamma gamma"),
                    (ap(-1).neg(), "alpha beta gamma"),
                    (rhs.neg(), ""),
                ],
            );
            (
                &["alpha", "beta", "gamma"],
                vec![
                    comm("A^-1 ab - A ba = (A^-2 - A^2) g", "alpha beta", "beta alpha", "gamma"),
                    comm("A^-1 bg - A gb = (A^-2 - A^2) a", "beta gamma", "gamma beta", "alpha"),
                    comm("A^-1 ga - A ag = (A^-2 - A^2) b", "gamma alpha", "alpha gamma", "beta"),
                    quartic,
                ],
            )
        }
    };
    let name = format!("relative skein algebra {:?}", surface);
    SkeinSpec {
        surface,
        presentation: Presentation::new(name, generators, p, relations).expect("well-formed presentation"),
        lambdas,
    }
}

/// Which four-holed sphere representation to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum S04Variant {
    /// The printed `U(X)` with the extracted `f_y, f_z`.
    Printed,
    /// The (C1v, C1) representation at `t1 -> i t1, t2 -> -i t2,
    /// t3 -> -i q t3, t4 -> i t4`.
    Rescaled,
}

/// A representation of a skein algebra on symmetric Laurent polynomials.
#[derive(Clone, Debug)]
pub struct SkeinRep {
    pub surface: Surface,
    pub ctx: Ctx,
    pub map: RepMap<GaussRat>,
    pub alpha: Op,
    pub beta: Op,
    pub gamma: Op,
    /// Coefficient of `tau` in the image of `beta` (four-holed sphere).
    pub u: Option<Scalar>,
    pub f_y: Option<Poly>,
    pub f_z: Option<Poly>,
}

/// The `U(X)` printed for the four-holed sphere representation.
pub fn s04_printed_u(ctx: &Ctx) -> Result<Scalar, SkeinError> {
    let x = ctx.x();
    let one = ctx.one();
    let q = ctx.q(1);
    let [t1, t2, t3, t4] = daha::cc_params(ctx);
    let f = |c: Scalar| one.sub(&q.mul(&c).mul(&x));
    let num = f(t3.mul(&t4)).mul(&f(t3.div(&t4)?)).mul(&f(t1.mul(&t2))).mul(&f(t2.div(&t1)?));
    let den = one.sub(&x.pow(2)?).mul(&one.sub(&q.pow(2)?.mul(&x.pow(2)?)));
    Ok(num.div(&den)?.div(&t2.mul(&t3))?)
}

/// `t1..t4` rescaled as in the four-holed sphere construction.
pub fn s04_rescaled_params(ctx: &Ctx) -> [Scalar; 4] {
    let [t1, t2, t3, t4] = daha::cc_params(ctx);
    let i = GaussRat::i();
    let mi = -i.clone();
    [t1.scale(&i), t2.scale(&mi), t3.mul(&ctx.q(1)).scale(&mi), t4.scale(&i)]
}

fn s04_translation(ctx: &Ctx, map: RepMap<GaussRat>) -> RepMap<GaussRat> {
    map.param("A", ctx.qh(-1))
        .param("l1", ctx.param("t1").neg())
        .param("l2", ctx.param("t2"))
        .param("l3", ctx.param("t3"))
        .param("l4", ctx.param("t4").neg())
}

/// The four-holed sphere representation; `ctx` needs `t1..t4` and `X`.
pub fn rep_s04(ctx: &Ctx, variant: S04Variant) -> Result<SkeinRep, SkeinError> {
    let cc = build_cc_rep(ctx, s04_rescaled_params(ctx))?;
    let sph = spherical_cc(&cc)?;
    let (alpha, beta, gamma, u) = match variant {
        S04Variant::Rescaled => (sph.triple.x, sph.triple.y, sph.triple.z, sph.u),
        S04Variant::Printed => {
            let u = s04_printed_u(ctx)?;
            let x = ctx.x();
            let fy = Scalar::from_poly(sph.f_y.clone());
            let fz = Scalar::from_poly(sph.f_z.clone());
            (
                ctx.mult(x.add(&x.inv()?)),
                tau_form(ctx, &u, &fy),
                tau_form(ctx, &ctx.q(1).mul(&x).mul(&u), &fz),
                u,
            )
        }
    };
    let map = s04_translation(
        ctx,
        RepMap::new(&ctx.space)
            .image("alpha", alpha.clone())
            .image("beta", beta.clone())
            .image("gamma", gamma.clone()),
    );
    Ok(SkeinRep {
        surface: Surface::S04,
        ctx: ctx.clone(),
        map,
        alpha,
        beta,
        gamma,
        u: Some(u),
        f_y: Some(sph.f_y),
        f_z: Some(sph.f_z),
    })
}

/// The one-holed torus representation; `ctx` needs `th` and `X`.
pub fn rep_s11(ctx: &Ctx) -> Result<SkeinRep, SkeinError> {
    let th = ctx.param("th");
    let [alpha, beta, gamma] = a1_closed_forms(ctx, &th)?;
    let map = RepMap::new(&ctx.space)
        .image("alpha", alpha.clone())
        .image("beta", beta.clone())
        .image("gamma", gamma.clone())
        .param("A", ctx.qh(-1))
        .param("l", ctx.q(-1).mul(&th.pow(2)?));
    Ok(SkeinRep { surface: Surface::S11, ctx: ctx.clone(), map, alpha, beta, gamma, u: None, f_y: None, f_z: None })
}

/// Images of `gamma_n` for `|n| <= range`, with the recovered constants.
#[derive(Clone, Debug)]
pub struct GammaFamily {
    pub surface: Surface,
    pub images: BTreeMap<i32, Op>,
    /// `alpha gamma_m - A^2 gamma_(m+1) - A^-2 gamma_(m-1)` (four-holed
    /// sphere only), for `|m| < range`.
    pub c_prime: BTreeMap<i32, Op>,
}

/// Runs the curve recursion outward from `gamma_0 = beta`, `gamma_1 = gamma`.
pub fn gamma_family(rep: &SkeinRep, range: u32) -> Result<GammaFamily, SkeinError> {
    if range < 1 {
        return Err(SkeinError::RangeError(range));
    }
    let ctx = &rep.ctx;
    let n = range as i32;
    let a = ctx.qh(-1);
    let ap = |k: i32| a.pow(k).expect("A is invertible");
    let al = &rep.alpha;
    let mut images = BTreeMap::new();
    images.insert(0, rep.beta.clone());
    images.insert(1, rep.gamma.clone());
    match rep.surface {
        Surface::S11 => {
            for m in 1..n {
                // gamma_(m+1) = A alpha gamma_m - A^2 gamma_(m-1)
                let next = al.compose(&images[&m]).scale(&ap(1)).sub(&images[&(m - 1)].scale(&ap(2)));
                images.insert(m + 1, next);
            }
            for m in (-n + 1..=0).rev() {
                // gamma_(m-1) = A^-1 alpha gamma_m - A^-2 gamma_(m+1)
                let prev = al.compose(&images[&m]).scale(&ap(-1)).sub(&images[&(m + 1)].scale(&ap(-2)));
                images.insert(m - 1, prev);
            }
            Ok(GammaFamily { surface: Surface::S11, images, c_prime: BTreeMap::new() })
        }
        Surface::S04 => {
            let comm = |g: &Op| g.compose(al).sub(&al.compose(g));
            let fwd = ap(-2).sub(&ap(2)).inv()?;
            let bwd = ap(2).sub(&ap(-2)).inv()?;
            for m in 1..n {
                let g = &images[&m];
                let next = comm(g).sub(&images[&(m - 1)].scale(&ap(2).sub(&ap(-2)))).scale(&fwd);
                images.insert(m + 1, next);
            }
            for m in (-n + 1..=0).rev() {
                let g = &images[&m];
                let prev = comm(g).sub(&images[&(m + 1)].scale(&ap(-2).sub(&ap(2)))).scale(&bwd);
                images.insert(m - 1, prev);
            }
            let mut c_prime = BTreeMap::new();
            for m in -n + 1..n {
                let c = al
                    .compose(&images[&m])
                    .sub(&images[&(m + 1)].scale(&ap(2)))
                    .sub(&images[&(m - 1)].scale(&ap(-2)));
                c_prime.insert(m, c);
            }
            Ok(GammaFamily { surface: Surface::S04, images, c_prime })
        }
        s => Err(SkeinError::WrongSurface(s)),
    }
}

/// Closed form `q^(-n/2) X^-n V(X) varpi + q^(-n/2) X^n V(X^-1) varpi^-1`.
pub fn s11_gamma_closed(ctx: &Ctx, n: i32) -> Result<Op, SkeinError> {
    let v = a1_v(ctx, &ctx.param("th"))?;
    Ok(varpi_form(ctx, &ctx.qh(-n).mul(&ctx.x_pow(-n as i16)).mul(&v)))
}

/// Decomposes a four-holed sphere `gamma_n` image as
/// `q^n X^n U (tau - 1) + q^n X^-n U(1/X) (tau^-1 - 1) + f_n`; returns
/// `f_n` when the shape matches and `f_n` is symmetric Laurent.
pub fn s04_decompose(ctx: &Ctx, u: &Scalar, n: i32, op: &Op) -> Result<Poly, String> {
    let a = ctx.q(n).mul(&ctx.x_pow(n as i16)).mul(u);
    let f = op.apply(&ctx.one());
    let expected = tau_form(ctx, &a, &f);
    if !op.eq_op(&expected) {
        return Err(op.sub(&expected).to_text());
    }
    ctx.symmetric_laurent(&f).ok_or_else(|| format!("f_{} not symmetric Laurent: {}", n, f))
}

/// Images of the Z2-invariant generators `alpha, beta^2, gamma beta, gamma^2`.
pub fn z2_invariant_images(rep: &SkeinRep) -> BTreeMap<&'static str, Op> {
    let mut m = BTreeMap::new();
    m.insert("alpha", rep.alpha.clone());
    m.insert("beta^2", rep.beta.compose(&rep.beta));
    m.insert("gamma beta", rep.gamma.compose(&rep.beta));
    m.insert("gamma^2", rep.gamma.compose(&rep.gamma));
    m
}

/// Applies `beta -> -beta, gamma -> -gamma` to every relation and checks
/// that the result is, up to sign, a relation of the presentation.
pub fn z2_symmetry_check(pres: &Presentation<GaussRat>) -> Vec<bool> {
    let sign = |w: &[String]| {
        if w.iter().filter(|g| *g == "beta" || *g == "gamma").count() % 2 == 0 {
            1
        } else {
            -1
        }
    };
    let same = |a: &Relation<GaussRat>, b: &Relation<GaussRat>, s: i64| {
        a.terms.len() == b.terms.len()
            && a.terms.iter().all(|(c, w)| {
                b.terms.iter().any(|(c2, w2)| w == w2 && c.scale(&GaussRat::from_i64(s)).eq_exact(c2))
            })
    };
    pres.relations
        .iter()
        .map(|r| {
            let image = Relation {
                label: r.label.clone(),
                terms: r.terms.iter().map(|(c, w)| (c.scale(&GaussRat::from_i64(sign(w))), w.clone())).collect(),
            };
            pres.relations.iter().any(|r2| same(&image, r2, 1) || same(&image, r2, -1))
        })
        .collect()
}
