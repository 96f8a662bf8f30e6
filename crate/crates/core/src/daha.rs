//! Polynomial representations of the rank one double affine Hecke algebras
//! of type (C1v, C1) and A1, their idempotents and spherical generators.
//!
//! Raw spherical operators are built exactly as products of the Hecke
//! operators and then folded onto the symmetric subspace. A folded operator
//! is reflection free, and a reflection-free operator with shifts in
//! `{tau^-1, 1, tau}` is determined by its action on `X^n + X^-n`, so
//! comparisons of folded operators are exact statements on symmetric
//! functions.

use crate::coeff::GaussRat;
use crate::exactring::{RingError, SymbolTable};
use crate::params::Ctx;
use crate::presentation::{Presentation, PresentationError, Relation, RepMap};
use crate::qdiffop::{OpError, Subst};
use crate::{Op, Poly, Scalar};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DahaError {
    #[error("quadratic relation fails for {0}")]
    QuadraticRelationFails(String),
    #[error("braid relation fails: {0}")]
    BraidRelationFails(String),
    #[error("idempotent check fails")]
    IdempotentFails,
    #[error("candidate readings not resolved: {0}")]
    AmbiguityUnresolved(String),
    #[error("closed form mismatch: {0}")]
    ClosedFormMismatch(String),
    #[error(transparent)]
    Op(#[from] OpError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// `(T - u)(T + 1/u)`.
fn quadratic(ctx: &Ctx, t: &Op, u: &Scalar) -> Result<Op, DahaError> {
    let id = ctx.id();
    Ok(t.sub(&id.scale(u)).compose(&t.add(&id.scale(&u.inv()?))))
}

fn hecke_inverse(t: &Op, u: &Scalar, name: &str) -> Result<Op, DahaError> {
    t.invert_hecke(u, &u.inv()?).map_err(|e| match e {
        OpError::QuadraticRelationFails(_) => DahaError::QuadraticRelationFails(name.to_string()),
        other => other.into(),
    })
}

/// Operators `T1..T4` (index 0 is `T1`), their inverses and the idempotent.
#[derive(Clone, Debug)]
pub struct CCRep {
    pub ctx: Ctx,
    pub t: [Scalar; 4],
    pub hecke: [Op; 4],
    pub hecke_inv: [Op; 4],
    pub e: Op,
}

/// `t1..t4` of the context, unscaled.
pub fn cc_params(ctx: &Ctx) -> [Scalar; 4] {
    ["t1", "t2", "t3", "t4"].map(|n| ctx.param(n))
}

/// Builds the (C1v, C1) polynomial representation at parameter values `t`
/// and verifies the defining relations.
pub fn build_cc_rep(ctx: &Ctx, t: [Scalar; 4]) -> Result<CCRep, DahaError> {
    let s = &ctx.space;
    let x = ctx.x();
    let one = ctx.one();
    let q = ctx.q(1);
    let [t1, t2, t3, t4] = t.clone();
    let sigma = Op::sigma(s);
    let sigma_tau = sigma.compose(&Op::tau(s));
    let id = ctx.id();

    let c3 = one
        .sub(&t3.mul(&t4).mul(&x))
        .mul(&one.add(&t3.div(&t4)?.mul(&x)))
        .div(&one.sub(&x.pow(2)?))?
        .div(&t3)?;
    let th3 = id.scale(&t3).add(&ctx.mult(c3).compose(&sigma.sub(&id)));
    let xi = x.inv()?;
    let c2 = one
        .sub(&q.mul(&t1).mul(&t2).mul(&xi))
        .mul(&one.add(&q.mul(&t2).div(&t1)?.mul(&xi)))
        .div(&one.sub(&q.pow(2)?.mul(&xi.pow(2)?)))?
        .div(&t2)?;
    let th2 = id.scale(&t2).add(&ctx.mult(c2).compose(&sigma_tau.sub(&id)));

    let th3_inv = hecke_inverse(&th3, &t3, "T3")?;
    let th2_inv = hecke_inverse(&th2, &t2, "T2")?;
    let mx = ctx.mult(x.clone());
    let mxi = ctx.mult(xi.clone());
    let th4 = mxi.compose(&th3_inv);
    let th4_inv = th3.compose(&mx);
    let th1 = th2_inv.compose(&mx).scale(&q.inv()?);
    let th1_inv = mxi.compose(&th2).scale(&q);

    for (name, op, u) in [("T1", &th1, &t1), ("T4", &th4, &t4)] {
        if !quadratic(ctx, op, u)?.is_zero() {
            return Err(DahaError::QuadraticRelationFails(name.to_string()));
        }
    }
    let prod = th4.compose(&th3).compose(&th2).compose(&th1);
    let target = id.scale(&q.inv()?);
    if !prod.eq_op(&target) {
        return Err(DahaError::BraidRelationFails(format!("T4 T3 T2 T1 - q^-1 = {}", prod.sub(&target))));
    }
    let e = th3.add(&id.scale(&t3.inv()?)).scale(&t3.add(&t3.inv()?).inv()?);
    if !e.compose(&e).eq_op(&e) {
        return Err(DahaError::IdempotentFails);
    }
    Ok(CCRep {
        ctx: ctx.clone(),
        t,
        hecke: [th1, th2, th3, th4],
        hecke_inv: [th1_inv, th2_inv, th3_inv, th4_inv],
        e,
    })
}

/// Spherical generators: folded reflection-free operators and the raw
/// products they come from.
#[derive(Clone, Debug)]
pub struct SphericalTriple {
    pub x: Op,
    pub y: Op,
    pub z: Op,
    pub raw: [Op; 3],
}

/// `U(X)` of the (C1v, C1) spherical representation at parameters `t`.
pub fn cc_u(ctx: &Ctx, t: &[Scalar; 4]) -> Result<Scalar, DahaError> {
    let x = ctx.x();
    let one = ctx.one();
    let q = ctx.q(1);
    let [t1, t2, t3, t4] = t;
    let num = one
        .sub(&t3.mul(t4).mul(&x))
        .mul(&one.add(&t3.div(t4)?.mul(&x)))
        .mul(&one.sub(&q.mul(t1).mul(t2).mul(&x)))
        .mul(&one.add(&q.mul(t2).div(t1)?.mul(&x)));
    let den = one.sub(&x.pow(2)?).mul(&one.sub(&q.pow(2)?.mul(&x.pow(2)?)));
    Ok(num.div(&den)?.div(&t2.mul(t3))?)
}

/// `a(X)(tau - 1) + a(1/X)(tau^-1 - 1) + f`.
pub fn tau_form(ctx: &Ctx, a: &Scalar, f: &Scalar) -> Op {
    let s = &ctx.space;
    let ar = ctx.reflect(a);
    Op::term(s, a.clone(), Subst::single(1, 4))
        .add(&Op::term(s, ar.clone(), Subst::single(1, -4)))
        .add(&ctx.mult(f.sub(a).sub(&ar)))
}

/// Output of [`spherical_cc`] with the extracted constants.
#[derive(Clone, Debug)]
pub struct CCSpherical {
    pub triple: SphericalTriple,
    pub u: Scalar,
    pub f_y: Poly,
    pub f_z: Poly,
}

/// Builds `x, y, z` of the (C1v, C1) spherical DAHA, folds them and
/// certifies the closed `U(X)` forms.
pub fn spherical_cc(rep: &CCRep) -> Result<CCSpherical, DahaError> {
    let ctx = &rep.ctx;
    let [t1, t2, t3, t4] = &rep.hecke;
    let [t1i, t2i, t3i, t4i] = &rep.hecke_inv;
    let e = &rep.e;
    let pair = |a: &Op, b: &Op, ai: &Op, bi: &Op| a.compose(b).add(&bi.compose(ai)).compose(e);
    let raw = [pair(t4, t3, t4i, t3i), pair(t3, t2, t3i, t2i), pair(t3, t1, t3i, t1i)];
    let x = raw[0].fold_symmetric()?;
    let y = raw[1].fold_symmetric()?;
    let z = raw[2].fold_symmetric()?;

    let xs = ctx.x();
    let x_closed = ctx.mult(xs.add(&xs.inv()?));
    if !x.eq_op(&x_closed) {
        return Err(DahaError::ClosedFormMismatch(format!("x: {}", x.sub(&x_closed))));
    }
    let u = cc_u(ctx, &rep.t)?;
    let one = ctx.one();
    let fy = y.apply(&one);
    let fz = z.apply(&one);
    let y_closed = tau_form(ctx, &u, &fy);
    if !y.eq_op(&y_closed) {
        return Err(DahaError::ClosedFormMismatch(format!("y: {}", y.sub(&y_closed))));
    }
    let z_closed = tau_form(ctx, &ctx.q(1).mul(&xs).mul(&u), &fz);
    if !z.eq_op(&z_closed) {
        return Err(DahaError::ClosedFormMismatch(format!("z: {}", z.sub(&z_closed))));
    }
    let f_y = ctx
        .symmetric_laurent(&fy)
        .ok_or_else(|| DahaError::ClosedFormMismatch(format!("f_y not symmetric Laurent: {}", fy)))?;
    let f_z = ctx
        .symmetric_laurent(&fz)
        .ok_or_else(|| DahaError::ClosedFormMismatch(format!("f_z not symmetric Laurent: {}", fz)))?;
    Ok(CCSpherical { triple: SphericalTriple { x, y, z, raw }, u, f_y, f_z })
}

fn sym(t: &SymbolTable, n: &str) -> Scalar {
    Scalar::symbol(t, n).expect("declared parameter")
}

/// The (C1v, C1) spherical DAHA presentation over `qh, t1..t4`.
pub fn cc_presentation() -> Presentation<GaussRat> {
    let p = SymbolTable::new(["qh", "t1", "t2", "t3", "t4"]).expect("fixed table");
    let qh = sym(&p, "qh");
    let q = qh.pow(2).unwrap();
    let qi = q.inv().unwrap();
    let t: Vec<Scalar> = ["t1", "t2", "t3", "t4"].iter().map(|n| sym(&p, n)).collect();
    let s = |i: usize| t[i].sub(&t[i].inv().unwrap());
    let s1 = s(0);
    let s2 = s(1);
    let s3 = qi.mul(&t[2]).sub(&q.mul(&t[2].inv().unwrap()));
    let s4 = s(3);
    let l = s2.mul(&s4).add(&s3.mul(&s1));
    let m = s1.mul(&s2).add(&s3.mul(&s4));
    let n = s1.mul(&s4).add(&s3.mul(&s2));
    let one = Scalar::one(&p);
    let q2d = qi.pow(2).unwrap().sub(&q.pow(2).unwrap());
    let q1d = qi.sub(&q);
    let comm = |label: &str, ab: &str, ba: &str, c: &str, k: &Scalar| {
        Relation::parse(
            label,
            vec![(qi.clone(), ab), (q.neg(), ba), (q2d.neg(), c), (q1d.mul(k), "")],
        )
    };
    let constant = s1
        .pow(2)
        .unwrap()
        .add(&s2.pow(2).unwrap())
        .add(&s3.pow(2).unwrap())
        .add(&s4.pow(2).unwrap())
        .sub(&s1.mul(&s2).mul(&s3).mul(&s4))
        .add(&q.add(&qi).pow(2).unwrap());
    let quartic = Relation::parse(
        "q^-1 xyz = q^-2 x^2 + q^2 y^2 + q^-2 z^2 - q^-1 M x - q N y - q^-1 L z - sum s_i^2 + s1 s2 s3 s4 - (q + q^-1)^2",
        vec![
            (qi.clone(), "x y z"),
            (qi.pow(2).unwrap().neg(), "x x"),
            (q.pow(2).unwrap().neg(), "y y"),
            (qi.pow(2).unwrap().neg(), "z z"),
            (qi.mul(&m), "x"),
            (q.mul(&n), "y"),
            (qi.mul(&l), "z"),
            (constant, ""),
        ],
    );
    let _ = one;
    Presentation::new(
        "spherical DAHA (C1v,C1)",
        &["x", "y", "z"],
        p,
        vec![
            comm("q^-1 xy - q yx = (q^-2 - q^2) z - (q^-1 - q) L", "x y", "y x", "z", &l),
            comm("q^-1 yz - q zy = (q^-2 - q^2) x - (q^-1 - q) M", "y z", "z y", "x", &m),
            comm("q^-1 zx - q xz = (q^-2 - q^2) y - (q^-1 - q) N", "z x", "x z", "y", &n),
            quartic,
        ],
    )
    .expect("well-formed presentation")
}

/// Representation map of the (C1v, C1) presentation on a spherical triple.
pub fn cc_rep_map(rep: &CCRep, sph: &SphericalTriple) -> RepMap<GaussRat> {
    let ctx = &rep.ctx;
    let mut m = RepMap::new(&ctx.space)
        .image("x", sph.x.clone())
        .image("y", sph.y.clone())
        .image("z", sph.z.clone())
        .param("qh", ctx.qh(1));
    for (i, n) in ["t1", "t2", "t3", "t4"].iter().enumerate() {
        m = m.param(n, rep.t[i].clone());
    }
    m
}

/// How the printed A1 Hecke operator is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum A1Tail {
    /// `t^(1/2) sigma + c(X)`.
    Multiplication,
    /// `t^(1/2) sigma + c(X)(sigma - 1)`.
    SigmaMinusOne,
}

/// Composition order for `Y = sigma varpi T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum A1Order {
    /// `sigma o varpi o T`, `T` acting first.
    TFirst,
    /// `T o varpi o sigma`, `sigma` acting first.
    SigmaFirst,
}

/// Outcome of one candidate reading.
#[derive(Clone, Debug)]
pub struct A1Candidate {
    pub tail: A1Tail,
    pub order: A1Order,
    pub quadratic: bool,
    /// `TXT = X^-1`, `T Y^-1 T = Y`, `Y^-1 X^-1 Y X T^2 = q^-1`.
    pub relations: [bool; 3],
    pub note: String,
}

impl A1Candidate {
    pub fn passes(&self) -> bool {
        self.quadratic && self.relations.iter().all(|&b| b)
    }

    pub fn describe(&self) -> String {
        format!("tail {:?}, order {:?}", self.tail, self.order)
    }
}

#[derive(Clone, Debug)]
pub struct A1Rep {
    pub ctx: Ctx,
    pub th: Scalar,
    pub t: Op,
    pub t_inv: Op,
    pub x: Op,
    pub x_inv: Op,
    pub y: Op,
    pub y_inv: Op,
    pub e: Op,
    pub candidates: Vec<A1Candidate>,
}

fn a1_candidate(
    ctx: &Ctx,
    th: &Scalar,
    tail: A1Tail,
    order: A1Order,
) -> Result<(A1Candidate, Option<(Op, Op, Op, Op)>), DahaError> {
    let s = &ctx.space;
    let x = ctx.x();
    let id = ctx.id();
    let sigma = Op::sigma(s);
    let c = th.sub(&th.inv()?).div(&x.pow(2)?.sub(&ctx.one()))?;
    let tail_op = match tail {
        A1Tail::Multiplication => ctx.mult(c),
        A1Tail::SigmaMinusOne => ctx.mult(c).compose(&sigma.sub(&id)),
    };
    let t = sigma.scale(th).add(&tail_op);
    let quad = quadratic(ctx, &t, th)?;
    let mut cand = A1Candidate { tail, order, quadratic: quad.is_zero(), relations: [false; 3], note: String::new() };
    if !cand.quadratic {
        cand.note = format!("(T - t^1/2)(T + t^-1/2) = {}", quad);
        return Ok((cand, None));
    }
    let t_inv = hecke_inverse(&t, th, "T")?;
    let varpi = Op::varpi(s);
    let varpi_inv = Op::shift(s, 1, -2);
    let (y, y_inv) = match order {
        A1Order::TFirst => (sigma.compose(&varpi).compose(&t), t_inv.compose(&varpi_inv).compose(&sigma)),
        A1Order::SigmaFirst => (t.compose(&varpi).compose(&sigma), sigma.compose(&varpi_inv).compose(&t_inv)),
    };
    let mx = ctx.mult(x.clone());
    let mxi = ctx.mult(x.inv()?);
    let r1 = t.compose(&mx).compose(&t).sub(&mxi);
    let r2 = t.compose(&y_inv).compose(&t).sub(&y);
    let r3 = y_inv
        .compose(&mxi)
        .compose(&y)
        .compose(&mx)
        .compose(&t)
        .compose(&t)
        .sub(&id.scale(&ctx.q(-1)));
    cand.relations = [r1.is_zero(), r2.is_zero(), r3.is_zero()];
    if !cand.passes() {
        let failing: Vec<String> = [("TXT", &r1), ("TY^-1T", &r2), ("Y^-1X^-1YXT^2", &r3)]
            .iter()
            .filter(|(_, r)| !r.is_zero())
            .map(|(n, r)| format!("{} residual has {} terms", n, r.terms().len()))
            .collect();
        cand.note = failing.join("; ");
    }
    Ok((cand, Some((t, t_inv, y, y_inv))))
}

/// Builds the A1 representation, resolving the two ambiguities of the
/// printed operators by the defining relations.
pub fn build_a1_rep(ctx: &Ctx, th: Scalar) -> Result<A1Rep, DahaError> {
    let mut candidates = Vec::new();
    let mut chosen = Vec::new();
    for tail in [A1Tail::Multiplication, A1Tail::SigmaMinusOne] {
        for order in [A1Order::TFirst, A1Order::SigmaFirst] {
            let (cand, ops) = a1_candidate(ctx, &th, tail, order)?;
            if cand.passes() {
                chosen.push(ops.expect("passing candidate has operators"));
            }
            candidates.push(cand);
        }
    }
    if chosen.len() != 1 {
        let list: Vec<String> = candidates.iter().filter(|c| c.passes()).map(|c| c.describe()).collect();
        return Err(DahaError::AmbiguityUnresolved(format!("{} candidates pass: [{}]", chosen.len(), list.join(", "))));
    }
    let (t, t_inv, y, y_inv) = chosen.pop().expect("one candidate");
    let x = ctx.x();
    let id = ctx.id();
    let e = t.add(&id.scale(&th.inv()?)).scale(&th.add(&th.inv()?).inv()?);
    if !e.compose(&e).eq_op(&e) {
        return Err(DahaError::IdempotentFails);
    }
    Ok(A1Rep {
        ctx: ctx.clone(),
        th,
        t,
        t_inv,
        x: ctx.mult(x.clone()),
        x_inv: ctx.mult(x.inv()?),
        y,
        y_inv,
        e,
        candidates,
    })
}

/// `V(X) = (t^(1/2) X - t^(-1/2) X^-1) / (X - X^-1)`.
pub fn a1_v(ctx: &Ctx, th: &Scalar) -> Result<Scalar, DahaError> {
    let x = ctx.x();
    let xi = x.inv()?;
    Ok(th.mul(&x).sub(&th.inv()?.mul(&xi)).div(&x.sub(&xi))?)
}

/// `a(X) varpi + a(1/X) varpi^-1`, the shape of the A1 spherical operators.
pub fn varpi_form(ctx: &Ctx, a: &Scalar) -> Op {
    let s = &ctx.space;
    Op::term(s, a.clone(), Subst::single(1, 2)).add(&Op::term(s, ctx.reflect(a), Subst::single(1, -2)))
}

/// Printed closed forms `(x, y, z)` of the A1 spherical representation.
pub fn a1_closed_forms(ctx: &Ctx, th: &Scalar) -> Result<[Op; 3], DahaError> {
    let x = ctx.x();
    let v = a1_v(ctx, th)?;
    Ok([
        ctx.mult(x.add(&x.inv()?)),
        varpi_form(ctx, &v),
        varpi_form(ctx, &ctx.qh(-1).mul(&x.inv()?).mul(&v)),
    ])
}

/// Builds `x, y, z` of the A1 spherical DAHA, folds them and compares with
/// the printed closed forms.
pub fn spherical_a1(rep: &A1Rep) -> Result<SphericalTriple, DahaError> {
    let ctx = &rep.ctx;
    let e = &rep.e;
    let raw = [
        rep.x.add(&rep.x_inv).compose(e),
        rep.y.add(&rep.y_inv).compose(e),
        rep.y
            .compose(&rep.x)
            .scale(&ctx.qh(1))
            .add(&rep.x_inv.compose(&rep.y_inv).scale(&ctx.qh(-1)))
            .compose(e),
    ];
    let folded: Vec<Op> = raw.iter().map(|r| r.fold_symmetric()).collect::<Result<_, _>>()?;
    let closed = a1_closed_forms(ctx, &rep.th)?;
    for (name, (f, c)) in ["x", "y", "z"].iter().zip(folded.iter().zip(closed.iter())) {
        if !f.eq_op(c) {
            return Err(DahaError::ClosedFormMismatch(format!("{}: {}", name, f.sub(c))));
        }
    }
    let [x, y, z]: [Op; 3] = folded.try_into().expect("three operators");
    Ok(SphericalTriple { x, y, z, raw })
}

/// Constant of the A1 quartic relation as printed: `t q^-1 - q t^-1 + q + q^-1`.
fn a1_quartic(label: &str, p: &SymbolTable, rhs: Scalar) -> Relation<GaussRat> {
    let qh = sym(p, "qh");
    let q = qh.pow(2).unwrap();
    let qi = q.inv().unwrap();
    Relation::parse(
        label,
        vec![
            (q.clone(), "x x"),
            (qi, "y y"),
            (q, "z z"),
            (qh.neg(), "x y z"),
            (rhs.neg(), ""),
        ],
    )
}

fn a1_table() -> SymbolTable {
    SymbolTable::new(["qh", "th"]).expect("fixed table")
}

/// The A1 spherical DAHA presentation over `qh = q^(1/2)`, `th = t^(1/2)`,
/// with the quartic relation exactly as printed.
pub fn a1_presentation() -> Presentation<GaussRat> {
    let p = a1_table();
    let qh = sym(&p, "qh");
    let th = sym(&p, "th");
    let q = qh.pow(2).unwrap();
    let qi = q.inv().unwrap();
    let t = th.pow(2).unwrap();
    let qd = q.sub(&qi);
    let comm = |label: &str, ab: &str, ba: &str, c: &str| {
        Relation::parse(label, vec![(qh.clone(), ab), (qh.inv().unwrap().neg(), ba), (qd.neg(), c)])
    };
    let rhs = t.mul(&qi).sub(&q.div(&t).unwrap()).add(&q).add(&qi);
    Presentation::new(
        "spherical DAHA A1",
        &["x", "y", "z"],
        p.clone(),
        vec![
            comm("q^1/2 xy - q^-1/2 yx = (q - q^-1) z", "x y", "y x", "z"),
            comm("q^1/2 yz - q^-1/2 zy = (q - q^-1) x", "y z", "z y", "x"),
            comm("q^1/2 zx - q^-1/2 xz = (q - q^-1) y", "z x", "x z", "y"),
            a1_quartic("q x^2 + q^-1 y^2 + q z^2 - q^1/2 xyz = t q^-1 - q t^-1 + q + q^-1", &p, rhs),
        ],
    )
    .expect("well-formed presentation")
}

/// The quartic relation with the sign of `q t^-1` corrected.
pub fn a1_corrected_quartic() -> Relation<GaussRat> {
    let p = a1_table();
    let qh = sym(&p, "qh");
    let th = sym(&p, "th");
    let q = qh.pow(2).unwrap();
    let qi = q.inv().unwrap();
    let t = th.pow(2).unwrap();
    let rhs = t.mul(&qi).add(&q.div(&t).unwrap()).add(&q).add(&qi);
    a1_quartic("q x^2 + q^-1 y^2 + q z^2 - q^1/2 xyz = t q^-1 + q t^-1 + q + q^-1", &p, rhs)
}

pub fn a1_rep_map(rep: &A1Rep, sph: &SphericalTriple) -> RepMap<GaussRat> {
    RepMap::new(&rep.ctx.space)
        .image("x", sph.x.clone())
        .image("y", sph.y.clone())
        .image("z", sph.z.clone())
        .param("qh", rep.ctx.qh(1))
        .param("th", rep.th.clone())
}

/// Agreement of raw spherical operators with their folds on
/// `X^n + X^-n`, and preservation of symmetric Laurent polynomials.
pub fn preserves_symmetric(ctx: &Ctx, raw: &Op, depth: u32) -> bool {
    (0..=depth).all(|n| {
        let f = ctx.x_pow(n as i16).add(&ctx.x_pow(-(n as i16)));
        ctx.symmetric_laurent(&raw.apply(&f)).is_some()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Coeff;
    use crate::params::Params;
    use crate::presentation::check_presentation;

    fn random_ctx(params: &[&str]) -> Ctx {
        Params::random(11).context(params, &["X"]).unwrap()
    }

    #[test]
    fn cc_rep_and_spherical_at_random_point() {
        let ctx = random_ctx(&["t1", "t2", "t3", "t4"]);
        let rep = build_cc_rep(&ctx, cc_params(&ctx)).unwrap();
        let f = ctx.x().add(&ctx.x_pow(-1));
        assert!(rep.e.apply(&f).eq_exact(&f));
        let sph = spherical_cc(&rep).unwrap();
        let verdicts = check_presentation(&cc_rep_map(&rep, &sph.triple), &cc_presentation()).unwrap();
        assert!(verdicts.iter().all(|v| v.pass), "{:?}", verdicts);
        assert!(preserves_symmetric(&ctx, &sph.triple.raw[1], 4));
    }

    #[test]
    fn cc_constants_match_independent_values() {
        // qh = 3, t = (5, 7, 11, 13), computed independently
        let table = SymbolTable::new(["X"]).unwrap();
        let space = crate::qdiffop::OpSpace::new(
            table.clone(),
            &["X"],
            crate::exactring::QHalf::Value(GaussRat::from_i64(3)),
        )
        .unwrap();
        let ctx = Ctx::from_space(space, Params::random(0));
        let t = [5, 7, 11, 13].map(|v| Scalar::int(&table, v));
        let rep = build_cc_rep(&ctx, t).unwrap();
        let sph = spherical_cc(&rep).unwrap();
        assert_eq!(sph.f_y.as_constant(), Some(GaussRat::from_ratio(5930, 77)));
        // f_z = 3(15015 X^2 + 18784 X + 15015) / (65 X)
        let x = ctx.x();
        let fz = x
            .scale(&GaussRat::from_i64(15015))
            .add(&ctx.int(18784))
            .add(&x.inv().unwrap().scale(&GaussRat::from_i64(15015)))
            .scale(&GaussRat::from_ratio(3, 65));
        assert!(Scalar::from_poly(sph.f_z.clone()).eq_exact(&fz));
    }

    #[test]
    fn a1_resolution_and_closed_forms() {
        let ctx = random_ctx(&["th"]);
        let rep = build_a1_rep(&ctx, ctx.param("th")).unwrap();
        let chosen: Vec<_> = rep.candidates.iter().filter(|c| c.passes()).collect();
        assert_eq!(chosen.len(), 1);
        assert_eq!((chosen[0].tail, chosen[0].order), (A1Tail::SigmaMinusOne, A1Order::TFirst));
        let sph = spherical_a1(&rep).unwrap();
        let map = a1_rep_map(&rep, &sph);
        let v = check_presentation(&map, &a1_presentation()).unwrap();
        assert_eq!(v.iter().map(|v| v.pass).collect::<Vec<_>>(), vec![true, true, true, false]);
        let fixed = crate::presentation::relation_residual(&map, &a1_corrected_quartic()).unwrap();
        assert!(fixed.is_zero());
    }

    #[test]
    fn v_collapses_at_t_one() {
        let ctx = Params::symbolic().context(&[], &["X"]).unwrap();
        let v = a1_v(&ctx, &ctx.one()).unwrap();
        assert!(v.is_one());
    }
}
