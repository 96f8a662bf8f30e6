//! Framed quivers, the localized quantum torus in `w_{i,r}, D_{i,r}`, and
//! dressed minuscule monopole operators.
//!
//! A torus element is a q-difference operator in the `w` variables whose
//! substitutions are pure shifts: the D-monomial `prod D_{i,r}^nu` is the
//! substitution `w_{i,r} -> q^(2 nu) w_{i,r}`, so `D w = q^2 w D` is built
//! into composition. Coefficients are written to the left of D-monomials.

use crate::coeff::{Coeff, GaussRat};
use crate::exactring::RingError;
use crate::params::{Ctx, Params};
use crate::qdiffop::{OpError, Subst};
use crate::{Op, Scalar};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonopoleError {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("dressing is not symmetric")]
    DressingNotSymmetric,
    #[error("element is not C*-invariant: D-degrees {0:?}")]
    NotInvariant(Vec<Vec<i32>>),
    #[error("no image for parameter `{0}`")]
    UnmappedParameter(String),
    #[error("embedding needs a single gauge node of dimension 2")]
    UnsupportedEmbedding,
    #[error("cannot parse quiver: {0}")]
    Parse(String),
    #[error(transparent)]
    Op(#[from] OpError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub id: String,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub src: String,
    pub dst: String,
    /// Name of the flavor parameter `z_a`; defaults to `za<index>`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub gauge: Vec<Node>,
    #[serde(default)]
    pub framing: Vec<Node>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    /// One gauge node of dimension 2 fed by two framing nodes of dimension 2.
    pub fn s04() -> Quiver {
        let node = |id: &str| Node { id: id.into(), dim: 2 };
        Quiver {
            gauge: vec![node("g")],
            framing: vec![node("1"), node("2")],
            arrows: vec![
                Arrow { src: "1".into(), dst: "g".into(), name: Some("za".into()) },
                Arrow { src: "2".into(), dst: "g".into(), name: Some("zb".into()) },
            ],
        }
    }

    /// One gauge node of dimension 2 with a loop.
    pub fn jordan() -> Quiver {
        Quiver {
            gauge: vec![Node { id: "g".into(), dim: 2 }],
            framing: vec![],
            arrows: vec![Arrow { src: "g".into(), dst: "g".into(), name: Some("z".into()) }],
        }
    }

    pub fn builtin(name: &str) -> Option<Quiver> {
        match name {
            "s04" => Some(Self::s04()),
            "jordan" => Some(Self::jordan()),
            _ => None,
        }
    }

    pub fn from_json(text: &str) -> Result<Quiver, MonopoleError> {
        let q: Quiver = serde_json::from_str(text).map_err(|e| MonopoleError::Parse(e.to_string()))?;
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<(), MonopoleError> {
        let bad = |m: String| Err(MonopoleError::InvalidQuiver(m));
        let mut ids = BTreeSet::new();
        for n in self.gauge.iter().chain(&self.framing) {
            if !ids.insert(n.id.as_str()) {
                return bad(format!("duplicate node id `{}`", n.id));
            }
            if n.dim == 0 {
                return bad(format!("node `{}` has dimension 0", n.id));
            }
        }
        for a in &self.arrows {
            if !ids.contains(a.src.as_str()) {
                return bad(format!("unknown source `{}`", a.src));
            }
            if self.gauge_index(&a.dst).is_none() {
                return bad(format!("arrow ends at `{}`, which is not a gauge node", a.dst));
            }
        }
        Ok(())
    }

    pub fn gauge_index(&self, id: &str) -> Option<usize> {
        self.gauge.iter().position(|n| n.id == id)
    }

    fn framing_node(&self, id: &str) -> Option<&Node> {
        self.framing.iter().find(|n| n.id == id)
    }

    pub fn arrow_param(&self, index: usize) -> String {
        self.arrows[index].name.clone().unwrap_or_else(|| format!("za{}", index))
    }

    pub fn framing_param(id: &str, l: usize) -> String {
        format!("z{}{}", id, l)
    }

    /// Flavor parameter names: `z_{k,l}` for framing nodes, then `z_a`.
    pub fn flavor_params(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .framing
            .iter()
            .flat_map(|n| (1..=n.dim).map(move |l| Self::framing_param(&n.id, l)))
            .collect();
        out.extend((0..self.arrows.len()).map(|i| self.arrow_param(i)));
        out
    }

    /// Variable names `w_{i,r}`: `w1, w2, ...` for a single gauge node.
    pub fn variables(&self) -> Vec<String> {
        if self.gauge.len() == 1 {
            (1..=self.gauge[0].dim).map(|r| format!("w{}", r)).collect()
        } else {
            self.gauge
                .iter()
                .flat_map(|n| (1..=n.dim).map(move |r| format!("w{}_{}", n.id, r)))
                .collect()
        }
    }
}

/// A symmetric Laurent polynomial in `n` variables with numeric
/// coefficients, used as the dressing of a monopole operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dressing {
    n: usize,
    terms: BTreeMap<Vec<i16>, GaussRat>,
}

impl Dressing {
    pub fn new(n: usize, terms: Vec<(Vec<i16>, GaussRat)>) -> Result<Self, MonopoleError> {
        let mut map: BTreeMap<Vec<i16>, GaussRat> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != n {
                return Err(MonopoleError::IndexOutOfRange(format!("exponent vector of length {} for {} variables", e.len(), n)));
            }
            let entry = map.entry(e).or_insert_with(GaussRat::zero);
            *entry = entry.add_ref(&c);
        }
        map.retain(|_, c| !c.is_zero());
        for (e, c) in &map {
            for i in 0..n {
                for j in i + 1..n {
                    let mut p = e.clone();
                    p.swap(i, j);
                    if map.get(&p) != Some(c) {
                        return Err(MonopoleError::DressingNotSymmetric);
                    }
                }
            }
        }
        Ok(Dressing { n, terms: map })
    }

    pub fn one(n: usize) -> Self {
        Dressing { n, terms: [(vec![0; n], GaussRat::one())].into_iter().collect() }
    }

    pub fn zero(n: usize) -> Self {
        Dressing { n, terms: BTreeMap::new() }
    }

    /// `x^m` in one variable.
    pub fn power(m: i16) -> Self {
        Dressing { n: 1, terms: [(vec![m], GaussRat::one())].into_iter().collect() }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// `f(c x_1, ..., c x_n)` at `x = vals`, with `c = q^(k/2)`.
    fn eval(&self, ctx: &Ctx, vals: &[Scalar], k: i32) -> Scalar {
        let mut out = ctx.zero();
        for (e, c) in &self.terms {
            let mut t = ctx.constant(c.clone());
            for (v, &x) in vals.iter().zip(e) {
                t = t.mul(&v.pow(x as i32).expect("variable is invertible")).mul(&ctx.qh(k * x as i32));
            }
            out = out.add(&t);
        }
        out
    }
}

/// The quantum torus of a framed quiver.
#[derive(Clone, Debug)]
pub struct MonopoleAlgebra {
    pub quiver: Quiver,
    pub ctx: Ctx,
    /// Operator-variable position of `w_{i,r}`, per gauge node.
    slots: Vec<Vec<usize>>,
}

impl MonopoleAlgebra {
    pub fn new(quiver: Quiver, params: &Params) -> Result<Self, MonopoleError> {
        quiver.validate()?;
        let flavors = quiver.flavor_params();
        let vars = quiver.variables();
        let fr: Vec<&str> = flavors.iter().map(String::as_str).collect();
        let vr: Vec<&str> = vars.iter().map(String::as_str).collect();
        let ctx = params.context(&fr, &vr)?;
        let mut slots = Vec::new();
        let mut pos = 0;
        for n in &quiver.gauge {
            slots.push((pos..pos + n.dim).collect());
            pos += n.dim;
        }
        Ok(MonopoleAlgebra { quiver, ctx, slots })
    }

    pub fn builtin(name: &str, params: &Params) -> Result<Self, MonopoleError> {
        let q = Quiver::builtin(name).ok_or_else(|| MonopoleError::InvalidQuiver(format!("no built-in quiver `{}`", name)))?;
        Self::new(q, params)
    }

    fn node(&self, id: &str) -> Result<usize, MonopoleError> {
        self.quiver
            .gauge_index(id)
            .ok_or_else(|| MonopoleError::IndexOutOfRange(format!("no gauge node `{}`", id)))
    }

    /// The single gauge node, for one-node quivers.
    pub fn only_node(&self) -> &str {
        &self.quiver.gauge[0].id
    }

    fn slot(&self, i: usize, r: usize) -> usize {
        self.slots[i][r]
    }

    /// `w_{i,r}^e` (with `r` zero-based).
    pub fn w(&self, node: &str, r: usize, e: i16) -> Result<Scalar, MonopoleError> {
        let i = self.node(node)?;
        if r >= self.slots[i].len() {
            return Err(MonopoleError::IndexOutOfRange(format!("w index {} at node `{}`", r + 1, node)));
        }
        Ok(Scalar::var(self.ctx.table(), self.ctx.space.vars[self.slot(i, r)], e))
    }

    fn w_at(&self, i: usize, r: usize) -> Scalar {
        Scalar::var(self.ctx.table(), self.ctx.space.vars[self.slot(i, r)], 1)
    }

    /// The D-monomial with exponents `nu` (one entry per variable).
    pub fn d_monomial(&self, nu: &[i32]) -> Op {
        let g = Subst(nu.iter().map(|&e| (1, 4 * e)).collect());
        Op::term(&self.ctx.space, self.ctx.one(), g)
    }

    /// `D_{i,r}^e`.
    pub fn d(&self, node: &str, r: usize, e: i32) -> Result<Op, MonopoleError> {
        let i = self.node(node)?;
        if r >= self.slots[i].len() {
            return Err(MonopoleError::IndexOutOfRange(format!("D index {} at node `{}`", r + 1, node)));
        }
        let mut nu = vec![0; self.ctx.space.vars.len()];
        nu[self.slot(i, r)] = e;
        Ok(self.d_monomial(&nu))
    }

    pub fn mult(&self, c: Scalar) -> Op {
        self.ctx.mult(c)
    }

    /// `sum_r w_{i,r}^e` as a multiplication operator.
    pub fn power_sum(&self, node: &str, e: i16) -> Result<Op, MonopoleError> {
        let i = self.node(node)?;
        let mut s = self.ctx.zero();
        for r in 0..self.slots[i].len() {
            s = s.add(&self.w(node, r, e)?);
        }
        Ok(self.mult(s))
    }

    fn flavor(&self, name: &str) -> Scalar {
        self.ctx.param(name)
    }

    fn check_args(&self, node: &str, f: &Dressing) -> Result<usize, MonopoleError> {
        let i = self.node(node)?;
        let d = self.quiver.gauge[i].dim;
        if f.arity() == 0 || f.arity() > d {
            return Err(MonopoleError::IndexOutOfRange(format!("n = {} at node `{}` of dimension {}", f.arity(), node, d)));
        }
        Ok(i)
    }

    /// `prod_{r in I, s not in I} (1 - w_s / w_r)` or its mirror.
    fn vandermonde(&self, i: usize, subset: &[usize], mirror: bool) -> Scalar {
        let one = self.ctx.one();
        let mut den = one.clone();
        for &r in subset {
            for s in (0..self.slots[i].len()).filter(|s| !subset.contains(s)) {
                let (a, b) = if mirror { (r, s) } else { (s, r) };
                den = den.mul(&one.sub(&self.w_at(i, a).div(&self.w_at(i, b)).expect("w invertible")));
            }
        }
        den
    }

    /// Numerator product over arrows; `outgoing` selects `P` or `Q`.
    fn arrow_product(&self, i: usize, subset: &[usize], outgoing: bool) -> Scalar {
        let q = self.ctx.q(1);
        let one = self.ctx.one();
        let mut out = one.clone();
        for (ai, a) in self.quiver.arrows.iter().enumerate() {
            let other = if outgoing { &a.src } else { &a.dst };
            let far = if outgoing { &a.dst } else { &a.src };
            if self.quiver.gauge[i].id != *other {
                continue;
            }
            let Some(j) = self.quiver.gauge_index(far) else { continue };
            let za = self.flavor(&self.quiver.arrow_param(ai));
            for &r in subset {
                for s in 0..self.slots[j].len() {
                    if i == j && subset.contains(&s) {
                        continue;
                    }
                    let ratio = if outgoing {
                        self.w_at(i, r).div(&self.w_at(j, s))
                    } else {
                        self.w_at(j, s).div(&self.w_at(i, r))
                    }
                    .expect("w invertible");
                    out = out.mul(&one.sub(&q.mul(&za).mul(&ratio)));
                }
            }
        }
        out
    }

    /// `P_{i,I}`.
    pub fn p_factor(&self, i: usize, subset: &[usize]) -> Scalar {
        self.arrow_product(i, subset, true).div(&self.vandermonde(i, subset, false)).expect("nonzero")
    }

    /// `Q_{i,I}`.
    pub fn q_factor(&self, i: usize, subset: &[usize]) -> Scalar {
        self.arrow_product(i, subset, false).div(&self.vandermonde(i, subset, true)).expect("nonzero")
    }

    /// `prod_{a in S_i, r in I} prod_l (1 - q z_{s(a),l} z_a / w_{i,r})`.
    pub fn framing_factor(&self, i: usize, subset: &[usize]) -> Scalar {
        let q = self.ctx.q(1);
        let one = self.ctx.one();
        let mut out = one.clone();
        for (ai, a) in self.quiver.arrows.iter().enumerate() {
            if a.dst != self.quiver.gauge[i].id {
                continue;
            }
            let Some(k) = self.quiver.framing_node(&a.src) else { continue };
            let za = self.flavor(&self.quiver.arrow_param(ai));
            for &r in subset {
                let winv = self.w_at(i, r).inv().expect("w invertible");
                for l in 1..=k.dim {
                    let zk = self.flavor(&Quiver::framing_param(&k.id, l));
                    out = out.mul(&one.sub(&q.mul(&zk).mul(&za).mul(&winv)));
                }
            }
        }
        out
    }

    fn subset_d(&self, i: usize, subset: &[usize], e: i32) -> Op {
        let mut nu = vec![0; self.ctx.space.vars.len()];
        for &r in subset {
            nu[self.slot(i, r)] = e;
        }
        self.d_monomial(&nu)
    }

    /// `E_{i,n}[f]` with `n` the arity of `f`.
    pub fn e(&self, node: &str, f: &Dressing) -> Result<Op, MonopoleError> {
        let i = self.check_args(node, f)?;
        let mut out = Op::zero(&self.ctx.space);
        for subset in subsets(self.slots[i].len(), f.arity()) {
            let ws: Vec<Scalar> = subset.iter().map(|&r| self.w_at(i, r)).collect();
            let c = f.eval(&self.ctx, &ws, 0).mul(&self.p_factor(i, &subset));
            out = out.add(&self.mult(c).compose(&self.subset_d(i, &subset, 1)));
        }
        Ok(out)
    }

    /// `F_{i,n}[f]` with `n` the arity of `f`.
    pub fn f(&self, node: &str, f: &Dressing) -> Result<Op, MonopoleError> {
        let i = self.check_args(node, f)?;
        let mut out = Op::zero(&self.ctx.space);
        for subset in subsets(self.slots[i].len(), f.arity()) {
            let ws: Vec<Scalar> = subset.iter().map(|&r| self.w_at(i, r)).collect();
            let c = f
                .eval(&self.ctx, &ws, -4)
                .mul(&self.framing_factor(i, &subset))
                .mul(&self.q_factor(i, &subset));
            out = out.add(&self.mult(c).compose(&self.subset_d(i, &subset, -1)));
        }
        Ok(out)
    }

    /// `E_1[x^m]` at the single gauge node.
    pub fn e1(&self, m: i16) -> Result<Op, MonopoleError> {
        self.e(&self.quiver.gauge[0].id.clone(), &Dressing::power(m))
    }

    /// `F_1[x^m]` at the single gauge node.
    pub fn f1(&self, m: i16) -> Result<Op, MonopoleError> {
        self.f(&self.quiver.gauge[0].id.clone(), &Dressing::power(m))
    }

    /// Total D-degree per gauge node, for every term.
    pub fn grading(&self, elem: &Op) -> BTreeSet<Vec<i32>> {
        elem.terms()
            .keys()
            .map(|g| self.slots.iter().map(|sl| sl.iter().map(|&p| g.0[p].1 / 4).sum()).collect())
            .collect()
    }

    pub fn is_invariant(&self, elem: &Op) -> bool {
        self.grading(elem).iter().all(|v| v.iter().all(|&d| d == 0))
    }

    /// Swaps `w_{i,r} <-> w_{i,s}` and `D_{i,r} <-> D_{i,s}` (zero-based).
    pub fn weyl_image(&self, elem: &Op, node: &str, r: usize, s: usize) -> Result<Op, MonopoleError> {
        let i = self.node(node)?;
        let d = self.slots[i].len();
        if r == s || r >= d || s >= d {
            return Err(MonopoleError::IndexOutOfRange(format!("transposition ({}, {}) at node `{}`", r + 1, s + 1, node)));
        }
        let (pr, ps) = (self.slot(i, r), self.slot(i, s));
        let table = self.ctx.table();
        let vars = &self.ctx.space.vars;
        let images: Vec<Option<Scalar>> = (0..table.len())
            .map(|k| {
                let target = if k == vars[pr] {
                    vars[ps]
                } else if k == vars[ps] {
                    vars[pr]
                } else {
                    k
                };
                Some(Scalar::var(table, target, 1))
            })
            .collect();
        let mut out = Op::zero(&self.ctx.space);
        for (g, c) in elem.terms() {
            let mut g2 = g.clone();
            g2.0.swap(pr, ps);
            out = out.add(&Op::term(&self.ctx.space, c.substitute(&images, table)?, g2));
        }
        Ok(out)
    }

    /// The Weyl-symmetric Laurent polynomial equal to a pure coefficient
    /// operator, if it is one.
    pub fn symmetric_multiplier(&self, elem: &Op) -> Option<Scalar> {
        if elem.terms().keys().any(|g| !g.is_identity()) {
            return None;
        }
        let c = elem.coeff(&Subst::identity(self.ctx.space.vars.len()));
        c.laurent_quotient()?;
        for (i, sl) in self.slots.iter().enumerate() {
            for r in 0..sl.len() {
                for s in r + 1..sl.len() {
                    let id = self.quiver.gauge[i].id.clone();
                    let w = self.weyl_image(&self.mult(c.clone()), &id, r, s).ok()?;
                    if !w.eq_op(&self.mult(c.clone())) {
                        return None;
                    }
                }
            }
        }
        Some(c)
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The map from the C*-invariant part of a one-node, rank-two torus to
/// operators in one variable: `w1 -> X`, `w2 -> X^-1`,
/// `D1 D2^-1 -> c(X) tau`, flavor parameters through `params`.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub target: Ctx,
    pub params: BTreeMap<String, Scalar>,
    pub c: Scalar,
}

impl Embedding {
    /// `z11 -> t4, z12 -> t4^-1, z21 -> t1, z22 -> t1^-1, za -> t3, zb -> t2`.
    pub fn s04(target: &Ctx, c: Scalar) -> Self {
        let p = |n: &str| target.param(n);
        let params = [
            ("z11", p("t4")),
            ("z12", p("t4").inv().expect("t4 invertible")),
            ("z21", p("t1")),
            ("z22", p("t1").inv().expect("t1 invertible")),
            ("za", p("t3")),
            ("zb", p("t2")),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
        Embedding { target: target.clone(), params, c }
    }

    /// `z -> q^-1 t` with `t = th^2`.
    pub fn jordan(target: &Ctx, c: Scalar) -> Self {
        let z = target.q(-1).mul(&target.param("th").pow(2).expect("th invertible"));
        Embedding { target: target.clone(), params: [("z".to_string(), z)].into_iter().collect(), c }
    }

    /// The printed scale `c = q^-4 X^-4`.
    pub fn printed_scale(target: &Ctx) -> Scalar {
        target.q(-4).mul(&target.x_pow(-4))
    }

    /// Image of a coefficient.
    pub fn scalar(&self, alg: &MonopoleAlgebra, c: &Scalar) -> Result<Scalar, MonopoleError> {
        let table = alg.ctx.table();
        let vars = &alg.ctx.space.vars;
        let images = table
            .names()
            .iter()
            .enumerate()
            .map(|(k, name)| {
                if k == vars[0] {
                    Ok(Some(self.target.x()))
                } else if k == vars[1] {
                    Ok(Some(self.target.x_pow(-1)))
                } else if name == "qh" {
                    Ok(Some(self.target.qh(1)))
                } else {
                    self.params
                        .get(name)
                        .cloned()
                        .map(Some)
                        .ok_or_else(|| MonopoleError::UnmappedParameter(name.clone()))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(c.substitute(&images, self.target.table())?)
    }

    /// `(c tau)^k`.
    fn ladder(&self, k: i32) -> Op {
        let ctx = &self.target;
        let step = if k >= 0 {
            ctx.mult(self.c.clone()).compose(&Op::tau(&ctx.space))
        } else {
            Op::shift(&ctx.space, 1, -4).compose(&ctx.mult(self.c.inv().expect("c invertible")))
        };
        step.pow(k.unsigned_abs())
    }

    pub fn apply(&self, alg: &MonopoleAlgebra, elem: &Op) -> Result<Op, MonopoleError> {
        if alg.quiver.gauge.len() != 1 || alg.quiver.gauge[0].dim != 2 {
            return Err(MonopoleError::UnsupportedEmbedding);
        }
        if !alg.is_invariant(elem) {
            return Err(MonopoleError::NotInvariant(alg.grading(elem).into_iter().collect()));
        }
        let mut out = Op::zero(&self.target.space);
        for (g, c) in elem.terms() {
            let k = g.0[0].1 / 4;
            out = out.add(&self.target.mult(self.scalar(alg, c)?).compose(&self.ladder(k)));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jordan() -> MonopoleAlgebra {
        MonopoleAlgebra::builtin("jordan", &Params::symbolic()).unwrap()
    }

    #[test]
    fn jordan_e1_matches_instantiated_definition() {
        let a = jordan();
        let q = a.ctx.q(1);
        let z = a.ctx.param("z");
        let one = a.ctx.one();
        let w1 = a.w("g", 0, 1).unwrap();
        let w2 = a.w("g", 1, 1).unwrap();
        let c1 = one.sub(&q.mul(&z).mul(&w1).div(&w2).unwrap()).div(&one.sub(&w2.div(&w1).unwrap())).unwrap();
        let c2 = one.sub(&q.mul(&z).mul(&w2).div(&w1).unwrap()).div(&one.sub(&w1.div(&w2).unwrap())).unwrap();
        let expected = a
            .mult(c1)
            .compose(&a.d("g", 0, 1).unwrap())
            .add(&a.mult(c2).compose(&a.d("g", 1, 1).unwrap()));
        assert!(a.e1(0).unwrap().eq_op(&expected));
        assert!(a.e("g", &Dressing::zero(1)).unwrap().is_zero());
    }

    #[test]
    fn torus_relation_and_grading() {
        let a = jordan();
        let d = a.d("g", 0, 1).unwrap();
        let w = a.mult(a.w("g", 0, 1).unwrap());
        let lhs = d.compose(&w);
        let rhs = w.compose(&d).scale(&a.ctx.q(2));
        assert!(lhs.eq_op(&rhs));
        assert_eq!(a.grading(&a.e1(0).unwrap()), [vec![1]].into_iter().collect());
        let fe = a.f1(1).unwrap().compose(&a.e1(0).unwrap());
        assert_eq!(a.grading(&fe), [vec![0]].into_iter().collect());
    }

    #[test]
    fn s04_framing_and_e2() {
        let a = MonopoleAlgebra::builtin("s04", &Params::symbolic()).unwrap();
        assert_eq!(a.framing_factor(0, &[0]).numerator().len(), 16);
        let e2 = a.e("g", &Dressing::one(2)).unwrap();
        assert_eq!(e2.terms().len(), 1);
        assert!(e2.coeff(&Subst(vec![(1, 4), (1, 4)])).is_one());
        assert!(matches!(a.e("g", &Dressing::one(3)), Err(MonopoleError::IndexOutOfRange(_))));
    }

    #[test]
    fn dressing_symmetry_and_weyl() {
        assert_eq!(
            Dressing::new(2, vec![(vec![1, 0], GaussRat::one())]),
            Err(MonopoleError::DressingNotSymmetric)
        );
        let a = jordan();
        let w1 = a.mult(a.w("g", 0, 1).unwrap());
        let w2 = a.mult(a.w("g", 1, 1).unwrap());
        assert!(a.weyl_image(&w1, "g", 0, 1).unwrap().eq_op(&w2));
        let f = a.f1(1).unwrap();
        assert!(a.weyl_image(&f, "g", 0, 1).unwrap().eq_op(&f));
    }

    #[test]
    fn quiver_json_round_trip() {
        let text = serde_json::to_string(&Quiver::s04()).unwrap();
        assert_eq!(Quiver::from_json(&text).unwrap(), Quiver::s04());
        let bad = r#"{"gauge":[{"id":"g","dim":2}],"framing":[{"id":"f","dim":1}],"arrows":[{"src":"g","dst":"f"}]}"#;
        assert!(matches!(Quiver::from_json(bad), Err(MonopoleError::InvalidQuiver(_))));
    }
}
