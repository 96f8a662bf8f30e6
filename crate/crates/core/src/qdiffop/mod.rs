//! q-difference(-reflection) operators: finite sums of rational-function
//! coefficients times monomial substitutions of distinguished variables.

use crate::coeff::Coeff;
use crate::exactring::{QHalf, RatFn, RingError, SymbolTable};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpError {
    #[error("operators live in different operator spaces")]
    TableMismatch,
    #[error("quadratic relation fails: {0}")]
    QuadraticRelationFails(String),
    #[error("operation needs exactly one distinguished variable")]
    NotSingleVariable,
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Where operators live: the coefficient table, the distinguished variables
/// that substitutions act on, and the value of `q^(1/2)`.
#[derive(Debug, PartialEq, Eq)]
pub struct OpSpace<C> {
    pub table: SymbolTable,
    pub vars: Vec<usize>,
    pub qh: QHalf<C>,
}

impl<C: Coeff> OpSpace<C> {
    pub fn new(table: SymbolTable, vars: &[&str], qh: QHalf<C>) -> Result<Arc<Self>, RingError> {
        let vars = vars.iter().map(|v| table.require(v)).collect::<Result<Vec<_>, _>>()?;
        Ok(Arc::new(OpSpace { table, vars, qh }))
    }

    /// `q^(k/2)` as a rational function.
    pub fn q_half_power(&self, k: i32) -> RatFn<C> {
        match &self.qh {
            QHalf::Symbol(s) => RatFn::var(&self.table, *s, k as i16),
            QHalf::Value(v) => RatFn::constant(&self.table, v.powi(k as i64).expect("q is nonzero")),
        }
    }
}

/// One `(eps, k)` pair per distinguished variable: `v -> q^(k/2) v^eps`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subst(pub Vec<(i8, i32)>);

impl Subst {
    pub fn identity(n: usize) -> Subst {
        Subst(vec![(1, 0); n])
    }

    pub fn single(eps: i8, k: i32) -> Subst {
        Subst(vec![(eps, k)])
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&(e, k)| e == 1 && k == 0)
    }

    /// `self` after `other`: `(e1,k1) o (e2,k2) = (e1 e2, k2 + e2 k1)`.
    pub fn compose(&self, other: &Subst) -> Subst {
        Subst(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&(e1, k1), &(e2, k2))| (e1 * e2, k2 + e2 as i32 * k1))
                .collect(),
        )
    }

    pub fn inverse(&self) -> Subst {
        // (e,k)^-1 = (e, -e k)
        Subst(self.0.iter().map(|&(e, k)| (e, -(e as i32) * k)).collect())
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|(e, k)| format!("{},{}", e, k)).collect();
        format!("({})", parts.join(";"))
    }
}

/// A finite sum `sum c_g * g` of coefficients times substitutions.
#[derive(Clone)]
pub struct DiffOp<C> {
    space: Arc<OpSpace<C>>,
    terms: BTreeMap<Subst, RatFn<C>>,
}

impl<C: Coeff> DiffOp<C> {
    pub fn zero(space: &Arc<OpSpace<C>>) -> Self {
        DiffOp { space: space.clone(), terms: BTreeMap::new() }
    }

    pub fn identity(space: &Arc<OpSpace<C>>) -> Self {
        Self::mult(space, RatFn::one(&space.table))
    }

    /// Multiplication by a rational function.
    pub fn mult(space: &Arc<OpSpace<C>>, c: RatFn<C>) -> Self {
        Self::term(space, c, Subst::identity(space.vars.len()))
    }

    pub fn term(space: &Arc<OpSpace<C>>, c: RatFn<C>, g: Subst) -> Self {
        assert_eq!(g.0.len(), space.vars.len(), "substitution arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(g, c);
        }
        DiffOp { space: space.clone(), terms }
    }

    pub fn subst(space: &Arc<OpSpace<C>>, g: Subst) -> Self {
        Self::term(space, RatFn::one(&space.table), g)
    }

    /// Single-variable substitution `X -> q^(k/2) X^eps`.
    pub fn shift(space: &Arc<OpSpace<C>>, eps: i8, k: i32) -> Self {
        Self::subst(space, Subst::single(eps, k))
    }

    /// `(sigma f)(X) = f(1/X)`.
    pub fn sigma(space: &Arc<OpSpace<C>>) -> Self {
        Self::shift(space, -1, 0)
    }

    /// `(tau f)(X) = f(q^2 X)`.
    pub fn tau(space: &Arc<OpSpace<C>>) -> Self {
        Self::shift(space, 1, 4)
    }

    /// `(varpi f)(X) = f(q X)`.
    pub fn varpi(space: &Arc<OpSpace<C>>) -> Self {
        Self::shift(space, 1, 2)
    }

    pub fn space(&self) -> &Arc<OpSpace<C>> {
        &self.space
    }

    pub fn table(&self) -> &SymbolTable {
        &self.space.table
    }

    pub fn terms(&self) -> &BTreeMap<Subst, RatFn<C>> {
        &self.terms
    }

    pub fn coeff(&self, g: &Subst) -> RatFn<C> {
        self.terms.get(g).cloned().unwrap_or_else(|| RatFn::zero(&self.space.table))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn same_space(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.space, &other.space) || *self.space == *other.space
    }

    fn check(&self, other: &Self) -> Result<(), OpError> {
        if self.same_space(other) {
            Ok(())
        } else {
            Err(OpError::TableMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.same_space(other));
        let mut terms = self.terms.clone();
        for (g, c) in &other.terms {
            match terms.get_mut(g) {
                Some(v) => {
                    *v = v.add(c);
                    if v.is_zero() {
                        terms.remove(g);
                    }
                }
                None => {
                    terms.insert(g.clone(), c.clone());
                }
            }
        }
        DiffOp { space: self.space.clone(), terms }
    }

    pub fn neg(&self) -> Self {
        DiffOp {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(g, c)| (g.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Left multiplication by a scalar function: `c * self`.
    pub fn scale(&self, c: &RatFn<C>) -> Self {
        if c.is_zero() {
            return Self::zero(&self.space);
        }
        DiffOp {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(g, a)| (g.clone(), c.mul(a))).collect(),
        }
    }

    pub fn scale_const(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.space);
        }
        DiffOp {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(g, a)| (g.clone(), a.scale(c))).collect(),
        }
    }

    /// Applies the substitution `g` to the coefficient `c`.
    pub fn transport(&self, g: &Subst, c: &RatFn<C>) -> RatFn<C> {
        let mut out = c.clone();
        for (i, &(e, k)) in g.0.iter().enumerate() {
            if e != 1 || k != 0 {
                out = out.shift(self.space.vars[i], e, k, &self.space.qh);
            }
        }
        out
    }

    /// `self o other` (other acts first):
    /// `(c1 g1)(c2 g2) = c1 * g1(c2) * (g1 o g2)`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert!(self.same_space(other));
        let mut acc: BTreeMap<Subst, Vec<RatFn<C>>> = BTreeMap::new();
        for (g1, c1) in &self.terms {
            for (g2, c2) in &other.terms {
                let moved = self.transport(g1, c2);
                acc.entry(g1.compose(g2)).or_default().push(c1.mul(&moved));
            }
        }
        let mut terms = BTreeMap::new();
        for (g, parts) in acc {
            let s = sum_all(&self.space.table, parts);
            if !s.is_zero() {
                terms.insert(g, s);
            }
        }
        DiffOp { space: self.space.clone(), terms }
    }

    /// Checked arithmetic with an explicit space check.
    pub fn try_compose(&self, other: &Self) -> Result<Self, OpError> {
        self.check(other)?;
        Ok(self.compose(other))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, OpError> {
        self.check(other)?;
        Ok(self.add(other))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity(&self.space);
        for _ in 0..n {
            acc = acc.compose(self);
        }
        acc
    }

    /// `sum c * f(g(vars))`.
    pub fn apply(&self, f: &RatFn<C>) -> RatFn<C> {
        let parts = self.terms.iter().map(|(g, c)| c.mul(&self.transport(g, f))).collect();
        sum_all(&self.space.table, parts)
    }

    /// Exact operator equality.
    pub fn eq_op(&self, other: &Self) -> bool {
        self.same_space(other) && self.sub(other).is_zero()
    }

    pub fn is_sigma_free(&self) -> bool {
        self.terms.keys().all(|g| g.0.iter().all(|&(e, _)| e == 1))
    }

    /// Replaces every reflection term `(-1, k)` by `(+1, -k)`. The result
    /// agrees with `self` on functions invariant under `X -> 1/X`.
    pub fn fold_symmetric(&self) -> Result<Self, OpError> {
        if self.space.vars.len() != 1 {
            return Err(OpError::NotSingleVariable);
        }
        let mut out = Self::zero(&self.space);
        for (g, c) in &self.terms {
            let (e, k) = g.0[0];
            let key = if e == -1 { Subst::single(1, -k) } else { g.clone() };
            out = out.add(&Self::term(&self.space, c.clone(), key));
        }
        Ok(out)
    }

    /// Inverse of an operator satisfying `(T - u)(T + v) = 0`:
    /// `T^-1 = (T - (u - v)) / (u v)`.
    pub fn invert_hecke(&self, u: &RatFn<C>, v: &RatFn<C>) -> Result<Self, OpError> {
        let id = Self::identity(&self.space);
        let lhs = self.sub(&id.scale(u)).compose(&self.add(&id.scale(v)));
        if !lhs.is_zero() {
            return Err(OpError::QuadraticRelationFails(lhs.to_text()));
        }
        let uv_inv = u.mul(v).inv()?;
        Ok(self.sub(&id.scale(&u.sub(v))).scale(&uv_inv))
    }

    /// Maps every coefficient through `f`, landing in `space`.
    pub fn map_coeffs<F>(&self, space: &Arc<OpSpace<C>>, mut f: F) -> Result<Self, OpError>
    where
        F: FnMut(&RatFn<C>) -> Result<RatFn<C>, RingError>,
    {
        let mut terms = BTreeMap::new();
        for (g, c) in &self.terms {
            let v = f(c)?;
            if !v.is_zero() {
                terms.insert(g.clone(), v);
            }
        }
        Ok(DiffOp { space: space.clone(), terms })
    }

    /// Largest absolute half-shift among the terms.
    pub fn max_shift(&self) -> i32 {
        self.terms.keys().flat_map(|g| g.0.iter().map(|&(_, k)| k.abs())).max().unwrap_or(0)
    }

    /// Canonical text: terms sorted by substitution, `coeff ⊗ (eps,k)`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(g, c)| format!("{} ⊗ {}", c.to_text(), g.render())).collect();
        parts.join(" + ")
    }
}

/// Sums a list of rational functions, grouping equal denominators first so
/// that the common-denominator work is done once per group.
pub fn sum_all<C: Coeff>(table: &SymbolTable, parts: Vec<RatFn<C>>) -> RatFn<C> {
    if parts.len() <= 1 {
        return parts.into_iter().next().unwrap_or_else(|| RatFn::zero(table));
    }
    let mut groups: Vec<RatFn<C>> = Vec::new();
    for p in parts {
        match groups
            .iter_mut()
            .find(|g| g.denominator_factors() == p.denominator_factors())
        {
            Some(g) => *g = g.add(&p),
            None => groups.push(p),
        }
    }
    let mut acc = RatFn::zero(table);
    for g in groups {
        acc = acc.add(&g);
    }
    acc
}

impl<C: Coeff> PartialEq for DiffOp<C> {
    fn eq(&self, other: &Self) -> bool {
        self.eq_op(other)
    }
}

impl<C: Coeff> fmt::Debug for DiffOp<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<C: Coeff> fmt::Display for DiffOp<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Checks that two operators agree on `X^n + X^-n` for `n = 0..=depth`.
pub fn agree_on_symmetric_basis<C: Coeff>(a: &DiffOp<C>, b: &DiffOp<C>, depth: u32) -> bool {
    let space = a.space();
    let x = space.vars[0];
    (0..=depth).all(|n| {
        let f = RatFn::var(&space.table, x, n as i16).add(&RatFn::var(&space.table, x, -(n as i16)));
        a.apply(&f).eq_exact(&b.apply(&f))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::GaussRat;

    type Op = DiffOp<GaussRat>;
    type R = RatFn<GaussRat>;

    fn space() -> Arc<OpSpace<GaussRat>> {
        let t = SymbolTable::new(["qh", "t3", "t4", "X"]).unwrap();
        let qh = QHalf::Symbol(0);
        OpSpace::new(t, &["X"], qh).unwrap()
    }

    #[test]
    fn sigma_is_an_involution() {
        let s = space();
        let sig = Op::sigma(&s);
        assert!(sig.compose(&sig).eq_op(&Op::identity(&s)));
        assert!(!sig.eq_op(&Op::tau(&s)));
    }

    #[test]
    fn x_tau_squared() {
        let s = space();
        let x = R::symbol(&s.table, "X").unwrap();
        let xt = Op::tau(&s).scale(&x);
        let sq = xt.compose(&xt);
        let q2 = R::symbol(&s.table, "qh").unwrap().pow(4).unwrap();
        let expect = Op::shift(&s, 1, 8).scale(&q2.mul(&x.pow(2).unwrap()));
        assert!(sq.eq_op(&expect));
    }

    #[test]
    fn tau_inverse() {
        let s = space();
        assert!(Op::tau(&s).compose(&Op::shift(&s, 1, -4)).eq_op(&Op::identity(&s)));
    }

    #[test]
    fn apply_tau() {
        let s = space();
        let x = R::symbol(&s.table, "X").unwrap();
        let f = x.pow(3).unwrap().add(&x.pow(-3).unwrap());
        let q = R::symbol(&s.table, "qh").unwrap().pow(2).unwrap();
        let expect = q.pow(6).unwrap().mul(&x.pow(3).unwrap()).add(&q.pow(-6).unwrap().mul(&x.pow(-3).unwrap()));
        assert!(Op::tau(&s).apply(&f).eq_exact(&expect));
        assert!(Op::tau(&s).apply(&R::zero(&s.table)).is_zero());
    }

    #[test]
    fn fold_rules() {
        let s = space();
        let folded = Op::sigma(&s).fold_symmetric().unwrap();
        assert!(folded.eq_op(&Op::identity(&s)));
        let x = R::symbol(&s.table, "X").unwrap();
        let st = Op::sigma(&s).compose(&Op::tau(&s)).scale(&x);
        let f = st.fold_symmetric().unwrap();
        assert!(f.eq_op(&Op::shift(&s, 1, -4).scale(&x)));
    }

    #[test]
    fn hecke_inverse() {
        let s = space();
        let t3 = R::symbol(&s.table, "t3").unwrap();
        let x = R::symbol(&s.table, "X").unwrap();
        let one = R::one(&s.table);
        let t4 = R::symbol(&s.table, "t4").unwrap();
        let num = one.sub(&t3.mul(&t4).mul(&x)).mul(&one.add(&t3.div(&t4).unwrap().mul(&x)));
        let c = num.div(&one.sub(&x.pow(2).unwrap())).unwrap().div(&t3).unwrap();
        let t = Op::identity(&s)
            .scale(&t3)
            .add(&Op::sigma(&s).sub(&Op::identity(&s)).scale(&c));
        let ti = t.invert_hecke(&t3, &t3.inv().unwrap()).unwrap();
        assert!(t.compose(&ti).eq_op(&Op::identity(&s)));
        assert!(ti.compose(&t).eq_op(&Op::identity(&s)));
        let id = Op::identity(&s);
        assert!(id.invert_hecke(&one, &one).unwrap().eq_op(&id));
        assert!(matches!(Op::tau(&s).invert_hecke(&t3, &one), Err(OpError::QuadraticRelationFails(_))));
    }

    #[test]
    fn text_form() {
        let s = space();
        let x = R::symbol(&s.table, "X").unwrap();
        assert_eq!(Op::tau(&s).scale(&x).to_text(), "1*X^1 ⊗ (1,4)");
        assert_eq!(Op::zero(&s).to_text(), "0");
    }
}
