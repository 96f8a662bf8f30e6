use super::error::RingError;
use super::mono::Mono;
use super::symbols::SymbolTable;
use crate::coeff::Coeff;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// A sparse Laurent polynomial over `C` in the symbols of a table.
///
/// Terms are kept sorted with the lexicographically largest monomial first;
/// no zero coefficient is ever stored, so structural equality is equality.
#[derive(Clone)]
pub struct LaurentPoly<C> {
    table: SymbolTable,
    terms: Vec<(Mono, C)>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(table: &SymbolTable) -> Self {
        LaurentPoly { table: table.clone(), terms: Vec::new() }
    }

    pub fn one(table: &SymbolTable) -> Self {
        Self::constant(table, C::one())
    }

    pub fn constant(table: &SymbolTable, c: C) -> Self {
        Self::term(table, Mono::ONE, c)
    }

    pub fn term(table: &SymbolTable, m: Mono, c: C) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        LaurentPoly { table: table.clone(), terms }
    }

    pub fn monomial(table: &SymbolTable, m: Mono) -> Self {
        Self::term(table, m, C::one())
    }

    /// The symbol at `idx` raised to `exp`.
    pub fn var(table: &SymbolTable, idx: usize, exp: i16) -> Self {
        Self::monomial(table, Mono::var(idx, exp))
    }

    pub fn symbol(table: &SymbolTable, name: &str) -> Result<Self, RingError> {
        Ok(Self::var(table, table.require(name)?, 1))
    }

    /// Builds a polynomial from arbitrary terms, merging repeats.
    pub fn from_terms(table: &SymbolTable, mut terms: Vec<(Mono, C)>) -> Self {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Mono, C)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = last.1.add_ref(&c),
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if last.1.is_zero() {
                out.pop();
            }
        }
        LaurentPoly { table: table.clone(), terms: out }
    }

    pub fn table(&self) -> &SymbolTable {
        &self.table
    }

    pub fn terms(&self) -> &[(Mono, C)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one_value()
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// The single term, if the polynomial is a monomial times a coefficient.
    pub fn as_term(&self) -> Option<(Mono, C)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((*m, c.clone())),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Mono, C)> {
        self.terms.first()
    }

    pub fn check_table(&self, other: &Self) -> Result<(), RingError> {
        if self.table.same(&other.table) {
            Ok(())
        } else {
            Err(RingError::TableMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.table.same(&other.table));
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*mb, cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca.add_ref(cb);
                    if !c.is_zero() {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        LaurentPoly { table: self.table.clone(), terms: out }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg_ref())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        LaurentPoly {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, a.mul_ref(c))).collect(),
        }
    }

    /// Multiplication by a monomial keeps the order, so no re-sort is needed.
    pub fn mul_mono(&self, m: &Mono) -> Self {
        LaurentPoly {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
        }
    }

    pub fn mul_term(&self, m: &Mono, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        LaurentPoly {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(a, x)| (a.mul(m), x.mul_ref(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.table.same(&other.table));
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.table);
        }
        if let Some((m, c)) = other.as_term() {
            return self.mul_term(&m, &c);
        }
        if let Some((m, c)) = self.as_term() {
            return other.mul_term(&m, &c);
        }
        let mut acc: BTreeMap<Mono, C> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul_ref(cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = v.add_ref(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        LaurentPoly { table: self.table.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.table);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Componentwise minimum of all exponents (the monomial content).
    pub fn content(&self) -> Mono {
        let mut it = self.terms.iter();
        let first = match it.next() {
            Some((m, _)) => *m,
            None => return Mono::ONE,
        };
        it.fold(first, |acc, (m, _)| acc.meet(m))
    }

    /// Exact division in the Laurent ring. Returns `None` when `d` does not
    /// divide `self` (or `d` is zero).
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if let Some((m, c)) = d.as_term() {
            return Some(self.mul_term(&m.inv(), &c.inv()?));
        }
        let cn = self.content();
        let cd = d.content();
        let n = self.mul_mono(&cn.inv());
        let dd = d.mul_mono(&cd.inv());
        let q = poly_divide(&n, &dd)?;
        Some(q.mul_mono(&cn.div(&cd)))
    }

    /// Applies a monomial map term by term: each monomial is sent to a new
    /// monomial times a coefficient. The result is re-sorted.
    pub fn map_monomials<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&Mono) -> (Mono, C),
    {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let (m2, k) = f(m);
                (m2, c.mul_ref(&k))
            })
            .collect();
        Self::from_terms(&self.table, terms)
    }

    /// Evaluates at a point, one value per symbol. `None` if a symbol with a
    /// negative exponent is evaluated at zero.
    pub fn evaluate(&self, point: &[C]) -> Option<C> {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, v) in point.iter().enumerate() {
                let e = m.exp(i);
                if e != 0 {
                    t = t.mul_ref(&v.powi(e as i64)?);
                }
            }
            acc = acc.add_ref(&t);
        }
        Some(acc)
    }

    /// Degree range `(min, max)` of the symbol at `idx`, or `None` for zero.
    pub fn degree_range(&self, idx: usize) -> Option<(i16, i16)> {
        let mut it = self.terms.iter().map(|(m, _)| m.exp(idx));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// True if no term involves the symbol at `idx`.
    pub fn free_of(&self, idx: usize) -> bool {
        self.terms.iter().all(|(m, _)| m.exp(idx) == 0)
    }

    /// Canonical text: `1*qh^2*X^-1 + -1*t1^1`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut s = c.render();
                for i in 0..self.table.len() {
                    let e = m.exp(i);
                    if e != 0 {
                        s.push_str(&format!("*{}^{}", self.table.name(i), e));
                    }
                }
                s
            })
            .collect();
        parts.join(" + ")
    }
}

/// Long division in the polynomial ring (all exponents of both operands are
/// non-negative). Fails fast as soon as a leading term is not divisible.
fn poly_divide<C: Coeff>(n: &LaurentPoly<C>, d: &LaurentPoly<C>) -> Option<LaurentPoly<C>> {
    let (ld, lc) = d.leading()?;
    let lc_inv = lc.inv()?;
    let rest: Vec<(Mono, C)> = d.terms[1..].to_vec();
    let mut rem: BTreeMap<Mono, C> = n.terms.iter().cloned().collect();
    let mut quot: Vec<(Mono, C)> = Vec::new();
    while let Some((m, c)) = rem.pop_last() {
        if !ld.divides(&m) {
            return None;
        }
        let qm = m.div(ld);
        let qc = c.mul_ref(&lc_inv);
        for (dm, dc) in &rest {
            let tm = dm.mul(&qm);
            let tc = dc.mul_ref(&qc);
            match rem.get_mut(&tm) {
                Some(v) => {
                    *v = v.sub_ref(&tc);
                    if v.is_zero() {
                        rem.remove(&tm);
                    }
                }
                None => {
                    rem.insert(tm, tc.neg_ref());
                }
            }
        }
        quot.push((qm, qc));
    }
    Some(LaurentPoly { table: n.table.clone(), terms: quot })
}

impl<C: Coeff> PartialEq for LaurentPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.table.same(&other.table) && self.terms == other.terms
    }
}

impl<C: Coeff> Eq for LaurentPoly<C> {}

impl<C: Coeff> PartialOrd for LaurentPoly<C> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<C: Coeff> Ord for LaurentPoly<C> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.len().cmp(&other.terms.len()).then_with(|| self.terms.cmp(&other.terms))
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
