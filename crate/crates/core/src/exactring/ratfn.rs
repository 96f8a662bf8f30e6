use super::error::RingError;
use super::mono::Mono;
use super::poly::LaurentPoly;
use super::symbols::SymbolTable;
use crate::coeff::Coeff;
use std::collections::HashMap;
use std::fmt;

/// A rational function: Laurent numerator over a factored denominator.
///
/// Denominator factors are normalized (no monomial content, leading
/// coefficient one, not constant), sorted and distinct. Monomials are units
/// of the Laurent ring and always live in the numerator. Cancellation is
/// attempted factor by factor with exact division; it is not guaranteed to
/// be complete, which is harmless because equality is decided by
/// cross-multiplication.
#[derive(Clone)]
pub struct RatFn<C> {
    num: LaurentPoly<C>,
    den: Vec<(LaurentPoly<C>, u32)>,
}

/// The value that `q^(1/2)` takes: a symbol of the table or a number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QHalf<C> {
    Symbol(usize),
    Value(C),
}

/// Splits `p` as `m * c * f` with `f` normalized.
fn normalize_factor<C: Coeff>(p: &LaurentPoly<C>) -> (Mono, C, LaurentPoly<C>) {
    let m = p.content();
    let shifted = p.mul_mono(&m.inv());
    let lc = shifted.leading().map(|t| t.1.clone()).unwrap_or_else(C::one);
    let f = shifted.scale(&lc.inv().expect("leading coefficient is nonzero"));
    (m, lc, f)
}

/// Splits a normalized binomial `M1 - b^2 M2` into `(N1 - b N2)(N1 + b N2)`
/// repeatedly. Other factors are returned unchanged.
fn split_factor<C: Coeff>(f: LaurentPoly<C>, out: &mut Vec<LaurentPoly<C>>) {
    if f.len() == 2 {
        let (m1, _) = f.terms()[0].clone();
        let (m2, a) = f.terms()[1].clone();
        if m1.is_square() && m2.is_square() {
            if let Some(b) = a.neg_ref().sqrt_exact() {
                let table = f.table().clone();
                let n1 = m1.half();
                let n2 = m2.half();
                let lo = LaurentPoly::from_terms(&table, vec![(n1, C::one()), (n2, b.neg_ref())]);
                let hi = LaurentPoly::from_terms(&table, vec![(n1, C::one()), (n2, b)]);
                split_factor(lo, out);
                split_factor(hi, out);
                return;
            }
        }
    }
    out.push(f);
}

fn width_ok<C: Coeff>(num: &LaurentPoly<C>, f: &LaurentPoly<C>) -> bool {
    for i in 0..f.table().len() {
        if let Some((flo, fhi)) = f.degree_range(i) {
            if fhi == flo {
                continue;
            }
            match num.degree_range(i) {
                Some((lo, hi)) if hi - lo >= fhi - flo => {}
                _ => return false,
            }
        }
    }
    true
}

fn insert_factor<C: Coeff>(den: &mut Vec<(LaurentPoly<C>, u32)>, f: LaurentPoly<C>, mult: u32) {
    if mult == 0 {
        return;
    }
    match den.binary_search_by(|(g, _)| g.cmp(&f)) {
        Ok(i) => den[i].1 += mult,
        Err(i) => den.insert(i, (f, mult)),
    }
}

impl<C: Coeff> RatFn<C> {
    pub fn zero(table: &SymbolTable) -> Self {
        RatFn { num: LaurentPoly::zero(table), den: Vec::new() }
    }

    pub fn one(table: &SymbolTable) -> Self {
        RatFn { num: LaurentPoly::one(table), den: Vec::new() }
    }

    pub fn constant(table: &SymbolTable, c: C) -> Self {
        RatFn { num: LaurentPoly::constant(table, c), den: Vec::new() }
    }

    pub fn int(table: &SymbolTable, n: i64) -> Self {
        Self::constant(table, C::from_i64(n))
    }

    pub fn from_poly(p: LaurentPoly<C>) -> Self {
        RatFn { num: p, den: Vec::new() }
    }

    pub fn monomial(table: &SymbolTable, m: Mono) -> Self {
        Self::from_poly(LaurentPoly::monomial(table, m))
    }

    pub fn var(table: &SymbolTable, idx: usize, exp: i16) -> Self {
        Self::from_poly(LaurentPoly::var(table, idx, exp))
    }

    pub fn symbol(table: &SymbolTable, name: &str) -> Result<Self, RingError> {
        Ok(Self::from_poly(LaurentPoly::symbol(table, name)?))
    }

    /// `num / den`, failing when `den` is zero.
    pub fn new(num: LaurentPoly<C>, den: LaurentPoly<C>) -> Result<Self, RingError> {
        num.check_table(&den)?;
        Self::from_poly(num).div(&Self::from_poly(den))
    }

    pub fn table(&self) -> &SymbolTable {
        self.num.table()
    }

    pub fn numerator(&self) -> &LaurentPoly<C> {
        &self.num
    }

    pub fn denominator_factors(&self) -> &[(LaurentPoly<C>, u32)] {
        &self.den
    }

    /// The expanded denominator polynomial.
    pub fn denominator(&self) -> LaurentPoly<C> {
        let mut d = LaurentPoly::one(self.table());
        for (f, k) in &self.den {
            d = d.mul(&f.pow(*k));
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    /// The constant value when the function is a constant of the field.
    pub fn as_constant(&self) -> Option<C> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let mut i = 0;
        while i < self.den.len() {
            while self.den[i].1 > 0 && width_ok(&self.num, &self.den[i].0) {
                match self.num.div_exact(&self.den[i].0) {
                    Some(q) => {
                        self.num = q;
                        self.den[i].1 -= 1;
                    }
                    None => break,
                }
            }
            if self.den[i].1 == 0 {
                self.den.remove(i);
            } else {
                i += 1;
            }
        }
    }

    /// Reduces `self.num` against `other_den`, returning what is left of it.
    fn cancel_against(num: &LaurentPoly<C>, den: &mut Vec<(LaurentPoly<C>, u32)>) -> LaurentPoly<C> {
        let mut num = num.clone();
        for (f, k) in den.iter_mut() {
            while *k > 0 && width_ok(&num, f) {
                match num.div_exact(f) {
                    Some(q) => {
                        num = q;
                        *k -= 1;
                    }
                    None => break,
                }
            }
        }
        den.retain(|(_, k)| *k > 0);
        num
    }

    pub fn neg(&self) -> Self {
        RatFn { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.table().same(other.table()));
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let mut r = RatFn { num: self.num.add(&other.num), den: self.den.clone() };
            r.cancel();
            return r;
        }
        let mut den: Vec<(LaurentPoly<C>, u32)> = Vec::new();
        let mut na = self.num.clone();
        let mut nb = other.num.clone();
        let (mut i, mut j) = (0, 0);
        while i < self.den.len() || j < other.den.len() {
            let ord = match (self.den.get(i), other.den.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            match ord {
                std::cmp::Ordering::Less => {
                    let (f, k) = &self.den[i];
                    nb = nb.mul(&f.pow(*k));
                    den.push((f.clone(), *k));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let (f, k) = &other.den[j];
                    na = na.mul(&f.pow(*k));
                    den.push((f.clone(), *k));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let (f, ka) = &self.den[i];
                    let kb = other.den[j].1;
                    if ka > &kb {
                        nb = nb.mul(&f.pow(ka - kb));
                    } else if kb > *ka {
                        na = na.mul(&f.pow(kb - ka));
                    }
                    den.push((f.clone(), (*ka).max(kb)));
                    i += 1;
                    j += 1;
                }
            }
        }
        let mut r = RatFn { num: na.add(&nb), den };
        r.cancel();
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.table().same(other.table()));
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.table());
        }
        let mut da = self.den.clone();
        let mut db = other.den.clone();
        let na = Self::cancel_against(&self.num, &mut db);
        let nb = Self::cancel_against(&other.num, &mut da);
        let mut den = da;
        for (f, k) in db {
            insert_factor(&mut den, f, k);
        }
        RatFn { num: na.mul(&nb), den }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.table());
        }
        RatFn { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &LaurentPoly<C>) -> Self {
        self.mul(&Self::from_poly(p.clone()))
    }

    pub fn inv(&self) -> Result<Self, RingError> {
        if self.num.is_zero() {
            return Err(RingError::DegenerateScalar);
        }
        let (m, c, f) = normalize_factor(&self.num);
        let mut num = LaurentPoly::term(self.table(), m.inv(), c.inv().expect("nonzero"));
        for (g, k) in &self.den {
            num = num.mul(&g.pow(*k));
        }
        let mut den = Vec::new();
        if f.as_constant().is_none() {
            let mut pieces = Vec::new();
            split_factor(f, &mut pieces);
            for p in pieces {
                insert_factor(&mut den, p, 1);
            }
        }
        let mut r = RatFn { num, den };
        r.cancel();
        Ok(r)
    }

    pub fn div(&self, other: &Self) -> Result<Self, RingError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self, RingError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.table());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Exact equality, decided by cross-multiplication.
    pub fn eq_exact(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    /// Applies a monomial map to numerator and denominator factors.
    pub fn map_monomials<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&Mono) -> (Mono, C),
    {
        let mut num = self.num.map_monomials(&mut f);
        let mut den = Vec::new();
        for (g, k) in &self.den {
            let img = g.map_monomials(&mut f);
            let (m, c, nf) = normalize_factor(&img);
            // g^k = (m c nf)^k, so num picks up (m c)^-k
            let unit = c.powi(-(*k as i64)).expect("nonzero");
            num = num.mul_term(&m.pow(-(*k as i16)), &unit);
            if nf.as_constant().is_none() {
                let mut pieces = Vec::new();
                split_factor(nf, &mut pieces);
                for p in pieces {
                    insert_factor(&mut den, p, *k);
                }
            }
        }
        let mut r = RatFn { num, den };
        r.cancel();
        r
    }

    /// The substitution `v -> q^(k/2) * v^eps` of the symbol `var`.
    pub fn shift(&self, var: usize, eps: i8, k: i32, qh: &QHalf<C>) -> Self {
        if eps == 1 && k == 0 {
            return self.clone();
        }
        let mut cache: HashMap<i32, C> = HashMap::new();
        self.map_monomials(|m| {
            let e = m.exp(var) as i32;
            if e == 0 {
                return (*m, C::one());
            }
            let mut out = m.with(var, (eps as i32 * e) as i16);
            match qh {
                QHalf::Symbol(s) => {
                    out.0[*s] += (k * e) as i16;
                    (out, C::one())
                }
                QHalf::Value(v) => {
                    let c = cache
                        .entry(k * e)
                        .or_insert_with(|| v.powi((k * e) as i64).expect("q is nonzero"))
                        .clone();
                    (out, c)
                }
            }
        })
    }

    /// Ring homomorphism extending `images` (one optional image per symbol
    /// of this table; all images over `target`).
    pub fn substitute(&self, images: &[Option<RatFn<C>>], target: &SymbolTable) -> Result<Self, RingError> {
        let mut cache: HashMap<(usize, i16), RatFn<C>> = HashMap::new();
        let num = eval_poly(&self.num, images, target, &mut cache)?;
        let mut den = RatFn::one(target);
        for (f, k) in &self.den {
            let v = eval_poly(f, images, target, &mut cache)?;
            for _ in 0..*k {
                den = den.mul(&v);
            }
        }
        num.div(&den)
    }

    /// Substitution by name: symbols not in `map` are sent to the symbol of
    /// the same name in `target`; failing that, `UnmappedSymbol`.
    pub fn substitute_named(
        &self,
        map: &[(&str, RatFn<C>)],
        target: &SymbolTable,
    ) -> Result<Self, RingError> {
        let images = images_by_name(self.table(), map, target)?;
        self.substitute(&images, target)
    }

    /// Returns the Laurent polynomial equal to `self`, if there is one.
    pub fn laurent_quotient(&self) -> Option<LaurentPoly<C>> {
        let mut n = self.num.clone();
        for (f, k) in &self.den {
            for _ in 0..*k {
                n = n.div_exact(f)?;
            }
        }
        Some(n)
    }

    /// Evaluates at a point; `None` if a denominator vanishes there.
    pub fn evaluate(&self, point: &[C]) -> Option<C> {
        let n = self.num.evaluate(point)?;
        let mut d = C::one();
        for (f, k) in &self.den {
            let v = f.evaluate(point)?;
            d = d.mul_ref(&v.powi(*k as i64)?);
        }
        Some(n.mul_ref(&d.inv()?))
    }

    pub fn free_of(&self, idx: usize) -> bool {
        self.num.free_of(idx) && self.den.iter().all(|(f, _)| f.free_of(idx))
    }

    pub fn to_text(&self) -> String {
        if self.den.is_empty() {
            return self.num.to_text();
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(f, k)| if *k == 1 { format!("({})", f) } else { format!("({})^{}", f, k) })
            .collect();
        format!("({})/({})", self.num, den.join("*"))
    }
}

/// Builds the image list for [`RatFn::substitute`] from a by-name map.
pub fn images_by_name<C: Coeff>(
    source: &SymbolTable,
    map: &[(&str, RatFn<C>)],
    target: &SymbolTable,
) -> Result<Vec<Option<RatFn<C>>>, RingError> {
    source
        .names()
        .iter()
        .map(|name| {
            if let Some((_, v)) = map.iter().find(|(n, _)| n == name) {
                Ok(Some(v.clone()))
            } else if let Some(i) = target.index(name) {
                Ok(Some(RatFn::var(target, i, 1)))
            } else {
                Ok(None)
            }
        })
        .collect()
}

fn eval_poly<C: Coeff>(
    p: &LaurentPoly<C>,
    images: &[Option<RatFn<C>>],
    target: &SymbolTable,
    cache: &mut HashMap<(usize, i16), RatFn<C>>,
) -> Result<RatFn<C>, RingError> {
    // Fast path: every image involved is a monomial term.
    let mut mono_images: Vec<Option<(Mono, C)>> = Vec::with_capacity(images.len());
    let mut all_mono = true;
    for (i, img) in images.iter().enumerate() {
        let used = !p.free_of(i);
        match img {
            Some(r) if r.den.is_empty() => match r.num.as_term() {
                Some(t) => mono_images.push(Some(t)),
                None => {
                    mono_images.push(None);
                    if used {
                        all_mono = false;
                    }
                }
            },
            Some(_) => {
                mono_images.push(None);
                if used {
                    all_mono = false;
                }
            }
            None => {
                if used {
                    return Err(RingError::UnmappedSymbol(p.table().name(i).to_string()));
                }
                mono_images.push(None);
            }
        }
    }
    if all_mono {
        let mut terms = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let mut out = Mono::ONE;
            let mut coef = c.clone();
            for (i, img) in mono_images.iter().enumerate() {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                let (im, ic) = img.as_ref().expect("checked above");
                if ic.is_zero() && e < 0 {
                    return Err(RingError::ZeroToNegativePower(p.table().name(i).to_string()));
                }
                out = out.mul(&im.pow(e));
                coef = coef.mul_ref(&ic.powi(e as i64).expect("nonzero"));
            }
            terms.push((out, coef));
        }
        return Ok(RatFn::from_poly(LaurentPoly::from_terms(target, terms)));
    }
    let mut acc = RatFn::zero(target);
    for (m, c) in p.terms() {
        let mut t = RatFn::constant(target, c.clone());
        for i in 0..p.table().len() {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let key = (i, e);
            if !cache.contains_key(&key) {
                let img = images[i].as_ref().expect("checked above");
                if img.is_zero() && e < 0 {
                    return Err(RingError::ZeroToNegativePower(p.table().name(i).to_string()));
                }
                cache.insert(key, img.pow(e as i32)?);
            }
            t = t.mul(&cache[&key]);
        }
        acc = acc.add(&t);
    }
    Ok(acc)
}

impl<C: Coeff> PartialEq for RatFn<C> {
    fn eq(&self, other: &Self) -> bool {
        self.table().same(other.table()) && self.eq_exact(other)
    }
}

impl<C: Coeff> fmt::Debug for RatFn<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<C: Coeff> fmt::Display for RatFn<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
