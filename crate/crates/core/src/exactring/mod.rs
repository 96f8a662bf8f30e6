//! Exact sparse Laurent polynomials and rational functions over a declared
//! symbol table.

mod error;
mod mono;
mod poly;
mod ratfn;
mod symbols;

pub use error::RingError;
pub use mono::Mono;
pub use poly::LaurentPoly;
pub use ratfn::{images_by_name, QHalf, RatFn};
pub use symbols::{SymbolTable, MAX_SYMBOLS};

use crate::coeff::Coeff;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic on rational functions.
pub fn scalar_arith<C: Coeff>(lhs: &RatFn<C>, rhs: &RatFn<C>, kind: ArithKind) -> Result<RatFn<C>, RingError> {
    if !lhs.table().same(rhs.table()) {
        return Err(RingError::TableMismatch);
    }
    Ok(match kind {
        ArithKind::Add => lhs.add(rhs),
        ArithKind::Sub => lhs.sub(rhs),
        ArithKind::Mul => lhs.mul(rhs),
        ArithKind::Div => lhs.div(rhs)?,
    })
}

/// Exact equality test by cross-multiplication.
pub fn scalar_eq<C: Coeff>(lhs: &RatFn<C>, rhs: &RatFn<C>) -> Result<bool, RingError> {
    if !lhs.table().same(rhs.table()) {
        return Err(RingError::TableMismatch);
    }
    Ok(lhs.eq_exact(rhs))
}

/// The Laurent polynomial equal to `value`, if the denominator divides.
pub fn laurent_quotient_test<C: Coeff>(value: &RatFn<C>) -> Option<LaurentPoly<C>> {
    value.laurent_quotient()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::GaussRat;

    type R = RatFn<GaussRat>;

    fn table() -> SymbolTable {
        SymbolTable::new(["qh", "t1", "t2", "t3", "X"]).unwrap()
    }

    fn sym(t: &SymbolTable, s: &str) -> R {
        R::symbol(t, s).unwrap()
    }

    fn one(t: &SymbolTable) -> R {
        R::one(t)
    }

    #[test]
    fn additive_inverse_cancels() {
        let t = table();
        let q = sym(&t, "qh").pow(2).unwrap();
        let a = q.sub(&q.inv().unwrap());
        let b = q.inv().unwrap().sub(&q);
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn quotient_reduces() {
        let t = table();
        let x = sym(&t, "X");
        let num = one(&t).sub(&x.pow(2).unwrap());
        let den = one(&t).sub(&x);
        let r = num.div(&den).unwrap();
        assert!(r.is_polynomial());
        assert!(r.eq_exact(&one(&t).add(&x)));
    }

    #[test]
    fn product_of_s_values() {
        let t = table();
        let t1 = sym(&t, "t1");
        let t2 = sym(&t, "t2");
        let s1 = t1.sub(&t1.inv().unwrap());
        let s2 = t2.sub(&t2.inv().unwrap());
        let expect = t1
            .mul(&t2)
            .sub(&t1.div(&t2).unwrap())
            .sub(&t2.div(&t1).unwrap())
            .add(&t1.mul(&t2).inv().unwrap());
        assert!(s1.mul(&s2).eq_exact(&expect));
        assert!(s1.mul(&s2).is_polynomial());
    }

    #[test]
    fn equal_functions_in_different_shapes() {
        let t = table();
        let x = sym(&t, "X");
        let a = one(&t).div(&x.pow(2).unwrap().sub(&one(&t))).unwrap();
        let xm2 = x.pow(-2).unwrap();
        let b = xm2.div(&one(&t).sub(&xm2)).unwrap();
        assert!(scalar_eq(&a, &b).unwrap());
        let c = one(&t).neg().div(&one(&t).sub(&x.pow(2).unwrap())).unwrap();
        assert!(scalar_eq(&a, &c).unwrap());
        assert!(!scalar_eq(&a, &b.neg()).unwrap());
        let q = sym(&t, "qh").pow(4).unwrap();
        assert!(q.eq_exact(&sym(&t, "qh").pow(2).unwrap().pow(2).unwrap()));
    }

    #[test]
    fn quotient_test() {
        let t = table();
        let x = sym(&t, "X");
        let r = one(&t).sub(&x.pow(4).unwrap()).div(&one(&t).sub(&x.pow(2).unwrap())).unwrap();
        let p = laurent_quotient_test(&r).unwrap();
        assert!(R::from_poly(p).eq_exact(&x.pow(2).unwrap().add(&one(&t))));
        let r2 = one(&t).div(&one(&t).sub(&x.pow(2).unwrap())).unwrap();
        assert!(laurent_quotient_test(&r2).is_none());
    }

    #[test]
    fn substitution_with_gaussian_unit() {
        let src = SymbolTable::new(["A", "l3"]).unwrap();
        let dst = table();
        let a = sym(&src, "A");
        let l3 = sym(&src, "l3");
        let qh = sym(&dst, "qh");
        let q = qh.pow(2).unwrap();
        let i = R::constant(&dst, GaussRat::i());
        let l3_img = i.mul(&sym(&dst, "t3")).div(&q).unwrap();
        let map = vec![("A", qh.inv().unwrap()), ("l3", l3_img.clone())];
        let a2 = a.pow(-2).unwrap().substitute_named(&map, &dst).unwrap();
        assert!(a2.eq_exact(&q));
        let v = l3.add(&l3.inv().unwrap()).substitute_named(&map, &dst).unwrap();
        let t3 = sym(&dst, "t3");
        let expect = i.mul(&t3).div(&q).unwrap().sub(&i.mul(&q).div(&t3).unwrap());
        assert!(v.eq_exact(&expect));
    }

    #[test]
    fn table_mismatch_is_reported() {
        let a = R::one(&table());
        let b = R::one(&SymbolTable::new(["X"]).unwrap());
        assert_eq!(scalar_arith(&a, &b, ArithKind::Add).unwrap_err(), RingError::TableMismatch);
        assert_eq!(
            scalar_arith(&a, &R::zero(&table()), ArithKind::Div).unwrap_err(),
            RingError::DegenerateScalar
        );
    }

    #[test]
    fn shift_moves_variable() {
        let t = table();
        let x = sym(&t, "X");
        let xi = t.index("X").unwrap();
        let qh = QHalf::Symbol(t.index("qh").unwrap());
        let f = x.pow(3).unwrap().add(&x.pow(-3).unwrap());
        let g = f.shift(xi, 1, 4, &qh);
        let q = sym(&t, "qh").pow(2).unwrap();
        let expect = q.pow(6).unwrap().mul(&x.pow(3).unwrap()).add(&q.pow(-6).unwrap().mul(&x.pow(-3).unwrap()));
        assert!(g.eq_exact(&expect));
        let r = one(&t).div(&one(&t).sub(&x.pow(2).unwrap())).unwrap();
        let back = r.shift(xi, -1, 0, &qh).shift(xi, -1, 0, &qh);
        assert!(back.eq_exact(&r));
    }
}
