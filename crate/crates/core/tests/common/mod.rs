//! Property checks shared by the property tests and the acceptance harness.
//! Each returns the number of cases run, or the first counterexample.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use skein_coulomb::coeff::GaussRat;
use skein_coulomb::daha::{build_a1_rep, build_cc_rep, cc_params, spherical_a1, spherical_cc};
use skein_coulomb::exactring::{Mono, SymbolTable};
use skein_coulomb::monopole::{Dressing, Embedding, MonopoleAlgebra};
use skein_coulomb::params::{Ctx, Params};
use skein_coulomb::qdiffop::{agree_on_symmetric_basis, Subst};
use skein_coulomb::{Coeff, Op, Poly, Scalar};
use num_traits::One;

pub type PropResult = Result<u32, String>;

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> PropResult
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new_with_rng(
        Config { cases, failure_persistence: None, ..Config::default() },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    );
    runner.run(&strategy, test).map(|_| cases).map_err(|e| e.to_string())
}

fn ensure(ok: bool, what: &str) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

/// Sparse Laurent data: up to four terms with small exponents.
fn terms(nvars: usize) -> impl Strategy<Value = Vec<(Vec<i16>, i64)>> {
    prop::collection::vec((prop::collection::vec(-2i16..=2, nvars), -3i64..=3), 0..4)
}

fn poly(table: &SymbolTable, data: &[(Vec<i16>, i64)]) -> Poly {
    let terms = data
        .iter()
        .map(|(e, c)| {
            let m = e.iter().enumerate().fold(Mono::default(), |m, (i, &x)| m.with(i, x));
            (m, GaussRat::from_i64(*c))
        })
        .collect();
    Poly::from_terms(table, terms)
}

fn ring_table() -> SymbolTable {
    SymbolTable::new(["qh", "a", "X"]).unwrap()
}

/// Field axioms for rational functions, with evaluation at an integer
/// point as an independent oracle for products and sums.
pub fn ring_axioms(cases: u32) -> PropResult {
    let table = ring_table();
    let point = [GaussRat::from_i64(2), GaussRat::from_i64(3), GaussRat::from_i64(5)];
    run(cases, (terms(3), terms(3), terms(3), terms(3)), |(a, b, c, d)| {
        let (pa, pb, pc, pd) = (poly(&table, &a), poly(&table, &b), poly(&table, &c), poly(&table, &d));
        let ev = |p: &Poly| p.evaluate(&point).unwrap();
        ensure(ev(&pa.mul(&pb)) == ev(&pa).mul_ref(&ev(&pb)), "poly product commutes with evaluation")?;
        ensure(ev(&pa.add(&pb)) == ev(&pa).add_ref(&ev(&pb)), "poly sum commutes with evaluation")?;
        let (x, y, z) = (Scalar::from_poly(pa), Scalar::from_poly(pb), Scalar::from_poly(pc));
        let w = if pd.is_zero() { Scalar::one(&table) } else { Scalar::from_poly(pd) };
        let xw = x.div(&w).unwrap();
        ensure(x.add(&y).add(&z).eq_exact(&x.add(&y.add(&z))), "additive associativity")?;
        ensure(xw.mul(&y.mul(&z)).eq_exact(&xw.mul(&y).mul(&z)), "multiplicative associativity")?;
        ensure(xw.mul(&y.add(&z)).eq_exact(&xw.mul(&y).add(&xw.mul(&z))), "distributivity")?;
        ensure(xw.mul(&y).eq_exact(&y.mul(&xw)), "commutativity")?;
        ensure(xw.sub(&xw).is_zero(), "additive inverse")?;
        if !x.is_zero() {
            ensure(xw.mul(&xw.inv().unwrap()).is_one(), "multiplicative inverse")?;
        }
        Ok(())
    })
}

fn op_data() -> impl Strategy<Value = Vec<((i8, i32), Vec<(Vec<i16>, i64)>)>> {
    prop::collection::vec(((prop_oneof![Just(1i8), Just(-1i8)], -2i32..=2), terms(2)), 1..3)
}

fn build_op(ctx: &Ctx, data: &[((i8, i32), Vec<(Vec<i16>, i64)>)]) -> Op {
    // coefficients are Laurent in (qh, X); the table is [qh, X]
    let table = ctx.table().clone();
    data.iter().fold(Op::zero(&ctx.space), |acc, ((e, k), t)| {
        let c = Scalar::from_poly(poly(&table, t));
        acc.add(&Op::term(&ctx.space, c, Subst::single(*e, *k)))
    })
}

fn op_ctx() -> Ctx {
    Params::symbolic().context(&[], &["X"]).unwrap()
}

/// Composition is associative and agrees with successive application.
pub fn operator_associativity(cases: u32) -> PropResult {
    let ctx = op_ctx();
    run(cases, (op_data(), op_data(), op_data(), terms(2)), |(a, b, c, f)| {
        let (a, b, c) = (build_op(&ctx, &a), build_op(&ctx, &b), build_op(&ctx, &c));
        ensure(a.compose(&b).compose(&c).eq_op(&a.compose(&b.compose(&c))), "(ab)c = a(bc)")?;
        let f = Scalar::from_poly(poly(ctx.table(), &f));
        ensure(a.compose(&b).apply(&f).eq_exact(&a.apply(&b.apply(&f))), "(ab)f = a(bf)")?;
        Ok(())
    })
}

/// Operators of the form `A + A sigma` agree with their fold on the
/// symmetric basis, and so do the spherical generators at random parameters.
pub fn fold_agreement(cases: u32, depth: u32) -> PropResult {
    let ctx = op_ctx();
    let sigma = Op::sigma(&ctx.space);
    let n = run(cases, op_data(), |a| {
        let a = build_op(&ctx, &a);
        let b = a.add(&a.compose(&sigma));
        ensure(agree_on_symmetric_basis(&b, &b.fold_symmetric().unwrap(), depth), "fold agreement")
    })?;
    let m = run(cases.min(8), any::<u64>(), |seed| {
        let p = Params::random(seed);
        let cc = p.context(&["t1", "t2", "t3", "t4"], &["X"]).unwrap();
        let rep = build_cc_rep(&cc, cc_params(&cc)).unwrap();
        let sph = spherical_cc(&rep).unwrap();
        for (raw, folded) in sph.triple.raw.iter().zip([&sph.triple.x, &sph.triple.y, &sph.triple.z]) {
            ensure(agree_on_symmetric_basis(raw, folded, depth), "spherical CC fold agreement")?;
        }
        let a1 = p.context(&["th"], &["X"]).unwrap();
        let rep = build_a1_rep(&a1, a1.param("th")).unwrap();
        let sph = spherical_a1(&rep).unwrap();
        for (raw, folded) in sph.raw.iter().zip([&sph.x, &sph.y, &sph.z]) {
            ensure(agree_on_symmetric_basis(raw, folded, depth), "spherical A1 fold agreement")?;
        }
        Ok(())
    })?;
    Ok(n + m)
}

/// Symmetric dressings in two variables: each term paired with its swap.
fn dressing2() -> impl Strategy<Value = Dressing> {
    prop::collection::vec(((-2i16..=2, -2i16..=2), 1i64..=3), 1..3).prop_map(|ts| {
        let mut terms = Vec::new();
        for ((a, b), c) in ts {
            terms.push((vec![a, b], GaussRat::from_i64(c)));
            if a != b {
                terms.push((vec![b, a], GaussRat::from_i64(c)));
            }
        }
        Dressing::new(2, terms).unwrap()
    })
}

fn algebras() -> [MonopoleAlgebra; 2] {
    let p = Params::symbolic();
    [MonopoleAlgebra::builtin("s04", &p).unwrap(), MonopoleAlgebra::builtin("jordan", &p).unwrap()]
}

/// Dressed monopole operators are invariant under the Weyl swap.
pub fn weyl_invariance(cases: u32) -> PropResult {
    let algs = algebras();
    run(cases, (dressing2(), -3i16..=3, 0usize..2), |(f2, m, which)| {
        let alg = &algs[which];
        let node = alg.only_node().to_string();
        for op in [
            alg.e(&node, &f2).unwrap(),
            alg.f(&node, &f2).unwrap(),
            alg.e1(m).unwrap(),
            alg.f1(m).unwrap(),
            alg.e1(m).unwrap().compose(&alg.f1(-m).unwrap()),
        ] {
            ensure(alg.weyl_image(&op, &node, 0, 1).unwrap().eq_op(&op), "Weyl invariance")?;
        }
        Ok(())
    })
}

/// `x_1^m + x_2^m`, or `1` when `m = 0`.
fn power_pair(m: i16) -> Dressing {
    if m == 0 {
        return Dressing::one(2);
    }
    Dressing::new(2, vec![(vec![m, 0], GaussRat::one()), (vec![0, m], GaussRat::one())]).unwrap()
}

fn homogeneous(alg: &MonopoleAlgebra, kind: u8, m: i16) -> (Op, i32) {
    let node = alg.only_node();
    match kind {
        0 => (alg.e1(m).unwrap(), 1),
        1 => (alg.f1(m).unwrap(), -1),
        2 => (alg.e(node, &power_pair(m)).unwrap(), 2),
        _ => (alg.power_sum(node, m).unwrap(), 0),
    }
}

/// The D-grading of a product of homogeneous elements is the sum.
pub fn grading_additivity(cases: u32) -> PropResult {
    let algs = algebras();
    run(cases, (0u8..4, -3i16..=3, 0u8..4, -3i16..=3, 0usize..2), |(k1, m1, k2, m2, which)| {
        let alg = &algs[which];
        let (a, da) = homogeneous(alg, k1, m1);
        let (b, db) = homogeneous(alg, k2, m2);
        let prod = a.compose(&b);
        if prod.is_zero() {
            return Ok(());
        }
        let g = alg.grading(&prod);
        ensure(g.len() == 1 && g.contains(&vec![da + db]), "grading additivity")
    })
}

/// Random grading-zero elements: Laurent coefficients in w1, w2 times
/// powers of D1 D2^-1, plus a product of dressed monopole operators.
fn invariant_elem(alg: &MonopoleAlgebra, data: &[(i32, Vec<(Vec<i16>, i64)>)], m: i16, n: i16) -> Op {
    let node = alg.only_node();
    let ratio = alg.d(node, 0, 1).unwrap().compose(&alg.d(node, 1, -1).unwrap());
    let inv = alg.d(node, 0, -1).unwrap().compose(&alg.d(node, 1, 1).unwrap());
    let mut out = alg.e1(m).unwrap().compose(&alg.f1(n).unwrap());
    let (w1, w2) = (alg.w(node, 0, 1).unwrap(), alg.w(node, 1, 1).unwrap());
    for (k, t) in data {
        let c = t.iter().fold(alg.ctx.zero(), |acc, (e, c)| {
            let m = w1.pow(e[0] as i32).unwrap().mul(&w2.pow(e[1] as i32).unwrap());
            acc.add(&m.mul(&alg.ctx.int(*c)))
        });
        let d = if *k >= 0 { ratio.pow(*k as u32) } else { inv.pow(k.unsigned_abs()) };
        out = out.add(&alg.mult(c).compose(&d));
    }
    out
}

/// The embedding is additive and multiplicative on invariant elements.
pub fn embedding_homomorphism(cases: u32) -> PropResult {
    let p = Params::symbolic();
    let alg = MonopoleAlgebra::builtin("jordan", &p).unwrap();
    let target = p.context(&["th"], &["X"]).unwrap();
    let emb = Embedding::jordan(&target, Embedding::printed_scale(&target));
    let elem = || (prop::collection::vec((-1i32..=1, terms(2)), 0..3), -1i16..=1, -1i16..=1);
    run(cases, (elem(), elem()), |((da, ma, na), (db, mb, nb))| {
        let a = invariant_elem(&alg, &da, ma, na);
        let b = invariant_elem(&alg, &db, mb, nb);
        let (ea, eb) = (emb.apply(&alg, &a).unwrap(), emb.apply(&alg, &b).unwrap());
        ensure(emb.apply(&alg, &a.compose(&b)).unwrap().eq_op(&ea.compose(&eb)), "multiplicative")?;
        ensure(emb.apply(&alg, &a.add(&b)).unwrap().eq_op(&ea.add(&eb)), "additive")
    })
}
