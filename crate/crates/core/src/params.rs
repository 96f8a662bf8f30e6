//! Evaluation modes and operator contexts.
//!
//! In symbolic mode every parameter is a formal symbol. In random mode the
//! base parameters `qh, th, t1..t4` are replaced by distinct small primes
//! drawn from a seeded generator; flavor parameters of the quiver side are
//! derived from those through the fixed dictionaries, so both sides of a
//! theorem check see the same specialization.

use crate::coeff::{Coeff, GaussRat};
use crate::exactring::{QHalf, RingError, SymbolTable};
use crate::qdiffop::OpSpace;
use crate::{Op, Poly, Scalar};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

pub const BASE_PARAMS: [&str; 6] = ["qh", "th", "t1", "t2", "t3", "t4"];

const PRIMES: [i64; 15] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Random,
}

/// A parameter specialization: empty in symbolic mode.
#[derive(Clone, Debug)]
pub struct Params {
    mode: Mode,
    seed: u64,
    values: BTreeMap<String, GaussRat>,
}

impl Params {
    pub fn symbolic() -> Self {
        Params { mode: Mode::Symbolic, seed: 0, values: BTreeMap::new() }
    }

    pub fn random(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pool = PRIMES.to_vec();
        pool.shuffle(&mut rng);
        let values = BASE_PARAMS
            .iter()
            .zip(pool)
            .map(|(n, p)| (n.to_string(), GaussRat::from_i64(p)))
            .collect();
        Params { mode: Mode::Random, seed, values }
    }

    pub fn new(mode: Mode, seed: u64) -> Self {
        match mode {
            Mode::Symbolic => Self::symbolic(),
            Mode::Random => Self::random(seed),
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn is_symbolic(&self) -> bool {
        self.mode == Mode::Symbolic
    }

    /// The numeric value of a base or derived parameter (random mode only).
    pub fn value(&self, name: &str) -> Option<GaussRat> {
        if self.is_symbolic() {
            return None;
        }
        if let Some(v) = self.values.get(name) {
            return Some(v.clone());
        }
        let get = |n: &str| self.values[n].clone();
        let inv = |n: &str| get(n).inv().expect("prime is nonzero");
        // quiver flavor parameters, through the embedding dictionaries
        Some(match name {
            "z11" => get("t4"),
            "z12" => inv("t4"),
            "z21" => get("t1"),
            "z22" => inv("t1"),
            "za" => get("t3"),
            "zb" => get("t2"),
            "z" => {
                let th = get("th");
                th.mul_ref(&th).mul_ref(&inv("qh").powi(2)?)
            }
            _ => return None,
        })
    }

    /// Builds an operator context over `params` (besides `qh`) and the
    /// distinguished variables `vars`.
    pub fn context(&self, params: &[&str], vars: &[&str]) -> Result<Ctx, RingError> {
        let (names, qh): (Vec<&str>, _) = if self.is_symbolic() {
            let mut n = vec!["qh"];
            n.extend(params.iter().filter(|p| **p != "qh"));
            n.extend(vars);
            (n, QHalf::Symbol(0))
        } else {
            for p in params {
                if self.value(p).is_none() {
                    return Err(RingError::UnknownSymbol(p.to_string()));
                }
            }
            (vars.to_vec(), QHalf::Value(self.values["qh"].clone()))
        };
        let table = SymbolTable::new(names)?;
        let space = OpSpace::new(table, vars, qh)?;
        Ok(Ctx { space, params: self.clone() })
    }
}

/// An operator space together with the parameter specialization it uses.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub space: Arc<OpSpace<GaussRat>>,
    params: Params,
}

impl Ctx {
    /// A context over an explicitly built space.
    pub fn from_space(space: Arc<OpSpace<GaussRat>>, params: Params) -> Self {
        Ctx { space, params }
    }

    pub fn table(&self) -> &SymbolTable {
        &self.space.table
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// A parameter as a scalar: its symbol, or its random value.
    pub fn param(&self, name: &str) -> Scalar {
        if name == "qh" {
            return self.qh(1);
        }
        match self.params.value(name) {
            Some(v) => Scalar::constant(self.table(), v),
            None => Scalar::symbol(self.table(), name).expect("parameter declared in context"),
        }
    }

    pub fn var(&self, name: &str) -> Scalar {
        Scalar::symbol(self.table(), name).expect("variable declared in context")
    }

    /// `q^(k/2)`.
    pub fn qh(&self, k: i32) -> Scalar {
        self.space.q_half_power(k)
    }

    /// `q^k`.
    pub fn q(&self, k: i32) -> Scalar {
        self.qh(2 * k)
    }

    pub fn int(&self, n: i64) -> Scalar {
        Scalar::int(self.table(), n)
    }

    pub fn constant(&self, c: GaussRat) -> Scalar {
        Scalar::constant(self.table(), c)
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(self.table())
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(self.table())
    }

    pub fn id(&self) -> Op {
        Op::identity(&self.space)
    }

    pub fn mult(&self, c: Scalar) -> Op {
        Op::mult(&self.space, c)
    }

    /// The first distinguished variable as a scalar.
    pub fn x(&self) -> Scalar {
        Scalar::var(self.table(), self.space.vars[0], 1)
    }

    /// `X^n` in the first distinguished variable.
    pub fn x_pow(&self, n: i16) -> Scalar {
        Scalar::var(self.table(), self.space.vars[0], n)
    }

    /// `f(X) -> f(1/X)` on a scalar in the first distinguished variable.
    pub fn reflect(&self, f: &Scalar) -> Scalar {
        f.shift(self.space.vars[0], -1, 0, &self.space.qh)
    }

    /// Substitutes `X -> q^(k/2) X` in a scalar.
    pub fn shifted(&self, f: &Scalar, k: i32) -> Scalar {
        f.shift(self.space.vars[0], 1, k, &self.space.qh)
    }

    /// The Laurent polynomial equal to `f` when `f` is one and is invariant
    /// under `X -> 1/X`.
    pub fn symmetric_laurent(&self, f: &Scalar) -> Option<Poly> {
        let p = f.laurent_quotient()?;
        f.eq_exact(&self.reflect(f)).then_some(p)
    }

    /// True when `f` does not depend on any distinguished variable. A
    /// rational function fixed by `v -> q v` is constant in `v` because `q`
    /// is not a root of unity, so incomplete cancellation cannot mislead.
    pub fn is_constant_in_vars(&self, f: &Scalar) -> bool {
        self.space
            .vars
            .iter()
            .all(|&v| f.free_of(v) || f.eq_exact(&f.shift(v, 1, 2, &self.space.qh)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_values_are_distinct_and_seeded() {
        let a = Params::random(42);
        let b = Params::random(42);
        let vals: Vec<_> = BASE_PARAMS.iter().map(|n| a.value(n).unwrap()).collect();
        let mut dedup = vals.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), vals.len());
        assert_eq!(vals, BASE_PARAMS.iter().map(|n| b.value(n).unwrap()).collect::<Vec<_>>());
        assert_eq!(a.value("z12").unwrap(), a.value("t4").unwrap().inv().unwrap());
    }

    #[test]
    fn contexts_by_mode() {
        let s = Params::symbolic().context(&["t1"], &["X"]).unwrap();
        assert_eq!(s.table().names(), &["qh", "t1", "X"]);
        assert!(s.param("t1").as_constant().is_none());
        let r = Params::random(7).context(&["t1"], &["X"]).unwrap();
        assert_eq!(r.table().names(), &["X"]);
        assert!(r.param("t1").as_constant().is_some());
        assert!(r.qh(2).as_constant().is_some());
    }
}
