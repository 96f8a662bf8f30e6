//! Finitely presented algebras over a parameter ring, and verification that
//! an assignment of generators to operators kills every defining relation.

use crate::coeff::Coeff;
use crate::exactring::{RatFn, RingError, SymbolTable};
use crate::qdiffop::{sum_all, DiffOp, OpError, OpSpace};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("generator `{0}` has no image")]
    UnmappedGenerator(String),
    #[error("parameter `{0}` has no translation")]
    UnmappedParameter(String),
    #[error("relation {0} uses undeclared generator `{1}`")]
    UndeclaredGenerator(usize, String),
    #[error("relation {0} has no terms")]
    EmptyRelation(usize),
    #[error(transparent)]
    Op(#[from] OpError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// `sum coeff * word = 0`; the empty word is the identity.
#[derive(Clone, Debug)]
pub struct Relation<C: Coeff> {
    pub label: String,
    pub terms: Vec<(RatFn<C>, Vec<String>)>,
}

impl<C: Coeff> Relation<C> {
    pub fn new(label: impl Into<String>, terms: Vec<(RatFn<C>, Vec<String>)>) -> Self {
        Relation { label: label.into(), terms }
    }

    /// Builds a relation from `(coeff, "a b c")` pairs; words are
    /// whitespace-separated generator names, `""` for the identity.
    pub fn parse(label: impl Into<String>, terms: Vec<(RatFn<C>, &str)>) -> Self {
        let terms = terms
            .into_iter()
            .map(|(c, w)| (c, w.split_whitespace().map(str::to_string).collect()))
            .collect();
        Relation { label: label.into(), terms }
    }
}

#[derive(Clone, Debug)]
pub struct Presentation<C: Coeff> {
    pub name: String,
    pub generators: Vec<String>,
    pub parameters: SymbolTable,
    pub relations: Vec<Relation<C>>,
}

#[derive(Serialize)]
struct TermJson {
    coeff: String,
    word: Vec<String>,
}

#[derive(Serialize)]
struct RelationJson {
    label: String,
    terms: Vec<TermJson>,
}

#[derive(Serialize)]
struct PresentationJson<'a> {
    name: &'a str,
    generators: &'a [String],
    parameters: &'a [String],
    relations: Vec<RelationJson>,
}

impl<C: Coeff> Presentation<C> {
    pub fn new(
        name: impl Into<String>,
        generators: &[&str],
        parameters: SymbolTable,
        relations: Vec<Relation<C>>,
    ) -> Result<Self, PresentationError> {
        let generators: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
        for (i, r) in relations.iter().enumerate() {
            if r.terms.is_empty() {
                return Err(PresentationError::EmptyRelation(i));
            }
            for (c, w) in &r.terms {
                if !c.table().same(&parameters) {
                    return Err(RingError::TableMismatch.into());
                }
                if let Some(g) = w.iter().find(|g| !generators.contains(g)) {
                    return Err(PresentationError::UndeclaredGenerator(i, g.clone()));
                }
            }
        }
        Ok(Presentation { name: name.into(), generators, parameters, relations })
    }

    /// JSON description: generators, parameters, relations as
    /// coefficient/word lists.
    pub fn to_json(&self) -> serde_json::Value {
        let doc = PresentationJson {
            name: &self.name,
            generators: &self.generators,
            parameters: self.parameters.names(),
            relations: self
                .relations
                .iter()
                .map(|r| RelationJson {
                    label: r.label.clone(),
                    terms: r
                        .terms
                        .iter()
                        .map(|(c, w)| TermJson { coeff: c.to_text(), word: w.clone() })
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("presentation serializes")
    }
}

/// Generator images and a translation of presentation parameters into the
/// operator coefficient ring.
#[derive(Clone, Debug)]
pub struct RepMap<C: Coeff> {
    pub space: Arc<OpSpace<C>>,
    pub images: BTreeMap<String, DiffOp<C>>,
    pub translation: BTreeMap<String, RatFn<C>>,
}

impl<C: Coeff> RepMap<C> {
    pub fn new(space: &Arc<OpSpace<C>>) -> Self {
        RepMap { space: space.clone(), images: BTreeMap::new(), translation: BTreeMap::new() }
    }

    pub fn image(mut self, generator: &str, op: DiffOp<C>) -> Self {
        self.images.insert(generator.to_string(), op);
        self
    }

    pub fn param(mut self, name: &str, value: RatFn<C>) -> Self {
        self.translation.insert(name.to_string(), value);
        self
    }

    /// Translates a coefficient over `params` into the operator table.
    pub fn translate(&self, c: &RatFn<C>) -> Result<RatFn<C>, PresentationError> {
        let images = self.images_for(c.table())?;
        Ok(c.substitute(&images, &self.space.table)?)
    }

    fn images_for(&self, params: &SymbolTable) -> Result<Vec<Option<RatFn<C>>>, PresentationError> {
        params
            .names()
            .iter()
            .map(|n| {
                self.translation
                    .get(n)
                    .cloned()
                    .map(Some)
                    .ok_or_else(|| PresentationError::UnmappedParameter(n.clone()))
            })
            .collect()
    }
}

/// Word evaluation with a prefix cache, so that words sharing a prefix
/// share the compositions.
pub struct WordEvaluator<'a, C: Coeff> {
    rep: &'a RepMap<C>,
    cache: HashMap<Vec<String>, DiffOp<C>>,
}

impl<'a, C: Coeff> WordEvaluator<'a, C> {
    pub fn new(rep: &'a RepMap<C>) -> Self {
        WordEvaluator { rep, cache: HashMap::new() }
    }

    pub fn eval(&mut self, word: &[String]) -> Result<DiffOp<C>, PresentationError> {
        if word.is_empty() {
            return Ok(DiffOp::identity(&self.rep.space));
        }
        if let Some(op) = self.cache.get(word) {
            return Ok(op.clone());
        }
        let last = &word[word.len() - 1];
        let img = self
            .rep
            .images
            .get(last)
            .ok_or_else(|| PresentationError::UnmappedGenerator(last.clone()))?;
        let prefix = self.eval(&word[..word.len() - 1])?;
        let op = prefix.try_compose(img)?;
        self.cache.insert(word.to_vec(), op.clone());
        Ok(op)
    }
}

/// Left-to-right product of generator images (the rightmost acts first).
pub fn eval_word<C: Coeff>(rep: &RepMap<C>, word: &[String]) -> Result<DiffOp<C>, PresentationError> {
    WordEvaluator::new(rep).eval(word)
}

fn residual_with<C: Coeff>(
    ev: &mut WordEvaluator<'_, C>,
    rel: &Relation<C>,
) -> Result<DiffOp<C>, PresentationError> {
    let rep = ev.rep;
    // collect per substitution so each coefficient is summed once
    let mut parts: BTreeMap<_, Vec<RatFn<C>>> = BTreeMap::new();
    for (c, w) in &rel.terms {
        let coeff = rep.translate(c)?;
        let op = ev.eval(w)?;
        for (g, a) in op.terms() {
            parts.entry(g.clone()).or_default().push(coeff.mul(a));
        }
    }
    let mut out = DiffOp::zero(&rep.space);
    for (g, ps) in parts {
        let s = sum_all(&rep.space.table, ps);
        out = out.add(&DiffOp::term(&rep.space, s, g));
    }
    Ok(out)
}

/// `sum translate(coeff) * eval_word(word)`; zero iff the relation holds.
pub fn relation_residual<C: Coeff>(rep: &RepMap<C>, rel: &Relation<C>) -> Result<DiffOp<C>, PresentationError> {
    residual_with(&mut WordEvaluator::new(rep), rel)
}

#[derive(Clone, Debug)]
pub struct RelationVerdict<C: Coeff> {
    pub index: usize,
    pub label: String,
    pub pass: bool,
    pub residual: DiffOp<C>,
}

/// Per-relation verdicts; relations are checked concurrently.
pub fn check_presentation<C: Coeff>(
    rep: &RepMap<C>,
    pres: &Presentation<C>,
) -> Result<Vec<RelationVerdict<C>>, PresentationError> {
    for g in &pres.generators {
        if !rep.images.contains_key(g) {
            return Err(PresentationError::UnmappedGenerator(g.clone()));
        }
    }
    rep.images_for(&pres.parameters)?;
    pres.relations
        .par_iter()
        .enumerate()
        .map(|(index, rel)| {
            let residual = relation_residual(rep, rel)?;
            Ok(RelationVerdict { index, label: rel.label.clone(), pass: residual.is_zero(), residual })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::GaussRat;
    use crate::exactring::QHalf;

    type R = RatFn<GaussRat>;

    fn setup() -> (Arc<OpSpace<GaussRat>>, SymbolTable) {
        let table = SymbolTable::new(["qh", "X"]).unwrap();
        let space = OpSpace::new(table, &["X"], QHalf::Symbol(0)).unwrap();
        (space, SymbolTable::new(["A"]).unwrap())
    }

    #[test]
    fn empty_word_and_products() {
        let (space, _) = setup();
        let x = R::var(&space.table, 1, 1);
        let alpha = DiffOp::mult(&space, x.add(&x.inv().unwrap()));
        let rep = RepMap::new(&space).image("a", alpha.clone());
        assert!(eval_word(&rep, &[]).unwrap().eq_op(&DiffOp::identity(&space)));
        let aa = eval_word(&rep, &["a".into(), "a".into()]).unwrap();
        assert!(aa.eq_op(&alpha.compose(&alpha)));
        assert_eq!(
            eval_word(&rep, &["b".into()]).unwrap_err(),
            PresentationError::UnmappedGenerator("b".into())
        );
    }

    #[test]
    fn trivial_relation_and_empty_presentation() {
        let (space, params) = setup();
        let rep = RepMap::new(&space)
            .image("a", DiffOp::tau(&space))
            .param("A", R::var(&space.table, 0, -1));
        let one = R::one(&params);
        let rel = Relation::parse("a-a", vec![(one.clone(), "a"), (one.neg(), "a")]);
        assert!(relation_residual(&rep, &rel).unwrap().is_zero());
        let empty = Presentation::<GaussRat>::new("empty", &[], params.clone(), vec![]).unwrap();
        assert!(check_presentation(&rep, &empty).unwrap().is_empty());
        let bad = Presentation::new("bad", &["a"], params, vec![Relation::parse("r", vec![(one, "c")])]);
        assert!(matches!(bad, Err(PresentationError::UndeclaredGenerator(0, _))));
    }

    #[test]
    fn json_lists_relations() {
        let (_, params) = setup();
        let a = R::symbol(&params, "A").unwrap();
        let p = Presentation::new("p", &["x"], params, vec![Relation::parse("r", vec![(a, "x x")])]).unwrap();
        let j = p.to_json();
        assert_eq!(j["relations"][0]["terms"][0]["word"], serde_json::json!(["x", "x"]));
        assert_eq!(j["parameters"], serde_json::json!(["A"]));
    }
}
