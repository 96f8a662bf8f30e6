use super::error::RingError;
use std::fmt;
use std::sync::Arc;

/// Upper bound on the number of symbols in one table. Exponent vectors are
/// fixed-size arrays of this length so that monomials are `Copy`.
pub const MAX_SYMBOLS: usize = 16;

/// An ordered list of distinct formal symbols.
///
/// The order is the lexicographic priority of the term order: the first
/// symbol is the most significant. Tables are cheap to clone and compare.
#[derive(Clone)]
pub struct SymbolTable {
    names: Arc<[String]>,
}

impl SymbolTable {
    pub fn new<I, S>(names: I) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_SYMBOLS {
            return Err(RingError::TooManySymbols { max: MAX_SYMBOLS, got: names.len() });
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(RingError::DuplicateSymbol(n.clone()));
            }
        }
        Ok(SymbolTable { names: names.into() })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize, RingError> {
        self.index(name).ok_or_else(|| RingError::UnknownSymbol(name.to_string()))
    }

    pub fn same(&self, other: &SymbolTable) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl PartialEq for SymbolTable {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for SymbolTable {}

impl fmt::Debug for SymbolTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}
