//! Name → constructor tables for the interchangeable strategies (families,
//! bijections, verification suites), selected at runtime by name.

use std::collections::BTreeMap;

use crate::error::{invalid, Error, Result};

/// Loose parameter bag filled from the command line or from code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub p: Option<u32>,
    pub k: Option<u32>,
    pub t: Option<u32>,
    pub mu: Option<u32>,
    pub gamma: Option<u32>,
    pub alpha: Option<u32>,
    pub i: Option<u32>,
    pub ell: Option<u32>,
    pub m: Option<u32>,
    pub modulus: Option<u32>,
    pub residues: Option<Vec<u32>>,
    pub negative: bool,
}

macro_rules! required {
    ($($name:ident),*) => {
        $(
            pub fn $name(&self) -> Result<u32> {
                self.$name.ok_or(Error::MissingParameter(stringify!($name)))
            }
        )*
    };
}

impl Params {
    required!(p, k, t, mu, gamma, alpha, i, ell, m, modulus);

    pub fn residues(&self) -> Result<&[u32]> {
        self.residues.as_deref().ok_or(Error::MissingParameter("residues"))
    }

    pub fn even_alpha(&self) -> Result<u32> {
        let alpha = self.alpha()?;
        if alpha < 2 || alpha % 2 != 0 {
            return Err(invalid("alpha", format!("must be a positive even integer, got {alpha}")));
        }
        Ok(alpha)
    }
}

type Builder<T> = fn(&Params) -> Result<Box<T>>;

struct Entry<T: ?Sized> {
    summary: &'static str,
    build: Builder<T>,
}

pub struct Registry<T: ?Sized> {
    kind: &'static str,
    entries: BTreeMap<&'static str, Entry<T>>,
}

impl<T: ?Sized> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Self {
            kind,
            entries: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, name: &'static str, summary: &'static str, build: Builder<T>) -> &mut Self {
        self.entries.insert(name, Entry { summary, build });
        self
    }

    pub fn build(&self, name: &str, params: &Params) -> Result<Box<T>> {
        match self.entries.get(name) {
            Some(entry) => (entry.build)(params),
            None => Err(Error::UnknownName {
                kind: self.kind,
                name: name.to_string(),
                known: self.names().collect::<Vec<_>>().join(", "),
            }),
        }
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.contains_key(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }

    /// `(name, summary)` pairs in name order.
    pub fn describe(&self) -> Vec<(&'static str, &'static str)> {
        self.entries.iter().map(|(n, e)| (*n, e.summary)).collect()
    }
}
