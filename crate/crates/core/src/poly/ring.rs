use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Role of a variable inside a [`VariableRing`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarClass {
    /// Coordinates `x` of the ambient space.
    Ambient,
    /// Coordinates `u` of the data point.
    Data,
    /// The squared radius `s = t^2`.
    Radius,
    /// Anything else: parameters, multipliers, Rabinowitsch variables.
    Auxiliary,
}

/// An ordered list of named variables. Index 0 is the largest variable in
/// every monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableRing {
    names: Vec<String>,
    classes: Vec<VarClass>,
}

pub type Ring = Arc<VariableRing>;

impl VariableRing {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, VarClass)>) -> Result<Ring> {
        let mut names = Vec::new();
        let mut classes = Vec::new();
        for (name, class) in vars {
            let name = name.into();
            if names.contains(&name) {
                return Err(Error::invalid(format!("duplicate variable `{name}`")));
            }
            names.push(name);
            classes.push(class);
        }
        if classes.iter().filter(|c| **c == VarClass::Radius).count() > 1 {
            return Err(Error::invalid("at most one radius variable is allowed"));
        }
        Ok(Arc::new(VariableRing { names, classes }))
    }

    /// All variables in one class.
    pub fn uniform<S: Into<String>>(names: impl IntoIterator<Item = S>, class: VarClass) -> Result<Ring> {
        Self::new(names.into_iter().map(|n| (n, class)))
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

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn class(&self, i: usize) -> VarClass {
        self.classes[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn indices_of(&self, class: VarClass) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.classes[i] == class).collect()
    }

    pub fn radius(&self) -> Option<usize> {
        self.classes.iter().position(|c| *c == VarClass::Radius)
    }

    /// A new ring with `extra` appended after the existing variables.
    pub fn extended<S: Into<String>>(&self, extra: impl IntoIterator<Item = (S, VarClass)>) -> Result<Ring> {
        let vars = self
            .names
            .iter()
            .cloned()
            .zip(self.classes.iter().copied())
            .chain(extra.into_iter().map(|(n, c)| (n.into(), c)));
        VariableRing::new(vars)
    }

    /// A name not yet used in the ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (0..)
            .map(|k| format!("{base}_{k}"))
            .find(|n| self.index_of(n).is_none())
            .expect("unbounded search")
    }

    /// For each variable of `self`, its index in `target` (matched by name).
    pub fn embedding_into(&self, target: &VariableRing) -> Result<Vec<usize>> {
        self.names
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .ok_or_else(|| Error::RingMismatch(format!("variable `{n}` missing from target ring")))
            })
            .collect()
    }
}

impl fmt::Display for VariableRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.names.join(","))
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
