use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::monomial::{Monomial, MAX_VARS};
use super::order::TermOrder;
use super::polynomial::Polynomial;
use crate::{Error, Result};

/// Ambient polynomial ring `Q[x0, ..., x(n-1)]` with a term order.
///
/// Rings compare by content: two rings with the same variable names and the
/// same order are the same ring.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

struct RingData {
    names: Vec<String>,
    order: TermOrder,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S], order: TermOrder) -> Result<Ring> {
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        let mut owned: Vec<String> = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            let valid = !name.is_empty()
                && name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid || owned.iter().any(|n| n == name) {
                return Err(Error::BadVariableName(name.to_string()));
            }
            owned.push(name.to_string());
        }
        Ok(Ring(Arc::new(RingData { names: owned, order })))
    }

    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn order(&self) -> &TermOrder {
        &self.0.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: TermOrder) -> Ring {
        if *self.order() == order {
            return self.clone();
        }
        Ring(Arc::new(RingData { names: self.0.names.clone(), order }))
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.0.order.cmp(a, b, self.nvars())
    }

    /// The variable with the given index as a polynomial.
    pub fn var(&self, index: usize) -> Polynomial {
        assert!(index < self.nvars(), "variable index out of range");
        Polynomial::monomial(self, Monomial::var(index, 1), super::rat(1))
    }

    /// The variable with the given name; panics if absent.
    pub fn var_named(&self, name: &str) -> Polynomial {
        let i = self.index_of(name).unwrap_or_else(|| panic!("no variable named {name}"));
        self.var(i)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self, super::rat(1))
    }

    pub fn same(&self, other: &Ring) -> bool {
        self == other
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.names == other.0.names && self.0.order == other.0.order)
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}; {:?}]", self.0.names.join(","), self.0.order)
    }
}
