use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A polynomial variable.
///
/// Matrix coordinates print as `x12`, form coefficients as single letters
/// (`a`, `b`, ...), auxiliary variables as `t_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// Entry `(row, col)` (1-based) of a symbolic matrix tagged by a letter.
    Matrix { tag: u8, row: u8, col: u8 },
    /// Coefficient of the `k`-th basis form; printed `a`, `b`, `c`, ...
    Coef(u8),
    Aux { tag: u8, index: u16 },
}

impl Var {
    pub const fn x(row: u8, col: u8) -> Var {
        Var::Matrix { tag: b'x', row, col }
    }

    pub const fn entry(tag: u8, row: u8, col: u8) -> Var {
        Var::Matrix { tag, row, col }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Var::Matrix { tag, row, col } => write!(f, "{}{}{}", tag as char, row, col),
            Var::Coef(k) => write!(f, "{}", (b'a' + k) as char),
            Var::Aux { tag, index } => write!(f, "{}_{}", tag as char, index),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetKind {
    Matrix { n: usize, tag: u8 },
    FormCoefficients { degree: usize },
    Auxiliary { tag: u8 },
}

/// A named block of variables inside a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableSet {
    kind: SetKind,
    vars: Vec<Var>,
}

impl VariableSet {
    /// The `n²` coordinates `tag11, ..., tagnn`, row-major.
    pub fn matrix(n: usize, tag: u8) -> Self {
        assert!((1..=9).contains(&n), "matrix size must be in 1..=9");
        let mut vars = Vec::with_capacity(n * n);
        for i in 1..=n as u8 {
            for j in 1..=n as u8 {
                vars.push(Var::entry(tag, i, j));
            }
        }
        VariableSet { kind: SetKind::Matrix { n, tag }, vars }
    }

    /// Coefficients `a, b, ...` of a binary form of degree `d` (`d + 1` of them).
    pub fn form_coefficients(degree: usize) -> Self {
        assert!(degree < 26, "form degree must be below 26");
        let vars = (0..=degree as u8).map(Var::Coef).collect();
        VariableSet { kind: SetKind::FormCoefficients { degree }, vars }
    }

    /// `tag_1, ..., tag_count`.
    pub fn auxiliary(tag: u8, count: usize) -> Self {
        let vars = (1..=count as u16).map(|index| Var::Aux { tag, index }).collect();
        VariableSet { kind: SetKind::Auxiliary { tag }, vars }
    }

    /// An auxiliary block with an explicit variable list.
    pub fn auxiliary_vars(tag: u8, vars: Vec<Var>) -> Self {
        VariableSet { kind: SetKind::Auxiliary { tag }, vars }
    }

    pub fn kind(&self) -> &SetKind {
        &self.kind
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }
}

#[derive(Debug)]
struct RingData {
    sets: Vec<VariableSet>,
    vars: Vec<Var>,
    index: BTreeMap<Var, usize>,
}

/// An ordered, duplicate-free list of variables. Cheap to clone.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingData>);

impl Ring {
    pub fn new(sets: Vec<VariableSet>) -> Result<Self> {
        let mut vars = Vec::new();
        let mut index = BTreeMap::new();
        for set in &sets {
            for &v in set.vars() {
                if index.insert(v, vars.len()).is_some() {
                    return Err(Error::DuplicateVariable(v));
                }
                vars.push(v);
            }
        }
        Ok(Ring(Arc::new(RingData { sets, vars, index })))
    }

    /// `k[x11, ..., xnn]`.
    pub fn matrix(n: usize) -> Self {
        Self::matrices(n, b"x")
    }

    /// One matrix block per tag, in order.
    pub fn matrices(n: usize, tags: &[u8]) -> Self {
        let sets = tags.iter().map(|&t| VariableSet::matrix(n, t)).collect();
        Ring::new(sets).expect("distinct tags give distinct variables")
    }

    pub fn form_coefficients(degree: usize) -> Self {
        Ring::new(alloc::vec![VariableSet::form_coefficients(degree)])
            .expect("single block")
    }

    pub fn sets(&self) -> &[VariableSet] {
        &self.0.sets
    }

    pub fn vars(&self) -> &[Var] {
        &self.0.vars
    }

    pub fn arity(&self) -> usize {
        self.0.vars.len()
    }

    pub fn index_of(&self, v: Var) -> Option<usize> {
        self.0.index.get(&v).copied()
    }

    pub fn contains(&self, v: Var) -> bool {
        self.0.index.contains_key(&v)
    }

    pub fn require(&self, v: Var) -> Result<usize> {
        self.index_of(v).ok_or(Error::UnknownVariable(v))
    }

    /// `self` followed by the variables of `other` not already present.
    pub fn union(&self, other: &Ring) -> Ring {
        let mut sets = self.0.sets.clone();
        for set in other.sets() {
            let fresh: Vec<Var> = set.vars().iter().copied().filter(|v| !self.contains(*v)).collect();
            if fresh.is_empty() {
                continue;
            }
            if fresh.len() == set.vars().len() {
                sets.push(set.clone());
            } else {
                let tag = match set.kind() {
                    SetKind::Matrix { tag, .. } | SetKind::Auxiliary { tag } => *tag,
                    SetKind::FormCoefficients { .. } => b'c',
                };
                sets.push(VariableSet::auxiliary_vars(tag, fresh));
            }
        }
        Ring::new(sets).expect("fresh variables only")
    }

    /// `self` extended by extra blocks.
    pub fn extend(&self, extra: Vec<VariableSet>) -> Result<Ring> {
        let mut sets = self.0.sets.clone();
        sets.extend(extra);
        Ring::new(sets)
    }

    /// The size of the `x` matrix block, when the ring contains one.
    pub fn matrix_size(&self, tag: u8) -> Option<usize> {
        self.sets().iter().find_map(|s| match s.kind() {
            SetKind::Matrix { n, tag: t } if *t == tag => Some(*n),
            _ => None,
        })
    }

    pub fn describe(&self) -> alloc::string::String {
        let names: Vec<_> = self.vars().iter().map(|v| format!("{v}")).collect();
        format!("k[{}]", names.join(", "))
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.vars == other.0.vars
    }
}

impl Eq for Ring {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_ring_has_n_squared_vars() {
        let r = Ring::matrix(3);
        assert_eq!(r.arity(), 9);
        assert_eq!(r.vars()[1], Var::x(1, 2));
        assert_eq!(r.matrix_size(b'x'), Some(3));
    }

    #[test]
    fn duplicate_variables_are_rejected() {
        let err = Ring::new(alloc::vec![VariableSet::matrix(2, b'x'), VariableSet::matrix(2, b'x')]);
        assert_eq!(err.unwrap_err(), Error::DuplicateVariable(Var::x(1, 1)));
    }

    #[test]
    fn union_skips_shared_variables() {
        let xy = Ring::matrices(2, b"xy");
        let u = xy.union(&Ring::matrices(2, b"yz"));
        assert_eq!(u.arity(), 12);
        assert_eq!(Ring::matrix(2).union(&Ring::matrix(2)), Ring::matrix(2));
    }

    #[test]
    fn variables_print_in_text_format() {
        assert_eq!(format!("{}", Var::x(1, 2)), "x12");
        assert_eq!(format!("{}", Var::Coef(2)), "c");
        assert_eq!(format!("{}", Var::Aux { tag: b't', index: 3 }), "t_3");
    }
}
