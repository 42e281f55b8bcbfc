use std::fmt;
use std::sync::Arc;

use crate::AlgebraError;

/// Ordered list of distinct variable names. Index 0 is always `t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    /// Builds a variable set from names not including `t`; `t` is prepended.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<VarSet>, AlgebraError> {
        let mut all = vec!["t".to_string()];
        for n in names {
            let n = n.as_ref();
            if n.is_empty() || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(AlgebraError::BadVariable(n.to_string()));
            }
            if all.iter().any(|m| m == n) {
                return Err(AlgebraError::DuplicateVariable(n.to_string()));
            }
            all.push(n.to_string());
        }
        Ok(Arc::new(VarSet { names: all }))
    }

    /// `t, x1..xn, y1..ym, w1..wp, z1..zq` followed by `extra`.
    pub fn families(n: usize, m: usize, p: usize, q: usize, extra: &[&str]) -> Arc<VarSet> {
        let mut names = Vec::new();
        for (prefix, count) in [("x", n), ("y", m), ("w", p), ("z", q)] {
            for i in 1..=count {
                names.push(format!("{prefix}{i}"));
            }
        }
        names.extend(extra.iter().map(|s| s.to_string()));
        VarSet::new(&names).expect("family names are distinct")
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

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize, AlgebraError> {
        self.index(name).ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarSet{:?}", self.names)
    }
}

pub(crate) fn same(a: &Arc<VarSet>, b: &Arc<VarSet>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}
