use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered list of distinct generator names fixing the ambient parameter ring.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct RingCtx {
    names: Vec<String>,
}

/// Shared handle to a ring context. Every ring element carries one.
pub type Ctx = Arc<RingCtx>;

impl RingCtx {
    pub fn new<I, S>(names: I) -> Result<Ctx>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out: Vec<String> = Vec::new();
        for name in names {
            let name = name.into();
            if out.contains(&name) {
                return Err(Error::DuplicateGenerator(name));
            }
            out.push(name);
        }
        Ok(Arc::new(RingCtx { names: out }))
    }

    /// The ring with no generators, i.e. plain rationals.
    pub fn empty() -> Ctx {
        Arc::new(RingCtx { names: Vec::new() })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// This context with any missing names from `extra` appended.
    pub fn extended(&self, extra: &[&str]) -> Ctx {
        let mut names = self.names.clone();
        for e in extra {
            if !names.iter().any(|n| n == e) {
                names.push(e.to_string());
            }
        }
        Arc::new(RingCtx { names })
    }

    /// This context with the names in `drop` removed.
    pub fn without(&self, drop: &[&str]) -> Ctx {
        let names = self
            .names
            .iter()
            .filter(|n| !drop.contains(&n.as_str()))
            .cloned()
            .collect();
        Arc::new(RingCtx { names })
    }
}

pub fn same_ctx(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

pub fn check_ctx(a: &Ctx, b: &Ctx) -> Result<()> {
    if same_ctx(a, b) {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}
