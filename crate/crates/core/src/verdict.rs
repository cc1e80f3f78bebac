//! Outcome of checking a loop against a puzzle's rules.

use std::fmt;

use crate::error::LoopError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<V> {
    Accept,
    /// The loop is well formed but breaks at least one rule.
    Reject(Vec<V>),
    /// The cell list is not a loop on this board.
    Malformed(LoopError),
}

impl<V> Verdict<V> {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }

    pub fn violations(&self) -> &[V] {
        match self {
            Verdict::Reject(v) => v,
            _ => &[],
        }
    }

    pub(crate) fn from_violations(v: Vec<V>) -> Self {
        if v.is_empty() {
            Verdict::Accept
        } else {
            Verdict::Reject(v)
        }
    }
}

/// A violation that names the rule (1, 2 or 3) it breaks.
pub trait RuleTagged {
    fn rule(&self) -> u8;
}

impl<V: fmt::Display> fmt::Display for Verdict<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accept => write!(f, "accept"),
            Verdict::Malformed(e) => write!(f, "malformed loop: {e}"),
            Verdict::Reject(vs) => {
                write!(f, "reject")?;
                for v in vs {
                    write!(f, "\n  {v}")?;
                }
                Ok(())
            }
        }
    }
}
