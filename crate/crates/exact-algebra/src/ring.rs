use std::sync::Arc;

/// Ordered variable list with per-variable Laurent flags.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    laurent: Vec<bool>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[(S, bool)]) -> Arc<Ring> {
        let names = vars.iter().map(|(s, _)| s.as_ref().to_string()).collect::<Vec<_>>();
        for (i, a) in names.iter().enumerate() {
            assert!(!names[..i].contains(a), "duplicate variable {a}");
        }
        Arc::new(Ring { names, laurent: vars.iter().map(|(_, l)| *l).collect() })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_laurent(&self, i: usize) -> bool {
        self.laurent[i]
    }
}

pub(crate) fn same(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
