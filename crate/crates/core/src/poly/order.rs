use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

use super::{Monomial, VarSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
        }
    }
}

/// A monomial order: a kind plus a variable priority (`priority[0]` is the
/// largest variable).
///
/// The order is realised through an integer sort key per monomial whose
/// lexicographic comparison agrees with the order. The key is additive:
/// `key(a*b) = key(a) + key(b)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.kind.name(), self.priority)
    }
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            priority: (0..nvars).collect(),
        }
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn deglex(nvars: usize) -> Self {
        Self::new(OrderKind::DegLex, nvars)
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Self::new(OrderKind::DegRevLex, nvars)
    }

    /// `priority` must be a permutation of `0..nvars`.
    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; priority.len()];
        for &p in &priority {
            if p >= priority.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidOrder(format!(
                    "priority {priority:?} is not a permutation"
                )));
            }
        }
        Ok(MonomialOrder { kind, priority })
    }

    /// Parses `kind[:v1,v2,...]`. Listed variables come first, highest first;
    /// unlisted ones follow in declaration order.
    pub fn parse(text: &str, vars: &VarSet) -> Result<Self> {
        let (kind, prio) = match text.split_once(':') {
            Some((k, p)) => (k.trim(), Some(p)),
            None => (text.trim(), None),
        };
        let kind = match kind {
            "lex" => OrderKind::Lex,
            "deglex" => OrderKind::DegLex,
            "degrevlex" | "grevlex" => OrderKind::DegRevLex,
            other => return Err(Error::InvalidOrder(format!("unknown order kind `{other}`"))),
        };
        let mut priority = Vec::new();
        if let Some(p) = prio {
            for name in p.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let i = vars.require(name)?;
                if priority.contains(&i) {
                    return Err(Error::InvalidOrder(format!("`{name}` listed twice")));
                }
                priority.push(i);
            }
        }
        for i in 0..vars.len() {
            if !priority.contains(&i) {
                priority.push(i);
            }
        }
        Self::with_priority(kind, priority)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn is_degree_compatible(&self) -> bool {
        !matches!(self.kind, OrderKind::Lex)
    }

    /// Canonical text form, e.g. `deglex:y,x`.
    pub fn describe(&self, vars: &VarSet) -> String {
        let names: Vec<&str> = self.priority.iter().map(|&i| vars.name(i)).collect();
        format!("{}:{}", self.kind.name(), names.join(","))
    }

    /// Sort key; lexicographic comparison of keys is the monomial order.
    pub fn key(&self, m: &Monomial) -> Vec<i64> {
        let e = m.exponents();
        match self.kind {
            OrderKind::Lex => self.priority.iter().map(|&i| e[i] as i64).collect(),
            OrderKind::DegLex => std::iter::once(m.degree() as i64)
                .chain(self.priority.iter().map(|&i| e[i] as i64))
                .collect(),
            OrderKind::DegRevLex => std::iter::once(m.degree() as i64)
                .chain(self.priority.iter().rev().map(|&i| -(e[i] as i64)))
                .collect(),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn deglex_with_y_first() {
        let vars = VarSet::new(["x", "y"]).unwrap();
        let ord = MonomialOrder::parse("deglex:y", &vars).unwrap();
        assert_eq!(ord.priority(), &[1, 0]);
        // degree dominates
        assert_eq!(ord.compare(&m(&[3, 3]), &m(&[5, 0])), Ordering::Greater);
        // same degree: more y is bigger
        assert_eq!(ord.compare(&m(&[2, 4]), &m(&[6, 0])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[1, 1]), &m(&[2, 0])), Ordering::Greater);
    }

    #[test]
    fn degrevlex_tiebreak() {
        let ord = MonomialOrder::degrevlex(3);
        // x*z^2 < y^3? same degree; last variable z: 2 vs 0 -> fewer z is bigger
        assert_eq!(ord.compare(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Less);
        assert_eq!(ord.compare(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let ord = MonomialOrder::lex(2);
        assert_eq!(ord.compare(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
    }

    #[test]
    fn keys_are_additive() {
        for ord in [
            MonomialOrder::lex(3),
            MonomialOrder::deglex(3),
            MonomialOrder::with_priority(OrderKind::DegRevLex, vec![2, 0, 1]).unwrap(),
        ] {
            let a = m(&[1, 2, 0]);
            let b = m(&[0, 1, 3]);
            let sum: Vec<i64> = ord.key(&a).iter().zip(ord.key(&b)).map(|(x, y)| x + y).collect();
            assert_eq!(ord.key(&a.mul(&b)), sum);
        }
    }

    #[test]
    fn parse_errors() {
        let vars = VarSet::new(["x", "y"]).unwrap();
        assert!(MonomialOrder::parse("foo", &vars).is_err());
        assert!(MonomialOrder::parse("lex:z", &vars).is_err());
        assert!(MonomialOrder::parse("lex:x,x", &vars).is_err());
        assert_eq!(
            MonomialOrder::parse("degrevlex", &vars).unwrap().describe(&vars),
            "degrevlex:x,y"
        );
    }
}
