//! Constraints, quantifier-free formulae (conjunctions of constraints) and
//! problems made of a sequence of them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::poly::{Polynomial, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relop {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl Relop {
    pub fn as_str(self) -> &'static str {
        match self {
            Relop::Eq => "=",
            Relop::Ne => "!=",
            Relop::Lt => "<",
            Relop::Le => "<=",
            Relop::Gt => ">",
            Relop::Ge => ">=",
        }
    }

    /// The relation obtained after multiplying both sides by -1.
    pub fn negated_sides(self) -> Relop {
        match self {
            Relop::Lt => Relop::Gt,
            Relop::Le => Relop::Ge,
            Relop::Gt => Relop::Lt,
            Relop::Ge => Relop::Le,
            r => r,
        }
    }
}

impl fmt::Display for Relop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `poly relop 0`, with `poly` sign-normalized.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Constraint {
    poly: Polynomial,
    relop: Relop,
}

impl Constraint {
    /// Normalizes the sign of `poly`, flipping the relation when it negates.
    /// `None` for the zero polynomial.
    pub fn new(poly: Polynomial, relop: Relop) -> Option<Constraint> {
        match poly.leading_sign() {
            0 => None,
            s if s < 0 => Some(Constraint { poly: -poly, relop: relop.negated_sides() }),
            _ => Some(Constraint { poly, relop }),
        }
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn relop(&self) -> Relop {
        self.relop
    }

    pub fn is_equational(&self) -> bool {
        self.relop == Relop::Eq
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Qff {
    pub constraints: Vec<Constraint>,
}

impl Qff {
    pub fn new(constraints: Vec<Constraint>) -> Self {
        Qff { constraints }
    }

    pub fn ec_count(&self) -> usize {
        self.constraints.iter().filter(|c| c.is_equational()).count()
    }

    /// Equational constraints in input order.
    pub fn equations(&self) -> impl Iterator<Item = &Constraint> {
        self.constraints.iter().filter(|c| c.is_equational())
    }

    pub fn polys(&self) -> impl Iterator<Item = &Polynomial> {
        self.constraints.iter().map(|c| c.poly())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Problem {
    pub variables: Vec<Variable>,
    pub qffs: Vec<Qff>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("no variables declared")]
    NoVariables,
    #[error("no QFF")]
    NoQff,
    #[error("duplicate variable {0}")]
    DuplicateVariable(String),
    #[error("variable {name} declared at position {position} has index {index}")]
    BadIndex { name: String, position: usize, index: usize },
    #[error("empty QFF (QFF {0})")]
    EmptyQff(usize),
    #[error("undeclared variable in QFF {qff}, constraint {constraint}")]
    UndeclaredVariable { qff: usize, constraint: usize },
    #[error("polynomial arity differs from the declared variable count in QFF {qff}, constraint {constraint}")]
    ArityMismatch { qff: usize, constraint: usize },
    #[error("zero polynomial in QFF {qff}, constraint {constraint}")]
    ZeroPolynomial { qff: usize, constraint: usize },
    #[error("polynomial not sign-normalized in QFF {qff}, constraint {constraint}")]
    NotNormalized { qff: usize, constraint: usize },
    #[error("QFF {0} has more than 9 equational constraints")]
    TooManyEquations(usize),
}

impl Problem {
    /// Builds a problem from names and QFFs; indices follow declaration order.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>, qffs: Vec<Qff>) -> Self {
        let variables = names
            .into_iter()
            .enumerate()
            .map(|(index, n)| Variable { name: n.into(), index })
            .collect();
        Problem { variables, qffs }
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.variables.len()).map(Var)
    }

    pub fn names(&self) -> Vec<&str> {
        self.variables.iter().map(|v| v.name.as_str()).collect()
    }

    pub fn name(&self, v: Var) -> &str {
        &self.variables[v.0].name
    }

    pub fn var_by_name(&self, name: &str) -> Option<Var> {
        self.variables.iter().position(|v| v.name == name).map(Var)
    }

    /// One digit per QFF giving its number of equational constraints.
    pub fn system_type(&self) -> String {
        self.qffs
            .iter()
            .map(|q| char::from_digit(q.ec_count().min(9) as u32, 10).expect("digit"))
            .collect()
    }

    /// System type with digits sorted descending, so "21" and "12" group together.
    pub fn system_type_sorted(&self) -> String {
        let mut d: Vec<char> = self.system_type().chars().collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d.into_iter().collect()
    }

    /// Deduplicated, sign-normalized set of every constraint polynomial.
    pub fn defining_polynomials(&self) -> BTreeSet<Polynomial> {
        self.qffs
            .iter()
            .flat_map(|q| q.polys())
            .filter(|p| !p.is_zero())
            .map(|p| p.sign_normalized())
            .collect()
    }

    pub fn ec_free(&self) -> bool {
        self.qffs.iter().all(|q| q.ec_count() == 0)
    }

    /// Reports every invariant violation, not just the first.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        if self.variables.is_empty() {
            out.push(Violation::NoVariables);
        }
        if self.qffs.is_empty() {
            out.push(Violation::NoQff);
        }
        let mut seen = BTreeSet::new();
        for (pos, v) in self.variables.iter().enumerate() {
            if !seen.insert(v.name.as_str()) {
                out.push(Violation::DuplicateVariable(v.name.clone()));
            }
            if v.index != pos {
                out.push(Violation::BadIndex { name: v.name.clone(), position: pos, index: v.index });
            }
        }
        let n = self.variables.len();
        for (qi, q) in self.qffs.iter().enumerate() {
            if q.constraints.is_empty() {
                out.push(Violation::EmptyQff(qi));
            }
            if q.ec_count() > 9 {
                out.push(Violation::TooManyEquations(qi));
            }
            for (ci, c) in q.constraints.iter().enumerate() {
                let p = c.poly();
                if p.is_zero() {
                    out.push(Violation::ZeroPolynomial { qff: qi, constraint: ci });
                    continue;
                }
                if (n..p.nvars()).any(|i| p.contains(Var(i))) {
                    out.push(Violation::UndeclaredVariable { qff: qi, constraint: ci });
                } else if p.nvars() != n {
                    out.push(Violation::ArityMismatch { qff: qi, constraint: ci });
                }
                if p.leading_sign() < 0 {
                    out.push(Violation::NotNormalized { qff: qi, constraint: ci });
                }
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// The same problem with every polynomial rewritten through `map`
    /// (old index -> new index) and the declaration list permuted to match.
    pub fn permute_variables(&self, map: &[Var]) -> Problem {
        let n = self.nvars();
        let mut names = vec![String::new(); n];
        for (old, v) in self.variables.iter().enumerate() {
            names[map[old].0] = v.name.clone();
        }
        let qffs = self
            .qffs
            .iter()
            .map(|q| {
                Qff::new(
                    q.constraints
                        .iter()
                        .map(|c| Constraint::new(c.poly().remap(map, n), c.relop()).expect("nonzero"))
                        .collect(),
                )
            })
            .collect();
        Problem::new(names, qffs)
    }
}

/// A permutation of a problem's variables, greatest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableOrdering(Vec<Var>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderingError {
    #[error("unknown variable {0} in ordering")]
    UnknownVariable(String),
    #[error("ordering is not a permutation of the declared variables")]
    NotAPermutation,
}

impl VariableOrdering {
    pub fn new(order: Vec<Var>, nvars: usize) -> Result<Self, OrderingError> {
        let mut seen = vec![false; nvars];
        if order.len() != nvars {
            return Err(OrderingError::NotAPermutation);
        }
        for v in &order {
            if v.0 >= nvars || std::mem::replace(&mut seen[v.0], true) {
                return Err(OrderingError::NotAPermutation);
            }
        }
        Ok(VariableOrdering(order))
    }

    /// Declaration order: first declared variable greatest.
    pub fn declaration(nvars: usize) -> Self {
        VariableOrdering((0..nvars).map(Var).collect())
    }

    /// Parses `"z>y>x"` against the problem's variable names.
    pub fn parse(text: &str, problem: &Problem) -> Result<Self, OrderingError> {
        let order = text
            .split('>')
            .map(|s| {
                let s = s.trim();
                problem.var_by_name(s).ok_or_else(|| OrderingError::UnknownVariable(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        VariableOrdering::new(order, problem.nvars())
    }

    pub fn vars(&self) -> &[Var] {
        &self.0
    }

    pub fn greatest(&self) -> Var {
        self.0[0]
    }

    /// `"z>y>x"` using the problem's variable names.
    pub fn format(&self, problem: &Problem) -> String {
        self.0.iter().map(|&v| problem.name(v)).collect::<Vec<_>>().join(">")
    }

    pub fn remap(&self, map: &[Var]) -> VariableOrdering {
        VariableOrdering(self.0.iter().map(|v| map[v.0]).collect())
    }
}

impl FromStr for Relop {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        Ok(match s {
            "=" => Relop::Eq,
            "!=" => Relop::Ne,
            "<" => Relop::Lt,
            "<=" => Relop::Le,
            ">" => Relop::Gt,
            ">=" => Relop::Ge,
            _ => return Err(()),
        })
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::poly::testutil::*;

    pub fn c(p: Polynomial, r: Relop) -> Constraint {
        Constraint::new(p, r).unwrap()
    }

    #[test]
    fn system_type_digits_follow_qff_order() {
        let (x, y, _) = x3();
        let two_ec = Qff::new(vec![c(x.clone(), Relop::Eq), c(y.clone(), Relop::Eq)]);
        let p = Problem::new(["x", "y", "z"], vec![two_ec.clone(), two_ec]);
        assert_eq!(p.system_type(), "22");

        let one = Qff::new(vec![c(x.clone(), Relop::Eq), c(y.clone(), Relop::Lt)]);
        let none = Qff::new(vec![c(x.clone(), Relop::Lt), c(y.clone(), Relop::Lt)]);
        let p = Problem::new(["x", "y", "z"], vec![one.clone(), none.clone()]);
        assert_eq!(p.system_type(), "10");
        let p = Problem::new(["x", "y", "z"], vec![none.clone(), one]);
        assert_eq!(p.system_type(), "01");
        assert_eq!(p.system_type_sorted(), "10");
        let p = Problem::new(["x", "y", "z"], vec![none]);
        assert_eq!(p.system_type(), "0");
    }

    #[test]
    fn defining_polynomials_dedup_and_sign() {
        let (x, _, _) = x3();
        let one = c3(1);
        let q = Qff::new(vec![c(x.clone(), Relop::Eq), c(&x - &one, Relop::Lt)]);
        let p = Problem::new(["x", "y", "z"], vec![q.clone(), q]);
        let set = p.defining_polynomials();
        assert_eq!(set.len(), 2);
        assert!(set.contains(&x) && set.contains(&(&x - &one)));

        let q = Qff::new(vec![c(&one - &x, Relop::Lt), c(&x - &one, Relop::Gt)]);
        let p = Problem::new(["x", "y", "z"], vec![q]);
        assert_eq!(p.defining_polynomials().into_iter().collect::<Vec<_>>(), vec![&x - &one]);
    }

    #[test]
    fn constraint_negation_flips_relation() {
        let (x, _, _) = x3();
        let k = c(&c3(1) - &x, Relop::Lt);
        assert_eq!(k.poly(), &(&x - &c3(1)));
        assert_eq!(k.relop(), Relop::Gt);
        assert!(Constraint::new(Polynomial::zero(3), Relop::Eq).is_none());
    }

    #[test]
    fn validate_collects_all_violations() {
        let (x, _, _) = x3();
        let ok = Problem::new(["x", "y", "z"], vec![Qff::new(vec![c(x.clone(), Relop::Eq)])]);
        assert!(ok.validate().is_ok());

        let bad = Problem::new(["x", "x"], vec![Qff::new(vec![c(x.clone(), Relop::Eq)]), Qff::new(vec![])]);
        let errs = bad.validate().unwrap_err();
        assert!(errs.contains(&Violation::DuplicateVariable("x".into())));
        assert!(errs.contains(&Violation::EmptyQff(1)));
        assert!(errs.iter().any(|e| matches!(e, Violation::ArityMismatch { .. })));
    }

    #[test]
    fn undeclared_variable_detected() {
        let (_, _, z) = x3();
        let p = Problem::new(["x", "y"], vec![Qff::new(vec![c(z, Relop::Eq)])]);
        let errs = p.validate().unwrap_err();
        assert!(errs.iter().any(|e| e.to_string().contains("undeclared variable")));
    }

    #[test]
    fn ordering_parse_and_format() {
        let (x, _, _) = x3();
        let p = Problem::new(["x", "y", "z"], vec![Qff::new(vec![c(x, Relop::Eq)])]);
        let o = VariableOrdering::parse("z>y>x", &p).unwrap();
        assert_eq!(o.vars(), &[Var(2), Var(1), Var(0)]);
        assert_eq!(o.format(&p), "z>y>x");
        assert!(VariableOrdering::parse("z>y", &p).is_err());
        assert!(VariableOrdering::parse("z>z>x", &p).is_err());
        assert!(VariableOrdering::parse("z>w>x", &p).is_err());
    }
}
