//! Projection operators: McCallum's sign-invariant operator, the reduced
//! operator for truth-table invariance with equational constraints, full
//! cascades down to one variable, and the special polynomial sets used by
//! the NewH heuristics.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::formula::{OrderingError, Problem, VariableOrdering};
use crate::poly::{content_primitive, discriminant, gcd, resultant, squarefree_part, Polynomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectionError {
    #[error("zero polynomial in projection input")]
    ZeroPolynomial,
    #[error(transparent)]
    Ordering(#[from] OrderingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProjectionKind {
    /// Sign-invariant McCallum projection at every step.
    Full,
    /// Equational-constraint reduced projection at the first step.
    Tti,
}

/// The normalized output of one projection step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionSet {
    pub polys: BTreeSet<Polynomial>,
    pub eliminated: Var,
    /// Number of variables remaining after the step.
    pub level: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionCascade {
    pub stages: Vec<ProjectionSet>,
}

impl ProjectionCascade {
    /// The last (univariate) stage, absent for single-variable inputs.
    pub fn final_stage(&self) -> Option<&ProjectionSet> {
        self.stages.last()
    }
}

/// Drops zeros and constants, replaces each polynomial by its primitive
/// squarefree part, and deduplicates.
pub fn normalize<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> BTreeSet<Polynomial> {
    polys
        .into_iter()
        .filter(|p| !p.is_constant())
        .map(|p| squarefree_part(p).expect("nonzero"))
        .filter(|p| !p.is_constant())
        .collect()
}

/// Drops zeros and constants, sign-normalizes and deduplicates, without
/// taking primitive or squarefree parts.
pub fn normalize_raw<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> BTreeSet<Polynomial> {
    polys.into_iter().filter(|p| !p.is_constant()).map(|p| p.sign_normalized()).collect()
}

/// Content of `f` in `v`, and the squarefree primitive part when `f` involves `v`.
fn split(f: &Polynomial, v: Var) -> (Polynomial, Option<Polynomial>) {
    if !f.contains(v) {
        return (f.clone(), None);
    }
    let (c, p) = content_primitive(f, v).expect("nonzero");
    (c, Some(squarefree_part(&p).expect("nonzero")))
}

fn res(f: &Polynomial, g: &Polynomial, v: Var) -> Polynomial {
    resultant(f, g, v).expect("nonzero arguments")
}

/// Pushes res(f, g), or when f and g share a factor, the resultant of the
/// cofactors, which is what a pairwise coprime basis would contribute.
fn res_into(f: &Polynomial, g: &Polynomial, v: Var, out: &mut Vec<Polynomial>) {
    let r = res(f, g, v);
    if !r.is_zero() {
        out.push(r);
        return;
    }
    let d = gcd(f, g).expect("nonzero arguments");
    let f1 = f.exact_div(&d).expect("gcd divides");
    let g1 = g.exact_div(&d).expect("gcd divides");
    if f1.contains(v) && g1.contains(v) {
        res_into(&f1, &g1, v, out);
    }
}

/// Projection of a basis whose members all involve `v`: coefficients,
/// discriminants and pairwise resultants.
fn basis_projection(basis: &BTreeSet<Polynomial>, v: Var, out: &mut Vec<Polynomial>) {
    let items: Vec<&Polynomial> = basis.iter().collect();
    for f in &items {
        out.extend(f.coefficients(v));
        if f.degree(v) >= 2 {
            out.push(discriminant(f, v));
        }
    }
    for (i, f) in items.iter().enumerate() {
        for g in &items[i + 1..] {
            res_into(f, g, v, out);
        }
    }
}

fn mccallum_raw<'a>(
    a: impl IntoIterator<Item = &'a Polynomial>,
    v: Var,
    out: &mut Vec<Polynomial>,
) -> Result<BTreeSet<Polynomial>, ProjectionError> {
    let mut basis = BTreeSet::new();
    for f in a {
        if f.is_zero() {
            return Err(ProjectionError::ZeroPolynomial);
        }
        let (c, pp) = split(f, v);
        out.push(c);
        basis.extend(pp);
    }
    basis_projection(&basis, v, out);
    Ok(basis)
}

/// McCallum's projection of `a` eliminating `v`.
pub fn mccallum_project<'a>(
    a: impl IntoIterator<Item = &'a Polynomial>,
    v: Var,
) -> Result<ProjectionSet, ProjectionError> {
    let mut out = Vec::new();
    let mut nvars = None;
    let a: Vec<&Polynomial> = a.into_iter().inspect(|p| nvars = Some(p.nvars())).collect();
    mccallum_raw(a, v, &mut out)?;
    let level = nvars.map(|n| n.saturating_sub(1)).unwrap_or(0);
    Ok(ProjectionSet { polys: normalize(&out), eliminated: v, level })
}

/// Reduced projection for a sequence of QFFs, using at most the first
/// equational constraint of each QFF.
///
/// A QFF with an equation contributes the coefficients and discriminant of
/// that equation and its resultants with the QFF's other polynomials; a QFF
/// without one contributes its full McCallum projection. Across QFFs,
/// resultants are taken between the designated polynomials of different QFFs
/// (the equation, or every polynomial of an equation-free QFF).
pub fn ttiprojection(p: &Problem, v: Var) -> ProjectionSet {
    let mut out = Vec::new();
    let mut designated: Vec<BTreeSet<Polynomial>> = Vec::new();
    for q in &p.qffs {
        match q.equations().next() {
            Some(ec) => {
                let (ec_content, ec_pp) = split(ec.poly(), v);
                out.push(ec_content);
                let mut others = BTreeSet::new();
                for g in q.polys() {
                    let (c, pp) = split(g, v);
                    out.push(c);
                    others.extend(pp);
                }
                let mut des = BTreeSet::new();
                if let Some(e) = ec_pp {
                    out.extend(e.coefficients(v));
                    if e.degree(v) >= 2 {
                        out.push(discriminant(&e, v));
                    }
                    for g in others.iter().filter(|g| **g != e) {
                        res_into(&e, g, v, &mut out);
                    }
                    des.insert(e);
                }
                designated.push(des);
            }
            None => {
                let basis = mccallum_raw(q.polys(), v, &mut out).expect("constraint polynomials are nonzero");
                designated.push(basis);
            }
        }
    }
    for (i, di) in designated.iter().enumerate() {
        for dj in &designated[i + 1..] {
            for f in di {
                for g in dj.iter().filter(|g| *g != f) {
                    res_into(f, g, v, &mut out);
                }
            }
        }
    }
    ProjectionSet { polys: normalize(&out), eliminated: v, level: p.nvars().saturating_sub(1) }
}

/// What a cascade starts from.
#[derive(Debug, Clone, Copy)]
pub enum CascadeInput<'a> {
    Polys(&'a BTreeSet<Polynomial>),
    Problem(&'a Problem),
}

/// Eliminates variables greatest-first until one remains. With
/// [`ProjectionKind::Tti`] and a problem input the first step is
/// [`ttiprojection`]; every other step is [`mccallum_project`].
pub fn project_cascade(
    input: CascadeInput<'_>,
    ordering: &VariableOrdering,
    kind: ProjectionKind,
) -> Result<ProjectionCascade, ProjectionError> {
    let vars = ordering.vars();
    let n = vars.len();
    let mut stages: Vec<ProjectionSet> = Vec::with_capacity(n.saturating_sub(1));
    for (k, &v) in vars.iter().enumerate().take(n.saturating_sub(1)) {
        let mut stage = match (stages.last(), input, kind) {
            (Some(prev), _, _) => mccallum_project(&prev.polys, v)?,
            (None, CascadeInput::Problem(p), ProjectionKind::Tti) => ttiprojection(p, v),
            (None, CascadeInput::Problem(p), ProjectionKind::Full) => {
                mccallum_project(&p.defining_polynomials(), v)?
            }
            (None, CascadeInput::Polys(s), _) => mccallum_project(s, v)?,
        };
        stage.level = n - k - 1;
        stages.push(stage);
    }
    Ok(ProjectionCascade { stages })
}

fn closure_into(polys: &[&Polynomial], v: Var, out: &mut Vec<Polynomial>) {
    for f in polys {
        out.push(discriminant(f, v));
        out.push(f.lcoeff(v));
    }
    for (i, f) in polys.iter().enumerate() {
        for g in &polys[i + 1..] {
            if f != g {
                out.push(res(f, g, v));
            }
        }
    }
}

/// Discriminants, leading coefficients and cross-resultants of the first
/// constraint of each QFF; the same for every polynomial of an
/// equation-free QFF; and the resultant of the first two equations of a QFF
/// that has at least two. Measured raw: constants dropped, signs
/// normalized, no primitive or squarefree parts.
pub fn newh_set(p: &Problem, v: Var) -> BTreeSet<Polynomial> {
    let mut out = Vec::new();
    let firsts: Vec<&Polynomial> = p.qffs.iter().filter_map(|q| q.polys().next()).collect();
    closure_into(&firsts, v, &mut out);
    for q in &p.qffs {
        let mut eqs = q.equations();
        match (eqs.next(), eqs.next()) {
            (None, _) => {
                let all: Vec<&Polynomial> = q.polys().collect();
                closure_into(&all, v, &mut out);
            }
            (Some(e1), Some(e2)) if e1.poly() != e2.poly() => out.push(res(e1.poly(), e2.poly(), v)),
            _ => {}
        }
    }
    normalize_raw(&out)
}

/// Discriminants, leading coefficients and pairwise resultants over every
/// constraint polynomial that [`newh_set`] leaves out.
pub fn newh_omitted_set(p: &Problem, v: Var) -> BTreeSet<Polynomial> {
    let all = p.defining_polynomials();
    let all: Vec<&Polynomial> = all.iter().collect();
    let mut out = Vec::new();
    closure_into(&all, v, &mut out);
    let full = normalize_raw(&out);
    let special = newh_set(p, v);
    full.difference(&special).cloned().collect()
}

/// Full raw closure used to check that the two NewH sets partition it.
pub fn full_closure(p: &Problem, v: Var) -> BTreeSet<Polynomial> {
    let all = p.defining_polynomials();
    let all: Vec<&Polynomial> = all.iter().collect();
    let mut out = Vec::new();
    closure_into(&all, v, &mut out);
    normalize_raw(&out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_str;
    use crate::poly::testutil::*;
    use num_bigint::BigInt;

    const X: Var = Var(0);
    const Y: Var = Var(1);
    const Z: Var = Var(2);

    fn set(ps: &[Polynomial]) -> BTreeSet<Polynomial> {
        ps.iter().cloned().collect()
    }

    #[test]
    fn mccallum_circle() {
        let (x, y, _) = x3();
        let f = &(&(&x * &x) + &(&y * &y)) - &c3(1);
        let s = mccallum_project([&f], X).unwrap();
        assert_eq!(s.polys, set(&[&(&y * &y) - &c3(1)]));
        assert_eq!(s.eliminated, X);
    }

    #[test]
    fn mccallum_hyperbola() {
        let (x, y, z) = x3();
        let f = &(&x * &y) - &z;
        assert_eq!(mccallum_project([&f], X).unwrap().polys, set(&[y, z]));
    }

    #[test]
    fn mccallum_passes_v_free_through() {
        let (_, y, _) = x3();
        let f = &(&y * &y) - &c3(2);
        assert_eq!(mccallum_project([&f], X).unwrap().polys, set(std::slice::from_ref(&f)));
        assert_eq!(mccallum_project([&Polynomial::zero(3)], X), Err(ProjectionError::ZeroPolynomial));
    }

    #[test]
    fn tti_single_qff_example() {
        let p = parse_str("vars: x, y\nqff: x^2+y^2-1 = 0, x-y < 0").unwrap();
        let s = ttiprojection(&p, Var(0));
        let q = parse_str("vars: x, y\nqff: y^2-1 = 0, 2*y^2-1 = 0").unwrap();
        assert_eq!(s.polys, q.defining_polynomials());
    }

    #[test]
    fn tti_cross_qff_resultant() {
        let p = parse_str("vars: x, y, z\nqff: x - y = 0\nqff: x - z = 0").unwrap();
        let s = ttiprojection(&p, X);
        let (_, y, z) = x3();
        assert!(s.polys.contains(&(&y - &z)));
    }

    #[test]
    fn tti_equals_mccallum_without_equations() {
        let p = parse_str("vars: x, y, z\nqff: x^2 - y*z < 0, x*y + z > 0\nqff: x^3 - z < 1").unwrap();
        let a = ttiprojection(&p, X).polys;
        let b = mccallum_project(&p.defining_polynomials(), X).unwrap().polys;
        assert_eq!(a, b);
        let p1 = parse_str("vars: x, y, z\nqff: x^2 - y*z < 0, x*y + z > 0").unwrap();
        assert_eq!(
            ttiprojection(&p1, X).polys,
            mccallum_project(&p1.defining_polynomials(), X).unwrap().polys
        );
    }

    #[test]
    fn cascade_chain_matches_hand_steps() {
        let (x, y, z) = x3();
        let circle = &(&(&x * &x) + &(&y * &y)) - &c3(1);
        let hyper = &(&x * &y) - &z;
        let input = set(&[circle.clone(), hyper.clone()]);
        let order = VariableOrdering::new(vec![Z, Y, X], 3).unwrap();
        let c = project_cascade(CascadeInput::Polys(&input), &order, ProjectionKind::Full).unwrap();
        assert_eq!(c.stages.len(), 2);
        // Eliminate z: circle passes through; x*y - z has coefficients -1 and x*y.
        assert_eq!(c.stages[0].polys, set(&[circle.clone(), &x * &y]));
        assert_eq!(c.stages[0].level, 2);
        // Eliminate y: circle gives x^2 - 1 (coefficient) and -4(x^2 - 1)
        // (discriminant); x*y splits into content x and primitive part y;
        // res_y(circle, y) = x^2 - 1.
        let s1 = &(&x * &x) - &c3(1);
        assert_eq!(c.stages[1].polys, set(&[s1, x.clone()]));
        assert_eq!(c.stages[1].level, 1);
        for p in &c.stages[1].polys {
            assert!(!p.contains(Y) && !p.contains(Z));
        }
    }

    #[test]
    fn two_variable_cascade_has_one_stage() {
        let p = parse_str("vars: x, y\nqff: x^2 + y^2 < 1").unwrap();
        let o = VariableOrdering::declaration(2);
        let c = project_cascade(CascadeInput::Problem(&p), &o, ProjectionKind::Full).unwrap();
        assert_eq!(c.stages.len(), 1);
        let t = project_cascade(CascadeInput::Problem(&p), &o, ProjectionKind::Tti).unwrap();
        assert_eq!(c, t);
    }

    #[test]
    fn newh_two_qff_example() {
        let p = parse_str("vars: x, y, z\nqff: x^2+y^2-1 = 0, x-y < 0\nqff: x*y-z = 0, x+z > 0").unwrap();
        let (_, y, z) = x3();
        let disc = &(&y * &y).scale(&BigInt::from(4)) - &c3(4);
        let cross = &(&y.pow(4) - &(&y * &y)) + &(&z * &z);
        assert_eq!(newh_set(&p, X), set(&[disc, y.clone(), cross]));
    }

    #[test]
    fn newh_linear_single_equation_is_empty() {
        let p = parse_str("vars: x, y\nqff: x - 3 = 0").unwrap();
        assert!(newh_set(&p, X).is_empty());
    }

    #[test]
    fn newh_equation_free_qff() {
        let p = parse_str("vars: x, y\nqff: x^2 - y < 0, x + y > 0").unwrap();
        let (_, y, _) = parse_xy();
        let expected = set(&[y.scale(&BigInt::from(4)), &(&y * &y) - &y]);
        assert_eq!(newh_set(&p, X), expected);
    }

    fn parse_xy() -> (Polynomial, Polynomial, ()) {
        (Polynomial::var(2, Var(0)), Polynomial::var(2, Var(1)), ())
    }

    #[test]
    fn omitted_set_examples() {
        let p = parse_str("vars: x, y\nqff: x^2 - y < 0, x + y > 0").unwrap();
        assert!(newh_omitted_set(&p, X).is_empty());

        // Two equations and nothing else: the second equation's discriminant
        // and leading coefficient are constants, so nothing is omitted.
        let p = parse_str("vars: x, y\nqff: x^2 - y = 0, x + y = 0").unwrap();
        assert!(newh_omitted_set(&p, X).is_empty());

        // f = x^2 - y (EC), g = y*x^2 + x - 1: disc and lcoeff of g are omitted,
        // and so is res(f, g) since only first constraints are cross-resulted.
        let p = parse_str("vars: x, y\nqff: x^2 - y = 0, y*x^2 + x - 1 < 0").unwrap();
        let (x, y, _) = parse_xy();
        let omitted = newh_omitted_set(&p, X);
        let disc_g = &y.scale(&BigInt::from(4)) + &Polynomial::one(2);
        let f = &(&x * &x) - &y;
        let g = &(&(&y * &(&x * &x)) + &x) - &Polynomial::one(2);
        let res_fg = resultant(&f, &g, X).unwrap().sign_normalized();
        assert_eq!(omitted, set(&[disc_g, y.clone(), res_fg]));
    }

    #[test]
    fn newh_sets_partition_closure() {
        let p = parse_str("vars: x, y, z\nqff: x^2+y^2-1 = 0, x-y < 0\nqff: x*y-z < 0, x+z > 0").unwrap();
        for v in [X, Y, Z] {
            let a = newh_set(&p, v);
            let b = newh_omitted_set(&p, v);
            assert!(a.is_disjoint(&b));
            let union: BTreeSet<_> = a.union(&b).cloned().collect();
            assert_eq!(union, full_closure(&p, v));
        }
    }

    #[test]
    fn normalization_idempotent() {
        let (x, y, z) = x3();
        let polys = vec![
            (&x * &x).scale(&BigInt::from(-6)),
            &(&y - &z).pow(2) * &x,
            c3(5),
            Polynomial::zero(3),
            &y - &z,
        ];
        let once = normalize(&polys);
        assert_eq!(normalize(&once), once);
        assert_eq!(once, set(&[x.clone(), &x * &(&y - &z), &y - &z]));
    }
}
