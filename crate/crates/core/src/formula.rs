//! Range-ETR-Inv front-end: parsing, rewriting into the inequality-only
//! form over 3n variables, and exact evaluation of assignments.

use crate::num::{fmt_q, parse_q, q, qi, Q};
use num_traits::{One, Signed};
use std::collections::BTreeSet;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

/// Equality constraints of the source formula; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EtrConstraint {
    /// x_i + x_j = x_l
    AddEq(usize, usize, usize),
    /// x_i * x_j = 1
    InvEq(usize, usize),
}

#[derive(Clone, Debug)]
pub struct EtrInvFormula {
    pub n: usize,
    pub constraints: Vec<EtrConstraint>,
}

#[derive(Clone, Debug)]
pub struct RangeEtrInvInstance {
    pub formula: EtrInvFormula,
    pub delta: Q,
    /// closed interval per variable, 1-based order
    pub intervals: Vec<(Q, Q)>,
}

/// Inequality constraints over the tripled variable set; indices 1..3n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum IneqConstraint {
    /// x_i + x_j >= x_l, i < j < l
    AddGe(usize, usize, usize),
    /// x_i + x_j <= x_l, i < j < l
    AddLe(usize, usize, usize),
    /// x_i * x_j >= 1, i < j
    MulGe(usize, usize),
    /// x_i * x_j <= 1, i < j
    MulLe(usize, usize),
    /// x_i >= x_j, either order
    Ge(usize, usize),
}

impl IneqConstraint {
    pub fn vars(&self) -> Vec<usize> {
        match *self {
            IneqConstraint::AddGe(i, j, l) | IneqConstraint::AddLe(i, j, l) => vec![i, j, l],
            IneqConstraint::MulGe(i, j)
            | IneqConstraint::MulLe(i, j)
            | IneqConstraint::Ge(i, j) => vec![i, j],
        }
    }
}

impl fmt::Display for IneqConstraint {
    fmt_impl!();
}

macro_rules! fmt_impl {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match *self {
                IneqConstraint::AddGe(i, j, l) => write!(f, "x{i} + x{j} >= x{l}"),
                IneqConstraint::AddLe(i, j, l) => write!(f, "x{i} + x{j} <= x{l}"),
                IneqConstraint::MulGe(i, j) => write!(f, "x{i} * x{j} >= 1"),
                IneqConstraint::MulLe(i, j) => write!(f, "x{i} * x{j} <= 1"),
                IneqConstraint::Ge(i, j) => write!(f, "x{i} >= x{j}"),
            }
        }
    };
}
use fmt_impl;

#[derive(Clone, Debug)]
pub struct IneqFormula {
    /// number of original variables (the inequality form has 3n)
    pub n_original: usize,
    pub constraints: Vec<IneqConstraint>,
    /// intervals for all 3n variables; copies inherit the original interval
    pub intervals: Vec<(Q, Q)>,
    pub delta: Q,
}

impl IneqFormula {
    pub fn n_vars(&self) -> usize {
        3 * self.n_original
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: variable index {idx} out of range 1..={n}")]
    IndexOutOfRange { line: usize, idx: usize, n: usize },
    #[error("interval for x{idx} is not inside [1/2, 2]")]
    IntervalOutOfRange { idx: usize },
    #[error("interval for x{idx} is empty")]
    EmptyInterval { idx: usize },
    #[error("interval for x{idx} has width {width}, larger than delta {delta}")]
    IntervalTooWide { idx: usize, width: String, delta: String },
    #[error("missing range for x{idx}")]
    MissingRange { idx: usize },
    #[error("delta must be positive")]
    BadDelta,
    #[error("vars declaration missing or zero")]
    MissingVars,
    #[error("assignment is missing a value for x{0}")]
    MissingAssignment(usize),
}

/// Parse the line-oriented formula grammar:
/// `vars <n>`, `range x<i> [<lo>,<hi>]`, `add x<i> x<j> x<l>`,
/// `inv x<i> x<j>`, `delta <rational>`; `#` starts a comment.
pub fn parse_formula(text: &str) -> Result<RangeEtrInvInstance, FormulaError> {
    let mut n: Option<usize> = None;
    let mut delta: Option<Q> = None;
    let mut ranges: HashMap<usize, (Q, Q)> = HashMap::new();
    let mut constraints: Vec<EtrConstraint> = Vec::new();

    let syntax = |line: usize, msg: &str| FormulaError::Syntax { line, msg: msg.to_string() };

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tok = content.split_whitespace();
        let head = tok.next().unwrap();
        let rest: Vec<&str> = tok.collect();
        let var_idx = |s: &str, line: usize| -> Result<usize, FormulaError> {
            let body = s
                .strip_prefix('x')
                .ok_or_else(|| syntax(line, &format!("expected variable like x1, got `{s}`")))?;
            body.parse::<usize>()
                .map_err(|_| syntax(line, &format!("bad variable index `{s}`")))
        };
        match head {
            "vars" => {
                if rest.len() != 1 {
                    return Err(syntax(line, "usage: vars <n>"));
                }
                let v: usize = rest[0]
                    .parse()
                    .map_err(|_| syntax(line, "vars expects a positive integer"))?;
                if v == 0 {
                    return Err(FormulaError::MissingVars);
                }
                n = Some(v);
            }
            "delta" => {
                if rest.len() != 1 {
                    return Err(syntax(line, "usage: delta <rational>"));
                }
                let d = parse_q(rest[0]).map_err(|e| syntax(line, &e))?;
                delta = Some(d);
            }
            "range" => {
                if rest.len() < 2 {
                    return Err(syntax(line, "usage: range x<i> [<lo>,<hi>]"));
                }
                let idx = var_idx(rest[0], line)?;
                let spec = rest[1..].join("");
                let inner = spec
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| syntax(line, "range interval must look like [lo,hi]"))?;
                let (lo_s, hi_s) = inner
                    .split_once(',')
                    .ok_or_else(|| syntax(line, "range interval must look like [lo,hi]"))?;
                let lo = parse_q(lo_s).map_err(|e| syntax(line, &e))?;
                let hi = parse_q(hi_s).map_err(|e| syntax(line, &e))?;
                ranges.insert(idx, (lo, hi));
            }
            "add" => {
                if rest.len() != 3 {
                    return Err(syntax(line, "usage: add x<i> x<j> x<l>"));
                }
                let i = var_idx(rest[0], line)?;
                let j = var_idx(rest[1], line)?;
                let l = var_idx(rest[2], line)?;
                constraints.push(EtrConstraint::AddEq(i, j, l));
            }
            "inv" => {
                if rest.len() != 2 {
                    return Err(syntax(line, "usage: inv x<i> x<j>"));
                }
                let i = var_idx(rest[0], line)?;
                let j = var_idx(rest[1], line)?;
                constraints.push(EtrConstraint::InvEq(i, j));
            }
            other => {
                return Err(syntax(line, &format!("unknown directive `{other}`")));
            }
        }
    }

    let n = n.ok_or(FormulaError::MissingVars)?;
    // index validation
    for (lineno, c) in constraints.iter().enumerate() {
        let idxs: Vec<usize> = match *c {
            EtrConstraint::AddEq(i, j, l) => vec![i, j, l],
            EtrConstraint::InvEq(i, j) => vec![i, j],
        };
        for idx in idxs {
            if idx == 0 || idx > n {
                return Err(FormulaError::IndexOutOfRange { line: lineno + 1, idx, n });
            }
        }
    }
    for idx in ranges.keys() {
        if *idx == 0 || *idx > n {
            return Err(FormulaError::IndexOutOfRange { line: 0, idx: *idx, n });
        }
    }
    // delta default: n^-7
    let delta = match delta {
        Some(d) => {
            if !d.is_positive() {
                return Err(FormulaError::BadDelta);
            }
            d
        }
        None => {
            let nn = qi(n as i64);
            let mut p = Q::one();
            for _ in 0..7 {
                p = p * &nn;
            }
            p.recip()
        }
    };
    let mut intervals = Vec::with_capacity(n);
    let half = q(1, 2);
    let two = qi(2);
    for idx in 1..=n {
        let (lo, hi) = ranges
            .get(&idx)
            .cloned()
            .ok_or(FormulaError::MissingRange { idx })?;
        if lo > hi {
            return Err(FormulaError::EmptyInterval { idx });
        }
        if lo < half || hi > two {
            return Err(FormulaError::IntervalOutOfRange { idx });
        }
        let width = &hi - &lo;
        if width > delta {
            return Err(FormulaError::IntervalTooWide {
                idx,
                width: fmt_q(&width),
                delta: fmt_q(&delta),
            });
        }
        intervals.push((lo, hi));
    }
    // dedup constraints, preserving order
    let mut seen = BTreeSet::new();
    constraints.retain(|c| seen.insert(*c));

    Ok(RangeEtrInvInstance {
        formula: EtrInvFormula { n, constraints },
        delta,
        intervals,
    })
}

/// Rewrite into the inequality-only form over 3n variables: three
/// consistency constraints per variable and a pair of inequalities per
/// source equality, with duplicates removed by canonical ordering.
pub fn rewrite_to_inequalities(inst: &RangeEtrInvInstance) -> IneqFormula {
    let n = inst.formula.n;
    let mut set: BTreeSet<IneqConstraint> = BTreeSet::new();
    for i in 1..=n {
        set.insert(IneqConstraint::Ge(i, n + i));
        set.insert(IneqConstraint::Ge(n + i, 2 * n + i));
        set.insert(IneqConstraint::Ge(2 * n + i, i));
    }
    for c in &inst.formula.constraints {
        match *c {
            EtrConstraint::AddEq(i, j, l) => {
                set.insert(IneqConstraint::AddGe(i, n + j, 2 * n + l));
                set.insert(IneqConstraint::AddLe(i, n + j, 2 * n + l));
            }
            EtrConstraint::InvEq(i, j) => {
                set.insert(IneqConstraint::MulGe(i, n + j));
                set.insert(IneqConstraint::MulLe(i, n + j));
            }
        }
    }
    let mut intervals = Vec::with_capacity(3 * n);
    for copy in 0..3 {
        let _ = copy;
        intervals.extend(inst.intervals.iter().cloned());
    }
    IneqFormula {
        n_original: n,
        constraints: set.into_iter().collect(),
        intervals,
        delta: inst.delta.clone(),
    }
}

/// Extend an assignment of the n original variables to the 3n variables of
/// the inequality form.
pub fn extend_assignment(n: usize, a: &[Q]) -> Vec<Q> {
    assert_eq!(a.len(), n);
    let mut out = Vec::with_capacity(3 * n);
    for _ in 0..3 {
        out.extend(a.iter().cloned());
    }
    out
}

/// Exact evaluation of the source equalities. `a` is 1-based via position.
pub fn evaluate_etr(
    f: &EtrInvFormula,
    a: &[Q],
) -> Result<(bool, Vec<EtrConstraint>), FormulaError> {
    if a.len() < f.n {
        return Err(FormulaError::MissingAssignment(a.len() + 1));
    }
    let v = |i: usize| &a[i - 1];
    let mut violated = Vec::new();
    for c in &f.constraints {
        let ok = match *c {
            EtrConstraint::AddEq(i, j, l) => v(i) + v(j) == *v(l),
            EtrConstraint::InvEq(i, j) => v(i) * v(j) == Q::one(),
        };
        if !ok {
            violated.push(*c);
        }
    }
    Ok((violated.is_empty(), violated))
}

/// Exact evaluation of the inequality form.
pub fn evaluate_ineq(
    f: &IneqFormula,
    a: &[Q],
) -> Result<(bool, Vec<IneqConstraint>), FormulaError> {
    if a.len() < f.n_vars() {
        return Err(FormulaError::MissingAssignment(a.len() + 1));
    }
    let v = |i: usize| &a[i - 1];
    let mut violated = Vec::new();
    for c in &f.constraints {
        let ok = match *c {
            IneqConstraint::AddGe(i, j, l) => v(i) + v(j) >= *v(l),
            IneqConstraint::AddLe(i, j, l) => v(i) + v(j) <= *v(l),
            IneqConstraint::MulGe(i, j) => v(i) * v(j) >= Q::one(),
            IneqConstraint::MulLe(i, j) => v(i) * v(j) <= Q::one(),
            IneqConstraint::Ge(i, j) => v(i) >= v(j),
        };
        if !ok {
            violated.push(*c);
        }
    }
    Ok((violated.is_empty(), violated))
}

/// Whether every value lies inside its variable's interval.
pub fn assignment_in_ranges(f: &IneqFormula, a: &[Q]) -> bool {
    a.iter()
        .zip(f.intervals.iter())
        .all(|(v, (lo, hi))| v >= lo && v <= hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{q, qi};

    fn lines(parts: &[&str]) -> String {
        parts.join("\n")
    }

    #[test]
    fn parse_inv_example() {
        let src = lines(&[
            "vars 2",
            "inv x1 x2",
            "range x1 [63/64,65/64]",
            "range x2 [63/64,65/64]",
            "delta 1/32",
        ]);
        let inst = parse_formula(&src).unwrap();
        assert_eq!(inst.formula.n, 2);
        assert_eq!(inst.formula.constraints, vec![EtrConstraint::InvEq(1, 2)]);
        assert_eq!(inst.delta, q(1, 32));
        assert_eq!(inst.intervals[0], (q(63, 64), q(65, 64)));
    }

    #[test]
    fn parse_add_example() {
        let src = lines(&[
            "vars 3",
            "add x1 x2 x3",
            "range x1 [3/4,3/4]",
            "range x2 [3/4,3/4]",
            "range x3 [3/2,3/2]",
        ]);
        let inst = parse_formula(&src).unwrap();
        assert_eq!(inst.formula.constraints, vec![EtrConstraint::AddEq(1, 2, 3)]);
    }

    #[test]
    fn interval_outside_unit_band_rejected() {
        let src = lines(&["vars 1", "range x1 [3,4]"]);
        assert_eq!(
            parse_formula(&src).unwrap_err(),
            FormulaError::IntervalOutOfRange { idx: 1 }
        );
    }

    #[test]
    fn missing_range_rejected() {
        let src = lines(&["vars 2", "range x1 [1,1]"]);
        assert_eq!(parse_formula(&src).unwrap_err(), FormulaError::MissingRange { idx: 2 });
    }

    #[test]
    fn too_wide_interval_rejected() {
        let src = lines(&["vars 1", "range x1 [1/2,2]", "delta 1/32"]);
        assert!(matches!(
            parse_formula(&src),
            Err(FormulaError::IntervalTooWide { idx: 1, .. })
        ));
    }

    #[test]
    fn comments_and_blank_lines() {
        let src = lines(&[
            "# header",
            "vars 1",
            "",
            "range x1 [1,1] # tight",
        ]);
        assert!(parse_formula(&src).is_ok());
    }

    #[test]
    fn rewrite_addition() {
        let src = lines(&[
            "vars 3",
            "add x1 x2 x3",
            "range x1 [3/4,3/4]",
            "range x2 [3/4,3/4]",
            "range x3 [3/2,3/2]",
        ]);
        let inst = parse_formula(&src).unwrap();
        let f = rewrite_to_inequalities(&inst);
        assert!(f.constraints.contains(&IneqConstraint::AddGe(1, 5, 9)));
        assert!(f.constraints.contains(&IneqConstraint::AddLe(1, 5, 9)));
        // 9 consistency constraints + 2 addition inequalities
        assert_eq!(f.constraints.len(), 11);
        assert!(f.constraints.len() <= 3 * 3 + 2 * 1);
    }

    #[test]
    fn rewrite_inversion() {
        let src = lines(&[
            "vars 2",
            "inv x1 x2",
            "range x1 [1,1]",
            "range x2 [1,1]",
            "delta 1/32",
        ]);
        let inst = parse_formula(&src).unwrap();
        let f = rewrite_to_inequalities(&inst);
        assert!(f.constraints.contains(&IneqConstraint::MulGe(1, 4)));
        assert!(f.constraints.contains(&IneqConstraint::MulLe(1, 4)));
        assert_eq!(f.constraints.len(), 8);
    }

    #[test]
    fn rewrite_consistency_only() {
        let src = lines(&["vars 1", "range x1 [1,1]"]);
        let inst = parse_formula(&src).unwrap();
        let f = rewrite_to_inequalities(&inst);
        assert_eq!(
            f.constraints,
            vec![
                IneqConstraint::Ge(1, 2),
                IneqConstraint::Ge(2, 3),
                IneqConstraint::Ge(3, 1),
            ]
        );
    }

    #[test]
    fn evaluation_examples() {
        let f = EtrInvFormula { n: 2, constraints: vec![EtrConstraint::InvEq(1, 2)] };
        assert!(evaluate_etr(&f, &[qi(1), qi(1)]).unwrap().0);
        assert!(!evaluate_etr(&f, &[qi(1), qi(2)]).unwrap().0);
        let g = EtrInvFormula { n: 3, constraints: vec![EtrConstraint::AddEq(1, 2, 3)] };
        assert!(evaluate_etr(&g, &[q(3, 4), q(3, 4), q(3, 2)]).unwrap().0);
    }

    #[test]
    fn equivalence_on_grid() {
        // For assignments extended by copies, the source formula and the
        // inequality form agree; exhaustive on a small rational grid.
        let src = lines(&[
            "vars 2",
            "inv x1 x2",
            "range x1 [1,1]",
            "range x2 [1,1]",
            "delta 1",
        ]);
        let inst = parse_formula(&src).unwrap();
        let f = rewrite_to_inequalities(&inst);
        for a_num in 2..=8 {
            for b_num in 2..=8 {
                let a = vec![q(a_num, 4), q(b_num, 4)];
                let sat_src = evaluate_etr(&inst.formula, &a).unwrap().0;
                let ext = extend_assignment(2, &a);
                let sat_ineq = evaluate_ineq(&f, &ext).unwrap().0;
                assert_eq!(sat_src, sat_ineq, "disagreement at {a:?}");
            }
        }
    }

    #[test]
    fn duplicate_constraints_removed() {
        let src = lines(&[
            "vars 2",
            "inv x1 x2",
            "inv x1 x2",
            "range x1 [1,1]",
            "range x2 [1,1]",
            "delta 1/32",
        ]);
        let inst = parse_formula(&src).unwrap();
        assert_eq!(inst.formula.constraints.len(), 1);
    }
}
