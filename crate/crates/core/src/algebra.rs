//! Finite algebras as explicit operation tables, plus the generic machinery
//! that the rest of the crate runs on: term evaluation, exhaustive
//! equation/quasi-equation checking, isomorphism search, generated
//! subalgebras and direct products.
//!
//! Elements are dense ids `0..n`; labels are presentation-only. All
//! counterexample reporting picks the lexicographically least failing
//! assignment, so results are reproducible.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense element id into a [`FiniteAlgebra`] carrier.
pub type ElemId = usize;

/// A total operation table. Binary tables are row-major: entry for `(x, y)`
/// sits at `x * n + y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpTable {
    Const(ElemId),
    Unary(Vec<ElemId>),
    Binary(Vec<ElemId>),
}

impl OpTable {
    pub fn arity(&self) -> usize {
        match self {
            OpTable::Const(_) => 0,
            OpTable::Unary(_) => 1,
            OpTable::Binary(_) => 2,
        }
    }

    fn entries(&self) -> &[ElemId] {
        match self {
            OpTable::Const(c) => std::slice::from_ref(c),
            OpTable::Unary(t) | OpTable::Binary(t) => t,
        }
    }
}

/// A finite algebra: named carrier plus one table per signature symbol.
///
/// The signature is kept in a `BTreeMap`, so "signature order" always means
/// alphabetical order of operation names. Equality is structural: the name
/// is presentation-only.
#[derive(Debug, Clone)]
pub struct FiniteAlgebra {
    name: String,
    elements: Vec<String>,
    ops: BTreeMap<String, OpTable>,
}

impl PartialEq for FiniteAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.ops == other.ops
    }
}

impl Eq for FiniteAlgebra {}

impl FiniteAlgebra {
    /// Validates shapes, ranges and label uniqueness.
    pub fn new(
        name: impl Into<String>,
        elements: Vec<String>,
        ops: Vec<(String, OpTable)>,
    ) -> Result<Self> {
        let name = name.into();
        if elements.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let mut seen = BTreeSet::new();
        for label in &elements {
            if !seen.insert(label.clone()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let n = elements.len();
        let mut map = BTreeMap::new();
        for (op_name, table) in ops {
            let len_ok = match &table {
                OpTable::Const(_) => true,
                OpTable::Unary(t) => t.len() == n,
                OpTable::Binary(t) => t.len() == n * n,
            };
            if !len_ok {
                return Err(Error::ShapeMismatch { op: op_name });
            }
            if let Some(&value) = table.entries().iter().find(|&&v| v >= n) {
                return Err(Error::OutOfRange { op: op_name, value, size: n });
            }
            map.insert(op_name, table);
        }
        Ok(FiniteAlgebra { name, elements, ops: map })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.elements
    }

    pub fn label(&self, x: ElemId) -> &str {
        &self.elements[x]
    }

    pub fn element(&self, label: &str) -> Result<ElemId> {
        self.elements
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Operation names with arities, in alphabetical order.
    pub fn signature(&self) -> impl Iterator<Item = (&str, usize)> {
        self.ops.iter().map(|(n, t)| (n.as_str(), t.arity()))
    }

    pub fn op_names(&self) -> impl Iterator<Item = &str> {
        self.ops.keys().map(|s| s.as_str())
    }

    pub fn has_op(&self, name: &str) -> bool {
        self.ops.contains_key(name)
    }

    pub fn table(&self, name: &str) -> Result<&OpTable> {
        self.ops
            .get(name)
            .ok_or_else(|| Error::UnknownOperation(name.to_string()))
    }

    pub fn constant(&self, name: &str) -> Result<ElemId> {
        match self.table(name)? {
            OpTable::Const(c) => Ok(*c),
            t => Err(Error::ArityMismatch { op: name.into(), expected: t.arity(), given: 0 }),
        }
    }

    pub fn unary(&self, name: &str, x: ElemId) -> Result<ElemId> {
        match self.table(name)? {
            OpTable::Unary(t) => Ok(t[x]),
            t => Err(Error::ArityMismatch { op: name.into(), expected: t.arity(), given: 1 }),
        }
    }

    pub fn binary(&self, name: &str, x: ElemId, y: ElemId) -> Result<ElemId> {
        match self.table(name)? {
            OpTable::Binary(t) => Ok(t[x * self.size() + y]),
            t => Err(Error::ArityMismatch { op: name.into(), expected: t.arity(), given: 2 }),
        }
    }

    pub fn same_signature(&self, other: &FiniteAlgebra) -> bool {
        self.ops.len() == other.ops.len()
            && self
                .signature()
                .zip(other.signature())
                .all(|((n1, a1), (n2, a2))| n1 == n2 && a1 == a2)
    }

    /// Expansion with extra constants given by element label.
    pub fn with_constants(&self, consts: &[(&str, &str)]) -> Result<Self> {
        let mut out = self.clone();
        for (op, label) in consts {
            let id = self.element(label)?;
            out.ops.insert(op.to_string(), OpTable::Const(id));
        }
        Ok(out)
    }

    /// Reduct to the listed operations.
    pub fn reduct(&self, ops: &[&str]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &op in ops {
            map.insert(op.to_string(), self.table(op)?.clone());
        }
        Ok(FiniteAlgebra { name: self.name.clone(), elements: self.elements.clone(), ops: map })
    }

    /// Componentwise product on the pair carrier, pairs in lexicographic
    /// order. Requires identical signatures.
    pub fn direct_product(&self, other: &FiniteAlgebra) -> Result<FiniteAlgebra> {
        if !self.same_signature(other) {
            return Err(Error::SignatureMismatch(self.name.clone(), other.name.clone()));
        }
        let (na, nb) = (self.size(), other.size());
        let pair = |i: ElemId, j: ElemId| i * nb + j;
        let elements: Vec<String> = (0..na)
            .flat_map(|i| (0..nb).map(move |j| (i, j)))
            .map(|(i, j)| format!("({},{})", self.label(i), other.label(j)))
            .collect();
        let mut ops = Vec::new();
        for (name, ta) in &self.ops {
            let tb = &other.ops[name];
            let table = match (ta, tb) {
                (OpTable::Const(a), OpTable::Const(b)) => OpTable::Const(pair(*a, *b)),
                (OpTable::Unary(a), OpTable::Unary(b)) => OpTable::Unary(
                    (0..na)
                        .flat_map(|i| (0..nb).map(move |j| (i, j)))
                        .map(|(i, j)| pair(a[i], b[j]))
                        .collect(),
                ),
                (OpTable::Binary(a), OpTable::Binary(b)) => {
                    let mut t = vec![0; na * nb * na * nb];
                    for i1 in 0..na {
                        for j1 in 0..nb {
                            for i2 in 0..na {
                                for j2 in 0..nb {
                                    t[pair(i1, j1) * na * nb + pair(i2, j2)] =
                                        pair(a[i1 * na + i2], b[j1 * nb + j2]);
                                }
                            }
                        }
                    }
                    OpTable::Binary(t)
                }
                _ => return Err(Error::SignatureMismatch(self.name.clone(), other.name.clone())),
            };
            ops.push((name.clone(), table));
        }
        FiniteAlgebra::new(format!("{}x{}", self.name, other.name), elements, ops)
    }

    /// Least subset of the carrier containing `seed` (plus all constants)
    /// and closed under every operation, as a bitmask.
    pub fn closure_mask(&self, seed: u128) -> Result<u128> {
        if self.size() > 128 {
            return Err(Error::CarrierTooLarge(self.size()));
        }
        let n = self.size();
        let mut mask = seed;
        for t in self.ops.values() {
            if let OpTable::Const(c) = t {
                mask |= 1 << c;
            }
        }
        loop {
            let mut next = mask;
            for t in self.ops.values() {
                match t {
                    OpTable::Const(_) => {}
                    OpTable::Unary(t) => {
                        for x in 0..n {
                            if mask >> x & 1 == 1 {
                                next |= 1 << t[x];
                            }
                        }
                    }
                    OpTable::Binary(t) => {
                        for x in 0..n {
                            if mask >> x & 1 == 0 {
                                continue;
                            }
                            for y in 0..n {
                                if mask >> y & 1 == 1 {
                                    next |= 1 << t[x * n + y];
                                }
                            }
                        }
                    }
                }
            }
            if next == mask {
                return Ok(mask);
            }
            mask = next;
        }
    }

    /// All subuniverses (nonempty, containing every constant), ascending by
    /// size then by mask.
    pub fn all_subuniverses(&self) -> Result<Vec<u128>> {
        if self.size() > 128 {
            return Err(Error::CarrierTooLarge(self.size()));
        }
        let mut found = BTreeSet::new();
        let mut queue: Vec<u128> = Vec::new();
        let base = self.closure_mask(0)?;
        if base != 0 {
            found.insert(base);
            queue.push(base);
        } else {
            // No constants: seed with every singleton closure.
            for x in 0..self.size() {
                let m = self.closure_mask(1 << x)?;
                if found.insert(m) {
                    queue.push(m);
                }
            }
        }
        while let Some(u) = queue.pop() {
            for x in 0..self.size() {
                if u >> x & 1 == 1 {
                    continue;
                }
                let m = self.closure_mask(u | (1 << x))?;
                if found.insert(m) {
                    queue.push(m);
                }
            }
        }
        let mut out: Vec<u128> = found.into_iter().collect();
        out.sort_by_key(|m| (m.count_ones(), *m));
        Ok(out)
    }

    /// Restriction of the algebra to a closed subset, together with the
    /// inclusion morphism. Elements keep their labels and relative order.
    pub fn subalgebra(&self, mask: u128, name: impl Into<String>) -> Result<(FiniteAlgebra, Morphism)> {
        let carrier: Vec<ElemId> = (0..self.size()).filter(|x| mask >> x & 1 == 1).collect();
        if carrier.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let mut pos = vec![usize::MAX; self.size()];
        for (i, &x) in carrier.iter().enumerate() {
            pos[x] = i;
        }
        let reindex = |x: ElemId, op: &str| -> Result<ElemId> {
            if pos[x] == usize::MAX {
                return Err(Error::BadTwistSpec {
                    kind: op.to_string(),
                    msg: format!("subset not closed, escapes to `{}`", self.label(x)),
                });
            }
            Ok(pos[x])
        };
        let mut ops = Vec::new();
        for (op, t) in &self.ops {
            let table = match t {
                OpTable::Const(c) => OpTable::Const(reindex(*c, op)?),
                OpTable::Unary(t) => OpTable::Unary(
                    carrier.iter().map(|&x| reindex(t[x], op)).collect::<Result<_>>()?,
                ),
                OpTable::Binary(t) => OpTable::Binary(
                    carrier
                        .iter()
                        .flat_map(|&x| carrier.iter().map(move |&y| (x, y)))
                        .map(|(x, y)| reindex(t[x * self.size() + y], op))
                        .collect::<Result<_>>()?,
                ),
            };
            ops.push((op.clone(), table));
        }
        let labels = carrier.iter().map(|&x| self.elements[x].clone()).collect();
        let sub = FiniteAlgebra::new(name, labels, ops)?;
        let incl = Morphism {
            source: sub.name.clone(),
            target: self.name.clone(),
            map: carrier,
        };
        Ok((sub, incl))
    }
}

/// Builds a validated algebra from its JSON-level description.
pub fn make_algebra(spec: &AlgebraSpec) -> Result<FiniteAlgebra> {
    spec.to_algebra()
}

/// Least closed superset of `seed`, returned as a subalgebra plus inclusion.
pub fn generated_subalgebra(
    a: &FiniteAlgebra,
    seed: &[ElemId],
) -> Result<(FiniteAlgebra, Morphism)> {
    let mut mask: u128 = 0;
    for &x in seed {
        if x >= a.size() {
            return Err(Error::OutOfRange { op: "seed".into(), value: x, size: a.size() });
        }
        mask |= 1 << x;
    }
    let closed = a.closure_mask(mask)?;
    a.subalgebra(closed, format!("{}-sub", a.name()))
}

// ---------------------------------------------------------------------------
// Terms, equations, quasi-equations
// ---------------------------------------------------------------------------

/// Term over a signature: variables are indices into an assignment.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    Op(String, Vec<Term>),
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn cnst(name: &str) -> Term {
        Term::Op(name.to_string(), vec![])
    }

    pub fn un(name: &str, x: Term) -> Term {
        Term::Op(name.to_string(), vec![x])
    }

    pub fn bin(name: &str, x: Term, y: Term) -> Term {
        Term::Op(name.to_string(), vec![x, y])
    }

    pub fn max_var(&self) -> Option<usize> {
        match self {
            Term::Var(i) => Some(*i),
            Term::Op(_, args) => args.iter().filter_map(|t| t.max_var()).max(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::Op(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
        }
    }
}

pub(crate) fn var_name(i: usize) -> String {
    const NAMES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
    NAMES.get(i).map(|s| s.to_string()).unwrap_or_else(|| format!("v{}", i))
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "{}", var_name(*i)),
            Term::Op(name, args) if args.is_empty() => write!(f, "{}", name),
            Term::Op(name, args) => {
                write!(f, "{}(", name)?;
                for (i, t) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", t)?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Evaluates a term under a full assignment of its variables.
pub fn eval_term(a: &FiniteAlgebra, term: &Term, assignment: &[ElemId]) -> Result<ElemId> {
    match term {
        Term::Var(i) => assignment
            .get(*i)
            .copied()
            .ok_or_else(|| Error::UnboundVariable(var_name(*i))),
        Term::Op(name, args) => {
            let t = a.table(name)?;
            if t.arity() != args.len() {
                return Err(Error::ArityMismatch {
                    op: name.clone(),
                    expected: t.arity(),
                    given: args.len(),
                });
            }
            match t {
                OpTable::Const(c) => Ok(*c),
                OpTable::Unary(t) => Ok(t[eval_term(a, &args[0], assignment)?]),
                OpTable::Binary(t) => {
                    let x = eval_term(a, &args[0], assignment)?;
                    let y = eval_term(a, &args[1], assignment)?;
                    Ok(t[x * a.size() + y])
                }
            }
        }
    }
}

/// An equation `lhs ≈ rhs`; inequalities `s ≤ t` are encoded as `s ∧ t ≈ s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Equation {
        Equation { lhs, rhs }
    }

    /// `lhs ≤ rhs` as `lhs ∧ rhs ≈ lhs` (the ambient structures are lattices).
    pub fn le(lhs: Term, rhs: Term) -> Equation {
        Equation { lhs: Term::bin("and", lhs.clone(), rhs), rhs: lhs }
    }

    fn num_vars(&self) -> usize {
        let m = self.lhs.max_var().into_iter().chain(self.rhs.max_var()).max();
        m.map_or(0, |i| i + 1)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Horn clause over equations; the conclusion is mandatory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiEquation {
    pub premises: Vec<Equation>,
    pub conclusion: Equation,
}

impl QuasiEquation {
    pub fn new(premises: Vec<Equation>, conclusion: Equation) -> QuasiEquation {
        QuasiEquation { premises, conclusion }
    }

    fn num_vars(&self) -> usize {
        self.premises
            .iter()
            .map(Equation::num_vars)
            .chain([self.conclusion.num_vars()])
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for QuasiEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.premises.iter().enumerate() {
            if i > 0 {
                write!(f, " & ")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, " => {}", self.conclusion)
    }
}

/// Outcome of an exhaustive check. The counterexample, when present, is the
/// lexicographically least failing assignment (variable ids ascending,
/// element ids ascending).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub holds: bool,
    pub counterexample: Option<Vec<ElemId>>,
    /// Name of the failing law when the check ran a library of laws.
    pub law: Option<String>,
}

impl CheckResult {
    pub fn ok() -> CheckResult {
        CheckResult { holds: true, counterexample: None, law: None }
    }

    pub fn fail(assignment: Vec<ElemId>) -> CheckResult {
        CheckResult { holds: false, counterexample: Some(assignment), law: None }
    }

    pub fn named(mut self, law: &str) -> CheckResult {
        if !self.holds {
            self.law = Some(law.to_string());
        }
        self
    }

    pub fn describe(&self, a: &FiniteAlgebra) -> String {
        match &self.counterexample {
            None => "holds".to_string(),
            Some(asg) => {
                let vals: Vec<String> = asg
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| format!("{}={}", var_name(i), a.label(e)))
                    .collect();
                let law = self.law.as_deref().map(|l| format!(" [{}]", l)).unwrap_or_default();
                format!("fails{} at {}", law, vals.join(", "))
            }
        }
    }
}

// Compiled evaluator: resolves operation names once so that exhaustive scans
// stay cheap.
enum CTerm<'a> {
    Var(usize),
    Const(ElemId),
    Unary(&'a [ElemId], Box<CTerm<'a>>),
    Binary(&'a [ElemId], usize, Box<CTerm<'a>>, Box<CTerm<'a>>),
}

fn compile<'a>(a: &'a FiniteAlgebra, term: &Term) -> Result<CTerm<'a>> {
    match term {
        Term::Var(i) => Ok(CTerm::Var(*i)),
        Term::Op(name, args) => {
            let t = a.table(name)?;
            if t.arity() != args.len() {
                return Err(Error::ArityMismatch {
                    op: name.clone(),
                    expected: t.arity(),
                    given: args.len(),
                });
            }
            Ok(match t {
                OpTable::Const(c) => CTerm::Const(*c),
                OpTable::Unary(t) => CTerm::Unary(t, Box::new(compile(a, &args[0])?)),
                OpTable::Binary(t) => CTerm::Binary(
                    t,
                    a.size(),
                    Box::new(compile(a, &args[0])?),
                    Box::new(compile(a, &args[1])?),
                ),
            })
        }
    }
}

fn ceval(t: &CTerm, asg: &[ElemId]) -> ElemId {
    match t {
        CTerm::Var(i) => asg[*i],
        CTerm::Const(c) => *c,
        CTerm::Unary(tbl, x) => tbl[ceval(x, asg)],
        CTerm::Binary(tbl, n, x, y) => tbl[ceval(x, asg) * n + ceval(y, asg)],
    }
}

/// Advances `asg` to the lexicographic successor; false on wrap-around.
fn next_assignment(asg: &mut [ElemId], n: usize) -> bool {
    for slot in asg.iter_mut().rev() {
        *slot += 1;
        if *slot < n {
            return true;
        }
        *slot = 0;
    }
    false
}

/// Exhaustively decides an equation; least counterexample on failure.
pub fn check_equation(a: &FiniteAlgebra, eq: &Equation) -> Result<CheckResult> {
    let lhs = compile(a, &eq.lhs)?;
    let rhs = compile(a, &eq.rhs)?;
    let mut asg = vec![0; eq.num_vars()];
    loop {
        if ceval(&lhs, &asg) != ceval(&rhs, &asg) {
            return Ok(CheckResult::fail(asg));
        }
        if !next_assignment(&mut asg, a.size()) {
            return Ok(CheckResult::ok());
        }
    }
}

/// Exhaustively decides a quasi-equation. A counterexample satisfies every
/// premise and violates the conclusion.
pub fn check_quasiequation(a: &FiniteAlgebra, qeq: &QuasiEquation) -> Result<CheckResult> {
    let premises: Vec<(CTerm, CTerm)> = qeq
        .premises
        .iter()
        .map(|e| Ok((compile(a, &e.lhs)?, compile(a, &e.rhs)?)))
        .collect::<Result<_>>()?;
    let lhs = compile(a, &qeq.conclusion.lhs)?;
    let rhs = compile(a, &qeq.conclusion.rhs)?;
    let mut asg = vec![0; qeq.num_vars()];
    loop {
        let premises_hold = premises.iter().all(|(l, r)| ceval(l, &asg) == ceval(r, &asg));
        if premises_hold && ceval(&lhs, &asg) != ceval(&rhs, &asg) {
            return Ok(CheckResult::fail(asg));
        }
        if !next_assignment(&mut asg, a.size()) {
            return Ok(CheckResult::ok());
        }
    }
}

// ---------------------------------------------------------------------------
// Morphisms and isomorphism search
// ---------------------------------------------------------------------------

/// A total map between carriers, tagged with the algebra names it relates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Morphism {
    pub source: String,
    pub target: String,
    pub map: Vec<ElemId>,
}

impl Morphism {
    pub fn identity(a: &FiniteAlgebra) -> Morphism {
        Morphism {
            source: a.name().to_string(),
            target: a.name().to_string(),
            map: (0..a.size()).collect(),
        }
    }

    pub fn apply(&self, x: ElemId) -> ElemId {
        self.map[x]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.map.iter().all(|&y| seen.insert(y))
    }

    pub fn is_bijective_onto(&self, target_size: usize) -> bool {
        self.map.len() == target_size && self.is_injective()
    }

    /// Commutation with every operation shared by both signatures.
    pub fn is_homomorphism(&self, a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<bool> {
        for (name, ta) in &a.ops {
            let Ok(tb) = b.table(name) else { continue };
            match (ta, tb) {
                (OpTable::Const(ca), OpTable::Const(cb)) => {
                    if self.map[*ca] != *cb {
                        return Ok(false);
                    }
                }
                (OpTable::Unary(ta), OpTable::Unary(tb)) => {
                    for x in 0..a.size() {
                        if self.map[ta[x]] != tb[self.map[x]] {
                            return Ok(false);
                        }
                    }
                }
                (OpTable::Binary(ta), OpTable::Binary(tb)) => {
                    for x in 0..a.size() {
                        for y in 0..a.size() {
                            if self.map[ta[x * a.size() + y]]
                                != tb[self.map[x] * b.size() + self.map[y]]
                            {
                                return Ok(false);
                            }
                        }
                    }
                }
                _ => return Ok(false),
            }
        }
        Ok(true)
    }

    pub fn is_isomorphism(&self, a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<bool> {
        Ok(a.size() == b.size()
            && self.is_bijective_onto(b.size())
            && a.same_signature(b)
            && self.is_homomorphism(a, b)?)
    }
}

/// Backtracking search over bijections; returns the lexicographically least
/// isomorphism witness, or `None`.
pub fn find_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<Option<Morphism>> {
    if !a.same_signature(b) {
        return Err(Error::SignatureMismatch(a.name.clone(), b.name.clone()));
    }
    if a.size() != b.size() {
        return Ok(None);
    }
    Ok(search_injections(a, b, true).into_iter().next())
}

/// All injective homomorphisms a → b, in lexicographic order of their maps.
pub fn find_embeddings(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<Vec<Morphism>> {
    if !a.same_signature(b) {
        return Err(Error::SignatureMismatch(a.name.clone(), b.name.clone()));
    }
    Ok(search_injections(a, b, false))
}

fn search_injections(a: &FiniteAlgebra, b: &FiniteAlgebra, first_only: bool) -> Vec<Morphism> {
    let n = a.size();
    let mut map: Vec<Option<ElemId>> = vec![None; n];
    let mut used = vec![false; b.size()];
    let mut out = Vec::new();

    // Consistency of the partial map on every op application whose inputs
    // and output are all assigned.
    fn consistent(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[Option<ElemId>]) -> bool {
        for (name, ta) in &a.ops {
            let tb = &b.ops[name];
            match (ta, tb) {
                (OpTable::Const(ca), OpTable::Const(cb)) => {
                    if let Some(img) = map[*ca] {
                        if img != *cb {
                            return false;
                        }
                    }
                }
                (OpTable::Unary(ta), OpTable::Unary(tb)) => {
                    for x in 0..a.size() {
                        if let (Some(ix), Some(ir)) = (map[x], map[ta[x]]) {
                            if tb[ix] != ir {
                                return false;
                            }
                        }
                    }
                }
                (OpTable::Binary(ta), OpTable::Binary(tb)) => {
                    for x in 0..a.size() {
                        let Some(ix) = map[x] else { continue };
                        for y in 0..a.size() {
                            if let (Some(iy), Some(ir)) = (map[y], map[ta[x * a.size() + y]]) {
                                if tb[ix * b.size() + iy] != ir {
                                    return false;
                                }
                            }
                        }
                    }
                }
                _ => return false,
            }
        }
        true
    }

    fn go(
        a: &FiniteAlgebra,
        b: &FiniteAlgebra,
        pos: usize,
        map: &mut Vec<Option<ElemId>>,
        used: &mut Vec<bool>,
        out: &mut Vec<Morphism>,
        first_only: bool,
    ) -> bool {
        if pos == a.size() {
            out.push(Morphism {
                source: a.name().to_string(),
                target: b.name().to_string(),
                map: map.iter().map(|m| m.unwrap()).collect(),
            });
            return first_only;
        }
        for cand in 0..b.size() {
            if used[cand] {
                continue;
            }
            map[pos] = Some(cand);
            used[cand] = true;
            if consistent(a, b, map) && go(a, b, pos + 1, map, used, out, first_only) {
                return true;
            }
            map[pos] = None;
            used[cand] = false;
        }
        false
    }

    go(a, b, 0, &mut map, &mut used, &mut out, first_only);
    out
}

// ---------------------------------------------------------------------------
// JSON-facing description
// ---------------------------------------------------------------------------

/// JSON shape: `{"name": str, "elements": [str...], "operations": {...}}`,
/// with arity inferred from the table shape. Constants may be element labels.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub name: String,
    pub elements: Vec<String>,
    pub operations: BTreeMap<String, OpSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OpSpec {
    ConstId(usize),
    ConstLabel(String),
    Unary(Vec<usize>),
    Binary(Vec<Vec<usize>>),
}

impl AlgebraSpec {
    pub fn to_algebra(&self) -> Result<FiniteAlgebra> {
        let mut ops = Vec::new();
        for (name, spec) in &self.operations {
            let table = match spec {
                OpSpec::ConstId(c) => OpTable::Const(*c),
                OpSpec::ConstLabel(l) => OpTable::Const(
                    self.elements
                        .iter()
                        .position(|e| e == l)
                        .ok_or_else(|| Error::UnknownLabel(l.clone()))?,
                ),
                OpSpec::Unary(t) => OpTable::Unary(t.clone()),
                OpSpec::Binary(rows) => {
                    let n = self.elements.len();
                    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                        return Err(Error::ShapeMismatch { op: name.clone() });
                    }
                    OpTable::Binary(rows.iter().flatten().copied().collect())
                }
            };
            ops.push((name.clone(), table));
        }
        FiniteAlgebra::new(self.name.clone(), self.elements.clone(), ops)
    }

    pub fn from_algebra(a: &FiniteAlgebra) -> AlgebraSpec {
        let mut operations = BTreeMap::new();
        for (name, t) in &a.ops {
            let spec = match t {
                OpTable::Const(c) => OpSpec::ConstLabel(a.label(*c).to_string()),
                OpTable::Unary(t) => OpSpec::Unary(t.clone()),
                OpTable::Binary(t) => OpSpec::Binary(
                    t.chunks(a.size()).map(|row| row.to_vec()).collect(),
                ),
            };
            operations.insert(name.clone(), spec);
        }
        AlgebraSpec {
            name: a.name().to_string(),
            elements: a.labels().to_vec(),
            operations,
        }
    }
}

impl FiniteAlgebra {
    pub fn from_json(json: &str) -> Result<FiniteAlgebra> {
        let spec: AlgebraSpec = serde_json::from_str(json)?;
        spec.to_algebra()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&AlgebraSpec::from_algebra(self)).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::named_matrix;

    fn b2() -> FiniteAlgebra {
        FiniteAlgebra::new(
            "B2",
            vec!["0".into(), "1".into()],
            vec![
                ("and".into(), OpTable::Binary(vec![0, 0, 0, 1])),
                ("or".into(), OpTable::Binary(vec![0, 1, 1, 1])),
                ("imp".into(), OpTable::Binary(vec![1, 1, 0, 1])),
                ("neg".into(), OpTable::Unary(vec![1, 0])),
                ("zero".into(), OpTable::Const(0)),
                ("one".into(), OpTable::Const(1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn make_algebra_validates() {
        let ok = named_matrix("OL3").unwrap();
        assert_eq!(ok.algebra().size(), 3);
        assert_eq!(ok.algebra().signature().count(), 4);

        let trivial = FiniteAlgebra::new(
            "triv",
            vec!["*".into()],
            vec![("and".into(), OpTable::Binary(vec![0])), ("c".into(), OpTable::Const(0))],
        );
        assert!(trivial.is_ok());

        let bad = FiniteAlgebra::new(
            "bad",
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![("f".into(), OpTable::Binary(vec![5; 16]))],
        );
        assert!(matches!(bad, Err(Error::OutOfRange { value: 5, size: 4, .. })));

        let dup = FiniteAlgebra::new("dup", vec!["a".into(), "a".into()], vec![]);
        assert!(matches!(dup, Err(Error::DuplicateLabel(_))));

        let shape = FiniteAlgebra::new(
            "shape",
            vec!["a".into(), "b".into()],
            vec![("f".into(), OpTable::Unary(vec![0, 1, 0]))],
        );
        assert!(matches!(shape, Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn eval_term_examples() {
        let df3 = named_matrix("DF3").unwrap();
        let a = df3.algebra();
        // p -> q at p=1/2, q=0 lands on the middle value
        let t = Term::bin("imp", Term::var(0), Term::var(1));
        assert_eq!(eval_term(a, &t, &[1, 0]).unwrap(), 1);
        // projection
        assert_eq!(eval_term(a, &Term::var(0), &[2]).unwrap(), 2);
        // Fg4: bot -> 0 = top
        let fg4 = named_matrix("Fg4").unwrap();
        assert_eq!(eval_term(fg4.algebra(), &t, &[1, 0]).unwrap(), 2);
        // unbound variable
        assert!(matches!(
            eval_term(a, &t, &[1]),
            Err(Error::UnboundVariable(_))
        ));
        assert!(matches!(
            eval_term(a, &Term::cnst("nope"), &[]),
            Err(Error::UnknownOperation(_))
        ));
    }

    #[test]
    fn check_equation_examples() {
        let df3 = named_matrix("DF3").unwrap();
        let a = df3.algebra();
        let invol = Equation::new(
            Term::un("neg", Term::un("neg", Term::var(0))),
            Term::var(0),
        );
        assert!(check_equation(a, &invol).unwrap().holds);

        // x -> x = x | ~x fails at x = 0 (0 -> 0 is the middle value)
        let eq = Equation::new(
            Term::bin("imp", Term::var(0), Term::var(0)),
            Term::bin("or", Term::var(0), Term::un("neg", Term::var(0))),
        );
        let r = check_equation(a, &eq).unwrap();
        assert_eq!(r.counterexample, Some(vec![0]));

        // Peirce in the two-element Boolean algebra
        let peirce = Equation::new(
            Term::bin(
                "imp",
                Term::bin("imp", Term::var(0), Term::var(1)),
                Term::var(0),
            ),
            Term::var(0),
        );
        assert!(check_equation(&b2(), &peirce).unwrap().holds);
    }

    #[test]
    fn quasiequation_trivial_algebra() {
        let triv = FiniteAlgebra::new(
            "triv",
            vec!["*".into()],
            vec![
                ("top".into(), OpTable::Const(0)),
                ("one".into(), OpTable::Const(0)),
            ],
        )
        .unwrap();
        let q = QuasiEquation::new(
            vec![Equation::new(Term::cnst("top"), Term::cnst("one"))],
            Equation::new(Term::var(0), Term::var(1)),
        );
        assert!(check_quasiequation(&triv, &q).unwrap().holds);
    }

    #[test]
    fn find_isomorphism_examples() {
        let df3 = named_matrix("DF3").unwrap();
        let f3 = named_matrix("F3").unwrap();
        // identity on itself
        let id = find_isomorphism(df3.algebra(), df3.algebra()).unwrap().unwrap();
        assert_eq!(id.map, vec![0, 1, 2]);
        // DF3 and F3 differ (implication tables disagree on the middle row)
        assert!(find_isomorphism(df3.algebra(), f3.algebra()).unwrap().is_none());
    }

    #[test]
    fn generated_subalgebra_examples() {
        let olg4 = named_matrix("OLg4").unwrap();
        // seed {0}: 0->0 = top, ~0 = 1; {0, top, 1} is closed (bot never appears)
        let (sub, incl) = generated_subalgebra(olg4.algebra(), &[0]).unwrap();
        assert_eq!(incl.map, vec![0, 2, 3]);
        assert_eq!(sub.size(), 3);

        let df3 = named_matrix("DF3").unwrap();
        let (sub, incl) = generated_subalgebra(df3.algebra(), &[2]).unwrap();
        assert_eq!(incl.map, vec![0, 1, 2]);
        assert_eq!(sub.size(), 3);

        // seed = carrier gives the algebra back
        let (sub, _) = generated_subalgebra(df3.algebra(), &[0, 1, 2]).unwrap();
        assert_eq!(&sub.reduct(&["and"]).unwrap(), &df3.algebra().reduct(&["and"]).unwrap());
    }

    #[test]
    fn direct_product_examples() {
        let b = b2().reduct(&["and", "or"]).unwrap();
        let grid = b.direct_product(&b).unwrap();
        assert_eq!(grid.size(), 4);
        assert_eq!(grid.labels()[1], "(0,1)");
        // meet of the two incomparable middle elements is bottom
        assert_eq!(grid.binary("and", 1, 2).unwrap(), 0);
        assert_eq!(grid.binary("or", 1, 2).unwrap(), 3);

        // A x trivial ~ A
        let a = named_matrix("DF3").unwrap().algebra().clone();
        let triv = FiniteAlgebra::new(
            "triv",
            vec!["*".into()],
            vec![
                ("and".into(), OpTable::Binary(vec![0])),
                ("or".into(), OpTable::Binary(vec![0])),
                ("imp".into(), OpTable::Binary(vec![0])),
                ("neg".into(), OpTable::Unary(vec![0])),
            ],
        )
        .unwrap();
        let prod = a.direct_product(&triv).unwrap();
        assert!(find_isomorphism(&prod, &a).unwrap().is_some());

        // products preserve equations
        let sq = a.direct_product(&a).unwrap();
        assert_eq!(sq.size(), 9);
        let invol = Equation::new(Term::un("neg", Term::un("neg", Term::var(0))), Term::var(0));
        assert!(check_equation(&sq, &invol).unwrap().holds);
    }

    #[test]
    fn json_round_trip() {
        let a = b2();
        let json = a.to_json();
        let back = FiniteAlgebra::from_json(&json).unwrap();
        assert_eq!(a, back);

        // constants by label
        let spec = r#"{"name":"c","elements":["a","b"],"operations":{"k":"b"}}"#;
        let c = FiniteAlgebra::from_json(spec).unwrap();
        assert_eq!(c.constant("k").unwrap(), 1);
    }
}
