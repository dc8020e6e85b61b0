//! The named logical matrices of the conditional logics, together with
//! validity, entailment, connexive-thesis checking and table export.
//!
//! Three-valued carrier: `0, 1/2, 1` (ids 0, 1, 2), designated `{1/2, 1}`.
//! Four-valued carrier: `0, B, T, 1` (ids 0, 1, 2, 3), designated `{T, 1}`;
//! `B` is the gap and `T` the glut.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{eval_term, ElemId, FiniteAlgebra, OpTable};
use crate::error::{Error, Result};
use crate::formula::Formula;

/// An algebra plus nonempty designated subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicalMatrix {
    name: String,
    algebra: FiniteAlgebra,
    designated: BTreeSet<ElemId>,
}

impl LogicalMatrix {
    pub fn new(
        name: impl Into<String>,
        algebra: FiniteAlgebra,
        designated: impl IntoIterator<Item = ElemId>,
    ) -> Result<LogicalMatrix> {
        let designated: BTreeSet<ElemId> = designated.into_iter().collect();
        if designated.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        if let Some(&d) = designated.iter().find(|&&d| d >= algebra.size()) {
            return Err(Error::OutOfRange { op: "designated".into(), value: d, size: algebra.size() });
        }
        Ok(LogicalMatrix { name: name.into(), algebra, designated })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn designated(&self) -> &BTreeSet<ElemId> {
        &self.designated
    }

    pub fn is_designated(&self, x: ElemId) -> bool {
        self.designated.contains(&x)
    }
}

/// Validity verdict; the counter-valuation, when present, is least in the
/// lexicographic order over the formula's variables sorted alphabetically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub valid: bool,
    pub counter_valuation: Option<Vec<(String, String)>>,
}

impl Verdict {
    fn valid() -> Verdict {
        Verdict { valid: true, counter_valuation: None }
    }

    fn invalid(vars: &[String], asg: &[ElemId], a: &FiniteAlgebra) -> Verdict {
        Verdict {
            valid: false,
            counter_valuation: Some(
                vars.iter()
                    .zip(asg)
                    .map(|(v, &e)| (v.clone(), a.label(e).to_string()))
                    .collect(),
            ),
        }
    }

    pub fn describe(&self) -> String {
        match &self.counter_valuation {
            None => "valid".into(),
            Some(cv) => {
                let parts: Vec<String> =
                    cv.iter().map(|(v, l)| format!("{}={}", v, l)).collect();
                format!("invalid at {}", parts.join(", "))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// The connective truth tables
// ---------------------------------------------------------------------------

/// Raw connective tables over the three- and four-element carriers, plus
/// builders for assembling ad-hoc algebras out of them (used for the
/// interdefinability checks, which need both implications side by side).
pub mod tables {
    use super::*;

    pub const LABELS3: [&str; 3] = ["0", "1/2", "1"];
    pub const LABELS4: [&str; 4] = ["0", "B", "T", "1"];

    pub const NEG3: [usize; 3] = [2, 1, 0];
    pub const AND_OL3: [[usize; 3]; 3] = [[0, 0, 0], [0, 1, 2], [0, 2, 2]];
    pub const OR_OL3: [[usize; 3]; 3] = [[0, 0, 2], [0, 1, 2], [2, 2, 2]];
    pub const AND_K3: [[usize; 3]; 3] = [[0, 0, 0], [0, 1, 1], [0, 1, 2]];
    pub const OR_K3: [[usize; 3]; 3] = [[0, 1, 2], [1, 1, 2], [2, 2, 2]];
    pub const IMP_OL3: [[usize; 3]; 3] = [[1, 1, 1], [0, 1, 2], [0, 1, 2]];
    pub const IMP_DF3: [[usize; 3]; 3] = [[1, 1, 1], [1, 1, 1], [0, 1, 2]];
    pub const IMP_F3: [[usize; 3]; 3] = [[1, 1, 1], [0, 1, 1], [0, 1, 2]];

    /// Negation fixing the gap and the glut.
    pub const NEG_G4: [usize; 4] = [3, 1, 2, 0];
    /// Negation swapping them (the `-` table).
    pub const NEG_F4: [usize; 4] = [3, 2, 1, 0];
    pub const IMP_OL4: [[usize; 4]; 4] =
        [[2, 2, 2, 2], [2, 2, 2, 2], [0, 1, 2, 3], [0, 1, 2, 3]];
    pub const AND_OL4: [[usize; 4]; 4] =
        [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 2, 3], [0, 1, 3, 3]];
    pub const OR_OL4: [[usize; 4]; 4] =
        [[0, 1, 0, 3], [1, 3, 1, 3], [0, 1, 2, 3], [3, 3, 3, 3]];
    pub const IMP_DF4: [[usize; 4]; 4] =
        [[2, 2, 2, 2], [0, 1, 0, 1], [2, 2, 2, 2], [0, 1, 2, 3]];
    pub const AND_K4: [[usize; 4]; 4] =
        [[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]];
    pub const OR_K4: [[usize; 4]; 4] =
        [[0, 1, 2, 3], [1, 1, 3, 3], [2, 3, 2, 3], [3, 3, 3, 3]];
    pub const IMP_F4: [[usize; 4]; 4] =
        [[2, 2, 2, 2], [2, 3, 2, 3], [0, 0, 2, 2], [0, 1, 2, 3]];

    fn flat<const N: usize>(t: &[[usize; N]; N]) -> Vec<usize> {
        t.iter().flatten().copied().collect()
    }

    pub(super) fn table3(key: &str) -> Option<OpTable> {
        Some(match key {
            "neg" => OpTable::Unary(NEG3.to_vec()),
            "and_ol" => OpTable::Binary(flat(&AND_OL3)),
            "or_ol" => OpTable::Binary(flat(&OR_OL3)),
            "and_k" => OpTable::Binary(flat(&AND_K3)),
            "or_k" => OpTable::Binary(flat(&OR_K3)),
            "imp_ol" => OpTable::Binary(flat(&IMP_OL3)),
            "imp_df" => OpTable::Binary(flat(&IMP_DF3)),
            "imp_f" => OpTable::Binary(flat(&IMP_F3)),
            _ => return None,
        })
    }

    pub(super) fn table4(key: &str) -> Option<OpTable> {
        Some(match key {
            "neg_g" => OpTable::Unary(NEG_G4.to_vec()),
            "neg_f" => OpTable::Unary(NEG_F4.to_vec()),
            "and_ol" => OpTable::Binary(flat(&AND_OL4)),
            "or_ol" => OpTable::Binary(flat(&OR_OL4)),
            "and_k" => OpTable::Binary(flat(&AND_K4)),
            "or_k" => OpTable::Binary(flat(&OR_K4)),
            "imp_ol" => OpTable::Binary(flat(&IMP_OL4)),
            "imp_df" => OpTable::Binary(flat(&IMP_DF4)),
            "imp_f" => OpTable::Binary(flat(&IMP_F4)),
            _ => return None,
        })
    }

    /// Algebra over the three-element carrier with the chosen tables;
    /// `ops` pairs a signature name with a table key (e.g. `("imp","imp_f")`).
    pub fn three_valued_algebra(name: &str, ops: &[(&str, &str)]) -> Result<FiniteAlgebra> {
        build(name, &LABELS3, ops, table3)
    }

    /// Same over the four-element carrier.
    pub fn four_valued_algebra(name: &str, ops: &[(&str, &str)]) -> Result<FiniteAlgebra> {
        build(name, &LABELS4, ops, table4)
    }

    fn build(
        name: &str,
        labels: &[&str],
        ops: &[(&str, &str)],
        lookup: fn(&str) -> Option<OpTable>,
    ) -> Result<FiniteAlgebra> {
        let tables = ops
            .iter()
            .map(|(op, key)| {
                lookup(key)
                    .map(|t| (op.to_string(), t))
                    .ok_or_else(|| Error::UnknownOperation(key.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteAlgebra::new(name, labels.iter().map(|s| s.to_string()).collect(), tables)
    }

    /// Two-element Boolean algebra with the full signature.
    pub fn boolean_2() -> FiniteAlgebra {
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
        .expect("static tables")
    }
}

/// Builds one of the twelve named matrices.
///
/// Three-valued: `DF3`, `OL3`, `CN3`, `F3` (designated `{1/2, 1}`).
/// Four-valued: `OLg4`, `DFg4`, `CNg4`, `Fg4`, `DFf4`, `OLf4`, `CNf4`, `Ff4`
/// (designated `{T, 1}`). `CNg4` and `CNf4` carry `top`/`bot` as explicit
/// constants; `DFf4` has no implication, per its definition.
pub fn named_matrix(name: &str) -> Result<LogicalMatrix> {
    let m = |a: Result<FiniteAlgebra>, d: &[ElemId]| -> Result<LogicalMatrix> {
        LogicalMatrix::new(name, a?, d.iter().copied())
    };
    match name {
        "DF3" => m(
            tables::three_valued_algebra(
                name,
                &[("neg", "neg"), ("and", "and_k"), ("or", "or_k"), ("imp", "imp_df")],
            ),
            &[1, 2],
        ),
        "OL3" => m(
            tables::three_valued_algebra(
                name,
                &[("neg", "neg"), ("and", "and_ol"), ("or", "or_ol"), ("imp", "imp_ol")],
            ),
            &[1, 2],
        ),
        "CN3" => m(
            tables::three_valued_algebra(
                name,
                &[("neg", "neg"), ("and", "and_k"), ("or", "or_k"), ("imp", "imp_ol")],
            ),
            &[1, 2],
        ),
        "F3" => m(
            tables::three_valued_algebra(
                name,
                &[("neg", "neg"), ("and", "and_k"), ("or", "or_k"), ("imp", "imp_f")],
            ),
            &[1, 2],
        ),
        "OLg4" => m(
            tables::four_valued_algebra(
                name,
                &[("neg", "neg_g"), ("and", "and_ol"), ("or", "or_ol"), ("imp", "imp_ol")],
            ),
            &[2, 3],
        ),
        "DFg4" => m(
            tables::four_valued_algebra(
                name,
                &[("neg", "neg_g"), ("and", "and_k"), ("or", "or_k"), ("imp", "imp_df")],
            ),
            &[2, 3],
        ),
        "CNg4" => m(
            tables::four_valued_algebra(
                name,
                &[("neg", "neg_g"), ("and", "and_k"), ("or", "or_k"), ("imp", "imp_ol")],
            )
            .and_then(|a| a.with_constants(&[("top", "T"), ("bot", "B")])),
            &[2, 3],
        ),
        "Fg4" => m(
            tables::four_valued_algebra(
                name,
                &[("neg", "neg_g"), ("and", "and_k"), ("or", "or_k"), ("imp", "imp_f")],
            ),
            &[2, 3],
        ),
        "DFf4" => m(
            tables::four_valued_algebra(
                name,
                &[("neg", "neg_f"), ("and", "and_k"), ("or", "or_k")],
            )
            .and_then(|a| a.with_constants(&[("top", "T")])),
            &[2, 3],
        ),
        "OLf4" => m(
            tables::four_valued_algebra(
                name,
                &[("neg", "neg_f"), ("and", "and_ol"), ("or", "or_ol"), ("imp", "imp_ol")],
            ),
            &[2, 3],
        ),
        "CNf4" => m(
            tables::four_valued_algebra(
                name,
                &[("neg", "neg_f"), ("and", "and_k"), ("or", "or_k"), ("imp", "imp_ol")],
            )
            .and_then(|a| a.with_constants(&[("top", "T"), ("bot", "B")])),
            &[2, 3],
        ),
        "Ff4" => m(
            tables::four_valued_algebra(
                name,
                &[("neg", "neg_f"), ("and", "and_k"), ("or", "or_k"), ("imp", "imp_f")],
            ),
            &[2, 3],
        ),
        _ => Err(Error::UnknownMatrix(name.to_string())),
    }
}

pub const MATRIX_NAMES: [&str; 12] = [
    "DF3", "OL3", "CN3", "F3", "OLg4", "DFg4", "CNg4", "Fg4", "DFf4", "OLf4", "CNf4", "Ff4",
];

fn scan_valuations(
    m: &LogicalMatrix,
    vars: &[String],
    mut reject: impl FnMut(&FiniteAlgebra, &[ElemId]) -> Result<bool>,
) -> Result<Verdict> {
    let n = m.algebra.size();
    let mut asg = vec![0usize; vars.len()];
    loop {
        if reject(&m.algebra, &asg)? {
            return Ok(Verdict::invalid(vars, &asg, &m.algebra));
        }
        // lexicographic successor
        let mut done = true;
        for slot in asg.iter_mut().rev() {
            *slot += 1;
            if *slot < n {
                done = false;
                break;
            }
            *slot = 0;
        }
        if done {
            return Ok(Verdict::valid());
        }
    }
}

/// Valid iff every valuation sends the formula into the designated set.
pub fn is_valid(m: &LogicalMatrix, f: &Formula) -> Result<Verdict> {
    let vars: Vec<String> = f.variables().into_iter().collect();
    let term = f.to_term(&vars)?;
    scan_valuations(m, &vars, |a, asg| Ok(!m.is_designated(eval_term(a, &term, asg)?)))
}

/// Valid iff every valuation designating all premises designates the
/// conclusion. Empty premises reduce to [`is_valid`].
pub fn entails(m: &LogicalMatrix, premises: &[Formula], conclusion: &Formula) -> Result<Verdict> {
    let mut vars = BTreeSet::new();
    for p in premises {
        vars.extend(p.variables());
    }
    vars.extend(conclusion.variables());
    let vars: Vec<String> = vars.into_iter().collect();
    let pre: Vec<_> = premises.iter().map(|p| p.to_term(&vars)).collect::<Result<_>>()?;
    let conc = conclusion.to_term(&vars)?;
    scan_valuations(m, &vars, |a, asg| {
        for p in &pre {
            if !m.is_designated(eval_term(a, p, asg)?) {
                return Ok(false);
            }
        }
        Ok(!m.is_designated(eval_term(a, &conc, asg)?))
    })
}

/// Verdicts for Aristotle's and Boethius' theses.
#[derive(Debug, Clone, Serialize)]
pub struct ThesesReport {
    pub a1: Verdict,
    pub a2: Verdict,
    pub b1: Verdict,
    pub b2: Verdict,
}

impl ThesesReport {
    pub fn all_valid(&self) -> bool {
        self.a1.valid && self.a2.valid && self.b1.valid && self.b2.valid
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &Verdict)> {
        [("A1", &self.a1), ("A2", &self.a2), ("B1", &self.b1), ("B2", &self.b2)].into_iter()
    }
}

/// Checks `~(p -> ~p)`, `~(~p -> p)`, `(p -> q) -> ~(p -> ~q)` and
/// `(p -> ~q) -> ~(p -> q)`; requires `neg` and `imp` in the signature.
pub fn check_theses(m: &LogicalMatrix) -> Result<ThesesReport> {
    for op in ["neg", "imp"] {
        m.algebra.table(op)?;
    }
    let p = || Formula::var("p");
    let q = || Formula::var("q");
    let a1 = Formula::neg(Formula::imp(p(), Formula::neg(p())));
    let a2 = Formula::neg(Formula::imp(Formula::neg(p()), p()));
    let b1 = Formula::imp(
        Formula::imp(p(), q()),
        Formula::neg(Formula::imp(p(), Formula::neg(q()))),
    );
    let b2 = Formula::imp(
        Formula::imp(p(), Formula::neg(q())),
        Formula::neg(Formula::imp(p(), q())),
    );
    Ok(ThesesReport {
        a1: is_valid(m, &a1)?,
        a2: is_valid(m, &a2)?,
        b1: is_valid(m, &b1)?,
        b2: is_valid(m, &b2)?,
    })
}

/// A connective or formula tabulated over the whole carrier, in element
/// order. `cells` is row-major for arity 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnTable {
    pub item: String,
    pub arity: usize,
    pub elements: Vec<String>,
    pub cells: Vec<ElemId>,
}

/// Tabulates a connective by name, or a formula of at most two variables
/// (variables in alphabetical order index the table dimensions).
pub fn connective_table(m: &LogicalMatrix, item: &TableItem) -> Result<ConnTable> {
    let a = &m.algebra;
    let n = a.size();
    match item {
        TableItem::Connective(name) => {
            let t = a.table(name)?;
            let cells = match t {
                OpTable::Const(c) => vec![*c],
                OpTable::Unary(t) | OpTable::Binary(t) => t.clone(),
            };
            Ok(ConnTable {
                item: name.clone(),
                arity: t.arity(),
                elements: a.labels().to_vec(),
                cells,
            })
        }
        TableItem::Formula(f) => {
            let vars: Vec<String> = f.variables().into_iter().collect();
            if vars.len() > 2 {
                return Err(Error::TooManyVariables(vars.len()));
            }
            let term = f.to_term(&vars)?;
            let mut cells = Vec::new();
            match vars.len() {
                0 => cells.push(eval_term(a, &term, &[])?),
                1 => {
                    for x in 0..n {
                        cells.push(eval_term(a, &term, &[x])?);
                    }
                }
                _ => {
                    for x in 0..n {
                        for y in 0..n {
                            cells.push(eval_term(a, &term, &[x, y])?);
                        }
                    }
                }
            }
            Ok(ConnTable {
                item: crate::formula::render(f),
                arity: vars.len(),
                elements: a.labels().to_vec(),
                cells,
            })
        }
    }
}

#[derive(Debug, Clone)]
pub enum TableItem {
    Connective(String),
    Formula(Formula),
}

impl ConnTable {
    pub fn to_text(&self) -> String {
        let n = self.elements.len();
        let w = self
            .elements
            .iter()
            .map(|l| l.len())
            .chain([self.item.len()])
            .max()
            .unwrap_or(1);
        let pad = |s: &str| format!("{:>w$}", s, w = w);
        match self.arity {
            0 => format!("{} = {}\n", self.item, self.elements[self.cells[0]]),
            1 => {
                let mut out = format!("{} |\n", pad(&self.item));
                for (i, &v) in self.cells.iter().enumerate() {
                    out.push_str(&format!("{} | {}\n", pad(&self.elements[i]), self.elements[v]));
                }
                out
            }
            _ => {
                let mut out = pad(&self.item);
                for l in &self.elements {
                    out.push_str(&format!(" {}", pad(l)));
                }
                out.push('\n');
                out.push_str(&"-".repeat((w + 1) * (n + 1)));
                out.push('\n');
                for x in 0..n {
                    out.push_str(&pad(&self.elements[x]));
                    for y in 0..n {
                        out.push_str(&format!(" {}", pad(&self.elements[self.cells[x * n + y]])));
                    }
                    out.push('\n');
                }
                out
            }
        }
    }

    pub fn to_csv(&self) -> String {
        let n = self.elements.len();
        match self.arity {
            0 => format!("{},{}\n", self.item, self.elements[self.cells[0]]),
            1 => {
                let mut out = String::new();
                for (i, &v) in self.cells.iter().enumerate() {
                    out.push_str(&format!("{},{}\n", self.elements[i], self.elements[v]));
                }
                out
            }
            _ => {
                let mut out = String::new();
                out.push_str(&self.item);
                for l in &self.elements {
                    out.push(',');
                    out.push_str(l);
                }
                out.push('\n');
                for x in 0..n {
                    out.push_str(&self.elements[x]);
                    for y in 0..n {
                        out.push(',');
                        out.push_str(&self.elements[self.cells[x * n + y]]);
                    }
                    out.push('\n');
                }
                out
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<&str>> = match self.arity {
            0 => vec![vec![self.elements[self.cells[0]].as_str()]],
            1 => vec![self.cells.iter().map(|&v| self.elements[v].as_str()).collect()],
            _ => self
                .cells
                .chunks(self.elements.len())
                .map(|row| row.iter().map(|&v| self.elements[v].as_str()).collect())
                .collect(),
        };
        serde_json::json!({
            "item": self.item,
            "arity": self.arity,
            "elements": self.elements,
            "table": rows,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    #[test]
    fn named_matrix_spot_checks() {
        let olg4 = named_matrix("OLg4").unwrap();
        assert_eq!(olg4.algebra().binary("imp", 1, 2).unwrap(), 2); // B -> T = T
        let dfg4 = named_matrix("DFg4").unwrap();
        assert_eq!(dfg4.algebra().binary("and", 1, 2).unwrap(), 0); // B & T = 0
        let cnf4 = named_matrix("CNf4").unwrap();
        assert_eq!(cnf4.algebra().unary("neg", 2).unwrap(), 1); // -T = B
        assert!(named_matrix("XYZ").is_err());
        // DFf4 carries no implication
        assert!(!named_matrix("DFf4").unwrap().algebra().has_op("imp"));
    }

    #[test]
    fn aristotle_a1_in_cn3() {
        let cn3 = named_matrix("CN3").unwrap();
        let f = parse("~(p -> ~p)").unwrap();
        assert!(is_valid(&cn3, &f).unwrap().valid);
    }

    #[test]
    fn boethius_b1_fails_in_cnf4() {
        let cnf4 = named_matrix("CNf4").unwrap();
        let f = parse("(p -> q) -> ~(p -> ~q)").unwrap();
        let v = is_valid(&cnf4, &f).unwrap();
        assert!(!v.valid);
        assert_eq!(
            v.counter_valuation,
            Some(vec![("p".into(), "0".into()), ("q".into(), "0".into())])
        );
    }

    #[test]
    fn designated_constant_is_valid() {
        let cng4 = named_matrix("CNg4").unwrap();
        assert!(is_valid(&cng4, &parse("T").unwrap()).unwrap().valid);
    }

    #[test]
    fn entailment_examples() {
        let df3 = named_matrix("DF3").unwrap();
        let p = parse("p").unwrap();
        assert!(entails(&df3, &[p.clone()], &p).unwrap().valid);

        // modus ponens fails in DF3 under non-falsity preservation: the
        // scan over all nine valuations finds p=1/2, q=0
        let mp = entails(&df3, &[parse("p").unwrap(), parse("p -> q").unwrap()], &parse("q").unwrap())
            .unwrap();
        assert!(!mp.valid);
        assert_eq!(
            mp.counter_valuation,
            Some(vec![("p".into(), "1/2".into()), ("q".into(), "0".into())])
        );

        // empty premises reduce to validity
        let a1 = parse("~(p -> ~p)").unwrap();
        assert_eq!(entails(&df3, &[], &a1).unwrap().valid, is_valid(&df3, &a1).unwrap().valid);
    }

    #[test]
    fn theses_reports() {
        let ol3 = named_matrix("OL3").unwrap();
        assert!(check_theses(&ol3).unwrap().all_valid());
        let cng4 = named_matrix("CNg4").unwrap();
        assert!(check_theses(&cng4).unwrap().all_valid());
        let cnf4 = named_matrix("CNf4").unwrap();
        let r = check_theses(&cnf4).unwrap();
        assert!(!r.b1.valid && !r.b2.valid);
        // DFf4 has no implication
        assert!(check_theses(&named_matrix("DFf4").unwrap()).is_err());
    }

    #[test]
    fn connective_table_rows() {
        let dfg4 = named_matrix("DFg4").unwrap();
        let t = connective_table(&dfg4, &TableItem::Connective("imp".into())).unwrap();
        assert_eq!(&t.cells[4..8], &[0, 1, 0, 1]); // row B of ->_DF
        let ff4 = named_matrix("Ff4").unwrap();
        let t = connective_table(&ff4, &TableItem::Connective("imp".into())).unwrap();
        assert_eq!(&t.cells[8..12], &[0, 0, 2, 2]); // row T of ->_F

        let id = connective_table(&dfg4, &TableItem::Formula(parse("p").unwrap())).unwrap();
        assert_eq!(id.cells, vec![0, 1, 2, 3]);

        let three = parse("p & q | r").unwrap();
        assert!(matches!(
            connective_table(&dfg4, &TableItem::Formula(three)),
            Err(Error::TooManyVariables(3))
        ));
    }

    #[test]
    fn df3_implication_is_the_defining_term() {
        // (T & ~p) | (p & q) with T read as 1/2 reproduces ->_DF
        let df3 = named_matrix("DF3").unwrap();
        let a = df3.algebra().with_constants(&[("top", "1/2")]).unwrap();
        let m = LogicalMatrix::new("DF3+top", a, [1, 2]).unwrap();
        let term = connective_table(&m, &TableItem::Formula(parse("(T & ~p) | (p & q)").unwrap()))
            .unwrap();
        let imp = connective_table(&m, &TableItem::Connective("imp".into())).unwrap();
        assert_eq!(term.cells, imp.cells);
    }

    #[test]
    fn g_restriction_and_f_non_restriction() {
        use crate::algebra::{find_isomorphism, generated_subalgebra};
        // {0, T, 1} is closed in every g-matrix and restricts to the
        // three-valued matrix under 1/2 <-> T.
        for (g, three) in [("DFg4", "DF3"), ("OLg4", "OL3"), ("CNg4", "CN3"), ("Fg4", "F3")] {
            let m4 = named_matrix(g).unwrap();
            let a4 = m4.algebra().reduct(&["neg", "and", "or", "imp"]).unwrap();
            let (sub, incl) = generated_subalgebra(&a4, &[0, 2, 3]).unwrap();
            assert_eq!(incl.map, vec![0, 2, 3], "{g}: {{0,T,1}} not closed");
            let m3 = named_matrix(three).unwrap();
            let iso = find_isomorphism(&sub, m3.algebra()).unwrap().unwrap();
            assert_eq!(iso.map, vec![0, 1, 2], "glut should map to 1/2");
        }
        // in every f-matrix the same subset is not closed under `-`
        for f in ["DFf4", "OLf4", "CNf4", "Ff4"] {
            let m4 = named_matrix(f).unwrap();
            let neg = m4.algebra().unary("neg", 2).unwrap();
            assert_eq!(neg, 1, "{f}: -T must be B");
        }
    }

    #[test]
    fn table_export_formats() {
        let df3 = named_matrix("DF3").unwrap();
        let t = connective_table(&df3, &TableItem::Connective("neg".into())).unwrap();
        assert!(t.to_text().contains("1/2 | 1/2"));
        let c = connective_table(&df3, &TableItem::Connective("imp".into())).unwrap();
        let csv = c.to_csv();
        assert!(csv.starts_with("imp,0,1/2,1\n"));
        let json = c.to_json();
        assert_eq!(json["table"][0][0], "1/2");
    }
}
