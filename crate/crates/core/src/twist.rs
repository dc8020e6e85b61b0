//! Twist constructions: products of factor algebras with componentwise
//! operations, one construction per conditional logic.
//!
//! Three-valued kinds (`OL`, `DF`, `CN`, `F`) build on a constrained
//! universe; the four-valued `g`/`f` kinds take the whole product. Derived
//! operations (join via the appropriate negation, the defining implication
//! terms, definable constants) are materialized as tables so downstream
//! checks can treat them as primitive.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraSpec, ElemId, FiniteAlgebra, Morphism, OpTable};
use crate::classes::{classify, AlgebraClass};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TwistKind {
    OL,
    DF,
    CN,
    F,
    OLg,
    DFg,
    CNg,
    Fg,
    DFf,
    OLf,
    CNf,
    Ff,
}

pub const ALL_KINDS: [TwistKind; 12] = [
    TwistKind::OL,
    TwistKind::DF,
    TwistKind::CN,
    TwistKind::F,
    TwistKind::OLg,
    TwistKind::DFg,
    TwistKind::CNg,
    TwistKind::Fg,
    TwistKind::DFf,
    TwistKind::OLf,
    TwistKind::CNf,
    TwistKind::Ff,
];

impl TwistKind {
    pub fn name(self) -> &'static str {
        use TwistKind::*;
        match self {
            OL => "OL",
            DF => "DF",
            CN => "CN",
            F => "F",
            OLg => "OLg",
            DFg => "DFg",
            CNg => "CNg",
            Fg => "Fg",
            DFf => "DFf",
            OLf => "OLf",
            CNf => "CNf",
            Ff => "Ff",
        }
    }

    /// Kinds whose representation theorem is on the books; the rest run in
    /// exploratory mode.
    pub fn is_theorem_mode(self) -> bool {
        use TwistKind::*;
        matches!(self, DF | CN | F | DFg | CNg | Fg | DFf | Ff)
    }

    pub fn is_two_factor(self) -> bool {
        use TwistKind::*;
        matches!(self, DFf | CNf | Ff)
    }

    /// Kinds whose negation acts componentwise via the factors' negations.
    pub fn is_f_kind(self) -> bool {
        use TwistKind::*;
        matches!(self, DFf | OLf | CNf | Ff)
    }

    /// Class the first factor must belong to.
    pub fn factor1_class(self) -> AlgebraClass {
        use TwistKind::*;
        match self {
            OL | CN | F => AlgebraClass::GeneralizedBoolean,
            DF => AlgebraClass::UpperBoundedDistributiveLattice,
            DFg => AlgebraClass::BoundedDistributiveLattice,
            OLg | CNg | Fg | OLf | CNf | Ff => AlgebraClass::Boolean,
            DFf => AlgebraClass::DeMorganAlgebra,
        }
    }

    /// Class the second factor must belong to (two-factor kinds only).
    pub fn factor2_class(self) -> Option<AlgebraClass> {
        use TwistKind::*;
        match self {
            DFf => Some(AlgebraClass::DeMorganAlgebra),
            CNf => Some(AlgebraClass::Boolean),
            Ff => Some(AlgebraClass::DeMorganAlgebra),
            _ => None,
        }
    }

    /// Class every twist of this kind lands in, when the source states one.
    pub fn target_class(self) -> Option<AlgebraClass> {
        use TwistKind::*;
        match self {
            DF => Some(AlgebraClass::CenteredKleene),
            CN => Some(AlgebraClass::CnAlgebra),
            F => Some(AlgebraClass::FAlgebra),
            DFg => Some(AlgebraClass::DfgAlgebra),
            CNg => Some(AlgebraClass::CngAlgebra),
            Fg => Some(AlgebraClass::FgAlgebra),
            DFf => Some(AlgebraClass::DffAlgebra),
            Ff => Some(AlgebraClass::FfAlgebra),
            OL | OLg | OLf | CNf => None,
        }
    }
}

impl fmt::Display for TwistKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TwistKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_KINDS
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownTwistKind(s.to_string()))
    }
}

/// Construction request: kind, factor algebra(s), optional embedding for
/// the CNf implication. A missing second factor defaults to a copy of the
/// first; a missing rho defaults to the identity when the factors coincide.
#[derive(Debug, Clone)]
pub struct TwistSpec {
    pub kind: TwistKind,
    pub factor1: FiniteAlgebra,
    pub factor2: Option<FiniteAlgebra>,
    pub rho: Option<Morphism>,
}

impl TwistSpec {
    pub fn new(kind: TwistKind, factor1: FiniteAlgebra) -> TwistSpec {
        TwistSpec { kind, factor1, factor2: None, rho: None }
    }

    pub fn with_factor2(mut self, factor2: FiniteAlgebra) -> TwistSpec {
        self.factor2 = Some(factor2);
        self
    }

    pub fn with_rho(mut self, rho: Morphism) -> TwistSpec {
        self.rho = Some(rho);
        self
    }

    /// Loads the JSON form `{"kind": str, "factor1": file, "factor2": file?,
    /// "rho": {label: label}?}`; algebra paths resolve relative to the spec
    /// file's directory.
    pub fn from_file(path: &Path) -> Result<TwistSpec> {
        let text = std::fs::read_to_string(path)?;
        let file: TwistSpecFile = serde_json::from_str(&text)?;
        let dir = path.parent().unwrap_or_else(|| Path::new("."));
        let load = |p: &str| -> Result<FiniteAlgebra> {
            let full = dir.join(p);
            let text = std::fs::read_to_string(&full)?;
            let spec: AlgebraSpec = serde_json::from_str(&text)?;
            spec.to_algebra()
        };
        let kind: TwistKind = file.kind.parse()?;
        let factor1 = load(&file.factor1)?;
        let factor2 = file.factor2.as_deref().map(load).transpose()?;
        let rho = match file.rho {
            None => None,
            Some(pairs) => {
                let target = factor2.as_ref().unwrap_or(&factor1);
                let mut map = vec![usize::MAX; factor1.size()];
                for (from, to) in &pairs {
                    map[factor1.element(from)?] = target.element(to)?;
                }
                if map.iter().any(|&x| x == usize::MAX) {
                    return Err(Error::BadRho("rho is not total on factor1".into()));
                }
                Some(Morphism {
                    source: factor1.name().to_string(),
                    target: target.name().to_string(),
                    map,
                })
            }
        };
        Ok(TwistSpec { kind, factor1, factor2, rho })
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct TwistSpecFile {
    kind: String,
    factor1: String,
    factor2: Option<String>,
    rho: Option<std::collections::BTreeMap<String, String>>,
}

/// A built twist algebra: the algebra itself plus the projections onto the
/// factor carriers.
#[derive(Debug, Clone)]
pub struct TwistAlgebra {
    pub kind: TwistKind,
    pub algebra: FiniteAlgebra,
    pub factor1: FiniteAlgebra,
    pub factor2: FiniteAlgebra,
    /// First-coordinate factor element of each twist element.
    pub pi1: Vec<ElemId>,
    /// Second-coordinate factor element of each twist element.
    pub pi2: Vec<ElemId>,
}

impl TwistAlgebra {
    pub fn pi1_image(&self) -> Vec<ElemId> {
        let mut img: Vec<ElemId> = self.pi1.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    pub fn is_pi1_full(&self) -> bool {
        self.pi1_image().len() == self.factor1.size()
    }
}

// Pairwise operation builders used during construction.
struct PairOps<'a> {
    f1: &'a FiniteAlgebra,
    f2: &'a FiniteAlgebra,
}

impl<'a> PairOps<'a> {
    fn meet1(&self, x: ElemId, y: ElemId) -> Result<ElemId> {
        self.f1.binary("and", x, y)
    }
    fn join1(&self, x: ElemId, y: ElemId) -> Result<ElemId> {
        self.f1.binary("or", x, y)
    }
    fn imp1(&self, x: ElemId, y: ElemId) -> Result<ElemId> {
        self.f1.binary("imp", x, y)
    }
    fn join2(&self, x: ElemId, y: ElemId) -> Result<ElemId> {
        self.f2.binary("or", x, y)
    }
    fn imp2(&self, x: ElemId, y: ElemId) -> Result<ElemId> {
        self.f2.binary("imp", x, y)
    }
    fn neg1(&self, x: ElemId) -> Result<ElemId> {
        self.f1.unary("neg", x)
    }
    fn neg2(&self, x: ElemId) -> Result<ElemId> {
        self.f2.unary("neg", x)
    }
}

fn validate_factor(kind: TwistKind, which: usize, a: &FiniteAlgebra, class: AlgebraClass) -> Result<()> {
    let r = classify(a, class).map_err(|e| Error::FactorClass {
        kind: kind.name().into(),
        which,
        class: class.name().into(),
        detail: e.to_string(),
    })?;
    if !r.holds {
        return Err(Error::FactorClass {
            kind: kind.name().into(),
            which,
            class: class.name().into(),
            detail: r.describe(a),
        });
    }
    Ok(())
}

/// For f-kind Boolean factors the construction consumes the factor's own
/// negation, so it must agree with `x -> 0`.
fn validate_boolean_negation(kind: TwistKind, which: usize, a: &FiniteAlgebra) -> Result<()> {
    use crate::algebra::{check_equation, Equation, Term};
    a.table("neg").map_err(|_| Error::FactorClass {
        kind: kind.name().into(),
        which,
        class: "boolean with negation".into(),
        detail: "missing `neg`".into(),
    })?;
    let eq = Equation::new(
        Term::un("neg", Term::var(0)),
        Term::bin("imp", Term::var(0), Term::cnst("zero")),
    );
    if !check_equation(a, &eq)?.holds {
        return Err(Error::FactorClass {
            kind: kind.name().into(),
            which,
            class: "boolean with negation".into(),
            detail: "neg(x) differs from x -> 0".into(),
        });
    }
    Ok(())
}

/// Builds the full twist algebra of the requested kind.
pub fn twist_build(spec: &TwistSpec) -> Result<TwistAlgebra> {
    use TwistKind::*;
    let kind = spec.kind;
    let f1 = &spec.factor1;
    let owned_f2;
    let f2: &FiniteAlgebra = match &spec.factor2 {
        Some(f2) if !kind.is_two_factor() => {
            if f2 != f1 {
                return Err(Error::BadTwistSpec {
                    kind: kind.name().into(),
                    msg: "second factor only makes sense for DFf, CNf, Ff".into(),
                });
            }
            f2
        }
        Some(f2) => f2,
        None => {
            owned_f2 = f1.clone();
            &owned_f2
        }
    };

    validate_factor(kind, 1, f1, kind.factor1_class())?;
    if let Some(c2) = kind.factor2_class() {
        validate_factor(kind, 2, f2, c2)?;
    }
    match kind {
        OLf => validate_boolean_negation(kind, 1, f1)?,
        CNf => {
            validate_boolean_negation(kind, 1, f1)?;
            validate_boolean_negation(kind, 2, f2)?;
        }
        Ff => validate_boolean_negation(kind, 1, f1)?,
        _ => {}
    }

    // rho: CNf only.
    let rho: Option<Vec<ElemId>> = match (&spec.rho, kind) {
        (None, CNf) => {
            if f1 != f2 && spec.factor2.is_some() {
                return Err(Error::BadRho(
                    "CNf with distinct factors needs an explicit rho".into(),
                ));
            }
            Some((0..f1.size()).collect())
        }
        (Some(rho), CNf) => {
            if rho.map.len() != f1.size() || rho.map.iter().any(|&x| x >= f2.size()) {
                return Err(Error::BadRho("rho is not a total map into factor2".into()));
            }
            if !rho.is_injective() {
                return Err(Error::BadRho("rho is not injective".into()));
            }
            if !rho.is_homomorphism(f1, f2)? {
                return Err(Error::BadRho("rho does not commute with the operations".into()));
            }
            Some(rho.map.clone())
        }
        (Some(_), _) => {
            return Err(Error::BadTwistSpec {
                kind: kind.name().into(),
                msg: "rho only applies to CNf".into(),
            })
        }
        (None, _) => None,
    };

    let ops = PairOps { f1, f2 };
    let one1 = || f1.constant("one");
    // Universe.
    let mut carrier: Vec<(ElemId, ElemId)> = Vec::new();
    for x in 0..f1.size() {
        for y in 0..f2.size() {
            let keep = match kind {
                OL => ops.imp1(x, y)? == y,
                DF | CN | F => ops.join1(x, y)? == one1()?,
                _ => true,
            };
            if keep {
                carrier.push((x, y));
            }
        }
    }
    let index = |x: ElemId, y: ElemId| -> Result<ElemId> {
        carrier.binary_search(&(x, y)).map_err(|_| Error::BadTwistSpec {
            kind: kind.name().into(),
            msg: format!(
                "operation escapes the universe at ({},{})",
                f1.label(x),
                f2.label(y)
            ),
        })
    };
    let n = carrier.len();
    if n == 0 {
        return Err(Error::BadTwistSpec { kind: kind.name().into(), msg: "empty universe".into() });
    }

    // Primitive tables.
    let mut and_t = vec![0; n * n];
    let mut neg_t = vec![0; n];
    let mut imp_t: Option<Vec<ElemId>> = None;

    for (i, &(x1, y1)) in carrier.iter().enumerate() {
        neg_t[i] = match kind {
            DFf | OLf | CNf | Ff => index(ops.neg1(x1)?, ops.neg2(y1)?)?,
            _ => index(y1, x1)?, // swap negation needs a symmetric universe
        };
        for (j, &(x2, y2)) in carrier.iter().enumerate() {
            and_t[i * n + j] = match kind {
                OL | OLg | OLf => index(
                    ops.meet1(x1, x2)?,
                    ops.meet1(ops.imp1(x1, y2)?, ops.imp1(x2, y1)?)?,
                )?,
                _ => index(ops.meet1(x1, x2)?, ops.join2(y1, y2)?)?,
            };
        }
    }

    match kind {
        OL | CN | OLg | CNg | OLf => {
            let mut t = vec![0; n * n];
            for (i, &(x1, _)) in carrier.iter().enumerate() {
                for (j, &(x2, y2)) in carrier.iter().enumerate() {
                    t[i * n + j] = index(ops.imp1(x1, x2)?, ops.imp1(x1, y2)?)?;
                }
            }
            imp_t = Some(t);
        }
        CNf => {
            let rho = rho.as_ref().unwrap();
            let mut t = vec![0; n * n];
            for (i, &(x1, _)) in carrier.iter().enumerate() {
                for (j, &(x2, y2)) in carrier.iter().enumerate() {
                    t[i * n + j] = index(ops.imp1(x1, x2)?, ops.imp2(rho[x1], y2)?)?;
                }
            }
            imp_t = Some(t);
        }
        F | Fg | Ff => {
            let mut t = vec![0; n * n];
            for (i, &(x1, y1)) in carrier.iter().enumerate() {
                for (j, &(x2, y2)) in carrier.iter().enumerate() {
                    t[i * n + j] = index(ops.imp1(x1, x2)?, ops.join2(y1, y2)?)?;
                }
            }
            imp_t = Some(t);
        }
        DF | DFg | DFf => {} // implication derived below from its defining term
    }

    let labels: Vec<String> = carrier
        .iter()
        .map(|&(x, y)| format!("({},{})", f1.label(x), f2.label(y)))
        .collect();

    let mut tables: Vec<(String, OpTable)> = vec![
        ("and".into(), OpTable::Binary(and_t.clone())),
        ("neg".into(), OpTable::Unary(neg_t.clone())),
    ];
    if let Some(t) = &imp_t {
        tables.push(("imp".into(), OpTable::Binary(t.clone())));
    }

    // Constants.
    let zero2 = || f2.constant("zero");
    let one2 = || f2.constant("one");
    match kind {
        DF | CN | F => {
            tables.push(("half".into(), OpTable::Const(index(one1()?, one2()?)?)));
        }
        DFg | CNg | Fg => {
            tables.push(("top".into(), OpTable::Const(index(one1()?, one2()?)?)));
            tables.push(("bot".into(), OpTable::Const(index(f1.constant("zero")?, zero2()?)?)));
            tables.push(("zero".into(), OpTable::Const(index(f1.constant("zero")?, one2()?)?)));
        }
        DFf | CNf | Ff => {
            let bot = index(f1.constant("zero")?, zero2()?)?;
            tables.push(("bot".into(), OpTable::Const(bot)));
            // top := -bot
            tables.push(("top".into(), OpTable::Const(neg_t[bot])));
            if kind != CNf {
                tables.push(("zero".into(), OpTable::Const(index(f1.constant("zero")?, one2()?)?)));
                tables.push(("one".into(), OpTable::Const(index(one1()?, zero2()?)?)));
            }
        }
        OL | OLg | OLf => {}
    }

    // Derived join: De Morgan swap for the symmetric kinds, the inner
    // negations for the f-kinds; either way or(x,y) = neg(and(neg x, neg y)).
    let mut or_t = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            or_t[i * n + j] = neg_t[and_t[neg_t[i] * n + neg_t[j]]];
        }
    }
    tables.push(("or".into(), OpTable::Binary(or_t.clone())));

    // Derived implication for the DF-style kinds: (c & ~x) | (x & y) with c
    // the center (half resp. top).
    if matches!(kind, DF | DFg | DFf) {
        let center = index(one1()?, one2()?)?;
        let mut t = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let lhs = and_t[center * n + neg_t[i]];
                let rhs = and_t[i * n + j];
                t[i * n + j] = or_t[lhs * n + rhs];
            }
        }
        tables.push(("imp".into(), OpTable::Binary(t)));
    }

    let name = match kind.is_two_factor() {
        true => format!("{}-twist({},{})", kind, f1.name(), f2.name()),
        false => format!("{}-twist({})", kind, f1.name()),
    };
    let algebra = FiniteAlgebra::new(name, labels, tables)?;
    Ok(TwistAlgebra {
        kind,
        algebra,
        factor1: f1.clone(),
        factor2: f2.clone(),
        pi1: carrier.iter().map(|&(x, _)| x).collect(),
        pi2: carrier.iter().map(|&(_, y)| y).collect(),
    })
}

/// All subalgebras of the twist whose first projection covers the whole
/// first factor, ascending by size then carrier mask, truncated at `limit`.
/// Each comes with its inclusion into `t`.
pub fn enumerate_pi1_full_subalgebras(
    t: &TwistAlgebra,
    limit: usize,
) -> Result<Vec<(TwistAlgebra, Morphism)>> {
    let masks = t.algebra.all_subuniverses()?;
    let mut out = Vec::new();
    for mask in masks {
        if out.len() >= limit {
            break;
        }
        let mut seen = vec![false; t.factor1.size()];
        for (i, &p1) in t.pi1.iter().enumerate() {
            if mask >> i & 1 == 1 {
                seen[p1] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            continue;
        }
        let (sub, incl) = t.algebra.subalgebra(
            mask,
            format!("{}|{}", t.algebra.name(), mask.count_ones()),
        )?;
        let pi1 = incl.map.iter().map(|&i| t.pi1[i]).collect();
        let pi2 = incl.map.iter().map(|&i| t.pi2[i]).collect();
        out.push((
            TwistAlgebra {
                kind: t.kind,
                algebra: sub,
                factor1: t.factor1.clone(),
                factor2: t.factor2.clone(),
                pi1,
                pi2,
            },
            incl,
        ));
    }
    Ok(out)
}

/// On a generalized Boolean algebra, `a1 -> a2 = a2` and `a1 | a2 = 1` cut
/// out the same universe; verifies the equivalence pointwise.
pub fn check_universe_equivalence(b: &FiniteAlgebra) -> Result<crate::algebra::CheckResult> {
    let r = classify(b, AlgebraClass::GeneralizedBoolean)?;
    if !r.holds {
        return Err(Error::FactorClass {
            kind: "universe-equivalence".into(),
            which: 1,
            class: AlgebraClass::GeneralizedBoolean.name().into(),
            detail: r.describe(b),
        });
    }
    let one = b.constant("one")?;
    for x in 0..b.size() {
        for y in 0..b.size() {
            let fixed = b.binary("imp", x, y)? == y;
            let join = b.binary("or", x, y)? == one;
            if fixed != join {
                return Ok(crate::algebra::CheckResult::fail(vec![x, y]));
            }
        }
    }
    Ok(crate::algebra::CheckResult::ok())
}

/// Verifies the closed form of the derived implication: the pair formula
/// `(x2 | (x1 & y1), x2 | y2)` for DF twists, and the defining term
/// `(T & ~x) | (x & y)` for Ff twists.
pub fn check_closed_forms(t: &TwistAlgebra) -> Result<crate::algebra::CheckResult> {
    use crate::algebra::{check_equation, Equation, Term};
    match t.kind {
        TwistKind::DF => {
            let f = &t.factor1;
            let n = t.algebra.size();
            for i in 0..n {
                for j in 0..n {
                    let (x1, x2) = (t.pi1[i], t.pi2[i]);
                    let (y1, y2) = (t.pi1[j], t.pi2[j]);
                    let want1 = f.binary("or", x2, f.binary("and", x1, y1)?)?;
                    let want2 = f.binary("or", x2, y2)?;
                    let got = t.algebra.binary("imp", i, j)?;
                    if (t.pi1[got], t.pi2[got]) != (want1, want2) {
                        return Ok(crate::algebra::CheckResult::fail(vec![i, j]));
                    }
                }
            }
            Ok(crate::algebra::CheckResult::ok())
        }
        TwistKind::Ff => {
            // (T & ~x) | (x & y) defines the implication
            let lhs = Term::bin("imp", Term::var(0), Term::var(1));
            let rhs = Term::bin(
                "or",
                Term::bin("and", Term::cnst("top"), Term::un("neg", Term::var(0))),
                Term::bin("and", Term::var(0), Term::var(1)),
            );
            check_equation(&t.algebra, &Equation::new(lhs, rhs))
        }
        k => Err(Error::WrongKind { got: k.name().into(), want: "DF or Ff".into() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::find_isomorphism;
    use crate::families;
    use crate::matrices::{named_matrix, tables};

    #[test]
    fn ol_twist_over_two_element_gba_is_ol3() {
        let b = tables::boolean_2().reduct(&["and", "or", "imp", "one"]).unwrap();
        let t = twist_build(&TwistSpec::new(TwistKind::OL, b)).unwrap();
        assert_eq!(t.algebra.size(), 3);
        assert_eq!(
            t.algebra.labels(),
            &["(0,1)".to_string(), "(1,0)".to_string(), "(1,1)".to_string()]
        );
        let ol3 = named_matrix("OL3").unwrap();
        let iso = find_isomorphism(&t.algebra, ol3.algebra()).unwrap();
        assert!(iso.is_some());
    }

    #[test]
    fn df_twist_over_remark_lattice_has_nine_elements() {
        let l = families::remark_lattice();
        let t = twist_build(&TwistSpec::new(TwistKind::DF, l)).unwrap();
        assert_eq!(t.algebra.size(), 9);
        for lbl in ["(1,1)", "(1,a)", "(1,b)", "(1,0)", "(a,b)", "(b,a)"] {
            assert!(t.algebra.element(lbl).is_ok(), "missing {lbl}");
        }
    }

    #[test]
    fn cnf_twist_over_two_booleans_is_cnf4() {
        let b = tables::boolean_2();
        let spec = TwistSpec::new(TwistKind::CNf, b.clone()).with_factor2(b);
        let t = twist_build(&spec).unwrap();
        assert_eq!(t.algebra.size(), 4);
        let cnf4 = named_matrix("CNf4").unwrap();
        let iso = find_isomorphism(&t.algebra, cnf4.algebra()).unwrap().unwrap();
        // canonical identification: (0,0) is B, (0,1) is 0, (1,0) is 1, (1,1) is T
        assert_eq!(iso.map, vec![1, 0, 3, 2]);
        // the definable top agrees with the constant
        let top = t.algebra.constant("top").unwrap();
        for x in 0..4 {
            let v = t
                .algebra
                .binary(
                    "imp",
                    t.algebra.unary("neg", x).unwrap(),
                    t.algebra.binary("imp", x, x).unwrap(),
                )
                .unwrap();
            assert_eq!(v, top, "-x -> (x -> x) must be top");
        }
    }

    #[test]
    fn remark1_proper_subalgebra_exists() {
        let l = families::remark_lattice();
        let t = twist_build(&TwistSpec::new(TwistKind::DF, l)).unwrap();
        let subs = enumerate_pi1_full_subalgebras(&t, usize::MAX).unwrap();
        let sizes: Vec<usize> = subs.iter().map(|(s, _)| s.algebra.size()).collect();
        assert!(sizes.contains(&7), "expected the 7-element witness, got {sizes:?}");
        assert!(sizes.contains(&9));
        let seven = subs.iter().find(|(s, _)| s.algebra.size() == 7).unwrap();
        assert!(seven.0.algebra.element("(a,b)").is_err());
        assert!(seven.0.algebra.element("(b,a)").is_err());
        assert!(seven.0.is_pi1_full());
    }

    #[test]
    fn two_chain_df_twist_has_only_the_full_subalgebra() {
        let l = families::chain_lattice(2);
        let t = twist_build(&TwistSpec::new(TwistKind::DF, l)).unwrap();
        assert_eq!(t.algebra.size(), 3);
        let subs = enumerate_pi1_full_subalgebras(&t, usize::MAX).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].0.algebra.size(), 3);
        // limit 0 returns nothing
        assert!(enumerate_pi1_full_subalgebras(&t, 0).unwrap().is_empty());
    }

    #[test]
    fn universe_equivalence_examples() {
        let b2 = tables::boolean_2().reduct(&["and", "or", "imp", "one"]).unwrap();
        assert!(check_universe_equivalence(&b2).unwrap().holds);
        let b4 = tables::boolean_2().direct_product(&tables::boolean_2()).unwrap();
        let b4 = b4.reduct(&["and", "or", "imp", "one"]).unwrap();
        assert!(check_universe_equivalence(&b4).unwrap().holds);
        // corrupted implication: B2 where 1 -> 0 is redefined to 1
        let bad = FiniteAlgebra::new(
            "bad",
            vec!["0".into(), "1".into()],
            vec![
                ("and".into(), OpTable::Binary(vec![0, 0, 0, 1])),
                ("or".into(), OpTable::Binary(vec![0, 1, 1, 1])),
                ("imp".into(), OpTable::Binary(vec![1, 1, 1, 1])),
                ("one".into(), OpTable::Const(1)),
            ],
        )
        .unwrap();
        // no longer a generalized Boolean algebra, so the class gate trips
        assert!(check_universe_equivalence(&bad).is_err());
    }

    #[test]
    fn closed_forms_hold_on_small_instances() {
        let t = twist_build(&TwistSpec::new(TwistKind::DF, families::chain_lattice(2))).unwrap();
        assert!(check_closed_forms(&t).unwrap().holds);
        let t = twist_build(&TwistSpec::new(TwistKind::DF, families::remark_lattice())).unwrap();
        assert!(check_closed_forms(&t).unwrap().holds);
        let ff = twist_build(
            &TwistSpec::new(TwistKind::Ff, tables::boolean_2())
                .with_factor2(families::de_morgan_2()),
        )
        .unwrap();
        assert!(check_closed_forms(&ff).unwrap().holds);
        // wrong kind
        let cn = twist_build(&TwistSpec::new(
            TwistKind::CN,
            tables::boolean_2().reduct(&["and", "or", "imp", "one"]).unwrap(),
        ))
        .unwrap();
        assert!(matches!(check_closed_forms(&cn), Err(Error::WrongKind { .. })));
    }

    #[test]
    fn ol_star_conditions_hold_on_ol_twists() {
        // with * the OL conjunction and the Kleene meet recovered from the
        // pair structure: diamond(x * y) = diamond(x & y), and
        // diamond neg(x * y) = (x -> diamond neg y) & (y -> diamond neg x)
        for b in crate::families::generalized_boolean_algebras(4) {
            let t = twist_build(&TwistSpec::new(TwistKind::OL, b)).unwrap();
            let n = t.algebra.size();
            let f = &t.factor1;
            let kmeet = |i: usize, j: usize| {
                let (p, q) = (
                    f.binary("and", t.pi1[i], t.pi1[j]).unwrap(),
                    f.binary("or", t.pi2[i], t.pi2[j]).unwrap(),
                );
                (0..n).find(|&k| (t.pi1[k], t.pi2[k]) == (p, q)).unwrap()
            };
            let one = f.constant("one").unwrap();
            let center = (0..n).find(|&k| (t.pi1[k], t.pi2[k]) == (one, one)).unwrap();
            let dia = |i: usize| kmeet(i, center);
            for x in 0..n {
                for y in 0..n {
                    let star = t.algebra.binary("and", x, y).unwrap();
                    assert_eq!(dia(star), dia(kmeet(x, y)), "{}", t.algebra.name());
                    let lhs = dia(t.algebra.unary("neg", star).unwrap());
                    let dnx = dia(t.algebra.unary("neg", x).unwrap());
                    let dny = dia(t.algebra.unary("neg", y).unwrap());
                    let rhs = kmeet(
                        t.algebra.binary("imp", x, dny).unwrap(),
                        t.algebra.binary("imp", y, dnx).unwrap(),
                    );
                    assert_eq!(lhs, rhs, "{}", t.algebra.name());
                }
            }
        }
    }

    #[test]
    fn definable_constants_in_cng_and_cnf_twists() {
        use crate::algebra::{eval_term, Term};
        for b in crate::families::boolean_algebras(4) {
            let t = twist_build(&TwistSpec::new(TwistKind::CNg, b)).unwrap();
            let top = t.algebra.constant("top").unwrap();
            let bot = t.algebra.constant("bot").unwrap();
            assert_eq!(t.algebra.binary("imp", bot, bot).unwrap(), top);
        }
        for b1 in crate::families::boolean_algebras_with_negation(4) {
            for b2 in crate::families::boolean_algebras_with_negation(4) {
                for rho in crate::algebra::find_embeddings(&b1, &b2).unwrap() {
                    let spec = TwistSpec::new(TwistKind::CNf, b1.clone())
                        .with_factor2(b2.clone())
                        .with_rho(rho);
                    let t = twist_build(&spec).unwrap();
                    let top = t.algebra.constant("top").unwrap();
                    let term = Term::bin(
                        "imp",
                        Term::un("neg", Term::var(0)),
                        Term::bin("imp", Term::var(0), Term::var(0)),
                    );
                    for x in 0..t.algebra.size() {
                        assert_eq!(eval_term(&t.algebra, &term, &[x]).unwrap(), top);
                    }
                }
            }
        }
    }

    #[test]
    fn factor_class_is_enforced() {
        // OL pair over A3 is not even a lattice, so DF must reject it
        let nonlattice =
            tables::three_valued_algebra("np", &[("and", "and_ol"), ("or", "or_ol")])
                .unwrap()
                .with_constants(&[("one", "1")])
                .unwrap();
        let r = twist_build(&TwistSpec::new(TwistKind::DF, nonlattice));
        assert!(matches!(r, Err(Error::FactorClass { .. })));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in ALL_KINDS {
            assert_eq!(k.name().parse::<TwistKind>().unwrap(), k);
        }
        assert!("QQ".parse::<TwistKind>().is_err());
    }
}
