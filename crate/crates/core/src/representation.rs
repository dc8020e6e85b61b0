//! Twist representation, mechanically verified on finite instances.
//!
//! Given a candidate algebra of one of the theorem-mode kinds, extract the
//! factor algebra(s) through the maps `x ↦ x ∧ center` and `x ↦ x ∧ bot`,
//! build the full twist over them, and verify that `a ↦ (◇a, ◇¬a)` (or
//! `(◇a, □¬a)` for the f-kinds) is an isomorphism onto a π₁-full
//! subalgebra. Kinds without a representation theorem run in exploratory
//! mode: a bounded search for any isomorphism onto a π₁-full subalgebra of
//! a twist over small candidate factors.

use serde::Serialize;

use crate::algebra::{
    find_embeddings, find_isomorphism, AlgebraSpec, CheckResult, ElemId, FiniteAlgebra, Morphism,
    OpTable,
};
use crate::classes::classify;
use crate::error::{Error, Result};
use crate::families;
use crate::twist::{enumerate_pi1_full_subalgebras, twist_build, TwistKind, TwistSpec};

/// Image of a carrier under `x ↦ x ∧ center`, with restricted operations.
#[derive(Debug, Clone)]
pub struct Extraction {
    pub algebra: FiniteAlgebra,
    /// Parent element of each image element, ascending.
    pub carrier: Vec<ElemId>,
    /// Parent element -> image index of its projection.
    pub project: Vec<usize>,
    /// Well-definedness of the induced negation, for f-style extractions:
    /// `◇a = ◇b` must force `◇¬a = ◇¬b`.
    pub neg_well_defined: Option<CheckResult>,
    /// Operations present on the parent but dropped because their
    /// restriction escapes the image.
    pub skipped_ops: Vec<String>,
}

fn restricted_image(
    a: &FiniteAlgebra,
    center: ElemId,
    with_neg: bool,
    name: &str,
) -> Result<Extraction> {
    let n = a.size();
    let mut carrier: Vec<ElemId> = (0..n).map(|x| a.binary("and", x, center)).collect::<Result<_>>()?;
    carrier.sort_unstable();
    carrier.dedup();
    let mut pos = vec![usize::MAX; n];
    for (i, &x) in carrier.iter().enumerate() {
        pos[x] = i;
    }
    let project: Vec<usize> = (0..n)
        .map(|x| pos[a.binary("and", x, center).unwrap()])
        .collect();

    let mut ops: Vec<(String, OpTable)> = Vec::new();
    let mut skipped = Vec::new();
    for op in ["and", "or", "imp"] {
        if !a.has_op(op) {
            continue;
        }
        let mut table = Vec::with_capacity(carrier.len() * carrier.len());
        let mut closed = true;
        'rows: for &x in &carrier {
            for &y in &carrier {
                let r = a.binary(op, x, y)?;
                if pos[r] == usize::MAX {
                    closed = false;
                    break 'rows;
                }
                table.push(pos[r]);
            }
        }
        if closed {
            ops.push((op.to_string(), OpTable::Binary(table)));
        } else {
            skipped.push(op.to_string());
        }
    }
    if a.has_op("zero") {
        let z = a.constant("zero")?;
        if pos[z] != usize::MAX {
            ops.push(("zero".into(), OpTable::Const(pos[z])));
        } else {
            skipped.push("zero".into());
        }
    }
    // The center projects to the top of the image.
    ops.push(("one".into(), OpTable::Const(project[center])));

    let mut neg_well_defined = None;
    if with_neg {
        // induced negation: neg(proj x) := proj(neg x)
        let mut verdict = CheckResult::ok();
        let mut table = vec![usize::MAX; carrier.len()];
        for x in 0..n {
            let img = project[x];
            let v = project[a.unary("neg", x)?];
            if table[img] == usize::MAX {
                table[img] = v;
            } else if table[img] != v && verdict.holds {
                // find the earlier witness with the same projection
                let y = (0..x).find(|&y| project[y] == img).unwrap_or(x);
                verdict = CheckResult::fail(vec![y, x]).named("neg-well-defined");
            }
        }
        ops.push(("neg".into(), OpTable::Unary(table)));
        neg_well_defined = Some(verdict);
    }

    let labels = carrier.iter().map(|&x| a.label(x).to_string()).collect();
    let algebra = FiniteAlgebra::new(format!("{}({})", name, a.name()), labels, ops)?;
    Ok(Extraction { algebra, carrier, project, neg_well_defined, skipped_ops: skipped })
}

/// `{x ∧ center}` with the lattice operations (and the implication, when it
/// restricts) cut down to the image; the center becomes the top. With
/// `with_neg`, the f-style induced negation is added and its
/// well-definedness reported.
pub fn diamond_image(a: &FiniteAlgebra, center: &str, with_neg: bool) -> Result<Extraction> {
    let c = a.constant(center)?;
    restricted_image(a, c, with_neg, "diamond")
}

/// `{x ∧ ⊥}` with lattice operations and the induced negation; `⊥` is the
/// `bot` constant when present, else `¬top`. The box factor carries no
/// implication.
pub fn box_image(a: &FiniteAlgebra) -> Result<Extraction> {
    let bot = bot_element(a)?;
    let mut ext = restricted_image(a, bot, true, "box")?;
    if ext.algebra.has_op("imp") {
        let kept: Vec<String> =
            ext.algebra.op_names().filter(|&op| op != "imp").map(String::from).collect();
        let names: Vec<&str> = kept.iter().map(String::as_str).collect();
        ext.algebra = ext.algebra.reduct(&names)?;
    }
    Ok(ext)
}

fn bot_element(a: &FiniteAlgebra) -> Result<ElemId> {
    if a.has_op("bot") {
        return a.constant("bot");
    }
    let top = a.constant("top").map_err(|_| Error::MissingConstant {
        kind: "box-image".into(),
        constant: "bot (or top)".into(),
    })?;
    a.unary("neg", top)
}

/// One verified step of a representation report.
#[derive(Debug, Clone, Serialize)]
pub struct StepVerdict {
    pub ok: bool,
    pub detail: String,
}

impl StepVerdict {
    fn ok() -> StepVerdict {
        StepVerdict { ok: true, detail: "ok".into() }
    }

    fn fail(detail: impl Into<String>) -> StepVerdict {
        StepVerdict { ok: false, detail: detail.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RepresentationMode {
    Theorem,
    Exploratory,
}

/// Outcome of [`verify_representation`]. `overall` is the conjunction of
/// every verdict; failing verdicts carry witnesses in their detail.
#[derive(Debug, Clone)]
pub struct RepresentationReport {
    pub kind: TwistKind,
    pub mode: RepresentationMode,
    pub factor1: Option<FiniteAlgebra>,
    pub factor2: Option<FiniteAlgebra>,
    pub factor_class_ok: Vec<(String, StepVerdict)>,
    pub well_defined_negations: Option<StepVerdict>,
    pub iota: Option<Morphism>,
    pub universe_ok: Option<StepVerdict>,
    pub injective: Option<StepVerdict>,
    /// Per-operation preservation verdicts, in signature order.
    pub homomorphic: Vec<(String, StepVerdict)>,
    pub image_subalgebra: Option<FiniteAlgebra>,
    pub image_closed: Option<StepVerdict>,
    pub pi1_full: Option<StepVerdict>,
    pub overall: bool,
    pub notes: Vec<String>,
}

impl RepresentationReport {
    fn blank(kind: TwistKind, mode: RepresentationMode) -> RepresentationReport {
        RepresentationReport {
            kind,
            mode,
            factor1: None,
            factor2: None,
            factor_class_ok: Vec::new(),
            well_defined_negations: None,
            iota: None,
            universe_ok: None,
            injective: None,
            homomorphic: Vec::new(),
            image_subalgebra: None,
            image_closed: None,
            pi1_full: None,
            overall: false,
            notes: Vec::new(),
        }
    }

    fn settle(mut self) -> RepresentationReport {
        let steps_ok = self.factor_class_ok.iter().all(|(_, v)| v.ok)
            && self.well_defined_negations.as_ref().map_or(true, |v| v.ok)
            && self.universe_ok.as_ref().map_or(false, |v| v.ok)
            && self.injective.as_ref().map_or(false, |v| v.ok)
            && !self.homomorphic.is_empty()
            && self.homomorphic.iter().all(|(_, v)| v.ok)
            && self.image_closed.as_ref().map_or(false, |v| v.ok)
            && self.pi1_full.as_ref().map_or(false, |v| v.ok);
        self.overall = steps_ok && self.iota.is_some();
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        let alg = |a: &Option<FiniteAlgebra>| {
            a.as_ref().map(|a| serde_json::to_value(AlgebraSpec::from_algebra(a)).unwrap())
        };
        serde_json::json!({
            "kind": self.kind.name(),
            "mode": self.mode,
            "factor1": alg(&self.factor1),
            "factor2": alg(&self.factor2),
            "factor_class_ok": self.factor_class_ok,
            "well_defined_negations": self.well_defined_negations,
            "iota": self.iota,
            "universe_ok": self.universe_ok,
            "injective": self.injective,
            "homomorphic": self.homomorphic,
            "image_subalgebra": alg(&self.image_subalgebra),
            "image_closed": self.image_closed,
            "pi1_full": self.pi1_full,
            "overall": self.overall,
            "notes": self.notes,
        })
    }

    pub fn summary(&self) -> String {
        let mut lines = vec![format!(
            "{} representation ({:?} mode): {}",
            self.kind.name(),
            self.mode,
            if self.overall { "OK" } else { "FAILED" }
        )];
        for (what, v) in &self.factor_class_ok {
            lines.push(format!("  factor class {what}: {}", v.detail));
        }
        if let Some(v) = &self.well_defined_negations {
            lines.push(format!("  induced negations well-defined: {}", v.detail));
        }
        if let Some(v) = &self.universe_ok {
            lines.push(format!("  iota lands in the universe: {}", v.detail));
        }
        if let Some(v) = &self.injective {
            lines.push(format!("  iota injective: {}", v.detail));
        }
        for (op, v) in &self.homomorphic {
            lines.push(format!("  preserves `{op}`: {}", v.detail));
        }
        if let Some(v) = &self.image_closed {
            lines.push(format!("  image is a subuniverse: {}", v.detail));
        }
        if let Some(v) = &self.pi1_full {
            lines.push(format!("  image is pi1-full: {}", v.detail));
        }
        for n in &self.notes {
            lines.push(format!("  note: {n}"));
        }
        lines.join("\n")
    }
}

fn center_constant(kind: TwistKind) -> &'static str {
    use TwistKind::*;
    match kind {
        DF | CN | F => "half",
        _ => "top",
    }
}

/// Builds the factor(s), the canonical map and the full twist, then checks
/// each step of the corresponding representation theorem. Kinds without a
/// theorem run an exploratory search instead.
pub fn verify_representation(a: &FiniteAlgebra, kind: TwistKind) -> Result<RepresentationReport> {
    if kind.is_theorem_mode() {
        verify_theorem(a, kind)
    } else {
        explore(a, kind)
    }
}

fn verify_theorem(a: &FiniteAlgebra, kind: TwistKind) -> Result<RepresentationReport> {
    let mut rep = RepresentationReport::blank(kind, RepresentationMode::Theorem);
    let center = center_constant(kind);
    if !a.has_op(center) {
        return Err(Error::MissingConstant { kind: kind.name().into(), constant: center.into() });
    }
    let f_kind = kind.is_f_kind();

    let ext1 = diamond_image(a, center, f_kind)?;
    let ext2 = if f_kind { Some(box_image(a)?) } else { None };

    for op in &ext1.skipped_ops {
        rep.notes.push(format!("diamond image not closed under `{op}`"));
    }

    // Factor classes.
    let class1 = kind.factor1_class();
    let verdict = match classify(&ext1.algebra, class1) {
        Ok(r) if r.holds => StepVerdict::ok(),
        Ok(r) => StepVerdict::fail(r.describe(&ext1.algebra)),
        Err(e) => StepVerdict::fail(e.to_string()),
    };
    rep.factor_class_ok.push((format!("diamond: {}", class1.name()), verdict));
    if let (Some(ext2), Some(class2)) = (&ext2, kind.factor2_class()) {
        let verdict = match classify(&ext2.algebra, class2) {
            Ok(r) if r.holds => StepVerdict::ok(),
            Ok(r) => StepVerdict::fail(r.describe(&ext2.algebra)),
            Err(e) => StepVerdict::fail(e.to_string()),
        };
        rep.factor_class_ok.push((format!("box: {}", class2.name()), verdict));
    }

    if f_kind {
        let mut vd = StepVerdict::ok();
        for (name, ext) in [("diamond", Some(&ext1)), ("box", ext2.as_ref())] {
            if let Some(Some(r)) = ext.map(|e| e.neg_well_defined.as_ref()) {
                if !r.holds {
                    let w = r.counterexample.as_ref().unwrap();
                    vd = StepVerdict::fail(format!(
                        "{name}: elements {} and {} project equally but their negations do not",
                        a.label(w[0]),
                        a.label(w[1])
                    ));
                }
            }
        }
        rep.well_defined_negations = Some(vd);
    }

    rep.factor1 = Some(ext1.algebra.clone());
    rep.factor2 = ext2.as_ref().map(|e| e.algebra.clone());

    if rep.factor_class_ok.iter().any(|(_, v)| !v.ok) {
        return Ok(rep.settle());
    }

    // Full twist over the extracted factor(s).
    let mut spec = TwistSpec::new(kind, ext1.algebra.clone());
    if let Some(ext2) = &ext2 {
        spec = spec.with_factor2(ext2.algebra.clone());
    }
    let twist = match twist_build(&spec) {
        Ok(t) => t,
        Err(e) => {
            rep.notes.push(format!("twist construction failed: {e}"));
            return Ok(rep.settle());
        }
    };

    // iota(a) = (proj1 a, proj2(neg a)).
    let proj2 = |x: ElemId| -> Result<usize> {
        let nx = a.unary("neg", x)?;
        Ok(match &ext2 {
            Some(ext2) => ext2.project[nx],
            None => ext1.project[nx],
        })
    };
    let mut pair_index = std::collections::BTreeMap::new();
    for i in 0..twist.algebra.size() {
        pair_index.insert((twist.pi1[i], twist.pi2[i]), i);
    }
    let mut iota: Vec<ElemId> = Vec::with_capacity(a.size());
    let mut universe = StepVerdict::ok();
    for x in 0..a.size() {
        let key = (ext1.project[x], proj2(x)?);
        match pair_index.get(&key) {
            Some(&i) => iota.push(i),
            None => {
                universe = StepVerdict::fail(format!(
                    "iota({}) = ({}, {}) violates the universe condition",
                    a.label(x),
                    ext1.algebra.label(key.0),
                    match &ext2 {
                        Some(e) => e.algebra.label(key.1).to_string(),
                        None => ext1.algebra.label(key.1).to_string(),
                    }
                ));
                break;
            }
        }
    }
    rep.universe_ok = Some(universe.clone());
    if !universe.ok {
        return Ok(rep.settle());
    }

    let iota = Morphism {
        source: a.name().to_string(),
        target: twist.algebra.name().to_string(),
        map: iota,
    };

    // Injectivity.
    rep.injective = Some(match first_collision(&iota.map) {
        None => StepVerdict::ok(),
        Some((x, y)) => StepVerdict::fail(format!(
            "iota({}) = iota({})",
            a.label(x),
            a.label(y)
        )),
    });

    // Per-operation preservation, in signature order.
    for (op, arity) in a.signature().map(|(n, k)| (n.to_string(), k)).collect::<Vec<_>>() {
        let verdict = check_preserves(a, &twist.algebra, &iota.map, &op, arity);
        rep.homomorphic.push((op, verdict));
    }

    // Image is a pi1-full subuniverse of the twist.
    let mut mask: u128 = 0;
    for &i in &iota.map {
        mask |= 1 << i;
    }
    let closed = twist.algebra.closure_mask(mask)?;
    rep.image_closed = Some(if closed == mask {
        StepVerdict::ok()
    } else {
        StepVerdict::fail("image is not closed under the twist operations")
    });
    let mut seen = vec![false; twist.factor1.size()];
    for &i in &iota.map {
        seen[twist.pi1[i]] = true;
    }
    rep.pi1_full = Some(if seen.iter().all(|&s| s) {
        StepVerdict::ok()
    } else {
        StepVerdict::fail("first projection of the image misses factor elements")
    });

    if closed == mask {
        let (sub, _) = twist.algebra.subalgebra(mask, format!("iota[{}]", a.name()))?;
        rep.image_subalgebra = Some(sub);
    }
    rep.iota = Some(iota);
    Ok(rep.settle())
}

fn first_collision(map: &[ElemId]) -> Option<(usize, usize)> {
    for x in 0..map.len() {
        for y in x + 1..map.len() {
            if map[x] == map[y] {
                return Some((x, y));
            }
        }
    }
    None
}

fn check_preserves(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    map: &[ElemId],
    op: &str,
    arity: usize,
) -> StepVerdict {
    let Ok(tb) = b.table(op) else {
        return StepVerdict::fail(format!("twist has no operation `{op}`"));
    };
    if tb.arity() != arity {
        return StepVerdict::fail(format!("arity mismatch on `{op}`"));
    }
    match arity {
        0 => {
            let ca = a.constant(op).unwrap();
            let cb = b.constant(op).unwrap();
            if map[ca] == cb {
                StepVerdict::ok()
            } else {
                StepVerdict::fail(format!("iota({op}) is not the twist constant"))
            }
        }
        1 => {
            for x in 0..a.size() {
                let lhs = map[a.unary(op, x).unwrap()];
                let rhs = b.unary(op, map[x]).unwrap();
                if lhs != rhs {
                    return StepVerdict::fail(format!("at {}", a.label(x)));
                }
            }
            StepVerdict::ok()
        }
        _ => {
            for x in 0..a.size() {
                for y in 0..a.size() {
                    let lhs = map[a.binary(op, x, y).unwrap()];
                    let rhs = b.binary(op, map[x], map[y]).unwrap();
                    if lhs != rhs {
                        return StepVerdict::fail(format!(
                            "at ({}, {})",
                            a.label(x),
                            a.label(y)
                        ));
                    }
                }
            }
            StepVerdict::ok()
        }
    }
}

// ---------------------------------------------------------------------------
// Exploratory mode
// ---------------------------------------------------------------------------

/// Candidate factor specs of the kind, all factor sizes at most `max_size`.
pub fn candidate_specs(kind: TwistKind, max_size: usize) -> Vec<TwistSpec> {
    use TwistKind::*;
    match kind {
        OL | CN | F => families::generalized_boolean_algebras(max_size)
            .into_iter()
            .map(|f| TwistSpec::new(kind, f))
            .collect(),
        DF => families::upper_bounded_distributive_lattices(max_size)
            .into_iter()
            .map(|f| TwistSpec::new(kind, f))
            .collect(),
        DFg => families::bounded_distributive_lattices(max_size)
            .into_iter()
            .map(|f| TwistSpec::new(kind, f))
            .collect(),
        OLg | CNg | Fg => families::boolean_algebras(max_size)
            .into_iter()
            .map(|f| TwistSpec::new(kind, f))
            .collect(),
        OLf => families::boolean_algebras_with_negation(max_size)
            .into_iter()
            .map(|f| TwistSpec::new(kind, f))
            .collect(),
        DFf => {
            let dms = families::de_morgan_algebras(max_size);
            let mut out = Vec::new();
            for d1 in &dms {
                for d2 in &dms {
                    // a degenerate second factor under a nontrivial first
                    // collapses top onto 1, leaving the class
                    if d2.size() == 1 && d1.size() > 1 {
                        continue;
                    }
                    out.push(TwistSpec::new(kind, d1.clone()).with_factor2(d2.clone()));
                }
            }
            out
        }
        CNf => {
            let bs = families::boolean_algebras_with_negation(max_size);
            let mut out = Vec::new();
            for b1 in &bs {
                for b2 in &bs {
                    for rho in find_embeddings(b1, b2).unwrap_or_default() {
                        out.push(
                            TwistSpec::new(kind, b1.clone())
                                .with_factor2(b2.clone())
                                .with_rho(rho),
                        );
                    }
                }
            }
            out
        }
        Ff => {
            let bs = families::boolean_algebras_with_negation(max_size);
            let dms = families::de_morgan_algebras(max_size);
            let mut out = Vec::new();
            for b in &bs {
                for d in &dms {
                    if d.size() == 1 && b.size() > 1 {
                        continue;
                    }
                    out.push(TwistSpec::new(kind, b.clone()).with_factor2(d.clone()));
                }
            }
            out
        }
    }
}

/// Searches twists over candidate factors of size at most 4 for a π₁-full
/// subalgebra isomorphic to `a` (in `a`'s signature). Used for the kinds
/// whose representation is open.
fn explore(a: &FiniteAlgebra, kind: TwistKind) -> Result<RepresentationReport> {
    let mut rep = RepresentationReport::blank(kind, RepresentationMode::Exploratory);
    let a_ops: Vec<&str> = a.op_names().collect();
    let mut tried = 0usize;
    for spec in candidate_specs(kind, 4) {
        let Ok(twist) = twist_build(&spec) else { continue };
        tried += 1;
        if twist.algebra.size() < a.size() {
            continue;
        }
        if a_ops.iter().any(|op| !twist.algebra.has_op(op)) {
            continue;
        }
        let reduct = twist.algebra.reduct(&a_ops)?;
        for (sub, incl) in enumerate_pi1_full_subalgebras(&twist, usize::MAX)? {
            if sub.algebra.size() != a.size() {
                continue;
            }
            let sub_reduct = reduct_via(&reduct, &incl)?;
            if let Some(iso) = find_isomorphism(a, &sub_reduct)? {
                rep.factor1 = Some(spec.factor1.clone());
                rep.factor2 = spec.factor2.clone();
                rep.universe_ok = Some(StepVerdict::ok());
                rep.injective = Some(StepVerdict::ok());
                for (op, _) in a.signature() {
                    rep.homomorphic.push((op.to_string(), StepVerdict::ok()));
                }
                rep.image_closed = Some(StepVerdict::ok());
                rep.pi1_full = Some(StepVerdict::ok());
                rep.image_subalgebra = Some(sub.algebra.clone());
                rep.iota = Some(Morphism {
                    source: a.name().to_string(),
                    target: sub.algebra.name().to_string(),
                    map: iso.map,
                });
                rep.notes.push(format!(
                    "witness over factor(s) {}",
                    match &spec.factor2 {
                        Some(f2) => format!("{}, {}", spec.factor1.name(), f2.name()),
                        None => spec.factor1.name().to_string(),
                    }
                ));
                return Ok(rep.settle());
            }
        }
    }
    rep.notes.push(format!(
        "exhausted {tried} candidate factor decompositions of size <= 4 without a witness"
    ));
    Ok(rep)
}

fn reduct_via(parent_reduct: &FiniteAlgebra, incl: &Morphism) -> Result<FiniteAlgebra> {
    let mut mask: u128 = 0;
    for &i in &incl.map {
        mask |= 1 << i;
    }
    let (sub, _) = parent_reduct.subalgebra(mask, "sub")?;
    Ok(sub)
}

// ---------------------------------------------------------------------------
// Round trips
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct RoundtripReport {
    pub representation: RepresentationReport,
    pub factor_recovered: StepVerdict,
    pub overall: bool,
}

/// Builds the twist, runs the representation verifier on the result, and
/// checks that the extracted first factor is isomorphic to the input
/// factor. Theorem-mode kinds only.
pub fn roundtrip_check(spec: &TwistSpec) -> Result<RoundtripReport> {
    if !spec.kind.is_theorem_mode() {
        return Err(Error::WrongKind {
            got: spec.kind.name().into(),
            want: "a theorem-mode kind (DF, CN, F, DFg, CNg, Fg, DFf, Ff)".into(),
        });
    }
    let twist = twist_build(spec)?;
    let representation = verify_representation(&twist.algebra, spec.kind)?;
    let factor_recovered = match &representation.factor1 {
        None => StepVerdict::fail("no factor extracted"),
        Some(extracted) => {
            let wanted: Vec<&str> = spec.factor1.op_names().collect();
            match extracted.reduct(&wanted) {
                Err(e) => StepVerdict::fail(format!("extracted factor lacks operations: {e}")),
                Ok(reduct) => match find_isomorphism(&spec.factor1, &reduct)? {
                    Some(_) => StepVerdict::ok(),
                    None => StepVerdict::fail(
                        "extracted factor is not isomorphic to the input factor",
                    ),
                },
            }
        }
    };
    let overall = representation.overall && factor_recovered.ok;
    Ok(RoundtripReport { representation, factor_recovered, overall })
}
