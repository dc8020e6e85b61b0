//! Exact connective definability on a finite matrix via closure of the
//! binary clone fragment: start from the two projections (plus basis
//! constants lifted to binary tables) and close under composition with the
//! basis connectives. On a finite carrier this decides definability
//! outright whenever the closure completes under the table cap.
//!
//! The closure is breadth-first by term depth, so every stored witness has
//! least depth; ties within a depth are broken by a fixed structural order
//! (basis position, then operand discovery ranks), which keeps witness
//! selection deterministic without materializing candidate terms. Tables
//! are packed into `u128` words (carriers of up to six elements), and
//! witnesses are kept as composition records, reconstructed into terms on
//! demand.

use std::collections::HashMap;

use crate::algebra::{eval_term, FiniteAlgebra, OpTable, Term};
use crate::error::{Error, Result};
use crate::matrices::LogicalMatrix;

/// A binary operation table on an `n`-element carrier, row-major.
pub type BinTable = Vec<u8>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Witness {
    Projection(usize),
    Constant(usize),     // basis index
    Unary(usize, usize), // basis index, operand entry
    Binary(usize, usize, usize),
}

/// The binary fragment of the clone generated by `basis`.
#[derive(Debug, Clone)]
pub struct CloneFragment {
    pub matrix: String,
    pub basis: Vec<String>,
    /// False when the closure stopped at the cap instead of a fixpoint.
    pub closed: bool,
    pub size_cap: usize,
    /// Number of completed breadth-first rounds; every table whose minimal
    /// term depth is at most this value is present, even if the cap was hit
    /// later.
    pub rounds_completed: usize,
    n: usize,
    bits: u32,
    packed: Vec<u128>,
    depths: Vec<u32>,
    witnesses: Vec<Witness>,
    index: HashMap<u128, usize>,
}

impl CloneFragment {
    pub fn len(&self) -> usize {
        self.packed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.packed.is_empty()
    }

    pub fn contains(&self, table: &[u8]) -> Option<usize> {
        if table.len() != self.n * self.n {
            return None;
        }
        self.index.get(&pack_table(table, self.bits)).copied()
    }

    pub fn table(&self, idx: usize) -> BinTable {
        unpack_table(self.packed[idx], self.n, self.bits)
    }

    /// Minimal term depth of the entry's witness.
    pub fn depth(&self, idx: usize) -> usize {
        self.depths[idx] as usize
    }

    /// Reconstructs the witness term for an entry.
    pub fn witness(&self, idx: usize) -> Term {
        match self.witnesses[idx] {
            Witness::Projection(v) => Term::var(v),
            Witness::Constant(b) => Term::cnst(&self.basis[b]),
            Witness::Unary(b, g) => Term::un(&self.basis[b], self.witness(g)),
            Witness::Binary(b, g, h) => {
                Term::bin(&self.basis[b], self.witness(g), self.witness(h))
            }
        }
    }

    /// Entry indices whose minimal witness depth is at most `d`.
    pub fn entries_up_to_depth(&self, d: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.depths[i] as usize <= d).collect()
    }
}

fn pack_table(table: &[u8], bits: u32) -> u128 {
    let mut out: u128 = 0;
    for (c, &v) in table.iter().enumerate() {
        out |= (v as u128) << (c as u32 * bits);
    }
    out
}

fn unpack_table(packed: u128, n: usize, bits: u32) -> BinTable {
    let mask = (1u128 << bits) - 1;
    (0..n * n).map(|c| ((packed >> (c as u32 * bits)) & mask) as u8).collect()
}

/// Tabulates a term of at most two variables as a binary table.
pub fn term_table(a: &FiniteAlgebra, term: &Term) -> Result<BinTable> {
    if term.max_var().map_or(false, |v| v > 1) {
        return Err(Error::TooManyVariables(term.max_var().unwrap() + 1));
    }
    let n = a.size();
    let mut out = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            out.push(eval_term(a, term, &[x, y])? as u8);
        }
    }
    Ok(out)
}

/// Binary table of a named connective: binary ops verbatim, unary ops as
/// `f(x)` (second argument ignored), constants as constant tables.
pub fn connective_as_binary_table(a: &FiniteAlgebra, name: &str) -> Result<BinTable> {
    let n = a.size();
    Ok(match a.table(name)? {
        OpTable::Const(c) => vec![*c as u8; n * n],
        OpTable::Unary(t) => {
            let mut out = Vec::with_capacity(n * n);
            for x in 0..n {
                out.extend(std::iter::repeat(t[x] as u8).take(n));
            }
            out
        }
        OpTable::Binary(t) => t.iter().map(|&v| v as u8).collect(),
    })
}

/// Exhaustive comparison of a term's table against a target connective.
pub fn check_definition(
    m: &LogicalMatrix,
    term: &Term,
    target: &str,
) -> Result<crate::algebra::CheckResult> {
    let a = m.algebra();
    let target_arity = a.table(target)?.arity();
    if target_arity > 2 {
        return Err(Error::ArityMismatch { op: target.into(), expected: 2, given: target_arity });
    }
    let got = term_table(a, term)?;
    let want = connective_as_binary_table(a, target)?;
    let n = a.size();
    for x in 0..n {
        for y in 0..n {
            if got[x * n + y] != want[x * n + y] {
                return Ok(crate::algebra::CheckResult::fail(vec![x, y]));
            }
        }
    }
    Ok(crate::algebra::CheckResult::ok())
}

// Composition machinery on packed tables. For two-bit cells (carriers of at
// most four elements) whole bytes (four cells) are composed through a fused
// 64K lookup table; larger carriers fall back to per-cell extraction.
enum Composer {
    // valid masks off the padding bits of the last byte, which the fused
    // lookup would otherwise fill with junk derived from nonexistent cells
    Bytewise { fused: Vec<u8>, bytes: usize, valid: u128 },
    Cellwise { table: Vec<u8>, n: usize, bits: u32, cells: usize },
}

fn valid_mask(cells: usize, bits: u32) -> u128 {
    let width = cells as u32 * bits;
    if width == 128 {
        u128::MAX
    } else {
        (1u128 << width) - 1
    }
}

impl Composer {
    fn new(op: &[usize], n: usize, bits: u32, cells: usize) -> Composer {
        if bits == 2 {
            // fused[g_byte | h_byte << 8]: four cells at once
            let mut fused = vec![0u8; 1 << 16];
            for g in 0..256usize {
                for h in 0..256usize {
                    let mut out = 0u8;
                    for c in 0..4 {
                        let gv = (g >> (2 * c)) & 3;
                        let hv = (h >> (2 * c)) & 3;
                        let fv = if gv < n && hv < n { op[gv * n + hv] as u8 } else { 0 };
                        out |= fv << (2 * c);
                    }
                    fused[g | h << 8] = out;
                }
            }
            Composer::Bytewise {
                fused,
                bytes: (cells * 2 + 7) / 8,
                valid: valid_mask(cells, bits),
            }
        } else {
            Composer::Cellwise { table: op.iter().map(|&v| v as u8).collect(), n, bits, cells }
        }
    }

    #[inline]
    fn apply(&self, g: u128, h: u128) -> u128 {
        match self {
            Composer::Bytewise { fused, bytes, valid } => {
                let mut out: u128 = 0;
                for b in 0..*bytes {
                    let gb = (g >> (8 * b)) as usize & 0xff;
                    let hb = (h >> (8 * b)) as usize & 0xff;
                    out |= (fused[gb | hb << 8] as u128) << (8 * b);
                }
                out & valid
            }
            Composer::Cellwise { table, n, bits, cells } => {
                let mask = (1u128 << bits) - 1;
                let mut out: u128 = 0;
                for c in 0..*cells {
                    let shift = *bits * c as u32;
                    let gv = ((g >> shift) & mask) as usize;
                    let hv = ((h >> shift) & mask) as usize;
                    out |= (table[gv * n + hv] as u128) << shift;
                }
                out
            }
        }
    }
}

enum UnaryComposer {
    Bytewise { lut: Vec<u8>, bytes: usize, valid: u128 },
    Cellwise { table: Vec<u8>, bits: u32, cells: usize },
}

impl UnaryComposer {
    fn new(op: &[usize], n: usize, bits: u32, cells: usize) -> UnaryComposer {
        if bits == 2 {
            let mut lut = vec![0u8; 256];
            for g in 0..256usize {
                let mut out = 0u8;
                for c in 0..4 {
                    let gv = (g >> (2 * c)) & 3;
                    let fv = if gv < n { op[gv] as u8 } else { 0 };
                    out |= fv << (2 * c);
                }
                lut[g] = out;
            }
            UnaryComposer::Bytewise {
                lut,
                bytes: (cells * 2 + 7) / 8,
                valid: valid_mask(cells, bits),
            }
        } else {
            UnaryComposer::Cellwise { table: op.iter().map(|&v| v as u8).collect(), bits, cells }
        }
    }

    #[inline]
    fn apply(&self, g: u128) -> u128 {
        match self {
            UnaryComposer::Bytewise { lut, bytes, valid } => {
                let mut out: u128 = 0;
                for b in 0..*bytes {
                    let gb = (g >> (8 * b)) as usize & 0xff;
                    out |= (lut[gb] as u128) << (8 * b);
                }
                out & valid
            }
            UnaryComposer::Cellwise { table, bits, cells } => {
                let mask = (1u128 << bits) - 1;
                let mut out: u128 = 0;
                for c in 0..*cells {
                    let shift = *bits * c as u32;
                    out |= (table[((g >> shift) & mask) as usize] as u128) << shift;
                }
                out
            }
        }
    }
}

/// Fixpoint closure of the binary fragment under the basis, breadth-first
/// by depth; stops closed, or at `cap` tables with `closed = false`.
pub fn binary_clone(m: &LogicalMatrix, basis: &[String], cap: usize) -> Result<CloneFragment> {
    closure(m, basis, cap, None)
}

/// Closure that additionally stops as soon as `stop_at` is derived. The
/// breadth-first rounds make the found witness depth-minimal even when the
/// closure is far from complete.
fn closure(
    m: &LogicalMatrix,
    basis: &[String],
    cap: usize,
    stop_at: Option<u128>,
) -> Result<CloneFragment> {
    let a = m.algebra();
    let n = a.size();
    let bits: u32 = if n <= 4 { 2 } else { 3 };
    let cells = n * n;
    if cells as u32 * bits > 128 {
        return Err(Error::CarrierTooLarge(n));
    }

    let mut unary_ops: Vec<(usize, UnaryComposer)> = Vec::new();
    let mut binary_ops: Vec<(usize, Composer)> = Vec::new();
    let mut constants: Vec<(usize, usize)> = Vec::new();
    for (bi, name) in basis.iter().enumerate() {
        match a.table(name)? {
            OpTable::Const(c) => constants.push((bi, *c)),
            OpTable::Unary(t) => unary_ops.push((bi, UnaryComposer::new(t, n, bits, cells))),
            OpTable::Binary(t) => binary_ops.push((bi, Composer::new(t, n, bits, cells))),
        }
    }

    let mut clone = CloneFragment {
        matrix: m.name().to_string(),
        basis: basis.to_vec(),
        closed: false,
        size_cap: cap,
        rounds_completed: 0,
        n,
        bits,
        packed: Vec::new(),
        depths: Vec::new(),
        witnesses: Vec::new(),
        index: HashMap::new(),
    };

    let push = |clone: &mut CloneFragment, packed: u128, depth: u32, w: Witness| {
        if let std::collections::hash_map::Entry::Vacant(e) = clone.index.entry(packed) {
            e.insert(clone.packed.len());
            clone.packed.push(packed);
            clone.depths.push(depth);
            clone.witnesses.push(w);
        }
    };

    // Depth-0 entries: projections, then lifted basis constants.
    let mut proj_x = vec![0u8; cells];
    let mut proj_y = vec![0u8; cells];
    for x in 0..n {
        for y in 0..n {
            proj_x[x * n + y] = x as u8;
            proj_y[x * n + y] = y as u8;
        }
    }
    push(&mut clone, pack_table(&proj_x, bits), 0, Witness::Projection(0));
    push(&mut clone, pack_table(&proj_y, bits), 0, Witness::Projection(1));
    for &(bi, c) in &constants {
        let t = vec![c as u8; cells];
        push(&mut clone, pack_table(&t, bits), 0, Witness::Constant(bi));
    }
    if stop_at.is_some_and(|t| clone.index.contains_key(&t)) {
        return Ok(clone);
    }

    let mut frontier_start = 0usize;
    let mut depth: u32 = 0;
    loop {
        let frontier_end = clone.packed.len();
        if frontier_start == frontier_end {
            clone.closed = true;
            break;
        }
        if stop_at.is_some_and(|t| clone.index.contains_key(&t)) {
            break;
        }
        depth += 1;
        // Candidate tables of this round, each with its structurally least
        // derivation (basis position, then operand ranks). Generation stops
        // as soon as the round cannot be committed within the cap anyway.
        let mut round: HashMap<u128, Witness> = HashMap::new();
        let mut truncated = false;
        let offer = |round: &mut HashMap<u128, Witness>, out: u128, w: Witness| -> bool {
            round
                .entry(out)
                .and_modify(|old| {
                    if witness_key(&w) < witness_key(old) {
                        *old = w;
                    }
                })
                .or_insert(w);
            frontier_end + round.len() > cap
        };
        let mut found_target = false;
        'generate: {
            for &(bi, ref comp) in &unary_ops {
                for g in frontier_start..frontier_end {
                    let out = comp.apply(clone.packed[g]);
                    if clone.index.contains_key(&out) {
                        continue;
                    }
                    if stop_at == Some(out) {
                        round.entry(out).or_insert(Witness::Unary(bi, g));
                        found_target = true;
                        break 'generate;
                    }
                    if offer(&mut round, out, Witness::Unary(bi, g)) {
                        truncated = true;
                        break 'generate;
                    }
                }
            }
            for &(bi, ref comp) in &binary_ops {
                for g in 0..frontier_end {
                    let h_lo = if g >= frontier_start { 0 } else { frontier_start };
                    let pg = clone.packed[g];
                    for h in h_lo..frontier_end {
                        let out = comp.apply(pg, clone.packed[h]);
                        if clone.index.contains_key(&out) {
                            continue;
                        }
                        if stop_at == Some(out) {
                            round.entry(out).or_insert(Witness::Binary(bi, g, h));
                            found_target = true;
                            break 'generate;
                        }
                        if offer(&mut round, out, Witness::Binary(bi, g, h)) {
                            truncated = true;
                            break 'generate;
                        }
                    }
                }
            }
        }
        if found_target {
            // commit just the target; the closure is left incomplete
            let (packed, w) = round
                .into_iter()
                .find(|(t, _)| Some(*t) == stop_at)
                .expect("target recorded");
            push(&mut clone, packed, depth, w);
            break;
        }
        let mut fresh: Vec<(u128, Witness)> = round.into_iter().collect();
        fresh.sort_by_key(|(t, w)| (witness_key(w), *t));
        frontier_start = frontier_end;
        for (packed, w) in fresh {
            if clone.packed.len() >= cap {
                truncated = true;
                break;
            }
            push(&mut clone, packed, depth, w);
        }
        if truncated {
            break;
        }
        clone.rounds_completed = depth as usize;
    }
    Ok(clone)
}

fn witness_key(w: &Witness) -> (usize, usize, usize, usize) {
    match *w {
        Witness::Projection(v) => (0, v, 0, 0),
        Witness::Constant(b) => (1, b, 0, 0),
        Witness::Unary(b, g) => (2, b, g, 0),
        Witness::Binary(b, g, h) => (3, b, g, h),
    }
}

/// Definability verdict for a target table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Definability {
    Definable(Term),
    NotDefinable,
    /// The closure hit the cap before completing; membership undecided.
    InconclusiveAtCap { explored: usize },
}

impl Definability {
    pub fn is_definable(&self) -> bool {
        matches!(self, Definability::Definable(_))
    }
}

/// Decides whether the target connective (unary or binary, by name) is
/// definable from the basis. Exact when the closure completes under `cap`.
pub fn is_definable(
    m: &LogicalMatrix,
    target: &str,
    basis: &[String],
    cap: usize,
) -> Result<(Definability, CloneFragment)> {
    let want = connective_as_binary_table(m.algebra(), target)?;
    is_table_definable(m, &want, basis, cap)
}

/// Same, for an explicit target table (used for cross-matrix targets that
/// share the carrier). The search stops as soon as the target is derived,
/// so positive answers do not pay for the full closure.
pub fn is_table_definable(
    m: &LogicalMatrix,
    target: &[u8],
    basis: &[String],
    cap: usize,
) -> Result<(Definability, CloneFragment)> {
    let n = m.algebra().size();
    let bits: u32 = if n <= 4 { 2 } else { 3 };
    let stop_at = (target.len() == n * n).then(|| pack_table(target, bits));
    let clone = closure(m, basis, cap, stop_at)?;
    let verdict = match clone.contains(target) {
        Some(idx) => Definability::Definable(clone.witness(idx)),
        None if clone.closed => Definability::NotDefinable,
        None => Definability::InconclusiveAtCap { explored: clone.len() },
    };
    Ok((verdict, clone))
}

/// The classical interdefinability terms relating the Cooper and
/// Farrell implications on the three-valued carrier.
pub mod interdefinability {
    use crate::algebra::Term;

    /// `x ->_OL y := ~((y ->_F x) ->_F ~y) ->_F ((x |_K y) ->_F y)`, written
    /// over operations named `neg`, `or`, `imp_f`.
    pub fn ol_from_f() -> Term {
        let x = Term::var(0);
        let y = Term::var(1);
        let f = |a: Term, b: Term| Term::bin("imp_f", a, b);
        Term::bin(
            "imp_f",
            Term::un("neg", f(f(y.clone(), x.clone()), Term::un("neg", y.clone()))),
            f(Term::bin("or", x, y.clone()), y),
        )
    }

    /// `x ->_F y := x ->_OL (x &_K y)`, over `imp_ol` and `and`.
    pub fn f_from_ol() -> Term {
        Term::bin(
            "imp_ol",
            Term::var(0),
            Term::bin("and", Term::var(0), Term::var(1)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::{named_matrix, tables, LogicalMatrix};

    /// Three-element carrier with both implications available.
    fn combined3() -> LogicalMatrix {
        let a = tables::three_valued_algebra(
            "CN3+F3",
            &[
                ("neg", "neg"),
                ("and", "and_k"),
                ("or", "or_k"),
                ("imp_ol", "imp_ol"),
                ("imp_f", "imp_f"),
            ],
        )
        .unwrap();
        LogicalMatrix::new("CN3+F3", a, [1, 2]).unwrap()
    }

    #[test]
    fn interdefinability_terms_check_exactly() {
        let m = combined3();
        assert!(check_definition(&m, &interdefinability::ol_from_f(), "imp_ol")
            .unwrap()
            .holds);
        assert!(check_definition(&m, &interdefinability::f_from_ol(), "imp_f")
            .unwrap()
            .holds);
    }

    #[test]
    fn df3_term_defines_the_implication() {
        let df3 = named_matrix("DF3").unwrap();
        let a = df3.algebra().with_constants(&[("top", "1/2")]).unwrap();
        let m = LogicalMatrix::new("DF3+top", a, [1, 2]).unwrap();
        let term = Term::bin(
            "or",
            Term::bin("and", Term::cnst("top"), Term::un("neg", Term::var(0))),
            Term::bin("and", Term::var(0), Term::var(1)),
        );
        assert!(check_definition(&m, &term, "imp").unwrap().holds);
    }

    #[test]
    fn cn3_clone_contains_the_f_implication() {
        let cn3 = named_matrix("CN3").unwrap();
        let basis: Vec<String> =
            ["neg", "and", "or", "imp"].iter().map(|s| s.to_string()).collect();
        let f3 = named_matrix("F3").unwrap();
        let target = connective_as_binary_table(f3.algebra(), "imp").unwrap();
        // the search stops at the target, so the fragment is left open
        let (verdict, _) = is_table_definable(&cn3, &target, &basis, 200_000).unwrap();
        match verdict {
            Definability::Definable(term) => {
                // the back-translation x ->_OL (x & y) is depth 2; the stored
                // witness must be minimal, hence of depth at most 2
                assert!(term.depth() <= 2, "witness {term} unexpectedly deep");
                assert_eq!(term_table(cn3.algebra(), &term).unwrap(), target);
            }
            v => panic!("expected definable, got {v:?}"),
        }
    }

    #[test]
    fn ff4_cannot_define_the_ol_implication() {
        let ff4 = named_matrix("Ff4").unwrap();
        let basis: Vec<String> =
            ["neg", "and", "or", "imp"].iter().map(|s| s.to_string()).collect();
        let cnf4 = named_matrix("CNf4").unwrap();
        let target = connective_as_binary_table(cnf4.algebra(), "imp").unwrap();
        let (verdict, clone) = is_table_definable(&ff4, &target, &basis, 200_000).unwrap();
        assert!(clone.closed, "Ff4 closure must complete (separable ops)");
        assert!(clone.len() <= 256, "separable clone exceeded its bound: {}", clone.len());
        assert_eq!(verdict, Definability::NotDefinable);
    }

    #[test]
    fn degenerate_singleton_clone() {
        let one = crate::algebra::FiniteAlgebra::new(
            "one",
            vec!["*".into()],
            vec![("and".into(), OpTable::Binary(vec![0]))],
        )
        .unwrap();
        let m = LogicalMatrix::new("one", one, [0]).unwrap();
        let clone = binary_clone(&m, &["and".to_string()], 10).unwrap();
        assert!(clone.closed);
        assert_eq!(clone.len(), 1); // projections and everything else collapse
    }

    #[test]
    fn identity_definable_from_empty_basis() {
        let df3 = named_matrix("DF3").unwrap();
        let (v, _) = is_definable(&df3, "imp", &[], 100).unwrap();
        assert_eq!(v, Definability::NotDefinable);
        // a unary target: the identity is a projection
        let m = LogicalMatrix::new("d", df3.algebra().clone(), [1, 2]).unwrap();
        let target = {
            let n = m.algebra().size();
            let mut t = Vec::new();
            for x in 0..n {
                t.extend(std::iter::repeat(x as u8).take(n));
            }
            t
        };
        let (v, _) = is_table_definable(&m, &target, &[], 100).unwrap();
        match v {
            Definability::Definable(term) => assert_eq!(term, Term::var(0)),
            v => panic!("expected projection witness, got {v:?}"),
        }
    }

    #[test]
    fn clone_monotone_in_the_basis() {
        let cn3 = named_matrix("CN3").unwrap();
        let small: Vec<String> = ["neg", "and"].iter().map(|s| s.to_string()).collect();
        let big: Vec<String> =
            ["neg", "and", "or", "imp"].iter().map(|s| s.to_string()).collect();
        let c1 = binary_clone(&cn3, &small, 200_000).unwrap();
        let c2 = binary_clone(&cn3, &big, 200_000).unwrap();
        assert!(c1.closed && c2.closed);
        for i in 0..c1.len() {
            assert!(c2.contains(&c1.table(i)).is_some(), "monotonicity violated");
        }
    }

    #[test]
    fn witnesses_verify_under_check_definition() {
        let cn3 = named_matrix("CN3").unwrap();
        let basis: Vec<String> =
            ["neg", "and", "or", "imp"].iter().map(|s| s.to_string()).collect();
        let clone = binary_clone(&cn3, &basis, 200_000).unwrap();
        assert!(clone.closed);
        let a = cn3.algebra();
        for idx in (0..clone.len()).step_by(97) {
            let term = clone.witness(idx);
            assert_eq!(term_table(a, &term).unwrap(), clone.table(idx), "witness {term} wrong");
            assert_eq!(term.depth(), clone.depth(idx), "stored depth wrong for {term}");
        }
    }

    #[test]
    fn closure_set_independent_of_basis_order() {
        let cn3 = named_matrix("CN3").unwrap();
        let fwd: Vec<String> = ["neg", "and", "or", "imp"].iter().map(|s| s.to_string()).collect();
        let rev: Vec<String> = ["imp", "or", "and", "neg"].iter().map(|s| s.to_string()).collect();
        let a = binary_clone(&cn3, &fwd, 200_000).unwrap();
        let b = binary_clone(&cn3, &rev, 200_000).unwrap();
        assert_eq!(a.len(), b.len());
        for i in 0..a.len() {
            let t = a.table(i);
            let j = b.contains(&t).expect("same closure set");
            assert_eq!(a.depth(i), b.depth(j), "minimal depths must agree");
        }
    }

    #[test]
    fn cap_reports_inconclusive() {
        let cn3 = named_matrix("CN3").unwrap();
        let basis: Vec<String> =
            ["neg", "and", "or", "imp"].iter().map(|s| s.to_string()).collect();
        let clone = binary_clone(&cn3, &basis, 16).unwrap();
        assert!(!clone.closed);
        assert_eq!(clone.len(), 16);
    }
}
