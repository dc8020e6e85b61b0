//! Shared fixtures for the benchmarks.

use twistlab_core::{families, named_matrix, twist_build, LogicalMatrix, TwistAlgebra, TwistKind, TwistSpec};

pub fn cn3() -> LogicalMatrix {
    named_matrix("CN3").expect("built-in")
}

pub fn fg4() -> LogicalMatrix {
    named_matrix("Fg4").expect("built-in")
}

pub fn cng4() -> LogicalMatrix {
    named_matrix("CNg4").expect("built-in")
}

/// DFg twist over the four-element grid: a 16-element algebra with a rich
/// subalgebra lattice.
pub fn dfg_twist_over_grid() -> TwistAlgebra {
    let grid = families::remark_lattice()
        .with_constants(&[("zero", "0")])
        .expect("label exists");
    twist_build(&TwistSpec::new(TwistKind::DFg, grid)).expect("valid factor")
}

pub fn full_basis(m: &LogicalMatrix) -> Vec<String> {
    m.algebra().op_names().map(String::from).collect()
}
