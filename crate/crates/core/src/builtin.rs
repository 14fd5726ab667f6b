//! Small algebras bundled with the crate, as JSON presentations.

pub const A2_F2: &str = include_str!("../algebras/a2_f2.json");
pub const A2_F3: &str = include_str!("../algebras/a2_f3.json");
/// Two-cycle `1 ⇄ 2` with `αβ = 0`.
pub const TWO_CYCLE_F2: &str = include_str!("../algebras/two_cycle_f2.json");
/// `α: 1 → 2`, `β: 2 → 3`, `γ: 1 → 3` with the length-two path through 2 killed.
pub const THREE_VERTEX_F2: &str = include_str!("../algebras/three_vertex_f2.json");
pub const LOOP_F2: &str = include_str!("../algebras/one_loop_f2.json");
/// Canonical algebra of weight type (2,2,2) with parameter 2 over `F_3`.
pub const CANONICAL_222_F3: &str = include_str!("../algebras/canonical_222_f3.json");
