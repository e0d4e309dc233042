pub mod error;
pub mod exact_arith;
pub mod generic_module;
pub mod gt_formulas;
pub mod linear;
pub mod tableaux;
pub mod singular_module;
pub mod verify;
