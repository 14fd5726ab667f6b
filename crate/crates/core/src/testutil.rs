pub use crate::builtin::*;

use crate::algdef::{load_presentation, path_basis, AlgebraData};

pub fn algebra(text: &str) -> AlgebraData {
    path_basis(&load_presentation(text.as_bytes()).unwrap()).unwrap()
}
