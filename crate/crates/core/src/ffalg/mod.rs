//! Exact linear algebra over prime fields and the coefficient ring `Q[t]/(t^2 - q)`.

mod field;
mod mat;
mod tcoeff;

pub use field::FieldSize;
pub use mat::{unit_columns, Mat, Rref, SolutionSpace};
pub use tcoeff::TCoeff;

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TOp {
    Add,
    Mul,
    Div,
}

pub fn tcoeff_arith(x: &TCoeff, y: &TCoeff, op: TOp) -> Result<TCoeff> {
    match op {
        TOp::Add => Ok(x + y),
        TOp::Mul => Ok(x * y),
        TOp::Div => x.checked_div(y),
    }
}

pub fn tpow(q: FieldSize, k: i64) -> TCoeff {
    TCoeff::tpow(q.q(), k)
}

pub fn solution_space(a: &Mat, b: &Mat) -> SolutionSpace {
    a.solution_space(b)
}

/// Visit every vector of `F_q^n` in lexicographic order; stops early when `f` returns `false`.
pub fn for_each_vector(field: FieldSize, n: usize, mut f: impl FnMut(&[u8]) -> bool) {
    let q = field.q() as u8;
    let mut cur = vec![0u8; n];
    loop {
        if !f(&cur) {
            return;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < q {
                break;
            }
            cur[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_all_vectors_in_order() {
        let f = FieldSize::new(3).unwrap();
        let mut seen = Vec::new();
        for_each_vector(f, 2, |v| {
            seen.push(v.to_vec());
            true
        });
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[0], vec![0, 0]);
        assert_eq!(seen[1], vec![0, 1]);
        assert_eq!(seen[8], vec![2, 2]);
        let mut count = 0;
        for_each_vector(f, 0, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn arith_dispatch() {
        let q = FieldSize::new(2).unwrap();
        let t = tpow(q, 1);
        assert_eq!(
            tcoeff_arith(&t, &t, TOp::Mul).unwrap(),
            TCoeff::from_int(2, 2)
        );
        assert!(tcoeff_arith(&t, &TCoeff::zero(2), TOp::Div).is_err());
        assert_eq!(
            tcoeff_arith(&t, &TCoeff::one(2), TOp::Add).unwrap(),
            &TCoeff::one(2) + &t
        );
    }
}
