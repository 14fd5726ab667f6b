//! Independent count of Hall numbers by enumerating submodules.

use crate::error::{Error, Result};
use crate::ffalg::{for_each_vector, FieldSize, Mat};

use super::{is_isomorphic, ModCat, Representation};

/// Number of `k`-dimensional subspaces of `F_q^n` (Gaussian binomial).
fn gaussian_binomial(q: u128, n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul(q.pow((n - i) as u32) - 1);
        den = den.saturating_mul(q.pow((i + 1) as u32) - 1);
    }
    num / den
}

/// Visit every `k`-dimensional subspace of `F_q^n` once, as an `n × k` basis matrix
/// (the transpose of its reduced row echelon form).
pub fn for_each_subspace(field: FieldSize, n: usize, k: usize, mut f: impl FnMut(&Mat) -> bool) {
    let mut pivots: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        // free positions: row r, column c > pivots[r], c not a pivot
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let p = &pivots;
                (p[r] + 1..n)
                    .filter(move |c| !p.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let mut keep_going = true;
        for_each_vector(field, free.len(), |vals| {
            let mut basis = Mat::zeros(field, n, k);
            for (r, &p) in pivots.iter().enumerate() {
                basis.set(p, r, 1);
            }
            for (&(r, c), &v) in free.iter().zip(vals) {
                basis.set(c, r, v);
            }
            keep_going = f(&basis);
            keep_going
        });
        if !keep_going {
            return;
        }
        // next pivot combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] < n - k + i {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `g^B_{A,C}`: the number of submodules `U ⊆ B` with `U ≅ C` and `B/U ≅ A`.
pub fn hall_number_oracle(
    m: &ModCat,
    a: &Representation,
    b: &Representation,
    c: &Representation,
    budget: u128,
) -> Result<u128> {
    let quiver = m.quiver();
    let f = m.field();
    let n = m.num_vertices();
    for v in 0..n {
        if a.dims[v] + c.dims[v] != b.dims[v] {
            return Ok(0);
        }
    }
    let needed = (0..n).fold(1u128, |acc, v| {
        acc.saturating_mul(gaussian_binomial(f.q() as u128, b.dims[v], c.dims[v]))
    });
    if needed > budget {
        return Err(Error::SearchBudgetExceeded {
            what: "submodule enumeration",
            needed,
            budget,
        });
    }
    let per_vertex: Vec<Vec<Mat>> = (0..n)
        .map(|v| {
            let mut subs = Vec::new();
            for_each_subspace(f, b.dims[v], c.dims[v], |s| {
                subs.push(s.clone());
                true
            });
            subs
        })
        .collect();

    let mut count = 0u128;
    let mut choice = vec![0usize; n];
    loop {
        let bases: Vec<Mat> = (0..n).map(|v| per_vertex[v][choice[v]].clone()).collect();
        let closed =
            quiver.arrows.iter().enumerate().all(|(i, arr)| {
                bases[arr.target].span_contains(&b.mats[i].mul(&bases[arr.source]))
            });
        if closed {
            let u = b.subrep(quiver, &bases)?;
            if is_isomorphic(quiver, &u, c, m.iso_budget)? {
                let (quot, _) = b.quotient(quiver, &bases)?;
                if is_isomorphic(quiver, &quot, a, m.iso_budget)? {
                    count += 1;
                }
            }
        }
        let mut v = 0;
        loop {
            if v == n {
                return Ok(count);
            }
            choice[v] += 1;
            if choice[v] < per_vertex[v].len() {
                break;
            }
            choice[v] = 0;
            v += 1;
        }
    }
}
