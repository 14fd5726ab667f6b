//! Finite linear combinations with `TCoeff` coefficients, and the keys of the three algebras.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::cpx2::CoreId;
use crate::ffalg::TCoeff;
use crate::modcat::ModuleClassId;

/// `Σ c_k · k` with no explicit zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    q: u32,
    terms: BTreeMap<K, TCoeff>,
}

pub type HallElem = LinComb<ModuleClassId>;
pub type DHElem = LinComb<DHKey>;
pub type DHRedElem = LinComb<DHRedKey>;

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero(q: u32) -> Self {
        LinComb {
            q,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(q: u32, k: K) -> Self {
        Self::term(k, TCoeff::one(q))
    }

    pub fn term(k: K, c: TCoeff) -> Self {
        let mut x = Self::zero(c.q());
        x.add_term(k, c);
        x
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &TCoeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &K) -> TCoeff {
        self.terms
            .get(k)
            .cloned()
            .unwrap_or_else(|| TCoeff::zero(self.q))
    }

    pub fn add_term(&mut self, k: K, c: TCoeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &TCoeff) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * s);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &TCoeff::one(self.q));
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &TCoeff::from_int(self.q, -1));
        out
    }

    pub fn scale(&self, s: &TCoeff) -> Self {
        let mut out = Self::zero(self.q);
        out.add_scaled(self, s);
        out
    }

    /// Relabel keys, summing coefficients on collisions.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> LinComb<L> {
        let mut out = LinComb::zero(self.q);
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }
}

impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{k}")?;
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Display> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize)]
struct TermOut<'a, K> {
    key: &'a K,
    coeff: &'a TCoeff,
}

impl<K: Ord + Serialize> Serialize for LinComb<K> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (key, coeff) in &self.terms {
            seq.serialize_element(&TermOut { key, coeff })?;
        }
        seq.end()
    }
}

fn fmt_vec(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// `K_α ∗ K*_β ∗ [M]` with `M` free of acyclic summands.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DHKey {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    pub core: CoreId,
}

impl DHKey {
    pub fn unit(n: usize, zero_core: CoreId) -> Self {
        DHKey {
            alpha: vec![0; n],
            beta: vec![0; n],
            core: zero_core,
        }
    }
}

impl fmt::Display for DHKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "K{}K*{}[{}]",
            fmt_vec(&self.alpha),
            fmt_vec(&self.beta),
            self.core
        )
    }
}

impl Serialize for DHKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `K_γ ∗ [M]` in the reduced algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DHRedKey {
    pub gamma: Vec<i64>,
    pub core: CoreId,
}

impl fmt::Display for DHRedKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K{}[{}]", fmt_vec(&self.gamma), self.core)
    }
}

impl Serialize for DHRedKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Whether the elements are linearly independent over `Q(t)`, by row reduction of the
/// key-indexed coefficient matrix. `Q(t)` is a field because `t² = q` with `q` prime.
pub fn linear_independence_check<K: Ord + Clone>(elems: &[LinComb<K>]) -> bool {
    let Some(first) = elems.first() else {
        return true;
    };
    let q = first.q;
    let mut cols: BTreeMap<&K, usize> = BTreeMap::new();
    for e in elems {
        for k in e.terms.keys() {
            let n = cols.len();
            cols.entry(k).or_insert(n);
        }
    }
    if cols.len() < elems.len() {
        return false;
    }
    let mut rows: Vec<Vec<TCoeff>> = elems
        .iter()
        .map(|e| {
            let mut r = vec![TCoeff::zero(q); cols.len()];
            for (k, c) in &e.terms {
                r[cols[k]] = c.clone();
            }
            r
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols.len() {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inverse().expect("nonzero pivot");
        let pivot: Vec<TCoeff> = rows[rank].iter().map(|x| x * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[col].clone();
            if f.is_zero() {
                continue;
            }
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x = &*x - &(p * &f);
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank == elems.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type E = LinComb<u8>;

    fn elem(q: u32, terms: &[(u8, i64, i64)]) -> E {
        let mut x = E::zero(q);
        for &(k, a, b) in terms {
            x.add_term(
                k,
                TCoeff::from_int(q, a) + TCoeff::from_int(q, b) * TCoeff::t(q),
            );
        }
        x
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut x = elem(2, &[(1, 1, 0)]);
        x.add_term(1, TCoeff::from_int(2, -1));
        assert!(x.is_zero());
        x.add_term(3, TCoeff::zero(2));
        assert!(x.is_empty());
    }

    #[test]
    fn independence_examples() {
        let x = elem(2, &[(0, 1, 0), (1, 0, 1)]);
        assert!(!linear_independence_check(&[x.clone(), x.clone()]));
        let y = elem(2, &[(1, 1, 0)]);
        assert!(linear_independence_check(&[x.clone(), y.clone()]));
        // t·(k0 + t·k1) = t·k0 + 2·k1
        let a = elem(2, &[(0, 1, 0), (1, 0, 1)]);
        let b = elem(2, &[(0, 0, 1), (1, 2, 0)]);
        assert!(!linear_independence_check(&[a, b]));
        assert!(linear_independence_check::<u8>(&[]));
        assert!(!linear_independence_check(&[E::zero(2)]));
    }

    proptest! {
        #[test]
        fn multiples_are_dependent(terms in prop::collection::vec((0u8..4, -3i64..4, -3i64..4), 1..5),
                                   a in -3i64..4, b in 1i64..4) {
            let x = elem(3, &terms);
            prop_assume!(!x.is_zero());
            let s = TCoeff::from_int(3, a) + TCoeff::from_int(3, b) * TCoeff::t(3);
            prop_assert!(linear_independence_check(std::slice::from_ref(&x)));
            prop_assert!(!linear_independence_check(&[x.clone(), x.scale(&s)]));
        }

        #[test]
        fn add_sub_roundtrip(x in prop::collection::vec((0u8..4, -3i64..4, -3i64..4), 0..5),
                             y in prop::collection::vec((0u8..4, -3i64..4, -3i64..4), 0..5)) {
            let (x, y) = (elem(2, &x), elem(2, &y));
            prop_assert_eq!(x.add(&y).sub(&y), x.clone());
            prop_assert!(x.sub(&x).is_zero());
        }
    }
}
