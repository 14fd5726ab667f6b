//! Peeling off acyclic direct summands `K_P` and `K*_Q`.

use crate::error::Result;
use crate::modcat::{hom_basis, kernel_rep, Morphism};

use super::{AcyclicKind, Complex2, CpxCat};

/// `X ≅ K_P ⊕ K*_Q ⊕ core`, with `P = ⊕ P(plus[i])` and `Q = ⊕ P(star[i])` (both sorted).
#[derive(Clone, Debug)]
pub struct Stripped {
    pub plus: Vec<usize>,
    pub star: Vec<usize>,
    pub core: Complex2,
}

impl CpxCat {
    /// Split off one copy of `k` (an indecomposable with local endomorphism ring) if it is a
    /// direct summand of `x`.
    ///
    /// Over a local ring the composition pairing `Hom(K, X) × Hom(X, K) → End(K)/rad` is
    /// bilinear, so it is nonzero iff it is nonzero on a pair of basis vectors; hence
    /// checking basis pairs decides whether `K` splits off.
    pub fn peel(&self, x: &Complex2, k: &Complex2) -> Result<Option<Complex2>> {
        let xr = x.to_rep();
        let kr = k.to_rep();
        let iotas = hom_basis(&self.cq, &kr, &xr);
        if iotas.is_empty() {
            return Ok(None);
        }
        let pis = hom_basis(&self.cq, &xr, &kr);
        for iota in &iotas {
            for pi in &pis {
                let e = iota.then(pi);
                if !e.is_iso() {
                    continue;
                }
                let e_inv = Morphism {
                    maps: e.maps.iter().map(|m| m.inverse().expect("iso")).collect(),
                };
                let retraction = pi.then(&e_inv);
                let (complement, _) = kernel_rep(&self.cq, &xr, &retraction)?;
                return Ok(Some(self.standardize(&complement)?));
            }
        }
        Ok(None)
    }

    /// Strip in the given order of `(kind, vertex)` attempts, repeating each until it fails.
    pub fn strip_acyclics_ordered(
        &self,
        x: &Complex2,
        order: &[(AcyclicKind, usize)],
    ) -> Result<Stripped> {
        let mut cur = x.clone();
        let mut plus = Vec::new();
        let mut star = Vec::new();
        for &(kind, v) in order {
            let k = self.k_standard(&[v], kind);
            // a summand K_{P(v)} needs P(v) in both layers
            while cur.s1.contains(&v) && cur.s0.contains(&v) {
                match self.peel(&cur, &k)? {
                    Some(rest) => {
                        cur = rest;
                        match kind {
                            AcyclicKind::Plus => plus.push(v),
                            AcyclicKind::Star => star.push(v),
                        }
                    }
                    None => break,
                }
            }
        }
        plus.sort_unstable();
        star.sort_unstable();
        Ok(Stripped {
            plus,
            star,
            core: cur,
        })
    }

    pub fn strip_acyclics(&self, x: &Complex2) -> Result<Stripped> {
        let n = self.m.num_vertices();
        let order: Vec<(AcyclicKind, usize)> = (0..n)
            .map(|v| (AcyclicKind::Plus, v))
            .chain((0..n).map(|v| (AcyclicKind::Star, v)))
            .collect();
        self.strip_acyclics_ordered(x, &order)
    }
}
