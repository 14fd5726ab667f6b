//! Degreewise split extensions of complexes: `Ext¹_{C2}(M, N) ≅ Hom_{K2}(M, N*)`.

use crate::error::{Error, Result};
use crate::ffalg::{for_each_vector, Mat};
use crate::modcat::{combine, hom_basis, Morphism};

use super::{split_morphism, Complex2, CpxCat};

/// Chain maps `M → N*` together with a basis of a complement of the null-homotopic ones.
#[derive(Clone, Debug)]
pub struct ExtC2 {
    pub chain_maps: Vec<Morphism>,
    pub null_dim: usize,
    pub reps: Vec<Morphism>,
}

impl ExtC2 {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }
}

impl CpxCat {
    /// The chain map `M → N*` attached to a homotopy `(h1: M1 → N1, h0: M0 → N0)`.
    fn null_homotopic(&self, m: &Complex2, n: &Complex2, h1: &Morphism, h0: &Morphism) -> Morphism {
        // f1 = -d1ᴺ h1 + h0 d1ᴹ : M1 → N0,  f0 = -d0ᴺ h0 + h1 d0ᴹ : M0 → N1
        let f1 = h1.then(&n.d1.neg()).add(&m.d1.then(h0));
        let f0 = h0.then(&n.d0.neg()).add(&m.d0.then(h1));
        Morphism {
            maps: f1.maps.into_iter().chain(f0.maps).collect(),
        }
    }

    pub fn ext_space_c2(&self, m: &Complex2, n: &Complex2) -> Result<ExtC2> {
        let f = self.m.field();
        let q = self.m.quiver();
        let nstar = n.shift();
        let chain_maps = hom_basis(&self.cq, &m.to_rep(), &nstar.to_rep());
        let rows: usize = m
            .to_rep()
            .dims
            .iter()
            .zip(&nstar.to_rep().dims)
            .map(|(a, b)| a * b)
            .sum();
        let basis_cols: Vec<Mat> = chain_maps
            .iter()
            .map(|c| Mat::column(f, &c.flatten()))
            .collect();
        let refs: Vec<&Mat> = basis_cols.iter().collect();
        let bm = Mat::hstack(f, rows, &refs);

        let mut null_cols = Vec::new();
        for h1 in hom_basis(q, &m.m1, &n.m1) {
            let h0 = Morphism::zero(&m.m0, &n.m0);
            null_cols.push(self.null_homotopic(m, n, &h1, &h0));
        }
        for h0 in hom_basis(q, &m.m0, &n.m0) {
            let h1 = Morphism::zero(&m.m1, &n.m1);
            null_cols.push(self.null_homotopic(m, n, &h1, &h0));
        }
        let nc: Vec<Mat> = null_cols
            .iter()
            .map(|c| Mat::column(f, &c.flatten()))
            .collect();
        let nrefs: Vec<&Mat> = nc.iter().collect();
        let null_flat = Mat::hstack(f, rows, &nrefs);
        let null_coords = bm
            .solve(&null_flat)
            .ok_or_else(|| Error::Internal("null-homotopic map is not a chain map".into()))?;
        let b = null_coords.column_basis();
        let h = chain_maps.len();
        let all = Mat::hstack(f, h, &[&b, &Mat::identity(f, h)]);
        let reps = all
            .rref()
            .pivots
            .into_iter()
            .filter(|&p| p >= b.cols())
            .map(|p| chain_maps[p - b.cols()].clone())
            .collect();
        Ok(ExtC2 {
            null_dim: b.cols(),
            chain_maps,
            reps,
        })
    }

    /// Middle term of the extension `0 → N → X → M → 0` given by a chain map `M → N*`.
    pub fn extension_middle(&self, m: &Complex2, n: &Complex2, f: &Morphism) -> Complex2 {
        let c = &self.m;
        let (f1, f0) = split_morphism(f, c.num_vertices());
        let d1 = super::block_morphism(c, &[&n.m0, &m.m0], &[&n.m1, &m.m1], |i, j| match (i, j) {
            (0, 0) => Some(n.d1.clone()),
            (0, 1) => Some(f1.clone()),
            (1, 1) => Some(m.d1.clone()),
            _ => None,
        });
        let d0 = super::block_morphism(c, &[&n.m1, &m.m1], &[&n.m0, &m.m0], |i, j| match (i, j) {
            (0, 0) => Some(n.d0.clone()),
            (0, 1) => Some(f0.clone()),
            (1, 1) => Some(m.d0.clone()),
            _ => None,
        });
        Complex2 {
            s1: [n.s1.as_slice(), &m.s1].concat(),
            s0: [n.s0.as_slice(), &m.s0].concat(),
            m1: n.m1.direct_sum(&m.m1),
            m0: n.m0.direct_sum(&m.m0),
            d1,
            d0,
        }
    }

    /// One middle term per class of `Ext¹_{C2}(M, N)`.
    pub fn ext1_middles_c2(
        &self,
        m: &Complex2,
        n: &Complex2,
        budget: u128,
    ) -> Result<Vec<Complex2>> {
        let ext = self.ext_space_c2(m, n)?;
        let needed = self.m.field().pow_count(ext.dim()).unwrap_or(u128::MAX);
        if needed > budget {
            return Err(Error::SearchBudgetExceeded {
                what: "complex Ext enumeration",
                needed,
                budget,
            });
        }
        let template = Morphism::zero(&m.to_rep(), &n.shift().to_rep());
        let mut out = Vec::with_capacity(needed as usize);
        for_each_vector(self.m.field(), ext.dim(), |coeffs| {
            let f = combine(&ext.reps, coeffs, &template);
            out.push(self.extension_middle(m, n, &f));
            true
        });
        Ok(out)
    }
}
