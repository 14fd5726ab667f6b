//! Finite-dimensional modules as quiver representations: Hom, isomorphism classes,
//! minimal projective resolutions, Ext and the Euler form.

mod ext;
mod oracle;
mod rep;
mod resolution;
mod universe;

pub use ext::{EulerForm, ExtSpace};
pub use oracle::{for_each_subspace, hall_number_oracle};
pub use rep::{
    aut_order, combine, find_isomorphism, fingerprint, hom_basis, hom_dim, is_isomorphic,
    kernel_rep, Fingerprint, Morphism, Representation,
};
pub use resolution::Resolution;
pub use universe::{ModuleClass, ModuleClassId, ModuleUniverse, DEFAULT_RAW_BUDGET};

use crate::algdef::{standard_module, AlgebraData, ModuleKind};
use crate::ffalg::{FieldSize, Mat};
use crate::quiver::Quiver;

pub const DEFAULT_ISO_BUDGET: u128 = 1_000_000;

/// An algebra together with its standard projectives and simples.
#[derive(Clone, Debug)]
pub struct ModCat {
    pub alg: AlgebraData,
    pub projectives: Vec<Representation>,
    pub simples: Vec<Representation>,
    pub iso_budget: u128,
}

impl ModCat {
    pub fn new(alg: AlgebraData) -> Self {
        let n = alg.num_vertices();
        let projectives = (0..n)
            .map(|v| standard_module(&alg, v, ModuleKind::Projective))
            .collect();
        let simples = (0..n)
            .map(|v| standard_module(&alg, v, ModuleKind::Simple))
            .collect();
        ModCat {
            alg,
            projectives,
            simples,
            iso_budget: DEFAULT_ISO_BUDGET,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        self.alg.quiver()
    }

    pub fn field(&self) -> FieldSize {
        self.alg.field()
    }

    pub fn q(&self) -> u32 {
        self.field().q()
    }

    pub fn num_vertices(&self) -> usize {
        self.alg.num_vertices()
    }

    /// `⊕ P(v)` over the listed vertices, in order.
    pub fn proj_sum(&self, summands: &[usize]) -> Representation {
        Representation::direct_sum_all(
            self.quiver(),
            summands.iter().map(|&v| &self.projectives[v]),
        )
    }

    /// Class in K(A) of `⊕ P(v)`.
    pub fn proj_class(&self, summands: &[usize]) -> Vec<i64> {
        let mut out = vec![0i64; self.num_vertices()];
        for &v in summands {
            for (o, c) in out.iter_mut().zip(self.alg.projective_class(v)) {
                *o += c;
            }
        }
        out
    }

    /// The morphism `P(v) → target` sending `e_v` to the vector `m` of `target` at `v`.
    pub fn map_from_projective(&self, v: usize, target: &Representation, m: &[u8]) -> Morphism {
        let f = self.field();
        let col = Mat::column(f, m);
        let maps = (0..self.num_vertices())
            .map(|w| {
                let paths = self.alg.paths_between(v, w);
                let cols: Vec<Mat> = paths
                    .iter()
                    .map(|&p| target.path_matrix(v, &self.alg.basis[p].arrows).mul(&col))
                    .collect();
                let refs: Vec<&Mat> = cols.iter().collect();
                Mat::hstack(f, target.dims[w], &refs)
            })
            .collect();
        Morphism { maps }
    }

    /// Morphism out of `⊕ P(summands[k])` given one generator image per summand.
    pub fn map_from_proj_sum(
        &self,
        summands: &[usize],
        target: &Representation,
        gens: &[Vec<u8>],
    ) -> Morphism {
        let f = self.field();
        let parts: Vec<Morphism> = summands
            .iter()
            .zip(gens)
            .map(|(&v, g)| self.map_from_projective(v, target, g))
            .collect();
        let maps = (0..self.num_vertices())
            .map(|w| {
                let refs: Vec<&Mat> = parts.iter().map(|p| &p.maps[w]).collect();
                Mat::hstack(f, target.dims[w], &refs)
            })
            .collect();
        Morphism { maps }
    }

    /// Projective cover `⊕ P(v) ↠ a`, generated by a basis of a complement of the radical.
    pub fn projective_cover(&self, a: &Representation) -> (Vec<usize>, Morphism) {
        let rad = a.radical(self.quiver());
        let mut summands = Vec::new();
        let mut gens = Vec::new();
        for (v, r) in rad.iter().enumerate() {
            for i in r.complement_indices() {
                let mut g = vec![0u8; a.dims[v]];
                g[i] = 1;
                summands.push(v);
                gens.push(g);
            }
        }
        let map = self.map_from_proj_sum(&summands, a, &gens);
        (summands, map)
    }

    /// Representation is projective: its projective cover is an isomorphism.
    pub fn is_projective(&self, a: &Representation) -> bool {
        let (summands, _) = self.projective_cover(a);
        self.proj_class(&summands)
            .iter()
            .zip(&a.dims)
            .all(|(&c, &d)| c == d as i64)
    }

    /// Class in K(A) in the basis of simples.
    pub fn dim_vector(a: &Representation) -> Vec<i64> {
        a.dims.iter().map(|&d| d as i64).collect()
    }
}
