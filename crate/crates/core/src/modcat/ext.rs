use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ffalg::{for_each_vector, Mat};

use super::{
    combine, hom_basis, ModCat, ModuleClassId, ModuleUniverse, Morphism, Representation, Resolution,
};

/// Matrix whose columns are the flattened basis morphisms.
fn basis_matrix(basis: &[Morphism], rows: usize, m: &ModCat) -> Mat {
    let cols: Vec<Mat> = basis
        .iter()
        .map(|b| Mat::column(m.field(), &b.flatten()))
        .collect();
    let refs: Vec<&Mat> = cols.iter().collect();
    Mat::hstack(m.field(), rows, &refs)
}

fn flat_len(src: &Representation, dst: &Representation) -> usize {
    src.dims.iter().zip(&dst.dims).map(|(a, b)| a * b).sum()
}

/// `Ext¹(A, C)` computed from a projective resolution of `A`, with a complement of the
/// coboundaries inside the cocycles: one cocycle `P1 → C` per basis vector of Ext.
#[derive(Clone, Debug)]
pub struct ExtSpace {
    pub hom_p1: Vec<Morphism>,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    /// Cocycles whose classes form a basis of Ext¹.
    pub reps: Vec<Morphism>,
}

impl ExtSpace {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }
}

/// Matrix `[A_i][A_j]`-indexed Euler form in the basis of simples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerForm {
    pub matrix: Vec<Vec<i64>>,
}

impl EulerForm {
    /// `⟨x, y⟩ = xᵀ E y`
    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                s += xi * self.matrix[i][j] * yj;
            }
        }
        s
    }

    /// `(x, y) = ⟨x, y⟩ + ⟨y, x⟩`
    pub fn sym(&self, x: &[i64], y: &[i64]) -> i64 {
        self.pair(x, y) + self.pair(y, x)
    }
}

impl ModCat {
    pub fn euler_form(&self) -> Result<EulerForm> {
        let n = self.num_vertices();
        let mut matrix = vec![vec![0i64; n]; n];
        for (i, s) in self.simples.iter().enumerate() {
            let r = self.minimal_resolution(s)?;
            for (j, e) in matrix[i].iter_mut().enumerate() {
                *e = r.multiplicity(0, j) - r.multiplicity(1, j) + r.multiplicity(2, j);
            }
        }
        Ok(EulerForm { matrix })
    }

    /// `Hom(P, C) → Hom(P', C)`, `f ↦ f ∘ g`, as a matrix between hom-basis coordinates.
    fn precompose_matrix(
        &self,
        src_basis: &[Morphism],
        g: &Morphism,
        p_prime: &Representation,
        c: &Representation,
    ) -> Result<Mat> {
        let f = self.field();
        let dst_basis = hom_basis(self.quiver(), p_prime, c);
        let rows = flat_len(p_prime, c);
        let bm = basis_matrix(&dst_basis, rows, self);
        let imgs: Vec<Mat> = src_basis
            .iter()
            .map(|h| Mat::column(f, &g.then(h).flatten()))
            .collect();
        let refs: Vec<&Mat> = imgs.iter().collect();
        let im = Mat::hstack(f, rows, &refs);
        bm.solve(&im)
            .ok_or_else(|| Error::Internal("composite is not a morphism".into()))
    }

    /// `Ext¹(A, C)` from the resolution of `A`.
    pub fn ext_space(&self, res: &Resolution, c: &Representation) -> Result<ExtSpace> {
        let quiver = self.quiver();
        let f = self.field();
        let hom_p1 = hom_basis(quiver, &res.reps[1], c);
        let hom_p0 = hom_basis(quiver, &res.reps[0], c);
        // cocycles: ker(Hom(P1,C) → Hom(P2,C))
        let d2 = self.precompose_matrix(&hom_p1, &res.a2, &res.reps[2], c)?;
        let z = d2.kernel();
        // coboundaries: image of Hom(P0,C) → Hom(P1,C)
        let d1 = self.precompose_matrix(&hom_p0, &res.a1, &res.reps[1], c)?;
        let b = d1.column_basis();
        let zb = Mat::hstack(f, hom_p1.len(), &[&b, &z]);
        let piv = zb.rref().pivots;
        debug_assert!(piv.iter().take(b.cols()).copied().eq(0..b.cols()));
        let reps = piv
            .into_iter()
            .filter(|&p| p >= b.cols())
            .map(|p| {
                let coeffs = z.col_vec(p - b.cols());
                combine(&hom_p1, &coeffs, &Morphism::zero(&res.reps[1], c))
            })
            .collect();
        Ok(ExtSpace {
            cocycle_dim: z.cols(),
            coboundary_dim: b.cols(),
            hom_p1,
            reps,
        })
    }

    /// `dim Ext²(A, B) = dim coker(Hom(P1,B) → Hom(P2,B))`.
    pub fn ext2_dim(&self, res: &Resolution, b: &Representation) -> Result<usize> {
        let hom_p1 = hom_basis(self.quiver(), &res.reps[1], b);
        let hom_p2_dim = hom_basis(self.quiver(), &res.reps[2], b).len();
        let d2 = self.precompose_matrix(&hom_p1, &res.a2, &res.reps[2], b)?;
        Ok(hom_p2_dim - d2.rank())
    }

    /// Middle term of the extension with cocycle `f: P1 → C`: the pushout
    /// `(C ⊕ P0) / {(f(x), -a1(x))}`.
    pub fn pushout_middle(
        &self,
        res: &Resolution,
        c: &Representation,
        cocycle: &Morphism,
    ) -> Result<Representation> {
        let f = self.field();
        let sum = c.direct_sum(&res.reps[0]);
        let sub: Vec<Mat> = (0..self.num_vertices())
            .map(|v| {
                let top = &cocycle.maps[v];
                let bottom = res.a1.maps[v].neg();
                Mat::vstack(f, top.cols(), &[top, &bottom]).column_basis()
            })
            .collect();
        Ok(sum.quotient(self.quiver(), &sub)?.0)
    }

    /// One middle term per class of `Ext¹(A, C)`, in coset-representative order.
    pub fn ext1_middles(
        &self,
        res: &Resolution,
        c: &Representation,
        budget: u128,
    ) -> Result<Vec<Representation>> {
        let ext = self.ext_space(res, c)?;
        let needed = self.field().pow_count(ext.dim()).unwrap_or(u128::MAX);
        if needed > budget {
            return Err(Error::SearchBudgetExceeded {
                what: "Ext enumeration",
                needed,
                budget,
            });
        }
        let template = Morphism::zero(&res.reps[1], c);
        let mut out = Vec::with_capacity(needed as usize);
        let mut err = None;
        for_each_vector(self.field(), ext.dim(), |coeffs| {
            let cocycle = combine(&ext.reps, coeffs, &template);
            match self.pushout_middle(res, c, &cocycle) {
                Ok(m) => {
                    out.push(m);
                    true
                }
                Err(e) => {
                    err = Some(e);
                    false
                }
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }
}

impl ModuleUniverse {
    /// `B ↦ |Ext¹(A, C)_B|`, the number of extension classes with middle term `B`.
    pub fn ext1_with_middles(
        &self,
        m: &ModCat,
        res_a: &Resolution,
        c: &Representation,
        budget: u128,
    ) -> Result<BTreeMap<ModuleClassId, u128>> {
        let mut out = BTreeMap::new();
        for mid in m.ext1_middles(res_a, c, budget)? {
            *out.entry(self.classify(m, &mid)?).or_insert(0) += 1;
        }
        Ok(out)
    }
}
