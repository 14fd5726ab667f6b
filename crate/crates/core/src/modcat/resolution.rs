use crate::error::{Error, Result};

use super::{kernel_rep, ModCat, Morphism, Representation};

/// Minimal projective resolution `0 → P2 → P1 → P0 → A → 0`.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// Summand vertices of each term, `p[k]` for `P_k`.
    pub p: [Vec<usize>; 3],
    pub reps: [Representation; 3],
    pub a0: Morphism,
    pub a1: Morphism,
    pub a2: Morphism,
    pub minimal: bool,
}

impl Resolution {
    pub fn length(&self) -> usize {
        (0..3).rev().find(|&k| !self.p[k].is_empty()).unwrap_or(0)
    }

    /// `P̂_k` in K(A).
    pub fn class(&self, m: &ModCat, k: usize) -> Vec<i64> {
        m.proj_class(&self.p[k])
    }

    /// Multiplicity of `P(v)` in `P_k`.
    pub fn multiplicity(&self, k: usize, v: usize) -> i64 {
        self.p[k].iter().filter(|&&w| w == v).count() as i64
    }
}

impl ModCat {
    pub fn minimal_resolution(&self, a: &Representation) -> Result<Resolution> {
        let quiver = self.quiver();
        let (s0, a0) = self.projective_cover(a);
        let p0 = self.proj_sum(&s0);
        let (k0, inc0) = kernel_rep(quiver, &p0, &a0)?;
        let (s1, c1) = self.projective_cover(&k0);
        let a1 = c1.then(&inc0);
        let p1 = self.proj_sum(&s1);
        let (k1, inc1) = kernel_rep(quiver, &p1, &a1)?;
        let (s2, c2) = self.projective_cover(&k1);
        if self.proj_class(&s2) != ModCat::dim_vector(&k1) {
            return Err(Error::GlobalDimensionExceeded(format!(
                "second syzygy of a module with dimension vector {:?} is not projective",
                a.dims
            )));
        }
        let a2 = c2.then(&inc1);
        let p2 = self.proj_sum(&s2);

        let rad0 = p0.radical(quiver);
        let rad1 = p1.radical(quiver);
        let lands_in = |rad: &[crate::ffalg::Mat], f: &Morphism| {
            rad.iter().zip(&f.maps).all(|(r, m)| r.span_contains(m))
        };
        let minimal = lands_in(&rad0, &a1) && lands_in(&rad1, &a2);

        Ok(Resolution {
            p: [s0, s1, s2],
            reps: [p0, p1, p2],
            a0,
            a1,
            a2,
            minimal,
        })
    }

    /// Global dimension from the resolutions of the simples; errors if it exceeds two.
    pub fn global_dimension(&self) -> Result<usize> {
        let mut g = 0;
        for s in &self.simples {
            g = g.max(self.minimal_resolution(s)?.length());
        }
        Ok(g)
    }
}
