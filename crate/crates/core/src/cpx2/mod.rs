//! 2-periodic complexes of projectives `M1 ⇄ M0`.
//!
//! A complex is also stored as a representation of the "complex quiver": two copies of the
//! quiver (layer 1 at vertices `0..n`, layer 0 at `n..2n`) joined by arrows `d1_v` and `d0_v`.
//! Chain maps are exactly the morphisms of such representations, so Hom spaces and
//! isomorphism searches reuse the module machinery.

mod ext;
mod registry;
mod strip;

pub use registry::{Complex2ClassId, CoreId, CoreRegistry, CxFingerprint};
pub use strip::Stripped;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ffalg::Mat;
use crate::modcat::{find_isomorphism, hom_basis, ModCat, Morphism, Representation, Resolution};
use crate::quiver::{Arrow, Quiver};

/// The module category together with its complex quiver.
#[derive(Clone, Debug)]
pub struct CpxCat {
    pub m: ModCat,
    pub cq: Quiver,
}

pub fn complex_quiver(q: &Quiver) -> Quiver {
    let n = q.num_vertices();
    let mut vertices = Vec::with_capacity(2 * n);
    for layer in ["1", "0"] {
        for v in &q.vertices {
            vertices.push(format!("{v}@{layer}"));
        }
    }
    let mut arrows = Vec::new();
    for (layer, off) in [("1", 0), ("0", n)] {
        for a in &q.arrows {
            arrows.push(Arrow {
                name: format!("{}@{layer}", a.name),
                source: a.source + off,
                target: a.target + off,
            });
        }
    }
    for v in 0..n {
        arrows.push(Arrow {
            name: format!("d1@{}", q.vertices[v]),
            source: v,
            target: n + v,
        });
    }
    for v in 0..n {
        arrows.push(Arrow {
            name: format!("d0@{}", q.vertices[v]),
            source: n + v,
            target: v,
        });
    }
    Quiver {
        field: q.field,
        vertices,
        arrows,
        relations: Vec::new(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AcyclicKind {
    /// `K_P`: `d1 = id`, `d0 = 0`.
    Plus,
    /// `K*_P`: `d1 = 0`, `d0 = id`.
    Star,
}

/// A 2-periodic complex whose components are sums of standard projectives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex2 {
    /// Summand vertices of `M1` and `M0`.
    pub s1: Vec<usize>,
    pub s0: Vec<usize>,
    pub m1: Representation,
    pub m0: Representation,
    /// `M1 → M0`
    pub d1: Morphism,
    /// `M0 → M1`
    pub d0: Morphism,
}

/// Per-vertex block matrix assembled from morphisms; `None` blocks are zero.
fn block_morphism(
    c: &ModCat,
    rows: &[&Representation],
    cols: &[&Representation],
    get: impl Fn(usize, usize) -> Option<Morphism>,
) -> Morphism {
    let f = c.field();
    let maps = (0..c.num_vertices())
        .map(|v| {
            let nr: usize = rows.iter().map(|r| r.dims[v]).sum();
            let nc: usize = cols.iter().map(|r| r.dims[v]).sum();
            let mut m = Mat::zeros(f, nr, nc);
            let mut r0 = 0;
            for (i, r) in rows.iter().enumerate() {
                let mut c0 = 0;
                for (j, cc) in cols.iter().enumerate() {
                    if let Some(b) = get(i, j) {
                        m.paste(r0, c0, &b.maps[v]);
                    }
                    c0 += cc.dims[v];
                }
                r0 += r.dims[v];
            }
            m
        })
        .collect();
    Morphism { maps }
}

impl Complex2 {
    pub fn zero(c: &ModCat) -> Self {
        let z = Representation::zero(c.quiver());
        Complex2 {
            s1: Vec::new(),
            s0: Vec::new(),
            d1: Morphism::zero(&z, &z),
            d0: Morphism::zero(&z, &z),
            m1: z.clone(),
            m0: z,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m1.is_zero() && self.m0.is_zero()
    }

    /// `M̂0 − M̂1` in K(A).
    pub fn kclass(&self) -> Vec<i64> {
        self.m0
            .dims
            .iter()
            .zip(&self.m1.dims)
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect()
    }

    pub fn layer_class(&self, layer: usize) -> Vec<i64> {
        let r = if layer == 0 { &self.m0 } else { &self.m1 };
        ModCat::dim_vector(r)
    }

    /// Swap the layers and negate both differentials.
    pub fn shift(&self) -> Complex2 {
        Complex2 {
            s1: self.s0.clone(),
            s0: self.s1.clone(),
            m1: self.m0.clone(),
            m0: self.m1.clone(),
            d1: self.d0.neg(),
            d0: self.d1.neg(),
        }
    }

    pub fn direct_sum(&self, other: &Complex2, c: &ModCat) -> Complex2 {
        let d1 = block_morphism(c, &[&self.m0, &other.m0], &[&self.m1, &other.m1], |i, j| {
            (i == j).then(|| {
                if i == 0 {
                    self.d1.clone()
                } else {
                    other.d1.clone()
                }
            })
        });
        let d0 = block_morphism(c, &[&self.m1, &other.m1], &[&self.m0, &other.m0], |i, j| {
            (i == j).then(|| {
                if i == 0 {
                    self.d0.clone()
                } else {
                    other.d0.clone()
                }
            })
        });
        Complex2 {
            s1: [self.s1.as_slice(), &other.s1].concat(),
            s0: [self.s0.as_slice(), &other.s0].concat(),
            m1: self.m1.direct_sum(&other.m1),
            m0: self.m0.direct_sum(&other.m0),
            d1,
            d0,
        }
    }

    /// As a representation of the complex quiver.
    pub fn to_rep(&self) -> Representation {
        let dims = [self.m1.dims.as_slice(), &self.m0.dims].concat();
        let mats = self
            .m1
            .mats
            .iter()
            .chain(&self.m0.mats)
            .chain(&self.d1.maps)
            .chain(&self.d0.maps)
            .cloned()
            .collect();
        Representation {
            field: self.m1.field,
            dims,
            mats,
        }
    }

    /// Both composites vanish and the differentials commute with the arrows.
    pub fn is_valid(&self, c: &ModCat) -> bool {
        let q = c.quiver();
        self.d1.then(&self.d0).is_zero()
            && self.d0.then(&self.d1).is_zero()
            && self.d1.is_morphism(q, &self.m1, &self.m0)
            && self.d0.is_morphism(q, &self.m0, &self.m1)
    }

    /// `(H0, H1) = (ker d0 / im d1, ker d1 / im d0)`.
    pub fn homology(&self, c: &ModCat) -> Result<(Representation, Representation)> {
        let q = c.quiver();
        let h0 = self
            .m0
            .subquotient(q, &self.d0.kernel(), &self.d1.image())?;
        let h1 = self
            .m1
            .subquotient(q, &self.d1.kernel(), &self.d0.image())?;
        Ok((h0, h1))
    }
}

/// Split a complex-quiver representation back into layers and differentials.
pub(crate) fn layers_of(rep: &Representation, n: usize, m: usize) -> [Representation; 2] {
    let layer = |off: usize, aoff: usize| Representation {
        field: rep.field,
        dims: rep.dims[off..off + n].to_vec(),
        mats: rep.mats[aoff..aoff + m].to_vec(),
    };
    [layer(0, 0), layer(n, m)]
}

pub(crate) fn split_morphism(f: &Morphism, n: usize) -> (Morphism, Morphism) {
    (
        Morphism {
            maps: f.maps[..n].to_vec(),
        },
        Morphism {
            maps: f.maps[n..].to_vec(),
        },
    )
}

impl CpxCat {
    pub fn new(m: ModCat) -> Self {
        let cq = complex_quiver(m.quiver());
        CpxCat { m, cq }
    }

    fn n(&self) -> usize {
        self.m.num_vertices()
    }

    fn num_arrows(&self) -> usize {
        self.m.quiver().num_arrows()
    }

    /// Rebuild a complex from a complex-quiver representation whose layers are projective,
    /// rewriting each layer as a sum of standard projectives.
    pub fn standardize(&self, rep: &Representation) -> Result<Complex2> {
        let (n, m) = (self.n(), self.num_arrows());
        let [l1, l0] = layers_of(rep, n, m);
        let d1 = Morphism {
            maps: rep.mats[2 * m..2 * m + n].to_vec(),
        };
        let d0 = Morphism {
            maps: rep.mats[2 * m + n..].to_vec(),
        };
        let (s1, c1) = self.m.projective_cover(&l1);
        let (s0, c0) = self.m.projective_cover(&l0);
        if !c1.is_iso() || !c0.is_iso() {
            return Err(Error::NotProjective);
        }
        let inv = |f: &Morphism| Morphism {
            maps: f.maps.iter().map(|x| x.inverse().expect("iso")).collect(),
        };
        let (c1i, c0i) = (inv(&c1), inv(&c0));
        Ok(Complex2 {
            m1: self.m.proj_sum(&s1),
            m0: self.m.proj_sum(&s0),
            d1: c1.then(&d1).then(&c0i),
            d0: c0.then(&d0).then(&c1i),
            s1,
            s0,
        })
    }

    /// `K_P` or `K*_P` for a projective module `P`.
    pub fn k_acyclic(&self, p: &Representation, kind: AcyclicKind) -> Result<Complex2> {
        let (s, cover) = self.m.projective_cover(p);
        if !cover.is_iso() {
            return Err(Error::NotProjective);
        }
        Ok(self.k_standard(&s, kind))
    }

    /// `K_P` or `K*_P` for `P = ⊕ P(v)`.
    pub fn k_standard(&self, summands: &[usize], kind: AcyclicKind) -> Complex2 {
        let p = self.m.proj_sum(summands);
        let id = Morphism::identity(&p);
        let zero = Morphism::zero(&p, &p);
        let (d1, d0) = match kind {
            AcyclicKind::Plus => (id, zero),
            AcyclicKind::Star => (zero, id),
        };
        Complex2 {
            s1: summands.to_vec(),
            s0: summands.to_vec(),
            m1: p.clone(),
            m0: p,
            d1,
            d0,
        }
    }

    /// `C_A = (P1 ⇄ P0 ⊕ P2)` with `d1 = (a1, 0)ᵀ`, `d0 = (0, a2)`.
    pub fn c_of_module(&self, res: &Resolution) -> Complex2 {
        let c = &self.m;
        let [p0, p1, p2] = &res.reps;
        let d1 = block_morphism(c, &[p0, p2], &[p1], |i, _| (i == 0).then(|| res.a1.clone()));
        let d0 = block_morphism(c, &[p1], &[p0, p2], |_, j| (j == 1).then(|| res.a2.clone()));
        Complex2 {
            s1: res.p[1].clone(),
            s0: [res.p[0].as_slice(), &res.p[2]].concat(),
            m1: p1.clone(),
            m0: p0.direct_sum(p2),
            d1,
            d0,
        }
    }

    /// The complex of the padded resolution
    /// `0 → R1 ⊕ P2 → R0 ⊕ P1 ⊕ R1 → R0 ⊕ P0 → A → 0`.
    pub fn c_of_module_padded(&self, res: &Resolution, r0: &[usize], r1: &[usize]) -> Complex2 {
        let c = &self.m;
        let [p0, p1, p2] = &res.reps;
        let (r0m, r1m) = (c.proj_sum(r0), c.proj_sum(r1));
        let id0 = Morphism::identity(&r0m);
        let id1 = Morphism::identity(&r1m);
        // rows R0, P0, R1, P2; columns R0, P1, R1
        let d1 = block_morphism(c, &[&r0m, p0, &r1m, p2], &[&r0m, p1, &r1m], |i, j| {
            match (i, j) {
                (0, 0) => Some(id0.clone()),
                (1, 1) => Some(res.a1.clone()),
                _ => None,
            }
        });
        // rows R0, P1, R1; columns R0, P0, R1, P2
        let d0 = block_morphism(c, &[&r0m, p1, &r1m], &[&r0m, p0, &r1m, p2], |i, j| {
            match (i, j) {
                (1, 3) => Some(res.a2.clone()),
                (2, 2) => Some(id1.clone()),
                _ => None,
            }
        });
        Complex2 {
            s1: [r0, res.p[1].as_slice(), r1].concat(),
            s0: [r0, res.p[0].as_slice(), r1, &res.p[2]].concat(),
            m1: Representation::direct_sum_all(c.quiver(), [&r0m, p1, &r1m]),
            m0: Representation::direct_sum_all(c.quiver(), [&r0m, p0, &r1m, p2]),
            d1,
            d0,
        }
    }

    pub fn hom_basis_c2(&self, m: &Complex2, n: &Complex2) -> Vec<Morphism> {
        hom_basis(&self.cq, &m.to_rep(), &n.to_rep())
    }

    pub fn hom_dim_c2(&self, m: &Complex2, n: &Complex2) -> usize {
        self.hom_basis_c2(m, n).len()
    }

    /// `|Hom_{C2}(M, N)|`
    pub fn hom_count_c2(&self, m: &Complex2, n: &Complex2) -> BigUint {
        BigUint::from(self.m.q()).pow(self.hom_dim_c2(m, n) as u32)
    }

    pub fn is_isomorphic_c2(&self, m: &Complex2, n: &Complex2) -> Result<bool> {
        Ok(
            find_isomorphism(&self.cq, &m.to_rep(), &n.to_rep(), None, self.m.iso_budget)?
                .is_some(),
        )
    }

    /// Apply automorphisms `g1` of `M1` and `g0` of `M0`: the result is isomorphic to `x`.
    pub fn conjugate(&self, x: &Complex2, g1: &Morphism, g0: &Morphism) -> Complex2 {
        let inv = |f: &Morphism| Morphism {
            maps: f
                .maps
                .iter()
                .map(|m| m.inverse().expect("automorphism"))
                .collect(),
        };
        Complex2 {
            d1: inv(g1).then(&x.d1).then(g0),
            d0: inv(g0).then(&x.d0).then(g1),
            ..x.clone()
        }
    }
}

#[cfg(test)]
pub(crate) mod tests_support {
    use super::*;
    use crate::testutil::algebra;

    pub fn cpx(text: &str) -> CpxCat {
        CpxCat::new(ModCat::new(algebra(text)))
    }

    pub fn c_of(cc: &CpxCat, a: &Representation) -> Complex2 {
        cc.c_of_module(&cc.m.minimal_resolution(a).unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::tests_support::*;
    use super::*;
    use crate::modcat::{is_isomorphic, DEFAULT_ISO_BUDGET};
    use crate::testutil::*;

    #[test]
    fn shift_of_k_plus_is_isomorphic_to_k_star() {
        let cc = cpx(A2_F2);
        for v in 0..2 {
            let k = cc.k_standard(&[v], AcyclicKind::Plus);
            let ks = cc.k_standard(&[v], AcyclicKind::Star);
            assert!(cc.is_isomorphic_c2(&k.shift(), &ks).unwrap());
            assert!(!cc.is_isomorphic_c2(&k, &ks).unwrap());
        }
        let z = Complex2::zero(&cc.m);
        assert_eq!(z.shift(), z);
    }

    #[test]
    fn shift_is_an_involution() {
        let cc = cpx(TWO_CYCLE_F2);
        for s in &cc.m.simples {
            let c = c_of(&cc, s);
            assert_eq!(c.shift().shift(), c);
        }
    }

    #[test]
    fn k_acyclic_shapes_and_homology() {
        let cc = cpx(A2_F2);
        let p1 = &cc.m.projectives[0];
        let k = cc.k_acyclic(p1, AcyclicKind::Plus).unwrap();
        assert_eq!(k.m1.dims, vec![1, 1]);
        assert!(k.d1.is_iso());
        assert!(k.d0.is_zero());
        assert!(k.is_valid(&cc.m));
        let (h0, h1) = k.homology(&cc.m).unwrap();
        assert!(h0.is_zero() && h1.is_zero());
        let z = Representation::zero(cc.m.quiver());
        assert!(cc.k_acyclic(&z, AcyclicKind::Star).unwrap().is_zero());
        assert_eq!(
            cc.k_acyclic(&cc.m.simples[0], AcyclicKind::Plus),
            Err(Error::NotProjective)
        );
    }

    #[test]
    fn c_of_module_examples() {
        let cc = cpx(A2_F2);
        let q = cc.m.quiver();
        // projective: (0 ⇄ A)
        let c = c_of(&cc, &cc.m.projectives[0]);
        assert!(c.m1.is_zero());
        assert_eq!(c.m0.dims, vec![1, 1]);
        // S1: P(2) ⇄ P(1), d1 the inclusion of the radical
        let c = c_of(&cc, &cc.m.simples[0]);
        assert_eq!((c.s1.clone(), c.s0.clone()), (vec![1], vec![0]));
        assert!(c.d0.is_zero());
        assert!(c.d1.is_injective());
        assert!(c.is_valid(&cc.m));
        let (h0, h1) = c.homology(&cc.m).unwrap();
        assert!(is_isomorphic(q, &h0, &cc.m.simples[0], DEFAULT_ISO_BUDGET).unwrap());
        assert!(h1.is_zero());
        assert_eq!(c.kclass(), vec![1, 0]);
        assert!(c_of(&cc, &Representation::zero(q)).is_zero());
    }

    #[test]
    fn homology_of_c_a_over_two_cycle() {
        let cc = cpx(TWO_CYCLE_F2);
        let q = cc.m.quiver();
        for s in &cc.m.simples {
            let c = c_of(&cc, s);
            assert!(c.is_valid(&cc.m));
            let (h0, h1) = c.homology(&cc.m).unwrap();
            assert!(is_isomorphic(q, &h0, s, DEFAULT_ISO_BUDGET).unwrap());
            assert!(h1.is_zero());
            assert_eq!(c.kclass(), ModCat::dim_vector(s));
        }
    }

    #[test]
    fn padded_complex_examples() {
        let cc = cpx(A2_F2);
        let s1 = &cc.m.simples[0];
        let res = cc.m.minimal_resolution(s1).unwrap();
        assert_eq!(cc.c_of_module_padded(&res, &[], &[]), cc.c_of_module(&res));
        let padded = cc.c_of_module_padded(&res, &[0], &[]);
        assert!(padded.is_valid(&cc.m));
        let expected = cc
            .c_of_module(&res)
            .direct_sum(&cc.k_standard(&[0], AcyclicKind::Plus), &cc.m);
        assert!(cc.is_isomorphic_c2(&padded, &expected).unwrap());
        for (r0, r1) in [(vec![1], vec![0]), (vec![0, 1], vec![1])] {
            let p = cc.c_of_module_padded(&res, &r0, &r1);
            assert!(p.is_valid(&cc.m));
            let (h0, h1) = p.homology(&cc.m).unwrap();
            assert!(is_isomorphic(cc.m.quiver(), &h0, s1, DEFAULT_ISO_BUDGET).unwrap());
            assert!(h1.is_zero());
        }
    }

    #[test]
    fn hom_counts() {
        let cc = cpx(A2_F2);
        let c = c_of(&cc, &cc.m.simples[0]);
        assert_eq!(cc.hom_count_c2(&c, &c), BigUint::from(2u32));
        let z = Complex2::zero(&cc.m);
        assert_eq!(cc.hom_count_c2(&z, &c), BigUint::from(1u32));
        for v in 0..2 {
            let k = cc.k_standard(&[v], AcyclicKind::Plus);
            let p = &cc.m.projectives[v];
            let end_p = crate::modcat::hom_dim(cc.m.quiver(), p, p);
            assert_eq!(cc.hom_dim_c2(&k, &k), end_p);
        }
    }

    #[test]
    fn standardize_round_trips() {
        let cc = cpx(TWO_CYCLE_F2);
        let c = c_of(&cc, &cc.m.simples[0]);
        let back = cc.standardize(&c.to_rep()).unwrap();
        assert!(cc.is_isomorphic_c2(&back, &c).unwrap());
        assert_eq!(back.s1, c.s1);
    }
}
