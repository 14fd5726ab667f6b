//! The twisted Hall algebra of modules, the localized Hall algebra of 2-periodic complexes in
//! normal form, its reduced quotient, and the embeddings `[A] ↦ E_A` and `[A] ↦ F_A`.

mod elem;

pub use elem::{linear_independence_check, DHElem, DHKey, DHRedElem, DHRedKey, HallElem, LinComb};

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use rayon::prelude::*;

use crate::algdef::AlgebraData;
use crate::cpx2::{AcyclicKind, Complex2, CoreId, CoreRegistry, CpxCat};
use crate::error::{Error, Result};
use crate::ffalg::TCoeff;
use crate::modcat::{
    hom_dim, EulerForm, ModCat, ModuleClassId, ModuleUniverse, Representation, Resolution,
    DEFAULT_ISO_BUDGET, DEFAULT_RAW_BUDGET,
};

/// Search limits. `ext` caps the number of extension classes enumerated per product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    pub iso: u128,
    pub raw: u128,
    pub ext: u128,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            iso: DEFAULT_ISO_BUDGET,
            raw: DEFAULT_RAW_BUDGET,
            ext: 1 << 20,
        }
    }
}

/// Everything needed to multiply: the categories, the enumerated modules with their
/// resolutions and complexes, the registry of core complexes, and product memos.
pub struct Lab {
    pub cc: CpxCat,
    pub euler: EulerForm,
    pub gldim: usize,
    pub universe: ModuleUniverse,
    pub cores: CoreRegistry,
    pub budgets: Budgets,
    resolutions: BTreeMap<ModuleClassId, Resolution>,
    c_a: BTreeMap<ModuleClassId, (Complex2, CoreId)>,
    zero_core: CoreId,
    hall_memo: Mutex<HashMap<(ModuleClassId, ModuleClassId), HallElem>>,
    core_memo: Mutex<HashMap<(CoreId, CoreId), DHElem>>,
}

pub fn core_label_of_module(id: &ModuleClassId) -> String {
    format!("C{id}")
}

pub fn core_label_of_shifted_module(id: &ModuleClassId) -> String {
    format!("C*{id}")
}

impl Lab {
    /// Builds the universe of modules of total dimension `<= bound`. Fails with
    /// `GlobalDimensionExceeded` unless the global dimension is at most two.
    pub fn new(alg: AlgebraData, bound: usize, budgets: Budgets) -> Result<Self> {
        let mut m = ModCat::new(alg);
        m.iso_budget = budgets.iso;
        let gldim = m.global_dimension()?;
        let euler = m.euler_form()?;
        let universe = ModuleUniverse::enumerate(&m, bound, budgets.raw)?;
        let cc = CpxCat::new(m);

        let built: Vec<Result<(ModuleClassId, Resolution, Complex2)>> = universe
            .classes
            .par_iter()
            .map(|c| {
                let res = cc.m.minimal_resolution(&c.rep)?;
                let cx = cc.c_of_module(&res);
                Ok((c.id.clone(), res, cx))
            })
            .collect();

        let cores = CoreRegistry::new();
        let zero_core = cores.register(&cc, &Complex2::zero(&cc.m), Some("0".into()))?;
        let mut resolutions = BTreeMap::new();
        let mut c_a = BTreeMap::new();
        let mut shifted = Vec::new();
        for b in built {
            let (id, res, cx) = b?;
            let core = if id.is_zero() {
                zero_core.clone()
            } else {
                cores.register(&cc, &cx, Some(core_label_of_module(&id)))?
            };
            shifted.push((id.clone(), cx.shift()));
            resolutions.insert(id.clone(), res);
            c_a.insert(id, (cx, core));
        }
        for (id, sx) in shifted {
            if !id.is_zero() {
                cores.register(&cc, &sx, Some(core_label_of_shifted_module(&id)))?;
            }
        }

        Ok(Lab {
            cc,
            euler,
            gldim,
            universe,
            cores,
            budgets,
            resolutions,
            c_a,
            zero_core,
            hall_memo: Mutex::new(HashMap::new()),
            core_memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn m(&self) -> &ModCat {
        &self.cc.m
    }

    pub fn q(&self) -> u32 {
        self.cc.m.q()
    }

    pub fn n(&self) -> usize {
        self.cc.m.num_vertices()
    }

    pub fn bound(&self) -> usize {
        self.universe.bound
    }

    fn tpow(&self, k: i64) -> TCoeff {
        TCoeff::tpow(self.q(), k)
    }

    pub fn resolution(&self, id: &ModuleClassId) -> &Resolution {
        &self.resolutions[id]
    }

    /// `C_A` for an enumerated module, with its core id.
    pub fn c_of(&self, id: &ModuleClassId) -> &(Complex2, CoreId) {
        &self.c_a[id]
    }

    pub fn zero_core(&self) -> &CoreId {
        &self.zero_core
    }

    pub fn rep(&self, id: &ModuleClassId) -> &Representation {
        self.universe.rep(id)
    }

    pub fn dim_vector(&self, id: &ModuleClassId) -> Vec<i64> {
        ModCat::dim_vector(self.rep(id))
    }

    pub fn hall_unit(&self) -> HallElem {
        HallElem::basis(self.q(), self.universe.zero_id().clone())
    }

    pub fn dh_unit(&self) -> DHElem {
        DHElem::basis(self.q(), DHKey::unit(self.n(), self.zero_core.clone()))
    }

    /// `|Hom(A, C)|` as a power of `q`: the exponent.
    pub fn hom_exp(&self, a: &Representation, c: &Representation) -> usize {
        hom_dim(self.cc.m.quiver(), a, c)
    }

    /// `[A] ∗ [C] = t^{⟨Â,Ĉ⟩} Σ_B |Ext¹(A,C)_B| / |Hom(A,C)| [B]`
    pub fn hall_mul_basis(&self, a: &ModuleClassId, c: &ModuleClassId) -> Result<HallElem> {
        let key = (a.clone(), c.clone());
        if let Some(x) = self.hall_memo.lock().unwrap().get(&key) {
            return Ok(x.clone());
        }
        let dim = a.total_dim() + c.total_dim();
        if dim > self.bound() {
            return Err(Error::BoundExceeded {
                dim,
                bound: self.bound(),
            });
        }
        let q = self.q();
        let (ra, rc) = (self.rep(a), self.rep(c));
        let tally =
            self.universe
                .ext1_with_middles(self.m(), self.resolution(a), rc, self.budgets.ext)?;
        let hom = (q as i64).pow(self.hom_exp(ra, rc) as u32);
        let twist = self.tpow(
            self.euler
                .pair(&ModCat::dim_vector(ra), &ModCat::dim_vector(rc)),
        );
        let mut out = HallElem::zero(q);
        for (b, count) in tally {
            out.add_term(b, &TCoeff::from_ratio(q, count as i64, hom) * &twist);
        }
        self.hall_memo
            .lock()
            .unwrap()
            .entry(key)
            .or_insert_with(|| out.clone());
        Ok(out)
    }

    pub fn hall_mul(&self, x: &HallElem, y: &HallElem) -> Result<HallElem> {
        let mut out = HallElem::zero(self.q());
        for (a, ca) in x.iter() {
            for (c, cc) in y.iter() {
                out.add_scaled(&self.hall_mul_basis(a, c)?, &(ca * cc));
            }
        }
        Ok(out)
    }

    /// Rewrite `K_α ∗ K*_β ∗ c·[X]` in normal form: `X ≅ K_P ⊕ K*_Q ⊕ Y` gives
    /// `c · t^{⟨Q̂−P̂, Ŷ⟩}` on the key `(α+P̂, β+Q̂, Y)`.
    pub fn normalize_dh(
        &self,
        alpha: &[i64],
        beta: &[i64],
        x: &Complex2,
        c: &TCoeff,
    ) -> Result<(DHKey, TCoeff)> {
        let (id, core) = self.cores.classify(&self.cc, x)?;
        let p = self.cc.m.proj_class(&id.plus);
        let qh = self.cc.m.proj_class(&id.star);
        let y = core.kclass();
        let diff: Vec<i64> = qh.iter().zip(&p).map(|(a, b)| a - b).collect();
        let key = DHKey {
            alpha: add_vec(alpha, &p),
            beta: add_vec(beta, &qh),
            core: id.core,
        };
        Ok((key, c * &self.tpow(self.euler.pair(&diff, &y))))
    }

    /// The product `[M] ∗ [N]` of two complexes in the twisted Hall algebra of complexes,
    /// rewritten in normal form.
    pub fn raw_mul(&self, m: &Complex2, n: &Complex2) -> Result<DHElem> {
        let q = self.q();
        let cc = &self.cc;
        let twist = self.euler.pair(&m.layer_class(0), &n.layer_class(0))
            + self.euler.pair(&m.layer_class(1), &n.layer_class(1));
        let hom = num_bigint::BigInt::from(cc.hom_count_c2(m, n));
        let scale = TCoeff::new(
            q,
            num_rational::BigRational::new(1.into(), hom),
            num_rational::BigRational::from_integer(0.into()),
        ) * self.tpow(twist);
        let zero = vec![0; self.n()];
        let mut out = DHElem::zero(q);
        for x in cc.ext1_middles_c2(m, n, self.budgets.ext)? {
            let (k, c) = self.normalize_dh(&zero, &zero, &x, &scale)?;
            out.add_term(k, c);
        }
        Ok(out)
    }

    /// `raw_mul` on registered core representatives, memoized.
    pub fn core_mul(&self, a: &CoreId, b: &CoreId) -> Result<DHElem> {
        let key = (a.clone(), b.clone());
        if let Some(x) = self.core_memo.lock().unwrap().get(&key) {
            return Ok(x.clone());
        }
        let (ma, mb) = (self.core_complex(a)?, self.core_complex(b)?);
        let out = self.raw_mul(&ma, &mb)?;
        self.core_memo
            .lock()
            .unwrap()
            .entry(key)
            .or_insert_with(|| out.clone());
        Ok(out)
    }

    pub fn core_complex(&self, id: &CoreId) -> Result<Complex2> {
        self.cores
            .get(id)
            .ok_or_else(|| Error::Internal(format!("unregistered core {id}")))
    }

    /// `(K_α K*_β [M]) ∗ (K_γ K*_δ [N]) = t^{(δ−γ, M̂)} K_{α+γ} K*_{β+δ} ∗ ([M] ∗ [N])`,
    /// moving `K_γ K*_δ` left past `[M]`.
    pub fn dh_mul_keys(&self, x: &DHKey, y: &DHKey) -> Result<DHElem> {
        let m_hat = self.core_complex(&x.core)?.kclass();
        let d: Vec<i64> = y.beta.iter().zip(&y.alpha).map(|(a, b)| a - b).collect();
        let s = self.tpow(self.euler.sym(&d, &m_hat));
        let alpha = add_vec(&x.alpha, &y.alpha);
        let beta = add_vec(&x.beta, &y.beta);
        let prod = self.core_mul(&x.core, &y.core)?;
        let mut out = DHElem::zero(self.q());
        for (k, c) in prod.iter() {
            let key = DHKey {
                alpha: add_vec(&alpha, &k.alpha),
                beta: add_vec(&beta, &k.beta),
                core: k.core.clone(),
            };
            out.add_term(key, c * &s);
        }
        Ok(out)
    }

    pub fn dh_mul(&self, x: &DHElem, y: &DHElem) -> Result<DHElem> {
        let mut out = DHElem::zero(self.q());
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_scaled(&self.dh_mul_keys(a, b)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// `E_A = t^{⟨P̂1−2P̂2, Â⟩} K_{P̂2−P̂1} K*_{−P̂2} [C_A]`
    pub fn e_of_module(&self, id: &ModuleClassId) -> DHElem {
        let res = self.resolution(id);
        let m = self.m();
        let (p1, p2) = (res.class(m, 1), res.class(m, 2));
        let a = self.dim_vector(id);
        let exp_vec: Vec<i64> = p1.iter().zip(&p2).map(|(x, y)| x - 2 * y).collect();
        let key = DHKey {
            alpha: p2.iter().zip(&p1).map(|(x, y)| x - y).collect(),
            beta: p2.iter().map(|x| -x).collect(),
            core: self.c_of(id).1.clone(),
        };
        DHElem::term(key, self.tpow(self.euler.pair(&exp_vec, &a)))
    }

    pub fn i_plus(&self, x: &HallElem) -> DHElem {
        let mut out = DHElem::zero(self.q());
        for (id, c) in x.iter() {
            out.add_scaled(&self.e_of_module(id), c);
        }
        out
    }

    /// The shift involution: `K_α ↔ K*_α` and `[M] ↦ [M*]`.
    pub fn shift_dh(&self, x: &DHElem) -> Result<DHElem> {
        let mut out = DHElem::zero(self.q());
        for (k, c) in x.iter() {
            let shifted = self.core_complex(&k.core)?.shift();
            let core = self.cores.classify_core(&self.cc, &shifted)?;
            let key = DHKey {
                alpha: k.beta.clone(),
                beta: k.alpha.clone(),
                core,
            };
            out.add_term(key, c.clone());
        }
        Ok(out)
    }

    /// `F_A`, the image of `[A]` under the shifted embedding.
    pub fn f_of_module(&self, id: &ModuleClassId) -> Result<DHElem> {
        self.shift_dh(&self.e_of_module(id))
    }

    /// Set `K_P ∗ K*_P = 1`, so that `K*_β = K_{−β}`.
    pub fn reduce_dh(&self, x: &DHElem) -> DHRedElem {
        x.map_keys(|k| DHRedKey {
            gamma: k.alpha.iter().zip(&k.beta).map(|(a, b)| a - b).collect(),
            core: k.core.clone(),
        })
    }

    pub fn dhred_mul(&self, x: &DHRedElem, y: &DHRedElem) -> Result<DHRedElem> {
        let lift = |e: &DHRedElem| {
            e.map_keys(|k| DHKey {
                alpha: k.gamma.clone(),
                beta: vec![0; self.n()],
                core: k.core.clone(),
            })
        };
        Ok(self.reduce_dh(&self.dh_mul(&lift(x), &lift(y))?))
    }

    /// `K_P` or `K*_P` for a standard projective, as a basis key.
    pub fn k_key(&self, summands: &[usize], kind: AcyclicKind) -> DHKey {
        let p = self.cc.m.proj_class(summands);
        let z = vec![0; self.n()];
        let (alpha, beta) = match kind {
            AcyclicKind::Plus => (p, z),
            AcyclicKind::Star => (z, p),
        };
        DHKey {
            alpha,
            beta,
            core: self.zero_core.clone(),
        }
    }

    /// Ids of the enumerated modules, in id order.
    pub fn module_ids(&self) -> Vec<ModuleClassId> {
        self.universe.ids().cloned().collect()
    }

    /// Ordered pairs whose product stays inside the universe.
    pub fn in_bound_pairs(&self) -> Vec<(ModuleClassId, ModuleClassId)> {
        let ids = self.module_ids();
        let mut out = Vec::new();
        for a in &ids {
            for b in &ids {
                if a.total_dim() + b.total_dim() <= self.bound() {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        out
    }
}

fn add_vec(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}


#[cfg(test)]
mod tests {
    use super::tests_support::*;
    use super::*;
    use crate::testutil::*;

    #[test]
    fn hall_products_over_a2() {
        let lab = lab(A2_F2, 2);
        let m = lab.m();
        let s1 = id_of(&lab, &m.simples[0]);
        let s2 = id_of(&lab, &m.simples[1]);
        let ss = id_of(&lab, &m.simples[0].direct_sum(&m.simples[1]));
        let p1 = id_of(&lab, &m.projectives[0]);
        let t_inv = TCoeff::tpow(2, -1);
        let x = lab.hall_mul_basis(&s1, &s2).unwrap();
        assert_eq!(x.len(), 2);
        assert_eq!(x.coeff(&ss), t_inv);
        assert_eq!(x.coeff(&p1), t_inv);
        let y = lab.hall_mul_basis(&s2, &s1).unwrap();
        assert_eq!(y, HallElem::basis(2, ss));
        let u = lab.hall_unit();
        for id in lab.module_ids() {
            let b = HallElem::basis(2, id);
            assert_eq!(lab.hall_mul(&u, &b).unwrap(), b);
            assert_eq!(lab.hall_mul(&b, &u).unwrap(), b);
        }
        assert!(matches!(
            lab.hall_mul_basis(&p1, &s1),
            Err(Error::BoundExceeded { dim: 3, bound: 2 })
        ));
    }

    #[test]
    fn e_of_module_examples() {
        let lab = lab(A2_F2, 2);
        let m = lab.m();
        assert_eq!(lab.e_of_module(lab.universe.zero_id()), lab.dh_unit());
        let p1 = id_of(&lab, &m.projectives[0]);
        let e = lab.e_of_module(&p1);
        let (k, c) = e.iter().next().unwrap();
        assert!(c.is_one());
        assert_eq!((k.alpha.clone(), k.beta.clone()), (vec![0, 0], vec![0, 0]));
        let s1 = id_of(&lab, &m.simples[0]);
        let e = lab.e_of_module(&s1);
        let (k, c) = e.iter().next().unwrap();
        assert_eq!(k.alpha, vec![0, -1]);
        assert_eq!(k.beta, vec![0, 0]);
        assert_eq!(k.core.as_str(), core_label_of_module(&s1));
        // ⟨(0,1), (1,0)⟩ = 0 over A2
        assert_eq!(*c, TCoeff::tpow(2, lab.euler.pair(&[0, 1], &[1, 0])));
    }

    #[test]
    fn dh_unit_and_k_commutation() {
        let lab = lab(TWO_CYCLE_F2, 2);
        let u = lab.dh_unit();
        for id in lab.module_ids() {
            let e = lab.e_of_module(&id);
            assert_eq!(lab.dh_mul(&u, &e).unwrap(), e);
            assert_eq!(lab.dh_mul(&e, &u).unwrap(), e);
            let m_hat = lab.c_of(&id).0.kclass();
            for v in 0..lab.n() {
                for kind in [AcyclicKind::Plus, AcyclicKind::Star] {
                    let k = DHElem::basis(2, lab.k_key(&[v], kind));
                    let left = lab.dh_mul(&k, &e).unwrap();
                    let right = lab.dh_mul(&e, &k).unwrap();
                    let p = lab.m().alg.projective_class(v);
                    let s = lab.euler.sym(&p, &m_hat);
                    let s = if kind == AcyclicKind::Plus { s } else { -s };
                    assert_eq!(left, right.scale(&TCoeff::tpow(2, s)));
                }
            }
        }
    }

    #[test]
    fn k_plus_times_k_star_is_a_single_key() {
        let lab = lab(A2_F3, 1);
        for v in 0..2 {
            let kp = DHElem::basis(3, lab.k_key(&[v], AcyclicKind::Plus));
            let ks = DHElem::basis(3, lab.k_key(&[v], AcyclicKind::Star));
            let prod = lab.dh_mul(&kp, &ks).unwrap();
            let p = lab.m().alg.projective_class(v);
            let expected = DHKey {
                alpha: p.clone(),
                beta: p,
                core: lab.zero_core().clone(),
            };
            assert_eq!(prod, DHElem::basis(3, expected.clone()));
            let direct = lab
                .raw_mul(
                    &lab.cc.k_standard(&[v], AcyclicKind::Plus),
                    &lab.cc.k_standard(&[v], AcyclicKind::Star),
                )
                .unwrap();
            assert_eq!(direct, DHElem::basis(3, expected));
            assert_eq!(lab.reduce_dh(&prod), lab.reduce_dh(&lab.dh_unit()));
        }
    }

    #[test]
    fn shift_and_reduce() {
        let lab = lab(A2_F2, 2);
        for id in lab.module_ids() {
            let e = lab.e_of_module(&id);
            let f = lab.shift_dh(&e).unwrap();
            assert_eq!(lab.shift_dh(&f).unwrap(), e);
            let (k, _) = e.iter().next().unwrap();
            let (kf, _) = f.iter().next().unwrap();
            assert_eq!((&kf.alpha, &kf.beta), (&k.beta, &k.alpha));
            if !id.is_zero() {
                assert_eq!(kf.core.as_str(), core_label_of_shifted_module(&id));
            }
            let r = lab.reduce_dh(&e);
            let (kr, _) = r.iter().next().unwrap();
            let res = lab.resolution(&id);
            let (p1, p2) = (res.class(lab.m(), 1), res.class(lab.m(), 2));
            let g: Vec<i64> = p1.iter().zip(&p2).map(|(a, b)| 2 * b - a).collect();
            assert_eq!(kr.gamma, g);
        }
        assert_eq!(lab.shift_dh(&lab.dh_unit()).unwrap(), lab.dh_unit());
    }

    #[test]
    fn embedding_on_a2_simples() {
        let lab = lab(A2_F2, 2);
        let m = lab.m();
        let s1 = id_of(&lab, &m.simples[0]);
        let s2 = id_of(&lab, &m.simples[1]);
        let prod = lab.hall_mul_basis(&s1, &s2).unwrap();
        let lhs = lab.i_plus(&prod);
        let rhs = lab
            .dh_mul(&lab.e_of_module(&s1), &lab.e_of_module(&s2))
            .unwrap();
        assert_eq!(lhs, rhs);
        let es: Vec<DHElem> = lab
            .module_ids()
            .iter()
            .map(|i| lab.e_of_module(i))
            .collect();
        assert!(linear_independence_check(&es));
        let rs: Vec<DHRedElem> = es.iter().map(|e| lab.reduce_dh(e)).collect();
        assert!(linear_independence_check(&rs));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;
        use std::sync::OnceLock;

        fn shared() -> &'static Lab {
            static LAB: OnceLock<Lab> = OnceLock::new();
            LAB.get_or_init(|| lab(TWO_CYCLE_F2, 3))
        }

        /// A basis key over a module of dimension at most one, with a small prefix.
        fn key(lab: &Lab, pick: usize, shift: bool, a: &[i64], b: &[i64]) -> DHElem {
            let small: Vec<ModuleClassId> = lab
                .module_ids()
                .into_iter()
                .filter(|i| i.total_dim() <= 1)
                .collect();
            let id = &small[pick % small.len()];
            let e = if shift {
                lab.f_of_module(id).unwrap()
            } else {
                lab.e_of_module(id)
            };
            let (k, _) = e.iter().next().unwrap();
            DHElem::basis(
                lab.q(),
                DHKey {
                    alpha: a.to_vec(),
                    beta: b.to_vec(),
                    core: k.core.clone(),
                },
            )
        }

        fn prefix() -> impl Strategy<Value = Vec<i64>> {
            prop::collection::vec(-2i64..=2, 2)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn reduce_and_shift_are_multiplicative(
                i in 0usize..8, j in 0usize..8, si: bool, sj: bool,
                a1 in prefix(), b1 in prefix(), a2 in prefix(), b2 in prefix(),
            ) {
                let lab = shared();
                let x = key(lab, i, si, &a1, &b1);
                let y = key(lab, j, sj, &a2, &b2);
                let xy = lab.dh_mul(&x, &y).unwrap();
                let red = lab.dhred_mul(&lab.reduce_dh(&x), &lab.reduce_dh(&y)).unwrap();
                prop_assert_eq!(lab.reduce_dh(&xy), red);
                let sh = lab
                    .dh_mul(&lab.shift_dh(&x).unwrap(), &lab.shift_dh(&y).unwrap())
                    .unwrap();
                prop_assert_eq!(lab.shift_dh(&xy).unwrap(), sh);
            }

            #[test]
            fn k_alpha_commutation(i in 0usize..8, s: bool, a in prefix(), b in prefix(), alpha in prefix()) {
                let lab = shared();
                let m = key(lab, i, s, &a, &b);
                let (mk, _) = m.iter().next().unwrap();
                let m_hat = lab.core_complex(&mk.core).unwrap().kclass();
                let zero = vec![0; 2];
                let kp = DHElem::basis(lab.q(), DHKey { alpha: alpha.clone(), beta: zero.clone(), core: lab.zero_core().clone() });
                let ks = DHElem::basis(lab.q(), DHKey { alpha: zero, beta: alpha.clone(), core: lab.zero_core().clone() });
                let sym = lab.euler.sym(&alpha, &m_hat);
                prop_assert_eq!(
                    lab.dh_mul(&kp, &m).unwrap(),
                    lab.dh_mul(&m, &kp).unwrap().scale(&TCoeff::tpow(lab.q(), sym))
                );
                prop_assert_eq!(
                    lab.dh_mul(&ks, &m).unwrap(),
                    lab.dh_mul(&m, &ks).unwrap().scale(&TCoeff::tpow(lab.q(), -sym))
                );
            }
        }
    }
}
