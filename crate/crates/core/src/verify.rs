//! The verification suite: every check runs over the enumerated universe and records
//! counterexamples with both sides expanded in normal form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algdef::AlgebraData;
use crate::cpx2::{AcyclicKind, Complex2};
use crate::error::{Error, Result};
use crate::ffalg::TCoeff;
use crate::hall::{linear_independence_check, Budgets, DHElem, DHKey, DHRedElem, HallElem, Lab};
use crate::modcat::{
    aut_order, combine, hall_number_oracle, hom_basis, hom_dim, is_isomorphic, ModCat,
    ModuleClassId, Morphism, Representation,
};
use crate::quiver::Quiver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Main,
    Reduced,
    Shifted,
    Phi,
    Extiso,
    Epad,
    Relations,
    Rp,
    Assoc,
    Structure,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::Main,
        Check::Reduced,
        Check::Shifted,
        Check::Phi,
        Check::Extiso,
        Check::Epad,
        Check::Relations,
        Check::Rp,
        Check::Assoc,
        Check::Structure,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Main => "main",
            Check::Reduced => "reduced",
            Check::Shifted => "shifted",
            Check::Phi => "phi",
            Check::Extiso => "extiso",
            Check::Epad => "epad",
            Check::Relations => "relations",
            Check::Rp => "rp",
            Check::Assoc => "assoc",
            Check::Structure => "structure",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub bound: usize,
    pub checks: Vec<Check>,
    pub budgets: Budgets,
    pub seed: u64,
    pub assoc_samples: usize,
    pub timings: bool,
}

impl VerifyConfig {
    pub fn new(bound: usize) -> Self {
        VerifyConfig {
            bound,
            checks: Check::ALL.to_vec(),
            budgets: Budgets::default(),
            seed: 0,
            assoc_samples: 200,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub key: String,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pairs_tested: u64,
    pub failures: Vec<Counterexample>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GldimCertificate {
    /// `None` when some simple has no projective resolution of length at most two.
    pub value: Option<usize>,
    pub simple_resolution_lengths: Vec<Option<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub algebra_fingerprint: String,
    pub q: u32,
    pub bound: usize,
    pub gldim: GldimCertificate,
    pub modules_enumerated: usize,
    pub pairs_tested: BTreeMap<String, u64>,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u128>>,
}

impl VerifyReport {
    /// 0 when everything passed, 1 on a mathematical counterexample, 2 on a resource or
    /// validation error.
    pub fn exit_code(&self) -> i32 {
        if self.error.is_some() {
            2
        } else if self.passed {
            0
        } else {
            1
        }
    }
}

/// SHA-256 of a canonical description of the presented algebra.
pub fn algebra_fingerprint(q: &Quiver) -> String {
    let canon = json!({
        "field": q.field.q(),
        "vertices": q.vertices,
        "arrows": q.arrows.iter().map(|a| json!([a.name, a.source, a.target])).collect::<Vec<_>>(),
        "relations": q.relations.iter().map(|r| &r.terms).collect::<Vec<_>>(),
    });
    hex::encode(Sha256::digest(canon.to_string().as_bytes()))
}

pub fn gldim_certificate(m: &ModCat) -> GldimCertificate {
    let lengths: Vec<Option<usize>> = m
        .simples
        .iter()
        .map(|s| m.minimal_resolution(s).ok().map(|r| r.length()))
        .collect();
    let value = lengths
        .iter()
        .try_fold(0usize, |acc, l| l.map(|l| acc.max(l)));
    GldimCertificate {
        value,
        simple_resolution_lengths: lengths,
    }
}

/// Build the universe and run the selected checks. Errors end up in the report.
pub fn run_verify(alg: AlgebraData, cfg: &VerifyConfig) -> VerifyReport {
    let quiver = alg.quiver().clone();
    let q = quiver.field.q();
    let gldim = gldim_certificate(&ModCat::new(alg.clone()));
    let mut report = VerifyReport {
        algebra_fingerprint: algebra_fingerprint(&quiver),
        q,
        bound: cfg.bound,
        gldim,
        modules_enumerated: 0,
        pairs_tested: BTreeMap::new(),
        checks: Vec::new(),
        passed: false,
        error: None,
        timings_ms: cfg.timings.then(BTreeMap::new),
    };
    let start = Instant::now();
    let lab = match Lab::new(alg, cfg.bound, cfg.budgets) {
        Ok(l) => l,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    };
    report.modules_enumerated = lab.universe.len();
    if let Some(t) = report.timings_ms.as_mut() {
        t.insert("setup".into(), start.elapsed().as_millis());
    }
    for &check in &cfg.checks {
        let start = Instant::now();
        match run_check(&lab, check, cfg) {
            Ok(r) => {
                report.pairs_tested.insert(r.name.clone(), r.pairs_tested);
                report.checks.push(r);
            }
            Err(e) => {
                report.error = Some(format!("{check}: {e}"));
                break;
            }
        }
        if let Some(t) = report.timings_ms.as_mut() {
            t.insert(check.to_string(), start.elapsed().as_millis());
        }
    }
    report.passed = report.error.is_none() && report.checks.iter().all(|c| c.passed());
    report
}

pub fn run_check(lab: &Lab, check: Check, cfg: &VerifyConfig) -> Result<CheckResult> {
    let (pairs_tested, failures) = match check {
        Check::Main => check_main(lab)?,
        Check::Reduced => check_reduced(lab)?,
        Check::Shifted => check_shifted(lab)?,
        Check::Phi => check_phi(lab)?,
        Check::Extiso => check_extiso(lab)?,
        Check::Epad => check_epad(lab, cfg.seed)?,
        Check::Relations => check_relations(lab)?,
        Check::Rp => check_rp(lab)?,
        Check::Assoc => check_assoc(lab, cfg.seed, cfg.assoc_samples)?,
        Check::Structure => check_structure(lab)?,
    };
    Ok(CheckResult {
        name: check.to_string(),
        pairs_tested,
        failures,
    })
}

type Outcome = (u64, Vec<Counterexample>);

fn cex<A: Serialize, B: Serialize>(key: String, lhs: &A, rhs: &B) -> Counterexample {
    Counterexample {
        key,
        lhs: serde_json::to_value(lhs).unwrap_or(Value::Null),
        rhs: serde_json::to_value(rhs).unwrap_or(Value::Null),
    }
}

/// Run `f` on every item in parallel, keeping input order in the output.
fn collect_failures<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Result<Vec<Counterexample>> + Sync + Send,
) -> Result<Outcome> {
    let per: Vec<Result<Vec<Counterexample>>> = items.par_iter().map(f).collect();
    let mut out = Vec::new();
    for r in per {
        out.extend(r?);
    }
    Ok((items.len() as u64, out))
}

fn pair_key(a: &ModuleClassId, b: &ModuleClassId) -> String {
    format!("{a} * {b}")
}

fn independence_failure<K: Ord + Clone + Serialize>(
    what: &str,
    elems: &[crate::hall::LinComb<K>],
) -> Option<Counterexample> {
    (!linear_independence_check(elems))
        .then(|| cex(format!("{what} linearly dependent"), &elems, &Value::Null))
}

fn check_main(lab: &Lab) -> Result<Outcome> {
    let (n, mut fails) = collect_failures(&lab.in_bound_pairs(), |(a, b)| {
        let lhs = lab.i_plus(&lab.hall_mul_basis(a, b)?);
        let rhs = lab.dh_mul(&lab.e_of_module(a), &lab.e_of_module(b))?;
        Ok(if lhs == rhs {
            vec![]
        } else {
            vec![cex(pair_key(a, b), &lhs, &rhs)]
        })
    })?;
    let es: Vec<DHElem> = lab
        .module_ids()
        .iter()
        .map(|i| lab.e_of_module(i))
        .collect();
    fails.extend(independence_failure("E_A", &es));
    Ok((n, fails))
}

fn check_reduced(lab: &Lab) -> Result<Outcome> {
    let (n, mut fails) = collect_failures(&lab.in_bound_pairs(), |(a, b)| {
        let lhs = lab.reduce_dh(&lab.i_plus(&lab.hall_mul_basis(a, b)?));
        let ea = lab.reduce_dh(&lab.e_of_module(a));
        let eb = lab.reduce_dh(&lab.e_of_module(b));
        let rhs = lab.dhred_mul(&ea, &eb)?;
        Ok(if lhs == rhs {
            vec![]
        } else {
            vec![cex(pair_key(a, b), &lhs, &rhs)]
        })
    })?;
    let rs: Vec<DHRedElem> = lab
        .module_ids()
        .iter()
        .map(|i| lab.reduce_dh(&lab.e_of_module(i)))
        .collect();
    fails.extend(independence_failure("reduced E_A", &rs));
    Ok((n, fails))
}

fn check_shifted(lab: &Lab) -> Result<Outcome> {
    let (n, mut fails) = collect_failures(&lab.in_bound_pairs(), |(a, b)| {
        let lhs = lab.shift_dh(&lab.i_plus(&lab.hall_mul_basis(a, b)?))?;
        let rhs = lab.dh_mul(&lab.f_of_module(a)?, &lab.f_of_module(b)?)?;
        Ok(if lhs == rhs {
            vec![]
        } else {
            vec![cex(pair_key(a, b), &lhs, &rhs)]
        })
    })?;
    let fs = lab
        .module_ids()
        .iter()
        .map(|i| lab.f_of_module(i))
        .collect::<Result<Vec<DHElem>>>()?;
    fails.extend(independence_failure("F_A", &fs));
    Ok((n, fails))
}

fn all_pairs(lab: &Lab) -> Vec<(ModuleClassId, ModuleClassId)> {
    let ids = lab.module_ids();
    ids.iter()
        .flat_map(|a| ids.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

/// `|Hom_{C2}(C_{A1}, C_{A2})| · |Hom(P0,Q2)| = |Hom(A1,A2)| · |Hom(P2,Q0)| · |Hom(P1,Q2)| · |Hom(P0,Q1)|`
fn check_phi(lab: &Lab) -> Result<Outcome> {
    let quiver = lab.m().quiver();
    let q = BigUint::from(lab.q());
    collect_failures(&all_pairs(lab), |(a, b)| {
        let (ra, rb) = (lab.resolution(a), lab.resolution(b));
        let h = |x: &Representation, y: &Representation| q.pow(hom_dim(quiver, x, y) as u32);
        let lhs = lab.cc.hom_count_c2(&lab.c_of(a).0, &lab.c_of(b).0) * h(&ra.reps[0], &rb.reps[2]);
        let rhs = h(lab.rep(a), lab.rep(b))
            * h(&ra.reps[2], &rb.reps[0])
            * h(&ra.reps[1], &rb.reps[2])
            * h(&ra.reps[0], &rb.reps[1]);
        Ok(if lhs == rhs {
            vec![]
        } else {
            vec![cex(pair_key(a, b), &lhs.to_string(), &rhs.to_string())]
        })
    })
}

/// `Ext¹_{C2}(C_{A1}, C_{A2}) ≅ Ext¹(A1, A2)`; for pairs in bound, also the middle terms
/// of the complex extensions have homology `(B, 0)` with the same tally as the module ones.
fn check_extiso(lab: &Lab) -> Result<Outcome> {
    let m = lab.m();
    collect_failures(&all_pairs(lab), |(a, b)| {
        let (ca, cb) = (&lab.c_of(a).0, &lab.c_of(b).0);
        let dc = lab.cc.ext_space_c2(ca, cb)?.dim();
        let dm = m.ext_space(lab.resolution(a), lab.rep(b))?.dim();
        let mut fails = Vec::new();
        if dc != dm {
            fails.push(cex(format!("dim Ext {}", pair_key(a, b)), &dc, &dm));
        }
        if a.total_dim() + b.total_dim() <= lab.bound() && dc == dm {
            let modules = lab.universe.ext1_with_middles(
                m,
                lab.resolution(a),
                lab.rep(b),
                lab.budgets.ext,
            )?;
            let mut complexes: BTreeMap<String, u128> = BTreeMap::new();
            for x in lab.cc.ext1_middles_c2(ca, cb, lab.budgets.ext)? {
                let (h0, h1) = x.homology(m)?;
                let label = if h1.is_zero() {
                    lab.universe.classify(m, &h0)?.to_string()
                } else {
                    "H1 nonzero".to_string()
                };
                *complexes.entry(label).or_insert(0) += 1;
            }
            let modules: BTreeMap<String, u128> = modules
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect();
            if modules != complexes {
                fails.push(cex(
                    format!("middles {}", pair_key(a, b)),
                    &complexes,
                    &modules,
                ));
            }
        }
        Ok(fails)
    })
}

/// Multisets of vertices whose standard projective has total dimension at most `cap`.
pub fn small_projective_sums(m: &ModCat, cap: usize) -> Vec<Vec<usize>> {
    let dims: Vec<usize> = m.projectives.iter().map(|p| p.total_dim()).collect();
    let mut out = Vec::new();
    fn rec(v: usize, left: usize, dims: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for w in v..dims.len() {
            if dims[w] <= left {
                cur.push(w);
                rec(w, left - dims[w], dims, cur, out);
                cur.pop();
            }
        }
    }
    rec(0, cap, &dims, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn random_automorphism(quiver: &Quiver, r: &Representation, rng: &mut ChaCha8Rng) -> Morphism {
    let basis = hom_basis(quiver, r, r);
    let template = Morphism::zero(r, r);
    let q = r.field.q();
    loop {
        let coeffs: Vec<u8> = (0..basis.len())
            .map(|_| rng.gen_range(0..q) as u8)
            .collect();
        let g = combine(&basis, &coeffs, &template);
        if g.is_iso() {
            return g;
        }
    }
}

/// Normalizing the complex of a padded resolution, scrambled by random automorphisms of
/// both layers, reproduces `E_A`.
fn check_epad(lab: &Lab, seed: u64) -> Result<Outcome> {
    let m = lab.m();
    let pads = small_projective_sums(m, 2);
    let mut items = Vec::new();
    for id in lab.module_ids() {
        for r0 in &pads {
            for r1 in &pads {
                items.push((items.len() as u64, id.clone(), r0.clone(), r1.clone()));
            }
        }
    }
    collect_failures(&items, |(i, id, r0, r1)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ i.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let res = lab.resolution(id);
        let padded = lab.cc.c_of_module_padded(res, r0, r1);
        let g1 = random_automorphism(m.quiver(), &padded.m1, &mut rng);
        let g0 = random_automorphism(m.quiver(), &padded.m0, &mut rng);
        let x = lab.cc.conjugate(&padded, &g1, &g0);
        let (r0h, r1h) = (m.proj_class(r0), m.proj_class(r1));
        let p1: Vec<i64> = zip3(&res.class(m, 1), &r0h, &r1h, |a, b, c| a + b + c);
        let p2: Vec<i64> = zip3(&res.class(m, 2), &r1h, &r1h, |a, b, _| a + b);
        let alpha: Vec<i64> = p2.iter().zip(&p1).map(|(a, b)| a - b).collect();
        let beta: Vec<i64> = p2.iter().map(|a| -a).collect();
        let exp: Vec<i64> = p1.iter().zip(&p2).map(|(a, b)| a - 2 * b).collect();
        let c = TCoeff::tpow(lab.q(), lab.euler.pair(&exp, &lab.dim_vector(id)));
        let (k, c) = lab.normalize_dh(&alpha, &beta, &x, &c)?;
        let lhs = DHElem::term(k, c);
        let rhs = lab.e_of_module(id);
        Ok(if lhs == rhs {
            vec![]
        } else {
            vec![cex(format!("{id} R0={r0:?} R1={r1:?}"), &lhs, &rhs)]
        })
    })
}

fn zip3(a: &[i64], b: &[i64], c: &[i64], f: impl Fn(i64, i64, i64) -> i64) -> Vec<i64> {
    a.iter()
        .zip(b)
        .zip(c)
        .map(|((x, y), z)| f(*x, *y, *z))
        .collect()
}

/// The relations between `K_P`, `K*_P` and an acyclic-free complex `M`, checked on actual
/// complexes, and the normal-form product checked against them.
fn check_relations(lab: &Lab) -> Result<Outcome> {
    let m = lab.m();
    let n = lab.n();
    let mut ps: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for v in 0..n {
        for w in v..n {
            ps.push(vec![v, w]);
        }
    }
    let mut ms: Vec<(String, Complex2)> = Vec::new();
    for id in lab.module_ids() {
        let (c, core) = lab.c_of(&id);
        ms.push((core.to_string(), c.clone()));
        if !id.is_zero() {
            ms.push((format!("{core}*"), c.shift()));
        }
    }
    let mut items = Vec::new();
    for p in &ps {
        for mm in &ms {
            items.push((p.clone(), mm.clone()));
        }
    }
    let (count, mut fails) = collect_failures(&items, |(p, (name, x))| {
        let q = lab.q();
        let zero = vec![0; n];
        let ph = m.proj_class(p);
        let xh = x.kclass();
        let tp = |k: i64| TCoeff::tpow(q, k);
        let kp = lab.cc.k_standard(p, AcyclicKind::Plus);
        let ks = lab.cc.k_standard(p, AcyclicKind::Star);
        let norm = |y: &Complex2| -> Result<DHElem> {
            let (k, c) = lab.normalize_dh(&zero, &zero, y, &TCoeff::one(q))?;
            Ok(DHElem::term(k, c))
        };
        let sum_p = norm(&kp.direct_sum(x, m))?;
        let sum_s = norm(&ks.direct_sum(x, m))?;
        let kp_x = lab.raw_mul(&kp, x)?;
        let x_kp = lab.raw_mul(x, &kp)?;
        let ks_x = lab.raw_mul(&ks, x)?;
        let x_ks = lab.raw_mul(x, &ks)?;
        let pair_px = lab.euler.pair(&ph, &xh);
        let pair_xp = lab.euler.pair(&xh, &ph);
        let sym = lab.euler.sym(&ph, &xh);

        let xkey = norm(x)?;
        let kpk = DHElem::basis(q, lab.k_key(p, AcyclicKind::Plus));
        let ksk = DHElem::basis(q, lab.k_key(p, AcyclicKind::Star));

        let checks: [(&str, DHElem, DHElem); 10] = [
            ("K_P*M", kp_x.clone(), sum_p.scale(&tp(pair_px))),
            ("M*K_P", x_kp.clone(), sum_p.scale(&tp(-pair_xp))),
            ("K_P*M vs M*K_P", kp_x.clone(), x_kp.scale(&tp(sym))),
            ("K*_P*M vs M*K*_P", ks_x.clone(), x_ks.scale(&tp(-sym))),
            ("K*_P*M", ks_x.clone(), sum_s.scale(&tp(-pair_px))),
            ("M*K*_P", x_ks.clone(), sum_s.scale(&tp(pair_xp))),
            ("normal form K_P*M", lab.dh_mul(&kpk, &xkey)?, kp_x),
            ("normal form M*K_P", lab.dh_mul(&xkey, &kpk)?, x_kp),
            ("normal form K*_P*M", lab.dh_mul(&ksk, &xkey)?, ks_x),
            ("normal form M*K*_P", lab.dh_mul(&xkey, &ksk)?, x_ks),
        ];
        Ok(checks
            .into_iter()
            .filter(|(_, l, r)| l != r)
            .map(|(what, l, r)| cex(format!("{what} P={p:?} M={name}"), &l, &r))
            .collect())
    })?;

    // products of acyclics
    let mut kk = Vec::new();
    for p in &ps {
        for r in &ps {
            kk.push((p.clone(), r.clone()));
        }
    }
    let (count2, fails2) = collect_failures(&kk, |(p, r)| {
        let q = lab.q();
        let zero = vec![0; n];
        let mut out = Vec::new();
        for kind in [AcyclicKind::Plus, AcyclicKind::Star] {
            let a = lab.cc.k_standard(p, AcyclicKind::Plus);
            let b = lab.cc.k_standard(r, kind);
            let lhs = lab.raw_mul(&a, &b)?;
            let (k, c) = lab.normalize_dh(&zero, &zero, &a.direct_sum(&b, m), &TCoeff::one(q))?;
            let rhs = DHElem::term(k, c);
            if lhs != rhs {
                out.push(cex(format!("K_P*K{kind:?}_Q P={p:?} Q={r:?}"), &lhs, &rhs));
            }
        }
        Ok(out)
    })?;
    fails.extend(fails2);
    Ok((count + count2, fails))
}

/// Riedtmann's formula against direct submodule counting, plus `g^{S⊕S}_{S,S} = q+1`.
fn check_rp(lab: &Lab) -> Result<Outcome> {
    let m = lab.m();
    let quiver = m.quiver();
    let budget = lab.budgets.raw;
    let mut auts: BTreeMap<ModuleClassId, u128> = BTreeMap::new();
    for id in lab.module_ids() {
        auts.insert(
            id.clone(),
            aut_order(quiver, lab.rep(&id), lab.budgets.iso)?,
        );
    }
    let mut triples = Vec::new();
    for (a, c) in lab.in_bound_pairs() {
        let dims: Vec<u8> = a.dims().iter().zip(c.dims()).map(|(x, y)| x + y).collect();
        for b in lab.module_ids() {
            if b.dims() == dims.as_slice() {
                triples.push((a.clone(), b, c.clone()));
            }
        }
    }
    let q = lab.q() as u128;
    let (count, mut fails) = collect_failures(&triples, |(a, b, c)| {
        let (ra, rb, rc) = (lab.rep(a), lab.rep(b), lab.rep(c));
        let g = hall_number_oracle(m, ra, rb, rc, budget)?;
        let ext = lab
            .universe
            .ext1_with_middles(m, lab.resolution(a), rc, lab.budgets.ext)?
            .get(b)
            .copied()
            .unwrap_or(0);
        let hom = BigInt::from(q).pow(hom_dim(quiver, ra, rc) as u32);
        let formula = BigRational::new(
            BigInt::from(ext) * BigInt::from(auts[b]),
            hom * BigInt::from(auts[a]) * BigInt::from(auts[c]),
        );
        let g = BigRational::from_integer(BigInt::from(g));
        Ok(if g == formula {
            vec![]
        } else {
            vec![cex(
                format!("g^{b}_{{{a},{c}}}"),
                &g.to_string(),
                &formula.to_string(),
            )]
        })
    })?;
    if lab.bound() >= 2 {
        for s in &m.simples {
            let ss = s.direct_sum(s);
            let g = hall_number_oracle(m, s, &ss, s, budget)?;
            if g != q + 1 {
                fails.push(cex(format!("g^(S+S)_(S,S) at q={q}"), &g, &(q + 1)));
            }
        }
    }
    Ok((count, fails))
}

/// Sampled triples whose total module dimension stays in bound.
fn sample_triples(lab: &Lab, rng: &mut ChaCha8Rng, k: usize) -> Vec<[ModuleClassId; 3]> {
    let ids = lab.module_ids();
    let mut all = Vec::new();
    for a in &ids {
        for b in &ids {
            for c in &ids {
                if a.total_dim() + b.total_dim() + c.total_dim() <= lab.bound() {
                    all.push([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
    }
    if all.is_empty() {
        return all;
    }
    (0..k)
        .map(|_| all[rng.gen_range(0..all.len())].clone())
        .collect()
}

/// Random basis key over the module `id`: `E_A` or `F_A`, with a random small prefix.
fn random_key(lab: &Lab, id: &ModuleClassId, rng: &mut ChaCha8Rng) -> Result<DHElem> {
    let e = if rng.gen_bool(0.5) {
        lab.e_of_module(id)
    } else {
        lab.f_of_module(id)?
    };
    let (k, _) = e.iter().next().expect("single key");
    let mut v = || {
        (0..lab.n())
            .map(|_| rng.gen_range(-1..=1))
            .collect::<Vec<i64>>()
    };
    let key = DHKey {
        alpha: v(),
        beta: v(),
        core: k.core.clone(),
    };
    Ok(DHElem::basis(lab.q(), key))
}

fn check_assoc(lab: &Lab, seed: u64, samples: usize) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hall_triples = sample_triples(lab, &mut rng, samples);
    let dh_triples = sample_triples(lab, &mut rng, samples)
        .into_iter()
        .map(|t| {
            Ok([
                random_key(lab, &t[0], &mut rng)?,
                random_key(lab, &t[1], &mut rng)?,
                random_key(lab, &t[2], &mut rng)?,
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    let q = lab.q();
    let (n1, mut fails) = collect_failures(&hall_triples, |[a, b, c]| {
        let (x, y, z) = (
            HallElem::basis(q, a.clone()),
            HallElem::basis(q, b.clone()),
            HallElem::basis(q, c.clone()),
        );
        let lhs = lab.hall_mul(&lab.hall_mul(&x, &y)?, &z)?;
        let rhs = lab.hall_mul(&x, &lab.hall_mul(&y, &z)?)?;
        Ok(if lhs == rhs {
            vec![]
        } else {
            vec![cex(format!("hall ({a} {b} {c})"), &lhs, &rhs)]
        })
    })?;
    let (n2, f2) = collect_failures(&dh_triples, |[x, y, z]| {
        let lhs = lab.dh_mul(&lab.dh_mul(x, y)?, z)?;
        let rhs = lab.dh_mul(x, &lab.dh_mul(y, z)?)?;
        Ok(if lhs == rhs {
            vec![]
        } else {
            vec![cex(format!("dh ({x} {y} {z})"), &lhs, &rhs)]
        })
    })?;
    fails.extend(f2);
    Ok((n1 + n2, fails))
}

/// Homology and class of `C_A`, minimal complexes have no acyclic summand, and the Euler
/// form matches `dim Hom − dim Ext¹ + dim Ext²`.
fn check_structure(lab: &Lab) -> Result<Outcome> {
    let m = lab.m();
    let quiver = m.quiver();
    let ids = lab.module_ids();
    let (n1, mut fails) = collect_failures(&ids, |id| {
        let mut out = Vec::new();
        let (c, _) = lab.c_of(id);
        let a = lab.rep(id);
        let (h0, h1) = c.homology(m)?;
        if !h1.is_zero() || !is_isomorphic(quiver, &h0, a, m.iso_budget)? {
            out.push(cex(
                format!("homology C_{id}"),
                &(h0.dims, h1.dims),
                &a.dims,
            ));
        }
        if c.kclass() != ModCat::dim_vector(a) {
            out.push(cex(format!("class C_{id}"), &c.kclass(), &a.dims));
        }
        if lab.resolution(id).minimal {
            let s = lab.cc.strip_acyclics(c)?;
            if !s.plus.is_empty() || !s.star.is_empty() {
                out.push(cex(
                    format!("strip C_{id}"),
                    &(s.plus, s.star),
                    &Value::Null,
                ));
            }
        }
        Ok(out)
    })?;
    let (n2, f2) = collect_failures(&all_pairs(lab), |(a, b)| {
        let (ra, rb) = (lab.rep(a), lab.rep(b));
        let res = lab.resolution(a);
        let lhs = lab
            .euler
            .pair(&ModCat::dim_vector(ra), &ModCat::dim_vector(rb));
        let rhs = hom_dim(quiver, ra, rb) as i64 - m.ext_space(res, rb)?.dim() as i64
            + m.ext2_dim(res, rb)? as i64;
        Ok(if lhs == rhs {
            vec![]
        } else {
            vec![cex(format!("euler {}", pair_key(a, b)), &lhs, &rhs)]
        })
    })?;
    fails.extend(f2);
    Ok((n1 + n2, fails))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.as_str().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn small_projective_sums_a2() {
        let m = ModCat::new(algebra(A2_F2));
        // P(1) has dimension 2, P(2) dimension 1
        let sums = small_projective_sums(&m, 2);
        assert_eq!(sums, vec![vec![], vec![0], vec![1], vec![1, 1]]);
    }

    #[test]
    fn fingerprint_is_stable_and_distinguishes() {
        let a = algebra(A2_F2);
        let b = algebra(A2_F3);
        assert_eq!(
            algebra_fingerprint(a.quiver()),
            algebra_fingerprint(algebra(A2_F2).quiver())
        );
        assert_ne!(
            algebra_fingerprint(a.quiver()),
            algebra_fingerprint(b.quiver())
        );
        assert_eq!(algebra_fingerprint(a.quiver()).len(), 64);
    }

    #[test]
    fn full_suite_on_a2_bound_2() {
        let report = run_verify(algebra(A2_F2), &VerifyConfig::new(2));
        for c in &report.checks {
            assert!(c.passed(), "{} failed: {:?}", c.name, c.failures.first());
        }
        assert_eq!(report.exit_code(), 0);
        assert_eq!(report.gldim.value, Some(1));
        assert_eq!(report.checks.len(), Check::ALL.len());
    }

    #[test]
    fn infinite_global_dimension_is_reported() {
        // A4 linear with all length-two paths killed: S1 has projective dimension 3
        let text = r#"{"q":2,"vertices":["1","2","3","4"],
          "arrows":[{"name":"a","from":"1","to":"2"},{"name":"b","from":"2","to":"3"},
                    {"name":"c","from":"3","to":"4"}],
          "relations":[[{"coef":1,"path":["a","b"]}],[{"coef":1,"path":["b","c"]}]]}"#;
        let report = run_verify(algebra(text), &VerifyConfig::new(1));
        assert_eq!(report.exit_code(), 2);
        assert_eq!(report.gldim.value, None);
        assert!(report.error.unwrap().contains("global dimension"));
    }
}
