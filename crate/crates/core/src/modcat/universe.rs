use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ffalg::{for_each_vector, Mat};

use super::{find_isomorphism, fingerprint, Fingerprint, ModCat, Representation};

pub const DEFAULT_RAW_BUDGET: u128 = 10_000_000;

/// Isomorphism class of a module: the byte encoding of the lexicographically least
/// representative among all representations in the class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleClassId {
    bytes: Vec<u8>,
    nv: usize,
    /// Number of entries of each arrow matrix, to split `bytes` for display.
    arrow_sizes: Vec<usize>,
}

impl ModuleClassId {
    pub fn from_rep(r: &Representation) -> Self {
        ModuleClassId {
            bytes: r.encode(),
            nv: r.dims.len(),
            arrow_sizes: r.mats.iter().map(|m| m.data().len()).collect(),
        }
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn dims(&self) -> &[u8] {
        &self.bytes[..self.nv]
    }

    pub fn total_dim(&self) -> usize {
        self.dims().iter().map(|&d| d as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
}

/// `(1,1)[1]`: dimension vector, then each arrow matrix row-major, separated by `|`.
impl fmt::Display for ModuleClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.dims().iter().map(|d| d.to_string()).collect();
        write!(f, "({})[", dims.join(","))?;
        let mut off = self.nv;
        for (i, &n) in self.arrow_sizes.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for &b in &self.bytes[off..off + n] {
                write!(f, "{b}")?;
            }
            off += n;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for ModuleClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ModuleClassId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug)]
pub struct ModuleClass {
    pub id: ModuleClassId,
    pub rep: Representation,
    pub fingerprint: Fingerprint,
}

/// All isomorphism classes of modules up to a total-dimension bound.
#[derive(Debug)]
pub struct ModuleUniverse {
    pub bound: usize,
    /// Sorted by id.
    pub classes: Vec<ModuleClass>,
    index: HashMap<ModuleClassId, usize>,
    buckets: HashMap<Fingerprint, Vec<usize>>,
    cache: Mutex<HashMap<Vec<u8>, ModuleClassId>>,
    pub raw_count: u128,
}

fn dim_vectors(n: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn rec(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for d in 0..=left {
            cur[i] = d;
            rec(i + 1, left - d, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, bound, &mut cur, &mut out);
    out
}

impl ModuleUniverse {
    /// Enumerate every representation with total dimension `<= bound`, in increasing
    /// encoding order, and partition by isomorphism. The first member met in each class is
    /// its least encoding.
    pub fn enumerate(m: &ModCat, bound: usize, raw_budget: u128) -> Result<Self> {
        let quiver = m.quiver();
        let f = m.field();
        let dvs = dim_vectors(m.num_vertices(), bound);
        let mut raw_count: u128 = 0;
        for d in &dvs {
            let entries: usize = quiver
                .arrows
                .iter()
                .map(|a| d[a.source] * d[a.target])
                .sum();
            let n = f.pow_count(entries).unwrap_or(u128::MAX);
            raw_count = raw_count.saturating_add(n);
        }
        if raw_count > raw_budget {
            return Err(Error::SearchBudgetExceeded {
                what: "module enumeration",
                needed: raw_count,
                budget: raw_budget,
            });
        }

        let per_dv: Vec<Result<Vec<ModuleClass>>> =
            dvs.par_iter().map(|d| classes_with_dims(m, d)).collect();
        let mut classes = Vec::new();
        for r in per_dv {
            classes.extend(r?);
        }
        classes.sort_by(|a, b| a.id.cmp(&b.id));
        let index = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.id.clone(), i))
            .collect();
        let mut buckets: HashMap<Fingerprint, Vec<usize>> = HashMap::new();
        for (i, c) in classes.iter().enumerate() {
            buckets.entry(c.fingerprint.clone()).or_default().push(i);
        }
        Ok(ModuleUniverse {
            bound,
            classes,
            index,
            buckets,
            cache: Mutex::new(HashMap::new()),
            raw_count,
        })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = &ModuleClassId> {
        self.classes.iter().map(|c| &c.id)
    }

    pub fn get(&self, id: &ModuleClassId) -> Option<&ModuleClass> {
        self.index.get(id).map(|&i| &self.classes[i])
    }

    pub fn rep(&self, id: &ModuleClassId) -> &Representation {
        &self.get(id).expect("id from this universe").rep
    }

    pub fn zero_id(&self) -> &ModuleClassId {
        &self.classes[0].id
    }

    /// Class of an arbitrary module within the bound.
    pub fn classify(&self, m: &ModCat, r: &Representation) -> Result<ModuleClassId> {
        let dim = r.total_dim();
        if dim > self.bound {
            return Err(Error::BoundExceeded {
                dim,
                bound: self.bound,
            });
        }
        let key = r.encode();
        if let Some(id) = self.cache.lock().unwrap().get(&key) {
            return Ok(id.clone());
        }
        let fp = fingerprint(m.quiver(), r);
        let id = match self.buckets.get(&fp) {
            Some(b) if b.len() == 1 => self.classes[b[0]].id.clone(),
            Some(b) => {
                let mut found = None;
                for &i in b {
                    let c = &self.classes[i];
                    let ends = Some((fp.end_dim, c.fingerprint.end_dim));
                    if find_isomorphism(m.quiver(), r, &c.rep, ends, m.iso_budget)?.is_some() {
                        found = Some(c.id.clone());
                        break;
                    }
                }
                found.ok_or_else(|| Error::Internal("module missing from the universe".into()))?
            }
            None => return Err(Error::Internal("module missing from the universe".into())),
        };
        self.cache.lock().unwrap().insert(key, id.clone());
        Ok(id)
    }

    /// Classes of `a ⊕ b`, for closure checks.
    pub fn direct_sum_id(
        &self,
        m: &ModCat,
        a: &ModuleClassId,
        b: &ModuleClassId,
    ) -> Result<ModuleClassId> {
        self.classify(m, &self.rep(a).direct_sum(self.rep(b)))
    }

    /// Number of classes per dimension vector.
    pub fn census(&self) -> BTreeMap<Vec<u8>, usize> {
        let mut out = BTreeMap::new();
        for c in &self.classes {
            *out.entry(c.id.dims().to_vec()).or_insert(0) += 1;
        }
        out
    }
}

fn classes_with_dims(m: &ModCat, dims: &[usize]) -> Result<Vec<ModuleClass>> {
    let quiver = m.quiver();
    let f = m.field();
    let shapes: Vec<(usize, usize)> = quiver
        .arrows
        .iter()
        .map(|a| (dims[a.target], dims[a.source]))
        .collect();
    let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let mut classes: Vec<ModuleClass> = Vec::new();
    let mut err = None;
    for_each_vector(f, entries, |v| {
        let mut off = 0;
        let mats = shapes
            .iter()
            .map(|&(r, c)| {
                let m = Mat::from_data(f, r, c, v[off..off + r * c].to_vec());
                off += r * c;
                m
            })
            .collect();
        let r = Representation {
            field: f,
            dims: dims.to_vec(),
            mats,
        };
        if !r.satisfies_relations(quiver) {
            return true;
        }
        let fp = fingerprint(quiver, &r);
        for c in classes.iter().filter(|c| c.fingerprint == fp) {
            match find_isomorphism(
                quiver,
                &r,
                &c.rep,
                Some((fp.end_dim, fp.end_dim)),
                m.iso_budget,
            ) {
                Ok(Some(_)) => return true,
                Ok(None) => {}
                Err(e) => {
                    err = Some(e);
                    return false;
                }
            }
        }
        classes.push(ModuleClass {
            id: ModuleClassId::from_rep(&r),
            rep: r,
            fingerprint: fp,
        });
        true
    });
    match err {
        Some(e) => Err(e),
        None => Ok(classes),
    }
}
