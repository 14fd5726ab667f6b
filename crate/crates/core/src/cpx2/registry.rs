//! Isomorphism classes of acyclic-summand-free complexes, and of arbitrary complexes via
//! their stripped form.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::modcat::{find_isomorphism, fingerprint, Fingerprint, Representation};

use super::{Complex2, CpxCat};

/// Name of a registered core complex. Names are assigned at registration: callers may
/// supply one (for instance `C(...)` for the complex of a module), otherwise `Y<k>`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoreId(Arc<str>);

impl CoreId {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CoreId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CoreId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for CoreId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

/// Class of an arbitrary complex: `K_P ⊕ K*_Q ⊕ core`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Complex2ClassId {
    pub plus: Vec<usize>,
    pub star: Vec<usize>,
    pub core: CoreId,
}

impl fmt::Display for Complex2ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        if !self.plus.is_empty() {
            write!(f, "K[{}]+", list(&self.plus))?;
        }
        if !self.star.is_empty() {
            write!(f, "K*[{}]+", list(&self.star))?;
        }
        write!(f, "{}", self.core)
    }
}

impl Serialize for Complex2ClassId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CxFingerprint {
    pub rep: Fingerprint,
    pub h0: Vec<usize>,
    pub h1: Vec<usize>,
}

#[derive(Debug)]
struct Entry {
    id: CoreId,
    cx: Complex2,
    rep: Representation,
    fp: CxFingerprint,
}

#[derive(Debug, Default)]
struct Inner {
    entries: Vec<Entry>,
    buckets: HashMap<CxFingerprint, Vec<usize>>,
    by_id: HashMap<CoreId, usize>,
    anonymous: usize,
}

/// Registry of core complexes. Safe for concurrent use; the first registration of a class
/// fixes its representative and name.
#[derive(Debug, Default)]
pub struct CoreRegistry {
    inner: RwLock<Inner>,
}

impl CoreRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.inner.read().unwrap().entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, id: &CoreId) -> Option<Complex2> {
        let inner = self.inner.read().unwrap();
        inner.by_id.get(id).map(|&i| inner.entries[i].cx.clone())
    }

    pub fn ids(&self) -> Vec<CoreId> {
        self.inner
            .read()
            .unwrap()
            .entries
            .iter()
            .map(|e| e.id.clone())
            .collect()
    }

    fn cx_fingerprint(cc: &CpxCat, cx: &Complex2, rep: &Representation) -> Result<CxFingerprint> {
        let (h0, h1) = cx.homology(&cc.m)?;
        Ok(CxFingerprint {
            rep: fingerprint(&cc.cq, rep),
            h0: h0.dims,
            h1: h1.dims,
        })
    }

    fn search(
        cc: &CpxCat,
        inner: &Inner,
        rep: &Representation,
        fp: &CxFingerprint,
        from: usize,
    ) -> Result<Option<CoreId>> {
        if let Some(bucket) = inner.buckets.get(fp) {
            for &i in bucket.iter().filter(|&&i| i >= from) {
                let e = &inner.entries[i];
                let ends = Some((fp.rep.end_dim, e.fp.rep.end_dim));
                if find_isomorphism(&cc.cq, rep, &e.rep, ends, cc.m.iso_budget)?.is_some() {
                    return Ok(Some(e.id.clone()));
                }
            }
        }
        Ok(None)
    }

    /// Id of the class of `cx` (assumed acyclic-summand-free), registering it if new.
    pub fn register(&self, cc: &CpxCat, cx: &Complex2, name: Option<String>) -> Result<CoreId> {
        let rep = cx.to_rep();
        let fp = Self::cx_fingerprint(cc, cx, &rep)?;
        let seen = {
            let inner = self.inner.read().unwrap();
            if let Some(id) = Self::search(cc, &inner, &rep, &fp, 0)? {
                return Ok(id);
            }
            inner.entries.len()
        };
        let mut inner = self.inner.write().unwrap();
        if let Some(id) = Self::search(cc, &inner, &rep, &fp, seen)? {
            return Ok(id);
        }
        let id = CoreId(Arc::from(match name {
            Some(n) => n,
            None => {
                inner.anonymous += 1;
                format!("Y{}", inner.anonymous)
            }
        }));
        let idx = inner.entries.len();
        inner.entries.push(Entry {
            id: id.clone(),
            cx: cx.clone(),
            rep,
            fp: fp.clone(),
        });
        inner.buckets.entry(fp).or_default().push(idx);
        inner.by_id.insert(id.clone(), idx);
        Ok(id)
    }

    pub fn classify_core(&self, cc: &CpxCat, cx: &Complex2) -> Result<CoreId> {
        self.register(cc, cx, None)
    }

    /// Strip and classify an arbitrary complex.
    pub fn classify(&self, cc: &CpxCat, cx: &Complex2) -> Result<(Complex2ClassId, Complex2)> {
        let s = cc.strip_acyclics(cx)?;
        let core = self.classify_core(cc, &s.core)?;
        Ok((
            Complex2ClassId {
                plus: s.plus,
                star: s.star,
                core,
            },
            s.core,
        ))
    }
}
