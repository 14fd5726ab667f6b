//! Representations of a quiver with relations and the linear algebra on them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ffalg::{for_each_vector, unit_columns, FieldSize, Mat};
use crate::quiver::Quiver;

/// A representation: one vector space `F_q^{dims[v]}` per vertex and one matrix per arrow.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    pub field: FieldSize,
    pub dims: Vec<usize>,
    pub mats: Vec<Mat>,
}

/// A morphism of representations, one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub maps: Vec<Mat>,
}

impl Representation {
    pub fn zero(quiver: &Quiver) -> Self {
        Representation::from_dims_with_zero_arrows(quiver, vec![0; quiver.num_vertices()])
    }

    pub fn from_dims_with_zero_arrows(quiver: &Quiver, dims: Vec<usize>) -> Self {
        let mats = quiver
            .arrows
            .iter()
            .map(|a| Mat::zeros(quiver.field, dims[a.target], dims[a.source]))
            .collect();
        Representation {
            field: quiver.field,
            dims,
            mats,
        }
    }

    pub fn simple(quiver: &Quiver, v: usize) -> Self {
        let mut dims = vec![0; quiver.num_vertices()];
        dims[v] = 1;
        Representation::from_dims_with_zero_arrows(quiver, dims)
    }

    /// Build and validate shapes (relations are not checked here).
    pub fn new(quiver: &Quiver, dims: Vec<usize>, mats: Vec<Mat>) -> Result<Self> {
        if dims.len() != quiver.num_vertices() || mats.len() != quiver.num_arrows() {
            return Err(Error::Shape("dimension vector or arrow count".into()));
        }
        for (a, m) in quiver.arrows.iter().zip(&mats) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::Shape(format!("arrow {}", a.name)));
            }
        }
        Ok(Representation {
            field: quiver.field,
            dims,
            mats,
        })
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Matrix of a path starting at `source` (the identity for the empty path).
    pub fn path_matrix(&self, source: usize, path: &[usize]) -> Mat {
        let mut m = Mat::identity(self.field, self.dims[source]);
        for &a in path {
            m = self.mats[a].mul(&m);
        }
        m
    }

    pub fn satisfies_relations(&self, quiver: &Quiver) -> bool {
        quiver.relations.iter().all(|rel| {
            let Some((s, t)) = quiver.relation_endpoints(rel) else {
                return true;
            };
            let mut acc = Mat::zeros(self.field, self.dims[t], self.dims[s]);
            for (c, p) in &rel.terms {
                acc.add_scaled(&self.path_matrix(s, p), *c);
            }
            acc.is_zero()
        })
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        let dims = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| Mat::block_diag(self.field, &[a, b]))
            .collect();
        Representation {
            field: self.field,
            dims,
            mats,
        }
    }

    pub fn direct_sum_all<'a>(
        quiver: &Quiver,
        parts: impl IntoIterator<Item = &'a Representation>,
    ) -> Representation {
        parts
            .into_iter()
            .fold(Representation::zero(quiver), |acc, p| acc.direct_sum(p))
    }

    /// Dimension vector followed by all arrow matrix entries, row-major, in arrow order.
    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(
            self.dims.len() + self.mats.iter().map(|m| m.data().len()).sum::<usize>(),
        );
        for &d in &self.dims {
            assert!(d < 256, "dimension too large to encode");
            out.push(d as u8);
        }
        for m in &self.mats {
            out.extend_from_slice(m.data());
        }
        out
    }

    /// Radical: at each vertex, the span of the images of all incoming arrows.
    pub fn radical(&self, quiver: &Quiver) -> Vec<Mat> {
        (0..self.dims.len())
            .map(|v| {
                let incoming: Vec<&Mat> = quiver
                    .arrows
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.target == v)
                    .map(|(i, _)| &self.mats[i])
                    .collect();
                Mat::hstack(self.field, self.dims[v], &incoming).column_basis()
            })
            .collect()
    }

    pub fn top_dims(&self, quiver: &Quiver) -> Vec<usize> {
        self.radical(quiver)
            .iter()
            .zip(&self.dims)
            .map(|(r, d)| d - r.cols())
            .collect()
    }

    /// Socle dimensions: common kernel of all outgoing arrows at each vertex.
    pub fn socle_dims(&self, quiver: &Quiver) -> Vec<usize> {
        (0..self.dims.len())
            .map(|v| {
                let outgoing: Vec<&Mat> = quiver
                    .arrows
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.source == v)
                    .map(|(i, _)| &self.mats[i])
                    .collect();
                let rows: usize = outgoing.iter().map(|m| m.rows()).sum();
                let stacked = Mat::vstack(self.field, self.dims[v], &outgoing);
                debug_assert_eq!(stacked.rows(), rows);
                self.dims[v] - stacked.rank()
            })
            .collect()
    }

    /// Subrepresentation on the given per-vertex subspaces (bases as columns).
    /// The subspaces must be closed under the arrows.
    pub fn subrep(&self, quiver: &Quiver, bases: &[Mat]) -> Result<Representation> {
        let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
        let mut mats = Vec::with_capacity(quiver.num_arrows());
        for (i, a) in quiver.arrows.iter().enumerate() {
            let img = self.mats[i].mul(&bases[a.source]);
            let m = bases[a.target]
                .solve(&img)
                .ok_or_else(|| Error::Internal(format!("subspace not closed under {}", a.name)))?;
            mats.push(m);
        }
        Ok(Representation {
            field: self.field,
            dims,
            mats,
        })
    }

    /// Quotient by a subrepresentation given by per-vertex bases. Returns the quotient
    /// and the projection morphism.
    pub fn quotient(&self, quiver: &Quiver, sub: &[Mat]) -> Result<(Representation, Morphism)> {
        let f = self.field;
        let mut projs = Vec::with_capacity(self.dims.len());
        let mut comps = Vec::with_capacity(self.dims.len());
        for (v, s) in sub.iter().enumerate() {
            let n = self.dims[v];
            let s = s.column_basis();
            let idx = s.complement_indices();
            let c = unit_columns(f, n, &idx);
            let t = Mat::hstack(f, n, &[&s, &c]);
            let tinv = t
                .inverse()
                .ok_or_else(|| Error::Internal("complement is not a basis".into()))?;
            projs.push(tinv.submatrix(s.cols(), idx.len(), 0, n));
            comps.push(c);
        }
        let dims: Vec<usize> = comps.iter().map(|c| c.cols()).collect();
        let mats = quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| projs[a.target].mul(&self.mats[i]).mul(&comps[a.source]))
            .collect();
        Ok((
            Representation {
                field: f,
                dims,
                mats,
            },
            Morphism { maps: projs },
        ))
    }

    /// `outer / inner` for nested subrepresentations `inner ⊆ outer ⊆ self`.
    pub fn subquotient(
        &self,
        quiver: &Quiver,
        outer: &[Mat],
        inner: &[Mat],
    ) -> Result<Representation> {
        let outer: Vec<Mat> = outer.iter().map(|m| m.column_basis()).collect();
        let big = self.subrep(quiver, &outer)?;
        let mut inner_coords = Vec::with_capacity(inner.len());
        for (o, i) in outer.iter().zip(inner) {
            inner_coords.push(
                o.solve(i).ok_or_else(|| {
                    Error::Internal("inner subspace not contained in outer".into())
                })?,
            );
        }
        Ok(big.quotient(quiver, &inner_coords)?.0)
    }
}

impl Morphism {
    pub fn zero(src: &Representation, dst: &Representation) -> Self {
        Morphism {
            maps: src
                .dims
                .iter()
                .zip(&dst.dims)
                .map(|(&s, &d)| Mat::zeros(src.field, d, s))
                .collect(),
        }
    }

    pub fn identity(rep: &Representation) -> Self {
        Morphism {
            maps: rep
                .dims
                .iter()
                .map(|&d| Mat::identity(rep.field, d))
                .collect(),
        }
    }

    /// `other ∘ self`
    pub fn then(&self, other: &Morphism) -> Morphism {
        Morphism {
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(f, g)| g.mul(f))
                .collect(),
        }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism {
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Morphism {
        Morphism {
            maps: self.maps.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(|m| m.is_invertible())
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    /// All entries concatenated vertex by vertex.
    pub fn flatten(&self) -> Vec<u8> {
        self.maps
            .iter()
            .flat_map(|m| m.data().iter().copied())
            .collect()
    }

    /// Image subspaces (bases as columns).
    pub fn image(&self) -> Vec<Mat> {
        self.maps.iter().map(|m| m.column_basis()).collect()
    }

    /// Kernel subspaces (bases as columns).
    pub fn kernel(&self) -> Vec<Mat> {
        self.maps.iter().map(|m| m.kernel()).collect()
    }

    pub fn is_morphism(&self, quiver: &Quiver, src: &Representation, dst: &Representation) -> bool {
        quiver.arrows.iter().enumerate().all(|(i, a)| {
            dst.mats[i].mul(&self.maps[a.source]) == self.maps[a.target].mul(&src.mats[i])
        })
    }
}

/// Linear combination `Σ c_i f_i` of morphisms with the given shape.
pub fn combine(basis: &[Morphism], coeffs: &[u8], template: &Morphism) -> Morphism {
    let mut out = Morphism {
        maps: template
            .maps
            .iter()
            .map(|m| Mat::zeros(m.field(), m.rows(), m.cols()))
            .collect(),
    };
    for (b, &c) in basis.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (o, m) in out.maps.iter_mut().zip(&b.maps) {
            o.add_scaled(m, c);
        }
    }
    out
}

/// Basis of `Hom(m, n)`: vertexwise matrices commuting with every arrow.
pub fn hom_basis(quiver: &Quiver, m: &Representation, n: &Representation) -> Vec<Morphism> {
    let f = quiver.field;
    let nv = quiver.num_vertices();
    let mut off = vec![0usize; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = off[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    let mut rows: Vec<u8> = Vec::new();
    let mut nrows = 0usize;
    for (i, a) in quiver.arrows.iter().enumerate() {
        let (u, v) = (a.source, a.target);
        let na = &n.mats[i];
        let ma = &m.mats[i];
        // (N_a φ_u - φ_v M_a)[r][c] = 0
        for r in 0..n.dims[v] {
            for c in 0..m.dims[u] {
                let mut row = vec![0u8; unknowns];
                for k in 0..n.dims[u] {
                    let x = na.get(r, k);
                    if x != 0 {
                        let idx = off[u] + k * m.dims[u] + c;
                        row[idx] = f.add(row[idx], x);
                    }
                }
                for k in 0..m.dims[v] {
                    let x = ma.get(k, c);
                    if x != 0 {
                        let idx = off[v] + r * m.dims[v] + k;
                        row[idx] = f.sub(row[idx], x);
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.extend_from_slice(&row);
                    nrows += 1;
                }
            }
        }
    }
    let sys = Mat::from_data(f, nrows, unknowns, rows);
    let k = sys.kernel();
    (0..k.cols())
        .map(|j| Morphism {
            maps: (0..nv)
                .map(|v| {
                    Mat::from_fn(f, n.dims[v], m.dims[v], |r, c| {
                        k.get(off[v] + r * m.dims[v] + c, j) as i64
                    })
                })
                .collect(),
        })
        .collect()
}

pub fn hom_dim(quiver: &Quiver, m: &Representation, n: &Representation) -> usize {
    hom_basis(quiver, m, n).len()
}

/// Kernel of a morphism as a representation with its inclusion.
pub fn kernel_rep(
    quiver: &Quiver,
    src: &Representation,
    f: &Morphism,
) -> Result<(Representation, Morphism)> {
    let bases = f.kernel();
    let k = src.subrep(quiver, &bases)?;
    Ok((k, Morphism { maps: bases }))
}

/// Cheap isomorphism invariants used to bucket representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub dims: Vec<usize>,
    pub top: Vec<usize>,
    pub socle: Vec<usize>,
    pub end_dim: usize,
}

pub fn fingerprint(quiver: &Quiver, r: &Representation) -> Fingerprint {
    Fingerprint {
        dims: r.dims.clone(),
        top: r.top_dims(quiver),
        socle: r.socle_dims(quiver),
        end_dim: hom_dim(quiver, r, r),
    }
}

const RANDOM_PROBES: usize = 400;
const PROBE_SEED: u64 = 0x005e_ed0f_4a11;

/// Search `Hom(m, n)` for an element invertible at every vertex.
///
/// Returns `Ok(None)` when no isomorphism exists. Necessary conditions on Hom
/// dimensions are checked first and random probing is tried before the exhaustive
/// sweep; the exhaustive sweep is subject to `budget`.
pub fn find_isomorphism(
    quiver: &Quiver,
    m: &Representation,
    n: &Representation,
    end_dims: Option<(usize, usize)>,
    budget: u128,
) -> Result<Option<Morphism>> {
    if m.dims != n.dims {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(Morphism::zero(m, n)));
    }
    let basis = hom_basis(quiver, m, n);
    if basis.is_empty() {
        return Ok(None);
    }
    let (end_m, end_n) = match end_dims {
        Some(d) => d,
        None => (hom_dim(quiver, m, m), hom_dim(quiver, n, n)),
    };
    // an isomorphism m -> n turns Hom(m, n) into a copy of End(m) and of End(n)
    if basis.len() != end_m || basis.len() != end_n || hom_dim(quiver, n, m) != end_m {
        return Ok(None);
    }
    let f = quiver.field;
    let template = Morphism::zero(m, n);
    let h = basis.len();
    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED);
    let mut coeffs = vec![0u8; h];
    for _ in 0..RANDOM_PROBES {
        for c in coeffs.iter_mut() {
            *c = rng.gen_range(0..f.q() as u8);
        }
        let phi = combine(&basis, &coeffs, &template);
        if phi.is_iso() {
            return Ok(Some(phi));
        }
    }
    let needed = f.pow_count(h).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::SearchBudgetExceeded {
            what: "isomorphism search",
            needed,
            budget,
        });
    }
    let mut found = None;
    for_each_vector(f, h, |c| {
        let phi = combine(&basis, c, &template);
        if phi.is_iso() {
            found = Some(phi);
            false
        } else {
            true
        }
    });
    Ok(found)
}

pub fn is_isomorphic(
    quiver: &Quiver,
    m: &Representation,
    n: &Representation,
    budget: u128,
) -> Result<bool> {
    Ok(find_isomorphism(quiver, m, n, None, budget)?.is_some())
}

/// Number of invertible endomorphisms, by enumerating `End(r)`.
pub fn aut_order(quiver: &Quiver, r: &Representation, budget: u128) -> Result<u128> {
    let basis = hom_basis(quiver, r, r);
    let f = quiver.field;
    let needed = f.pow_count(basis.len()).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::SearchBudgetExceeded {
            what: "automorphism count",
            needed,
            budget,
        });
    }
    let template = Morphism::identity(r);
    let mut count = 0u128;
    for_each_vector(f, basis.len(), |c| {
        if combine(&basis, c, &template).is_iso() {
            count += 1;
        }
        true
    });
    Ok(count)
}
