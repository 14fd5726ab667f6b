//! Finite-dimensional algebras presented by quivers with relations.

use std::collections::{BTreeSet, HashMap};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::ffalg::{FieldSize, Mat};
use crate::modcat::Representation;
use crate::quiver::{Arrow, Quiver, Relation};

pub const DEFAULT_DIM_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub quiver: Quiver,
    pub dim_cap: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowJson {
    name: String,
    from: String,
    to: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    coef: i64,
    path: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationJson {
    q: u32,
    vertices: Vec<String>,
    arrows: Vec<ArrowJson>,
    #[serde(default)]
    relations: Vec<Vec<TermJson>>,
    #[serde(default)]
    dim_cap: Option<usize>,
}

/// Parse and validate the JSON algebra description.
pub fn load_presentation(text: &[u8]) -> Result<QuiverPresentation> {
    let raw: PresentationJson =
        serde_json::from_slice(text).map_err(|e| Error::Parse(e.to_string()))?;
    let field = FieldSize::new(raw.q)?;

    let mut seen = BTreeSet::new();
    for v in &raw.vertices {
        if !seen.insert(v.as_str()) {
            return Err(Error::Parse(format!("duplicate vertex {v}")));
        }
    }
    let vertex = |name: &str| {
        raw.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertexOrArrow(name.to_string()))
    };
    let mut arrows = Vec::with_capacity(raw.arrows.len());
    for a in &raw.arrows {
        if arrows.iter().any(|b: &Arrow| b.name == a.name) {
            return Err(Error::Parse(format!("duplicate arrow {}", a.name)));
        }
        arrows.push(Arrow {
            name: a.name.clone(),
            source: vertex(&a.from)?,
            target: vertex(&a.to)?,
        });
    }
    let mut quiver = Quiver {
        field,
        vertices: raw.vertices.clone(),
        arrows,
        relations: Vec::new(),
    };

    for (ri, rel) in raw.relations.iter().enumerate() {
        if rel.is_empty() {
            return Err(Error::NotAdmissible(format!("relation {ri} is empty")));
        }
        let mut terms = Vec::with_capacity(rel.len());
        for t in rel {
            let path = t
                .path
                .iter()
                .map(|n| {
                    quiver
                        .arrow_index(n)
                        .ok_or_else(|| Error::UnknownVertexOrArrow(n.clone()))
                })
                .collect::<Result<Vec<_>>>()?;
            if path.len() < 2 {
                return Err(Error::NotAdmissible(format!(
                    "relation {ri} has a term of length {}",
                    path.len()
                )));
            }
            if !quiver.is_composable(&path) {
                return Err(Error::NotAdmissible(format!(
                    "path {} is not composable",
                    t.path.join(",")
                )));
            }
            let c = field.reduce(t.coef);
            if c == 0 {
                return Err(Error::NotAdmissible(format!(
                    "relation {ri} has a coefficient that vanishes mod {}",
                    field.q()
                )));
            }
            terms.push((c, path));
        }
        let r = Relation { terms };
        let (s, e) = quiver.relation_endpoints(&r).expect("nonempty");
        if r.terms
            .iter()
            .any(|(_, p)| quiver.path_source(p) != Some(s) || quiver.path_target(p) != Some(e))
        {
            return Err(Error::NotAdmissible(format!(
                "relation {ri} mixes paths with different endpoints"
            )));
        }
        quiver.relations.push(r);
    }
    let dim_cap = raw.dim_cap.unwrap_or(DEFAULT_DIM_CAP);
    if dim_cap == 0 {
        return Err(Error::Parse("dim_cap must be positive".into()));
    }
    Ok(QuiverPresentation { quiver, dim_cap })
}

/// A path of the quiver; trivial paths have no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// `B = kQ/I` with a path basis and the right action of arrows on it.
#[derive(Clone, Debug)]
pub struct AlgebraData {
    pub presentation: QuiverPresentation,
    /// Basis paths, sorted by (source, target, length, arrows); trivial paths come first
    /// within each (source, target) block.
    pub basis: Vec<Path>,
    /// `basis[i] · arrow` expanded in the basis.
    action: HashMap<(usize, usize), Vec<(usize, u8)>>,
    /// Column `i` is the dimension vector of the projective at vertex `i`.
    pub cartan: Vec<Vec<i64>>,
}

impl AlgebraData {
    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }

    pub fn field(&self) -> FieldSize {
        self.presentation.quiver.field
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver().num_vertices()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension vector of the projective at `v`.
    pub fn projective_class(&self, v: usize) -> Vec<i64> {
        (0..self.num_vertices())
            .map(|w| self.cartan[w][v])
            .collect()
    }

    /// Basis indices of paths from `source` to `target`, in basis order.
    pub fn paths_between(&self, source: usize, target: usize) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| self.basis[i].source == source && self.basis[i].target == target)
            .collect()
    }

    /// `basis[i] · arrow` as a combination of basis paths (empty if not composable or zero).
    pub fn act(&self, i: usize, arrow: usize) -> &[(usize, u8)] {
        self.action.get(&(i, arrow)).map_or(&[], |v| v.as_slice())
    }
}

fn enumerate_paths(quiver: &Quiver, max_len: usize) -> Vec<Path> {
    let mut all: Vec<Path> = (0..quiver.num_vertices())
        .map(|v| Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        })
        .collect();
    let mut frontier = all.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for (ai, a) in quiver.arrows.iter().enumerate() {
                if a.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path {
                        source: p.source,
                        target: a.target,
                        arrows,
                    });
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

fn concat(quiver: &Quiver, u: &Path, mid: &[usize], v: &Path) -> Path {
    let mut arrows = u.arrows.clone();
    arrows.extend_from_slice(mid);
    arrows.extend_from_slice(&v.arrows);
    let source = u.source;
    let target = if arrows.is_empty() {
        u.target
    } else {
        quiver.arrows[*arrows.last().unwrap()].target
    };
    Path {
        source,
        target,
        arrows,
    }
}

/// Parse and compute the path basis in one step.
pub fn load_algebra(text: &[u8]) -> Result<AlgebraData> {
    path_basis(&load_presentation(text)?)
}

/// Compute a path basis of `kQ/I` degree by degree.
///
/// At truncation length `n` the relation ideal is row reduced inside the span of paths of
/// length `<= n`, preferring longer paths as pivots. The search stops at the first `n` for
/// which no path of length `n` survives; paths that survive at smaller lengths form the basis.
pub fn path_basis(p: &QuiverPresentation) -> Result<AlgebraData> {
    let quiver = &p.quiver;
    let f = quiver.field;
    for n in 1..=p.dim_cap {
        let paths = enumerate_paths(quiver, n);
        // column order: longer paths first
        let mut order: Vec<usize> = (0..paths.len()).collect();
        order.sort_by(|&i, &j| {
            paths[j]
                .len()
                .cmp(&paths[i].len())
                .then_with(|| paths[i].cmp(&paths[j]))
        });
        let col_of: HashMap<&Path, usize> = order
            .iter()
            .enumerate()
            .map(|(c, &i)| (&paths[i], c))
            .collect();

        let mut rows: Vec<Vec<u8>> = Vec::new();
        for rel in &quiver.relations {
            let (s, t) = quiver.relation_endpoints(rel).expect("validated");
            let min_len = rel.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
            if min_len > n {
                continue;
            }
            for u in paths
                .iter()
                .filter(|u| u.target == s && u.len() + min_len <= n)
            {
                for v in paths
                    .iter()
                    .filter(|v| v.source == t && u.len() + v.len() + min_len <= n)
                {
                    let mut row = vec![0u8; paths.len()];
                    for (c, mid) in &rel.terms {
                        if u.len() + mid.len() + v.len() <= n {
                            let w = concat(quiver, u, mid, v);
                            let col = col_of[&w];
                            row[col] = f.add(row[col], *c);
                        }
                    }
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }
        }
        let ncols = paths.len();
        let sys = Mat::from_data(f, rows.len(), ncols, rows.into_iter().flatten().collect());
        let rref = sys.rref();
        let pivot_set: BTreeSet<usize> = rref.pivots.iter().copied().collect();
        let survivors_at_n = (0..ncols)
            .filter(|c| !pivot_set.contains(c) && paths[order[*c]].len() == n)
            .count();
        if survivors_at_n > 0 {
            if n == p.dim_cap {
                return Err(Error::NotFiniteDimensional(n));
            }
            continue;
        }

        let mut basis: Vec<Path> = (0..ncols)
            .filter(|c| !pivot_set.contains(c))
            .map(|c| paths[order[c]].clone())
            .collect();
        basis.sort_by(|a, b| {
            (a.source, a.target, a.len(), &a.arrows).cmp(&(b.source, b.target, b.len(), &b.arrows))
        });
        let basis_index: HashMap<&Path, usize> =
            basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let pivot_row: HashMap<usize, usize> = rref
            .pivots
            .iter()
            .enumerate()
            .map(|(r, &c)| (c, r))
            .collect();

        // reduce a path of length <= n to the basis
        let reduce = |w: &Path| -> Vec<(usize, u8)> {
            if let Some(&i) = basis_index.get(w) {
                return vec![(i, 1)];
            }
            let col = col_of[w];
            let r = pivot_row[&col];
            let mut out = Vec::new();
            for c in 0..ncols {
                if c == col {
                    continue;
                }
                let x = rref.mat.get(r, c);
                if x != 0 {
                    let bp = &paths[order[c]];
                    let bi = basis_index[bp];
                    out.push((bi, f.neg(x)));
                }
            }
            out.sort();
            out
        };

        let mut action = HashMap::new();
        for (i, b) in basis.iter().enumerate() {
            for (ai, a) in quiver.arrows.iter().enumerate() {
                if a.source != b.target {
                    continue;
                }
                let w = concat(
                    quiver,
                    b,
                    &[ai],
                    &Path {
                        source: a.target,
                        target: a.target,
                        arrows: Vec::new(),
                    },
                );
                action.insert((i, ai), reduce(&w));
            }
        }

        let nv = quiver.num_vertices();
        let mut cartan = vec![vec![0i64; nv]; nv];
        for b in &basis {
            cartan[b.target][b.source] += 1;
        }
        return Ok(AlgebraData {
            presentation: p.clone(),
            basis,
            action,
            cartan,
        });
    }
    Err(Error::NotFiniteDimensional(p.dim_cap))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Projective,
    Simple,
}

/// The indecomposable projective `e_v B` (basis: paths starting at `v`) or the simple at `v`.
pub fn standard_module(a: &AlgebraData, vertex: usize, kind: ModuleKind) -> Representation {
    let quiver = a.quiver();
    match kind {
        ModuleKind::Simple => Representation::simple(quiver, vertex),
        ModuleKind::Projective => {
            let nv = a.num_vertices();
            let at: Vec<Vec<usize>> = (0..nv).map(|w| a.paths_between(vertex, w)).collect();
            let dims: Vec<usize> = at.iter().map(|v| v.len()).collect();
            let f = a.field();
            let mats = quiver
                .arrows
                .iter()
                .enumerate()
                .map(|(ai, arr)| {
                    let mut m = Mat::zeros(f, dims[arr.target], dims[arr.source]);
                    for (col, &pi) in at[arr.source].iter().enumerate() {
                        for &(bi, c) in a.act(pi, ai) {
                            let row = at[arr.target]
                                .iter()
                                .position(|&x| x == bi)
                                .expect("action stays among paths from the same source");
                            m.set(row, col, f.add(m.get(row, col), c));
                        }
                    }
                    m
                })
                .collect();
            Representation {
                field: f,
                dims,
                mats,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn a2_loads() {
        let p = load_presentation(A2_F2.as_bytes()).unwrap();
        assert_eq!(p.quiver.num_vertices(), 2);
        assert_eq!(p.quiver.num_arrows(), 1);
        assert_eq!(p.dim_cap, 12);
    }

    #[test]
    fn two_cycle_loads() {
        let p = load_presentation(TWO_CYCLE_F2.as_bytes()).unwrap();
        assert_eq!(p.quiver.relations.len(), 1);
    }

    #[test]
    fn single_arrow_relation_rejected() {
        let text = r#"{"q":2,"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}],
            "relations":[[{"coef":1,"path":["a"]}]]}"#;
        assert!(matches!(
            load_presentation(text.as_bytes()),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn unknown_names_and_keys_rejected() {
        let text = r#"{"q":2,"vertices":["1"],"arrows":[{"name":"a","from":"1","to":"9"}]}"#;
        assert!(matches!(
            load_presentation(text.as_bytes()),
            Err(Error::UnknownVertexOrArrow(_))
        ));
        let text = r#"{"q":2,"vertices":["1"],"arrows":[],"colour":"red"}"#;
        assert!(matches!(
            load_presentation(text.as_bytes()),
            Err(Error::Parse(_))
        ));
        let text = r#"{"q":4,"vertices":["1"],"arrows":[]}"#;
        assert!(matches!(
            load_presentation(text.as_bytes()),
            Err(Error::InvalidField(4))
        ));
    }

    #[test]
    fn a2_basis_and_cartan() {
        let a = algebra(A2_F2);
        assert_eq!(a.dim(), 3);
        assert_eq!(a.projective_class(0), vec![1, 1]);
        assert_eq!(a.projective_class(1), vec![0, 1]);
    }

    #[test]
    fn two_cycle_basis() {
        // paths of length <= 2: e1, e2, α, β, αβ, βα; quotient by αβ leaves 5
        let a = algebra(TWO_CYCLE_F2);
        assert_eq!(a.dim(), 5);
        let names: Vec<String> = a
            .basis
            .iter()
            .map(|p| a.quiver().path_name(&p.arrows))
            .collect();
        assert!(names.contains(&"beta·alpha".to_string()));
        assert!(!names.contains(&"alpha·beta".to_string()));
    }

    #[test]
    fn loop_without_relations_is_infinite() {
        let p = load_presentation(LOOP_F2.as_bytes()).unwrap();
        assert!(matches!(
            path_basis(&p),
            Err(Error::NotFiniteDimensional(_))
        ));
    }

    #[test]
    fn commutative_square_has_one_long_path() {
        let text = r#"{"q":3,"vertices":["1","2","3","4"],
          "arrows":[{"name":"a","from":"1","to":"2"},{"name":"b","from":"2","to":"4"},
                    {"name":"c","from":"1","to":"3"},{"name":"d","from":"3","to":"4"}],
          "relations":[[{"coef":1,"path":["a","b"]},{"coef":-1,"path":["c","d"]}]]}"#;
        let a = algebra(text);
        // e1..e4, a, b, c, d, and one of ab = cd
        assert_eq!(a.dim(), 9);
        assert_eq!(a.projective_class(0), vec![1, 1, 1, 1]);
    }

    #[test]
    fn standard_modules_a2() {
        let a = algebra(A2_F2);
        let s1 = standard_module(&a, 0, ModuleKind::Simple);
        assert_eq!(s1.dims, vec![1, 0]);
        let p1 = standard_module(&a, 0, ModuleKind::Projective);
        assert_eq!(p1.dims, vec![1, 1]);
        assert_eq!(p1.mats[0], Mat::from_rows(a.field(), &[vec![1]]));
    }

    #[test]
    fn standard_modules_two_cycle() {
        let a = algebra(TWO_CYCLE_F2);
        let p2 = standard_module(&a, 1, ModuleKind::Projective);
        assert_eq!(p2.dims, vec![1, 2]);
    }

    #[test]
    fn projectives_sum_to_algebra_and_satisfy_relations() {
        for text in [A2_F2, TWO_CYCLE_F2, THREE_VERTEX_F2, CANONICAL_222_F3] {
            let a = algebra(text);
            let total: usize = (0..a.num_vertices())
                .map(|v| standard_module(&a, v, ModuleKind::Projective).total_dim())
                .sum();
            assert_eq!(total, a.dim());
            for v in 0..a.num_vertices() {
                let p = standard_module(&a, v, ModuleKind::Projective);
                assert!(p.satisfies_relations(a.quiver()));
                // top of the projective at v is the simple at v
                let mut top = vec![0; a.num_vertices()];
                top[v] = 1;
                assert_eq!(p.top_dims(a.quiver()), top);
            }
        }
    }
}
