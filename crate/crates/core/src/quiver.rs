//! Quivers with relations over a prime field.
//!
//! Paths compose left to right: `[a, b]` means "a then b" and requires
//! `target(a) = source(b)`. A representation assigns to an arrow `a: u -> v`
//! a matrix `V_u -> V_v`, so the path `[a, b]` acts as `M_b * M_a`.

use crate::ffalg::FieldSize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A linear combination of parallel paths, each of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(u8, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub field: FieldSize,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl Quiver {
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn path_source(&self, path: &[usize]) -> Option<usize> {
        path.first().map(|&a| self.arrows[a].source)
    }

    pub fn path_target(&self, path: &[usize]) -> Option<usize> {
        path.last().map(|&a| self.arrows[a].target)
    }

    pub fn is_composable(&self, path: &[usize]) -> bool {
        path.windows(2)
            .all(|w| self.arrows[w[0]].target == self.arrows[w[1]].source)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Endpoints shared by every term of the relation.
    pub fn relation_endpoints(&self, rel: &Relation) -> Option<(usize, usize)> {
        let (_, p) = rel.terms.first()?;
        Some((self.path_source(p)?, self.path_target(p)?))
    }

    pub fn path_name(&self, path: &[usize]) -> String {
        path.iter()
            .map(|&a| self.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join("·")
    }
}
