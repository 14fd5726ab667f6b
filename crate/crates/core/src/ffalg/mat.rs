use std::fmt;

use super::field::FieldSize;

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: FieldSize,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

/// Affine solution set of `A x = b`.
#[derive(Clone, Debug)]
pub struct SolutionSpace {
    pub dim: usize,
    pub particular: Option<Mat>,
    pub basis: Vec<Mat>,
}

/// Result of row reduction: reduced row echelon form plus pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub mat: Mat,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(field: FieldSize, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldSize, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_fn(
        field: FieldSize,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> i64,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(field.reduce(f(r, c)));
            }
        }
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: FieldSize, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Mat::from_fn(field, rows.len(), cols, |r, c| rows[r][c])
    }

    /// Wrap already-reduced entries.
    pub fn from_data(field: FieldSize, rows: usize, cols: usize, data: Vec<u8>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&x| (x as u32) < field.q()));
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Column vector.
    pub fn column(field: FieldSize, entries: &[u8]) -> Self {
        Mat::from_data(field, entries.len(), 1, entries.to_vec())
    }

    #[inline]
    pub fn field(&self) -> FieldSize {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn data(&self) -> &[u8] {
        &self.data
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }
    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn col_vec(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape mismatch {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let q = self.field.q();
        let mut acc = vec![0u32; self.rows * other.cols];
        for r in 0..self.rows {
            let out = &mut acc[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u32;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in out.iter_mut().zip(orow) {
                    *o += a * b as u32;
                }
            }
            // keep accumulators small
            for o in out.iter_mut() {
                *o %= q;
            }
        }
        Mat {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            data: acc.into_iter().map(|x| x as u8).collect(),
        }
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Mat {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Mat {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Mat {
        let f = self.field;
        Mat {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.neg(a)).collect(),
        }
    }

    pub fn scale(&self, s: u8) -> Mat {
        let f = self.field;
        Mat {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, s)).collect(),
        }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, other: &Mat, s: u8) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(b, s));
        }
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |r, c| {
            self.get(c, r) as i64
        })
    }

    pub fn hstack(field: FieldSize, rows: usize, parts: &[&Mat]) -> Mat {
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.rows, rows);
            out.paste(0, off, m);
            off += m.cols;
        }
        out
    }

    pub fn vstack(field: FieldSize, cols: usize, parts: &[&Mat]) -> Mat {
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            out.paste(off, 0, m);
            off += m.rows;
        }
        out
    }

    pub fn block_diag(field: FieldSize, parts: &[&Mat]) -> Mat {
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            out.paste(r0, c0, m);
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    /// Copy `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Mat) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(r));
        }
    }

    pub fn submatrix(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Mat {
        Mat::from_fn(self.field, rows, cols, |r, c| {
            self.get(r0 + r, c0 + c) as i64
        })
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.field, self.rows, idx.len(), |r, c| {
            self.get(r, idx[c]) as i64
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.field, idx.len(), self.cols, |r, c| {
            self.get(idx[r], c) as i64
        })
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        Rref { mat: m, pivots }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..cols {
            if pr == rows {
                break;
            }
            let Some(sel) = (pr..rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if sel != pr {
                for k in 0..cols {
                    self.data.swap(sel * cols + k, pr * cols + k);
                }
            }
            let inv = f.inv(self.data[pr * cols + c]);
            if inv != 1 {
                for k in c..cols {
                    let i = pr * cols + k;
                    self.data[i] = f.mul(self.data[i], inv);
                }
            }
            for r in 0..rows {
                if r == pr {
                    continue;
                }
                let factor = self.data[r * cols + c];
                if factor == 0 {
                    continue;
                }
                let nf = f.neg(factor);
                for k in c..cols {
                    let p = self.data[pr * cols + k];
                    if p != 0 {
                        let i = r * cols + k;
                        self.data[i] = f.add(self.data[i], f.mul(p, nf));
                    }
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the null space `{x : self * x = 0}` as the columns of the result.
    pub fn kernel(&self) -> Mat {
        let Rref { mat, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Mat::zeros(self.field, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                k.set(pc, j, self.field.neg(mat.get(i, fc)));
            }
        }
        k
    }

    /// Basis (as columns) of the column space, taken from the original columns.
    pub fn column_basis(&self) -> Mat {
        let pivots = self.rref().pivots;
        self.select_cols(&pivots)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = Mat::hstack(self.field, n, &[self, &Mat::identity(self.field, n)]);
        let Rref { mat, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(mat.submatrix(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Solve `self * X = rhs`; `None` if inconsistent. Free variables are set to zero.
    pub fn solve(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows);
        let n = self.cols;
        let aug = Mat::hstack(self.field, self.rows, &[self, rhs]);
        let Rref { mat, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Mat::zeros(self.field, n, rhs.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, mat.get(i, n + c));
            }
        }
        Some(x)
    }

    /// Affine solution set of `self * x = b` for a single right-hand column.
    pub fn solution_space(&self, b: &Mat) -> SolutionSpace {
        assert_eq!(b.cols, 1, "right-hand side must be a column");
        let kernel = self.kernel();
        let basis: Vec<Mat> = (0..kernel.cols)
            .map(|c| Mat::column(self.field, &kernel.col_vec(c)))
            .collect();
        SolutionSpace {
            dim: basis.len(),
            particular: self.solve(b),
            basis,
        }
    }

    /// Indices of standard basis vectors completing the column span of `self`
    /// to the whole ambient space.
    pub fn complement_indices(&self) -> Vec<usize> {
        let n = self.rows;
        let aug = Mat::hstack(self.field, n, &[self, &Mat::identity(self.field, n)]);
        aug.rref()
            .pivots
            .into_iter()
            .filter(|&p| p >= self.cols)
            .map(|p| p - self.cols)
            .collect()
    }

    /// Column span of `self` contains every column of `other`.
    pub fn span_contains(&self, other: &Mat) -> bool {
        let r = self.rank();
        let both = Mat::hstack(self.field, self.rows, &[self, other]);
        both.rank() == r
    }
}

/// Standard basis vectors `e_i` for the given indices, as columns of an `n`-row matrix.
pub fn unit_columns(field: FieldSize, n: usize, idx: &[usize]) -> Mat {
    let mut m = Mat::zeros(field, n, idx.len());
    for (c, &i) in idx.iter().enumerate() {
        m.set(i, c, 1);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(q: u32) -> FieldSize {
        FieldSize::new(q).unwrap()
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let a = Mat::zeros(f(3), 4, 4);
        let s = a.solution_space(&Mat::zeros(f(3), 4, 1));
        assert_eq!(s.dim, 4);
        assert!(s.particular.is_some());
    }

    #[test]
    fn identity_has_unique_solution() {
        let a = Mat::identity(f(5), 3);
        let b = Mat::column(f(5), &[1, 4, 2]);
        let s = a.solution_space(&b);
        assert_eq!(s.dim, 0);
        assert_eq!(s.particular.unwrap(), b);
    }

    #[test]
    fn one_one_row_over_f2() {
        // brute force: x + y = 0 over F_2 has solutions (0,0), (1,1)
        let field = f(2);
        let a = Mat::from_rows(field, &[vec![1, 1]]);
        let mut count = 0;
        for x in 0..2 {
            for y in 0..2 {
                if (x + y) % 2 == 0 {
                    count += 1;
                }
            }
        }
        let s = a.solution_space(&Mat::zeros(field, 1, 1));
        assert_eq!(s.dim, 1);
        assert_eq!(field.pow_count(s.dim).unwrap(), count);
    }

    #[test]
    fn inconsistent_system() {
        let field = f(3);
        let a = Mat::from_rows(field, &[vec![1, 1], vec![2, 2]]);
        let b = Mat::column(field, &[1, 1]);
        assert!(a.solution_space(&b).particular.is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let field = f(7);
        let a = Mat::from_rows(field, &[vec![1, 2], vec![3, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(field, 2));
        let sing = Mat::from_rows(field, &[vec![1, 2], vec![2, 4]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn complement_of_span() {
        let field = f(2);
        let a = Mat::from_rows(field, &[vec![1], vec![1], vec![0]]);
        let idx = a.complement_indices();
        assert_eq!(idx.len(), 2);
        let full = Mat::hstack(field, 3, &[&a, &unit_columns(field, 3, &idx)]);
        assert!(full.is_invertible());
    }

    fn arb_mat() -> impl Strategy<Value = (u32, usize, usize, Vec<u8>)> {
        (
            prop::sample::select(vec![2u32, 3, 5, 13]),
            0usize..6,
            0usize..6,
        )
            .prop_flat_map(|(q, r, c)| {
                (
                    Just(q),
                    Just(r),
                    Just(c),
                    prop::collection::vec(0u8..q as u8, r * c),
                )
            })
    }

    proptest! {
        #[test]
        fn rank_nullity((q, r, c, data) in arb_mat()) {
            let m = Mat::from_data(f(q), r, c, data);
            let k = m.kernel();
            prop_assert_eq!(m.rank() + k.cols(), c);
            prop_assert!(m.mul(&k).is_zero());
        }

        #[test]
        fn solve_is_consistent((q, r, c, data) in arb_mat(), seed in 0u64..1000) {
            let field = f(q);
            let m = Mat::from_data(field, r, c, data);
            // build b = m * x for a pseudo-random x, so a solution exists
            let x = Mat::from_fn(field, c, 1, |i, _| ((seed as usize * 31 + i * 7) % q as usize) as i64);
            let b = m.mul(&x);
            let s = m.solution_space(&b);
            let p = s.particular.expect("consistent");
            prop_assert_eq!(m.mul(&p), b);
        }
    }
}
