//! Exact integer and rational linear algebra: Smith normal form, saturated
//! kernels, lattice solving, and finite abelian quotients.
//!
//! Everything here is arbitrary-precision; no floating point is used
//! anywhere. Vectors are column vectors and maps compose as
//! matrix-on-the-left. Performance targets small instances (rank <= 10).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Dot product of two integer vectors of equal length.
pub fn dot(a: &[Int], b: &[Int]) -> Int {
    assert_eq!(a.len(), b.len(), "dot: length mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dot product of a rational vector against an integer vector.
pub fn dot_rat(a: &[Rat], b: &[Int]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot_rat: length mismatch");
    a.iter()
        .zip(b)
        .map(|(x, y)| x * Rat::from_integer(y.clone()))
        .sum()
}

pub fn to_rat_vec(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// Dense integer matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Int>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![Int::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        IntMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_cols(cols: Vec<Vec<Int>>) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |col| col.len());
        let mut m = IntMatrix::zero(r, c);
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, x) in col.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        IntMatrix::new(rows, cols, entries.iter().map(|&x| int(x)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Int {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "mul: dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += self.at(i, k) * other.at(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "mul_vec: dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn mul_rat_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "mul_rat_vec: dimension mismatch");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| Rat::from_integer(self.at(i, j).clone()) * &v[j])
                    .sum()
            })
            .collect()
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix::new(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix::new(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|a| -a).collect(),
        )
    }

    pub fn scale(&self, s: &Int) -> IntMatrix {
        IntMatrix::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|a| a * s).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    /// Paste `other` to the right of `self`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "hstack: row mismatch");
        let mut m = IntMatrix::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.at(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.at(i, j).clone());
            }
        }
        m
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "det: matrix must be square");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                // find a row to swap in
                match (k + 1..n).find(|&i| !m.at(i, k).is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            let a = m.at(k, j).clone();
                            let b = m.at(i, j).clone();
                            m.set(k, j, b);
                            m.set(i, j, a);
                        }
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, Int::zero());
            }
            prev = m.at(k, k).clone();
        }
        sign * m.at(n - 1, n - 1).clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    /// Inverse of a unimodular matrix (exact, stays integral).
    pub fn inverse_unimodular(&self) -> IntMatrix {
        assert!(self.is_unimodular(), "inverse_unimodular: |det| != 1");
        let s = snf(self);
        // u*self*v = I, hence self^{-1} = v*u.
        debug_assert_eq!(s.d, IntMatrix::identity(self.rows));
        s.v.mul(&s.u)
    }
}

/// Unimodular decomposition `u * a * v = d` with `d` in Smith normal form.
///
/// The diagonal of `d` is non-negative and divisibility-ordered
/// (d1 | d2 | ...), which pins it uniquely; `u` and `v` are not unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries of `d`, one per `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.at(i, i).clone())
            .collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smith normal form. Pivot selection is deterministic: smallest nonzero
/// absolute value, ties broken by row-major position.
pub fn snf(a: &IntMatrix) -> SmithDecomposition {
    let rows = a.rows();
    let cols = a.cols();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    loop {
        diagonalize(&mut d, &mut u, &mut v);
        // signs
        for k in 0..rows.min(cols) {
            if d.at(k, k).is_negative() {
                negate_row(&mut d, k);
                negate_row(&mut u, k);
            }
        }
        // enforce the divisibility chain; a violation is fixed by mixing the
        // two columns and re-diagonalizing
        let mut fixed = true;
        for k in 0..rows.min(cols).saturating_sub(1) {
            let a_k = d.at(k, k).clone();
            let a_n = d.at(k + 1, k + 1).clone();
            if !a_k.is_zero() && !(&a_n % &a_k).is_zero() {
                add_col(&mut d, k, k + 1, &Int::one());
                add_col(&mut v, k, k + 1, &Int::one());
                fixed = false;
                break;
            }
        }
        if fixed {
            break;
        }
    }
    debug_assert_eq!(u.mul(a).mul(&v), d, "snf: U*A*V != D");
    SmithDecomposition { u, d, v }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for j in 0..m.cols() {
        let x = -m.at(i, j);
        m.set(i, j, x);
    }
}

fn swap_rows(m: &mut IntMatrix, i1: usize, i2: usize) {
    if i1 == i2 {
        return;
    }
    for j in 0..m.cols() {
        let a = m.at(i1, j).clone();
        let b = m.at(i2, j).clone();
        m.set(i1, j, b);
        m.set(i2, j, a);
    }
}

fn swap_cols(m: &mut IntMatrix, j1: usize, j2: usize) {
    if j1 == j2 {
        return;
    }
    for i in 0..m.rows() {
        let a = m.at(i, j1).clone();
        let b = m.at(i, j2).clone();
        m.set(i, j1, b);
        m.set(i, j2, a);
    }
}

/// row[dst] += q * row[src]
fn add_row(m: &mut IntMatrix, dst: usize, src: usize, q: &Int) {
    for j in 0..m.cols() {
        let x = m.at(dst, j) + q * m.at(src, j);
        m.set(dst, j, x);
    }
}

/// col[dst] += q * col[src]
fn add_col(m: &mut IntMatrix, dst: usize, src: usize, q: &Int) {
    for i in 0..m.rows() {
        let x = m.at(i, dst) + q * m.at(i, src);
        m.set(i, dst, x);
    }
}

fn find_pivot(d: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(Int, usize, usize)> = None;
    for i in k..d.rows() {
        for j in k..d.cols() {
            let x = d.at(i, j).abs();
            if x.is_zero() {
                continue;
            }
            match &best {
                Some((b, _, _)) if *b <= x => {}
                _ => best = Some((x, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn diagonalize(d: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix) {
    let steps = d.rows().min(d.cols());
    for k in 0..steps {
        loop {
            let Some((pi, pj)) = find_pivot(d, k) else {
                return; // remaining block is zero
            };
            swap_rows(d, k, pi);
            swap_rows(u, k, pi);
            swap_cols(d, k, pj);
            swap_cols(v, k, pj);

            let mut dirty = false;
            for i in k + 1..d.rows() {
                if !d.at(i, k).is_zero() {
                    let q = -(d.at(i, k) / d.at(k, k));
                    add_row(d, i, k, &q);
                    add_row(u, i, k, &q);
                    if !d.at(i, k).is_zero() {
                        dirty = true; // remainder strictly smaller than pivot
                    }
                }
            }
            for j in k + 1..d.cols() {
                if !d.at(k, j).is_zero() {
                    let q = -(d.at(k, j) / d.at(k, k));
                    add_col(d, j, k, &q);
                    add_col(v, j, k, &q);
                    if !d.at(k, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
    }
}

/// Basis of the saturated integer kernel `{x : a*x = 0}`.
///
/// Each basis vector is sign-normalized so its first nonzero entry is
/// positive; together they span a saturated sublattice.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<Int>> {
    let s = snf(a);
    let mut basis = Vec::new();
    for j in 0..a.cols() {
        let dj = if j < a.rows().min(a.cols()) {
            s.d.at(j, j).clone()
        } else {
            Int::zero()
        };
        if dj.is_zero() {
            let mut col = s.v.col(j);
            if let Some(first) = col.iter().find(|x| !x.is_zero()) {
                if first.is_negative() {
                    col = col.iter().map(|x| -x).collect();
                }
            }
            basis.push(col);
        }
    }
    basis
}

/// Solve `a * x = b` over the integers; `None` when no integral solution
/// exists. Free coordinates are set to zero.
pub fn solve_in_lattice(a: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(b.len(), a.rows(), "solve_in_lattice: rhs length mismatch");
    let s = snf(a);
    let ub = s.u.mul_vec(b);
    let min = a.rows().min(a.cols());
    let mut y = vec![Int::zero(); a.cols()];
    for i in 0..a.rows() {
        let di = if i < min {
            s.d.at(i, i).clone()
        } else {
            Int::zero()
        };
        if di.is_zero() {
            if !ub[i].is_zero() {
                return None;
            }
        } else {
            if !(&ub[i] % &di).is_zero() {
                return None;
            }
            y[i] = &ub[i] / &di;
        }
    }
    Some(s.v.mul_vec(&y))
}

/// Finite abelian group in invariant-factor form.
///
/// `invariant_factors` lists factors >= 2 with each dividing the next; the
/// empty list is the trivial group. `generators`, when present, lifts each
/// cyclic factor to an ambient (rational) vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    pub invariant_factors: Vec<Int>,
    pub generators: Option<Vec<Vec<Rat>>>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup {
            invariant_factors: Vec::new(),
            generators: None,
        }
    }

    pub fn order(&self) -> Int {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

impl std::fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            write!(f, "0")
        } else {
            let parts: Vec<String> = self
                .invariant_factors
                .iter()
                .map(|d| format!("Z/{d}"))
                .collect();
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// Invariant factors of `Z^ambient_rank / column-span(sub_generators)`.
///
/// Errors with `NonFiniteQuotient` when the columns do not span a
/// finite-index sublattice. Generator lifts for each cyclic factor are
/// returned as columns of the inverse row transform.
pub fn cokernel_invariants(
    ambient_rank: usize,
    sub_generators: &IntMatrix,
) -> Result<FiniteAbelianGroup> {
    assert_eq!(
        sub_generators.rows(),
        ambient_rank,
        "cokernel_invariants: generators must live in Z^ambient_rank"
    );
    let s = snf(sub_generators);
    let rank = s.rank();
    if rank < ambient_rank {
        return Err(Error::NonFiniteQuotient {
            free_rank: ambient_rank - rank,
        });
    }
    let u_inv = s.u.inverse_unimodular();
    let mut factors = Vec::new();
    let mut gens = Vec::new();
    for (i, di) in s.diagonal().into_iter().enumerate() {
        if di > Int::one() {
            factors.push(di);
            gens.push(to_rat_vec(&u_inv.col(i)));
        }
    }
    let generators = if factors.is_empty() { None } else { Some(gens) };
    Ok(FiniteAbelianGroup {
        invariant_factors: factors,
        generators,
    })
}

/// Solve `sum_j x_j * cols[j] = target` over the rationals by Gaussian
/// elimination. Free coordinates are set to zero; `None` means the system
/// is inconsistent.
pub fn rat_solve(cols: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    let n = target.len();
    let k = cols.len();
    for c in cols {
        assert_eq!(c.len(), n, "rat_solve: column length mismatch");
    }
    // augmented matrix [cols | target], n x (k+1)
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0;
    for j in 0..k {
        let Some(p) = (r..n).find(|&i| !m[i][j].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][j].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..n {
            if i != r && !m[i][j].is_zero() {
                let f = m[i][j].clone();
                for jj in 0..=k {
                    let upd = &m[i][jj] - &f * &m[r][jj];
                    m[i][jj] = upd;
                }
            }
        }
        pivot_col_of_row.push(j);
        r += 1;
        if r == n {
            break;
        }
    }
    // inconsistent when a zero row has nonzero rhs
    for i in r..n {
        if !m[i][k].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); k];
    for (row, &j) in pivot_col_of_row.iter().enumerate() {
        x[j] = m[row][k].clone();
    }
    Some(x)
}

/// Rank over the rationals of a list of integer vectors.
pub fn rank_of_vectors(vectors: &[Vec<Int>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let n = vectors[0].len();
    let mut m: Vec<Vec<Rat>> = vectors.iter().map(|v| to_rat_vec(v)).collect();
    let mut rank = 0;
    for j in 0..n {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][j].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][j].clone();
        for x in m[rank].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..m.len() {
            if i != rank && !m[i][j].is_zero() {
                let f = m[i][j].clone();
                for jj in 0..n {
                    let upd = &m[i][jj] - &f * &m[rank][jj];
                    m[i][jj] = upd;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Basis of the saturation `(Q-span of columns) ∩ Z^rank`, returned as
/// matrix columns.
pub fn saturate(sub_generators: &IntMatrix) -> IntMatrix {
    let s = snf(sub_generators);
    let rank = s.rank();
    let u_inv = s.u.inverse_unimodular();
    let cols: Vec<Vec<Int>> = (0..rank).map(|i| u_inv.col(i)).collect();
    if cols.is_empty() {
        IntMatrix::zero(sub_generators.rows(), 0)
    } else {
        IntMatrix::from_cols(cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(2);
        let s = snf(&a);
        assert_eq!(s.d, IntMatrix::identity(2));
    }

    #[test]
    fn snf_diag_2_3() {
        let a = IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]);
        let s = snf(&a);
        assert_eq!(s.diagonal(), vec![int(1), int(6)]);
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
        assert!(s.u.is_unimodular() && s.v.is_unimodular());
    }

    #[test]
    fn snf_zero() {
        let a = IntMatrix::zero(2, 2);
        let s = snf(&a);
        assert!(s.d.is_zero());
    }

    #[test]
    fn snf_rectangular() {
        let a = IntMatrix::from_i64(2, 3, &[2, 4, 4, -6, 6, 12]);
        let s = snf(&a);
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
        let diag = s.diagonal();
        assert_eq!(diag, vec![int(2), int(6)]);
    }

    #[test]
    fn kernel_of_row_sums() {
        let a = IntMatrix::from_i64(1, 2, &[1, 1]);
        assert_eq!(kernel_basis(&a), vec![vec![int(1), int(-1)]]);
        let id = IntMatrix::identity(3);
        assert!(kernel_basis(&id).is_empty());
    }

    #[test]
    fn kernel_is_saturated() {
        let a = IntMatrix::from_i64(1, 2, &[2, 2]);
        assert_eq!(kernel_basis(&a), vec![vec![int(1), int(-1)]]);
    }

    #[test]
    fn solve_diagonal() {
        let a = IntMatrix::from_i64(2, 2, &[2, 0, 0, 2]);
        assert_eq!(
            solve_in_lattice(&a, &[int(4), int(6)]),
            Some(vec![int(2), int(3)])
        );
        assert_eq!(solve_in_lattice(&a, &[int(1), int(0)]), None);
    }

    #[test]
    fn solve_triangular() {
        let a = IntMatrix::from_i64(2, 2, &[1, 1, 0, 2]);
        assert_eq!(
            solve_in_lattice(&a, &[int(3), int(4)]),
            Some(vec![int(1), int(2)])
        );
    }

    #[test]
    fn cokernel_examples() {
        let m = IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]);
        let g = cokernel_invariants(2, &m).unwrap();
        assert_eq!(g.invariant_factors, vec![int(6)]);

        let m = IntMatrix::from_i64(1, 1, &[1]);
        assert!(cokernel_invariants(1, &m).unwrap().is_trivial());

        let m = IntMatrix::from_i64(1, 1, &[4]);
        assert_eq!(
            cokernel_invariants(1, &m).unwrap().invariant_factors,
            vec![int(4)]
        );
    }

    #[test]
    fn cokernel_rejects_free_rank() {
        let m = IntMatrix::from_i64(2, 1, &[2, 0]);
        assert_eq!(
            cokernel_invariants(2, &m),
            Err(Error::NonFiniteQuotient { free_rank: 1 })
        );
    }

    #[test]
    fn saturate_examples() {
        let m = IntMatrix::from_i64(2, 1, &[2, 4]);
        assert_eq!(saturate(&m), IntMatrix::from_i64(2, 1, &[1, 2]));

        let id = IntMatrix::identity(2);
        let s = saturate(&id);
        // same span as the identity: must still be a basis of Z^2
        assert!(s.is_unimodular());

        let m = IntMatrix::from_i64(1, 2, &[2, 3]);
        assert_eq!(saturate(&m), IntMatrix::from_i64(1, 1, &[1]));
    }

    #[test]
    fn det_and_inverse() {
        let m = IntMatrix::from_i64(3, 3, &[1, 0, 3, 2, 1, 0, 9, 8, 7]);
        assert_eq!(m.det(), int(28));
        let u = IntMatrix::from_i64(2, 2, &[2, 1, 1, 1]);
        let inv = u.inverse_unimodular();
        assert_eq!(u.mul(&inv), IntMatrix::identity(2));
    }

    #[test]
    fn cokernel_generator_lifts() {
        // Z^2 / <(2,0),(0,4)> = Z/2 x Z/4
        let m = IntMatrix::from_i64(2, 2, &[2, 0, 0, 4]);
        let g = cokernel_invariants(2, &m).unwrap();
        assert_eq!(g.invariant_factors, vec![int(2), int(4)]);
        let gens = g.generators.unwrap();
        assert_eq!(gens.len(), 2);
    }
}
