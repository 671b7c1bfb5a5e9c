//! Square matrices over `BigInt` and `BigRational` with exact
//! determinants and characteristic polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntPoly;

/// A dense square matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            data: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        IntMatrix { dim, data }
    }

    /// Convenience constructor for tests and small literals.
    ///
    /// Panics if the rows do not form a square matrix.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        IntMatrix::from_fn(dim, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.dim + j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn add(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim);
        IntMatrix::from_fn(self.dim, |i, j| self.get(i, j) + rhs.get(i, j))
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = a * rhs.get(k, j);
                    out.data[i * n + j] += prod;
                }
            }
        }
        out
    }

    /// Adds `c` to every diagonal entry.
    fn add_scalar_diag(&mut self, c: &BigInt) {
        for i in 0..self.dim {
            self.data[i * self.dim + i] += c;
        }
    }

    /// Exact determinant by fraction-free Bareiss elimination. Every
    /// intermediate division is asserted exact.
    pub fn determinant(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.data.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    m.swap(k * n + j, r * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    let (q, r) = num.div_rem(&prev);
                    assert!(r.is_zero(), "Bareiss division must be exact");
                    m[i * n + j] = q;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = m[k * n + k].clone();
        }
        let det = m[(n - 1) * n + (n - 1)].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// Exact characteristic polynomial `det(xI - M)` by the
    /// Faddeev-LeVerrier recurrence; the trace division at step `k` is
    /// asserted exact. Monic of degree `dim`.
    pub fn charpoly(&self) -> IntPoly {
        let n = self.dim;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut aux = IntMatrix::identity(n);
        for k in 1..=n {
            aux = self.mul(&aux);
            let (q, r) = aux.trace().div_rem(&BigInt::from(k));
            assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
            let c = -q;
            aux.add_scalar_diag(&c);
            coeffs[n - k] = c;
        }
        IntPoly::new(coeffs)
    }

    /// Division-free characteristic polynomial (Berkowitz / Samuelson):
    /// the same `det(xI - M)`, computed without any division. Used as an
    /// independent route to cross-check [`IntMatrix::charpoly`].
    pub fn charpoly_division_free(&self) -> IntPoly {
        let n = self.dim;
        // Descending coefficient vector of the leading k x k principal
        // submatrix's characteristic polynomial; starts at the empty matrix.
        let mut c: Vec<BigInt> = vec![BigInt::one()];
        for k in 1..=n {
            // Toeplitz column: [1, -a_kk, -(R S), -(R A S), -(R A^2 S), ...]
            // where A is the leading (k-1) x (k-1) block, R the row to its
            // left-below, S the column above the corner.
            let mut t = Vec::with_capacity(k + 1);
            t.push(BigInt::one());
            t.push(-self.get(k - 1, k - 1).clone());
            if k >= 2 {
                let mut w: Vec<BigInt> = (0..k - 1).map(|i| self.get(i, k - 1).clone()).collect();
                for step in 0..k - 1 {
                    let dot: BigInt = (0..k - 1).map(|i| self.get(k - 1, i) * &w[i]).sum();
                    t.push(-dot);
                    if step + 1 < k - 1 {
                        w = (0..k - 1)
                            .map(|r| (0..k - 1).map(|s| self.get(r, s) * &w[s]).sum())
                            .collect();
                    }
                }
            }
            let mut cnew = vec![BigInt::zero(); k + 1];
            for (j, cj) in c.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                for (off, toff) in t.iter().enumerate() {
                    if j + off <= k {
                        cnew[j + off] += cj * toff;
                    }
                }
            }
            c = cnew;
        }
        c.reverse();
        IntPoly::new(c)
    }
}

/// A dense square matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    dim: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(dim: usize) -> Self {
        RationalMatrix {
            dim,
            data: vec![BigRational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = RationalMatrix::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = BigRational::one();
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        RationalMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.dim + j]
    }

    /// Exact rational determinant by Gaussian elimination.
    pub fn determinant(&self) -> BigRational {
        let n = self.dim;
        if n == 0 {
            return BigRational::one();
        }
        let mut m = self.data.clone();
        let mut det = BigRational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !m[r * n + k].is_zero()) else {
                return BigRational::zero();
            };
            if p != k {
                for j in 0..n {
                    m.swap(k * n + j, p * n + j);
                }
                det = -det;
            }
            let pivot = m[k * n + k].clone();
            det *= &pivot;
            for i in k + 1..n {
                if m[i * n + k].is_zero() {
                    continue;
                }
                let factor = &m[i * n + k] / &pivot;
                for j in k..n {
                    let sub = &factor * &m[k * n + j];
                    m[i * n + j] -= sub;
                }
            }
        }
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Cofactor-expansion determinant: the brute-force oracle for small dims.
    fn cofactor_det(m: &IntMatrix) -> BigInt {
        let n = m.dim();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut det = BigInt::zero();
        for j in 0..n {
            if m.get(0, j).is_zero() {
                continue;
            }
            let minor = IntMatrix::from_fn(n - 1, |r, c| {
                m.get(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = m.get(0, j) * cofactor_det(&minor);
            if j % 2 == 0 {
                det += term;
            } else {
                det -= term;
            }
        }
        det
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(IntMatrix::identity(3).determinant(), BigInt::one());
        let swap = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.determinant(), BigInt::from(-1));
        // 4x4 all-ones minus identity
        let k4 = IntMatrix::from_fn(4, |i, j| BigInt::from(if i == j { 0 } else { 1 }));
        assert_eq!(k4.determinant(), BigInt::from(-3));
    }

    #[test]
    fn charpoly_small_cases() {
        assert_eq!(IntMatrix::zeros(3).charpoly(), IntPoly::from_i64(&[0, 0, 0, 1]));
        let swap = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.charpoly(), IntPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(IntMatrix::zeros(0).charpoly(), IntPoly::one());
    }

    #[test]
    fn determinant_is_charpoly_at_zero_up_to_sign() {
        let m = IntMatrix::from_i64_rows(&[&[2, -1, 3], &[0, 4, 1], &[5, -2, 0]]);
        let c0 = m.charpoly().coeff(0);
        let sign = if m.dim() % 2 == 0 { 1 } else { -1 };
        assert_eq!(m.determinant(), c0 * BigInt::from(sign));
    }

    #[test]
    fn charpoly_routes_agree() {
        let cases = [
            IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]),
            IntMatrix::from_i64_rows(&[&[2, -1, 3], &[0, 4, 1], &[5, -2, 0]]),
            IntMatrix::from_i64_rows(&[
                &[1, 2, 3, 4],
                &[0, -1, 1, 0],
                &[7, 0, 0, 2],
                &[-3, 1, 1, 1],
            ]),
            IntMatrix::zeros(5),
            IntMatrix::identity(4),
        ];
        for m in &cases {
            assert_eq!(m.charpoly(), m.charpoly_division_free());
        }
    }

    #[test]
    fn charpoly_of_block_diagonal_is_product_of_blocks() {
        let a = IntMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let b = IntMatrix::from_i64_rows(&[&[0, -1, 2], &[5, 1, 0], &[1, 1, 1]]);
        let block = IntMatrix::from_fn(5, |i, j| match (i < 2, j < 2) {
            (true, true) => a.get(i, j).clone(),
            (false, false) => b.get(i - 2, j - 2).clone(),
            _ => BigInt::zero(),
        });
        assert_eq!(block.charpoly(), &a.charpoly() * &b.charpoly());
    }

    #[test]
    fn rational_determinant_small_cases() {
        assert_eq!(RationalMatrix::identity(3).determinant(), BigRational::one());
        let m = RationalMatrix::from_fn(2, |i, j| {
            if i == j {
                BigRational::new(BigInt::one(), BigInt::from(if i == 0 { 2 } else { 3 }))
            } else {
                BigRational::zero()
            }
        });
        assert_eq!(
            m.determinant(),
            BigRational::new(BigInt::one(), BigInt::from(6))
        );
    }

    proptest::proptest! {
        #[test]
        fn bareiss_matches_cofactor_expansion(
            dim in 1usize..=5,
            seed in proptest::collection::vec(-4i64..=4, 25),
        ) {
            let m = IntMatrix::from_fn(dim, |i, j| BigInt::from(seed[i * 5 + j]));
            proptest::prop_assert_eq!(m.determinant(), cofactor_det(&m));
        }

        #[test]
        fn charpoly_strategies_agree_on_random_matrices(
            dim in 1usize..=5,
            seed in proptest::collection::vec(-4i64..=4, 25),
        ) {
            let m = IntMatrix::from_fn(dim, |i, j| BigInt::from(seed[i * 5 + j]));
            proptest::prop_assert_eq!(m.charpoly(), m.charpoly_division_free());
        }
    }
}
