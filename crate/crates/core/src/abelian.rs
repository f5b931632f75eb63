//! Finitely generated abelian groups and exact integer matrices.
//!
//! Torsion is always kept in primary form: a multiset of prime powers
//! `Z/p^r`, sorted by `(p, r)`. Matrix entries are arbitrary precision.

use std::fmt;
use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_prime::nt_funcs::{factorize, factorize64, is_prime64};
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime power exponent must be at least 1")]
    ZeroExponent,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("matrix has {rows}x{cols} shape but {len} entries were supplied")]
    Shape {
        rows: usize,
        cols: usize,
        len: usize,
    },
}

/// A cyclic group `Z/p^r` with `p` prime and `r >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePower {
    prime: u64,
    exponent: u32,
}

impl PrimePower {
    pub fn new(prime: u64, exponent: u32) -> Result<Self, AbelianError> {
        if !is_prime64(prime) {
            return Err(AbelianError::NotPrime(prime));
        }
        if exponent == 0 {
            return Err(AbelianError::ZeroExponent);
        }
        Ok(PrimePower { prime, exponent })
    }

    /// Recognises `q = p^r`.
    pub fn from_order(q: u64) -> Result<Self, AbelianError> {
        if q < 2 {
            return Err(AbelianError::NotPrimePower(q));
        }
        let f = factorize64(q);
        if f.len() != 1 {
            return Err(AbelianError::NotPrimePower(q));
        }
        let (&p, &e) = f.iter().next().expect("one factor");
        Ok(PrimePower {
            prime: p,
            exponent: e as u32,
        })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.prime).pow(self.exponent)
    }

    /// The order as a machine integer, when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        self.prime.checked_pow(self.exponent)
    }

    pub fn is_odd(&self) -> bool {
        self.prime != 2
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.order())
    }
}

/// `Z^free_rank ⊕ ⊕ Z/p_i^{r_i}` in canonical form.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FgAbGroup {
    free_rank: usize,
    torsion: Vec<PrimePower>,
}

impl FgAbGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn new(free_rank: usize, mut torsion: Vec<PrimePower>) -> Self {
        torsion.sort();
        FgAbGroup { free_rank, torsion }
    }

    /// Builds a group from `(p, r)` pairs, checking each is a genuine prime power.
    pub fn from_pairs(free_rank: usize, pairs: &[(u64, u32)]) -> Result<Self, AbelianError> {
        let torsion = pairs
            .iter()
            .map(|&(p, r)| PrimePower::new(p, r))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(free_rank, torsion))
    }

    /// `Z/n`, split into prime powers. `n = 0` gives `Z`, `n = 1` the trivial group.
    pub fn cyclic(n: u64) -> Self {
        primary_decomposition([n])
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[PrimePower] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion(&self) -> bool {
        self.free_rank == 0
    }

    pub fn torsion_part(&self) -> FgAbGroup {
        FgAbGroup {
            free_rank: 0,
            torsion: self.torsion.clone(),
        }
    }

    /// Number of cyclic summands of `p`-power order.
    pub fn p_rank(&self, p: u64) -> usize {
        self.torsion.iter().filter(|t| t.prime == p).count()
    }

    /// The `p`-primary part of the torsion.
    pub fn p_primary(&self, p: u64) -> FgAbGroup {
        FgAbGroup::new(
            0,
            self.torsion
                .iter()
                .copied()
                .filter(|t| t.prime == p)
                .collect(),
        )
    }

    /// Torsion summands whose prime is odd.
    pub fn odd_torsion(&self) -> FgAbGroup {
        FgAbGroup::new(
            0,
            self.torsion
                .iter()
                .copied()
                .filter(PrimePower::is_odd)
                .collect(),
        )
    }

    pub fn has_prime(&self, p: u64) -> bool {
        self.p_rank(p) > 0
    }

    pub fn torsion_order(&self) -> BigUint {
        self.torsion.iter().map(PrimePower::order).product()
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut torsion = self.torsion.clone();
        torsion.extend_from_slice(&other.torsion);
        FgAbGroup::new(self.free_rank + other.free_rank, torsion)
    }

    /// `n` copies of `self`.
    pub fn repeat(&self, n: usize) -> FgAbGroup {
        let mut torsion = Vec::with_capacity(self.torsion.len() * n);
        for _ in 0..n {
            torsion.extend_from_slice(&self.torsion);
        }
        FgAbGroup::new(self.free_rank * n, torsion)
    }

    /// Cokernel of multiplication by `q` on this group.
    pub fn coker_mul(&self, q: &BigUint) -> FgAbGroup {
        let mut out = vec![cyclic_big(q); self.free_rank];
        for t in &self.torsion {
            out.push(cyclic_big(&t.order().gcd(q)));
        }
        out.iter().fold(FgAbGroup::zero(), |a, b| a.direct_sum(b))
    }

    /// Kernel of multiplication by `q` on this group (`q > 0`).
    pub fn ker_mul(&self, q: &BigUint) -> FgAbGroup {
        self.torsion
            .iter()
            .map(|t| cyclic_big(&t.order().gcd(q)))
            .fold(FgAbGroup::zero(), |a, b| a.direct_sum(&b))
    }
}

impl std::iter::Sum for FgAbGroup {
    fn sum<I: Iterator<Item = FgAbGroup>>(iter: I) -> Self {
        iter.fold(FgAbGroup::zero(), |a, b| a.direct_sum(&b))
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn direct_sum(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    a.direct_sum(b)
}

/// CRT-splits every `Z/n` into prime-power summands.
pub fn primary_decomposition<I: IntoIterator<Item = u64>>(orders: I) -> FgAbGroup {
    orders
        .into_iter()
        .map(|n| cyclic_big(&BigUint::from(n)))
        .sum()
}

fn cyclic_big(n: &BigUint) -> FgAbGroup {
    if n.is_zero() {
        return FgAbGroup::free(1);
    }
    if n.is_one() {
        return FgAbGroup::zero();
    }
    let factors: Vec<(u64, usize)> = match n.to_u64() {
        Some(small) => factorize64(small).into_iter().collect(),
        None => factorize(n.clone())
            .into_iter()
            .map(|(p, e)| (p.to_u64().expect("prime factor beyond 64 bits"), e))
            .collect(),
    };
    FgAbGroup::new(
        0,
        factors
            .into_iter()
            .map(|(p, e)| PrimePower {
                prime: p,
                exponent: e as u32,
            })
            .collect(),
    )
}

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, AbelianError> {
        if data.len() != rows * cols {
            return Err(AbelianError::Shape {
                rows,
                cols,
                len: data.len(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Convenience constructor from small rows; all rows must share a length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn diag(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m.data[i * n + i] = BigInt::from(e);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    /// Main diagonal, `min(rows, cols)` entries.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i += k * row_j
    fn add_row(&mut self, i: usize, j: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(j, c) * k;
            self.data[i * self.cols + c] += v;
        }
    }

    /// col_i += k * col_j
    fn add_col(&mut self, i: usize, j: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, j) * k;
            self.data[r * self.cols + i] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.get(i, c);
            self.set(i, c, v);
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    out.data[r * rhs.cols + c] += a * rhs.get(k, c);
                }
            }
        }
        out
    }
}

/// Smith normal form `U·A·V = D`.
#[derive(Debug, Clone)]
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Nonzero diagonal entries, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d
            .diagonal()
            .into_iter()
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form by unimodular row and column operations.
///
/// The diagonal satisfies `d_1 | d_2 | ...` with every `d_i >= 0`; zero
/// entries, if any, come last.
pub fn snf(a: &IntMatrix) -> Snf {
    let (rows, cols) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let Some((pr, pc)) = min_abs_entry(&d, t) else {
            break;
        };
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(d.get(t, t));
                d.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !d.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(d.get(t, t));
                d.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !d.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pr, pc) = min_abs_in_cross(&d, t);
                d.swap_rows(t, pr);
                u.swap_rows(t, pr);
                d.swap_cols(t, pc);
                v.swap_cols(t, pc);
                continue;
            }
            // pivot must divide the whole trailing block
            let pivot = d.get(t, t).clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    Snf { d, u, v }
}

fn min_abs_entry(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for r in t..m.rows {
        for c in t..m.cols {
            let x = m.get(r, c).abs();
            if x.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, _, b)| &x < b) {
                best = Some((r, c, x));
            }
        }
    }
    best.map(|(r, c, _)| (r, c))
}

fn min_abs_in_cross(m: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t, m.get(t, t).abs());
    let cands = (t + 1..m.rows)
        .map(|i| (i, t))
        .chain((t + 1..m.cols).map(|j| (t, j)));
    for (r, c) in cands {
        let x = m.get(r, c).abs();
        if !x.is_zero() && (best.2.is_zero() || x < best.2) {
            best = (r, c, x);
        }
    }
    (best.0, best.1)
}

/// `coker(A: Z^cols -> Z^rows)`.
pub fn cokernel(a: &IntMatrix) -> FgAbGroup {
    let s = snf(a);
    let factors = s.invariant_factors();
    let free = a.rows - factors.len();
    factors
        .iter()
        .map(|f| cyclic_big(f.magnitude()))
        .fold(FgAbGroup::free(free), |acc, g| acc.direct_sum(&g))
}

/// Rank over `Z/p` of a matrix given by rows of residues.
pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x % p).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = mod_inverse(m[rank][c], p);
        for x in m[rank].iter_mut() {
            *x = (*x * inv) % p;
        }
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let e = num_integer::Integer::extended_gcd(&(a as i128), &(p as i128));
    e.x.rem_euclid(p as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_of_diag_2_3() {
        let a = IntMatrix::diag(&[2, 3]);
        let s = snf(&a);
        assert_eq!(s.d.diagonal(), big(&[1, 6]));
        assert_eq!(&(&s.u * &a) * &s.v, s.d);
    }

    #[test]
    fn snf_of_empty_matrix() {
        let a = IntMatrix::zeros(0, 0);
        let s = snf(&a);
        assert_eq!(s.d.rows(), 0);
        assert_eq!(s.u.rows(), 0);
        assert_eq!(s.v.cols(), 0);
    }

    #[test]
    fn snf_of_upper_triangular() {
        let a = IntMatrix::from_rows(&[[2, 4], [0, 2]]);
        let s = snf(&a);
        assert_eq!(s.d.diagonal(), big(&[2, 2]));
    }

    #[test]
    fn snf_rectangular_with_zero_rows() {
        let a = IntMatrix::from_rows(&[[0, 0, 0], [0, 6, 0], [0, 0, 0], [0, 0, -4]]);
        let s = snf(&a);
        assert_eq!(s.d.diagonal(), big(&[2, 12, 0]));
        assert!(s.d.is_diagonal());
        assert_eq!(&(&s.u * &a) * &s.v, s.d);
    }

    #[test]
    fn cokernel_examples() {
        let z6 = cokernel(&IntMatrix::from_rows(&[[6]]));
        assert_eq!(z6, FgAbGroup::from_pairs(0, &[(2, 1), (3, 1)]).unwrap());
        assert_eq!(cokernel(&IntMatrix::from_rows(&[[0]])), FgAbGroup::free(1));
        assert_eq!(
            cokernel(&IntMatrix::diag(&[5, 1])),
            FgAbGroup::from_pairs(0, &[(5, 1)]).unwrap()
        );
        // Z^2 -> Z^0 has trivial cokernel; Z^0 -> Z^2 has cokernel Z^2
        assert_eq!(cokernel(&IntMatrix::zeros(0, 2)), FgAbGroup::zero());
        assert_eq!(cokernel(&IntMatrix::zeros(2, 0)), FgAbGroup::free(2));
    }

    #[test]
    fn direct_sum_examples() {
        let z5 = FgAbGroup::cyclic(5);
        let z_z25 = FgAbGroup::from_pairs(1, &[(5, 2)]).unwrap();
        let s = direct_sum(&z5, &z_z25);
        assert_eq!(s, FgAbGroup::from_pairs(1, &[(5, 1), (5, 2)]).unwrap());
        assert_eq!(s.to_string(), "Z + Z/5 + Z/25");
        assert_eq!(direct_sum(&FgAbGroup::zero(), &z5), z5);
        let z7 = FgAbGroup::cyclic(7);
        let twice = direct_sum(&z7, &z7);
        assert_eq!(twice.torsion().len(), 2);
        assert_ne!(twice, FgAbGroup::cyclic(49));
    }

    #[test]
    fn primary_decomposition_examples() {
        assert_eq!(
            primary_decomposition([175]),
            FgAbGroup::from_pairs(0, &[(5, 2), (7, 1)]).unwrap()
        );
        assert_eq!(
            primary_decomposition([5, 5]),
            FgAbGroup::from_pairs(0, &[(5, 1), (5, 1)]).unwrap()
        );
        assert_eq!(
            primary_decomposition([30]),
            FgAbGroup::from_pairs(0, &[(2, 1), (3, 1), (5, 1)]).unwrap()
        );
    }

    #[test]
    fn prime_power_validation() {
        assert_eq!(PrimePower::new(4, 1), Err(AbelianError::NotPrime(4)));
        assert_eq!(PrimePower::new(5, 0), Err(AbelianError::ZeroExponent));
        assert_eq!(
            PrimePower::from_order(125).unwrap(),
            PrimePower::new(5, 3).unwrap()
        );
        assert_eq!(
            PrimePower::from_order(12),
            Err(AbelianError::NotPrimePower(12))
        );
        assert_eq!(
            PrimePower::from_order(1),
            Err(AbelianError::NotPrimePower(1))
        );
    }

    #[test]
    fn multiplication_maps() {
        let q = BigUint::from(5u32);
        let g = FgAbGroup::from_pairs(2, &[(2, 1), (5, 2)]).unwrap();
        assert_eq!(
            g.coker_mul(&q),
            FgAbGroup::from_pairs(0, &[(5, 1), (5, 1), (5, 1)]).unwrap()
        );
        assert_eq!(g.ker_mul(&q), FgAbGroup::cyclic(5));
    }

    #[test]
    fn bareiss_determinant() {
        let a = IntMatrix::from_rows(&[[0, 2, 1], [3, 0, 4], [1, 1, 1]]);
        // expansion along the first row: -2*(3-4) + 1*(3-0) = 5
        assert_eq!(a.determinant(), BigInt::from(5));
        assert_eq!(IntMatrix::zeros(0, 0).determinant(), BigInt::one());
    }

    #[test]
    fn rank_over_small_fields() {
        assert_eq!(rank_mod_p(&[vec![1, 1], vec![1, 1]], 2), 1);
        assert_eq!(rank_mod_p(&[vec![1, 0], vec![0, 1]], 2), 2);
        assert_eq!(rank_mod_p(&[vec![2, 4], vec![1, 2]], 3), 1);
        assert_eq!(rank_mod_p(&[vec![3, 0], vec![0, 6]], 3), 0);
        assert_eq!(rank_mod_p(&[], 2), 0);
    }

    #[test]
    fn large_entries_do_not_overflow() {
        let huge = BigInt::from(u64::MAX) * BigInt::from(u64::MAX);
        let a = IntMatrix::from_vec(1, 1, vec![huge.clone()]).unwrap();
        let s = snf(&a);
        assert_eq!(s.d.get(0, 0), &huge);
    }
}
