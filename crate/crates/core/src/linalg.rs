//! Exact linear algebra over prime fields `F_q`.
//!
//! Matrices are dense, row-major, with entries reduced mod `q`. Reduced
//! row-echelon form is the canonical representative for row spaces: two
//! subspaces are equal iff their RREF bases are identical, which is what
//! makes exhaustive subspace enumeration duplicate-free.

use std::fmt;

/// Deterministic trial-division primality check; `q` stays tiny here.
pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn inv_mod(a: u64, q: u64) -> u64 {
    // extended Euclid; a != 0 mod q, q prime
    let (mut old_r, mut r) = (a as i64, q as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let quotient = old_r / r;
        (old_r, r) = (r, old_r - quotient * r);
        (old_s, s) = (s, old_s - quotient * s);
    }
    debug_assert_eq!(old_r, 1, "element not invertible");
    old_s.rem_euclid(q as i64) as u64
}

/// Dense matrix over `F_q`, `q` prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeFieldMatrix {
    q: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl PrimeFieldMatrix {
    pub fn new(q: u64, rows: usize, cols: usize, entries: Vec<u64>) -> Self {
        assert!(is_prime(q), "modulus {q} is not prime");
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        let entries = entries.into_iter().map(|e| e % q).collect();
        PrimeFieldMatrix { q, rows, cols, entries }
    }

    pub fn zero(q: u64, rows: usize, cols: usize) -> Self {
        Self::new(q, rows, cols, vec![0; rows * cols])
    }

    pub fn from_rows(q: u64, rows: Vec<Vec<u64>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for row in &rows {
            assert_eq!(row.len(), n_cols, "ragged rows");
            entries.extend_from_slice(row);
        }
        Self::new(q, n_rows, n_cols, entries)
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v % self.q;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Vertical stack: rows of `self` above rows of `other`.
    pub fn stacked(&self, other: &PrimeFieldMatrix) -> PrimeFieldMatrix {
        assert_eq!(self.q, other.q, "mixed moduli");
        assert_eq!(self.cols, other.cols, "mixed widths");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        PrimeFieldMatrix {
            q: self.q,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// In-place reduced row-echelon form. Returns the rank.
    pub fn rref_in_place(&mut self) -> usize {
        let q = self.q;
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..self.cols {
                    let (a, b) = (self.get(pivot_row, c), self.get(src, c));
                    self.set(pivot_row, c, b);
                    self.set(src, c, a);
                }
            }
            let inv = inv_mod(self.get(pivot_row, col), q);
            for c in 0..self.cols {
                let v = self.get(pivot_row, c) * inv % q;
                self.set(pivot_row, c, v);
            }
            for r in 0..self.rows {
                if r != pivot_row && self.get(r, col) != 0 {
                    let factor = self.get(r, col);
                    for c in 0..self.cols {
                        let v = (self.get(r, c) + (q - factor % q) * self.get(pivot_row, c)) % q;
                        self.set(r, c, v);
                    }
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    /// Rank via Gaussian elimination on a scratch copy.
    pub fn rank(&self) -> usize {
        self.clone().rref_in_place()
    }

    /// RREF with zero rows removed: the canonical basis of the row space.
    pub fn row_space_basis(&self) -> PrimeFieldMatrix {
        let mut scratch = self.clone();
        let rank = scratch.rref_in_place();
        let entries = scratch.entries[..rank * scratch.cols].to_vec();
        PrimeFieldMatrix {
            q: self.q,
            rows: rank,
            cols: self.cols,
            entries,
        }
    }
}

impl fmt::Display for PrimeFieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(u64::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(13));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(!is_prime(9));
    }

    #[test]
    fn modular_inverse() {
        for q in [2u64, 3, 5, 7, 11] {
            for a in 1..q {
                assert_eq!(a * inv_mod(a, q) % q, 1, "a={a} q={q}");
            }
        }
    }

    #[test]
    fn rref_canonicalizes_row_space() {
        // same row space written two ways over F_3
        let a = PrimeFieldMatrix::from_rows(3, vec![vec![1, 2, 0], vec![0, 1, 1]]);
        let b = PrimeFieldMatrix::from_rows(3, vec![vec![1, 0, 1], vec![1, 1, 2]]);
        assert_eq!(a.row_space_basis(), b.row_space_basis());
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = PrimeFieldMatrix::from_rows(2, vec![vec![1, 1, 0], vec![1, 1, 0], vec![0, 0, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(PrimeFieldMatrix::zero(5, 3, 3).rank(), 0);
    }

    #[test]
    fn stack_rank_gives_sum_dimension() {
        let a = PrimeFieldMatrix::from_rows(2, vec![vec![1, 0, 0]]);
        let b = PrimeFieldMatrix::from_rows(2, vec![vec![1, 1, 0], vec![0, 0, 1]]);
        assert_eq!(a.stacked(&b).rank(), 3);
    }
}
