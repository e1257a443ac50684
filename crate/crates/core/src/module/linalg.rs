//! Subspaces of F_pᵏ in reduced row echelon form.

use crate::field::PrimeField;

/// A subspace of F_pᵏ, stored as the rows of its reduced row echelon form.
/// Two subspaces are equal iff their stored rows are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    dim: usize,
    rows: Vec<Vec<u32>>,
}

fn rref(field: &PrimeField, mut rows: Vec<Vec<u32>>, dim: usize) -> Vec<Vec<u32>> {
    let mut pivot_row = 0;
    for col in 0..dim {
        let Some(sel) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, sel);
        let inv = field.inv(rows[pivot_row][col]).expect("nonzero pivot");
        for v in rows[pivot_row].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && row[col] != 0 {
                let factor = row[col];
                for (v, &q) in row.iter_mut().zip(&pivot).take(dim) {
                    *v = field.sub(*v, field.mul(factor, q));
                }
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows
}

impl Subspace {
    pub fn span(
        field: &PrimeField,
        dim: usize,
        vectors: impl IntoIterator<Item = Vec<u32>>,
    ) -> Self {
        let p = field.characteristic();
        let rows: Vec<Vec<u32>> = vectors
            .into_iter()
            .map(|v| {
                assert_eq!(v.len(), dim, "vector length");
                v.into_iter().map(|c| c % p).collect()
            })
            .collect();
        Self {
            dim,
            rows: rref(field, rows, dim),
        }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn full(field: &PrimeField, dim: usize) -> Self {
        Self::span(field, dim, (0..dim).map(|i| unit_vector(dim, i)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn contains(&self, field: &PrimeField, v: &[u32]) -> bool {
        let mut w: Vec<u32> = v.to_vec();
        for row in &self.rows {
            let pivot = row.iter().position(|&c| c != 0).expect("nonzero row");
            let factor = w[pivot];
            if factor != 0 {
                for c in 0..self.dim {
                    w[c] = field.sub(w[c], field.mul(factor, row[c]));
                }
            }
        }
        w.iter().all(|&c| c == 0)
    }

    pub fn is_subspace_of(&self, field: &PrimeField, other: &Self) -> bool {
        self.rows.iter().all(|r| other.contains(field, r))
    }

    pub fn sum(&self, field: &PrimeField, other: &Self) -> Self {
        Self::span(
            field,
            self.dim,
            self.rows.iter().chain(&other.rows).cloned(),
        )
    }

    /// Image under the linear map `v ↦ a·v` (a is k×k, row-major).
    pub fn image(&self, field: &PrimeField, a: &[Vec<u32>]) -> Self {
        Self::span(
            field,
            self.dim,
            self.rows.iter().map(|v| mat_vec(field, a, v)),
        )
    }

    /// Vectors w with ⟨w, v⟩ = 0 for every v in the subspace.
    pub fn orthogonal(&self, field: &PrimeField) -> Self {
        Self::span(field, self.dim, nullspace(field, &self.rows, self.dim))
    }
}

pub fn unit_vector(dim: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v
}

pub fn mat_vec(field: &PrimeField, a: &[Vec<u32>], v: &[u32]) -> Vec<u32> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0, |acc, (x, y)| field.add(acc, field.mul(*x, *y)))
        })
        .collect()
}

pub fn mat_mul(field: &PrimeField, a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(0, |acc, (x, brow)| field.add(acc, field.mul(*x, brow[j])))
                })
                .collect()
        })
        .collect()
}

/// Basis of {x : constraints·x = 0}.
pub fn nullspace(field: &PrimeField, constraints: &[Vec<u32>], dim: usize) -> Vec<Vec<u32>> {
    let reduced = rref(field, constraints.to_vec(), dim);
    let pivots: Vec<usize> = reduced
        .iter()
        .map(|r| r.iter().position(|&c| c != 0).expect("nonzero row"))
        .collect();
    let mut out = Vec::new();
    for free in (0..dim).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0; dim];
        v[free] = 1;
        for (row, &pc) in reduced.iter().zip(&pivots) {
            v[pc] = field.neg(row[free]);
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_and_membership() {
        let f = PrimeField::new(3).unwrap();
        let s = Subspace::span(&f, 3, vec![vec![1, 1, 0], vec![2, 2, 0], vec![0, 1, 1]]);
        assert_eq!(s.dimension(), 2);
        assert!(s.contains(&f, &[1, 2, 1]));
        assert!(!s.contains(&f, &[0, 0, 1]));
    }

    #[test]
    fn nullspace_is_orthogonal() {
        let f = PrimeField::new(5).unwrap();
        let rows = vec![vec![1, 2, 3, 4], vec![0, 1, 1, 0]];
        for v in nullspace(&f, &rows, 4) {
            assert_eq!(mat_vec(&f, &rows, &v), vec![0, 0]);
        }
        assert_eq!(nullspace(&f, &rows, 4).len(), 2);
    }
}
