//! Dense exact linear algebra over a prime field `F_q`.
//!
//! Matrices are row-major `u64` residues, always reduced mod `q`. Rank,
//! reduced row echelon form, and null-space bases all go through
//! [`EchelonBasis`], an incremental Gaussian eliminator that keeps its rows
//! in fully reduced form (each pivot column is zero in every other row).
//! Pivot normalization uses exact modular inverses, so results are exact
//! for any prime `q`.

use std::io::{self, Write};

use crate::{Error, Result};

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, q: u64) -> u64 {
    let mut acc = 1u64 % q;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    acc
}

/// A prime field `F_q`, carrying its scalar arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    /// Build the field, rejecting composite or degenerate moduli.
    pub fn new(q: u64) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        // Products of two residues must fit in u64.
        assert!(q < (1u64 << 32), "field modulus too large");
        Ok(Self { q })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    /// Multiplicative inverse of a nonzero residue (Fermat).
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.q != 0, "inverse of zero");
        mod_pow(a, self.q - 2, self.q)
    }
}

/// Dense row-major matrix over `F_q`; entries are residues in `[0, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGF {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl MatrixGF {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    /// Build from explicit rows; every row must have the same length and
    /// every entry must already be reduced mod q.
    pub fn from_rows(field: PrimeField, rows: Vec<Vec<u64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in &rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {} columns",
                    row.len(),
                    cols
                )));
            }
            for &v in row {
                if v >= field.q() {
                    return Err(Error::EntryOutOfRange { value: v, q: field.q() });
                }
                entries.push(v);
            }
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        debug_assert!(v < self.field.q());
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> MatrixGF {
        let mut t = MatrixGF::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &MatrixGF) -> Result<MatrixGF> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let q = self.field.q();
        let mut out = MatrixGF::zero(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = (out.get(r, c) + a * other.get(k, c)) % q;
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Row rank via Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.field, self.cols);
        for r in 0..self.rows {
            basis.insert(self.row(r).to_vec());
        }
        basis.rank()
    }

    /// Reduced row echelon form, same dimensions (zero rows at the bottom).
    pub fn rref(&self) -> MatrixGF {
        let mut basis = EchelonBasis::new(self.field, self.cols);
        for r in 0..self.rows {
            basis.insert(self.row(r).to_vec());
        }
        let mut out = MatrixGF::zero(self.field, self.rows, self.cols);
        for (i, row) in basis.rows_by_pivot().into_iter().enumerate() {
            out.entries[i * self.cols..(i + 1) * self.cols].copy_from_slice(row);
        }
        out
    }

    /// A basis of the right null space `{x : self · xᵀ = 0}`, one vector per
    /// row; the result has `cols - rank` rows (possibly zero).
    pub fn nullspace_basis(&self) -> MatrixGF {
        let mut basis = EchelonBasis::new(self.field, self.cols);
        for r in 0..self.rows {
            basis.insert(self.row(r).to_vec());
        }
        basis.nullspace_basis()
    }

    /// Plain-text serialization: a `q <q> rows <r> cols <c>` header line,
    /// then one space-separated line per row.
    pub fn write_text<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(
            w,
            "q {} rows {} cols {}",
            self.field.q(),
            self.rows,
            self.cols
        )?;
        let mut line = String::new();
        for r in 0..self.rows {
            line.clear();
            for c in 0..self.cols {
                if c > 0 {
                    line.push(' ');
                }
                line.push_str(itoa(self.get(r, c)).as_str());
            }
            writeln!(w, "{line}")?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_text(&mut buf).expect("write to Vec cannot fail");
        String::from_utf8(buf).expect("text export is ASCII")
    }
}

fn itoa(v: u64) -> String {
    v.to_string()
}

/// Incremental Gaussian eliminator over `F_q`.
///
/// Rows are kept in *reduced* echelon form: every pivot entry is 1 and every
/// pivot column is zero in all other stored rows. Inserting a vector reduces
/// it against the stored rows; if a nonzero remainder survives it becomes a
/// new row and its pivot column is cleared from the rest of the basis.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    field: PrimeField,
    cols: usize,
    rows: Vec<Vec<u64>>,
    /// Column index of each stored row's pivot.
    pivot_cols: Vec<usize>,
    /// For each column, the stored row (if any) whose pivot sits there.
    row_of_col: Vec<Option<u32>>,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        Self {
            field,
            cols,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
            row_of_col: vec![None; cols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduce `v` in place against the basis. Because stored rows are fully
    /// reduced, each position of `v` triggers at most one subtraction.
    /// Returns the reduced vector's leading nonzero column, if any.
    pub fn reduce(&self, v: &mut [u64]) -> Option<usize> {
        debug_assert_eq!(v.len(), self.cols);
        let f = self.field;
        let mut lead = None;
        for c in 0..self.cols {
            if v[c] == 0 {
                continue;
            }
            match self.row_of_col[c] {
                Some(r) => {
                    let coeff = v[c];
                    let row = &self.rows[r as usize];
                    // Stored rows have zeros at all other pivot columns, so
                    // this subtraction never reintroduces work left of c.
                    for i in c..self.cols {
                        if row[i] != 0 {
                            v[i] = f.sub(v[i], f.mul(coeff, row[i]));
                        }
                    }
                }
                None => {
                    if lead.is_none() {
                        lead = Some(c);
                    }
                }
            }
        }
        lead
    }

    /// Insert a vector; returns true when it enlarged the basis.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let Some(lead) = self.reduce(&mut v) else {
            return false;
        };
        let f = self.field;
        // Normalize the pivot to 1.
        let inv = f.inv(v[lead]);
        if inv != 1 {
            for x in v.iter_mut() {
                if *x != 0 {
                    *x = f.mul(*x, inv);
                }
            }
        }
        // Clear the new pivot column from every stored row.
        for r in 0..self.rows.len() {
            let coeff = self.rows[r][lead];
            if coeff != 0 {
                for i in lead..self.cols {
                    if v[i] != 0 {
                        self.rows[r][i] = f.sub(self.rows[r][i], f.mul(coeff, v[i]));
                    }
                }
            }
        }
        self.row_of_col[lead] = Some(self.rows.len() as u32);
        self.pivot_cols.push(lead);
        self.rows.push(v);
        true
    }

    /// Stored rows ordered by pivot column; this is exactly the nonzero part
    /// of the reduced row echelon form of everything inserted.
    pub fn rows_by_pivot(&self) -> Vec<&[u64]> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.pivot_cols[r]);
        order.into_iter().map(|r| self.rows[r].as_slice()).collect()
    }

    /// Pivot columns in increasing order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p = self.pivot_cols.clone();
        p.sort_unstable();
        p
    }

    /// Null-space basis of the inserted row span: one vector per free
    /// column, with a 1 in the free column and pivot entries chosen to
    /// cancel the corresponding rref column.
    pub fn nullspace_basis(&self) -> MatrixGF {
        let f = self.field;
        let free: Vec<usize> = (0..self.cols)
            .filter(|&c| self.row_of_col[c].is_none())
            .collect();
        let mut out = MatrixGF::zero(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, 1 % f.q());
            for (&pc, _) in self.pivot_cols.iter().zip(&self.rows) {
                let r = self.row_of_col[pc].expect("pivot column has a row") as usize;
                let v = self.rows[r][fc];
                if v != 0 {
                    out.set(i, pc, f.neg(v));
                }
            }
        }
        out
    }
}
