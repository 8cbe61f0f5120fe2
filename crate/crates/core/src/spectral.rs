//! Symmetric matrices of order at most 5: exact characteristic polynomials,
//! cyclic Jacobi eigensolver, principal submatrices and interlacing checks.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{format_rational, from_f64, int, parse_rational, rat, to_f64, Rational};
use crate::poly::UniPoly;
use crate::ring::det;

/// Largest supported order.
pub const MAX_ORDER: usize = 5;

/// Stored upper triangle, row by row.
#[derive(Debug, Clone, PartialEq)]
pub enum Entries {
    Exact(Vec<Rational>),
    Float(Vec<f64>),
}

/// Symmetric matrix; only the upper triangle is stored, so symmetry cannot break.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    entries: Entries,
}

fn packed_len(n: usize) -> usize {
    n * (n + 1) / 2
}

impl SymMatrix {
    fn check_order(n: usize) -> Result<()> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Domain(format!("matrix order {n} outside 1..={MAX_ORDER}")));
        }
        Ok(())
    }

    pub fn zeros_exact(n: usize) -> Self {
        Self { n, entries: Entries::Exact(vec![Rational::zero(); packed_len(n)]) }
    }

    pub fn zeros_float(n: usize) -> Self {
        Self { n, entries: Entries::Float(vec![0.0; packed_len(n)]) }
    }

    pub fn identity_exact(n: usize) -> Self {
        let mut m = Self::zeros_exact(n);
        for i in 0..n {
            m.set_exact(i, i, int(1));
        }
        m
    }

    pub fn identity_float(n: usize) -> Self {
        let mut m = Self::zeros_float(n);
        for i in 0..n {
            m.set_f64(i, i, 1.0);
        }
        m
    }

    pub fn diag_exact(d: &[Rational]) -> Self {
        let mut m = Self::zeros_exact(d.len());
        for (i, x) in d.iter().enumerate() {
            m.set_exact(i, i, x.clone());
        }
        m
    }

    pub fn diag_float(d: &[f64]) -> Self {
        let mut m = Self::zeros_float(d.len());
        for (i, &x) in d.iter().enumerate() {
            m.set_f64(i, i, x);
        }
        m
    }

    /// From full rows; the rows must form a symmetric square array.
    pub fn from_rows_exact(rows: &[Vec<Rational>]) -> Result<Self> {
        let n = rows.len();
        Self::check_order(n)?;
        let mut m = Self::zeros_exact(n);
        for i in 0..n {
            if rows[i].len() != n {
                return Err(Error::Input(format!("row {} has {} entries, expected {n}", i + 1, rows[i].len())));
            }
            for j in i..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::Input(format!("entries ({},{}) and ({},{}) differ", i + 1, j + 1, j + 1, i + 1)));
                }
                m.set_exact(i, j, rows[i][j].clone());
            }
        }
        Ok(m)
    }

    /// From full rows of floats; asymmetry beyond `1e-12` is rejected.
    pub fn from_rows_f64(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        Self::check_order(n)?;
        let mut m = Self::zeros_float(n);
        for i in 0..n {
            if rows[i].len() != n {
                return Err(Error::Input(format!("row {} has {} entries, expected {n}", i + 1, rows[i].len())));
            }
            for j in i..n {
                if (rows[i][j] - rows[j][i]).abs() > 1e-12 {
                    return Err(Error::Input(format!("entries ({},{}) and ({},{}) differ", i + 1, j + 1, j + 1, i + 1)));
                }
                m.set_f64(i, j, rows[i][j]);
            }
        }
        Ok(m)
    }

    /// Parses row-major text: rows split by newlines or `;`, entries by whitespace or commas.
    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<Vec<Rational>> = text
            .split(['\n', ';'])
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| {
                r.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(parse_rational)
                    .collect()
            })
            .collect::<Result<_>>()?;
        Self::from_rows_exact(&rows)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.entries, Entries::Exact(_))
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        assert!(i < self.n && j < self.n, "index ({i},{j}) out of range");
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        i * self.n - i * (i + 1) / 2 + i + (j - i)
    }

    /// Exact entry, or `None` in float mode.
    pub fn get_exact(&self, i: usize, j: usize) -> Option<&Rational> {
        match &self.entries {
            Entries::Exact(v) => Some(&v[self.idx(i, j)]),
            Entries::Float(_) => None,
        }
    }

    /// Entry as a float in either mode.
    pub fn get_f64(&self, i: usize, j: usize) -> f64 {
        let k = self.idx(i, j);
        match &self.entries {
            Entries::Exact(v) => to_f64(&v[k]),
            Entries::Float(v) => v[k],
        }
    }

    pub fn set_exact(&mut self, i: usize, j: usize, value: Rational) {
        let k = self.idx(i, j);
        match &mut self.entries {
            Entries::Exact(v) => v[k] = value,
            Entries::Float(v) => v[k] = to_f64(&value),
        }
    }

    pub fn set_f64(&mut self, i: usize, j: usize, value: f64) {
        let k = self.idx(i, j);
        match &mut self.entries {
            Entries::Float(v) => v[k] = value,
            Entries::Exact(_) => panic!("set_f64 on an exact matrix"),
        }
    }

    /// Float copy of the matrix.
    pub fn to_float(&self) -> Self {
        match &self.entries {
            Entries::Float(_) => self.clone(),
            Entries::Exact(v) => Self { n: self.n, entries: Entries::Float(v.iter().map(to_f64).collect()) },
        }
    }

    /// Exact copy; float entries are converted to the rationals they denote.
    pub fn to_exact(&self) -> Result<Self> {
        match &self.entries {
            Entries::Exact(_) => Ok(self.clone()),
            Entries::Float(v) => Ok(Self {
                n: self.n,
                entries: Entries::Exact(v.iter().map(|&x| from_f64(x)).collect::<Result<_>>()?),
            }),
        }
    }

    pub fn rows_f64(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get_f64(i, j)).collect()).collect()
    }

    /// Full rows in exact mode.
    pub fn rows_exact(&self) -> Result<Vec<Vec<Rational>>> {
        match &self.entries {
            Entries::Exact(_) => Ok((0..self.n)
                .map(|i| (0..self.n).map(|j| self.get_exact(i, j).unwrap().clone()).collect())
                .collect()),
            Entries::Float(_) => Err(Error::Mode("exact rows requested from a float matrix".into())),
        }
    }

    pub fn trace_f64(&self) -> f64 {
        (0..self.n).map(|i| self.get_f64(i, i)).sum()
    }

    pub fn trace_exact(&self) -> Result<Rational> {
        let mut t = Rational::zero();
        for i in 0..self.n {
            t += self
                .get_exact(i, i)
                .ok_or_else(|| Error::Mode("exact trace of a float matrix".into()))?;
        }
        Ok(t)
    }

    /// Smallest entry, as a float.
    pub fn min_entry(&self) -> f64 {
        let mut m = f64::INFINITY;
        for i in 0..self.n {
            for j in i..self.n {
                m = m.min(self.get_f64(i, j));
            }
        }
        m
    }

    /// Rows and columns `idx` (0-based, strictly increasing) in the same mode.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Result<Self> {
        if idx.is_empty() || idx.windows(2).any(|w| w[0] >= w[1]) || idx.iter().any(|&i| i >= self.n) {
            return Err(Error::Domain(format!(
                "indices {idx:?} must be strictly increasing and below {}",
                self.n
            )));
        }
        Ok(self.reindex(idx))
    }

    fn reindex(&self, idx: &[usize]) -> Self {
        let k = idx.len();
        let mut out = match self.entries {
            Entries::Exact(_) => Self::zeros_exact(k),
            Entries::Float(_) => Self::zeros_float(k),
        };
        for a in 0..k {
            for b in a..k {
                match &self.entries {
                    Entries::Exact(_) => out.set_exact(a, b, self.get_exact(idx[a], idx[b]).unwrap().clone()),
                    Entries::Float(_) => out.set_f64(a, b, self.get_f64(idx[a], idx[b])),
                }
            }
        }
        out
    }

    /// `P M P^T` where row `i` of the result is row `perm[i]` of `M`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Domain(format!("{perm:?} is not a permutation of 0..{}", self.n)));
        }
        Ok(self.reindex(perm))
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| match self.get_exact(i, j) {
                    Some(x) => format_rational(x),
                    None => format!("{:.12}", self.get_f64(i, j)),
                })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(x I - M)` of any square rational array.
pub fn charpoly_of_rows(rows: &[Vec<Rational>]) -> UniPoly {
    let n = rows.len();
    let m: Vec<Vec<UniPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = UniPoly::constant(-rows[i][j].clone());
                    if i == j {
                        c.add(&UniPoly::x())
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    det(&m)
}

/// `det(x I - M)` with exact rational coefficients.
pub fn charpoly_exact(m: &SymMatrix) -> Result<UniPoly> {
    Ok(charpoly_of_rows(&m.rows_exact()?))
}

/// `det(I - M)`, the characteristic polynomial at one.
pub fn det_identity_minus(m: &SymMatrix) -> Result<Rational> {
    let rows = m.rows_exact()?;
    let n = rows.len();
    let a: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| int(i64::from(i == j)) - &rows[i][j]).collect())
        .collect();
    Ok(det(&a))
}

/// Monic polynomial with the given roots.
pub fn poly_from_roots(roots: &[Rational]) -> UniPoly {
    roots
        .iter()
        .fold(UniPoly::one(), |acc, r| acc.mul(&UniPoly::new(vec![-r.clone(), int(1)])))
}

/// Eigenvalues in descending order with a shared error radius.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub radii: Vec<f64>,
}

impl Spectrum {
    pub fn spectral_radius(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// Largest `|a_i - b_i|` after both lists are sorted descending.
    pub fn max_deviation(&self, target: &[f64]) -> f64 {
        let mut t = target.to_vec();
        t.sort_by(|a, b| b.total_cmp(a));
        if t.len() != self.values.len() {
            return f64::INFINITY;
        }
        self.values.iter().zip(&t).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }
}

/// Sweep cap for the cyclic Jacobi method.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues by cyclic Jacobi rotations.
pub fn eigen_jacobi(m: &SymMatrix, tol: f64) -> Result<Spectrum> {
    eigen_jacobi_vectors(m, tol).map(|(s, _)| s)
}

/// Eigenvalues and unit eigenvectors; `vectors[k]` belongs to `values[k]`.
pub fn eigen_jacobi_vectors(m: &SymMatrix, tol: f64) -> Result<(Spectrum, Vec<Vec<f64>>)> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Numeric(format!("tolerance must be positive, got {tol}")));
    }
    let n = m.order();
    let mut a = m.rows_f64();
    if a.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::Numeric("matrix has non-finite entries".into()));
    }
    let mut v: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| f64::from(u8::from(i == j))).collect()).collect();
    let off_norm = |a: &Vec<Vec<f64>>| {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += 2.0 * a[i][j] * a[i][j];
            }
        }
        s.sqrt()
    };
    let mut off = off_norm(&a);
    let mut sweeps = 0;
    while off >= tol {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::Numeric(format!(
                "Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps (off-diagonal norm {off:e})"
            )));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
        off = off_norm(&a);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[y][y].total_cmp(&a[x][x]));
    let values = order.iter().map(|&k| a[k][k]).collect();
    let vectors = order.iter().map(|&k| (0..n).map(|i| v[i][k]).collect()).collect();
    Ok((Spectrum { values, radii: vec![off; n] }, vectors))
}

/// Tolerance used when a spectrum is only needed as a numeric oracle.
pub const ORACLE_TOL: f64 = 1e-12;

/// Spectral radius by Jacobi.
pub fn spectral_radius(m: &SymMatrix) -> Result<f64> {
    eigen_jacobi(m, ORACLE_TOL).map(|s| s.spectral_radius())
}

/// True iff `P_M(lambda) < 0`, which certifies `rho(M) > lambda` for nonnegative `M`.
pub fn negative_cp_witness(m: &SymMatrix, lambda: &Rational) -> Result<bool> {
    Ok(charpoly_exact(m)?.eval(lambda).is_negative())
}

/// Whether `child` (descending, one shorter) interlaces `parent` (descending) within `tol`.
pub fn interlaces(parent: &[f64], child: &[f64], tol: f64) -> bool {
    child.len() + 1 == parent.len()
        && child
            .iter()
            .enumerate()
            .all(|(i, &mu)| parent[i] + tol >= mu && mu >= parent[i + 1] - tol)
}

/// The 5x5 counterexample matrix with spectrum `(1, 0.35, 0.34, -0.72, -0.72)` and trace `1/4`.
pub fn example_matrix() -> SymMatrix {
    let a = 130f64.sqrt() / 25.0;
    let b = 3.0 * 70f64.sqrt() / 50.0;
    let d = 17.0 / 200.0;
    let e = 91.0 / 200.0;
    SymMatrix::from_rows_f64(&[
        vec![2.0 / 25.0, a, a, 0.0, 0.0],
        vec![a, 0.0, 0.0, 0.0, b],
        vec![a, 0.0, 0.0, b, 0.0],
        vec![0.0, 0.0, b, d, e],
        vec![0.0, b, 0.0, e, d],
    ])
    .expect("symmetric by construction")
}

/// The claimed spectrum of [`example_matrix`].
pub fn example_spectrum() -> [Rational; 5] {
    [int(1), rat(35, 100), rat(34, 100), rat(-72, 100), rat(-72, 100)]
}

/// Outcome of checking a candidate for the counterexample.
#[derive(Debug, Clone, PartialEq)]
pub struct ExampleCheck {
    pub spectrum: Vec<f64>,
    pub max_deviation: f64,
    pub trace: f64,
    /// `lambda_3 > trace`: the list violates the trace condition on `lambda_3`.
    pub third_exceeds_trace: bool,
    /// `trace < lambda_1 / 2`: the list lies outside the region.
    pub outside_region: bool,
    pub ok: bool,
}

/// Checks a matrix against the counterexample claims within `1e-9`.
pub fn verify_example_matrix_with(m: &SymMatrix) -> Result<ExampleCheck> {
    let spec = eigen_jacobi(m, ORACLE_TOL)?;
    let target: Vec<f64> = example_spectrum().iter().map(to_f64).collect();
    let max_deviation = spec.max_deviation(&target);
    let trace = m.trace_f64();
    let third_exceeds_trace = spec.values[2] > trace;
    let outside_region = trace < spec.values[0] / 2.0;
    let ok = max_deviation < 1e-9 && third_exceeds_trace && outside_region;
    Ok(ExampleCheck { spectrum: spec.values, max_deviation, trace, third_exceeds_trace, outside_region, ok })
}

/// Numeric check of [`example_matrix`].
pub fn verify_example_matrix() -> bool {
    verify_example_matrix_with(&example_matrix()).is_ok_and(|c| c.ok)
}

/// Exact check of the counterexample's characteristic polynomial.
///
/// The only cycle in the matrix graph (1-2-5-4-3-1) has a rational product, so a
/// diagonal similarity turns the matrix into a rational one: entry `(i,j)` above the
/// diagonal becomes the squared entry and its mirror becomes 1. Its characteristic
/// polynomial must equal the product of `(x - lambda)` over the claimed spectrum.
pub fn verify_example_charpoly_exact() -> bool {
    let a2 = rat(130, 625);
    let b2 = rat(630, 2500);
    let d = rat(17, 200);
    let e = rat(91, 200);
    let z = int(0);
    let one = int(1);
    let rows = vec![
        vec![rat(2, 25), a2.clone(), a2, z.clone(), z.clone()],
        vec![one.clone(), z.clone(), z.clone(), z.clone(), b2.clone()],
        vec![one.clone(), z.clone(), z.clone(), b2, z.clone()],
        vec![z.clone(), z.clone(), one.clone(), d.clone(), e.clone()],
        vec![z.clone(), one, z, e, d],
    ];
    charpoly_of_rows(&rows) == poly_from_roots(&example_spectrum())
}

/// Squares of the counterexample's irrational entries, recomputed from their surd form.
pub fn example_entry_squares() -> [(Rational, Rational); 2] {
    // (sqrt(130)/25)^2 and (3 sqrt(70)/50)^2
    [(rat(130, 625), rat(130, 25 * 25)), (rat(63, 250), rat(9 * 70, 50 * 50))]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packed_indexing() {
        let mut m = SymMatrix::zeros_exact(5);
        let mut k = 0;
        for i in 0..5 {
            for j in i..5 {
                m.set_exact(i, j, int(k));
                k += 1;
            }
        }
        assert_eq!(m.get_exact(4, 4), Some(&int(14)));
        assert_eq!(m.get_exact(3, 1), Some(&int(7)));
        assert_eq!(m.get_exact(1, 0), Some(&int(1)));
    }

    #[test]
    fn diag_charpoly() {
        let m = SymMatrix::diag_exact(&[int(1), int(2), int(3)]);
        assert_eq!(charpoly_exact(&m).unwrap(), UniPoly::from_ints(&[-6, 11, -6, 1]));
        assert!(matches!(charpoly_exact(&m.to_float()), Err(Error::Mode(_))));
    }

    #[test]
    fn witnesses() {
        assert!(!negative_cp_witness(&SymMatrix::identity_exact(3), &int(2)).unwrap());
        let swap = SymMatrix::parse("0 1; 1 0").unwrap();
        assert!(negative_cp_witness(&swap, &rat(1, 2)).unwrap());
    }

    #[test]
    fn jacobi_identity_and_example() {
        let s = eigen_jacobi(&SymMatrix::identity_float(5), 1e-12).unwrap();
        assert_eq!(s.values, vec![1.0; 5]);
        assert!(verify_example_matrix());
        assert!(verify_example_charpoly_exact());
        let mut bumped = example_matrix();
        bumped.set_f64(0, 0, bumped.get_f64(0, 0) + 0.01);
        assert!(!verify_example_matrix_with(&bumped).unwrap().ok);
        for (a, b) in example_entry_squares() {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn submatrix_rules() {
        let m = SymMatrix::identity_exact(5);
        assert_eq!(m.principal_submatrix(&[0, 1, 2, 3, 4]).unwrap(), m);
        assert!(m.principal_submatrix(&[1, 1]).is_err());
        assert!(m.principal_submatrix(&[2, 1]).is_err());
        assert!(m.principal_submatrix(&[5]).is_err());
        assert!(m.permute(&[0, 0, 1, 2, 3]).is_err());
    }
}
