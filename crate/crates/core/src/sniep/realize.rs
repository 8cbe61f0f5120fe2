//! Certificate construction by Fiedler gluing and direct sums.
//!
//! Every block carries its Perron root and a unit nonnegative Perron vector in
//! closed form, so gluing never needs an eigenvector solve.

use serde::ser::{Serialize, SerializeStruct, Serializer};
use serde::Serialize as DeriveSerialize;

use super::{check_conditions, SpectrumList, Verdict, VerdictKind};
use crate::error::{Error, Result};
use crate::spectral::{eigen_jacobi, SymMatrix};

/// Largest accepted gap between the certificate spectrum and the target.
pub const CERTIFICATE_TOL: f64 = 1e-8;

/// Smallest accepted certificate entry.
pub const ENTRY_TOL: f64 = -1e-12;

/// Jacobi tolerance used to validate certificates.
const JACOBI_TOL: f64 = 1e-12;

/// Slack allowed when comparing roots that are equal in exact arithmetic.
const ROOT_SLACK: f64 = 1e-12;

/// Nonnegative symmetric block with its Perron root and unit Perron vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PerronBlock {
    pub matrix: SymMatrix,
    pub root: f64,
    pub vector: Vec<f64>,
}

impl PerronBlock {
    /// The 1x1 block `(a)`, `a >= 0`.
    pub fn single(a: f64) -> Self {
        Self { matrix: SymMatrix::diag_float(&[a]), root: a, vector: vec![1.0] }
    }

    /// 2x2 block with spectrum `(a, b)`, `a >= |b|`.
    pub fn pair(a: f64, b: f64) -> Self {
        let d = (a + b) / 2.0;
        let o = ((a - b) / 2.0).max(0.0);
        let matrix = SymMatrix::from_rows_f64(&[vec![d, o], vec![o, d]]).expect("symmetric");
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self { matrix, root: a, vector: vec![h, h] }
    }

    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    /// Block diagonal sum; the Perron data comes from the block with the larger root.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let (n, m) = (self.order(), other.order());
        let mut rows = vec![vec![0.0; n + m]; n + m];
        for (i, row) in self.matrix.rows_f64().into_iter().enumerate() {
            rows[i][..n].copy_from_slice(&row);
        }
        for (i, row) in other.matrix.rows_f64().into_iter().enumerate() {
            rows[n + i][n..].copy_from_slice(&row);
        }
        let mut vector = vec![0.0; n + m];
        let root = if self.root >= other.root {
            vector[..n].copy_from_slice(&self.vector);
            self.root
        } else {
            vector[n..].copy_from_slice(&other.vector);
            other.root
        };
        Ok(Self { matrix: SymMatrix::from_rows_f64(&rows)?, root, vector })
    }

    fn check(&self, label: &str) -> Result<()> {
        let norm: f64 = self.vector.iter().map(|x| x * x).sum::<f64>().sqrt();
        if self.vector.len() != self.order() {
            return Err(Error::Construction(format!("{label}: Perron vector has the wrong length")));
        }
        if self.vector.iter().any(|&x| x < -ROOT_SLACK) || (norm - 1.0).abs() > 1e-9 {
            return Err(Error::Construction(format!("{label}: Perron vector must be unit and nonnegative")));
        }
        Ok(())
    }
}

/// One gluing: blocks with roots `alpha`, `beta` joined with coupling `rho` so
/// that the pair becomes `gamma`, `alpha + beta - gamma`.
#[derive(Debug, Clone, Copy, PartialEq, DeriveSerialize)]
pub struct GlueStep {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub rho: f64,
}

/// `[[A, rho u v^T], [rho v u^T, B]]` with `rho = sqrt((gamma - alpha)(gamma - beta))`.
///
/// The spectrum is that of `A` and `B` with `alpha`, `beta` replaced by `gamma`
/// and `alpha + beta - gamma`; the result's Perron vector is returned with it.
pub fn glue(a: &PerronBlock, b: &PerronBlock, gamma: f64) -> Result<(PerronBlock, GlueStep)> {
    a.check("first block")?;
    b.check("second block")?;
    let (alpha, beta) = (a.root, b.root);
    if gamma < alpha - ROOT_SLACK || gamma < beta - ROOT_SLACK {
        return Err(Error::Construction(format!(
            "target {gamma} is below a Perron root ({alpha}, {beta})"
        )));
    }
    let ga = (gamma - alpha).max(0.0);
    let gb = (gamma - beta).max(0.0);
    let rho = (ga * gb).sqrt();
    let (n, m) = (a.order(), b.order());
    let mut rows = vec![vec![0.0; n + m]; n + m];
    for (i, row) in a.matrix.rows_f64().into_iter().enumerate() {
        rows[i][..n].copy_from_slice(&row);
    }
    for (i, row) in b.matrix.rows_f64().into_iter().enumerate() {
        rows[n + i][n..].copy_from_slice(&row);
    }
    for i in 0..n {
        for j in 0..m {
            let c = rho * a.vector[i] * b.vector[j];
            rows[i][n + j] = c;
            rows[n + j][i] = c;
        }
    }
    // Eigenvector of [[alpha, rho], [rho, beta]] for gamma.
    let (p, q) = if rho > 0.0 {
        (rho, ga)
    } else if ga == 0.0 {
        (1.0, 0.0)
    } else {
        (0.0, 1.0)
    };
    let norm = (p * p + q * q).sqrt();
    let mut vector: Vec<f64> = a.vector.iter().map(|x| p / norm * x).collect();
    vector.extend(b.vector.iter().map(|x| q / norm * x));
    let block = PerronBlock { matrix: SymMatrix::from_rows_f64(&rows)?, root: gamma, vector };
    Ok((block, GlueStep { alpha, beta, gamma, rho }))
}

/// Validated certificate matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub matrix: SymMatrix,
    /// Largest gap between the Jacobi spectrum and the target.
    pub residual: f64,
    pub steps: Vec<GlueStep>,
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Certificate", 3)?;
        st.serialize_field("matrix", &self.matrix.rows_f64())?;
        st.serialize_field("residual", &self.residual)?;
        st.serialize_field("steps", &self.steps)?;
        st.end()
    }
}

/// Leading value `lead >= 0` followed by nonpositive values summing with it to
/// at least zero; built by peeling off the last value with a gluing step.
fn suleimanova(lead: f64, rest: &[f64], steps: &mut Vec<GlueStep>) -> Result<PerronBlock> {
    match rest.split_last() {
        None => Ok(PerronBlock::single(lead.max(0.0))),
        Some((&last, init)) => {
            let inner = suleimanova(lead + last, init, steps)?;
            let (block, step) = glue(&inner, &PerronBlock::single(0.0), lead)?;
            steps.push(step);
            Ok(block)
        }
    }
}

/// Four values `m1 >= m2 >= m3 >= m4` with `m2 >= 0`, `m1 >= |m4|`, nonnegative sum.
fn four(m: [f64; 4], steps: &mut Vec<GlueStep>) -> Result<PerronBlock> {
    let [m1, m2, m3, m4] = m;
    if m3 >= 0.0 {
        return PerronBlock::pair(m1, m4).direct_sum(&PerronBlock::single(m2))?.direct_sum(&PerronBlock::single(m3));
    }
    let alpha = m2.max(-m3);
    let beta = m1 + m2 - alpha;
    let (block, step) = glue(&PerronBlock::pair(alpha, m3), &PerronBlock::pair(beta, m4), m1)?;
    steps.push(step);
    Ok(block)
}

fn build(l: [f64; 5], steps: &mut Vec<GlueStep>) -> Result<PerronBlock> {
    let [l1, l2, l3, l4, l5] = l;
    if l3 >= 0.0 {
        let tail = four([l1, l2, l4, l5], steps)?;
        PerronBlock::single(l3).direct_sum(&tail)
    } else if l2 <= 0.0 {
        suleimanova(l1, &[l2, l3, l4, l5], steps)
    } else {
        let alpha = l2.max(-l3 - l4);
        let beta = l1 + l2 - alpha;
        let a = suleimanova(alpha, &[l3, l4], steps)?;
        let b = suleimanova(beta, &[l5], steps)?;
        let (block, step) = glue(&a, &b, l1)?;
        steps.push(step);
        Ok(block)
    }
}

/// Builds and validates a certificate for a spectrum that passes [`check_conditions`].
///
/// Cases: `lambda_3 >= 0` gives `(lambda_3)` plus a 4x4 block; `lambda_2 <= 0`
/// peels negative values one at a time; otherwise a 3x3 block for
/// `(alpha, lambda_3, lambda_4)` is glued to a 2x2 block for `(beta, lambda_5)` with
/// `alpha = max(lambda_2, -lambda_3 - lambda_4)` and `beta = lambda_1 + lambda_2 - alpha`.
pub fn realize(s: &SpectrumList) -> Result<Certificate> {
    let verdict = check_conditions(s);
    if verdict.kind != VerdictKind::Realizable {
        return Err(Error::Domain(format!("{s} is not realizable in the region ({:?})", verdict.kind)));
    }
    let target = s.to_f64();
    let mut steps = Vec::new();
    let block = build(target, &mut steps)?;
    let matrix = block.matrix;
    let spectrum = eigen_jacobi(&matrix, JACOBI_TOL)?;
    let residual = spectrum.max_deviation(&target);
    let min = matrix.min_entry();
    if residual.is_nan() || residual > CERTIFICATE_TOL || min < ENTRY_TOL {
        return Err(Error::Construction(format!(
            "certificate for {s} failed validation: residual {residual:e}, smallest entry {min:e}"
        )));
    }
    Ok(Certificate { matrix, residual, steps })
}

/// [`check_conditions`] followed by [`realize`] when the conditions hold.
pub fn decide(s: &SpectrumList) -> Result<Verdict> {
    let mut v = check_conditions(s);
    if v.kind == VerdictKind::Realizable {
        v.certificate = Some(realize(s)?);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::ORACLE_TOL;

    fn spectrum_of(m: &SymMatrix) -> Vec<f64> {
        eigen_jacobi(m, ORACLE_TOL).unwrap().values
    }

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9)
    }

    #[test]
    fn glue_examples() {
        let (c, _) = glue(&PerronBlock::single(0.0), &PerronBlock::single(0.0), 1.0).unwrap();
        assert_eq!(c.matrix.rows_f64(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        let swap = PerronBlock::pair(1.0, -1.0);
        let (c, _) = glue(&swap, &PerronBlock::single(0.0), 1.5).unwrap();
        assert!(close(&spectrum_of(&c.matrix), &[1.5, -0.5, -1.0]));
        let (c, _) = glue(&swap, &swap, 2.0).unwrap();
        assert!(close(&spectrum_of(&c.matrix), &[2.0, 0.0, -1.0, -1.0]));
    }

    #[test]
    fn glue_rejects_low_target() {
        assert!(matches!(
            glue(&PerronBlock::single(1.0), &PerronBlock::single(0.0), 0.5),
            Err(Error::Construction(_))
        ));
    }

    #[test]
    fn glued_perron_vector_is_an_eigenvector() {
        let (c, _) = glue(&PerronBlock::pair(0.7, -0.2), &PerronBlock::single(0.3), 1.1).unwrap();
        let rows = c.matrix.rows_f64();
        for (i, row) in rows.iter().enumerate() {
            let mv: f64 = row.iter().zip(&c.vector).map(|(a, b)| a * b).sum();
            assert!((mv - c.root * c.vector[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn realize_examples() {
        for text in ["1,0,0,0,0", "1,1,1,-1,-1", "1, 1/2, -1/4, -1/4, -1/4", "0,0,0,0,0", "1,-1/8,-1/8,-1/8,-1/8"] {
            let s = SpectrumList::parse(text).unwrap();
            let c = realize(&s).unwrap();
            assert!(c.residual < 1e-9, "{text}");
            assert!(c.matrix.min_entry() >= 0.0, "{text}");
        }
        let c = realize(&SpectrumList::parse("1,0,0,0,0").unwrap()).unwrap();
        assert_eq!(c.matrix.trace_f64(), 1.0);
    }

    #[test]
    fn realize_refuses_infeasible() {
        assert!(realize(&SpectrumList::parse("1, 7/10, 7/10, -9/10, -9/10").unwrap()).is_err());
    }
}
