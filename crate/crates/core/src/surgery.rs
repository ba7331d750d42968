//! Linking matrices of framed links and how they change under surgery.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::rational::{self, Rational};
use crate::{Error, RatMatrix, Result};

/// Symmetric linking matrix `l_xy = lk(μ_x, K_y)` over labelled components,
/// split into surgery labels `X'` and residual labels `X''`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedLinkMatrix {
    labels: Vec<String>,
    surgery: Vec<usize>,
    residual: Vec<usize>,
    entries: RatMatrix,
}

impl FramedLinkMatrix {
    /// `surgery` lists the labels forming `X'`; the rest, in label order, form `X''`.
    pub fn new(labels: Vec<String>, surgery: &[&str], entries: RatMatrix) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::NotSquare {
                rows: entries.rows(),
                cols: entries.cols(),
            });
        }
        if entries.rows() != labels.len() {
            return Err(Error::DimensionMismatch(alloc::format!(
                "{} labels for a {}x{} matrix",
                labels.len(),
                entries.rows(),
                entries.cols()
            )));
        }
        if !entries.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::InvalidLabels(alloc::format!(
                    "duplicate label {a:?}"
                )));
            }
        }
        let mut surgery_idx = Vec::with_capacity(surgery.len());
        for s in surgery {
            let i = labels.iter().position(|l| l == s).ok_or_else(|| {
                Error::InvalidLabels(alloc::format!("unknown surgery label {s:?}"))
            })?;
            if surgery_idx.contains(&i) {
                return Err(Error::InvalidLabels(alloc::format!(
                    "surgery label {s:?} repeated"
                )));
            }
            surgery_idx.push(i);
        }
        let residual = (0..labels.len())
            .filter(|i| !surgery_idx.contains(i))
            .collect();
        Ok(Self {
            labels,
            surgery: surgery_idx,
            residual,
            entries,
        })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn entries(&self) -> &RatMatrix {
        &self.entries
    }

    pub fn surgery_indices(&self) -> &[usize] {
        &self.surgery
    }

    pub fn residual_indices(&self) -> &[usize] {
        &self.residual
    }

    pub fn surgery_labels(&self) -> Vec<String> {
        self.surgery
            .iter()
            .map(|&i| self.labels[i].clone())
            .collect()
    }

    pub fn residual_labels(&self) -> Vec<String> {
        self.residual
            .iter()
            .map(|&i| self.labels[i].clone())
            .collect()
    }

    /// `l_{X'X'}`.
    pub fn surgery_block(&self) -> RatMatrix {
        self.entries.select(&self.surgery, &self.surgery)
    }

    /// `l_{X''X'}`.
    pub fn mixed_block(&self) -> RatMatrix {
        self.entries.select(&self.residual, &self.surgery)
    }

    /// `l_{X''X''}`.
    pub fn residual_block(&self) -> RatMatrix {
        self.entries.select(&self.residual, &self.residual)
    }

    /// Framings on `X'` are integers.
    pub fn integral_surgery(&self) -> bool {
        self.surgery
            .iter()
            .all(|&i| rational::is_integer(&self.entries[(i, i)]))
    }

    pub(crate) fn singular_block_error(&self) -> Error {
        Error::SingularSurgeryBlock {
            labels: self.surgery_labels(),
        }
    }
}

/// Linking numbers of `L'' ⊂ M_{L'}`: the Schur complement
/// `l̃ = l_{X''X''} - l_{X''X'}·(l_{X'X'})^(-1)·l_{X'X''}`.
pub fn surgery_transform(m: &FramedLinkMatrix) -> Result<RatMatrix> {
    let inv = m
        .surgery_block()
        .inverse()
        .map_err(|_| m.singular_block_error())?;
    let mixed = m.mixed_block();
    let correction = mixed.mul(&inv)?.mul(&mixed.transpose())?;
    m.residual_block().sub(&correction)
}

/// `(σ₊, σ₋)` by symmetric Gaussian elimination over `Q`.
///
/// A zero diagonal with a nonzero off-diagonal `a_ij` is fixed by the
/// congruence `e_i += e_j`, which puts `2a_ij` on the diagonal.
pub fn signature_pair(a: &RatMatrix) -> Result<(usize, usize)> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut m = a.clone();
    let n = m.rows();
    let (mut pos, mut neg) = (0, 0);
    for k in 0..n {
        if m[(k, k)].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !m[(i, i)].is_zero()) {
                m.swap_rows(k, i);
                m.swap_cols(k, i);
            } else if let Some(j) = (k + 1..n).find(|&j| !m[(k, j)].is_zero()) {
                for c in 0..n {
                    let v = m[(j, c)].clone();
                    m[(k, c)] += v;
                }
                for r in 0..n {
                    let v = m[(r, j)].clone();
                    m[(r, k)] += v;
                }
            } else {
                continue;
            }
        }
        let p = m[(k, k)].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if m[(i, k)].is_zero() {
                continue;
            }
            let f = &m[(i, k)] / &p;
            for c in k..n {
                let v = &f * &m[(k, c)];
                m[(i, c)] -= v;
            }
            for r in k..n {
                let v = &f * &m[(r, k)];
                m[(r, i)] -= v;
            }
        }
    }
    Ok((pos, neg))
}

/// `|H_1|` of the manifold obtained by integral surgery with linking matrix `a`.
pub fn h1_order(a: &RatMatrix) -> Result<BigInt> {
    if !a.is_integral() {
        return Err(Error::NotIntegral);
    }
    let d = a.det()?;
    if d.is_zero() {
        return Err(Error::Singular);
    }
    Ok(d.abs().to_integer())
}

pub(crate) fn det_or_singular(m: &FramedLinkMatrix) -> Result<Rational> {
    let d = m.surgery_block().det()?;
    if d.is_zero() {
        Err(m.singular_block_error())
    } else {
        Ok(d)
    }
}
