//! Seifert matrices, their skew/symmetric split, and integral classification
//! of the skew part up to unimodular congruence.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational;
use crate::{Error, IntMatrix, RatMatrix, Result};

/// A square rational matrix `V` read as a Seifert form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: RatMatrix,
}

impl SeifertMatrix {
    pub fn new(entries: RatMatrix) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::NotSquare {
                rows: entries.rows(),
                cols: entries.cols(),
            });
        }
        Ok(Self { entries })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self {
            entries: RatMatrix::from_ints(rows),
        }
    }

    pub fn empty() -> Self {
        Self {
            entries: RatMatrix::zeros(0, 0),
        }
    }

    pub fn entries(&self) -> &RatMatrix {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.rows()
    }

    pub fn is_integral(&self) -> bool {
        self.entries.is_integral()
    }

    /// `F = V - Vᵀ`.
    pub fn skew_part(&self) -> RatMatrix {
        self.entries.sub(&self.entries.transpose()).expect("square")
    }

    /// `U = ½(V + Vᵀ)`.
    pub fn symmetric_part(&self) -> RatMatrix {
        self.entries
            .add(&self.entries.transpose())
            .expect("square")
            .scale(&rational::frac(1, 2))
    }

    pub fn decompose(&self) -> (RatMatrix, RatMatrix) {
        (self.skew_part(), self.symmetric_part())
    }

    /// `P · V · Pᵀ`, a change of basis of `H_1` of the surface.
    pub fn change_basis(&self, p: &RatMatrix) -> Result<Self> {
        Self::new(self.entries.congruence(p)?)
    }
}

/// Integral congruence normal form `P·F·Pᵀ = ⊕ [[0, d_i], [-d_i, 0]] ⊕ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewNormalForm {
    /// `d_1 | d_2 | …`, all positive.
    pub elementary_divisors: Vec<BigInt>,
    pub corank: usize,
    /// Unimodular `P`.
    pub transform: IntMatrix,
}

impl SkewNormalForm {
    /// The block matrix `P·F·Pᵀ` this form describes.
    pub fn block_matrix(&self) -> IntMatrix {
        let n = self.transform.rows();
        let mut m = IntMatrix::zeros(n, n);
        for (b, d) in self.elementary_divisors.iter().enumerate() {
            m[(2 * b, 2 * b + 1)] = d.clone();
            m[(2 * b + 1, 2 * b)] = -d.clone();
        }
        m
    }
}

/// Simultaneous row/column operations on a skew matrix, mirrored into `P`.
struct Reducer {
    f: IntMatrix,
    p: IntMatrix,
}

impl Reducer {
    fn swap(&mut self, a: usize, b: usize) {
        self.f.swap_rows(a, b);
        self.f.swap_cols(a, b);
        self.p.swap_rows(a, b);
    }

    /// `e_dst += c · e_src`.
    fn add_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let n = self.f.rows();
        for j in 0..n {
            let v = &self.f[(src, j)] * c;
            self.f[(dst, j)] += v;
            let v = &self.p[(src, j)] * c;
            self.p[(dst, j)] += v;
        }
        for i in 0..n {
            let v = &self.f[(i, src)] * c;
            self.f[(i, dst)] += v;
        }
    }

    /// Smallest nonzero `|f_ij|` with `start <= i < j`, lowest indices first.
    fn pivot(&self, start: usize) -> Option<(usize, usize)> {
        let n = self.f.rows();
        let mut best: Option<(usize, usize)> = None;
        for i in start..n {
            for j in i + 1..n {
                let v = &self.f[(i, j)];
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.abs() < self.f[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }
}

/// Reduces an integral skew-symmetric matrix to its congruence normal form.
///
/// Pivot policy: the smallest nonzero `|entry|` above the diagonal of the
/// active block, ties broken by lowest row then column.
pub fn skew_normal_form(f: &IntMatrix) -> Result<SkewNormalForm> {
    if !f.is_square() {
        return Err(Error::NotSquare {
            rows: f.rows(),
            cols: f.cols(),
        });
    }
    let n = f.rows();
    let skew = (0..n).all(|i| (0..=i).all(|j| f[(i, j)] == -f[(j, i)].clone()));
    if !skew {
        return Err(Error::NotSkewSymmetric);
    }
    let mut r = Reducer {
        f: f.clone(),
        p: IntMatrix::identity(n),
    };
    let mut divisors = Vec::new();
    let mut start = 0;
    'outer: while let Some((i, j)) = r.pivot(start) {
        r.swap(start, i);
        // `j > i >= start`, so `j` only moved if it was `start`.
        let j = if j == start { i } else { j };
        r.swap(start + 1, j);
        if r.f[(start, start + 1)].is_negative() {
            r.swap(start, start + 1);
        }
        let a = r.f[(start, start + 1)].clone();
        let (s0, s1) = (start, start + 1);
        for k in start + 2..n {
            // f[k][s0] += -c·a using e_k += c·e_s1, since f[s1][s0] = -a.
            let c = r.f[(k, s0)].div_floor(&a);
            r.add_multiple(k, s1, &c);
            // f[k][s1] += c·a using e_k += c·e_s0.
            let c = -r.f[(k, s1)].div_floor(&a);
            r.add_multiple(k, s0, &c);
            if !r.f[(k, s0)].is_zero() || !r.f[(k, s1)].is_zero() {
                continue 'outer;
            }
        }
        for k in start + 2..n {
            for l in k + 1..n {
                if !r.f[(k, l)].is_multiple_of(&a) {
                    // Pull the offending row into the pivot row; the next
                    // pass leaves a remainder smaller than `a`.
                    r.add_multiple(s0, k, &BigInt::one());
                    continue 'outer;
                }
            }
        }
        divisors.push(a);
        start += 2;
    }
    Ok(SkewNormalForm {
        corank: n - 2 * divisors.len(),
        elementary_divisors: divisors,
        transform: r.p,
    })
}

/// Topological bookkeeping read off a Seifert matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizabilityReport {
    /// `None` when `V` is not integral and the question does not apply.
    pub realizable_in_s3: Option<bool>,
    pub genus: usize,
    pub boundary_components: usize,
}

/// An integral `V` is a Seifert matrix of a link in `S^3` iff the skew part is
/// congruent to standard symplectic blocks plus zeros (all divisors 1).
pub fn realizability_report(v: &SeifertMatrix) -> RealizabilityReport {
    let f = v.skew_part();
    let n = v.size();
    match f.to_integer() {
        Ok(fi) => {
            let snf = skew_normal_form(&fi).expect("V - Vᵀ is skew");
            RealizabilityReport {
                realizable_in_s3: Some(snf.elementary_divisors.iter().all(One::is_one)),
                genus: snf.elementary_divisors.len(),
                boundary_components: snf.corank + 1,
            }
        }
        Err(_) => {
            let rank = f.rank();
            RealizabilityReport {
                realizable_in_s3: None,
                genus: rank / 2,
                boundary_components: n - rank + 1,
            }
        }
    }
}
