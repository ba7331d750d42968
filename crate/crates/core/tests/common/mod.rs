//! Independent oracles and random generators shared by the integration tests.
//! Nothing here calls into the code paths it is used to check.

#![allow(dead_code)]

use nabla_core::rational::{frac, int};
use nabla_core::{HalfLaurent, RatMatrix, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- oracles

/// Laplace expansion along the first row, over Laurent polynomials.
pub fn cofactor_det(m: &[Vec<HalfLaurent>]) -> HalfLaurent {
    let n = m.len();
    if n == 0 {
        return HalfLaurent::one();
    }
    let mut acc = HalfLaurent::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<HalfLaurent>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &cofactor_det(&minor);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// `det(t^(1/2)V - t^(-1/2)Vᵀ)` by cofactor expansion.
pub fn seifert_det_oracle(v: &RatMatrix) -> HalfLaurent {
    let n = v.rows();
    let m: Vec<Vec<HalfLaurent>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    HalfLaurent::from_terms([(1, v[(i, j)].clone()), (-1, -v[(j, i)].clone())])
                })
                .collect()
        })
        .collect();
    cofactor_det(&m)
}

/// Laplace expansion over `Q`.
pub fn cofactor_det_q(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut acc = Rational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * cofactor_det_q(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

pub fn rows_of(m: &RatMatrix) -> Vec<Vec<Rational>> {
    m.to_rows()
}

/// Bernoulli numbers `B_0..=B_n` (with `B_1 = -1/2`) from
/// `Σ_{k=0}^{m} C(m+1, k) B_k = 0`.
pub fn bernoulli(n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=n {
        let mut s = Rational::zero();
        let mut binom = BigInt::one(); // C(m+1, 0)
        for (k, bk) in b.iter().enumerate() {
            s += Rational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-s / int((m + 1) as i64));
    }
    b
}

pub fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |a, k| a * int(k as i64))
}

/// `[h^m] h/(e^(h/2) - e^(-h/2)) = B_m(1/2)/m! = (2^(1-m) - 1)·B_m/m!`.
pub fn c_series_bernoulli(order: usize) -> Vec<Rational> {
    let b = bernoulli(order);
    (0..=order)
        .map(|m| {
            let two_pow = nabla_core::rational::pow(&int(2), 1 - m as i64);
            (two_pow - int(1)) * &b[m] / factorial(m)
        })
        .collect()
}

/// `2·sinh(h/2)/h` coefficients.
pub fn sinh_ratio(order: usize) -> Vec<Rational> {
    (0..=order)
        .map(|m| {
            if m % 2 == 1 {
                Rational::zero()
            } else {
                Rational::one() / (factorial(m + 1) * nabla_core::rational::pow(&int(2), m as i64))
            }
        })
        .collect()
}

/// Solves `f·g = 1` for `g` column by column, as a dense triangular system.
pub fn invert_by_linear_solve(f: &[Rational]) -> Vec<Rational> {
    let n = f.len();
    // lower triangular Toeplitz system T g = e_0 with T[i][j] = f[i-j]
    let mut g = vec![Rational::zero(); n];
    for i in 0..n {
        let rhs = if i == 0 {
            Rational::one()
        } else {
            Rational::zero()
        };
        let mut s = rhs;
        for j in 0..i {
            s -= &f[i - j] * &g[j];
        }
        g[i] = s / &f[0];
    }
    g
}

/// `log(sinh(x)/x) = Σ_{n>=1} 2^(2n)·B_2n·x^(2n) / (2n·(2n)!)` at `x = h/2`,
/// negated: `log c`.
pub fn log_c_oracle(order: usize) -> Vec<Rational> {
    let b = bernoulli(order);
    (0..=order)
        .map(|m| {
            if m == 0 || m % 2 == 1 {
                Rational::zero()
            } else {
                let lead = nabla_core::rational::pow(&int(2), m as i64) * &b[m]
                    / (int(m as i64) * factorial(m));
                -lead * nabla_core::rational::pow(&frac(1, 2), m as i64)
            }
        })
        .collect()
}

/// Truncated product of dense series.
pub fn series_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|m| (0..=m).fold(Rational::zero(), |s, k| s + &a[k] * &b[m - k]))
        .collect()
}

/// Schur complement by row reduction of the stacked matrix `[A B; C D]`
/// (`A` = rows/cols `first`): eliminate the first block of columns with row
/// operations and read off the lower-right block.
pub fn block_elimination(m: &RatMatrix, first: &[usize], rest: &[usize]) -> Option<RatMatrix> {
    let order: Vec<usize> = first.iter().chain(rest).copied().collect();
    let n = order.len();
    let k = first.len();
    let mut a: Vec<Vec<Rational>> = order
        .iter()
        .map(|&i| order.iter().map(|&j| m[(i, j)].clone()).collect())
        .collect();
    for c in 0..k {
        let p = (c..k).find(|&r| !a[r][c].is_zero())?;
        a.swap(p, c);
        let piv = a[c][c].clone();
        for j in 0..n {
            a[c][j] = &a[c][j] / &piv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..n {
                    let d = &f * &a[c][j];
                    a[r][j] -= d;
                }
            }
        }
    }
    Some(RatMatrix::from_fn(n - k, n - k, |i, j| {
        a[k + i][k + j].clone()
    }))
}

// ------------------------------------------------------------- generators

pub fn small_rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> Rational {
    frac(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn random_int_matrix<R: Rng>(rng: &mut R, n: usize, bound: i64) -> RatMatrix {
    RatMatrix::from_fn(n, n, |_, _| int(rng.gen_range(-bound..=bound)))
}

pub fn random_rational_matrix<R: Rng>(rng: &mut R, n: usize) -> RatMatrix {
    RatMatrix::from_fn(n, n, |_, _| small_rational(rng, 5, 4))
}

pub fn random_symmetric<R: Rng>(rng: &mut R, n: usize, integral: bool) -> RatMatrix {
    let mut m = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = if integral {
                int(rng.gen_range(-4..=4))
            } else {
                small_rational(rng, 5, 3)
            };
            m[(i, j)] = v.clone();
            m[(j, i)] = v;
        }
    }
    m
}

/// Product of random elementary integer matrices (det ±1), entries kept small.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> RatMatrix {
    let mut p = RatMatrix::identity(n);
    if n == 0 {
        return p;
    }
    for _ in 0..steps {
        match rng.gen_range(0..3) {
            0 if n > 1 => {
                let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
                p.swap_rows(a, b);
            }
            1 => {
                let a = rng.gen_range(0..n);
                for j in 0..n {
                    p[(a, j)] = -p[(a, j)].clone();
                }
            }
            _ if n > 1 => {
                let a = rng.gen_range(0..n);
                let b = (a + rng.gen_range(1..n)) % n;
                let c = int(rng.gen_range(-2..=2));
                for j in 0..n {
                    let v = &p[(b, j)] * &c;
                    p[(a, j)] += v;
                }
            }
            _ => {}
        }
    }
    p
}

/// A Seifert matrix of size `2g + ℓ - 1` whose skew part has corank `ℓ - 1`
/// (generically): `V = [[A, B], [Bᵀ, C]]` with `C` symmetric, then permuted.
pub fn random_seifert<R: Rng>(rng: &mut R, genus: usize, components: usize) -> RatMatrix {
    let g2 = 2 * genus;
    let n = g2 + components - 1;
    let mut v = RatMatrix::zeros(n, n);
    let r = |rng: &mut R| int(rng.gen_range(-3..=3));
    for i in 0..n {
        for j in 0..n {
            if i < g2 && j < g2 {
                v[(i, j)] = r(rng);
            } else if i < g2 {
                let x = r(rng);
                v[(i, j)] = x.clone();
                v[(j, i)] = x;
            } else if j >= i {
                let x = r(rng);
                v[(i, j)] = x.clone();
                v[(j, i)] = x;
            }
        }
    }
    // basis permutation keeps entries in range
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    RatMatrix::from_fn(n, n, |i, j| v[(perm[i], perm[j])].clone())
}

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("k{i}")).collect()
}
