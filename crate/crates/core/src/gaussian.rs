//! The strut algebra and formal Gaussian integration over surgery labels.
//!
//! A strut is a diagram with one edge and two labelled legs. Struts over a
//! label set generate a free commutative algebra; exponentials of quadratic
//! strut forms are the strut parts of the Århus invariant. Integrating out the
//! surgery labels `X'` pairs every `x`-leg with a `∂x`-leg in all possible ways.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rational::{self, Rational};
use crate::seifert::SeifertMatrix;
use crate::surgery::{self, FramedLinkMatrix};
use crate::{Error, RatMatrix, Result};

/// A leg label: an index into some label table, possibly marked `∂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Leg {
    Plain(usize),
    Boundary(usize),
}

impl Leg {
    fn render(self, names: &[String]) -> String {
        match self {
            Leg::Plain(i) => names.get(i).cloned().unwrap_or_else(|| format!("#{i}")),
            Leg::Boundary(i) => format!("d{}", Leg::Plain(i).render(names)),
        }
    }
}

/// Unordered pair of legs, stored sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Strut(Leg, Leg);

impl Strut {
    pub fn new(a: Leg, b: Leg) -> Self {
        if a <= b {
            Strut(a, b)
        } else {
            Strut(b, a)
        }
    }

    pub fn plain(i: usize, j: usize) -> Self {
        Self::new(Leg::Plain(i), Leg::Plain(j))
    }

    pub fn boundary(i: usize, j: usize) -> Self {
        Self::new(Leg::Boundary(i), Leg::Boundary(j))
    }

    pub fn legs(self) -> [Leg; 2] {
        [self.0, self.1]
    }

    pub fn render(self, names: &[String]) -> String {
        format!("s({},{})", self.0.render(names), self.1.render(names))
    }
}

/// Sorted multiset of struts.
pub type StrutMonomial = Vec<Strut>;

fn merge(a: &[Strut], b: &[Strut]) -> StrutMonomial {
    let mut m: StrutMonomial = a.iter().chain(b).copied().collect();
    m.sort_unstable();
    m
}

/// Polynomial in struts with canonical monomials, so equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StrutPolynomial {
    terms: BTreeMap<StrutMonomial, Rational>,
}

impl StrutPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Vec::new(), Rational::one())
    }

    pub fn term(mut mono: StrutMonomial, c: Rational) -> Self {
        mono.sort_unstable();
        let mut p = Self::zero();
        p.add_term(mono, c);
        p
    }

    pub fn strut(s: Strut, c: Rational) -> Self {
        Self::term(alloc::vec![s], c)
    }

    pub fn add_term(&mut self, mono: StrutMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&StrutMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &[Strut]) -> Rational {
        let mut m = mono.to_vec();
        m.sort_unstable();
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, v) in self.terms() {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Product, dropping monomials whose weight exceeds `max`.
    pub fn mul_truncated(&self, other: &Self, weight: &dyn Fn(Strut) -> usize, max: usize) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self.terms() {
            let wa = monomial_weight(a, weight);
            if wa > max {
                continue;
            }
            for (b, cb) in other.terms() {
                if wa + monomial_weight(b, weight) <= max {
                    out.add_term(merge(a, b), ca * cb);
                }
            }
        }
        out
    }

    pub fn truncate(&self, weight: &dyn Fn(Strut) -> usize, max: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| monomial_weight(m, weight) <= max)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `exp(self)` keeping monomials of weight `<= max`. Every strut occurring
    /// in `self` must have positive weight and there must be no constant term.
    pub fn exp_truncated(&self, weight: &dyn Fn(Strut) -> usize, max: usize) -> Result<Self> {
        for (m, _) in self.terms() {
            if monomial_weight(m, weight) == 0 {
                return Err(Error::InvalidPairing(
                    "exponent has a weight-zero term".into(),
                ));
            }
        }
        let mut out = Self::one();
        let mut power = Self::one();
        for k in 1..=max {
            power = power
                .mul_truncated(self, weight, max)
                .scale(&rational::frac(1, k as i64));
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        Ok(out)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = m.iter().map(|s| s.render(names)).collect();
            if mono.is_empty() {
                out.push_str(&format!("{abs}"));
            } else if abs.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{abs}*{}", mono.join("*")));
            }
        }
        out
    }
}

fn monomial_weight(m: &[Strut], weight: &dyn Fn(Strut) -> usize) -> usize {
    m.iter().map(|&s| weight(s)).sum()
}

/// Weight counting legs that survive the pairing: plain legs outside `glued`
/// and `∂`-legs. Half of it is the strut degree of the paired result.
pub fn open_leg_weight(glued: &[usize]) -> impl Fn(Strut) -> usize + '_ {
    move |s: Strut| {
        s.legs()
            .iter()
            .filter(|l| match l {
                Leg::Plain(i) => !glued.contains(i),
                Leg::Boundary(_) => true,
            })
            .count()
    }
}

/// `exp(½ Σ_{i,j} q_ij · s(i,j))` over labelled legs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrutQuadratic {
    pub labels: Vec<String>,
    pub q: RatMatrix,
}

impl StrutQuadratic {
    /// `½ Σ_{i,j} q_ij s(i,j)` as a linear strut polynomial over label indices.
    pub fn exponent(&self) -> StrutPolynomial {
        quadratic_exponent(&self.q, &(0..self.q.rows()).collect::<Vec<_>>(), Leg::Plain)
    }

    /// The exponential truncated at strut degree `max_degree`.
    pub fn exp_truncated(&self, max_degree: usize) -> StrutPolynomial {
        self.exponent()
            .exp_truncated(&|_| 1, max_degree)
            .expect("struts have weight 1")
    }
}

/// `½ Σ_{i,j} q_ij s(leg(idx_i), leg(idx_j))`.
fn quadratic_exponent(q: &RatMatrix, idx: &[usize], leg: fn(usize) -> Leg) -> StrutPolynomial {
    let half = rational::frac(1, 2);
    let mut p = StrutPolynomial::zero();
    for i in 0..q.rows() {
        for j in i..q.cols() {
            let c = if i == j {
                &q[(i, i)] * &half
            } else {
                q[(i, j)].clone()
            };
            p.add_term(alloc::vec![Strut::new(leg(idx[i]), leg(idx[j]))], c);
        }
    }
    p
}

/// Strut part of `Å(L)` for `L'' ⊂ M_{L'}`: the exponential of the
/// post-surgery linking matrix.
pub fn strut_part_of_aarhus(m: &FramedLinkMatrix) -> Result<StrutQuadratic> {
    if !m.integral_surgery() {
        return Err(Error::NonIntegralFraming {
            labels: m.surgery_labels(),
        });
    }
    Ok(StrutQuadratic {
        labels: m.residual_labels(),
        q: surgery::surgery_transform(m)?,
    })
}

/// Strut part of `Å_0` of the tangle built from a Seifert surface: `q = ½(V + Vᵀ)`.
/// Labels are `1..=n`.
pub fn tangle_strut_part(v: &SeifertMatrix) -> StrutQuadratic {
    StrutQuadratic {
        labels: (1..=v.size()).map(|i| format!("{i}")).collect(),
        q: v.symmetric_part(),
    }
}

/// Gaussian integration of `exp(½ l)` against `exp(-½ l^(-1) ∂∂)`, tracked on
/// exponents: every connected gluing `s(i,x)·s(∂x,∂y)·s(y,j)` contributes
/// `-l_ix·l^xy·l_yj` to the coefficient of `s(i,j)`. The inverse entries are
/// taken from cofactors, `l^xy = C_yx / det`.
pub fn gaussian_pair(m: &FramedLinkMatrix) -> Result<StrutQuadratic> {
    let det = surgery::det_or_singular(m)?;
    let block = m.surgery_block();
    let k = block.rows();
    let cofactor = |r: usize, c: usize| -> Result<Rational> {
        let rs: Vec<usize> = (0..k).filter(|&i| i != r).collect();
        let cs: Vec<usize> = (0..k).filter(|&j| j != c).collect();
        let minor = block.select(&rs, &cs).det()?;
        Ok(if (r + c).is_multiple_of(2) {
            minor
        } else {
            -minor
        })
    };
    let mut inverse = RatMatrix::zeros(k, k);
    for x in 0..k {
        for y in 0..k {
            inverse[(x, y)] = cofactor(y, x)? / &det;
        }
    }
    let mixed = m.mixed_block();
    let mut q = m.residual_block();
    let r = q.rows();
    for i in 0..r {
        for j in 0..r {
            let mut acc = Rational::zero();
            for x in 0..k {
                if mixed[(i, x)].is_zero() {
                    continue;
                }
                for y in 0..k {
                    acc += &mixed[(i, x)] * &inverse[(x, y)] * &mixed[(j, y)];
                }
            }
            q[(i, j)] -= acc;
        }
    }
    Ok(StrutQuadratic {
        labels: m.residual_labels(),
        q,
    })
}

/// The two exponents paired when integrating out `X'`, over the label indices
/// of `m`: `½ Σ_{i,j∈X''} l_ij s(i,j) + Σ_{i∈X'',x∈X'} l_ix s(i,x)` and
/// `-½ Σ_{x,y∈X'} l^xy s(∂x,∂y)`.
pub fn pairing_exponents(m: &FramedLinkMatrix) -> Result<(StrutPolynomial, StrutPolynomial)> {
    let inv = m
        .surgery_block()
        .inverse()
        .map_err(|_| Error::SingularSurgeryBlock {
            labels: m.surgery_labels(),
        })?;
    let res = m.residual_indices();
    let sur = m.surgery_indices();
    let mut left = quadratic_exponent(&m.residual_block(), res, Leg::Plain);
    let mixed = m.mixed_block();
    for (a, &i) in res.iter().enumerate() {
        for (b, &x) in sur.iter().enumerate() {
            left.add_term(alloc::vec![Strut::plain(i, x)], mixed[(a, b)].clone());
        }
    }
    let right = quadratic_exponent(&inv, sur, Leg::Boundary).scale(&-Rational::one());
    Ok((left, right))
}

/// Calls `f` with every permutation of `0..n`.
fn for_each_permutation(n: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(k: usize, perm: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            go(k + 1, perm, f);
            perm.swap(k, i);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    go(0, &mut perm, f);
}

/// `⟨left, right⟩`: glue all `x`-legs of `left` to `∂x`-legs of `right` in
/// every possible way, for each `x ∈ glued` independently.
///
/// `left` must have only plain legs and no strut with both legs glued;
/// `right` must consist of `∂x`-legs with `x ∈ glued`. Monomial pairs whose
/// leg counts differ for some `x` contribute nothing.
pub fn wick_pair(
    left: &StrutPolynomial,
    right: &StrutPolynomial,
    glued: &[usize],
) -> Result<StrutPolynomial> {
    let is_glued = |l: Leg| matches!(l, Leg::Plain(i) if glued.contains(&i));
    for (m, _) in left.terms() {
        for &s in m {
            let [a, b] = s.legs();
            if matches!(a, Leg::Boundary(_)) || matches!(b, Leg::Boundary(_)) {
                return Err(Error::InvalidPairing(format!(
                    "left factor contains ∂-leg in {s:?}"
                )));
            }
            if is_glued(a) && is_glued(b) {
                return Err(Error::ClosedStrutCircle(format!("{s:?}")));
            }
        }
    }
    for (m, _) in right.terms() {
        for &s in m {
            for l in s.legs() {
                match l {
                    Leg::Boundary(x) if glued.contains(&x) => {}
                    _ => {
                        return Err(Error::InvalidPairing(format!(
                            "right factor has non-∂ leg in {s:?}"
                        )))
                    }
                }
            }
        }
    }

    let mut out = StrutPolynomial::zero();
    for (lm, lc) in left.terms() {
        // For each glued label: the left struts carrying it, one entry per leg.
        let mut left_slots: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut free: Vec<Strut> = Vec::new();
        for (si, &s) in lm.iter().enumerate() {
            match s.legs().into_iter().find(|&l| is_glued(l)) {
                Some(Leg::Plain(x)) => left_slots.entry(x).or_default().push(si),
                _ => free.push(s),
            }
        }
        for (rm, rc) in right.terms() {
            // (right strut index, end) per ∂x-leg.
            let mut right_slots: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
            for (ri, &s) in rm.iter().enumerate() {
                for (end, l) in s.legs().into_iter().enumerate() {
                    if let Leg::Boundary(x) = l {
                        right_slots.entry(x).or_default().push((ri, end));
                    }
                }
            }
            let labels: Vec<usize> = left_slots
                .keys()
                .chain(right_slots.keys())
                .copied()
                .collect();
            let matched = labels.iter().all(|x| {
                left_slots.get(x).map_or(0, Vec::len) == right_slots.get(x).map_or(0, Vec::len)
            });
            if !matched {
                continue;
            }
            let groups: Vec<LabelGroup<'_>> = right_slots
                .iter()
                .map(|(x, r)| (&left_slots[x], r))
                .collect();
            let coeff = lc * rc;
            let mut attach = alloc::vec![[0usize; 2]; rm.len()];
            enumerate_gluings(&groups, 0, &mut attach, &mut |attach| {
                let mut mono = free.clone();
                for ends in attach.iter() {
                    let other = |si: usize| {
                        let [a, b] = lm[si].legs();
                        if is_glued(a) {
                            b
                        } else {
                            a
                        }
                    };
                    mono.push(Strut::new(other(ends[0]), other(ends[1])));
                }
                mono.sort_unstable();
                out.add_term(mono, coeff.clone());
            });
        }
    }
    Ok(out)
}

/// Left struts carrying a glued label, paired with the right leg slots
/// (strut, end) that carry the same label.
type LabelGroup<'a> = (&'a Vec<usize>, &'a Vec<(usize, usize)>);

/// For each label group in turn, tries every bijection between its left
/// struts and its right leg slots, recording in `attach[r][end]` which left
/// strut is glued to end `end` of right strut `r`.
fn enumerate_gluings(
    groups: &[LabelGroup<'_>],
    g: usize,
    attach: &mut Vec<[usize; 2]>,
    f: &mut dyn FnMut(&[[usize; 2]]),
) {
    let Some(&(lefts, rights)) = groups.get(g) else {
        f(attach);
        return;
    };
    let n = lefts.len();
    let mut perms: Vec<Vec<usize>> = Vec::new();
    for_each_permutation(n, &mut |p| perms.push(p.to_vec()));
    for p in perms {
        for (k, &(r, end)) in rights.iter().enumerate() {
            attach[r][end] = lefts[p[k]];
        }
        enumerate_gluings(groups, g + 1, attach, f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use alloc::vec;

    const A: usize = 0;
    const B: usize = 1;
    const X: usize = 2;

    fn hopf() -> FramedLinkMatrix {
        FramedLinkMatrix::new(
            vec!["x".into(), "a".into()],
            &["x"],
            RatMatrix::from_ints(&[&[1, 1], &[1, 0]]),
        )
        .unwrap()
    }

    #[test]
    fn trivial_pairing() {
        let p = wick_pair(&StrutPolynomial::one(), &StrutPolynomial::one(), &[X]).unwrap();
        assert_eq!(p, StrutPolynomial::one());
    }

    #[test]
    fn two_matchings() {
        let left = StrutPolynomial::term(vec![Strut::plain(A, X), Strut::plain(B, X)], int(1));
        let right = StrutPolynomial::strut(Strut::boundary(X, X), int(1));
        let p = wick_pair(&left, &right, &[X]).unwrap();
        assert_eq!(p, StrutPolynomial::strut(Strut::plain(A, B), int(2)));
    }

    #[test]
    fn mismatched_legs_vanish() {
        let left = StrutPolynomial::strut(Strut::plain(A, X), int(1));
        let right = StrutPolynomial::strut(Strut::boundary(X, X), int(1));
        assert!(wick_pair(&left, &right, &[X]).unwrap().is_zero());
    }

    #[test]
    fn closed_circle_rejected() {
        let left = StrutPolynomial::strut(Strut::plain(X, X), int(1));
        let right = StrutPolynomial::strut(Strut::boundary(X, X), int(1));
        assert!(matches!(
            wick_pair(&left, &right, &[X]),
            Err(Error::ClosedStrutCircle(_))
        ));
    }

    #[test]
    fn bad_right_factor() {
        let right = StrutPolynomial::strut(Strut::plain(A, A), int(1));
        assert!(matches!(
            wick_pair(&StrutPolynomial::one(), &right, &[X]),
            Err(Error::InvalidPairing(_))
        ));
    }

    #[test]
    fn self_loop_through_right_strut() {
        // s(a,x)^2 · s(∂x,∂x): both matchings give s(a,a)
        let left = StrutPolynomial::term(vec![Strut::plain(A, X), Strut::plain(A, X)], int(1));
        let right = StrutPolynomial::strut(Strut::boundary(X, X), int(3));
        let p = wick_pair(&left, &right, &[X]).unwrap();
        assert_eq!(p, StrutPolynomial::strut(Strut::plain(A, A), int(6)));
    }

    #[test]
    fn aarhus_routes_agree() {
        let m = hopf();
        let s = strut_part_of_aarhus(&m).unwrap();
        assert_eq!(s.q, RatMatrix::from_ints(&[&[-1]]));
        assert_eq!(gaussian_pair(&m).unwrap(), s);

        let empty =
            FramedLinkMatrix::new(vec!["a".into()], &[], RatMatrix::from_ints(&[&[0]])).unwrap();
        assert_eq!(
            strut_part_of_aarhus(&empty).unwrap().q,
            RatMatrix::from_ints(&[&[0]])
        );
        assert_eq!(
            gaussian_pair(&empty).unwrap().q,
            RatMatrix::from_ints(&[&[0]])
        );

        let bd = FramedLinkMatrix::new(
            vec!["x".into(), "a".into(), "b".into()],
            &["x"],
            RatMatrix::from_ints(&[&[2, 0, 0], &[0, 1, 3], &[0, 3, -2]]),
        )
        .unwrap();
        let want = RatMatrix::from_ints(&[&[1, 3], &[3, -2]]);
        assert_eq!(strut_part_of_aarhus(&bd).unwrap().q, want);
        assert_eq!(gaussian_pair(&bd).unwrap().q, want);
    }

    #[test]
    fn non_integral_framing_rejected() {
        let m = FramedLinkMatrix::new(
            vec!["x".into()],
            &["x"],
            RatMatrix::from_fn(1, 1, |_, _| rational::frac(1, 2)),
        )
        .unwrap();
        assert!(matches!(
            strut_part_of_aarhus(&m),
            Err(Error::NonIntegralFraming { .. })
        ));
        assert!(gaussian_pair(&m).is_ok());
    }

    #[test]
    fn singular_rejected_by_both_routes() {
        let m = FramedLinkMatrix::new(
            vec!["x".into(), "a".into()],
            &["x"],
            RatMatrix::from_ints(&[&[0, 1], &[1, 0]]),
        )
        .unwrap();
        assert!(matches!(
            strut_part_of_aarhus(&m),
            Err(Error::SingularSurgeryBlock { .. })
        ));
        assert!(matches!(
            gaussian_pair(&m),
            Err(Error::SingularSurgeryBlock { .. })
        ));
    }

    #[test]
    fn tangle_struts() {
        let v = SeifertMatrix::from_ints(&[&[-1, 1], &[0, -1]]);
        let s = tangle_strut_part(&v);
        assert_eq!(s.q[(0, 1)], rational::frac(1, 2));
        assert_eq!(s.q[(1, 1)], int(-1));
        assert_eq!(
            tangle_strut_part(&SeifertMatrix::from_ints(&[&[0, 0], &[0, 0]])).q,
            RatMatrix::zeros(2, 2)
        );
    }

    #[test]
    fn hopf_pairing_degree_two() {
        // left exponent: s(a,x) (l_aa = 0), right: -½ s(∂x,∂x)
        let m = hopf();
        let (left, right) = pairing_exponents(&m).unwrap();
        let glued = m.surgery_indices().to_vec();
        let w = open_leg_weight(&glued);
        let l = left.exp_truncated(&w, 4).unwrap();
        let r = right.exp_truncated(&w, 4).unwrap();
        let paired = wick_pair(&l, &r, &glued).unwrap();
        let want = StrutQuadratic {
            labels: vec![],
            q: RatMatrix::from_ints(&[&[-1]]),
        }
        .exp_truncated(2);
        // relabel: residual index 0 in `want` is label index 1 in `m`
        let want_relabeled = StrutPolynomial {
            terms: want
                .terms()
                .map(|(mo, c)| {
                    (
                        mo.iter().map(|_| Strut::plain(1, 1)).collect::<Vec<_>>(),
                        c.clone(),
                    )
                })
                .collect(),
        };
        assert_eq!(paired, want_relabeled);
    }

    #[test]
    fn render() {
        let names: Vec<String> = vec!["a".into(), "b".into(), "x".into()];
        let p = StrutPolynomial::one()
            .add(&StrutPolynomial::strut(Strut::plain(A, B), int(2)))
            .add(&StrutPolynomial::strut(
                Strut::boundary(X, X),
                rational::frac(-1, 2),
            ));
        assert_eq!(p.render(&names), "1 + 2*s(a,b) - 1/2*s(dx,dx)");
    }
}
