//! Exact ranks of sparse integer matrices.
//!
//! Over the rationals, rows are reduced fraction-free (`r ← p·r − a·pivot`)
//! and divided by the gcd of their entries after each step, so coefficients
//! stay small. The reduction first runs on `i64` with checked arithmetic and
//! is redone on big integers if any step would overflow.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse row: `(column, value)` pairs sorted by column, no zero values.
pub type SparseRow = Vec<(usize, i64)>;

trait Coeff: Clone + PartialEq + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn is_one(&self) -> bool;
    fn div_exact(&self, d: &Self) -> Self;
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    // i64::MIN is rejected as well so that gcd and negation never overflow.
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other).filter(|v| *v != i64::MIN)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other).filter(|v| *v != i64::MIN)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_one(&self) -> bool {
        One::is_one(&self.abs())
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

/// `p·row − a·pivot`, dropping zeros; `None` on overflow.
fn combine<T: Coeff>(
    row: &[(usize, T)],
    pivot: &[(usize, T)],
    p: &T,
    a: &T,
) -> Option<Vec<(usize, T)>> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (col, val) = if take_row {
            let v = p.mul(&row[i].1)?;
            i += 1;
            (row[i - 1].0, v)
        } else if take_piv {
            let v = T::from_i64(0).sub(&a.mul(&pivot[j].1)?)?;
            j += 1;
            (pivot[j - 1].0, v)
        } else {
            let v = p.mul(&row[i].1)?.sub(&a.mul(&pivot[j].1)?)?;
            i += 1;
            j += 1;
            (row[i - 1].0, v)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    Some(out)
}

fn normalize<T: Coeff>(row: &mut [(usize, T)]) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.clone();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            return;
        }
        g = g.gcd(v);
    }
    if !g.is_one() && !g.is_zero() {
        for (_, v) in row.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

fn rank_over<T: Coeff>(rows: &[Vec<(usize, T)>]) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for row in rows {
        let mut r = row.clone();
        while let Some((col, lead)) = r.first().cloned() {
            match pivots.get(&col) {
                Some(piv) => {
                    let p = piv[0].1.clone();
                    let g = p.gcd(&lead);
                    let (p, a) = (p.div_exact(&g), lead.div_exact(&g));
                    r = combine(&r, piv, &p, &a)?;
                    normalize(&mut r);
                }
                None => {
                    pivots.insert(col, r);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// Rank over the rationals.
pub fn rank_rational(rows: &[SparseRow]) -> usize {
    if let Some(r) = rank_over::<i64>(rows) {
        return r;
    }
    let big: Vec<Vec<(usize, BigInt)>> = rows
        .iter()
        .map(|row| row.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
        .collect();
    rank_over(&big).expect("big integers never overflow")
}

/// Rank over `GF(p)` for a prime `p`.
pub fn rank_mod_p(rows: &[SparseRow], p: u32) -> usize {
    let p = p as i64;
    let inv = |a: i64| -> i64 {
        // Fermat: a^(p-2) mod p.
        let (mut base, mut exp, mut acc) = (a.rem_euclid(p), p - 2, 1i64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    };
    let mut pivots: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
    for row in rows {
        let mut r: Vec<(usize, i64)> = row
            .iter()
            .map(|&(c, v)| (c, v.rem_euclid(p)))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(col, lead)) = r.first() {
            match pivots.get(&col) {
                Some(piv) => {
                    // Pivot rows are monic, so r ← r − lead·pivot.
                    let a = (p - lead) % p;
                    let mut out = Vec::with_capacity(r.len() + piv.len());
                    let (mut i, mut j) = (0, 0);
                    while i < r.len() || j < piv.len() {
                        let (col, val) = if j >= piv.len() || (i < r.len() && r[i].0 < piv[j].0) {
                            i += 1;
                            r[i - 1]
                        } else if i >= r.len() || piv[j].0 < r[i].0 {
                            j += 1;
                            (piv[j - 1].0, a * piv[j - 1].1 % p)
                        } else {
                            i += 1;
                            j += 1;
                            (r[i - 1].0, (r[i - 1].1 + a * piv[j - 1].1) % p)
                        };
                        if val != 0 {
                            out.push((col, val));
                        }
                    }
                    r = out;
                }
                None => {
                    let s = inv(lead);
                    for e in r.iter_mut() {
                        e.1 = e.1 * s % p;
                    }
                    pivots.insert(col, r);
                    break;
                }
            }
        }
    }
    pivots.len()
}
