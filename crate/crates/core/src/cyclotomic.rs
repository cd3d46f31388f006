//! Exact elements of the cyclotomic integers Z[zeta_n].
//!
//! A value is stored at its minimal conductor `n` (never `2 mod 4`) as integer
//! coordinates on the power basis `1, z, ..., z^(phi(n)-1)` modulo the n-th
//! cyclotomic polynomial. Equal values therefore have equal representations,
//! so `Eq` and `Hash` are structural.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicNumber {
    n: u64,
    coeffs: Vec<BigInt>,
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort();
    out
}

fn lcm(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let den = cyclotomic_polynomial(d);
        num = poly_div_exact(&num, &den);
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

/// Row `k` holds `x^k mod Phi_n` for `0 <= k < n`.
fn power_table(n: u64) -> Arc<Vec<Vec<i64>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<Vec<i64>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let phi = euler_phi(n) as usize;
    let poly = cyclotomic_polynomial(n);
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        rows.push(cur.clone());
        // multiply by x, then eliminate x^phi using the monic Phi_n
        let top = cur[phi - 1];
        for j in (1..phi).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for j in 0..phi {
                cur[j] -= top * poly[j];
            }
        }
    }
    let t = Arc::new(rows);
    cache.lock().unwrap().insert(n, t.clone());
    t
}

/// Reduce a group-ring element `sum_k counts[k] z^k` (indices taken mod n).
fn reduce_counts<T: Clone + Into<BigInt>>(n: u64, counts: &[T]) -> Vec<BigInt> {
    let table = power_table(n);
    let phi = table[0].len();
    let mut acc = vec![0i128; phi];
    let mut big: Option<Vec<BigInt>> = None;
    for (k, c) in counts.iter().enumerate() {
        let c: BigInt = c.clone().into();
        if c.is_zero() {
            continue;
        }
        let row = &table[k % n as usize];
        match (c.to_i64(), &mut big) {
            (Some(ci), None) => {
                for (a, r) in acc.iter_mut().zip(row) {
                    *a += ci as i128 * *r as i128;
                }
                if acc.iter().any(|a| a.abs() > (1i128 << 100)) {
                    big = Some(acc.iter().map(|&a| BigInt::from(a)).collect());
                }
            }
            (_, slot) => {
                let b = slot.get_or_insert_with(|| acc.iter().map(|&a| BigInt::from(a)).collect());
                for (a, r) in b.iter_mut().zip(row) {
                    *a += &c * *r;
                }
            }
        }
    }
    big.unwrap_or_else(|| acc.into_iter().map(BigInt::from).collect())
}

/// Solving data for recognising elements of Q(zeta_d) inside Q(zeta_n).
struct Lowering {
    d: u64,
    /// Embedded basis of Z[zeta_d]: `columns[j]` is zeta_d^j written at conductor n.
    columns: Vec<Vec<i64>>,
    pivot_rows: Vec<usize>,
    /// Inverse of the pivot-row square block, as an integer matrix over `denom`.
    inverse: Vec<Vec<i64>>,
    denom: i64,
}

fn lowering(n: u64, d: u64) -> Arc<Lowering> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), Arc<Lowering>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(l) = cache.lock().unwrap().get(&(n, d)) {
        return l.clone();
    }
    let table = power_table(n);
    let phi_d = euler_phi(d) as usize;
    let step = (n / d) as usize;
    let columns: Vec<Vec<i64>> = (0..phi_d).map(|j| table[j * step].clone()).collect();
    let phi_n = table[0].len();

    // pick independent rows greedily with exact rational elimination
    use num_rational::Rational64;
    let mut basis: Vec<(usize, Vec<Rational64>)> = Vec::new();
    let mut pivot_rows = Vec::new();
    for row in 0..phi_n {
        let mut v: Vec<Rational64> = (0..phi_d).map(|j| Rational64::from_integer(columns[j][row])).collect();
        for (pc, b) in &basis {
            let f = v[*pc];
            if !f.is_zero() {
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= f * y;
                }
            }
        }
        if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
            let p = v[pc];
            for x in v.iter_mut() {
                *x /= p;
            }
            basis.push((pc, v));
            pivot_rows.push(row);
            if pivot_rows.len() == phi_d {
                break;
            }
        }
    }
    let square: Vec<Vec<i64>> = pivot_rows.iter().map(|&r| (0..phi_d).map(|j| columns[j][r]).collect()).collect();
    let inv = crate::rootsystem::rational_inverse(&square);
    let denom = inv.iter().flatten().fold(1i64, |acc, q| acc.lcm(q.denom()));
    let inverse = inv.iter().map(|row| row.iter().map(|q| q.numer() * (denom / q.denom())).collect()).collect();
    let l = Arc::new(Lowering { d, columns, pivot_rows, inverse, denom });
    cache.lock().unwrap().insert((n, d), l.clone());
    l
}

impl Lowering {
    fn try_lower(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let phi_d = self.columns.len();
        let denom = BigInt::from(self.denom);
        let mut y = Vec::with_capacity(phi_d);
        for i in 0..phi_d {
            let mut s = BigInt::zero();
            for (k, &r) in self.pivot_rows.iter().enumerate() {
                s += &x[r] * self.inverse[i][k];
            }
            let (q, rem) = s.div_rem(&denom);
            if !rem.is_zero() {
                return None;
            }
            y.push(q);
        }
        for (row, xr) in x.iter().enumerate() {
            let mut s = BigInt::zero();
            for (j, yj) in y.iter().enumerate() {
                let c = self.columns[j][row];
                if c != 0 {
                    s += yj * c;
                }
            }
            if &s != xr {
                return None;
            }
        }
        Some(y)
    }
}

impl CyclotomicNumber {
    fn canonical(n: u64, coeffs: Vec<BigInt>) -> Self {
        if coeffs.iter().skip(1).all(|c| c.is_zero()) {
            let c = coeffs.into_iter().next().unwrap_or_default();
            return CyclotomicNumber { n: 1, coeffs: vec![c] };
        }
        for d in divisors(n) {
            if d == n || d == 1 || d % 4 == 2 {
                continue;
            }
            let l = lowering(n, d);
            if let Some(y) = l.try_lower(&coeffs) {
                return CyclotomicNumber { n: l.d, coeffs: y };
            }
        }
        if n % 4 == 2 {
            // Q(zeta_n) = Q(zeta_{n/2}); the loop above always succeeds for d = n/2
            unreachable!("conductor {n} did not lower");
        }
        CyclotomicNumber { n, coeffs }
    }

    pub fn integer<T: Into<BigInt>>(v: T) -> Self {
        CyclotomicNumber { n: 1, coeffs: vec![v.into()] }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    /// `zeta_n^k` with `zeta_n = exp(2 pi i / n)`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "root of unity of order 0");
        let mut counts = vec![0i64; n as usize];
        counts[k.rem_euclid(n as i64) as usize] = 1;
        Self::from_exponent_counts(n, &counts)
    }

    /// `sum_k counts[k] * zeta_n^k`.
    pub fn from_exponent_counts(n: u64, counts: &[i64]) -> Self {
        Self::canonical(n, reduce_counts(n, counts))
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.n == 1
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.coeffs[0].clone())
    }

    /// Coordinates on the power basis of Z[zeta_m], if `m` is a multiple of the conductor.
    pub fn coords_at(&self, m: u64) -> Option<Vec<BigInt>> {
        if !m.is_multiple_of(self.n) {
            return None;
        }
        let step = (m / self.n) as usize;
        let mut counts = vec![BigInt::zero(); m as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            counts[j * step] = c.clone();
        }
        Some(reduce_counts(m, &counts))
    }

    /// Like [`coords_at`](Self::coords_at) but with machine integers.
    pub fn coords_at_i64(&self, m: u64) -> Option<Vec<i64>> {
        self.coords_at(m)?.iter().map(|c| c.to_i64()).collect()
    }

    fn lifted(&self, m: u64) -> Vec<BigInt> {
        self.coords_at(m).expect("conductor divides lift target")
    }

    /// The automorphism `zeta -> zeta^k`.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.n;
        if (k.rem_euclid(n as i64) as u64).gcd(&n) != 1 {
            return Err(Error::NotCoprime { k, n });
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let mut counts = vec![BigInt::zero(); n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            let e = (j as i64 * k).rem_euclid(n as i64) as usize;
            counts[e] += c;
        }
        Ok(Self::canonical(n, reduce_counts(n, &counts)))
    }

    pub fn complex_conjugate(&self) -> Self {
        self.galois(-1).expect("-1 is a unit")
    }

    /// Product of all Galois conjugates; a rational integer.
    pub fn norm(&self) -> BigInt {
        let n = self.n;
        let mut acc = Self::one();
        for k in 1..=n.max(1) {
            if k.gcd(&n) == 1 {
                acc = &acc * &self.galois(k as i64).unwrap();
            }
        }
        acc.to_integer().expect("norm is rational")
    }

    fn binary(&self, other: &Self, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let m = lcm(self.n, other.n);
        let a = self.lifted(m);
        let b = other.lifted(m);
        let c = a.iter().zip(&b).map(|(x, y)| op(x, y)).collect();
        Self::canonical(m, c)
    }

    fn multiply(&self, other: &Self) -> Self {
        if self.n == 1 {
            let c = &self.coeffs[0];
            return CyclotomicNumber { n: other.n, coeffs: other.coeffs.iter().map(|x| x * c).collect() }.recanon();
        }
        if other.n == 1 {
            return other.multiply(self);
        }
        let m = lcm(self.n, other.n);
        let a = self.lifted(m);
        let b = other.lifted(m);
        let mut prod = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        Self::canonical(m, reduce_counts(m, &prod))
    }

    fn recanon(self) -> Self {
        Self::canonical(self.n, self.coeffs)
    }

    /// Approximate complex value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            let a = 2.0 * std::f64::consts::PI * j as f64 / self.n as f64;
            let c = c.to_f64().unwrap_or(f64::NAN);
            re += c * a.cos();
            im += c * a.sin();
        }
        (re, im)
    }
}

impl From<i64> for CyclotomicNumber {
    fn from(v: i64) -> Self {
        Self::integer(v)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                let f: fn(&CyclotomicNumber, &CyclotomicNumber) -> CyclotomicNumber = $body;
                f(self, rhs)
            }
        }
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.binary(b, |x, y| x + y));
forward_binop!(Sub, sub, |a, b| a.binary(b, |x, y| x - y));
forward_binop!(Mul, mul, |a, b| a.multiply(b));

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { n: self.n, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

impl std::iter::Sum for CyclotomicNumber {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if j == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "z{}", self.n)?;
            if j > 1 {
                write!(f, "^{j}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl FromStr for CyclotomicNumber {
    type Err = Error;

    /// Accepts sums of terms `c`, `c*zN`, `c*zN^k`, `zN^k` with any signs and
    /// any mix of conductors, e.g. `1 + z5 + z5^4` or `-1*z5^1 + -1*z5^4`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadCyclotomic(s.to_string());
        let text: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(bad());
        }
        let mut terms: Vec<(BigInt, u64, i64)> = Vec::new();
        let mut i = 0;
        let read_int = |i: &mut usize| -> Option<u64> {
            let start = *i;
            while *i < text.len() && text[*i].is_ascii_digit() {
                *i += 1;
            }
            let digits: String = text[start..*i].iter().collect();
            digits.parse().ok()
        };
        while i < text.len() {
            let mut negative = false;
            let mut saw_sign = false;
            while i < text.len() && (text[i] == '+' || text[i] == '-') {
                negative ^= text[i] == '-';
                saw_sign = true;
                i += 1;
            }
            if !saw_sign && !terms.is_empty() {
                return Err(bad());
            }
            let start = i;
            while i < text.len() && text[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: BigInt = if i > start {
                text[start..i].iter().collect::<String>().parse().map_err(|_| bad())?
            } else {
                BigInt::one()
            };
            let had_coeff = i > start;
            let (n, k) = if i < text.len() && (text[i] == '*' || text[i] == 'z') {
                if text[i] == '*' {
                    if !had_coeff {
                        return Err(bad());
                    }
                    i += 1;
                }
                if i >= text.len() || text[i] != 'z' {
                    return Err(bad());
                }
                i += 1;
                let n = read_int(&mut i).filter(|&n| n > 0).ok_or_else(bad)?;
                let k = if i < text.len() && text[i] == '^' {
                    i += 1;
                    read_int(&mut i).ok_or_else(bad)? as i64
                } else {
                    1
                };
                (n, k)
            } else {
                if !had_coeff {
                    return Err(bad());
                }
                (1, 0)
            };
            terms.push((if negative { -coeff } else { coeff }, n, k));
        }
        let m = terms.iter().fold(1u64, |acc, t| lcm(acc, t.1));
        let mut counts = vec![BigInt::zero(); m as usize];
        for (c, n, k) in terms {
            let e = (k.rem_euclid(n as i64) as u64 * (m / n)) as usize;
            counts[e] += c;
        }
        Ok(Self::canonical(m, reduce_counts(m, &counts)))
    }
}
