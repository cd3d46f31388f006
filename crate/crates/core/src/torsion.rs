//! Conjugacy classes of elements of finite order in simply connected groups.
//!
//! An element is `exp(2 pi i x)` for a rational point `x` of the coroot space,
//! stored as `x = k / m` in coroot coordinates. The simply connected group has
//! the coroot lattice as cocharacter lattice, so `m` is the exact order of the
//! element. Conjugacy classes correspond to points of the closed fundamental
//! alcove `{alpha_i(x) >= 0, theta(x) <= 1}`, recorded by Kac coordinates
//! `s_i = m * alpha_i(x)` for `i >= 1` and `s_0 = m - m * theta(x)`, divided
//! by their gcd. After that division `sum a_i s_i` (affine marks) is the order
//! of the image in the adjoint group, which can be a proper divisor of `m`.

use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;
use rayon::prelude::*;

use crate::cyclotomic::{divisors, CyclotomicNumber};
use crate::error::{Error, Result};
use crate::repchar::WeightSystem;
use crate::rootsystem::{LieType, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionClass {
    pub group: LieType,
    /// Exact order in the simply connected group.
    pub order: u32,
    /// Primitive Kac coordinates `(s_0, ..., s_r)`.
    pub kac: Vec<u32>,
    /// Order of the image in the adjoint group, `sum a_i s_i`.
    pub adjoint_order: u32,
    /// Alcove representative `x = tuple / order` in coroot coordinates.
    pub tuple: Vec<i64>,
}

impl TorsionClass {
    /// `n_i = order * lambda_i(x) mod order`, the exponent of `zeta_order` in `lambda_i(t)`.
    pub fn eigen_exponents(&self) -> Vec<i64> {
        let m = self.order as i64;
        self.tuple.iter().map(|k| k.rem_euclid(m)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    pub fn kac_string(&self) -> String {
        let parts: Vec<String> = self.kac.iter().map(|s| s.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for TorsionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} order={}", self.kac_string(), self.order)
    }
}

/// Exponent of the centre of the simply connected group (that of P/Q).
pub fn center_exponent(rs: &RootSystem) -> i64 {
    rs.cartan_inverse().iter().flatten().fold(1i64, |acc, q| acc.lcm(q.denom()))
}

fn cartan_apply(rs: &RootSystem, k: &[i64]) -> Vec<i64> {
    rs.cartan.iter().map(|row| row.iter().zip(k).map(|(a, b)| a * b).sum()).collect()
}

/// Move `x = k / m` into the fundamental alcove and return its class.
pub fn normalize_to_alcove(rs: &RootSystem, k: &[i64], m: u32) -> Result<TorsionClass> {
    if m == 0 {
        return Err(Error::MalformedPoint("denominator 0".into()));
    }
    if k.len() != rs.rank {
        return Err(Error::MalformedPoint(format!("{} coordinates for rank {}", k.len(), rs.rank)));
    }
    let g = k.iter().fold(m as i64, |acc, x| acc.gcd(x));
    let m = m as i64 / g;
    let mut k: Vec<i64> = k.iter().map(|x| (x / g).rem_euclid(m)).collect();
    let marks = &rs.highest_root_marks;
    let coroot = rs.highest_coroot_coords();
    let (a, theta) = loop {
        let a = cartan_apply(rs, &k);
        if let Some(i) = a.iter().position(|&v| v < 0) {
            k[i] -= a[i];
            continue;
        }
        let theta: i64 = a.iter().zip(marks).map(|(x, n)| x * n).sum();
        if theta > m {
            let t = theta - m;
            for (ki, c) in k.iter_mut().zip(&coroot) {
                *ki -= t * c;
            }
            continue;
        }
        break (a, theta);
    };
    let mut s = Vec::with_capacity(rs.rank + 1);
    s.push(m - theta);
    s.extend(a.iter().copied());
    let sg = s.iter().fold(0i64, |acc, x| acc.gcd(x));
    Ok(TorsionClass {
        group: rs.lie_type,
        order: m as u32,
        kac: s.iter().map(|x| (x / sg) as u32).collect(),
        adjoint_order: (m / sg) as u32,
        tuple: k,
    })
}

/// The point `x = C^{-1} s / M` of a Kac tuple, as `(k, m)` with `m` its exact order.
pub fn kac_to_point(rs: &RootSystem, kac: &[u32]) -> Result<(Vec<i64>, u32)> {
    if kac.len() != rs.rank + 1 {
        return Err(Error::MalformedPoint(format!("Kac tuple of length {}", kac.len())));
    }
    let big_m: i64 = kac.iter().zip(&rs.affine_marks).map(|(s, a)| *s as i64 * a).sum();
    if big_m == 0 {
        return Err(Error::MalformedPoint("Kac tuple sums to zero".into()));
    }
    let inv = rs.cartan_inverse();
    let x: Vec<Rational64> = (0..rs.rank)
        .map(|i| {
            (0..rs.rank)
                .map(|j| inv[i][j] * Rational64::from_integer(kac[j + 1] as i64))
                .fold(Rational64::zero(), |a, b| a + b)
                / Rational64::from_integer(big_m)
        })
        .collect();
    let m = x.iter().fold(1i64, |acc, q| acc.lcm(q.denom()));
    Ok((x.iter().map(|q| (q * Rational64::from_integer(m)).to_integer()).collect(), m as u32))
}

/// Visit every primitive Kac tuple with `sum a_i s_i = total`.
fn for_each_kac(marks: &[i64], total: i64, f: &mut impl FnMut(&[u32])) {
    fn rec(marks: &[i64], idx: usize, left: i64, cur: &mut Vec<u32>, g: u32, f: &mut impl FnMut(&[u32])) {
        if idx == marks.len() - 1 {
            if left % marks[idx] == 0 {
                let s = (left / marks[idx]) as u32;
                if g.gcd(&s) == 1 {
                    cur.push(s);
                    f(cur);
                    cur.pop();
                }
            }
            return;
        }
        let mut s = 0;
        while s as i64 * marks[idx] <= left {
            cur.push(s);
            rec(marks, idx + 1, left - s as i64 * marks[idx], cur, g.gcd(&s), f);
            cur.pop();
            s += 1;
        }
    }
    let mut cur = Vec::with_capacity(marks.len());
    rec(marks, 0, total, &mut cur, 0, f);
}

struct OrderOracle {
    adjugate: Vec<Vec<i64>>,
    det: i64,
}

impl OrderOracle {
    fn new(rs: &RootSystem) -> Self {
        let det = center_exponent(rs).max(1);
        // C^{-1} has denominators dividing det for every simple type used here
        let adjugate = rs
            .cartan_inverse()
            .iter()
            .map(|row| row.iter().map(|q| (q * Rational64::from_integer(det)).to_integer()).collect())
            .collect();
        OrderOracle { adjugate, det }
    }

    fn sc_order(&self, kac: &[u32], adjoint_order: i64) -> i64 {
        let den = self.det * adjoint_order;
        let mut g = den;
        for row in &self.adjugate {
            let y: i64 = row.iter().zip(&kac[1..]).map(|(a, s)| a * *s as i64).sum();
            g = g.gcd(&y);
        }
        den / g
    }
}

fn adjoint_orders_for(rs: &RootSystem, m: u32) -> Vec<i64> {
    let e = center_exponent(rs);
    divisors(m as u64)
        .into_iter()
        .map(|d| d as i64)
        .filter(|d| (m as i64 / d) <= e && e % (m as i64 / d) == 0)
        .collect()
}

/// One class per conjugacy class of elements of exact order `m` in the
/// simply connected group, sorted by Kac coordinates.
pub fn enumerate_classes(rs: &RootSystem, m: u32) -> Result<Vec<TorsionClass>> {
    if !rs.lie_type.is_exceptional_target() {
        return Err(Error::UnsupportedGroup(rs.lie_type.to_string()));
    }
    if m == 0 {
        return Ok(Vec::new());
    }
    let oracle = OrderOracle::new(rs);
    let mut out = Vec::new();
    for big_m in adjoint_orders_for(rs, m) {
        for_each_kac(&rs.affine_marks, big_m, &mut |kac| {
            if oracle.sc_order(kac, big_m) == m as i64 {
                let (k, order) = kac_to_point(rs, kac).expect("valid Kac tuple");
                debug_assert_eq!(order, m);
                out.push(TorsionClass {
                    group: rs.lie_type,
                    order,
                    kac: kac.to_vec(),
                    adjoint_order: big_m as u32,
                    tuple: k,
                });
            }
        });
    }
    out.sort_by(|a, b| a.kac.cmp(&b.kac));
    Ok(out)
}

/// Number of classes of elements of exact order `m`, without building them.
pub fn count_classes(rs: &RootSystem, m: u32) -> u64 {
    let oracle = OrderOracle::new(rs);
    let mut n = 0;
    for big_m in adjoint_orders_for(rs, m) {
        for_each_kac(&rs.affine_marks, big_m, &mut |kac| {
            if oracle.sc_order(kac, big_m) == m as i64 {
                n += 1;
            }
        });
    }
    n
}

/// Class counts for every order `1..=max_order`, computed in parallel.
pub fn count_classes_up_to(rs: &RootSystem, max_order: u32) -> Vec<(u32, u64)> {
    (1..=max_order).into_par_iter().map(|m| (m, count_classes(rs, m))).collect()
}

pub fn identity_class(rs: &RootSystem) -> TorsionClass {
    let mut kac = vec![0; rs.rank + 1];
    kac[0] = 1;
    TorsionClass { group: rs.lie_type, order: 1, kac, adjoint_order: 1, tuple: vec![0; rs.rank] }
}

/// The class of `t^k`.
pub fn power_class(rs: &RootSystem, c: &TorsionClass, k: i64) -> TorsionClass {
    let m = c.order as i64;
    let k = k.rem_euclid(m);
    let tuple: Vec<i64> = c.tuple.iter().map(|x| (x * k).rem_euclid(m)).collect();
    normalize_to_alcove(rs, &tuple, c.order).expect("well-formed point")
}

/// Eigenvalue exponent counts: entry `e` is the total multiplicity of weights
/// on which the element acts as `zeta_m^e`.
pub fn trace_counts(c: &TorsionClass, ws: &WeightSystem) -> Vec<i64> {
    let m = c.order as i64;
    let mut counts = vec![0i64; m as usize];
    for (w, &mult) in &ws.multiplicities {
        let e: i64 = w.0.iter().zip(&c.tuple).map(|(a, b)| a * b).sum();
        counts[e.rem_euclid(m) as usize] += mult as i64;
    }
    counts
}

pub fn trace(c: &TorsionClass, ws: &WeightSystem) -> CyclotomicNumber {
    CyclotomicNumber::from_exponent_counts(c.order as u64, &trace_counts(c, ws))
}

/// Whether two classes become conjugate in the adjoint group, i.e. differ by
/// translation through a central element.
pub fn adjoint_equivalent(rs: &RootSystem, c1: &TorsionClass, c2: &TorsionClass) -> bool {
    if c1.group != c2.group {
        return false;
    }
    if c1 == c2 {
        return true;
    }
    if c1.kac.len() != c2.kac.len() || c1.adjoint_order != c2.adjoint_order {
        return false;
    }
    let inv = rs.cartan_inverse();
    let m = c1.order as i64;
    for j in rs.minuscule_nodes() {
        let col: Vec<Rational64> = (0..rs.rank).map(|i| inv[i][j]).collect();
        let l = col.iter().fold(m, |acc, q| acc.lcm(q.denom()));
        let k: Vec<i64> = c1
            .tuple
            .iter()
            .zip(&col)
            .map(|(x, y)| x * (l / m) + (y * Rational64::from_integer(l)).to_integer())
            .collect();
        if let Ok(c) = normalize_to_alcove(rs, &k, l as u32) {
            if &c == c2 {
                return true;
            }
        }
    }
    false
}
