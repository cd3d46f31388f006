//! Root systems of simple Lie algebras, driven entirely by the Cartan matrix.
//!
//! Nodes are numbered as in Bourbaki. For the exceptional types this gives
//!
//! ```text
//! F4:  1 - 2 => 3 - 4          (1, 2 long; 3, 4 short)
//! E6:  1 - 3 - 4 - 5 - 6,  2 attached to 4
//! E7:  1 - 3 - 4 - 5 - 6 - 7,  2 attached to 4
//! E8:  1 - 3 - 4 - 5 - 6 - 7 - 8,  2 attached to 4
//! ```
//!
//! and `cartan[i][j] = <alpha_i, alpha_j^vee>`, so row `i` of the Cartan
//! matrix is `alpha_i` written in fundamental-weight coordinates. The F4
//! matrix is
//!
//! ```text
//!  2 -1  0  0
//! -1  2 -2  0
//!  0 -1  2 -1
//!  0  0 -1  2
//! ```

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl LieType {
    pub fn rank(self) -> usize {
        match self {
            LieType::A(n) | LieType::B(n) | LieType::C(n) | LieType::D(n) | LieType::E(n) => n,
            LieType::F4 => 4,
            LieType::G2 => 2,
        }
    }

    pub fn is_exceptional_target(self) -> bool {
        matches!(self, LieType::F4 | LieType::E(6) | LieType::E(7) | LieType::E(8))
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            LieType::A(n) => fact(n + 1),
            LieType::B(n) | LieType::C(n) => (1u128 << n) * fact(n),
            LieType::D(n) => (1u128 << (n - 1)) * fact(n),
            LieType::E(6) => 51_840,
            LieType::E(7) => 2_903_040,
            LieType::E(8) => 696_729_600,
            LieType::E(_) => unreachable!(),
            LieType::F4 => 1152,
            LieType::G2 => 12,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieType::A(n) => write!(f, "A{n}"),
            LieType::B(n) => write!(f, "B{n}"),
            LieType::C(n) => write!(f, "C{n}"),
            LieType::D(n) => write!(f, "D{n}"),
            LieType::E(n) => write!(f, "E{n}"),
            LieType::F4 => write!(f, "F4"),
            LieType::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownType(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let digits: String = chars.filter(|c| *c != '_').collect();
        let n: usize = digits.parse().map_err(|_| bad())?;
        let ty = match (letter, n) {
            ('A', n) if n >= 1 => LieType::A(n),
            ('B', n) if n >= 2 => LieType::B(n),
            ('C', n) if n >= 3 => LieType::C(n),
            ('D', n) if n >= 4 => LieType::D(n),
            ('E', n @ 6..=8) => LieType::E(n),
            ('F', 4) => LieType::F4,
            ('G', 2) => LieType::G2,
            _ => return Err(bad()),
        };
        Ok(ty)
    }
}

/// A weight in the basis of fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub lie_type: LieType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, sorted by height then lexicographically.
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root_marks: Vec<i64>,
    /// `(1, n_1, ..., n_r)`.
    pub affine_marks: Vec<i64>,
    /// Half squared lengths of the simple roots, short roots normalised to 1.
    pub half_lengths: Vec<i64>,
    cartan_inverse: Vec<Vec<Rational64>>,
}

fn symmetric_form(t: LieType) -> Vec<Vec<i64>> {
    let r = t.rank();
    let mut b = vec![vec![0i64; r]; r];
    let edge = |b: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        b[i - 1][j - 1] = v;
        b[j - 1][i - 1] = v;
    };
    let mut diag = vec![2i64; r];
    match t {
        LieType::A(n) => {
            for i in 1..n {
                edge(&mut b, i, i + 1, -1);
            }
        }
        LieType::B(n) => {
            for d in diag.iter_mut().take(n - 1) {
                *d = 4;
            }
            for i in 1..n {
                edge(&mut b, i, i + 1, -2);
            }
        }
        LieType::C(n) => {
            diag[n - 1] = 4;
            for i in 1..n - 1 {
                edge(&mut b, i, i + 1, -1);
            }
            edge(&mut b, n - 1, n, -2);
        }
        LieType::D(n) => {
            for i in 1..n - 1 {
                edge(&mut b, i, i + 1, -1);
            }
            edge(&mut b, n - 2, n, -1);
        }
        LieType::E(n) => {
            edge(&mut b, 1, 3, -1);
            edge(&mut b, 2, 4, -1);
            for i in 3..n {
                edge(&mut b, i, i + 1, -1);
            }
        }
        LieType::F4 => {
            diag[0] = 4;
            diag[1] = 4;
            edge(&mut b, 1, 2, -2);
            edge(&mut b, 2, 3, -2);
            edge(&mut b, 3, 4, -1);
        }
        LieType::G2 => {
            diag[1] = 6;
            edge(&mut b, 1, 2, -3);
        }
    }
    for i in 0..r {
        b[i][i] = diag[i];
    }
    b
}

/// Exact inverse of a small integer matrix by Gauss-Jordan elimination.
pub(crate) fn rational_inverse(m: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v: Vec<Rational64> = row.iter().map(|&x| Rational64::from_integer(x)).collect();
            v.extend((0..n).map(|j| Rational64::from_integer((i == j) as i64)));
            v
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular matrix");
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let d = a[col][c] * f;
                    a[r][c] -= d;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

pub fn build_root_system(t: LieType) -> RootSystem {
    let r = t.rank();
    let b = symmetric_form(t);
    let cartan: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| 2 * b[i][j] / b[j][j]).collect()).collect();
    let half_lengths: Vec<i64> = (0..r).map(|i| b[i][i] / 2).collect();

    // Closure under adding simple roots, using root strings: beta + alpha_i is
    // a root iff p - <beta, alpha_i^vee> > 0, where p is how far the
    // alpha_i-string extends below beta.
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect();
    for v in &layer {
        seen.insert(v.clone());
    }
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..r {
                let pairing: i64 = (0..r).map(|j| beta[j] * cartan[j][i]).sum();
                let mut p = 0;
                let mut lower = beta.clone();
                loop {
                    lower[i] -= 1;
                    if seen.contains(&lower) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        roots.append(&mut layer);
        next.sort();
        layer = next;
    }
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    let highest = roots.last().cloned().expect("nonempty root system");
    let mut affine_marks = vec![1];
    affine_marks.extend(highest.iter().copied());
    RootSystem {
        lie_type: t,
        rank: r,
        cartan_inverse: rational_inverse(&cartan),
        cartan,
        positive_roots: roots,
        highest_root_marks: highest,
        affine_marks,
        half_lengths,
    }
}

pub fn build_root_system_from_label(label: &str) -> Result<RootSystem> {
    Ok(build_root_system(label.parse()?))
}

impl RootSystem {
    pub fn cartan_inverse(&self) -> &[Vec<Rational64>] {
        &self.cartan_inverse
    }

    fn check(&self, w: &Weight) -> Result<()> {
        if w.0.len() != self.rank {
            return Err(Error::WrongLength { got: w.0.len(), rank: self.rank });
        }
        Ok(())
    }

    /// A root given in simple-root coordinates, rewritten in fundamental-weight coordinates.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        let r = self.rank;
        Weight((0..r).map(|j| (0..r).map(|i| root[i] * self.cartan[i][j]).sum()).collect())
    }

    /// Simple-root coordinates of a weight, over the rationals.
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<Rational64> {
        let r = self.rank;
        (0..r)
            .map(|j| {
                (0..r)
                    .map(|i| self.cartan_inverse[i][j] * Rational64::from_integer(w.0[i]))
                    .fold(Rational64::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// Invariant form with short roots of squared length 2.
    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Rational64 {
        let rb = self.weight_to_root_coords(b);
        (0..self.rank)
            .map(|j| rb[j] * Rational64::from_integer(a.0[j] * self.half_lengths[j]))
            .fold(Rational64::zero(), |x, y| x + y)
    }

    /// The highest root in fundamental-weight coordinates.
    pub fn highest_root(&self) -> Weight {
        self.root_to_weight(&self.highest_root_marks)
    }

    /// Coefficients of the highest coroot on the simple coroots.
    pub fn highest_coroot_coords(&self) -> Vec<i64> {
        let long = *self.half_lengths.iter().max().unwrap();
        self.highest_root_marks.iter().zip(&self.half_lengths).map(|(n, d)| n * d / long).collect()
    }

    pub fn reflect(&self, i: usize, w: &Weight) -> Result<Weight> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank });
        }
        self.check(w)?;
        Ok(self.reflect_unchecked(i - 1, w))
    }

    pub(crate) fn reflect_unchecked(&self, i: usize, w: &Weight) -> Weight {
        let c = w.0[i];
        Weight(w.0.iter().zip(&self.cartan[i]).map(|(x, a)| x - c * a).collect())
    }

    pub fn weyl_orbit(&self, w: &Weight) -> Result<Vec<Weight>> {
        self.check(w)?;
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank {
                if x.0[i] != 0 {
                    let y = self.reflect_unchecked(i, &x);
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    pub fn dominant_representative(&self, w: &Weight) -> Result<Weight> {
        self.check(w)?;
        Ok(self.dominant_unchecked(w.clone()))
    }

    pub(crate) fn dominant_unchecked(&self, mut w: Weight) -> Weight {
        while let Some(i) = w.0.iter().position(|&c| c < 0) {
            w = self.reflect_unchecked(i, &w);
        }
        w
    }

    /// All roots (positive and negative) in fundamental-weight coordinates.
    pub fn roots_as_weights(&self) -> Vec<Weight> {
        let mut out = Vec::with_capacity(2 * self.positive_roots.len());
        for root in &self.positive_roots {
            let w = self.root_to_weight(root);
            out.push(w.neg());
            out.push(w);
        }
        out.sort();
        out
    }

    /// Half the sum of the positive roots, which is the sum of the fundamental weights.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    /// Nodes with mark 1: the minuscule coweights, representing the centre.
    pub fn minuscule_nodes(&self) -> Vec<usize> {
        (0..self.rank).filter(|&i| self.highest_root_marks[i] == 1).collect()
    }
}
