#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use feasichar::brauer::{parse_table, parse_table_unchecked, BrauerTable};
use feasichar::cyclotomic::CyclotomicNumber;
use feasichar::feasible::solve_with_targets;
use feasichar::rootsystem::RootSystem;
use num_integer::Integer;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn table(name: &str) -> BrauerTable {
    parse_table(&std::fs::read_to_string(data_path(name)).unwrap()).unwrap()
}

/// Weyl orbits on `(Z/m)^r`, seen as `m`-torsion of the torus via coroot
/// coordinates, restricted to points of exact order `m`.
pub fn brute_force_orbits(rs: &RootSystem, m: i64) -> Vec<Vec<Vec<i64>>> {
    let r = rs.rank;
    let total = (m as usize).pow(r as u32);
    let decode = |mut idx: usize| {
        let mut k = vec![0i64; r];
        for c in k.iter_mut() {
            *c = (idx % m as usize) as i64;
            idx /= m as usize;
        }
        k
    };
    let encode = |k: &[i64]| k.iter().rev().fold(0usize, |acc, &c| acc * m as usize + c.rem_euclid(m) as usize);
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for idx in 0..total {
        let k = decode(idx);
        for i in 0..r {
            let a: i64 = (0..r).map(|j| rs.cartan[i][j] * k[j]).sum();
            let mut s = k.clone();
            s[i] -= a;
            let (x, y) = (find(&mut parent, idx), find(&mut parent, encode(&s)));
            if x != y {
                parent[x] = y;
            }
        }
    }
    let mut orbits: HashMap<usize, Vec<Vec<i64>>> = HashMap::new();
    for idx in 0..total {
        let k = decode(idx);
        let g = k.iter().fold(m, |g, &c| g.gcd(&c));
        if g != 1 {
            continue;
        }
        let root = find(&mut parent, idx);
        orbits.entry(root).or_default().push(k);
    }
    orbits.into_values().collect()
}

pub const SMALL_VALUES: [&str; 8] = ["0", "1", "-1", "2", "-2", "z3", "-1 - z3", "3"];

/// Three classes of orders 1, 2, 3 and one irreducible per entry of `rows`.
pub fn synthetic(rows: &[(u64, [usize; 3])]) -> BrauerTable {
    let mut text = String::from(
        "group S p 0 exponent 6\nclass 1A order 1\nclass 2A order 2 pow 2:1A\nclass 3A order 3 pow 2:3A 3:1A\n",
    );
    for (j, (deg, vals)) in rows.iter().enumerate() {
        let v1 = SMALL_VALUES[vals[1] % 5];
        let v2 = SMALL_VALUES[vals[2]];
        text.push_str(&format!(
            "irr x{j} deg {deg} ind 1 dual x{j} h1 ? vals {};{v1};{v2}\n",
            SMALL_VALUES[vals[0] % 5]
        ));
    }
    parse_table_unchecked(&text).unwrap()
}

pub fn combination(t: &BrauerTable, mult: &[u32], c: usize) -> CyclotomicNumber {
    mult.iter().zip(&t.irreducibles).map(|(&a, chi)| &CyclotomicNumber::integer(a as i64) * &chi.values[c]).sum()
}

pub fn coords(t: &BrauerTable, v: &CyclotomicNumber, c: usize) -> Vec<i64> {
    v.coords_at_i64(t.classes[c].order as u64).unwrap()
}

/// Every nonnegative vector meeting the dimension and the class targets.
pub fn grid_solutions(t: &BrauerTable, dim: u64, targets: &[Vec<Vec<i64>>]) -> Vec<Vec<u32>> {
    let n = t.irreducibles.len();
    let limits: Vec<u32> = t.irreducibles.iter().map(|chi| (dim / chi.degree) as u32).collect();
    let mut out = Vec::new();
    let mut a = vec![0u32; n];
    loop {
        let d: u64 = a.iter().zip(&t.irreducibles).map(|(&x, chi)| x as u64 * chi.degree).sum();
        if d == dim && (0..t.classes.len()).all(|c| targets[c].contains(&coords(t, &combination(t, &a, c), c))) {
            out.push(a.clone());
        }
        let mut i = 0;
        while i < n {
            a[i] += 1;
            if a[i] <= limits[i] {
                break;
            }
            a[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    out
}

/// Solve a synthetic system whose targets are those of `mult` plus decoys;
/// returns (grid solutions, solver solutions).
pub fn solver_case(
    rows: &[(u64, [usize; 3])],
    mult: &[u32],
    decoys: &[(usize, usize)],
) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let t = synthetic(rows);
    let dim: u64 = mult.iter().zip(rows).map(|(&a, (d, _))| a as u64 * d).sum();
    let mut targets: Vec<Vec<Vec<i64>>> = (0..3).map(|c| vec![coords(&t, &combination(&t, mult, c), c)]).collect();
    for &(c, v) in decoys {
        let x: CyclotomicNumber = SMALL_VALUES[v].parse().unwrap();
        let x = &x * &CyclotomicNumber::integer(dim as i64 % 4 + 1);
        if x.conductor() <= 2 || c == 2 {
            targets[c].push(coords(&t, &x, c));
        }
    }
    let mut expect = grid_solutions(&t, dim, &targets);
    expect.sort();
    (expect, solve_with_targets(&t, dim, targets))
}
