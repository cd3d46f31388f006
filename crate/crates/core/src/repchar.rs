//! Weight systems of Weyl modules and the Weyl-module composition data.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rootsystem::{LieType, RootSystem, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub high_weight: Weight,
    pub multiplicities: BTreeMap<Weight, u64>,
}

impl WeightSystem {
    pub fn dim(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    /// The weight system of the dual module.
    pub fn dual(&self, rs: &RootSystem) -> WeightSystem {
        let multiplicities: BTreeMap<Weight, u64> = self.multiplicities.iter().map(|(w, &m)| (w.neg(), m)).collect();
        let high_weight = rs.dominant_unchecked(self.high_weight.neg());
        WeightSystem { high_weight, multiplicities }
    }

    pub fn is_self_dual(&self) -> bool {
        self.multiplicities.iter().all(|(w, m)| self.multiplicities.get(&w.neg()) == Some(m))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    Adjoint,
    Minimal,
}

impl ModuleKind {
    pub fn name(self) -> &'static str {
        match self {
            ModuleKind::Adjoint => "adjoint",
            ModuleKind::Minimal => "minimal",
        }
    }
}

impl std::str::FromStr for ModuleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "adjoint" | "L" | "L(G)" => Ok(ModuleKind::Adjoint),
            "minimal" | "V" | "V_min" => Ok(ModuleKind::Minimal),
            other => Err(Error::Config(format!("unknown module `{other}`"))),
        }
    }
}

fn dominant_check(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.0.len() != rs.rank {
        return Err(Error::WrongLength { got: lambda.0.len(), rank: rs.rank });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    Ok(())
}

/// Weyl's dimension formula, `prod (lambda + rho, alpha) / (rho, alpha)` over positive roots.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    dominant_check(rs, lambda)?;
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for root in &rs.positive_roots {
        // (mu, alpha) = sum_j root_j * mu_j * d_j for mu in fundamental coordinates
        let mut a = 0i64;
        let mut b = 0i64;
        for j in 0..rs.rank {
            a += root[j] * (lambda.0[j] + 1) * rs.half_lengths[j];
            b += root[j] * rs.half_lengths[j];
        }
        num *= a;
        den *= b;
    }
    Ok(num / den)
}

fn level(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> i64 {
    let diff = Weight(lambda.0.iter().zip(&mu.0).map(|(a, b)| a - b).collect());
    let c = rs.weight_to_root_coords(&diff);
    c.iter().fold(Rational64::zero(), |a, b| a + b).to_integer()
}

/// Weight multiplicities of the Weyl module with high weight `lambda`, by
/// Freudenthal's recursion over the dominant weights below `lambda`.
pub fn freudenthal(rs: &RootSystem, lambda: &Weight) -> Result<WeightSystem> {
    dominant_check(rs, lambda)?;
    let pos: Vec<Weight> = rs.positive_roots.iter().map(|r| rs.root_to_weight(r)).collect();
    let heights: Vec<i64> = rs.positive_roots.iter().map(|r| r.iter().sum()).collect();

    let mut dominant: Vec<Weight> = vec![lambda.clone()];
    let mut seen: std::collections::HashSet<Weight> = [lambda.clone()].into_iter().collect();
    let mut i = 0;
    while i < dominant.len() {
        let mu = dominant[i].clone();
        for a in &pos {
            let nu = Weight(mu.0.iter().zip(&a.0).map(|(x, y)| x - y).collect());
            if nu.is_dominant() && seen.insert(nu.clone()) {
                dominant.push(nu);
            }
        }
        i += 1;
    }
    let mut by_level: Vec<(i64, Weight)> = dominant.into_iter().map(|mu| (level(rs, lambda, &mu), mu)).collect();
    by_level.sort();

    let rho = rs.rho();
    let shift = |w: &Weight| Weight(w.0.iter().zip(&rho.0).map(|(a, b)| a + b).collect());
    let lr = shift(lambda);
    let norm_lr = rs.inner_product(&lr, &lr);

    let mut mult: HashMap<Weight, i64> = HashMap::new();
    mult.insert(lambda.clone(), 1);
    for (lev, mu) in by_level.iter().skip(1) {
        let mut total = Rational64::zero();
        for (a, &h) in pos.iter().zip(&heights) {
            let mut k = 1;
            while lev - k * h >= 0 {
                let nu = Weight(mu.0.iter().zip(&a.0).map(|(x, y)| x + k * y).collect());
                let dom = rs.dominant_unchecked(nu.clone());
                if let Some(&m) = mult.get(&dom) {
                    total += Rational64::from_integer(m) * rs.inner_product(&nu, a);
                }
                k += 1;
            }
        }
        let mr = shift(mu);
        let denom = norm_lr - rs.inner_product(&mr, &mr);
        let m = (total * Rational64::from_integer(2)) / denom;
        assert!(m.is_integer(), "non-integral Freudenthal multiplicity");
        let m = m.to_integer();
        if m > 0 {
            mult.insert(mu.clone(), m);
        }
    }

    let mut multiplicities = BTreeMap::new();
    for (mu, m) in mult {
        for w in rs.weyl_orbit(&mu)? {
            multiplicities.insert(w, m as u64);
        }
    }
    Ok(WeightSystem { high_weight: lambda.clone(), multiplicities })
}

/// The roots together with `rank` copies of the zero weight.
pub fn adjoint_from_roots(rs: &RootSystem) -> WeightSystem {
    let mut multiplicities: BTreeMap<Weight, u64> = rs.roots_as_weights().into_iter().map(|w| (w, 1)).collect();
    multiplicities.insert(Weight::zero(rs.rank), rs.rank as u64);
    WeightSystem { high_weight: rs.highest_root(), multiplicities }
}

/// Fundamental-weight index (1-based) of the high weight of L(G) and V_min.
pub fn module_node(t: LieType, which: ModuleKind) -> Result<usize> {
    let node = match (t, which) {
        (LieType::F4, ModuleKind::Adjoint) => 1,
        (LieType::F4, ModuleKind::Minimal) => 4,
        (LieType::E(6), ModuleKind::Adjoint) => 2,
        (LieType::E(6), ModuleKind::Minimal) => 1,
        (LieType::E(7), ModuleKind::Adjoint) => 1,
        (LieType::E(7), ModuleKind::Minimal) => 7,
        (LieType::E(8), _) => 8,
        _ => return Err(Error::UnsupportedGroup(t.to_string())),
    };
    Ok(node)
}

pub fn module_high_weight(t: LieType, which: ModuleKind) -> Result<Weight> {
    Ok(Weight::fundamental(t.rank(), module_node(t, which)?))
}

/// Weight system of L(G) (built from the roots) or V_min (by Freudenthal).
pub fn module_weights(rs: &RootSystem, which: ModuleKind) -> Result<WeightSystem> {
    let lambda = module_high_weight(rs.lie_type, which)?;
    if which == ModuleKind::Adjoint || lambda == rs.highest_root() {
        return Ok(adjoint_from_roots(rs));
    }
    freudenthal(rs, &lambda)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionFactor {
    pub high_weight: Weight,
    pub multiplicity: u64,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylCompositionEntry {
    pub group: LieType,
    pub high_weight: Weight,
    pub p: u64,
    pub factors: Vec<CompositionFactor>,
}

impl WeylCompositionEntry {
    pub fn trivial_factors(&self) -> u64 {
        self.factors.iter().filter(|f| f.high_weight.is_zero()).map(|f| f.multiplicity).sum()
    }

    pub fn nontrivial_factor_count(&self) -> u64 {
        self.factors.iter().filter(|f| !f.high_weight.is_zero()).map(|f| f.multiplicity).sum()
    }
}

#[derive(Clone, Debug)]
struct WeylRow {
    group: LieType,
    high_weight: Weight,
    /// `None` for a module irreducible in every characteristic.
    p: Option<u64>,
    factors: Vec<CompositionFactor>,
}

pub const WEYL_DATA: &str = include_str!("../data/weyl_modules.txt");

fn parse_weight(s: &str, line: usize) -> Result<Weight> {
    s.split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(Weight)
        .map_err(|_| Error::Parse { line, msg: format!("bad weight `{s}`") })
}

/// Parse the Weyl module data file.
///
/// ```text
/// irreducible E8 hw 0,0,0,0,0,0,0,1 dim 248
/// reducible F4 hw 1,0,0,0 p 2 factors 1,0,0,0^1:26 0,0,0,1^1:26
/// ```
fn parse_weyl_rows(text: &str) -> Result<Vec<WeylRow>> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse { line, msg: msg.to_string() };
        let tok: Vec<&str> = content.split_whitespace().collect();
        if tok.len() < 4 || tok[2] != "hw" {
            return Err(err("expected `<kind> <group> hw <weight> ...`"));
        }
        let group: LieType = tok[1].parse()?;
        let high_weight = parse_weight(tok[3], line)?;
        if high_weight.0.len() != group.rank() {
            return Err(err("weight length does not match rank"));
        }
        match tok[0] {
            "irreducible" => {
                if tok.len() != 6 || tok[4] != "dim" {
                    return Err(err("expected `dim <n>`"));
                }
                let dim = tok[5].parse().map_err(|_| err("bad dimension"))?;
                let factors = vec![CompositionFactor { high_weight: high_weight.clone(), multiplicity: 1, dim }];
                rows.push(WeylRow { group, high_weight, p: None, factors });
            }
            "reducible" => {
                if tok.len() < 8 || tok[4] != "p" || tok[6] != "factors" {
                    return Err(err("expected `p <p> factors ...`"));
                }
                let p = tok[5].parse().map_err(|_| err("bad characteristic"))?;
                let mut factors = Vec::new();
                for f in &tok[7..] {
                    let (w, rest) = f.split_once('^').ok_or_else(|| err("factor needs `^`"))?;
                    let (m, d) = rest.split_once(':').ok_or_else(|| err("factor needs `:`"))?;
                    factors.push(CompositionFactor {
                        high_weight: parse_weight(w, line)?,
                        multiplicity: m.parse().map_err(|_| err("bad multiplicity"))?,
                        dim: d.parse().map_err(|_| err("bad dimension"))?,
                    });
                }
                rows.push(WeylRow { group, high_weight, p: Some(p), factors });
            }
            _ => return Err(err("unknown record")),
        }
    }
    Ok(rows)
}

fn weyl_rows() -> &'static [WeylRow] {
    static ROWS: OnceLock<Vec<WeylRow>> = OnceLock::new();
    ROWS.get_or_init(|| parse_weyl_rows(WEYL_DATA).expect("bundled Weyl module data parses"))
}

/// Check every row of a Weyl module data file against the dimension formula.
pub fn validate_weyl_data(text: &str) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    for row in parse_weyl_rows(text)? {
        let rs = crate::rootsystem::build_root_system(row.group);
        let total = weyl_dim(&rs, &row.high_weight)?;
        let sum: u64 = row.factors.iter().map(|f| f.multiplicity * f.dim).sum();
        if total != BigInt::from(sum) {
            problems.push(format!(
                "{} {}: factor dimensions sum to {sum}, Weyl dimension is {total}",
                row.group, row.high_weight
            ));
        }
        for f in &row.factors {
            if f.high_weight.is_zero() && f.dim != 1 {
                problems.push(format!("{} {}: trivial factor of dimension {}", row.group, row.high_weight, f.dim));
            }
        }
    }
    Ok(problems)
}

/// Composition factors of the Weyl module `W(lambda)` in characteristic `p`.
pub fn weyl_composition_factors(t: LieType, lambda: &Weight, p: u64) -> Result<WeylCompositionEntry> {
    let rows: Vec<&WeylRow> = weyl_rows().iter().filter(|r| r.group == t && &r.high_weight == lambda).collect();
    if rows.is_empty() {
        return Err(Error::NoWeylData { group: t.to_string(), weight: lambda.0.clone() });
    }
    if let Some(row) = rows.iter().find(|r| r.p == Some(p)) {
        return Ok(WeylCompositionEntry { group: t, high_weight: lambda.clone(), p, factors: row.factors.clone() });
    }
    let rs = crate::rootsystem::build_root_system(t);
    let dim = weyl_dim(&rs, lambda)?.to_u64().expect("dimension fits");
    Ok(WeylCompositionEntry {
        group: t,
        high_weight: lambda.clone(),
        p,
        factors: vec![CompositionFactor { high_weight: lambda.clone(), multiplicity: 1, dim }],
    })
}
