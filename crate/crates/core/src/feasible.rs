//! Fusion patterns, feasible characters and the two filters.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::brauer::BrauerTable;
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::repchar::{module_high_weight, module_weights, weyl_composition_factors, ModuleKind, WeightSystem};
use crate::rootsystem::{build_root_system, LieType, RootSystem};
use crate::torsion::{enumerate_classes, identity_class, power_class, trace_counts, TorsionClass};

/// Three-valued outcome of a filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flag {
    No,
    Yes,
    Unknown,
}

impl Flag {
    fn from_bool(b: bool) -> Flag {
        if b {
            Flag::Yes
        } else {
            Flag::No
        }
    }

    fn and(self, other: Flag) -> Flag {
        match (self, other) {
            (Flag::No, _) | (_, Flag::No) => Flag::No,
            (Flag::Yes, Flag::Yes) => Flag::Yes,
            _ => Flag::Unknown,
        }
    }

    fn or(self, other: Flag) -> Flag {
        match (self, other) {
            (Flag::Yes, _) | (_, Flag::Yes) => Flag::Yes,
            (Flag::No, Flag::No) => Flag::No,
            _ => Flag::Unknown,
        }
    }

    fn not(self) -> Flag {
        match self {
            Flag::Yes => Flag::No,
            Flag::No => Flag::Yes,
            Flag::Unknown => Flag::Unknown,
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flag::Yes => "1",
            Flag::No => "0",
            Flag::Unknown => "?",
        })
    }
}

impl std::str::FromStr for Flag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" | "yes" | "true" => Ok(Flag::Yes),
            "0" | "no" | "false" => Ok(Flag::No),
            "?" => Ok(Flag::Unknown),
            other => Err(Error::Config(format!("bad flag value `{other}`"))),
        }
    }
}

/// Image of each class of H (in table order) in the simply connected group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FusionPattern {
    pub images: Vec<TorsionClass>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibleCharacter {
    pub fusion: FusionPattern,
    /// Multiplicities of the irreducibles of H (table order) on L(G).
    pub mult_adjoint: Option<Vec<u32>>,
    /// Multiplicities on V_min.
    pub mult_minimal: Option<Vec<u32>>,
    pub possprim: Flag,
    pub nongcr: Flag,
}

impl FeasibleCharacter {
    pub fn key(&self) -> (Option<Vec<u32>>, Option<Vec<u32>>) {
        (self.mult_adjoint.clone(), self.mult_minimal.clone())
    }
}

/// Root data, module weights and a cache of torsion classes for one group.
pub struct GroupContext {
    pub rs: RootSystem,
    pub adjoint: WeightSystem,
    pub minimal: WeightSystem,
    classes: Mutex<HashMap<u32, Arc<Vec<TorsionClass>>>>,
}

impl GroupContext {
    pub fn new(t: LieType) -> Result<Self> {
        if !t.is_exceptional_target() {
            return Err(Error::UnsupportedGroup(t.to_string()));
        }
        let rs = build_root_system(t);
        let adjoint = module_weights(&rs, ModuleKind::Adjoint)?;
        let minimal = module_weights(&rs, ModuleKind::Minimal)?;
        Ok(GroupContext { rs, adjoint, minimal, classes: Mutex::new(HashMap::new()) })
    }

    pub fn lie_type(&self) -> LieType {
        self.rs.lie_type
    }

    pub fn module(&self, kind: ModuleKind) -> &WeightSystem {
        match kind {
            ModuleKind::Adjoint => &self.adjoint,
            ModuleKind::Minimal => &self.minimal,
        }
    }

    pub fn minimal_is_adjoint(&self) -> bool {
        self.adjoint == self.minimal
    }

    pub fn classes_of_order(&self, m: u32) -> Arc<Vec<TorsionClass>> {
        if let Some(c) = self.classes.lock().unwrap().get(&m) {
            return c.clone();
        }
        let list = Arc::new(enumerate_classes(&self.rs, m).expect("exceptional group"));
        self.classes.lock().unwrap().insert(m, list.clone());
        list
    }
}

/// Power-closed families of classes of H, generated by representatives.
#[derive(Clone, Debug)]
pub struct Families {
    pub generators: Vec<usize>,
    /// For each generator `g`, the class of `g^k` for `k = 1..=order(g)`.
    pub powers: Vec<Vec<usize>>,
}

pub fn class_families(t: &BrauerTable) -> Result<Families> {
    let nc = t.classes.len();
    let mut power_sets: Vec<Vec<usize>> = Vec::with_capacity(nc);
    for c in 0..nc {
        let ord = t.classes[c].order as i64;
        let mut seq = Vec::with_capacity(ord as usize);
        for k in 1..=ord {
            let d = t
                .power_index(c, k)
                .ok_or_else(|| Error::Config(format!("cannot form power {k} of class {}", t.classes[c].label)))?;
            seq.push(d);
        }
        power_sets.push(seq);
    }
    let contains = |a: usize, b: usize| power_sets[a].contains(&b);
    let mut generators = Vec::new();
    for d in 0..nc {
        let dominated = (0..nc).any(|c| c != d && contains(c, d) && (!contains(d, c) || c < d));
        if !dominated {
            generators.push(d);
        }
    }
    let powers = generators.iter().map(|&g| power_sets[g].clone()).collect();
    Ok(Families { generators, powers })
}

/// Interned torsion classes with their power sequences and traces.
struct ClassPool {
    classes: Vec<TorsionClass>,
    index: HashMap<TorsionClass, usize>,
}

impl ClassPool {
    fn new() -> Self {
        ClassPool { classes: Vec::new(), index: HashMap::new() }
    }

    fn intern(&mut self, c: TorsionClass) -> usize {
        if let Some(&i) = self.index.get(&c) {
            return i;
        }
        let i = self.classes.len();
        self.index.insert(c.clone(), i);
        self.classes.push(c);
        i
    }
}

/// Candidate images of each family generator, consistent within the family.
struct FamilyCandidates {
    families: Families,
    /// `cands[g][n]` is the power sequence (pool ids for `k = 1..=order`) of the n-th candidate.
    cands: Vec<Vec<Vec<usize>>>,
    pool: ClassPool,
}

fn family_candidates(t: &BrauerTable, ctx: &GroupContext) -> Result<FamilyCandidates> {
    let families = class_families(t)?;
    let mut pool = ClassPool::new();
    let mut cands = Vec::new();
    for (gi, &g) in families.generators.iter().enumerate() {
        let ord = t.classes[g].order;
        let seq = &families.powers[gi];
        let list: Vec<TorsionClass> =
            if ord == 1 { vec![identity_class(&ctx.rs)] } else { ctx.classes_of_order(ord).to_vec() };
        let powered: Vec<Option<Vec<TorsionClass>>> = list
            .par_iter()
            .map(|tau| {
                let mut images: HashMap<usize, TorsionClass> = HashMap::new();
                let mut out = Vec::with_capacity(ord as usize);
                for k in 1..=ord as i64 {
                    let img = power_class(&ctx.rs, tau, k);
                    let h = seq[(k - 1) as usize];
                    match images.get(&h) {
                        Some(prev) if prev != &img => return None,
                        _ => {
                            images.insert(h, img.clone());
                        }
                    }
                    out.push(img);
                }
                Some(out)
            })
            .collect();
        let mut here = Vec::new();
        for seq in powered.into_iter().flatten() {
            here.push(seq.into_iter().map(|c| pool.intern(c)).collect());
        }
        cands.push(here);
    }
    Ok(FamilyCandidates { families, cands, pool })
}

/// Coordinates of `sum_j mult_j chi_j(c)` on the power basis of Z[zeta_{ord c}].
fn character_coords(t: &BrauerTable, mult: &[u32], c: usize) -> Vec<i64> {
    let ord = t.classes[c].order as u64;
    let mut acc = CyclotomicNumber::zero();
    for (j, &a) in mult.iter().enumerate() {
        if a != 0 {
            acc = &acc + &(&CyclotomicNumber::integer(a as i64) * &t.irreducibles[j].values[c]);
        }
    }
    acc.coords_at_i64(ord).expect("value lies in the class field")
}

fn value_coords(t: &BrauerTable) -> Vec<Vec<Vec<i64>>> {
    // [irreducible][class] -> coordinates
    t.irreducibles
        .iter()
        .map(|chi| {
            chi.values
                .iter()
                .enumerate()
                .map(|(c, v)| v.coords_at_i64(t.classes[c].order as u64).expect("value in class field"))
                .collect()
        })
        .collect()
}

fn trace_coords(c: &TorsionClass, ws: &WeightSystem) -> Vec<i64> {
    CyclotomicNumber::from_exponent_counts(c.order as u64, &trace_counts(c, ws))
        .coords_at_i64(c.order as u64)
        .expect("trace fits")
}

/// Nonnegative integer solutions of one module's equations.
struct System {
    /// Irreducible indices in solving order (decreasing degree).
    unknowns: Vec<usize>,
    degrees: Vec<i64>,
    /// `cols[class][u]`: coordinates of the u-th unknown's value on the class.
    cols: Vec<Vec<Vec<i64>>>,
    targets: Vec<Vec<Vec<i64>>>,
    target_sets: Vec<HashSet<Vec<i64>>>,
    /// `bounds[u][class][i] = (min, max)` of value/degree over unknowns `u..`, as (num, den) pairs.
    bounds: Vec<Vec<Vec<((i64, i64), (i64, i64))>>>,
    dim: i64,
    n_irr: usize,
}

fn frac_lt(a: (i64, i64), b: (i64, i64)) -> bool {
    (a.0 as i128) * (b.1 as i128) < (b.0 as i128) * (a.1 as i128)
}

impl System {
    fn new(t: &BrauerTable, values: &[Vec<Vec<i64>>], dim: u64, targets: Vec<Vec<Vec<i64>>>) -> System {
        let mut unknowns: Vec<usize> = (0..t.irreducibles.len()).filter(|&j| t.irreducibles[j].degree <= dim).collect();
        unknowns.sort_by(|&a, &b| t.irreducibles[b].degree.cmp(&t.irreducibles[a].degree).then(a.cmp(&b)));
        let degrees: Vec<i64> = unknowns.iter().map(|&j| t.irreducibles[j].degree as i64).collect();
        let nc = t.classes.len();
        let cols: Vec<Vec<Vec<i64>>> =
            (0..nc).map(|c| unknowns.iter().map(|&j| values[j][c].clone()).collect()).collect();
        let mut bounds = vec![Vec::<Vec<((i64, i64), (i64, i64))>>::new(); unknowns.len() + 1];
        for u in (0..unknowns.len()).rev() {
            let mut per_class = Vec::with_capacity(nc);
            for c in 0..nc {
                let width = cols[c][u].len();
                let mut b = Vec::with_capacity(width);
                for i in 0..width {
                    let here = (cols[c][u][i], degrees[u]);
                    let (mut lo, mut hi) = (here, here);
                    if u + 1 < unknowns.len() {
                        let (l2, h2) = bounds[u + 1][c][i];
                        if frac_lt(l2, lo) {
                            lo = l2;
                        }
                        if frac_lt(hi, h2) {
                            hi = h2;
                        }
                    }
                    b.push((lo, hi));
                }
                per_class.push(b);
            }
            bounds[u] = per_class;
        }
        let target_sets = targets.iter().map(|ts| ts.iter().cloned().collect()).collect();
        System { unknowns, degrees, cols, targets, target_sets, bounds, dim: dim as i64, n_irr: t.irreducibles.len() }
    }

    fn reachable(&self, u: usize, rem: i64, sums: &[Vec<i64>]) -> bool {
        for (c, ts) in self.targets.iter().enumerate() {
            let b = &self.bounds[u][c];
            let s = &sums[c];
            let ok = ts.iter().any(|t| {
                t.iter().zip(s).zip(b).all(|((&tv, &sv), &((ln, ld), (hn, hd)))| {
                    let diff = (tv - sv) as i128;
                    diff * ld as i128 >= rem as i128 * ln as i128 && diff * hd as i128 <= rem as i128 * hn as i128
                })
            });
            if !ok {
                return false;
            }
        }
        true
    }

    fn solve(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        if self.unknowns.is_empty() {
            return out;
        }
        let sums: Vec<Vec<i64>> = self.cols.iter().map(|c| vec![0; c[0].len()]).collect();
        let mut assign = vec![0u32; self.unknowns.len()];
        self.search(0, self.dim, sums, &mut assign, &mut out);
        out.sort();
        out
    }

    fn search(&self, u: usize, rem: i64, sums: Vec<Vec<i64>>, assign: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let last = u + 1 == self.unknowns.len();
        let deg = self.degrees[u];
        if last {
            if rem % deg != 0 {
                return;
            }
            let a = rem / deg;
            let ok = self.cols.iter().enumerate().all(|(c, col)| {
                let v: Vec<i64> = sums[c].iter().zip(&col[u]).map(|(s, x)| s + a * x).collect();
                self.target_sets[c].contains(&v)
            });
            if ok {
                assign[u] = a as u32;
                let mut full = vec![0u32; self.n_irr];
                for (k, &j) in self.unknowns.iter().enumerate() {
                    full[j] = assign[k];
                }
                out.push(full);
            }
            return;
        }
        if !self.reachable(u, rem, &sums) {
            return;
        }
        for a in (0..=rem / deg).rev() {
            let next: Vec<Vec<i64>> = sums
                .iter()
                .zip(&self.cols)
                .map(|(s, col)| s.iter().zip(&col[u]).map(|(x, y)| x + a * y).collect())
                .collect();
            assign[u] = a as u32;
            self.search(u + 1, rem - a * deg, next, assign, out);
        }
    }
}

/// Solve `sum_j a_j chi_j(c) = target(c)` for every class, where each class
/// has a set of admissible targets, together with the dimension equation.
pub fn solve_with_targets(t: &BrauerTable, dim: u64, targets: Vec<Vec<Vec<i64>>>) -> Vec<Vec<u32>> {
    let values = value_coords(t);
    System::new(t, &values, dim, targets).solve()
}

/// All multiplicity vectors of H on `ws` realising the traces of `fusion`.
pub fn solve_module(t: &BrauerTable, fusion: &FusionPattern, ws: &WeightSystem) -> Vec<Vec<u32>> {
    let targets = fusion.images.iter().map(|c| vec![trace_coords(c, ws)]).collect();
    solve_with_targets(t, ws.dim(), targets)
}

/// Every order- and power-compatible map from the classes of H to classes of G.
pub fn enumerate_fusion_patterns(t: &BrauerTable, ctx: &GroupContext) -> Result<Vec<FusionPattern>> {
    check_orders(t)?;
    let fc = family_candidates(t, ctx)?;
    let all: Vec<Vec<usize>> = fc.cands.iter().map(|c| (0..c.len()).collect()).collect();
    let mut out = Vec::new();
    let mut assigned = vec![usize::MAX; t.classes.len()];
    enumerate_assignments(&fc, &all, 0, &mut assigned, &mut |a| {
        out.push(FusionPattern { images: a.iter().map(|&i| fc.pool.classes[i].clone()).collect() });
        true
    });
    out.sort();
    Ok(out)
}

/// Depth-first search over generator images; `visit` returns false to stop.
fn enumerate_assignments(
    fc: &FamilyCandidates,
    allowed: &[Vec<usize>],
    g: usize,
    assigned: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if g == fc.families.generators.len() {
        return visit(assigned);
    }
    let seq = &fc.families.powers[g];
    for &n in &allowed[g] {
        let imgs = &fc.cands[g][n];
        let consistent = seq.iter().zip(imgs).all(|(&h, &i)| assigned[h] == usize::MAX || assigned[h] == i);
        if !consistent {
            continue;
        }
        let saved = assigned.clone();
        for (&h, &i) in seq.iter().zip(imgs) {
            assigned[h] = i;
        }
        let go_on = enumerate_assignments(fc, allowed, g + 1, assigned, visit);
        *assigned = saved;
        if !go_on {
            return false;
        }
    }
    true
}

fn check_orders(t: &BrauerTable) -> Result<()> {
    for c in &t.classes {
        if t.p > 1 && (c.order as u64).is_multiple_of(t.p) {
            return Err(Error::Config(format!("class {} has order divisible by p = {}", c.label, t.p)));
        }
    }
    Ok(())
}

/// Which modules to solve on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModuleSelection {
    pub adjoint: bool,
    pub minimal: bool,
}

impl Default for ModuleSelection {
    fn default() -> Self {
        ModuleSelection { adjoint: true, minimal: true }
    }
}

struct ModuleSolutions {
    solutions: Vec<Vec<u32>>,
    /// `allowed[s][g]`: candidate indices of generator g matching solution s.
    allowed: Vec<Vec<Vec<usize>>>,
}

fn solve_on(t: &BrauerTable, fc: &FamilyCandidates, ws: &WeightSystem) -> ModuleSolutions {
    let nc = t.classes.len();
    let pool_traces: Vec<Vec<i64>> = fc.pool.classes.par_iter().map(|c| trace_coords(c, ws)).collect();
    let mut targets: Vec<HashSet<Vec<i64>>> = vec![HashSet::new(); nc];
    for (g, seq) in fc.families.powers.iter().enumerate() {
        for cand in &fc.cands[g] {
            for (&h, &i) in seq.iter().zip(cand) {
                targets[h].insert(pool_traces[i].clone());
            }
        }
    }
    let targets: Vec<Vec<Vec<i64>>> = targets
        .into_iter()
        .map(|s| {
            let mut v: Vec<Vec<i64>> = s.into_iter().collect();
            v.sort();
            v
        })
        .collect();
    let solutions = solve_with_targets(t, ws.dim(), targets);
    let allowed = solutions
        .par_iter()
        .map(|sol| {
            let chars: Vec<Vec<i64>> = (0..nc).map(|c| character_coords(t, sol, c)).collect();
            fc.families
                .powers
                .iter()
                .enumerate()
                .map(|(g, seq)| {
                    (0..fc.cands[g].len())
                        .filter(|&n| seq.iter().zip(&fc.cands[g][n]).all(|(&h, &i)| pool_traces[i] == chars[h]))
                        .collect()
                })
                .collect()
        })
        .collect();
    ModuleSolutions { solutions, allowed }
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let bs: HashSet<usize> = b.iter().copied().collect();
    a.iter().copied().filter(|x| bs.contains(x)).collect()
}

fn first_pattern(fc: &FamilyCandidates, allowed: &[Vec<usize>], nc: usize) -> Option<FusionPattern> {
    if allowed.iter().any(|a| a.is_empty()) {
        return None;
    }
    let mut found = None;
    let mut assigned = vec![usize::MAX; nc];
    enumerate_assignments(fc, allowed, 0, &mut assigned, &mut |a| {
        found = Some(FusionPattern { images: a.iter().map(|&i| fc.pool.classes[i].clone()).collect() });
        false
    });
    found
}

/// Pairs of solutions on L(G) and V_min that share a fusion pattern.
/// Flags are left as `Unknown`; see [`mark_possprim`] and [`mark_nongcr`].
pub fn compatible_pairs(t: &BrauerTable, ctx: &GroupContext, sel: ModuleSelection) -> Result<Vec<FeasibleCharacter>> {
    check_orders(t)?;
    let fc = family_candidates(t, ctx)?;
    let nc = t.classes.len();
    if fc.cands.iter().any(|c| c.is_empty()) {
        return Ok(Vec::new());
    }
    let diagonal = ctx.minimal_is_adjoint();
    let l = if sel.adjoint || (diagonal && sel.minimal) { Some(solve_on(t, &fc, &ctx.adjoint)) } else { None };
    let v = if sel.minimal && !diagonal { Some(solve_on(t, &fc, &ctx.minimal)) } else { None };

    let mut jobs: Vec<(Option<usize>, Option<usize>)> = Vec::new();
    match (&l, &v) {
        (Some(l), Some(v)) => {
            for i in 0..l.solutions.len() {
                for j in 0..v.solutions.len() {
                    jobs.push((Some(i), Some(j)));
                }
            }
        }
        (Some(l), None) => jobs.extend((0..l.solutions.len()).map(|i| (Some(i), None))),
        (None, Some(v)) => jobs.extend((0..v.solutions.len()).map(|j| (None, Some(j)))),
        (None, None) => {}
    }
    let mut out: Vec<FeasibleCharacter> = jobs
        .par_iter()
        .filter_map(|&(i, j)| {
            let allowed: Vec<Vec<usize>> = match (i, j) {
                (Some(i), Some(j)) => {
                    let (la, va) = (&l.as_ref().unwrap().allowed[i], &v.as_ref().unwrap().allowed[j]);
                    la.iter().zip(va).map(|(a, b)| intersect(a, b)).collect()
                }
                (Some(i), None) => l.as_ref().unwrap().allowed[i].clone(),
                (None, Some(j)) => v.as_ref().unwrap().allowed[j].clone(),
                (None, None) => unreachable!(),
            };
            let fusion = first_pattern(&fc, &allowed, nc)?;
            let la = i.map(|i| l.as_ref().unwrap().solutions[i].clone());
            let va = j.map(|j| v.as_ref().unwrap().solutions[j].clone());
            let (mult_adjoint, mult_minimal) = if diagonal {
                (if sel.adjoint { la.clone() } else { None }, if sel.minimal { la } else { None })
            } else {
                (la, va)
            };
            Some(FeasibleCharacter {
                fusion,
                mult_adjoint,
                mult_minimal,
                possprim: Flag::Unknown,
                nongcr: Flag::Unknown,
            })
        })
        .collect();
    out.sort_by(|a, b| a.key().cmp(&b.key()).then_with(|| a.fusion.cmp(&b.fusion)));
    Ok(out)
}

/// A symmetry acting on feasible characters: an outer automorphism of H,
/// optionally composed with taking duals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Symmetry {
    classes: Vec<usize>,
    irrs: Vec<usize>,
    dual: bool,
}

fn symmetry_group(t: &BrauerTable, with_duality: bool) -> Vec<Symmetry> {
    let nc = t.classes.len();
    let ni = t.irreducibles.len();
    let id = Symmetry { classes: (0..nc).collect(), irrs: (0..ni).collect(), dual: false };
    let mut gens: Vec<Symmetry> = t
        .outer_permutations()
        .expect("validated outer actions")
        .into_iter()
        .map(|(classes, irrs)| Symmetry { classes, irrs, dual: false })
        .collect();
    if with_duality {
        gens.push(Symmetry { classes: (0..nc).collect(), irrs: (0..ni).collect(), dual: true });
    }
    let compose = |a: &Symmetry, b: &Symmetry| Symmetry {
        classes: b.classes.iter().map(|&x| a.classes[x]).collect(),
        irrs: b.irrs.iter().map(|&x| a.irrs[x]).collect(),
        dual: a.dual ^ b.dual,
    };
    let mut group = vec![id.clone()];
    let mut seen: HashSet<Symmetry> = [id].into_iter().collect();
    let mut i = 0;
    while i < group.len() {
        for g in &gens {
            let h = compose(g, &group[i]);
            if seen.insert(h.clone()) {
                group.push(h);
            }
        }
        i += 1;
    }
    group
}

fn apply_mult(t: &BrauerTable, s: &Symmetry, mult: &[u32]) -> Vec<u32> {
    let mut out = vec![0; mult.len()];
    for (j, &a) in mult.iter().enumerate() {
        let src = if s.dual { t.dual_index(j) } else { j };
        out[s.irrs[src]] += a;
    }
    out
}

fn apply_symmetry(t: &BrauerTable, rs: &RootSystem, s: &Symmetry, fc: &FeasibleCharacter) -> FeasibleCharacter {
    let mut images = fc.fusion.images.clone();
    for (c, img) in fc.fusion.images.iter().enumerate() {
        images[s.classes[c]] = if s.dual { power_class(rs, img, -1) } else { img.clone() };
    }
    FeasibleCharacter {
        fusion: FusionPattern { images },
        mult_adjoint: fc.mult_adjoint.as_ref().map(|m| apply_mult(t, s, m)),
        mult_minimal: fc.mult_minimal.as_ref().map(|m| apply_mult(t, s, m)),
        possprim: fc.possprim,
        nongcr: fc.nongcr,
    }
}

/// Canonical key of a multiplicity pair under the outer automorphisms of H
/// and, when `with_duality`, the passage to dual modules.
pub fn canonical_key(
    t: &BrauerTable,
    with_duality: bool,
    key: &(Option<Vec<u32>>, Option<Vec<u32>>),
) -> (Option<Vec<u32>>, Option<Vec<u32>>) {
    symmetry_group(t, with_duality)
        .iter()
        .map(|s| (key.0.as_ref().map(|m| apply_mult(t, s, m)), key.1.as_ref().map(|m| apply_mult(t, s, m))))
        .min()
        .expect("group contains the identity")
}

fn dedup_with(
    results: &[FeasibleCharacter],
    t: &BrauerTable,
    rs: &RootSystem,
    with_duality: bool,
) -> Vec<FeasibleCharacter> {
    let group = symmetry_group(t, with_duality);
    let mut best: BTreeMap<(Option<Vec<u32>>, Option<Vec<u32>>), FeasibleCharacter> = BTreeMap::new();
    for fc in results {
        let images: Vec<FeasibleCharacter> = group.iter().map(|s| apply_symmetry(t, rs, s, fc)).collect();
        let key = images.iter().map(|x| x.key()).min().unwrap();
        let rep = images.into_iter().filter(|x| x.key() == key).min_by(|a, b| a.fusion.cmp(&b.fusion)).unwrap();
        match best.get(&key) {
            Some(prev) if prev.fusion <= rep.fusion => {}
            _ => {
                best.insert(key, rep);
            }
        }
    }
    best.into_values().collect()
}

/// One representative per orbit of the outer automorphism group of H, the
/// lexicographically least multiplicity pair.
pub fn dedup_by_outer(results: &[FeasibleCharacter], t: &BrauerTable, rs: &RootSystem) -> Vec<FeasibleCharacter> {
    dedup_with(results, t, rs, false)
}

/// As [`dedup_by_outer`], also identifying each character with its dual
/// (the image under the graph automorphism of E6).
pub fn dedup_by_outer_and_duality(
    results: &[FeasibleCharacter],
    t: &BrauerTable,
    rs: &RootSystem,
) -> Vec<FeasibleCharacter> {
    dedup_with(results, t, rs, true)
}

/// Number of trivial G-composition factors of L(G) and V_min in characteristic p.
pub fn trivial_g_factors(g: LieType, p: u64) -> Result<(u64, u64)> {
    let l = weyl_composition_factors(g, &module_high_weight(g, ModuleKind::Adjoint)?, p)?;
    let v = weyl_composition_factors(g, &module_high_weight(g, ModuleKind::Minimal)?, p)?;
    Ok((l.trivial_factors(), v.trivial_factors()))
}

/// Remark attached to output for the case where L(G) has two non-trivial
/// composition factors of the same dimension.
pub fn special_case_note(g: LieType, p: u64) -> Option<&'static str> {
    (g == LieType::F4 && p == 2).then_some(
        "F4 p=2: L(G) = V(l1)/V(l4) has two 26-dimensional non-trivial factors; possprim treats both as non-trivial",
    )
}

/// Does criterion (i) or (iii) apply? `m` trivial factors after adjustment.
fn fixed_point_criteria(t: &BrauerTable, mult: &[u32], adjust: u64, dualise: bool) -> Flag {
    let triv = t.trivial_index();
    let m = triv.map_or(0, |i| (mult[i] as u64).saturating_sub(adjust));
    let h1 = |j: usize| {
        let k = if dualise { t.dual_index(j) } else { j };
        t.irreducibles[k].h1
    };
    let mut n = 0u64;
    let mut unknown = false;
    let mut symmetric = true;
    for (j, &a) in mult.iter().enumerate() {
        if a == 0 || Some(j) == triv {
            continue;
        }
        match (h1(j), t.irreducibles[t.dual_index(j)].h1, t.irreducibles[j].h1) {
            (Some(h), Some(hd), Some(hs)) => {
                n += a as u64 * h as u64;
                if (hs == 0) != (hd == 0) {
                    symmetric = false;
                }
            }
            _ => unknown = true,
        }
    }
    if unknown {
        return if m == 0 { Flag::No } else { Flag::Unknown };
    }
    Flag::from_bool(m > n || (m == n && m > 0 && symmetric))
}

/// True when neither fixed-point criterion excludes Lie primitivity on L(G),
/// on V_min, or (for E6) on the dual of V_min.
pub fn mark_possprim(fc: &FeasibleCharacter, t: &BrauerTable, g: LieType, p: u64) -> Result<Flag> {
    let (adj_l, adj_v) = trivial_g_factors(g, p)?;
    let mut excluded = Flag::No;
    match &fc.mult_adjoint {
        Some(m) => excluded = excluded.or(fixed_point_criteria(t, m, adj_l, false)),
        None => excluded = excluded.or(Flag::Unknown),
    }
    if g == LieType::E(8) {
        // V_min is L(G)
    } else {
        match &fc.mult_minimal {
            Some(m) => {
                excluded = excluded.or(fixed_point_criteria(t, m, adj_v, false));
                if g == LieType::E(6) {
                    excluded = excluded.or(fixed_point_criteria(t, m, adj_v, true));
                }
            }
            None => excluded = excluded.or(Flag::Unknown),
        }
    }
    Ok(excluded.not())
}

/// Largest dimension of a composition factor allowed by the non-G-cr test.
pub fn nongcr_dimension_bound(g: LieType) -> u64 {
    match g {
        LieType::F4 => 14,
        LieType::E(6) => 20,
        LieType::E(7) => 35,
        _ => 64,
    }
}

/// Necessary conditions for a subgroup with this character to be non-G-cr.
pub fn mark_nongcr(
    fc: &FeasibleCharacter,
    t: &BrauerTable,
    g: LieType,
    p: u64,
    levi_embeddable: Option<bool>,
) -> Result<Flag> {
    let Some(mult) = &fc.mult_adjoint else {
        return Ok(Flag::Unknown);
    };
    let (adj_l, _) = trivial_g_factors(g, p)?;
    let triv = t.trivial_index();
    let m = triv.map_or(0, |i| (mult[i] as u64).saturating_sub(adj_l));
    if m == 0 {
        return Ok(Flag::No);
    }
    let bound = nongcr_dimension_bound(g);
    let mut cond = Flag::No;
    for (j, &a) in mult.iter().enumerate() {
        if a == 0 || Some(j) == triv {
            continue;
        }
        let w = &t.irreducibles[j];
        let shape = a >= 2 || w.dual != w.label;
        if !shape || w.degree > bound {
            continue;
        }
        cond = cond.or(match w.h1 {
            Some(0) => Flag::No,
            Some(_) => Flag::Yes,
            None => Flag::Unknown,
        });
    }
    let levi = levi_embeddable.map_or(Flag::Unknown, Flag::from_bool);
    Ok(levi.and(cond))
}

/// Options for the full pipeline.
#[derive(Clone, Debug)]
#[derive(Default)]
pub struct SolveOptions {
    pub modules: ModuleSelection,
    pub levi_embeddable: Option<bool>,
}


/// Compatible pairs, deduplicated and marked, in canonical order.
pub fn feasible_characters(t: &BrauerTable, ctx: &GroupContext, opts: &SolveOptions) -> Result<Vec<FeasibleCharacter>> {
    let g = ctx.lie_type();
    let pairs = compatible_pairs(t, ctx, opts.modules)?;
    let mut reps = if g == LieType::E(6) {
        dedup_by_outer_and_duality(&pairs, t, &ctx.rs)
    } else {
        dedup_by_outer(&pairs, t, &ctx.rs)
    };
    for fc in reps.iter_mut() {
        fc.possprim = mark_possprim(fc, t, g, t.p)?;
        fc.nongcr = mark_nongcr(fc, t, g, t.p, opts.levi_embeddable)?;
    }
    reps.sort_by_key(|a| a.key());
    Ok(reps)
}

/// Recompute both sides of every class equation from scratch.
pub fn check_feasible(fc: &FeasibleCharacter, t: &BrauerTable, ctx: &GroupContext) -> std::result::Result<(), String> {
    let rs = &ctx.rs;
    for (c, img) in fc.fusion.images.iter().enumerate() {
        if img.order != t.classes[c].order {
            return Err(format!("class {} maps to an element of order {}", t.classes[c].label, img.order));
        }
        for k in 1..=img.order as i64 {
            let hk = t.power_index(c, k).ok_or("missing power map")?;
            if fc.fusion.images[hk] != power_class(rs, img, k) {
                return Err(format!("power map violated at {}^{k}", t.classes[c].label));
            }
        }
    }
    for (mult, ws) in [(&fc.mult_adjoint, &ctx.adjoint), (&fc.mult_minimal, &ctx.minimal)] {
        let Some(mult) = mult else { continue };
        let dim: u64 = mult.iter().zip(&t.irreducibles).map(|(&a, chi)| a as u64 * chi.degree).sum();
        if dim != ws.dim() {
            return Err(format!("dimension {dim} != {}", ws.dim()));
        }
        for (c, img) in fc.fusion.images.iter().enumerate() {
            let lhs: CyclotomicNumber = mult
                .iter()
                .zip(&t.irreducibles)
                .map(|(&a, chi)| &CyclotomicNumber::integer(a as i64) * &chi.values[c])
                .sum();
            let rhs = crate::torsion::trace(img, ws);
            if lhs != rhs {
                return Err(format!("class {}: character {lhs} but trace {rhs}", t.classes[c].label));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::Flag::{self, No, Unknown, Yes};

    #[test]
    fn three_valued_logic() {
        let all = [No, Yes, Unknown];
        for a in all {
            assert_eq!(a.not().not(), a);
            assert_eq!(a.and(No), No);
            assert_eq!(a.or(Yes), Yes);
            for b in all {
                assert_eq!(a.and(b), b.and(a));
                assert_eq!(a.and(b).not(), a.not().or(b.not()));
            }
        }
        assert_eq!(Yes.and(Unknown), Unknown);
        assert_eq!(No.or(Unknown), Unknown);
        assert_eq!(Flag::from_bool(true), Yes);
    }
}
