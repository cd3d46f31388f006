//! Brauer character tables: data model, text format and validation.
//!
//! ```text
//! group Alt5 p 0 exponent 30
//! class 1A order 1
//! class 5A order 5 pow 2:5B 3:5B 5:1A
//! irr 3a deg 3 ind 1 dual 3a h1 0 vals 3;-1;0;-z5^2 - z5^3;z5 + ...
//! out classes (5A 5B) irrs (3a 3b)
//! ```
//!
//! Every class lists its `q`-th power class for each prime `q` below or
//! dividing its order, which is enough to reach the `k`-th power for any `k`.
//! Full-line comments are kept and written back in place.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_integer::Integer;

use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub label: String,
    pub order: u32,
    pub power_map: BTreeMap<u32, String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irreducible {
    pub label: String,
    pub degree: u64,
    pub indicator: i8,
    pub dual: String,
    pub h1: Option<u32>,
    pub values: Vec<CyclotomicNumber>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OuterAction {
    pub classes: Vec<Vec<String>>,
    pub irrs: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerTable {
    pub name: String,
    pub p: u64,
    pub exponent: u64,
    pub classes: Vec<ClassInfo>,
    pub irreducibles: Vec<Irreducible>,
    pub outer_actions: Vec<OuterAction>,
    /// Comment lines, keyed by the index of the record they precede
    /// (header = 0, then classes, irreducibles, outer actions).
    pub comments: Vec<(usize, String)>,
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            out.push(d);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn parse_cycles(text: &str, line: usize) -> Result<Vec<Vec<String>>> {
    let err = |msg: &str| Error::Parse { line, msg: msg.to_string() };
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(err("cycle must start with `(`"));
        }
        let close = rest.find(')').ok_or_else(|| err("unclosed cycle"))?;
        let inner: Vec<String> = rest[1..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(str::to_string)
            .collect();
        if inner.len() > 1 {
            cycles.push(inner);
        } else if inner.len() == 1 {
            return Err(err("cycle of length one"));
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

fn render_cycles(cycles: &[Vec<String>]) -> String {
    if cycles.is_empty() {
        return "()".to_string();
    }
    cycles.iter().map(|c| format!("({})", c.join(" "))).collect()
}

/// Parse without validating invariants.
pub fn parse_table_unchecked(text: &str) -> Result<BrauerTable> {
    let mut header: Option<(String, u64, u64)> = None;
    let mut classes = Vec::new();
    let mut irreducibles = Vec::new();
    let mut outer_actions = Vec::new();
    let mut comments = Vec::new();
    let mut records = 0usize;
    let mut stage = 0u8;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |msg: String| Error::Parse { line, msg };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            comments.push((records, raw.to_string()));
            continue;
        }
        let content = raw.split('#').next().unwrap().trim();
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        let order_of = |s: u8| -> Result<()> {
            if s < stage {
                return Err(Error::Parse {
                    line,
                    msg: format!("`{keyword}` record out of order (header, class, irr, out)"),
                });
            }
            Ok(())
        };
        match keyword {
            "group" => {
                if header.is_some() {
                    return Err(err("second `group` line".into()));
                }
                if records != 0 {
                    return Err(err("`group` must be the first record".into()));
                }
                let tok: Vec<&str> = rest.split_whitespace().collect();
                if tok.len() != 5 || tok[1] != "p" || tok[3] != "exponent" {
                    return Err(err("expected `group <name> p <int> exponent <int>`".into()));
                }
                let p = tok[2].parse().map_err(|_| err(format!("bad characteristic `{}`", tok[2])))?;
                let e = tok[4].parse().map_err(|_| err(format!("bad exponent `{}`", tok[4])))?;
                header = Some((tok[0].to_string(), p, e));
                stage = 1;
            }
            "class" => {
                if header.is_none() {
                    return Err(err("`class` before `group`".into()));
                }
                order_of(1)?;
                stage = 1;
                let tok: Vec<&str> = rest.split_whitespace().collect();
                if tok.len() < 3 || tok[1] != "order" {
                    return Err(err("expected `class <label> order <int> pow ...`".into()));
                }
                let order: u32 = tok[2].parse().map_err(|_| err(format!("bad order `{}`", tok[2])))?;
                let mut power_map = BTreeMap::new();
                if tok.len() > 3 {
                    if tok[3] != "pow" {
                        return Err(err("expected `pow`".into()));
                    }
                    for entry in &tok[4..] {
                        let (q, target) =
                            entry.split_once(':').ok_or_else(|| err(format!("bad power entry `{entry}`")))?;
                        let q: u32 = q.parse().map_err(|_| err(format!("bad prime `{q}`")))?;
                        if power_map.insert(q, target.to_string()).is_some() {
                            return Err(err(format!("prime {q} listed twice")));
                        }
                    }
                }
                classes.push(ClassInfo { label: tok[0].to_string(), order, power_map });
            }
            "irr" => {
                if header.is_none() {
                    return Err(err("`irr` before `group`".into()));
                }
                order_of(2)?;
                stage = 2;
                let (head, vals) = rest.split_once(" vals ").ok_or_else(|| err("expected `vals` field".into()))?;
                let tok: Vec<&str> = head.split_whitespace().collect();
                if tok.len() != 9 || tok[1] != "deg" || tok[3] != "ind" || tok[5] != "dual" || tok[7] != "h1" {
                    return Err(err("expected `irr <label> deg <n> ind <i> dual <label> h1 <n|?> vals ...`".into()));
                }
                let degree = tok[2].parse().map_err(|_| err(format!("bad degree `{}`", tok[2])))?;
                let indicator: i8 = match tok[4] {
                    "1" | "+1" => 1,
                    "0" => 0,
                    "-1" => -1,
                    other => return Err(err(format!("bad indicator `{other}`"))),
                };
                let h1 = match tok[8] {
                    "?" => None,
                    s => Some(s.parse().map_err(|_| err(format!("bad h1 `{s}`")))?),
                };
                let values = vals
                    .split(';')
                    .map(|v| v.trim().parse::<CyclotomicNumber>())
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| err(e.to_string()))?;
                irreducibles.push(Irreducible {
                    label: tok[0].to_string(),
                    degree,
                    indicator,
                    dual: tok[6].to_string(),
                    h1,
                    values,
                });
            }
            "out" => {
                if header.is_none() {
                    return Err(err("`out` before `group`".into()));
                }
                order_of(3)?;
                stage = 3;
                let body = rest.strip_prefix("classes").ok_or_else(|| err("expected `out classes`".into()))?;
                let (c, i) = body.split_once("irrs").ok_or_else(|| err("expected `irrs`".into()))?;
                outer_actions.push(OuterAction { classes: parse_cycles(c, line)?, irrs: parse_cycles(i, line)? });
            }
            other => return Err(err(format!("unknown record `{other}`"))),
        }
        records += 1;
    }
    let (name, p, exponent) = header.ok_or_else(|| Error::Parse { line: 1, msg: "missing `group` line".into() })?;
    Ok(BrauerTable { name, p, exponent, classes, irreducibles, outer_actions, comments })
}

/// Parse and validate a table.
pub fn parse_table(text: &str) -> Result<BrauerTable> {
    let t = parse_table_unchecked(text)?;
    let violations = validate(&t);
    if !violations.is_empty() {
        return Err(Error::Invalid { name: t.name.clone(), violations });
    }
    Ok(t)
}

pub fn serialize_table(t: &BrauerTable) -> String {
    let mut out = String::new();
    let mut comments = t.comments.iter().peekable();
    let mut record = 0usize;
    let mut flush = |out: &mut String, record: usize| {
        while let Some((_, c)) = comments.next_if(|(r, _)| *r <= record) {
            out.push_str(c);
            out.push('\n');
        }
    };
    flush(&mut out, record);
    let _ = writeln!(out, "group {} p {} exponent {}", t.name, t.p, t.exponent);
    record += 1;
    for c in &t.classes {
        flush(&mut out, record);
        let _ = write!(out, "class {} order {}", c.label, c.order);
        if !c.power_map.is_empty() {
            out.push_str(" pow");
            for (q, target) in &c.power_map {
                let _ = write!(out, " {q}:{target}");
            }
        }
        out.push('\n');
        record += 1;
    }
    for chi in &t.irreducibles {
        flush(&mut out, record);
        let h1 = chi.h1.map_or("?".to_string(), |h| h.to_string());
        let vals: Vec<String> = chi.values.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(
            out,
            "irr {} deg {} ind {} dual {} h1 {} vals {}",
            chi.label,
            chi.degree,
            chi.indicator,
            chi.dual,
            h1,
            vals.join(";")
        );
        record += 1;
    }
    for a in &t.outer_actions {
        flush(&mut out, record);
        let _ = writeln!(out, "out classes {} irrs {}", render_cycles(&a.classes), render_cycles(&a.irrs));
        record += 1;
    }
    flush(&mut out, usize::MAX);
    out
}

fn cycles_to_perm(
    cycles: &[Vec<String>],
    index: &HashMap<&str, usize>,
    n: usize,
) -> std::result::Result<Vec<usize>, String> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut moved = vec![false; n];
    for cyc in cycles {
        let idx: Vec<usize> = cyc
            .iter()
            .map(|l| index.get(l.as_str()).copied().ok_or_else(|| format!("unknown label `{l}` in outer action")))
            .collect::<std::result::Result<_, _>>()?;
        for (k, &i) in idx.iter().enumerate() {
            if moved[i] {
                return Err(format!("label `{}` moved twice in outer action", cyc[k]));
            }
            moved[i] = true;
            perm[i] = idx[(k + 1) % idx.len()];
        }
    }
    Ok(perm)
}

impl BrauerTable {
    pub fn class_index(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    pub fn irr_index(&self, label: &str) -> Option<usize> {
        self.irreducibles.iter().position(|c| c.label == label)
    }

    pub fn dual_index(&self, j: usize) -> usize {
        self.irr_index(&self.irreducibles[j].dual).expect("validated dual")
    }

    pub fn identity_index(&self) -> Option<usize> {
        self.classes.iter().position(|c| c.order == 1)
    }

    /// The trivial character: degree one, value one everywhere.
    pub fn trivial_index(&self) -> Option<usize> {
        let one = CyclotomicNumber::one();
        self.irreducibles.iter().position(|chi| chi.degree == 1 && chi.values.iter().all(|v| *v == one))
    }

    pub fn max_class_order(&self) -> u32 {
        self.classes.iter().map(|c| c.order).max().unwrap_or(1)
    }

    fn prime_power(&self, c: usize, q: u32) -> Option<usize> {
        let label = self.classes[c].power_map.get(&q)?;
        self.class_index(label)
    }

    /// Index of the class of `x^k` for `x` in class `c`.
    pub fn power_index(&self, c: usize, k: i64) -> Option<usize> {
        let ord = self.classes[c].order as i64;
        let k = k.rem_euclid(ord);
        if k == 0 {
            return self.identity_index();
        }
        let mut cur = c;
        for q in prime_factors(k as u32) {
            if self.classes[cur].order == 1 {
                break;
            }
            cur = self.prime_power(cur, q)?;
        }
        Some(cur)
    }

    /// Outer actions as index permutations `(classes, irreducibles)`.
    pub fn outer_permutations(&self) -> std::result::Result<Vec<(Vec<usize>, Vec<usize>)>, String> {
        let cidx: HashMap<&str, usize> = self.classes.iter().enumerate().map(|(i, c)| (c.label.as_str(), i)).collect();
        let iidx: HashMap<&str, usize> =
            self.irreducibles.iter().enumerate().map(|(i, c)| (c.label.as_str(), i)).collect();
        self.outer_actions
            .iter()
            .map(|a| {
                Ok((
                    cycles_to_perm(&a.classes, &cidx, self.classes.len())?,
                    cycles_to_perm(&a.irrs, &iidx, self.irreducibles.len())?,
                ))
            })
            .collect()
    }
}

/// All invariant violations of a table; empty when the table is sound.
pub fn validate(t: &BrauerTable) -> Vec<String> {
    let mut v = Vec::new();
    let nc = t.classes.len();

    let mut labels = std::collections::HashSet::new();
    for c in &t.classes {
        if !labels.insert(c.label.as_str()) {
            v.push(format!("duplicate class label `{}`", c.label));
        }
    }
    let mut ilabels = std::collections::HashSet::new();
    for chi in &t.irreducibles {
        if !ilabels.insert(chi.label.as_str()) {
            v.push(format!("duplicate irreducible label `{}`", chi.label));
        }
    }
    let identity = t.identity_index();
    if identity.is_none() {
        v.push("identity: no class of order 1".into());
    }
    for c in &t.classes {
        if c.order == 0 {
            v.push(format!("class {}: order 0", c.label));
            continue;
        }
        if t.p > 1 && (c.order as u64).is_multiple_of(t.p) {
            v.push(format!("p-regularity: class {} has order {} divisible by p = {}", c.label, c.order, t.p));
        }
        if !t.exponent.is_multiple_of(c.order as u64) {
            v.push(format!("exponent: class {} order {} does not divide {}", c.label, c.order, t.exponent));
        }
        for (&q, target) in &c.power_map {
            if !is_prime(q) {
                v.push(format!("power map: {} lists non-prime {q}", c.label));
                continue;
            }
            match t.class_index(target) {
                None => v.push(format!("power map: {}^{q} names unknown class `{target}`", c.label)),
                Some(j) => {
                    let want = c.order / c.order.gcd(&q);
                    if t.classes[j].order != want {
                        v.push(format!(
                            "power map: {}^{q} = {} has order {}, expected {want}",
                            c.label, target, t.classes[j].order
                        ));
                    }
                }
            }
        }
        if c.order > 1 {
            for q in (2..=c.order).filter(|&q| is_prime(q) && (q < c.order || c.order % q == 0)) {
                if !c.power_map.contains_key(&q) {
                    v.push(format!("power map: class {} lacks its {q}-th power", c.label));
                }
            }
        }
    }
    if !v.is_empty() {
        return v;
    }

    for chi in &t.irreducibles {
        if chi.values.len() != nc {
            v.push(format!("irreducible {}: {} values for {nc} classes", chi.label, chi.values.len()));
            continue;
        }
        if let Some(e) = identity {
            if chi.values[e] != CyclotomicNumber::integer(chi.degree) {
                v.push(format!("identity-degree: {} has degree {} but value {}", chi.label, chi.degree, chi.values[e]));
            }
        }
        for (c, val) in chi.values.iter().enumerate() {
            let ord = t.classes[c].order as u64;
            if !ord.is_multiple_of(val.conductor()) {
                v.push(format!(
                    "value field: {}({}) = {val} does not lie in Q(zeta_{ord})",
                    chi.label, t.classes[c].label
                ));
            }
        }
        match t.irr_index(&chi.dual) {
            None => v.push(format!("dual: {} names unknown dual `{}`", chi.label, chi.dual)),
            Some(d) => {
                let other = &t.irreducibles[d];
                if other.dual != chi.label {
                    v.push(format!("dual: {} and {} are not mutually dual", chi.label, other.label));
                }
                if other.values.len() == nc {
                    for c in 0..nc {
                        if other.values[c] != chi.values[c].complex_conjugate() {
                            v.push(format!(
                                "dual asymmetry: {}({}) is not the conjugate of {}({})",
                                other.label, t.classes[c].label, chi.label, t.classes[c].label
                            ));
                            break;
                        }
                    }
                }
                let self_dual = chi.dual == chi.label;
                if (chi.indicator != 0) != self_dual {
                    v.push(format!(
                        "indicator: {} has indicator {} but is {}self-dual",
                        chi.label,
                        chi.indicator,
                        if self_dual { "" } else { "not " }
                    ));
                }
            }
        }
    }
    if !v.is_empty() {
        return v;
    }

    // Galois compatibility: chi(x^k) = galois(chi(x), k) for k prime to ord(x)
    for c in 0..nc {
        let ord = t.classes[c].order as i64;
        for k in 2..ord {
            if k.gcd(&ord) != 1 {
                continue;
            }
            let Some(d) = t.power_index(c, k) else {
                v.push(format!("power map: cannot form {}^{k}", t.classes[c].label));
                continue;
            };
            for chi in &t.irreducibles {
                match chi.values[c].galois(k) {
                    Ok(g) if g == chi.values[d] => {}
                    _ => v.push(format!(
                        "Galois: {}({}^{k}) differs from the conjugate of {}({})",
                        chi.label, t.classes[c].label, chi.label, t.classes[c].label
                    )),
                }
            }
        }
    }

    match t.outer_permutations() {
        Err(e) => v.push(format!("outer action: {e}")),
        Ok(perms) => {
            for (n, (cp, ip)) in perms.iter().enumerate() {
                for c in 0..nc {
                    let img = cp[c];
                    if t.classes[img].order != t.classes[c].order {
                        v.push(format!("outer action {}: class orders not preserved", n + 1));
                    }
                    for (&q, target) in &t.classes[c].power_map {
                        let tc = t.class_index(target).unwrap();
                        let img_target = t.classes[img].power_map.get(&q).and_then(|l| t.class_index(l));
                        if img_target != Some(cp[tc]) {
                            v.push(format!(
                                "outer action {}: power maps not preserved at {}",
                                n + 1,
                                t.classes[c].label
                            ));
                        }
                    }
                }
                for (j, chi) in t.irreducibles.iter().enumerate() {
                    let img = &t.irreducibles[ip[j]];
                    if img.degree != chi.degree || (0..nc).any(|c| img.values[cp[c]] != chi.values[c]) {
                        v.push(format!("outer action {}: {} -> {} does not match values", n + 1, chi.label, img.label));
                    }
                }
            }
        }
    }
    v
}
