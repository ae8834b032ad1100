//! Finite groups as Cayley tables over opaque element ids.

use crate::report::{CheckError, Mode, ValidationReport};

/// A shape-checked but not yet axiom-checked multiplication table.
/// `validate` runs the exhaustive axiom sweep; [`FiniteGroup`] is only
/// constructible from a table that passes it.
#[derive(Debug, Clone)]
pub struct RawGroupTable {
    pub name: String,
    pub names: Vec<String>,
    pub mul: Vec<Vec<usize>>,
    pub identity: Option<usize>,
    pub inv: Option<Vec<usize>>,
}

impl RawGroupTable {
    pub fn new(
        name: impl Into<String>,
        names: Vec<String>,
        mul: Vec<Vec<usize>>,
        identity: Option<usize>,
        inv: Option<Vec<usize>>,
    ) -> Result<Self, CheckError> {
        let n = names.len();
        if n == 0 {
            return Err(CheckError::Structural("empty element list".into()));
        }
        if mul.len() != n {
            return Err(CheckError::Structural(format!(
                "multiplication table has {} rows for {} elements",
                mul.len(),
                n
            )));
        }
        for (i, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(CheckError::Structural(format!(
                    "row {i} of multiplication table has {} entries for {n} elements",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(CheckError::Structural(format!(
                        "table entry ({i},{j}) = {v} out of range"
                    )));
                }
            }
        }
        if let Some(e) = identity {
            if e >= n {
                return Err(CheckError::Structural(format!(
                    "identity id {e} out of range"
                )));
            }
        }
        if let Some(t) = &inv {
            if t.len() != n || t.iter().any(|&v| v >= n) {
                return Err(CheckError::Structural("inverse table malformed".into()));
            }
        }
        Ok(RawGroupTable {
            name: name.into(),
            names,
            mul,
            identity,
            inv,
        })
    }

    fn find_identity(&self) -> Option<usize> {
        let n = self.names.len();
        (0..n).find(|&e| (0..n).all(|a| self.mul[e][a] == a && self.mul[a][e] == a))
    }

    /// Exhaustive axiom sweep: identity, inverses, associativity.
    /// Closure is guaranteed by the range check at construction.
    pub fn validate(&self) -> ValidationReport {
        let n = self.names.len();
        let mut rep = ValidationReport::new(format!("group table {}", self.name), Mode::Exhaustive);
        rep.record_pass("closure", (n * n) as u64);

        let derived = self.find_identity();
        let identity = match (self.identity, derived) {
            (Some(e), Some(d)) if e == d => {
                rep.record_pass("identity", (2 * n) as u64);
                Some(e)
            }
            (Some(e), _) => {
                rep.record_fail(
                    "identity",
                    (2 * n) as u64,
                    format!("declared identity {} is not two-sided", self.names[e]),
                );
                derived
            }
            (None, Some(d)) => {
                rep.record_pass("identity", (2 * n) as u64);
                Some(d)
            }
            (None, None) => {
                rep.record_fail("identity", (2 * n) as u64, "no two-sided identity".into());
                None
            }
        };

        match identity {
            Some(e) => {
                let mut ok = true;
                for a in 0..n {
                    let found = (0..n).find(|&b| self.mul[a][b] == e && self.mul[b][a] == e);
                    match found {
                        Some(b) => {
                            if let Some(t) = &self.inv {
                                if t[a] != b && !(self.mul[a][t[a]] == e && self.mul[t[a]][a] == e)
                                {
                                    rep.record_fail(
                                        "inverses",
                                        (n * n) as u64,
                                        format!(
                                            "declared inverse of {} is not two-sided",
                                            self.names[a]
                                        ),
                                    );
                                    ok = false;
                                    break;
                                }
                            }
                        }
                        None => {
                            rep.record_fail(
                                "inverses",
                                (n * n) as u64,
                                format!("{} has no two-sided inverse", self.names[a]),
                            );
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    rep.record_pass("inverses", (n * n) as u64);
                }
            }
            None => {
                rep.record_fail("inverses", 0, "skipped: no identity".into());
            }
        }

        let mut assoc_witness = None;
        'outer: for a in 0..n {
            for b in 0..n {
                let ab = self.mul[a][b];
                for c in 0..n {
                    if self.mul[ab][c] != self.mul[a][self.mul[b][c]] {
                        assoc_witness = Some((a, b, c));
                        break 'outer;
                    }
                }
            }
        }
        match assoc_witness {
            None => rep.record_pass("associativity", (n * n * n) as u64),
            Some((a, b, c)) => rep.record_fail(
                "associativity",
                (n * n * n) as u64,
                format!(
                    "(a*b)*c != a*(b*c) at a={}, b={}, c={}",
                    self.names[a], self.names[b], self.names[c]
                ),
            ),
        }
        rep
    }

    /// Promotes the table to a [`FiniteGroup`], refusing if any axiom
    /// fails.
    pub fn into_group(self) -> Result<FiniteGroup, CheckError> {
        let report = self.validate();
        if !report.passed() {
            return Err(CheckError::precondition(
                format!("group table {}", self.name),
                report,
            ));
        }
        let identity = self.identity.or_else(|| self.find_identity()).unwrap();
        let n = self.names.len();
        let inv = self.inv.unwrap_or_else(|| {
            (0..n)
                .map(|a| (0..n).find(|&b| self.mul[a][b] == identity).unwrap())
                .collect()
        });
        Ok(FiniteGroup {
            name: self.name,
            names: self.names,
            mul: self.mul,
            identity,
            inv,
        })
    }
}

/// An axiom-checked finite group. All operations are total.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    pub name: String,
    names: Vec<String>,
    mul: Vec<Vec<usize>>,
    identity: usize,
    inv: Vec<usize>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn element_name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    /// Re-wraps as a raw table, e.g. to revalidate after ingestion.
    pub fn to_raw(&self) -> RawGroupTable {
        RawGroupTable {
            name: self.name.clone(),
            names: self.names.clone(),
            mul: self.mul.clone(),
            identity: Some(self.identity),
            inv: Some(self.inv.clone()),
        }
    }
}

/// Builds a finite group from an explicit list of one-line permutations
/// of `0..n`, closed under composition. The convention throughout is
/// `(s . t)(i) = s(t(i))`.
fn finite_group_from_perm_list(
    name: &str,
    elems: &[Vec<usize>],
    label: impl Fn(&[usize]) -> String,
) -> FiniteGroup {
    let n = elems.len();
    let names: Vec<String> = elems.iter().map(|p| label(p)).collect();
    let mut mul = vec![vec![0usize; n]; n];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            let prod = perm_compose(a, b);
            mul[i][j] = elems.iter().position(|e| e == &prod).expect("closure");
        }
    }
    RawGroupTable::new(name, names, mul, None, None)
        .expect("well-formed permutation table")
        .into_group()
        .expect("permutation group axioms")
}

pub fn perm_compose(s: &[usize], t: &[usize]) -> Vec<usize> {
    t.iter().map(|&i| s[i]).collect()
}

pub fn perm_inverse(s: &[usize]) -> Vec<usize> {
    let mut out = vec![0; s.len()];
    for (i, &si) in s.iter().enumerate() {
        out[si] = i;
    }
    out
}

/// Cycle notation for a permutation of `0..n`, with points printed
/// 1-based: `(12)`, `(123)`, `e` for the identity.
pub fn perm_cycle_name(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let mut cur = p[start];
        while cur != start {
            seen[cur] = true;
            cyc.push(cur);
            cur = p[cur];
        }
        out.push('(');
        for v in cyc {
            out.push_str(&(v + 1).to_string());
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

/// The symmetric group on three points, in the fixed element order
/// `e, (12), (123), (132), (13), (23)`.
pub fn s3() -> FiniteGroup {
    let perms: Vec<Vec<usize>> = vec![
        vec![0, 1, 2], // e
        vec![1, 0, 2], // (12)
        vec![1, 2, 0], // (123): 1->2, 2->3, 3->1
        vec![2, 0, 1], // (132)
        vec![2, 1, 0], // (13)
        vec![0, 2, 1], // (23)
    ];
    finite_group_from_perm_list("S3", &perms, perm_cycle_name)
}

/// Cyclic group of order `n` written additively, elements `0..n`.
pub fn cyclic(n: usize) -> FiniteGroup {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mul: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    RawGroupTable::new(format!("Z{n}"), names, mul, Some(0), None)
        .unwrap()
        .into_group()
        .unwrap()
}

pub fn z4() -> FiniteGroup {
    cyclic(4)
}

/// The dihedral group of the square, order 8, generated by the
/// rotation `r = (1234)` and the reflection `s = (24)`; elements
/// ordered `e, r, r2, r3, s, rs, r2s, r3s`.
pub fn d4() -> FiniteGroup {
    let r = [1usize, 2, 3, 0];
    let s = [0usize, 3, 2, 1];
    let mut perms: Vec<Vec<usize>> = Vec::with_capacity(8);
    let mut names = Vec::with_capacity(8);
    for reflected in [false, true] {
        for a in 0..4 {
            let mut p: Vec<usize> = if reflected {
                s.to_vec()
            } else {
                (0..4).collect()
            };
            for _ in 0..a {
                p = perm_compose(&r, &p);
            }
            let name = match (a, reflected) {
                (0, false) => "e".to_string(),
                (1, false) => "r".to_string(),
                (a, false) => format!("r{a}"),
                (0, true) => "s".to_string(),
                (1, true) => "rs".to_string(),
                (a, true) => format!("r{a}s"),
            };
            perms.push(p);
            names.push(name);
        }
    }
    let n = perms.len();
    let mut mul = vec![vec![0usize; n]; n];
    for (i, a) in perms.iter().enumerate() {
        for (j, b) in perms.iter().enumerate() {
            let prod = perm_compose(a, b);
            mul[i][j] = perms.iter().position(|e| e == &prod).expect("closure");
        }
    }
    RawGroupTable::new("D4", names, mul, None, None)
        .expect("well-formed table")
        .into_group()
        .expect("dihedral group axioms")
}

pub fn trivial() -> FiniteGroup {
    RawGroupTable::new("1", vec!["e".to_string()], vec![vec![0]], Some(0), None)
        .unwrap()
        .into_group()
        .unwrap()
}
