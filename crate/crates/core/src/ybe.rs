//! Set-theoretic and categorical Yang-Baxter machinery.
//!
//! The braid relation for a map `r` on `X x X`:
//! `(r x Id)(Id x r)(r x Id) = (Id x r)(r x Id)(Id x r)` on `X^3`,
//! with `r` bijective. Solutions here are produced from Rota-Baxter
//! operators: `R(a, b) = (c, B(c)^-1 c^-1 a c B(c))` with
//! `c = B(a) b B(a)^-1`, applied on a group, and again on the
//! morphism set of the category of a crossed module.

use crate::crossed::{pair_id, unpair_id, GroupCrossedModule};
use crate::group::{Element, FiniteGroup};
use crate::rb::groups::{
    check_group_rb, check_group_rb_pair, induced_rb_semidirect, GroupRB, GroupRBPair,
};
use crate::report::{CheckError, Derived, Mode, ValidationReport};
use crate::rng::SplitMix;

/// A set-theoretic solution candidate on a finite set, as a total table
/// over flattened pairs `x * n + y`.
#[derive(Debug, Clone)]
pub struct PairTable {
    pub n: usize,
    table: Vec<(usize, usize)>,
}

impl PairTable {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Self {
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(f(x, y));
            }
        }
        PairTable { n, table }
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        self.table[x * self.n + y]
    }
}

/// Exhaustive braid check on a finite set: bijectivity by image
/// counting, then the relation over all `n^3` triples.
pub fn braid_check(names: &[String], r: &PairTable, subject: &str) -> ValidationReport {
    let n = r.n;
    let mut rep = ValidationReport::new(format!("braid relation for {subject}"), Mode::Exhaustive);

    let mut seen = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            let (u, v) = r.apply(x, y);
            seen[u * n + v] = true;
        }
    }
    if seen.iter().all(|&s| s) {
        rep.record_pass("bijective", (n * n) as u64);
    } else {
        let missing = seen.iter().position(|&s| !s).unwrap();
        rep.record_fail(
            "bijective",
            (n * n) as u64,
            format!(
                "pair ({}, {}) not attained",
                names[missing / n],
                names[missing % n]
            ),
        );
    }

    let r12 = |x: usize, y: usize, z: usize| {
        let (a, b) = r.apply(x, y);
        (a, b, z)
    };
    let r23 = |x: usize, y: usize, z: usize| {
        let (b, c) = r.apply(y, z);
        (x, b, c)
    };
    let mut fail = None;
    'scan: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (a, b, c) = r12(x, y, z);
                let (a, b, c) = r23(a, b, c);
                let lhs = r12(a, b, c);
                let (a, b, c) = r23(x, y, z);
                let (a, b, c) = r12(a, b, c);
                let rhs = r23(a, b, c);
                if lhs != rhs {
                    fail = Some(format!("x={}, y={}, z={}", names[x], names[y], names[z]));
                    break 'scan;
                }
            }
        }
    }
    let triples = (n * n * n) as u64;
    match fail {
        None => rep.record_pass("braid", triples),
        Some(w) => rep.record_fail("braid", triples, w),
    }
    rep
}

/// The Yang-Baxter map of a Rota-Baxter operator, evaluated pointwise.
pub fn rb_solution_map(rb: &GroupRB, a: &Element, b: &Element) -> (Element, Element) {
    let g = &rb.host;
    let c = g.conjugate(&rb.apply(a), b);
    let conjugator = g.mul(&g.inv(&rb.apply(&c)), &g.inv(&c));
    let second = g.conjugate(&conjugator, a);
    (c, second)
}

/// A set-theoretic solution built from an operator: tabulated on finite
/// carriers, evaluated by formula on matrix carriers.
#[derive(Debug, Clone)]
pub enum SetSolution {
    Finite { names: Vec<String>, r: PairTable },
    Matrix { rb: GroupRB },
}

/// Builds the solution and verifies the braid relation (exhaustively on
/// finite carriers, on seeded triples otherwise). Refuses if the
/// operator fails its own check.
pub fn set_ybe_from_rb(rb: &GroupRB, budget: u64) -> Result<Derived<SetSolution>, CheckError> {
    let pre = check_group_rb(rb, budget);
    if !pre.passed() {
        return Err(CheckError::precondition("set-theoretic solution", pre));
    }
    match rb.host.elements() {
        Some(elems) => {
            let n = elems.len();
            let r = PairTable::from_fn(n, |x, y| {
                let (u, v) = rb_solution_map(rb, &elems[x], &elems[y]);
                (u.idx(), v.idx())
            });
            let names: Vec<String> = elems.iter().map(|e| rb.host.describe(e)).collect();
            let label = format!("rb solution on {}", rb.host.name());
            let report = braid_check(&names, &r, &label);
            Ok(Derived::new(SetSolution::Finite { names, r }, report))
        }
        None => {
            let report = braid_check_sampled(rb, budget);
            Ok(Derived::new(SetSolution::Matrix { rb: rb.clone() }, report))
        }
    }
}

fn braid_check_sampled(rb: &GroupRB, budget: u64) -> ValidationReport {
    let g = &rb.host;
    let seed = g.seed();
    let mut rep = ValidationReport::new(
        format!("braid relation for rb solution on {}", g.name()),
        Mode::Sampled { seed, budget },
    );
    let mut rng = SplitMix::new(seed);
    let r = |x: &Element, y: &Element| rb_solution_map(rb, x, y);
    let mut fail = None;
    let mut max_resid = 0.0f64;
    for i in 0..budget {
        let x = g.sample(&mut rng);
        let y = g.sample(&mut rng);
        let z = g.sample(&mut rng);
        // left side
        let (a, b) = r(&x, &y);
        let (b, c) = r(&b, &z);
        let (a2, b2) = r(&a, &b);
        let lhs = (a2, b2, c);
        // right side
        let (b, c) = r(&y, &z);
        let (a, b) = r(&x, &b);
        let (b2r, c2r) = r(&b, &c);
        let rhs = (a, b2r, c2r);
        for (l, rr) in [(&lhs.0, &rhs.0), (&lhs.1, &rhs.1), (&lhs.2, &rhs.2)] {
            max_resid = max_resid.max(l.mat().sub(rr.mat()).frobenius());
        }
        let ok = g.eq(&lhs.0, &rhs.0) && g.eq(&lhs.1, &rhs.1) && g.eq(&lhs.2, &rhs.2);
        if !ok && fail.is_none() {
            fail = Some(format!("sample #{i}"));
        }
    }
    match fail {
        None => rep.record_pass_residual("braid", budget, max_resid),
        Some(w) => rep.record_fail_residual("braid", budget, w, max_resid),
    }
    rep
}

/// The category of a finite crossed module: objects are `G`, morphisms
/// are `G x H` with source `a`, target `t(p) . a`, identity
/// `(a, e_H)`, and composition `(a, p) o (b, q) = (b, p q)` defined
/// exactly when `t(q) . b = a`.
#[derive(Debug, Clone)]
pub struct SmallCategory {
    pub g: FiniteGroup,
    pub h: FiniteGroup,
    t: Vec<usize>,
}

/// A morphism id encodes `(a, p)` as `a * |H| + p`.
impl SmallCategory {
    pub fn object_count(&self) -> usize {
        self.g.order()
    }

    pub fn morphism_count(&self) -> usize {
        self.g.order() * self.h.order()
    }

    pub fn src(&self, m: usize) -> usize {
        unpair_id(m, self.h.order()).0
    }

    pub fn tgt(&self, m: usize) -> usize {
        let (a, p) = unpair_id(m, self.h.order());
        self.g.mul(self.t[p], a)
    }

    pub fn id_of(&self, a: usize) -> usize {
        pair_id(a, self.h.identity(), self.h.order())
    }

    pub fn composable(&self, f: usize, g_mor: usize) -> bool {
        self.tgt(g_mor) == self.src(f)
    }

    /// `f o g`, defined when `tgt(g) = src(f)`; the composite has the
    /// source of `g`.
    pub fn compose(&self, f: usize, g_mor: usize) -> Option<usize> {
        if !self.composable(f, g_mor) {
            return None;
        }
        let (_, p) = unpair_id(f, self.h.order());
        let (b, q) = unpair_id(g_mor, self.h.order());
        Some(pair_id(b, self.h.mul(p, q), self.h.order()))
    }

    pub fn describe_morphism(&self, m: usize) -> String {
        let (a, p) = unpair_id(m, self.h.order());
        format!("({}|{})", self.g.element_name(a), self.h.element_name(p))
    }
}

/// Builds the category and verifies the category laws exhaustively:
/// identities, unit laws, associativity over composable triples, and
/// source/target bookkeeping under composition.
pub fn category_of_cm(cm: &GroupCrossedModule) -> Result<Derived<SmallCategory>, CheckError> {
    let g = cm.g.finite()?.clone();
    let h = cm.h.finite()?.clone();
    let t: Vec<usize> = (0..h.order())
        .map(|p| cm.t_of(&Element::Idx(p)).idx())
        .collect();
    let cat = SmallCategory { g, h, t };
    let mut rep = ValidationReport::new(format!("category of {}", cm.name), Mode::Exhaustive);

    let nm = cat.morphism_count();
    let no = cat.object_count();

    let mut fail = None;
    for a in 0..no {
        let ida = cat.id_of(a);
        if cat.src(ida) != a || cat.tgt(ida) != a {
            fail = Some(format!("object {}", cat.g.element_name(a)));
            break;
        }
    }
    match fail {
        None => rep.record_pass("identity-endpoints", no as u64),
        Some(w) => rep.record_fail("identity-endpoints", no as u64, w),
    }

    let mut fail = None;
    for m in 0..nm {
        let left = cat.compose(cat.id_of(cat.tgt(m)), m);
        let right = cat.compose(m, cat.id_of(cat.src(m)));
        if left != Some(m) || right != Some(m) {
            fail = Some(cat.describe_morphism(m));
            break;
        }
    }
    match fail {
        None => rep.record_pass("unit-laws", (2 * nm) as u64),
        Some(w) => rep.record_fail("unit-laws", (2 * nm) as u64, w),
    }

    let mut fail = None;
    let mut endpoints_fail = None;
    let mut composable_pairs = 0u64;
    for f in 0..nm {
        for gm in 0..nm {
            if let Some(fg) = cat.compose(f, gm) {
                composable_pairs += 1;
                if cat.src(fg) != cat.src(gm) || cat.tgt(fg) != cat.tgt(f) {
                    endpoints_fail.get_or_insert_with(|| {
                        format!(
                            "f={}, g={}",
                            cat.describe_morphism(f),
                            cat.describe_morphism(gm)
                        )
                    });
                }
            }
        }
    }
    let mut assoc_triples = 0u64;
    'assoc: for f in 0..nm {
        for gm in 0..nm {
            if cat.compose(f, gm).is_none() {
                continue;
            }
            for k in 0..nm {
                if cat.compose(gm, k).is_none() {
                    continue;
                }
                assoc_triples += 1;
                let left = cat.compose(cat.compose(f, gm).unwrap(), k);
                let right = cat.compose(f, cat.compose(gm, k).unwrap());
                if left != right || left.is_none() {
                    fail = Some(format!(
                        "f={}, g={}, k={}",
                        cat.describe_morphism(f),
                        cat.describe_morphism(gm),
                        cat.describe_morphism(k)
                    ));
                    break 'assoc;
                }
            }
        }
    }
    match endpoints_fail {
        None => rep.record_pass("composition-endpoints", composable_pairs),
        Some(w) => rep.record_fail("composition-endpoints", composable_pairs, w),
    }
    match fail {
        None => rep.record_pass("associativity", assoc_triples),
        Some(w) => rep.record_fail("associativity", assoc_triples, w),
    }
    Ok(Derived::new(cat, rep))
}

/// A categorical solution: braid maps on objects and on morphisms that
/// together form an invertible endofunctor of `C x C`.
#[derive(Debug, Clone)]
pub struct CategoricalSolution {
    pub cat: SmallCategory,
    /// Object-level map on flattened pairs.
    pub r0: PairTable,
    /// Morphism-level map on flattened pairs of morphism ids.
    pub r1: PairTable,
}

/// Builds `R = (R1, R0)` from a pair: `R0` from the base operator on
/// `G`, `R1` from the operator induced on the semidirect product
/// `G x H` (whose underlying set is the morphism set). Verifies
/// functor laws, both braid relations, invertibility at both levels,
/// and functoriality of the inverse.
pub fn categorical_solution(
    cm: &GroupCrossedModule,
    pair: &GroupRBPair,
    budget: u64,
) -> Result<Derived<CategoricalSolution>, CheckError> {
    let pre = check_group_rb_pair(pair, budget);
    if !pre.passed() {
        return Err(CheckError::precondition("categorical solution", pre));
    }
    let cat = category_of_cm(cm)?;
    let mut rep = ValidationReport::new(
        format!("categorical solution on {}", cm.name),
        Mode::Exhaustive,
    );
    rep.absorb("category", cat.report.clone());
    let cat = cat.value;

    let rb0 = pair.rb0();
    let g_elems = pair.cm.g.elements().expect("finite");
    let no = g_elems.len();
    let r0 = PairTable::from_fn(no, |x, y| {
        let (u, v) = rb_solution_map(&rb0, &g_elems[x], &g_elems[y]);
        (u.idx(), v.idx())
    });

    let induced = induced_rb_semidirect(pair)?;
    rep.absorb("induced-operator", induced.report.clone());
    let sd_rb = induced.value;
    let sd_elems = sd_rb.host.elements().expect("finite");
    let nm = sd_elems.len();
    let r1 = PairTable::from_fn(nm, |x, y| {
        let (u, v) = rb_solution_map(&sd_rb, &sd_elems[x], &sd_elems[y]);
        (u.idx(), v.idx())
    });

    // braid relations at both levels
    let g_names: Vec<String> = (0..no).map(|a| cat.g.element_name(a).to_string()).collect();
    rep.absorb("objects", braid_check(&g_names, &r0, "object level"));
    let m_names: Vec<String> = (0..nm).map(|m| cat.describe_morphism(m)).collect();
    rep.absorb("morphisms", braid_check(&m_names, &r1, "morphism level"));

    // functor laws for R: sources, targets, identities, composition
    let mut src_fail = None;
    let mut tgt_fail = None;
    for x in 0..nm {
        for y in 0..nm {
            let (u, v) = r1.apply(x, y);
            let on_src = r0.apply(cat.src(x), cat.src(y));
            if (cat.src(u), cat.src(v)) != on_src && src_fail.is_none() {
                src_fail = Some(format!("({}, {})", m_names[x], m_names[y]));
            }
            let on_tgt = r0.apply(cat.tgt(x), cat.tgt(y));
            if (cat.tgt(u), cat.tgt(v)) != on_tgt && tgt_fail.is_none() {
                tgt_fail = Some(format!("({}, {})", m_names[x], m_names[y]));
            }
        }
    }
    let pairs = (nm * nm) as u64;
    record(&mut rep, "functor-sources", pairs, src_fail);
    record(&mut rep, "functor-targets", pairs, tgt_fail);

    let mut fail = None;
    for a in 0..no {
        for b in 0..no {
            let (u, v) = r1.apply(cat.id_of(a), cat.id_of(b));
            let (ra, rbj) = r0.apply(a, b);
            if (u, v) != (cat.id_of(ra), cat.id_of(rbj)) {
                fail = Some(format!("({}, {})", g_names[a], g_names[b]));
                break;
            }
        }
    }
    record(&mut rep, "functor-identities", (no * no) as u64, fail);

    // composition: on composable pairs of C x C, R1 of the composite
    // equals the composite of the images (which must be composable)
    // composable morphism pairs of the product category: both slots
    // composable in C
    let mut composable: Vec<(usize, usize, usize)> = Vec::new();
    for f in 0..nm {
        for g1 in 0..nm {
            if let Some(c) = cat.compose(f, g1) {
                composable.push((f, g1, c));
            }
        }
    }
    let mut fail = None;
    let mut checked = 0u64;
    'comp: for &(f1, g1, c1) in &composable {
        for &(f2, g2, c2) in &composable {
            checked += 1;
            let (rf1, rf2) = r1.apply(f1, f2);
            let (rg1, rg2) = r1.apply(g1, g2);
            let lhs = r1.apply(c1, c2);
            match (cat.compose(rf1, rg1), cat.compose(rf2, rg2)) {
                (Some(a), Some(b)) => {
                    if lhs != (a, b) {
                        fail = Some(format!(
                            "(({}, {}), ({}, {}))",
                            m_names[f1], m_names[f2], m_names[g1], m_names[g2]
                        ));
                        break 'comp;
                    }
                }
                _ => {
                    fail = Some(format!(
                        "images not composable at (({}, {}), ({}, {}))",
                        m_names[f1], m_names[f2], m_names[g1], m_names[g2]
                    ));
                    break 'comp;
                }
            }
        }
    }
    record(&mut rep, "functor-composition", checked, fail);

    // invertibility at both levels, and the inverse is again functorial
    // on sources and targets
    let r0_inv = invert_table(&r0);
    match &r0_inv {
        Some(_) => rep.record_pass("invertible-objects", (no * no) as u64),
        None => rep.record_fail(
            "invertible-objects",
            (no * no) as u64,
            "not a bijection".into(),
        ),
    }
    match (invert_table(&r1), &r0_inv) {
        (Some(r1_inv), Some(r0_inv)) => {
            rep.record_pass("invertible-morphisms", pairs);
            let mut fail = None;
            'inv: for x in 0..nm {
                for y in 0..nm {
                    let (u, v) = r1_inv.apply(x, y);
                    if (cat.src(u), cat.src(v)) != r0_inv.apply(cat.src(x), cat.src(y))
                        || (cat.tgt(u), cat.tgt(v)) != r0_inv.apply(cat.tgt(x), cat.tgt(y))
                    {
                        fail = Some(format!("({}, {})", m_names[x], m_names[y]));
                        break 'inv;
                    }
                }
            }
            record(&mut rep, "inverse-functor-endpoints", pairs, fail);
        }
        (Some(_), None) => rep.record_pass("invertible-morphisms", pairs),
        (None, _) => rep.record_fail("invertible-morphisms", pairs, "not a bijection".into()),
    }

    let sol = CategoricalSolution { cat, r0, r1 };
    Ok(Derived::new(sol, rep))
}

fn invert_table(r: &PairTable) -> Option<PairTable> {
    let n = r.n;
    let mut inv = vec![None; n * n];
    for x in 0..n {
        for y in 0..n {
            let (u, v) = r.apply(x, y);
            if inv[u * n + v].is_some() {
                return None;
            }
            inv[u * n + v] = Some((x, y));
        }
    }
    if inv.iter().any(Option::is_none) {
        return None;
    }
    Some(PairTable {
        n,
        table: inv.into_iter().map(Option::unwrap).collect(),
    })
}

fn record(rep: &mut ValidationReport, law: &str, checked: u64, fail: Option<String>) {
    match fail {
        None => rep.record_pass(law, checked),
        Some(w) => rep.record_fail(law, checked, w),
    }
}

/// The endofunctor `F = (B, B0)` of the category, where on morphisms
/// `B(a, p) = (B0(a), phi(B0(a)) B1(phi(B0(a)^-1 a^-1) p))`. The four
/// functor laws are verified exhaustively.
#[derive(Debug, Clone)]
pub struct RbFunctor {
    pub on_objects: Vec<usize>,
    pub on_morphisms: Vec<usize>,
}

pub fn rb_functor(
    cm: &GroupCrossedModule,
    pair: &GroupRBPair,
    budget: u64,
) -> Result<Derived<RbFunctor>, CheckError> {
    let pre = check_group_rb_pair(pair, budget);
    if !pre.passed() {
        return Err(CheckError::precondition("operator endofunctor", pre));
    }
    let cat = category_of_cm(cm)?.value;
    let no = cat.object_count();
    let nm = cat.morphism_count();
    let hn = cat.h.order();
    let mut rep = ValidationReport::new(
        format!(
            "endofunctor of ({}, {}) on {}",
            pair.b1.name, pair.b0.name, cm.name
        ),
        Mode::Exhaustive,
    );

    let on_objects: Vec<usize> = (0..no)
        .map(|a| pair.b0_of(&Element::Idx(a)).idx())
        .collect();
    let on_morphisms: Vec<usize> = (0..nm)
        .map(|m| {
            let (a, p) = unpair_id(m, hn);
            let b0a = pair.b0_of(&Element::Idx(a)).idx();
            let d = pair.induced_twist(&Element::Idx(a), &Element::Idx(p)).idx();
            pair_id(b0a, d, hn)
        })
        .collect();

    let mut fail = None;
    for m in 0..nm {
        if cat.src(on_morphisms[m]) != on_objects[cat.src(m)] {
            fail = Some(cat.describe_morphism(m));
            break;
        }
    }
    record(&mut rep, "functor-sources", nm as u64, fail);

    let mut fail = None;
    for m in 0..nm {
        if cat.tgt(on_morphisms[m]) != on_objects[cat.tgt(m)] {
            fail = Some(cat.describe_morphism(m));
            break;
        }
    }
    record(&mut rep, "functor-targets", nm as u64, fail);

    let mut fail = None;
    for a in 0..no {
        if on_morphisms[cat.id_of(a)] != cat.id_of(on_objects[a]) {
            fail = Some(cat.g.element_name(a).to_string());
            break;
        }
    }
    record(&mut rep, "functor-identities", no as u64, fail);

    let mut fail = None;
    let mut checked = 0u64;
    'scan: for f in 0..nm {
        for gmor in 0..nm {
            let Some(c) = cat.compose(f, gmor) else {
                continue;
            };
            checked += 1;
            let lhs = on_morphisms[c];
            match cat.compose(on_morphisms[f], on_morphisms[gmor]) {
                Some(rhs) if rhs == lhs => {}
                Some(_) | None => {
                    fail = Some(format!(
                        "f={}, g={}",
                        cat.describe_morphism(f),
                        cat.describe_morphism(gmor)
                    ));
                    break 'scan;
                }
            }
        }
    }
    record(&mut rep, "functor-composition", checked, fail);

    Ok(Derived::new(
        RbFunctor {
            on_objects,
            on_morphisms,
        },
        rep,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::s3_conjugation_module;
    use crate::group::finite::s3;
    use crate::group::CarrierGroup;
    use crate::group::GroupMap;
    use crate::rb::groups::s3_factorization_map;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn flip_and_identity_pass_braid() {
        let flip = PairTable::from_fn(5, |x, y| (y, x));
        assert!(braid_check(&names(5), &flip, "flip").passed());
        let id = PairTable::from_fn(5, |x, y| (x, y));
        assert!(braid_check(&names(5), &id, "id").passed());
    }

    #[test]
    fn right_multiplication_twist_fails_on_s3() {
        let fg = s3();
        let r = PairTable::from_fn(6, |x, y| (y, fg.mul(x, y)));
        let rep = braid_check(fg.element_names(), &r, "right multiplication twist");
        assert!(!rep.passed());
        assert!(rep.first_failure().unwrap().witness.is_some());
    }

    #[test]
    fn inverse_rb_solution_is_conjugation_form() {
        let fg = s3();
        let car = CarrierGroup::Finite(fg.clone());
        let rb = GroupRB::new(car.clone(), GroupMap::inverse()).unwrap();
        let sol = set_ybe_from_rb(&rb, 0).unwrap();
        assert!(sol.report.passed());
        let SetSolution::Finite { r, .. } = &sol.value else {
            panic!()
        };
        // with B = inverse: R(a, b) = (a^-1 b a, a)
        for a in 0..6 {
            for b in 0..6 {
                let want = (fg.conjugate(fg.inv(a), b), a);
                assert_eq!(r.apply(a, b), want);
            }
        }
        // R(e, b) = (b, e)
        assert_eq!(r.apply(0, 3), (3, 0));
        // a=(12), b=(123): ((132), (12))
        let (u, v) = r.apply(1, 2);
        assert_eq!(fg.element_name(u), "(132)");
        assert_eq!(fg.element_name(v), "(12)");
    }

    #[test]
    fn factorization_rb_solution_passes_braid() {
        let car = CarrierGroup::Finite(s3());
        let rb = GroupRB::new(car, s3_factorization_map()).unwrap();
        assert!(set_ybe_from_rb(&rb, 0).unwrap().report.passed());
    }

    #[test]
    fn category_of_s3_conjugation_satisfies_laws() {
        let cm = s3_conjugation_module();
        let cat = category_of_cm(&cm).unwrap();
        assert!(
            cat.report.passed(),
            "failures: {:?}",
            cat.report.failing_laws()
        );
        let c = cat.value;
        // tgt(a, e) = a
        for a in 0..6 {
            assert_eq!(c.tgt(c.id_of(a)), a);
        }
        // with t = id: ((123), p) o ((23), (12)) = ((23), p (12))
        let fg = s3();
        let i123 = 2;
        let i23 = 5;
        let i12 = 1;
        for p in 0..6 {
            let f = pair_id(i123, p, 6);
            let gmor = pair_id(i23, i12, 6);
            assert_eq!(c.tgt(gmor), i123);
            let got = c.compose(f, gmor).unwrap();
            assert_eq!(got, pair_id(i23, fg.mul(p, i12), 6));
        }
        // non-composable pairs are rejected
        let f = pair_id(0, i12, 6);
        let gmor = pair_id(0, i12, 6);
        assert_eq!(c.tgt(gmor), i12);
        assert!(c.compose(f, gmor).is_none());
    }

    #[test]
    fn categorical_solution_on_inverse_pair() {
        let cm = s3_conjugation_module();
        let pair = GroupRBPair::new(cm.clone(), GroupMap::inverse(), GroupMap::inverse()).unwrap();
        let sol = categorical_solution(&cm, &pair, 0).unwrap();
        assert!(
            sol.report.passed(),
            "failures: {:?}",
            sol.report.failing_laws()
        );
        // with the inverse pair, R0(c, d) = (c^-1 d c, c)
        let fg = s3();
        for c in 0..6 {
            for d in 0..6 {
                assert_eq!(sol.value.r0.apply(c, d), (fg.conjugate(fg.inv(c), d), c));
            }
        }
        // R0(e, d) = (d, e)
        assert_eq!(sol.value.r0.apply(0, 4), (4, 0));
    }

    #[test]
    fn rb_functor_laws_on_both_anchor_pairs() {
        let cm = s3_conjugation_module();
        for maps in [
            (GroupMap::inverse(), GroupMap::inverse()),
            (s3_factorization_map(), s3_factorization_map()),
        ] {
            let pair = GroupRBPair::new(cm.clone(), maps.0, maps.1).unwrap();
            let f = rb_functor(&cm, &pair, 0).unwrap();
            assert!(f.report.passed(), "failures: {:?}", f.report.failing_laws());
            // B(1_a) = 1_{B0(a)} spelled out
            let cat = category_of_cm(&cm).unwrap().value;
            for a in 0..6 {
                assert_eq!(
                    f.value.on_morphisms[cat.id_of(a)],
                    cat.id_of(f.value.on_objects[a])
                );
            }
        }
    }
}
