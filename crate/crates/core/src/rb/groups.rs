//! Rota-Baxter operators on groups and on group crossed modules, with
//! the derived constructions: graphs, descended structures, the
//! operator induced on the semidirect product, and the comparison
//! isomorphism between the two composite routes.
//!
//! The defining identity, for a map `B` on a group:
//! `B(a) . B(b) = B(a . B(a) . b . B(a)^-1)`.

use crate::crossed::{pair_id, semidirect_product_group, unpair_id, GroupCrossedModule};
use crate::group::{CarrierGroup, Element, GroupAction, GroupMap, RawGroupTable};
use crate::report::{CheckError, Derived, Mode, ValidationReport};
use crate::rng::SplitMix;

/// An operator `B` on a single group carrier.
#[derive(Debug, Clone)]
pub struct GroupRB {
    pub host: CarrierGroup,
    pub map: GroupMap,
}

impl GroupRB {
    pub fn new(host: CarrierGroup, map: GroupMap) -> Result<Self, CheckError> {
        map.check_total(&host, &host)?;
        Ok(GroupRB { host, map })
    }

    pub fn apply(&self, a: &Element) -> Element {
        self.map.apply_endo(&self.host, a)
    }

    /// `a . B(a) . b . B(a)^-1`: the twisted argument of the defining
    /// identity, which is also the descended product.
    pub fn twisted_mul(&self, a: &Element, b: &Element) -> Element {
        let g = &self.host;
        let ba = self.apply(a);
        g.mul(&g.mul(&g.mul(a, &ba), b), &g.inv(&ba))
    }

    /// `B(a)^-1 . a^-1 . B(a)`: the inverse in the descended group.
    pub fn descended_inv(&self, a: &Element) -> Element {
        let g = &self.host;
        let ba = self.apply(a);
        g.mul(&g.mul(&g.inv(&ba), &g.inv(a)), &ba)
    }
}

/// Checks the defining identity over all pairs (finite) or over
/// `budget` seeded samples (matrix).
pub fn check_group_rb(rb: &GroupRB, budget: u64) -> ValidationReport {
    let g = &rb.host;
    match g.elements() {
        Some(elems) => {
            let n = elems.len() as u64;
            let mut rep = ValidationReport::new(
                format!("rb operator {} on {}", rb.map.name, g.name()),
                Mode::Exhaustive,
            );
            let mut fail = None;
            'scan: for a in &elems {
                for b in &elems {
                    let lhs = g.mul(&rb.apply(a), &rb.apply(b));
                    let rhs = rb.apply(&rb.twisted_mul(a, b));
                    if !g.eq(&lhs, &rhs) {
                        fail = Some(format!("a={}, b={}", g.describe(a), g.describe(b)));
                        break 'scan;
                    }
                }
            }
            match fail {
                None => rep.record_pass("rb-identity", n * n),
                Some(w) => rep.record_fail("rb-identity", n * n, w),
            }
            rep
        }
        None => {
            let seed = g.seed();
            let mut rep = ValidationReport::new(
                format!("rb operator {} on {}", rb.map.name, g.name()),
                Mode::Sampled { seed, budget },
            );
            let mut rng = SplitMix::new(seed);
            let mut fail = None;
            let mut max_resid = 0.0f64;
            for i in 0..budget {
                let a = g.sample(&mut rng);
                let b = g.sample(&mut rng);
                let lhs = g.mul(&rb.apply(&a), &rb.apply(&b));
                let rhs = rb.apply(&rb.twisted_mul(&a, &b));
                max_resid = max_resid.max(lhs.mat().sub(rhs.mat()).frobenius());
                if !g.eq(&lhs, &rhs) && fail.is_none() {
                    fail = Some(format!("sample #{i}: a={}", g.describe(&a)));
                }
            }
            match fail {
                None => rep.record_pass_residual("rb-identity", budget, max_resid),
                Some(w) => rep.record_fail_residual("rb-identity", budget, w, max_resid),
            }
            rep
        }
    }
}

/// A candidate pair `(B1, B0)` on a crossed module. Candidates are
/// allowed to fail: the graph construction tests the failure direction
/// of the characterization theorem.
#[derive(Debug, Clone)]
pub struct GroupRBPair {
    pub cm: GroupCrossedModule,
    pub b1: GroupMap,
    pub b0: GroupMap,
}

impl GroupRBPair {
    pub fn new(cm: GroupCrossedModule, b1: GroupMap, b0: GroupMap) -> Result<Self, CheckError> {
        b1.check_total(&cm.h, &cm.h)?;
        b0.check_total(&cm.g, &cm.g)?;
        Ok(GroupRBPair { cm, b1, b0 })
    }

    pub fn b1_of(&self, p: &Element) -> Element {
        self.b1.apply_endo(&self.cm.h, p)
    }

    pub fn b0_of(&self, a: &Element) -> Element {
        self.b0.apply_endo(&self.cm.g, a)
    }

    pub fn rb1(&self) -> GroupRB {
        GroupRB {
            host: self.cm.h.clone(),
            map: self.b1.clone(),
        }
    }

    pub fn rb0(&self) -> GroupRB {
        GroupRB {
            host: self.cm.g.clone(),
            map: self.b0.clone(),
        }
    }

    /// Right-hand side of the compatibility condition:
    /// `B1( phi(a . B0(a))(p . B1(p)) . (phi(B0(a)) B1(p))^-1 )`.
    pub fn compat_rhs(&self, a: &Element, p: &Element) -> Element {
        let h = &self.cm.h;
        let g = &self.cm.g;
        let b0a = self.b0_of(a);
        let b1p = self.b1_of(p);
        let inner = self.cm.act(&g.mul(a, &b0a), &h.mul(p, &b1p));
        let tail = h.inv(&self.cm.act(&b0a, &b1p));
        self.b1_of(&h.mul(&inner, &tail))
    }

    /// The descended action
    /// `phi^(a) p = phi(a . B0(a))(p . B1(p)) . (phi(B0(a)) B1(p))^-1`.
    pub fn descended_action(&self, a: &Element, p: &Element) -> Element {
        let h = &self.cm.h;
        let g = &self.cm.g;
        let b0a = self.b0_of(a);
        let b1p = self.b1_of(p);
        let inner = self.cm.act(&g.mul(a, &b0a), &h.mul(p, &b1p));
        h.mul(&inner, &h.inv(&self.cm.act(&b0a, &b1p)))
    }

    /// The twist of the operator induced on the semidirect product:
    /// `D(a, p) = phi(B0(a)) B1( phi(B0(a)^-1 . a^-1) p )`.
    pub fn induced_twist(&self, a: &Element, p: &Element) -> Element {
        let g = &self.cm.g;
        let b0a = self.b0_of(a);
        let pulled = self.cm.act(&g.mul(&g.inv(&b0a), &g.inv(a)), p);
        self.cm.act(&b0a, &self.b1_of(&pulled))
    }
}

/// Conditions (i) both components, (ii) compatibility with `t`,
/// (iii) compatibility with the action; exhaustive on finite carriers.
pub fn check_group_rb_pair(pair: &GroupRBPair, budget: u64) -> ValidationReport {
    let finite = pair.cm.is_finite();
    let mut rep = ValidationReport::new(
        format!(
            "rb pair ({}, {}) on {}",
            pair.b1.name, pair.b0.name, pair.cm.name
        ),
        if finite {
            Mode::Exhaustive
        } else {
            Mode::Sampled {
                seed: pair.cm.g.seed() ^ pair.cm.h.seed().rotate_left(32),
                budget,
            }
        },
    );
    rep.absorb("component-h", check_group_rb(&pair.rb1(), budget));
    rep.absorb("component-g", check_group_rb(&pair.rb0(), budget));

    let h = &pair.cm.h;
    let g = &pair.cm.g;
    if finite {
        let h_elems = h.elements().unwrap();
        let g_elems = g.elements().unwrap();

        let mut fail = None;
        for p in &h_elems {
            let lhs = pair.cm.t_of(&pair.b1_of(p));
            let rhs = pair.b0_of(&pair.cm.t_of(p));
            if !g.eq(&lhs, &rhs) {
                fail = Some(format!("p={}", h.describe(p)));
                break;
            }
        }
        match fail {
            None => rep.record_pass("t-compat", h_elems.len() as u64),
            Some(w) => rep.record_fail("t-compat", h_elems.len() as u64, w),
        }

        let mut fail = None;
        'scan: for a in &g_elems {
            for p in &h_elems {
                let lhs = pair.cm.act(&pair.b0_of(a), &pair.b1_of(p));
                let rhs = pair.compat_rhs(a, p);
                if !h.eq(&lhs, &rhs) {
                    fail = Some(format!("a={}, p={}", g.describe(a), h.describe(p)));
                    break 'scan;
                }
            }
        }
        let count = (g_elems.len() * h_elems.len()) as u64;
        match fail {
            None => rep.record_pass("action-compat", count),
            Some(w) => rep.record_fail("action-compat", count, w),
        }
    } else {
        let seed = pair.cm.g.seed() ^ pair.cm.h.seed().rotate_left(32);
        let mut rng = SplitMix::new(seed);
        let mut t_fail = None;
        let mut act_fail = None;
        let mut max_t = 0.0f64;
        let mut max_act = 0.0f64;
        for i in 0..budget {
            let a = g.sample(&mut rng);
            let p = h.sample(&mut rng);
            let lhs = pair.cm.t_of(&pair.b1_of(&p));
            let rhs = pair.b0_of(&pair.cm.t_of(&p));
            if let (Element::Mat(l), Element::Mat(r)) = (&lhs, &rhs) {
                max_t = max_t.max(l.sub(r).frobenius());
            }
            if !g.eq(&lhs, &rhs) && t_fail.is_none() {
                t_fail = Some(format!("sample #{i}: p={}", h.describe(&p)));
            }
            let lhs = pair.cm.act(&pair.b0_of(&a), &pair.b1_of(&p));
            let rhs = pair.compat_rhs(&a, &p);
            if let (Element::Mat(l), Element::Mat(r)) = (&lhs, &rhs) {
                max_act = max_act.max(l.sub(r).frobenius());
            }
            if !h.eq(&lhs, &rhs) && act_fail.is_none() {
                act_fail = Some(format!(
                    "sample #{i}: a={}, p={}",
                    g.describe(&a),
                    h.describe(&p)
                ));
            }
        }
        match t_fail {
            None => rep.record_pass_residual("t-compat", budget, max_t),
            Some(w) => rep.record_fail_residual("t-compat", budget, w, max_t),
        }
        match act_fail {
            None => rep.record_pass_residual("action-compat", budget, max_act),
            Some(w) => rep.record_fail_residual("action-compat", budget, w, max_act),
        }
    }
    rep
}

/// The graph construction. The report's closure records restate the
/// pair conditions as "the graphs are closed substructures of the
/// doubled carriers", so `report.passed()` holds exactly when the pair
/// check passes; when it does, the graphs carry a crossed module which
/// is validated and attached.
#[derive(Debug)]
pub struct GraphModule {
    pub report: ValidationReport,
    /// Present exactly when every closure check passed.
    pub module: Option<GroupCrossedModule>,
}

pub fn graph_pair(pair: &GroupRBPair) -> Result<GraphModule, CheckError> {
    let h = pair.cm.h.finite()?.clone();
    let g = pair.cm.g.finite()?.clone();
    let hn = h.order();
    let gn = g.order();
    let hcar = &pair.cm.h;
    let gcar = &pair.cm.g;
    let mut rep = ValidationReport::new(
        format!(
            "graph of ({}, {}) on {}",
            pair.b1.name, pair.b0.name, pair.cm.name
        ),
        Mode::Exhaustive,
    );

    // closure of Gr(B1) under the doubled product == rb identity for B1
    let rb1 = pair.rb1();
    let mut fail = None;
    'c1: for p in 0..hn {
        for q in 0..hn {
            let ep = Element::Idx(p);
            let eq = Element::Idx(q);
            let first = hcar.mul(&rb1.apply(&ep), &rb1.apply(&eq));
            let second = rb1.twisted_mul(&ep, &eq);
            if !hcar.eq(&first, &rb1.apply(&second)) {
                fail = Some(format!("p={}, q={}", h.element_name(p), h.element_name(q)));
                break 'c1;
            }
        }
    }
    record(&mut rep, "graph-closure-h", (hn * hn) as u64, fail);

    let rb0 = pair.rb0();
    let mut fail = None;
    'c0: for a in 0..gn {
        for b in 0..gn {
            let ea = Element::Idx(a);
            let eb = Element::Idx(b);
            let first = gcar.mul(&rb0.apply(&ea), &rb0.apply(&eb));
            let second = rb0.twisted_mul(&ea, &eb);
            if !gcar.eq(&first, &rb0.apply(&second)) {
                fail = Some(format!("a={}, b={}", g.element_name(a), g.element_name(b)));
                break 'c0;
            }
        }
    }
    record(&mut rep, "graph-closure-g", (gn * gn) as u64, fail);

    // (t, t) maps Gr(B1) into Gr(B0) == t-compatibility
    let mut fail = None;
    for p in 0..hn {
        let ep = Element::Idx(p);
        let lhs = pair.cm.t_of(&pair.b1_of(&ep));
        let rhs = pair.b0_of(&pair.cm.t_of(&ep));
        if !gcar.eq(&lhs, &rhs) {
            fail = Some(format!("p={}", h.element_name(p)));
            break;
        }
    }
    record(&mut rep, "graph-map-image", hn as u64, fail);

    // lifted action maps Gr(B1) into Gr(B1) == action compatibility
    let mut fail = None;
    'act: for a in 0..gn {
        for p in 0..hn {
            let ea = Element::Idx(a);
            let ep = Element::Idx(p);
            let lhs = pair.cm.act(&pair.b0_of(&ea), &pair.b1_of(&ep));
            let rhs = pair.b1_of(&pair.descended_action(&ea, &ep));
            if !hcar.eq(&lhs, &rhs) {
                fail = Some(format!("a={}, p={}", g.element_name(a), h.element_name(p)));
                break 'act;
            }
        }
    }
    record(&mut rep, "graph-action-image", (gn * hn) as u64, fail);

    if !rep.passed() {
        return Ok(GraphModule {
            report: rep,
            module: None,
        });
    }

    // the graphs, parametrized by their second coordinate, carry the
    // descended products; build and validate the crossed module
    let h_graph = descended_table(&h, &rb1, "gr")?;
    let g_graph = descended_table(&g, &rb0, "gr")?;
    let h_group = match promote(h_graph, &mut rep, "graph-h-group") {
        Some(gr) => gr,
        None => {
            return Ok(GraphModule {
                report: rep,
                module: None,
            })
        }
    };
    let g_group = match promote(g_graph, &mut rep, "graph-g-group") {
        Some(gr) => gr,
        None => {
            return Ok(GraphModule {
                report: rep,
                module: None,
            })
        }
    };

    let t_table: Vec<usize> = (0..hn)
        .map(|p| pair.cm.t_of(&Element::Idx(p)).idx())
        .collect();
    let mut act_tables = vec![vec![0usize; hn]; gn];
    for a in 0..gn {
        for p in 0..hn {
            act_tables[a][p] = pair
                .descended_action(&Element::Idx(a), &Element::Idx(p))
                .idx();
        }
    }
    let module = GroupCrossedModule::new(
        format!("graph({})", pair.cm.name),
        CarrierGroup::Finite(h_group),
        CarrierGroup::Finite(g_group),
        GroupMap::named_table("(t,t)|graph", t_table),
        GroupAction::tables(act_tables),
    )?;
    rep.absorb("graph-module", module.validate(0));
    let module = if rep.passed() { Some(module) } else { None };
    Ok(GraphModule {
        report: rep,
        module,
    })
}

fn record(rep: &mut ValidationReport, law: &str, checked: u64, fail: Option<String>) {
    match fail {
        None => rep.record_pass(law, checked),
        Some(w) => rep.record_fail(law, checked, w),
    }
}

fn descended_table(
    fg: &crate::group::FiniteGroup,
    rb: &GroupRB,
    prefix: &str,
) -> Result<RawGroupTable, CheckError> {
    let n = fg.order();
    let names: Vec<String> = (0..n).map(|i| fg.element_name(i).to_string()).collect();
    let mut mul = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            mul[a][b] = rb.twisted_mul(&Element::Idx(a), &Element::Idx(b)).idx();
        }
    }
    RawGroupTable::new(format!("{prefix}({})", fg.name), names, mul, None, None)
}

fn promote(
    raw: RawGroupTable,
    rep: &mut ValidationReport,
    law: &str,
) -> Option<crate::group::FiniteGroup> {
    let check = raw.validate();
    let n = raw.names.len() as u64;
    if check.passed() {
        rep.record_pass(law, n * n * n);
        Some(raw.into_group().expect("validated table"))
    } else {
        let why = check
            .first_failure()
            .map(|c| format!("{}: {}", c.law, c.witness.clone().unwrap_or_default()))
            .unwrap_or_default();
        rep.record_fail(law, n * n * n, why);
        None
    }
}

/// The descended group `(H, a o b = a . B(a) . b . B(a)^-1)`,
/// materialized and validated; refuses if the operator fails its own
/// check first.
pub fn descend_group(rb: &GroupRB) -> Result<Derived<CarrierGroup>, CheckError> {
    let fg = rb.host.finite()?;
    let pre = check_group_rb(rb, 0);
    if !pre.passed() {
        return Err(CheckError::precondition("descended group", pre));
    }
    let raw = descended_table(fg, rb, "desc")?;
    let mut report = raw.validate();
    let group = raw.into_group()?;
    // the closed-form inverse must agree with the table inverse
    let mut fail = None;
    for a in 0..fg.order() {
        let formula = rb.descended_inv(&Element::Idx(a)).idx();
        if group.inv(a) != formula {
            fail = Some(format!("a={}", fg.element_name(a)));
            break;
        }
    }
    match fail {
        None => report.record_pass("descended-inverse-formula", fg.order() as u64),
        Some(w) => report.record_fail("descended-inverse-formula", fg.order() as u64, w),
    }
    if !report.passed() {
        return Err(CheckError::precondition("descended group", report));
    }
    Ok(Derived::new(CarrierGroup::Finite(group), report))
}

/// The descended crossed module
/// `((H, o_B1), (G, o_B0), t, descended action)`; validated.
pub fn descend_group_cm(pair: &GroupRBPair) -> Result<Derived<GroupCrossedModule>, CheckError> {
    let pre = check_group_rb_pair(pair, 0);
    if !pre.passed() {
        return Err(CheckError::precondition("descended crossed module", pre));
    }
    let h = pair.cm.h.finite()?;
    let g = pair.cm.g.finite()?;
    let h_desc = descend_group(&pair.rb1())?.value;
    let g_desc = descend_group(&pair.rb0())?.value;
    let t_table: Vec<usize> = (0..h.order())
        .map(|p| pair.cm.t_of(&Element::Idx(p)).idx())
        .collect();
    let mut act_tables = vec![vec![0usize; h.order()]; g.order()];
    for a in 0..g.order() {
        for p in 0..h.order() {
            act_tables[a][p] = pair
                .descended_action(&Element::Idx(a), &Element::Idx(p))
                .idx();
        }
    }
    let module = GroupCrossedModule::new(
        format!("desc({})", pair.cm.name),
        h_desc,
        g_desc,
        GroupMap::named_table("t", t_table),
        GroupAction::tables(act_tables),
    )?;
    let report = module.validate(0);
    if !report.passed() {
        return Err(CheckError::precondition("descended crossed module", report));
    }
    Ok(Derived::new(module, report))
}

/// The operator `(a, p) -> (B0(a), D(a, p))` on the semidirect product
/// `G x H`; built as a table on the materialized product and
/// re-checked.
pub fn induced_rb_semidirect(pair: &GroupRBPair) -> Result<Derived<GroupRB>, CheckError> {
    let pre = check_group_rb_pair(pair, 0);
    if !pre.passed() {
        return Err(CheckError::precondition("induced semidirect operator", pre));
    }
    let h = pair.cm.h.finite()?;
    let g = pair.cm.g.finite()?;
    let hn = h.order();
    let sd = semidirect_product_group(&pair.cm)?;
    let mut table = vec![0usize; g.order() * hn];
    for a in 0..g.order() {
        for p in 0..hn {
            let b0a = pair.b0_of(&Element::Idx(a)).idx();
            let d = pair.induced_twist(&Element::Idx(a), &Element::Idx(p)).idx();
            table[pair_id(a, p, hn)] = pair_id(b0a, d, hn);
        }
    }
    let rb = GroupRB::new(sd.value, GroupMap::named_table("induced", table))?;
    let mut report = check_group_rb(&rb, 0);
    report.absorb("carrier", sd.report);
    Ok(Derived::new(rb, report))
}

/// The comparison isomorphism
/// `phi(a, p) = (a, p . B1(p) . phi(a) B1(p)^-1)` from the semidirect
/// product of the descended structures to the group descended from the
/// induced semidirect operator. Bijectivity is checked by image
/// counting, homomorphy exhaustively, and the closed-form preimage is
/// verified.
#[derive(Debug, Clone)]
pub struct IsoPhi {
    /// Map on pair ids `(a, p) -> a * |H| + p`.
    pub table: Vec<usize>,
    pub domain: CarrierGroup,
    pub codomain: CarrierGroup,
}

pub fn iso_phi(pair: &GroupRBPair) -> Result<Derived<IsoPhi>, CheckError> {
    let h = pair.cm.h.finite()?;
    let g = pair.cm.g.finite()?;
    let hn = h.order();
    let gn = g.order();
    let n = gn * hn;

    let descended_cm = descend_group_cm(pair)?;
    let domain = semidirect_product_group(&descended_cm.value)?;
    let induced = induced_rb_semidirect(pair)?;
    let codomain = descend_group(&induced.value)?;

    let mut rep = ValidationReport::new(
        format!(
            "comparison isomorphism for ({}, {})",
            pair.b1.name, pair.b0.name
        ),
        Mode::Exhaustive,
    );
    rep.absorb("domain", domain.report.clone());
    rep.absorb("codomain", codomain.report.clone());

    let hcar = &pair.cm.h;
    let mut table = vec![0usize; n];
    for a in 0..gn {
        for p in 0..hn {
            let ep = Element::Idx(p);
            let b1p = pair.b1_of(&ep);
            let second = hcar.mul(
                &hcar.mul(&ep, &b1p),
                &hcar.inv(&pair.cm.act(&Element::Idx(a), &b1p)),
            );
            table[pair_id(a, p, hn)] = pair_id(a, second.idx(), hn);
        }
    }

    // bijectivity by image counting
    let mut seen = vec![false; n];
    for &v in &table {
        seen[v] = true;
    }
    if seen.iter().all(|&s| s) {
        rep.record_pass("bijective", n as u64);
    } else {
        let missing = seen.iter().position(|&s| !s).unwrap();
        rep.record_fail("bijective", n as u64, format!("id {missing} not attained"));
    }

    // phi fixes both axes
    let dom = domain.value.finite()?;
    let cod = codomain.value.finite()?;
    let mut fail = None;
    for a in 0..gn {
        if table[pair_id(a, h.identity(), hn)] != pair_id(a, h.identity(), hn) {
            fail = Some(format!("a={}", g.element_name(a)));
            break;
        }
    }
    record(&mut rep, "fixes-g-axis", gn as u64, fail);
    let mut fail = None;
    for p in 0..hn {
        if table[pair_id(g.identity(), p, hn)] != pair_id(g.identity(), p, hn) {
            fail = Some(format!("p={}", h.element_name(p)));
            break;
        }
    }
    record(&mut rep, "fixes-h-axis", hn as u64, fail);

    // homomorphism over all pairs
    let mut fail = None;
    'hom: for x in 0..n {
        for y in 0..n {
            if table[dom.mul(x, y)] != cod.mul(table[x], table[y]) {
                let (a, p) = unpair_id(x, hn);
                let (b, q) = unpair_id(y, hn);
                fail = Some(format!(
                    "x=({}|{}), y=({}|{})",
                    g.element_name(a),
                    h.element_name(p),
                    g.element_name(b),
                    h.element_name(q)
                ));
                break 'hom;
            }
        }
    }
    record(&mut rep, "homomorphism", (n * n) as u64, fail);

    // closed-form preimage: phi(b, phi^(b) phi(B0(b)^-1 . b^-1) q) = (b, q)
    let gcar = &pair.cm.g;
    let mut fail = None;
    'pre: for b in 0..gn {
        let eb = Element::Idx(b);
        let b0b = pair.b0_of(&eb);
        let conjugator = gcar.mul(&gcar.inv(&b0b), &gcar.inv(&eb));
        for q in 0..hn {
            let pulled = pair.cm.act(&conjugator, &Element::Idx(q));
            let p = pair.descended_action(&eb, &pulled);
            if table[pair_id(b, p.idx(), hn)] != pair_id(b, q, hn) {
                fail = Some(format!("b={}, q={}", g.element_name(b), h.element_name(q)));
                break 'pre;
            }
        }
    }
    record(&mut rep, "preimage-formula", n as u64, fail);

    // the surjectivity mechanism in closed form:
    // phi(a, phi^(a) p) = (a, phi(a . B0(a)) p)
    let mut fail = None;
    'surj: for a in 0..gn {
        let ea = Element::Idx(a);
        let twisted = gcar.mul(&ea, &pair.b0_of(&ea));
        for p in 0..hn {
            let lhs = table[pair_id(a, pair.descended_action(&ea, &Element::Idx(p)).idx(), hn)];
            let rhs = pair_id(a, pair.cm.act(&twisted, &Element::Idx(p)).idx(), hn);
            if lhs != rhs {
                fail = Some(format!("a={}, p={}", g.element_name(a), h.element_name(p)));
                break 'surj;
            }
        }
    }
    record(&mut rep, "image-formula", n as u64, fail);

    let iso = IsoPhi {
        table,
        domain: domain.value,
        codomain: codomain.value,
    };
    Ok(Derived::new(iso, rep))
}

/// Factorization operator on a finite group: given an exact
/// factorization `G = A . K` (unique decomposition `g = a k`), the map
/// `g -> k^-1` as a table.
pub fn factorization_table(
    fg: &crate::group::FiniteGroup,
    subgroup_a: &[usize],
    subgroup_k: &[usize],
) -> Result<GroupMap, CheckError> {
    let n = fg.order();
    let mut table = vec![None; n];
    for &a in subgroup_a {
        for &k in subgroup_k {
            let prod = fg.mul(a, k);
            if table[prod].is_some() {
                return Err(CheckError::Structural(format!(
                    "factorization is not unique at {}",
                    fg.element_name(prod)
                )));
            }
            table[prod] = Some(fg.inv(k));
        }
    }
    let entries: Result<Vec<usize>, CheckError> = table
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| {
                CheckError::Structural(format!(
                    "element {} is not reached by the factorization",
                    fg.element_name(i)
                ))
            })
        })
        .collect();
    Ok(GroupMap::named_table("factorization", entries?))
}

/// The factorization operator on the symmetric group S3 with
/// `A = <(123)>` and `K = <(12)>`.
pub fn s3_factorization_map() -> GroupMap {
    let fg = crate::group::finite::s3();
    // ids in the fixed order e,(12),(123),(132),(13),(23)
    factorization_table(&fg, &[0, 2, 3], &[0, 1]).expect("S3 = <(123)> . <(12)> exactly")
}
