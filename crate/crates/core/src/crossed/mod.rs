//! Crossed modules of groups and of Lie algebras, their validators,
//! and the semidirect-product constructions they induce.

pub mod algebra;

use crate::group::{CarrierGroup, Element, FiniteGroup, GroupAction, GroupMap, RawGroupTable};
use crate::report::{CheckError, Derived, Mode, ValidationReport};
use crate::rng::SplitMix;

pub use algebra::AlgebraCrossedModule;

/// `(H, G, t, Phi)`: `t` a homomorphism, `Phi` an action of G on H by
/// automorphisms, subject to the Peiffer and equivariance identities.
#[derive(Debug, Clone)]
pub struct GroupCrossedModule {
    pub name: String,
    pub h: CarrierGroup,
    pub g: CarrierGroup,
    pub t: GroupMap,
    pub phi: GroupAction,
}

/// Block index of the pair `(a, p)` with `p` minor.
pub fn pair_id(a: usize, p: usize, minor_order: usize) -> usize {
    a * minor_order + p
}

pub fn unpair_id(id: usize, minor_order: usize) -> (usize, usize) {
    (id / minor_order, id % minor_order)
}

impl GroupCrossedModule {
    /// Structural checks only (totality of `t` and `Phi`).
    pub fn new(
        name: impl Into<String>,
        h: CarrierGroup,
        g: CarrierGroup,
        t: GroupMap,
        phi: GroupAction,
    ) -> Result<Self, CheckError> {
        t.check_total(&h, &g)?;
        phi.check_total(&g, &h)?;
        Ok(GroupCrossedModule {
            name: name.into(),
            h,
            g,
            t,
            phi,
        })
    }

    /// `(G, G, id, conjugation)`.
    pub fn conjugation(g: CarrierGroup) -> Self {
        let name = format!("({0}, {0}, id, conj)", g.name());
        GroupCrossedModule {
            name,
            h: g.clone(),
            g,
            t: GroupMap::identity(),
            phi: GroupAction::conjugation(),
        }
    }

    /// `(H, 1, t = e, trivial)`: any group over the trivial base.
    pub fn over_trivial_base(h: CarrierGroup, trivial_g: CarrierGroup) -> Self {
        let name = format!("({}, 1, e, trivial)", h.name());
        GroupCrossedModule {
            name,
            h,
            g: trivial_g,
            t: GroupMap::constant_identity(),
            phi: GroupAction::trivial(),
        }
    }

    pub fn t_of(&self, p: &Element) -> Element {
        self.t.apply(&self.h, &self.g, p)
    }

    pub fn act(&self, a: &Element, p: &Element) -> Element {
        self.phi.act(&self.g, &self.h, a, p)
    }

    pub fn is_finite(&self) -> bool {
        self.h.is_finite() && self.g.is_finite()
    }

    fn sample_seed(&self) -> u64 {
        self.g.seed() ^ self.h.seed().rotate_left(32)
    }

    /// Exhaustive on finite carriers, sampled otherwise. Laws checked:
    /// `t` homomorphism; action unit, composition, automorphism (with
    /// bijectivity by image counting when finite, by acting with the
    /// inverse element when sampled); Peiffer identity; equivariance.
    pub fn validate(&self, budget: u64) -> ValidationReport {
        if self.is_finite() {
            self.validate_exhaustive()
        } else {
            self.validate_sampled(budget)
        }
    }

    pub fn into_validated(self, budget: u64) -> Result<Self, CheckError> {
        let rep = self.validate(budget);
        if rep.passed() {
            Ok(self)
        } else {
            Err(CheckError::precondition(
                format!("crossed module {}", self.name),
                rep,
            ))
        }
    }

    fn validate_exhaustive(&self) -> ValidationReport {
        let mut rep =
            ValidationReport::new(format!("crossed module {}", self.name), Mode::Exhaustive);
        let h = &self.h;
        let g = &self.g;
        let hn = h.order().unwrap();
        let gn = g.order().unwrap();
        let h_elems: Vec<Element> = h.elements().unwrap();
        let g_elems: Vec<Element> = g.elements().unwrap();

        let mut fail = None;
        for p in &h_elems {
            for q in &h_elems {
                let lhs = self.t_of(&h.mul(p, q));
                let rhs = g.mul(&self.t_of(p), &self.t_of(q));
                if !g.eq(&lhs, &rhs) {
                    fail = Some(format!("p={}, q={}", h.describe(p), h.describe(q)));
                    break;
                }
            }
            if fail.is_some() {
                break;
            }
        }
        record(&mut rep, "t-homomorphism", (hn * hn) as u64, fail);

        let e_g = g.identity();
        let mut fail = None;
        for p in &h_elems {
            if !h.eq(&self.act(&e_g, p), p) {
                fail = Some(format!("p={}", h.describe(p)));
                break;
            }
        }
        record(&mut rep, "action-unit", hn as u64, fail);

        let mut fail = None;
        'comp: for a in &g_elems {
            for b in &g_elems {
                let ab = g.mul(a, b);
                for p in &h_elems {
                    let lhs = self.act(a, &self.act(b, p));
                    let rhs = self.act(&ab, p);
                    if !h.eq(&lhs, &rhs) {
                        fail = Some(format!(
                            "a={}, b={}, p={}",
                            g.describe(a),
                            g.describe(b),
                            h.describe(p)
                        ));
                        break 'comp;
                    }
                }
            }
        }
        record(&mut rep, "action-composition", (gn * gn * hn) as u64, fail);

        let mut fail = None;
        'auto: for a in &g_elems {
            let mut seen = vec![false; hn];
            for p in &h_elems {
                seen[self.act(a, p).idx()] = true;
            }
            if !seen.iter().all(|&s| s) {
                fail = Some(format!("a={} is not bijective on H", g.describe(a)));
                break 'auto;
            }
            for p in &h_elems {
                for q in &h_elems {
                    let lhs = self.act(a, &h.mul(p, q));
                    let rhs = h.mul(&self.act(a, p), &self.act(a, q));
                    if !h.eq(&lhs, &rhs) {
                        fail = Some(format!(
                            "a={}, p={}, q={}",
                            g.describe(a),
                            h.describe(p),
                            h.describe(q)
                        ));
                        break 'auto;
                    }
                }
            }
        }
        record(
            &mut rep,
            "action-automorphism",
            (gn * hn * (hn + 1)) as u64,
            fail,
        );

        let mut fail = None;
        'peif: for p in &h_elems {
            let tp = self.t_of(p);
            for q in &h_elems {
                let lhs = self.act(&tp, q);
                let rhs = h.conjugate(p, q);
                if !h.eq(&lhs, &rhs) {
                    fail = Some(format!("p={}, q={}", h.describe(p), h.describe(q)));
                    break 'peif;
                }
            }
        }
        record(&mut rep, "peiffer", (hn * hn) as u64, fail);

        let mut fail = None;
        'equi: for a in &g_elems {
            for p in &h_elems {
                let lhs = self.t_of(&self.act(a, p));
                let rhs = g.conjugate(a, &self.t_of(p));
                if !g.eq(&lhs, &rhs) {
                    fail = Some(format!("a={}, p={}", g.describe(a), h.describe(p)));
                    break 'equi;
                }
            }
        }
        record(&mut rep, "equivariance", (gn * hn) as u64, fail);
        rep
    }

    fn validate_sampled(&self, budget: u64) -> ValidationReport {
        let seed = self.sample_seed();
        let mut rep = ValidationReport::new(
            format!("crossed module {}", self.name),
            Mode::Sampled { seed, budget },
        );
        let mut rng = SplitMix::new(seed);
        let h = &self.h;
        let g = &self.g;
        let e_g = g.identity();

        let mut t_hom = None;
        let mut unit = None;
        let mut comp = None;
        let mut auto = None;
        let mut invert = None;
        let mut peiffer = None;
        let mut equi = None;
        for i in 0..budget {
            let a = g.sample(&mut rng);
            let b = g.sample(&mut rng);
            let p = h.sample(&mut rng);
            let q = h.sample(&mut rng);

            if t_hom.is_none() {
                let lhs = self.t_of(&h.mul(&p, &q));
                let rhs = g.mul(&self.t_of(&p), &self.t_of(&q));
                if !g.eq(&lhs, &rhs) {
                    t_hom = Some(i);
                }
            }
            if unit.is_none() && !h.eq(&self.act(&e_g, &p), &p) {
                unit = Some(i);
            }
            if comp.is_none() {
                let lhs = self.act(&a, &self.act(&b, &p));
                let rhs = self.act(&g.mul(&a, &b), &p);
                if !h.eq(&lhs, &rhs) {
                    comp = Some(i);
                }
            }
            if auto.is_none() {
                let lhs = self.act(&a, &h.mul(&p, &q));
                let rhs = h.mul(&self.act(&a, &p), &self.act(&a, &q));
                if !h.eq(&lhs, &rhs) {
                    auto = Some(i);
                }
            }
            if invert.is_none() {
                let back = self.act(&g.inv(&a), &self.act(&a, &p));
                if !h.eq(&back, &p) {
                    invert = Some(i);
                }
            }
            if peiffer.is_none() {
                let lhs = self.act(&self.t_of(&p), &q);
                let rhs = h.conjugate(&p, &q);
                if !h.eq(&lhs, &rhs) {
                    peiffer = Some(i);
                }
            }
            if equi.is_none() {
                let lhs = self.t_of(&self.act(&a, &p));
                let rhs = g.conjugate(&a, &self.t_of(&p));
                if !g.eq(&lhs, &rhs) {
                    equi = Some(i);
                }
            }
        }
        let mut emit = |law: &str, fail: Option<u64>| match fail {
            None => rep.record_pass(law, budget),
            Some(i) => rep.record_fail(law, budget, format!("sample #{i}")),
        };
        emit("t-homomorphism", t_hom);
        emit("action-unit", unit);
        emit("action-composition", comp);
        emit("action-automorphism", auto);
        emit("action-invertibility", invert);
        emit("peiffer", peiffer);
        emit("equivariance", equi);
        rep
    }
}

fn record(rep: &mut ValidationReport, law: &str, checked: u64, fail: Option<String>) {
    match fail {
        None => rep.record_pass(law, checked),
        Some(w) => rep.record_fail(law, checked, w),
    }
}

/// The group on `G x G` with product
/// `(a, b) . (c, d) = (a c, b a d a^-1)`, materialized as a Cayley
/// table and re-validated. Finite carriers only.
pub fn double_semidirect_group(g: &CarrierGroup) -> Result<Derived<CarrierGroup>, CheckError> {
    let fg = g.finite()?;
    let n = fg.order();
    let names: Vec<String> = (0..n * n)
        .map(|id| {
            let (a, b) = unpair_id(id, n);
            format!("({}|{})", fg.element_name(a), fg.element_name(b))
        })
        .collect();
    let mut mul = vec![vec![0usize; n * n]; n * n];
    for a in 0..n {
        for b in 0..n {
            let left = pair_id(a, b, n);
            for c in 0..n {
                for d in 0..n {
                    let right = pair_id(c, d, n);
                    let first = fg.mul(a, c);
                    let second = fg.mul(b, fg.conjugate(a, d));
                    mul[left][right] = pair_id(first, second, n);
                }
            }
        }
    }
    let raw = RawGroupTable::new(format!("{0}x{0}(twisted)", fg.name), names, mul, None, None)?;
    let report = raw.validate();
    if !report.passed() {
        return Err(CheckError::precondition(
            "double semidirect product",
            report,
        ));
    }
    let group = raw.into_group()?;
    Ok(Derived::new(CarrierGroup::Finite(group), report))
}

/// The lifted crossed module on the doubled carriers:
/// `(H x H, G x G, (t, t), lifted action)` with
/// `phi~((a, b))(p, q) = (phi(a) p, phi(b a)(q p) . (phi(a) p)^-1)`.
pub fn lift_group_cm(cm: &GroupCrossedModule) -> Result<Derived<GroupCrossedModule>, CheckError> {
    let h = cm.h.finite()?;
    let g = cm.g.finite()?;
    let hn = h.order();
    let gn = g.order();
    let h2 = double_semidirect_group(&cm.h)?.value;
    let g2 = double_semidirect_group(&cm.g)?.value;

    let mut t2 = vec![0usize; hn * hn];
    for p in 0..hn {
        for q in 0..hn {
            let tp = cm.t_of(&Element::Idx(p)).idx();
            let tq = cm.t_of(&Element::Idx(q)).idx();
            t2[pair_id(p, q, hn)] = pair_id(tp, tq, gn);
        }
    }

    let mut tables = vec![vec![0usize; hn * hn]; gn * gn];
    for a in 0..gn {
        for b in 0..gn {
            let actor = pair_id(a, b, gn);
            let ea = Element::Idx(a);
            let ba = cm.g.mul(&Element::Idx(b), &ea);
            for p in 0..hn {
                for q in 0..hn {
                    let ep = Element::Idx(p);
                    let eq = Element::Idx(q);
                    let first = cm.act(&ea, &ep);
                    let qp = cm.h.mul(&eq, &ep);
                    let second = cm.h.mul(&cm.act(&ba, &qp), &cm.h.inv(&first));
                    tables[actor][pair_id(p, q, hn)] = pair_id(first.idx(), second.idx(), hn);
                }
            }
        }
    }

    let lifted = GroupCrossedModule::new(
        format!("lift({})", cm.name),
        h2,
        g2,
        GroupMap::named_table("(t,t)", t2),
        GroupAction::tables(tables),
    )?;
    let report = lifted.validate(0);
    Ok(Derived::new(lifted, report))
}

/// The semidirect product `G x H` with
/// `(a, p) . (b, q) = (a b, p . phi(a) q)`, materialized and
/// re-validated. Finite carriers only.
pub fn semidirect_product_group(
    cm: &GroupCrossedModule,
) -> Result<Derived<CarrierGroup>, CheckError> {
    let h = cm.h.finite()?;
    let g = cm.g.finite()?;
    let hn = h.order();
    let gn = g.order();
    let names: Vec<String> = (0..gn * hn)
        .map(|id| {
            let (a, p) = unpair_id(id, hn);
            format!("({}|{})", g.element_name(a), h.element_name(p))
        })
        .collect();
    let mut mul = vec![vec![0usize; gn * hn]; gn * hn];
    for a in 0..gn {
        for p in 0..hn {
            let left = pair_id(a, p, hn);
            let ea = Element::Idx(a);
            for b in 0..gn {
                for q in 0..hn {
                    let right = pair_id(b, q, hn);
                    let first = g.mul(a, b);
                    let second = cm.h.mul(&Element::Idx(p), &cm.act(&ea, &Element::Idx(q)));
                    mul[left][right] = pair_id(first, second.idx(), hn);
                }
            }
        }
    }
    let raw = RawGroupTable::new(
        format!("{}|x{}", g.name, h.name),
        names,
        mul,
        Some(pair_id(g.identity(), h.identity(), hn)),
        None,
    )?;
    let report = raw.validate();
    if !report.passed() {
        return Err(CheckError::precondition("semidirect product", report));
    }
    Ok(Derived::new(
        CarrierGroup::Finite(raw.into_group()?),
        report,
    ))
}

/// Conjugation module over a finite group, the standard exhaustive
/// anchor.
pub fn s3_conjugation_module() -> GroupCrossedModule {
    GroupCrossedModule::conjugation(CarrierGroup::Finite(crate::group::finite::s3()))
}

pub fn finite_group(g: FiniteGroup) -> CarrierGroup {
    CarrierGroup::Finite(g)
}
