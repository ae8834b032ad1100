//! Group carriers with two equality regimes, and the serializable maps
//! and actions that live on them.
//!
//! Finite carriers get exhaustive sweeps and exact equality; matrix
//! carriers get seeded sampling and tolerance equality. The regime is a
//! property of the carrier, inherited by every downstream checker.

pub mod finite;
pub mod matrix;

use crate::mat::Mat;
use crate::report::{CheckError, Mode, ValidationReport};
use crate::rng::SplitMix;

pub use finite::{FiniteGroup, RawGroupTable};
pub use matrix::{Family, MatrixGroup};

/// An element of whichever carrier it came from: an id into a Cayley
/// table, or a concrete matrix.
#[derive(Debug, Clone)]
pub enum Element {
    Idx(usize),
    Mat(Mat<f64>),
}

impl Element {
    pub fn idx(&self) -> usize {
        match self {
            Element::Idx(i) => *i,
            Element::Mat(_) => panic!("matrix element where a finite id was expected"),
        }
    }

    pub fn mat(&self) -> &Mat<f64> {
        match self {
            Element::Mat(m) => m,
            Element::Idx(_) => panic!("finite id where a matrix element was expected"),
        }
    }
}

#[derive(Debug, Clone)]
pub enum CarrierGroup {
    Finite(FiniteGroup),
    Matrix(MatrixGroup),
}

impl CarrierGroup {
    pub fn name(&self) -> String {
        match self {
            CarrierGroup::Finite(g) => g.name.clone(),
            CarrierGroup::Matrix(g) => g.family.name(),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, CarrierGroup::Finite(_))
    }

    pub fn finite(&self) -> Result<&FiniteGroup, CheckError> {
        match self {
            CarrierGroup::Finite(g) => Ok(g),
            CarrierGroup::Matrix(g) => Err(CheckError::Unsupported(format!(
                "operation requires a finite carrier, got matrix family {}",
                g.family.name()
            ))),
        }
    }

    pub fn matrix(&self) -> Result<&MatrixGroup, CheckError> {
        match self {
            CarrierGroup::Matrix(g) => Ok(g),
            CarrierGroup::Finite(g) => Err(CheckError::Unsupported(format!(
                "operation requires a matrix carrier, got finite group {}",
                g.name
            ))),
        }
    }

    pub fn order(&self) -> Option<usize> {
        match self {
            CarrierGroup::Finite(g) => Some(g.order()),
            CarrierGroup::Matrix(_) => None,
        }
    }

    pub fn identity(&self) -> Element {
        match self {
            CarrierGroup::Finite(g) => Element::Idx(g.identity()),
            CarrierGroup::Matrix(g) => Element::Mat(g.identity()),
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        match self {
            CarrierGroup::Finite(g) => Element::Idx(g.mul(a.idx(), b.idx())),
            CarrierGroup::Matrix(g) => Element::Mat(g.mul(a.mat(), b.mat())),
        }
    }

    pub fn inv(&self, a: &Element) -> Element {
        match self {
            CarrierGroup::Finite(g) => Element::Idx(g.inv(a.idx())),
            CarrierGroup::Matrix(g) => Element::Mat(g.inv(a.mat())),
        }
    }

    pub fn eq(&self, a: &Element, b: &Element) -> bool {
        match self {
            CarrierGroup::Finite(_) => a.idx() == b.idx(),
            CarrierGroup::Matrix(g) => g.eq(a.mat(), b.mat()),
        }
    }

    /// `a . b . a^-1`.
    pub fn conjugate(&self, a: &Element, b: &Element) -> Element {
        self.mul(&self.mul(a, b), &self.inv(a))
    }

    /// All elements of a finite carrier, in table order.
    pub fn elements(&self) -> Option<Vec<Element>> {
        match self {
            CarrierGroup::Finite(g) => Some((0..g.order()).map(Element::Idx).collect()),
            CarrierGroup::Matrix(_) => None,
        }
    }

    pub fn sample(&self, rng: &mut SplitMix) -> Element {
        match self {
            CarrierGroup::Finite(g) => Element::Idx(rng.next_index(g.order())),
            CarrierGroup::Matrix(g) => Element::Mat(g.sample(rng)),
        }
    }

    /// Seed recorded in sampled reports; finite carriers are always
    /// exhaustive so the value is irrelevant there.
    pub fn seed(&self) -> u64 {
        match self {
            CarrierGroup::Finite(_) => 0,
            CarrierGroup::Matrix(g) => g.seed,
        }
    }

    pub fn describe(&self, e: &Element) -> String {
        match self {
            CarrierGroup::Finite(g) => g.element_name(e.idx()).to_string(),
            CarrierGroup::Matrix(g) => g.describe(e.mat()),
        }
    }
}

/// A serializable map between carriers: an index table for finite
/// domains, or a named closed form from the registry for matrix (and
/// some finite) domains.
#[derive(Debug, Clone)]
pub enum MapBody {
    /// Total index table over the domain's elements.
    Table(Vec<usize>),
    /// `x -> x^-1`.
    Inverse,
    /// `x -> x`.
    Identity,
    /// `x -> e` (the constant homomorphism).
    ConstantIdentity,
    /// On the Heisenberg carrier: write `m = a.k` with `a` in
    /// `exp(span{e1})` and `k` in `exp(span{e2, e3})`, return `k^-1`.
    HeisFactorInverse,
    /// A linear map on an abelian block carrier, acting on the vector
    /// part. Every linear map is an endomorphism of `(R^k, +)`.
    LinearAbelian(Mat<f64>),
}

#[derive(Debug, Clone)]
pub struct GroupMap {
    pub name: String,
    pub body: MapBody,
}

impl GroupMap {
    pub fn table(entries: Vec<usize>) -> Self {
        GroupMap {
            name: "table".into(),
            body: MapBody::Table(entries),
        }
    }

    pub fn named_table(name: impl Into<String>, entries: Vec<usize>) -> Self {
        GroupMap {
            name: name.into(),
            body: MapBody::Table(entries),
        }
    }

    pub fn inverse() -> Self {
        GroupMap {
            name: "inverse".into(),
            body: MapBody::Inverse,
        }
    }

    pub fn identity() -> Self {
        GroupMap {
            name: "identity".into(),
            body: MapBody::Identity,
        }
    }

    pub fn constant_identity() -> Self {
        GroupMap {
            name: "constant-e".into(),
            body: MapBody::ConstantIdentity,
        }
    }

    pub fn heis_factor_inverse() -> Self {
        GroupMap {
            name: "heis-factor-inverse".into(),
            body: MapBody::HeisFactorInverse,
        }
    }

    pub fn linear_abelian(m: Mat<f64>) -> Self {
        GroupMap {
            name: "linear".into(),
            body: MapBody::LinearAbelian(m),
        }
    }

    /// Whether this map can be differentiated at the identity (i.e. is
    /// a registry closed form on a matrix carrier).
    pub fn is_closed_form(&self) -> bool {
        !matches!(self.body, MapBody::Table(_))
    }

    /// Checks totality against the declared domain and codomain.
    pub fn check_total(&self, dom: &CarrierGroup, cod: &CarrierGroup) -> Result<(), CheckError> {
        match &self.body {
            MapBody::Table(entries) => {
                let dn = dom.finite()?.order();
                let cn = cod.finite()?.order();
                if entries.len() != dn {
                    return Err(CheckError::Structural(format!(
                        "map `{}` has {} entries for a domain of order {dn}",
                        self.name,
                        entries.len()
                    )));
                }
                if let Some(&bad) = entries.iter().find(|&&v| v >= cn) {
                    return Err(CheckError::Structural(format!(
                        "map `{}` image id {bad} outside codomain of order {cn}",
                        self.name
                    )));
                }
                Ok(())
            }
            MapBody::HeisFactorInverse => {
                let g = dom.matrix()?;
                if g.family != Family::Unipotent(3) {
                    return Err(CheckError::Unsupported(
                        "heis-factor-inverse is only defined on the heisenberg family".into(),
                    ));
                }
                Ok(())
            }
            MapBody::LinearAbelian(m) => {
                let g = dom.matrix()?;
                match g.family {
                    Family::AbelianBlock(k) if m.rows == k && m.cols == k => Ok(()),
                    Family::AbelianBlock(k) => Err(CheckError::Structural(format!(
                        "linear map is {}x{} on an abelian carrier of rank {k}",
                        m.rows, m.cols
                    ))),
                    _ => Err(CheckError::Unsupported(
                        "linear maps are only defined on abelian block carriers".into(),
                    )),
                }
            }
            _ => Ok(()),
        }
    }

    pub fn apply(&self, dom: &CarrierGroup, cod: &CarrierGroup, x: &Element) -> Element {
        match &self.body {
            MapBody::Table(entries) => Element::Idx(entries[x.idx()]),
            MapBody::Inverse => dom.inv(x),
            MapBody::Identity => x.clone(),
            MapBody::ConstantIdentity => cod.identity(),
            MapBody::HeisFactorInverse => {
                // m = [[1, b, c], [0, 1, a], [0, 0, 1]] factors as
                // a-part [[1, b, 0], ...] times k-part [[1, 0, c - a b],
                // [0, 1, a], ...]; return the k-part inverse
                let m = x.mat();
                let b = *m.at(0, 1);
                let a = *m.at(1, 2);
                let c = *m.at(0, 2);
                let mut k_inv = Mat::<f64>::identity(3);
                k_inv.set(1, 2, -a);
                k_inv.set(0, 2, -(c - a * b));
                Element::Mat(k_inv)
            }
            MapBody::LinearAbelian(mat) => {
                let g = dom.matrix().expect("linear map on abelian carrier");
                let coords = g.log_coords(x.mat());
                Element::Mat(g.exp_coords(&mat.apply(&coords)))
            }
        }
    }

    /// Endomorphism application, for maps whose codomain is the domain.
    pub fn apply_endo(&self, host: &CarrierGroup, x: &Element) -> Element {
        self.apply(host, host, x)
    }
}

/// A serializable action of one carrier on another.
#[derive(Debug, Clone)]
pub enum ActionBody {
    /// One permutation table of H per element of G.
    Tables(Vec<Vec<usize>>),
    /// `phi(a) p = a p a^-1`; requires H = G.
    Conjugation,
    /// Every `phi(a)` is the identity automorphism.
    Trivial,
    /// G is a matrix family acting on the abelian block carrier of its
    /// own Lie algebra by conjugation of algebra matrices.
    AdjointLinear,
}

#[derive(Debug, Clone)]
pub struct GroupAction {
    pub name: String,
    pub body: ActionBody,
}

impl GroupAction {
    pub fn tables(tables: Vec<Vec<usize>>) -> Self {
        GroupAction {
            name: "tables".into(),
            body: ActionBody::Tables(tables),
        }
    }

    pub fn conjugation() -> Self {
        GroupAction {
            name: "conjugation".into(),
            body: ActionBody::Conjugation,
        }
    }

    pub fn trivial() -> Self {
        GroupAction {
            name: "trivial".into(),
            body: ActionBody::Trivial,
        }
    }

    pub fn adjoint_linear() -> Self {
        GroupAction {
            name: "adjoint".into(),
            body: ActionBody::AdjointLinear,
        }
    }

    pub fn check_total(&self, g: &CarrierGroup, h: &CarrierGroup) -> Result<(), CheckError> {
        match &self.body {
            ActionBody::Tables(tables) => {
                let gn = g.finite()?.order();
                let hn = h.finite()?.order();
                if tables.len() != gn {
                    return Err(CheckError::Structural(format!(
                        "action has {} tables for a group of order {gn}",
                        tables.len()
                    )));
                }
                for (a, t) in tables.iter().enumerate() {
                    if t.len() != hn || t.iter().any(|&v| v >= hn) {
                        return Err(CheckError::Structural(format!(
                            "action table for element id {a} is not a total map on H"
                        )));
                    }
                }
                Ok(())
            }
            ActionBody::AdjointLinear => {
                let gm = g.matrix()?;
                let hm = h.matrix()?;
                let expect = gm.family.algebra_dim();
                match hm.family {
                    Family::AbelianBlock(k) if k == expect => Ok(()),
                    _ => Err(CheckError::Structural(format!(
                        "adjoint action needs H = abelian-block({expect}), got {}",
                        hm.family.name()
                    ))),
                }
            }
            _ => Ok(()),
        }
    }

    pub fn act(&self, g: &CarrierGroup, h: &CarrierGroup, a: &Element, p: &Element) -> Element {
        match &self.body {
            ActionBody::Tables(tables) => Element::Idx(tables[a.idx()][p.idx()]),
            ActionBody::Conjugation => h.conjugate(a, p),
            ActionBody::Trivial => p.clone(),
            ActionBody::AdjointLinear => {
                let gm = g.matrix().expect("adjoint action acts by a matrix family");
                let hm = h
                    .matrix()
                    .expect("adjoint action on an abelian block carrier");
                let coords = hm.log_coords(p.mat());
                let x = gm.family.algebra_matrix(&coords);
                let conj = a.mat().matmul(&x).matmul(&gm.inv(a.mat()));
                Element::Mat(hm.exp_coords(&gm.family.coords_in_basis(&conj)))
            }
        }
    }
}

/// Exhaustive axiom sweep for finite carriers, seeded sampling for
/// matrix carriers. The report distinguishes the two modes.
pub fn validate_group(g: &CarrierGroup, budget: u64) -> ValidationReport {
    match g {
        CarrierGroup::Finite(fg) => fg.to_raw().validate(),
        CarrierGroup::Matrix(mg) => {
            let mut rng = SplitMix::new(mg.seed);
            let mut rep = ValidationReport::new(
                format!("matrix group {}", mg.family.name()),
                Mode::Sampled {
                    seed: mg.seed,
                    budget,
                },
            );
            let e = mg.identity();
            let mut closure_fail = None;
            let mut identity_fail = None;
            let mut inverse_fail = None;
            let mut assoc_fail = None;
            let mut max_resid = 0.0f64;
            for i in 0..budget {
                let a = mg.sample(&mut rng);
                let b = mg.sample(&mut rng);
                let c = mg.sample(&mut rng);
                let ab = mg.mul(&a, &b);
                if !mg.family.contains(&ab, mg.tolerance) && closure_fail.is_none() {
                    closure_fail = Some(i);
                }
                if !(mg.eq(&mg.mul(&a, &e), &a) && mg.eq(&mg.mul(&e, &a), &a))
                    && identity_fail.is_none()
                {
                    identity_fail = Some(i);
                }
                let ainv = mg.inv(&a);
                if !(mg.eq(&mg.mul(&a, &ainv), &e) && mg.eq(&mg.mul(&ainv, &a), &e))
                    && inverse_fail.is_none()
                {
                    inverse_fail = Some(i);
                }
                let lhs = mg.mul(&ab, &c);
                let rhs = mg.mul(&a, &mg.mul(&b, &c));
                max_resid = max_resid.max(lhs.sub(&rhs).frobenius());
                if !mg.eq(&lhs, &rhs) && assoc_fail.is_none() {
                    assoc_fail = Some(i);
                }
            }
            for (law, fail) in [
                ("closure", closure_fail),
                ("identity", identity_fail),
                ("inverses", inverse_fail),
            ] {
                match fail {
                    None => rep.record_pass(law, budget),
                    Some(i) => rep.record_fail(law, budget, format!("sample #{i}")),
                }
            }
            match assoc_fail {
                None => rep.record_pass_residual("associativity", budget, max_resid),
                Some(i) => rep.record_fail_residual(
                    "associativity",
                    budget,
                    format!("sample #{i}"),
                    max_resid,
                ),
            }
            rep
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_s3_exhaustive() {
        let g = CarrierGroup::Finite(finite::s3());
        let rep = validate_group(&g, 0);
        assert!(rep.passed());
        assert_eq!(rep.mode, Mode::Exhaustive);
        // 6^3 triples swept for associativity
        assert_eq!(rep.checks.last().unwrap().checked, 216);
    }

    #[test]
    fn validate_heisenberg_sampled() {
        let g = CarrierGroup::Matrix(MatrixGroup::heisenberg(1));
        let rep = validate_group(&g, 200);
        assert!(rep.passed());
        assert_eq!(
            rep.mode,
            Mode::Sampled {
                seed: 1,
                budget: 200
            }
        );
    }

    #[test]
    fn conjugation_examples() {
        let g = CarrierGroup::Finite(finite::s3());
        let e = g.identity();
        let b = Element::Idx(2); // (123)
        assert!(g.eq(&g.conjugate(&e, &b), &b));
        let a = Element::Idx(1); // (12)
        assert_eq!(g.describe(&g.conjugate(&a, &b)), "(132)");
        let z = CarrierGroup::Finite(finite::z4());
        let x = Element::Idx(1);
        let y = Element::Idx(3);
        assert!(z.eq(&z.conjugate(&x, &y), &y));
    }

    #[test]
    fn heis_factorization_is_exact() {
        // check m = a-part . k-part with the closed form
        let g = MatrixGroup::heisenberg(3);
        let mut rng = SplitMix::new(17);
        let map = GroupMap::heis_factor_inverse();
        let car = CarrierGroup::Matrix(g.clone());
        for _ in 0..20 {
            let m = g.sample(&mut rng);
            let k_inv = map.apply_endo(&car, &Element::Mat(m.clone()));
            let k = g.inv(k_inv.mat());
            let a = g.mul(&m, &g.inv(&k));
            // a-part must lie in exp(span{e1}): zero (0,2) and (1,2) entries
            assert!(a.at(1, 2).abs() < 1e-12);
            assert!(a.at(0, 2).abs() < 1e-12);
            assert!(g.eq(&g.mul(&a, &k), &m));
        }
    }

    #[test]
    fn adjoint_action_matches_algebra_bracket_direction() {
        // Phi(exp(x)) v = v + [x, v] + ... ; check at first order
        let heis = MatrixGroup::heisenberg(0);
        let ab = MatrixGroup::abelian(3, 0);
        let gcar = CarrierGroup::Matrix(heis.clone());
        let hcar = CarrierGroup::Matrix(ab.clone());
        let act = GroupAction::adjoint_linear();
        let s = 1e-6;
        let a = Element::Mat(heis.exp_coords(&[s, 0.0, 0.0]));
        let v = Element::Mat(ab.exp_coords(&[0.0, 1.0, 0.0]));
        let out = act.act(&gcar, &hcar, &a, &v);
        let coords = ab.log_coords(out.mat());
        // Ad(exp(s e1)) e2 = e2 + s e3 + O(s^2)
        assert!((coords[1] - 1.0).abs() < 1e-9);
        assert!((coords[2] - s).abs() < 1e-9);
    }
}
