//! The super Malcev Yang–Baxter equation (MYBE) in tensor and operator form,
//! solutions built from O-operators, and the symplectic and Rota–Baxter
//! correspondences.

use serde::Serialize;

use crate::algebra::{check_pre_malcev, ProductTable, Superalgebra};
use crate::error::{Error, Result};
use crate::graded::{DirectSum, GradedLinearMap, Parity, Tensor2, Tensor3};
use crate::linalg;
use crate::modules::{dual_representation, semidirect_malcev, Representation};
use crate::operators::{check_o_operator_malcev, pre_malcev_from_o_operator, BilinearForm};
use crate::report::{ViolationReport, Witness};
use crate::scalar::Scalar;

/// A parity-0 tensor `r ∈ A ⊗ A` over a Malcev superalgebra `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MybeCandidate {
    algebra: Superalgebra,
    r: Tensor2,
}

impl MybeCandidate {
    pub fn new(algebra: Superalgebra, r: Tensor2) -> Result<Self> {
        algebra.space().ensure_shape(r.space(), "tensor and algebra")?;
        algebra.product()?;
        if r.parity() != Parity::Even && !r.is_zero() {
            return Err(Error::ParityViolation("only parity-0 tensors are supported".into()));
        }
        let r = r.relabel(algebra.space())?;
        Ok(MybeCandidate { algebra, r })
    }

    pub fn zero(algebra: Superalgebra) -> Result<Self> {
        let r = Tensor2::zero(algebra.space());
        Self::new(algebra, r)
    }

    pub fn algebra(&self) -> &Superalgebra {
        &self.algebra
    }

    pub fn r(&self) -> &Tensor2 {
        &self.r
    }

    pub fn is_skew_supersymmetric(&self) -> bool {
        self.r.is_skew_supersymmetric()
    }
}

/// Placement of the Koszul signs in the three commutator terms.
///
/// For `r = Σ x_i ⊗ y_i`, with `s = (-1)^{|x_j||y_i|}`:
///
/// | term          | `Koszul`                 | `Displayed`              |
/// |---------------|--------------------------|--------------------------|
/// | `[r12, r13]`  | `s [x_i,x_j]⊗y_i⊗y_j`    | `s [x_i,x_j]⊗y_i⊗y_j`    |
/// | `[r12, r23]`  | `x_i⊗[y_i,x_j]⊗y_j`      | `s x_i⊗[y_i,x_j]⊗y_j`    |
/// | `[r13, r23]`  | `s x_i⊗x_j⊗[y_i,y_j]`    | `x_i⊗x_j⊗[y_i,y_j]`      |
///
/// `Koszul` is what the graded commutators of `r12, r13, r23` in
/// `U(A)^{⊗3}` expand to, and is the default. The two agree on purely
/// even algebras.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MybeConvention {
    #[default]
    Koszul,
    Displayed,
}

/// `[r12,r13] + [r12,r23] + [r13,r23]` under the default sign convention.
pub fn mybe_lhs(c: &MybeCandidate) -> Tensor3 {
    mybe_lhs_with(c, MybeConvention::Koszul)
}

pub fn mybe_lhs_with(c: &MybeCandidate, conv: MybeConvention) -> Tensor3 {
    let space = c.algebra.space();
    let t = c.algebra.product().expect("checked at construction");
    let p = c.algebra.bits();
    let entries = c.r.entries();
    let mut out = Tensor3::zero(space);
    for (i, j, a) in &entries {
        for (k, l, b) in &entries {
            let ab = a * b;
            let s_ab = if p[*k] * p[*j] == 1 { -&ab } else { ab.clone() };
            let (c12, c23) = match conv {
                MybeConvention::Koszul => (&ab, &s_ab),
                MybeConvention::Displayed => (&s_ab, &ab),
            };
            add_bracket(&mut out, t, *i, *k, &s_ab, |m| (m, *j, *l));
            add_bracket(&mut out, t, *j, *k, c12, |m| (*i, m, *l));
            add_bracket(&mut out, t, *j, *l, c23, |m| (*i, *k, m));
        }
    }
    out
}

fn add_bracket(out: &mut Tensor3, t: &ProductTable, x: usize, y: usize, c: &Scalar, slot: impl Fn(usize) -> (usize, usize, usize)) {
    for (m, v) in t.cell(x, y).iter().enumerate() {
        if !v.is_zero() {
            let (a, b, d) = slot(m);
            out.add_term(a, b, d, v * c);
        }
    }
}

/// [`mybe_lhs`] as a report over basis triples: each nonzero coefficient of
/// the left-hand side is one violation, witnessed by its index triple.
pub fn mybe_report(c: &MybeCandidate) -> ViolationReport {
    let n = c.algebra.dim();
    let all = mybe_lhs(c)
        .iter()
        .map(|(&(i, j, k), v)| Witness {
            clause: None,
            indices: vec![i, j, k],
            leftover: vec![v.clone()],
        })
        .collect();
    ViolationReport::from_witnesses("mybe", 3, n * n * n, all)
}

/// How a tensor is read as a map `A* → A`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RMapConvention {
    /// `r(b_a*) = -Σ_b c_ab b_b` in every parity. With this reading the
    /// operator form is equivalent to the tensor form.
    #[default]
    Negated,
    /// `<x* ⊗ y*, r> = <y*, r(x*)>` with `<a1*⊗a2*, b1⊗b2> = (-1)^{|a2*||b1|}<a1*,b1><a2*,b2>`,
    /// so `r(b_a*) = Σ_b (-1)^{|b_a||b_b|} c_ab b_b`. Differs from `Negated`
    /// by the sign on the even block only.
    Pairing,
}

/// `r` as an even map `A* → A` under the default convention.
pub fn r_as_map(c: &MybeCandidate) -> GradedLinearMap {
    r_as_map_with(c, RMapConvention::Negated)
}

pub fn r_as_map_with(c: &MybeCandidate, conv: RMapConvention) -> GradedLinearMap {
    let space = c.algebra.space();
    let dual = space.dual();
    let n = space.dim();
    let mut m = linalg::zeros(n, n);
    for (a, b, v) in c.r.entries() {
        m[b][a] = match conv {
            RMapConvention::Pairing if space.parity(a).is_odd() && space.parity(b).is_odd() => -v,
            RMapConvention::Pairing => v,
            RMapConvention::Negated => -v,
        };
    }
    GradedLinearMap::new(dual, space.clone(), m, Parity::Even).expect("parity-0 tensor gives an even map")
}

/// `[r(x*), r(y*)] = r(ad*(r(x*))y* - (-1)^{|x*||y*|} ad*(r(y*))x*)` on dual basis
/// pairs, that is, `r` is an O-operator for the coadjoint representation.
/// A tensor that is not skew-supersymmetric is flagged with `"skew-supersymmetric"`
/// witnesses before the operator identity is scanned.
pub fn check_operator_form(c: &MybeCandidate) -> Result<ViolationReport> {
    let co = dual_representation(&Representation::adjoint(&c.algebra)?);
    let map = r_as_map(c);
    let mut op = check_o_operator_malcev(&map, &co)?;
    op.identity = "operator-form".into();
    let skew = skew_defects(&c.r);
    if skew.is_empty() {
        return Ok(op);
    }
    let flags = ViolationReport::from_witnesses("operator-form", 2, 0, skew);
    Ok(ViolationReport::merge("operator-form", vec![flags, op]))
}

fn skew_defects(r: &Tensor2) -> Vec<Witness> {
    let sum = r.add(&r.sigma()).expect("same space and parity");
    sum.entries()
        .into_iter()
        .filter(|(i, j, _)| i <= j)
        .map(|(i, j, v)| Witness {
            clause: Some("skew-supersymmetric".into()),
            indices: vec![i, j],
            leftover: vec![v],
        })
        .collect()
}

/// `x* · y* = ad*(r(x*)) y*` on `A*`.
pub fn pre_malcev_on_dual_from_r(c: &MybeCandidate) -> Result<Superalgebra> {
    let report = check_operator_form(c)?;
    if !report.holds() {
        return Err(Error::Precondition(Box::new(report)));
    }
    let co = dual_representation(&Representation::adjoint(&c.algebra)?);
    pre_malcev_from_o_operator(&r_as_map(c), &co)
}

/// `A ⋉_{ρ*} V*` and the positions of `A` and `V*` in its basis.
pub fn double(rep: &Representation) -> Result<(Superalgebra, DirectSum)> {
    let dual = dual_representation(rep);
    let alg = semidirect_malcev(&dual)?;
    let ds = rep.algebra().space().direct_sum(dual.space());
    Ok((alg, ds))
}

/// `r = T - σ(T)` in `A ⋉_{ρ*} V*`, where `T = Σ_j T(u_j) ⊗ u_j*`.
pub fn r_from_o_operator(t: &GradedLinearMap, rep: &Representation) -> Result<MybeCandidate> {
    if t.parity() != Parity::Even && !t.is_zero() {
        return Err(Error::ParityViolation("O-operator must be even".into()));
    }
    rep.space().ensure_shape(t.domain(), "map domain")?;
    rep.algebra().space().ensure_shape(t.codomain(), "map codomain")?;
    let (alg, ds) = double(rep)?;
    let n = ds.space.dim();
    let mut coeffs = linalg::zeros(n, n);
    for (a, row) in t.matrix().iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            coeffs[ds.left[a]][ds.right[j]] = v.clone();
        }
    }
    let tt = Tensor2::new(ds.space.clone(), coeffs, Parity::Even)?;
    let r = tt.sub(&tt.sigma())?;
    MybeCandidate::new(alg, r)
}

/// `ω(x, y) = <r⁻¹(x), y>` for an invertible skew-supersymmetric `r`.
pub fn symplectic_from_r(c: &MybeCandidate) -> Result<BilinearForm> {
    if !c.is_skew_supersymmetric() {
        return Err(Error::NotApplicable("r is not skew-supersymmetric".into()));
    }
    let inv = r_as_map(c).inverse()?;
    let n = c.algebra.dim();
    BilinearForm::new(c.algebra.space().clone(), linalg::transpose(inv.matrix(), n))
}

/// `r̃ = r ∘ φ` with `<φ(x), y> = B(x, y)`, for `B` supersymmetric, nondegenerate and invariant.
pub fn rb_from_invariant_form(c: &MybeCandidate, b: &BilinearForm) -> Result<GradedLinearMap> {
    c.algebra.space().ensure_shape(b.space(), "form and algebra")?;
    if !c.is_skew_supersymmetric() {
        return Err(Error::NotApplicable("r is not skew-supersymmetric".into()));
    }
    if !b.is_supersymmetric() {
        return Err(Error::NotApplicable("bilinear form is not supersymmetric".into()));
    }
    if !b.is_nondegenerate() {
        return Err(Error::NotApplicable("bilinear form is degenerate".into()));
    }
    if !b.is_invariant(&c.algebra)? {
        return Err(Error::NotApplicable("bilinear form is not invariant".into()));
    }
    let space = c.algebra.space();
    let n = space.dim();
    let phi = GradedLinearMap::new(space.clone(), space.dual(), linalg::transpose(b.matrix(), n), Parity::Even)?;
    r_as_map(c).compose(&phi)
}

/// `r = Σ (e_i ⊗ e_i* - e_i* ⊗ e_i) + Σ (f_j ⊗ f_j* + f_j* ⊗ f_j)` in
/// `A^C ⋉_{L*} (A^C)*`, where `A^C` is the commutator of the pre-Malcev
/// product `P` and `L` its left multiplication representation.
pub fn canonical_r(p: &Superalgebra) -> Result<MybeCandidate> {
    let report = check_pre_malcev(p)?;
    if !report.holds() {
        return Err(Error::Precondition(Box::new(report)));
    }
    let l = Representation::left_multiplication(p)?;
    let (alg, ds) = double(&l)?;
    let n = ds.space.dim();
    let mut coeffs = linalg::zeros(n, n);
    for i in 0..p.dim() {
        let (x, xs) = (ds.left[i], ds.right[i]);
        coeffs[x][xs] = Scalar::one();
        coeffs[xs][x] = if p.space().parity(i).is_odd() { Scalar::one() } else { -Scalar::one() };
    }
    MybeCandidate::new(alg, Tensor2::new(ds.space.clone(), coeffs, Parity::Even)?)
}
