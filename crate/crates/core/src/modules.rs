//! Malcev representations, alternative bimodules, duals and semidirect products.

use crate::algebra::{acc_signed, commutator_superalgebra, ProductTable, Superalgebra, MUL};
use crate::error::{Error, Result};
use crate::graded::{GradedLinearMap, Parity, SuperSpace};
use crate::linalg::{self, Matrix};
use crate::report::{scan_operator, ViolationReport};
use crate::scalar::Scalar;

/// An even linear map `ρ: A → gl(V)`, stored as `ρ(b_i)` for each basis element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    algebra: Superalgebra,
    space: SuperSpace,
    action: Vec<GradedLinearMap>,
}

impl Representation {
    pub fn new(algebra: Superalgebra, space: SuperSpace, action: Vec<GradedLinearMap>) -> Result<Self> {
        validate_family(&algebra, &space, &action, "representation")?;
        Ok(Representation { algebra, space, action })
    }

    /// `mats[i]` is the matrix of `ρ(b_i)`; its parity is that of `b_i`.
    pub fn from_matrices(algebra: Superalgebra, space: SuperSpace, mats: Vec<Matrix>) -> Result<Self> {
        let action = maps_from_matrices(&algebra, &space, mats)?;
        Self::new(algebra, space, action)
    }

    pub fn zero(algebra: Superalgebra, space: SuperSpace) -> Self {
        let action = (0..algebra.dim())
            .map(|i| zero_map(&space, algebra.space().parity(i)))
            .collect();
        Representation { algebra, space, action }
    }

    /// `ad(x) y = [x, y]` of the `"mul"` bracket.
    pub fn adjoint(algebra: &Superalgebra) -> Result<Self> {
        let t = algebra.product()?;
        let mats = (0..algebra.dim()).map(|i| left_matrix(t, i)).collect();
        Self::from_matrices(algebra.clone(), algebra.space().clone(), mats)
    }

    /// The dual of the adjoint representation, on `A*`.
    pub fn coadjoint(algebra: &Superalgebra) -> Result<Self> {
        Ok(dual_representation(&Self::adjoint(algebra)?))
    }

    /// Left multiplications `L_x y = x · y` of a pre-Malcev algebra, as an
    /// action of its commutator algebra.
    pub fn left_multiplication(p: &Superalgebra) -> Result<Self> {
        let t = p.product()?;
        let mats = (0..p.dim()).map(|i| left_matrix(t, i)).collect();
        Self::from_matrices(commutator_superalgebra(p, MUL)?, p.space().clone(), mats)
    }

    pub fn algebra(&self) -> &Superalgebra {
        &self.algebra
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn action(&self, i: usize) -> &GradedLinearMap {
        &self.action[i]
    }

    pub fn actions(&self) -> &[GradedLinearMap] {
        &self.action
    }

    /// `ρ(b_i) v`.
    pub fn act(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.action[i].apply_coords(v)
    }

    /// `ρ(x) v` for an algebra element `x` in coordinates.
    pub fn act_by(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.space.dim()];
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                crate::graded::axpy(&mut out, xi, &self.act(i, v));
            }
        }
        out
    }

    /// The same action viewed over a relabelled algebra of the same shape.
    pub fn with_algebra(&self, algebra: Superalgebra) -> Result<Self> {
        self.algebra.space().ensure_shape(algebra.space(), "representation algebra")?;
        Ok(Representation {
            algebra,
            ..self.clone()
        })
    }
}

/// A pair of even actions `𝔩, 𝔯: A → gl(V)` of an alternative algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bimodule {
    algebra: Superalgebra,
    space: SuperSpace,
    left: Vec<GradedLinearMap>,
    right: Vec<GradedLinearMap>,
}

impl Bimodule {
    pub fn new(
        algebra: Superalgebra,
        space: SuperSpace,
        left: Vec<GradedLinearMap>,
        right: Vec<GradedLinearMap>,
    ) -> Result<Self> {
        validate_family(&algebra, &space, &left, "bimodule left action")?;
        validate_family(&algebra, &space, &right, "bimodule right action")?;
        Ok(Bimodule {
            algebra,
            space,
            left,
            right,
        })
    }

    pub fn from_matrices(algebra: Superalgebra, space: SuperSpace, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self> {
        let l = maps_from_matrices(&algebra, &space, left)?;
        let r = maps_from_matrices(&algebra, &space, right)?;
        Self::new(algebra, space, l, r)
    }

    pub fn zero(algebra: Superalgebra, space: SuperSpace) -> Self {
        let z: Vec<GradedLinearMap> = (0..algebra.dim())
            .map(|i| zero_map(&space, algebra.space().parity(i)))
            .collect();
        Bimodule {
            algebra,
            left: z.clone(),
            right: z,
            space,
        }
    }

    /// `𝔩(x) v = x ⋆ v` and `𝔯(x) v = v ⋆ x`.
    pub fn regular(algebra: &Superalgebra) -> Result<Self> {
        let t = algebra.product()?;
        let n = algebra.dim();
        let left = (0..n).map(|i| left_matrix(t, i)).collect();
        let right = (0..n).map(|i| right_matrix(t, i)).collect();
        Self::from_matrices(algebra.clone(), algebra.space().clone(), left, right)
    }

    pub fn algebra(&self) -> &Superalgebra {
        &self.algebra
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn left(&self, i: usize) -> &GradedLinearMap {
        &self.left[i]
    }

    pub fn right(&self, i: usize) -> &GradedLinearMap {
        &self.right[i]
    }

    /// The bimodule with `𝔩` and `𝔯` exchanged.
    pub fn swapped(&self) -> Bimodule {
        Bimodule {
            left: self.right.clone(),
            right: self.left.clone(),
            ..self.clone()
        }
    }

    pub(crate) fn act_left_by(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        combine(&self.left, x, v, self.space.dim())
    }

    pub(crate) fn act_right_by(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        combine(&self.right, x, v, self.space.dim())
    }
}

fn combine(maps: &[GradedLinearMap], x: &[Scalar], v: &[Scalar], dim: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); dim];
    for (i, xi) in x.iter().enumerate() {
        if !xi.is_zero() {
            crate::graded::axpy(&mut out, xi, &maps[i].apply_coords(v));
        }
    }
    out
}

fn zero_map(space: &SuperSpace, parity: Parity) -> GradedLinearMap {
    GradedLinearMap::new(space.clone(), space.clone(), linalg::zeros(space.dim(), space.dim()), parity)
        .expect("zero map is homogeneous of any parity")
}

fn validate_family(algebra: &Superalgebra, space: &SuperSpace, maps: &[GradedLinearMap], what: &str) -> Result<()> {
    if maps.len() != algebra.dim() {
        return Err(Error::dims(format!("{what} (one map per algebra basis element)"), algebra.dim(), maps.len()));
    }
    for (i, m) in maps.iter().enumerate() {
        space.ensure_shape(m.domain(), what)?;
        space.ensure_shape(m.codomain(), what)?;
        let p = algebra.space().parity(i);
        if m.parity() != p && !m.is_zero() {
            return Err(Error::ParityViolation(format!(
                "{what}: action of {} basis element {} must be {p}",
                p,
                algebra.space().label(i)
            )));
        }
    }
    Ok(())
}

fn maps_from_matrices(algebra: &Superalgebra, space: &SuperSpace, mats: Vec<Matrix>) -> Result<Vec<GradedLinearMap>> {
    if mats.len() != algebra.dim() {
        return Err(Error::dims("action matrices", algebra.dim(), mats.len()));
    }
    mats.into_iter()
        .enumerate()
        .map(|(i, m)| GradedLinearMap::new(space.clone(), space.clone(), m, algebra.space().parity(i)))
        .collect()
}

/// Matrix of `y ↦ b_i * y`.
fn left_matrix(t: &ProductTable, i: usize) -> Matrix {
    let n = t.dim();
    let mut m = linalg::zeros(n, n);
    for j in 0..n {
        for (k, c) in t.cell(i, j).iter().enumerate() {
            m[k][j] = c.clone();
        }
    }
    m
}

/// Matrix of `y ↦ y * b_i`.
fn right_matrix(t: &ProductTable, i: usize) -> Matrix {
    let n = t.dim();
    let mut m = linalg::zeros(n, n);
    for j in 0..n {
        for (k, c) in t.cell(j, i).iter().enumerate() {
            m[k][j] = c.clone();
        }
    }
    m
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// The Malcev representation identity on all basis triples of `A`,
/// evaluated column by column on `V`:
/// `ρ([[x,y],z]) = ρ(x)ρ(y)ρ(z) - (-1)^{|z|(|x|+|y|)} ρ(z)ρ(x)ρ(y)
///   + (-1)^{|x|(|y|+|z|)} ρ(y)ρ([z,x]) - (-1)^{|x|(|y|+|z|)} ρ([y,z])ρ(x)`.
pub fn check_malcev_representation(r: &Representation) -> Result<ViolationReport> {
    let t = r.algebra.product()?;
    let p = r.algebra.bits();
    let n = r.algebra.dim();
    let dv = r.space.dim();
    Ok(scan_operator("representation", &[n, n, n], |idx| {
        let (x, y, z) = (idx[0], idx[1], idx[2]);
        let xyz = t.mul_right_basis(t.cell(x, y), z);
        let zx = t.cell(z, x);
        let yz = t.cell(y, z);
        let cols = (0..dv)
            .map(|k| {
                let v = unit(dv, k);
                let mut out = r.act_by(&xyz, &v);
                acc_signed(&mut out, 1, &r.act(x, &r.act(y, &r.act(z, &v))));
                acc_signed(&mut out, p[z] * (p[x] + p[y]), &r.act(z, &r.act(x, &r.act(y, &v))));
                acc_signed(&mut out, 1 + p[x] * (p[y] + p[z]), &r.act(y, &r.act_by(zx, &v)));
                acc_signed(&mut out, p[x] * (p[y] + p[z]), &r.act_by(yz, &r.act(x, &v)));
                out
            })
            .collect();
        vec![(None, cols)]
    }))
}

/// The four bimodule identities on basis pairs of `A`, evaluated on each
/// basis vector `c` of `V`. The signs of the two mixed identities depend on
/// the parity of `c`, so that the identities hold exactly when `A ⋉ V` is
/// alternative.
pub fn check_alternative_bimodule(b: &Bimodule) -> Result<ViolationReport> {
    let t = b.algebra.product()?;
    let p = b.algebra.bits();
    let pv: Vec<u8> = b.space.parities().iter().map(|q| q.bit()).collect();
    let n = b.algebra.dim();
    let dv = b.space.dim();
    let l = |i: usize, v: &[Scalar]| b.left[i].apply_coords(v);
    let r = |i: usize, v: &[Scalar]| b.right[i].apply_coords(v);
    Ok(scan_operator("bimodule", &[n, n], |idx| {
        let (x, y) = (idx[0], idx[1]);
        let sxy = p[x] * p[y];
        let xy = t.cell(x, y);
        let yx = t.cell(y, x);
        let mut c1 = Vec::with_capacity(dv);
        let mut c2 = Vec::with_capacity(dv);
        let mut c3 = Vec::with_capacity(dv);
        let mut c4 = Vec::with_capacity(dv);
        for k in 0..dv {
            let v = unit(dv, k);
            // 𝔩(x⋆y) + s 𝔩(y⋆x) - 𝔩(x)𝔩(y) - s 𝔩(y)𝔩(x)
            let mut e1 = b.act_left_by(xy, &v);
            acc_signed(&mut e1, sxy, &b.act_left_by(yx, &v));
            acc_signed(&mut e1, 1, &l(x, &l(y, &v)));
            acc_signed(&mut e1, 1 + sxy, &l(y, &l(x, &v)));
            c1.push(e1);
            // 𝔯(y)𝔯(x) + s 𝔯(x)𝔯(y) - 𝔯(x⋆y) - s 𝔯(y⋆x)
            let mut e2 = r(y, &r(x, &v));
            acc_signed(&mut e2, sxy, &r(x, &r(y, &v)));
            acc_signed(&mut e2, 1, &b.act_right_by(xy, &v));
            acc_signed(&mut e2, 1 + sxy, &b.act_right_by(yx, &v));
            c2.push(e2);
            // 𝔯(y)𝔯(x) + s' 𝔯(y)𝔩(x) - s' 𝔩(x)𝔯(y) - 𝔯(x⋆y), s' = (-1)^{|x||c|}
            let sxc = p[x] * pv[k];
            let mut e3 = r(y, &r(x, &v));
            acc_signed(&mut e3, sxc, &r(y, &l(x, &v)));
            acc_signed(&mut e3, 1 + sxc, &l(x, &r(y, &v)));
            acc_signed(&mut e3, 1, &b.act_right_by(xy, &v));
            c3.push(e3);
            // 𝔯(y)𝔩(x) + s'' 𝔩(x⋆y) - s'' 𝔩(x)𝔩(y) - 𝔩(x)𝔯(y), s'' = (-1)^{|c||y|}
            let scy = pv[k] * p[y];
            let mut e4 = r(y, &l(x, &v));
            acc_signed(&mut e4, scy, &b.act_left_by(xy, &v));
            acc_signed(&mut e4, 1 + scy, &l(x, &l(y, &v)));
            acc_signed(&mut e4, 1, &l(x, &r(y, &v)));
            c4.push(e4);
        }
        vec![(Some("1"), c1), (Some("2"), c2), (Some("3"), c3), (Some("4"), c4)]
    }))
}

/// `A ⋉_ρ V`: `[x+a, y+b] = [x,y] + ρ(x)b - (-1)^{|x||y|} ρ(y)a`.
pub fn semidirect_malcev(r: &Representation) -> Result<Superalgebra> {
    let t = r.algebra.product()?;
    let ds = r.algebra.space().direct_sum(&r.space);
    let n = r.algebra.dim();
    let dv = r.space.dim();
    let total = ds.space.dim();
    let mut entries = Vec::new();
    for (i, j, k, c) in t.entries() {
        entries.push((ds.left[i], ds.left[j], ds.left[k], c));
    }
    for i in 0..n {
        let pi = r.algebra.space().parity(i);
        for k in 0..dv {
            let col = r.act(i, &unit(dv, k));
            let flip = pi.is_odd() && r.space.parity(k).is_odd();
            for (m, c) in col.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let back = if flip { c.clone() } else { -&c };
                entries.push((ds.left[i], ds.right[k], ds.right[m], c));
                entries.push((ds.right[k], ds.left[i], ds.right[m], back));
            }
        }
    }
    debug_assert!(entries.iter().all(|e| e.0 < total));
    Superalgebra::with_product(ds.space, entries)
}

/// `A ⋉_{𝔩,𝔯} V`: `(x+a) ∘ (y+b) = x⋆y + 𝔩(x)b + 𝔯(y)a`.
pub fn semidirect_alternative(b: &Bimodule) -> Result<Superalgebra> {
    let t = b.algebra.product()?;
    let ds = b.algebra.space().direct_sum(&b.space);
    let n = b.algebra.dim();
    let dv = b.space.dim();
    let mut entries = Vec::new();
    for (i, j, k, c) in t.entries() {
        entries.push((ds.left[i], ds.left[j], ds.left[k], c));
    }
    for i in 0..n {
        for k in 0..dv {
            let v = unit(dv, k);
            for (m, c) in b.left[i].apply_coords(&v).into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((ds.left[i], ds.right[k], ds.right[m], c));
                }
            }
            for (m, c) in b.right[i].apply_coords(&v).into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((ds.right[k], ds.left[i], ds.right[m], c));
                }
            }
        }
    }
    Superalgebra::with_product(ds.space, entries)
}

/// `ρ*` on `V*`, defined by `<ρ*(x)a*, b> = -(-1)^{|x||a*|} <a*, ρ(x)b>`.
/// In matrices: `ρ*(x)[l][k] = -(-1)^{|x| p(k)} ρ(x)[k][l]`.
pub fn dual_representation(r: &Representation) -> Representation {
    let dual = r.space.dual();
    let dv = dual.dim();
    let action = r
        .action
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let px = r.algebra.space().parity(i);
            let mut d = linalg::zeros(dv, dv);
            for (k, row) in m.matrix().iter().enumerate() {
                let odd_swap = px.is_odd() && r.space.parity(k).is_odd();
                for (l, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        d[l][k] = if odd_swap { c.clone() } else { -c };
                    }
                }
            }
            GradedLinearMap::new(dual.clone(), dual.clone(), d, m.parity()).expect("dual of a homogeneous map is homogeneous")
        })
        .collect();
    Representation {
        algebra: r.algebra.clone(),
        space: dual,
        action,
    }
}

/// `(V, 𝔩 - (-1)^{|x||v|} 𝔯)` as a representation of the commutator algebra.
/// Column `k` of `ρ(b_i)` is `𝔩(b_i) v_k - (-1)^{|b_i||v_k|} 𝔯(b_i) v_k`.
pub fn rep_from_bimodule(b: &Bimodule) -> Result<Representation> {
    let bracket = commutator_superalgebra(&b.algebra, MUL)?;
    let dv = b.space.dim();
    let action = (0..b.algebra.dim())
        .map(|i| {
            let pi = b.algebra.space().parity(i);
            GradedLinearMap::from_columns(&b.space, &b.space, pi, |k| {
                let v = unit(dv, k);
                let mut col = b.left[i].apply_coords(&v);
                let e = 1 + (pi.bit() * b.space.parity(k).bit());
                acc_signed(&mut col, e, &b.right[i].apply_coords(&v));
                col
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(bracket, b.space.clone(), action)
}

/// Checks `φ ∘ ρ(x) = ρ'(x) ∘ φ` on basis elements for an even bijection `φ: V → V'`.
pub fn are_equivalent(r: &Representation, r2: &Representation, phi: &GradedLinearMap) -> Result<ViolationReport> {
    r.algebra.space().ensure_shape(r2.algebra.space(), "equivalence (algebras)")?;
    r.space.ensure_shape(phi.domain(), "equivalence (domain of φ)")?;
    r2.space.ensure_shape(phi.codomain(), "equivalence (codomain of φ)")?;
    if phi.parity() != Parity::Even && !phi.is_zero() {
        return Err(Error::ParityViolation("equivalence map must be even".into()));
    }
    if !phi.is_invertible() {
        return Err(Error::Singular("equivalence map".into()));
    }
    let dv = r.space.dim();
    Ok(scan_operator("equivalence", &[r.algebra.dim()], |idx| {
        let i = idx[0];
        let cols = (0..dv)
            .map(|k| {
                let v = unit(dv, k);
                let mut out = phi.apply_coords(&r.act(i, &v));
                acc_signed(&mut out, 1, &r2.act(i, &phi.apply_coords(&v)));
                out
            })
            .collect();
        vec![(None, cols)]
    }))
}

/// The even map `V → V**`, `b_l ↦ (-1)^{|b_l|} b_l**`, realizing
/// `<a*, b> = (-1)^{|a*||b|} <b, a*>`.
pub fn double_dual_identification(space: &SuperSpace) -> GradedLinearMap {
    let dd = space.dual().dual();
    let n = space.dim();
    let mut m = linalg::zeros(n, n);
    for (l, row) in m.iter_mut().enumerate() {
        row[l] = if space.parity(l).is_odd() { -Scalar::one() } else { Scalar::one() };
    }
    GradedLinearMap::new(space.clone(), dd, m, Parity::Even).expect("diagonal map is even")
}
