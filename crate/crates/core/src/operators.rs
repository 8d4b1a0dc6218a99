//! O-operators, Rota–Baxter operators, bilinear forms, and the constructions
//! of pre-Malcev and pre-alternative superalgebras from them.

use serde::Serialize;

use crate::algebra::{acc_signed, commutator_table, Superalgebra, MUL, PREC, SUCC};
use crate::error::{Error, Result};
use crate::graded::{GradedLinearMap, Parity, SuperSpace};
use crate::linalg::{self, Matrix};
use crate::modules::{Bimodule, Representation};
use crate::report::{scan_tuples, ViolationReport, Witness};
use crate::scalar::Scalar;

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

fn require_even(t: &GradedLinearMap, what: &str) -> Result<()> {
    if t.parity() != Parity::Even && !t.is_zero() {
        return Err(Error::ParityViolation(format!("{what} must be even")));
    }
    Ok(())
}

fn require(report: ViolationReport) -> Result<()> {
    if report.holds() {
        Ok(())
    } else {
        Err(Error::Precondition(Box::new(report)))
    }
}

/// `[T(a), T(b)] = T(ρ(T(a))b - (-1)^{|a||b|} ρ(T(b))a)` on basis pairs of `V`.
pub fn check_o_operator_malcev(t: &GradedLinearMap, r: &Representation) -> Result<ViolationReport> {
    require_even(t, "O-operator")?;
    r.space().ensure_shape(t.domain(), "O-operator domain")?;
    r.algebra().space().ensure_shape(t.codomain(), "O-operator codomain")?;
    let br = r.algebra().product()?;
    let pv: Vec<u8> = r.space().parities().iter().map(|p| p.bit()).collect();
    let dv = r.space().dim();
    let cols: Vec<Vec<Scalar>> = (0..dv).map(|j| t.column(j)).collect();
    Ok(scan_tuples("o-operator", dv, 2, |idx| {
        let (a, b) = (idx[0], idx[1]);
        let mut v = br.mul(&cols[a], &cols[b]);
        let mut inner = r.act_by(&cols[a], &unit(dv, b));
        acc_signed(&mut inner, 1 + pv[a] * pv[b], &r.act_by(&cols[b], &unit(dv, a)));
        acc_signed(&mut v, 1, &t.apply_coords(&inner));
        vec![(None, v)]
    }))
}

/// `T(a) ⋆ T(b) = T(𝔩(T(a))b + 𝔯(T(b))a)` on basis pairs of `V`.
pub fn check_o_operator_alternative(t: &GradedLinearMap, b: &Bimodule) -> Result<ViolationReport> {
    require_even(t, "O-operator")?;
    b.space().ensure_shape(t.domain(), "O-operator domain")?;
    b.algebra().space().ensure_shape(t.codomain(), "O-operator codomain")?;
    let star = b.algebra().product()?;
    let dv = b.space().dim();
    let cols: Vec<Vec<Scalar>> = (0..dv).map(|j| t.column(j)).collect();
    Ok(scan_tuples("o-operator-alternative", dv, 2, |idx| {
        let (x, y) = (idx[0], idx[1]);
        let mut v = star.mul(&cols[x], &cols[y]);
        let mut inner = b.act_left_by(&cols[x], &unit(dv, y));
        acc_signed(&mut inner, 0, &b.act_right_by(&cols[y], &unit(dv, x)));
        acc_signed(&mut v, 1, &t.apply_coords(&inner));
        vec![(None, v)]
    }))
}

/// Which form of the weight-zero Rota–Baxter equation to check.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RbVariant {
    /// `[Rx, Ry] = R([Rx, y] + [x, Ry])`, the adjoint case of the O-operator equation.
    Unsigned,
    /// `[Rx, Ry] = R([Rx, y] + (-1)^{|x||y|} [x, Ry])`.
    Signed,
}

/// Rota–Baxter equation for `R: A → A` with respect to the `"mul"` product.
pub fn check_rota_baxter(rop: &GradedLinearMap, a: &Superalgebra, variant: RbVariant) -> Result<ViolationReport> {
    require_even(rop, "Rota–Baxter operator")?;
    a.space().ensure_shape(rop.domain(), "Rota–Baxter domain")?;
    a.space().ensure_shape(rop.codomain(), "Rota–Baxter codomain")?;
    let t = a.product()?;
    let p = a.bits();
    let n = a.dim();
    let cols: Vec<Vec<Scalar>> = (0..n).map(|j| rop.column(j)).collect();
    let name = match variant {
        RbVariant::Unsigned => "rota-baxter",
        RbVariant::Signed => "rota-baxter-signed",
    };
    Ok(scan_tuples(name, n, 2, |idx| {
        let (x, y) = (idx[0], idx[1]);
        let mut v = t.mul(&cols[x], &cols[y]);
        let mut inner = t.mul_right_basis(&cols[x], y);
        let e = match variant {
            RbVariant::Unsigned => 0,
            RbVariant::Signed => p[x] * p[y],
        };
        acc_signed(&mut inner, e, &t.mul_left_basis(x, &cols[y]));
        acc_signed(&mut v, 1, &rop.apply_coords(&inner));
        vec![(None, v)]
    }))
}

/// `a · b = ρ(T(a)) b` on `V`.
pub fn pre_malcev_from_o_operator(t: &GradedLinearMap, r: &Representation) -> Result<Superalgebra> {
    require(check_o_operator_malcev(t, r)?)?;
    Ok(o_operator_product(t, r))
}

fn o_operator_product(t: &GradedLinearMap, r: &Representation) -> Superalgebra {
    let dv = r.space().dim();
    let cols: Vec<Vec<Scalar>> = (0..dv).map(|j| t.column(j)).collect();
    Superalgebra::from_fn(r.space().clone(), MUL, |i, j| r.act_by(&cols[i], &unit(dv, j)))
        .expect("even operator and even action give a homogeneous product")
}

/// The pre-Malcev structure transported to the image `T(V) ⊆ A`.
#[derive(Clone, Debug)]
pub struct ImageStructure {
    /// Indices `j` of the basis vectors `b_j` of `V` whose images form the chosen basis of `T(V)`.
    pub pivots: Vec<usize>,
    /// The chosen basis of `T(V)` in coordinates of `A`.
    pub basis: Vec<Vec<Scalar>>,
    /// The product on `T(V)` in the chosen basis.
    pub algebra: Superalgebra,
}

/// Defines `T(a) · T(b) = T(a · b)` on `T(V)` after verifying that the
/// product on `V` descends: `T(k · b) = T(b · k) = 0` for every homogeneous
/// kernel generator `k` and basis vector `b`.
pub fn induced_structure_on_image(t: &GradedLinearMap, r: &Representation) -> Result<ImageStructure> {
    let pm = pre_malcev_from_o_operator(t, r)?;
    let prod = pm.product()?;
    let dv = r.space().dim();
    for (ki, k) in t.kernel().iter().enumerate() {
        for b in 0..dv {
            let eb = unit(dv, b);
            if !t.apply_coords(&prod.mul(k.coords(), &eb)).iter().all(Scalar::is_zero) {
                return Err(Error::NotWellDefined {
                    kernel_index: ki,
                    basis_index: b,
                    side: "left",
                });
            }
            if !t.apply_coords(&prod.mul(&eb, k.coords())).iter().all(Scalar::is_zero) {
                return Err(Error::NotWellDefined {
                    kernel_index: ki,
                    basis_index: b,
                    side: "right",
                });
            }
        }
    }
    let mut m = t.matrix().clone();
    let pivots = linalg::rref(&mut m, dv);
    let basis: Vec<Vec<Scalar>> = pivots.iter().map(|&j| t.column(j)).collect();
    let even = pivots.iter().filter(|&&j| r.space().parity(j) == Parity::Even).count();
    let labels: Vec<String> = pivots.iter().map(|&j| format!("T({})", r.space().label(j))).collect();
    let space = SuperSpace::with_labels(even, pivots.len() - even, labels)?;
    // coordinates of a vector of T(V) in the chosen basis
    let bmat: Matrix = (0..t.codomain().dim())
        .map(|row| basis.iter().map(|col| col[row].clone()).collect())
        .collect();
    let coords = |v: &[Scalar]| -> Result<Vec<Scalar>> { solve_in_span(&bmat, v, basis.len()) };
    let mut cells = Vec::with_capacity(pivots.len() * pivots.len());
    for &i in &pivots {
        for &j in &pivots {
            let img = t.apply_coords(prod.cell(i, j));
            cells.push(coords(&img)?);
        }
    }
    let k = pivots.len();
    let algebra = Superalgebra::from_fn(space, MUL, |a, b| cells[a * k + b].clone())?;
    Ok(ImageStructure { pivots, basis, algebra })
}

/// Solves `B x = v` for `x` when `v` lies in the column span of the full-column-rank `B`.
fn solve_in_span(b: &Matrix, v: &[Scalar], cols: usize) -> Result<Vec<Scalar>> {
    let mut aug: Matrix = b
        .iter()
        .zip(v)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let piv = linalg::rref(&mut aug, cols + 1);
    if piv.contains(&cols) {
        return Err(Error::NotApplicable("vector outside the image of T".into()));
    }
    let mut x = vec![Scalar::zero(); cols];
    for (row, &c) in piv.iter().enumerate() {
        x[c] = aug[row][cols].clone();
    }
    Ok(x)
}

/// `x · y = T(ρ(x) T^{-1}(y))` on `A` for an invertible O-operator.
pub fn compatible_pre_malcev_from_invertible_oop(t: &GradedLinearMap, r: &Representation) -> Result<Superalgebra> {
    require(check_o_operator_malcev(t, r)?)?;
    let inv = t.inverse()?;
    Superalgebra::from_fn(r.algebra().space().clone(), MUL, |i, j| t.apply_coords(&r.act(i, &inv.column(j))))
}

/// `x · y = [R(x), y]`.
pub fn pre_malcev_from_rota_baxter(rop: &GradedLinearMap, a: &Superalgebra) -> Result<Superalgebra> {
    require(check_rota_baxter(rop, a, RbVariant::Unsigned)?)?;
    let t = a.product()?;
    Superalgebra::from_fn(a.space().clone(), MUL, |i, j| t.mul_right_basis(&rop.column(i), j))
}

/// `x · y = R([x, R^{-1}(y)])` for an invertible Rota–Baxter operator; compatible with `A`.
pub fn compatible_pre_malcev_from_rota_baxter(rop: &GradedLinearMap, a: &Superalgebra) -> Result<Superalgebra> {
    require(check_rota_baxter(rop, a, RbVariant::Unsigned)?)?;
    let inv = rop.inverse()?;
    let t = a.product()?;
    Superalgebra::from_fn(a.space().clone(), MUL, |i, j| rop.apply_coords(&t.mul_left_basis(i, &inv.column(j))))
}

/// A parity-0 bilinear form, `matrix[i][j] = ω(b_i, b_j)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearForm {
    space: SuperSpace,
    matrix: Matrix,
}

/// Exact properties of a bilinear form with respect to an algebra.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormFlags {
    pub supersymmetric: bool,
    pub skew_supersymmetric: bool,
    pub nondegenerate: bool,
    pub invariant: bool,
}

impl BilinearForm {
    pub fn new(space: SuperSpace, matrix: Matrix) -> Result<Self> {
        let n = space.dim();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::dims("bilinear form", format!("{n}x{n}"), "other shape"));
        }
        for (i, row) in matrix.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() && space.parity(i) != space.parity(j) {
                    return Err(Error::ParityViolation(format!(
                        "form value ω({}, {}) = {c} pairs elements of different parity",
                        space.label(i),
                        space.label(j)
                    )));
                }
            }
        }
        Ok(BilinearForm { space, matrix })
    }

    pub fn zero(space: &SuperSpace) -> Self {
        BilinearForm {
            space: space.clone(),
            matrix: linalg::zeros(space.dim(), space.dim()),
        }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn value(&self, i: usize, j: usize) -> &Scalar {
        &self.matrix[i][j]
    }

    /// `ω(x, y)` for coordinate vectors.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let w = &self.matrix[i][j];
                if !yj.is_zero() && !w.is_zero() {
                    acc += xi * yj * w;
                }
            }
        }
        acc
    }

    pub fn scale(&self, c: &Scalar) -> BilinearForm {
        BilinearForm {
            space: self.space.clone(),
            matrix: self.matrix.iter().map(|r| r.iter().map(|x| x * c).collect()).collect(),
        }
    }

    pub fn is_supersymmetric(&self) -> bool {
        self.symmetry_defects(false).is_empty()
    }

    pub fn is_skew_supersymmetric(&self) -> bool {
        self.symmetry_defects(true).is_empty()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !linalg::determinant(&self.matrix).is_zero()
    }

    /// Pairs `(i, j)`, `i <= j`, violating (skew-)supersymmetry.
    fn symmetry_defects(&self, skew: bool) -> Vec<(usize, usize, Scalar)> {
        let n = self.space.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let odd = self.space.parity(i).is_odd() && self.space.parity(j).is_odd();
                // ω(x,y) - ε (-1)^{|x||y|} ω(y,x), ε = -1 for skew
                let flip = odd != skew;
                let d = if flip {
                    &self.matrix[i][j] + &self.matrix[j][i]
                } else {
                    &self.matrix[i][j] - &self.matrix[j][i]
                };
                if !d.is_zero() {
                    out.push((i, j, d));
                }
            }
        }
        out
    }

    pub fn is_invariant(&self, a: &Superalgebra) -> Result<bool> {
        Ok(invariance_report(self, a)?.holds())
    }
}

fn invariance_report(w: &BilinearForm, a: &Superalgebra) -> Result<ViolationReport> {
    w.space.ensure_shape(a.space(), "form and algebra")?;
    let t = a.product()?;
    let n = a.dim();
    Ok(scan_tuples("invariant", n, 3, |idx| {
        let (x, y, z) = (idx[0], idx[1], idx[2]);
        let lhs = w.eval(t.cell(x, y), &unit(n, z));
        let rhs = w.eval(&unit(n, x), t.cell(y, z));
        vec![(None, vec![lhs - rhs])]
    }))
}

pub fn classify_form(w: &BilinearForm, a: &Superalgebra) -> Result<FormFlags> {
    Ok(FormFlags {
        supersymmetric: w.is_supersymmetric(),
        skew_supersymmetric: w.is_skew_supersymmetric(),
        nondegenerate: w.is_nondegenerate(),
        invariant: w.is_invariant(a)?,
    })
}

/// Symplectic check: skew-supersymmetry and nondegeneracy of `ω`, then the
/// cyclic sum
/// `(-1)^{|x||z|} ω(x,[y,z]) + (-1)^{|y||x|} ω(y,[z,x]) + (-1)^{|z||y|} ω(z,[x,y]) = 0`
/// on basis triples. Failures of the flags appear as witnesses with clauses
/// `"skew-supersymmetric"` (index pair) and `"nondegenerate"` (a kernel vector).
pub fn check_symplectic(w: &BilinearForm, a: &Superalgebra) -> Result<ViolationReport> {
    w.space.ensure_shape(a.space(), "form and algebra")?;
    let t = a.product()?;
    let p = a.bits();
    let n = a.dim();
    let cocycle = scan_tuples("cocycle", n, 3, |idx| {
        let (x, y, z) = (idx[0], idx[1], idx[2]);
        let mut s = Scalar::zero();
        for (u, v1, v2, e) in [(x, y, z, p[x] * p[z]), (y, z, x, p[y] * p[x]), (z, x, y, p[z] * p[y])] {
            let term = w.eval(&unit(n, u), t.cell(v1, v2));
            if e & 1 == 1 {
                s -= term;
            } else {
                s += term;
            }
        }
        vec![(None, vec![s])]
    });
    let mut extra: Vec<Witness> = w
        .symmetry_defects(true)
        .into_iter()
        .map(|(i, j, d)| Witness {
            clause: Some("skew-supersymmetric".into()),
            indices: vec![i, j],
            leftover: vec![d],
        })
        .collect();
    if let Some(k) = linalg::kernel(&linalg::transpose(&w.matrix, n), n).into_iter().next() {
        extra.push(Witness {
            clause: Some("nondegenerate".into()),
            indices: vec![],
            leftover: k,
        });
    }
    let flags = ViolationReport::from_witnesses("symplectic", 3, 0, extra);
    let mut r = ViolationReport::merge("symplectic", vec![flags, cocycle]);
    r.arity = 3;
    Ok(r)
}

/// The compatible pre-Malcev product of a symplectic form:
/// `ω(x·y, z) = (-1)^{|x|(|y|+|z|)} ω(y, [z, x])`, solved for `x·y` per basis pair.
pub fn pre_malcev_from_symplectic(w: &BilinearForm, a: &Superalgebra) -> Result<Superalgebra> {
    require(check_symplectic(w, a)?)?;
    let t = a.product()?;
    let p = a.bits();
    let n = a.dim();
    // ω(v, b_k) = Σ_m v_m ω[m][k], so the system matrix is ωᵀ
    let wt_inv = linalg::inverse(&linalg::transpose(&w.matrix, n)).ok_or_else(|| Error::Singular("bilinear form".into()))?;
    Superalgebra::from_fn(a.space().clone(), MUL, |i, j| {
        let rhs: Vec<Scalar> = (0..n)
            .map(|k| {
                let v = w.eval(&unit(n, j), t.cell(k, i));
                if (p[i] * (p[j] + p[k])) & 1 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        linalg::mat_vec(&wt_inv, &rhs)
    })
}

/// `a ≻ b = 𝔩(T(a)) b` and `a ≺ b = 𝔯(T(b)) a` on `V`.
pub fn pre_alternative_from_o_operator(t: &GradedLinearMap, b: &Bimodule) -> Result<Superalgebra> {
    require(check_o_operator_alternative(t, b)?)?;
    let dv = b.space().dim();
    let cols: Vec<Vec<Scalar>> = (0..dv).map(|j| t.column(j)).collect();
    Superalgebra::from_fn(b.space().clone(), PREC, |i, j| b.act_right_by(&cols[j], &unit(dv, i)))?
        .with_extra_product(SUCC, |i, j| b.act_left_by(&cols[i], &unit(dv, j)))
}

/// Whether the commutator of `p`'s product equals the `"mul"` table of `a`.
pub fn is_compatible(p: &Superalgebra, a: &Superalgebra) -> Result<bool> {
    Ok(commutator_table(p.product()?, &p.bits()) == *a.product()?)
}
