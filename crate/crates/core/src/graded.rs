//! Z2-graded linear algebra: parities, super vector spaces, homogeneous
//! maps, two- and three-fold tensors, dual bases and the canonical pairings.
//!
//! Basis convention: in a space of graded dimension `m|n`, indices `0..m` are
//! even and `m..m+n` are odd. The dual space `V*` carries the dual gradation,
//! so the dual basis vector `b_i*` has the same parity as `b_i`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

/// Element of Z2.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(b: u8) -> Self {
        if b & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl Add for Parity {
    type Output = Parity;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A sign `+1` or `-1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The Koszul sign `(-1)^{p q}`.
    pub fn koszul(p: Parity, q: Parity) -> Sign {
        if p.is_odd() && q.is_odd() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn apply(self, x: Scalar) -> Scalar {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }

    pub fn to_scalar(self) -> Scalar {
        self.apply(Scalar::one())
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

/// `(-1)^{p q}`.
pub fn sign(p: Parity, q: Parity) -> Sign {
    Sign::koszul(p, q)
}

/// A super vector space `V = V_0 + V_1` with a labelled homogeneous basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    even: usize,
    odd: usize,
    labels: Arc<[String]>,
}

impl fmt::Debug for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperSpace({}|{}, {:?})", self.even, self.odd, &self.labels[..])
    }
}

impl SuperSpace {
    /// Space of graded dimension `even|odd` with labels `e1.., f1..`.
    pub fn new(even: usize, odd: usize) -> Self {
        let labels: Vec<String> = (1..=even)
            .map(|i| format!("e{i}"))
            .chain((1..=odd).map(|j| format!("f{j}")))
            .collect();
        SuperSpace {
            even,
            odd,
            labels: labels.into(),
        }
    }

    pub fn with_labels(even: usize, odd: usize, labels: Vec<String>) -> Result<Self> {
        if labels.len() != even + odd {
            return Err(Error::dims("basis labels", even + odd, labels.len()));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(SuperSpace {
            even,
            odd,
            labels: labels.into(),
        })
    }

    pub fn even_dim(&self) -> usize {
        self.even
    }

    pub fn odd_dim(&self) -> usize {
        self.odd
    }

    pub fn dim(&self) -> usize {
        self.even + self.odd
    }

    pub fn parity(&self, i: usize) -> Parity {
        if i < self.even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn parities(&self) -> Vec<Parity> {
        (0..self.dim()).map(|i| self.parity(i)).collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Same graded dimension; labels are cosmetic.
    pub fn same_shape(&self, other: &SuperSpace) -> bool {
        self.even == other.even && self.odd == other.odd
    }

    pub(crate) fn ensure_shape(&self, other: &SuperSpace, context: &str) -> Result<()> {
        if self.same_shape(other) {
            Ok(())
        } else {
            Err(Error::dims(
                context,
                format!("{}|{}", self.even, self.odd),
                format!("{}|{}", other.even, other.odd),
            ))
        }
    }

    /// The dual space with the dual gradation and labels `x*`.
    pub fn dual(&self) -> SuperSpace {
        let labels: Vec<String> = self
            .labels
            .iter()
            .map(|l| match l.strip_suffix('*') {
                Some(base) => base.to_string(),
                None => format!("{l}*"),
            })
            .collect();
        SuperSpace::with_labels(self.even, self.odd, labels.clone())
            .unwrap_or_else(|_| SuperSpace::new(self.even, self.odd))
    }

    /// `self + other`, reordered even-first: (self even, other even, self odd, other odd).
    pub fn direct_sum(&self, other: &SuperSpace) -> DirectSum {
        let even = self.even + other.even;
        let odd = self.odd + other.odd;
        let mut left = Vec::with_capacity(self.dim());
        let mut right = Vec::with_capacity(other.dim());
        for i in 0..self.dim() {
            left.push(if i < self.even {
                i
            } else {
                even + (i - self.even)
            });
        }
        for j in 0..other.dim() {
            right.push(if j < other.even {
                self.even + j
            } else {
                even + self.odd + (j - other.even)
            });
        }
        let mut labels = vec![String::new(); even + odd];
        for (i, &k) in left.iter().enumerate() {
            labels[k] = self.labels[i].clone();
        }
        for (j, &k) in right.iter().enumerate() {
            labels[k] = other.labels[j].clone();
        }
        let space = SuperSpace::with_labels(even, odd, labels)
            .unwrap_or_else(|_| SuperSpace::new(even, odd));
        DirectSum { space, left, right }
    }
}

/// The sum `A + V` together with the positions of each summand's basis.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub space: SuperSpace,
    /// `left[i]` is the index of the i-th basis vector of the first summand.
    pub left: Vec<usize>,
    /// `right[j]` is the index of the j-th basis vector of the second summand.
    pub right: Vec<usize>,
}

/// Coordinates of an element of a super space in its basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedVector {
    space: SuperSpace,
    coords: Vec<Scalar>,
}

impl GradedVector {
    pub fn new(space: SuperSpace, coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != space.dim() {
            return Err(Error::dims("vector coordinates", space.dim(), coords.len()));
        }
        Ok(GradedVector { space, coords })
    }

    pub fn zero(space: &SuperSpace) -> Self {
        GradedVector {
            coords: vec![Scalar::zero(); space.dim()],
            space: space.clone(),
        }
    }

    pub fn basis(space: &SuperSpace, i: usize) -> Self {
        let mut v = Self::zero(space);
        v.coords[i] = Scalar::one();
        v
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// The parity if homogeneous. The zero vector reports `Even`.
    pub fn parity(&self) -> Option<Parity> {
        let mut found: Option<Parity> = None;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = self.space.parity(i);
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    /// Homogeneous of parity `p`; the zero vector is homogeneous of both.
    pub fn is_homogeneous_of(&self, p: Parity) -> bool {
        self.coords
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || self.space.parity(i) == p)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        GradedVector {
            space: self.space.clone(),
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &GradedVector) -> Result<Self> {
        self.space.ensure_shape(&other.space, "vector sum")?;
        Ok(GradedVector {
            space: self.space.clone(),
            coords: add_coords(&self.coords, &other.coords),
        })
    }
}

pub(crate) fn add_coords(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn axpy(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s * x;
        }
    }
}

pub(crate) fn is_zero_coords(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// A linear map between super spaces, homogeneous of a given parity.
///
/// `matrix[i][j]` is the coefficient of codomain basis `i` in the image of
/// domain basis `j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedLinearMap {
    domain: SuperSpace,
    codomain: SuperSpace,
    matrix: Matrix,
    parity: Parity,
}

impl GradedLinearMap {
    pub fn new(domain: SuperSpace, codomain: SuperSpace, matrix: Matrix, parity: Parity) -> Result<Self> {
        if matrix.len() != codomain.dim() {
            return Err(Error::dims("map rows", codomain.dim(), matrix.len()));
        }
        for row in &matrix {
            if row.len() != domain.dim() {
                return Err(Error::dims("map columns", domain.dim(), row.len()));
            }
        }
        for (i, row) in matrix.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() && codomain.parity(i) != domain.parity(j) + parity {
                    return Err(Error::ParityViolation(format!(
                        "{parity} map has entry ({i},{j}) = {v} sending {} basis {} to {} basis {}",
                        domain.parity(j),
                        domain.label(j),
                        codomain.parity(i),
                        codomain.label(i)
                    )));
                }
            }
        }
        Ok(GradedLinearMap {
            domain,
            codomain,
            matrix,
            parity,
        })
    }

    pub fn zero(domain: &SuperSpace, codomain: &SuperSpace) -> Self {
        GradedLinearMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: linalg::zeros(codomain.dim(), domain.dim()),
            parity: Parity::Even,
        }
    }

    pub fn identity(space: &SuperSpace) -> Self {
        GradedLinearMap {
            domain: space.clone(),
            codomain: space.clone(),
            matrix: linalg::identity(space.dim()),
            parity: Parity::Even,
        }
    }

    /// Builds a map from a column function; panics are impossible, parity is validated.
    pub fn from_columns(
        domain: &SuperSpace,
        codomain: &SuperSpace,
        parity: Parity,
        mut col: impl FnMut(usize) -> Vec<Scalar>,
    ) -> Result<Self> {
        let mut matrix = linalg::zeros(codomain.dim(), domain.dim());
        for j in 0..domain.dim() {
            let c = col(j);
            if c.len() != codomain.dim() {
                return Err(Error::dims("map column", codomain.dim(), c.len()));
            }
            for (i, v) in c.into_iter().enumerate() {
                matrix[i][j] = v;
            }
        }
        Self::new(domain.clone(), codomain.clone(), matrix, parity)
    }

    pub fn domain(&self) -> &SuperSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &SuperSpace {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.matrix[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().all(|r| is_zero_coords(r))
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        self.matrix.iter().map(|r| r[j].clone()).collect()
    }

    pub fn apply(&self, v: &GradedVector) -> Result<GradedVector> {
        self.domain.ensure_shape(v.space(), "map argument")?;
        Ok(GradedVector {
            space: self.codomain.clone(),
            coords: self.apply_coords(v.coords()),
        })
    }

    pub fn apply_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        linalg::mat_vec(&self.matrix, v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedLinearMap) -> Result<GradedLinearMap> {
        self.domain.ensure_shape(&other.codomain, "composition")?;
        Ok(GradedLinearMap {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: linalg::mat_mul(&self.matrix, &other.matrix, other.domain.dim()),
            parity: self.parity + other.parity,
        })
    }

    pub fn scale(&self, s: &Scalar) -> GradedLinearMap {
        GradedLinearMap {
            matrix: self.matrix.iter().map(|r| r.iter().map(|x| x * s).collect()).collect(),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &GradedLinearMap) -> Result<GradedLinearMap> {
        self.domain.ensure_shape(&other.domain, "map sum (domain)")?;
        self.codomain.ensure_shape(&other.codomain, "map sum (codomain)")?;
        if self.parity != other.parity && !self.is_zero() && !other.is_zero() {
            return Err(Error::ParityViolation("sum of maps of different parity".into()));
        }
        let parity = if self.is_zero() { other.parity } else { self.parity };
        Ok(GradedLinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self
                .matrix
                .iter()
                .zip(&other.matrix)
                .map(|(a, b)| add_coords(a, b))
                .collect(),
            parity,
        })
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix, self.domain.dim())
    }

    pub fn is_invertible(&self) -> bool {
        self.domain.dim() == self.codomain.dim() && self.rank() == self.domain.dim()
    }

    pub fn inverse(&self) -> Result<GradedLinearMap> {
        if self.domain.dim() != self.codomain.dim() {
            return Err(Error::Singular("map between spaces of different dimension".into()));
        }
        let inv = linalg::inverse(&self.matrix).ok_or_else(|| Error::Singular("linear map".into()))?;
        Ok(GradedLinearMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            matrix: inv,
            parity: self.parity,
        })
    }

    /// A homogeneous basis of the kernel (for an even map the kernel is graded).
    pub fn kernel(&self) -> Vec<GradedVector> {
        let mut out = Vec::new();
        for p in [Parity::Even, Parity::Odd] {
            let cols: Vec<usize> = (0..self.domain.dim()).filter(|&j| self.domain.parity(j) == p).collect();
            if cols.is_empty() {
                continue;
            }
            let sub: Matrix = self
                .matrix
                .iter()
                .map(|r| cols.iter().map(|&j| r[j].clone()).collect())
                .collect();
            for k in linalg::kernel(&sub, cols.len()) {
                let mut v = vec![Scalar::zero(); self.domain.dim()];
                for (t, &j) in cols.iter().enumerate() {
                    v[j] = k[t].clone();
                }
                out.push(GradedVector {
                    space: self.domain.clone(),
                    coords: v,
                });
            }
        }
        out
    }

    /// Same matrix viewed between spaces of identical shape.
    pub fn relabel(&self, domain: &SuperSpace, codomain: &SuperSpace) -> Result<GradedLinearMap> {
        self.domain.ensure_shape(domain, "relabel (domain)")?;
        self.codomain.ensure_shape(codomain, "relabel (codomain)")?;
        Ok(GradedLinearMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            ..self.clone()
        })
    }
}

/// `r = Σ coeffs[i][j] b_i ⊗ b_j` in `A ⊗ A`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor2 {
    space: SuperSpace,
    coeffs: Matrix,
    parity: Parity,
}

impl Tensor2 {
    pub fn new(space: SuperSpace, coeffs: Matrix, parity: Parity) -> Result<Self> {
        let n = space.dim();
        if coeffs.len() != n || coeffs.iter().any(|r| r.len() != n) {
            return Err(Error::dims("tensor coefficients", format!("{n}x{n}"), "other shape"));
        }
        for (i, row) in coeffs.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() && space.parity(i) + space.parity(j) != parity {
                    return Err(Error::ParityViolation(format!(
                        "{parity} tensor has coefficient {v} on {} ⊗ {}",
                        space.label(i),
                        space.label(j)
                    )));
                }
            }
        }
        Ok(Tensor2 { space, coeffs, parity })
    }

    pub fn zero(space: &SuperSpace) -> Self {
        Tensor2 {
            space: space.clone(),
            coeffs: linalg::zeros(space.dim(), space.dim()),
            parity: Parity::Even,
        }
    }

    /// Builds from `(i, j, c)` triples, summing repeats.
    pub fn from_entries(space: &SuperSpace, parity: Parity, entries: &[(usize, usize, Scalar)]) -> Result<Self> {
        let n = space.dim();
        let mut coeffs = linalg::zeros(n, n);
        for (i, j, c) in entries {
            if *i >= n || *j >= n {
                return Err(Error::IndexOutOfRange {
                    context: "tensor entry".into(),
                    index: (*i).max(*j),
                    dim: n,
                });
            }
            coeffs[*i][*j] += c;
        }
        Self::new(space.clone(), coeffs, parity)
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn coeffs(&self) -> &Matrix {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Scalar {
        &self.coeffs[i][j]
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|r| is_zero_coords(r))
    }

    /// Nonzero coefficients in row-major order.
    pub fn entries(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    /// The graded flip `σ(x ⊗ y) = (-1)^{|x||y|} y ⊗ x`.
    pub fn sigma(&self) -> Tensor2 {
        let n = self.space.dim();
        let mut out = linalg::zeros(n, n);
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    out[j][i] = sign(self.space.parity(i), self.space.parity(j)).apply(v.clone());
                }
            }
        }
        Tensor2 {
            space: self.space.clone(),
            coeffs: out,
            parity: self.parity,
        }
    }

    pub fn is_skew_supersymmetric(&self) -> bool {
        self.sigma().neg() == *self
    }

    pub fn is_supersymmetric(&self) -> bool {
        self.sigma() == *self
    }

    pub fn neg(&self) -> Tensor2 {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, s: &Scalar) -> Tensor2 {
        Tensor2 {
            coeffs: self.coeffs.iter().map(|r| r.iter().map(|x| x * s).collect()).collect(),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &Tensor2) -> Result<Tensor2> {
        self.space.ensure_shape(&other.space, "tensor sum")?;
        if self.parity != other.parity && !self.is_zero() && !other.is_zero() {
            return Err(Error::ParityViolation("sum of tensors of different parity".into()));
        }
        let parity = if self.is_zero() { other.parity } else { self.parity };
        Ok(Tensor2 {
            space: self.space.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| add_coords(a, b)).collect(),
            parity,
        })
    }

    pub fn sub(&self, other: &Tensor2) -> Result<Tensor2> {
        self.add(&other.neg())
    }

    /// Same coefficients over a space of the same shape.
    pub fn relabel(&self, space: &SuperSpace) -> Result<Tensor2> {
        self.space.ensure_shape(space, "tensor relabel")?;
        Ok(Tensor2 {
            space: space.clone(),
            ..self.clone()
        })
    }
}

/// Sparse element of `A ⊗ A ⊗ A`; only nonzero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor3 {
    space: SuperSpace,
    entries: BTreeMap<(usize, usize, usize), Scalar>,
}

impl Tensor3 {
    pub fn zero(space: &SuperSpace) -> Self {
        Tensor3 {
            space: space.clone(),
            entries: BTreeMap::new(),
        }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn add_term(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.entries.entry((i, j, k)).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.entries.remove(&(i, j, k));
        }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.entries.get(&(i, j, k)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Scalar)> {
        self.entries.iter()
    }

    pub fn merge(&mut self, other: Tensor3) {
        for ((i, j, k), c) in other.entries {
            self.add_term(i, j, k, c);
        }
    }
}

/// The canonical pairing `<x*, y>` of a dual vector with a vector.
pub fn pair(x_star: &GradedVector, y: &GradedVector) -> Result<Scalar> {
    x_star.space().ensure_shape(y.space(), "pairing")?;
    Ok(x_star
        .coords()
        .iter()
        .zip(y.coords())
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .map(|(a, b)| a * b)
        .sum())
}

/// `<a1* ⊗ a2*, b1 ⊗ b2> = (-1)^{|a2*||b1|} <a1*, b1><a2*, b2>`, extended bilinearly.
pub fn pair_tensor(xsys: &Tensor2, t: &Tensor2) -> Result<Scalar> {
    xsys.space().ensure_shape(t.space(), "tensor pairing")?;
    let sp = t.space();
    let mut acc = Scalar::zero();
    for (i, j, c) in xsys.entries() {
        let d = t.coeff(i, j);
        if !d.is_zero() {
            acc += sign(sp.parity(j), sp.parity(i)).apply(&c * d);
        }
    }
    Ok(acc)
}
