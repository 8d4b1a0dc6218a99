//! Structure-constant superalgebras and the defining identities as checkers.
//!
//! A [`Superalgebra`] carries one product named `"mul"` (alternative, Malcev
//! and pre-Malcev algebras) or two named `"prec"` and `"succ"`
//! (pre-alternative algebras). Identities are evaluated on basis tuples
//! only: they are multilinear, and every sign in them depends on parities
//! alone, so vanishing on homogeneous basis tuples is equivalent to vanishing
//! everywhere.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graded::{GradedVector, SuperSpace};
use crate::report::{scan_tuples, ViolationReport};
use crate::scalar::Scalar;

pub const MUL: &str = "mul";
pub const PREC: &str = "prec";
pub const SUCC: &str = "succ";

/// Sparse structure constants `(i, j, k, c)`: `b_i b_j` has coefficient `c` on `b_k`.
pub type Entries = Vec<(usize, usize, usize, Scalar)>;

/// One bilinear product: `cells[i * n + j]` holds the coordinates of `b_i * b_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProductTable {
    n: usize,
    cells: Vec<Vec<Scalar>>,
}

impl ProductTable {
    pub fn zero(n: usize) -> Self {
        ProductTable {
            n,
            cells: vec![vec![Scalar::zero(); n]; n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Coordinates of `b_i * b_j`.
    pub fn cell(&self, i: usize, j: usize) -> &[Scalar] {
        &self.cells[i * self.n + j]
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.cells[i * self.n + j][k]
    }

    /// Nonzero structure constants `(i, j, k, c)` in lexicographic order.
    pub fn entries(&self) -> Entries {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                for (k, c) in self.cell(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn nonzero_count(&self) -> usize {
        self.cells.iter().flatten().filter(|c| !c.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.cells.iter().flatten().all(Scalar::is_zero)
    }

    /// `x * y` for coordinate vectors.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, t) in out.iter_mut().zip(self.cell(i, j)) {
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        out
    }

    /// `b_i * y`.
    pub fn mul_left_basis(&self, i: usize, y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.n];
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                crate::graded::axpy(&mut out, yj, self.cell(i, j));
            }
        }
        out
    }

    /// `x * b_j`.
    pub fn mul_right_basis(&self, x: &[Scalar], j: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.n];
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                crate::graded::axpy(&mut out, xi, self.cell(i, j));
            }
        }
        out
    }

    fn add(&self, other: &ProductTable) -> ProductTable {
        ProductTable {
            n: self.n,
            cells: self
                .cells
                .iter()
                .zip(&other.cells)
                .map(|(a, b)| crate::graded::add_coords(a, b))
                .collect(),
        }
    }
}

/// A finite-dimensional superalgebra given by structure constants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Superalgebra {
    space: SuperSpace,
    products: BTreeMap<String, ProductTable>,
}

impl Superalgebra {
    /// Builds from sparse `(i, j, k, c)` lists per product name. Rejects
    /// out-of-range indices, repeated `(i, j, k)` and parity-inhomogeneous
    /// constants.
    pub fn new(space: SuperSpace, products: Vec<(String, Entries)>) -> Result<Self> {
        let n = space.dim();
        let mut tables = BTreeMap::new();
        for (name, entries) in products {
            let mut t = ProductTable::zero(n);
            let mut seen = std::collections::HashSet::new();
            for (i, j, k, c) in entries {
                for idx in [i, j, k] {
                    if idx >= n {
                        return Err(Error::IndexOutOfRange {
                            context: format!("product {name:?}"),
                            index: idx,
                            dim: n,
                        });
                    }
                }
                if !seen.insert((i, j, k)) {
                    return Err(Error::DuplicateEntry(format!("({i}, {j}, {k}) in product {name:?}")));
                }
                t.cells[i * n + j][k] = c;
            }
            check_homogeneous(&space, &name, &t)?;
            if tables.insert(name.clone(), t).is_some() {
                return Err(Error::DuplicateEntry(format!("product {name:?}")));
            }
        }
        Ok(Superalgebra { space, products: tables })
    }

    /// Single product named `"mul"`.
    pub fn with_product(space: SuperSpace, entries: Entries) -> Result<Self> {
        Self::new(space, vec![(MUL.to_string(), entries)])
    }

    /// Pre-alternative algebra with products `"prec"` and `"succ"`.
    pub fn pre_alternative(
        space: SuperSpace,
        prec: Entries,
        succ: Entries,
    ) -> Result<Self> {
        Self::new(space, vec![(PREC.to_string(), prec), (SUCC.to_string(), succ)])
    }

    /// Builds a product from `f(i, j)` = coordinates of `b_i * b_j`.
    pub fn from_fn(space: SuperSpace, name: &str, f: impl FnMut(usize, usize) -> Vec<Scalar>) -> Result<Self> {
        let table = table_from_fn(&space, name, f)?;
        let mut products = BTreeMap::new();
        products.insert(name.to_string(), table);
        Ok(Superalgebra { space, products })
    }

    /// Adds or replaces a product built from `f(i, j)`.
    pub fn with_extra_product(mut self, name: &str, f: impl FnMut(usize, usize) -> Vec<Scalar>) -> Result<Self> {
        let table = table_from_fn(&self.space, name, f)?;
        self.products.insert(name.to_string(), table);
        Ok(self)
    }

    pub(crate) fn from_tables(space: SuperSpace, products: BTreeMap<String, ProductTable>) -> Self {
        Superalgebra { space, products }
    }

    /// The zero product `"mul"` on `space`.
    pub fn zero(space: SuperSpace) -> Self {
        let n = space.dim();
        let mut products = BTreeMap::new();
        products.insert(MUL.to_string(), ProductTable::zero(n));
        Superalgebra { space, products }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn product_names(&self) -> Vec<&str> {
        self.products.keys().map(String::as_str).collect()
    }

    pub fn has_product(&self, name: &str) -> bool {
        self.products.contains_key(name)
    }

    pub fn table(&self, name: &str) -> Result<&ProductTable> {
        self.products
            .get(name)
            .ok_or_else(|| Error::UnknownProduct(name.to_string()))
    }

    /// The `"mul"` table.
    pub fn product(&self) -> Result<&ProductTable> {
        self.table(MUL)
    }

    pub fn mul(&self, name: &str, x: &GradedVector, y: &GradedVector) -> Result<GradedVector> {
        let t = self.table(name)?;
        self.space.ensure_shape(x.space(), "left factor")?;
        self.space.ensure_shape(y.space(), "right factor")?;
        GradedVector::new(self.space.clone(), t.mul(x.coords(), y.coords()))
    }

    /// Same tables over a space of the same shape with other labels.
    pub fn relabel(&self, space: &SuperSpace) -> Result<Superalgebra> {
        self.space.ensure_shape(space, "algebra relabel")?;
        Ok(Superalgebra {
            space: space.clone(),
            products: self.products.clone(),
        })
    }

    pub(crate) fn bits(&self) -> Vec<u8> {
        self.space.parities().iter().map(|p| p.bit()).collect()
    }
}

fn table_from_fn(space: &SuperSpace, name: &str, mut f: impl FnMut(usize, usize) -> Vec<Scalar>) -> Result<ProductTable> {
    let n = space.dim();
    let mut t = ProductTable::zero(n);
    for i in 0..n {
        for j in 0..n {
            let v = f(i, j);
            if v.len() != n {
                return Err(Error::dims(format!("product {name:?} cell ({i}, {j})"), n, v.len()));
            }
            t.cells[i * n + j] = v;
        }
    }
    check_homogeneous(space, name, &t)?;
    Ok(t)
}

fn check_homogeneous(space: &SuperSpace, name: &str, t: &ProductTable) -> Result<()> {
    for (i, j, k, c) in t.entries() {
        if space.parity(k) != space.parity(i) + space.parity(j) {
            return Err(Error::ParityViolation(format!(
                "product {name:?} entry ({i}, {j}, {k}) = {c}: {} * {} has parity {} but {} is {}",
                space.label(i),
                space.label(j),
                space.parity(i) + space.parity(j),
                space.label(k),
                space.parity(k)
            )));
        }
    }
    Ok(())
}

/// `(-1)^e` as a flag: true means negative.
#[inline]
pub(crate) fn neg(e: u8) -> bool {
    e & 1 == 1
}

/// `acc += (-1)^e v`.
#[inline]
pub(crate) fn acc_signed(acc: &mut [Scalar], e: u8, v: &[Scalar]) {
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            if neg(e) {
                *a -= x;
            } else {
                *a += x;
            }
        }
    }
}

/// Graded commutator table `c'[i][j] = c[i][j] - (-1)^{|i||j|} c[j][i]`.
pub(crate) fn commutator_table(t: &ProductTable, p: &[u8]) -> ProductTable {
    let n = t.n;
    let mut out = ProductTable::zero(n);
    for i in 0..n {
        for j in 0..n {
            let mut v = t.cell(i, j).to_vec();
            acc_signed(&mut v, 1 + p[i] * p[j], t.cell(j, i));
            out.cells[i * n + j] = v;
        }
    }
    out
}

/// The algebra with bracket `[x, y] = x*y - (-1)^{|x||y|} y*x` as `"mul"`.
pub fn commutator_superalgebra(a: &Superalgebra, name: &str) -> Result<Superalgebra> {
    let t = a.table(name)?;
    let mut products = BTreeMap::new();
    products.insert(MUL.to_string(), commutator_table(t, &a.bits()));
    Ok(Superalgebra::from_tables(a.space.clone(), products))
}

/// `x ⋆ y = x ≺ y + x ≻ y` as `"mul"`.
pub fn sum_pre_alternative(a: &Superalgebra) -> Result<Superalgebra> {
    let prec = a.table(PREC)?;
    let succ = a.table(SUCC)?;
    let mut products = BTreeMap::new();
    products.insert(MUL.to_string(), prec.add(succ));
    Ok(Superalgebra::from_tables(a.space.clone(), products))
}

/// The pre-Malcev product `x · y = x ≻ y - (-1)^{|x||y|} y ≺ x` of a
/// pre-alternative algebra, as `"mul"`.
pub fn pre_malcev_from_pre_alternative(a: &Superalgebra) -> Result<Superalgebra> {
    let prec = a.table(PREC)?;
    let succ = a.table(SUCC)?;
    let p = a.bits();
    let n = a.dim();
    let mut t = ProductTable::zero(n);
    for i in 0..n {
        for j in 0..n {
            let mut v = succ.cell(i, j).to_vec();
            acc_signed(&mut v, 1 + p[i] * p[j], prec.cell(j, i));
            t.cells[i * n + j] = v;
        }
    }
    let mut products = BTreeMap::new();
    products.insert(MUL.to_string(), t);
    Ok(Superalgebra::from_tables(a.space.clone(), products))
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// Left alternative super identity `as(x,y,z) + (-1)^{|x||y|} as(y,x,z) = 0`.
pub fn check_left_alternative(a: &Superalgebra) -> Result<ViolationReport> {
    let t = a.product()?;
    let p = a.bits();
    let n = a.dim();
    Ok(scan_tuples("left-alternative", n, 3, |idx| {
        let (x, y, z) = (idx[0], idx[1], idx[2]);
        let mut v = associator(t, x, y, z);
        acc_signed(&mut v, p[x] * p[y], &associator(t, y, x, z));
        vec![(None, v)]
    }))
}

/// Right alternative super identity `as(x,y,z) + (-1)^{|y||z|} as(x,z,y) = 0`.
pub fn check_right_alternative(a: &Superalgebra) -> Result<ViolationReport> {
    let t = a.product()?;
    let p = a.bits();
    let n = a.dim();
    Ok(scan_tuples("right-alternative", n, 3, |idx| {
        let (x, y, z) = (idx[0], idx[1], idx[2]);
        let mut v = associator(t, x, y, z);
        acc_signed(&mut v, p[y] * p[z], &associator(t, x, z, y));
        vec![(None, v)]
    }))
}

/// `(b_x b_y) b_z - b_x (b_y b_z)`.
fn associator(t: &ProductTable, x: usize, y: usize, z: usize) -> Vec<Scalar> {
    let mut v = t.mul_right_basis(t.cell(x, y), z);
    acc_signed(&mut v, 1, &t.mul_left_basis(x, t.cell(y, z)));
    v
}

/// Both alternativity identities merged into one report.
pub fn check_alternative(a: &Superalgebra) -> Result<ViolationReport> {
    Ok(ViolationReport::merge(
        "alternative",
        vec![check_left_alternative(a)?, check_right_alternative(a)?],
    ))
}

/// Graded anticommutativity and the super Malcev identity.
///
/// `checked` counts basis quadruples; anticommutativity failures are
/// included in the violation count with pair witnesses under clause
/// `"anticommutativity"`.
pub fn check_malcev(a: &Superalgebra) -> Result<ViolationReport> {
    let t = a.product()?;
    Ok(malcev_report(t, &a.bits()))
}

pub(crate) fn malcev_report(t: &ProductTable, p: &[u8]) -> ViolationReport {
    let n = t.dim();
    let anti = scan_tuples("malcev", n, 2, |idx| {
        let (x, y) = (idx[0], idx[1]);
        if y < x {
            return vec![];
        }
        let mut v = t.cell(x, y).to_vec();
        acc_signed(&mut v, p[x] * p[y], t.cell(y, x));
        vec![(Some("anticommutativity"), v)]
    });
    // jac[(x*n + y)*n + z] = [[x, y], z]
    let jac: Vec<Vec<Scalar>> = (0..n * n * n)
        .map(|c| t.mul_right_basis(t.cell(c / (n * n), (c / n) % n), c % n))
        .collect();
    let j3 = |x: usize, y: usize, z: usize| &jac[(x * n + y) * n + z];
    let quad = scan_tuples("malcev", n, 4, |idx| {
        let (x, y, z, w) = (idx[0], idx[1], idx[2], idx[3]);
        let mut v = t.mul(t.cell(x, z), t.cell(y, w));
        if neg(p[y] * p[z]) {
            v.iter_mut().for_each(|c| *c = -&*c);
        }
        acc_signed(&mut v, 1, &t.mul_right_basis(j3(x, y, z), w));
        acc_signed(&mut v, 1 + p[x] * (p[y] + p[z] + p[w]), &t.mul_right_basis(j3(y, z, w), x));
        acc_signed(&mut v, 1 + (p[x] + p[y]) * (p[z] + p[w]), &t.mul_right_basis(j3(z, w, x), y));
        acc_signed(&mut v, 1 + p[w] * (p[x] + p[y] + p[z]), &t.mul_right_basis(j3(w, x, y), z));
        vec![(None, v)]
    });
    let count = anti.violation_count + quad.violation_count;
    let mut r = ViolationReport::merge("malcev", vec![anti, quad]);
    r.checked = n.pow(4);
    r.arity = 4;
    r.violation_count = count;
    r
}

/// The five-term pre-Malcev identity PM on basis quadruples.
pub fn check_pre_malcev(a: &Superalgebra) -> Result<ViolationReport> {
    let t = a.product()?;
    Ok(pre_malcev_report(t, &a.bits()))
}

pub(crate) fn pre_malcev_report(t: &ProductTable, p: &[u8]) -> ViolationReport {
    let n = t.dim();
    let br = commutator_table(t, p);
    // nested[(x*n+y)*n+z] = [[x, y], z]
    let nested: Vec<Vec<Scalar>> = (0..n * n * n)
        .map(|c| br.mul_right_basis(br.cell(c / (n * n), (c / n) % n), c % n))
        .collect();
    scan_tuples("pre-malcev", n, 4, |idx| {
        let (x, y, z, w) = (idx[0], idx[1], idx[2], idx[3]);
        let mut v = t.mul(br.cell(y, z), t.cell(x, w));
        if neg(p[x] * (p[y] + p[z])) {
            v.iter_mut().for_each(|c| *c = -&*c);
        }
        acc_signed(&mut v, 0, &t.mul_right_basis(&nested[(x * n + y) * n + z], w));
        let xz_t = t.mul_right_basis(br.cell(x, z), w);
        acc_signed(&mut v, p[x] * p[y], &t.mul_left_basis(y, &xz_t));
        let zt = t.cell(z, w);
        acc_signed(&mut v, 1, &t.mul_left_basis(x, &t.mul_left_basis(y, zt)));
        let yt = t.cell(y, w);
        acc_signed(&mut v, p[z] * (p[x] + p[y]), &t.mul_left_basis(z, &t.mul_left_basis(x, yt)));
        vec![(None, v)]
    })
}

/// The four pre-alternative identities on basis triples, with `⋆ = ≺ + ≻`.
pub fn check_pre_alternative(a: &Superalgebra) -> Result<ViolationReport> {
    let prec = a.table(PREC)?;
    let succ = a.table(SUCC)?;
    let star = prec.add(succ);
    let p = a.bits();
    let n = a.dim();
    Ok(scan_tuples("pre-alternative", n, 3, |idx| {
        let (x, y, z) = (idx[0], idx[1], idx[2]);
        let sxy = p[x] * p[y];
        let syz = p[y] * p[z];
        let ez = unit(n, z);
        let ey = unit(n, y);

        let mut i1 = succ.mul(star.cell(x, y), &ez);
        acc_signed(&mut i1, 1, &succ.mul_left_basis(x, succ.cell(y, z)));
        acc_signed(&mut i1, sxy, &succ.mul(star.cell(y, x), &ez));
        acc_signed(&mut i1, 1 + sxy, &succ.mul_left_basis(y, succ.cell(x, z)));

        let mut i2 = prec.mul(prec.cell(x, y), &ez);
        acc_signed(&mut i2, 1, &prec.mul_left_basis(x, star.cell(y, z)));
        acc_signed(&mut i2, syz, &prec.mul(prec.cell(x, z), &ey));
        acc_signed(&mut i2, 1 + syz, &prec.mul_left_basis(x, star.cell(z, y)));

        let head = {
            let mut h = prec.mul(succ.cell(x, y), &ez);
            acc_signed(&mut h, 1, &succ.mul_left_basis(x, prec.cell(y, z)));
            h
        };

        let mut i3 = head.clone();
        acc_signed(&mut i3, sxy, &prec.mul(prec.cell(y, x), &ez));
        acc_signed(&mut i3, 1 + sxy, &prec.mul_left_basis(y, star.cell(x, z)));

        let mut i4 = head;
        acc_signed(&mut i4, syz, &succ.mul(star.cell(x, z), &ey));
        acc_signed(&mut i4, 1 + syz, &succ.mul_left_basis(x, succ.cell(z, y)));

        vec![(Some("1"), i1), (Some("2"), i2), (Some("3"), i3), (Some("4"), i4)]
    }))
}
