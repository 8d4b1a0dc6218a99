//! Brute-force oracles shared by the integration tests.
//!
//! Everything here works from raw structure constants with dense vectors
//! and restates each identity term by term, without touching the library's
//! checkers or table helpers.

#![allow(dead_code)]

use std::collections::BTreeMap;

use malcev_super::linalg::Matrix;
use malcev_super::{q, Scalar, Superalgebra};

pub type Vector = Vec<Scalar>;

/// `(-1)^{ab}` as a scalar.
pub fn sg(a: u8, b: u8) -> Scalar {
    if (a & b) & 1 == 1 {
        q(-1)
    } else {
        q(1)
    }
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `Σ c_k v_k`.
pub fn comb(terms: &[(Scalar, Vector)]) -> Vector {
    let n = terms[0].1.len();
    let mut out = vec![q(0); n];
    for (c, v) in terms {
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

/// A product given by raw structure constants.
#[derive(Clone)]
pub struct Oracle {
    pub n: usize,
    pub p: Vec<u8>,
    pub entries: Vec<(usize, usize, usize, Scalar)>,
}

impl Oracle {
    pub fn new(a: &Superalgebra, name: &str) -> Self {
        let p = a.space().parities().iter().map(|x| x.bit()).collect();
        Oracle {
            n: a.dim(),
            p,
            entries: a.table(name).unwrap().entries(),
        }
    }

    pub fn mul_of(a: &Superalgebra) -> Self {
        Self::new(a, "mul")
    }

    pub fn e(&self, i: usize) -> Vector {
        let mut v = vec![q(0); self.n];
        v[i] = q(1);
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = vec![q(0); self.n];
        for (i, j, k, c) in &self.entries {
            if !x[*i].is_zero() && !y[*j].is_zero() {
                out[*k] += &(&x[*i] * &y[*j]) * c;
            }
        }
        out
    }

    /// `[x, y] = xy - (-1)^{|x||y|} yx` as a new oracle.
    pub fn commutator(&self) -> Oracle {
        let mut entries = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let v = comb(&[
                    (q(1), self.mul(&self.e(i), &self.e(j))),
                    (-sg(self.p[i], self.p[j]), self.mul(&self.e(j), &self.e(i))),
                ]);
                for (k, c) in v.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        Oracle {
            n: self.n,
            p: self.p.clone(),
            entries,
        }
    }

    /// Structure constants as a dense map `(i, j) -> b_i b_j`.
    pub fn table(&self) -> BTreeMap<(usize, usize), Vector> {
        let mut m = BTreeMap::new();
        for i in 0..self.n {
            for j in 0..self.n {
                m.insert((i, j), self.mul(&self.e(i), &self.e(j)));
            }
        }
        m
    }
}

pub fn left_alternative_ok(o: &Oracle) -> bool {
    let m = |x: &Vector, y: &Vector| o.mul(x, y);
    let as_ = |x: &Vector, y: &Vector, z: &Vector| comb(&[(q(1), m(&m(x, y), z)), (q(-1), m(x, &m(y, z)))]);
    (0..o.n).all(|i| {
        (0..o.n).all(|j| {
            (0..o.n).all(|k| {
                let (x, y, z) = (o.e(i), o.e(j), o.e(k));
                is_zero(&comb(&[(q(1), as_(&x, &y, &z)), (sg(o.p[i], o.p[j]), as_(&y, &x, &z))]))
            })
        })
    })
}

pub fn right_alternative_ok(o: &Oracle) -> bool {
    let m = |x: &Vector, y: &Vector| o.mul(x, y);
    let as_ = |x: &Vector, y: &Vector, z: &Vector| comb(&[(q(1), m(&m(x, y), z)), (q(-1), m(x, &m(y, z)))]);
    (0..o.n).all(|i| {
        (0..o.n).all(|j| {
            (0..o.n).all(|k| {
                let (x, y, z) = (o.e(i), o.e(j), o.e(k));
                is_zero(&comb(&[(q(1), as_(&x, &y, &z)), (sg(o.p[j], o.p[k]), as_(&x, &z, &y))]))
            })
        })
    })
}

/// Graded anticommutativity plus the four-variable identity, term by term.
pub fn malcev_ok(o: &Oracle) -> bool {
    let b = |x: &Vector, y: &Vector| o.mul(x, y);
    for i in 0..o.n {
        for j in 0..o.n {
            let (x, y) = (o.e(i), o.e(j));
            if !is_zero(&comb(&[(q(1), b(&x, &y)), (sg(o.p[i], o.p[j]), b(&y, &x))])) {
                return false;
            }
        }
    }
    for i in 0..o.n {
        for j in 0..o.n {
            for k in 0..o.n {
                for l in 0..o.n {
                    let (x, y, z, t) = (o.e(i), o.e(j), o.e(k), o.e(l));
                    let (px, py, pz, pt) = (o.p[i], o.p[j], o.p[k], o.p[l]);
                    let lhs = comb(&[(sg(py, pz), b(&b(&x, &z), &b(&y, &t)))]);
                    let rhs = comb(&[
                        (q(1), b(&b(&b(&x, &y), &z), &t)),
                        (sg(px, py ^ pz ^ pt), b(&b(&b(&y, &z), &t), &x)),
                        (sg(px ^ py, pz ^ pt), b(&b(&b(&z, &t), &x), &y)),
                        (sg(pt, px ^ py ^ pz), b(&b(&b(&t, &x), &y), &z)),
                    ]);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The ten-term expanded form of the pre-Malcev identity.
pub fn pre_malcev_ok(o: &Oracle) -> bool {
    let m = |x: &Vector, y: &Vector| o.mul(x, y);
    for i in 0..o.n {
        for j in 0..o.n {
            for k in 0..o.n {
                for l in 0..o.n {
                    let (x, y, z, t) = (o.e(i), o.e(j), o.e(k), o.e(l));
                    let (px, py, pz) = (o.p[i], o.p[j], o.p[k]);
                    let v = comb(&[
                        (sg(px, py ^ pz), m(&m(&y, &z), &m(&x, &t))),
                        (-(sg(px, py ^ pz) * sg(py, pz)), m(&m(&z, &y), &m(&x, &t))),
                        (q(1), m(&m(&m(&x, &y), &z), &t)),
                        (-sg(px, py), m(&m(&m(&y, &x), &z), &t)),
                        (-sg(px ^ py, pz), m(&m(&z, &m(&x, &y)), &t)),
                        (sg(px, py) * sg(px ^ py, pz), m(&m(&z, &m(&y, &x)), &t)),
                        (sg(px, py), m(&y, &m(&m(&x, &z), &t))),
                        (-sg(px, py ^ pz), m(&y, &m(&m(&z, &x), &t))),
                        (q(-1), m(&x, &m(&y, &m(&z, &t)))),
                        (sg(pz, px ^ py), m(&z, &m(&x, &m(&y, &t)))),
                    ]);
                    if !is_zero(&v) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The four pre-alternative identities with `⋆ = ≺ + ≻`.
pub fn pre_alternative_ok(prec: &Oracle, succ: &Oracle) -> bool {
    let n = prec.n;
    let p = &prec.p;
    let l = |x: &Vector, y: &Vector| prec.mul(x, y);
    let r = |x: &Vector, y: &Vector| succ.mul(x, y);
    let s = |x: &Vector, y: &Vector| comb(&[(q(1), prec.mul(x, y)), (q(1), succ.mul(x, y))]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (prec.e(i), prec.e(j), prec.e(k));
                let sxy = sg(p[i], p[j]);
                let syz = sg(p[j], p[k]);
                let ids = [
                    comb(&[
                        (q(1), r(&s(&x, &y), &z)),
                        (q(-1), r(&x, &r(&y, &z))),
                        (sxy.clone(), r(&s(&y, &x), &z)),
                        (-sxy.clone(), r(&y, &r(&x, &z))),
                    ]),
                    comb(&[
                        (q(1), l(&l(&x, &y), &z)),
                        (q(-1), l(&x, &s(&y, &z))),
                        (syz.clone(), l(&l(&x, &z), &y)),
                        (-syz.clone(), l(&x, &s(&z, &y))),
                    ]),
                    comb(&[
                        (q(1), l(&r(&x, &y), &z)),
                        (q(-1), r(&x, &l(&y, &z))),
                        (sxy.clone(), l(&l(&y, &x), &z)),
                        (-sxy, l(&y, &s(&x, &z))),
                    ]),
                    comb(&[
                        (q(1), l(&r(&x, &y), &z)),
                        (q(-1), r(&x, &l(&y, &z))),
                        (syz.clone(), r(&s(&x, &z), &y)),
                        (-syz, r(&x, &r(&z, &y))),
                    ]),
                ];
                if !ids.iter().all(|v| is_zero(v)) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..r)
        .map(|i| (0..c).map(|j| (0..k).map(|t| &a[i][t] * &b[t][j]).sum()).collect())
        .collect()
}

pub fn mat_comb(terms: &[(Scalar, Matrix)]) -> Matrix {
    let mut out = terms[0].1.iter().map(|row| vec![q(0); row.len()]).collect::<Matrix>();
    for (c, m) in terms {
        for (orow, row) in out.iter_mut().zip(m) {
            for (o, x) in orow.iter_mut().zip(row) {
                *o += c * x;
            }
        }
    }
    out
}

/// `ρ(v)` for a coordinate vector `v` of the algebra.
pub fn act(mats: &[Matrix], v: &[Scalar]) -> Matrix {
    let terms: Vec<(Scalar, Matrix)> = v.iter().cloned().zip(mats.iter().cloned()).collect();
    mat_comb(&terms)
}

/// The Malcev representation identity on basis triples, with matrices.
pub fn representation_ok(bracket: &Oracle, mats: &[Matrix]) -> bool {
    let n = bracket.n;
    let p = &bracket.p;
    let b = |x: &Vector, y: &Vector| bracket.mul(x, y);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (bracket.e(i), bracket.e(j), bracket.e(k));
                let (rx, ry, rz) = (&mats[i], &mats[j], &mats[k]);
                let lhs = act(mats, &b(&b(&x, &y), &z));
                let rhs = mat_comb(&[
                    (q(1), mat_mul(&mat_mul(rx, ry), rz)),
                    (-sg(p[k], p[i] ^ p[j]), mat_mul(&mat_mul(rz, rx), ry)),
                    (sg(p[i], p[j] ^ p[k]), mat_mul(ry, &act(mats, &b(&z, &x)))),
                    (-sg(p[i], p[j] ^ p[k]), mat_mul(&act(mats, &b(&y, &z)), rx)),
                ]);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

pub fn apply(m: &Matrix, v: &[Scalar]) -> Vector {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// `[T a, T b] = T(ρ(T a) b - (-1)^{|a||b|} ρ(T b) a)` on basis pairs of `V`.
pub fn o_operator_ok(bracket: &Oracle, mats: &[Matrix], vpar: &[u8], t: &Matrix) -> bool {
    let dv = vpar.len();
    let unit = |k: usize| (0..dv).map(|i| if i == k { q(1) } else { q(0) }).collect::<Vector>();
    for a in 0..dv {
        for b in 0..dv {
            let (ta, tb) = (apply(t, &unit(a)), apply(t, &unit(b)));
            let lhs = bracket.mul(&ta, &tb);
            let inner = comb(&[
                (q(1), apply(&act(mats, &ta), &unit(b))),
                (-sg(vpar[a], vpar[b]), apply(&act(mats, &tb), &unit(a))),
            ]);
            if lhs != apply(t, &inner) {
                return false;
            }
        }
    }
    true
}

/// Adjoint matrices `ad(b_i)[k][j] = c_ij^k`.
pub fn adjoint_mats(bracket: &Oracle) -> Vec<Matrix> {
    (0..bracket.n)
        .map(|i| {
            let mut m = vec![vec![q(0); bracket.n]; bracket.n];
            for j in 0..bracket.n {
                for (k, c) in bracket.mul(&bracket.e(i), &bracket.e(j)).into_iter().enumerate() {
                    m[k][j] = c;
                }
            }
            m
        })
        .collect()
}

/// A word in one tensor slot: a product of basis letters in `U(A)`.
type Word = Vec<usize>;
type Pure = [Word; 3];

/// The MYBE left-hand side computed in `U(A)^{⊗3}` from first principles:
/// pure tensors multiply slotwise with a Koszul sign for every letter that
/// moves past another, `[R, S] = RS - SR` for even `R, S`, and each
/// two-letter word `ab` is then replaced by `½[a, b]` after confirming that
/// the words come in graded-antisymmetric pairs.
pub fn mybe_oracle(bracket: &Oracle, r: &[(usize, usize, Scalar)]) -> BTreeMap<(usize, usize, usize), Scalar> {
    let p = &bracket.p;
    let wp = |w: &Word| w.iter().fold(0u8, |acc, &i| acc ^ p[i]);
    let embed = |a: usize, b: usize| -> Vec<(Pure, Scalar)> {
        r.iter()
            .map(|(i, j, c)| {
                let mut t: Pure = [vec![], vec![], vec![]];
                t[a] = vec![*i];
                t[b] = vec![*j];
                (t, c.clone())
            })
            .collect()
    };
    let times = |x: &[(Pure, Scalar)], y: &[(Pure, Scalar)]| -> Vec<(Pure, Scalar)> {
        let mut out = Vec::new();
        for (s, a) in x {
            for (t, b) in y {
                let mut sign = q(1);
                for u in 0..3 {
                    for v in 0..u {
                        sign = sign * sg(wp(&s[u]), wp(&t[v]));
                    }
                }
                let w: Pure = [0, 1, 2].map(|k| [s[k].clone(), t[k].clone()].concat());
                out.push((w, &(a * b) * &sign));
            }
        }
        out
    };
    let (r12, r13, r23) = (embed(0, 1), embed(0, 2), embed(1, 2));
    let mut words: BTreeMap<Pure, Scalar> = BTreeMap::new();
    for (x, y) in [(&r12, &r13), (&r12, &r23), (&r13, &r23)] {
        for (w, c) in times(x, y) {
            *words.entry(w).or_insert_with(|| q(0)) += c;
        }
        for (w, c) in times(y, x) {
            *words.entry(w).or_insert_with(|| q(0)) -= c;
        }
    }
    let mut out: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
    let half = Scalar::ratio(1, 2).unwrap();
    for (w, c) in &words {
        if c.is_zero() {
            continue;
        }
        let slot = (0..3).find(|&k| w[k].len() == 2).expect("one slot holds two letters");
        let (a, b) = (w[slot][0], w[slot][1]);
        let mut swapped = w.clone();
        swapped[slot] = vec![b, a];
        let partner = words.get(&swapped).cloned().unwrap_or_else(|| q(0));
        assert_eq!(c, &-(&partner * &sg(p[a], p[b])), "words do not pair into brackets");
        let br = bracket.mul(&bracket.e(a), &bracket.e(b));
        for (m, v) in br.into_iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let mut idx = [0usize; 3];
            for k in 0..3 {
                idx[k] = if k == slot { m } else { w[k][0] };
            }
            *out.entry((idx[0], idx[1], idx[2])).or_insert_with(|| q(0)) += &(c * &v) * &half;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}
