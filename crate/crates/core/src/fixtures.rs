//! Example algebras, representations and seeded random data.
//!
//! Everything here is deterministic: random objects come from a ChaCha
//! generator seeded by the caller.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Superalgebra, MUL, PREC, SUCC};
use crate::graded::{GradedLinearMap, Parity, SuperSpace, Tensor2};
use crate::linalg::{self, Matrix};
use crate::modules::{Bimodule, Representation};
use crate::scalar::{q, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn labelled(even: &[&str], odd: &[&str]) -> SuperSpace {
    let labels = even.iter().chain(odd).map(|s| s.to_string()).collect();
    SuperSpace::with_labels(even.len(), odd.len(), labels).expect("fixture labels are distinct")
}

fn table(space: SuperSpace, entries: &[(usize, usize, usize, i64)]) -> Superalgebra {
    let e = entries.iter().map(|&(i, j, k, c)| (i, j, k, q(c))).collect();
    Superalgebra::with_product(space, e).expect("fixture table is homogeneous")
}

/// The zero product on a space of graded dimension `even|odd`.
pub fn zero_algebra(even: usize, odd: usize) -> Superalgebra {
    Superalgebra::zero(SuperSpace::new(even, odd))
}

/// `sl(2)` with basis `h, e, f`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> Superalgebra {
    table(
        labelled(&["h", "e", "f"], &[]),
        &[(0, 1, 1, 2), (1, 0, 1, -2), (0, 2, 2, -2), (2, 0, 2, 2), (1, 2, 0, 1), (2, 1, 0, -1)],
    )
}

/// Cayley–Dickson doubling of `Q` with parameters `gammas`, dimension
/// `2^gammas.len()`, purely even. The doubling rule is
/// `(a, b)(c, d) = (ac + γ d̄ b, d a + b c̄)`.
pub fn cayley_dickson(gammas: &[i64]) -> Superalgebra {
    let n = 1usize << gammas.len();
    let g: Vec<Scalar> = gammas.iter().map(|&x| q(x)).collect();
    Superalgebra::from_fn(SuperSpace::new(n, 0), MUL, |i, j| {
        let mut x = vec![Scalar::zero(); n];
        let mut y = vec![Scalar::zero(); n];
        x[i] = Scalar::one();
        y[j] = Scalar::one();
        cd_mul(&x, &y, &g)
    })
    .expect("purely even table")
}

fn cd_conj(x: &[Scalar]) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = x.iter().map(|c| -c).collect();
    out[0] = x[0].clone();
    out
}

fn cd_mul(x: &[Scalar], y: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
    if x.len() == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = x.len() / 2;
    let gk = &g[g.len() - 1];
    let rest = &g[..g.len() - 1];
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let ac = cd_mul(a, c, rest);
    let dbar_b = cd_mul(&cd_conj(d), b, rest);
    let da = cd_mul(d, a, rest);
    let b_cbar = cd_mul(b, &cd_conj(c), rest);
    let mut out: Vec<Scalar> = ac.iter().zip(&dbar_b).map(|(u, v)| u + gk * v).collect();
    out.extend(da.iter().zip(&b_cbar).map(|(u, v)| u + v));
    out
}

/// Split octonions in the Zorn vector-matrix basis
/// `E11, u1, u2, u3, v1, v2, v3, E22`, where an element is
/// `[[α, u], [v, β]]` and
/// `[[α,u],[v,β]][[α',u'],[v',β']] = [[αα' + u·v', αu' + β'u - v×v'], [α'v + βv' + u×u', ββ' + v·u']]`.
/// Several basis elements are nilpotent, which makes sparse Rota–Baxter
/// operators easy to find.
pub fn split_octonions() -> Superalgebra {
    let space = labelled(&["E11", "u1", "u2", "u3", "v1", "v2", "v3", "E22"], &[]);
    Superalgebra::from_fn(space, MUL, |i, j| {
        let x = zorn_unpack(i);
        let y = zorn_unpack(j);
        zorn_pack(&zorn_mul(&x, &y))
    })
    .expect("purely even table")
}

type Zorn = (i64, [i64; 3], [i64; 3], i64);

fn zorn_unpack(i: usize) -> Zorn {
    let mut z: Zorn = (0, [0; 3], [0; 3], 0);
    match i {
        0 => z.0 = 1,
        1..=3 => z.1[i - 1] = 1,
        4..=6 => z.2[i - 4] = 1,
        _ => z.3 = 1,
    }
    z
}

fn zorn_pack(z: &Zorn) -> Vec<Scalar> {
    let mut v = vec![q(z.0)];
    v.extend(z.1.iter().map(|&c| q(c)));
    v.extend(z.2.iter().map(|&c| q(c)));
    v.push(q(z.3));
    v
}

fn dot(a: &[i64; 3], b: &[i64; 3]) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &[i64; 3], b: &[i64; 3]) -> [i64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn zorn_mul(x: &Zorn, y: &Zorn) -> Zorn {
    let (a, u, v, b) = x;
    let (a2, u2, v2, b2) = y;
    let vv = cross(v, v2);
    let uu = cross(u, u2);
    (
        a * a2 + dot(u, v2),
        [0, 1, 2].map(|k| a * u2[k] + b2 * u[k] - vv[k]),
        [0, 1, 2].map(|k| a2 * v[k] + b * v2[k] + uu[k]),
        b * b2 + dot(v, u2),
    )
}

/// `A ⊗ Λ(ξ)` for a purely even algebra `A`: even part `A ⊗ 1`, odd part
/// `A ⊗ ξ`, with `(a ⊗ ξ^i)(b ⊗ ξ^j) = ab ⊗ ξ^{i+j}` and `ξ² = 0`.
pub fn grassmann_envelope(a: &Superalgebra) -> Superalgebra {
    assert_eq!(a.space().odd_dim(), 0, "envelope of a purely even algebra");
    let n = a.dim();
    let t = a.product().expect("single product");
    let labels: Vec<String> = a
        .space()
        .labels()
        .iter()
        .cloned()
        .chain(a.space().labels().iter().map(|l| format!("{l}ξ")))
        .collect();
    let space = SuperSpace::with_labels(n, n, labels).expect("distinct labels");
    let mut entries = Vec::new();
    for (i, j, k, c) in t.entries() {
        entries.push((i, j, k, c.clone()));
        entries.push((n + i, j, n + k, c.clone()));
        entries.push((i, n + j, n + k, c));
    }
    Superalgebra::with_product(space, entries).expect("homogeneous envelope")
}

/// `gl(1|1)` as an associative superalgebra on `E11, E22 | E12, E21`.
pub fn gl11_associative() -> Superalgebra {
    // 0 = E11, 1 = E22, 2 = E12, 3 = E21; EijEkl = δjk Eil
    let idx = |i: usize, j: usize| match (i, j) {
        (1, 1) => 0,
        (2, 2) => 1,
        (1, 2) => 2,
        _ => 3,
    };
    let units = [(1, 1), (2, 2), (1, 2), (2, 1)];
    let mut entries = Vec::new();
    for (a, &(i, j)) in units.iter().enumerate() {
        for (b, &(k, l)) in units.iter().enumerate() {
            if j == k {
                entries.push((a, b, idx(i, l), 1));
            }
        }
    }
    table(labelled(&["E11", "E22"], &["E12", "E21"]), &entries)
}

/// The 1|1 Lie superalgebra `[e, f] = f`.
pub fn malcev_1_1() -> Superalgebra {
    table(labelled(&["e"], &["f"]), &[(0, 1, 1, 1), (1, 0, 1, -1)])
}

/// The 4-dimensional non-Lie Malcev algebra:
/// `[e1,e2] = -e2`, `[e1,e3] = -e3`, `[e1,e4] = e4`, `[e2,e3] = 2e4`.
pub fn sagle() -> Superalgebra {
    table(
        SuperSpace::new(4, 0),
        &[
            (0, 1, 1, -1),
            (1, 0, 1, 1),
            (0, 2, 2, -1),
            (2, 0, 2, 1),
            (0, 3, 3, 1),
            (3, 0, 3, -1),
            (1, 2, 3, 2),
            (2, 1, 3, -2),
        ],
    )
}

/// A 1|1 pre-Malcev superalgebra with nonzero odd square:
/// `e·e = e`, `e·f = f`, `f·e = f`, `f·f = e`. Its commutator has `[f, f] = 2e`.
pub fn pre_malcev_1_1() -> Superalgebra {
    let (a, b, c, d) = pre_malcev_1_1_params();
    pre_malcev_1_1_family(a, b, c, d)
}

/// `e·e = αe, e·f = βf, f·e = γf, f·f = δe` on a 1|1 space.
pub fn pre_malcev_1_1_family(alpha: i64, beta: i64, gamma: i64, delta: i64) -> Superalgebra {
    table(
        labelled(&["e"], &["f"]),
        &[(0, 0, 0, alpha), (0, 1, 1, beta), (1, 0, 1, gamma), (1, 1, 0, delta)]
            .into_iter()
            .filter(|e| e.3 != 0)
            .collect::<Vec<_>>(),
    )
}

/// Parameters `(α, β, γ, δ)` of [`pre_malcev_1_1`] in [`pre_malcev_1_1_family`].
pub fn pre_malcev_1_1_params() -> (i64, i64, i64, i64) {
    (1, 1, 1, 1)
}

/// A second 1|1 pre-Malcev superalgebra, `e·e = -e`, `e·f = f`, `f·e = 2f`,
/// whose commutator has `[e, f] = -f`.
pub fn pre_malcev_1_1_b() -> Superalgebra {
    pre_malcev_1_1_family(-1, 1, 2, 0)
}

/// A pre-alternative algebra with both products zero.
pub fn zero_pre_alternative(even: usize, odd: usize) -> Superalgebra {
    Superalgebra::pre_alternative(SuperSpace::new(even, odd), vec![], vec![]).expect("empty tables")
}

/// `x ≺ y = x ⋆ R(y)`, `x ≻ y = R(x) ⋆ y` for a Rota–Baxter operator `R`
/// on an alternative algebra.
pub fn pre_alternative_from_rota_baxter(a: &Superalgebra, r: &GradedLinearMap) -> Superalgebra {
    let t = a.product().expect("single product");
    let n = a.dim();
    let col = |j: usize| r.column(j);
    let e = |i: usize| {
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::one();
        v
    };
    Superalgebra::from_fn(a.space().clone(), PREC, |i, j| t.mul(&e(i), &col(j)))
        .and_then(|s| s.with_extra_product(SUCC, |i, j| t.mul(&col(i), &e(j))))
        .expect("even operator keeps tables homogeneous")
}

/// A uniformly random integer in `-range..=range` as a scalar.
fn rand_scalar(rng: &mut ChaCha8Rng, range: i64) -> Scalar {
    q(rng.gen_range(-range..=range))
}

/// A random product on `space` with integer structure constants in
/// `-range..=range`, respecting parity; `density` is the chance an allowed
/// constant is nonzero.
pub fn random_product(space: &SuperSpace, seed: u64, range: i64, density: f64) -> Superalgebra {
    let mut g = rng(seed);
    let n = space.dim();
    Superalgebra::from_fn(space.clone(), MUL, |i, j| {
        (0..n)
            .map(|k| {
                if space.parity(k) == space.parity(i) + space.parity(j) && g.gen_bool(density) {
                    rand_scalar(&mut g, range)
                } else {
                    Scalar::zero()
                }
            })
            .collect()
    })
    .expect("random table respects parity")
}

/// A random homogeneous matrix `cod × dom` of the given parity.
pub fn random_matrix(rng: &mut ChaCha8Rng, dom: &SuperSpace, cod: &SuperSpace, parity: Parity, range: i64) -> Matrix {
    let mut m = linalg::zeros(cod.dim(), dom.dim());
    for (i, row) in m.iter_mut().enumerate() {
        for (j, c) in row.iter_mut().enumerate() {
            if cod.parity(i) == dom.parity(j) + parity {
                *c = rand_scalar(rng, range);
            }
        }
    }
    m
}

pub fn random_even_map(dom: &SuperSpace, cod: &SuperSpace, seed: u64, range: i64) -> GradedLinearMap {
    let mut g = rng(seed);
    let m = random_matrix(&mut g, dom, cod, Parity::Even, range);
    GradedLinearMap::new(dom.clone(), cod.clone(), m, Parity::Even).expect("even by construction")
}

/// A random even invertible map `V → V`.
pub fn random_even_automorphism(space: &SuperSpace, rng: &mut ChaCha8Rng, range: i64) -> GradedLinearMap {
    loop {
        let m = random_matrix(rng, space, space, Parity::Even, range);
        let phi = GradedLinearMap::new(space.clone(), space.clone(), m, Parity::Even).expect("even");
        if phi.is_invertible() {
            return phi;
        }
    }
}

/// A random even action of `algebra` on `space` (not a representation in general).
pub fn random_action(algebra: &Superalgebra, space: &SuperSpace, seed: u64, range: i64) -> Representation {
    let mut g = rng(seed);
    let mats = (0..algebra.dim())
        .map(|i| random_matrix(&mut g, space, space, algebra.space().parity(i), range))
        .collect();
    Representation::from_matrices(algebra.clone(), space.clone(), mats).expect("parity respected")
}

/// `φ ρ(x) φ^{-1}` for an even automorphism `φ` of the module.
pub fn conjugate(r: &Representation, phi: &GradedLinearMap) -> Representation {
    let inv = phi.inverse().expect("invertible");
    let action = r
        .actions()
        .iter()
        .map(|m| phi.compose(m).and_then(|pm| pm.compose(&inv)).expect("shapes agree"))
        .collect();
    Representation::new(r.algebra().clone(), r.space().clone(), action).expect("conjugation preserves parity")
}

/// Adds `delta` to one parity-allowed entry of one action matrix, chosen by `rng`.
pub fn perturb(r: &Representation, rng: &mut ChaCha8Rng, delta: &Scalar) -> Representation {
    let a = r.algebra();
    let v = r.space();
    let mut slots = Vec::new();
    for i in 0..a.dim() {
        for row in 0..v.dim() {
            for col in 0..v.dim() {
                if v.parity(row) == v.parity(col) + a.space().parity(i) {
                    slots.push((i, row, col));
                }
            }
        }
    }
    let (i, row, col) = slots[rng.gen_range(0..slots.len())];
    let mut mats: Vec<Matrix> = r.actions().iter().map(|m| m.matrix().clone()).collect();
    mats[i][row][col] += delta;
    Representation::from_matrices(a.clone(), v.clone(), mats).expect("perturbation keeps parity")
}

/// The standard 2-dimensional representation of [`sl2`].
pub fn sl2_standard() -> Representation {
    let m = |rows: [[i64; 2]; 2]| rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect::<Matrix>();
    Representation::from_matrices(
        sl2(),
        SuperSpace::new(2, 0),
        vec![m([[1, 0], [0, -1]]), m([[0, 1], [0, 0]]), m([[0, 0], [1, 0]])],
    )
    .expect("even matrices")
}

/// A 1|1 representation of [`malcev_1_1`] with nonzero odd action:
/// `ρ(e) = diag(1, 0)`, `ρ(f) = E12`.
pub fn malcev_1_1_module() -> Representation {
    let m = |rows: [[i64; 2]; 2]| rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect::<Matrix>();
    Representation::from_matrices(
        malcev_1_1(),
        SuperSpace::new(1, 1),
        vec![m([[1, 0], [0, 0]]), m([[0, 1], [0, 0]])],
    )
    .expect("homogeneous matrices")
}

/// An O-operator `V → sl(2)` for [`sl2_standard`]: `T(v1) = -h`, `T(v2) = -f`.
pub fn sl2_standard_oop() -> GradedLinearMap {
    let m = sparse(3, 2, &[(0, 0, -1), (2, 1, -1)]);
    GradedLinearMap::new(SuperSpace::new(2, 0), sl2().space().clone(), m, Parity::Even).expect("even map")
}

/// A Rota–Baxter operator on [`split_octonions`]: `R(u1) = -E11`, `R(u3) = -u2`.
pub fn split_octonion_rb() -> GradedLinearMap {
    let space = split_octonions().space().clone();
    GradedLinearMap::new(space.clone(), space, sparse(8, 8, &[(0, 1, -1), (2, 3, -1)]), Parity::Even).expect("even map")
}

/// `R ⊗ id` on the Grassmann envelope of a purely even algebra.
pub fn envelope_operator(r: &GradedLinearMap, env: &Superalgebra) -> GradedLinearMap {
    let n = r.domain().dim();
    let mut m = linalg::zeros(2 * n, 2 * n);
    for (i, row) in r.matrix().iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            m[i][j] = c.clone();
            m[n + i][n + j] = c.clone();
        }
    }
    GradedLinearMap::new(env.space().clone(), env.space().clone(), m, Parity::Even).expect("block diagonal map is even")
}

fn sparse(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> Matrix {
    let mut m = linalg::zeros(rows, cols);
    for &(i, j, c) in entries {
        m[i][j] = q(c);
    }
    m
}

/// Regular bimodule of an alternative algebra.
pub fn regular_bimodule(a: &Superalgebra) -> Bimodule {
    Bimodule::regular(a).expect("single product")
}

/// Skew-supersymmetric parity-0 tensor with random integer coefficients.
pub fn random_skew_tensor(space: &SuperSpace, seed: u64, range: i64) -> Tensor2 {
    let mut g = rng(seed);
    let n = space.dim();
    let mut c = linalg::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            if space.parity(i) != space.parity(j) {
                continue;
            }
            let odd = space.parity(i).is_odd();
            if i == j && !odd {
                continue;
            }
            let v = rand_scalar(&mut g, range);
            c[i][j] = v.clone();
            c[j][i] = if odd { v } else { -v };
        }
    }
    Tensor2::new(space.clone(), c, Parity::Even).expect("parity-0 pattern")
}
