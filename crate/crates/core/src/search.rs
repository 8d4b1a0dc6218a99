//! Exhaustive and sparse searches for O-operators, Rota–Baxter operators and
//! MYBE solutions over small integer grids.
//!
//! Candidates are screened in machine integers and every hit is re-verified
//! with the exact checker before it is returned. Results come back in the
//! enumeration order regardless of the thread count.

use rayon::prelude::*;

use crate::algebra::{ProductTable, Superalgebra};
use crate::error::{Error, Result};
use crate::graded::{GradedLinearMap, Parity, SuperSpace, Tensor2};
use crate::linalg;
use crate::modules::{Bimodule, Representation};
use crate::operators::{check_o_operator_alternative, check_o_operator_malcev};
use crate::scalar::Scalar;
use crate::yangbaxter::{mybe_lhs, MybeCandidate};

/// Default entry range `{-2, ..., 2}`.
pub const DEFAULT_RANGE: i64 = 2;

/// Integer form of `T(a) ∘ T(b) = T(P(T(a)) b + sgn(a,b) Q(T(b)) a)`,
/// covering the Malcev (`P = Q = ρ`, `sgn = -(-1)^{|a||b|}`) and
/// alternative (`P = 𝔩`, `Q = 𝔯`, `sgn = 1`) O-operator equations.
struct IntProblem {
    n: usize,
    dv: usize,
    c: Vec<i64>,
    p: Vec<i64>,
    q: Vec<i64>,
    sgn: Vec<i64>,
}

fn int(s: &Scalar) -> Result<i64> {
    s.to_i64()
        .ok_or_else(|| Error::NotApplicable(format!("integer search needs integer structure constants, found {s}")))
}

fn int_table(t: &ProductTable) -> Result<Vec<i64>> {
    let n = t.dim();
    let mut c = vec![0; n * n * n];
    for (i, j, k, v) in t.entries() {
        c[(i * n + j) * n + k] = int(&v)?;
    }
    Ok(c)
}

fn int_maps(maps: &[&GradedLinearMap], dv: usize) -> Result<Vec<i64>> {
    let mut out = vec![0; maps.len() * dv * dv];
    for (i, m) in maps.iter().enumerate() {
        for (r, row) in m.matrix().iter().enumerate() {
            for (col, v) in row.iter().enumerate() {
                out[(i * dv + r) * dv + col] = int(v)?;
            }
        }
    }
    Ok(out)
}

impl IntProblem {
    fn malcev(rep: &Representation) -> Result<Self> {
        let n = rep.algebra().dim();
        let dv = rep.space().dim();
        let acts: Vec<&GradedLinearMap> = rep.actions().iter().collect();
        let p = int_maps(&acts, dv)?;
        let pv = rep.space().parities();
        let mut sgn = vec![0; dv * dv];
        for a in 0..dv {
            for b in 0..dv {
                sgn[a * dv + b] = if pv[a].is_odd() && pv[b].is_odd() { 1 } else { -1 };
            }
        }
        Ok(IntProblem {
            n,
            dv,
            c: int_table(rep.algebra().product()?)?,
            q: p.clone(),
            p,
            sgn,
        })
    }

    fn alternative(b: &Bimodule) -> Result<Self> {
        let n = b.algebra().dim();
        let dv = b.space().dim();
        let left: Vec<&GradedLinearMap> = (0..n).map(|i| b.left(i)).collect();
        let right: Vec<&GradedLinearMap> = (0..n).map(|i| b.right(i)).collect();
        Ok(IntProblem {
            n,
            dv,
            c: int_table(b.algebra().product()?)?,
            p: int_maps(&left, dv)?,
            q: int_maps(&right, dv)?,
            sgn: vec![1; dv * dv],
        })
    }

    /// `t` is row-major `n × dv`. Stops at the first failing pair.
    fn holds(&self, t: &[i64]) -> bool {
        let (n, dv) = (self.n, self.dv);
        let mut lhs = vec![0i64; n];
        let mut inner = vec![0i64; dv];
        for a in 0..dv {
            for b in 0..dv {
                lhs.iter_mut().for_each(|v| *v = 0);
                inner.iter_mut().for_each(|v| *v = 0);
                let s = self.sgn[a * dv + b];
                for i in 0..n {
                    let xi = t[i * dv + a];
                    let yi = t[i * dv + b];
                    if xi != 0 {
                        for j in 0..n {
                            let yj = t[j * dv + b];
                            if yj != 0 {
                                let base = (i * n + j) * n;
                                for (k, l) in lhs.iter_mut().enumerate() {
                                    *l += xi * yj * self.c[base + k];
                                }
                            }
                        }
                        for (m, v) in inner.iter_mut().enumerate() {
                            *v += xi * self.p[(i * dv + m) * dv + b];
                        }
                    }
                    if yi != 0 {
                        for (m, v) in inner.iter_mut().enumerate() {
                            *v += s * yi * self.q[(i * dv + m) * dv + a];
                        }
                    }
                }
                for (k, l) in lhs.iter().enumerate() {
                    let rhs: i64 = (0..dv).map(|m| t[k * dv + m] * inner[m]).sum();
                    if *l != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Positions `(row, col)` of an even map `dom → cod`.
pub fn even_positions(dom: &SuperSpace, cod: &SuperSpace) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 0..cod.dim() {
        for c in 0..dom.dim() {
            if cod.parity(r) == dom.parity(c) {
                out.push((r, c));
            }
        }
    }
    out
}

fn to_map(dom: &SuperSpace, cod: &SuperSpace, t: &[i64]) -> GradedLinearMap {
    let dv = dom.dim();
    let m = (0..cod.dim())
        .map(|r| (0..dv).map(|c| Scalar::from_int(t[r * dv + c])).collect())
        .collect();
    GradedLinearMap::new(dom.clone(), cod.clone(), m, Parity::Even).expect("even pattern")
}

fn decode_grid(mut code: u64, positions: &[(usize, usize)], dv: usize, n: usize, range: i64) -> Vec<i64> {
    let base = (2 * range + 1) as u64;
    let mut t = vec![0i64; n * dv];
    for &(r, c) in positions.iter().rev() {
        t[r * dv + c] = (code % base) as i64 - range;
        code /= base;
    }
    t
}

fn grid_size(positions: usize, range: i64) -> Result<u64> {
    (2 * range as u64 + 1)
        .checked_pow(positions as u32)
        .filter(|&s| s <= 1 << 32)
        .ok_or_else(|| Error::NotApplicable(format!("grid of {positions} entries in ±{range} is too large")))
}

fn run_grid(prob: &IntProblem, dom: &SuperSpace, cod: &SuperSpace, range: i64) -> Result<Vec<GradedLinearMap>> {
    let positions = even_positions(dom, cod);
    let total = grid_size(positions.len(), range)?;
    let hits: Vec<Vec<i64>> = (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let t = decode_grid(code, &positions, prob.dv, prob.n, range);
            prob.holds(&t).then_some(t)
        })
        .collect();
    Ok(hits.iter().map(|t| to_map(dom, cod, t)).collect())
}

/// All even `T: V → A` with entries in `{-range, ..., range}` that are
/// O-operators for `rep`, in lexicographic order of their entries.
pub fn grid_o_operators(rep: &Representation, range: i64) -> Result<Vec<GradedLinearMap>> {
    let prob = IntProblem::malcev(rep)?;
    let found = run_grid(&prob, rep.space(), rep.algebra().space(), range)?;
    exact_filter(found, |t| Ok(check_o_operator_malcev(t, rep)?.holds()))
}

/// Weight-zero Rota–Baxter operators on `a` with entries in the grid.
pub fn grid_rota_baxter(a: &Superalgebra, range: i64) -> Result<Vec<GradedLinearMap>> {
    grid_o_operators(&Representation::adjoint(a)?, range)
}

/// O-operators for an alternative bimodule with at most `max_nonzero`
/// nonzero entries, each taken from `values`. Suited to larger algebras
/// where the full grid is out of reach.
pub fn sparse_o_operators_alternative(b: &Bimodule, max_nonzero: usize, values: &[i64]) -> Result<Vec<GradedLinearMap>> {
    let prob = IntProblem::alternative(b)?;
    let (dom, cod) = (b.space(), b.algebra().space());
    let positions = even_positions(dom, cod);
    let mut supports: Vec<Vec<usize>> = Vec::new();
    for k in 1..=max_nonzero.min(positions.len()) {
        combinations(positions.len(), k, &mut Vec::new(), 0, &mut supports);
    }
    let cands: Vec<(usize, u64)> = supports
        .iter()
        .enumerate()
        .flat_map(|(s, sup)| (0..(values.len() as u64).pow(sup.len() as u32)).map(move |v| (s, v)))
        .collect();
    let hits: Vec<Vec<i64>> = cands
        .into_par_iter()
        .filter_map(|(s, mut code)| {
            let mut t = vec![0i64; prob.n * prob.dv];
            for &p in supports[s].iter().rev() {
                let (r, c) = positions[p];
                t[r * prob.dv + c] = values[(code % values.len() as u64) as usize];
                code /= values.len() as u64;
            }
            prob.holds(&t).then_some(t)
        })
        .collect();
    let found = hits.iter().map(|t| to_map(dom, cod, t)).collect();
    exact_filter(found, |t| Ok(check_o_operator_alternative(t, b)?.holds()))
}

fn combinations(n: usize, k: usize, cur: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        cur.push(i);
        combinations(n, k, cur, i + 1, out);
        cur.pop();
    }
}

fn exact_filter(found: Vec<GradedLinearMap>, check: impl Fn(&GradedLinearMap) -> Result<bool> + Sync) -> Result<Vec<GradedLinearMap>> {
    let verdicts: Vec<Result<bool>> = found.par_iter().map(&check).collect();
    let mut out = Vec::with_capacity(found.len());
    for (t, v) in found.into_iter().zip(verdicts) {
        if v? {
            out.push(t);
        }
    }
    Ok(out)
}

/// A basis of the parity-0 skew-supersymmetric tensors: `b_i⊗b_j - b_j⊗b_i`
/// for even pairs `i < j`, and `b_i⊗b_j + b_j⊗b_i` (or `b_i⊗b_i`) for odd pairs `i <= j`.
pub fn skew_tensor_basis(space: &SuperSpace) -> Vec<Tensor2> {
    let n = space.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            if space.parity(i) != space.parity(j) {
                continue;
            }
            let odd = space.parity(i).is_odd();
            if i == j && !odd {
                continue;
            }
            let mut c = linalg::zeros(n, n);
            c[i][j] = Scalar::one();
            c[j][i] = if odd { Scalar::one() } else { -Scalar::one() };
            out.push(Tensor2::new(space.clone(), c, Parity::Even).expect("parity-0 pattern"));
        }
    }
    out
}

/// Skew-supersymmetric MYBE solutions whose coordinates in [`skew_tensor_basis`]
/// lie in `{-range, ..., range}`.
pub fn grid_mybe_solutions(a: &Superalgebra, range: i64) -> Result<Vec<Tensor2>> {
    let basis = skew_tensor_basis(a.space());
    let total = grid_size(basis.len(), range)?;
    let zero = MybeCandidate::zero(a.clone())?;
    let base = (2 * range + 1) as u64;
    Ok((0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut r = Tensor2::zero(a.space());
            for b in basis.iter().rev() {
                let v = (code % base) as i64 - range;
                code /= base;
                if v != 0 {
                    r = r.add(&b.scale(&Scalar::from_int(v))).expect("same space");
                }
            }
            let c = MybeCandidate::new(zero.algebra().clone(), r.clone()).expect("parity 0");
            mybe_lhs(&c).is_zero().then_some(r)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::operators::{check_rota_baxter, RbVariant};

    #[test]
    fn rota_baxter_grid_on_sl2_is_exact() {
        let a = fixtures::sl2();
        let found = grid_rota_baxter(&a, 1).unwrap();
        assert!(found.len() >= 10);
        assert!(found.iter().any(|t| t.is_zero()));
        for t in &found {
            assert!(check_rota_baxter(t, &a, RbVariant::Unsigned).unwrap().holds());
        }
    }

    #[test]
    fn integer_screen_matches_exact_check() {
        let rep = fixtures::malcev_1_1_module();
        let prob = IntProblem::malcev(&rep).unwrap();
        let positions = even_positions(rep.space(), rep.algebra().space());
        for code in 0..grid_size(positions.len(), 1).unwrap() {
            let t = decode_grid(code, &positions, prob.dv, prob.n, 1);
            let exact = check_o_operator_malcev(&to_map(rep.space(), rep.algebra().space(), &t), &rep).unwrap();
            assert_eq!(prob.holds(&t), exact.holds(), "{t:?}");
        }
    }

    #[test]
    fn mybe_grid_on_sl2() {
        let sols = grid_mybe_solutions(&fixtures::sl2(), 2).unwrap();
        assert!(sols.iter().any(|r| r.is_zero()));
        assert!(sols.len() > 1);
    }
}
