//! Cell data of the affine pavings of `Hilb^{[τ]}(C,0)` and `J̄(C,0)`.
//!
//! The Δ-side formula `dim H_Δ^{[τ]} = dim Δ − |Gaps(τ − e(Δ))|` routes
//! through generator arithmetic; the D-side formula
//! `dim H^{[τ]} = (|D| − dinv(D)) + ε̂_D(τ_0)` routes through the enhanced
//! rank.  The two share no code, so their agreement is a genuine test.

use crate::bijection::{psi, PsiData};
use crate::dyck::DyckPath;
use crate::semigroup::Params;
use crate::semimodule::{enumerate_admissible, CMatrix, Semimodule};
use crate::{Error, Result};

/// One cell `H_Δ^{[τ]}` of the paving of `Hilb^{[τ]}(C,0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellRecord {
    pub cmatrix: CMatrix,
    pub delta: Semimodule,
    pub tau: i64,
    /// `τ_0 = τ − e(Δ) ∈ Δ`.
    pub tau0: i64,
    /// `dim Δ − |Gaps(τ_0)| ≥ 0`.
    pub dim: i64,
}

/// Cell dimension on the Δ-side: `None` iff `τ − e(Δ) ∉ Δ` (including
/// `τ < e(Δ)`), otherwise `dim Δ − |Gaps(τ − e(Δ))|`.
pub fn hilb_cell_dim(s: &Semimodule, tau: i64) -> Option<i64> {
    let tau0 = tau - s.e();
    if tau0 < 0 || !s.contains(tau0) {
        return None;
    }
    Some(s.dim_gaps() - s.gaps_count_from(tau0))
}

/// All cells of `Hilb^{[τ]}(C,0)`, ordered by the lexicographic c-matrix
/// order of Δ.  For `τ ≥ 2δ` this is the full Jacobian paving.
pub fn hilb_cells(params: &Params, tau: i64) -> Vec<CellRecord> {
    enumerate_admissible(params)
        .into_iter()
        .filter_map(|c| {
            let s = Semimodule::from_cmatrix(&c);
            hilb_cell_dim(&s, tau).map(|dim| CellRecord {
                tau,
                tau0: tau - s.e(),
                dim,
                cmatrix: c,
                delta: s,
            })
        })
        .collect()
}

fn column_residue(data_n: i64, m_inv: i64, r: i64) -> i64 {
    (m_inv * r.rem_euclid(data_n)) % data_n
}

/// `τ_0 ∈ Ψ_d(D)` decided purely on the D-side: writing `τ_0 = d·r + k`,
/// the condition is `r ≥ rk_{D, s_ℓ(k), ℓ}` with `ℓ ≡ m⁻¹·r (mod n)`.
pub fn tau0_in_delta_via_rank(path: &DyckPath, tau0: i64) -> bool {
    tau0_in_delta_with(path, &psi(path).1, tau0)
}

/// As [`tau0_in_delta_via_rank`], reusing precomputed `Ψ_d` data.
pub fn tau0_in_delta_with(path: &DyckPath, data: &PsiData, tau0: i64) -> bool {
    if tau0 < 0 {
        return false;
    }
    let p = path.params();
    let (n, d) = (p.n(), p.d());
    let r = tau0.div_euclid(d);
    let k = (tau0 - d * r) as usize;
    let ell = column_residue(n, p.m_inv_mod_n(), r);
    let row = data.sj[ell as usize][k] as i64;
    r >= path.rank(row * n + ell)
}

/// `ε_D(τ_0) = #{0 ≤ i ≤ k−1 : rk_{D, s_ℓ(i), ℓ} > r}`, the boxes of
/// `R⁺∖D` at rank exactly `r` with enhanced rank below `τ_0`.
pub fn eps(path: &DyckPath, tau0: i64) -> Result<i64> {
    eps_with(path, &psi(path).1, tau0)
}

/// As [`eps`], reusing precomputed `Ψ_d` data.
pub fn eps_with(path: &DyckPath, data: &PsiData, tau0: i64) -> Result<i64> {
    if !tau0_in_delta_with(path, data, tau0) {
        return Err(Error::NotInSemimodule(tau0));
    }
    let p = path.params();
    let (n, d) = (p.n(), p.d());
    let r = tau0.div_euclid(d);
    let k = (tau0 - d * r) as usize;
    let ell = column_residue(n, p.m_inv_mod_n(), r);
    let count = (0..k)
        .filter(|&i| {
            let row = data.sj[ell as usize][i] as i64;
            path.rank(row * n + ell) > r
        })
        .count();
    Ok(count as i64)
}

/// `ε̂_D(τ_0) = #{z ∈ R⁺∖D : rk(z) < r} + ε_D(τ_0)`, the number of boxes of
/// `R⁺∖D` with enhanced rank below `τ_0`.
pub fn eps_hat(path: &DyckPath, tau0: i64) -> Result<i64> {
    eps_hat_with(path, &psi(path).1, tau0)
}

/// As [`eps_hat`], reusing precomputed `Ψ_d` data.
pub fn eps_hat_with(path: &DyckPath, data: &PsiData, tau0: i64) -> Result<i64> {
    let e = eps_with(path, data, tau0)?;
    let p = path.params();
    let r = tau0.div_euclid(p.d());
    let mut below = 0;
    for x in 0..p.dn() {
        for y in path.height(x) + 1..=p.a_col(x) {
            if p.rank(x, y) < r {
                below += 1;
            }
        }
    }
    Ok(below + e)
}

/// Cell dimension on the D-side:
/// `dim H_Δ^{[τ_0 + e]} = (|D| − dinv(D)) + ε̂_D(τ_0)`.
pub fn cell_dim_via_dyck(path: &DyckPath, tau0: i64) -> Result<i64> {
    let data = psi(path).1;
    Ok(path.size() - path.dinv() + eps_hat_with(path, &data, tau0)?)
}
