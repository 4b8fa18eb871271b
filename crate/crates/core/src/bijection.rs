//! The inverse bijections `Ψ_d : Y(dn,dm) → 𝒜dm(dn,dm)` and `Φ_d`, the
//! enhanced rank, the sweep map `ζ` and the generator–cogenerator statistic
//! `𝒢`.
//!
//! Both bijections are staged rank-vector rewrites: `Ψ_d` deletes an n-block
//! of the rank vector at the move index `p_u` (for `u = d−1, …, 1`), `Φ_d`
//! reinserts one at `p̃_u` (for `u = 1, …, d−1`).  Every intermediate stage is
//! retained in [`PsiData`] / [`PhiData`] so that tests can inspect the
//! construction directly.
//!
//! Permutations of `[0, d−1]` are stored as explicit image arrays with their
//! inverses precomputed; `s_{j,u}` is the cycle `(i_{j,u} … u)` sending
//! `i ↦ i+1` on `[i_{j,u}, u)` and `u ↦ i_{j,u}`.

use crate::dyck::DyckPath;
use crate::semimodule::{CMatrix, Semimodule};

type Perm = Vec<usize>;

fn identity(d: usize) -> Perm {
    (0..d).collect()
}

/// The cycle `(lo lo+1 … hi)`: `i ↦ i+1` on `[lo, hi)`, `hi ↦ lo`, identity elsewhere.
fn cycle(lo: usize, hi: usize, d: usize) -> Perm {
    let mut p = identity(d);
    if lo < hi {
        for (i, img) in p.iter_mut().enumerate().take(hi).skip(lo) {
            *img = i + 1;
        }
        p[hi] = lo;
    }
    p
}

/// `(f ∘ g)(i) = f(g(i))`.
fn compose(f: &Perm, g: &Perm) -> Perm {
    g.iter().map(|&i| f[i]).collect()
}

fn inverse(p: &Perm) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &img) in p.iter().enumerate() {
        inv[img] = i;
    }
    inv
}

/// `s_{j,d−1} ∘ … ∘ s_{j,1}` from the per-stage permutations.
fn compose_stages(stages: &[Perm], d: usize) -> Perm {
    let mut s = identity(d);
    for stage in stages {
        s = compose(stage, &s);
    }
    s
}

/// Staged data of `Ψ_d`: move indices, permutation indices and permutations,
/// their compositions, and every intermediate rank vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiData {
    n: i64,
    m: i64,
    d: i64,
    m_inv_mod_n: i64,
    /// `p_1 < p_2 < … < p_{d−1}` (empty for d = 1).
    pub p: Vec<i64>,
    /// `ij[j][u−1] = i_{j,u}`.
    pub ij: Vec<Vec<usize>>,
    /// `sju[j][u−1] = s_{j,u}` as an image array on `[0, d−1]`.
    pub sju: Vec<Vec<Perm>>,
    /// `sj[j] = s_{j,d−1} ∘ … ∘ s_{j,1}`.
    pub sj: Vec<Perm>,
    /// Precomputed inverses of `sj`.
    pub sj_inv: Vec<Perm>,
    /// `rk_stages[k] = rk^{[k]}`, of length `(d−k)·n`.
    pub rk_stages: Vec<Vec<i64>>,
}

impl PsiData {
    /// `r̂k_D(x, y) = d·rk(x, y) + s_j⁻¹(i)` for `x = i·n + j`.
    pub fn enhanced_rank(&self, x: i64, y: i64) -> i64 {
        assert!(0 <= x && x < self.d * self.n, "column {x} out of range");
        let (i, j) = ((x / self.n) as usize, (x % self.n) as usize);
        self.d * (self.m * x - self.n * y) + self.sj_inv[j][i] as i64
    }

    /// The unique box `(x, y) ∈ R̄⁺` with `r̂k_D(x, y) = v`, for `v ≥ 0`.
    pub fn enhanced_rank_inverse(&self, v: i64) -> (i64, i64) {
        assert!(v >= 0, "enhanced rank values are nonnegative on R̄⁺");
        let (n, m, d) = (self.n, self.m, self.d);
        let r = v.div_euclid(d);
        let k = (v - d * r) as usize;
        // The column residue ℓ is pinned by m·ℓ ≡ r (mod n).
        let ell = (self.m_inv_mod_n * r.rem_euclid(n)) % n;
        let i = self.sj[ell as usize][k] as i64;
        let x = i * n + ell;
        debug_assert_eq!((m * x - r).rem_euclid(n), 0);
        let y = (m * x - r) / n;
        (x, y)
    }
}

/// Staged data of `Φ_d`, mirroring [`PsiData`]; `rk_stages[u] = rk_Δ^{[u]}`
/// all have full length `dn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiData {
    /// `p̃_1 < p̃_2 < … < p̃_{d−1}` (empty for d = 1).
    pub p: Vec<i64>,
    /// `ij[j][u−1] = ĩ_{j,u}`.
    pub ij: Vec<Vec<usize>>,
    /// `sju[j][u−1] = s̃_{j,u}`.
    pub sju: Vec<Vec<Perm>>,
    /// `sj[j] = s̃_{j,d−1} ∘ … ∘ s̃_{j,1}`.
    pub sj: Vec<Perm>,
    pub sj_inv: Vec<Perm>,
    /// `rk_stages[u] = rk_Δ^{[u]}`, each of length `dn`.
    pub rk_stages: Vec<Vec<i64>>,
}

/// `Ψ_d`: from a Dyck path to the c-matrix of an admissible invariant subset.
///
/// Transport of statistics: `e(Ψ_d(D)) = |D|` and `dim Ψ_d(D) = co-dinv(D)`.
pub fn psi(path: &DyckPath) -> (CMatrix, PsiData) {
    let params = path.params();
    let (n, m, d) = (params.n() as usize, params.m(), params.d() as usize);

    let mut rk = path.rank_vector();
    let mut rk_stages = vec![rk.clone()];
    let mut p_by_u = vec![0i64; d.saturating_sub(1)];
    let mut ij = vec![vec![0usize; d - 1]; n];
    let mut sju = vec![vec![identity(d); d - 1]; n];

    for u in (1..d).rev() {
        // Current vector is rk^{[d−u−1]} of length (u+1)·n.
        let pu = (0..=u * n)
            .rev()
            .find(|&x| rk[x] <= rk[x + n - 1] + m)
            .expect("x = 0 always satisfies the move condition");
        p_by_u[u - 1] = pu as i64;
        for j in 0..n {
            let iju = (0..=u)
                .find(|&i| i * n + j >= pu)
                .expect("i = u always satisfies i·n + j ≥ p_u");
            ij[j][u - 1] = iju;
            sju[j][u - 1] = cycle(iju, u, d);
        }
        rk.drain(pu..pu + n);
        rk_stages.push(rk.clone());
    }

    let sj: Vec<Perm> = sju.iter().map(|stages| compose_stages(stages, d)).collect();
    let sj_inv: Vec<Perm> = sj.iter().map(inverse).collect();

    let mut entries = Vec::with_capacity(d * n);
    for i in 0..d {
        for (j, s) in sj.iter().enumerate() {
            let si = s[i] as i64;
            entries.push(path.height(si * n as i64 + j as i64) - (si - i as i64) * m);
        }
    }
    let cmatrix = CMatrix::new(params, entries).expect("psi lands in the admissible set");

    let data = PsiData {
        n: n as i64,
        m,
        d: d as i64,
        m_inv_mod_n: params.m_inv_mod_n(),
        p: p_by_u,
        ij,
        sju,
        sj,
        sj_inv,
        rk_stages,
    };
    (cmatrix, data)
}

/// `Φ_d`: from an admissible c-matrix back to its Dyck path; inverse to `Ψ_d`,
/// with `p̃_u(c) = p_u(Φ_d(c))`.
pub fn phi(cmatrix: &CMatrix) -> (DyckPath, PhiData) {
    let params = cmatrix.params();
    let (n, m, d, dn) = (
        params.n() as usize,
        params.m(),
        params.d() as usize,
        params.dn() as usize,
    );

    let mut rk: Vec<i64> = (0..dn)
        .map(|x| cmatrix.rank((x / n) as i64, (x % n) as i64))
        .collect();
    let mut rk_stages = vec![rk.clone()];
    let mut p_by_u = vec![0i64; d.saturating_sub(1)];
    let mut ij = vec![vec![0usize; d - 1]; n];
    let mut sju = vec![vec![identity(d); d - 1]; n];

    for u in 1..d {
        // p̃_u = max{ i·n + j + 1 : i < u, rk_{u,(j+1 mod n)} ≤ rk_{i,j} + m },
        // the j+1 index wrapping inside row u.
        let mut pu = None;
        'search: for i in (0..u).rev() {
            for j in (0..n).rev() {
                let lhs = rk[u * n + (j + 1) % n];
                if lhs <= rk[i * n + j] + m {
                    pu = Some(i * n + j + 1);
                    break 'search;
                }
            }
        }
        let pu = pu.expect("admissibility provides a move index");
        p_by_u[u - 1] = pu as i64;
        for j in 0..n {
            let iju = (0..=u)
                .find(|&i| i * n + j >= pu)
                .expect("i = u always satisfies i·n + j ≥ p̃_u");
            ij[j][u - 1] = iju;
            sju[j][u - 1] = cycle(iju, u, d);
        }
        // Move the n-block of row u down to [p̃_u, p̃_u + n), aligning column
        // residues, and shift the displaced entries up by n.
        let old = rk.clone();
        for x in pu..(u + 1) * n {
            rk[x] = if x < pu + n {
                old[u * n + x % n]
            } else {
                old[x - n]
            };
        }
        rk_stages.push(rk.clone());
    }

    let sj: Vec<Perm> = sju.iter().map(|stages| compose_stages(stages, d)).collect();
    let sj_inv: Vec<Perm> = sj.iter().map(inverse).collect();

    let mut heights = vec![0i64; dn];
    for i in 0..d {
        for (j, s_inv) in sj_inv.iter().enumerate() {
            let si = s_inv[i] as i64;
            heights[i * n + j] = cmatrix.entry(si, j as i64) - (si - i as i64) * m;
        }
    }
    let path = DyckPath::new(params, heights).expect("phi lands in Y(dn,dm)");

    let data = PhiData {
        p: p_by_u,
        ij,
        sju,
        sj,
        sj_inv,
        rk_stages,
    };
    (path, data)
}

/// `r̂k_D(x, y) = d·rk(x, y) + s_j⁻¹(i)` for `x = i·n + j`.
///
/// Restricted to `R̄⁺` this is a bijection onto ℕ, and the image of `R⁺∖D` is
/// `ℕ∖Ψ_d(D)`.
pub fn enhanced_rank(path: &DyckPath, x: i64, y: i64) -> i64 {
    psi(path).1.enhanced_rank(x, y)
}

/// Inverse of [`enhanced_rank`] on `R̄⁺`.
pub fn enhanced_rank_inverse(path: &DyckPath, v: i64) -> (i64, i64) {
    psi(path).1.enhanced_rank_inverse(v)
}

/// `c(D) = max{r̂k_D(x, y_x)} − dn + 1`, the conductor of `Ψ_d(D)`.
pub fn path_conductor(path: &DyckPath, data: &PsiData) -> i64 {
    let dn = path.params().dn();
    let top = (0..dn)
        .map(|x| data.enhanced_rank(x, path.height(x)))
        .max()
        .expect("dn ≥ 2");
    top - dn + 1
}

/// The sweep map `ζ(D)`: the nondecreasing reordering of
/// `ζ(D;(p, y_p)) = ε + η` over `0 ≤ p ≤ dn−1`, evaluated by box counting
/// over the strips `y_x < y ≤ y_{x+1}` (with `y_{dn} := dm`).
pub fn sweep_zeta(path: &DyckPath) -> Vec<i64> {
    let params = path.params();
    let (n, m, dn, dm) = (params.n(), params.m(), params.dn(), params.dm());
    let next = |x: i64| if x + 1 < dn { path.height(x + 1) } else { dm };

    let mut vals: Vec<i64> = (0..dn)
        .map(|p| {
            let r = m * p - n * path.height(p);
            let mut count = 0;
            for x in 0..dn {
                for y in path.height(x) + 1..=next(x) {
                    let rk = m * x - n * y;
                    if rk > r || (rk == r && x >= p) {
                        count += 1;
                    }
                }
            }
            count
        })
        .collect();
    vals.sort_unstable();
    vals
}

/// The statistic `𝒢(Δ)`: nondecreasing reordering of `𝒢(Δ;(p, c_p))`, where
/// boxes `(x = i·n+j, y)` with `c_{i,j} < y ≤ c_{i,j+1}` (extension
/// `c_{i,n} = c_{i,0} + m`) are counted when `rk(x,y) > rk(p, c_p)`, or
/// `rk(x,y) = rk(p, c_p)` with `i > ⌊p/n⌋`.
///
/// Requires an admissible semimodule; `Σ𝒢(Δ) = dim Δ` and `𝒢∘Ψ_d = ζ`.
pub fn gc_vector(s: &Semimodule) -> Vec<i64> {
    let c = s
        .to_cmatrix()
        .expect("gc_vector requires an admissible semimodule");
    let params = s.params();
    let (n, m, d, dn) = (params.n(), params.m(), params.d(), params.dn());

    let mut vals: Vec<i64> = (0..dn)
        .map(|p| {
            let (k, ell) = (p / n, p % n);
            let r = m * p - n * c.entry(k, ell);
            let mut count = 0;
            for i in 0..d {
                for j in 0..n {
                    let x = i * n + j;
                    for y in c.entry(i, j) + 1..=c.entry_ext(i, j + 1) {
                        let rk = m * x - n * y;
                        if rk > r || (rk == r && i > k) {
                            count += 1;
                        }
                    }
                }
            }
            count
        })
        .collect();
    vals.sort_unstable();
    vals
}
