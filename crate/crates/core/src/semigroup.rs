//! Singularity parameters and the numerical semigroup `Γ = ⟨dn, dm, dmn+1⟩`.
//!
//! For the generic singularity `x = t^{dn}`, `y = t^{dm} + λt^{dm+1} + …` the
//! semigroup of valuations decomposes by residue mod `dn`:
//! `Γ = ⊔_{i,j} (â_{i,j} + dn·ℕ)` with `â_{i,j} = j·dm + (dmn+1)·i` over
//! `0 ≤ i < d`, `0 ≤ j < n`.  Membership is a single residue lookup against
//! that decomposition; the brute-force closure generator lives in
//! [`crate::oracle`] only.

use crate::{Error, Result};

/// Largest accepted value of `dn·dm`; enumeration cost explodes long before
/// 64-bit arithmetic does.
pub const MAX_DN_DM: i64 = 1_000_000;

/// The triple `(n, m, d)` together with every derived semigroup constant.
///
/// Immutable after construction and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    n: i64,
    m: i64,
    d: i64,
    dn: i64,
    dm: i64,
    /// `dmn + 1`, the third generator of Γ.
    dmns: i64,
    delta: i64,
    u: i64,
    v: i64,
    /// `â_{i,j} = j·dm + (dmn+1)·i`, row-major d×n.
    ahat: Vec<i64>,
    /// `a_{i,j} = m·i + ⌊j·m/n⌋ = ⌊â_{i,j}/dn⌋`, row-major d×n.
    amat: Vec<i64>,
    /// For each residue `r` mod `dn`, the unique `â_{i,j} ≡ r`.
    ahat_by_residue: Vec<i64>,
    /// Inverse of `m` modulo `n`.
    m_inv_mod_n: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Params {
    /// Builds the parameter set for the singularity `(n, m, d)`.
    ///
    /// Rejects `gcd(n,m) ≠ 1`, `m ≤ n`, `n < 2`, `d < 1` and inputs with
    /// `dn·dm > 10^6`.
    pub fn new(n: i64, m: i64, d: i64) -> Result<Params> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("n = {n} must be at least 2")));
        }
        if m <= n {
            return Err(Error::InvalidParams(format!(
                "m = {m} must be greater than n = {n}"
            )));
        }
        if d < 1 {
            return Err(Error::InvalidParams(format!("d = {d} must be positive")));
        }
        if gcd(n, m) != 1 {
            return Err(Error::InvalidParams(format!(
                "n = {n} and m = {m} must be coprime"
            )));
        }
        let dn = d.checked_mul(n).ok_or_else(|| overflow("d*n"))?;
        let dm = d.checked_mul(m).ok_or_else(|| overflow("d*m"))?;
        if dn.checked_mul(dm).is_none_or(|p| p > MAX_DN_DM) {
            return Err(Error::InvalidParams(format!(
                "dn*dm exceeds the supported bound {MAX_DN_DM}"
            )));
        }
        let dmn = dm * n;
        let dmns = dmn + 1;
        let (u, v) = bezout(n, m);

        let mut ahat = Vec::with_capacity((d * n) as usize);
        let mut amat = Vec::with_capacity((d * n) as usize);
        for i in 0..d {
            for j in 0..n {
                let hat = j * dm + dmns * i;
                ahat.push(hat);
                let a = m * i + (j * m) / n;
                debug_assert_eq!(a, hat.div_euclid(dn));
                amat.push(a);
            }
        }

        let num = d * (dmn - m - n + 1);
        assert_eq!(num % 2, 0, "delta formula must be integral");
        let delta = num / 2;
        let sum_a: i64 = amat.iter().sum();
        assert_eq!(delta, sum_a, "delta formula must equal sum of a_{{i,j}}");

        let mut ahat_by_residue = vec![-1; dn as usize];
        for &hat in &ahat {
            let r = (hat % dn) as usize;
            assert_eq!(ahat_by_residue[r], -1, "residues of ahat must be distinct");
            ahat_by_residue[r] = hat;
        }

        let m_inv_mod_n = (1..n).find(|&c| (c * m) % n == 1).unwrap_or(0);
        debug_assert!(n == 1 || (m_inv_mod_n * m) % n == 1);

        Ok(Params {
            n,
            m,
            d,
            dn,
            dm,
            dmns,
            delta,
            u,
            v,
            ahat,
            amat,
            ahat_by_residue,
            m_inv_mod_n,
        })
    }

    pub fn n(&self) -> i64 {
        self.n
    }
    pub fn m(&self) -> i64 {
        self.m
    }
    pub fn d(&self) -> i64 {
        self.d
    }
    pub fn dn(&self) -> i64 {
        self.dn
    }
    pub fn dm(&self) -> i64 {
        self.dm
    }
    /// The third generator `dmn + 1`.
    pub fn dmns(&self) -> i64 {
        self.dmns
    }
    /// The δ-invariant `|ℕ∖Γ| = d(dmn−m−n+1)/2`.
    pub fn delta(&self) -> i64 {
        self.delta
    }
    /// The Bézout pair `(u, v)` with `0<u<n`, `0<v<m`, `um − vn = 1`.
    pub fn bezout_pair(&self) -> (i64, i64) {
        (self.u, self.v)
    }
    /// Conductor of Γ; Gorenstein symmetry gives `c(Γ) = 2δ`.
    pub fn conductor(&self) -> i64 {
        2 * self.delta
    }
    /// Inverse of `m` modulo `n`.
    pub fn m_inv_mod_n(&self) -> i64 {
        self.m_inv_mod_n
    }

    /// `â_{i,j} = j·dm + (dmn+1)·i`.
    pub fn ahat(&self, i: i64, j: i64) -> i64 {
        self.ahat[(i * self.n + j) as usize]
    }
    /// `a_{i,j} = m·i + ⌊j·m/n⌋`.
    pub fn a(&self, i: i64, j: i64) -> i64 {
        self.amat[(i * self.n + j) as usize]
    }
    /// The staircase heights `a_x = a_{i,j}` for `x = i·n + j`, weakly increasing.
    pub fn a_col(&self, x: i64) -> i64 {
        self.amat[x as usize]
    }
    pub fn ahat_flat(&self) -> &[i64] {
        &self.ahat
    }
    pub fn amat_flat(&self) -> &[i64] {
        &self.amat
    }
    /// The unique `â_{i,j}` congruent to `r` mod `dn`.
    pub fn ahat_for_residue(&self, r: i64) -> i64 {
        self.ahat_by_residue[r as usize]
    }

    /// Membership in Γ by residue lookup; negative inputs are never members.
    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && x >= self.ahat_by_residue[(x % self.dn) as usize]
    }

    /// The gap set `ℕ∖Γ`, sorted ascending.  Its length is δ and its maximum
    /// is `2δ − 1`.
    pub fn gap_set(&self) -> Vec<i64> {
        (0..self.conductor())
            .filter(|&x| !self.contains(x))
            .collect()
    }

    /// `rk(x, y) = m·x − n·y`.
    pub fn rank(&self, x: i64, y: i64) -> i64 {
        self.m * x - self.n * y
    }
}

fn overflow(what: &str) -> Error {
    Error::InvalidParams(format!("{what} overflows 64-bit arithmetic"))
}

/// The unique pair `(u, v)` with `0 < u < n`, `0 < v < m`, `u·m − v·n = 1`.
///
/// Callers must ensure `gcd(n,m) = 1` and `m > n ≥ 2`.
pub fn bezout(n: i64, m: i64) -> (i64, i64) {
    assert!(n >= 2 && m > n && gcd(n, m) == 1);
    for u in 1..n {
        if (u * m - 1) % n == 0 {
            return (u, (u * m - 1) / n);
        }
    }
    unreachable!("coprime inputs always admit a Bezout pair")
}
