//! Γ-semimodules `Δ ⊂ ℕ` in c-matrix and generator form.
//!
//! A 0-normalized Γ-semimodule is stored as its vector of `dn`-generators
//! `A(Δ)`, one per residue class mod `dn`; explicit element sets never appear
//! outside the oracle.  Admissible semimodules correspond to integer matrices
//! `(c_{i,j})` with `A(Δ) = {â_{i,j} − dn·c_{i,j}}` subject to
//!
//! * bounds: `0 ≤ c_{i,j} ≤ a_{i,j}`,
//! * row-monotone (dm-invariance): `c_{i,j} ≤ c_{i,j+1}`, wrapping as
//!   `c_{i,n−1} ≤ c_{i,0} + m`,
//! * column-monotone (dmn+1-invariance): `c_{i,j} ≤ c_{i+1,j}`, wrapping as
//!   `c_{d−1,j} ≤ c_{0,j+u} + dm − v` with `c_{i,j+n} = c_{i,j} + m`,
//! * admissible: for each `i ≤ d−2` some `j` has `c_{i+1,j+1} ≥ c_{i,j} + m`
//!   (the wrap case `j = n−1` reads `c_{i+1,0} ≥ c_{i,n−1}`).

use crate::semigroup::Params;
use crate::{Error, Result};

/// A d×n matrix `(c_{i,j})` encoding an admissible (dn,dm)-invariant subset.
///
/// Construction validates every invariant, so a value of this type is always
/// a point of the admissible set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMatrix {
    params: Params,
    /// Row-major d×n entries.
    c: Vec<i64>,
}

impl CMatrix {
    /// Validates and wraps a row-major d×n entry vector.
    pub fn new(params: &Params, entries: Vec<i64>) -> Result<CMatrix> {
        let (d, n, m) = (params.d(), params.n(), params.m());
        if entries.len() != (d * n) as usize {
            return Err(Error::InvalidCMatrix(format!(
                "expected {} entries, got {}",
                d * n,
                entries.len()
            )));
        }
        let at = |i: i64, j: i64| entries[(i * n + j) as usize];
        // Extension c_{i,j+n} = c_{i,j} + m for 0 ≤ j < 2n.
        let ext = |i: i64, j: i64| {
            if j < n {
                at(i, j)
            } else {
                at(i, j - n) + m
            }
        };
        for i in 0..d {
            for j in 0..n {
                let c = at(i, j);
                if c < 0 || c > params.a(i, j) {
                    return Err(Error::InvalidCMatrix(format!(
                        "entry c[{i}][{j}] = {c} out of bounds [0, {}]",
                        params.a(i, j)
                    )));
                }
                if at(i, j) > ext(i, j + 1) {
                    return Err(Error::InvalidCMatrix(format!(
                        "row {i} not monotone at column {j}"
                    )));
                }
            }
        }
        let (u, v) = params.bezout_pair();
        for j in 0..n {
            for i in 0..d - 1 {
                if at(i, j) > at(i + 1, j) {
                    return Err(Error::InvalidCMatrix(format!(
                        "column {j} not monotone at row {i}"
                    )));
                }
            }
            if at(d - 1, j) > ext(0, j + u) + params.dm() - v {
                return Err(Error::InvalidCMatrix(format!(
                    "column wrap condition fails at column {j}"
                )));
            }
        }
        for i in 0..d - 1 {
            let ok = (0..n).any(|j| ext(i + 1, j + 1) >= at(i, j) + m);
            if !ok {
                return Err(Error::InvalidCMatrix(format!(
                    "index {i} is not admissible"
                )));
            }
        }
        Ok(CMatrix {
            params: params.clone(),
            c: entries,
        })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }
    /// Row-major entries.
    pub fn entries(&self) -> &[i64] {
        &self.c
    }
    pub fn entry(&self, i: i64, j: i64) -> i64 {
        self.c[(i * self.params.n() + j) as usize]
    }
    /// `c_{i,j}` extended by `c_{i,j+n} = c_{i,j} + m`, valid for `0 ≤ j < 2n`.
    pub fn entry_ext(&self, i: i64, j: i64) -> i64 {
        let n = self.params.n();
        if j < n {
            self.entry(i, j)
        } else {
            self.entry(i, j - n) + self.params.m()
        }
    }
    /// `rk_{Δ,i,j} = m(in+j) − n·c_{i,j}`.
    pub fn rank(&self, i: i64, j: i64) -> i64 {
        let p = &self.params;
        p.m() * (i * p.n() + j) - p.n() * self.entry(i, j)
    }
    /// `|(c_{i,j})| = Σ c_{i,j} = e(Δ)`.
    pub fn size(&self) -> i64 {
        self.c.iter().sum()
    }
}

/// The count and explicit set of `Gaps(b) = [b,∞)∖Δ`.
///
/// The count comes from the closed-form floor sum
/// `Σ_{a∈A(Δ), a>b} ⌊(a−b)/dn⌋`, the set from a residue-wise scan; the two
/// agree by construction of the generator form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapsFrom {
    pub count: i64,
    pub set: Vec<i64>,
}

/// A 0-normalized Γ-semimodule in generator form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semimodule {
    params: Params,
    /// `gens[r]` is the dn-generator congruent to `r` mod `dn`.
    gens: Vec<i64>,
    delta_inv: i64,
    e: i64,
    conductor: i64,
}

impl Semimodule {
    /// The semimodule `A(Δ) = {â_{i,j} − dn·c_{i,j}}` of a valid c-matrix.
    pub fn from_cmatrix(c: &CMatrix) -> Semimodule {
        let p = c.params();
        let gens_rm: Vec<i64> = (0..p.d())
            .flat_map(|i| (0..p.n()).map(move |j| p.ahat(i, j) - p.dn() * c.entry(i, j)))
            .collect();
        Semimodule::from_gens(p, gens_rm).expect("valid c-matrix yields a valid semimodule")
    }

    /// Builds a semimodule from generators in any order, one per residue class.
    ///
    /// Validates distinct residues, nonnegativity, 0-normalization and closure
    /// under adding `dn`, `dm` and `dmn+1`.  Admissibility is *not* required;
    /// query it with [`Semimodule::is_admissible_definition`].
    pub fn from_gens(params: &Params, gens_any: Vec<i64>) -> Result<Semimodule> {
        let dn = params.dn();
        if gens_any.len() != dn as usize {
            return Err(Error::InvalidSemimodule(format!(
                "expected {dn} generators, got {}",
                gens_any.len()
            )));
        }
        let mut gens = vec![-1i64; dn as usize];
        for &g in &gens_any {
            if g < 0 {
                return Err(Error::InvalidSemimodule(format!("negative generator {g}")));
            }
            let r = (g % dn) as usize;
            if gens[r] != -1 {
                return Err(Error::InvalidSemimodule(format!(
                    "two generators in residue class {r}"
                )));
            }
            gens[r] = g;
        }
        if gens[0] != 0 {
            return Err(Error::InvalidSemimodule(
                "not 0-normalized: residue class 0 must be generated by 0".into(),
            ));
        }
        let contains = |x: i64| x >= 0 && x >= gens[(x % dn) as usize];
        for &g in &gens {
            for step in [params.dm(), params.dmns()] {
                if !contains(g + step) {
                    return Err(Error::InvalidSemimodule(format!(
                        "not closed: {g} + {step} escapes"
                    )));
                }
            }
        }
        let delta_inv: i64 = gens.iter().map(|&g| g / dn).sum();
        let e = params.delta() - delta_inv;
        let max_gen = *gens.iter().max().unwrap();
        let conductor = (max_gen - dn + 1).max(0);
        Ok(Semimodule {
            params: params.clone(),
            gens,
            delta_inv,
            e,
            conductor,
        })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }
    /// Generators indexed by residue class mod `dn`.
    pub fn gens_by_residue(&self) -> &[i64] {
        &self.gens
    }
    /// Generators in row-major (i,j) order: entry `(i,j)` is `â_{i,j} − dn·c_{i,j}`.
    pub fn gens_row_major(&self) -> Vec<i64> {
        let p = &self.params;
        p.ahat_flat()
            .iter()
            .map(|&hat| self.gens[(hat % p.dn()) as usize])
            .collect()
    }
    /// `δ(Δ) = |ℕ∖Δ| = Σ_{a∈A(Δ)} ⌊a/dn⌋`.
    pub fn delta_inv(&self) -> i64 {
        self.delta_inv
    }
    /// `e(Δ) = δ − δ(Δ)`.
    pub fn e(&self) -> i64 {
        self.e
    }
    /// The conductor `c(Δ) = min{c : c + ℕ ⊂ Δ}`.
    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    /// Membership test: `x` belongs to Δ iff it is at least the generator of
    /// its residue class.
    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && x >= self.gens[(x % self.params.dn()) as usize]
    }

    /// The inverse coordinate change back to the c-matrix.
    ///
    /// Fails iff the semimodule is not admissible (the matrix type only
    /// represents admissible subsets).
    pub fn to_cmatrix(&self) -> Result<CMatrix> {
        let p = &self.params;
        let entries: Vec<i64> = (0..p.d())
            .flat_map(|i| {
                (0..p.n()).map(move |j| {
                    let hat = p.ahat(i, j);
                    (hat - self.gens[(hat % p.dn()) as usize]) / p.dn()
                })
            })
            .collect();
        CMatrix::new(p, entries)
    }

    /// The ℓ=1 admissibility test straight from the definition: every residue
    /// `i` mod `d` has a generator `a ≡ i (mod d)` with `a + dm + 1 ∈ Δ`.
    pub fn is_admissible_definition(&self) -> bool {
        let d = self.params.d();
        (0..d).all(|i| {
            self.gens
                .iter()
                .any(|&a| a % d == i && self.contains(a + self.params.dm() + 1))
        })
    }

    /// `|Gaps(b)|` by the closed-form floor sum; valid for any `b ≥ 0`.
    pub fn gaps_count_from(&self, b: i64) -> i64 {
        let dn = self.params.dn();
        self.gens
            .iter()
            .filter(|&&a| a > b)
            .map(|&a| (a - b) / dn)
            .sum()
    }

    /// Count and set of `Gaps(b) = [b,∞)∖Δ` for `b ∈ Δ`.
    pub fn gaps_from(&self, b: i64) -> Result<GapsFrom> {
        if !self.contains(b) {
            return Err(Error::NotInSemimodule(b));
        }
        let dn = self.params.dn();
        let mut set: Vec<i64> = Vec::new();
        for &a in &self.gens {
            let mut x = a - dn;
            while x >= b {
                set.push(x);
                x -= dn;
            }
        }
        set.sort_unstable();
        Ok(GapsFrom {
            count: self.gaps_count_from(b),
            set,
        })
    }

    /// `dim Δ = Σ_{a∈A(Δ)} |Gaps(a)| − Σ_{a∈A(Δ)} |Gaps(a+dm)|`, evaluated by
    /// the closed-form floor sums.
    pub fn dim_gaps(&self) -> i64 {
        let dm = self.params.dm();
        self.gens
            .iter()
            .map(|&a| self.gaps_count_from(a) - self.gaps_count_from(a + dm))
            .sum()
    }

    /// `dim Δ = |𝒢𝒞(Δ)|`: pairs `(a, b)` with `a ∈ A(Δ)`, `b > a`, and `b` a
    /// dm-cogenerator (`b ∉ Δ`, `b + dm ∈ Δ`).
    ///
    /// Cogenerators are walked residue class by residue class: in the class of
    /// the generator `g`, they are `g − dn·k` for `1 ≤ k ≤ ⌊(g − g' + dm)/dn⌋`
    /// where `g'` generates the class of `g + dm`.
    pub fn dim_gc(&self) -> i64 {
        let p = &self.params;
        let (dn, dm) = (p.dn(), p.dm());
        let mut sorted = self.gens.clone();
        sorted.sort_unstable();
        let mut dim = 0;
        for r in 0..dn {
            let g = self.gens[r as usize];
            let g2 = self.gens[((r + dm) % dn) as usize];
            let kmax = (g - g2 + dm) / dn;
            for k in 1..=kmax {
                let b = g - dn * k;
                debug_assert!(!self.contains(b) && self.contains(b + dm));
                dim += sorted.partition_point(|&a| a < b) as i64;
            }
        }
        dim
    }
}

/// All admissible c-matrices for `p`, sorted lexicographically row-major.
///
/// Entries are filled row-major with early pruning on the bounds and the
/// monotonicity conditions; admissibility of index `i` is checked as soon as
/// row `i+1` completes.  Ascending DFS emits lexicographic order directly.
pub fn enumerate_admissible(params: &Params) -> Vec<CMatrix> {
    fn admissible_row_pair(cur: &[i64], n: i64, m: i64, i: i64) -> bool {
        let at = |i: i64, j: i64| cur[(i * n + j) as usize];
        (0..n).any(|j| {
            if j == n - 1 {
                at(i + 1, 0) >= at(i, n - 1)
            } else {
                at(i + 1, j + 1) >= at(i, j) + m
            }
        })
    }

    fn dfs(cur: &mut Vec<i64>, pos: usize, params: &Params, out: &mut Vec<CMatrix>) {
        if pos == cur.len() {
            let c = CMatrix::new(params, cur.clone()).expect("DFS emits only valid matrices");
            out.push(c);
            return;
        }
        let (d, n, m) = (params.d(), params.n(), params.m());
        let (u, v) = params.bezout_pair();
        let i = pos as i64 / n;
        let j = pos as i64 % n;
        let at = |cur: &[i64], i: i64, j: i64| cur[(i * n + j) as usize];

        let mut lo = 0i64;
        if j > 0 {
            lo = lo.max(at(cur, i, j - 1)); // row-monotone
        }
        if i > 0 {
            lo = lo.max(at(cur, i - 1, j)); // column-monotone
        }
        let mut hi = params.a(i, j);
        if j == n - 1 {
            hi = hi.min(at(cur, i, 0) + m); // row wrap
        }
        if i == d - 1 {
            // Column wrap against the (already fixed) top row.
            let jj = j + u;
            let top = if jj < n {
                at(cur, 0, jj)
            } else {
                at(cur, 0, jj - n) + m
            };
            hi = hi.min(top + params.dm() - v);
        }
        for val in lo..=hi {
            cur[pos] = val;
            // Admissibility of index i−1 becomes checkable once row i is full.
            if j == n - 1 && i > 0 && !admissible_row_pair(cur, n, m, i - 1) {
                continue;
            }
            dfs(cur, pos + 1, params, out);
        }
        cur[pos] = 0;
    }

    let mut out = Vec::new();
    let mut cur = vec![0i64; (params.d() * params.n()) as usize];
    dfs(&mut cur, 0, params, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p233() -> Params {
        Params::new(2, 3, 3).unwrap()
    }

    #[test]
    fn from_cmatrix_worked_examples() {
        let p = p233();
        let c = CMatrix::new(&p, vec![0, 1, 0, 3, 3, 5]).unwrap();
        let s = Semimodule::from_cmatrix(&c);
        assert_eq!(s.gens_row_major(), vec![0, 3, 19, 10, 20, 17]);
        assert_eq!(s.e(), 12);
        assert_eq!(s.conductor(), 15);
        let gaps = s.gaps_from(0).unwrap();
        assert_eq!(gaps.set, vec![1, 2, 4, 5, 7, 8, 11, 13, 14]);
        assert_eq!(gaps.count, 9);

        let c = CMatrix::new(&p, vec![0, 1, 0, 3, 2, 4]).unwrap();
        let s = Semimodule::from_cmatrix(&c);
        assert_eq!(s.gens_row_major(), vec![0, 3, 19, 10, 26, 23]);
        assert_eq!(s.e(), 10);
    }

    #[test]
    fn zero_matrix_gives_semigroup() {
        for (n, m, d) in [(2, 3, 1), (2, 3, 2), (2, 3, 3), (3, 4, 2)] {
            let p = Params::new(n, m, d).unwrap();
            let c = CMatrix::new(&p, vec![0; (p.d() * p.n()) as usize]).unwrap();
            let s = Semimodule::from_cmatrix(&c);
            assert_eq!(s.e(), 0);
            assert_eq!(s.delta_inv(), p.delta());
            assert_eq!(s.conductor(), p.conductor());
            for x in 0..=4 * p.delta() {
                assert_eq!(s.contains(x), p.contains(x));
            }
        }
    }

    #[test]
    fn cmatrix_rejects_invalid() {
        let p = p233();
        // Out of bounds.
        assert!(CMatrix::new(&p, vec![0, 2, 0, 3, 3, 5]).is_err());
        // Row not monotone: c_{2,0}=5 > c_{2,1}=4? row (5,4): 5 ≤ 4 fails.
        assert!(CMatrix::new(&p, vec![0, 1, 0, 3, 5, 4]).is_err());
        // Column not monotone.
        assert!(CMatrix::new(&p, vec![0, 1, 0, 3, 0, 2]).is_err());
        // Wrong length.
        assert!(CMatrix::new(&p, vec![0, 0]).is_err());
    }

    #[test]
    fn contains_examples() {
        let p = p233();
        let c = CMatrix::new(&p, vec![0, 1, 0, 3, 3, 5]).unwrap();
        let s = Semimodule::from_cmatrix(&c);
        assert!(s.contains(12));
        assert!(!s.contains(13));
        assert!(!s.contains(14));
        assert!(!s.contains(-3));
        for x in s.conductor()..s.conductor() + 2 * p.dn() {
            assert!(s.contains(x));
        }
    }

    #[test]
    fn gaps_from_examples() {
        let p = p233();
        let c = CMatrix::new(&p, vec![0, 1, 0, 3, 3, 5]).unwrap();
        let s = Semimodule::from_cmatrix(&c);
        let g = s.gaps_from(12).unwrap();
        assert_eq!(g.count, 2);
        assert_eq!(g.set, vec![13, 14]);
        assert_eq!(s.gaps_from(13), Err(crate::Error::NotInSemimodule(13)));
        assert_eq!(s.gaps_from(s.conductor() + 5).unwrap().count, 0);
        // Γ: Gaps(0) = ℕ∖Γ.
        let zero = CMatrix::new(&p, vec![0; 6]).unwrap();
        let gamma = Semimodule::from_cmatrix(&zero);
        assert_eq!(gamma.gaps_from(0).unwrap().count, p.delta());
    }

    #[test]
    fn dims_worked_examples() {
        let p = p233();
        let s1 = Semimodule::from_cmatrix(&CMatrix::new(&p, vec![0, 1, 0, 3, 3, 5]).unwrap());
        assert_eq!(s1.dim_gaps(), 14);
        assert_eq!(s1.dim_gc(), 14);
        let s2 = Semimodule::from_cmatrix(&CMatrix::new(&p, vec![0, 1, 0, 3, 2, 4]).unwrap());
        assert_eq!(s2.dim_gaps(), 16);
        assert_eq!(s2.dim_gc(), 16);
        // Γ has dim = δ.
        let gamma = Semimodule::from_cmatrix(&CMatrix::new(&p, vec![0; 6]).unwrap());
        assert_eq!(gamma.dim_gaps(), p.delta());
        assert_eq!(gamma.dim_gc(), p.delta());
        // δ = 1 case: a single generator-cogenerator pair.
        let p1 = Params::new(2, 3, 1).unwrap();
        let gamma1 = Semimodule::from_cmatrix(&CMatrix::new(&p1, vec![0, 0]).unwrap());
        assert_eq!(gamma1.dim_gc(), 1);
    }

    #[test]
    fn enumeration_counts() {
        let counts = [((2, 3, 1), 2usize), ((2, 3, 2), 23), ((2, 3, 3), 377)];
        for ((n, m, d), want) in counts {
            let p = Params::new(n, m, d).unwrap();
            assert_eq!(enumerate_admissible(&p).len(), want, "({n},{m},{d})");
        }
    }

    #[test]
    fn enumeration_is_lex_sorted_and_valid() {
        let p = Params::new(2, 3, 2).unwrap();
        let all = enumerate_admissible(&p);
        for w in all.windows(2) {
            assert!(w[0].entries() < w[1].entries());
        }
        for c in &all {
            let s = Semimodule::from_cmatrix(c);
            assert!(s.is_admissible_definition());
            assert_eq!(s.to_cmatrix().unwrap(), *c);
            assert_eq!(s.e(), c.size());
        }
    }

    #[test]
    fn admissibility_definition_worked_example() {
        let p = p233();
        let s = Semimodule::from_cmatrix(&CMatrix::new(&p, vec![0, 1, 0, 3, 3, 5]).unwrap());
        assert!(s.is_admissible_definition());
        let zero = Semimodule::from_cmatrix(&CMatrix::new(&p, vec![0; 6]).unwrap());
        assert!(zero.is_admissible_definition());
    }

    #[test]
    fn admissible_implies_dmns_invariant() {
        let p = Params::new(2, 3, 2).unwrap();
        for c in enumerate_admissible(&p) {
            let s = Semimodule::from_cmatrix(&c);
            for &a in s.gens_by_residue() {
                assert!(s.contains(a + p.dmns()));
            }
        }
    }

    #[test]
    fn delta_bound_and_conductor_bound() {
        let p = Params::new(2, 3, 2).unwrap();
        for c in enumerate_admissible(&p) {
            let s = Semimodule::from_cmatrix(&c);
            assert!(s.delta_inv() <= p.delta());
            assert_eq!(
                s.delta_inv() == p.delta(),
                c.entries().iter().all(|&x| x == 0)
            );
            assert!(s.conductor() <= p.delta() + s.delta_inv());
        }
    }
}
