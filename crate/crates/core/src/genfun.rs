//! Sparse exact bivariate polynomials in `(q, t)` and the generating
//! functions: the Hilbert L-function `L(q,t,0)`, the motivic superpolynomial
//! `H^mot(q,t,0)`, per-path contributions, the identity verifier and the
//! functional-equation symmetry check.
//!
//! Per-path polynomials are computed via the finite-sum form
//! `L_D = q^{co-dinv(D)} t^{|D|+z_0}
//!        + (1−t) Σ_{z ∈ Δ ∩ [0,z_0)} q^{|D|−dinv(D)+ε̂_D(z)} t^{|D|+z}`
//! with cutoff `z_0 = c(D)`; the value is independent of the cutoff choice
//! for any `z_0 ≥ c(D)`.  Coefficients are arbitrary-precision from the
//! start: path counts at larger parameters push coefficients past 2^63.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::bijection::{path_conductor, psi};
use crate::dyck::{enumerate_dyck, DyckPath};
use crate::semigroup::Params;
use crate::semimodule::Semimodule;

/// A monomial `q^q t^t`; the derived order is lexicographic in `(t, q)`,
/// which is also the serialization order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mono {
    pub t: u32,
    pub q: u32,
}

/// Sparse bivariate polynomial over arbitrary-precision integers.
///
/// Zero coefficients are never stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<Mono, BigInt>,
}

impl BivarPoly {
    pub fn zero() -> BivarPoly {
        BivarPoly::default()
    }

    pub fn one() -> BivarPoly {
        BivarPoly::monomial(0, 0, 1)
    }

    /// `coeff · q^q t^t`.
    pub fn monomial(q: u32, t: u32, coeff: impl Into<BigInt>) -> BivarPoly {
        let mut p = BivarPoly::zero();
        p.add_term(q, t, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds `coeff · q^q t^t`, dropping the entry if it cancels.
    pub fn add_term(&mut self, q: u32, t: u32, coeff: impl Into<BigInt>) {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return;
        }
        let key = Mono { t, q };
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// The coefficient of `q^q t^t` (zero if absent).
    pub fn coeff(&self, q: u32, t: u32) -> BigInt {
        self.terms.get(&Mono { t, q }).cloned().unwrap_or_default()
    }

    /// Terms in `(t, q)`-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (Mono, &BigInt)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.q).max()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.t).max()
    }

    /// Serialization form: `[qExp, tExp, coeff-as-decimal-string]` triples
    /// sorted by `(tExp, qExp)`.
    pub fn to_triples(&self) -> Vec<(u32, u32, String)> {
        self.terms
            .iter()
            .map(|(k, v)| (k.q, k.t, v.to_string()))
            .collect()
    }
}

impl std::ops::Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (k, v) in rhs.terms() {
            out.add_term(k.q, k.t, v.clone());
        }
        out
    }
}

impl std::ops::Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (k, v) in rhs.terms() {
            out.add_term(k.q, k.t, -v.clone());
        }
        out
    }
}

impl std::ops::Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                out.add_term(a.q + b.q, a.t + b.t, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for BivarPoly {
    /// Canonical expanded form, terms in `(t, q)` order, e.g.
    /// `1 - t + q^3*t^4 - q^3*t^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (k.q == 0 && k.t == 0) {
                factors.push(mag.to_string());
            }
            if k.q == 1 {
                factors.push("q".into());
            } else if k.q > 1 {
                factors.push(format!("q^{}", k.q));
            }
            if k.t == 1 {
                factors.push("t".into());
            } else if k.t > 1 {
                factors.push(format!("t^{}", k.t));
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

fn exp(v: i64) -> u32 {
    u32::try_from(v).expect("exponents are nonnegative and small")
}

/// `L_D(q,t)` with an explicit cutoff `z_0`; the result is independent of the
/// choice as long as `z_0 ≥ c(D)`.
pub fn l_poly_with_cutoff(path: &DyckPath, z0: i64) -> BivarPoly {
    let (c, _) = psi(path);
    let s = Semimodule::from_cmatrix(&c);
    l_poly_inner(path, &s, z0)
}

fn l_poly_inner(path: &DyckPath, s: &Semimodule, z0: i64) -> BivarPoly {
    let size = path.size();
    let dinv = path.dinv();
    let mut poly = BivarPoly::zero();
    // ε̂_D(z) is the number of gaps of Δ below z; track it while scanning.
    let mut gaps_below = 0i64;
    for z in 0..z0 {
        if s.contains(z) {
            let qe = exp(size - dinv + gaps_below);
            poly.add_term(qe, exp(size + z), 1);
            poly.add_term(qe, exp(size + z + 1), -1);
        } else {
            gaps_below += 1;
        }
    }
    poly.add_term(exp(path.codinv()), exp(size + z0), 1);
    poly
}

/// The per-path contribution `L_D(q,t)` to the Hilbert L-function at `a = 0`.
pub fn l_poly_per_path(path: &DyckPath) -> BivarPoly {
    let (c, data) = psi(path);
    let s = Semimodule::from_cmatrix(&c);
    l_poly_inner(path, &s, path_conductor(path, &data))
}

/// The per-path monomial `H^mot_D = q^{co-dinv(D)} t^{co-dinv(D)+δ−|D|}`.
pub fn hmot_per_path(path: &DyckPath) -> BivarPoly {
    let codinv = path.codinv();
    let delta = path.params().delta();
    BivarPoly::monomial(exp(codinv), exp(codinv + delta - path.size()), 1)
}

fn par_sum(paths: &[DyckPath], f: impl Fn(&DyckPath) -> BivarPoly + Sync + Send) -> BivarPoly {
    paths
        .par_iter()
        .map(f)
        .reduce(BivarPoly::zero, |a, b| &a + &b)
}

/// `L(q,t,0)`: sum of `L_D` over all Dyck paths.
pub fn l_function(params: &Params) -> BivarPoly {
    par_sum(&enumerate_dyck(params), l_poly_per_path)
}

/// `H^mot(q,t,0)`: sum of `H^mot_D` over all Dyck paths.
pub fn hmot(params: &Params) -> BivarPoly {
    par_sum(&enumerate_dyck(params), hmot_per_path)
}

/// Outcome of the identity check `L(q,t,0) = H^mot(q,t,0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdpReport {
    pub equal: bool,
    /// `l_function − hmot`; zero iff `equal`.
    pub difference: BivarPoly,
}

/// Verifies `L(q,t,0) = H^mot(q,t,0)` for the given parameters.
pub fn verify_cdp(params: &Params) -> CdpReport {
    let paths = enumerate_dyck(params);
    let l = par_sum(&paths, l_poly_per_path);
    let h = par_sum(&paths, hmot_per_path);
    let difference = &l - &h;
    CdpReport {
        equal: difference.is_zero(),
        difference,
    }
}

/// Coefficient form of the functional equation
/// `q^δ t^{2δ} f(q, 1/(qt)) = f(q, t)`: every term must satisfy
/// `coeff(i, j) = coeff(δ+i−j, 2δ−j)`.
pub fn check_functional_equation(f: &BivarPoly, delta: i64) -> bool {
    f.terms().all(|(k, c)| {
        let qm = delta + k.q as i64 - k.t as i64;
        let tm = 2 * delta - k.t as i64;
        if qm < 0 || tm < 0 {
            return false;
        }
        f.coeff(qm as u32, tm as u32) == *c
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::DyckPath;

    fn poly(parts: &[(u32, u32, i64)]) -> BivarPoly {
        let mut p = BivarPoly::zero();
        for &(q, t, c) in parts {
            p.add_term(q, t, c);
        }
        p
    }

    #[test]
    fn poly_arithmetic_basics() {
        let one = BivarPoly::one();
        let t = BivarPoly::monomial(0, 1, 1);
        let omt = &one - &t;
        let p = &BivarPoly::monomial(2, 9, 1) + &(&BivarPoly::monomial(0, 6, 1) * &omt);
        assert_eq!(p, poly(&[(0, 6, 1), (0, 7, -1), (2, 9, 1)]));
        assert!((&p - &p).is_zero());
        assert_eq!(p.to_string(), "t^6 - t^7 + q^2*t^9");
        assert_eq!(
            p.to_triples(),
            vec![
                (0, 6, "1".to_string()),
                (0, 7, "-1".to_string()),
                (2, 9, "1".to_string())
            ]
        );
        assert_eq!(p.coeff(0, 7), BigInt::from(-1));
        assert_eq!(p.coeff(5, 5), BigInt::zero());
        assert_eq!(p.q_degree(), Some(2));
        assert_eq!(p.t_degree(), Some(9));
    }

    #[test]
    fn per_path_examples_2_3_2() {
        let p = Params::new(2, 3, 2).unwrap();
        let omt = &BivarPoly::one() - &BivarPoly::monomial(0, 1, 1);

        // L_{D_23} = t^8.
        let d23 = DyckPath::new(&p, vec![0, 1, 3, 4]).unwrap();
        assert_eq!(l_poly_per_path(&d23), BivarPoly::monomial(0, 8, 1));

        // L_{D_12} = t^6(1−t) + q^2 t^9.
        let d12 = DyckPath::new(&p, vec![0, 0, 2, 4]).unwrap();
        let want = &(&BivarPoly::monomial(0, 6, 1) * &omt) + &BivarPoly::monomial(2, 9, 1);
        assert_eq!(l_poly_per_path(&d12), want);

        // L_{D_1} = 1 − t + q^3t^4(1−t) + q^4t^6(1−t) + q^5t^8(1−t)
        //           + q^6t^10(1−t) + q^7t^12(1−t^3) + q^8t^16.
        let d1 = DyckPath::new(&p, vec![0, 0, 0, 0]).unwrap();
        let omt3 = &BivarPoly::one() - &BivarPoly::monomial(0, 3, 1);
        let mut want = &omt + &(&BivarPoly::monomial(3, 4, 1) * &omt);
        want = &want + &(&BivarPoly::monomial(4, 6, 1) * &omt);
        want = &want + &(&BivarPoly::monomial(5, 8, 1) * &omt);
        want = &want + &(&BivarPoly::monomial(6, 10, 1) * &omt);
        want = &want + &(&BivarPoly::monomial(7, 12, 1) * &omt3);
        want = &want + &BivarPoly::monomial(8, 16, 1);
        assert_eq!(l_poly_per_path(&d1), want);
    }

    #[test]
    fn hmot_examples_2_3_2() {
        let p = Params::new(2, 3, 2).unwrap();
        let d1 = DyckPath::new(&p, vec![0, 0, 0, 0]).unwrap();
        assert_eq!(hmot_per_path(&d1), BivarPoly::monomial(8, 16, 1));
        let d23 = DyckPath::new(&p, vec![0, 1, 3, 4]).unwrap();
        assert_eq!(hmot_per_path(&d23), BivarPoly::one());
        let d21 = DyckPath::new(&p, vec![0, 1, 2, 4]).unwrap();
        assert_eq!(hmot_per_path(&d21), BivarPoly::monomial(1, 2, 1));
    }

    /// The displayed nine-group aggregate for (2,3,2).
    fn aggregate_2_3_2() -> BivarPoly {
        let mut want = BivarPoly::one();
        want.add_term(1, 2, 1);
        for (q, t, coeffs) in [
            (2u32, 3u32, vec![1, 1]),
            (3, 4, vec![1, 1, 1]),
            (4, 6, vec![2, 1, 1]),
            (5, 8, vec![2, 1, 1]),
            (6, 10, vec![2, 1, 1]),
            (7, 12, vec![1, 1, 1]),
        ] {
            for (k, c) in coeffs.into_iter().enumerate() {
                want.add_term(q, t + k as u32, c);
            }
        }
        want.add_term(8, 16, 1);
        want
    }

    #[test]
    fn aggregate_2_3_2_matches_display() {
        let p = Params::new(2, 3, 2).unwrap();
        let l = l_function(&p);
        let h = hmot(&p);
        assert_eq!(l, aggregate_2_3_2());
        assert_eq!(h, aggregate_2_3_2());
    }

    #[test]
    fn l_function_2_3_1_hand_value() {
        // Two paths: L = (1 − t + q t²) + t = 1 + q t².
        let p = Params::new(2, 3, 1).unwrap();
        let want = poly(&[(0, 0, 1), (1, 2, 1)]);
        assert_eq!(l_function(&p), want);
        assert_eq!(hmot(&p), want);
        assert!(check_functional_equation(&want, 1));
    }

    #[test]
    fn cutoff_independence() {
        for (n, m, d) in [(2, 3, 2), (2, 3, 3)] {
            let p = Params::new(n, m, d).unwrap();
            for path in enumerate_dyck(&p) {
                let (c, data) = psi(&path);
                let z0 = path_conductor(&path, &data);
                let a = l_poly_with_cutoff(&path, z0);
                let b = l_poly_with_cutoff(&path, z0 + 1);
                let c2 = l_poly_with_cutoff(&path, z0 + 7);
                assert_eq!(a, b, "cutoff z0+1 differs on {:?}", path.heights());
                assert_eq!(a, c2);
                let _ = c;
            }
        }
    }

    #[test]
    fn verify_cdp_small() {
        for (n, m, d) in [(2, 3, 1), (2, 3, 2)] {
            let p = Params::new(n, m, d).unwrap();
            let report = verify_cdp(&p);
            assert!(report.equal, "({n},{m},{d})");
            assert!(report.difference.is_zero());
        }
    }

    #[test]
    fn functional_equation_cases() {
        // Constant 1 with δ = 0.
        assert!(check_functional_equation(&BivarPoly::one(), 0));
        // q·t with δ = 1: (1,1) ↦ (1,1).
        assert!(check_functional_equation(&BivarPoly::monomial(1, 1, 1), 1));
        // q alone with δ = 1: needs coefficient at (2,2).
        assert!(!check_functional_equation(&BivarPoly::monomial(1, 0, 1), 1));
        // The (2,3,2) aggregate.
        assert!(check_functional_equation(&aggregate_2_3_2(), 8));
    }

    #[test]
    fn l_shape_invariants_2_3_2() {
        let p = Params::new(2, 3, 2).unwrap();
        let l = l_function(&p);
        let delta = p.delta();
        assert!(l.terms().all(|(_, c)| c > &BigInt::zero()));
        assert_eq!(l.t_degree(), Some(2 * delta as u32));
        assert_eq!(l.q_degree(), Some(delta as u32));
        assert_eq!(l.coeff(0, 0), BigInt::one());
        // Top cell: the only q^δ term is t^{2δ}.
        for (k, _) in l.terms() {
            if k.q == delta as u32 {
                assert_eq!(k.t, 2 * delta as u32);
            }
        }
    }
}
