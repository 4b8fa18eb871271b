//! Independent brute-force recomputations used as ground truth in tests.
//!
//! Everything here is deliberately slow and definition-literal: explicit
//! membership sieves, literal closure certificates up to `4δ`, literal pair
//! scans, and the sweep map evaluated through its index functions.  Apart
//! from [`crate::semigroup::Params`], no arithmetic helpers are shared with
//! the fast path.

use crate::genfun::BivarPoly;
use crate::semigroup::Params;
use crate::semimodule::Semimodule;
use crate::DyckPath;

/// Membership table of `Γ = ⟨dn, dm, dmn+1⟩` on `[0, bound]`, generated by
/// forward closure from 0.
pub fn bfs_semigroup(params: &Params, bound: i64) -> Vec<bool> {
    let mut member = vec![false; bound as usize + 1];
    member[0] = true;
    for x in 0..=bound {
        if member[x as usize] {
            for step in [params.dn(), params.dm(), params.dmns()] {
                if x + step <= bound {
                    member[(x + step) as usize] = true;
                }
            }
        }
    }
    member
}

/// Membership sieve on `[0, bound]` for the set generated by `gens + dn·ℕ`.
fn sieve(gens: &[i64], dn: i64, bound: i64) -> Vec<bool> {
    let mut member = vec![false; bound as usize + 1];
    for &g in gens {
        let mut x = g;
        while x <= bound {
            member[x as usize] = true;
            x += dn;
        }
    }
    member
}

/// All admissible 0-normalized Γ-semimodules, found by scanning every
/// generator vector in the box `0 ≤ c_{i,j} ≤ a_{i,j}` and keeping those
/// whose explicit element set (up to `4δ`) is closed under adding `dn`,
/// `dm`, `dmn+1` and passes the ℓ=1 admissibility test.
///
/// The scan runs in lexicographic row-major order of `(c_{i,j})`, so the
/// result is ordered exactly like
/// [`crate::semimodule::enumerate_admissible`].
pub fn enumerate_admissible_bruteforce(params: &Params) -> Vec<Semimodule> {
    let (d, n, dn, dm, dmns) = (
        params.d(),
        params.n(),
        params.dn(),
        params.dm(),
        params.dmns(),
    );
    let total = (d * n) as usize;
    let check_bound = 4 * params.delta();
    // The sieve must also answer queries at x + dmn+1 and g + dm + 1.
    let sieve_bound = check_bound + 2 * dmns;

    let mut out = Vec::new();
    let mut c = vec![0i64; total];
    loop {
        // Candidate generator vector for the current c-matrix entries.
        let mut gens = Vec::with_capacity(total);
        for i in 0..d {
            for j in 0..n {
                gens.push(params.ahat(i, j) - dn * c[(i * n + j) as usize]);
            }
        }
        if gens.iter().all(|&g| g >= 0) {
            let member = sieve(&gens, dn, sieve_bound);
            let zero_normalized = member[0];
            let closed_dn_dm = (0..=check_bound).all(|x| {
                !member[x as usize] || (member[(x + dn) as usize] && member[(x + dm) as usize])
            });
            let closed_dmns =
                (0..=check_bound).all(|x| !member[x as usize] || member[(x + dmns) as usize]);
            let admissible = (0..d).all(|i| {
                gens.iter()
                    .any(|&g| g % d == i && member[(g + dm + 1) as usize])
            });
            if zero_normalized && closed_dn_dm && admissible {
                // Admissible (dn,dm)-invariant subsets are (dmn+1)-invariant.
                assert!(closed_dmns, "admissibility must force (dmn+1)-invariance");
                out.push(
                    Semimodule::from_gens(params, gens)
                        .expect("brute-force survivor is a valid semimodule"),
                );
            }
        }
        // Odometer step in row-major lexicographic order.
        let mut pos = total;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if c[pos] < params.amat_flat()[pos] {
                c[pos] += 1;
                c[pos + 1..].iter_mut().for_each(|v| *v = 0);
                break;
            }
        }
    }
}

/// `dim Δ` by a literal generator–cogenerator pair scan over `[0, c(Δ)+dm]`.
pub fn dim_bruteforce(s: &Semimodule) -> i64 {
    let params = s.params();
    let (dn, dm) = (params.dn(), params.dm());
    let gens = s.gens_by_residue();
    let conductor = gens.iter().max().unwrap() - dn + 1;
    let member = sieve(gens, dn, conductor.max(0) + dm);
    let mut count = 0;
    for b in 0..conductor.max(0) {
        if !member[b as usize] && member[(b + dm) as usize] {
            count += gens.iter().filter(|&&a| a < b).count() as i64;
        }
    }
    count
}

/// `L(q,t,0)` assembled Δ-side:
/// `(1−t)·Σ_{τ<2δ} t^τ W_τ + t^{2δ} W_{2δ}` with
/// `W_τ = Σ_{cells of Hilb^{[τ]}} q^{dim}`, verifying the stabilization
/// `W_{2δ+1} = W_{2δ}` along the way.
pub fn l_function_bruteforce(params: &Params) -> BivarPoly {
    let two_delta = 2 * params.delta();
    let (dn, dm) = (params.dn(), params.dm());
    let sems = enumerate_admissible_bruteforce(params);

    // Per-semimodule literal data.
    struct Cell {
        e: i64,
        dim: i64,
        member: Vec<bool>,
        conductor: i64,
    }
    let cells: Vec<Cell> = sems
        .iter()
        .map(|s| {
            let gens = s.gens_by_residue();
            let conductor = (gens.iter().max().unwrap() - dn + 1).max(0);
            let bound = conductor + dm + two_delta + 1;
            Cell {
                e: params.delta() - gens.iter().map(|&g| g / dn).sum::<i64>(),
                dim: dim_bruteforce(s),
                member: sieve(gens, dn, bound),
                conductor,
            }
        })
        .collect();

    let weight = |tau: i64| -> Vec<i64> {
        // Multiset of cell dimensions at τ, as counts per q-exponent.
        let mut w = Vec::new();
        for cell in &cells {
            let tau0 = tau - cell.e;
            if tau0 < 0 || !cell.member[tau0 as usize] {
                continue;
            }
            let gaps = (tau0..cell.conductor)
                .filter(|&x| !cell.member[x as usize])
                .count() as i64;
            let dim = (cell.dim - gaps) as usize;
            if w.len() <= dim {
                w.resize(dim + 1, 0);
            }
            w[dim] += 1;
        }
        w
    };

    assert_eq!(
        weight(two_delta),
        weight(two_delta + 1),
        "W_τ must stabilize at τ = 2δ"
    );

    let mut l = BivarPoly::zero();
    for tau in 0..two_delta {
        for (dim, &count) in weight(tau).iter().enumerate() {
            if count != 0 {
                l.add_term(dim as u32, tau as u32, count);
                l.add_term(dim as u32, tau as u32 + 1, -count);
            }
        }
    }
    for (dim, &count) in weight(two_delta).iter().enumerate() {
        if count != 0 {
            l.add_term(dim as u32, two_delta as u32, count);
        }
    }
    l
}

/// The sweep map evaluated through the literal index functions
/// `ε((y);(p,q);x)` and `η((y);(p,q);x)` summed over `x`, then sorted.
pub fn sweep_zeta_literal(path: &DyckPath) -> Vec<i64> {
    let params = path.params();
    let (n, m, dn, dm) = (params.n(), params.m(), params.dn(), params.dm());
    let y = |x: i64| if x < dn { path.height(x) } else { dm };
    let count_above =
        |x: i64, upto: i64, r: i64| (1..=upto).filter(|&yy| m * x - n * yy > r).count() as i64;
    let count_eq =
        |x: i64, upto: i64, r: i64| (1..=upto).filter(|&yy| m * x - n * yy == r).count() as i64;

    let mut vals: Vec<i64> = (0..dn)
        .map(|p| {
            let r = m * p - n * y(p);
            let mut total = 0;
            for x in 0..dn {
                total += count_above(x, y(x + 1), r) - count_above(x, y(x), r);
                if x >= p {
                    total += count_eq(x, y(x + 1), r) - count_eq(x, y(x), r);
                }
            }
            total
        })
        .collect();
    vals.sort_unstable();
    vals
}
