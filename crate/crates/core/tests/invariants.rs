//! Property tests over randomly sampled parameter triples and objects.

use proptest::prelude::*;

use springer_comb::{bijection, dyck, genfun, oracle, semimodule, DyckPath, Params};

/// All valid triples with dn·dm ≤ 60; small enough to enumerate exhaustively.
fn instance_pool() -> Vec<(i64, i64, i64)> {
    let mut pool = Vec::new();
    for n in 2..=8 {
        for m in n + 1..=31 {
            if num_gcd(n, m) != 1 {
                continue;
            }
            for d in 1..=4 {
                if d * n * d * m <= 60 {
                    pool.push((n, m, d));
                }
            }
        }
    }
    pool
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn arb_instance() -> impl Strategy<Value = (i64, i64, i64)> {
    proptest::sample::select(instance_pool())
}

/// A random path of a random instance, addressed by index into the
/// enumeration to keep shrinking meaningful.
fn arb_path() -> impl Strategy<Value = DyckPath> {
    (arb_instance(), any::<proptest::sample::Index>()).prop_map(|((n, m, d), idx)| {
        let p = Params::new(n, m, d).unwrap();
        let paths = dyck::enumerate_dyck(&p);
        paths[idx.index(paths.len())].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn semigroup_membership_matches_closure((n, m, d) in arb_instance(), x in 0i64..200) {
        let p = Params::new(n, m, d).unwrap();
        let bound = 4 * p.delta().max(50);
        let closure = oracle::bfs_semigroup(&p, bound);
        let x = x % (bound + 1);
        prop_assert_eq!(p.contains(x), closure[x as usize]);
    }

    #[test]
    fn psi_phi_round_trip(path in arb_path()) {
        let (c, data) = bijection::psi(&path);
        let (back, pdata) = bijection::phi(&c);
        prop_assert_eq!(back.heights(), path.heights());
        prop_assert_eq!(&pdata.p, &data.p);
        // Move indices are strictly increasing in (0, (d−1)n].
        for w in data.p.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
        if let (Some(&first), Some(&last)) = (data.p.first(), data.p.last()) {
            prop_assert!(first > 0);
            prop_assert!(last <= (path.params().d() - 1) * path.params().n());
        }
    }

    #[test]
    fn statistic_transport(path in arb_path()) {
        let (c, _) = bijection::psi(&path);
        let s = semimodule::Semimodule::from_cmatrix(&c);
        prop_assert_eq!(s.e(), path.size());
        prop_assert_eq!(s.dim_gaps(), path.codinv());
        prop_assert_eq!(s.dim_gaps(), s.dim_gc());
        prop_assert_eq!(s.dim_gaps(), oracle::dim_bruteforce(&s));
        let back = s.to_cmatrix().unwrap();
        prop_assert_eq!(back.entries(), c.entries());
    }

    #[test]
    fn sweep_equals_gc_and_literal(path in arb_path()) {
        let (c, _) = bijection::psi(&path);
        let s = semimodule::Semimodule::from_cmatrix(&c);
        let zeta = bijection::sweep_zeta(&path);
        prop_assert_eq!(&zeta, &bijection::gc_vector(&s));
        prop_assert_eq!(&zeta, &oracle::sweep_zeta_literal(&path));
        prop_assert_eq!(zeta.iter().sum::<i64>(), path.codinv());
    }

    #[test]
    fn enhanced_rank_round_trip(path in arb_path(), v in 0i64..500) {
        let (_, data) = bijection::psi(&path);
        let v = v % (4 * path.params().delta() + 1);
        let (x, y) = data.enhanced_rank_inverse(v);
        prop_assert_eq!(data.enhanced_rank(x, y), v);
        prop_assert!(y <= path.params().a_col(x));
        prop_assert_eq!(v.div_euclid(path.params().d()), path.params().rank(x, y));
    }

    #[test]
    fn dinv_integer_form_matches_rational_form(path in arb_path()) {
        // The cross-multiplied test against exact rational comparison.
        use num_rational::Ratio;
        let p = path.params();
        let (n, m) = (p.n(), p.m());
        let slope = Ratio::new(m, n);
        let mut count = 0;
        for x in 0..p.dn() {
            for y in 1..=path.height(x) {
                let (a, l) = path.arm_leg(x, y).unwrap();
                let lower_ok = Ratio::new(l, a + 1) <= slope;
                let upper_ok = a == 0 || Ratio::new(l + 1, a) > slope;
                if lower_ok && upper_ok {
                    count += 1;
                }
            }
        }
        prop_assert_eq!(count, path.dinv());
    }

    #[test]
    fn l_poly_cutoff_independence(path in arb_path(), extra in 0i64..6) {
        let (_, data) = bijection::psi(&path);
        let z0 = bijection::path_conductor(&path, &data);
        prop_assert_eq!(
            genfun::l_poly_with_cutoff(&path, z0),
            genfun::l_poly_with_cutoff(&path, z0 + 1 + extra)
        );
    }

    #[test]
    fn gaps_count_matches_set(path in arb_path(), b in 0i64..80) {
        let (c, _) = bijection::psi(&path);
        let s = semimodule::Semimodule::from_cmatrix(&c);
        if s.contains(b) {
            let gaps = s.gaps_from(b).unwrap();
            prop_assert_eq!(gaps.count, gaps.set.len() as i64);
        } else {
            prop_assert!(s.gaps_from(b).is_err());
        }
    }
}

#[test]
fn pool_is_nonempty_and_small() {
    let pool = instance_pool();
    assert!(pool.contains(&(2, 3, 1)));
    assert!(pool.contains(&(2, 3, 3)));
    assert!(pool.contains(&(3, 5, 2)));
    assert!(pool.len() < 64);
}
