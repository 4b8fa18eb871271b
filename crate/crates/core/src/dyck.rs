//! `(dn,dm)`-Dyck paths / Young diagrams `Y(dn,dm)`.
//!
//! A path is a weakly increasing height vector `(y_0, …, y_{dn−1})` with
//! `0 ≤ y_x ≤ a_x = ⌊mx/n⌋`; boxes are addressed by `(column x, height y)`
//! with `1 ≤ y ≤ y_x`.  All slope comparisons are cross-multiplied integers;
//! division is forbidden in this module.

use crate::semigroup::Params;
use crate::{Error, Result};

/// A `(dn,dm)`-type Young diagram stored as its column height vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckPath {
    params: Params,
    y: Vec<i64>,
}

impl DyckPath {
    /// Validates length, monotonicity and the staircase bound `y_x ≤ a_x`.
    pub fn new(params: &Params, y: Vec<i64>) -> Result<DyckPath> {
        if y.len() != params.dn() as usize {
            return Err(Error::InvalidPath(format!(
                "expected {} heights, got {}",
                params.dn(),
                y.len()
            )));
        }
        for (x, &h) in y.iter().enumerate() {
            if h < 0 || h > params.a_col(x as i64) {
                return Err(Error::InvalidPath(format!(
                    "height y_{x} = {h} out of bounds [0, {}]",
                    params.a_col(x as i64)
                )));
            }
            if x > 0 && y[x - 1] > h {
                return Err(Error::InvalidPath(format!("heights decrease at x = {x}")));
            }
        }
        Ok(DyckPath {
            params: params.clone(),
            y,
        })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }
    pub fn heights(&self) -> &[i64] {
        &self.y
    }
    pub fn height(&self, x: i64) -> i64 {
        self.y[x as usize]
    }
    /// `|D| = Σ y_x`.
    pub fn size(&self) -> i64 {
        self.y.iter().sum()
    }
    /// `rk_{D,x} = m·x − n·y_x`.
    pub fn rank(&self, x: i64) -> i64 {
        self.params.rank(x, self.y[x as usize])
    }
    pub fn rank_vector(&self) -> Vec<i64> {
        (0..self.params.dn()).map(|x| self.rank(x)).collect()
    }
    /// Whether the box with top-left vertex `(x, y)` lies in the diagram.
    pub fn contains_box(&self, x: i64, y: i64) -> bool {
        x >= 0 && x < self.params.dn() && y >= 1 && y <= self.y[x as usize]
    }

    /// Arm and leg of a box `z = (x, y) ∈ D`: the counts of diagram boxes
    /// strictly left in its row and strictly above in its column.
    pub fn arm_leg(&self, x: i64, y: i64) -> Result<(i64, i64)> {
        if !self.contains_box(x, y) {
            return Err(Error::BoxNotInDiagram { x, y });
        }
        let leg = self.y[x as usize] - y;
        let arm = self.y[..x as usize].iter().filter(|&&h| h >= y).count() as i64;
        Ok((arm, leg))
    }

    /// Boxes satisfying the slope condition
    /// `l/(a+1) ≤ m/n < (l+1)/a`, with `(l+1)/0 = +∞`.
    pub fn dinv(&self) -> i64 {
        let (n, m) = (self.params.n(), self.params.m());
        let mut count = 0;
        for x in 0..self.params.dn() {
            for y in 1..=self.y[x as usize] {
                let (a, l) = self.arm_leg(x, y).expect("box is in the diagram");
                if n * l <= m * (a + 1) && (a == 0 || n * (l + 1) > m * a) {
                    count += 1;
                }
            }
        }
        count
    }

    /// `co-dinv(D) = δ − dinv(D)`, the dimension of the Jacobian cell of `Ψ_d(D)`.
    pub fn codinv(&self) -> i64 {
        self.params.delta() - self.dinv()
    }
}

/// All `(dn,dm)`-Dyck paths, sorted lexicographically on the height vector.
pub fn enumerate_dyck(params: &Params) -> Vec<DyckPath> {
    let dn = params.dn() as usize;
    let mut out = Vec::new();
    let mut cur = vec![0i64; dn];

    fn dfs(cur: &mut Vec<i64>, x: usize, params: &Params, out: &mut Vec<DyckPath>) {
        if x == cur.len() {
            out.push(DyckPath {
                params: params.clone(),
                y: cur.clone(),
            });
            return;
        }
        let lo = if x == 0 { 0 } else { cur[x - 1] };
        for h in lo..=params.a_col(x as i64) {
            cur[x] = h;
            dfs(cur, x + 1, params, out);
        }
    }

    dfs(&mut cur, 0, params, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_and_order() {
        let p = Params::new(2, 3, 2).unwrap();
        let all = enumerate_dyck(&p);
        assert_eq!(all.len(), 23);
        // The explicit lexicographic list for (2,3,2).
        let want: [[i64; 4]; 23] = [
            [0, 0, 0, 0],
            [0, 0, 0, 1],
            [0, 0, 0, 2],
            [0, 0, 0, 3],
            [0, 0, 0, 4],
            [0, 0, 1, 1],
            [0, 0, 1, 2],
            [0, 0, 1, 3],
            [0, 0, 1, 4],
            [0, 0, 2, 2],
            [0, 0, 2, 3],
            [0, 0, 2, 4],
            [0, 0, 3, 3],
            [0, 0, 3, 4],
            [0, 1, 1, 1],
            [0, 1, 1, 2],
            [0, 1, 1, 3],
            [0, 1, 1, 4],
            [0, 1, 2, 2],
            [0, 1, 2, 3],
            [0, 1, 2, 4],
            [0, 1, 3, 3],
            [0, 1, 3, 4],
        ];
        for (d, w) in all.iter().zip(want.iter()) {
            assert_eq!(d.heights(), w);
        }

        let p = Params::new(2, 3, 1).unwrap();
        let all = enumerate_dyck(&p);
        assert_eq!(
            all.iter().map(|d| d.heights().to_vec()).collect::<Vec<_>>(),
            vec![vec![0, 0], vec![0, 1]]
        );

        let p = Params::new(2, 3, 3).unwrap();
        assert_eq!(enumerate_dyck(&p).len(), 377);
    }

    #[test]
    fn arm_leg_figure_example() {
        let p = Params::new(2, 3, 2).unwrap();
        let d = DyckPath::new(&p, vec![0, 0, 3, 4]).unwrap();
        assert_eq!(d.arm_leg(3, 2).unwrap(), (1, 2));
        assert_eq!(p.rank(3, 2), 5);
        // Top box of a column whose left columns are all shorter.
        assert_eq!(d.arm_leg(2, 3).unwrap(), (0, 0));
        // Outside the diagram.
        assert!(d.arm_leg(1, 1).is_err());
        assert!(d.arm_leg(2, 4).is_err());
    }

    #[test]
    fn dinv_examples() {
        let p = Params::new(2, 3, 3).unwrap();
        let d = DyckPath::new(&p, vec![0, 0, 0, 1, 2, 7]).unwrap();
        // Counts of the two failure modes, checked separately.
        let (n, m) = (p.n(), p.m());
        let mut too_tall = 0;
        let mut too_flat = 0;
        for x in 0..p.dn() {
            for y in 1..=d.height(x) {
                let (a, l) = d.arm_leg(x, y).unwrap();
                if n * l > m * (a + 1) {
                    too_tall += 1;
                }
                if a > 0 && n * (l + 1) <= m * a {
                    too_flat += 1;
                }
            }
        }
        assert_eq!(too_tall, 5);
        assert_eq!(too_flat, 0);
        assert_eq!(d.dinv(), 5);
        assert_eq!(d.codinv(), 16);

        // Empty path.
        let empty = DyckPath::new(&p, vec![0; 6]).unwrap();
        assert_eq!(empty.dinv(), 0);
        assert_eq!(empty.codinv(), p.delta());

        // D_23 at (2,3,2) has co-dinv 0.
        let p2 = Params::new(2, 3, 2).unwrap();
        let d23 = DyckPath::new(&p2, vec![0, 1, 3, 4]).unwrap();
        assert_eq!(d23.codinv(), 0);
    }

    #[test]
    fn dinv_bounds_and_count_agreement() {
        for (n, m, d) in [(2, 3, 1), (2, 3, 2), (3, 4, 1)] {
            let p = Params::new(n, m, d).unwrap();
            let paths = enumerate_dyck(&p);
            for path in &paths {
                let dv = path.dinv();
                assert!(0 <= dv && dv <= path.size());
                assert!(path.codinv() >= 0 && path.codinv() <= p.delta());
            }
            // |Y| = |Adm| for every tested parameter set.
            assert_eq!(
                paths.len(),
                crate::semimodule::enumerate_admissible(&p).len()
            );
        }
    }

    #[test]
    fn path_validation() {
        let p = Params::new(2, 3, 2).unwrap();
        assert!(DyckPath::new(&p, vec![0, 0, 0]).is_err());
        assert!(DyckPath::new(&p, vec![0, 0, 1, 0]).is_err());
        assert!(DyckPath::new(&p, vec![0, 2, 2, 2]).is_err());
        assert!(DyckPath::new(&p, vec![-1, 0, 0, 0]).is_err());
        assert!(DyckPath::new(&p, vec![0, 1, 3, 4]).is_ok());
    }
}
