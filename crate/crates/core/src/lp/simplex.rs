//! Dense two-phase simplex with Bland's rule, generic over the scalar so the
//! same tableau runs in f64 or exact rational arithmetic.
//!
//! Duals are read from the final tableau under the columns that formed the
//! initial identity (slack for <= rows, artificial otherwise), which equals
//! the corresponding column of the basis inverse.

use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Row {
    /// Sparse coefficients (column, value); columns may repeat, values add.
    pub coeffs: Vec<(usize, f64)>,
    pub rel: Rel,
    pub rhs: f64,
}

#[derive(Debug, Clone)]
pub struct Problem {
    pub minimize: bool,
    /// Objective over the structural variables.
    pub objective: Vec<f64>,
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Optimal,
    Infeasible,
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub status: Status,
    pub objective: f64,
    /// Structural variable values.
    pub x: Vec<f64>,
    /// One dual per row, in the problem's own orientation.
    pub duals: Vec<f64>,
}

pub trait Scalar: Clone + PartialOrd + std::fmt::Debug {
    fn from_f64(v: f64) -> Self;
    fn to_f64(&self) -> f64;
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Strictly below `-tol`.
    fn lt_zero(&self, tol: f64) -> bool;
    /// Strictly above `tol`.
    fn gt_zero(&self, tol: f64) -> bool;
}

impl Scalar for f64 {
    fn from_f64(v: f64) -> Self {
        v
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn lt_zero(&self, tol: f64) -> bool {
        *self < -tol
    }
    fn gt_zero(&self, tol: f64) -> bool {
        *self > tol
    }
}

impl Scalar for BigRational {
    fn from_f64(v: f64) -> Self {
        <BigRational as FromPrimitive>::from_f64(v).expect("finite float")
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn lt_zero(&self, _tol: f64) -> bool {
        self.is_negative()
    }
    fn gt_zero(&self, _tol: f64) -> bool {
        self.is_positive()
    }
}

struct Tableau<T> {
    m: usize,
    ncols: usize,
    /// m rows of ncols coefficients plus a trailing rhs column.
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
    cost: Vec<T>,
    tol: f64,
}

impl<T: Scalar> Tableau<T> {
    fn rhs(&self, r: usize) -> &T {
        &self.rows[r][self.ncols]
    }

    fn reduced_costs(&self) -> Vec<T> {
        // r_j = c_j - sum_i c_B(i) * tab[i][j]
        let mut red: Vec<T> = self.cost.clone();
        for i in 0..self.m {
            let cb = self.cost[self.basis[i]].clone();
            if cb.gt_zero(0.0) || cb.lt_zero(0.0) {
                for j in 0..self.ncols {
                    let adj = cb.mul(&self.rows[i][j]);
                    red[j] = red[j].sub(&adj);
                }
            }
        }
        red
    }

    fn objective_value(&self) -> T {
        let mut z = T::zero();
        for i in 0..self.m {
            let cb = &self.cost[self.basis[i]];
            z = z.add(&cb.mul(self.rhs(i)));
        }
        z
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let piv = self.rows[r][c].clone();
        for j in 0..=self.ncols {
            self.rows[r][j] = self.rows[r][j].div(&piv);
        }
        for i in 0..self.m {
            if i == r {
                continue;
            }
            let factor = self.rows[i][c].clone();
            if factor.gt_zero(0.0) || factor.lt_zero(0.0) {
                for j in 0..=self.ncols {
                    let adj = factor.mul(&self.rows[r][j]);
                    self.rows[i][j] = self.rows[i][j].sub(&adj);
                }
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule: least-index entering column with negative reduced cost,
    /// least-ratio (ties by least basis variable) leaving row.
    fn run(&mut self, enterable: &dyn Fn(usize) -> bool) -> Result<()> {
        loop {
            let red = self.reduced_costs();
            let entering = (0..self.ncols)
                .find(|&j| enterable(j) && !self.basis.contains(&j) && red[j].lt_zero(self.tol));
            let Some(c) = entering else {
                return Ok(());
            };
            let mut leave: Option<(usize, T)> = None;
            for i in 0..self.m {
                if self.rows[i][c].gt_zero(self.tol) {
                    let ratio = self.rhs(i).div(&self.rows[i][c]);
                    let better = match &leave {
                        None => true,
                        Some((bi, br)) => {
                            ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else {
                return Err(Error::Lp("unbounded linear program".into()));
            };
            self.pivot(r, c);
        }
    }
}

/// Solves the problem, returning optimal primal and dual values in f64.
pub fn solve<T: Scalar>(p: &Problem, tol: f64) -> Result<Solution> {
    let nv = p.objective.len();
    let m = p.rows.len();

    // Normalize rows to rhs >= 0, remembering sign flips for the duals.
    #[derive(Clone)]
    struct Norm {
        coeffs: Vec<(usize, f64)>,
        rel: Rel,
        rhs: f64,
        flipped: bool,
    }
    let rows: Vec<Norm> = p
        .rows
        .iter()
        .map(|row| {
            for &(j, _) in &row.coeffs {
                assert!(j < nv, "coefficient column out of range");
            }
            if row.rhs < 0.0 {
                let rel = match row.rel {
                    Rel::Le => Rel::Ge,
                    Rel::Ge => Rel::Le,
                    Rel::Eq => Rel::Eq,
                };
                Norm {
                    coeffs: row.coeffs.iter().map(|&(j, v)| (j, -v)).collect(),
                    rel,
                    rhs: -row.rhs,
                    flipped: true,
                }
            } else {
                Norm { coeffs: row.coeffs.clone(), rel: row.rel, rhs: row.rhs, flipped: false }
            }
        })
        .collect();

    // Column layout: structural, then slack/surplus, then artificials.
    let mut slack_col = vec![None; m];
    let mut next = nv;
    for (i, row) in rows.iter().enumerate() {
        if row.rel != Rel::Eq {
            slack_col[i] = Some(next);
            next += 1;
        }
    }
    let mut art_col = vec![None; m];
    for (i, row) in rows.iter().enumerate() {
        if row.rel != Rel::Le {
            art_col[i] = Some(next);
            next += 1;
        }
    }
    let ncols = next;

    let sign = if p.minimize { 1.0 } else { -1.0 };
    let mut tab: Tableau<T> = Tableau {
        m,
        ncols,
        rows: vec![vec![T::zero(); ncols + 1]; m],
        basis: vec![0; m],
        cost: vec![T::zero(); ncols],
        tol,
    };
    for (i, row) in rows.iter().enumerate() {
        for &(j, v) in &row.coeffs {
            tab.rows[i][j] = tab.rows[i][j].add(&T::from_f64(v));
        }
        if let Some(s) = slack_col[i] {
            tab.rows[i][s] = if row.rel == Rel::Le { T::one() } else { T::one().neg() };
        }
        if let Some(a) = art_col[i] {
            tab.rows[i][a] = T::one();
        }
        tab.rows[i][ncols] = T::from_f64(row.rhs);
        tab.basis[i] = match (art_col[i], slack_col[i]) {
            (Some(a), _) => a,
            (None, Some(s)) => s,
            (None, None) => unreachable!("every row has an identity column"),
        };
    }

    let art_set: Vec<usize> = art_col.iter().flatten().copied().collect();
    if !art_set.is_empty() {
        for &a in &art_set {
            tab.cost[a] = T::one();
        }
        // Artificials start basic and never re-enter once driven out.
        tab.run(&|j| !art_set.contains(&j))?;
        let z1 = tab.objective_value();
        if z1.gt_zero(tol.max(1e-7)) {
            return Ok(Solution {
                status: Status::Infeasible,
                objective: f64::NAN,
                x: vec![0.0; nv],
                duals: vec![0.0; m],
            });
        }
        // Drive basic artificials out where possible; redundant rows keep a
        // zero-valued artificial in the basis harmlessly.
        for i in 0..m {
            if art_set.contains(&tab.basis[i]) {
                if let Some(c) = (0..ncols)
                    .find(|&j| !art_set.contains(&j) && (tab.rows[i][j].gt_zero(tol) || tab.rows[i][j].lt_zero(tol)))
                {
                    tab.pivot(i, c);
                }
            }
        }
        tab.cost = vec![T::zero(); ncols];
    }

    for j in 0..nv {
        tab.cost[j] = T::from_f64(sign * p.objective[j]);
    }
    tab.run(&|j| !art_set.contains(&j))?;

    let mut x = vec![T::zero(); nv];
    for i in 0..m {
        if tab.basis[i] < nv {
            x[tab.basis[i]] = tab.rhs(i).clone();
        }
    }
    // Dual of row i sits under its original identity column.
    let mut duals = vec![0.0; m];
    for i in 0..m {
        let col = match rows[i].rel {
            Rel::Le => slack_col[i].unwrap(),
            _ => art_col[i].unwrap(),
        };
        let mut y = T::zero();
        for r in 0..m {
            let cb = &tab.cost[tab.basis[r]];
            y = y.add(&cb.mul(&tab.rows[r][col]));
        }
        let mut yv = y.to_f64();
        if rows[i].flipped {
            yv = -yv;
        }
        duals[i] = sign * yv;
    }
    let objective = sign * tab.objective_value().to_f64();
    Ok(Solution {
        status: Status::Optimal,
        objective,
        x: x.into_iter().map(|v| v.to_f64()).collect(),
        duals,
    })
}

pub fn solve_f64(p: &Problem, tol: f64) -> Result<Solution> {
    solve::<f64>(p, tol)
}

pub fn solve_rational(p: &Problem, tol: f64) -> Result<Solution> {
    solve::<BigRational>(p, tol)
}
