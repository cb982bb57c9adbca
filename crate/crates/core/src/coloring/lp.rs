//! Dense primal simplex for `max c·x` subject to `Ax ≤ b`, `x ≥ 0`, with
//! `b ≥ 0` so that the slack basis is feasible. Bland's rule guarantees
//! termination on degenerate problems.

use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct LinearProgram<F> {
    objective: Vec<F>,
    rows: Vec<Vec<F>>,
    rhs: Vec<F>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution<F> {
    pub value: F,
    pub primal: Vec<F>,
    /// One multiplier per row; optimal for the dual `min b·y`, `Aᵀy ≥ c`.
    pub dual: Vec<F>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome<F> {
    Optimal(LpSolution<F>),
    Unbounded,
}

impl<F: Scalar> LinearProgram<F> {
    pub fn new(objective: Vec<F>) -> Self {
        LinearProgram { objective, rows: Vec::new(), rhs: Vec::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Adds `coeffs · x ≤ bound`. Panics on a negative bound or a length
    /// mismatch.
    pub fn add_row(&mut self, coeffs: Vec<F>, bound: F) {
        assert_eq!(coeffs.len(), self.num_vars(), "row length");
        assert!(!bound.is_negative_tol(), "right-hand sides must be non-negative");
        self.rows.push(coeffs);
        self.rhs.push(bound);
    }

    pub fn maximize(&self) -> LpOutcome<F> {
        let (m, n) = (self.num_rows(), self.num_vars());
        let width = n + m;
        // Tableau rows: [A | I | b]; objective row holds reduced costs.
        let mut tab: Vec<Vec<F>> = self
            .rows
            .iter()
            .zip(&self.rhs)
            .enumerate()
            .map(|(i, (row, b))| {
                let mut t = row.clone();
                t.extend((0..m).map(|j| if i == j { F::one() } else { F::zero() }));
                t.push(b.clone());
                t
            })
            .collect();
        let mut obj: Vec<F> = self.objective.iter().map(|c| -c.clone()).collect();
        obj.extend((0..=m).map(|_| F::zero()));
        let mut basis: Vec<usize> = (n..width).collect();

        loop {
            let Some(enter) = (0..width).find(|&j| obj[j].is_negative_tol()) else {
                break;
            };
            let mut leave: Option<(usize, F)> = None;
            for (i, row) in tab.iter().enumerate() {
                if !row[enter].is_positive_tol() {
                    continue;
                }
                let ratio = row[width].clone() / row[enter].clone();
                let better = match &leave {
                    None => true,
                    Some((l, best)) => {
                        let diff = ratio.clone() - best.clone();
                        diff.is_negative_tol() || (diff.is_zero_tol() && basis[i] < basis[*l])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return LpOutcome::Unbounded;
            };
            let pivot = tab[r][enter].clone();
            for x in tab[r].iter_mut() {
                *x = x.clone() / pivot.clone();
            }
            let pivot_row = tab[r].clone();
            for (i, row) in tab.iter_mut().enumerate() {
                if i != r && !row[enter].is_zero() {
                    let f = row[enter].clone();
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        *x = x.clone() - f.clone() * p.clone();
                    }
                }
            }
            if !obj[enter].is_zero() {
                let f = obj[enter].clone();
                for (x, p) in obj.iter_mut().zip(&pivot_row) {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
            basis[r] = enter;
        }

        let mut primal = vec![F::zero(); n];
        for (i, &b) in basis.iter().enumerate() {
            if b < n {
                primal[b] = tab[i][width].clone();
            }
        }
        let dual = (n..width).map(|j| obj[j].clone()).collect();
        LpOutcome::Optimal(LpSolution { value: obj[width].clone(), primal, dual })
    }
}
