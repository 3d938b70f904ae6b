use super::{rank, KGMatrix, PeriodicComplex, PeriodicMap};
use crate::error::{Error, Result};
use crate::field::Gf4;
use crate::group_algebra::AlgebraElement;
use crate::linalg::{Matrix, Solution};

/// Outcome of searching for h with dh = target.
#[derive(Clone, Debug)]
pub enum HomotopyOutcome {
    Feasible(PeriodicMap),
    /// No solution with the requested period. `certificate` is a vector y
    /// over the scalar equations with yM = 0 and y·b ≠ 0.
    Infeasible { certificate: Vec<Gf4>, equations: usize, unknowns: usize },
}

impl HomotopyOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, HomotopyOutcome::Feasible(_))
    }

    pub fn witness(&self) -> Option<&PeriodicMap> {
        match self {
            HomotopyOutcome::Feasible(h) => Some(h),
            HomotopyOutcome::Infeasible { .. } => None,
        }
    }
}

struct Layout {
    n: usize,
    degree: i64,
    offsets: Vec<usize>,
    total: usize,
}

impl Layout {
    fn new(t: u32, degree: i64, period: usize) -> Layout {
        let n = 4 * t as usize;
        let mut offsets = Vec::with_capacity(period);
        let mut total = 0;
        for j in 0..period as i64 {
            offsets.push(total);
            total += rank(j) * rank(j + degree) * n;
        }
        Layout { n, degree, offsets, total }
    }

    fn period(&self) -> usize {
        self.offsets.len()
    }

    /// First unknown of entry (r, c) of h_j.
    fn at(&self, j: i64, r: usize, c: usize) -> usize {
        let jj = j.rem_euclid(self.period() as i64);
        let cols = rank(jj + self.degree);
        self.offsets[jj as usize] + (r * cols + c) * self.n
    }
}

fn add_block(rows: &mut [Vec<Gf4>], row0: usize, col0: usize, block: &[Vec<Gf4>]) {
    for (p, brow) in block.iter().enumerate() {
        for (q, &v) in brow.iter().enumerate() {
            rows[row0 + p][col0 + q] += v;
        }
    }
}

/// Extra conditions on a homotopy beyond dh = target.
#[derive(Clone, Debug, Default)]
pub struct HomotopyConstraints {
    /// Require ε∘h_j = 0 for j ≡ 0 (mod 4), so that h and every h∘s̄ⁱ have
    /// vanishing class.
    pub class_free: bool,
    /// Require s̄h + hs̄ = q∘s̄, i.e. h_{j+4} + h_j = q_j.
    pub shift_defect: Option<PeriodicMap>,
    /// Components h_j prescribed outright, for j in 0..period.
    pub fixed: Vec<(i64, KGMatrix)>,
}

/// Solves dh = target for a `period`-periodic h of degree deg(target) − 1.
///
/// With `constrain`, additionally requires ε∘h_j = 0 for j ≡ 0 (mod 4), so
/// that h and every h∘s̄ⁱ have vanishing class.
pub fn solve_homotopy(
    complex: &PeriodicComplex,
    target: &PeriodicMap,
    period: usize,
    constrain: bool,
) -> Result<HomotopyOutcome> {
    let constraints = HomotopyConstraints { class_free: constrain, ..Default::default() };
    solve_homotopy_with(complex, target, period, &constraints)
}

pub fn solve_homotopy_with(
    complex: &PeriodicComplex,
    target: &PeriodicMap,
    period: usize,
    constraints: &HomotopyConstraints,
) -> Result<HomotopyOutcome> {
    if period != 4 && period != 8 {
        return Err(Error::Precondition(format!("period must be 4 or 8, got {period}")));
    }
    if !target.differential(complex).is_zero() {
        return Err(Error::Precondition("homotopy target is not a cocycle".into()));
    }
    let t = complex.t();
    let degree = target.degree() - 1;
    let layout = Layout::new(t, degree, period);
    let n = layout.n;
    let eq_period = period.max(target.period()) as i64;

    let mut rows: Vec<Vec<Gf4>> = Vec::new();
    let mut rhs: Vec<Gf4> = Vec::new();
    for j in 0..eq_period {
        let dl = complex.boundary(j + 1);
        let dr = complex.boundary(j + degree + 1);
        let goal = target.component(j);
        for r in 0..rank(j) {
            for c in 0..rank(j + degree + 1) {
                let base = rows.len();
                rows.extend((0..n).map(|_| vec![Gf4::ZERO; layout.total]));
                rhs.extend_from_slice(goal.get(r, c).coeffs());
                for l in 0..rank(j + 1) {
                    let e = dl.get(r, l);
                    if !e.is_zero() {
                        add_block(&mut rows, base, layout.at(j + 1, l, c), &e.left_mul_matrix());
                    }
                }
                for l in 0..rank(j + degree) {
                    let e = dr.get(l, c);
                    if !e.is_zero() {
                        add_block(&mut rows, base, layout.at(j, r, l), &e.right_mul_matrix());
                    }
                }
            }
        }
    }
    if constraints.class_free {
        for j in (0..period as i64).step_by(4) {
            for c in 0..rank(j + degree) {
                let mut row = vec![Gf4::ZERO; layout.total];
                let at = layout.at(j, 0, c);
                row[at..at + n].fill(Gf4::ONE);
                rows.push(row);
                rhs.push(Gf4::ZERO);
            }
        }
    }
    if let Some(q) = &constraints.shift_defect {
        if q.degree() != degree {
            return Err(Error::Precondition(format!(
                "shift defect has degree {}, expected {degree}",
                q.degree()
            )));
        }
        for j in 0..4i64 {
            for r in 0..rank(j) {
                for c in 0..rank(j + degree) {
                    let goal = q.component(j).get(r, c).coeffs();
                    for k in 0..n {
                        let mut row = vec![Gf4::ZERO; layout.total];
                        row[layout.at(j, r, c) + k] += Gf4::ONE;
                        row[layout.at(j + 4, r, c) + k] += Gf4::ONE;
                        rows.push(row);
                        rhs.push(goal[k]);
                    }
                }
            }
        }
    }
    for (j, m) in &constraints.fixed {
        if (m.rows(), m.cols()) != (rank(*j), rank(j + degree)) {
            return Err(Error::Shape(format!("prescribed component {j} has the wrong shape")));
        }
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let goal = m.get(r, c).coeffs();
                for k in 0..n {
                    let mut row = vec![Gf4::ZERO; layout.total];
                    row[layout.at(*j, r, c) + k] = Gf4::ONE;
                    rows.push(row);
                    rhs.push(goal[k]);
                }
            }
        }
    }

    let system = Matrix::from_rows(&rows, layout.total);
    Ok(match system.solve(&rhs) {
        Solution::Feasible(sol) => {
            let h = PeriodicMap::from_fn(t, degree, period, |j| {
                let (rr, cc) = (rank(j), rank(j + degree));
                let entries = (0..rr * cc)
                    .map(|k| {
                        let at = layout.at(j, k / cc, k % cc);
                        AlgebraElement::from_coeffs(t, sol[at..at + n].to_vec())
                    })
                    .collect();
                KGMatrix::from_entries(t, rr, cc, entries)
            });
            HomotopyOutcome::Feasible(h)
        }
        Solution::Infeasible(certificate) => {
            HomotopyOutcome::Infeasible { certificate, equations: rows.len(), unknowns: layout.total }
        }
    })
}
