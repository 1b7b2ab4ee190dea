//! Exact linear feasibility by Fourier–Motzkin elimination.
//!
//! Constraints are `coeffs·x + constant REL 0` over rationals. Systems in this
//! crate have at most four variables, so the quadratic blow-up is harmless.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use super::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rel {
    /// `> 0`
    Gt,
    /// `>= 0`
    Ge,
    /// `= 0`
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
    pub rel: Rel,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, constant: Rational, rel: Rel) -> Self {
        Constraint { coeffs, constant, rel }
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn holds_trivially(&self) -> bool {
        match self.rel {
            Rel::Gt => self.constant.is_positive(),
            Rel::Ge => !self.constant.is_negative(),
            Rel::Eq => self.constant.is_zero(),
        }
    }

    fn scaled(&self, k: &Rational) -> Constraint {
        Constraint { coeffs: self.coeffs.iter().map(|c| c * k).collect(), constant: &self.constant * k, rel: self.rel }
    }

    /// Scale so the first nonzero coefficient has absolute value one.
    fn normalized(&self) -> Constraint {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(lead) => {
                let mut k = lead.abs().recip();
                if self.rel == Rel::Eq && lead.is_negative() {
                    k = -k;
                }
                self.scaled(&k)
            }
            None => self.clone(),
        }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).fold(self.constant.clone(), |acc, (c, v)| acc + c * v)
    }

    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        let v = self.eval(x);
        match self.rel {
            Rel::Gt => v.is_positive(),
            Rel::Ge => !v.is_negative(),
            Rel::Eq => v.is_zero(),
        }
    }
}

fn combine(a: &Constraint, ka: &Rational, b: &Constraint, kb: &Rational) -> Constraint {
    let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x * ka + y * kb).collect();
    let rel = if a.rel == Rel::Gt || b.rel == Rel::Gt { Rel::Gt } else { Rel::Ge };
    Constraint { coeffs, constant: &a.constant * ka + &b.constant * kb, rel }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct System {
    pub nvars: usize,
    pub constraints: Vec<Constraint>,
}

impl System {
    pub fn new(nvars: usize) -> Self {
        System { nvars, constraints: Vec::new() }
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, constant: Rational, rel: Rel) {
        assert_eq!(coeffs.len(), self.nvars, "coefficient count");
        self.constraints.push(Constraint::new(coeffs, constant, rel));
    }

    /// `coeffs·x > rhs`, `>= rhs` or `= rhs`.
    pub fn push_rhs(&mut self, coeffs: Vec<Rational>, rel: Rel, rhs: Rational) {
        self.push(coeffs, -rhs, rel);
    }

    /// An equivalent system with `var` eliminated (its coefficients are zero).
    /// Returns `None` when a constant constraint already fails.
    pub fn eliminate(&self, var: usize) -> Option<System> {
        let mut rest = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let eq = self.constraints.iter().find(|c| c.rel == Rel::Eq && !c.coeffs[var].is_zero());
        if let Some(eq) = eq {
            // substitute var from the equality
            for c in &self.constraints {
                if std::ptr::eq(c, eq) {
                    continue;
                }
                if c.coeffs[var].is_zero() {
                    rest.push(c.clone());
                } else {
                    let k = -(&c.coeffs[var] / &eq.coeffs[var]);
                    let mut sub = combine(c, &Rational::one(), eq, &k);
                    sub.rel = c.rel;
                    sub.coeffs[var] = Rational::zero();
                    rest.push(sub);
                }
            }
        } else {
            for c in &self.constraints {
                let v = &c.coeffs[var];
                if v.is_zero() {
                    rest.push(c.clone());
                } else if v.is_positive() {
                    pos.push(c.clone());
                } else {
                    neg.push(c.clone());
                }
            }
            for p in &pos {
                for n in &neg {
                    let kp = n.coeffs[var].abs();
                    let kn = p.coeffs[var].abs();
                    let mut c = combine(p, &kp, n, &kn);
                    c.coeffs[var] = Rational::zero();
                    rest.push(c);
                }
            }
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for c in rest {
            if c.is_constant() {
                if !c.holds_trivially() {
                    return None;
                }
                continue;
            }
            let n = c.normalized();
            if seen.insert(n.clone()) {
                out.push(n);
            }
        }
        Some(System { nvars: self.nvars, constraints: prune(out) })
    }

    /// Eliminate every variable not in `keep`. `None` means infeasible.
    pub fn project(&self, keep: &[usize]) -> Option<System> {
        let mut sys = self.clone();
        for c in &sys.constraints {
            if c.is_constant() && !c.holds_trivially() {
                return None;
            }
        }
        for v in 0..self.nvars {
            if !keep.contains(&v) {
                sys = sys.eliminate(v)?;
            }
        }
        Some(sys)
    }

    pub fn is_feasible(&self) -> bool {
        self.project(&[]).is_some()
    }

    /// For a variable `e`, whether every `e` in some interval `(0, δ)` extends
    /// to a solution.
    pub fn feasible_near_zero(&self, e: usize) -> bool {
        let Some(p) = self.project(&[e]) else {
            return false;
        };
        p.constraints.iter().all(|c| {
            let k = &c.coeffs[e];
            let d = &c.constant;
            if d.is_positive() {
                c.rel != Rel::Eq
            } else if d.is_zero() {
                match c.rel {
                    Rel::Gt => k.is_positive(),
                    Rel::Ge => !k.is_negative(),
                    Rel::Eq => k.is_zero(),
                }
            } else {
                false
            }
        })
    }
}

/// Keep only the tightest inequality among parallel ones.
fn prune(cs: Vec<Constraint>) -> Vec<Constraint> {
    let mut eqs = Vec::new();
    let mut best: BTreeMap<Vec<Rational>, Constraint> = BTreeMap::new();
    for c in cs {
        if c.rel == Rel::Eq {
            eqs.push(c);
            continue;
        }
        match best.get(&c.coeffs) {
            Some(b) if !(c.constant < b.constant || (c.constant == b.constant && c.rel == Rel::Gt)) => {}
            _ => {
                best.insert(c.coeffs.clone(), c);
            }
        }
    }
    eqs.extend(best.into_values());
    eqs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angles::{int, rat};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn strictness_matters() {
        // x > 0, x < 0
        let mut s = System::new(1);
        s.push_rhs(v(&[1]), Rel::Gt, int(0));
        s.push_rhs(v(&[-1]), Rel::Ge, int(0));
        assert!(!s.is_feasible());
        let mut s = System::new(1);
        s.push_rhs(v(&[1]), Rel::Ge, int(0));
        s.push_rhs(v(&[-1]), Rel::Ge, int(0));
        assert!(s.is_feasible());
    }

    #[test]
    fn triangle_ordering() {
        // 0 < c < b < a < 1, a + b + c = 3/2, a = 1/2 forces b + c = 1 with b < 1/2: infeasible
        let mut s = System::new(3);
        s.push_rhs(v(&[1, 1, 1]), Rel::Eq, rat(3, 2));
        s.push_rhs(v(&[1, 0, 0]), Rel::Eq, rat(1, 2));
        s.push_rhs(v(&[1, -1, 0]), Rel::Gt, int(0));
        s.push_rhs(v(&[0, 1, -1]), Rel::Gt, int(0));
        s.push_rhs(v(&[0, 0, 1]), Rel::Gt, int(0));
        assert!(!s.is_feasible());
        s.constraints[0].constant = -rat(5, 4);
        assert!(s.is_feasible());
    }

    #[test]
    fn near_zero() {
        // x > e, x < 1 - e: feasible for small e > 0
        let mut s = System::new(2);
        s.push(v(&[1, -1]), int(0), Rel::Gt);
        s.push(v(&[-1, -1]), int(1), Rel::Gt);
        s.push(v(&[0, 1]), int(0), Rel::Gt);
        assert!(s.feasible_near_zero(1));
        // x > 1/2 + ... only when e >= 1/4
        let mut s = System::new(2);
        s.push(v(&[1, 0]), -rat(1, 2), Rel::Gt);
        s.push(vec![int(-1), int(2)], int(0), Rel::Ge);
        assert!(s.is_feasible());
        assert!(!s.feasible_near_zero(1));
    }
}
