//! Closed-form side lengths of the tabulated monotiles.

use std::f64::consts::PI;
use std::fmt;

use super::{sides_from_angles, EPS};

/// Agreement with a value printed to four decimals.
pub const PRINT_TOL: f64 = 1e-3;

/// One tabulated triangle: angles, closed-form sides and printed values.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub table: &'static str,
    pub label: String,
    pub angles: [f64; 3],
    pub closed: [f64; 3],
    pub printed: [Option<f64>; 3],
}

#[derive(Clone, Debug)]
pub struct GeomCheck {
    pub name: String,
    pub computed: f64,
    pub reference: f64,
    pub tol: f64,
    pub pass: bool,
}

impl GeomCheck {
    fn new(name: String, computed: f64, reference: f64, tol: f64) -> Self {
        let pass = (computed - reference).abs() < tol;
        GeomCheck { name, computed, reference, tol, pass }
    }
}

impl fmt::Display for GeomCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "ok" } else { "FAIL" };
        write!(f, "{:<34} {:.10} vs {:.10} (tol {:.0e}) {verdict}", self.name, self.computed, self.reference, self.tol)
    }
}

#[derive(Clone, Debug, Default)]
pub struct GeomReport {
    pub checks: Vec<GeomCheck>,
}

impl GeomReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&GeomCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    /// Number of printed values compared.
    pub fn printed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.tol == PRINT_TOL).count()
    }
}

impl fmt::Display for GeomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

fn row(table: &'static str, label: &str, angles: [f64; 3], closed: [f64; 3], printed: [Option<f64>; 3]) -> TableRow {
    TableRow { table, label: label.to_string(), angles, closed, printed }
}

fn some3(x: [f64; 3]) -> [Option<f64>; 3] {
    x.map(Some)
}

/// First family `(α, π−α, 4π/f)`.
pub fn family1_sides(alpha: f64, f: f64) -> [f64; 3] {
    let g = 4.0 * PI / f;
    let a = (alpha.cos() * (1.0 - g.cos()) / (g.sin() * alpha.sin())).acos();
    let c = ((g.cos() - alpha.cos().powi(2)) / alpha.sin().powi(2)).acos();
    [a, PI - a, c]
}

/// Second family `(π−γ/2, π/2−γ/2, γ)`.
pub fn family2_sides(gamma: f64) -> [f64; 3] {
    let h = gamma / 2.0;
    let a = ((h.tan() * gamma.cos() - 1.0) / gamma.sin()).acos();
    let b = ((1.0 - gamma.cos() / h.tan()) / gamma.sin()).acos();
    // printed as arccos(1 − 2cot γ), which is π − c
    let c = (2.0 / gamma.tan() - 1.0).acos();
    [a, b, c]
}

pub fn family2_angles(gamma: f64) -> [f64; 3] {
    [PI - gamma / 2.0, PI / 2.0 - gamma / 2.0, gamma]
}

pub fn table_rows() -> Vec<TableRow> {
    let s3 = 3f64.sqrt();
    let s2 = 2f64.sqrt();
    let s5 = 5f64.sqrt();
    let c49 = (4.0 * PI / 9.0).cos();
    let n49 = (4.0 * PI / 9.0).sin();
    let mut rows = Vec::new();

    rows.push(row(
        "Table 2",
        "f=8",
        [5.0 * PI / 6.0, PI / 3.0, PI / 3.0],
        [PI - (2.0 * s3 / 3.0 - 1.0 / 3.0).acos(), PI - ((-2.0 + s3) * s3 / 3.0).acos(), PI - ((-2.0 + s3) * s3 / 3.0).acos()],
        some3([2.5346, 1.4155, 1.4155]),
    ));
    let bc18 = PI - ((c49 - 1.0) * s3 / (3.0 * n49)).acos();
    rows.push(row(
        "Table 2",
        "f=18",
        [5.0 * PI / 9.0, PI / 3.0, PI / 3.0],
        [(-4.0 * c49 / 3.0 + 1.0 / 3.0).acos(), bc18, bc18],
        some3([1.4688, 1.0651, 1.0651]),
    ));
    let bc36 = ((c49 + 1.0) * s3 / (3.0 * n49)).acos();
    rows.push(row(
        "Table 2",
        "f=36",
        [4.0 * PI / 9.0, PI / 3.0, PI / 3.0],
        [(4.0 * c49 / 3.0 + 1.0 / 3.0).acos(), bc36, bc36],
        some3([0.9705, 0.8120, 0.8120]),
    ));

    let phi_m = s5 / 4.0 - 0.25;
    let phi_p = s5 / 4.0 + 0.25;
    let r = (5.0 - s5).sqrt() / (5.0 + s5).sqrt();
    rows.push(row(
        "Table 3",
        "f=10",
        [3.0 * PI / 5.0, PI / 2.0, 3.0 * PI / 10.0],
        [PI - (phi_m / phi_p).acos(), PI - (phi_m * r / phi_p).acos(), r.acos()],
        some3([1.9627, 1.8091, 0.9046]),
    ));
    rows.push(row(
        "Table 3",
        "f=12",
        [7.0 * PI / 12.0, PI / 2.0, PI / 4.0],
        [PI - (s3 / 2.0 - 0.5).acos(), PI - ((s3 - 1.0) / (1.0 + s3)).acos(), (2.0 / (1.0 + s3)).acos()],
        some3([1.9455, 1.8421, 0.7495]),
    ));
    rows.push(row(
        "Table 3",
        "f=16",
        [PI / 2.0, 5.0 * PI / 12.0, PI / 3.0],
        [((s3 - 1.0) * s3 / (3.0 * (1.0 + s3))).acos(), (s2 * (s3 - 1.0) * s3 / 6.0).acos(), (s2 / (1.0 + s3)).acos()],
        some3([1.4155, 1.2673, 1.0267]),
    ));
    rows.push(row(
        "Table 3",
        "f=24",
        [PI / 2.0, 5.0 * PI / 12.0, PI / 4.0],
        [((s3 - 1.0) / (1.0 + s3)).acos(), (s3 / 2.0 - 0.5).acos(), (2.0 / (1.0 + s3)).acos()],
        some3([1.2995, 1.1961, 0.7495]),
    ));
    let (x, y) = (7.0 * PI / 16.0, 3.0 * PI / 16.0);
    rows.push(row(
        "Table 3",
        "f=32",
        [PI / 2.0, x, y],
        [(x.cos() * y.cos() / (x.sin() * y.sin())).acos(), (x.cos() / y.sin()).acos(), (y.cos() / x.sin()).acos()],
        some3([1.2685, 1.2120, 0.5591]),
    ));
    let z = 2.0 * PI / 9.0;
    rows.push(row(
        "Table 3",
        "f=72",
        [PI / 2.0, PI / 3.0, z],
        [(z.cos() * s3 / (3.0 * z.sin())).acos(), (1.0 / (2.0 * z.sin())).acos(), (2.0 * z.cos() * s3 / 3.0).acos()],
        some3([0.8120, 0.6795, 0.4853]),
    ));

    // the first family at several (α, f); the closed form is the table's own
    for (alpha, f) in [(0.55, 6.0), (0.6, 8.0), (0.7, 12.0), (0.52, 24.0)] {
        let al = alpha * PI;
        rows.push(row("Table 4", &format!("family 1 α={alpha}π f={f}"), [al, PI - al, 4.0 * PI / f], family1_sides(al, f), [None; 3]));
    }
    for gamma in [0.26, 0.30, 1.0 / 3.0, 0.4, 0.45] {
        let g = gamma * PI;
        rows.push(row("Table 4", &format!("family 2 γ={gamma:.4}π"), family2_angles(g), family2_sides(g), [None; 3]));
    }
    let beta = s2.atan();
    rows.push(row("Table 4", "f=16 sporadic", [0.75 * PI, beta, PI / 2.0 - beta], [2.0 * PI / 3.0, PI / 2.0, PI / 4.0], [None; 3]));
    rows
}

/// Closed forms against the dual law of cosines, printed values against
/// both, and the isosceles member of the second family.
pub fn verify_table_data() -> GeomReport {
    let mut checks = Vec::new();
    for r in table_rows() {
        let name = |what: &str, i: usize| format!("{} {} {}{}", r.table, r.label, what, ['a', 'b', 'c'][i]);
        match sides_from_angles(r.angles[0], r.angles[1], r.angles[2]) {
            Ok((a, b, c)) => {
                for (i, law) in [a, b, c].into_iter().enumerate() {
                    checks.push(GeomCheck::new(name("closed form ", i), r.closed[i], law, EPS));
                    if let Some(p) = r.printed[i] {
                        checks.push(GeomCheck::new(name("printed ", i), law, p, PRINT_TOL));
                    }
                }
            }
            Err(e) => checks.push(GeomCheck {
                name: format!("{} {} {e}", r.table, r.label),
                computed: f64::NAN,
                reference: f64::NAN,
                tol: EPS,
                pass: false,
            }),
        }
    }
    let iso = family2_sides(PI / 3.0);
    checks.push(GeomCheck::new("Table 4 family 2 γ=π/3 isosceles b=c".into(), iso[1], iso[2], EPS));
    GeomReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_rows_agree() {
        let rep = verify_table_data();
        assert!(rep.pass(), "{}", rep);
        assert_eq!(rep.printed_count(), 27);
    }

    #[test]
    fn spot_values() {
        let rows = table_rows();
        let f18 = rows.iter().find(|r| r.label == "f=18").unwrap();
        assert!((f18.closed[0] - 1.4688).abs() < 1e-4);
        let f72 = rows.iter().find(|r| r.label == "f=72").unwrap();
        assert!((f72.closed[2] - 0.4853).abs() < 1e-4);
    }

    #[test]
    fn misprint_is_caught() {
        let r = GeomCheck::new("x".into(), 1.4155, 1.4175, PRINT_TOL);
        assert!(!r.pass);
    }
}
