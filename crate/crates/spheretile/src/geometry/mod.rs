//! Numeric spherical trigonometry for the prototile and its tilings.

mod obj;
mod realize;
mod tables;

use std::f64::consts::PI;
use std::fmt;

use thiserror::Error;

use crate::angles::AngleTriple;
use crate::edges::{Corner, Side};

pub use obj::{write_obj, DEFAULT_SUBDIVISIONS};
pub use realize::{perturb_gluing, realize_tiling, Realization};
pub use tables::{table_rows, verify_table_data, GeomCheck, GeomReport, TableRow};

/// Tolerance for identities that hold exactly in real arithmetic.
pub const EPS: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("not a spherical triangle: {0}")]
    NotATriangle(String),
    #[error("realization failed at {at}: residual {residual:.3e}")]
    RealizationFailure { at: String, residual: f64 },
    #[error("tiling is not connected: tile {0} was never placed")]
    Disconnected(u32),
}

/// A point on the unit sphere.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpherePoint(pub [f64; 3]);

impl SpherePoint {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        let n = (x * x + y * y + z * z).sqrt();
        SpherePoint([x / n, y / n, z / n])
    }

    pub fn x(&self) -> f64 {
        self.0[0]
    }

    pub fn norm(&self) -> f64 {
        dot(&self.0, &self.0).sqrt()
    }

    /// Great-circle distance.
    pub fn distance(&self, other: &SpherePoint) -> f64 {
        // atan2 keeps precision at both small and near-antipodal separations
        let cr = cross(&self.0, &other.0);
        dot(&cr, &cr).sqrt().atan2(dot(&self.0, &other.0))
    }

    pub fn coords(&self) -> [f64; 3] {
        self.0
    }
}

pub(crate) fn dot(u: &[f64; 3], v: &[f64; 3]) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

pub(crate) fn cross(u: &[f64; 3], v: &[f64; 3]) -> [f64; 3] {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

pub(crate) fn lin(p: f64, u: &[f64; 3], q: f64, v: &[f64; 3]) -> [f64; 3] {
    [p * u[0] + q * v[0], p * u[1] + q * v[1], p * u[2] + q * v[2]]
}

/// Corner angles and opposite side lengths in radians.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TriangleGeometry {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl TriangleGeometry {
    pub fn from_angles(alpha: f64, beta: f64, gamma: f64) -> Result<Self, GeometryError> {
        let (a, b, c) = sides_from_angles(alpha, beta, gamma)?;
        Ok(TriangleGeometry { alpha, beta, gamma, a, b, c })
    }

    pub fn from_triple(angles: &AngleTriple, t: f64) -> Result<Self, GeometryError> {
        let [al, be, ga] = angles.radians(t);
        if (al - PI).abs() < EPS {
            return Err(GeometryError::NotATriangle("α = π needs a lune split; use TriangleGeometry::lune".into()));
        }
        Self::from_angles(al, be, ga)
    }

    /// The degenerate triangle with `α = π`: a lune of angle `β` whose
    /// straight side `a = π` carries `α` at distance `c = π − b` from `β`.
    pub fn lune(beta: f64, b: f64) -> Result<Self, GeometryError> {
        if !(beta > 0.0 && beta <= PI && b > 0.0 && b < PI) {
            return Err(GeometryError::NotATriangle(format!("lune angle {beta}, split {b}")));
        }
        Ok(TriangleGeometry { alpha: PI, beta, gamma: beta, a: PI, b, c: PI - b })
    }

    pub fn is_lune(&self) -> bool {
        (self.alpha - PI).abs() < EPS
    }

    pub fn angle(&self, x: Corner) -> f64 {
        [self.alpha, self.beta, self.gamma][x.index()]
    }

    pub fn side(&self, s: Side) -> f64 {
        [self.a, self.b, self.c][s.index()]
    }

    pub fn excess(&self) -> f64 {
        self.alpha + self.beta + self.gamma - PI
    }
}

impl fmt::Display for TriangleGeometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "angles ({:.6}, {:.6}, {:.6}) sides ({:.6}, {:.6}, {:.6})", self.alpha, self.beta, self.gamma, self.a, self.b, self.c)
    }
}

fn check_triangle(al: f64, be: f64, ga: f64) -> Result<(), GeometryError> {
    let bad = |m: &str| Err(GeometryError::NotATriangle(format!("({al}, {be}, {ga}): {m}")));
    if [al, be, ga].iter().any(|x| !(x.is_finite() && *x > 0.0 && *x < PI)) {
        return bad("every angle must lie in (0, π)");
    }
    if al + be + ga <= PI {
        return bad("non-positive excess");
    }
    if al + be >= PI + ga || be + ga >= PI + al || ga + al >= PI + be {
        return bad("corner inequality violated");
    }
    Ok(())
}

/// Dual law of cosines, `cos a = (cos α + cos β cos γ) / (sin β sin γ)` and
/// cyclically.
pub fn sides_from_angles(alpha: f64, beta: f64, gamma: f64) -> Result<(f64, f64, f64), GeometryError> {
    check_triangle(alpha, beta, gamma)?;
    let side = |x: f64, y: f64, z: f64| ((x.cos() + y.cos() * z.cos()) / (y.sin() * z.sin())).clamp(-1.0, 1.0).acos();
    Ok((side(alpha, beta, gamma), side(beta, gamma, alpha), side(gamma, alpha, beta)))
}

/// Primal law of cosines, the inverse of [`sides_from_angles`].
pub fn angles_from_sides(a: f64, b: f64, c: f64) -> (f64, f64, f64) {
    let angle = |x: f64, y: f64, z: f64| ((x.cos() - y.cos() * z.cos()) / (y.sin() * z.sin())).clamp(-1.0, 1.0).acos();
    (angle(a, b, c), angle(b, c, a), angle(c, a, b))
}

/// `|f·(α+β+γ−π) − 4π|` at the sample value `t`.
pub fn area_consistency(angles: &AngleTriple, t: f64) -> f64 {
    let [al, be, ga] = angles.radians(t);
    (angles.f as f64 * (al + be + ga - PI) - 4.0 * PI).abs()
}
