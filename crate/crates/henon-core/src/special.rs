//! Sphere/ball measures and the axis moment of the unit sphere, all via the
//! Gamma function (no lookup tables).

use crate::math;
use core::f64::consts::PI;

/// Surface measure of the unit sphere `S^{n-1}` in `R^n`: `2 π^{n/2} / Γ(n/2)`.
///
/// `sphere_area(1) = 2` (two points), `sphere_area(2) = 2π`, `sphere_area(3) = 4π`.
pub fn sphere_area(n: u32) -> f64 {
    let nf = n as f64;
    2.0 * math::pow(PI, 0.5 * nf) / math::gamma(0.5 * nf)
}

/// Volume of the unit ball in `R^n`: `π^{n/2} / Γ(n/2 + 1) = |S^{n-1}|/n`.
pub fn ball_volume(n: u32) -> f64 {
    sphere_area(n) / n as f64
}

/// `∫_{S^{n-1}} |σ·e_1|^p dσ = 2 π^{(n-1)/2} Γ((p+1)/2) / Γ((n+p)/2)`.
pub fn axis_moment(n: u32, p: f64) -> f64 {
    let nf = n as f64;
    2.0 * math::pow(PI, 0.5 * (nf - 1.0)) * math::gamma(0.5 * (p + 1.0))
        / math::gamma(0.5 * (nf + p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn measures_match_closed_forms() {
        assert!((sphere_area(2) - 2.0 * PI).abs() < 1e-14);
        assert!((sphere_area(3) - 4.0 * PI).abs() < 1e-13);
        assert!((ball_volume(3) - 4.0 * PI / 3.0).abs() < 1e-13);
        assert!((ball_volume(2) - PI).abs() < 1e-14);
    }

    #[test]
    fn axis_moment_closed_forms() {
        // ∫_{S^1} cos^2 θ dθ = π
        assert!((axis_moment(2, 2.0) - PI).abs() < 1e-13);
        // ∫_{S^2} σ_1^2 dσ = 4π/3
        assert!((axis_moment(3, 2.0) - 4.0 * PI / 3.0).abs() < 1e-13);
        // p = 0 recovers the full surface measure
        assert!((axis_moment(3, 0.0) - sphere_area(3)).abs() < 1e-13);
        // ∫_{S^2} |σ_1|^3 dσ = 2π ∫_0^π |cos|^3 sin dθ = π
        assert!((axis_moment(3, 3.0) - PI).abs() < 1e-13);
    }
}
