/// Three-argument minmod: the smallest magnitude when all arguments share a
/// sign, zero otherwise.
#[inline]
pub fn minmod3(a: f64, b: f64, c: f64) -> f64 {
    if a > 0.0 && b > 0.0 && c > 0.0 {
        a.min(b).min(c)
    } else if a < 0.0 && b < 0.0 && c < 0.0 {
        a.max(b).max(c)
    } else {
        0.0
    }
}

/// θ-limited slope at the centre node of three consecutive point values.
#[inline]
pub fn limited_slope(u_left: f64, u_center: f64, u_right: f64, theta: f64, dx: f64) -> f64 {
    minmod3(
        theta * (u_center - u_left) / dx,
        (u_right - u_left) / (2.0 * dx),
        theta * (u_right - u_center) / dx,
    )
}
