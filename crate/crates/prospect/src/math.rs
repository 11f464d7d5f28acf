//! Small shared numeric helpers.

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = x - y;
            d * d
        })
        .sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// 1 / cosh^2(x), decaying to 0 for large |x| without overflow artifacts.
pub(crate) fn sech2(x: f64) -> f64 {
    let c = x.cosh();
    let c2 = c * c;
    if c2.is_infinite() {
        0.0
    } else {
        1.0 / c2
    }
}
