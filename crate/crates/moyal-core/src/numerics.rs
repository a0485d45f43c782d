/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on the
/// Legendre recurrence. Good to machine precision for the orders used here.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // Tricomi initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_deriv(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_deriv(n, x);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn legendre_with_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Fixed-order Gauss-Legendre integral over [a, b].
pub fn integrate_gl(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let (x, w) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for i in 0..n {
        acc += w[i] * f(mid + half * x[i]);
    }
    acc * half
}

/// Composite Gauss-Legendre: `panels` equal subdivisions of [a, b].
pub fn integrate_gl_composite(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    order: usize,
    panels: usize,
) -> f64 {
    let h = (b - a) / panels as f64;
    let (x, w) = gauss_legendre(order);
    let mut acc = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        for i in 0..order {
            acc += w[i] * f(mid + 0.5 * h * x[i]);
        }
    }
    acc * 0.5 * h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomials_exactly() {
        // order n is exact through degree 2n-1
        let v = integrate_gl(|x| x.powi(7) - 3.0 * x.powi(2) + 1.0, 0.0, 2.0, 8);
        let exact = 2.0f64.powi(8) / 8.0 - 2.0f64.powi(3) + 2.0;
        assert!((v - exact).abs() < 1e-12);
    }

    #[test]
    fn integrates_gaussian() {
        let v = integrate_gl_composite(|x| (-x * x).exp(), -8.0, 8.0, 24, 8);
        assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-12);
    }
}
