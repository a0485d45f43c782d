use crate::{laguerre, Complex, MoyalParams};

/// One 2D basis factor f_{mn}(x₁,x₂) for m ≤ n:
///
///   f_{mn} = 2 (−1)^m √(m!/n!) e^{i(n−m)φ} (2r²/θ)^{(n−m)/2}
///            L_m^{n−m}(2r²/θ) e^{−r²/θ},
///
/// with f_{mn} = conj(f_{nm}) for m > n. The factorial ratio is folded into
/// the power term as Π_{k=m+1..n} √(s/k), which avoids overflow for large
/// indices.
fn pair_eval(m: usize, n: usize, x1: f64, x2: f64, theta: f64) -> Complex {
    if m > n {
        return pair_eval(n, m, x1, x2, theta).conj();
    }
    let r2 = x1 * x1 + x2 * x2;
    let s = 2.0 * r2 / theta;
    let mut radial = 2.0 * laguerre(m, (n - m) as f64, s) * (-r2 / theta).exp();
    if m % 2 == 1 {
        radial = -radial;
    }
    for k in (m + 1)..=n {
        radial *= (s / k as f64).sqrt();
    }
    if n == m {
        Complex::new(radial, 0.0)
    } else {
        let phi = x2.atan2(x1);
        Complex::from_polar(1.0, (n - m) as f64 * phi) * radial
    }
}

/// Evaluate the matrix-basis function b_{mn}(x).
///
/// For D = 2 this is f_{mn}; for D = 4 the tensor product
/// f_{m₁n₁}(x₁,x₂)·f_{m₂n₂}(x₃,x₄).
pub fn basis_eval(m: &[usize], n: &[usize], x: &[f64], params: MoyalParams) -> Complex {
    let p = params.pairs();
    assert_eq!(m.len(), p, "multi-index length");
    assert_eq!(n.len(), p, "multi-index length");
    assert_eq!(x.len(), params.dim, "point dimension");
    let mut out = Complex::new(1.0, 0.0);
    for j in 0..p {
        out *= pair_eval(m[j], n[j], x[2 * j], x[2 * j + 1], params.theta);
    }
    out
}
