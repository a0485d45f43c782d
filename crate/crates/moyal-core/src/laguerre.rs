/// Associated Laguerre polynomial L_m^a(x) by the three-term upward
/// recurrence in the degree m:
///
///   (m+1) L_{m+1}^a = (2m + 1 + a - x) L_m^a - (m + a) L_{m-1}^a,
///
/// which is stable for the index ranges used here (m up to a few hundred).
/// The explicit factorial sum is deliberately not used: it cancels
/// catastrophically already around m + a ≈ 20.
pub fn laguerre(m: usize, a: f64, x: f64) -> f64 {
    if m == 0 {
        return 1.0;
    }
    let mut prev = 1.0; // L_0
    let mut cur = 1.0 + a - x; // L_1
    for k in 1..m {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + a - x) * cur - (kf + a) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn low_degree_closed_forms() {
        // L_2^a(x) = x²/2 - (a+2)x + (a+1)(a+2)/2
        for &(a, x) in &[(0.0, 0.7), (1.0, 2.3), (3.0, 0.1)] {
            let expect = x * x / 2.0 - (a + 2.0) * x + (a + 1.0) * (a + 2.0) / 2.0;
            assert_relative_eq!(laguerre(2, a, x), expect, max_relative = 1e-14);
        }
    }

    #[test]
    fn value_at_zero_is_binomial() {
        // L_m^a(0) = C(m+a, m)
        assert_relative_eq!(laguerre(4, 2.0, 0.0), 15.0, max_relative = 1e-13);
        assert_relative_eq!(laguerre(6, 0.0, 0.0), 1.0, max_relative = 1e-13);
    }

    #[test]
    fn high_degree_stays_finite() {
        let v = laguerre(200, 5.0, 12.5);
        assert!(v.is_finite());
    }
}
