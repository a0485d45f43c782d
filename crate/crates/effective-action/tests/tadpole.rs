use effective_action::tadpole_numeric;

fn log_spaced(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64))
        .collect()
}

#[test]
fn gaussian_probe_reproduces_divergence_coefficients() {
    let cutoffs = log_spaced(1e-6, 1e-3, 9);
    let fit = tadpole_numeric(0.5, 1.0, 1.0, &cutoffs).unwrap();
    // Ω = 0.5, θ = 1: c_eps = −2·0.25/1.25³ = −0.256
    assert!((fit.predicted_c_eps + 0.256).abs() < 1e-12);
    let rel_eps = (fit.c_eps - fit.predicted_c_eps).abs() / fit.predicted_c_eps.abs();
    assert!(rel_eps < 0.01, "1/ε coefficient off by {rel_eps:.2e}");
    let rel_log = (fit.c_log - fit.predicted_c_log).abs() / fit.predicted_c_log.abs();
    assert!(rel_log < 0.05, "ln ε coefficient off by {rel_log:.2e}");
}

#[test]
fn second_parameter_point() {
    let cutoffs = log_spaced(1e-6, 1e-3, 9);
    let fit = tadpole_numeric(0.8, 2.0, 0.5, &cutoffs).unwrap();
    let rel = (fit.c_eps - fit.predicted_c_eps).abs() / fit.predicted_c_eps.abs();
    assert!(rel < 0.01, "1/ε coefficient off by {rel:.2e}");
}

#[test]
fn domain_guards() {
    assert!(tadpole_numeric(0.0, 1.0, 1.0, &[1e-4, 1e-5, 1e-6]).is_err());
    assert!(tadpole_numeric(0.5, 1.0, 1.0, &[1e-4, 1e-5]).is_err());
    assert!(tadpole_numeric(0.5, 1.0, 1.0, &[0.5, 1e-4, 1e-5]).is_err());
}
