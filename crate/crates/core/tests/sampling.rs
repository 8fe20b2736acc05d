use triboson_core::{random_mode_transform, random_state};

/// Two-sided Kolmogorov-Smirnov statistic against the uniform law on [0, 1].
fn ks_uniform(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter()
        .enumerate()
        .map(|(i, x)| (x - i as f64 / n).max((i + 1) as f64 / n - x))
        .fold(0.0, f64::max)
}

#[test]
fn haar_weight_is_uniform() {
    // |α|² of a Haar-random SU(2) element is uniform on [0, 1].
    let n = 1000;
    let xs: Vec<f64> = (0..n)
        .map(|k| random_mode_transform(k).alpha().norm_sqr())
        .collect();
    // 1% critical value for n = 1000.
    assert!(ks_uniform(xs) < 1.63 / (n as f64).sqrt());
}

#[test]
fn random_states_fill_the_sphere() {
    // Uniform states on the unit sphere of C⁴ give E|f₀|² = 1/4.
    let n = 20_000;
    let mean = (0..n).map(|k| random_state(k).a().norm_sqr()).sum::<f64>() / n as f64;
    assert!((mean - 0.25).abs() < 0.01, "{mean}");
}
