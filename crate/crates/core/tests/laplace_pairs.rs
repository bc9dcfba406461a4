use ngwp_core::identities::{laplace_p_samples, LAPLACE_T_SAMPLES};
use ngwp_core::laplace::{
    laplace_forward, pair_eq2_12, pair_eq2_13, pair_eq3_4, talbot_invert, verify_pair, TransformPair,
};
use ngwp_core::specfun::g_closed;
use ngwp_core::{c64, Complex64};

fn registered() -> Vec<TransformPair> {
    let mut v: Vec<TransformPair> = [0.0, 1.0, 2.0].iter().map(|&a| pair_eq2_12(a)).collect();
    v.push(pair_eq2_13(1.0, 1.0));
    v.push(pair_eq2_13(0.5, 2.0));
    v.extend([0.0, 1.0, 0.5].iter().map(|&s| pair_eq3_4(s, 2.0)));
    v
}

#[test]
fn forward_and_round_trip() {
    for pair in registered() {
        let r = verify_pair(&pair, &laplace_p_samples(&pair.id), &LAPLACE_T_SAMPLES, 1e-7);
        assert!(r.passed, "{} {:?}: {:?}", pair.id, pair.params, r.notes);
    }
}

#[test]
fn gaussian_pair_at_tighter_tolerance() {
    for a in [0.0, 1.0, 2.0] {
        let r = verify_pair(&pair_eq2_12(a), &[c64(1.0, 0.0), c64(2.0, 1.0)], &LAPLACE_T_SAMPLES, 1e-8);
        assert!(r.passed, "α = {a}");
    }
}

#[test]
fn more_nodes_do_not_hurt() {
    for pair in registered() {
        for t in LAPLACE_T_SAMPLES {
            let exact = (pair.time_fn)(t).unwrap();
            let img = |p: Complex64| (pair.image_fn)(p).unwrap();
            let e24 = (talbot_invert(img, t, 24).unwrap() - exact).norm();
            let e48 = (talbot_invert(img, t, 48).unwrap() - exact).norm();
            assert!(e48 <= e24.max(1e-13), "{} t={t}: {e48} > {e24}", pair.id);
        }
    }
}

#[test]
fn sine_gaussian_image_is_transform_of_g() {
    let pair = pair_eq2_13(1.0, 1.0);
    for p in [c64(1.0, 0.0), c64(2.0, 0.0), c64(1.0, 1.0)] {
        let q = laplace_forward(|t| (pair.time_fn)(t).unwrap(), p, 1e-12).unwrap().value;
        let img = (pair.image_fn)(p).unwrap();
        assert!((q - img).norm() <= 1e-7 * (1.0 + img.norm()));
    }
}

#[test]
fn inverse_of_sine_gaussian_image() {
    let pair = pair_eq2_13(1.0, 1.0);
    let v = talbot_invert(|p| (pair.image_fn)(p).unwrap(), 0.5, 32).unwrap();
    let g = std::f64::consts::PI.sqrt() * g_closed(c64(1.0, 0.0), c64(1.0, 0.0), 0.5).unwrap();
    assert!((v - g).norm() < 1e-8 * (1.0 + g.norm()));
}

#[test]
fn parabolic_pair_first_sample() {
    let pair = pair_eq3_4(0.0, 2.0);
    let img = (pair.image_fn)(c64(1.0, 0.0)).unwrap();
    let want = std::f64::consts::PI.sqrt() * (-(2f64.sqrt())).exp();
    assert!((img.re - want).abs() < 1e-15);
}
