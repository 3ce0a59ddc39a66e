use super::*;
use crate::graph::GraphFamily;
use crate::spectra::{build_alpha_matrix, spectrum};

fn gen(spec: &str) -> Graph {
    spec.parse::<GraphFamily>().unwrap().generate().unwrap()
}

fn sp(g: &Graph, alpha: f64) -> Spectrum {
    spectrum(g, alpha).unwrap()
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9
}

#[test]
fn moment_y_examples() {
    assert!(close(moment_y(&gen("complete:3"), 0.0), 6.0));
    assert!(close(moment_y(&gen("path:5"), 0.0), 8.0));
    assert!(close(moment_y(&gen("matching:2"), 0.5), 1.0));
    let g = gen("petersen");
    assert!(close(moment_y(&g, 0.3), sp(&g, 0.3).eta_square_sum()));
}

#[test]
fn c_threshold_by_hand() {
    // alpha = 0: c = m (2 n^2 - 2n)
    assert!(close(c_threshold(&gen("complete:3"), 0.0), 36.0));
    // K4 at 1/2: m = 6, n = 4: 6 (16 - 4 - 12 + 6) = 36
    assert!(close(c_threshold(&gen("complete:4"), 0.5), 36.0));
}

#[test]
fn strict_bound_examples() {
    let k3 = gen("complete:3");
    assert!(close(lower_bound_strict(&k3, &sp(&k3, 0.0)).unwrap(), 12f64.sqrt()));
    // K2 sits on the bound
    let k2 = gen("complete:2");
    assert!(close(lower_bound_strict(&k2, &sp(&k2, 0.0)).unwrap(), 2.0));
    // so does P3
    let p3 = gen("path:3");
    let s = sp(&p3, 0.0);
    assert!(close(lower_bound_strict(&p3, &s).unwrap(), s.energy));
    let two = gen("matching:2");
    assert!(matches!(lower_bound_strict(&two, &sp(&two, 0.0)), Err(BoundError::Inapplicable(_))));
    assert!(lower_bound_strict(&k3, &sp(&k3, 1.0)).is_err());
}

#[test]
fn two_level_examples() {
    let g = gen("matching:2");
    let s = sp(&g, 0.3);
    assert!(close(lower_bound_two_level(&g, &s).unwrap(), s.energy));
    let g = gen("complete:4");
    let s = sp(&g, 0.2);
    assert!(close(lower_bound_two_level(&g, &s).unwrap(), s.energy));
    let g = gen("path:4");
    let s = sp(&g, 0.0);
    assert!(lower_bound_two_level(&g, &s).unwrap() < s.energy - 1e-3);
    let e = gen("empty:3");
    assert!(lower_bound_two_level(&e, &sp(&e, 0.2)).is_err());
}

#[test]
fn cor1_equality_at_triangle() {
    let g = gen("complete:3");
    for alpha in [0.0, 0.3, 0.9] {
        let s = sp(&g, alpha);
        let b = lower_bound_threshold_cor1(&g, &s).unwrap();
        assert!(b.applicable, "alpha {alpha}");
        assert!(close(b.bound, 4.0 * (1.0 - alpha)));
        assert!(close(s.energy, b.bound));
    }
    let k4 = gen("complete:4");
    let s = sp(&k4, 0.0);
    // s_n = 1 against sqrt(144) / 8 = 1.5
    let b = lower_bound_threshold_cor1(&k4, &s).unwrap();
    assert!(!b.applicable);
    assert!(close(b.threshold.unwrap(), 1.5));
    // the premise matters: the bound itself would exceed E = 6
    assert!(b.bound > s.energy);
    assert!(lower_bound_threshold_cor1(&gen("complete:2"), &sp(&gen("complete:2"), 0.0)).is_err());
}

#[test]
fn cor2_examples() {
    let g = gen("complete:3");
    let b = lower_bound_threshold_cor2(&g, &sp(&g, 0.0)).unwrap();
    assert!(b.applicable);
    assert!(close(b.bound, 0.6 * 18f64.sqrt()));
    let g = gen("complete:4");
    let s = sp(&g, 0.5);
    let b = lower_bound_threshold_cor2(&g, &s).unwrap();
    assert!(b.applicable && s.energy - b.bound > 1e-3);
}

#[test]
fn sn_zero_examples() {
    let g = gen("bipartite:3:3");
    let s = sp(&g, 0.4);
    let b = lower_bound_sn_zero(&g, &s).unwrap();
    assert!(b.applicable && close(b.bound, s.energy));
    let g = gen("complete:4");
    assert!(!lower_bound_sn_zero(&g, &sp(&g, 0.0)).unwrap().applicable);
    let g = gen("cycle:4");
    let s = sp(&g, 0.0);
    let b = lower_bound_sn_zero(&g, &s).unwrap();
    assert!(b.applicable && close(b.bound, 4.0) && close(s.energy, 4.0));
}

#[test]
fn piecewise_examples() {
    let g = gen("bipartite:3:3");
    let s = sp(&g, 0.2);
    let b = lower_bound_piecewise(&g, &s).unwrap();
    assert!(b.regular_branch && close(b.bound, 4.8) && close(s.energy, 4.8));
    let g = gen("cycle:4");
    let s = sp(&g, 0.0);
    let b = lower_bound_piecewise(&g, &s).unwrap();
    assert!(b.regular_branch && close(b.bound, s.energy));
    let g = gen("bipartite:1:3");
    let s = sp(&g, 0.0);
    let b = lower_bound_piecewise(&g, &s).unwrap();
    // (2 * 3 + 0) / 3
    assert!(!b.regular_branch && close(b.bound, 2.0));
    assert!(s.energy > b.bound + 1e-3);
    let g = gen("complete:4");
    assert!(lower_bound_piecewise(&g, &sp(&g, 0.0)).is_err());
}

#[test]
fn regular_lower_examples() {
    let g = gen("bipartite:3:3");
    let s = sp(&g, 0.0);
    assert!(close(lower_bound_regular(&g, &s).unwrap(), 6.0) && close(s.energy, 6.0));
    let g = gen("complete:4");
    let s = sp(&g, 0.5);
    // s_n = 1/2, r = 3: 2 * 0.5 * 4 * 3 * sqrt(0.5) / 3.5
    let want = 12.0 * 0.5f64.sqrt() / 3.5;
    assert!(close(lower_bound_regular(&g, &s).unwrap(), want));
    assert!(s.energy >= want);
    let g = gen("cycle:5");
    let s = sp(&g, 0.0);
    assert!(lower_bound_regular(&g, &s).unwrap() <= s.energy);
    let g = gen("path:4");
    assert!(lower_bound_regular(&g, &sp(&g, 0.0)).is_err());
}

#[test]
fn upper_main_examples() {
    let g = gen("complete:2");
    let s = sp(&g, 0.3);
    assert!(close(upper_bound_main(&g, &s).unwrap(), 1.4) && close(s.energy, 1.4));
    let g = gen("matching:3");
    let s = sp(&g, 0.0);
    assert!(close(upper_bound_main(&g, &s).unwrap(), 6.0) && close(s.energy, 6.0));
    let g = gen("complete:3");
    assert!(close(upper_bound_main(&g, &sp(&g, 0.0)).unwrap(), 2f64.sqrt() + 8f64.sqrt()));
}

#[test]
fn upper_zagreb_and_regular_examples() {
    for alpha in [0.0, 0.4] {
        let g = gen("complete:2");
        let s = sp(&g, alpha);
        assert!(close(upper_bound_zagreb(&g, &s).unwrap(), 2.0 * (1.0 - alpha)));
        assert!(close(upper_bound_regular(&g, &s).unwrap(), 2.0 * (1.0 - alpha)));
    }
    let g = gen("complete:3");
    assert!(close(upper_bound_zagreb(&g, &sp(&g, 0.0)).unwrap(), 3.0 * 2f64.sqrt()));
    let g = gen("complete:4");
    assert!(close(upper_bound_regular(&g, &sp(&g, 0.0)).unwrap(), 4.0 * 3f64.sqrt()));
    let g = gen("cycle:5");
    assert!(close(upper_bound_regular(&g, &sp(&g, 0.0)).unwrap(), 5.0 * 2f64.sqrt()));
    let star = gen("bipartite:1:3");
    let s = sp(&star, 0.5);
    assert!(upper_bound_zagreb(&star, &s).unwrap() > s.energy);
    assert!(upper_bound_regular(&star, &s).is_err());
}

#[test]
fn zagreb_examples() {
    let z = zagreb_bounds(&gen("complete:4")).unwrap();
    assert!(close(z.lower, 36.0) && close(z.upper_b, 36.0));
    let z = zagreb_bounds(&gen("bipartite:1:3")).unwrap();
    assert!(close(z.lower, 11.0));
    let z = zagreb_bounds(&gen("path:3")).unwrap();
    assert!(close(z.upper_a, 6.0));
    assert!(zagreb_bounds(&gen("matching:2")).is_err());
}

#[test]
fn trace_radius_examples() {
    let b = build_alpha_matrix(&gen("complete:3"), 0.0).unwrap();
    assert!(close(trace_radius_bound(&b).unwrap(), 2.0));
    let ones = SymMatrix::from_upper_fn(3, |_, _| 1.0);
    assert!(close(trace_radius_bound(&ones).unwrap(), 3.0));
    let p3 = gen("path:3");
    let b = build_alpha_matrix(&p3, 0.5).unwrap();
    assert!(trace_radius_bound(&b).unwrap() >= sp(&p3, 0.5).radius());
    let neg = SymMatrix::from_upper_fn(3, |i, j| if i == j { -1.0 } else { 0.0 });
    assert!(trace_radius_bound(&neg).is_err());
    assert!(trace_radius_bound(&SymMatrix::identity(2)).is_err());
}

#[test]
fn ordered_sum_examples() {
    assert!(ordered_sum_inequality(&[3.0, 3.0, 1.0, 1.0]).unwrap());
    assert!(ordered_sum_inequality(&[1.0, 1.0, 1.0]).unwrap());
    assert!(ordered_sum_inequality(&[3.0, 2.0, 1.0]).unwrap());
    assert!(ordered_sum_inequality(&[]).unwrap());
    assert_eq!(ordered_sum_inequality(&[1.0, 2.0]), Err(BoundError::Unsorted));
    assert_eq!(ordered_sum_inequality(&[1.0, -1.0]), Err(BoundError::Negative));
}

#[test]
fn report_flags() {
    let r = full_report(&gen("complete:3"), 0.0).unwrap();
    assert!(r.get("lower_bound_threshold_cor1").unwrap().equality);
    assert_eq!(r.classification, ShapeClass::CompleteGraph);

    let r = full_report(&gen("matching:2"), 0.5).unwrap();
    assert!(r.get("lower_bound_two_level").unwrap().equality);
    assert!(r.get("upper_bound_main").unwrap().equality);
    assert!(close(r.y, 1.0));

    let r = full_report(&gen("petersen"), 0.3).unwrap();
    for b in &r.bounds {
        assert!(!b.violated(), "{}", b.name);
        if b.name.starts_with("lower") || b.name.starts_with("upper") {
            assert!(!b.equality, "{}", b.name);
        }
    }
    assert_eq!(r.graph6.len(), 1 + 8);
}

#[test]
fn report_json_shape() {
    let r = full_report(&gen("cycle:4"), 0.0).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    for key in ["alpha", "y", "c", "energy", "bounds"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let first = &v["bounds"][0];
    for key in ["name", "value", "applicable", "satisfied", "slack", "equality"] {
        assert!(first.get(key).is_some(), "{key}");
    }
}
