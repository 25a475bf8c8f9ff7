use omega_web::{boundary_images, build, membership_report, radii_report};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn every_catalog_name_builds() {
    for name in ["eq13", "f_a", "f_b", "f3", "f4", "f5", "f6", "p1", "p2", "p3"] {
        assert!(build(name, 1.0, 0.5, 0.3, 3).is_ok(), "{name}");
    }
    assert!(build("nope", 1.0, 1.0, 0.0, 2).is_err());
    assert!(build("f3", -1.0, 1.0, 0.0, 2).is_err());
}

#[test]
fn membership_of_sharp_functions() {
    let v = parse(&membership_report("f_b", 1.0, 1.0, 0.0, 3).unwrap());
    assert_eq!(v["verdict"], "boundary-sharp");
    assert!((v["measured_sup"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    let v = parse(&membership_report("f3", 1.0, 0.5, 1.0, 2).unwrap());
    assert_eq!(v["verdict"], "member");
    assert!((v["margin"].as_f64().unwrap() - 0.5).abs() < 1e-12);
}

#[test]
fn images_have_the_requested_shape() {
    let v = parse(&boundary_images("f3", 0.5, 1.0, 0.0, 2, 64).unwrap());
    assert_eq!(v["boundary"].as_array().unwrap().len(), 128);
    let rings = v["rings"].as_array().unwrap();
    assert_eq!(rings.len(), 3);
    // f(1) = 1.5 for z + 0.5 z^2
    assert!((v["boundary"][0].as_f64().unwrap() - 1.5).abs() < 1e-15);
    assert_eq!(rings[1]["r"], 0.5);
}

#[test]
fn radii_of_the_quadratic() {
    let v = parse(&radii_report("f3", 1.0, 1.0, 0.0, 2).unwrap());
    assert!((v["starlike"].as_f64().unwrap() - 0.5).abs() <= 1e-4);
    assert!((v["convex"].as_f64().unwrap() - 0.25).abs() <= 1e-4);
    assert_eq!(v["convex_floor"], 0.25);
    // the demo f4 uses (a, b, c) = (1, 1, 4): its sup is F(1, 1; 4; 1) = 1.5 whatever lambda is
    let v = parse(&radii_report("f4", 0.5, 1.0, 0.0, 2).unwrap());
    assert_eq!(v["verdict"], "non-member");
    assert!(v["starlike"].is_null() && v["convex"].is_null());
}
