//! Published values for the built-in example matroids.

use serde_json::{json, Value};

/// The value printed for `claim` on the built-in `name`, if there is one.
pub fn expected(name: &str, claim: &str) -> Option<Value> {
    let v = match (name, claim) {
        ("fivevec", "hilbert_ann") => json!([1, 5, 5, 1]),
        ("fivevec", "hilbert_jm") => json!([1, 5, 6, 1]),
        ("fivevec", "ann_equals_jm") => json!(false),
        ("fivevec", "gorenstein_jm") => json!(false),
        ("fivevec", "extra_generators") => json!({"2": ["x1*x3 - x1*x5 - x3*x4 + x4*x5"]}),
        ("fivevec", "hessian_factorisation") => json!(true),
        ("fivevec", "modular") => json!(false),
        ("fivevec", "geometric") => json!(true),
        ("fivevec", "atoms") => json!(5),
        ("fivevec", "coatoms") => json!(6),
        ("fivevec", "fan_jm_counts") => json!({"rays": 7, "maximal": 12}),
        ("fivevec", "fan_jm_rays") => json!([
            [-4, 1, 1, 1, 1],
            [-2, -2, 3, -2, 3],
            [-1, 4, -1, -1, -1],
            [1, 1, -4, 1, 1],
            [1, 1, 1, -4, 1],
            [1, 1, 1, 1, -4],
            [3, -2, -2, 3, -2]
        ]),
        ("fivevec", "fan_ann_counts") => json!({"rays": 9, "maximal": 20}),
        ("fivevec", "fan_ann_rays") => json!([
            [-4, 1, 1, 1, 1],
            [-3, 2, 2, -3, 2],
            [-2, -2, 3, -2, 3],
            [-1, 4, -1, -1, -1],
            [1, 1, -4, 1, 1],
            [1, 1, 1, -4, 1],
            [1, 1, 1, 1, -4],
            [2, 2, -3, 2, -3],
            [3, -2, -2, 3, -2]
        ]),
        ("fivevec", "fan_phi_maximal") => json!(8),
        ("fivevec", "phi_rays_are_negated_jm_rays") => json!(true),
        ("fivevec", "ann_refines_jm") => json!(true),
        ("m22", "fan_jm_rays") | ("m22", "fan_ann_rays") => json!([[-2, 1, 1], [1, -2, 1], [1, 1, -2]]),
        ("m22", "fan_ann_equals_jm") => json!(true),
        ("m22", "vtrop_phi_rays") => json!([[-1, -1, 2], [-1, 2, -1], [2, -1, -1]]),
        ("m22", "phi_rays_are_negated_jm_rays") => json!(true),
        ("m23", "fan_jm_counts") | ("m23", "fan_ann_counts") => json!({"rays": 49, "maximal": 420}),
        ("m23", "fan_phi_counts") => json!({"rays": 21, "maximal": 28}),
        ("m22" | "m23" | "m32" | "fano" | "plane3", "modular") => json!(true),
        ("m22" | "m23" | "m32" | "fano" | "plane3", "gorenstein_jm") => json!(true),
        ("m22" | "m23" | "m32" | "fano" | "plane3", "ann_equals_jm") => json!(true),
        (b, "modular") if b.starts_with("boolean:") => json!(true),
        (b, "gorenstein_jm") if b.starts_with("boolean:") => json!(true),
        _ => return None,
    };
    Some(v)
}
