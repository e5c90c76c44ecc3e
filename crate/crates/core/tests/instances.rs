use transversal_lab::harness::{
    gen_cap_family2, gen_flower2, gen_monotone_lines3, gen_paraboloid, gen_strict2_family3, verify_suite, Instance,
};
use transversal_lab::kernel::Field;
use transversal_lab::lines3::{relation, Relation};
use transversal_lab::poly2::{family_class2, FamilyClass};
use transversal_lab::polytope3::polytopes_meet;
use transversal_lab::{Point3, Scalar};

fn all_generators() -> Vec<Instance> {
    vec![
        gen_cap_family2(5, &Scalar::frac(1, 10), 1).unwrap(),
        gen_flower2(4, &Scalar::frac(1, 20), 2).unwrap(),
        gen_monotone_lines3(6, 3).unwrap(),
        gen_strict2_family3(5, &Scalar::int(1), 4).unwrap(),
        gen_paraboloid(3, &Scalar::frac(1, 1000), 5).unwrap(),
    ]
}

#[test]
fn json_round_trip_is_exact() {
    for inst in all_generators() {
        let text = serde_json::to_string(&inst.to_json()).unwrap();
        let back = Instance::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, inst, "{}", inst.generator());
    }
}

#[test]
fn generators_are_deterministic() {
    for (a, b) in all_generators().into_iter().zip(all_generators()) {
        assert_eq!(a.to_json(), b.to_json());
    }
}

#[test]
fn unmodified_rulings_meet_on_the_saddle() {
    let inst = gen_paraboloid(2, &Scalar::int(0), 0).unwrap();
    // ℓ1 = (1, t, t) and ℓ'1 = (t, 1, t) share (1, 1, 1)
    let p = Point3::new(Scalar::int(1), Scalar::int(1), Scalar::int(1));
    assert!(inst.lines[0].contains(&p));
    assert!(inst.lines[2].contains(&p));

    let inst = gen_paraboloid(3, &Scalar::int(0), 0).unwrap();
    for i in 0..3 {
        for j in 3..6 {
            assert_eq!(relation(&inst.lines[i], &inst.lines[j]).unwrap(), Relation::Meet);
        }
    }
}

#[test]
fn perturbed_rulings_are_skew() {
    let inst = gen_paraboloid(3, &Scalar::frac(1, 1000), 9).unwrap();
    for i in 0..3 {
        for j in 3..6 {
            assert_ne!(relation(&inst.lines[i], &inst.lines[j]).unwrap(), Relation::Meet);
        }
    }
}

#[test]
fn strict2_family_is_pairwise_intersecting() {
    let inst = gen_strict2_family3(6, &Scalar::int(1), 11).unwrap();
    let s = inst.polytopes();
    assert_eq!(family_class2(&inst.shadows()), FamilyClass::Strict2);
    for i in 0..6 {
        for j in i + 1..6 {
            assert!(polytopes_meet(&s[i], &s[j]));
        }
    }
}

#[test]
fn tampered_instance_is_rejected_on_load() {
    let inst = gen_cap_family2(4, &Scalar::frac(1, 10), 1).unwrap();
    let mut v = inst.to_json();
    // a copy of the first set makes a triple with a common point
    let first = v["sets"][0].clone();
    v["sets"][1]["vertices"] = first["vertices"].clone();
    assert!(Instance::from_json(&v).is_err());
}

#[test]
fn suite_reports_repeat_modulo_timing() {
    let strip = |mut r: transversal_lab::harness::SuiteReport| {
        r.elapsed_ms = 0;
        r
    };
    let a = strip(verify_suite("tangent_count_2d", 20, 7).unwrap());
    let b = strip(verify_suite("tangent_count_2d", 20, 7).unwrap());
    assert_eq!(a, b);
    assert_eq!(a.passes, 20);
}

#[test]
fn counterexamples_load_as_instances() {
    let r = verify_suite("paraboloid", 1, 3).unwrap();
    for f in &r.failures {
        let inst = Instance::from_json(f.instance.as_ref().unwrap()).unwrap();
        assert_eq!(inst.lines.len(), 10);
    }
}
