use proptest::prelude::*;
use tritrop_core::curve11::{segre_psi, segre_psi_inverse, Curve11Param, LambdaVertex};
use tritrop_core::geometry::{v3, Vec3};
use tritrop_core::plane::v2;
use tritrop_core::Rat;

#[test]
fn segre_examples() {
    assert_eq!(segre_psi(&v3(2, 1, 2)), Curve11Param::new(v2(2, 0), Rat::from_int(-1)));
    assert_eq!(segre_psi(&v3(1, 2, 4)), Curve11Param::new(v2(1, 2), Rat::from_int(1)));
}

#[test]
fn second_vertex_follows_the_sign() {
    let p = Curve11Param::new(v2(0, 0), Rat::from_int(2));
    assert_eq!(p.v1(), v2(2, 2));
    let q = Curve11Param::new(v2(0, 0), Rat::from_int(-2));
    assert_eq!(q.v1(), v2(-2, 2));
    let f = Curve11Param::new(v2(3, 4), Rat::zero());
    assert_eq!(f.geometry().valency, 4);
    assert_eq!(f.geometry().vertices, vec![v2(3, 4)]);
}

#[test]
fn legs_balance_at_each_vertex() {
    for l in [-3, 0, 5] {
        let p = Curve11Param::new(v2(1, 1), Rat::from_int(l));
        let g = p.geometry();
        assert_eq!(g.legs.len(), 4);
        for v in [LambdaVertex::V0, LambdaVertex::V1] {
            let mut s = [0, 0];
            for leg in g.legs.iter().filter(|x| x.vertex == v || l == 0) {
                s = [s[0] + leg.direction[0], s[1] + leg.direction[1]];
            }
            if l != 0 {
                let d = p.edge_direction();
                let e = if v == LambdaVertex::V0 { d } else { [-d[0], -d[1]] };
                s = [s[0] + e[0], s[1] + e[1]];
            }
            assert_eq!(s, [0, 0], "length {l} vertex {v:?}");
        }
    }
}

fn rat() -> impl Strategy<Value = Rat> {
    (-10_000i64..10_000, 1i64..50).prop_map(|(n, d)| Rat::new(n as i128, d as i128))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]
    #[test]
    fn segre_round_trips(x in rat(), y in rat(), z in rat()) {
        let v: Vec3 = [x, y, z];
        prop_assert_eq!(segre_psi_inverse(&segre_psi(&v)), v.clone());
        let p = Curve11Param::from_point(&v);
        prop_assert_eq!(segre_psi(&segre_psi_inverse(&p)), p);
    }
}
