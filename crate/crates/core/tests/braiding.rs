mod common;

use common::{
    rf, ribbon_axiom_holds, sparse_golden, yang_baxter_holds, zig_zags_hold, FUNDAMENTAL_BRAIDING,
    FUNDAMENTAL_DUAL_BRAIDING, W_BRAIDING,
};
use superqa::linalg::{LinAlg, Mat, MatOps};
use superqa::repmod::{
    fundamental_dual_module, fundamental_module, simple_module, w_module, WeightModule,
};
use superqa::rtcat::{is_module_map, partial_qtrace, twist};
use superqa::scalar::{CycloField, Field, RatFuncField, Ring};
use superqa::uq_rank2::r_matrix_braiding;

#[test]
fn fundamental_braiding_matches_golden() {
    let f = RatFuncField;
    let v = fundamental_module(&f).unwrap();
    let psi = r_matrix_braiding(&v, &v).unwrap();
    let golden = sparse_golden(9, &FUNDAMENTAL_BRAIDING);
    assert_eq!(psi, golden);
}

#[test]
fn fundamental_dual_braiding_matches_golden() {
    let f = RatFuncField;
    let v = fundamental_module(&f).unwrap();
    let vd = fundamental_dual_module(&f).unwrap();
    let psi = r_matrix_braiding(&v, &vd).unwrap();
    let golden = sparse_golden(9, &FUNDAMENTAL_DUAL_BRAIDING);
    assert_eq!(psi, golden);
}

#[test]
fn w_braiding_matches_golden() {
    let f = RatFuncField;
    let w = w_module(&f).unwrap();
    let psi = r_matrix_braiding(&w, &w).unwrap();
    let golden = sparse_golden(16, &W_BRAIDING);
    assert_eq!(psi, golden);
}

#[test]
fn w_action_satisfies_relations_and_is_simple() {
    let f = RatFuncField;
    let w = w_module(&f).unwrap();
    assert!(w.failing_relations().is_empty());
    for order in [8, 12] {
        let m = simple_module((order / 2) as i64, (order / 2) as i64 + 1, order).unwrap();
        assert_eq!(m.dim(), 4);
        assert!(m.failing_relations().is_empty());
    }
    assert!(w_module(&CycloField::new(6).unwrap()).is_err());
}

#[test]
fn fundamental_skein_relations() {
    let f = RatFuncField;
    let v = fundamental_module(&f).unwrap();
    let vd = fundamental_dual_module(&f).unwrap();
    let id = Mat::identity(&f, 9);
    let psi = r_matrix_braiding(&v, &v).unwrap();
    let psi_inv = f.inverse(&psi).unwrap();
    let lhs = f.mat_sub(&f.mat_scale(&psi, &f.q_pow(1)), &psi_inv);
    assert_eq!(lhs, f.mat_scale(&id, &rf("1-q")));

    let one_plus_q = rf("1+q");
    let pp = r_matrix_braiding(&v, &vd).unwrap();
    let pp_star = r_matrix_braiding(&vd, &v).unwrap();
    for m in [f.mat_mul(&pp_star, &pp), f.mat_mul(&pp, &pp_star)] {
        let inv = f.inverse(&m).unwrap();
        let lhs = f.mat_add(&m, &f.mat_scale(&inv, &f.q_pow(1)));
        assert_eq!(lhs, f.mat_scale(&id, &one_plus_q));
    }
}

fn check_braiding_is_natural<F: Field>(a: &WeightModule<F>, b: &WeightModule<F>) {
    let psi = r_matrix_braiding(a, b).unwrap();
    assert!(is_module_map(&psi, &a.tensor(b), &b.tensor(a)));
}

#[test]
fn braidings_are_module_maps() {
    let f = RatFuncField;
    let v = fundamental_module(&f).unwrap();
    let vd = fundamental_dual_module(&f).unwrap();
    let w = w_module(&f).unwrap();
    check_braiding_is_natural(&v, &v);
    check_braiding_is_natural(&v, &vd);
    check_braiding_is_natural(&vd, &w);
    check_braiding_is_natural(&w, &w.dual());
    let a = simple_module(2, 1, 4).unwrap();
    let b = simple_module(1, 3, 4).unwrap();
    check_braiding_is_natural(&a, &b);
}

#[test]
fn yang_baxter_equation() {
    let f = RatFuncField;
    let v = fundamental_module(&f).unwrap();
    let vd = fundamental_dual_module(&f).unwrap();
    let w = w_module(&f).unwrap();
    assert!(yang_baxter_holds(&v, &v, &v));
    assert!(yang_baxter_holds(&v, &vd, &w));
    assert!(yang_baxter_holds(&w, &w, &w));
    let a = simple_module(1, 2, 4).unwrap();
    let b = simple_module(3, 0, 4).unwrap();
    let c = simple_module(2, 2, 4).unwrap();
    assert!(yang_baxter_holds(&*a, &*b, &*c));
}

#[test]
fn ribbon_axiom() {
    let f = RatFuncField;
    let v = fundamental_module(&f).unwrap();
    let vd = fundamental_dual_module(&f).unwrap();
    let w = w_module(&f).unwrap();
    assert!(ribbon_axiom_holds(&v, &v));
    assert!(ribbon_axiom_holds(&v, &vd));
    assert!(ribbon_axiom_holds(&w, &v));
    for (i, j, k, l) in [(1, 0, 0, 1), (2, 1, 3, 3), (1, 3, 2, 0)] {
        let a = simple_module(i, j, 4).unwrap();
        let b = simple_module(k, l, 4).unwrap();
        assert!(ribbon_axiom_holds(&*a, &*b), "L({i},{j}) (x) L({k},{l})");
    }
}

#[test]
fn twists() {
    let f = RatFuncField;
    let v = fundamental_module(&f).unwrap();
    assert_eq!(twist(&v).unwrap(), Mat::identity(&f, 3));
    let w = w_module(&f).unwrap();
    // Computed value for the spherical pivot; see the README on the sign convention.
    assert_eq!(
        twist(&w).unwrap(),
        f.mat_scale(&Mat::identity(&f, 4), &f.from_int(-1))
    );
    let psi = r_matrix_braiding(&w, &w).unwrap();
    assert_eq!(partial_qtrace(&psi, 4, &w).unwrap(), twist(&w).unwrap());
    for (order, sign) in [(8u32, -1), (12, -1), (6, 1)] {
        let c = CycloField::new(order).unwrap();
        let n = (order / 2) as i64;
        let m = simple_module(n, n + 1, order).unwrap();
        let expected = c.from_int(sign);
        assert_eq!(
            c.as_scalar(&twist(&*m).unwrap()),
            Some(expected),
            "N = {order}"
        );
    }
}

#[test]
fn zig_zag_identities() {
    let f = RatFuncField;
    for m in [fundamental_module(&f).unwrap(), w_module(&f).unwrap()] {
        assert!(zig_zags_hold(&m));
    }
    let m = simple_module(1, 2, 4).unwrap();
    assert!(zig_zags_hold(&*m));
}
