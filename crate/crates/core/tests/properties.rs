use elemdiv::algebra::{factor, gcd, isolate_real_roots, sturm_count, Bound, HomogeneousPoint, Ring};
use elemdiv::matrix::{adjugate, char_matrix, det};
use elemdiv::smith::{chain_from_diagonal, gcd_minors_chain, smith_form};
use elemdiv::{Fp, Int, IntMat, Mat, Modulus, Poly, QMat, Q};
use proptest::prelude::*;

fn q(v: i64) -> Q {
    Q::from_integer(v.into())
}

/// Laplace expansion along the first row.
fn cofactor_det(m: &QMat) -> Q {
    let n = m.rows();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    (0..n).fold(q(0), |acc, j| {
        let term = m.get(0, j) * cofactor_det(&m.minor_matrix(0, j));
        if j % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

fn small_qmat(max_n: usize) -> impl Strategy<Value = QMat> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(-6i64..=6, n * n).prop_map(move |v| Mat::from_fn(&(), n, n, |i, j| q(v[i * n + j])))
    })
}

fn qpoly_strategy(max_deg: usize) -> impl Strategy<Value = Poly<Q>> {
    prop::collection::vec(-5i64..=5, 1..=max_deg + 1).prop_map(|c| Poly::from_i64s(&(), &c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bareiss_matches_cofactor_expansion(m in small_qmat(5)) {
        prop_assert_eq!(det(&m).unwrap(), cofactor_det(&m));
    }

    #[test]
    fn adjugate_identity(m in small_qmat(4)) {
        let n = m.rows();
        let d = det(&m).unwrap();
        let lhs = &m * &adjugate(&m).unwrap();
        prop_assert_eq!(lhs, Mat::identity(&(), n).scale(&d));
    }

    #[test]
    fn determinant_is_multiplicative(a in small_qmat(4), seed in prop::collection::vec(-4i64..=4, 16)) {
        let n = a.rows();
        let b = Mat::from_fn(&(), n, n, |i, j| q(seed[i * n + j]));
        prop_assert_eq!(det(&(&a * &b)).unwrap(), det(&a).unwrap() * det(&b).unwrap());
    }

    #[test]
    fn rational_factorization_multiplies_back(f in qpoly_strategy(6)) {
        prop_assume!(!f.is_zero());
        let fz = factor(&f).unwrap();
        prop_assert_eq!(fz.expand(), f);
    }

    #[test]
    fn finite_field_factorization_multiplies_back(c in prop::collection::vec(0i64..7, 2..9)) {
        let m = Modulus::new(7).unwrap();
        let f = Poly::new(m, c.iter().map(|&x| Fp::new(x, m)).collect());
        prop_assume!(!f.is_zero());
        let fz = factor(&f).unwrap();
        prop_assert_eq!(fz.expand(), f.clone());
        for fac in &fz.factors {
            // no factor of degree ≥ 2 has a root in GF(7)
            if fac.poly.degree().unwrap() >= 2 {
                prop_assert!((0..7).all(|x| !fac.poly.eval(&Fp::new(x, m)).is_zero()));
            }
        }
    }

    #[test]
    fn gcd_divides_both(f in qpoly_strategy(5), g in qpoly_strategy(5), h in qpoly_strategy(3)) {
        let ff = f.clone() * h.clone();
        let gg = g.clone() * h.clone();
        let d = gcd(&ff, &gg);
        prop_assume!(!d.is_zero());
        prop_assert!(d.divides(&ff) && d.divides(&gg));
        if !h.is_zero() {
            prop_assert!(h.monic().divides(&d));
        }
    }

    #[test]
    fn sturm_counts_partition_the_line(f in qpoly_strategy(6), cut in -4i64..=4) {
        prop_assume!(f.degree().unwrap_or(0) >= 1);
        let all = sturm_count(&f, &Bound::NegInf, &Bound::PosInf).unwrap();
        let left = sturm_count(&f, &Bound::NegInf, &Bound::int(cut)).unwrap();
        let right = sturm_count(&f, &Bound::int(cut), &Bound::PosInf).unwrap();
        prop_assert_eq!(all, left + right);
        prop_assert_eq!(isolate_real_roots(&f).unwrap().len(), all);
    }

    #[test]
    fn projective_points_normalize(a in -9i64..=9, b in -9i64..=9, t in 1i64..=5, neg in any::<bool>()) {
        prop_assume!(a != 0 || b != 0);
        let t = if neg { -t } else { t };
        let p = HomogeneousPoint::new(q(a), q(b)).unwrap();
        let pt = HomogeneousPoint::new(q(a * t), q(b * t)).unwrap();
        prop_assert_eq!(p, pt);
    }

    #[test]
    fn integer_smith_matches_minor_gcds(v in prop::collection::vec(-9i64..=9, 12)) {
        let m: IntMat = Mat::from_fn(&(), 3, 4, |i, j| Int::from(v[i * 4 + j]));
        let sf = smith_form(&m);
        prop_assert!(sf.verify(&m));
        let oracle = gcd_minors_chain(&m, 5).unwrap();
        prop_assert_eq!(chain_from_diagonal(&sf.diagonal()), oracle);
    }

    #[test]
    fn polynomial_smith_matches_minor_gcds(m in small_qmat(4)) {
        let cm = char_matrix(&m).unwrap();
        let sf = smith_form(&cm);
        prop_assert!(sf.verify(&cm));
        prop_assert_eq!(chain_from_diagonal(&sf.diagonal()), gcd_minors_chain(&cm, 5).unwrap());
    }
}
