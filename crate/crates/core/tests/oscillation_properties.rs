use elemdiv::algebra::{sturm_count, Bound, Ring};
use elemdiv::matrix::{det, nullspace, rank};
use elemdiv::oscillations::{
    classify_stability, eigvec_adjugate, inertia, mode_report, spectrum, Eigenvectors, LagrangeVerdict, ModeVectors,
    OscSystem, WeierstrassVerdict,
};
use elemdiv::{Mat, QMat, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(v: i64) -> Q {
    Q::from_integer(v.into())
}

fn random_int(rng: &mut ChaCha8Rng, n: usize, span: i64) -> QMat {
    Mat::from_fn(&(), n, n, |_, _| q(rng.random_range(-span..=span)))
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, span: i64) -> QMat {
    let a = random_int(rng, n, span);
    Mat::from_fn(&(), n, n, |i, j| {
        if i <= j {
            a.get(i, j).clone()
        } else {
            a.get(j, i).clone()
        }
    })
}

/// `LᵀL + I`, positive definite by construction.
fn random_mass(rng: &mut ChaCha8Rng, n: usize) -> QMat {
    let l = random_int(rng, n, 2);
    &(&l.transpose() * &l) + &Mat::identity(&(), n)
}

fn random_system(rng: &mut ChaCha8Rng) -> OscSystem {
    let n = rng.random_range(1..=4);
    let m = random_mass(rng, n);
    // a few systems with repeated spectra: K a multiple of M
    let k = if rng.random_ratio(1, 6) {
        m.scale(&q(rng.random_range(-2..=3)))
    } else {
        random_symmetric(rng, n, 3)
    };
    OscSystem::new(m, k).unwrap()
}

#[test]
fn all_roots_real_for_definite_mass() {
    let mut rng = ChaCha8Rng::seed_from_u64(1858);
    for trial in 0..300 {
        let sys = random_system(&mut rng);
        let sp = spectrum(&sys).unwrap();
        let f = &sp.char_poly;
        assert_eq!(
            sturm_count(f, &Bound::NegInf, &Bound::PosInf).unwrap(),
            sp.distinct,
            "non-real root in trial {trial}"
        );
        assert_eq!(sp.real_root_count(), sys.size(), "trial {trial}");
    }
}

#[test]
fn eigenvectors_solve_the_pencil() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut exact = 0;
    for _ in 0..200 {
        let sys = random_system(&mut rng);
        let report = mode_report(&sys).unwrap();
        for mode in &report.modes {
            let Some(s) = mode.root.exact() else { continue };
            exact += 1;
            let at = sys.at(s);
            let ModeVectors::Exact(e) = &mode.vectors else {
                panic!("exact root without exact vectors")
            };
            for v in e.vectors() {
                assert!(v.iter().any(|x| !x.is_zero()));
                assert!(at.mul_vec(&v).iter().all(Ring::is_zero));
            }
            // adjugate degenerates exactly when the eigenspace has dimension ≥ 2
            let geometric = nullspace(&at).len();
            assert_eq!(e.is_degenerate(), geometric >= 2);
            if let Eigenvectors::Nullspace { basis } = e {
                assert_eq!(basis.len(), mode.root.multiplicity);
            }
        }
    }
    assert!(exact > 50);
}

#[test]
fn inertia_is_a_congruence_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(1852);
    for trial in 0..200 {
        let n = 1 + trial % 4;
        let k = random_symmetric(&mut rng, n, 3);
        let c = loop {
            let c = random_int(&mut rng, n, 2);
            if !det(&c).unwrap().is_zero() {
                break c;
            }
        };
        let moved = &(&c.transpose() * &k) * &c;
        let (a, b) = (inertia(&k).unwrap(), inertia(&moved).unwrap());
        assert_eq!(a.signature(), b.signature(), "trial {trial}");
        assert_eq!(a.zero, n - rank(&k));
    }
}

#[test]
fn verdicts_disagree_only_on_repeated_positive_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(1766);
    let mut gaps = 0;
    for _ in 0..300 {
        let sys = random_system(&mut rng);
        let sp = spectrum(&sys).unwrap();
        let (lagrange, weierstrass) = classify_stability(&sys).unwrap();
        if weierstrass == WeierstrassVerdict::Stable {
            assert!(sp.roots.iter().all(|r| r.sign() > 0));
        }
        let agree = matches!(
            (lagrange, weierstrass),
            (LagrangeVerdict::Stable, WeierstrassVerdict::Stable)
                | (LagrangeVerdict::Unstable, WeierstrassVerdict::Unstable)
                | (LagrangeVerdict::Conditional, WeierstrassVerdict::Marginal)
        );
        if !agree {
            gaps += 1;
            assert_eq!(
                (lagrange, weierstrass),
                (LagrangeVerdict::Conditional, WeierstrassVerdict::Stable)
            );
            assert!(sp.has_repeated());
            assert!(sp.roots.iter().all(|r| r.sign() > 0));
        }
    }
    assert!(gaps > 0);
}

#[test]
fn non_roots_are_rejected() {
    let sys = OscSystem::new(Mat::identity(&(), 2), Mat::diagonal(&(), &[q(1), q(4)])).unwrap();
    assert!(eigvec_adjugate(&sys, &q(2)).is_err());
    assert!(eigvec_adjugate(&sys, &q(4)).is_ok());
}
