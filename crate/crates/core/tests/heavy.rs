//! Opt-in sweeps at six and seven boxes (exact, minutes). Run with
//! `cargo test -p birdtrack --release --test heavy -- --ignored`.

use birdtrack::algebra::{antisymmetrizer, rational, symmetrizer, AlgebraElement};
use birdtrack::projectors::{mold, short_ks};
use birdtrack::tableau::YoungTableau;

fn barred_young(t: &YoungTableau) -> AlgebraElement {
    let n = t.size();
    let mut out = AlgebraElement::identity(n);
    for row in t.rows() {
        out = out.mul(&symmetrizer(n, row).unwrap()).unwrap();
    }
    for column in t.columns() {
        out = out.mul(&antisymmetrizer(n, &column).unwrap()).unwrap();
    }
    out
}

#[test]
#[ignore = "exact sweep over 76 six-box tableaux, roughly a minute"]
fn alpha_matches_idempotency_at_six_boxes() {
    for t in YoungTableau::enumerate(6) {
        let lambda = barred_young(&t)
            .quasi_idempotent_factor()
            .unwrap()
            .expect("barred Young operators are quasi-idempotent");
        assert_eq!(t.alpha() * lambda, rational(1, 1), "tableau {t}");
    }
}

#[test]
#[ignore = "exact sweep over 764 seven-box tableaux, several minutes"]
fn alpha_matches_idempotency_at_seven_boxes() {
    for t in YoungTableau::enumerate(7) {
        let lambda = barred_young(&t)
            .quasi_idempotent_factor()
            .unwrap()
            .expect("barred Young operators are quasi-idempotent");
        assert_eq!(t.alpha() * lambda, rational(1, 1), "tableau {t}");
    }
}

#[test]
#[ignore = "expands all 76 Hermitian projectors at six boxes, minutes"]
fn hermitian_completeness_at_six_boxes() {
    let mut sum = AlgebraElement::zero(6);
    for t in YoungTableau::enumerate(6) {
        sum = sum.add(&mold(&t).unwrap().expand().unwrap()).unwrap();
    }
    assert_eq!(sum, AlgebraElement::identity(6));
}

#[test]
#[ignore = "compares mold and shortened chains on sampled six-box tableaux"]
fn constructions_agree_on_sampled_six_box_tableaux() {
    for t in YoungTableau::enumerate(6).into_iter().step_by(9) {
        let reference = short_ks(&t).expand().unwrap();
        assert_eq!(mold(&t).unwrap().expand().unwrap(), reference, "tableau {t}");
        assert!(reference.is_hermitian(), "tableau {t}");
        assert!(reference.is_idempotent(), "tableau {t}");
    }
}
