//! Independent oracle: operators acting on the word basis of `V^⊗n`.
//!
//! A formal sum of permutations acts on basis words through the slot
//! action alone, so these checks never touch the algebra's convolution
//! product. Products are realized as successive actions and traces as
//! sums of diagonal action coefficients, giving an independent route to
//! the identities (and to the classical failures frozen in the unit
//! tests). With an alphabet at least as large as the degree the action
//! is faithful.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use birdtrack::algebra::{rational, AlgebraElement};
use birdtrack::projectors::{mold, young};
use birdtrack::tableau::YoungTableau;

/// A vector in `V^⊗n` over an alphabet of letters, sparse in the word basis.
type WordVector = BTreeMap<Vec<u8>, BigRational>;

fn basis_vector(word: Vec<u8>) -> WordVector {
    BTreeMap::from([(word, rational(1, 1))])
}

fn act(x: &AlgebraElement, v: &WordVector) -> WordVector {
    let mut out = WordVector::new();
    for (p, c) in x.terms() {
        for (word, a) in v {
            let moved = p.apply_to_word(word).expect("matching lengths");
            let entry = out.entry(moved).or_insert_with(BigRational::zero);
            *entry += c * a;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn all_words(n: usize, letters: u8) -> Vec<Vec<u8>> {
    let mut words = vec![Vec::new()];
    for _ in 0..n {
        words = words
            .iter()
            .flat_map(|w| {
                (0..letters).map(move |l| {
                    let mut next = w.clone();
                    next.push(l);
                    next
                })
            })
            .collect();
    }
    words
}

fn tab(text: &str) -> YoungTableau {
    YoungTableau::parse(text).unwrap()
}

#[test]
fn young_sum_acts_as_identity_up_to_four_boxes() {
    for n in 1..=4 {
        let mut sum = AlgebraElement::zero(n);
        for t in YoungTableau::enumerate(n) {
            sum = sum.add(&young(&t).expand().unwrap()).unwrap();
        }
        // the alphabet matches the degree, so the action is faithful
        for word in all_words(n, n as u8) {
            let v = basis_vector(word.clone());
            assert_eq!(act(&sum, &v), v, "n={n}, word {word:?}");
        }
    }
}

#[test]
fn young_sum_moves_a_word_at_five_boxes() {
    let mut sum = AlgebraElement::zero(5);
    for t in YoungTableau::enumerate(5) {
        sum = sum.add(&young(&t).expand().unwrap()).unwrap();
    }
    // over a faithful alphabet some basis word must move
    let witness = all_words(5, 5).into_iter().find(|word| {
        let v = basis_vector(word.clone());
        act(&sum, &v) != v
    });
    assert!(witness.is_some(), "the sum acted as the identity everywhere");
}

#[test]
fn hermitian_sum_acts_as_identity_at_five_boxes() {
    let mut sum = AlgebraElement::zero(5);
    for t in YoungTableau::enumerate(5) {
        sum = sum.add(&mold(&t).unwrap().expand().unwrap()).unwrap();
    }
    for word in [vec![0, 0, 1, 1, 2], vec![0, 1, 2, 3, 4], vec![4, 2, 4, 2, 0]] {
        let v = basis_vector(word);
        assert_eq!(act(&sum, &v), v);
    }
}

#[test]
fn young_orthogonality_failure_is_visible_without_products() {
    // successive actions stand in for the operator product; one word the
    // composite fails to annihilate proves the product is nonzero
    let outer = young(&tab("1,2,3/4,5")).expand().unwrap();
    let inner = young(&tab("1,3,5/2,4")).expand().unwrap();
    let surviving = all_words(5, 5)
        .into_iter()
        .find(|word| !act(&outer, &act(&inner, &basis_vector(word.clone()))).is_empty());
    assert!(
        surviving.is_some(),
        "the pair annihilates every word only if the product vanishes"
    );

    // a control pair of different shapes annihilates the sampled words
    let control = young(&tab("1,2,3,4/5")).expand().unwrap();
    for word in all_words(5, 5).into_iter().step_by(157) {
        let via_control = act(&control, &act(&inner, &basis_vector(word)));
        assert!(via_control.is_empty());
    }
}

#[test]
fn square_tableau_absorbs_its_parent_on_every_word() {
    // full column check over a faithful alphabet: the non-Hermitian
    // square-tableau operator and its embedded parent commute
    let y = young(&tab("1,2/3,4")).expand().unwrap();
    assert!(!y.is_hermitian());
    let parent = young(&tab("1,2/3")).expand().unwrap().embed(4).unwrap();
    for word in all_words(4, 4) {
        let v = basis_vector(word.clone());
        let forward = act(&y, &act(&parent, &v));
        let backward = act(&parent, &act(&y, &v));
        assert_eq!(forward, backward, "word {word:?}");
        assert_eq!(forward, act(&y, &v), "absorption on word {word:?}");
    }
    // whereas a hook tableau does not commute with its parent
    let hook = young(&tab("1,2/3")).expand().unwrap();
    let hook_parent = young(&tab("1,2")).expand().unwrap().embed(3).unwrap();
    let witness = basis_vector(vec![0, 1, 0]);
    assert_ne!(
        act(&hook, &act(&hook_parent, &witness)),
        act(&hook_parent, &act(&hook, &witness))
    );
}

#[test]
fn traces_match_diagonal_action_sums() {
    for n in 1..=4 {
        for t in YoungTableau::enumerate(n) {
            let p = mold(&t).unwrap().expand().unwrap();
            for letters in 1..=3u8 {
                let mut diagonal = BigRational::zero();
                for word in all_words(n, letters) {
                    let image = act(&p, &basis_vector(word.clone()));
                    diagonal += image.get(&word).cloned().unwrap_or_else(BigRational::zero);
                }
                assert_eq!(
                    diagonal,
                    p.dimension(letters as u32),
                    "tableau {t}, N={letters}"
                );
            }
        }
    }
}

/// Product over the cells of `(N + column − row) / hook`, an independent
/// closed form for the dimension of the multiplet a shape projects onto.
fn content_formula_dimension(t: &YoungTableau, colors: i64) -> BigRational {
    let shape = t.shape();
    let mut dim = rational(1, 1);
    for (i, &len) in shape.iter().enumerate() {
        for j in 0..len {
            let arm = len - j - 1;
            let leg = shape[i + 1..].iter().filter(|&&l| l > j).count();
            let hook = (arm + leg + 1) as i64;
            dim *= rational(colors + j as i64 - i as i64, hook);
        }
    }
    dim
}

#[test]
fn dimensions_match_the_content_formula() {
    for n in 1..=5 {
        for t in YoungTableau::enumerate(n) {
            let p = mold(&t).unwrap().expand().unwrap();
            for colors in 1..=4u32 {
                assert_eq!(
                    p.dimension(colors),
                    content_formula_dimension(&t, colors as i64),
                    "tableau {t}, N={colors}"
                );
            }
        }
    }
}
