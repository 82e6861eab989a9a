use bggchar_core::json::{load_provider, provider_to_json};
use bggchar_core::*;
use num_bigint::BigUint;
use proptest::prelude::*;

fn rd(label: &str) -> RootDatum {
    RootDatum::from_label(label).unwrap()
}

fn w(c: &[i64]) -> Weight {
    Weight(c.to_vec())
}

fn verma(label: &str, lambda: Vec<i64>, depth: u64) -> Character {
    let r = rd(label);
    let lambda = Weight(lambda);
    verma_character(&lambda, &r, &TruncationWindow::new(lambda.clone(), depth)).unwrap()
}

fn weight2() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..5, 2)
}

proptest! {
    #[test]
    fn products_commute_and_associate(
        label in prop::sample::select(vec!["A2", "B2", "G2"]),
        a in weight2(), b in weight2(), c in weight2(),
    ) {
        let (f, g, h) = (verma(label, a, 4), verma(label, b, 4), verma(label, c, 4));
        let fg = char_mul(&f, &g, None).unwrap();
        prop_assert_eq!(&fg, &char_mul(&g, &f, None).unwrap());
        let left = char_mul(&fg, &h, None).unwrap();
        let right = char_mul(&f, &char_mul(&g, &h, None).unwrap(), None).unwrap();
        prop_assert_eq!(left.terms(), right.terms());
    }

    #[test]
    fn verma_products_shift_q_minus_twice(
        label in prop::sample::select(vec!["A1", "A2", "B2"]),
        seed in prop::collection::vec(-4i64..5, 2),
    ) {
        // Δ(λ)·Δ(μ) = q⁻·q⁻·e^{λ+μ+2ρ}
        let r = rd(label);
        let n = r.rank();
        let lambda = seed[..n.min(2)].to_vec();
        let mu: Vec<i64> = lambda.iter().map(|x| 1 - x).collect();
        let prod = char_mul(&verma(label, lambda.clone(), 5), &verma(label, mu.clone(), 5), None).unwrap();
        let qm = q_minus_at_depth(&r, 5).unwrap();
        let shift = &(&Weight(lambda) + &Weight(mu)) + &r.rho().scaled(2);
        let expected = char_mul(
            &char_mul(&qm, &qm, None).unwrap(),
            &Character::monomial(&r, shift),
            Some(prod.window()),
        )
        .unwrap();
        prop_assert_eq!(prod.terms(), expected.terms());
    }

    #[test]
    fn rank_one_simple_dimension_is_digit_product(n in 0i64..2000, p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let provider = RestrictedCharProvider::sl2(p).unwrap();
        let win = TruncationWindow::new(w(&[n]), n as u64 + 1);
        let ch = simple_char_modular(&w(&[n]), p, &win, None, &provider).unwrap();
        let mut expected = 1u64;
        let mut rest = n as u64;
        while rest > 0 {
            expected *= rest % p + 1;
            rest /= p;
        }
        prop_assert_eq!(ch.dimension(), BigUint::from(expected));
    }

    #[test]
    fn modular_reciprocity(p in prop::sample::select(vec![2u64, 3, 5]), lambda in -1i64..60, drop in 0i64..200) {
        let r = sl2_reciprocity_check(lambda, lambda - 2 * drop, &Regime::Modular { p }).unwrap();
        prop_assert!(r.equal, "{:?}", r);
    }
}

#[test]
fn provider_file_round_trip() {
    let provider = RestrictedCharProvider::weyl(&rd("A2"), 3).unwrap();
    let path = std::env::temp_dir().join(format!("bggchar-provider-{}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string(&provider_to_json(&provider).unwrap()).unwrap()).unwrap();
    let loaded = load_provider(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(loaded.modulus(), 3);
    assert_eq!(loaded.provenance(), provider.provenance());
    let win = TruncationWindow::new(w(&[7, 4]), 6);
    let a = simple_char_modular(&w(&[7, 4]), 3, &win, None, &provider).unwrap();
    let b = simple_char_modular(&w(&[7, 4]), 3, &win, None, &loaded).unwrap();
    assert_eq!(a, b);
}

#[test]
fn missing_table_entry_is_a_gap() {
    let r = rd("A2");
    let full = RestrictedCharProvider::weyl(&r, 3).unwrap().to_table().unwrap();
    let mut table = full.clone();
    table.remove(&w(&[1, 2]));
    let partial = RestrictedCharProvider::from_table(&r, 3, "partial", table).unwrap();
    let win = TruncationWindow::new(w(&[4, 2]), 3);
    match simple_char_modular(&w(&[4, 2]), 3, &win, None, &partial) {
        Err(Error::ProviderGap { modulus, missing }) => {
            assert_eq!(modulus, 3);
            assert_eq!(missing, vec![w(&[1, 2])]);
        }
        other => panic!("expected a provider gap, got {other:?}"),
    }
}

#[test]
fn weyl_characters_break_the_verma_sum_at_small_p() {
    // Δ(3) at p = 3: factors L(3), L(1), L(−5) above −6
    let a1 = rd("A1");
    let regime = Regime::Modular { p: 3 };
    let ledger = sl2_composition_factors(3, &regime, -6).unwrap();
    assert_eq!(ledger.factors.keys().copied().collect::<Vec<_>>(), vec![-5, 1, 3]);
    let window = ledger.window();
    let verma = verma_character(&w(&[3]), &a1, &window).unwrap();

    let sum_with = |char_of: &dyn Fn(i64) -> Character| {
        let mut total = Character::zero(&a1, window.clone(), false);
        for &f in ledger.factors.keys() {
            total = char_add(&total, &char_of(f).restrict(&window).unwrap()).unwrap();
        }
        total
    };
    let exact = RestrictedCharProvider::sl2(3).unwrap();
    let exact_sum = sum_with(&|f| {
        simple_char_modular(&w(&[f]), 3, &window, None, &exact).unwrap()
    });
    assert_eq!(exact_sum, verma);

    // the Weyl provider treats 3 as restricted for modulus 9 and returns χ(3)
    let weyl9 = RestrictedCharProvider::weyl(&a1, 9).unwrap();
    let weyl_sum = sum_with(&|f| {
        if f >= 0 {
            weyl9.get(&w(&[f])).unwrap()
        } else {
            simple_char_modular(&w(&[f]), 3, &window, None, &exact).unwrap()
        }
    });
    assert_ne!(weyl_sum, verma);
    assert_ne!(weyl9.get(&w(&[3])).unwrap().terms(), exact.lift(2).unwrap().get(&w(&[3])).unwrap().terms());
}
