use num_bigint::BigInt;
use proptest::prelude::*;

use seidelcert::exactspec::seidel_char_poly;
use seidelcert::factor::factor_monic;
use seidelcert::graphs::Graph;
use seidelcert::poly::IntPoly;
use seidelcert::seidel::switch;

fn graph_strategy() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (1usize..=9).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            prop::collection::vec(any::<bool>(), pairs),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(bits, sel)| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in (u + 1)..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                let subset = (0..n).filter(|&i| sel[i]).collect();
                (Graph::from_edges(n, &edges).unwrap(), subset)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn switching_preserves_spectrum_and_graph_lines((g, subset) in graph_strategy()) {
        let s = switch(&g, &subset).unwrap();
        prop_assert_eq!(seidel_char_poly(&g), seidel_char_poly(&s));
        prop_assert_eq!(switch(&s, &subset).unwrap(), g.clone());
        prop_assert_eq!(Graph::from_lines(&g.to_lines()).unwrap(), g);
    }

    #[test]
    fn factors_multiply_back(
        roots in prop::collection::vec(-6i64..=6, 0..5),
        quads in prop::collection::vec((-5i64..=5, -5i64..=5), 0..3),
    ) {
        let mut f = IntPoly::one();
        for r in &roots {
            f = f.mul(&IntPoly::from_i64(&[-r, 1]));
        }
        for (b, c) in &quads {
            f = f.mul(&IntPoly::from_i64(&[*c, *b, 1]));
        }
        let fac = factor_monic(&f).unwrap();
        prop_assert!(fac.certified);
        let mut prod = IntPoly::one();
        for (p, e) in &fac.factors {
            prop_assert!(p.deg() >= 1);
            prop_assert_eq!(p.leading(), BigInt::from(1));
            prod = prod.mul(&p.pow(*e));
        }
        prop_assert_eq!(prod, f);
        let linear: usize = fac.factors.iter().filter(|(p, _)| p.deg() == 1).map(|(_, e)| e).sum();
        prop_assert!(linear >= roots.len());
    }
}
