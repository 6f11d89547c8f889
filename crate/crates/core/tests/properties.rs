//! Randomised checks of the structural identities across modules.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use proptest::prelude::*;
use schurforge::exact::{rat, LaurentZ, MatrixQ, Rational};
use schurforge::lambda::{adams_on_base, adams_on_witt, LambdaRing};
use schurforge::partition::{partitions_up_to, Partition};
use schurforge::repring::{ev, h_map, k0_class, lambda_of_class, lambda_sigma, schur_class, K0Class, RDElement};
use schurforge::symfunc::{mul, SymFunc};
use schurforge::symgroup::{isotypic_projector, Permutation};
use schurforge::tensor::{
    categorical_trace, char_series, class_function_trace, tensor_power_trace, GObject, GradedMap, GradedObject,
    DEFAULT_TENSOR_BOUND as B,
};

fn arb_class() -> impl Strategy<Value = K0Class> {
    proptest::collection::vec((-2i64..=2, -2i64..=2), 0..3).prop_map(LaurentZ::from_terms)
}

fn arb_object(max_dim: usize) -> impl Strategy<Value = GradedObject> {
    proptest::collection::vec((-1i64..=2, 1usize..=2), 1..=max_dim).prop_map(move |v| {
        let mut dims = BTreeMap::new();
        let mut total = 0;
        for (d, m) in v {
            let m = m.min(max_dim - total);
            if m > 0 {
                *dims.entry(d).or_insert(0) += m;
                total += m;
            }
        }
        GradedObject::new(dims)
    })
}

fn arb_endo(max_dim: usize) -> impl Strategy<Value = GradedMap> {
    (arb_object(max_dim), proptest::collection::vec(-3i64..=3, 16)).prop_map(|(x, entries)| {
        let mut blocks = BTreeMap::new();
        let mut k = 0;
        for (d, m) in x.dims() {
            let mut block = MatrixQ::zeros(m, m);
            for i in 0..m {
                for j in 0..m {
                    block.set(i, j, rat(entries[k % entries.len()], 1 + (k % 2) as i64));
                    k += 1;
                }
            }
            blocks.insert(d, block);
        }
        GradedMap::endomorphism(&x, blocks).unwrap()
    })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

fn total(t: &BTreeMap<i64, Rational>) -> Rational {
    t.values().fold(Rational::zero(), |a, b| a + b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lambda_of_negative_is_inverse(x in arb_class()) {
        let prod = lambda_of_class(&x, 5).series().mul_series(lambda_of_class(&-x, 5).series());
        prop_assert!(prod.is_one());
    }

    #[test]
    fn adams_routes_agree(x in arb_class(), n in 1usize..=4) {
        let via_witt = adams_on_witt(&x.lambda_witt(n), n).unwrap();
        prop_assert_eq!(via_witt.coeff(1), adams_on_base(&x, n));
    }

    #[test]
    fn ev_is_multiplicative(x in arb_class(), a in 0usize..7, b in 0usize..7) {
        let parts: Vec<Partition> = partitions_up_to(3);
        let (fa, fb) = (SymFunc::schur(parts[a].clone()), SymFunc::schur(parts[b].clone()));
        prop_assert_eq!(ev(&x, &mul(&fa, &fb)).unwrap(), ev(&x, &fa).unwrap() * ev(&x, &fb).unwrap());
        let sign = if parts[a].size() % 2 == 0 { K0Class::one() } else { -K0Class::one() };
        prop_assert_eq!(schur_class(&-x.clone(), &parts[a]), sign * schur_class(&x, &parts[a].conjugate()));
    }

    #[test]
    fn classes_respect_sum_tensor_shift(x in arb_object(3), y in arb_object(3)) {
        prop_assert_eq!(k0_class(&x.direct_sum(&y)), k0_class(&x) + k0_class(&y));
        prop_assert_eq!(k0_class(&x.tensor(&y)), k0_class(&x) * k0_class(&y));
        prop_assert_eq!(k0_class(&x.shift(1)), -LaurentZ::q() * k0_class(&x));
    }

    #[test]
    fn lambda_sigma_is_multiplicative(x in arb_object(2), y in arb_object(2)) {
        let lhs = lambda_sigma(&x.direct_sum(&y), 3, B).unwrap();
        let rhs = lambda_sigma(&x, 3, B).unwrap().mul_series(&lambda_sigma(&y, 3, B).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn permutation_traces_factor_over_cycles(f in arb_endo(3), s in (1usize..=4).prop_flat_map(arb_permutation)) {
        let lhs = total(&tensor_power_trace(&f, &s, B).unwrap());
        let rhs = s.cycles().iter().fold(Rational::one(), |acc, c| {
            acc * categorical_trace(&f.pow(c.len() as u32).unwrap()).unwrap()
        });
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cycle_class_average_gives_power_trace(f in arb_endo(3), m in 1usize..=4) {
        let cyc = Partition::row(m);
        let t = class_function_trace(&f, m, |mu| if *mu == cyc { rat(m as i64, 1) } else { Rational::zero() }, B).unwrap();
        prop_assert_eq!(total(&t), categorical_trace(&f.pow(m as u32).unwrap()).unwrap());
    }

    #[test]
    fn h_then_g_is_identity(pi in (0..7usize).prop_map(|i| partitions_up_to(3)[i].clone()), u in arb_class()) {
        let a = RDElement::basis(pi, u);
        prop_assert_eq!(h_map(&a).unwrap().g_map().unwrap(), a);
    }
}

#[test]
fn characteristic_series_is_a_class_function() {
    for name in ["perm:sym3", "signperm:sym3", "sign:sym3", "reg:cyc4"] {
        let x = GObject::preset(name).unwrap();
        let els = x.group().elements();
        for g in els {
            let base = char_series(&x, g, 4, B).unwrap();
            for h in els {
                let conj = h.compose(g).compose(&h.inverse());
                assert_eq!(char_series(&x, &conj, 4, B).unwrap(), base, "{name}");
            }
        }
    }
}

#[test]
fn projector_rank_equals_trace() {
    for pi in partitions_up_to(4).into_iter().filter(|p| !p.is_empty()) {
        let m = isotypic_projector(&pi).unwrap().left_regular_matrix();
        assert!(m.is_idempotent());
        assert_eq!(Rational::from_integer(m.rank().into()), m.trace());
    }
}
