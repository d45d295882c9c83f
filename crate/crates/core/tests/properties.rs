use proptest::prelude::*;

use tbchar_core::charvariety::eta;
use tbchar_core::oracle;
use tbchar_core::polyring::{Polynomial, Var, VariableSet};
use tbchar_core::skeinreduce::SkeinQuotient;
use tbchar_core::traceengine::{
    evaluate_word, trace_of_word, AlgebraElement, Generator, Letter, Sign, Word,
};
use tbchar_core::TwoBridgeParam;

fn poly(max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        ((0..=max_exp, 0..=max_exp, 0..=max_exp), -20i64..=20),
        0..max_terms,
    )
    .prop_map(|ts| {
        Polynomial::from_terms(
            VariableSet::Barred,
            ts.into_iter().map(|((a, b, c), k)| ([a, b, c], k)),
        )
    })
}

fn unit_leading_in_y() -> impl Strategy<Value = Polynomial> {
    (poly(2, 5), 0u32..4, any::<bool>()).prop_map(|(low, d, neg)| {
        // keep only terms of y-degree < d, then add ±y^d
        let lower = Polynomial::from_terms(
            VariableSet::Barred,
            low.terms()
                .filter(|(m, _)| m.exponent(Var::Y) < d)
                .map(|(m, c)| (m.0, c.clone())),
        );
        let lead =
            Polynomial::from_terms(VariableSet::Barred, [([0, 0, d], if neg { -1 } else { 1 })]);
        &lower + &lead
    })
}

fn letter() -> impl Strategy<Value = Letter> {
    (any::<bool>(), any::<bool>()).prop_map(|(first, plus)| {
        Letter::new(
            if first {
                Generator::First
            } else {
                Generator::Second
            },
            if plus { Sign::Plus } else { Sign::Minus },
        )
    })
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(letter(), 0..=max_len).prop_map(Word::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly(3, 6), g in poly(3, 6), h in poly(3, 6)) {
        let one = Polynomial::one(VariableSet::Barred);
        let zero = Polynomial::zero(VariableSet::Barred);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &one, f.clone());
        prop_assert_eq!(&f + &zero, f.clone());
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn exact_division_recovers_factor(f in poly(3, 5), g in poly(2, 4)) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).divide_exact(&g).unwrap(), f);
    }

    #[test]
    fn division_in_y_reassembles(f in poly(4, 8), g in unit_leading_in_y()) {
        let (q, r) = f.div_rem_in_y(&g).unwrap();
        prop_assert_eq!(&(&g * &q) + &r, f);
        let dg = g.degree_in(Var::Y).unwrap();
        prop_assert!(r.degree_in(Var::Y).is_none_or(|d| d < dg));
    }

    #[test]
    fn substitution_is_a_homomorphism(f in poly(2, 4), g in poly(2, 4), r in poly(1, 3)) {
        let assign = [Some(r.clone()), None, Some(Polynomial::constant(VariableSet::Barred, -2))];
        let sub = |p: &Polynomial| p.substitute(VariableSet::Barred, &assign).unwrap();
        prop_assert_eq!(sub(&(&f * &g)), &sub(&f) * &sub(&g));
        prop_assert_eq!(sub(&(&f + &g)), &sub(&f) + &sub(&g));
    }

    #[test]
    fn text_round_trip(f in poly(4, 8)) {
        let text = f.to_text();
        prop_assert_eq!(text.parse::<Polynomial>().unwrap(), f.clone());
        prop_assert_eq!(Polynomial::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn trace_conjugation_invariance(w in word(6), g in word(6)) {
        let conj = g.concat(&w).concat(&g.inverse());
        prop_assert_eq!(trace_of_word(&conj), trace_of_word(&w));
    }

    #[test]
    fn trace_inversion_invariance(w in word(8)) {
        prop_assert_eq!(trace_of_word(&w.inverse()), trace_of_word(&w));
    }

    #[test]
    fn fundamental_trace_identity(a in word(6), b in word(6)) {
        let lhs = trace_of_word(&a.concat(&b));
        let rhs = &(&trace_of_word(&a) * &trace_of_word(&b)) - &trace_of_word(&a.concat(&b.inverse()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn word_times_inverse_is_identity(w in word(10)) {
        prop_assert_eq!(evaluate_word(&w.concat(&w.inverse())), AlgebraElement::one());
    }

    #[test]
    fn engine_matches_matrices(w in word(12), seed in any::<u64>()) {
        prop_assert!(oracle::verify_trace_polynomial(&w, 3, seed));
    }

    #[test]
    fn evaluation_is_bracketing_independent(a in word(5), b in word(5), c in word(5)) {
        let (ea, eb, ec) = (evaluate_word(&a), evaluate_word(&b), evaluate_word(&c));
        prop_assert_eq!(ea.mul(&eb).mul(&ec), ea.mul(&eb.mul(&ec)));
        prop_assert_eq!(ea.mul(&eb).mul(&ec), evaluate_word(&a.concat(&b).concat(&c)));
    }
}

fn small_param() -> impl Strategy<Value = TwoBridgeParam> {
    (1i64..=4, 1i64..8).prop_filter_map("valid", |(p, q)| TwoBridgeParam::new(2 * p, q).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_laws(t in small_param(), f in poly(6, 6), g in poly(6, 6), c in -9i64..=9) {
        let quotient = SkeinQuotient::new(t);
        let nf = |p: &Polynomial| quotient.normal_form(p).unwrap();
        let (nf_f, nf_g) = (nf(&f), nf(&g));
        prop_assert!(nf_f.degree_in(Var::Y).is_none_or(|d| d <= t.p()));
        prop_assert_eq!(nf(&nf_f), nf_f.clone());
        prop_assert_eq!(nf(&(&f + &g)), &nf_f + &nf_g);
        prop_assert_eq!(nf(&f.scale(&c.into())), nf_f.scale(&c.into()));
        prop_assert!((&f - &nf_f).divide_exact(&eta(&t)).is_ok());
        prop_assert_eq!(nf(&(&f * &g)), nf(&(&nf_f * &nf_g)));
    }
}
