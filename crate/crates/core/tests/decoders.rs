use grand::channel::{frame_rng, transmit_frame, ChannelConfig};
use grand::codes::{bch_code, crc_code, hamming_code, CrcPolynomial};
use grand::decoders::{
    decode_grandab, decode_lgrand, decode_lgrand_detailed, decode_orbgrand, decode_sgrand,
    lgrand_search, likelihood_select, CandidateList, DecodeState, DecoderSpec, Hit, LgrandParams,
    SearchObserver,
};
use grand::oracle::ml_decode_bruteforce;
use grand::patterns::{grandab_pattern_count, sort_reliability};
use grand::{BitMatrix, Error, LinearCode};
use proptest::prelude::*;

fn crc128_112() -> LinearCode {
    crc_code(128, &CrcPolynomial::parse_hex("0x1021", None).unwrap()).unwrap()
}

#[test]
fn hard_decision_codeword_needs_one_query() {
    let code = crc128_112();
    let cfg = ChannelConfig::for_code(&code, 5.0, 3).unwrap().noiseless();
    let frame = transmit_frame(&code, &cfg, &mut frame_rng(3, 0)).unwrap();
    let ord = sort_reliability(&frame.llr).unwrap();
    for spec in [
        DecoderSpec::Grandab { ab: 2 },
        DecoderSpec::Orbgrand {
            lw_max: 96,
            hw_cap: 8,
        },
        DecoderSpec::Sgrand { budget: None },
        DecoderSpec::Lgrand(LgrandParams::new(96, 8, 15)),
    ] {
        let r = spec.decode(&ord, &code).unwrap();
        assert!(!r.abandoned);
        assert_eq!(r.codeword, frame.codeword, "{spec}");
        assert_eq!(r.message, frame.message, "{spec}");
        assert_eq!(r.pattern.hamming_weight(), 0);
        if !matches!(spec, DecoderSpec::Lgrand(_)) {
            assert_eq!(r.queries, 1, "{spec}");
        }
    }
}

#[test]
fn systematic_message_extraction_on_crc() {
    let code = crc128_112();
    for index in 0..50 {
        let cfg = ChannelConfig::for_code(&code, 6.0, 11).unwrap();
        let frame = transmit_frame(&code, &cfg, &mut frame_rng(11, index)).unwrap();
        let ord = sort_reliability(&frame.llr).unwrap();
        let r = decode_sgrand(&ord, &code, Some(1 << 20)).unwrap();
        if !r.abandoned {
            assert_eq!(r.message.to_bits(), r.codeword.to_bits()[..112].to_vec());
        }
    }
}

#[test]
fn grandab_abandons_after_exact_query_count() {
    // received word at distance 3 from both repetition codewords' nearest
    let code =
        LinearCode::from_generator("rep7", BitMatrix::from_rows(&[[1u8; 7]]).unwrap()).unwrap();
    let llr = [-1.0, -1.1, -1.2, 1.3, 1.4, 1.5, 1.6];
    let ord = sort_reliability(&llr).unwrap();
    let r = decode_grandab(&ord, &code, 2).unwrap();
    assert!(r.abandoned);
    assert_eq!(r.queries as u128, 1 + grandab_pattern_count(7, 2));
    assert_eq!(r.codeword, *ord.hard());
    assert_eq!(r.list_size, 0);
    assert!(r.soft_weight.is_infinite());
    let r = decode_grandab(&ord, &code, 3).unwrap();
    assert!(!r.abandoned);
    assert!(r.codeword.is_zero());
}

#[test]
fn orbgrand_abandons_within_budget() {
    let code =
        LinearCode::from_generator("rep7", BitMatrix::from_rows(&[[1u8; 7]]).unwrap()).unwrap();
    let llr = [-1.0, -1.1, -1.2, 1.3, 1.4, 1.5, 1.6];
    let ord = sort_reliability(&llr).unwrap();
    // the cheapest codeword flip has logistic weight 1+2+3 = 6
    assert!(decode_orbgrand(&ord, &code, 5, 7).unwrap().abandoned);
    let r = decode_orbgrand(&ord, &code, 6, 7).unwrap();
    assert!(!r.abandoned);
    assert_eq!(r.pattern.logistic_weight, 6);
    assert!(decode_orbgrand(&ord, &code, 28, 2).unwrap().abandoned);
}

#[test]
fn lgrand_with_zero_delta_and_single_hit_equals_orbgrand() {
    let code = hamming_code(4).unwrap();
    let mut compared = 0;
    for index in 0..400 {
        let cfg = ChannelConfig::for_code(&code, 2.0, 4).unwrap();
        let frame = transmit_frame(&code, &cfg, &mut frame_rng(4, index)).unwrap();
        let ord = sort_reliability(&frame.llr).unwrap();
        let orb = decode_orbgrand(&ord, &code, 60, 6).unwrap();
        let out = decode_lgrand_detailed(&ord, &code, &LgrandParams::new(60, 6, 0)).unwrap();
        if out.list.len() == 1 {
            compared += 1;
            assert_eq!(out.result.codeword, orb.codeword);
            assert_eq!(out.list.entries()[0].query_index, orb.queries);
        }
        assert!(out.result.queries >= orb.queries);
    }
    assert!(compared > 100);
}

#[test]
fn per_frame_soft_weight_ordering_and_query_cost() {
    let code = crc128_112();
    let params = LgrandParams::new(96, 8, 15);
    let mut strict = 0;
    for index in 0..300 {
        let cfg = ChannelConfig::for_code(&code, 4.0, 21).unwrap();
        let frame = transmit_frame(&code, &cfg, &mut frame_rng(21, index)).unwrap();
        let ord = sort_reliability(&frame.llr).unwrap();
        let orb = decode_orbgrand(&ord, &code, 96, 8).unwrap();
        let lg = decode_lgrand(&ord, &code, &params).unwrap();
        let sg = decode_sgrand(&ord, &code, None).unwrap();
        assert!(!sg.abandoned);
        assert_eq!(orb.abandoned, lg.abandoned);
        assert!(lg.queries >= orb.queries);
        assert!(sg.soft_weight <= lg.soft_weight);
        assert!(lg.soft_weight <= orb.soft_weight);
        if lg.soft_weight < orb.soft_weight {
            strict += 1;
        }
    }
    assert!(
        strict > 0,
        "no frame where the list improved on the first hit"
    );
}

#[test]
fn sgrand_agrees_with_bruteforce_ml() {
    let code = bch_code(4, 2).unwrap();
    for index in 0..300 {
        let cfg = ChannelConfig::for_code(&code, 1.0, 9).unwrap();
        let frame = transmit_frame(&code, &cfg, &mut frame_rng(9, index)).unwrap();
        let ord = sort_reliability(&frame.llr).unwrap();
        let sg = decode_sgrand(&ord, &code, None).unwrap();
        assert_eq!(
            sg.codeword,
            ml_decode_bruteforce(&frame.llr, &code).unwrap()
        );
    }
}

#[test]
fn decode_state_is_set_only_at_first_hit() {
    #[derive(Default)]
    struct Watch {
        states: Vec<DecodeState>,
        hits: Vec<Hit>,
    }
    impl SearchObserver for Watch {
        fn on_query(&mut self, _: usize, _: &[usize], s: &DecodeState) {
            self.states.push(*s);
        }
        fn on_hit(&mut self, h: &Hit, _: &DecodeState) {
            self.hits.push(h.clone());
        }
    }
    // accept every rank set containing rank 3 or rank 5
    let mut watch = Watch::default();
    let params = LgrandParams::new(40, 4, 3);
    let out = lgrand_search(
        10,
        &params,
        |r| r.contains(&3) || r.contains(&5),
        &mut watch,
    )
    .unwrap();
    assert_eq!(watch.hits[0].ranks, vec![3]);
    assert_eq!(out.state.first_hit_lw, Some(3));
    assert_eq!(out.state.lambda, 6);
    assert_eq!(out.state.delta_cap, 1);
    let changes = watch.states.windows(2).filter(|w| w[0] != w[1]).count();
    assert_eq!(changes, 1);
    assert_eq!(
        out.hits.iter().map(|h| h.ranks.clone()).collect::<Vec<_>>(),
        vec![vec![3], vec![5]]
    );
    assert_eq!(out.queries, 7);
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(matches!(
        LgrandParams::new(8257, 8, 1).validate(128),
        Err(Error::InvalidParameter(_))
    ));
    assert!(matches!(
        LgrandParams::new(96, 0, 1).validate(128),
        Err(Error::InvalidParameter(_))
    ));
    assert!(LgrandParams::new(8256, 128, 0).validate(128).is_ok());
    assert!(DecoderSpec::Sgrand { budget: Some(0) }.validate(7).is_err());
    assert!(DecoderSpec::Grandab { ab: 8 }.validate(7).is_err());
    let code = hamming_code(3).unwrap();
    let ord = sort_reliability(&[1.0; 5]).unwrap();
    assert!(matches!(
        decode_sgrand(&ord, &code, None),
        Err(Error::Shape(_))
    ));
    assert!(matches!(
        likelihood_select(&CandidateList::new()),
        Err(Error::EmptyList)
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn orbgrand_on_hamming_returns_a_codeword(llr in proptest::collection::vec(prop_oneof![-4.0..-0.01f64, 0.01..4.0f64], 7)) {
        let code = hamming_code(3).unwrap();
        let ord = sort_reliability(&llr).unwrap();
        let r = decode_orbgrand(&ord, &code, 28, 7).unwrap();
        prop_assert!(!r.abandoned);
        prop_assert!(code.is_codeword(&r.codeword).unwrap());
        prop_assert_eq!(code.encode(&r.message).unwrap(), r.codeword.clone());
        prop_assert!(r.queries >= 1 && r.queries <= 128);
        prop_assert_eq!(r.codeword.xor(ord.hard()).weight(), r.pattern.hamming_weight());
    }

    #[test]
    fn lgrand_list_entries_are_codewords(llr in proptest::collection::vec(prop_oneof![-4.0..-0.01f64, 0.01..4.0f64], 15), delta in 0usize..20) {
        let code = hamming_code(4).unwrap();
        let ord = sort_reliability(&llr).unwrap();
        let out = decode_lgrand_detailed(&ord, &code, &LgrandParams::new(120, 15, delta)).unwrap();
        prop_assert!(!out.list.is_empty());
        let best = likelihood_select(&out.list).unwrap();
        for c in out.list.entries() {
            prop_assert!(code.is_codeword(&c.codeword).unwrap());
            prop_assert!(c.soft_weight >= best.soft_weight);
        }
        prop_assert_eq!(&out.result.codeword, &best.codeword);
        let first = out.state.first_hit_lw.unwrap();
        prop_assert_eq!(out.state.lambda, (first + delta).min(120));
    }
}
