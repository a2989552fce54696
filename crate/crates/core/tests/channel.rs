use grand::channel::{
    frame_rng, noise_variance, run_paired, run_point, run_sweep, simulate_frame, transmit_frame,
    write_csv, ChannelConfig, FrameOutcome, SnrStats, StopRule, CSV_HEADER,
};
use grand::codes::{bch_code, hamming_code};
use grand::decoders::{DecoderSpec, LgrandParams};
use grand::oracle::ml_decode_bruteforce;
use grand::patterns::sort_reliability;

fn sweep_csv(threads: usize) -> String {
    let code = bch_code(4, 2).unwrap();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap();
    let stats = pool
        .install(|| {
            run_sweep(
                &code,
                &DecoderSpec::Orbgrand {
                    lw_max: 40,
                    hw_cap: 4,
                },
                &[1.0, 2.0, 3.0],
                17,
                &StopRule::new(30, 5000).unwrap(),
            )
        })
        .unwrap();
    let mut out = Vec::new();
    write_csv(&mut out, &stats).unwrap();
    String::from_utf8(out).unwrap()
}

#[test]
fn sweep_is_deterministic_across_worker_counts() {
    let one = sweep_csv(1);
    assert_eq!(one, sweep_csv(1));
    assert_eq!(one, sweep_csv(3));
    assert!(one.starts_with(CSV_HEADER));
    assert_eq!(one.lines().count(), 4);
}

#[test]
fn frames_are_reproducible_individually() {
    let code = hamming_code(4).unwrap();
    let cfg = ChannelConfig::for_code(&code, 2.0, 5).unwrap();
    let a = transmit_frame(&code, &cfg, &mut frame_rng(5, 42)).unwrap();
    let b = transmit_frame(&code, &cfg, &mut frame_rng(5, 42)).unwrap();
    let c = transmit_frame(&code, &cfg, &mut frame_rng(5, 43)).unwrap();
    assert_eq!(a.llr, b.llr);
    assert_ne!(a.llr, c.llr);
    assert_eq!(code.encode(&a.message).unwrap(), a.codeword);
}

#[test]
fn llr_statistics_match_the_channel() {
    let code = hamming_code(4).unwrap();
    let cfg = ChannelConfig::for_code(&code, 3.0, 8).unwrap();
    let sigma2 = noise_variance(3.0, 11.0 / 15.0);
    assert!((cfg.noise_variance() - sigma2).abs() < 1e-15);
    // llr = 2r/σ², r = x + w, so (σ²/2)·llr − x is the noise sample
    let mut sum = 0.0;
    let mut sq = 0.0;
    let mut count = 0.0;
    for i in 0..4000 {
        let f = transmit_frame(&code, &cfg, &mut frame_rng(8, i)).unwrap();
        for (j, &l) in f.llr.iter().enumerate() {
            let x = if f.codeword.get(j) { -1.0 } else { 1.0 };
            let w = sigma2 / 2.0 * l - x;
            sum += w;
            sq += w * w;
            count += 1.0;
        }
    }
    let mean = sum / count;
    let var = sq / count - mean * mean;
    assert!(mean.abs() < 0.01, "mean {mean}");
    assert!(
        (var / sigma2 - 1.0).abs() < 0.03,
        "variance {var} vs {sigma2}"
    );
}

#[test]
fn noiseless_frames_have_the_codeword_as_hard_decision() {
    let code = bch_code(7, 2).unwrap();
    let cfg = ChannelConfig::for_code(&code, 0.0, 2).unwrap().noiseless();
    let f = transmit_frame(&code, &cfg, &mut frame_rng(2, 0)).unwrap();
    assert_eq!(*sort_reliability(&f.llr).unwrap().hard(), f.codeword);
}

#[test]
fn sgrand_fer_equals_ml_fer_on_shared_frames() {
    let code = hamming_code(4).unwrap();
    let cfg = ChannelConfig::for_code(&code, 3.0, 13).unwrap();
    let sgrand = DecoderSpec::Sgrand { budget: None };
    let (mut sg_errors, mut ml_errors) = (0, 0);
    for i in 0..2000 {
        let f = transmit_frame(&code, &cfg, &mut frame_rng(13, i)).unwrap();
        let ord = sort_reliability(&f.llr).unwrap();
        let sg = sgrand.decode(&ord, &code).unwrap();
        let ml = ml_decode_bruteforce(&f.llr, &code).unwrap();
        assert_eq!(sg.codeword, ml, "frame {i}");
        sg_errors += u32::from(sg.codeword != f.codeword);
        ml_errors += u32::from(ml != f.codeword);
    }
    assert_eq!(sg_errors, ml_errors);
    assert!(sg_errors > 0);
}

#[test]
fn stop_rule_bounds_the_run() {
    let code = hamming_code(3).unwrap();
    let d = DecoderSpec::Orbgrand {
        lw_max: 28,
        hw_cap: 7,
    };
    let cfg = ChannelConfig::for_code(&code, 0.0, 1).unwrap();
    let s = run_point(&code, &d, &cfg, &StopRule::new(25, 100_000).unwrap()).unwrap();
    assert_eq!(s.frame_errors, 25);
    let s = run_point(&code, &d, &cfg, &StopRule::new(1_000_000, 700).unwrap()).unwrap();
    assert_eq!(s.frames, 700);
    assert!(StopRule::new(0, 10).is_err());
    assert!(run_sweep(&code, &d, &[], 1, &StopRule::default()).is_err());
}

#[test]
fn paired_run_counts_discordant_frames() {
    let code = hamming_code(4).unwrap();
    let decoders = [
        DecoderSpec::Grandab { ab: 1 },
        DecoderSpec::Sgrand { budget: None },
        DecoderSpec::Lgrand(LgrandParams::new(60, 6, 10)),
    ];
    let cfg = ChannelConfig::for_code(&code, 2.0, 3).unwrap();
    let stats = run_paired(&code, &decoders, &cfg, &StopRule::new(40, 50_000).unwrap()).unwrap();
    assert!(stats.arms.iter().all(|a| a.frames == stats.arms[0].frames));
    assert!(stats
        .arms
        .iter()
        .all(|a| a.frame_errors >= 40 || a.frames == 50_000));
    for a in 0..3 {
        assert_eq!(stats.discordant[a][a], 0);
        for b in 0..3 {
            let diff = stats.arms[b].frame_errors as i64 - stats.arms[a].frame_errors as i64;
            assert_eq!(
                stats.discordant[a][b] as i64 - stats.discordant[b][a] as i64,
                diff
            );
        }
    }
    assert!(stats.mcnemar_z(1, 0) > 0.0);
}

#[test]
fn simulate_frame_reports_each_decoder() {
    let code = hamming_code(3).unwrap();
    let cfg = ChannelConfig::for_code(&code, 4.0, 6).unwrap();
    let out = simulate_frame(
        &code,
        &[
            DecoderSpec::Grandab { ab: 0 },
            DecoderSpec::Sgrand { budget: None },
        ],
        &cfg,
        0,
    )
    .unwrap();
    assert_eq!(out.len(), 2);
    assert!(out.iter().all(|o| o.bits == 4));
    assert_eq!(out[0].queries, 1);
}

#[test]
fn stats_merge_and_ratios() {
    let mut a = SnrStats::new(2.0);
    a.record(&FrameOutcome {
        frame_error: true,
        bit_errors: 3,
        bits: 10,
        queries: 7,
        list_size: 2,
        abandoned: false,
    });
    let mut b = SnrStats::new(2.0);
    b.record(&FrameOutcome {
        frame_error: false,
        bit_errors: 0,
        bits: 10,
        queries: 1,
        list_size: 1,
        abandoned: false,
    });
    a.merge(&b);
    assert_eq!((a.frames, a.frame_errors, a.bits), (2, 1, 20));
    assert_eq!(a.fer(), 0.5);
    assert_eq!(a.ber(), 0.15);
    assert_eq!(a.avg_queries(), 4.0);
    assert_eq!(a.avg_list_size(), 1.5);
    assert_eq!(SnrStats::new(1.0).fer(), 0.0);
}
