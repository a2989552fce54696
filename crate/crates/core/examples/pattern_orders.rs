//! The three test-pattern orders on one small LLR vector, plus schedule sizes
//! at the experiment parameters.

use grand::patterns::{
    grandab_pattern_count, grandab_stream, orbgrand_pattern_count, orbgrand_stream, sgrand_stream,
    sort_reliability, TestErrorPattern,
};

fn show(title: &str, patterns: impl Iterator<Item = TestErrorPattern>) {
    println!("{title}");
    for (i, e) in patterns.enumerate() {
        println!(
            "  {i:>2}: flip {:<12} HW {} LW {:>2} soft {:.2}",
            format!("{:?}", e.support),
            e.hamming_weight(),
            e.logistic_weight,
            e.soft_weight
        );
    }
}

fn main() -> grand::Result<()> {
    let llr = [1.9, -0.3, 0.8, -2.4, 0.5, 1.1];
    let ord = sort_reliability(&llr)?;
    println!("llr {llr:?}");
    println!(
        "hard decision {}, least to most reliable {:?}\n",
        ord.hard(),
        ord.ind()
    );

    let mut ab = grandab_stream(llr.len(), 2)?;
    let mut supports = Vec::new();
    while let Some(s) = ab.advance() {
        supports.push(TestErrorPattern::from_support(s.to_vec()).annotate(&ord));
        if supports.len() == 10 {
            break;
        }
    }
    show(
        "GRANDAB (Hamming weight order), first 10:",
        supports.into_iter(),
    );
    show(
        "ORBGRAND (logistic weight order), first 10:",
        orbgrand_stream(&ord, 21, 6)?.take(10),
    );
    show(
        "SGRAND (maximum-likelihood order), first 10:",
        sgrand_stream(&ord, 10),
    );

    println!("\nschedule sizes for n = 128 (non-zero patterns):");
    println!(
        "  GRANDAB AB=3:              {}",
        grandab_pattern_count(128, 3)
    );
    println!(
        "  GRANDAB AB=2:              {}",
        grandab_pattern_count(128, 2)
    );
    for (lw, hw) in [(64, 6), (96, 8), (128, 12), (128, 16)] {
        println!(
            "  ORBGRAND LW_max={lw:<3} HW_max={hw:<2}: {}",
            orbgrand_pattern_count(128, lw, hw) - 1
        );
    }
    Ok(())
}
