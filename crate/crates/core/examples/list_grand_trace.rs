//! Traces the List-GRAND search state: a synthetic membership test accepts
//! only the rank set {12, 5, 3} (logistic weight 20, Hamming weight 3), so
//! with δ = 2 the search budget becomes Λ = 22 and the weight cap Δ = 3.

use grand::decoders::{lgrand_search, DecodeState, Hit, LgrandParams, SearchObserver};

#[derive(Default)]
struct Trace {
    queries_per_weight: Vec<u64>,
    max_hw_after_hit: usize,
    hit_seen: bool,
}

impl SearchObserver for Trace {
    fn on_query(&mut self, lw: usize, ranks: &[usize], _state: &DecodeState) {
        if self.queries_per_weight.len() <= lw {
            self.queries_per_weight.resize(lw + 1, 0);
        }
        self.queries_per_weight[lw] += 1;
        if self.hit_seen {
            self.max_hw_after_hit = self.max_hw_after_hit.max(ranks.len());
        }
    }

    fn on_hit(&mut self, hit: &Hit, state: &DecodeState) {
        self.hit_seen = true;
        println!(
            "hit {:?} at LW {} (query {}): Λ = {}, Δ = {}",
            hit.ranks, hit.logistic_weight, hit.query_index, state.lambda, state.delta_cap
        );
    }
}

fn main() -> grand::Result<()> {
    let params = LgrandParams::new(96, 8, 2);
    let mut trace = Trace::default();
    let out = lgrand_search(128, &params, |ranks| ranks == [12, 5, 3], &mut trace)?;
    println!("final state {:?}, {} queries", out.state, out.queries);
    println!(
        "largest Hamming weight queried after the hit: {}",
        trace.max_hw_after_hit
    );
    for (lw, q) in trace.queries_per_weight.iter().enumerate().skip(18) {
        println!("  LW {lw}: {q} queries");
    }
    Ok(())
}
