//! GRANDAB, ORBGRAND, SGRAND, and List-GRAND decoding.
//!
//! Every decoder walks its pattern order, testing `H·(ŷ ⊕ e)ᵀ = 0` for each
//! pattern `e` against the hard decision `ŷ`. Each such test is one query,
//! the zero pattern included. A decoder that runs out of patterns without a
//! hit reports `abandoned = true`; that is a normal outcome, not an error.

use std::fmt;

use crate::code::{LinearCode, ParityColumns};
use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::patterns::{
    max_logistic_weight, sgrand_stream, DistinctPartitions, GrandabStream, ReliabilityOrder,
    TestErrorPattern,
};

/// Outcome of decoding one frame.
#[derive(Clone, Debug)]
pub struct DecodeResult {
    /// `û = ĉ·G⁻¹`. For an abandoned frame this is `ŷ·G⁻¹`, which carries no
    /// guarantee.
    pub message: BitVector,
    /// `ĉ`. For an abandoned frame, the hard decision `ŷ`.
    pub codeword: BitVector,
    /// Winning pattern; the zero pattern when abandoned.
    pub pattern: TestErrorPattern,
    pub queries: u64,
    /// Candidate-list size (1 for single-hit decoders, 0 when abandoned).
    pub list_size: usize,
    pub abandoned: bool,
    /// Soft weight of the winning pattern; `+∞` when abandoned.
    pub soft_weight: f64,
}

impl DecodeResult {
    fn found(
        code: &LinearCode,
        ord: &ReliabilityOrder,
        pattern: TestErrorPattern,
        queries: u64,
        list_size: usize,
    ) -> Result<Self> {
        let codeword = pattern.apply(ord.hard());
        let message = code.recover_message(&codeword)?;
        Ok(Self {
            message,
            codeword,
            soft_weight: pattern.soft_weight,
            pattern,
            queries,
            list_size,
            abandoned: false,
        })
    }

    fn abandoned(code: &LinearCode, ord: &ReliabilityOrder, queries: u64) -> Result<Self> {
        Ok(Self {
            message: code.right_inverse().left_mul(ord.hard())?,
            codeword: ord.hard().clone(),
            pattern: TestErrorPattern::zero(),
            queries,
            list_size: 0,
            abandoned: true,
            soft_weight: f64::INFINITY,
        })
    }
}

/// Syndrome-based codebook membership test for `ŷ ⊕ e`.
struct Membership<'a> {
    cols: &'a ParityColumns,
    base: Vec<u64>,
    acc: Vec<u64>,
    queries: u64,
}

impl<'a> Membership<'a> {
    fn new(code: &'a LinearCode, ord: &ReliabilityOrder) -> Result<Self> {
        if ord.n() != code.n() {
            return Err(Error::Shape(format!(
                "{} LLRs for a code of length {}",
                ord.n(),
                code.n()
            )));
        }
        let cols = code.parity_columns();
        let base = cols.syndrome_words(ord.hard());
        Ok(Self {
            cols,
            acc: vec![0; cols.stride()],
            base,
            queries: 0,
        })
    }

    #[inline]
    fn test(&mut self, positions: impl Iterator<Item = usize>) -> bool {
        self.queries += 1;
        self.acc.copy_from_slice(&self.base);
        for p in positions {
            for (a, c) in self.acc.iter_mut().zip(self.cols.column(p)) {
                *a ^= *c;
            }
        }
        self.acc.iter().all(|&w| w == 0)
    }
}

/// GRANDAB: hard-decision patterns in ascending Hamming weight up to `ab`.
pub fn decode_grandab(
    ord: &ReliabilityOrder,
    code: &LinearCode,
    ab: usize,
) -> Result<DecodeResult> {
    let mut member = Membership::new(code, ord)?;
    let mut stream = GrandabStream::ranked(ord, ab)?;
    while let Some(support) = stream.advance() {
        if member.test(support.iter().copied()) {
            let e = TestErrorPattern::from_support(support.to_vec()).annotate(ord);
            return DecodeResult::found(code, ord, e, member.queries, 1);
        }
    }
    DecodeResult::abandoned(code, ord, member.queries)
}

/// ORBGRAND: logistic-weight order up to `lw_max`, at most `hw_cap` flips.
pub fn decode_orbgrand(
    ord: &ReliabilityOrder,
    code: &LinearCode,
    lw_max: usize,
    hw_cap: usize,
) -> Result<DecodeResult> {
    let mut member = Membership::new(code, ord)?;
    let ind = ord.ind();
    let hit = orbgrand_search(ord.n(), lw_max, hw_cap, |ranks| {
        member.test(ranks.iter().map(|&r| ind[r - 1]))
    })?;
    match hit {
        Some(h) => DecodeResult::found(
            code,
            ord,
            ord.pattern_from_ranks(&h.ranks),
            member.queries,
            1,
        ),
        None => DecodeResult::abandoned(code, ord, member.queries),
    }
}

/// SGRAND: exact maximum-likelihood pattern order; `budget = None` never abandons.
pub fn decode_sgrand(
    ord: &ReliabilityOrder,
    code: &LinearCode,
    budget: Option<u64>,
) -> Result<DecodeResult> {
    let mut member = Membership::new(code, ord)?;
    for e in sgrand_stream(ord, budget.unwrap_or(u64::MAX)) {
        if member.test(e.support.iter().copied()) {
            return DecodeResult::found(code, ord, e, member.queries, 1);
        }
    }
    DecodeResult::abandoned(code, ord, member.queries)
}

/// List-GRAND parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LgrandParams {
    pub lw_max: usize,
    pub hw_max: usize,
    /// Extra logistic weights explored after the first hit.
    pub delta: usize,
}

impl LgrandParams {
    pub fn new(lw_max: usize, hw_max: usize, delta: usize) -> Self {
        Self {
            lw_max,
            hw_max,
            delta,
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let bound = max_logistic_weight(n);
        if self.lw_max > bound {
            return Err(Error::InvalidParameter(format!(
                "LW_max = {} exceeds n(n+1)/2 = {bound}",
                self.lw_max
            )));
        }
        if self.hw_max == 0 || self.hw_max > n {
            return Err(Error::InvalidParameter(format!(
                "HW_max = {} outside 1..={n}",
                self.hw_max
            )));
        }
        Ok(())
    }
}

/// Search budget of a List-GRAND run: `Λ` (last logistic weight to visit) and
/// `Δ` (Hamming-weight cap). Both are set once, at the first hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecodeState {
    pub lambda: usize,
    pub delta_cap: usize,
    pub first_hit_lw: Option<usize>,
}

/// A codebook hit found by a logistic-weight search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hit {
    /// 1-based reliability ranks of the flipped positions, descending.
    pub ranks: Vec<usize>,
    pub logistic_weight: usize,
    /// 1-based index of the query that found it.
    pub query_index: u64,
}

/// Hooks into a List-GRAND search, for tracing and tests.
pub trait SearchObserver {
    fn on_query(&mut self, _logistic_weight: usize, _ranks: &[usize], _state: &DecodeState) {}
    fn on_hit(&mut self, _hit: &Hit, _state: &DecodeState) {}
}

impl SearchObserver for () {}

#[derive(Clone, Debug)]
pub struct ListSearch {
    pub hits: Vec<Hit>,
    pub queries: u64,
    pub state: DecodeState,
}

/// ORBGRAND search over partitions: stops at the first rank set accepted by
/// `is_member`.
pub fn orbgrand_search<F>(
    n: usize,
    lw_max: usize,
    hw_cap: usize,
    mut is_member: F,
) -> Result<Option<Hit>>
where
    F: FnMut(&[usize]) -> bool,
{
    let bound = max_logistic_weight(n);
    if lw_max > bound {
        return Err(Error::InvalidParameter(format!(
            "LW_max = {lw_max} exceeds n(n+1)/2 = {bound}"
        )));
    }
    let mut queries = 0;
    for weight in 0..=lw_max {
        let mut parts = DistinctPartitions::new(weight, n, hw_cap);
        while let Some(ranks) = parts.advance() {
            queries += 1;
            if is_member(ranks) {
                return Ok(Some(Hit {
                    ranks: ranks.to_vec(),
                    logistic_weight: weight,
                    query_index: queries,
                }));
            }
        }
    }
    Ok(None)
}

/// The List-GRAND search loop over rank sets.
///
/// For `i = 0, 1, …, Λ` it tests every distinct partition of `i` with at most
/// `Δ` parts. Every accepted rank set is recorded. On the first one only,
/// `Λ ← min(i + δ, n(n+1)/2)` and `Δ ← its Hamming weight`; a lowered `Δ`
/// applies to the rest of weight `i` as well.
pub fn lgrand_search<F, O>(
    n: usize,
    params: &LgrandParams,
    mut is_member: F,
    observer: &mut O,
) -> Result<ListSearch>
where
    F: FnMut(&[usize]) -> bool,
    O: SearchObserver + ?Sized,
{
    params.validate(n)?;
    let bound = max_logistic_weight(n);
    let mut state = DecodeState {
        lambda: params.lw_max,
        delta_cap: params.hw_max,
        first_hit_lw: None,
    };
    let mut hits = Vec::new();
    let mut queries = 0u64;
    let mut weight = 0;
    while weight <= state.lambda {
        let mut parts = DistinctPartitions::new(weight, n, state.delta_cap);
        while let Some(ranks) = parts.advance() {
            if ranks.len() > state.delta_cap {
                continue;
            }
            queries += 1;
            observer.on_query(weight, ranks, &state);
            if is_member(ranks) {
                if state.first_hit_lw.is_none() {
                    state.first_hit_lw = Some(weight);
                    state.lambda = (weight + params.delta).min(bound);
                    state.delta_cap = ranks.len();
                }
                let hit = Hit {
                    ranks: ranks.to_vec(),
                    logistic_weight: weight,
                    query_index: queries,
                };
                observer.on_hit(&hit, &state);
                hits.push(hit);
            }
        }
        weight += 1;
    }
    Ok(ListSearch {
        hits,
        queries,
        state,
    })
}

/// A codeword collected by List-GRAND.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub codeword: BitVector,
    pub pattern: TestErrorPattern,
    pub soft_weight: f64,
    pub query_index: u64,
}

/// Candidates in the order they were found.
#[derive(Clone, Debug, Default)]
pub struct CandidateList {
    entries: Vec<Candidate>,
}

impl CandidateList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: Candidate) {
        self.entries.push(c);
    }

    pub fn entries(&self) -> &[Candidate] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// The most likely candidate: smallest soft weight, earliest found on ties.
pub fn likelihood_select(list: &CandidateList) -> Result<&Candidate> {
    let mut best: Option<&Candidate> = None;
    for c in list.entries() {
        if best.is_none_or(|b| c.soft_weight < b.soft_weight) {
            best = Some(c);
        }
    }
    best.ok_or(Error::EmptyList)
}

/// `ĉ·G⁻¹`, refusing non-codewords.
pub fn recover_message(c: &BitVector, code: &LinearCode) -> Result<BitVector> {
    code.recover_message(c)
}

/// Full List-GRAND output: the decision plus the list and final search state.
#[derive(Clone, Debug)]
pub struct LgrandOutcome {
    pub result: DecodeResult,
    pub list: CandidateList,
    pub state: DecodeState,
}

pub fn decode_lgrand_detailed(
    ord: &ReliabilityOrder,
    code: &LinearCode,
    params: &LgrandParams,
) -> Result<LgrandOutcome> {
    let mut member = Membership::new(code, ord)?;
    let ind = ord.ind();
    let search = lgrand_search(
        ord.n(),
        params,
        |ranks| member.test(ranks.iter().map(|&r| ind[r - 1])),
        &mut (),
    )?;
    let mut list = CandidateList::new();
    for hit in &search.hits {
        let pattern = ord.pattern_from_ranks(&hit.ranks);
        list.push(Candidate {
            codeword: pattern.apply(ord.hard()),
            soft_weight: pattern.soft_weight,
            pattern,
            query_index: hit.query_index,
        });
    }
    let result = match likelihood_select(&list) {
        Ok(best) => {
            DecodeResult::found(code, ord, best.pattern.clone(), search.queries, list.len())?
        }
        Err(_) => DecodeResult::abandoned(code, ord, search.queries)?,
    };
    Ok(LgrandOutcome {
        result,
        list,
        state: search.state,
    })
}

/// List-GRAND decision.
pub fn decode_lgrand(
    ord: &ReliabilityOrder,
    code: &LinearCode,
    params: &LgrandParams,
) -> Result<DecodeResult> {
    Ok(decode_lgrand_detailed(ord, code, params)?.result)
}

/// A decoder and its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecoderSpec {
    Grandab { ab: usize },
    Orbgrand { lw_max: usize, hw_cap: usize },
    Sgrand { budget: Option<u64> },
    Lgrand(LgrandParams),
}

impl DecoderSpec {
    pub fn validate(&self, n: usize) -> Result<()> {
        match *self {
            DecoderSpec::Grandab { ab } if ab > n => Err(Error::InvalidParameter(format!(
                "AB = {ab} exceeds n = {n}"
            ))),
            DecoderSpec::Orbgrand { lw_max, .. } if lw_max > max_logistic_weight(n) => {
                Err(Error::InvalidParameter(format!(
                    "LW_max = {lw_max} exceeds n(n+1)/2 = {}",
                    max_logistic_weight(n)
                )))
            }
            DecoderSpec::Sgrand { budget: Some(0) } => Err(Error::InvalidParameter(
                "SGRAND budget must be at least 1".into(),
            )),
            DecoderSpec::Lgrand(p) => p.validate(n),
            _ => Ok(()),
        }
    }

    pub fn decode(&self, ord: &ReliabilityOrder, code: &LinearCode) -> Result<DecodeResult> {
        match self {
            DecoderSpec::Grandab { ab } => decode_grandab(ord, code, *ab),
            DecoderSpec::Orbgrand { lw_max, hw_cap } => {
                decode_orbgrand(ord, code, *lw_max, *hw_cap)
            }
            DecoderSpec::Sgrand { budget } => decode_sgrand(ord, code, *budget),
            DecoderSpec::Lgrand(p) => decode_lgrand(ord, code, p),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            DecoderSpec::Grandab { .. } => "GRANDAB",
            DecoderSpec::Orbgrand { .. } => "ORBGRAND",
            DecoderSpec::Sgrand { .. } => "SGRAND",
            DecoderSpec::Lgrand(_) => "LGRAND",
        }
    }
}

impl fmt::Display for DecoderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecoderSpec::Grandab { ab } => write!(f, "GRANDAB(AB={ab})"),
            DecoderSpec::Orbgrand { lw_max, hw_cap } => {
                write!(f, "ORBGRAND(LW_max={lw_max},HW_max={hw_cap})")
            }
            DecoderSpec::Sgrand { budget: None } => write!(f, "SGRAND"),
            DecoderSpec::Sgrand { budget: Some(b) } => write!(f, "SGRAND(budget={b})"),
            DecoderSpec::Lgrand(p) => write!(
                f,
                "LGRAND(LW_max={},HW_max={},delta={})",
                p.lw_max, p.hw_max, p.delta
            ),
        }
    }
}
