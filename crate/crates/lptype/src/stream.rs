//! Multi-pass streaming execution. The stream source only permits sequential
//! scans; per-element weights are recomputed on the fly from the bases of
//! successful iterations, so the resident state is one net sample, the
//! stored bases, and O(1) registers.

use crate::codec;
use crate::core::*;
use crate::meta::{run_net_size, IterationRecord, MetaTrace, Mode};
use crate::problems::ProblemInstance;
use crate::rngutil;
use crate::weights::*;
use rand::Rng;

/// Sequential access harness. Random access is a harness error by
/// construction: elements are only reachable through a pass iterator.
pub struct StreamSource<'a> {
    elements: &'a [Element],
    passes: u64,
}

impl<'a> StreamSource<'a> {
    pub fn new(elements: &'a [Element]) -> Self {
        StreamSource { elements, passes: 0 }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn passes(&self) -> u64 {
        self.passes
    }

    /// Starts one scan over the whole stream, in file order.
    pub fn begin_pass(&mut self) -> impl Iterator<Item = (usize, &'a Element)> + '_ {
        self.passes += 1;
        self.elements.iter().enumerate()
    }
}

#[derive(Debug, Clone, Default)]
pub struct StreamTrace {
    pub passes: u64,
    pub peak_stored_elements: usize,
    pub peak_stored_bases: usize,
    pub peak_bits: u64,
    pub iterations: u64,
}

#[derive(Debug, Clone)]
pub struct StreamRun {
    pub value: SolutionValue,
    pub basis: Basis,
    pub trace: MetaTrace,
    pub stream: StreamTrace,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct StreamOptions {
    /// Fuse the violation scan of iteration t with the sampling for t+1 in a
    /// single pass by keeping reservoirs under both weight hypotheses.
    pub fused: bool,
}

/// Exponents-from-bases view. Semantically the weight of element `i` is
/// recomputed from the stored bases on every pass; this view memoizes the
/// (element, basis) violation tests so each pair is evaluated once per run.
/// It is simulator-side memoization and is not metered as space.
pub struct WeightView {
    exponents: Vec<u32>,
    folded: usize,
}

impl WeightView {
    pub fn new(n: usize) -> Self {
        WeightView { exponents: vec![0; n], folded: 0 }
    }

    fn fold(&mut self, i: usize, e: &Element, bases: &[Basis]) -> Result<u32> {
        for b in &bases[self.folded.min(bases.len())..] {
            if violates(&b.value, e)? {
                self.exponents[i] += 1;
            }
        }
        Ok(self.exponents[i])
    }

    fn finish_pass(&mut self, bases_len: usize) {
        self.folded = bases_len;
    }
}

/// One sequential pass producing `m` independent weighted samples. Uses the
/// (class, rank) addressing that `sample_net` draws from the same histogram,
/// so a streaming run replays the in-memory sampler draw for draw.
pub fn weighted_reservoir_pass<'a, R: Rng>(
    pass: impl Iterator<Item = (usize, &'a Element)>,
    bases: &[Basis],
    view: &mut WeightView,
    hist: &ExpHistogram,
    n: usize,
    r: u32,
    m: usize,
    rng: &mut R,
) -> Result<Vec<usize>> {
    let draws = draw_classes(hist, n, r, m, rng);
    let mut resolver = RankResolver::new(&draws);
    for (i, e) in pass {
        let a = view.fold(i, e, bases)?;
        resolver.feed(i, a);
    }
    view.finish_pass(bases.len());
    Ok(resolver.finish())
}

/// The literal per-slot max-key reservoir: every slot races all elements
/// with keys `u^(1/w)` kept in the log domain. Needs no histogram up front,
/// which is what makes the fused single-pass-per-iteration variant possible.
pub fn reservoir_pass_maxkey<'a, R: Rng>(
    pass: impl Iterator<Item = (usize, &'a Element)>,
    mut weight_exponent: impl FnMut(usize, &Element) -> Result<u32>,
    n: usize,
    r: u32,
    m: usize,
    rng: &mut R,
) -> Result<Vec<usize>> {
    let ln_t = (n as f64).ln() / r as f64;
    // minimize G = ln(-ln u) - a ln t, the stable form of maximizing u^(1/w)
    let mut best: Vec<(f64, usize)> = vec![(f64::INFINITY, usize::MAX); m];
    for (i, e) in pass {
        let a = weight_exponent(i, e)? as f64;
        for slot in best.iter_mut() {
            let u: f64 = rng.gen();
            let g = (-u.ln()).ln() - a * ln_t;
            if g < slot.0 {
                *slot = (g, i);
            }
        }
    }
    Ok(best.into_iter().map(|(_, i)| i).collect())
}

pub fn run_streaming(inst: &ProblemInstance, r: u32, seed: u64) -> Result<StreamRun> {
    run_streaming_opts(inst, r, seed, StreamOptions::default())
}

pub fn run_streaming_opts(
    inst: &ProblemInstance,
    r: u32,
    seed: u64,
    opts: StreamOptions,
) -> Result<StreamRun> {
    if opts.fused {
        run_streaming_fused(inst, r, seed)
    } else {
        run_streaming_two_pass(inst, r, seed)
    }
}

fn bases_bits(bases: &[Basis]) -> u64 {
    bases
        .iter()
        .map(|b| codec::elements_wire_bits(&b.elements) + codec::value_wire_bits(&b.value))
        .sum()
}

fn run_streaming_two_pass(inst: &ProblemInstance, r: u32, seed: u64) -> Result<StreamRun> {
    let def = inst.def();
    let n = inst.len();
    let (eps, m) = run_net_size(inst, r, Mode::LasVegas)?;
    let mut source = StreamSource::new(inst.elements());
    let mut view = WeightView::new(n);
    let mut bases: Vec<Basis> = Vec::new();

    // the weight histogram is known before the first pass: all exponents 0
    let mut hist = ExpHistogram::default();
    hist.add(0, n as u64);

    let mut records: Vec<IterationRecord> = Vec::new();
    let mut successes = 0u64;
    let mut stream = StreamTrace::default();

    let (value, basis) = loop {
        let iter = records.len() as u64 + 1;

        // pass A: sample the net
        let mut rng_net = rngutil::stream2(seed, "net", iter, 0);
        let mut net = {
            let pass = source.begin_pass();
            weighted_reservoir_pass(pass, &bases, &mut view, &hist, n, r, m, &mut rng_net)?
        };
        net.sort_unstable();
        let mut distinct = net.clone();
        distinct.dedup();
        let net_elements: Vec<Element> =
            distinct.iter().map(|&i| inst.elements()[i].clone()).collect();

        stream.peak_stored_elements = stream.peak_stored_elements.max(
            net_elements.len() + bases.iter().map(|b| b.elements.len()).sum::<usize>(),
        );
        stream.peak_bits = stream
            .peak_bits
            .max(codec::elements_wire_bits(&net_elements) + bases_bits(&bases));

        let mut rng_solve = rngutil::stream2(seed, "solve", iter, 0);
        let (value, local_basis) = solve_small(&net_elements, &def, &mut rng_solve)?;
        let basis = Basis {
            indices: local_basis.indices.iter().map(|&i| distinct[i]).collect(),
            elements: local_basis.elements,
            value: local_basis.value,
        };

        // pass B: violation scan + weight accounting under the update
        let mut violators = 0usize;
        let mut violator_hist = ExpHistogram::default();
        let mut total_hist = ExpHistogram::default();
        let mut bumped_hist = ExpHistogram::default();
        {
            let pass = source.begin_pass();
            for (i, e) in pass {
                let a = view.fold(i, e, &bases)?;
                total_hist.add(a, 1);
                if violates(&basis.value, e)? {
                    violators += 1;
                    violator_hist.add(a, 1);
                    bumped_hist.add(a + 1, 1);
                } else {
                    bumped_hist.add(a, 1);
                }
            }
            view.finish_pass(bases.len());
        }
        let success = success_check(&violator_hist, &total_hist, def.nu(), n, r);
        let done = success && violators == 0;
        let mut record = IterationRecord {
            net_indices: net,
            basis: basis.clone(),
            violator_count: violators,
            violator_weight: violator_hist.weight_f64(n, r),
            total_weight: total_hist.weight_f64(n, r),
            success,
            post_hist: None,
        };
        if success && !done {
            bases.push(basis.clone());
            successes += 1;
            hist = bumped_hist;
            record.post_hist = Some(hist.clone());
            stream.peak_stored_bases = stream.peak_stored_bases.max(bases.len());
        }
        records.push(record);
        if done {
            break (value, basis);
        }
    };

    // final confirmation pass: the returned value violates nothing
    {
        let pass = source.begin_pass();
        for (_, e) in pass {
            if violates(&value, e)? {
                return Err(Error::Range("confirmation pass found a violator".into()));
            }
        }
    }

    stream.passes = source.passes();
    stream.iterations = records.len() as u64;
    Ok(StreamRun {
        value,
        basis,
        trace: MetaTrace {
            n,
            r,
            nu: def.nu(),
            lambda: def.lambda(),
            epsilon: eps.to_f64(),
            m,
            iterations: records,
            successes,
        },
        stream,
    })
}

/// Fused variant: one pass serves the violation scan of iteration t and the
/// net sampling for iteration t+1. Because the success of iteration t is
/// only known at the end of the pass, the sampler races two reservoir banks,
/// one per weight hypothesis, and the matching bank is kept at pass end.
fn run_streaming_fused(inst: &ProblemInstance, r: u32, seed: u64) -> Result<StreamRun> {
    let def = inst.def();
    let n = inst.len();
    let (eps, m) = run_net_size(inst, r, Mode::LasVegas)?;
    let mut source = StreamSource::new(inst.elements());
    let mut view = WeightView::new(n);
    let mut bases: Vec<Basis> = Vec::new();
    let mut records: Vec<IterationRecord> = Vec::new();
    let mut successes = 0u64;
    let mut stream = StreamTrace::default();

    // pass 1: sample the first net (uniform weights)
    let mut rng_net = rngutil::stream2(seed, "fused-net", 1, 0);
    let mut net = {
        let pass = source.begin_pass();
        reservoir_pass_maxkey(pass, |_, _| Ok(0), n, r, m, &mut rng_net)?
    };

    let (value, basis) = loop {
        let iter = records.len() as u64 + 1;
        net.sort_unstable();
        let mut distinct = net.clone();
        distinct.dedup();
        let net_elements: Vec<Element> =
            distinct.iter().map(|&i| inst.elements()[i].clone()).collect();
        stream.peak_stored_elements = stream.peak_stored_elements.max(
            2 * net_elements.len() + bases.iter().map(|b| b.elements.len()).sum::<usize>(),
        );
        stream.peak_bits = stream
            .peak_bits
            .max(2 * codec::elements_wire_bits(&net_elements) + bases_bits(&bases));
        let mut rng_solve = rngutil::stream2(seed, "fused-solve", iter, 0);
        let (value, local_basis) = solve_small(&net_elements, &def, &mut rng_solve)?;
        let basis = Basis {
            indices: local_basis.indices.iter().map(|&i| distinct[i]).collect(),
            elements: local_basis.elements,
            value: local_basis.value,
        };

        // fused pass: scan violations of `basis` and race both reservoir banks
        let mut violators = 0usize;
        let mut violator_hist = ExpHistogram::default();
        let mut total_hist = ExpHistogram::default();
        let ln_t = (n as f64).ln() / r as f64;
        let mut bank_fail: Vec<(f64, usize)> = vec![(f64::INFINITY, usize::MAX); m];
        let mut bank_success: Vec<(f64, usize)> = vec![(f64::INFINITY, usize::MAX); m];
        let mut rng_pass = rngutil::stream2(seed, "fused-net", iter + 1, 0);
        {
            let pass = source.begin_pass();
            for (i, e) in pass {
                let a = view.fold(i, e, &bases)?;
                total_hist.add(a, 1);
                let viol = violates(&basis.value, e)?;
                if viol {
                    violators += 1;
                    violator_hist.add(a, 1);
                }
                let a_succ = a + viol as u32;
                for slot in 0..m {
                    let u: f64 = rng_pass.gen();
                    let g_base = (-u.ln()).ln();
                    let g_fail = g_base - a as f64 * ln_t;
                    let g_succ = g_base - a_succ as f64 * ln_t;
                    if g_fail < bank_fail[slot].0 {
                        bank_fail[slot] = (g_fail, i);
                    }
                    if g_succ < bank_success[slot].0 {
                        bank_success[slot] = (g_succ, i);
                    }
                }
            }
            view.finish_pass(bases.len());
        }
        let success = success_check(&violator_hist, &total_hist, def.nu(), n, r);
        let done = success && violators == 0;
        let mut record = IterationRecord {
            net_indices: net.clone(),
            basis: basis.clone(),
            violator_count: violators,
            violator_weight: violator_hist.weight_f64(n, r),
            total_weight: total_hist.weight_f64(n, r),
            success,
            post_hist: None,
        };
        if success && !done {
            bases.push(basis.clone());
            successes += 1;
            stream.peak_stored_bases = stream.peak_stored_bases.max(bases.len());
        }
        records.push(record);
        if done {
            break (value, basis);
        }
        let bank = if success { bank_success } else { bank_fail };
        net = bank.into_iter().map(|(_, i)| i).collect();
    };

    // one closing pass confirms the returned value against the full stream
    {
        let pass = source.begin_pass();
        for (_, e) in pass {
            if violates(&value, e)? {
                return Err(Error::Range("confirmation pass found a violator".into()));
            }
        }
    }

    stream.passes = source.passes();
    stream.iterations = records.len() as u64;
    Ok(StreamRun {
        value,
        basis,
        trace: MetaTrace {
            n,
            r,
            nu: def.nu(),
            lambda: def.lambda(),
            epsilon: eps.to_f64(),
            m,
            iterations: records,
            successes,
        },
        stream,
    })
}
