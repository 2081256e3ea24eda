//! Packet-loss trace generation and zero-fill application.
//!
//! Packets are 20 ms chunks (320 samples at 16 kHz). Each packet is lost
//! independently with the target probability, except that after 6
//! consecutive losses (120 ms) the next packet is forced received, which
//! caps the maximum gap. The cap slightly lowers the realized rate below
//! the target at high rates; traces report the realized rate rather than
//! compensating.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::audio_io::AudioBuffer;
use crate::rng::Rng;
use crate::{Scalar, PACKET_LEN_SAMPLES};

/// Maximum run of consecutive lost packets (120 ms at 20 ms packets).
pub const MAX_GAP_PACKETS: usize = 6;

#[derive(Debug, thiserror::Error)]
pub enum TraceError {
    #[error("loss rate must be in (0, 1), got {0}")]
    RateOutOfRange(f64),
    #[error("trace needs at least one packet")]
    Empty,
    #[error("trace covers {trace_samples} samples but buffer has only {buffer_samples}")]
    TraceTooLong {
        trace_samples: usize,
        buffer_samples: usize,
    },
    #[error("trace file {path}: {detail}")]
    Format { path: String, detail: String },
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// Per-packet received/lost mask. `true` marks a lost packet.
#[derive(Debug, Clone, PartialEq)]
pub struct LossTrace {
    pub packet_len_samples: usize,
    pub mask: Vec<bool>,
    pub target_rate: f64,
    pub seed: u64,
}

impl LossTrace {
    pub fn n_packets(&self) -> usize {
        self.mask.len()
    }

    pub fn n_lost(&self) -> usize {
        self.mask.iter().filter(|&&l| l).count()
    }

    pub fn realized_rate(&self) -> f64 {
        if self.mask.is_empty() {
            0.0
        } else {
            self.n_lost() as f64 / self.mask.len() as f64
        }
    }

    /// Length of the longest lost run, in packets.
    pub fn max_gap(&self) -> usize {
        let mut best = 0;
        let mut run = 0;
        for &lost in &self.mask {
            if lost {
                run += 1;
                best = best.max(run);
            } else {
                run = 0;
            }
        }
        best
    }
}

/// Gap-length histogram of a trace (keys in packets, 1..=6).
#[derive(Debug, Clone, PartialEq)]
pub struct GapHistogram {
    pub counts: BTreeMap<usize, u64>,
    pub realized_rate: f64,
}

/// Draw a trace: i.i.d. Bernoulli(rate) per packet with the 6-run cap.
pub fn gen_trace(n_packets: usize, rate: f64, seed: u64) -> Result<LossTrace, TraceError> {
    if !(rate > 0.0 && rate < 1.0) {
        return Err(TraceError::RateOutOfRange(rate));
    }
    if n_packets == 0 {
        return Err(TraceError::Empty);
    }
    let mut rng = Rng::new(seed);
    let mut mask = Vec::with_capacity(n_packets);
    let mut run = 0usize;
    for _ in 0..n_packets {
        let lost = if run >= MAX_GAP_PACKETS {
            false
        } else {
            rng.next_f64() < rate
        };
        run = if lost { run + 1 } else { 0 };
        mask.push(lost);
    }
    Ok(LossTrace {
        packet_len_samples: PACKET_LEN_SAMPLES,
        mask,
        target_rate: rate,
        seed,
    })
}

/// Expected realized rate of the capped Bernoulli process. Renewal
/// argument: a cycle is one lost run (length L, L ~ Geometric(p) truncated
/// at 6) followed by one received packet, so the lost fraction is
/// E[L] / (E[L] + 1).
pub fn expected_realized_rate(rate: f64) -> f64 {
    let p = rate;
    let mut e_len = 0.0;
    for k in 1..MAX_GAP_PACKETS {
        e_len += k as f64 * p.powi(k as i32) * (1.0 - p);
    }
    e_len += MAX_GAP_PACKETS as f64 * p.powi(MAX_GAP_PACKETS as i32);
    e_len / (e_len + 1.0)
}

/// Zero out the lost packets' sample ranges; received samples are returned
/// bit-identical.
pub fn apply_trace<T: Scalar>(
    buf: &AudioBuffer<T>,
    trace: &LossTrace,
) -> Result<AudioBuffer<T>, TraceError> {
    let covered = trace.packet_len_samples * trace.mask.len();
    if covered > buf.samples.len() {
        return Err(TraceError::TraceTooLong {
            trace_samples: covered,
            buffer_samples: buf.samples.len(),
        });
    }
    let mut out = buf.clone();
    for (p, &lost) in trace.mask.iter().enumerate() {
        if lost {
            let start = p * trace.packet_len_samples;
            for s in &mut out.samples[start..start + trace.packet_len_samples] {
                *s = T::zero();
            }
        }
    }
    Ok(out)
}

/// Run-length statistics of the lost packets.
pub fn trace_stats(trace: &LossTrace) -> GapHistogram {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    let mut run = 0usize;
    for &lost in &trace.mask {
        if lost {
            run += 1;
        } else if run > 0 {
            *counts.entry(run).or_insert(0) += 1;
            run = 0;
        }
    }
    if run > 0 {
        *counts.entry(run).or_insert(0) += 1;
    }
    GapHistogram {
        counts,
        realized_rate: trace.realized_rate(),
    }
}

/// Write the trace file format: header
/// `plc-trace v1 packet=<n> rate=<r> seed=<s>`, then one `0`/`1` character
/// per packet (`1` = lost).
pub fn write_trace(path: &Path, trace: &LossTrace) -> Result<(), TraceError> {
    let mut text = format!(
        "plc-trace v1 packet={} rate={} seed={}\n",
        trace.packet_len_samples, trace.target_rate, trace.seed
    );
    text.extend(trace.mask.iter().map(|&l| if l { '1' } else { '0' }));
    text.push('\n');
    fs::write(path, text).map_err(|source| TraceError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_trace(path: &Path) -> Result<LossTrace, TraceError> {
    let pstr = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| TraceError::Io {
        path: pstr.clone(),
        source,
    })?;
    let fmt = |detail: &str| TraceError::Format {
        path: pstr.clone(),
        detail: detail.to_string(),
    };
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| fmt("empty file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 5 || fields[0] != "plc-trace" || fields[1] != "v1" {
        return Err(fmt("bad header, expected `plc-trace v1 packet=.. rate=.. seed=..`"));
    }
    let field = |prefix: &str, s: &str| -> Result<String, TraceError> {
        s.strip_prefix(prefix)
            .map(str::to_string)
            .ok_or_else(|| fmt(&format!("expected `{prefix}<value>`, got `{s}`")))
    };
    let packet: usize = field("packet=", fields[2])?
        .parse()
        .map_err(|_| fmt("bad packet length"))?;
    let rate: f64 = field("rate=", fields[3])?
        .parse()
        .map_err(|_| fmt("bad rate"))?;
    let seed: u64 = field("seed=", fields[4])?
        .parse()
        .map_err(|_| fmt("bad seed"))?;
    let body = lines.next().ok_or_else(|| fmt("missing mask line"))?;
    let mut mask = Vec::with_capacity(body.len());
    for ch in body.chars() {
        match ch {
            '0' => mask.push(false),
            '1' => mask.push(true),
            _ => return Err(fmt(&format!("invalid mask character `{ch}`"))),
        }
    }
    if mask.is_empty() {
        return Err(fmt("empty mask"));
    }
    Ok(LossTrace {
        packet_len_samples: packet,
        mask,
        target_rate: rate,
        seed,
    })
}
