//! WAV reading/writing, synthetic speech-like corpus generation, and
//! train/validation/test splitting.
//!
//! WAV support is deliberately narrow: RIFF/WAVE, 16-bit PCM, mono or
//! stereo (stereo is averaged down), any source rate. Everything entering
//! the pipeline is resampled to 16 kHz by linear interpolation; corpus
//! audio is an input fixture, so users wanting higher-fidelity resampling
//! should pre-resample externally.

use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use crate::rng::{derive_seed, streams, Rng};
use crate::scalar::sc;
use crate::{Scalar, SAMPLE_RATE_HZ};

#[derive(Debug, thiserror::Error)]
pub enum AudioError {
    #[error("cannot open {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed WAV header in {path}: {detail}")]
    MalformedHeader { path: String, detail: String },
    #[error("unsupported WAV encoding in {path}: {detail} (only 16-bit PCM is read)")]
    UnsupportedEncoding { path: String, detail: String },
    #[error("cannot write empty buffer to {path}")]
    EmptyBuffer { path: String },
    #[error("invalid argument: {0}")]
    InvalidArg(String),
    #[error("manifest {path}: {detail}")]
    Manifest { path: String, detail: String },
}

/// Mono sample sequence at a fixed sample rate. Samples are kept in
/// [-1, 1]; write paths clamp.
#[derive(Debug, Clone, PartialEq)]
pub struct AudioBuffer<T: Scalar> {
    pub samples: Vec<T>,
    pub sample_rate_hz: u32,
}

impl<T: Scalar> AudioBuffer<T> {
    pub fn new(samples: Vec<T>, sample_rate_hz: u32) -> Self {
        AudioBuffer {
            samples,
            sample_rate_hz,
        }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_s(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate_hz as f64
    }

    /// Peak absolute amplitude.
    pub fn peak(&self) -> T {
        self.samples
            .iter()
            .fold(T::zero(), |m, &x| m.max(x.abs()))
    }

    /// Root mean square amplitude.
    pub fn rms(&self) -> T {
        if self.samples.is_empty() {
            return T::zero();
        }
        let sum2: T = self.samples.iter().map(|&x| x * x).sum();
        (sum2 / sc(self.samples.len() as f64)).sqrt()
    }
}

fn read_u32le(b: &[u8], off: usize) -> u32 {
    u32::from_le_bytes([b[off], b[off + 1], b[off + 2], b[off + 3]])
}

fn read_u16le(b: &[u8], off: usize) -> u16 {
    u16::from_le_bytes([b[off], b[off + 1]])
}

/// Read a PCM16 WAV file, average stereo to mono, resample to 16 kHz, and
/// scale to [-1, 1] by dividing by 32768.
pub fn read_wav<T: Scalar>(path: &Path) -> Result<AudioBuffer<T>, AudioError> {
    let pstr = path.display().to_string();
    let mut bytes = Vec::new();
    fs::File::open(path)
        .and_then(|mut f| f.read_to_end(&mut bytes))
        .map_err(|source| AudioError::Io {
            path: pstr.clone(),
            source,
        })?;

    let hdr = |detail: &str| AudioError::MalformedHeader {
        path: pstr.clone(),
        detail: detail.to_string(),
    };

    if bytes.len() < 12 || &bytes[0..4] != b"RIFF" || &bytes[8..12] != b"WAVE" {
        return Err(hdr("missing RIFF/WAVE magic"));
    }

    let mut fmt: Option<(u16, u16, u32, u16)> = None; // format, channels, rate, bits
    let mut data: Option<&[u8]> = None;
    let mut off = 12usize;
    while off + 8 <= bytes.len() {
        let id = &bytes[off..off + 4];
        let size = read_u32le(&bytes, off + 4) as usize;
        let body_start = off + 8;
        if body_start + size > bytes.len() {
            return Err(hdr("chunk size exceeds file length"));
        }
        let body = &bytes[body_start..body_start + size];
        match id {
            b"fmt " => {
                if size < 16 {
                    return Err(hdr("fmt chunk too short"));
                }
                fmt = Some((
                    read_u16le(body, 0),
                    read_u16le(body, 2),
                    read_u32le(body, 4),
                    read_u16le(body, 14),
                ));
            }
            b"data" => data = Some(body),
            _ => {}
        }
        // Chunks are word-aligned.
        off = body_start + size + (size & 1);
    }

    let (format, channels, src_rate, bits) = fmt.ok_or_else(|| hdr("no fmt chunk"))?;
    let data = data.ok_or_else(|| hdr("no data chunk"))?;
    let unsupported = |detail: String| AudioError::UnsupportedEncoding {
        path: pstr.clone(),
        detail,
    };
    if format != 1 {
        return Err(unsupported(format!("format tag {format} is not PCM")));
    }
    if bits != 16 {
        return Err(unsupported(format!("{bits} bits per sample")));
    }
    if channels == 0 || channels > 2 {
        return Err(unsupported(format!("{channels} channels")));
    }
    if src_rate == 0 {
        return Err(hdr("zero sample rate"));
    }

    let frame_bytes = 2 * channels as usize;
    let n_frames = data.len() / frame_bytes;
    let mut mono = Vec::with_capacity(n_frames);
    for i in 0..n_frames {
        let mut acc = 0.0f64;
        for c in 0..channels as usize {
            let o = i * frame_bytes + 2 * c;
            let v = i16::from_le_bytes([data[o], data[o + 1]]) as f64;
            acc += v;
        }
        mono.push(acc / channels as f64 / 32768.0);
    }

    let resampled = resample_linear(&mono, src_rate, SAMPLE_RATE_HZ);
    Ok(AudioBuffer::new(
        resampled.into_iter().map(sc).collect(),
        SAMPLE_RATE_HZ,
    ))
}

/// Linear-interpolation resampler. Output length is round(n * dst / src).
fn resample_linear(x: &[f64], src_rate: u32, dst_rate: u32) -> Vec<f64> {
    if src_rate == dst_rate || x.is_empty() {
        return x.to_vec();
    }
    let out_len = ((x.len() as f64) * dst_rate as f64 / src_rate as f64).round() as usize;
    let step = src_rate as f64 / dst_rate as f64;
    let mut out = Vec::with_capacity(out_len);
    for i in 0..out_len {
        let pos = i as f64 * step;
        let i0 = pos.floor() as usize;
        if i0 + 1 >= x.len() {
            out.push(x[x.len() - 1]);
        } else {
            let frac = pos - i0 as f64;
            out.push(x[i0] * (1.0 - frac) + x[i0 + 1] * frac);
        }
    }
    out
}

/// Write a mono PCM16 WAV at the buffer's sample rate. Samples are clamped
/// to [-1, 1] before quantization; the round trip through
/// [`read_wav`] is within 1/32768 per sample.
pub fn write_wav<T: Scalar>(path: &Path, buf: &AudioBuffer<T>) -> Result<(), AudioError> {
    let pstr = path.display().to_string();
    if buf.samples.is_empty() {
        return Err(AudioError::EmptyBuffer { path: pstr });
    }
    let n = buf.samples.len();
    let data_bytes = (n * 2) as u32;
    let mut out = Vec::with_capacity(44 + n * 2);
    out.extend_from_slice(b"RIFF");
    out.extend_from_slice(&(36 + data_bytes).to_le_bytes());
    out.extend_from_slice(b"WAVE");
    out.extend_from_slice(b"fmt ");
    out.extend_from_slice(&16u32.to_le_bytes());
    out.extend_from_slice(&1u16.to_le_bytes()); // PCM
    out.extend_from_slice(&1u16.to_le_bytes()); // mono
    out.extend_from_slice(&buf.sample_rate_hz.to_le_bytes());
    out.extend_from_slice(&(buf.sample_rate_hz * 2).to_le_bytes());
    out.extend_from_slice(&2u16.to_le_bytes()); // block align
    out.extend_from_slice(&16u16.to_le_bytes()); // bits
    out.extend_from_slice(b"data");
    out.extend_from_slice(&data_bytes.to_le_bytes());
    for &s in &buf.samples {
        let x = s.to_f64().unwrap_or(0.0).clamp(-1.0, 1.0);
        let q = (x * 32768.0).round().clamp(-32768.0, 32767.0) as i16;
        out.extend_from_slice(&q.to_le_bytes());
    }
    fs::File::create(path)
        .and_then(|mut f| f.write_all(&out))
        .map_err(|source| AudioError::Io {
            path: pstr,
            source,
        })
}

/// Deterministic speech-like test clip: an impulse train at `f0_hz` with
/// ±10% random vibrato, run through three time-varying two-pole resonators
/// with formant-like center frequencies in [300, 3500] Hz, plus white noise
/// 30 dB below the voiced part; peak-normalized to 0.9.
pub fn synth_clip<T: Scalar>(
    duration_s: f64,
    f0_hz: f64,
    seed: u64,
) -> Result<AudioBuffer<T>, AudioError> {
    if !(duration_s > 0.0) {
        return Err(AudioError::InvalidArg(format!(
            "duration must be positive, got {duration_s}"
        )));
    }
    if !(60.0..=400.0).contains(&f0_hz) {
        return Err(AudioError::InvalidArg(format!(
            "f0 must be in [60, 400] Hz, got {f0_hz}"
        )));
    }
    let fs = SAMPLE_RATE_HZ as f64;
    let n = (duration_s * fs).round() as usize;
    let mut rng = Rng::new(derive_seed(seed, streams::CORPUS, &[]));

    // Vibrato: piecewise-linear noise resampled every 50 ms.
    let seg = (0.05 * fs) as usize;
    let n_knots = n / seg + 2;
    let knots: Vec<f64> = (0..n_knots).map(|_| rng.uniform(-1.0, 1.0)).collect();

    // Impulse train with instantaneous frequency f0 * (1 + 0.1 * vibrato).
    let mut excitation = vec![0.0f64; n];
    let mut phase = 0.0f64;
    for (i, e) in excitation.iter_mut().enumerate() {
        let k = i / seg;
        let frac = (i % seg) as f64 / seg as f64;
        let vib = knots[k] * (1.0 - frac) + knots[k + 1] * frac;
        phase += f0_hz * (1.0 + 0.1 * vib) / fs;
        if phase >= 1.0 {
            phase -= 1.0;
            *e = 1.0;
        }
    }

    // Three parallel resonators; center frequencies drift linearly between
    // random endpoints over the clip.
    let mut voiced = vec![0.0f64; n];
    for k in 0..3 {
        let fa = rng.uniform(300.0, 3500.0);
        let fb = rng.uniform(300.0, 3500.0);
        let bw = 80.0 + 40.0 * k as f64;
        let r = (-std::f64::consts::PI * bw / fs).exp();
        let (mut y1, mut y2) = (0.0f64, 0.0f64);
        for i in 0..n {
            let t = i as f64 / n as f64;
            let fc = fa * (1.0 - t) + fb * t;
            let w = 2.0 * std::f64::consts::PI * fc / fs;
            let a1 = 2.0 * r * w.cos();
            let a2 = -r * r;
            let y = excitation[i] + a1 * y1 + a2 * y2;
            y2 = y1;
            y1 = y;
            voiced[i] += y;
        }
    }

    // Noise floor at -30 dB relative to the voiced RMS.
    let rms = (voiced.iter().map(|v| v * v).sum::<f64>() / n as f64).sqrt();
    let noise_amp = rms * 10f64.powf(-30.0 / 20.0);
    for v in voiced.iter_mut() {
        *v += noise_amp * rng.normal();
    }

    let peak = voiced.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let scale = if peak > 0.0 { 0.9 / peak } else { 0.0 };
    Ok(AudioBuffer::new(
        voiced.into_iter().map(|v| sc(v * scale)).collect(),
        SAMPLE_RATE_HZ,
    ))
}

/// Trim leading/trailing frames whose RMS falls below `threshold_db` dBFS
/// (20 ms frames). Returns the original buffer if everything is below the
/// gate.
pub fn trim_silence<T: Scalar>(buf: &AudioBuffer<T>, threshold_db: f64) -> AudioBuffer<T> {
    let frame = (buf.sample_rate_hz as usize / 50).max(1);
    let thresh = 10f64.powf(threshold_db / 20.0);
    let frames: Vec<bool> = buf
        .samples
        .chunks(frame)
        .map(|c| {
            let rms =
                (c.iter().map(|&x| x.to_f64().unwrap() * x.to_f64().unwrap()).sum::<f64>()
                    / c.len() as f64)
                    .sqrt();
            rms > thresh
        })
        .collect();
    let first = frames.iter().position(|&b| b);
    let last = frames.iter().rposition(|&b| b);
    match (first, last) {
        (Some(f), Some(l)) => {
            let start = f * frame;
            let end = ((l + 1) * frame).min(buf.samples.len());
            AudioBuffer::new(buf.samples[start..end].to_vec(), buf.sample_rate_hz)
        }
        _ => buf.clone(),
    }
}

/// Disjoint train/validation/test partition of clip identifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSplit {
    pub train: Vec<String>,
    pub validation: Vec<String>,
    pub test: Vec<String>,
}

/// Deterministic shuffled partition; sizes are floor allocations of the
/// ratios with the remainder going to train.
pub fn split_corpus(
    ids: &[String],
    ratios: (f64, f64, f64),
    seed: u64,
) -> Result<CorpusSplit, AudioError> {
    if ids.is_empty() {
        return Err(AudioError::InvalidArg("empty id list".to_string()));
    }
    let (a, b, c) = ratios;
    if !(a > 0.0 && b > 0.0 && c > 0.0) {
        return Err(AudioError::InvalidArg(format!(
            "ratios must be positive, got ({a}, {b}, {c})"
        )));
    }
    if ((a + b + c) - 1.0).abs() > 1e-9 {
        return Err(AudioError::InvalidArg(format!(
            "ratios must sum to 1, got {}",
            a + b + c
        )));
    }
    let mut shuffled: Vec<String> = ids.to_vec();
    Rng::new(derive_seed(seed, streams::SPLIT, &[])).shuffle(&mut shuffled);
    let n = shuffled.len();
    let n_val = (b * n as f64).floor() as usize;
    let n_test = (c * n as f64).floor() as usize;
    let n_train = n - n_val - n_test;
    let train = shuffled[..n_train].to_vec();
    let validation = shuffled[n_train..n_train + n_val].to_vec();
    let test = shuffled[n_train + n_val..].to_vec();
    Ok(CorpusSplit {
        train,
        validation,
        test,
    })
}

/// Read a corpus manifest: one relative path per line, UTF-8, `#` starts a
/// comment, blank lines ignored.
pub fn read_manifest(path: &Path) -> Result<Vec<String>, AudioError> {
    let pstr = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| AudioError::Io {
        path: pstr.clone(),
        source,
    })?;
    let mut entries = Vec::new();
    for line in text.lines() {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        }
        .trim();
        if !line.is_empty() {
            entries.push(line.to_string());
        }
    }
    if entries.is_empty() {
        return Err(AudioError::Manifest {
            path: pstr,
            detail: "no entries".to_string(),
        });
    }
    Ok(entries)
}

pub fn write_manifest(path: &Path, entries: &[String]) -> Result<(), AudioError> {
    let mut text = String::from("# corpus manifest: one relative path per line\n");
    for e in entries {
        text.push_str(e);
        text.push('\n');
    }
    fs::write(path, text).map_err(|source| AudioError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tmp(name: &str) -> std::path::PathBuf {
        let dir = std::env::temp_dir().join("bin2bin-audio-tests");
        fs::create_dir_all(&dir).unwrap();
        dir.join(name)
    }

    #[test]
    fn zero_clip_roundtrip() {
        let p = tmp("zeros.wav");
        let buf = AudioBuffer::<f64>::new(vec![0.0; 16000], 16000);
        write_wav(&p, &buf).unwrap();
        let back: AudioBuffer<f64> = read_wav(&p).unwrap();
        assert_eq!(back.len(), 16000);
        assert!(back.samples.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn pcm16_min_maps_to_minus_one() {
        // Hand-build a 4-sample mono file containing -32768.
        let p = tmp("min.wav");
        let buf = AudioBuffer::<f64>::new(vec![-1.0, 0.0, 0.5, -0.25], 16000);
        write_wav(&p, &buf).unwrap();
        let back: AudioBuffer<f64> = read_wav(&p).unwrap();
        assert_eq!(back.samples[0], -1.0);
    }

    #[test]
    fn resample_length_oracle() {
        // round(n * 16000 / src) for a batch of (n, src) pairs.
        for &(n, src) in &[(8000usize, 8000u32), (44100, 44100), (22050, 44100), (777, 12345)] {
            let expect = ((n as f64) * 16000.0 / src as f64).round() as usize;
            let out = resample_linear(&vec![0.25; n], src, 16000);
            assert_eq!(out.len(), expect, "n={n} src={src}");
        }
        let p = tmp("8k.wav");
        let buf = AudioBuffer::<f64>::new(vec![0.1; 8000], 8000);
        write_wav(&p, &buf).unwrap();
        let back: AudioBuffer<f64> = read_wav(&p).unwrap();
        assert_eq!(back.len(), 16000);
        assert_eq!(back.sample_rate_hz, 16000);
    }

    #[test]
    fn roundtrip_quantization_bound() {
        let p = tmp("ramp.wav");
        let ramp: Vec<f64> = (0..160).map(|i| (i as f64 / 159.0) * 2.0 - 1.0).collect();
        write_wav(&p, &AudioBuffer::new(ramp.clone(), 16000)).unwrap();
        let back: AudioBuffer<f64> = read_wav(&p).unwrap();
        let max_err = ramp
            .iter()
            .zip(&back.samples)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        assert!(max_err <= 1.0 / 32768.0, "max_err {max_err}");
    }

    #[test]
    fn roundtrip_bound_holds_for_random_signals() {
        for seed in 0..20 {
            let mut rng = Rng::new(seed);
            let sig: Vec<f64> = (0..500).map(|_| rng.uniform(-1.0, 1.0)).collect();
            let p = tmp(&format!("rand{seed}.wav"));
            write_wav(&p, &AudioBuffer::new(sig.clone(), 16000)).unwrap();
            let back: AudioBuffer<f64> = read_wav(&p).unwrap();
            for (a, b) in sig.iter().zip(&back.samples) {
                assert!((a - b).abs() <= 1.0 / 32768.0);
            }
        }
    }

    #[test]
    fn empty_buffer_rejected() {
        let p = tmp("empty.wav");
        let err = write_wav(&p, &AudioBuffer::<f64>::new(vec![], 16000)).unwrap_err();
        assert!(matches!(err, AudioError::EmptyBuffer { .. }));
    }

    #[test]
    fn out_of_range_sample_clamped() {
        let p = tmp("clamp.wav");
        write_wav(&p, &AudioBuffer::new(vec![1.5f64; 8], 16000)).unwrap();
        let back: AudioBuffer<f64> = read_wav(&p).unwrap();
        // Stored as 32767 -> reads back just below 1.0.
        assert!((back.samples[0] - 1.0).abs() <= 1.0 / 32768.0);
    }

    #[test]
    fn malformed_and_unsupported_diagnostics_are_distinct() {
        let p = tmp("garbage.wav");
        fs::write(&p, b"not a wav at all............").unwrap();
        assert!(matches!(
            read_wav::<f64>(&p).unwrap_err(),
            AudioError::MalformedHeader { .. }
        ));

        // Valid RIFF shell with a float format tag.
        let mut bytes: Vec<u8> = Vec::new();
        bytes.extend_from_slice(b"RIFF");
        bytes.extend_from_slice(&36u32.to_le_bytes());
        bytes.extend_from_slice(b"WAVE");
        bytes.extend_from_slice(b"fmt ");
        bytes.extend_from_slice(&16u32.to_le_bytes());
        bytes.extend_from_slice(&3u16.to_le_bytes()); // IEEE float
        bytes.extend_from_slice(&1u16.to_le_bytes());
        bytes.extend_from_slice(&16000u32.to_le_bytes());
        bytes.extend_from_slice(&64000u32.to_le_bytes());
        bytes.extend_from_slice(&4u16.to_le_bytes());
        bytes.extend_from_slice(&16u16.to_le_bytes());
        bytes.extend_from_slice(b"data");
        bytes.extend_from_slice(&0u32.to_le_bytes());
        let p2 = tmp("float.wav");
        fs::write(&p2, &bytes).unwrap();
        assert!(matches!(
            read_wav::<f64>(&p2).unwrap_err(),
            AudioError::UnsupportedEncoding { .. }
        ));

        assert!(matches!(
            read_wav::<f64>(Path::new("/definitely/not/here.wav")).unwrap_err(),
            AudioError::Io { .. }
        ));
    }

    #[test]
    fn stereo_averages_to_mono() {
        // Hand-build stereo: L=0.5, R=-0.5 -> mono 0.
        let mut bytes: Vec<u8> = Vec::new();
        let n_frames = 64u32;
        let data_len = n_frames * 4;
        bytes.extend_from_slice(b"RIFF");
        bytes.extend_from_slice(&(36 + data_len).to_le_bytes());
        bytes.extend_from_slice(b"WAVE");
        bytes.extend_from_slice(b"fmt ");
        bytes.extend_from_slice(&16u32.to_le_bytes());
        bytes.extend_from_slice(&1u16.to_le_bytes());
        bytes.extend_from_slice(&2u16.to_le_bytes());
        bytes.extend_from_slice(&16000u32.to_le_bytes());
        bytes.extend_from_slice(&(16000u32 * 4).to_le_bytes());
        bytes.extend_from_slice(&4u16.to_le_bytes());
        bytes.extend_from_slice(&16u16.to_le_bytes());
        bytes.extend_from_slice(b"data");
        bytes.extend_from_slice(&data_len.to_le_bytes());
        for _ in 0..n_frames {
            bytes.extend_from_slice(&16384i16.to_le_bytes());
            bytes.extend_from_slice(&(-16384i16).to_le_bytes());
        }
        let p = tmp("stereo.wav");
        fs::write(&p, &bytes).unwrap();
        let back: AudioBuffer<f64> = read_wav(&p).unwrap();
        assert_eq!(back.len(), 64);
        assert!(back.samples.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn synth_clip_is_deterministic_and_normalized() {
        let a: AudioBuffer<f64> = synth_clip(1.0, 120.0, 7).unwrap();
        let b: AudioBuffer<f64> = synth_clip(1.0, 120.0, 7).unwrap();
        assert_eq!(a.samples, b.samples, "bitwise determinism");
        assert_eq!(a.len(), 16000);
        assert!((a.peak() - 0.9).abs() < 1e-6, "peak {}", a.peak());

        let c: AudioBuffer<f64> = synth_clip(1.0, 120.0, 8).unwrap();
        assert_ne!(a.samples, c.samples);
    }

    #[test]
    fn synth_clip_rejects_bad_args() {
        assert!(synth_clip::<f64>(0.0, 120.0, 1).is_err());
        assert!(synth_clip::<f64>(1.0, 30.0, 1).is_err());
        assert!(synth_clip::<f64>(1.0, 500.0, 1).is_err());
    }

    #[test]
    fn split_sizes_follow_floor_allocation() {
        let ids: Vec<String> = (0..10).map(|i| format!("c{i}")).collect();
        let s = split_corpus(&ids, (0.8, 0.1, 0.1), 1).unwrap();
        assert_eq!(s.train.len(), 8);
        assert_eq!(s.validation.len(), 1);
        assert_eq!(s.test.len(), 1);
    }

    #[test]
    fn split_deterministic_and_ratio_checked() {
        let ids: Vec<String> = (0..23).map(|i| format!("c{i}")).collect();
        let a = split_corpus(&ids, (0.8, 0.1, 0.1), 5).unwrap();
        let b = split_corpus(&ids, (0.8, 0.1, 0.1), 5).unwrap();
        assert_eq!(a, b);
        assert!(split_corpus(&ids, (0.5, 0.5, 0.1), 5).is_err());
        assert!(split_corpus(&[], (0.8, 0.1, 0.1), 5).is_err());
    }

    #[test]
    fn split_partitions_for_100_seeds() {
        let ids: Vec<String> = (0..37).map(|i| format!("c{i}")).collect();
        for seed in 0..100 {
            let s = split_corpus(&ids, (0.7, 0.15, 0.15), seed).unwrap();
            let mut all: Vec<&String> =
                s.train.iter().chain(&s.validation).chain(&s.test).collect();
            assert_eq!(all.len(), ids.len());
            all.sort();
            all.dedup();
            assert_eq!(all.len(), ids.len(), "seed {seed}: overlap detected");
        }
    }

    #[test]
    fn manifest_roundtrip_with_comments() {
        let p = tmp("manifest.txt");
        fs::write(&p, "# header\nclip1.wav\n\nclip2.wav # trailing\n").unwrap();
        let entries = read_manifest(&p).unwrap();
        assert_eq!(entries, vec!["clip1.wav".to_string(), "clip2.wav".to_string()]);

        let p2 = tmp("manifest2.txt");
        write_manifest(&p2, &entries).unwrap();
        assert_eq!(read_manifest(&p2).unwrap(), entries);
    }

    #[test]
    fn trim_silence_gates_edges() {
        let mut samples = vec![0.0f64; 16000];
        for (i, s) in samples.iter_mut().enumerate().take(9600).skip(6400) {
            *s = 0.5 * ((i as f64) * 0.1).sin();
        }
        let trimmed = trim_silence(&AudioBuffer::new(samples, 16000), -40.0);
        assert!(trimmed.len() < 16000);
        assert!(trimmed.len() >= 3200);
        assert!(trimmed.peak() > 0.1);
    }
}
