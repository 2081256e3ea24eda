//! Packet loss concealment for speech by time-frequency inpainting.
//!
//! The pipeline: simulate VoIP packet loss on 16 kHz speech (`loss_sim`),
//! turn audio into normalized log-magnitude spectrograms (`stft`), train a
//! conditional-adversarial U-Net to fill the zeroed regions (`autodiff`,
//! `models`, `objectives`, `trainer`), resynthesize with lossy-phase
//! initialized Griffin-Lim, and score against the zero-fill baseline
//! (`metrics`).
//!
//! All numeric code is generic over [`Scalar`] (f32 or f64). The audio and
//! transform path is normally run in f64, network training in f32; the
//! aliases below fix the canonical choices.

pub mod audio_io;
pub mod autodiff;
pub mod loss_sim;
pub mod metrics;
pub mod models;
pub mod objectives;
pub mod rng;
pub mod stft;
pub mod trainer;

mod fft;
mod scalar;

pub use scalar::Scalar;

/// Audio buffers on the precision path (synthesis, transforms, metrics).
pub type Audio64 = audio_io::AudioBuffer<f64>;
/// Audio buffers in single precision, for callers feeding f32 pipelines.
pub type Audio32 = audio_io::AudioBuffer<f32>;

pub type Spectrogram64 = stft::Spectrogram<f64>;
pub type LogMag64 = stft::LogMagSpectrogram<f64>;

/// Training-precision tensors.
pub type Tensor32 = autodiff::Tensor<f32>;
/// Test/gradient-check precision tensors.
pub type Tensor64 = autodiff::Tensor<f64>;

pub type Generator32 = models::Generator<f32>;
pub type Discriminator32 = models::Discriminator<f32>;

/// Canonical pipeline sample rate (Hz).
pub const SAMPLE_RATE_HZ: u32 = 16_000;
/// Packet duration in samples: 20 ms at 16 kHz.
pub const PACKET_LEN_SAMPLES: usize = 320;
