//! Open-set image classification lab.
//!
//! A desk-scale toolkit for studying how training-time regularization affects
//! a classifier's ability to reject inputs from classes it never saw. The
//! crate bundles everything needed to run the experiments end to end on a
//! laptop CPU:
//!
//! - [`tensor`]: dense tensors with reverse-mode automatic differentiation and
//!   an SGD optimizer, enough to train small CNNs from scratch.
//! - [`models`]: the LeNet++ architecture with a bottlenecked feature layer,
//!   plus a compact 4-block CNN for 32x32 inputs.
//! - [`augment`]: mixup, cutmix and cutout input mixing, Beta(alpha, alpha)
//!   interpolation sampling, and entropy-rebalanced ("tempered") targets.
//! - [`losses`]: cross-entropy and the full set of open-set training
//!   objectives (tempered mixup, confidence loss, label smoothing,
//!   one-vs-rest, center loss, objectosphere, hybrid background mixing).
//! - [`openset`]: thresholded open-set inference and OSC/ROC curve metrics
//!   (AUOSC, AUROC, CCR@FPR).
//! - [`data`]: IDX and CIFAR binary dataset ingestion, synthetic unknowns,
//!   split management, normalization and batching.
//! - [`harness`]: config-driven training, evaluation, parameter sweeps and
//!   method comparison tables.

pub mod augment;
pub mod data;
pub mod harness;
pub mod losses;
pub mod models;
pub mod openset;
pub mod tensor;

pub use tensor::{Element, Tensor, TensorError};
