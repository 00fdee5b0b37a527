//! Kernel SVM training with incremental (adiabatic) solution updates and a
//! gradient-ascent training-set poisoning attack.
//!
//! The crate is split along the three layers of the problem:
//!
//! - [`kernel`]: kernel evaluation, kernel matrices, and gradients of kernel
//!   values with respect to an attack point (linear, polynomial, RBF).
//! - [`svm`]: batch dual training (SMO), decision/margin evaluation, hinge
//!   loss, the margin/error/reserve partition of the training set, and
//!   single-point incremental add/remove updates that keep the solution
//!   optimal while maintaining the inverse of the bordered margin-SV system.
//! - [`attack`]: the validation-loss gradient with respect to the attack
//!   point and the fixed-step gradient-ascent driver that relocates a
//!   poisoned training point to maximize validation hinge loss.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats, and the
//! experiment CLI live in the companion `svm-poison` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod attack;
pub mod dataset;
pub mod error;
pub mod kernel;
pub mod svm;

pub use attack::{
    init_attack_point, loss_gradient, poison_multi, poison_single, project_to_box, AttackConfig,
    AttackIterate, AttackTrace, BoxBounds, GradientNote, TerminalReason,
};
pub use dataset::Dataset;
pub use error::{Error, Result};
pub use kernel::{label_annotated_matrix, KernelFamily, KernelSpec};
pub use svm::{
    HingeLoss, KktPartition, PartitionDiagnostics, SetMembership, SvSystemInverse, SvmModel,
};
