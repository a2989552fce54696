//! GRAND-family universal decoders for binary linear block codes.
//!
//! The crate provides:
//!
//! - [`gf2`]: packed GF(2) vectors and matrices (products, right inverses, syndromes).
//! - [`code`] and [`codes`]: linear codes and constructors for CRC, BCH, and
//!   CRC-aided polar codes, plus a plain-text matrix file format.
//! - [`patterns`]: test-error-pattern generators in Hamming-weight order,
//!   logistic-weight order (distinct integer partitions of reliability ranks),
//!   and exact maximum-likelihood order.
//! - [`decoders`]: GRANDAB, ORBGRAND, SGRAND, and List-GRAND.
//! - [`channel`]: BPSK/AWGN frame generation and a Monte-Carlo FER harness.
//! - [`oracle`]: brute-force references (ML decoding, pattern sorting,
//!   partition counting).
//! - [`verify`]: oracle-equivalence suites shared by the CLI and tests.
//! - [`config`] and [`cli`]: experiment configuration and the `grand` binary.

pub mod channel;
pub mod cli;
pub mod code;
pub mod codes;
pub mod config;
pub mod decoders;
pub mod error;
pub mod gf2;
pub mod oracle;
pub mod patterns;
pub mod verify;

pub use code::LinearCode;
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVector};
