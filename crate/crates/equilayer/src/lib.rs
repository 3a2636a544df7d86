//! Construction, counting and verification of the standard-basis weight
//! matrices of linear layers equivariant to symmetric groups and their
//! products.
//!
//! The pipeline runs from integer partitions and the McKay quiver
//! ([`young`], [`quiver`]) through set partitions and the partition algebra
//! ([`setpart`], [`diagram`]) to explicit basis matrices, equivariance
//! checks and product-group layers ([`equimap`], [`product`]).

pub mod diagram;
pub mod equimap;
pub mod error;
pub mod fixtures;
pub mod pattern;
pub mod product;
pub mod quiver;
pub mod setpart;
pub mod young;

pub use error::{Error, Result};
