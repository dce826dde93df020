#![no_std]
#![doc = include_str!("../README.md")]

extern crate alloc;

pub mod base;
pub mod bases;
pub mod derive;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod sidon;
pub mod tournament;

pub use error::{CoreError, Result};
pub use graph::{ADigraph, Digraph, Hypergraph, OrderedHypergraph, UGraph, Vertex};
