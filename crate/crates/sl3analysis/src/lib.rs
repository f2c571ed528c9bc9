//! Structural analysis layer on top of the web rewriting engine: the clasped
//! hexagonal corpus, basis enumeration against representation-theoretic
//! dimension counts, Chebyshev-style cabling operations, red-graph
//! diagnostics on the dual graph, and dual-canonicality reports.

pub mod chebops;
pub mod corpus;
pub mod dimension;
pub mod enumeration;
pub mod redgraphs;
