//! Report envelopes, rendering, and literal parsing for the `sumsetlab`
//! binary. Lives in a library target so integration tests can re-parse
//! emitted JSON into the exact record types.

pub mod output;
pub mod parse;
