//! Holds the `acceptance` test target; see Cargo.toml.
