//! Holds only the acceptance suite under `tests/`.
