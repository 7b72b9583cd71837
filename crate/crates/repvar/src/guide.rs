//! Guide chapters (placeholder until the book lands).
