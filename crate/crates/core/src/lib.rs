//! Token-stream similarity between introductory C++ solutions, and a
//! supervised pipeline that labels solution pairs as plagiarized or not.
//!
//! ```
//! use plagsim::frontend::token_stream;
//! use plagsim::similarity::{similarity_vector, SimilarityConfig};
//!
//! let a = token_stream("int main() { int x = 1; return x; }").unwrap();
//! let b = token_stream("int main() {\n  // copy\n  int x = 1;\n  return x;\n}").unwrap();
//! let v = similarity_vector(&a, &b, &SimilarityConfig::default()).unwrap();
//! assert_eq!(v.lcs, 100.0);
//! assert_eq!(v.gst3, 100.0);
//! ```

pub mod frontend;
pub mod similarity;
pub mod corpus;
pub mod dataset;
pub mod label;
pub mod learn;

pub use label::Label;
