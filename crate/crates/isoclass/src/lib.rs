//! Classification of isometries of the n-dimensional spherical, Euclidean
//! and hyperbolic space forms.
//!
//! The crate computes normal forms with explicit conjugators for elements
//! of `O(n+1)`, `Euc(n)` and `O(1,n)`, extracts the Segre symbol (the
//! discrete orbit-type invariant), counts and enumerates orbit types per
//! dimension, computes isotropy-group dimensions, decomposes the varieties
//! of invariant totally geodesic submanifolds into products of
//! Grassmannians, and reconstructs the Segre symbol from the dimension
//! vectors of those varieties.
//!
//! ```
//! use isoclass::classify::classify_matrix;
//! use isoclass::numkit::{Matrix, Tolerance};
//! use isoclass::segre::{render, Space};
//! use isoclass::varieties::dimension_vector;
//!
//! // A glide reflection of the Euclidean plane.
//! let m = Matrix::from_rows(&[
//!     vec![-1.0, 0.0, 0.0],
//!     vec![0.0, 1.0, 1.5],
//!     vec![0.0, 0.0, 1.0],
//! ]).unwrap();
//! let report = classify_matrix(Space::Euclidean, 2, &m, &Tolerance::default()).unwrap();
//! assert_eq!(render(&report.symbol), "[h;1;1]");
//! assert_eq!(report.kind, "hyperbolic");
//! assert_eq!(report.conjugation.form.translation_length(), Some(1.5));
//!
//! // Its invariant affine subspaces: no fixed points, one invariant line.
//! let d = dimension_vector(&report.symbol, 1).unwrap();
//! assert_eq!(d.render(), "[-1;0]");
//! ```

pub mod classify;
pub mod error;
pub mod euclidean;
pub mod forms;
pub mod hyperbolic;
pub mod numkit;
pub mod orbit;
pub mod sampling;
pub mod segre;
pub mod spherical;
pub mod tables;
pub mod varieties;

pub use error::{Error, Result};
