//! Signed distance matrices and signed distance Laplacians of signed graphs.
//!
//! A signed graph carries a `+1`/`-1` label on every edge. For each pair of
//! vertices the shortest paths are classified by sign, which yields two signed
//! distance matrices `D^max` and `D^min` and the Laplacians
//! `L^max = Tr - D^max`, `L^min = Tr - D^min`.
//!
//! The crate is organised as:
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | [`SignedGraph`], [`WeightedSignedGraph`], switching, path signs, components |
//! | [`io`] | edge-list parsing and serialization |
//! | [`generate`] | deterministic graph families and seeded random graphs |
//! | [`distance`] | shortest-path sign classification, `D^max`/`D^min`, transmissions |
//! | [`matrix`] | dense [`SquareMatrix`] and [`IncidenceMatrix`] with CSV/JSON export |
//! | [`laplacian`] | adjacency, degree, weighted Laplacian, incidence, distance Laplacians |
//! | [`balance`] | exact determinants, switching oracle, 1-forest enumeration |
//! | [`spectra`] | Jacobi eigensolver and spectral checks |
//! | [`verify`] | randomized property suites shared by the CLI and the tests |
//!
//! ```
//! use sgdl_core::{io, balance, laplacian, DistanceKind};
//!
//! let g = io::parse_edge_list("3\n1 2 -\n2 3 -\n1 3 -").unwrap();
//! let l = laplacian::distance_laplacian(g.graph(), DistanceKind::Pm).unwrap();
//! assert_eq!(balance::det_exact(&l).unwrap(), 4.into());
//! ```

pub mod balance;
pub mod distance;
mod dsu;
mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod laplacian;
pub mod matrix;
pub mod spectra;
pub mod verify;

pub use distance::{DistanceKind, DistanceTable, PairDistanceSummary};
pub use error::{Error, Result};
pub use graph::{Orientation, Sign, SignedGraph, SwitchingFunction, WeightedSignedGraph};
pub use matrix::{IncidenceMatrix, SquareMatrix};
pub use spectra::Spectrum;
