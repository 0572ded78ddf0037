//! Diagram-level algorithms for Coxeter systems.
//!
//! The crate works with Coxeter matrices over named generators and offers:
//!
//! - [`diagram`]: parsing, views, components, canonical forms.
//! - [`classify`]: recognition of finite irreducible types, orders, longest-element automorphisms.
//! - [`oracle`]: word reduction, Todd–Coxeter enumeration, brute-force conjugacy.
//! - [`conjugacy`]: visual-subgroup conjugacy through ν-moves.
//! - [`matching`]: bases, blow-ups, the maximum-rank driver and lineage matching.
//! - [`decompose`]: separations, twists and visual graph-of-groups decompositions.
//! - [`census`]: counts of complete visual subgroups by isomorphism type.
//! - [`cli`]: the `coxforge` command line.
//!
//! ```
//! use coxforge::diagram::parse_diagram;
//! use coxforge::classify::{order_of, Order};
//!
//! let d = parse_diagram("gens a b c\ndefault 2\nedge a b 4\nedge b c 3").unwrap();
//! assert_eq!(order_of(&d, d.all()), Order::Finite(48u32.into()));
//! ```

pub mod census;
pub mod classify;
pub mod cli;
pub mod conjugacy;
pub mod decompose;
pub mod diagram;
pub mod error;
pub mod lineage_file;
pub mod matching;
pub mod oracle;

pub use diagram::{parse_diagram, CoxeterDiagram, Label, Subset};
pub use error::{Error, Result};
pub use oracle::Word;
