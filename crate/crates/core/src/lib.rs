//! Verifying minimum-weight bases of matroids whose element weights are
//! only known to lie in uncertainty areas.
//!
//! An instance ([`UncertainInstance`]) attaches to every matroid element an
//! area (a finite union of bounded open or closed intervals), a hidden true
//! weight and a query cost. A query set `Q` *verifies* a basis `B` if `B`
//! stays a minimum-weight basis for every weight assignment that agrees with
//! the true weights on `Q`.
//!
//! The main entry points:
//!
//! * [`certificate::verifies_cuts`]: is `Q` a certificate for `B`?
//! * [`selection::run_algorithm1`]: a basis admitting a globally cheapest certificate.
//! * [`synthesis::algorithm2`]: a minimum-cost certificate.
//! * [`online::run_promise`]: adaptive querying when weights are hidden.
//! * [`augmented`]: adaptive querying guided by predictions.
//! * [`oracle`]: exhaustive reference computations for small instances.
//!
//! ```
//! use matverify::{fixtures, synthesis::algorithm2, rational::int};
//!
//! let inst = fixtures::fig2();
//! let cert = algorithm2(&inst).unwrap();
//! assert_eq!(cert.query.total_cost, int(2));
//! assert_eq!(inst.matroid().names_of(&cert.basis), ["e1", "e2", "e5"]);
//! ```

pub mod augmented;
pub mod certificate;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod generate;
pub mod matroid;
pub mod online;
pub mod oracle;
pub mod rational;
pub mod selection;
pub mod synthesis;
pub mod uncertainty;

pub use error::{Error, Result};
pub use matroid::{ElementId, ElementSet, IndependenceOracle, Matroid, Minor, MinorState};
pub use rational::Rational;
pub use uncertainty::{ElementData, IntervalPiece, QuerySet, UncertainInstance, UncertaintyArea};
