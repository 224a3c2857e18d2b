//! Finite set systems, quasi-orders, traces between them, and the order
//! types `dim` and `otp`, with Ramsey-style bounds relating them.
//!
//! ```
//! use setsys::{dim, qo_of, Atom, SetSystem};
//!
//! let n = Atom::num;
//! let l = SetSystem::new(Atom::range(3), vec![vec![], vec![n(0)], vec![n(0), n(1), n(2)]])?;
//! assert_eq!(dim(&l), 2);
//! assert_eq!(qo_of(&l).ss()?.len(), 3);
//! # Ok::<(), setsys::Error>(())
//! ```

pub mod atom;
pub mod check;
pub mod dim;
pub mod error;
pub mod gen;
pub mod lang;
pub mod mask;
pub mod ops;
pub mod order;
pub mod ramsey;
pub mod sdr;
pub mod system;
pub mod trace;

pub use atom::Atom;
pub use dim::{dim, is_production_sequence, longest_production_sequence, ProductionSequence, ProductionStep};
pub use error::{Error, Result};
pub use order::{is_coatomic_lattice, linearizations, qo_of, QuasiOrder, Simulation};
pub use sdr::{find_sdr, SdrProblem};
pub use system::SetSystem;
pub use trace::Trace;
