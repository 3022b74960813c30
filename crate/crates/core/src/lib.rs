pub mod battery;
pub mod complex;
pub mod cone;
pub mod error;
pub mod linalg;
pub mod milnor;
pub mod model;
pub mod status;
pub mod table;
pub mod unified;
pub mod verify;

pub use error::{Error, Result};
pub use status::Status;
pub use table::HodgeTable;
