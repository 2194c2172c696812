//! Text formats, family generators and witness JSON.

mod edge_list;
mod families;
mod graph6;
mod witness;

pub use edge_list::{emit_edge_list, parse_edge_list};
pub use families::{generate, Family};
pub use graph6::{parse_graph6, parse_graph6_all};
pub use witness::{Bounds, Witness};
