//! File formats and the command-line front end for [`elnet_core`].

pub mod cli;
pub mod edgelist;

pub use edgelist::{parse_edge_list, EdgeListDocument, EdgeListError, LabeledNetwork};
