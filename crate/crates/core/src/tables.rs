//! Representation tables of the two worked examples.

use std::fmt::Write;

use thiserror::Error;

use crate::chain::{ChainCycle, ChainError, Parity};
use crate::resolving::{paper_partition, partition_representation, Representation};

#[derive(Debug, Error)]
pub enum TableError {
    #[error("no table {0}; choose 1 (even:8,10,8) or 2 (odd:5,7,5)")]
    Unknown(u8),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

/// Table 1 is `C(C_8, C_10, C_8)`, table 2 is `C(C_5, C_7, C_5)`.
pub fn table_instance(which: u8) -> Result<ChainCycle, TableError> {
    match which {
        1 => Ok(ChainCycle::new(Parity::Even, &[8, 10, 8])?),
        2 => Ok(ChainCycle::new(Parity::Odd, &[5, 7, 5])?),
        _ => Err(TableError::Unknown(which)),
    }
}

/// `(label, r(v | Π))` for every vertex in `(i, j)` order under the
/// constructed three-block partition.
pub fn representation_rows(cc: &ChainCycle) -> Vec<(String, Representation)> {
    let p = paper_partition(cc);
    let dm = cc.graph().distance_matrix();
    cc.vertices_in_order()
        .into_iter()
        .map(|v| {
            let r = partition_representation(&dm, &p, v).expect("partition built on this graph");
            (cc.labeled().label_of(v).to_string(), r)
        })
        .collect()
}

pub fn rows_to_tsv(rows: &[(String, Representation)]) -> String {
    let mut out = String::new();
    for (label, r) in rows {
        out.push_str(label);
        for c in r.coords() {
            write!(out, "\t{c}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn table_tsv(which: u8) -> Result<String, TableError> {
    Ok(rows_to_tsv(&representation_rows(&table_instance(which)?)))
}
