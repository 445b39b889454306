//! Minimum enhanced cover arrays of regular and indeterminate strings.
//!
//! The pipeline is prefix table, then `B` and the MNC array, then the
//! MEC/CMEC scan. Brute-force references live in [`oracle`], the expected
//! border bounds and operation-count experiment in [`analysis`].

pub mod analysis;
pub mod cli;
pub mod counter;
pub mod cover;
pub mod enhanced;
pub mod enumerate;
pub mod error;
pub mod oracle;
pub mod prefix;
pub mod strings;
pub mod table;
pub mod verify;

pub use counter::OpCounter;
pub use cover::{
    compute_mnc, cover_array_from_border, cover_array_regular, longest_border_capped, rooted_cover_array, CoverArray,
    CoverFlavor, MncComputation,
};
pub use enhanced::{
    compute_mec, compute_mec_border_based, compute_mec_compressed, compute_mec_ind, compute_mec_prefix_based,
    compute_mec_with_state, coverage_by_occurrence, mec_of_indeterminate, CoverageState, MecResult,
};
pub use prefix::{
    border_array_from_prefix, border_array_regular, compress, decompress, max_border_stat, prefix_from_border,
    prefix_table_indeterminate, prefix_table_regular, BorderArray, CompressedPrefixTable, PrefixTable,
};
pub use strings::{
    letters_match, parse_indeterminate, parse_regular, Alphabet, IndeterminateLetter, IndeterminateMode,
    IndeterminateString, RegularString,
};
