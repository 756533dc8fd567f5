//! Equal sums of like powers: exact verdicts, missing-term recovery, a
//! meet-in-the-middle search, and checks on a table of published identities.

mod appendix;
mod identity;
mod instance;
mod search;

pub use appendix::{
    appendix_lines, parse_appendix, verify_appendix, verify_line, AppendixLine, AppendixReport, SlotRecovery,
    APPENDIX_V1,
};
pub use identity::{recover_missing_term, verify_identity, Recovery, Slot, Verdict};
pub use instance::{power_sum, PowerSumInstance};
pub use search::{multiset_count, search_equal_sums, CoprimeMode, EqualSumsSearch, DEFAULT_MEMORY_CAP};
