//! Process exit codes. Usage errors reported by the argument parser exit
//! with 2.

pub const OK: i32 = 0;
/// `reduce` was given a term with no redex.
pub const NORMAL_FORM: i32 = 10;
/// `normalize` stopped at the step cap.
pub const STEP_CAP: i32 = 11;
pub const PARSE_ERROR: i32 = 65;
/// Well-formed input that cannot be processed: mismatched files, invalid
/// option combinations, malformed dataset lines.
pub const VALIDATION_ERROR: i32 = 66;
pub const IO_ERROR: i32 = 74;
