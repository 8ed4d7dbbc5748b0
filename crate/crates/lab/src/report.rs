//! Deterministic JSON output.
//!
//! Values go through `serde_json::Value`, whose maps are ordered by key, so
//! every object is emitted with sorted keys.

use isolation_core::verify::{suite_passed, CheckReport};
use serde::Serialize;
use serde_json::Value;

use crate::error::exit;

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let value: Value = serde_json::to_value(value).expect("report values serialize");
    let mut text = serde_json::to_string_pretty(&value).expect("values print");
    text.push('\n');
    text
}

pub fn reports_json(reports: &[CheckReport]) -> String {
    if reports.is_empty() {
        return "[]\n".to_string();
    }
    to_json(reports)
}

/// 0 when every report is Pass, Vacuous or Unsupported; 1 on any Fail.
pub fn reports_exit_code(reports: &[CheckReport]) -> i32 {
    if suite_passed(reports) {
        exit::OK
    } else {
        exit::FAIL
    }
}
