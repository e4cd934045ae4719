//! Published reference statistics for the traditional-convention datasets,
//! shown next to measured values by `stats --compare-reference`.

use lambda_forge_core::gen::{LambdaSetKind, Task};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RefStats {
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub stddev: f64,
}

const fn s(min: f64, max: f64, mean: f64, stddev: f64) -> RefStats {
    RefStats { min, max, mean, stddev }
}

/// Input token counts, traditional convention.
pub const INPUT_SIZES: [(Task, LambdaSetKind, RefStats); 7] = [
    (Task::Obr, LambdaSetKind::Random, s(5.0, 249.0, 127.2, 64.99)),
    (Task::Obr, LambdaSetKind::ClosedBool, s(9.0, 193.0, 97.6, 26.76)),
    (Task::Obr, LambdaSetKind::OpenBool, s(5.0, 181.0, 66.46, 21.73)),
    (Task::Obr, LambdaSetKind::Mixed, s(5.0, 249.0, 86.93, 46.56)),
    (Task::Mbr, LambdaSetKind::ClosedBool, s(9.0, 193.0, 97.55, 26.75)),
    (Task::Mbr, LambdaSetKind::OpenBool, s(5.0, 181.0, 66.46, 21.72)),
    (Task::Mbr, LambdaSetKind::Mixed, s(5.0, 181.0, 77.96, 28.02)),
];

/// Reductions per source term; the mixed row covers the boolean sources
/// only.
pub const REDUCTIONS: [(LambdaSetKind, RefStats); 3] = [
    (LambdaSetKind::ClosedBool, s(3.0, 100.0, 18.8, 12.22)),
    (LambdaSetKind::OpenBool, s(1.0, 100.0, 18.88, 10.42)),
    (LambdaSetKind::Mixed, s(2.0, 100.0, 18.82, 11.32)),
];

pub fn input_sizes(task: Task, kind: LambdaSetKind) -> Option<RefStats> {
    INPUT_SIZES
        .iter()
        .find(|(t, k, _)| *t == task && *k == kind)
        .map(|(_, _, r)| *r)
}

/// Reductions for a dataset kind. Mixed one-step sets include random terms,
/// which the reference row does not cover.
pub fn reductions(task: Task, kind: LambdaSetKind) -> Option<RefStats> {
    if task == Task::Obr && kind == LambdaSetKind::Mixed {
        return None;
    }
    REDUCTIONS.iter().find(|(k, _)| *k == kind).map(|(_, r)| *r)
}

/// Relative deviation `|measured - reference| / reference`.
pub fn relative_error(measured: f64, reference: f64) -> f64 {
    (measured - reference).abs() / reference.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        assert_eq!(input_sizes(Task::Obr, LambdaSetKind::ClosedBool).unwrap().max, 193.0);
        assert_eq!(input_sizes(Task::Mbr, LambdaSetKind::Random), None);
        assert_eq!(reductions(Task::Obr, LambdaSetKind::ClosedBool).unwrap().mean, 18.8);
        assert_eq!(reductions(Task::Obr, LambdaSetKind::Random), None);
        assert_eq!(reductions(Task::Obr, LambdaSetKind::Mixed), None);
        assert_eq!(reductions(Task::Mbr, LambdaSetKind::Mixed).unwrap().min, 2.0);
        assert!((relative_error(110.0, 100.0) - 0.1).abs() < 1e-12);
    }
}
