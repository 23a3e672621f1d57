// SPDX-License-Identifier: Apache-2.0

use std::process::ExitCode;

use girthpath::io::ParseError;
use girthpath::keylemma::KeyLemmaError;
use girthpath::lll::LllError;
use girthpath::SolverError;
use thiserror::Error;

/// Failures mapped onto the exit-code contract: 1 assertion failure, 2 usage
/// or parse error, 3 resource or scale limit.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Assertion(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Scale(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Assertion(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Scale(_) => 3,
        })
    }

    pub fn io(path: &str, err: std::io::Error) -> Self {
        CliError::Usage(format!("{path}: {err}"))
    }
}

impl From<ParseError> for CliError {
    fn from(err: ParseError) -> Self {
        CliError::Usage(format!("parse error: {err}"))
    }
}

impl From<SolverError> for CliError {
    fn from(err: SolverError) -> Self {
        match err {
            SolverError::TooLarge { .. } | SolverError::BudgetExceeded(_) => {
                CliError::Scale(err.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<KeyLemmaError> for CliError {
    fn from(err: KeyLemmaError) -> Self {
        match err {
            KeyLemmaError::Solver(e) => e.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<LllError> for CliError {
    fn from(err: LllError) -> Self {
        match err {
            LllError::NotConverged(_) => CliError::Scale(err.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}
