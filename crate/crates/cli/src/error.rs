use std::fmt;

use orchard_core::geometry::input::InputError;
use orchard_core::Error;

/// Process exit statuses.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const FAILURE: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const NON_GENERIC: u8 = 3;
    pub const BUDGET: u8 = 4;
}

/// A failed command: message for stderr plus exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    pub fn parse(source: &str, e: &InputError) -> Self {
        Self::new(exit::PARSE, format!("{source}: {e}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonGeneric { .. } => exit::NON_GENERIC,
            Error::Budget(_) => exit::BUDGET,
            _ => exit::FAILURE,
        };
        let message = match &e {
            Error::NonGeneric { witness } => format!(
                "non-generic configuration: points {} are affinely dependent",
                braces(witness)
            ),
            other => other.to_string(),
        };
        CliError { code, message }
    }
}

/// `{0, 1, 2}`.
pub fn braces(items: &[usize]) -> String {
    let inner: Vec<String> = items.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}
