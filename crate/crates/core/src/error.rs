use thiserror::Error;

use crate::grid::CellCoord;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("angle undefined for zero-length vector")]
    ZeroVector,
    #[error("cell {0} is out of bounds")]
    OutOfBounds(CellCoord),
    #[error("cannot ignite {0}: cell is an obstacle or out of bounds")]
    InvalidIgnition(CellCoord),
    #[error("sensor deployment infeasible: sensor {placed} of {requested} rejected {attempts} times in a row")]
    InfeasibleDeployment {
        placed: usize,
        requested: usize,
        attempts: usize,
    },
    #[error("sensor network is empty")]
    EmptyNetwork,
    #[error("search area needs at least one anchor")]
    NoAnchors,
    #[error("search area is empty")]
    EmptyArea,
    #[error("invalid path endpoint {0}: out of bounds or obstacle")]
    InvalidEndpoint(CellCoord),
    #[error("no alerting sensors in world")]
    NoAlerts,
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("scenario generation failed: {0}")]
    Scenario(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Config(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
