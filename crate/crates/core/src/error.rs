use thiserror::Error;

/// Errors raised by the geometry kernel, the optimizers and the samplers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("malformed polygon file: {0}")]
    Parse(String),

    #[error("{name} = {value} is outside its domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("polygon is not centrally symmetric: {0}")]
    NotCentrallySymmetric(String),

    #[error("sandwich order violated: body area {body} vs tile area {tile}")]
    SandwichOrder { body: f64, tile: f64 },

    #[error("input too large for exhaustive search: {0}")]
    Size(String),

    #[error("row {index}: {source}")]
    Row { index: u64, source: Box<Error> },

    #[error(
        "failed to generate a polygon for seed {seed}, index {index} after {attempts} attempts"
    )]
    GenerationFailure {
        seed: u64,
        index: u64,
        attempts: u32,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_unit_interval(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            value,
            domain: "[0, 1]",
        })
    }
}
