use thiserror::Error;

/// Failures of the truncated power series ring and its building blocks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("{given} coefficients do not fit a series of order {order}")]
    Arity { order: usize, given: usize },
    #[error("constant term is zero; the series is not a unit")]
    NotAUnit,
    #[error("pole: {0}")]
    Pole(String),
    #[error("substitution x -> r*q^0 would need every coefficient")]
    Substitution,
    #[error("formal sum does not converge: {stalled} consecutive terms failed to raise the valuation (term index {index})")]
    NonConvergentSum { stalled: usize, index: usize },
}

/// Failures of the enumeration oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("enumeration budget exceeded: more than {budget} partitions of {n}")]
    BudgetExceeded { n: usize, budget: u64 },
    #[error("weight expression: {0}")]
    WeightSpec(String),
    #[error("weight {0} is undefined for this partition (zero to a negative power)")]
    WeightUndefined(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("not a rational: {0:?}")]
    Rational(String),
    #[error("not a parameter value (expected p/q or p/q*q^m): {0:?}")]
    ParamValue(String),
    #[error("unknown parameter name: {0:?}")]
    ParamName(String),
    #[error("expected name=value, got {0:?}")]
    Assignment(String),
}

/// Everything a side builder or a verification run can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("unknown identity id: {0}")]
    UnknownId(String),
    #[error("identity {id} has no side {side}")]
    NoSuchSide { id: String, side: usize },
    #[error("binding error: {0}")]
    Binding(String),
}
