use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    /// The 8x8 matrix does not split into the [[U, V], [-V, U]] block form,
    /// so no complex 4x4 matrix can faithfully represent it.
    #[error("block structure violated at block ({row}, {col}): {detail}")]
    BlockStructure {
        row: usize,
        col: usize,
        detail: String,
    },

    /// A group sampler is disabled because pulling elements back through the
    /// inverse map produced points that fail the exact membership predicate.
    #[error("sampler unavailable for {group}: {reason}")]
    SamplerUnavailable { group: String, reason: String },

    #[error("jacobian rows are numerically dependent; cannot project")]
    SingularJacobian,

    #[error("newton projection did not reach tolerance within {max_iter} iterations")]
    NoConvergence { max_iter: usize },

    #[error("manifold sampler gave up after {retries} rejected starts")]
    SamplerExhausted { retries: usize },

    #[error("vector is not tangent at the given point: {detail}")]
    NotTangent { detail: String },

    /// A point handed to a manifold operation fails the level-set membership
    /// check (|x|^2 = 1 and x.conj(x) = 0, exactly or within tolerance).
    #[error("point is not on the manifold: {detail}")]
    OffManifold { detail: String },

    #[error("sign-repair search needs budget {needed}, got {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
