use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("quadratic elements with different defining relations (theta^2 = {0} vs {1})")]
    DeltaMismatch(String, String),
    #[error("degenerate binary form: discriminant is zero")]
    DegenerateCartan,
    #[error("binary form is identically zero")]
    ZeroForm,
    #[error("polynomial is not a constant times a square")]
    NotAPerfectSquare,
    #[error("no inverse: element is a zero divisor")]
    NotInvertible,
    #[error("could not factor residue {0} by trial division")]
    UnfactoredResidue(String),
    #[error("forms live on different numbers of generators ({0} vs {1})")]
    ArityMismatch(usize, usize),
    #[error("forms have different degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("form is not homogeneous in degree")]
    MixedDegree,
    #[error("dimension {0} out of range")]
    DimensionOutOfRange(usize),
    #[error("form does not lie in the span of the degree-two Hodge basis")]
    NotInB2,
    #[error("matrix is singular")]
    Singular,
    #[error("points are not distinct")]
    DegenerateInput,
    #[error("point does not lie on the invariant conic")]
    NotOnConic,
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("class is not on the cubic Z (G != 0)")]
    NotOnZ,
    #[error("class is on the singular locus S; use the Cayley pencil instead")]
    OnSingularLocus,
    #[error("class is not on the singular locus S")]
    NotOnS,
    #[error("class does not have rank two")]
    NotRankTwo,
    #[error("the two Cartan forms coincide")]
    IdenticalCartans,
    #[error("n must be nonzero")]
    ZeroN,
    #[error("Cartan form is not imaginary (discriminant {0} >= 0)")]
    NotImaginary(String),
    #[error("polarization is not invariant under the quadratic field")]
    NotWeilInvariant,
    #[error("alternating form is degenerate")]
    DegenerateForm,
    #[error("expected integer coordinates")]
    NotIntegral,
    #[error("Smith divisors do not come in equal pairs")]
    UnpairedDivisors,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
