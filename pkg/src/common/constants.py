TRACE_HANKEL_STR = "TraceHankel"

RATIONAL_FIELD_NAME = "rational"
PRIME_FIELD_PREFIX = "gf:"

GF_CAVEAT = (
    "distinct-eigenvalue count valid only if no multiplicity is divisible by p "
    "and the characteristic polynomial is separable"
)
