"""One-dimensional CohFTs: coordinates, their bijections and the tensor product."""

from .conversions import (
    b_to_c,
    b_to_s,
    c_to_b,
    explicit_b_from_c,
    explicit_c_from_b,
    s_to_b,
)
from .coords import (
    CohftRecord,
    PotentialCoeffs,
    SCoords,
    UCoeffs,
    decode_coords,
    encode_coords,
    read_coords,
)
from .tensor import (
    explicit_tensor_laws,
    laplace_identity_check,
    potential_from_s,
    random_potential,
    random_rational,
    random_s,
    tensor_product,
)

__all__ = [
    "CohftRecord",
    "PotentialCoeffs",
    "SCoords",
    "UCoeffs",
    "b_to_c",
    "b_to_s",
    "c_to_b",
    "decode_coords",
    "encode_coords",
    "explicit_b_from_c",
    "explicit_c_from_b",
    "explicit_tensor_laws",
    "laplace_identity_check",
    "potential_from_s",
    "random_potential",
    "random_rational",
    "random_s",
    "read_coords",
    "s_to_b",
    "tensor_product",
]
