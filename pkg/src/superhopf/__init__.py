"""Exact Hopf superalgebras of symmetric and quasi-symmetric functions in superspace."""

from .combinatorics import DottedComposition, SuperPartition
from .linear import Element, Tensor, tensor
from .slambda import SymSuper, e, et, from_e, m, to_e
from .snsym import H, NSymSuper
from .sqsym import M, QSymSuper, include_lambda, is_symmetric
from .superpoly import DualNumber, SuperPolynomial

__all__ = [
    "DottedComposition",
    "DualNumber",
    "Element",
    "H",
    "M",
    "NSymSuper",
    "QSymSuper",
    "SuperPartition",
    "SuperPolynomial",
    "SymSuper",
    "Tensor",
    "e",
    "et",
    "from_e",
    "include_lambda",
    "is_symmetric",
    "m",
    "tensor",
    "to_e",
]
