"""Exact algebra for the error groups E^nu_n, Pauli groups and braid representations."""

from .braid import BraidRepSpec, BraidWord, build_r_matrices, ghz_search, image_group
from .cyclotomic import CycScalar
from .egroup import EElement, enumerate_group, rep_kernel
from .exact_matrix import ExactMatrix
from .group_engine.classify import classify_e, decompose_e
from .pauli import PauliString

__all__ = [
    "BraidRepSpec",
    "BraidWord",
    "CycScalar",
    "EElement",
    "ExactMatrix",
    "PauliString",
    "build_r_matrices",
    "classify_e",
    "decompose_e",
    "enumerate_group",
    "ghz_search",
    "image_group",
    "rep_kernel",
]
