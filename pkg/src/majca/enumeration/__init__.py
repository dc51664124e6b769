from majca.enumeration.bruteforce import enumerate_bruteforce
from majca.enumeration.canonical import CanonicalForm, canonicalize, symmetry_orbit
from majca.enumeration.patterns import (
    GeneratorSet,
    enumerate_from_patterns,
    generate_patterns,
)

__all__ = [
    "CanonicalForm",
    "GeneratorSet",
    "canonicalize",
    "enumerate_bruteforce",
    "enumerate_from_patterns",
    "generate_patterns",
    "symmetry_orbit",
]
