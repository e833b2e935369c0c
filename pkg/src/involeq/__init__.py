"""Exhaustive solving and verification of d'Alembert, Jensen and quadratic type
functional equations with involutions over finite commutative semigroups."""

from .algebra import (
    Carrier,
    EquationInstance,
    FiniteSemigroup,
    Involution,
    TableFun2,
    build_semigroup,
    cyclic,
    enumerate_involutions,
    identity_involution,
    make_carrier,
    negation,
    quadratic_extension,
    square_pair_involution,
    truncated_addition,
)
from .errors import (
    AlgebraError,
    BudgetExceeded,
    CarrierMismatch,
    EvenCharacteristic,
    EvenOrder,
    InstanceParseError,
    NotASolution,
    NotAssociative,
    NotCommutative,
    NotInvolution,
    SigmaTauMismatch,
)
from .families import dalembert_family, family, jensen_family, quadratic_family
from .instance import format_instance, load_instance, parse_instance
from .morphisms import enumerate_additive, enumerate_biadditive, enumerate_multiplicative
from .solver import brute_force, seeded_brute_force, solve
from .verify import (
    check_equation,
    check_jensen_invariance,
    check_sine_addition,
    check_solution_symmetry,
    diagonal_reduce,
    membership_dalembert,
    quadratic_decompose,
)

__version__ = "0.1.0"
