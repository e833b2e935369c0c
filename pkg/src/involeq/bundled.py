"""The desk-scale instance grid used by the acceptance suite and the bundled files."""

from __future__ import annotations

from importlib import resources
from itertools import product

from .algebra import (
    EquationInstance,
    cyclic,
    enumerate_involutions,
    make_carrier,
    truncated_addition,
)

SEMIGROUPS = {
    "trivial": lambda: cyclic(1),
    "z2": lambda: cyclic(2),
    "z3": lambda: cyclic(3),
    "z4": lambda: cyclic(4),
    "z5": lambda: cyclic(5),
    "trunc3": lambda: truncated_addition(3),
}

CARRIERS = {
    "dalembert": (("gf", 3), ("gf", 5), ("gf", 7)),
    "jensen": (("zmod", 3), ("zmod", 5), ("gf", 3), ("gf", 5), ("gf", 7)),
    "quadratic": (("zmod", 3), ("zmod", 5), ("gf", 3), ("gf", 5), ("gf", 7)),
}


def instance_grid(kinds=("dalembert", "jensen", "quadratic")):
    """Yield ``(label, instance)`` for every semigroup, every (sigma, tau) pair of
    its involutions and every carrier listed for the equation kind."""
    for kind in kinds:
        for sname, make in SEMIGROUPS.items():
            S = make()
            invs = enumerate_involutions(S)
            for (i, sigma), (j, tau) in product(enumerate(invs), repeat=2):
                for ckind, order in CARRIERS[kind]:
                    K = make_carrier(ckind, order)
                    label = f"{kind}-{sname}-s{i}t{j}-{ckind}{order}"
                    yield label, EquationInstance(S, sigma, tau, K, kind)


def instance_dir():
    """Directory holding the bundled ``*.inst`` files."""
    return resources.files("involeq") / "instances"
