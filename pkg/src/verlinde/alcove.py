"""Lattice points in the open level-m fundamental alcove.

A weight a = sum(c_i * omega_i) lies in the open alcove at level m iff
every c_i >= 1 (strict dominance: positivity against all positive roots
reduces to positivity against the simple ones) and <theta, a> <= m - 1.
Since <theta, omega_i> are positive integers, the search region is a
simplex and a depth-first walk with an exact budget enumerates it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .root_systems import RootSystem, Weight


@dataclass(frozen=True)
class RegularWeightSet:
    level: int
    weights: tuple[Weight, ...]

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)


def enumerate_regular_weights(rs: RootSystem, m: int) -> RegularWeightSet:
    """All strictly dominant weights of level < m, in lexicographic order."""
    if m < 1:
        raise ValueError("level must be a positive integer")
    pairings = rs.theta_pairings
    slack = m - 1 - sum(pairings)  # budget left after the mandatory 1 in every coordinate
    if slack < 0:
        return RegularWeightSet(m, ())

    out: list[Weight] = []
    coords = [1] * rs.rank

    def walk(i: int, left: int):
        if i == rs.rank:
            out.append(tuple(coords))
            return
        step = pairings[i]
        extra = 0
        while extra * step <= left:
            coords[i] = 1 + extra
            walk(i + 1, left - extra * step)
            extra += 1
        coords[i] = 1

    walk(0, slack)
    return RegularWeightSet(m, tuple(out))


def count_regular_weights(rs: RootSystem, m: int) -> int:
    return len(enumerate_regular_weights(rs, m))
