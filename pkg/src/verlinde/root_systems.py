"""Exact data for the irreducible root systems A-G.

Everything lives in the fundamental-weight basis: a weight is a tuple of
integers (c_1, ..., c_rank) standing for sum(c_i * omega_i), so the weight
lattice is literally Z^rank.  The invariant inner product is normalized so
that long roots have squared length 2; with that normalization the Gram
matrix of the fundamental weights is diag(d) * cartan^-1, where d_j is half
the squared length of the j-th simple root.  All arithmetic is exact
(fractions.Fraction); nothing in this package touches floats.

Node orderings follow the common plate conventions: chains 1..n for the
classical series with the short node last in B and the long node last in C,
the two fork nodes last in D, the branch node of E_n attached to node 4,
nodes 3 and 4 short in F_4, node 1 short in G_2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

Weight = tuple[int, ...]

SERIES_RANK_RANGES = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True, order=True)
class LieType:
    """An admissible simple type, e.g. LieType('E', 8)."""

    series: str
    rank: int

    def __post_init__(self):
        if self.series not in SERIES_RANK_RANGES:
            raise ValueError(f"unknown series {self.series!r}; expected one of A-G")
        lo, hi = SERIES_RANK_RANGES[self.series]
        if self.rank < lo or (hi is not None and self.rank > hi):
            bound = f">= {lo}" if hi is None else f"in [{lo}, {hi}]"
            raise ValueError(f"{self.series}_{self.rank} is not a simple type (rank must be {bound})")

    def __str__(self):
        return f"{self.series}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "LieType":
        text = text.strip()
        if len(text) < 2 or not text[1:].lstrip("_").isdigit():
            raise ValueError(f"cannot parse Lie type from {text!r} (expected e.g. 'A3' or 'E_8')")
        return cls(text[0].upper(), int(text[1:].lstrip("_")))


@dataclass(frozen=True)
class RootSystem:
    """Immutable exact data for one simple type.

    cartan[i][j] is the pairing of the i-th simple coroot with the j-th
    simple root, so column j holds the fundamental-weight coordinates of
    alpha_j.  highest_root likewise holds fundamental-weight coordinates.
    theta_pairings[i] = <theta, omega_i> (a positive integer: theta is long,
    hence pairs integrally with the whole weight lattice).  coxeter_number
    is 1 + <theta, rho>, the smallest level whose open alcove contains a
    lattice point.
    """

    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[Fraction, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    highest_root: Weight
    marks: tuple[int, ...]
    theta_pairings: tuple[int, ...]
    connection_index: int
    coxeter_number: int

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def gram_denominator(self) -> int:
        """lcm of the denominators of the Gram entries; divides f * lcm(denom d_j)."""
        return lcm(*(x.denominator for row in self.gram for x in row))


def _dynkin_data(lie_type: LieType):
    """Edges, symmetrizers and highest-root marks for one type."""
    n = lie_type.rank
    chain = [(i, i + 1) for i in range(n - 1)]
    one = Fraction(1)
    half = Fraction(1, 2)
    if lie_type.series == "A":
        return chain, [one] * n, [1] * n
    if lie_type.series == "B":
        return chain, [one] * (n - 1) + [half], [1] + [2] * (n - 1)
    if lie_type.series == "C":
        return chain, [half] * (n - 1) + [one], [2] * (n - 1) + [1]
    if lie_type.series == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        return edges, [one] * n, [1] + [2] * (n - 3) + [1, 1]
    if lie_type.series == "E":
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        edges += [(i, i + 1) for i in range(5, n - 1)]
        marks = {6: [1, 2, 2, 3, 2, 1], 7: [2, 2, 3, 4, 3, 2, 1], 8: [2, 3, 4, 6, 5, 4, 3, 2]}[n]
        return edges, [one] * n, marks
    if lie_type.series == "F":
        return chain, [one, one, half, half], [2, 3, 4, 2]
    # G_2: short node first
    return [(0, 1)], [Fraction(1, 3), one], [3, 2]


@lru_cache(maxsize=None)
def build_root_system(lie_type: LieType) -> RootSystem:
    """Construct and cache the exact root-system data for an admissible type."""
    edges, d, marks = _dynkin_data(lie_type)
    n = lie_type.rank
    cartan = [[0] * n for _ in range(n)]
    for i in range(n):
        cartan[i][i] = 2
    for i, j in edges:
        # simple roots joined by an edge pair to -max of the two lengths
        for a, b in ((i, j), (j, i)):
            entry = -max(d[a], d[b]) / d[a]
            assert entry.denominator == 1
            cartan[a][b] = int(entry)

    inverse, det = _invert(cartan)
    gram = tuple(tuple(d[i] * inverse[i][j] for j in range(n)) for i in range(n))

    theta = tuple(sum(cartan[i][j] * marks[j] for j in range(n)) for i in range(n))
    pairings = []
    for i in range(n):
        t = sum(gram[i][j] * theta[j] for j in range(n))
        if t.denominator != 1:
            raise ArithmeticError(f"highest root of {lie_type} pairs non-integrally with omega_{i + 1}")
        pairings.append(int(t))

    return RootSystem(
        lie_type=lie_type,
        cartan=tuple(tuple(row) for row in cartan),
        symmetrizers=tuple(d),
        gram=gram,
        highest_root=theta,
        marks=tuple(marks),
        theta_pairings=tuple(pairings),
        connection_index=abs(det),
        coxeter_number=1 + sum(pairings),
    )


def inner_product(rs: RootSystem, w1: Weight, w2: Weight) -> Fraction:
    """Exact invariant inner product of two weights (fundamental-weight coords)."""
    n = rs.rank
    if len(w1) != n or len(w2) != n:
        raise ValueError(f"weight length mismatch: expected rank {n}, got {len(w1)} and {len(w2)}")
    total = Fraction(0)
    for i in range(n):
        if w1[i]:
            row = rs.gram[i]
            total += w1[i] * sum(row[j] * w2[j] for j in range(n) if w2[j])
    return total


def theta_level(rs: RootSystem, a: Weight) -> int:
    """<theta, a>: the level of a weight against the highest root.  Always an integer."""
    if len(a) != rs.rank:
        raise ValueError(f"weight length mismatch: expected rank {rs.rank}, got {len(a)}")
    return sum(t * c for t, c in zip(rs.theta_pairings, a))


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[tuple[str, bool, str], ...]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    @property
    def failures(self) -> list[str]:
        return [f"{name}: {detail}" for name, passed, detail in self.checks if not passed]


def validate(rs: RootSystem) -> ValidationReport:
    """Re-derive every structural invariant from the stored data and report each check."""
    n = rs.rank
    checks = []

    def check(name, passed, detail=""):
        checks.append((name, bool(passed), detail))

    sym = all(rs.symmetrizers[i] * rs.cartan[i][j] == rs.symmetrizers[j] * rs.cartan[j][i]
              for i in range(n) for j in range(n))
    check("cartan-symmetrizable", sym)

    # <omega_i, alpha_j> = delta_ij d_j, with alpha_j read off column j of the Cartan matrix
    dual = all(
        sum(rs.gram[i][k] * rs.cartan[k][j] for k in range(n))
        == (rs.symmetrizers[j] if i == j else 0)
        for i in range(n) for j in range(n)
    )
    check("weights-dual-to-coroots", dual)

    check("gram-symmetric", all(rs.gram[i][j] == rs.gram[j][i] for i in range(n) for j in range(n)))

    minors_positive = True
    for k in range(1, n + 1):
        sub = [[rs.gram[i][j] for j in range(k)] for i in range(k)]
        if _determinant(sub) <= 0:
            minors_positive = False
            break
    check("gram-positive-definite", minors_positive)

    norm = inner_product(rs, rs.highest_root, rs.highest_root)
    check("long-root-norm", norm == 2, f"<theta,theta> = {norm}")

    pairings_ok = True
    for i in range(n):
        omega = tuple(1 if j == i else 0 for j in range(n))
        t = inner_product(rs, rs.highest_root, omega)
        if t.denominator != 1 or t <= 0 or t != rs.theta_pairings[i]:
            pairings_ok = False
    check("theta-pairings-positive-integers", pairings_ok)

    marks_ok = all(rs.theta_pairings[i] == rs.marks[i] * rs.symmetrizers[i] for i in range(n))
    check("theta-pairings-match-marks", marks_ok)

    level_rho = theta_level(rs, rs.rho)
    check("coxeter-number", level_rho == rs.coxeter_number - 1,
          f"<theta,rho> = {level_rho} vs h - 1 = {rs.coxeter_number - 1}")

    _, det = _invert([list(row) for row in rs.cartan])
    check("connection-index", abs(det) == rs.connection_index,
          f"|det cartan| = {abs(det)} vs f = {rs.connection_index}")

    denom_bound = rs.connection_index * lcm(*(d.denominator for d in rs.symmetrizers))
    check("gram-denominators", denom_bound % rs.gram_denominator == 0,
          f"lcm of gram denominators {rs.gram_denominator} must divide f*lcm(denom d) = {denom_bound}")

    return ValidationReport(tuple(checks))


def all_types(max_classical_rank: int = 4) -> list[LieType]:
    """Every admissible type with classical rank capped (handy for sweep grids)."""
    types = []
    for series in "ABCD":
        lo, _ = SERIES_RANK_RANGES[series]
        types.extend(LieType(series, r) for r in range(lo, max_classical_rank + 1))
    types.extend([LieType("G", 2), LieType("F", 4), LieType("E", 6), LieType("E", 7), LieType("E", 8)])
    return types


def _invert(rows) -> tuple[list[list[Fraction]], int]:
    """Gauss-Jordan inverse of a square integer matrix; returns (inverse, det)."""
    n = len(rows)
    aug = [[Fraction(rows[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular matrix")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
            det = -det
        det *= aug[col][col]
        inv_pivot = 1 / aug[col][col]
        aug[col] = [x * inv_pivot for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    assert det.denominator == 1
    return [row[n:] for row in aug], int(det)


def _determinant(rows) -> Fraction:
    n = len(rows)
    mat = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        for r in range(col + 1, n):
            if mat[r][col]:
                factor = mat[r][col] / mat[col][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[col])]
    return det
