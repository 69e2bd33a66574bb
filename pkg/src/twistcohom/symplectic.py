"""H_1 of the genus-g surface with one boundary component, and the action of Dehn twists.

Homology vectors are plain integer tuples in the ordered basis
(a1, b1, a2, b2, ..., ag, bg), so coordinate 2j-2 is a_j and 2j-1 is b_j.
Matrices act on column vectors; a word s1 s2 ... sk acts as
rho(s1) rho(s2) ... rho(sk), i.e. its leftmost letter is applied last.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

from .errors import GenusMismatch, IndexOutOfRange, InvalidGenus, UnknownGenerator
from .intlinalg import IntMatrix, Vector
from .presentation import Word


def _genus_of(m: Sequence[int]) -> int:
    if len(m) % 2:
        raise GenusMismatch(f"vector of odd length {len(m)} is not a homology vector")
    return len(m) // 2


def basis_vector(g: int, name: str) -> Vector:
    """Coordinates of a_j or b_j, e.g. ``basis_vector(3, "b2")``."""
    kind, j = name[0], int(name[1:])
    if kind not in "ab" or not 1 <= j <= g:
        raise IndexOutOfRange(f"no basis element {name!r} in genus {g}")
    v = [0] * (2 * g)
    v[2 * (j - 1) + (kind == "b")] = 1
    return tuple(v)


def vec(g: int, **coeffs: int) -> Vector:
    """Build a vector from keyword coefficients: ``vec(3, a1=1, a2=-1, a3=1)``."""
    v = [0] * (2 * g)
    for name, c in coeffs.items():
        v = [x + c * y for x, y in zip(v, basis_vector(g, name))]
    return tuple(v)


def format_vector(m: Sequence[int]) -> str:
    """Human-readable form like ``a1 - a2 + 2a3``."""
    terms = []
    for k, c in enumerate(m):
        if not c:
            continue
        name = f"{'ab'[k % 2]}{k // 2 + 1}"
        mag = "" if abs(c) == 1 else str(abs(c))
        terms.append(("-" if c < 0 else "+", f"{mag}{name}"))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, t in terms[1:]:
        out += f" {sign} {t}"
    return out


def intersection_form(m1: Sequence[int], m2: Sequence[int]) -> int:
    if len(m1) != len(m2):
        raise GenusMismatch(f"genus {len(m1) / 2} vs {len(m2) / 2}")
    _genus_of(m1)
    return sum(m1[k] * m2[k + 1] - m1[k + 1] * m2[k] for k in range(0, len(m1), 2))


def symplectic_form_matrix(g: int) -> IntMatrix:
    """J with m1^T J m2 = omega(m1, m2)."""
    J = [[0] * (2 * g) for _ in range(2 * g)]
    for j in range(g):
        J[2 * j][2 * j + 1] = 1
        J[2 * j + 1][2 * j] = -1
    return IntMatrix.from_rows(J, 2 * g)


def twist_matrix(c: Sequence[int]) -> IntMatrix:
    """Matrix of the transvection m -> m + omega(m, c) c."""
    n = len(c)
    _genus_of(c)
    # omega(e_k, c) as a row functional
    f = [0] * n
    for k in range(0, n, 2):
        f[k] = c[k + 1]
        f[k + 1] = -c[k]
    return IntMatrix.from_rows(
        [[int(i == j) + c[i] * f[j] for j in range(n)] for i in range(n)], n
    ) if n else IntMatrix.zeros(0, 0)


def iota(m: Sequence[int]) -> Vector:
    """Swap a_j <-> b_j coordinates."""
    out = list(m)
    for k in range(0, len(out), 2):
        out[k], out[k + 1] = out[k + 1], out[k]
    return tuple(out)


def projection(j: int, m: Sequence[int]) -> Vector:
    """Keep the a_j, b_j coordinates and zero the rest."""
    g = _genus_of(m)
    if not 1 <= j <= g:
        raise IndexOutOfRange(f"projection index {j} outside 1..{g}")
    return tuple(x if k // 2 == j - 1 else 0 for k, x in enumerate(m))


def coprojection(j: int, m: Sequence[int]) -> Vector:
    p = projection(j, m)
    return tuple(x - y for x, y in zip(m, p))


# -- curves ------------------------------------------------------------------


def humphries_names(g: int) -> tuple[str, ...]:
    names = []
    for j in range(1, g + 1):
        names += [f"c{j}", f"b{j}"]
    if g >= 2:
        names.append("a2")
    return tuple(names)


@dataclass(frozen=True)
class CurveSystem:
    """Homology classes of the curves alpha_j, beta_j, gamma_j and the
    intersection pattern of the Humphries curves.

    Curves are named ``aj``, ``bj``, ``cj``; ``c1`` is the same curve as ``a1``.
    """

    genus: int
    classes: Mapping[str, Vector]
    generators: tuple[str, ...]
    intersecting: frozenset[frozenset[str]]

    def intersections(self, x: str, y: str) -> int:
        for n in (x, y):
            if n not in self.generators:
                raise UnknownGenerator(f"{n!r} is not a Humphries curve in genus {self.genus}")
        return int(frozenset((x, y)) in self.intersecting)

    def __getitem__(self, name: str) -> Vector:
        return self.classes[name]


def curve_system(g: int) -> CurveSystem:
    if g < 1:
        raise InvalidGenus(f"genus must be >= 1, got {g}")
    classes = {}
    for j in range(1, g + 1):
        classes[f"a{j}"] = basis_vector(g, f"a{j}")
        classes[f"b{j}"] = basis_vector(g, f"b{j}")
    classes["c1"] = classes["a1"]
    for j in range(2, g + 1):
        classes[f"c{j}"] = tuple(x - y for x, y in zip(classes[f"a{j - 1}"], classes[f"a{j}"]))
    pairs = set()
    for j in range(1, g + 1):
        pairs.add(frozenset((f"c{j}", f"b{j}")))
        if j < g:
            pairs.add(frozenset((f"b{j}", f"c{j + 1}")))
    if g >= 2:
        pairs.add(frozenset(("a2", "b2")))
    return CurveSystem(g, classes, humphries_names(g), frozenset(pairs))


# -- representations -----------------------------------------------------------


@dataclass(frozen=True)
class Representation:
    """Integer matrices for each named generator, acting on column vectors.

    ``genus`` is set for representations on H_1 of a surface; general
    representations on Z^n leave it as None.
    """

    generators: tuple[str, ...]
    matrices: tuple[IntMatrix, ...]
    genus: int | None = None
    dim: int = field(init=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        mats = tuple(self.matrices)
        if len(gens) != len(mats):
            raise ValueError("one matrix per generator")
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator names")
        dims = {m.shape for m in mats}
        if len(dims) > 1:
            raise ValueError(f"matrices of different shapes {sorted(dims)}")
        if not mats:
            raise ValueError("a representation needs at least one generator")
        n, n2 = mats[0].shape
        if n != n2:
            raise ValueError("matrices must be square")
        if self.genus is not None and 2 * self.genus != n:
            raise GenusMismatch(f"genus {self.genus} needs {2 * self.genus}x{2 * self.genus} matrices")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "matrices", mats)
        object.__setattr__(self, "dim", n)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {g: i for i, g in enumerate(self.generators)}

    @cached_property
    def inverses(self) -> tuple[IntMatrix, ...]:
        return tuple(m.inverse() for m in self.matrices)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownGenerator(f"unknown generator {name!r}") from None

    def matrix(self, name: str) -> IntMatrix:
        return self.matrices[self.index(name)]

    def letter_matrix(self, i: int, sign: int) -> IntMatrix:
        if not 0 <= i < len(self.matrices):
            raise UnknownGenerator(f"generator index {i} outside representation")
        return self.matrices[i] if sign > 0 else self.inverses[i]

    def word_matrix(self, w: Word) -> IntMatrix:
        P = IntMatrix.identity(self.dim)
        for i, s in w:
            P = P @ self.letter_matrix(i, s)
        return P

    def reordered(self, names: Sequence[str]) -> "Representation":
        if sorted(names) != sorted(self.generators):
            raise UnknownGenerator(f"representation generators {self.generators} do not match {tuple(names)}")
        return Representation(tuple(names), tuple(self.matrix(n) for n in names), self.genus)

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "generators": [{"name": n, "matrix": m.tolist()} for n, m in zip(self.generators, self.matrices)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Representation":
        gens = data["generators"]
        mats = []
        for entry in gens:
            rows = entry["matrix"]
            mats.append(IntMatrix.from_rows(rows, len(rows[0]) if rows else 0))
        return cls(tuple(e["name"] for e in gens), tuple(mats), data.get("genus"))

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def humphries_representation(g: int) -> tuple[CurveSystem, Representation]:
    """Twist matrices for the Humphries generators c1, b1, ..., cg, bg, a2."""
    cs = curve_system(g)
    mats = tuple(twist_matrix(cs[name]) for name in cs.generators)
    return cs, Representation(cs.generators, mats, g)


def act(rep: Representation, w: Word, m: Sequence[int]) -> Vector:
    if len(m) != rep.dim:
        raise GenusMismatch(f"vector of length {len(m)} for a {rep.dim}-dimensional representation")
    v = tuple(m)
    for i, s in reversed(w.letters):
        v = rep.letter_matrix(i, s) @ v
    return v


def is_symplectic(m: IntMatrix) -> bool:
    g = _genus_of(range(m.rows))
    J = symplectic_form_matrix(g)
    return m.T @ J @ m == J
