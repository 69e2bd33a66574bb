"""Cocycles of a finitely presented group with values in a Z-lattice module.

A cocycle is stored by its values on generators; everything else follows
from u(gh) = u(g) + g u(h) and u(g^-1) = -g^-1 u(g).  Z^1 is the kernel of
the integer system obtained by expanding every relator, B^1 is spanned by
the coboundaries of basis vectors, and H^1 = Z^1 / B^1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import GenusMismatch, NotACocycle, NotAdaptedToS, NotProportional, UnknownGenerator, UnsupportedGenus
from .intlinalg import AbelianInvariants, IntMatrix, Vector, kernel_basis, quotient_decomposition, rank
from .presentation import Presentation, Word, concat, invert
from .symplectic import Representation, basis_vector, curve_system, humphries_names
from .wajnryb import alpha_twist_word


def _add(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def _sub(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


@dataclass(frozen=True, eq=True)
class CocycleAssignment:
    """Values u(s) for each generator s, kept in generator order."""

    values: Mapping[str, Vector]
    genus: int | None = None

    def __post_init__(self):
        vals = {k: tuple(int(x) for x in v) for k, v in self.values.items()}
        lengths = {len(v) for v in vals.values()}
        if len(lengths) > 1:
            raise GenusMismatch(f"cocycle values of different lengths {sorted(lengths)}")
        if self.genus is not None and lengths and lengths != {2 * self.genus}:
            raise GenusMismatch(f"genus {self.genus} needs vectors of length {2 * self.genus}")
        object.__setattr__(self, "values", vals)

    def __getitem__(self, name: str) -> Vector:
        try:
            return self.values[name]
        except KeyError:
            raise UnknownGenerator(f"cocycle has no value for {name!r}") from None

    @property
    def generators(self) -> tuple[str, ...]:
        return tuple(self.values)

    @property
    def dim(self) -> int:
        return len(next(iter(self.values.values()), ()))

    def __add__(self, other: "CocycleAssignment") -> "CocycleAssignment":
        return CocycleAssignment({k: _add(v, other[k]) for k, v in self.values.items()}, self.genus)

    def __sub__(self, other: "CocycleAssignment") -> "CocycleAssignment":
        return CocycleAssignment({k: _sub(v, other[k]) for k, v in self.values.items()}, self.genus)

    def __neg__(self) -> "CocycleAssignment":
        return CocycleAssignment({k: tuple(-x for x in v) for k, v in self.values.items()}, self.genus)

    def is_zero(self) -> bool:
        return not any(any(v) for v in self.values.values())

    def flat(self, order: Sequence[str] | None = None) -> Vector:
        return tuple(x for k in (order or self.generators) for x in self[k])

    @classmethod
    def from_flat(cls, generators: Sequence[str], flat: Sequence[int], dim: int, genus=None):
        return cls({g: tuple(flat[i * dim:(i + 1) * dim]) for i, g in enumerate(generators)}, genus)

    @classmethod
    def zero(cls, rep: Representation) -> "CocycleAssignment":
        return cls({g: (0,) * rep.dim for g in rep.generators}, rep.genus)

    def to_json(self) -> dict:
        return {"genus": self.genus, "values": {k: list(v) for k, v in self.values.items()}}

    @classmethod
    def from_json(cls, data: dict) -> "CocycleAssignment":
        if not isinstance(data, dict) or not isinstance(data.get("values"), dict):
            raise ValueError("cocycle JSON needs a 'values' object")
        vals = {}
        for k, v in data["values"].items():
            if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
                raise ValueError(f"value for {k!r} is not a list of integers")
            vals[k] = tuple(v)
        return cls(vals, data.get("genus"))

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _check_context(u: CocycleAssignment, rep: Representation):
    missing = set(rep.generators) - set(u.values)
    if missing:
        raise UnknownGenerator(f"cocycle has no value for {sorted(missing)}")
    if u.dim != rep.dim:
        raise GenusMismatch(f"cocycle values of length {u.dim} for a {rep.dim}-dimensional module")


def evaluate(u: CocycleAssignment, rep: Representation, w: Word) -> Vector:
    """u(w) by folding the cocycle condition over the letters of w."""
    _check_context(u, rep)
    n = rep.dim
    v = (0,) * n
    P = IntMatrix.identity(n)
    values = [u[g] for g in rep.generators]
    for i, s in w:
        if s > 0:
            v = _add(v, P @ values[i])
            P = P @ rep.letter_matrix(i, 1)
        else:
            P = P @ rep.letter_matrix(i, -1)
            v = _sub(v, P @ values[i])
    return v


def conjugate_value(u: CocycleAssignment, rep: Representation, g: Word, h: Word) -> Vector:
    """u(g h g^-1) computed as (1 - g h g^-1) u(g) + g u(h)."""
    ug = evaluate(u, rep, g)
    uh = evaluate(u, rep, h)
    conj = rep.word_matrix(concat(g, h, invert(g)))
    return _add(_sub(ug, conj @ ug), rep.word_matrix(g) @ uh)


def _aligned(p: Presentation, rep: Representation) -> Representation:
    if rep.generators == p.generators:
        return rep
    return rep.reordered(p.generators)


def relator_blocks(r: Word, rep: Representation) -> dict[int, IntMatrix]:
    """Coefficient matrix of each generator's unknown in the expansion of u(r)."""
    n = rep.dim
    P = IntMatrix.identity(n)
    blocks: dict[int, IntMatrix] = {}
    for i, s in r:
        if s > 0:
            blocks[i] = blocks[i] + P if i in blocks else P
            P = P @ rep.letter_matrix(i, 1)
        else:
            P = P @ rep.letter_matrix(i, -1)
            blocks[i] = blocks[i] - P if i in blocks else -P
    return blocks


def relator_system(p: Presentation, rep: Representation) -> IntMatrix:
    """The (relators * n) x (generators * n) integer matrix whose kernel is Z^1."""
    rep = _aligned(p, rep)
    n, r = rep.dim, len(p.generators)
    rows = []
    for rel in p.relators:
        block_rows = [[0] * (r * n) for _ in range(n)]
        for j, B in relator_blocks(rel, rep).items():
            for a in range(n):
                block_rows[a][j * n:(j + 1) * n] = B.row(a)
        rows.extend(block_rows)
    return IntMatrix._wrap(rows, len(rows), r * n)


def coboundary(rep: Representation, m: Sequence[int]) -> CocycleAssignment:
    """The cocycle g -> m - g m."""
    if len(m) != rep.dim:
        raise GenusMismatch(f"vector of length {len(m)} for a {rep.dim}-dimensional module")
    return CocycleAssignment({g: _sub(m, M @ m) for g, M in zip(rep.generators, rep.matrices)}, rep.genus)


@dataclass(frozen=True)
class RelatorCheck:
    relator_index: int
    tag: str
    ok: bool
    residue: Vector

    def to_json(self) -> dict:
        return {"relator_index": self.relator_index, "tag": self.tag, "ok": self.ok,
                "residue": list(self.residue)}


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[RelatorCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[RelatorCheck]:
        return [c for c in self.checks if not c.ok]

    def __bool__(self):
        return self.ok

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.checks]


def verify_cocycle(u: CocycleAssignment, p: Presentation, rep: Representation) -> VerificationReport:
    rep = _aligned(p, rep)
    checks = []
    for k, (tag, r) in enumerate(zip(p.tags, p.relators)):
        res = evaluate(u, rep, r)
        checks.append(RelatorCheck(k, tag, not any(res), res))
    return VerificationReport(tuple(checks))


# -- H^1 -------------------------------------------------------------------


@dataclass(frozen=True)
class CohomologyResult:
    h1: AbelianInvariants
    z1_rank: int
    b1_rank: int
    z1_basis: tuple[CocycleAssignment, ...]
    generator_cocycles: tuple[CocycleAssignment, ...]

    def to_json(self) -> dict:
        out = self.h1.to_dict()
        out["z1_rank"] = self.z1_rank
        out["b1_rank"] = self.b1_rank
        out["generator_cocycles"] = [c.to_json() for c in self.generator_cocycles]
        return out


def _is_humphries(rep: Representation) -> bool:
    g = rep.genus
    if g is None or g < 1 or rep.generators != humphries_names(g):
        return False
    from .symplectic import humphries_representation
    return rep.matrices == humphries_representation(g)[1].matrices


def _normalize_sign(u: CocycleAssignment) -> CocycleAssignment:
    first = next((x for x in u.flat() if x), 0)
    return -u if first < 0 else u


def compute_h1(p: Presentation, rep: Representation) -> CohomologyResult:
    rep = _aligned(p, rep)
    n, gens = rep.dim, p.generators
    A = relator_system(p, rep)
    z1 = kernel_basis(A)
    b1_gens = [coboundary(rep, [int(i == k) for i in range(n)]).flat(gens) for k in range(n)]
    dec = quotient_decomposition(z1, b1_gens)
    b1_rank = rank(dec.coordinates) if b1_gens else 0

    def lift(coords):
        flat = [sum(c * z[t] for c, z in zip(coords, z1)) for t in range(len(gens) * n)]
        return CocycleAssignment.from_flat(gens, flat, n, rep.genus)

    reps = [lift(c) for c in dec.free_generators]
    if reps and _is_humphries(rep) and rep.genus >= 3:
        reps = [adapt_to_Sprime(adapt_to_S(u, rep)[0], rep)[0] for u in reps]
    reps = [_normalize_sign(u) for u in reps]
    z1_basis = tuple(CocycleAssignment.from_flat(gens, z, n, rep.genus) for z in z1)
    return CohomologyResult(dec.invariants, len(z1), b1_rank, z1_basis, tuple(reps))


# -- the mapping class group cocycle and its normalizations ---------------------


def theorem1_cocycle(g: int) -> CocycleAssignment:
    """Zero on c1, b1, ..., cg, bg and a2 on the generator a2."""
    if g < 3:
        raise UnsupportedGenus(f"the explicit cocycle needs genus >= 3, got {g}")
    zero = (0,) * (2 * g)
    vals = {name: zero for name in humphries_names(g)}
    vals["a2"] = basis_vector(g, "a2")
    return CocycleAssignment(vals, g)


def _genus(rep: Representation) -> int:
    if rep.genus is None or rep.generators != humphries_names(rep.genus):
        raise UnknownGenerator("adaptation needs the Humphries representation")
    return rep.genus


def alpha_value(u: CocycleAssignment, rep: Representation, j: int) -> Vector:
    return evaluate(u, rep, alpha_twist_word(_genus(rep), j))


def adapt_to_S(u: CocycleAssignment, rep: Representation, presentation: Presentation | None = None):
    """Add the coboundary that kills the [eta]-coefficient of u(tau_eta) for
    every alpha_j and beta_j.  Returns (adapted cocycle, shift vector m).

    When ``presentation`` is given, u is verified against it first and
    NotACocycle is raised on failure.
    """
    g = _genus(rep)
    if presentation is not None and not verify_cocycle(u, presentation, rep):
        raise NotACocycle("input does not satisfy every relator of the presentation")
    shift = [0] * (2 * g)
    for j in range(1, g + 1):
        x = alpha_value(u, rep, j)[2 * j - 2]
        y = u[f"b{j}"][2 * j - 1]
        shift[2 * j - 2] += y
        shift[2 * j - 1] -= x
    shift = tuple(shift)
    return u + coboundary(rep, shift), shift


def is_adapted_to_S(u: CocycleAssignment, rep: Representation) -> bool:
    g = _genus(rep)
    return all(
        alpha_value(u, rep, j)[2 * j - 2] == 0 and u[f"b{j}"][2 * j - 1] == 0
        for j in range(1, g + 1)
    )


def gamma_coefficients(u: CocycleAssignment, rep: Representation) -> dict[int, int]:
    """The integers q_j with u(tau_gamma_j) = q_j c_j, for j >= 2."""
    g = _genus(rep)
    cs = curve_system(g)
    qs = {}
    for j in range(2, g + 1):
        val = u[f"c{j}"]
        c = cs[f"c{j}"]
        q = val[2 * j - 4]  # c_j has +1 at a_{j-1}
        if tuple(q * x for x in c) != val:
            raise NotProportional(f"u(c{j}) = {val} is not a multiple of c{j}")
        qs[j] = q
    return qs


def adapt_to_Sprime(u: CocycleAssignment, rep: Representation):
    """Starting from an S-adapted cocycle, add the coboundary of sum r_j b_j so
    that u vanishes on every b_j and c_j.  Returns (adapted, shift)."""
    g = _genus(rep)
    if not is_adapted_to_S(u, rep):
        raise NotAdaptedToS("cocycle is not adapted to S; run adapt_to_S first")
    qs = gamma_coefficients(u, rep)
    r = [0] * (g + 1)
    for j in range(2, g + 1):
        r[j] = r[j - 1] + qs[j]
    shift = tuple(r[k // 2 + 1] if k % 2 else 0 for k in range(2 * g))
    return u + coboundary(rep, shift), shift
