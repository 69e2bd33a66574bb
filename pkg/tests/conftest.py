import sys
from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from twistcohom.cocycle import CocycleAssignment, compute_h1  # noqa: E402
from twistcohom.presentation import Word  # noqa: E402
from twistcohom.symplectic import humphries_representation  # noqa: E402
from twistcohom.wajnryb import wajnryb_presentation  # noqa: E402


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)


@lru_cache(maxsize=None)
def mcg(g):
    """(presentation, representation, H^1 result) for the mapping class group in genus g."""
    pres = wajnryb_presentation(g)
    _, rep = humphries_representation(g)
    return pres, rep, compute_h1(pres.presentation, rep)


@pytest.fixture(scope="session")
def mcg3():
    return mcg(3)


def words(n_generators, max_size=12):
    letter = st.tuples(st.integers(0, n_generators - 1), st.sampled_from([1, -1]))
    return st.lists(letter, max_size=max_size).map(lambda ls: Word(tuple(ls)))


def vectors(dim, bound=6):
    return st.lists(st.integers(-bound, bound), min_size=dim, max_size=dim).map(tuple)


def int_matrices(max_dim=6, bound=9):
    return st.integers(0, max_dim).flatmap(
        lambda r: st.integers(0, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-bound, bound), min_size=c, max_size=c), min_size=r, max_size=r
            ).map(lambda rows: (rows, c))
        )
    )


def combine(basis, coeffs):
    """Integer combination of cocycle assignments."""
    gens, dim, genus = basis[0].generators, basis[0].dim, basis[0].genus
    flats = [b.flat() for b in basis]
    flat = [sum(c * f[t] for c, f in zip(coeffs, flats)) for t in range(len(gens) * dim)]
    return CocycleAssignment.from_flat(gens, flat, dim, genus)


def z1_elements(g, bound=3):
    """Random integer combinations of the Z^1 basis in genus g."""
    basis = mcg(g)[2].z1_basis
    return st.lists(st.integers(-bound, bound), min_size=len(basis), max_size=len(basis)).map(
        lambda cs: combine(basis, cs)
    )
