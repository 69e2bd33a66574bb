"""Wajnryb's presentation of the mapping class group over the Humphries generators."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidGenus, UnsupportedGenus
from .presentation import Presentation, Word, concat, invert, parse_word
from .symplectic import curve_system, humphries_names

DISJOINT = "disjointness"
BRAID = "braid"
CHAIN = "chain"
HYPERLANTERN = "hyperlantern"


@dataclass(frozen=True)
class WajnrybPresentation:
    genus: int
    presentation: Presentation

    @property
    def tags(self) -> tuple[str, ...]:
        return self.presentation.tags

    @property
    def generators(self) -> tuple[str, ...]:
        return self.presentation.generators

    @property
    def relators(self) -> tuple[Word, ...]:
        return self.presentation.relators

    def to_text(self) -> str:
        return self.presentation.to_text(
            header=[f"Wajnryb presentation, genus {self.genus}",
                    f"{len(self.generators)} generators, {len(self.relators)} relators"]
        )

    def to_json(self) -> dict:
        p = self.presentation
        return {
            "genus": self.genus,
            "generators": list(p.generators),
            "relators": [{"tag": t, "word": p.render(r)} for t, r in zip(p.tags, p.relators)],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _check_genus(g: int, *, minimum: int = 1):
    if g < 1:
        raise InvalidGenus(f"genus must be >= 1, got {g}")
    if g == 2 or g < minimum:
        raise UnsupportedGenus(
            f"genus {g} is not supported: the presentation is only available for g = 1 and g >= 3"
            if g == 2 else f"genus {g} is not supported here (need g >= {minimum})"
        )


def auxiliary_words(g: int) -> dict[str, Word]:
    """The words w, w1..w4, x1..x4 entering the chain and hyperlantern relations, fully expanded."""
    _check_genus(g, minimum=3)
    gens = humphries_names(g)

    def W(text):
        return parse_word(text, gens)

    a2 = W("a2")
    w = W("b2 c2 b1 c1 c1 b1 c2 b2")
    w1 = W("b2 c3 c2 b2")
    w2 = W("b1 c2 c1 b1")
    w3 = W("b3 c3")
    x1 = concat(invert(w1), a2, w1)
    x2 = concat(invert(w2), x1, w2)
    x3 = concat(invert(w3), x1, w3)
    w4 = concat(W("b3 c3 b2 c2 b1"), x3, W("c1^-1 b1^-1 c2^-1 b2^-1"))
    x4 = concat(w4, a2, invert(w4))
    return {"w": w, "w1": w1, "w2": w2, "w3": w3, "w4": w4,
            "x1": x1, "x2": x2, "x3": x3, "x4": x4}


def chain_relation(g: int) -> tuple[Word, Word]:
    """Both sides of (c1 b1 c2)^4 = a2 w a2 w^-1."""
    gens = humphries_names(g)
    w = auxiliary_words(g)["w"]
    a2 = parse_word("a2", gens)
    lhs = parse_word("c1 b1 c2", gens) ** 4
    rhs = concat(a2, w, a2, invert(w))
    return lhs, rhs


def hyperlantern_relation(g: int) -> tuple[Word, Word]:
    """Both sides of a2 x2 x1 = c1 c2 c3 x4."""
    gens = humphries_names(g)
    aux = auxiliary_words(g)
    lhs = concat(parse_word("a2", gens), aux["x2"], aux["x1"])
    rhs = concat(parse_word("c1 c2 c3", gens), aux["x4"])
    return lhs, rhs


def wajnryb_presentation(g: int) -> WajnrybPresentation:
    _check_genus(g)
    cs = curve_system(g)
    gens = cs.generators
    relators, tags = [], []
    for i, j in combinations(range(len(gens)), 2):
        x, y = Word(((i, 1),)), Word(((j, 1),))
        if cs.intersections(gens[i], gens[j]):
            # x y x = y x y
            relators.append(concat(x, y, x, invert(concat(y, x, y))))
            tags.append(BRAID)
        else:
            relators.append(concat(x, y, invert(x), invert(y)))
            tags.append(DISJOINT)
    if g >= 3:
        for tag, (lhs, rhs) in ((CHAIN, chain_relation(g)), (HYPERLANTERN, hyperlantern_relation(g))):
            relators.append(concat(lhs, invert(rhs)))
            tags.append(tag)
    return WajnrybPresentation(g, Presentation(gens, tuple(relators), tuple(tags)))


def expected_relator_counts(g: int) -> dict[str, int]:
    n = 2 * g + (g >= 2)
    braid = 2 * g if g >= 2 else 1
    return {
        BRAID: braid,
        DISJOINT: n * (n - 1) // 2 - braid,
        CHAIN: int(g >= 3),
        HYPERLANTERN: int(g >= 3),
    }


def substitute(w: Word, images: dict[int, Word]) -> Word:
    """Replace each generator (by index) with a word; inverse letters get the inverse word."""
    return concat(*(images[i] if s > 0 else invert(images[i]) for i, s in w))


def alpha_twist_word(g: int, j: int) -> Word:
    """A word in the Humphries generators for the twist about alpha_j.

    alpha_1 is gamma_1 and alpha_2 is a generator.  For j >= 3 the lantern in
    the hyperlantern relation has alpha_3 as its fourth boundary curve, so x4 is the twist
    about alpha_3.  The same lantern, moved one handle along the chain, gives
    alpha_{k+1} from alpha_{k-1}, alpha_k and the chain curves of handles k-1..k+1.
    """
    if g < 1:
        raise InvalidGenus(f"genus must be >= 1, got {g}")
    if not 1 <= j <= g:
        raise ValueError(f"alpha_{j} does not exist in genus {g}")
    gens = humphries_names(g)
    words = {1: parse_word("c1", gens)}
    if j == 1:
        return words[1]
    words[2] = parse_word("a2", gens)
    if j == 2:
        return words[2]
    template = auxiliary_words(3)["x4"]
    # template generators: c1 b1 c2 b2 c3 b3 a2
    for k in range(2, j):
        images = [
            words[k - 1],
            parse_word(f"b{k - 1}", gens),
            parse_word(f"c{k}", gens),
            parse_word(f"b{k}", gens),
            parse_word(f"c{k + 1}", gens),
            parse_word(f"b{k + 1}", gens),
            words[k],
        ]
        words[k + 1] = substitute(template, dict(enumerate(images)))
    return words[j]
