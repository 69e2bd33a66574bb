"""Free-group words, finite presentations and their plain-text format.

Text format: tokens are generator names, optionally suffixed with ``^-1``;
powers are written by repetition.  A presentation file lists the generator
names on its first non-comment line and one relator per following line.
``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DuplicateGenerator, EmptyGeneratorList, UnknownGenerator, WordSyntaxError

Letter = tuple[int, int]


@dataclass(frozen=True)
class Word:
    """A free-group word as (generator index, +1/-1) letters.  Never reduced."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if s not in (1, -1) or i < 0:
                raise ValueError(f"bad letter {(i, s)}")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return invert(self) ** (-n)
        return Word(self.letters * n)

    def inverse(self) -> "Word":
        return invert(self)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def max_index(self) -> int:
        return max((i for i, _ in self.letters), default=-1)


IDENTITY = Word()


def invert(w: Word) -> Word:
    return Word(tuple((i, -s) for i, s in reversed(w.letters)))


def concat(*words: Word) -> Word:
    return Word(tuple(l for w in words for l in w.letters))


def _check_name(name: str):
    if not name or any(c.isspace() for c in name) or "^" in name or "#" in name:
        raise WordSyntaxError(f"invalid generator name {name!r}")


def parse_word(text: str, generators: Sequence[str]) -> Word:
    index = {g: i for i, g in enumerate(generators)}
    letters = []
    for tok in text.split():
        name, sign = tok, 1
        if "^" in tok:
            name, _, exp = tok.partition("^")
            if exp != "-1" or not name:
                raise WordSyntaxError(f"malformed token {tok!r}: only ^-1 is accepted")
            sign = -1
        if name not in index:
            raise UnknownGenerator(f"unknown generator {name!r}")
        letters.append((index[name], sign))
    return Word(tuple(letters))


def render_word(w: Word, generators: Sequence[str]) -> str:
    try:
        return " ".join(generators[i] + ("^-1" if s < 0 else "") for i, s in w.letters)
    except IndexError:
        raise UnknownGenerator(f"word uses generator index {w.max_index()} outside {list(generators)}")


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()
    tags: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise EmptyGeneratorList("a presentation needs at least one generator")
        seen = set()
        for g in gens:
            _check_name(g)
            if g in seen:
                raise DuplicateGenerator(f"generator {g!r} declared twice")
            seen.add(g)
        rels = tuple(self.relators)
        for r in rels:
            if r.max_index() >= len(gens):
                raise UnknownGenerator(f"relator references generator index {r.max_index()}")
        tags = tuple(self.tags) or ("relator",) * len(rels)
        if len(tags) != len(rels):
            raise ValueError("one tag per relator")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)
        object.__setattr__(self, "tags", tags)

    def word(self, text: str) -> Word:
        return parse_word(text, self.generators)

    def render(self, w: Word) -> str:
        return render_word(w, self.generators)

    def to_text(self, header: Iterable[str] = ()) -> str:
        lines = [f"# {h}" for h in header]
        lines.append(" ".join(self.generators))
        for tag, r in zip(self.tags, self.relators):
            lines.append(f"{self.render(r)}  # {tag}" if tag != "relator" else self.render(r))
        return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    gens = None
    relators = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if gens is None:
            if not line:
                continue
            gens = line.split()
            seen = set()
            for g in gens:
                _check_name(g)
                if g in seen:
                    raise DuplicateGenerator(f"generator {g!r} declared twice")
                seen.add(g)
            continue
        if line:
            relators.append(parse_word(line, gens))
    if not gens:
        raise EmptyGeneratorList("no generator line found")
    return Presentation(tuple(gens), tuple(relators))
