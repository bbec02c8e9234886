"""Breadth-first exploration of Cayley graphs.

The BFS is generic over a :class:`GroupInterface`.  Frontiers are expanded in
sorted-key order so that distances, parents and exported text are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Sequence

from . import words as _words
from .tree_pair import GENERATOR_PAIRS, IDENTITY, TreePair, multiply_counted


class BallBudgetExceeded(MemoryError):
    """The ball outgrew its element budget; ``radius`` is the last complete radius."""

    def __init__(self, radius: int, size: int, budget: int):
        super().__init__(
            f"ball budget of {budget} elements exceeded after radius {radius} ({size} elements)"
        )
        self.radius = radius
        self.size = size
        self.budget = budget


class OutOfBallError(KeyError):
    pass


class NotALoopError(ValueError):
    pass


@dataclass(frozen=True)
class GroupInterface:
    name: str
    identity: Any
    generators: tuple  # every letter, inverses included
    positive_generators: tuple
    act: Callable[[Any, Any], Any]
    key: Callable[[Any], Hashable]
    letter_name: Callable[[Any], str] = str
    sort_key: Callable[[Hashable], Any] = lambda k: k


def _f_act(w: TreePair, letter) -> TreePair:
    return multiply_counted(w, GENERATOR_PAIRS[letter])[0]


def _f_letter_name(letter) -> str:
    return _words.format_word((letter,))


F_GROUP = GroupInterface(
    name="F",
    identity=IDENTITY,
    generators=_words.FINITE_LETTERS,
    positive_generators=(_words.X0, _words.X1),
    act=_f_act,
    key=lambda w: w.key(),
    letter_name=_f_letter_name,
)


@dataclass
class Ball:
    group: GroupInterface
    radius: int
    distances: dict = field(default_factory=dict)
    parents: dict = field(default_factory=dict)  # key -> (parent key, letter)
    elements: dict = field(default_factory=dict)  # key -> element

    def __len__(self) -> int:
        return len(self.distances)

    def __contains__(self, element) -> bool:
        return self.group.key(element) in self.distances

    def sphere_sizes(self) -> list[int]:
        sizes = [0] * (self.radius + 1)
        for d in self.distances.values():
            sizes[d] += 1
        return sizes

    def sorted_keys(self) -> list:
        return sorted(self.distances, key=lambda k: (self.distances[k], self.group.sort_key(k)))

    def iter_elements(self, max_distance: int | None = None) -> Iterable:
        for k in self.sorted_keys():
            if max_distance is None or self.distances[k] <= max_distance:
                yield self.elements[k]

    def geodesic(self, element) -> tuple:
        k = self.group.key(element)
        if k not in self.distances:
            raise OutOfBallError(k)
        letters = []
        while True:
            parent = self.parents.get(k)
            if parent is None:
                break
            k, letter = parent
            letters.append(letter)
        return tuple(reversed(letters))


def ball(group: GroupInterface, r: int, max_elements: int | None = None) -> Ball:
    if r < 0:
        raise ValueError("radius must be nonnegative")
    b = Ball(group, r)
    k0 = group.key(group.identity)
    b.distances[k0] = 0
    b.elements[k0] = group.identity
    frontier = [k0]
    for d in range(1, r + 1):
        new = []
        for k in sorted(frontier, key=group.sort_key):
            g = b.elements[k]
            for letter in group.generators:
                h = group.act(g, letter)
                hk = group.key(h)
                if hk in b.distances:
                    continue
                b.distances[hk] = d
                b.elements[hk] = h
                b.parents[hk] = (k, letter)
                new.append(hk)
        if max_elements is not None and len(b.distances) > max_elements:
            raise BallBudgetExceeded(d - 1, len(b.distances), max_elements)
        frontier = new
    return b


def distance(b: Ball, element) -> int:
    k = b.group.key(element)
    try:
        return b.distances[k]
    except KeyError:
        raise OutOfBallError(f"element {k} lies outside the ball of radius {b.radius}") from None


free_reduce = _words.free_reduce


def evaluates_to_identity(group: GroupInterface, word: Sequence) -> bool:
    g = group.identity
    for letter in word:
        g = group.act(g, letter)
    return group.key(g) == group.key(group.identity)


def is_graph_null_homotopic(word: Sequence, group: GroupInterface = F_GROUP) -> bool:
    """A loop in the Cayley graph is null-homotopic iff it freely reduces to ε."""
    if not evaluates_to_identity(group, word):
        raise NotALoopError("word does not evaluate to the identity")
    return len(free_reduce(word)) == 0


def _quote(text: str) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(b: Ball) -> str:
    group = b.group
    keys = sorted(b.distances, key=group.sort_key)
    lines = [f"graph {_quote('ball_' + group.name + '_' + str(b.radius))} {{"]
    for k in keys:
        lines.append(f"  {_quote(k)} [dist={b.distances[k]}];")
    for k in keys:
        g = b.elements[k]
        for letter in group.positive_generators:
            hk = group.key(group.act(g, letter))
            if hk in b.distances:
                lines.append(f"  {_quote(k)} -- {_quote(hk)} [label={_quote(group.letter_name(letter))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def count_edges(b: Ball) -> int:
    n = 0
    for k, g in b.elements.items():
        for letter in b.group.positive_generators:
            if b.group.key(b.group.act(g, letter)) in b.distances:
                n += 1
    return n


def dump_ball(b: Ball) -> str:
    """Line-oriented persistence: ``key<TAB>distance`` sorted by key."""
    keys = sorted(b.distances, key=b.group.sort_key)
    return "".join(f"{k}\t{b.distances[k]}\n" for k in keys)


def load_distances(text: str, parse_key: Callable[[str], Hashable] = str) -> dict:
    out = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        k, d = line.rsplit("\t", 1)
        out[parse_key(k)] = int(d)
    return out
