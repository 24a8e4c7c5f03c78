"""Linear codes over a finite module alphabet, weights, and extension search.

A code is a materialized submodule of A^n, stored as sorted words (tuples of
module element indices).  Three weight data are supported per word:

    hamming  -- number of nonzero components
    swc      -- counts per automorphism orbit of the alphabet
    aw       -- counts per annihilator class of the alphabet

Monomial transforms combine a length-n position permutation with one alphabet
automorphism per position; extension_search decides whether a code map is the
restriction of such a transform.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Iterable, Optional, Sequence

from .errors import (
    DEFAULT_GUARDS,
    Guards,
    GuardExceeded,
    InputError,
    InternalConsistencyError,
    check_guard,
)
from .modules import AutGroup, Module, OrbitIndex, automorphism_group, partition

Word = tuple[int, ...]


def _validate_word(alphabet: Module, n: int, word: Sequence[int]) -> Word:
    w = tuple(word)
    if len(w) != n:
        raise InputError(f"word length {len(w)} differs from code length {n}")
    for x in w:
        if not isinstance(x, int) or not 0 <= x < alphabet.order:
            raise InputError(f"word entry {x!r} outside alphabet of order {alphabet.order}")
    return w


def word_add(alphabet: Module, u: Word, v: Word) -> Word:
    add = alphabet.add_table
    return tuple(add[a][b] for a, b in zip(u, v))


def word_act(alphabet: Module, r: int, u: Word) -> Word:
    row = alphabet.act_table[r]
    return tuple(row[a] for a in u)


@dataclasses.dataclass(frozen=True)
class Code:
    """A left submodule of A^n with its generating words and all elements."""

    alphabet: Module
    length: int
    generators: tuple[Word, ...]
    elements: tuple[Word, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, word):
        return tuple(word) in set(self.elements)


def code_generate(
    alphabet: Module,
    length: int,
    generators: Sequence[Sequence[int]],
    guards: Guards = DEFAULT_GUARDS,
) -> Code:
    """Close the generating words under addition and the ring action."""
    if length < 1:
        raise InputError(f"code length must be positive, got {length}")
    gens = tuple(_validate_word(alphabet, length, g) for g in generators)
    zero = (alphabet.zero,) * length
    members = {zero}
    ring = alphabet.ring
    for g in gens:
        scaled = [word_act(alphabet, r, g) for r in ring.elements()]
        members = {word_add(alphabet, s, sg) for s in members for sg in scaled}
        check_guard(len(members), guards.max_code, "code size")
    return Code(alphabet, length, gens, tuple(sorted(members)))


@dataclasses.dataclass(frozen=True)
class WeightProfile:
    """A weight composition: kind plus sorted (key, count) pairs."""

    kind: str
    counts: tuple[tuple[str, int], ...]

    def as_dict(self) -> dict:
        return dict(self.counts)


def _index_for(alphabet: Module, kind: str, index: Optional[OrbitIndex], guards: Guards) -> OrbitIndex:
    wanted = "orbit" if kind == "swc" else "annihilator"
    if index is None:
        return partition(alphabet, wanted, guards=guards)
    if index.kind != wanted:
        raise InputError(f"{kind} profile needs a {wanted} partition, got {index.kind}")
    if len(index.labels) != alphabet.order:
        raise InputError("partition does not match the alphabet")
    return index


def weight_profile(
    alphabet: Module,
    word: Sequence[int],
    kind: str,
    index: Optional[OrbitIndex] = None,
    guards: Guards = DEFAULT_GUARDS,
) -> WeightProfile:
    w = _validate_word(alphabet, len(word), word)
    if kind == "hamming":
        h = sum(1 for x in w if x != alphabet.zero)
        return WeightProfile("hamming", (("nonzero", h),))
    if kind in ("swc", "aw"):
        idx = _index_for(alphabet, kind, index, guards)
        counts: dict[int, int] = {}
        for x in w:
            lab = idx.labels[x]
            counts[lab] = counts.get(lab, 0) + 1
        return WeightProfile(kind, tuple((str(k), v) for k, v in sorted(counts.items())))
    raise InputError(f"unknown weight kind {kind!r}")


# ---------------------------------------------------------------------------
# monomial transforms


@dataclasses.dataclass(frozen=True)
class MonomialTransform:
    """Position permutation sigma plus one alphabet automorphism per position.

    Output position i receives tau_i applied to input position sigma[i].
    """

    sigma: tuple[int, ...]
    taus: tuple[tuple[int, ...], ...]


def monomial_identity(alphabet: Module, n: int) -> MonomialTransform:
    ident = tuple(alphabet.elements())
    return MonomialTransform(tuple(range(n)), (ident,) * n)


def monomial_apply(transform: MonomialTransform, word: Sequence[int]) -> Word:
    return tuple(
        transform.taus[i][word[transform.sigma[i]]] for i in range(len(transform.sigma))
    )


def monomial_compose(second: MonomialTransform, first: MonomialTransform) -> MonomialTransform:
    """The transform equal to applying first, then second."""
    n = len(second.sigma)
    sigma = tuple(first.sigma[second.sigma[i]] for i in range(n))
    taus = tuple(
        tuple(second.taus[i][first.taus[second.sigma[i]][a]] for a in range(len(first.taus[0])))
        for i in range(n)
    )
    return MonomialTransform(sigma, taus)


def monomial_is_valid(alphabet: Module, transform: MonomialTransform) -> bool:
    from .modules import is_module_automorphism

    n = len(transform.sigma)
    if sorted(transform.sigma) != list(range(n)) or len(transform.taus) != n:
        return False
    return all(is_module_automorphism(alphabet, tau) for tau in transform.taus)


# ---------------------------------------------------------------------------
# code maps


@dataclasses.dataclass(frozen=True)
class CodeMap:
    """A module isomorphism between two codes of the same length, materialized
    word by word."""

    source: Code
    target: Code
    gen_images: tuple[Word, ...]
    mapping: dict[Word, Word] = dataclasses.field(compare=False)

    def apply(self, word: Sequence[int]) -> Word:
        w = tuple(word)
        if w not in self.mapping:
            raise InputError("word is not in the source code")
        return self.mapping[w]


def code_map_make(
    source: Code,
    target: Code,
    gen_images: Sequence[Sequence[int]],
    guards: Guards = DEFAULT_GUARDS,
) -> CodeMap:
    """Build the linear map sending source generators to the given images.

    Raises InputError when the assignment is not well defined, not injective,
    or its image is not exactly the target code.
    """
    if source.alphabet is not target.alphabet:
        raise InputError("source and target codes must share an alphabet")
    if source.length != target.length:
        raise InputError("source and target codes must share a length")
    alphabet = source.alphabet
    n = source.length
    images = tuple(_validate_word(alphabet, n, w) for w in gen_images)
    if len(images) != len(source.generators):
        raise InputError(
            f"expected {len(source.generators)} generator images, got {len(images)}"
        )
    ring = alphabet.ring
    zero = (alphabet.zero,) * n
    mapping = {zero: zero}
    for g, fg in zip(source.generators, images):
        new = {}
        for r in ring.elements():
            rg = word_act(alphabet, r, g)
            rfg = word_act(alphabet, r, fg)
            for s, fs in mapping.items():
                key = word_add(alphabet, s, rg)
                val = word_add(alphabet, fs, rfg)
                prev = new.get(key)
                if prev is None:
                    new[key] = val
                elif prev != val:
                    raise InputError("generator images do not define a map")
        mapping = new
    if set(mapping) != set(source.elements):
        raise InputError("generators do not generate the source code")
    values = set(mapping.values())
    if len(values) != len(mapping):
        raise InputError("code map is not injective")
    if values != set(target.elements):
        raise InputError("code map image differs from the target code")
    return CodeMap(source, target, images, mapping)


def map_preserves(
    cmap: CodeMap,
    kind: str,
    index: Optional[OrbitIndex] = None,
    guards: Guards = DEFAULT_GUARDS,
) -> bool:
    alphabet = cmap.source.alphabet
    if kind in ("swc", "aw"):
        index = _index_for(alphabet, kind, index, guards)
    for word, image in cmap.mapping.items():
        if weight_profile(alphabet, word, kind, index, guards) != weight_profile(
            alphabet, image, kind, index, guards
        ):
            return False
    return True


def column_fingerprint(code: Code, position: int, index: OrbitIndex) -> tuple[int, ...]:
    """Multiset (sorted tuple) of partition labels in one column of the code."""
    if not 0 <= position < code.length:
        raise InputError(f"position {position} outside code of length {code.length}")
    return tuple(sorted(index.labels[w[position]] for w in code.elements))


# ---------------------------------------------------------------------------
# extension search


def group_elements(
    alphabet: Module,
    group: AutGroup | Sequence[Sequence[int]] | None,
    guards: Guards = DEFAULT_GUARDS,
) -> tuple[tuple[int, ...], ...]:
    """Normalize a group argument to a sorted tuple of automorphisms.

    An explicit list is validated and closed under composition.
    """
    from .modules import is_module_automorphism

    if group is None:
        return automorphism_group(alphabet, guards).elements
    if isinstance(group, AutGroup):
        return group.elements
    perms = [tuple(p) for p in group]
    for p in perms:
        if not is_module_automorphism(alphabet, p):
            raise InputError("supplied permutation is not an alphabet automorphism")
    identity = tuple(alphabet.elements())
    closed = {identity} | set(perms)
    frontier = list(closed)
    while frontier:
        p = frontier.pop()
        for q in perms:
            r = tuple(p[x] for x in q)
            if r not in closed:
                closed.add(r)
                frontier.append(r)
        check_guard(len(closed), guards.max_nodes, "group closure size")
    return tuple(sorted(closed))


@dataclasses.dataclass(frozen=True)
class ExtensionResult:
    """Outcome of an extension search.

    transform is None when no monomial transform over the group restricts to
    the map; the search is exhaustive unless it raises GuardExceeded first.
    """

    transform: Optional[MonomialTransform]
    nodes: int
    candidate_space: int
    group_order: int


def extension_search(
    cmap: CodeMap,
    group: AutGroup | Sequence[Sequence[int]] | None = None,
    guards: Guards = DEFAULT_GUARDS,
) -> ExtensionResult:
    """Search for a monomial transform agreeing with the code map.

    By linearity a transform agrees with the map on the whole code exactly
    when it agrees on the generators, so candidate automorphisms per position
    pair are computed from generator columns only.  The search walks target
    positions in increasing order and tries source positions in increasing
    order, so a found witness is the lexicographically least one; candidate
    sets are pre-filtered by column fingerprints over the group's orbit
    partition.
    """
    alphabet = cmap.source.alphabet
    n = cmap.source.length
    perms = group_elements(alphabet, group, guards)
    gens = cmap.source.generators
    images = cmap.gen_images

    orbit_index = partition(alphabet, "orbit", group=perms, guards=guards)
    fp_src = [column_fingerprint(cmap.source, j, orbit_index) for j in range(n)]
    fp_dst = [column_fingerprint(cmap.target, i, orbit_index) for i in range(n)]

    candidates: dict[tuple[int, int], list[int]] = {}
    for i in range(n):
        for j in range(n):
            if fp_src[j] != fp_dst[i]:
                continue
            taus = [
                t
                for t, tau in enumerate(perms)
                if all(tau[g[j]] == fg[i] for g, fg in zip(gens, images))
            ]
            if taus:
                candidates[(i, j)] = taus

    feasible_j = {j for (_, j) in candidates}
    feasible_i = {i for (i, _) in candidates}
    candidate_space = math.factorial(n) * len(perms) ** n
    if len(feasible_j) < n or len(feasible_i) < n:
        return ExtensionResult(None, 0, candidate_space, len(perms))

    nodes = 0
    sigma = [-1] * n
    used = [False] * n

    def dfs(i: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        for j in range(n):
            if used[j] or (i, j) not in candidates:
                continue
            nodes += 1
            if nodes > guards.max_nodes:
                raise GuardExceeded(
                    f"extension search exceeded {guards.max_nodes} nodes"
                )
            sigma[i] = j
            used[j] = True
            if dfs(i + 1):
                return True
            used[j] = False
            sigma[i] = -1
        return False

    if not dfs(0):
        return ExtensionResult(None, nodes, candidate_space, len(perms))
    taus = tuple(perms[candidates[(i, sigma[i])][0]] for i in range(n))
    transform = MonomialTransform(tuple(sigma), taus)
    for word, image in cmap.mapping.items():
        if monomial_apply(transform, word) != image:
            raise InternalConsistencyError(
                "extension search produced an inconsistent transform"
            )
    return ExtensionResult(transform, nodes, candidate_space, len(perms))
