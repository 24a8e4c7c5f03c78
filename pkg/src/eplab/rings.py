"""Finite unital rings as explicit operation tables.

A Ring stores complete addition and multiplication tables over elements
0..order-1 together with a JSON-ready descriptor of how it was built.
Supported constructions:

    {"kind": "mod_n",   "n": 6}
    {"kind": "matrix",  "m": 2, "q": 2}          # M_m(F_q)
    {"kind": "product", "factors": [d1, d2, ...]}
    {"kind": "table",   "add": [[...]], "mul": [[...]]}

Element encodings are fixed so results are reproducible byte for byte:
mod-n rings use residues 0..n-1; matrix rings encode a matrix row-major in
base q with the top-left entry most significant; products use mixed radix
with the leftmost factor most significant.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Iterable, Sequence

from .errors import (
    DEFAULT_GUARDS,
    Guards,
    InputError,
    InternalConsistencyError,
    NotPrincipalError,
    UnsupportedConstruction,
    check_guard,
)
from .fields import FiniteField, Matrix, index_to_matrix, matrix_to_index


class Ring:
    def __init__(self, add, mul, zero, one, descriptor):
        self.order = len(add)
        self.add_table = add
        self.mul_table = mul
        self.zero = zero
        self.one = one
        self.descriptor = descriptor
        neg = [0] * self.order
        for a in range(self.order):
            for b in range(self.order):
                if add[a][b] == zero:
                    neg[a] = b
                    break
        self.neg_table = tuple(neg)
        self._cache = {}

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self):
        kind = self.descriptor.get("kind", "?")
        return f"Ring(kind={kind}, order={self.order})"


@dataclasses.dataclass(frozen=True)
class LeftIdeal:
    """A left ideal given by its sorted member tuple (always contains 0)."""

    members: tuple[int, ...]

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def is_subset(self, other: "LeftIdeal") -> bool:
        return set(self.members) <= set(other.members)


def _validate_ring_tables(add, mul) -> tuple[int, int]:
    """Check full ring axioms on raw tables; return (zero, one)."""
    n = len(add)
    if n == 0 or len(mul) != n:
        raise InputError("ring tables must be nonempty and equally sized")
    for row in list(add) + list(mul):
        if len(row) != n or any(not 0 <= x < n for x in row):
            raise InputError("ring table rows must be permutations of 0..n-1 sized values")
    zero = None
    for z in range(n):
        if all(add[z][b] == b for b in range(n)):
            zero = z
            break
    if zero is None:
        raise InputError("addition table has no identity element")
    one = None
    for u in range(n):
        if all(mul[u][b] == b and mul[b][u] == b for b in range(n)):
            one = u
            break
    if one is None:
        raise InputError("multiplication table has no identity element")
    for a in range(n):
        if all(add[a][b] != zero for b in range(n)):
            raise InputError(f"element {a} has no additive inverse")
        for b in range(n):
            if add[a][b] != add[b][a]:
                raise InputError("addition is not commutative")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    raise InputError("addition is not associative")
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    raise InputError("multiplication is not associative")
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    raise InputError("left distributivity fails")
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
                    raise InputError("right distributivity fails")
    return zero, one


def _ring_mod_n(n: int) -> Ring:
    if n < 1:
        raise InputError(f"modulus must be positive, got {n}")
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    mul = tuple(tuple((a * b) % n for b in range(n)) for a in range(n))
    return Ring(add, mul, 0, 1 % n, {"kind": "mod_n", "n": n})


def _ring_matrix(m: int, q: int, guards: Guards) -> Ring:
    if m < 1:
        raise InputError(f"matrix ring size must be positive, got {m}")
    field = FiniteField(q, guards)
    order = q ** (m * m)
    check_guard(order, guards.max_order, f"matrix ring order {q}^{m * m}")
    mats = [index_to_matrix(field, m, m, i) for i in range(order)]
    add = tuple(
        tuple(matrix_to_index(mats[a].add(mats[b])) for b in range(order))
        for a in range(order)
    )
    mul = tuple(
        tuple(matrix_to_index(mats[a].mul(mats[b])) for b in range(order))
        for a in range(order)
    )
    zero = 0
    one = matrix_to_index(Matrix.identity(field, m))
    return Ring(add, mul, zero, one, {"kind": "matrix", "m": m, "q": q})


def _ring_product(factors: Sequence[Ring]) -> Ring:
    if not factors:
        raise InputError("product ring needs at least one factor")
    orders = [f.order for f in factors]
    total = 1
    for n in orders:
        total *= n

    def split(idx):
        parts = [0] * len(orders)
        for pos in range(len(orders) - 1, -1, -1):
            parts[pos] = idx % orders[pos]
            idx //= orders[pos]
        return parts

    def join(parts):
        idx = 0
        for n, x in zip(orders, parts):
            idx = idx * n + x
        return idx

    parts_of = [split(i) for i in range(total)]
    add = tuple(
        tuple(
            join([f.add(x, y) for f, x, y in zip(factors, parts_of[a], parts_of[b])])
            for b in range(total)
        )
        for a in range(total)
    )
    mul = tuple(
        tuple(
            join([f.mul(x, y) for f, x, y in zip(factors, parts_of[a], parts_of[b])])
            for b in range(total)
        )
        for a in range(total)
    )
    zero = join([f.zero for f in factors])
    one = join([f.one for f in factors])
    return Ring(add, mul, zero, one, {"kind": "product", "factors": [f.descriptor for f in factors]})


def ring_make(descriptor: dict, guards: Guards = DEFAULT_GUARDS) -> Ring:
    """Build a ring from a descriptor; tables are validated for "table" kind."""
    if not isinstance(descriptor, dict) or "kind" not in descriptor:
        raise InputError("ring descriptor must be an object with a 'kind' field")
    kind = descriptor["kind"]
    if kind == "mod_n":
        n = descriptor.get("n")
        if not isinstance(n, int):
            raise InputError("mod_n descriptor needs integer field 'n'")
        check_guard(n, guards.max_order, f"ring order {n}")
        return _ring_mod_n(n)
    if kind == "matrix":
        m, q = descriptor.get("m"), descriptor.get("q")
        if not isinstance(m, int) or not isinstance(q, int):
            raise InputError("matrix descriptor needs integer fields 'm' and 'q'")
        return _ring_matrix(m, q, guards)
    if kind == "product":
        factor_descs = descriptor.get("factors")
        if not isinstance(factor_descs, list) or not factor_descs:
            raise InputError("product descriptor needs a nonempty 'factors' list")
        factors = [ring_make(d, guards) for d in factor_descs]
        total = 1
        for f in factors:
            total *= f.order
        check_guard(total, guards.max_order, f"product ring order {total}")
        return _ring_product(factors)
    if kind == "table":
        add = descriptor.get("add")
        mul = descriptor.get("mul")
        if not isinstance(add, list) or not isinstance(mul, list):
            raise InputError("table descriptor needs 'add' and 'mul' tables")
        check_guard(len(add), guards.max_order, f"ring order {len(add)}")
        add_t = tuple(tuple(row) for row in add)
        mul_t = tuple(tuple(row) for row in mul)
        zero, one = _validate_ring_tables(add_t, mul_t)
        desc = {"kind": "table", "add": [list(r) for r in add_t], "mul": [list(r) for r in mul_t]}
        return Ring(add_t, mul_t, zero, one, desc)
    raise InputError(f"unknown ring kind {kind!r}")


def units(ring: Ring) -> frozenset[int]:
    """Two-sided units of the ring."""
    if "units" not in ring._cache:
        out = set()
        for u in ring.elements():
            for v in ring.elements():
                if ring.mul(u, v) == ring.one and ring.mul(v, u) == ring.one:
                    out.add(u)
                    break
        ring._cache["units"] = frozenset(out)
    return ring._cache["units"]


def jacobson_radical(ring: Ring) -> LeftIdeal:
    """rad(R) = {r : 1 - s*r is a unit for every s}, by quasi-regularity."""
    if "radical" not in ring._cache:
        us = units(ring)
        members = []
        for r in ring.elements():
            if all(ring.sub(ring.one, ring.mul(s, r)) in us for s in ring.elements()):
                members.append(r)
        ring._cache["radical"] = LeftIdeal(tuple(members))
    return ring._cache["radical"]


def principal_left_ideal(ring: Ring, g: int) -> LeftIdeal:
    return LeftIdeal(tuple(sorted({ring.mul(r, g) for r in ring.elements()})))


def principal_right_ideal(ring: Ring, g: int) -> LeftIdeal:
    return LeftIdeal(tuple(sorted({ring.mul(g, r) for r in ring.elements()})))


def _sum_of_subgroups(ring: Ring, a: Iterable[int], b: Iterable[int]) -> frozenset[int]:
    return frozenset(ring.add(x, y) for x in a for y in b)


def left_ideal_generated(ring: Ring, gens: Sequence[int]) -> LeftIdeal:
    members = frozenset({ring.zero})
    for g in gens:
        members = _sum_of_subgroups(ring, members, principal_left_ideal(ring, g).members)
    return LeftIdeal(tuple(sorted(members)))


def is_left_ideal(ring: Ring, members: Iterable[int]) -> bool:
    ms = set(members)
    if ring.zero not in ms:
        return False
    return all(ring.add(a, b) in ms for a in ms for b in ms) and all(
        ring.mul(r, a) in ms for r in ring.elements() for a in ms
    )


def left_ideals_enumerate(ring: Ring, guards: Guards = DEFAULT_GUARDS) -> tuple[LeftIdeal, ...]:
    """All left ideals: principal ideals saturated under pairwise sums."""
    key = "left_ideals"
    if key not in ring._cache:
        check_guard(ring.order, guards.max_order, f"ring order {ring.order}")
        ideals = {principal_left_ideal(ring, g).members for g in ring.elements()}
        ideals = {frozenset(i) for i in ideals}
        work = list(ideals)
        while work:
            current = work.pop()
            for other in list(ideals):
                s = _sum_of_subgroups(ring, current, other)
                if s not in ideals:
                    ideals.add(s)
                    work.append(s)
        out = sorted((tuple(sorted(i)) for i in ideals), key=lambda t: (len(t), t))
        ring._cache[key] = tuple(LeftIdeal(t) for t in out)
    return ring._cache[key]


def opposite_ring(ring: Ring) -> Ring:
    if "opposite" not in ring._cache:
        mul = tuple(tuple(ring.mul(b, a) for b in ring.elements()) for a in ring.elements())
        ring._cache["opposite"] = Ring(
            ring.add_table, mul, ring.zero, ring.one,
            {"kind": "opposite", "base": ring.descriptor},
        )
    return ring._cache["opposite"]


def right_ideals_enumerate(ring: Ring, guards: Guards = DEFAULT_GUARDS) -> tuple[LeftIdeal, ...]:
    return left_ideals_enumerate(opposite_ring(ring), guards)


def is_left_pir(ring: Ring, guards: Guards = DEFAULT_GUARDS) -> bool:
    """True when every left ideal is principal."""
    if "left_pir" not in ring._cache:
        principals = {principal_left_ideal(ring, g).members for g in ring.elements()}
        ring._cache["left_pir"] = all(
            i.members in principals for i in left_ideals_enumerate(ring, guards)
        )
    return ring._cache["left_pir"]


def is_right_pir(ring: Ring, guards: Guards = DEFAULT_GUARDS) -> bool:
    return is_left_pir(opposite_ring(ring), guards)


def principal_generator(ring: Ring, ideal: LeftIdeal) -> int:
    """Smallest g with Rg equal to the ideal; raises if none exists."""
    target = set(ideal.members)
    for g in ideal.members:
        if set(principal_left_ideal(ring, g).members) == target:
            return g
    raise NotPrincipalError(f"ideal {list(ideal.members)} is not a principal left ideal")


def ring_quotient(ring: Ring, ideal: LeftIdeal) -> tuple[Ring, tuple[int, ...]]:
    """Quotient by a two-sided ideal; returns (R/I, projection table).

    Quotient elements are indexed by their smallest coset representative, in
    increasing order.  proj[x] is the quotient index of the coset of x.
    """
    mem = set(ideal.members)
    if not is_left_ideal(ring, mem):
        raise InputError("quotient requires a left ideal")
    if not all(ring.mul(a, r) in mem for a in mem for r in ring.elements()):
        raise InputError("quotient requires a two-sided ideal")
    rep_of = {}
    reps = []
    for x in ring.elements():
        if x in rep_of:
            continue
        coset = sorted(ring.add(x, a) for a in mem)
        r = coset[0]
        reps.append(r)
        for y in coset:
            rep_of[y] = r
    reps.sort()
    index_of = {r: i for i, r in enumerate(reps)}
    proj = tuple(index_of[rep_of[x]] for x in ring.elements())
    n = len(reps)
    add = tuple(tuple(proj[ring.add(reps[a], reps[b])] for b in range(n)) for a in range(n))
    mul = tuple(tuple(proj[ring.mul(reps[a], reps[b])] for b in range(n)) for a in range(n))
    quotient = Ring(
        add, mul, proj[ring.zero], proj[ring.one],
        {"kind": "quotient", "base": ring.descriptor, "ideal": list(ideal.members)},
    )
    return quotient, proj


def minimal_left_ideals(ring: Ring) -> tuple[LeftIdeal, ...]:
    """Nonzero left ideals containing no smaller nonzero left ideal.

    A minimal left ideal is principal (generated by any nonzero member), so it
    suffices to scan principal ideals.
    """
    zero = ring.zero
    principals = {}
    for g in ring.elements():
        ideal = principal_left_ideal(ring, g)
        if len(ideal) > 1:
            principals[ideal.members] = ideal
    out = []
    for members, ideal in principals.items():
        target = set(members)
        if all(
            set(principal_left_ideal(ring, x).members) == target
            for x in members
            if x != zero
        ):
            out.append(ideal)
    out.sort(key=lambda i: (len(i.members), i.members))
    return tuple(out)


@dataclasses.dataclass(frozen=True)
class WedderburnData:
    """Semisimple-quotient shape: blocks (mu_i, q_i), sorted by (q_i, mu_i)."""

    blocks: tuple[tuple[int, int], ...]

    def as_json(self):
        return [{"mu": mu, "q": q} for mu, q in self.blocks]


def _annihilator_in_ring(ring: Ring, x: int) -> frozenset[int]:
    return frozenset(r for r in ring.elements() if ring.mul(r, x) == ring.zero)


def wedderburn_data(ring: Ring, guards: Guards = DEFAULT_GUARDS) -> WedderburnData:
    """Matrix-block data of R/rad(R), computed from the tables themselves.

    For each isomorphism class of minimal left ideals T of the semisimple
    quotient, |End(T)| = q_i and |Hom(T, R/rad)| = q_i^(mu_i) recover the
    block M_{mu_i}(F_{q_i}).
    """
    if "wedderburn" in ring._cache:
        return ring._cache["wedderburn"]
    check_guard(ring.order, guards.max_order, f"ring order {ring.order}")
    rad = jacobson_radical(ring)
    rbar, _ = ring_quotient(ring, rad)
    minimals = minimal_left_ideals(rbar)
    ann = {x: _annihilator_in_ring(rbar, x) for x in rbar.elements()}
    blocks = []
    seen_reps = []
    for ideal in minimals:
        x0 = next(x for x in ideal.members if x != rbar.zero)
        # a nonzero hom between simples is an isomorphism, so ann-containment
        # against any earlier representative detects a repeated class
        if any(
            any(ann[rx] <= ann[y] for y in ideal.members if y != rbar.zero)
            for rx in seen_reps
        ):
            continue
        seen_reps.append(x0)
        q = sum(1 for y in ideal.members if ann[x0] <= ann[y])
        hom_count = sum(1 for y in rbar.elements() if ann[x0] <= ann[y])
        mu = 0
        value = 1
        while value < hom_count:
            value *= q
            mu += 1
        if value != hom_count:
            raise InternalConsistencyError(
                f"hom count {hom_count} is not a power of endomorphism count {q}"
            )
        blocks.append((mu, q))
    blocks.sort(key=lambda b: (b[1], b[0]))
    total = 1
    for mu, q in blocks:
        total *= q ** (mu * mu)
    if total != rbar.order:
        raise InternalConsistencyError(
            f"block orders multiply to {total}, semisimple quotient has order {rbar.order}"
        )
    data = WedderburnData(tuple(blocks))
    ring._cache["wedderburn"] = data
    return data


@dataclasses.dataclass(frozen=True)
class BlockProjection:
    """Projection of R onto one matrix block M_mu(F_q) of R/rad(R).

    proj[r] is the block-ring element index (matrix encoded row-major base q)
    of the image of r.
    """

    mu: int
    q: int
    proj: tuple[int, ...]


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def block_projections(ring: Ring, guards: Guards = DEFAULT_GUARDS) -> tuple[BlockProjection, ...]:
    """Explicit projections onto Wedderburn blocks, for structured rings only.

    Supported for mod_n, matrix, and product descriptors; opaque table rings
    are out of scope and raise UnsupportedConstruction.
    """
    desc = ring.descriptor
    kind = desc.get("kind")
    if kind == "mod_n":
        n = desc["n"]
        out = [
            BlockProjection(1, p, tuple(x % p for x in range(n)))
            for p in _prime_factors(n)
        ]
        out.sort(key=lambda b: (b.q, b.mu))
        return tuple(out)
    if kind == "matrix":
        return (BlockProjection(desc["m"], desc["q"], tuple(range(ring.order))),)
    if kind == "product":
        factors = [ring_make(d, guards) for d in desc["factors"]]
        orders = [f.order for f in factors]
        out = []
        for pos, factor in enumerate(factors):
            inner = block_projections(factor, guards)
            for bp in inner:
                proj = []
                for idx in range(ring.order):
                    rest = idx
                    parts = [0] * len(orders)
                    for j in range(len(orders) - 1, -1, -1):
                        parts[j] = rest % orders[j]
                        rest //= orders[j]
                    proj.append(bp.proj[parts[pos]])
                out.append(BlockProjection(bp.mu, bp.q, tuple(proj)))
        out.sort(key=lambda b: (b.q, b.mu, b.proj))
        return tuple(out)
    raise UnsupportedConstruction(
        f"block projections are only available for structured rings, not {kind!r}"
    )


def exponent_of_addition(ring: Ring) -> int:
    """Exponent of the additive group (R, +)."""
    exp = 1
    for a in ring.elements():
        order = 1
        x = a
        while x != ring.zero:
            x = ring.add(x, a)
            order += 1
        exp = math.lcm(exp, order)
    return exp
