"""Finite left modules over table rings, with socle and symmetry machinery.

A Module stores a full addition table, a full action table act[r][a], and a
descriptor.  Supported constructions over a ring R:

    {"kind": "regular"}                          # R as a left module
    {"kind": "column", "k": 3}                   # M_{m x k}(F_q) over a matrix ring
    {"kind": "mod_m", "m": 2}                    # Z_m over a mod-n ring, m | n
    {"kind": "direct_sum", "summands": [...]}
    {"kind": "table", "add": [[...]], "act": [[...]]}

Column modules encode a matrix row-major in base q, top-left entry most
significant; direct sums use mixed radix, leftmost summand most significant.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Optional, Sequence

from .errors import (
    DEFAULT_GUARDS,
    Guards,
    InputError,
    InternalConsistencyError,
    check_guard,
)
from .fields import FiniteField, index_to_matrix, matrix_to_index
from .rings import (
    LeftIdeal,
    Ring,
    exponent_of_addition,
    jacobson_radical,
    minimal_left_ideals,
    ring_quotient,
    wedderburn_data,
)


class Module:
    def __init__(self, ring: Ring, add, act, zero: int, descriptor: dict):
        self.ring = ring
        self.order = len(add)
        self.add_table = add
        self.act_table = act
        self.zero = zero
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

    def act(self, r: int, a: int) -> int:
        return self.act_table[r][a]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self):
        kind = self.descriptor.get("kind", "?")
        return f"Module(kind={kind}, order={self.order})"


@dataclasses.dataclass(frozen=True)
class Submodule:
    """A submodule given by its sorted member tuple."""

    members: tuple[int, ...]

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members


def _validate_module_tables(ring: Ring, add, act, zero: int) -> None:
    n = len(add)
    if n == 0 or len(act) != ring.order:
        raise InputError("module tables must be nonempty; act needs one row per ring element")
    for row in add:
        if len(row) != n or any(not 0 <= x < n for x in row):
            raise InputError("module addition rows must have values in 0..n-1")
    for row in act:
        if len(row) != n or any(not 0 <= x < n for x in row):
            raise InputError("module action rows must have values in 0..n-1")
    for a in range(n):
        if add[zero][a] != a:
            raise InputError("module zero is not an additive identity")
        if all(add[a][b] != zero for b in range(n)):
            raise InputError(f"module element {a} has no additive inverse")
        for b in range(n):
            if add[a][b] != add[b][a]:
                raise InputError("module addition is not commutative")
            for c in range(n):
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    raise InputError("module addition is not associative")
    if any(act[ring.one][a] != a for a in range(n)):
        raise InputError("ring identity does not act as the identity map")
    for r in ring.elements():
        for a in range(n):
            for b in range(n):
                if act[r][add[a][b]] != add[act[r][a]][act[r][b]]:
                    raise InputError("action does not distribute over module addition")
    for r in ring.elements():
        for s in ring.elements():
            for a in range(n):
                if act[ring.add(r, s)][a] != add[act[r][a]][act[s][a]]:
                    raise InputError("action does not distribute over ring addition")
                if act[ring.mul(r, s)][a] != act[r][act[s][a]]:
                    raise InputError("action is not associative with ring multiplication")


def _module_regular(ring: Ring) -> Module:
    return Module(ring, ring.add_table, ring.mul_table, ring.zero, {"kind": "regular"})


def _module_column(ring: Ring, k: int, guards: Guards) -> Module:
    desc = ring.descriptor
    if desc.get("kind") != "matrix":
        raise InputError("column modules require a matrix ring")
    if k < 1:
        raise InputError(f"column count must be positive, got {k}")
    m, q = desc["m"], desc["q"]
    order = q ** (m * k)
    check_guard(order, guards.max_order, f"module order {q}^{m * k}")
    field = FiniteField(q, guards)
    mats = [index_to_matrix(field, m, k, i) for i in range(order)]
    ring_mats = [index_to_matrix(field, m, m, i) for i in range(ring.order)]
    add = tuple(
        tuple(matrix_to_index(mats[a].add(mats[b])) for b in range(order))
        for a in range(order)
    )
    act = tuple(
        tuple(matrix_to_index(ring_mats[r].mul(mats[a])) for a in range(order))
        for r in range(ring.order)
    )
    return Module(ring, add, act, 0, {"kind": "column", "k": k})


def _module_mod_m(ring: Ring, m: int) -> Module:
    desc = ring.descriptor
    if desc.get("kind") != "mod_n":
        raise InputError("mod_m modules require a mod_n ring")
    n = desc["n"]
    if m < 1 or n % m != 0:
        raise InputError(f"mod_m module needs m dividing n, got m={m}, n={n}")
    add = tuple(tuple((a + b) % m for b in range(m)) for a in range(m))
    act = tuple(tuple((r * a) % m for a in range(m)) for r in range(n))
    return Module(ring, add, act, 0, {"kind": "mod_m", "m": m})


def _module_direct_sum(ring: Ring, summands: Sequence[Module], guards: Guards) -> Module:
    if not summands:
        raise InputError("direct sum needs at least one summand")
    orders = [s.order for s in summands]
    total = 1
    for n in orders:
        total *= n
    check_guard(total, guards.max_order, f"module order {total}")

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
            join([s.add(x, y) for s, x, y in zip(summands, parts_of[a], parts_of[b])])
            for b in range(total)
        )
        for a in range(total)
    )
    act = tuple(
        tuple(join([s.act(r, x) for s, x in zip(summands, parts_of[a])]) for a in range(total))
        for r in ring.elements()
    )
    zero = join([s.zero for s in summands])
    return Module(
        ring, add, act, zero,
        {"kind": "direct_sum", "summands": [s.descriptor for s in summands]},
    )


def direct_power(module: Module, n: int, guards: Guards = DEFAULT_GUARDS) -> Module:
    """The direct sum of n copies of a module, with mixed-radix indexing."""
    if n < 1:
        raise InputError("direct power needs n >= 1")
    return _module_direct_sum(module.ring, [module] * n, guards)


def module_make(ring: Ring, descriptor: dict, guards: Guards = DEFAULT_GUARDS) -> Module:
    if not isinstance(descriptor, dict) or "kind" not in descriptor:
        raise InputError("module descriptor must be an object with a 'kind' field")
    kind = descriptor["kind"]
    if kind == "regular":
        return _module_regular(ring)
    if kind == "column":
        k = descriptor.get("k")
        if not isinstance(k, int):
            raise InputError("column descriptor needs integer field 'k'")
        return _module_column(ring, k, guards)
    if kind == "mod_m":
        m = descriptor.get("m")
        if not isinstance(m, int):
            raise InputError("mod_m descriptor needs integer field 'm'")
        return _module_mod_m(ring, m)
    if kind == "direct_sum":
        descs = descriptor.get("summands")
        if not isinstance(descs, list) or not descs:
            raise InputError("direct_sum descriptor needs a nonempty 'summands' list")
        summands = [module_make(ring, d, guards) for d in descs]
        return _module_direct_sum(ring, summands, guards)
    if kind == "character":
        return character_module(ring, guards)
    if kind == "table":
        add = descriptor.get("add")
        act = descriptor.get("act")
        if not isinstance(add, list) or not isinstance(act, list):
            raise InputError("table descriptor needs 'add' and 'act' tables")
        check_guard(len(add), guards.max_order, f"module order {len(add)}")
        add_t = tuple(tuple(row) for row in add)
        act_t = tuple(tuple(row) for row in act)
        zero = None
        for z in range(len(add_t)):
            if all(add_t[z][b] == b for b in range(len(add_t))):
                zero = z
                break
        if zero is None:
            raise InputError("module addition table has no identity element")
        _validate_module_tables(ring, add_t, act_t, zero)
        desc = {"kind": "table", "add": [list(r) for r in add_t], "act": [list(r) for r in act_t]}
        return Module(ring, add_t, act_t, zero, desc)
    raise InputError(f"unknown module kind {kind!r}")


# ---------------------------------------------------------------------------
# submodules and annihilators


def submodule_generated(module: Module, gens: Iterable[int]) -> Submodule:
    """Smallest submodule containing the generators.

    Because the running set is a submodule at every step, one pass of
    {s + r*g} per generator is a full closure.
    """
    members = {module.zero}
    add = module.add_table
    act = module.act_table
    for g in gens:
        if not 0 <= g < module.order:
            raise InputError(f"generator {g} outside module of order {module.order}")
        members = {add[s][row[g]] for s in members for row in act}
    return Submodule(tuple(sorted(members)))


def is_submodule(module: Module, members: Iterable[int]) -> bool:
    ms = set(members)
    if module.zero not in ms:
        return False
    return all(module.add(a, b) in ms for a in ms for b in ms) and all(
        module.act(r, a) in ms for r in module.ring.elements() for a in ms
    )


def submodules_enumerate(module: Module, guards: Guards = DEFAULT_GUARDS) -> tuple[Submodule, ...]:
    """All submodules: cyclic submodules saturated under pairwise sums."""
    key = "submodules"
    if key not in module._cache:
        check_guard(module.order, guards.max_order, f"module order {module.order}")
        add = module.add_table
        subs = {frozenset(submodule_generated(module, [a]).members) for a in module.elements()}
        work = list(subs)
        while work:
            current = work.pop()
            for other in list(subs):
                s = frozenset(add[x][y] for x in current for y in other)
                if s not in subs:
                    subs.add(s)
                    work.append(s)
        out = sorted((tuple(sorted(s)) for s in subs), key=lambda t: (len(t), t))
        module._cache[key] = tuple(Submodule(t) for t in out)
    return module._cache[key]


def annihilator(module: Module, a: int) -> LeftIdeal:
    """Ann(a) = {r in R : r*a = 0}, a left ideal of R."""
    zero = module.zero
    return LeftIdeal(
        tuple(r for r in module.ring.elements() if module.act_table[r][a] == zero)
    )


def annihilator_sets(module: Module) -> tuple[frozenset, ...]:
    """Annihilator of every element, as frozensets, cached on the module."""
    if "anns" not in module._cache:
        zero = module.zero
        out = []
        for a in module.elements():
            out.append(
                frozenset(r for r in module.ring.elements() if module.act_table[r][a] == zero)
            )
        module._cache["anns"] = tuple(out)
    return module._cache["anns"]


def minimal_submodules(module: Module) -> tuple[Submodule, ...]:
    """Nonzero submodules containing no smaller nonzero submodule.

    A minimal submodule is cyclic, so scanning cyclic submodules suffices.
    """
    zero = module.zero
    cyclic = {}
    for a in module.elements():
        if a == zero:
            continue
        sub = submodule_generated(module, [a])
        if len(sub) > 1:
            cyclic.setdefault(sub.members, sub)
    out = []
    for members, sub in cyclic.items():
        target = set(members)
        if all(
            set(submodule_generated(module, [x]).members) == target
            for x in members
            if x != zero
        ):
            out.append(sub)
    out.sort(key=lambda s: (len(s.members), s.members))
    return tuple(out)


def socle(module: Module) -> Submodule:
    """Largest semisimple submodule: the annihilator of rad(R) in the module.

    Cross-checked against the sum of all minimal submodules; a mismatch is an
    internal error.
    """
    if "socle" not in module._cache:
        rad = jacobson_radical(module.ring)
        zero = module.zero
        members = tuple(
            a
            for a in module.elements()
            if all(module.act_table[r][a] == zero for r in rad.members)
        )
        atoms = minimal_submodules(module)
        union = sorted({x for s in atoms for x in s.members} | {zero})
        via_sum = submodule_generated(module, union).members
        if via_sum != members:
            raise InternalConsistencyError(
                "socle methods disagree: radical-annihilator vs sum of minimal submodules"
            )
        module._cache["socle"] = Submodule(members)
    return module._cache["socle"]


# ---------------------------------------------------------------------------
# generators and linear-map search


def _span_with(module: Module, current: frozenset, a: int) -> frozenset:
    add = module.add_table
    act = module.act_table
    return frozenset(add[s][row[a]] for s in current for row in act)


def module_generators(module: Module) -> tuple[int, ...]:
    """Small generating set by greedy maximal coverage, ties to smaller index."""
    if "generators" not in module._cache:
        current = frozenset({module.zero})
        gens = []
        while len(current) < module.order:
            best_a = None
            best_size = -1
            for a in module.elements():
                if a in current:
                    continue
                size = len(_span_with(module, current, a))
                if size > best_size:
                    best_size = size
                    best_a = a
            gens.append(best_a)
            current = _span_with(module, current, best_a)
        module._cache["generators"] = tuple(gens)
    return module._cache["generators"]


def generators_within(module: Module, members: Sequence[int]) -> tuple[int, ...]:
    """Greedy generating set for a given submodule of the module."""
    target = frozenset(members)
    current = frozenset({module.zero})
    gens = []
    while current != target:
        best_a = None
        best_size = -1
        for a in sorted(target - current):
            size = len(_span_with(module, current, a))
            if size > best_size:
                best_size = size
                best_a = a
        gens.append(best_a)
        current = _span_with(module, current, best_a)
    return tuple(gens)


def _extend_map(src: Module, dst: Module, base: dict, x: int, y: int) -> Optional[dict]:
    """Extend a linear map on a submodule by x -> y; None on conflict.

    One pass over {s + r*x} covers the span and every linearity constraint.
    """
    new = dict(base)
    sadd, sact = src.add_table, src.act_table
    dadd, dact = dst.add_table, dst.act_table
    for r in src.ring.elements():
        rx = sact[r][x]
        ry = dact[r][y]
        for s, fs in base.items():
            key = sadd[s][rx]
            val = dadd[fs][ry]
            prev = new.get(key)
            if prev is None:
                new[key] = val
            elif prev != val:
                return None
    return new


def iter_linear_maps(
    src: Module,
    dst: Module,
    gens: Sequence[int],
    injective: bool = False,
    base: Optional[dict] = None,
    target_members: Optional[frozenset] = None,
):
    """Yield all linear maps span(base, gens) -> dst, in deterministic order.

    The source generators are element indices of src; base (default {0: 0})
    must already be a linear map on a submodule.  Candidate images are
    filtered by annihilator containment (equality when injective) and, when
    target_members is given, restricted to that submodule of dst.
    """
    if base is None:
        base = {src.zero: dst.zero}
    anns_src = annihilator_sets(src)
    anns_dst = annihilator_sets(dst)
    pool = dst.elements() if target_members is None else sorted(target_members)
    candidate_sets = []
    for g in gens:
        if injective:
            cands = [y for y in pool if anns_dst[y] == anns_src[g]]
        else:
            cands = [y for y in pool if anns_src[g] <= anns_dst[y]]
        candidate_sets.append(cands)

    def rec(i, current):
        if i == len(gens):
            yield current
            return
        for y in candidate_sets[i]:
            ext = _extend_map(src, dst, current, gens[i], y)
            if ext is None:
                continue
            if injective and len(set(ext.values())) != len(ext):
                continue
            yield from rec(i + 1, ext)

    yield from rec(0, dict(base))


def hom_count_from_simple(simple: Module, target: Module) -> int:
    """|Hom(T, M)| for simple T: images of a fixed generator are exactly the
    elements whose annihilator contains Ann(generator)."""
    t0 = next(a for a in simple.elements() if a != simple.zero)
    ann_t0 = annihilator_sets(simple)[t0]
    anns = annihilator_sets(target)
    return sum(1 for a in target.elements() if ann_t0 <= anns[a])


# ---------------------------------------------------------------------------
# automorphisms, orbit partitions


class AutGroup:
    """All module automorphisms as permutation tuples, sorted lexicographically."""

    def __init__(self, module: Module, elements: tuple[tuple[int, ...], ...]):
        self.module = module
        self.elements = elements
        self.index = {p: i for i, p in enumerate(elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    @staticmethod
    def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
        """(p after q)(x) = p[q[x]]."""
        return tuple(p[x] for x in q)

    def inverse(self, p: tuple[int, ...]) -> tuple[int, ...]:
        inv = [0] * len(p)
        for x, y in enumerate(p):
            inv[y] = x
        return tuple(inv)


def is_module_automorphism(module: Module, perm: Sequence[int]) -> bool:
    n = module.order
    if len(perm) != n or len(set(perm)) != n:
        return False
    if perm[module.zero] != module.zero:
        return False
    add, act = module.add_table, module.act_table
    for a in range(n):
        pa = perm[a]
        for b in range(n):
            if perm[add[a][b]] != add[pa][perm[b]]:
                return False
    for r in module.ring.elements():
        row = act[r]
        for a in range(n):
            if perm[row[a]] != row[perm[a]]:
                return False
    return True


def automorphism_group(module: Module, guards: Guards = DEFAULT_GUARDS) -> AutGroup:
    if "aut_group" not in module._cache:
        check_guard(module.order, guards.max_order, f"module order {module.order}")
        gens = module_generators(module)
        perms = []
        for f in iter_linear_maps(module, module, gens, injective=True):
            perms.append(tuple(f[a] for a in module.elements()))
        perms.sort()
        group = AutGroup(module, tuple(perms))
        ident = tuple(module.elements())
        if ident not in group.index:
            raise InternalConsistencyError("automorphism search missed the identity")
        for p in group.elements:
            if AutGroup.compose(p, group.elements[-1]) not in group.index:
                raise InternalConsistencyError("automorphism set is not closed")
        module._cache["aut_group"] = group
    return module._cache["aut_group"]


@dataclasses.dataclass(frozen=True)
class OrbitIndex:
    """Partition of a module's elements; labels[a] is the smallest member of
    a's class."""

    kind: str
    labels: tuple[int, ...]

    def classes(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for a, lab in enumerate(self.labels):
            out.setdefault(lab, []).append(a)
        return {k: tuple(v) for k, v in sorted(out.items())}


def partition(
    module: Module,
    kind: str,
    group: Optional[Sequence[Sequence[int]]] = None,
    guards: Guards = DEFAULT_GUARDS,
) -> OrbitIndex:
    """Partition elements by automorphism orbits ("orbit") or by equal
    annihilator ("annihilator").

    For "orbit", an explicit list of automorphisms may be supplied; orbits are
    taken under the group they generate.  Each supplied permutation must be a
    module automorphism.
    """
    cache_key = ("partition", kind) if group is None else None
    if cache_key is not None and cache_key in module._cache:
        return module._cache[cache_key]
    n = module.order
    if kind == "orbit":
        if group is None:
            perms = automorphism_group(module, guards).elements
        else:
            perms = [tuple(p) for p in group]
            for p in perms:
                if not is_module_automorphism(module, p):
                    raise InputError("supplied permutation is not a module automorphism")
        labels = [-1] * n
        for a in range(n):
            if labels[a] != -1:
                continue
            orbit = {a}
            frontier = [a]
            while frontier:
                x = frontier.pop()
                for p in perms:
                    y = p[x]
                    if y not in orbit:
                        orbit.add(y)
                        frontier.append(y)
            lab = min(orbit)
            for x in orbit:
                labels[x] = lab
    elif kind == "annihilator":
        anns = annihilator_sets(module)
        first: dict[frozenset, int] = {}
        labels = [0] * n
        for a in range(n):
            labels[a] = first.setdefault(anns[a], a)
    else:
        raise InputError(f"unknown partition kind {kind!r}")
    out = OrbitIndex(kind, tuple(labels))
    if cache_key is not None:
        module._cache[cache_key] = out
    return out


# ---------------------------------------------------------------------------
# pseudo-injectivity


def extend_mono(
    module: Module,
    sub: Submodule | Sequence[int],
    f: dict,
    guards: Guards = DEFAULT_GUARDS,
) -> Optional[tuple[int, ...]]:
    """Extend an injective linear map on a submodule to an endomorphism of the
    whole module; returns the full map or None.

    Injective extensions (automorphisms) are searched first, then arbitrary
    endomorphisms.
    """
    members = tuple(sub.members) if isinstance(sub, Submodule) else tuple(sorted(sub))
    if set(f.keys()) != set(members):
        raise InputError("map domain does not match the submodule")
    if not is_submodule(module, members):
        raise InputError("domain is not a submodule")
    if len(set(f.values())) != len(members):
        raise InputError("map is not injective")
    add, act = module.add_table, module.act_table
    for a in members:
        for b in members:
            if f[add[a][b]] != add[f[a]][f[b]]:
                raise InputError("map is not additive")
        for r in module.ring.elements():
            if f[act[r][a]] != act[r][f[a]]:
                raise InputError("map does not commute with the ring action")

    current = frozenset(members)
    gens_rest = []
    while len(current) < module.order:
        best_a = None
        best_size = -1
        for a in module.elements():
            if a in current:
                continue
            size = len(_span_with(module, current, a))
            if size > best_size:
                best_size = size
                best_a = a
        gens_rest.append(best_a)
        current = _span_with(module, current, best_a)

    for injective in (True, False):
        found = next(
            iter_linear_maps(module, module, gens_rest, injective=injective, base=f),
            None,
        )
        if found is not None:
            return tuple(found[a] for a in module.elements())
    return None


def iter_monos_from_submodule(module: Module, members: Sequence[int]):
    """Yield injective linear maps from a submodule of A into A."""
    gens = generators_within(module, members)
    yield from iter_linear_maps(module, module, gens, injective=True)


def is_pseudo_injective(module: Module, guards: Guards = DEFAULT_GUARDS) -> bool:
    """True when every monomorphism from a submodule into the module extends
    to an endomorphism of the module."""
    if "pseudo_injective" not in module._cache:
        result = True
        for sub in submodules_enumerate(module, guards):
            if len(sub) in (1, module.order):
                continue
            for f in iter_monos_from_submodule(module, sub.members):
                if extend_mono(module, sub, f, guards) is None:
                    result = False
                    break
            if not result:
                break
        module._cache["pseudo_injective"] = result
    return module._cache["pseudo_injective"]


# ---------------------------------------------------------------------------
# character module


def _additive_order(add, zero: int, a: int) -> int:
    order = 1
    x = a
    while x != zero:
        x = add[x][a]
        order += 1
    return order


def character_module(ring: Ring, guards: Guards = DEFAULT_GUARDS) -> Module:
    """The character module: additive maps chi: R -> Z_m (m the additive
    exponent), with left action (r.chi)(x) = chi(x*r).

    Characters are indexed by the lexicographic order of their value tuples
    (chi(0), ..., chi(n-1)), so the zero character has index 0.
    """
    if "character_module" in ring._cache:
        return ring._cache["character_module"]
    check_guard(ring.order, guards.max_order, f"ring order {ring.order}")
    n = ring.order
    m = exponent_of_addition(ring)
    add = ring.add_table
    orders = [_additive_order(add, ring.zero, a) for a in range(n)]

    current = frozenset({ring.zero})
    gens = []
    while len(current) < n:
        best_a, best_size = None, -1
        for a in range(n):
            if a in current:
                continue
            span = set(current)
            x = ring.zero
            for _ in range(orders[a]):
                span |= {add[s][x] for s in current}
                x = add[x][a]
            if len(span) > best_size:
                best_size = len(span)
                best_a = a
        gens.append(best_a)
        span = set()
        x = ring.zero
        for _ in range(orders[best_a]):
            span |= {add[s][x] for s in current}
            x = add[x][best_a]
        current = frozenset(span)

    def extend_additive(base: dict, g: int, c: int) -> Optional[dict]:
        new = dict(base)
        x, v = ring.zero, 0
        for _ in range(orders[g]):
            for s, fs in base.items():
                key = add[s][x]
                val = (fs + v) % m
                prev = new.get(key)
                if prev is None:
                    new[key] = val
                elif prev != val:
                    return None
            x = add[x][g]
            v = (v + c) % m
        return new

    characters = []

    def rec(i, current_map):
        if i == len(gens):
            characters.append(tuple(current_map[x] for x in range(n)))
            return
        g = gens[i]
        for c in range(m):
            if (orders[g] * c) % m != 0:
                continue
            ext = extend_additive(current_map, g, c)
            if ext is not None:
                rec(i + 1, ext)

    rec(0, {ring.zero: 0})
    if len(characters) != n:
        raise InternalConsistencyError(
            f"character count {len(characters)} differs from ring order {n}"
        )
    characters.sort()
    index = {chi: i for i, chi in enumerate(characters)}
    add_t = tuple(
        tuple(index[tuple((x + y) % m for x, y in zip(a, b))] for b in characters)
        for a in characters
    )
    act_t = tuple(
        tuple(index[tuple(chi[ring.mul(x, r)] for x in range(n))] for chi in characters)
        for r in ring.elements()
    )
    zero = index[tuple([0] * n)]
    out = Module(
        ring, add_t, act_t, zero,
        {"kind": "character", "ring": ring.descriptor, "exponent": m},
    )
    _validate_module_tables(ring, add_t, act_t, zero)
    ring._cache["character_module"] = out
    return out


def embeds_into(src: Module, dst: Module, guards: Guards = DEFAULT_GUARDS) -> bool:
    return embedding_search(src, dst, guards) is not None


def embedding_search(
    src: Module, dst: Module, guards: Guards = DEFAULT_GUARDS
) -> Optional[tuple[int, ...]]:
    """First injective linear map src -> dst in search order, as a tuple."""
    if src.order > dst.order:
        return None
    gens = module_generators(src)
    found = next(iter_linear_maps(src, dst, gens, injective=True), None)
    if found is None:
        return None
    return tuple(found[a] for a in src.elements())


# ---------------------------------------------------------------------------
# simple modules and the socle report


@dataclasses.dataclass(frozen=True)
class SimpleEntry:
    """One isomorphism class of simple left R-modules.

    module        -- the simple as a standalone Module over R
    endo_order    -- |End(T)|, the order of the endomorphism field
    multiplicity  -- multiplicity of T in R/rad(R) as a left module
    """

    module: Module
    endo_order: int
    multiplicity: int


@dataclasses.dataclass(frozen=True)
class SimpleCatalog:
    entries: tuple[SimpleEntry, ...]


def simple_catalog(ring: Ring, guards: Guards = DEFAULT_GUARDS) -> SimpleCatalog:
    """All simple left R-modules, via minimal left ideals of R/rad(R)."""
    if "simple_catalog" in ring._cache:
        return ring._cache["simple_catalog"]
    check_guard(ring.order, guards.max_order, f"ring order {ring.order}")
    rad = jacobson_radical(ring)
    rbar, proj = ring_quotient(ring, rad)

    def pullback(members: Sequence[int]) -> Module:
        pos = {x: i for i, x in enumerate(members)}
        size = len(members)
        add = tuple(
            tuple(pos[rbar.add(members[i], members[j])] for j in range(size))
            for i in range(size)
        )
        act = tuple(
            tuple(pos[rbar.mul(proj[r], members[i])] for i in range(size))
            for r in ring.elements()
        )
        return Module(
            ring, add, act, pos[rbar.zero],
            {"kind": "simple", "ring": ring.descriptor, "ideal": list(members)},
        )

    regular_bar = Module(
        ring,
        rbar.add_table,
        tuple(tuple(rbar.mul(proj[r], x) for x in rbar.elements()) for r in ring.elements()),
        rbar.zero,
        {"kind": "semisimple_quotient", "ring": ring.descriptor},
    )

    entries = []
    for ideal in minimal_left_ideals(rbar):
        t_mod = pullback(ideal.members)
        if any(hom_count_from_simple(t_mod, prev.module) > 1 for prev in entries):
            continue
        q = hom_count_from_simple(t_mod, t_mod)
        hom_count = hom_count_from_simple(t_mod, regular_bar)
        mu, value = 0, 1
        while value < hom_count:
            value *= q
            mu += 1
        if value != hom_count:
            raise InternalConsistencyError(
                f"hom count {hom_count} is not a power of endomorphism order {q}"
            )
        entries.append(SimpleEntry(t_mod, q, mu))
    entries.sort(key=lambda e: (e.endo_order, e.multiplicity, e.module.order))
    shape = sorted((e.multiplicity, e.endo_order) for e in entries)
    expected = sorted(wedderburn_data(ring, guards).blocks)
    if shape != expected:
        raise InternalConsistencyError(
            f"simple catalog shape {shape} disagrees with block data {expected}"
        )
    catalog = SimpleCatalog(tuple(entries))
    ring._cache["simple_catalog"] = catalog
    return catalog


@dataclasses.dataclass(frozen=True)
class SocleReport:
    """Socle decomposition soc(A) = sum s_i T_i and the cyclicity verdict.

    rows hold (endo_order q_i, capacity mu_i, multiplicity s_i, |T_i|); the
    socle is cyclic exactly when s_i <= mu_i for all i, and that verdict is
    cross-checked by a generator search and by an embedding test into the
    character module of R.
    """

    socle: Submodule
    rows: tuple[tuple[int, int, int, int], ...]
    cyclic: bool
    methods_agree: bool

    def as_json(self):
        return {
            "socle_order": len(self.socle.members),
            "blocks": [
                {"q": q, "mu": mu, "s": s, "simple_order": t}
                for q, mu, s, t in self.rows
            ],
            "cyclic": self.cyclic,
            "methods_agree": self.methods_agree,
        }


def socle_report(module: Module, guards: Guards = DEFAULT_GUARDS) -> SocleReport:
    if "socle_report" in module._cache:
        return module._cache["socle_report"]
    catalog = simple_catalog(module.ring, guards)
    soc = socle(module)
    rows = []
    size_check = 1
    for entry in catalog.entries:
        count = hom_count_from_simple(entry.module, module)
        s, value = 0, 1
        while value < count:
            value *= entry.endo_order
            s += 1
        if value != count:
            raise InternalConsistencyError(
                f"hom count {count} is not a power of endomorphism order {entry.endo_order}"
            )
        rows.append((entry.endo_order, entry.multiplicity, s, entry.module.order))
        size_check *= entry.module.order ** s
    if size_check != len(soc.members):
        raise InternalConsistencyError(
            f"socle order {len(soc.members)} differs from multiplicity product {size_check}"
        )
    by_multiplicity = all(s <= mu for _, mu, s, _ in rows)
    soc_size = len(soc.members)
    by_generator = any(
        len(submodule_generated(module, [a])) == soc_size for a in soc.members
    )
    by_character = embeds_into(module, character_module(module.ring, guards), guards)
    if not (by_multiplicity == by_generator == by_character):
        raise InternalConsistencyError(
            "cyclic-socle tests disagree: "
            f"multiplicity={by_multiplicity} generator={by_generator} "
            f"character={by_character}"
        )
    report = SocleReport(soc, tuple(rows), by_multiplicity, True)
    module._cache["socle_report"] = report
    return report
