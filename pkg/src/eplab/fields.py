"""Finite fields GF(p^e) with dense arithmetic tables, and matrices over them.

Field elements are the integers 0..q-1.  The base-p digits of an element,
least-significant digit first, are the coefficients (constant term first) of
its representative polynomial modulo a fixed irreducible polynomial.  The
modulus is the lexicographically smallest monic irreducible polynomial of
degree e over F_p, comparing coefficient tuples constant-term first, so every
field of a given order is byte-for-byte reproducible.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Iterable, Sequence

from .errors import DEFAULT_GUARDS, Guards, InputError, check_guard


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p**e, p prime, or raise InputError."""
    if q < 2:
        raise InputError(f"field order must be at least 2, got {q}")
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                break
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                break
            return p, e
    raise InputError(f"field order must be a prime power, got {q}")


def _poly_trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> tuple[int, ...]:
    """Remainder of a modulo the monic polynomial m, coefficients in F_p."""
    rem = list(a)
    dm = len(m) - 1
    while len(rem) - 1 >= dm and rem:
        lead = rem[-1] % p
        if lead:
            shift = len(rem) - 1 - dm
            for i, mi in enumerate(m):
                rem[shift + i] = (rem[shift + i] - lead * mi) % p
        rem.pop()
    return _poly_trim(rem)


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = tuple(tail) + (1,)
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def minimal_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e over F_p.

    Coefficient tuples are compared constant-term first.
    """
    for tail in itertools.product(range(p), repeat=e):
        poly = tuple(tail) + (1,)
        if _is_irreducible(poly, p):
            return poly
    raise InputError(f"no irreducible polynomial of degree {e} over F_{p}")


def poly_string(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        if d == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else str(c) + "*"
            terms.append(f"{head}{var}" if d == 1 else f"{head}{var}^{d}")
    return " + ".join(terms) if terms else "0"


class FiniteField:
    """GF(p^e) with precomputed add/mul/neg/inv tables over elements 0..q-1."""

    def __init__(self, q: int, guards: Guards = DEFAULT_GUARDS):
        p, e = factor_prime_power(q)
        check_guard(q, guards.max_field, f"field order {q}")
        self.q = q
        self.p = p
        self.e = e
        self.modulus = minimal_irreducible(p, e)
        self._build_tables()

    def _digits(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def _undigits(self, coeffs: Sequence[int]) -> int:
        out = 0
        for c in reversed(list(coeffs) + [0] * (self.e - len(coeffs))):
            out = out * self.p + c
        return out

    def _build_tables(self):
        q, p = self.q, self.p
        digits = [self._digits(a) for a in range(q)]
        add = []
        for a in range(q):
            row = []
            for b in range(q):
                row.append(self._undigits([(x + y) % p for x, y in zip(digits[a], digits[b])]))
            add.append(tuple(row))
        mul = []
        for a in range(q):
            row = []
            for b in range(q):
                prod = _poly_mul(_poly_trim(digits[a]), _poly_trim(digits[b]), p)
                row.append(self._undigits(_poly_mod(prod, self.modulus, p)))
            mul.append(tuple(row))
        self.add_table = tuple(add)
        self.mul_table = tuple(mul)
        neg = [0] * q
        for a in range(q):
            for b in range(q):
                if self.add_table[a][b] == 0:
                    neg[a] = b
                    break
        self.neg_table = tuple(neg)
        inv = [None] * q
        for a in range(1, q):
            for b in range(1, q):
                if self.mul_table[a][b] == 1:
                    inv[a] = b
                    break
        self.inv_table = tuple(inv)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise InputError("zero is not invertible")
        return self.inv_table[a]

    def elements(self) -> range:
        return range(self.q)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and self.q == other.q
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash(("FiniteField", self.q, self.modulus))

    def __repr__(self):
        return f"FiniteField({self.q})"


@dataclasses.dataclass(frozen=True)
class Matrix:
    """Immutable matrix over a FiniteField, entries row-major."""

    field: FiniteField
    rows: int
    cols: int
    entries: tuple[int, ...]

    @staticmethod
    def from_rows(field: FiniteField, rows: Sequence[Sequence[int]]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise InputError("ragged matrix rows")
            for x in row:
                if not 0 <= x < field.q:
                    raise InputError(f"entry {x} outside field of order {field.q}")
                flat.append(x)
        return Matrix(field, r, c, tuple(flat))

    @staticmethod
    def zero(field: FiniteField, rows: int, cols: int) -> "Matrix":
        return Matrix(field, rows, cols, (0,) * (rows * cols))

    @staticmethod
    def identity(field: FiniteField, n: int) -> "Matrix":
        return Matrix(
            field, n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n))
        )

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def add(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("matrix shape mismatch in add")
        f = self.field
        return Matrix(
            f,
            self.rows,
            self.cols,
            tuple(f.add(a, b) for a, b in zip(self.entries, other.entries)),
        )

    def neg(self) -> "Matrix":
        f = self.field
        return Matrix(f, self.rows, self.cols, tuple(f.neg(a) for a in self.entries))

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise InputError("matrix shape mismatch in mul")
        f = self.field
        n, k, m = self.rows, self.cols, other.cols
        out = [0] * (n * m)
        for i in range(n):
            base = i * k
            for t in range(k):
                a = self.entries[base + t]
                if a == 0:
                    continue
                obase = t * m
                mrow = f.mul_table[a]
                arow_out = i * m
                for j in range(m):
                    b = other.entries[obase + j]
                    if b:
                        out[arow_out + j] = f.add_table[out[arow_out + j]][mrow[b]]
        return Matrix(f, n, m, tuple(out))

    def scale(self, c: int) -> "Matrix":
        f = self.field
        return Matrix(f, self.rows, self.cols, tuple(f.mul(c, a) for a in self.entries))

    def rref(self) -> "Matrix":
        """Reduced row echelon form via leftmost-pivot Gaussian elimination."""
        f = self.field
        rows = [list(self.row(i)) for i in range(self.rows)]
        pivot_row = 0
        for col in range(self.cols):
            if pivot_row >= self.rows:
                break
            sel = None
            for r in range(pivot_row, self.rows):
                if rows[r][col] != 0:
                    sel = r
                    break
            if sel is None:
                continue
            rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
            inv = f.inv(rows[pivot_row][col])
            rows[pivot_row] = [f.mul(inv, x) for x in rows[pivot_row]]
            for r in range(self.rows):
                if r != pivot_row and rows[r][col] != 0:
                    c = rows[r][col]
                    rows[r] = [
                        f.sub(x, f.mul(c, y)) for x, y in zip(rows[r], rows[pivot_row])
                    ]
            pivot_row += 1
        return Matrix.from_rows(f, rows) if self.rows else self

    def rank(self) -> int:
        red = self.rref()
        count = 0
        for i in range(red.rows):
            if any(red.row(i)):
                count += 1
        return count

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self):
        body = "; ".join(
            " ".join(str(x) for x in self.row(i)) for i in range(self.rows)
        )
        return f"Matrix[{body}]"


def mat_ops(kind: str, *operands: Matrix):
    """Dispatch basic matrix operations by name: add, mul, rref, rank."""
    if kind == "add":
        a, b = operands
        return a.add(b)
    if kind == "mul":
        a, b = operands
        return a.mul(b)
    if kind == "rref":
        (a,) = operands
        return a.rref()
    if kind == "rank":
        (a,) = operands
        return a.rank()
    raise InputError(f"unknown matrix operation {kind!r}")


def entries_to_index(entries: Iterable[int], q: int) -> int:
    """Mixed-radix encoding of an entry sequence, first entry most significant."""
    out = 0
    for x in entries:
        out = out * q + x
    return out


def index_to_entries(index: int, q: int, count: int) -> tuple[int, ...]:
    out = [0] * count
    for pos in range(count - 1, -1, -1):
        out[pos] = index % q
        index //= q
    return tuple(out)


def matrix_to_index(m: Matrix) -> int:
    return entries_to_index(m.entries, m.field.q)


def index_to_matrix(field: FiniteField, rows: int, cols: int, index: int) -> Matrix:
    return Matrix(field, rows, cols, index_to_entries(index, field.q, rows * cols))
