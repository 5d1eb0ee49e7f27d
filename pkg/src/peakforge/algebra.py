"""Shared machinery for sparse basis expansions.

An :class:`Element` is a linear combination of basis keys (plain tuples)
with nonzero coefficients in one of the exact fields.  Subclasses fix the
algebra, the allowed basis tags and the grading of keys.  A ``bound`` marks
a truncated series: terms above the bound are dropped by ring operations,
and bounds propagate as the minimum of the operands'.
"""

from __future__ import annotations

import itertools
from functools import cache

from .scalars import common_ring, scalar_str


def merge_bounds(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class Element:
    __slots__ = ("ring", "basis", "terms", "bound")

    algebra = ""
    bases: tuple = ()

    def __init__(self, ring, basis, terms=None, bound=None):
        if basis not in self.bases:
            raise ValueError(f"unknown basis {basis!r} for {self.algebra}")
        self.ring = ring
        self.basis = basis
        self.bound = bound
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    # ---- constructors

    @classmethod
    def zero(cls, ring, basis=None):
        return cls(ring, basis or cls.bases[0], {})

    @classmethod
    def monomial(cls, ring, key, coeff=1, basis=None):
        return cls(ring, basis or cls.bases[0], {key: ring(coeff)})

    @classmethod
    def unit(cls, ring, basis=None):
        return cls.monomial(ring, (), 1, basis=basis)

    # ---- grading

    @staticmethod
    def key_degree(key) -> int:
        raise NotImplementedError

    def degrees(self):
        return sorted({self.key_degree(k) for k in self.terms})

    def homogeneous(self, d):
        cls = type(self)
        return cls(
            self.ring,
            self.basis,
            {k: c for k, c in self.terms.items() if self.key_degree(k) == d},
        )

    def truncate(self, n_max):
        cls = type(self)
        return cls(
            self.ring,
            self.basis,
            {k: c for k, c in self.terms.items() if self.key_degree(k) <= n_max},
            bound=merge_bounds(self.bound, n_max),
        )

    # ---- linear structure

    def coefficient(self, key):
        return self.terms.get(key, self.ring(0))

    def support(self):
        return sorted(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def _aligned(self, other):
        """Coerce two elements of the same algebra/basis to a common ring."""
        if type(other) is not type(self):
            raise TypeError(f"expected a {type(self).__name__}")
        if other.basis != self.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        ring = common_ring(self.ring, other.ring)
        return self.with_ring(ring), other.with_ring(ring)

    def with_ring(self, ring):
        if ring is self.ring:
            return self
        cls = type(self)
        return cls(
            ring,
            self.basis,
            {k: ring(c) for k, c in self.terms.items()},
            bound=self.bound,
        )

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if other.basis != self.basis:
            return False
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __add__(self, other):
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for k, c in b.terms.items():
            s = terms.get(k)
            s = c if s is None else s + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        bound = merge_bounds(a.bound, b.bound)
        if bound is not None:
            terms = {k: c for k, c in terms.items() if self.key_degree(k) <= bound}
        return type(self)(a.ring, a.basis, terms, bound=bound)

    def __neg__(self):
        return type(self)(
            self.ring,
            self.basis,
            {k: -c for k, c in self.terms.items()},
            bound=self.bound,
        )

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, coeff):
        ring = common_ring(self.ring, _scalar_ring(coeff))
        c = ring(coeff)
        if not c:
            return type(self)(ring, self.basis, {}, bound=self.bound)
        return type(self)(
            ring,
            self.basis,
            {k: ring(v) * c for k, v in self.terms.items()},
            bound=self.bound,
        )

    def __rmul__(self, coeff):
        return self.scaled(coeff)

    def map_coefficients(self, fn, ring=None):
        ring = ring or self.ring
        return type(self)(
            ring,
            self.basis,
            {k: fn(c) for k, c in self.terms.items()},
            bound=self.bound,
        )

    # ---- presentation

    @staticmethod
    def key_str(key) -> str:
        return ",".join(str(x) for x in key) if key else "()"

    @staticmethod
    def key_json(key):
        return list(key)

    def to_json_dict(self):
        return {
            "algebra": self.algebra,
            "basis": self.basis,
            "terms": [
                {"key": self.key_json(k), "coeff": scalar_str(self.terms[k])}
                for k in sorted(self.terms)
            ],
        }

    def __repr__(self):
        if not self.terms:
            return f"{type(self).__name__}<{self.basis}>(0)"
        bits = []
        for k in itertools.islice(sorted(self.terms), 8):
            bits.append(f"({scalar_str(self.terms[k])})*{self.basis}[{self.key_str(k)}]")
        more = "" if len(self.terms) <= 8 else f" ... ({len(self.terms)} terms)"
        return f"{type(self).__name__}({' + '.join(bits)}{more})"


def _scalar_ring(c):
    from .scalars import ring_of

    return ring_of(c)


def word_product(f: Element, g: Element):
    """Bilinear concatenation product for multiplicative (word) bases."""
    a, b = f._aligned(g)
    bound = merge_bounds(a.bound, b.bound)
    terms: dict = {}
    deg = type(f).key_degree
    for k1, c1 in a.terms.items():
        for k2, c2 in b.terms.items():
            key = k1 + k2
            if bound is not None and deg(key) > bound:
                continue
            c = c1 * c2
            s = terms.get(key)
            s = c if s is None else s + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
    return type(f)(a.ring, a.basis, terms, bound=bound)


def matrices_with_margins(rows: tuple[int, ...], cols: tuple[int, ...]):
    """All nonnegative integer matrices with the given row and column sums,
    yielded as tuples of row tuples."""
    if sum(rows) != sum(cols):
        return
    if not rows:
        if not any(cols):
            yield ()
        return

    ncols = len(cols)

    def rows_rec(r, remaining):
        if r == len(rows) - 1:
            if sum(remaining) == rows[r]:
                yield (tuple(remaining),)
            return
        for row in bounded_rows(rows[r], remaining):
            rest = tuple(remaining[i] - row[i] for i in range(ncols))
            for tail in rows_rec(r + 1, rest):
                yield (row,) + tail

    def bounded_rows(total, caps):
        # weak compositions of total with entries capped by caps
        def rec(i, left):
            if i == ncols - 1:
                if left <= caps[i]:
                    yield (left,)
                return
            hi = min(left, caps[i])
            for v in range(hi + 1):
                for tail in rec(i + 1, left - v):
                    yield (v,) + tail

        yield from rec(0, total)

    yield from rows_rec(0, tuple(cols))


@cache
def column_reading_structure(rows: tuple[int, ...], cols: tuple[int, ...]):
    """Multiset of column readings of the matrices with the given margins.

    Each matrix is read column by column, top to bottom, recording its
    nonzero entries as ``(row_index, value)`` pairs per column; the result
    maps each reading to its multiplicity.  This is the integral core of
    the degreewise internal product on products of complete functions.
    """
    acc: dict = {}
    for M in matrices_with_margins(rows, cols):
        reading = tuple(
            tuple((r, M[r][c]) for r in range(len(rows)) if M[r][c])
            for c in range(len(cols))
        )
        acc[reading] = acc.get(reading, 0) + 1
    return tuple(sorted(acc.items()))
