"""Noncommutative symmetric functions.

Bases, indexed by compositions:

* ``S`` -- products of complete functions S^I = S_{i_1} ... S_{i_r};
* ``L`` -- products of elementary functions;
* ``R`` -- ribbons, with R_n = S_n and R_{1^n} the n-th elementary.

The outer product concatenates words of complete functions.  The coproduct
makes the complete generating series grouplike.  The degreewise internal
product is computed by the splitting recursion, unrolled per pair of basis
words into an enumeration of nonnegative integer matrices with prescribed
margins; the embedding into free quasi-symmetric functions and the group
algebras of the symmetric groups provide two independent cross-checks (see
the test suite).
"""

from __future__ import annotations

from functools import cache

from .algebra import Element, column_reading_structure, merge_bounds, word_product
from .combinatorics import permutations_by_descent
from .scalars import common_ring, ring_of

S, L, R = "S", "L", "R"


class SymElement(Element):
    algebra = "sym"
    bases = (S, L, R)
    key_degree = staticmethod(sum)

    def __mul__(self, other):
        if isinstance(other, SymElement):
            return product(self, other)
        return self.scaled(other)


def monomial(ring, key, coeff=1, basis=S) -> SymElement:
    return SymElement.monomial(ring, tuple(key), coeff, basis=basis)


def unit(ring) -> SymElement:
    return SymElement.unit(ring, basis=S)


# --------------------------------------------------------------------------
# Basis conversions.  Everything routes through the S basis.


@cache
def _alternating_words(n: int):
    """Expansion of the n-th elementary in the S basis (and of S_n in the
    elementary basis): sum over compositions I of n of (-1)^(n - len(I)) S^I."""
    out = []
    for I in _compositions(n):
        sign = -1 if (n - len(I)) % 2 else 1
        out.append((I, sign))
    return tuple(out)


@cache
def _compositions(n: int):
    from .combinatorics import compositions

    return tuple(compositions(n))


@cache
def _coarsenings(I: tuple[int, ...]):
    """All ways to merge adjacent parts of I, with the number of merges."""
    if not I:
        return (((), 0),)
    out = []
    boundaries = len(I) - 1
    for mask in range(1 << boundaries):
        parts = [I[0]]
        merges = 0
        for i in range(1, len(I)):
            if mask >> (i - 1) & 1:
                parts[-1] += I[i]
                merges += 1
            else:
                parts.append(I[i])
        out.append((tuple(parts), merges))
    return tuple(out)


@cache
def _complete_to_ribbon(I):
    return tuple((J, 1) for J, _ in _coarsenings(I))


@cache
def _ribbon_to_complete(I):
    return tuple((J, -1 if m % 2 else 1) for J, m in _coarsenings(I))


def _expand_words(terms, ring, table):
    """Word-level substitution: each key is replaced by table(key)."""
    out: dict = {}
    for key, c in terms.items():
        for new_key, sign in table(key):
            s = out.get(new_key)
            s = sign * c if s is None else s + sign * c
            if s:
                out[new_key] = s
            else:
                out.pop(new_key, None)
    return out


def _expand_letters(terms, ring, letter_table):
    """Letterwise substitution: each word maps to the concatenation product
    of the expansions of its letters."""
    out: dict = {}
    for word, c in terms.items():
        acc = {(): c}
        for letter in word:
            nxt: dict = {}
            for prefix, c0 in acc.items():
                for tail, sign in letter_table(letter):
                    key = prefix + tail
                    s = nxt.get(key)
                    s = sign * c0 if s is None else s + sign * c0
                    if s:
                        nxt[key] = s
                    else:
                        nxt.pop(key, None)
            acc = nxt
        for key, c0 in acc.items():
            s = out.get(key)
            s = c0 if s is None else s + c0
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def convert(f: SymElement, basis: str) -> SymElement:
    """Re-express an element in another basis; round-trips are exact."""
    if basis == f.basis:
        return f
    if f.basis == L:
        terms = _expand_letters(f.terms, f.ring, _alternating_words)
        g = SymElement(f.ring, S, terms, bound=f.bound)
        return convert(g, basis)
    if f.basis == R:
        terms = _expand_words(f.terms, f.ring, _ribbon_to_complete)
        g = SymElement(f.ring, S, terms, bound=f.bound)
        return convert(g, basis)
    # from S
    if basis == L:
        terms = _expand_letters(f.terms, f.ring, _alternating_words)
        return SymElement(f.ring, L, terms, bound=f.bound)
    if basis == R:
        terms = _expand_words(f.terms, f.ring, _complete_to_ribbon)
        return SymElement(f.ring, R, terms, bound=f.bound)
    raise ValueError(f"unknown basis {basis!r}")


# --------------------------------------------------------------------------
# Products and coproduct


def product(f: SymElement, g: SymElement) -> SymElement:
    """Concatenation product, returned in the basis of the left factor."""
    out = word_product(convert(f, S), convert(g, S))
    return convert(out, f.basis)


def coproduct(f: SymElement) -> dict:
    """Coproduct in the S (x) S basis, as a map (left key, right key) -> coeff.

    The complete generating series is grouplike, so each letter S_k splits
    as sum over i + j = k of S_i (x) S_j and words split multiplicatively.
    """
    f = convert(f, S)
    out: dict = {}
    for word, c in f.terms.items():
        parts = {((), ()): 1}
        for k in word:
            nxt: dict = {}
            for (lw, rw), mult in parts.items():
                for i in range(k + 1):
                    j = k - i
                    key = (lw + ((i,) if i else ()), rw + ((j,) if j else ()))
                    nxt[key] = nxt.get(key, 0) + mult
            parts = nxt
        for key, mult in parts.items():
            s = out.get(key)
            s = mult * c if s is None else s + mult * c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


# --------------------------------------------------------------------------
# Internal product


@cache
def internal_structure(I, J):
    """Integer structure constants of S^I * S^J in the S basis.

    Splitting the left word and pairing against the iterated coproduct of
    the right word leaves one nonnegative integer matrix per term, with row
    sums J and column sums I; the resulting word reads the columns left to
    right, each top to bottom.
    """
    if sum(I) != sum(J):
        return ()
    acc: dict = {}
    for reading, mult in column_reading_structure(J, I):
        word = tuple(v for col in reading for _, v in col)
        acc[word] = acc.get(word, 0) + mult
    return tuple(sorted(acc.items()))


def internal_product(f: SymElement, g: SymElement) -> SymElement:
    """Degreewise internal product; cross-degree terms vanish."""
    a = convert(f, S)
    b = convert(g, S)
    ring = common_ring(a.ring, b.ring)
    a, b = a.with_ring(ring), b.with_ring(ring)
    out: dict = {}
    for I, ca in a.terms.items():
        dI = sum(I)
        for J, cb in b.terms.items():
            if sum(J) != dI:
                continue
            c = ca * cb
            for K, mult in internal_structure(I, J):
                s = out.get(K)
                s = mult * c if s is None else s + mult * c
                if s:
                    out[K] = s
                else:
                    out.pop(K, None)
    result = SymElement(ring, S, out, bound=merge_bounds(a.bound, b.bound))
    return convert(result, f.basis)


# --------------------------------------------------------------------------
# Antipode and series


def antipode(f: SymElement) -> SymElement:
    """The Hopf antipode: S_n maps to (-1)^n times the n-th elementary, and
    products reverse."""
    a = convert(f, S)
    out: dict = {}
    for word, c in a.terms.items():
        sign = -1 if sum(word) % 2 else 1
        expanded = _expand_letters(
            {tuple(reversed(word)): sign * c}, a.ring, _alternating_words
        )
        for key, v in expanded.items():
            s = out.get(key)
            s = v if s is None else s + v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    result = SymElement(a.ring, S, out, bound=a.bound)
    return convert(result, f.basis)


def sigma_series(ring, n_max: int) -> SymElement:
    """The complete generating series 1 + S_1 + S_2 + ... truncated."""
    terms = {(): ring(1)}
    for n in range(1, n_max + 1):
        terms[(n,)] = ring(1)
    return SymElement(ring, S, terms, bound=n_max)


def lambda_series(ring, n_max: int, t=None) -> SymElement:
    """The elementary generating series sum_k t^k Lambda_k, truncated, in
    the S basis.  ``t`` defaults to one."""
    t = ring(1) if t is None else ring(t)
    terms: dict = {(): ring(1)}
    power = ring(1)
    for k in range(1, n_max + 1):
        power = power * t
        if not power:
            continue
        for I, sign in _alternating_words(k):
            c = sign * power
            s = terms.get(I)
            s = c if s is None else s + c
            if s:
                terms[I] = s
            else:
                terms.pop(I, None)
    return SymElement(ring, S, terms, bound=n_max)


def one_minus_q_series(q, n_max: int) -> SymElement:
    """The grouplike series implementing the (1-q) alphabet transform:
    lambda_{-q} times sigma, truncated."""
    ring = ring_of(q)
    return product(lambda_series(ring, n_max, t=-q), sigma_series(ring, n_max))


@cache
def _one_minus_q_letter(q, k: int):
    series = one_minus_q_series(q, k)
    return tuple(sorted(series.homogeneous(k).terms.items()))


def one_minus_q_transform(f: SymElement, q) -> SymElement:
    """f evaluated on the (1-q)-dilated alphabet.

    Algebra endomorphism of Sym: each letter S_k is replaced by the
    degree-k component of the (1-q) series.  Agrees with the internal
    product against :func:`one_minus_q_series` (tested)."""
    ring = common_ring(ring_of(q), f.ring)
    a = convert(f, S).with_ring(ring)
    q = ring(q)
    out: dict = {}
    for word, c in a.terms.items():
        acc = {(): c}
        for letter in word:
            nxt: dict = {}
            for prefix, c0 in acc.items():
                for tail, coeff in _one_minus_q_letter(q, letter):
                    key = prefix + tail
                    s = nxt.get(key)
                    s = coeff * c0 if s is None else s + coeff * c0
                    if s:
                        nxt[key] = s
                    else:
                        nxt.pop(key, None)
            acc = nxt
        for key, c0 in acc.items():
            s = out.get(key)
            s = c0 if s is None else s + c0
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    result = SymElement(ring, S, out, bound=a.bound)
    return convert(result, f.basis)


def power_sum(n: int, ring) -> SymElement:
    """The degree-n power sum (Dynkin element): the alternating sum of the
    hook ribbons R_{1^k, n-k}."""
    if n < 1:
        raise ValueError("power sums start in degree 1")
    terms = {}
    for k in range(n):
        key = (1,) * k + (n - k,)
        terms[key] = ring(-1 if k % 2 else 1)
    return SymElement(ring, R, terms)


def to_fqsym(f: SymElement):
    """Embedding into free quasi-symmetric functions: a ribbon is the sum
    of G_sigma over permutations with that descent composition."""
    from .fqsym import FqsymElement

    a = convert(f, R)
    out: dict = {}
    for I, c in a.terms.items():
        for p in permutations_by_descent(sum(I))[I]:
            out[p] = c
    return FqsymElement(a.ring, "G", out, bound=a.bound)
