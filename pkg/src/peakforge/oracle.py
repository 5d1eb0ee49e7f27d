"""Group algebras of the symmetric and hyperoctahedral groups.

These provide ground truth for the internal products: each graded
component of the level-1 algebra is anti-isomorphic to the descent algebra
of the symmetric group, and the span of the type-B complete basis is
anti-isomorphic to the descent algebra of the hyperoctahedral group.  The
checks here multiply descent classes by brute force and compare.
"""

from __future__ import annotations

from .algebra import Element
from .combinatorics import (
    compose,
    compose_signed,
    descent_composition,
    permutations,
    signed_descent_set,
    signed_permutations,
    type_b_compositions,
    type_b_descent_set,
)
from .linalg import GradedSubspace
from .scalars import QQ, common_ring
from . import mr
from . import sym

SYMMETRIC, HYPEROCTAHEDRAL = "Sn", "Bn"


class GroupAlgebraElement(Element):
    """Element of the group algebra; the basis tag names the group."""

    algebra = "group"
    bases = (SYMMETRIC, HYPEROCTAHEDRAL)
    key_degree = staticmethod(len)

    @property
    def group(self):
        return self.basis


def delta(ring, word, group=SYMMETRIC, coeff=1) -> GroupAlgebraElement:
    return GroupAlgebraElement(ring, group, {tuple(word): ring(coeff)})


def group_product(f: GroupAlgebraElement, g: GroupAlgebraElement) -> GroupAlgebraElement:
    """Bilinear extension of composition: (u o v)(i) = u(v(i))."""
    if f.group != g.group:
        raise ValueError("group mismatch")
    ring = common_ring(f.ring, g.ring)
    mul = compose if f.group == SYMMETRIC else compose_signed
    out: dict = {}
    for u, cu in f.terms.items():
        for v, cv in g.terms.items():
            if len(u) != len(v):
                raise ValueError("degree mismatch in group product")
            key = mul(u, v)
            c = ring(cu) * ring(cv)
            s = out.get(key)
            s = c if s is None else s + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return GroupAlgebraElement(ring, f.group, out)


def descent_class_sn(n: int, comp, ring=QQ) -> GroupAlgebraElement:
    """Sum of the permutations of 1..n with descent composition ``comp``."""
    comp = tuple(comp)
    terms = {p: ring(1) for p in permutations(n) if descent_composition(p) == comp}
    return GroupAlgebraElement(ring, SYMMETRIC, terms)


def descent_class_bn(n: int, comp, ring=QQ) -> GroupAlgebraElement:
    """Sum of the signed permutations whose descent set is CONTAINED IN the
    descent set of the type-B composition ``comp`` (the class matching the
    type-B complete basis)."""
    target = set(type_b_descent_set(tuple(comp)))
    terms = {}
    for w in signed_permutations(n):
        if set(signed_descent_set(w)) <= target:
            terms[w] = ring(1)
    return GroupAlgebraElement(ring, HYPEROCTAHEDRAL, terms)


def sym_to_group(f, n: int) -> GroupAlgebraElement:
    """Image of a degree-n element under ribbon -> exact descent class."""
    ribbons = sym.convert(f, sym.R)
    out = GroupAlgebraElement(ribbons.ring, SYMMETRIC, {})
    for I, c in ribbons.terms.items():
        if sum(I) != n:
            raise ValueError("element is not homogeneous of the stated degree")
        out = out + c * descent_class_sn(n, I, ribbons.ring)
    return out


def verify_descent_antimorphism(n: int):
    """Check that the internal product maps to the opposite product of
    descent classes: for all compositions I, J of n, the class expansion of
    R_I * R_J equals class(J) times class(I).  Returns (ok, failures)."""
    from .combinatorics import compositions

    comps = list(compositions(n))
    classes = {I: descent_class_sn(n, I) for I in comps}
    failures = []
    for I in comps:
        fI = sym.monomial(QQ, I, basis=sym.R)
        for J in comps:
            fJ = sym.monomial(QQ, J, basis=sym.R)
            lhs = sym_to_group(sym.internal_product(fI, fJ), n)
            rhs = group_product(classes[J], classes[I])
            if lhs.terms != rhs.terms:
                failures.append((I, J))
    return not failures, failures


def bsym_span(n: int, ring=QQ) -> GradedSubspace:
    """Coordinate-tracked span of the type-B complete basis elements inside
    the degree-n component of the level-2 algebra."""
    from .combinatorics import colored_compositions

    space = GradedSubspace(
        ring, sorted(colored_compositions(n)), degree=n, track=True
    )
    for comp in sorted(type_b_compositions(n)):
        element = mr.bsym_complete(comp, ring)
        grew = space.insert(element.terms, label=comp)
        if not grew:
            raise ArithmeticError(f"type-B basis element {comp} is dependent")
    return space


def verify_signed_antimorphism(n: int):
    """Type-B analogue: expand the internal product of two type-B complete
    basis elements over that basis, map to contained-descent classes, and
    compare with the opposite product in the hyperoctahedral group algebra.
    Returns (ok, failures); failures may flag products leaving the span."""
    comps = list(type_b_compositions(n))
    span = bsym_span(n)
    classes = {I: descent_class_bn(n, I) for I in comps}
    elements = {I: mr.bsym_complete(I) for I in comps}
    failures = []
    for I in comps:
        for J in comps:
            prod = mr.internal_product(elements[I], elements[J])
            coords = span.coordinates(prod.terms)
            if coords is None:
                failures.append((I, J, "outside the type-B span"))
                continue
            lhs = GroupAlgebraElement(QQ, HYPEROCTAHEDRAL, {})
            for K, c in coords.items():
                lhs = lhs + c * classes[K]
            rhs = group_product(classes[J], classes[I])
            if lhs.terms != rhs.terms:
                failures.append((I, J, "images differ"))
    return not failures, failures
