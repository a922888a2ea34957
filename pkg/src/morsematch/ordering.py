"""Total orders on weight values.

A weight is either a real number or a :class:`ValueSet`, a finite set of
weights all of the same nesting depth.  Sets are ordered lexicographically
"from the top": the set containing the largest distinguishing element wins,
and a set beats any proper superset whose extra elements are all smaller.
Iterating this gives a strict total order on arbitrarily nested finite sets,
which is what vertex valuations turn into after repeated subdivision.
"""

from __future__ import annotations

import numbers
from functools import cmp_to_key, total_ordering
from typing import Iterable

from .errors import IncomparableDepth

LESS = -1
EQUAL = 0
GREATER = 1


def _is_scalar(value) -> bool:
    return isinstance(value, numbers.Real)


def compare_values(a, b) -> int:
    """Compare two weights of the same kind; returns -1, 0 or 1.

    Scalars compare numerically, value sets lexicographically; any other pair
    of same-type totally ordered keys (cube order keys) compares through its
    own operators.
    """
    if _is_scalar(a) and _is_scalar(b):
        return (a > b) - (a < b)
    if isinstance(a, ValueSet) and isinstance(b, ValueSet):
        return lex_compare(a, b)
    if type(a) is type(b):
        try:
            if a == b:
                return EQUAL
            return LESS if a < b else GREATER
        except TypeError:
            pass
    raise IncomparableDepth(f"cannot order {a!r} against {b!r}")


def value_depth(value):
    """Nesting depth: 0 for scalars, 1 + element depth for sets.

    The empty set has no intrinsic depth and reports None.
    """
    if _is_scalar(value):
        return 0
    if isinstance(value, ValueSet):
        if not value.elements:
            return None
        inner = value_depth(value.elements[0])
        return None if inner is None else inner + 1
    raise IncomparableDepth(f"not a weight value: {value!r}")


@total_ordering
class ValueSet:
    """Canonical finite set of mutually comparable weights.

    Elements are deduplicated and stored sorted descending, so the stored
    tuple doubles as the comparison sequence.
    """

    __slots__ = ("elements",)

    def __init__(self, elements: Iterable = ()):
        ordered = sorted(elements, key=cmp_to_key(compare_values), reverse=True)
        deduped = []
        for item in ordered:
            if not deduped or compare_values(deduped[-1], item) != EQUAL:
                deduped.append(item)
        object.__setattr__(self, "elements", tuple(deduped))

    def __setattr__(self, name, value):
        raise AttributeError("ValueSet is immutable")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, item):
        return any(compare_values(item, e) == EQUAL for e in self.elements)

    def __hash__(self):
        return hash(self.elements)

    def __eq__(self, other):
        if isinstance(other, ValueSet):
            return self.elements == other.elements
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, ValueSet):
            return lex_compare(self, other) == LESS
        if _is_scalar(other):
            raise IncomparableDepth("cannot order a set against a scalar")
        return NotImplemented

    def __repr__(self):
        return "{" + ", ".join(repr(e) for e in self.elements) + "}"


def lex_compare(a: ValueSet, b: ValueSet) -> int:
    """Lexicographic set order; -1, 0 or 1.

    Rules, with A and B the two sets:
      * A == B           -> equal;
      * A proper subset  -> A > B iff min(A) > max(B minus A); the empty set
        is greater than everything (its min is taken as +infinity);
      * incomparable     -> A > B iff the largest element of the symmetric
        difference lies in A.
    """
    sa, sb = set(a.elements), set(b.elements)
    if sa == sb:
        return EQUAL
    if sa < sb:
        if not sa:
            return GREATER
        diff = sb - sa
        return GREATER if compare_values(min(sa, key=_cmp_key), max(diff, key=_cmp_key)) == GREATER else LESS
    if sb < sa:
        return -lex_compare(b, a)
    top = max(sa ^ sb, key=_cmp_key)
    return GREATER if top in sa else LESS


def shortlex_compare(a: ValueSet, b: ValueSet) -> int:
    """Cardinality first (shorter is smaller), lex order on equal sizes."""
    if len(a) != len(b):
        return LESS if len(a) < len(b) else GREATER
    return lex_compare(a, b)


_cmp_key = cmp_to_key(compare_values)


def sort_key(value):
    """Key usable with sorted() for scalars and ValueSets alike."""
    return _cmp_key(value)


class _Infinity:
    """Sentinel larger than every weight; saturation value of unmatched vertices."""

    __slots__ = ()

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return isinstance(other, _Infinity)

    def __hash__(self):
        return hash("morsematch.INFINITY")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, _Infinity)

    def __gt__(self, other):
        return not isinstance(other, _Infinity)

    def __ge__(self, other):
        return True


INFINITY = _Infinity()


def saturation_at_least(saturation, threshold) -> bool:
    """saturation >= threshold, where either side may be INFINITY."""
    if isinstance(saturation, _Infinity):
        return True
    if isinstance(threshold, _Infinity):
        return False
    return compare_values(saturation, threshold) >= 0
