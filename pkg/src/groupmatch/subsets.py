"""Finite subsets of a group and the product-set algebra on them.

Subsets are immutable and iterate in ascending element order (integer
indices for finite groups, lexicographic coordinate tuples for lattice
groups), so every derived report is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyInput, MixedGroups, NotInA, ParseError


class GroupSubset:
    """An immutable finite subset of a group's elements.

    The owning group only needs to provide ``check_element``, ``mul``,
    ``identity`` and equality; both Cayley-table groups and integer
    lattices satisfy that interface.
    """

    __slots__ = ("group", "members", "elements")

    def __init__(self, group, members=()):
        elems = sorted({group.check_element(x) for x in members})
        self.group = group
        self.members = frozenset(elems)
        self.elements = tuple(elems)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.members

    def __eq__(self, other):
        if not isinstance(other, GroupSubset):
            return NotImplemented
        return self.group == other.group and self.members == other.members

    def __hash__(self):
        return hash((self.group, self.members))

    def __repr__(self):
        inner = ", ".join(str(x) for x in self.elements)
        return f"GroupSubset({self.group.describe()}, {{{inner}}})"

    def union(self, other: GroupSubset) -> GroupSubset:
        _same_group(self, other)
        return GroupSubset(self.group, self.members | other.members)

    def difference(self, other: GroupSubset) -> GroupSubset:
        _same_group(self, other)
        return GroupSubset(self.group, self.members - other.members)

    def intersection(self, other: GroupSubset) -> GroupSubset:
        _same_group(self, other)
        return GroupSubset(self.group, self.members & other.members)

    def issubset(self, other: GroupSubset) -> bool:
        _same_group(self, other)
        return self.members <= other.members


@dataclass(frozen=True)
class ProductWitness:
    """An element of a product set together with its factorizations."""

    value: object
    factorizations: tuple


def _same_group(*subsets: GroupSubset):
    group = subsets[0].group
    for s in subsets[1:]:
        if s.group != group:
            raise MixedGroups(f"subsets belong to different groups: {group.describe()} vs {s.group.describe()}")
    return group


def product_set(A: GroupSubset, B: GroupSubset) -> GroupSubset:
    """The set {a*b : a in A, b in B}; empty iff A or B is empty."""
    g = _same_group(A, B)
    return GroupSubset(g, {g.mul(a, b) for a in A for b in B})


def factorization_table(A: GroupSubset, B: GroupSubset) -> dict:
    """Map each c in AB to the sorted list of pairs (a, b) with a*b = c."""
    g = _same_group(A, B)
    table: dict = {}
    for a in A:
        for b in B:
            table.setdefault(g.mul(a, b), []).append((a, b))
    for pairs in table.values():
        pairs.sort()
    return table

def unique_products(A: GroupSubset, B: GroupSubset) -> list[ProductWitness]:
    """All c in AB with exactly one factorization c = a*b, ascending by c."""
    table = factorization_table(A, B)
    found = [
        ProductWitness(c, (pairs[0],))
        for c, pairs in table.items()
        if len(pairs) == 1
    ]
    found.sort(key=lambda w: w.value)
    return found


def candidate_set(A: GroupSubset, B: GroupSubset, a) -> GroupSubset:
    """The elements of B that a may legally be matched to: {x in B : a*x not in A}.

    The automatching case is B = A.
    """
    g = _same_group(A, B)
    a = g.check_element(a)
    if a not in A:
        raise NotInA(f"element {a} is not in A")
    return GroupSubset(g, {x for x in B if g.mul(a, x) not in A})


def stable_set(A: GroupSubset, B: GroupSubset, S: GroupSubset) -> GroupSubset:
    """{x in B : s*x in A for every s in S}, for nonempty S contained in A.

    Equals B minus the union of the candidate sets of the members of S, and
    satisfies S * result ⊆ A by construction.
    """
    g = _same_group(A, B, S)
    if len(S) == 0:
        raise EmptyInput("S must be nonempty")
    if not S.issubset(A):
        raise NotInA("S must be contained in A")
    return GroupSubset(g, {x for x in B if all(g.mul(s, x) in A for s in S)})


def parse_subset_literal(text: str, group) -> GroupSubset:
    """Parse a subset literal such as ``{0,2,4}`` or ``{(0,0),(1,2)}``.

    Finite groups take bare integer indices; lattice groups take integer
    coordinate tuples (bare integers are accepted when the lattice is
    one-dimensional).  Raises ParseError with a 1-based column on syntax
    errors; invalid members surface as ValueError from the subset
    constructor.
    """
    scanner = _Scanner(text)
    scanner.expect("{")
    members = []
    scanner.skip_ws()
    if scanner.peek() == "}":
        scanner.take()
    else:
        while True:
            members.append(scanner.value())
            scanner.skip_ws()
            ch = scanner.take()
            if ch == "}":
                break
            if ch != ",":
                raise ParseError(f"expected ',' or '}}', got {ch!r}", column=scanner.pos)
    scanner.skip_ws()
    if not scanner.at_end():
        raise ParseError("trailing characters after subset literal", column=scanner.pos + 1)
    if members and isinstance(members[0], int) and getattr(group, "d", None) == 1:
        members = [(x,) for x in members]
    return GroupSubset(group, members)


class _Scanner:
    """Tiny cursor over a one-line literal, tracking a 1-based column."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        if self.at_end():
            raise ParseError("unexpected end of input", column=self.pos + 1)
        ch = self.text[self.pos]
        self.pos += 1
        return ch

    def skip_ws(self):
        while not self.at_end() and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str):
        self.skip_ws()
        got = self.take()
        if got != ch:
            raise ParseError(f"expected {ch!r}, got {got!r}", column=self.pos)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while not self.at_end() and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise ParseError("expected an integer", column=start + 1)
        return int(self.text[start:self.pos])

    def value(self):
        self.skip_ws()
        if self.peek() == "(":
            self.take()
            coords = [self.integer()]
            while True:
                self.skip_ws()
                ch = self.take()
                if ch == ")":
                    return tuple(coords)
                if ch != ",":
                    raise ParseError(f"expected ',' or ')', got {ch!r}", column=self.pos)
                coords.append(self.integer())
        return self.integer()
