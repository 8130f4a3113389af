"""Named semigroup families with fixed element-id layouts.

Layouts (stable; golden files depend on them):

* ``M(m, r)``: id ``i`` is ``a**(i+1)``, order ``m + r - 1``.
* ``C(n)``: same as ``M(1, n)``; id ``i`` is ``g**(i+1)``, so id ``n-1`` is the identity.
* ``B(n)``: id 0 is the zero, id ``(i-1)*n + j`` is the pair ``(i, j)``.
* ``Zmult(n)``: id ``i`` is the residue ``i``.
* ``Signs``: ids 0, 1, 2 are -1, 0, 1.
* ``A x B``: id ``a*|B| + b`` is the pair ``(a, b)``.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass

from .core import Semigroup, load_semigroup
from .errors import ConstructSyntaxError, InvalidParameters


def _positive(name, *values):
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise InvalidParameters(f"{name} needs positive integer parameters, got {values}")


def make_monogenic(m: int, r: int) -> Semigroup:
    _positive("M(m, r)", m, r)
    n = m + r - 1

    def reduce(s):
        return s if s < m else m + (s - m) % r

    table = [[reduce(i + j + 2) - 1 for j in range(n)] for i in range(n)]
    names = ["a" if k == 1 else f"a^{k}" for k in range(1, n + 1)]
    return Semigroup(table, names)


def make_cyclic_group(n: int) -> Semigroup:
    _positive("C(n)", n)
    return make_monogenic(1, n)


def make_brandt(n: int) -> Semigroup:
    _positive("B(n)", n)
    size = n * n + 1
    table = [[0] * size for _ in range(size)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for l in range(1, n + 1):
                # (i, j)(j, l) = (i, l); mismatched inner indices give 0
                table[(i - 1) * n + j][(j - 1) * n + l] = (i - 1) * n + l
    names = ["0"] + [f"({i},{j})" for i in range(1, n + 1) for j in range(1, n + 1)]
    return Semigroup(table, names)


def brandt_id(n: int, i: int, j: int) -> int:
    return (i - 1) * n + j


def make_zn_mult(n: int) -> Semigroup:
    _positive("Zmult(n)", n)
    return Semigroup([[i * j % n for j in range(n)] for i in range(n)], [str(i) for i in range(n)])


def signs_semigroup() -> Semigroup:
    values = [-1, 0, 1]
    return Semigroup(
        [[values.index(x * y) for y in values] for x in values],
        [str(v) for v in values],
    )


def make_direct_product(A: Semigroup, B: Semigroup) -> Semigroup:
    nb = B.order
    n = A.order * nb
    table = [
        [A.table[u // nb][v // nb] * nb + B.table[u % nb][v % nb] for v in range(n)]
        for u in range(n)
    ]
    names = [f"({A.label(u // nb)},{B.label(u % nb)})" for u in range(n)]
    return Semigroup(table, names)


_ARITY = {"M": 2, "C": 1, "B": 1, "ZMULT": 1, "SIGNS": 0}
_BUILDERS = {
    "M": make_monogenic,
    "C": make_cyclic_group,
    "B": make_brandt,
    "ZMULT": make_zn_mult,
    "SIGNS": signs_semigroup,
}
_CANONICAL = {"M": "M", "C": "C", "B": "B", "ZMULT": "Zmult", "SIGNS": "Signs"}


@dataclass(frozen=True)
class FamilySpec:
    """A parsed construct: a named family member, a product, or a table file.

    ``kind`` is one of ``M C B ZMULT SIGNS PRODUCT FILE``.
    """

    kind: str
    params: tuple = ()
    factors: tuple[FamilySpec, ...] = ()
    path: str | None = None

    def build(self) -> Semigroup:
        if self.kind == "PRODUCT":
            S = self.factors[0].build()
            for f in self.factors[1:]:
                S = make_direct_product(S, f.build())
            return S
        if self.kind == "FILE":
            return load_semigroup(self.path)
        return _BUILDERS[self.kind](*self.params)

    def __str__(self) -> str:
        if self.kind == "PRODUCT":
            return "x".join(str(f) for f in self.factors)
        if self.kind == "FILE":
            return self.path
        if self.kind == "SIGNS":
            return "Signs"
        return f"{_CANONICAL[self.kind]}({','.join(map(str, self.params))})"


_TERM = re.compile(r"\s*([A-Za-z]+)\s*(?:\(([^()]*)\))?\s*")


def _parse_term(text: str, pos: int) -> tuple[FamilySpec, int]:
    match = _TERM.match(text, pos)
    if not match:
        raise ConstructSyntaxError(f"expected a family name at position {pos} in {text!r}")
    name, args = match.group(1).upper(), match.group(2)
    if name not in _ARITY:
        raise ConstructSyntaxError(f"unknown family {match.group(1)!r}; expected one of M, C, B, Zmult, Signs")
    params: tuple = ()
    if args is not None and args.strip():
        try:
            params = tuple(int(a) for a in args.split(","))
        except ValueError:
            raise ConstructSyntaxError(f"non-integer argument in {match.group(0).strip()!r}") from None
    if len(params) != _ARITY[name]:
        raise ConstructSyntaxError(
            f"{_CANONICAL[name]} takes {_ARITY[name]} argument(s), got {len(params)}"
        )
    if _ARITY[name]:
        _positive(_CANONICAL[name], *params)
    return FamilySpec(name, params), match.end()


def parse_construct(text: str) -> FamilySpec:
    """Parse ``"M(3,2)"``, ``"B(2)"``, ``"Zmult(4)"``, ``"C(6)xC(2)"``, ``"Signs"``.

    Names are case-insensitive and ``x`` joins factors of a direct product.
    A string naming an existing file is read as a Cayley-table JSON file.
    """
    if os.path.isfile(text):
        return FamilySpec("FILE", path=text)
    factors = []
    pos = 0
    while True:
        term, pos = _parse_term(text, pos)
        factors.append(term)
        if pos == len(text):
            break
        if text[pos] not in "xX":
            raise ConstructSyntaxError(f"expected 'x' or end of input at position {pos} in {text!r}")
        pos += 1
    if len(factors) == 1:
        return factors[0]
    return FamilySpec("PRODUCT", factors=tuple(factors))


def build(text: str) -> Semigroup:
    return parse_construct(text).build()
