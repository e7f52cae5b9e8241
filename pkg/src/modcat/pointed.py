"""Module-class bookkeeping over pointed categories of a finite abelian group.

Over an algebraically closed field, indecomposable module categories over
G-graded vector spaces are indexed by a subgroup H of G together with a class
in H^2(H; k*).  For abelian H that cohomology group is the exterior square
with the p-torsion removed in characteristic p:

    H^2(H; k*) = sum_{i<j} Z/gcd(n_i, n_j)   (p-parts dropped when char = p)

where the n_i are cyclic factors of H.  Such a module class is separable
exactly when the characteristic does not divide |H| (the twisted group
algebra is then separable); the criterion is applied uniformly, and the test
suite confirms it against an explicit cocycle count for small groups.

Over the rationals the group H^2(Z/2; Q*) is the square-class group of Q,
which is infinite; :func:`square_class_witnesses` produces explicit pairwise
distinct witnesses instead of a class list.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod

from .errors import GuardError, ModcatError
from .fieldprofile import FieldKind, FieldProfile

SUBGROUP_ORDER_LIMIT = 512


class OrderGuardExceeded(GuardError):
    def __init__(self, order: int):
        super().__init__(f"group order {order} exceeds the guard {SUBGROUP_ORDER_LIMIT}")


class UnsupportedFieldGroupPair(ModcatError):
    pass


class UnsupportedField(ModcatError):
    pass


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Direct sum of cyclic groups, given by invariant factors n_1 | n_2 | ...

    The empty tuple is the trivial group.
    """

    cyclic_orders: tuple[int, ...]

    def __init__(self, cyclic_orders):
        orders = tuple(int(n) for n in cyclic_orders)
        for n in orders:
            if n < 2:
                raise ValueError("cyclic orders must be at least 2")
        for a, b in zip(orders, orders[1:]):
            if b % a != 0:
                raise ValueError("invariant factors must form a divisibility chain")
        object.__setattr__(self, "cyclic_orders", orders)

    @property
    def order(self) -> int:
        return prod(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return self.cyclic_orders[-1] if self.cyclic_orders else 1

    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(n) for n in self.cyclic_orders)))

    def add(self, g, h) -> tuple[int, ...]:
        return tuple((a + b) % n for a, b, n in zip(g, h, self.cyclic_orders))

    def neg(self, g) -> tuple[int, ...]:
        return tuple((-a) % n for a, n in zip(g, self.cyclic_orders))

    def zero(self) -> tuple[int, ...]:
        return tuple(0 for _ in self.cyclic_orders)

    def element_order(self, g) -> int:
        o = 1
        for a, n in zip(g, self.cyclic_orders):
            if a:
                o = o * (n // gcd(n, a)) // gcd(o, n // gcd(n, a))
        return o

    def __str__(self) -> str:
        if not self.cyclic_orders:
            return "1"
        return " x ".join(f"Z/{n}" for n in self.cyclic_orders)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its elements in ambient coordinates."""

    ambient: FiniteAbelianGroup
    elements: tuple[tuple[int, ...], ...]
    generators: tuple[tuple[int, ...], ...]
    invariant_factors: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "1"
        return " x ".join(f"Z/{n}" for n in self.invariant_factors)


def _closure(group: FiniteAbelianGroup, gens) -> frozenset:
    seen = {group.zero()}
    frontier = [group.zero()]
    gens = list(gens)
    while frontier:
        g = frontier.pop()
        for h in gens:
            s = group.add(g, h)
            if s not in seen:
                seen.add(s)
                frontier.append(s)
    return frozenset(seen)


def _invariant_factors_of(group: FiniteAbelianGroup, elements) -> tuple[int, ...]:
    """Invariant factors of a subgroup, from its order-dividing counts.

    For each prime p, if the p-primary part has type (l_1 >= l_2 >= ...),
    then #{x : p^j x = 0} = p^(sum_i min(l_i, j)); the jumps of that count
    recover the l_i, and the primary types then merge into a divisibility
    chain in the usual largest-with-largest way.
    """
    order = len(elements)
    if order == 1:
        return ()
    primes = []
    m = order
    d = 2
    while d * d <= m:
        if m % d == 0:
            primes.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.append(m)

    element_orders = [group.element_order(x) for x in elements]
    primary: dict[int, list[int]] = {}
    for p in primes:
        jumps = []  # jumps[j-1] = #{i : l_i >= j}
        prev = 1
        j = 1
        while True:
            pj = p ** j
            count = sum(1 for o in element_orders if pj % o == 0)
            if count == prev:
                break
            width = 0
            ratio = count // prev
            while ratio > 1:
                ratio //= p
                width += 1
            jumps.append(width)
            prev = count
            j += 1
        lambdas = [sum(1 for w in jumps if w >= i) for i in range(1, jumps[0] + 1)]
        primary[p] = sorted(lambdas, reverse=True)

    width = max(len(t) for t in primary.values())
    factors = []
    for i in range(width):
        f = 1
        for p, t in primary.items():
            if i < len(t):
                f *= p ** t[i]
        factors.append(f)
    return tuple(sorted(factors))


def subgroups(group: FiniteAbelianGroup) -> list[Subgroup]:
    """All subgroups, canonically ordered by (order, sorted element list)."""
    if group.order > SUBGROUP_ORDER_LIMIT:
        raise OrderGuardExceeded(group.order)
    all_elements = group.elements()
    found: dict[frozenset, tuple] = {}
    trivial = _closure(group, [])
    found[trivial] = ()
    frontier = [(trivial, ())]
    while frontier:
        current, gens = frontier.pop()
        for x in all_elements:
            if x in current:
                continue
            new_gens = gens + (x,)
            bigger = _closure(group, new_gens)
            if bigger not in found:
                found[bigger] = new_gens
                frontier.append((bigger, new_gens))
    result = []
    for elements, gens in found.items():
        ordered = tuple(sorted(elements))
        result.append(Subgroup(ambient=group, elements=ordered, generators=gens,
                               invariant_factors=_invariant_factors_of(group, elements)))
    result.sort(key=lambda s: (s.order, s.elements))
    return result


@dataclass(frozen=True)
class H2Descriptor:
    """Isomorphism type of H^2(H; k*): a finite abelian group or an infinite
    marker for the rational square-class case."""

    cyclic_orders: tuple[int, ...]
    infinite: bool = False

    @property
    def order(self) -> int:
        if self.infinite:
            raise ValueError("infinite group has no order")
        return prod(self.cyclic_orders) if self.cyclic_orders else 1

    @property
    def label(self) -> str:
        if self.infinite:
            return "INFINITE_SQUARE_CLASS_GROUP"
        if not self.cyclic_orders:
            return "1"
        return " x ".join(f"Z/{n}" for n in self.cyclic_orders)


def _strip_p_part(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def h2_of_abelian(group, field: FieldProfile) -> H2Descriptor:
    """H^2(H; k*) for H a finite abelian group.

    ``group`` may be a FiniteAbelianGroup, a Subgroup, or a plain tuple of
    cyclic orders.  Over an algebraically closed field the answer is the
    exterior square of H, with p-torsion removed in characteristic p since
    k* then has no p-torsion.  The only supported non-closed case is H = Z/2
    over the rationals, where the group is the infinite square-class group.
    """
    if isinstance(group, FiniteAbelianGroup):
        orders = group.cyclic_orders
    elif isinstance(group, Subgroup):
        orders = group.invariant_factors
    else:
        orders = tuple(int(n) for n in group)
    if field.kind == FieldKind.ALG_CLOSED:
        parts = []
        for i in range(len(orders)):
            for j in range(i + 1, len(orders)):
                g = gcd(orders[i], orders[j])
                if field.char:
                    g = _strip_p_part(g, field.char)
                if g > 1:
                    parts.append(g)
        return H2Descriptor(cyclic_orders=tuple(sorted(parts)))
    if field.kind == FieldKind.RATIONALS and orders == (2,):
        return H2Descriptor(cyclic_orders=(), infinite=True)
    raise UnsupportedFieldGroupPair(
        f"H^2 is only computed over algebraically closed fields, or for Z/2 over Q "
        f"(got {field.code} with orders {orders})")


@dataclass(frozen=True)
class ModuleClass:
    """One indecomposable module class: a subgroup plus a cohomology class."""

    subgroup: Subgroup
    cocycle_class_index: int
    separable: bool

    @property
    def label(self) -> str:
        ambient = self.subgroup.ambient
        if self.subgroup.order == 1:
            base = f"Vect({ambient})"
        elif self.subgroup.order == ambient.order:
            base = "Vect"
        else:
            base = f"Mod[H={self.subgroup}]"
        if self.cocycle_class_index:
            base += f"(psi_{self.cocycle_class_index})"
        return base


def module_classes(group: FiniteAbelianGroup, field: FieldProfile) -> list[ModuleClass]:
    """All (subgroup, cohomology class) pairs with their separability flags."""
    if field.kind != FieldKind.ALG_CLOSED:
        raise UnsupportedField(
            f"module classes are computed over algebraically closed fields, got {field.code}")
    if group.order > SUBGROUP_ORDER_LIMIT:
        raise OrderGuardExceeded(group.order)
    classes = []
    for sub in subgroups(group):
        h2 = h2_of_abelian(sub.invariant_factors, field)
        separable = field.char == 0 or sub.order % field.char != 0
        for index in range(h2.order):
            classes.append(ModuleClass(subgroup=sub, cocycle_class_index=index,
                                       separable=separable))
    return classes


@dataclass(frozen=True)
class PointedCatData:
    """Carrier for a pointed category datum: a finite abelian grading group,
    an associator class tag, and an optional braiding parameter.

    The associator is tracked as an opaque tag only; the class enumeration
    below is for the untwisted case, and a nonzero tag refuses it rather
    than silently ignoring the twist.
    """

    group: FiniteAbelianGroup
    cocycle_tag: int = 0
    braiding: "BraidingParam | None" = None

    def module_classes(self, field: FieldProfile) -> "list[ModuleClass]":
        if self.cocycle_tag != 0:
            raise UnsupportedFieldGroupPair(
                "module classes are enumerated for the trivial associator class only")
        return module_classes(self.group, field)


@dataclass(frozen=True)
class BraidingParam:
    """A braiding on Z/p-graded vector spaces: a p-th root of unity zeta^e."""

    p: int
    zeta_exponent: int

    def __post_init__(self):
        if not (0 <= self.zeta_exponent < self.p):
            raise ValueError("zeta exponent must lie in [0, p)")

    @property
    def is_trivial(self) -> bool:
        return self.zeta_exponent == 0


def braidings_on_cyclic(p: int, field: FieldProfile) -> list[BraidingParam]:
    """All braidings on Z/p-graded vector spaces over the given closed field.

    Away from the characteristic there are p of them, one per p-th root of
    unity; in characteristic p the only p-th root of unity is 1.
    """
    if field.kind != FieldKind.ALG_CLOSED:
        raise UnsupportedField("braidings are enumerated over algebraically closed fields")
    if field.char == p:
        return [BraidingParam(p, 0)]
    return [BraidingParam(p, e) for e in range(p)]


def square_class_witnesses(bound: int) -> list[int]:
    """Squarefree integers up to the bound: distinct square classes of Q*.

    Any two distinct squarefree integers have a non-square ratio, so the list
    witnesses pairwise inequivalent classes and grows without bound.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    witnesses = []
    for n in range(1, bound + 1):
        squarefree = True
        d = 2
        while d * d <= n:
            if n % (d * d) == 0:
                squarefree = False
                break
            d += 1
        if squarefree:
            witnesses.append(n)
    return witnesses
