"""Modules with a non-negative integer basis over weak based rings.

A module datum assigns to every ring basis index i a rank x rank matrix
action[i] with action[i][l][k] = coefficient of m_k in m_l * b_i.  The module
law is checked exhaustively: action matrices must satisfy

    action(i) action(j) = sum_k c[i][j][k] action(k)          (composition)
    sum_i a[i] action(i) = identity                            (unit action)

Irreducibility asks that the closure of any single basis index under the
positive-entry reachability relation is the whole basis; indecomposability
asks that the undirected positivity graph is connected.

The enumerations implement the finiteness bounds of the classification
argument.  With b the sum of all ring basis elements and b^2 = sum n_i b_i,
set N = max n_i.  For an irreducible module the total action matrix F of b is
strictly positive, its minimal row sum f_min satisfies N f_min >= f_min^2,
and N^2 >= sum_{j,k} F[l0][j] F[j][k] for the minimizing row l0.  That bounds
the module rank by N and the entries through the N^2 budget.  For ring
homomorphisms the coordinate sums of f(b) are bounded by |J| N, with N taken
from the source ring.  Both searches accept a cap multiplier so the stability
of the counts under enlarged caps can be demonstrated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .basedring import (ValidatedRing, WeakBasedCertificate,
                        find_weak_based_involutions)
from .errors import GuardError, ValidationError

ENUMERATION_RANK_LIMIT = 8


class NegativeEntry(ValidationError):
    def __init__(self, i: int, l: int, k: int):
        super().__init__(f"negative action entry at generator {i}, cell ({l}, {k})")
        self.indices = (i, l, k)


class UnitActionFails(ValidationError):
    def __init__(self):
        super().__init__("the ring unit does not act as the identity matrix")


class ActionLawFails(ValidationError):
    def __init__(self, i: int, j: int):
        super().__init__(f"action(b_{i}) action(b_{j}) != action(b_{i} b_{j})")
        self.indices = (i, j)


class RingNotWeakBased(ValidationError):
    def __init__(self):
        super().__init__("ring admits no weak based involution")


class RankGuardExceeded(GuardError):
    def __init__(self, rank: int):
        super().__init__(f"rank {rank} exceeds the enumeration guard {ENUMERATION_RANK_LIMIT}")


@dataclass(frozen=True)
class ZPlusModuleData:
    ring: ValidatedRing
    rank: int
    action: tuple  # per ring basis index, a rank x rank tuple of tuples

    @classmethod
    def build(cls, ring: ValidatedRing, action) -> "ZPlusModuleData":
        action = tuple(tuple(tuple(row) for row in mat) for mat in action)
        rank = len(action[0]) if action else 0
        return cls(ring=ring, rank=rank, action=action)


def _mat_mul(a, b, r):
    return tuple(tuple(sum(a[l][s] * b[s][k] for s in range(r)) for k in range(r))
                 for l in range(r))


def _identity(r):
    return tuple(tuple(1 if l == k else 0 for k in range(r)) for l in range(r))


class ValidatedModule:
    """A module datum whose laws have been checked."""

    def __init__(self, data: ZPlusModuleData):
        self.data = data
        self.ring = data.ring
        self.rank = data.rank
        self.action = data.action

    def total_action(self):
        """Matrix of the action of b = sum of all ring basis elements."""
        r = self.rank
        return tuple(tuple(sum(mat[l][k] for mat in self.action) for k in range(r))
                     for l in range(r))

    def canonical_key(self):
        """Lexicographically minimal concatenated action matrices over
        simultaneous permutations of the module basis."""
        r = self.rank
        best = None
        for perm in itertools.permutations(range(r)):
            key = tuple(mat[perm[l]][perm[k]]
                        for mat in self.action for l in range(r) for k in range(r))
            if best is None or key < best:
                best = key
        return (self.rank, best)

    def __repr__(self) -> str:
        return f"ValidatedModule(rank={self.rank} over rank-{self.ring.rank} ring)"


def validate_module(data: ZPlusModuleData) -> ValidatedModule:
    ring = data.ring
    r = data.rank
    if len(data.action) != ring.rank:
        raise ValidationError("need one action matrix per ring basis index")
    for i, mat in enumerate(data.action):
        if len(mat) != r or any(len(row) != r for row in mat):
            raise ValidationError(f"action matrix {i} is not rank x rank")
        for l in range(r):
            for k in range(r):
                if mat[l][k] < 0:
                    raise NegativeEntry(i, l, k)
    unit_action = tuple(
        tuple(sum(a * data.action[i][l][k] for i, a in enumerate(ring.unit_coeffs))
              for k in range(r))
        for l in range(r))
    if unit_action != _identity(r):
        raise UnitActionFails()
    for i in range(ring.rank):
        for j in range(ring.rank):
            left = _mat_mul(data.action[i], data.action[j], r)
            right = tuple(
                tuple(sum(ring.mult[i][j][k] * data.action[k][l][m] for k in range(ring.rank))
                      for m in range(r))
                for l in range(r))
            if left != right:
                raise ActionLawFails(i, j)
    return ValidatedModule(data)


def is_irreducible(module: ValidatedModule) -> bool:
    """No proper non-empty basis subset generates a proper submodule."""
    r = module.rank
    succ = [set() for _ in range(r)]
    for mat in module.action:
        for l in range(r):
            for k in range(r):
                if mat[l][k] > 0:
                    succ[l].add(k)
    for start in range(r):
        seen = {start}
        frontier = [start]
        while frontier:
            l = frontier.pop()
            for k in succ[l]:
                if k not in seen:
                    seen.add(k)
                    frontier.append(k)
        if len(seen) != r:
            return False
    return True


def is_indecomposable(module: ValidatedModule) -> bool:
    """The undirected positivity graph on the basis is connected."""
    r = module.rank
    if r == 0:
        return False
    adj = [set() for _ in range(r)]
    for mat in module.action:
        for l in range(r):
            for k in range(r):
                if mat[l][k] > 0:
                    adj[l].add(k)
                    adj[k].add(l)
    seen = {0}
    frontier = [0]
    while frontier:
        l = frontier.pop()
        for k in adj[l]:
            if k not in seen:
                seen.add(k)
                frontier.append(k)
    return len(seen) == r


def regular_module(ring: ValidatedRing) -> ValidatedModule:
    """The ring acting on itself: action[i][l][k] = c[l][i][k]."""
    action = [tuple(tuple(ring.mult[l][i][k] for k in range(ring.rank))
                    for l in range(ring.rank))
              for i in range(ring.rank)]
    return validate_module(ZPlusModuleData.build(ring, action))


def direct_sum(a: ValidatedModule, b: ValidatedModule) -> ValidatedModule:
    if a.ring is not b.ring and a.ring.data != b.ring.data:
        raise ValueError("modules must share the ring")
    ra, rb = a.rank, b.rank
    action = []
    for i in range(a.ring.rank):
        mat = [[0] * (ra + rb) for _ in range(ra + rb)]
        for l in range(ra):
            for k in range(ra):
                mat[l][k] = a.action[i][l][k]
        for l in range(rb):
            for k in range(rb):
                mat[ra + l][ra + k] = b.action[i][l][k]
        action.append(tuple(tuple(row) for row in mat))
    return validate_module(ZPlusModuleData.build(a.ring, action))


@dataclass(frozen=True)
class EnumerationBounds:
    """Search caps, recomputed from the ring data (never user-supplied)."""

    n_max: int                 # N = max coefficient of b^2 over the basis
    rank_bound: int            # module rank <= N
    coeff_budget_module: int   # N^2, bounds sum_{j,k} F[l0][j] F[j][k]
    coeff_bound_hom: int = 0   # |J| N, set when built for a hom search

    @classmethod
    def for_ring(cls, ring: ValidatedRing, cap_scale: int = 1) -> "EnumerationBounds":
        ones = [1] * ring.rank
        b_squared = ring.product(ones, ones)
        n = max(b_squared) * cap_scale
        return cls(n_max=n, rank_bound=n, coeff_budget_module=n * n)

    @classmethod
    def for_hom(cls, source: ValidatedRing, target: ValidatedRing,
                cap_scale: int = 1) -> "EnumerationBounds":
        """Caps for a homomorphism search; N comes from the source ring and
        the per-coordinate cap is the target rank times N."""
        bounds = cls.for_ring(source, cap_scale)
        return cls(n_max=bounds.n_max, rank_bound=bounds.rank_bound,
                   coeff_budget_module=bounds.coeff_budget_module,
                   coeff_bound_hom=target.rank * bounds.n_max)


def _as_certificate(ring) -> WeakBasedCertificate:
    if isinstance(ring, WeakBasedCertificate):
        return ring
    certs = find_weak_based_involutions(ring)
    if not certs:
        raise RingNotWeakBased()
    return certs[0]


def enumerate_irreducible_modules(ring, cap_scale: int = 1) -> list[ValidatedModule]:
    """All irreducible modules up to basis permutation, by bounded search.

    ``ring`` is a weak based certificate (or a validated ring, which is then
    certified first).  ``cap_scale`` multiplies every search cap; the result
    must be independent of it, which the tests exercise.
    """
    cert = _as_certificate(ring)
    vring = cert.ring
    if vring.rank > ENUMERATION_RANK_LIMIT:
        raise RankGuardExceeded(vring.rank)
    bounds = EnumerationBounds.for_ring(vring, cap_scale)
    found: dict[tuple, ValidatedModule] = {}
    for r in range(1, bounds.rank_bound + 1):
        for action in _search_actions(vring, r, bounds):
            module = validate_module(ZPlusModuleData.build(vring, action))
            if not is_irreducible(module):
                continue
            key = module.canonical_key()
            if key not in found:
                found[key] = module
    return [found[k] for k in sorted(found)]


def _search_actions(ring: ValidatedRing, r: int, bounds: EnumerationBounds):
    """Backtracking over the rows of all generator matrices at module rank r.

    Row 0 is normalized to carry the minimal total row sum, which the
    finiteness argument bounds by N.  Pruning, all sound because every entry
    is non-negative:

    * per-row budget equalities: the coordinate sum of m_l b b computed both
      ways gives sum_j F[l][j] f_j = sum_i n_i rowsum(A_i[l]) exactly;
    * the matrix law for b itself: F F = sum_i n_i A_i entrywise, checked on
      partial sums;
    * partial sums of the generator law equations against their exact
      targets on filled rows.
    """
    n_gen = ring.rank
    n_cap = bounds.n_max
    ones = [1] * n_gen
    b_squared = ring.product(ones, ones)  # n_i coefficients
    rows: list[list[list[int]]] = [[] for _ in range(n_gen)]  # rows[i][l] = row l of A_i
    f_mat: list[list[int]] = []     # rows of F = sum_i A_i
    f_rows: list[int] = []          # total row sums of F

    def row_candidates(l: int, cap: int):
        """All joint assignments of row l for every generator matrix.

        Cells are filled left to right; after each cell the partial sums of
        the law equations anchored at the already-filled rows are checked
        against their exact targets, which keeps the branching shallow.
        """
        current = [[0] * r for _ in range(n_gen)]
        unit_row = [1 if k == l else 0 for k in range(r)]
        # base[i][j][lp][k]: product contributions from rows strictly below l
        base = [[[[sum(rows[i][lp][s] * rows[j][s][k] for s in range(l))
                   for k in range(r)] for lp in range(l)]
                 for j in range(n_gen)] for i in range(n_gen)]
        target = [[[[sum(ring.mult[i][j][m] * rows[m][lp][k] for m in range(n_gen))
                     for k in range(r)] for lp in range(l)]
                   for j in range(n_gen)] for i in range(n_gen)]

        def cell_ok(k: int) -> bool:
            for i in range(n_gen):
                rows_i = rows[i]
                for j in range(n_gen):
                    base_ij = base[i][j]
                    target_ij = target[i][j]
                    cjk = current[j][k]
                    for lp in range(l):
                        if base_ij[lp][k] + rows_i[lp][l] * cjk > target_ij[lp][k]:
                            return False
            return True

        def fill(k: int, used: int):
            if k == r:
                yield [list(row) for row in current], used
                return
            # assign the k-th cell of row l for all generators
            def assign(i: int, cell_sum: int):
                if i == n_gen:
                    unit_val = sum(ring.unit_coeffs[t] * current[t][k] for t in range(n_gen))
                    if unit_val != unit_row[k]:
                        return
                    if cell_sum < 1:
                        return  # F must be strictly positive for irreducibility
                    if not cell_ok(k):
                        return
                    yield from fill(k + 1, used + cell_sum)
                    return
                for v in range(0, cap - used - cell_sum + 1):
                    current[i][k] = v
                    yield from assign(i + 1, cell_sum + v)
                    current[i][k] = 0

            yield from assign(0, 0)

        yield from fill(0, 0)

    def budget_prune(filled: int, f_min: int) -> bool:
        # coordinate sums of m_l b b computed both ways give, for every l,
        # sum_j F[l][j] f_j == sum_i n_i rowsum(A_i[l]) exactly; unfilled row
        # sums are at least f_min
        complete = filled == r
        for l in range(filled):
            target = sum(b_squared[m] * sum(rows[m][l]) for m in range(n_gen))
            lower = sum(f_mat[l][j] * (f_rows[j] if j < filled else f_min)
                        for j in range(r))
            if lower > target or (complete and lower != target):
                return False
        return True

    def law_prune(filled: int) -> bool:
        complete = filled == r
        # F law: F F = sum_i n_i A_i
        for lp in range(filled):
            for k in range(r):
                target = sum(b_squared[m] * rows[m][lp][k] for m in range(n_gen))
                partial = sum(f_mat[lp][s] * f_mat[s][k] for s in range(filled))
                if partial > target or (complete and partial != target):
                    return False
        # generator laws
        for i in range(n_gen):
            rows_i = rows[i]
            for j in range(n_gen):
                cij = ring.mult[i][j]
                rows_j = rows[j]
                for lp in range(filled):
                    row_ilp = rows_i[lp]
                    for k in range(r):
                        target = sum(cij[m] * rows[m][lp][k] for m in range(n_gen))
                        partial = sum(row_ilp[s] * rows_j[s][k] for s in range(filled))
                        if partial > target or (complete and partial != target):
                            return False
        return True

    def extend(l: int):
        if l == r:
            yield [tuple(tuple(row) for row in rows[i]) for i in range(n_gen)]
            return
        if l == 0:
            cap = n_cap
        else:
            # f_l enters every filled budget equality; each gives an upper
            # bound (target - other terms at their minima) / F[lp][l]
            f_min = max(f_rows[0], r)
            cap = None
            for lp in range(l):
                target = sum(b_squared[m] * sum(rows[m][lp]) for m in range(n_gen))
                others = sum(f_mat[lp][j] * (f_rows[j] if j < l else f_min)
                             for j in range(r) if j != l)
                bound = (target - others) // f_mat[lp][l]
                if cap is None or bound < cap:
                    cap = bound
            if cap is None or cap < f_min:
                return
        for assignment, row_sum in row_candidates(l, cap):
            if l > 0 and row_sum < f_rows[0]:
                continue  # row 0 is the minimal row
            for i in range(n_gen):
                rows[i].append(assignment[i])
            f_mat.append([sum(assignment[i][k] for i in range(n_gen)) for k in range(r)])
            f_rows.append(row_sum)
            f_min = max(f_rows[0], r)
            if budget_prune(l + 1, f_min) and law_prune(l + 1):
                yield from extend(l + 1)
            for i in range(n_gen):
                rows[i].pop()
            f_mat.pop()
            f_rows.pop()

    yield from extend(0)


@dataclass(frozen=True)
class RingHomCandidate:
    """A homomorphism of weak based rings in basis coordinates."""

    source: WeakBasedCertificate
    target: WeakBasedCertificate
    matrix: tuple  # matrix[i][j] = coefficient of d_j in f(b_i)


def enumerate_ring_homs(source, target, cap_scale: int = 1) -> list[RingHomCandidate]:
    """All homomorphisms of weak based rings source -> target.

    Every coordinate of f(b_i) is bounded by |J| N with N the maximal
    coefficient of b^2 in the source; the search is exhaustive under that cap
    (times ``cap_scale``) and filters by the ring, unit and involution laws.
    """
    src = _as_certificate(source)
    tgt = _as_certificate(target)
    if src.rank > ENUMERATION_RANK_LIMIT or tgt.rank > ENUMERATION_RANK_LIMIT:
        raise RankGuardExceeded(max(src.rank, tgt.rank))
    sring, tring = src.ring, tgt.ring
    n_src, n_tgt = sring.rank, tring.rank
    cap = EnumerationBounds.for_hom(sring, tring, cap_scale).coeff_bound_hom

    sigma_s, sigma_t = src.involution, tgt.involution
    assigned: list[list[int] | None] = [None] * n_src
    results: list[RingHomCandidate] = []

    def check_pair(i: int, j: int, complete: bool) -> bool:
        gi, gj = assigned[i], assigned[j]
        lhs = tring.product(gi, gj)
        for coord in range(n_tgt):
            lower = 0
            unknown = 0
            for k in range(n_src):
                c = sring.mult[i][j][k]
                if not c:
                    continue
                if assigned[k] is not None:
                    lower += c * assigned[k][coord]
                else:
                    unknown += c
            if lhs[coord] < lower or lhs[coord] > lower + unknown * cap:
                return False
            if complete and lhs[coord] != lower:
                return False
        return True

    def unit_check(complete: bool) -> bool:
        for coord in range(n_tgt):
            lower = 0
            unknown = 0
            for i, a in enumerate(sring.unit_coeffs):
                if not a:
                    continue
                if assigned[i] is not None:
                    lower += a * assigned[i][coord]
                else:
                    unknown += a
            want = tring.unit_coeffs[coord]
            if want < lower or want > lower + unknown * cap:
                return False
            if complete and want != lower:
                return False
        return True

    def prune_ok(complete: bool) -> bool:
        if not unit_check(complete):
            return False
        for i in range(n_src):
            if assigned[i] is None:
                continue
            for j in range(n_src):
                if assigned[j] is None:
                    continue
                if not check_pair(i, j, complete):
                    return False
        return True

    def starred(vec: list[int]) -> list[int]:
        out = [0] * n_tgt
        for j, v in enumerate(vec):
            out[sigma_t[j]] = v
        return out

    def extend(i: int):
        if i == n_src:
            if prune_ok(complete=True):
                results.append(RingHomCandidate(
                    source=src, target=tgt,
                    matrix=tuple(tuple(vec) for vec in assigned)))
            return
        if assigned[i] is not None:
            extend(i + 1)
            return
        for vec in itertools.product(range(cap + 1), repeat=n_tgt):
            assigned[i] = list(vec)
            partner = sigma_s[i]
            filled_partner = False
            if partner != i and assigned[partner] is None:
                assigned[partner] = starred(list(vec))
                filled_partner = True
            ok = prune_ok(complete=False)
            if ok and partner == i and assigned[i] != starred(assigned[i]):
                ok = False  # self-dual basis element needs a self-dual image
            if ok:
                extend(i + 1)
            assigned[i] = None
            if filled_partner:
                assigned[partner] = None
        return

    extend(0)
    results.sort(key=lambda h: h.matrix)
    return results
