"""Associative algebras by structure constants, and commutative splitting.

The central operation is :func:`split_commutative_algebra`: the complete list
of primitive idempotents of a commutative associative unital algebra over an
exact field, splitting exactly as far as the field allows.  The algorithm:

1. compute the nilradical (trace-form kernel in characteristic zero, iterated
   Frobenius kernel over a prime field) and pass to the semisimple quotient;
2. refine idempotent blocks by factoring minimal polynomials of multiplication
   operators: over a prime field the basis of the Frobenius-fixed subalgebra
   is added to the generator pool, which makes the refinement complete;
3. lift the primitive idempotents of the quotient back through the nilradical
   by Hensel iteration, keeping them orthogonal.

All data is immutable after construction and every output is deterministic.
"""

from __future__ import annotations

from .errors import ValidationError
from .fields import Field, PrimeField
from .linalg import Matrix, kernel_basis, rank, rref, solve
from .poly import Poly, factor_list


class NotAssociative(ValidationError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"associativity fails at basis triple ({i}, {j}, {k})")
        self.indices = (i, j, k)


class NoUnit(ValidationError):
    def __init__(self, detail: str = ""):
        super().__init__(f"unit vector is not a two-sided unit{': ' + detail if detail else ''}")


class NotCommutative(ValidationError):
    def __init__(self, i: int, j: int):
        super().__init__(f"basis elements {i} and {j} do not commute")
        self.indices = (i, j)


class StructureConstantAlgebra:
    """Finite-dimensional associative algebra e_i e_j = sum_k c[i][j][k] e_k."""

    def __init__(self, field: Field, mult, unit, labels=None, validate: bool = True):
        self.field = field
        self.dim = len(mult)
        self.mult = [[[entry for entry in cell] for cell in row] for row in mult]
        self.unit = list(unit)
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(self.dim)]
        if len(self.unit) != self.dim or len(self.labels) != self.dim:
            raise ValueError("unit/label length must equal dim")
        for row in self.mult:
            if len(row) != self.dim or any(len(cell) != self.dim for cell in row):
                raise ValueError("mult must be dim x dim x dim")
        if validate:
            self.validate()

    @classmethod
    def from_int_constants(cls, field: Field, mult, unit, labels=None,
                           validate: bool = True) -> "StructureConstantAlgebra":
        conv = field.from_int
        return cls(field,
                   [[[conv(x) for x in cell] for cell in row] for row in mult],
                   [conv(x) for x in unit], labels, validate)

    def mul_vec(self, x, y):
        zero = self.field.zero()
        out = [zero] * self.dim
        for i, xi in enumerate(x):
            if xi == zero:
                continue
            for j, yj in enumerate(y):
                if yj == zero:
                    continue
                coeff = xi * yj
                for k, c in enumerate(self.mult[i][j]):
                    if c != zero:
                        out[k] = out[k] + coeff * c
        return out

    def left_mult_matrix(self, x) -> Matrix:
        """Matrix of y -> x * y acting on coordinate columns."""
        zero = self.field.zero()
        cols = []
        for j in range(self.dim):
            col = [zero] * self.dim
            for i, xi in enumerate(x):
                if xi == zero:
                    continue
                for k, c in enumerate(self.mult[i][j]):
                    if c != zero:
                        col[k] = col[k] + xi * c
            cols.append(col)
        return Matrix(self.field, [[cols[j][k] for j in range(self.dim)]
                                   for k in range(self.dim)])

    def right_mult_matrix(self, x) -> Matrix:
        """Matrix of y -> y * x acting on coordinate columns."""
        zero = self.field.zero()
        cols = []
        for j in range(self.dim):
            col = [zero] * self.dim
            for i, xi in enumerate(x):
                if xi == zero:
                    continue
                for k, c in enumerate(self.mult[j][i]):
                    if c != zero:
                        col[k] = col[k] + xi * c
            cols.append(col)
        return Matrix(self.field, [[cols[j][k] for j in range(self.dim)]
                                   for k in range(self.dim)])

    def validate(self) -> None:
        zero = self.field.zero()
        basis = [[self.field.one() if i == j else zero for j in range(self.dim)]
                 for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.mult[i][j]
                for k in range(self.dim):
                    left = self.mul_vec(ij, basis[k])
                    right = self.mul_vec(basis[i], self.mult[j][k])
                    if left != right:
                        raise NotAssociative(i, j, k)
        for i in range(self.dim):
            if self.mul_vec(self.unit, basis[i]) != basis[i]:
                raise NoUnit(f"1 * e{i} != e{i}")
            if self.mul_vec(basis[i], self.unit) != basis[i]:
                raise NoUnit(f"e{i} * 1 != e{i}")

    def check_commutative(self) -> None:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.mult[i][j] != self.mult[j][i]:
                    raise NotCommutative(i, j)

    def is_commutative(self) -> bool:
        try:
            self.check_commutative()
        except NotCommutative:
            return False
        return True

    def center_basis(self) -> list[list]:
        """Echelonized basis of the center {x : xy = yx for all y}."""
        stacked = []
        basis = Matrix.identity(self.field, self.dim).rows
        for j in range(self.dim):
            diff = self.left_mult_matrix(basis[j]) - self.right_mult_matrix(basis[j])
            stacked.extend(diff.rows)
        if not stacked:
            return []
        return kernel_basis(Matrix(self.field, stacked))


def _coordinates(field: Field, span_vectors: list[list], target: list) -> list:
    """Coordinates of target in the given independent spanning set."""
    mat = Matrix(field, [list(col) for col in zip(*span_vectors)])
    coords = solve(mat, list(target))
    if coords is None:
        raise ValueError("target not in span")
    return coords


def min_poly_of_matrix(m: Matrix) -> Poly:
    """Minimal polynomial of a square matrix, monic."""
    field = m.field
    n = m.nrows
    power = Matrix.identity(field, n)
    seen: list[list] = []
    while True:
        flat = [a for row in power.rows for a in row]
        stack = Matrix(field, [list(col) for col in zip(*seen)]) if seen else None
        if seen:
            coords = solve(stack, flat)
            if coords is not None:
                coeffs = [field.zero() - c for c in coords] + [field.one()]
                return Poly(field, coeffs)
        seen.append(flat)
        power = power * m

    # unreachable: powers of an n x n matrix become dependent by degree n**2


def _restricted_operator(algebra: StructureConstantAlgebra, x, block_basis: list[list]) -> Matrix:
    """Matrix of multiplication by x on the subspace spanned by block_basis."""
    field = algebra.field
    k = len(block_basis)
    images = [algebra.mul_vec(x, w) for w in block_basis]
    # solve all coordinate systems at once: [basis columns | image columns]
    augmented = Matrix(field, [[block_basis[j][r] for j in range(k)] + [im[r] for im in images]
                               for r in range(algebra.dim)])
    reduced, pivots = rref(augmented)
    if len(pivots) != k or any(p >= k for p in pivots):
        raise ValueError("block basis is not independent or not invariant")
    return Matrix(field, [[reduced.rows[r][k + j] for j in range(k)] for r in range(k)])


def _nilradical(algebra: StructureConstantAlgebra) -> list[list]:
    """Echelonized basis of the nilradical of a commutative algebra."""
    field = algebra.field
    if isinstance(field, PrimeField):
        # Frobenius x -> x^p is F_p-linear on a commutative F_p-algebra;
        # the nilradical is the kernel of a high enough Frobenius power
        p = field.p
        basis = Matrix.identity(field, algebra.dim).rows
        frob_cols = []
        for e in basis:
            power = e
            for _ in range(p - 1):
                power = algebra.mul_vec(power, e)
            frob_cols.append(power)
        frob = Matrix(field, [[frob_cols[j][k] for j in range(algebra.dim)]
                              for k in range(algebra.dim)])
        iterated = frob
        size = p
        while size < algebra.dim:
            iterated = frob * iterated
            size *= p
        return kernel_basis(iterated)
    # characteristic zero: the radical is the kernel of the trace form
    basis = Matrix.identity(field, algebra.dim).rows
    gram = []
    for i in range(algebra.dim):
        row = []
        for j in range(algebra.dim):
            product = algebra.mul_vec(basis[i], basis[j])
            lm = algebra.left_mult_matrix(product)
            tr = field.zero()
            for k in range(algebra.dim):
                tr = tr + lm.rows[k][k]
            row.append(tr)
        gram.append(row)
    return kernel_basis(Matrix(field, gram))


def _quotient_algebra(algebra: StructureConstantAlgebra, radical: list[list]):
    """Quotient by the span of radical; returns (quotient, project, lift)."""
    field = algebra.field
    zero = field.zero()
    if radical:
        reduced, pivots = rref(Matrix(field, radical))
        pivot_rows = reduced.rows[:len(pivots)]
    else:
        pivots, pivot_rows = [], []
    pivot_set = set(pivots)
    kept = [j for j in range(algebra.dim) if j not in pivot_set]

    def project(v: list) -> list:
        w = list(v)
        for r, pc in enumerate(pivots):
            factor = w[pc]
            if factor != zero:
                w = [a - factor * b for a, b in zip(w, pivot_rows[r])]
        return [w[j] for j in kept]

    def lift(v: list) -> list:
        out = [zero] * algebra.dim
        for coeff, j in zip(v, kept):
            out[j] = coeff
        return out

    basis = Matrix.identity(field, algebra.dim).rows
    mult = [[project(algebra.mul_vec(basis[i], basis[j])) for j in kept] for i in kept]
    quotient = StructureConstantAlgebra(field, mult, project(algebra.unit),
                                        labels=[algebra.labels[j] for j in kept],
                                        validate=False)
    return quotient, project, lift


def _split_with_generator(algebra: StructureConstantAlgebra, blocks: list[dict], x) -> bool:
    """Try to split some block using multiplication by x; returns True on a split."""
    field = algebra.field
    zero = field.zero()
    for idx, block in enumerate(blocks):
        e = block["idempotent"]
        basis = block["basis"]
        xe = algebra.mul_vec(x, e)
        op = _restricted_operator(algebra, xe, basis)
        mp = min_poly_of_matrix(op)
        factors = factor_list(mp)
        if len(factors) < 2:
            continue
        new_blocks = []
        for f, mult in factors:
            fpow = f
            for _ in range(mult - 1):
                fpow = fpow * f
            cofactor, _ = divmod(mp, fpow)
            # t * cofactor == 1 mod fpow gives the idempotent of this factor
            g, s, t = _xgcd_pair(fpow, cofactor)
            if g.degree != 0:
                raise AssertionError("minimal polynomial factors must be coprime")
            h = t * cofactor
            # evaluate h at xe inside the block: e plays the role of the unit
            e_i = _eval_poly_at(algebra, h, xe, e)
            new_basis = _image_basis(algebra, e_i)
            new_blocks.append({"idempotent": e_i, "basis": new_basis})
        blocks[idx:idx + 1] = new_blocks
        return True
    return False


def _xgcd_pair(a: Poly, b: Poly):
    from .poly import xgcd
    return xgcd(a, b)


def _eval_poly_at(algebra: StructureConstantAlgebra, p: Poly, x, unit_element):
    """Evaluate p at x by Horner, with unit_element as the local unit."""
    field = algebra.field
    zero = field.zero()
    acc = None
    for c in reversed(p.coeffs):
        if acc is None:
            acc = [c * u for u in unit_element]
        else:
            acc = algebra.mul_vec(acc, x)
            acc = [a + c * u for a, u in zip(acc, unit_element)]
    if acc is None:
        return [zero] * algebra.dim
    return acc


def _image_basis(algebra: StructureConstantAlgebra, e) -> list[list]:
    """Echelonized basis of e * A."""
    lm = algebra.left_mult_matrix(e)
    reduced, pivots = rref(lm.transpose())
    return [reduced.rows[r] for r in range(len(pivots))]


def split_commutative_algebra(algebra: StructureConstantAlgebra):
    """Complete list of primitive idempotents of a commutative algebra.

    Returns a list of ``(block_dim, idempotent_vector)`` pairs: pairwise
    orthogonal idempotents summing to the unit, one per block, splitting as
    far as the coefficient field allows.  Output is sorted lexicographically
    on the idempotent coordinate vectors.

    Raises NotCommutative / NotAssociative / NoUnit when the input is not a
    commutative associative unital algebra.
    """
    algebra.validate()
    algebra.check_commutative()
    field = algebra.field

    radical = _nilradical(algebra)
    quotient, project, lift = _quotient_algebra(algebra, radical)

    # refine idempotent blocks in the semisimple quotient
    blocks = [{"idempotent": quotient.unit,
               "basis": _image_basis(quotient, quotient.unit)}]
    generators = Matrix.identity(field, quotient.dim).rows
    if isinstance(field, PrimeField):
        # basis of the Frobenius-fixed subalgebra; eigen-splitting along these
        # generators separates every pair of blocks
        p = field.p
        frob_cols = []
        for e in generators:
            power = e
            for _ in range(p - 1):
                power = quotient.mul_vec(power, e)
            frob_cols.append(power)
        frob = Matrix(field, [[frob_cols[j][k] for j in range(quotient.dim)]
                              for k in range(quotient.dim)])
        fixed = kernel_basis(frob - Matrix.identity(field, quotient.dim))
        generators = generators + fixed
    changed = True
    while changed:
        changed = False
        for x in generators:
            if _split_with_generator(quotient, blocks, x):
                changed = True
                break

    # lift idempotents through the nilradical, sequentially to keep them
    # orthogonal; the last one is forced as the remaining unit
    ordered = sorted(blocks, key=lambda b: tuple(field.sort_key(c) for c in b["idempotent"]))
    lifted = []
    remaining_unit = list(algebra.unit)
    for block in ordered[:-1]:
        candidate = algebra.mul_vec(remaining_unit, lift(block["idempotent"]))
        candidate = algebra.mul_vec(candidate, remaining_unit)
        for _ in range(algebra.dim + 2):
            square = algebra.mul_vec(candidate, candidate)
            if square == candidate:
                break
            # Hensel step e <- 3e^2 - 2e^3
            cube = algebra.mul_vec(square, candidate)
            three = field.from_int(3)
            two = field.from_int(2)
            candidate = [three * s - two * c for s, c in zip(square, cube)]
        else:
            raise AssertionError("idempotent lifting did not converge")
        lifted.append(candidate)
        remaining_unit = [u - c for u, c in zip(remaining_unit, candidate)]
    lifted.append(remaining_unit)

    result = []
    for e in lifted:
        dim = rank(algebra.left_mult_matrix(e))
        result.append((dim, e))
    result.sort(key=lambda de: tuple(field.sort_key(c) for c in de[1]))
    return result
