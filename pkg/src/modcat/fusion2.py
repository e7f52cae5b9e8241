"""Product tables of simple module categories, in three worked families.

Each product is computed honestly from algebra objects:

* braided pointed family: module classes over Z/p-graded vector spaces with
  a braiding given by a p-th root of unity.  A class is realized by its
  algebra object (unit algebra or graded group algebra), the relative product
  is the braided tensor algebra, and the summands are read off the primitive
  degree-zero central idempotents.  Each block is identified by the support
  subgroup of its grading together with the number of simple summands of its
  degree-zero part.
* real closed family: the three division-algebra classes, tensored as
  rational structure-constant algebras; the center splits over Q and each
  central block maps to a class through Brauer arithmetic (real-central
  blocks) or to the complexified class (imaginary-quadratic centers).
* prime field family: extensions F_{p^q} (x) F_{p^r}, computed by counting
  the irreducible factors of a degree-r irreducible polynomial over the
  degree-q extension tower, by distinct-degree gcds.

The coefficient field for the braided family is the smallest cyclotomic
field that both contains the braiding root of unity and splits the twisted
degree-zero algebras: Q(zeta_p) for odd p, and Q(zeta_4) for p = 2, where a
square root of -1 is needed to split the sign-twisted part.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .algebras import StructureConstantAlgebra, split_commutative_algebra
from .errors import ModcatError, SizeGuardExceeded, ValidationError
from .fields import CyclotomicField, Field, PrimeField, QQ
from .fieldprofile import (COMPLEXIFICATION, DivisionAlgebraClass, DivisionLabel,
                           brauer_add, finite_ext, real_closed)
from .linalg import Matrix, kernel_basis, rref
from .pointed import BraidingParam, FiniteAbelianGroup, ModuleClass
from .poly import Poly

FFIELD_DEGREE_GUARD = 64


class GradingMismatch(ValidationError):
    pass


class ValidationFailed(ValidationError):
    pass


class UnsupportedPrime(ModcatError):
    pass


class IdentificationAmbiguous(ModcatError):
    """A computed block matches no known module class; a defect for inputs in scope."""


@dataclass(frozen=True)
class GradedAlgebraObject:
    """A group-graded algebra: structure constants plus a degree per basis index."""

    group: FiniteAbelianGroup
    degrees: tuple[tuple[int, ...], ...]
    algebra: StructureConstantAlgebra

    def __post_init__(self):
        if len(self.degrees) != self.algebra.dim:
            raise ValidationFailed("need one degree per basis element")
        zero = self.algebra.field.zero()
        for i in range(self.algebra.dim):
            for j in range(self.algebra.dim):
                expected = self.group.add(self.degrees[i], self.degrees[j])
                for k in range(self.algebra.dim):
                    if self.algebra.mult[i][j][k] != zero and self.degrees[k] != expected:
                        raise GradingMismatch(
                            f"product of degrees {self.degrees[i]} and {self.degrees[j]} "
                            f"hits degree {self.degrees[k]}")
        for k in range(self.algebra.dim):
            if self.algebra.unit[k] != zero and self.degrees[k] != self.group.zero():
                raise GradingMismatch("unit must be concentrated in degree zero")

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def components(self) -> dict[tuple[int, ...], int]:
        out: dict[tuple[int, ...], int] = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return out


def coefficient_field(p: int) -> CyclotomicField:
    """Q(zeta_p) for odd p; Q(zeta_4) for p = 2 (a square root of -1 is
    needed to split the sign-twisted degree-zero algebras)."""
    return CyclotomicField(4 if p == 2 else p)


def unit_algebra_object(p: int, field: Field) -> GradedAlgebraObject:
    group = FiniteAbelianGroup((p,))
    algebra = StructureConstantAlgebra.from_int_constants(field, [[[1]]], [1], labels=["1"])
    return GradedAlgebraObject(group=group, degrees=((0,),), algebra=algebra)


def graded_group_algebra(p: int, field: Field) -> GradedAlgebraObject:
    group = FiniteAbelianGroup((p,))
    mult = [[[1 if k == (i + j) % p else 0 for k in range(p)] for j in range(p)]
            for i in range(p)]
    unit = [1] + [0] * (p - 1)
    algebra = StructureConstantAlgebra.from_int_constants(
        field, mult, unit, labels=[f"u^{a}" if a else "1" for a in range(p)])
    return GradedAlgebraObject(group=group, degrees=tuple((a,) for a in range(p)),
                               algebra=algebra)


def braided_tensor_algebra(p: int, zeta: BraidingParam, a: GradedAlgebraObject,
                           b: GradedAlgebraObject) -> GradedAlgebraObject:
    """Tensor product twisted by the braiding: (x1 (x) y1)(x2 (x) y2) =
    zeta^(deg y1 * deg x2) (x1 x2 (x) y1 y2)."""
    if a.group.cyclic_orders != (p,) or b.group.cyclic_orders != (p,):
        raise GradingMismatch(f"both factors must be graded by Z/{p}")
    if a.field != b.field:
        raise GradingMismatch("factors must share their coefficient field")
    field = a.field
    if not isinstance(field, CyclotomicField) or field.n % p != 0:
        raise GradingMismatch(
            f"coefficient field must be cyclotomic containing a primitive {p}-th root")
    if zeta.p != p:
        raise GradingMismatch("braiding parameter is for a different prime")
    root_step = field.n // p  # zeta_p = zeta_n^(n/p)
    group = a.group

    da, db = a.dim, b.dim
    dim = da * db
    zero = field.zero()
    mult = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i1 in range(da):
        for j1 in range(db):
            row = i1 * db + j1
            twist_base = b.degrees[j1][0] * zeta.zeta_exponent
            for i2 in range(da):
                twist = field.zeta(root_step * twist_base * a.degrees[i2][0])
                for j2 in range(db):
                    col = i2 * db + j2
                    ca = a.algebra.mult[i1][i2]
                    cb = b.algebra.mult[j1][j2]
                    cell = mult[row][col]
                    for k1 in range(da):
                        if ca[k1] == zero:
                            continue
                        for k2 in range(db):
                            if cb[k2] == zero:
                                continue
                            cell[k1 * db + k2] = cell[k1 * db + k2] + twist * ca[k1] * cb[k2]
    unit = [zero] * dim
    for k1 in range(da):
        for k2 in range(db):
            unit[k1 * db + k2] = a.algebra.unit[k1] * b.algebra.unit[k2]
    labels = [f"{la}(x){lb}" for la in a.algebra.labels for lb in b.algebra.labels]
    degrees = tuple(group.add(a.degrees[i], b.degrees[j])
                    for i in range(da) for j in range(db))
    try:
        algebra = StructureConstantAlgebra(field, mult, unit, labels=labels)
    except ValidationError as exc:
        raise ValidationFailed(f"braided tensor is not a valid algebra: {exc}") from exc
    return GradedAlgebraObject(group=group, degrees=degrees, algebra=algebra)


@dataclass(frozen=True)
class Fusion2Product:
    """A multiset of simple summands, as canonically sorted labels."""

    summands: tuple[str, ...]
    block_dims: tuple[int, ...] = ()
    r_copies_rule_holds: bool | None = None

    def __post_init__(self):
        if not self.summands:
            raise ValidationFailed("a product of nonzero simples has at least one summand")


def _subalgebra_on(algebra: StructureConstantAlgebra, basis: list[list], unit: list):
    """Structure constants of the subalgebra spanned by the given basis."""
    field = algebra.field
    k = len(basis)
    columns = Matrix(field, [[basis[j][r] for j in range(k)] for r in range(algebra.dim)])
    reduced, pivots = rref(columns)
    if len(pivots) != k:
        raise ValueError("subalgebra basis is not independent")

    def coords(v):
        augmented = Matrix(field, [[basis[j][r] for j in range(k)] + [v[r]]
                                   for r in range(algebra.dim)])
        red, piv = rref(augmented)
        if k in piv:
            raise ValueError("vector not in subalgebra span")
        return [red.rows[r][k] for r in range(k)]

    mult = [[coords(algebra.mul_vec(basis[i], basis[j])) for j in range(k)]
            for i in range(k)]
    return StructureConstantAlgebra(field, mult, coords(unit), validate=False)


def _degree_zero_center_basis(obj: GradedAlgebraObject) -> list[list]:
    algebra = obj.algebra
    field = algebra.field
    zero_deg = obj.group.zero()
    stacked = []
    basis = Matrix.identity(field, algebra.dim).rows
    for j in range(algebra.dim):
        diff = algebra.left_mult_matrix(basis[j]) - algebra.right_mult_matrix(basis[j])
        stacked.extend(diff.rows)
    # kill every coordinate of nonzero degree
    zero = field.zero()
    one = field.one()
    for k in range(algebra.dim):
        if obj.degrees[k] != zero_deg:
            row = [zero] * algebra.dim
            row[k] = one
            stacked.append(row)
    return kernel_basis(Matrix(field, stacked))


def _block_support(obj: GradedAlgebraObject, block_basis: list[list]) -> frozenset:
    zero = obj.field.zero()
    support = set()
    for vec in block_basis:
        for k, c in enumerate(vec):
            if c != zero:
                support.add(obj.degrees[k])
    return frozenset(support)


def _block_degree_zero_simple_count(obj: GradedAlgebraObject, idempotent: list) -> int:
    algebra = obj.algebra
    field = algebra.field
    zero_deg = obj.group.zero()
    zero = field.zero()
    # basis of e * A_0
    images = []
    for k in range(algebra.dim):
        if obj.degrees[k] != zero_deg:
            continue
        basis_vec = [field.one() if t == k else zero for t in range(algebra.dim)]
        images.append(algebra.mul_vec(idempotent, basis_vec))
    reduced, pivots = rref(Matrix(field, images))
    deg0_basis = [reduced.rows[r] for r in range(len(pivots))]
    deg0 = _subalgebra_on(algebra, deg0_basis, idempotent)
    center = deg0.center_basis()
    center_sub = _subalgebra_on(deg0, center, deg0.unit)
    return len(split_commutative_algebra(center_sub))


def realize_module_class(cls: ModuleClass, field: Field) -> GradedAlgebraObject:
    """Algebra object of a module class over Z/p-graded vector spaces.

    The trivial subgroup carries the regular class (unit algebra); the full
    subgroup carries the class of the plain group algebra.  No intermediate
    subgroups exist for prime p, and H^2 of a cyclic group is trivial, so the
    cocycle index is always zero here.
    """
    ambient = cls.subgroup.ambient
    p = ambient.cyclic_orders[0]
    if len(ambient.cyclic_orders) != 1:
        raise UnsupportedPrime("braided products are implemented for cyclic Z/p only")
    if cls.cocycle_class_index != 0:
        raise IdentificationAmbiguous("no nontrivial cocycle classes exist over Z/p")
    if cls.subgroup.order == 1:
        return unit_algebra_object(p, field)
    if cls.subgroup.order == p:
        return graded_group_algebra(p, field)
    raise IdentificationAmbiguous("unexpected subgroup for prime p")


def pointed_braided_product(p: int, zeta: BraidingParam, class_a: ModuleClass,
                            class_b: ModuleClass) -> Fusion2Product:
    """Product of two simple module classes over braided Z/p-graded spaces.

    Realizes both classes by algebra objects, forms the braided tensor
    algebra, and splits it along its primitive degree-zero central
    idempotents; each block is identified by (grading support subgroup,
    simple count of the degree-zero part).
    """
    if p not in (2, 3, 5):
        raise UnsupportedPrime(f"supported primes are 2, 3, 5 (got {p})")
    field = coefficient_field(p)
    a = realize_module_class(class_a, field)
    b = realize_module_class(class_b, field)
    product = braided_tensor_algebra(p, zeta, a, b)

    z0 = _degree_zero_center_basis(product)
    z0_sub = _subalgebra_on(product.algebra, z0, product.algebra.unit)
    blocks = split_commutative_algebra(z0_sub)

    unit_label = f"Vect(Z/{p})"
    regular_label = "Vect"
    summands = []
    dims = []
    for _, idem_coords in blocks:
        zero = field.zero()
        idem = [zero] * product.dim
        for coeff, vec in zip(idem_coords, z0):
            for r in range(product.dim):
                idem[r] = idem[r] + coeff * vec[r]
        lm = product.algebra.left_mult_matrix(idem)
        reduced, pivots = rref(lm.transpose())
        block_basis = [reduced.rows[r] for r in range(len(pivots))]
        support = _block_support(product, block_basis)
        count = _block_degree_zero_simple_count(product, idem)
        full = len(support) == p
        if support == frozenset({product.group.zero()}) and count == 1:
            summands.append(unit_label)
        elif full and count == 1:
            summands.append(regular_label)
        elif full and count == p:
            summands.append(unit_label)
        else:
            raise IdentificationAmbiguous(
                f"block with support of size {len(support)} and simple count {count}")
        dims.append(len(block_basis))
    order = sorted(range(len(summands)), key=lambda t: (summands[t], dims[t]))
    return Fusion2Product(summands=tuple(summands[t] for t in order),
                          block_dims=tuple(dims[t] for t in order))


# -- real closed family ------------------------------------------------------

def _division_algebra_constants(label: DivisionLabel):
    if label == DivisionLabel.BASE:
        return [[[1]]], [1], ["1"]
    if label == DivisionLabel.COMPLEXIFICATION:
        # basis 1, i with i^2 = -1
        mult = [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]]
        return mult, [1, 0], ["1", "i"]
    if label == DivisionLabel.QUATERNION:
        # basis 1, i, j, k
        table = {
            (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
            (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
            (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
            (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
        }
        mult = [[[0] * 4 for _ in range(4)] for _ in range(4)]
        for (i, j), (k, sign) in table.items():
            mult[i][j][k] = sign
        return mult, [1, 0, 0, 0], ["1", "i", "j", "k"]
    raise ValueError(f"no rational model for {label}")


def rational_division_algebra(cls: DivisionAlgebraClass) -> StructureConstantAlgebra:
    """Rational structure-constant model of a real division algebra class."""
    mult, unit, labels = _division_algebra_constants(cls.label)
    return StructureConstantAlgebra.from_int_constants(QQ, mult, unit, labels=labels)


def _tensor_algebras(a: StructureConstantAlgebra,
                     b: StructureConstantAlgebra) -> StructureConstantAlgebra:
    field = a.field
    da, db = a.dim, b.dim
    dim = da * db
    zero = field.zero()
    mult = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i1 in range(da):
        for j1 in range(db):
            row = i1 * db + j1
            for i2 in range(da):
                for j2 in range(db):
                    col = i2 * db + j2
                    ca = a.mult[i1][i2]
                    cb = b.mult[j1][j2]
                    cell = mult[row][col]
                    for k1 in range(da):
                        if ca[k1] == zero:
                            continue
                        for k2 in range(db):
                            if cb[k2] == zero:
                                continue
                            cell[k1 * db + k2] = cell[k1 * db + k2] + ca[k1] * cb[k2]
    unit = [zero] * dim
    for k1 in range(da):
        for k2 in range(db):
            unit[k1 * db + k2] = a.unit[k1] * b.unit[k2]
    labels = [f"{la}(x){lb}" for la in a.labels for lb in b.labels]
    return StructureConstantAlgebra(field, mult, unit, labels=labels)


def real_division_tensor(d: DivisionAlgebraClass,
                         e: DivisionAlgebraClass) -> Fusion2Product:
    """Relative product of two real division classes, from rational models.

    The center of the tensor algebra splits over Q; a one-dimensional center
    block is real-central and its class is the Brauer sum of the inputs,
    while a two-dimensional center block has an imaginary-quadratic residue
    field and maps to the complexified class.
    """
    for x in (d, e):
        if x.label not in (DivisionLabel.BASE, DivisionLabel.COMPLEXIFICATION,
                           DivisionLabel.QUATERNION):
            raise ValueError("inputs must be real division classes")
    tensor = _tensor_algebras(rational_division_algebra(d), rational_division_algebra(e))
    center = tensor.center_basis()
    center_sub = _subalgebra_on(tensor, center, tensor.unit)
    blocks = split_commutative_algebra(center_sub)

    profile = real_closed()
    summands = []
    dims = []
    from .linalg import rank as _rank
    for center_dim, idem_coords in blocks:
        zero = QQ.zero()
        idem = [zero] * tensor.dim
        for coeff, vec in zip(idem_coords, center):
            for r in range(tensor.dim):
                idem[r] = idem[r] + coeff * vec[r]
        block_dim = _rank(tensor.left_mult_matrix(idem))
        if center_dim == 1:
            for x in (d, e):
                if x.label == DivisionLabel.COMPLEXIFICATION:
                    raise IdentificationAmbiguous(
                        "complexified input should never give a real-central block")
            cls = brauer_add(profile, d, e)
        elif center_dim == 2:
            if not _center_block_is_imaginary(tensor, center, idem_coords):
                raise IdentificationAmbiguous("real quadratic center is out of scope")
            cls = COMPLEXIFICATION
        else:
            raise IdentificationAmbiguous(f"center block of dimension {center_dim}")
        m2 = block_dim // cls.dim_over_base
        m = isqrt(m2)
        if m * m != m2 or m * m * cls.dim_over_base != block_dim:
            raise IdentificationAmbiguous("block dimension is not m^2 times a class dimension")
        summands.append(cls.name)
        dims.append(block_dim)
    order = sorted(range(len(summands)), key=lambda t: (summands[t], dims[t]))
    return Fusion2Product(summands=tuple(summands[t] for t in order),
                          block_dims=tuple(dims[t] for t in order))


def _center_block_is_imaginary(tensor: StructureConstantAlgebra, center: list[list],
                               idem_coords: list) -> bool:
    """True if the 2-dimensional center block is an imaginary quadratic field."""
    zero = QQ.zero()
    idem = [zero] * tensor.dim
    for coeff, vec in zip(idem_coords, center):
        for r in range(tensor.dim):
            idem[r] = idem[r] + coeff * vec[r]
    # basis of e * Z
    images = [tensor.mul_vec(idem, vec) for vec in center]
    reduced, pivots = rref(Matrix(QQ, images))
    block = [reduced.rows[r] for r in range(len(pivots))]
    sub = _subalgebra_on(tensor, block, idem)
    # find w independent of the unit; its minimal quadratic has negative
    # discriminant exactly in the imaginary case
    from .linalg import rank as _rank
    unit = sub.unit
    for t in range(sub.dim):
        w = [QQ.one() if s == t else zero for s in range(sub.dim)]
        mat = Matrix(QQ, [[unit[s], w[s]] for s in range(sub.dim)])
        if _rank(mat) == 2:
            w2 = sub.mul_vec(w, w)
            # w^2 = alpha * 1 + beta * w
            aug = Matrix(QQ, [[unit[s], w[s], w2[s]] for s in range(sub.dim)])
            red, piv = rref(aug)
            alpha, beta = red.rows[0][2], red.rows[1][2]
            disc = beta * beta + 4 * alpha
            return disc < 0
    raise IdentificationAmbiguous("could not find a quadratic generator")


# -- prime field family ------------------------------------------------------

class _ExtField:
    """F_p[y]/(g): arithmetic for polynomials over an inner prime field."""

    def __init__(self, base: PrimeField, modulus: Poly):
        self.base = base
        self.modulus = modulus
        self.degree = modulus.degree
        self.tag = f"fp{base.p}^{self.degree}"

    def zero(self) -> "_ExtElem":
        return _ExtElem(self, Poly(self.base, []))

    def one(self) -> "_ExtElem":
        return _ExtElem(self, Poly(self.base, [self.base.one()]))

    def from_int(self, k: int) -> "_ExtElem":
        return _ExtElem(self, Poly(self.base, [self.base.from_int(k)]))

    def gen(self) -> "_ExtElem":
        return _ExtElem(self, Poly(self.base, [self.base.zero(), self.base.one()]))

    def sort_key(self, x: "_ExtElem"):
        return tuple(c.v for c in x.rep.coeffs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, _ExtField) and other.base == self.base
                and other.modulus == self.modulus)

    def __hash__(self) -> int:
        return hash((self.base, tuple(c.v for c in self.modulus.coeffs)))


class _ExtElem:
    __slots__ = ("field", "rep")

    def __init__(self, field: _ExtField, rep: Poly):
        self.field = field
        self.rep = rep % field.modulus if rep.degree >= field.degree else rep

    def _lift(self, other):
        if isinstance(other, _ExtElem):
            return other
        raise TypeError("mixed arithmetic")

    def __add__(self, other):
        return _ExtElem(self.field, self.rep + self._lift(other).rep)

    def __sub__(self, other):
        return _ExtElem(self.field, self.rep - self._lift(other).rep)

    def __neg__(self):
        return _ExtElem(self.field, Poly(self.rep.field, [-c for c in self.rep.coeffs]))

    def __mul__(self, other):
        return _ExtElem(self.field, (self.rep * self._lift(other).rep) % self.field.modulus)

    def __truediv__(self, other):
        other = self._lift(other)
        if other.rep.is_zero():
            raise ZeroDivisionError("division by zero in extension field")
        from .poly import xgcd
        g, s, _ = xgcd(other.rep, self.field.modulus)
        if g.degree != 0:
            raise ZeroDivisionError("non-invertible element")
        inv = _ExtElem(self.field, s % self.field.modulus)
        return self * inv

    def __eq__(self, other) -> bool:
        return (isinstance(other, _ExtElem) and other.field == self.field
                and other.rep == self.rep)

    def __hash__(self) -> int:
        return hash((self.field.tag, tuple(c.v for c in self.rep.coeffs)))

    def __repr__(self) -> str:
        return f"ExtElem({self.rep.coeffs})"


def irreducible_polynomial(p: int, degree: int) -> Poly:
    """First monic irreducible of the given degree over F_p, in lex order."""
    base = PrimeField(p)
    if degree == 1:
        return Poly.from_ints(base, [0, 1])  # x itself

    def is_irreducible(f: Poly) -> bool:
        x = Poly.from_ints(base, [0, 1])
        # x^(p^degree) == x mod f, and no proper-subfield coincidences
        power = _pow_mod(x, p ** degree, f)
        if power != x % f:
            return False
        n = degree
        d = 2
        prime_divs = []
        while d * d <= n:
            if n % d == 0:
                prime_divs.append(d)
                while n % d == 0:
                    n //= d
            d += 1
        if n > 1:
            prime_divs.append(n)
        for ell in prime_divs:
            power = _pow_mod(x, p ** (degree // ell), f)
            diff = power - (x % f)
            if not diff.is_zero() and f.gcd(diff).degree > 0:
                return False
            if diff.is_zero():
                return False
        return True

    import itertools as _it
    for tail in _it.product(range(p), repeat=degree):
        coeffs = list(tail) + [1]
        f = Poly.from_ints(base, coeffs)
        if is_irreducible(f):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {degree} over F_{p}")


def _pow_mod(base_poly: Poly, exponent: int, modulus: Poly) -> Poly:
    field = base_poly.field
    result = Poly(field, [field.one()])
    acc = base_poly % modulus
    e = exponent
    while e:
        if e & 1:
            result = (result * acc) % modulus
        acc = (acc * acc) % modulus
        e >>= 1
    return result


def finite_field_tensor(p: int, q: int, r: int) -> Fusion2Product:
    """Summands of F_{p^q} (x)_{F_p} F_{p^r}: one per irreducible factor of a
    degree-r irreducible polynomial over the degree-q extension.

    The computed answer is gcd(q, r) copies of the lcm(q, r) extension.  The
    widely quoted shortcut "min(q, r) copies of the larger field" agrees with
    the computation only when one degree divides the other; the result flags
    whether it holds for these inputs.
    """
    if q < 1 or r < 1:
        raise ValueError("extension degrees must be positive")
    if p * q > FFIELD_DEGREE_GUARD or p * r > FFIELD_DEGREE_GUARD:
        raise SizeGuardExceeded(p * max(q, r), FFIELD_DEGREE_GUARD)
    base = PrimeField(p)
    g = irreducible_polynomial(p, q)
    ext = _ExtField(base, g)
    f_base = irreducible_polynomial(p, r)
    # lift f to the extension
    f = Poly(ext, [ _ExtElem(ext, Poly(base, [c])) for c in f_base.coeffs ])

    # distinct-degree factor counting over the extension
    Q = p ** q
    x = Poly(ext, [ext.zero(), ext.one()])
    remaining = f
    w = x % f
    counts: list[tuple[int, int]] = []  # (factor degree, how many)
    d = 0
    while remaining.degree > 0:
        d += 1
        w = _pow_mod(w, Q, f)
        if remaining.degree < 2 * d:
            counts.append((remaining.degree, 1))
            break
        h = remaining.gcd(w - x % f)
        if h.degree > 0:
            counts.append((d, h.degree // d))
            remaining, rem = divmod(remaining, h)
            assert rem.is_zero()
    summands = []
    for degree, how_many in counts:
        for _ in range(how_many):
            summands.append(finite_ext(q * degree).name)
    summands.sort()
    expected_rule = sorted([finite_ext(max(q, r)).name] * min(q, r))
    computed_total = gcd(q, r)
    assert len(summands) == computed_total, "factor count must equal gcd(q, r)"
    return Fusion2Product(summands=tuple(summands),
                          block_dims=tuple([p ** (q * deg) for deg, n in counts for _ in range(n)]),
                          r_copies_rule_holds=(summands == expected_rule))
