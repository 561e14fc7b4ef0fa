"""Finite-dimensional Hopf algebras as exact structure constants.

An algebra is a frozen bundle of tables over Q(i): the multiplication
tensor, unit and counit vectors, a sparse comultiplication (triples per
basis element) and the antipode matrix.  Axioms are never assumed: the
full battery (associativity, unit, coassociativity, counit, the bialgebra
compatibilities and both antipode convolution identities) is checked
exactly on every basis tuple, and failures are reported with witnesses so
mutated or hand-entered tables can be debugged.

Group-likes are enumerated by compiling delta(x) = x (x) x, eps(x) = 1
into a polynomial system for the solver; skew-primitive spaces are kernels
of an exact linear map.  Both only depend on the coalgebra and are
memoized on its canonical key.
"""

from functools import cached_property

from hopffactor.linalg import Mat
from hopffactor.poly import Poly
from hopffactor.scalar import ONE, ZERO, Scalar
from hopffactor.solver import solve

_DEFAULT_BUDGET = 100_000


class HopfAlgebraData:
    """Structure constants of a finite-dimensional Hopf algebra.

    Conventions: mul[i][j] is the coordinate vector of e_i * e_j; comul[i]
    lists (c, j, k) with delta(e_i) = sum c * e_j (x) e_k; antipode[i] is
    the coordinate vector of S(e_i).
    """

    def __init__(self, name, basis, mul, unit, comul, counit, antipode):
        self.name = name
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        if len(set(self.basis)) != self.dim:
            raise ValueError("basis labels must be unique")
        self.mul = tuple(tuple(tuple(row) for row in block) for block in mul)
        self.unit = tuple(unit)
        self.comul = tuple(
            tuple(sorted(((c, j, k) for (c, j, k) in triples), key=lambda t: (t[1], t[2])))
            for triples in comul
        )
        self.counit = tuple(counit)
        self.antipode = tuple(tuple(row) for row in antipode)
        d = self.dim
        if (
            len(self.mul) != d
            or any(len(b) != d for b in self.mul)
            or any(len(r) != d for b in self.mul for r in b)
            or len(self.unit) != d
            or len(self.comul) != d
            or len(self.counit) != d
            or len(self.antipode) != d
            or any(len(r) != d for r in self.antipode)
        ):
            raise ValueError("structure constant tables have inconsistent dimensions")

    # -- cached views --------------------------------------------------------

    @cached_property
    def index(self):
        return {label: i for i, label in enumerate(self.basis)}

    @cached_property
    def mul_sparse(self):
        return tuple(
            tuple(
                tuple((k, c) for k, c in enumerate(row) if not c.is_zero())
                for row in block
            )
            for block in self.mul
        )

    @cached_property
    def unit_sparse(self):
        return tuple((i, c) for i, c in enumerate(self.unit) if not c.is_zero())

    @cached_property
    def antipode_sparse(self):
        return tuple(
            tuple((j, c) for j, c in enumerate(row) if not c.is_zero())
            for row in self.antipode
        )

    def structure_key(self):
        """Canonical tuple of every structure constant (name excluded)."""
        return (
            self.basis,
            tuple(c.sort_key() for c in self.unit),
            tuple(c.sort_key() for c in self.counit),
            tuple(
                tuple(tuple(c.sort_key() for c in row) for row in block)
                for block in self.mul
            ),
            tuple(
                tuple((j, k, c.sort_key()) for (c, j, k) in triples)
                for triples in self.comul
            ),
            tuple(tuple(c.sort_key() for c in row) for row in self.antipode),
        )

    def coalgebra_key(self):
        return (
            self.dim,
            tuple(
                tuple((j, k, c.sort_key()) for (c, j, k) in triples)
                for triples in self.comul
            ),
            tuple(c.sort_key() for c in self.counit),
        )

    # -- elements ------------------------------------------------------------

    def element(self, coords):
        coords = tuple(c if isinstance(c, Scalar) else Scalar(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError("coordinate vector has the wrong length")
        return Element(self, coords)

    def basis_element(self, which):
        i = self.index[which] if isinstance(which, str) else which
        return Element(self, tuple(ONE if j == i else ZERO for j in range(self.dim)))

    def el(self, which):
        return self.basis_element(which)

    def one(self):
        return Element(self, self.unit)

    def zero(self):
        return Element(self, (ZERO,) * self.dim)

    # -- operations ----------------------------------------------------------

    def multiply(self, x, y):
        if x.algebra is not self or y.algebra is not self:
            raise ValueError("elements belong to a different algebra")
        acc = {}
        sparse = self.mul_sparse
        for i, ci in enumerate(x.coords):
            if ci.is_zero():
                continue
            for j, cj in enumerate(y.coords):
                if cj.is_zero():
                    continue
                f = ci * cj
                for k, c in sparse[i][j]:
                    _acc(acc, k, f * c)
        return Element(self, _dense(acc, self.dim))

    def comultiply(self, x):
        """delta(x) as sorted (coefficient, j, k) triples."""
        if x.algebra is not self:
            raise ValueError("element belongs to a different algebra")
        acc = {}
        for i, ci in enumerate(x.coords):
            if ci.is_zero():
                continue
            for c, j, k in self.comul[i]:
                _acc(acc, (j, k), ci * c)
        return tuple((c, j, k) for (j, k), c in sorted(acc.items()))

    def comultiply_dict(self, x):
        return {(j, k): c for (c, j, k) in self.comultiply(x)}

    def counit_of(self, x):
        if x.algebra is not self:
            raise ValueError("element belongs to a different algebra")
        acc = ZERO
        for c, e in zip(x.coords, self.counit):
            if not (c.is_zero() or e.is_zero()):
                acc = acc + c * e
        return acc

    def antipode_of(self, x):
        if x.algebra is not self:
            raise ValueError("element belongs to a different algebra")
        acc = {}
        for i, ci in enumerate(x.coords):
            if ci.is_zero():
                continue
            for j, c in self.antipode_sparse[i]:
                _acc(acc, j, ci * c)
        return Element(self, _dense(acc, self.dim))

    def __repr__(self):
        return f"HopfAlgebraData({self.name or 'unnamed'}, dim={self.dim})"


class Element:
    """A vector in a fixed algebra."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = coords

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")
        return Element(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")
        return Element(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Element(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        if isinstance(other, (Scalar, int)):
            c = other if isinstance(other, Scalar) else Scalar(other)
            return Element(self.algebra, tuple(c * a for a in self.coords))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            c = other if isinstance(other, Scalar) else Scalar(other)
            return Element(self.algebra, tuple(c * a for a in self.coords))
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def coords_key(self):
        return tuple(c.sort_key() for c in self.coords)

    def __repr__(self):
        terms = []
        for c, label in zip(self.coords, self.algebra.basis):
            if c.is_zero():
                continue
            if c.is_one():
                terms.append(label)
            elif c == -1:
                terms.append(f"-{label}")
            else:
                s = str(c)
                if any(ch in "+-" for ch in s[1:]):
                    s = f"({s})"
                terms.append(f"{s}*{label}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def _acc(acc, key, val):
    cur = acc.get(key)
    if cur is None:
        acc[key] = val
    else:
        s = cur + val
        if s.is_zero():
            del acc[key]
        else:
            acc[key] = s


def _dense(acc, dim):
    return tuple(acc.get(i, ZERO) for i in range(dim))


# -- axiom verification --------------------------------------------------------

AXIOM_NAMES = (
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "comultiplication-multiplicative",
    "counit-multiplicative",
    "antipode",
)


class AxiomCheck:
    __slots__ = ("name", "passed", "witnesses")

    def __init__(self, name, witnesses):
        self.name = name
        self.witnesses = tuple(witnesses)
        self.passed = not self.witnesses

    def __repr__(self):
        state = "ok" if self.passed else f"{len(self.witnesses)} failures"
        return f"AxiomCheck({self.name}: {state})"


class AxiomReport:
    __slots__ = ("algebra_name", "dim", "checks")

    def __init__(self, algebra_name, dim, checks):
        self.algebra_name = algebra_name
        self.dim = dim
        self.checks = tuple(checks)

    @property
    def all_passed(self):
        return all(c.passed for c in self.checks)

    def failing(self):
        return tuple(c for c in self.checks if not c.passed)

    def __repr__(self):
        verdict = "all axioms hold" if self.all_passed else "AXIOM FAILURES"
        return f"AxiomReport({self.algebra_name}, dim={self.dim}: {verdict})"


def verify_axioms(H):
    """Check every Hopf axiom exactly on all basis tuples of H."""
    checks = [
        AxiomCheck("associativity", _check_associativity(H)),
        AxiomCheck("unit", _check_unit(H)),
        AxiomCheck("coassociativity", _check_coassociativity(H)),
        AxiomCheck("counit", _check_counit(H)),
        AxiomCheck("comultiplication-multiplicative", _check_comul_mult(H)),
        AxiomCheck("counit-multiplicative", _check_counit_mult(H)),
        AxiomCheck("antipode", _check_antipode(H)),
    ]
    return AxiomReport(H.name, H.dim, checks)


def _check_associativity(H):
    witnesses = []
    sparse = H.mul_sparse
    d = H.dim
    for i in range(d):
        for j in range(d):
            row = sparse[i][j]
            for k in range(d):
                lhs = {}
                for l, c in row:
                    for m, e in sparse[l][k]:
                        _acc(lhs, m, c * e)
                rhs = {}
                for l, c in sparse[j][k]:
                    for m, e in sparse[i][l]:
                        _acc(rhs, m, c * e)
                if lhs != rhs:
                    witnesses.append(
                        f"(e{i}*e{j})*e{k} != e{i}*(e{j}*e{k}) "
                        f"[{H.basis[i]}, {H.basis[j]}, {H.basis[k]}]"
                    )
    return witnesses


def _check_unit(H):
    witnesses = []
    sparse = H.mul_sparse
    for i in range(H.dim):
        left = {}
        for j, u in H.unit_sparse:
            for k, c in sparse[j][i]:
                _acc(left, k, u * c)
        right = {}
        for j, u in H.unit_sparse:
            for k, c in sparse[i][j]:
                _acc(right, k, u * c)
        expected = {i: ONE}
        if left != expected:
            witnesses.append(f"1*{H.basis[i]} != {H.basis[i]}")
        if right != expected:
            witnesses.append(f"{H.basis[i]}*1 != {H.basis[i]}")
    return witnesses


def _check_coassociativity(H):
    witnesses = []
    for i in range(H.dim):
        lhs = {}
        for c, j, k in H.comul[i]:
            for c2, a, b in H.comul[j]:
                _acc(lhs, (a, b, k), c * c2)
        rhs = {}
        for c, j, k in H.comul[i]:
            for c2, a, b in H.comul[k]:
                _acc(rhs, (j, a, b), c * c2)
        if lhs != rhs:
            witnesses.append(f"coassociativity fails on {H.basis[i]}")
    return witnesses


def _check_counit(H):
    witnesses = []
    eps = H.counit
    for i in range(H.dim):
        left = {}
        right = {}
        for c, j, k in H.comul[i]:
            if not eps[j].is_zero():
                _acc(left, k, c * eps[j])
            if not eps[k].is_zero():
                _acc(right, j, c * eps[k])
        expected = {i: ONE}
        if left != expected:
            witnesses.append(f"(eps (x) id) delta fails on {H.basis[i]}")
        if right != expected:
            witnesses.append(f"(id (x) eps) delta fails on {H.basis[i]}")
    return witnesses


def _tensor_mul(H, t1, t2):
    sparse = H.mul_sparse
    acc = {}
    for (a, b), c in t1.items():
        for (p, q), e in t2.items():
            f = c * e
            for m, cm in sparse[a][p]:
                for n, cn in sparse[b][q]:
                    _acc(acc, (m, n), f * cm * cn)
    return acc


def _check_comul_mult(H):
    witnesses = []
    # delta(1) = 1 (x) 1
    delta_unit = {}
    for i, u in H.unit_sparse:
        for c, j, k in H.comul[i]:
            _acc(delta_unit, (j, k), u * c)
    unit_tensor = {}
    for i, u in H.unit_sparse:
        for j, v in H.unit_sparse:
            _acc(unit_tensor, (i, j), u * v)
    if delta_unit != unit_tensor:
        witnesses.append("delta(1) != 1 (x) 1")
    for i in range(H.dim):
        di = {(j, k): c for c, j, k in H.comul[i]}
        for j in range(H.dim):
            dj = {(a, b): c for c, a, b in H.comul[j]}
            rhs = _tensor_mul(H, di, dj)
            lhs = {}
            for k, c in H.mul_sparse[i][j]:
                for c2, a, b in H.comul[k]:
                    _acc(lhs, (a, b), c * c2)
            if lhs != rhs:
                witnesses.append(
                    f"delta({H.basis[i]}*{H.basis[j]}) != delta({H.basis[i]})*delta({H.basis[j]})"
                )
    return witnesses


def _check_counit_mult(H):
    witnesses = []
    eps = H.counit
    eps_unit = ZERO
    for i, u in H.unit_sparse:
        eps_unit = eps_unit + u * eps[i]
    if eps_unit != ONE:
        witnesses.append("eps(1) != 1")
    for i in range(H.dim):
        for j in range(H.dim):
            acc = ZERO
            for k, c in H.mul_sparse[i][j]:
                if not eps[k].is_zero():
                    acc = acc + c * eps[k]
            if acc != eps[i] * eps[j]:
                witnesses.append(f"eps({H.basis[i]}*{H.basis[j]}) != eps*eps")
    return witnesses


def _check_antipode(H):
    witnesses = []
    sparse = H.mul_sparse
    anti = H.antipode_sparse
    for i in range(H.dim):
        left = {}
        right = {}
        for c, j, k in H.comul[i]:
            # S(x1) x2
            for a, ca in anti[j]:
                for m, cm in sparse[a][k]:
                    _acc(left, m, c * ca * cm)
            # x1 S(x2)
            for b, cb in anti[k]:
                for m, cm in sparse[j][b]:
                    _acc(right, m, c * cb * cm)
        expected = {}
        if not H.counit[i].is_zero():
            for j, u in H.unit_sparse:
                expected[j] = H.counit[i] * u
        if left != expected:
            witnesses.append(f"m(S (x) id) delta != eps*1 on {H.basis[i]}")
        if right != expected:
            witnesses.append(f"m(id (x) S) delta != eps*1 on {H.basis[i]}")
    return witnesses


# -- tensor product --------------------------------------------------------------


def tensor_product(H1, H2):
    """Componentwise Hopf structure on the tensor basis, antipode S1 (x) S2."""
    d1, d2 = H1.dim, H2.dim
    dim = d1 * d2
    basis = tuple(f"{a}⊗{b}" for a in H1.basis for b in H2.basis)

    def idx(i1, i2):
        return i1 * d2 + i2

    mul = [[None] * dim for _ in range(dim)]
    for i1 in range(d1):
        for i2 in range(d2):
            for j1 in range(d1):
                for j2 in range(d2):
                    row = [ZERO] * dim
                    for k1, c1 in H1.mul_sparse[i1][j1]:
                        for k2, c2 in H2.mul_sparse[i2][j2]:
                            row[idx(k1, k2)] = c1 * c2
                    mul[idx(i1, i2)][idx(j1, j2)] = tuple(row)

    unit = [ZERO] * dim
    for i1, u1 in H1.unit_sparse:
        for i2, u2 in H2.unit_sparse:
            unit[idx(i1, i2)] = u1 * u2

    comul = []
    for i1 in range(d1):
        for i2 in range(d2):
            triples = []
            for c1, j1, k1 in H1.comul[i1]:
                for c2, j2, k2 in H2.comul[i2]:
                    triples.append((c1 * c2, idx(j1, j2), idx(k1, k2)))
            comul.append(tuple(triples))

    counit = [H1.counit[i1] * H2.counit[i2] for i1 in range(d1) for i2 in range(d2)]

    antipode = [[ZERO] * dim for _ in range(dim)]
    for i1 in range(d1):
        for i2 in range(d2):
            for j1, c1 in H1.antipode_sparse[i1]:
                for j2, c2 in H2.antipode_sparse[i2]:
                    antipode[idx(i1, i2)][idx(j1, j2)] = c1 * c2

    return HopfAlgebraData(
        f"{H1.name}⊗{H2.name}", basis, mul, unit, comul, counit, antipode
    )


# -- group-likes and skew-primitives -----------------------------------------------

_GROUPLIKE_CACHE = {}
_SKEW_CACHE = {}


def is_grouplike(H, x):
    """delta(x) = x (x) x and eps(x) = 1, checked exactly."""
    if H.counit_of(x) != ONE:
        return False
    outer = {}
    for i, ci in enumerate(x.coords):
        if ci.is_zero():
            continue
        for j, cj in enumerate(x.coords):
            if not cj.is_zero():
                outer[(i, j)] = ci * cj
    return H.comultiply_dict(x) == outer


def grouplikes(H, split_budget=_DEFAULT_BUDGET):
    """The complete finite set of group-like elements, solver-enumerated."""
    cache_key = H.coalgebra_key()
    cached = _GROUPLIKE_CACHE.get(cache_key)
    if cached is None:
        cached = _enumerate_grouplikes(H, split_budget)
        _GROUPLIKE_CACHE[cache_key] = cached
    return tuple(H.element(coords) for coords in cached)


def _enumerate_grouplikes(H, split_budget):
    d = H.dim
    width = len(str(d - 1))
    names = [f"x{i:0{width}d}" for i in range(d)]
    xs = [Poly.var(n) for n in names]
    system = []
    # eps(x) = 1
    system.append(
        sum((xs[i] * H.counit[i] for i in range(d) if not H.counit[i].is_zero()), Poly())
        - Poly.const(ONE)
    )
    # delta(x) = x (x) x, coordinatewise
    delta = {}
    for i in range(d):
        for c, j, k in H.comul[i]:
            cur = delta.setdefault((j, k), Poly())
            delta[(j, k)] = cur + xs[i] * c
    for j in range(d):
        for k in range(d):
            lhs = delta.get((j, k), Poly())
            system.append(lhs - xs[j] * xs[k])
    solset = solve(system, split_budget=split_budget, var_universe=names)
    points = []
    for branch in solset:
        if not branch.is_point():
            raise AssertionError(
                "group-like system produced a non-point branch; "
                "group-likes of a finite-dimensional Hopf algebra are finite"
            )
        p = branch.point()
        points.append(tuple(p[n] for n in names))
    points.sort(key=lambda coords: tuple(c.sort_key() for c in coords))
    out = []
    for coords in points:
        g = H.element(coords)
        if not is_grouplike(H, g):
            raise AssertionError("solver returned a non-group-like candidate")
        out.append(coords)
    return tuple(out)


def skew_primitives(H, a, b, use_cache=True):
    """Basis of {x : delta(x) = x (x) a + b (x) x} for group-likes a, b."""
    if not is_grouplike(H, a) or not is_grouplike(H, b):
        raise ValueError("skew-primitive spaces need group-like anchors")
    cache_key = (H.coalgebra_key(), a.coords_key(), b.coords_key())
    if use_cache and cache_key in _SKEW_CACHE:
        return tuple(H.element(c) for c in _SKEW_CACHE[cache_key])
    d = H.dim
    rows = {}
    for i in range(d):
        for c, j, k in H.comul[i]:
            rows.setdefault((j, k), {})
            _acc(rows[(j, k)], i, c)
    for j in range(d):
        # -(x (x) a): coordinate (j, k) loses a_k at column j
        for k, ak in enumerate(a.coords):
            if not ak.is_zero():
                rows.setdefault((j, k), {})
                _acc(rows[(j, k)], j, -ak)
        # -(b (x) x): coordinate (k, j) loses b_k at column j
        for k, bk in enumerate(b.coords):
            if not bk.is_zero():
                rows.setdefault((k, j), {})
                _acc(rows[(k, j)], j, -bk)
    dense_rows = []
    seen = set()
    for key in sorted(rows):
        entries = rows[key]
        if not entries:
            continue
        row = tuple(entries.get(i, ZERO) for i in range(d))
        marker = tuple(c.sort_key() for c in row)
        if marker not in seen:
            seen.add(marker)
            dense_rows.append(row)
    if not dense_rows:
        basis = [tuple(ONE if i == j else ZERO for j in range(d)) for i in range(d)]
    else:
        basis = Mat(dense_rows).kernel()
    _SKEW_CACHE[cache_key] = tuple(basis)
    return tuple(H.element(v) for v in basis)
