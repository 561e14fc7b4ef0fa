"""Polynomial constraint solving by linear elimination and case splitting.

The solver returns the complete solution set of a finite polynomial system
over Q(i) as a list of triangular substitution branches, using exactly
three solution-preserving moves:

  (i)   substitute an unknown that some equation isolates linearly
        (c*x + rest = 0 with c a nonzero scalar and x absent from rest);
  (ii)  split a factorable equation, v*q = 0  ->  v = 0  or  q = 0;
  (iii) split a quadratic with constant leading coefficient through the
        quadratic formula, whenever the discriminant is a perfect square
        in Q(i) (as a scalar or as the square of a polynomial).

Dead branches (a nonzero constant constraint) are pruned, identical
branches are merged, and branches whose variety is contained in another
branch are dropped, so solution sets compare structurally.  Anything the
three moves cannot reduce raises IrreducibleSystemError carrying the
offending residual: the solver never guesses.
"""

from math import isqrt

from hopffactor.poly import Poly
from hopffactor.scalar import ZERO, Scalar


class IrreducibleSystemError(Exception):
    """A system (or subproblem) that the three solving moves cannot reduce."""

    def __init__(self, reason, residual):
        self.reason = reason
        self.residual = tuple(residual)
        shown = ", ".join(p.render() for p in self.residual[:8])
        extra = "" if len(self.residual) <= 8 else f", ... ({len(self.residual)} total)"
        super().__init__(f"irreducible system ({reason}): {shown}{extra}")


# -- square roots in Q(i) ----------------------------------------------------


def _rat_sqrt(n, d):
    # sqrt of the reduced nonnegative rational n/d, or None
    if n < 0:
        return None
    sn, sd = isqrt(n), isqrt(d)
    if sn * sn == n and sd * sd == d:
        return sn, sd
    return None


def gaussian_sqrt(s):
    """The canonical square root of s in Q(i), or None when none exists.

    The canonical root has positive real part, or zero real part and
    nonnegative imaginary part.
    """
    if s.is_zero():
        return type(s)(0)
    if s.imn == 0:
        if s.rn > 0:
            r = _rat_sqrt(s.rn, s.rd)
            return None if r is None else type(s)(r[0], r[1])
        r = _rat_sqrt(-s.rn, s.rd)
        return None if r is None else type(s)(0, 1, r[0], r[1])
    # t = x + yi with x^2 - y^2 = re(s), 2xy = im(s); then x^2 + y^2 = |s|
    # and x^2 = (re(s) + |s|)/2, all of which must be rational squares.
    norm_n = s.rn * s.rn * s.imd * s.imd + s.imn * s.imn * s.rd * s.rd
    norm_d = s.rd * s.rd * s.imd * s.imd
    r = _rat_sqrt(norm_n, norm_d)
    if r is None:
        return None
    # x^2 = (rn/rd + r)/2
    x2_n = s.rn * r[1] + r[0] * s.rd
    x2_d = 2 * s.rd * r[1]
    x = _rat_sqrt(*_reduce(x2_n, x2_d))
    if x is None or x[0] == 0:
        return None
    # y = im(s)/(2x), purely imaginary contribution
    t = type(s)(x[0], x[1]) + type(s)(0, 1, s.imn, s.imd) / type(s)(2 * x[0], x[1])
    if t * t == s:
        return t
    return None


def _reduce(n, d):
    from math import gcd

    if d < 0:
        n, d = -n, -d
    g = gcd(n, d)
    return (n // g, d // g) if g > 1 else (n, d)


def poly_sqrt(p):
    """A polynomial square root of p over Q(i), canonical sign, or None."""
    if p.is_zero():
        return Poly()
    if p.is_const():
        s = gaussian_sqrt(p.const_value())
        return None if s is None else Poly.const(s)
    if p.degree() != 2:
        return None
    anchor = None
    for v in sorted(p.variables()):
        if not p.coeff((v, v)).is_zero():
            anchor = v
            break
    if anchor is None:
        return None
    la = gaussian_sqrt(p.coeff((anchor, anchor)))
    if la is None:
        return None
    half_inv = (la + la).inv()
    terms = {(anchor,): la}
    for w in sorted(p.variables()):
        if w == anchor:
            continue
        c = p.coeff((anchor, w))
        if not c.is_zero():
            terms[(w,)] = c * half_inv
    c0 = p.coeff((anchor,))
    if not c0.is_zero():
        terms[()] = c0 * half_inv
    cand = Poly(terms)
    if cand * cand == p:
        return _canonical_sign(cand)
    return None


def _canonical_sign(p):
    lead = p.key()[0][1]  # sort_key of the leading coefficient
    rn, _, imn, _ = lead
    if rn > 0 or (rn == 0 and imn >= 0):
        return p
    return -p


# -- branches ----------------------------------------------------------------


class Branch:
    """A triangular substitution: every substituted unknown maps to a
    polynomial in the remaining free unknowns."""

    __slots__ = ("subst", "free", "_key")

    def __init__(self, subst, free):
        self.subst = dict(subst)
        self.free = tuple(sorted(free))
        self._key = None

    def key(self):
        if self._key is None:
            self._key = tuple(
                (v, e.key()) for v, e in sorted(self.subst.items())
            )
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Branch):
            return NotImplemented
        return self.key() == other.key() and self.free == other.free

    def __hash__(self):
        return hash((self.key(), self.free))

    def __repr__(self):
        inner = ", ".join(f"{v}={e.render()}" for v, e in sorted(self.subst.items()))
        if self.free:
            inner += ("; " if inner else "") + "free: " + ", ".join(self.free)
        return f"Branch({inner})"

    def apply(self, p):
        """Substitute this branch into a polynomial (single pass suffices:
        substitution targets are already expressed over free unknowns)."""
        return p.subst_many(self.subst)

    def is_point(self):
        return not self.free and all(e.is_const() for e in self.subst.values())

    def point(self):
        """The single solution as {var: Scalar}; only for point branches."""
        if not self.is_point():
            raise ValueError("branch has free unknowns")
        return {v: e.const_value() for v, e in self.subst.items()}

    def sample(self, values=None):
        """A concrete solution: free unknowns get 1, 2, 3, ... by default."""
        if values is None:
            values = {v: Scalar(k + 1) for k, v in enumerate(self.free)}
        out = dict(values)
        for v, e in self.subst.items():
            out[v] = e.eval(values)
        return out

    def contains_point(self, assignment):
        """Does the concrete assignment (var -> Scalar, all unknowns) lie on
        this branch?"""
        for v, e in self.subst.items():
            if e.eval(assignment) != assignment[v]:
                return False
        return True

    def contains(self, other):
        """Variety containment: other is a subvariety of self."""
        for v, e in self.subst.items():
            q = Poly.var(v) - e
            if not other.apply(q).is_zero():
                return False
        return True

    def to_json(self):
        return {
            "substitution": {v: e.render() for v, e in sorted(self.subst.items())},
            "free": list(self.free),
        }


class SolutionSet:
    """All solutions of a system, as canonically ordered branches plus the
    log of case splits that produced them."""

    __slots__ = ("branches", "provenance")

    def __init__(self, branches, provenance):
        self.branches = tuple(branches)
        self.provenance = tuple(provenance)

    def __len__(self):
        return len(self.branches)

    def __iter__(self):
        return iter(self.branches)

    def __repr__(self):
        return f"SolutionSet({len(self.branches)} branches)"

    def to_json(self):
        return {
            "schema": "solutions/v1",
            "solutions": [b.to_json() for b in self.branches],
            "provenance": [dict(entry) for entry in self.provenance],
        }


# -- solver ------------------------------------------------------------------

_DEFAULT_BUDGET = 100_000


def _solve_linear(linear):
    """Simultaneous rule (i): reduced row echelon form of the fully linear
    constraints.  Returns {pivot var: affine Poly over free vars}, or None
    when the rows are inconsistent.  Fully deterministic: columns in sorted
    variable order, rows in list order."""
    rows = []
    for p in linear:
        row = {}
        const = ZERO
        for m, c in p.terms.items():
            if m:
                row[m[0]] = c
            else:
                const = c
        rows.append([row, const])
    columns = sorted({v for row, _ in rows for v in row})
    pivots = []
    used = [False] * len(rows)
    for var in columns:
        pivot_idx = None
        for i, (row, _) in enumerate(rows):
            if not used[i] and var in row:
                pivot_idx = i
                break
        if pivot_idx is None:
            continue
        used[pivot_idx] = True
        prow, pconst = rows[pivot_idx]
        inv = prow[var].inv()
        prow = {v: inv * c for v, c in prow.items()}
        pconst = inv * pconst
        rows[pivot_idx] = [prow, pconst]
        for i, (row, const) in enumerate(rows):
            if i == pivot_idx:
                continue
            f = row.get(var)
            if f is None:
                continue
            for v, c in prow.items():
                cur = row.get(v)
                s = (cur - f * c) if cur is not None else -(f * c)
                if s.is_zero():
                    row.pop(v, None)
                else:
                    row[v] = s
            rows[i][1] = const - f * pconst
        pivots.append((var, pivot_idx))
    for i, (row, const) in enumerate(rows):
        if not used[i] and not row and not const.is_zero():
            return None
        if not used[i] and row:
            raise AssertionError("linear elimination left an unused nonzero row")
    mapping = {}
    for var, i in pivots:
        row, const = rows[i]
        terms = {}
        if not const.is_zero():
            terms[()] = -const
        for v, c in row.items():
            if v != var:
                terms[(v,)] = -c
        mapping[var] = Poly(terms)
    return mapping


class _Node:
    __slots__ = ("constraints", "subst", "depth")

    def __init__(self, constraints, subst, depth):
        self.constraints = constraints  # list of nonzero Polys, stable order
        self.subst = subst
        self.depth = depth

    @classmethod
    def root(cls, polys):
        return cls([p for p in polys if not p.is_zero()], {}, 0)

    def clone(self):
        return _Node(list(self.constraints), dict(self.subst), self.depth + 1)

    def apply_batch(self, mapping):
        """Substitute a triangular batch everywhere; False when a nonzero
        constant constraint appears (dead branch)."""
        for v, e in list(self.subst.items()):
            if e.variables() & mapping.keys():
                self.subst[v] = e.subst_many(mapping)
        self.subst.update(mapping)
        out = []
        for p in self.constraints:
            if p.variables() & mapping.keys():
                q = p.subst_many(mapping)
                if q.is_zero():
                    continue
                if q.is_const():
                    return False
                out.append(q)
            else:
                out.append(p)
        self.constraints = out
        return True

    def propagate(self):
        """Exhaust rule (i) by rounds of batch linear elimination; False
        when the branch dies."""
        while True:
            linear = []
            rest = []
            for p in self.constraints:
                d = p.degree()
                if d == 0:
                    return False
                (linear if d == 1 else rest).append(p)
            if not linear:
                return True
            mapping = _solve_linear(linear)
            if mapping is None:
                return False
            self.constraints = rest
            if not self.apply_batch(mapping):
                return False

    def residual(self):
        return sorted(self.constraints, key=lambda p: p.key())

    def find_split(self):
        """The best applicable split, or None.  Ranked: forced single root,
        univariate quadratic, monomial content, multivariate quadratic;
        ties broken by constraint list order (which is deterministic).
        Split analyses are cached on the polynomials, which the cloned
        nodes share, so the scan stays cheap along a branch."""
        order = sorted(
            range(len(self.constraints)),
            key=lambda i: (
                self.constraints[i].degree(),
                len(self.constraints[i].variables()),
                i,
            ),
        )
        # cheap pass: univariate quadratics and monomial content
        best = None
        for pos in order:
            p = self.constraints[pos]
            for prio, kind, var, cases in _split_options(p, full=False):
                if best is None or (prio, ) < best[0][:1]:
                    best = ((prio, pos, var), pos, p, kind, var, cases)
            if best is not None and best[0][0] == 0:
                break
        if best is not None:
            return best
        # expensive pass: multivariate quadratics, nonlinear isolation
        for pos in order:
            p = self.constraints[pos]
            for prio, kind, var, cases in _split_options(p, full=True):
                if best is None or (prio, ) < best[0][:1]:
                    best = ((prio, pos, var), pos, p, kind, var, cases)
            if best is not None and best[0][0] == 0:
                break
        return best


def _split_options(p, full):
    """Applicable splits of one constraint, cached on the polynomial.

    Priorities: 0 forced single quadratic root, 1 univariate quadratic,
    2 monomial content, 3 multivariate quadratic with a square discriminant.
    The cheap tier (full=False) covers 0-2 for univariate constraints plus
    content; the full tier adds the expensive discriminant analysis.
    """
    cache = p._split_cache
    if cache is None:
        cache = {}
        p._split_cache = cache
    tier = "full" if full else "basic"
    if tier in cache:
        return cache[tier]
    options = []
    pvars = sorted(p.variables())
    univariate = len(pvars) == 1
    if full or univariate:
        for var in pvars:
            if p.degree_in(var) != 2:
                continue
            quad = p.as_quadratic_in(var)
            if quad is None:
                continue
            a, b, c = quad
            if not a.is_const():
                continue
            a_val = a.const_value()
            disc = b * b - c * (a_val * Scalar(4))
            root = poly_sqrt(disc)
            if root is None:
                continue
            inv2a = (a_val + a_val).inv()
            minus_b = -b
            if root.is_zero():
                options.append((0, "quadratic", var, (("assign", var, minus_b * inv2a),)))
            else:
                r1 = (minus_b + root) * inv2a
                r2 = (minus_b - root) * inv2a
                options.append(
                    (
                        1 if univariate else 3,
                        "quadratic",
                        var,
                        (("assign", var, r1), ("assign", var, r2)),
                    )
                )
    cv = p.content_var()
    if cv is not None:
        options.append(
            (2, "content", cv, (("assign", cv, Poly()), ("replace", None, p.divide_by_var(cv))))
        )
    options.sort(key=lambda opt: (opt[0], opt[2]))
    cache[tier] = tuple(options)
    return cache[tier]


def solve(system, split_budget=_DEFAULT_BUDGET, check=True, var_universe=None):
    """Complete solution set of {p = 0 for p in system} over Q(i).

    Raises IrreducibleSystemError when the split budget runs out or some
    residual constraint is outside the reach of the three solving moves.
    """
    if split_budget <= 0:
        raise ValueError("split budget must be positive")
    polys = [p if isinstance(p, Poly) else Poly.const(p) for p in system]
    universe = set(var_universe or ())
    for p in polys:
        universe |= p.variables()

    for p in polys:
        if p.is_const() and not p.is_zero():
            return SolutionSet([], [])

    root = _Node.root(polys)
    stack = [root]
    provenance = []
    raw_branches = []
    visited = 0
    while stack:
        node = stack.pop()
        visited += 1
        if visited > split_budget:
            raise IrreducibleSystemError("budget-exhausted", node.residual())
        split = None
        dead = False
        while True:
            if not node.propagate():
                dead = True
                break
            if not node.constraints:
                break
            split = node.find_split()
            if split is None:
                raise IrreducibleSystemError("no-applicable-rule", node.residual())
            _, pos, p, kind, var, cases = split
            if len(cases) > 1:
                break
            # forced move (single case): resolve in place, no new node
            del node.constraints[pos]
            case = cases[0]
            if case[0] == "assign":
                if not node.apply_batch({case[1]: case[2]}):
                    dead = True
                    break
            else:
                node.constraints.append(case[2])
            split = None
        if dead:
            continue
        if not node.constraints:
            raw_branches.append(Branch(node.subst, universe - set(node.subst)))
            continue
        _, pos, p, kind, var, cases = split
        provenance.append(
            {
                "depth": node.depth,
                "rule": kind,
                "constraint": p.render(),
                "variable": var,
                "cases": [_case_label(case) for case in cases],
            }
        )
        children = []
        for case in cases:
            child = node.clone()
            del child.constraints[pos]
            if case[0] == "assign":
                if not child.apply_batch({case[1]: case[2]}):
                    continue
            else:
                child.constraints.append(case[2])
            children.append(child)
        stack.extend(reversed(children))

    branches = _canonicalize_branches(raw_branches)
    if check:
        for b in branches:
            for p in polys:
                if not b.apply(p).is_zero():
                    raise AssertionError(
                        f"unsound branch {b!r} leaves residue on {p.render()}"
                    )
    return SolutionSet(branches, provenance)


def _case_label(case):
    if case[0] == "assign":
        return f"{case[1]} = {case[2].render()}"
    return f"factor: {case[2].render()}"


def _canonicalize_branches(raw):
    seen = {}
    for b in raw:
        seen.setdefault(b.key(), b)
    branches = sorted(seen.values(), key=lambda b: b.key())
    kept = []
    for i, b in enumerate(branches):
        redundant = False
        for j, other in enumerate(branches):
            if i == j or not other.contains(b):
                continue
            if not b.contains(other) or j < i:
                redundant = True
                break
        if not redundant:
            kept.append(b)
    return kept
