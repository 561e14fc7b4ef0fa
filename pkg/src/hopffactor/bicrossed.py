"""Bicrossed products of a matched pair, presentation checks, and
distinguishing-invariant reports.

The product lives on the basis a (x) x (H4 factor first, matching the
action directions |> : H8 (x) H4 -> H4 and <| : H8 (x) H4 -> H8) with

    (a (x) x)(b (x) y) = sum  a (x1 |> b1)  (x)  (x2 <| b2) y,

the tensor coalgebra structure, and S(a (x) x) = (1 (x) S(x))(S(a) (x) 1)
computed inside the product.  The antipode formula is validated by the
convolution axioms rather than trusted: construction fails hard when any
axiom breaks, because a genuine matched pair must yield a Hopf algebra.
"""

from dataclasses import dataclass

from hopffactor.hopf import (
    HopfAlgebraData,
    grouplikes,
    is_grouplike,
    skew_primitives,
    verify_axioms,
)
from hopffactor.hopf import _acc as _sacc
from hopffactor.linalg import Mat
from hopffactor.scalar import I, NEG_I, ONE, ZERO, Scalar

_DEFAULT_BUDGET = 100_000


class BicrossedConstructionError(RuntimeError):
    """A candidate pair produced a non-Hopf product (it was not matched)."""


@dataclass
class BicrossedProduct:
    algebra: HopfAlgebraData
    pair: object  # MatchedPairCandidate provenance

    @property
    def dim(self):
        return self.algebra.dim

    def embed_h4(self, element):
        """iota_A: a -> a (x) 1."""
        h4 = self.pair.left.h4
        if element.algebra is not h4:
            raise ValueError("element does not live in the H4 factor")
        coords = [ZERO] * self.algebra.dim
        for ai, c in enumerate(element.coords):
            coords[ai * 8] = c
        return self.algebra.element(coords)

    def embed_h8(self, element):
        """iota_H: x -> 1 (x) x."""
        h8 = self.pair.left.h8
        if element.algebra is not h8:
            raise ValueError("element does not live in the H8 factor")
        coords = [ZERO] * self.algebra.dim
        for xi, c in enumerate(element.coords):
            coords[xi] = c
        return self.algebra.element(coords)

    def generator(self, name):
        h8, h4 = self.pair.left.h8, self.pair.left.h4
        if name in ("G", "X"):
            return self.embed_h4(h4.basis_element(name))
        return self.embed_h8(h8.basis_element(name))


def build_bicrossed(pair, verify=True):
    """The 32-dimensional product of a matched pair, fully axiom-checked."""
    left, right = pair.left, pair.right
    h8, h4 = left.h8, left.h4
    lsc = left.scalar_entries()
    rsc = right.scalar_entries()
    d4, d8 = h4.dim, h8.dim
    dim = d4 * d8

    def idx(ai, xi):
        return ai * d8 + xi

    basis = tuple(f"{a}⊗{x}" for a in h4.basis for x in h8.basis)

    mul = [[None] * dim for _ in range(dim)]
    for ai in range(d4):
        for xi in range(d8):
            for bi in range(d4):
                for yi in range(d8):
                    acc = {}
                    for c8, x1, x2 in h8.comul[xi]:
                        for c4, b1, b2 in h4.comul[bi]:
                            f = c8 * c4
                            u = lsc[(x1, b1)]  # x1 |> b1 in H4
                            w = rsc[(x2, b2)]  # x2 <| b2 in H8
                            # a * u in H4
                            left_part = {}
                            for s, cs in enumerate(u):
                                if cs.is_zero():
                                    continue
                                for m, cm in h4.mul_sparse[ai][s]:
                                    _sacc(left_part, m, cs * cm)
                            # w * y in H8
                            right_part = {}
                            for t, ct in enumerate(w):
                                if ct.is_zero():
                                    continue
                                for n, cn in h8.mul_sparse[t][yi]:
                                    _sacc(right_part, n, ct * cn)
                            for m, cm in left_part.items():
                                for n, cn in right_part.items():
                                    _sacc(acc, idx(m, n), f * cm * cn)
                    row = [ZERO] * dim
                    for k, c in acc.items():
                        row[k] = c
                    mul[idx(ai, xi)][idx(bi, yi)] = tuple(row)

    unit = [ZERO] * dim
    unit[idx(0, 0)] = ONE

    comul = []
    for ai in range(d4):
        for xi in range(d8):
            triples = []
            for c4, a1, a2 in h4.comul[ai]:
                for c8, x1, x2 in h8.comul[xi]:
                    triples.append((c4 * c8, idx(a1, x1), idx(a2, x2)))
            comul.append(tuple(triples))

    counit = [h4.counit[ai] * h8.counit[xi] for ai in range(d4) for xi in range(d8)]

    algebra = HopfAlgebraData(
        _product_name(pair), basis, mul, unit, comul, counit,
        [[ZERO] * dim for _ in range(dim)],
    )

    # S(a (x) x) = (1 (x) S(x)) * (S(a) (x) 1), multiplied inside the product
    antipode = []
    for ai in range(d4):
        sa = h4.antipode_sparse[ai]
        for xi in range(d8):
            sx = h8.antipode_sparse[xi]
            acc = {}
            for n, cn in sx:
                for m, cm in sa:
                    f = cn * cm
                    row = algebra.mul[idx(0, n)][idx(m, 0)]
                    for k, c in enumerate(row):
                        if not c.is_zero():
                            _sacc(acc, k, f * c)
            antipode.append(tuple(acc.get(k, ZERO) for k in range(dim)))

    algebra = HopfAlgebraData(
        algebra.name, basis, mul, unit, comul, counit, antipode
    )
    product = BicrossedProduct(algebra, pair)
    if verify:
        report = verify_axioms(algebra)
        if not report.all_passed:
            bad = report.failing()[0]
            raise BicrossedConstructionError(
                f"product of a non-matched pair: axiom {bad.name} fails "
                f"({bad.witnesses[0] if bad.witnesses else 'no witness'})"
            )
    return product


def _product_name(pair):
    sig = getattr(pair, "zx_signature", None)
    return f"bicrossed[{sig}]" if sig else "bicrossed"


# -- presentations ---------------------------------------------------------------

# Relations are (left word, ((coefficient, right word), ...)) over the
# generator alphabet {g, h, z, G, X}; the empty word is the unit.
_COMMON_RELATIONS = (
    ("g.g", "1"),
    ("h.h", "1"),
    ("G.G", "1"),
    ("g.h", "h.g"),
    ("g.z", "z.h"),
    ("h.z", "z.g"),
    ("z.z", (("1/2", ""), ("1/2", "g"), ("1/2", "h"), ("-1/2", "g.h"))),
    ("X.X", "0"),
    ("G.X", (("-1", "X.G"),)),
)

_CROSS_RELATIONS = {
    "tensor": (
        ("g.G", "G.g"),
        ("h.G", "G.h"),
        ("z.G", "G.z"),
        ("g.X", "X.g"),
        ("h.X", "X.h"),
        ("z.X", "X.z"),
    ),
    "H32_1": (
        ("g.G", "G.g"),
        ("h.G", "G.h"),
        ("z.G", "G.z"),
        ("g.X", "X.g"),
        ("h.X", "X.h"),
        ("z.X", (("-1", "X.z"),)),
    ),
    "H32_2": (
        ("g.G", "G.g"),
        ("h.G", "G.h"),
        ("g.z.G", "G.h.z"),
        ("g.X", (("-1", "X.g"),)),
        ("h.X", (("-1", "X.h"),)),
        ("z.X", (("i", "X.g.z"),)),
    ),
    "H32_3": (
        ("g.G", "G.g"),
        ("h.G", "G.h"),
        ("g.z.G", "G.h.z"),
        ("g.X", (("-1", "X.g"),)),
        ("h.X", (("-1", "X.h"),)),
        ("z.X", (("-i", "X.g.z"),)),
    ),
}

PRESENTATION_NAMES = ("tensor", "H32_1", "H32_2", "H32_3")


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    holds: bool
    witness: str = ""


def _word_element(product, word):
    acc = product.algebra.one()
    if word:
        for gen in word.split("."):
            acc = acc * product.generator(gen)
    return acc


def _rhs_element(product, rhs):
    if rhs == "0":
        return product.algebra.zero()
    if isinstance(rhs, str):
        return _word_element(product, rhs)
    acc = product.algebra.zero()
    for coeff, word in rhs:
        acc = acc + Scalar.parse(coeff) * _word_element(product, word)
    return acc


def presentation_relations(which):
    if which not in _CROSS_RELATIONS:
        raise ValueError(f"unknown presentation {which!r}")
    return _COMMON_RELATIONS + _CROSS_RELATIONS[which]


def verify_presentation(product, which):
    """Evaluate every relation of the named presentation inside the product
    via the two embeddings; failures carry the witness difference."""
    checks = []
    for lhs, rhs in presentation_relations(which):
        left_el = _word_element(product, lhs)
        right_el = _rhs_element(product, rhs)
        diff = left_el - right_el
        label = f"{_pretty_word(lhs)} = {_pretty_rhs(rhs)}"
        if diff.is_zero():
            checks.append(RelationCheck(label, True))
        else:
            checks.append(RelationCheck(label, False, witness=repr(diff)))
    return checks


def _pretty_word(word):
    return word.replace(".", "") if word else "1"


def _pretty_rhs(rhs):
    if isinstance(rhs, str):
        return _pretty_word(rhs)
    terms = []
    for coeff, word in rhs:
        w = _pretty_word(word)
        if coeff == "1":
            terms.append(w)
        elif coeff == "-1":
            terms.append(f"-{w}")
        elif coeff in ("i", "-i"):
            terms.append(f"{coeff}{w}" if w != "1" else coeff)
        else:
            terms.append(f"({coeff}){w}" if w != "1" else f"({coeff})")
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def zx_signature(product):
    """Which of the four zX relation shapes holds: the product's fingerprint."""
    z = product.generator("z")
    X = product.generator("X")
    zx = z * X
    candidates = (
        ("zX=Xz", X * z),
        ("zX=-Xz", -(X * z)),
        ("zX=iXgz", I * (X * product.generator("g") * z)),
        ("zX=-iXgz", NEG_I * (X * product.generator("g") * z)),
    )
    for name, value in candidates:
        if zx == value:
            return name
    return f"zX=other({zx!r})"


def presentation_for(product):
    """The presentation a product should satisfy, chosen by its zX shape."""
    return {
        "zX=Xz": "tensor",
        "zX=-Xz": "H32_1",
        "zX=iXgz": "H32_2",
        "zX=-iXgz": "H32_3",
    }.get(zx_signature(product))


# -- embeddings & factorization checks ----------------------------------------------


def check_embeddings(product):
    """iota_A and iota_H are injective algebra and coalgebra morphisms, and
    multiplication H4 (x) H8 -> E is a linear isomorphism.  Returns a list
    of failure strings (empty when everything holds)."""
    failures = []
    E = product.algebra
    h8, h4 = product.pair.left.h8, product.pair.left.h4

    for H, embed, tag in (
        (h4, product.embed_h4, "iota_A"),
        (h8, product.embed_h8, "iota_H"),
    ):
        images = [embed(H.basis_element(i)) for i in range(H.dim)]
        if embed(H.one()) != E.one():
            failures.append(f"{tag} does not preserve the unit")
        for i in range(H.dim):
            for j in range(H.dim):
                lhs = images[i] * images[j]
                rhs = embed(H.basis_element(i) * H.basis_element(j))
                if lhs != rhs:
                    failures.append(
                        f"{tag} is not an algebra map at ({H.basis[i]}, {H.basis[j]})"
                    )
        for i in range(H.dim):
            img = {}
            for c, j, k in H.comul[i]:
                jj = images[j]
                kk = images[k]
                for p, cp in enumerate(jj.coords):
                    if cp.is_zero():
                        continue
                    for q, cq in enumerate(kk.coords):
                        if not cq.is_zero():
                            _sacc(img, (p, q), c * cp * cq)
            target = E.comultiply_dict(images[i])
            if img != target:
                failures.append(f"{tag} is not a coalgebra map at {H.basis[i]}")
        for i in range(H.dim):
            if H.counit[i] != E.counit_of(images[i]):
                failures.append(f"{tag} does not preserve the counit at {H.basis[i]}")
        rows = [img.coords for img in images]
        if Mat(rows).rank() != H.dim:
            failures.append(f"{tag} is not injective")

    # factorization: products iota_A(a_i) iota_H(x_j) form a basis of E
    rows = []
    for ai in range(h4.dim):
        for xi in range(h8.dim):
            el = product.embed_h4(h4.basis_element(ai)) * product.embed_h8(
                h8.basis_element(xi)
            )
            rows.append(el.coords)
    if Mat(rows).rank() != E.dim:
        failures.append("multiplication H4 (x) H8 -> E is not bijective")
    return failures


# -- invariant reports ------------------------------------------------------------


@dataclass
class InvariantReport:
    name: str
    dim: int
    grouplike_count: int
    grouplike_labels: tuple
    skew_dimensions: tuple  # ((i, j, dim), ...) over group-like indices
    commutative: bool
    cocommutative: bool
    zx: str
    antipode_invertible: bool

    def to_json(self):
        return {
            "schema": "invariant-report/v1",
            "name": self.name,
            "dim": self.dim,
            "grouplikes": {
                "count": self.grouplike_count,
                "elements": list(self.grouplike_labels),
            },
            "skew_primitive_dimensions": [list(t) for t in self.skew_dimensions],
            "commutative": self.commutative,
            "cocommutative": self.cocommutative,
            "zx_relation": self.zx,
            "antipode_invertible": self.antipode_invertible,
        }


def invariant_report(product, split_budget=_DEFAULT_BUDGET):
    """Dimension, group-likes (solver-enumerated and cross-checked), all
    skew-primitive dimensions between group-like pairs, commutativity
    flags, the zX relation shape, and antipode bijectivity."""
    E = product.algebra
    gls = grouplikes(E, split_budget=split_budget)
    for g in gls:
        if not is_grouplike(E, g):
            raise AssertionError("invariant report found a bogus group-like")
    skew_dims = []
    for i, a in enumerate(gls):
        for j, b in enumerate(gls):
            basis = skew_primitives(E, a, b)
            skew_dims.append((i, j, len(basis)))
    commutative = all(
        E.mul[i][j] == E.mul[j][i] for i in range(E.dim) for j in range(i)
    )
    cocommutative = all(
        {(j, k): c for c, j, k in E.comul[i]}
        == {(k, j): c for c, j, k in E.comul[i]}
        for i in range(E.dim)
    )
    return InvariantReport(
        name=E.name,
        dim=E.dim,
        grouplike_count=len(gls),
        grouplike_labels=tuple(repr(g) for g in gls),
        skew_dimensions=tuple(skew_dims),
        commutative=commutative,
        cocommutative=cocommutative,
        zx=zx_signature(product),
        antipode_invertible=Mat(E.antipode).is_invertible(),
    )
