"""Homological invariants of presented graded modules.

Hilbert series, Hom(M, R) with stored embedding, Ext^j(M, R) as subquotients
of the dualized minimal resolution, depth and Krull dimension via Ext
vanishing, the biduality map with its torsion kernel, syzygy order, and the
(Hilbert series, Betti table) fingerprint used to verify isomorphism claims.
"""
from __future__ import annotations

import math
from typing import List, NamedTuple, Optional, Sequence

from syzal.errors import InputError, VerificationError, ZeroModuleError
from syzal.groebner import GraphBasis, kernel
from syzal.modfree import (
    FreeModule,
    GradedMatrix,
    ModuleElement,
    ModulePresentation,
    zero_module,
)
from syzal.resolution import (
    BettiTable,
    FreeResolution,
    minimize,
    minimize_presentation,
    resolve,
)
from syzal.ring import MonomialOrder, RingSpec


# ---------- Hilbert series ----------

class HilbertSeries:
    """numerator / (1 - x^d)^r with an integer Laurent-polynomial numerator.

    The numerator of hilbert_series(M) comes from a minimal resolution, so
    equal numerators characterize equal series; no reduction is performed.
    """

    __slots__ = ("numerator", "denom_pow", "var_degree")

    def __init__(self, numerator: dict, denom_pow: int, var_degree: int):
        self.numerator = {int(e): int(c) for e, c in numerator.items() if c}
        self.denom_pow = denom_pow
        self.var_degree = var_degree

    @staticmethod
    def zero(ring: RingSpec) -> "HilbertSeries":
        return HilbertSeries({}, ring.r, ring.d)

    @staticmethod
    def of_free(ring: RingSpec, degrees) -> "HilbertSeries":
        numer: dict = {}
        for g in degrees:
            numer[g] = numer.get(g, 0) + 1
        return HilbertSeries(numer, ring.r, ring.d)

    def _require_same_shape(self, other: "HilbertSeries"):
        if (self.denom_pow, self.var_degree) != (other.denom_pow, other.var_degree):
            raise InputError("Hilbert series over different rings")

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        self._require_same_shape(other)
        numer = dict(self.numerator)
        for e, c in other.numerator.items():
            numer[e] = numer.get(e, 0) + c
        return HilbertSeries(numer, self.denom_pow, self.var_degree)

    def __neg__(self) -> "HilbertSeries":
        return HilbertSeries({e: -c for e, c in self.numerator.items()},
                             self.denom_pow, self.var_degree)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self + (-other)

    def shift(self, l: int) -> "HilbertSeries":
        return HilbertSeries({e + l: c for e, c in self.numerator.items()},
                             self.denom_pow, self.var_degree)

    def is_zero(self) -> bool:
        return not self.numerator

    def coefficient(self, q: int) -> int:
        """dim_k M_q: exact power-series coefficient."""
        r, d = self.denom_pow, self.var_degree
        if r == 0:
            return self.numerator.get(q, 0)
        total = 0
        for e, c in self.numerator.items():
            k = q - e
            if k < 0 or k % d:
                continue
            total += c * math.comb(k // d + r - 1, r - 1)
        return total

    def coefficients(self, lo: int, hi: int) -> List[int]:
        return [self.coefficient(q) for q in range(lo, hi + 1)]

    def nonnegative_on(self, lo: int, hi: int) -> bool:
        return all(self.coefficient(q) >= 0 for q in range(lo, hi + 1))

    def __eq__(self, other):
        return (isinstance(other, HilbertSeries)
                and self.numerator == other.numerator
                and (self.denom_pow, self.var_degree)
                == (other.denom_pow, other.var_degree))

    def __hash__(self):
        return hash((frozenset(self.numerator.items()),
                     self.denom_pow, self.var_degree))

    def to_json(self) -> dict:
        return {
            "numerator": [[e, c] for e, c in sorted(self.numerator.items())],
            "denom_pow": self.denom_pow,
            "var_degree": self.var_degree,
        }

    def __str__(self):
        if not self.numerator:
            return "0"
        parts = []
        for e, c in sorted(self.numerator.items()):
            if e == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                var = "x" if e == 1 else f"x^{e}"
                term = f"{'-' if c < 0 else ''}{mag}{var}"
            parts.append(term)
        numer = " + ".join(parts).replace("+ -", "- ")
        if self.denom_pow == 0:
            return numer
        return f"({numer}) / (1 - x^{self.var_degree})^{self.denom_pow}"

    def __repr__(self):
        return f"HilbertSeries({self})"


def _cached(M: ModulePresentation, key, build):
    if key not in M._cache:
        M._cache[key] = build()
    return M._cache[key]


def minimal_resolution(M: ModulePresentation,
                       order: Optional[MonomialOrder] = None) -> FreeResolution:
    """Minimized resolution of length <= r, cached on the presentation."""
    if order is not None:
        return minimize(resolve(M, M.ring.r, order))
    return _cached(M, "minres", lambda: minimize(resolve(M, M.ring.r)))


def hilbert_series(M: ModulePresentation) -> HilbertSeries:
    """Alternating sum of generator-degree terms of a minimal resolution
    over (1 - x^d)^r."""
    def build():
        res = minimal_resolution(M)
        numer: dict = {}
        for i, mod in enumerate(res.modules):
            sign = -1 if i % 2 else 1
            for g in mod.degrees:
                numer[g] = numer.get(g, 0) + sign
        return HilbertSeries(numer, M.ring.r, M.ring.d)
    return _cached(M, "hilbert", build)


def euler_series(res: FreeResolution) -> HilbertSeries:
    """Alternating sum over all modules of the resolution; equals the
    Hilbert series of the target for every exact resolution."""
    ring = res.ring
    out = HilbertSeries.zero(ring)
    for i, mod in enumerate(res.modules):
        hs = HilbertSeries.of_free(ring, mod.degrees)
        out = out + (hs if i % 2 == 0 else -hs)
    return out


# ---------- fingerprints ----------

class ModuleFingerprint(NamedTuple):
    hilbert: HilbertSeries
    betti: BettiTable

    def to_json(self) -> dict:
        return {"hilbert": self.hilbert.to_json(), "betti": self.betti.to_json()}

    def is_zero(self) -> bool:
        return self.hilbert.is_zero() and not self.betti


def fingerprint(M: ModulePresentation) -> ModuleFingerprint:
    """(Hilbert series, minimal Betti table): the verification relation for
    all displayed module identities."""
    return _cached(M, "fingerprint",
                   lambda: ModuleFingerprint(hilbert_series(M),
                                             minimal_resolution(M).betti()))


def is_zero_module(M: ModulePresentation) -> bool:
    """True iff M = 0: the minimal presentation has no generators."""
    return _cached(M, "iszero",
                   lambda: minimize_presentation(M).F0.rank == 0)


# ---------- submodules and subquotients ----------

def submodule_presentation(ambient: FreeModule,
                           gens: Sequence[ModuleElement]) -> ModulePresentation:
    """Presentation of the submodule generated by homogeneous gens, with the
    generator embedding stored."""
    gens = [g for g in gens if not g.is_zero()]
    degrees = [g.degree() for g in gens]
    graph = GraphBasis(ambient, gens, degrees)
    syz = graph.syzygy_part()
    F0 = FreeModule(ambient.ring, degrees)
    rel = GradedMatrix.from_columns(F0, syz, [s.degree() for s in syz])
    embedding = GradedMatrix.from_columns(ambient, gens, degrees)
    return ModulePresentation(ambient.ring, F0, rel.source, rel,
                              embedding=embedding)


def subquotient_presentation(ambient: FreeModule,
                             upstairs: Sequence[ModuleElement],
                             downstairs: Sequence[ModuleElement]) -> ModulePresentation:
    """Minimal presentation of <upstairs>/<downstairs>. The downstairs
    elements must lie in the submodule generated by upstairs."""
    upstairs = [g for g in upstairs if not g.is_zero()]
    downstairs = [g for g in downstairs if not g.is_zero()]
    if not upstairs:
        if downstairs:
            raise VerificationError("downstairs elements outside the zero submodule")
        return zero_module(ambient.ring)
    degrees = [g.degree() for g in upstairs]
    graph = GraphBasis(ambient, upstairs, degrees)
    columns = list(graph.syzygy_part())
    for v in downstairs:
        expr = graph.express(v)
        if expr is None:
            raise VerificationError("subquotient: element escapes the submodule")
        columns.append(expr)
    F0 = FreeModule(ambient.ring, degrees)
    kept = [c for c in columns if not c.is_zero()]
    rel = GradedMatrix.from_columns(F0, kept, [c.degree() for c in kept])
    pres = ModulePresentation(ambient.ring, F0, rel.source, rel)
    return minimize_presentation(pres)


# ---------- dual and Ext ----------

def dual(M: ModulePresentation) -> ModulePresentation:
    """Hom(M, R) = ker(relations^T), presented on its kernel generators with
    the embedding into the dual of F0 stored. Generator degrees are negated
    relative to M: dual(R[l]) = R[-l]."""
    def build():
        At = M.relations.transpose()
        ker = kernel(At)
        return submodule_presentation(At.source, ker)
    return _cached(M, "dual", build)


def ext(M: ModulePresentation, j: int) -> ModulePresentation:
    """Ext^j(M, R) = ker(delta_{j+1}^T)/im(delta_j^T) from the dualized
    minimal resolution, presented on the kernel Groebner generators with
    syzygy and lifted-image relations, then minimized."""
    r = M.ring.r
    if j < 0 or j > r:
        raise InputError(f"ext index {j} out of range 0..{r}")
    def build():
        res = minimal_resolution(M)
        return ext_from_resolution(res, j)
    return _cached(M, ("ext", j), build)


def ext_from_resolution(res: FreeResolution, j: int) -> ModulePresentation:
    """Ext^j of the resolved module, computed from the given resolution."""
    ring = res.ring
    p = res.length
    if j > p:
        return zero_module(ring)
    Fdual = res.modules[j].dual()
    if j < p:
        up = kernel(res.maps[j].transpose())
    else:
        up = [Fdual.generator(i) for i in range(Fdual.rank)]
    if j >= 1:
        downs = res.maps[j - 1].transpose().columns()
    else:
        downs = []
    if not up:
        return zero_module(ring)
    return subquotient_presentation(Fdual, up, downs)


def _ext_support(M: ModulePresentation) -> List[int]:
    def build():
        return [j for j in range(M.ring.r + 1) if not is_zero_module(ext(M, j))]
    return _cached(M, "ext_support", build)


def depth_dim(M: ModulePresentation):
    """(depth, dim) read off Ext vanishing: depth = r - max nonzero index,
    dim = r - min nonzero index. Undefined for the zero module."""
    if is_zero_module(M):
        raise ZeroModuleError("depth and dimension are undefined for the zero module")
    support = _ext_support(M)
    if not support:
        raise VerificationError("nonzero module with no nonvanishing Ext")
    r = M.ring.r
    return r - max(support), r - min(support)


def is_cohen_macaulay(M: ModulePresentation) -> bool:
    """True iff exactly one Ext^j(M, R) is nonzero."""
    if is_zero_module(M):
        raise ZeroModuleError("Cohen-Macaulay is undefined for the zero module")
    return len(_ext_support(M)) == 1


# ---------- biduality and syzygy order ----------

class BidualityResult(NamedTuple):
    map: GradedMatrix          # F0 -> generators of M**
    kernel: ModulePresentation  # the torsion submodule of M
    is_injective: bool
    is_isomorphism: bool


def biduality(M: ModulePresentation) -> BidualityResult:
    """The natural map M -> Hom(Hom(M,R),R) through the stored embeddings.
    Its kernel is the torsion submodule; the map is an isomorphism iff M is
    reflexive."""
    def build():
        ring = M.ring
        D1 = dual(M)
        D2 = dual(D1)
        # evaluation on generators: transpose of the dual embedding
        ev = D1.embedding.transpose()  # F0 -> (D1.F0)*
        bidual_gens = D2.embedding.columns() if D2.F0.rank else []
        graph = GraphBasis(ev.target, bidual_gens, list(D2.F0.degrees))
        L_cols = []
        for jcol in range(ev.source.rank):
            expr = graph.express(ev.column_element(jcol))
            if expr is None:
                raise VerificationError("evaluation image escapes the bidual")
            L_cols.append(ModuleElement(D2.F0, expr.terms))
        L = GradedMatrix.from_columns(D2.F0, L_cols, list(M.F0.degrees))
        # kernel of the induced map: {v : L v in im(D2.relations)} / im(relations)
        stack_src = FreeModule(ring, M.F0.degrees + D2.F1.degrees)
        zero_p = [  # block matrix [L | -B]
            [L.entries[i][j] for j in range(M.F0.rank)]
            + [-D2.relations.entries[i][j] for j in range(D2.F1.rank)]
            for i in range(D2.F0.rank)
        ]
        stacked = GradedMatrix(stack_src, D2.F0, zero_p)
        upstairs = []
        for v in kernel(stacked):
            proj = ModuleElement(
                M.F0, {(pos, m): c for (pos, m), c in v.terms.items()
                       if pos < M.F0.rank})
            if not proj.is_zero():
                upstairs.append(proj)
        ker_pres = subquotient_presentation(M.F0, upstairs,
                                            M.relations.columns())
        # cokernel: M** modulo the image of L and the relations of M**
        cok_cols = list(L.columns()) + list(D2.relations.columns())
        kept = [c for c in cok_cols if not c.is_zero()]
        cok_rel = GradedMatrix.from_columns(D2.F0, kept,
                                            [c.degree() for c in kept])
        cok = minimize_presentation(
            ModulePresentation(ring, D2.F0, cok_rel.source, cok_rel))
        injective = is_zero_module(ker_pres)
        surjective = cok.F0.rank == 0
        iso = (injective and surjective
               and hilbert_series(M) == hilbert_series(D2))
        return BidualityResult(L, ker_pres, injective, iso)
    return _cached(M, "biduality", build)


def syzygy_order(M: ModulePresentation) -> int:
    """Largest j in 0..r such that M is a j-th syzygy: j >= 1 iff torsion
    free, j >= 2 iff reflexive, higher j via Ext^i(Hom(M,R),R) = 0 for
    1 <= i <= j-2; equals r iff M is free. Zero module: r by convention."""
    r = M.ring.r
    if is_zero_module(M):
        return r
    B = biduality(M)
    if not B.is_injective:
        s = 0
    elif not B.is_isomorphism:
        s = 1
    else:
        s = 2
        D = dual(M)
        for i in range(1, r - 1):
            if is_zero_module(ext(D, i)):
                s = i + 2
            else:
                break
        s = min(s, r)
    free = minimal_resolution(M).length == 0
    if (s == r) != free:
        raise VerificationError(
            "syzygy order and projective dimension disagree on freeness")
    return s
