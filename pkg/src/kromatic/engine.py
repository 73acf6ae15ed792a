"""The Kromatic symmetric function and its expansions.

Three routes are provided:

* the exact expansion in the K-theoretic augmented monomial basis
  (:class:`MBarVector`), whose coefficient at a partition with ``i_j``
  parts equal to ``j`` counts covers of the vertex set by distinct stable
  sets of those sizes;
* a degree-truncated monomial expansion computed straight from the
  definition as a sum over proper set colourings
  (:func:`kromatic_truncated`);
* the classical chromatic symmetric function (:func:`classical_chromatic`).

Representation of :class:`MBarVector`
-------------------------------------
By inclusion-exclusion over the vertex subsets ``U`` that a cover is
allowed to use, the coefficient at multiplicities ``(i_1, i_2, ...)`` is::

    sum over U of (-1)^(n - |U|) * prod_j C(s_j(U), i_j)

where ``s_j(U)`` is the number of stable ``j``-subsets of ``U``.  The
generating polynomial of the coefficients is therefore
``sum_s w(s) prod_j (1 + t_j)^(s_j)`` with ``w(s)`` the signed number of
subsets whose *profile* ``(s_1, s_2, ...)`` equals ``s``.  The products
``prod_j (1 + t_j)^(s_j)`` are linearly independent, so the profile
weights and the coefficient vector determine each other.  An
:class:`MBarVector` stores the profile weights; this is the whole
(finite) expansion, not a truncation, and two vectors are equal exactly
when the symmetric functions are.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial, perm, prod
from typing import Iterator, Mapping

import numpy as np

from .algebra import Partition, partitions_bounded
from .errors import CapabilityError, ParseError
from .graphs import CliqueSelectionCensus, Graph, complement, iter_bits, popcount, stable_set_masks

#: Largest vertex count for :func:`mbar_vector` (2^n subset profiles).
ENGINE_CAP = 16

#: Default ceiling on the number of terms materialised by :meth:`MBarVector.terms`.
TERM_LIMIT = 2_000_000


def _require_unweighted(g: Graph, what: str) -> None:
    if g.is_weighted:
        raise ValueError(f"{what} is defined for unweighted graphs only")


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


# subset profiles ---------------------------------------------------------

def stable_profiles(g: Graph) -> Counter:
    """Count vertex subsets by their stable-set profile.

    The profile of ``U`` is ``(s_1(U), s_2(U), ...)`` with trailing zeros
    removed, where ``s_j(U)`` is the number of stable ``j``-subsets of ``U``.
    """
    _require_unweighted(g, "stable_profiles")
    if g.n > ENGINE_CAP:
        raise CapabilityError(f"the Kromatic engine is capped at n={ENGINE_CAP}, got n={g.n}")
    n = g.n
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    pop = np.zeros(size, dtype=np.int64)
    conflict = np.zeros(size, dtype=bool)
    for v in range(n):
        has_v = (masks >> v) & 1
        pop += has_v
        conflict |= (has_v == 1) & ((masks & g.adj[v]) != 0)
    alpha = int(pop[~conflict].max())
    table = np.zeros((alpha, size), dtype=np.int64)
    for j in range(1, alpha + 1):
        table[j - 1] = (~conflict) & (pop == j)
    # subset-sum transform: table[j][U] becomes the number of stable j-sets inside U
    for b in range(n):
        view = table.reshape(alpha, -1, 2, 1 << b)
        view[:, :, 1, :] += view[:, :, 0, :]
    rows, counts = np.unique(table.T, axis=0, return_counts=True)
    out: Counter = Counter()
    for row, c in zip(rows.tolist(), counts.tolist()):
        while row and row[-1] == 0:
            row.pop()
        out[tuple(row)] += c
    return out


# the augmented-monomial expansion ---------------------------------------

class MBarVector:
    """Exact expansion of the Kromatic symmetric function in the
    K-theoretic augmented monomial basis.

    Index with a partition (or any iterable of parts) to get its
    coefficient.  See the module docstring for the storage format.
    """

    __slots__ = ("_weights", "_bounds", "_cache", "cover_memo")

    def __init__(self, profile_weights: Mapping[tuple[int, ...], int]):
        weights = {}
        for s, w in profile_weights.items():
            s = tuple(int(x) for x in s)
            while s and s[-1] == 0:
                s = s[:-1]
            if w:
                weights[s] = weights.get(s, 0) + int(w)
        self._weights = {s: w for s, w in weights.items() if w}
        length = max((len(s) for s in self._weights), default=0)
        self._bounds = tuple(
            max((s[j] for s in self._weights if len(s) > j), default=0) for j in range(length)
        )
        self._cache: dict = {}
        #: scratch space for cover-count recursions over this vector
        self.cover_memo: dict = {}

    # construction

    @classmethod
    def from_graph(cls, g: Graph) -> "MBarVector":
        n = g.n
        return cls({s: (-1) ** (n - (s[0] if s else 0)) * c for s, c in stable_profiles(g).items()})

    @classmethod
    def from_coefficients(cls, coeffs: Mapping) -> "MBarVector":
        """Invert the expansion: ``w(s) = sum_i c(i) prod_j C(i_j, s_j) (-1)^(i_j - s_j)``."""
        weights: Counter = Counter()
        for lam, c in coeffs.items():
            if not c:
                continue
            vec = _as_partition(lam).multiplicity_vector()
            for s in product(*(range(i + 1) for i in vec)):
                sign = (-1) ** (sum(vec) - sum(s))
                weights[s] += sign * c * prod(comb(i, k) for i, k in zip(vec, s))
        return cls(weights)

    @classmethod
    def from_text(cls, text: str) -> "MBarVector":
        """Parse the ``parts : coefficient`` serialisation."""
        coeffs = {}
        offset = 0
        for line in text.splitlines(keepends=True):
            s = line.strip()
            if s:
                if ":" not in s:
                    raise ParseError(f"expected 'parts : coefficient', got {s!r}", offset)
                left, right = s.split(":", 1)
                try:
                    coeffs[Partition.parse(left)] = int(right)
                except ValueError:
                    raise ParseError(f"bad term {s!r}", offset) from None
            offset += len(line.encode())
        return cls.from_coefficients(coeffs)

    # queries

    @property
    def profile_weights(self) -> dict[tuple[int, ...], int]:
        return dict(self._weights)

    @property
    def multiplicity_bounds(self) -> tuple[int, ...]:
        """``B_j`` such that every coefficient with more than ``B_j`` parts equal to ``j`` vanishes."""
        return self._bounds

    def coefficient(self, lam) -> int:
        vec = _as_partition(lam).multiplicity_vector()
        if len(vec) > len(self._bounds) or any(i > b for i, b in zip(vec, self._bounds)):
            return 0
        hit = self._cache.get(vec)
        if hit is not None:
            return hit
        total = 0
        for s, w in self._weights.items():
            if len(s) < len(vec) and any(vec[len(s):]):
                continue
            term = w
            for i, sj in zip(vec, s):
                if i:
                    term *= comb(sj, i)
                    if not term:
                        break
            total += term
        self._cache[vec] = total
        return total

    __getitem__ = coefficient

    def terms(self, max_weight: int | None = None, limit: int = TERM_LIMIT) -> list[tuple[Partition, int]]:
        """Nonzero ``(partition, coefficient)`` pairs sorted by :meth:`Partition.sort_key`.

        Without ``max_weight`` the whole support is listed; a
        :class:`CapabilityError` is raised if more than ``limit``
        candidate partitions would have to be examined.
        """
        bounds = self._bounds
        if max_weight is None:
            box = prod(b + 1 for b in bounds)
            if box > limit:
                raise CapabilityError(
                    f"full support needs {box} candidate partitions (limit {limit}); pass max_weight"
                )
            cands = (
                Partition.from_multiplicities({j + 1: i for j, i in enumerate(vec)})
                for vec in product(*(range(b + 1) for b in bounds))
            )
        else:
            top = max_weight
            cands = (
                p
                for p in partitions_bounded(max(len(bounds), 1), top, top)
                if all(i <= b for i, b in zip(p.multiplicity_vector(), bounds))
            )
        out = []
        examined = 0
        for p in cands:
            examined += 1
            if examined > limit:
                raise CapabilityError(f"more than {limit} candidate partitions; lower max_weight")
            c = self.coefficient(p)
            if c:
                out.append((p, c))
        out.sort(key=lambda pc: pc[0].sort_key())
        return out

    def to_dict(self, max_weight: int | None = None) -> dict[Partition, int]:
        return dict(self.terms(max_weight))

    def to_text(self, max_weight: int | None = None) -> str:
        """One ``parts : coefficient`` line per nonzero term, sorted by weight
        then reverse lexicographically."""
        return "".join(f"{p.to_text()} : {c}\n" for p, c in self.terms(max_weight))

    def profile_text(self) -> str:
        """Compact canonical serialisation of the profile weights."""
        lines = [f"{','.join(map(str, s))} : {w}" for s, w in sorted(self._weights.items())]
        return "".join(l + "\n" for l in lines)

    def __eq__(self, other):
        if not isinstance(other, MBarVector):
            return NotImplemented
        return self._weights == other._weights

    def __hash__(self):
        return hash(frozenset(self._weights.items()))

    def __repr__(self):
        return f"MBarVector({len(self._weights)} profiles, bounds={self._bounds})"


def mbar_vector(g: Graph) -> MBarVector:
    """The exact augmented-monomial expansion of the Kromatic symmetric function of ``g``."""
    _require_unweighted(g, "mbar_vector")
    return MBarVector.from_graph(g)


def mbar_coefficient(g: Graph, lam) -> int:
    """Number of covers of ``V(g)`` by distinct stable sets with sizes the parts of ``lam``.

    Evaluated by inclusion-exclusion over vertex subsets.
    """
    _require_unweighted(g, "mbar_coefficient")
    vec = _as_partition(lam).multiplicity_vector()
    n = g.n
    counts = {j: Counter() for j in range(1, len(vec) + 1)}
    for j in counts:
        for m in stable_set_masks(g, j):
            counts[j][m] += 1
    total = 0
    for U in range(1 << n):
        term = (-1) ** (n - popcount(U))
        for j, i in enumerate(vec, start=1):
            if i:
                s = sum(c for m, c in counts[j].items() if m & ~U == 0)
                term *= comb(s, i)
                if not term:
                    break
        total += term
    return total


def count_stable_covers(g: Graph, lam) -> int:
    """Direct count of families of distinct stable sets, sizes the parts of
    ``lam``, whose union is ``V(g)`` (knapsack over the stable sets)."""
    _require_unweighted(g, "count_stable_covers")
    mult = _as_partition(lam).multiplicities()
    if not mult:
        return 0
    census = CliqueSelectionCensus(complement(g), mult, allow_singletons=True)
    return census.covering(mult)


def mbar_vector_direct(g: Graph, limit: int = 200_000) -> MBarVector:
    """Full support by direct family counting; small graphs only."""
    _require_unweighted(g, "mbar_vector_direct")
    gc = complement(g)
    caps = {}
    for j in range(1, g.n + 1):
        k = len(stable_set_masks(g, j))
        if not k:
            break
        caps[j] = k
    if (1 << g.n) * prod(c + 1 for c in caps.values()) > limit:
        raise CapabilityError("direct expansion too large for this graph")
    census = CliqueSelectionCensus(gc, caps, allow_singletons=True)
    coeffs = {}
    for vec in product(*(range(c + 1) for c in caps.values())):
        mult = {j: i for j, i in zip(caps, vec) if i}
        if mult:
            c = census.covering(mult)
            if c:
                coeffs[Partition.from_multiplicities(mult)] = c
    return MBarVector.from_coefficients(coeffs)


def fingerprint(g: Graph) -> bytes:
    """Canonical byte string of the Kromatic symmetric function of ``g``.

    Equal exactly when the Kromatic symmetric functions are equal, in
    particular for isomorphic graphs.
    """
    return b"kromatic-profile-v1\n" + mbar_vector(g).profile_text().encode()


# monomial expansions ------------------------------------------------------

class MonomialExpansion:
    """Coefficients of monomial symmetric functions up to a degree cap."""

    __slots__ = ("degree_cap", "coeffs")

    def __init__(self, degree_cap: int, coeffs: Mapping | None = None):
        self.degree_cap = degree_cap
        self.coeffs: dict[Partition, int] = {}
        for lam, c in (coeffs or {}).items():
            lam = _as_partition(lam)
            if lam.weight > degree_cap:
                raise ValueError(f"{lam} exceeds degree cap {degree_cap}")
            if c:
                self.coeffs[lam] = self.coeffs.get(lam, 0) + c

    def __getitem__(self, lam) -> int:
        return self.coeffs.get(_as_partition(lam), 0)

    def __add__(self, other: "MonomialExpansion") -> "MonomialExpansion":
        cap = min(self.degree_cap, other.degree_cap)
        out = Counter({k: v for k, v in self.coeffs.items() if k.weight <= cap})
        for k, v in other.coeffs.items():
            if k.weight <= cap:
                out[k] += v
        return MonomialExpansion(cap, out)

    def scaled(self, factor: int) -> "MonomialExpansion":
        return MonomialExpansion(self.degree_cap, {k: factor * v for k, v in self.coeffs.items()})

    def homogeneous_part(self, degree: int) -> "MonomialExpansion":
        return MonomialExpansion(self.degree_cap, {k: v for k, v in self.coeffs.items() if k.weight == degree})

    def items(self) -> list[tuple[Partition, int]]:
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())

    def to_text(self) -> str:
        return "".join(f"{p.to_text()} : {c}\n" for p, c in self.items())

    def __eq__(self, other):
        if not isinstance(other, MonomialExpansion):
            return NotImplemented
        return self.degree_cap == other.degree_cap and self.coeffs == other.coeffs

    def __repr__(self):
        return f"MonomialExpansion(degree_cap={self.degree_cap}, {dict(self.items())})"


def _stable_sets_by_weight(g: Graph) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for size in range(1, g.n + 1):
        masks = stable_set_masks(g, size)
        if not masks:
            break
        for m in masks:
            out.setdefault(sum(g.weight(v) for v in iter_bits(m)), []).append(m)
    return out


def monomial_coefficient(g: Graph, lam, _by_weight=None) -> int:
    """Coefficient of ``x_1^lam_1 ... x_l^lam_l`` in the Kromatic function of ``(g, weights)``.

    A proper set colouring with colours ``1..l`` is the same thing as a
    tuple of stable sets ``(S_1, ..., S_l)`` covering ``V`` (``S_c`` is the
    set of vertices receiving colour ``c``), and colour ``c`` contributes
    ``x_c`` to the power ``weight(S_c)``.  Tuples are counted by a dynamic
    programme over the covered vertex set.
    """
    lam = _as_partition(lam)
    by_weight = _by_weight if _by_weight is not None else _stable_sets_by_weight(g)
    dp = {0: 1}
    for part in lam:
        pool = by_weight.get(part, ())
        nxt: Counter = Counter()
        for covered, ways in dp.items():
            for s in pool:
                nxt[covered | s] += ways
        dp = nxt
        if not dp:
            return 0
    return dp.get(g.vertex_mask, 0)


def kromatic_truncated(g: Graph, degree_cap: int) -> MonomialExpansion:
    """All monomial coefficients of total degree at most ``degree_cap``.

    Honours vertex weights.
    """
    by_weight = _stable_sets_by_weight(g)
    coeffs = {}
    for lam in partitions_bounded(degree_cap, degree_cap, degree_cap):
        c = monomial_coefficient(g, lam, by_weight)
        if c:
            coeffs[lam] = c
    return MonomialExpansion(degree_cap, coeffs)


@lru_cache(maxsize=4096)
def _mbar_monomial_coeffs(lam: Partition, degree_cap: int) -> tuple:
    if not lam:
        return ()
    g = Graph.complete(len(lam)).with_weights(lam)
    return tuple(kromatic_truncated(g, degree_cap).coeffs.items())


def mbar_to_monomial(lam, degree_cap: int) -> MonomialExpansion:
    """Monomial expansion of the augmented monomial function of ``lam``:
    the Kromatic function of the complete graph weighted by the parts."""
    return MonomialExpansion(degree_cap, dict(_mbar_monomial_coeffs(_as_partition(lam), degree_cap)))


def expand_mbar(v: MBarVector, degree_cap: int) -> MonomialExpansion:
    """``sum_lam v[lam] * mbar_to_monomial(lam)`` truncated at ``degree_cap``.

    Only partitions of weight at most the cap contribute, since the
    augmented monomial function of ``lam`` starts in degree ``|lam|``.
    """
    total = MonomialExpansion(degree_cap)
    for lam, c in v.terms(max_weight=degree_cap):
        total = total + mbar_to_monomial(lam, degree_cap).scaled(c)
    return total


def stable_partition_types(g: Graph) -> Counter:
    """Count partitions of ``V(g)`` into stable blocks by their block-size type."""
    stable_cache: dict[int, bool] = {}

    def stable(mask):
        r = stable_cache.get(mask)
        if r is None:
            r = stable_cache[mask] = g.is_stable(mask)
        return r

    out: Counter = Counter()

    def rec(remaining, sizes):
        if not remaining:
            out[Partition(sizes)] += 1
            return
        low = remaining & -remaining
        rest = remaining ^ low
        sub = rest
        while True:
            block = sub | low
            if stable(block):
                rec(remaining & ~block, sizes + [popcount(block)])
            if sub == 0:
                break
            sub = (sub - 1) & rest

    rec(g.vertex_mask, [])
    return out


def classical_chromatic(g: Graph, degree_cap: int | None = None) -> MonomialExpansion:
    """Monomial expansion of the chromatic symmetric function.

    The coefficient of ``m_lam`` is the number of stable partitions of
    type ``lam`` times the product of the factorials of the part
    multiplicities; it is homogeneous of degree ``n``.
    """
    _require_unweighted(g, "classical_chromatic")
    cap = g.n if degree_cap is None else degree_cap
    coeffs = {}
    if cap >= g.n:
        for lam, count in stable_partition_types(g).items():
            coeffs[lam] = count * prod(factorial(r) for r in lam.multiplicities().values())
    return MonomialExpansion(cap, coeffs)


def chromatic_fingerprint(g: Graph) -> bytes:
    return b"chromatic-m-v1\n" + classical_chromatic(g).to_text().encode()


def kromatic_by_set_colourings(g: Graph, degree_cap: int, colours: int | None = None) -> MonomialExpansion:
    """Brute force over every proper set colouring with colours ``1..N``.

    Each colouring contributes one monomial; the coefficient of ``m_lam``
    is the number of colourings whose sorted exponent vector is ``lam``
    divided by the number of distinct monomials of that type in ``N``
    variables.  ``N`` defaults to ``degree_cap``, enough for every
    monomial of degree at most the cap.  Exponential; tiny graphs only.
    """
    N = degree_cap if colours is None else colours
    subsets = list(range(1, 1 << N))
    hits: Counter = Counter()

    def rec(v, chosen, degree):
        if v == g.n:
            exps = [0] * N
            for u, s in enumerate(chosen):
                for c in iter_bits(s):
                    exps[c] += g.weight(u)
            hits[Partition(e for e in exps if e)] += 1
            return
        forbidden = 0
        for u in iter_bits(g.adj[v]):
            if u < v:
                forbidden |= chosen[u]
        for s in subsets:
            if s & forbidden:
                continue
            d = degree + popcount(s) * g.weight(v)
            if d > degree_cap:
                continue
            rec(v + 1, chosen + [s], d)

    rec(0, [], 0)
    coeffs = {}
    for lam, count in hits.items():
        l = len(lam)
        monomials = Fraction(perm(N, l), prod(factorial(r) for r in lam.multiplicities().values()))
        value = count / monomials
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral symmetrisation for {lam}")
        coeffs[lam] = int(value)
    return MonomialExpansion(degree_cap, coeffs)


def iter_support(v: MBarVector, max_weight: int) -> Iterator[tuple[Partition, int]]:
    yield from v.terms(max_weight=max_weight)
