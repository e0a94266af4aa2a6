"""Matroids as explicit canonical basis families.

A matroid is stored as a sorted ground tuple plus the complete family of
bases, each a frozenset, kept in lexicographic order.  Ground sets are
capped (12 elements by default), so the family always fits in memory.
That choice makes duality literal set complementation, minors a direct
recomputation of the family, and every search in this module (minor
containment, isomorphism, classification) exhaustive with deterministic
witnesses.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Optional

GROUND_BOUND = 12

# ---------------------------------------------------------------------------
# errors


class MatroidError(ValueError):
    """Base class for matroid construction and query failures."""


class EmptyBases(MatroidError):
    """The basis family is empty."""


class ContainmentViolation(MatroidError):
    """One listed basis is a proper subset of another."""

    def __init__(self, small, large):
        self.small = frozenset(small)
        self.large = frozenset(large)
        super().__init__(
            f"basis {sorted(self.small)} is properly contained in {sorted(self.large)}"
        )


class ExchangeFailure(MatroidError):
    """Basis exchange fails for an ordered pair of bases.

    Carries the pair (first, second) and the element of first \\ second
    admitting no replacement from second \\ first.
    """

    def __init__(self, first, second, element):
        self.first = frozenset(first)
        self.second = frozenset(second)
        self.element = element
        super().__init__(
            f"no exchange for element {element} of {sorted(self.first)} "
            f"against {sorted(self.second)}"
        )


class ElementNotInGround(MatroidError):
    """A referenced element is not a ground-set member."""


class OverlappingSets(MatroidError):
    """Deletion and contraction sets overlap."""


class DependentContraction(MatroidError):
    """The non-loop part of a contraction set is dependent."""


class GroundTooLarge(MatroidError):
    """Ground set exceeds the configured bound."""


class GroundNotDisjoint(MatroidError):
    """Direct-sum operands share ground elements."""


class UnknownName(MatroidError):
    """Unrecognized named-matroid identifier."""


class BadParams(MatroidError):
    """Named-matroid parameters out of range."""


class TooManyBases(MatroidError):
    """A generated basis family would exceed the ground bound."""


# ---------------------------------------------------------------------------
# the matroid type


def _basis_key(b: frozenset) -> tuple:
    return (len(b), tuple(sorted(b)))


@dataclass(frozen=True, repr=False)
class Matroid:
    """Ground set plus the full canonical basis family.

    Instances are immutable; equality is canonical-form equality
    (identical ground tuple and identical sorted basis family).
    """

    ground: tuple[int, ...]
    bases: tuple[frozenset[int], ...]

    def __repr__(self):
        return (
            f"Matroid(|E|={len(self.ground)}, rank={self.rank}, "
            f"bases={len(self.bases)})"
        )

    # -- derived structure, cached ------------------------------------

    @cached_property
    def rank(self) -> int:
        return len(self.bases[0])

    @cached_property
    def _index(self) -> dict[int, int]:
        return {e: i for i, e in enumerate(self.ground)}

    @cached_property
    def _masks(self) -> tuple[int, ...]:
        return tuple(sorted(self._mask(b) for b in self.bases))

    @cached_property
    def _mask_set(self) -> frozenset[int]:
        return frozenset(self._masks)

    @cached_property
    def full_mask(self) -> int:
        return (1 << len(self.ground)) - 1

    def _mask(self, elems: Iterable[int]) -> int:
        m = 0
        for e in elems:
            try:
                m |= 1 << self._index[e]
            except KeyError:
                raise ElementNotInGround(f"element {e} not in ground set") from None
        return m

    def _members(self, mask: int) -> frozenset[int]:
        g = self.ground
        return frozenset(g[i] for i in range(len(g)) if mask >> i & 1)

    # -- queries -------------------------------------------------------

    def rank_of(self, subset: Iterable[int]) -> int:
        """Rank of a subset: the largest intersection with any basis."""
        s = self._mask(subset)
        return max((b & s).bit_count() for b in self._masks)

    def is_independent(self, subset: Iterable[int]) -> bool:
        s = self._mask(subset)
        return any(s & ~b == 0 for b in self._masks)

    @cached_property
    def loops(self) -> frozenset[int]:
        union = 0
        for b in self._masks:
            union |= b
        return self._members(self.full_mask & ~union)

    @cached_property
    def coloops(self) -> frozenset[int]:
        inter = self.full_mask
        for b in self._masks:
            inter &= b
        return self._members(inter)

    # -- duality and minors ---------------------------------------------

    def dual(self) -> "Matroid":
        """Matroid whose bases are the ground-set complements of ours."""
        full = self.full_mask
        return _from_masks(self.ground, [full ^ b for b in self._masks])

    def minor(self, deletions: Iterable[int] = (), contractions: Iterable[int] = ()) -> "Matroid":
        """Delete and contract; any interleaving gives the same result.

        Contracting a loop is the same as deleting it.  The non-loop part
        of the contraction set must be independent.
        """
        dmask = self._mask(deletions)
        cmask = self._mask(contractions)
        if dmask & cmask:
            raise OverlappingSets(
                f"deletions and contractions share {sorted(self._members(dmask & cmask))}"
            )
        union = 0
        for b in self._masks:
            union |= b
        loop_part = cmask & ~union
        dmask |= loop_part
        cmask &= ~loop_part
        if cmask and not any(cmask & ~b == 0 for b in self._masks):
            raise DependentContraction(
                f"contraction set {sorted(self._members(cmask))} is dependent"
            )
        keep = self.full_mask & ~(dmask | cmask)
        new_ground = tuple(e for e in self.ground if keep >> self._index[e] & 1)

        # Bases of the minor are the maximum-size sets S inside the kept
        # elements with S + contractions independent, i.e. S inside B & keep
        # for some basis B containing the contraction set.
        best = -1
        traces = set()
        for b in self._masks:
            if cmask & ~b:
                continue
            t = b & keep
            c = t.bit_count()
            if c > best:
                best = c
            traces.add(t)
        new_index = {}
        j = 0
        for i, e in enumerate(self.ground):
            if keep >> i & 1:
                new_index[i] = j
                j += 1
        out = set()
        for t in traces:
            bits = [i for i in range(len(self.ground)) if t >> i & 1]
            for combo in itertools.combinations(bits, best):
                out.add(sum(1 << new_index[i] for i in combo))
        return _from_masks(new_ground, out)

    def delete(self, *elements: int) -> "Matroid":
        return self.minor(deletions=elements)

    def contract(self, *elements: int) -> "Matroid":
        return self.minor(contractions=elements)

    # -- serialization ---------------------------------------------------

    def to_text(self) -> str:
        lines = ["ground: " + " ".join(str(e) for e in self.ground)]
        for b in self.bases:
            lines.append("basis: " + " ".join(str(e) for e in sorted(b)))
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "ground": list(self.ground),
            "bases": [sorted(b) for b in self.bases],
        }


def _canonical_bases(bases: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    fam = {frozenset(b) for b in bases}
    return tuple(sorted(fam, key=_basis_key))


def _from_masks(ground: tuple[int, ...], masks: Iterable[int]) -> Matroid:
    n = len(ground)
    fam = {
        frozenset(ground[i] for i in range(n) if m >> i & 1)
        for m in masks
    }
    return Matroid(ground, tuple(sorted(fam, key=_basis_key)))


# ---------------------------------------------------------------------------
# construction with full axiom validation


def make_matroid(
    ground: Iterable[int],
    bases: Iterable[Iterable[int]],
    bound: int = GROUND_BOUND,
) -> Matroid:
    """Validate a basis family and return the canonical matroid.

    Checks, in order: the family is nonempty; no basis properly contains
    another; exchange holds for every ordered pair of distinct bases.
    The first violation is reported with a witness.
    """
    g = tuple(sorted(ground))
    if len(set(g)) != len(g):
        raise MatroidError("ground labels must be distinct")
    if any(not isinstance(e, int) for e in g):
        raise MatroidError("ground labels must be integers")
    if len(g) > bound:
        raise GroundTooLarge(f"{len(g)} elements exceed the bound {bound}")

    fam = _canonical_bases(bases)
    if not fam:
        raise EmptyBases("a matroid needs at least one basis")
    m = Matroid(g, fam)
    # triggers ElementNotInGround on stray labels
    masks = m._masks
    mask_set = m._mask_set

    for a, b in itertools.combinations(masks, 2):
        if a != b:
            if a & ~b == 0:
                raise ContainmentViolation(m._members(a), m._members(b))
            if b & ~a == 0:
                raise ContainmentViolation(m._members(b), m._members(a))

    for x in masks:
        for y in masks:
            if x == y:
                continue
            gain = y & ~x
            lose = x & ~y
            bits_lose = [i for i in range(len(g)) if lose >> i & 1]
            bits_gain = [1 << i for i in range(len(g)) if gain >> i & 1]
            for i in bits_lose:
                base = x ^ (1 << i)
                if not any(base | gb in mask_set for gb in bits_gain):
                    raise ExchangeFailure(m._members(x), m._members(y), g[i])
    return m


def relabel(m: Matroid, mapping: dict[int, int]) -> Matroid:
    """Rename ground elements through an injective mapping."""
    if sorted(mapping) != list(m.ground):
        raise MatroidError("mapping must cover the ground set exactly")
    if len(set(mapping.values())) != len(mapping):
        raise MatroidError("mapping must be injective")
    ground = tuple(sorted(mapping.values()))
    bases = [{mapping[e] for e in b} for b in m.bases]
    return Matroid(ground, _canonical_bases(bases))


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """Direct sum on disjoint ground sets; bases are pairwise unions."""
    if set(m1.ground) & set(m2.ground):
        raise GroundNotDisjoint(
            f"shared elements {sorted(set(m1.ground) & set(m2.ground))}"
        )
    ground = tuple(sorted(m1.ground + m2.ground))
    bases = [b1 | b2 for b1 in m1.bases for b2 in m2.bases]
    return Matroid(ground, _canonical_bases(bases))


# ---------------------------------------------------------------------------
# isomorphism


def _cooc_matrix(m: Matroid) -> list[list[int]]:
    n = len(m.ground)
    cooc = [[0] * n for _ in range(n)]
    for b in m._masks:
        bits = [i for i in range(n) if b >> i & 1]
        for i in bits:
            cooc[i][i] += 1
            for j in bits:
                if j > i:
                    cooc[i][j] += 1
                    cooc[j][i] += 1
    return cooc


def _refine_colors(c1: list, c2: list, cooc1, cooc2) -> tuple[list[int], list[int]]:
    """Joint color refinement of the two element sets by co-occurrence."""
    n1, n2 = len(c1), len(c2)
    while True:
        sig1 = [
            (c1[i], tuple(sorted((c1[j], cooc1[i][j]) for j in range(n1) if j != i)))
            for i in range(n1)
        ]
        sig2 = [
            (c2[i], tuple(sorted((c2[j], cooc2[i][j]) for j in range(n2) if j != i)))
            for i in range(n2)
        ]
        palette = {s: k for k, s in enumerate(sorted(set(sig1) | set(sig2)))}
        n1_new = [palette[s] for s in sig1]
        n2_new = [palette[s] for s in sig2]
        if n1_new == c1 and n2_new == c2:
            return c1, c2
        c1, c2 = n1_new, n2_new


def is_isomorphic(m1: Matroid, m2: Matroid) -> tuple[bool, Optional[dict[int, int]]]:
    """Search for a ground bijection carrying bases onto bases.

    Prunes by (size, rank, basis count), then by iterated co-occurrence
    colors; the backtracking order is deterministic, so the witness is
    the first bijection in canonical enumeration order.
    """
    n = len(m1.ground)
    if (n, m1.rank, len(m1.bases)) != (len(m2.ground), m2.rank, len(m2.bases)):
        return False, None
    if n == 0:
        return True, {}
    cooc1, cooc2 = _cooc_matrix(m1), _cooc_matrix(m2)
    c1 = [cooc1[i][i] for i in range(n)]
    c2 = [cooc2[i][i] for i in range(n)]
    c1, c2 = _refine_colors(c1, c2, cooc1, cooc2)
    if sorted(c1) != sorted(c2):
        return False, None

    order = sorted(range(n), key=lambda i: (c1[i], i))
    target_masks = m2._mask_set
    assign: list[int] = []
    used = [False] * n

    def ok_partial(i: int, j: int) -> bool:
        if c1[i] != c2[j]:
            return False
        for k, jk in enumerate(assign):
            ik = order[k]
            if cooc1[i][ik] != cooc2[j][jk]:
                return False
        return True

    def extend(depth: int) -> bool:
        if depth == n:
            perm = {}
            for k, jk in enumerate(assign):
                perm[order[k]] = jk
            for b in m1._masks:
                img = 0
                for i in range(n):
                    if b >> i & 1:
                        img |= 1 << perm[i]
                if img not in target_masks:
                    return False
            return True
        i = order[depth]
        for j in range(n):
            if not used[j] and ok_partial(i, j):
                assign.append(j)
                used[j] = True
                if extend(depth + 1):
                    return True
                used[j] = False
                assign.pop()
        return False

    if extend(0):
        perm = {}
        for k, jk in enumerate(assign):
            perm[order[k]] = jk
        mapping = {m1.ground[i]: m2.ground[perm[i]] for i in range(n)}
        return True, mapping
    return False, None


# ---------------------------------------------------------------------------
# minor containment


def _labeled_key(m: Matroid) -> tuple:
    idx = m._index
    return tuple(sorted(tuple(sorted(idx[e] for e in b)) for b in m.bases))


def has_minor(
    m: Matroid, target: Matroid
) -> tuple[bool, Optional[tuple[tuple[int, ...], tuple[int, ...]]]]:
    """Exhaustively search delete/contract pairs for a copy of ``target``.

    Every minor arises from contracting an independent set of size
    rank(m) - rank(target) and deleting the remaining surplus, so the
    search runs over exactly those pairs, memoizing labeled minors.
    Returns the first witness (deletions, contractions) in enumeration
    order.
    """
    nt = len(target.ground)
    if nt > len(m.ground):
        return False, None
    s = target.rank
    csize = m.rank - s
    dsize = len(m.ground) - nt - csize
    if csize < 0 or dsize < 0:
        return False, None
    tkey = _labeled_key(target)
    tprofile = (len(target.bases), s)
    seen: dict[tuple, bool] = {}
    for contr in itertools.combinations(m.ground, csize):
        if not m.is_independent(contr):
            continue
        rest = [e for e in m.ground if e not in contr]
        for dele in itertools.combinations(rest, dsize):
            mm = m.minor(deletions=dele, contractions=contr)
            if (len(mm.bases), mm.rank) != tprofile:
                continue
            key = _labeled_key(mm)
            if key == tkey:
                return True, (dele, contr)
            hit = seen.get(key)
            if hit is None:
                hit = is_isomorphic(mm, target)[0]
                seen[key] = hit
            if hit:
                return True, (dele, contr)
    return False, None


# ---------------------------------------------------------------------------
# named matroids

FANO_LINES = (
    (1, 2, 4),
    (2, 3, 5),
    (3, 4, 6),
    (4, 5, 7),
    (5, 6, 1),
    (6, 7, 2),
    (7, 1, 3),
)


@lru_cache(maxsize=None)
def named_matroid(name: str, params: tuple[int, ...] = ()) -> Matroid:
    """Canonical instances addressable by identifier.

    Supported: ``uniform`` (rank, size), ``fano``, ``fano_dual``,
    ``mk4``, ``mk5``, ``mk33`` (cycle matroids of K4, K5, K3,3).
    """
    name = name.lower()
    if name == "uniform":
        if len(params) != 2:
            raise BadParams("uniform needs (rank, size)")
        r, n = params
        if not (0 <= r <= n <= GROUND_BOUND):
            raise BadParams(f"need 0 <= rank <= size <= {GROUND_BOUND}")
        ground = tuple(range(1, n + 1))
        return make_matroid(ground, itertools.combinations(ground, r))
    if params:
        raise BadParams(f"{name} takes no parameters")
    if name == "fano":
        ground = tuple(range(1, 8))
        lines = {frozenset(t) for t in FANO_LINES}
        bases = [
            t for t in itertools.combinations(ground, 3) if frozenset(t) not in lines
        ]
        return make_matroid(ground, bases)
    if name == "fano_dual":
        return named_matroid("fano").dual()
    if name in ("mk4", "mk5", "mk33"):
        from . import graphs

        g = graphs.named_graph({"mk4": "k4", "mk5": "k5", "mk33": "k33"}[name])
        return graphs.cycle_matroid(g)
    raise UnknownName(f"unknown matroid name {name!r}")


def parse_named(ident: str) -> Matroid:
    """Parse identifiers like ``fano`` or ``uniform:2,4``."""
    if ":" in ident:
        name, _, rest = ident.partition(":")
        try:
            params = tuple(int(p) for p in rest.split(","))
        except ValueError:
            raise BadParams(f"bad parameters in {ident!r}") from None
        return named_matroid(name, params)
    return named_matroid(ident)


# ---------------------------------------------------------------------------
# duality axioms


@dataclass(frozen=True)
class DualityAxiomReport:
    """Outcome of checking the duality axioms on one matroid.

    ``delete_contract_ok`` maps each element to flags for the two
    exchange rules dual(M\\e) = dual(M)/e and dual(M/e) = dual(M)\\e.
    """

    involution_ok: bool
    ground_preserved_ok: bool
    delete_contract_ok: dict[int, tuple[bool, bool]]
    counterexample: Optional[dict]

    @property
    def all_ok(self) -> bool:
        return (
            self.involution_ok
            and self.ground_preserved_ok
            and all(a and b for a, b in self.delete_contract_ok.values())
        )

    def to_json_dict(self) -> dict:
        return {
            "involution_ok": self.involution_ok,
            "ground_preserved_ok": self.ground_preserved_ok,
            "delete_contract_ok": {
                str(e): list(v) for e, v in self.delete_contract_ok.items()
            },
            "counterexample": self.counterexample,
            "all_ok": self.all_ok,
        }


def check_duality_axioms(m: Matroid) -> DualityAxiomReport:
    """Verify that complementation duality is a ground-preserving
    involution exchanging deletion and contraction at every element.

    The first per-element failure, if any, is returned with both basis
    families so the mismatch is inspectable.
    """
    dm = m.dual()
    involution = dm.dual() == m
    ground_ok = dm.ground == m.ground
    per_element: dict[int, tuple[bool, bool]] = {}
    counterexample = None
    for e in m.ground:
        sides = (
            ("dual(M\\e) = dual(M)/e", m.delete(e).dual(), dm.contract(e)),
            ("dual(M/e) = dual(M)\\e", m.contract(e).dual(), dm.delete(e)),
        )
        flags = tuple(lhs == rhs for _, lhs, rhs in sides)
        per_element[e] = flags
        if counterexample is None and not all(flags):
            rule, lhs, rhs = sides[0 if not flags[0] else 1]
            counterexample = {
                "element": e,
                "rule": rule,
                "left_bases": [sorted(b) for b in lhs.bases],
                "right_bases": [sorted(b) for b in rhs.bases],
            }
    return DualityAxiomReport(involution, ground_ok, per_element, counterexample)


# ---------------------------------------------------------------------------
# transversal presentations


def transversal_presentation(
    m: Matroid,
) -> tuple[Optional[tuple[frozenset[int], ...]], int]:
    """Search for rank-many subsets whose partial transversals give ``m``.

    The search runs over all sorted tuples of subsets of the non-loop
    elements, pruned by the Hall-type necessary condition that elements
    avoiding every set of a subfamily have rank at most the number of
    remaining sets.  Exponential; intended for grounds of at most 7.
    Returns (presentation or None, number of fully checked candidates).
    """
    r = m.rank
    nonloops = [e for e in m.ground if e not in m.loops]
    t = len(nonloops)
    if r == 0:
        return (), 0

    pos = {e: i for i, e in enumerate(nonloops)}
    to_ground = [m._index[e] for e in nonloops]

    def ground_mask(cmask: int) -> int:
        g = 0
        for i in range(t):
            if cmask >> i & 1:
                g |= 1 << to_ground[i]
        return g

    rank_cache: dict[int, int] = {}

    def crank(cmask: int) -> int:
        v = rank_cache.get(cmask)
        if v is None:
            gm = ground_mask(cmask)
            v = max((b & gm).bit_count() for b in m._masks)
            rank_cache[cmask] = v
        return v

    full = (1 << t) - 1
    basis_cmasks = set()
    for b in m.bases:
        basis_cmasks.add(sum(1 << pos[e] for e in b))
    rsubsets = [
        (sum(1 << i for i in combo), combo)
        for combo in itertools.combinations(range(t), r)
    ]

    def has_sdr(bits: tuple[int, ...], sets: list[int]) -> bool:
        for perm in itertools.permutations(range(r)):
            if all(sets[perm[k]] >> bits[k] & 1 for k in range(r)):
                return True
        return False

    examined = 0
    chosen: list[int] = []

    def realizes() -> bool:
        for cmask, bits in rsubsets:
            if has_sdr(bits, chosen) != (cmask in basis_cmasks):
                return False
        return True

    def rec(depth: int, lo: int, families: list[tuple[int, int]]) -> Optional[list[int]]:
        nonlocal examined
        for a in range(lo, 1 << t):
            new_fams = []
            ok = True
            for count, union in families:
                u = union | a
                if crank(full & ~u) > r - count - 1:
                    ok = False
                    break
                new_fams.append((count + 1, u))
            if not ok:
                continue
            chosen.append(a)
            if depth == r - 1:
                examined += 1
                if realizes():
                    return list(chosen)
            else:
                res = rec(depth + 1, a, families + new_fams)
                if res is not None:
                    return res
            chosen.pop()
        return None

    res = rec(0, 1, [(0, 0)])
    if res is None:
        return None, examined
    pres = tuple(
        frozenset(nonloops[i] for i in range(t) if a >> i & 1) for a in res
    )
    return pres, examined


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class ClassificationReport:
    """Excluded-minor / realization classification of one matroid."""

    binary: bool
    regular: bool
    graphic: bool
    cographic: bool
    transversal: Optional[bool]
    witnesses: dict[str, str]

    def to_json_dict(self) -> dict:
        return {
            "binary": self.binary,
            "regular": self.regular,
            "graphic": self.graphic,
            "cographic": self.cographic,
            "transversal": self.transversal,
            "witnesses": dict(self.witnesses),
        }


def _excluded_minor_scan(m: Matroid, targets: list[tuple[str, Matroid]]):
    for name, t in targets:
        found, wit = has_minor(m, t)
        if found:
            return name, wit
    return None, None


def _graphic_targets() -> list[tuple[str, Matroid]]:
    return [
        ("U(2,4)", named_matroid("uniform", (2, 4))),
        ("fano", named_matroid("fano")),
        ("fano_dual", named_matroid("fano_dual")),
        ("dual(M(K5))", named_matroid("mk5").dual()),
        ("dual(M(K3,3))", named_matroid("mk33").dual()),
    ]


def _realization_witness(m: Matroid) -> Optional[str]:
    """Try to exhibit a multigraph whose cycle matroid matches ``m``.

    Tries vertex counts rank+1 and rank+2 over multigraph edge multisets;
    gives up (returns None) when the candidate space is too large.
    """
    from . import graphs

    ne = len(m.ground)
    for extra in (1, 2):
        nv = m.rank + extra
        if nv < 1 or nv > 8:
            continue
        slots = [(u, v) for u in range(nv) for v in range(u, nv)]
        total = 1
        for i in range(ne):
            total = total * (len(slots) + i) // (i + 1)
        if total > 300_000:
            continue
        for combo in itertools.combinations_with_replacement(slots, ne):
            g = graphs.Multigraph(nv, tuple(combo))
            try:
                cm = graphs.cycle_matroid(g)
            except MatroidError:
                continue
            if len(cm.bases) != len(m.bases) or cm.rank != m.rank:
                continue
            if is_isomorphic(cm, m)[0]:
                return f"cycle matroid of graph with edges {list(combo)}"
    return None


def classify(m: Matroid, bound: int = 10) -> ClassificationReport:
    """Classify by excluded minors plus a transversal-presentation search.

    binary: no U(2,4) minor; regular: additionally no Fano or dual-Fano
    minor; graphic: additionally no dual M(K5) / dual M(K3,3) minor;
    cographic: dual graphic.  Transversal search is attempted only for
    grounds of at most 7 elements (None otherwise).
    """
    if len(m.ground) > bound:
        raise GroundTooLarge(f"classification capped at {bound} elements")

    witnesses: dict[str, str] = {}
    targets = _graphic_targets()

    name, wit = _excluded_minor_scan(m, targets[:1])
    binary = name is None
    if binary:
        witnesses["binary"] = "no U(2,4) minor (exhaustive delete/contract search)"
    else:
        witnesses["binary"] = f"{name} minor at deletions={wit[0]} contractions={wit[1]}"

    if not binary:
        regular = False
        witnesses["regular"] = witnesses["binary"]
    else:
        name, wit = _excluded_minor_scan(m, targets[1:3])
        regular = name is None
        witnesses["regular"] = (
            "no U(2,4)/fano/fano_dual minor (exhaustive search)"
            if regular
            else f"{name} minor at deletions={wit[0]} contractions={wit[1]}"
        )

    def graphic_side(mm: Matroid) -> tuple[bool, str]:
        nm, w = _excluded_minor_scan(mm, targets)
        if nm is None:
            wit_text = "no excluded minor (exhaustive search)"
            real = _realization_witness(mm)
            if real is not None:
                wit_text = real
            return True, wit_text
        return False, f"{nm} minor at deletions={w[0]} contractions={w[1]}"

    graphic, gw = graphic_side(m)
    witnesses["graphic"] = gw
    cographic, cw = graphic_side(m.dual())
    witnesses["cographic"] = cw

    transversal: Optional[bool]
    if len(m.ground) <= 7:
        pres, examined = transversal_presentation(m)
        if pres is not None:
            transversal = True
            witnesses["transversal"] = "presentation " + ", ".join(
                "{" + " ".join(str(e) for e in sorted(s)) + "}" for s in pres
            )
        else:
            transversal = False
            witnesses["transversal"] = (
                f"no rank-many presentation exists "
                f"(pruned exhaustive search, {examined} full candidates)"
            )
    else:
        transversal = None
        witnesses["transversal"] = "skipped: presentation search capped at 7 elements"

    return ClassificationReport(binary, regular, graphic, cographic, transversal, witnesses)


# ---------------------------------------------------------------------------
# text / JSON formats


def parse_matroid(text: str, bound: int = GROUND_BOUND) -> Matroid:
    """Parse the line format (``ground:`` then ``basis:`` lines) or JSON."""
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        return make_matroid(data["ground"], data["bases"], bound=bound)
    ground = None
    bases = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        vals = [int(v) for v in rest.split()]
        if key.strip() == "ground":
            ground = vals
        elif key.strip() == "basis":
            bases.append(vals)
        else:
            raise MatroidError(f"unrecognized line {raw!r}")
    if ground is None:
        raise MatroidError("missing 'ground:' line")
    return make_matroid(ground, bases, bound=bound)
