"""Morphisms between unified products, equivalence of extending data, and
desk-scale classification by exhaustive enumeration over GF(p).

Equivalence testing searches block maps (x, u) -> (x + r(u), s(u)) rather
than all linear maps of the ambient product: a morphism that stabilizes Z
has exactly this form, and it is an isomorphism precisely when both s
components are invertible (criterion H1..H20, cross-validated against the
direct morphism check).  The cohomologous relation additionally fixes
s = id.  Searches and enumerations are deterministic and lexicographic,
budgets are hard limits, and nothing is silently sampled.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import (DEFAULT_VIOLATION_CAP, TwoMorphism, ZinbielTwoAlgebra,
                   check_2alg_morphism, check_crossed_module)
from .engine import MorphismCtx, evaluate_conditions
from .errors import (BudgetExceeded, DimError, FieldMismatch, InfeasibleSearch,
                     PreconditionError)
from .fields import PrimeField
from .linalg import BilMap, LinMap, TwoVectorSpace, inverse
from .unified import ExtendingDatum, build_unified_product, check_datum_direct

DEFAULT_ENUM_BUDGET = 5 ** 8
DEFAULT_RS_BUDGET = 10 ** 6


class RSData:
    """Block-map parameters: r_i: V_i -> Z_i and s_i: V_i -> V_i."""

    __slots__ = ("r1", "r0", "s1", "s0")

    def __init__(self, r1: LinMap, r0: LinMap, s1: LinMap, s0: LinMap):
        if s1.rows != s1.cols or s0.rows != s0.cols:
            raise DimError("s components must be square")
        if r1.cols != s1.cols or r0.cols != s0.cols:
            raise DimError("r and s domains disagree")
        object.__setattr__(self, "r1", r1)
        object.__setattr__(self, "r0", r0)
        object.__setattr__(self, "s1", s1)
        object.__setattr__(self, "s0", s0)

    def __setattr__(self, *_):
        raise AttributeError("RSData is immutable")

    @classmethod
    def identity(cls, field, datum: ExtendingDatum):
        n1, n0 = datum.z.z1.dim, datum.z.z0.dim
        m1, m0 = datum.v.dim1, datum.v.dim0
        return cls(LinMap.zero(field, n1, m1), LinMap.zero(field, n0, m0),
                   LinMap.identity(field, m1), LinMap.identity(field, m0))

    def is_isomorphism_shape(self):
        return inverse(self.s1) is not None and inverse(self.s0) is not None

    def __eq__(self, other):
        return (isinstance(other, RSData) and self.r1 == other.r1 and self.r0 == other.r0
                and self.s1 == other.s1 and self.s0 == other.s0)

    def __hash__(self):
        return hash((self.r1, self.r0, self.s1, self.s0))


def _require_compatible(d1: ExtendingDatum, d2: ExtendingDatum):
    if d1.field != d2.field:
        raise FieldMismatch("data over different fields")
    if d1.z != d2.z or d1.v != d2.v:
        raise DimError("data must share the same Z and the same (V1, V0, d)")


def morphism_from_rs(rs: RSData, d1: ExtendingDatum, d2: ExtendingDatum) -> TwoMorphism:
    """The block map (x, u) -> (x + r(u), s(u)) at both levels."""
    _require_compatible(d1, d2)
    f = d1.field
    out = []
    for (r, s, nz, mv) in ((rs.r1, rs.s1, d1.z.z1.dim, d1.v.dim1),
                           (rs.r0, rs.s0, d1.z.z0.dim, d1.v.dim0)):
        if (r.rows, r.cols) != (nz, mv) or s.rows != mv:
            raise DimError("rs maps do not match the datum dimensions")
        ident = LinMap.identity(f, nz)
        rows = [list(ident.entries[i]) + list(r.entries[i]) for i in range(nz)]
        rows += [[f.zero()] * nz + list(s.entries[i]) for i in range(mv)]
        out.append(LinMap(f, nz + mv, nz + mv, rows))
    return TwoMorphism(out[0], out[1])


def check_rs_conditions(rs: RSData, d1: ExtendingDatum, d2: ExtendingDatum,
                        cap=DEFAULT_VIOLATION_CAP, first_only=False,
                        strict_printed=False):
    """Evaluate H1..H20 for the block map rs between the two data."""
    from .conds_morphism import H_TABLE
    _require_compatible(d1, d2)
    return evaluate_conditions(MorphismCtx(d1, d2, rs), H_TABLE, cap=cap,
                               first_only=first_only, strict_printed=strict_printed)


def check_rs_direct(rs: RSData, d1: ExtendingDatum, d2: ExtendingDatum,
                    cap=DEFAULT_VIOLATION_CAP, first_only=False):
    """Oracle: build both products and run the direct morphism check."""
    _require_compatible(d1, d2)
    return check_2alg_morphism(build_unified_product(d1), build_unified_product(d2),
                               morphism_from_rs(rs, d1, d2), cap=cap,
                               first_only=first_only)


def _matrix_slots(rows, cols):
    return [(r, c) for r in range(rows) for c in range(cols)]


def _iter_matrices(field, rows, cols):
    """All rows x cols matrices over GF(p) in lexicographic entry order."""
    slots = _matrix_slots(rows, cols)
    if not slots:
        yield LinMap.zero(field, rows, cols)
        return
    p = field.char
    total = p ** len(slots)
    for index in range(total):
        entries = [[field.zero()] * cols for _ in range(rows)]
        rem = index
        for (r, c) in reversed(slots):
            entries[r][c] = rem % p
            rem //= p
        yield LinMap(field, rows, cols, entries)


def rs_search_space(field, datum: ExtendingDatum, mode):
    """Number of candidate rs tuples for the given mode."""
    n1, n0 = datum.z.z1.dim, datum.z.z0.dim
    m1, m0 = datum.v.dim1, datum.v.dim0
    count = n1 * m1 + n0 * m0
    if mode == "equivalent":
        count += m1 * m1 + m0 * m0
    return field.char ** count


def are_equivalent(d1: ExtendingDatum, d2: ExtendingDatum, mode="equivalent",
                   rs_budget=DEFAULT_RS_BUDGET, check_valid=True):
    """Exhaustive search for a stabilizing isomorphism between the products.

    mode "equivalent": any rs with both s components invertible;
    mode "cohomologous": s fixed to the identity.  Returns (found, witness).
    """
    if mode not in ("equivalent", "cohomologous"):
        raise ValueError(f"unknown mode {mode!r}")
    _require_compatible(d1, d2)
    f = d1.field
    if not isinstance(f, PrimeField):
        raise PreconditionError("equivalence search requires a prime field")
    if check_valid:
        for d in (d1, d2):
            rep = check_datum_direct(d, first_only=True)
            if not rep.ok:
                raise PreconditionError("datum is not a valid extending structure", rep)
    space = rs_search_space(f, d1, mode)
    if space > rs_budget:
        raise InfeasibleSearch(
            f"rs search space has {space} candidates (budget {rs_budget})", count=space)
    e1 = build_unified_product(d1)
    e2 = build_unified_product(d2)
    n1, n0 = d1.z.z1.dim, d1.z.z0.dim
    m1, m0 = d1.v.dim1, d1.v.dim0
    if mode == "cohomologous":
        s1_iter = [LinMap.identity(f, m1)]
        s0_iter = [LinMap.identity(f, m0)]
    else:
        s1_iter = [m for m in _iter_matrices(f, m1, m1) if inverse(m) is not None]
        s0_iter = [m for m in _iter_matrices(f, m0, m0) if inverse(m) is not None]
    for r1 in _iter_matrices(f, n1, m1):
        for r0 in _iter_matrices(f, n0, m0):
            for s1 in s1_iter:
                for s0 in s0_iter:
                    rs = RSData(r1, r0, s1, s0)
                    phi = morphism_from_rs(rs, d1, d2)
                    if check_2alg_morphism(e1, e2, phi, first_only=True).ok:
                        return True, rs
    return False, None


# ---------------------------------------------------------------------------
# enumeration of valid extending data
# ---------------------------------------------------------------------------

class EnumerationSpec:
    """Deterministic indexing of all coefficient assignments over GF(p).

    Free scalars are ordered family by family (hr, hl, tr, tl, om, st with
    j = 0..3, coefficients in (k, i, j) order) followed by sigma entries in
    row-major order; assignment index digits are big-endian in that order.
    """

    def __init__(self, field, z: ZinbielTwoAlgebra, vdims, d: LinMap):
        if not isinstance(field, PrimeField):
            raise PreconditionError("enumeration requires a prime field")
        m1, m0 = vdims
        if (d.rows, d.cols) != (m0, m1):
            raise DimError(f"d must be {m0}x{m1}")
        self.field = field
        self.z = z
        self.v = TwoVectorSpace(m1, m0, d)
        self.base = ExtendingDatum.trivial(z, self.v)
        slots = []
        for attr in ("hr", "hl", "tr", "tl", "om", "st"):
            for j in range(4):
                m = getattr(self.base, attr)[j]
                for k in range(m.dim_c):
                    for i in range(m.dim_a):
                        for jj in range(m.dim_b):
                            slots.append((attr, j, (k, i, jj)))
        for r in range(z.z0.dim):
            for c in range(m1):
                slots.append(("sigma", None, (r, c)))
        self.slots = slots
        self.total = field.char ** len(slots)

    def datum_at(self, index):
        if not (0 <= index < self.total):
            raise IndexError(f"index {index} out of range ({self.total} assignments)")
        p = self.field.char
        digits = []
        rem = index
        for _ in self.slots:
            digits.append(rem % p)
            rem //= p
        digits.reverse()
        fams = {attr: [dict() for _ in range(4)] for attr in
                ("hr", "hl", "tr", "tl", "om", "st")}
        sigma_entries = {}
        for (attr, j, key), val in zip(self.slots, digits):
            if val == 0:
                continue
            if attr == "sigma":
                sigma_entries[key] = val
            else:
                fams[attr][j][key] = val
        kwargs = {}
        for attr in fams:
            maps = []
            for j in range(4):
                proto = getattr(self.base, attr)[j]
                maps.append(BilMap(self.field, proto.dim_a, proto.dim_b, proto.dim_c,
                                   fams[attr][j]))
            kwargs[attr] = tuple(maps)
        z0 = self.field.zero()
        sigma = LinMap(self.field, self.z.z0.dim, self.v.dim1,
                       [[sigma_entries.get((r, c), z0) for c in range(self.v.dim1)]
                        for r in range(self.z.z0.dim)])
        return self.base.replace(sigma=sigma, **kwargs)


def _scan_chunk(args):
    """Worker: return the valid assignment indices in [start, end)."""
    payload, start, end = args
    import json as _json

    from .io import parse_linmap, parse_two_algebra
    from .fields import field_from_name
    obj = _json.loads(payload)
    field = field_from_name(obj["field"])
    z = parse_two_algebra(field, obj["z"], "$", None)
    d = parse_linmap(field, obj["d"], "$", None)
    spec = EnumerationSpec(field, z, tuple(obj["vdims"]), d)
    hits = []
    for index in range(start, end):
        datum = spec.datum_at(index)
        if check_datum_direct(datum, first_only=True, check_z=False).ok:
            hits.append(index)
    return hits


def enumerate_valid_data(field, z: ZinbielTwoAlgebra, vdims, d: LinMap,
                         budget=DEFAULT_ENUM_BUDGET, jobs=1):
    """All valid extending data for (z, V) in lexicographic order.

    Raises BudgetExceeded (with the exact candidate count) before scanning
    anything if the assignment space is too large, and PreconditionError if
    z itself is not a valid 2-algebra.
    """
    zrep = check_crossed_module(z)
    if not zrep.ok:
        raise PreconditionError("Z is not a valid Zinbiel 2-algebra", zrep)
    spec = EnumerationSpec(field, z, vdims, d)
    if spec.total > budget:
        raise BudgetExceeded(
            f"enumeration space has {spec.total} candidates (budget {budget})",
            count=spec.total)
    if jobs <= 1:
        for index in range(spec.total):
            datum = spec.datum_at(index)
            if check_datum_direct(datum, first_only=True, check_z=False).ok:
                yield datum
        return
    from .io import canonical_dumps, linmap_to_json, two_algebra_to_json
    payload = canonical_dumps({"field": field.name,
                               "z": two_algebra_to_json(z, kind=None),
                               "vdims": list(vdims),
                               "d": linmap_to_json(d)})
    chunk = max(1, -(-spec.total // (jobs * 8)))
    ranges = [(payload, lo, min(lo + chunk, spec.total))
              for lo in range(0, spec.total, chunk)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for hits in pool.map(_scan_chunk, ranges):
            for index in hits:
                yield spec.datum_at(index)


# ---------------------------------------------------------------------------
# quotient computation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrbitPartition:
    items: tuple          # canonical serializations, in enumeration order
    orbits: tuple         # tuple of index tuples, sorted by representative
    relation: str         # "equivalent" or "cohomologous"

    @property
    def representatives(self):
        return tuple(min(self.items[i] for i in orbit) for orbit in self.orbits)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


def compute_quotients(data, mode="equivalent", rs_budget=DEFAULT_RS_BUDGET,
                      verify_witnesses=True):
    """Partition valid data under the chosen relation via pairwise search.

    Transitivity holds abstractly (witnesses compose); verify_witnesses re-checks
    it empirically by confirming every member is directly related to its
    orbit representative.
    """
    from .io import canonical_dumps, datum_to_json
    data = list(data)
    items = tuple(canonical_dumps(datum_to_json(d)) for d in data)
    uf = _UnionFind(len(data))
    for i in range(len(data)):
        for j in range(i + 1, len(data)):
            if uf.find(i) == uf.find(j):
                continue
            found, _ = are_equivalent(data[i], data[j], mode=mode,
                                      rs_budget=rs_budget, check_valid=False)
            if found:
                uf.union(i, j)
    groups = {}
    for i in range(len(data)):
        groups.setdefault(uf.find(i), []).append(i)
    orbits = sorted((tuple(sorted(g)) for g in groups.values()),
                    key=lambda orbit: min(items[i] for i in orbit))
    if verify_witnesses:
        for orbit in orbits:
            rep = min(orbit, key=lambda i: items[i])
            for i in orbit:
                if i == rep:
                    continue
                found, _ = are_equivalent(data[i], data[rep], mode=mode,
                                          rs_budget=rs_budget, check_valid=False)
                if not found:
                    raise AssertionError(
                        f"transitivity breakdown: item {i} not directly related "
                        f"to representative {rep}")
    return OrbitPartition(items=items, orbits=tuple(orbits), relation=mode)


def census(field, z: ZinbielTwoAlgebra, vdims, d: LinMap,
           budget=DEFAULT_ENUM_BUDGET, rs_budget=DEFAULT_RS_BUDGET, jobs=1):
    """Enumerate valid data and compute both quotients; returns census JSON."""
    from .io import two_algebra_to_json
    data = list(enumerate_valid_data(field, z, vdims, d, budget=budget, jobs=jobs))
    out = {"field": field.name,
           "Z": two_algebra_to_json(z, kind=None),
           "Vdims": list(vdims),
           "valid_count": len(data),
           "quotients": []}
    parts = {}
    for mode in ("equivalent", "cohomologous"):
        part = compute_quotients(data, mode=mode, rs_budget=rs_budget)
        parts[mode] = part
        out["quotients"].append({
            "relation": mode,
            "orbit_count": len(part.orbits),
            "orbits": [list(o) for o in part.orbits],
            "representatives": list(part.representatives)})
    if len(parts["equivalent"].orbits) > len(parts["cohomologous"].orbits):
        raise AssertionError("refinement violated: |HE2| > |HC2|")
    # every equivalence orbit must be a union of cohomology orbits
    coh_root = {}
    for oi, orbit in enumerate(parts["cohomologous"].orbits):
        for i in orbit:
            coh_root[i] = oi
    for orbit in parts["equivalent"].orbits:
        for oi in {coh_root[i] for i in orbit}:
            if not set(parts["cohomologous"].orbits[oi]) <= set(orbit):
                raise AssertionError("cohomologous relation does not refine equivalence")
    return out
