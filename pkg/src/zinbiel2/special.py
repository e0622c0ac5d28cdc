"""Crossed products (Z as ideal) and bicrossed products (both factors
subalgebras), as specializations of the unified product.

Both specialized builders assemble their products directly from the
specialized formulas; the test suite asserts they coincide tensor-for-tensor
with build_unified_product on the embedded datum, so the two construction
routes stay independent.
"""

from __future__ import annotations

from .core import (DEFAULT_VIOLATION_CAP, BimodulePair, ZinbielAlgebra,
                   ZinbielTwoAlgebra, check_crossed_module)
from .engine import DatumCtx, evaluate_conditions
from .errors import (DimError, NotAnIdeal, NotComplementary, NotSubalgebra,
                     ObstructionNonzero, PreconditionError, SubalgebraError)
from .linalg import BilMap, LinMap, TwoVectorSpace, is_zero_vec
from .unified import (ComplementSplit, ExtendingDatum, _assemble,
                      _coordinate_maps, build_unified_product, extract_datum)


def star_structure(datum: ExtendingDatum) -> ZinbielTwoAlgebra:
    """The candidate 2-algebra carried by the star family on (V1, V0, d)."""
    f = datum.field
    v = datum.v
    v1 = ZinbielAlgebra(f, v.dim1, datum.st[1])
    v0 = ZinbielAlgebra(f, v.dim0, datum.st[0])
    return ZinbielTwoAlgebra(v1, v0, v.d, BimodulePair(datum.st[2], datum.st[3]))


class CrossedSystem:
    """An extending datum whose tr/tl families vanish identically."""

    __slots__ = ("datum",)

    def __init__(self, datum: ExtendingDatum):
        for name in ("tr", "tl"):
            for j, m in enumerate(getattr(datum, name)):
                if not m.is_zero():
                    raise DimError(f"crossed system requires {name}[{j}] = 0")
        object.__setattr__(self, "datum", datum)

    def __setattr__(self, *_):
        raise AttributeError("CrossedSystem is immutable")

    @property
    def field(self):
        return self.datum.field

    def embed(self) -> ExtendingDatum:
        return self.datum

    def __eq__(self, other):
        return isinstance(other, CrossedSystem) and self.datum == other.datum

    def __hash__(self):
        return hash(("crossed", self.datum))


def build_crossed_product(cs: CrossedSystem) -> ZinbielTwoAlgebra:
    """Product with V-components given by the star family alone."""
    d = cs.datum
    z, v = d.z, d.v
    f = d.field
    n1, n0, m1, m0 = z.z1.dim, z.z0.dim, v.dim1, v.dim0
    mult0 = _assemble(f, n0, m0, n0, m0, n0, m0,
                      zz_z=z.z0.mult, zv_z=d.hl[0], zv_v=None,
                      vz_z=d.hr[0], vz_v=None, vv_z=d.om[0], vv_v=d.st[0])
    mult1 = _assemble(f, n1, m1, n1, m1, n1, m1,
                      zz_z=z.z1.mult, zv_z=d.hl[1], zv_v=None,
                      vz_z=d.hr[1], vz_v=None, vv_z=d.om[1], vv_v=d.st[1])
    act_left = _assemble(f, n0, m0, n1, m1, n1, m1,
                         zz_z=z.act.left, zv_z=d.hl[2], zv_v=None,
                         vz_z=d.hr[2], vz_v=None, vv_z=d.om[2], vv_v=d.st[2])
    act_right = _assemble(f, n1, m1, n0, m0, n1, m1,
                          zz_z=z.act.right, zv_z=d.hl[3], zv_v=None,
                          vz_z=d.hr[3], vz_v=None, vv_z=d.om[3], vv_v=d.st[3])
    phi_rows = [list(z.phi.entries[r]) + list(d.sigma.entries[r]) for r in range(n0)]
    zero_row = [f.zero()] * n1
    phi_rows += [zero_row + list(v.d.entries[r]) for r in range(m0)]
    return ZinbielTwoAlgebra(ZinbielAlgebra(f, n1 + m1, mult1),
                             ZinbielAlgebra(f, n0 + m0, mult0),
                             LinMap(f, n0 + m0, n1 + m1, phi_rows),
                             BimodulePair(act_left, act_right))


def check_crossed_system(cs: CrossedSystem, cap=DEFAULT_VIOLATION_CAP,
                         first_only=False, check_z=True,
                         strict_printed=False):
    """CZ1..CZ61 plus the side condition that the star family makes
    (V1, V0, d) a valid 2-algebra (violations namespaced V.*)."""
    from .conds_special import CZ_TABLE
    if check_z:
        zrep = check_crossed_module(cs.datum.z, cap=cap)
        if not zrep.ok:
            raise PreconditionError("the base Z is not a valid Zinbiel 2-algebra", zrep)
    report = evaluate_conditions(DatumCtx(cs.datum), CZ_TABLE, cap=cap,
                                 first_only=first_only, strict_printed=strict_printed)
    if first_only and not report.ok:
        return report
    vrep = check_crossed_module(star_structure(cs.datum), cap=cap, first_only=first_only)
    report.extend_namespaced("V.", vrep, cap)
    return report.finalize()


def check_ideal_extension(split: ComplementSplit, cap=DEFAULT_VIOLATION_CAP) -> CrossedSystem:
    """Check that the embedded Z is a two-sided ideal and extract the
    crossed system realizing E as a crossed product.

    Ideal closure means: both level multiplications and both action maps
    send any pair with one argument from Z back into Z (zero complement
    component).  Witnesses are (operation, side, z index, e index).
    """
    e = split.e
    f = e.field
    (b1, b1inv), (b0, b0inv) = _coordinate_maps(split)
    n1, n0 = split.iota1.cols, split.iota0.cols
    z_emb = {1: [split.iota1.column(j) for j in range(n1)],
             0: [split.iota0.column(j) for j in range(n0)]}

    def vpart(level, vec):
        binv = b1inv if level == 1 else b0inv
        nz = n1 if level == 1 else n0
        return binv.apply(vec)[nz:]

    ops = {"mult0": (0, 0, 0, e.z0.mult), "mult1": (1, 1, 1, e.z1.mult),
           "act_left": (0, 1, 1, e.act.left), "act_right": (1, 0, 1, e.act.right)}
    from .linalg import vbasis
    for name, (la, lb, lc, tensor) in ops.items():
        dim_a = e.z0.dim if la == 0 else e.z1.dim
        dim_b = e.z0.dim if lb == 0 else e.z1.dim
        for i, zv in enumerate(z_emb[la]):
            for k in range(dim_b):
                if not is_zero_vec(f, vpart(lc, tensor.eval(zv, vbasis(f, dim_b, k)))):
                    raise NotAnIdeal(f"Z is not closed under {name} on the left",
                                     witness=(name, "left", i, k))
        for k, zv in enumerate(z_emb[lb]):
            for i in range(dim_a):
                if not is_zero_vec(f, vpart(lc, tensor.eval(vbasis(f, dim_a, i), zv))):
                    raise NotAnIdeal(f"Z is not closed under {name} on the right",
                                     witness=(name, "right", i, k))
    datum = extract_datum(split, cap=cap)
    for name in ("tr", "tl"):
        for j, m in enumerate(getattr(datum, name)):
            if not m.is_zero():
                raise NotAnIdeal(f"extracted {name}[{j}] is nonzero", witness=(name, j))
    return CrossedSystem(datum)


class MatchedPairDatum:
    """Two full 2-algebras with the sixteen cross maps, omega and sigma zero.

    The V structure is a genuine ZinbielTwoAlgebra; embedding it into an
    extending datum turns its multiplications into star[0]/star[1], its
    action into star[2]/star[3], and its connecting map into d.
    """

    __slots__ = ("z", "v", "hr", "hl", "tr", "tl")

    def __init__(self, z: ZinbielTwoAlgebra, v: ZinbielTwoAlgebra,
                 hr, hl, tr, tl, check_v=True):
        if check_v:
            vrep = check_crossed_module(v)
            if not vrep.ok:
                raise PreconditionError("V is not a valid Zinbiel 2-algebra", vrep)
        # Dimension typing is delegated to the embedding below.
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "hr", tuple(hr))
        object.__setattr__(self, "hl", tuple(hl))
        object.__setattr__(self, "tr", tuple(tr))
        object.__setattr__(self, "tl", tuple(tl))
        self.embed()  # validates all map shapes

    def __setattr__(self, *_):
        raise AttributeError("MatchedPairDatum is immutable")

    @property
    def field(self):
        return self.z.field

    def embed(self) -> ExtendingDatum:
        f = self.field
        v2 = TwoVectorSpace(self.v.z1.dim, self.v.z0.dim, self.v.phi)
        n0, m1 = self.z.z0.dim, self.v.z1.dim
        dims = {"Z0": self.z.z0.dim, "Z1": self.z.z1.dim,
                "V0": self.v.z0.dim, "V1": self.v.z1.dim}
        from .engine import OM_DOM
        om = tuple(BilMap.zero(f, dims[OM_DOM[j][0]], dims[OM_DOM[j][1]],
                               dims[OM_DOM[j][2]]) for j in range(4))
        st = (self.v.z0.mult, self.v.z1.mult, self.v.act.left, self.v.act.right)
        return ExtendingDatum(self.z, v2, self.hr, self.hl, self.tr, self.tl,
                              om, st, LinMap.zero(f, n0, m1))

    def __eq__(self, other):
        return (isinstance(other, MatchedPairDatum) and self.z == other.z
                and self.v == other.v
                and all(getattr(self, n) == getattr(other, n)
                        for n in ("hr", "hl", "tr", "tl")))

    def __hash__(self):
        return hash(("matched", self.z, self.v, self.hr, self.hl, self.tr, self.tl))


def build_bicrossed_product(mp: MatchedPairDatum) -> ZinbielTwoAlgebra:
    """Product with no omega/sigma contributions; both factors embed as
    subalgebras."""
    z, v = mp.z, mp.v
    f = mp.field
    n1, n0, m1, m0 = z.z1.dim, z.z0.dim, v.z1.dim, v.z0.dim
    mult0 = _assemble(f, n0, m0, n0, m0, n0, m0,
                      zz_z=z.z0.mult, zv_z=mp.hl[0], zv_v=mp.tr[0],
                      vz_z=mp.hr[0], vz_v=mp.tl[0], vv_z=None, vv_v=v.z0.mult)
    mult1 = _assemble(f, n1, m1, n1, m1, n1, m1,
                      zz_z=z.z1.mult, zv_z=mp.hl[1], zv_v=mp.tr[1],
                      vz_z=mp.hr[1], vz_v=mp.tl[1], vv_z=None, vv_v=v.z1.mult)
    act_left = _assemble(f, n0, m0, n1, m1, n1, m1,
                         zz_z=z.act.left, zv_z=mp.hl[2], zv_v=mp.tr[2],
                         vz_z=mp.hr[2], vz_v=mp.tl[2], vv_z=None, vv_v=v.act.left)
    act_right = _assemble(f, n1, m1, n0, m0, n1, m1,
                          zz_z=z.act.right, zv_z=mp.hl[3], zv_v=mp.tr[3],
                          vz_z=mp.hr[3], vz_v=mp.tl[3], vv_z=None, vv_v=v.act.right)
    phi_rows = [list(z.phi.entries[r]) + [f.zero()] * m1 for r in range(n0)]
    phi_rows += [[f.zero()] * n1 + list(v.phi.entries[r]) for r in range(m0)]
    return ZinbielTwoAlgebra(ZinbielAlgebra(f, n1 + m1, mult1),
                             ZinbielAlgebra(f, n0 + m0, mult0),
                             LinMap(f, n0 + m0, n1 + m1, phi_rows),
                             BimodulePair(act_left, act_right))


def check_matched_pair(mp: MatchedPairDatum, cap=DEFAULT_VIOLATION_CAP,
                       first_only=False, check_z=True, strict_printed=False):
    """BZ1..BZ106 over the embedded datum (V validity is a type invariant)."""
    from .conds_special import BZ_TABLE
    if check_z:
        zrep = check_crossed_module(mp.z, cap=cap)
        if not zrep.ok:
            raise PreconditionError("the base Z is not a valid Zinbiel 2-algebra", zrep)
    return evaluate_conditions(DatumCtx(mp.embed()), BZ_TABLE, cap=cap,
                               first_only=first_only, strict_printed=strict_printed)


def factorize(e: ZinbielTwoAlgebra, iota_z, iota_v, check_e=True,
              cap=DEFAULT_VIOLATION_CAP) -> MatchedPairDatum:
    """Factor E through two embedded subalgebras.

    iota_z and iota_v are (level-1, level-0) inclusion pairs whose combined
    columns must span each level (NotComplementary otherwise).  The Z image
    must be closed (NotSubalgebra); a nonzero extracted omega or sigma means
    the V image is not closed and raises ObstructionNonzero with the first
    offending entry as witness.
    """
    f = e.field
    iz1, iz0 = iota_z
    iv1, iv0 = iota_v
    from .linalg import inverse
    ps = []
    for lvl, (iz, iv, dim_e) in enumerate(((iz1, iv1, e.z1.dim), (iz0, iv0, e.z0.dim))):
        if iz.rows != dim_e or iv.rows != dim_e:
            raise DimError(f"level-{1 - lvl} inclusions do not map into E")
        cols = [iz.column(j) for j in range(iz.cols)] + [iv.column(j) for j in range(iv.cols)]
        if len(cols) != dim_e:
            raise NotComplementary(f"level {1 - lvl}: {len(cols)} columns for dim {dim_e}")
        b = LinMap.from_columns(f, cols, dim_e)
        binv = inverse(b)
        if binv is None:
            raise NotComplementary(f"level {1 - lvl}: images do not span E")
        # p = projection onto Z along V (the Z-coordinate rows of b^-1)
        ps.append(LinMap(f, iz.cols, dim_e, binv.entries[:iz.cols]))
    p1, p0 = ps
    # The V inclusions themselves serve as the complement basis, so the
    # extracted star family is expressed in V's own coordinates.
    split = ComplementSplit(e, iz1, iz0, p1, p0,
                            vbasis1=[iv1.column(j) for j in range(iv1.cols)],
                            vbasis0=[iv0.column(j) for j in range(iv0.cols)])
    try:
        datum = extract_datum(split, check_e=check_e, cap=cap)
    except SubalgebraError as exc:
        raise NotSubalgebra(f"Z image is not a subalgebra: {exc}",
                            witness=exc.witness) from exc
    for j, m in enumerate(datum.om):
        if not m.is_zero():
            raise ObstructionNonzero(
                f"V image is not a subalgebra: omega[{j}] has entry {m.items[0]}",
                witness=("omega", j, m.items[0]))
    if not datum.sigma.is_zero():
        raise ObstructionNonzero("V image is not closed under phi_E: sigma is nonzero",
                                 witness=("sigma",))
    v2alg = star_structure(datum)
    return MatchedPairDatum(datum.z, v2alg, datum.hr, datum.hl, datum.tr, datum.tl)
