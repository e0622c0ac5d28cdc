"""Condition catalogs for the two specializations of the unified product.

CZ_TABLE (CZ1..CZ61) is the criterion for crossed systems (all tr/tl maps
zero: Z sits inside the product as an ideal); BZ_TABLE (BZ1..BZ106) is the
criterion for matched pairs (all omega maps and sigma zero: both factors
are subalgebras).  Both evaluate over the embedding of the specialized
datum into a full extending datum, so structurally-zero maps make the
dropped terms vanish identically, and both carry the side condition that
the star family equips V with a valid 2-algebra structure (checked
separately by the callers in special.py).
"""

from .engine import ConditionTable

CZ_TABLE = ConditionTable("CZ")
_L = CZ_TABLE.add_leveled
_A = CZ_TABLE.add

_L("CZ1", "Zi Vi Zi", lambda i: lambda c, x, v, y: (
    c.dot(c.hl(i, x, v), y),
    c.dot(x, c.hr(i, v, y) + c.hl(i, y, v))))
_L("CZ2", "Vi Zi Zi", lambda i: lambda c, u, x, y: (
    c.dot(c.hr(i, u, x), y),
    c.hr(i, u, c.dot(x, y) + c.dot(y, x))))
_L("CZ3", "Vi Vi Zi", lambda i: lambda c, u, v, x: (
    c.dot(c.om(i, u, v), x) + c.hr(i, c.st(i, u, v), x),
    c.hr(i, u, c.hr(i, v, x) + c.hl(i, x, v))))
_L("CZ4", "Zi Zi Vi", lambda i: lambda c, x, y, w: (
    c.hl(i, c.dot(x, y), w),
    c.dot(x, c.hl(i, y, w) + c.hr(i, w, y))))
_L("CZ5", "Zi Vi Vi", lambda i: lambda c, x, v, w: (
    c.hl(i, c.hl(i, x, v), w),
    c.dot(x, c.om(i, v, w) + c.om(i, w, v)) + c.hl(i, x, c.st(i, v, w) + c.st(i, w, v))))
_L("CZ6", "Vi Zi Vi", lambda i: lambda c, u, x, w: (
    c.hl(i, c.hr(i, u, x), w),
    c.hr(i, u, c.hl(i, x, w) + c.hr(i, w, x))))
_L("CZ7", "Vi Vi Vi", lambda i: lambda c, u, v, w: (
    c.hl(i, c.om(i, u, v), w) + c.om(i, c.st(i, u, v), w),
    c.hr(i, u, c.om(i, v, w) + c.om(i, w, v)) + c.om(i, u, c.st(i, v, w) + c.st(i, w, v))))
_A("CZ8", "Z0 Z1 V1", lambda c, x0, x1, u1: (
    c.hl(1, c.dot(x0, x1), u1),
    c.dot(x0, c.hl(1, x1, u1) + c.hr(1, u1, x1))))
_A("CZ9", "Z0 V1 Z1", lambda c, x0, u1, x1: (
    c.dot(c.hl(2, x0, u1), x1),
    c.dot(x0, c.hr(1, u1, x1) + c.hl(1, x1, u1))))
_A("CZ10", "Z0 V1 V1", lambda c, x0, u1, v1: (
    c.hl(1, c.hl(2, x0, u1), v1),
    c.dot(x0, c.om(1, u1, v1) + c.om(1, v1, u1)) + c.hl(2, x0, c.st(1, u1, v1) + c.st(1, v1, u1))))
_A("CZ11", "V0 Z1 Z1", lambda c, u0, x1, y1: (
    c.dot(c.hr(2, u0, x1), y1),
    c.hr(2, u0, c.dot(x1, y1) + c.dot(y1, x1))))
_A("CZ12", "V0 Z1 V1", lambda c, u0, x1, u1: (
    c.hl(1, c.hr(2, u0, x1), u1),
    c.hr(2, u0, c.hl(1, x1, u1) + c.hr(1, u1, x1))))
_A("CZ13", "V0 V1 Z1", lambda c, u0, u1, x1: (
    c.dot(c.om(2, u0, u1), x1) + c.hr(1, c.st(2, u0, u1), x1),
    c.hr(2, u0, c.hr(1, u1, x1) + c.hl(1, x1, u1))))
_A("CZ14", "V0 V1 V1", lambda c, u0, u1, v1: (
    c.hl(1, c.om(2, u0, u1), v1) + c.om(1, c.st(2, u0, u1), v1),
    c.hr(2, u0, c.om(1, u1, v1) + c.om(1, v1, u1)) + c.om(2, u0, c.st(1, u1, v1) + c.st(1, v1, u1))))
_A("CZ15", "Z0 V0 Z1", lambda c, x0, u0, x1: (
    c.dot(c.hl(0, x0, u0), x1),
    c.dot(x0, c.hr(2, u0, x1) + c.hl(3, x1, u0))))
_A("CZ16", "V0 Z0 Z1", lambda c, u0, x0, x1: (
    c.dot(c.hr(0, u0, x0), x1),
    c.hr(2, u0, c.dot(x0, x1) + c.dot(x1, x0))))
_A("CZ17", "V0 V0 Z1", lambda c, u0, v0, x1: (
    c.dot(c.om(0, u0, v0), x1) + c.hr(2, c.st(0, u0, v0), x1),
    c.hr(2, u0, c.hr(2, v0, x1) + c.hl(3, x1, v0))))
_A("CZ18", "Z0 Z0 V1", lambda c, x0, y0, u1: (
    c.hl(2, c.dot(x0, y0), u1),
    c.dot(x0, c.hl(2, y0, u1) + c.hr(3, u1, y0))))
_A("CZ19", "Z0 V0 V1", lambda c, x0, u0, u1: (
    c.hl(2, c.hl(0, x0, u0), u1),
    c.dot(x0, c.om(2, u0, u1) + c.om(3, u1, u0)) + c.hl(2, x0, c.st(2, u0, u1) + c.st(3, u1, u0))))
_A("CZ20", "V0 Z0 V1", lambda c, u0, x0, u1: (
    c.hl(2, c.hr(0, u0, x0), u1),
    c.hr(2, u0, c.hl(2, x0, u1) + c.hr(3, u1, x0))))
_A("CZ21", "V0 V0 V1", lambda c, u0, v0, u1: (
    c.hl(2, c.om(0, u0, v0), u1) + c.om(2, c.st(0, u0, v0), u1),
    c.hr(2, u0, c.om(2, v0, u1) + c.om(3, u1, v0)) + c.om(2, u0, c.st(2, v0, u1) + c.st(3, u1, v0))))
_A("CZ22", "Z1 V0 Z0", lambda c, x1, u0, x0: (
    c.dot(c.hl(3, x1, u0), x0),
    c.dot(x1, c.hr(0, u0, x0) + c.hl(0, x0, u0))))
_A("CZ23", "V1 Z0 Z0", lambda c, u1, x0, y0: (
    c.dot(c.hr(3, u1, x0), y0),
    c.hr(3, u1, c.dot(x0, y0) + c.dot(y0, x0))))
_A("CZ24", "V1 V0 Z0", lambda c, u1, u0, x0: (
    c.dot(c.om(3, u1, u0), x0) + c.hr(3, c.st(3, u1, u0), x0),
    c.hr(3, u1, c.hr(0, u0, x0) + c.hl(0, x0, u0))))
_A("CZ25", "Z1 Z0 V0", lambda c, x1, x0, u0: (
    c.hl(3, c.dot(x1, x0), u0),
    c.dot(x1, c.hl(0, x0, u0) + c.hr(0, u0, x0))))
_A("CZ26", "Z1 V0 V0", lambda c, x1, u0, v0: (
    c.hl(3, c.hl(3, x1, u0), v0),
    c.dot(x1, c.om(0, u0, v0) + c.om(0, v0, u0)) + c.hl(3, x1, c.st(0, u0, v0) + c.st(0, v0, u0))))
_A("CZ27", "V1 Z0 V0", lambda c, u1, x0, u0: (
    c.hl(3, c.hr(3, u1, x0), u0),
    c.hr(3, u1, c.hl(0, x0, u0) + c.hr(0, u0, x0))))
_A("CZ28", "V1 V0 V0", lambda c, u1, u0, v0: (
    c.hl(3, c.om(3, u1, u0), v0) + c.om(3, c.st(3, u1, u0), v0),
    c.hr(3, u1, c.om(0, u0, v0) + c.om(0, v0, u0)) + c.om(3, u1, c.st(0, u0, v0) + c.st(0, v0, u0))))
_A("CZ29", "Z0 V1 Z0", lambda c, x0, u1, y0: (
    c.dot(c.hl(2, x0, u1), y0),
    c.dot(x0, c.hr(3, u1, y0) + c.hl(2, y0, u1))))
_A("CZ30", "V0 Z1 Z0", lambda c, u0, x1, y0: (
    c.dot(c.hr(2, u0, x1), y0),
    c.hr(2, u0, c.dot(x1, y0) + c.dot(y0, x1))))
_A("CZ31", "V0 V1 Z0", lambda c, u0, u1, x0: (
    c.dot(c.om(2, u0, u1), x0) + c.hr(3, c.st(2, u0, u1), x0),
    c.hr(2, u0, c.hr(3, u1, x0) + c.hl(2, x0, u1))))
_A("CZ32", "Z0 Z1 V0", lambda c, x0, x1, u0: (
    c.hl(3, c.dot(x0, x1), u0),
    c.dot(x0, c.hl(3, x1, u0) + c.hr(2, u0, x1))))
_A("CZ33", "Z0 V1 V0", lambda c, x0, u1, v0: (
    c.hl(3, c.hl(2, x0, u1), v0),
    c.dot(x0, c.om(3, u1, v0) + c.om(2, v0, u1)) + c.hl(2, x0, c.st(3, u1, v0) + c.st(2, v0, u1))))
_A("CZ34", "V0 Z1 V0", lambda c, u0, x1, v0: (
    c.hl(3, c.hr(2, u0, x1), v0),
    c.hr(2, u0, c.hl(3, x1, v0) + c.hr(2, v0, x1))))
_A("CZ35", "V0 V1 V0", lambda c, u0, u1, v0: (
    c.hl(3, c.om(2, u0, u1), v0) + c.om(3, c.st(2, u0, u1), v0),
    c.hr(2, u0, c.om(3, u1, v0) + c.om(2, v0, u1)) + c.om(2, u0, c.st(3, u1, v0) + c.st(2, v0, u1))))
_A("CZ36", "Z1 V0 Z1", lambda c, x1, u0, y1: (
    c.dot(c.hl(3, x1, u0), y1),
    c.dot(x1, c.hr(2, u0, y1) + c.hl(3, y1, u0))))
_A("CZ37", "V1 Z0 Z1", lambda c, u1, x0, x1: (
    c.dot(c.hr(3, u1, x0), x1),
    c.hr(1, u1, c.dot(x0, x1) + c.dot(x1, x0))))
_A("CZ38", "V1 V0 Z1", lambda c, u1, u0, x1: (
    c.dot(c.om(3, u1, u0), x1) + c.hr(1, c.st(3, u1, u0), x1),
    c.hr(1, u1, c.hr(2, u0, x1) + c.hl(3, x1, u0))))
_A("CZ39", "Z1 Z0 V1", lambda c, x1, x0, u1: (
    c.hl(1, c.dot(x1, x0), u1),
    c.dot(x1, c.hl(2, x0, u1) + c.hr(3, u1, x0))))
_A("CZ40", "Z1 V0 V1", lambda c, x1, u0, u1: (
    c.hl(1, c.hl(3, x1, u0), u1),
    c.dot(x1, c.om(2, u0, u1) + c.om(3, u1, u0)) + c.hl(1, x1, c.st(2, u0, u1) + c.st(3, u1, u0))))
_A("CZ41", "V1 Z0 V1", lambda c, u1, x0, v1: (
    c.hl(1, c.hr(3, u1, x0), v1),
    c.hr(1, u1, c.hl(2, x0, v1) + c.hr(3, v1, x0))))
_A("CZ42", "V1 V0 V1", lambda c, u1, u0, v1: (
    c.hl(1, c.om(3, u1, u0), v1) + c.om(1, c.st(3, u1, u0), v1),
    c.hr(1, u1, c.om(2, u0, v1) + c.om(3, v1, u0)) + c.om(1, u1, c.st(2, u0, v1) + c.st(3, v1, u0))))
_A("CZ43", "Z1 V1 Z0", lambda c, x1, u1, x0: (
    c.dot(c.hl(1, x1, u1), x0),
    c.dot(x1, c.hr(3, u1, x0) + c.hl(2, x0, u1))))
_A("CZ44", "V1 Z1 Z0", lambda c, u1, x1, x0: (
    c.dot(c.hr(1, u1, x1), x0),
    c.hr(1, u1, c.dot(x1, x0) + c.dot(x0, x1))))
_A("CZ45", "V1 V1 Z0", lambda c, u1, v1, x0: (
    c.dot(c.om(1, u1, v1), x0) + c.hr(3, c.st(1, u1, v1), x0),
    c.hr(1, u1, c.hr(3, v1, x0) + c.hl(2, x0, v1))))
_A("CZ46", "Z1 Z1 V0", lambda c, x1, y1, u0: (
    c.hl(3, c.dot(x1, y1), u0),
    c.dot(x1, c.hl(3, y1, u0) + c.hr(2, u0, y1))))
_A("CZ47", "Z1 V1 V0", lambda c, x1, u1, u0: (
    c.hl(3, c.hl(1, x1, u1), u0),
    c.dot(x1, c.om(3, u1, u0) + c.om(2, u0, u1)) + c.hl(1, x1, c.st(3, u1, u0) + c.st(2, u0, u1))))
_A("CZ48", "V1 Z1 V0", lambda c, u1, x1, u0: (
    c.hl(3, c.hr(1, u1, x1), u0),
    c.hr(1, u1, c.hl(3, x1, u0) + c.hr(2, u0, x1))))
_A("CZ49", "V1 V1 V0", lambda c, u1, v1, u0: (
    c.hl(3, c.om(1, u1, v1), u0) + c.om(3, c.st(1, u1, v1), u0),
    c.hr(1, u1, c.om(3, v1, u0) + c.om(2, u0, v1)) + c.om(1, u1, c.st(3, v1, u0) + c.st(2, u0, v1))))
_A("CZ50", "Z0 V1", lambda c, x0, u1: (
    c.phi(c.hl(2, x0, u1)),
    c.dot(x0, c.sig(u1)) + c.hl(0, x0, c.d(u1))))
_A("CZ51", "V0 Z1", lambda c, u0, x1: (
    c.phi(c.hr(2, u0, x1)),
    c.hr(0, u0, c.phi(x1))))
_A("CZ52", "V0 V1", lambda c, u0, u1: (
    c.phi(c.om(2, u0, u1)) + c.sig(c.st(2, u0, u1)),
    c.hr(0, u0, c.sig(u1)) + c.om(0, u0, c.d(u1))))
_A("CZ53", "Z1 V0", lambda c, x1, u0: (
    c.phi(c.hl(3, x1, u0)),
    c.hl(0, c.phi(x1), u0)))
_A("CZ54", "V1 Z0", lambda c, u1, x0: (
    c.phi(c.hr(3, u1, x0)),
    c.dot(c.sig(u1), x0) + c.hr(0, c.d(u1), x0)))
_A("CZ55", "V1 V0", lambda c, u1, u0: (
    c.phi(c.om(3, u1, u0)) + c.sig(c.st(3, u1, u0)),
    c.hl(0, c.sig(u1), u0) + c.om(0, c.d(u1), u0)))
_A("CZ56", "V1 Z1", lambda c, u1, x1: (
    c.dot(c.sig(u1), x1) + c.hr(2, c.d(u1), x1),
    c.hr(1, u1, x1)))
_A("CZ57", "Z1 V1", lambda c, x1, u1: (
    c.hl(2, c.phi(x1), u1),
    c.hl(1, x1, u1)))
_A("CZ58", "V1 V1", lambda c, u1, v1: (
    c.hl(2, c.sig(u1), v1) + c.om(2, c.d(u1), v1),
    c.om(1, u1, v1)))
_A("CZ59", "Z1 V1", lambda c, x1, u1: (
    c.dot(x1, c.sig(u1)) + c.hl(3, x1, c.d(u1)),
    c.hl(1, x1, u1)))
_A("CZ60", "V1 Z1", lambda c, u1, x1: (
    c.hr(3, u1, c.phi(x1)),
    c.hr(1, u1, x1)))
_A("CZ61", "V1 V1", lambda c, u1, v1: (
    c.hr(3, u1, c.sig(v1)) + c.om(3, u1, c.d(v1)),
    c.om(1, u1, v1)))


# =============================================================================
# BZ_TABLE: matched pairs (omega_j = 0, sigma = 0).
# =============================================================================

BZ_TABLE = ConditionTable("BZ")
_ML = BZ_TABLE.add_leveled
_M = BZ_TABLE.add

_ML("BZ1a", "Zi Zi Vi", lambda i: lambda c, x, y, w: (
    c.tr(i, c.dot(x, y), w),
    c.tr(i, x, c.tr(i, y, w) + c.tl(i, w, y))))
_ML("BZ1b", "Zi Vi Zi", lambda i: lambda c, x, v, z: (
    c.tl(i, c.tr(i, x, v), z),
    c.tr(i, x, c.tl(i, v, z) + c.tr(i, z, v))))
_ML("BZ1c", "Vi Zi Zi", lambda i: lambda c, u, y, z: (
    c.tl(i, c.tl(i, u, y), z),
    c.tl(i, u, c.dot(y, z) + c.dot(z, y))))
_ML("BZ2", "Zi Vi Zi", lambda i: lambda c, x, v, y: (
    c.dot(c.hl(i, x, v), y) + c.hr(i, c.tr(i, x, v), y),
    c.dot(x, c.hr(i, v, y) + c.hl(i, y, v)) + c.hl(i, x, c.tl(i, v, y) + c.tr(i, y, v))))
_ML("BZ3", "Vi Zi Zi", lambda i: lambda c, u, x, y: (
    c.dot(c.hr(i, u, x), y) + c.hr(i, c.tl(i, u, x), y),
    c.hr(i, u, c.dot(x, y) + c.dot(y, x))))
_ML("BZ4", "Vi Vi Zi", lambda i: lambda c, u, v, x: (
    c.hr(i, c.st(i, u, v), x),
    c.hr(i, u, c.hr(i, v, x) + c.hl(i, x, v))))
_ML("BZ5", "Vi Vi Zi", lambda i: lambda c, u, v, x: (
    c.tl(i, c.st(i, u, v), x),
    c.tl(i, u, c.hr(i, v, x) + c.hl(i, x, v)) + c.st(i, u, c.tl(i, v, x) + c.tr(i, x, v))))
_ML("BZ6", "Zi Zi Vi", lambda i: lambda c, x, y, w: (
    c.hl(i, c.dot(x, y), w),
    c.dot(x, c.hl(i, y, w) + c.hr(i, w, y)) + c.hl(i, x, c.tr(i, y, w) + c.tl(i, w, y))))
_ML("BZ7", "Zi Vi Vi", lambda i: lambda c, x, v, w: (
    c.hl(i, c.hl(i, x, v), w),
    c.hl(i, x, c.st(i, v, w) + c.st(i, w, v))))
_ML("BZ8", "Zi Vi Vi", lambda i: lambda c, x, v, w: (
    c.tr(i, c.hl(i, x, v), w) + c.st(i, c.tr(i, x, v), w),
    c.tr(i, x, c.st(i, v, w) + c.st(i, w, v))))
_ML("BZ9", "Vi Zi Vi", lambda i: lambda c, u, x, w: (
    c.hl(i, c.hr(i, u, x), w),
    c.hr(i, u, c.hl(i, x, w) + c.hr(i, w, x))))
_ML("BZ10", "Vi Zi Vi", lambda i: lambda c, u, x, w: (
    c.tr(i, c.hr(i, u, x), w) + c.st(i, c.tl(i, u, x), w),
    c.tl(i, u, c.hl(i, x, w) + c.hr(i, w, x)) + c.st(i, u, c.tr(i, x, w) + c.tl(i, w, x))))
_M("BZ11", "Z0 Z1 V1", lambda c, x0, x1, u1: (
    c.hl(1, c.dot(x0, x1), u1),
    c.dot(x0, c.hl(1, x1, u1) + c.hr(1, u1, x1)) + c.hl(2, x0, c.tr(1, x1, u1) + c.tl(1, u1, x1))))
_M("BZ12", "Z0 V1 Z1", lambda c, x0, u1, x1: (
    c.dot(c.hl(2, x0, u1), x1) + c.hr(1, c.tr(2, x0, u1), x1),
    c.dot(x0, c.hr(1, u1, x1) + c.hl(1, x1, u1)) + c.hl(2, x0, c.tl(1, u1, x1) + c.tr(1, x1, u1))))
_M("BZ13", "Z0 V1 V1", lambda c, x0, u1, v1: (
    c.hl(1, c.hl(2, x0, u1), v1),
    c.hl(2, x0, c.st(1, u1, v1) + c.st(1, v1, u1))))
_M("BZ14", "V0 Z1 Z1", lambda c, u0, x1, y1: (
    c.dot(c.hr(2, u0, x1), y1) + c.hr(1, c.tl(2, u0, x1), y1),
    c.hr(2, u0, c.dot(x1, y1) + c.dot(y1, x1))))
_M("BZ15", "V0 Z1 V1", lambda c, u0, x1, u1: (
    c.hl(1, c.hr(2, u0, x1), u1),
    c.hr(2, u0, c.hl(1, x1, u1) + c.hr(1, u1, x1))))
_M("BZ16", "V0 V1 Z1", lambda c, u0, u1, x1: (
    c.hr(1, c.st(2, u0, u1), x1),
    c.hr(2, u0, c.hr(1, u1, x1) + c.hl(1, x1, u1))))
_M("BZ17", "Z0 Z1 V1", lambda c, x0, x1, u1: (
    c.tr(1, c.dot(x0, x1), u1),
    c.tr(2, x0, c.tr(1, x1, u1) + c.tl(1, u1, x1))))
_M("BZ18", "Z0 V1 Z1", lambda c, x0, u1, y1: (
    c.tl(1, c.tr(2, x0, u1), y1),
    c.tr(2, x0, c.tl(1, u1, y1) + c.tr(1, y1, u1))))
_M("BZ19", "Z0 V1 V1", lambda c, x0, u1, v1: (
    c.tr(1, c.hl(2, x0, u1), v1) + c.st(1, c.tr(2, x0, u1), v1),
    c.tr(2, x0, c.st(1, u1, v1) + c.st(1, v1, u1))))
_M("BZ20", "V0 Z1 Z1", lambda c, u0, x1, y1: (
    c.tl(1, c.tl(2, u0, x1), y1),
    c.tl(2, u0, c.dot(x1, y1) + c.dot(y1, x1))))
_M("BZ21", "V0 Z1 V1", lambda c, u0, x1, u1: (
    c.tr(1, c.hr(2, u0, x1), u1) + c.st(1, c.tl(2, u0, x1), u1),
    c.tl(2, u0, c.hl(1, x1, u1) + c.hr(1, u1, x1)) + c.st(2, u0, c.tr(1, x1, u1) + c.tl(1, u1, x1))))
_M("BZ22", "V0 V1 Z1", lambda c, u0, u1, x1: (
    c.tl(1, c.st(2, u0, u1), x1),
    c.tl(2, u0, c.hr(1, u1, x1) + c.hl(1, x1, u1)) + c.st(2, u0, c.tl(1, u1, x1) + c.tr(1, x1, u1))))
_M("BZ23", "Z0 V0 Z1", lambda c, x0, u0, x1: (
    c.dot(c.hl(0, x0, u0), x1) + c.hr(2, c.tr(0, x0, u0), x1),
    c.dot(x0, c.hr(2, u0, x1) + c.hl(3, x1, u0)) + c.hl(2, x0, c.tl(2, u0, x1) + c.tr(3, x1, u0))))
_M("BZ24", "V0 Z0 Z1", lambda c, u0, x0, x1: (
    c.dot(c.hr(0, u0, x0), x1) + c.hr(2, c.tl(0, u0, x0), x1),
    c.hr(2, u0, c.dot(x0, x1) + c.dot(x1, x0))))
_M("BZ25", "V0 V0 Z1", lambda c, u0, v0, x1: (
    c.hr(2, c.st(0, u0, v0), x1),
    c.hr(2, u0, c.hr(2, v0, x1) + c.hl(3, x1, v0))))
_M("BZ26", "Z0 Z0 V1", lambda c, x0, y0, u1: (
    c.hl(2, c.dot(x0, y0), u1),
    c.dot(x0, c.hl(2, y0, u1) + c.hr(3, u1, y0)) + c.hl(2, x0, c.tr(2, y0, u1) + c.tl(3, u1, y0))))
_M("BZ27", "Z0 V0 V1", lambda c, x0, u0, u1: (
    c.hl(2, c.hl(0, x0, u0), u1),
    c.hl(2, x0, c.st(2, u0, u1) + c.st(3, u1, u0))))
_M("BZ28", "V0 Z0 V1", lambda c, u0, x0, u1: (
    c.hl(2, c.hr(0, u0, x0), u1),
    c.hr(2, u0, c.hl(2, x0, u1) + c.hr(3, u1, x0))))
_M("BZ29", "Z0 Z0 V1", lambda c, x0, y0, u1: (
    c.tr(2, c.dot(x0, y0), u1),
    c.tr(2, x0, c.tr(2, y0, u1) + c.tl(3, u1, y0))))
_M("BZ30", "Z0 V0 V1", lambda c, x0, u0, u1: (
    c.tr(2, c.hl(0, x0, u0), u1) + c.st(2, c.tr(0, x0, u0), u1),
    c.tr(2, x0, c.st(2, u0, u1) + c.st(3, u1, u0))))
_M("BZ31", "V0 Z0 V1", lambda c, u0, x0, u1: (
    c.tr(2, c.hr(0, u0, x0), u1) + c.st(2, c.tl(0, u0, x0), u1),
    c.tl(2, u0, c.hl(2, x0, u1) + c.hr(3, u1, x0)) + c.st(2, u0, c.tr(2, x0, u1) + c.tl(3, u1, x0))))
_M("BZ32", "Z0 V0 Z1", lambda c, x0, u0, x1: (
    c.tl(2, c.tr(0, x0, u0), x1),
    c.tr(2, x0, c.tl(2, u0, x1) + c.tr(3, x1, u0))))
_M("BZ33", "V0 Z0 Z1", lambda c, u0, x0, x1: (
    c.tl(2, c.tl(0, u0, x0), x1),
    c.tl(2, u0, c.dot(x0, x1) + c.dot(x1, x0))))
_M("BZ34", "V0 V0 Z1", lambda c, u0, v0, x1: (
    c.tl(2, c.st(0, u0, v0), x1),
    c.tl(2, u0, c.hr(2, v0, x1) + c.hl(3, x1, v0)) + c.st(2, u0, c.tl(2, v0, x1) + c.tr(3, x1, v0))))
_M("BZ35", "Z1 V0 Z0", lambda c, x1, u0, x0: (
    c.dot(c.hl(3, x1, u0), x0) + c.hr(3, c.tr(3, x1, u0), x0),
    c.dot(x1, c.hr(0, u0, x0) + c.hl(0, x0, u0)) + c.hl(3, x1, c.tl(0, u0, x0) + c.tr(0, x0, u0))))
_M("BZ36", "V1 Z0 Z0", lambda c, u1, x0, y0: (
    c.dot(c.hr(3, u1, x0), y0) + c.hr(3, c.tl(3, u1, x0), y0),
    c.hr(3, u1, c.dot(x0, y0) + c.dot(y0, x0))))
_M("BZ37", "V1 V0 Z0", lambda c, u1, u0, x0: (
    c.hr(3, c.st(3, u1, u0), x0),
    c.hr(3, u1, c.hr(0, u0, x0) + c.hl(0, x0, u0))))
_M("BZ38", "Z1 Z0 V0", lambda c, x1, x0, u0: (
    c.hl(3, c.dot(x1, x0), u0),
    c.dot(x1, c.hl(0, x0, u0) + c.hr(0, u0, x0)) + c.hl(3, x1, c.tr(0, x0, u0) + c.tl(0, u0, x0))))
_M("BZ39", "Z1 V0 V0", lambda c, x1, u0, v0: (
    c.hl(3, c.hl(3, x1, u0), v0),
    c.hl(3, x1, c.st(0, u0, v0) + c.st(0, v0, u0))))
_M("BZ40", "V1 Z0 V0", lambda c, u1, x0, u0: (
    c.hl(3, c.hr(3, u1, x0), u0),
    c.hr(3, u1, c.hl(0, x0, u0) + c.hr(0, u0, x0))))
_M("BZ41", "Z1 Z0 V0", lambda c, x1, x0, u0: (
    c.tr(3, c.dot(x1, x0), u0),
    c.tr(3, x1, c.tr(0, x0, u0) + c.tl(0, u0, x0))))
_M("BZ42", "Z1 V0 V0", lambda c, x1, u0, v0: (
    c.tr(3, c.hl(3, x1, u0), v0) + c.st(3, c.tr(3, x1, u0), v0),
    c.tr(3, x1, c.st(0, u0, v0) + c.st(0, v0, u0))))
_M("BZ43", "V1 Z0 V0", lambda c, u1, x0, u0: (
    c.tr(3, c.hr(3, u1, x0), u0) + c.st(3, c.tl(3, u1, x0), u0),
    c.tl(3, u1, c.hl(0, x0, u0) + c.hr(0, u0, x0)) + c.st(3, u1, c.tr(0, x0, u0) + c.tl(0, u0, x0))))
_M("BZ44", "Z1 V0 Z0", lambda c, x1, u0, x0: (
    c.tl(3, c.tr(3, x1, u0), x0),
    c.tr(3, x1, c.tl(0, u0, x0) + c.tr(0, x0, u0))))
_M("BZ45", "V1 Z0 Z0", lambda c, u1, x0, y0: (
    c.tl(3, c.tl(3, u1, x0), y0),
    c.tl(3, u1, c.dot(x0, y0) + c.dot(y0, x0))))
_M("BZ46", "V1 V0 Z0", lambda c, u1, u0, x0: (
    c.tl(3, c.st(3, u1, u0), x0),
    c.tl(3, u1, c.hr(0, u0, x0) + c.hl(0, x0, u0)) + c.st(3, u1, c.tl(0, u0, x0) + c.tr(0, x0, u0))))
_M("BZ47", "Z0 V1 Z0", lambda c, x0, u1, y0: (
    c.dot(c.hl(2, x0, u1), y0) + c.hr(3, c.tr(2, x0, u1), y0),
    c.dot(x0, c.hr(3, u1, y0) + c.hl(2, y0, u1)) + c.hl(2, x0, c.tl(3, u1, y0) + c.tr(2, y0, u1))))
_M("BZ48", "V0 Z1 Z0", lambda c, u0, x1, y0: (
    c.dot(c.hr(2, u0, x1), y0) + c.hr(3, c.tl(2, u0, x1), y0),
    c.hr(2, u0, c.dot(x1, y0) + c.dot(y0, x1))))
_M("BZ49", "V0 V1 Z0", lambda c, u0, u1, x0: (
    c.hr(3, c.st(2, u0, u1), x0),
    c.hr(2, u0, c.hr(3, u1, x0) + c.hl(2, x0, u1))))
_M("BZ50", "Z0 Z1 V0", lambda c, x0, x1, u0: (
    c.hl(3, c.dot(x0, x1), u0),
    c.dot(x0, c.hl(3, x1, u0) + c.hr(2, u0, x1)) + c.hl(2, x0, c.tr(3, x1, u0) + c.tl(2, u0, x1))))
_M("BZ51", "Z0 V1 V0", lambda c, x0, u1, v0: (
    c.hl(3, c.hl(2, x0, u1), v0),
    c.hl(2, x0, c.st(3, u1, v0) + c.st(2, v0, u1))))
_M("BZ52", "V0 Z1 V0", lambda c, u0, x1, v0: (
    c.hl(3, c.hr(2, u0, x1), v0),
    c.hr(2, u0, c.hl(3, x1, v0) + c.hr(2, v0, x1))))
_M("BZ53", "Z0 Z1 V0", lambda c, x0, x1, u0: (
    c.tr(3, c.dot(x0, x1), u0),
    c.tr(2, x0, c.tr(3, x1, u0) + c.tl(2, u0, x1))))
_M("BZ54", "Z0 V1 V0", lambda c, x0, u1, v0: (
    c.tr(3, c.hl(2, x0, u1), v0) + c.st(3, c.tr(2, x0, u1), v0),
    c.tr(2, x0, c.st(3, u1, v0) + c.st(2, v0, u1))))
_M("BZ55", "V0 Z1 V0", lambda c, u0, x1, v0: (
    c.tr(3, c.hr(2, u0, x1), v0) + c.st(3, c.tl(2, u0, x1), v0),
    c.tl(2, u0, c.hl(3, x1, v0) + c.hr(2, v0, x1)) + c.st(2, u0, c.tr(3, x1, v0) + c.tl(2, v0, x1))))
_M("BZ56", "Z0 V1 Z0", lambda c, x0, u1, y0: (
    c.tl(3, c.tr(2, x0, u1), y0),
    c.tr(2, x0, c.tl(3, u1, y0) + c.tr(2, y0, u1))))
_M("BZ57", "V0 Z1 Z0", lambda c, u0, x1, y0: (
    c.tl(3, c.tl(2, u0, x1), y0),
    c.tl(2, u0, c.dot(x1, y0) + c.dot(y0, x1))))
_M("BZ58", "V0 V1 Z0", lambda c, u0, u1, y0: (
    c.tl(3, c.st(2, u0, u1), y0),
    c.tl(2, u0, c.hr(3, u1, y0) + c.hl(2, y0, u1)) + c.st(2, u0, c.tl(3, u1, y0) + c.tr(2, y0, u1))))
_M("BZ59", "Z1 V0 Z1", lambda c, x1, u0, y1: (
    c.dot(c.hl(3, x1, u0), y1) + c.hr(1, c.tr(3, x1, u0), y1),
    c.dot(x1, c.hr(2, u0, y1) + c.hl(3, y1, u0)) + c.hl(1, x1, c.tl(2, u0, y1) + c.tr(3, y1, u0))))
_M("BZ60", "V1 Z0 Z1", lambda c, u1, x0, x1: (
    c.dot(c.hr(3, u1, x0), x1) + c.hr(1, c.tl(3, u1, x0), x1),
    c.hr(1, u1, c.dot(x0, x1) + c.dot(x1, x0))))
_M("BZ61", "V1 V0 Z1", lambda c, u1, u0, x1: (
    c.hr(1, c.st(3, u1, u0), x1),
    c.hr(1, u1, c.hr(2, u0, x1) + c.hl(3, x1, u0))))
_M("BZ62", "Z1 Z0 V1", lambda c, x1, x0, u1: (
    c.hl(1, c.dot(x1, x0), u1),
    c.dot(x1, c.hl(2, x0, u1) + c.hr(3, u1, x0)) + c.hl(1, x1, c.tr(2, x0, u1) + c.tl(3, u1, x0))))
_M("BZ63", "Z1 V0 V1", lambda c, x1, u0, u1: (
    c.hl(1, c.hl(3, x1, u0), u1),
    c.hl(1, x1, c.st(2, u0, u1) + c.st(3, u1, u0))))
_M("BZ64", "V1 Z0 V1", lambda c, u1, x0, v1: (
    c.hl(1, c.hr(3, u1, x0), v1),
    c.hr(1, u1, c.hl(2, x0, v1) + c.hr(3, v1, x0))))
_M("BZ65", "Z1 Z0 V1", lambda c, x1, x0, u1: (
    c.tr(1, c.dot(x1, x0), u1),
    c.tr(1, x1, c.tr(2, x0, u1) + c.tl(3, u1, x0))))
_M("BZ66", "Z1 V0 V1", lambda c, x1, u0, u1: (
    c.tr(1, c.hl(3, x1, u0), u1) + c.st(1, c.tr(3, x1, u0), u1),
    c.tr(1, x1, c.st(2, u0, u1) + c.st(3, u1, u0))))
_M("BZ67", "V1 Z0 V1", lambda c, u1, x0, v1: (
    c.tr(1, c.hr(3, u1, x0), v1) + c.st(1, c.tl(3, u1, x0), v1),
    c.tl(1, u1, c.hl(2, x0, v1) + c.hr(3, v1, x0)) + c.st(1, u1, c.tr(2, x0, v1) + c.tl(3, v1, x0))))
_M("BZ68", "Z1 V0 Z1", lambda c, x1, u0, y1: (
    c.tl(1, c.tr(3, x1, u0), y1),
    c.tr(1, x1, c.tl(2, u0, y1) + c.tr(3, y1, u0))))
_M("BZ69", "V1 Z0 Z1", lambda c, u1, x0, x1: (
    c.tl(1, c.tl(3, u1, x0), x1),
    c.tl(1, u1, c.dot(x0, x1) + c.dot(x1, x0))))
_M("BZ70", "V1 V0 Z1", lambda c, u1, u0, x1: (
    c.tl(1, c.st(3, u1, u0), x1),
    c.tl(1, u1, c.hr(2, u0, x1) + c.hl(3, x1, u0)) + c.st(1, u1, c.tl(2, u0, x1) + c.tr(3, x1, u0))))
_M("BZ71", "Z1 V1 Z0", lambda c, x1, u1, x0: (
    c.dot(c.hl(1, x1, u1), x0) + c.hr(3, c.tr(1, x1, u1), x0),
    c.dot(x1, c.hr(3, u1, x0) + c.hl(2, x0, u1)) + c.hl(1, x1, c.tl(3, u1, x0) + c.tr(2, x0, u1))))
_M("BZ72", "V1 Z1 Z0", lambda c, u1, x1, x0: (
    c.dot(c.hr(1, u1, x1), x0) + c.hr(3, c.tl(1, u1, x1), x0),
    c.hr(1, u1, c.dot(x1, x0) + c.dot(x0, x1))))
_M("BZ73", "V1 V1 Z0", lambda c, u1, v1, x0: (
    c.hr(3, c.st(1, u1, v1), x0),
    c.hr(1, u1, c.hr(3, v1, x0) + c.hl(2, x0, v1))))
_M("BZ74", "Z1 Z1 V0", lambda c, x1, y1, u0: (
    c.hl(3, c.dot(x1, y1), u0),
    c.dot(x1, c.hl(3, y1, u0) + c.hr(2, u0, y1)) + c.hl(1, x1, c.tr(3, y1, u0) + c.tl(2, u0, y1))))
_M("BZ75", "Z1 V1 V0", lambda c, x1, u1, u0: (
    c.hl(3, c.hl(1, x1, u1), u0),
    c.hl(1, x1, c.st(3, u1, u0) + c.st(2, u0, u1))))
_M("BZ76", "V1 Z1 V0", lambda c, u1, x1, u0: (
    c.hl(3, c.hr(1, u1, x1), u0),
    c.hr(1, u1, c.hl(3, x1, u0) + c.hr(2, u0, x1))))
_M("BZ77", "Z1 Z1 V0", lambda c, x1, y1, u0: (
    c.tr(3, c.dot(x1, y1), u0),
    c.tr(1, x1, c.tr(3, y1, u0) + c.tl(2, u0, y1))))
_M("BZ78", "Z1 V1 V0", lambda c, x1, u1, u0: (
    c.tr(3, c.hl(1, x1, u1), u0) + c.st(3, c.tr(1, x1, u1), u0),
    c.tr(1, x1, c.st(3, u1, u0) + c.st(2, u0, u1))))
_M("BZ79", "V1 Z1 V0", lambda c, u1, x1, u0: (
    c.tr(3, c.hr(1, u1, x1), u0) + c.st(3, c.tl(1, u1, x1), u0),
    c.tl(1, u1, c.hl(3, x1, u0) + c.hr(2, u0, x1)) + c.st(1, u1, c.tr(3, x1, u0) + c.tl(2, u0, x1))))
_M("BZ80", "Z1 V1 Z0", lambda c, x1, u1, x0: (
    c.tl(3, c.tr(1, x1, u1), x0),
    c.tr(1, x1, c.tl(3, u1, x0) + c.tr(2, x0, u1))))
_M("BZ81", "V1 Z1 Z0", lambda c, u1, x1, x0: (
    c.tl(3, c.tl(1, u1, x1), x0),
    c.tl(1, u1, c.dot(x1, x0) + c.dot(x0, x1))))
_M("BZ82", "V1 V1 Z0", lambda c, u1, v1, x0: (
    c.tl(3, c.st(1, u1, v1), x0),
    c.tl(1, u1, c.hr(3, v1, x0) + c.hl(2, x0, v1)) + c.st(1, u1, c.tl(3, v1, x0) + c.tr(2, x0, v1))))
_M("BZ83", "Z0 V1", lambda c, x0, u1: (
    c.phi(c.hl(2, x0, u1)) + c.sig(c.tr(2, x0, u1)),
    c.dot(x0, c.sig(u1)) + c.hl(0, x0, c.d(u1))))
_M("BZ84", "V0 Z1", lambda c, u0, x1: (
    c.phi(c.hr(2, u0, x1)) + c.sig(c.tl(2, u0, x1)),
    c.hr(0, u0, c.phi(x1))))
_M("BZ85", "V0 V1", lambda c, u0, u1: (
    c.sig(c.st(2, u0, u1)),
    c.hr(0, u0, c.sig(u1))))
_M("BZ86", "Z0 V1", lambda c, x0, u1: (
    c.d(c.tr(2, x0, u1)),
    c.tr(0, x0, c.d(u1))))
_M("BZ87", "V0 Z1", lambda c, u0, x1: (
    c.d(c.tl(2, u0, x1)),
    c.tl(0, u0, c.phi(x1))))
_M("BZ88", "V0 V1", lambda c, u0, u1: (
    c.d(c.st(2, u0, u1)),
    c.tl(0, u0, c.sig(u1)) + c.st(0, u0, c.d(u1))))
_M("BZ89", "Z1 V0", lambda c, x1, u0: (
    c.phi(c.hl(3, x1, u0)) + c.sig(c.tr(3, x1, u0)),
    c.hl(0, c.phi(x1), u0)))
_M("BZ90", "V1 Z0", lambda c, u1, x0: (
    c.phi(c.hr(3, u1, x0)) + c.sig(c.tl(3, u1, x0)),
    c.dot(c.sig(u1), x0) + c.hr(0, c.d(u1), x0)))
_M("BZ91", "V1 V0", lambda c, u1, u0: (
    c.sig(c.st(3, u1, u0)),
    c.hl(0, c.sig(u1), u0)))
_M("BZ92", "Z1 V0", lambda c, x1, u0: (
    c.d(c.tr(3, x1, u0)),
    c.tr(0, c.phi(x1), u0)))
_M("BZ93", "V1 Z0", lambda c, u1, x0: (
    c.d(c.tl(3, u1, x0)),
    c.tl(0, c.d(u1), x0)))
_M("BZ94", "V1 V0", lambda c, u1, u0: (
    c.d(c.st(3, u1, u0)),
    c.tr(0, c.sig(u1), u0) + c.st(0, c.d(u1), u0)))
_M("BZ95", "V1 Z1", lambda c, u1, x1: (
    c.dot(c.sig(u1), x1) + c.hr(2, c.d(u1), x1),
    c.hr(1, u1, x1)))
_M("BZ96", "Z1 V1", lambda c, x1, u1: (
    c.hl(2, c.phi(x1), u1),
    c.hl(1, x1, u1)))
_M("BZ97", "V1 V1", lambda c, u1, v1: (
    c.hl(2, c.sig(u1), v1),
    c.zero("Z1")))
_M("BZ98", "Z1 V1", lambda c, x1, u1: (
    c.tr(2, c.phi(x1), u1),
    c.tr(1, x1, u1)))
_M("BZ99", "V1 V1", lambda c, u1, v1: (
    c.tr(2, c.sig(u1), v1) + c.st(2, c.d(u1), v1),
    c.st(1, u1, v1)))
_M("BZ100", "V1 Z1", lambda c, u1, x1: (
    c.tl(2, c.d(u1), x1),
    c.tl(1, u1, x1)))
_M("BZ101", "Z1 V1", lambda c, x1, u1: (
    c.dot(x1, c.sig(u1)) + c.hl(3, x1, c.d(u1)),
    c.hl(1, x1, u1)))
_M("BZ102", "V1 Z1", lambda c, u1, x1: (
    c.hr(3, u1, c.phi(x1)),
    c.hr(1, u1, x1)))
_M("BZ103", "V1 V1", lambda c, u1, v1: (
    c.hr(3, u1, c.sig(v1)),
    c.zero("Z1")))
_M("BZ104", "Z1 V1", lambda c, x1, u1: (
    c.tr(3, x1, c.d(u1)),
    c.tr(1, x1, u1)))
_M("BZ105", "V1 Z1", lambda c, u1, x1: (
    c.tl(3, u1, c.phi(x1)),
    c.tl(1, u1, x1)))
_M("BZ106", "V1 V1", lambda c, u1, v1: (
    c.tl(3, u1, c.sig(v1)) + c.st(3, u1, c.d(v1)),
    c.st(1, u1, v1)))
