"""Compatibility-condition catalogs for extending data.

Z_TABLE (Z1..Z120) is the full criterion for an extending datum to produce a
valid 2-algebra; ZZ_TABLE (ZZ1..ZZ40) is its specialization to dim Z1 = 0.
Both are evaluated basis-tuple by basis-tuple and cross-validated against
the direct oracle (build the product, then check every axiom); agreement is
enforced by the test suite, and any entry kept in a corrected form carries a
typo-suspect flag together with the form it replaces.

Z1..Z12 hold at both levels i = 0, 1 and expand to one entry per level; the
three-identity bimodule family Z1 is split into Z1a/Z1b/Z1c.  Notation in
the lambdas: dot = level multiplication or the fixed Z-action (dispatched by
operand spaces), hr/hl = Z-valued cross maps, tr/tl = V-valued cross maps,
om = V x V -> Z, st = V x V -> V, sig: V1 -> Z0, d: V1 -> V0.
"""

from .engine import ConditionTable

Z_TABLE = ConditionTable("Z")
_L = Z_TABLE.add_leveled
_A = Z_TABLE.add

# -- level-indexed block: each level multiplication is Zinbiel ----------------

_L("Z1a", "Zi Zi Vi", lambda i: lambda c, x, y, w: (
    c.tr(i, c.dot(x, y), w),
    c.tr(i, x, c.tr(i, y, w) + c.tl(i, w, y))))
_L("Z1b", "Zi Vi Zi", lambda i: lambda c, x, v, z: (
    c.tl(i, c.tr(i, x, v), z),
    c.tr(i, x, c.tl(i, v, z) + c.tr(i, z, v))))
_L("Z1c", "Vi Zi Zi", lambda i: lambda c, u, y, z: (
    c.tl(i, c.tl(i, u, y), z),
    c.tl(i, u, c.dot(y, z) + c.dot(z, y))))
_L("Z2", "Zi Vi Zi", lambda i: lambda c, x, v, y: (
    c.dot(c.hl(i, x, v), y) + c.hr(i, c.tr(i, x, v), y),
    c.dot(x, c.hr(i, v, y) + c.hl(i, y, v)) + c.hl(i, x, c.tl(i, v, y) + c.tr(i, y, v))))
_L("Z3", "Vi Zi Zi", lambda i: lambda c, u, x, y: (
    c.dot(c.hr(i, u, x), y) + c.hr(i, c.tl(i, u, x), y),
    c.hr(i, u, c.dot(x, y) + c.dot(y, x))))
_L("Z4", "Vi Vi Zi", lambda i: lambda c, u, v, x: (
    c.dot(c.om(i, u, v), x) + c.hr(i, c.st(i, u, v), x),
    c.hr(i, u, c.hr(i, v, x) + c.hl(i, x, v)) + c.om(i, u, c.tl(i, v, x) + c.tr(i, x, v))))
_L("Z5", "Vi Vi Zi", lambda i: lambda c, u, v, x: (
    c.tl(i, c.st(i, u, v), x),
    c.tl(i, u, c.hr(i, v, x) + c.hl(i, x, v)) + c.st(i, u, c.tl(i, v, x) + c.tr(i, x, v))))
_L("Z6", "Zi Zi Vi", lambda i: lambda c, x, y, w: (
    c.hl(i, c.dot(x, y), w),
    c.dot(x, c.hl(i, y, w) + c.hr(i, w, y)) + c.hl(i, x, c.tr(i, y, w) + c.tl(i, w, y))))
_L("Z7", "Zi Vi Vi", lambda i: lambda c, x, v, w: (
    c.hl(i, c.hl(i, x, v), w) + c.om(i, c.tr(i, x, v), w),
    c.dot(x, c.om(i, v, w) + c.om(i, w, v)) + c.hl(i, x, c.st(i, v, w) + c.st(i, w, v))))
_L("Z8", "Zi Vi Vi", lambda i: lambda c, x, v, w: (
    c.tr(i, c.hl(i, x, v), w) + c.st(i, c.tr(i, x, v), w),
    c.tr(i, x, c.st(i, v, w) + c.st(i, w, v))))
_L("Z9", "Vi Zi Vi", lambda i: lambda c, u, x, w: (
    c.hl(i, c.hr(i, u, x), w) + c.om(i, c.tl(i, u, x), w),
    c.hr(i, u, c.hl(i, x, w) + c.hr(i, w, x)) + c.om(i, u, c.tl(i, w, x) + c.tr(i, x, w))))
_L("Z10", "Vi Zi Vi", lambda i: lambda c, u, x, w: (
    c.tr(i, c.hr(i, u, x), w) + c.st(i, c.tl(i, u, x), w),
    c.tl(i, u, c.hl(i, x, w) + c.hr(i, w, x)) + c.st(i, u, c.tr(i, x, w) + c.tl(i, w, x))))
_L("Z11", "Vi Vi Vi", lambda i: lambda c, u, v, w: (
    c.hl(i, c.om(i, u, v), w) + c.om(i, c.st(i, u, v), w),
    c.hr(i, u, c.om(i, v, w) + c.om(i, w, v)) + c.om(i, u, c.st(i, v, w) + c.st(i, w, v))))
_L("Z12", "Vi Vi Vi", lambda i: lambda c, u, v, w: (
    c.tr(i, c.om(i, u, v), w) + c.st(i, c.st(i, u, v), w),
    c.tl(i, u, c.om(i, v, w) + c.om(i, w, v)) + c.st(i, u, c.st(i, v, w) + c.st(i, w, v))))

# -- the left action is compatible with the level-1 multiplication ------------

_A("Z13", "Z0 Z1 V1", lambda c, x0, x1, u1: (
    c.hl(1, c.dot(x0, x1), u1),
    c.dot(x0, c.hl(1, x1, u1) + c.hr(1, u1, x1)) + c.hl(2, x0, c.tr(1, x1, u1) + c.tl(1, u1, x1))))
_A("Z14", "Z0 V1 Z1", lambda c, x0, u1, x1: (
    c.dot(c.hl(2, x0, u1), x1) + c.hr(1, c.tr(2, x0, u1), x1),
    c.dot(x0, c.hr(1, u1, x1) + c.hl(1, x1, u1)) + c.hl(2, x0, c.tl(1, u1, x1) + c.tr(1, x1, u1))))
_A("Z15", "Z0 V1 V1", lambda c, x0, u1, v1: (
    c.hl(1, c.hl(2, x0, u1), v1) + c.om(1, c.tr(2, x0, u1), v1),
    c.dot(x0, c.om(1, u1, v1) + c.om(1, v1, u1)) + c.hl(2, x0, c.st(1, u1, v1) + c.st(1, v1, u1))))
_A("Z16", "V0 Z1 Z1", lambda c, u0, x1, y1: (
    c.dot(c.hr(2, u0, x1), y1) + c.hr(1, c.tl(2, u0, x1), y1),
    c.hr(2, u0, c.dot(x1, y1) + c.dot(y1, x1))))
_A("Z17", "V0 Z1 V1", lambda c, u0, x1, u1: (
    c.hl(1, c.hr(2, u0, x1), u1) + c.om(1, c.tl(2, u0, x1), u1),
    c.hr(2, u0, c.hl(1, x1, u1) + c.hr(1, u1, x1)) + c.om(2, u0, c.tr(1, x1, u1) + c.tl(1, u1, x1))))
_A("Z18", "V0 V1 Z1", lambda c, u0, u1, x1: (
    c.dot(c.om(2, u0, u1), x1) + c.hr(1, c.st(2, u0, u1), x1),
    c.hr(2, u0, c.hr(1, u1, x1) + c.hl(1, x1, u1)) + c.om(2, u0, c.tl(1, u1, x1) + c.tr(1, x1, u1))))
_A("Z19", "V0 V1 V1", lambda c, u0, u1, v1: (
    c.hl(1, c.om(2, u0, u1), v1) + c.om(1, c.st(2, u0, u1), v1),
    c.hr(2, u0, c.om(1, u1, v1) + c.om(1, v1, u1)) + c.om(2, u0, c.st(1, u1, v1) + c.st(1, v1, u1))))
_A("Z20", "Z0 Z1 V1", lambda c, x0, x1, u1: (
    c.tr(1, c.dot(x0, x1), u1),
    c.tr(2, x0, c.tr(1, x1, u1) + c.tl(1, u1, x1))))
_A("Z21", "Z0 V1 Z1", lambda c, x0, u1, y1: (
    c.tl(1, c.tr(2, x0, u1), y1),
    c.tr(2, x0, c.tl(1, u1, y1) + c.tr(1, y1, u1))))
_A("Z22", "Z0 V1 V1", lambda c, x0, u1, v1: (
    c.tr(1, c.hl(2, x0, u1), v1) + c.st(1, c.tr(2, x0, u1), v1),
    c.tr(2, x0, c.st(1, u1, v1) + c.st(1, v1, u1))))
_A("Z23", "V0 Z1 Z1", lambda c, u0, x1, y1: (
    c.tl(1, c.tl(2, u0, x1), y1),
    c.tl(2, u0, c.dot(x1, y1) + c.dot(y1, x1))))
_A("Z24", "V0 Z1 V1", lambda c, u0, x1, u1: (
    c.tr(1, c.hr(2, u0, x1), u1) + c.st(1, c.tl(2, u0, x1), u1),
    c.tl(2, u0, c.hl(1, x1, u1) + c.hr(1, u1, x1)) + c.st(2, u0, c.tr(1, x1, u1) + c.tl(1, u1, x1))))
_A("Z25", "V0 V1 Z1", lambda c, u0, u1, x1: (
    c.tl(1, c.st(2, u0, u1), x1),
    c.tl(2, u0, c.hr(1, u1, x1) + c.hl(1, x1, u1)) + c.st(2, u0, c.tl(1, u1, x1) + c.tr(1, x1, u1))))
_A("Z26", "V0 V1 V1", lambda c, u0, u1, v1: (
    c.tr(1, c.om(2, u0, u1), v1) + c.st(1, c.st(2, u0, u1), v1),
    c.tl(2, u0, c.om(1, u1, v1) + c.om(1, v1, u1)) + c.st(2, u0, c.st(1, u1, v1) + c.st(1, v1, u1))))

# -- the level-0 multiplication is compatible with the left action ------------

_A("Z27", "Z0 V0 Z1", lambda c, x0, u0, x1: (
    c.dot(c.hl(0, x0, u0), x1) + c.hr(2, c.tr(0, x0, u0), x1),
    c.dot(x0, c.hr(2, u0, x1) + c.hl(3, x1, u0)) + c.hl(2, x0, c.tl(2, u0, x1) + c.tr(3, x1, u0))))
_A("Z28", "V0 Z0 Z1", lambda c, u0, x0, x1: (
    c.dot(c.hr(0, u0, x0), x1) + c.hr(2, c.tl(0, u0, x0), x1),
    c.hr(2, u0, c.dot(x0, x1) + c.dot(x1, x0))))
_A("Z29", "V0 V0 Z1", lambda c, u0, v0, x1: (
    c.dot(c.om(0, u0, v0), x1) + c.hr(2, c.st(0, u0, v0), x1),
    c.hr(2, u0, c.hr(2, v0, x1) + c.hl(3, x1, v0)) + c.om(2, u0, c.tl(2, v0, x1) + c.tr(3, x1, v0))))
_A("Z30", "Z0 Z0 V1", lambda c, x0, y0, u1: (
    c.hl(2, c.dot(x0, y0), u1),
    c.dot(x0, c.hl(2, y0, u1) + c.hr(3, u1, y0)) + c.hl(2, x0, c.tr(2, y0, u1) + c.tl(3, u1, y0))))
_A("Z31", "Z0 V0 V1", lambda c, x0, u0, u1: (
    c.hl(2, c.hl(0, x0, u0), u1) + c.om(2, c.tr(0, x0, u0), u1),
    c.dot(x0, c.om(2, u0, u1) + c.om(3, u1, u0)) + c.hl(2, x0, c.st(2, u0, u1) + c.st(3, u1, u0))))
_A("Z32", "V0 Z0 V1", lambda c, u0, x0, u1: (
    c.hl(2, c.hr(0, u0, x0), u1) + c.om(2, c.tl(0, u0, x0), u1),
    c.hr(2, u0, c.hl(2, x0, u1) + c.hr(3, u1, x0)) + c.om(2, u0, c.tr(2, x0, u1) + c.tl(3, u1, x0))))
_A("Z33", "V0 V0 V1", lambda c, u0, v0, u1: (
    c.hl(2, c.om(0, u0, v0), u1) + c.om(2, c.st(0, u0, v0), u1),
    c.hr(2, u0, c.om(2, v0, u1) + c.om(3, u1, v0)) + c.om(2, u0, c.st(2, v0, u1) + c.st(3, u1, v0))))
_A("Z34", "Z0 Z0 V1", lambda c, x0, y0, u1: (
    c.tr(2, c.dot(x0, y0), u1),
    c.tr(2, x0, c.tr(2, y0, u1) + c.tl(3, u1, y0))))
_A("Z35", "Z0 V0 V1", lambda c, x0, u0, u1: (
    c.tr(2, c.hl(0, x0, u0), u1) + c.st(2, c.tr(0, x0, u0), u1),
    c.tr(2, x0, c.st(2, u0, u1) + c.st(3, u1, u0))))
_A("Z36", "V0 Z0 V1", lambda c, u0, x0, u1: (
    c.tr(2, c.hr(0, u0, x0), u1) + c.st(2, c.tl(0, u0, x0), u1),
    c.tl(2, u0, c.hl(2, x0, u1) + c.hr(3, u1, x0)) + c.st(2, u0, c.tr(2, x0, u1) + c.tl(3, u1, x0))))
_A("Z37", "V0 V0 V1", lambda c, u0, v0, u1: (
    c.tr(2, c.om(0, u0, v0), u1) + c.st(2, c.st(0, u0, v0), u1),
    c.tl(2, u0, c.om(2, v0, u1) + c.om(3, u1, v0)) + c.st(2, u0, c.st(2, v0, u1) + c.st(3, u1, v0))))
_A("Z38", "Z0 V0 Z1", lambda c, x0, u0, x1: (
    c.tl(2, c.tr(0, x0, u0), x1),
    c.tr(2, x0, c.tl(2, u0, x1) + c.tr(3, x1, u0))))
_A("Z39", "V0 Z0 Z1", lambda c, u0, x0, x1: (
    c.tl(2, c.tl(0, u0, x0), x1),
    c.tl(2, u0, c.dot(x0, x1) + c.dot(x1, x0))))
_A("Z40", "V0 V0 Z1", lambda c, u0, v0, x1: (
    c.tl(2, c.st(0, u0, v0), x1),
    c.tl(2, u0, c.hr(2, v0, x1) + c.hl(3, x1, v0)) + c.st(2, u0, c.tl(2, v0, x1) + c.tr(3, x1, v0))))

# -- the right action is compatible with the level-0 multiplication -----------

_A("Z41", "Z1 V0 Z0", lambda c, x1, u0, x0: (
    c.dot(c.hl(3, x1, u0), x0) + c.hr(3, c.tr(3, x1, u0), x0),
    c.dot(x1, c.hr(0, u0, x0) + c.hl(0, x0, u0)) + c.hl(3, x1, c.tl(0, u0, x0) + c.tr(0, x0, u0))))
_A("Z42", "V1 Z0 Z0", lambda c, u1, x0, y0: (
    c.dot(c.hr(3, u1, x0), y0) + c.hr(3, c.tl(3, u1, x0), y0),
    c.hr(3, u1, c.dot(x0, y0) + c.dot(y0, x0))))
_A("Z43", "V1 V0 Z0", lambda c, u1, u0, x0: (
    c.dot(c.om(3, u1, u0), x0) + c.hr(3, c.st(3, u1, u0), x0),
    c.hr(3, u1, c.hr(0, u0, x0) + c.hl(0, x0, u0)) + c.om(3, u1, c.tl(0, u0, x0) + c.tr(0, x0, u0))))
_A("Z44", "Z1 Z0 V0", lambda c, x1, x0, u0: (
    c.hl(3, c.dot(x1, x0), u0),
    c.dot(x1, c.hl(0, x0, u0) + c.hr(0, u0, x0)) + c.hl(3, x1, c.tr(0, x0, u0) + c.tl(0, u0, x0))))
_A("Z45", "Z1 V0 V0", lambda c, x1, u0, v0: (
    c.hl(3, c.hl(3, x1, u0), v0) + c.om(3, c.tr(3, x1, u0), v0),
    c.dot(x1, c.om(0, u0, v0) + c.om(0, v0, u0)) + c.hl(3, x1, c.st(0, u0, v0) + c.st(0, v0, u0))))
_A("Z46", "V1 Z0 V0", lambda c, u1, x0, u0: (
    c.hl(3, c.hr(3, u1, x0), u0) + c.om(3, c.tl(3, u1, x0), u0),
    c.hr(3, u1, c.hl(0, x0, u0) + c.hr(0, u0, x0)) + c.om(3, u1, c.tr(0, x0, u0) + c.tl(0, u0, x0))))
_A("Z47", "V1 V0 V0", lambda c, u1, u0, v0: (
    c.hl(3, c.om(3, u1, u0), v0) + c.om(3, c.st(3, u1, u0), v0),
    c.hr(3, u1, c.om(0, u0, v0) + c.om(0, v0, u0)) + c.om(3, u1, c.st(0, u0, v0) + c.st(0, v0, u0))))
_A("Z48", "Z1 Z0 V0", lambda c, x1, x0, u0: (
    c.tr(3, c.dot(x1, x0), u0),
    c.tr(3, x1, c.tr(0, x0, u0) + c.tl(0, u0, x0))))
_A("Z49", "Z1 V0 V0", lambda c, x1, u0, v0: (
    c.tr(3, c.hl(3, x1, u0), v0) + c.st(3, c.tr(3, x1, u0), v0),
    c.tr(3, x1, c.st(0, u0, v0) + c.st(0, v0, u0))))
_A("Z50", "V1 Z0 V0", lambda c, u1, x0, u0: (
    c.tr(3, c.hr(3, u1, x0), u0) + c.st(3, c.tl(3, u1, x0), u0),
    c.tl(3, u1, c.hl(0, x0, u0) + c.hr(0, u0, x0)) + c.st(3, u1, c.tr(0, x0, u0) + c.tl(0, u0, x0))))
_A("Z51", "V1 V0 V0", lambda c, u1, u0, v0: (
    c.tr(3, c.om(3, u1, u0), v0) + c.st(3, c.st(3, u1, u0), v0),
    c.tl(3, u1, c.om(0, u0, v0) + c.om(0, v0, u0)) + c.st(3, u1, c.st(0, u0, v0) + c.st(0, v0, u0))))
_A("Z52", "Z1 V0 Z0", lambda c, x1, u0, x0: (
    c.tl(3, c.tr(3, x1, u0), x0),
    c.tr(3, x1, c.tl(0, u0, x0) + c.tr(0, x0, u0))))
_A("Z53", "V1 Z0 Z0", lambda c, u1, x0, y0: (
    c.tl(3, c.tl(3, u1, x0), y0),
    c.tl(3, u1, c.dot(x0, y0) + c.dot(y0, x0))))
_A("Z54", "V1 V0 Z0", lambda c, u1, u0, x0: (
    c.tl(3, c.st(3, u1, u0), x0),
    c.tl(3, u1, c.hr(0, u0, x0) + c.hl(0, x0, u0)) + c.st(3, u1, c.tl(0, u0, x0) + c.tr(0, x0, u0))))

# -- mixed: right action of a left-action value -------------------------------

_A("Z55", "Z0 V1 Z0", lambda c, x0, u1, y0: (
    c.dot(c.hl(2, x0, u1), y0) + c.hr(3, c.tr(2, x0, u1), y0),
    c.dot(x0, c.hr(3, u1, y0) + c.hl(2, y0, u1)) + c.hl(2, x0, c.tl(3, u1, y0) + c.tr(2, y0, u1))))
_A("Z56", "V0 Z1 Z0", lambda c, u0, x1, y0: (
    c.dot(c.hr(2, u0, x1), y0) + c.hr(3, c.tl(2, u0, x1), y0),
    c.hr(2, u0, c.dot(x1, y0) + c.dot(y0, x1))))
_A("Z57", "V0 V1 Z0", lambda c, u0, u1, x0: (
    c.dot(c.om(2, u0, u1), x0) + c.hr(3, c.st(2, u0, u1), x0),
    c.hr(2, u0, c.hr(3, u1, x0) + c.hl(2, x0, u1)) + c.om(2, u0, c.tl(3, u1, x0) + c.tr(2, x0, u1))))
_A("Z58", "Z0 Z1 V0", lambda c, x0, x1, u0: (
    c.hl(3, c.dot(x0, x1), u0),
    c.dot(x0, c.hl(3, x1, u0) + c.hr(2, u0, x1)) + c.hl(2, x0, c.tr(3, x1, u0) + c.tl(2, u0, x1))))
_A("Z59", "Z0 V1 V0", lambda c, x0, u1, v0: (
    c.hl(3, c.hl(2, x0, u1), v0) + c.om(3, c.tr(2, x0, u1), v0),
    c.dot(x0, c.om(3, u1, v0) + c.om(2, v0, u1)) + c.hl(2, x0, c.st(3, u1, v0) + c.st(2, v0, u1))))
_A("Z60", "V0 Z1 V0", lambda c, u0, x1, v0: (
    c.hl(3, c.hr(2, u0, x1), v0) + c.om(3, c.tl(2, u0, x1), v0),
    c.hr(2, u0, c.hl(3, x1, v0) + c.hr(2, v0, x1)) + c.om(2, u0, c.tr(3, x1, v0) + c.tl(2, v0, x1))))
_A("Z61", "V0 V1 V0", lambda c, u0, u1, v0: (
    c.hl(3, c.om(2, u0, u1), v0) + c.om(3, c.st(2, u0, u1), v0),
    c.hr(2, u0, c.om(3, u1, v0) + c.om(2, v0, u1)) + c.om(2, u0, c.st(3, u1, v0) + c.st(2, v0, u1))))
_A("Z62", "Z0 Z1 V0", lambda c, x0, x1, u0: (
    c.tr(3, c.dot(x0, x1), u0),
    c.tr(2, x0, c.tr(3, x1, u0) + c.tl(2, u0, x1))))
_A("Z63", "Z0 V1 V0", lambda c, x0, u1, v0: (
    c.tr(3, c.hl(2, x0, u1), v0) + c.st(3, c.tr(2, x0, u1), v0),
    c.tr(2, x0, c.st(3, u1, v0) + c.st(2, v0, u1))))
_A("Z64", "V0 Z1 V0", lambda c, u0, x1, v0: (
    c.tr(3, c.hr(2, u0, x1), v0) + c.st(3, c.tl(2, u0, x1), v0),
    c.tl(2, u0, c.hl(3, x1, v0) + c.hr(2, v0, x1)) + c.st(2, u0, c.tr(3, x1, v0) + c.tl(2, v0, x1))))
_A("Z65", "V0 V1 V0", lambda c, u0, u1, v0: (
    c.tr(3, c.om(2, u0, u1), v0) + c.st(3, c.st(2, u0, u1), v0),
    c.tl(2, u0, c.om(3, u1, v0) + c.om(2, v0, u1)) + c.st(2, u0, c.st(3, u1, v0) + c.st(2, v0, u1))))
_A("Z66", "Z0 V1 Z0", lambda c, x0, u1, y0: (
    c.tl(3, c.tr(2, x0, u1), y0),
    c.tr(2, x0, c.tl(3, u1, y0) + c.tr(2, y0, u1))))
_A("Z67", "V0 Z1 Z0", lambda c, u0, x1, y0: (
    c.tl(3, c.tl(2, u0, x1), y0),
    c.tl(2, u0, c.dot(x1, y0) + c.dot(y0, x1))))
_A("Z68", "V0 V1 Z0", lambda c, u0, u1, y0: (
    c.tl(3, c.st(2, u0, u1), y0),
    c.tl(2, u0, c.hr(3, u1, y0) + c.hl(2, y0, u1)) + c.st(2, u0, c.tl(3, u1, y0) + c.tr(2, y0, u1))))

# -- mixed: level-1 multiplication of a right-action value --------------------

_A("Z69", "Z1 V0 Z1", lambda c, x1, u0, y1: (
    c.dot(c.hl(3, x1, u0), y1) + c.hr(1, c.tr(3, x1, u0), y1),
    c.dot(x1, c.hr(2, u0, y1) + c.hl(3, y1, u0)) + c.hl(1, x1, c.tl(2, u0, y1) + c.tr(3, y1, u0))))
_A("Z70", "V1 Z0 Z1", lambda c, u1, x0, x1: (
    c.dot(c.hr(3, u1, x0), x1) + c.hr(1, c.tl(3, u1, x0), x1),
    c.hr(1, u1, c.dot(x0, x1) + c.dot(x1, x0))))
_A("Z71", "V1 V0 Z1", lambda c, u1, u0, x1: (
    c.dot(c.om(3, u1, u0), x1) + c.hr(1, c.st(3, u1, u0), x1),
    c.hr(1, u1, c.hr(2, u0, x1) + c.hl(3, x1, u0)) + c.om(1, u1, c.tl(2, u0, x1) + c.tr(3, x1, u0))))
_A("Z72", "Z1 Z0 V1", lambda c, x1, x0, u1: (
    c.hl(1, c.dot(x1, x0), u1),
    c.dot(x1, c.hl(2, x0, u1) + c.hr(3, u1, x0)) + c.hl(1, x1, c.tr(2, x0, u1) + c.tl(3, u1, x0))))
_A("Z73", "Z1 V0 V1", lambda c, x1, u0, u1: (
    c.hl(1, c.hl(3, x1, u0), u1) + c.om(1, c.tr(3, x1, u0), u1),
    c.dot(x1, c.om(2, u0, u1) + c.om(3, u1, u0)) + c.hl(1, x1, c.st(2, u0, u1) + c.st(3, u1, u0))))
_A("Z74", "V1 Z0 V1", lambda c, u1, x0, v1: (
    c.hl(1, c.hr(3, u1, x0), v1) + c.om(1, c.tl(3, u1, x0), v1),
    c.hr(1, u1, c.hl(2, x0, v1) + c.hr(3, v1, x0)) + c.om(1, u1, c.tr(2, x0, v1) + c.tl(3, v1, x0))))
_A("Z75", "V1 V0 V1", lambda c, u1, u0, v1: (
    c.hl(1, c.om(3, u1, u0), v1) + c.om(1, c.st(3, u1, u0), v1),
    c.hr(1, u1, c.om(2, u0, v1) + c.om(3, v1, u0)) + c.om(1, u1, c.st(2, u0, v1) + c.st(3, v1, u0))))
_A("Z76", "Z1 Z0 V1", lambda c, x1, x0, u1: (
    c.tr(1, c.dot(x1, x0), u1),
    c.tr(1, x1, c.tr(2, x0, u1) + c.tl(3, u1, x0))))
_A("Z77", "Z1 V0 V1", lambda c, x1, u0, u1: (
    c.tr(1, c.hl(3, x1, u0), u1) + c.st(1, c.tr(3, x1, u0), u1),
    c.tr(1, x1, c.st(2, u0, u1) + c.st(3, u1, u0))))
_A("Z78", "V1 Z0 V1", lambda c, u1, x0, v1: (
    c.tr(1, c.hr(3, u1, x0), v1) + c.st(1, c.tl(3, u1, x0), v1),
    c.tl(1, u1, c.hl(2, x0, v1) + c.hr(3, v1, x0)) + c.st(1, u1, c.tr(2, x0, v1) + c.tl(3, v1, x0))))
_A("Z79", "V1 V0 V1", lambda c, u1, u0, v1: (
    c.tr(1, c.om(3, u1, u0), v1) + c.st(1, c.st(3, u1, u0), v1),
    c.tl(1, u1, c.om(2, u0, v1) + c.om(3, v1, u0)) + c.st(1, u1, c.st(2, u0, v1) + c.st(3, v1, u0))))
_A("Z80", "Z1 V0 Z1", lambda c, x1, u0, y1: (
    c.tl(1, c.tr(3, x1, u0), y1),
    c.tr(1, x1, c.tl(2, u0, y1) + c.tr(3, y1, u0))))
_A("Z81", "V1 Z0 Z1", lambda c, u1, x0, x1: (
    c.tl(1, c.tl(3, u1, x0), x1),
    c.tl(1, u1, c.dot(x0, x1) + c.dot(x1, x0))))
_A("Z82", "V1 V0 Z1", lambda c, u1, u0, x1: (
    c.tl(1, c.st(3, u1, u0), x1),
    c.tl(1, u1, c.hr(2, u0, x1) + c.hl(3, x1, u0)) + c.st(1, u1, c.tl(2, u0, x1) + c.tr(3, x1, u0))))

# -- mixed: right action of a level-1 product ---------------------------------

_A("Z83", "Z1 V1 Z0", lambda c, x1, u1, x0: (
    c.dot(c.hl(1, x1, u1), x0) + c.hr(3, c.tr(1, x1, u1), x0),
    c.dot(x1, c.hr(3, u1, x0) + c.hl(2, x0, u1)) + c.hl(1, x1, c.tl(3, u1, x0) + c.tr(2, x0, u1))))
_A("Z84", "V1 Z1 Z0", lambda c, u1, x1, x0: (
    c.dot(c.hr(1, u1, x1), x0) + c.hr(3, c.tl(1, u1, x1), x0),
    c.hr(1, u1, c.dot(x1, x0) + c.dot(x0, x1))))
_A("Z85", "V1 V1 Z0", lambda c, u1, v1, x0: (
    c.dot(c.om(1, u1, v1), x0) + c.hr(3, c.st(1, u1, v1), x0),
    c.hr(1, u1, c.hr(3, v1, x0) + c.hl(2, x0, v1)) + c.om(1, u1, c.tl(3, v1, x0) + c.tr(2, x0, v1))))
_A("Z86", "Z1 Z1 V0", lambda c, x1, y1, u0: (
    c.hl(3, c.dot(x1, y1), u0),
    c.dot(x1, c.hl(3, y1, u0) + c.hr(2, u0, y1)) + c.hl(1, x1, c.tr(3, y1, u0) + c.tl(2, u0, y1))))
_A("Z87", "Z1 V1 V0", lambda c, x1, u1, u0: (
    c.hl(3, c.hl(1, x1, u1), u0) + c.om(3, c.tr(1, x1, u1), u0),
    c.dot(x1, c.om(3, u1, u0) + c.om(2, u0, u1)) + c.hl(1, x1, c.st(3, u1, u0) + c.st(2, u0, u1))))
_A("Z88", "V1 Z1 V0", lambda c, u1, x1, u0: (
    c.hl(3, c.hr(1, u1, x1), u0) + c.om(3, c.tl(1, u1, x1), u0),
    c.hr(1, u1, c.hl(3, x1, u0) + c.hr(2, u0, x1)) + c.om(1, u1, c.tr(3, x1, u0) + c.tl(2, u0, x1))))
_A("Z89", "V1 V1 V0", lambda c, u1, v1, u0: (
    c.hl(3, c.om(1, u1, v1), u0) + c.om(3, c.st(1, u1, v1), u0),
    c.hr(1, u1, c.om(3, v1, u0) + c.om(2, u0, v1)) + c.om(1, u1, c.st(3, v1, u0) + c.st(2, u0, v1))))
_A("Z90", "Z1 Z1 V0", lambda c, x1, y1, u0: (
    c.tr(3, c.dot(x1, y1), u0),
    c.tr(1, x1, c.tr(3, y1, u0) + c.tl(2, u0, y1))))
_A("Z91", "Z1 V1 V0", lambda c, x1, u1, u0: (
    c.tr(3, c.hl(1, x1, u1), u0) + c.st(3, c.tr(1, x1, u1), u0),
    c.tr(1, x1, c.st(3, u1, u0) + c.st(2, u0, u1))))
_A("Z92", "V1 Z1 V0", lambda c, u1, x1, u0: (
    c.tr(3, c.hr(1, u1, x1), u0) + c.st(3, c.tl(1, u1, x1), u0),
    c.tl(1, u1, c.hl(3, x1, u0) + c.hr(2, u0, x1)) + c.st(1, u1, c.tr(3, x1, u0) + c.tl(2, u0, x1))))
_A("Z93", "V1 V1 V0", lambda c, u1, v1, u0: (
    c.tr(3, c.om(1, u1, v1), u0) + c.st(3, c.st(1, u1, v1), u0),
    c.tl(1, u1, c.om(3, v1, u0) + c.om(2, u0, v1)) + c.st(1, u1, c.st(3, v1, u0) + c.st(2, u0, v1))))
_A("Z94", "Z1 V1 Z0", lambda c, x1, u1, x0: (
    c.tl(3, c.tr(1, x1, u1), x0),
    c.tr(1, x1, c.tl(3, u1, x0) + c.tr(2, x0, u1))))
_A("Z95", "V1 Z1 Z0", lambda c, u1, x1, x0: (
    c.tl(3, c.tl(1, u1, x1), x0),
    c.tl(1, u1, c.dot(x1, x0) + c.dot(x0, x1))))
_A("Z96", "V1 V1 Z0", lambda c, u1, v1, x0: (
    c.tl(3, c.st(1, u1, v1), x0),
    c.tl(1, u1, c.hr(3, v1, x0) + c.hl(2, x0, v1)) + c.st(1, u1, c.tl(3, v1, x0) + c.tr(2, x0, v1))))

# -- phi_E intertwines the left action with the level-0 multiplication --------

_A("Z97", "Z0 V1", lambda c, x0, u1: (
    c.phi(c.hl(2, x0, u1)) + c.sig(c.tr(2, x0, u1)),
    c.dot(x0, c.sig(u1)) + c.hl(0, x0, c.d(u1))))
_A("Z98", "V0 Z1", lambda c, u0, x1: (
    c.phi(c.hr(2, u0, x1)) + c.sig(c.tl(2, u0, x1)),
    c.hr(0, u0, c.phi(x1))))
_A("Z99", "V0 V1", lambda c, u0, u1: (
    c.phi(c.om(2, u0, u1)) + c.sig(c.st(2, u0, u1)),
    c.hr(0, u0, c.sig(u1)) + c.om(0, u0, c.d(u1))))
_A("Z100", "Z0 V1", lambda c, x0, u1: (
    c.d(c.tr(2, x0, u1)),
    c.tr(0, x0, c.d(u1))))
_A("Z101", "V0 Z1", lambda c, u0, x1: (
    c.d(c.tl(2, u0, x1)),
    c.tl(0, u0, c.phi(x1))))
_A("Z102", "V0 V1", lambda c, u0, u1: (
    c.d(c.st(2, u0, u1)),
    c.tl(0, u0, c.sig(u1)) + c.st(0, u0, c.d(u1))))

# -- phi_E intertwines the right action ---------------------------------------

_A("Z103", "Z1 V0", lambda c, x1, u0: (
    c.phi(c.hl(3, x1, u0)) + c.sig(c.tr(3, x1, u0)),
    c.hl(0, c.phi(x1), u0)))
_A("Z104", "V1 Z0", lambda c, u1, x0: (
    c.phi(c.hr(3, u1, x0)) + c.sig(c.tl(3, u1, x0)),
    c.dot(c.sig(u1), x0) + c.hr(0, c.d(u1), x0)))
_A("Z105", "V1 V0", lambda c, u1, u0: (
    c.phi(c.om(3, u1, u0)) + c.sig(c.st(3, u1, u0)),
    c.hl(0, c.sig(u1), u0) + c.om(0, c.d(u1), u0)))
_A("Z106", "Z1 V0", lambda c, x1, u0: (
    c.d(c.tr(3, x1, u0)),
    c.tr(0, c.phi(x1), u0)))
_A("Z107", "V1 Z0", lambda c, u1, x0: (
    c.d(c.tl(3, u1, x0)),
    c.tl(0, c.d(u1), x0)))
_A("Z108", "V1 V0", lambda c, u1, u0: (
    c.d(c.st(3, u1, u0)),
    c.tr(0, c.sig(u1), u0) + c.st(0, c.d(u1), u0)))

# -- the two Peiffer-style identities through phi_E ---------------------------

_A("Z109", "V1 Z1", lambda c, u1, x1: (
    c.dot(c.sig(u1), x1) + c.hr(2, c.d(u1), x1),
    c.hr(1, u1, x1)))
_A("Z110", "Z1 V1", lambda c, x1, u1: (
    c.hl(2, c.phi(x1), u1),
    c.hl(1, x1, u1)))
_A("Z111", "V1 V1", lambda c, u1, v1: (
    c.hl(2, c.sig(u1), v1) + c.om(2, c.d(u1), v1),
    c.om(1, u1, v1)))
_A("Z112", "Z1 V1", lambda c, x1, u1: (
    c.tr(2, c.phi(x1), u1),
    c.tr(1, x1, u1)))
_A("Z113", "V1 V1", lambda c, u1, v1: (
    c.tr(2, c.sig(u1), v1) + c.st(2, c.d(u1), v1),
    c.st(1, u1, v1)))
_A("Z114", "V1 Z1", lambda c, u1, x1: (
    c.tl(2, c.d(u1), x1),
    c.tl(1, u1, x1)))
_A("Z115", "Z1 V1", lambda c, x1, u1: (
    c.dot(x1, c.sig(u1)) + c.hl(3, x1, c.d(u1)),
    c.hl(1, x1, u1)))
_A("Z116", "V1 Z1", lambda c, u1, x1: (
    c.hr(3, u1, c.phi(x1)),
    c.hr(1, u1, x1)))
_A("Z117", "V1 V1", lambda c, u1, v1: (
    c.hr(3, u1, c.sig(v1)) + c.om(3, u1, c.d(v1)),
    c.om(1, u1, v1)))
_A("Z118", "Z1 V1", lambda c, x1, u1: (
    c.tr(3, x1, c.d(u1)),
    c.tr(1, x1, u1)))
_A("Z119", "V1 Z1", lambda c, u1, x1: (
    c.tl(3, u1, c.phi(x1)),
    c.tl(1, u1, x1)))
_A("Z120", "V1 V1", lambda c, u1, v1: (
    c.tl(3, u1, c.sig(v1)) + c.st(3, u1, c.d(v1)),
    c.st(1, u1, v1)))


# =============================================================================
# ZZ_TABLE: the specialization to dim Z1 = 0.
# =============================================================================

ZZ_TABLE = ConditionTable("ZZ")
_B = ZZ_TABLE.add

_B("ZZ1a", "Z0 Z0 V0", lambda c, x, y, w: (
    c.tr(0, c.dot(x, y), w),
    c.tr(0, x, c.tr(0, y, w) + c.tl(0, w, y))))
_B("ZZ1b", "Z0 V0 Z0", lambda c, x, v, z: (
    c.tl(0, c.tr(0, x, v), z),
    c.tr(0, x, c.tl(0, v, z) + c.tr(0, z, v))))
_B("ZZ1c", "V0 Z0 Z0", lambda c, u, y, z: (
    c.tl(0, c.tl(0, u, y), z),
    c.tl(0, u, c.dot(y, z) + c.dot(z, y))))
_B("ZZ2", "Z0 V0 Z0", lambda c, x, v, y: (
    c.dot(c.hl(0, x, v), y) + c.hr(0, c.tr(0, x, v), y),
    c.dot(x, c.hr(0, v, y) + c.hl(0, y, v)) + c.hl(0, x, c.tl(0, v, y) + c.tr(0, y, v))))
_B("ZZ3", "V0 Z0 Z0", lambda c, u, x, y: (
    c.dot(c.hr(0, u, x), y) + c.hr(0, c.tl(0, u, x), y),
    c.hr(0, u, c.dot(x, y) + c.dot(y, x))))
_B("ZZ4", "V0 V0 Z0", lambda c, u, v, x: (
    c.dot(c.om(0, u, v), x) + c.hr(0, c.st(0, u, v), x),
    c.hr(0, u, c.hr(0, v, x) + c.hl(0, x, v)) + c.om(0, u, c.tl(0, v, x) + c.tr(0, x, v))))
_B("ZZ5", "V0 V0 Z0", lambda c, u, v, x: (
    c.tl(0, c.st(0, u, v), x),
    c.tl(0, u, c.hr(0, v, x) + c.hl(0, x, v)) + c.st(0, u, c.tl(0, v, x) + c.tr(0, x, v))))
_B("ZZ6", "Z0 Z0 V0", lambda c, x, y, w: (
    c.hl(0, c.dot(x, y), w),
    c.dot(x, c.hl(0, y, w) + c.hr(0, w, y)) + c.hl(0, x, c.tr(0, y, w) + c.tl(0, w, y))))
_B("ZZ7", "Z0 V0 V0", lambda c, x, v, w: (
    c.hl(0, c.hl(0, x, v), w) + c.om(0, c.tr(0, x, v), w),
    c.dot(x, c.om(0, v, w) + c.om(0, w, v)) + c.hl(0, x, c.st(0, v, w) + c.st(0, w, v))))
_B("ZZ8", "Z0 V0 V0", lambda c, x, v, w: (
    c.tr(0, c.hl(0, x, v), w) + c.st(0, c.tr(0, x, v), w),
    c.tr(0, x, c.st(0, v, w) + c.st(0, w, v))))
_B("ZZ9", "V0 Z0 V0", lambda c, u, x, w: (
    c.hl(0, c.hr(0, u, x), w) + c.om(0, c.tl(0, u, x), w),
    c.hr(0, u, c.hl(0, x, w) + c.hr(0, w, x)) + c.om(0, u, c.tl(0, w, x) + c.tr(0, x, w))))
_B("ZZ10", "V0 Z0 V0", lambda c, u, x, w: (
    c.tr(0, c.hr(0, u, x), w) + c.st(0, c.tl(0, u, x), w),
    c.tl(0, u, c.hl(0, x, w) + c.hr(0, w, x)) + c.st(0, u, c.tr(0, x, w) + c.tl(0, w, x))))
_B("ZZ11", "V0 V0 V0", lambda c, u, v, w: (
    c.hl(0, c.om(0, u, v), w) + c.om(0, c.st(0, u, v), w),
    c.hr(0, u, c.om(0, v, w) + c.om(0, w, v)) + c.om(0, u, c.st(0, v, w) + c.st(0, w, v))))
# ZZ12's grouping tokens are corrupted in the source list; evaluated as the
# level-0 instance of Z12, which is the only reading that typechecks.
_B("ZZ12", "V0 V0 V0", lambda c, u, v, w: (
    c.tr(0, c.om(0, u, v), w) + c.st(0, c.st(0, u, v), w),
    c.tl(0, u, c.om(0, v, w) + c.om(0, w, v)) + c.st(0, u, c.st(0, v, w) + c.st(0, w, v))),
   suspect="typo-suspect: corrupted grouping tokens; evaluated as the level-0 "
           "form of Z12")
_B("ZZ13", "Z0 V1 V1", lambda c, x0, u1, v1: (
    c.st(1, c.tr(2, x0, u1), v1),
    c.tr(2, x0, c.st(1, u1, v1) + c.st(1, v1, u1))))
_B("ZZ14", "V0 V1 V1", lambda c, u0, u1, v1: (
    c.st(1, c.st(2, u0, u1), v1),
    c.st(2, u0, c.st(1, u1, v1) + c.st(1, v1, u1))))
_B("ZZ15", "Z0 Z0 V1", lambda c, x0, y0, u1: (
    c.tr(2, c.dot(x0, y0), u1),
    c.tr(2, x0, c.tr(2, y0, u1) + c.tl(3, u1, y0))))
_B("ZZ16", "Z0 V0 V1", lambda c, x0, u0, u1: (
    c.tr(2, c.hl(0, x0, u0), u1) + c.st(2, c.tr(0, x0, u0), u1),
    c.tr(2, x0, c.st(2, u0, u1) + c.st(3, u1, u0))))
_B("ZZ17", "V0 Z0 V1", lambda c, u0, x0, u1: (
    c.tr(2, c.hr(0, u0, x0), u1) + c.st(2, c.tl(0, u0, x0), u1),
    c.st(2, u0, c.tr(2, x0, u1) + c.tl(3, u1, x0))))
_B("ZZ18", "V0 V0 V1", lambda c, u0, v0, u1: (
    c.tr(2, c.om(0, u0, v0), u1) + c.st(2, c.st(0, u0, v0), u1),
    c.st(2, u0, c.st(2, v0, u1) + c.st(3, u1, v0))))
# ZZ19 as printed omits the tl3-against-(hl0 + hr0) term that the dim Z1 = 0
# specialization of Z50 retains (compare ZZ20/ZZ22, which keep it); the
# corrected form is the Z50 specialization and the omission is flagged.
_B("ZZ19", "V1 Z0 V0", lambda c, u1, x0, u0: (
    c.st(3, c.tl(3, u1, x0), u0),
    c.tl(3, u1, c.hl(0, x0, u0) + c.hr(0, u0, x0)) + c.st(3, u1, c.tr(0, x0, u0) + c.tl(0, u0, x0))),
   suspect="typo-suspect: as printed the tl3(u1, hl0+hr0) term is missing; "
           "evaluated as the dim Z1 = 0 specialization of Z50",
   as_printed=lambda c, u1, x0, u0: (
    c.st(3, c.tl(3, u1, x0), u0),
    c.st(3, u1, c.tr(0, x0, u0) + c.tl(0, u0, x0))))
_B("ZZ20", "V1 V0 V0", lambda c, u1, u0, v0: (
    c.st(3, c.st(3, u1, u0), v0),
    c.tl(3, u1, c.om(0, u0, v0) + c.om(0, v0, u0)) + c.st(3, u1, c.st(0, u0, v0) + c.st(0, v0, u0))))
_B("ZZ21", "V1 Z0 Z0", lambda c, u1, x0, y0: (
    c.tl(3, c.tl(3, u1, x0), y0),
    c.tl(3, u1, c.dot(x0, y0) + c.dot(y0, x0))))
_B("ZZ22", "V1 V0 Z0", lambda c, u1, u0, x0: (
    c.tl(3, c.st(3, u1, u0), x0),
    c.tl(3, u1, c.hr(0, u0, x0) + c.hl(0, x0, u0)) + c.st(3, u1, c.tl(0, u0, x0) + c.tr(0, x0, u0))))
_B("ZZ23", "Z0 V1 V0", lambda c, x0, u1, v0: (
    c.st(3, c.tr(2, x0, u1), v0),
    c.tr(2, x0, c.st(3, u1, v0) + c.st(2, v0, u1))))
_B("ZZ24", "V0 V1 V0", lambda c, u0, u1, v0: (
    c.st(3, c.st(2, u0, u1), v0),
    c.st(2, u0, c.st(3, u1, v0) + c.st(2, v0, u1))))
_B("ZZ25", "Z0 V1 Z0", lambda c, x0, u1, y0: (
    c.tl(3, c.tr(2, x0, u1), y0),
    c.tr(2, x0, c.tl(3, u1, y0) + c.tr(2, y0, u1))))
_B("ZZ26", "V0 V1 Z0", lambda c, u0, u1, y0: (
    c.tl(3, c.st(2, u0, u1), y0),
    c.st(2, u0, c.tl(3, u1, y0) + c.tr(2, y0, u1))))
_B("ZZ27", "V1 Z0 V1", lambda c, u1, x0, v1: (
    c.st(1, c.tl(3, u1, x0), v1),
    c.st(1, u1, c.tr(2, x0, v1) + c.tl(3, v1, x0))))
_B("ZZ28", "V1 V0 V1", lambda c, u1, u0, v1: (
    c.st(1, c.st(3, u1, u0), v1),
    c.st(1, u1, c.st(2, u0, v1) + c.st(3, v1, u0))))
_B("ZZ29", "V1 V1 V0", lambda c, u1, v1, u0: (
    c.st(3, c.st(1, u1, v1), u0),
    c.st(1, u1, c.st(3, v1, u0) + c.st(2, u0, v1))))
_B("ZZ30", "V1 V1 Z0", lambda c, u1, v1, x0: (
    c.tl(3, c.st(1, u1, v1), x0),
    c.st(1, u1, c.tl(3, v1, x0) + c.tr(2, x0, v1))))
_B("ZZ31", "Z0 V1", lambda c, x0, u1: (
    c.sig(c.tr(2, x0, u1)),
    c.dot(x0, c.sig(u1)) + c.hl(0, x0, c.d(u1))))
_B("ZZ32", "V0 V1", lambda c, u0, u1: (
    c.sig(c.st(2, u0, u1)),
    c.hr(0, u0, c.sig(u1)) + c.om(0, u0, c.d(u1))))
_B("ZZ33", "Z0 V1", lambda c, x0, u1: (
    c.d(c.tr(2, x0, u1)),
    c.tr(0, x0, c.d(u1))))
_B("ZZ34", "V0 V1", lambda c, u0, u1: (
    c.d(c.st(2, u0, u1)),
    c.tl(0, u0, c.sig(u1)) + c.st(0, u0, c.d(u1))))
_B("ZZ35", "V1 Z0", lambda c, u1, x0: (
    c.sig(c.tl(3, u1, x0)),
    c.dot(c.sig(u1), x0) + c.hr(0, c.d(u1), x0)))
_B("ZZ36", "V1 V0", lambda c, u1, u0: (
    c.sig(c.st(3, u1, u0)),
    c.hl(0, c.sig(u1), u0) + c.om(0, c.d(u1), u0)))
_B("ZZ37", "V1 Z0", lambda c, u1, x0: (
    c.d(c.tl(3, u1, x0)),
    c.tl(0, c.d(u1), x0)))
_B("ZZ38", "V1 V0", lambda c, u1, u0: (
    c.d(c.st(3, u1, u0)),
    c.tr(0, c.sig(u1), u0) + c.st(0, c.d(u1), u0)))
_B("ZZ39", "V1 V1", lambda c, u1, v1: (
    c.tr(2, c.sig(u1), v1) + c.st(2, c.d(u1), v1),
    c.st(1, u1, v1)))
_B("ZZ40", "V1 V1", lambda c, u1, v1: (
    c.tl(3, u1, c.sig(v1)) + c.st(3, u1, c.d(v1)),
    c.st(1, u1, v1)))
