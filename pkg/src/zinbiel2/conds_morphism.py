"""Condition catalog H1..H20: when does (x, u) -> (x + r(u), s(u)) define a
morphism between two unified products over the same Z and V.

H1..H6 hold at both levels.  H7 as printed in the source criterion applies
the target sigma to a Z1 element, which does not typecheck; the corrected
form (the only one that typechecks, and the one matching a direct expansion
of the compatibility of phi_E with the block map) is

    phi(r1(u1)) + sigma'(s1(u1)) = sigma(u1) + r0(d(u1)),

kept under a typo-suspect flag.  Verdict equivalence with the direct
morphism check is enforced by the test suite.
"""

from .engine import ConditionTable

H_TABLE = ConditionTable("H")
_L = H_TABLE.add_leveled
_A = H_TABLE.add

_L("H1", "Zi Vi", lambda i: lambda c, x, v: (
    c.hl(i, x, v) + c.r(i, c.tr(i, x, v)),
    c.dot(x, c.r(i, v)) + c.hlp(i, x, c.s(i, v))))
_L("H2", "Vi Zi", lambda i: lambda c, u, y: (
    c.hr(i, u, y) + c.r(i, c.tl(i, u, y)),
    c.dot(c.r(i, u), y) + c.hrp(i, c.s(i, u), y)))
_L("H3", "Vi Vi", lambda i: lambda c, u, v: (
    c.om(i, u, v) + c.r(i, c.st(i, u, v)),
    c.dot(c.r(i, u), c.r(i, v)) + c.hlp(i, c.r(i, u), c.s(i, v))
    + c.hrp(i, c.s(i, u), c.r(i, v)) + c.omp(i, c.s(i, u), c.s(i, v))))
_L("H4", "Zi Vi", lambda i: lambda c, x, v: (
    c.s(i, c.tr(i, x, v)),
    c.trp(i, x, c.s(i, v))))
_L("H5", "Vi Zi", lambda i: lambda c, u, y: (
    c.s(i, c.tl(i, u, y)),
    c.tlp(i, c.s(i, u), y)))
_L("H6", "Vi Vi", lambda i: lambda c, u, v: (
    c.s(i, c.st(i, u, v)),
    c.trp(i, c.r(i, u), c.s(i, v)) + c.tlp(i, c.s(i, u), c.r(i, v))
    + c.stp(i, c.s(i, u), c.s(i, v))))
_A("H7", "V1", lambda c, u1: (
    c.phi(c.r(1, u1)) + c.sigp(c.s(1, u1)),
    c.sig(u1) + c.r(0, c.d(u1))),
   suspect="typo-suspect: the printed form applies the target sigma to a Z1 "
           "element; evaluated as phi(r1(u1)) + sigma'(s1(u1)) = sigma(u1) + "
           "r0(d(u1)), the unique typechecking reading")
_A("H8", "V1", lambda c, u1: (
    c.d(c.s(1, u1)),
    c.s(0, c.d(u1))))
_A("H9", "Z0 V1", lambda c, x0, u1: (
    c.hl(2, x0, u1) + c.r(1, c.tr(2, x0, u1)),
    c.dot(x0, c.r(1, u1)) + c.hlp(2, x0, c.s(1, u1))))
_A("H10", "V0 Z1", lambda c, u0, x1: (
    c.hr(2, u0, x1) + c.r(1, c.tl(2, u0, x1)),
    c.dot(c.r(0, u0), x1) + c.hrp(2, c.s(0, u0), x1)))
_A("H11", "V0 V1", lambda c, u0, u1: (
    c.om(2, u0, u1) + c.r(1, c.st(2, u0, u1)),
    c.dot(c.r(0, u0), c.r(1, u1)) + c.hlp(2, c.r(0, u0), c.s(1, u1))
    + c.hrp(2, c.s(0, u0), c.r(1, u1)) + c.omp(2, c.s(0, u0), c.s(1, u1))))
_A("H12", "Z0 V1", lambda c, x0, u1: (
    c.s(1, c.tr(2, x0, u1)),
    c.trp(2, x0, c.s(1, u1))))
_A("H13", "V0 Z1", lambda c, u0, x1: (
    c.s(1, c.tl(2, u0, x1)),
    c.tlp(2, c.s(0, u0), x1)))
_A("H14", "V0 V1", lambda c, u0, u1: (
    c.s(1, c.st(2, u0, u1)),
    c.trp(2, c.r(0, u0), c.s(1, u1)) + c.tlp(2, c.s(0, u0), c.r(1, u1))
    + c.stp(2, c.s(0, u0), c.s(1, u1))))
_A("H15", "Z1 V0", lambda c, x1, u0: (
    c.hl(3, x1, u0) + c.r(1, c.tr(3, x1, u0)),
    c.dot(x1, c.r(0, u0)) + c.hlp(3, x1, c.s(0, u0))))
_A("H16", "V1 Z0", lambda c, u1, x0: (
    c.hr(3, u1, x0) + c.r(1, c.tl(3, u1, x0)),
    c.dot(c.r(1, u1), x0) + c.hrp(3, c.s(1, u1), x0)))
_A("H17", "V1 V0", lambda c, u1, u0: (
    c.om(3, u1, u0) + c.r(1, c.st(3, u1, u0)),
    c.dot(c.r(1, u1), c.r(0, u0)) + c.hlp(3, c.r(1, u1), c.s(0, u0))
    + c.hrp(3, c.s(1, u1), c.r(0, u0)) + c.omp(3, c.s(1, u1), c.s(0, u0))))
_A("H18", "Z1 V0", lambda c, x1, u0: (
    c.s(1, c.tr(3, x1, u0)),
    c.trp(3, x1, c.s(0, u0))))
_A("H19", "V1 Z0", lambda c, u1, x0: (
    c.s(1, c.tl(3, u1, x0)),
    c.tlp(3, c.s(1, u1), x0)))
_A("H20", "V1 V0", lambda c, u1, u0: (
    c.s(1, c.st(3, u1, u0)),
    c.trp(3, c.r(1, u1), c.s(0, u0)) + c.tlp(3, c.s(1, u1), c.r(0, u0))
    + c.stp(3, c.s(1, u1), c.s(0, u0))))
