"""Core Zinbiel structures and basis-level axiom checks.

Structures here are candidates: any structure-constant tensor is
representable, and validity (the Zinbiel identity, bimodule/action axioms,
crossed-module compatibilities) is established by the check_* functions.
Checks verify identities on all basis tuples, which by multilinearity is
equivalent to verification on all elements; every check returns a
ConditionReport listing all violations up to a configurable cap.

Condition IDs are namespaced so a nested report localizes failures:
  ZI               Zinbiel identity (prefixed Z0./Z1./E. when embedded)
  B1..B3           bimodule axioms
  A1..A3           action axioms
  CM1..CM5         crossed-module compatibilities (CM5 is the derived
                   homomorphism consequence, checked redundantly)
  M1..M5           morphism conditions
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .errors import DimError, FieldMismatch, PreconditionError
from .linalg import BilMap, LinMap, vadd, vbasis

DEFAULT_VIOLATION_CAP = 100

_ID_TOKEN = re.compile(r"\d+|\D+")


def _id_sort_key(cond_id):
    """Natural order: Z2 before Z14, with namespaced ids grouped by prefix."""
    return tuple((0, t) if not t.isdigit() else (1, int(t))
                 for t in _ID_TOKEN.findall(cond_id))


@dataclass(frozen=True)
class Violation:
    cond: str
    witness: tuple
    lhs: tuple
    rhs: tuple

    def sort_key(self):
        return (_id_sort_key(self.cond), self.witness)


@dataclass(frozen=True)
class FlagNote:
    """Advisory note attached to a condition evaluated in a corrected form."""

    cond: str
    note: str
    as_printed_disagrees: bool


@dataclass
class ConditionReport:
    violations: list = dc_field(default_factory=list)
    conforming_field: bool = True
    truncated: bool = False
    flags: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def add(self, cond, witness, lhs, rhs, cap=DEFAULT_VIOLATION_CAP):
        """Record a violation; returns False once the cap is reached.

        A report that filled the cap is marked truncated (evaluation stops
        there, so further violations may exist).
        """
        if len(self.violations) >= cap:
            self.truncated = True
            return False
        self.violations.append(Violation(cond, tuple(witness), tuple(lhs), tuple(rhs)))
        if len(self.violations) >= cap:
            self.truncated = True
            return False
        return True

    def extend_namespaced(self, prefix, sub, cap=DEFAULT_VIOLATION_CAP):
        for v in sub.violations:
            if not self.add(f"{prefix}{v.cond}", v.witness, v.lhs, v.rhs, cap):
                break
        self.truncated = self.truncated or sub.truncated
        self.flags.extend(sub.flags)

    def finalize(self):
        self.violations.sort(key=Violation.sort_key)
        self.flags.sort(key=lambda f: _id_sort_key(f.cond))
        return self


class ZinbielAlgebra:
    """A candidate algebra: a space with a multiplication tensor."""

    __slots__ = ("field", "dim", "mult")

    def __init__(self, field, dim, mult: BilMap):
        if (mult.dim_a, mult.dim_b, mult.dim_c) != (dim, dim, dim):
            raise DimError(f"mult must be {dim}x{dim}->{dim}")
        if mult.field != field:
            raise FieldMismatch("mult tensor over wrong field")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "mult", mult)

    def __setattr__(self, *_):
        raise AttributeError("ZinbielAlgebra is immutable")

    @classmethod
    def zero(cls, field, dim):
        return cls(field, dim, BilMap.zero(field, dim, dim, dim))

    def __eq__(self, other):
        return (isinstance(other, ZinbielAlgebra) and self.field == other.field
                and self.dim == other.dim and self.mult == other.mult)

    def __hash__(self):
        return hash((self.field, self.dim, self.mult))

    def __repr__(self):
        return f"ZinbielAlgebra({self.field.name}, dim={self.dim})"


class BimodulePair:
    """Action tensors: left z|>v (dz x dv -> dv) and right v<|z (dv x dz -> dv)."""

    __slots__ = ("left", "right", "dim_z", "dim_v")

    def __init__(self, left: BilMap, right: BilMap):
        dz, dv = left.dim_a, left.dim_b
        if (left.dim_c != dv or (right.dim_a, right.dim_b, right.dim_c) != (dv, dz, dv)):
            raise DimError("action tensors have inconsistent dimensions")
        if left.field != right.field:
            raise FieldMismatch("action tensors over different fields")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "dim_z", dz)
        object.__setattr__(self, "dim_v", dv)

    def __setattr__(self, *_):
        raise AttributeError("BimodulePair is immutable")

    @classmethod
    def trivial(cls, field, dim_z, dim_v):
        return cls(BilMap.zero(field, dim_z, dim_v, dim_v),
                   BilMap.zero(field, dim_v, dim_z, dim_v))

    def __eq__(self, other):
        return (isinstance(other, BimodulePair) and self.left == other.left
                and self.right == other.right)

    def __hash__(self):
        return hash((self.left, self.right))


class ZinbielTwoAlgebra:
    """Candidate 2-algebra: (Z1, Z0, phi, action of Z0 on Z1)."""

    __slots__ = ("z1", "z0", "phi", "act")

    def __init__(self, z1: ZinbielAlgebra, z0: ZinbielAlgebra, phi: LinMap, act: BimodulePair):
        if z1.field != z0.field or phi.field != z0.field or act.left.field != z0.field:
            raise FieldMismatch("components over different fields")
        if (phi.cols, phi.rows) != (z1.dim, z0.dim):
            raise DimError(f"phi must be {z0.dim}x{z1.dim}")
        if (act.dim_z, act.dim_v) != (z0.dim, z1.dim):
            raise DimError("action dimensions must match (dim Z0, dim Z1)")
        object.__setattr__(self, "z1", z1)
        object.__setattr__(self, "z0", z0)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "act", act)

    def __setattr__(self, *_):
        raise AttributeError("ZinbielTwoAlgebra is immutable")

    @property
    def field(self):
        return self.z0.field

    @classmethod
    def shell(cls, z: ZinbielAlgebra):
        """(0, Z, 0) with the trivial action."""
        f = z.field
        return cls(ZinbielAlgebra.zero(f, 0), z, LinMap.zero(f, z.dim, 0),
                   BimodulePair.trivial(f, z.dim, 0))

    @classmethod
    def cone(cls, z: ZinbielAlgebra):
        """(Z, Z, id) with the action given by the multiplication itself."""
        return cls(z, z, LinMap.identity(z.field, z.dim),
                   BimodulePair(z.mult, z.mult))

    def __eq__(self, other):
        return (isinstance(other, ZinbielTwoAlgebra) and self.z1 == other.z1
                and self.z0 == other.z0 and self.phi == other.phi and self.act == other.act)

    def __hash__(self):
        return hash((self.z1, self.z0, self.phi, self.act))

    def __repr__(self):
        return f"ZinbielTwoAlgebra({self.field.name}, dims=({self.z1.dim},{self.z0.dim}))"


class TwoMorphism:
    """A pair of linear maps between the levels of two 2-algebras."""

    __slots__ = ("phi1", "phi0")

    def __init__(self, phi1: LinMap, phi0: LinMap):
        if phi1.field != phi0.field:
            raise FieldMismatch("morphism components over different fields")
        object.__setattr__(self, "phi1", phi1)
        object.__setattr__(self, "phi0", phi0)

    def __setattr__(self, *_):
        raise AttributeError("TwoMorphism is immutable")

    def __eq__(self, other):
        return (isinstance(other, TwoMorphism) and self.phi1 == other.phi1
                and self.phi0 == other.phi0)

    def __hash__(self):
        return hash((self.phi1, self.phi0))


def check_zinbiel(alg: ZinbielAlgebra, cap=DEFAULT_VIOLATION_CAP, first_only=False):
    """(ei.ej).ek = ei.(ej.ek + ek.ej) on every basis triple; ID "ZI"."""
    f = alg.field
    mult = alg.mult
    n = alg.dim
    report = ConditionReport(conforming_field=f.conforming)
    for i in range(n):
        for j in range(n):
            eij = mult.eval_bb(i, j)
            for k in range(n):
                lhs = mult.eval(eij, vbasis(f, n, k))
                inner = vadd(f, mult.eval_bb(j, k), mult.eval_bb(k, j))
                rhs = mult.eval(vbasis(f, n, i), inner)
                if lhs != rhs:
                    report.add("ZI", (i, j, k), lhs, rhs, cap)
                    if first_only or report.truncated:
                        return report.finalize()
    return report.finalize()


def check_bimodule(z: ZinbielAlgebra, dim_v, act: BimodulePair,
                   cap=DEFAULT_VIOLATION_CAP, first_only=False, _skip_zinbiel=False):
    """Bimodule axioms B1-B3 for Z acting on a dim_v space.

    The Zinbiel identity for Z itself is a checked precondition; its
    violations appear namespaced as Z.ZI.
    """
    if (act.dim_z, act.dim_v) != (z.dim, dim_v):
        raise DimError("action dimensions do not match (dim Z, dim V)")
    f = z.field
    report = ConditionReport(conforming_field=f.conforming)
    if not _skip_zinbiel:
        pre = check_zinbiel(z, cap=cap, first_only=first_only)
        report.extend_namespaced("Z.", pre, cap)
        if first_only and not report.ok:
            return report.finalize()
    mult, left, right = z.mult, act.left, act.right
    n, m = z.dim, dim_v
    bz = [vbasis(f, n, i) for i in range(n)]
    bv = [vbasis(f, m, i) for i in range(m)]
    for i in range(n):
        for j in range(n):
            mij = mult.eval_bb(i, j)
            mji = mult.eval_bb(j, i)
            msym = vadd(f, mij, mji)
            for k in range(m):
                # B1: (x.y)|>v = x|>(y|>v + v<|y)
                lhs = left.eval(mij, bv[k])
                rhs = left.eval(bz[i], vadd(f, left.eval_bb(j, k), right.eval_bb(k, j)))
                if lhs != rhs and not report.add("B1", (i, j, k), lhs, rhs, cap):
                    return report.finalize()
                if first_only and not report.ok:
                    return report.finalize()
                # B2: (v<|x)<|y = v<|(x.y + y.x)
                lhs = right.eval(right.eval_bb(k, i), bz[j])
                rhs = right.eval(bv[k], msym)
                if lhs != rhs and not report.add("B2", (k, i, j), lhs, rhs, cap):
                    return report.finalize()
                if first_only and not report.ok:
                    return report.finalize()
                # B3: (x|>v)<|y = x|>(v<|y + y|>v)
                lhs = right.eval(left.eval_bb(i, k), bz[j])
                rhs = left.eval(bz[i], vadd(f, right.eval_bb(k, j), left.eval_bb(j, k)))
                if lhs != rhs and not report.add("B3", (i, k, j), lhs, rhs, cap):
                    return report.finalize()
                if first_only and not report.ok:
                    return report.finalize()
    return report.finalize()


def semidirect_product(z: ZinbielAlgebra, dim_v, act: BimodulePair):
    """Algebra on Z + V with (x,u).(y,v) = (x.y, x|>v + u<|y).

    Requires the bimodule axioms; raises PreconditionError carrying the
    report otherwise.
    """
    pre = check_bimodule(z, dim_v, act)
    if not pre.ok:
        raise PreconditionError("not a bimodule; semidirect product undefined", pre)
    f = z.field
    n, m = z.dim, dim_v
    dim = n + m
    coeffs = {}
    for (k, i, j, v) in z.mult.items:
        coeffs[(k, i, j)] = v
    for (k, i, j, v) in act.left.items:   # x |> v lands in the V block
        coeffs[(n + k, i, n + j)] = v
    for (k, i, j, v) in act.right.items:  # u <| y
        coeffs[(n + k, n + i, j)] = v
    return ZinbielAlgebra(f, dim, BilMap(f, dim, dim, dim, coeffs))


def check_action(z0: ZinbielAlgebra, z1: ZinbielAlgebra, act: BimodulePair,
                 cap=DEFAULT_VIOLATION_CAP, first_only=False):
    """Action axioms A1-A3 on top of the bimodule axioms.

    Embeds Zinbiel checks for both algebras (Z0.ZI / Z1.ZI) and the bimodule
    report for Z0 acting on the space underlying Z1.
    """
    f = z0.field
    report = ConditionReport(conforming_field=f.conforming)
    pre0 = check_zinbiel(z0, cap=cap, first_only=first_only)
    report.extend_namespaced("Z0.", pre0, cap)
    pre1 = check_zinbiel(z1, cap=cap, first_only=first_only)
    report.extend_namespaced("Z1.", pre1, cap)
    if first_only and not report.ok:
        return report.finalize()
    bim = check_bimodule(z0, z1.dim, act, cap=cap, first_only=first_only, _skip_zinbiel=True)
    report.extend_namespaced("", bim, cap)
    if (first_only and not report.ok) or report.truncated:
        return report.finalize()
    mult1, left, right = z1.mult, act.left, act.right
    n0, n1 = z0.dim, z1.dim
    b0 = [vbasis(f, n0, i) for i in range(n0)]
    b1 = [vbasis(f, n1, i) for i in range(n1)]
    for a in range(n0):
        for i in range(n1):
            for j in range(n1):
                m1ij = mult1.eval_bb(i, j)
                m1ji = mult1.eval_bb(j, i)
                # A1: (x0|>x1).y1 = x0|>(x1.y1 + y1.x1)
                lhs = mult1.eval(left.eval_bb(a, i), b1[j])
                rhs = left.eval(b0[a], vadd(f, m1ij, m1ji))
                if lhs != rhs and not report.add("A1", (a, i, j), lhs, rhs, cap):
                    return report.finalize()
                # A2: (x1<|x0).y1 = x1.(x0|>y1 + y1<|x0)
                lhs = mult1.eval(right.eval_bb(i, a), b1[j])
                rhs = mult1.eval(b1[i], vadd(f, left.eval_bb(a, j), right.eval_bb(j, a)))
                if lhs != rhs and not report.add("A2", (i, a, j), lhs, rhs, cap):
                    return report.finalize()
                # A3: (x1.y1)<|x0 = x1.(y1<|x0 + x0|>y1)
                lhs = right.eval(m1ij, b0[a])
                rhs = mult1.eval(b1[i], vadd(f, right.eval_bb(j, a), left.eval_bb(a, j)))
                if lhs != rhs and not report.add("A3", (i, j, a), lhs, rhs, cap):
                    return report.finalize()
                if first_only and not report.ok:
                    return report.finalize()
    return report.finalize()


def check_crossed_module(t: ZinbielTwoAlgebra, cap=DEFAULT_VIOLATION_CAP, first_only=False):
    """Full 2-algebra check: action axioms plus CM1-CM4 and derived CM5."""
    f = t.field
    report = ConditionReport(conforming_field=f.conforming)
    act_rep = check_action(t.z0, t.z1, t.act, cap=cap, first_only=first_only)
    report.extend_namespaced("", act_rep, cap)
    if (first_only and not report.ok) or report.truncated:
        return report.finalize()
    phi, mult0, mult1 = t.phi, t.z0.mult, t.z1.mult
    left, right = t.act.left, t.act.right
    n0, n1 = t.z0.dim, t.z1.dim
    b0 = [vbasis(f, n0, i) for i in range(n0)]
    b1 = [vbasis(f, n1, i) for i in range(n1)]
    phi_b = [phi.apply(b1[i]) for i in range(n1)]
    for a in range(n0):
        for i in range(n1):
            # CM1: phi(x0|>x1) = x0.phi(x1)
            lhs = phi.apply(left.eval_bb(a, i))
            rhs = mult0.eval(b0[a], phi_b[i])
            if lhs != rhs and not report.add("CM1", (a, i), lhs, rhs, cap):
                return report.finalize()
            # CM2: phi(x1<|x0) = phi(x1).x0
            lhs = phi.apply(right.eval_bb(i, a))
            rhs = mult0.eval(phi_b[i], b0[a])
            if lhs != rhs and not report.add("CM2", (i, a), lhs, rhs, cap):
                return report.finalize()
            if first_only and not report.ok:
                return report.finalize()
    for i in range(n1):
        for j in range(n1):
            mij = mult1.eval_bb(i, j)
            # CM3: phi(x1)|>y1 = x1.y1
            lhs = left.eval(phi_b[i], b1[j])
            if lhs != mij and not report.add("CM3", (i, j), lhs, mij, cap):
                return report.finalize()
            # CM4: x1.y1 = x1<|phi(y1)
            rhs = right.eval(b1[i], phi_b[j])
            if mij != rhs and not report.add("CM4", (i, j), mij, rhs, cap):
                return report.finalize()
            # CM5 (derived): phi(x1.y1) = phi(x1).phi(y1)
            lhs = phi.apply(mij)
            rhs = mult0.eval(phi_b[i], phi_b[j])
            if lhs != rhs and not report.add("CM5", (i, j), lhs, rhs, cap):
                return report.finalize()
            if first_only and not report.ok:
                return report.finalize()
    return report.finalize()


def check_2alg_morphism(t: ZinbielTwoAlgebra, t2: ZinbielTwoAlgebra, m: TwoMorphism,
                        cap=DEFAULT_VIOLATION_CAP, first_only=False):
    """Morphism conditions M1-M5 for m: t -> t2."""
    f = t.field
    if f != t2.field:
        raise FieldMismatch("morphism between 2-algebras over different fields")
    p1, p0 = m.phi1, m.phi0
    if (p1.cols, p1.rows) != (t.z1.dim, t2.z1.dim):
        raise DimError(f"phi1 must be {t2.z1.dim}x{t.z1.dim}")
    if (p0.cols, p0.rows) != (t.z0.dim, t2.z0.dim):
        raise DimError(f"phi0 must be {t2.z0.dim}x{t.z0.dim}")
    report = ConditionReport(conforming_field=f.conforming)
    n0, n1 = t.z0.dim, t.z1.dim
    b0 = [vbasis(f, n0, i) for i in range(n0)]
    b1 = [vbasis(f, n1, i) for i in range(n1)]
    im0 = [p0.apply(v) for v in b0]
    im1 = [p1.apply(v) for v in b1]
    for i in range(n0):
        for j in range(n0):
            # M1: phi0 is an algebra homomorphism
            lhs = p0.apply(t.z0.mult.eval_bb(i, j))
            rhs = t2.z0.mult.eval(im0[i], im0[j])
            if lhs != rhs and not report.add("M1", (i, j), lhs, rhs, cap):
                return report.finalize()
            if first_only and not report.ok:
                return report.finalize()
    for i in range(n1):
        for j in range(n1):
            # M2: phi1 is an algebra homomorphism
            lhs = p1.apply(t.z1.mult.eval_bb(i, j))
            rhs = t2.z1.mult.eval(im1[i], im1[j])
            if lhs != rhs and not report.add("M2", (i, j), lhs, rhs, cap):
                return report.finalize()
            if first_only and not report.ok:
                return report.finalize()
    for i in range(n1):
        # M3: phi' o phi1 = phi0 o phi
        lhs = t2.phi.apply(im1[i])
        rhs = p0.apply(t.phi.apply(b1[i]))
        if lhs != rhs and not report.add("M3", (i,), lhs, rhs, cap):
            return report.finalize()
    for a in range(n0):
        for i in range(n1):
            # M4: phi1(x0|>x1) = phi0(x0) |>' phi1(x1)
            lhs = p1.apply(t.act.left.eval_bb(a, i))
            rhs = t2.act.left.eval(im0[a], im1[i])
            if lhs != rhs and not report.add("M4", (a, i), lhs, rhs, cap):
                return report.finalize()
            # M5: phi1(x1<|x0) = phi1(x1) <|' phi0(x0)
            lhs = p1.apply(t.act.right.eval_bb(i, a))
            rhs = t2.act.right.eval(im1[i], im0[a])
            if lhs != rhs and not report.add("M5", (i, a), lhs, rhs, cap):
                return report.finalize()
            if first_only and not report.ok:
                return report.finalize()
    return report.finalize()


def is_isomorphism(t: ZinbielTwoAlgebra, t2: ZinbielTwoAlgebra, m: TwoMorphism):
    """Morphism check plus invertibility of both components."""
    from .linalg import inverse
    rep = check_2alg_morphism(t, t2, m, first_only=True)
    if not rep.ok:
        return False
    return inverse(m.phi1) is not None and inverse(m.phi0) is not None
