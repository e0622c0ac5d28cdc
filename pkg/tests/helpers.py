"""Shared generators for randomized tests.

Valid structures are produced constructively (known families transported
along random basis changes, or sparse rejection sampling filtered by the
direct oracle), never by assuming unchecked candidates are valid.
"""

from __future__ import annotations

import random

from zinbiel2.core import (BimodulePair, ZinbielAlgebra, ZinbielTwoAlgebra,
                           check_crossed_module, check_zinbiel)
from zinbiel2.linalg import BilMap, LinMap, TwoVectorSpace, inverse
from zinbiel2.unified import ComplementSplit, ExtendingDatum, check_datum_direct


def rand_scalar(field, rng):
    if hasattr(field, "p"):
        return rng.randrange(field.p)
    from fractions import Fraction
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def rand_invertible(field, n, rng):
    if n == 0:
        return LinMap.identity(field, 0)
    while True:
        m = LinMap(field, n, n, [[rand_scalar(field, rng) for _ in range(n)]
                                 for _ in range(n)])
        if inverse(m) is not None:
            return m


def transport_algebra(alg: ZinbielAlgebra, t: LinMap) -> ZinbielAlgebra:
    """Push the structure along the basis change t (an automorphism source)."""
    tinv = inverse(t)
    mult = BilMap.from_basis_function(
        alg.field, alg.dim, alg.dim, alg.dim,
        lambda i, j: t.apply(alg.mult.eval(tinv.column(i), tinv.column(j))))
    return ZinbielAlgebra(alg.field, alg.dim, mult)


def transport_two_algebra(t2: ZinbielTwoAlgebra, t1: LinMap, t0: LinMap) -> ZinbielTwoAlgebra:
    f = t2.field
    t1inv, t0inv = inverse(t1), inverse(t0)
    z1 = transport_algebra(t2.z1, t1)
    z0 = transport_algebra(t2.z0, t0)
    phi = t0.compose(t2.phi).compose(t1inv)
    left = BilMap.from_basis_function(
        f, z0.dim, z1.dim, z1.dim,
        lambda a, i: t1.apply(t2.act.left.eval(t0inv.column(a), t1inv.column(i))))
    right = BilMap.from_basis_function(
        f, z1.dim, z0.dim, z1.dim,
        lambda i, a: t1.apply(t2.act.right.eval(t1inv.column(i), t0inv.column(a))))
    return ZinbielTwoAlgebra(z1, z0, phi, BimodulePair(left, right))


def nilpotent_families(field, dim):
    """Known Zinbiel multiplications in the given dimension (structure
    tensors; includes the zero algebra)."""
    out = [BilMap.zero(field, dim, dim, dim)]
    one = field.one()
    if dim >= 2:
        out.append(BilMap(field, dim, dim, dim, {(1, 0, 0): one}))
    if dim >= 3:
        two = field.of_int(2)
        out.append(BilMap(field, dim, dim, dim,
                          {(1, 0, 0): one, (2, 0, 1): one, (2, 1, 0): two}))
        out.append(BilMap(field, dim, dim, dim, {(2, 0, 0): one, (2, 1, 1): one}))
    return out


def rand_zinbiel_algebra(field, rng, max_dim=3):
    """A random valid Zinbiel algebra: a known family member transported
    along a random basis change."""
    dim = rng.randint(1, max_dim)
    mult = rng.choice(nilpotent_families(field, dim))
    alg = ZinbielAlgebra(field, dim, mult)
    alg = transport_algebra(alg, rand_invertible(field, dim, rng))
    assert check_zinbiel(alg, first_only=True).ok
    return alg


def zero_two_algebra(field, n1, n0, phi=None):
    """Zero multiplications and action, arbitrary phi (valid for any phi)."""
    phi = phi if phi is not None else LinMap.zero(field, n0, n1)
    return ZinbielTwoAlgebra(ZinbielAlgebra.zero(field, n1),
                             ZinbielAlgebra.zero(field, n0),
                             phi, BimodulePair.trivial(field, n0, n1))


def scalar_bilmap(field, val, da=1, db=1, dc=1):
    return BilMap(field, da, db, dc, {(0, 0, 0): val} if val else {})


def rand_sparse_datum(z, v, rng, density):
    """Random datum at dims (1,1,1,1)-like shapes with sparse nonzeros."""
    base = ExtendingDatum.trivial(z, v)
    f = z.field

    def sparse_like(proto):
        coeffs = {}
        for k in range(proto.dim_c):
            for i in range(proto.dim_a):
                for j in range(proto.dim_b):
                    if rng.random() < density:
                        coeffs[(k, i, j)] = rng.randrange(1, f.p)
        return BilMap(f, proto.dim_a, proto.dim_b, proto.dim_c, coeffs)

    kwargs = {}
    for attr in ("hr", "hl", "tr", "tl", "om", "st"):
        kwargs[attr] = tuple(sparse_like(m) for m in getattr(base, attr))
    sigma = LinMap(f, z.z0.dim, v.dim1,
                   [[rng.randrange(f.p) if rng.random() < density else f.zero()
                     for _ in range(v.dim1)] for _ in range(z.z0.dim)])
    return base.replace(sigma=sigma, **kwargs)


def rand_valid_datum_1111(field, rng, max_tries=400):
    """Rejection-sample a valid extending datum at dims (1,1,1,1)."""
    for _ in range(max_tries):
        z = zero_two_algebra(field, 1, 1, LinMap(field, 1, 1, [[rng.randrange(field.p)]]))
        v = TwoVectorSpace(1, 1, LinMap(field, 1, 1, [[rng.randrange(field.p)]]))
        datum = rand_sparse_datum(z, v, rng, rng.choice([0.08, 0.15, 0.3]))
        if check_datum_direct(datum, first_only=True, check_z=False).ok:
            return datum
    raise RuntimeError("no valid datum found")


def rand_split_of(e: ZinbielTwoAlgebra, iota1: LinMap, iota0: LinMap, rng):
    """A ComplementSplit for e along the given inclusions, with a random
    retraction (hence a random complement)."""
    f = e.field
    ps = []
    for iota, dim_e in ((iota1, e.z1.dim), (iota0, e.z0.dim)):
        nz = iota.cols
        while True:
            cols = [iota.column(j) for j in range(nz)]
            cols += [tuple(rand_scalar(f, rng) for _ in range(dim_e))
                     for _ in range(dim_e - nz)]
            b = LinMap.from_columns(f, cols, dim_e)
            binv = inverse(b)
            if binv is not None:
                ps.append(LinMap(f, nz, dim_e, binv.entries[:nz]))
                break
    return ComplementSplit(e, iota1, iota0, ps[0], ps[1])


def rand_ambient_with_subalgebra(field, rng):
    """A random valid 2-algebra E (level dims 2) with an embedded 1-dim-per-
    level sub-2-algebra and a random complement.

    Built as a unified product of a random valid (1,1,1,1) datum, transported
    along random basis changes at both levels; the image of Z under the
    transport is the distinguished subalgebra.
    """
    from zinbiel2.unified import build_unified_product
    datum = rand_valid_datum_1111(field, rng)
    e = build_unified_product(datum)
    t1 = rand_invertible(field, e.z1.dim, rng)
    t0 = rand_invertible(field, e.z0.dim, rng)
    e2 = transport_two_algebra(e, t1, t0)
    assert check_crossed_module(e2, first_only=True).ok
    n1, n0 = datum.z.z1.dim, datum.z.z0.dim
    iota1 = LinMap.from_columns(field, [t1.column(j) for j in range(n1)], e.z1.dim)
    iota0 = LinMap.from_columns(field, [t0.column(j) for j in range(n0)], e.z0.dim)
    split = rand_split_of(e2, iota1, iota0, rng)
    return e2, split
