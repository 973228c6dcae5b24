#!/usr/bin/env python3
"""Regenerate data/recipes/*.recipe for the eleven almost simple examples.

Each group is built from a concrete model (projective lines, bisections of a
6-set, the Klein correspondence for A8 = L4(2), the extended Paley biplane,
Golay octads), checked with sympy, and a base block is picked as the first
candidate whose orbit has the expected parameters. The C++ loader re-derives
everything, so this script only has to be right once.
"""

import argparse
import itertools
import pathlib
import sys

from sympy.combinatorics import Permutation, PermutationGroup


def orbit_of_set(gens, base, cap=None):
    start = tuple(sorted(base))
    seen = {start}
    todo = [start]
    while todo:
        s = todo.pop()
        for g in gens:
            t = tuple(sorted(g[x] for x in s))
            if t not in seen:
                seen.add(t)
                if cap is not None and len(seen) > cap:
                    return None
                todo.append(t)
    return sorted(seen)


def is_design(v, blocks, lam):
    count = {}
    for blk in blocks:
        for pair in itertools.combinations(blk, 2):
            count[pair] = count.get(pair, 0) + 1
    return len(count) == v * (v - 1) // 2 and all(c == lam for c in count.values())


def find_base(gens, v, k, b, lam, candidates=None):
    if candidates is None:
        candidates = itertools.combinations(range(v), k)
    for cand in candidates:
        orb = orbit_of_set(gens, cand, cap=b)
        if orb is not None and len(orb) == b and is_design(v, orb, lam):
            return list(cand)
    raise RuntimeError("no base block found")


def group(gens):
    return PermutationGroup([Permutation(g) for g in gens])


def small_generating_set(gens, order):
    """Greedy subset of gens generating a group of the given order."""
    chosen = []
    for g in gens:
        if chosen and group(chosen).order() == order:
            break
        if not chosen or not group(chosen).contains(Permutation(g)):
            chosen.append(g)
    if group(chosen).order() != order:
        raise RuntimeError("generating set too small")
    return chosen


def automorphisms(v, blocks):
    """All automorphisms of a small block design, by backtracking."""
    block_set = {frozenset(b) for b in blocks}
    through = [[frozenset(b) for b in blocks if x in b] for x in range(v)]
    out = []
    image = [None] * v
    used = [False] * v

    def consistent(x):
        for blk in through[x]:
            known = [image[y] for y in blk if image[y] is not None]
            if len(known) == len(blk):
                if frozenset(known) not in block_set:
                    return False
            elif not any(set(known) <= c for c in block_set):
                return False
        return True

    def extend(x):
        if x == v:
            out.append(list(image))
            return
        for y in range(v):
            if not used[y]:
                image[x] = y
                used[y] = True
                if consistent(x):
                    extend(x + 1)
                used[y] = False
                image[x] = None

    extend(0)
    return out


# projective line over a prime field; point p is infinity

def psl2_prime(p):
    inf = p
    squares = sorted({(x * x) % p for x in range(1, p)})
    s = next(a for a in squares if len({pow(a, e, p) for e in range(p)}) == len(squares))

    def mobius(f):
        return [f(x) for x in range(p + 1)]

    def add1(x):
        return inf if x == inf else (x + 1) % p

    def scale(x):
        return inf if x == inf else (s * x) % p

    def invert(x):
        if x == inf:
            return 0
        if x == 0:
            return inf
        return (-pow(x, p - 2, p)) % p

    return [mobius(add1), mobius(scale), mobius(invert)]


# GF(2^6) with modulus x^6 + x + 1

def gf64_mul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & 0x40:
            a ^= 0x43
    return r


def gf64_pow(a, e):
    r = 1
    for _ in range(e):
        r = gf64_mul(r, a)
    return r


def psl2_8_on_conjugate_pairs():
    """PSL2(8) on the 28 pairs {z, z^8} with z in GF(64) outside GF(8)."""
    sub = sorted(x for x in range(64) if gf64_pow(x, 8) == x)
    inv = {x: next(y for y in range(1, 64) if gf64_mul(x, y) == 1) for x in range(1, 64)}
    pairs = sorted({tuple(sorted((z, gf64_pow(z, 8)))) for z in range(64) if z not in sub})
    index = {}
    for i, pr in enumerate(pairs):
        for z in pr:
            index[z] = i
    w8 = next(x for x in sub if x > 1 and len({gf64_pow(x, e) for e in range(7)}) == 7)
    maps = [lambda z, a=a: z ^ a for a in sub if a in (1, w8, gf64_mul(w8, w8))]
    maps.append(lambda z: gf64_mul(w8, z))
    maps.append(lambda z: inv[z])
    gens = [[index[f(pr[0])] for pr in pairs] for f in maps]
    # block stabilizer D14: stabilizer of {0, inf} in PGL2(8)
    d14 = [gens[-2], gens[-1]]
    orbits = []
    seen = set()
    for x in range(len(pairs)):
        if x not in seen:
            orb = {y for blk in orbit_of_set(d14, [x]) for y in blk}
            seen |= orb
            orbits.append(sorted(orb))
    return gens, [o for o in orbits if len(o) == 7]


def bisections6(with_odd):
    """A6 or S6 on the 10 bisections of {0..5}."""
    parts = []
    for half in itertools.combinations(range(6), 3):
        if 0 in half:
            parts.append(frozenset(half))
    index = {p: i for i, p in enumerate(parts)}

    def act(letter_perm):
        out = []
        for p in parts:
            q = frozenset(letter_perm[x] for x in p)
            out.append(index[q if 0 in q else frozenset(range(6)) - q])
        return out

    three = [1, 2, 0, 3, 4, 5]
    five = [0, 2, 3, 4, 5, 1]
    gens = [act(three), act(five)]
    if with_odd:
        gens.append(act([1, 0, 2, 3, 4, 5]))
    return gens


def klein_points(letter_gens):
    """Letter permutations of {0..7} acting on the 15 points of PG(3,2)."""
    bis = [frozenset(h) for h in itertools.combinations(range(8), 4) if 0 in h]
    full = frozenset(range(8))

    def norm(h):
        return h if 0 in h else full - h

    def orth(a, b):
        return len(a & b) % 2 == 0

    planes = set()
    for a, b in itertools.combinations(bis, 2):
        if orth(a, b):
            common = [c for c in bis if orth(a, c) and orth(b, c)]
            for c in common:
                if c not in (a, b):
                    cand = [d for d in common if orth(c, d)]
                    if len(cand) == 7 and all(orth(x, y) for x, y in itertools.combinations(cand, 2)):
                        planes.add(frozenset(cand))
    planes = sorted(planes, key=lambda s: sorted(sorted(x) for x in s))
    first = planes[0]
    family = sorted([p for p in planes if p == first or len(p & first) == 1],
                    key=lambda s: sorted(sorted(x) for x in s))
    if len(family) != 15:
        raise RuntimeError("Klein correspondence failed")
    index = {p: i for i, p in enumerate(family)}
    lines = [sorted(index[p] for p in family if h in p) for h in bis]

    def act(g):
        return [index[frozenset(norm(frozenset(g[x] for x in h)) for h in p)] for p in family]

    return [act(g) for g in letter_gens], lines


def golay_octads():
    q = {(x * x) % 23 for x in range(1, 23)}
    for support in (q | {0}, set(range(1, 23)) - q | {0}, q, set(range(1, 23)) - q):
        word = sum(1 << x for x in support)
        rows = [((word << s) | (word >> (23 - s))) & ((1 << 23) - 1) for s in range(23)]
        basis = []
        for r in rows:
            for bvec in basis:
                r = min(r, r ^ bvec)
            if r:
                basis.append(r)
        if len(basis) != 12:
            continue
        octads = []
        for mask in range(1 << 12):
            c = 0
            for i in range(12):
                if mask >> i & 1:
                    c ^= basis[i]
            wt = bin(c).count("1")
            if wt % 2:
                c |= 1 << 23
                wt += 1
            if wt == 8:
                octads.append(frozenset(i for i in range(24) if c >> i & 1))
        if len(octads) == 759:
            return octads
    raise RuntimeError("Golay code construction failed")


def m24_generators(octads):
    inf = 23
    qr = {(x * x) % 23 for x in range(1, 23)}

    def f(fn):
        return [fn(x) for x in range(24)]

    alpha = f(lambda x: inf if x == inf else (x + 1) % 23)
    beta = f(lambda x: inf if x == inf else (2 * x) % 23)
    gamma = f(lambda x: 0 if x == inf else inf if x == 0 else (-pow(x, 21, 23)) % 23)
    nine_inv = pow(9, 21, 23)
    delta = f(lambda x: x if x in (0, inf) else (9 * pow(x, 3, 23)) % 23 if x in qr
              else (pow(x, 3, 23) * nine_inv) % 23)
    oct_set = set(octads)
    gens = [alpha, beta, gamma, delta]
    for g in gens:
        if any(frozenset(g[x] for x in o) not in oct_set for o in octads):
            raise RuntimeError("generator does not preserve the octads")
    return gens


def m22_models():
    octads = golay_octads()
    gens24 = m24_generators(octads)
    g24 = group(gens24)
    if g24.order() != 244823040:
        raise RuntimeError("M24 order mismatch")
    stab = g24.stabilizer(23).stabilizer(0)
    keep = list(range(1, 23))
    relabel = {x: i for i, x in enumerate(keep)}

    def restrict(p):
        return [relabel[p(x)] for x in keep]

    m22 = small_generating_set([restrict(p) for p in stab.generators], 443520)
    gamma = gens24[2]
    m22_2 = m22 + [[relabel[gamma[x]] for x in keep]]
    hexads = sorted(sorted(relabel[x] for x in o if x not in (0, 23)) for o in octads if 0 in o and 23 in o)
    return m22, m22_2, hexads


def paley_biplane():
    qr = sorted({(x * x) % 11 for x in range(1, 11)})
    return [sorted((x + t) % 11 for x in qr) for t in range(11)]


def recipes():
    out = []

    def add(line, name, comment, v, params, order, point_order, block_order, gens, base):
        g = group(gens)
        if g.order() != order:
            raise RuntimeError(f"{name}: group order {g.order()} != {order}")
        b, r, k, lam = params
        orb = orbit_of_set(gens, base)
        if len(orb) != b or not is_design(v, orb, lam):
            raise RuntimeError(f"{name}: base block does not give the expected design")
        out.append(dict(line=line, name=name, comment=comment, v=v, expect=(v, b, r, k, lam), order=order,
                        point_order=point_order, block_order=block_order, gens=gens, base=base))

    g = psl2_prime(5)
    add(1, "psl2-5-on-6", "PSL2(5) on the projective line over GF(5)", 6, (10, 5, 3, 2), 60, 10, 6, g,
        find_base(g, 6, 3, 10, 2))
    g = psl2_prime(7)
    add(2, "psl2-7-on-8", "PSL2(7) on the projective line over GF(7)", 8, (14, 7, 4, 3), 168, 21, 12, g,
        find_base(g, 8, 4, 14, 3))
    g, cands = psl2_8_on_conjugate_pairs()
    add(3, "psl2-8-on-28", "PSL2(8) on conjugate pairs of PG(1,64) outside PG(1,8)", 28, (36, 9, 7, 2), 504, 18,
        14, g, find_base(g, 28, 7, 36, 2, cands))
    g = bisections6(False)
    add(4, "a6-on-10", "A6 = PSL2(9) on the 10 bisections of a 6-set", 10, (15, 9, 6, 5), 360, 36, 24, g,
        find_base(g, 10, 6, 15, 5))
    biplane = paley_biplane()
    aut = automorphisms(11, biplane)
    g = small_generating_set(aut, 660)
    add(5, "psl2-11-on-11", "PSL2(11) on the Paley biplane of order 11", 11, (11, 5, 5, 2), 660, 60, 60, g,
        biplane[0])
    ext = [b + [11] for b in biplane] + [sorted(set(range(11)) - set(b)) for b in biplane]
    aut = automorphisms(12, ext)
    g = small_generating_set(aut, 7920)
    add(6, "m11-on-12", "M11 on the extended Paley biplane", 12, (22, 11, 6, 5), 7920, 660, 360, g, min(ext))
    m22, m22_2, hexads = m22_models()
    add(7, "m22-on-22", "M22 on the hexads of S(3,6,22) from Golay octads", 22, (77, 21, 6, 5), 443520, 20160,
        5760, m22, hexads[0])
    add(8, "m22-2-on-22", "M22:2 on the hexads of S(3,6,22)", 22, (77, 21, 6, 5), 887040, 40320, 11520, m22_2,
        hexads[0])
    g = bisections6(True)
    add(9, "s6-on-10", "S6 on the 10 bisections of a 6-set", 10, (15, 9, 6, 5), 720, 72, 48, g,
        find_base(g, 10, 6, 15, 5))
    a7 = [[1, 2, 0, 3, 4, 5, 6, 7], [1, 2, 3, 4, 5, 6, 0, 7]]
    g, lines = klein_points(a7)
    add(10, "a7-on-15", "A7 < A8 = L4(2) on the points of PG(3,2)", 15, (35, 7, 3, 1), 2520, 168, 72, g, lines[0])
    a8 = [[1, 2, 0, 3, 4, 5, 6, 7], [0, 2, 3, 4, 5, 6, 7, 1]]
    g, lines = klein_points(a8)
    add(11, "a8-on-15", "A8 = L4(2) on the points of PG(3,2)", 15, (35, 7, 3, 1), 20160, 1344, 576, g, lines[0])
    return out


def render(rec):
    lines = [f"# {rec['comment']}",
             f"name={rec['name']}",
             f"cite=sporadic-{rec['line']:02d}",
             f"v={rec['v']}",
             "expect=" + ",".join(str(x) for x in rec["expect"]),
             f"expect_group_order={rec['order']}",
             f"expect_point_stabilizer_order={rec['point_order']}",
             f"expect_block_stabilizer_order={rec['block_order']}"]
    for g in rec["gens"]:
        lines.append("gen=[" + ",".join(str(x) for x in g) + "]")
    lines.append("base_block=[" + ",".join(str(x) for x in sorted(rec["base"])) + "]")
    return "\n".join(lines) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "recipes"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for rec in recipes():
        path = out / f"line{rec['line']:02d}_{rec['name']}.recipe"
        path.write_text(render(rec))
        print(path.name, file=sys.stderr)


if __name__ == "__main__":
    main()
