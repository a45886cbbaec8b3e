"""Brute-force recomputation of the reference values frozen in the C++ tests.

Shares no code with the library: rings are handled as plain Python tuples
and every quantity is obtained by direct enumeration.  Run with --check FILE
to compare against a frozen JSON file (exit status 1 on mismatch), or with
no arguments to print the values.
"""

import itertools
import json
import math
import sys


def zmod(n):
    els = list(range(n))
    return els, (lambda a, b: (a + b) % n), (lambda a, b: (a * b) % n), 0, 1 % n


def ideal_closure(ring, gens):
    els, add, mul, zero, _ = ring
    out = {zero}
    frontier = set(gens) | {zero}
    while frontier:
        out |= frontier
        new = set()
        for x in out:
            for y in out:
                new.add(add(x, y))
            for r in els:
                new.add(mul(r, x))
        frontier = new - out
    return sorted(out)


def all_ideals(ring):
    els = ring[0]
    seen = set()
    for k in range(0, 3):
        for gens in itertools.combinations(els, k):
            seen.add(tuple(ideal_closure(ring, gens)))
    return sorted(seen, key=lambda s: (len(s), s))


def annihilator(ring, s):
    els, _, mul, zero, _ = ring
    return [x for x in els if all(mul(x, y) == zero for y in s)]


def maximal(ring):
    ideals = [set(i) for i in all_ideals(ring)]
    n = len(ring[0])
    proper = [i for i in ideals if len(i) < n]
    return sorted(sorted(i) for i in proper if not any(i < j for j in proper))


def cubefree(n):
    return all(n % (p ** 3) for p in range(2, n + 1))


def zmod_one_semiregular(n):
    # Z/n is a product of Z/p^k; the maximal ideal (p) of Z/p^k is zero or
    # simple exactly when its ideals are {0} and itself, i.e. k <= 2.
    m, p = n, 2
    while m > 1:
        k = 0
        while m % p == 0:
            m //= p
            k += 1
        if k:
            q = p ** k
            local = zmod(q)
            inside = [i for i in all_ideals(local) if set(i) <= set(range(0, q, p))]
            if len(inside) > 2:
                return False
        p += 1
    return True


def uvst(n, x):
    ring = zmod(n)
    els, add, mul, _, one = ring
    ann = annihilator(ring, [x])
    pairs = []
    principal = [g for g in ann if ideal_closure(ring, [g]) == ann]
    if principal:
        pairs.append((principal[0], principal[0]))
    for a in ann:
        for b in ann:
            if b >= a and (a, b) not in pairs and ideal_closure(ring, [a, b]) == ann:
                pairs.append((a, b))
    for a, b in pairs:
        for u in els:
            for v in els:
                if mul(b, u) != mul(a, v):
                    continue
                for s in ann:
                    for t in ann:
                        ot = add(one, t)
                        if mul(s, u) == mul(a, ot) and mul(s, v) == mul(b, ot):
                            return [a, b, u, v, s, t]
    return None


def hom_count_cyclic(n, a, b):
    # homs Z/n/(a) -> Z/n/(b): images y of the generator with a*y in (b)
    ideal_b = set(ideal_closure(zmod(n), [b]))
    cosets = {frozenset((y + z) % n for z in ideal_b) for y in range(n)}
    return sum(1 for c in cosets if (a * min(c)) % n in ideal_b)


def trivext_f2_square(dim):
    # F2 x F2^dim with (a,e)(a',e') = (aa', ae' + a'e)
    els = [(a, e) for a in range(2) for e in itertools.product(range(2), repeat=dim)]
    def add(x, y):
        return ((x[0] + y[0]) % 2, tuple((p + q) % 2 for p, q in zip(x[1], y[1])))
    def mul(x, y):
        return ((x[0] * y[0]) % 2, tuple((x[0] * q + y[0] * p) % 2 for p, q in zip(x[1], y[1])))
    zero = (0, (0,) * dim)
    one = (1, (0,) * dim)
    return els, add, mul, zero, one


def semiregular(ring):
    return all(set(annihilator(ring, annihilator(ring, i))) == set(i) for i in all_ideals(ring))


def partitions_parts_at_most_two(k):
    return k // 2 + 1


def projective_shapes_z6(cap):
    # Z/6 = Re3 + Re4 with |Re3| = 2, |Re4| = 3
    return sum(1 for i in range(0, 8) for j in range(0, 8) if 2 ** i * 3 ** j <= cap)


def fitting_z4_example():
    rows = [[2, 1, 1], [0, 2, 2]]
    minors = []
    for c1, c2 in itertools.combinations(range(3), 2):
        minors.append((rows[0][c1] * rows[1][c2] - rows[0][c2] * rows[1][c1]) % 4)
    entries = sorted({x for r in rows for x in r})
    return ideal_closure(zmod(4), minors), ideal_closure(zmod(4), entries)


def values():
    z12 = zmod(12)
    out = {}
    out["z6_idempotents"] = [x for x in range(6) if x * x % 6 == x]
    out["z6_units"] = [x for x in range(6) if math.gcd(x, 6) == 1]
    out["z4_units"] = [x for x in range(4) if math.gcd(x, 4) == 1]
    out["z4_idempotents"] = [x for x in range(4) if x * x % 4 == x]
    out["z12_ideal_4"] = ideal_closure(z12, [4])
    out["z12_ann_2"] = annihilator(z12, [2])
    out["z12_ann_6"] = annihilator(z12, [6])
    out["z12_sum_4_6"] = ideal_closure(z12, [4, 6])
    out["z12_meet_4_6"] = sorted(set(ideal_closure(z12, [4])) & set(ideal_closure(z12, [6])))
    out["z12_ideal_count"] = len(all_ideals(z12))
    out["z4_ideals"] = [list(i) for i in all_ideals(zmod(4))]
    out["z12_maximal"] = maximal(z12)
    out["z8_maximal"] = maximal(zmod(8))
    out["z12_radical"] = [x for x in range(12) if any(pow(x, k, 12) == 0 for k in range(1, 13))]
    out["z8_radical"] = [x for x in range(8) if any(pow(x, k, 8) == 0 for k in range(1, 9))]
    out["z4_ideal_2_pure"] = all(any(a * b % 4 == a for b in (0, 2)) for a in (0, 2))
    out["z6_ideal_2_pure"] = all(any(a * b % 6 == a for b in (0, 2, 4)) for a in (0, 2, 4))
    out["zmod_one_semiregular_2_64"] = [n for n in range(2, 65) if zmod_one_semiregular(n)]
    out["cubefree_2_64"] = [n for n in range(2, 65) if cubefree(n)]
    out["uvst_z8_2"] = uvst(8, 2)
    out["uvst_z5_0"] = uvst(5, 0)
    out["uvst_z2_0"] = uvst(2, 0)
    out["uvst_z4_1"] = uvst(4, 1)
    out["hom_z4_cyclic2_to_ring"] = hom_count_cyclic(4, 2, 0)
    out["hom_z12_cyclic4_to_cyclic6"] = hom_count_cyclic(12, 4, 6)
    out["projectives_z6_cap6"] = projective_shapes_z6(6)
    out["projectives_z4_cap16"] = sum(1 for k in range(5) if 4 ** k <= 16)
    f0, f1 = fitting_z4_example()
    out["fitting_z4_f0"] = f0
    out["fitting_z4_f1_size"] = len(f1)
    out["f2_square2_semiregular"] = semiregular(trivext_f2_square(2))
    out["f2_square1_semiregular"] = semiregular(trivext_f2_square(1))
    out["pair_modules_f2_up_to_16"] = sum(partitions_parts_at_most_two(k) for k in range(0, 5))
    # zero-Krull part of Z/12: localizations Z/4 at 2 and Z/3 at 3; Z/3 is a field
    out["z12_zero_krull_ideal"] = [x for x in range(12) if any((s * x) % 12 == 0 for s in range(12) if s % 3)]
    out["dup_z6_2_size"] = 6 * len(ideal_closure(zmod(6), [2]))
    out["dup_z4_2_size"] = 4 * len(ideal_closure(zmod(4), [2]))
    return out


def main():
    vals = values()
    if len(sys.argv) == 3 and sys.argv[1] == "--check":
        frozen = json.load(open(sys.argv[2]))
        bad = [k for k in sorted(set(vals) | set(frozen)) if vals.get(k) != frozen.get(k)]
        for k in bad:
            print(f"mismatch {k}: oracle {vals.get(k)} frozen {frozen.get(k)}")
        print(f"{len(vals) - len(bad)}/{len(vals)} values agree")
        return 1 if bad else 0
    print(json.dumps(vals, indent=1, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
