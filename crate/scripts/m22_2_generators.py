"""Writes crates/core/data/m22_2.json: M22:2 acting on 22 points.

M24 is generated on the projective line over GF(23) (points 0..22 and oo) by
x -> x+1, x -> 2x, x -> -1/x and the map fixing 0, oo that sends a square x to
x^3/9 and a non-square x to 9x^3. M22:2 is the setwise stabilizer of {oo, 0};
it is generated by the pointwise stabilizer of oo and 0 together with x -> -1/x,
which swaps them. The remaining 22 points 1..22 are relabelled 0..21.
"""
import json
import sys
from pathlib import Path

from sympy.combinatorics import Permutation, PermutationGroup

P = 23
INF = 23
SQUARES = {(x * x) % P for x in range(1, P)}


def perm(f):
    return Permutation([f(x) for x in range(24)])


def inv(x):
    return pow(x, P - 2, P)


def alpha(x):
    return INF if x == INF else (x + 1) % P


def beta(x):
    return INF if x == INF else (2 * x) % P


def gamma(x):
    if x == INF:
        return 0
    if x == 0:
        return INF
    return (-inv(x)) % P


def delta(x):
    if x in (0, INF):
        return x
    c = pow(x, 3, P)
    return (c * inv(9)) % P if x in SQUARES else (9 * c) % P


def main():
    m24 = PermutationGroup([perm(alpha), perm(beta), perm(gamma), perm(delta)])
    assert m24.order() == 244823040
    m22 = m24.stabilizer(INF).stabilizer(0)
    assert m22.order() == 443520
    g = perm(gamma)
    base = m22.generators
    candidates = list(base) + [x * y for x in base for y in base]
    for a in candidates:
        cand = PermutationGroup([a, g])
        if cand.order() == 887040:
            gens = [a, g]
            break
    else:
        sys.exit("no generating pair found")
    out = []
    for x in gens:
        imgs = x.array_form
        assert {imgs[0], imgs[INF]} == {0, INF}
        out.append([imgs[p] - 1 for p in range(1, 23)])
    path = Path(__file__).resolve().parent.parent / "crates/core/data/m22_2.json"
    path.write_text(json.dumps({"name": "M22:2", "degree": 22, "generators": out}) + "\n")
    print(path)


if __name__ == "__main__":
    main()
