"""Generate the nested Gaussian (Genz-Keister / Kronrod-Patterson) 1D tables.

The chain 1 -> 3 -> 9 -> 19 -> 35 is built by repeated Kronrod-Patterson
style extension for the standard normal weight: to an existing node set with
node polynomial ``p(x)`` we add the ``m`` roots of the monic polynomial ``q``
that satisfies ``E[p(x) q(x) x**k] = 0`` for ``k < m``.  Weights are the
interpolatory weights on the combined node set.

The intermediate orders 7, 17, 31 and 33 drop one (two for 31) symmetric pairs
of the next rule's new nodes.  The dropped pair is the one that keeps the
smallest weight largest; this yields positive weights for 7, 31 and 33.

Run from the repository root::

    python tools/generate_kpn_tables.py > src/pceplast/_kpn_tables.py
"""
import itertools

import mpmath as mp

mp.mp.dps = 120
DIGITS = 34


def gauss_moment(r):
    if r % 2:
        return mp.mpf(0)
    return mp.fac2(r - 1) if r > 0 else mp.mpf(1)


def polymul(a, b):
    out = [mp.mpf(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def extend(nodes, m):
    p = [mp.mpf(1)]
    for x in nodes:
        p = polymul(p, [-x, mp.mpf(1)])

    def moment(r):
        return sum(c * gauss_moment(r + k) for k, c in enumerate(p))

    a = mp.matrix(m, m)
    b = mp.matrix(m, 1)
    for k in range(m):
        for j in range(m):
            a[k, j] = moment(k + j)
        b[k] = -moment(k + m)
    c = mp.lu_solve(a, b)
    coeffs = [c[j] for j in range(m)] + [mp.mpf(1)]
    roots = mp.polyroots(coeffs[::-1], maxsteps=4000, extraprec=4000)
    assert max(abs(mp.im(r)) for r in roots) < mp.mpf(10) ** -80
    return sorted(nodes + [mp.re(r) for r in roots])


def interpolatory_weights(nodes):
    n = len(nodes)
    a = mp.matrix(n, n)
    b = mp.matrix(n, 1)
    for k in range(n):
        for j in range(n):
            a[k, j] = nodes[j] ** k
        b[k] = gauss_moment(k)
    w = mp.lu_solve(a, b)
    return [w[j] for j in range(n)]


def exactness(nodes, weights):
    d = 0
    while True:
        val = sum(w * x ** (d + 1) for x, w in zip(nodes, weights))
        ref = gauss_moment(d + 1)
        if abs(val - ref) > mp.mpf(10) ** -60 * max(1, ref):
            return d
        d += 1


def best_subset(small, big, npairs):
    new = [x for x in big if x > 0 and all(abs(x - y) > 1e-40 for y in small)]
    best = None
    for drop in itertools.combinations(new, npairs):
        nodes = [x for x in big if all(abs(abs(x) - d) > 1e-40 for d in drop)]
        w = interpolatory_weights(nodes)
        if best is None or min(w) > best[0]:
            best = (min(w), nodes)
    return best[1]


def main():
    chain = {1: [mp.mpf(0)]}
    nodes = chain[1]
    for m in (2, 6, 10, 16):
        nodes = extend(nodes, m)
        chain[len(nodes)] = nodes
    chain[7] = best_subset(chain[3], chain[9], 1)
    chain[17] = best_subset(chain[9], chain[19], 1)
    chain[33] = best_subset(chain[19], chain[35], 1)
    chain[31] = best_subset(chain[19], chain[33], 1)

    print('"""Nested Gaussian-weight quadrature tables (generated, do not edit).')
    print()
    print("Produced by tools/generate_kpn_tables.py at 120-digit working precision.")
    print('Weights are normalized to the standard normal density (they sum to 1)."""')
    print()
    print("# order -> (degree of exactness, nodes, weights); decimal strings")
    print("TABLES = {")
    for order in sorted(chain):
        x = chain[order]
        w = interpolatory_weights(x)
        deg = exactness(x, w)
        print(f"    {order}: (")
        print(f"        {deg},")
        print("        (")
        for v in x:
            print(f'            "{mp.nstr(v, DIGITS, min_fixed=-1, max_fixed=1)}",')
        print("        ),")
        print("        (")
        for v in w:
            print(f'            "{mp.nstr(v, DIGITS, min_fixed=1, max_fixed=0)}",')
        print("        ),")
        print("    ),")
    print("}")


if __name__ == "__main__":
    main()
