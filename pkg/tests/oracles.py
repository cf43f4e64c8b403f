"""Independent brute-force oracles used only by the tests.

Nothing here imports the package's realization code, so agreement with the
library is a genuine cross-check.
"""

from collections import Counter
from itertools import combinations, product


def stanley_chromatic(n, edges, n_vars):
    """Sum over proper colorings V -> {0..n_vars-1} of prod x_f(v), as exponent-tuple counts."""
    out = Counter()
    for f in product(range(n_vars), repeat=n):
        if any(f[i] == f[j] for i, j in edges):
            continue
        exps = [0] * n_vars
        for c in f:
            exps[c] += 1
        out[tuple(exps)] += 1
    return out


def classical_m(parts, n_vars):
    """Monomial symmetric polynomial m_parts in n_vars commuting variables."""
    from itertools import permutations

    padded = tuple(parts) + (0,) * (n_vars - len(parts))
    return Counter({p: 1 for p in set(permutations(padded))})


# single-theta polynomials: keys (theta index or None, exponent tuple)


def _mono(n_vars, th, xs):
    ex = [0] * n_vars
    for v in xs:
        ex[v] += 1
    return (th, tuple(ex))


def e_poly(r, n_vars):
    return Counter({_mono(n_vars, None, c): 1 for c in combinations(range(n_vars), r)})


def et_poly(s, n_vars):
    return Counter(
        {
            _mono(n_vars, i, c): 1
            for i in range(n_vars)
            for c in combinations([j for j in range(n_vars) if j != i], s)
        }
    )


def mul_one_theta(a, b):
    """Product where at most one factor carries a theta (no signs can arise)."""
    out = Counter()
    for (t1, x1), c1 in a.items():
        for (t2, x2), c2 in b.items():
            if t1 is not None and t2 is not None:
                raise ValueError("both factors odd")
            out[(t1 if t1 is not None else t2, tuple(p + q for p, q in zip(x1, x2)))] += c1 * c2
    return out


def lin(*pairs):
    out = Counter()
    for c, p in pairs:
        for k, v in p.items():
            out[k] += c * v
    return {k: v for k, v in out.items() if v}


def claw_function(n_vars):
    """m_(0;3) + 6 m_(0;1,1,1) + 3 m_(0;2,1) written out directly."""
    from itertools import permutations

    t = Counter()
    for i in range(n_vars):
        rest = [q for q in range(n_vars) if q != i]
        for j in rest:
            t[_mono(n_vars, i, [j, j, j])] += 1
        for j, k in permutations(rest, 2):
            t[_mono(n_vars, i, [j, j, k])] += 3
        for c in combinations(rest, 3):
            t[_mono(n_vars, i, c)] += 6
    return dict(t)


def e_expansion_value(terms, n_vars):
    """Evaluate sum c * et_s * e_r1 * e_r2 ... for terms (c, s, (r1, r2, ...))."""
    pairs = []
    for c, s, rs in terms:
        p = et_poly(s, n_vars)
        for r in rs:
            p = mul_one_theta(p, e_poly(r, n_vars))
        pairs.append((c, p))
    return lin(*pairs)
