"""Independent sympy oracle for the values frozen into the C++ tests.

Run: python3 tests/oracle/oracle.py
"""
from itertools import product

from sympy import (Matrix, Poly, Symbol, cancel, discriminant, expand, factor,
                   groebner, prod, resultant, symbols)

x0, x1, x2, x3 = symbols("x0 x1 x2 x3")

SYSTEMS = {
    "intro": ([x1**2 - x2 - 1, x1**2 + x1*x2 - 2], [x1], x2),
    "point_at_infinity": ([1 + 2*x1 + x2 + 2*x1*x2, 3 + x1 + x2 + x1*x2], [x1], x2),
    "quartic": ([x1**2*x2 + x1 + x2 + 1, x1**3*x2**2 + x1 - x2 + 1], [x1], x2),
    "line_at_infinity": ([1 + x1 + x1*x2*x3, x2 + x1**2*x3, 1 + x1 + 2*x2 + x2**2*x3], [x1, x2], x3),
    "fat_point": ([x1**2 - x2**2, x1**2 + x2**2], [x1], x2),
    "cubic_shape": ([1 + x1*x3, 1 + x2*x3, 1 + x1**2*x3 + x2**2*x3 + x3**2], [x1, x2], x3),
    "shared_leading": ([x2*x1**2 + x1 + x2**2 + x2, x2*x1 + 1], [x1], x2),
    "generic_bezout": ([x1**2 + x2**3, 1 + x2 + x1**3], [x1], x2),
    "linear_quadric": ([x1 - x2, x1**2 - 2], [x1], x2),
    # no term free of x1, x2 in f1: the Macaulay minor vanishes identically
    "degenerate_minor": ([x1**2 + x1*x2*x3 + x2, x2**2 + x1 + 1 + x3, x1*x2 + x3**2 + 2*x1 - 1], [x1, x2], x3),
}


def monomials(nv, D):
    out = []

    def rec(i, rem, cur):
        if i == nv - 1:
            out.append(tuple(cur + [rem]))
            return
        for a in range(rem, -1, -1):
            rec(i + 1, rem - a, cur + [a])

    rec(0, D, [])
    return out


def homogenized(fs, X):
    V = [x0] + X
    ds = [Poly(f, *X).total_degree() for f in fs]
    fh = [expand(sum(c * x0**(d - sum(m)) * prod(v**e for v, e in zip(X, m))
                     for m, c in Poly(f, *X).terms())) for f, d in zip(fs, ds)]
    return V, ds, fh


def assigned_rows(cols, ds):
    rows = []
    for g in cols:
        idx = next((i for i, d in enumerate(ds) if g[i] >= d), None)
        rows.append((g, idx))
    return rows


def build(V, fh, ds, rows, cols):
    M = []
    for g, i in rows:
        sh = list(g)
        sh[i] -= ds[i]
        p = Poly(expand(fh[i] * prod(v**e for v, e in zip(V, sh))), *V)
        M.append([p.coeff_monomial(c) for c in cols])
    return Matrix(M)


def macaulay(fs, X):
    V, ds, fh = homogenized(fs, X)
    D = sum(ds) - len(ds) + 1
    cols = monomials(len(V), D)
    M = build(V, fh, ds, assigned_rows(cols, ds), cols)
    nonred = [k for k, g in enumerate(cols) if sum(1 for i, d in enumerate(ds) if g[i] >= d) >= 2]
    Mp = M.extract(nonred, nonred)
    dp = expand(Mp.det())
    if dp == 0:
        return None
    return expand(cancel(M.det() / dp))


def macaulay_forms(fh, V, ds):
    """Quotient formula for forms fh in variables V, or None if the minor vanishes."""
    D = sum(ds) - len(ds) + 1
    cols = monomials(len(V), D)
    M = build(V, fh, ds, assigned_rows(cols, ds), cols)
    nonred = [k for k, g in enumerate(cols) if sum(1 for i, d in enumerate(ds) if g[i] >= d) >= 2]
    dp = expand(M.extract(nonred, nonred).det())
    if dp == 0:
        return None
    return expand(cancel(M.det() / dp))


def macaulay_swapped(fs, X):
    """Same resultant after exchanging x0 and x1; the sign change is det^(d1 d2 d3)."""
    V, ds, fh = homogenized(fs, X)
    y = Symbol("y")
    swapped = [expand(f.subs({x0: y}).subs({x1: x0}).subs({y: x1})) for f in fh]
    sign = (-1) ** prod(ds)
    return expand(sign * macaulay_forms(swapped, V, ds))


def macaulay_perturbed(fs, X):
    """Symbolic perturbation f_i^h + u x_(i-1)^(d_i), then u = 0."""
    u = Symbol("u")
    V, ds, fh = homogenized(fs, X)
    pert = [expand(f + u * V[i]**ds[i]) for i, f in enumerate(fh)]
    return expand(cancel(macaulay_forms(pert, V, ds)).subs(u, 0))


def subresultants(fs, X, xn):
    V, ds, fh = homogenized(fs, X)
    rho = sum(ds) - len(ds)
    cols = monomials(len(V), rho)
    rows = assigned_rows(cols, ds)
    r = next(k for k, (g, i) in enumerate(rows) if i is None)
    M = build(V, fh, ds, [(g, i) for g, i in rows if i is not None], cols)
    s = {}
    for c, a in enumerate(cols):
        minor = M.extract(list(range(M.rows)), [k for k in range(len(cols)) if k != c])
        s[a] = expand((-1)**(r + c) * minor.det())
    n = len(fs)
    order = []
    for i in range(n):
        a = [0] * n
        a[0] = rho - 1
        a[i] += 1
        order.append(tuple(a))
    for a in order:
        if s[a] != 0:
            if Poly(s[a], xn).LC() < 0:
                s = {k: -v for k, v in s.items()}
            break
    return cols, s


def main():
    for name, (fs, X, xn) in SYSTEMS.items():
        V = X + [xn]
        print(f"== {name}")
        if len(X) == 1:
            print("  sylvester:", expand(resultant(fs[0], fs[1], X[0])))
        mac = macaulay(fs, X)
        if mac is None:
            # reorder so that a polynomial with a term free of x1..x_{n-1} comes first
            print("  macaulay: minor vanishes identically")
            print("  macaulay with x0, x1 exchanged:", factor(macaulay_swapped(fs, X)))
            print("  symbolic perturbation:", factor(macaulay_perturbed(fs, X)))
        else:
            print("  macaulay:", mac, "=", factor(mac))
        G = groebner(fs, *V, order="lex")
        print("  lex:", list(G.exprs))
        if sum(Poly(f, *X).total_degree() for f in fs) - len(fs) >= 1:
            cols, s = subresultants(fs, X, xn)
            print("  s:", {"".join(map(str, k)): v for k, v in s.items()})
    R = expand(resultant(x1**2 + x2**3, 1 + x2 + x1**3, x1))
    print("disc generic_bezout:", discriminant(R, x2))


if __name__ == "__main__":
    main()
