"""Regenerate the Lanczos (g = 7, n = 9) partial-fraction coefficients."""
from mpmath import mp, mpf, gamma, exp, sqrt, pi, chebyt, taylor

mp.dps = 60


def cheb_coeff(n, m):
    # coefficient of x^m in T_n(x)
    return taylor(lambda x: chebyt(n, x), 0, n)[m] if m <= n else mpf(0)


def lanczos(g, n):
    g = mpf(g)
    p = []
    for k in range(n):
        s = mpf(0)
        for l in range(k + 1):
            s += cheb_coeff(2 * k, 2 * l) * gamma(l + mpf(1) / 2) \
                * (l + g + mpf(1) / 2) ** (-(l + mpf(1) / 2)) * exp(l + g + mpf(1) / 2)
        p.append(sqrt(2) / pi * s)

    def series(z):
        s = p[0] / 2
        h = mpf(1)
        for k in range(1, n):
            h *= (z - (k - 1)) / (z + k)
            s += p[k] * h
        return s

    # partial fractions c0 + sum_k c_k / (z + k): c_k is the residue at z = -k
    c = [p[0] / 2 + sum(p[1:])]
    delta = mpf(10) ** -40
    for k in range(1, n):
        c.append(series(-k + delta) * delta)
    return c


if __name__ == "__main__":
    for value in lanczos(7, 9):
        print(mp.nstr(value, 17))
