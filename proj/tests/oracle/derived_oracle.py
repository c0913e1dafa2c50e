"""Independent Python oracle for the derived values the C++ tests compare to.

Writes tests/data/derived.tsv (name, value) and tests/data/lambda_oracle.tsv
(lambda(k), N_max(k) and its eps interval for 2 <= k <= 2000). Uses sympy for
primes and mpmath for 40-digit reference logs. Takes several minutes.

    python3 tests/oracle/derived_oracle.py
"""
import math
from pathlib import Path

import mpmath
import numpy as np
from sympy import primerange

ROOT = Path(__file__).resolve().parents[2]
OUT = ROOT / "tests" / "data"
PRIMES = list(primerange(2, 200000))
mpmath.mp.dps = 40


def log_binom(m, k):
    return math.lgamma(m + k) - math.lgamma(k) - math.lgamma(m + 1)


def f_value(exps, k):
    ln = sum(e * math.log(p) for p, e in exps.items())
    ld = sum(log_binom(e, k) for e in exps.values())
    return ld * math.log(ln) / (math.log(k) * ln)


def lam(k):
    """Search over the SHCNs in [eps1, eps2], shrinking eps1 by 0.99."""
    L = math.log(k)
    c1 = (k - 1) / (2 * math.e * math.log(2 * k / (k + 1))) + 1.00001
    eps2 = L / 2 if k <= 25 else math.log((k + 10) / 11) / math.log(2)
    eps1 = math.log((k + 1) / 2) / math.log(8)
    jump = lambda p, m: math.log(1 + (k - 1) / m) / math.log(p)
    while True:
        lam1 = (L + eps1 * math.log(c1)) ** 2 / (L * (L + (math.log(c1) - 1) * eps1))
        pts, state = [], {}
        for p in PRIMES:
            if p > k ** (1 / eps1) * (1 + 1e-9):
                break
            m = 1
            while jump(p, m) > eps2 * (1 + 1e-12):
                m += 1
            state[p] = m - 1
            while jump(p, m) >= eps1 * (1 - 1e-12):
                pts.append((jump(p, m), p))
                m += 1
        pts.sort(key=lambda t: (-t[0], t[1]))
        groups = []
        for v, p in pts:
            if groups and abs(groups[-1][0] - v) <= 1e-11 * max(1, v):
                groups[-1][1].append(p)
            else:
                groups.append([v, [p]])
        cands = []
        for gi, (v, ps) in enumerate(groups):
            for s in range(1 << len(ps)):
                t = dict(state)
                for i, p in enumerate(ps):
                    if s >> i & 1:
                        t[p] += 1
                t = {p: e for p, e in t.items() if e}
                if sum(e * math.log(p) for p, e in t.items()) < math.log(3):
                    continue
                cands.append((f_value(t, k), gi, s, len(ps), t))
            for p in ps:
                state[p] += 1
        f, gi, s, r, t = max(cands, key=lambda c: c[0])
        if f >= lam1:
            if s == (1 << r) - 1:
                lo = groups[gi + 1][0] if gi + 1 < len(groups) else eps1
                hi = groups[gi][0]
            elif s == 0:
                lo = groups[gi][0]
                hi = groups[gi - 1][0] if gi > 0 else eps2
            else:
                lo = hi = groups[gi][0]
            return f, t, lo, hi
        eps1 *= 0.99


def dk_table(limit, k):
    """ln d_k(n) for n <= limit by a smallest-prime-factor sieve."""
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, int(limit ** 0.5) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    ld = np.zeros(limit + 1)
    lb = [log_binom(e, k) for e in range(64)]
    for n in range(2, limit + 1):
        p = spf[n] or n
        q, e = n, 0
        while q % p == 0:
            q //= p
            e += 1
        ld[n] = ld[q] + lb[e]
    return ld


def brute_argmax(limit, k):
    ld = dk_table(limit, k)
    n = np.arange(3, limit + 1, dtype=np.float64)
    ln = np.log(n)
    f = ld[3:] * np.log(ln) / (math.log(k) * ln)
    i = int(np.argmax(f))
    return i + 3, float(f[i])


def d_conv(n, k):
    divs = [d for d in range(1, n + 1) if n % d == 0]
    val = {d: 1 for d in divs}
    for _ in range(k - 1):
        val = {d: sum(val[q] for q in divs if d % q == 0) for d in divs}
    return val[n]


def main():
    derived = []
    theta = lambda x: mpmath.fsum(mpmath.log(p) for p in PRIMES if p <= x)
    psi = lambda x: mpmath.fsum(theta(mpmath.root(x, m)) for m in range(1, int(math.log2(x)) + 1))
    derived += [("theta_10", theta(10)), ("theta_4", theta(4)), ("psi_10", psi(10)), ("psi_8", psi(8))]
    derived += [("d3_4", d_conv(4, 3)), ("d3_12", d_conv(12, 3)), ("pi_100", sum(1 for p in PRIMES if p <= 100))]
    f2520 = mpmath.log(48) * mpmath.log(mpmath.log(2520)) / (mpmath.log(2) * mpmath.log(2520))
    lln = mpmath.log(mpmath.log(2520))
    derived += [("f2_2520", f2520), ("implied_eps_2520", f2520 * mpmath.log(2) * (lln - 1) / lln ** 2)]
    a, fa = brute_argmax(10 ** 5, 2)
    derived += [("bf_k2_1e5_argmax", a), ("bf_k2_1e5_max", fa)]
    for k in (2, 3, 4, 5):
        a, fa = brute_argmax(10 ** 6, k)
        derived += [("bf_k%d_1e6_argmax" % k, a), ("bf_k%d_1e6_max" % k, fa)]
    with (OUT / "derived.tsv").open("w") as fh:
        fh.write("name\tvalue\n")
        for name, v in derived:
            fh.write("%s\t%s\n" % (name, mpmath.nstr(v, 17) if isinstance(v, mpmath.mpf) else repr(v)))

    with (OUT / "lambda_oracle.tsv").open("w") as fh:
        fh.write("k\tlambda\tnmax_factors\teps_lo\teps_hi\n")
        for k in range(2, 2001):
            f, t, lo, hi = lam(k)
            fac = "*".join(str(p) if e == 1 else "%d^%d" % (p, e) for p, e in sorted(t.items()))
            fh.write("%d\t%r\t%s\t%r\t%r\n" % (k, f, fac, lo, hi))


if __name__ == "__main__":
    main()
