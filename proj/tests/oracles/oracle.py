"""Brute-force reference computations whose outputs are frozen into the C++ tests.

Everything here uses exact fractions and exhaustive search, sharing no code
or algorithm with the library.
"""
from fractions import Fraction as F
from itertools import count


def witness(lo, hi):
    """Smallest-denominator dyadic in (lo, hi), smaller numerator on ties."""
    for k in count():
        d = 2 ** k
        n = (lo * d).__floor__() + 1
        if F(n, d) < hi:
            return F(n, d)


def stern_brocot(limit):
    """Breadth-first Stern-Brocot order of Q in [0,1], via mediant levels."""
    out = [F(0), F(1)]
    row = [F(0), F(1)]
    while len(out) < limit:
        nxt = [row[0]]
        for a, b in zip(row, row[1:]):
            m = F(a.numerator + b.numerator, a.denominator + b.denominator)
            nxt += [m, b]
            out.append(m)
        row = nxt
    return out[:limit]


def in_cantor(x):
    """Ternary long division with cycle detection; digit 1 is allowed only as
    a terminating 1 (i.e. 0.1 = 0.0222...) or a trailing ...1000."""
    if x < 0 or x > 1:
        return False
    if x in (0, 1):
        return True
    seen = {}
    r = x
    digits = []
    while r not in seen:
        seen[r] = len(digits)
        r *= 3
        d = r.__floor__()
        digits.append(d)
        r -= d
        if r == 0:
            break
    if r == 0:
        # terminating expansion: last digit 1 may be rewritten as 0222...
        if digits[-1] == 1:
            digits[-1] = 0
        return all(d != 1 for d in digits)
    return all(d != 1 for d in digits)


def construction_intervals(depth):
    lefts = [F(0)]
    for k in range(1, depth + 1):
        w = F(1, 3 ** k)
        lefts = [l for p in lefts for l in (p, p + 2 * w)]
    return lefts


def refine(core_depth, core_left, lo, hi, max_depth=30):
    core_right = core_left + F(1, 3 ** core_depth)
    for depth in range(core_depth + 1, max_depth + 1):
        w = F(1, 3 ** depth)
        for l in construction_intervals(depth):
            if core_left <= l and l + w <= core_right and l > lo and l + w < hi:
                return depth, l
    return None


def shortlex_base9(payload):
    """Rank bytes in shortlex order, then unrank as base-9 digit strings."""
    rank = 0
    for i in range(len(payload)):
        rank += 256 ** i
    v = 0
    for b in payload:
        v = v * 256 + b
    rank += v
    length = 0
    while rank >= 9 ** length:
        rank -= 9 ** length
        length += 1
    digits = []
    for _ in range(length):
        digits.append(rank % 9)
        rank //= 9
    return "".join(str(d) for d in reversed(digits))


def encode(payload, lo, hi):
    """Shortest anchor (p >= 1 digits) nearest the midpoint whose open slot
    (anchor, anchor + 10^-p) lies inside (lo, hi); then 9, payload, 9."""
    mid = (lo + hi) / 2
    for p in count(1):
        step = F(1, 10 ** p)
        best = None
        base = (mid / step).__floor__()
        for k in range(base - 2000, base + 2001):
            a = k * step
            if lo <= a and a + step <= hi:
                key = (abs(a - mid), a)
                if best is None or key < best[0]:
                    best = (key, a)
        if best:
            a = best[1]
            tail = "9" + shortlex_base9(payload) + "9"
            return a + F(int(tail), 10 ** (p + len(tail)))


def serialize(history):
    s = f"{len(history)};"
    for r in history:
        t = f"{r.numerator}/{r.denominator}"
        s += f"{len(t)}:{t}"
    return s.encode()


if __name__ == "__main__":
    print("witness(5/8,11/16) =", witness(F(5, 8), F(11, 16)))
    print("witness(1/3,2/3) =", witness(F(1, 3), F(2, 3)))
    sb = stern_brocot(120)
    print("stern_brocot[:12] =", [str(x) for x in sb[:12]])
    print("1/4 index", sb.index(F(1, 4)), "1/10 in first 100:", F(1, 10) in sb[:100])
    print("sb[99] =", sb[99])
    for x in [F(1, 4), F(1, 2), F(1, 10), F(3, 4), F(1, 3), F(2, 3), F(3, 10), F(9, 10), F(10, 13)]:
        print("cantor", x, in_cantor(x))
    print("refine root (0,1):", refine(0, F(0), F(0), F(1)))
    print("refine [2/3,2/3+1/27] (2/3,7/10):", refine(3, F(2, 3), F(2, 3), F(7, 10)))
    print("refine root (1/10,1/2):", refine(0, F(0), F(1, 10), F(1, 2)))
    print("encode empty (0,1):", encode(b"", F(0), F(1)))
    print("encode <0> (0,1):", encode(b"\x00", F(0), F(1)))
    print("encode 'abc' (1/3,1/2):", encode(b"abc", F(1, 3), F(1, 2)))
    print("encode <0> (-7/3,-2):", encode(b"\x00", F(-7, 3), F(-2)))
    print("encode '1' (0,1/2):", encode(b"1", F(0), F(1, 2)))
    c0 = encode(serialize([F(0)]), F(0), F(1))
    print("coded round0 beta=+inf a=0 sigma=1:", c0)
    # midpoint sigma lifted: sigma(<0,1/4>) folds midpoint: b0 = 1, b1 = (1/4+1)/2 = 5/8
    print("coded round1 a=1/4:", encode(serialize([F(0), F(1, 4)]), F(1, 4), min(F(5, 8), c0)))
    print("encode empty (0.191,0.1927):", encode(b"", F(191, 1000), F(1927, 10000)))
    print("enum-coding round0 a=0 W0=1/2:", encode(b"1", F(0), F(1, 2)))
