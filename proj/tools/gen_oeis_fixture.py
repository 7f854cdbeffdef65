#!/usr/bin/env python3
"""Writes data/oeis_fixture.txt in OEIS "stripped" format.

Every sequence is rebuilt from its OEIS definition (a closed form, a
recurrence or a transform of another entry), never from colored Motzkin
triangles, so the fixture can serve as an independent reference. Offsets follow
OEIS: the first term written is a(offset).

Usage: gen_oeis_fixture.py [output-path]
"""

import sys
from math import comb
from pathlib import Path

TERMS = 25


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def binomial_transform(seq):
    return [sum(comb(n, i) * seq[i] for i in range(n + 1)) for n in range(len(seq))]


def motzkin(count):
    m = [1, 1]
    for n in range(2, count):
        m.append(((2 * n + 1) * m[n - 1] + (3 * n - 3) * m[n - 2]) // (n + 2))
    return m[:count]


def riordan(count):
    r = [1, 0]
    for n in range(2, count):
        r.append((n - 1) * (2 * r[n - 1] + 3 * r[n - 2]) // (n + 1))
    return r[:count]


def fine(count):
    # C(n) = 2 F(n) + F(n-1), F(0) = 1
    f = [1]
    for n in range(1, count):
        f.append((catalan(n) - f[n - 1]) // 2)
    return f


def central_trinomial(count):
    return [sum(comb(n, 2 * k) * comb(2 * k, k) for k in range(n // 2 + 1)) for n in range(count)]


def at_most_ternary_trees(count):
    # T = 1 + x T + x^2 T^2 + x^3 T^3, counted by edges
    t = [0] * count
    t[0] = 1
    for _ in range(count):
        nxt = [0] * count
        nxt[0] = 1
        power = [1] + [0] * (count - 1)
        for j in range(1, 4):
            power = [sum(power[i] * t[n - i] for i in range(n + 1)) for n in range(count)]
            for n in range(count - j):
                nxt[n + j] += power[n]
        t = nxt
    return t


def fibonacci(count):
    f = [0, 1]
    while len(f) < count:
        f.append(f[-1] + f[-2])
    return f[:count]


def bell(count):
    row, out = [1], [1]
    while len(out) < count:
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        out.append(row[0])
    return out


def partitions(count):
    p = [1] + [0] * (count - 1)
    for part in range(1, count):
        for n in range(part, count):
            p[n] += p[n - part]
    return p


def large_schroeder(count):
    s = [1, 2]
    for n in range(2, count):
        s.append((3 * (2 * n - 1) * s[n - 1] - (n - 2) * s[n - 2]) // (n + 1))
    return s[:count]


def central_delannoy(count):
    return [sum(comb(n, k) * comb(n + k, k) for k in range(n + 1)) for n in range(count)]


def pell(count):
    p = [0, 1]
    while len(p) < count:
        p.append(2 * p[-1] + p[-2])
    return p[:count]


def factorials(count):
    out = [1]
    while len(out) < count:
        out.append(out[-1] * len(out))
    return out


def primes(count):
    out, n = [], 2
    while len(out) < count:
        if all(n % p for p in out if p * p <= n):
            out.append(n)
        n += 1
    return out


N = range(TERMS)

# (id, name, terms)
SEQUENCES = [
    ("A000079", "Powers of 2", [2**n for n in N]),
    ("A000108", "Catalan numbers", [catalan(n) for n in N]),
    ("A000244", "Powers of 3", [3**n for n in N]),
    ("A000302", "Powers of 4", [4**n for n in N]),
    ("A000400", "Powers of 6", [6**n for n in N]),
    ("A000957", "Fine's sequence (offset 0, a(0) = 0)", [0] + fine(TERMS - 1)),
    ("A000984", "Central binomial coefficients C(2n,n)", [comb(2 * n, n) for n in N]),
    ("A001006", "Motzkin numbers", motzkin(TERMS)),
    ("A001405", "C(n, floor(n/2))", [comb(n, n // 2) for n in N]),
    ("A001700", "C(2n+1, n+1)", [comb(2 * n + 1, n + 1) for n in N]),
    ("A001764", "C(3n,n)/(2n+1)", [comb(3 * n, n) // (2 * n + 1) for n in N]),
    ("A002212", "Restricted hexagonal polyominoes: a(n) = Sum_k C(n-1,k) Catalan(k+1)",
     [1] + [sum(comb(n - 1, k) * catalan(k + 1) for k in range(n)) for n in range(1, TERMS)]),
    ("A002426", "Central trinomial coefficients", central_trinomial(TERMS)),
    ("A005043", "Riordan numbers", riordan(TERMS)),
    ("A005572", "Walks on cubic lattice: Sum_k C(n,2k) 4^(n-2k) Catalan(k)",
     [sum(comb(n, 2 * k) * 4 ** (n - 2 * k) * catalan(k) for k in range(n // 2 + 1)) for n in N]),
    ("A005773", "Directed animals: 1 followed by the binomial transform of A001405",
     [1] + binomial_transform([comb(n, n // 2) for n in range(TERMS - 1)])),
    ("A006013", "C(3n+1,n)/(n+1)", [comb(3 * n + 1, n) // (n + 1) for n in N]),
    ("A007317", "Binomial transform of Catalan numbers (offset 1)",
     binomial_transform([catalan(n) for n in N])),
    ("A026375", "Sum_k C(n,k) C(2k,k)", binomial_transform([comb(2 * n, n) for n in N])),
    ("A033321", "Binomial transform of Fine's sequence (starting 1,0,1,2,...)",
     binomial_transform(fine(TERMS))),
    ("A036765", "Ordered trees with n edges and outdegree at most 3", at_most_ternary_trees(TERMS)),
    ("A126120", "Catalan numbers interleaved with zeros",
     [catalan(n // 2) if n % 2 == 0 else 0 for n in N]),
    # distractors
    ("A000012", "The all-1's sequence", [1] * TERMS),
    ("A000027", "The positive integers", [n + 1 for n in N]),
    ("A000040", "The prime numbers", primes(TERMS)),
    ("A000041", "Partition numbers", partitions(TERMS)),
    ("A000045", "Fibonacci numbers", fibonacci(TERMS)),
    ("A000110", "Bell numbers", bell(TERMS)),
    ("A000129", "Pell numbers", pell(TERMS)),
    ("A000142", "Factorial numbers", factorials(TERMS)),
    ("A000217", "Triangular numbers", [n * (n + 1) // 2 for n in N]),
    ("A000290", "The squares", [n * n for n in N]),
    ("A000351", "Powers of 5", [5**n for n in N]),
    ("A001003", "Little Schroeder numbers", [1] + [x // 2 for x in large_schroeder(TERMS)[1:]]),
    ("A001045", "Jacobsthal numbers", [(2**n - (-1) ** n) // 3 for n in N]),
    ("A001850", "Central Delannoy numbers", central_delannoy(TERMS)),
    ("A006318", "Large Schroeder numbers", large_schroeder(TERMS)),
]


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "oeis_fixture.txt"
    lines = [
        "# OEIS stripped-format fixture, generated by tools/gen_oeis_fixture.py.",
        "# Terms are recomputed from each sequence's OEIS definition, not downloaded.",
    ]
    for seq_id, name, terms in SEQUENCES:
        lines.append(f"# {seq_id} {name}")
        lines.append(f"{seq_id} ," + ",".join(str(t) for t in terms) + ",")
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
