"""Partitions, p-cores, block invariants and hook bookkeeping."""
import math
from itertools import groupby

UNCONSTRAINED = math.inf


def _normalize(lam):
    return tuple(int(x) for x in lam if x > 0)


def partitions(d, max_part=None):
    """Partitions of d in lexicographically descending order."""
    max_part = d if max_part is None else max_part

    def rec(rest, bound):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    return list(rec(d, max_part))


def enum_lambda(d, n):
    """Partitions of d whose parts are at most n, lexicographically descending."""
    if d < 0 or n < 1:
        raise ValueError("need d >= 0 and n >= 1")
    return partitions(d, n)


def conjugate(lam):
    lam = _normalize(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def compositions(d, n):
    """Length-n compositions of d in lexicographically descending order."""
    if n == 1:
        return [(d,)]
    return [(a,) + rest for a in range(d, -1, -1) for rest in compositions(d - a, n - 1)]


def is_dominant(chi):
    return all(chi[i] >= chi[i + 1] for i in range(len(chi) - 1))


def dominates(a, b):
    """a dominates b (same total, same length after padding)."""
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return True


def beta_numbers(lam, length=None):
    lam = _normalize(lam)
    L = len(lam) if length is None else length
    lam = lam + (0,) * (L - len(lam))
    return [lam[i] + (L - 1 - i) for i in range(L)]


def p_core(lam, p):
    """Remove p-rim hooks until none remain (abacus with p runners)."""
    lam = _normalize(lam)
    L = len(lam)
    if L == 0:
        return ()
    beta = beta_numbers(lam)
    runners = [sorted(b // p for b in beta if b % p == r) for r in range(p)]
    slid = []
    for r, pos in enumerate(runners):
        slid.extend(k * p + r for k in range(len(pos)))
    slid.sort(reverse=True)
    return _normalize(slid[i] - (L - 1 - i) for i in range(L))


def p_weight(lam, p):
    return (sum(_normalize(lam)) - sum(p_core(lam, p))) // p


def alpha(lam, p, n):
    """Largest r with p^r dividing every lambda'_i - lambda'_{i+1} + 1, i < n."""
    conj = conjugate(lam)
    if len(conj) > n:
        raise ValueError(f"{lam} has more than {n} columns")
    if n == 1:
        return UNCONSTRAINED
    conj = conj + (0,) * (n - len(conj))
    diffs = [conj[i] - conj[i + 1] + 1 for i in range(n - 1)]
    r = 0
    while all(x % p ** (r + 1) == 0 for x in diffs):
        r += 1
    return r


def block_key(lam, n, p):
    return (p_core(lam, p), alpha(lam, p, n))


def blocks(d, n, p):
    """Partition Lambda(d, n) into blocks keyed by (p-core, alpha)."""
    groups = {}
    for lam in enum_lambda(d, n):
        groups.setdefault(block_key(lam, n, p), []).append(lam)
    return list(groups.values())


def is_p_hook(lam, p):
    """Index i when lam == (i+1, 1^(p-i-1)), else None."""
    lam = _normalize(lam)
    if sum(lam) != p or any(x != 1 for x in lam[1:]):
        return None
    return lam[0] - 1


def hook(p, i):
    """The p-hook with index i, (i+1, 1^(p-i-1))."""
    if not 0 <= i <= p - 1:
        raise ValueError(f"hook index {i} out of range for p={p}")
    return (i + 1,) + (1,) * (p - i - 1)


def kl_length(lam, p, n=None):
    """i for the p-hook with index i, 0 for anything else."""
    i = is_p_hook(lam, p)
    return 0 if i is None else i


def hook_specht_dim(p, i):
    """Number of standard tableaux of the hook with index i."""
    if not 0 <= i <= p - 1:
        raise ValueError(f"hook index {i} out of range for p={p}")
    return math.comb(p - 1, i)


def enum_lambda_rect(d, n, k):
    if d > n * k:
        raise ValueError(f"no diagram of weight {d} fits a {k} x {n} box")
    return [lam for lam in enum_lambda(d, n) if len(lam) <= k]


def label_leq(lam, mu):
    """Order on labels: reversed dominance, so lam <= mu iff lam dominates mu."""
    lam, mu = _normalize(lam), _normalize(mu)
    if sum(lam) != sum(mu):
        raise ValueError("partitions of different weight are incomparable")
    L = max(len(lam), len(mu))
    return dominates(lam + (0,) * (L - len(lam)), mu + (0,) * (L - len(mu)))


def hat(lam, n, k):
    """Complement of lambda inside the k x n rectangle, rotated."""
    lam = _normalize(lam)
    if len(lam) > k or (lam and lam[0] > n):
        raise ValueError(f"{lam} does not fit in a {k} x {n} box")
    padded = lam + (0,) * (k - len(lam))
    return _normalize(n - padded[j] for j in range(k - 1, -1, -1))


def parse_partition(text):
    text = text.strip().strip("()[]")
    if not text:
        return ()
    parts = []
    for tok in text.split(","):
        tok = tok.strip()
        if "^" in tok:
            v, e = tok.split("^")
            parts.extend([int(v)] * int(e))
        elif tok:
            parts.append(int(tok))
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)) or any(x <= 0 for x in parts):
        raise ValueError(f"not a partition: {text}")
    return tuple(parts)


def partition_str(lam):
    lam = _normalize(lam)
    out = []
    for k, g in groupby(lam):
        m = len(list(g))
        out.append(f"{k}^{m}" if m > 2 else ",".join([str(k)] * m))
    return "(" + ",".join(out) + ")"
