"""Command line entry point.

Exit codes: 0 success, 1 a comparison found a mismatch, 2 bad usage or input,
3 a computation hit the size guard.
"""
import argparse
import csv
import io
import json
import os
import sys

from . import exactla as la

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _progress(msg):
    print(msg, file=sys.stderr, flush=True)


# labels ---------------------------------------------------------------------

def parse_label(text):
    """'F0', 'S1', 'W2' name hook modules; 'S:2,1', 'F:3,1^2' name modules by partition.

    Returns (kind, index_or_partition, is_hook).
    """
    from .combinatorics import parse_partition

    text = text.strip()
    if not text or text[0] not in "SFW":
        raise UsageError(f"bad module label {text!r}: expected F0, S1, W2 or S:2,1")
    kind, rest = text[0], text[1:]
    if rest.startswith(":"):
        try:
            return kind, parse_partition(rest[1:]), False
        except ValueError as e:
            raise UsageError(str(e)) from None
    if rest.isdigit():
        return kind, int(rest), True
    raise UsageError(f"bad module label {text!r}")


def _partition(text):
    from .combinatorics import parse_partition

    try:
        return parse_partition(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _build_module(label, p, n, d=None):
    from .polymod.functors import general_costandard, general_standard, hook_module, simple_modules
    from .schuralg import build_schur_algebra

    kind, key, is_hook = parse_label(label)
    if is_hook:
        if not 0 <= key < n:
            raise UsageError(f"hook index {key} out of range for n={n}")
        if d is not None and d != p:
            raise UsageError("hook labels live in degree d = p")
        return hook_module(build_schur_algebra(n, p, p), kind, key)
    weight = sum(key)
    if d is not None and d != weight:
        raise UsageError(f"{label} has weight {weight}, not d={d}")
    if key and key[0] > n:
        raise UsageError(f"{label} has a part larger than n={n}")
    A = build_schur_algebra(n, weight, p)
    if kind == "S":
        return general_costandard(A, key)
    if kind == "W":
        return general_standard(A, key)
    return simple_modules(A)[key]


# output ---------------------------------------------------------------------

def _emit_dims(fmt, a, b, dims, qmax, out=None):
    out = out or sys.stdout
    if fmt == "json":
        print(json.dumps({"pair": [a, b], "dims": {str(q): v for q, v in dims.items()}, "qmax": qmax}), file=out)
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["labelA", "labelB", "q", "dim"])
        for q, v in dims.items():
            w.writerow([a, b, q, v])
        out.write(buf.getvalue())
    else:
        print(f"Ext^q({a}, {b}), q = 0..{qmax}: " + ", ".join(str(v) for v in dims.values()), file=out)
        nonzero = [f"q={q}:{v}" for q, v in dims.items() if v]
        print("  nonzero: " + (" ".join(nonzero) if nonzero else "none"), file=out)


def _diff(left, right):
    return [(q, left.get(q), right.get(q)) for q in sorted(set(left) | set(right)) if left.get(q) != right.get(q)]


# commands -------------------------------------------------------------------

def cmd_blocks(args):
    from .combinatorics import alpha, blocks, p_core, partition_str

    groups = blocks(args.d, args.n, args.p)
    if args.format == "json":
        print(json.dumps([[list(lam) for lam in g] for g in groups]))
        return EXIT_OK
    for k, g in enumerate(groups):
        a = alpha(g[0], args.p, args.n)
        print(f"block {k} (core {partition_str(p_core(g[0], args.p))}, alpha {a}): "
              + " ".join(partition_str(lam) for lam in g))
    return EXIT_OK


def cmd_dump(args):
    from .polymod.core import module_dump

    M = _build_module(args.label, args.p, args.n, args.d)
    print(json.dumps(module_dump(M, full=args.dump_full), indent=None if args.compact else 2))
    return EXIT_OK


def _closed_dims(a, b, n, qmax):
    from . import closedforms as cf

    ka, i, hook_a = parse_label(a)
    kb, j, hook_b = parse_label(b)
    if not (hook_a and hook_b):
        raise UsageError("closed forms exist only for hook labels such as F0, S1, W2")
    for idx in (i, j):
        if not 0 <= idx < n:
            raise UsageError(f"hook index {idx} out of range for n={n}")
    return cf.ext_closed(ka, i, kb, j, n, qmax)


def _brute_dims(a, b, p, n, d, qmax):
    from .homalg import ext_dims

    M, N = _build_module(a, p, n, d), _build_module(b, p, n, d)
    if M.algebra is not N.algebra:
        raise UsageError("the two modules live over different Schur algebras")
    _progress(f"resolving {a} over S({n},{M.algebra.d}) at p={p} through degree {qmax}")
    return ext_dims(M, N, qmax)


def cmd_ext(args):
    words = list(args.words)
    mode = "brute"
    if words and words[0] in ("closed", "brute"):
        mode = words.pop(0)
    if len(words) != 2:
        raise UsageError("ext needs two module labels")
    a, b = words
    qmax = 2 * args.n if args.qmax is None else args.qmax
    if args.compare:
        closed = _closed_dims(a, b, args.n, qmax)
        brute = _brute_dims(a, b, args.p, args.n, args.d, qmax)
        d = _diff(brute, closed)
        if not d:
            print(f"MATCH Ext({a}, {b}) q=0..{qmax}: " + ",".join(str(v) for v in brute.values()))
            return EXIT_OK
        print(f"MISMATCH Ext({a}, {b})")
        for q, x, y in d:
            print(f"  q={q}: brute {x} closed {y}")
        return EXIT_MISMATCH
    if mode == "closed":
        dims = _closed_dims(a, b, args.n, qmax)
    else:
        dims = _brute_dims(a, b, args.p, args.n, args.d, qmax)
    _emit_dims(args.format, a, b, dims, qmax)
    return EXIT_OK


def cmd_sw(args):
    from .characters import char_costandard, lr_expand_skew, sw_character_identity
    from .combinatorics import hat, partition_str

    lam = _partition(args.lam)
    n, k = args.n, args.k
    if len(lam) > k or (lam and lam[0] > n):
        raise UsageError(f"{partition_str(lam)} does not fit in a {k} x {n} box")
    if args.action == "hat":
        print(",".join(str(x) for x in hat(lam, n, k)) or "()")
        return EXIT_OK
    if args.action == "lr":
        for mu, c in sorted(lr_expand_skew((n,) * k, lam).items(), reverse=True):
            print(f"{c} x {partition_str(mu)}")
        return EXIT_OK
    if args.action == "char":
        ok = sw_character_identity(lam, n, k)
        print(f"dual character twisted by det^{k}: {char_costandard(lam, n).inverted().twist(k)}")
        print(f"character of {partition_str(hat(lam, n, k))}: {char_costandard(hat(lam, n, k), n)}")
        print("MATCH" if ok else "MISMATCH")
        return EXIT_OK if ok else EXIT_MISMATCH
    # ext
    from . import closedforms as cf
    from .homalg import ext_dims

    if args.mu is None:
        raise UsageError("sw ext needs a second partition via --mu")
    mu = _partition(args.mu)
    try:
        (d, l1, m1), (d2, l2, m2), kind = cf.sw_ext_symmetry_expected(lam, mu, n, k, args.kind)
    except ValueError as e:
        raise UsageError(str(e)) from None
    qmax = args.qmax
    kind_label = lambda x: f"{kind}:{','.join(map(str, x))}"
    left = right = None
    if d == 0 or d2 == 0:
        raise UsageError("both degrees must be positive")
    left = ext_dims(_build_module(kind_label(l1), args.p, n), _build_module(kind_label(m1), args.p, n), qmax)
    right = ext_dims(_build_module(kind_label(l2), args.p, n), _build_module(kind_label(m2), args.p, n), qmax)
    print(f"Ext({kind_label(l1)}, {kind_label(m1)}) over S({n},{d}): {list(left.values())}")
    print(f"Ext({kind_label(l2)}, {kind_label(m2)}) over S({n},{d2}): {list(right.values())}")
    same = left == right
    print("MATCH" if same else "MISMATCH")
    return EXIT_OK if same else EXIT_MISMATCH


def cmd_yoneda(args):
    from . import closedforms as cf

    conv = args.convention
    if conv == "auto":
        conv, report = cf.accepted_convention(args.n)
        for name, (assoc, unit) in report.items():
            status = "ok" if assoc is None and unit is None else (
                f"fails associativity at {tuple(map(str, assoc))}" if assoc else f"fails unit at {unit}")
            print(f"{name}: {status}")
        if conv is None:
            return EXIT_MISMATCH
    B = cf.yoneda_B(args.n, conv)
    print(f"convention {conv}, dimension {B.dim()}, graded dims {dict(sorted(B.graded_dims().items()))}")
    print("basis: " + " ".join(str(b) for b in B.basis))
    if args.table:
        for x, y, z in B.table():
            print(f"{x} * {y} = {z}")
    return EXIT_OK


def _symbols(exp, q):
    return "+".join(str(s) for s in exp.at(q)) or "0"


def cmd_rs(args):
    from . import closedforms as cf
    from .homalg import rs_dims
    from .polymod.functors import hook_module
    from .schuralg import build_schur_algebra

    n, p = args.n, args.p
    if not 0 <= args.i < n:
        raise UsageError(f"hook index {args.i} out of range for n={n}")
    qmax = 2 * n if args.qmax is None else args.qmax
    exp = cf.rs_expected(n, args.kind, args.i)
    want = exp.dims(lambda s: cf.symmetric_dim(s, p), qmax)
    got = rs_dims(hook_module(build_schur_algebra(n, p, p), args.kind, args.i), qmax)
    for q in range(qmax + 1):
        print(f"q={q}: computed {got[q]} expected {want[q]} ({_symbols(exp, q)})")
    same = got == want
    print("MATCH" if same else "MISMATCH")
    return EXIT_OK if same else EXIT_MISMATCH


def cmd_rjstar(args):
    from . import closedforms as cf
    from .homalg import r_jlowerstar_cohomology
    from .polymod.functors import hook_module
    from .schuralg import build_schur_algebra
    from .verify import expected_character

    n, m, p = args.n, args.m, args.p
    if m <= n:
        raise UsageError("need m > n")
    if not 0 <= args.i < n:
        raise UsageError(f"hook index {args.i} out of range for n={n}")
    if args.kind not in ("S", "F", "W"):
        raise UsageError("kind must be S, F or W")
    Am, An = build_schur_algebra(m, p, p), build_schur_algebra(n, p, p)
    _progress(f"injective resolution over S({n},{p}) through degree {args.qmax + 1}")
    H = r_jlowerstar_cohomology(Am, An, hook_module(An, args.kind, args.i), args.qmax)
    exp = cf.rjstar_expected(n, args.kind, args.i, printed=args.printed)
    ok = True
    for q in range(args.qmax + 1):
        want = expected_character(Am, exp, q)
        match = H[q].character() == want if want is not None else H[q].dim == 0
        ok &= match
        print(f"H^{q}: dim {H[q].dim}, expected {_symbols(exp, q)} {'ok' if match else 'MISMATCH'}")
        if args.dump_full and H[q].dim:
            print(f"  character: {H[q].character()}")
    print("MATCH" if ok else "MISMATCH")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_character(args):
    from .characters import char_costandard

    if args.label[:1] in ("S", "F", "W"):
        print(_build_module(args.label, args.p, args.n).character())
        return EXIT_OK
    lam = _partition(args.label)
    if lam and len(lam) > args.n:
        raise UsageError(f"{args.label} has more than n={args.n} rows")
    print(char_costandard(lam, args.n))
    return EXIT_OK


def cmd_verify(args):
    from . import verify

    if args.suite == "list":
        for k, title in sorted(verify.TITLES.items()):
            print(f"{k}: {title}")
        return EXIT_OK
    numbers = None
    if args.criteria:
        try:
            numbers = [int(x) for x in args.criteria.split(",")]
        except ValueError:
            raise UsageError(f"bad criteria list {args.criteria!r}") from None
        bad = [k for k in numbers if k not in verify.CRITERIA]
        if bad:
            raise UsageError(f"unknown criteria {bad}")
    results = verify.run(numbers, small=args.suite == "p3n2", stream=sys.stdout)
    if args.dump_full:
        for r in results:
            for d in r.details:
                print(f"  criterion {r.number}: {d}")
    failed = [r.number for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} passed")
    return EXIT_MISMATCH if failed else EXIT_OK


# parser ---------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="schurkit", description="Exact Ext computations for Schur algebras.")
    ap.add_argument("--cache-dir", help="directory for cached structure constants")
    ap.add_argument("--budget", type=int, help="largest matrix, in entries, an elimination may touch")
    ap.add_argument("--dump-full", action="store_true", help="print full details")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_pn(sp, p=3, n=2):
        sp.add_argument("-p", type=int, default=p, help="characteristic (prime)")
        sp.add_argument("-n", type=int, default=n)
        return sp

    sp = with_pn(sub.add_parser("blocks", help="blocks of Lambda(d, n) at p"))
    sp.add_argument("-d", type=int, default=3)
    sp.add_argument("--format", choices=["pretty", "json"], default="pretty")
    sp.set_defaults(func=cmd_blocks)

    sp = with_pn(sub.add_parser("ext", help="Ext dimensions, brute force or closed form"))
    sp.add_argument("words", nargs="+", metavar="[closed|brute] A B")
    sp.add_argument("--compare", action="store_true", help="check brute force against the closed form")
    sp.add_argument("-d", type=int, default=None, help="degree (defaults to p for hooks, |lambda| otherwise)")
    sp.add_argument("--qmax", type=int, default=None)
    sp.add_argument("--format", choices=["pretty", "json", "csv"], default="pretty")
    sp.set_defaults(func=cmd_ext)

    sp = with_pn(sub.add_parser("sw", help="box complements and the duality they induce"))
    sp.add_argument("action", choices=["hat", "lr", "char", "ext"])
    sp.add_argument("lam")
    sp.add_argument("-k", type=int, default=2, help="number of rows of the box")
    sp.add_argument("--mu", help="second partition for sw ext")
    sp.add_argument("--kind", choices=["S", "W", "F"], default="S")
    sp.add_argument("--qmax", type=int, default=3)
    sp.set_defaults(func=cmd_sw)

    sp = sub.add_parser("yoneda", help="the graded algebra on b^t_ji")
    sp.add_argument("-n", type=int, default=2)
    sp.add_argument("--table", action="store_true")
    sp.add_argument("--convention", choices=["auto", "verbatim", "swapped"], default="auto")
    sp.set_defaults(func=cmd_yoneda)

    sp = with_pn(sub.add_parser("rs", help="Ext from the tensor power into a hook module"))
    sp.add_argument("kind", choices=["S", "F", "W"])
    sp.add_argument("i", type=int)
    sp.add_argument("--qmax", type=int, default=None)
    sp.set_defaults(func=cmd_rs)

    sp = with_pn(sub.add_parser("rjstar", help="cohomology of Rj_* on a hook module"))
    sp.add_argument("kind", choices=["S", "F", "W"])
    sp.add_argument("i", type=int)
    sp.add_argument("-m", type=int, default=3)
    sp.add_argument("--qmax", type=int, default=3)
    sp.add_argument("--printed", action="store_true", help="compare with F_{n-1} in the upper degrees")
    sp.set_defaults(func=cmd_rjstar)

    sp = with_pn(sub.add_parser("dump", help="JSON summary of a module (blocks only with --dump-full)"))
    sp.add_argument("label")
    sp.add_argument("-d", type=int, default=None)
    sp.add_argument("--compact", action="store_true")
    sp.set_defaults(func=cmd_dump)

    sp = with_pn(sub.add_parser("character", help="formal character of a partition or module label"))
    sp.add_argument("label")
    sp.set_defaults(func=cmd_character)

    sp = sub.add_parser("verify", help="run the acceptance checks")
    sp.add_argument("--suite", choices=["all", "p3n2", "list"], default="all")
    sp.add_argument("--criteria", help="comma separated subset, e.g. 1,4,9")
    sp.set_defaults(func=cmd_verify)
    return ap


def _is_prime(p):
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


def _validate(args):
    p = getattr(args, "p", None)
    if p is not None and not _is_prime(p):
        raise UsageError(f"p = {p} is not prime")
    qmax = getattr(args, "qmax", None)
    if qmax is not None and qmax < 0:
        raise UsageError("qmax must be non-negative")
    for name in ("n", "k", "m"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            raise UsageError(f"-{name} must be positive")
    d = getattr(args, "d", None)
    if d is not None and d < 0:
        raise UsageError("-d must be non-negative")


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.cache_dir:
        os.environ["SCHURKIT_CACHE"] = args.cache_dir
    old_budget = la.get_budget()
    try:
        _validate(args)
        if args.budget is not None:
            la.set_budget(args.budget)
        return args.func(args)
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except la.ResourceGuardError as e:
        print(f"resource guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    finally:
        la.set_budget(old_budget)


if __name__ == "__main__":
    sys.exit(main())
