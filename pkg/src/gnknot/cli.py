"""Command-line front end: ``gnknot <subcommand> ...``.

Exit status 0 on success (``compare`` included, whatever the verdict),
1 on computation or input errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .cache import CACHE_ENV, CountCache
from .census import (
    DEFAULT_PANEL,
    DEFAULT_TIMEOUT,
    count_homs,
    distinguish,
    fingerprint,
)
from .diagram import diagram_id, to_pd
from .errors import GnKnotError, GroupFileError
from .finite_groups import FiniteGroup, load_group_file, named
from .knots import builtin_table, resolve_knot
from .presentation import abelianization, gn_presentation, render, render_word, tietze_simplify


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("%s: error: %s" % (self.prog, message))


def _ns_list(text: str) -> list[int]:
    try:
        ns = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma list of integers, got %r" % text)
    if not ns or ns[0] < 1:
        raise argparse.ArgumentTypeError("n values must be positive integers")
    return ns


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % text)
    if n < 1:
        raise argparse.ArgumentTypeError("n must be positive")
    return n


def resolve_group(token: str, base: Optional[Path] = None) -> FiniteGroup:
    token = token.strip()
    if token.startswith("@"):
        path = Path(token[1:])
        if base is not None and not path.is_absolute():
            path = base / path
        return load_group_file(path)
    return named(token)


def _is_group_file(path: Path) -> bool:
    for line in path.read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            return line.startswith("order")
    return False


def resolve_panel(arg: str) -> list[FiniteGroup]:
    """``default``, a comma list of group tokens, or ``@file``.

    A panel file lists one group token per line (``S3``, ``@table.txt``, ...);
    a file that is itself a group table is a one-group panel.
    """
    arg = arg.strip()
    if arg == "default":
        return [named(t) for t in DEFAULT_PANEL]
    if arg.startswith("@"):
        path = Path(arg[1:])
        try:
            if _is_group_file(path):
                return [load_group_file(path)]
            lines = path.read_text().splitlines()
        except OSError as exc:
            raise GroupFileError("cannot read panel %s: %s" % (path, exc)) from exc
        tokens = [ln.split("#", 1)[0].strip() for ln in lines]
        groups = []
        for tok in tokens:
            if tok == "default":
                groups.extend(named(t) for t in DEFAULT_PANEL)
            elif tok:
                groups.append(resolve_group(tok, path.parent))
        return groups
    return [resolve_group(t) for t in arg.split(",") if t.strip()]


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--cache", metavar="DIR", help="count cache directory (default $%s)" % CACHE_ENV)
    common.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT, help="seconds per count")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = _Parser(prog="gnknot", description="Generalized knot groups G_n(K) and finite-quotient fingerprints.")
    p.add_argument("--version", action="version", version="gnknot " + __version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("table", parents=[common], help="list built-in knots")

    s = sub.add_parser("parse", parents=[common], help="validate and summarize a diagram")
    s.add_argument("knot")

    for name, helptext in (("present", "print the G_n presentation"), ("abelianize", "abelianization of G_n")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("knot")
        s.add_argument("--n", type=_positive, default=1)
        if name == "present":
            s.add_argument("--simplify", action="store_true", help="apply Tietze simplification")

    s = sub.add_parser("count", parents=[common], help="count homomorphisms G_n(K) -> H")
    s.add_argument("knot")
    s.add_argument("--n", type=_positive, default=1)
    s.add_argument("--group", required=True, help="group token (S3, D4, Q8, ...) or @file")

    s = sub.add_parser("fingerprint", parents=[common], help="counts over a panel of groups")
    s.add_argument("knot")
    s.add_argument("--panel", default="default")
    s.add_argument("--n", type=_ns_list, default=[1, 2])

    s = sub.add_parser("compare", parents=[common], help="look for a panel entry separating two knots")
    s.add_argument("knot_a")
    s.add_argument("knot_b")
    s.add_argument("--panel", default="default")
    s.add_argument("--n", type=_ns_list, default=[1, 2])
    return p


def _emit(args, payload: dict, text: str) -> str:
    return json.dumps(payload, sort_keys=True) if args.json else text


def _cmd_table(args, cache):
    rows = [
        {
            "name": e.name,
            "crossings": e.diagram.crossing_count,
            "components": e.diagram.component_count,
            "notes": e.notes,
        }
        for e in builtin_table()
    ]
    text = "\n".join(
        "%-15s %3d crossings  %d component%s  %s"
        % (r["name"], r["crossings"], r["components"], "" if r["components"] == 1 else "s", r["notes"])
        for r in rows
    )
    return _emit(args, {"knots": rows}, text)


def _cmd_parse(args, cache):
    d = resolve_knot(args.knot)
    info = {
        "crossings": d.crossing_count,
        "arcs": d.arc_count,
        "components": d.component_count,
        "unknot_components": d.unknot_components,
        "generators": d.generator_count,
        "writhe": d.writhe,
        "signs": list(d.signs),
        "diagram_id": diagram_id(d),
        "pd": to_pd(d),
    }
    text = "\n".join("%s: %s" % (k, " ".join(map(str, v)) if isinstance(v, list) else v) for k, v in info.items())
    return _emit(args, info, text)


def _cmd_present(args, cache):
    p = gn_presentation(resolve_knot(args.knot), args.n)
    if args.simplify:
        p = tietze_simplify(p)
    text = render(p)
    payload = {
        "n": args.n,
        "generators": p.generator_count,
        "relators": [render_word(r) for r in p.relators],
        "text": text,
    }
    return _emit(args, payload, text)


def _cmd_abelianize(args, cache):
    inv = abelianization(gn_presentation(resolve_knot(args.knot), args.n))
    payload = {"n": args.n, "free_rank": inv.free_rank, "torsion": list(inv.torsion), "text": str(inv)}
    return _emit(args, payload, str(inv))


def _cmd_count(args, cache):
    d = resolve_knot(args.knot)
    h = resolve_group(args.group)
    did = diagram_id(d)
    count = cache.get(did, h, args.n) if cache else None
    if count is None:
        count = count_homs(d, args.n, h, timeout=args.timeout)
        if cache:
            cache.put(did, h, args.n, count)
    payload = {"diagram_id": did, "group": h.name, "order": h.order, "n": args.n, "count": count}
    return _emit(args, payload, str(count))


def _cmd_fingerprint(args, cache):
    d = resolve_knot(args.knot)
    panel = resolve_panel(args.panel)
    fp = fingerprint(d, panel, args.n, cache=cache, timeout=args.timeout)
    lines = []
    for g, n in fp.keys:
        value = fp.entries.get((g, n))
        lines.append("%-8s n=%d  %s" % (g, n, value if value is not None else "absent (%s)" % fp.absent[(g, n)]))
    return _emit(args, fp.to_json(), "\n".join(lines))


def _cmd_compare(args, cache):
    a = resolve_knot(args.knot_a)
    b = resolve_knot(args.knot_b)
    panel = resolve_panel(args.panel)
    t0 = time.monotonic()
    verdict = distinguish(a, b, panel, args.n, cache=cache, timeout=args.timeout)
    elapsed = time.monotonic() - t0
    text = str(verdict)
    for g, n, reason in verdict.skipped:
        text += "\nskipped %s n=%d (%s)" % (g, n, reason)
    payload = verdict.to_json()
    payload.update(
        {
            "text": str(verdict),
            "a": diagram_id(a),
            "b": diagram_id(b),
            "panel": [h.name for h in panel],
            "n": args.n,
            "seconds": round(elapsed, 3),
        }
    )
    return _emit(args, payload, text)


_COMMANDS = {
    "table": _cmd_table,
    "parse": _cmd_parse,
    "present": _cmd_present,
    "abelianize": _cmd_abelianize,
    "count": _cmd_count,
    "fingerprint": _cmd_fingerprint,
    "compare": _cmd_compare,
}


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Run one command; return ``(exit code, output text)``."""
    parser = _build_parser()
    stdout = io.StringIO()
    try:
        with contextlib.redirect_stdout(stdout):
            args = parser.parse_args(list(argv))
    except UsageError as exc:
        return 2, "%s\n%s" % (parser.format_usage().rstrip(), exc)
    except SystemExit as exc:
        # --help / --version
        return int(exc.code or 0), stdout.getvalue().rstrip("\n")
    cache = CountCache.from_env(args.cache)
    try:
        return 0, _COMMANDS[args.command](args, cache)
    except GnKnotError as exc:
        if args.json:
            return 1, json.dumps({"error": exc.reason, "message": str(exc)}, sort_keys=True)
        return 1, "error (%s): %s" % (exc.reason, exc)


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    if text:
        print(text, file=sys.stdout if code == 0 or "--json" in (argv or sys.argv) else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
