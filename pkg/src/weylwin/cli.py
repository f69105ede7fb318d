"""Command line surface.

Three subcommands tie the pipeline together:

* ``window``     - window basis and all nonempty face bases,
* ``check``      - one of the exact identity suites (copr, leviequal,
                   compequal, compdiff, oracle, cohomology),
* ``decompose``  - boundary/primitive split, idempotent and all flags.

Exit codes: 0 all checks pass, 1 a verification failed, 2 bad input.
Reports are deterministic JSON (rationals as "p/q" strings, sorted keys);
wall-clock timing goes to the human-readable output only.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
import time
from fractions import Fraction

from .cohom import cohomology_levi_sign_check
from .decomp import Decomposition, boundary_classes, idempotent_e
from .errors import InputError, WeylwinError
from .groups import is_dominant, levi_partition, partition_key
from .laurent import bbw_pushforward, expand_in_characters, symmetrize_induction, weyl_character
from .problem import ProblemSpec, load_problem
from .reps import attracting
from .shuffle import check_copr, check_leviequal, matrix_m
from .windows import check_delta, face_basis
from .decomp import check_compdiff, check_compequal


def _fr(x):
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _vec(v):
    return [_fr(c) for c in v]


def _matrix(entries):
    return [[_fr(c) for c in row] for row in entries]


def _basis_dict(basis):
    return {
        "lam": list(basis.lam),
        "threshold": _fr(basis.threshold),
        "shift": _vec(basis.shift),
        "weights": [list(wt) for wt in basis.weights],
    }


def _dominant_grid(G, values):
    return [t for t in itertools.product(*[values] * G.rank) if is_dominant(G, t)]


def _echo(problem: ProblemSpec, args):
    return {
        "blocks": list(problem.group.blocks),
        "weights": [[list(wt), m] for wt, m in problem.rep.weights],
        "delta": _vec(problem.delta),
        "bound": problem.bound,
        "degree": problem.degree,
        "mode": problem.mode,
        "assume": problem.assume,
    }


def cmd_window(problem: ProblemSpec, args) -> dict:
    G, V = problem.group, problem.rep
    window = face_basis(G, V, (0,) * G.rank, problem.delta)
    faces = []
    for cls in boundary_classes(G, V, problem.delta, problem.bound, problem.mode):
        fb = face_basis(G, V, cls.xi, problem.delta)
        faces.append({"class_rep": list(cls.rep), "basis": _basis_dict(fb)})
    return {
        "command": "window",
        "input": _echo(problem, args),
        "window": _basis_dict(window),
        "faces": faces,
        "checks": [{"name": "window-enumerated", "pass": True}],
    }


def _sweep_pairs(G, args):
    if args.lam is not None and args.mu is not None:
        return [(tuple(args.lam), tuple(args.mu))]
    grid = _dominant_grid(G, (0, 1, 2))
    return [(lam, mu) for lam in grid for mu in grid]


def cmd_check(problem: ProblemSpec, args) -> dict:
    G, V = problem.group, problem.rep
    which = args.which
    checks = []
    if which == "copr":
        for lam, mu in _sweep_pairs(G, args):
            result = check_copr(G, V, lam, mu, problem.delta, per_coset=args.per_coset)
            entry = {"name": f"copr lam={list(lam)} mu={list(mu)}", "pass": result.ok}
            if not result.ok:
                entry["residual"] = _matrix(result.residual.entries)
            if args.per_coset:
                entry["per_coset_pass"] = result.per_coset_ok
                entry["pass"] = entry["pass"] and bool(result.per_coset_ok)
            checks.append(entry)
    elif which == "leviequal":
        checks.extend(_leviequal_checks(problem, args))
    elif which == "oracle":
        checks.extend(_oracle_checks(problem))
    elif which == "compequal":
        engine = Decomposition(G, V, problem.delta, problem.bound, problem.mode)
        top = engine.top()
        for cd in top.classes:
            ok = check_compequal(G, V, cd.cls.rep, problem.delta, problem.bound, problem.mode)
            checks.append({"name": f"compequal class {list(cd.cls.rep)}", "pass": ok})
        if not top.classes:
            checks.append({"name": "compequal (no classes)", "pass": True})
    elif which == "compdiff":
        engine = Decomposition(G, V, problem.delta, problem.bound, problem.mode)
        top = engine.top()
        pairs = 0
        for cl in top.classes:
            for ce in top.classes:
                if cl is ce:
                    continue
                from .groups import partition_refines

                if partition_refines(ce.cls.levi, cl.cls.levi):
                    continue
                ok = check_compdiff(G, V, cl.cls.rep, ce.cls.rep, problem.delta, problem.bound, problem.mode)
                checks.append(
                    {"name": f"compdiff L={list(cl.cls.rep)} E={list(ce.cls.rep)}", "pass": ok}
                )
                pairs += 1
        if pairs == 0:
            checks.append({"name": "compdiff (no incomparable pairs)", "pass": True})
    elif which == "cohomology":
        checks.extend(_cohomology_checks(problem))
    else:
        raise InputError(f"unknown check {which!r}")
    return {
        "command": f"check {which}",
        "input": _echo(problem, args),
        "checks": checks,
    }


def _same_levi_pairs(G, bound):
    grid = [t for t in itertools.product(*[range(-bound, bound + 1)] * G.rank) if any(t)]
    groups: dict = {}
    for lam in grid:
        groups.setdefault(partition_key(levi_partition(G, lam)), []).append(lam)
    for members in groups.values():
        for i, lam in enumerate(members):
            for mu in members[i + 1:]:
                yield lam, mu


def _leviequal_checks(problem: ProblemSpec, args):
    G, V = problem.group, problem.rep
    rng = random.Random(args.seed)
    checks = []
    for lam, mu in _same_levi_pairs(G, min(problem.bound, 1)):
        parts = levi_partition(G, lam)
        probes = [weyl_character(G, (0,) * G.rank, levi=parts)]
        for _ in range(2):
            chi = _random_levi_dominant(rng, G, parts)
            probes.append(weyl_character(G, chi, levi=parts))
        ok = all(check_leviequal(G, V, lam, mu, y) for y in probes)
        checks.append({"name": f"leviequal lam={list(lam)} mu={list(mu)}", "pass": ok})
    if not checks:
        checks.append({"name": "leviequal (no same-Levi pairs)", "pass": True})
    return checks


def _random_levi_dominant(rng, G, parts):
    chi = [0] * G.rank
    for part in parts:
        vals = sorted((rng.randrange(-2, 3) for _ in part), reverse=True)
        for i, v in zip(part, vals):
            chi[i] = v
    return tuple(chi)


def _oracle_checks(problem: ProblemSpec):
    G, V = problem.group, problem.rep
    checks = []
    grid = _dominant_grid(G, tuple(range(-problem.bound, problem.bound + 1)))
    tested = 0
    for lam in grid:
        fb = face_basis(G, V, lam, problem.delta)
        if not len(fb):
            continue
        a = attracting(V, lam)
        parts = levi_partition(G, lam)
        ok = True
        for chi in fb.weights:
            x = weyl_character(G, chi, levi=parts)
            column = expand_in_characters(G, symmetrize_induction(G, lam, x, a.A, a.g))
            oracle = bbw_pushforward(G, V, tuple(-c for c in lam), chi)
            ok = ok and column == oracle
            tested += 1
        checks.append({"name": f"oracle lam={list(lam)} ({len(fb)} weights)", "pass": ok})
    if not checks:
        checks.append({"name": "oracle (no nonempty faces)", "pass": True})
    return checks


def _cohomology_checks(problem: ProblemSpec):
    G, V = problem.group, problem.rep
    checks = []
    for lam, mu in _same_levi_pairs(G, min(problem.bound, 1)):
        ok = cohomology_levi_sign_check(G, V, lam, mu, problem.degree)
        checks.append({"name": f"cohomology sign lam={list(lam)} mu={list(mu)}", "pass": ok})
    if not checks:
        checks.append({"name": "cohomology (no same-Levi pairs)", "pass": True})
    return checks


def cmd_decompose(problem: ProblemSpec, args) -> dict:
    G, V = problem.group, problem.rep
    e, report = idempotent_e(G, V, problem.delta, problem.bound, problem.mode)
    other = "levi" if problem.mode == "fixed" else "fixed"
    _, other_report = idempotent_e(G, V, problem.delta, problem.bound, other)
    modes_agree = (report.pk_rank, report.bk_rank) == (other_report.pk_rank, other_report.bk_rank)
    flags = dict(report.flags)
    flags["modes_agree"] = modes_agree
    checks = [{"name": flag, "pass": bool(val)} for flag, val in sorted(flags.items())]
    return {
        "command": "decompose",
        "input": _echo(problem, args),
        "window": _basis_dict(e.domain),
        "ranks": {
            "window": report.window_rank,
            "bk": report.bk_rank,
            "pk": report.pk_rank,
        },
        "per_class": [
            {
                "rep": list(c["rep"]),
                "face_rank": c["face_rank"],
                "sym_order": c["sym_order"],
                "child_pk_rank": c["child_pk_rank"],
                "pk_sym_rank": c["pk_sym_rank"],
                "image_rank": c["image_rank"],
            }
            for c in report.per_class
        ],
        "idempotent": _matrix(e.entries),
        "deco_det": _fr(report.deco_det),
        "checks": checks,
    }


def _emit(report: dict, args, started: float) -> int:
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    failures = [c for c in report.get("checks", []) if not c.get("pass", False)]
    print(f"== {report['command']}")
    if "window" in report:
        print(f"window: {report['window']['weights']}")
    if "ranks" in report:
        print(f"ranks: {report['ranks']}")
    for c in report.get("checks", []):
        print(f"  [{'ok' if c['pass'] else 'FAIL'}] {c['name']}")
    print(f"{len(report.get('checks', []))} checks, {len(failures)} failures ({time.time() - started:.2f}s)")
    return 1 if failures else 0


def _comma_ints(text):
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weylwin", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("window", "check", "decompose"):
        sp = sub.add_parser(name)
        sp.add_argument("--input", required=True, help="problem file (JSON)")
        sp.add_argument("--json", help="write the report to this path")
        sp.add_argument("--delta", type=str, help="comma-separated rationals overriding the file")
        sp.add_argument("--bound", type=int, help="cocharacter enumeration bound")
        sp.add_argument("--degree", type=int, help="cohomology truncation degree")
        sp.add_argument("--mode", choices=("fixed", "levi"), help="class key mode")
        sp.add_argument("--seed", type=int, default=0, help="seed for randomized probe vectors")
        if name == "check":
            sp.add_argument("--which", required=True,
                            choices=("copr", "leviequal", "compequal", "compdiff", "oracle", "cohomology"))
            sp.add_argument("--lambda", dest="lam", type=_comma_ints, help="single cocharacter")
            sp.add_argument("--mu", type=_comma_ints, help="single cocharacter")
            sp.add_argument("--per-coset", action="store_true", help="also split copr by double coset")
    return p


def _apply_overrides(problem: ProblemSpec, args) -> ProblemSpec:
    from dataclasses import replace

    updates = {}
    if args.delta is not None:
        from .problem import parse_rational

        delta = tuple(parse_rational(t) for t in args.delta.split(","))
        updates["delta"] = check_delta(problem.group, delta)
    if args.bound is not None:
        updates["bound"] = args.bound
    if args.degree is not None:
        updates["degree"] = args.degree
    if args.mode is not None:
        updates["mode"] = args.mode
    return replace(problem, **updates) if updates else problem


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    started = time.time()
    try:
        problem = _apply_overrides(load_problem(args.input), args)
        if args.command == "window":
            report = cmd_window(problem, args)
        elif args.command == "check":
            report = cmd_check(problem, args)
        else:
            report = cmd_decompose(problem, args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except WeylwinError as exc:
        print(f"verification error: {exc}", file=sys.stderr)
        return 1
    return _emit(report, args, started)


if __name__ == "__main__":
    sys.exit(main())
