"""Declarative problem input.

A problem file is a JSON document with the group blocks, the weight
multiset, and optional shift, bounds and mode:

    {
      "blocks": [2],
      "weights": [[[0, 0], 2], [[1, -1], 1], [[-1, 1], 1]],
      "delta": ["0", "0"],
      "bound": 2,
      "degree": 6,
      "mode": "fixed",
      "assume": {"B": true, "C": true}
    }

Rationals are written as "p/q" strings (plain integers also accepted).  The
weight multiset must be symmetric; geometric assumptions cannot be checked
from weight data and are recorded as user assertions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError
from .reps import SymmetricRep, check_symmetric, symmetric_rep
from .windows import check_delta


@dataclass(frozen=True)
class ProblemSpec:
    rep: SymmetricRep
    delta: tuple
    bound: int
    degree: int
    mode: str
    assume: dict = field(default_factory=dict)

    @property
    def group(self):
        return self.rep.group


def parse_rational(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational {text!r}: {exc}") from None
    raise InputError(f"rationals must be integers or 'p/q' strings, got {text!r}")


def load_problem(path) -> ProblemSpec:
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read problem file {path}: {exc}") from None
    return problem_from_dict(raw)


def problem_from_dict(raw: dict) -> ProblemSpec:
    if not isinstance(raw, dict):
        raise InputError("problem file must contain a JSON object")
    if "blocks" not in raw:
        raise InputError("missing field 'blocks'")
    if "weights" not in raw:
        raise InputError("missing field 'weights'")
    blocks = raw["blocks"]
    if not isinstance(blocks, list) or not all(isinstance(b, int) and b >= 1 for b in blocks):
        raise InputError("'blocks' must be a list of positive integers")
    rank = sum(blocks)
    pairs = []
    for k, entry in enumerate(raw["weights"]):
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not isinstance(entry[0], list)
            or not isinstance(entry[1], int)
        ):
            raise InputError(f"weights[{k}] must be [[coords...], multiplicity]")
        vec, mult = entry
        if len(vec) != rank:
            raise InputError(f"weights[{k}]: weight {vec} has length {len(vec)}, expected rank {rank}")
        if not all(isinstance(c, int) for c in vec):
            raise InputError(f"weights[{k}]: coordinates must be integers")
        if mult < 1:
            raise InputError(f"weights[{k}]: multiplicity must be positive")
        pairs.append((tuple(vec), mult))
    rep = symmetric_rep(tuple(blocks), pairs)
    if not check_symmetric(rep):
        raise InputError("weight multiset is not symmetric: some beta and -beta differ in multiplicity")
    delta_raw = raw.get("delta")
    if delta_raw is None:
        delta = check_delta(rep.group, None)
    else:
        if not isinstance(delta_raw, list) or len(delta_raw) != rank:
            raise InputError(f"'delta' must be a list of {rank} rationals")
        delta = check_delta(rep.group, tuple(parse_rational(d) for d in delta_raw))
    bound = raw.get("bound", 2)
    if not isinstance(bound, int) or bound < 1:
        raise InputError("'bound' must be a positive integer")
    degree = raw.get("degree", 6)
    if not isinstance(degree, int) or degree < 0:
        raise InputError("'degree' must be a nonnegative integer")
    mode = raw.get("mode", "fixed")
    if mode not in ("fixed", "levi"):
        raise InputError("'mode' must be 'fixed' or 'levi'")
    assume = raw.get("assume", {})
    if not isinstance(assume, dict):
        raise InputError("'assume' must be an object")
    return ProblemSpec(rep=rep, delta=delta, bound=bound, degree=degree, mode=mode, assume=dict(assume))
