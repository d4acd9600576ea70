"""Composition-error channel models and a reproducible trial harness.

An error replaces one multiset element with a different composition of the
same length.  The asymmetric model additionally never corrupts both of the
reciprocal levels l and n+1-l; the symmetric model has no placement rule.
All randomness flows through seeded random.Random instances, with a
per-trial derived seed, so reports are bit-identical across runs.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from .compositions import CompositionMultiset, compose_all


@dataclass(frozen=True)
class ErrorModel:
    kind: str  # "asymmetric" | "symmetric"
    t: int
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("asymmetric", "symmetric"):
            raise ValueError(f"unknown channel kind {self.kind!r}")
        if self.t < 0:
            raise ValueError("t must be >= 0")


def corrupt(c: CompositionMultiset, model: ErrorModel, rng=None, adversarial=False):
    """Apply exactly model.t replacements; returns (corrupted copy, log).

    The log lists (level, removed weight, added weight) per error.  In
    adversarial mode the replacement maximizes the weight change instead of
    being uniform.
    """
    rng = rng if rng is not None else random.Random(model.seed)
    n = c.n
    out = c.copy()
    chosen: list[int] = []
    pool = list(range(1, n + 1))
    rng.shuffle(pool)
    for level in pool:
        if len(chosen) == model.t:
            break
        if model.kind == "asymmetric" and (n + 1 - level) in chosen:
            continue
        chosen.append(level)
    if len(chosen) < model.t:
        raise ValueError("not enough levels for the requested error count")
    log = []
    for level in sorted(chosen):
        old = rng.choice(sorted(out.levels[level].elements()))
        others = [w for w in range(level + 1) if w != old]
        if adversarial:
            new = max(others, key=lambda w: abs(w - old))
        else:
            new = rng.choice(others)
        out.replace(level, old, new)
        log.append((level, old, new))
    return out, log


@dataclass
class TrialReport:
    scheme: str
    params: dict
    trials: int
    successes: int
    failures: dict = field(default_factory=dict)  # cause -> count
    mean_backtracks: float = 0.0
    wall_seconds: float = 0.0
    seed: int = 0

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 1.0

    def to_json(self) -> str:
        # wall_seconds is informational only and excluded so that reports are
        # bit-identical across same-seed runs
        d = dict(self.__dict__)
        del d["wall_seconds"]
        d["success_rate"] = self.success_rate
        return json.dumps(d, sort_keys=True)

    def csv_header(self) -> str:
        return "scheme,params,trials,successes,success_rate,mean_backtracks,seed"

    def to_csv_row(self) -> str:
        pstr = ";".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return (f"{self.scheme},{pstr},{self.trials},{self.successes},"
                f"{self.success_rate},{self.mean_backtracks},{self.seed}")


def _random_info(rng, k):
    return "".join(rng.choice("01") for _ in range(k))


def _pipeline(scheme, params):
    """Returns (encode, compose, decode) closures.

    compose maps the codeword string to the multiset view the channel
    corrupts; decode returns (info, backtracks).  sym-poly composes into a
    delta observation so that long codewords never materialize the full
    quadratic multiset.
    """
    k = params["k"]
    t = params.get("t", 0)
    if scheme == "recon":
        from .backtrack import reconstruct_unique
        from .catalan import sr_encode

        def enc(info):
            return sr_encode(info, 0)

        def dec(c):
            from .catalan import sr_decode
            s, stats = reconstruct_unique(c)
            return sr_decode(s, k, 0), stats.backtracks
        return enc, compose_all, dec
    if scheme == "asym1":
        from .asym import s1_decode, s1_encode
        return ((lambda info: s1_encode(info)), compose_all,
                (lambda c: (s1_decode(c, k), 0)))
    if scheme == "asym-t":
        from .asym import st_decode, st_encode
        return ((lambda info: st_encode(info, t)), compose_all,
                (lambda c: (st_decode(c, k, t), 0)))
    if scheme == "sym-poly":
        from .sym import DeltaObservation, etn_decode_info, etn_encode_info
        return ((lambda info: etn_encode_info(info, t)), DeltaObservation,
                (lambda c: (etn_decode_info(c, k, t), 0)))
    if scheme == "sym-catalan":
        from .sym import catalan_code_decode_bruteforce, catalan_code_encode, \
            catalan_code_params, catalan_code_strip
        n = catalan_code_params(k, t)
        return ((lambda info: catalan_code_encode(info, t, n)), compose_all,
                (lambda c: (catalan_code_strip(
                    catalan_code_decode_bruteforce(c, t), k, t), 0)))
    raise ValueError(f"unknown scheme {scheme!r}")


def run_trials(scheme: str, params: dict, model: ErrorModel, trials: int,
               seed: int = 0) -> TrialReport:
    enc, compose, dec = _pipeline(scheme, params)
    k = params["k"]
    successes = 0
    failures: dict[str, int] = {}
    total_backtracks = 0
    start = time.perf_counter()
    for i in range(trials):
        rng = random.Random(f"{seed}:{i}")
        info = _random_info(rng, k)
        try:
            s = enc(info)
            c, _ = corrupt(compose(s), model, rng)
            got, backtracks = dec(c)
            total_backtracks += backtracks
            if got == info:
                successes += 1
            else:
                failures["wrong-output"] = failures.get("wrong-output", 0) + 1
        except Exception as e:  # noqa: BLE001 - counted, not raised
            cause = type(e).__name__
            failures[cause] = failures.get(cause, 0) + 1
    elapsed = time.perf_counter() - start
    return TrialReport(
        scheme=scheme, params=dict(sorted(params.items())), trials=trials,
        successes=successes, failures=failures,
        mean_backtracks=total_backtracks / trials if trials else 0.0,
        wall_seconds=round(elapsed, 3), seed=seed)
