"""Command-line front end.

Subcommands take a JSON model config (keys: q, transition, epsilon;
optional: n_terms, log_base) and emit tables or CSV on stdout. Diagnostics
go to stderr only, controlled by the ENTRATE_LOG environment variable
(quiet | info | debug). Exit codes: 0 success, 1 validation failure,
2 numerical failure, 3 I/O or config failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from dataclasses import dataclass
from typing import List, Optional

from .algebraic import build_symbol_matrices, stationary_distribution
from .entropy import entropy_rate
from .errors import (
    BlockTooLarge,
    ConfigError,
    NumericalError,
    ParseError,
    SchemaError,
    ValidationError,
)
from .model import check_condition1, validate_model
from .oracle import block_entropy
from .support import compute_support

log = logging.getLogger("entrate")

_CONFIG_KEYS = {"q", "transition", "epsilon", "n_terms", "log_base"}

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NUMERICAL = 2
EXIT_IO = 3


@dataclass
class ModelConfig:
    q: int
    transition: list
    epsilon: list
    n_terms: int = 100
    log_base: float = 2.0


def _parse_log_base(raw) -> float:
    if isinstance(raw, str) and raw.strip().lower() == "e":
        return math.e
    try:
        base = float(raw)
    except (TypeError, ValueError):
        raise SchemaError(f"log_base must be a number or 'e', got {raw!r}")
    if base <= 1.0:
        raise SchemaError(f"log_base must exceed 1, got {base}")
    return base


def parse_config(path: str) -> ModelConfig:
    """Load and schema-check a model config file (validation happens later)."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(
                f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: "
                f"{exc.msg}"
            ) from exc

    if not isinstance(raw, dict):
        raise SchemaError(f"{path}: top level must be an object")
    unknown = set(raw) - _CONFIG_KEYS
    if unknown:
        raise SchemaError(f"{path}: unknown field(s) {sorted(unknown)}")
    for key in ("q", "transition", "epsilon"):
        if key not in raw:
            raise SchemaError(f"{path}: missing required field '{key}'")

    q = raw["q"]
    if not isinstance(q, int) or q < 2:
        raise SchemaError(f"{path}: field 'q' must be an integer >= 2")
    transition = raw["transition"]
    if (
        not isinstance(transition, list)
        or len(transition) != q
        or any(not isinstance(row, list) or len(row) != q for row in transition)
    ):
        raise SchemaError(f"{path}: field 'transition' must be a {q}x{q} array")
    epsilon = raw["epsilon"]
    if not isinstance(epsilon, list) or len(epsilon) != q - 1:
        raise SchemaError(f"{path}: field 'epsilon' must have length q-1={q - 1}")

    cfg = ModelConfig(q=q, transition=transition, epsilon=epsilon)
    if "n_terms" in raw:
        if not isinstance(raw["n_terms"], int) or raw["n_terms"] < 0:
            raise SchemaError(f"{path}: field 'n_terms' must be an integer >= 0")
        cfg.n_terms = raw["n_terms"]
    if "log_base" in raw:
        cfg.log_base = _parse_log_base(raw["log_base"])
    return cfg


def _fmt(x: Optional[float]) -> str:
    return "" if x is None else f"{x:.14g}"


def _cmd_entropy(cfg: ModelConfig, args) -> int:
    model = validate_model(cfg.transition, cfg.epsilon)
    n = args.n_terms if args.n_terms is not None else cfg.n_terms
    base = _parse_log_base(args.log_base) if args.log_base else cfg.log_base
    sol = entropy_rate(model, N=n, log_base=base)
    rec = sol.to_record()
    width = max(len(k) for k in rec)
    for key in ("H_N", "err_bound", "gamma_hat", "r", "A_dagger_norm"):
        print(f"{key:<{width}}  {_fmt(rec[key])}")
    for j, value in enumerate(rec["phi_hat"], start=1):
        print(f"{f'phi_{j}':<{width}}  {_fmt(value)}")
    print(json.dumps(rec))
    return EXIT_OK


def _cmd_sweep(cfg: ModelConfig, args) -> int:
    model = validate_model(cfg.transition, cfg.epsilon)
    base = _parse_log_base(args.log_base) if args.log_base else cfg.log_base
    print("N,H_N,err_bound")
    for n in range(args.from_n, args.to_n + 1, args.step):
        sol = entropy_rate(model, N=n, log_base=base)
        print(f"{n},{_fmt(sol.H_N)},{_fmt(sol.err_bound)}")
    return EXIT_OK


def _cmd_support(cfg: ModelConfig, args) -> int:
    model = validate_model(cfg.transition, cfg.epsilon)
    n = args.n_terms if args.n_terms is not None else cfg.n_terms
    sym = build_symbol_matrices(model)
    atlas = compute_support(sym, n)
    sys.stdout.write(atlas.to_csv())
    return EXIT_OK


def _cmd_oracle(cfg: ModelConfig, args) -> int:
    model = validate_model(cfg.transition, cfg.epsilon)
    base = _parse_log_base(args.log_base) if args.log_base else cfg.log_base
    sym = build_symbol_matrices(model)
    tau = stationary_distribution(model.transition)
    print("k,S_k,rate_avg,rate_cond")
    prev = 0.0
    for k in range(1, args.block_len + 1):
        s_k = block_entropy(sym, tau, k, base)
        print(f"{k},{_fmt(s_k)},{_fmt(s_k / k)},{_fmt(s_k - prev)}")
        prev = s_k
    return EXIT_OK


def _cmd_validate(cfg: ModelConfig, args) -> int:
    model = validate_model(cfg.transition, cfg.epsilon)
    report = check_condition1(model)
    print(f"q          {model.q}")
    print(f"p          {_fmt(model.p)}")
    print(f"P          {_fmt(model.P)}")
    print(f"eps_max    {_fmt(model.eps_max)}")
    print(f"c_witness  {_fmt(report.c_witness)}")
    print(f"product_check_passed  {report.product_check_passed}")
    print(f"perron_simple         {report.perron_simple}")
    print(f"irreducible           {report.irreducible}")
    return EXIT_OK if report.all_passed() else EXIT_VALIDATION


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entrate",
        description="Entropy rate of a hidden Markov process with an "
        "unambiguous noise symbol.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ent = sub.add_parser("entropy", help="truncated-series entropy rate")
    p_ent.add_argument("config")
    p_ent.add_argument("--n-terms", type=int, default=None)
    p_ent.add_argument("--log-base", default=None, help="2, e, or a number > 1")
    p_ent.set_defaults(func=_cmd_entropy)

    p_sweep = sub.add_parser("sweep", help="CSV of H_N over a range of depths")
    p_sweep.add_argument("config")
    p_sweep.add_argument("--from", dest="from_n", type=int, required=True)
    p_sweep.add_argument("--to", dest="to_n", type=int, required=True)
    p_sweep.add_argument("--step", type=int, default=10)
    p_sweep.add_argument("--log-base", default=None)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_sup = sub.add_parser("support", help="CSV of support-atlas points")
    p_sup.add_argument("config")
    p_sup.add_argument("--n-terms", type=int, default=None)
    p_sup.set_defaults(func=_cmd_support)

    p_or = sub.add_parser("oracle", help="exact block entropies by enumeration")
    p_or.add_argument("config")
    p_or.add_argument("--block-len", type=int, required=True)
    p_or.add_argument("--log-base", default=None)
    p_or.set_defaults(func=_cmd_oracle)

    p_val = sub.add_parser("validate", help="model assumption checks")
    p_val.add_argument("config")
    p_val.set_defaults(func=_cmd_validate)

    return parser


def _setup_logging() -> None:
    level = {"quiet": logging.WARNING, "info": logging.INFO, "debug": logging.DEBUG}
    name = os.environ.get("ENTRATE_LOG", "quiet").lower()
    logging.basicConfig(stream=sys.stderr, level=level.get(name, logging.WARNING))


def main(argv: Optional[List[str]] = None) -> int:
    _setup_logging()
    args = _build_parser().parse_args(argv)
    try:
        cfg = parse_config(args.config)
        return args.func(cfg, args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (NumericalError, BlockTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
